//! Exact integer and rational arithmetic, lattice normal forms and exact
//! linear feasibility.

mod fm;
mod linear;
mod matrix;

pub use fm::{fm_feasible, Inequality, Relation};
pub use linear::{nullspace, rank, solve_linear, Domain};
pub use matrix::{hermite_normal_form, HermiteForm, IntMatrix};

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational with unbounded numerator and denominator, always reduced
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

pub fn ceil_to_i64(value: &Rational) -> Result<i64> {
    value.ceil().to_integer().to_i64().ok_or(Error::Overflow("ceiling"))
}

pub fn floor_to_i64(value: &Rational) -> Result<i64> {
    value.floor().to_integer().to_i64().ok_or(Error::Overflow("floor"))
}

pub fn to_rational_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[i64], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + y * BigInt::from(*x))
}

/// Divides `v` by the gcd of its entries; orientation is preserved.
pub fn primitive_vector(v: &[i64]) -> Result<Vec<i64>> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|&x| x / g).collect())
}

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same orientation.
pub fn primitive_from_rational(v: &[Rational]) -> Result<Vec<i64>> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    scaled
        .iter()
        .map(|x| (x / &g).to_i64().ok_or(Error::Overflow("primitive vector")))
        .collect()
}

/// Least common multiple of the denominators, as a positive integer.
pub fn common_denominator(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_vector(&[6, -2]).unwrap(), vec![3, -1]);
        assert_eq!(primitive_vector(&[3, -1]).unwrap(), vec![3, -1]);
        assert_eq!(primitive_vector(&[0, -4, 8]).unwrap(), vec![0, -1, 2]);
        assert_eq!(primitive_vector(&[0, 0]), Err(Error::ZeroVector));
        assert_eq!(
            Error::ZeroVector.to_string(),
            "zero vector has no primitive form"
        );
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("4/6"), Some(rat(2, 3)));
        assert_eq!(parse_rational("-3"), Some(int(-3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
        assert_eq!(rat(-4, 6).to_string(), "-2/3");
    }

    #[test]
    fn subsets() {
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(6, 3).len(), 20);
    }

    #[test]
    fn primitive_of_rationals() {
        let v = vec![rat(1, 2), rat(-3, 4)];
        assert_eq!(primitive_from_rational(&v).unwrap(), vec![2, -3]);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn primitive_is_idempotent(v in proptest::collection::vec(-50i64..=50, 1..5)) {
            prop_assume!(v.iter().any(|&x| x != 0));
            let p = primitive_vector(&v).unwrap();
            prop_assert_eq!(primitive_vector(&p).unwrap(), p.clone());
            let g = p.iter().fold(0i64, |g, &x| g.gcd(&x));
            prop_assert_eq!(g, 1);
        }

        #[test]
        fn field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert!(a.denom() > &BigInt::zero());
            if !b.is_zero() {
                prop_assert_eq!((&a / &b) * &b, a.clone());
            }
        }
    }
}
