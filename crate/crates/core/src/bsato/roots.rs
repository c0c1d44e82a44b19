//! Rational roots of univariate polynomials by the rational root theorem.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use crate::exactnum::Rational;

/// Positive divisors of a nonzero integer, ascending, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn integer_coefficients(p: &UniPoly) -> Vec<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * &den).to_integer()).collect()
}

/// All rational roots of `p` with multiplicity, ascending, together with the
/// cofactor `q` such that `p = q · Π (s − ρ)^m` exactly.
pub fn rational_roots(p: &UniPoly) -> (Vec<(Rational, u32)>, UniPoly) {
    assert!(!p.is_zero(), "zero polynomial has no finite root set");
    let mut rest = p.clone();
    let mut roots: Vec<(Rational, u32)> = Vec::new();

    let mut zero_mult = 0;
    while rest.degree().unwrap_or(0) > 0 && rest.coeffs()[0].is_zero() {
        rest = UniPoly::from_coeffs(rest.coeffs()[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }

    if rest.degree().unwrap_or(0) > 0 {
        let ints = integer_coefficients(&rest);
        let constant = ints[0].clone();
        let leading = ints.last().unwrap().clone();
        let numerators = divisors(&constant);
        let denominators = divisors(&leading);
        let mut candidates: Vec<Rational> = Vec::new();
        for a in &numerators {
            for b in &denominators {
                let r = Rational::new(a.clone(), b.clone());
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let factor = UniPoly::linear_factor(&r);
            let mut mult = 0;
            loop {
                let (q, m) = rest.div_rem(&factor);
                if !m.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }
    roots.sort();
    (roots, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use alloc::vec;
    use proptest::prelude::*;

    fn rebuild(roots: &[(Rational, u32)], rest: &UniPoly) -> UniPoly {
        &UniPoly::from_roots(roots) * rest
    }

    #[test]
    fn paper_style_factorization() {
        let p = UniPoly::from_roots(&[(int(-1), 2), (rat(-2, 3), 1)]);
        let (roots, rest) = rational_roots(&p);
        assert_eq!(roots, vec![(int(-1), 2), (rat(-2, 3), 1)]);
        assert_eq!(rest, UniPoly::one());

        let b = UniPoly::from_roots(&[(int(-1), 2), (rat(-2, 3), 1), (rat(-4, 3), 1)]);
        let (roots, rest) = rational_roots(&b);
        assert_eq!(roots, vec![(rat(-4, 3), 1), (int(-1), 2), (rat(-2, 3), 1)]);
        assert_eq!(rest, UniPoly::one());
    }

    #[test]
    fn irreducible_quadratic() {
        let p = UniPoly::from_i64(&[1, 0, 1]);
        let (roots, rest) = rational_roots(&p);
        assert!(roots.is_empty());
        assert_eq!(rest, p);
    }

    #[test]
    fn zero_root_and_scaled() {
        // 9·s²·(s − 1/3)(s² + 2)
        let p = &(&UniPoly::from_roots(&[(int(0), 2), (rat(1, 3), 1)]) * &UniPoly::from_i64(&[2, 0, 1]))
            * &UniPoly::constant(int(9));
        let (roots, rest) = rational_roots(&p);
        assert_eq!(roots, vec![(int(0), 2), (rat(1, 3), 1)]);
        assert_eq!(rest, UniPoly::from_i64(&[18, 0, 9]));
        assert_eq!(rebuild(&roots, &rest), p);
    }

    #[test]
    fn constants() {
        let (roots, rest) = rational_roots(&UniPoly::constant(rat(5, 2)));
        assert!(roots.is_empty());
        assert_eq!(rest, UniPoly::constant(rat(5, 2)));
    }

    #[test]
    fn divisor_lists() {
        let d: Vec<i64> = divisors(&BigInt::from(-12)).iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        let d: Vec<i64> = divisors(&BigInt::from(9)).iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(d, vec![1, 3, 9]);
    }

    proptest! {
        #[test]
        fn reconstruction(
            roots in proptest::collection::vec(((-6i64..=6), (1i64..=4), 1u32..=3), 0..4),
            extra in proptest::collection::vec(-5i64..=5, 0..3),
            scale in 1i64..=7,
        ) {
            let planted: Vec<(Rational, u32)> = roots.iter().map(|&(n, d, m)| (rat(n, d), m)).collect();
            let mut p = &UniPoly::from_roots(&planted) * &UniPoly::constant(rat(scale, 3));
            // an irreducible-over-Q factor s² + k with k > 0 keeps the remainder honest
            if let Some(&k) = extra.first() {
                p = &p * &UniPoly::from_i64(&[k.abs() + 1, 0, 1]);
            }
            let (found, rest) = rational_roots(&p);
            prop_assert_eq!(rebuild(&found, &rest), p);
            for (r, _) in &found {
                prop_assert!(planted.iter().any(|(q, _)| q == r));
            }
            for (q, _) in &planted {
                let total: u32 = planted.iter().filter(|(x, _)| x == q).map(|(_, m)| m).sum();
                prop_assert!(found.iter().any(|(r, m)| r == q && *m == total));
            }
        }
    }
}
