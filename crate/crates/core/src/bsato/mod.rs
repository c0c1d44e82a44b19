//! Bernstein–Sato polynomials of monomial ideals.
//!
//! For generators `y^{β_1}, …, y^{β_r}` the b-function is the monic generator
//! of `(⟨g_c : Σc_i = 1⟩ + ⟨t − Σ s_i⟩) ∩ Q[t]`. The family `g_c` is
//! infinite; it is truncated to boxes `|c_i| ≤ B` that grow until two
//! consecutive boxes agree and the largest root matches `−lct`.

mod groebner;
mod poly;
mod roots;

pub use groebner::{
    groebner_basis, is_groebner_basis, leading_monomial, normal_form, s_polynomial, MonomialOrder,
};
pub use poly::{Exponent, MultiPoly, UniPoly};
pub use roots::rational_roots;

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactnum::{dot_i64, int, Rational};
use crate::multiplier;
use crate::toric::{MonomialIdeal, SemigroupData};
use crate::{Error, Result};

/// `E (E − 1) ⋯ (E − m + 1) / m!`.
pub fn binom_poly(e: &MultiPoly, m: u32) -> MultiPoly {
    let n = e.nvars();
    let mut out = MultiPoly::one(n);
    let mut factorial = BigInt::one();
    for j in 0..m {
        out = &out * &(e - &MultiPoly::constant(n, int(i64::from(j))));
        factorial *= j + 1;
    }
    out.scale(&Rational::new(BigInt::one(), factorial))
}

fn check_sum(c: &[i64], r: usize) -> Result<()> {
    if c.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            found: c.len(),
        });
    }
    if c.iter().sum::<i64>() != 1 {
        return Err(Error::CoordinateSum);
    }
    Ok(())
}

fn to_u32(x: i64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Overflow("binomial order"))
}

fn negative_part(c: &[i64]) -> Result<MultiPoly> {
    let r = c.len();
    let mut out = MultiPoly::one(r);
    for (i, &ci) in c.iter().enumerate() {
        if ci < 0 {
            out = &out * &binom_poly(&MultiPoly::var(r, i), to_u32(-ci)?);
        }
    }
    Ok(out)
}

/// `g_c` for the monomials `y^{β_i}` of the semigroup ring, through the
/// support functions: `Π_{c_i<0} binom(s_i, −c_i) ·
/// Π_{σ: F_σ(ℓ_β(c))>0} binom(F_σ(ℓ_β(s)) + F_σ(ℓ_β(c)), F_σ(ℓ_β(c)))`.
pub fn build_generator(s: &SemigroupData, betas: &[Vec<i64>], c: &[i64]) -> Result<MultiPoly> {
    let r = betas.len();
    check_sum(c, r)?;
    let d = s.dim();
    for b in betas {
        if b.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: b.len(),
            });
        }
    }
    let ell_c: Vec<i64> = (0..d).map(|k| betas.iter().zip(c).map(|(b, ci)| ci * b[k]).sum()).collect();
    let mut out = negative_part(c)?;
    for f in s.facets() {
        let value = dot_i64(f, &ell_c);
        if value > 0 {
            let coeffs: Vec<Rational> = betas.iter().map(|b| int(dot_i64(f, b))).collect();
            let form = MultiPoly::linear(&coeffs, int(value));
            out = &out * &binom_poly(&form, to_u32(value)?);
        }
    }
    Ok(out)
}

/// `g_c` for monomials `x^{α_i}` of a polynomial ring: `Π_{c_i<0}
/// binom(s_i, −c_i) · Π_{j: ℓ_α(c)_j>0} binom(ℓ_α(s)_j + ℓ_α(c)_j, ℓ_α(c)_j)`.
pub fn monomial_generator(alphas: &[Vec<i64>], c: &[i64]) -> Result<MultiPoly> {
    let r = alphas.len();
    check_sum(c, r)?;
    let n = alphas.first().map_or(0, Vec::len);
    let mut out = negative_part(c)?;
    for j in 0..n {
        let value: i64 = alphas.iter().zip(c).map(|(a, ci)| ci * a[j]).sum();
        if value > 0 {
            let coeffs: Vec<Rational> = alphas.iter().map(|a| int(a[j])).collect();
            out = &out * &binom_poly(&MultiPoly::linear(&coeffs, int(value)), to_u32(value)?);
        }
    }
    Ok(out)
}

/// All `c ∈ Z^r` with `Σ c_i = 1` and `|c_i| ≤ bound`, lexicographically.
pub fn box_vectors(r: usize, bound: u32) -> Vec<Vec<i64>> {
    let b = i64::from(bound);
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    let mut c = vec![-b; r - 1];
    loop {
        let last = 1 - c.iter().sum::<i64>();
        if last.abs() <= b {
            let mut v = c.clone();
            v.push(last);
            out.push(v);
        }
        let Some(k) = (0..r - 1).rev().find(|&k| c[k] < b) else {
            return out;
        };
        c[k] += 1;
        for j in k + 1..r - 1 {
            c[j] = -b;
        }
    }
}

/// The generators with `t − Σ s_i` adjoined (t last) and their reduced
/// Gröbner basis under the block order eliminating the `s`-variables.
pub fn elimination_basis(gens: &[MultiPoly]) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
    let r = gens.first().map_or(0, MultiPoly::nvars);
    let mut inputs: Vec<MultiPoly> = gens.iter().map(|g| g.extend_vars(1)).collect();
    let mut link = MultiPoly::var(r + 1, r);
    for i in 0..r {
        link = &link - &MultiPoly::var(r + 1, i);
    }
    inputs.push(link);
    let basis = groebner_basis(&inputs, MonomialOrder::BlockGrevLex { split: r });
    (inputs, basis)
}

/// Monic generator of `(⟨gens⟩ + ⟨t − Σ s_i⟩) ∩ Q[t]`, or `None` when that
/// intersection is zero.
pub fn eliminate_minimal_univariate(gens: &[MultiPoly]) -> Option<UniPoly> {
    let r = gens.first().map_or(0, MultiPoly::nvars);
    let (_, basis) = elimination_basis(gens);
    basis
        .iter()
        .find(|g| g.terms().all(|(e, _)| e[..r].iter().all(|&x| x == 0)))
        .and_then(|g| g.to_univariate(r))
        .map(|p| p.monic())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFunctionConfig {
    /// Increasing box bounds tried first.
    pub schedule: Vec<u32>,
    /// Largest box bound ever tried.
    pub cap: u32,
}

impl Default for BFunctionConfig {
    fn default() -> Self {
        Self {
            schedule: vec![1, 2, 3, 4],
            cap: 6,
        }
    }
}

impl BFunctionConfig {
    fn bounds(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.schedule.iter().copied().filter(|&b| b <= self.cap).collect();
        out.sort_unstable();
        out.dedup();
        let mut next = out.last().map_or(1, |b| b + 1);
        while next <= self.cap {
            out.push(next);
            next += 1;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFunctionResult {
    /// Monic, in `s`.
    pub b: UniPoly,
    /// Rational roots of `b`, ascending, with multiplicity.
    pub roots: Vec<(Rational, u32)>,
    pub unfactored_remainder: UniPoly,
    pub box_used: u32,
    /// Two consecutive boxes agreed and the largest root is `−lct`.
    pub stabilized: bool,
    pub generator_count: usize,
    /// The candidate `p_B` for each box tried.
    pub history: Vec<(u32, Option<UniPoly>)>,
    pub lct: Rational,
    pub lct_agrees: bool,
}

/// The b-function of a monomial ideal from its minimal generators.
pub fn bfunction(s: &SemigroupData, ideal: &MonomialIdeal, config: &BFunctionConfig) -> Result<BFunctionResult> {
    bfunction_of_generators(s, ideal.generators(), config)
}

/// As [`bfunction`], for an arbitrary (possibly redundant) generating set.
pub fn bfunction_of_generators(
    s: &SemigroupData,
    betas: &[Vec<i64>],
    config: &BFunctionConfig,
) -> Result<BFunctionResult> {
    if betas.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    for b in betas {
        if b.len() != s.dim() {
            return Err(Error::DimensionMismatch {
                expected: s.dim(),
                found: b.len(),
            });
        }
        if !s.contains(b) {
            return Err(Error::NotInSemigroup { exponent: b.clone() });
        }
    }
    let lct = multiplier::lct_of_generators(s, betas)?;
    let r = betas.len();

    let mut history: Vec<(u32, Option<UniPoly>)> = Vec::new();
    let mut last: Option<(u32, UniPoly, usize)> = None;
    let mut certified = false;
    for bound in config.bounds() {
        let gens = box_vectors(r, bound)
            .iter()
            .map(|c| build_generator(s, betas, c))
            .collect::<Result<Vec<_>>>()?;
        let p = eliminate_minimal_univariate(&gens);
        if let (Some(p), Some((_, prev, _))) = (&p, &last) {
            if !p.divides(prev) {
                return Err(Error::Invariant(
                    "b-function candidate does not divide the previous one".to_string(),
                ));
            }
        }
        let agrees = matches!((&p, &last), (Some(p), Some((_, prev, _))) if p == prev);
        history.push((bound, p.clone()));
        if let Some(p) = p {
            last = Some((bound, p, gens.len()));
        }
        if agrees {
            let (_, p, _) = last.as_ref().unwrap();
            if largest_root_is(p, &lct) {
                certified = true;
                break;
            }
        }
    }
    let (box_used, b, generator_count) = last.ok_or(Error::BoxCapExhausted { cap: config.cap })?;
    let (roots, unfactored_remainder) = rational_roots(&b);
    let lct_agrees = roots.last().is_some_and(|(r, _)| *r == -lct.clone());
    Ok(BFunctionResult {
        b,
        roots,
        unfactored_remainder,
        box_used,
        stabilized: certified,
        generator_count,
        history,
        lct,
        lct_agrees,
    })
}

fn largest_root_is(p: &UniPoly, lct: &Rational) -> bool {
    let (roots, _) = rational_roots(p);
    roots.last().is_some_and(|(r, _)| *r == -lct.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn paper() -> SemigroupData {
        SemigroupData::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap()
    }

    fn lin(coeffs: &[i64], c: i64) -> MultiPoly {
        let coeffs: Vec<Rational> = coeffs.iter().map(|&x| int(x)).collect();
        MultiPoly::linear(&coeffs, int(c))
    }

    #[test]
    fn binomials() {
        let s1 = MultiPoly::var(2, 0);
        assert_eq!(
            binom_poly(&s1, 2),
            (&(&s1 * &s1) - &s1).scale(&rat(1, 2))
        );
        assert_eq!(binom_poly(&lin(&[3, 1], 7), 0), MultiPoly::one(2));
        let e = lin(&[2, 1], 2);
        assert_eq!(binom_poly(&e, 2), (&e * &lin(&[2, 1], 1)).scale(&rat(1, 2)));
    }

    #[test]
    fn generator_examples() {
        let s = paper();
        let betas = vec![vec![1, 1], vec![1, 2]];
        let g = build_generator(&s, &betas, &[1, 0]).unwrap();
        let expected = &binom_poly(&lin(&[2, 1], 2), 2) * &lin(&[1, 2], 1);
        assert_eq!(g, expected);
        let g = build_generator(&s, &betas, &[2, -1]).unwrap();
        let expected = &MultiPoly::var(2, 1) * &binom_poly(&lin(&[2, 1], 3), 3);
        assert_eq!(g, expected);
        assert_eq!(build_generator(&s, &betas, &[1, 1]), Err(Error::CoordinateSum));
    }

    #[test]
    fn single_generator_closed_form() {
        let line = SemigroupData::from_rows(&[vec![1]]).unwrap();
        for a in 1..=4i64 {
            let g = build_generator(&line, &[vec![a]], &[1]).unwrap();
            let mut expected = MultiPoly::one(1);
            for j in 1..=a {
                expected = &expected * &lin(&[a], j);
            }
            let fact: i64 = (1..=a).product();
            assert_eq!(g, expected.scale(&rat(1, fact)));
        }
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(box_vectors(1, 3), vec![vec![1]]);
        assert_eq!(box_vectors(2, 1), vec![vec![0, 1], vec![1, 0]]);
        let three = box_vectors(3, 2);
        let brute: Vec<Vec<i64>> = (-2..=2)
            .flat_map(|a| (-2..=2).flat_map(move |b| (-2..=2).map(move |c| vec![a, b, c])))
            .filter(|v: &Vec<i64>| v.iter().sum::<i64>() == 1)
            .collect();
        assert_eq!(three, brute);
    }

    #[test]
    fn elimination_examples() {
        let s1 = MultiPoly::var(2, 0);
        let s2 = MultiPoly::var(2, 1);
        assert_eq!(
            eliminate_minimal_univariate(&[s1.clone(), s2.clone()]),
            Some(UniPoly::from_i64(&[0, 1]))
        );
        let one = MultiPoly::one(2);
        assert_eq!(
            eliminate_minimal_univariate(&[&s1 - &one, &s2 - &one.scale(&int(2))]),
            Some(UniPoly::from_i64(&[-3, 1]))
        );
        assert_eq!(eliminate_minimal_univariate(&[&s1 * &s2]), None);
    }

    #[test]
    fn paper_bfunction() {
        let s = paper();
        let i = MonomialIdeal::new(&s, &[vec![1, 1], vec![1, 2]]).unwrap();
        let r = bfunction(&s, &i, &BFunctionConfig::default()).unwrap();
        let expected = UniPoly::from_roots(&[(int(-1), 2), (rat(-2, 3), 1), (rat(-4, 3), 1)]);
        assert_eq!(r.b, expected);
        assert!(r.stabilized && r.lct_agrees);
        assert_eq!(r.lct, rat(2, 3));
        assert_eq!(r.roots, vec![(rat(-4, 3), 1), (int(-1), 2), (rat(-2, 3), 1)]);
        assert_eq!(r.unfactored_remainder, UniPoly::one());
        assert_eq!(r.history[0], (1, None));
        assert_eq!(r.box_used, 3);
    }

    #[test]
    fn principal_bfunctions() {
        let line = SemigroupData::from_rows(&[vec![1]]).unwrap();
        for a in 1..=3i64 {
            let i = MonomialIdeal::new(&line, &[vec![a]]).unwrap();
            let r = bfunction(&line, &i, &BFunctionConfig::default()).unwrap();
            let roots: Vec<(Rational, u32)> = (1..=a).map(|j| (rat(-j, a), 1)).collect();
            assert_eq!(r.b, UniPoly::from_roots(&roots));
            assert!(r.stabilized);
        }
    }

    #[test]
    fn maximal_ideal_of_the_plane() {
        let id = SemigroupData::identity(2).unwrap();
        let m = MonomialIdeal::new(&id, &[vec![1, 0], vec![0, 1]]).unwrap();
        let r = bfunction(&id, &m, &BFunctionConfig::default()).unwrap();
        assert_eq!(r.b, UniPoly::from_i64(&[2, 1]));
        assert!(r.stabilized);
    }

    #[test]
    fn short_schedule_reports_uncertified() {
        let s = paper();
        let i = MonomialIdeal::new(&s, &[vec![1, 1], vec![1, 2]]).unwrap();
        let cfg = BFunctionConfig {
            schedule: vec![1],
            cap: 1,
        };
        assert_eq!(bfunction(&s, &i, &cfg), Err(Error::BoxCapExhausted { cap: 1 }));
        let cfg = BFunctionConfig {
            schedule: vec![2],
            cap: 2,
        };
        let r = bfunction(&s, &i, &cfg).unwrap();
        assert!(!r.stabilized);
        assert!(r.lct_agrees);
    }

    #[test]
    fn config_bounds() {
        let cfg = BFunctionConfig {
            schedule: vec![3, 1, 9],
            cap: 5,
        };
        assert_eq!(cfg.bounds(), vec![1, 3, 4, 5]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn generators_agree_with_polynomial_ring(c0 in -4i64..=4, c1 in -4i64..=4) {
            prop_assume!((1 - c0 - c1).abs() <= 4);
            let s = paper();
            let betas = vec![vec![1, 1], vec![1, 2], vec![2, 3]];
            let alphas: Vec<Vec<i64>> = betas.iter().map(|b| s.f_map(b)).collect();
            let c = [c0, c1, 1 - c0 - c1];
            prop_assert_eq!(
                build_generator(&s, &betas, &c).unwrap(),
                monomial_generator(&alphas, &c).unwrap()
            );
        }
    }
}
