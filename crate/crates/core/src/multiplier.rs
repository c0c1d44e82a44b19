//! Multiplier ideals, log-canonical thresholds and jumping coefficients of
//! monomial ideals, computed through the transport map `F`.
//!
//! With `J = ⟨x^{F(β)}⟩` and `P_J` its Newton polyhedron in `R^𝓕`, the
//! multiplier ideal `𝒥(X, αI)` is spanned by the `y^v` with
//! `F(v) + e ∈ relint(α P_J)`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bsato::{self, BFunctionConfig, BFunctionResult, MultiPoly};
use crate::exactnum::{self, dot_i64, int, to_rational_vec, Rational};
use crate::polyhedra::{newton_polyhedron, orthant_rays, Mode, NewtonPolyhedron, Threshold};
use crate::toric::{minimalize, MonomialIdeal, SemigroupData};
use crate::{Error, Result};

fn check_exponents(s: &SemigroupData, exponents: &[Vec<i64>]) -> Result<()> {
    for v in exponents {
        if v.len() != s.dim() {
            return Err(Error::DimensionMismatch {
                expected: s.dim(),
                found: v.len(),
            });
        }
        if !s.contains(v) {
            return Err(Error::NotInSemigroup { exponent: v.clone() });
        }
    }
    Ok(())
}

/// `F`-images of monomial exponents, minimalized in `N^𝓕` and sorted.
pub fn transport_monomials(s: &SemigroupData, exponents: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    check_exponents(s, exponents)?;
    let minimal = minimalize(s, exponents);
    let mut out: Vec<Vec<i64>> = minimal.iter().map(|v| s.f_map(v)).collect();
    out.sort();
    Ok(out)
}

/// `Σ λ_j y^{β_j} ↦ Σ λ_j x^{F(β_j)}` in a polynomial ring with one variable
/// per facet.
pub fn transport_polynomial(s: &SemigroupData, terms: &[(Rational, Vec<i64>)]) -> Result<MultiPoly> {
    let exponents: Vec<Vec<i64>> = terms.iter().map(|t| t.1.clone()).collect();
    check_exponents(s, &exponents)?;
    let n = s.num_facets();
    let mut out = MultiPoly::zero(n);
    for (c, v) in terms {
        let e = s
            .f_map(v)
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::Overflow("transported exponent")))
            .collect::<Result<Vec<u32>>>()?;
        out.add_term(e, c.clone());
    }
    Ok(out)
}

/// Newton polyhedron `P_J` of the transported generators, with orthant
/// recession cone.
pub fn transported_polyhedron(s: &SemigroupData, exponents: &[Vec<i64>]) -> Result<NewtonPolyhedron> {
    if exponents.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let points = transport_monomials(s, exponents)?;
    newton_polyhedron(&points, &orthant_rays(s.num_facets()))
}

/// Whether `y^v` lies in the multiplier ideal described by `p_j`.
pub fn in_multiplier_ideal(s: &SemigroupData, p_j: &NewtonPolyhedron, v: &[i64], alpha: &Rational, mode: Mode) -> bool {
    if !s.contains(v) {
        return false;
    }
    let q: Vec<i64> = s.f_map(v).iter().map(|x| x + 1).collect();
    p_j.membership_i64(&q, alpha, mode)
}

/// `ξ(e)` on `P_J`, the log-canonical threshold.
pub fn lct(s: &SemigroupData, ideal: &MonomialIdeal) -> Result<Rational> {
    lct_of_generators(s, ideal.generators())
}

pub fn lct_of_generators(s: &SemigroupData, exponents: &[Vec<i64>]) -> Result<Rational> {
    let p = transported_polyhedron(s, exponents)?;
    threshold_of_e(s, &p)
}

fn threshold_of_e(s: &SemigroupData, p: &NewtonPolyhedron) -> Result<Rational> {
    match p.point_threshold(&to_rational_vec(&s.e())) {
        Threshold::Finite(t) => Ok(t),
        Threshold::Infinite => Err(Error::UnitIdeal),
        Threshold::Undefined => Err(Error::Invariant("e outside every dilation of P_J".to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierIdealResult {
    pub alpha: Rational,
    pub mode: Mode,
    /// Minimal generators; `[0]` for the unit ideal.
    pub generators: Vec<Vec<i64>>,
    /// Support bounds of the larger enumeration box.
    pub box_used: Vec<i64>,
    /// Both enumeration boxes gave the same minimal generators.
    pub stabilized: bool,
}

fn enumerate_ideal(
    s: &SemigroupData,
    alpha: &Rational,
    mode: Mode,
    base: Vec<i64>,
    keep: impl Fn(&[i64]) -> bool,
) -> Result<MultiplierIdealResult> {
    let first = minimalize(
        s,
        &s.points_with_bounded_support(&base)?
            .into_iter()
            .filter(|v| keep(v))
            .collect::<Vec<_>>(),
    );
    let doubled: Vec<i64> = base.iter().map(|b| 2 * b).collect();
    let second = minimalize(
        s,
        &s.points_with_bounded_support(&doubled)?
            .into_iter()
            .filter(|v| keep(v))
            .collect::<Vec<_>>(),
    );
    Ok(MultiplierIdealResult {
        alpha: alpha.clone(),
        mode,
        stabilized: first == second,
        generators: second,
        box_used: doubled,
    })
}

fn vertex_maxima(p: &NewtonPolyhedron) -> Vec<i64> {
    (0..p.dim())
        .map(|k| p.vertices().iter().map(|v| v[k]).max().unwrap_or(0))
        .collect()
}

fn base_box(s: &SemigroupData, p_j: &NewtonPolyhedron, alpha: &Rational, slack: i64) -> Result<Vec<i64>> {
    let big = s.support_maxima();
    vertex_maxima(p_j)
        .iter()
        .zip(&big)
        .map(|(&m, &b)| Ok(exactnum::ceil_to_i64(&(alpha * int(m)))? + b + slack))
        .collect()
}

/// `𝒥(X, αI)` in relint mode, or its left limit in closed mode.
pub fn multiplier_ideal(s: &SemigroupData, ideal: &MonomialIdeal, alpha: &Rational, mode: Mode) -> Result<MultiplierIdealResult> {
    if !alpha.is_positive() {
        return Err(Error::NonPositiveAlpha);
    }
    let p_j = transported_polyhedron(s, ideal.generators())?;
    let base = base_box(s, &p_j, alpha, 0)?;
    enumerate_ideal(s, alpha, mode, base, |v| in_multiplier_ideal(s, &p_j, v, alpha, mode))
}

/// `⟨y^v : v − w ∈ relint(α P_I)⟩` where `P_I` lives in `R^d` with the cone
/// `C` as recession cone and `w` encodes a boundary divisor.
pub fn multiplier_ideal_with_boundary(
    s: &SemigroupData,
    ideal: &MonomialIdeal,
    w: &[Rational],
    alpha: &Rational,
) -> Result<MultiplierIdealResult> {
    if !alpha.is_positive() {
        return Err(Error::NonPositiveAlpha);
    }
    if w.len() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: w.len(),
        });
    }
    if s.f_map_rational(w).iter().any(|x| *x < int(-1)) {
        return Err(Error::BoundaryNotEffective);
    }
    let p_i = newton_polyhedron(ideal.generators(), &s.extreme_rays())?;
    let p_j = transported_polyhedron(s, ideal.generators())?;
    let base = base_box(s, &p_j, alpha, 1)?;
    enumerate_ideal(s, alpha, Mode::Relint, base, |v| {
        let shifted: Vec<Rational> = v.iter().zip(w).map(|(a, b)| int(*a) - b).collect();
        p_i.membership(&shifted, alpha, Mode::Relint)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingEntry {
    pub alpha: Rational,
    /// `F(v) + e` lies on the boundary of `α P_J`.
    pub witness: Vec<i64>,
    /// Index into the facets of `P_J` that is tight at the witness.
    pub facet: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchMode {
    /// Complete line search, used for `d ≤ 2`.
    Exact,
    /// Scan of `0 ≤ F(v) ≤ window`; `stable` when the smaller window found
    /// the same coefficients.
    Windowed { window: i64, kappa: u32, stable: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingReport {
    pub lct: Rational,
    /// Upper end of the window `(0, T]`.
    pub max: Rational,
    pub jumping: Vec<JumpingEntry>,
    pub search: SearchMode,
    pub bfunction_check: Option<Verdict>,
}

/// Candidates `n / c_k` in `(0, max]` over facets with positive offset.
fn candidates(p: &NewtonPolyhedron, max: &Rational) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for f in p.facets().iter().filter(|f| f.offset > 0) {
        let top = (max * int(f.offset)).floor().to_integer();
        let mut n = BigInt::one();
        while n <= top {
            out.push(Rational::new(n.clone(), BigInt::from(f.offset)));
            n += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Constraint `a + b·t ≥ 0` on an integer parameter; narrows `[lo, hi]`.
/// Returns `false` when infeasible.
fn narrow(lo: &mut Option<Rational>, hi: &mut Option<Rational>, a: Rational, b: Rational) -> bool {
    if b.is_zero() {
        return !a.is_negative();
    }
    let bound = -a / &b;
    if b.is_positive() {
        if lo.as_ref().is_none_or(|l| bound > *l) {
            *lo = Some(bound);
        }
    } else if hi.as_ref().is_none_or(|h| bound < *h) {
        *hi = Some(bound);
    }
    true
}

/// Boundary witness on facet `k` at `alpha` for `d ≤ 2`: integer points of
/// the line `ℓ_k·F(v) = α c_k − ℓ_k·e` inside `α P_J − e` and `C`.
fn exact_witness(s: &SemigroupData, p: &NewtonPolyhedron, alpha: &Rational, k: usize) -> Option<Vec<i64>> {
    let d = s.dim();
    let ell = &p.facets()[k].normal;
    let e = s.e();
    let rhs = alpha * int(p.facets()[k].offset) - int(dot_i64(ell, &e));
    if !rhs.is_integer() {
        return None;
    }
    let rhs = rhs.to_integer().to_i64()?;
    // g·v = ℓ_k·F(v)
    let g: Vec<i64> = (0..d)
        .map(|i| s.facets().iter().zip(ell).map(|(f, l)| l * f[i]).sum())
        .collect();
    let (v0, dir): (Vec<i64>, Vec<i64>) = if d == 1 {
        if g[0] == 0 || rhs % g[0] != 0 {
            return None;
        }
        (vec![rhs / g[0]], vec![0])
    } else {
        let eg = g[0].extended_gcd(&g[1]);
        let h = eg.gcd;
        if h == 0 || rhs % h != 0 {
            return None;
        }
        let scale = rhs / h;
        (vec![eg.x * scale, eg.y * scale], vec![-g[1] / h, g[0] / h])
    };

    let at = |t: i64| -> Vec<i64> { v0.iter().zip(&dir).map(|(a, b)| a + b * t).collect() };
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for f in s.facets() {
        if !narrow(&mut lo, &mut hi, int(dot_i64(f, &v0)), int(dot_i64(f, &dir))) {
            return None;
        }
    }
    let fv0: Vec<i64> = s.f_map(&v0).iter().map(|x| x + 1).collect();
    let fdir = s.f_map(&dir);
    for h in p.facets() {
        let a = int(dot_i64(&h.normal, &fv0)) - alpha * int(h.offset);
        if !narrow(&mut lo, &mut hi, a, int(dot_i64(&h.normal, &fdir))) {
            return None;
        }
    }
    let lo_t = lo.map(|l| l.ceil().to_integer().to_i64());
    let hi_t = hi.map(|h| h.floor().to_integer().to_i64());
    let (lo_t, hi_t) = match (lo_t, hi_t) {
        (Some(None), _) | (_, Some(None)) => return None,
        (a, b) => (a.flatten(), b.flatten()),
    };
    if let (Some(a), Some(b)) = (lo_t, hi_t) {
        if a > b {
            return None;
        }
    }
    if dir.iter().all(|&x| x == 0) {
        return Some(v0);
    }
    // smallest total support, then lexicographically smallest
    let slope: i64 = fdir.iter().sum();
    let lex_up = dir.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);
    let prefer_low = if slope != 0 { slope > 0 } else { lex_up };
    let t = if prefer_low { lo_t.or(hi_t) } else { hi_t.or(lo_t) }?;
    Some(at(t))
}

fn witness_key(s: &SemigroupData, v: &[i64]) -> (i64, Vec<i64>) {
    (s.f_map(v).iter().sum(), v.to_vec())
}

fn tight_facet(s: &SemigroupData, p: &NewtonPolyhedron, v: &[i64], alpha: &Rational) -> usize {
    let q: Vec<i64> = s.f_map(v).iter().map(|x| x + 1).collect();
    p.facets()
        .iter()
        .position(|h| int(dot_i64(&h.normal, &q)) == alpha * int(h.offset))
        .expect("witness is on the boundary")
}

fn windowed_scan(
    s: &SemigroupData,
    p: &NewtonPolyhedron,
    max: &Rational,
    window: i64,
) -> Result<BTreeMap<Rational, Vec<i64>>> {
    let mut found: BTreeMap<Rational, Vec<i64>> = BTreeMap::new();
    for v in s.points_with_bounded_support(&vec![window; s.num_facets()])? {
        let q: Vec<Rational> = s.f_map(&v).iter().map(|x| int(x + 1)).collect();
        if let Threshold::Finite(alpha) = p.point_threshold(&q) {
            if alpha <= *max && alpha.is_positive() {
                let better = found
                    .get(&alpha)
                    .is_none_or(|w| witness_key(s, &v) < witness_key(s, w));
                if better {
                    found.insert(alpha, v);
                }
            }
        }
    }
    Ok(found)
}

/// Jumping coefficients of `(X, I)` in `(0, max]`, each with a witness.
pub fn jumping_coefficients(s: &SemigroupData, ideal: &MonomialIdeal, max: &Rational, kappa: u32) -> Result<JumpingReport> {
    let p = transported_polyhedron(s, ideal.generators())?;
    let lct = threshold_of_e(s, &p)?;
    if *max < lct {
        return Err(Error::BelowThreshold {
            bound: max.to_string(),
            lct: lct.to_string(),
        });
    }
    let (found, search) = if s.dim() <= 2 {
        let mut found = BTreeMap::new();
        for alpha in candidates(&p, max) {
            let best = (0..p.facets().len())
                .filter(|&k| p.facets()[k].offset > 0)
                .filter_map(|k| exact_witness(s, &p, &alpha, k))
                .min_by_key(|v| witness_key(s, v));
            if let Some(v) = best {
                found.insert(alpha, v);
            }
        }
        (found, SearchMode::Exact)
    } else {
        let top = p.vertices().iter().flatten().copied().max().unwrap_or(0);
        let big = s.support_maxima().into_iter().max().unwrap_or(0);
        let w0 = exactnum::ceil_to_i64(&(max * int(top)))? + big;
        let w1 = w0 * i64::from(kappa.max(1));
        let small = windowed_scan(s, &p, max, w0)?;
        let large = windowed_scan(s, &p, max, w1)?;
        let stable = small.keys().eq(large.keys());
        (
            large,
            SearchMode::Windowed {
                window: w1,
                kappa,
                stable,
            },
        )
    };
    let jumping = found
        .into_iter()
        .map(|(alpha, witness)| JumpingEntry {
            facet: tight_facet(s, &p, &witness, &alpha),
            alpha,
            witness,
        })
        .collect();
    Ok(JumpingReport {
        lct,
        max: max.clone(),
        jumping,
        search,
        bfunction_check: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub verdict: Verdict,
    pub bfunction: BFunctionResult,
    /// Roots of `b(−s)`, ascending, with multiplicity.
    pub roots: Vec<(Rational, u32)>,
    pub jumping: JumpingReport,
    pub lct_is_smallest_root: bool,
    /// Jumping coefficients in `[lct, lct + 1)` that are not roots of `b(−s)`.
    pub missing: Vec<Rational>,
}

/// Runs the b-function and the jumping coefficients up to `lct + 1` and
/// checks that the lct is the smallest root of `b(−s)` and that every jumping
/// coefficient in `[lct, lct + 1)` is a root.
pub fn verify_correspondence(
    s: &SemigroupData,
    ideal: &MonomialIdeal,
    config: &BFunctionConfig,
    kappa: u32,
) -> Result<CorrespondenceReport> {
    let b = bsato::bfunction(s, ideal, config)?;
    let lct = lct(s, ideal)?;
    let mut jumping = jumping_coefficients(s, ideal, &(&lct + int(1)), kappa)?;
    let mut roots: Vec<(Rational, u32)> = b.roots.iter().map(|(r, m)| (-r, *m)).collect();
    roots.sort();
    let lct_is_smallest_root = roots.first().is_some_and(|(r, _)| *r == lct);
    let upper = &lct + int(1);
    let missing: Vec<Rational> = jumping
        .jumping
        .iter()
        .map(|j| &j.alpha)
        .filter(|a| **a < upper && !roots.iter().any(|(r, _)| r == *a))
        .cloned()
        .collect();
    let verdict = if !b.stabilized {
        Verdict::Inconclusive
    } else if lct_is_smallest_root && missing.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    jumping.bfunction_check = Some(verdict.clone());
    Ok(CorrespondenceReport {
        verdict,
        bfunction: b,
        roots,
        jumping,
        lct_is_smallest_root,
        missing,
    })
}
