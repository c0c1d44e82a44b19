//! The semigroup datum: facets of the cone over `A`, their primitive support
//! functions, and the transport map `F(p) = (F_σ(p))_σ`.
//!
//! Facets are enumerated by scanning all `(d-1)`-subsets of columns, which
//! costs `O(C(m, d-1))` rank computations. That is fine at `d ≤ 4, m ≤ 12`
//! and not meant for larger inputs. Facets are listed in descending
//! lexicographic order of their support vectors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::bsato::MultiPoly;
use crate::exactnum::{
    self, combinations, dot_i64, fm_feasible, hermite_normal_form, int, nullspace,
    primitive_from_rational, rank, solve_linear, to_rational_vec, Domain, Inequality, IntMatrix,
    Rational, Relation,
};
use crate::{Error, Result};

/// Structural verdicts on a matrix, computed without failing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    pub full_dimensional: bool,
    pub pointed: bool,
    pub saturated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport {
    pub normal: bool,
    /// First lattice point (lexicographically) of the cone that is not in `NA`.
    pub witness: Option<Vec<i64>>,
}

/// Validated toric datum: a full-rank, pointed, saturated matrix together with
/// the support vectors of its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupData {
    matrix: IntMatrix,
    columns: Vec<Vec<i64>>,
    facets: Vec<Vec<i64>>,
    grading: Vec<i64>,
    pointed: bool,
    saturated: bool,
    normal: Option<bool>,
}

fn columns_as_rows(columns: &[Vec<i64>], subset: &[usize]) -> Vec<Vec<Rational>> {
    subset.iter().map(|&i| to_rational_vec(&columns[i])).collect()
}

fn full_dimensional(columns: &[Vec<i64>], d: usize) -> bool {
    let all: Vec<usize> = (0..columns.len()).collect();
    rank(&columns_as_rows(columns, &all), d) == d
}

/// An integer `w` with `w·a_i ≥ 1` for every column, if one exists.
fn positive_grading(columns: &[Vec<i64>], d: usize) -> Result<Option<Vec<i64>>> {
    let system: Vec<Inequality> = columns
        .iter()
        .map(|a| Inequality::new(to_rational_vec(a), Relation::Ge, int(1)))
        .collect();
    let Some(w) = fm_feasible(&system) else {
        return Ok(None);
    };
    let l = exactnum::common_denominator(&w);
    debug_assert_eq!(w.len(), d);
    w.iter()
        .map(|x| (x * &l).to_integer().to_i64().ok_or(Error::Overflow("grading")))
        .collect::<Result<Vec<i64>>>()
        .map(Some)
}

fn saturated(matrix: &IntMatrix) -> bool {
    hermite_normal_form(matrix).is_ok_and(|h| h.pivot_block_is_identity())
}

/// Facet support vectors, primitive and oriented non-negatively on all columns.
fn enumerate_facets(columns: &[Vec<i64>], d: usize) -> Result<Vec<Vec<i64>>> {
    let mut found = BTreeSet::new();
    for subset in combinations(columns.len(), d - 1) {
        let rows = columns_as_rows(columns, &subset);
        let ns = nullspace(&rows, d);
        if ns.len() != 1 {
            continue;
        }
        let normal = primitive_from_rational(&ns[0])?;
        let values: Vec<i64> = columns.iter().map(|a| dot_i64(&normal, a)).collect();
        if values.iter().all(|&v| v >= 0) {
            found.insert(normal);
        } else if values.iter().all(|&v| v <= 0) {
            found.insert(normal.iter().map(|x| -x).collect());
        }
    }
    Ok(found.into_iter().rev().collect())
}

/// Checks full dimension, pointedness and saturation without erroring.
pub fn analyze(a: &IntMatrix) -> Result<StructureReport> {
    let columns = a.to_i64_columns()?;
    let d = a.rows();
    Ok(StructureReport {
        full_dimensional: full_dimensional(&columns, d),
        pointed: positive_grading(&columns, d)?.is_some(),
        saturated: saturated(a),
    })
}

/// Builds the semigroup datum for the columns of `a`.
pub fn build_semigroup(a: &IntMatrix) -> Result<SemigroupData> {
    let s = build_cone(a)?;
    if !s.saturated {
        return Err(Error::NotSaturated);
    }
    Ok(s)
}

/// Facets and grading of a full-dimensional pointed cone, with saturation
/// recorded rather than enforced.
fn build_cone(a: &IntMatrix) -> Result<SemigroupData> {
    if a.is_zero() {
        return Err(Error::DegenerateMatrix);
    }
    let d = a.rows();
    let columns = a.to_i64_columns()?;
    if !full_dimensional(&columns, d) {
        return Err(Error::NotFullDimensional);
    }
    let grading = positive_grading(&columns, d)?.ok_or(Error::NotPointed)?;
    let saturated = saturated(a);
    let facets = enumerate_facets(&columns, d)?;
    Ok(SemigroupData {
        matrix: a.clone(),
        columns,
        facets,
        grading,
        pointed: true,
        saturated,
        normal: None,
    })
}

/// Normality verdict `C ∩ Z^d = NA` for any full-dimensional pointed matrix,
/// saturated or not.
pub fn check_normality(a: &IntMatrix) -> Result<NormalityReport> {
    Ok(build_cone(a)?.is_normal())
}

impl SemigroupData {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        build_semigroup(&IntMatrix::from_rows(rows)?)
    }

    /// The orthant semigroup `N^d`.
    pub fn identity(d: usize) -> Result<Self> {
        let mut s = build_semigroup(&IntMatrix::identity(d))?;
        s.normal = Some(true);
        Ok(s)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// Support vectors `f_σ`, one per facet, so that `F_σ(p) = f_σ·p`.
    pub fn facets(&self) -> &[Vec<i64>] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// A positive grading: `w·a_i ≥ 1` for all columns.
    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    pub fn pointed(&self) -> bool {
        self.pointed
    }

    pub fn saturated(&self) -> bool {
        self.saturated
    }

    /// `Some` once normality has been checked or asserted.
    pub fn normal(&self) -> Option<bool> {
        self.normal
    }

    pub fn assume_normal(&mut self) {
        self.normal = Some(true);
    }

    /// The all-ones vector `e` in `Z^facets`.
    pub fn e(&self) -> Vec<i64> {
        vec![1; self.facets.len()]
    }

    pub fn f_map(&self, v: &[i64]) -> Vec<i64> {
        self.facets.iter().map(|f| dot_i64(f, v)).collect()
    }

    pub fn f_map_rational(&self, v: &[Rational]) -> Vec<Rational> {
        self.facets.iter().map(|f| exactnum::dot_rat(f, v)).collect()
    }

    /// The unique integer `v` with `F(v) = q`, if any.
    pub fn f_section(&self, q: &[i64]) -> Option<Vec<i64>> {
        if q.len() != self.facets.len() {
            return None;
        }
        let m: Vec<Vec<Rational>> = self.facets.iter().map(|f| to_rational_vec(f)).collect();
        let x = solve_linear(&m, &to_rational_vec(q), Domain::Integer)?;
        let v: Vec<i64> = x.iter().map(|r| r.to_integer().to_i64()).collect::<Option<_>>()?;
        (self.f_map(&v) == q).then_some(v)
    }

    /// Membership in `NA` through the support functions; exact only when the
    /// semigroup is normal.
    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.dim() && self.facets.iter().all(|f| dot_i64(f, v) >= 0)
    }

    /// Membership in `NA` by searching non-negative integer combinations of
    /// the columns. Independent of normality; exponential in general.
    pub fn in_semigroup_by_search(&self, p: &[i64]) -> bool {
        let mut memo = BTreeMap::new();
        self.search(p.to_vec(), &mut memo)
    }

    fn search(&self, p: Vec<i64>, memo: &mut BTreeMap<Vec<i64>, bool>) -> bool {
        if p.iter().all(|&x| x == 0) {
            return true;
        }
        if dot_i64(&self.grading, &p) <= 0 {
            return false;
        }
        if let Some(&known) = memo.get(&p) {
            return known;
        }
        let found = self.columns.iter().any(|a| {
            let rest: Vec<i64> = p.iter().zip(a).map(|(x, y)| x - y).collect();
            self.search(rest, memo)
        });
        memo.insert(p, found);
        found
    }

    /// Decides `C ∩ Z^d = NA` by checking every cone lattice point of the
    /// zonotope's bounding box. Records the verdict on `self`.
    pub fn check_normal(&mut self) -> NormalityReport {
        let report = self.is_normal();
        self.normal = Some(report.normal);
        report
    }

    pub fn is_normal(&self) -> NormalityReport {
        let d = self.dim();
        let lo: Vec<i64> = (0..d)
            .map(|i| self.columns.iter().map(|a| a[i].min(0)).sum())
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|i| self.columns.iter().map(|a| a[i].max(0)).sum())
            .collect();
        let mut witness = None;
        for_each_box_point(&lo, &hi, |p| {
            if self.contains(p) && !self.in_semigroup_by_search(p) {
                witness = Some(p.to_vec());
                return false;
            }
            true
        });
        NormalityReport {
            normal: witness.is_none(),
            witness,
        }
    }

    /// Primitive generators of the extreme rays of the cone.
    pub fn extreme_rays(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut rays = BTreeSet::new();
        for a in &self.columns {
            let tight: Vec<Vec<Rational>> = self
                .facets
                .iter()
                .filter(|f| dot_i64(f, a) == 0)
                .map(|f| to_rational_vec(f))
                .collect();
            if rank(&tight, d) + 1 == d {
                if let Ok(p) = exactnum::primitive_vector(a) {
                    rays.insert(p);
                }
            }
        }
        rays.into_iter().collect()
    }

    /// `max_i F_σ(a_i)` for each facet.
    pub fn support_maxima(&self) -> Vec<i64> {
        self.facets
            .iter()
            .map(|f| self.columns.iter().map(|a| dot_i64(f, a)).max().unwrap_or(0))
            .collect()
    }

    /// All `v ∈ Z^d` with `0 ≤ F(v) ≤ bounds`, in lexicographic order.
    pub fn points_with_bounded_support(&self, bounds: &[i64]) -> Result<Vec<Vec<i64>>> {
        let d = self.dim();
        if bounds.len() != self.facets.len() {
            return Err(Error::DimensionMismatch {
                expected: self.facets.len(),
                found: bounds.len(),
            });
        }
        // d linearly independent facets give an invertible square system
        let mut chosen: Vec<usize> = Vec::new();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (k, f) in self.facets.iter().enumerate() {
            rows.push(to_rational_vec(f));
            if rank(&rows, d) > chosen.len() {
                chosen.push(k);
            } else {
                rows.pop();
            }
            if chosen.len() == d {
                break;
            }
        }
        if chosen.len() != d {
            return Err(Error::NotPointed);
        }
        let mut lo = vec![Rational::zero(); d];
        let mut hi = vec![Rational::zero(); d];
        for (col, &k) in chosen.iter().enumerate() {
            let mut unit = vec![Rational::zero(); d];
            unit[col] = int(1);
            let inv_col = solve_linear(&rows, &unit, Domain::Rational)
                .ok_or_else(|| Error::Invariant("facet block not invertible".into()))?;
            let b = int(bounds[k]);
            for j in 0..d {
                let t = &inv_col[j] * &b;
                if t < Rational::zero() {
                    lo[j] += t;
                } else {
                    hi[j] += t;
                }
            }
        }
        let lo: Vec<i64> = lo.iter().map(exactnum::floor_to_i64).collect::<Result<_>>()?;
        let hi: Vec<i64> = hi.iter().map(exactnum::ceil_to_i64).collect::<Result<_>>()?;
        let mut out = Vec::new();
        for_each_box_point(&lo, &hi, |v| {
            let q = self.f_map(v);
            if q.iter().zip(bounds).all(|(x, b)| *x >= 0 && x <= b) {
                out.push(v.to_vec());
            }
            true
        });
        Ok(out)
    }

    /// `Π_{σ: F_σ(u) > 0} Π_{j < F_σ(u)} (F_σ(θ) - j)`, the principal generator
    /// of the polynomials in `θ` vanishing on `NA \ (u + NA)`. These are the
    /// `θ`-parts of the operators `y^{-u} f(θ)` in `D_A`, the ones that lower
    /// a monomial's exponent by `u`.
    pub fn theta_generator(&self, u: &[i64]) -> MultiPoly {
        let d = self.dim();
        let mut out = MultiPoly::one(d);
        for f in &self.facets {
            let value = dot_i64(f, u);
            let form = to_rational_vec(f);
            for j in 0..value.max(0) {
                out = &out * &MultiPoly::linear(&form, int(-j));
            }
        }
        out
    }
}

/// Visits the integer points of `[lo, hi]` in lexicographic order until the
/// callback returns `false`.
pub(crate) fn for_each_box_point(lo: &[i64], hi: &[i64], mut visit: impl FnMut(&[i64]) -> bool) {
    let n = lo.len();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return;
    }
    let mut p = lo.to_vec();
    loop {
        if !visit(&p) {
            return;
        }
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if p[k] < hi[k] {
                p[k] += 1;
                for j in k + 1..n {
                    p[j] = lo[j];
                }
                break;
            }
        }
    }
}

/// A monomial ideal of `k[NA]`, stored as its minimal generator exponents in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Vec<i64>>,
}

impl MonomialIdeal {
    /// Validates membership in `NA` and keeps only the minimal generators
    /// under `NA`-divisibility.
    pub fn new(s: &SemigroupData, generators: &[Vec<i64>]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in generators {
            if g.len() != s.dim() {
                return Err(Error::DimensionMismatch {
                    expected: s.dim(),
                    found: g.len(),
                });
            }
            if !s.contains(g) {
                return Err(Error::NotInSemigroup { exponent: g.clone() });
            }
        }
        Ok(Self {
            generators: minimalize(s, generators),
        })
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.iter().all(|&x| x == 0))
    }

    pub fn contains(&self, s: &SemigroupData, v: &[i64]) -> bool {
        self.generators.iter().any(|g| {
            let diff: Vec<i64> = v.iter().zip(g).map(|(a, b)| a - b).collect();
            s.contains(&diff)
        })
    }
}

/// Minimal elements under `w - v ∈ NA`, deduplicated and sorted.
pub(crate) fn minimalize(s: &SemigroupData, points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut sorted: Vec<(i64, Vec<i64>)> = points
        .iter()
        .map(|p| (s.f_map(p).iter().sum::<i64>(), p.clone()))
        .collect();
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for (_, p) in sorted {
        let divisible = kept.iter().any(|g| {
            let diff: Vec<i64> = p.iter().zip(g).map(|(a, b)| a - b).collect();
            s.contains(&diff)
        });
        if !divisible {
            kept.push(p);
        }
    }
    kept.sort();
    kept
}

impl From<&SemigroupData> for StructureReport {
    fn from(s: &SemigroupData) -> Self {
        StructureReport {
            full_dimensional: true,
            pointed: s.pointed,
            saturated: s.saturated,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn example() -> SemigroupData {
        SemigroupData::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap()
    }

    fn simplicial3() -> SemigroupData {
        SemigroupData::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, 1], vec![0, 0, 2, 1]]).unwrap()
    }

    #[test]
    fn example_facets_match_transport_matrix() {
        let s = example();
        assert_eq!(s.facets(), &[vec![3, -1], vec![0, 1]]);
        assert!(s.pointed() && s.saturated());
    }

    #[test]
    fn orthant_facets() {
        let s = SemigroupData::identity(2).unwrap();
        assert_eq!(s.facets(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(s.f_map(&[4, 7]), vec![4, 7]);
    }

    #[test]
    fn structural_errors() {
        assert_eq!(SemigroupData::from_rows(&[vec![1, -1]]), Err(Error::NotPointed));
        assert_eq!(Error::NotPointed.to_string(), "cone not strongly convex");
        assert_eq!(
            SemigroupData::from_rows(&[vec![1, 2], vec![2, 4]]),
            Err(Error::NotFullDimensional)
        );
        assert_eq!(
            SemigroupData::from_rows(&[vec![2, 0], vec![0, 2]]),
            Err(Error::NotSaturated)
        );
        let report = analyze(&IntMatrix::from_rows(&[vec![1, -1]]).unwrap()).unwrap();
        assert!(report.full_dimensional && !report.pointed && report.saturated);
    }

    #[test]
    fn one_dimensional_semigroup() {
        let s = SemigroupData::from_rows(&[vec![1]]).unwrap();
        assert_eq!(s.facets(), &[vec![1]]);
        let s = SemigroupData::from_rows(&[vec![-1]]).unwrap();
        assert_eq!(s.facets(), &[vec![-1]]);
    }

    #[test]
    fn three_dimensional_simplicial_cone() {
        let s = simplicial3();
        assert_eq!(s.facets(), &[vec![2, 0, -1], vec![0, 2, -1], vec![0, 0, 1]]);
        assert_eq!(s.f_map(&[1, 1, 1]), vec![1, 1, 1]);
        assert!(s.is_normal().normal);
        assert_eq!(s.extreme_rays(), vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 2]]);
    }

    #[test]
    fn normality() {
        let mut s = example();
        assert!(s.check_normal().normal);
        assert_eq!(s.normal(), Some(true));
        assert!(SemigroupData::identity(3).unwrap().is_normal().normal);
        let a = IntMatrix::from_rows(&[vec![1, 1], vec![0, 3]]).unwrap();
        let report = check_normality(&a).unwrap();
        assert!(!report.normal);
        assert_eq!(report.witness, Some(vec![1, 1]));
        assert_eq!(build_semigroup(&a), Err(Error::NotSaturated));
        // saturated but not normal: the cone over (1,0),(1,2),(1,3)... needs (1,1)
        let a = IntMatrix::from_rows(&[vec![1, 1, 1], vec![0, 2, 3]]).unwrap();
        let mut s = build_semigroup(&a).unwrap();
        let report = s.check_normal();
        assert_eq!(report.witness, Some(vec![1, 1]));
        assert_eq!(s.normal(), Some(false));
    }

    #[test]
    fn membership_examples() {
        let s = example();
        assert!(s.contains(&[1, 2]));
        assert_eq!(s.f_map(&[0, 1]), vec![-1, 1]);
        assert!(!s.contains(&[0, 1]));
        assert_eq!(s.f_map(&[2, 3]), vec![3, 3]);
        assert!(s.contains(&[2, 3]));
    }

    #[test]
    fn transport_and_section() {
        let s = example();
        assert_eq!(s.f_map(&[1, 1]), vec![2, 1]);
        assert_eq!(s.f_map(&[1, 2]), vec![1, 2]);
        assert_eq!(s.f_section(&[1, 1]), None);
        assert_eq!(s.f_section(&[0, 0]), Some(vec![0, 0]));
        assert_eq!(s.f_map(&[0, 0]), vec![0, 0]);
        assert_eq!(s.f_section(&[2, 1]), Some(vec![1, 1]));
    }

    #[test]
    fn theta_generator_examples() {
        let s = example();
        assert_eq!(s.theta_generator(&[0, 0]), MultiPoly::one(2));
        assert_eq!(s.f_map(&[-1, 0]), vec![-3, 0]);
        assert_eq!(s.theta_generator(&[-1, 0]), MultiPoly::one(2));
        // (3θ1 − θ2)(3θ1 − θ2 − 1)·θ2
        let l = MultiPoly::linear(&[int(3), int(-1)], int(0));
        let l1 = MultiPoly::linear(&[int(3), int(-1)], int(-1));
        let t2 = MultiPoly::var(2, 1);
        assert_eq!(s.theta_generator(&[1, 1]), &(&l * &l1) * &t2);
    }

    #[test]
    fn theta_generator_vanishes_exactly_off_the_shifted_semigroup() {
        let s = example();
        for u in [[1, 1], [1, 0], [2, 3], [0, 1], [-1, 1], [3, 2]] {
            let g = s.theta_generator(&u);
            for_each_box_point(&[0, 0], &[6, 12], |p| {
                if !s.contains(p) {
                    return true;
                }
                let lowered: Vec<i64> = p.iter().zip(&u).map(|(a, b)| a - b).collect();
                let value = g.eval(&to_rational_vec(p));
                assert_eq!(value.is_zero(), !s.contains(&lowered), "u={:?} p={:?}", u, p);
                true
            });
        }
    }

    #[test]
    fn bounded_support_enumeration() {
        let s = example();
        let pts = s.points_with_bounded_support(&[3, 3]).unwrap();
        for p in &pts {
            let q = s.f_map(p);
            assert!(q.iter().all(|&x| (0..=3).contains(&x)));
        }
        // brute-force count over a generous box
        let mut count = 0;
        for_each_box_point(&[-5, -5], &[5, 5], |p| {
            let q = s.f_map(p);
            if q.iter().all(|&x| (0..=3).contains(&x)) {
                count += 1;
            }
            true
        });
        assert_eq!(pts.len(), count);
    }

    #[test]
    fn ideal_minimalization() {
        let s = example();
        let i = MonomialIdeal::new(&s, &[vec![2, 2], vec![1, 1]]).unwrap();
        assert_eq!(i.generators(), &[vec![1, 1]]);
        let i = MonomialIdeal::new(&s, &[vec![1, 2], vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(i.generators(), &[vec![1, 1], vec![1, 2]]);
        assert_eq!(
            MonomialIdeal::new(&s, &[vec![0, 1]]),
            Err(Error::NotInSemigroup { exponent: vec![0, 1] })
        );
        assert!(i.contains(&s, &[2, 3]));
        assert!(!i.contains(&s, &[1, 0]));
    }

    #[test]
    fn rational_transport() {
        let s = example();
        assert_eq!(s.f_map_rational(&[rat(-2, 3), int(-1)]), vec![int(-1), int(-1)]);
    }

    fn arb_example_point() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-6i64..=6, 2)
    }

    fn arb_semigroup_point() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(0i64..=3, 4).prop_map(|n| {
            let cols = [[1, 0], [1, 1], [1, 2], [1, 3]];
            (0..2).map(|i| (0..4).map(|j| n[j] * cols[j][i]).sum()).collect()
        })
    }

    proptest! {
        #[test]
        fn f_map_is_additive(v in arb_example_point(), w in arb_example_point()) {
            let s = example();
            let sum: Vec<i64> = v.iter().zip(&w).map(|(a, b)| a + b).collect();
            let lhs = s.f_map(&sum);
            let rhs: Vec<i64> = s.f_map(&v).iter().zip(s.f_map(&w)).map(|(a, b)| a + b).collect();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(s.f_section(&s.f_map(&v)), Some(v));
        }

        #[test]
        fn divisibility_transport(v in arb_semigroup_point(), w in arb_semigroup_point()) {
            let s = example();
            let diff: Vec<i64> = w.iter().zip(&v).map(|(a, b)| a - b).collect();
            let transported_ge = s.f_map(&w).iter().zip(s.f_map(&v)).all(|(a, b)| *a >= b);
            prop_assert_eq!(s.in_semigroup_by_search(&diff), transported_ge);
        }

        #[test]
        fn generators_satisfy_support_conditions(cols in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 2..6)) {
            let rows: Vec<Vec<i64>> = (0..2).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
            if let Ok(s) = SemigroupData::from_rows(&rows) {
                for f in s.facets() {
                    prop_assert!(s.columns().iter().all(|a| dot_i64(f, a) >= 0));
                    prop_assert!(s.columns().iter().any(|a| dot_i64(f, a) == 0));
                    prop_assert_eq!(exactnum::primitive_vector(f).unwrap(), f.clone());
                }
                let mut sorted = s.facets().to_vec();
                sorted.sort();
                sorted.reverse();
                prop_assert_eq!(sorted, s.facets().to_vec());
            }
        }
    }
}
