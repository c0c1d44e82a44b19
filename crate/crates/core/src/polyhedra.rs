//! Newton polyhedra `conv(points) + cone(rays)` with a full-dimensional
//! recession cone, in H-representation.
//!
//! Facets come from the homogenized cone over `{(1, p)} ∪ {(0, r)}` in
//! dimension `n + 1`: every `n`-subset of generators spanning a hyperplane is
//! tested as a supporting hyperplane, and the facet `x_0 ≥ 0` (vanishing
//! `x`-part) is dropped. Exact subset scan, desk scale only.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactnum::{
    combinations, dot_i64, dot_rat, nullspace, primitive_from_rational, primitive_vector, rank,
    to_rational_vec, Rational,
};
use crate::{Error, Result};

/// `normal · x ≥ offset`, with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every facet inequality strict.
    Relint,
    Closed,
}

/// Result of [`NewtonPolyhedron::point_threshold`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    Finite(Rational),
    /// No facet has a positive offset; every dilation contains the point.
    Infinite,
    /// The point violates a facet through the origin and lies in no dilation.
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    rays: Vec<Vec<i64>>,
    facets: Vec<Halfspace>,
}

/// Builds `conv(points) + cone(rays)`.
pub fn newton_polyhedron(points: &[Vec<i64>], rays: &[Vec<i64>]) -> Result<NewtonPolyhedron> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let n = first.len();
    for v in points.iter().chain(rays) {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    let points: Vec<Vec<i64>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let rays: Vec<Vec<i64>> = rays
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| primitive_vector(r))
        .collect::<Result<BTreeSet<_>>>()?
        .into_iter()
        .collect();
    let ray_rows: Vec<Vec<Rational>> = rays.iter().map(|r| to_rational_vec(r)).collect();
    if rank(&ray_rows, n) != n {
        return Err(Error::DegenerateRecessionCone);
    }

    let homogenized: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            let mut h = Vec::with_capacity(n + 1);
            h.push(Rational::from_integer(BigInt::from(1)));
            h.extend(to_rational_vec(p));
            h
        })
        .chain(rays.iter().map(|r| {
            let mut h = Vec::with_capacity(n + 1);
            h.push(Rational::zero());
            h.extend(to_rational_vec(r));
            h
        }))
        .collect();

    let mut normals = BTreeSet::new();
    for subset in combinations(homogenized.len(), n) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| homogenized[i].clone()).collect();
        let ns = nullspace(&rows, n + 1);
        if ns.len() != 1 {
            continue;
        }
        let h = &ns[0];
        let values: Vec<Rational> = homogenized
            .iter()
            .map(|g| g.iter().zip(h).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        let sign = if values.iter().all(|v| *v >= Rational::zero()) {
            1
        } else if values.iter().all(|v| *v <= Rational::zero()) {
            -1
        } else {
            continue;
        };
        let ell = &h[1..];
        if ell.iter().all(Zero::is_zero) {
            continue;
        }
        let mut normal = primitive_from_rational(ell)?;
        if sign < 0 {
            normal.iter_mut().for_each(|x| *x = -*x);
        }
        normals.insert(normal);
    }

    let facets: Vec<Halfspace> = normals
        .into_iter()
        .map(|normal| {
            let offset = points.iter().map(|p| dot_i64(&normal, p)).min().unwrap();
            Halfspace { normal, offset }
        })
        .collect();

    let vertices = points
        .iter()
        .filter(|p| {
            let tight: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| dot_i64(&f.normal, p) == f.offset)
                .map(|f| to_rational_vec(&f.normal))
                .collect();
            rank(&tight, n) == n
        })
        .cloned()
        .collect();

    Ok(NewtonPolyhedron {
        dim: n,
        vertices,
        rays,
        facets,
    })
}

/// Standard basis of `R^n`, the recession rays of an orthant.
pub fn orthant_rays(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Membership of `q` in `α·P` (closed) or its interior (relint). Since the
    /// polyhedron is full-dimensional, the relative interior is the interior.
    pub fn membership(&self, q: &[Rational], alpha: &Rational, mode: Mode) -> bool {
        self.facets.iter().all(|f| {
            let lhs = dot_rat(&f.normal, q);
            let rhs = alpha * Rational::from_integer(BigInt::from(f.offset));
            match mode {
                Mode::Closed => lhs >= rhs,
                Mode::Relint => lhs > rhs,
            }
        })
    }

    pub fn membership_i64(&self, q: &[i64], alpha: &Rational, mode: Mode) -> bool {
        self.membership(&to_rational_vec(q), alpha, mode)
    }

    /// The dilation `ξ(q) = min_{c_k > 0} (ℓ_k·q)/c_k` at which `q` reaches
    /// the boundary. Facets with negative offset never bound the threshold;
    /// they do not occur for polyhedra inside a pointed cone containing
    /// their recession cone.
    pub fn point_threshold(&self, q: &[Rational]) -> Threshold {
        let mut best: Option<Rational> = None;
        for f in &self.facets {
            let value = dot_rat(&f.normal, q);
            if f.offset == 0 {
                if value < Rational::zero() {
                    return Threshold::Undefined;
                }
            } else if f.offset > 0 {
                let t = value / Rational::from_integer(BigInt::from(f.offset));
                if best.as_ref().is_none_or(|b| t < *b) {
                    best = Some(t);
                }
            }
        }
        match best {
            Some(t) => Threshold::Finite(t),
            None => Threshold::Infinite,
        }
    }
}
