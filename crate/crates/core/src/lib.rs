//! Exact Bernstein–Sato polynomials, multiplier ideals and jumping
//! coefficients for monomial ideals on affine normal toric varieties.
//!
//! A toric variety is given by an integer matrix `A` whose columns generate
//! a normal, saturated, pointed semigroup `NA`. The facets of the cone
//! `R_{>=0} A` define primitive support functions `F_σ`, and the linear map
//! `F(p) = (F_σ(p))_σ` transports the semigroup ring `k[NA]` into a
//! polynomial ring with one variable per facet. Everything here is built on
//! that transport:
//!
//! * [`toric`] builds and validates the semigroup datum and evaluates `F`.
//! * [`polyhedra`] handles Newton polyhedra with arbitrary rational
//!   recession cones.
//! * [`bsato`] holds sparse rational polynomials, a Buchberger engine and
//!   the b-function computation through the `g_c` generator ideal.
//! * [`multiplier`] computes multiplier ideals, log-canonical thresholds and
//!   jumping coefficients, and checks them against b-function roots.
//!
//! All arithmetic is exact. The crate is `no_std` and needs only `alloc`.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bsato;
mod error;
pub mod exactnum;
pub mod multiplier;
pub mod polyhedra;
pub mod toric;

pub use error::{Error, Result};
pub use exactnum::{IntMatrix, Rational};
pub use toric::{MonomialIdeal, SemigroupData};
