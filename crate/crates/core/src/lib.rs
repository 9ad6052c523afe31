//! Exact algebra for Schubert calculus on the symmetric group.
//!
//! The crate computes, over arbitrary-precision rationals:
//!
//! * degree polynomials of Schubert varieties, by several independent
//!   algorithms (weighted Bruhat-chain sums, iterated integration operators,
//!   differential operators against the normalized Vandermonde, determinants
//!   for pattern-avoiding classes, and a closed formula driven by a Cartan
//!   matrix),
//! * Schubert polynomials, the Schubert-Kostka matrix and its inverse,
//!   standard elementary monomials, and Littlewood-Richardson coefficients,
//! * Demazure characters, flagged Schur polynomials, and generalized
//!   Gelfand-Tsetlin polytopes (lattice points, counts, Ehrhart volumes),
//! * parking polynomials and the long-cycle degree polynomial by eight routes,
//! * permanent identities for the Gram matrix of positive roots and an
//!   evaluator for a conjectured closed form attached to special codes.
//!
//! Everything is exact; no floating point is used anywhere.

pub mod acceptance;
pub mod degrees;
pub mod demazure;
pub mod exactpoly;
pub mod identities;
pub mod operators;
pub mod parking;
pub mod permgroup;
pub mod schubert;

pub use exactpoly::{Family, Poly, Rat};
pub use permgroup::Perm;
