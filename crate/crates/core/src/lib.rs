//! Exact computation of Goldman-type Lie algebras attached to fibered knots.
//!
//! The crate is organised bottom-up:
//!
//! - [`words`]: free-group words, conjugacy classes, rational linear
//!   combinations of classes and free-group automorphisms.
//! - [`surface`]: one-vertex ribbon graphs modelling a genus-`g` surface with
//!   one boundary circle.
//! - [`goldman`]: the Goldman bracket on such a surface, computed from linked
//!   pairs of positions, and its homological shadow.
//! - [`alexander`]: Laurent polynomials, Fox calculus and Alexander
//!   polynomials of knot group presentations.
//! - [`knots`]: braid input, Wirtinger presentations and validated fibered
//!   knot models (fiber surface plus monodromy).
//! - [`cover`]: the infinite cyclic cover: meridional presentations,
//!   Reidemeister–Schreier leveling, the deck action `t` and window surfaces.
//! - [`liealg`]: the bracket on classes of the commutator subgroup of a
//!   fibered knot group, its `t`-orbit quotient and its homological quotient.
//!
//! All arithmetic is exact: coefficients are arbitrary precision rationals or
//! integers, and every value is immutable once built.

pub mod alexander;
pub mod cover;
mod error;
pub mod goldman;
pub mod knots;
pub mod liealg;
pub mod surface;
pub mod words;

pub use error::{Error, ErrorKind, Result};
