//! Flagged Schur polynomials computed two independent ways.
//!
//! The row bound sum `s_λ(β; x)` is the content generating function of the
//! semistandard tableaux of shape `λ` whose row `i` values are bounded by
//! `β_i`. It can be obtained by brute-force tableau enumeration
//! ([`shape::row_bound_sum`]) or, when the terminal pair `(λ, β)` is
//! nonpermutable, as a Gessel-Viennot determinant of complete homogeneous
//! polynomials ([`gv::schur_via_det`]).
//!
//! Nonpermutability is characterised combinatorially by [`rtuple::classify`]
//! (gapless core and bounded by platform) and checked by brute force over
//! lattice path families in [`paths`]. The [`equivalence`] module groups the
//! valid inputs into classes and counts the most efficient ones, and
//! [`demazure`] ties gapless inputs to Demazure characters.

pub mod demazure;
pub mod equivalence;
mod error;
pub mod gv;
pub mod paths;
pub mod poly;
pub mod rtuple;
pub mod shape;
pub mod sweep;

pub use error::{Error, Result};
pub use poly::{MultiPoly, PolyMatrix};
pub use rtuple::{ClassFlags, CriticalList, RContext, RTuple};
pub use shape::{Shape, Tableau};
