//! Exact computations behind the conformal embedding of the level-one `D8`
//! affine vertex operator algebra into the level-one `E8` one.
//!
//! The crate builds the two root systems in a shared copy of `R^8`, a Chevalley
//! basis of `g_E8` from a sign cocycle, the graded vacuum module `N(k, 0)` of the
//! affine algebra, and the Sugawara operators of both algebras acting on it.
//! On top of that it checks, with exact rational arithmetic:
//!
//! * the adjoint branching `g_E8 = g_D8 ⊕ V(ω̄8)`,
//! * equality of central charges (only at level one),
//! * the coset-root identities that make `L_D8(0)` the degree operator,
//! * Virasoro and current-primary relations on graded pieces,
//! * singular vectors and the Shapovalov radical,
//! * the admissible-module classification at positive integer level,
//! * the character identity `χ_E8 = χ_D8,vac + χ_D8,spinor` from lattice theta series.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod characters;
pub mod chevalley;
pub mod classification;
pub mod embedding;
pub mod fock;
pub mod grids;
pub mod linalg;
pub mod report;
pub mod roots;
pub mod sugawara;
pub mod vec8;

/// Exact rationals used throughout.
pub type Q = num_rational::Rational64;

/// Serializes a rational as `"p/q"` (or `"p"`).
pub(crate) fn serialize_q<S: serde::Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

pub use chevalley::{Chevalley, LieElement};
pub use fock::{GradedVector, Monomial, VacuumModule};

pub use roots::{Label, RootSystem};

pub use vec8::Vec8;
