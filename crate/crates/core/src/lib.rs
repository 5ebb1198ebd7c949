//! Exact symbolic kernel for the Grothendieck-ring combinatorics of the
//! braided Hopf algebra on one generator over Z[q,q^-1].
//!
//! Everything here is exact integer arithmetic: Laurent polynomials in q
//! carry graded dimensions, Gaussian binomials in the q^-2 convention carry
//! Grassmannian Betti numbers, and formal sums of stratum labels carry the
//! additive content of distinguished triangles.
//!
//! Module map:
//! - [`laurent`]: the scalar ring Z[q,q^-1] with bigint coefficients.
//! - [`qcomb`]: q-integers, q-factorials, q-binomials, Betti vectors and a
//!   partitions-in-a-box oracle.
//! - [`hopf`]: the canonical-basis algebra/coalgebra, the braiding, and the
//!   coherence equation with its per-orbit summands.
//! - [`orbits`]: parabolic dimension arithmetic, double-coset enumeration,
//!   the block-transposition permutation and the shift-dimension identity.
//! - [`graded`]: Hilbert series of symmetric-polynomial algebras and the
//!   graded rank of multiplication on constant objects.
//! - [`ledger`]: Grothendieck-group relations for structure triangles,
//!   octahedra and orbit decompositions.

pub mod graded;
pub mod hopf;
pub mod laurent;
pub mod ledger;
pub mod orbits;
pub mod qcomb;

mod error;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
