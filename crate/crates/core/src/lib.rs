//! Homological invariants of monomial ideals.
//!
//! The crate computes graded Betti numbers, f-vectors, Hilbert series
//! numerators, Castelnuovo-Mumford regularity, and linearity invariants of
//! monomial ideals, with particular support for the two truncations of an
//! ideal `I`:
//!
//! * the squarefree truncation `I_k`, generated by the squarefree degree `k`
//!   monomials of `I` together with the generators of degree above `k`, and
//! * the degree truncation `I_{>=k} = I ∩ M^k`, the elements of degree at
//!   least `k`.
//!
//! Betti numbers of a squarefree ideal are computed by a subset sweep over
//! the Stanley-Reisner complex (Hochster's formula) with exact homology over
//! characteristic zero or a prime field. Non-squarefree ideals go through
//! polarization first. Truncated tables are also produced by closed forms
//! that consume only the original table plus an f-vector or Hilbert
//! numerator; `verify::run_sweep` checks the closed forms against the sweep
//! oracle on randomized inputs.

pub mod arith;
pub mod betti;
pub mod complex;
pub mod error;
pub mod hilbert;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod limits;
pub mod monomial;
pub mod polarization;
pub mod random;
pub mod truncation;
pub mod verify;

pub use betti::BettiTable;
pub use complex::{FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use hilbert::HilbertNumerator;
pub use homology::FieldChar;
pub use ideal::MonomialIdeal;
pub use invariants::{ComponentwiseLinearity, KIndex};
pub use monomial::{Monomial, VarSet};
pub use polarization::Polarization;
pub use random::IdealSampler;
pub use verify::{run_sweep, SweepConfig, SweepReport};
