//! Exact Leibniz and Chevalley-Eilenberg cohomology of thinly graded Lie
//! algebras, with the explicit cocycles of the formal vector fields `W₁` and
//! the Witt algebra of `Vect S¹`.

pub mod algebra;
pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod cup;
pub mod linalg;
pub mod scalar;
pub mod witt;

pub use algebra::{builtin, validate, AlgebraError, AlgebraSpec, GradedLieAlgebra, Support};
pub use cochain::{Cochain, CochainError, ComplexSlice, Functional, MultiIndex, Theory};
pub use cohomology::{cohomology_dims, is_coboundary, CoboundaryDecision, CohomologyReport};
pub use cup::cup;
pub use linalg::{kernel_basis, rank, solve, Solution, SparseMatrix, SparseVector};
pub use scalar::{GaussianRational, Rational};
