//! Symbolic and numeric calculus for left-invariant differential operators on
//! the (2n+1)-dimensional Heisenberg group.
//!
//! The exact layers (`scalar`, `group`, `algebra`, `poly`, `fields`) work over
//! Gaussian rationals so that every structural identity is checked with zero
//! error. The numeric layers (`weyl`, `hermite`, `fock`, `analytic`,
//! `sampled`, `solvability`, `solver`) realize operators on oscillator bases
//! and grids, probe the bounded-left-inverse hypothesis, and evaluate the
//! constructive solution functional by quadrature over the representation
//! parameter.

pub mod algebra;
pub mod analytic;
pub mod audit;
pub mod error;
pub mod fields;
pub mod fock;
pub mod group;
pub mod hermite;
pub mod poly;
pub mod quad;
pub mod sampled;
pub mod scalar;
pub mod solvability;
pub mod solver;
pub mod weyl;

pub use algebra::{AlgebraElement, Generator, PbwMonomial, RewriteStrategy};
pub use error::{DomainError, NumericError};
pub use group::{Dilation, GroupPoint};
pub use scalar::{CRat, Rat, C64};
