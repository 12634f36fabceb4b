//! Exact computational toolkit for the finite-dimensional indecomposable
//! representations of the homogeneous Galilei algebra hg(1,3).
//!
//! The crate constructs the catalog of spinor and vector representations,
//! re-derives the classification by solving the defining matrix equations,
//! obtains each representation as an Inonu-Wigner contraction of a Lorentz
//! algebra representation, and carries the representation theory into
//! Galilean electromagnetism: five-potentials and field tensors, the
//! Clifford-type matrix multiplets, Pauli-type coupling covariance, and the
//! reduction of the spin-1/2 wave equation to a Schroedinger operator with
//! spin-orbit and Darwin corrections.
//!
//! All core computations are exact, over Q(i) or Q(i, sqrt2); floating
//! point appears only in explicitly numeric cross-checks.

pub mod error;
pub mod scalar;
pub mod matrix;
pub mod laurent;
pub mod poly;
pub mod linsolve;
pub mod ops;
pub mod catalog;
pub mod forms;
pub mod classify;
pub mod lorentz;
pub mod contract;
pub mod em;
pub mod oper;
pub mod report;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{GaussianRational, Scalar, Sqrt2Rational};
