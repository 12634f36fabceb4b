//! Galilean electromagnetism: the five-potential, its field tensor, the
//! magnetic and electric limits, the Clifford-type matrix multiplets and
//! the covariance of the Pauli-type coupling terms.
//!
//! Field configurations are polynomials in `(t, x1, x2, x3)` with exact
//! coefficients, so every differential identity and boost-compatibility
//! statement is a decidable polynomial identity. The boost velocity can
//! stay symbolic: the shared polynomial ring carries three extra
//! variables `v1, v2, v3`.

pub mod parse;
pub mod potential;
pub mod beta;
pub mod multiplets;
pub mod covariance;

use crate::poly::MPoly;
use crate::scalar::{GaussianRational as Gr, Scalar};

/// Variable layout of the field polynomial ring.
pub const VAR_T: usize = 0;
pub const VAR_X: [usize; 3] = [1, 2, 3];
pub const VAR_V: [usize; 3] = [4, 5, 6];
pub const EM_ARITY: usize = 7;
pub const EM_NAMES: [&str; 7] = ["t", "x1", "x2", "x3", "v1", "v2", "v3"];

pub type FPoly = MPoly<Gr>;

pub fn fzero() -> FPoly {
    FPoly::zero_with(EM_ARITY)
}

pub fn fconst(v: i64) -> FPoly {
    FPoly::constant(EM_ARITY, Gr::from_int(v))
}

pub fn fvar(idx: usize) -> FPoly {
    FPoly::var(EM_ARITY, idx)
}
