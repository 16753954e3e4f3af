//! Error type shared by the exact and floating-point backends.

use thiserror::Error;

/// Everything that can go wrong constructing or manipulating the exact
/// and floating-point objects in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The basis parameter must satisfy λ > -1/2 and λ ≠ 0.
    #[error("invalid basis parameter λ = {lambda}: need λ > -1/2 and λ ≠ 0")]
    InvalidParam { lambda: String },

    /// A gamma-function quotient Γ(a+m)/Γ(a) crossed a pole (some a+j = 0).
    #[error("gamma ratio Γ({a}+{m})/Γ({a}) crosses a pole at offset {offset}")]
    PoleCrossing { a: String, m: usize, offset: usize },

    /// The weight exponent must satisfy λ + j > -1/2 for the moments to exist.
    #[error("invalid weight exponent: λ = {lambda}, shift j = {shift}")]
    InvalidWeight { lambda: String, shift: usize },

    /// Requested more derivatives than the polynomial degree supports.
    #[error("derivative order {order} exceeds polynomial degree {degree}")]
    DegreeUnderflow { order: usize, degree: usize },

    /// The Jacobi-form normalization ratio has a vanishing denominator.
    #[error("degenerate Jacobi normalization: binom({upper}, {n}) = 0")]
    DegenerateRatio { upper: String, n: usize },

    /// Product linearization needs n ≥ k ≥ 0.
    #[error("invalid product pair: need n ≥ k, got n = {n}, k = {k}")]
    InvalidPair { n: usize, k: usize },

    /// The as-printed constant 2^(λ+1) is only rational for integer λ.
    #[error("2^(λ+1) is irrational for λ = {lambda}; use the float backend")]
    NonIntegerExponent { lambda: String },

    /// Malformed command-line or config input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
