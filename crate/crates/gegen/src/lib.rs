//! Exact symbolic-numeric machinery for Gegenbauer (ultraspherical) polynomials.
//!
//! Everything in the exact backend is computed over arbitrary-precision
//! rationals: the polynomials themselves, the weighted inner product
//! `<p, q> = ∫ p(x) q(x) (1-x²)^(λ-1/2) dx` (carried in units of the base
//! moment `μ₀ = B(1/2, λ+1/2)` so that no transcendental constant is ever
//! evaluated), and every connection-coefficient family built on top of it.
//!
//! The crate provides:
//! - [`gegenbauer`]: four independent constructions of `C_n^(λ)` (explicit
//!   sum, three-term recurrence, Jacobi form, Rodrigues form) plus the
//!   structural identities that tie them together.
//! - [`weightspace`]: exact moments, inner products, norms, and two
//!   independent projection routes onto the basis `{C_k^(λ)}` — the ground
//!   truth oracle for every closed-form coefficient family.
//! - [`classicpoly`]: exact Bernoulli and Euler numbers and polynomials.
//! - [`expansions`]: closed-form coefficient families (monomial, Bernoulli,
//!   Euler, product linearization, self connection), each checked against
//!   the oracle, with an errata engine that records any exact discrepancy
//!   between an as-printed formula variant and the oracle.
//! - [`numeric`]: floating-point backend (recurrence evaluation,
//!   Gauss-Jacobi quadrature via Golub-Welsch, float projections) for
//!   irrational parameters and cross-backend checks.
//! - [`cli`]: the command surface used by the `gegen` binary (`expand`,
//!   `verify`, `quad`, `eval`) with deterministic JSON/CSV output.
//!
//! See the crate `examples/` directory for one runnable program per major
//! capability.

pub mod classicpoly;
pub mod cli;
pub mod coeffs;
pub mod error;
pub mod exactnum;
pub mod expansions;
pub mod gegenbauer;
pub mod numeric;
pub mod poly;
pub mod weightspace;

pub use coeffs::{CoeffVector, Family, Method};
pub use error::Error;
pub use exactnum::{binom_rational, gamma_ratio, rising_factorial, GegenParam, Rational};
pub use expansions::ErrataRecord;
pub use gegenbauer::{GegenPoly, Route};
pub use poly::Poly;
