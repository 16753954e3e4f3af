//! Expansion-coefficient vectors with provenance.

use serde::Serialize;

use crate::exactnum::{GegenParam, Rational};
use crate::gegenbauer::gegen_recurrence;
use crate::poly::Poly;

/// How a coefficient vector was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// A closed-form coefficient formula.
    ClosedForm,
    /// The orthogonality projection `d_k = <p, C_k> / <C_k, C_k>`.
    Projection,
    /// The derivative-functional route (k-fold integration by parts).
    Prop1,
}

/// Which source polynomial the coefficients expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Monomial,
    Bernoulli,
    Euler,
    /// Linearization of `C_{n-k} · C_k`; carries the split index k.
    Product {
        k: usize,
    },
    /// Expansion of `C_n` in its own basis.
    SelfConnection,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Monomial => "monomial",
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
            Family::Product { .. } => "product",
            Family::SelfConnection => "self",
        }
    }
}

/// Coefficients `d_0 .. d_n` of a polynomial in the basis `{C_k^(λ)}`,
/// together with where they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    pub param: GegenParam,
    pub n: usize,
    pub d: Vec<Rational>,
    pub method: Method,
    pub family: Option<Family>,
}

impl CoeffVector {
    pub fn new(
        param: GegenParam,
        d: Vec<Rational>,
        method: Method,
        family: Option<Family>,
    ) -> Self {
        let n = d.len().saturating_sub(1);
        CoeffVector {
            param,
            n,
            d,
            method,
            family,
        }
    }

    /// Rebuild `Σ_k d_k C_k^(λ)` as an explicit polynomial.
    pub fn reconstruct(&self) -> Poly {
        let mut acc = Poly::zero();
        for (k, dk) in self.d.iter().enumerate() {
            if num_traits::Zero::is_zero(dk) {
                continue;
            }
            let ck = gegen_recurrence(&self.param, k);
            acc = &acc + &ck.poly().scale(dk);
        }
        acc
    }

    /// Exact per-entry equality against another vector (padding the shorter
    /// one with zeros).
    pub fn same_coeffs(&self, other: &CoeffVector) -> bool {
        let n = self.d.len().max(other.d.len());
        (0..n).all(|k| self.entry(k) == other.entry(k))
    }

    /// The k-th coefficient, zero beyond the stored length.
    pub fn entry(&self, k: usize) -> Rational {
        self.d
            .get(k)
            .cloned()
            .unwrap_or_else(num_traits::Zero::zero)
    }

    /// Coefficients as exact strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.d.iter().map(|c| c.to_string()).collect()
    }
}
