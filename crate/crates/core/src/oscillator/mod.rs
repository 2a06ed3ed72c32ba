//! Quadratic algebras with three generators, their deformed oscillator
//! realisations and the Darboux-II energy families.

mod fock;
mod quadratic;
mod spectrum;

use serde::Serialize;
use thiserror::Error;

use crate::poly::PolyError;

pub use fock::{
    darboux2_realization, fock_representation, oscillator_structure_function,
    realize_quadratic_algebra, solve_eta, Darboux2Realization, FockRepresentation, FockResiduals,
    QuadraticRealization,
};
pub use quadratic::CasimirTerm;
pub use quadratic::{
    casimir_expression, darboux2_relations, darboux2_spec, match_generic_form, CasimirExpression,
    NumericQuadraticSpec, QuadraticAlgebraSpec, QuadraticRelations,
};
pub use spectrum::{darboux2_energy_families, radicand, Family, SpectrumSolution};

/// Tolerance for structure-function constraints.
pub const SPECTRUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OscillatorError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("term {term} is outside the quadratic template")]
    NotQuadraticForm { term: String },
    #[error("coefficient of {term} is {found} but the template requires {expected}")]
    InconsistentCoefficients {
        term: String,
        expected: String,
        found: String,
    },
    #[error("radicand {radicand} is negative, the energy is not real")]
    RealityViolation { radicand: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("structure function is not positive at {k}: {value}")]
    NonUnitarizable { k: usize, value: f64 },
    #[error("realisation needs alpha = gamma = 0 and epsilon > 0")]
    UnsupportedSpec,
    #[error("no real shift satisfies the top-state constraint")]
    NoRealShift,
}

/// A real polynomial `Φ(z) = Σ c_i z^i` (coefficients in ascending degree).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureFunction {
    pub coefficients: Vec<f64>,
}

impl StructureFunction {
    pub fn new(mut coefficients: Vec<f64>) -> Self {
        while coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        StructureFunction { coefficients }
    }

    /// `c · Π (z − r_i)`.
    pub fn from_roots(c: f64, roots: &[f64]) -> Self {
        let mut coeffs = vec![c];
        for r in roots {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (i, a) in coeffs.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            coeffs = next;
        }
        StructureFunction::new(coeffs)
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + c)
    }

    /// `max_{0 ≤ k ≤ n} |Φ(k)|`.
    pub fn max_abs_on(&self, n: usize) -> f64 {
        (0..=n)
            .map(|k| self.eval(k as f64).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureFunctionReport {
    pub p: usize,
    pub tol: f64,
    pub phi_at_zero: f64,
    pub phi_at_top: f64,
    /// `Φ(k)` for `k = 1..=p`.
    pub interior: Vec<f64>,
    pub zero_at_origin: bool,
    pub zero_at_top: bool,
    pub positive: bool,
}

impl StructureFunctionReport {
    pub fn passed(&self) -> bool {
        self.zero_at_origin && self.zero_at_top && self.positive
    }
}

/// Checks `|Φ(0)| ≤ tol`, `|Φ(p+1)| ≤ tol` and `Φ(k) > tol` for `1 ≤ k ≤ p`.
pub fn verify_structure_function(
    phi: &StructureFunction,
    p: usize,
    tol: f64,
) -> StructureFunctionReport {
    let phi_at_zero = phi.eval(0.0);
    let phi_at_top = phi.eval((p + 1) as f64);
    let interior: Vec<f64> = (1..=p).map(|k| phi.eval(k as f64)).collect();
    StructureFunctionReport {
        p,
        tol,
        phi_at_zero,
        phi_at_top,
        zero_at_origin: phi_at_zero.abs() <= tol,
        zero_at_top: phi_at_top.abs() <= tol,
        positive: interior.iter().all(|v| *v > tol),
        interior,
    }
}
