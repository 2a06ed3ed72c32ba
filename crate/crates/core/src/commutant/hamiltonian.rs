use serde::Serialize;

use crate::liealg::{poisson_bracket, StructureConstants, SubalgebraSelection};
use crate::poly::Polynomial;
use crate::rational::Rational;

use super::{CommutantError, Generator};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HamiltonianReport {
    pub hamiltonian: Polynomial,
    /// `(name, {H, A} == 0)` per commutant generator.
    pub brackets: Vec<(String, bool)>,
    pub verified: bool,
}

/// `H = Σ_i c_i x_{S_i} + Σ_t c_{|S|+t} K_t` for the subalgebra basis
/// `x_{S_i}` and Casimirs `K_t` of the full algebra, checked against every
/// commutant generator.
pub fn build_algebraic_hamiltonian(
    c: &StructureConstants,
    s: &SubalgebraSelection,
    casimirs: &[Polynomial],
    coefficients: &[Rational],
    generators: &[Generator],
) -> Result<HamiltonianReport, CommutantError> {
    let expected = s.len() + casimirs.len();
    if coefficients.len() != expected {
        return Err(CommutantError::CoefficientCount {
            expected,
            got: coefficients.len(),
        });
    }
    let mut h = Polynomial::zero(c.vars());
    let terms = s
        .indices()
        .iter()
        .map(|&i| Polynomial::var(c.vars(), i))
        .chain(casimirs.iter().cloned());
    for (p, coef) in terms.zip(coefficients) {
        h = h.checked_add(&p.scale(coef))?;
    }
    let brackets = generators
        .iter()
        .map(|g| Ok((g.name.clone(), poisson_bracket(&h, &g.poly, c)?.is_zero())))
        .collect::<Result<Vec<_>, CommutantError>>()?;
    let verified = brackets.iter().all(|(_, ok)| *ok);
    Ok(HamiltonianReport {
        hamiltonian: h,
        brackets,
        verified,
    })
}
