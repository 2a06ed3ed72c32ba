//! Polynomial commutants of subalgebras under the Poisson–Lie bracket,
//! their closure relations, Casimirs and algebraic Hamiltonians.

mod casimir;
mod closure;
mod hamiltonian;
mod solve;

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::LieError;
use crate::poly::{Monomial, PolyError, Polynomial, Variables};
use crate::rational::Rational;

pub use casimir::{abstract_bracket, find_casimirs, CasimirEntry, CasimirReport};
pub use closure::{center_of, closure_relations, AlgebraPresentation};
pub use hamiltonian::{build_algebraic_hamiltonian, HamiltonianReport};
pub use solve::{
    compute_commutant, filter_new_generators, solve_commutant_degree, CommutantBasis,
    DegreeSolutions,
};

/// A polynomial in generator variables `A1, A2, …`. Its monomial order is the
/// same graded reverse-lexicographic order used for ambient polynomials.
pub type PolynomialInGenerators = Polynomial;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CommutantError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("structure constants fail the Jacobi identity")]
    JacobiFailed,
    #[error("selected indices do not span a subalgebra")]
    NotASubalgebra,
    #[error("degree bound must be at least 1")]
    ZeroDegree,
    #[error("generator {name} is constant")]
    ConstantGenerator { name: String },
    #[error("generator names must be distinct and non-empty")]
    BadGeneratorNames,
    #[error("bracket {{{i}, {j}}} has no expression within the degree bound")]
    NotClosed { i: String, j: String },
    #[error("relation table failed re-expansion")]
    VerificationFailed,
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("generator file: {0}")]
    Schema(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub name: String,
    pub poly: Polynomial,
}

impl Generator {
    pub fn new(name: impl Into<String>, poly: Polynomial) -> Self {
        Generator {
            name: name.into(),
            poly,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    pub generators: Vec<GeneratorEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    pub poly: String,
}

/// Reads `{"generators": [{"name": .., "poly": ..}]}` with polynomials in
/// the given ambient ring.
pub fn parse_generators(text: &str, ambient: &Variables) -> Result<Vec<Generator>, CommutantError> {
    let file: GeneratorFile =
        serde_json::from_str(text).map_err(|e| CommutantError::Schema(e.to_string()))?;
    let gens = file
        .generators
        .into_iter()
        .map(|g| Ok(Generator::new(g.name, Polynomial::parse(ambient, &g.poly)?)))
        .collect::<Result<Vec<_>, CommutantError>>()?;
    generator_vars(&gens)?;
    Ok(gens)
}

pub fn generators_to_json(gens: &[Generator]) -> String {
    let file = GeneratorFile {
        generators: gens
            .iter()
            .map(|g| GeneratorEntry {
                name: g.name.clone(),
                poly: g.poly.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("generator file serialises")
}

/// The ring of polynomials in the generator names.
pub(crate) fn generator_vars(gens: &[Generator]) -> Result<Variables, CommutantError> {
    let mut seen = std::collections::HashSet::new();
    for g in gens {
        if g.name.trim().is_empty() || !seen.insert(g.name.as_str()) {
            return Err(CommutantError::BadGeneratorNames);
        }
    }
    Ok(Variables::new(gens.iter().map(|g| g.name.clone())))
}

/// Expands a polynomial in generators into the ambient ring.
pub fn expand(
    p: &PolynomialInGenerators,
    gens: &[Generator],
    ambient: &Variables,
) -> Result<Polynomial, PolyError> {
    let images: Vec<Polynomial> = gens.iter().map(|g| g.poly.clone()).collect();
    p.substitute(&images, ambient)
}

/// Coordinates of polynomials with respect to a fixed list of monomials.
pub(crate) struct MonomialBasis {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `None` when `p` has a term outside the basis.
    pub fn coords(&self, p: &Polynomial) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.len()];
        for (m, c) in p.terms() {
            v[self.position(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn poly(&self, vars: &Variables, v: &[Rational]) -> Polynomial {
        Polynomial::from_terms(
            vars,
            self.monomials
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

/// Assembles rows `Σ_m coef(images[m], μ) Γ_m` over every output monomial `μ`.
pub(crate) fn coefficient_rows(images: &[Polynomial]) -> Vec<Vec<Rational>> {
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (col, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            let r = *row_of.entry(m.clone()).or_insert_with(|| {
                rows.push(vec![Rational::zero(); images.len()]);
                rows.len() - 1
            });
            rows[r][col] = c.clone();
        }
    }
    rows
}
