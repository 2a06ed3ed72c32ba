use std::collections::BTreeMap;

use serde::Serialize;

use crate::liealg::{poisson_bracket, StructureConstants};
use crate::linalg::{echelon_basis, Matrix};
use crate::poly::{monomials_up_to_degree, Monomial, Polynomial, Variables};

use super::{
    coefficient_rows, expand, generator_vars, CommutantError, Generator, MonomialBasis,
    PolynomialInGenerators,
};

/// Generators together with their Poisson bracket table written as
/// polynomials in the generators.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraPresentation {
    pub ambient: Variables,
    pub generators: Vec<Generator>,
    pub gen_vars: Variables,
    /// `{A_i, A_j}` for `i < j`, zero entries included.
    pub relations: BTreeMap<(usize, usize), PolynomialInGenerators>,
    pub center: Vec<String>,
}

impl AlgebraPresentation {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `{A_i, A_j}` for any pair, using antisymmetry.
    pub fn relation(&self, i: usize, j: usize) -> PolynomialInGenerators {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Polynomial::zero(&self.gen_vars),
            Less => self.relations[&(i, j)].clone(),
            Greater => -&self.relations[&(j, i)],
        }
    }

    pub fn expand(&self, p: &PolynomialInGenerators) -> Polynomial {
        expand(p, &self.generators, &self.ambient).expect("generator ring matches")
    }

    /// Re-expands every relation and compares with the ambient bracket.
    pub fn verify(&self, c: &StructureConstants) -> bool {
        self.relations.iter().all(|(&(i, j), rhs)| {
            poisson_bracket(&self.generators[i].poly, &self.generators[j].poly, c)
                .map(|b| b == self.expand(rhs))
                .unwrap_or(false)
        })
    }

    /// Non-zero relations as `(A_i, A_j, rhs)` strings.
    pub fn nonzero_relations(&self) -> Vec<RelationEntry> {
        self.relations
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(&(i, j), r)| RelationEntry {
                left: self.generators[i].name.clone(),
                right: self.generators[j].name.clone(),
                value: r.to_string(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationEntry {
    pub left: String,
    pub right: String,
    pub value: String,
}

/// Writes each `{A_i, A_j}` as a polynomial in the generators of
/// generator-degree at most `maxdeg`.
///
/// The ansatz uses generator monomials whose weighted degree (weights are
/// the ambient degrees of the generators) equals the ambient degree of the
/// bracket. When several expressions exist, the one reduced against the
/// echelon basis of the syzygies is returned.
pub fn closure_relations(
    gens: &[Generator],
    c: &StructureConstants,
    maxdeg: u32,
) -> Result<AlgebraPresentation, CommutantError> {
    if maxdeg == 0 {
        return Err(CommutantError::ZeroDegree);
    }
    let gen_vars = generator_vars(gens)?;
    for g in gens {
        if g.poly.vars() != c.vars() {
            return Err(crate::poly::PolyError::RingMismatch {
                left: c.vars().names().join(","),
                right: g.poly.vars().names().join(","),
            }
            .into());
        }
        if g.poly.degree().unwrap_or(0) == 0 {
            return Err(CommutantError::ConstantGenerator {
                name: g.name.clone(),
            });
        }
    }
    let weights: Vec<u32> = gens.iter().map(|g| g.poly.degree().unwrap()).collect();
    let homogeneous = gens.iter().all(|g| g.poly.is_homogeneous());
    let candidates = monomials_up_to_degree(gens.len(), 1, maxdeg);
    let mut expansions: BTreeMap<Monomial, Polynomial> = BTreeMap::new();

    let mut relations = BTreeMap::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let bracket = poisson_bracket(&gens[i].poly, &gens[j].poly, c)?;
            let rhs = if bracket.is_zero() {
                Polynomial::zero(&gen_vars)
            } else {
                let target = bracket.degree().unwrap();
                let cols: Vec<Monomial> = candidates
                    .iter()
                    .filter(|m| {
                        let w = m.weighted_degree(&weights);
                        if homogeneous {
                            w == target
                        } else {
                            w <= target
                        }
                    })
                    .cloned()
                    .collect();
                express(&bracket, &cols, gens, &gen_vars, &mut expansions).ok_or_else(|| {
                    CommutantError::NotClosed {
                        i: gens[i].name.clone(),
                        j: gens[j].name.clone(),
                    }
                })?
            };
            relations.insert((i, j), rhs);
        }
    }
    let mut presentation = AlgebraPresentation {
        ambient: c.vars().clone(),
        generators: gens.to_vec(),
        gen_vars,
        relations,
        center: Vec::new(),
    };
    if !presentation.verify(c) {
        return Err(CommutantError::VerificationFailed);
    }
    presentation.center = center_of(&presentation, c);
    Ok(presentation)
}

fn express(
    target: &Polynomial,
    cols: &[Monomial],
    gens: &[Generator],
    gen_vars: &Variables,
    cache: &mut BTreeMap<Monomial, Polynomial>,
) -> Option<PolynomialInGenerators> {
    if cols.is_empty() {
        return None;
    }
    let ambient = target.vars();
    let images: Vec<Polynomial> = cols
        .iter()
        .map(|m| {
            cache
                .entry(m.clone())
                .or_insert_with(|| {
                    let p = Polynomial::monomial(gen_vars, m.clone(), crate::rational::int(1));
                    expand(&p, gens, ambient).expect("generator ring matches")
                })
                .clone()
        })
        .collect();
    // Include the target so its monomials get rows too.
    let mut all = images.clone();
    all.push(target.clone());
    let mut rows = coefficient_rows(&all);
    let b: Vec<_> = rows.iter_mut().map(|r| r.pop().unwrap()).collect();
    let a = Matrix::from_rows(rows, cols.len());
    let x = a.solve(&b)?;
    let syz = a.nullspace();
    let x = if syz.is_empty() {
        x
    } else {
        echelon_basis(&syz, cols.len()).reduce(&x)
    };
    let basis = MonomialBasis::new(cols.to_vec());
    let p = basis.poly(gen_vars, &x);
    debug_assert_eq!(&expand(&p, gens, ambient).unwrap(), target);
    Some(p)
}

/// Generators whose bracket with every generator vanishes in the ambient
/// ring.
pub fn center_of(presentation: &AlgebraPresentation, c: &StructureConstants) -> Vec<String> {
    let gens = &presentation.generators;
    (0..gens.len())
        .filter(|&i| {
            (0..gens.len()).all(|j| {
                i == j
                    || poisson_bracket(&gens[i].poly, &gens[j].poly, c)
                        .map(|b| b.is_zero())
                        .unwrap_or(false)
            })
        })
        .map(|i| gens[i].name.clone())
        .collect()
}
