use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::liealg::{poisson_bracket, StructureConstants};
use crate::linalg::{complement_basis, echelon_basis, Matrix};
use crate::poly::{monomials_up_to_degree, Polynomial};
use crate::rational::{ratio, Rational};

use super::{
    coefficient_rows, AlgebraPresentation, CommutantError, MonomialBasis, PolynomialInGenerators,
};

/// Bracket of the free Poisson algebra on the generator symbols whose
/// brackets of generators are given by the relation table:
/// `{P, Q} = Σ_{i<j} R_ij (∂_i P ∂_j Q − ∂_j P ∂_i Q)`.
pub fn abstract_bracket(
    p: &PolynomialInGenerators,
    q: &PolynomialInGenerators,
    pres: &AlgebraPresentation,
) -> PolynomialInGenerators {
    let r = pres.len();
    let dp: Vec<_> = (0..r).map(|i| p.partial_derivative(i)).collect();
    let dq: Vec<_> = (0..r).map(|i| q.partial_derivative(i)).collect();
    let mut out = Polynomial::zero(&pres.gen_vars);
    for (&(i, j), rel) in &pres.relations {
        if rel.is_zero() {
            continue;
        }
        let w = &(&dp[i] * &dq[j]) - &(&dp[j] * &dq[i]);
        if !w.is_zero() {
            out = &out + &(rel * &w);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CasimirEntry {
    /// Generator-degree at which the Casimir first appears.
    pub degree: u32,
    pub expression: PolynomialInGenerators,
    pub ambient: Polynomial,
    /// `{K, A_j} = 0` in the ambient ring for every generator.
    pub commutes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CasimirReport {
    pub casimirs: Vec<CasimirEntry>,
    /// Dimension of the Casimir space in generator-degree `1..=d`, per `d`.
    pub kernel_dims: Vec<usize>,
    /// Rank of the Jacobian of the Casimirs as functions of the ambient
    /// coordinates.
    pub ambient_jacobian_rank: usize,
    /// Rank of the Jacobian as functions of independent generator symbols.
    pub generator_jacobian_rank: usize,
    pub seed: u64,
    pub points_tried: usize,
}

/// Casimirs of the presented algebra up to generator-degree `maxdeg`.
///
/// The search runs in the free Poisson algebra on the generator symbols, so
/// each returned expression is a Casimir regardless of ambient syzygies. At
/// each degree, elements of the span of lower-degree Casimirs and of their
/// products are dropped, and the remaining representatives are put in
/// reduced echelon form over the generator monomials (higher degree first).
pub fn find_casimirs(
    pres: &AlgebraPresentation,
    c: &StructureConstants,
    maxdeg: u32,
    seed: u64,
) -> Result<CasimirReport, CommutantError> {
    if maxdeg == 0 {
        return Err(CommutantError::ZeroDegree);
    }
    let gv = &pres.gen_vars;
    let r = pres.len();
    let gen_polys: Vec<Polynomial> = (0..r).map(|i| Polynomial::var(gv, i)).collect();
    // kernels[d - 1]: Casimir basis in generator-degree 1..=d.
    let mut kernels: Vec<Vec<Polynomial>> = Vec::new();
    let mut found: Vec<CasimirEntry> = Vec::new();
    for d in 1..=maxdeg {
        let basis = MonomialBasis::new(monomials_up_to_degree(r, 1, d));
        let mut rows = Vec::new();
        for a in &gen_polys {
            let images: Vec<Polynomial> = basis
                .monomials
                .iter()
                .map(|m| {
                    abstract_bracket(
                        &Polynomial::monomial(gv, m.clone(), crate::rational::int(1)),
                        a,
                        pres,
                    )
                })
                .collect();
            rows.extend(coefficient_rows(&images));
        }
        let kernel = if rows.is_empty() {
            Matrix::<Rational>::identity(basis.len()).to_rows()
        } else {
            Matrix::from_rows(rows, basis.len()).nullspace()
        };
        let z = echelon_basis(&kernel, basis.len()).basis_rows();
        let z_polys: Vec<Polynomial> = z.iter().map(|v| basis.poly(gv, v)).collect();

        let mut decomposable: Vec<Vec<Rational>> = Vec::new();
        if d > 1 {
            for p in &kernels[d as usize - 2] {
                decomposable.push(basis.coords(p).expect("lower degree fits"));
            }
            for d1 in 1..d {
                for d2 in d1..d {
                    if d1 + d2 > d {
                        break;
                    }
                    let (k1, k2) = (&kernels[d1 as usize - 1], &kernels[d2 as usize - 1]);
                    for (i, p) in k1.iter().enumerate() {
                        let start = if d1 == d2 { i } else { 0 };
                        for q in &k2[start..] {
                            decomposable.push(basis.coords(&(p * q)).expect("product fits"));
                        }
                    }
                }
            }
        }
        for v in complement_basis(&decomposable, &z, basis.len()) {
            let expression = basis.poly(gv, &v);
            let ambient = pres.expand(&expression);
            let commutes = pres.generators.iter().all(|g| {
                poisson_bracket(&ambient, &g.poly, c)
                    .map(|b| b.is_zero())
                    .unwrap_or(false)
            });
            found.push(CasimirEntry {
                degree: d,
                expression,
                ambient,
                commutes,
            });
        }
        kernels.push(z_polys);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ambient: Vec<Polynomial> = found.iter().map(|k| k.ambient.clone()).collect();
    let symbolic: Vec<Polynomial> = found.iter().map(|k| k.expression.clone()).collect();
    let mut points_tried = 0;
    let (mut amb_rank, mut gen_rank) = (0, 0);
    // A rank deficit is re-tested at a second point before it is reported.
    for _ in 0..2 {
        points_tried += 1;
        amb_rank = amb_rank.max(jacobian_rank(&ambient, &random_point(&mut rng, c.dim())));
        gen_rank = gen_rank.max(jacobian_rank(&symbolic, &random_point(&mut rng, r)));
        if amb_rank == found.len() && gen_rank == found.len() {
            break;
        }
    }
    Ok(CasimirReport {
        kernel_dims: kernels.iter().map(Vec::len).collect(),
        casimirs: found,
        ambient_jacobian_rank: amb_rank,
        generator_jacobian_rank: gen_rank,
        seed,
        points_tried,
    })
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| ratio(rng.random_range(-30..=30), rng.random_range(1..=11)))
        .collect()
}

/// Rank of `[∂f_t/∂x_i]` evaluated at `point`.
pub(crate) fn jacobian_rank(fs: &[Polynomial], point: &[Rational]) -> usize {
    if fs.is_empty() {
        return 0;
    }
    let n = point.len();
    let rows: Vec<Vec<Rational>> = fs
        .iter()
        .map(|f| {
            (0..n)
                .map(|i| {
                    f.partial_derivative(i)
                        .evaluate(point)
                        .expect("point length")
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows, n).rank()
}
