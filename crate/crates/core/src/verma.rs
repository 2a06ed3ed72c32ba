//! Truncated F-chain modules of the cubic algebra
//!
//! ```text
//! [X1, X2] = F
//! [X1, F]  = u1 X1² + u2 X1 + u3 X2 + u
//! [X2, F]  = v1 X1³ + v2 X1² + v3 X1 − u2 X2 − u1 {X1, X2} + v
//! ```
//!
//! on the basis `ψ_m = F^m Ψ`, `0 ≤ m ≤ M`. `F` and `X1` act as prescribed;
//! the banded action of `X2` is reconstructed by a minimum-norm least-squares
//! solve of the relations restricted to interior rows.

use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{Field, Matrix};

/// Offsets of the non-zero diagonals of `X2` (row minus column).
pub const DEFAULT_BAND: [i64; 5] = [-3, -2, -1, 0, 2];

/// Smallest truncation with a non-empty interior.
pub const MIN_TRUNCATION: usize = 6;

/// Highest degree tried when fitting band coefficients as polynomials in `m`.
pub const MAX_FIT_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicAlgebraSpec<T> {
    pub u1: T,
    pub u2: T,
    pub u3: T,
    pub u: T,
    pub v1: T,
    pub v2: T,
    pub v3: T,
    pub v: T,
}

impl<T: Field> CubicAlgebraSpec<T> {
    pub fn zero() -> Self {
        CubicAlgebraSpec {
            u1: T::zero(),
            u2: T::zero(),
            u3: T::zero(),
            u: T::zero(),
            v1: T::zero(),
            v2: T::zero(),
            v3: T::zero(),
            v: T::zero(),
        }
    }

    /// The cubic term is present.
    pub fn is_cubic(&self) -> bool {
        !self.v1.is_negligible()
    }

    fn u_free(&self) -> bool {
        self.u1.is_negligible() && self.u2.is_negligible() && self.u3.is_negligible()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedModule<T> {
    /// Truncation order; the basis is `ψ_0 … ψ_M`.
    pub order: usize,
    pub e: T,
    pub lambda: T,
    pub u: T,
    pub x1: Matrix<T>,
    pub f: Matrix<T>,
    pub x2: Option<Matrix<T>>,
    /// `E = 0`, so `F` vanishes and the chain does not move.
    pub degenerate: bool,
}

impl<T: Field> TruncatedModule<T> {
    pub fn dim(&self) -> usize {
        self.order + 1
    }

    /// Rows `3 ≤ m ≤ M − 3`, untouched by the truncation of a band reaching
    /// three below and two above the diagonal.
    pub fn interior(&self) -> RangeInclusive<usize> {
        3..=self.order - 3
    }

    pub fn with_x2(mut self, x2: Matrix<T>) -> Self {
        assert_eq!((x2.rows(), x2.cols()), (self.dim(), self.dim()));
        self.x2 = Some(x2);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `[X1, X2] = F`
    Commutator,
    /// `[X2, F] = v1 X1³ + v2 X1² + v3 X1 + v`
    Cubic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandCoefficient<T> {
    pub k: i64,
    pub m: usize,
    pub value: T,
    /// Whether the entry enters any interior equation. Unconstrained
    /// entries come out as zero from the minimum-norm solve.
    pub constrained: bool,
}

/// `c_k(m) ≈ Σ coefficients[i] m^i` over the constrained columns.
#[derive(Debug, Clone, PartialEq)]
pub struct BandFit<T> {
    pub k: i64,
    pub ms: Vec<usize>,
    pub degree: usize,
    pub coefficients: Vec<T>,
    pub max_deviation: f64,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandSolution<T> {
    pub module: TruncatedModule<T>,
    pub band: Vec<i64>,
    pub coefficients: Vec<BandCoefficient<T>>,
    pub unknowns: usize,
    pub equations: usize,
    pub residual_sum_squares: T,
    pub max_residual_commutator: T,
    pub max_residual_cubic: T,
    pub fits: Vec<BandFit<T>>,
}

impl<T: Field> BandSolution<T> {
    pub fn coefficient(&self, k: i64, m: usize) -> Option<&T> {
        self.coefficients
            .iter()
            .find(|c| c.k == k && c.m == m)
            .map(|c| &c.value)
    }
}

/// Best band solution together with where it fails.
#[derive(Debug, Clone, PartialEq)]
pub struct InfeasibilityCertificate<T> {
    pub relation: Relation,
    pub row: usize,
    pub col: usize,
    pub residual: T,
    pub solution: BandSolution<T>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VermaError<T: Field> {
    #[error("truncation order {0} is below the minimum {MIN_TRUNCATION}")]
    TooSmall(usize),
    #[error("the band solver needs u1 = u2 = u3 = 0")]
    UnsupportedSpec,
    #[error("band offset {0} is out of range")]
    BadBand(i64),
    #[error("X2 has not been set on this module")]
    MissingX2,
    #[error(
        "no band solution within tolerance: {:?} residual {} at ({}, {}), residual sum of squares {}",
        .0.relation, .0.residual.magnitude(), .0.row, .0.col, .0.solution.residual_sum_squares.magnitude()
    )]
    InfeasibleAtBound(Box<InfeasibilityCertificate<T>>),
}

/// `F ψ_m = E ψ_{m+1}` and `X1 ψ_m = ((m − 2)u + λ) ψ_m`.
pub fn build_base_actions<T: Field>(
    e: T,
    lambda: T,
    u: T,
    order: usize,
) -> Result<TruncatedModule<T>, VermaError<T>> {
    if order < MIN_TRUNCATION {
        return Err(VermaError::TooSmall(order));
    }
    let n = order + 1;
    let mut f = Matrix::zeros(n, n);
    for m in 0..order {
        f[(m + 1, m)] = e.clone();
    }
    let diag: Vec<T> = (0..n)
        .map(|m| T::from_i64(m as i64 - 2) * u.clone() + lambda.clone())
        .collect();
    Ok(TruncatedModule {
        order,
        degenerate: e.is_negligible(),
        e,
        lambda,
        u,
        x1: Matrix::diagonal(&diag),
        f,
        x2: None,
    })
}

fn matrix_poly<T: Field>(x: &Matrix<T>, coeffs: &[T]) -> Matrix<T> {
    // coeffs ascending: c0 I + c1 X + c2 X² + …
    let n = x.rows();
    let mut out = Matrix::zeros(n, n);
    let mut power = Matrix::identity(n);
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            power = power.matmul(x);
        }
        if *c != T::zero() {
            out = out.add_mat(&power.scale(c));
        }
    }
    out
}

/// Solves for `X2` with non-zero diagonals at the offsets in `band`,
/// imposing `[X1, X2] = F` and the cubic relation on interior rows. The
/// minimum-norm least-squares solution is returned when its largest residual
/// is at most `tol`; otherwise it comes back inside an infeasibility
/// certificate. Pass `tol = 0.0` for exact arithmetic.
pub fn solve_x2_band<T: Field>(
    spec: &CubicAlgebraSpec<T>,
    base: &TruncatedModule<T>,
    band: &[i64],
    tol: f64,
) -> Result<BandSolution<T>, VermaError<T>> {
    if !spec.u_free() {
        return Err(VermaError::UnsupportedSpec);
    }
    let order = base.order;
    let n = base.dim();
    for &k in band {
        if k.unsigned_abs() as usize > order {
            return Err(VermaError::BadBand(k));
        }
    }

    let mut unknowns: Vec<(i64, usize)> = Vec::new();
    for m in 0..n {
        for &k in band {
            let r = m as i64 + k;
            if r >= 0 && r < n as i64 {
                unknowns.push((k, m));
            }
        }
    }

    let interior: Vec<usize> = base.interior().collect();
    let eq_index = |rel: usize, r: usize, c: usize| -> Option<usize> {
        if r < 3 || r > order - 3 {
            return None;
        }
        Some(rel * interior.len() * n + (r - 3) * n + c)
    };
    let neq = 2 * interior.len() * n;
    let d: Vec<T> = (0..n).map(|m| base.x1[(m, m)].clone()).collect();

    let mut a = Matrix::zeros(neq, unknowns.len());
    for (j, &(k, m)) in unknowns.iter().enumerate() {
        let r = (m as i64 + k) as usize;
        // [X1, X2] at (r, m)
        if let Some(i) = eq_index(0, r, m) {
            a[(i, j)] = d[r].clone() - d[m].clone();
        }
        // (X2 F)(r, m − 1) = X2(r, m) E
        if m >= 1 {
            if let Some(i) = eq_index(1, r, m - 1) {
                a[(i, j)] = a[(i, j)].clone() + base.e.clone();
            }
        }
        // (F X2)(r + 1, m) = E X2(r, m)
        if r + 1 < n {
            if let Some(i) = eq_index(1, r + 1, m) {
                a[(i, j)] = a[(i, j)].clone() - base.e.clone();
            }
        }
    }

    let cubic = matrix_poly(
        &base.x1,
        &[
            spec.v.clone(),
            spec.v3.clone(),
            spec.v2.clone(),
            spec.v1.clone(),
        ],
    );
    let mut b = vec![T::zero(); neq];
    for &r in &interior {
        for c in 0..n {
            b[eq_index(0, r, c).unwrap()] = base.f[(r, c)].clone();
            b[eq_index(1, r, c).unwrap()] = cubic[(r, c)].clone();
        }
    }

    let x = a.least_squares_min_norm(&b);
    let ax = a.mul_vec(&x);
    let residual: Vec<T> = ax.into_iter().zip(&b).map(|(p, q)| p - q.clone()).collect();

    let mut x2 = Matrix::zeros(n, n);
    let mut coefficients = Vec::with_capacity(unknowns.len());
    for (j, (&(k, m), value)) in unknowns.iter().zip(&x).enumerate() {
        x2[((m as i64 + k) as usize, m)] = value.clone();
        let constrained = (0..neq).any(|i| a[(i, j)] != T::zero());
        coefficients.push(BandCoefficient {
            k,
            m,
            value: value.clone(),
            constrained,
        });
    }

    let half = neq / 2;
    let arg_max = |range: std::ops::Range<usize>| -> (usize, T) {
        let mut best = (range.start, T::zero());
        for i in range {
            if residual[i].magnitude() > best.1.magnitude() {
                best = (i, residual[i].abs_val());
            }
        }
        best
    };
    let (i_comm, max_comm) = arg_max(0..half);
    let (i_cubic, max_cubic) = arg_max(half..neq);
    let rss = residual
        .iter()
        .fold(T::zero(), |acc, r| acc + r.clone() * r.clone());

    let fits = band
        .iter()
        .map(|&k| fit_band(k, &coefficients, tol))
        .collect();
    let solution = BandSolution {
        module: base.clone().with_x2(x2),
        band: band.to_vec(),
        coefficients,
        unknowns: unknowns.len(),
        equations: neq,
        residual_sum_squares: rss,
        max_residual_commutator: max_comm.clone(),
        max_residual_cubic: max_cubic.clone(),
        fits,
    };

    let (relation, i, worst) = if max_cubic.magnitude() > max_comm.magnitude() {
        (Relation::Cubic, i_cubic - half, max_cubic)
    } else {
        (Relation::Commutator, i_comm, max_comm)
    };
    if worst.magnitude() <= tol {
        return Ok(solution);
    }
    Err(VermaError::InfeasibleAtBound(Box::new(
        InfeasibilityCertificate {
            relation,
            row: 3 + i / n,
            col: i % n,
            residual: worst,
            solution,
        },
    )))
}

/// Lowest-degree polynomial in `m` through the constrained values of `c_k`.
fn fit_band<T: Field>(k: i64, coefficients: &[BandCoefficient<T>], tol: f64) -> BandFit<T> {
    let points: Vec<(usize, T)> = coefficients
        .iter()
        .filter(|c| c.k == k && c.constrained)
        .map(|c| (c.m, c.value.clone()))
        .collect();
    let ms: Vec<usize> = points.iter().map(|p| p.0).collect();
    if points.is_empty() {
        return BandFit {
            k,
            ms,
            degree: 0,
            coefficients: Vec::new(),
            max_deviation: 0.0,
            exact: true,
        };
    }
    let top = MAX_FIT_DEGREE.min(points.len() - 1);
    let values: Vec<T> = points.iter().map(|p| p.1.clone()).collect();
    let mut best = None;
    for degree in 0..=top {
        let rows: Vec<Vec<T>> = ms
            .iter()
            .map(|&m| {
                let mut row = Vec::with_capacity(degree + 1);
                let mut p = T::one();
                for _ in 0..=degree {
                    row.push(p.clone());
                    p = p * T::from_i64(m as i64);
                }
                row
            })
            .collect();
        let v = Matrix::from_rows(rows, degree + 1);
        let coeffs = v.least_squares_min_norm(&values);
        let max_deviation = v
            .mul_vec(&coeffs)
            .into_iter()
            .zip(&values)
            .map(|(p, q)| (p - q.clone()).magnitude())
            .fold(0.0, f64::max);
        let exact = max_deviation <= tol;
        let fit = BandFit {
            k,
            ms: ms.clone(),
            degree,
            coefficients: coeffs,
            max_deviation,
            exact,
        };
        if exact {
            return fit;
        }
        best = Some(fit);
    }
    best.expect("at least one degree is tried")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub interior: (usize, usize),
    /// `[X1, X2] − F`
    pub commutator: f64,
    /// `[X1, F] − (u1 X1² + u2 X1 + u3 X2 + u·I)`
    pub x1f_constant: f64,
    /// `[X1, F] − u·F`
    pub x1f_scaled: f64,
    /// `[X2, F] − (v1 X1³ + v2 X1² + v3 X1 − u2 X2 − u1 {X1, X2} + v)`
    pub cubic: f64,
    pub casimir_diagonal: Vec<f64>,
    pub casimir_mean: f64,
    pub casimir_variance: f64,
    /// Frobenius norm of the off-diagonal part of the Casimir on interior rows.
    pub casimir_off_diagonal: f64,
}

/// Residuals of the three relations on interior rows, and the Casimir
///
/// ```text
/// C = F² − u1 {X1², X2} − u2 {X1, X2} + v1/2 X1⁴ + 2/3 v2 X1³
///     + (v3 + u1²) X1² + (u1 u2 + 2v) X1 − 2u X2 − u3 X2²
/// ```
pub fn verify_cubic_relations<T: Field>(
    module: &TruncatedModule<T>,
    spec: &CubicAlgebraSpec<T>,
) -> Result<ResidualReport, VermaError<T>> {
    let x2 = module.x2.as_ref().ok_or(VermaError::MissingX2)?;
    let x1 = &module.x1;
    let f = &module.f;
    let n = module.dim();
    let id = Matrix::<T>::identity(n);
    let rows = module.interior();

    let x1sq = x1.matmul(x1);
    let x1x2 = x1.anticommutator(x2);

    let commutator = x1.commutator(x2).sub_mat(f);
    let x1f = x1.commutator(f);
    let x1f_rhs = x1sq
        .scale(&spec.u1)
        .add_mat(&x1.scale(&spec.u2))
        .add_mat(&x2.scale(&spec.u3))
        .add_mat(&id.scale(&spec.u));
    let x1f_constant = x1f.sub_mat(&x1f_rhs);
    let x1f_scaled = x1f.sub_mat(&f.scale(&module.u));
    let cubic_rhs = matrix_poly(
        x1,
        &[
            spec.v.clone(),
            spec.v3.clone(),
            spec.v2.clone(),
            spec.v1.clone(),
        ],
    )
    .sub_mat(&x2.scale(&spec.u2))
    .sub_mat(&x1x2.scale(&spec.u1));
    let cubic = x2.commutator(f).sub_mat(&cubic_rhs);

    let two = T::from_i64(2);
    let three = T::from_i64(3);
    let casimir = matrix_poly(
        x1,
        &[
            T::zero(),
            spec.u1.clone() * spec.u2.clone() + two.clone() * spec.v.clone(),
            spec.v3.clone() + spec.u1.clone() * spec.u1.clone(),
            two.clone() * spec.v2.clone() / three,
            spec.v1.clone() / two.clone(),
        ],
    )
    .add_mat(&f.matmul(f))
    .sub_mat(&x1sq.anticommutator(x2).scale(&spec.u1))
    .sub_mat(&x1x2.scale(&spec.u2))
    .sub_mat(&x2.scale(&(two * spec.u.clone())))
    .sub_mat(&x2.matmul(x2).scale(&spec.u3));

    let casimir_diagonal: Vec<f64> = rows
        .clone()
        .map(|r| casimir[(r, r)].magnitude_signed())
        .collect();
    let count = casimir_diagonal.len() as f64;
    let casimir_mean = casimir_diagonal.iter().sum::<f64>() / count;
    let casimir_variance = casimir_diagonal
        .iter()
        .map(|d| (d - casimir_mean).powi(2))
        .sum::<f64>()
        / count;
    let mut off = 0.0;
    for r in rows.clone() {
        for c in 0..n {
            if c != r {
                off += casimir[(r, c)].magnitude().powi(2);
            }
        }
    }

    Ok(ResidualReport {
        interior: (*rows.start(), *rows.end()),
        commutator: commutator.max_abs_rows(rows.clone()),
        x1f_constant: x1f_constant.max_abs_rows(rows.clone()),
        x1f_scaled: x1f_scaled.max_abs_rows(rows.clone()),
        cubic: cubic.max_abs_rows(rows),
        casimir_diagonal,
        casimir_mean,
        casimir_variance,
        casimir_off_diagonal: off.sqrt(),
    })
}

trait SignedMagnitude {
    fn magnitude_signed(&self) -> f64;
}

impl<T: Field> SignedMagnitude for T {
    fn magnitude_signed(&self) -> f64 {
        if self.abs_val() == *self {
            self.magnitude()
        } else {
            -self.magnitude()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, parse_rational, Rational};

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn base_actions() {
        let m = build_base_actions(int(1), int(2), int(1), 8).unwrap();
        let diag: Vec<Rational> = (0..9).map(|i| m.x1[(i, i)].clone()).collect();
        assert_eq!(diag, (0..9).map(int).collect::<Vec<_>>());
        assert_eq!(m.f[(1, 0)], int(1));
        assert_eq!(m.f[(8, 7)], int(1));
        assert_eq!(m.f[(0, 1)], int(0));
        assert!(!m.degenerate);

        let scalar = build_base_actions(int(1), int(5), int(0), 6).unwrap();
        assert_eq!(scalar.x1, Matrix::identity(7).scale(&int(5)));
        let flat = build_base_actions(int(0), int(1), int(1), 6).unwrap();
        assert!(flat.degenerate);
        assert_eq!(flat.f, Matrix::zeros(7, 7));
        assert_eq!(
            build_base_actions(int(1), int(1), int(1), 5),
            Err(VermaError::TooSmall(5))
        );
    }

    #[test]
    fn zero_spec_zero_chain_is_solved_by_zero() {
        let base = build_base_actions(int(0), int(1), int(1), 7).unwrap();
        let sol = solve_x2_band(&CubicAlgebraSpec::zero(), &base, &DEFAULT_BAND, 0.0).unwrap();
        assert!(sol.coefficients.iter().all(|c| c.value == int(0)));
        assert_eq!(sol.residual_sum_squares, int(0));
    }

    #[test]
    fn scalar_x1_cannot_produce_f() {
        let base = build_base_actions(int(1), int(0), int(0), 8).unwrap();
        match solve_x2_band(&CubicAlgebraSpec::zero(), &base, &DEFAULT_BAND, 0.0) {
            Err(VermaError::InfeasibleAtBound(cert)) => {
                assert_eq!(cert.relation, Relation::Commutator);
                assert_eq!(cert.residual, int(1));
                assert_eq!(cert.solution.max_residual_cubic, int(0));
            }
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }

    #[test]
    fn small_instance_matches_dense_oracle() {
        let fixture: serde_json::Value =
            serde_json::from_str(include_str!("../fixtures/verma_small_instance.json")).unwrap();
        let spec = CubicAlgebraSpec {
            v1: int(1),
            ..CubicAlgebraSpec::zero()
        };
        let base = build_base_actions(int(1), int(1), int(1), 10).unwrap();
        let cert = match solve_x2_band(&spec, &base, &DEFAULT_BAND, 0.0) {
            Err(VermaError::InfeasibleAtBound(c)) => c,
            other => panic!("expected infeasibility, got {other:?}"),
        };
        let sol = &cert.solution;
        assert_eq!((sol.unknowns, sol.equations), (47, 110));
        let listed = fixture["coefficients"].as_array().unwrap();
        for c in &sol.coefficients {
            let want = listed
                .iter()
                .find(|e| e["k"] == c.k && e["m"] == c.m)
                .map(|e| q(e["value"].as_str().unwrap()))
                .unwrap_or_else(|| int(0));
            assert_eq!(c.value, want, "c_{}({})", c.k, c.m);
        }
        assert_eq!(
            sol.residual_sum_squares,
            q(fixture["residual_sum_squares"].as_str().unwrap())
        );
        assert_eq!(sol.max_residual_commutator, q("1151/11"));
        assert_eq!(sol.max_residual_cubic, q("1151/11"));
    }

    #[test]
    fn f64_solve_agrees_with_exact() {
        let spec = CubicAlgebraSpec {
            v1: 1.0,
            ..CubicAlgebraSpec::zero()
        };
        let base = build_base_actions(1.0, 1.0, 1.0, 10).unwrap();
        let Err(VermaError::InfeasibleAtBound(cert)) =
            solve_x2_band(&spec, &base, &DEFAULT_BAND, 1e-9)
        else {
            panic!("expected infeasibility");
        };
        let got = cert.solution.coefficient(-1, 8).unwrap();
        assert!((got - 1151.0 / 11.0).abs() < 1e-8);
        assert!((cert.solution.residual_sum_squares - 437434.0 / 11.0).abs() < 1e-6);
    }

    #[test]
    fn x1f_both_readings_reported() {
        let base = build_base_actions(int(1), int(2), int(1), 8).unwrap();
        let x2 = Matrix::zeros(9, 9);
        let module = base.with_x2(x2);
        let spec = CubicAlgebraSpec {
            u: int(1),
            ..CubicAlgebraSpec::zero()
        };
        let rep = verify_cubic_relations(&module, &spec).unwrap();
        assert_eq!(rep.x1f_scaled, 0.0);
        assert_eq!(rep.x1f_constant, 1.0);
        assert_eq!(rep.interior, (3, 5));
        // C = F² − 2 X2 with X2 = 0 has a zero diagonal and a unit second subdiagonal
        assert_eq!(rep.casimir_diagonal, vec![0.0, 0.0, 0.0]);
        assert!((rep.casimir_off_diagonal - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn raising_band_closes_exactly() {
        // X2 = F/u solves [X1, X2] = F and commutes with F
        let base = build_base_actions(int(2), int(0), int(1), 8).unwrap();
        let spec = CubicAlgebraSpec::zero();
        let sol = solve_x2_band(&spec, &base, &[1], 0.0).unwrap();
        assert_eq!(sol.max_residual_commutator, int(0));
        assert_eq!(sol.residual_sum_squares, int(0));
        let fit = &sol.fits[0];
        assert!(fit.exact);
        assert_eq!((fit.degree, fit.coefficients.clone()), (0, vec![int(2)]));
        let rep = verify_cubic_relations(&sol.module, &spec).unwrap();
        assert_eq!((rep.commutator, rep.cubic, rep.x1f_scaled), (0.0, 0.0, 0.0));
        assert_eq!(rep.casimir_variance, 0.0);
    }

    #[test]
    fn nonzero_u_terms_rejected() {
        let base = build_base_actions(int(1), int(1), int(1), 8).unwrap();
        let spec = CubicAlgebraSpec {
            u3: int(1),
            ..CubicAlgebraSpec::zero()
        };
        assert_eq!(
            solve_x2_band(&spec, &base, &DEFAULT_BAND, 0.0),
            Err(VermaError::UnsupportedSpec)
        );
    }
}
