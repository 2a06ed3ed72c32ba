use serde::Serialize;

use crate::linalg::Matrix;

use super::{darboux2_spec, NumericQuadraticSpec, OscillatorError, StructureFunction};

/// The `(p+1)`-dimensional Fock representation of `{N, b, b†}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockRepresentation {
    pub p: usize,
    pub phi: StructureFunction,
    pub n: Matrix<f64>,
    pub b: Matrix<f64>,
    pub bdag: Matrix<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FockResiduals {
    pub n_bdag: f64,
    pub n_b: f64,
    pub bdag_b: f64,
    /// `b b† − Φ(N+1)` on rows `0..p−1`; the top state leaves the space.
    pub b_bdag: f64,
    /// `max_{0 ≤ k ≤ p+1} |Φ(k)|`, the scale for the residuals.
    pub phi_scale: f64,
}

/// `N ψ_n = n ψ_n`, `b† ψ_n = √Φ(n+1) ψ_{n+1}`, `b ψ_n = √Φ(n) ψ_{n−1}`.
pub fn fock_representation(
    phi: &StructureFunction,
    p: usize,
) -> Result<FockRepresentation, OscillatorError> {
    for k in 1..=p {
        let v = phi.eval(k as f64);
        if v.is_nan() || v <= 0.0 {
            return Err(OscillatorError::NonUnitarizable { k, value: v });
        }
    }
    let dim = p + 1;
    let n = Matrix::diagonal(&(0..dim).map(|k| k as f64).collect::<Vec<_>>());
    let mut bdag = Matrix::zeros(dim, dim);
    let mut b = Matrix::zeros(dim, dim);
    for k in 1..dim {
        let w = phi.eval(k as f64).sqrt();
        bdag[(k, k - 1)] = w;
        b[(k - 1, k)] = w;
    }
    Ok(FockRepresentation {
        p,
        phi: phi.clone(),
        n,
        b,
        bdag,
    })
}

impl FockRepresentation {
    pub fn dim(&self) -> usize {
        self.p + 1
    }

    /// `Φ(N + shift)` as a diagonal matrix.
    pub fn phi_of_n(&self, shift: usize) -> Matrix<f64> {
        Matrix::diagonal(
            &(0..self.dim())
                .map(|k| self.phi.eval((k + shift) as f64))
                .collect::<Vec<_>>(),
        )
    }

    pub fn residuals(&self) -> FockResiduals {
        let b_bdag = self.b.matmul(&self.bdag).sub_mat(&self.phi_of_n(1));
        FockResiduals {
            n_bdag: self.n.commutator(&self.bdag).sub_mat(&self.bdag).max_abs(),
            n_b: self.n.commutator(&self.b).add_mat(&self.b).max_abs(),
            bdag_b: self
                .bdag
                .matmul(&self.b)
                .sub_mat(&self.phi_of_n(0))
                .max_abs(),
            b_bdag: if self.p == 0 {
                0.0
            } else {
                b_bdag.max_abs_rows(0..=self.p - 1)
            },
            phi_scale: self.phi.max_abs_on(self.p + 1),
        }
    }
}

fn shape(spec: &NumericQuadraticSpec) -> Result<(f64, f64), OscillatorError> {
    if spec.epsilon < 0.0 || (spec.epsilon == 0.0 && spec.delta != 0.0) {
        return Err(OscillatorError::UnsupportedSpec);
    }
    let s = spec.epsilon.sqrt();
    let t = if s > 0.0 { -spec.delta / s } else { 0.0 };
    Ok((s, t))
}

/// Coefficients `(c2, c1, c0)` of `D(x) = Φ(n+1) − Φ(n)` at `x = n + η`,
/// read off the diagonal of `[B,C]` for the realisation
/// `A = s(N+η)`, `B = t(N+η) + κ + b† + b` with `s = √ε`, `t = −δ/s`.
fn difference_coefficients(
    spec: &NumericQuadraticSpec,
    b_shift: f64,
) -> Result<(f64, f64, f64), OscillatorError> {
    if spec.alpha != 0.0 || spec.gamma != 0.0 || spec.epsilon <= 0.0 {
        return Err(OscillatorError::UnsupportedSpec);
    }
    let (s, t) = shape(spec)?;
    let c2 = spec.a * s / 2.0;
    let c1 = (spec.d * s - spec.delta * t) / (2.0 * s);
    let c0 = (spec.z - spec.delta * b_shift) / (2.0 * s);
    Ok((c2, c1, c0))
}

/// `Φ(n) = Σ_{k<n} D(k + η)`, so that `Φ(0) = 0`.
pub fn oscillator_structure_function(
    spec: &NumericQuadraticSpec,
    eta: f64,
    b_shift: f64,
) -> Result<StructureFunction, OscillatorError> {
    let (c2, c1, c0) = difference_coefficients(spec, b_shift)?;
    Ok(StructureFunction::new(vec![
        0.0,
        c2 * (1.0 / 6.0 - eta + eta * eta) + c1 * (eta - 0.5) + c0,
        c2 * (eta - 0.5) + c1 / 2.0,
        c2 / 3.0,
    ]))
}

/// The larger real root `η` of `Φ(p+1) = 0`.
pub fn solve_eta(
    spec: &NumericQuadraticSpec,
    b_shift: f64,
    p: usize,
) -> Result<f64, OscillatorError> {
    let (c2, c1, c0) = difference_coefficients(spec, b_shift)?;
    let n = (p + 1) as f64;
    let s1 = n * (n - 1.0) / 2.0;
    let s2 = (n - 1.0) * n * (2.0 * n - 1.0) / 6.0;
    let qa = c2 * n;
    let qb = 2.0 * c2 * s1 + c1 * n;
    let qc = c2 * s2 + c1 * s1 + c0 * n;
    if qa == 0.0 {
        return if qb == 0.0 {
            Err(OscillatorError::NoRealShift)
        } else {
            Ok(-qc / qb)
        };
    }
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return Err(OscillatorError::NoRealShift);
    }
    let r1 = (-qb + disc.sqrt()) / (2.0 * qa);
    let r2 = (-qb - disc.sqrt()) / (2.0 * qa);
    Ok(r1.max(r2))
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticRealization {
    pub fock: FockRepresentation,
    pub eta: f64,
    pub b_shift: f64,
    pub a: Matrix<f64>,
    pub b: Matrix<f64>,
    pub c: Matrix<f64>,
    /// `max |[A,C] − (αA² + γ{A,B} + δA + εB + ζ)|`.
    pub residual_ac: f64,
    /// `max |[B,C] − (aA² − γB² − α{A,B} + dA − δB + z)|`.
    pub residual_bc: f64,
    pub casimir_diagonal: Vec<f64>,
    pub casimir_off_diagonal: f64,
}

/// Builds `A = s(N+η)`, `B = t(N+η) + κ + b† + b`, `C = [A,B]` with
/// `s = √ε`, `t = −δ/s` and `κ = b_shift`, and reports how far the
/// quadratic relations and the Casimir are from holding.
pub fn realize_quadratic_algebra(
    spec: &NumericQuadraticSpec,
    eta: f64,
    b_shift: f64,
    phi: &StructureFunction,
    p: usize,
) -> Result<QuadraticRealization, OscillatorError> {
    let (s, t) = shape(spec)?;
    let fock = fock_representation(phi, p)?;
    let dim = fock.dim();
    let id = Matrix::<f64>::identity(dim);
    let x = fock.n.add_mat(&id.scale(&eta));
    let a = x.scale(&s);
    let b = x
        .scale(&t)
        .add_mat(&id.scale(&b_shift))
        .add_mat(&fock.bdag)
        .add_mat(&fock.b);
    let c = a.commutator(&b);
    let a2 = a.matmul(&a);
    let b2 = b.matmul(&b);
    let ab = a.anticommutator(&b);
    let ac_rhs = a2
        .scale(&spec.alpha)
        .add_mat(&ab.scale(&spec.gamma))
        .add_mat(&a.scale(&spec.delta))
        .add_mat(&b.scale(&spec.epsilon))
        .add_mat(&id.scale(&spec.zeta));
    let bc_rhs = a2
        .scale(&spec.a)
        .sub_mat(&b2.scale(&spec.gamma))
        .sub_mat(&ab.scale(&spec.alpha))
        .add_mat(&a.scale(&spec.d))
        .sub_mat(&b.scale(&spec.delta))
        .add_mat(&id.scale(&spec.z));
    let residual_ac = a.commutator(&c).sub_mat(&ac_rhs).max_abs();
    let residual_bc = b.commutator(&c).sub_mat(&bc_rhs).max_abs();

    let (al, ga, de, ep, ze) = (spec.alpha, spec.gamma, spec.delta, spec.epsilon, spec.zeta);
    let k = c
        .matmul(&c)
        .sub_mat(&a2.anticommutator(&b).scale(&al))
        .sub_mat(&a.anticommutator(&b2).scale(&ga))
        .add_mat(&ab.scale(&(al * ga - de)))
        .add_mat(&b2.scale(&(ga * ga - ep)))
        .add_mat(&b.scale(&(ga * de - 2.0 * ze)))
        .add_mat(&a2.matmul(&a).scale(&(2.0 * spec.a / 3.0)))
        .add_mat(&a2.scale(&(spec.d + spec.a * ga / 3.0 + al * al)))
        .add_mat(&a.scale(&(spec.a * ep / 3.0 + al * de + 2.0 * spec.z)));
    let casimir_diagonal: Vec<f64> = (0..dim).map(|i| k[(i, i)]).collect();
    let mut off = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                off = off.max(k[(i, j)].abs());
            }
        }
    }
    Ok(QuadraticRealization {
        fock,
        eta,
        b_shift,
        a,
        b,
        c,
        residual_ac,
        residual_bc,
        casimir_diagonal,
        casimir_off_diagonal: off,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Darboux2Realization {
    pub energy: f64,
    pub realization: QuadraticRealization,
    /// `(32a₁ + 4a₂²)E − a₂²(3 + 4a₃)`.
    pub casimir_reference: f64,
    /// `max_n |K_nn − casimir_reference|`.
    pub casimir_deviation: f64,
}

/// The Darboux-II algebra at energy `E` realised on `p + 1` states.
/// `b_shift` defaults to `a₂E/a₁`; `η` is the larger root of `Φ(p+1) = 0`
/// and `Φ` follows from the realisation.
pub fn darboux2_realization(
    a1: f64,
    a2: f64,
    a3: f64,
    energy: f64,
    p: usize,
    b_shift: Option<f64>,
) -> Result<Darboux2Realization, OscillatorError> {
    if a1.is_nan() || a1 >= 0.0 {
        return Err(OscillatorError::InvalidParameter(format!(
            "a1 must be negative, got {a1}"
        )));
    }
    let spec = darboux2_spec().evaluate(&[("H", energy), ("a1", a1), ("a2", a2), ("a3", a3)])?;
    let kappa = b_shift.unwrap_or(a2 * energy / a1);
    let eta = solve_eta(&spec, kappa, p)?;
    let phi = oscillator_structure_function(&spec, eta, kappa)?;
    let realization = realize_quadratic_algebra(&spec, eta, kappa, &phi, p)?;
    let casimir_reference = (32.0 * a1 + 4.0 * a2 * a2) * energy - a2 * a2 * (3.0 + 4.0 * a3);
    let casimir_deviation = realization
        .casimir_diagonal
        .iter()
        .map(|k| (k - casimir_reference).abs())
        .fold(0.0, f64::max);
    Ok(Darboux2Realization {
        energy,
        realization,
        casimir_reference,
        casimir_deviation,
    })
}
