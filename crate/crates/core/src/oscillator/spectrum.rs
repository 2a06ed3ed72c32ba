use serde::Serialize;

use super::{
    darboux2_spec, solve_eta, verify_structure_function, OscillatorError, StructureFunction,
    StructureFunctionReport, SPECTRUM_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    EpsPlus,
    EpsMinus,
    Second,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::EpsPlus => "eps+",
            Family::EpsMinus => "eps-",
            Family::Second => "second",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumSolution {
    pub family: Family,
    pub p: usize,
    pub energy: f64,
    /// Shift making the unshifted oscillator realisation close at
    /// dimension `p + 1`, when a real one exists.
    pub eta: Option<f64>,
    pub phi: StructureFunction,
    pub verification: StructureFunctionReport,
}

impl SpectrumSolution {
    pub fn verified(&self) -> bool {
        self.verification.passed()
    }
}

/// `8a^{3/2}(p+1) − 2a² + a`, the quantity under the inner root of `E_ε`.
pub fn radicand(a: f64, p: usize) -> f64 {
    8.0 * a.powf(1.5) * (p + 1) as f64 - 2.0 * a * a + a
}

/// The three Darboux-II energy families for `−a₁ = a₂ = a₃ = a`:
///
/// * `E_ε = ¼(8√a(p+1) + 3a + 2ε√(8a^{3/2}(p+1) − 2a² + a))` with
///   `Φ(z) = z(p+1−z)²`, for `ε = ±1`;
/// * `E = p(p+2) + a + ¾` with
///   `Φ(z) = z(z−p−1)(z + (3a^{3/2} − 4a(p+1) + √a(4p²+8p+3))/(8a))`.
///
/// Each solution carries its constraint report; nothing is filtered out.
pub fn darboux2_energy_families(
    a: f64,
    p: usize,
) -> Result<Vec<SpectrumSolution>, OscillatorError> {
    if !a.is_finite() || a <= 0.0 {
        return Err(OscillatorError::InvalidParameter(format!(
            "a must be positive, got {a}"
        )));
    }
    let rad = radicand(a, p);
    if rad < 0.0 {
        return Err(OscillatorError::RealityViolation { radicand: rad });
    }
    let top = (p + 1) as f64;
    let sa = a.sqrt();
    let double_root = StructureFunction::from_roots(1.0, &[0.0, top, top]);
    let pf = p as f64;
    let c = (3.0 * a.powf(1.5) - 4.0 * a * top + sa * (4.0 * pf * pf + 8.0 * pf + 3.0)) / (8.0 * a);
    let cubic = StructureFunction::from_roots(1.0, &[0.0, top, -c]);

    let mut out = Vec::with_capacity(3);
    for (family, energy, phi) in [
        (
            Family::EpsPlus,
            0.25 * (8.0 * sa * top + 3.0 * a + 2.0 * rad.sqrt()),
            double_root.clone(),
        ),
        (
            Family::EpsMinus,
            0.25 * (8.0 * sa * top + 3.0 * a - 2.0 * rad.sqrt()),
            double_root,
        ),
        (Family::Second, pf * (pf + 2.0) + a + 0.75, cubic),
    ] {
        let spec = darboux2_spec().evaluate(&[("H", energy), ("a1", -a), ("a2", a), ("a3", a)])?;
        let eta = solve_eta(&spec, 0.0, p).ok();
        out.push(SpectrumSolution {
            family,
            p,
            energy,
            eta,
            verification: verify_structure_function(&phi, p, SPECTRUM_TOL),
            phi,
        });
    }
    Ok(out)
}
