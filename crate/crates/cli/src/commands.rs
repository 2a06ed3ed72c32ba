use serde_json::{json, Value};

use symalg::commutant::{
    build_algebraic_hamiltonian, center_of, closure_relations, compute_commutant, find_casimirs,
    parse_generators, CommutantError, Generator,
};
use symalg::liealg::{validate_jacobi, JacobiReport, StructureConstants, SubalgebraSelection};
use symalg::linalg::Matrix;
use symalg::oscillator::{
    darboux2_energy_families, darboux2_realization, fock_representation,
    oscillator_structure_function, realize_quadratic_algebra, solve_eta, OscillatorError,
    QuadraticRealization, SpectrumSolution, StructureFunction,
};
use symalg::rational::{format_rational, Rational};
use symalg::verma::{
    build_base_actions, solve_x2_band, verify_cubic_relations, BandSolution, CubicAlgebraSpec,
    VermaError, DEFAULT_BAND,
};

use crate::jobs::{Exact, FamilyChoice, FockJob, SpectrumJob, VermaJob};
use crate::{CliError, JobOptions, Outcome};

fn commutant_error(e: CommutantError) -> CliError {
    let message = e.to_string();
    match e {
        CommutantError::JacobiFailed | CommutantError::NotASubalgebra => {
            CliError::validation(message)
        }
        CommutantError::Lie(_)
        | CommutantError::Schema(_)
        | CommutantError::BadGeneratorNames
        | CommutantError::ConstantGenerator { .. }
        | CommutantError::ZeroDegree
        | CommutantError::CoefficientCount { .. } => CliError::validation(message),
        CommutantError::NotClosed { ref i, ref j } => {
            let detail = json!({ "left": i, "right": j });
            CliError::engine(message).with_detail(detail)
        }
        CommutantError::Poly(_) | CommutantError::VerificationFailed => CliError::engine(message),
    }
}

fn oscillator_error(e: OscillatorError) -> CliError {
    let message = e.to_string();
    match e {
        OscillatorError::InvalidParameter(_) | OscillatorError::UnsupportedSpec => {
            CliError::validation(message)
        }
        OscillatorError::RealityViolation { radicand } => {
            CliError::engine(message).with_detail(json!({ "radicand": radicand }))
        }
        OscillatorError::NonUnitarizable { k, value } => {
            CliError::engine(message).with_detail(json!({ "k": k, "phi": value }))
        }
        _ => CliError::engine(message),
    }
}

fn rows(m: &Matrix<f64>) -> Value {
    json!(m.to_rows())
}

fn exact(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn exacts(qs: &[Rational]) -> Value {
    Value::Array(qs.iter().map(exact).collect())
}

fn names(c: &StructureConstants) -> Value {
    json!(c.vars().names())
}

fn selection(c: &StructureConstants, o: &JobOptions) -> Result<SubalgebraSelection, CliError> {
    let sub = o.sub.clone().unwrap_or_else(|| vec![0]);
    SubalgebraSelection::new(sub, c.dim()).map_err(|e| CliError::validation(format!("--sub: {e}")))
}

fn generators_json(gens: &[Generator]) -> Value {
    Value::Array(
        gens.iter()
            .map(|g| json!({ "name": g.name, "poly": g.poly.to_string() }))
            .collect(),
    )
}

pub(crate) fn jacobi_violations_json(report: &JacobiReport) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(|v| {
                let (j, k, l) = v.triple;
                json!({
                    "triple": [j + 1, k + 1, l + 1],
                    "components": v.components.iter().map(|r| r + 1).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub(crate) fn jacobi(c: &StructureConstants) -> Result<Outcome, CliError> {
    let report = validate_jacobi(c);
    if !report.passed() {
        return Err(CliError::validation(format!(
            "Jacobi identity fails on {} triple(s)",
            report.violations.len()
        ))
        .with_detail(jacobi_violations_json(&report)));
    }
    Ok(Outcome {
        payload: json!({ "dim": c.dim(), "basis": names(c), "jacobi": "pass" }),
        summary: format!("Jacobi identity holds (dim {})", c.dim()),
    })
}

pub(crate) fn commutant(c: &StructureConstants, o: &JobOptions) -> Result<Outcome, CliError> {
    let s = selection(c, o)?;
    let maxdeg = o.maxdeg.unwrap_or(2);
    let basis = compute_commutant(c, &s, maxdeg).map_err(commutant_error)?;
    let gens = basis.generators();
    let degrees: Vec<Value> = basis
        .degrees
        .iter()
        .map(|d| {
            json!({
                "degree": d.degree,
                "dimension": d.solutions.len(),
                "solutions": d.solutions.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "new_generators": d.new_generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Outcome {
        payload: json!({
            "basis": names(c),
            "sub": s.indices().iter().map(|i| i + 1).collect::<Vec<_>>(),
            "maxdeg": maxdeg,
            "degrees": degrees,
            "generators": generators_json(&gens),
        }),
        summary: format!("{} generators up to degree {maxdeg}", gens.len()),
    })
}

fn load_generators(c: &StructureConstants, text: &str) -> Result<Vec<Generator>, CliError> {
    parse_generators(text, c.vars()).map_err(|e| CliError::parse(format!("generators: {e}")))
}

pub(crate) fn closure(
    c: &StructureConstants,
    gens: &str,
    o: &JobOptions,
) -> Result<Outcome, CliError> {
    let gens = load_generators(c, gens)?;
    let maxdeg = o.maxdeg.unwrap_or(3);
    let pres = closure_relations(&gens, c, maxdeg).map_err(commutant_error)?;
    let center = center_of(&pres, c);
    let relations = pres.nonzero_relations();
    Ok(Outcome {
        summary: format!("{} non-zero brackets, center {:?}", relations.len(), center),
        payload: json!({
            "generators": generators_json(&pres.generators),
            "maxdeg": maxdeg,
            "relations": relations,
            "center": center,
            "verified": pres.verify(c),
        }),
    })
}

pub(crate) fn casimirs(
    c: &StructureConstants,
    gens: &str,
    o: &JobOptions,
    seed: u64,
) -> Result<Outcome, CliError> {
    let gens = load_generators(c, gens)?;
    let pres =
        closure_relations(&gens, c, o.closure_maxdeg.unwrap_or(3)).map_err(commutant_error)?;
    let maxdeg = o.maxdeg.unwrap_or(3);
    let report = find_casimirs(&pres, c, maxdeg, seed).map_err(commutant_error)?;
    let listed: Vec<String> = report
        .casimirs
        .iter()
        .map(|k| k.expression.to_string())
        .collect();
    Ok(Outcome {
        summary: format!(
            "{} Casimirs up to degree {maxdeg}: {}",
            listed.len(),
            listed.join("; ")
        ),
        payload: serde_json::to_value(&report).expect("report serializes"),
    })
}

pub(crate) fn hamiltonian(
    c: &StructureConstants,
    gens: Option<&str>,
    o: &JobOptions,
) -> Result<Outcome, CliError> {
    let s = selection(c, o)?;
    let casimir_degree = o.casimir_degree.unwrap_or(2);
    let full = compute_commutant(c, &SubalgebraSelection::all(c.dim()), casimir_degree)
        .map_err(commutant_error)?;
    let casimirs: Vec<_> = full.generators().into_iter().map(|g| g.poly).collect();

    let mut alpha = o.alpha.clone();
    if alpha.len() > s.len() {
        return Err(CliError::validation(format!(
            "{} alpha coefficients for a {}-element subalgebra",
            alpha.len(),
            s.len()
        )));
    }
    alpha.resize(s.len(), symalg::rational::int(0));
    let mut gammas = vec![symalg::rational::int(0); casimirs.len()];
    for (i, g) in o.gammas.iter().enumerate() {
        if let Some(g) = g {
            if i >= casimirs.len() {
                return Err(CliError::validation(format!(
                    "gamma{} given but only {} Casimir(s) up to degree {casimir_degree}",
                    i + 1,
                    casimirs.len()
                )));
            }
            gammas[i] = g.clone();
        }
    }

    let targets = match gens {
        Some(text) => load_generators(c, text)?,
        None => compute_commutant(c, &s, o.maxdeg.unwrap_or(2))
            .map_err(commutant_error)?
            .generators(),
    };
    let coefficients: Vec<Rational> = alpha.iter().chain(&gammas).cloned().collect();
    let report = build_algebraic_hamiltonian(c, &s, &casimirs, &coefficients, &targets)
        .map_err(commutant_error)?;
    let brackets: Vec<Value> = report
        .brackets
        .iter()
        .map(|(name, zero)| json!({ "generator": name, "commutes": zero }))
        .collect();
    let payload = json!({
        "hamiltonian": report.hamiltonian.to_string(),
        "alpha": exacts(&alpha),
        "gammas": exacts(&gammas),
        "casimirs": casimirs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "brackets": brackets,
        "verified": report.verified,
    });
    if !report.verified {
        return Err(
            CliError::engine("Hamiltonian fails to commute with the commutant")
                .with_detail(payload),
        );
    }
    Ok(Outcome {
        summary: format!(
            "H = {} commutes with {} generators",
            report.hamiltonian,
            targets.len()
        ),
        payload,
    })
}

fn solution_json(s: &SpectrumSolution) -> Value {
    json!({
        "family": s.family.label(),
        "p": s.p,
        "energy": s.energy,
        "eta": s.eta,
        "phi": s.phi.coefficients,
        "verification": s.verification,
        "verified": s.verified(),
    })
}

fn selected(job: &SpectrumJob) -> Result<Vec<SpectrumSolution>, CliError> {
    let all = darboux2_energy_families(job.a, job.p).map_err(oscillator_error)?;
    Ok(all
        .into_iter()
        .filter(|s| match job.family {
            FamilyChoice::All => true,
            FamilyChoice::EpsPlus => s.family == symalg::oscillator::Family::EpsPlus,
            FamilyChoice::EpsMinus => s.family == symalg::oscillator::Family::EpsMinus,
            FamilyChoice::Second => s.family == symalg::oscillator::Family::Second,
        })
        .collect())
}

pub(crate) fn spectrum(job: SpectrumJob) -> Result<Outcome, CliError> {
    let sols = selected(&job)?;
    let verified = sols.iter().filter(|s| s.verified()).count();
    Ok(Outcome {
        summary: format!(
            "{} solution(s), {verified} satisfy every constraint",
            sols.len()
        ),
        payload: json!({
            "a": job.a,
            "p": job.p,
            "radicand": symalg::oscillator::radicand(job.a, job.p),
            "solutions": sols.iter().map(solution_json).collect::<Vec<_>>(),
            "all_verified": verified == sols.len(),
        }),
    })
}

fn fock_payload(phi: &StructureFunction, p: usize) -> Result<Outcome, CliError> {
    let f = fock_representation(phi, p).map_err(oscillator_error)?;
    let r = f.residuals();
    let worst = r.n_bdag.max(r.n_b).max(r.bdag_b).max(r.b_bdag);
    let relative = if r.phi_scale > 0.0 {
        worst / r.phi_scale
    } else {
        worst
    };
    Ok(Outcome {
        summary: format!("dimension {}, relative residual {relative:.3e}", f.dim()),
        payload: json!({
            "p": p,
            "dim": f.dim(),
            "phi": phi.coefficients,
            "n": rows(&f.n),
            "b": rows(&f.b),
            "bdag": rows(&f.bdag),
            "residuals": r,
            "relative_residual": relative,
        }),
    })
}

fn realization_json(r: &QuadraticRealization) -> Value {
    json!({
        "eta": r.eta,
        "b_shift": r.b_shift,
        "phi": r.fock.phi.coefficients,
        "a": rows(&r.a),
        "b": rows(&r.b),
        "c": rows(&r.c),
        "residual_ac": r.residual_ac,
        "residual_bc": r.residual_bc,
        "casimir_diagonal": r.casimir_diagonal,
        "casimir_off_diagonal": r.casimir_off_diagonal,
    })
}

pub(crate) fn fock(job: FockJob) -> Result<Outcome, CliError> {
    let sources = [
        job.phi.is_some(),
        job.roots.is_some(),
        job.spectrum.is_some(),
        job.darboux2.is_some(),
        job.quadratic.is_some(),
    ];
    if sources.iter().filter(|s| **s).count() != 1 {
        return Err(CliError::parse(
            "fock job needs exactly one of phi, roots, spectrum, darboux2, quadratic",
        ));
    }
    let need_p = || job.p.ok_or_else(|| CliError::parse("fock job needs p"));
    if let Some(coeffs) = &job.phi {
        return fock_payload(&StructureFunction::new(coeffs.clone()), need_p()?);
    }
    if let Some(roots) = &job.roots {
        return fock_payload(
            &StructureFunction::from_roots(job.scale.unwrap_or(1.0), roots),
            need_p()?,
        );
    }
    if let Some(s) = &job.spectrum {
        let sols = selected(s)?;
        let [sol] = sols.as_slice() else {
            return Err(CliError::validation(
                "spectrum source needs a single family",
            ));
        };
        let mut out = fock_payload(&sol.phi, s.p)?;
        out.payload["energy"] = json!(sol.energy);
        out.payload["family"] = json!(sol.family.label());
        return Ok(out);
    }
    if let Some(d) = &job.darboux2 {
        let r = darboux2_realization(d.a1, d.a2, d.a3, d.energy, d.p, d.b_shift)
            .map_err(oscillator_error)?;
        let mut payload = realization_json(&r.realization);
        payload["energy"] = json!(r.energy);
        payload["casimir_reference"] = json!(r.casimir_reference);
        payload["casimir_deviation"] = json!(r.casimir_deviation);
        return Ok(Outcome {
            summary: format!(
                "realisation on {} states, residuals {:.3e} / {:.3e}",
                d.p + 1,
                r.realization.residual_ac,
                r.realization.residual_bc
            ),
            payload,
        });
    }
    let q = job.quadratic.as_ref().expect("one source is present");
    let eta = solve_eta(&q.spec, q.b_shift, q.p).map_err(oscillator_error)?;
    let phi = oscillator_structure_function(&q.spec, eta, q.b_shift).map_err(oscillator_error)?;
    let r =
        realize_quadratic_algebra(&q.spec, eta, q.b_shift, &phi, q.p).map_err(oscillator_error)?;
    Ok(Outcome {
        summary: format!(
            "realisation on {} states, residuals {:.3e} / {:.3e}",
            q.p + 1,
            r.residual_ac,
            r.residual_bc
        ),
        payload: realization_json(&r),
    })
}

fn band_json(sol: &BandSolution<Rational>) -> Value {
    let m = &sol.module;
    json!({
        "module": {
            "M": m.order,
            "E": exact(&m.e),
            "lambda": exact(&m.lambda),
            "u": exact(&m.u),
            "degenerate": m.degenerate,
            "x1_diagonal": exacts(&(0..m.dim()).map(|i| m.x1[(i, i)].clone()).collect::<Vec<_>>()),
        },
        "band": sol.band,
        "unknowns": sol.unknowns,
        "equations": sol.equations,
        "coefficients": sol.coefficients.iter().map(|c| json!({
            "k": c.k,
            "m": c.m,
            "value": exact(&c.value),
            "constrained": c.constrained,
        })).collect::<Vec<_>>(),
        "fits": sol.fits.iter().map(|f| json!({
            "k": f.k,
            "ms": f.ms,
            "degree": f.degree,
            "coefficients": exacts(&f.coefficients),
            "max_deviation": f.max_deviation,
            "exact": f.exact,
        })).collect::<Vec<_>>(),
        "residual_sum_squares": exact(&sol.residual_sum_squares),
        "max_residual_commutator": exact(&sol.max_residual_commutator),
        "max_residual_cubic": exact(&sol.max_residual_cubic),
    })
}

fn verma_error(e: VermaError<Rational>) -> CliError {
    let message = e.to_string();
    match e {
        VermaError::InfeasibleAtBound(_) => CliError::engine(message),
        _ => CliError::validation(message),
    }
}

pub(crate) fn verma(job: VermaJob) -> Result<Outcome, CliError> {
    let get = |x: &Option<Exact>| {
        x.as_ref()
            .map_or_else(|| symalg::rational::int(0), |e| e.0.clone())
    };
    let spec = CubicAlgebraSpec {
        u1: get(&job.u1),
        u2: get(&job.u2),
        u3: get(&job.u3),
        u: job.u.0.clone(),
        v1: get(&job.v1),
        v2: get(&job.v2),
        v3: get(&job.v3),
        v: get(&job.v),
    };
    let base = build_base_actions(
        job.e.0.clone(),
        job.lambda.0.clone(),
        job.u.0.clone(),
        job.order,
    )
    .map_err(verma_error)?;
    let band = job.band.clone().unwrap_or_else(|| DEFAULT_BAND.to_vec());
    let (solution, certificate) = match solve_x2_band(&spec, &base, &band, 0.0) {
        Ok(sol) => (sol, None),
        Err(VermaError::InfeasibleAtBound(cert)) => {
            let c = json!({
                "relation": cert.relation,
                "row": cert.row,
                "col": cert.col,
                "residual": exact(&cert.residual),
            });
            (cert.solution, Some(c))
        }
        Err(e) => return Err(verma_error(e)),
    };
    let report = verify_cubic_relations(&solution.module, &spec).map_err(verma_error)?;
    let mut payload = band_json(&solution);
    payload["feasible"] = json!(certificate.is_none());
    payload["certificate"] = certificate.clone().unwrap_or(Value::Null);
    payload["report"] = serde_json::to_value(&report).expect("report serializes");
    if certificate.is_some() && !job.accept_least_squares {
        return Err(CliError::engine(format!(
            "InfeasibleAtBound: no band solution, residual sum of squares {}",
            format_rational(&solution.residual_sum_squares)
        ))
        .with_detail(payload));
    }
    Ok(Outcome {
        summary: format!(
            "{} unknowns, {} equations, feasible: {}, residual sum of squares {}",
            solution.unknowns,
            solution.equations,
            certificate.is_none(),
            format_rational(&solution.residual_sum_squares)
        ),
        payload,
    })
}
