use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{Monomial, Polynomial, Variables};
use crate::rational::{format_rational, int, ratio, Rational};

use super::OscillatorError;

/// Right-hand sides of `[A,C]` and `[B,C]` (with `[A,B] = C`) as commutative
/// polynomials in a ring whose first three variables are `A, B, C` and whose
/// remaining variables are central parameters. An anticommutator `{A,B}` is
/// written `2*A*B`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticRelations {
    pub vars: Variables,
    pub ac: Polynomial,
    pub bc: Polynomial,
}

impl QuadraticRelations {
    pub fn parse(vars: Variables, ac: &str, bc: &str) -> Result<Self, OscillatorError> {
        if vars.len() < 3 {
            return Err(OscillatorError::InvalidParameter(
                "relation ring needs the generators A, B, C first".into(),
            ));
        }
        let ac = Polynomial::parse(&vars, ac)?;
        let bc = Polynomial::parse(&vars, bc)?;
        Ok(QuadraticRelations { vars, ac, bc })
    }

    /// The ring of central parameters (all variables after `A, B, C`).
    pub fn params(&self) -> Variables {
        Variables::new(self.vars.names()[3..].iter().cloned())
    }
}

/// Coefficients of
/// `[A,C] = αA² + γ{A,B} + δA + εB + ζ`,
/// `[B,C] = aA² − γB² − α{A,B} + dA − δB + z`,
/// each a polynomial in the central parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadraticAlgebraSpec {
    #[serde(skip)]
    pub params: Variables,
    pub alpha: Polynomial,
    pub gamma: Polynomial,
    pub delta: Polynomial,
    pub epsilon: Polynomial,
    pub zeta: Polynomial,
    pub a: Polynomial,
    pub d: Polynomial,
    pub z: Polynomial,
}

/// The same coefficients at fixed parameter values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericQuadraticSpec {
    pub alpha: f64,
    pub gamma: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub zeta: f64,
    pub a: f64,
    pub d: f64,
    pub z: f64,
}

impl QuadraticAlgebraSpec {
    pub fn zero(params: &Variables) -> Self {
        let z = Polynomial::zero(params);
        QuadraticAlgebraSpec {
            params: params.clone(),
            alpha: z.clone(),
            gamma: z.clone(),
            delta: z.clone(),
            epsilon: z.clone(),
            zeta: z.clone(),
            a: z.clone(),
            d: z.clone(),
            z,
        }
    }

    /// Substitutes `values` (by parameter name); every parameter must be set.
    pub fn evaluate(
        &self,
        values: &[(&str, f64)],
    ) -> Result<NumericQuadraticSpec, OscillatorError> {
        let point = self
            .params
            .names()
            .iter()
            .map(|n| {
                values
                    .iter()
                    .find(|(k, _)| k == n)
                    .map(|(_, v)| *v)
                    .ok_or_else(|| {
                        OscillatorError::InvalidParameter(format!("missing value for {n}"))
                    })
            })
            .collect::<Result<Vec<f64>, _>>()?;
        let ev = |p: &Polynomial| p.evaluate_f64(&point);
        Ok(NumericQuadraticSpec {
            alpha: ev(&self.alpha)?,
            gamma: ev(&self.gamma)?,
            delta: ev(&self.delta)?,
            epsilon: ev(&self.epsilon)?,
            zeta: ev(&self.zeta)?,
            a: ev(&self.a)?,
            d: ev(&self.d)?,
            z: ev(&self.z)?,
        })
    }

    /// Rebuilds the relation polynomials in `vars` (generators first, then
    /// the parameters of this spec in order).
    pub fn to_relations(&self, vars: &Variables) -> QuadraticRelations {
        let lift = |p: &Polynomial, gen: Monomial, scale: Rational| -> Polynomial {
            Polynomial::from_terms(
                vars,
                p.terms().map(|(m, c)| {
                    let shifted = Monomial::new(m.iter().map(|(v, e)| (v + 3, e)));
                    (shifted.mul(&gen), c * &scale)
                }),
            )
        };
        let (a, b) = (0usize, 1usize);
        let aa = Monomial::new([(a, 2)]);
        let bb = Monomial::new([(b, 2)]);
        let ab = Monomial::new([(a, 1), (b, 1)]);
        let one = Rational::one();
        let ac = [
            lift(&self.alpha, aa.clone(), one.clone()),
            lift(&self.gamma, ab.clone(), int(2)),
            lift(&self.delta, Monomial::var(a), one.clone()),
            lift(&self.epsilon, Monomial::var(b), one.clone()),
            lift(&self.zeta, Monomial::one(), one.clone()),
        ]
        .iter()
        .fold(Polynomial::zero(vars), |acc, t| &acc + t);
        let bc = [
            lift(&self.a, aa, one.clone()),
            lift(&self.gamma, bb, int(-1)),
            lift(&self.alpha, ab, int(-2)),
            lift(&self.d, Monomial::var(a), one.clone()),
            lift(&self.delta, Monomial::var(b), int(-1)),
            lift(&self.z, Monomial::one(), one),
        ]
        .iter()
        .fold(Polynomial::zero(vars), |acc, t| &acc + t);
        QuadraticRelations {
            vars: vars.clone(),
            ac,
            bc,
        }
    }
}

/// Groups a relation by its `(deg_A, deg_B)` part, with parameter-ring
/// coefficients. Any occurrence of `C` is rejected.
fn split(
    p: &Polynomial,
    params: &Variables,
) -> Result<BTreeMap<(u32, u32), Polynomial>, OscillatorError> {
    let mut out: BTreeMap<(u32, u32), Polynomial> = BTreeMap::new();
    for (m, c) in p.terms() {
        if m.exponent(2) > 0 {
            return Err(OscillatorError::NotQuadraticForm {
                term: m.render(p.vars()),
            });
        }
        let key = (m.exponent(0), m.exponent(1));
        let rest = Monomial::new(m.iter().filter(|(v, _)| *v >= 3).map(|(v, e)| (v - 3, e)));
        out.entry(key)
            .or_insert_with(|| Polynomial::zero(params))
            .add_term(rest, c.clone());
    }
    Ok(out)
}

fn generator_word(a: u32, b: u32) -> String {
    let part = |n: &str, e: u32| match e {
        0 => None,
        1 => Some(n.to_string()),
        e => Some(format!("{n}^{e}")),
    };
    let parts: Vec<String> = [part("A", a), part("B", b)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Reads off the coefficient record, cross-checking the coefficients that
/// appear in both relations.
pub fn match_generic_form(
    rel: &QuadraticRelations,
) -> Result<QuadraticAlgebraSpec, OscillatorError> {
    let params = rel.params();
    let ac = split(&rel.ac, &params)?;
    let bc = split(&rel.bc, &params)?;
    let allowed_ac = [(2, 0), (1, 1), (1, 0), (0, 1), (0, 0)];
    let allowed_bc = [(2, 0), (0, 2), (1, 1), (1, 0), (0, 1), (0, 0)];
    for (map, allowed) in [(&ac, &allowed_ac[..]), (&bc, &allowed_bc[..])] {
        if let Some((&(i, j), _)) = map.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(OscillatorError::NotQuadraticForm {
                term: generator_word(i, j),
            });
        }
    }
    let zero = Polynomial::zero(&params);
    let get = |m: &BTreeMap<(u32, u32), Polynomial>, k| {
        m.get(&k).cloned().unwrap_or_else(|| zero.clone())
    };
    let half = ratio(1, 2);
    let spec = QuadraticAlgebraSpec {
        params: params.clone(),
        alpha: get(&ac, (2, 0)),
        gamma: get(&ac, (1, 1)).scale(&half),
        delta: get(&ac, (1, 0)),
        epsilon: get(&ac, (0, 1)),
        zeta: get(&ac, (0, 0)),
        a: get(&bc, (2, 0)),
        d: get(&bc, (1, 0)),
        z: get(&bc, (0, 0)),
    };
    let checks = [
        ("B^2 in [B,C]", -&spec.gamma, get(&bc, (0, 2))),
        (
            "{A,B} in [B,C]",
            -&spec.alpha,
            get(&bc, (1, 1)).scale(&half),
        ),
        ("B in [B,C]", -&spec.delta, get(&bc, (0, 1))),
    ];
    for (term, expected, found) in checks {
        if expected != found {
            return Err(OscillatorError::InconsistentCoefficients {
                term: term.into(),
                expected: expected.to_string(),
                found: found.to_string(),
            });
        }
    }
    Ok(spec)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CasimirTerm {
    /// Operator word such as `C^2`, `{A^2,B}` or `A`.
    pub word: String,
    pub coefficient: Polynomial,
}

/// `K = C² − α{A²,B} − γ{A,B²} + (αγ−δ){A,B} + (γ²−ε)B² + (γδ−2ζ)B
///      + (2a/3)A³ + (d + aγ/3 + α²)A² + (aε/3 + αδ + 2z)A`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CasimirExpression {
    pub terms: Vec<CasimirTerm>,
}

impl CasimirExpression {
    pub fn coefficient(&self, word: &str) -> Option<&Polynomial> {
        self.terms
            .iter()
            .find(|t| t.word == word)
            .map(|t| &t.coefficient)
    }
}

impl fmt::Display for CasimirExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let c = &t.coefficient;
            let constant = (c.num_terms() == 1 && c.degree() == Some(0))
                .then(|| c.coefficient(&Monomial::one()));
            let (neg, body) = match constant {
                Some(q) if q.is_one() => (false, t.word.clone()),
                Some(q) if (-&q).is_one() => (true, t.word.clone()),
                Some(q) if q < Rational::zero() => {
                    (true, format!("{}*{}", format_rational(&-q), t.word))
                }
                Some(q) => (false, format!("{}*{}", format_rational(&q), t.word)),
                None => (false, format!("({c})*{}", t.word)),
            };
            match (i, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn casimir_expression(spec: &QuadraticAlgebraSpec) -> CasimirExpression {
    let (al, ga, de, ep, ze) = (
        &spec.alpha,
        &spec.gamma,
        &spec.delta,
        &spec.epsilon,
        &spec.zeta,
    );
    let (a, d, z) = (&spec.a, &spec.d, &spec.z);
    let third = ratio(1, 3);
    let words: [(&str, Polynomial); 9] = [
        ("C^2", Polynomial::one(&spec.params)),
        ("{A^2,B}", -al),
        ("{A,B^2}", -ga),
        ("{A,B}", &(al * ga) - de),
        ("B^2", &(ga * ga) - ep),
        ("B", &(ga * de) - &ze.scale(&int(2))),
        ("A^3", a.scale(&ratio(2, 3))),
        ("A^2", &(d + &(a * ga).scale(&third)) + &(al * al)),
        (
            "A",
            &(&(a * ep).scale(&third) + &(al * de)) + &z.scale(&int(2)),
        ),
    ];
    CasimirExpression {
        terms: words
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| CasimirTerm {
                word: w.to_string(),
                coefficient: c,
            })
            .collect(),
    }
}

/// The Darboux-II relations in the ring `A, B, C, H, a1, a2, a3`.
pub fn darboux2_relations() -> QuadraticRelations {
    let vars = Variables::new(["A", "B", "C", "H", "a1", "a2", "a3"]);
    QuadraticRelations::parse(
        vars,
        "-4*a1*B - 4*a2*A",
        "-24*A^2 + 4*a2*B + 32*H*A - 8*H^2 - 8*a1*H + 6*a1 + 8*a1*a3",
    )
    .expect("Darboux-II relations parse")
}

pub fn darboux2_spec() -> QuadraticAlgebraSpec {
    match_generic_form(&darboux2_relations()).expect("Darboux-II relations fit the template")
}
