//! Lie algebras given by structure constants, and the Poisson–Lie bracket
//! they induce on polynomials in the dual coordinates.
//!
//! Indices are 0-based throughout the Rust API. The JSON algebra file uses
//! 1-based indices.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::poly::{PolyError, Polynomial, Variables};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket of a basis element with itself must vanish (index {index})")]
    SelfBracket { index: usize },
    #[error("subalgebra indices must be strictly increasing: {indices:?}")]
    UnsortedSelection { indices: Vec<usize> },
    #[error("algebra file: {0}")]
    Schema(String),
    #[error("algebra file: duplicate bracket entry for (j, k) = ({j}, {k})")]
    DuplicateBracket { j: usize, k: usize },
    #[error("basis change matrix is singular")]
    SingularBasisChange,
}

/// Structure constants `C_jk^l` of an `n`-dimensional Lie algebra with
/// `[X_j, X_k] = Σ_l C_jk^l X_l`. Only `j < k` entries are stored; the rest
/// follow from antisymmetry.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    names: Variables,
    table: BTreeMap<(usize, usize), BTreeMap<usize, Rational>>,
}

impl StructureConstants {
    /// The abelian algebra on the given basis names.
    pub fn abelian(names: Variables) -> Self {
        StructureConstants {
            names,
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn vars(&self) -> &Variables {
        &self.names
    }

    fn check_index(&self, i: usize) -> Result<(), LieError> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(LieError::IndexOutOfRange {
                index: i,
                dim: self.dim(),
            })
        }
    }

    /// Sets `[X_j, X_k] = Σ terms`. Passing `j > k` stores the negated
    /// bracket under `(k, j)`. Replaces any previous value.
    pub fn set_bracket<I>(&mut self, j: usize, k: usize, terms: I) -> Result<(), LieError>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        self.check_index(j)?;
        self.check_index(k)?;
        let mut entry: BTreeMap<usize, Rational> = BTreeMap::new();
        for (l, c) in terms {
            self.check_index(l)?;
            *entry.entry(l).or_insert_with(Rational::zero) += c;
        }
        entry.retain(|_, c| !c.is_zero());
        if j == k {
            return if entry.is_empty() {
                Ok(())
            } else {
                Err(LieError::SelfBracket { index: j })
            };
        }
        let (key, entry) = if j < k {
            ((j, k), entry)
        } else {
            ((k, j), entry.into_iter().map(|(l, c)| (l, -c)).collect())
        };
        if entry.is_empty() {
            self.table.remove(&key);
        } else {
            self.table.insert(key, entry);
        }
        Ok(())
    }

    /// `C_jk^l` for any `j, k, l` (derived entries included).
    pub fn constant(&self, j: usize, k: usize, l: usize) -> Rational {
        use std::cmp::Ordering::*;
        match j.cmp(&k) {
            Equal => Rational::zero(),
            Less => self
                .table
                .get(&(j, k))
                .and_then(|t| t.get(&l))
                .cloned()
                .unwrap_or_else(Rational::zero),
            Greater => -self.constant(k, j, l),
        }
    }

    /// Stored `(j, k) -> {l: C_jk^l}` entries with `j < k`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &BTreeMap<usize, Rational>)> {
        self.table.iter().map(|(k, v)| (*k, v))
    }

    /// `{x_j, x_k} = Σ_l C_jk^l x_l` as a polynomial.
    pub fn basis_bracket(&self, j: usize, k: usize) -> Polynomial {
        let mut p = Polynomial::zero(&self.names);
        for l in 0..self.dim() {
            let c = self.constant(j, k, l);
            if !c.is_zero() {
                p.add_term(crate::poly::Monomial::var(l), c);
            }
        }
        p
    }

    /// Structure constants in the basis `Y_a = Σ_b T[a][b] X_b`.
    pub fn change_basis(
        &self,
        t: &Matrix<Rational>,
        names: Variables,
    ) -> Result<StructureConstants, LieError> {
        let n = self.dim();
        assert_eq!((t.rows(), t.cols()), (n, n));
        assert_eq!(names.len(), n);
        // Y-coordinates of X_l are the rows of (T^{-1})^T; solve T^T y = e_l.
        let tt = t.transpose();
        let mut x_in_y: Vec<Vec<Rational>> = Vec::with_capacity(n);
        for l in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[l] = Rational::from_integer(1.into());
            x_in_y.push(tt.solve(&e).ok_or(LieError::SingularBasisChange)?);
        }
        if t.rank() < n {
            return Err(LieError::SingularBasisChange);
        }
        let mut out = StructureConstants::abelian(names);
        for a in 0..n {
            for b in (a + 1)..n {
                let mut acc = vec![Rational::zero(); n];
                for ((i, j), terms) in &self.table {
                    let w = &t[(a, *i)] * &t[(b, *j)] - &t[(a, *j)] * &t[(b, *i)];
                    if w.is_zero() {
                        continue;
                    }
                    for (l, c) in terms {
                        for (cidx, coef) in x_in_y[*l].iter().enumerate() {
                            if !coef.is_zero() {
                                acc[cidx] += &w * c * coef;
                            }
                        }
                    }
                }
                out.set_bracket(a, b, acc.into_iter().enumerate())?;
            }
        }
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<StructureConstants, LieError> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| LieError::Schema(e.to_string()))?;
        file.into_structure_constants()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AlgebraFile::from(self)).expect("algebra file serialises")
    }
}

/// On-disk algebra description with 1-based indices and `j < k`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub names: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub j: usize,
    pub k: usize,
    pub terms: BTreeMap<String, String>,
}

impl AlgebraFile {
    pub fn into_structure_constants(self) -> Result<StructureConstants, LieError> {
        if self.names.len() != self.dim {
            return Err(LieError::Schema(format!(
                "dim is {} but {} names were given",
                self.dim,
                self.names.len()
            )));
        }
        if self.dim == 0 {
            return Err(LieError::Schema("dim must be positive".into()));
        }
        let mut c = StructureConstants::abelian(Variables::new(self.names));
        let mut seen = std::collections::BTreeSet::new();
        for (pos, entry) in self.brackets.into_iter().enumerate() {
            let in_range = |i: usize| (1..=self.dim).contains(&i);
            if !in_range(entry.j) || !in_range(entry.k) {
                return Err(LieError::Schema(format!(
                    "brackets[{pos}]: index out of range 1..={}",
                    self.dim
                )));
            }
            if entry.j >= entry.k {
                return Err(LieError::Schema(format!(
                    "brackets[{pos}]: j < k required, got j = {}, k = {}",
                    entry.j, entry.k
                )));
            }
            if !seen.insert((entry.j, entry.k)) {
                return Err(LieError::DuplicateBracket {
                    j: entry.j,
                    k: entry.k,
                });
            }
            let mut terms = Vec::new();
            for (l, coef) in &entry.terms {
                let l: usize = l
                    .trim()
                    .parse()
                    .ok()
                    .filter(|l| in_range(*l))
                    .ok_or_else(|| {
                        LieError::Schema(format!("brackets[{pos}]: bad term index {l:?}"))
                    })?;
                let coef = parse_rational(coef)
                    .map_err(|e| LieError::Schema(format!("brackets[{pos}]: {e}")))?;
                terms.push((l - 1, coef));
            }
            c.set_bracket(entry.j - 1, entry.k - 1, terms)?;
        }
        Ok(c)
    }
}

impl From<&StructureConstants> for AlgebraFile {
    fn from(c: &StructureConstants) -> Self {
        AlgebraFile {
            dim: c.dim(),
            names: c.vars().names().to_vec(),
            brackets: c
                .entries()
                .map(|((j, k), terms)| BracketEntry {
                    j: j + 1,
                    k: k + 1,
                    terms: terms
                        .iter()
                        .map(|(l, q)| ((l + 1).to_string(), format_rational(q)))
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiViolation {
    /// `(j, k, l)` with `j < k < l`, 0-based.
    pub triple: (usize, usize, usize),
    /// Components `r` where the cyclic sum is non-zero.
    pub components: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JacobiReport {
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `Σ_m (C_jk^m C_ml^r + C_kl^m C_mj^r + C_lj^m C_mk^r) = 0` for all
/// `j < k < l` and every `r`.
pub fn validate_jacobi(c: &StructureConstants) -> JacobiReport {
    let n = c.dim();
    let mut violations = Vec::new();
    for j in 0..n {
        for k in (j + 1)..n {
            for l in (k + 1)..n {
                let mut bad = Vec::new();
                for r in 0..n {
                    let mut s = Rational::zero();
                    for m in 0..n {
                        s += c.constant(j, k, m) * c.constant(m, l, r);
                        s += c.constant(k, l, m) * c.constant(m, j, r);
                        s += c.constant(l, j, m) * c.constant(m, k, r);
                    }
                    if !s.is_zero() {
                        bad.push(r);
                    }
                }
                if !bad.is_empty() {
                    violations.push(JacobiViolation {
                        triple: (j, k, l),
                        components: bad,
                    });
                }
            }
        }
    }
    JacobiReport { violations }
}

/// `{p, q} = Σ_{j,k,l} C_jk^l x_l (∂p/∂x_j)(∂q/∂x_k)`.
pub fn poisson_bracket(
    p: &Polynomial,
    q: &Polynomial,
    c: &StructureConstants,
) -> Result<Polynomial, LieError> {
    for r in [p, q] {
        if r.vars() != c.vars() {
            return Err(PolyError::RingMismatch {
                left: c.vars().names().join(","),
                right: r.vars().names().join(","),
            }
            .into());
        }
    }
    let n = c.dim();
    let dp: Vec<Polynomial> = (0..n).map(|i| p.partial_derivative(i)).collect();
    let dq: Vec<Polynomial> = (0..n).map(|i| q.partial_derivative(i)).collect();
    let mut out = Polynomial::zero(c.vars());
    for ((j, k), terms) in c.entries() {
        // antisymmetric pairing for the stored j < k entry
        let w = &(&dp[j] * &dq[k]) - &(&dp[k] * &dq[j]);
        if w.is_zero() {
            continue;
        }
        for (l, coef) in terms {
            out = &out + &w.mul_monomial(&crate::poly::Monomial::var(*l), coef);
        }
    }
    Ok(out)
}

/// The coadjoint vector field `X̃_j` applied to `p`, i.e. `{x_j, p}`.
pub fn coadjoint_apply(
    j: usize,
    p: &Polynomial,
    c: &StructureConstants,
) -> Result<Polynomial, LieError> {
    c.check_index(j)?;
    if p.vars() != c.vars() {
        return Err(PolyError::RingMismatch {
            left: c.vars().names().join(","),
            right: p.vars().names().join(","),
        }
        .into());
    }
    let mut out = Polynomial::zero(c.vars());
    for k in 0..c.dim() {
        let field = c.basis_bracket(j, k);
        if field.is_zero() {
            continue;
        }
        let d = p.partial_derivative(k);
        if d.is_zero() {
            continue;
        }
        out = &out + &(&field * &d);
    }
    Ok(out)
}

/// A choice of basis elements spanning a candidate subalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraSelection {
    indices: Vec<usize>,
}

impl SubalgebraSelection {
    pub fn new(indices: Vec<usize>, dim: usize) -> Result<Self, LieError> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LieError::UnsortedSelection { indices });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= dim) {
            return Err(LieError::IndexOutOfRange { index: bad, dim });
        }
        Ok(SubalgebraSelection { indices })
    }

    /// The whole algebra.
    pub fn all(dim: usize) -> Self {
        SubalgebraSelection {
            indices: (0..dim).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubalgebraReport {
    /// Pairs `(j, k)` whose bracket leaves the span.
    pub failures: Vec<(usize, usize)>,
}

impl SubalgebraReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_subalgebra(s: &SubalgebraSelection, c: &StructureConstants) -> SubalgebraReport {
    let mut failures = Vec::new();
    for (a, &j) in s.indices.iter().enumerate() {
        for &k in &s.indices[a + 1..] {
            let outside =
                (0..c.dim()).any(|l| !s.indices.contains(&l) && !c.constant(j, k, l).is_zero());
            if outside {
                failures.push((j, k));
            }
        }
    }
    SubalgebraReport { failures }
}
