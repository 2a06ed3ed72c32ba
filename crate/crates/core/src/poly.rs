//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials are ordered graded reverse-lexicographically against the ring's
//! variable order (`x1 > x2 > ... > xn`). The leading term of a polynomial is
//! its greatest monomial, and canonical rendering lists terms from greatest
//! to smallest. The same order fixes the column order of every linear system
//! assembled over monomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("evaluation point has {got} coordinates, ring has {expected} variables")]
    PointLength { expected: usize, got: usize },
    #[error("substitution needs {expected} images, got {got}")]
    SubstitutionArity { expected: usize, got: usize },
    #[error("parse error at byte {pos} in {input:?}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },
}

/// An ordered list of variable names. Two polynomials can only be combined
/// when their variable lists agree name for name.
#[derive(Clone)]
pub struct Variables(Arc<[String]>);

impl Variables {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Variables(names.into_iter().map(Into::into).collect())
    }

    /// `prefix1, prefix2, ..., prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Variables::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for Variables {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Variables {}

impl fmt::Debug for Variables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Product of variable powers, stored sparsely as `(index, exponent)` pairs
/// sorted by index with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(i: usize) -> Self {
        Monomial { exps: vec![(i, 1)] }
    }

    pub fn new<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial {
            exps: acc.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Monomial::new(exps.iter().copied().enumerate())
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for &(v, e) in &self.exps {
            out[v] = e;
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().copied()
    }

    /// Largest variable index present, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// `d/dx_var` of the monomial as `(multiplier, monomial)`, or `None` when
    /// the variable is absent.
    pub fn derivative(&self, var: usize) -> Option<(u32, Monomial)> {
        let pos = self.exps.iter().position(|&(v, _)| v == var)?;
        let e = self.exps[pos].1;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(pos);
        } else {
            exps[pos].1 = e - 1;
        }
        Some((e, Monomial { exps }))
    }

    /// Weighted degree with per-variable weights.
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps.iter().map(|&(v, e)| weights[v] * e).sum()
    }

    pub fn render(&self, vars: &Variables) -> String {
        if self.exps.is_empty() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    vars.name(v).to_string()
                } else {
                    format!("{}^{}", vars.name(v), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| format!("x{}^{}", v + 1, e))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Ord for Monomial {
    /// Graded reverse-lexicographic order: higher total degree first; among
    /// equal degrees, the monomial with the smaller exponent in the last
    /// variable where they differ is the greater one.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (a.len(), b.len());
        loop {
            match (i > 0, j > 0) {
                (true, true) => {
                    let (va, ea) = a[i - 1];
                    let (vb, eb) = b[j - 1];
                    if va == vb {
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                        i -= 1;
                        j -= 1;
                    } else if va > vb {
                        return Ordering::Less;
                    } else {
                        return Ordering::Greater;
                    }
                }
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                (false, false) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `nvars` variables of total degree exactly `h`, listed
/// from greatest to smallest in graded reverse-lexicographic order.
/// There are `C(h + nvars - 1, h)` of them.
pub fn monomials_of_degree(nvars: usize, h: u32) -> Vec<Monomial> {
    fn rec(var: usize, nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == nvars {
            cur[var] = left;
            out.push(Monomial::from_dense(cur));
            cur[var] = 0;
            return;
        }
        for e in 0..=left {
            cur[var] = e;
            rec(var + 1, nvars, left - e, cur, out);
        }
        cur[var] = 0;
    }
    if nvars == 0 {
        return if h == 0 {
            vec![Monomial::one()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(0, nvars, h, &mut vec![0; nvars], &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// All monomials of total degree `lo..=hi`, greatest first.
pub fn monomials_up_to_degree(nvars: usize, lo: u32, hi: u32) -> Vec<Monomial> {
    (lo..=hi)
        .rev()
        .flat_map(|d| monomials_of_degree(nvars, d))
        .collect()
}

#[derive(Clone)]
pub struct Polynomial {
    vars: Variables,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Variables) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Variables, c: Rational) -> Self {
        Polynomial::monomial(vars, Monomial::one(), c)
    }

    pub fn one(vars: &Variables) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    /// The coordinate polynomial `x_i` (0-based index).
    ///
    /// Panics when `i` is out of range.
    pub fn var(vars: &Variables, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        Polynomial::monomial(vars, Monomial::var(i), Rational::one())
    }

    pub fn monomial(vars: &Variables, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(
        vars: &Variables,
        it: I,
    ) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from leading (greatest monomial) to last.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::RingMismatch {
                left: self.vars.names().join(","),
                right: other.vars.names().join(","),
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var` (0-based).
    /// Differentiating in a variable the polynomial does not contain gives 0.
    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.derivative(var) {
                out.add_term(dm, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::PointLength {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluation in double precision.
    pub fn evaluate_f64(&self, point: &[f64]) -> Result<f64, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::PointLength {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.iter().fold(crate::rational::to_f64(c), |t, (v, e)| {
                    t * point[v].powi(e as i32)
                })
            })
            .sum())
    }

    /// Replaces variable `i` by `images[i]`. All images must share one ring,
    /// which becomes the ring of the result.
    pub fn substitute(
        &self,
        images: &[Polynomial],
        target: &Variables,
    ) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::SubstitutionArity {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        for img in images {
            if img.vars() != target {
                return Err(PolyError::RingMismatch {
                    left: target.names().join(","),
                    right: img.vars().names().join(","),
                });
            }
        }
        // Powers are cached per (variable, exponent).
        let mut powers: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, e) in m.iter() {
                let pw = powers
                    .entry((v, e))
                    .or_insert_with(|| images[v].pow(e))
                    .clone();
                t = &t * &pw;
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Part of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Same terms, relabelled into a ring with the same number of variables.
    pub fn with_vars(&self, vars: &Variables) -> Polynomial {
        assert_eq!(vars.len(), self.nvars());
        Polynomial {
            vars: vars.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars()];
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                seen[v] = true;
            }
        }
        (0..self.nvars()).filter(|&v| seen[v]).collect()
    }

    /// Divides by the leading coefficient so the leading term is monic.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Parses the canonical rendering, e.g. `x1*x3 - 1/2*x2^2 + 3`.
    /// Accepted grammar: a signed sum of products of rational constants and
    /// `name` or `name^k` factors, whitespace-insensitive.
    pub fn parse(vars: &Variables, input: &str) -> Result<Polynomial, PolyError> {
        Parser {
            vars,
            input,
            bytes: input.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

struct Parser<'a> {
    vars: &'a Variables,
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            input: self.input.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected integer"))
    }

    fn digits(&mut self) -> Result<&str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(&self.input[start..self.pos])
    }

    fn parse(mut self) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(self.vars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    Rational::one()
                }
                Some(b'-') => {
                    self.pos += 1;
                    -Rational::one()
                }
                Some(_) if first => Rational::one(),
                Some(_) => return Err(self.err("expected '+' or '-'")),
            };
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, sign * c);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = self.digits()?.to_string();
                    let text = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        format!("{num}/{}", self.digits()?)
                    } else {
                        num
                    };
                    coeff *= parse_rational(&text).map_err(|_| self.err("bad rational"))?;
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let start = self.pos;
                    while self.pos < self.bytes.len()
                        && (self.bytes[self.pos].is_ascii_alphanumeric()
                            || self.bytes[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = &self.input[start..self.pos];
                    let idx = self
                        .vars
                        .index_of(name)
                        .ok_or_else(|| self.err(&format!("unknown variable {name}")))?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        u32::try_from(self.number()?).map_err(|_| self.err("exponent too large"))?
                    } else {
                        1
                    };
                    mono = mono.mul(&Monomial::new([(idx, e)]));
                }
                _ => return Err(self.err("expected factor")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    /// Canonical rendering: leading term first, ` + ` / ` - ` separators,
    /// coefficients as `num/den` (omitted when their magnitude is 1).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", m.render(&self.vars))?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), m.render(&self.vars))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on a ring mismatch; use [`Polynomial::checked_add`] otherwise.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn ring6() -> Variables {
        Variables::numbered("x", 6)
    }

    fn p(vars: &Variables, s: &str) -> Polynomial {
        Polynomial::parse(vars, s).unwrap()
    }

    #[test]
    fn add_cancels_and_identity() {
        let r = Variables::numbered("x", 2);
        let sum = &p(&r, "x1 + x2") + &p(&r, "-x1");
        assert_eq!(sum, p(&r, "x2"));
        let q = p(&r, "3*x1^2 - x2");
        assert_eq!(&q + &Polynomial::zero(&r), q);
    }

    #[test]
    fn add_generators() {
        let r = ring6();
        let s = &p(&r, "x1*x3 + x2*x4") + &p(&r, "x2*x6 + x3^2");
        assert_eq!(s, p(&r, "x1*x3 + x2*x4 + x2*x6 + x3^2"));
        assert_eq!(s.num_terms(), 4);
    }

    #[test]
    fn mul_examples() {
        let r = ring6();
        assert_eq!(&p(&r, "x2") * &p(&r, "x6"), p(&r, "x2*x6"));
        let r2 = Variables::numbered("x", 2);
        assert_eq!(
            &p(&r2, "x1 + x2") * &p(&r2, "x1 - x2"),
            p(&r2, "x1^2 - x2^2")
        );
        // A2 * A6 with the printed A6 = -x1*x5 + x4^2.
        let prod = &p(&r, "x2") * &p(&r, "-x1*x5 + x4^2");
        assert_eq!(prod, p(&r, "-x1*x2*x5 + x2*x4^2"));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let a = Polynomial::var(&Variables::numbered("x", 2), 0);
        let b = Polynomial::var(&Variables::numbered("y", 2), 0);
        assert!(matches!(
            a.checked_add(&b),
            Err(PolyError::RingMismatch { .. })
        ));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn derivatives() {
        let r = ring6();
        assert_eq!(p(&r, "x1*x3 + x2*x4").partial_derivative(2), p(&r, "x1"));
        assert!(p(&r, "7/3").partial_derivative(4).is_zero());
        assert_eq!(p(&r, "x2*x6 + x3^2").partial_derivative(2), p(&r, "2*x3"));
    }

    #[test]
    fn monomial_counts_and_order() {
        let m = monomials_of_degree(2, 2);
        assert_eq!(
            m,
            vec![
                Monomial::from_dense(&[2, 0]),
                Monomial::from_dense(&[1, 1]),
                Monomial::from_dense(&[0, 2])
            ]
        );
        assert_eq!(monomials_of_degree(6, 1).len(), 6);
        assert_eq!(monomials_of_degree(6, 2).len(), 21);
        // grevlex: x1*x3 > x3^2 > x3*x4 > x4^2 > x1*x5
        let r = ring6();
        let lead = |s: &str| p(&r, s).leading_term().unwrap().0.clone();
        assert!(lead("x1*x3") > lead("x3^2"));
        assert!(lead("x3^2") > lead("x3*x4"));
        assert!(lead("x3*x4") > lead("x4^2"));
        assert!(lead("x4^2") > lead("x1*x5"));
    }

    #[test]
    fn evaluation() {
        let r2 = Variables::numbered("x", 2);
        assert_eq!(
            p(&r2, "x1^2 + x2^2").evaluate(&[int(1), int(1)]).unwrap(),
            int(2)
        );
        let r = ring6();
        let pt: Vec<Rational> = (1..=6).map(int).collect();
        assert_eq!(Polynomial::zero(&r).evaluate(&pt).unwrap(), int(0));
        assert_eq!(p(&r, "x1*x3 + x2*x4").evaluate(&pt).unwrap(), int(11));
        assert!(matches!(
            p(&r, "x1").evaluate(&pt[..3]),
            Err(PolyError::PointLength { .. })
        ));
    }

    #[test]
    fn canonical_rendering() {
        let r = ring6();
        assert_eq!(p(&r, "x2*x4 + x1*x3").to_string(), "x1*x3 + x2*x4");
        assert_eq!(
            p(&r, "x1*x6 - 2*x3*x4 - x2*x5").to_string(),
            "-2*x3*x4 - x2*x5 + x1*x6"
        );
        assert_eq!(p(&r, "1/2*x1^2 - 3/4").to_string(), "1/2*x1^2 - 3/4");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        let q = Polynomial::monomial(&r, Monomial::var(0), ratio(-1, 3));
        assert_eq!(q.to_string(), "-1/3*x1");
    }

    #[test]
    fn parse_rejects_garbage() {
        let r = ring6();
        assert!(Polynomial::parse(&r, "x7").is_err());
        assert!(Polynomial::parse(&r, "").is_err());
        assert!(Polynomial::parse(&r, "x1 x2").is_err());
        assert!(Polynomial::parse(&r, "x1 + * x2").is_err());
    }

    #[test]
    fn substitution_expands() {
        let gens = Variables::numbered("A", 2);
        let r = ring6();
        let images = vec![p(&r, "x1"), p(&r, "x1*x3 + x2*x4")];
        let q = p(&gens, "A1^2 + 2*A2");
        assert_eq!(
            q.substitute(&images, &r).unwrap(),
            p(&r, "x1^2 + 2*x1*x3 + 2*x2*x4")
        );
    }
}
