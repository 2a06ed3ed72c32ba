#![allow(dead_code)]

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symalg::liealg::StructureConstants;
use symalg::linalg::{echelon_basis, Matrix};
use symalg::poly::{Monomial, Polynomial, Variables};
use symalg::rational::{ratio, Rational};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

/// Random polynomial with up to `terms` terms, each variable to power ≤ `max_exp`.
pub fn poly(vars: Variables, terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), small_rational()),
        0..=terms,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(
            &vars,
            ts.into_iter().map(|(e, c)| (Monomial::from_dense(&e), c)),
        )
    })
}

/// Homogeneous polynomial of total degree `d` with up to `terms` terms.
pub fn homogeneous(vars: Variables, d: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let mons = symalg::poly::monomials_of_degree(vars.len(), d);
    let k = mons.len();
    prop::collection::vec((0..k, small_rational()), 1..=terms).prop_map(move |ts| {
        Polynomial::from_terms(&vars, ts.into_iter().map(|(i, c)| (mons[i].clone(), c)))
    })
}

/// `{p, q} = Σ_{j,k} C_jk^l x_l ∂_j p ∂_k q`, straight from the definition.
pub fn naive_bracket(p: &Polynomial, q: &Polynomial, c: &StructureConstants) -> Polynomial {
    let vars = c.vars();
    let mut out = Polynomial::zero(vars);
    for j in 0..c.dim() {
        let dp = p.partial_derivative(j);
        if dp.is_zero() {
            continue;
        }
        for k in 0..c.dim() {
            let dq = q.partial_derivative(k);
            if dq.is_zero() {
                continue;
            }
            for l in 0..c.dim() {
                let coef = c.constant(j, k, l);
                if coef.is_zero() {
                    continue;
                }
                let term = &(&dp * &dq) * &Polynomial::var(vars, l).scale(&coef);
                out = &out + &term;
            }
        }
    }
    out
}

/// Rank by plain fraction elimination, kept separate from the library's RREF.
pub fn oracle_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in col..cols {
                    let sub = &f * &rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_entry(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.random_range(-3..=3);
    let d: i64 = rng.random_range(1..=2);
    ratio(n, d)
}

fn commutator(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
    a.commutator(b)
}

fn flat(m: &Matrix<Rational>) -> Vec<Rational> {
    m.to_rows().concat()
}

/// A random Lie algebra realised by matrices: two or three random strictly
/// upper-triangular (nilpotent) or upper-triangular (solvable) `n × n`
/// matrices, closed under commutators. Jacobi holds by construction. The
/// result is then put in a random basis.
pub fn random_matrix_algebra(seed: u64) -> StructureConstants {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let solvable = rng.random_bool(0.5);
    let n = if solvable { 3 } else { 4 };
    let gens = rng.random_range(2..=3);
    let mut basis: Vec<Matrix<Rational>> = Vec::new();
    let push = |m: Matrix<Rational>, basis: &mut Vec<Matrix<Rational>>| -> bool {
        let mut rows: Vec<Vec<Rational>> = basis.iter().map(flat).collect();
        rows.push(flat(&m));
        let before = basis.len();
        if echelon_basis(&rows, n * n).pivots.len() > before {
            basis.push(m);
            true
        } else {
            false
        }
    };
    for _ in 0..gens {
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for c in r..n {
                if c > r || solvable {
                    m[(r, c)] = random_entry(&mut rng);
                }
            }
        }
        push(m, &mut basis);
    }
    loop {
        let mut grew = false;
        let current = basis.clone();
        for a in &current {
            for b in &current {
                if push(commutator(a, b), &mut basis) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let d = basis.len();
    let coords = Matrix::from_rows(basis.iter().map(flat).collect(), n * n).transpose();
    let vars = Variables::numbered("x", d);
    let mut c = StructureConstants::abelian(vars.clone());
    for j in 0..d {
        for k in (j + 1)..d {
            let br = flat(&commutator(&basis[j], &basis[k]));
            let sol = coords.solve(&br).expect("matrix algebra is closed");
            let terms: Vec<(usize, Rational)> = sol
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            c.set_bracket(j, k, terms).unwrap();
        }
    }
    // random unimodular-ish change of basis
    let mut t = Matrix::identity(d);
    for r in 0..d {
        for col in (r + 1)..d {
            t[(r, col)] = random_entry(&mut rng);
        }
    }
    let perm_first = rng.random_range(0..d);
    let mut t_rows = t.to_rows();
    t_rows.swap(0, perm_first);
    let t = Matrix::from_rows(t_rows, d);
    c.change_basis(&t, vars)
        .expect("triangular change of basis is invertible")
}
