mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use symalg::commutant::{
    closure_relations, compute_commutant, expand, solve_commutant_degree, CommutantError,
};
use symalg::fixtures;
use symalg::liealg::{StructureConstants, SubalgebraSelection};
use symalg::poly::{monomials_of_degree, Polynomial};
use symalg::rational::Rational;

const SEEDS: u64 = 12;

fn algebras() -> &'static [StructureConstants] {
    static ALGEBRAS: OnceLock<Vec<StructureConstants>> = OnceLock::new();
    ALGEBRAS.get_or_init(|| (0..SEEDS).map(common::random_matrix_algebra).collect())
}

/// Coefficient matrix of `p ↦ {x_j, p}` for `j ∈ s` on degree-`h` monomials,
/// built with the naive bracket.
fn constraint_rows(c: &StructureConstants, s: &[usize], h: u32) -> (Vec<Vec<Rational>>, usize) {
    let mons = monomials_of_degree(c.dim(), h);
    let mut rows = Vec::new();
    for &j in s {
        let xj = Polynomial::var(c.vars(), j);
        let images: Vec<Polynomial> = mons
            .iter()
            .map(|m| {
                common::naive_bracket(
                    &xj,
                    &Polynomial::monomial(c.vars(), m.clone(), symalg::rational::int(1)),
                    c,
                )
            })
            .collect();
        for out in &mons {
            rows.push(images.iter().map(|p| p.coefficient(out)).collect());
        }
    }
    (rows, mons.len())
}

fn selection() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..SEEDS as usize).prop_flat_map(|i| {
        let d = algebras()[i].dim();
        (
            Just(i),
            prop_oneof![
                (0..d).prop_map(|j| vec![j]),
                Just((0..d).collect::<Vec<_>>())
            ],
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn solutions_are_sound_and_complete((i, s) in selection(), h in 1u32..=3) {
        let c = &algebras()[i];
        let sel = SubalgebraSelection::new(s.clone(), c.dim()).unwrap();
        let sols = solve_commutant_degree(c, &sel, h).unwrap();
        for p in &sols {
            prop_assert!(p.is_homogeneous() && p.degree() == Some(h));
            for &j in &s {
                prop_assert!(common::naive_bracket(&Polynomial::var(c.vars(), j), p, c).is_zero());
            }
        }
        let (rows, n) = constraint_rows(c, &s, h);
        prop_assert_eq!(sols.len(), n - common::oracle_rank(rows));
        let leads: std::collections::BTreeSet<_> = sols.iter().map(|p| p.leading_term().unwrap().0.clone()).collect();
        prop_assert_eq!(leads.len(), sols.len());
    }

    #[test]
    fn closure_relations_round_trip((i, s) in selection()) {
        let c = &algebras()[i];
        let sel = SubalgebraSelection::new(s, c.dim()).unwrap();
        let gens = compute_commutant(c, &sel, 2).unwrap().generators();
        if gens.is_empty() {
            return Ok(());
        }
        match closure_relations(&gens, c, 3) {
            Ok(pres) => {
                for a in 0..gens.len() {
                    for b in 0..gens.len() {
                        let truth = common::naive_bracket(&gens[a].poly, &gens[b].poly, c);
                        let back = expand(&pres.relation(a, b), &gens, c.vars()).unwrap();
                        prop_assert_eq!(back, truth);
                    }
                }
            }
            Err(CommutantError::NotClosed { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

#[test]
fn new_generators_are_independent_of_products() {
    let c = fixtures::conformal_c2();
    let sel = SubalgebraSelection::new(vec![0], 6).unwrap();
    let basis = compute_commutant(&c, &sel, 3).unwrap();
    // Degree-3 solutions are all products of lower ones.
    assert!(basis.degrees[2].new_generators.is_empty());
    let d2 = &basis.degrees[1];
    let mons = monomials_of_degree(6, 2);
    let coords = |p: &Polynomial| mons.iter().map(|m| p.coefficient(m)).collect::<Vec<_>>();
    let d1 = &basis.degrees[0].solutions;
    let mut rows: Vec<_> = d1
        .iter()
        .flat_map(|p| d1.iter().map(move |q| coords(&(p * q))))
        .collect();
    let products = common::oracle_rank(rows.clone());
    rows.extend(d2.new_generators.iter().map(coords));
    assert_eq!(
        common::oracle_rank(rows),
        products + d2.new_generators.len()
    );
    assert_eq!(products + d2.new_generators.len(), d2.solutions.len());
}
