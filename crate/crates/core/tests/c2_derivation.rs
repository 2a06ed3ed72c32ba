//! Rebuilds the conformal algebra of the plane from its vector fields and
//! checks the bundled structure constants against it.

use symalg::fixtures;
use symalg::liealg::validate_jacobi;
use symalg::linalg::Matrix;
use symalg::poly::{monomials_up_to_degree, Polynomial, Variables};
use symalg::rational::Rational;

type Field2 = [Polynomial; 2];

fn p(vars: &Variables, s: &str) -> Polynomial {
    Polynomial::parse(vars, s).unwrap()
}

/// `[V, W]_k = V(W_k) − W(V_k)`.
fn bracket(v: &Field2, w: &Field2) -> Field2 {
    let comp = |k: usize| {
        let mut out = Polynomial::zero(v[0].vars());
        for i in 0..2 {
            out = &out
                + &(&(&v[i] * &w[k].partial_derivative(i))
                    - &(&w[i] * &v[k].partial_derivative(i)));
        }
        out
    };
    [comp(0), comp(1)]
}

fn coords(f: &Field2) -> Vec<Rational> {
    let mons = monomials_up_to_degree(2, 0, 2);
    f.iter()
        .flat_map(|c| mons.iter().map(|m| c.coefficient(m)).collect::<Vec<_>>())
        .collect()
}

#[test]
fn bundled_c2_matches_vector_fields() {
    let xy = Variables::new(["X", "Y"]);
    // P1, P2, −J (J = −Y∂X + X∂Y), D, K1, K2
    let basis: Vec<Field2> = [
        ("1", "0"),
        ("0", "1"),
        ("Y", "-X"),
        ("X", "Y"),
        ("X^2 - Y^2", "2*X*Y"),
        ("2*X*Y", "Y^2 - X^2"),
    ]
    .iter()
    .map(|(a, b)| [p(&xy, a), p(&xy, b)])
    .collect();

    let cols: Vec<Vec<Rational>> = basis.iter().map(coords).collect();
    let m = Matrix::from_rows(cols, 12).transpose();
    let c = fixtures::conformal_c2();
    assert!(validate_jacobi(&c).passed());
    for j in 0..6 {
        for k in 0..6 {
            let target = coords(&bracket(&basis[j], &basis[k]));
            let sol = m.solve(&target).expect("conformal fields close");
            for (l, s) in sol.iter().enumerate() {
                assert_eq!(c.constant(j, k, l), *s, "C_{}{}^{}", j + 1, k + 1, l + 1);
            }
        }
    }
}
