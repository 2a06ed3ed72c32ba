use serde::Serialize;

use crate::liealg::{
    coadjoint_apply, validate_jacobi, validate_subalgebra, StructureConstants, SubalgebraSelection,
};
use crate::linalg::{complement_basis, echelon_basis, Matrix};
use crate::poly::{monomials_of_degree, Polynomial};

use super::{coefficient_rows, CommutantError, Generator, MonomialBasis};

/// Basis of the homogeneous degree-`h` polynomials annihilated by every
/// coadjoint field `X̃_j`, `j ∈ S`, in reduced echelon form over the
/// degree-`h` monomials (greatest monomial first).
pub fn solve_commutant_degree(
    c: &StructureConstants,
    s: &SubalgebraSelection,
    h: u32,
) -> Result<Vec<Polynomial>, CommutantError> {
    if h == 0 {
        return Err(CommutantError::ZeroDegree);
    }
    if !validate_jacobi(c).passed() {
        return Err(CommutantError::JacobiFailed);
    }
    if !validate_subalgebra(s, c).passed() {
        return Err(CommutantError::NotASubalgebra);
    }
    nullspace_polys(c, s, h)
}

fn nullspace_polys(
    c: &StructureConstants,
    s: &SubalgebraSelection,
    h: u32,
) -> Result<Vec<Polynomial>, CommutantError> {
    let basis = MonomialBasis::new(monomials_of_degree(c.dim(), h));
    let mut rows = Vec::new();
    for &j in s.indices() {
        let images = basis
            .monomials
            .iter()
            .map(|m| {
                coadjoint_apply(
                    j,
                    &Polynomial::monomial(c.vars(), m.clone(), crate::rational::int(1)),
                    c,
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.extend(coefficient_rows(&images));
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(basis.len()).to_rows()
    } else {
        Matrix::from_rows(rows, basis.len()).nullspace()
    };
    let ech = echelon_basis(&kernel, basis.len());
    Ok(ech
        .basis_rows()
        .iter()
        .map(|v| basis.poly(c.vars(), v))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeSolutions {
    pub degree: u32,
    pub solutions: Vec<Polynomial>,
    /// Representatives of the solutions modulo products of lower degrees.
    pub new_generators: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommutantBasis {
    pub degrees: Vec<DegreeSolutions>,
}

impl CommutantBasis {
    /// New generators of all degrees, named `A1, A2, …` in degree order.
    pub fn generators(&self) -> Vec<Generator> {
        self.degrees
            .iter()
            .flat_map(|d| d.new_generators.iter().cloned())
            .enumerate()
            .map(|(i, p)| Generator::new(format!("A{}", i + 1), p))
            .collect()
    }
}

/// Separates new generators from products. `per_degree[d - 1]` holds the
/// degree-`d` solutions, all in one ring.
pub fn filter_new_generators(per_degree: &[Vec<Polynomial>]) -> CommutantBasis {
    let mut degrees = Vec::with_capacity(per_degree.len());
    for (idx, sols) in per_degree.iter().enumerate() {
        let h = idx as u32 + 1;
        let Some(vars) = sols.first().map(|p| p.vars().clone()) else {
            degrees.push(DegreeSolutions {
                degree: h,
                solutions: Vec::new(),
                new_generators: Vec::new(),
            });
            continue;
        };
        let basis = MonomialBasis::new(monomials_of_degree(vars.len(), h));
        let mut products = Vec::new();
        for d1 in 1..h {
            let d2 = h - d1;
            if d1 > d2 {
                break;
            }
            for p in &per_degree[d1 as usize - 1] {
                for q in &per_degree[d2 as usize - 1] {
                    let pq = p * q;
                    products.push(basis.coords(&pq).expect("product of homogeneous solutions"));
                }
            }
        }
        let space: Vec<_> = sols
            .iter()
            .map(|p| basis.coords(p).expect("homogeneous solution"))
            .collect();
        let new = complement_basis(&products, &space, basis.len())
            .iter()
            .map(|v| basis.poly(&vars, v))
            .collect();
        degrees.push(DegreeSolutions {
            degree: h,
            solutions: sols.clone(),
            new_generators: new,
        });
    }
    CommutantBasis { degrees }
}

/// Solves every degree `1..=maxdeg` and filters new generators.
pub fn compute_commutant(
    c: &StructureConstants,
    s: &SubalgebraSelection,
    maxdeg: u32,
) -> Result<CommutantBasis, CommutantError> {
    if maxdeg == 0 {
        return Err(CommutantError::ZeroDegree);
    }
    let per_degree = (1..=maxdeg)
        .map(|h| solve_commutant_degree(c, s, h))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(filter_new_generators(&per_degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::Variables;

    fn sel(v: Vec<usize>) -> SubalgebraSelection {
        SubalgebraSelection::new(v, 6).unwrap()
    }

    #[test]
    fn abelian_degree_one_is_everything() {
        let c = StructureConstants::abelian(Variables::numbered("x", 4));
        let s = SubalgebraSelection::new(vec![0, 2], 4).unwrap();
        let sols = solve_commutant_degree(&c, &s, 1).unwrap();
        assert_eq!(sols.len(), 4);
    }

    #[test]
    fn c2_degree_one_and_two() {
        let c = fixtures::conformal_c2();
        let s = sel(vec![0]);
        let d1 = solve_commutant_degree(&c, &s, 1).unwrap();
        let names: Vec<String> = d1.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["x1", "x2"]);
        let d2 = solve_commutant_degree(&c, &s, 2).unwrap();
        assert_eq!(d2.len(), 7);
        for p in &d2 {
            assert!(coadjoint_apply(0, p, &c).unwrap().is_zero());
        }
    }

    #[test]
    fn c2_new_generators_match_known_forms() {
        let c = fixtures::conformal_c2();
        let basis = compute_commutant(&c, &sel(vec![0]), 2).unwrap();
        assert_eq!(basis.degrees[0].new_generators.len(), 2);
        assert_eq!(basis.degrees[1].new_generators.len(), 4);
        let printed: Vec<String> = basis.degrees[1]
            .new_generators
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            printed,
            [
                "x1*x3 + x2*x4",
                "x3^2 + x2*x6",
                "x3*x4 + 1/2*x2*x5 - 1/2*x1*x6",
                "x4^2 - x1*x5",
            ]
        );
    }

    #[test]
    fn full_algebra_degree_two_casimirs() {
        let c = fixtures::conformal_c2();
        let sols = solve_commutant_degree(&c, &SubalgebraSelection::all(6), 2).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(solve_commutant_degree(&c, &SubalgebraSelection::all(6), 1)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn preconditions_are_checked() {
        let c = fixtures::sl2();
        let s = SubalgebraSelection::new(vec![1, 2], 3).unwrap();
        assert_eq!(
            solve_commutant_degree(&c, &s, 1),
            Err(CommutantError::NotASubalgebra)
        );
        let s = SubalgebraSelection::new(vec![0], 3).unwrap();
        assert_eq!(
            solve_commutant_degree(&c, &s, 0),
            Err(CommutantError::ZeroDegree)
        );
    }
}
