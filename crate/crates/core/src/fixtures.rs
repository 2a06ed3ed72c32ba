//! Bundled example algebras.

use crate::commutant::{parse_generators, Generator};
use crate::liealg::StructureConstants;

pub const SL2_JSON: &str = include_str!("../fixtures/sl2.json");
pub const C2_JSON: &str = include_str!("../fixtures/c2.json");
pub const C2_GENERATORS_JSON: &str = include_str!("../fixtures/c2_generators.json");

/// `sl(2)` with basis `(h, e, f)`.
pub fn sl2() -> StructureConstants {
    StructureConstants::from_json(SL2_JSON).expect("bundled sl2 fixture")
}

/// The conformal algebra of the Euclidean plane, basis
/// `(P1, P2, -J, D, K1, K2)` named `x1..x6`.
pub fn conformal_c2() -> StructureConstants {
    StructureConstants::from_json(C2_JSON).expect("bundled c2 fixture")
}

/// The six commutant generators of `span{x1}` in the conformal algebra.
pub fn c2_generators() -> Vec<Generator> {
    parse_generators(C2_GENERATORS_JSON, conformal_c2().vars()).expect("bundled generator fixture")
}
