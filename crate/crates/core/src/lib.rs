//! Exact polynomial algebra for commutants of Lie–Poisson algebras,
//! deformed oscillator realisations and truncated Verma-type modules.

pub mod commutant;
pub mod fixtures;
pub mod liealg;
pub mod linalg;
pub mod oscillator;
pub mod poly;
pub mod rational;
pub mod verma;

/// Engine version recorded in report provenance.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
