//! Variable ordering selection for cylindrical algebraic decomposition.
//!
//! Three heuristics are provided: Brown's syntactic criteria on the input,
//! `sotd` (sum of total degrees over the full projection set) and `ndrr`
//! (distinct real roots of the univariate projection polynomials). The
//! [`stats`] module compares heuristic picks against per-ordering cell counts
//! produced by an external CAD tool.

pub mod cli;
pub mod error;
pub mod heuristics;
pub mod parser;
pub mod poly;
pub mod projection;
pub mod resultant;
pub mod roots;
pub mod stats;
pub mod univariate;

pub use error::{HeuristicError, ParseError, PolyError, ProjectionError, RootsError, StatsError};
pub use heuristics::{
    brown_candidates, brown_triple, choose, choose_all, enumerate_orderings, lex_tiebreak, ndrr_value, sotd_value,
    BrownTriple, Heuristic, HeuristicReport, DEFAULT_ENUMERATION_CAP,
};
pub use parser::{parse_polynomial, parse_system, render};
pub use poly::{Monomial, PolySystem, Polynomial, Variable};
pub use projection::{full_projection, project_once, ProjectionSet, VariableOrdering};
pub use resultant::{discriminant, resultant};
pub use roots::{count_distinct_real_roots, squarefree_part, sturm_sequence};
pub use univariate::{univariate_gcd, UnivariatePolynomial};
