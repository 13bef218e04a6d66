//! Exact integer and rational linear algebra and the spectral predicates built on it.

mod elim;
mod matrix;
mod poly;
mod quotient;
mod spectrum;
mod traces;
mod witness;
mod trees;

pub use elim::Inertia;
pub use matrix::{IntMatrix, RatMatrix};
pub use poly::{char_poly, CharPoly, RatPoly};
pub use quotient::{is_equitable, quotient_interlacing, quotient_matrix, Partition, PartitionError};
pub use spectrum::{integral_spectrum, interlaces, multiplicity, InterlaceReport, Spectrum};
pub use witness::exceeds_with_witness;
pub use traces::{
    adjacency_multiplicity_constraints, bipartite_parameter_cases, distinct_eigenvalue_count,
    distinct_eigenvalue_diameter_bound, glg_multiplicity_solutions, Affine, FixedCounts, MultiplicitySolution,
    ParameterCase,
};
pub use trees::{spanning_tree_count, tree_count_admissible, TreeCountError};
