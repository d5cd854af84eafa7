//! Exact integer and rational linear algebra.

pub mod cone;
pub mod formal;
pub mod lattice;
pub mod matrix;

pub use cone::{cone_contains, equality, feasible_point, Inequality, RationalCone};
pub use formal::{FormalBasis, FormalReal};
pub use lattice::{int_lattice_index, lattice_index, Index, ValueLattice};
pub use matrix::{
    hermite_rows, rational_kernel, smith_normal_form, solve_integer, solve_left_rational, IntMatrix, SnfResult,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("generator of the sublattice is not in the superlattice")]
    NotASublattice,
    #[error("vector dimension does not match the ambient dimension")]
    DimensionMismatch,
}
