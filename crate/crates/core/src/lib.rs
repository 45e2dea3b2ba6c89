//! Exact counting of partial-coloring completions and construction of
//! diagonally distinct Sudoku squares.
//!
//! The counting side works over any exact integer type implementing
//! [`ExactInt`] (`i64`, `i128`, [`BigInt`]). Most callers want the
//! arbitrary-precision aliases below; fixed-width instantiations report
//! [`Error::Overflow`] instead of wrapping.

pub mod coloring;
pub mod error;
pub mod graph;
pub mod polynomial;
pub mod scalar;
pub mod sudoku;

pub use num_bigint::BigInt;

pub use coloring::{
    count_completions_brute, count_consistent_partitions, count_consistent_partitions_parallel,
    for_each_consistent_partition, read_coloring, validate_coloring, ConsistencyWitness,
    GenericColoring, PartialColoring,
};
pub use error::{Error, Result};
pub use graph::{read_graph, sudoku_graph, write_graph, CellId, Graph};
pub use polynomial::{assemble_polynomial, interpolate_from_oracle, PartialChromaticPolynomial};
pub use scalar::ExactInt;
pub use sudoku::{
    construct_entry, construct_grid, grid_as_coloring, residue, verify_grid, BaseBlock, Family,
    SudokuGrid, VerificationReport, Violation,
};

/// Partial chromatic polynomial with arbitrary-precision coefficients.
pub type Polynomial = PartialChromaticPolynomial<BigInt>;

/// Partial chromatic polynomial over `i64`; arithmetic is overflow-checked.
pub type Polynomial64 = PartialChromaticPolynomial<i64>;

/// Partial chromatic polynomial over `i128`; arithmetic is overflow-checked.
pub type Polynomial128 = PartialChromaticPolynomial<i128>;
