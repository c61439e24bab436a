//! Exact calculators for degeneracy loci of vector bundle morphisms and for
//! the cohomology of ordinary and isotropic Grassmannians.
//!
//! Everything is integer arithmetic: partitions and their counts, graded
//! quotient rings presented by Chern classes, cell enumerations of possibly
//! degenerate isotropic Grassmannians, and Betti-number formulas for
//! degeneracy loci over an ambient variety described by its Betti numbers.
//!
//! Module map:
//! - [`partitions`]: box partitions, strict partitions, the doubling bijection
//! - [`chern`]: sparse polynomials in Chern classes, series inversion, Schur
//!   determinants and Q̃-polynomials
//! - [`rings`]: presentations of `H*(G(d,n))` and `H*(LG(d,2r))`, graded rank
//!   and torsion tables, restriction maps
//! - [`cells`]: orbit signatures, cell dimensions and Chow ranks of
//!   `LG(d, V; 2r)` with a kernel
//! - [`degeneracy`]: thresholds, Lefschetz ranges and Betti tables of
//!   degeneracy loci
//! - [`worked`]: classical examples (Segre, Plücker, symmetric products)
//!   reproduced against independent oracles
//! - [`cli`]: the command-line front end used by the `degloci` binary

pub mod cache;
pub mod cells;
pub mod chern;
pub mod cli;
pub mod degeneracy;
mod error;
pub mod linalg;
pub mod partitions;
pub mod rings;
mod serde_util;
pub mod table;
pub mod worked;

pub use error::{Error, Result};

/// Version tag written into every JSON document and cache entry.
pub const FORMAT_VERSION: &str = "1";
