//! Exact multiplicities and random-diagram measures for the classical skew
//! Howe dual pairs acting on exterior algebras.
//!
//! Module layout:
//! - [`exact`]: Laurent polynomials in `q`, half-integers, Gamma at half-integers, determinants.
//! - [`partitions`]: diagrams in a box, type D weights, coordinate changes.
//! - [`multiplicity`]: determinant and product formulas, q-dimensions, identity checks.
//! - [`crystals`]: brute-force tensor-power crystals used as an independent oracle.
//! - [`patterns`]: GT and Proctor patterns, lozenge tilings, lattice paths, plane partitions.
//! - [`ensembles`]: exact measures, samplers, the BC z-measure and q-normalizations.
//! - [`limitshape`]: limit densities, limit curves and diagram boundaries (floating point).

pub mod crystals;
pub mod ensembles;
pub mod exact;
pub mod limitshape;
pub mod multiplicity;
pub mod partitions;
pub mod patterns;

pub use ensembles::{measure_table, sample, MeasureTable, Pair};
pub use exact::{HalfInt, QLaurent};
pub use multiplicity::{verify_duality, DualitySpec, LieType, Series};
pub use partitions::{Partition, TypeDWeight};

/// Any error raised by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exact::ExactError),
    #[error(transparent)]
    Partition(#[from] partitions::PartitionError),
    #[error(transparent)]
    Mult(#[from] multiplicity::MultError),
    #[error(transparent)]
    Crystal(#[from] crystals::CrystalError),
    #[error(transparent)]
    Pattern(#[from] patterns::PatternError),
    #[error(transparent)]
    Ensemble(#[from] ensembles::EnsembleError),
    #[error(transparent)]
    Shape(#[from] limitshape::ShapeError),
}
