//! Lattice path matroids given by a pair of bounding lattice paths: rank and
//! basis queries, single-element minors, squares and their pull-apart/glue
//! decomposition, brute-force explicit matroids for cross-checking, and
//! finite minor-poset experiments.

pub mod enumerate;
pub mod error;
pub mod minors;
pub mod oracle;
pub mod presentation;
pub mod squares;
pub mod wqo;

pub use error::{Error, Result};
pub use minors::{
    canonical_uniform, extract_uniform_minor, is_presentation_minor, ElementClass, MinorOp,
    MinorStep, MinorWitness,
};
pub use oracle::ExplicitMatroid;
pub use presentation::{
    parse_presentation, Interval, IntervalSystem, PathPresentation, PathWord, Step,
};
pub use squares::{gap_profile, glue, pull_apart, square_width, squares, SquareRecord};
