//! Constructions of intersection representations from structural witnesses.
//! Every producer here returns a representation that passes
//! [`verify_representation`](crate::verify_representation) whenever its
//! witness validates.

mod cycle;
mod forest;
mod partition;
mod width;

use thiserror::Error;

use crate::decomposition::{BoxFailure, ColoringFailure, DecompositionFailure};

pub use cycle::{
    cycle_representation, known_cycle_dimension, ChordPair, CYCLE_C4_THRESHOLD, CYCLE_COGRAPH_PAIRS,
};
pub use forest::{forest_two_cographs, path_two_thresholds};
pub use partition::{
    acyclic_coloring_construction, alpha, matching_schedule, partition_composition,
    star_coloring_construction, MatchingSchedule, Piece, Round,
};
pub use width::{
    box_chromatic_construction, pathwidth_construction, treewidth_construction, AncestorOrder,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("input is not a forest: cycle {cycle:?}")]
    NotAForest { cycle: Vec<usize> },
    #[error("component containing vertex {vertex} is not a path")]
    NotAPath { vertex: usize },
    #[error("root {root} is out of range or shares a component with another root")]
    BadRoot { root: usize },
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(DecompositionFailure),
    #[error("root bag {root} out of range for {bags} bags")]
    BadRootBag { root: usize, bags: usize },
    #[error("invalid box representation: {0}")]
    InvalidBoxes(BoxFailure),
    #[error("box representation has dimension 0")]
    ZeroDimension,
    #[error("invalid colouring: {0}")]
    InvalidColoring(ColoringFailure),
    #[error("colouring has mode {found}, expected {expected}")]
    WrongColoringMode {
        expected: crate::decomposition::ColoringMode,
        found: crate::decomposition::ColoringMode,
    },
    #[error("parts do not partition the vertex set (vertex {vertex})")]
    InvalidPartition { vertex: usize },
    #[error("no parts given")]
    NoParts,
    #[error("missing representation for piece {0}")]
    MissingPiece(Piece),
    #[error("representation for piece {piece} is invalid: {reason}")]
    InvalidPiece { piece: Piece, reason: String },
    #[error("alpha is undefined at 0")]
    AlphaOfZero,
}
