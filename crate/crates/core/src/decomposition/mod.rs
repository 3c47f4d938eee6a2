//! Structural witnesses: tree and path decompositions, box representations
//! and colourings, with validators and producers.

mod boxes;
mod coloring;
mod tree;

pub use boxes::{validate_box_representation, BoxFailure, BoxRepresentation, Interval, Rational};
pub use coloring::{
    distance_two_coloring, exact_coloring, greedy_proper_coloring, minimum_coloring,
    validate_coloring, Coloring, ColoringFailure, ColoringMode, ColoringOutcome,
};
pub use tree::{
    heuristic_path_decomposition, heuristic_tree_decomposition, path_decomposition_from_order,
    validate_path_decomposition, validate_tree_decomposition, DecompositionFailure,
    PathDecomposition, TreeDecomposition,
};
