//! Representations of graphs as intersections of cographs and threshold
//! graphs: recognition with certificates, constructive upper bounds from
//! decompositions and colourings, the two-threshold test, and an exact
//! solver for small instances.

pub mod certificate;
pub mod construction;
pub mod cover;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod io;
pub mod json;
pub mod recognition;
pub mod representation;
pub mod solver;

pub use certificate::Certificate;
pub use graph::{disjoint_union, intersection_of, join, Graph, GraphError};
pub use representation::{verify_representation, Family, Representation, RepresentationFailure};
