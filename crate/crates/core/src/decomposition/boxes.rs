use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Exact interval endpoint.
pub type Rational = Ratio<i64>;

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: impl Into<Rational>, hi: impl Into<Rational>) -> Self {
        Interval {
            lo: lo.into(),
            hi: hi.into(),
        }
    }

    pub fn meets(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// One `k`-box per vertex: `intervals[u][j]` is the `j`-th side of `u`'s box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRepresentation {
    pub k: usize,
    pub intervals: Vec<Vec<Interval>>,
}

impl BoxRepresentation {
    /// One-dimensional model (an interval model).
    pub fn from_intervals(intervals: Vec<Interval>) -> Self {
        BoxRepresentation {
            k: 1,
            intervals: intervals.into_iter().map(|i| vec![i]).collect(),
        }
    }

    pub fn boxes_meet(&self, u: usize, v: usize) -> bool {
        self.intervals[u]
            .iter()
            .zip(&self.intervals[v])
            .all(|(a, b)| a.meets(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum BoxFailure {
    WrongVertexCount {
        expected: usize,
        found: usize,
    },
    WrongDimension {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    MalformedInterval {
        vertex: usize,
        dimension: usize,
    },
    /// `uv` is an edge but the boxes are disjoint.
    MissingEdge {
        pair: (usize, usize),
    },
    /// `uv` is a non-edge but the boxes intersect.
    MissingSeparation {
        pair: (usize, usize),
    },
}

impl fmt::Display for BoxFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxFailure::WrongVertexCount { expected, found } => {
                write!(f, "{found} boxes for {expected} vertices")
            }
            BoxFailure::WrongDimension {
                vertex,
                expected,
                found,
            } => write!(
                f,
                "vertex {vertex} has {found} intervals, expected {expected}"
            ),
            BoxFailure::MalformedInterval { vertex, dimension } => {
                write!(
                    f,
                    "vertex {vertex}, dimension {dimension}: left end exceeds right end"
                )
            }
            BoxFailure::MissingEdge { pair } => {
                write!(f, "edge {}-{} has disjoint boxes", pair.0, pair.1)
            }
            BoxFailure::MissingSeparation { pair } => {
                write!(f, "non-edge {}-{} has intersecting boxes", pair.0, pair.1)
            }
        }
    }
}

/// Accepts iff `uv ∈ E(g)` exactly when the boxes of `u` and `v` meet.
pub fn validate_box_representation(g: &Graph, b: &BoxRepresentation) -> Result<(), BoxFailure> {
    if b.intervals.len() != g.n() {
        return Err(BoxFailure::WrongVertexCount {
            expected: g.n(),
            found: b.intervals.len(),
        });
    }
    for (u, sides) in b.intervals.iter().enumerate() {
        if sides.len() != b.k {
            return Err(BoxFailure::WrongDimension {
                vertex: u,
                expected: b.k,
                found: sides.len(),
            });
        }
        if let Some(j) = sides.iter().position(|i| i.lo > i.hi) {
            return Err(BoxFailure::MalformedInterval {
                vertex: u,
                dimension: j,
            });
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            match (g.has_edge(u, v), b.boxes_meet(u, v)) {
                (true, false) => return Err(BoxFailure::MissingEdge { pair: (u, v) }),
                (false, true) => return Err(BoxFailure::MissingSeparation { pair: (u, v) }),
                _ => {}
            }
        }
    }
    Ok(())
}
