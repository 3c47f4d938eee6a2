//! Intersection representations and their end-to-end verification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::graph::{intersection_of, Graph};
use crate::recognition::{is_cograph, is_threshold, Recognition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cograph,
    Threshold,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cograph => "cograph",
            Family::Threshold => "threshold",
        }
    }

    pub fn recognize(self, g: &Graph) -> Recognition {
        match self {
            Family::Cograph => is_cograph(g),
            Family::Threshold => is_threshold(g),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cograph" => Ok(Family::Cograph),
            "threshold" => Ok(Family::Threshold),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// A claim that a graph equals the intersection of `factors`, each a member
/// of `family`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub family: Family,
    pub factors: Vec<Graph>,
}

impl Representation {
    pub fn new(family: Family, factors: Vec<Graph>) -> Self {
        Representation { family, factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Why a representation was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause")]
pub enum RepresentationFailure {
    /// No factors were supplied.
    #[serde(rename = "empty")]
    NoFactors,
    /// (a) factor has the wrong vertex count.
    #[serde(rename = "a")]
    VertexCount {
        factor: usize,
        expected: usize,
        found: usize,
    },
    /// (b) factor misses an edge of the graph.
    #[serde(rename = "b")]
    MissingEdge { factor: usize, edge: (usize, usize) },
    /// (c) a non-edge survives in every factor.
    #[serde(rename = "c")]
    ExtraEdge { edge: (usize, usize) },
    /// (d) factor is outside the family.
    #[serde(rename = "d")]
    NotInFamily {
        factor: usize,
        certificate: Certificate,
    },
}

impl RepresentationFailure {
    pub fn clause(&self) -> &'static str {
        match self {
            RepresentationFailure::NoFactors => "empty",
            RepresentationFailure::VertexCount { .. } => "a",
            RepresentationFailure::MissingEdge { .. } => "b",
            RepresentationFailure::ExtraEdge { .. } => "c",
            RepresentationFailure::NotInFamily { .. } => "d",
        }
    }
}

impl fmt::Display for RepresentationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepresentationFailure::NoFactors => write!(f, "representation has no factors"),
            RepresentationFailure::VertexCount {
                factor,
                expected,
                found,
            } => write!(
                f,
                "factor {factor} has {found} vertices, expected {expected}"
            ),
            RepresentationFailure::MissingEdge { factor, edge } => {
                write!(f, "factor {factor} lacks edge {}-{}", edge.0, edge.1)
            }
            RepresentationFailure::ExtraEdge { edge } => write!(
                f,
                "non-edge {}-{} is present in every factor",
                edge.0, edge.1
            ),
            RepresentationFailure::NotInFamily {
                factor,
                certificate,
            } => write!(
                f,
                "factor {factor} is not in the family ({})",
                certificate.kind()
            ),
        }
    }
}

/// Checks, in order: (a) vertex counts, (b) every factor contains `g`,
/// (c) the intersection is exactly `g`, (d) family membership of each
/// factor. Returns the first failure.
pub fn verify_representation(g: &Graph, rep: &Representation) -> Result<(), RepresentationFailure> {
    if rep.factors.is_empty() {
        return Err(RepresentationFailure::NoFactors);
    }
    for (i, f) in rep.factors.iter().enumerate() {
        if f.n() != g.n() {
            return Err(RepresentationFailure::VertexCount {
                factor: i,
                expected: g.n(),
                found: f.n(),
            });
        }
    }
    for (i, f) in rep.factors.iter().enumerate() {
        if let Some(edge) = g.edges().find(|&(u, v)| !f.has_edge(u, v)) {
            return Err(RepresentationFailure::MissingEdge { factor: i, edge });
        }
    }
    let meet = intersection_of(&rep.factors).expect("counts checked above");
    if let Some(edge) = meet.edges().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(RepresentationFailure::ExtraEdge { edge });
    }
    for (i, f) in rep.factors.iter().enumerate() {
        let r = rep.family.recognize(f);
        if !r.member {
            return Err(RepresentationFailure::NotInFamily {
                factor: i,
                certificate: r.certificate,
            });
        }
    }
    Ok(())
}
