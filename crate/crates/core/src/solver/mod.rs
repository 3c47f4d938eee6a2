//! Exact search for intersection representations with a given number of
//! factors.
//!
//! Each non-edge of the input gets a nonempty set of factors it is absent
//! from; factor `i` is the complete graph minus the non-edges assigned to
//! `i`. The search rejects partial assignments in which some factor already
//! induces a forbidden four-vertex graph.

mod cnf;
mod encoding;
mod search;

use serde::Serialize;

use crate::graph::Graph;
use crate::representation::{verify_representation, Family, Representation};

pub use cnf::write_dimacs;
pub use encoding::{forbidden_masks, Encoding};

use search::{Search, SearchResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Sat {
        representation: Representation,
        nodes: u64,
    },
    /// Exhaustive: no representation with `k` factors exists.
    Unsat { nodes: u64 },
    /// The node budget ran out before the search finished.
    Undecided { nodes: u64 },
}

impl Outcome {
    pub fn nodes(&self) -> u64 {
        match self {
            Outcome::Sat { nodes, .. }
            | Outcome::Unsat { nodes }
            | Outcome::Undecided { nodes } => *nodes,
        }
    }
}

/// Whether `g` is the intersection of `k` graphs of `family`. `budget`
/// bounds the number of search nodes.
///
/// # Panics
/// If `k == 0`.
pub fn representable(g: &Graph, family: Family, k: usize, budget: Option<u64>) -> Outcome {
    assert!(k >= 1, "at least one factor");
    let enc = Encoding::new(g, family, k);
    let mut search = Search::new(&enc, budget);
    let result = search.run();
    let nodes = search.nodes;
    match result {
        SearchResult::Unsat => Outcome::Unsat { nodes },
        SearchResult::Undecided => Outcome::Undecided { nodes },
        SearchResult::Sat(present) => {
            let factors = (0..k)
                .map(|i| {
                    let mut f = Graph::complete(g.n());
                    for (e, &(u, v)) in enc.non_edges.iter().enumerate() {
                        if !present[e * k + i] {
                            f.remove_edge(u, v);
                        }
                    }
                    f
                })
                .collect();
            let representation = Representation::new(family, factors);
            assert_eq!(
                verify_representation(g, &representation),
                Ok(()),
                "solver witness"
            );
            Outcome::Sat {
                representation,
                nodes,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Dimension {
    Exact {
        dimension: usize,
        #[serde(skip)]
        witness: Representation,
        nodes: u64,
    },
    /// Every `k <= kmax` is unsatisfiable.
    GreaterThan { kmax: usize, nodes: u64 },
    /// Some `k` ran out of budget before any smaller `k` was satisfiable.
    Undecided { k: usize, nodes: u64 },
}

/// Smallest `k <= kmax` for which [`representable`] succeeds. The budget
/// applies to each `k` separately; `nodes` totals all runs.
pub fn exact_dimension(g: &Graph, family: Family, kmax: usize, budget: Option<u64>) -> Dimension {
    let mut total = 0;
    for k in 1..=kmax {
        let out = representable(g, family, k, budget);
        total += out.nodes();
        match out {
            Outcome::Sat { representation, .. } => {
                return Dimension::Exact {
                    dimension: k,
                    witness: representation,
                    nodes: total,
                }
            }
            Outcome::Undecided { .. } => return Dimension::Undecided { k, nodes: total },
            Outcome::Unsat { .. } => {}
        }
    }
    Dimension::GreaterThan { kmax, nodes: total }
}
