//! Machine-checkable witnesses.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::recognition::Cotree;

/// A witness for a yes- or no-answer about a graph.
///
/// Every variant can be re-checked against the graph it certifies with
/// [`Certificate::check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// `[a, b, c, d]` with exactly the edges ab, bc, cd.
    #[serde(rename = "induced-P4")]
    InducedP4 { vertices: [usize; 4] },
    /// `[a, b, c, d]` with exactly the edges ab, bc, cd, da.
    #[serde(rename = "induced-C4")]
    InducedC4 { vertices: [usize; 4] },
    /// `[a, b, c, d]` with exactly the edges ab, cd.
    #[serde(rename = "induced-2K2")]
    Induced2K2 { vertices: [usize; 4] },
    /// `[a, b, c, d, e]` inducing the cycle a-b-c-d-e-a.
    #[serde(rename = "induced-C5")]
    InducedC5 { vertices: [usize; 5] },
    /// Distinct vertices forming a cycle of odd length.
    #[serde(rename = "odd-cycle")]
    OddCycle { vertices: Vec<usize> },
    /// Side (0 or 1) of every vertex; no edge joins equal sides.
    #[serde(rename = "bipartition")]
    Bipartition { sides: Vec<u8> },
    #[serde(rename = "cotree")]
    Cotree { tree: Cotree },
    /// Removal order in which each vertex is isolated or universal among
    /// the vertices not yet removed.
    #[serde(rename = "elimination-order")]
    EliminationOrder { vertices: Vec<usize> },
    #[serde(rename = "split-partition")]
    SplitPartition {
        clique: Vec<usize>,
        independent: Vec<usize>,
    },
    #[serde(rename = "none")]
    None,
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::InducedP4 { .. } => "induced-P4",
            Certificate::InducedC4 { .. } => "induced-C4",
            Certificate::Induced2K2 { .. } => "induced-2K2",
            Certificate::InducedC5 { .. } => "induced-C5",
            Certificate::OddCycle { .. } => "odd-cycle",
            Certificate::Bipartition { .. } => "bipartition",
            Certificate::Cotree { .. } => "cotree",
            Certificate::EliminationOrder { .. } => "elimination-order",
            Certificate::SplitPartition { .. } => "split-partition",
            Certificate::None => "none",
        }
    }

    /// Re-checks the witness against `g`.
    pub fn check(&self, g: &Graph) -> bool {
        match self {
            Certificate::InducedP4 { vertices } => is_induced_path(g, vertices),
            Certificate::InducedC4 { vertices } => is_induced_cycle(g, vertices),
            Certificate::Induced2K2 {
                vertices: [a, b, c, d],
            } => {
                distinct_in_range(g, &[*a, *b, *c, *d])
                    && exact_edges(g, &[*a, *b, *c, *d], &[(0, 1), (2, 3)])
            }
            Certificate::InducedC5 { vertices } => is_induced_cycle(g, vertices),
            Certificate::OddCycle { vertices } => {
                vertices.len() % 2 == 1 && vertices.len() >= 3 && is_cycle(g, vertices)
            }
            Certificate::Bipartition { sides } => {
                sides.len() == g.n()
                    && sides.iter().all(|&s| s <= 1)
                    && g.edges().all(|(u, v)| sides[u] != sides[v])
            }
            Certificate::Cotree { tree } => tree.evaluate().as_ref() == Some(g),
            Certificate::EliminationOrder { vertices } => check_elimination(g, vertices),
            Certificate::SplitPartition {
                clique,
                independent,
            } => {
                let mut all: Vec<usize> = clique.iter().chain(independent).copied().collect();
                all.sort_unstable();
                all == (0..g.n()).collect::<Vec<_>>()
                    && pairs(clique).all(|(u, v)| g.has_edge(u, v))
                    && pairs(independent).all(|(u, v)| !g.has_edge(u, v))
            }
            Certificate::None => true,
        }
    }
}

fn pairs(vs: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    vs.iter()
        .enumerate()
        .flat_map(move |(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)))
}

fn distinct_in_range(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().all(|&v| v < g.n()) && pairs(vs).all(|(u, v)| u != v)
}

/// The pairs of `vs` that are edges are exactly `expected` (as index pairs).
fn exact_edges(g: &Graph, vs: &[usize], expected: &[(usize, usize)]) -> bool {
    (0..vs.len()).all(|i| {
        (i + 1..vs.len()).all(|j| {
            let want = expected.contains(&(i, j)) || expected.contains(&(j, i));
            g.has_edge(vs[i], vs[j]) == want
        })
    })
}

/// `vs` induces exactly the path `vs[0] - vs[1] - ...`.
pub fn is_induced_path(g: &Graph, vs: &[usize]) -> bool {
    let path: Vec<_> = (1..vs.len()).map(|i| (i - 1, i)).collect();
    distinct_in_range(g, vs) && exact_edges(g, vs, &path)
}

/// `vs` induces exactly the cycle `vs[0] - ... - vs[last] - vs[0]`.
pub fn is_induced_cycle(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    let mut cyc: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    cyc.push((k - 1, 0));
    k >= 3 && distinct_in_range(g, vs) && exact_edges(g, vs, &cyc)
}

/// Consecutive vertices (cyclically) are adjacent and all are distinct.
pub fn is_cycle(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    k >= 3
        && sorted.len() == k
        && vs.iter().all(|&v| v < g.n())
        && (0..k).all(|i| g.has_edge(vs[i], vs[(i + 1) % k]))
}

fn check_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return false;
    }
    let mut alive = vec![true; n];
    let mut left = n;
    for &v in order {
        let deg = g.neighbors(v).filter(|&u| alive[u]).count();
        if deg != 0 && deg != left - 1 {
            return false;
        }
        alive[v] = false;
        left -= 1;
    }
    true
}
