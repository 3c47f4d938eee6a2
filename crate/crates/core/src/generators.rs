//! Named graph families.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("{family} needs {expected} size parameter(s), got {found}")]
    WrongArity {
        family: GraphFamily,
        expected: usize,
        found: usize,
    },
    #[error("{family}: size {size} is too small (minimum {min})")]
    SizeTooSmall {
        family: GraphFamily,
        size: i64,
        min: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Cycle,
    Path,
    Complete,
    Empty,
    /// Centre 0 plus `n` leaves.
    Star,
    Grid,
    Fig1Tree,
    Fig4Outerplanar,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 8] = [
        GraphFamily::Cycle,
        GraphFamily::Path,
        GraphFamily::Complete,
        GraphFamily::Empty,
        GraphFamily::Star,
        GraphFamily::Grid,
        GraphFamily::Fig1Tree,
        GraphFamily::Fig4Outerplanar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Cycle => "cycle",
            GraphFamily::Path => "path",
            GraphFamily::Complete => "complete",
            GraphFamily::Empty => "empty",
            GraphFamily::Star => "star",
            GraphFamily::Grid => "grid",
            GraphFamily::Fig1Tree => "fig1_tree",
            GraphFamily::Fig4Outerplanar => "fig4_outerplanar",
        }
    }

    fn arity(self) -> usize {
        match self {
            GraphFamily::Fig1Tree | GraphFamily::Fig4Outerplanar => 0,
            GraphFamily::Grid => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFamily {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GeneratorError::UnknownFamily(s.to_string()))
    }
}

/// Builds a member of `family` from its integer parameters.
pub fn generate_family(family: GraphFamily, params: &[i64]) -> Result<Graph, GeneratorError> {
    if params.len() != family.arity() {
        return Err(GeneratorError::WrongArity {
            family,
            expected: family.arity(),
            found: params.len(),
        });
    }
    let size = |i: usize, min: i64| -> Result<usize, GeneratorError> {
        let size = params[i];
        if size < min {
            Err(GeneratorError::SizeTooSmall { family, size, min })
        } else {
            Ok(size as usize)
        }
    };
    Ok(match family {
        GraphFamily::Cycle => cycle_graph(size(0, 3)?),
        GraphFamily::Path => path_graph(size(0, 1)?),
        GraphFamily::Complete => complete(size(0, 1)?),
        GraphFamily::Empty => Graph::new(size(0, 1)?),
        GraphFamily::Star => star(size(0, 1)?),
        GraphFamily::Grid => grid_graph(size(0, 1)?, size(1, 1)?),
        GraphFamily::Fig1Tree => fig1_tree(),
        GraphFamily::Fig4Outerplanar => fig4_outerplanar(),
    })
}

fn cycle_graph(n: usize) -> Graph {
    let mut g = path_graph(n);
    g.add_edge(n - 1, 0);
    g
}

fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

fn grid_graph(rows: usize, cols: usize) -> Graph {
    let mut g = Graph::new(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                g.add_edge(v, v + 1);
            }
            if r + 1 < rows {
                g.add_edge(v, v + cols);
            }
        }
    }
    g
}

/// `C_n` on `0..n` with edges `i(i+1)` and `(n-1)0`.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    generate_family(GraphFamily::Cycle, &[n as i64])
}

/// `P_n` on `0..n` with edges `i(i+1)`.
pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    generate_family(GraphFamily::Path, &[n as i64])
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph, GeneratorError> {
    generate_family(GraphFamily::Grid, &[rows as i64, cols as i64])
}

/// The ten-vertex spider `a..j` = `0..9`: paths a-b-c-d, d-e-f-g and d-h-i-j.
pub fn fig1_tree() -> Graph {
    const E: [(usize, usize); 9] = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (3, 7),
        (7, 8),
        (8, 9),
    ];
    Graph::from_edges(10, E).expect("static edge list")
}

/// Index of a letter label `a..j` in [`fig1_tree`].
pub fn fig1_vertex(label: char) -> usize {
    assert!(('a'..='j').contains(&label), "fig1 labels are a..j");
    label as usize - 'a' as usize
}

/// Outerplanar 20-vertex graph: core `x=0, y=1, w=2, z=3` with cycle
/// x-y-w-z-x and chord y-z; core vertex `c` is adjacent to every vertex of
/// its private path `4+4c .. 4+4c+3`.
pub fn fig4_outerplanar() -> Graph {
    let mut g = Graph::new(20);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)] {
        g.add_edge(u, v);
    }
    for core in 0..4 {
        let first = 4 + 4 * core;
        for p in first..first + 4 {
            g.add_edge(core, p);
            if p > first {
                g.add_edge(p - 1, p);
            }
        }
    }
    g
}
