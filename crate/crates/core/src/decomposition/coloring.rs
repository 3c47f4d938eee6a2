use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringMode {
    Proper,
    /// Every two colour classes induce a forest.
    Acyclic,
    /// Every two colour classes induce a star forest.
    Star,
}

impl ColoringMode {
    pub fn name(self) -> &'static str {
        match self {
            ColoringMode::Proper => "proper",
            ColoringMode::Acyclic => "acyclic",
            ColoringMode::Star => "star",
        }
    }
}

impl fmt::Display for ColoringMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ColoringMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "proper" => Ok(ColoringMode::Proper),
            "acyclic" => Ok(ColoringMode::Acyclic),
            "star" => Ok(ColoringMode::Star),
            other => Err(format!("unknown colouring mode {other:?}")),
        }
    }
}

/// Vertex colouring with colour indices `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub mode: ColoringMode,
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    /// Colour count taken as one more than the largest index used.
    pub fn new(mode: ColoringMode, colors: Vec<usize>) -> Self {
        let num_colors = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring {
            mode,
            colors,
            num_colors,
        }
    }

    /// Colour classes `V_0 .. V_{num_colors-1}` (possibly empty).
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum ColoringFailure {
    WrongLength { expected: usize, found: usize },
    ColorOutOfRange { vertex: usize, color: usize },
    Monochromatic { edge: (usize, usize) },
    BicoloredCycle { vertices: Vec<usize> },
    BicoloredP4 { vertices: [usize; 4] },
}

impl fmt::Display for ColoringFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringFailure::WrongLength { expected, found } => {
                write!(f, "{found} colours for {expected} vertices")
            }
            ColoringFailure::ColorOutOfRange { vertex, color } => {
                write!(f, "vertex {vertex} has out-of-range colour {color}")
            }
            ColoringFailure::Monochromatic { edge } => {
                write!(f, "edge {}-{} is monochromatic", edge.0, edge.1)
            }
            ColoringFailure::BicoloredCycle { vertices } => {
                write!(f, "bicoloured cycle {vertices:?}")
            }
            ColoringFailure::BicoloredP4 { vertices } => write!(f, "bicoloured path {vertices:?}"),
        }
    }
}

/// Rotates a cycle to start at its smallest vertex, heading towards the
/// smaller of that vertex's two cycle neighbours.
fn normalize_cycle(mut cyc: Vec<usize>) -> Vec<usize> {
    let k = cyc.len();
    let i = (0..k).min_by_key(|&i| cyc[i]).unwrap();
    cyc.rotate_left(i);
    if k > 2 && cyc[k - 1] < cyc[1] {
        cyc[1..].reverse();
    }
    cyc
}

fn find_bicolored_cycle(g: &Graph, colors: &[usize]) -> Option<Vec<usize>> {
    let mut groups: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (colors[u].min(colors[v]), colors[u].max(colors[v]));
        groups.entry((a, b)).or_default().push((u, v));
    }
    let n = g.n();
    for edges in groups.values() {
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut forest: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
            if ru == rv {
                // path v -> u inside the forest closes the cycle
                let mut prev = vec![usize::MAX; n];
                prev[v] = v;
                let mut queue = std::collections::VecDeque::from([v]);
                while let Some(x) = queue.pop_front() {
                    for &y in &forest[x] {
                        if prev[y] == usize::MAX {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                let mut cyc = vec![u];
                let mut x = u;
                while x != v {
                    x = prev[x];
                    cyc.push(x);
                }
                return Some(normalize_cycle(cyc));
            }
            parent[ru] = rv;
            forest[u].push(v);
            forest[v].push(u);
        }
    }
    None
}

fn find_bicolored_p4(g: &Graph, colors: &[usize]) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        let a = g.neighbors(b).find(|&a| a != c && colors[a] == colors[c]);
        let d = g.neighbors(c).find(|&d| d != b && colors[d] == colors[b]);
        if let (Some(a), Some(d)) = (a, d) {
            return Some([a, b, c, d]);
        }
    }
    None
}

/// Mode-appropriate check: proper colourings reject monochromatic edges,
/// acyclic ones also bicoloured cycles, star ones also bicoloured `P4`s.
pub fn validate_coloring(g: &Graph, c: &Coloring) -> Result<(), ColoringFailure> {
    if c.colors.len() != g.n() {
        return Err(ColoringFailure::WrongLength {
            expected: g.n(),
            found: c.colors.len(),
        });
    }
    if let Some(v) = c.colors.iter().position(|&x| x >= c.num_colors) {
        return Err(ColoringFailure::ColorOutOfRange {
            vertex: v,
            color: c.colors[v],
        });
    }
    if let Some(edge) = g.edges().find(|&(u, v)| c.colors[u] == c.colors[v]) {
        return Err(ColoringFailure::Monochromatic { edge });
    }
    match c.mode {
        ColoringMode::Proper => Ok(()),
        ColoringMode::Acyclic => match find_bicolored_cycle(g, &c.colors) {
            Some(vertices) => Err(ColoringFailure::BicoloredCycle { vertices }),
            None => Ok(()),
        },
        ColoringMode::Star => match find_bicolored_p4(g, &c.colors) {
            Some(vertices) => Err(ColoringFailure::BicoloredP4 { vertices }),
            None => Ok(()),
        },
    }
}

/// Greedy colouring in descending-degree order (ties to the lowest index),
/// each vertex taking the smallest colour unused by its neighbours.
pub fn greedy_proper_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![usize::MAX; n];
    for v in order {
        let used: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    Coloring::new(ColoringMode::Proper, colors)
}

/// Result of [`exact_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    Found {
        coloring: Coloring,
        nodes: u64,
    },
    /// Search space exhausted: no colouring with at most `k` colours.
    Unsat {
        nodes: u64,
    },
    /// Node budget ran out first.
    Undecided {
        nodes: u64,
    },
}

impl ColoringOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            ColoringOutcome::Found { nodes, .. }
            | ColoringOutcome::Unsat { nodes }
            | ColoringOutcome::Undecided { nodes } => *nodes,
        }
    }
}

const NONE: usize = usize::MAX;

struct ColoringSearch<'a> {
    g: &'a Graph,
    mode: ColoringMode,
    k: usize,
    order: Vec<usize>,
    colors: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl ColoringSearch<'_> {
    /// Two-coloured cycle through `v` (coloured `c`) via neighbours of
    /// colour `b`: two of them connected in the `{b, c}` subgraph minus `v`.
    fn closes_cycle(&self, v: usize, c: usize) -> bool {
        let g = self.g;
        let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for u in g.neighbors(v) {
            if self.colors[u] != NONE {
                by_color.entry(self.colors[u]).or_default().push(u);
            }
        }
        for (&b, nbrs) in &by_color {
            if nbrs.len() < 2 {
                continue;
            }
            // one search per component of the {b, c} subgraph minus `v`
            let mut seen = vec![false; g.n()];
            seen[v] = true;
            for &start in nbrs {
                if seen[start] {
                    return true;
                }
                seen[start] = true;
                let mut stack = vec![start];
                while let Some(x) = stack.pop() {
                    for y in g.neighbors(x) {
                        let cy = self.colors[y];
                        if !seen[y] && (cy == b || cy == c) {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
        }
        false
    }

    /// Two-coloured `P4` containing `v` once it takes colour `c`.
    fn makes_bicolored_p4(&self, v: usize, c: usize) -> bool {
        let g = self.g;
        let col = &self.colors;
        for x in g.neighbors(v) {
            let b = col[x];
            if b == NONE {
                continue;
            }
            // v - x - y - z
            for y in g.neighbors(x) {
                if y != v && col[y] == c && g.neighbors(y).any(|z| z != x && col[z] == b) {
                    return true;
                }
            }
            // x - v - y - z
            for y in g.neighbors(v) {
                if y != x && col[y] == b && g.neighbors(y).any(|z| z != v && col[z] == c) {
                    return true;
                }
            }
        }
        false
    }

    fn feasible(&self, v: usize, c: usize) -> bool {
        if self.g.neighbors(v).any(|u| self.colors[u] == c) {
            return false;
        }
        match self.mode {
            ColoringMode::Proper => true,
            ColoringMode::Acyclic => !self.closes_cycle(v, c),
            ColoringMode::Star => !self.makes_bicolored_p4(v, c),
        }
    }

    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn search(&mut self, i: usize, used: usize) -> Option<bool> {
        if i == self.order.len() {
            return Some(true);
        }
        let v = self.order[i];
        for c in 0..self.k.min(used + 1) {
            if self.budget.is_some_and(|b| self.nodes >= b) {
                return None;
            }
            self.nodes += 1;
            if !self.feasible(v, c) {
                continue;
            }
            self.colors[v] = c;
            match self.search(i + 1, used.max(c + 1)) {
                Some(false) => {}
                other => return other,
            }
            self.colors[v] = NONE;
        }
        Some(false)
    }
}

/// Backtracking search for a `mode` colouring with at most `k` colours.
///
/// Vertices are taken in descending-degree order; colour symmetry is broken
/// by never opening more than one new colour at a time. `budget` caps the
/// number of explored nodes.
pub fn exact_coloring(
    g: &Graph,
    mode: ColoringMode,
    k: usize,
    budget: Option<u64>,
) -> ColoringOutcome {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut s = ColoringSearch {
        g,
        mode,
        k,
        order,
        colors: vec![NONE; n],
        nodes: 0,
        budget,
    };
    match s.search(0, 0) {
        Some(true) => ColoringOutcome::Found {
            coloring: Coloring::new(mode, s.colors),
            nodes: s.nodes,
        },
        Some(false) => ColoringOutcome::Unsat { nodes: s.nodes },
        None => ColoringOutcome::Undecided { nodes: s.nodes },
    }
}

/// Smallest `k` (up to `kmax`) admitting a `mode` colouring, with the
/// colouring. `None` if every `k <= kmax` is unsatisfiable or undecided.
pub fn minimum_coloring(
    g: &Graph,
    mode: ColoringMode,
    kmax: usize,
    budget: Option<u64>,
) -> Option<Coloring> {
    (1..=kmax.max(1)).find_map(|k| match exact_coloring(g, mode, k, budget) {
        ColoringOutcome::Found { coloring, .. } => Some(coloring),
        _ => None,
    })
}

/// Greedy proper colouring of the square of `g`. Any two vertices at
/// distance at most two get different colours, which makes the result a
/// star colouring of `g`.
pub fn distance_two_coloring(g: &Graph, mode: ColoringMode) -> Coloring {
    let n = g.n();
    let mut sq = g.clone();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                sq.add_edge(a, b);
            }
        }
    }
    let mut c = greedy_proper_coloring(&sq);
    c.mode = mode;
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn col(mode: ColoringMode, colors: &[usize]) -> Coloring {
        Coloring::new(mode, colors.to_vec())
    }

    #[test]
    fn validation_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(
            validate_coloring(&c5, &col(ColoringMode::Proper, &[0, 1, 0, 1, 2])),
            Ok(())
        );
        let c4 = cycle(4).unwrap();
        assert_eq!(
            validate_coloring(&c4, &col(ColoringMode::Acyclic, &[0, 1, 0, 1])),
            Err(ColoringFailure::BicoloredCycle {
                vertices: vec![0, 1, 2, 3]
            })
        );
        let p4 = path(4).unwrap();
        assert_eq!(
            validate_coloring(&p4, &col(ColoringMode::Star, &[0, 1, 0, 1])),
            Err(ColoringFailure::BicoloredP4 {
                vertices: [0, 1, 2, 3]
            })
        );
        assert_eq!(
            validate_coloring(&p4, &col(ColoringMode::Acyclic, &[0, 1, 0, 1])),
            Ok(())
        );
    }

    #[test]
    fn validation_errors() {
        let p3 = path(3).unwrap();
        assert_eq!(
            validate_coloring(&p3, &col(ColoringMode::Proper, &[0, 0, 1])),
            Err(ColoringFailure::Monochromatic { edge: (0, 1) })
        );
        let bad = Coloring {
            mode: ColoringMode::Proper,
            colors: vec![0, 1, 2],
            num_colors: 2,
        };
        assert_eq!(
            validate_coloring(&p3, &bad),
            Err(ColoringFailure::ColorOutOfRange {
                vertex: 2,
                color: 2
            })
        );
        assert!(matches!(
            validate_coloring(&p3, &col(ColoringMode::Proper, &[0, 1])),
            Err(ColoringFailure::WrongLength { .. })
        ));
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_proper_coloring(&Graph::new(4)).colors, vec![0; 4]);
        assert_eq!(greedy_proper_coloring(&complete(4)).num_colors, 4);
        let c4 = greedy_proper_coloring(&cycle(4).unwrap());
        assert_eq!(c4.colors, vec![0, 1, 0, 1]);
    }

    #[test]
    fn exact_examples() {
        let p4 = path(4).unwrap();
        assert!(matches!(
            exact_coloring(&p4, ColoringMode::Star, 2, None),
            ColoringOutcome::Unsat { .. }
        ));
        let ColoringOutcome::Found { coloring, .. } =
            exact_coloring(&p4, ColoringMode::Star, 3, None)
        else {
            panic!()
        };
        assert_eq!(validate_coloring(&p4, &coloring), Ok(()));
        let c5 = cycle(5).unwrap();
        assert!(matches!(
            exact_coloring(&c5, ColoringMode::Proper, 2, None),
            ColoringOutcome::Unsat { .. }
        ));
        let c4 = cycle(4).unwrap();
        let found = minimum_coloring(&c4, ColoringMode::Acyclic, 4, None).unwrap();
        assert_eq!(found.num_colors, 3);
        assert_eq!(validate_coloring(&c4, &found), Ok(()));
    }

    #[test]
    fn budget_yields_undecided() {
        let g = complete(6);
        assert!(matches!(
            exact_coloring(&g, ColoringMode::Proper, 5, Some(10)),
            ColoringOutcome::Undecided { nodes: 10 }
        ));
    }

    #[test]
    fn square_coloring_is_star() {
        let g = crate::generators::fig4_outerplanar();
        let c = distance_two_coloring(&g, ColoringMode::Star);
        assert_eq!(validate_coloring(&g, &c), Ok(()));
    }
}
