use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Bags on the nodes of a tree skeleton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    #[serde(rename = "skeleton_edges")]
    pub skeleton: Vec<(usize, usize)>,
}

/// Bags along a path; bag `i` is adjacent to bag `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

fn max_bag_width(bags: &[Vec<usize>]) -> usize {
    bags.iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0)
        .saturating_sub(1)
}

impl TreeDecomposition {
    /// Largest bag size minus one (the witnessed width).
    pub fn width(&self) -> usize {
        max_bag_width(&self.bags)
    }

    /// Skeleton adjacency lists; assumes in-range indices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.skeleton {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        max_bag_width(&self.bags)
    }

    pub fn to_tree(&self) -> TreeDecomposition {
        TreeDecomposition {
            bags: self.bags.clone(),
            skeleton: (1..self.bags.len()).map(|i| (i - 1, i)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum DecompositionFailure {
    NoBags,
    SkeletonIndexOutOfRange {
        edge: (usize, usize),
    },
    /// Skeleton has a cycle, a loop, or is disconnected.
    SkeletonNotATree,
    VertexOutOfRange {
        bag: usize,
        vertex: usize,
    },
    VertexUncovered {
        vertex: usize,
    },
    VertexBagsDisconnected {
        vertex: usize,
    },
    EdgeUncovered {
        edge: (usize, usize),
    },
}

impl fmt::Display for DecompositionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionFailure::NoBags => write!(f, "decomposition has no bags"),
            DecompositionFailure::SkeletonIndexOutOfRange { edge } => {
                write!(f, "skeleton edge {}-{} names a missing bag", edge.0, edge.1)
            }
            DecompositionFailure::SkeletonNotATree => write!(f, "skeleton is not a tree"),
            DecompositionFailure::VertexOutOfRange { bag, vertex } => {
                write!(f, "bag {bag} holds out-of-range vertex {vertex}")
            }
            DecompositionFailure::VertexUncovered { vertex } => {
                write!(f, "vertex {vertex} is in no bag")
            }
            DecompositionFailure::VertexBagsDisconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} are not connected")
            }
            DecompositionFailure::EdgeUncovered { edge } => {
                write!(f, "edge {}-{} lies in no bag", edge.0, edge.1)
            }
        }
    }
}

fn check_skeleton(d: &TreeDecomposition) -> Result<(), DecompositionFailure> {
    let nb = d.bags.len();
    if nb == 0 {
        return Err(DecompositionFailure::NoBags);
    }
    for &(a, b) in &d.skeleton {
        if a >= nb || b >= nb {
            return Err(DecompositionFailure::SkeletonIndexOutOfRange { edge: (a, b) });
        }
    }
    if d.skeleton.len() != nb - 1 || d.skeleton.iter().any(|&(a, b)| a == b) {
        return Err(DecompositionFailure::SkeletonNotATree);
    }
    let adj = d.adjacency();
    let mut seen = vec![false; nb];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    if seen.iter().all(|&s| s) {
        Ok(())
    } else {
        Err(DecompositionFailure::SkeletonNotATree)
    }
}

/// Checks the skeleton, bag contents, per-vertex connectivity and edge
/// coverage, in that order. Returns the width on success.
pub fn validate_tree_decomposition(
    g: &Graph,
    d: &TreeDecomposition,
) -> Result<usize, DecompositionFailure> {
    check_skeleton(d)?;
    let n = g.n();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(DecompositionFailure::VertexOutOfRange { bag: i, vertex: v });
            }
            if holders[v].last() != Some(&i) {
                holders[v].push(i);
            }
        }
    }
    let adj = d.adjacency();
    let mut mark = vec![usize::MAX; d.bags.len()];
    for (v, hs) in holders.iter().enumerate() {
        let Some(&start) = hs.first() else {
            return Err(DecompositionFailure::VertexUncovered { vertex: v });
        };
        for &h in hs {
            mark[h] = v;
        }
        // walk the skeleton restricted to bags holding v
        let mut reached = 1;
        let mut stack = vec![start];
        mark[start] = usize::MAX - 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if mark[y] == v {
                    mark[y] = usize::MAX - 1;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != hs.len() {
            return Err(DecompositionFailure::VertexBagsDisconnected { vertex: v });
        }
    }
    let bag_sets: Vec<BTreeSet<usize>> =
        d.bags.iter().map(|b| b.iter().copied().collect()).collect();
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|&h| bag_sets[h].contains(&v)) {
            return Err(DecompositionFailure::EdgeUncovered { edge: (u, v) });
        }
    }
    Ok(d.width())
}

pub fn validate_path_decomposition(
    g: &Graph,
    d: &PathDecomposition,
) -> Result<usize, DecompositionFailure> {
    validate_tree_decomposition(g, &d.to_tree())
}

/// Min-degree elimination with fill-in (ties to the lowest index).
/// Returns the elimination order and each vertex's higher neighbourhood.
fn min_degree_elimination(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = g.n();
    let mut work = g.clone();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut later = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (work.degree(v), v))
            .expect("vertices remain");
        let nbrs: Vec<usize> = work.neighbors(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                work.add_edge(a, b);
            }
        }
        for &a in &nbrs {
            work.remove_edge(v, a);
        }
        alive[v] = false;
        order.push(v);
        later[v] = nbrs;
    }
    (order, later)
}

/// Merges skeleton neighbours whenever one bag contains the other.
fn contract_nested(bags: Vec<BTreeSet<usize>>, edges: Vec<(usize, usize)>) -> TreeDecomposition {
    let nb = bags.len();
    let mut bags: Vec<Option<BTreeSet<usize>>> = bags.into_iter().map(Some).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nb];
    for (a, b) in edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    loop {
        let mut merged = false;
        for i in 0..nb {
            let Some(bi) = &bags[i] else { continue };
            let target = adj[i]
                .iter()
                .copied()
                .find(|&j| bags[j].as_ref().is_some_and(|bj| bi.is_subset(bj)));
            if let Some(j) = target {
                let nbrs: Vec<usize> = adj[i].iter().copied().filter(|&k| k != j).collect();
                for k in nbrs {
                    adj[k].remove(&i);
                    adj[k].insert(j);
                    adj[j].insert(k);
                }
                adj[j].remove(&i);
                adj[i].clear();
                bags[i] = None;
                merged = true;
            }
        }
        if !merged {
            break;
        }
    }
    let keep: Vec<usize> = (0..nb).filter(|&i| bags[i].is_some()).collect();
    let mut index = vec![usize::MAX; nb];
    for (new, &old) in keep.iter().enumerate() {
        index[old] = new;
    }
    let mut skeleton = Vec::new();
    for &i in &keep {
        for &j in &adj[i] {
            if i < j {
                skeleton.push((index[i], index[j]));
            }
        }
    }
    skeleton.sort_unstable();
    TreeDecomposition {
        bags: keep
            .iter()
            .map(|&i| bags[i].take().unwrap().into_iter().collect())
            .collect(),
        skeleton,
    }
}

/// Tree decomposition from min-degree elimination: the bag of `v` is `v`
/// plus its not-yet-eliminated neighbours in the fill graph. No optimality
/// is claimed; the width is only a witnessed upper bound.
pub fn heuristic_tree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![Vec::new()],
            skeleton: Vec::new(),
        };
    }
    let (order, later) = min_degree_elimination(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let bags: Vec<BTreeSet<usize>> = order
        .iter()
        .map(|&v| std::iter::once(v).chain(later[v].iter().copied()).collect())
        .collect();
    let mut edges = Vec::new();
    for (i, &v) in order.iter().enumerate().take(n - 1) {
        let parent = later[v].iter().map(|&u| pos[u]).min().unwrap_or(i + 1);
        edges.push((i, parent));
    }
    contract_nested(bags, edges)
}

/// Path decomposition read off a vertex ordering: bag `i` holds the `i`-th
/// vertex plus every earlier vertex that still has a neighbour at or after
/// position `i`.
pub fn path_decomposition_from_order(g: &Graph, order: &[usize]) -> PathDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let last: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).map(|u| pos[u]).fold(pos[v], usize::max))
        .collect();
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (i, &v) in order.iter().enumerate() {
        let mut bag: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| last[u] >= i)
            .collect();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    // drop bags nested in a neighbour
    let mut out: Vec<Vec<usize>> = Vec::new();
    for bag in bags {
        if let Some(prev) = out.last() {
            if bag.iter().all(|v| prev.contains(v)) {
                continue;
            }
            if prev.iter().all(|v| bag.contains(v)) {
                out.pop();
            }
        }
        out.push(bag);
    }
    if out.is_empty() {
        out.push(Vec::new());
    }
    PathDecomposition { bags: out }
}

fn bfs_order(g: &Graph, start: usize) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let starts = std::iter::once(start).chain(0..n);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

/// Path decomposition from breadth-first orderings; for graphs up to 200
/// vertices every start vertex is tried and the narrowest result kept.
pub fn heuristic_path_decomposition(g: &Graph) -> PathDecomposition {
    let n = g.n();
    if n == 0 {
        return PathDecomposition {
            bags: vec![Vec::new()],
        };
    }
    let starts: Vec<usize> = if n <= 200 {
        (0..n).collect()
    } else {
        vec![(0..n).min_by_key(|&v| (g.degree(v), v)).unwrap()]
    };
    starts
        .into_iter()
        .map(|s| path_decomposition_from_order(g, &bfs_order(g, s)))
        .min_by_key(|d| (d.width(), d.bags.len()))
        .unwrap()
}
