use std::collections::VecDeque;

use super::ConstructionError;
use crate::decomposition::{
    validate_box_representation, validate_coloring, validate_path_decomposition,
    validate_tree_decomposition, BoxRepresentation, Coloring, ColoringMode, PathDecomposition,
    TreeDecomposition,
};
use crate::graph::Graph;
use crate::representation::{Family, Representation};

/// The ancestor order of a rooted tree decomposition.
///
/// `top[u]` is the root-most bag holding `u`; `u R v` iff `top[u]` is a
/// proper ancestor of `top[v]`, or the tops coincide and `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AncestorOrder {
    pub top: Vec<usize>,
    bag_parent: Vec<usize>,
    bag_depth: Vec<usize>,
}

impl AncestorOrder {
    pub fn new(d: &TreeDecomposition, root: usize, n: usize) -> Self {
        let adj = d.adjacency();
        let mut bag_parent = vec![usize::MAX; d.bags.len()];
        let mut bag_depth = vec![0; d.bags.len()];
        let mut order = Vec::with_capacity(d.bags.len());
        bag_parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &adj[x] {
                if bag_parent[y] == usize::MAX {
                    bag_parent[y] = x;
                    bag_depth[y] = bag_depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let mut top = vec![usize::MAX; n];
        for &x in &order {
            for &v in &d.bags[x] {
                if top[v] == usize::MAX {
                    top[v] = x;
                }
            }
        }
        AncestorOrder {
            top,
            bag_parent,
            bag_depth,
        }
    }

    fn is_proper_ancestor(&self, a: usize, mut b: usize) -> bool {
        if self.bag_depth[a] >= self.bag_depth[b] {
            return false;
        }
        while self.bag_depth[b] > self.bag_depth[a] {
            b = self.bag_parent[b];
        }
        a == b
    }

    /// `u R v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        let (hu, hv) = (self.top[u], self.top[v]);
        if hu == hv {
            u < v
        } else {
            self.is_proper_ancestor(hu, hv)
        }
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.precedes(u, v) || self.precedes(v, u)
    }
}

/// Colours the chordal completion top-down (by depth of `top`, then index),
/// each vertex taking the least colour absent from its earlier bag-mates.
/// Uses at most `width + 1` colours.
fn completion_coloring(d: &TreeDecomposition, ord: &AncestorOrder, n: usize) -> Vec<usize> {
    let mut mates = Graph::new(n);
    for bag in &d.bags {
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                mates.add_edge(u, v);
            }
        }
    }
    let mut vs: Vec<usize> = (0..n).collect();
    vs.sort_by_key(|&v| (ord.bag_depth[ord.top[v]], v));
    let mut color = vec![usize::MAX; n];
    for v in vs {
        let used: Vec<usize> = mates.neighbors(v).map(|u| color[u]).collect();
        color[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    color
}

/// `G_i` for every colour `i < colors`: edges of `g`, `R`-incomparable
/// pairs, and `u R v` with `c(u) != i`.
fn color_factors(g: &Graph, ord: &AncestorOrder, color: &[usize], colors: usize) -> Vec<Graph> {
    let n = g.n();
    (0..colors)
        .map(|i| {
            let mut h = Graph::complete(n);
            for (u, v) in g.non_edges() {
                let (lo, hi) = if ord.precedes(u, v) { (u, v) } else { (v, u) };
                if ord.comparable(u, v) && color[lo] == i {
                    h.remove_edge(lo, hi);
                }
            }
            h
        })
        .collect()
}

fn comparability_factor(g: &Graph, ord: &AncestorOrder) -> Graph {
    let n = g.n();
    let mut h = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if ord.comparable(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// `width + 2` cographs `[G_0, G_1, ..]` from a tree decomposition rooted
/// at bag `root`.
pub fn treewidth_construction(
    g: &Graph,
    d: &TreeDecomposition,
    root: usize,
) -> Result<Representation, ConstructionError> {
    let width =
        validate_tree_decomposition(g, d).map_err(ConstructionError::InvalidDecomposition)?;
    if root >= d.bags.len() {
        return Err(ConstructionError::BadRootBag {
            root,
            bags: d.bags.len(),
        });
    }
    let ord = AncestorOrder::new(d, root, g.n());
    let color = completion_coloring(d, &ord, g.n());
    let mut factors = vec![comparability_factor(g, &ord)];
    factors.extend(color_factors(g, &ord, &color, width + 1));
    Ok(Representation::new(Family::Cograph, factors))
}

/// `width + 1` threshold graphs from a path decomposition rooted at its
/// first bag.
pub fn pathwidth_construction(
    g: &Graph,
    d: &PathDecomposition,
) -> Result<Representation, ConstructionError> {
    let width =
        validate_path_decomposition(g, d).map_err(ConstructionError::InvalidDecomposition)?;
    let td = d.to_tree();
    let ord = AncestorOrder::new(&td, 0, g.n());
    let color = completion_coloring(&td, &ord, g.n());
    Ok(Representation::new(
        Family::Threshold,
        color_factors(g, &ord, &color, width + 1),
    ))
}

/// One threshold factor `G_ij` per colour `i` and box dimension `j`
/// (colour-major order).
pub fn box_chromatic_construction(
    g: &Graph,
    b: &BoxRepresentation,
    c: &Coloring,
) -> Result<Representation, ConstructionError> {
    validate_box_representation(g, b).map_err(ConstructionError::InvalidBoxes)?;
    let proper = Coloring {
        mode: ColoringMode::Proper,
        ..c.clone()
    };
    validate_coloring(g, &proper).map_err(ConstructionError::InvalidColoring)?;
    if b.k == 0 {
        return Err(ConstructionError::ZeroDimension);
    }
    let n = g.n();
    let mut factors = Vec::with_capacity(c.num_colors * b.k);
    for i in 0..c.num_colors {
        for j in 0..b.k {
            let mut h = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    let (cu, cv) = (c.colors[u] == i, c.colors[v] == i);
                    let keep = match (cu, cv) {
                        (false, false) => true,
                        (true, true) => false,
                        (true, false) => b.intervals[u][j].hi >= b.intervals[v][j].lo,
                        (false, true) => b.intervals[v][j].hi >= b.intervals[u][j].lo,
                    };
                    if keep {
                        h.add_edge(u, v);
                    }
                }
            }
            factors.push(h);
        }
    }
    Ok(Representation::new(Family::Threshold, factors))
}
