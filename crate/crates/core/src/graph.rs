//! Simple undirected graphs on dense vertex sets `0..n`.
//!
//! Adjacency is stored as one bit row per vertex, so membership queries are
//! O(1) and neighbourhood set operations work a word at a time.

use std::fmt;

use thiserror::Error;

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
    #[error("intersection of an empty list of graphs")]
    EmptyIntersection,
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        let twice: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        twice as usize / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts edge `uv`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.set(u, v, true);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set(u, v, false);
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / WORD, v % WORD);
        let (wv, bv) = (v * self.words + u / WORD, u % WORD);
        if on {
            self.rows[wu] |= 1 << bu;
            self.rows[wv] |= 1 << bv;
        } else {
            self.rows[wu] &= !(1 << bu);
            self.rows[wv] &= !(1 << bv);
        }
    }

    /// Adjacency row of `u` as packed 64-bit words.
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(u))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`, lexicographic.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::complete(self.n);
        for (u, v) in self.edges() {
            g.set(u, v, false);
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u != v && self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Vertices reachable from `start`, as a sorted list.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components, each sorted, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let comp = self.component_of(s);
            for &v in &comp {
                seen[v] = true;
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0).len() == self.n
    }

    /// Edge-list rendering: `n m` header followed by sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Join: `a` on `0..a.n`, `b` shifted after it, plus every cross pair.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let mut g = disjoint_union(a, b);
    for u in 0..a.n {
        for v in 0..b.n {
            g.set(u, a.n + v, true);
        }
    }
    g
}

/// Disjoint union with `b` relabelled onto `a.n..a.n + b.n`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::new(a.n + b.n);
    for (u, v) in a.edges() {
        g.set(u, v, true);
    }
    for (u, v) in b.edges() {
        g.set(a.n + u, a.n + v, true);
    }
    g
}

/// Edge-wise intersection of graphs on a common vertex set.
pub fn intersection_of(graphs: &[Graph]) -> Result<Graph, GraphError> {
    let (first, rest) = graphs.split_first().ok_or(GraphError::EmptyIntersection)?;
    let mut out = first.clone();
    for g in rest {
        if g.n != out.n {
            return Err(GraphError::VertexCountMismatch(out.n, g.n));
        }
        for (a, b) in out.rows.iter_mut().zip(&g.rows) {
            *a &= *b;
        }
    }
    Ok(out)
}

/// Iterator over set bits of a packed row.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn complement_of_triangle_is_empty() {
        assert_eq!(complete(3).complement(), Graph::new(3));
    }

    #[test]
    fn c5_complement_is_the_chord_cycle() {
        let expected = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(cycle(5).unwrap().complement(), expected);
    }

    #[test]
    fn complement_involution_on_p4() {
        let p4 = path(4).unwrap();
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::new(1);
        assert_eq!(join(&k1, &k1), complete(2));
        assert_eq!(join(&complete(2), &complete(2)), complete(4));
        let e2 = Graph::new(2);
        let k22 = join(&e2, &e2);
        assert_eq!(
            k22.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 3), (1, 2), (1, 3)]
        );
        // K_{2,2} is the 4-cycle 0-2-1-3-0
        let c4 = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(k22, c4);
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = complete(2);
        let two_k2 = disjoint_union(&k2, &k2);
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(
            disjoint_union(&Graph::new(1), &Graph::new(1)),
            Graph::new(2)
        );
        let g = disjoint_union(&cycle(3).unwrap(), &Graph::new(1));
        assert_eq!((g.n(), g.edge_count()), (4, 3));
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(
            c5.induced_subgraph(&[0, 1, 2, 3]).unwrap(),
            path(4).unwrap()
        );
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), c5);
        assert_eq!(
            complete(5).induced_subgraph(&[1, 3, 4]).unwrap(),
            complete(3)
        );
        assert!(matches!(
            c5.induced_subgraph(&[0, 7]),
            Err(GraphError::VertexOutOfRange { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn intersection_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(intersection_of(std::slice::from_ref(&c4)).unwrap(), c4);
        let mut a = complete(4);
        a.remove_edge(0, 2);
        let mut b = complete(4);
        b.remove_edge(1, 3);
        assert_eq!(intersection_of(&[a, b]).unwrap(), c4);

        let c5 = cycle(5).unwrap();
        let mut f1 = c5.clone();
        f1.add_edge(0, 3);
        f1.add_edge(1, 4);
        let mut f2 = c5.clone();
        f2.add_edge(0, 2);
        f2.add_edge(1, 3);
        assert_eq!(intersection_of(&[f1, f2]).unwrap(), c5);

        assert_eq!(
            intersection_of(&[Graph::new(3), Graph::new(4)]),
            Err(GraphError::VertexCountMismatch(3, 4))
        );
        assert_eq!(intersection_of(&[]), Err(GraphError::EmptyIntersection));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn wide_graphs_cross_word_boundaries() {
        let g = Graph::from_edges(130, [(0, 129), (64, 65), (63, 64)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.complement().edge_count(), 130 * 129 / 2 - 3);
    }
}
