//! Recognition of cographs, threshold graphs and split graphs.
//!
//! Every answer comes with a [`Certificate`]: a cotree, elimination order or
//! split partition for members, a small forbidden induced subgraph otherwise.

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::graph::{BitIter, Graph};

/// Outcome of a membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    pub member: bool,
    pub certificate: Certificate,
}

/// Union/join tree whose leaves are the vertices of a cograph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "lowercase")]
pub enum Cotree {
    Leaf { vertex: usize },
    Union { children: Vec<Cotree> },
    Join { children: Vec<Cotree> },
}

impl Cotree {
    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf { vertex } => out.push(*vertex),
            Cotree::Union { children } | Cotree::Join { children } => {
                children.iter().for_each(|c| c.collect_leaves(out))
            }
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    /// The graph this cotree describes, or `None` if its leaves are not
    /// exactly `0..n` once each.
    pub fn evaluate(&self) -> Option<Graph> {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        if leaves.iter().enumerate().any(|(i, &v)| i != v) {
            return None;
        }
        let mut g = Graph::new(leaves.len());
        self.add_edges(&mut g);
        Some(g)
    }

    fn add_edges(&self, g: &mut Graph) {
        match self {
            Cotree::Leaf { .. } => {}
            Cotree::Union { children } => children.iter().for_each(|c| c.add_edges(g)),
            Cotree::Join { children } => {
                let sets: Vec<Vec<usize>> = children.iter().map(Cotree::leaves).collect();
                for (i, a) in sets.iter().enumerate() {
                    for b in &sets[i + 1..] {
                        for &u in a {
                            for &v in b {
                                g.add_edge(u, v);
                            }
                        }
                    }
                }
                children.iter().for_each(|c| c.add_edges(g));
            }
        }
    }
}

/// Packed vertex subset sized for a particular graph.
#[derive(Clone)]
struct VSet(Vec<u64>);

impl VSet {
    fn empty(n: usize) -> Self {
        VSet(vec![0; n.div_ceil(64)])
    }

    fn of(n: usize, vs: &[usize]) -> Self {
        let mut s = VSet::empty(n);
        vs.iter().for_each(|&v| s.insert(v));
        s
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn first(&self) -> Option<usize> {
        BitIter::new(&self.0).next()
    }

    fn iter(&self) -> BitIter<'_> {
        BitIter::new(&self.0)
    }

    /// `self & row`, or `self & !row` when `complement` is set.
    fn masked(&self, row: &[u64], complement: bool) -> VSet {
        VSet(
            self.0
                .iter()
                .zip(row)
                .map(|(s, r)| if complement { s & !r } else { s & r })
                .collect(),
        )
    }

    fn subtract(&mut self, other: &VSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

/// Components of `G[vs]`, or of its complement when `complement` is set.
/// Components are sorted and ordered by lowest vertex.
fn split_components(g: &Graph, vs: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut unvisited = VSet::of(g.n(), vs);
    let mut comps = Vec::new();
    while let Some(s) = unvisited.first() {
        unvisited.remove(s);
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let next = unvisited.masked(g.row(u), complement);
            for v in next.iter() {
                comp.push(v);
                stack.push(v);
            }
            unvisited.subtract(&next);
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Induced P4 inside `G[vs]`; `G[vs]` must contain one.
fn find_p4_in(g: &Graph, vs: &[usize]) -> Option<[usize; 4]> {
    let within = VSet::of(g.n(), vs);
    for &b in vs {
        let nb = within.masked(g.row(b), false);
        let nbs: Vec<usize> = nb.iter().collect();
        for (i, &a) in nbs.iter().enumerate() {
            for &c in &nbs[i + 1..] {
                if g.has_edge(a, c) {
                    continue;
                }
                // a-b-c induced; extend at either end
                for (x, y) in [(a, c), (c, a)] {
                    let mut ext = within.masked(g.row(y), false);
                    ext.subtract(&nb);
                    ext.remove(b);
                    let ext = ext.masked(g.row(x), true);
                    if let Some(d) = ext.iter().find(|&d| d != x) {
                        return Some([x, b, y, d]);
                    }
                }
            }
        }
    }
    None
}

fn cotree_of(g: &Graph, vs: Vec<usize>) -> Result<Cotree, [usize; 4]> {
    if vs.len() == 1 {
        return Ok(Cotree::Leaf { vertex: vs[0] });
    }
    let comps = split_components(g, &vs, false);
    if comps.len() > 1 {
        let children = comps
            .into_iter()
            .map(|c| cotree_of(g, c))
            .collect::<Result<_, _>>()?;
        return Ok(Cotree::Union { children });
    }
    let cocomps = split_components(g, &vs, true);
    if cocomps.len() > 1 {
        let children = cocomps
            .into_iter()
            .map(|c| cotree_of(g, c))
            .collect::<Result<_, _>>()?;
        return Ok(Cotree::Join { children });
    }
    Err(find_p4_in(g, &vs).expect("connected and co-connected graphs contain an induced P4"))
}

/// Cograph test. Members get a cotree; non-members an induced P4.
pub fn is_cograph(g: &Graph) -> Recognition {
    if g.n() == 0 {
        return Recognition {
            member: true,
            certificate: Certificate::None,
        };
    }
    match cotree_of(g, (0..g.n()).collect()) {
        Ok(tree) => Recognition {
            member: true,
            certificate: Certificate::Cotree { tree },
        },
        Err(vertices) => {
            let certificate = Certificate::InducedP4 { vertices };
            assert!(certificate.check(g), "extracted P4 failed its check");
            Recognition {
                member: false,
                certificate,
            }
        }
    }
}

/// Classifies four distinct vertices `u, v, x, y` where `ux` and `vy` are
/// edges and `uy`, `vx` are not.
fn quad_witness(g: &Graph, u: usize, v: usize, x: usize, y: usize) -> Certificate {
    match (g.has_edge(u, v), g.has_edge(x, y)) {
        (true, true) => Certificate::InducedC4 {
            vertices: [u, x, y, v],
        },
        (true, false) => Certificate::InducedP4 {
            vertices: [x, u, v, y],
        },
        (false, true) => Certificate::InducedP4 {
            vertices: [u, x, y, v],
        },
        (false, false) => Certificate::Induced2K2 {
            vertices: [u, x, v, y],
        },
    }
}

/// Threshold test by repeatedly removing an isolated or universal vertex
/// (lowest index first). A stuck remainder yields an induced P4, C4 or 2K2.
pub fn is_threshold(g: &Graph) -> Recognition {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut left = n;
    let mut order = Vec::with_capacity(n);
    while left > 0 {
        let pick = (0..n).find(|&v| alive[v] && (deg[v] == 0 || deg[v] == left - 1));
        let Some(v) = pick else { break };
        alive[v] = false;
        left -= 1;
        order.push(v);
        for u in g.neighbors(v) {
            deg[u] -= 1;
        }
    }
    if left == 0 {
        return Recognition {
            member: true,
            certificate: Certificate::EliminationOrder { vertices: order },
        };
    }
    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let within = VSet::of(n, &rest);
    for (i, &u) in rest.iter().enumerate() {
        for &v in &rest[i + 1..] {
            let mut nu = within.masked(g.row(u), false);
            let mut nv = within.masked(g.row(v), false);
            nu.remove(v);
            nv.remove(u);
            let only_u = nu.masked(&nv.0, true);
            let only_v = nv.masked(&nu.0, true);
            if let (Some(x), Some(y)) = (only_u.first(), only_v.first()) {
                let certificate = quad_witness(g, u, v, x, y);
                assert!(certificate.check(g), "threshold witness failed its check");
                return Recognition {
                    member: false,
                    certificate,
                };
            }
        }
    }
    unreachable!("a graph without isolated or universal vertices has incomparable neighbourhoods")
}

fn find_2k2_or_c4(g: &Graph) -> Option<Certificate> {
    let all = VSet::of(g.n(), &(0..g.n()).collect::<Vec<_>>());
    for (a, b) in g.edges() {
        let mut far = all.masked(g.row(a), true).masked(g.row(b), true);
        far.remove(a);
        far.remove(b);
        for c in far.iter() {
            if let Some(d) = far.masked(g.row(c), false).first() {
                return Some(Certificate::Induced2K2 {
                    vertices: [a, b, c, d],
                });
            }
        }
    }
    for (a, c) in g.non_edges() {
        let common = all.masked(g.row(a), false).masked(g.row(c), false);
        let cs: Vec<usize> = common.iter().collect();
        for (i, &b) in cs.iter().enumerate() {
            if let Some(&d) = cs[i + 1..].iter().find(|&&d| !g.has_edge(b, d)) {
                return Some(Certificate::InducedC4 {
                    vertices: [a, b, c, d],
                });
            }
        }
    }
    None
}

fn find_c5(g: &Graph) -> Option<[usize; 5]> {
    let n = g.n();
    for b in 0..n {
        let nb: Vec<usize> = g.neighbors(b).collect();
        for &a in &nb {
            for &c in &nb {
                if a == c || g.has_edge(a, c) {
                    continue;
                }
                for d in g.neighbors(c) {
                    if d == b || g.has_edge(d, b) || g.has_edge(d, a) {
                        continue;
                    }
                    if let Some(e) = g.neighbors(a).find(|&e| {
                        e != b && g.has_edge(e, d) && !g.has_edge(e, b) && !g.has_edge(e, c)
                    }) {
                        return Some([a, b, c, d, e]);
                    }
                }
            }
        }
    }
    None
}

/// Split test via the degree-sequence criterion. Members get a
/// clique/independent partition; others an induced 2K2, C4 or C5.
pub fn is_split(g: &Graph) -> Recognition {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n)
        .filter(|&i| d[i] >= i)
        .map(|i| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head == m * m.saturating_sub(1) + tail {
        let mut clique = by_degree[..m].to_vec();
        let mut independent = by_degree[m..].to_vec();
        clique.sort_unstable();
        independent.sort_unstable();
        let certificate = Certificate::SplitPartition {
            clique,
            independent,
        };
        debug_assert!(certificate.check(g));
        return Recognition {
            member: true,
            certificate,
        };
    }
    let certificate = find_2k2_or_c4(g)
        .or_else(|| find_c5(g).map(|vertices| Certificate::InducedC5 { vertices }))
        .expect("non-split graphs contain an induced 2K2, C4 or C5");
    assert!(certificate.check(g), "split witness failed its check");
    Recognition {
        member: false,
        certificate,
    }
}
