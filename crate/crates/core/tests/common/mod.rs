//! Brute-force oracles and random instance generators shared by the
//! integration tests. Nothing here calls the library's own algorithms.

#![allow(dead_code)]

use intdim::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Graph on `n` vertices whose edges are the pairs selected by `mask`
/// (bit `i` for the `i`-th pair in lexicographic order).
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let edges = all_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p);
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = all_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Relabels `g` by a uniformly random permutation.
pub fn shuffled(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Random forest: each vertex after the first joins a random earlier one
/// with probability `p_attach`, then labels are shuffled.
pub fn random_forest(rng: &mut ChaCha8Rng, n: usize, p_attach: f64) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        if rng.gen_bool(p_attach) {
            g.add_edge(v, rng.gen_range(0..v));
        }
    }
    shuffled(rng, &g)
}

/// Random disjoint union of paths on `n` shuffled vertices.
pub fn random_linear_forest(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        if rng.gen_bool(0.85) {
            g.add_edge(v - 1, v);
        }
    }
    shuffled(rng, &g)
}

/// Every ordered 4-tuple of distinct vertices.
fn quads(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n)
        .flat_map(move |a| {
            (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |d| [a, b, c, d])))
        })
        .filter(|q| {
            q[0] != q[1]
                && q[0] != q[2]
                && q[0] != q[3]
                && q[1] != q[2]
                && q[1] != q[3]
                && q[2] != q[3]
        })
}

fn exactly(g: &Graph, q: [usize; 4], edges: &[(usize, usize)]) -> bool {
    (0..4).all(|i| {
        (i + 1..4)
            .all(|j| g.has_edge(q[i], q[j]) == (edges.contains(&(i, j)) || edges.contains(&(j, i))))
    })
}

pub fn brute_has_p4(g: &Graph) -> bool {
    quads(g.n()).any(|q| exactly(g, q, &[(0, 1), (1, 2), (2, 3)]))
}

pub fn brute_has_c4(g: &Graph) -> bool {
    quads(g.n()).any(|q| exactly(g, q, &[(0, 1), (1, 2), (2, 3), (3, 0)]))
}

pub fn brute_has_2k2(g: &Graph) -> bool {
    quads(g.n()).any(|q| exactly(g, q, &[(0, 1), (2, 3)]))
}

pub fn brute_is_cograph(g: &Graph) -> bool {
    !brute_has_p4(g)
}

pub fn brute_is_threshold(g: &Graph) -> bool {
    !brute_has_p4(g) && !brute_has_c4(g) && !brute_has_2k2(g)
}

/// Tries every clique/independent split of the vertex set.
pub fn brute_is_split(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|clique| {
        let inside = |v: usize| clique >> v & 1 == 1;
        all_pairs(n).into_iter().all(|(u, v)| {
            if inside(u) && inside(v) {
                g.has_edge(u, v)
            } else if !inside(u) && !inside(v) {
                !g.has_edge(u, v)
            } else {
                true
            }
        })
    })
}

fn proper(g: &Graph, c: &[usize]) -> bool {
    g.edges().all(|(u, v)| c[u] != c[v])
}

/// Some two-coloured subgraph contains a cycle (checked by edge counts on
/// each component of every two-colour subgraph).
fn has_bicolored_cycle(g: &Graph, c: &[usize], k: usize) -> bool {
    for a in 0..k {
        for b in a + 1..k {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| c[v] == a || c[v] == b).collect();
            let h = g.induced_subgraph(&vs).unwrap();
            if h.edge_count() + h.components().len() != h.n() {
                return true;
            }
        }
    }
    false
}

fn has_bicolored_p4(g: &Graph, c: &[usize]) -> bool {
    quads(g.n()).any(|q| {
        g.has_edge(q[0], q[1])
            && g.has_edge(q[1], q[2])
            && g.has_edge(q[2], q[3])
            && c[q[0]] == c[q[2]]
            && c[q[1]] == c[q[3]]
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Proper,
    Acyclic,
    Star,
}

/// Whether some assignment of `k` colours is a colouring of the given kind.
pub fn brute_colorable(g: &Graph, k: usize, kind: Kind) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut c = vec![0usize; n];
    loop {
        if proper(g, &c)
            && match kind {
                Kind::Proper => true,
                Kind::Acyclic => !has_bicolored_cycle(g, &c, k),
                Kind::Star => !has_bicolored_p4(g, &c),
            }
        {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_chromatic(g: &Graph, kind: Kind) -> usize {
    (1..=g.n().max(1))
        .find(|&k| brute_colorable(g, k, kind))
        .unwrap()
}

/// Naive intersection dimension: the sets of non-edges left out by each
/// supergraph of `g` that lies in the family, then a search for `k` of them
/// covering every non-edge. Exponential in the number of non-edges.
pub fn naive_dimension(g: &Graph, threshold: bool, kmax: usize) -> Option<usize> {
    let non: Vec<(usize, usize)> = g.non_edges().collect();
    let m = non.len();
    if m == 0 {
        return Some(1);
    }
    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    let mut absent_sets: Vec<u32> = Vec::new();
    for added in 0u32..1 << m {
        let mut h = g.clone();
        for (i, &(u, v)) in non.iter().enumerate() {
            if added >> i & 1 == 1 {
                h.add_edge(u, v);
            }
        }
        let ok = if threshold {
            brute_is_threshold(&h)
        } else {
            brute_is_cograph(&h)
        };
        if ok {
            absent_sets.push(full & !added);
        }
    }
    // keep only maximal absent sets
    let maximal: Vec<u32> = absent_sets
        .iter()
        .copied()
        .filter(|&s| !absent_sets.iter().any(|&t| t != s && t & s == s))
        .collect();
    fn cover(sets: &[u32], need: u32, k: usize, from: usize) -> bool {
        if need == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        (from..sets.len()).any(|i| cover(sets, need & !sets[i], k - 1, i + 1))
    }
    (1..=kmax).find(|&k| cover(&maximal, full, k, 0))
}

/// Random interval graph with its interval model (integer endpoints).
pub fn random_intervals(rng: &mut ChaCha8Rng, n: usize, span: i64) -> (Graph, Vec<(i64, i64)>) {
    let iv: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span);
            (l, l + rng.gen_range(0..span / 3 + 1))
        })
        .collect();
    let mut g = Graph::new(n);
    for (u, v) in all_pairs(n) {
        if iv[u].0 <= iv[v].1 && iv[v].0 <= iv[u].1 {
            g.add_edge(u, v);
        }
    }
    (g, iv)
}

/// Bags of a path decomposition read off an interval model: one bag per
/// distinct left endpoint, holding every interval through that point.
pub fn interval_bags(iv: &[(i64, i64)]) -> Vec<Vec<usize>> {
    let mut points: Vec<i64> = iv.iter().map(|p| p.0).collect();
    points.sort_unstable();
    points.dedup();
    points
        .iter()
        .map(|&x| {
            (0..iv.len())
                .filter(|&v| iv[v].0 <= x && x <= iv[v].1)
                .collect()
        })
        .collect()
}

/// Random partial 2-tree together with the bags of its defining 2-tree:
/// start from a triangle, attach each new vertex to an existing edge, then
/// delete each edge with probability `p_drop`.
pub fn random_partial_2tree(
    rng: &mut ChaCha8Rng,
    n: usize,
    p_drop: f64,
) -> (Graph, Vec<Vec<usize>>, Vec<(usize, usize)>) {
    assert!(n >= 3);
    let mut g = Graph::from_edges(n, [(0, 1), (0, 2), (1, 2)]).unwrap();
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (1, 2)];
    let mut bags = vec![vec![0, 1, 2]];
    let mut skeleton = Vec::new();
    // bag in which each edge first appeared
    let mut home = vec![0, 0, 0];
    for v in 3..n {
        let i = rng.gen_range(0..edges.len());
        let (a, b) = edges[i];
        g.add_edge(a, v);
        g.add_edge(b, v);
        bags.push(vec![a, b, v]);
        let bag = bags.len() - 1;
        skeleton.push((home[i], bag));
        edges.push((a.min(v), a.max(v)));
        edges.push((b.min(v), b.max(v)));
        home.push(bag);
        home.push(bag);
    }
    for (u, v) in edges {
        if rng.gen_bool(p_drop) {
            g.remove_edge(u, v);
        }
    }
    (g, bags, skeleton)
}
