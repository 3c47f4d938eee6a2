use crate::graph::Graph;
use crate::representation::Family;

/// Literal over the variable "non-edge `e` is present in factor `i`":
/// `2 * var` is the positive literal, `2 * var + 1` its negation.
pub type Lit = u32;

pub fn var_of(k: usize, e: usize, i: usize) -> u32 {
    (e * k + i) as u32
}

pub fn pos(v: u32) -> Lit {
    2 * v
}

pub fn neg(v: u32) -> Lit {
    2 * v + 1
}

/// Index pairs of the six pairs of a 4-set, in a fixed order.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn pair_bit(a: usize, b: usize) -> u8 {
    let (a, b) = (a.min(b), a.max(b));
    1 << PAIRS.iter().position(|&p| p == (a, b)).unwrap()
}

fn path_mask(p: [usize; 4]) -> u8 {
    pair_bit(p[0], p[1]) | pair_bit(p[1], p[2]) | pair_bit(p[2], p[3])
}

/// Edge masks (over [`PAIRS`]) of every labelled forbidden graph on four
/// vertices: 12 paths, plus 3 four-cycles and 3 perfect matchings for
/// threshold.
pub fn forbidden_masks(family: Family) -> Vec<u8> {
    let mut masks = Vec::new();
    let mut perm = [0, 1, 2, 3];
    permutations(&mut perm, 0, &mut |p| {
        let m = path_mask(*p);
        if !masks.contains(&m) {
            masks.push(m);
        }
    });
    if family == Family::Threshold {
        let cycles = [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]];
        for c in cycles {
            masks.push(path_mask(c) | pair_bit(c[3], c[0]));
        }
        for (a, b) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
            masks.push(pair_bit(a.0, a.1) | pair_bit(b.0, b.1));
        }
    }
    masks
}

fn permutations(p: &mut [usize; 4], i: usize, f: &mut impl FnMut(&[usize; 4])) {
    if i == 4 {
        f(p);
        return;
    }
    for j in i..4 {
        p.swap(i, j);
        permutations(p, i + 1, f);
        p.swap(i, j);
    }
}

/// CNF over presence variables: each non-edge is absent from some factor,
/// and no factor induces a forbidden graph on any 4-set.
#[derive(Debug, Clone)]
pub struct Encoding {
    pub n: usize,
    pub k: usize,
    pub family: Family,
    pub non_edges: Vec<(usize, usize)>,
    pub clauses: Vec<Vec<Lit>>,
    /// Per non-edge: number of forbidden-pattern clauses (for one factor)
    /// it occurs in.
    pub score: Vec<usize>,
}

impl Encoding {
    pub fn new(g: &Graph, family: Family, k: usize) -> Self {
        let n = g.n();
        let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
        let mut index = vec![usize::MAX; n * n];
        for (e, &(u, v)) in non_edges.iter().enumerate() {
            index[u * n + v] = e;
            index[v * n + u] = e;
        }
        let masks = forbidden_masks(family);
        let mut score = vec![0; non_edges.len()];
        let mut clauses: Vec<Vec<Lit>> = Vec::new();
        for (e, _) in non_edges.iter().enumerate() {
            clauses.push((0..k).map(|i| neg(var_of(k, e, i))).collect());
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let s = [a, b, c, d];
                        let mut fixed = 0u8;
                        let mut free: Vec<(u8, usize)> = Vec::new();
                        for (bit, &(x, y)) in PAIRS.iter().enumerate() {
                            if g.has_edge(s[x], s[y]) {
                                fixed |= 1 << bit;
                            } else {
                                free.push((1 << bit, index[s[x] * n + s[y]]));
                            }
                        }
                        for &m in &masks {
                            // edges of g are present in every factor
                            if m & fixed != fixed {
                                continue;
                            }
                            for &(_, e) in &free {
                                score[e] += 1;
                            }
                            for i in 0..k {
                                let clause = free
                                    .iter()
                                    .map(|&(bit, e)| {
                                        let v = var_of(k, e, i);
                                        if m & bit != 0 {
                                            neg(v)
                                        } else {
                                            pos(v)
                                        }
                                    })
                                    .collect();
                                clauses.push(clause);
                            }
                        }
                    }
                }
            }
        }
        Encoding {
            n,
            k,
            family,
            non_edges,
            clauses,
            score,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.non_edges.len() * self.k
    }

    /// Non-edges by descending score, ties to the lower index.
    pub fn branch_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.non_edges.len()).collect();
        order.sort_by_key(|&e| (std::cmp::Reverse(self.score[e]), e));
        order
    }
}
