use std::collections::VecDeque;

use super::ConstructionError;
use crate::graph::Graph;
use crate::representation::{Family, Representation};

/// BFS structure of a rooted forest.
struct RootedForest {
    parent: Vec<usize>,
    depth: Vec<usize>,
}

/// Roots every component of `g` (at the given root if one lies in it, else
/// at its lowest vertex) and checks acyclicity.
fn root_forest(g: &Graph, roots: &[usize]) -> Result<RootedForest, ConstructionError> {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut parent = vec![UNSEEN; n];
    let mut depth = vec![0; n];
    let mut comp = vec![UNSEEN; n];
    for (ci, c) in g.components().iter().enumerate() {
        for &v in c {
            comp[v] = ci;
        }
    }
    let mut chosen = vec![UNSEEN; n];
    for &r in roots {
        if r >= n || chosen[comp[r]] != UNSEEN {
            return Err(ConstructionError::BadRoot { root: r });
        }
        chosen[comp[r]] = r;
    }
    let starts: Vec<usize> = g
        .components()
        .iter()
        .enumerate()
        .map(|(ci, c)| {
            if chosen[ci] != UNSEEN {
                chosen[ci]
            } else {
                c[0]
            }
        })
        .collect();
    for s in starts {
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if parent[y] == UNSEEN {
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if parent[x] != y {
                    return Err(ConstructionError::NotAForest {
                        cycle: tree_cycle(&parent, &depth, x, y),
                    });
                }
            }
        }
    }
    Ok(RootedForest { parent, depth })
}

/// Cycle closed by the non-tree edge `xy`: tree path x..lca..y.
fn tree_cycle(parent: &[usize], depth: &[usize], x: usize, y: usize) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let (mut left, mut right) = (vec![a], vec![b]);
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// `E(F)` plus `u`-to-descendants-of-`p(u)` for every vertex `u` of the
/// given depth parity.
fn parity_factor(g: &Graph, f: &RootedForest, odd: bool) -> Graph {
    let n = g.n();
    let mut desc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for w in 0..n {
        let mut a = w;
        loop {
            desc[a].push(w);
            if f.parent[a] == a {
                break;
            }
            a = f.parent[a];
        }
    }
    let mut h = g.clone();
    for u in (0..n).filter(|&u| (f.depth[u] % 2 == 1) == odd) {
        for &w in &desc[f.parent[u]] {
            h.add_edge(u, w);
        }
    }
    h
}

/// Two cographs `[T_o, T_e]` intersecting to the forest `f`.
///
/// `roots` picks at most one root per component; other components are
/// rooted at their lowest vertex.
pub fn forest_two_cographs(
    f: &Graph,
    roots: &[usize],
) -> Result<Representation, ConstructionError> {
    let rooted = root_forest(f, roots)?;
    Ok(Representation::new(
        Family::Cograph,
        vec![
            parity_factor(f, &rooted, true),
            parity_factor(f, &rooted, false),
        ],
    ))
}

/// Two threshold graphs intersecting to a disjoint union of paths, each
/// path rooted at its lower-indexed endpoint.
///
/// Threshold graphs have a single nontrivial component, so several paths
/// are first chained into one long path through extra connector vertices
/// (in root order); the factors are then restricted back to `p`.
pub fn path_two_thresholds(p: &Graph) -> Result<Representation, ConstructionError> {
    let n = p.n();
    let mut walks = Vec::new();
    for c in p.components() {
        if let Some(&v) = c.iter().find(|&&v| p.degree(v) > 2) {
            return Err(ConstructionError::NotAPath { vertex: v });
        }
        let Some(&root) = c.iter().find(|&&v| p.degree(v) <= 1) else {
            return Err(ConstructionError::NotAPath { vertex: c[0] });
        };
        let mut walk = vec![root];
        while let Some(next) = p
            .neighbors(walk[walk.len() - 1])
            .find(|w| !walk.contains(w))
        {
            walk.push(next);
        }
        walks.push(walk);
    }
    if walks.len() <= 1 {
        let roots: Vec<usize> = walks.iter().map(|w| w[0]).collect();
        let mut rep = forest_two_cographs(p, &roots)?;
        rep.family = Family::Threshold;
        return Ok(rep);
    }
    let mut long = Graph::new(n + walks.len() - 1);
    let mut last: Option<usize> = None;
    for (i, walk) in walks.iter().enumerate() {
        if let Some(x) = last {
            let link = n + i - 1;
            long.add_edge(x, link);
            long.add_edge(link, walk[0]);
        }
        for w in walk.windows(2) {
            long.add_edge(w[0], w[1]);
        }
        last = walk.last().copied();
    }
    let rep = forest_two_cographs(&long, &[walks[0][0]])?;
    let keep: Vec<usize> = (0..n).collect();
    let factors = rep
        .factors
        .iter()
        .map(|f| f.induced_subgraph(&keep).expect("in range"))
        .collect();
    Ok(Representation::new(Family::Threshold, factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, star};
    use crate::verify_representation;

    fn with(g: &Graph, extra: &[(usize, usize)]) -> Graph {
        let mut h = g.clone();
        for &(u, v) in extra {
            h.add_edge(u, v);
        }
        h
    }

    #[test]
    fn p4_factors() {
        let p4 = path(4).unwrap();
        let rep = forest_two_cographs(&p4, &[]).unwrap();
        assert_eq!(rep.factors[0], with(&p4, &[(1, 3)]));
        assert_eq!(rep.factors[1], with(&p4, &[(0, 2), (0, 3)]));
        assert_eq!(verify_representation(&p4, &rep), Ok(()));
        let th = path_two_thresholds(&p4).unwrap();
        assert_eq!(th.factors, rep.factors);
        assert_eq!(verify_representation(&p4, &th), Ok(()));
    }

    #[test]
    fn star_rooted_at_centre() {
        let s = star(3);
        let rep = forest_two_cographs(&s, &[0]).unwrap();
        assert_eq!(rep.factors[0], Graph::complete(4));
        assert_eq!(rep.factors[1], s);
    }

    #[test]
    fn small_cases() {
        let k1 = Graph::new(1);
        assert_eq!(
            forest_two_cographs(&k1, &[]).unwrap().factors,
            vec![k1.clone(), k1.clone()]
        );
        assert_eq!(
            path_two_thresholds(&k1).unwrap().factors,
            vec![k1.clone(), k1]
        );
        let k2 = Graph::complete(2);
        assert_eq!(
            path_two_thresholds(&k2).unwrap().factors,
            vec![k2.clone(), k2]
        );
    }

    #[test]
    fn cycle_is_rejected_with_witness() {
        let c5 = cycle(5).unwrap();
        let Err(ConstructionError::NotAForest { cycle: cyc }) = forest_two_cographs(&c5, &[])
        else {
            panic!()
        };
        assert!(crate::certificate::is_cycle(&c5, &cyc));
        assert_eq!(cyc.len(), 5);
        assert!(matches!(
            path_two_thresholds(&star(3)),
            Err(ConstructionError::NotAPath { vertex: 0 })
        ));
    }

    #[test]
    fn roots_must_be_in_distinct_components() {
        let p4 = path(4).unwrap();
        assert!(matches!(
            forest_two_cographs(&p4, &[0, 3]),
            Err(ConstructionError::BadRoot { root: 3 })
        ));
        assert!(matches!(
            forest_two_cographs(&p4, &[9]),
            Err(ConstructionError::BadRoot { root: 9 })
        ));
    }
}
