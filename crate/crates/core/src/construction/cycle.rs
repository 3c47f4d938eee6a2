use super::forest::path_two_thresholds;
use super::ConstructionError;
use crate::generators;
use crate::graph::Graph;
use crate::representation::{Family, Representation};

/// Chords added to `C_n` in each of two cograph factors.
pub type ChordPair = [&'static [(usize, usize)]; 2];

/// Chords added to `C_n` in the two cograph factors drawn for `n = 5, 6`.
pub const CYCLE_COGRAPH_PAIRS: [(usize, ChordPair); 2] = [
    (5, [&[(0, 3), (1, 4)], &[(0, 2), (1, 3)]]),
    (
        6,
        [
            &[(0, 2), (1, 3), (2, 4), (3, 5), (4, 0), (5, 1)],
            &[(0, 3), (1, 4), (2, 5)],
        ],
    ),
];

/// Non-edges removed from `K_4` in the two threshold factors of `C_4`.
pub const CYCLE_C4_THRESHOLD: [(usize, usize); 2] = [(0, 2), (1, 3)];

/// Known dimension of `C_n` in `family`, for `n >= 3`.
pub fn known_cycle_dimension(n: usize, family: Family) -> Option<usize> {
    let (cog, th) = match n {
        0..=2 => return None,
        3 => (1, 1),
        4 => (1, 2),
        5 | 6 => (2, 3),
        _ => (3, 3),
    };
    Some(match family {
        Family::Cograph => cog,
        Family::Threshold => th,
    })
}

fn with_chords(c: &Graph, chords: &[(usize, usize)]) -> Graph {
    let mut h = c.clone();
    for &(u, v) in chords {
        h.add_edge(u, v);
    }
    h
}

/// Three threshold factors for `C_n`, `n >= 4`: the path factors of
/// `C_n - v` with `v` made universal, then `C_n` plus a clique on the
/// other vertices (`v = n - 1`).
fn three_factor(c: &Graph) -> Representation {
    let n = c.n();
    let v = n - 1;
    let rest: Vec<usize> = (0..v).collect();
    let p = c.induced_subgraph(&rest).expect("in range");
    let paths = path_two_thresholds(&p).expect("C_n - v is a path");
    let mut factors: Vec<Graph> = paths
        .factors
        .iter()
        .map(|f| {
            let mut h = Graph::complete(n);
            for (a, b) in f.non_edges() {
                h.remove_edge(a, b);
            }
            h
        })
        .collect();
    let mut third = Graph::complete(n);
    for u in 1..v - 1 {
        third.remove_edge(u, v);
    }
    factors.push(third);
    Representation::new(Family::Threshold, factors)
}

/// Representation of the cycle `0-1-...-(n-1)-0` with exactly
/// [`known_cycle_dimension`] factors.
pub fn cycle_representation(n: usize, family: Family) -> Result<Representation, ConstructionError> {
    let c = generators::cycle(n).map_err(|_| ConstructionError::CycleTooShort(n))?;
    let want = known_cycle_dimension(n, family).expect("n >= 3");
    let mut rep = match (want, n) {
        (1, _) => Representation::new(family, vec![c]),
        (2, 4) => {
            let factors = CYCLE_C4_THRESHOLD
                .iter()
                .map(|&(u, v)| {
                    let mut k = Graph::complete(4);
                    k.remove_edge(u, v);
                    k
                })
                .collect();
            Representation::new(family, factors)
        }
        (2, _) => {
            let (_, chords) = CYCLE_COGRAPH_PAIRS
                .iter()
                .find(|(m, _)| *m == n)
                .expect("chord pair for n = 5, 6");
            let factors = chords.iter().map(|ch| with_chords(&c, ch)).collect();
            Representation::new(family, factors)
        }
        _ => three_factor(&c),
    };
    rep.family = family;
    Ok(rep)
}
