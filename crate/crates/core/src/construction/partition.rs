use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::forest::forest_two_cographs;
use super::ConstructionError;
use crate::decomposition::{validate_coloring, Coloring, ColoringMode};
use crate::graph::Graph;
use crate::representation::{verify_representation, Family, Representation};

/// `x` if odd, `x - 1` if even.
pub fn alpha(x: usize) -> Result<usize, ConstructionError> {
    match x {
        0 => Err(ConstructionError::AlphaOfZero),
        x if x % 2 == 1 => Ok(x),
        x => Ok(x - 1),
    }
}

/// One matching of the part indices plus the parts it leaves unmatched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub pairs: Vec<(usize, usize)>,
    pub unmatched: Vec<usize>,
}

/// Matchings covering every pair of parts `0..k` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingSchedule {
    pub k: usize,
    pub rounds: Vec<Round>,
}

/// Circle-method round robin: `alpha(k)` rounds.
pub fn matching_schedule(k: usize) -> Result<MatchingSchedule, ConstructionError> {
    alpha(k)?;
    // an odd count gets a phantom part; its partner sits the round out
    let m = k + k % 2;
    let phantom = if k % 2 == 1 { Some(k) } else { None };
    let mut rounds = Vec::with_capacity(m - 1);
    for r in 0..m - 1 {
        let mut raw = vec![(r, m - 1)];
        for i in 1..m / 2 {
            raw.push(((r + i) % (m - 1), (r + m - 1 - i) % (m - 1)));
        }
        let mut pairs = Vec::new();
        let mut unmatched = Vec::new();
        for (a, b) in raw {
            match phantom {
                Some(p) if a == p => unmatched.push(b),
                Some(p) if b == p => unmatched.push(a),
                _ => pairs.push((a.min(b), a.max(b))),
            }
        }
        pairs.sort_unstable();
        rounds.push(Round { pairs, unmatched });
    }
    Ok(MatchingSchedule { k, rounds })
}

/// A vertex set whose induced subgraph needs its own representation:
/// the union of two parts, or a single part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Piece {
    Pair(usize, usize),
    Single(usize),
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Pair(i, j) => write!(f, "parts {i}+{j}"),
            Piece::Single(i) => write!(f, "part {i}"),
        }
    }
}

impl Piece {
    /// Sorted vertices of the piece; its induced subgraph is labelled in
    /// this order.
    pub fn vertices(&self, parts: &[Vec<usize>]) -> Vec<usize> {
        let mut vs = match *self {
            Piece::Pair(i, j) => parts[i].iter().chain(&parts[j]).copied().collect(),
            Piece::Single(i) => parts[i].clone(),
        };
        vs.sort_unstable();
        vs
    }
}

fn check_partition(n: usize, parts: &[Vec<usize>]) -> Result<(), ConstructionError> {
    if parts.is_empty() {
        return Err(ConstructionError::NoParts);
    }
    let mut seen = vec![false; n];
    for &v in parts.iter().flatten() {
        if v >= n || seen[v] {
            return Err(ConstructionError::InvalidPartition { vertex: v });
        }
        seen[v] = true;
    }
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(ConstructionError::InvalidPartition { vertex: v }),
        None => Ok(()),
    }
}

/// Joins the slot-wise factors of the piece representations along every
/// round of [`matching_schedule`]; yields `alpha(k) * t` factors where `t`
/// is the longest piece representation (shorter ones are padded with
/// complete graphs).
///
/// `pieces` must hold a verified cograph representation of `g[piece]` for every
/// pair of parts that is matched in some round and every part left
/// unmatched in some round.
pub fn partition_composition(
    g: &Graph,
    parts: &[Vec<usize>],
    pieces: &BTreeMap<Piece, Representation>,
) -> Result<Representation, ConstructionError> {
    check_partition(g.n(), parts)?;
    let schedule = matching_schedule(parts.len())?;
    let mut used = Vec::new();
    for round in &schedule.rounds {
        let keys = round
            .pairs
            .iter()
            .map(|&(i, j)| Piece::Pair(i, j))
            .chain(round.unmatched.iter().map(|&i| Piece::Single(i)));
        for key in keys {
            let rep = pieces
                .get(&key)
                .ok_or(ConstructionError::MissingPiece(key))?;
            let vs = key.vertices(parts);
            let sub = g.induced_subgraph(&vs).expect("partition checked");
            verify_representation(&sub, rep).map_err(|f| ConstructionError::InvalidPiece {
                piece: key,
                reason: f.to_string(),
            })?;
            // threshold graphs are not closed under join
            if rep.family != Family::Cograph {
                return Err(ConstructionError::InvalidPiece {
                    piece: key,
                    reason: format!("family {} is not cograph", rep.family),
                });
            }
            used.push(key);
        }
    }
    let t = used.iter().map(|k| pieces[k].len()).max().unwrap_or(1);
    let mut factors = Vec::with_capacity(schedule.rounds.len() * t);
    let mut at = 0;
    for round in &schedule.rounds {
        let count = round.pairs.len() + round.unmatched.len();
        let keys = &used[at..at + count];
        at += count;
        for slot in 0..t {
            let mut h = Graph::complete(g.n());
            for key in keys {
                let vs = key.vertices(parts);
                if let Some(f) = pieces[key].factors.get(slot) {
                    for (a, b) in f.non_edges() {
                        h.remove_edge(vs[a], vs[b]);
                    }
                }
            }
            factors.push(h);
        }
    }
    Ok(Representation::new(Family::Cograph, factors))
}

fn all_pieces(k: usize) -> Vec<Piece> {
    let mut v: Vec<Piece> = (0..k).map(Piece::Single).collect();
    for i in 0..k {
        for j in i + 1..k {
            v.push(Piece::Pair(i, j));
        }
    }
    v
}

fn checked(g: &Graph, c: &Coloring, mode: ColoringMode) -> Result<(), ConstructionError> {
    if c.mode != mode {
        return Err(ConstructionError::WrongColoringMode {
            expected: mode,
            found: c.mode,
        });
    }
    validate_coloring(g, c).map_err(ConstructionError::InvalidColoring)
}

/// `alpha(#colours)` cographs: every two classes of a star colouring
/// induce a star forest, itself a cograph.
pub fn star_coloring_construction(
    g: &Graph,
    c: &Coloring,
) -> Result<Representation, ConstructionError> {
    checked(g, c, ColoringMode::Star)?;
    let parts = c.classes();
    let pieces = all_pieces(parts.len())
        .into_iter()
        .map(|p| {
            let sub = g.induced_subgraph(&p.vertices(&parts)).expect("in range");
            (p, Representation::new(Family::Cograph, vec![sub]))
        })
        .collect();
    partition_composition(g, &parts, &pieces)
}

/// `2 * alpha(#colours)` cographs: every two classes of an acyclic
/// colouring induce a forest, represented by [`forest_two_cographs`].
pub fn acyclic_coloring_construction(
    g: &Graph,
    c: &Coloring,
) -> Result<Representation, ConstructionError> {
    checked(g, c, ColoringMode::Acyclic)?;
    let parts = c.classes();
    let mut pieces = BTreeMap::new();
    for p in all_pieces(parts.len()) {
        let sub = g.induced_subgraph(&p.vertices(&parts)).expect("in range");
        pieces.insert(p, forest_two_cographs(&sub, &[])?);
    }
    partition_composition(g, &parts, &pieces)
}
