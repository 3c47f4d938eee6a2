mod common;

use intdim::generators::cycle;
use intdim::solver::{
    exact_dimension, forbidden_masks, representable, write_dimacs, Dimension, Outcome,
};
use intdim::{intersection_of, Family, Graph};
use proptest::prelude::*;

fn is_member(f: &Graph, family: Family) -> bool {
    match family {
        Family::Cograph => common::brute_is_cograph(f),
        Family::Threshold => common::brute_is_threshold(f),
    }
}

fn dim(g: &Graph, family: Family, kmax: usize) -> Option<usize> {
    match exact_dimension(g, family, kmax, None) {
        Dimension::Exact {
            dimension, witness, ..
        } => {
            assert_eq!(witness.len(), dimension);
            Some(dimension)
        }
        Dimension::GreaterThan { .. } => None,
        Dimension::Undecided { .. } => panic!("no budget was set"),
    }
}

/// Satisfiability of a DIMACS text by trying every assignment.
fn brute_sat(text: &str) -> bool {
    let mut vars = 0;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    for line in text.lines() {
        if line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p cnf ") {
            vars = rest.split(' ').next().unwrap().parse().unwrap();
            continue;
        }
        let lits: Vec<i64> = line
            .split_whitespace()
            .map(|x| x.parse().unwrap())
            .collect();
        assert_eq!(lits.last(), Some(&0));
        clauses.push(lits[..lits.len() - 1].to_vec());
    }
    assert!(vars <= 20);
    (0u32..1 << vars).any(|a| {
        clauses.iter().all(|c| {
            c.iter()
                .any(|&l| (a >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn witnesses_are_sound(seed in any::<u64>(), n in 1usize..=9, p in 0.2f64..0.8, k in 1usize..=3) {
        let mut r = common::rng(seed);
        let g = common::random_graph(&mut r, n, p);
        for family in [Family::Cograph, Family::Threshold] {
            if let Outcome::Sat { representation, .. } = representable(&g, family, k, None) {
                prop_assert_eq!(representation.len(), k);
                prop_assert_eq!(intersection_of(&representation.factors).unwrap(), g.clone());
                prop_assert!(representation.factors.iter().all(|f| is_member(f, family)));
            }
        }
    }

    #[test]
    fn satisfiability_is_monotone(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = common::rng(seed);
        let g = common::random_graph(&mut r, n, 0.5);
        for family in [Family::Cograph, Family::Threshold] {
            let sat: Vec<bool> = (1..=4)
                .map(|k| matches!(representable(&g, family, k, None), Outcome::Sat { .. }))
                .collect();
            prop_assert!(sat.windows(2).all(|w| !w[0] || w[1]), "{:?}", sat);
            // threshold factors are cographs
            if family == Family::Threshold {
                let cog = dim(&g, Family::Cograph, 4);
                let th = dim(&g, Family::Threshold, 4);
                if let (Some(c), Some(t)) = (cog, th) {
                    prop_assert!(c <= t);
                }
            }
        }
    }

    #[test]
    fn dimension_one_means_membership(seed in any::<u64>(), n in 0usize..=10) {
        let mut r = common::rng(seed);
        let g = common::random_graph(&mut r, n, 0.5);
        for family in [Family::Cograph, Family::Threshold] {
            prop_assert_eq!(dim(&g, family, 1) == Some(1), is_member(&g, family));
        }
    }
}

#[test]
fn agrees_with_naive_dimension() {
    let mut r = common::rng(5);
    let mut checked = 0;
    while checked < 150 {
        let n = 4 + checked % 3;
        let g = common::random_graph(&mut r, n, 0.5);
        if g.non_edges().count() > 10 {
            continue;
        }
        for (family, threshold) in [(Family::Cograph, false), (Family::Threshold, true)] {
            assert_eq!(
                dim(&g, family, 4),
                common::naive_dimension(&g, threshold, 4),
                "{family} {:?}",
                g.edges().collect::<Vec<_>>()
            );
        }
        checked += 1;
    }
}

#[test]
fn forbidden_mask_counts() {
    assert_eq!(forbidden_masks(Family::Cograph).len(), 12);
    assert_eq!(forbidden_masks(Family::Threshold).len(), 18);
    // each mask is a labelled copy of P4, C4 or 2K2 on the six pairs
    for family in [Family::Cograph, Family::Threshold] {
        for m in forbidden_masks(family) {
            assert!(m < 64);
            let edges = m.count_ones();
            assert!((2..=4).contains(&edges));
        }
    }
    let mut t = forbidden_masks(Family::Threshold);
    t.sort_unstable();
    t.dedup();
    assert_eq!(t.len(), 18);
}

#[test]
fn dimacs_matches_search() {
    let mut cases = vec![
        (cycle(4).unwrap(), Family::Threshold, 1),
        (cycle(4).unwrap(), Family::Threshold, 2),
        (cycle(5).unwrap(), Family::Cograph, 1),
        (cycle(5).unwrap(), Family::Cograph, 2),
        (cycle(5).unwrap(), Family::Threshold, 2),
    ];
    let mut r = common::rng(9);
    while cases.len() < 40 {
        let g = common::random_graph(&mut r, 5, 0.6);
        if g.non_edges().count() <= 5 {
            cases.push((
                g,
                if cases.len() % 2 == 0 {
                    Family::Cograph
                } else {
                    Family::Threshold
                },
                2,
            ));
        }
    }
    for (g, family, k) in cases {
        let sat = matches!(representable(&g, family, k, None), Outcome::Sat { .. });
        for sym in [false, true] {
            let text = write_dimacs(&g, family, k, sym);
            assert_eq!(brute_sat(&text), sat, "{family} k={k} sym={sym}");
            let vars = text.lines().filter(|l| l.starts_with("c var ")).count();
            assert_eq!(vars, g.non_edges().count() * k);
        }
    }
}

#[test]
fn budget_gives_undecided() {
    let c9 = cycle(9).unwrap();
    assert!(matches!(
        representable(&c9, Family::Cograph, 2, Some(3)),
        Outcome::Undecided { nodes: 3 }
    ));
    assert!(matches!(
        exact_dimension(&c9, Family::Cograph, 3, Some(3)),
        Dimension::Undecided { .. }
    ));
    assert!(matches!(
        exact_dimension(&cycle(7).unwrap(), Family::Cograph, 2, None),
        Dimension::GreaterThan { kmax: 2, .. }
    ));
}
