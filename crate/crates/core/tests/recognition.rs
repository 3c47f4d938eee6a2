mod common;

use intdim::certificate::Certificate;
use intdim::recognition::{is_cograph, is_split, is_threshold, Cotree};
use intdim::Graph;
use proptest::prelude::*;

fn bfs_eccentricity_le2(g: &Graph) -> bool {
    common::all_pairs(g.n())
        .into_iter()
        .all(|(u, v)| g.has_edge(u, v) || (0..g.n()).any(|w| g.has_edge(u, w) && g.has_edge(w, v)))
}

#[test]
fn exhaustive_up_to_six_vertices() {
    for n in 0usize..=6 {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u64..1 << pairs {
            let g = common::from_mask(n, mask);
            let co = is_cograph(&g);
            assert_eq!(
                co.member,
                common::brute_is_cograph(&g),
                "cograph n={n} mask={mask}"
            );
            assert!(co.certificate.check(&g));
            let th = is_threshold(&g);
            assert_eq!(
                th.member,
                common::brute_is_threshold(&g),
                "threshold n={n} mask={mask}"
            );
            assert!(th.certificate.check(&g));
            let sp = is_split(&g);
            assert_eq!(
                sp.member,
                common::brute_is_split(&g),
                "split n={n} mask={mask}"
            );
            assert!(sp.certificate.check(&g));
        }
    }
}

#[test]
fn certificate_kinds_match_answers() {
    let mut r = common::rng(7);
    for _ in 0..300 {
        let g = common::random_graph(&mut r, 7, 0.5);
        let co = is_cograph(&g);
        match &co.certificate {
            Certificate::Cotree { .. } => assert!(co.member),
            Certificate::InducedP4 { .. } => assert!(!co.member),
            other => panic!("unexpected cograph certificate {}", other.kind()),
        }
        let th = is_threshold(&g);
        match &th.certificate {
            Certificate::EliminationOrder { .. } => assert!(th.member),
            Certificate::InducedP4 { .. }
            | Certificate::InducedC4 { .. }
            | Certificate::Induced2K2 { .. } => assert!(!th.member),
            other => panic!("unexpected threshold certificate {}", other.kind()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracle_agreement_up_to_eight(seed in any::<u64>(), n in 0usize..=8, p in 0.1f64..0.9) {
        let mut r = common::rng(seed);
        let g = common::random_graph(&mut r, n, p);
        prop_assert_eq!(is_cograph(&g).member, common::brute_is_cograph(&g));
        prop_assert_eq!(is_threshold(&g).member, common::brute_is_threshold(&g));
        prop_assert_eq!(is_split(&g).member, common::brute_is_split(&g));
    }

    #[test]
    fn threshold_is_cograph_and_split(seed in any::<u64>(), n in 0usize..=12) {
        let mut r = common::rng(seed);
        let g = common::random_graph(&mut r, n, 0.5);
        if is_threshold(&g).member {
            prop_assert!(is_cograph(&g).member && is_split(&g).member);
        }
        prop_assert_eq!(is_cograph(&g).member, is_cograph(&g.complement()).member);
        prop_assert_eq!(is_threshold(&g).member, is_threshold(&g.complement()).member);
    }

    #[test]
    fn connected_cograph_subgraphs_have_diameter_two(seed in any::<u64>(), n in 1usize..=10) {
        let mut r = common::rng(seed);
        let g = random_cograph(&mut r, n);
        prop_assert!(is_cograph(&g).member);
        for sub in 1u32..1 << n {
            let vs: Vec<usize> = (0..n).filter(|&v| sub >> v & 1 == 1).collect();
            let h = g.induced_subgraph(&vs).unwrap();
            if h.is_connected() {
                prop_assert!(bfs_eccentricity_le2(&h));
            }
        }
    }

    #[test]
    fn cotree_round_trip(seed in any::<u64>(), n in 1usize..=14) {
        let mut r = common::rng(seed);
        let base = random_cograph(&mut r, n);
        let g = common::shuffled(&mut r, &base);
        let rec = is_cograph(&g);
        prop_assert!(rec.member);
        let Certificate::Cotree { tree } = rec.certificate else {
            return Err(TestCaseError::fail("no cotree"));
        };
        prop_assert_eq!(tree.evaluate(), Some(g.clone()));
        let mut leaves = tree.leaves();
        leaves.sort_unstable();
        prop_assert_eq!(leaves, (0..n).collect::<Vec<_>>());
        let text = serde_json::to_string(&tree).unwrap();
        let back: Cotree = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, tree);
    }
}

/// Builds a cograph by random unions and joins of singletons.
fn random_cograph(r: &mut rand_chacha::ChaCha8Rng, n: usize) -> Graph {
    use rand::Rng;
    let mut parts: Vec<Graph> = (0..n).map(|_| Graph::new(1)).collect();
    while parts.len() > 1 {
        let i = r.gen_range(0..parts.len());
        let a = parts.swap_remove(i);
        let j = r.gen_range(0..parts.len());
        let b = parts.swap_remove(j);
        parts.push(if r.gen_bool(0.5) {
            intdim::join(&a, &b)
        } else {
            intdim::disjoint_union(&a, &b)
        });
    }
    parts.pop().unwrap_or_else(|| Graph::new(0))
}

#[test]
fn spec_examples() {
    use intdim::generators::{complete, cycle, path, star};
    assert!(is_cograph(&cycle(4).unwrap()).member);
    let p4 = is_cograph(&path(4).unwrap());
    assert!(!p4.member);
    assert!(matches!(p4.certificate, Certificate::InducedP4 { .. }));
    assert!(is_threshold(&star(3)).member);
    assert!(is_threshold(&complete(4)).member);
    let c4 = is_threshold(&cycle(4).unwrap());
    assert!(matches!(c4.certificate, Certificate::InducedC4 { .. }));
    let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    let t = is_threshold(&two_k2);
    assert!(matches!(t.certificate, Certificate::Induced2K2 { .. }));
    assert!(!is_split(&cycle(4).unwrap()).member);
    assert!(is_split(&path(4).unwrap()).member);
    assert!(!is_split(&cycle(5).unwrap()).member);
}
