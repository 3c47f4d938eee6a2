mod common;

use intdim::certificate::Certificate;
use intdim::cover::{auxiliary_graph, bipartite_check, conflict, threshold_dim_le2};
use intdim::solver::{representable, Outcome};
use intdim::{Family, Graph};
use proptest::prelude::*;

fn check_decision(g: &Graph) -> bool {
    let d = threshold_dim_le2(g);
    let aux = auxiliary_graph(&g.complement());
    assert!(
        d.certificate.check(&aux.graph),
        "certificate does not hold in the aux graph"
    );
    if let Certificate::OddCycle { vertices } = &d.certificate {
        let mapped: Vec<(usize, usize)> = vertices.iter().map(|&i| aux.edges[i]).collect();
        assert_eq!(mapped, d.aux_vertices);
        for w in 0..vertices.len() {
            let (a, b) = (
                aux.edges[vertices[w]],
                aux.edges[vertices[(w + 1) % vertices.len()]],
            );
            assert!(conflict(&g.complement(), a, b));
        }
    }
    d.member
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conflict_is_symmetric_and_needs_four_vertices(seed in any::<u64>(), n in 0usize..=9) {
        let mut r = common::rng(seed);
        let g = common::random_graph(&mut r, n, 0.5);
        let aux = auxiliary_graph(&g);
        prop_assert_eq!(aux.edges.len(), g.edge_count());
        for (i, &e) in aux.edges.iter().enumerate() {
            prop_assert_eq!(aux.vertex_of(e.1, e.0), Some(i));
            for (j, &f) in aux.edges.iter().enumerate() {
                prop_assert_eq!(conflict(&g, e, f), conflict(&g, f, e));
                if i != j {
                    prop_assert_eq!(aux.graph.has_edge(i, j), conflict(&g, e, f));
                }
                let distinct = e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
                if !distinct {
                    prop_assert!(!conflict(&g, e, f));
                }
            }
        }
    }

    #[test]
    fn bipartite_certificates_hold(seed in any::<u64>(), n in 0usize..=30, p in 0.02f64..0.3) {
        let mut r = common::rng(seed);
        let h = common::random_graph(&mut r, n, p);
        let cert = bipartite_check(&h);
        prop_assert!(cert.check(&h));
        // independent oracle: brute 2-colouring of each component
        let two_colourable = brute_bipartite(&h);
        prop_assert_eq!(matches!(cert, Certificate::Bipartition { .. }), two_colourable);
    }

    #[test]
    fn two_threshold_test_matches_search(seed in any::<u64>(), p in 0.2f64..0.8) {
        let mut r = common::rng(seed);
        let g = common::random_graph(&mut r, 7, p);
        let by_search = matches!(representable(&g, Family::Threshold, 2, None), Outcome::Sat { .. });
        prop_assert_eq!(check_decision(&g), by_search);
    }
}

fn brute_bipartite(h: &Graph) -> bool {
    let n = h.n();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if h.has_edge(x, y) {
                    match side[y] {
                        None => {
                            side[y] = Some(!side[x].unwrap());
                            stack.push(y);
                        }
                        Some(sy) if sy == side[x].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

#[test]
fn two_threshold_test_matches_naive_oracle() {
    let mut r = common::rng(11);
    let mut checked = 0;
    while checked < 120 {
        let n = 4 + checked % 3;
        let g = common::random_graph(&mut r, n, 0.55);
        if g.non_edges().count() > 10 {
            continue;
        }
        let naive = common::naive_dimension(&g, true, 2).is_some();
        assert_eq!(
            check_decision(&g),
            naive,
            "{:?}",
            g.edges().collect::<Vec<_>>()
        );
        checked += 1;
    }
}

#[test]
fn examples() {
    use intdim::generators::{complete, cycle, fig1_tree, path};
    assert!(check_decision(&cycle(4).unwrap()));
    assert!(check_decision(&path(5).unwrap()));
    assert!(check_decision(&complete(5)));
    assert!(!check_decision(&cycle(5).unwrap()));
    assert!(!check_decision(&cycle(6).unwrap()));
    assert!(!check_decision(&fig1_tree()));
}
