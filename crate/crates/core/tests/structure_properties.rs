use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use fslab::canon::{are_isomorphic, canonical_form};
use fslab::graph::Graph;
use fslab::graph6::{encode_graph6, parse_graph6};
use fslab::harness::{all_graphs, enumerate_connected_graphs};
use fslab::special;
use fslab::structure::{cut_vertices, max_bridge_length, vertex_connectivity};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn shuffle(g: &Graph, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    g.relabel(&perm)
}

/// Cut vertices by deleting each vertex and counting components.
fn cut_vertices_brute(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let components_without = |v: usize| {
        let mut seen = 1u64 << v;
        let mut count = 0;
        for s in 0..n {
            if seen >> s & 1 == 0 {
                seen |= g.reachable_from(s, 1 << v);
                count += 1;
            }
        }
        count
    };
    (0..n)
        .filter(|&v| components_without(v) > g.component_count())
        .collect()
}

/// Minimum number of vertices whose removal disconnects the graph (or
/// leaves one vertex), by trying every subset.
fn vertex_connectivity_brute(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let start = (0..n).find(|&v| mask >> v & 1 == 0).unwrap();
        let reach = g.reachable_from(start, mask);
        if (reach | mask).count_ones() as usize != n {
            best = size;
        }
    }
    best
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        let h = shuffle(&g, seed);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn cut_vertices_match_deletion_oracle(g in arb_graph(9)) {
        prop_assert_eq!(cut_vertices(&g), cut_vertices_brute(&g));
    }

    #[test]
    fn bridge_length_is_label_invariant(g in arb_graph(9), seed in any::<u64>()) {
        prop_assert_eq!(max_bridge_length(&g), max_bridge_length(&shuffle(&g, seed)));
    }

    #[test]
    fn vertex_connectivity_matches_subset_oracle(g in arb_graph(8)) {
        prop_assume!(g.is_connected());
        prop_assert_eq!(vertex_connectivity(&g), vertex_connectivity_brute(&g));
    }
}

#[test]
fn enumeration_counts_match_known_sequences() {
    let all = [1, 2, 4, 11, 34, 156, 1044, 12346];
    let connected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for n in 1..=8 {
        assert_eq!(
            all_graphs(n).unwrap().len(),
            all[n - 1],
            "all graphs on {n}"
        );
        assert_eq!(
            enumerate_connected_graphs(n).unwrap().len(),
            connected[n - 1],
            "connected graphs on {n}"
        );
    }
    assert!(enumerate_connected_graphs(9).is_err());
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in 4..=7 {
        let graphs = enumerate_connected_graphs(n).unwrap();
        for _ in 0..200 {
            let (i, j) = (
                rng.gen_range(0..graphs.len()),
                rng.gen_range(0..graphs.len()),
            );
            if i != j {
                assert!(
                    !are_isomorphic(&graphs[i], &graphs[j]),
                    "{} ~ {}",
                    encode_graph6(&graphs[i]),
                    encode_graph6(&graphs[j])
                );
            }
        }
    }
}

#[test]
fn bridge_lengths_of_named_graphs() {
    for n in 2..=10 {
        assert_eq!(max_bridge_length(&special::path(n).unwrap()), n - 2);
    }
    for n in 3..=10 {
        assert_eq!(max_bridge_length(&special::cycle(n).unwrap()), 0);
        assert_eq!(max_bridge_length(&special::star(n).unwrap()), 1);
    }
    assert_eq!(max_bridge_length(&special::theta0()), 0);
    assert_eq!(max_bridge_length(&special::stopwatch(6).unwrap()), 1);
}
