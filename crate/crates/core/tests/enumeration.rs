//! Enumeration checked against brute force over every edge subset, with
//! duplicates removed by pairwise isomorphism tests instead of canonical forms.

use nilgraph::graph::{canonical_form, enumerate_graphs, graph_iso, graphs_with_total};
use nilgraph::Graph;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn brute_force_classes(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        if !reps.iter().any(|r| graph_iso(r, &g).is_some()) {
            reps.push(g);
        }
    }
    reps
}

#[test]
fn counts_match_brute_force() {
    for (n, expected) in [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
        let brute = brute_force_classes(n);
        let fast = enumerate_graphs(n).unwrap();
        assert_eq!(brute.len(), expected, "brute force n = {n}");
        assert_eq!(fast.len(), expected, "enumeration n = {n}");
        for g in &brute {
            assert_eq!(fast.iter().filter(|h| graph_iso(g, h).is_some()).count(), 1);
        }
    }
}

#[test]
fn six_and_seven_vertices() {
    assert_eq!(enumerate_graphs(6).unwrap().len(), 156);
    assert_eq!(enumerate_graphs(7).unwrap().len(), 1044);
}

#[test]
fn representatives_are_pairwise_distinct() {
    let reps = enumerate_graphs(5).unwrap();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            assert!(graph_iso(a, b).is_none());
        }
    }
}

#[test]
fn representatives_are_canonical_and_sorted() {
    let reps = enumerate_graphs(6).unwrap();
    let keys: Vec<(usize, String)> = reps
        .iter()
        .map(|g| (g.edge_count(), canonical_form(g).unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    sorted.dedup();
    assert_eq!(sorted.len(), reps.len());
}

#[test]
fn totals_match_filtered_enumeration() {
    for d in 0..=7 {
        let expected = (1..=d)
            .flat_map(|n| enumerate_graphs(n).unwrap())
            .filter(|g| g.n() + g.edge_count() == d)
            .count();
        assert_eq!(graphs_with_total(d).unwrap().len(), expected, "d = {d}");
    }
}

#[test]
fn dimension_six_has_five_classes() {
    let mut shapes: Vec<(usize, usize)> = graphs_with_total(6)
        .unwrap()
        .iter()
        .map(|g| (g.n(), g.edge_count()))
        .collect();
    shapes.sort();
    assert_eq!(shapes, vec![(3, 3), (4, 2), (4, 2), (5, 1), (6, 0)]);
}
