//! Exhaustive generation of small graphs.

use super::{canonical_labeling, Graph, VertexSet};
use std::collections::BTreeMap;

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, canonically labelled, sorted by edge count and then canonical
/// form.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(0).unwrap()];
    for _ in 0..n {
        layer = extend(&layer);
    }
    layer
}

/// All graphs with `1..=n` vertices up to isomorphism, by vertex count.
pub fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut layer = vec![Graph::empty(0).unwrap()];
    for _ in 0..n {
        layer = extend(&layer);
        out.extend(layer.iter().cloned());
    }
    out
}

/// Adds one vertex in every possible way and keeps one graph per class.
fn extend(layer: &[Graph]) -> Vec<Graph> {
    let mut found: BTreeMap<(usize, Vec<u8>), Graph> = BTreeMap::new();
    for g in layer {
        for mask in 0u128..(1u128 << g.n()) {
            let h = g.add_vertex(VertexSet::from_bits(mask)).unwrap();
            let key = (h.edge_count(), h.canonical_form());
            found.entry(key).or_insert_with(|| {
                let perm = canonical_labeling(&h, None);
                h.permute(&perm).unwrap()
            });
        }
    }
    found.into_values().collect()
}

/// Calls `f` on every labelled graph on vertex set `0..n` (all
/// `2^(n(n-1)/2)` adjacency matrices).
pub fn for_each_labeled_graph(n: usize, mut f: impl FnMut(&Graph)) {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    assert!(pairs.len() < 64, "too many vertices for labelled enumeration");
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        f(&Graph::from_edges(n, &edges).unwrap());
    }
}
