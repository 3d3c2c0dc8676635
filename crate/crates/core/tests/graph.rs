use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wqoim_core::graph::all_graphs_up_to;
use wqoim_core::Graph;

#[test]
fn deleting_commutes_with_complement() {
    for g in all_graphs_up_to(5).into_iter().filter(|g| g.n() > 1) {
        for v in 0..g.n() {
            assert_eq!(g.delete_vertex(v).unwrap().complement(), g.complement().delete_vertex(v).unwrap());
        }
    }
}

/// In the complement, contracting `uv` merges two non-adjacent vertices
/// like an identification does, but the merged vertex keeps the common
/// complement neighbours rather than all of them.
#[test]
fn contraction_seen_from_the_complement() {
    // the literal identification differs already on P3
    let p3 = Graph::path(3);
    assert_ne!(p3.contract_edge(0, 1).unwrap().complement(), p3.complement().identify(0, 1).unwrap());
    for g in all_graphs_up_to(5) {
        for (u, v) in g.edges() {
            let lhs = g.contract_edge(u, v).unwrap().complement();
            let rhs = g.complement().identify(u, v).unwrap();
            // identification keeps the union of complement neighbourhoods,
            // contraction keeps their intersection
            let merged = u.min(v);
            let expect = Graph::from_fn(lhs.n(), |a, b| {
                if a == merged || b == merged {
                    let other = if a == merged { b } else { a };
                    let orig = if other >= u.max(v) { other + 1 } else { other };
                    g.complement().has_edge(u, orig) && g.complement().has_edge(v, orig)
                } else {
                    rhs.has_edge(a, b)
                }
            })
            .unwrap();
            assert_eq!(lhs, expect, "{g:?} edge {u}-{v}");
        }
    }
}

#[test]
fn canonical_form_respects_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in all_graphs_up_to(6) {
        assert!(g.is_isomorphic(&g));
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            let h = g.permute(&perm).unwrap();
            assert_eq!(g.canonical_form(), h.canonical_form());
        }
    }
}

#[test]
fn components_partition_the_vertices() {
    for g in all_graphs_up_to(6) {
        let comps = g.components();
        assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), g.n());
        for c in comps {
            assert!(g.induced_subgraph(c).is_connected());
        }
    }
}

proptest! {
    #[test]
    fn complement_is_an_involution(n in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
        let mut k = 0;
        let g = Graph::from_fn(n, |_, _| { k += 1; bits[k % bits.len()] }).unwrap();
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }
}
