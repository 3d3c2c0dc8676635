use proptest::prelude::*;
use wqoim_core::order::{
    brute_force_contraction_leq, contraction_closure, higman_encoding_leq, path_contraction_leq, seq_embeds,
    set_embeds, FinitePoset, Label, LabeledPath,
};

/// Random partial order: closure of forward pairs on `0..n`.
fn poset_strategy() -> impl Strategy<Value = FinitePoset> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..6).prop_map(move |pairs| {
            let fwd: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            FinitePoset::from_pairs(n, &fwd).unwrap()
        })
    })
}

fn seq(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..n, 0..=6)
}

/// Tries every increasing map.
fn higman_brute(r: &[usize], s: &[usize], p: &FinitePoset) -> bool {
    fn go(r: &[usize], s: &[usize], p: &FinitePoset) -> bool {
        match r.split_first() {
            None => true,
            Some((&a, rest)) => (0..s.len()).any(|j| p.le(a, s[j]) && go(rest, &s[j + 1..], p)),
        }
    }
    go(r, s, p)
}

proptest! {
    #[test]
    fn seq_embeds_is_reflexive_and_transitive(
        (p, a, b, c) in poset_strategy().prop_flat_map(|p| {
            let n = p.len();
            (Just(p), seq(n), seq(n), seq(n))
        })
    ) {
        prop_assert!(seq_embeds(&a, &a, &p).unwrap());
        if seq_embeds(&a, &b, &p).unwrap() && seq_embeds(&b, &c, &p).unwrap() {
            prop_assert!(seq_embeds(&a, &c, &p).unwrap());
        }
        prop_assert_eq!(seq_embeds(&a, &b, &p).unwrap(), higman_brute(&a, &b, &p));
    }

    #[test]
    fn identity_order_powerset_is_subset(n in 1usize..=6, b in 0u64..64, c in 0u64..64) {
        let p = FinitePoset::antichain(n).unwrap();
        let mask = (1u64 << n) - 1;
        let (b, c) = (Label(b & mask), Label(c & mask));
        prop_assert_eq!(set_embeds(b, c, &p).unwrap(), b.is_subset(c));
    }
}

/// Every labelled path with at most `max` vertices over `k` poset elements.
fn all_paths(max: usize, k: usize) -> Vec<LabeledPath> {
    let labels: Vec<Label> = (0..1u64 << k).map(Label).collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Label>> = vec![vec![]];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|p| labels.iter().map(move |&l| p.iter().copied().chain([l]).collect()))
            .collect();
        out.extend(layer.iter().map(|p| LabeledPath::new(p.clone()).unwrap()));
    }
    out
}

#[test]
fn path_contraction_matches_brute_force_over_antichain() {
    let ab = FinitePoset::antichain(2).unwrap();
    let paths = all_paths(5, 2);
    for q in &paths {
        let closure = contraction_closure(q, &ab).unwrap();
        for p in paths.iter().filter(|p| p.len() <= q.len()) {
            let fast = path_contraction_leq(p, q, &ab).unwrap();
            assert_eq!(fast, closure.contains(p.labels()), "{p:?} vs {q:?}");
            if higman_encoding_leq(p, q, &ab).unwrap() {
                assert!(fast, "{p:?} vs {q:?}");
            }
        }
    }
}

/// Over a poset where two elements share an upper bound, relabelling before
/// merging reaches more than merging first: `{0}`, `{1}` both sit below
/// `{2}`, yet `{0, 1}` does not.
#[test]
fn operation_order_matters_for_general_posets() {
    let v = FinitePoset::from_pairs(3, &[(0, 2), (1, 2)]).unwrap();
    let q = LabeledPath::new(vec![Label(0b100), Label(0b100)]).unwrap();
    let p = LabeledPath::new(vec![Label(0b011)]).unwrap();
    assert!(brute_force_contraction_leq(&p, &q, &v).unwrap());
    assert!(!path_contraction_leq(&p, &q, &v).unwrap());
}

#[test]
fn model_contraction_implies_operation_reachability() {
    for pairs in [vec![(0, 1)], vec![(0, 2), (1, 2)], vec![(0, 1), (1, 2)]] {
        let poset = FinitePoset::from_pairs(3, &pairs).unwrap();
        let paths = all_paths(3, 3);
        for q in &paths {
            let closure = contraction_closure(q, &poset).unwrap();
            for p in paths.iter().filter(|p| p.len() <= q.len()) {
                if path_contraction_leq(p, q, &poset).unwrap() {
                    assert!(closure.contains(p.labels()), "{p:?} vs {q:?}");
                }
            }
        }
    }
}
