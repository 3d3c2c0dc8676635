use wqoim_core::cographs::{is_cograph, BasicTag};
use wqoim_core::containment::{find_model, is_induced_minor};
use wqoim_core::decompose::checks::{self, CheckOutcome};
use wqoim_core::decompose::{
    decompose_gem, decompose_gem_with, decompose_k4hat, decompose_k4hat_with, find_p4_skeleton, verify_gem,
    verify_k4hat, DecomposeError, Engine, GemCertificate, K4HatCertificate,
};
use wqoim_core::graph::all_graphs_up_to;
use wqoim_core::{Graph, Relation, VertexSet};

fn biconnected_up_to(n: usize) -> Vec<Graph> {
    all_graphs_up_to(n).into_iter().filter(|g| g.n() >= 3 && g.is_k_connected(2)).collect()
}

/// The engine only ever emits certificates that verify, and it succeeds on
/// every graph where a minimum 3-wheel cycle gives the split.
#[test]
fn k4hat_engine_is_sound_up_to_seven() {
    let mut emitted = 0;
    for g in biconnected_up_to(7) {
        if is_induced_minor(&Graph::k4hat(), &g) {
            continue;
        }
        match decompose_k4hat(&g) {
            Ok(cert) => {
                assert!(verify_k4hat(&g, &cert), "{g:?}");
                emitted += 1;
            }
            Err(DecomposeError::Failed(_)) => {}
            Err(e) => panic!("{g:?}: {e}"),
        }
    }
    assert!(emitted > 100);
}

/// Independent search for a chordless cycle `C` whose complement is
/// complete multipartite and uniformly attached to `C`.
fn has_cycle_multipartite_split(g: &Graph) -> bool {
    let n = g.n();
    (1u32..(1 << n) - 1).any(|mask| {
        let c: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let m: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        let cycle_ok = c.len() >= 3
            && c.iter().all(|&a| c.iter().filter(|&&b| g.has_edge(a, b)).count() == 2)
            && g.induced_subgraph(c.iter().collect()).is_connected();
        // complete multipartite: non-adjacency is transitive on m
        let multi_ok = m.iter().all(|&a| {
            m.iter().all(|&b| {
                m.iter().all(|&d| a == b || b == d || a == d || g.has_edge(a, b) || g.has_edge(b, d) || !g.has_edge(a, d))
            })
        });
        let attach_ok = m.iter().all(|&a| c.iter().all(|&x| g.has_edge(a, x) == g.has_edge(m[0], x)));
        cycle_ok && multi_ok && attach_ok
    })
}

/// K_{4,3} and K_{3,3} plus one edge are 2-connected, K̂4-free and contain
/// K4, yet are neither subdivisions of K4, K_{3,3} or the prism nor admit a
/// cycle plus multipartite split.
#[test]
fn k4hat_free_graphs_without_any_certificate() {
    let k43 = Graph::complete_multipartite(&[4, 3]).unwrap();
    let k33e = Graph::k33().add_edge(0, 1).unwrap();
    for g in [k43, k33e] {
        assert!(g.is_k_connected(2));
        assert!(!is_induced_minor(&Graph::k4hat(), &g), "{g:?}");
        assert!(is_induced_minor(&Graph::complete(4), &g));
        for base in [Graph::complete(4), Graph::k33(), Graph::prism()] {
            assert!(!wqoim_core::structure::is_subdivision_of(&g, &base));
        }
        assert!(!has_cycle_multipartite_split(&g), "{g:?}");
        assert!(matches!(decompose_k4hat(&g), Err(DecomposeError::Failed(_))));
        assert!(matches!(decompose_k4hat_with(&g, Engine::BruteForce), Err(DecomposeError::Failed(_))));
    }
}

/// K6 minus two disjoint edges has a split through a 4-cycle, but every
/// minimum 3-wheel there is a triangle plus centre and no triangle works.
#[test]
fn minimum_wheel_cycle_can_miss_the_split() {
    let g = Graph::complete_multipartite(&[2, 2, 1, 1]).unwrap();
    assert!(!is_induced_minor(&Graph::k4hat(), &g));
    assert!(has_cycle_multipartite_split(&g));
    assert!(decompose_k4hat_with(&g, Engine::BruteForce).is_ok());
    assert!(matches!(decompose_k4hat(&g), Err(DecomposeError::Failed(_))));
}

#[test]
fn gem_engine_is_complete_up_to_seven() {
    for g in biconnected_up_to(7) {
        if is_induced_minor(&Graph::gem(), &g) {
            continue;
        }
        let cert = decompose_gem(&g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        assert!(verify_gem(&g, &cert), "{g:?}");
    }
}

#[test]
fn engines_agree_with_brute_force_on_existence() {
    for g in biconnected_up_to(6) {
        if !is_induced_minor(&Graph::k4hat(), &g) {
            let brute = decompose_k4hat_with(&g, Engine::BruteForce);
            if has_cycle_multipartite_split(&g) {
                assert!(brute.is_ok(), "{g:?}");
            }
            if decompose_k4hat(&g).is_ok() {
                assert!(brute.is_ok(), "{g:?}");
            }
        }
        if !is_induced_minor(&Graph::gem(), &g) {
            let brute = decompose_gem_with(&g, Engine::BruteForce).unwrap();
            let proof = decompose_gem(&g).unwrap();
            assert!(brute.x.len() <= proof.x.len(), "{g:?}");
        }
    }
}

/// Moves one vertex between the cycle and the multipartite side; the
/// verifier must reject whenever the moved split is not itself valid.
#[test]
fn k4hat_verifier_rejects_mutations() {
    let mut mutated = 0;
    for g in biconnected_up_to(7) {
        let Ok(K4HatCertificate::CycleMultipartite { cycle, m, parts }) = decompose_k4hat(&g) else {
            continue;
        };
        for v in cycle.clone() {
            let short: Vec<usize> = cycle.iter().copied().filter(|&c| c != v).collect();
            let m2 = m.with(v);
            let parts2: Vec<VertexSet> = parts.iter().copied().chain([VertexSet::singleton(v)]).collect();
            let cert = K4HatCertificate::CycleMultipartite { cycle: short.clone(), m: m2, parts: parts2 };
            let valid = short.len() >= 3
                && (0..short.len()).all(|i| g.has_edge(short[i], short[(i + 1) % short.len()]))
                && g.induced_subgraph(short.iter().collect()).edge_count() == short.len()
                && parts_valid(&g, m2, v, &short);
            assert_eq!(verify_k4hat(&g, &cert), valid, "{g:?} {cert:?}");
            mutated += 1;
        }
        if m.len() > 1 {
            let v = m.first().unwrap();
            let cert = K4HatCertificate::CycleMultipartite {
                cycle: cycle.clone(),
                m: m.without(v),
                parts: parts.iter().map(|p| p.without(v)).filter(|p| !p.is_empty()).collect(),
            };
            assert!(!verify_k4hat(&g, &cert), "dropped vertex accepted: {g:?}");
        }
    }
    assert!(mutated > 0);
}

/// The mutated split is valid iff the moved vertex `v` is joined to all of
/// the old multipartite side and everything there sees the same vertices of
/// the shortened cycle.
fn parts_valid(g: &Graph, m2: VertexSet, v: usize, cycle: &[usize]) -> bool {
    let c: VertexSet = cycle.iter().collect();
    let shared = g.neighbors(v) & c;
    m2.without(v).is_subset(g.neighbors(v)) && m2.iter().all(|a| g.neighbors(a) & c == shared)
}

#[test]
fn gem_verifier_rejects_needed_deletions() {
    let mut mutated = 0;
    for g in biconnected_up_to(7) {
        let Ok(cert) = decompose_gem(&g) else {
            continue;
        };
        for v in cert.x {
            let x = cert.x.without(v);
            let comps = g.components_within(g.vertices() - x);
            let needed = comps.iter().any(|&c| {
                let h = g.induced_subgraph(c);
                !is_cograph(&h) && !is_path_with_inner_degree_two(&g, c)
            });
            // keep the old tags and add the freed vertex to its component
            let components = comps
                .iter()
                .map(|&c| wqoim_core::decompose::GemComponent {
                    vertices: c,
                    tag: cert
                        .components
                        .iter()
                        .find(|k| k.vertices.intersects(c))
                        .map_or(BasicTag::Cograph, |k| k.tag),
                })
                .collect();
            let bad = GemCertificate { x, components };
            if needed {
                assert!(!verify_gem(&g, &bad), "{g:?} {bad:?}");
                mutated += 1;
            }
        }
    }
    assert!(mutated > 0);
}

fn is_path_with_inner_degree_two(g: &Graph, c: VertexSet) -> bool {
    let h = g.induced_subgraph(c);
    let degs: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    h.is_connected()
        && h.edge_count() + 1 == h.n()
        && degs.iter().all(|&d| d <= 2)
        && c.iter().zip(&degs).all(|(v, &d)| d < 2 || g.degree(v) == 2)
}

#[test]
fn p4_skeleton_exists_for_triconnected_gem_free_graphs() {
    for g in all_graphs_up_to(8).into_iter().filter(|g| g.is_k_connected(3)) {
        if is_cograph(&g) || is_induced_minor(&Graph::gem(), &g) {
            continue;
        }
        let p = find_p4_skeleton(&g).unwrap().unwrap_or_else(|| panic!("{g:?}"));
        let s: VertexSet = p.iter().collect();
        for c in g.components_within(g.vertices() - s) {
            assert!(is_cograph(&g.induced_subgraph(c)));
        }
    }
}

/// A K4-subdivision plus a vertex joined to it by two paths meeting only at
/// that vertex always has K̂4 as an induced minor.
#[test]
fn two_path_attachment_gives_k4hat() {
    let k4hat = Graph::k4hat();
    let mut bases = vec![Graph::complete(4)];
    for (u, v) in [(0, 1), (2, 3), (0, 2)] {
        let last = bases.last().unwrap().clone();
        bases.push(last.subdivide_edge(u, v).unwrap());
    }
    for s in bases {
        for a in 0..s.n() {
            for b in a + 1..s.n() {
                for (la, lb) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
                    let mut g = s.clone();
                    let x = g.n();
                    g = g.add_vertex(VertexSet::EMPTY).unwrap();
                    let attach = |g: &mut Graph, end: usize, len: usize| {
                        let mut prev = x;
                        for _ in 0..len {
                            *g = g.add_vertex(VertexSet::singleton(prev)).unwrap();
                            prev = g.n() - 1;
                        }
                        *g = g.add_edge(prev, end).unwrap();
                    };
                    attach(&mut g, a, la);
                    attach(&mut g, b, lb);
                    assert!(find_model(&k4hat, &g, Relation::InducedMinor).unwrap().is_some(), "{g:?}");
                }
            }
        }
    }
}

fn run_check(name: &str, n: usize, f: fn(&Graph) -> CheckOutcome) {
    let mut applied = 0;
    for g in all_graphs_up_to(n) {
        match f(&g) {
            CheckOutcome::Violated(msg) => panic!("{name}: {g:?}: {msg}"),
            CheckOutcome::Holds => applied += 1,
            CheckOutcome::NotApplicable => {}
        }
    }
    assert!(applied > 0, "{name} never applied");
}

#[test]
fn structural_checks_hold_up_to_seven() {
    run_check("off-subdivision contacts", 7, checks::off_subdivision_contacts);
    run_check("separating cycle contacts", 7, checks::separating_cycle_contacts);
    run_check("nested contacts", 7, checks::nested_cycle_contacts);
    run_check("dominated cographs", 7, checks::dominated_subgraphs_are_cographs);
}

/// In K_{4,3} every 3-wheel uses all seven vertices: a centre on the larger
/// side needs a cycle through all three vertices of the smaller side. Its
/// cycle is then K_{3,3} with three chords, while K_{3,3} minus an edge is
/// a six-vertex K4-subdivision.
#[test]
fn minimum_wheel_claims_fail_on_k43() {
    let g = Graph::complete_multipartite(&[4, 3]).unwrap();
    assert!(checks::in_k4hat_setting(&g));
    let w = wqoim_core::structure::find_min_3wheel(&g).unwrap();
    assert_eq!(w.vertices().len(), 7);
    assert_eq!(g.induced_subgraph(w.cycle_set()).edge_count(), 9);
    let k33_minus = Graph::k33().remove_edge(0, 3).unwrap();
    assert!(wqoim_core::structure::is_subdivision_of(&k33_minus, &Graph::complete(4)));
    assert!(checks::min_wheel_chord_structure(&g).is_violated());
    assert!(checks::min_wheel_is_min_subdivision(&g).is_violated());
}

/// The chord and size claims hold on every graph up to six vertices.
#[test]
fn minimum_wheel_claims_hold_up_to_six() {
    run_check("minimum wheel chords", 6, checks::min_wheel_chord_structure);
    run_check("minimum wheel size", 6, checks::min_wheel_is_min_subdivision);
}
