//! Finite checks of the structural facts the decomposition engines rely on.
//! Each check first tests its own hypothesis and reports `NotApplicable`
//! when it does not hold.

use super::separating_cycle;
use crate::cographs::is_cograph;
use crate::containment::{find_k4_subdivision_in, has_proper_k4_subdivision, is_induced_minor};
use crate::graph::{all_subsets, Graph, VertexSet};
use crate::structure::{all_two_cuts, dominating_vertices, find_min_3wheel, CutKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    NotApplicable,
    Holds,
    Violated(String),
}

impl CheckOutcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, CheckOutcome::Violated(_))
    }
}

fn biconnected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_k_connected(2)
}

/// 2-connected, K̂4-free, with a K4-subdivision avoiding some vertex.
pub fn in_k4hat_setting(g: &Graph) -> bool {
    biconnected(g) && has_proper_k4_subdivision(g).is_some() && !is_induced_minor(&Graph::k4hat(), g)
}

/// 2-connected and gem-free.
pub fn in_gem_setting(g: &Graph) -> bool {
    biconnected(g) && !is_induced_minor(&Graph::gem(), g)
}

/// Vertex sets of K4-subdivisions: every `W` such that the subdivision
/// found inside `G[W]` spans `W`.
fn k4_subdivision_sets(g: &Graph) -> Vec<VertexSet> {
    all_subsets(g.vertices())
        .filter(|&w| w.len() >= 4)
        .filter(|&w| find_k4_subdivision_in(g, w).is_some_and(|s| s.vertices() == w))
        .collect()
}

/// Every vertex off a K4-subdivision has at least three neighbours on it.
pub fn off_subdivision_contacts(g: &Graph) -> CheckOutcome {
    if !in_k4hat_setting(g) {
        return CheckOutcome::NotApplicable;
    }
    for s in k4_subdivision_sets(g) {
        for x in g.vertices() - s {
            if (g.neighbors(x) & s).len() < 3 {
                return CheckOutcome::Violated(format!("vertex {x} has fewer than 3 neighbours on {s:?}"));
            }
        }
    }
    CheckOutcome::Holds
}

/// A 3-wheel exists, and a minimum one is no larger than any
/// K4-subdivision.
pub fn min_wheel_is_min_subdivision(g: &Graph) -> CheckOutcome {
    if !in_k4hat_setting(g) {
        return CheckOutcome::NotApplicable;
    }
    let Some(w) = find_min_3wheel(g) else {
        return CheckOutcome::Violated("no 3-wheel".into());
    };
    let smallest = k4_subdivision_sets(g).iter().map(|s| s.len()).min().unwrap_or(usize::MAX);
    if w.vertices().len() > smallest {
        return CheckOutcome::Violated(format!("wheel {w:?} larger than a {smallest}-vertex K4-subdivision"));
    }
    CheckOutcome::Holds
}

/// For a minimum 3-wheel whose cycle `C` has a chord: the chord is unique,
/// the centre has exactly three neighbours on `C`, one of them (`u`) is
/// adjacent to both chord ends, and the other two are consecutive on `C`.
pub fn min_wheel_chord_structure(g: &Graph) -> CheckOutcome {
    if !in_k4hat_setting(g) {
        return CheckOutcome::NotApplicable;
    }
    let Some(w) = find_min_3wheel(g) else {
        return CheckOutcome::Violated("no 3-wheel".into());
    };
    let k = w.cycle.len();
    let c = w.cycle_set();
    let on_cycle = |a: usize, b: usize| {
        let i = w.cycle.iter().position(|&v| v == a).unwrap();
        w.cycle[(i + 1) % k] == b || w.cycle[(i + k - 1) % k] == b
    };
    let chords: Vec<(usize, usize)> = g
        .induced_subgraph(c)
        .edges()
        .into_iter()
        .map(|(i, j)| {
            let verts = c.to_vec();
            (verts[i], verts[j])
        })
        .filter(|&(a, b)| !on_cycle(a, b))
        .collect();
    if chords.is_empty() {
        return CheckOutcome::Holds;
    }
    if chords.len() != 1 {
        return CheckOutcome::Violated(format!("cycle of {w:?} has chords {chords:?}"));
    }
    let (x, y) = chords[0];
    let spokes = g.neighbors(w.center) & c;
    if spokes.len() != 3 {
        return CheckOutcome::Violated(format!("centre of {w:?} has {} neighbours on the cycle", spokes.len()));
    }
    let ok = spokes.iter().any(|u| {
        let others = spokes.without(u).to_vec();
        g.has_edge(u, x) && g.has_edge(u, y) && on_cycle(others[0], others[1])
    });
    if ok {
        CheckOutcome::Holds
    } else {
        CheckOutcome::Violated(format!("chord {x}-{y} of {w:?} is not placed around a spoke"))
    }
}

/// Non-adjacent cut pairs with exactly two sides, with the cycle through
/// shortest paths in each side.
fn two_sided_cycles(g: &Graph) -> Vec<((usize, usize), VertexSet)> {
    all_two_cuts(g)
        .into_iter()
        .filter(|c| c.kind == CutKind::K2BarCut && c.side_components.len() == 2)
        .map(|c| ((c.u, c.v), separating_cycle(g, c.u, c.v, &c.side_components)))
        .collect()
}

/// For every two-sided non-adjacent cut pair: the separating cycle `C` is
/// induced, every component off `C` has two or three neighbours on `C`, and
/// at most six vertices of `C` have degree above two.
pub fn separating_cycle_contacts(g: &Graph) -> CheckOutcome {
    if !in_gem_setting(g) {
        return CheckOutcome::NotApplicable;
    }
    let cycles = two_sided_cycles(g);
    if cycles.is_empty() {
        return CheckOutcome::NotApplicable;
    }
    for (cut, c) in cycles {
        if g.induced_subgraph(c).edge_count() != c.len() {
            return CheckOutcome::Violated(format!("cycle {c:?} for cut {cut:?} has a chord"));
        }
        for j in g.components_within(g.vertices() - c) {
            let contacts = (g.neighborhood_of_set(j) & c).len();
            if !(2..=3).contains(&contacts) {
                return CheckOutcome::Violated(format!("component {j:?} has {contacts} neighbours on {c:?}"));
            }
        }
        let high = c.iter().filter(|&v| g.degree(v) > 2).count();
        if high > 6 {
            return CheckOutcome::Violated(format!("{high} vertices of degree above two on {c:?}"));
        }
    }
    CheckOutcome::Holds
}

/// When the separating cycle has a vertex of degree two, the neighbourhoods
/// on it of the components off it form a chain under inclusion, and at most
/// three cycle vertices have degree above two.
pub fn nested_cycle_contacts(g: &Graph) -> CheckOutcome {
    if !in_gem_setting(g) {
        return CheckOutcome::NotApplicable;
    }
    let mut applied = false;
    for (cut, c) in two_sided_cycles(g) {
        if !c.iter().any(|v| g.degree(v) == 2) {
            continue;
        }
        applied = true;
        let contacts: Vec<VertexSet> =
            g.components_within(g.vertices() - c).into_iter().map(|j| g.neighborhood_of_set(j) & c).collect();
        for (i, &a) in contacts.iter().enumerate() {
            for &b in &contacts[i + 1..] {
                if !a.is_subset(b) && !b.is_subset(a) {
                    return CheckOutcome::Violated(format!("contacts {a:?} and {b:?} on cycle for {cut:?} not nested"));
                }
            }
        }
        let high = c.iter().filter(|&v| g.degree(v) > 2).count();
        if high > 3 {
            return CheckOutcome::Violated(format!("{high} vertices of degree above two on {c:?}"));
        }
    }
    if applied {
        CheckOutcome::Holds
    } else {
        CheckOutcome::NotApplicable
    }
}

/// In a gem-free graph every induced subgraph dominated by an outside
/// vertex is a cograph.
pub fn dominated_subgraphs_are_cographs(g: &Graph) -> CheckOutcome {
    if is_induced_minor(&Graph::gem(), g) {
        return CheckOutcome::NotApplicable;
    }
    for h in all_subsets(g.vertices()).filter(|h| !h.is_empty()) {
        if let Some(v) = dominating_vertices(g, h).first() {
            if !is_cograph(&g.induced_subgraph(h)) {
                return CheckOutcome::Violated(format!("{h:?} dominated by {v} is not a cograph"));
            }
        }
    }
    CheckOutcome::Holds
}
