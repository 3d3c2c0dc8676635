//! Decomposition engines for 2-connected K̂4-free and gem-free graphs, each
//! with a verifier that re-checks the emitted certificate from scratch.
//!
//! The engines follow the structure of the decomposition proofs.
//! [`Engine::BruteForce`] searches the certificate space directly instead and
//! serves as an independent oracle.

pub mod checks;

use crate::cographs::{is_basic_in, is_cograph, tag_holds, BasicTag};
use crate::containment::{contains_k4_subdivision, find_model, has_proper_k4_subdivision, ContainmentModel, Relation};
use crate::graph::{subsets_of_size, Graph, VertexSet};
use crate::structure::{all_min_3wheels, all_two_cuts, subdivision_branch_map, verify_subdivision_map, CutKind};
use std::collections::VecDeque;
use thiserror::Error;

/// Largest deletion set a gem certificate may use.
pub const GEM_MAX_X: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph is not 2-connected{}", cut_vertex.map(|v| format!(" (cut vertex {v})")).unwrap_or_default())]
    NotBiconnected { cut_vertex: Option<usize> },
    #[error("graph is not 3-connected")]
    NotTriconnected,
    #[error("graph contains the excluded pattern as an induced minor")]
    PatternFound { model: ContainmentModel },
    #[error("decomposition failed: {0}")]
    Failed(String),
}

pub type Result<T, E = DecomposeError> = std::result::Result<T, E>;

/// Which engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Proof,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubdivisionBase {
    K4,
    K33,
    Prism,
}

impl SubdivisionBase {
    pub const ALL: [SubdivisionBase; 3] = [SubdivisionBase::K4, SubdivisionBase::K33, SubdivisionBase::Prism];

    pub fn graph(self) -> Graph {
        match self {
            SubdivisionBase::K4 => Graph::complete(4),
            SubdivisionBase::K33 => Graph::k33(),
            SubdivisionBase::Prism => Graph::prism(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SubdivisionBase::K4 => "K4",
            SubdivisionBase::K33 => "K33",
            SubdivisionBase::Prism => "prism",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum K4HatCertificate {
    /// `K4` is not an induced minor.
    K4Free,
    /// `branch_map[b]` is the host vertex of base vertex `b`.
    SubdivisionOf { base: SubdivisionBase, branch_map: Vec<usize> },
    /// `cycle` in cyclic order induces a chordless cycle, the rest `m` is
    /// complete multipartite with parts `parts`, and all of `m` sees the same
    /// cycle vertices.
    CycleMultipartite { cycle: Vec<usize>, m: VertexSet, parts: Vec<VertexSet> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GemComponent {
    pub vertices: VertexSet,
    pub tag: BasicTag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GemCertificate {
    pub x: VertexSet,
    /// Components of `G - x`, ordered by least vertex.
    pub components: Vec<GemComponent>,
}

fn require_biconnected(g: &Graph) -> Result<()> {
    if g.n() >= 3 && g.is_k_connected(2) {
        Ok(())
    } else {
        Err(DecomposeError::NotBiconnected { cut_vertex: g.cut_vertices().first() })
    }
}

fn require_free(pattern: &Graph, g: &Graph) -> Result<()> {
    match find_model(pattern, g, Relation::InducedMinor).expect("non-empty inputs") {
        Some(model) => Err(DecomposeError::PatternFound { model }),
        None => Ok(()),
    }
}

/// Co-components of `G[m]`, which are the parts when `G[m]` is complete
/// multipartite.
fn parts_of(g: &Graph, m: VertexSet) -> Vec<VertexSet> {
    g.complement().components_within(m)
}

/// Cyclic order of a vertex set inducing a cycle, starting at its least
/// vertex and heading to the smaller neighbour.
fn cycle_order(g: &Graph, c: VertexSet) -> Option<Vec<usize>> {
    let start = c.first()?;
    if c.len() < 3 || c.iter().any(|v| (g.neighbors(v) & c).len() != 2) || !g.is_connected_set(c) {
        return None;
    }
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (g.neighbors(start) & c).first().unwrap();
    while cur != start {
        order.push(cur);
        let next = (g.neighbors(cur) & c).without(prev).first().unwrap();
        prev = cur;
        cur = next;
    }
    Some(order)
}

pub fn decompose_k4hat(g: &Graph) -> Result<K4HatCertificate> {
    decompose_k4hat_with(g, Engine::Proof)
}

pub fn decompose_k4hat_with(g: &Graph, engine: Engine) -> Result<K4HatCertificate> {
    require_biconnected(g)?;
    require_free(&Graph::k4hat(), g)?;
    let cert = match engine {
        Engine::Proof => k4hat_by_proof(g)?,
        Engine::BruteForce => k4hat_by_search(g)
            .ok_or_else(|| DecomposeError::Failed("no certificate of any kind exists".into()))?,
    };
    if !verify_k4hat(g, &cert) {
        return Err(DecomposeError::Failed(format!("emitted certificate does not verify: {cert:?}")));
    }
    Ok(cert)
}

fn subdivision_case(g: &Graph) -> Option<K4HatCertificate> {
    SubdivisionBase::ALL.into_iter().find_map(|base| {
        subdivision_branch_map(g, &base.graph()).map(|branch_map| K4HatCertificate::SubdivisionOf { base, branch_map })
    })
}

fn k4hat_by_proof(g: &Graph) -> Result<K4HatCertificate> {
    if !contains_k4_subdivision(g) {
        return Ok(K4HatCertificate::K4Free);
    }
    if let Some(cert) = subdivision_case(g) {
        return Ok(cert);
    }
    if has_proper_k4_subdivision(g).is_none() {
        // Without a proper K4-subdivision the graph is a wheel; its centre
        // forms the multipartite side.
        for r in g.vertices() {
            let rest = g.vertices().without(r);
            if let Some(cycle) = cycle_order(g, rest) {
                let m = VertexSet::singleton(r);
                return Ok(K4HatCertificate::CycleMultipartite { cycle, m, parts: vec![m] });
            }
        }
        return Err(DecomposeError::Failed("no proper K4-subdivision, but not a wheel or subdivision".into()));
    }
    // Take the cycle of a minimum 3-wheel and put everything else on the
    // multipartite side. Ties between minimum wheels matter, so every one
    // is tried in order.
    let wheels = all_min_3wheels(g);
    if wheels.is_empty() {
        return Err(DecomposeError::Failed("proper K4-subdivision without a 3-wheel".into()));
    }
    let mut chorded = false;
    for wheel in wheels {
        let c = wheel.cycle_set();
        if g.induced_subgraph(c).edge_count() != c.len() {
            chorded = true;
            continue;
        }
        let m = g.vertices() - c;
        let cert = K4HatCertificate::CycleMultipartite { cycle: wheel.cycle, m, parts: parts_of(g, m) };
        if verify_k4hat(g, &cert) {
            return Ok(cert);
        }
    }
    Err(DecomposeError::Failed(if chorded {
        "no minimum 3-wheel gives a valid split and some have a chorded cycle".into()
    } else {
        "no minimum 3-wheel gives a valid cycle and multipartite split".into()
    }))
}

fn k4hat_by_search(g: &Graph) -> Option<K4HatCertificate> {
    if find_model(&Graph::complete(4), g, Relation::InducedMinor).ok()?.is_none() {
        return Some(K4HatCertificate::K4Free);
    }
    if let Some(cert) = subdivision_case(g) {
        return Some(cert);
    }
    let mut found = None;
    for size in 3..g.n() {
        subsets_of_size(g.vertices(), size, &mut |c| {
            if let Some(cycle) = cycle_order(g, c) {
                let m = g.vertices() - c;
                let cert = K4HatCertificate::CycleMultipartite { cycle, m, parts: parts_of(g, m) };
                if verify_k4hat(g, &cert) {
                    found = Some(cert);
                    return false;
                }
            }
            true
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// Re-checks a certificate: `K4Free` by model search, subdivisions by the
/// branch map, cycle-multipartite splits by partition, chordless cycle,
/// complete multipartite parts and equal neighbourhoods on the cycle.
pub fn verify_k4hat(g: &Graph, cert: &K4HatCertificate) -> bool {
    match cert {
        K4HatCertificate::K4Free => {
            g.n() == 0 || find_model(&Graph::complete(4), g, Relation::InducedMinor).map_or(false, |m| m.is_none())
        }
        K4HatCertificate::SubdivisionOf { base, branch_map } => verify_subdivision_map(g, &base.graph(), branch_map),
        K4HatCertificate::CycleMultipartite { cycle, m, parts } => verify_cycle_multipartite(g, cycle, *m, parts),
    }
}

fn verify_cycle_multipartite(g: &Graph, cycle: &[usize], m: VertexSet, parts: &[VertexSet]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let c: VertexSet = cycle.iter().collect();
    if c.len() != k || c.intersects(m) || (c | m) != g.vertices() || m.is_empty() {
        return false;
    }
    // Chordless cycle in the given order.
    if !(0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k])) || g.induced_subgraph(c).edge_count() != k {
        return false;
    }
    // Parts partition m, are independent, and are pairwise complete.
    let union = parts.iter().fold(VertexSet::EMPTY, |a, &p| a | p);
    if union != m || parts.iter().map(|p| p.len()).sum::<usize>() != m.len() || parts.iter().any(|p| p.is_empty()) {
        return false;
    }
    for (i, &p) in parts.iter().enumerate() {
        if !g.is_independent(p) {
            return false;
        }
        for &q in &parts[i + 1..] {
            if p.iter().any(|v| !q.is_subset(g.neighbors(v))) {
                return false;
            }
        }
    }
    let first = g.neighbors(m.first().unwrap()) & c;
    m.iter().all(|v| g.neighbors(v) & c == first)
}

pub fn decompose_gem(g: &Graph) -> Result<GemCertificate> {
    decompose_gem_with(g, Engine::Proof)
}

pub fn decompose_gem_with(g: &Graph, engine: Engine) -> Result<GemCertificate> {
    require_biconnected(g)?;
    require_free(&Graph::gem(), g)?;
    let x = match engine {
        Engine::Proof => gem_deletion_set(g)?,
        Engine::BruteForce => gem_by_search(g)
            .ok_or_else(|| DecomposeError::Failed(format!("no deletion set of size at most {GEM_MAX_X}")))?,
    };
    let cert = certificate_for(g, x)
        .ok_or_else(|| DecomposeError::Failed(format!("deletion set {x:?} leaves a component that is not basic")))?;
    if !verify_gem(g, &cert) {
        return Err(DecomposeError::Failed(format!("emitted certificate does not verify: {cert:?}")));
    }
    Ok(cert)
}

/// Tags every component of `G - x`, or `None` if some component is not basic.
pub fn certificate_for(g: &Graph, x: VertexSet) -> Option<GemCertificate> {
    let components = g
        .components_within(g.vertices() - x)
        .into_iter()
        .map(|c| is_basic_in(g, c).ok().flatten().map(|tag| GemComponent { vertices: c, tag }))
        .collect::<Option<Vec<_>>>()?;
    Some(GemCertificate { x, components })
}

fn gem_deletion_set(g: &Graph) -> Result<VertexSet> {
    if is_cograph(g) {
        return Ok(VertexSet::EMPTY);
    }
    let cuts = all_two_cuts(g);
    if cuts.is_empty() {
        let p4 = find_p4_skeleton(g)?
            .ok_or_else(|| DecomposeError::Failed("no induced P4 leaves only cographs".into()))?;
        return Ok(p4.iter().collect());
    }
    if let Some(cut) = cuts.iter().find(|c| c.kind == CutKind::K2Cut) {
        return Ok(cut.vertices());
    }
    if let Some(cut) = cuts.iter().find(|c| c.side_components.len() > 2) {
        return Ok(cut.vertices());
    }
    let cut = &cuts[0];
    let c = separating_cycle(g, cut.u, cut.v, &cut.side_components);
    let mut x: VertexSet = c.iter().filter(|&v| g.degree(v) > 2).collect();
    if x.is_empty() {
        // The graph is the cycle itself; one deletion leaves a path.
        x.insert(c.first().unwrap());
    }
    Ok(x)
}

/// Shortest `u`-`v` path inside `G[within]`, breadth-first with neighbours
/// taken in increasing order.
pub fn shortest_path_within(g: &Graph, u: usize, v: usize, within: VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(u);
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        if a == v {
            let mut path = vec![v];
            while *path.last().unwrap() != u {
                path.push(parent[*path.last().unwrap()]);
            }
            path.reverse();
            return Some(path);
        }
        for b in g.neighbors(a) & within - seen {
            seen.insert(b);
            parent[b] = a;
            queue.push_back(b);
        }
    }
    None
}

/// The cycle through a non-adjacent cut pair `{u, v}` made of a shortest
/// `u`-`v` path through each of the first two sides.
pub fn separating_cycle(g: &Graph, u: usize, v: usize, sides: &[VertexSet]) -> VertexSet {
    let ends = VertexSet::singleton(u).with(v);
    sides[..2]
        .iter()
        .map(|&side| shortest_path_within(g, u, v, side | ends).expect("2-connected sides reach both cut vertices"))
        .flatten()
        .collect()
}

/// The lexicographically least induced `P4` (by sorted vertex set) whose
/// removal leaves only cograph components, in path order. `None` when the
/// graph is a cograph or no such `P4` exists.
pub fn find_p4_skeleton(g: &Graph) -> Result<Option<[usize; 4]>> {
    if !g.is_k_connected(3) {
        return Err(DecomposeError::NotTriconnected);
    }
    if is_cograph(g) {
        return Ok(None);
    }
    let mut found = None;
    subsets_of_size(g.vertices(), 4, &mut |s| {
        let Some(order) = induced_p4_order(g, s) else {
            return true;
        };
        let rest = g.vertices() - s;
        if g.components_within(rest).into_iter().all(|c| is_cograph(&g.induced_subgraph(c))) {
            found = Some(order);
            return false;
        }
        true
    });
    Ok(found)
}

fn induced_p4_order(g: &Graph, s: VertexSet) -> Option<[usize; 4]> {
    let h = g.induced_subgraph(s);
    if h.edge_count() != 3 || !h.is_connected() || h.max_degree() != 2 {
        return None;
    }
    let order = cycle_free_path(g, s)?;
    Some([order[0], order[1], order[2], order[3]])
}

/// Order of a vertex set inducing a path, from its smaller end.
fn cycle_free_path(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    let ends: Vec<usize> = s.iter().filter(|&v| (g.neighbors(v) & s).len() == 1).collect();
    let &start = ends.first()?;
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    while let Some(next) = (g.neighbors(*order.last().unwrap()) & s - seen).first() {
        seen.insert(next);
        order.push(next);
    }
    (seen == s).then_some(order)
}

fn gem_by_search(g: &Graph) -> Option<VertexSet> {
    let mut found = None;
    for size in 0..=GEM_MAX_X.min(g.n()) {
        subsets_of_size(g.vertices(), size, &mut |x| {
            if certificate_for(g, x).is_some() {
                found = Some(x);
                return false;
            }
            true
        });
        if found.is_some() {
            break;
        }
    }
    found
}

/// Re-checks `|X| <= 6`, that the listed components are exactly those of
/// `G - X`, and that each tag holds.
pub fn verify_gem(g: &Graph, cert: &GemCertificate) -> bool {
    if cert.x.len() > GEM_MAX_X || !cert.x.is_subset(g.vertices()) {
        return false;
    }
    let mut actual = g.components_within(g.vertices() - cert.x);
    let mut listed: Vec<VertexSet> = cert.components.iter().map(|c| c.vertices).collect();
    actual.sort_by_key(|s| s.bits());
    listed.sort_by_key(|s| s.bits());
    actual == listed && cert.components.iter().all(|c| tag_holds(g, c.vertices, c.tag))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4hat_examples() {
        assert_eq!(decompose_k4hat(&Graph::cycle(5).unwrap()), Ok(K4HatCertificate::K4Free));
        let sub = Graph::complete(4).subdivide_edge(0, 1).unwrap();
        assert!(matches!(
            decompose_k4hat(&sub),
            Ok(K4HatCertificate::SubdivisionOf { base: SubdivisionBase::K4, .. })
        ));
        let w5 = Graph::full_wheel(5).unwrap();
        assert_eq!(
            decompose_k4hat(&w5),
            Ok(K4HatCertificate::CycleMultipartite {
                cycle: vec![0, 1, 2, 3, 4],
                m: VertexSet::singleton(5),
                parts: vec![VertexSet::singleton(5)],
            })
        );
    }

    #[test]
    fn k4hat_verifier() {
        let w5 = Graph::full_wheel(5).unwrap();
        let hub = VertexSet::singleton(5);
        let good = K4HatCertificate::CycleMultipartite { cycle: vec![0, 1, 2, 3, 4], m: hub, parts: vec![hub] };
        assert!(verify_k4hat(&w5, &good));
        assert!(verify_k4hat(&Graph::cycle(5).unwrap(), &K4HatCertificate::K4Free));
        let k4 = Graph::complete(4);
        let m = VertexSet::singleton(3);
        assert!(verify_k4hat(&k4, &K4HatCertificate::CycleMultipartite { cycle: vec![0, 1, 2], m, parts: vec![m] }));
        assert!(!verify_k4hat(&k4, &K4HatCertificate::K4Free));
        let bad = K4HatCertificate::CycleMultipartite { cycle: vec![0, 1, 2, 3], m: hub, parts: vec![hub] };
        assert!(!verify_k4hat(&w5, &bad));
    }

    #[test]
    fn k4hat_preconditions() {
        let path = Graph::path(4);
        assert_eq!(decompose_k4hat(&path), Err(DecomposeError::NotBiconnected { cut_vertex: Some(1) }));
        assert!(matches!(decompose_k4hat(&Graph::k4hat()), Err(DecomposeError::PatternFound { .. })));
    }

    #[test]
    fn gem_examples() {
        let k4 = Graph::complete(4);
        let cert = decompose_gem(&k4).unwrap();
        assert!(cert.x.is_empty());
        assert_eq!(cert.components, vec![GemComponent { vertices: k4.vertices(), tag: BasicTag::Cograph }]);
        let c6 = Graph::cycle(6).unwrap();
        let cert = decompose_gem(&c6).unwrap();
        assert_eq!(cert.x.len(), 1);
        assert!(verify_gem(&c6, &cert));
        let prism = Graph::prism();
        let cert = decompose_gem(&prism).unwrap();
        assert!(cert.x.len() <= GEM_MAX_X && verify_gem(&prism, &cert));
        assert!(matches!(decompose_gem(&Graph::gem()), Err(DecomposeError::PatternFound { .. })));
    }

    #[test]
    fn gem_verifier() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(verify_gem(&c6, &certificate_for(&c6, VertexSet::singleton(0)).unwrap()));
        assert!(certificate_for(&c6, VertexSet::EMPTY).is_none());
        let lying = GemCertificate {
            x: VertexSet::EMPTY,
            components: vec![GemComponent { vertices: c6.vertices(), tag: BasicTag::Degree2Path }],
        };
        assert!(!verify_gem(&c6, &lying));
        let k4 = Graph::complete(4);
        assert!(verify_gem(&k4, &certificate_for(&k4, VertexSet::EMPTY).unwrap()));
        let too_big = GemCertificate { x: (0..7).collect(), components: vec![] };
        assert!(!verify_gem(&Graph::complete(7), &too_big));
    }

    #[test]
    fn p4_skeleton() {
        assert_eq!(find_p4_skeleton(&Graph::complete(5)), Ok(None));
        assert_eq!(find_p4_skeleton(&Graph::cycle(5).unwrap()), Err(DecomposeError::NotTriconnected));
        let g = Graph::prism();
        let p = find_p4_skeleton(&g).unwrap().unwrap();
        let s: VertexSet = p.iter().collect();
        for c in g.components_within(g.vertices() - s) {
            assert!(is_cograph(&g.induced_subgraph(c)));
        }
    }
}
