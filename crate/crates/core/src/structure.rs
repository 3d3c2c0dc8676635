//! Structural probes: two-vertex cuts, subdivision recognition, minimum
//! 3-wheels, rooted diamonds and dominating vertices.

use crate::containment::{find_model, Relation, Result};
use crate::graph::{canonical_labeling, subsets_of_size, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutKind {
    /// The two cut vertices are adjacent.
    K2Cut,
    /// The two cut vertices are not adjacent.
    K2BarCut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCut {
    pub u: usize,
    pub v: usize,
    pub kind: CutKind,
    /// Components of `G - {u, v}`, ordered by least vertex.
    pub side_components: Vec<VertexSet>,
}

impl TwoCut {
    pub fn vertices(&self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }
}

fn cut_at(g: &Graph, u: usize, v: usize) -> Option<TwoCut> {
    let rest = g.vertices().without(u).without(v);
    let comps = g.components_within(rest);
    if comps.len() < 2 {
        return None;
    }
    let kind = if g.has_edge(u, v) { CutKind::K2Cut } else { CutKind::K2BarCut };
    Some(TwoCut { u, v, kind, side_components: comps })
}

/// Every pair `u < v` whose removal disconnects `G`, in lexicographic order.
pub fn all_two_cuts(g: &Graph) -> Vec<TwoCut> {
    let mut cuts = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            cuts.extend(cut_at(g, u, v));
        }
    }
    cuts
}

/// The lexicographically least disconnecting pair. Meant for 2-connected
/// graphs; absent when `G` is 3-connected or complete.
pub fn find_two_cut(g: &Graph) -> Option<TwoCut> {
    (0..g.n()).find_map(|u| (u + 1..g.n()).find_map(|v| cut_at(g, u, v)))
}

/// Smooths the degree-2 vertices outside `branch`. Returns the edges of the
/// resulting multigraph as index pairs into `branch`, or `None` when a loop,
/// a parallel edge, or a branch-free cycle appears.
fn smooth(g: &Graph, branch: &[usize]) -> Option<Vec<(usize, usize)>> {
    let bset: VertexSet = branch.iter().collect();
    let index = |v: usize| branch.iter().position(|&b| b == v).unwrap();
    let mut seen = bset;
    let mut edges = Vec::new();
    for &b in branch {
        for first in g.neighbors(b) {
            let (mut prev, mut cur) = (b, first);
            while !bset.contains(cur) {
                seen.insert(cur);
                let next = g.neighbors(cur).without(prev);
                if next.len() != 1 {
                    return None;
                }
                prev = cur;
                cur = next.first().unwrap();
            }
            if cur == b {
                return None;
            }
            if b < cur {
                edges.push((index(b), index(cur)));
            }
        }
    }
    if seen != g.vertices() {
        return None;
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != edges.len() {
        return None;
    }
    Some(edges)
}

/// A branch map `base vertex -> host vertex` exhibiting `G` as a
/// subdivision of `base`, if one exists.
pub fn subdivision_branch_map(g: &Graph, base: &Graph) -> Option<Vec<usize>> {
    let forced: VertexSet = g.vertices().iter().filter(|&v| g.degree(v) != 2).collect();
    let deg2: VertexSet = g.vertices() - forced;
    let base_deg2 = (0..base.n()).filter(|&b| base.degree(b) == 2).count();
    if forced.len() + base_deg2 != base.n() || base_deg2 > deg2.len() {
        return None;
    }
    if g.n() - base.n() != g.edge_count().checked_sub(base.edge_count())? {
        return None;
    }
    let base_perm = canonical_labeling(base, None);
    let base_form = base.canonical_form();
    let mut found = None;
    subsets_of_size(deg2, base_deg2, &mut |extra| {
        let branch = (forced | extra).to_vec();
        let Some(edges) = smooth(g, &branch) else {
            return true;
        };
        let Ok(s) = Graph::from_edges(branch.len(), &edges) else {
            return true;
        };
        if s.canonical_form() != base_form {
            return true;
        }
        let s_perm = canonical_labeling(&s, None);
        let mut by_pos = vec![0; s.n()];
        for (v, &p) in s_perm.iter().enumerate() {
            by_pos[p] = v;
        }
        found = Some(base_perm.iter().map(|&p| branch[by_pos[p]]).collect());
        false
    });
    found
}

pub fn is_subdivision_of(g: &Graph, base: &Graph) -> bool {
    subdivision_branch_map(g, base).is_some()
}

/// Checks a branch map directly: the map is injective, every other vertex
/// has degree 2, and the branch paths realise exactly the edges of `base`.
pub fn verify_subdivision_map(g: &Graph, base: &Graph, map: &[usize]) -> bool {
    if map.len() != base.n() || map.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let bset: VertexSet = map.iter().collect();
    if bset.len() != map.len() {
        return false;
    }
    match smooth(g, map) {
        Some(edges) => match Graph::from_edges(map.len(), &edges) {
            Ok(s) => s == *base,
            Err(_) => false,
        },
        None => false,
    }
}

/// A cycle plus a centre adjacent to at least three of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelWitness {
    pub center: usize,
    /// Starts at the least cycle vertex; the second entry is smaller than
    /// the last.
    pub cycle: Vec<usize>,
    /// Cycle vertices adjacent to the centre, in cycle order.
    pub spokes: Vec<usize>,
}

impl WheelWitness {
    pub fn vertices(&self) -> VertexSet {
        self.cycle.iter().collect::<VertexSet>().with(self.center)
    }

    pub fn cycle_set(&self) -> VertexSet {
        self.cycle.iter().collect()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        let c = self.cycle_set();
        k >= 3
            && c.len() == k
            && !c.contains(self.center)
            && self.center < g.n()
            && self.cycle.iter().all(|&v| v < g.n())
            && (0..k).all(|i| g.has_edge(self.cycle[i], self.cycle[(i + 1) % k]))
            && self.spokes.len() >= 3
            && self.spokes.iter().all(|&s| c.contains(s) && g.has_edge(self.center, s))
    }
}

struct CycleSearch<'a> {
    g: &'a Graph,
    len: usize,
    hub_nbrs: VertexSet,
    allowed: VertexSet,
    path: Vec<usize>,
    /// When set, every cycle found is recorded and the search keeps going.
    found: Option<Vec<Vec<usize>>>,
}

impl CycleSearch<'_> {
    fn extend(&mut self, on_path: VertexSet, spokes: usize) -> bool {
        let cur = *self.path.last().unwrap();
        let start = self.path[0];
        if self.path.len() == self.len {
            let hit = spokes >= 3 && self.g.has_edge(cur, start) && self.path[1] < cur;
            return match &mut self.found {
                Some(all) if hit => {
                    all.push(self.path.clone());
                    false
                }
                _ => hit,
            };
        }
        let left = self.len - self.path.len();
        if spokes + left < 3 {
            return false;
        }
        for next in self.g.neighbors(cur) & self.allowed - on_path {
            if next < start {
                continue;
            }
            self.path.push(next);
            let s = spokes + usize::from(self.hub_nbrs.contains(next));
            if self.extend(on_path.with(next), s) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// A 3-wheel subgraph with the fewest vertices. Ties go to the least
/// centre, then the lexicographically least normalised cycle.
pub fn find_min_3wheel(g: &Graph) -> Option<WheelWitness> {
    let n = g.n();
    for len in 3..n {
        for r in (0..n).filter(|&r| g.degree(r) >= 3) {
            let allowed = g.vertices().without(r);
            let hub_nbrs = g.neighbors(r);
            for s in allowed {
                let mut search = CycleSearch { g, len, hub_nbrs, allowed, path: vec![s], found: None };
                if search.extend(VertexSet::singleton(s), usize::from(hub_nbrs.contains(s))) {
                    let cycle = search.path;
                    let spokes = cycle.iter().copied().filter(|&v| hub_nbrs.contains(v)).collect();
                    return Some(WheelWitness { center: r, cycle, spokes });
                }
            }
        }
    }
    None
}

/// Every 3-wheel with the fewest vertices, in the tie-break order of
/// [`find_min_3wheel`].
pub fn all_min_3wheels(g: &Graph) -> Vec<WheelWitness> {
    let Some(first) = find_min_3wheel(g) else {
        return Vec::new();
    };
    let len = first.cycle.len();
    let mut out = Vec::new();
    for r in (0..g.n()).filter(|&r| g.degree(r) >= 3) {
        let allowed = g.vertices().without(r);
        let hub_nbrs = g.neighbors(r);
        for s in allowed {
            let mut search = CycleSearch { g, len, hub_nbrs, allowed, path: vec![s], found: Some(Vec::new()) };
            search.extend(VertexSet::singleton(s), usize::from(hub_nbrs.contains(s)));
            for cycle in search.found.unwrap_or_default() {
                let spokes = cycle.iter().copied().filter(|&v| hub_nbrs.contains(v)).collect();
                out.push(WheelWitness { center: r, cycle, spokes });
            }
        }
    }
    out
}

/// Rooted-diamond test: the rooted diamond is a 4-cycle rooted at an edge
/// plus a chord meeting exactly one root endpoint.
pub fn contains_rooted_diamond(g: &Graph, root: (usize, usize)) -> Result<bool> {
    let (d, r) = Graph::rooted_diamond();
    let rel = Relation::RootedInducedMinor { pattern_root: r, host_root: root };
    Ok(find_model(&d, g, rel)?.is_some())
}

/// Vertices outside `sub` adjacent to every vertex of `sub`.
pub fn dominating_vertices(g: &Graph, sub: VertexSet) -> VertexSet {
    (g.vertices() - sub).iter().filter(|&v| sub.is_subset(g.neighbors(v))).collect()
}
