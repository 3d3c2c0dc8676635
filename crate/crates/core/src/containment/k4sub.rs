//! K4-subdivisions as subgraphs, found by routing six internally disjoint
//! paths between four branch vertices.

use crate::graph::{subsets_of_size, Graph, VertexSet};

/// A subgraph of the host that is a subdivision of K4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K4Subdivision {
    /// Branch vertices in increasing order.
    pub branch: [usize; 4],
    /// Paths between branch pairs `(0,1) (0,2) (0,3) (1,2) (1,3) (2,3)`,
    /// each listed from the first branch vertex to the second.
    pub paths: Vec<Vec<usize>>,
}

impl K4Subdivision {
    pub fn vertices(&self) -> VertexSet {
        self.paths.iter().flatten().collect()
    }
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn contains_k4_subdivision(g: &Graph) -> bool {
    find_k4_subdivision_in(g, g.vertices()).is_some()
}

pub fn find_k4_subdivision(g: &Graph) -> Option<K4Subdivision> {
    find_k4_subdivision_in(g, g.vertices())
}

/// Searches for a K4-subdivision inside `G[within]`. Branch vertices are
/// tried as 4-subsets in lexicographic order.
pub fn find_k4_subdivision_in(g: &Graph, within: VertexSet) -> Option<K4Subdivision> {
    let cands: VertexSet = within
        .iter()
        .filter(|&v| (g.neighbors(v) & within).len() >= 3)
        .collect();
    let mut found = None;
    subsets_of_size(cands, 4, &mut |b| {
        let branch: Vec<usize> = b.to_vec();
        let branch = [branch[0], branch[1], branch[2], branch[3]];
        let mut paths = Vec::with_capacity(6);
        if route(g, &branch, 0, within - b, &mut paths) {
            found = Some(K4Subdivision { branch, paths });
            false
        } else {
            true
        }
    });
    found
}

/// Vertex whose removal still leaves a K4-subdivision (least such vertex).
pub fn has_proper_k4_subdivision(g: &Graph) -> Option<usize> {
    let all = g.vertices();
    all.iter().find(|&v| find_k4_subdivision_in(g, all.without(v)).is_some())
}

fn connectable(g: &Graph, a: usize, b: usize, free: VertexSet) -> bool {
    if g.has_edge(a, b) {
        return true;
    }
    let start = g.neighbors(a) & free;
    match start.first() {
        None => false,
        Some(_) => {
            let mut seen = start;
            let mut frontier = start;
            while !frontier.is_empty() {
                if g.neighborhood_of_set(frontier).contains(b) {
                    return true;
                }
                let next = g.neighborhood_of_set(frontier) & free - seen;
                seen |= next;
                frontier = next;
            }
            false
        }
    }
}

fn route(g: &Graph, branch: &[usize; 4], i: usize, free: VertexSet, paths: &mut Vec<Vec<usize>>) -> bool {
    if i == PAIRS.len() {
        return true;
    }
    for &(x, y) in &PAIRS[i..] {
        if !connectable(g, branch[x], branch[y], free) {
            return false;
        }
    }
    let (a, b) = (branch[PAIRS[i].0], branch[PAIRS[i].1]);
    let mut path = vec![a];
    extend(g, branch, i, b, free, VertexSet::singleton(a), &mut path, paths)
}

/// Extends `path` (ending at its last vertex) towards `b` along chordless
/// paths; a shortest detour never needs a chord.
#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    branch: &[usize; 4],
    i: usize,
    b: usize,
    free: VertexSet,
    on_path: VertexSet,
    path: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let cur = *path.last().unwrap();
    let before = on_path.without(cur);
    if g.has_edge(cur, b) {
        if g.neighbors(b).intersects(before) {
            return false;
        }
        path.push(b);
        paths.push(path.clone());
        let internal: VertexSet = path[1..path.len() - 1].iter().collect();
        if route(g, branch, i + 1, free - internal, paths) {
            return true;
        }
        paths.pop();
        path.pop();
        return false;
    }
    for next in g.neighbors(cur) & free - on_path {
        if g.neighbors(next).intersects(before) {
            continue;
        }
        path.push(next);
        if extend(g, branch, i, b, free, on_path.with(next), path, paths) {
            return true;
        }
        path.pop();
    }
    false
}
