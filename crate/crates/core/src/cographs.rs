//! Cographs (induced-P4-free graphs), their cotrees, and the "basic"
//! predicate: a connected piece that is a cograph or an induced path whose
//! internal vertices have degree 2 in the ambient graph.

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
use std::fmt;
use thiserror::Error;

/// Cotree of a cograph. Internal nodes have at least two children and never
/// share their parent's tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cotree {
    Leaf(usize),
    /// Disjoint union of the children (tag 0).
    Union(Vec<Cotree>),
    /// Join of the children (tag 1).
    Join(Vec<Cotree>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CotreeError {
    #[error("internal node with fewer than two children")]
    TooFewChildren,
    #[error("internal node has the same tag as its parent")]
    RepeatedTag,
    #[error("leaf {0} appears twice")]
    DuplicateLeaf(usize),
    #[error("leaf ids must be 0..{n}; {missing} is missing")]
    MissingLeaf { n: usize, missing: usize },
    #[error("too many leaves ({0})")]
    TooManyLeaves(usize),
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn min_leaf(&self) -> usize {
        match self {
            Cotree::Leaf(v) => *v,
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().map(Cotree::min_leaf).min().unwrap_or(usize::MAX),
        }
    }

    /// Id-free encoding; two canonical cotrees have equal shapes iff their
    /// cographs are isomorphic.
    pub fn shape(&self) -> String {
        match self {
            Cotree::Leaf(_) => "v".to_string(),
            Cotree::Union(ch) | Cotree::Join(ch) => {
                let mut parts: Vec<String> = ch.iter().map(Cotree::shape).collect();
                parts.sort();
                let tag = if matches!(self, Cotree::Union(_)) { 'U' } else { 'J' };
                format!("{tag}({})", parts.join(","))
            }
        }
    }

    fn check(&self, parent_union: Option<bool>) -> Result<(), CotreeError> {
        let (ch, union) = match self {
            Cotree::Leaf(_) => return Ok(()),
            Cotree::Union(ch) => (ch, true),
            Cotree::Join(ch) => (ch, false),
        };
        if ch.len() < 2 {
            return Err(CotreeError::TooFewChildren);
        }
        if parent_union == Some(union) {
            return Err(CotreeError::RepeatedTag);
        }
        ch.iter().try_for_each(|c| c.check(Some(union)))
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Leaf(v) => write!(f, "{v}"),
            Cotree::Union(ch) | Cotree::Join(ch) => {
                f.write_str(if matches!(self, Cotree::Union(_)) { "U(" } else { "J(" })?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn sort_children(mut ch: Vec<Cotree>) -> Vec<Cotree> {
    ch.sort_by_cached_key(|c| (c.shape(), c.min_leaf()));
    ch
}

fn build(g: &Graph, co: &Graph, set: VertexSet) -> Option<Cotree> {
    if set.len() == 1 {
        return Some(Cotree::Leaf(set.first().unwrap()));
    }
    let comps = g.components_within(set);
    if comps.len() > 1 {
        let ch = comps.into_iter().map(|c| build(g, co, c)).collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Union(sort_children(ch)));
    }
    let cocomps = co.components_within(set);
    if cocomps.len() > 1 {
        let ch = cocomps.into_iter().map(|c| build(g, co, c)).collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Join(sort_children(ch)));
    }
    None
}

/// Canonical cotree: a union node when the graph is disconnected, a join
/// node when its complement is, recursing on the (co-)components. Absent
/// when `G` is not a cograph or has no vertices.
pub fn cotree(g: &Graph) -> Option<Cotree> {
    if g.n() == 0 {
        return None;
    }
    build(g, &g.complement(), g.vertices())
}

/// Recognition by complement decomposition. The empty graph is a cograph.
pub fn is_cograph(g: &Graph) -> bool {
    g.n() == 0 || cotree(g).is_some()
}

/// Brute-force search for an induced `P4`, returned in path order.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for b in 0..n {
        for c in g.neighbors(b) {
            for a in g.neighbors(b) - g.neighbors(c) {
                if a == c {
                    continue;
                }
                for d in g.neighbors(c) - g.neighbors(b) - g.neighbors(a) {
                    if d != b && d != a {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// The cograph a cotree represents; leaf `v` becomes vertex `v`.
pub fn cotree_to_graph(t: &Cotree) -> Result<Graph, CotreeError> {
    t.check(None)?;
    let leaves = t.leaves();
    let n = leaves.len();
    if n > MAX_VERTICES {
        return Err(CotreeError::TooManyLeaves(n));
    }
    let mut seen = vec![false; n];
    for &v in &leaves {
        if v >= n {
            let missing = seen.iter().position(|s| !s).unwrap_or(0);
            return Err(CotreeError::MissingLeaf { n, missing });
        }
        if seen[v] {
            return Err(CotreeError::DuplicateLeaf(v));
        }
        seen[v] = true;
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    fn fill(t: &Cotree, adj: &mut [VertexSet]) -> VertexSet {
        match t {
            Cotree::Leaf(v) => VertexSet::singleton(*v),
            Cotree::Union(ch) => ch.iter().fold(VertexSet::EMPTY, |acc, c| acc | fill(c, adj)),
            Cotree::Join(ch) => {
                let sets: Vec<VertexSet> = ch.iter().map(|c| fill(c, adj)).collect();
                let all = sets.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
                for &s in &sets {
                    for v in s {
                        adj[v] |= all - s;
                    }
                }
                all
            }
        }
    }
    fill(t, &mut adj);
    Ok(Graph::from_adjacency(adj).expect("join adjacency is symmetric and loopless"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicTag {
    Cograph,
    /// Induced path whose internal vertices have degree 2 in the ambient
    /// graph.
    Degree2Path,
}

/// Whether `G[comp]` is an induced path whose internal vertices have
/// degree 2 in `G`.
pub fn is_degree2_path_in(g: &Graph, comp: VertexSet) -> bool {
    if comp.is_empty() || !g.is_connected_set(comp) {
        return false;
    }
    let inner: Vec<usize> = comp.iter().map(|v| (g.neighbors(v) & comp).len()).collect();
    let edges: usize = inner.iter().sum::<usize>() / 2;
    edges + 1 == comp.len()
        && comp.iter().zip(&inner).all(|(v, &d)| d <= 2 && (d < 2 || g.degree(v) == 2))
}

/// Whether `tag` describes `G[comp]`.
pub fn tag_holds(g: &Graph, comp: VertexSet, tag: BasicTag) -> bool {
    match tag {
        BasicTag::Cograph => is_cograph(&g.induced_subgraph(comp)),
        BasicTag::Degree2Path => is_degree2_path_in(g, comp),
    }
}

/// Classifies a connected vertex set as basic in `G`. Cograph wins when
/// both tags apply.
pub fn is_basic_in(g: &Graph, comp: VertexSet) -> Result<Option<BasicTag>, GraphError> {
    if let Some(v) = comp.iter().find(|&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange { v, n: g.n() });
    }
    if comp.is_empty() || !g.is_connected_set(comp) {
        return Err(GraphError::InvalidParameter(format!("{comp:?} is not a connected vertex set")));
    }
    Ok([BasicTag::Cograph, BasicTag::Degree2Path].into_iter().find(|&t| tag_holds(g, comp, t)))
}
