//! Simple undirected graphs over dense vertex ids, with the elementary
//! operations used by every search in the crate.

mod canon;
mod enumerate;
mod named;
mod vertex_set;

pub use canon::{canonical_form_colored, canonical_labeling};
pub use enumerate::{all_graphs, all_graphs_up_to, for_each_labeled_graph};
pub use vertex_set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("{{{u}, {v}}} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("{{{u}, {v}}} is an edge")]
    IsAnEdge { u: usize, v: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// A simple loopless undirected graph on vertices `0..n`.
///
/// Operations never mutate; they return a new graph whose surviving vertices
/// keep their relative order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood bitsets. The relation must be
    /// symmetric and irreflexive.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (u, &nu) in adj.iter().enumerate() {
            if nu.contains(u) {
                return Err(GraphError::Loop(u));
            }
            if !nu.is_subset(all) {
                let v = (nu - all).first().unwrap_or(n);
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            for v in nu {
                if !adj[v].contains(u) {
                    return Err(GraphError::InvalidParameter(format!(
                        "adjacency not symmetric at {{{u}, {v}}}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from a symmetric predicate on vertex pairs.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        Ok(g)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u] - VertexSet::full(u + 1) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Union of the neighbourhoods of `s`, minus `s` itself.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s {
            out |= self.adj[v];
        }
        out - s
    }

    /// The subgraph induced by `keep`, renumbered in increasing order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Graph {
        let keep = keep & self.vertices();
        let ids: Vec<usize> = keep.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| pos[w]).collect())
            .collect();
        Graph { n: ids.len(), adj }
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check(v)?;
        Ok(self.induced_subgraph(self.vertices().without(v)))
    }

    pub fn delete_vertices(&self, s: VertexSet) -> Graph {
        self.induced_subgraph(self.vertices() - s)
    }

    /// Merges `u` and `v` into one vertex adjacent to `N(u) ∪ N(v) ∖ {u, v}`.
    /// The merged vertex takes the position of `min(u, v)`; the other is
    /// removed and later ids shift down.
    fn merge(&self, u: usize, v: usize) -> Graph {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let mut adj = self.adj.clone();
        let merged = (adj[a] | adj[b]).without(a).without(b);
        for w in adj[b] {
            adj[w].remove(b);
        }
        adj[a] = merged;
        for w in merged {
            adj[w].insert(a);
        }
        adj[b] = VertexSet::EMPTY;
        Graph { n: self.n, adj }.delete_vertex(b).expect("b in range")
    }

    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        Ok(self.merge(u, v))
    }

    /// Identifies two distinct non-adjacent vertices.
    pub fn identify(&self, u: usize, v: usize) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::InvalidParameter("cannot identify a vertex with itself".into()));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::IsAnEdge { u, v });
        }
        Ok(self.merge(u, v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| (all - self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Adds a vertex `n` adjacent to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        if !nbrs.is_subset(self.vertices()) {
            let v = (nbrs - self.vertices()).first().unwrap_or(0);
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let x = self.n;
        let mut adj = self.adj.clone();
        for w in nbrs {
            adj[w].insert(x);
        }
        adj.push(nbrs);
        Ok(Graph { n: x + 1, adj })
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Replaces edge `uv` by a path `u - w - v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let g = self.remove_edge(u, v)?;
        g.add_vertex(VertexSet::singleton(u).with(v))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        for s in &other.adj {
            adj.push(VertexSet::from_bits(s.bits() << self.n));
        }
        Ok(Graph { n, adj })
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertices();
        let right = g.vertices() - left;
        for v in left {
            g.adj[v] |= right;
        }
        for v in right {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter("permutation length mismatch".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            self.check(p)?;
            if seen.contains(p) {
                return Err(GraphError::InvalidParameter("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start) & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next = next & within;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Vertex-connectivity at least `k`. `K_m` counts as `(m-1)`-connected;
    /// any other graph needs more than `k` vertices and no separator of size
    /// below `k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.is_complete() {
            return self.n >= k + 1 || (self.n == k && k == 1);
        }
        if self.n <= k {
            return false;
        }
        let all = self.vertices();
        let mut ok = true;
        subsets_of_size(all, k - 1, &mut |s| {
            if !self.is_connected_set(all - s) {
                ok = false;
            }
            ok
        });
        ok
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Cut vertices of the whole graph.
    pub fn cut_vertices(&self) -> VertexSet {
        let all = self.vertices();
        let base = self.components().len();
        (0..self.n)
            .filter(|&v| self.components_within(all.without(v)).len() > base)
            .collect()
    }

    /// Whether `G[s]` is a clique.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    /// Whether `G[s]` has no edges.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn canonical_form(&self) -> Vec<u8> {
        canonical_form_colored(self, None)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.edge_count() == other.edge_count()
            && self.degree_sequence() == other.degree_sequence()
            && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Calls `f` on every `k`-subset of `s` in lexicographic order of the
/// sorted member lists. Stops early when `f` returns false.
pub fn subsets_of_size(s: VertexSet, k: usize, f: &mut dyn FnMut(VertexSet) -> bool) {
    let items = s.to_vec();
    if k > items.len() {
        return;
    }
    fn rec(
        items: &[usize],
        start: usize,
        k: usize,
        acc: VertexSet,
        f: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        if k == 0 {
            return f(acc);
        }
        for i in start..=items.len() - k {
            if !rec(items, i + 1, k - 1, acc.with(items[i]), f) {
                return false;
            }
        }
        true
    }
    rec(&items, 0, k, VertexSet::EMPTY, f);
}

/// All subsets of `s`, in increasing order of their bit patterns.
pub fn all_subsets(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    let items = s.to_vec();
    let count: u64 = 1u64 << items.len();
    (0..count).map(move |mask| {
        let mut out = VertexSet::EMPTY;
        for (i, &v) in items.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out.insert(v);
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn delete_vertex_examples() {
        for v in 0..4 {
            assert!(Graph::complete(4).delete_vertex(v).unwrap().is_isomorphic(&Graph::complete(3)));
        }
        let p4 = Graph::gem().delete_vertex(0).unwrap();
        assert_eq!(p4, Graph::path(4));
        for v in 0..5 {
            assert!(Graph::cycle(5).unwrap().delete_vertex(v).unwrap().is_isomorphic(&Graph::path(4)));
        }
        assert_eq!(
            Graph::path(3).delete_vertex(3),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
    }

    #[test]
    fn contract_edge_examples() {
        let c4 = Graph::cycle(4).unwrap();
        for (u, v) in c4.edges() {
            assert_eq!(c4.contract_edge(u, v).unwrap(), Graph::complete(3));
        }
        assert!(Graph::path(4).contract_edge(1, 2).unwrap().is_isomorphic(&Graph::path(3)));
        // gem: 0 dominates the path 1-2-3-4; 1-2 is an end edge of that path
        let d = Graph::gem().contract_edge(1, 2).unwrap();
        assert!(d.is_isomorphic(&Graph::diamond()));
        assert_eq!(c4.contract_edge(0, 2), Err(GraphError::NotAnEdge { u: 0, v: 2 }));
    }

    #[test]
    fn merged_vertex_takes_lower_position() {
        let p = Graph::path(4);
        let q = p.contract_edge(2, 1).unwrap();
        assert_eq!(q.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn complement_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.complement().is_isomorphic(&c5));
        let p4k1 = Graph::path(4).disjoint_union(&Graph::complete(1)).unwrap();
        assert!(Graph::gem().complement().is_isomorphic(&p4k1));
        let p3_2k1 = Graph::path(3).disjoint_union(&Graph::empty(2).unwrap()).unwrap();
        assert!(Graph::k4hat().complement().is_isomorphic(&p3_2k1));
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::empty(2).unwrap().components().len(), 2);
        let h = g(5, &[(3, 1)]);
        let sizes: Vec<usize> = h.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 2, 1, 1]);
        assert_eq!(h.components()[1].to_vec(), vec![1, 3]);
        assert_eq!(Graph::gem().components().len(), 1);
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::cycle(4).unwrap().is_k_connected(2));
        assert!(!Graph::diamond().is_k_connected(3));
        assert!(Graph::prism().is_k_connected(3));
        assert!(Graph::complete(4).is_k_connected(3));
        assert!(!Graph::complete(3).is_k_connected(3));
        assert!(Graph::complete(1).is_k_connected(1));
        assert!(!Graph::path(3).is_k_connected(2));
        assert!(!Graph::empty(2).unwrap().is_k_connected(1));
        assert!(Graph::complete(2).is_k_connected(1));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(Graph::complete(3).is_isomorphic(&Graph::cycle(3).unwrap()));
        assert!(!Graph::gem().is_isomorphic(&Graph::k4hat()));
        assert!(Graph::cycle(6).unwrap().complement().is_isomorphic(&Graph::prism()));
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        let adj = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(adj).is_err());
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
        assert!(Graph::empty(129).is_err());
    }

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        subsets_of_size(VertexSet::full(4), 2, &mut |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
        assert_eq!(all_subsets(VertexSet::full(3)).count(), 8);
    }
}
