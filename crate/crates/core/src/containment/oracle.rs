//! Brute-force containment test: breadth-first search over every graph
//! reachable from the host by the operations a relation allows.

use super::{check_inputs, ContainmentError, Relation, Result};
use crate::graph::{canonical_form_colored, Graph};
use std::collections::HashSet;

/// Default limit on the host size accepted by [`oracle_leq`].
pub const ORACLE_BOUND: usize = 8;

pub fn oracle_leq(h: &Graph, g: &Graph, rel: Relation) -> Result<bool> {
    oracle_leq_bounded(h, g, rel, ORACLE_BOUND)
}

/// A graph together with an optional root edge.
#[derive(Clone)]
struct State {
    g: Graph,
    root: Option<(usize, usize)>,
}

impl State {
    fn key(&self) -> Vec<u8> {
        match self.root {
            None => self.g.canonical_form(),
            Some((x, y)) => {
                let colors: Vec<u32> =
                    (0..self.g.n()).map(|v| u32::from(v == x || v == y)).collect();
                canonical_form_colored(&self.g, Some(&colors))
            }
        }
    }

    fn is_root(&self, v: usize) -> bool {
        matches!(self.root, Some((x, y)) if v == x || v == y)
    }

    fn delete(&self, v: usize) -> State {
        let shift = |r: usize| if r > v { r - 1 } else { r };
        State {
            g: self.g.delete_vertex(v).unwrap(),
            root: self.root.map(|(x, y)| (shift(x), shift(y))),
        }
    }

    fn contract(&self, u: usize, v: usize) -> State {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let shift = |r: usize| {
            let r = if r == b { a } else { r };
            if r > b {
                r - 1
            } else {
                r
            }
        };
        State {
            g: self.g.contract_edge(a, b).unwrap(),
            root: self.root.map(|(x, y)| (shift(x), shift(y))),
        }
    }
}

/// Decides `h ≤ g` for `rel` by exploring all graphs obtainable from `g` by
/// vertex deletions and/or edge contractions, up to isomorphism. Refuses
/// hosts with more than `bound` vertices.
pub fn oracle_leq_bounded(h: &Graph, g: &Graph, rel: Relation, bound: usize) -> Result<bool> {
    check_inputs(h, g, rel)?;
    if g.n() > bound {
        return Err(ContainmentError::OracleBound { n: g.n(), bound });
    }
    let (start, target) = match rel {
        Relation::RootedInducedMinor { pattern_root, host_root } => (
            State { g: g.clone(), root: Some(host_root) },
            State { g: h.clone(), root: Some(pattern_root) }.key(),
        ),
        _ => (State { g: g.clone(), root: None }, h.canonical_form()),
    };
    let (may_delete, may_contract) = match rel {
        Relation::InducedMinor | Relation::RootedInducedMinor { .. } => (true, true),
        Relation::InducedSubgraph => (true, false),
        Relation::Contraction => (false, true),
    };
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut layer = vec![start];
    seen.insert(layer[0].key());
    while let Some(first) = layer.first() {
        let n = first.g.n();
        if n == h.n() {
            return Ok(layer.iter().any(|s| s.key() == target));
        }
        if n < h.n() {
            return Ok(false);
        }
        let mut next = Vec::new();
        for s in &layer {
            let mut push = |t: State| {
                if seen.insert(t.key()) {
                    next.push(t);
                }
            };
            if may_delete {
                for v in 0..n {
                    if !s.is_root(v) {
                        push(s.delete(v));
                    }
                }
            }
            if may_contract {
                for (u, v) in s.g.edges() {
                    if !(s.is_root(u) && s.is_root(v)) {
                        push(s.contract(u, v));
                    }
                }
            }
        }
        layer = next;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(oracle_leq(&Graph::complete(3), &c5, Relation::InducedMinor).unwrap());
        assert!(!oracle_leq(&Graph::path(4), &Graph::complete(4), Relation::InducedSubgraph).unwrap());
        assert!(oracle_leq(&Graph::complete(4), &Graph::k4hat(), Relation::InducedMinor).unwrap());
        assert!(!oracle_leq(&Graph::gem(), &Graph::k4hat(), Relation::InducedMinor).unwrap());
    }

    #[test]
    fn oracle_refuses_large_hosts() {
        let g = Graph::cycle(9).unwrap();
        assert_eq!(
            oracle_leq(&Graph::complete(3), &g, Relation::InducedMinor),
            Err(ContainmentError::OracleBound { n: 9, bound: 8 })
        );
    }

    #[test]
    fn rooted_oracle() {
        let (d, r) = Graph::rooted_diamond();
        let rel = Relation::RootedInducedMinor { pattern_root: r, host_root: r };
        assert!(oracle_leq(&d, &d, rel).unwrap());
        let rel2 = Relation::RootedInducedMinor { pattern_root: r, host_root: (0, 2) };
        assert!(!oracle_leq(&d, &d, rel2).unwrap());
    }
}
