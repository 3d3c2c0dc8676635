//! Containment relations between graphs: induced minors, induced subgraphs,
//! contractions and rooted induced minors.
//!
//! [`find_model`] and [`search_model`] run an exact branch-and-bound search
//! for a model; [`verify_model`] re-checks a model from scratch and
//! [`oracle_leq`] answers the same question by brute force over operation
//! sequences.

mod k4sub;
mod oracle;
mod search;

pub use k4sub::{
    contains_k4_subdivision, find_k4_subdivision, find_k4_subdivision_in, has_proper_k4_subdivision,
    K4Subdivision,
};
pub use oracle::{oracle_leq, oracle_leq_bounded, ORACLE_BOUND};

use crate::graph::{Graph, GraphError, VertexSet};
use thiserror::Error;

/// Which containment relation to decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    InducedMinor,
    InducedSubgraph,
    Contraction,
    /// Induced minor where the root edge of the host must be split between
    /// the branch sets of the two endpoints of the pattern's root edge.
    RootedInducedMinor {
        pattern_root: (usize, usize),
        host_root: (usize, usize),
    },
}

/// Branch sets indexed by pattern vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContainmentModel {
    pub branch_sets: Vec<VertexSet>,
}

impl ContainmentModel {
    pub fn identity(n: usize) -> ContainmentModel {
        ContainmentModel { branch_sets: (0..n).map(VertexSet::singleton).collect() }
    }

    /// Host vertices used by some branch set.
    pub fn support(&self) -> VertexSet {
        self.branch_sets.iter().fold(VertexSet::EMPTY, |a, &b| a | b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ContainmentModel),
    Absent,
    /// The node budget ran out before the search finished.
    Unknown,
}

impl SearchOutcome {
    pub fn model(&self) -> Option<&ContainmentModel> {
        match self {
            SearchOutcome::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContainmentError {
    #[error("the pattern graph has no vertices")]
    EmptyPattern,
    #[error("the host graph has no vertices")]
    EmptyHost,
    #[error("root {{{0}, {1}}} of the pattern is not an edge")]
    PatternRootNotEdge(usize, usize),
    #[error("root {{{0}, {1}}} of the host is not an edge")]
    HostRootNotEdge(usize, usize),
    #[error("host has {n} vertices, the brute-force oracle is limited to {bound}")]
    OracleBound { n: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T, E = ContainmentError> = std::result::Result<T, E>;

fn check_inputs(h: &Graph, g: &Graph, rel: Relation) -> Result<()> {
    if h.n() == 0 {
        return Err(ContainmentError::EmptyPattern);
    }
    if g.n() == 0 {
        return Err(ContainmentError::EmptyHost);
    }
    if let Relation::RootedInducedMinor { pattern_root: (a, b), host_root: (x, y) } = rel {
        if a == b || !h.has_edge(a, b) {
            return Err(ContainmentError::PatternRootNotEdge(a, b));
        }
        if x == y || !g.has_edge(x, y) {
            return Err(ContainmentError::HostRootNotEdge(x, y));
        }
    }
    Ok(())
}

/// Exhaustive search for a model of `h` in `g`. Deterministic.
pub fn find_model(h: &Graph, g: &Graph, rel: Relation) -> Result<Option<ContainmentModel>> {
    match search_model(h, g, rel, None)? {
        SearchOutcome::Found(m) => Ok(Some(m)),
        SearchOutcome::Absent => Ok(None),
        SearchOutcome::Unknown => unreachable!("no budget given"),
    }
}

/// Like [`find_model`], but gives up with [`SearchOutcome::Unknown`] once
/// `budget` search nodes have been expanded.
pub fn search_model(
    h: &Graph,
    g: &Graph,
    rel: Relation,
    budget: Option<u64>,
) -> Result<SearchOutcome> {
    check_inputs(h, g, rel)?;
    if h == g {
        let id = ContainmentModel::identity(h.n());
        if verify_model(h, g, rel, &id) {
            return Ok(SearchOutcome::Found(id));
        }
    }
    let out = match rel {
        Relation::RootedInducedMinor { pattern_root: (a, b), host_root: (x, y) } => {
            let (mut out, spent) =
                search::run(h, g, search::Kind::InducedMinor, Some(((a, x), (b, y))), budget);
            if !out.is_found() {
                let rest = budget.map(|b| b.saturating_sub(spent));
                let (second, _) =
                    search::run(h, g, search::Kind::InducedMinor, Some(((a, y), (b, x))), rest);
                out = match (out, second) {
                    (_, f @ SearchOutcome::Found(_)) => f,
                    (SearchOutcome::Unknown, _) | (_, SearchOutcome::Unknown) => SearchOutcome::Unknown,
                    _ => SearchOutcome::Absent,
                };
            }
            out
        }
        Relation::InducedMinor => search::run(h, g, search::Kind::InducedMinor, None, budget).0,
        Relation::InducedSubgraph => search::run(h, g, search::Kind::InducedSubgraph, None, budget).0,
        Relation::Contraction => search::run(h, g, search::Kind::Contraction, None, budget).0,
    };
    Ok(match out {
        SearchOutcome::Found(m) => {
            debug_assert!(verify_model(h, g, rel, &m), "search produced an invalid model");
            SearchOutcome::Found(minimize(h, g, rel, m))
        }
        other => other,
    })
}

/// Shrinks branch sets vertex by vertex (largest ids first) while the model
/// stays valid. Only relations without a covering condition shrink.
fn minimize(h: &Graph, g: &Graph, rel: Relation, mut m: ContainmentModel) -> ContainmentModel {
    if matches!(rel, Relation::Contraction | Relation::InducedSubgraph) {
        return m;
    }
    loop {
        let mut changed = false;
        for p in 0..m.branch_sets.len() {
            let mut members = m.branch_sets[p].to_vec();
            members.reverse();
            for x in members {
                let old = m.branch_sets[p];
                if old.len() == 1 {
                    break;
                }
                m.branch_sets[p] = old.without(x);
                if verify_model(h, g, rel, &m) {
                    changed = true;
                } else {
                    m.branch_sets[p] = old;
                }
            }
        }
        if !changed {
            return m;
        }
    }
}

/// Checks every model condition of `rel` directly.
pub fn verify_model(h: &Graph, g: &Graph, rel: Relation, m: &ContainmentModel) -> bool {
    let sets = &m.branch_sets;
    if sets.len() != h.n() || h.n() == 0 {
        return false;
    }
    let all = g.vertices();
    let mut seen = VertexSet::EMPTY;
    for &s in sets {
        if s.is_empty() || !s.is_subset(all) || s.intersects(seen) || !g.is_connected_set(s) {
            return false;
        }
        seen |= s;
    }
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            let touching = g.neighborhood_of_set(sets[u]).intersects(sets[v]);
            if touching != h.has_edge(u, v) {
                return false;
            }
        }
    }
    match rel {
        Relation::InducedMinor => true,
        Relation::InducedSubgraph => sets.iter().all(|s| s.len() == 1),
        Relation::Contraction => seen == all,
        Relation::RootedInducedMinor { pattern_root: (a, b), host_root: (x, y) } => {
            if !h.has_edge(a, b) || !g.has_edge(x, y) {
                return false;
            }
            (sets[a].contains(x) && sets[b].contains(y)) || (sets[a].contains(y) && sets[b].contains(x))
        }
    }
}

/// Convenience wrapper: `h` is an induced minor of `g`.
pub fn is_induced_minor(h: &Graph, g: &Graph) -> bool {
    h.n() == 0 || (g.n() > 0 && find_model(h, g, Relation::InducedMinor).unwrap().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(h: &Graph, g: &Graph) -> Option<ContainmentModel> {
        find_model(h, g, Relation::InducedMinor).unwrap()
    }

    #[test]
    fn find_model_examples() {
        let m = im(&Graph::complete(4), &Graph::k4hat()).expect("K4 in k4hat");
        assert!(verify_model(&Graph::complete(4), &Graph::k4hat(), Relation::InducedMinor, &m));
        let gem = Graph::gem();
        assert_eq!(im(&gem, &gem), Some(ContainmentModel::identity(5)));
        assert_eq!(im(&gem, &Graph::k4hat()), None);
        assert_eq!(im(&Graph::cycle(4).unwrap(), &gem), None);
    }

    #[test]
    fn verify_rejects_overlap() {
        let g = Graph::path(3);
        let bad = ContainmentModel {
            branch_sets: vec![VertexSet::singleton(0).with(1), VertexSet::singleton(1).with(2)],
        };
        assert!(!verify_model(&Graph::complete(2), &g, Relation::InducedMinor, &bad));
        let good = ContainmentModel {
            branch_sets: vec![VertexSet::singleton(0), VertexSet::singleton(1).with(2)],
        };
        assert!(verify_model(&Graph::complete(2), &g, Relation::InducedMinor, &good));
        assert!(verify_model(&Graph::complete(2), &g, Relation::Contraction, &good));
        assert!(!verify_model(&Graph::complete(2), &g, Relation::InducedSubgraph, &good));
    }

    #[test]
    fn cycles_contract_to_triangles() {
        let c5 = Graph::cycle(5).unwrap();
        for rel in [Relation::InducedMinor, Relation::Contraction] {
            let m = find_model(&Graph::complete(3), &c5, rel).unwrap().unwrap();
            assert!(verify_model(&Graph::complete(3), &c5, rel, &m));
        }
        assert_eq!(find_model(&Graph::complete(3), &c5, Relation::InducedSubgraph).unwrap(), None);
    }

    #[test]
    fn rooted_examples() {
        let (d, (a, b)) = Graph::rooted_diamond();
        let rel = Relation::RootedInducedMinor { pattern_root: (a, b), host_root: (a, b) };
        assert!(find_model(&d, &d, rel).unwrap().is_some());
        // C4 plus a chord through one root endpoint only
        let rel2 = Relation::RootedInducedMinor { pattern_root: (a, b), host_root: (0, 2) };
        assert!(find_model(&d, &d, rel2).unwrap().is_none());
        let bad = Relation::RootedInducedMinor { pattern_root: (a, b), host_root: (1, 3) };
        assert_eq!(find_model(&d, &d, bad), Err(ContainmentError::HostRootNotEdge(1, 3)));
    }

    #[test]
    fn empty_inputs_rejected() {
        let e = Graph::empty(0).unwrap();
        assert_eq!(find_model(&e, &Graph::complete(2), Relation::InducedMinor), Err(ContainmentError::EmptyPattern));
        assert_eq!(find_model(&Graph::complete(1), &e, Relation::InducedMinor), Err(ContainmentError::EmptyHost));
    }

    #[test]
    fn budget_yields_unknown() {
        let h = Graph::complete(5);
        let g = Graph::cycle(9).unwrap().complement();
        assert_eq!(search_model(&h, &g, Relation::InducedMinor, Some(1)).unwrap(), SearchOutcome::Unknown);
    }
}
