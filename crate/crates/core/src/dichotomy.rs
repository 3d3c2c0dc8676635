//! Deciding whether the graphs excluding `H` as an induced minor are
//! well-quasi-ordered, plus the necessary conditions read off the
//! complement of `H`.
//!
//! [`classify`] is decided by model search alone. [`complement_filter`]
//! exists for diagnostics and to reproduce the table derivation.

use crate::antichains::Family;
use crate::containment::{find_model, ContainmentModel, Relation};
use crate::graph::Graph;
use std::fmt;

/// The graph whose induced minors give the well-quasi-ordered cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    Gem,
    K4Hat,
}

impl Witness {
    pub fn graph(self) -> Graph {
        match self {
            Witness::Gem => Graph::gem(),
            Witness::K4Hat => Graph::k4hat(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Witness::Gem => "gem",
            Witness::K4Hat => "k4hat",
        }
    }
}

/// A necessary condition on the complement `H̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterRule {
    /// Every component of `H̄` is a path.
    LinearForest,
    /// `H̄` has at most 4 components.
    R1,
    /// At most one component of `H̄` has more than one vertex.
    R2,
    /// The largest component of `H̄` has at most 4 vertices.
    R3,
    /// `n <= 7` and `H̄ = (c-1)K1 + P_{n-c+1}` with `c` components.
    R4,
    /// Three components force `n <= 5`.
    R5,
    /// Four components force `n <= 4`.
    R6,
}

impl FilterRule {
    pub const ALL: [FilterRule; 7] = [
        FilterRule::LinearForest,
        FilterRule::R1,
        FilterRule::R2,
        FilterRule::R3,
        FilterRule::R4,
        FilterRule::R5,
        FilterRule::R6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FilterRule::LinearForest => "linear-forest",
            FilterRule::R1 => "R1",
            FilterRule::R2 => "R2",
            FilterRule::R3 => "R3",
            FilterRule::R4 => "R4",
            FilterRule::R5 => "R5",
            FilterRule::R6 => "R6",
        }
    }

    /// The infinite antichain whose exclusion argument yields the rule.
    /// R4 only combines the linear-forest shape with R2 and R3, so it is
    /// credited to the interval antichain like them.
    pub fn family(self) -> Family {
        match self {
            FilterRule::LinearForest => Family::Antihole,
            FilterRule::R1 | FilterRule::R5 | FilterRule::R6 => Family::MatousekChain,
            FilterRule::R2 | FilterRule::R3 | FilterRule::R4 => Family::DingInterval,
        }
    }
}

impl fmt::Display for FilterRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of each rule, evaluated on the complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterReport {
    pub linear_forest: bool,
    pub r1: bool,
    pub r2: bool,
    pub r3: bool,
    pub r4: bool,
    pub r5: bool,
    pub r6: bool,
}

impl FilterReport {
    pub fn holds(&self, rule: FilterRule) -> bool {
        match rule {
            FilterRule::LinearForest => self.linear_forest,
            FilterRule::R1 => self.r1,
            FilterRule::R2 => self.r2,
            FilterRule::R3 => self.r3,
            FilterRule::R4 => self.r4,
            FilterRule::R5 => self.r5,
            FilterRule::R6 => self.r6,
        }
    }

    pub fn failed_rules(&self) -> Vec<FilterRule> {
        FilterRule::ALL.into_iter().filter(|&r| !self.holds(r)).collect()
    }

    pub fn passes_all(&self) -> bool {
        self.failed_rules().is_empty()
    }
}

/// Why the excluded class is not well-quasi-ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotWqoReason {
    /// `H` is an induced minor of neither the gem nor K̂4.
    NoWitness,
    /// A complement rule fails; `family` is the antichain behind it.
    Rule { rule: FilterRule, family: Family },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WqoVerdict {
    Wqo { witness: Witness, model: ContainmentModel },
    NotWqo { reasons: Vec<NotWqoReason> },
}

impl WqoVerdict {
    pub fn is_wqo(&self) -> bool {
        matches!(self, WqoVerdict::Wqo { .. })
    }
}

/// Wqo iff `H` is an induced minor of the gem or of K̂4; the gem is tried
/// first and its model is returned.
///
/// # Panics
/// If `h` has no vertices.
pub fn classify(h: &Graph) -> WqoVerdict {
    assert!(h.n() > 0, "classify needs a nonempty graph");
    for witness in [Witness::Gem, Witness::K4Hat] {
        if let Some(model) = find_model(h, &witness.graph(), Relation::InducedMinor).expect("nonempty inputs") {
            return WqoVerdict::Wqo { witness, model };
        }
    }
    let mut reasons = vec![NotWqoReason::NoWitness];
    reasons.extend(
        complement_filter(h).failed_rules().into_iter().map(|rule| NotWqoReason::Rule { rule, family: rule.family() }),
    );
    WqoVerdict::NotWqo { reasons }
}

fn is_path_component(g: &Graph, c: crate::graph::VertexSet) -> bool {
    let h = g.induced_subgraph(c);
    h.edge_count() + 1 == h.n() && (0..h.n()).all(|v| h.degree(v) <= 2)
}

pub fn complement_filter(h: &Graph) -> FilterReport {
    let hb = h.complement();
    let n = h.n();
    let comps = hb.components();
    let c = comps.len();
    let sizes: Vec<usize> = comps.iter().map(|s| s.len()).collect();
    let largest = sizes.iter().copied().max().unwrap_or(0);
    let linear_forest = comps.iter().all(|&s| is_path_component(&hb, s));
    let nontrivial = sizes.iter().filter(|&&s| s > 1).count();
    // (c-1) isolated vertices plus one path on the rest
    let shape = c >= 1 && linear_forest && nontrivial <= 1 && largest == n + 1 - c;
    FilterReport {
        linear_forest,
        r1: c <= 4,
        r2: nontrivial <= 1,
        r3: largest <= 4,
        r4: n <= 7 && shape,
        r5: c != 3 || n <= 5,
        r6: c != 4 || n <= 4,
    }
}

/// The twelve graphs whose excluded class is well-quasi-ordered, by order
/// and then by number of complement components.
pub fn wqo_table() -> Vec<(&'static str, Graph)> {
    let k1 = Graph::complete(1);
    let e2 = Graph::empty(2).expect("small");
    vec![
        ("K1", k1.clone()),
        ("2K1", e2),
        ("K2", Graph::complete(2)),
        ("K2+K1", Graph::complete(2).disjoint_union(&k1).expect("small")),
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
        ("P4", Graph::path(4)),
        ("K3+", Graph::paw()),
        ("K4-", Graph::diamond()),
        ("K4", Graph::complete(4)),
        ("gem", Graph::gem()),
        ("k4hat", Graph::k4hat()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::verify_model;

    #[test]
    fn classify_examples() {
        let WqoVerdict::Wqo { witness, model } = classify(&Graph::path(4)) else { panic!() };
        assert_eq!(witness, Witness::Gem);
        assert!(verify_model(&Graph::path(4), &Graph::gem(), Relation::InducedMinor, &model));
        let WqoVerdict::Wqo { witness, .. } = classify(&Graph::complete(4)) else { panic!() };
        assert_eq!(witness, Witness::K4Hat);
        assert!(!classify(&Graph::complete(5)).is_wqo());
        let WqoVerdict::NotWqo { reasons } = classify(&Graph::cycle(4).unwrap()) else { panic!() };
        assert_eq!(reasons[0], NotWqoReason::NoWitness);
        assert!(reasons.contains(&NotWqoReason::Rule { rule: FilterRule::R2, family: Family::DingInterval }));
    }

    #[test]
    fn filter_examples() {
        assert_eq!(complement_filter(&Graph::complete(5)).failed_rules(), vec![FilterRule::R1]);
        assert!(complement_filter(&Graph::cycle(4).unwrap()).failed_rules().contains(&FilterRule::R2));
        assert!(complement_filter(&Graph::gem()).passes_all());
        assert!(!complement_filter(&Graph::cycle(5).unwrap()).linear_forest);
    }

    #[test]
    fn table_shape() {
        let t = wqo_table();
        assert_eq!(t.len(), 12);
        assert!(t.iter().any(|(_, g)| g.is_isomorphic(&Graph::diamond())));
        let k3plus = Graph::path(3).disjoint_union(&Graph::complete(1)).unwrap().complement();
        assert!(t[7].1.is_isomorphic(&k3plus));
        assert!(t.windows(2).all(|w| w[0].1.n() <= w[1].1.n()));
    }
}
