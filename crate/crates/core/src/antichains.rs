//! Generators for five infinite induced-minor antichains, and finite checks
//! of their incomparability and forbidden patterns.
//!
//! Vertex numbering per family:
//!
//! * `DoubleWheel(k)`, `k >= 2`: cycle `0..2k` as in [`Graph::cycle`],
//!   vertex `2k` adjacent to the even cycle vertices, `2k+1` to the odd ones.
//! * `MatousekChain(k)`, `k >= 1`: a chain of a 5-wheel, `k` 4-wheels and a
//!   5-wheel. Consecutive wheels share an edge: the hub of one wheel is a
//!   rim vertex of the next and vice versa. Spine vertices `s_0 ..= s_{k+1}`
//!   are `0..=k+1`: `s_0` is the hub of the top 5-wheel, `s_i` the hub of
//!   the `i`-th 4-wheel and `s_{k+1}` the hub of the bottom 5-wheel; every
//!   wheel's rim contains the spine vertices next to its hub. Then come the
//!   other rim vertices: four for the top 5-wheel, two per 4-wheel, four for
//!   the bottom 5-wheel. `10 + 3k` vertices, `19 + 7k` edges.
//! * `DingInterval(n)`, `n >= 3`: one vertex per interval of
//!   [`ding_intervals`], in list order.
//! * `Antihole(n)`, `n >= 6`: complement of [`Graph::cycle`].
//! * `NestedLozenge(m)`, `m >= 1`: lozenge `Z_0` is the 4-cycle
//!   `0 - 1 - 2 - 3` with pendants `4` on `0` and `5` on `2`. Each further
//!   lozenge `Z_j` is a 4-cycle alternating between the inner pair of
//!   `Z_{j-1}` and two new vertices, which form the inner pair of `Z_j`
//!   (the inner pair of `Z_0` is `{1, 3}`). Finally each vertex of the inner
//!   pair of the last lozenge receives a pendant. `2m + 6` vertices,
//!   `4m + 4` edges.

use crate::containment::{search_model, ContainmentModel, Relation, SearchOutcome};
use crate::graph::{Graph, GraphError, Result, VertexSet};
use std::fmt;
use std::str::FromStr;

/// Default node budget for incomparability and invariant checks.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    DoubleWheel,
    MatousekChain,
    DingInterval,
    Antihole,
    NestedLozenge,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::DoubleWheel,
        Family::MatousekChain,
        Family::DingInterval,
        Family::Antihole,
        Family::NestedLozenge,
    ];

    /// Least valid index.
    pub fn first_index(self) -> usize {
        match self {
            Family::DoubleWheel => 2,
            Family::MatousekChain => 1,
            Family::DingInterval => 3,
            Family::Antihole => 6,
            Family::NestedLozenge => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::DoubleWheel => "double-wheel",
            Family::MatousekChain => "matousek",
            Family::DingInterval => "ding",
            Family::Antihole => "antihole",
            Family::NestedLozenge => "nested-lozenge",
        }
    }

    /// Graph that no member contains as an induced minor.
    pub fn forbidden_pattern(self, index: usize) -> Result<Graph> {
        check_index(self, index)?;
        Ok(match self {
            Family::DoubleWheel | Family::NestedLozenge => Graph::complete(5),
            Family::MatousekChain => Graph::k5_minus(),
            Family::DingInterval => Graph::cycle(4)?,
            Family::Antihole => Graph::cycle(index - 1)?.complement(),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphError::InvalidParameter(format!("unknown family '{s}'")))
    }
}

fn check_index(family: Family, index: usize) -> Result<()> {
    if index < family.first_index() {
        return Err(GraphError::InvalidParameter(format!(
            "{family} members start at index {}, got {index}",
            family.first_index()
        )));
    }
    Ok(())
}

/// The member of `family` at `index`.
pub fn gen(family: Family, index: usize) -> Result<Graph> {
    check_index(family, index)?;
    match family {
        Family::DoubleWheel => double_wheel(index),
        Family::MatousekChain => matousek_chain(index),
        Family::DingInterval => Ok(interval_intersection_graph(&ding_intervals(index)?)),
        Family::Antihole => Ok(Graph::cycle(index)?.complement()),
        Family::NestedLozenge => nested_lozenge(index),
    }
}

fn double_wheel(k: usize) -> Result<Graph> {
    let c = Graph::cycle(2 * k)?;
    let evens: VertexSet = (0..2 * k).step_by(2).collect();
    let odds: VertexSet = (1..2 * k).step_by(2).collect();
    c.add_vertex(evens)?.add_vertex(odds)
}

fn matousek_chain(k: usize) -> Result<Graph> {
    let n = 10 + 3 * k;
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let spine = |i: usize| i;
    let mut edges: Vec<(usize, usize)> = (0..=k).map(|i| (spine(i), spine(i + 1))).collect();
    let mut next = k + 2;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    // top 5-wheel: hub s0, rim s1 - a - b - c - d - s1
    let (a, b, c, d) = (fresh(), fresh(), fresh(), fresh());
    for (x, y) in [(spine(1), a), (a, b), (b, c), (c, d), (d, spine(1))] {
        edges.push((x, y));
    }
    for x in [a, b, c, d] {
        edges.push((spine(0), x));
    }
    // 4-wheel i: hub s_i, rim s_{i-1} - l - s_{i+1} - r - s_{i-1}
    for i in 1..=k {
        let (l, r) = (fresh(), fresh());
        for x in [l, r] {
            edges.push((spine(i - 1), x));
            edges.push((x, spine(i + 1)));
            edges.push((spine(i), x));
        }
    }
    // bottom 5-wheel: hub s_{k+1}, rim s_k - a - b - c - d - s_k
    let (a, b, c, d) = (fresh(), fresh(), fresh(), fresh());
    let top = spine(k);
    for (x, y) in [(top, a), (a, b), (b, c), (c, d), (d, top)] {
        edges.push((x, y));
    }
    for x in [a, b, c, d] {
        edges.push((spine(k + 1), x));
    }
    Graph::from_edges(n, &edges)
}

fn nested_lozenge(m: usize) -> Result<Graph> {
    let n = 2 * m + 6;
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)];
    let mut inner = (1, 3);
    let mut next = 6;
    for _ in 1..m {
        let (x, y) = (next, next + 1);
        next += 2;
        // cycle inner.0 - x - inner.1 - y - inner.0
        edges.extend([(inner.0, x), (x, inner.1), (inner.1, y), (y, inner.0)]);
        inner = (x, y);
    }
    edges.extend([(inner.0, next), (inner.1, next + 1)]);
    Graph::from_edges(n, &edges)
}

/// A closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Result<Interval> {
        if lo > hi {
            return Err(GraphError::InvalidParameter(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo.max(other.lo) <= self.hi.min(other.hi)
    }
}

/// The intervals defining the `n`-th member of Ding's antichain, in this
/// order: the singletons `[i, i]` for `i` in `-2n..=-1` then `1..=2n`;
/// `[-2, 2]`, `[-4, 1]`, `[-2n+1, 2n]`, `[-2n+1, 2n-1]`;
/// `[-2i+1, 2i+1]` for `i` in `1..=n-2`; `[-2i, 2i-2]` for `i` in `3..=n`.
pub fn ding_intervals(n: usize) -> Result<Vec<Interval>> {
    if n <= 2 {
        return Err(GraphError::InvalidParameter(format!("Ding intervals need n > 2, got {n}")));
    }
    let m = n as i64;
    let mut out = Vec::with_capacity(6 * n);
    for i in (-2 * m..=-1).chain(1..=2 * m) {
        out.push(Interval { lo: i, hi: i });
    }
    for (lo, hi) in [(-2, 2), (-4, 1), (-2 * m + 1, 2 * m), (-2 * m + 1, 2 * m - 1)] {
        out.push(Interval { lo, hi });
    }
    for i in 1..=m - 2 {
        out.push(Interval { lo: -2 * i + 1, hi: 2 * i + 1 });
    }
    for i in 3..=m {
        out.push(Interval { lo: -2 * i, hi: 2 * i - 2 });
    }
    Ok(out)
}

/// One vertex per interval, adjacent when the closed intervals meet.
pub fn interval_intersection_graph(intervals: &[Interval]) -> Graph {
    Graph::from_fn(intervals.len(), |u, v| intervals[u].intersects(&intervals[v]))
        .expect("interval count within vertex limit")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    Incomparable,
    /// The smaller member is an induced minor of the larger one.
    Comparable(ContainmentModel),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    /// Index of the member used as pattern.
    pub pattern: usize,
    /// Index of the member used as host.
    pub host: usize,
    pub outcome: PairOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub family: Family,
    pub indices: Vec<usize>,
    pub pairs: Vec<PairReport>,
}

impl Report {
    pub fn all_incomparable(&self) -> bool {
        self.pairs.iter().all(|p| p.outcome == PairOutcome::Incomparable)
    }

    pub fn comparable_count(&self) -> usize {
        self.pairs.iter().filter(|p| matches!(p.outcome, PairOutcome::Comparable(_))).count()
    }

    pub fn unknown_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.outcome == PairOutcome::Unknown).count()
    }
}

fn outcome_of(search: SearchOutcome) -> PairOutcome {
    match search {
        SearchOutcome::Found(m) => PairOutcome::Comparable(m),
        SearchOutcome::Absent => PairOutcome::Incomparable,
        SearchOutcome::Unknown => PairOutcome::Unknown,
    }
}

/// Checks the first `count` members of `family` pairwise: the smaller
/// member is searched as an induced minor of the larger one (both ways when
/// the sizes agree), each search limited to `budget` nodes.
pub fn verify_pairwise_incomparable(family: Family, count: usize, budget: Option<u64>) -> Result<Report> {
    if count < 2 {
        return Err(GraphError::InvalidParameter(format!("need at least two members, got {count}")));
    }
    let indices: Vec<usize> = (family.first_index()..family.first_index() + count).collect();
    let members = indices.iter().map(|&i| gen(family, i)).collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for a in 0..count {
        for b in a + 1..count {
            let (ga, gb) = (&members[a], &members[b]);
            let mut dirs = vec![];
            if ga.n() <= gb.n() {
                dirs.push((a, b));
            }
            if gb.n() <= ga.n() {
                dirs.push((b, a));
            }
            for (p, h) in dirs {
                let s = search_model(&members[p], &members[h], Relation::InducedMinor, budget)
                    .expect("members are nonempty");
                pairs.push(PairReport { pattern: indices[p], host: indices[h], outcome: outcome_of(s) });
            }
        }
    }
    Ok(Report { family, indices, pairs })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantOutcome {
    Holds,
    Violated(ContainmentModel),
    Unknown,
}

/// Searches for the family's forbidden pattern in the member at `index`.
pub fn check_family_invariant(family: Family, index: usize, budget: Option<u64>) -> Result<InvariantOutcome> {
    let g = gen(family, index)?;
    let h = family.forbidden_pattern(index)?;
    Ok(match search_model(&h, &g, Relation::InducedMinor, budget).expect("nonempty graphs") {
        SearchOutcome::Found(m) => InvariantOutcome::Violated(m),
        SearchOutcome::Absent => InvariantOutcome::Holds,
        SearchOutcome::Unknown => InvariantOutcome::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for k in 2..6 {
            let g = gen(Family::DoubleWheel, k).unwrap();
            assert_eq!((g.n(), g.edge_count()), (2 * k + 2, 4 * k));
        }
        for n in 6..10 {
            let g = gen(Family::Antihole, n).unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, n * (n - 3) / 2));
            assert!((0..n).all(|v| g.degree(v) == n - 3));
        }
        for n in 3..7 {
            assert_eq!(ding_intervals(n).unwrap().len(), 4 * n + 4 + (n - 2) + (n - 2));
        }
        for k in 1..4 {
            let g = gen(Family::MatousekChain, k).unwrap();
            assert_eq!((g.n(), g.edge_count()), (10 + 3 * k, 19 + 7 * k));
        }
        for m in 1..5 {
            let g = gen(Family::NestedLozenge, m).unwrap();
            assert_eq!((g.n(), g.edge_count()), (2 * m + 6, 4 * m + 4));
            assert!(g.max_degree() <= 4);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn double_wheel_two_structure() {
        let g = gen(Family::DoubleWheel, 2).unwrap();
        assert!(!g.has_edge(4, 5));
        assert_eq!(g.neighbors(4).to_vec(), vec![0, 2]);
        assert_eq!(g.neighbors(5).to_vec(), vec![1, 3]);
    }

    #[test]
    fn antihole_six_is_prism() {
        assert!(gen(Family::Antihole, 6).unwrap().is_isomorphic(&Graph::prism()));
    }

    #[test]
    fn ding_examples() {
        let t3 = ding_intervals(3).unwrap();
        assert_eq!(t3.len(), 18);
        assert!(t3.contains(&Interval { lo: -5, hi: 6 }));
        assert!(t3.contains(&Interval { lo: -5, hi: 5 }));
        assert!(t3.contains(&Interval { lo: -1, hi: 3 }));
        assert!(ding_intervals(2).is_err());
        let g = interval_intersection_graph(&t3);
        assert_eq!(g.n(), 18);
        assert!(g.is_connected());
    }

    #[test]
    fn interval_graph_examples() {
        let a = [Interval::new(0, 1).unwrap(), Interval::new(1, 2).unwrap()];
        assert_eq!(interval_intersection_graph(&a), Graph::complete(2));
        let b = [Interval::new(0, 1).unwrap(), Interval::new(2, 3).unwrap()];
        assert_eq!(interval_intersection_graph(&b), Graph::empty(2).unwrap());
        assert!(Interval::new(3, 2).is_err());
    }

    #[test]
    fn matousek_wheels() {
        let g = gen(Family::MatousekChain, 1).unwrap();
        // hubs of the two 5-wheels, also on the 4-wheel rim
        assert_eq!(g.degree(0), 7);
        assert_eq!(g.degree(2), 7);
        // s1 is the 4-wheel hub and lies on both 5-wheel rims
        assert_eq!(g.degree(1), 8);
        let w5 = Graph::full_wheel(5).unwrap();
        assert!(g.induced_subgraph([0, 1, 3, 4, 5, 6].iter().collect()).is_isomorphic(&w5));
        assert!(g.is_k_connected(2));
    }

    #[test]
    fn index_ranges() {
        assert!(gen(Family::DoubleWheel, 1).is_err());
        assert!(gen(Family::Antihole, 5).is_err());
        assert!(gen(Family::DingInterval, 2).is_err());
        assert!(gen(Family::MatousekChain, 0).is_err());
        assert!(gen(Family::NestedLozenge, 0).is_err());
        assert_eq!("ding".parse::<Family>().unwrap(), Family::DingInterval);
        assert!("nope".parse::<Family>().is_err());
    }
}
