//! Branch-and-bound model search.
//!
//! Pattern vertices are placed one at a time in a fixed order. Each receives
//! a connected branch set drawn from the host vertices that are still free
//! and not adjacent to any branch set of an already placed non-neighbour.
//! Connected sets are grown one vertex at a time (anchor = least member,
//! smaller vertices banned), so every set is produced exactly once.
//!
//! For induced minors only locally minimal models are explored: once
//! `G[B]` has more non-cut vertices than the pattern vertex has neighbours
//! (plus forced root vertices), no extension of `B` can appear in a minimal
//! model, and adding a vertex never lowers that count.

use super::{ContainmentModel, SearchOutcome};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kind {
    InducedMinor,
    InducedSubgraph,
    Contraction,
}

/// `forced`: two (pattern vertex, host vertex) pairs that must lie in each
/// other's branch sets; all other branch sets avoid the forced host vertices.
pub(crate) fn run(
    h: &Graph,
    g: &Graph,
    kind: Kind,
    forced: Option<((usize, usize), (usize, usize))>,
    budget: Option<u64>,
) -> (SearchOutcome, u64) {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return (SearchOutcome::Absent, 0);
    }
    if kind == Kind::InducedSubgraph && h.max_degree() > g.max_degree() {
        return (SearchOutcome::Absent, 0);
    }
    let mut s = Searcher::new(h, g, kind, forced, budget);
    let found = s.place(0);
    let out = if found {
        SearchOutcome::Found(ContainmentModel { branch_sets: s.sets.clone() })
    } else if s.exhausted {
        SearchOutcome::Unknown
    } else {
        SearchOutcome::Absent
    };
    (out, s.nodes)
}

struct Searcher<'a> {
    h: &'a Graph,
    g: &'a Graph,
    kind: Kind,
    order: Vec<usize>,
    /// For position `k`: the pattern vertices placed before `k`.
    prefix: Vec<VertexSet>,
    /// For position `k`: interchangeable pattern twins placed before `k`.
    twins_before: Vec<Vec<usize>>,
    forced: Vec<Option<usize>>,
    reserved: VertexSet,
    sets: Vec<VertexSet>,
    used: VertexSet,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl<'a> Searcher<'a> {
    fn new(
        h: &'a Graph,
        g: &'a Graph,
        kind: Kind,
        forced_pairs: Option<((usize, usize), (usize, usize))>,
        budget: Option<u64>,
    ) -> Self {
        let n = h.n();
        let mut forced = vec![None; n];
        let mut reserved = VertexSet::EMPTY;
        if let Some(((a, x), (b, y))) = forced_pairs {
            forced[a] = Some(x);
            forced[b] = Some(y);
            reserved = VertexSet::singleton(x).with(y);
        }
        let order = placement_order(h, &forced);
        let class = twin_classes(h, &forced);
        let mut prefix = Vec::with_capacity(n + 1);
        let mut twins_before = Vec::with_capacity(n);
        for (k, &p) in order.iter().enumerate() {
            let before = &order[..k];
            prefix.push(before.iter().collect());
            twins_before.push(
                before
                    .iter()
                    .copied()
                    .filter(|&q| class[p].is_some() && class[q] == class[p])
                    .collect(),
            );
        }
        prefix.push(order.iter().collect());
        Searcher {
            h,
            g,
            kind,
            order,
            prefix,
            twins_before,
            forced,
            reserved,
            sets: vec![VertexSet::EMPTY; n],
            used: VertexSet::EMPTY,
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.exhausted = true;
                return false;
            }
        }
        true
    }

    /// Host vertices a branch set for `p` may use, given the branch sets of
    /// the pattern vertices in `placed`.
    fn region(&self, p: usize, placed: VertexSet) -> VertexSet {
        let mut r = self.g.vertices() - self.used;
        for q in placed - self.h.neighbors(p) {
            if q != p {
                r -= self.g.neighborhood_of_set(self.sets[q]);
            }
        }
        match self.forced[p] {
            Some(x) => r - self.reserved.without(x),
            None => r - self.reserved,
        }
    }

    /// Neighbourhoods that a branch set for `p` must meet.
    fn contacts(&self, p: usize, placed: VertexSet) -> Vec<VertexSet> {
        (self.h.neighbors(p) & placed)
            .iter()
            .map(|q| self.g.neighborhood_of_set(self.sets[q]))
            .collect()
    }

    /// Some connected subset of `region` meets all `req` (and contains the
    /// forced vertex, if any).
    fn component_ok(&self, region: VertexSet, req: &[VertexSet], forced: Option<usize>) -> bool {
        if self.kind == Kind::InducedSubgraph {
            let mut c = region;
            for r in req {
                c &= *r;
            }
            return match forced {
                Some(x) => c.contains(x),
                None => !c.is_empty(),
            };
        }
        match forced {
            Some(x) => {
                if !region.contains(x) {
                    return false;
                }
                let c = self.g.reach(x, region);
                req.iter().all(|r| r.intersects(c))
            }
            None => self
                .g
                .components_within(region)
                .into_iter()
                .any(|c| req.iter().all(|r| r.intersects(c))),
        }
    }

    /// Necessary conditions for completing the model after position `k`.
    fn future_ok(&self, k: usize) -> bool {
        let n = self.order.len();
        let remaining = n - k;
        let free = self.g.vertices() - self.used;
        if remaining > (free - self.reserved).len() + self.forced_pending(k) {
            return false;
        }
        let placed = self.prefix[k];
        let mut coverable = VertexSet::EMPTY;
        for j in k..n {
            let q = self.order[j];
            let region = self.region(q, placed);
            let req = self.contacts(q, placed);
            if !self.component_ok(region, &req, self.forced[q]) {
                return false;
            }
            coverable |= region;
        }
        if self.kind == Kind::Contraction && !free.is_subset(coverable) {
            return false;
        }
        true
    }

    fn forced_pending(&self, k: usize) -> usize {
        self.order[k..].iter().filter(|&&q| self.forced[q].is_some()).count()
    }

    fn place(&mut self, k: usize) -> bool {
        let n = self.order.len();
        if k == n {
            return self.kind != Kind::Contraction || self.used == self.g.vertices();
        }
        let p = self.order[k];
        let placed = self.prefix[k];
        let region = self.region(p, placed);
        let req = self.contacts(p, placed);
        let forced = self.forced[p];
        let twin_floor = self.twins_before[k]
            .iter()
            .map(|&q| self.sets[q].first().unwrap() + 1)
            .max()
            .unwrap_or(0);

        if self.kind == Kind::InducedSubgraph {
            let mut cand = region;
            for r in &req {
                cand &= *r;
            }
            if let Some(x) = forced {
                cand &= VertexSet::singleton(x);
            }
            cand -= VertexSet::below(twin_floor);
            for v in cand {
                if !self.tick() {
                    return false;
                }
                if self.try_set(k, p, VertexSet::singleton(v)) {
                    return true;
                }
                if self.exhausted {
                    return false;
                }
            }
            return false;
        }

        if k + 1 == n {
            if !self.tick() {
                return false;
            }
            return self.place_last(k, p, region, &req, forced);
        }

        let max_size = {
            let free = self.g.vertices() - self.used;
            let others_forced = self.forced_pending(k + 1);
            let later = n - k - 1;
            let usable = (free - self.reserved).len() + forced.map_or(0, |_| 1);
            usable.saturating_sub(later - others_forced)
        };
        let limit = match self.kind {
            Kind::Contraction => usize::MAX,
            _ => self.h.degree(p) + forced.map_or(0, |_| 1),
        };
        let ctx = GrowCtx { k, p, region, req, max_size, limit };
        match forced {
            Some(x) => {
                if !region.contains(x) {
                    return false;
                }
                self.grow(&ctx, VertexSet::singleton(x), VertexSet::EMPTY)
            }
            None => {
                let comps: Vec<VertexSet> = self
                    .g
                    .components_within(region)
                    .into_iter()
                    .filter(|c| ctx.req.iter().all(|r| r.intersects(*c)))
                    .collect();
                for c in comps {
                    for a in c - VertexSet::below(twin_floor) {
                        let ban = c & VertexSet::below(a);
                        if self.grow(&ctx, VertexSet::singleton(a), ban) {
                            return true;
                        }
                        if self.exhausted {
                            return false;
                        }
                    }
                }
                false
            }
        }
    }

    fn place_last(
        &mut self,
        k: usize,
        p: usize,
        region: VertexSet,
        req: &[VertexSet],
        forced: Option<usize>,
    ) -> bool {
        if self.kind == Kind::Contraction {
            let free = self.g.vertices() - self.used;
            let ok = !free.is_empty()
                && free.is_subset(region)
                && self.g.is_connected_set(free)
                && req.iter().all(|r| r.intersects(free))
                && forced.map_or(true, |x| free.contains(x));
            return ok && self.try_set(k, p, free);
        }
        let comps = match forced {
            Some(x) if region.contains(x) => vec![self.g.reach(x, region)],
            Some(_) => vec![],
            None => self.g.components_within(region),
        };
        for c in comps {
            if req.iter().all(|r| r.intersects(c)) && self.try_set(k, p, c) {
                return true;
            }
        }
        false
    }

    fn try_set(&mut self, k: usize, p: usize, s: VertexSet) -> bool {
        self.sets[p] = s;
        self.used |= s;
        if self.future_ok(k + 1) && self.place(k + 1) {
            return true;
        }
        self.used -= s;
        self.sets[p] = VertexSet::EMPTY;
        false
    }

    fn grow(&mut self, ctx: &GrowCtx, s: VertexSet, ban: VertexSet) -> bool {
        if !self.tick() {
            return false;
        }
        if s.len() > ctx.max_size {
            return false;
        }
        if s.len() >= 2 && noncut_count(self.g, s) > ctx.limit {
            return false;
        }
        let open = (ctx.region - ban) | s;
        let reachable = self.g.reach(s.first().unwrap(), open);
        if !ctx.req.iter().all(|r| r.intersects(reachable)) {
            return false;
        }
        if ctx.req.iter().all(|r| r.intersects(s)) && self.try_set(ctx.k, ctx.p, s) {
            return true;
        }
        if self.exhausted {
            return false;
        }
        let mut ban = ban;
        let cand = self.g.neighborhood_of_set(s) & ctx.region - ban;
        for v in cand {
            if self.grow(ctx, s.with(v), ban) {
                return true;
            }
            if self.exhausted {
                return false;
            }
            ban.insert(v);
        }
        false
    }
}

struct GrowCtx {
    k: usize,
    p: usize,
    region: VertexSet,
    req: Vec<VertexSet>,
    max_size: usize,
    limit: usize,
}

/// Number of vertices `x` of `s` with `G[s - x]` connected.
fn noncut_count(g: &Graph, s: VertexSet) -> usize {
    s.iter().filter(|&x| g.is_connected_set(s.without(x))).count()
}

/// Forced vertices first, then greedily the vertex with most placed
/// neighbours, then highest degree, then least id.
fn placement_order(h: &Graph, forced: &[Option<usize>]) -> Vec<usize> {
    let n = h.n();
    let mut order: Vec<usize> = (0..n).filter(|&p| forced[p].is_some()).collect();
    let mut placed: VertexSet = order.iter().collect();
    while order.len() < n {
        let p = (0..n)
            .filter(|&p| !placed.contains(p))
            .max_by_key(|&p| ((h.neighbors(p) & placed).len(), h.degree(p), std::cmp::Reverse(p)))
            .unwrap();
        order.push(p);
        placed.insert(p);
    }
    order
}

/// Classes of pattern vertices that can be swapped by an automorphism
/// fixing everything else (true twins or false twins). Forced vertices are
/// never grouped.
fn twin_classes(h: &Graph, forced: &[Option<usize>]) -> Vec<Option<usize>> {
    let n = h.n();
    let mut class = vec![None; n];
    for u in 0..n {
        if forced[u].is_some() || class[u].is_some() {
            continue;
        }
        for v in u + 1..n {
            if forced[v].is_some() || class[v].is_some() {
                continue;
            }
            if h.neighbors(u).without(v) == h.neighbors(v).without(u) {
                class[u] = Some(u);
                class[v] = Some(u);
            }
        }
    }
    class
}
