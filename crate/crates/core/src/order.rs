//! Finite posets, Higman sequence embedding, the powerset order, and the
//! contraction order on labelled paths with distinguished ends.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use thiserror::Error;

/// Most elements a [`FinitePoset`] may have.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("poset has {0} elements, more than {MAX_ELEMENTS}")]
    TooManyElements(usize),
    #[error("unknown element {0}")]
    UnknownElement(usize),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("path has no vertices")]
    EmptyPath,
}

pub type Result<T, E = OrderError> = std::result::Result<T, E>;

/// A partial order on `0..len`. `up[x]` has bit `y` set iff `x <= y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    up: Vec<u64>,
}

impl FinitePoset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn new(up: Vec<u64>) -> Result<FinitePoset> {
        let n = up.len();
        if n > MAX_ELEMENTS {
            return Err(OrderError::TooManyElements(n));
        }
        let p = FinitePoset { up };
        for x in 0..n {
            if p.up[x] >> x & 1 == 0 {
                return Err(OrderError::NotPartialOrder(format!("{x} is not below itself")));
            }
            if n < 64 && p.up[x] >> n != 0 {
                return Err(OrderError::UnknownElement(n));
            }
            for y in 0..n {
                if x != y && p.le(x, y) && p.le(y, x) {
                    return Err(OrderError::NotPartialOrder(format!("{x} and {y} are below each other")));
                }
                for z in 0..n {
                    if p.le(x, y) && p.le(y, z) && !p.le(x, z) {
                        return Err(OrderError::NotPartialOrder(format!("{x} <= {y} <= {z} but not {x} <= {z}")));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn antichain(n: usize) -> Result<FinitePoset> {
        FinitePoset::new((0..n).map(|x| 1u64 << x).collect())
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<FinitePoset> {
        if n > MAX_ELEMENTS {
            return Err(OrderError::TooManyElements(n));
        }
        FinitePoset::new((0..n).map(|x| !0u64 << x & low_bits(n)).collect())
    }

    /// Reflexive-transitive closure of the pairs `x <= y`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<FinitePoset> {
        if n > MAX_ELEMENTS {
            return Err(OrderError::TooManyElements(n));
        }
        let mut up: Vec<u64> = (0..n).map(|x| 1u64 << x).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(OrderError::UnknownElement(x.max(y)));
            }
            up[x] |= 1 << y;
        }
        // Warshall
        for k in 0..n {
            for x in 0..n {
                if up[x] >> k & 1 == 1 {
                    up[x] |= up[k];
                }
            }
        }
        FinitePoset::new(up)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    pub fn check(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(OrderError::UnknownElement(x))
        }
    }

    pub fn check_label(&self, l: Label) -> Result<()> {
        match l.iter().find(|&x| x >= self.len()) {
            Some(x) => Err(OrderError::UnknownElement(x)),
            None => Ok(()),
        }
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// A finite set of poset elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Label(pub u64);

impl Label {
    pub const EMPTY: Label = Label(0);

    pub fn union(self, other: Label) -> Label {
        Label(self.0 | other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Label) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&x| self.0 >> x & 1 == 1)
    }
}

impl FromIterator<usize> for Label {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Label {
        Label(iter.into_iter().fold(0, |a, x| a | 1 << x))
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Higman embedding with a custom element order: an increasing map sending
/// each `r[i]` to some `s[j]` above it. Greedy earliest matching is exact.
pub fn seq_embeds_by<A, B>(r: &[A], s: &[B], mut le: impl FnMut(&A, &B) -> bool) -> bool {
    let mut j = 0;
    for a in r {
        while j < s.len() && !le(a, &s[j]) {
            j += 1;
        }
        if j == s.len() {
            return false;
        }
        j += 1;
    }
    true
}

pub fn seq_embeds(r: &[usize], s: &[usize], p: &FinitePoset) -> Result<bool> {
    for &x in r.iter().chain(s) {
        p.check(x)?;
    }
    Ok(seq_embeds_by(r, s, |&a, &b| p.le(a, b)))
}

/// Powerset order: an injection from `b` into `c` with each element below
/// its image. Decided by augmenting-path matching.
pub fn set_embeds(b: Label, c: Label, p: &FinitePoset) -> Result<bool> {
    p.check_label(b)?;
    p.check_label(c)?;
    Ok(set_embeds_unchecked(b, c, p))
}

fn set_embeds_unchecked(b: Label, c: Label, p: &FinitePoset) -> bool {
    if b.len() > c.len() {
        return false;
    }
    let targets: Vec<usize> = c.iter().collect();
    let mut owner: Vec<Option<usize>> = vec![None; targets.len()];
    fn augment(x: usize, p: &FinitePoset, t: &[usize], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for j in 0..t.len() {
            if seen[j] || !p.le(x, t[j]) {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|y| augment(y, p, t, owner, seen)) {
                owner[j] = Some(x);
                return true;
            }
        }
        false
    }
    b.iter().all(|x| augment(x, p, &targets, &mut owner, &mut vec![false; targets.len()]))
}

/// A path whose first and last vertices are told apart, with a label per
/// vertex listed from first to last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPath {
    labels: Vec<Label>,
}

impl LabeledPath {
    pub fn new(labels: Vec<Label>) -> Result<LabeledPath> {
        if labels.is_empty() {
            return Err(OrderError::EmptyPath);
        }
        Ok(LabeledPath { labels })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn check(&self, poset: &FinitePoset) -> Result<()> {
        self.labels.iter().try_for_each(|&l| poset.check_label(l))
    }
}

/// `p` is a contraction of `q` keeping the ends: `q` splits into
/// `p.len()` consecutive segments, the `i`-th segment's label union lies
/// above `p`'s `i`-th label in the powerset order.
///
/// Shortest segments are taken greedily; a longer segment only makes the
/// remaining suffix smaller, and labels only grow with union, so greedy is
/// exact.
pub fn path_contraction_leq(p: &LabeledPath, q: &LabeledPath, poset: &FinitePoset) -> Result<bool> {
    p.check(poset)?;
    q.check(poset)?;
    let (k, m) = (p.len(), q.len());
    if k > m {
        return Ok(false);
    }
    let mut j = 0;
    for i in 0..k - 1 {
        let mut acc = Label::EMPTY;
        loop {
            // leave one vertex for every later segment
            if m - j < k - i {
                return Ok(false);
            }
            acc = acc.union(q.labels[j]);
            j += 1;
            if set_embeds_unchecked(p.labels[i], acc, poset) {
                break;
            }
        }
    }
    let last = q.labels[j..].iter().fold(Label::EMPTY, |a, &b| a.union(b));
    Ok(set_embeds_unchecked(p.labels[k - 1], last, poset))
}

/// Higman embedding of the label sequences under the powerset order. This
/// implies [`path_contraction_leq`] (unmatched vertices are merged into a
/// neighbour) but not conversely: one vertex labelled `{a, b}` is a
/// contraction of the path `{a}`, `{b}` without embedding into it.
pub fn higman_encoding_leq(p: &LabeledPath, q: &LabeledPath, poset: &FinitePoset) -> Result<bool> {
    p.check(poset)?;
    q.check(poset)?;
    Ok(seq_embeds_by(&p.labels, &q.labels, |&a, &b| set_embeds_unchecked(a, b, poset)))
}

/// Every labelled path reachable from `q` by contracting edges (labels
/// united) and replacing a label by one below it in the powerset order, in
/// any order. Exponential in the poset size; meant as an oracle.
pub fn contraction_closure(q: &LabeledPath, poset: &FinitePoset) -> Result<HashSet<Vec<Label>>> {
    q.check(poset)?;
    let n = poset.len();
    if n > 16 {
        return Err(OrderError::TooManyElements(n));
    }
    let all_labels: Vec<Label> = (0..1u64 << n).map(Label).collect();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(q.labels.clone());
    queue.push_back(q.labels.clone());
    while let Some(cur) = queue.pop_front() {
        let mut next = Vec::new();
        for i in 0..cur.len() {
            for &l in &all_labels {
                if l != cur[i] && set_embeds_unchecked(l, cur[i], poset) {
                    let mut s = cur.clone();
                    s[i] = l;
                    next.push(s);
                }
            }
            if i + 1 < cur.len() {
                let mut s = cur.clone();
                s[i] = cur[i].union(cur[i + 1]);
                s.remove(i + 1);
                next.push(s);
            }
        }
        for s in next {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    Ok(seen)
}

pub fn brute_force_contraction_leq(p: &LabeledPath, q: &LabeledPath, poset: &FinitePoset) -> Result<bool> {
    p.check(poset)?;
    Ok(contraction_closure(q, poset)?.contains(&p.labels))
}
