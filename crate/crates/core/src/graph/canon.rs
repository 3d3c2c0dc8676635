//! Canonical labelling by colour refinement plus individualisation, with
//! pruning of interchangeable twin vertices.

use super::{Graph, VertexSet};

/// Refines `col` to the coarsest equitable partition below it. Colours are
/// dense ranks, ordered first by the previous colour, so the result depends
/// only on the isomorphism type of `(g, col)`.
fn refine(g: &Graph, col: &mut [u32]) {
    let n = g.n();
    let mut classes = count_classes(col);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| col[w]).collect();
                nb.sort_unstable();
                (col[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            col[sigs[i].2] = rank;
        }
        let now = if n == 0 { 0 } else { rank as usize + 1 };
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(col: &[u32]) -> usize {
    let mut c: Vec<u32> = col.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn initial_colors(n: usize, colors: Option<&[u32]>) -> Vec<u32> {
    match colors {
        None => vec![0; n],
        Some(c) => {
            let mut distinct: Vec<u32> = c.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            c.iter().map(|x| distinct.binary_search(x).unwrap() as u32).collect()
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u128>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf_key(&self, col: &[u32]) -> Vec<u128> {
        let n = self.g.n();
        let mut rows = vec![0u128; n];
        for v in 0..n {
            let mut r = 0u128;
            for w in self.g.neighbors(v) {
                r |= 1u128 << col[w];
            }
            rows[col[v] as usize] = r;
        }
        rows
    }

    fn run(&mut self, mut col: Vec<u32>) {
        let g = self.g;
        let n = g.n();
        refine(g, &mut col);
        let mut size = vec![0usize; n];
        for &c in &col {
            size[c as usize] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1);
        let Some(target) = target else {
            let key = self.leaf_key(&col);
            let better = match &self.best {
                None => true,
                Some((b, _)) => key < *b,
            };
            if better {
                let perm = col.iter().map(|&c| c as usize).collect();
                self.best = Some((key, perm));
            }
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| col[v] as usize == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| are_twins(g, u, v)) {
                continue;
            }
            tried.push(v);
            let next: Vec<u32> = (0..n)
                .map(|w| if w == v { 2 * col[w] } else { 2 * col[w] + 1 })
                .collect();
            self.run(next);
        }
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let nu: VertexSet = g.neighbors(u).without(v);
    let nv: VertexSet = g.neighbors(v).without(u);
    nu == nv
}

/// A canonical relabelling: `perm[v]` is the canonical position of `v`.
/// Two coloured graphs are isomorphic (colour-preservingly) iff relabelling
/// each by its permutation gives identical graphs and colour sequences.
pub fn canonical_labeling(g: &Graph, colors: Option<&[u32]>) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut s = Search { g, best: None };
    s.run(initial_colors(g.n(), colors));
    s.best.expect("search reaches a leaf").1
}

/// Canonical byte string of `g`, optionally with vertex colours (compared
/// by value). Equal strings iff colour-preserving isomorphic.
pub fn canonical_form_colored(g: &Graph, colors: Option<&[u32]>) -> Vec<u8> {
    let n = g.n();
    let perm = canonical_labeling(g, colors);
    let mut inv = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut out = Vec::with_capacity(2 + n * n / 16 + 4 * n);
    out.push(n as u8);
    match colors {
        None => out.push(0),
        Some(c) => {
            out.push(1);
            for &v in &inv {
                out.extend_from_slice(&c[v].to_le_bytes());
            }
        }
    }
    let mut byte = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            byte = (byte << 1) | g.has_edge(inv[i], inv[j]) as u8;
            nbits += 1;
            if nbits == 8 {
                out.push(byte);
                byte = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(byte << (8 - nbits));
    }
    out
}
