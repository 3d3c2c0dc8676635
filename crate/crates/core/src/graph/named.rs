//! Named graphs. Vertex numbering is fixed and documented per constructor.

use super::{Graph, GraphError, Result, VertexSet};

impl Graph {
    /// `K_n` on `0..n`.
    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).expect("n within limit")
    }

    /// `P_n`: `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1).expect("n within limit")
    }

    /// `C_n`: `i ~ i+1 (mod n)`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!("cycle length {n} < 3")));
        }
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// Complete multipartite graph; parts occupy consecutive id ranges in
    /// the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        let mut part_of = Vec::new();
        for (i, &s) in parts.iter().enumerate() {
            if s == 0 {
                return Err(GraphError::InvalidParameter("empty part".into()));
            }
            part_of.extend(std::iter::repeat(i).take(s));
        }
        Graph::from_fn(part_of.len(), |u, v| part_of[u] != part_of[v])
    }

    /// `k`-wheel over `C_len`: rim `0..len` as in [`Graph::cycle`], centre
    /// `len` adjacent to rim vertices `floor(i * len / k)` for `i < k`.
    pub fn wheel(len: usize, k: usize) -> Result<Graph> {
        if k == 0 || k > len {
            return Err(GraphError::InvalidParameter(format!(
                "wheel needs 1 <= k <= cycle length, got k={k}, length={len}"
            )));
        }
        let c = Graph::cycle(len)?;
        let spokes: VertexSet = (0..k).map(|i| i * len / k).collect();
        c.add_vertex(spokes)
    }

    /// Full wheel `W_len` (centre adjacent to the whole rim).
    pub fn full_wheel(len: usize) -> Result<Graph> {
        Graph::wheel(len, len)
    }

    /// Triangles `0 1 2` and `3 4 5` with matching `i ~ i+3`.
    pub fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    /// `K_{3,3}` with sides `{0,1,2}` and `{3,4,5}`.
    pub fn k33() -> Graph {
        Graph::complete_multipartite(&[3, 3]).unwrap()
    }

    /// Vertex 0 dominates the path `1 - 2 - 3 - 4`.
    pub fn gem() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap()
    }

    /// `K_4` on `0..4` plus vertex 4 adjacent to 2 and 3.
    pub fn k4hat() -> Graph {
        Graph::complete(4).add_vertex(VertexSet::singleton(2).with(3)).unwrap()
    }

    /// `K_4` minus the edge `{2, 3}`; 0 and 1 have degree 3.
    pub fn diamond() -> Graph {
        Graph::complete(4).remove_edge(2, 3).unwrap()
    }

    /// Triangle `0 1 2` with pendant 3 attached to 0 (the graph `K_3^+`).
    pub fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    /// `K_5` minus the edge `{3, 4}`.
    pub fn k5_minus() -> Graph {
        Graph::complete(5).remove_edge(3, 4).unwrap()
    }

    /// Rooted diamond: the 4-cycle `0 1 2 3` with chord `{0, 2}`; the root is
    /// the edge `{0, 1}`, so the chord meets exactly one root endpoint.
    pub fn rooted_diamond() -> (Graph, (usize, usize)) {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        (g, (0, 1))
    }

    /// Parses a graph name.
    ///
    /// Accepted: `K<n>`, `P<n>`, `C<n>`, `E<n>` (edgeless), `W<n>` (full
    /// wheel over `C_n`), `wheel<n>,<k>`, `K<a>,<b>,...` (complete
    /// multipartite), `prism`, `K33`, `gem`, `k4hat`, `diamond`, `paw`,
    /// `K5-`.
    pub fn named(name: &str) -> Result<Graph> {
        let bad = || GraphError::InvalidParameter(format!("unknown graph name '{name}'"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "prism" => return Ok(Graph::prism()),
            "k33" | "k3,3" => return Ok(Graph::k33()),
            "gem" => return Ok(Graph::gem()),
            "k4hat" => return Ok(Graph::k4hat()),
            "diamond" | "k4-" => return Ok(Graph::diamond()),
            "paw" | "k3+" => return Ok(Graph::paw()),
            "k5-" => return Ok(Graph::k5_minus()),
            _ => {}
        }
        let check = |n: usize| {
            if n > super::MAX_VERTICES {
                Err(GraphError::TooManyVertices(n))
            } else {
                Ok(n)
            }
        };
        if let Some(rest) = lower.strip_prefix("wheel") {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            return Graph::wheel(check(num(a)?)?, num(b)?);
        }
        let (head, rest) = lower.split_at(1.min(lower.len()));
        match head {
            "k" if rest.contains(',') => {
                let parts = rest.split(',').map(num).collect::<Result<Vec<_>>>()?;
                check(parts.iter().sum())?;
                Graph::complete_multipartite(&parts)
            }
            "k" => Ok(Graph::complete(check(num(rest)?)?)),
            "p" => Ok(Graph::path(check(num(rest)?)?)),
            "c" => Graph::cycle(check(num(rest)?)?),
            "e" => Graph::empty(num(rest)?),
            "w" => Graph::full_wheel(check(num(rest)?)?),
            _ => Err(bad()),
        }
    }
}
