use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// A direction for every edge of `base`. `out[u]` holds the heads of arcs leaving `u`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    out: Vec<u64>,
}

impl Orientation {
    /// Validates that `out` directs each edge of `base` exactly once and nothing else.
    pub fn from_out_rows(base: Graph, out: Vec<u64>) -> Result<Self> {
        if out.len() != base.n() {
            return Err(Error::InvalidOrientation(format!("{} rows for {} vertices", out.len(), base.n())));
        }
        for u in 0..base.n() {
            if out[u] >> u & 1 == 1 {
                return Err(Error::InvalidOrientation(format!("loop at {}", u + 1)));
            }
            let extra = out[u] & !base.neighbors(u);
            if extra != 0 {
                let v = extra.trailing_zeros() as usize;
                return Err(Error::InvalidOrientation(format!("arc {}->{} is not an edge", u + 1, v + 1)));
            }
        }
        for (u, v) in base.edges() {
            let fwd = out[u] >> v & 1 == 1;
            let back = out[v] >> u & 1 == 1;
            if fwd == back {
                let what = if fwd { "directed both ways" } else { "not directed" };
                return Err(Error::InvalidOrientation(format!("edge {}-{} {what}", u + 1, v + 1)));
            }
        }
        Ok(Orientation { base, out })
    }

    /// Builds from 0-based arcs `(tail, head)`.
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![0u64; base.n()];
        for &(u, v) in arcs {
            if u >= base.n() || v >= base.n() {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n: base.n() });
            }
            out[u] |= 1 << v;
        }
        Orientation::from_out_rows(base, out)
    }

    /// Directs every edge from the endpoint that comes first in `order`.
    pub fn by_order(base: Graph, order: &[usize]) -> Self {
        let mut rank = vec![0; base.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut out = vec![0u64; base.n()];
        for (u, v) in base.edges() {
            if rank[u] < rank[v] {
                out[u] |= 1 << v;
            } else {
                out[v] |= 1 << u;
            }
        }
        Orientation { base, out }
    }

    /// Every edge `{i, j}` directed `i -> j` for `i < j`.
    pub fn ascending(base: Graph) -> Self {
        let order: Vec<usize> = (0..base.n()).collect();
        Orientation::by_order(base, &order)
    }

    /// Parses the `i->j,k->l` arc list form (1-based).
    pub fn parse_arcs(base: Graph, text: &str) -> Result<Self> {
        let mut arcs = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part.split_once("->").ok_or_else(|| Error::InvalidOrientation(format!("bad arc `{part}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&x| x >= 1)
                    .ok_or_else(|| Error::InvalidOrientation(format!("bad arc `{part}`")))
            };
            arcs.push((parse(a)? - 1, parse(b)? - 1));
        }
        Orientation::from_arcs(base, &arcs)
    }

    pub(crate) fn from_parts_unchecked(base: Graph, out: Vec<u64>) -> Self {
        Orientation { base, out }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    #[inline]
    pub fn out(&self, u: usize) -> u64 {
        self.out[u]
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    /// Arcs `(tail, head)` sorted by tail then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|u| Bits(self.out[u]).map(move |v| (u, v))).collect()
    }

    /// The same edges with every arc turned around.
    pub fn reversed(&self) -> Orientation {
        let mut out = vec![0u64; self.n()];
        for (u, v) in self.arcs() {
            out[v] |= 1 << u;
        }
        Orientation { base: self.base.clone(), out }
    }

    /// Strict descendants of every vertex, or `None` when there is a directed cycle.
    pub fn descendants(&self) -> Option<Vec<u64>> {
        let order = self.topological_order()?;
        let mut desc = vec![0u64; self.n()];
        for &u in order.iter().rev() {
            let mut d = self.out[u];
            for v in Bits(self.out[u]) {
                d |= desc[v];
            }
            desc[u] = d;
        }
        Some(desc)
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indeg = vec![0usize; n];
        for u in 0..n {
            for v in Bits(self.out[u]) {
                indeg[v] += 1;
            }
        }
        let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.pop() {
            order.push(u);
            for v in Bits(self.out[u]) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }
}

impl fmt::Display for Orientation {
    /// `i->j` arcs, 1-based, comma separated, ordered by `(i, j)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs().iter().map(|(u, v)| format!("{}->{}", u + 1, v + 1)).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation({self})")
    }
}

/// True iff the orientation has a topological order.
pub fn is_acyclic(o: &Orientation) -> bool {
    o.topological_order().is_some()
}
