//! Simple undirected graphs stored as adjacency bitset rows.
//!
//! Vertices are `0..n` inside the library. Every text form (graph6 aside,
//! which has no labels) prints them as `1..=n`.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 62;

/// A subset of the vertices of a graph, one bit per vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |m, v| m | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edge pairs. Loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edge pairs, the way edges are written in figures.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut zero = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::VertexOutOfRange { vertex: 0, n });
            }
            zero.push((u - 1, v - 1));
        }
        Graph::from_edges(n, &zero)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let all = full_mask(self.n);
        (0..self.n).all(|v| self.adj[v] == all & !(1 << v))
    }

    pub fn is_connected(&self) -> bool {
        let all = full_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Vertex sets of the connected components, in order of their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut seen = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= next;
            }
            out.push(VertexSet(seen));
            left &= !seen;
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in Bits(self.adj[v]) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Removes `v`; the remaining vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.n == 1 {
            return Err(Error::UnsupportedSize(0));
        }
        let keep = full_mask(self.n) & !(1 << v);
        self.induced_subgraph(VertexSet(keep))
    }

    /// The subgraph induced by `s`, relabelled in increasing vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if s.0 & !full_mask(self.n) != 0 {
            let bad = (s.0 & !full_mask(self.n)).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let verts: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            g.adj[i] = compress(self.adj[u] & s.0, s.0);
        }
        Ok(g)
    }

    /// Applies `perm`: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        Graph { n: self.n, adj: (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect() }
    }

    /// Human-readable 1-based edge list, e.g. `1-2 1-3 2-3`.
    pub fn edge_list_string(&self) -> String {
        self.edges().iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect::<Vec<_>>().join(" ")
    }
}

/// Packs the bits of `x` selected by `mask` into the low bits.
fn compress(x: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (i, b) in Bits(mask).enumerate() {
        out |= (x >> b & 1) << i;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [{}])", self.n, self.edge_list_string())
    }
}
