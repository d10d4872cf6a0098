//! Backtracking search for constrained acyclic orientations.
//!
//! Edges are directed one at a time in a fixed order. After each choice the
//! reachability closure of the assigned arcs is updated, every unassigned edge
//! whose endpoints are already joined by a directed path is forced forward,
//! and only violations made entirely of assigned arcs are tested: those can
//! never be repaired, so the branch is cut.

use crate::graph::{full_mask, Bits, Graph};

use super::orientation::Orientation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// No shortcut of any length.
    SemiTransitive,
    /// No shortcut whose defining path has exactly this many arcs (at least 3).
    ShortcutFree(usize),
    Transitive,
}

/// Counters from one search, for benchmarking and tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

#[derive(Clone)]
struct Frame {
    out: Vec<u64>,
    desc: Vec<u64>,
    anc: Vec<u64>,
}

struct Search<'g> {
    g: &'g Graph,
    constraint: Constraint,
    order: Vec<(usize, usize)>,
    frames: Vec<Frame>,
    stats: SearchStats,
}

/// Vertex order: highest degree first, then greedily the vertex with most
/// neighbours already chosen. Edges follow the order in which their second
/// endpoint is chosen.
fn edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut chosen = 0u64;
    let mut verts = Vec::with_capacity(n);
    while verts.len() < n {
        let v = (0..n)
            .filter(|&v| chosen >> v & 1 == 0)
            .max_by_key(|&v| ((g.neighbors(v) & chosen).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("vertex left");
        verts.push(v);
        chosen |= 1 << v;
    }
    let mut order = Vec::with_capacity(g.edge_count());
    for (i, &v) in verts.iter().enumerate() {
        for &u in &verts[..i] {
            if g.has_edge(u, v) {
                order.push((u.min(v), u.max(v)));
            }
        }
    }
    order
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, constraint: Constraint) -> Self {
        let n = g.n();
        let order = edge_order(g);
        let blank = Frame { out: vec![0; n], desc: vec![0; n], anc: vec![0; n] };
        Search { g, constraint, frames: vec![blank; order.len() + 2], order, stats: SearchStats::default() }
    }

    fn run(&mut self) -> Option<Vec<u64>> {
        if self.order.is_empty() {
            return Some(vec![0; self.g.n()]);
        }
        // Reversing every arc preserves each constraint, so the first edge
        // only needs one direction.
        let (u, v) = self.order[0];
        self.stats.nodes += 1;
        if self.try_arc(0, u, v) {
            return self.descend(1, 1);
        }
        None
    }

    /// Copies frame `from` into `from + 1` and adds `u -> v` there with propagation.
    fn try_arc(&mut self, from: usize, u: usize, v: usize) -> bool {
        let (lo, hi) = self.frames.split_at_mut(from + 1);
        let src = &lo[from];
        let dst = &mut hi[0];
        dst.out.copy_from_slice(&src.out);
        dst.desc.copy_from_slice(&src.desc);
        dst.anc.copy_from_slice(&src.anc);
        apply(self.g, self.constraint, dst, u, v)
    }

    fn descend(&mut self, depth: usize, mut next: usize) -> Option<Vec<u64>> {
        let frame = &self.frames[depth];
        while next < self.order.len() {
            let (u, v) = self.order[next];
            if (frame.out[u] >> v | frame.out[v] >> u) & 1 == 0 {
                break;
            }
            next += 1;
        }
        if next == self.order.len() {
            return Some(frame.out.clone());
        }
        let (u, v) = self.order[next];
        for (a, b) in [(u, v), (v, u)] {
            self.stats.nodes += 1;
            if self.try_arc(depth, a, b) {
                if let Some(found) = self.descend(depth + 1, next + 1) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Adds `u -> v`, closes reachability, forces implied arcs and checks the
/// constraint on everything touched. Returns false on a dead end.
fn apply(g: &Graph, constraint: Constraint, f: &mut Frame, u: usize, v: usize) -> bool {
    let mut pending: Vec<(usize, usize)> = vec![(u, v)];
    let mut srcs = 0u64;
    let mut sinks = 0u64;
    while let Some((a, b)) = pending.pop() {
        if f.out[a] >> b & 1 == 1 {
            continue;
        }
        if f.out[b] >> a & 1 == 1 || f.desc[b] >> a & 1 == 1 {
            return false;
        }
        f.out[a] |= 1 << b;
        let up = f.anc[a] | 1 << a;
        let down = f.desc[b] | 1 << b;
        for x in Bits(up) {
            f.desc[x] |= down;
        }
        for y in Bits(down) {
            f.anc[y] |= up;
        }
        srcs |= up;
        sinks |= down;

        // unassigned edges between comparable vertices can only go forward
        for x in Bits(up) {
            let forced = f.desc[x] & g.neighbors(x) & !f.out[x];
            for y in Bits(forced) {
                pending.push((x, y));
            }
        }
        if let Constraint::Transitive = constraint {
            // a -> b with c ~ a, c !~ b forces a -> c; c ~ b, c !~ a forces c -> b
            let na = g.neighbors(a);
            let nb = g.neighbors(b);
            for c in Bits(na & !nb & !(1 << b)) {
                pending.push((a, c));
            }
            for c in Bits(nb & !na & !(1 << a)) {
                pending.push((c, b));
            }
        }
    }
    // Closing over the final state catches vertices whose ancestry grew after
    // they were first touched.
    let mut s = 0u64;
    for x in Bits(srcs) {
        s |= f.anc[x] | 1 << x;
    }
    let mut t = 0u64;
    for y in Bits(sinks) {
        t |= f.desc[y] | 1 << y;
    }
    check(g, constraint, f, s, t)
}

fn check(g: &Graph, constraint: Constraint, f: &Frame, srcs: u64, sinks: u64) -> bool {
    let all = full_mask(g.n());
    match constraint {
        Constraint::Transitive => Bits(srcs).all(|x| f.desc[x] & !g.neighbors(x) == 0),
        Constraint::SemiTransitive => {
            for u in Bits(srcs) {
                for v in Bits(f.out[u] & sinks) {
                    let between = (f.desc[u] & f.anc[v]) | 1 << u | 1 << v;
                    for x in Bits(between) {
                        let nonadj = all & !g.neighbors(x) & !(1 << x);
                        if f.desc[x] & between & nonadj != 0 {
                            return false;
                        }
                    }
                }
            }
            true
        }
        Constraint::ShortcutFree(3) => {
            for u in Bits(srcs) {
                for v in Bits(f.out[u] & sinks) {
                    for x in Bits(f.out[u] & f.anc[v]) {
                        for y in Bits(f.out[x] & f.anc[v]) {
                            if f.out[y] >> v & 1 == 1 && (!g.has_edge(u, y) || !g.has_edge(x, v)) {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }
        Constraint::ShortcutFree(k) => {
            for u in Bits(srcs) {
                for v in Bits(f.out[u] & sinks) {
                    let mut path = vec![u];
                    if !paths_ok(g, f, k, v, &mut path) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// False if some assigned path of exactly `k` arcs from `path[0]` to `target`
/// visits two non-adjacent vertices.
fn paths_ok(g: &Graph, f: &Frame, k: usize, target: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    if path.len() == k + 1 {
        if last != target {
            return true;
        }
        for i in 0..path.len() {
            for j in i + 1..path.len() {
                if !g.has_edge(path[i], path[j]) {
                    return false;
                }
            }
        }
        return true;
    }
    // must still be able to reach the target
    for next in Bits(f.out[last] & (f.anc[target] | 1 << target)) {
        if next == target && path.len() < k {
            continue;
        }
        path.push(next);
        let ok = paths_ok(g, f, k, target, path);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Runs the search and reports the node count alongside the result.
pub fn search_orientation(g: &Graph, constraint: Constraint) -> (Option<Orientation>, SearchStats) {
    if let Constraint::ShortcutFree(k) = constraint {
        assert!(k >= 3, "shortcut length must be at least 3");
    }
    let mut s = Search::new(g, constraint);
    let found = s.run().map(|out| Orientation::from_parts_unchecked(g.clone(), out));
    (found, s.stats)
}
