use crate::error::{Error, Result};
use crate::graph::Bits;

use super::orientation::Orientation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShortcutLength {
    Any,
    /// Defining path with exactly this many arcs.
    Exactly(usize),
}

/// A directed path `v1 -> ... -> vk` together with the arc `v1 -> vk`, where
/// the arc `vi -> vj` named by `missing` is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortcutWitness {
    pub path: Vec<usize>,
    pub missing: (usize, usize),
}

impl ShortcutWitness {
    /// Number of arcs on the defining path.
    pub fn length(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_valid_for(&self, o: &Orientation) -> bool {
        let p = &self.path;
        if p.len() < 4 {
            return false;
        }
        let mut seen = 0u64;
        for &v in p {
            if v >= o.n() || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        let (a, b) = self.missing;
        let pos = |x| p.iter().position(|&v| v == x);
        let ordered = matches!((pos(a), pos(b)), (Some(i), Some(j)) if i < j);
        p.windows(2).all(|w| o.has_arc(w[0], w[1])) && o.has_arc(p[0], p[p.len() - 1]) && ordered && !o.has_arc(a, b)
    }
}

fn shortest_path(o: &Orientation, from: usize, to: usize) -> Vec<usize> {
    if from == to {
        return vec![from];
    }
    let n = o.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = 1u64 << from;
    let mut frontier = vec![from];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &u in &frontier {
            for v in Bits(o.out(u) & !seen) {
                seen |= 1 << v;
                parent[v] = u;
                next.push(v);
            }
        }
        if seen >> to & 1 == 1 {
            break;
        }
        frontier = next;
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Looks for a shortcut in an acyclic orientation.
///
/// With `ShortcutLength::Any`, for each arc `u -> v` the vertices lying on
/// some `u`-`v` path are collected; a shortcut exists iff two of them are
/// joined by a directed path but not by an arc.
pub fn find_shortcut(o: &Orientation, length: ShortcutLength) -> Result<Option<ShortcutWitness>> {
    let desc = o.descendants().ok_or(Error::CyclicOrientation)?;
    match length {
        ShortcutLength::Any => Ok(find_any(o, &desc)),
        ShortcutLength::Exactly(k) if k < 3 => Err(Error::ShortcutLength(k)),
        ShortcutLength::Exactly(k) => Ok(find_exact(o, k)),
    }
}

fn find_any(o: &Orientation, desc: &[u64]) -> Option<ShortcutWitness> {
    let n = o.n();
    let mut anc = vec![0u64; n];
    for u in 0..n {
        for v in Bits(desc[u]) {
            anc[v] |= 1 << u;
        }
    }
    for (u, v) in o.arcs() {
        let between = (desc[u] & anc[v]) | 1 << u | 1 << v;
        for x in Bits(between) {
            let bad = desc[x] & between & !o.out(x);
            if let Some(y) = Bits(bad).next() {
                let mut path = shortest_path(o, u, x);
                path.extend_from_slice(&shortest_path(o, x, y)[1..]);
                path.extend_from_slice(&shortest_path(o, y, v)[1..]);
                return Some(ShortcutWitness { path, missing: (x, y) });
            }
        }
    }
    None
}

fn find_exact(o: &Orientation, k: usize) -> Option<ShortcutWitness> {
    fn walk(o: &Orientation, k: usize, target: usize, path: &mut Vec<usize>) -> Option<ShortcutWitness> {
        let last = *path.last().unwrap();
        if path.len() == k + 1 {
            if last != target {
                return None;
            }
            for i in 0..path.len() {
                for j in i + 1..path.len() {
                    if !o.has_arc(path[i], path[j]) {
                        return Some(ShortcutWitness { path: path.clone(), missing: (path[i], path[j]) });
                    }
                }
            }
            return None;
        }
        for next in Bits(o.out(last)) {
            if path.len() + 1 < k + 1 && next == target {
                continue;
            }
            path.push(next);
            if let Some(w) = walk(o, k, target, path) {
                return Some(w);
            }
            path.pop();
        }
        None
    }
    for (u, v) in o.arcs() {
        let mut path = vec![u];
        if let Some(w) = walk(o, k, v, &mut path) {
            return Some(w);
        }
    }
    None
}

/// Acyclic and shortcut-free.
pub fn is_semi_transitive_orientation(o: &Orientation) -> bool {
    matches!(find_shortcut(o, ShortcutLength::Any), Ok(None))
}

/// Acyclic with no shortcut whose defining path has exactly `k` arcs.
pub fn is_k_shortcut_free(o: &Orientation, k: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::ShortcutLength(k));
    }
    Ok(matches!(find_shortcut(o, ShortcutLength::Exactly(k)), Ok(None)))
}

/// `u -> v` and `v -> z` always imply `u -> z`.
pub fn is_transitive_orientation(o: &Orientation) -> bool {
    (0..o.n()).all(|u| Bits(o.out(u)).all(|v| o.out(v) & !o.out(u) == 0))
}
