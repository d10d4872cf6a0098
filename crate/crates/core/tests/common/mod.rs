//! Fixtures and brute-force oracles shared by the integration tests. The
//! oracles deliberately avoid the library's search code: they enumerate
//! every orientation, every directed path or every word.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashSet;
use std::io::Read;
use std::path::PathBuf;

use wordrep::{parse_graph6, Graph, Orientation};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

/// Raw graph6 text of all connected graphs on `n` vertices, as produced by `geng -c`.
pub fn connected_text(n: usize) -> String {
    let dir = data_dir();
    let plain = dir.join(format!("connected{n}.g6"));
    if plain.exists() {
        return std::fs::read_to_string(plain).unwrap();
    }
    let gz = std::fs::File::open(dir.join(format!("connected{n}.g6.gz"))).unwrap();
    let mut text = String::new();
    flate2::read::GzDecoder::new(gz).read_to_string(&mut text).unwrap();
    text
}

pub fn connected(n: usize) -> Vec<Graph> {
    connected_text(n).lines().map(|l| parse_graph6(l).unwrap()).collect()
}

/// Every orientation of `g`, one per bit pattern over its sorted edges.
pub fn all_orientations(g: &Graph) -> impl Iterator<Item = Orientation> + '_ {
    let edges = g.edges();
    assert!(edges.len() < 24, "too many edges for exhaustive enumeration");
    (0u32..1 << edges.len()).map(move |mask| {
        let arcs: Vec<(usize, usize)> =
            edges.iter().enumerate().map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) }).collect();
        Orientation::from_arcs(g.clone(), &arcs).unwrap()
    })
}

/// Kahn's algorithm.
pub fn acyclic(o: &Orientation) -> bool {
    let n = o.n();
    let mut indeg = vec![0; n];
    for (_, v) in o.arcs() {
        indeg[v] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for v in 0..n {
            if o.has_arc(u, v) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
    }
    seen == n
}

/// True if some directed path `v0 -> ... -> vk` with `k >= 3` (or exactly
/// `len` arcs) and the arc `v0 -> vk` misses an arc `vi -> vj`, `i < j`.
pub fn has_shortcut(o: &Orientation, len: Option<usize>) -> bool {
    fn walk(o: &Orientation, len: Option<usize>, path: &mut Vec<usize>) -> bool {
        let arcs = path.len() - 1;
        let last = *path.last().unwrap();
        let fits = match len {
            Some(k) => arcs == k,
            None => arcs >= 3,
        };
        if fits && o.has_arc(path[0], last) {
            for i in 0..path.len() {
                for j in i + 1..path.len() {
                    if !o.has_arc(path[i], path[j]) {
                        return true;
                    }
                }
            }
        }
        if len.is_some_and(|k| arcs >= k) {
            return false;
        }
        for v in 0..o.n() {
            if o.has_arc(last, v) && !path.contains(&v) {
                path.push(v);
                if walk(o, len, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..o.n()).any(|s| walk(o, len, &mut vec![s]))
}

pub fn transitive(o: &Orientation) -> bool {
    let n = o.n();
    (0..n).all(|u| (0..n).all(|v| !o.has_arc(u, v) || (0..n).all(|w| !o.has_arc(v, w) || o.has_arc(u, w))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    SemiTransitive,
    ThreeShortcutFree,
    Transitive,
}

pub fn oracle_exists(g: &Graph, kind: Kind) -> bool {
    all_orientations(g).any(|o| {
        acyclic(&o)
            && match kind {
                Kind::SemiTransitive => !has_shortcut(&o, None),
                Kind::ThreeShortcutFree => !has_shortcut(&o, Some(3)),
                Kind::Transitive => transitive(&o),
            }
    })
}

/// Bitmask over vertex pairs `(x, y)`, `x < y`, in lexicographic order.
pub fn pair_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut m = 0u64;
    let mut bit = 0;
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                m |= 1 << bit;
            }
            bit += 1;
        }
    }
    m
}

/// Pair mask of the graph a word represents, computed by scanning the
/// subsequence on each pair.
pub fn word_pair_mask(letters: &[usize], n: usize) -> u64 {
    let mut m = 0u64;
    let mut bit = 0;
    for x in 0..n {
        for y in x + 1..n {
            let mut prev = None;
            let mut alt = true;
            for &l in letters {
                if l == x || l == y {
                    if prev == Some(l) {
                        alt = false;
                        break;
                    }
                    prev = Some(l);
                }
            }
            if alt {
                m |= 1 << bit;
            }
            bit += 1;
        }
    }
    m
}

/// Every labelled graph on `n` vertices with a `k`-uniform representant,
/// found by listing all `k`-uniform words.
pub fn k_representable_masks(n: usize, k: usize) -> HashSet<u64> {
    fn rec(n: usize, left: &mut [usize], word: &mut Vec<usize>, out: &mut HashSet<u64>) {
        if left.iter().all(|&c| c == 0) {
            out.insert(word_pair_mask(word, n));
            return;
        }
        for x in 0..n {
            if left[x] > 0 {
                left[x] -= 1;
                word.push(x);
                rec(n, left, word, out);
                word.pop();
                left[x] += 1;
            }
        }
    }
    let mut out = HashSet::new();
    rec(n, &mut vec![k; n], &mut Vec::new(), &mut out);
    out
}
