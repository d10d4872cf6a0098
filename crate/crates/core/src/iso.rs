//! Exact isomorphism for small graphs: colour refinement on both graphs at
//! once, then backtracking over colour-compatible vertex maps.

use std::collections::BTreeMap;

use crate::graph::{Bits, Graph};

/// Cheap isomorphism invariant used to bucket graphs before exact checks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantKey {
    pub n: usize,
    pub edges: usize,
    pub degrees: Vec<usize>,
}

impl InvariantKey {
    pub fn of(g: &Graph) -> Self {
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        InvariantKey { n: g.n(), edges: g.edge_count(), degrees }
    }
}

/// Stable colouring of the disjoint union of `g` and `h`. Returned colours
/// are comparable across the two graphs.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g, h];
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|x| x.degrees()).collect();
    let mut classes = 0;
    loop {
        let mut sigs: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(2);
        for (gi, x) in graphs.iter().enumerate() {
            let c = &colors[gi];
            sigs.push(
                (0..x.n())
                    .map(|v| {
                        let mut nb: Vec<usize> = Bits(x.neighbors(v)).map(|w| c[w]).collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect(),
            );
        }
        let mut ids = BTreeMap::new();
        for s in sigs.iter().flatten() {
            ids.entry(s.clone()).or_insert(0usize);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i;
        }
        let next: Vec<Vec<usize>> = sigs.iter().map(|row| row.iter().map(|s| ids[s]).collect()).collect();
        let count = ids.len();
        colors = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let h_colors = colors.pop().unwrap_or_default();
    let g_colors = colors.pop().unwrap_or_default();
    (g_colors, h_colors)
}

/// True iff some bijection maps the edges of `g` exactly onto those of `h`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if InvariantKey::of(g) != InvariantKey::of(h) {
        return false;
    }
    let (cg, ch) = refine(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return false;
    }

    // Map g's vertices rarest colour first, preferring vertices adjacent to
    // ones already placed so adjacency checks bite early.
    let n = g.n();
    let mut freq = BTreeMap::new();
    for &c in &cg {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let touching = (g.neighbors(v) & placed).count_ones();
                (freq[&cg[v]], std::cmp::Reverse(touching), v)
            })
            .expect("unplaced vertex");
        placed |= 1 << v;
        order.push(v);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n() {
        if *used >> w & 1 == 1 || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}
