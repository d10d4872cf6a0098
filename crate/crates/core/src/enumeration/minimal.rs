use std::collections::HashMap;

use crate::exec::map_ordered;
use crate::graph::Graph;
use crate::iso::{are_isomorphic, InvariantKey};
use crate::semitrans::{find_k_shortcut_free_orientation, is_word_representable};

#[derive(Clone, Debug, Default)]
pub struct MinimalityReport {
    /// Indices into the candidate list, in input order.
    pub minimal: Vec<usize>,
    pub non_minimal_count: usize,
}

struct Index<'a> {
    buckets: HashMap<InvariantKey, Vec<&'a Graph>>,
}

impl<'a> Index<'a> {
    fn new(graphs: &'a [Graph]) -> Self {
        let mut buckets: HashMap<InvariantKey, Vec<&Graph>> = HashMap::new();
        for g in graphs {
            buckets.entry(InvariantKey::of(g)).or_default().push(g);
        }
        Index { buckets }
    }

    fn contains(&self, g: &Graph) -> bool {
        self.buckets.get(&InvariantKey::of(g)).is_some_and(|b| b.iter().any(|h| are_isomorphic(g, h)))
    }
}

/// Splits `bad` (connected graphs on `n` vertices with some hereditary
/// defect) into those with no defective proper induced subgraph and the rest.
///
/// `bad_prev` must hold every connected defective graph on `n - 1`
/// vertices. One-vertex deletions suffice: a defective induced subgraph can
/// be grown one vertex at a time inside the connected graph while staying
/// connected, and heredity keeps every step defective. Disconnected
/// deletions are skipped for the same reason.
pub fn minimal_graphs(bad: &[Graph], bad_prev: &[Graph], jobs: usize) -> MinimalityReport {
    let index = Index::new(bad_prev);
    let flags = map_ordered(bad, jobs, |g| {
        (0..g.n()).all(|v| match g.delete_vertex(v) {
            Ok(h) => !h.is_connected() || !index.contains(&h),
            Err(_) => true,
        })
    });
    let minimal: Vec<usize> = flags.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
    MinimalityReport { non_minimal_count: bad.len() - minimal.len(), minimal }
}

/// [`minimal_graphs`] for non-word-representable graphs.
pub fn minimal_nwr(nwr_n: &[Graph], nwr_prev: &[Graph], jobs: usize) -> MinimalityReport {
    minimal_graphs(nwr_n, nwr_prev, jobs)
}

/// Indices of the graphs that have a 3-shortcut-free orientation but no
/// semi-transitive one.
pub fn count_3st_not_st(graphs: &[Graph], jobs: usize) -> Vec<usize> {
    let flags = map_ordered(graphs, jobs, |g| {
        !is_word_representable(g) && matches!(find_k_shortcut_free_orientation(g, 3), Ok(Some(_)))
    });
    flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i).collect()
}
