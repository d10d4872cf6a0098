//! Acyclic orientations, shortcuts, and the orientation searches that decide
//! word-representability (semi-transitive), `k`-semi-transitivity and
//! comparability (transitive).

mod orientation;
mod search;
mod shortcut;

pub use orientation::{is_acyclic, Orientation};
pub use search::{search_orientation, Constraint, SearchStats};
pub use shortcut::{
    find_shortcut, is_k_shortcut_free, is_semi_transitive_orientation, is_transitive_orientation, ShortcutLength,
    ShortcutWitness,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A semi-transitive orientation of `g`, if one exists.
pub fn find_semi_transitive_orientation(g: &Graph) -> Option<Orientation> {
    search_orientation(g, Constraint::SemiTransitive).0
}

/// A graph is word-representable iff it has a semi-transitive orientation.
pub fn is_word_representable(g: &Graph) -> bool {
    find_semi_transitive_orientation(g).is_some()
}

/// An acyclic orientation with no shortcut of exactly `k` arcs, if one exists.
pub fn find_k_shortcut_free_orientation(g: &Graph, k: usize) -> Result<Option<Orientation>> {
    if k < 3 {
        return Err(Error::ShortcutLength(k));
    }
    Ok(search_orientation(g, Constraint::ShortcutFree(k)).0)
}

/// A transitive orientation; `None` iff `g` is not a comparability graph.
pub fn find_transitive_orientation(g: &Graph) -> Option<Orientation> {
    search_orientation(g, Constraint::Transitive).0
}
