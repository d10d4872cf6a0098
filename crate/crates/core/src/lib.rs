//! Word-representable graphs.
//!
//! A graph is word-representable when some word over its vertices has
//! exactly the edges as alternating letter pairs. This crate decides that
//! property through semi-transitive orientation search, builds `k`-uniform
//! representants and representation numbers, and classifies whole graph6
//! streams in parallel.

#![allow(clippy::needless_range_loop)]

pub mod alternation;
pub mod enumeration;
pub mod error;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod semitrans;
pub mod uniform;

pub use alternation::{alternate_in_word, graph_of_word, is_k_uniform, verify_representation, Word};
pub use enumeration::{classify, enumerate_stream, ClassificationRecord, ClassifyOptions, EnumerationSummary};
pub use error::{Error, Result};
pub use generators::{generate, Family};
pub use graph::{Graph, VertexSet};
pub use graph6::{encode_graph6, parse_graph6};
pub use iso::are_isomorphic;
pub use semitrans::{
    find_k_shortcut_free_orientation, find_semi_transitive_orientation, find_transitive_orientation,
    is_word_representable, Orientation,
};

pub use uniform::{representation_number, RepNumber};
