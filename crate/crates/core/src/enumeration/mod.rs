//! Batch classification of graph6 streams: per-graph records, per-size
//! summaries, minimal non-representable graphs and the 3-semi-transitive
//! separation.

mod minimal;
mod pipeline;
mod summary;

pub use minimal::{count_3st_not_st, minimal_graphs, minimal_nwr, MinimalityReport};
pub use pipeline::{
    enumerate_graphs, enumerate_stream, input_digest, EnumerateOptions, EnumerationOutcome, InputGraph, DEFAULT_CHUNK,
};
pub use summary::{parse_summary_csv, write_summary_csv, EnumerationSummary, SizeSummary};

use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::semitrans::{find_k_shortcut_free_orientation, is_word_representable};
use crate::uniform::{representation_number, RepNumber};

/// What to compute beyond the representability verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    pub rep_number: bool,
    /// Copy cap for the representation number; `None` means `2n`.
    pub cap: Option<usize>,
    pub k3: bool,
}

/// One line of the records file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub g6: String,
    pub n: usize,
    pub wr: bool,
    pub repnum: Option<RepNumber>,
    pub k3: Option<bool>,
}

/// Classifies one graph. Representability is always decided first and the
/// costlier questions only on request.
pub fn classify(g: &Graph, g6: &str, opts: &ClassifyOptions) -> Result<ClassificationRecord> {
    let wr = is_word_representable(g);
    let repnum = if !opts.rep_number {
        None
    } else if wr {
        Some(representation_number(g, opts.cap)?.number)
    } else {
        Some(RepNumber::Infinite)
    };
    // a semi-transitive orientation has no shortcuts of any length
    let k3 = if !opts.k3 {
        None
    } else if wr {
        Some(true)
    } else {
        Some(find_k_shortcut_free_orientation(g, 3)?.is_some())
    };
    Ok(ClassificationRecord { g6: g6.to_string(), n: g.n(), wr, repnum, k3 })
}

/// Reads a JSON-lines records file back.
pub fn read_records<R: BufRead>(reader: R) -> Result<Vec<ClassificationRecord>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec =
            serde_json::from_str(&line).map_err(|e| crate::Error::Line { line: i + 1, source: Box::new(e.into()) })?;
        out.push(rec);
    }
    Ok(out)
}
