//! Chunked, resumable classification of a graph6 stream.
//!
//! The input is split into contiguous chunks that are classified
//! independently and committed strictly in index order: records are
//! appended, then the checkpoint is rewritten. A checkpoint therefore always
//! describes a prefix of chunks together with the byte length of the records
//! file that belongs to it, and resuming truncates anything written after.

use std::fs::{self, File, OpenOptions};
use std::io::{Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exec::{map_ordered, resolve_jobs};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

use super::summary::EnumerationSummary;
use super::{classify, ClassifyOptions};

pub const DEFAULT_CHUNK: usize = 1000;
const CHECKPOINT_VERSION: u32 = 1;

/// One parsed input line.
#[derive(Clone, Debug)]
pub struct InputGraph {
    /// 1-based line number in the input.
    pub line: usize,
    pub g6: String,
    pub graph: Graph,
}

impl InputGraph {
    /// Parses every non-blank line; the first failure aborts with its line number.
    pub fn parse_all(text: &str) -> Result<Vec<InputGraph>> {
        let mut out = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let l = raw.trim();
            if l.is_empty() {
                continue;
            }
            let graph = parse_graph6(l).map_err(|e| Error::Line { line: i + 1, source: Box::new(e) })?;
            let g6 = l.strip_prefix(">>graph6<<").unwrap_or(l).to_string();
            out.push(InputGraph { line: i + 1, g6, graph });
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub classify: ClassifyOptions,
    pub chunk_size: usize,
    /// Worker count; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    pub records: Option<PathBuf>,
    pub checkpoint: Option<PathBuf>,
    /// Stop after committing this many chunks in the current run.
    pub max_chunks: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            classify: ClassifyOptions::default(),
            chunk_size: DEFAULT_CHUNK,
            jobs: None,
            records: None,
            checkpoint: None,
            max_chunks: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationOutcome {
    pub summary: EnumerationSummary,
    /// Input indices (not line numbers) of the non-representable graphs.
    pub nwr: Vec<usize>,
    /// Input indices of graphs without a 3-shortcut-free orientation, when computed.
    pub non_3st: Vec<usize>,
    pub chunks_total: usize,
    pub chunks_done: usize,
    /// Chunks taken from an existing checkpoint.
    pub chunks_resumed: usize,
}

impl EnumerationOutcome {
    pub fn is_complete(&self) -> bool {
        self.chunks_done == self.chunks_total
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ChunkResult {
    index: usize,
    summary: EnumerationSummary,
    nwr: Vec<usize>,
    non_3st: Vec<usize>,
    records_end: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Checkpoint {
    version: u32,
    digest: String,
    chunk_size: usize,
    options: ClassifyOptions,
    records: bool,
    chunks_total: usize,
    completed: Vec<ChunkResult>,
}

impl Checkpoint {
    fn records_len(&self) -> u64 {
        self.completed.last().map_or(0, |c| c.records_end)
    }

    fn load(path: &Path) -> Result<Option<Checkpoint>> {
        match fs::read(path) {
            Ok(bytes) => Ok(Some(serde_json::from_slice(&bytes)?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    fn save(&self, path: &Path) -> Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        fs::write(&tmp, serde_json::to_vec(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    fn ensure_matches(&self, fresh: &Checkpoint) -> Result<()> {
        let mismatch = |what: &str| Err(Error::CheckpointMismatch(what.to_string()));
        if self.version != fresh.version {
            return mismatch("format version differs");
        }
        if self.digest != fresh.digest {
            return mismatch("input digest differs");
        }
        if self.chunk_size != fresh.chunk_size {
            return mismatch("chunk size differs");
        }
        if self.options != fresh.options {
            return mismatch("classification options differ");
        }
        if self.records != fresh.records {
            return mismatch("records output was enabled in one run only");
        }
        if self.chunks_total != fresh.chunks_total || self.completed.len() > self.chunks_total {
            return mismatch("chunk count differs");
        }
        if self.completed.iter().enumerate().any(|(i, c)| c.index != i) {
            return mismatch("completed chunks are not a prefix");
        }
        Ok(())
    }
}

fn digest(input: &str) -> String {
    hex::encode(Sha256::digest(input.as_bytes()))
}

fn run_chunk(
    graphs: &[InputGraph],
    offset: usize,
    index: usize,
    opts: &ClassifyOptions,
) -> Result<(ChunkResult, String)> {
    let mut summary = EnumerationSummary::default();
    let mut nwr = Vec::new();
    let mut non_3st = Vec::new();
    let mut lines = String::new();
    for (i, item) in graphs.iter().enumerate() {
        let start = Instant::now();
        let rec =
            classify(&item.graph, &item.g6, opts).map_err(|e| Error::Line { line: item.line, source: Box::new(e) })?;
        summary.add(&rec, start.elapsed().as_secs_f64());
        if !rec.wr {
            nwr.push(offset + i);
        }
        if rec.k3 == Some(false) {
            non_3st.push(offset + i);
        }
        lines.push_str(&serde_json::to_string(&rec)?);
        lines.push('\n');
    }
    Ok((ChunkResult { index, summary, nwr, non_3st, records_end: 0 }, lines))
}

/// Classifies every graph of a graph6 text.
///
/// With a checkpoint path, progress is saved after each batch of chunks and
/// a later call with the same input and options continues where it stopped.
pub fn enumerate_stream(input: &str, opts: &EnumerateOptions) -> Result<EnumerationOutcome> {
    let graphs = InputGraph::parse_all(input)?;
    enumerate_graphs(&graphs, &digest(input), opts)
}

/// As [`enumerate_stream`] over already parsed graphs; `digest` identifies
/// the input for checkpoint matching.
pub fn enumerate_graphs(graphs: &[InputGraph], digest: &str, opts: &EnumerateOptions) -> Result<EnumerationOutcome> {
    let chunk = opts.chunk_size.max(1);
    let chunks_total = graphs.len().div_ceil(chunk);
    let fresh = Checkpoint {
        version: CHECKPOINT_VERSION,
        digest: digest.to_string(),
        chunk_size: chunk,
        options: opts.classify,
        records: opts.records.is_some(),
        chunks_total,
        completed: Vec::new(),
    };
    let mut state = match &opts.checkpoint {
        Some(path) => match Checkpoint::load(path)? {
            Some(saved) => {
                saved.ensure_matches(&fresh)?;
                saved
            }
            None => fresh,
        },
        None => fresh,
    };
    let resumed = state.completed.len();

    let mut records = match &opts.records {
        Some(path) => {
            let mut f = OpenOptions::new().create(true).write(true).truncate(false).open(path)?;
            let keep = state.records_len();
            if f.metadata()?.len() < keep {
                return Err(Error::CheckpointMismatch("records file is shorter than the checkpoint".into()));
            }
            f.set_len(keep)?;
            f.seek(SeekFrom::End(0))?;
            Some(f)
        }
        None => None,
    };

    let jobs = resolve_jobs(opts.jobs);
    let limit = opts.max_chunks.map_or(chunks_total, |m| (resumed + m).min(chunks_total));
    let wave = jobs * 2;
    let mut next = resumed;
    while next < limit {
        let batch: Vec<usize> = (next..limit.min(next + wave)).collect();
        let results = map_ordered(&batch, jobs, |&c| {
            let lo = c * chunk;
            let hi = (lo + chunk).min(graphs.len());
            run_chunk(&graphs[lo..hi], lo, c, &opts.classify)
        });
        for r in results {
            let (mut result, lines) = r?;
            result.records_end = state.records_len();
            if let Some(f) = records.as_mut() {
                f.write_all(lines.as_bytes())?;
                result.records_end += lines.len() as u64;
            }
            state.completed.push(result);
        }
        if let Some(f) = records.as_mut() {
            flush(f)?;
        }
        if let Some(path) = &opts.checkpoint {
            state.save(path)?;
        }
        next += batch.len();
    }

    let mut summary = EnumerationSummary::default();
    let mut nwr = Vec::new();
    let mut non_3st = Vec::new();
    for c in &state.completed {
        summary.merge(&c.summary);
        nwr.extend_from_slice(&c.nwr);
        non_3st.extend_from_slice(&c.non_3st);
    }
    Ok(EnumerationOutcome {
        summary,
        nwr,
        non_3st,
        chunks_total,
        chunks_done: state.completed.len(),
        chunks_resumed: resumed,
    })
}

fn flush(f: &mut File) -> Result<()> {
    f.flush()?;
    f.sync_data()?;
    Ok(())
}

/// Digest used to tie a checkpoint to its input.
pub fn input_digest(input: &str) -> String {
    digest(input)
}
