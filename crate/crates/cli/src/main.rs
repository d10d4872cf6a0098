//! `wordrep` command-line tool.
//!
//! Graphs are read as graph6, one per line, from a file or standard input.
//! Per-graph results are written tab-separated, starting with the graph6
//! string. Exit status: 0 computed, 1 I/O failure, 2 usage, 3 parse error,
//! 4 representation-number cap exceeded, 5 checkpoint mismatch.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

use wordrep::enumeration::{
    classify, count_3st_not_st, enumerate_graphs, input_digest, minimal_graphs, write_summary_csv, ClassifyOptions,
    EnumerateOptions, InputGraph, DEFAULT_CHUNK,
};
use wordrep::exec::{map_ordered, resolve_jobs};
use wordrep::semitrans::{
    find_k_shortcut_free_orientation, find_semi_transitive_orientation, find_transitive_orientation,
};
use wordrep::uniform::representation_number;
use wordrep::{encode_graph6, generate, parse_graph6, verify_representation, Error, Family, Graph, Orientation, Word};

#[derive(Parser)]
#[command(name = "wordrep", version, about = "Word-representability of graphs given in graph6")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// graph6 file; standard input when absent or `-`
    input: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Jobs {
    /// Worker threads (default: available parallelism)
    #[arg(long, env = "WORDREP_JOBS", value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

impl Jobs {
    fn get(&self) -> usize {
        resolve_jobs(self.jobs.map(|j| j as usize))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// semi-transitive (word-representable)
    St,
    /// no shortcut of exactly `--k` arcs
    #[value(name = "3st")]
    KSt,
    /// transitive (comparability graph)
    Transitive,
}

#[derive(Subcommand)]
enum Command {
    /// Decide word-representability; prints a semi-transitive orientation as witness
    Check(Input),
    /// Representation number with a uniform witness word
    Repnum {
        #[command(flatten)]
        input: Input,
        /// Largest number of copies per letter to try (default 2n)
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Check that a word represents a graph
    VerifyWord {
        /// graph6 string of the graph
        #[arg(long)]
        graph: String,
        /// word as digits (`1213423`) or separated labels (`10 2 10 1`)
        #[arg(long)]
        word: String,
    },
    /// Find an orientation of the requested kind
    Orient {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "st")]
        mode: Mode,
        /// Shortcut length forbidden in `3st` mode
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Emit one JSON record per graph
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        what: What,
    },
    /// Chunked, resumable classification of a whole stream with a CSV summary
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        what: What,
        #[command(flatten)]
        jobs: Jobs,
        /// Graphs per chunk
        #[arg(long, default_value_t = DEFAULT_CHUNK, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        chunk: usize,
        /// Checkpoint file; an existing one is resumed
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// JSON-lines records file
        #[arg(long)]
        records: Option<PathBuf>,
        /// CSV summary file (default: standard output)
        #[arg(long)]
        summary: Option<PathBuf>,
        /// Graphs on one vertex fewer, to count minimal non-representable graphs
        #[arg(long)]
        prev: Option<PathBuf>,
        /// Write the non-representable graphs here
        #[arg(long)]
        nwr_out: Option<PathBuf>,
        /// Stop after this many chunks (resume later from the checkpoint)
        #[arg(long)]
        max_chunks: Option<usize>,
    },
    /// Graphs with the defect of `--mode` none of whose proper induced subgraphs has it
    Minimal {
        #[command(flatten)]
        input: Input,
        /// Graphs on one vertex fewer; must include every connected graph with the defect
        #[arg(long)]
        prev: PathBuf,
        #[arg(long, value_enum, default_value = "st")]
        mode: Mode,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Print a named graph in graph6
    Generate {
        #[arg(value_parser = parse_family)]
        family: Family,
        size: Option<usize>,
        /// Also print the 1-based edge list
        #[arg(long)]
        edges: bool,
    },
    /// Graphs with a 3-shortcut-free orientation but no semi-transitive one
    #[command(name = "separate-3st")]
    Separate3st {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        jobs: Jobs,
    },
}

#[derive(Args, Clone, Copy)]
struct What {
    /// Also compute representation numbers
    #[arg(long)]
    repnum: bool,
    /// Also decide 3-shortcut-free orientability
    #[arg(long)]
    k3: bool,
    /// Copy cap for representation numbers (default 2n)
    #[arg(long)]
    cap: Option<usize>,
}

impl What {
    fn options(self) -> ClassifyOptions {
        ClassifyOptions { rep_number: self.repnum, cap: self.cap, k3: self.k3 }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(Error::Io(e))
    }
}

fn exit_code(e: &Error) -> u8 {
    match e.root() {
        Error::Io(_) => 1,
        Error::CapExceeded { .. } => 4,
        Error::CheckpointMismatch(_) => 5,
        Error::ShortcutLength(_)
        | Error::ZeroMultiplicity
        | Error::UnknownFamily(_)
        | Error::InvalidFamilySize { .. } => 2,
        _ => 3,
    }
}

fn read_text(input: &Input) -> Result<String, Failure> {
    match &input.input {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graphs(input: &Input) -> Result<(String, Vec<InputGraph>), Failure> {
    let text = read_text(input)?;
    let graphs = InputGraph::parse_all(&text)?;
    Ok((text, graphs))
}

fn read_graph_file(path: &PathBuf) -> Result<Vec<InputGraph>, Failure> {
    Ok(InputGraph::parse_all(&fs::read_to_string(path)?)?)
}

fn arcs_text(o: &Orientation) -> String {
    o.to_string()
}

fn has_defect(g: &Graph, mode: Mode, k: usize) -> bool {
    match mode {
        Mode::St => find_semi_transitive_orientation(g).is_none(),
        Mode::KSt => matches!(find_k_shortcut_free_orientation(g, k), Ok(None)),
        Mode::Transitive => find_transitive_orientation(g).is_none(),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Check(input) => {
            let (_, graphs) = read_graphs(&input)?;
            for item in graphs {
                match find_semi_transitive_orientation(&item.graph) {
                    Some(o) => writeln!(out, "{}\trepresentable\t{}", item.g6, arcs_text(&o))?,
                    None => writeln!(out, "{}\tnot-representable", item.g6)?,
                }
            }
        }
        Command::Repnum { input, cap } => {
            let (_, graphs) = read_graphs(&input)?;
            for item in graphs {
                let r = representation_number(&item.graph, cap)
                    .map_err(|e| Error::Line { line: item.line, source: Box::new(e) })?;
                match r.witness {
                    Some(w) => writeln!(out, "{}\t{}\t{}", item.g6, r.number, w)?,
                    None => writeln!(out, "{}\t{}", item.g6, r.number)?,
                }
            }
        }
        Command::VerifyWord { graph, word } => {
            let g = parse_graph6(&graph)?;
            let w = Word::parse(&word, None)?;
            match verify_representation(&w, &g) {
                Ok(true) => writeln!(out, "valid")?,
                Ok(false) => writeln!(out, "invalid")?,
                Err(e @ (Error::AlphabetMismatch { .. } | Error::MissingLetters(_))) => writeln!(out, "invalid\t{e}")?,
                Err(e) => return Err(e.into()),
            }
        }
        Command::Orient { input, mode, k } => {
            if mode == Mode::KSt && k < 3 {
                return Err(Failure::Usage(format!("--k must be at least 3, got {k}")));
            }
            let (_, graphs) = read_graphs(&input)?;
            for item in graphs {
                let found = match mode {
                    Mode::St => find_semi_transitive_orientation(&item.graph),
                    Mode::KSt => find_k_shortcut_free_orientation(&item.graph, k)?,
                    Mode::Transitive => find_transitive_orientation(&item.graph),
                };
                match found {
                    Some(o) => writeln!(out, "{}\tfound\t{}", item.g6, arcs_text(&o))?,
                    None => writeln!(out, "{}\tnone", item.g6)?,
                }
            }
        }
        Command::Classify { input, what } => {
            let (_, graphs) = read_graphs(&input)?;
            let opts = what.options();
            for item in graphs {
                let rec = classify(&item.graph, &item.g6, &opts)
                    .map_err(|e| Error::Line { line: item.line, source: Box::new(e) })?;
                writeln!(out, "{}", serde_json_line(&rec)?)?;
            }
        }
        Command::Enumerate { input, what, jobs, chunk, checkpoint, records, summary, prev, nwr_out, max_chunks } => {
            let prev_graphs = prev.as_ref().map(read_graph_file).transpose()?;
            let (text, graphs) = read_graphs(&input)?;
            let jobs = jobs.get();
            let opts = EnumerateOptions {
                classify: what.options(),
                chunk_size: chunk,
                jobs: Some(jobs),
                records,
                checkpoint,
                max_chunks,
            };
            let outcome = enumerate_graphs(&graphs, &input_digest(&text), &opts)?;
            if !outcome.is_complete() {
                eprintln!(
                    "stopped after {} of {} chunks; run again with the same checkpoint to continue",
                    outcome.chunks_done, outcome.chunks_total
                );
                return Ok(());
            }
            let mut result = outcome.summary;
            let nwr: Vec<Graph> = outcome.nwr.iter().map(|&i| graphs[i].graph.clone()).collect();
            if let Some(path) = nwr_out {
                let mut f = BufWriter::new(fs::File::create(path)?);
                for &i in &outcome.nwr {
                    writeln!(f, "{}", graphs[i].g6)?;
                }
                f.flush()?;
            }
            if let Some(prev) = prev_graphs {
                let prev_graphs: Vec<Graph> = prev.into_iter().map(|p| p.graph).collect();
                let bad = map_ordered(&prev_graphs, jobs, |g| find_semi_transitive_orientation(g).is_none());
                let prev_nwr: Vec<Graph> =
                    prev_graphs.into_iter().zip(bad).filter(|(_, b)| *b).map(|(g, _)| g).collect();
                for (&n, s) in result.sizes.iter_mut() {
                    let here: Vec<Graph> = nwr.iter().filter(|g| g.n() == n).cloned().collect();
                    let below: Vec<Graph> = prev_nwr.iter().filter(|g| g.n() + 1 == n).cloned().collect();
                    let r = minimal_graphs(&here, &below, jobs);
                    s.minimal = Some(r.minimal.len() as u64);
                    s.non_minimal = Some(r.non_minimal_count as u64);
                }
            }
            match summary {
                Some(path) => write_summary_csv(&result, BufWriter::new(fs::File::create(path)?))?,
                None => write_summary_csv(&result, &mut *out)?,
            }
        }
        Command::Minimal { input, prev, mode, k, jobs } => {
            if mode == Mode::KSt && k < 3 {
                return Err(Failure::Usage(format!("--k must be at least 3, got {k}")));
            }
            let prev_graphs = read_graph_file(&prev)?;
            let (_, graphs) = read_graphs(&input)?;
            let jobs = jobs.get();
            let filter = |items: Vec<InputGraph>| -> Vec<InputGraph> {
                let flags = map_ordered(&items, jobs, |it| has_defect(&it.graph, mode, k));
                items.into_iter().zip(flags).filter(|(_, b)| *b).map(|(it, _)| it).collect()
            };
            let bad = filter(graphs);
            let bad_prev: Vec<Graph> = filter(prev_graphs).into_iter().map(|it| it.graph).collect();
            let bad_graphs: Vec<Graph> = bad.iter().map(|it| it.graph.clone()).collect();
            let report = minimal_graphs(&bad_graphs, &bad_prev, jobs);
            for &i in &report.minimal {
                writeln!(out, "{}", bad[i].g6)?;
            }
            eprintln!(
                "with defect: {}  minimal: {}  non-minimal: {}",
                bad.len(),
                report.minimal.len(),
                report.non_minimal_count
            );
        }
        Command::Generate { family, size, edges } => {
            let g = generate(family, size)?;
            writeln!(out, "{}", encode_graph6(&g)?)?;
            if edges {
                writeln!(out, "{}", g.edge_list_string())?;
            }
        }
        Command::Separate3st { input, jobs } => {
            let (_, graphs) = read_graphs(&input)?;
            let plain: Vec<Graph> = graphs.iter().map(|it| it.graph.clone()).collect();
            let found = count_3st_not_st(&plain, jobs.get());
            for &i in &found {
                let o = find_k_shortcut_free_orientation(&plain[i], 3)?.expect("orientation exists");
                writeln!(out, "{}\t{}", graphs[i].g6, arcs_text(&o))?;
            }
            eprintln!("3-semi-transitive but not semi-transitive: {}", found.len());
        }
    }
    Ok(())
}

fn serde_json_line<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure::Lib(Error::Json(e)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(Error::Io(e))) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
