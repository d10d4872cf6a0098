use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::uniform::RepNumber;

use super::ClassificationRecord;

/// Counts for one vertex count.
///
/// Equality ignores `elapsed_secs`, so two runs over the same input compare
/// equal whatever their timings.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SizeSummary {
    pub n: usize,
    pub total: u64,
    pub nwr: u64,
    /// Graphs with representation number `k` at index `k - 1`; the
    /// non-representable ones are `nwr`. Present only when computed.
    pub histogram: Option<Vec<u64>>,
    pub non_3st: Option<u64>,
    pub minimal: Option<u64>,
    pub non_minimal: Option<u64>,
    /// Summed per-graph compute time across workers.
    pub elapsed_secs: f64,
}

impl PartialEq for SizeSummary {
    fn eq(&self, other: &Self) -> bool {
        (self.n, self.total, self.nwr, &self.histogram, self.non_3st, self.minimal, self.non_minimal)
            == (other.n, other.total, other.nwr, &other.histogram, other.non_3st, other.minimal, other.non_minimal)
    }
}

impl Eq for SizeSummary {}

fn merge_opt(a: &mut Option<u64>, b: Option<u64>) {
    *a = match (*a, b) {
        (Some(x), Some(y)) => Some(x + y),
        (x, None) => x,
        (None, y) => y,
    };
}

impl SizeSummary {
    pub fn new(n: usize) -> Self {
        SizeSummary { n, ..Default::default() }
    }

    pub fn add(&mut self, rec: &ClassificationRecord, secs: f64) {
        self.total += 1;
        self.elapsed_secs += secs;
        if !rec.wr {
            self.nwr += 1;
        }
        if let Some(RepNumber::Finite(k)) = rec.repnum {
            let h = self.histogram.get_or_insert_with(Vec::new);
            if h.len() < k {
                h.resize(k, 0);
            }
            h[k - 1] += 1;
        } else if rec.repnum.is_some() {
            self.histogram.get_or_insert_with(Vec::new);
        }
        if let Some(ok) = rec.k3 {
            *self.non_3st.get_or_insert(0) += u64::from(!ok);
        }
    }

    pub fn merge(&mut self, other: &SizeSummary) {
        self.total += other.total;
        self.nwr += other.nwr;
        self.elapsed_secs += other.elapsed_secs;
        if let Some(oh) = &other.histogram {
            let h = self.histogram.get_or_insert_with(Vec::new);
            if h.len() < oh.len() {
                h.resize(oh.len(), 0);
            }
            for (a, b) in h.iter_mut().zip(oh) {
                *a += b;
            }
        }
        merge_opt(&mut self.non_3st, other.non_3st);
        merge_opt(&mut self.minimal, other.minimal);
        merge_opt(&mut self.non_minimal, other.non_minimal);
    }

    /// Histogram including the non-representable graphs under `Infinite`.
    pub fn rep_histogram(&self) -> Option<BTreeMap<RepNumber, u64>> {
        let h = self.histogram.as_ref()?;
        let mut m: BTreeMap<RepNumber, u64> =
            h.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (RepNumber::Finite(i + 1), c)).collect();
        if self.nwr > 0 {
            m.insert(RepNumber::Infinite, self.nwr);
        }
        Some(m)
    }

    pub fn nwr_percent(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            100.0 * self.nwr as f64 / self.total as f64
        }
    }
}

/// Per-size summaries keyed by vertex count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub sizes: BTreeMap<usize, SizeSummary>,
}

impl EnumerationSummary {
    pub fn add(&mut self, rec: &ClassificationRecord, secs: f64) {
        self.sizes.entry(rec.n).or_insert_with(|| SizeSummary::new(rec.n)).add(rec, secs);
    }

    pub fn merge(&mut self, other: &EnumerationSummary) {
        for (&n, s) in &other.sizes {
            self.sizes.entry(n).or_insert_with(|| SizeSummary::new(n)).merge(s);
        }
    }

    pub fn total(&self) -> u64 {
        self.sizes.values().map(|s| s.total).sum()
    }
}

#[derive(Serialize, Deserialize)]
struct Row {
    n: usize,
    total: u64,
    nwr: u64,
    percent: String,
    elapsed: String,
    minimal: Option<u64>,
    non_minimal: Option<u64>,
    non_3st: Option<u64>,
    histogram: Option<String>,
}

fn histogram_text(h: &[u64]) -> String {
    h.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

/// Writes one CSV row per vertex count. The histogram column lists the
/// counts for `k = 1, 2, ...` separated by spaces.
pub fn write_summary_csv<W: Write>(summary: &EnumerationSummary, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for s in summary.sizes.values() {
        w.serialize(Row {
            n: s.n,
            total: s.total,
            nwr: s.nwr,
            percent: format!("{:.2}", s.nwr_percent()),
            elapsed: format!("{:.3}", s.elapsed_secs),
            minimal: s.minimal,
            non_minimal: s.non_minimal,
            non_3st: s.non_3st,
            histogram: s.histogram.as_deref().map(histogram_text),
        })
        .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a summary written by [`write_summary_csv`].
pub fn parse_summary_csv<R: Read>(input: R) -> Result<EnumerationSummary> {
    let mut r = csv::Reader::from_reader(input);
    let mut summary = EnumerationSummary::default();
    for (i, row) in r.deserialize::<Row>().enumerate() {
        let line = i + 2;
        let bad = |what: &str| Error::Line { line, source: Box::new(Error::Malformed(what.to_string())) };
        let row = row.map_err(|e| bad(&e.to_string()))?;
        let histogram = match row.histogram {
            None => None,
            Some(text) => Some(
                text.split_whitespace()
                    .map(|c| c.parse::<u64>().map_err(|_| bad("histogram count")))
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let elapsed_secs = row.elapsed.parse::<f64>().map_err(|_| bad("elapsed"))?;
        summary.sizes.insert(
            row.n,
            SizeSummary {
                n: row.n,
                total: row.total,
                nwr: row.nwr,
                histogram,
                non_3st: row.non_3st,
                minimal: row.minimal,
                non_minimal: row.non_minimal,
                elapsed_secs,
            },
        );
    }
    Ok(summary)
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}
