//! Wall-clock benchmarking of the sorts.
//!
//! Every trial copies the dataset into a fresh buffer, reads the monotonic
//! clock, runs the sort, reads the clock again, and only then checks the
//! output. Trials run one at a time on the calling thread.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::datagen::{self, DataCase, Dataset, DEFAULT_RANGE, PROTOCOL_SIZES};
use crate::error::BenchError;
use crate::sort::{self, AlgorithmId, SortStats, DEFAULT_CUTOFF};

pub const RAW_CSV_HEADER: &str =
    "algorithm,case,size,trial,elapsed_ns,key_comparisons,element_moves,isearch_calls,isearch_probes,early_continues";
pub const SUMMARY_CSV_HEADER: &str = "algorithm,case,size,min_ns,median_ns,mean_ns,max_ns";

/// Sizes that keep a full run of every algorithm to a few minutes.
pub const CI_SIZES: [usize; 4] = [500, 2500, 5000, 50_000];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub warmups: usize,
    pub seed: u64,
    pub algorithms: Vec<AlgorithmId>,
    pub cases: Vec<DataCase>,
    pub cutoff: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: CI_SIZES.to_vec(),
            trials: 10,
            warmups: 2,
            seed: 42,
            algorithms: AlgorithmId::ALL.to_vec(),
            cases: vec![DataCase::Average, DataCase::Best, DataCase::Worst],
            cutoff: DEFAULT_CUTOFF,
        }
    }
}

impl BenchConfig {
    /// Ten trials, no warmups, the eight protocol sizes.
    pub fn paper_exact() -> Self {
        Self {
            sizes: PROTOCOL_SIZES.to_vec(),
            trials: 10,
            warmups: 0,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.trials == 0 {
            return Err(BenchError::Config("trials must be at least 1".into()));
        }
        if self.sizes.is_empty() {
            return Err(BenchError::Config("sizes must not be empty".into()));
        }
        Ok(())
    }

    /// Key/value lines describing the run, for a sidecar metadata file.
    pub fn metadata(&self) -> Vec<(&'static str, String)> {
        let join = |v: Vec<String>| v.join(",");
        vec![
            ("sizes", join(self.sizes.iter().map(ToString::to_string).collect())),
            ("trials", self.trials.to_string()),
            ("warmups", self.warmups.to_string()),
            ("seed", self.seed.to_string()),
            ("range", DEFAULT_RANGE.to_string()),
            (
                "algorithms",
                join(self.algorithms.iter().map(ToString::to_string).collect()),
            ),
            ("cases", join(self.cases.iter().map(ToString::to_string).collect())),
            ("cutoff", self.cutoff.to_string()),
            (
                "paper_exact",
                (self.warmups == 0 && self.trials == 10 && self.sizes == PROTOCOL_SIZES).to_string(),
            ),
            ("clock", "std::time::Instant (monotonic)".to_owned()),
            (
                "cpu_pinning",
                "none; timings depend on machine load and frequency scaling".to_owned(),
            ),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchmarkRecord {
    pub algorithm: AlgorithmId,
    pub case: DataCase,
    pub size: usize,
    pub trial: usize,
    pub elapsed_ns: u64,
    pub stats: SortStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SummaryRow {
    pub algorithm: AlgorithmId,
    pub case: DataCase,
    pub size: usize,
    pub min_ns: u64,
    pub median_ns: u64,
    /// Floor of the arithmetic mean.
    pub mean_ns: u64,
    pub max_ns: u64,
}

/// Times one run of `alg` on a fresh copy of `d`.
pub fn run_trial(alg: AlgorithmId, d: &Dataset, cutoff: usize, trial: usize) -> Result<BenchmarkRecord, BenchError> {
    let mut work = d.values.clone();
    let start = Instant::now();
    let stats = sort::run(alg, std::hint::black_box(&mut work), cutoff);
    let elapsed = start.elapsed();
    if let Some(index) = sort::first_inversion(&work) {
        return Err(BenchError::Unsorted {
            algorithm: alg,
            case: d.case.name(),
            size: d.size(),
            index,
        });
    }
    Ok(BenchmarkRecord {
        algorithm: alg,
        case: d.case,
        size: d.size(),
        trial,
        elapsed_ns: u64::try_from(elapsed.as_nanos()).unwrap_or(u64::MAX),
        stats,
    })
}

/// Runs every (case, size, algorithm) combination in that order, with
/// `warmups` untimed runs before `trials` timed ones.
pub fn run_suite(cfg: &BenchConfig) -> Result<Vec<BenchmarkRecord>, BenchError> {
    run_suite_with(cfg, |_| {})
}

/// [`run_suite`] with a callback after each finished trial, for progress output.
pub fn run_suite_with(
    cfg: &BenchConfig,
    mut progress: impl FnMut(&BenchmarkRecord),
) -> Result<Vec<BenchmarkRecord>, BenchError> {
    cfg.validate()?;
    let mut out = Vec::with_capacity(cfg.algorithms.len() * cfg.cases.len() * cfg.sizes.len() * cfg.trials);
    if cfg.algorithms.is_empty() {
        return Ok(out);
    }
    for &case in &cfg.cases {
        for &size in &cfg.sizes {
            let d = datagen::generate(case, size, cfg.seed, DEFAULT_RANGE)
                .map_err(|e| BenchError::Config(e.to_string()))?;
            for &alg in &cfg.algorithms {
                for _ in 0..cfg.warmups {
                    run_trial(alg, &d, cfg.cutoff, 0)?;
                }
                for trial in 1..=cfg.trials {
                    let rec = run_trial(alg, &d, cfg.cutoff, trial)?;
                    progress(&rec);
                    out.push(rec);
                }
            }
        }
    }
    Ok(out)
}

/// One row per (algorithm, case, size), in first-seen order. The median of an
/// even number of trials is the lower middle value.
pub fn summarize(records: &[BenchmarkRecord]) -> Vec<SummaryRow> {
    let mut order = Vec::new();
    let mut groups: BTreeMap<(AlgorithmId, DataCase, usize), Vec<u64>> = BTreeMap::new();
    for r in records {
        let key = (r.algorithm, r.case, r.size);
        groups
            .entry(key)
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(r.elapsed_ns);
    }
    order
        .into_iter()
        .map(|key @ (algorithm, case, size)| {
            let mut t = groups.remove(&key).unwrap_or_default();
            t.sort_unstable();
            let sum: u128 = t.iter().map(|&x| u128::from(x)).sum();
            SummaryRow {
                algorithm,
                case,
                size,
                min_ns: t[0],
                median_ns: t[(t.len() - 1) / 2],
                mean_ns: (sum / t.len() as u128) as u64,
                max_ns: t[t.len() - 1],
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct RawRow {
    algorithm: String,
    case: String,
    size: usize,
    trial: usize,
    elapsed_ns: u64,
    key_comparisons: u64,
    element_moves: u64,
    isearch_calls: u64,
    isearch_probes: u64,
    early_continues: u64,
}

#[derive(Serialize, Deserialize)]
struct SummaryCsvRow {
    algorithm: String,
    case: String,
    size: usize,
    min_ns: u64,
    median_ns: u64,
    mean_ns: u64,
    max_ns: u64,
}

/// Rows that can be written to one of the two CSV schemas.
pub trait CsvRows {
    const HEADER: &'static str;
    fn write_rows<W: Write>(rows: &[Self], w: &mut csv::Writer<W>) -> csv::Result<()>
    where
        Self: Sized;
}

impl CsvRows for BenchmarkRecord {
    const HEADER: &'static str = RAW_CSV_HEADER;

    fn write_rows<W: Write>(rows: &[Self], w: &mut csv::Writer<W>) -> csv::Result<()> {
        for r in rows {
            w.serialize(RawRow {
                algorithm: r.algorithm.name().to_owned(),
                case: r.case.name().to_owned(),
                size: r.size,
                trial: r.trial,
                elapsed_ns: r.elapsed_ns,
                key_comparisons: r.stats.key_comparisons,
                element_moves: r.stats.element_moves,
                isearch_calls: r.stats.isearch_calls,
                isearch_probes: r.stats.isearch_probes,
                early_continues: r.stats.early_continues,
            })?;
        }
        Ok(())
    }
}

impl CsvRows for SummaryRow {
    const HEADER: &'static str = SUMMARY_CSV_HEADER;

    fn write_rows<W: Write>(rows: &[Self], w: &mut csv::Writer<W>) -> csv::Result<()> {
        for r in rows {
            w.serialize(SummaryCsvRow {
                algorithm: r.algorithm.name().to_owned(),
                case: r.case.name().to_owned(),
                size: r.size,
                min_ns: r.min_ns,
                median_ns: r.median_ns,
                mean_ns: r.mean_ns,
                max_ns: r.max_ns,
            })?;
        }
        Ok(())
    }
}

/// Writes the header followed by one line per row, `\n` terminated.
pub fn write_csv_to<T: CsvRows, W: Write>(rows: &[T], out: W) -> Result<(), BenchError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(T::HEADER.split(','))?;
    T::write_rows(rows, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn write_csv<T: CsvRows>(rows: &[T], destination: &Path) -> Result<(), BenchError> {
    write_csv_to(rows, File::create(destination)?)
}

fn bad_field(what: &str, value: &str) -> BenchError {
    BenchError::Config(format!("unknown {what} `{value}` in CSV"))
}

fn check_header<R: Read>(r: &mut csv::Reader<R>, expected: &str) -> Result<(), BenchError> {
    let found = r.headers()?.iter().collect::<Vec<_>>().join(",");
    if found != expected {
        return Err(BenchError::Config(format!("unexpected CSV header `{found}`")));
    }
    Ok(())
}

pub fn read_summary_csv_from<R: Read>(input: R) -> Result<Vec<SummaryRow>, BenchError> {
    let mut r = csv::Reader::from_reader(input);
    check_header(&mut r, SUMMARY_CSV_HEADER)?;
    r.deserialize::<SummaryCsvRow>()
        .map(|row| {
            let row = row?;
            Ok(SummaryRow {
                algorithm: row
                    .algorithm
                    .parse()
                    .map_err(|_| bad_field("algorithm", &row.algorithm))?,
                case: row.case.parse().map_err(|_| bad_field("case", &row.case))?,
                size: row.size,
                min_ns: row.min_ns,
                median_ns: row.median_ns,
                mean_ns: row.mean_ns,
                max_ns: row.max_ns,
            })
        })
        .collect()
}

pub fn read_summary_csv(source: &Path) -> Result<Vec<SummaryRow>, BenchError> {
    read_summary_csv_from(File::open(source)?)
}

/// Parses a raw CSV back into records. Counters the schema does not carry
/// (outer iterations, placements, swaps, auxiliary keys) read back as zero.
pub fn read_records_csv_from<R: Read>(input: R) -> Result<Vec<BenchmarkRecord>, BenchError> {
    let mut r = csv::Reader::from_reader(input);
    check_header(&mut r, RAW_CSV_HEADER)?;
    r.deserialize::<RawRow>()
        .map(|row| {
            let row = row?;
            Ok(BenchmarkRecord {
                algorithm: row
                    .algorithm
                    .parse()
                    .map_err(|_| bad_field("algorithm", &row.algorithm))?,
                case: row.case.parse().map_err(|_| bad_field("case", &row.case))?,
                size: row.size,
                trial: row.trial,
                elapsed_ns: row.elapsed_ns,
                stats: SortStats {
                    key_comparisons: row.key_comparisons,
                    element_moves: row.element_moves,
                    isearch_calls: row.isearch_calls,
                    isearch_probes: row.isearch_probes,
                    early_continues: row.early_continues,
                    ..SortStats::default()
                },
            })
        })
        .collect()
}
