//! `sortlab`: dataset generation, benchmarking, verification, cost-model
//! reconciliation and charting.
//!
//! Exit codes: 0 success, 1 verification or benchmark failure, 2 usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use sortlab_core::bench::{self, BenchConfig, BenchmarkRecord, SummaryRow, CI_SIZES};
use sortlab_core::cost_model::{self, CaseKind, Reconciliation};
use sortlab_core::datagen::{self, DataCase, DEFAULT_RANGE, PROTOCOL_SIZES};
use sortlab_core::sort::{self, AlgorithmId, SortStats, DEFAULT_CUTOFF};
use sortlab_core::verify::{self, Execution, VerifyConfig};
use sortlab_core::{plot, BenchError};

#[derive(Parser)]
#[command(
    name = "sortlab",
    version,
    about = "Instrumented sorting benchmarks and cost-model checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate dataset files.
    Gen(GenArgs),
    /// Time the sorts and write raw and summary CSV.
    Bench(BenchArgs),
    /// Run the correctness suites.
    Verify(VerifyArgs),
    /// Compare predicted step counts with instrumented runs.
    Model(ModelArgs),
    /// Draw a summary CSV as an SVG line chart.
    Plot(PlotArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_delimiter = ',', default_values_t = PROTOCOL_SIZES.to_vec())]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Exclusive upper bound of generated values.
    #[arg(long, default_value_t = DEFAULT_RANGE)]
    range: u32,
    #[arg(long, value_delimiter = ',', default_values_t = DataCase::ALL.to_vec())]
    cases: Vec<DataCase>,
    #[arg(long, default_value = "datasets")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = CI_SIZES.to_vec(), conflicts_with = "paper_exact")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 10, conflicts_with = "paper_exact")]
    trials: usize,
    #[arg(long, default_value_t = 2, conflicts_with = "paper_exact")]
    warmups: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_delimiter = ',', default_values_t = AlgorithmId::ALL.to_vec())]
    algorithms: Vec<AlgorithmId>,
    #[arg(long, value_delimiter = ',', default_values_t = vec![DataCase::Average, DataCase::Best, DataCase::Worst])]
    cases: Vec<DataCase>,
    /// Slice length at or below which quick and merge sort switch to selection sort.
    #[arg(long, default_value_t = DEFAULT_CUTOFF)]
    cutoff: usize,
    /// Ten trials, no warmups, all eight protocol sizes.
    #[arg(long)]
    paper_exact: bool,
    #[arg(long, default_value = "bench-results")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 1024)]
    max_size: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_CUTOFF)]
    cutoff: usize,
    /// Check samples on one thread.
    #[arg(long)]
    sequential: bool,
    /// Test hook: verify a deliberately broken sort.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long, value_delimiter = ',', default_values_t = vec![10, 100, 1000])]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = CaseKind::ALL.to_vec())]
    cases: Vec<CaseKind>,
    /// Seed of the average-case input.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Relative tolerance for average-case quantities.
    #[arg(long, default_value_t = 0.5)]
    tolerance: f64,
    /// Write the reconciliation CSV here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    summary: PathBuf,
    #[arg(long)]
    case: DataCase,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Check(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Model(a) => cmd_model(a),
        Command::Plot(a) => cmd_plot(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("FAILED: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn create_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<(), Failure> {
    create_dir(&a.out_dir)?;
    for &size in &a.sizes {
        for &case in &a.cases {
            let d = datagen::generate(case, size, a.seed, a.range).map_err(|e| Failure::Usage(e.to_string()))?;
            let path = a.out_dir.join(format!("{case}-{size}.txt"));
            datagen::write_dataset(&d, &path).context("writing dataset")?;
            println!("{} {}", path.display(), datagen::header_line(&d));
        }
    }
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<(), Failure> {
    let mut cfg = if a.paper_exact {
        BenchConfig::paper_exact()
    } else {
        BenchConfig {
            sizes: a.sizes,
            trials: a.trials,
            warmups: a.warmups,
            ..BenchConfig::default()
        }
    };
    cfg.seed = a.seed;
    cfg.algorithms = a.algorithms;
    cfg.cases = a.cases;
    cfg.cutoff = a.cutoff;
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;

    create_dir(&a.out_dir)?;
    let mut meta = String::new();
    for (k, v) in cfg.metadata() {
        meta.push_str(&format!("{k}={v}\n"));
    }
    fs::write(a.out_dir.join("config.txt"), &meta).context("writing config.txt")?;
    eprint!("{meta}");

    let records = match bench::run_suite_with(&cfg, |r| {
        if r.trial == cfg.trials {
            eprintln!("done {} {} n={}", r.algorithm, r.case, r.size);
        }
    }) {
        Ok(r) => r,
        Err(e @ BenchError::Unsorted { .. }) => return Err(Failure::Check(e.to_string())),
        Err(e) => return Err(Failure::Other(e.into())),
    };
    let summary = bench::summarize(&records);
    let raw_path = a.out_dir.join("raw.csv");
    let summary_path = a.out_dir.join("summary.csv");
    bench::write_csv::<BenchmarkRecord>(&records, &raw_path).context("writing raw CSV")?;
    bench::write_csv::<SummaryRow>(&summary, &summary_path).context("writing summary CSV")?;
    println!(
        "{:<17} {:<12} {:>9} {:>14} {:>14}",
        "algorithm", "case", "size", "median_ns", "min_ns"
    );
    for r in &summary {
        println!(
            "{:<17} {:<12} {:>9} {:>14} {:>14}",
            r.algorithm, r.case, r.size, r.median_ns, r.min_ns
        );
    }
    println!("wrote {} and {}", raw_path.display(), summary_path.display());
    Ok(())
}

/// Sorts correctly, then breaks the result by swapping the ends.
fn faulty_sorter(alg: AlgorithmId, a: &mut [i32], cutoff: usize) -> SortStats {
    let st = sort::run(alg, a, cutoff);
    if a.len() >= 2 && a[0] != a[a.len() - 1] {
        a.swap(0, a.len() - 1);
    }
    st
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let cfg = VerifyConfig {
        samples: a.samples,
        max_size: a.max_size,
        seed: a.seed,
        cutoff: a.cutoff,
        execution: if a.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
        sorter: if a.inject_fault { faulty_sorter } else { sort::run },
    };
    let report = verify::run_verify(&cfg);
    for suite in &report.suites {
        println!("{suite}");
    }
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Failure::Check(c.to_string())),
    }
}

fn print_report(rep: &Reconciliation) {
    for row in &rep.rows {
        println!(
            "{:<17} {:<8} {:>6} {:<4} {:<24} {:>16} {:>12} {}",
            rep.algorithm,
            rep.case,
            rep.n,
            row.step,
            row.quantity,
            row.predicted.to_string(),
            row.measured,
            row.verdict.name()
        );
    }
    for note in &rep.notes {
        println!("  note: {note}");
    }
}

fn cmd_model(a: ModelArgs) -> Result<(), Failure> {
    if a.tolerance.is_nan() || a.tolerance < 0.0 {
        return Err(Failure::Usage("tolerance must be non-negative".into()));
    }
    println!(
        "{:<17} {:<8} {:>6} {:<4} {:<24} {:>16} {:>12} verdict",
        "algorithm", "case", "n", "step", "quantity", "predicted", "measured"
    );
    let mut reports = Vec::new();
    for &n in &a.sizes {
        for &case in &a.cases {
            let runs = [
                (cost_model::predict_rahmani(n, case), AlgorithmId::RahmaniFaithful),
                (cost_model::predict_insertion(n, case), AlgorithmId::Insertion),
            ];
            for (pred, alg) in runs {
                let m = cost_model::measure(alg, case, n, a.seed);
                let rep = cost_model::reconcile(&pred, &m, a.tolerance).map_err(|e| Failure::Other(e.into()))?;
                print_report(&rep);
                reports.push(rep);
            }
        }
    }
    if let Some(path) = &a.out {
        let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        cost_model::write_reconciliation_csv(&reports, file).context("writing reconciliation CSV")?;
    }
    match reports.iter().find(|r| !r.exact_rows_match()) {
        None => Ok(()),
        Some(r) => Err(Failure::Check(format!(
            "{} {} n={} disagrees with its exact prediction",
            r.algorithm, r.case, r.n
        ))),
    }
}

fn cmd_plot(a: PlotArgs) -> Result<(), Failure> {
    let rows =
        bench::read_summary_csv(&a.summary).map_err(|e| Failure::Usage(format!("{}: {e}", a.summary.display())))?;
    let svg = plot::render_svg(&rows, a.case).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut f = fs::File::create(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    f.write_all(svg.as_bytes()).context("writing SVG")?;
    println!("wrote {}", a.out.display());
    Ok(())
}
