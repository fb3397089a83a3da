//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

use std::time::{Duration, Instant};

use sortlab_core::bench::{self, BenchConfig, BenchmarkRecord, SummaryRow};
use sortlab_core::cost_model::{self, CaseKind, Verdict};
use sortlab_core::datagen::{self, DataCase, KeyMix, DEFAULT_RANGE};
use sortlab_core::plot;
use sortlab_core::sort::{self, AlgorithmId, SortVariant, TaggedRecord, DEFAULT_CUTOFF};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn tri(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn oracle_correctness() -> Outcome {
    let start = Instant::now();
    for i in 0..1000u64 {
        let mix = if i % 2 == 0 {
            KeyMix::Spread
        } else {
            KeyMix::DuplicateHeavy
        };
        let input = datagen::random_sample(1, i, 1024, mix);
        let mut reference = input.clone();
        reference.sort();
        for alg in AlgorithmId::ALL {
            let mut a = input.clone();
            sort::run(alg, &mut a, DEFAULT_CUTOFF);
            ensure(a == reference, || {
                format!("{alg} differs on sample {i} (n={})", input.len())
            })?;
        }
    }
    within(Duration::from_secs(10), start)
}

fn definition_example() -> Outcome {
    const INPUT: [i32; 9] = [13, 4, 1, 45, 30, 8, 10, 7, 5];
    const OUTPUT: [i32; 9] = [1, 4, 5, 7, 8, 10, 13, 30, 45];
    for alg in AlgorithmId::ALL {
        for cutoff in [0, DEFAULT_CUTOFF] {
            let mut a = INPUT;
            sort::run(alg, &mut a, cutoff);
            ensure(a == OUTPUT, || format!("{alg} cutoff={cutoff} gave {a:?}"))?;
        }
    }
    Ok(())
}

fn best_case_exactness() -> Outcome {
    let start = Instant::now();
    for n in [500usize, 2500, 5000] {
        for v in [SortVariant::Faithful, SortVariant::Stable] {
            let mut a: Vec<i32> = (0..n as i32).collect();
            let st = sort::rahmani_sort(&mut a, v);
            let m = n as u64 - 1;
            ensure(
                st.element_moves == 0 && st.isearch_calls == 0 && st.early_continues == m && st.key_comparisons == m,
                || format!("{v:?} n={n}: {st:?}"),
            )?;
        }
    }
    within(Duration::from_secs(1), start)
}

fn worst_case_exactness() -> Outcome {
    let start = Instant::now();
    for n in [10usize, 100, 1000] {
        let desc: Vec<i32> = (0..n as i32).rev().collect();
        let mut a = desc.clone();
        let st = sort::rahmani_sort(&mut a, SortVariant::Faithful);
        ensure(st.isearch_calls == 0 && st.shifts() == tri(n as u64), || {
            format!("rahmani n={n}: {st:?}")
        })?;
        let mut b = desc;
        let st = sort::insertion_sort(&mut b);
        ensure(st.shifts() == tri(n as u64), || format!("insertion n={n}: {st:?}"))?;
    }
    within(Duration::from_secs(1), start)
}

fn probe_bound() -> Outcome {
    let start = Instant::now();
    for (k, n) in [10usize, 100, 1000, 5000].into_iter().enumerate() {
        for v in [SortVariant::Faithful, SortVariant::Stable] {
            let mut a = datagen::distinct_permutation(n, 500 + k as u64);
            let mut worst = None;
            let st = sort::rahmani_sort_observed(&mut a, v, |m, p| {
                if p > m.ilog2() + 1 {
                    worst.get_or_insert((m, p));
                }
            });
            ensure(worst.is_none(), || format!("{v:?} n={n}: probes/segment {worst:?}"))?;
            if n == 1000 {
                let expected: f64 = (2..=n).map(|i| (i as f64).log2()).sum();
                let got = st.isearch_probes as f64;
                ensure((got - expected).abs() <= 0.5 * expected, || {
                    format!("{v:?} total probes {got} vs sum log2 i = {expected:.1}")
                })?;
            }
        }
    }
    within(Duration::from_secs(1), start)
}

fn comparison_dominance() -> Outcome {
    let start = Instant::now();
    for n in [500usize, 5000] {
        for seed in 0..50u64 {
            let input = datagen::distinct_permutation(n, 10_000 + seed);
            let mut b = input.clone();
            let ins = sort::insertion_sort(&mut b).key_comparisons;
            for v in [SortVariant::Faithful, SortVariant::Stable] {
                let mut a = input.clone();
                let st = sort::rahmani_sort(&mut a, v);
                let total = st.key_comparisons + st.isearch_probes;
                ensure(total < ins, || format!("{v:?} n={n} seed={seed}: {total} >= {ins}"))?;
            }
        }
    }
    within(Duration::from_secs(5), start)
}

fn stability() -> Outcome {
    for i in 0..200u64 {
        let keys = datagen::random_sample(7, i, 512, KeyMix::DuplicateHeavy);
        let records = TaggedRecord::tag_all(&keys);
        let mut reference = records.clone();
        reference.sort_by_key(|r| r.key);
        for alg in [
            AlgorithmId::RahmaniStable,
            AlgorithmId::Insertion,
            AlgorithmId::Bubble,
            AlgorithmId::Merge,
        ] {
            let out = sort::sort_tagged(alg, &records).map_err(|e| e.to_string())?;
            ensure(out == reference, || format!("{alg} unstable on sample {i}"))?;
        }
    }
    let witness = TaggedRecord::tag_all(&[5, 5, 9, 5]);
    let out = sort::sort_tagged(AlgorithmId::RahmaniFaithful, &witness).map_err(|e| e.to_string())?;
    let expected = [(5, 3), (5, 0), (5, 1), (9, 2)].map(|(k, a)| TaggedRecord::new(k, a));
    ensure(out == expected, || format!("faithful witness gave {out:?}"))
}

fn cost_model_reconciliation() -> Outcome {
    let start = Instant::now();
    for n in [10usize, 100, 1000] {
        for case in [CaseKind::Best, CaseKind::Worst] {
            let runs = [
                (cost_model::predict_rahmani(n, case), AlgorithmId::RahmaniFaithful),
                (cost_model::predict_rahmani(n, case), AlgorithmId::RahmaniStable),
                (cost_model::predict_insertion(n, case), AlgorithmId::Insertion),
            ];
            for (pred, alg) in runs {
                let rep = cost_model::reconcile(&pred, &cost_model::measure(alg, case, n, 0), 0.0)
                    .map_err(|e| e.to_string())?;
                if let Some(r) = rep.rows.iter().find(|r| r.verdict != Verdict::Exact) {
                    return Err(format!(
                        "{alg} {case} n={n} {}: {} vs {}",
                        r.step, r.predicted, r.measured
                    ));
                }
            }
        }
    }
    within(Duration::from_secs(1), start)
}

fn wall_clock_substitute() -> Outcome {
    let start = Instant::now();
    let cfg = BenchConfig {
        sizes: vec![50_000],
        trials: 10,
        algorithms: vec![AlgorithmId::RahmaniFaithful, AlgorithmId::Bubble],
        cases: vec![DataCase::Average],
        ..BenchConfig::default()
    };
    let records = bench::run_suite(&cfg).map_err(|e| e.to_string())?;
    ensure(records.len() == 20, || format!("{} records", records.len()))?;
    let summary = bench::summarize(&records);
    let median = |alg| {
        summary
            .iter()
            .find(|r| r.algorithm == alg)
            .map(|r| r.median_ns)
            .unwrap_or(0)
    };
    let (fast, slow) = (median(AlgorithmId::RahmaniFaithful), median(AlgorithmId::Bubble));
    ensure(fast > 0 && slow >= 5 * fast, || {
        format!("bubble median {slow} ns vs rahmani {fast} ns")
    })?;
    println!(
        "     bubble/rahmani median ratio at n=50000: {:.1}",
        slow as f64 / fast as f64
    );

    // pipeline artifacts for every case
    let small = BenchConfig {
        sizes: vec![500, 2500],
        trials: 3,
        warmups: 0,
        cases: DataCase::ALL.to_vec(),
        ..BenchConfig::default()
    };
    let records = bench::run_suite(&small).map_err(|e| e.to_string())?;
    let summary = bench::summarize(&records);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let raw_path = dir.path().join("raw.csv");
    let sum_path = dir.path().join("summary.csv");
    bench::write_csv::<BenchmarkRecord>(&records, &raw_path).map_err(|e| e.to_string())?;
    bench::write_csv::<SummaryRow>(&summary, &sum_path).map_err(|e| e.to_string())?;
    let raw_rows = csv::Reader::from_path(&raw_path)
        .map_err(|e| e.to_string())?
        .records()
        .count();
    ensure(raw_rows == records.len(), || format!("raw CSV has {raw_rows} rows"))?;
    let back = bench::read_summary_csv(&sum_path).map_err(|e| e.to_string())?;
    ensure(back == summary, || "summary CSV did not round-trip".into())?;
    for case in DataCase::ALL {
        let svg = plot::render_svg(&back, case).map_err(|e| e.to_string())?;
        let doc = roxmltree::Document::parse(&svg).map_err(|e| format!("{case}: {e}"))?;
        let lines = doc.descendants().filter(|n| n.has_tag_name("polyline")).count();
        ensure(lines == AlgorithmId::ALL.len(), || format!("{case}: {lines} polylines"))?;
    }
    within(Duration::from_secs(120), start)
}

fn dataset_determinism() -> Outcome {
    let start = Instant::now();
    let dirs = [
        tempfile::tempdir().map_err(|e| e.to_string())?,
        tempfile::tempdir().map_err(|e| e.to_string())?,
    ];
    for dir in &dirs {
        for size in [500usize, 2500, 5000] {
            for case in DataCase::ALL {
                let d = datagen::generate(case, size, 42, DEFAULT_RANGE).map_err(|e| e.to_string())?;
                let path = dir.path().join(format!("{case}-{size}.txt"));
                datagen::write_dataset(&d, &path).map_err(|e| e.to_string())?;
                let back = datagen::read_dataset(&path).map_err(|e| e.to_string())?;
                ensure(back == d, || format!("{case}-{size} did not round-trip"))?;
            }
        }
    }
    for size in [500usize, 2500, 5000] {
        for case in DataCase::ALL {
            let name = format!("{case}-{size}.txt");
            let a = std::fs::read(dirs[0].path().join(&name)).map_err(|e| e.to_string())?;
            let b = std::fs::read(dirs[1].path().join(&name)).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{name} differs between runs"))?;
        }
    }
    within(Duration::from_secs(1), start)
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle correctness, 1000 seeded arrays", oracle_correctness),
        ("definition example sorted by every algorithm", definition_example),
        ("best-case counters exact", best_case_exactness),
        ("worst-case counters exact", worst_case_exactness),
        ("search probe bound and log-sum total", probe_bound),
        ("comparison dominance over insertion sort", comparison_dominance),
        ("stability and faithful-variant witness", stability),
        ("cost-model reconciliation exact", cost_model_reconciliation),
        ("wall-clock substitute and bench artifacts", wall_clock_substitute),
        ("dataset determinism and round trip", dataset_determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
