//! Batch correctness suites: oracle equivalence, stability, counter
//! exactness and search probe bounds over seeded random samples.
//!
//! Samples are independent, so with the `parallel` feature they are checked
//! on the rayon pool. Results are collected in sample order either way, which
//! keeps the reported counterexample deterministic.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::cost_model::{self, CaseKind, Verdict};
use crate::datagen::{self, KeyMix};
use crate::sort::{self, AlgorithmId, SortStats, SortVariant, TaggedRecord, DEFAULT_CUTOFF};

/// The sort entry point under test; swappable so a broken build can be
/// simulated.
pub type Sorter = fn(AlgorithmId, &mut [i32], usize) -> SortStats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses rayon when built with the `parallel` feature, sequential otherwise.
    #[default]
    Parallel,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub samples: usize,
    pub max_size: usize,
    pub seed: u64,
    pub cutoff: usize,
    pub execution: Execution,
    pub sorter: Sorter,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            max_size: 1024,
            seed: 42,
            cutoff: DEFAULT_CUTOFF,
            execution: Execution::default(),
            sorter: sort::run,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub algorithm: Option<AlgorithmId>,
    pub detail: String,
    pub input: Vec<i32>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(alg) = self.algorithm {
            write!(f, "{alg}: ")?;
        }
        const SHOWN: usize = 64;
        if self.input.len() <= SHOWN {
            write!(f, "{} on input {:?}", self.detail, self.input)
        } else {
            write!(
                f,
                "{} on input {:?} ... ({} elements)",
                self.detail,
                &self.input[..SHOWN],
                self.input.len()
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub failure: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.name, self.checks)?;
        for n in &self.notes {
            write!(f, "\n     {n}")?;
        }
        if let Some(c) = &self.failure {
            write!(f, "\n     counterexample: {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.suites.iter().find_map(|s| s.failure.as_ref())
    }
}

/// Maps `f` over `0..count`, preserving index order in the result.
pub fn map_samples<R, F>(count: usize, execution: Execution, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..count as u64).into_par_iter().map(f).collect(),
        _ => (0..count as u64).map(f).collect(),
    }
}

/// The shortest failing input, earliest sample first among equals.
fn first_failure(results: Vec<Option<Counterexample>>) -> Option<Counterexample> {
    results.into_iter().flatten().min_by_key(|c| c.input.len())
}

fn mix_for(index: u64) -> KeyMix {
    if index.is_multiple_of(2) {
        KeyMix::Spread
    } else {
        KeyMix::DuplicateHeavy
    }
}

/// Every algorithm agrees with the standard library sort, keeps its counters
/// consistent, and in-place algorithms hold at most one auxiliary key.
pub fn oracle_equivalence(cfg: &VerifyConfig) -> SuiteOutcome {
    let results = map_samples(cfg.samples, cfg.execution, |i| {
        let input = datagen::random_sample(cfg.seed, i, cfg.max_size, mix_for(i));
        let mut reference = input.clone();
        reference.sort_unstable();
        AlgorithmId::ALL.into_iter().find_map(|alg| {
            let mut a = input.clone();
            let st = (cfg.sorter)(alg, &mut a, cfg.cutoff);
            let detail = if a != reference {
                "output differs from reference sort"
            } else if !st.is_consistent() {
                "inconsistent counters"
            } else if alg.is_in_place() && st.aux_keys > 1 {
                "auxiliary key storage above one"
            } else {
                return None;
            };
            Some(Counterexample {
                algorithm: Some(alg),
                detail: detail.into(),
                input: input.clone(),
            })
        })
    });
    SuiteOutcome {
        name: "oracle-equivalence",
        checks: cfg.samples * AlgorithmId::ALL.len(),
        failure: first_failure(results),
        notes: vec![],
    }
}

const STABLE: [AlgorithmId; 4] = [
    AlgorithmId::RahmaniStable,
    AlgorithmId::Insertion,
    AlgorithmId::Bubble,
    AlgorithmId::Merge,
];

/// Algorithms documented as stable keep equal keys in arrival order.
pub fn stability(cfg: &VerifyConfig) -> SuiteOutcome {
    let results = map_samples(cfg.samples, cfg.execution, |i| {
        let keys = datagen::random_sample(cfg.seed ^ 0x5eed, i, cfg.max_size, KeyMix::DuplicateHeavy);
        let records = TaggedRecord::tag_all(&keys);
        STABLE.into_iter().find_map(|alg| {
            let out = sort::sort_tagged(alg, &records).expect("arrivals are unique");
            let keys_sorted = out.windows(2).all(|w| w[0].key <= w[1].key);
            (!keys_sorted || !sort::preserves_arrival_order(&out)).then(|| Counterexample {
                algorithm: Some(alg),
                detail: "equal keys left arrival order".into(),
                input: keys.clone(),
            })
        })
    });
    SuiteOutcome {
        name: "stability",
        checks: cfg.samples * STABLE.len(),
        failure: first_failure(results),
        notes: vec![],
    }
}

/// The faithful variant's instability on `[5, 5, 9, 5]` reproduces exactly.
pub fn faithful_witness() -> SuiteOutcome {
    let witness = TaggedRecord::tag_all(&[5, 5, 9, 5]);
    let out = sort::sort_tagged(AlgorithmId::RahmaniFaithful, &witness).expect("unique arrivals");
    let arrivals: Vec<usize> = out.iter().map(|r| r.arrival).collect();
    let show = |rs: &[TaggedRecord]| rs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let failure = (arrivals != [3, 0, 1, 2]).then(|| Counterexample {
        algorithm: Some(AlgorithmId::RahmaniFaithful),
        detail: format!("expected arrival order [3, 0, 1, 2], got {arrivals:?}"),
        input: vec![5, 5, 9, 5],
    });
    SuiteOutcome {
        name: "faithful-witness",
        checks: 1,
        failure,
        notes: vec![format!(
            "rahmani-faithful: not stable (witness {} -> {})",
            show(&witness),
            show(&out)
        )],
    }
}

/// Predicted step counts match the counters exactly on ascending and
/// descending distinct inputs.
pub fn counter_exactness() -> SuiteOutcome {
    let mut checks = 0;
    let mut failure = None;
    'outer: for n in [10, 100, 1000] {
        for case in [CaseKind::Best, CaseKind::Worst] {
            let runs = [
                (cost_model::predict_rahmani(n, case), AlgorithmId::RahmaniFaithful),
                (cost_model::predict_rahmani(n, case), AlgorithmId::RahmaniStable),
                (cost_model::predict_insertion(n, case), AlgorithmId::Insertion),
            ];
            for (pred, alg) in runs {
                let m = cost_model::measure(alg, case, n, 0);
                let rep = cost_model::reconcile(&pred, &m, 0.0).expect("same algorithm and size");
                checks += rep.rows.len();
                if let Some(bad) = rep.rows.iter().find(|r| r.verdict != Verdict::Exact) {
                    failure = Some(Counterexample {
                        algorithm: Some(alg),
                        detail: format!(
                            "{case} n={n} {} ({}) predicted {} measured {}",
                            bad.step, bad.quantity, bad.predicted, bad.measured
                        ),
                        input: cost_model::canonical_input(case, n.min(16), 0),
                    });
                    break 'outer;
                }
            }
        }
    }
    SuiteOutcome {
        name: "counter-exactness",
        checks,
        failure,
        notes: vec![],
    }
}

/// No position search on a segment of length `m` takes more than
/// `floor(log2 m) + 1` probes.
pub fn probe_bound(cfg: &VerifyConfig) -> SuiteOutcome {
    let results = map_samples(cfg.samples, cfg.execution, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xb0b);
        rng.set_stream(i);
        let input = datagen::distinct_permutation(rng.gen_range(0..=cfg.max_size), rng.gen());
        [SortVariant::Faithful, SortVariant::Stable].into_iter().find_map(|v| {
            let mut a = input.clone();
            let mut worst: Option<(usize, u32)> = None;
            sort::rahmani_sort_observed(&mut a, v, |m, p| {
                if p > m.ilog2() + 1 && worst.is_none() {
                    worst = Some((m, p));
                }
            });
            worst.map(|(m, p)| Counterexample {
                algorithm: Some(match v {
                    SortVariant::Faithful => AlgorithmId::RahmaniFaithful,
                    SortVariant::Stable => AlgorithmId::RahmaniStable,
                }),
                detail: format!("{p} probes on a segment of length {m}"),
                input: input.clone(),
            })
        })
    });
    SuiteOutcome {
        name: "probe-bound",
        checks: cfg.samples * 2,
        failure: first_failure(results),
        notes: vec![],
    }
}

pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    VerifyReport {
        suites: vec![
            oracle_equivalence(cfg),
            stability(cfg),
            faithful_witness(),
            counter_exactness(),
            probe_bound(cfg),
        ],
    }
}
