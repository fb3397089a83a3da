//! Reproducible benchmark datasets.
//!
//! Values come from ChaCha8 (`rand_chacha`) seeded with `seed_from_u64`, and
//! are mapped into `[0, range)` by `rand`'s uniform integer sampler, which
//! rejects draws from the biased tail instead of reducing them modulo the
//! range. Best, worst and half-sorted sets are derived from the average set
//! of the same seed.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ContractError, DatasetError};

/// Exclusive upper bound used for generated values: the largest `i32`.
pub const DEFAULT_RANGE: u32 = 2_147_483_647;

/// Element counts of the full benchmark protocol.
pub const PROTOCOL_SIZES: [usize; 8] = [500, 2500, 5000, 50_000, 100_000, 625_000, 1_250_000, 2_500_000];

const MAGIC: &str = "rahmani-dataset";
const VERSION: &str = "v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DataCase {
    Average,
    Best,
    Worst,
    HalfSorted,
}

impl DataCase {
    pub const ALL: [DataCase; 4] = [DataCase::Average, DataCase::Best, DataCase::Worst, DataCase::HalfSorted];

    pub fn name(self) -> &'static str {
        match self {
            DataCase::Average => "average",
            DataCase::Best => "best",
            DataCase::Worst => "worst",
            DataCase::HalfSorted => "half_sorted",
        }
    }

    /// The case this one is derived from.
    pub fn parent(self) -> Option<DataCase> {
        match self {
            DataCase::Average => None,
            DataCase::Best | DataCase::HalfSorted => Some(DataCase::Average),
            DataCase::Worst => Some(DataCase::Best),
        }
    }
}

impl fmt::Display for DataCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for DataCase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DataCase::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown case `{s}` (expected average, best, worst or half_sorted)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub case: DataCase,
    pub seed: u64,
    pub range_bound: u32,
    pub values: Vec<i32>,
    pub derived_from: Option<DataCase>,
}

impl Dataset {
    pub fn size(&self) -> usize {
        self.values.len()
    }

    fn derive(&self, case: DataCase, values: Vec<i32>) -> Result<Dataset, ContractError> {
        let parent = case.parent().expect("derived case");
        if self.case != parent {
            return Err(ContractError::WrongCase {
                expected: parent.name(),
                found: self.case.name(),
            });
        }
        Ok(Dataset {
            case,
            seed: self.seed,
            range_bound: self.range_bound,
            values,
            derived_from: Some(parent),
        })
    }

    /// Checks the value-range and ordering invariants of the case.
    fn violation(&self) -> Option<(usize, String)> {
        if let Some(i) = self.values.iter().position(|&v| v < 0 || v as u32 >= self.range_bound) {
            return Some((i, format!("value {} outside [0, {})", self.values[i], self.range_bound)));
        }
        let bad = match self.case {
            DataCase::Best => self.values.windows(2).position(|w| w[0] > w[1]),
            DataCase::Worst => self.values.windows(2).position(|w| w[0] < w[1]),
            DataCase::HalfSorted => self.values[..self.size().div_ceil(2)]
                .windows(2)
                .position(|w| w[0] > w[1]),
            DataCase::Average => None,
        };
        bad.map(|i| (i + 1, format!("value breaks {} ordering", self.case)))
    }
}

fn check_range(range_bound: u32) -> Result<(), ContractError> {
    if range_bound == 0 || range_bound > 1 << 31 {
        return Err(ContractError::InvalidRange(range_bound));
    }
    Ok(())
}

/// Uniform random values in `[0, range_bound)`.
pub fn gen_average(size: usize, seed: u64, range_bound: u32) -> Result<Dataset, ContractError> {
    check_range(range_bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..size).map(|_| rng.gen_range(0..range_bound) as i32).collect();
    Ok(Dataset {
        case: DataCase::Average,
        seed,
        range_bound,
        values,
        derived_from: None,
    })
}

pub fn derive_best(d: &Dataset) -> Result<Dataset, ContractError> {
    let mut values = d.values.clone();
    values.sort_unstable();
    d.derive(DataCase::Best, values)
}

pub fn derive_worst(d: &Dataset) -> Result<Dataset, ContractError> {
    d.derive(DataCase::Worst, d.values.iter().rev().copied().collect())
}

/// Sorts the first `ceil(size / 2)` values and leaves the rest untouched.
pub fn derive_half_sorted(d: &Dataset) -> Result<Dataset, ContractError> {
    let mut values = d.values.clone();
    values[..d.size().div_ceil(2)].sort_unstable();
    d.derive(DataCase::HalfSorted, values)
}

/// Generates `case` through the derivation chain rooted at the average set.
pub fn generate(case: DataCase, size: usize, seed: u64, range_bound: u32) -> Result<Dataset, ContractError> {
    let avg = gen_average(size, seed, range_bound)?;
    match case {
        DataCase::Average => Ok(avg),
        DataCase::Best => derive_best(&avg),
        DataCase::Worst => derive_worst(&derive_best(&avg)?),
        DataCase::HalfSorted => derive_half_sorted(&avg),
    }
}

/// A seeded shuffle of `0..n`: random order, no duplicate keys.
pub fn distinct_permutation(n: usize, seed: u64) -> Vec<i32> {
    let mut v: Vec<i32> = (0..n as i32).collect();
    v.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    v
}

/// Key mix of a randomized test sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyMix {
    /// Keys drawn from the whole `i32` range; collisions are rare.
    Spread,
    /// Keys drawn from a range about an eighth of the length; many repeats.
    DuplicateHeavy,
}

/// The `index`-th sample of a seeded family: its length is uniform in
/// `0..=max_len`. Each index reads its own ChaCha stream, so samples can be
/// produced in any order.
pub fn random_sample(seed: u64, index: u64, max_len: usize, mix: KeyMix) -> Vec<i32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let n = rng.gen_range(0..=max_len);
    match mix {
        KeyMix::Spread => (0..n).map(|_| rng.gen()).collect(),
        KeyMix::DuplicateHeavy => {
            let hi = (n / 8).max(1) as i32;
            (0..n).map(|_| rng.gen_range(0..hi)).collect()
        }
    }
}

pub fn header_line(d: &Dataset) -> String {
    format!(
        "# {MAGIC} {VERSION} case={} size={} seed={} range={}",
        d.case,
        d.size(),
        d.seed,
        d.range_bound
    )
}

pub fn write_dataset_to<W: Write>(d: &Dataset, out: W) -> std::io::Result<()> {
    let mut w = BufWriter::new(out);
    writeln!(w, "{}", header_line(d))?;
    for v in &d.values {
        writeln!(w, "{v}")?;
    }
    w.flush()
}

pub fn write_dataset(d: &Dataset, destination: &Path) -> Result<(), DatasetError> {
    let io = |source| DatasetError::Io {
        path: destination.to_owned(),
        source,
    };
    let file = File::create(destination).map_err(io)?;
    write_dataset_to(d, file).map_err(io)
}

pub fn read_dataset(source: &Path) -> Result<Dataset, DatasetError> {
    let file = File::open(source).map_err(|e| DatasetError::Io {
        path: source.to_owned(),
        source: e,
    })?;
    read_dataset_from(BufReader::new(file))
}

fn parse_err(line: usize, message: impl Into<String>) -> DatasetError {
    DatasetError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line: &str) -> Result<(DataCase, usize, u64, u32), DatasetError> {
    let bad = |m: String| parse_err(1, m);
    let mut tokens = line.split(' ');
    for expected in ["#", MAGIC, VERSION] {
        match tokens.next() {
            Some(t) if t == expected => {}
            other => return Err(bad(format!("expected `{expected}`, found `{}`", other.unwrap_or("")))),
        }
    }
    let mut field = |name: &str| -> Result<String, DatasetError> {
        let tok = tokens.next().ok_or_else(|| bad(format!("missing `{name}=`")))?;
        tok.strip_prefix(name)
            .and_then(|t| t.strip_prefix('='))
            .map(str::to_owned)
            .ok_or_else(|| bad(format!("expected `{name}=`, found `{tok}`")))
    };
    let case = field("case")?.parse::<DataCase>().map_err(bad)?;
    let size = field("size")?.parse::<usize>().map_err(|e| bad(format!("size: {e}")))?;
    let seed = field("seed")?.parse::<u64>().map_err(|e| bad(format!("seed: {e}")))?;
    let range = field("range")?.parse::<u32>().map_err(|e| bad(format!("range: {e}")))?;
    if let Some(extra) = tokens.next() {
        return Err(bad(format!("unexpected trailing `{extra}`")));
    }
    check_range(range).map_err(|e| bad(e.to_string()))?;
    Ok((case, size, seed, range))
}

/// Parses the v1 text format. Errors name the one-based line number.
pub fn read_dataset_from<R: BufRead>(input: R) -> Result<Dataset, DatasetError> {
    let mut lines = input.lines();
    let header = match lines.next() {
        Some(l) => l.map_err(|e| parse_err(1, e.to_string()))?,
        None => return Err(parse_err(1, "missing header")),
    };
    let (case, size, seed, range_bound) = parse_header(&header)?;
    let mut values = Vec::with_capacity(size.min(1 << 24));
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
        if values.len() == size {
            return Err(parse_err(lineno, format!("more values than header size={size}")));
        }
        let v = line
            .parse::<i32>()
            .map_err(|_| parse_err(lineno, format!("`{line}` is not a 32-bit integer")))?;
        values.push(v);
    }
    if values.len() != size {
        return Err(parse_err(
            values.len() + 2,
            format!("header says size={size} but found {} values", values.len()),
        ));
    }
    let d = Dataset {
        case,
        seed,
        range_bound,
        values,
        derived_from: case.parent(),
    };
    if let Some((i, msg)) = d.violation() {
        return Err(parse_err(i + 2, msg));
    }
    Ok(d)
}
