//! Families of 0/1 colorings of a ground set `0..n`: independent random
//! colorings, and deterministic (n, t)-universal sets.
//!
//! A family is `(n, t)`-universal when its restriction to every `t`-subset
//! of the ground set realizes all `2^t` labelings. Universality for `t`
//! implies universality for every smaller `t'` (as long as `t <= n`).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Cap on `C(n, t) * 2^t` (t-subset, pattern) pairs tracked while building a
/// universal family.
pub const UNIVERSAL_PAIR_LIMIT: u128 = 1 << 26;

/// Ground sets up to this size may fall back to the full cube.
const CUBE_LIMIT: usize = 20;

const UNIVERSAL_SEED: u64 = 0x5eed_0fc0_10f1;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("parameter t = {t} exceeds ground size n = {n}")]
    TooLarge { n: usize, t: usize },
    #[error("repetitions must be positive")]
    NoRepetitions,
    #[error("universal family for n = {n}, t = {t} needs {pairs} coverage pairs (limit {limit})")]
    UniversalFamilyTooLarge {
        n: usize,
        t: usize,
        pairs: u128,
        limit: u128,
    },
    #[error("failure probability must lie in (0, 1), got {0}")]
    BadDelta(f64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A total labeling of the ground set with 0/1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<bool>);

impl Coloring {
    pub fn new(labels: Vec<bool>) -> Self {
        Coloring(labels)
    }

    pub fn constant(n: usize, label: bool) -> Self {
        Coloring(vec![label; n])
    }

    /// Label of ground element `i` as 0 or 1.
    pub fn label(&self, i: usize) -> u8 {
        self.0[i] as u8
    }

    pub fn is_one(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pattern of this coloring on `subset`, bit `j` = label of `subset[j]`.
    pub fn pattern(&self, subset: &[usize]) -> usize {
        subset
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &i)| acc | ((self.0[i] as usize) << j))
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyMode {
    Randomized { seed: u64, repetitions: usize },
    Universal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFamily {
    ground_size: usize,
    t: usize,
    mode: FamilyMode,
    colorings: Vec<Coloring>,
}

impl ColoringFamily {
    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn mode(&self) -> FamilyMode {
        self.mode
    }

    pub fn colorings(&self) -> &[Coloring] {
        &self.colorings
    }

    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    /// One coloring per line as a 0/1 string.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.len() * (self.ground_size + 1));
        for c in &self.colorings {
            out.push_str(&format!("{c:?}\n"));
        }
        out
    }

    /// Parses the text format back. Blank lines are skipped; the mode is
    /// recorded as universal since provenance is not stored in the text.
    pub fn from_text(text: &str, t: usize) -> Result<Self, FamilyError> {
        let mut colorings = Vec::new();
        let mut ground_size = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let labels = line
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(FamilyError::Parse {
                        line: idx + 1,
                        msg: format!("unexpected character {other:?}"),
                    }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            match ground_size {
                None => ground_size = Some(labels.len()),
                Some(n) if n != labels.len() => {
                    return Err(FamilyError::Parse {
                        line: idx + 1,
                        msg: format!("coloring has length {}, expected {n}", labels.len()),
                    })
                }
                _ => {}
            }
            colorings.push(Coloring(labels));
        }
        let ground_size = ground_size.unwrap_or(0);
        if t > ground_size {
            return Err(FamilyError::TooLarge { n: ground_size, t });
        }
        Ok(ColoringFamily {
            ground_size,
            t,
            mode: FamilyMode::Universal,
            colorings,
        })
    }
}

/// `2^t` repetitions: the boosting count that makes a fixed pattern on `t`
/// elements appear with probability at least `1 - 1/e`.
pub fn default_repetitions(t: usize) -> usize {
    1usize.checked_shl(t as u32).unwrap_or(usize::MAX)
}

/// Repetitions `ceil(2^t ln(1/δ))` that push the miss probability below `δ`.
pub fn repetitions_for_delta(t: usize, delta: f64) -> Result<usize, FamilyError> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(FamilyError::BadDelta(delta));
    }
    let reps = (2f64.powi(t as i32) * (1.0 / delta).ln()).ceil();
    Ok((reps as usize).max(1))
}

/// Probability that `repetitions` uniform colorings all miss one fixed
/// pattern on `t` elements.
pub fn miss_probability(t: usize, repetitions: usize) -> f64 {
    (1.0 - 0.5f64.powi(t as i32)).powf(repetitions as f64)
}

pub fn random_family(n: usize, t: usize, repetitions: usize, seed: u64) -> Result<ColoringFamily, FamilyError> {
    if t > n {
        return Err(FamilyError::TooLarge { n, t });
    }
    if repetitions == 0 {
        return Err(FamilyError::NoRepetitions);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colorings = (0..repetitions)
        .map(|_| Coloring((0..n).map(|_| rng.gen::<bool>()).collect()))
        .collect();
    Ok(ColoringFamily {
        ground_size: n,
        t,
        mode: FamilyMode::Randomized { seed, repetitions },
        colorings,
    })
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of (t-subset, pattern) pairs a universal family must cover.
pub fn coverage_pairs(n: usize, t: usize) -> u128 {
    binomial(n, t).saturating_mul(1u128 << t.min(100))
}

/// Whether [`universal_family`] will accept `(n, t)`.
pub fn universal_feasible(n: usize, t: usize) -> bool {
    t <= n && (t <= 1 || (n <= t + 2 && n <= CUBE_LIMIT) || coverage_pairs(n, t) <= UNIVERSAL_PAIR_LIMIT)
}

/// Deterministic `(n, t)`-universal family.
///
/// Small cases are closed forms (one coloring for `t = 0`, the two constant
/// colorings for `t = 1`, the full cube when `n <= t + 2` and `n` is small). Otherwise
/// colorings are added greedily while every (t-subset, pattern) pair is
/// tracked; each candidate is forced to realize the first uncovered pair
/// and is pseudo-random elsewhere, so the loop ends after at most
/// `C(n, t) 2^t` steps and the result is universal by construction.
pub fn universal_family(n: usize, t: usize) -> Result<ColoringFamily, FamilyError> {
    if t > n {
        return Err(FamilyError::TooLarge { n, t });
    }
    let colorings = match t {
        0 => vec![Coloring::constant(n, false)],
        1 => vec![Coloring::constant(n, false), Coloring::constant(n, true)],
        _ if n <= t + 2 && n <= CUBE_LIMIT => full_cube(n),
        _ => {
            let pairs = coverage_pairs(n, t);
            if pairs > UNIVERSAL_PAIR_LIMIT {
                return Err(FamilyError::UniversalFamilyTooLarge {
                    n,
                    t,
                    pairs,
                    limit: UNIVERSAL_PAIR_LIMIT,
                });
            }
            let greedy = greedy_cover(n, t);
            if n <= CUBE_LIMIT && greedy.len() > (1usize << n) {
                full_cube(n)
            } else {
                greedy
            }
        }
    };
    Ok(ColoringFamily {
        ground_size: n,
        t,
        mode: FamilyMode::Universal,
        colorings,
    })
}

/// Memoized [`universal_family`]; families are immutable and shared.
pub fn universal_family_cached(n: usize, t: usize) -> Result<Arc<ColoringFamily>, FamilyError> {
    type Cache = Mutex<HashMap<(usize, usize), Arc<ColoringFamily>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&(n, t)) {
        return Ok(Arc::clone(f));
    }
    let f = Arc::new(universal_family(n, t)?);
    cache.lock().unwrap().insert((n, t), Arc::clone(&f));
    Ok(f)
}

fn full_cube(n: usize) -> Vec<Coloring> {
    (0..1usize << n)
        .map(|x| Coloring((0..n).map(|i| (x >> i) & 1 == 1).collect()))
        .collect()
}

/// All t-subsets of `0..n` in lexicographic order, flattened.
fn subsets(n: usize, t: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..t).collect();
    loop {
        out.extend_from_slice(&cur);
        let Some(i) = (0..t).rev().find(|&i| cur[i] < n - t + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..t {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

fn greedy_cover(n: usize, t: usize) -> Vec<Coloring> {
    let flat = subsets(n, t);
    let count = flat.len() / t;
    let width = 1usize << t;
    let mut covered = vec![false; count * width];
    let mut remaining = count * width;
    let mut next_uncovered = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(UNIVERSAL_SEED ^ ((n as u64) << 32) ^ t as u64);
    let mut seen = HashSet::new();
    let mut family = Vec::new();

    while remaining > 0 {
        while covered[next_uncovered] {
            next_uncovered += 1;
        }
        let (subset_idx, pattern) = (next_uncovered / width, next_uncovered % width);
        let target = &flat[subset_idx * t..(subset_idx + 1) * t];

        let mut labels: Vec<bool> = (0..n).map(|_| rng.gen::<bool>()).collect();
        for (j, &i) in target.iter().enumerate() {
            labels[i] = (pattern >> j) & 1 == 1;
        }
        let c = Coloring(labels);
        if !seen.insert(c.clone()) {
            continue;
        }
        for (s, subset) in flat.chunks_exact(t).enumerate() {
            let slot = s * width + c.pattern(subset);
            if !covered[slot] {
                covered[slot] = true;
                remaining -= 1;
            }
        }
        family.push(c);
    }
    family
}
