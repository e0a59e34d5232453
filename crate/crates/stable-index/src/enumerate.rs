//! Exhaustive and sampled sweeps over all order-n digraphs.
//!
//! An order-n digraph is a subset of the n^2 possible arcs, so it encodes
//! as the n^2-bit integer whose bit `i*n + j` is the arc `i -> j`; codes
//! `0..2^(n^2)` enumerate every digraph exactly once. Exhaustive sweeps are
//! guarded by an order ceiling ([`DEFAULT_CEILING`] = 5, i.e. 2^25 digraphs
//! per sweep); order 6 already means 2^36 ≈ 7·10^10 codes.
//!
//! Parallel sweeps split the code range into contiguous chunks, one worker
//! per chunk, and merge the per-chunk histograms in chunk order, so the
//! result is identical for any worker count. Random sampling is pinned to a
//! documented scheme: a ChaCha8 stream seeded with the given value, where
//! sample k consumes draws `k*n .. k*n + n` and row i of the sample is the
//! low n bits of draw `k*n + i`. The same seed therefore reproduces the
//! same digraphs on any platform, and a longer run extends a shorter one.

use std::collections::{BTreeMap, BTreeSet};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::SaturatingMatrix;
use crate::theorem::theta_set;
use crate::theta::{bounded_theta_into, s_max, Theta};

/// Largest order accepted for exhaustive sweeps unless a caller raises it
/// explicitly.
pub const DEFAULT_CEILING: usize = 5;

/// Largest order whose codes fit in a `u128` (11^2 = 121 bits).
pub const MAX_CODE_ORDER: usize = 11;

/// Largest order accepted by the random sampler.
pub const MAX_SAMPLE_ORDER: usize = 12;

/// The number of worker threads the runtime reports as available.
pub fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|c| c.get())
        .unwrap_or(1)
}

/// Encodes a digraph as its arc-indicator integer.
pub fn encode(d: &Digraph) -> Result<u128> {
    if d.order() > MAX_CODE_ORDER {
        return Err(Error::ParameterOutOfRange(format!(
            "order {} exceeds the largest encodable order {MAX_CODE_ORDER}",
            d.order()
        )));
    }
    let n = d.order();
    let mut code = 0u128;
    for (u, v) in d.arcs() {
        code |= 1u128 << (u * n + v);
    }
    Ok(code)
}

/// Decodes an arc-indicator integer back into a digraph of order `n`.
pub fn decode(n: usize, code: u128) -> Result<Digraph> {
    if n > MAX_CODE_ORDER {
        return Err(Error::ParameterOutOfRange(format!(
            "order {n} exceeds the largest encodable order {MAX_CODE_ORDER}"
        )));
    }
    if n * n < 128 && code >= 1u128 << (n * n) {
        return Err(Error::CodeOutOfRange { n, code });
    }
    let mut d = Digraph::empty(n);
    for i in 0..n {
        for j in 0..n {
            if (code >> (i * n + j)) & 1 == 1 {
                d.add_arc(i, j)?;
            }
        }
    }
    Ok(d)
}

/// A contiguous range of digraph codes `lo..hi` at order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    lo: u128,
    hi: u128,
}

impl Partition {
    /// The full code range for order `n`.
    pub fn full(n: usize) -> Result<Partition> {
        if n == 0 || n > MAX_CODE_ORDER {
            return Err(Error::ParameterOutOfRange(format!(
                "order must be in 1..={MAX_CODE_ORDER}, got {n}"
            )));
        }
        Ok(Partition {
            n,
            lo: 0,
            hi: 1u128 << (n * n),
        })
    }

    /// An explicit sub-range; `hi` is exclusive and must not exceed the full
    /// range.
    pub fn new(n: usize, lo: u128, hi: u128) -> Result<Partition> {
        let full = Partition::full(n)?;
        if lo > hi || hi > full.hi {
            return Err(Error::CodeOutOfRange { n, code: hi });
        }
        Ok(Partition { n, lo, hi })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of codes in the range.
    pub fn count(&self) -> u128 {
        self.hi - self.lo
    }

    /// Splits into `parts` contiguous chunks covering the same range in
    /// order. Earlier chunks are at most one code larger; chunks may be
    /// empty when `parts` exceeds the range size.
    pub fn split(&self, parts: usize) -> Vec<Partition> {
        let parts = parts.max(1) as u128;
        let base = self.count() / parts;
        let rem = self.count() % parts;
        let mut out = Vec::with_capacity(parts as usize);
        let mut lo = self.lo;
        for chunk in 0..parts {
            let len = base + u128::from(chunk < rem);
            out.push(Partition {
                n: self.n,
                lo,
                hi: lo + len,
            });
            lo += len;
        }
        out
    }
}

/// A stable-index histogram over some collection of order-n digraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSummary {
    pub n: usize,
    /// Number of digraphs inspected (the sum of all histogram counts).
    pub total: u64,
    pub histogram: BTreeMap<Theta, u64>,
}

impl EnumSummary {
    fn empty(n: usize) -> Self {
        EnumSummary {
            n,
            total: 0,
            histogram: BTreeMap::new(),
        }
    }

    fn record(&mut self, theta: Theta, count: u64) {
        if count > 0 {
            *self.histogram.entry(theta).or_insert(0) += count;
            self.total += count;
        }
    }

    /// The largest finite index observed, if any.
    pub fn max_finite(&self) -> Option<u64> {
        self.histogram
            .keys()
            .filter_map(|t| t.finite())
            .next_back()
    }

    /// Every finite index observed.
    pub fn achieved_finite(&self) -> BTreeSet<u64> {
        self.histogram.keys().filter_map(|t| t.finite()).collect()
    }

    /// Count for one index value.
    pub fn count(&self, theta: Theta) -> u64 {
        self.histogram.get(&theta).copied().unwrap_or(0)
    }
}

impl Serialize for EnumSummary {
    /// Serializes the histogram as an array of `{theta, count}` entries so
    /// the infinite bucket needs no special key encoding.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            theta: &'a Theta,
            count: u64,
        }
        let mut st = serializer.serialize_struct("EnumSummary", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("total", &self.total)?;
        st.serialize_field("max_finite", &self.max_finite())?;
        let entries: Vec<Entry> = self
            .histogram
            .iter()
            .map(|(theta, &count)| Entry { theta, count })
            .collect();
        st.serialize_field("histogram", &entries)?;
        st.end()
    }
}

/// Adds two summaries over the same order.
pub fn merge(a: &EnumSummary, b: &EnumSummary) -> Result<EnumSummary> {
    if a.n != b.n {
        return Err(Error::OrderMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let mut out = a.clone();
    for (&theta, &count) in &b.histogram {
        out.record(theta, count);
    }
    Ok(out)
}

/// Sweeps one code range sequentially. This is the kernel the public
/// entry points delegate to; it applies no ceiling of its own.
pub fn enumerate_partition(part: &Partition) -> EnumSummary {
    let n = part.n;
    let cap = s_max(n);
    // Dense histogram: slot 0 for Infinite, slot k for Finite(k).
    let mut counts = vec![0u64; cap as usize + 1];
    let mut adj = SaturatingMatrix::zeros(n);
    let mut cur = SaturatingMatrix::zeros(n);
    let mut next = SaturatingMatrix::zeros(n);
    let mut code = part.lo;
    while code < part.hi {
        adj.load_bits(code);
        match bounded_theta_into(&adj, cap, &mut cur, &mut next) {
            Theta::Finite(k) => counts[k as usize] += 1,
            Theta::Infinite => counts[0] += 1,
        }
        code += 1;
    }
    let mut summary = EnumSummary::empty(n);
    for (k, &count) in counts.iter().enumerate().skip(1) {
        summary.record(Theta::Finite(k as u64), count);
    }
    summary.record(Theta::Infinite, counts[0]);
    summary
}

fn check_ceiling(n: usize, ceiling: usize) -> Result<()> {
    if n > ceiling {
        return Err(Error::CeilingExceeded { n, ceiling });
    }
    Ok(())
}

/// Sweeps every order-n digraph on one thread, guarded by
/// [`DEFAULT_CEILING`].
pub fn enumerate_exhaustive(n: usize) -> Result<EnumSummary> {
    enumerate_exhaustive_with_ceiling(n, DEFAULT_CEILING)
}

/// Single-threaded sweep with an explicit ceiling, for callers that have
/// decided a longer run is affordable.
pub fn enumerate_exhaustive_with_ceiling(n: usize, ceiling: usize) -> Result<EnumSummary> {
    check_ceiling(n, ceiling)?;
    Ok(enumerate_partition(&Partition::full(n)?))
}

/// Sweeps every order-n digraph across `workers` threads. The result is
/// bit-identical for every worker count.
pub fn enumerate_parallel(n: usize, workers: usize) -> Result<EnumSummary> {
    enumerate_parallel_with_ceiling(n, workers, DEFAULT_CEILING)
}

/// Parallel sweep with an explicit ceiling.
pub fn enumerate_parallel_with_ceiling(
    n: usize,
    workers: usize,
    ceiling: usize,
) -> Result<EnumSummary> {
    check_ceiling(n, ceiling)?;
    if workers == 0 {
        return Err(Error::ParameterOutOfRange(
            "worker count must be at least 1".to_string(),
        ));
    }
    let parts = Partition::full(n)?.split(workers);
    let partials: Vec<EnumSummary> = std::thread::scope(|scope| {
        let handles: Vec<_> = parts
            .iter()
            .map(|part| scope.spawn(move || enumerate_partition(part)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    let mut acc = EnumSummary::empty(n);
    for partial in &partials {
        acc = merge(&acc, partial)?;
    }
    Ok(acc)
}

/// Sweeps `samples` seeded pseudo-random order-n digraphs.
///
/// The draw scheme is part of the contract (see the module docs): equal
/// seeds give equal summaries everywhere, and the first k samples of a long
/// run equal a k-sample run with the same seed.
pub fn enumerate_random(n: usize, samples: u64, seed: u64) -> Result<EnumSummary> {
    if n == 0 || n > MAX_SAMPLE_ORDER {
        return Err(Error::CeilingExceeded {
            n,
            ceiling: MAX_SAMPLE_ORDER,
        });
    }
    let cap = s_max(n);
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![0u64; n];
    let mut adj = SaturatingMatrix::zeros(n);
    let mut cur = SaturatingMatrix::zeros(n);
    let mut next = SaturatingMatrix::zeros(n);
    let mut counts = vec![0u64; cap as usize + 1];
    for _ in 0..samples {
        for row in rows.iter_mut() {
            *row = rng.next_u64() & mask;
        }
        adj.load_rows(&rows);
        match bounded_theta_into(&adj, cap, &mut cur, &mut next) {
            Theta::Finite(k) => counts[k as usize] += 1,
            Theta::Infinite => counts[0] += 1,
        }
    }
    let mut summary = EnumSummary::empty(n);
    for (k, &count) in counts.iter().enumerate().skip(1) {
        summary.record(Theta::Finite(k as u64), count);
    }
    summary.record(Theta::Infinite, counts[0]);
    Ok(summary)
}

/// An exhaustive sweep compared against the achievable index set.
#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalReport {
    pub n: usize,
    pub summary: EnumSummary,
    /// Finite indices the achievability theorem predicts at this order.
    pub expected_finite: BTreeSet<u64>,
    /// Finite indices the sweep actually observed.
    pub achieved_finite: BTreeSet<u64>,
    /// Predicted but never observed.
    pub missing: Vec<u64>,
    /// Observed but not predicted.
    pub unexpected: Vec<u64>,
    /// The order bound the maximum observed finite index must equal
    /// (absent at order 1, where no finite index exists).
    pub expected_max: Option<u64>,
    pub infinite_observed: bool,
}

impl EmpiricalReport {
    /// Whether observation and prediction agree exactly.
    pub fn ok(&self) -> bool {
        self.missing.is_empty()
            && self.unexpected.is_empty()
            && self.summary.max_finite() == self.expected_max
            && self.infinite_observed
    }
}

/// Runs an exhaustive sweep at order `n` (all available workers, default
/// ceiling) and checks it against the achievable index set.
pub fn empirical_check(n: usize) -> Result<EmpiricalReport> {
    empirical_check_with(n, default_workers(), DEFAULT_CEILING)
}

/// [`empirical_check`] with explicit worker count and ceiling.
pub fn empirical_check_with(n: usize, workers: usize, ceiling: usize) -> Result<EmpiricalReport> {
    let summary = enumerate_parallel_with_ceiling(n, workers, ceiling)?;
    let expected_finite = theta_set(n).finite().clone();
    let achieved_finite = summary.achieved_finite();
    let missing = expected_finite.difference(&achieved_finite).copied().collect();
    let unexpected = achieved_finite.difference(&expected_finite).copied().collect();
    let expected_max = if n == 1 { None } else { Some(s_max(n)) };
    let infinite_observed = summary.count(Theta::Infinite) > 0;
    Ok(EmpiricalReport {
        n,
        summary,
        expected_finite,
        achieved_finite,
        missing,
        unexpected,
        expected_max,
        infinite_observed,
    })
}
