//! The stable index and three independent ways to compute it.
//!
//! The stable index of a digraph D is the smallest k >= 1 such that D has
//! two distinct walks of length k+1 with the same start vertex and the same
//! end vertex, or [`Theta::Infinite`] when no such pair exists at any
//! length. Equivalently: the smallest k such that the (k+1)-th power of the
//! adjacency matrix has an entry >= 2.
//!
//! Three algorithms, in decreasing order of speed and increasing order of
//! independence from prior theory:
//!
//! * [`stable_index_bounded`] — saturated powering up to the order bound
//!   [`s_max`]: a digraph of order n with a finite stable index satisfies
//!   theta <= s_max(n), so a run of 0-1 powers past s_max(n)+1 proves
//!   Infinite.
//! * [`stable_index_cycle_detect`] — saturated powering with repeat
//!   detection: the power sequence is deterministic, so once a 0-1 power
//!   recurs the sequence cycles among 0-1 matrices forever. The default
//!   variant also stops early at s_max(n)+2 stored powers (sound by the
//!   order bound); [`stable_index_cycle_detect_unbounded`] relies on repeat
//!   detection alone and needs no bound at all.
//! * [`walk_count_oracle`] — exact walk counts by explicit depth-first
//!   enumeration of vertex sequences. No matrices, no saturation;
//!   exponential in the walk length and used as ground truth in tests.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::SaturatingMatrix;

/// A stable index: a positive integer or infinity.
///
/// The derived order places every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theta {
    Finite(u64),
    Infinite,
}

impl Theta {
    pub fn is_finite(self) -> bool {
        matches!(self, Theta::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<u64> {
        match self {
            Theta::Finite(v) => Some(v),
            Theta::Infinite => None,
        }
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theta::Finite(v) => write!(f, "{v}"),
            Theta::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Theta {
    type Err = Error;

    /// Parses either a positive integer or the canonical token `inf`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Theta::Infinite);
        }
        match s.parse::<u64>() {
            Ok(v) if v >= 1 => Ok(Theta::Finite(v)),
            _ => Err(Error::ParameterOutOfRange(format!(
                "invalid stable index `{s}` (expected a positive integer or `inf`)"
            ))),
        }
    }
}

impl Serialize for Theta {
    /// Serializes as a tagged object: `{"kind": "finite", "value": k}` or
    /// `{"kind": "infinite"}`, keeping structured output schema-stable.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Theta::Finite(v) => {
                let mut st = serializer.serialize_struct("Theta", 2)?;
                st.serialize_field("kind", "finite")?;
                st.serialize_field("value", v)?;
                st.end()
            }
            Theta::Infinite => {
                let mut st = serializer.serialize_struct("Theta", 1)?;
                st.serialize_field("kind", "infinite")?;
                st.end()
            }
        }
    }
}

/// The largest finite stable index any digraph of order `n` attains.
///
/// Values for n = 1..=6 are 0, 1, 3, 4, 6, 7 (0 meaning no finite index
/// exists at order 1); for n >= 7 the maximum is (n^2 - 1)/4 for odd n,
/// (n^2 - 4)/4 for n divisible by 4, and (n^2 - 16)/4 otherwise.
///
/// Panics if `n == 0`.
pub fn s_max(n: usize) -> u64 {
    assert!(n >= 1, "order must be at least 1");
    const SMALL: [u64; 7] = [0, 0, 1, 3, 4, 6, 7];
    if n <= 6 {
        return SMALL[n];
    }
    let n = n as u64;
    match n % 4 {
        0 => (n * n - 4) / 4,
        2 => (n * n - 16) / 4,
        _ => (n * n - 1) / 4,
    }
}

/// A pair of equal-length walks certifying a finite stable index: at least
/// two distinct walks of length `walk_length` run `from -> to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WalkPairWitness {
    pub from: usize,
    pub to: usize,
    pub walk_length: u64,
}

/// Computes the stable index by saturated powering up to the order bound.
pub fn stable_index_bounded(d: &Digraph) -> Theta {
    stable_index_bounded_explained(d).0
}

/// Like [`stable_index_bounded`], also returning the first saturated entry
/// (row-major order) of the first non-0-1 power when the index is finite.
pub fn stable_index_bounded_explained(d: &Digraph) -> (Theta, Option<WalkPairWitness>) {
    if d.order() == 0 {
        return (Theta::Infinite, None);
    }
    let adj = SaturatingMatrix::adjacency(d);
    let mut cur = adj.clone();
    let mut next = SaturatingMatrix::zeros(d.order());
    for m in 1..=s_max(d.order()) {
        cur.sat_multiply_into(&adj, &mut next);
        std::mem::swap(&mut cur, &mut next);
        // cur now holds the (m+1)-th power
        if let Some((from, to)) = cur.first_saturated() {
            let witness = WalkPairWitness {
                from,
                to,
                walk_length: m + 1,
            };
            return (Theta::Finite(m), Some(witness));
        }
    }
    (Theta::Infinite, None)
}

/// Computes the stable index by repeat detection over saturated powers,
/// additionally capped at s_max(n)+2 stored powers.
pub fn stable_index_cycle_detect(d: &Digraph) -> Theta {
    let cap = if d.order() == 0 {
        1
    } else {
        s_max(d.order()) as usize + 2
    };
    cycle_detect_with_cap(d, Some(cap))
}

/// Repeat detection alone, with no use of the order bound.
///
/// Stores every distinct 0-1 power until one recurs, so memory can grow to
/// the period of the power sequence (e.g. three disjoint cycles of lengths
/// 3, 4, 5 first repeat a power after 60 steps). Prefer the capped variant
/// unless the point is to avoid assuming the bound.
pub fn stable_index_cycle_detect_unbounded(d: &Digraph) -> Theta {
    cycle_detect_with_cap(d, None)
}

fn cycle_detect_with_cap(d: &Digraph, cap: Option<usize>) -> Theta {
    if d.order() == 0 {
        return Theta::Infinite;
    }
    let adj = SaturatingMatrix::adjacency(d);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut cur = adj.clone();
    let mut next = SaturatingMatrix::zeros(d.order());
    let mut power: u64 = 1;
    loop {
        // cur = the `power`-th saturated power, still 0-1 here
        if !seen.insert(cur.entries().to_vec()) {
            return Theta::Infinite;
        }
        if cap.is_some_and(|c| seen.len() >= c) {
            return Theta::Infinite;
        }
        cur.sat_multiply_into(&adj, &mut next);
        std::mem::swap(&mut cur, &mut next);
        power += 1;
        if !cur.is_zero_one() {
            return Theta::Finite(power - 1);
        }
    }
}

/// Shared inner loop for the exhaustive sweeps: the stable index of the
/// digraph whose adjacency matrix is `adj`, using caller-owned scratch
/// matrices so the hot path performs no allocation.
pub(crate) fn bounded_theta_into(
    adj: &SaturatingMatrix,
    cap: u64,
    cur: &mut SaturatingMatrix,
    next: &mut SaturatingMatrix,
) -> Theta {
    cur.clone_from(adj);
    for m in 1..=cap {
        cur.sat_multiply_into(adj, next);
        std::mem::swap(cur, next);
        if !cur.is_zero_one() {
            return Theta::Finite(m);
        }
    }
    Theta::Infinite
}

/// Counts walks of exactly `len` arcs from `from` to `to` by explicit
/// depth-first enumeration of vertex sequences.
///
/// A length-0 walk from a vertex to itself counts once. The count is exact
/// (no saturation); `len > budget` is rejected rather than silently running
/// for hours, since the cost grows like (max out-degree)^len.
pub fn walk_count_oracle(
    d: &Digraph,
    from: usize,
    to: usize,
    len: usize,
    budget: usize,
) -> Result<u64> {
    for &index in &[from, to] {
        if index >= d.order() {
            return Err(Error::IndexOutOfRange {
                index,
                order: d.order(),
            });
        }
    }
    if len > budget {
        return Err(Error::BudgetExceeded { len, budget });
    }
    fn go(d: &Digraph, at: usize, to: usize, remaining: usize) -> u64 {
        if remaining == 0 {
            return u64::from(at == to);
        }
        d.out_neighbors(at)
            .map(|v| go(d, v, to, remaining - 1))
            .sum()
    }
    Ok(go(d, from, to, len))
}
