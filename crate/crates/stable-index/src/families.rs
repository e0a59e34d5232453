//! Constructions with known stable indices, and the number-theoretic
//! helpers behind their closed forms.
//!
//! * cycles `C_p` — stable index Infinite (all powers of a permutation
//!   matrix are permutation matrices);
//! * complete digraphs `K_n` (loops included) — index 1 for n >= 2;
//! * chorded cycles `L_n` — the n-cycle plus the chord 0 -> 2 that shortcuts
//!   exactly one vertex; index n for n >= 3;
//! * dumbbells `g(p, k, q)` — cycles C_p and C_q joined by a path of k-1
//!   arcs; index lcm(p, q) + k - 2;
//! * theta graphs `G(p, q, l, t)` — a source vertex with a route of length
//!   l into C_p crossing into C_q, and a direct route of length t into C_q.
//!
//! Vertex labelings are fixed so that emitted edge lists are byte-stable:
//! the dumbbell puts C_p on `0..p`, then the k-2 path interior vertices,
//! then C_q, with the path running from vertex 0 to the first C_q vertex.
//! The theta graph puts the source at 0, then the upper-route interior,
//! C_p, the lower-route interior, C_q; the two cycles overlap the routes as
//! much as possible (entry points i = min(p, l-1) and j = min(q, t)), so
//! the built member has the smallest order that realizes (p, q, l, t).

use std::collections::BTreeSet;
use std::fmt;
use std::iter::once;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::theta::Theta;

/// Upper limit on any single family parameter. Keeps every closed-form
/// computation comfortably inside `u64` arithmetic.
pub const MAX_PARAM: usize = 1 << 20;

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple. Panics if the result overflows `u64` (family
/// parameters are capped well below that).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflow")
}

fn check_param(value: usize, name: &str, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::ParameterOutOfRange(format!(
            "{name} must be at least {min}, got {value}"
        )));
    }
    if value > MAX_PARAM {
        return Err(Error::ParameterOutOfRange(format!(
            "{name} must be at most {MAX_PARAM}, got {value}"
        )));
    }
    Ok(())
}

/// The directed cycle on `p` vertices (`p = 1` is the loop).
pub fn build_cycle(p: usize) -> Result<Digraph> {
    check_param(p, "cycle length", 1)?;
    Digraph::from_arcs(p, (0..p).map(|i| (i, (i + 1) % p)))
}

/// The complete digraph on `n` vertices, loops included (all n^2 arcs).
pub fn build_complete(n: usize) -> Result<Digraph> {
    check_param(n, "order", 1)?;
    Digraph::from_arcs(n, (0..n).flat_map(|i| (0..n).map(move |j| (i, j))))
}

/// The n-cycle plus the chord 0 -> 2.
///
/// The chord shortcuts exactly one vertex, which is what makes the stable
/// index come out to exactly n: a chord skipping further ahead creates a
/// short duplicated walk pair instead (e.g. with a chord 0 -> 3 the walks
/// 0,1,2,3 and 0,3,0,3 would already collide at length 3).
pub fn build_lollipop(n: usize) -> Result<Digraph> {
    check_param(n, "order", 3)?;
    let mut d = build_cycle(n)?;
    d.add_arc(0, 2)?;
    Ok(d)
}

/// The dumbbell: cycles C_p and C_q joined by a directed path of `k - 1`
/// arcs from a C_p vertex to a C_q vertex. Order p + q + k - 2.
///
/// `k = 2` means a single bridging arc; `p = 1` or `q = 1` is allowed (a
/// loop endpoint).
pub fn build_dumbbell(p: usize, k: usize, q: usize) -> Result<Digraph> {
    check_param(p, "p", 1)?;
    check_param(q, "q", 1)?;
    check_param(k, "k", 2)?;
    let order = p + q + k - 2;
    let base = p + k - 2;
    let mut arcs: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    arcs.extend((0..q).map(|i| (base + i, base + (i + 1) % q)));
    let chain: Vec<usize> = once(0).chain(p..p + k - 2).chain(once(base)).collect();
    arcs.extend(chain.windows(2).map(|w| (w[0], w[1])));
    Digraph::from_arcs(order, arcs)
}

/// Closed form for the dumbbell's stable index: lcm(p, q) + k - 2.
pub fn dumbbell_index(p: usize, k: usize, q: usize) -> Result<u64> {
    check_param(p, "p", 1)?;
    check_param(q, "q", 1)?;
    check_param(k, "k", 2)?;
    Ok(lcm(p as u64, q as u64) + k as u64 - 2)
}

/// The smallest order of any digraph realizing the theta-graph parameters
/// (p, q, l, t): the two routes reuse cycle vertices as far as they can.
pub fn theta_graph_min_order(p: usize, q: usize, l: usize, t: usize) -> usize {
    1 + (l - 1).saturating_sub(p) + t.saturating_sub(q) + p + q
}

fn check_theta_graph_params(p: usize, q: usize, l: usize, t: usize) -> Result<()> {
    check_param(p, "p", 1)?;
    check_param(q, "q", 1)?;
    check_param(l, "l", 2)?;
    check_param(t, "t", 1)
}

/// The canonical minimal member for (p, q, l, t): source vertex 0, a route
/// of length `l` through C_p ending with one crossing arc into C_q, and a
/// route of length `t` directly into C_q.
fn theta_graph_member(p: usize, q: usize, l: usize, t: usize) -> Result<Digraph> {
    check_theta_graph_params(p, q, l, t)?;
    let i = p.min(l - 1);
    let j = q.min(t);
    let r = l - 1 - i; // upper-route interior vertices
    let s = t - j; // lower-route interior vertices
    let order = 1 + r + s + p + q;
    let u = |c: usize| r + c; // C_p vertices u_1..u_p
    let v = |c: usize| r + p + s + c; // C_q vertices v_1..v_q

    // The two routes can share arcs with the cycles in degenerate cases, so
    // collect into a set first.
    let mut arcs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let upper: Vec<usize> = once(0).chain(1..=r).chain(once(u(1))).collect();
    arcs.extend(upper.windows(2).map(|w| (w[0], w[1])));
    let lower: Vec<usize> = once(0)
        .chain(r + p + 1..=r + p + s)
        .chain(once(v(1)))
        .collect();
    arcs.extend(lower.windows(2).map(|w| (w[0], w[1])));
    arcs.extend((1..=p).map(|c| (u(c), u(c % p + 1))));
    arcs.extend((1..=q).map(|c| (v(c), v(c % q + 1))));
    arcs.insert((u(i), v(j)));
    Digraph::from_arcs(order, arcs)
}

/// Builds the (p, q, l, t) theta graph at order exactly `n`: the minimal
/// member plus isolated padding vertices. Fails with [`Error::Unrealizable`]
/// when `n` is below the minimal order.
pub fn build_theta_graph(p: usize, q: usize, l: usize, t: usize, n: usize) -> Result<Digraph> {
    let member = theta_graph_member(p, q, l, t)?;
    if n < member.order() {
        return Err(Error::Unrealizable(format!(
            "theta graph (p={p}, q={q}, l={l}, t={t}) needs order at least {}, got {n}",
            member.order()
        )));
    }
    pad_isolated(&member, n)
}

/// Closed form for the theta graph: the index is M - 1 where M is the
/// smallest common route length `l + a*p = t + b*q` (a, b >= 0), and
/// Infinite when no common length exists, i.e. when gcd(p, q) does not
/// divide l - t.
///
/// This value is always an upper bound on the stable index of the built
/// member, and is exact on the diagonal subfamily q = p - 1 used by the
/// achievability theorem; members can beat it when a walk wraps around a
/// cycle before the routes recombine.
pub fn theta_graph_index(p: usize, q: usize, l: usize, t: usize) -> Result<Theta> {
    check_theta_graph_params(p, q, l, t)?;
    let (p, q, l, t) = (p as u64, q as u64, l as u64, t as u64);
    if l.abs_diff(t) % gcd(p, q) != 0 {
        return Ok(Theta::Infinite);
    }
    // The minimal solution, when one exists, lies within one lcm of the
    // starting offsets, so this window always contains it.
    let a_hi = lcm(p, q) / p + l.abs_diff(t).div_ceil(p) + 1;
    let meet = (0..=a_hi)
        .map(|a| l + a * p)
        .find(|&val| val >= t && (val - t) % q == 0)
        .expect("a common route length exists whenever gcd(p, q) divides l - t");
    Ok(Theta::Finite(meet - 1))
}

/// All finite closed-form indices of theta graphs with route-length
/// difference `l - t = d` that fit within order `n`: the set
/// f(p, q, d) restricted to members of order at most n.
///
/// Requires p > q >= 1 (the regime where the closed form is used).
pub fn theta_graph_indices(p: usize, q: usize, d: usize, n: usize) -> Result<BTreeSet<u64>> {
    if p <= q {
        return Err(Error::ParameterOutOfRange(format!(
            "requires p > q, got p={p}, q={q}"
        )));
    }
    check_param(q, "q", 1)?;
    check_param(d, "d", 1)?;
    check_param(n, "n", 1)?;
    let mut values = BTreeSet::new();
    // Minimal member order is nondecreasing in t, so stop at the first t
    // that no longer fits.
    for t in 1.. {
        let l = t + d;
        if theta_graph_min_order(p, q, l, t) > n {
            break;
        }
        if let Theta::Finite(m) = theta_graph_index(p, q, l, t)? {
            values.insert(m);
        }
    }
    Ok(values)
}

/// Appends isolated vertices until the digraph has order `n`.
///
/// Isolated vertices join no walk, so the stable index is unchanged.
pub fn pad_isolated(d: &Digraph, n: usize) -> Result<Digraph> {
    if n < d.order() {
        return Err(Error::ShrinkNotAllowed {
            order: d.order(),
            target: n,
        });
    }
    Digraph::from_arcs(n, d.arcs())
}

/// The least u >= 0 such that p - q = u*q - v*p has a solution with v >= 0.
///
/// For coprime p > q this equals p - 1: the only way the two cycle lengths
/// can trade off a deficit of p - q is to go almost a full turn around.
pub fn min_coefficient(p: u64, q: u64) -> Result<u64> {
    if p <= q || q == 0 || p as usize > MAX_PARAM {
        return Err(Error::ParameterOutOfRange(format!(
            "requires {MAX_PARAM} >= p > q >= 1, got p={p}, q={q}"
        )));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    for u in 0..=p {
        let num = u * q;
        if num >= p - q && (num - (p - q)) % p == 0 {
            return Ok(u);
        }
    }
    unreachable!("u = p - 1 always satisfies (p-1)q - (p-q) = p(q-1)")
}

/// Whether the residues q, 2q, ..., (p-1)q taken mod p are exactly
/// {1, ..., p-1}. True for every coprime pair; computed honestly rather
/// than assumed.
pub fn residue_permutation_check(p: u64, q: u64) -> Result<bool> {
    if p == 0 || q == 0 || p as usize > MAX_PARAM {
        return Err(Error::ParameterOutOfRange(format!(
            "requires positive p, q with p <= {MAX_PARAM}, got p={p}, q={q}"
        )));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let residues: BTreeSet<u64> = (1..p).map(|k| k * q % p).collect();
    Ok(residues == (1..p).collect())
}

/// A named family member, parsed from and rendered to a compact spec
/// string:
///
/// * `cycle:p` — the directed p-cycle
/// * `complete:n` — the complete digraph with loops
/// * `lollipop:n` — the n-cycle plus chord 0 -> 2
/// * `g:p,k,q` — the dumbbell
/// * `G:p,q,l,t,n` — the theta graph, padded to order n
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilySpec {
    Cycle { p: usize },
    Complete { n: usize },
    Lollipop { n: usize },
    Dumbbell { p: usize, k: usize, q: usize },
    ThetaGraph { p: usize, q: usize, l: usize, t: usize, n: usize },
}

impl FamilySpec {
    /// The order of the digraph [`FamilySpec::build`] produces.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Cycle { p } => p,
            FamilySpec::Complete { n } => n,
            FamilySpec::Lollipop { n } => n,
            FamilySpec::Dumbbell { p, k, q } => p + q + k - 2,
            FamilySpec::ThetaGraph { n, .. } => n,
        }
    }

    /// Builds the digraph this spec names.
    pub fn build(&self) -> Result<Digraph> {
        match *self {
            FamilySpec::Cycle { p } => build_cycle(p),
            FamilySpec::Complete { n } => build_complete(n),
            FamilySpec::Lollipop { n } => build_lollipop(n),
            FamilySpec::Dumbbell { p, k, q } => build_dumbbell(p, k, q),
            FamilySpec::ThetaGraph { p, q, l, t, n } => build_theta_graph(p, q, l, t, n),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Cycle { p } => check_param(p, "cycle length", 1),
            FamilySpec::Complete { n } => check_param(n, "order", 1),
            FamilySpec::Lollipop { n } => check_param(n, "order", 3),
            FamilySpec::Dumbbell { p, k, q } => {
                check_param(p, "p", 1)?;
                check_param(q, "q", 1)?;
                check_param(k, "k", 2)
            }
            FamilySpec::ThetaGraph { p, q, l, t, n } => {
                check_theta_graph_params(p, q, l, t)?;
                check_param(n, "n", 1)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Cycle { p } => write!(f, "cycle:{p}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Lollipop { n } => write!(f, "lollipop:{n}"),
            FamilySpec::Dumbbell { p, k, q } => write!(f, "g:{p},{k},{q}"),
            FamilySpec::ThetaGraph { p, q, l, t, n } => write!(f, "G:{p},{q},{l},{t},{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidSpec {
            spec: s.to_string(),
            msg: msg.to_string(),
        };
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `<family>:<params>`"))?;
        let params: Vec<usize> = tail
            .split(',')
            .map(|field| {
                field
                    .parse::<usize>()
                    .map_err(|_| bad(&format!("invalid number `{field}`")))
            })
            .collect::<Result<_>>()?;
        let expect = |count: usize| {
            if params.len() == count {
                Ok(())
            } else {
                Err(bad(&format!(
                    "`{head}` takes {count} parameter{}, got {}",
                    if count == 1 { "" } else { "s" },
                    params.len()
                )))
            }
        };
        let spec = match head {
            "cycle" => {
                expect(1)?;
                FamilySpec::Cycle { p: params[0] }
            }
            "complete" => {
                expect(1)?;
                FamilySpec::Complete { n: params[0] }
            }
            "lollipop" => {
                expect(1)?;
                FamilySpec::Lollipop { n: params[0] }
            }
            "g" => {
                expect(3)?;
                FamilySpec::Dumbbell {
                    p: params[0],
                    k: params[1],
                    q: params[2],
                }
            }
            "G" => {
                expect(5)?;
                FamilySpec::ThetaGraph {
                    p: params[0],
                    q: params[1],
                    l: params[2],
                    t: params[3],
                    n: params[4],
                }
            }
            other => return Err(bad(&format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    /// Serializes as the canonical spec string.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
