//! The stable index of directed graphs: computation, extremal families,
//! achievable value sets, witness synthesis, and exhaustive enumeration.
//!
//! The *stable index* of a digraph is the smallest `k >= 1` such that two
//! distinct walks of length `k + 1` share both their start and end vertex,
//! or infinite when no such pair exists at any length. Equivalently, it is
//! the first power of the adjacency matrix (beyond the first) that contains
//! an entry of 2 or more; cycles and other walk-unique digraphs have
//! infinite index.
//!
//! # Quickstart
//!
//! ```
//! use stable_index::{stable_index_bounded, Theta, FamilySpec};
//!
//! // Two cycles of lengths 2 and 3 joined by a path: index lcm(2, 3) = 6.
//! let digraph = "g:2,2,3".parse::<FamilySpec>()?.build()?;
//! assert_eq!(stable_index_bounded(&digraph), Theta::Finite(6));
//! # Ok::<(), stable_index::Error>(())
//! ```
//!
//! # What's here
//!
//! - [`theta`]: the two independent algorithms ([`stable_index_bounded`],
//!   [`stable_index_cycle_detect`]), an exact walk-counting oracle, and the
//!   sharp order bound [`s_max`].
//! - [`matrix`]: saturating matrix arithmetic (entries clamped at 2), which
//!   decides 0-1-ness of every power exactly.
//! - [`families`]: cycles, complete digraphs with loops, lollipops,
//!   two-cycle joins, and two-route theta graphs, with closed-form indices.
//! - [`theorem`]: the achievable index set at each order ([`theta_set`]),
//!   its [`gaps`], verified [`witness`] synthesis, and [`verify_theorem`].
//! - [`enumerate`]: exhaustive sweeps over all digraphs of a small order
//!   (deterministically parallel) and seeded random sampling.
//! - [`cli`]: the `stable-index` command-line tool over the same API.
//!
//! # Runnable examples
//!
//! Each major capability has a self-contained example:
//!
//! - `cargo run -p stable-index --example compute_theta` — both algorithms
//!   on hand-built and parsed digraphs, with the first duplicate walk pair.
//! - `cargo run -p stable-index --example families_tour` — every family,
//!   its spec string, and its closed form.
//! - `cargo run -p stable-index --example achievable_sets` — achievable
//!   index sets and their gaps across orders.
//! - `cargo run -p stable-index --example witness_search` — synthesizing
//!   order-exact witnesses for target values.
//! - `cargo run --release -p stable-index --example enumerate_small` —
//!   exact index distributions over all digraphs of orders 1..=4.
//! - `cargo run --release -p stable-index --example random_agreement` —
//!   seeded sampling and cross-algorithm agreement.

#![forbid(unsafe_code)]

pub mod cli;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod matrix;
pub mod theorem;
pub mod theta;

pub use digraph::Digraph;
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use matrix::SaturatingMatrix;
pub use theorem::{gaps, theta_set, verify_theorem, witness, IndexSet};
pub use theta::{
    s_max, stable_index_bounded, stable_index_bounded_explained, stable_index_cycle_detect,
    stable_index_cycle_detect_unbounded, walk_count_oracle, Theta, WalkPairWitness,
};
