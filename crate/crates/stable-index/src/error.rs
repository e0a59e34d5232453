//! The crate-wide error type.

use thiserror::Error;

/// Every fallible operation in this crate returns this error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex index is not below the digraph order.
    #[error("vertex {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    /// The same arc was supplied twice.
    #[error("duplicate arc {u} -> {v}")]
    DuplicateArc { u: usize, v: usize },

    /// Two matrices (or summaries) that must agree in dimension do not.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An exact walk enumeration was asked to exceed its budget.
    #[error("walk length {len} exceeds the enumeration budget {budget}")]
    BudgetExceeded { len: usize, budget: usize },

    /// A constructor or query parameter violates its documented range.
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    /// The requested family member cannot be realized at the requested order.
    #[error("unrealizable: {0}")]
    Unrealizable(String),

    /// Padding can only grow a digraph, never shrink it.
    #[error("cannot pad an order-{order} digraph down to order {target}")]
    ShrinkNotAllowed { order: usize, target: usize },

    /// A number-theoretic helper requires coprime arguments.
    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: u64, q: u64 },

    /// No digraph of the given order has the requested stable index.
    #[error("no digraph of order {n} has stable index {target}")]
    NotAchievable { n: usize, target: String },

    /// The witness search ran out of candidates for an achievable target.
    /// Achievable targets always have a constructive witness, so seeing this
    /// error indicates a bug in the search itself.
    #[error("witness search exhausted for order {n}, target {target}")]
    SearchExhausted { n: usize, target: String },

    /// A digraph code does not fit the claimed order.
    #[error("code {code} out of range for order {n}")]
    CodeOutOfRange { n: usize, code: u128 },

    /// Two enumeration summaries over different orders cannot be merged.
    #[error("summaries cover different orders: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// An enumeration was requested above the configured order ceiling.
    #[error("order {n} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },

    /// A line-oriented text input (edge list) failed to parse.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A family or range specification string is malformed.
    #[error("invalid spec `{spec}`: {msg}")]
    InvalidSpec { spec: String, msg: String },

    /// A file or stream could not be read or written.
    #[error("{0}")]
    Io(String),

    /// A verification run found a member it could not confirm.
    #[error("verification failed at order {n}")]
    VerificationFailed { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
