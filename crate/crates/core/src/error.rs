use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("duplicate element at positions {first} and {second}")]
    DuplicateElement { first: usize, second: usize },

    #[error("table is not square or has entries out of range")]
    MalformedTable,

    #[error("Latin square violated in {axis} {index}")]
    NotLatin { axis: &'static str, index: usize },

    #[error("identity is not element 0")]
    IdentityNotZero,

    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("subset is not a subgroup")]
    NotSubgroup,

    #[error("subset is not an ideal")]
    NotIdeal,

    #[error("subset is not closed under the brace operations")]
    NotSubBrace,

    #[error("skew brace law fails at ({0}, {1}, {2})")]
    BraceLaw(usize, usize, usize),

    #[error("groups have different orders: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("order {order} exceeds the supported bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("order must be at least 1")]
    EmptyOrder,

    #[error("malformed record: {0}")]
    MalformedRecord(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported database version {0}")]
    Version(String),

    #[error("index {index} out of range (order {order} has {count} braces)")]
    IndexOutOfRange {
        order: usize,
        index: usize,
        count: usize,
    },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
