use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input value (duplicate entries, not a permutation, bad text).
    InvalidInput(String),
    /// A Dyck word failed validation; `index` is the 1-based offending position.
    InvalidDyck {
        index: usize,
        reason: &'static str,
    },
    /// A map was applied outside its domain; `pattern` is the occurrence found.
    Precondition {
        map: &'static str,
        pattern: String,
    },
    /// A generator was asked for more than its configured cap.
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    /// No method is registered for the requested combination.
    Unsupported(String),
    /// A closed form was evaluated outside the range where it holds.
    OutOfDomain {
        formula: &'static str,
        n: usize,
        min_n: usize,
    },
    UnknownFormula(String),
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InvalidDyck { index, reason } => {
                write!(f, "invalid Dyck word at index {index}: {reason}")
            }
            Error::Precondition { map, pattern } => {
                write!(f, "{map}: input contains the forbidden pattern {pattern}")
            }
            Error::ResourceLimit {
                what,
                requested,
                cap,
            } => {
                write!(f, "{what}: requested size {requested} exceeds cap {cap}")
            }
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::OutOfDomain { formula, n, min_n } => {
                write!(f, "{formula} holds only for n >= {min_n}, got n = {n}")
            }
            Error::UnknownFormula(name) => write!(f, "unknown formula {name}"),
            Error::Overflow => f.write_str("integer overflow in exact arithmetic"),
        }
    }
}

impl core::error::Error for Error {}
