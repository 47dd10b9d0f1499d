//! OEIS b-file fetching, caching and prefix comparison.
//!
//! Reference terms only ever come from the network or from the local
//! cache of earlier downloads; nothing here embeds sequence data.

mod bfile;
mod cache;
mod client;
mod registry;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use bfile::{parse_bfile, render_bfile};
pub use cache::Cache;
pub use client::{Client, HttpTransport, Transport};
pub use registry::{local_terms, lookup, lookup_formula, Flattening, RowLength, REGISTRY};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OeisId(String);

impl OeisId {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The numeric part, e.g. `"091894"`.
    pub fn digits(&self) -> &str {
        &self.0[1..]
    }

    pub fn bfile_url(&self) -> String {
        format!("https://oeis.org/{}/b{}.txt", self.0, self.digits())
    }
}

impl FromStr for OeisId {
    type Err = OeisError;

    fn from_str(s: &str) -> Result<Self, OeisError> {
        let s = s.trim();
        let ok = s.len() == 7
            && s.as_bytes()[0].eq_ignore_ascii_case(&b'A')
            && s[1..].bytes().all(|b| b.is_ascii_digit());
        if !ok {
            return Err(OeisError::InvalidId(s.to_string()));
        }
        Ok(OeisId(format!("A{}", &s[1..])))
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Network,
    Cache,
}

/// Terms of one sequence keyed by their b-file index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisRef {
    pub id: OeisId,
    pub terms: Vec<(i64, BigInt)>,
    /// Seconds since the Unix epoch.
    pub fetched_at: u64,
    pub source: Source,
}

impl OeisRef {
    pub fn term_at(&self, index: i64) -> Option<&BigInt> {
        self.terms
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.terms[pos].1)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("malformed OEIS id {0:?} (expected A followed by six digits)")]
    InvalidId(String),
    #[error("{0} not found on OEIS")]
    NotFound(OeisId),
    #[error("offline: {0} is not cached")]
    Offline(OeisId),
    #[error("network error fetching {id}: {message}")]
    Network { id: OeisId, message: String },
    #[error("b-file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cache: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// 1-based position in the local term list.
    pub term: usize,
    pub index: i64,
    pub local: BigInt,
    pub reference: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    /// Local terms that had a reference term to compare with.
    pub compared: usize,
    /// Length of the agreeing prefix.
    pub matched: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl MatchReport {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares local term `i` (0-based) with the reference term at index
/// `offset + i`, stopping where the reference runs out.
pub fn compare(local: &[BigInt], reference: &OeisRef, offset: i64) -> MatchReport {
    let mut compared = 0;
    for (i, value) in local.iter().enumerate() {
        let index = offset + i as i64;
        let Some(expected) = reference.term_at(index) else {
            break;
        };
        compared += 1;
        if expected != value {
            return MatchReport {
                compared,
                matched: i,
                first_mismatch: Some(Mismatch {
                    term: i + 1,
                    index,
                    local: value.clone(),
                    reference: expected.clone(),
                }),
            };
        }
    }
    MatchReport {
        compared,
        matched: compared,
        first_mismatch: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference(terms: &[i64], first: i64) -> OeisRef {
        OeisRef {
            id: "A000001".parse().unwrap(),
            terms: terms
                .iter()
                .enumerate()
                .map(|(i, t)| (first + i as i64, BigInt::from(*t)))
                .collect(),
            fetched_at: 0,
            source: Source::Cache,
        }
    }

    #[test]
    fn ids() {
        let id: OeisId = "a000108".parse().unwrap();
        assert_eq!(id.as_str(), "A000108");
        assert_eq!(id.bfile_url(), "https://oeis.org/A000108/b000108.txt");
        for bad in ["X123", "A12345", "A1234567", "Aabcdef", ""] {
            assert!(
                matches!(bad.parse::<OeisId>(), Err(OeisError::InvalidId(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn prefix_comparison() {
        let local: Vec<BigInt> = [1, 2, 4, 1].iter().map(|x| BigInt::from(*x)).collect();
        let r = reference(&[1, 2, 4, 1, 8], 1);
        assert_eq!(
            compare(&local, &r, 1),
            MatchReport {
                compared: 4,
                matched: 4,
                first_mismatch: None
            }
        );
        let shifted = compare(&local, &r, 2);
        assert_eq!(shifted.first_mismatch.as_ref().unwrap().term, 1);
        assert_eq!(shifted.matched, 0);
        let short = compare(&local, &reference(&[1, 2], 1), 1);
        assert_eq!((short.compared, short.matched), (2, 2));
    }
}
