//! Permutations in one-line notation, reduction and pattern containment.
//!
//! Positions and values are 1-based in every public function that reports
//! them; the backing storage is an ordinary `Vec`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation. `n = 0` is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidInput(alloc::format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidInput(alloc::format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Perm(values))
    }

    /// Wraps values already known to form a permutation.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Perm::new(values.clone()).is_ok());
        Perm(values)
    }

    pub fn empty() -> Self {
        Perm(Vec::new())
    }

    /// `I_n = 1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    /// `J_n = n ... 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Perm((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    pub fn reverse(&self) -> Perm {
        Perm(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Perm {
        let n = self.len();
        Perm(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm(inv)
    }

    pub fn transform(&self, t: Symmetry) -> Perm {
        match t {
            Symmetry::Identity => self.clone(),
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::ReverseComplement => self.reverse().complement(),
        }
    }

    /// `self ⊕ other`: `other` shifted up and placed to the right.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let a = self.len();
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + a));
        Perm(v)
    }

    /// `self ⊖ other`: `self` shifted up, `other` placed below-right.
    pub fn skew_sum(&self, other: &Perm) -> Perm {
        let b = other.len();
        let mut v: Vec<usize> = self.0.iter().map(|&x| x + b).collect();
        v.extend_from_slice(&other.0);
        Perm(v)
    }

    /// Left-to-right maxima as 1-based `(position, value)` pairs.
    pub fn ltr_maxima(&self) -> Vec<(usize, usize)> {
        let mut best = 0;
        let mut out = Vec::new();
        for (i, &v) in self.0.iter().enumerate() {
            if v > best {
                best = v;
                out.push((i + 1, v));
            }
        }
        out
    }

    /// Whether some subsequence of `self` reduces to `pattern`.
    pub fn contains(&self, pattern: &Perm) -> bool {
        contains_in(&self.0, &pattern.0)
    }

    pub fn avoids(&self, pattern: &Perm) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all(&self, basis: &PatternSet) -> bool {
        basis.iter().all(|p| !self.contains(p))
    }

    /// First pattern of `basis` that `self` contains, if any.
    pub fn first_contained<'a>(&self, basis: &'a PatternSet) -> Option<&'a Perm> {
        basis.iter().find(|p| self.contains(p))
    }
}

impl fmt::Display for Perm {
    /// Digit string when every value is a single digit, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.len() <= 9;
        for (i, v) in self.0.iter().enumerate() {
            if !compact && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `"4312"` (one digit per entry) or `"10,2,1,..."` / space separated.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "-" {
            return Ok(Perm::empty());
        }
        let values: Result<Vec<usize>> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidInput(alloc::format!("bad entry {t:?}")))
                })
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidInput(alloc::format!("bad digit {c:?}")))
                })
                .collect()
        };
        Perm::new(values?)
    }
}

/// Reverse, complement, their composition, or nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symmetry {
    Identity,
    Reverse,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Identity => "id",
            Symmetry::Reverse => "r",
            Symmetry::Complement => "c",
            Symmetry::ReverseComplement => "rc",
        }
    }
}

/// The order-isomorphic permutation of a sequence of distinct values.
///
/// ```
/// # use permstat_core::perm::reduce;
/// assert_eq!(reduce(&[8, 7, 4, 5]).unwrap().to_string(), "4312");
/// ```
pub fn reduce<T: Ord>(word: &[T]) -> Result<Perm> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by(|&a, &b| word[a].cmp(&word[b]));
    if order.windows(2).any(|w| word[w[0]] == word[w[1]]) {
        return Err(Error::InvalidInput("entries are not distinct".to_string()));
    }
    let mut values = alloc::vec![0; word.len()];
    for (rank, &pos) in order.iter().enumerate() {
        values[pos] = rank + 1;
    }
    Ok(Perm(values))
}

/// A nonempty, duplicate-free set of patterns kept in canonical order
/// (by length, then lexicographically).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternSet(Vec<Perm>);

impl PatternSet {
    pub fn new(mut patterns: Vec<Perm>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidInput("empty basis".to_string()));
        }
        if patterns.iter().any(Perm::is_empty) {
            return Err(Error::InvalidInput(
                "basis patterns must be nonempty".to_string(),
            ));
        }
        patterns.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        if patterns.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(
                "duplicate pattern in basis".to_string(),
            ));
        }
        Ok(PatternSet(patterns))
    }

    pub fn single(p: Perm) -> Result<Self> {
        PatternSet::new(alloc::vec![p])
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Perm> {
        self.0.iter()
    }

    pub fn patterns(&self) -> &[Perm] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Applies the symmetry to every pattern.
    pub fn transform(&self, t: Symmetry) -> PatternSet {
        PatternSet::new(self.0.iter().map(|p| p.transform(t)).collect())
            .expect("symmetries are bijections on patterns")
    }

    pub fn names(&self) -> Vec<String> {
        self.0.iter().map(|p| p.to_string()).collect()
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated digit strings, e.g. `"213,312"`.
    fn from_str(s: &str) -> Result<Self> {
        let patterns: Result<Vec<Perm>> = s
            .split([',', ' ', ';'])
            .filter(|t| !t.is_empty())
            .map(|t| {
                if t.len() > 9 || !t.chars().all(|c| c.is_ascii_digit()) {
                    return Err(Error::InvalidInput(alloc::format!(
                        "pattern {t:?} must be a digit string of length at most 9"
                    )));
                }
                t.parse()
            })
            .collect();
        PatternSet::new(patterns?)
    }
}

pub(crate) fn contains_in(host: &[usize], pattern: &[usize]) -> bool {
    let n = host.len();
    let m = pattern.len();
    if m == 0 {
        return true;
    }
    if m > n {
        return false;
    }
    match m {
        1 => true,
        2 => {
            let ascending = pattern[0] < pattern[1];
            // 12 is avoided only by the decreasing permutation, 21 by the increasing one
            host.windows(2).any(|w| (w[0] < w[1]) == ascending)
        }
        3 => contains3(host, pattern),
        _ => {
            let mut chosen = Vec::with_capacity(m);
            embed(host, pattern, &mut chosen, 0)
        }
    }
}

fn contains3(host: &[usize], pattern: &[usize]) -> bool {
    let n = host.len();
    let flip = |v: usize| n + 1 - v;
    match pattern {
        [1, 2, 3] => has_123(n, |i| host[i]),
        [3, 2, 1] => has_123(n, |i| flip(host[i])),
        [1, 3, 2] => has_132(n, |i| host[i]),
        [2, 3, 1] => has_132(n, |i| host[n - 1 - i]),
        [3, 1, 2] => has_132(n, |i| flip(host[i])),
        [2, 1, 3] => has_132(n, |i| flip(host[n - 1 - i])),
        _ => unreachable!("length-3 pattern is a permutation of 123"),
    }
}

/// Some `j` has a smaller entry to its left and a larger one to its right.
fn has_123(n: usize, at: impl Fn(usize) -> usize) -> bool {
    let mut suffix_max = alloc::vec![0; n + 1];
    for i in (0..n).rev() {
        suffix_max[i] = suffix_max[i + 1].max(at(i));
    }
    let mut prefix_min = usize::MAX;
    for j in 0..n {
        let v = at(j);
        if prefix_min < v && v < suffix_max[j + 1] {
            return true;
        }
        prefix_min = prefix_min.min(v);
    }
    false
}

/// Right-to-left stack scan: `third` is the largest value seen so far that
/// has a larger value to its left, i.e. the best candidate for the "2".
fn has_132(n: usize, at: impl Fn(usize) -> usize) -> bool {
    let mut stack: Vec<usize> = Vec::new();
    let mut third = 0;
    for i in (0..n).rev() {
        let v = at(i);
        if v < third {
            return true;
        }
        while let Some(&top) = stack.last() {
            if top < v {
                third = third.max(top);
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(v);
    }
    false
}

fn embed(host: &[usize], pattern: &[usize], chosen: &mut Vec<usize>, start: usize) -> bool {
    let t = chosen.len();
    let m = pattern.len();
    if t == m {
        return true;
    }
    let last_start = host.len() - (m - t);
    for i in start..=last_start {
        let v = host[i];
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(s, &hi)| (pattern[s] < pattern[t]) == (host[hi] < v));
        if consistent {
            chosen.push(i);
            if embed(host, pattern, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Whether `word` contains `pattern` in an occurrence that uses the last
/// entry of `word`. Used to prune prefix enumeration.
pub(crate) fn contains_ending_at_last(word: &[usize], pattern: &[usize]) -> bool {
    let m = pattern.len();
    let n = word.len();
    if m == 0 || m > n {
        return m == 0;
    }
    let last = word[n - 1];
    let top = pattern[m - 1];
    let mut chosen = Vec::with_capacity(m);
    embed_before_last(&word[..n - 1], last, &pattern[..m - 1], top, &mut chosen, 0)
}

fn embed_before_last(
    host: &[usize],
    last: usize,
    pattern: &[usize],
    top: usize,
    chosen: &mut Vec<usize>,
    start: usize,
) -> bool {
    let t = chosen.len();
    let m = pattern.len();
    if t == m {
        return true;
    }
    let last_start = host.len() - (m - t);
    for i in start..=last_start {
        let v = host[i];
        if (pattern[t] < top) != (v < last) {
            continue;
        }
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(s, &hi)| (pattern[s] < pattern[t]) == (host[hi] < v));
        if consistent {
            chosen.push(i);
            if embed_before_last(host, last, pattern, top, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
