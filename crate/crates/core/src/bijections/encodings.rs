//! Binary-word encodings of the classes `S_n(132,213)`, `S_n(213,231)` and
//! `S_n(123,132)`, each a bijection onto all words of length `n - 1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::require_avoids;
use crate::error::{Error, Result};
use crate::perm::{reduce, Perm};
use crate::stats::StatKind;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bits(Vec<bool>);

impl Bits {
    pub fn new(bits: Vec<bool>) -> Self {
        Bits(bits)
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }

    /// Overlapping occurrences of the two-letter factor `ab`.
    pub fn factor2(&self, a: bool, b: bool) -> usize {
        self.0.windows(2).filter(|w| w[0] == a && w[1] == b).count()
    }

    pub fn starts_with(&self, prefix: &[bool]) -> bool {
        self.0.starts_with(prefix)
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let s: String = self.0.iter().map(|b| if *b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl FromStr for Bits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" || s == "-" {
            return Ok(Bits::default());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidInput(alloc::format!("bad bit {c:?}"))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(Bits)
    }
}

/// `s_i = 1` exactly when `π_i < π_{i+1}`.
pub fn enc_132_213(p: &Perm) -> Result<Bits> {
    require_avoids("enc_132_213", p, "132,213")?;
    Ok(Bits(p.values().windows(2).map(|w| w[0] < w[1]).collect()))
}

/// `I_{i_1} ⊖ ... ⊖ I_{i_m}` where the blocks are the maximal runs of 1s
/// (a block of `k` ones has length `k + 1`).
pub fn dec_132_213(s: &Bits) -> Perm {
    let mut blocks: Vec<usize> = Vec::new();
    let mut len = 1;
    for &b in &s.0 {
        if b {
            len += 1;
        } else {
            blocks.push(len);
            len = 1;
        }
    }
    blocks.push(len);
    blocks
        .into_iter()
        .map(Perm::identity)
        .reduce(|acc, block| acc.skew_sum(&block))
        .expect("at least one block")
}

/// `s_i = 0` when `π_i` is the maximum of `π_i..π_n`, `1` when it is the minimum.
pub fn enc_213_231(p: &Perm) -> Result<Bits> {
    require_avoids("enc_213_231", p, "213,231")?;
    let v = p.values();
    let n = v.len();
    let mut suffix_max = alloc::vec![0; n + 1];
    for i in (0..n).rev() {
        suffix_max[i] = suffix_max[i + 1].max(v[i]);
    }
    Ok(Bits(
        (0..n.saturating_sub(1))
            .map(|i| v[i] != suffix_max[i])
            .collect(),
    ))
}

pub fn dec_213_231(s: &Bits) -> Perm {
    let n = s.len() + 1;
    let (mut lo, mut hi) = (1, n);
    let mut values = Vec::with_capacity(n);
    for &b in &s.0 {
        if b {
            values.push(lo);
            lo += 1;
        } else {
            values.push(hi);
            hi -= 1;
        }
    }
    values.push(lo);
    Perm::from_vec_unchecked(values)
}

/// Recursive on where `1` sits: `π_{n-1} = 1` appends `0`, `π_n = 1` appends `1`.
pub fn enc_123_132(p: &Perm) -> Result<Bits> {
    require_avoids("enc_123_132", p, "123,132")?;
    if p.is_empty() {
        return Err(Error::InvalidInput("enc_123_132 needs n >= 1".into()));
    }
    let mut word: Vec<usize> = p.values().to_vec();
    let mut bits = Vec::with_capacity(word.len() - 1);
    while word.len() > 1 {
        let n = word.len();
        if word[n - 1] == 1 {
            bits.push(true);
            word.pop();
        } else if word[n - 2] == 1 {
            bits.push(false);
            word.remove(n - 2);
        } else {
            unreachable!("1 is among the last two entries of a {{123,132}}-avoider");
        }
        word = reduce(&word).expect("distinct").into_values();
    }
    bits.reverse();
    Ok(Bits(bits))
}

/// Left-to-right construction: start from `n`; bit `i` inserts `n - i`
/// just before the last entry (`0`) or appends it (`1`).
pub fn dec_123_132(s: &Bits) -> Perm {
    let n = s.len() + 1;
    let mut values = Vec::with_capacity(n);
    values.push(n);
    for (i, &b) in s.0.iter().enumerate() {
        let v = n - (i + 1);
        if b {
            values.push(v);
        } else {
            let at = values.len() - 1;
            values.insert(at, v);
        }
    }
    Perm::from_vec_unchecked(values)
}

/// Statistic predicted from an encoding word of `S_n(132,213)`.
pub fn predicted_stat_132_213(kind: StatKind, s: &Bits) -> usize {
    predicted_adjacent(kind, s)
}

/// Same factor rules as [`predicted_stat_132_213`].
pub fn predicted_stat_213_231(kind: StatKind, s: &Bits) -> usize {
    predicted_adjacent(kind, s)
}

fn predicted_adjacent(kind: StatKind, s: &Bits) -> usize {
    match kind {
        StatKind::Asc => s.ones(),
        StatKind::Des => s.len() - s.ones(),
        StatKind::Dasc => s.factor2(true, true),
        StatKind::Ddes => s.factor2(false, false),
        StatKind::Pk => s.factor2(true, false),
        StatKind::Vl => s.factor2(false, true),
    }
}

/// Statistic predicted from an encoding word of `S_n(123,132)`, tracking
/// which bit pairs create a new ascent, peak, valley or double descent while
/// the permutation is built left to right.
pub fn predicted_stat_123_132(kind: StatKind, s: &Bits) -> usize {
    let n = s.len() + 1;
    let starts_00 = s.starts_with(&[false, false]);
    match kind {
        StatKind::Asc => usize::from(s.starts_with(&[false])) + s.factor2(true, false),
        StatKind::Des => {
            let asc = predicted_stat_123_132(StatKind::Asc, s);
            n - 1 - asc
        }
        StatKind::Dasc => 0,
        StatKind::Ddes => s.factor2(true, true) + s.factor2(false, false) - usize::from(starts_00),
        StatKind::Pk => s.factor2(false, true),
        StatKind::Vl => s.factor2(true, false) + usize::from(starts_00),
    }
}
