//! Dyck words over `{U, D}` and the factor statistics used by the bijections.
//!
//! `st(d)` counts `UUD` factors. `st*(d)` counts only the `UUD` factors whose
//! second `U` lies strictly before the last `U` of the word, so the single
//! factor `U U D` that ends the last ascent is excluded.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

/// Character mapping for text input and output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub up: char,
    pub down: char,
}

impl Alphabet {
    pub const UD: Alphabet = Alphabet { up: 'U', down: 'D' };
    pub const BINARY: Alphabet = Alphabet { up: '1', down: '0' };
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::UD
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord(Vec<Step>);

impl DyckWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidDyck {
                    index: i + 1,
                    reason: "prefix falls below zero",
                });
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyck {
                index: steps.len(),
                reason: "unequal numbers of U and D steps",
            });
        }
        Ok(DyckWord(steps))
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckWord::new(steps.clone()).is_ok());
        DyckWord(steps)
    }

    pub fn empty() -> Self {
        DyckWord(Vec::new())
    }

    /// Parses with the given alphabet; whitespace is ignored.
    pub fn parse_with(text: &str, alphabet: Alphabet) -> Result<Self> {
        let mut steps = Vec::with_capacity(text.len());
        for (i, c) in text.chars().filter(|c| !c.is_whitespace()).enumerate() {
            let step = if c == alphabet.up {
                Step::U
            } else if c == alphabet.down {
                Step::D
            } else {
                return Err(Error::InvalidDyck {
                    index: i + 1,
                    reason: "unexpected character",
                });
            };
            steps.push(step);
        }
        DyckWord::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    pub fn render(&self, alphabet: Alphabet) -> String {
        self.0
            .iter()
            .map(|s| {
                if *s == Step::U {
                    alphabet.up
                } else {
                    alphabet.down
                }
            })
            .collect()
    }

    /// Overlapping occurrences of `factor` as a contiguous block.
    pub fn factor_count(&self, factor: &[Step]) -> usize {
        if factor.is_empty() || factor.len() > self.0.len() {
            return 0;
        }
        self.0
            .windows(factor.len())
            .filter(|w| *w == factor)
            .count()
    }

    /// `factor_count` with the factor written as text over `U`/`D`.
    pub fn factor_count_str(&self, factor: &str) -> Result<usize> {
        let steps = parse_steps(factor)?;
        if steps.is_empty() {
            return Err(Error::InvalidInput("empty factor".into()));
        }
        Ok(self.factor_count(&steps))
    }

    /// Number of `UUD` factors.
    pub fn st(&self) -> usize {
        self.factor_count(&[Step::U, Step::U, Step::D])
    }

    /// Number of `UUD` factors starting at `i` with `i + 1` before the last `U`.
    pub fn st_star(&self) -> usize {
        let Some(last_up) = self.0.iter().rposition(|s| *s == Step::U) else {
            return 0;
        };
        self.0
            .windows(3)
            .enumerate()
            .filter(|(i, w)| *w == [Step::U, Step::U, Step::D] && i + 1 < last_up)
            .count()
    }

    pub fn is_indecomposable(&self) -> bool {
        if self.0.is_empty() {
            return false;
        }
        let mut height = 0i64;
        for s in &self.0[..self.0.len() - 1] {
            height += if *s == Step::U { 1 } else { -1 };
            if height == 0 {
                return false;
            }
        }
        true
    }

    /// Splits at every return to the axis.
    pub fn decompose(&self) -> Vec<IndecomposableWord> {
        let mut parts = Vec::new();
        let mut height = 0i64;
        let mut start = 0;
        for (i, s) in self.0.iter().enumerate() {
            height += if *s == Step::U { 1 } else { -1 };
            if height == 0 {
                parts.push(IndecomposableWord(DyckWord(self.0[start..=i].to_vec())));
                start = i + 1;
            }
        }
        parts
    }

    /// Reverses the step sequence and swaps `U` with `D`.
    pub fn reverse_path(&self) -> DyckWord {
        DyckWord(
            self.0
                .iter()
                .rev()
                .map(|s| if *s == Step::U { Step::D } else { Step::U })
                .collect(),
        )
    }

    /// `U · self · D`.
    pub fn lift(&self) -> IndecomposableWord {
        let mut steps = Vec::with_capacity(self.0.len() + 2);
        steps.push(Step::U);
        steps.extend_from_slice(&self.0);
        steps.push(Step::D);
        IndecomposableWord(DyckWord(steps))
    }

    /// Maximal runs as `(ups, downs)` pairs; every run length is positive.
    pub fn peak_runs(&self) -> Vec<(usize, usize)> {
        let mut runs = Vec::new();
        let mut i = 0;
        let s = &self.0;
        while i < s.len() {
            let mut ups = 0;
            while i < s.len() && s[i] == Step::U {
                ups += 1;
                i += 1;
            }
            let mut downs = 0;
            while i < s.len() && s[i] == Step::D {
                downs += 1;
                i += 1;
            }
            runs.push((ups, downs));
        }
        runs
    }
}

fn parse_steps(text: &str) -> Result<Vec<Step>> {
    text.chars()
        .enumerate()
        .map(|(i, c)| match c {
            'U' | 'u' => Ok(Step::U),
            'D' | 'd' => Ok(Step::D),
            _ => Err(Error::InvalidDyck {
                index: i + 1,
                reason: "unexpected character",
            }),
        })
        .collect()
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        f.write_str(&self.render(Alphabet::UD))
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" || s == "-" {
            return Ok(DyckWord::empty());
        }
        DyckWord::parse_with(s, Alphabet::UD)
    }
}

/// A nonempty Dyck word that touches the axis only at its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecomposableWord(DyckWord);

impl IndecomposableWord {
    pub fn new(word: DyckWord) -> Result<Self> {
        if word.is_indecomposable() {
            Ok(IndecomposableWord(word))
        } else {
            Err(Error::InvalidInput(alloc::format!(
                "{word} is not indecomposable"
            )))
        }
    }

    pub fn word(&self) -> &DyckWord {
        &self.0
    }

    pub fn into_word(self) -> DyckWord {
        self.0
    }
}

impl fmt::Display for IndecomposableWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
