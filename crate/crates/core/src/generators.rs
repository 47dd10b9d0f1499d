//! Exhaustive streams of permutations, pattern classes, Dyck words and
//! binary words.
//!
//! Every stream has a fixed order. Filter generation is lexicographic;
//! structured generators follow their own construction (documented on
//! [`gen_class`]) and are compared to filter output as sets.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::bijections::{dec_123_132, dec_132_213, dec_213_231, phi231_inv, psi321_inv, Bits};
use crate::dyck::{DyckWord, IndecomposableWord, Step};
use crate::error::{Error, Result};
use crate::perm::{contains_ending_at_last, PatternSet, Perm};

/// Size limits for exhaustive generation and series truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for `gen_all` and filter-based class generation.
    pub perm: usize,
    /// Largest semilength for `gen_dyck` / `gen_indec`.
    pub dyck: usize,
    /// Longest binary word for `gen_bits`.
    pub bits: usize,
    /// Largest z-degree for series engines.
    pub series: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            perm: 10,
            dyck: 14,
            bits: 30,
            series: 24,
        }
    }
}

impl Caps {
    pub(crate) fn check(what: &'static str, requested: usize, cap: usize) -> Result<()> {
        if requested > cap {
            return Err(Error::ResourceLimit {
                what,
                requested,
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GenMethod {
    /// Prefix enumeration with pruning; works for any basis.
    #[default]
    Filter,
    /// A construction specific to the basis.
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSpec {
    pub n: usize,
    pub basis: PatternSet,
    pub method: GenMethod,
}

impl ClassSpec {
    pub fn new(n: usize, basis: PatternSet, method: GenMethod) -> Self {
        ClassSpec { n, basis, method }
    }

    pub fn filter(n: usize, basis: PatternSet) -> Self {
        ClassSpec::new(n, basis, GenMethod::Filter)
    }
}

pub type PermStream = Box<dyn Iterator<Item = Perm> + Send>;

/// Lexicographic depth-first enumeration of the permutations of length `n`
/// avoiding every pattern of a basis. A prefix is abandoned as soon as it
/// contains a pattern, so only class members' prefixes are visited.
pub struct ClassIter {
    n: usize,
    basis: Vec<Vec<usize>>,
    prefix: Vec<usize>,
    used: Vec<bool>,
    cursor: Vec<usize>,
    first_hi: usize,
    done: bool,
}

impl ClassIter {
    fn new(n: usize, basis: Vec<Vec<usize>>, first_lo: usize, first_hi: usize) -> Self {
        let mut cursor = alloc::vec![1; n.max(1)];
        cursor[0] = first_lo;
        ClassIter {
            n,
            basis,
            prefix: Vec::with_capacity(n),
            used: alloc::vec![false; n + 1],
            cursor,
            first_hi,
            done: false,
        }
    }

    fn creates_pattern(&self) -> bool {
        self.basis
            .iter()
            .any(|p| contains_ending_at_last(&self.prefix, p))
    }
}

impl Iterator for ClassIter {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return (self.cursor[0] == 1).then(Perm::empty);
        }
        loop {
            let depth = self.prefix.len();
            let hi = if depth == 0 {
                self.first_hi.min(self.n)
            } else {
                self.n
            };
            let mut placed = false;
            let mut v = self.cursor[depth];
            while v <= hi {
                if !self.used[v] {
                    self.prefix.push(v);
                    if self.creates_pattern() {
                        self.prefix.pop();
                    } else {
                        self.used[v] = true;
                        placed = true;
                        break;
                    }
                }
                v += 1;
            }
            if placed {
                self.cursor[depth] = v + 1;
                if self.prefix.len() == self.n {
                    let out = Perm::from_vec_unchecked(self.prefix.clone());
                    let last = self.prefix.pop().expect("nonempty");
                    self.used[last] = false;
                    return Some(out);
                }
                self.cursor[depth + 1] = 1;
            } else {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                let last = self.prefix.pop().expect("nonempty");
                self.used[last] = false;
            }
        }
    }
}

/// All `n!` permutations in lexicographic order.
pub fn gen_all(n: usize, caps: &Caps) -> Result<ClassIter> {
    Caps::check("permutation length", n, caps.perm)?;
    Ok(ClassIter::new(n, Vec::new(), 1, n))
}

/// The members of `S_n(basis)` whose first entry is `first`, in
/// lexicographic order. The streams for `first = 1..=n` partition the class;
/// for `n = 0` use `first = 1` to get the empty permutation.
pub fn gen_class_with_first(
    n: usize,
    basis: &PatternSet,
    first: usize,
    caps: &Caps,
) -> Result<ClassIter> {
    Caps::check("permutation length", n, caps.perm)?;
    Ok(ClassIter::new(n, basis_values(basis), first, first))
}

fn basis_values(basis: &PatternSet) -> Vec<Vec<usize>> {
    basis.iter().map(|p| p.values().to_vec()).collect()
}

/// Streams `S_n(basis)`.
///
/// Structured generators exist for these bases:
///
/// * `{231}`: recursive placement of `n` (`α n β` with `α < β`), via the
///   inverse of the 231 → Dyck bijection over [`gen_dyck`].
/// * `{321}`: inverse lattice-path bijection over [`gen_dyck`].
/// * `{213,312}`: an increasing run up to `n` followed by a decreasing run;
///   one binary word of length `n - 1` picks the entries before `n`.
/// * `{132,213}`, `{213,231}`, `{123,132}`: decoding every binary word of
///   length `n - 1`.
/// * `{132,321}`: `I_n`, then `(I_a ⊖ I_b) ⊕ I_{n-a-b}` for `a, b ≥ 1`.
pub fn gen_class(spec: &ClassSpec, caps: &Caps) -> Result<PermStream> {
    let n = spec.n;
    match spec.method {
        GenMethod::Filter => {
            Caps::check("permutation length", n, caps.perm)?;
            Ok(Box::new(ClassIter::new(
                n,
                basis_values(&spec.basis),
                1,
                n.max(1),
            )))
        }
        GenMethod::Structured => structured(n, &spec.basis, caps),
    }
}

/// Bases with a registered structured generator, as canonical strings.
pub const STRUCTURED_BASES: [&str; 7] = [
    "231", "321", "213,312", "132,213", "213,231", "123,132", "132,321",
];

fn structured(n: usize, basis: &PatternSet, caps: &Caps) -> Result<PermStream> {
    let key = alloc::format!("{basis}");
    let bits_len = n.saturating_sub(1);
    if n == 0 && STRUCTURED_BASES.contains(&key.as_str()) {
        return Ok(Box::new(core::iter::once(Perm::empty())));
    }
    let stream: PermStream = match key.as_str() {
        "231" => Box::new(gen_dyck(n, caps)?.map(|d| phi231_inv(&d))),
        "321" => Box::new(gen_dyck(n, caps)?.map(|d| psi321_inv(&d))),
        "213,312" => Box::new(gen_bits(bits_len, caps)?.map(move |s| unimodal(n, &s))),
        "132,213" => Box::new(gen_bits(bits_len, caps)?.map(|s| dec_132_213(&s))),
        "213,231" => Box::new(gen_bits(bits_len, caps)?.map(|s| dec_213_231(&s))),
        "123,132" => Box::new(gen_bits(bits_len, caps)?.map(|s| dec_123_132(&s))),
        "132,321" => {
            Caps::check("permutation length", n, caps.perm)?;
            let pairs = (1..=n).flat_map(move |a| (1..=n - a).map(move |b| (a, b)));
            Box::new(
                core::iter::once(Perm::identity(n)).chain(pairs.map(move |(a, b)| {
                    Perm::identity(a)
                        .skew_sum(&Perm::identity(b))
                        .direct_sum(&Perm::identity(n - a - b))
                })),
            )
        }
        _ => {
            return Err(Error::Unsupported(alloc::format!(
                "no structured generator for basis {{{key}}}"
            )))
        }
    };
    Ok(stream)
}

/// `s_v = 1` puts `v` before `n` (increasing), `0` after it (decreasing).
fn unimodal(n: usize, s: &Bits) -> Perm {
    let bits = s.as_slice();
    let mut values: Vec<usize> = (1..n).filter(|v| bits[v - 1]).collect();
    values.push(n);
    values.extend((1..n).rev().filter(|v| !bits[v - 1]));
    Perm::from_vec_unchecked(values)
}

/// Dyck words of semilength `n` in lexicographic order (`U < D`).
pub struct DyckIter {
    current: Option<Vec<Step>>,
}

impl Iterator for DyckIter {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let word = self.current.take()?;
        self.current = next_dyck(&word);
        Some(DyckWord::from_steps_unchecked(word))
    }
}

// Turn the rightmost U that sits above the axis into a D, then complete
// with the smallest suffix: all remaining U's followed by D's.
fn next_dyck(word: &[Step]) -> Option<Vec<Step>> {
    let n = word.len() / 2;
    let mut height = 0usize;
    let mut ups = 0usize;
    let mut best = None;
    for (i, s) in word.iter().enumerate() {
        if *s == Step::U {
            if height >= 1 {
                best = Some((i, ups));
            }
            height += 1;
            ups += 1;
        } else {
            height -= 1;
        }
    }
    let (i, ups_before) = best?;
    let mut out = word[..i].to_vec();
    out.push(Step::D);
    let remaining_ups = n - ups_before;
    out.extend(core::iter::repeat_n(Step::U, remaining_ups));
    out.resize(2 * n, Step::D);
    Some(out)
}

pub fn gen_dyck(n: usize, caps: &Caps) -> Result<DyckIter> {
    Caps::check("Dyck semilength", n, caps.dyck)?;
    let mut first = alloc::vec![Step::U; n];
    first.resize(2 * n, Step::D);
    Ok(DyckIter {
        current: Some(first),
    })
}

/// Indecomposable words of semilength `n`: `U d D` for `d` in `gen_dyck(n - 1)`.
pub fn gen_indec(
    n: usize,
    caps: &Caps,
) -> Result<Box<dyn Iterator<Item = IndecomposableWord> + Send>> {
    Caps::check("Dyck semilength", n, caps.dyck)?;
    if n == 0 {
        return Ok(Box::new(core::iter::empty()));
    }
    Ok(Box::new(gen_dyck(n - 1, caps)?.map(|d| d.lift())))
}

/// All `2^len` binary words, in increasing numeric order read left to right.
pub fn gen_bits(len: usize, caps: &Caps) -> Result<impl Iterator<Item = Bits> + Send> {
    Caps::check("binary word length", len, caps.bits)?;
    let total: u64 = 1u64 << len;
    Ok((0..total)
        .map(move |x| Bits::new((0..len).map(|i| (x >> (len - 1 - i)) & 1 == 1).collect())))
}
