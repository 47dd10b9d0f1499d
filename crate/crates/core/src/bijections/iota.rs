use alloc::vec::Vec;

use super::psi321_inv;
use crate::dyck::{DyckWord, Step};
use crate::error::{Error, Result};
use crate::stats::{stat, StatKind};

use Step::{D, U};

/// Involution on `D_n` exchanging `st` with `des ∘ ψ⁻¹`.
///
/// With `π = ψ⁻¹(d)`:
///
/// * `st(d) = des(π)`: `d` is fixed.
/// * `st(d) + 1 = des(π)`: `d = (UD)^i X U D^j` with `i` maximal, where `X`
///   is empty or ends in `D`. The image is `X U U^i D^i D^j`.
/// * `st(d) = des(π) + 1`: `d = X U^i D^j` with both runs maximal and
///   `j ≥ i ≥ 2`. The image is `(UD)^(i-1) X U D^(j-i+1)`.
///
/// The two non-trivial cases are inverse to each other.
pub fn iota(d: &DyckWord) -> Result<DyckWord> {
    let st = d.st();
    let des = stat(StatKind::Des, &psi321_inv(d));
    let s = d.steps();
    let out = if st == des {
        return Ok(d.clone());
    } else if des == st + 1 {
        let j = trailing_run(s, D);
        let body = &s[..s.len() - j];
        if j == 0 || body.last() != Some(&U) {
            return Err(shape_error(d));
        }
        let body = &body[..body.len() - 1];
        let i = leading_ud_pairs(body);
        let x = &body[2 * i..];
        if i == 0 || x.last() == Some(&U) {
            return Err(shape_error(d));
        }
        let mut out = Vec::with_capacity(s.len());
        out.extend_from_slice(x);
        out.push(U);
        out.extend(core::iter::repeat_n(U, i));
        out.extend(core::iter::repeat_n(D, i + j));
        out
    } else if st == des + 1 {
        let j = trailing_run(s, D);
        let body = &s[..s.len() - j];
        let i = trailing_run(body, U);
        let x = &body[..body.len() - i];
        if i < 2 || j < i || x.starts_with(&[U, D]) {
            return Err(shape_error(d));
        }
        let mut out = Vec::with_capacity(s.len());
        for _ in 0..i - 1 {
            out.extend_from_slice(&[U, D]);
        }
        out.extend_from_slice(x);
        out.push(U);
        out.extend(core::iter::repeat_n(D, j - i + 1));
        out
    } else {
        return Err(shape_error(d));
    };
    Ok(DyckWord::from_steps_unchecked(out))
}

fn trailing_run(s: &[Step], step: Step) -> usize {
    s.iter().rev().take_while(|x| **x == step).count()
}

fn leading_ud_pairs(s: &[Step]) -> usize {
    s.chunks_exact(2).take_while(|c| *c == [U, D]).count()
}

fn shape_error(d: &DyckWord) -> Error {
    Error::InvalidInput(alloc::format!("{d} does not match any involution case"))
}
