use alloc::vec::Vec;

use super::require_avoids;
use crate::dyck::{DyckWord, Step};
use crate::error::Result;
use crate::perm::Perm;

/// `φ(π) = φ(α) U φ(β) D` where `π = α n β` (with `α`, `β` reduced).
///
/// Peaks of `π` become `DUU` factors of `φ(π)`.
pub fn phi231(p: &Perm) -> Result<DyckWord> {
    require_avoids("phi231", p, "231")?;
    let mut steps = Vec::with_capacity(2 * p.len());
    encode(p.values(), &mut steps);
    Ok(DyckWord::from_steps_unchecked(steps))
}

// In a 231-avoider every entry left of the maximum is smaller than every
// entry right of it, so the two sides reduce by subtracting an offset.
fn encode(values: &[usize], out: &mut Vec<Step>) {
    if values.is_empty() {
        return;
    }
    let (pos, _) = values
        .iter()
        .enumerate()
        .max_by_key(|(_, v)| **v)
        .expect("nonempty");
    let left = &values[..pos];
    let right: Vec<usize> = values[pos + 1..].iter().map(|v| v - pos).collect();
    encode(left, out);
    out.push(Step::U);
    encode(&right, out);
    out.push(Step::D);
}

/// Inverse of [`phi231`]: split at the last return to the axis before the end.
pub fn phi231_inv(d: &DyckWord) -> Perm {
    let mut values = Vec::with_capacity(d.semilength());
    decode(d.steps(), 0, &mut values);
    Perm::from_vec_unchecked(values)
}

fn decode(steps: &[Step], offset: usize, out: &mut Vec<usize>) {
    if steps.is_empty() {
        return;
    }
    // the final D matches the U that follows the last axis touch
    let mut height = 0i64;
    let mut split = 0;
    for (i, s) in steps[..steps.len() - 1].iter().enumerate() {
        if height == 0 {
            split = i;
        }
        height += if *s == Step::U { 1 } else { -1 };
    }
    let left = &steps[..split];
    let right = &steps[split + 1..steps.len() - 1];
    let a = left.len() / 2;
    let b = right.len() / 2;
    decode(left, offset, out);
    out.push(offset + a + b + 1);
    decode(right, offset + a, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use alloc::string::ToString;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(phi231(&p("1")).unwrap().to_string(), "UD");
        assert_eq!(phi231(&Perm::empty()).unwrap(), DyckWord::empty());
        assert_eq!(phi231(&p("21")).unwrap().to_string(), "UUDD");
        assert_eq!(phi231(&p("12")).unwrap().to_string(), "UDUD");
        assert_eq!(phi231(&p("132")).unwrap().to_string(), "UDUUDD");
        assert!(matches!(phi231(&p("231")), Err(Error::Precondition { .. })));
    }

    #[test]
    fn inverse_examples() {
        for s in ["", "1", "12", "21", "132", "312", "4123", "1432"] {
            let q = p(s);
            assert_eq!(phi231_inv(&phi231(&q).unwrap()), q, "{s}");
        }
    }
}
