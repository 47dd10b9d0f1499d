//! Exact binomials and Catalan numbers with checked arithmetic.

use crate::error::{Error, Result};

/// `C(a, b)`, zero when `b < 0` or `b > a` (including negative `a`).
pub fn binomial(a: i64, b: i64) -> Result<u64> {
    if a < 0 || b < 0 || b > a {
        return Ok(0);
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc: u128 = 1;
    for i in 0..b {
        // acc * (a - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((a - i) as u128).ok_or(Error::Overflow)? / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

pub fn catalan(n: usize) -> Result<u64> {
    let c = binomial(2 * n as i64, n as i64)?;
    Ok(c / (n as u64 + 1))
}

pub fn pow2(e: usize) -> Result<u64> {
    1u64.checked_shl(e as u32)
        .filter(|_| e < 64)
        .ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), Ok(10));
        assert_eq!(binomial(5, -1), Ok(0));
        assert_eq!(binomial(5, 6), Ok(0));
        assert_eq!(binomial(-1, 0), Ok(0));
        assert_eq!(binomial(0, 0), Ok(1));
        assert_eq!(binomial(60, 30), Ok(118264581564861424));
    }

    #[test]
    fn pascal_rule() {
        for a in 1..40i64 {
            for b in 1..a {
                assert_eq!(
                    binomial(a, b).unwrap(),
                    binomial(a - 1, b - 1).unwrap() + binomial(a - 1, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn catalan_small() {
        let got: alloc::vec::Vec<u64> = (0..8).map(|n| catalan(n).unwrap()).collect();
        assert_eq!(got, [1, 1, 2, 5, 14, 42, 132, 429]);
        assert!(catalan(24).unwrap() < i64::MAX as u64);
    }

    #[test]
    fn pow2_bounds() {
        assert_eq!(pow2(0), Ok(1));
        assert_eq!(pow2(63), Ok(1 << 63));
        assert_eq!(pow2(64), Err(Error::Overflow));
    }
}
