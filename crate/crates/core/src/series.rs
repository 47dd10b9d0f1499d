//! Truncated bivariate power series in `z` and `q` with exact `i64`
//! coefficients.
//!
//! Row `n` holds the polynomial in `q` multiplying `z^n`. Only rows
//! `0..=max_n` exist; every operation produces exactly those rows, so a
//! truncated term is never read.

use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<Vec<i64>>,
}

fn add_checked(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn mul_checked(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn trim(mut row: Vec<i64>) -> Vec<i64> {
    while row.last() == Some(&0) {
        row.pop();
    }
    row
}

fn poly_add(a: &[i64], b: &[i64], sign: i64) -> Result<Vec<i64>> {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out.push(add_checked(x, mul_checked(sign, y)?)?);
    }
    Ok(trim(out))
}

fn poly_mul_acc(acc: &mut Vec<i64>, a: &[i64], b: &[i64]) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Ok(());
    }
    if acc.len() < a.len() + b.len() - 1 {
        acc.resize(a.len() + b.len() - 1, 0);
    }
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = add_checked(acc[i + j], mul_checked(x, y)?)?;
        }
    }
    Ok(())
}

impl BivariateSeries {
    pub fn zero(max_n: usize) -> Self {
        BivariateSeries {
            rows: alloc::vec![Vec::new(); max_n + 1],
        }
    }

    pub fn one(max_n: usize) -> Self {
        BivariateSeries::monomial(max_n, 0, 0, 1)
    }

    /// `c · z^n q^k`, or zero if `n` exceeds the truncation.
    pub fn monomial(max_n: usize, n: usize, k: usize, c: i64) -> Self {
        let mut s = BivariateSeries::zero(max_n);
        if n <= max_n && c != 0 {
            let mut row = alloc::vec![0; k + 1];
            row[k] = c;
            s.rows[n] = row;
        }
        s
    }

    /// Builds a series from rows; missing rows are zero, extra rows dropped.
    pub fn from_rows(max_n: usize, rows: Vec<Vec<i64>>) -> Self {
        let mut s = BivariateSeries::zero(max_n);
        for (n, row) in rows.into_iter().enumerate().take(max_n + 1) {
            s.rows[n] = trim(row);
        }
        s
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `z^n q^k`; zero for `k` past the row.
    ///
    /// # Panics
    /// If `n > max_n`: that coefficient was truncated away.
    pub fn coeff(&self, n: usize, k: usize) -> i64 {
        assert!(
            n <= self.max_n(),
            "z^{n} is beyond the truncation z^{}",
            self.max_n()
        );
        self.rows[n].get(k).copied().unwrap_or(0)
    }

    /// The `q`-polynomial multiplying `z^n`, without trailing zeros.
    pub fn row(&self, n: usize) -> &[i64] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn same_degree(&self, other: &Self) -> Result<()> {
        if self.max_n() != other.max_n() {
            return Err(Error::InvalidInput(alloc::format!(
                "series truncated at z^{} and z^{} cannot be combined",
                self.max_n(),
                other.max_n()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| poly_add(a, b, 1))
            .collect::<Result<_>>()?;
        Ok(BivariateSeries { rows })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| poly_add(a, b, -1))
            .collect::<Result<_>>()?;
        Ok(BivariateSeries { rows })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let max_n = self.max_n();
        let mut rows = alloc::vec![Vec::new(); max_n + 1];
        for (n, row) in rows.iter_mut().enumerate() {
            for i in 0..=n {
                poly_mul_acc(row, &self.rows[i], &other.rows[n - i])?;
            }
            *row = trim(core::mem::take(row));
        }
        Ok(BivariateSeries { rows })
    }

    /// Multiplies by `z^by`, dropping rows pushed past the truncation.
    pub fn shift_z(&self, by: usize) -> Self {
        let max_n = self.max_n();
        let mut rows = alloc::vec![Vec::new(); max_n + 1];
        if by <= max_n {
            rows[by..].clone_from_slice(&self.rows[..=max_n - by]);
        }
        BivariateSeries { rows }
    }

    /// Multiplicative inverse; requires the `z^0` row to be exactly `1`.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows[0] != [1] {
            return Err(Error::InvalidInput(
                "series inverse needs constant term 1".into(),
            ));
        }
        let max_n = self.max_n();
        let mut inv: Vec<Vec<i64>> = alloc::vec![Vec::new(); max_n + 1];
        inv[0] = alloc::vec![1];
        for n in 1..=max_n {
            let mut acc = Vec::new();
            for i in 1..=n {
                poly_mul_acc(&mut acc, &self.rows[i], &inv[n - i])?;
            }
            inv[n] = trim(
                acc.into_iter()
                    .map(|c| c.checked_neg().ok_or(Error::Overflow))
                    .collect::<Result<_>>()?,
            );
        }
        Ok(BivariateSeries { rows: inv })
    }

    /// Sum of each row's coefficients (the `q = 1` specialization).
    pub fn row_sums(&self) -> Result<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().try_fold(0i64, |a, &c| add_checked(a, c)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let one = BivariateSeries::one(4);
        let z = BivariateSeries::monomial(4, 1, 0, 1);
        let one_minus_z = one.sub(&z).unwrap();
        let geometric = one_minus_z.inverse().unwrap();
        for n in 0..=4 {
            assert_eq!(geometric.coeff(n, 0), 1);
        }
        assert_eq!(geometric.mul(&one_minus_z).unwrap(), one);
        assert_eq!(z.shift_z(4), BivariateSeries::zero(4));
        assert_eq!(z.shift_z(2).coeff(3, 0), 1);
    }

    #[test]
    fn overflow_is_reported() {
        let big = BivariateSeries::monomial(2, 1, 0, i64::MAX);
        assert_eq!(big.add(&big), Err(Error::Overflow));
        assert!(BivariateSeries::monomial(2, 1, 0, 1).inverse().is_err());
    }
}
