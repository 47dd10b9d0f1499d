//! Closed forms for statistic distributions over pattern classes, and the
//! series engines for the distributions that have generating functions
//! instead.
//!
//! Binomials vanish outside `0 ≤ b ≤ a`, so piecewise formulas are written
//! as single expressions wherever the cases collapse.

use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::numbers::{binomial, catalan, pow2};
use crate::series::BivariateSeries;
use crate::stats::StatKind;

/// One closed-form result in the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    /// pk over `S_n(231)`.
    Pk231,
    /// asc and des over `S_n(ρ)`, `ρ ∈ {132, 213, 231, 312}`.
    Narayana,
    Asc213312,
    Dasc213312,
    Pk213312,
    Vl213312,
    /// asc and des over `S_n(132,213)` and `S_n(213,231)`.
    Asc132213,
    /// pk and vl over `S_n(132,213)` and `S_n(213,231)`.
    Pk132213,
    Asc123132,
    Des123132,
    Dasc123132,
    Ddes123132,
    Pk123132,
    Vl123132,
    Asc132321,
    Des132321,
    Dasc132321,
    Ddes132321,
    Pk132321,
    Vl132321,
}

use FormulaId::*;
use StatKind::{Asc, Dasc, Ddes, Des, Pk, Vl};

impl FormulaId {
    pub const ALL: [FormulaId; 20] = [
        Pk231, Narayana, Asc213312, Dasc213312, Pk213312, Vl213312, Asc132213, Pk132213, Asc123132,
        Des123132, Dasc123132, Ddes123132, Pk123132, Vl123132, Asc132321, Des132321, Dasc132321,
        Ddes132321, Pk132321, Vl132321,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pk231 => "PK231",
            Narayana => "NARAYANA",
            Asc213312 => "ASC_213_312",
            Dasc213312 => "DASC_213_312",
            Pk213312 => "PK_213_312",
            Vl213312 => "VL_213_312",
            Asc132213 => "ASC_132_213",
            Pk132213 => "PK_132_213",
            Asc123132 => "ASC_123_132",
            Des123132 => "DES_123_132",
            Dasc123132 => "DASC_123_132",
            Ddes123132 => "DDES_123_132",
            Pk123132 => "PK_123_132",
            Vl123132 => "VL_123_132",
            Asc132321 => "ASC_132_321",
            Des132321 => "DES_132_321",
            Dasc132321 => "DASC_132_321",
            Ddes132321 => "DDES_132_321",
            Pk132321 => "PK_132_321",
            Vl132321 => "VL_132_321",
        }
    }

    /// The (statistic, basis) pairs whose distribution this formula gives.
    pub fn targets(self) -> &'static [(StatKind, &'static str)] {
        match self {
            Pk231 => &[(Pk, "231")],
            Narayana => &[
                (Asc, "132"),
                (Des, "132"),
                (Asc, "213"),
                (Des, "213"),
                (Asc, "231"),
                (Des, "231"),
                (Asc, "312"),
                (Des, "312"),
            ],
            Asc213312 => &[(Asc, "213,312"), (Des, "213,312")],
            Dasc213312 => &[(Dasc, "213,312"), (Ddes, "213,312")],
            Pk213312 => &[(Pk, "213,312")],
            Vl213312 => &[(Vl, "213,312")],
            Asc132213 => &[
                (Asc, "132,213"),
                (Des, "132,213"),
                (Asc, "213,231"),
                (Des, "213,231"),
            ],
            Pk132213 => &[
                (Pk, "132,213"),
                (Vl, "132,213"),
                (Pk, "213,231"),
                (Vl, "213,231"),
            ],
            Asc123132 => &[(Asc, "123,132")],
            Des123132 => &[(Des, "123,132")],
            Dasc123132 => &[(Dasc, "123,132")],
            Ddes123132 => &[(Ddes, "123,132")],
            Pk123132 => &[(Pk, "123,132")],
            Vl123132 => &[(Vl, "123,132")],
            Asc132321 => &[(Asc, "132,321")],
            Des132321 => &[(Des, "132,321")],
            Dasc132321 => &[(Dasc, "132,321")],
            Ddes132321 => &[(Ddes, "132,321")],
            Pk132321 => &[(Pk, "132,321")],
            Vl132321 => &[(Vl, "132,321")],
        }
    }

    /// Smallest `n` for which the formula is stated to hold.
    pub fn min_n(self) -> usize {
        match self {
            Dasc123132 | Ddes123132 | Dasc132321 | Ddes132321 => 3,
            Pk213312 | Vl123132 | Vl132321 => 2,
            _ => 1,
        }
    }

    /// The registered formula for `(stat, basis)`, if any.
    pub fn for_target(stat: StatKind, basis: &str) -> Option<FormulaId> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.targets().iter().any(|(s, b)| *s == stat && *b == basis))
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFormula(s.into()))
    }
}

fn c(a: usize, b: usize) -> Result<u64> {
    binomial(a as i64, b as i64)
}

// C(a, b) with `b` possibly negative.
fn cs(a: i64, b: i64) -> Result<u64> {
    binomial(a, b)
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn when(cond: bool, v: u64) -> u64 {
    if cond {
        v
    } else {
        0
    }
}

/// `a_{n,k}` for the statistic and class the formula describes.
pub fn closed_form(id: FormulaId, n: usize, k: usize) -> Result<u64> {
    if n < id.min_n() {
        return Err(Error::OutOfDomain {
            formula: id.name(),
            n,
            min_n: id.min_n(),
        });
    }
    let (ni, ki) = (n as i64, k as i64);
    let pairs = c(n, 2)?;
    Ok(match id {
        Pk231 => {
            if 2 * k + 1 > n {
                0
            } else {
                mul(mul(pow2(n - 2 * k - 1)?, c(n - 1, 2 * k)?)?, catalan(k)?)?
            }
        }
        Narayana => mul(c(n - 1, k)?, c(n, k)?)? / (k as u64 + 1),
        Asc213312 | Asc132213 => c(n - 1, k)?,
        Dasc213312 => {
            if k == 0 {
                n as u64
            } else {
                c(n - 1, k + 1)?
            }
        }
        Pk213312 => match k {
            0 => 2,
            1 => pow2(n - 1)? - 2,
            _ => 0,
        },
        Vl213312 => when(k == 0, pow2(n - 1)?),
        Pk132213 | Pk123132 => c(n, 2 * k + 1)?,
        Asc123132 => c(n, 2 * k)?,
        Des123132 => cs(ni, 2 * (ni - ki - 1))?,
        Dasc123132 => when(k == 0, pow2(n - 1)?),
        Ddes123132 => add(c(n - 2, k)?, mul(2, c(n - 3, k)?)?)?,
        Vl123132 => mul(2, c(n - 1, 2 * k)?)?,
        Asc132321 => when(k == n - 1, 1) + when(k + 2 == n, pairs),
        Des132321 => when(k == 0, 1) + when(k == 1, pairs),
        Dasc132321 => {
            when(k + 2 == n, 1) + when(k + 3 == n, n as u64) + when(k + 4 == n, pairs - n as u64)
        }
        Ddes132321 => when(k == 0, pairs + 1),
        Pk132321 => when(k == 0, n as u64) + when(k == 1, c(n - 1, 2)?),
        Vl132321 => when(k == 0, 2) + when(k == 1, pairs - 1),
    })
}

/// The full row `k = 0..` of a closed form, without trailing zeros.
pub fn closed_form_row(id: FormulaId, n: usize) -> Result<alloc::vec::Vec<u64>> {
    let mut row: alloc::vec::Vec<u64> = (0..n.max(1))
        .map(|k| closed_form(id, n, k))
        .collect::<Result<_>>()?;
    while row.last() == Some(&0) {
        row.pop();
    }
    Ok(row)
}

/// `|S_n(B)|` for the bases with a known count.
pub fn known_class_size(basis: &str, n: usize) -> Result<Option<u64>> {
    Ok(match basis {
        "123" | "132" | "213" | "231" | "312" | "321" => Some(catalan(n)?),
        "213,312" | "132,213" | "213,231" | "123,132" => {
            Some(if n == 0 { 1 } else { pow2(n - 1)? })
        }
        "132,321" => Some(if n == 0 { 1 } else { add(c(n, 2)?, 1)? }),
        "123,321" => Some(match n {
            0 | 1 => 1,
            2 => 2,
            3 => 4,
            4 => 4,
            _ => 0,
        }),
        _ => None,
    })
}

/// `A(q, z)`: the des distribution over `S_n(321)`, from the fixed point of
/// `G = 1 + z(1 - z + qz) G²`.
pub fn series_des321(max_n: usize) -> Result<BivariateSeries> {
    let one = BivariateSeries::one(max_n);
    let z = BivariateSeries::monomial(max_n, 1, 0, 1);
    let factor = z
        .sub(&BivariateSeries::monomial(max_n, 2, 0, 1))?
        .add(&BivariateSeries::monomial(max_n, 2, 1, 1))?;
    let mut g = one.clone();
    // each pass fixes one more z-degree
    for _ in 0..=max_n {
        g = one.add(&factor.mul(&g.mul(&g)?)?)?;
    }
    Ok(g)
}

/// `C(q, z) = 1 + z A²`: the pk distribution over `S_n(321)`.
pub fn series_pk321(max_n: usize) -> Result<BivariateSeries> {
    let a = series_des321(max_n)?;
    BivariateSeries::one(max_n).add(&a.mul(&a)?.shift_z(1))
}

/// `B = (A - 1) / A`, the st distribution over indecomposable Dyck words.
pub fn series_b(max_n: usize) -> Result<BivariateSeries> {
    let a = series_des321(max_n)?;
    a.sub(&BivariateSeries::one(max_n))?.mul(&a.inverse()?)
}

/// `D = z A`, the st* distribution over indecomposable Dyck words.
pub fn series_d(max_n: usize) -> Result<BivariateSeries> {
    Ok(series_des321(max_n)?.shift_z(1))
}

/// `(1 - qz) / (1 - z - z² - qz + qz²)`: the ddes distribution over
/// `S_n(132,213)`, expanded row by row from
/// `F_n = (1 + q) F_{n-1} + (1 - q) F_{n-2} + [n = 0] - q [n = 1]`.
pub fn series_ddes_132_213(max_n: usize) -> Result<BivariateSeries> {
    let mut rows: alloc::vec::Vec<alloc::vec::Vec<i64>> = alloc::vec::Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut row = alloc::vec![0i64; n + 2];
        if n == 0 {
            row[0] = 1;
        }
        if n == 1 {
            row[1] -= 1;
        }
        if n >= 1 {
            for (k, &x) in rows[n - 1].iter().enumerate() {
                row[k] = row[k].checked_add(x).ok_or(Error::Overflow)?;
                row[k + 1] = row[k + 1].checked_add(x).ok_or(Error::Overflow)?;
            }
        }
        if n >= 2 {
            for (k, &x) in rows[n - 2].iter().enumerate() {
                row[k] = row[k].checked_add(x).ok_or(Error::Overflow)?;
                row[k + 1] = row[k + 1].checked_sub(x).ok_or(Error::Overflow)?;
            }
        }
        rows.push(row);
    }
    Ok(BivariateSeries::from_rows(max_n, rows))
}

/// The named series engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    Des321,
    Pk321,
    B,
    D,
    Ddes132213,
}

impl SeriesName {
    pub const ALL: [SeriesName; 5] = [
        SeriesName::Des321,
        SeriesName::Pk321,
        SeriesName::B,
        SeriesName::D,
        SeriesName::Ddes132213,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesName::Des321 => "des321",
            SeriesName::Pk321 => "pk321",
            SeriesName::B => "B",
            SeriesName::D => "D",
            SeriesName::Ddes132213 => "ddes132213",
        }
    }

    pub fn build(self, max_n: usize) -> Result<BivariateSeries> {
        match self {
            SeriesName::Des321 => series_des321(max_n),
            SeriesName::Pk321 => series_pk321(max_n),
            SeriesName::B => series_b(max_n),
            SeriesName::D => series_d(max_n),
            SeriesName::Ddes132213 => series_ddes_132_213(max_n),
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::InvalidInput(alloc::format!("unknown series {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(Pk231, 4, 1).unwrap(), 6);
        assert_eq!(closed_form(Pk231, 4, 0).unwrap(), 8);
        assert_eq!(closed_form(Pk231, 4, 2).unwrap(), 0);
        assert_eq!(closed_form(Asc213312, 5, 2).unwrap(), 6);
        assert_eq!(closed_form(Vl132321, 4, 1).unwrap(), 5);
        assert!(matches!(
            closed_form(Ddes123132, 2, 0),
            Err(Error::OutOfDomain { .. })
        ));
        assert_eq!("pk231".parse::<FormulaId>().unwrap(), Pk231);
        assert!(matches!(
            "NOPE".parse::<FormulaId>(),
            Err(Error::UnknownFormula(_))
        ));
    }

    #[test]
    fn rows_sum_to_class_sizes() {
        for id in FormulaId::ALL {
            for n in id.min_n()..=10 {
                let total: u64 = closed_form_row(id, n).unwrap().iter().sum();
                for (_, basis) in id.targets() {
                    assert_eq!(
                        Some(total),
                        known_class_size(basis, n).unwrap(),
                        "{id} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn series_small_coefficients() {
        let a = series_des321(10).unwrap();
        assert_eq!(a.coeff(0, 0), 1);
        assert_eq!(a.coeff(3, 1), 4);
        let sums = a.row_sums().unwrap();
        for (n, s) in sums.iter().enumerate() {
            assert_eq!(*s as u64, catalan(n).unwrap());
        }
        let c = series_pk321(6).unwrap();
        assert_eq!(c.coeff(3, 1), 2);
        assert_eq!(c.coeff(1, 0), 1);
        let b = series_b(6).unwrap();
        assert_eq!(b.coeff(1, 0), 1);
        assert_eq!(b.coeff(1, 1), 0);
        let f = series_ddes_132_213(10).unwrap();
        assert_eq!(f.coeff(0, 0), 1);
        let sums = f.row_sums().unwrap();
        for (n, s) in sums.iter().enumerate().skip(1) {
            assert_eq!(*s, 1 << (n - 1));
        }
    }
}
