//! How each cited sequence is read off a distribution table.
//!
//! A triangle is flattened row by row, `k` increasing within each `n`,
//! starting from row `first_n`. The first emitted term gets b-file index
//! `offset`. These conventions are not checked against OEIS until a fetch
//! succeeds; `oeis --check` is the place to find out.

use num_bigint::BigInt;
use permstat_core::distributions::{distribution, Method, ProfileSource};
use permstat_core::formulas::FormulaId;
use permstat_core::{PatternSet, StatKind};

/// Which `k` values row `n` contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowLength {
    /// `0 ≤ k ≤ n - 1`
    Full,
    /// `0 ≤ k ≤ ⌊(n - 1)/2⌋`
    HalfBelow,
    /// `0 ≤ k ≤ ⌊n/2⌋`
    Half,
    /// `0 ≤ k ≤ max(0, n - 2)`
    ShortBy2,
    /// Just the class size.
    Total,
}

impl RowLength {
    pub fn len(self, n: usize) -> usize {
        match self {
            RowLength::Full => n,
            RowLength::HalfBelow => n.saturating_sub(1) / 2 + 1,
            RowLength::Half => n / 2 + 1,
            RowLength::ShortBy2 => n.saturating_sub(2) + 1,
            RowLength::Total => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flattening {
    pub id: &'static str,
    /// `None` for class sizes.
    pub stat: Option<StatKind>,
    pub basis: &'static str,
    pub first_n: usize,
    pub row: RowLength,
    pub offset: i64,
}

const fn tri(
    id: &'static str,
    stat: StatKind,
    basis: &'static str,
    first_n: usize,
    row: RowLength,
    offset: i64,
) -> Flattening {
    Flattening {
        id,
        stat: Some(stat),
        basis,
        first_n,
        row,
        offset,
    }
}

pub const REGISTRY: [Flattening; 10] = [
    Flattening {
        id: "A000108",
        stat: None,
        basis: "231",
        first_n: 0,
        row: RowLength::Total,
        offset: 0,
    },
    tri("A001263", StatKind::Asc, "231", 1, RowLength::Full, 1),
    tri("A007318", StatKind::Asc, "213,312", 1, RowLength::Full, 0),
    tri("A034839", StatKind::Asc, "123,132", 0, RowLength::Half, 0),
    tri(
        "A034867",
        StatKind::Pk,
        "132,213",
        1,
        RowLength::HalfBelow,
        0,
    ),
    tri(
        "A076791",
        StatKind::Ddes,
        "132,213",
        1,
        RowLength::ShortBy2,
        0,
    ),
    tri("A091894", StatKind::Pk, "231", 1, RowLength::HalfBelow, 1),
    tri(
        "A093560",
        StatKind::Ddes,
        "123,132",
        3,
        RowLength::ShortBy2,
        1,
    ),
    tri(
        "A119462",
        StatKind::Vl,
        "123,132",
        2,
        RowLength::HalfBelow,
        1,
    ),
    tri(
        "A299927",
        StatKind::Dasc,
        "213,312",
        1,
        RowLength::ShortBy2,
        1,
    ),
];

pub fn lookup(id: &str) -> Option<&'static Flattening> {
    REGISTRY.iter().find(|f| f.id.eq_ignore_ascii_case(id))
}

/// The registered sequence read off one of the formula's targets.
pub fn lookup_formula(formula: FormulaId) -> Option<&'static Flattening> {
    REGISTRY.iter().find(|f| {
        f.stat.is_some_and(|s| {
            formula
                .targets()
                .iter()
                .any(|(ts, tb)| *ts == s && *tb == f.basis)
        })
    })
}

/// Local terms for rows `first_n..=max_n`. Rows come from the closed form
/// where one is registered and valid, otherwise from the oracle.
pub fn local_terms(
    flat: &Flattening,
    max_n: usize,
    source: &dyn ProfileSource,
) -> permstat_core::Result<Vec<(i64, BigInt)>> {
    let basis: PatternSet = flat.basis.parse()?;
    let mut values = Vec::new();
    for n in flat.first_n..=max_n {
        match flat.stat {
            None => values.push(source.profile(&basis, n)?.size),
            Some(stat) => {
                let closed = FormulaId::for_target(stat, flat.basis).filter(|id| n >= id.min_n());
                let method = if closed.is_some() {
                    Method::ClosedForm
                } else {
                    Method::Oracle
                };
                let row = distribution(stat, &basis, n, method, source)?;
                values
                    .extend((0..flat.row.len(n)).map(|k| row.counts.get(&k).copied().unwrap_or(0)));
            }
        }
    }
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(i, v)| (flat.offset + i as i64, BigInt::from(v)))
        .collect())
}
