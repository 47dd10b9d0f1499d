//! Distribution tables `k ↦ a_{n,k}` computed by brute force, by closed
//! form, or from a series, plus symmetry checks between classes.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::formulas::{
    closed_form_row, series_b, series_ddes_132_213, series_des321, series_pk321, FormulaId,
};
use crate::generators::{gen_class, gen_class_with_first, Caps, ClassSpec};
use crate::perm::{PatternSet, Perm, Symmetry};
use crate::stats::{all_stats, StatKind};
use crate::verify::{Counterexample, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Oracle,
    ClosedForm,
    Series,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Oracle, Method::ClosedForm, Method::Series];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::ClosedForm => "closed_form",
            Method::Series => "series",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || (s == "closed-form" && *m == Method::ClosedForm))
            .ok_or_else(|| Error::InvalidInput(alloc::format!("unknown method {s:?}")))
    }
}

/// Counts for one `n`; zero counts are left out.
pub type Counts = BTreeMap<usize, u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistRow {
    pub basis: PatternSet,
    pub stat: StatKind,
    pub n: usize,
    pub counts: Counts,
    pub method: Method,
}

impl DistRow {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Rows for several `n`, all sharing basis, statistic and method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistTable {
    pub basis: PatternSet,
    pub stat: StatKind,
    pub method: Method,
    pub rows: BTreeMap<usize, Counts>,
}

impl DistTable {
    pub fn new(basis: PatternSet, stat: StatKind, method: Method) -> Self {
        DistTable {
            basis,
            stat,
            method,
            rows: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, row: DistRow) {
        self.rows.insert(row.n, row.counts);
    }

    pub fn row(&self, n: usize) -> Option<DistRow> {
        self.rows.get(&n).map(|counts| DistRow {
            basis: self.basis.clone(),
            stat: self.stat,
            n,
            counts: counts.clone(),
            method: self.method,
        })
    }
}

/// All six statistics tallied over one class `S_n(B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassProfile {
    pub n: usize,
    pub size: u64,
    /// `tallies[stat.index()][k]`.
    pub tallies: [Vec<u64>; 6],
}

impl ClassProfile {
    pub fn empty(n: usize) -> Self {
        ClassProfile {
            n,
            size: 0,
            tallies: core::array::from_fn(|_| alloc::vec![0; n + 1]),
        }
    }

    pub fn add_perm(&mut self, p: &Perm) {
        self.size += 1;
        for (i, v) in all_stats(p).into_iter().enumerate() {
            self.tallies[i][v] += 1;
        }
    }

    /// Adds counts from a disjoint part of the same class.
    pub fn merge(&mut self, other: &ClassProfile) {
        self.size += other.size;
        for (mine, theirs) in self.tallies.iter_mut().zip(&other.tallies) {
            for (a, b) in mine.iter_mut().zip(theirs) {
                *a += b;
            }
        }
    }

    pub fn counts(&self, stat: StatKind) -> Counts {
        to_counts(&self.tallies[stat.index()])
    }
}

pub(crate) fn to_counts(tally: &[u64]) -> Counts {
    tally
        .iter()
        .enumerate()
        .filter(|(_, c)| **c > 0)
        .map(|(k, c)| (k, *c))
        .collect()
}

/// Tallies the members of `S_n(B)` whose first entry is `first`.
pub fn profile_part(
    basis: &PatternSet,
    n: usize,
    first: usize,
    caps: &Caps,
) -> Result<ClassProfile> {
    let mut profile = ClassProfile::empty(n);
    for p in gen_class_with_first(n, basis, first, caps)? {
        profile.add_perm(&p);
    }
    Ok(profile)
}

/// Where class profiles come from. The std companion crate supplies a
/// multi-threaded implementation; results must not depend on it.
pub trait ProfileSource: Sync {
    fn profile(&self, basis: &PatternSet, n: usize) -> Result<ClassProfile>;
    fn caps(&self) -> &Caps;
}

/// Single-threaded profiles from the lexicographic filter generator.
#[derive(Clone, Debug, Default)]
pub struct Sequential {
    pub caps: Caps,
}

impl Sequential {
    pub fn new(caps: Caps) -> Self {
        Sequential { caps }
    }
}

impl ProfileSource for Sequential {
    fn profile(&self, basis: &PatternSet, n: usize) -> Result<ClassProfile> {
        let mut profile = ClassProfile::empty(n);
        for p in gen_class(&ClassSpec::filter(n, basis.clone()), &self.caps)? {
            profile.add_perm(&p);
        }
        Ok(profile)
    }

    fn caps(&self) -> &Caps {
        &self.caps
    }
}

fn basis_key(basis: &PatternSet) -> String {
    basis.to_string()
}

fn series_counts(row: &[i64]) -> Result<Counts> {
    let mut out = Counts::new();
    for (k, &c) in row.iter().enumerate() {
        if c < 0 {
            return Err(Error::InvalidInput(alloc::format!(
                "negative series coefficient at q^{k}"
            )));
        }
        if c > 0 {
            out.insert(k, c as u64);
        }
    }
    Ok(out)
}

/// Whether the series method covers `(stat, basis)`.
pub fn series_supported(stat: StatKind, basis: &str) -> bool {
    matches!(
        (stat, basis),
        (StatKind::Des, "321")
            | (StatKind::Pk, "321")
            | (StatKind::Vl, "321")
            | (StatKind::Pk, "312")
            | (StatKind::Pk, "231")
            | (StatKind::Dasc | StatKind::Ddes, "132,213" | "213,231")
    )
}

fn series_row(stat: StatKind, basis: &str, n: usize, caps: &Caps) -> Result<Counts> {
    if !series_supported(stat, basis) {
        return Err(Error::Unsupported(alloc::format!(
            "no series for {stat} over S_n({basis})"
        )));
    }
    let needed = if basis == "231" { n + 1 } else { n };
    Caps::check("series degree", needed, caps.series)?;
    match (stat, basis) {
        (StatKind::Des, _) => series_counts(series_des321(n)?.row(n)),
        (StatKind::Pk | StatKind::Vl, "321" | "312") => series_counts(series_pk321(n)?.row(n)),
        (StatKind::Pk, _) => {
            // B = z(1 - q) + Σ a^pk_{n,k}(231) q^{k+1} z^{n+1}
            if n == 0 {
                return Ok(Counts::from([(0, 1)]));
            }
            let b = series_b(n + 1)?;
            let shifted = b.row(n + 1).get(1..).unwrap_or(&[]);
            series_counts(shifted)
        }
        _ => series_counts(series_ddes_132_213(n)?.row(n)),
    }
}

fn closed_form_counts(stat: StatKind, basis: &str, n: usize) -> Result<Counts> {
    let id = FormulaId::for_target(stat, basis).ok_or_else(|| {
        Error::Unsupported(alloc::format!(
            "no closed form for {stat} over S_n({basis})"
        ))
    })?;
    Ok(to_counts(&closed_form_row(id, n)?))
}

/// `a_{n,k}^{stat}(B)` for every `k`, computed by the chosen method.
pub fn distribution(
    stat: StatKind,
    basis: &PatternSet,
    n: usize,
    method: Method,
    source: &dyn ProfileSource,
) -> Result<DistRow> {
    let key = basis_key(basis);
    let counts = match method {
        Method::Oracle => source.profile(basis, n)?.counts(stat),
        Method::ClosedForm => closed_form_counts(stat, &key, n)?,
        Method::Series => series_row(stat, &key, n, source.caps())?,
    };
    Ok(DistRow {
        basis: basis.clone(),
        stat,
        n,
        counts,
        method,
    })
}

/// Rows for `n` in `ns`, in increasing order.
pub fn distribution_table(
    stat: StatKind,
    basis: &PatternSet,
    ns: impl IntoIterator<Item = usize>,
    method: Method,
    source: &dyn ProfileSource,
) -> Result<DistTable> {
    let mut table = DistTable::new(basis.clone(), stat, method);
    for n in ns {
        table.insert(distribution(stat, basis, n, method, source)?);
    }
    Ok(table)
}

/// First `k` where two rows differ, with both values.
pub fn first_difference(expected: &Counts, actual: &Counts) -> Option<(usize, u64, u64)> {
    let keys: alloc::collections::BTreeSet<usize> =
        expected.keys().chain(actual.keys()).copied().collect();
    keys.into_iter().find_map(|k| {
        let e = expected.get(&k).copied().unwrap_or(0);
        let a = actual.get(&k).copied().unwrap_or(0);
        (e != a).then_some((k, e, a))
    })
}

/// Checks `a^{stat}_{n,k}(B) = a^{stat'}_{n,k}(t(B))` for `n ≤ max_n`, where
/// `stat'` is the statistic `stat` becomes under `t`.
pub fn symmetry_check(
    stat: StatKind,
    basis: &PatternSet,
    t: Symmetry,
    max_n: usize,
    source: &dyn ProfileSource,
) -> Result<VerifyReport> {
    let image = basis.transform(t);
    let partner = stat.partner(t);
    let name = alloc::format!("{stat}({basis}) = {partner}({image}) under {}", t.name());
    let mut report = VerifyReport::new(name, 0, max_n);
    for n in 0..=max_n {
        let left = source.profile(basis, n)?.counts(stat);
        let right = source.profile(&image, n)?.counts(partner);
        let cells = left.len().max(right.len());
        match first_difference(&left, &right) {
            None => report.record(n, cells, None),
            Some((k, e, a)) => report.record(n, cells, Some(Counterexample::values(n, k, e, a))),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        let src = Sequential::default();
        let row = distribution(StatKind::Pk, &basis("231"), 4, Method::Oracle, &src).unwrap();
        assert_eq!(row.counts, Counts::from([(0, 8), (1, 6)]));
        let row = distribution(StatKind::Vl, &basis("213,312"), 6, Method::Oracle, &src).unwrap();
        assert_eq!(row.counts, Counts::from([(0, 32)]));
        let row = distribution(
            StatKind::Asc,
            &basis("132,321"),
            5,
            Method::ClosedForm,
            &src,
        )
        .unwrap();
        assert_eq!(row.counts, Counts::from([(4, 1), (3, 10)]));
        let oracle =
            distribution(StatKind::Asc, &basis("132,321"), 5, Method::Oracle, &src).unwrap();
        assert_eq!(oracle.counts, row.counts);
    }

    #[test]
    fn unsupported_methods() {
        let src = Sequential::default();
        assert!(matches!(
            distribution(StatKind::Dasc, &basis("321"), 4, Method::ClosedForm, &src),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            distribution(StatKind::Asc, &basis("321"), 4, Method::Series, &src),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn series_rows_match_oracle() {
        let src = Sequential::default();
        for (stat, b) in [
            (StatKind::Des, "321"),
            (StatKind::Pk, "321"),
            (StatKind::Vl, "321"),
            (StatKind::Pk, "312"),
            (StatKind::Pk, "231"),
            (StatKind::Dasc, "132,213"),
            (StatKind::Ddes, "213,231"),
        ] {
            for n in 0..=7 {
                let s = distribution(stat, &basis(b), n, Method::Series, &src).unwrap();
                let o = distribution(stat, &basis(b), n, Method::Oracle, &src).unwrap();
                assert_eq!(s.counts, o.counts, "{stat} {b} n={n}");
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        let src = Sequential::default();
        let r = symmetry_check(StatKind::Asc, &basis("231"), Symmetry::Reverse, 7, &src).unwrap();
        assert!(r.passed);
        let r = symmetry_check(StatKind::Pk, &basis("321"), Symmetry::Reverse, 7, &src).unwrap();
        assert!(r.passed);
        let r = symmetry_check(StatKind::Dasc, &basis("231"), Symmetry::Identity, 5, &src).unwrap();
        assert!(r.passed);
    }
}
