//! Registry of checks tying every closed form, series and bijection to the
//! brute-force oracle.
//!
//! Each check covers `n` from its own lower bound up to the requested
//! maximum and produces one [`VerifyReport`]. A failing check is report
//! content, not an error; errors are reserved for bad requests (unknown
//! check names, caps exceeded).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::bijections::{
    dec_123_132, dec_132_213, dec_213_231, enc_123_132, enc_132_213, enc_213_231, iota, phi231,
    phi231_inv, predicted_stat_123_132, predicted_stat_132_213, predicted_stat_213_231, psi321,
    psi321_inv, psi_hat, zeta, zeta_inv, Bits,
};
use crate::distributions::{first_difference, to_counts, ClassProfile, Counts, ProfileSource};
use crate::dyck::{DyckWord, Step};
use crate::error::{Error, Result};
use crate::formulas::{closed_form_row, known_class_size, FormulaId, SeriesName};
use crate::generators::{
    gen_bits, gen_class, gen_dyck, gen_indec, ClassSpec, GenMethod, STRUCTURED_BASES,
};
use crate::perm::{PatternSet, Perm, Symmetry};
use crate::stats::{stat, StatKind};

/// The first failure found by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub k: Option<usize>,
    pub expected: Option<i128>,
    pub actual: Option<i128>,
    pub witness: Option<String>,
}

impl Counterexample {
    pub fn values(n: usize, k: usize, expected: u64, actual: u64) -> Self {
        Counterexample {
            n,
            k: Some(k),
            expected: Some(expected.into()),
            actual: Some(actual.into()),
            witness: None,
        }
    }

    pub fn witness(n: usize, witness: String) -> Self {
        Counterexample {
            n,
            k: None,
            expected: None,
            actual: None,
            witness: Some(witness),
        }
    }
}

/// Outcome of one check for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NStatus {
    pub n: usize,
    /// Number of `(n, k)` cells or objects compared.
    pub cells: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub name: String,
    pub min_n: usize,
    pub max_n: usize,
    pub per_n: Vec<NStatus>,
    pub counterexample: Option<Counterexample>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn new(name: impl Into<String>, min_n: usize, max_n: usize) -> Self {
        VerifyReport {
            name: name.into(),
            min_n,
            max_n,
            per_n: Vec::new(),
            counterexample: None,
            passed: true,
        }
    }

    /// Records the outcome for `n`; the first failure is kept as the
    /// counterexample.
    pub fn record(&mut self, n: usize, cells: usize, failure: Option<Counterexample>) {
        let passed = failure.is_none();
        if let Some(c) = failure {
            if self.counterexample.is_none() {
                self.counterexample = Some(c);
            }
            self.passed = false;
        }
        match self.per_n.iter_mut().find(|s| s.n == n) {
            Some(s) => {
                s.cells += cells;
                s.passed &= passed;
            }
            None => self.per_n.push(NStatus { n, cells, passed }),
        }
    }
}

/// Perturbations used to confirm that the harness can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Adds one to the `k = 0` value of the formula at every `n`.
    OffByOne(FormulaId),
}

const SINGLES: [&str; 6] = ["123", "132", "213", "231", "312", "321"];
const PAIRS: [&str; 6] = [
    "123,321", "213,312", "132,213", "213,231", "123,132", "132,321",
];
const FAMILIES: [(&str, StatKind); 3] = [
    ("ASC_DES", StatKind::Asc),
    ("DASC_DDES", StatKind::Dasc),
    ("PK_VL", StatKind::Pk),
];

fn underscored(basis: &str) -> String {
    basis.replace(',', "_")
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Check {
    Card(&'static str),
    Structured(&'static str),
    Formula(FormulaId),
    SeriesDes321,
    SeriesPk321,
    SeriesD,
    BIdentity,
    SeriesDdes132213,
    LemmaA,
    LemmaD,
    Phi231Roundtrip,
    Phi231Duu,
    Psi321Roundtrip,
    Psi321Pk,
    PsiHatDes,
    Zeta,
    IotaInvolution,
    Enc132213,
    Enc213231,
    Enc123132,
    Pk312Eq321,
    Stat132213Eq213231,
    Symmetry(&'static str, &'static str, StatKind),
}

impl Check {
    fn name(&self) -> String {
        match self {
            Check::Card(b) => alloc::format!("CARD_{}", underscored(b)),
            Check::Structured(b) => alloc::format!("GEN_STRUCTURED_{}", underscored(b)),
            Check::Formula(id) => id.name().to_string(),
            Check::SeriesDes321 => "SERIES_DES321".into(),
            Check::SeriesPk321 => "SERIES_PK321".into(),
            Check::SeriesD => "SERIES_D".into(),
            Check::BIdentity => "B_IDENTITY".into(),
            Check::SeriesDdes132213 => "SERIES_DDES_132_213".into(),
            Check::LemmaA => "LEMMA_A_EQUIDISTRIBUTION".into(),
            Check::LemmaD => "LEMMA_D_EQUIDISTRIBUTION".into(),
            Check::Phi231Roundtrip => "PHI231_ROUNDTRIP".into(),
            Check::Phi231Duu => "PHI231_DUU".into(),
            Check::Psi321Roundtrip => "PSI321_ROUNDTRIP".into(),
            Check::Psi321Pk => "PSI321_PK".into(),
            Check::PsiHatDes => "PSI_HAT_DES".into(),
            Check::Zeta => "ZETA".into(),
            Check::IotaInvolution => "IOTA_INVOLUTION".into(),
            Check::Enc132213 => "ENC_132_213".into(),
            Check::Enc213231 => "ENC_213_231".into(),
            Check::Enc123132 => "ENC_123_132".into(),
            Check::Pk312Eq321 => "PK_312_EQ_321".into(),
            Check::Stat132213Eq213231 => "STAT_132_213_EQ_213_231".into(),
            Check::Symmetry(family, b, _) => alloc::format!("SYM_{family}_{}", underscored(b)),
        }
    }

    fn min_n(&self) -> usize {
        match self {
            Check::Formula(id) => id.min_n(),
            Check::Enc132213 | Check::Enc213231 | Check::Enc123132 => 1,
            _ => 0,
        }
    }
}

fn registry() -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend(SINGLES.iter().chain(&PAIRS).map(|b| Check::Card(b)));
    checks.extend(STRUCTURED_BASES.iter().map(|b| Check::Structured(b)));
    checks.extend(FormulaId::ALL.into_iter().map(Check::Formula));
    checks.extend([
        Check::SeriesDes321,
        Check::SeriesPk321,
        Check::SeriesD,
        Check::BIdentity,
        Check::SeriesDdes132213,
        Check::LemmaA,
        Check::LemmaD,
        Check::Phi231Roundtrip,
        Check::Phi231Duu,
        Check::Psi321Roundtrip,
        Check::Psi321Pk,
        Check::PsiHatDes,
        Check::Zeta,
        Check::IotaInvolution,
        Check::Enc132213,
        Check::Enc213231,
        Check::Enc123132,
        Check::Pk312Eq321,
        Check::Stat132213Eq213231,
    ]);
    for b in SINGLES.iter().chain(&PAIRS) {
        for (family, stat) in FAMILIES {
            checks.push(Check::Symmetry(family, b, stat));
        }
    }
    checks
}

/// Names of every registered check, in run order.
pub fn check_names() -> Vec<String> {
    registry().iter().map(Check::name).collect()
}

/// Runs the checks (all of them when `selection` is `None`) for
/// `n ≤ max_n`, in registry order.
pub fn verify_all(
    max_n: usize,
    selection: Option<&[String]>,
    source: &dyn ProfileSource,
    fault: Option<Fault>,
) -> Result<Vec<VerifyReport>> {
    let all = registry();
    let chosen: Vec<Check> = match selection {
        None => all,
        Some(names) => {
            for name in names {
                if !all.iter().any(|c| c.name().eq_ignore_ascii_case(name)) {
                    return Err(Error::UnknownFormula(name.clone()));
                }
            }
            all.into_iter()
                .filter(|c| names.iter().any(|n| c.name().eq_ignore_ascii_case(n)))
                .collect()
        }
    };
    let ctx = Ctx {
        source,
        cache: RefCell::new(BTreeMap::new()),
        fault,
    };
    chosen.iter().map(|c| ctx.run(c, max_n)).collect()
}

/// Runs a single named check.
pub fn verify_one(name: &str, max_n: usize, source: &dyn ProfileSource) -> Result<VerifyReport> {
    let names = [name.to_string()];
    Ok(verify_all(max_n, Some(&names), source, None)?.remove(0))
}

struct Ctx<'a> {
    source: &'a dyn ProfileSource,
    cache: RefCell<BTreeMap<(String, usize), ClassProfile>>,
    fault: Option<Fault>,
}

fn basis(s: &str) -> PatternSet {
    s.parse().expect("registry bases are well formed")
}

fn tally<T>(items: impl Iterator<Item = T>, f: impl Fn(&T) -> usize) -> Counts {
    let mut out = Counts::new();
    for item in items {
        *out.entry(f(&item)).or_insert(0) += 1;
    }
    out
}

fn counts_from_row(row: &[i64]) -> core::result::Result<Counts, String> {
    let mut out = Counts::new();
    for (k, &c) in row.iter().enumerate() {
        if c < 0 {
            return Err(alloc::format!("negative coefficient {c} at q^{k}"));
        }
        if c > 0 {
            out.insert(k, c as u64);
        }
    }
    Ok(out)
}

fn compare(report: &mut VerifyReport, n: usize, expected: &Counts, actual: &Counts) {
    let cells = expected.len().max(actual.len());
    let failure =
        first_difference(expected, actual).map(|(k, e, a)| Counterexample::values(n, k, e, a));
    report.record(n, cells, failure);
}

fn duu(d: &DyckWord) -> usize {
    d.factor_count(&[Step::D, Step::U, Step::U])
}

impl Ctx<'_> {
    fn profile(&self, b: &str, n: usize) -> Result<ClassProfile> {
        let key = (b.to_string(), n);
        if let Some(p) = self.cache.borrow().get(&key) {
            return Ok(p.clone());
        }
        let p = self.source.profile(&basis(b), n)?;
        self.cache.borrow_mut().insert(key, p.clone());
        Ok(p)
    }

    fn oracle(&self, stat: StatKind, b: &str, n: usize) -> Result<Counts> {
        Ok(self.profile(b, n)?.counts(stat))
    }

    fn class(&self, b: &str, n: usize) -> Result<Vec<Perm>> {
        Ok(gen_class(&ClassSpec::filter(n, basis(b)), self.source.caps())?.collect())
    }

    fn run(&self, check: &Check, max_n: usize) -> Result<VerifyReport> {
        let lo = check.min_n();
        let mut report = VerifyReport::new(check.name(), lo, max_n);
        let caps = *self.source.caps();
        for n in lo..=max_n {
            match check {
                Check::Card(b) => {
                    let size = self.profile(b, n)?.size;
                    let expected = known_class_size(b, n)?.expect("registered class");
                    let failure = (size != expected).then(|| Counterexample {
                        n,
                        k: None,
                        expected: Some(expected.into()),
                        actual: Some(size.into()),
                        witness: None,
                    });
                    report.record(n, 1, failure);
                }
                Check::Structured(b) => {
                    let mut filtered = self.class(b, n)?;
                    let mut built: Vec<Perm> =
                        gen_class(&ClassSpec::new(n, basis(b), GenMethod::Structured), &caps)?
                            .collect();
                    filtered.sort();
                    built.sort();
                    let failure = if built.windows(2).any(|w| w[0] == w[1]) {
                        Some(Counterexample::witness(
                            n,
                            "structured stream repeats a permutation".into(),
                        ))
                    } else if filtered != built {
                        let odd = built
                            .iter()
                            .find(|p| filtered.binary_search(p).is_err())
                            .or_else(|| filtered.iter().find(|p| built.binary_search(p).is_err()));
                        Some(Counterexample::witness(
                            n,
                            alloc::format!(
                                "sets differ at {}",
                                odd.map(|p| p.to_string()).unwrap_or_default()
                            ),
                        ))
                    } else {
                        None
                    };
                    report.record(n, filtered.len(), failure);
                }
                Check::Formula(id) => {
                    let mut row = closed_form_row(*id, n)?;
                    if self.fault == Some(Fault::OffByOne(*id)) {
                        match row.first_mut() {
                            Some(x) => *x += 1,
                            None => row.push(1),
                        }
                    }
                    let expected = to_counts(&row);
                    for (s, b) in id.targets() {
                        compare(&mut report, n, &expected, &self.oracle(*s, b, n)?);
                    }
                }
                Check::SeriesDes321 => {
                    Self::series_vs(
                        &mut report,
                        n,
                        SeriesName::Des321,
                        n,
                        0,
                        &self.oracle(StatKind::Des, "321", n)?,
                    )?;
                }
                Check::SeriesPk321 => {
                    Self::series_vs(
                        &mut report,
                        n,
                        SeriesName::Pk321,
                        n,
                        0,
                        &self.oracle(StatKind::Pk, "321", n)?,
                    )?;
                }
                Check::SeriesD => {
                    // D row n+1 against st* over indecomposable words of semilength n+1
                    let expected = tally(gen_indec(n + 1, &caps)?, |w| w.word().st_star());
                    Self::series_vs(&mut report, n, SeriesName::D, n + 1, 0, &expected)?;
                    let a = SeriesName::Des321.build(n)?;
                    let d = SeriesName::D.build(n + 1)?;
                    if d.row(n + 1) != a.row(n) {
                        report.record(
                            n,
                            1,
                            Some(Counterexample::witness(n, "D is not z·A".into())),
                        );
                    }
                    if n == 0 && !d.row(0).is_empty() {
                        report.record(
                            0,
                            1,
                            Some(Counterexample::witness(0, "D has a z^0 term".into())),
                        );
                    }
                }
                Check::BIdentity => self.b_identity(&mut report, n)?,
                Check::SeriesDdes132213 => {
                    for (s, b) in [
                        (StatKind::Ddes, "132,213"),
                        (StatKind::Dasc, "132,213"),
                        (StatKind::Ddes, "213,231"),
                        (StatKind::Dasc, "213,231"),
                    ] {
                        Self::series_vs(
                            &mut report,
                            n,
                            SeriesName::Ddes132213,
                            n,
                            0,
                            &self.oracle(s, b, n)?,
                        )?;
                    }
                }
                Check::LemmaA => {
                    let st = tally(gen_dyck(n, &caps)?, DyckWord::st);
                    compare(&mut report, n, &self.oracle(StatKind::Des, "321", n)?, &st);
                }
                Check::LemmaD => {
                    let st_star = tally(gen_indec(n + 1, &caps)?, |w| w.word().st_star());
                    compare(
                        &mut report,
                        n,
                        &self.oracle(StatKind::Des, "321", n)?,
                        &st_star,
                    );
                }
                Check::Phi231Roundtrip => {
                    let class = self.class("231", n)?;
                    let mut failure = class.iter().find_map(|p| {
                        let d = phi231(p).ok()?;
                        (phi231_inv(&d) != *p)
                            .then(|| Counterexample::witness(n, alloc::format!("{p} -> {d}")))
                    });
                    let mut cells = class.len();
                    for d in gen_dyck(n, &caps)? {
                        cells += 1;
                        let p = phi231_inv(&d);
                        if failure.is_none() && phi231(&p).ok() != Some(d.clone()) {
                            failure =
                                Some(Counterexample::witness(n, alloc::format!("{d} -> {p}")));
                        }
                    }
                    report.record(n, cells, failure);
                }
                Check::Phi231Duu => {
                    let class = self.class("231", n)?;
                    let failure = class.iter().find_map(|p| match phi231(p) {
                        Ok(d) if duu(&d) == stat(StatKind::Pk, p) => None,
                        Ok(d) => Some(Counterexample::witness(
                            n,
                            alloc::format!("pk({p}) != DUU({d})"),
                        )),
                        Err(e) => Some(Counterexample::witness(n, alloc::format!("{p}: {e}"))),
                    });
                    report.record(n, class.len(), failure);
                }
                Check::Psi321Roundtrip => {
                    let class = self.class("321", n)?;
                    let mut failure = class.iter().find_map(|p| {
                        let d = psi321(p).ok()?;
                        (psi321_inv(&d) != *p)
                            .then(|| Counterexample::witness(n, alloc::format!("{p} -> {d}")))
                    });
                    let mut cells = class.len();
                    for d in gen_dyck(n, &caps)? {
                        cells += 1;
                        let p = psi321_inv(&d);
                        if failure.is_none() && psi321(&p).ok() != Some(d.clone()) {
                            failure =
                                Some(Counterexample::witness(n, alloc::format!("{d} -> {p}")));
                        }
                    }
                    report.record(n, cells, failure);
                }
                Check::Psi321Pk => {
                    let class = self.class("321", n)?;
                    let failure = class.iter().find_map(|p| match psi321(p) {
                        Ok(d) if d.st_star() == stat(StatKind::Pk, p) => None,
                        Ok(d) => Some(Counterexample::witness(
                            n,
                            alloc::format!("pk({p}) != st*({d})"),
                        )),
                        Err(e) => Some(Counterexample::witness(n, alloc::format!("{p}: {e}"))),
                    });
                    report.record(n, class.len(), failure);
                }
                Check::PsiHatDes => {
                    let class = self.class("321", n)?;
                    let failure = class.iter().find_map(|p| match psi_hat(p) {
                        Ok(h) if h.word().st_star() == stat(StatKind::Des, p) => None,
                        Ok(h) => Some(Counterexample::witness(
                            n,
                            alloc::format!("des({p}) != st*({h})"),
                        )),
                        Err(e) => Some(Counterexample::witness(n, alloc::format!("{p}: {e}"))),
                    });
                    report.record(n, class.len(), failure);
                }
                Check::Zeta => {
                    let class = self.class("312", n)?;
                    let mut images = Vec::with_capacity(class.len());
                    let mut failure = None;
                    for p in &class {
                        let problem = match zeta(p) {
                            Err(e) => Some(alloc::format!("{p}: {e}")),
                            Ok(q) => {
                                let why = if zeta_inv(&q).ok().as_ref() != Some(p) {
                                    Some("does not round-trip")
                                } else if !q.avoids(&"321".parse().expect("pattern")) {
                                    Some("image contains 321")
                                } else if q.ltr_maxima() != p.ltr_maxima() {
                                    Some("left-to-right maxima moved")
                                } else if stat(StatKind::Pk, &q) != stat(StatKind::Pk, p) {
                                    Some("peak count changed")
                                } else {
                                    None
                                };
                                let out = why.map(|w| alloc::format!("{p} -> {q}: {w}"));
                                images.push(q);
                                out
                            }
                        };
                        if failure.is_none() {
                            failure = problem.map(|w| Counterexample::witness(n, w));
                        }
                    }
                    images.sort();
                    images.dedup();
                    if failure.is_none() && images.len() != self.profile("321", n)?.size as usize {
                        failure = Some(Counterexample::witness(
                            n,
                            "image is not all of S_n(321)".into(),
                        ));
                    }
                    report.record(n, class.len(), failure);
                }
                Check::IotaInvolution => self.iota_check(&mut report, n)?,
                Check::Enc132213 => self.encoding_check(
                    &mut report,
                    n,
                    "132,213",
                    enc_132_213,
                    dec_132_213,
                    predicted_stat_132_213,
                )?,
                Check::Enc213231 => self.encoding_check(
                    &mut report,
                    n,
                    "213,231",
                    enc_213_231,
                    dec_213_231,
                    predicted_stat_213_231,
                )?,
                Check::Enc123132 => self.encoding_check(
                    &mut report,
                    n,
                    "123,132",
                    enc_123_132,
                    dec_123_132,
                    predicted_stat_123_132,
                )?,
                Check::Pk312Eq321 => {
                    compare(
                        &mut report,
                        n,
                        &self.oracle(StatKind::Pk, "321", n)?,
                        &self.oracle(StatKind::Pk, "312", n)?,
                    );
                }
                Check::Stat132213Eq213231 => {
                    for s in StatKind::ALL {
                        compare(
                            &mut report,
                            n,
                            &self.oracle(s, "132,213", n)?,
                            &self.oracle(s, "213,231", n)?,
                        );
                    }
                }
                Check::Symmetry(_, b, first) => {
                    let base = basis(b);
                    let stats = [*first, first.partner(Symmetry::Reverse)];
                    for s in stats {
                        for t in [
                            Symmetry::Reverse,
                            Symmetry::Complement,
                            Symmetry::ReverseComplement,
                        ] {
                            let image = base.transform(t).to_string();
                            compare(
                                &mut report,
                                n,
                                &self.oracle(s, b, n)?,
                                &self.oracle(s.partner(t), &image, n)?,
                            );
                        }
                    }
                }
            }
        }
        Ok(report)
    }

    fn series_vs(
        report: &mut VerifyReport,
        n: usize,
        name: SeriesName,
        row: usize,
        skip: usize,
        expected: &Counts,
    ) -> Result<()> {
        let series = name.build(row)?;
        let coeffs = series.row(row).get(skip..).unwrap_or(&[]);
        match counts_from_row(coeffs) {
            Ok(actual) => compare(report, n, expected, &actual),
            Err(w) => report.record(n, 1, Some(Counterexample::witness(n, w))),
        }
        Ok(())
    }

    // B = z(1 - q) + Σ_{n ≥ 0} a^pk_{n,k}(231) q^{k+1} z^{n+1}, and B also
    // counts st over indecomposable words.
    fn b_identity(&self, report: &mut VerifyReport, n: usize) -> Result<()> {
        let caps = *self.source.caps();
        let b = SeriesName::B.build(n + 1)?;
        if n == 0 && !b.row(0).is_empty() {
            report.record(
                0,
                1,
                Some(Counterexample::witness(0, "B has a z^0 term".into())),
            );
        }
        let pk = self.oracle(StatKind::Pk, "231", n)?;
        let mut expected: BTreeMap<usize, i128> =
            pk.iter().map(|(k, c)| (k + 1, i128::from(*c))).collect();
        if n == 0 {
            *expected.entry(0).or_insert(0) += 1;
            *expected.entry(1).or_insert(0) -= 1;
        }
        let row = b.row(n + 1);
        let width = row.len().max(expected.keys().max().map_or(0, |k| k + 1));
        let mut failure = None;
        for k in 0..width {
            let e = expected.get(&k).copied().unwrap_or(0);
            let a = i128::from(row.get(k).copied().unwrap_or(0));
            if e != a && failure.is_none() {
                failure = Some(Counterexample {
                    n,
                    k: Some(k),
                    expected: Some(e),
                    actual: Some(a),
                    witness: None,
                });
            }
        }
        report.record(n, width, failure);
        let st = tally(gen_indec(n + 1, &caps)?, |w| w.word().st());
        match counts_from_row(row) {
            Ok(actual) => compare(report, n, &st, &actual),
            Err(w) => report.record(n, 1, Some(Counterexample::witness(n, w))),
        }
        Ok(())
    }

    fn iota_check(&self, report: &mut VerifyReport, n: usize) -> Result<()> {
        let caps = *self.source.caps();
        let mut cells = 0;
        let mut failure = None;
        let des = |d: &DyckWord| stat(StatKind::Des, &psi321_inv(d));
        for d in gen_dyck(n, &caps)? {
            cells += 1;
            if failure.is_some() {
                continue;
            }
            let (s, t) = (d.st(), des(&d));
            let problem = match iota(&d) {
                Err(e) => Some(alloc::format!("{d}: {e}")),
                Ok(e) => {
                    let (s2, t2) = (e.st(), des(&e));
                    if iota(&e).ok().as_ref() != Some(&d) {
                        Some(alloc::format!("{d} -> {e} is not an involution"))
                    } else if (s == t) != (e == d) {
                        Some(alloc::format!("{d}: fixed-point rule broken"))
                    } else if s != t && (s2, t2) != (t, s) {
                        Some(alloc::format!("{d} ({s},{t}) -> {e} ({s2},{t2})"))
                    } else if s.abs_diff(t) > 1 {
                        Some(alloc::format!("{d}: st and des differ by more than one"))
                    } else {
                        None
                    }
                }
            };
            failure = problem.map(|w| Counterexample::witness(n, w));
        }
        report.record(n, cells, failure);
        Ok(())
    }

    fn encoding_check(
        &self,
        report: &mut VerifyReport,
        n: usize,
        b: &str,
        enc: fn(&Perm) -> Result<Bits>,
        dec: fn(&Bits) -> Perm,
        predict: fn(StatKind, &Bits) -> usize,
    ) -> Result<()> {
        let caps = *self.source.caps();
        let class = self.class(b, n)?;
        let mut failure = None;
        for p in &class {
            let problem = match enc(p) {
                Err(e) => Some(alloc::format!("{p}: {e}")),
                Ok(s) if s.len() + 1 != n => Some(alloc::format!("{p} -> {s}: wrong length")),
                Ok(s) if dec(&s) != *p => Some(alloc::format!("{p} -> {s} does not decode back")),
                Ok(s) => StatKind::ALL
                    .into_iter()
                    .find(|k| predict(*k, &s) != stat(*k, p))
                    .map(|k| {
                        alloc::format!(
                            "{k}({p}) = {} but {s} predicts {}",
                            stat(k, p),
                            predict(k, &s)
                        )
                    }),
            };
            if failure.is_none() {
                failure = problem.map(|w| Counterexample::witness(n, w));
            }
        }
        let mut cells = class.len();
        for s in gen_bits(n - 1, &caps)? {
            cells += 1;
            let p = dec(&s);
            if failure.is_none() && enc(&p).ok().as_ref() != Some(&s) {
                failure = Some(Counterexample::witness(
                    n,
                    alloc::format!("{s} -> {p} does not encode back"),
                ));
            }
        }
        report.record(n, cells, failure);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::Sequential;

    #[test]
    fn everything_passes_small() {
        let reports = verify_all(6, None, &Sequential::default(), None).unwrap();
        for r in &reports {
            assert!(r.passed, "{} failed: {:?}", r.name, r.counterexample);
        }
        let names = check_names();
        assert_eq!(reports.len(), names.len());
    }

    #[test]
    fn injected_fault_is_caught() {
        let names = ["PK231".to_string()];
        let reports = verify_all(
            5,
            Some(&names),
            &Sequential::default(),
            Some(Fault::OffByOne(FormulaId::Pk231)),
        )
        .unwrap();
        assert!(!reports[0].passed);
        let c = reports[0].counterexample.as_ref().unwrap();
        assert_eq!((c.n, c.k), (1, Some(0)));
    }

    #[test]
    fn unknown_check_is_an_error() {
        let names = ["NOPE".to_string()];
        assert!(verify_all(3, Some(&names), &Sequential::default(), None).is_err());
    }
}
