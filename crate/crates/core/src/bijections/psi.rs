use alloc::vec::Vec;

use super::require_avoids;
use crate::dyck::{DyckWord, IndecomposableWord, Step};
use crate::error::Result;
use crate::perm::Perm;

/// Lattice-path bijection `S_n(321) → D_n`.
///
/// Plot the entries that are not left-to-right maxima as points
/// `(i, π_i)`. Starting at `(1, 0)`, walk east to each point's column and
/// north to its row, then finish at `(n + 1, n)`. East steps become `U`,
/// north steps become `D`.
pub fn psi321(p: &Perm) -> Result<DyckWord> {
    require_avoids("psi321", p, "321")?;
    let n = p.len();
    let mut steps = Vec::with_capacity(2 * n);
    if n == 0 {
        return Ok(DyckWord::empty());
    }
    let (mut x, mut y) = (1usize, 0usize);
    let mut best = 0;
    for (i, &v) in p.values().iter().enumerate() {
        if v > best {
            best = v;
            continue;
        }
        let col = i + 1;
        steps.extend(core::iter::repeat_n(Step::U, col - x));
        steps.extend(core::iter::repeat_n(Step::D, v - y));
        (x, y) = (col, v);
    }
    steps.extend(core::iter::repeat_n(Step::U, n + 1 - x));
    steps.extend(core::iter::repeat_n(Step::D, n - y));
    Ok(DyckWord::from_steps_unchecked(steps))
}

/// Inverse of [`psi321`].
///
/// Every maximal `U^e D^f` run except the last one ends at a non-maximum
/// point; the remaining positions take the remaining values in increasing
/// order.
pub fn psi321_inv(d: &DyckWord) -> Perm {
    let n = d.semilength();
    let runs = d.peak_runs();
    let mut values = alloc::vec![0usize; n];
    let mut used = alloc::vec![false; n + 1];
    let (mut x, mut y) = (1usize, 0usize);
    for &(e, f) in runs.iter().take(runs.len().saturating_sub(1)) {
        x += e;
        y += f;
        values[x - 1] = y;
        used[y] = true;
    }
    let mut rest = (1..=n).filter(|v| !used[*v]);
    for slot in values.iter_mut().filter(|v| **v == 0) {
        *slot = rest.next().expect("one free value per free position");
    }
    Perm::from_vec_unchecked(values)
}

/// `U · ψ(π) · D`, an indecomposable word of semilength `n + 1`.
pub fn psi_hat(p: &Perm) -> Result<IndecomposableWord> {
    Ok(psi321(p)?.lift())
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
    fn figure_example() {
        assert_eq!(
            psi321(&p("617238459")).unwrap().to_string(),
            "UDUUDUDUUDUDUUDDDD"
        );
        assert_eq!(
            psi321_inv(&"UDUUDUDUUDUDUUDDDD".parse().unwrap()),
            p("617238459")
        );
    }

    #[test]
    fn small_cases() {
        assert_eq!(psi321(&Perm::identity(4)).unwrap().to_string(), "UUUUDDDD");
        assert_eq!(psi321_inv(&"UUDD".parse().unwrap()), p("12"));
        assert_eq!(psi321(&p("21")).unwrap().to_string(), "UDUD");
        assert_eq!(psi321(&Perm::empty()).unwrap(), DyckWord::empty());
        assert_eq!(psi321_inv(&DyckWord::empty()), Perm::empty());
        assert!(matches!(psi321(&p("321")), Err(Error::Precondition { .. })));
    }

    #[test]
    fn hat_examples() {
        assert_eq!(psi_hat(&p("1")).unwrap().to_string(), "UUDD");
        assert_eq!(psi_hat(&p("21")).unwrap().to_string(), "UUDUDD");
        assert_eq!(psi_hat(&Perm::identity(3)).unwrap().to_string(), "UUUUDDDD");
        let hat = psi_hat(&p("617238459")).unwrap();
        assert_eq!(hat.word().st_star(), 3);
    }
}
