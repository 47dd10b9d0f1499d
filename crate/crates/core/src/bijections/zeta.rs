use alloc::vec::Vec;

use super::require_avoids;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// `S_n(312) → S_n(321)` keeping left-to-right maxima (position and value);
/// the other entries are rewritten in increasing order.
pub fn zeta(p: &Perm) -> Result<Perm> {
    require_avoids("zeta", p, "312")?;
    let n = p.len();
    let maxima = p.ltr_maxima();
    let mut values = alloc::vec![0usize; n];
    let mut used = alloc::vec![false; n + 1];
    for &(pos, v) in &maxima {
        values[pos - 1] = v;
        used[v] = true;
    }
    let mut rest = (1..=n).filter(|v| !used[*v]);
    for slot in values.iter_mut().filter(|v| **v == 0) {
        *slot = rest.next().expect("free value");
    }
    Ok(Perm::from_vec_unchecked(values))
}

/// Inverse of [`zeta`]: keep the maxima and fill each other position, left to
/// right, with the largest unused value below the current maximum.
pub fn zeta_inv(p: &Perm) -> Result<Perm> {
    require_avoids("zeta_inv", p, "321")?;
    let n = p.len();
    let mut is_max = alloc::vec![false; n];
    let mut used = alloc::vec![false; n + 1];
    for &(pos, v) in &p.ltr_maxima() {
        is_max[pos - 1] = true;
        used[v] = true;
    }
    let mut values: Vec<usize> = Vec::with_capacity(n);
    let mut current_max = 0;
    for (i, &v) in p.values().iter().enumerate() {
        if is_max[i] {
            current_max = v;
            values.push(v);
            continue;
        }
        let pick = (1..current_max)
            .rev()
            .find(|c| !used[*c])
            .ok_or_else(|| Error::InvalidInput("no value available below the maximum".into()))?;
        used[pick] = true;
        values.push(pick);
    }
    Ok(Perm::from_vec_unchecked(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(zeta(&Perm::identity(5)).unwrap(), Perm::identity(5));
        assert_eq!(zeta(&p("1432")).unwrap(), p("1423"));
        assert_eq!(zeta_inv(&p("1423")).unwrap(), p("1432"));
        assert!(zeta(&p("312")).is_err());
        assert!(zeta_inv(&p("321")).is_err());
    }
}
