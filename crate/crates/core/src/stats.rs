//! The six consecutive-pattern statistics.

use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{reduce, Perm, Symmetry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatKind {
    Asc,
    Des,
    Dasc,
    Ddes,
    Pk,
    Vl,
}

impl StatKind {
    pub const ALL: [StatKind; 6] = [
        StatKind::Asc,
        StatKind::Des,
        StatKind::Dasc,
        StatKind::Ddes,
        StatKind::Pk,
        StatKind::Vl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatKind::Asc => "asc",
            StatKind::Des => "des",
            StatKind::Dasc => "dasc",
            StatKind::Ddes => "ddes",
            StatKind::Pk => "pk",
            StatKind::Vl => "vl",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// The statistic that `stat` turns into when the permutation is
    /// transformed by `t`: `stat(π) = partner(t)(t(π))`.
    pub fn partner(self, t: Symmetry) -> StatKind {
        use StatKind::*;
        let reversed = |s: StatKind| match s {
            Asc => Des,
            Des => Asc,
            Dasc => Ddes,
            Ddes => Dasc,
            Pk => Pk,
            Vl => Vl,
        };
        let complemented = |s: StatKind| match s {
            Asc => Des,
            Des => Asc,
            Dasc => Ddes,
            Ddes => Dasc,
            Pk => Vl,
            Vl => Pk,
        };
        match t {
            Symmetry::Identity => self,
            Symmetry::Reverse => reversed(self),
            Symmetry::Complement => complemented(self),
            Symmetry::ReverseComplement => complemented(reversed(self)),
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(alloc::format!("unknown statistic {s:?}")))
    }
}

pub fn stat(kind: StatKind, p: &Perm) -> usize {
    let v = p.values();
    match kind {
        StatKind::Asc => v.windows(2).filter(|w| w[0] < w[1]).count(),
        StatKind::Des => v.windows(2).filter(|w| w[0] > w[1]).count(),
        StatKind::Dasc => v.windows(3).filter(|w| w[0] < w[1] && w[1] < w[2]).count(),
        StatKind::Ddes => v.windows(3).filter(|w| w[0] > w[1] && w[1] > w[2]).count(),
        StatKind::Pk => v.windows(3).filter(|w| w[0] < w[1] && w[1] > w[2]).count(),
        StatKind::Vl => v.windows(3).filter(|w| w[0] > w[1] && w[1] < w[2]).count(),
    }
}

/// All six statistics at once, indexed by [`StatKind::index`].
pub fn all_stats(p: &Perm) -> [usize; 6] {
    let mut out = [0; 6];
    let v = p.values();
    for w in v.windows(2) {
        if w[0] < w[1] {
            out[0] += 1;
        } else {
            out[1] += 1;
        }
    }
    for w in v.windows(3) {
        let up1 = w[0] < w[1];
        let up2 = w[1] < w[2];
        let idx = match (up1, up2) {
            (true, true) => 2,
            (false, false) => 3,
            (true, false) => 4,
            (false, true) => 5,
        };
        out[idx] += 1;
    }
    out
}

/// Number of windows `π_i π_{i+1} π_{i+2}` that reduce to `pattern`.
pub fn consec3_count(p: &Perm, pattern: &Perm) -> Result<usize> {
    if pattern.len() != 3 {
        return Err(Error::InvalidInput(alloc::format!(
            "consecutive pattern must have length 3, got {pattern}"
        )));
    }
    Ok(p.values()
        .windows(3)
        .filter(|w| reduce(w).map(|r| &r == pattern).unwrap_or(false))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(stat(StatKind::Pk, &p("132")), 1);
        let q = p("617238459");
        assert_eq!(stat(StatKind::Des, &q), 3);
        assert_eq!(stat(StatKind::Pk, &q), 2);
        assert_eq!(stat(StatKind::Vl, &q), 3);
        assert_eq!(consec3_count(&p("123456"), &p("123")), Ok(4));
        assert_eq!(
            consec3_count(&q, &p("132")).unwrap() + consec3_count(&q, &p("231")).unwrap(),
            2
        );
        assert_eq!(consec3_count(&p("21"), &p("132")), Ok(0));
        assert!(consec3_count(&q, &p("12")).is_err());
    }

    #[test]
    fn tiny_permutations_have_zero_stats() {
        for q in [Perm::empty(), p("1")] {
            for k in StatKind::ALL {
                assert_eq!(stat(k, &q), 0);
            }
        }
    }

    #[test]
    fn parse_names() {
        for k in StatKind::ALL {
            assert_eq!(k.name().parse::<StatKind>(), Ok(k));
        }
        assert!("inv".parse::<StatKind>().is_err());
    }

    #[test]
    fn all_stats_agrees() {
        for s in ["", "1", "21", "132", "617238459", "3412", "54123"] {
            let q = p(s);
            let all = all_stats(&q);
            for k in StatKind::ALL {
                assert_eq!(all[k.index()], stat(k, &q), "{k} on {s}");
            }
        }
    }
}
