use permstat_core::bijections::{
    dec_123_132, dec_132_213, dec_213_231, enc_123_132, enc_132_213, enc_213_231, iota, phi231,
    phi231_inv, psi321, psi321_inv, Bits,
};
use permstat_core::formulas::series_des321;
use permstat_core::perm::Symmetry;
use permstat_core::series::BivariateSeries;
use permstat_core::stats::stat;
use permstat_core::{reduce, DyckWord, PatternSet, Perm, StatKind, Step};
use proptest::prelude::*;

fn perm(max_len: usize) -> impl Strategy<Value = Perm> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Perm::new(v).unwrap())
}

// Cycle lemma: rotating a balanced word to start just after its first
// minimum prefix height gives a Dyck word.
fn dyck(max_semilength: usize) -> impl Strategy<Value = DyckWord> {
    (0..=max_semilength)
        .prop_flat_map(|n| {
            let mut steps = vec![Step::U; n];
            steps.extend(vec![Step::D; n]);
            Just(steps).prop_shuffle()
        })
        .prop_map(|steps| {
            let mut h = 0i64;
            let (mut best, mut at) = (0i64, 0usize);
            for (i, s) in steps.iter().enumerate() {
                h += if *s == Step::U { 1 } else { -1 };
                if h < best {
                    best = h;
                    at = i + 1;
                }
            }
            let mut rotated = steps[at..].to_vec();
            rotated.extend_from_slice(&steps[..at]);
            DyckWord::new(rotated).unwrap()
        })
}

fn bits(max_len: usize) -> impl Strategy<Value = Bits> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(Bits::new)
}

fn contains_brute(host: &[usize], pattern: &[usize]) -> bool {
    fn go(host: &[usize], pattern: &[usize], start: usize, picked: &mut Vec<usize>) -> bool {
        if picked.len() == pattern.len() {
            return reduce(picked).unwrap().values() == pattern;
        }
        (start..host.len()).any(|i| {
            picked.push(host[i]);
            let ok = go(host, pattern, i + 1, picked);
            picked.pop();
            ok
        })
    }
    go(host, pattern, 0, &mut Vec::new())
}

proptest! {
    #[test]
    fn containment_matches_subsequence_search(host in perm(9), pattern in perm(4)) {
        prop_assume!(!pattern.is_empty());
        prop_assert_eq!(host.contains(&pattern), contains_brute(host.values(), pattern.values()));
    }

    #[test]
    fn symmetries_transport_statistics(p in perm(12)) {
        for t in Symmetry::ALL {
            let q = p.transform(t);
            prop_assert_eq!(q.transform(t), p.clone());
            for kind in StatKind::ALL {
                prop_assert_eq!(stat(kind, &p), stat(kind.partner(t), &q));
            }
        }
    }

    #[test]
    fn symmetries_transport_avoidance(p in perm(8), pattern in perm(3)) {
        prop_assume!(!pattern.is_empty());
        let basis = PatternSet::single(pattern).unwrap();
        for t in Symmetry::ALL {
            prop_assert_eq!(p.avoids_all(&basis), p.transform(t).avoids_all(&basis.transform(t)));
        }
    }

    #[test]
    fn reduce_is_order_isomorphic(values in prop::collection::btree_set(0i64..1000, 0..12)) {
        let mut word: Vec<i64> = values.into_iter().collect();
        word.reverse();
        let third = word.len() / 3;
        word.rotate_left(third);
        let r = reduce(&word).unwrap();
        for i in 0..word.len() {
            for j in 0..word.len() {
                prop_assert_eq!(word[i] < word[j], r.values()[i] < r.values()[j]);
            }
        }
    }

    #[test]
    fn sums_and_inverse(p in perm(6), q in perm(6)) {
        prop_assert_eq!(p.direct_sum(&q).len(), p.len() + q.len());
        prop_assert_eq!(p.skew_sum(&q).reverse(), q.reverse().direct_sum(&p.reverse()));
        prop_assert_eq!(p.inverse().inverse(), p.clone());
    }

    #[test]
    fn dyck_maps_round_trip_beyond_exhaustive_range(d in dyck(24)) {
        let p = phi231_inv(&d);
        prop_assert!(p.avoids(&"231".parse().unwrap()));
        prop_assert_eq!(phi231(&p).unwrap(), d.clone());
        let q = psi321_inv(&d);
        prop_assert!(q.avoids(&"321".parse().unwrap()));
        prop_assert_eq!(psi321(&q).unwrap(), d.clone());
        let e = iota(&d).unwrap();
        prop_assert_eq!(iota(&e).unwrap(), d.clone());
        prop_assert_eq!(d.reverse_path().reverse_path(), d.clone());
        prop_assert!(d.st_star() <= d.st());
        prop_assert!(d.lift().word().is_indecomposable());
        let rebuilt: Vec<Step> = d.decompose().iter().flat_map(|w| w.word().steps().to_vec()).collect();
        prop_assert_eq!(rebuilt.as_slice(), d.steps());
    }

    #[test]
    fn encodings_round_trip(s in bits(24)) {
        prop_assert_eq!(enc_132_213(&dec_132_213(&s)).unwrap(), s.clone());
        prop_assert_eq!(enc_213_231(&dec_213_231(&s)).unwrap(), s.clone());
        prop_assert_eq!(enc_123_132(&dec_123_132(&s)).unwrap(), s.clone());
    }
}

#[test]
fn des321_series_solves_its_functional_equation() {
    let max_n = 20;
    let a = series_des321(max_n).unwrap();
    let one = BivariateSeries::one(max_n);
    let z = BivariateSeries::monomial(max_n, 1, 0, 1);
    let factor = z
        .sub(&BivariateSeries::monomial(max_n, 2, 0, 1))
        .unwrap()
        .add(&BivariateSeries::monomial(max_n, 2, 1, 1))
        .unwrap();
    let lhs = factor
        .mul(&a.mul(&a).unwrap())
        .unwrap()
        .sub(&a)
        .unwrap()
        .add(&one)
        .unwrap();
    assert_eq!(lhs, BivariateSeries::zero(max_n));
}
