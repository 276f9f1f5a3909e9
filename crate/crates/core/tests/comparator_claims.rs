use naf_core::comparator::enumerate::{positive_values, read_binade};
use naf_core::comparator::{merit, nonadj_pbom, posit_pbom, SystemKind, SystemModel};
use naf_core::naf::max_for_size;
use naf_core::realcodec::{encode_real, parse_real};
use naf_core::trit::Dyadic;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

fn model(k: SystemKind, n: u32) -> SystemModel {
    SystemModel::new(k, n).unwrap()
}

fn check_against_enumeration(m: SystemModel) {
    let values = positive_values(&m).unwrap();
    let (lo, hi) = m.dynamic_range();
    for n_x in lo - 3..=hi + 3 {
        let b = m.pbom(n_x).unwrap();
        let r = read_binade(&values, n_x);
        assert!(
            r.agrees_with(b, m.kind),
            "{} N={} n_x={n_x}: formula {b}, read {r:?}",
            m.kind,
            m.width
        );
    }
    if m.kind == SystemKind::Nonadj {
        // The field of 2^n_x carries exactly B significand digits.
        for n_x in lo..=hi {
            let f = encode_real(&Dyadic::pow2(n_x), m.width as usize).unwrap();
            assert_eq!(
                parse_real(&f).unwrap().precision as u64,
                m.pbom(n_x).unwrap(),
                "n_x={n_x}"
            );
        }
    }
}

#[test]
fn pbom_formulas_match_enumeration_at_8() {
    for k in [SystemKind::Ieee, SystemKind::Posit, SystemKind::Nonadj] {
        check_against_enumeration(model(k, 8));
    }
}

#[test]
fn pbom_formulas_match_enumeration_wider() {
    check_against_enumeration(model(SystemKind::Ieee, 16));
    check_against_enumeration(model(SystemKind::Posit, 16));
    check_against_enumeration(SystemModel::with_param(SystemKind::Posit, 12, 2).unwrap());
    for n in [4, 6, 10, 12] {
        check_against_enumeration(model(SystemKind::Nonadj, n));
    }
}

/// The IEEE range as binades, smallest subnormal to largest finite.
fn ieee_range(n: u32) -> std::ops::RangeInclusive<i64> {
    let (lo, hi) = model(SystemKind::Ieee, n).dynamic_range();
    lo..=hi
}

#[test]
fn headline_precision_claims() {
    let min16 = ieee_range(32).map(|x| nonadj_pbom(16, x)).min().unwrap();
    let min32 = ieee_range(32).map(|x| nonadj_pbom(32, x)).min().unwrap();
    assert_eq!((min16, min32), (8, 24));
    let mp = |k| merit(&model(k, 32)).unwrap().mp;
    assert_eq!(mp(SystemKind::Nonadj) - mp(SystemKind::Posit), 4);
    assert_eq!(mp(SystemKind::Nonadj) - mp(SystemKind::Ieee), 8);
}

#[test]
fn nonadj_dominates() {
    for n in [16, 32, 64] {
        let ieee = model(SystemKind::Ieee, n);
        for x in ieee_range(n) {
            assert!(
                nonadj_pbom(n, x) >= ieee.pbom(x).unwrap(),
                "IEEE N={n} n_x={x}"
            );
        }
        let posit = model(SystemKind::Posit, n);
        let (lo, hi) = posit.dynamic_range();
        for x in lo..=hi {
            assert!(
                nonadj_pbom(n, x) >= posit_pbom(n, posit.param, x),
                "POSIT N={n} n_x={x}"
            );
        }
    }
}

#[test]
fn largest_precise_integers_at_32() {
    let lpi = |k| merit(&model(k, 32)).unwrap().lpi;
    let (nonadj, ieee, posit) = (
        lpi(SystemKind::Nonadj),
        lpi(SystemKind::Ieee),
        lpi(SystemKind::Posit),
    );
    assert_eq!(ieee, BigInt::from(1u64 << 24));
    assert!(nonadj > ieee);
    assert!(nonadj > posit);
}

#[test]
fn merit_table_values() {
    for n in [8u32, 16, 32, 64] {
        let r = merit(&model(SystemKind::Nonadj, n)).unwrap();
        let xbar = max_for_size(n as i64 - 1).unwrap().to_i64().unwrap();
        assert_eq!(r.lvalom, xbar);
        assert_eq!(r.spvalom, -xbar);
        let p = merit(&model(SystemKind::Posit, n)).unwrap();
        assert_eq!(p.spvalom, -p.lvalom);
        for k in [SystemKind::Ieee, SystemKind::Posit, SystemKind::Nonadj] {
            assert!(merit(&model(k, n)).unwrap().mp <= n as u64);
        }
    }
    assert_eq!(merit(&model(SystemKind::Nonadj, 16)).unwrap().lvalom, 21845);
}

/// Maximum precision is the best binade found by exhaustive decoding.
#[test]
fn maximum_precision_matches_enumeration() {
    for k in [SystemKind::Ieee, SystemKind::Posit, SystemKind::Nonadj] {
        let m = model(k, 8);
        let values = positive_values(&m).unwrap();
        let (lo, hi) = m.dynamic_range();
        let best = (lo..=hi)
            .filter_map(|x| read_binade(&values, x).digits)
            .max()
            .unwrap();
        assert_eq!(merit(&m).unwrap().mp, best, "{k}");
    }
}
