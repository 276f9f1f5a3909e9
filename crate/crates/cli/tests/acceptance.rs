//! One line per acceptance criterion, `AC-nn PASS` or `AC-nn FAIL: why`.
//! Exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Output};

use naf_core::comparator::enumerate::{positive_values, read_binade};
use naf_core::comparator::{merit, nonadj_pbom, SystemKind, SystemModel};
use naf_core::naf::{
    ball_for_size, chain_trace, jacobsthal_count, max_for_size, recode_chain_field,
};
use naf_core::points::{apply_pcm, classify, invert_pcm};
use naf_core::realcodec::{encode_real, enumerate_real, omega, parse_real, round_real};
use naf_core::trit::parse_trits;
use naf_core::{decode_real, Dyadic, Error, Trit, TritField};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn nafloat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nafloat"))
        .args(args)
        .output()
        .expect("run nafloat")
}

fn stdout_of(args: &[&str]) -> Result<String, String> {
    let o = nafloat(args);
    ensure!(
        o.status.success(),
        "nafloat {}: {}",
        args.join(" "),
        String::from_utf8_lossy(&o.stderr)
    );
    Ok(String::from_utf8(o.stdout).unwrap())
}

fn golden(name: &str) -> String {
    let p = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(p).unwrap()
}

fn model(k: SystemKind, n: u32) -> SystemModel {
    SystemModel::new(k, n).unwrap()
}

/// Right-to-left textbook recoding on machine integers, MSB first.
fn naf_digits(mut x: i64) -> Vec<i8> {
    let mut d = Vec::new();
    while x != 0 {
        let t = if x & 1 == 0 {
            0
        } else {
            2 - x.rem_euclid(4) as i8
        };
        x = (x - t as i64) / 2;
        d.push(t);
    }
    d.reverse();
    d
}

fn ac01() -> Check {
    let vectors = [
        ("T0110111", "11111110", "0T00T00T"),
        ("0T110111", "01111110", "0000T00T"),
        ("00110111", "01111110", "0100T00T"),
        (
            "00111011000T01101110001T1TTT0TT0",
            "0111111000011111110000T0TTTTTT00",
            "01000T0T0000T00T00T0000100001010",
        ),
    ];
    for (x, a, z) in vectors {
        let t = chain_trace(&parse_trits(x).unwrap());
        ensure!(
            t.assistant.render() == a,
            "{x}: a-field {}",
            t.assistant.render()
        );
        ensure!(t.output.render() == z, "{x}: output {}", t.output.render());
        let cli = stdout_of(&["recode", "--field", x, "--trace"])?;
        ensure!(
            cli.lines().nth(1) == Some(&format!("a {a}")[..]),
            "cli trace for {x}: {cli}"
        );
    }
    for f in TritField::all_of_width(12) {
        let x: i64 = f
            .digits()
            .iter()
            .fold(0, |acc, t| 2 * acc + t.value() as i64);
        let z = recode_chain_field(&f);
        let got: Vec<i8> = z
            .digits()
            .iter()
            .skip_while(|t| **t == Trit::Zero)
            .map(|t| t.value())
            .collect();
        ensure!(got == naf_digits(x), "{f}");
    }
    Ok(())
}

fn ac02() -> Check {
    const TABLE: [[i64; 5]; 10] = [
        [1, 3, 1, 1, 0],
        [2, 5, 1, 2, 0],
        [3, 11, 3, 5, 1],
        [4, 21, 5, 10, 2],
        [5, 43, 11, 21, 5],
        [6, 85, 21, 42, 10],
        [7, 171, 43, 85, 21],
        [8, 341, 85, 170, 42],
        [9, 683, 171, 341, 85],
        [10, 1365, 341, 682, 170],
    ];
    for [n, v, v1, xbar, r] in TABLE {
        // Brute force over all 3^n digit strings.
        let mut all = Vec::new();
        for f in TritField::all_of_width(n as usize) {
            let d = f.digits();
            if d.windows(2).all(|w| w[0].is_zero() || w[1].is_zero()) {
                all.push(
                    f.digits()
                        .iter()
                        .fold(0i64, |acc, t| 2 * acc + t.value() as i64),
                );
            }
        }
        ensure!(all.len() as i64 == v, "V_{n} = {}", all.len());
        ensure!(*all.iter().max().unwrap() == xbar, "X̄_{n}");
        let exact: Vec<i64> = all
            .iter()
            .copied()
            .filter(|&x| x > 0 && naf_digits(x).len() == n as usize)
            .collect();
        ensure!(exact.len() as i64 == v1, "V¹_{n}");
        let radius = (exact.iter().max().unwrap() - exact.iter().min().unwrap()) / 2;
        ensure!(radius == r, "R_{n} = {radius}");
        ensure!(
            jacobsthal_count(n).unwrap() == BigInt::from(v),
            "library V_{n}"
        );
        ensure!(
            max_for_size(n).unwrap() == BigInt::from(xbar),
            "library X̄_{n}"
        );
        let ball = ball_for_size(n).unwrap();
        ensure!(
            ball.count == BigInt::from(v1) && ball.radius == BigInt::from(r),
            "library ball {n}"
        );
    }
    for n in 3..=64 {
        let j = |k| jacobsthal_count(k).unwrap();
        ensure!(j(n) == j(n - 1) + j(n - 2) * 2, "recurrence at {n}");
        // (2^(n+2) − (−1)^n) / 3
        let closed = ((BigInt::from(1) << (n + 2)) - if n % 2 == 0 { 1 } else { -1 }) / 3;
        ensure!(j(n) == closed, "closed form at {n}");
    }
    Ok(())
}

fn ac03() -> Check {
    let out = stdout_of(&["enumerate", "--N", "4"])?;
    ensure!(
        out == golden("enumerate_n4.csv"),
        "enumerate --N 4 differs from golden file"
    );
    ensure!(out.lines().count() == 1 + 38 + 1, "row count");
    let two = stdout_of(&["enumerate", "--N", "2"])?;
    let mut vals: Vec<&str> = two
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    vals.sort();
    let mut want = vec!["-0.5", "-1", "-2", "0", "0.5", "1", "2"];
    want.sort();
    ensure!(vals == want, "N=2 values {vals:?}");
    Ok(())
}

fn ac04() -> Check {
    let field = "T00110T010001";
    ensure!(
        stdout_of(&["decode", "--field", field])? == "104.5 (= 209 * 2^-1)\n",
        "decode"
    );
    ensure!(
        stdout_of(&["encode", "--N", "13", "--value", "104.5"])?.trim() == field,
        "encode"
    );
    let info = stdout_of(&["inspect", "--field", field])?;
    for line in ["exponent 7", "precision 9", "ulp 0.5 (= 1 * 2^-1)"] {
        ensure!(
            info.lines().any(|l| l == line),
            "inspect lacks `{line}`:\n{info}"
        );
    }
    let parts = parse_real(&parse_trits(field).unwrap()).unwrap();
    ensure!(parts.n == 7 && parts.precision == 9, "parts");
    ensure!(
        naf_digits(209).len() == 9 && parts.m == BigInt::from(209),
        "significand {}",
        parts.m
    );
    ensure!(parts.ulp() == Dyadic::new(1, -1), "ulp");
    Ok(())
}

/// Nearest value by table scan; ties prefer a final 0 digit, then an even
/// exponent; past either end the extreme wins.
fn nearest(x: &Dyadic, table: &[(TritField, Dyadic)]) -> Dyadic {
    let mut best: Option<&(TritField, Dyadic)> = None;
    for e in table
        .iter()
        .filter(|(_, v)| !v.is_zero() && v.is_negative() == x.is_negative())
    {
        best = Some(match best {
            None => e,
            Some(b) => {
                let (d, bd) = ((x - &e.1).abs(), (x - &b.1).abs());
                if d != bd {
                    if d < bd {
                        e
                    } else {
                        b
                    }
                } else {
                    let last_zero = |t: &TritField| t[t.width() - 1].is_zero();
                    let even = |t: &TritField| parse_real(t).unwrap().n % 2 == 0;
                    let take = if last_zero(&e.0) != last_zero(&b.0) {
                        last_zero(&e.0)
                    } else {
                        even(&e.0)
                    };
                    if take {
                        e
                    } else {
                        b
                    }
                }
            }
        });
    }
    best.unwrap().1.clone()
}

fn ac05() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for n in [4usize, 6] {
        let table = enumerate_real(n).unwrap();
        let check = |x: &Dyadic| -> Check {
            let got = decode_real(&round_real(x, n).map_err(|e| e.to_string())?).unwrap();
            ensure!(got == nearest(x, &table), "N={n} x={x} got {got}");
            Ok(())
        };
        for w in table.windows(2) {
            let (a, b) = (&w[0].1, &w[1].1);
            if a.signum() == b.signum() && !a.is_zero() {
                let mid = (a + b).shl(-1);
                check(&mid)?;
                check(&(a + &mid).shl(-1))?;
                check(&(&mid + b).shl(-1))?;
            }
        }
        let om = omega(n).unwrap();
        let top = om.floor_log2().unwrap();
        for _ in 0..10_000 {
            let m: i64 = rng.random_range(-(1 << 20)..(1 << 20));
            if m != 0 {
                check(&Dyadic::new(m, rng.random_range(-top - 25..top + 5)))?;
            }
        }
        let tiny = Dyadic::pow2(-top);
        for (x, want) in [
            (om.shl(5), om.clone()),
            (-om.shl(50), -&om),
            (tiny.shl(-7), tiny.clone()),
            (-tiny.shl(-500), -&tiny),
        ] {
            let got = decode_real(&round_real(&x, n).unwrap()).unwrap();
            ensure!(got == want, "N={n} clamp {x} gave {got}");
        }
    }
    Ok(())
}

fn ac06() -> Check {
    for n in [4usize, 6, 8] {
        let table = enumerate_real(n).unwrap();
        let mut all: HashSet<Dyadic> = table.iter().map(|(_, v)| v.clone()).collect();
        all.insert(Dyadic::zero());
        let pos: Vec<&Dyadic> = all.iter().filter(|v| v.is_positive()).collect();
        for x in &pos {
            for y in &pos {
                if y.shl(-1) <= **x && **x <= y.shl(1) {
                    ensure!(all.contains(&(*x - *y)), "N={n}: {x} - {y}");
                }
            }
        }
    }
    Ok(())
}

fn ac07() -> Check {
    for k in [SystemKind::Ieee, SystemKind::Posit, SystemKind::Nonadj] {
        let m = model(k, 8);
        let values = positive_values(&m).map_err(|e| e.to_string())?;
        let (lo, hi) = m.dynamic_range();
        for n_x in lo - 3..=hi + 3 {
            let b = m.pbom(n_x).unwrap();
            let r = read_binade(&values, n_x);
            ensure!(
                r.agrees_with(b, k),
                "{k} n_x={n_x}: formula {b}, read {r:?}"
            );
        }
        if k == SystemKind::Nonadj {
            let count = TritField::all_of_width(8)
                .filter(|f| parse_real(f).is_ok())
                .count();
            ensure!(
                count == enumerate_real(8).unwrap().len(),
                "NONADJ enumeration is not all valid fields"
            );
            for n_x in lo..=hi {
                let f = encode_real(&Dyadic::pow2(n_x), 8).unwrap();
                ensure!(
                    parse_real(&f).unwrap().precision as u64 == b_of(&m, n_x),
                    "NONADJ field at {n_x}"
                );
            }
        }
    }
    Ok(())
}

fn b_of(m: &SystemModel, n_x: i64) -> u64 {
    m.pbom(n_x).unwrap()
}

fn ieee_range(n: u32) -> std::ops::RangeInclusive<i64> {
    let (lo, hi) = model(SystemKind::Ieee, n).dynamic_range();
    lo..=hi
}

fn ac08() -> Check {
    let min16 = ieee_range(32).map(|x| nonadj_pbom(16, x)).min().unwrap();
    let min32 = ieee_range(32).map(|x| nonadj_pbom(32, x)).min().unwrap();
    ensure!(
        (min16, min32) == (8, 24),
        "minimum precision {min16}, {min32}"
    );
    let mp = |k| merit(&model(k, 32)).unwrap().mp;
    let (n, p, i) = (
        mp(SystemKind::Nonadj),
        mp(SystemKind::Posit),
        mp(SystemKind::Ieee),
    );
    ensure!(n - p == 4 && n - i == 8, "MP {n} {p} {i}");
    Ok(())
}

fn ac09() -> Check {
    for n in [16, 32, 64] {
        let ieee = model(SystemKind::Ieee, n);
        for x in ieee_range(n) {
            ensure!(nonadj_pbom(n, x) >= b_of(&ieee, x), "IEEE {n} at {x}");
        }
        let posit = model(SystemKind::Posit, n);
        let (lo, hi) = posit.dynamic_range();
        for x in lo..=hi {
            ensure!(nonadj_pbom(n, x) >= b_of(&posit, x), "POSIT {n} at {x}");
        }
    }
    Ok(())
}

fn ac10() -> Check {
    let lpi = |k| merit(&model(k, 32)).unwrap().lpi;
    let (nonadj, ieee, posit) = (
        lpi(SystemKind::Nonadj),
        lpi(SystemKind::Ieee),
        lpi(SystemKind::Posit),
    );
    ensure!(ieee == BigInt::from(1u64 << 24), "IEEE {ieee}");
    ensure!(
        nonadj > ieee && nonadj > posit,
        "NONADJ {nonadj}, IEEE {ieee}, POSIT {posit}"
    );
    Ok(())
}

fn ac11() -> Check {
    let mut seen = 0;
    for f in TritField::all_of_width(8) {
        match classify(&f) {
            Ok(_) | Err(Error::NoAssignedMeaning) => {}
            Err(e) => return Err(format!("{f}: {e}")),
        }
        for k in 1..=5u8 {
            if let Ok(y) = apply_pcm(k, &f) {
                ensure!(invert_pcm(k, &y).ok() == Some(f.clone()), "PCM{k} on {f}");
            }
            if let Ok(z) = invert_pcm(k, &f) {
                ensure!(
                    apply_pcm(k, &z).ok() == Some(f.clone()),
                    "PCM{k} inverse on {f}"
                );
            }
        }
        seen += 1;
    }
    ensure!(seen == 6561, "{seen} fields");
    Ok(())
}

fn ac12() -> Check {
    let first = stdout_of(&["merit", "--N", "8,16,32,64"])?;
    let second = stdout_of(&["merit"])?;
    ensure!(first == second, "merit output differs between runs");
    ensure!(
        first == golden("merit.csv"),
        "merit output differs from golden file"
    );
    let mut rows = csv::Reader::from_reader(first.as_bytes());
    let header = rows.headers().unwrap().clone();
    ensure!(
        header.iter().collect::<Vec<_>>().join(",")
            == "system,N,LVALOM,LVALOM10,SPVALOM,SPVALOM10,LNP2OM,LNP2OM10,LPI,LPIOM,MP",
        "header"
    );
    let records: Vec<csv::StringRecord> = rows.records().map(|r| r.unwrap()).collect();
    ensure!(records.len() == 12, "{} rows", records.len());
    for r in records.iter().filter(|r| &r[0] == "NONADJ") {
        let n: u32 = r[1].parse().unwrap();
        // X̄_{N−1} = ⌊2^N / 3⌋
        let xbar = ((1u128 << n) / 3).to_string();
        ensure!(r[2] == *xbar, "NONADJ {n} LVALOM {}", &r[2]);
        ensure!(r[4] == format!("-{xbar}"), "NONADJ {n} SPVALOM {}", &r[4]);
    }
    Ok(())
}

fn main() {
    let criteria: [fn() -> Check; 12] = [
        ac01, ac02, ac03, ac04, ac05, ac06, ac07, ac08, ac09, ac10, ac11, ac12,
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(c)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match r {
            Ok(()) => println!("AC-{:02} PASS", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC-{:02} FAIL: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
