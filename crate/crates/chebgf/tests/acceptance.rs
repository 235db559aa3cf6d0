//! Acceptance gate: one test per shipped guarantee, each printing a
//! pass/fail line through the harness. Timed tests serialize on a shared
//! lock so wall-clock assertions aren't skewed by parallel test scheduling.
//!
//! Run `cargo test --test acceptance` for the gate alone; the level-7
//! completion report is `#[ignore]`d (it takes minutes, and carries no
//! asserted bound) — run it with `-- --ignored --nocapture`.

use chebgf::newton::{from_power_sums, power_sums};
use chebgf::resultant::{mulmat, resultant, resultant_subresultant};
use chebgf::verify::{
    all_passed, check_degree_identity, check_discriminant, check_fact_degrees, check_fact_initial,
    check_fact_nonneg, check_roots_of_unity, check_trace, numeric_h_oracle, CheckReport,
    FLOAT_TOLERANCE,
};
use chebgf::{
    expand_ratfun, generating_function, h_family, rat, rat_int, BiPoly, Poly, Rat, RatFun, UniPoly,
    Var,
};
use num::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use std::sync::Mutex;
use std::time::{Duration, Instant};

/// Wall-clock assertions take this lock so they never overlap each other.
static TIMING_GATE: Mutex<()> = Mutex::new(());

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let _guard = TIMING_GATE.lock().unwrap();
    let t0 = Instant::now();
    let out = f();
    (out, t0.elapsed())
}

/// Polynomial in t with integer coefficients, ascending powers.
fn tp(cs: &[i64]) -> BiPoly {
    Poly::new(
        Var::T,
        cs.iter().map(|&c| UniPoly::from_ints(&[c])).collect(),
    )
}

/// `x^k` as a coefficient ring constant.
fn xk(k: usize) -> BiPoly {
    Poly::constant(Var::T, UniPoly::monomial(Var::X, Rat::one(), k))
}

/// Cross-multiplication equality against a raw (non-canonical) display.
fn cross_equal(f: &RatFun, num: &BiPoly, den: &BiPoly) -> bool {
    f.num() * den == num * f.den()
}

#[test]
fn level_one_closed_form() {
    let (f, dt) = timed(|| generating_function(1));
    // (1 - t) / ((1 - t)^2 - x t)
    let num = tp(&[1, -1]);
    let den = tp(&[1, -1]).pow(2) - xk(1) * tp(&[0, 1]);
    assert!(cross_equal(&f, &num, &den), "level 1 mismatch");
    assert!(dt < Duration::from_millis(100), "level 1 took {dt:?}");
    println!("acceptance: PASS  F_1 matches closed form ({dt:?})");
}

#[test]
fn level_two_closed_form() {
    let (f, dt) = timed(|| generating_function(2));
    // (1 - t)^3 / ((t - 1)^4 - x t (t + 1)^2)
    let num = tp(&[1, -1]).pow(3);
    let den = tp(&[-1, 1]).pow(4) - xk(1) * tp(&[0, 1]) * tp(&[1, 1]).pow(2);
    assert!(cross_equal(&f, &num, &den), "level 2 mismatch");
    assert!(dt < Duration::from_millis(100), "level 2 took {dt:?}");
    println!("acceptance: PASS  F_2 matches closed form ({dt:?})");
}

#[test]
fn levels_three_and_four_closed_forms() {
    // level 3: (1-t)((t-1)^6 - x t^2 (t+3)(3t+1))
    //          over x^2 t^4 - x t (t^4+14t^3+34t^2+14t+1)(t-1)^2 + (t-1)^8
    let (f3, dt3) = timed(|| generating_function(3));
    let num3 =
        tp(&[1, -1]) * (tp(&[-1, 1]).pow(6) - xk(1) * tp(&[0, 0, 1]) * tp(&[3, 1]) * tp(&[1, 3]));
    let den3 = xk(2) * tp(&[0, 0, 0, 0, 1])
        - xk(1) * tp(&[0, 1]) * tp(&[1, 14, 34, 14, 1]) * tp(&[-1, 1]).pow(2)
        + tp(&[-1, 1]).pow(8);
    assert!(cross_equal(&f3, &num3, &den3), "level 3 mismatch");
    assert!(dt3 < Duration::from_secs(1), "level 3 took {dt3:?}");

    // level 4: (t-1)(x^2 t^4 A - 2 x t^2 B (t-1)^6 + (t-1)^14)
    //          over x^3 t^5 (t+1)^2 (t-1)^4 + x^2 t^3 C + x t (t-1)^8 D - (t-1)^16
    let (f4, dt4) = timed(|| generating_function(4));
    let a = tp(&[9, -46, -89, -260, -89, -46, 9]);
    let b = tp(&[11, 128, 266, 128, 11]);
    let c = tp(&[2, -13, 226, -300, -676, -2574, -676, -300, 226, -13, 2]);
    let d = tp(&[1, 60, 519, 1016, 519, 60, 1]);
    let t = |k: usize| {
        tp(&{
            let mut v = vec![0; k + 1];
            v[k] = 1;
            v
        })
    };
    let num4 = tp(&[-1, 1])
        * (xk(2) * t(4) * &a - tp(&[2]) * xk(1) * t(2) * &b * tp(&[-1, 1]).pow(6)
            + tp(&[-1, 1]).pow(14));
    let den4 = xk(3) * t(5) * tp(&[1, 1]).pow(2) * tp(&[-1, 1]).pow(4)
        + xk(2) * t(3) * &c
        + xk(1) * t(1) * tp(&[-1, 1]).pow(8) * &d
        - tp(&[-1, 1]).pow(16);
    assert!(cross_equal(&f4, &num4, &den4), "level 4 mismatch");
    assert!(dt4 < Duration::from_secs(1), "level 4 took {dt4:?}");

    println!("acceptance: PASS  F_3 ({dt3:?}) and F_4 ({dt4:?}) match closed forms");
}

#[test]
fn series_coefficients_match_direct_route() {
    let ((), dt) = timed(|| {
        for s in 1..=5usize {
            let terms = (1 << s) + 4;
            let f = generating_function(s);
            let from_series = expand_ratfun(&f, terms);
            let direct = h_family(s, terms);
            assert_eq!(from_series, direct, "level {s} series/direct mismatch");
        }
    });
    assert!(dt < Duration::from_secs(30), "sweep took {dt:?}");
    println!("acceptance: PASS  first 2^s+4 coefficients agree for s <= 5 ({dt:?})");
}

#[test]
fn discriminant_factorization() {
    let (reports, dt) = timed(|| {
        let mut reports: Vec<CheckReport> = Vec::new();
        for s in 1..=3 {
            for m in 1..=3 {
                reports.push(check_discriminant(s, m));
            }
        }
        reports.push(check_discriminant(1, 5));
        reports
    });
    assert!(all_passed(&reports), "failures: {reports:#?}");
    assert!(dt < Duration::from_secs(60), "discriminants took {dt:?}");
    println!(
        "acceptance: PASS  {} discriminant factorizations ({dt:?})",
        reports.len()
    );
}

#[test]
fn fact_suite() {
    let (reports, dt) = timed(|| {
        vec![
            check_fact_initial(6),
            check_fact_nonneg(5, 10),
            check_trace(4, 8),
            check_fact_degrees(5),
            check_degree_identity(12),
        ]
    });
    assert!(all_passed(&reports), "failures: {reports:#?}");
    assert!(dt < Duration::from_secs(60), "fact suite took {dt:?}");
    println!("acceptance: PASS  all five fact families ({dt:?})");
}

#[test]
fn numeric_oracles() {
    assert_eq!(FLOAT_TOLERANCE, 1e-8, "tolerance drifted from the contract");
    let samples = [rat_int(1), rat(1, 2), rat_int(3)];
    let mut reports = Vec::new();
    for s in 1..=4 {
        for m in 0..=6 {
            for x0 in &samples {
                reports.push(numeric_h_oracle(s, m, x0));
            }
        }
    }
    for s in 1..=4 {
        for m in 0..=5 {
            reports.push(check_roots_of_unity(s, m));
        }
    }
    assert!(all_passed(&reports), "failures: {reports:#?}");
    println!(
        "acceptance: PASS  {} floating-point cross-checks within 1e-8",
        reports.len()
    );
}

#[test]
fn performance_levels_one_through_six() {
    let (degrees, dt) = timed(|| {
        (1..=6usize)
            .map(|s| generating_function(s).den().deg_t())
            .collect::<Vec<_>>()
    });
    for (i, d) in degrees.iter().enumerate() {
        assert_eq!(*d, Some(1 << (i + 1)));
    }
    assert!(dt < Duration::from_secs(60), "levels 1..=6 took {dt:?}");
    println!("acceptance: PASS  levels 1..=6 in {dt:?} (budget 60s)");
}

/// No asserted bound; prints the observed time. Run with
/// `cargo test --test acceptance -- --ignored --nocapture`.
#[test]
#[ignore = "level 7 takes minutes; reports timing only"]
fn level_seven_completes() {
    let t0 = Instant::now();
    let f = generating_function(7);
    let dt = t0.elapsed();
    assert_eq!(f.den().deg_t(), Some(128));
    assert_eq!(f.num().deg_t(), Some(127));
    println!("acceptance (no bound): level 7 completed in {dt:?}");
}

// ---------------------------------------------------------------------------
// Randomized property suites, >= 100 cases each, run here with an explicit
// case count so the gate is self-contained.
// ---------------------------------------------------------------------------

const CASES: u32 = 128;

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        ..Config::default()
    })
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn unipoly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(|c| Poly::new(Var::X, c))
}

fn unipoly_nonzero(max_len: usize) -> impl Strategy<Value = UniPoly> {
    unipoly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn monic_from_roots() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(
        (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(if n == 0 { 1 } else { n }, d)),
        1..=5,
    )
    .prop_map(|roots| {
        roots.iter().fold(UniPoly::one(), |acc, r| {
            acc * Poly::new(Var::X, vec![-r.clone(), Rat::one()])
        })
    })
}

#[test]
fn randomized_ring_axioms() {
    runner()
        .run(&(unipoly(5), unipoly(5), unipoly(5)), |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a * &UniPoly::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
            Ok(())
        })
        .unwrap();
    println!("acceptance: PASS  ring axioms ({CASES} cases)");
}

#[test]
fn randomized_newton_round_trip() {
    runner()
        .run(&monic_from_roots(), |p| {
            let n = p.degree().unwrap();
            let sums = power_sums(&p, n + 1);
            prop_assert_eq!(from_power_sums(&sums, n), p);
            Ok(())
        })
        .unwrap();
    println!("acceptance: PASS  power-sum round trip ({CASES} cases)");
}

#[test]
fn randomized_resultant_dual_agreement() {
    runner()
        .run(&(unipoly_nonzero(5), unipoly_nonzero(5)), |(f, g)| {
            let direct = resultant(&f, &g);
            prop_assert_eq!(&direct, &resultant_subresultant(&f, &g));
            if f.lc().map(|c| c.is_one()).unwrap_or(false) && f.degree().unwrap() >= 1 {
                prop_assert_eq!(&direct, &mulmat::resultant_companion(&f, &g));
            }
            Ok(())
        })
        .unwrap();
    println!("acceptance: PASS  resultant implementations agree ({CASES} cases)");
}

#[test]
fn randomized_self_reciprocal_reconstruction() {
    runner()
        .run(
            &prop::collection::vec((1i64..=9, 1i64..=9), 1..=3),
            |pairs| {
                let mut p = UniPoly::one();
                for (n, d) in &pairs {
                    p = p * Poly::new(Var::X, vec![-rat(*n, *d), Rat::one()]);
                    p = p * Poly::new(Var::X, vec![-rat(*d, *n), Rat::one()]);
                }
                let n = p.degree().unwrap();
                let rebuilt = from_power_sums(&power_sums(&p, n + 1), n);
                prop_assert_eq!(&rebuilt, &p);
                prop_assert_eq!(rebuilt.reverse(n), p);
                Ok(())
            },
        )
        .unwrap();
    println!("acceptance: PASS  reciprocal-pair reconstruction ({CASES} cases)");
}
