//! Mechanical verification of the identities the library is built on.
//!
//! Every check recomputes both sides of one identity by an independent
//! route and reports agreement. All checks are exact polynomial
//! identities except [`numeric_h_oracle`] and [`check_roots_of_unity`],
//! which compare floating-point evaluations within a relative tolerance.

use crate::genfun::{generating_function, h_family, h_poly};
use crate::polyring::{BiPoly, Poly, Rat, UniPoly, Var};
use crate::resultant::discriminant;
use crate::scalar::rat_int;
use crate::series::TruncSeries;
use num::complex::Complex64;
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;

/// Relative tolerance for the two floating-point checks.
pub const FLOAT_TOLERANCE: f64 = 1e-8;

/// Outcome of one verification run.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    /// Which identity was checked.
    pub name: String,
    /// Parameter range covered, human readable.
    pub params: String,
    /// True iff every instance in the range agreed.
    pub passed: bool,
    /// First failing instance, with both sides rendered.
    pub counterexample: Option<String>,
}

impl CheckReport {
    fn pass(name: &str, params: String) -> CheckReport {
        CheckReport {
            name: name.to_string(),
            params,
            passed: true,
            counterexample: None,
        }
    }

    fn fail(name: &str, params: String, counterexample: String) -> CheckReport {
        CheckReport {
            name: name.to_string(),
            params,
            passed: false,
            counterexample: Some(counterexample),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<18} {}", self.name, self.params)?;
        if let Some(ce) = &self.counterexample {
            write!(f, "\n      counterexample: {ce}")?;
        }
        Ok(())
    }
}

fn x_var() -> UniPoly {
    UniPoly::variable(Var::X)
}

// ---------------------------------------------------------------------------
// Discriminant factorization.
// ---------------------------------------------------------------------------

/// Checks the discriminant factorization
///
/// ```text
/// disc_y( K_s * f_m ) = C * x^(2s-1) * (x + 2^(2s)) * H_m^(s)(x)^4,
/// C = (-1)^m (2m+1)^(2m-1) s^(2s),
/// ```
///
/// for `K_s = (1+y)^(2s) + x y^s` and `f_m = (y^(2m+1)-1)/(y-1)`, by
/// computing the discriminant exactly and comparing. The product has
/// y-degree `2s + 2m`; a size guard keeps the Sylvester matrix desk-scale.
pub fn check_discriminant(s: usize, m: usize) -> CheckReport {
    assert!(s >= 1 && m >= 1, "check_discriminant needs s, m >= 1");
    assert!(
        2 * s + 2 * m <= 24,
        "discriminant check guard: y-degree {} exceeds 24",
        2 * s + 2 * m
    );
    let name = "discriminant";
    let params = format!("s={s}, m={m}");

    // K_s(x, y) over Q[x] in y.
    let y: BiPoly = Poly::variable(Var::Y);
    let one = BiPoly::one();
    let x_ys = BiPoly::monomial(Var::Y, x_var(), s);
    let k = (&one + &y).pow(2 * s as u32) + x_ys;

    // f_m(y) = 1 + y + ... + y^(2m).
    let f: BiPoly = Poly::new(Var::Y, vec![UniPoly::one(); 2 * m + 1]);

    let delta = discriminant(&(&k * &f));

    // Right-hand side.
    let c_num = BigInt::from(2 * m as i64 + 1).pow(2 * m as u32 - 1)
        * BigInt::from(s as i64).pow(2 * s as u32);
    let c = if m % 2 == 1 { -c_num } else { c_num };
    let constant = UniPoly::constant(Var::X, Rat::from_integer(c));
    let x_pow = x_var().pow(2 * s as u32 - 1);
    let shifted = x_var() + UniPoly::constant(Var::X, Rat::from_integer(BigInt::one() << (2 * s)));
    let h4 = h_poly(s, m).pow(4);
    let expected = constant * x_pow * shifted * h4;

    if delta == expected {
        CheckReport::pass(name, params)
    } else {
        CheckReport::fail(
            name,
            params.clone(),
            format!("{params}: disc = {delta}, expected {expected}"),
        )
    }
}

// ---------------------------------------------------------------------------
// Numeric oracle for the defining product.
// ---------------------------------------------------------------------------

fn relative_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= FLOAT_TOLERANCE * b.abs().max(1.0)
}

/// Compares the exact `H_m^(s)(x0)` against the defining product
/// `prod_{k=1..m} (x0 + 4^s cos^(2s)(k pi / (2m+1)))` evaluated in floating
/// point. This ties the resultant route to the trigonometric definition.
pub fn numeric_h_oracle(s: usize, m: usize, x0: &Rat) -> CheckReport {
    assert!(s >= 1, "level must be at least 1");
    let name = "numeric-oracle";
    let params = format!("s={s}, m={m}, x0={x0}");

    let x0_f = x0.to_f64().expect("sample point fits in f64");
    let mut product = 1.0f64;
    let four_s = 4f64.powi(s as i32);
    for k in 1..=m {
        let c = (k as f64 * std::f64::consts::PI / (2 * m + 1) as f64).cos();
        product *= x0_f + four_s * c.powi(2 * s as i32);
    }
    let exact = h_poly(s, m).eval(x0).to_f64().expect("value fits in f64");

    if relative_close(product, exact) {
        CheckReport::pass(name, params)
    } else {
        CheckReport::fail(
            name,
            params.clone(),
            format!("{params}: float product {product:e} vs exact {exact:e}"),
        )
    }
}

// ---------------------------------------------------------------------------
// Relation to the classical second-kind family.
// ---------------------------------------------------------------------------

/// Verifies `U_{2m}(x) = (-1)^m H_m^(1)(-4 x^2)` for `m <= m_max`, with
/// `U_n` built from its own recurrence `U_{n+1} = 2x U_n - U_{n-1}`, and
/// additionally that `(sum U_n t^n)(1 - 2xt + t^2) = 1` holds through
/// `t^(m_max)`.
pub fn check_chebyshev_relation(m_max: usize) -> CheckReport {
    let name = "chebyshev";
    let params = format!("m <= {m_max}");

    // U_0..U_{2 m_max} by recurrence.
    let count = 2 * m_max + 1;
    let two_x = UniPoly::from_ints(&[0, 2]);
    let mut u = vec![UniPoly::one(), two_x.clone()];
    while u.len() < count.max(2) {
        let next = &two_x * &u[u.len() - 1] - u[u.len() - 2].clone();
        u.push(next);
    }

    let minus_4x2 = UniPoly::from_ints(&[0, 0, -4]);
    for m in 0..=m_max {
        let h = h_poly(1, m).compose(&minus_4x2);
        let rhs = if m % 2 == 1 { -h } else { h };
        if u[2 * m] != rhs {
            return CheckReport::fail(
                name,
                params,
                format!("m={m}: U_2m = {}, (-1)^m H_m^(1)(-4x^2) = {rhs}", u[2 * m]),
            );
        }
    }

    // Generating-function identity for the recurrence itself.
    let ord = m_max.max(2);
    let u_series = TruncSeries::new(Var::T, u[..ord].to_vec());
    let den = TruncSeries::from_poly(
        &Poly::new(Var::T, vec![UniPoly::one(), -two_x, UniPoly::one()]),
        ord,
    );
    let prod = &u_series * &den;
    let one = TruncSeries::constant(Var::T, UniPoly::one(), ord);
    if prod != one {
        return CheckReport::fail(
            name,
            params,
            format!("series product is {:?}, expected 1", prod.coeffs()),
        );
    }
    CheckReport::pass(name, params)
}

// ---------------------------------------------------------------------------
// Closed forms for the first three family members.
// ---------------------------------------------------------------------------

fn lucas(n: usize) -> i64 {
    let (mut a, mut b) = (2i64, 1i64); // L_0, L_1
    for _ in 0..n {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// Checks `H_0 = 1`, `H_1 = x + 1`, `H_2 = x^2 + L_{2s} x + 1` for all
/// `s <= s_max`, with the Lucas numbers generated from their recurrence.
pub fn check_fact_initial(s_max: usize) -> CheckReport {
    let name = "initial-members";
    let params = format!("s <= {s_max}");
    for s in 1..=s_max {
        let expect = [
            UniPoly::one(),
            UniPoly::from_ints(&[1, 1]),
            UniPoly::from_ints(&[1, lucas(2 * s), 1]),
        ];
        for (m, e) in expect.iter().enumerate() {
            let h = h_poly(s, m);
            if &h != e {
                return CheckReport::fail(
                    name,
                    params,
                    format!("s={s}, m={m}: got {h}, expected {e}"),
                );
            }
        }
    }
    CheckReport::pass(name, params)
}

/// Checks that every coefficient of `H_m^(s)` is a nonnegative integer for
/// `s <= s_max`, `m <= m_max`.
pub fn check_fact_nonneg(s_max: usize, m_max: usize) -> CheckReport {
    let name = "nonneg-integer";
    let params = format!("s <= {s_max}, m <= {m_max}");
    for s in 1..=s_max {
        for (m, h) in h_family(s, m_max + 1).iter().enumerate() {
            for (k, c) in h.coeffs().iter().enumerate() {
                if !c.denom().is_one() || c.is_negative() {
                    return CheckReport::fail(
                        name,
                        params,
                        format!("s={s}, m={m}: coefficient of x^{k} is {c}"),
                    );
                }
            }
        }
    }
    CheckReport::pass(name, params)
}

// ---------------------------------------------------------------------------
// Trace interpretation of the linear coefficient.
// ---------------------------------------------------------------------------

fn mat_mul_int(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Checks that the coefficient of `x^1` in `H_m^(s)` equals the trace of
/// `M^(2s)` for the 0/1 matrix with `M[i][j] = 1` iff `i + j <= m + 1`
/// (1-based indices), for `s <= s_max`, `m <= m_max`.
pub fn check_trace(s_max: usize, m_max: usize) -> CheckReport {
    let name = "trace";
    let params = format!("s <= {s_max}, m <= {m_max}");
    for m in 1..=m_max {
        let mat: Vec<Vec<BigInt>> = (1..=m)
            .map(|i| {
                (1..=m)
                    .map(|j| {
                        if i + j <= m + 1 {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        // Walk the powers M^2, M^4, ... reusing the previous square.
        let m2 = mat_mul_int(&mat, &mat);
        let mut power = m2.clone();
        for s in 1..=s_max {
            if s > 1 {
                power = mat_mul_int(&power, &m2);
            }
            let trace: BigInt = (0..m).map(|i| power[i][i].clone()).sum();
            let h = h_poly(s, m);
            let linear = h.coeff(1);
            if linear != Rat::from_integer(trace.clone()) {
                return CheckReport::fail(
                    name,
                    params,
                    format!("s={s}, m={m}: [x^1] H = {linear}, trace = {trace}"),
                );
            }
        }
    }
    CheckReport::pass(name, params)
}

// ---------------------------------------------------------------------------
// Degree pattern of the rational functions.
// ---------------------------------------------------------------------------

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Central binomial coefficient `C(n, floor(n/2))`.
fn central_binomial(n: usize) -> usize {
    binomial(n, n / 2)
}

/// Checks the degree pattern of the canonical `F_s`: t-degrees `2^s` and
/// `2^s - 1`, x-degrees the central binomial `B_{s-1}` and `B_{s-1} - 1`.
pub fn check_fact_degrees(s_max: usize) -> CheckReport {
    let name = "degrees";
    let params = format!("s <= {s_max}");
    for s in 1..=s_max {
        let f = generating_function(s);
        let b = central_binomial(s - 1);
        let got = (
            f.den().deg_t(),
            f.num().deg_t(),
            f.den().deg_x(),
            f.num().deg_x(),
        );
        let want = (Some(1 << s), Some((1 << s) - 1), Some(b), Some(b - 1));
        if got != want {
            return CheckReport::fail(
                name,
                params,
                format!("s={s}: (deg_t D, deg_t N, deg_x D, deg_x N) = {got:?}, expected {want:?}"),
            );
        }
    }
    CheckReport::pass(name, params)
}

/// Checks the combinatorial identity
/// `sum_{k=0..floor(s/2)} C(s,k) (s - 2k) = s * B_{s-1}` for `s <= s_max`.
pub fn check_degree_identity(s_max: usize) -> CheckReport {
    let name = "degree-identity";
    let params = format!("s <= {s_max}");
    for s in 1..=s_max {
        let lhs: usize = (0..=s / 2).map(|k| binomial(s, k) * (s - 2 * k)).sum();
        let rhs = s * central_binomial(s - 1);
        if lhs != rhs {
            return CheckReport::fail(name, params, format!("s={s}: {lhs} != {rhs}"));
        }
    }
    CheckReport::pass(name, params)
}

// ---------------------------------------------------------------------------
// Roots-of-unity product formula.
// ---------------------------------------------------------------------------

/// Verifies `G_m^(s)(x0^s) = (-1)^(m(s-1)) * prod_j G_m^(1)(eps^j x0)` in
/// complex double precision at pseudorandom points `|x0| <= 2` (fixed seed,
/// deterministic), where `eps` is a primitive s-th root of unity.
pub fn check_roots_of_unity(s: usize, m: usize) -> CheckReport {
    assert!(s >= 1, "level must be at least 1");
    let name = "roots-of-unity";
    let params = format!("s={s}, m={m}");

    let g1 = crate::genfun::g_poly(1, m);
    let gs = crate::genfun::g_poly(s, m);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001 ^ ((s as u64) << 8) ^ m as u64);

    for _ in 0..5 {
        let r: f64 = rng.gen_range(0.25..=2.0);
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let x0 = Complex64::from_polar(r, theta);

        let lhs = gs.eval_c64(x0.powi(s as i32));
        let mut rhs = Complex64::new(1.0, 0.0);
        for j in 0..s {
            let eps = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / s as f64);
            rhs *= g1.eval_c64(eps * x0);
        }
        if (m * (s - 1)) % 2 == 1 {
            rhs = -rhs;
        }
        let err = (lhs - rhs).norm();
        if err > FLOAT_TOLERANCE * rhs.norm().max(1.0) {
            return CheckReport::fail(
                name,
                params.clone(),
                format!("{params}, x0={x0}: lhs={lhs}, rhs={rhs}"),
            );
        }
    }
    CheckReport::pass(name, params)
}

// ---------------------------------------------------------------------------
// Named suite.
// ---------------------------------------------------------------------------

/// Names accepted by [`run_named_check`], in canonical order.
pub const CHECK_NAMES: &[&str] = &[
    "discriminant",
    "numeric-oracle",
    "chebyshev",
    "initial-members",
    "nonneg-integer",
    "trace",
    "degrees",
    "degree-identity",
    "roots-of-unity",
];

/// Runs one check family by name over its default parameter range, with
/// optional overrides for the level bound `s_max` and index bound `m_max`
/// where the check is parameterized by them. Returns `None` for an unknown
/// name. [`default_suite`] is the concatenation of all nine families with
/// no overrides, so the two entry points cannot drift apart.
pub fn run_named_check(
    name: &str,
    s_max: Option<usize>,
    m_max: Option<usize>,
) -> Option<Vec<CheckReport>> {
    let s_or = |d: usize| s_max.unwrap_or(d);
    let m_or = |d: usize| m_max.unwrap_or(d);
    let mut reports = Vec::new();
    match name {
        "discriminant" => {
            for s in 1..=s_or(3) {
                for m in 1..=m_or(3) {
                    reports.push(check_discriminant(s, m));
                }
            }
            if s_max.is_none() && m_max.is_none() {
                reports.push(check_discriminant(1, 5));
            }
        }
        "numeric-oracle" => {
            let samples = [rat_int(1), Rat::new(1.into(), 2.into()), rat_int(3)];
            for s in 1..=s_or(4) {
                for m in 0..=m_or(6) {
                    for x0 in &samples {
                        reports.push(numeric_h_oracle(s, m, x0));
                    }
                }
            }
        }
        "chebyshev" => reports.push(check_chebyshev_relation(m_or(8))),
        "initial-members" => reports.push(check_fact_initial(s_or(6))),
        "nonneg-integer" => reports.push(check_fact_nonneg(s_or(5), m_or(10))),
        "trace" => reports.push(check_trace(s_or(4), m_or(8))),
        "degrees" => reports.push(check_fact_degrees(s_or(5))),
        "degree-identity" => reports.push(check_degree_identity(s_or(12))),
        "roots-of-unity" => {
            for s in 1..=s_or(4) {
                for m in 0..=m_or(5) {
                    reports.push(check_roots_of_unity(s, m));
                }
            }
        }
        _ => return None,
    }
    Some(reports)
}

/// Runs every check over its default range; the CLI and the test suite both
/// go through this single definition.
pub fn default_suite() -> Vec<CheckReport> {
    CHECK_NAMES
        .iter()
        .flat_map(|name| run_named_check(name, None, None).unwrap())
        .collect()
}

/// True iff no report in the slice failed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
