//! The generating-function pipeline.
//!
//! The target objects are the polynomial families `H_m^(s)(x)` — monic,
//! degree m, nonnegative integer coefficients — whose roots are `-4^s`
//! times the `2s`-th powers of cosines at rational angles, and their
//! generating functions
//!
//! ```text
//! F_s(x, t) = sum_{m >= 0} H_m^(s)(x) t^m  =  N_s(x, t) / D_s(x, t),
//! ```
//!
//! which are rational with `deg_t D_s <= 2^s`. Everything here is exact.
//!
//! The pipeline in [`generating_function`] works in the sign-flipped monic
//! family `G_m^(s)(x) = (-1)^m H_m^(s)(-x)` whose base case `G_m^(1)`
//! satisfies a constant-coefficient three-term recurrence. Power sums of the
//! base characteristic polynomial `t^2 + (2-x)t + 1` are pushed through the
//! power-substitution resultant, the denominator is rebuilt from the
//! transformed sums by Newton's identities, and the numerator is recovered
//! by one truncated multiplication.

use crate::modp::certified_coprime_in_t;
use crate::newton::{from_power_sums, power_sums};
use crate::polyring::{BiPoly, Poly, Rat, UniPoly, Var};
use crate::resultant::{pseudo_rem, resultant, resultant_power_sub};
use crate::series::TruncSeries;
use num::{One, Signed, Zero};

// ---------------------------------------------------------------------------
// Polynomial GCDs in Q[x] and (Q[x])[t].
// ---------------------------------------------------------------------------

/// GCD in Q[x], normalized to a primitive integer polynomial with positive
/// leading coefficient (the canonical associate). `gcd(0, 0) = 0`.
pub fn gcd_unipoly(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    if a.is_zero() {
        a
    } else {
        a.content_and_primitive().1
    }
}

/// Content of a t-polynomial in x: the GCD of its t-coefficients, in the
/// same canonical associate form as [`gcd_unipoly`].
fn x_content(p: &BiPoly) -> UniPoly {
    p.coeffs()
        .iter()
        .fold(UniPoly::zero(), |acc, c| gcd_unipoly(&acc, c))
}

/// Divides out the x-content; the zero polynomial passes through.
fn x_primitive(p: &BiPoly) -> BiPoly {
    let c = x_content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    p.map_coeffs(|tc| tc.exact_div(&c))
}

/// Full GCD of two t-polynomials over Q[x] (content times primitive part),
/// via a primitive polynomial remainder sequence. Normalized so the leading
/// t-coefficient is a primitive integer polynomial with positive leading
/// coefficient. Used as the exact fallback when the modular coprimality
/// certificate is inconclusive.
pub fn gcd_bipoly_in_t(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() {
        return x_primitive(b);
    }
    if b.is_zero() {
        return x_primitive(a);
    }
    let content = gcd_unipoly(&x_content(a), &x_content(b));
    let mut pa = x_primitive(a);
    let mut pb = x_primitive(b);
    if pa.deg_t() < pb.deg_t() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_zero() {
        let r = pseudo_rem(&pa, &pb);
        pa = pb;
        pb = x_primitive(&r);
    }
    let mut g = x_primitive(&pa);
    if g.lc().unwrap().lc().unwrap().is_negative() {
        g = -g;
    }
    g.scale(&content)
}

// ---------------------------------------------------------------------------
// Canonical rational functions in t over Q[x].
// ---------------------------------------------------------------------------

/// A rational function `num/den` in t with coefficients in Q[x], kept in a
/// canonical reduced form:
///
/// - `den` is nonzero and `den(x, 0) = 1`;
/// - `num` and `den` share no x-content and no factor of positive t-degree.
///
/// Two values are equal as rational functions iff their canonical forms are
/// equal componentwise, which makes outputs reproducible bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFun {
    num: BiPoly,
    den: BiPoly,
}

impl RatFun {
    /// Canonicalizes `num/den`. Panics if `den` is zero or if, after
    /// reduction, its constant term in t is not a nonzero rational number
    /// (such inputs, e.g. `1/t` or `1/(1+x+t)`, have no expansion of the
    /// canonical shape).
    pub fn new(num: BiPoly, den: BiPoly) -> RatFun {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun {
                num: BiPoly::zero(),
                den: BiPoly::one(),
            };
        }
        let mut num = num;
        let mut den = den;

        // Common x-content.
        let c = gcd_unipoly(&x_content(&num), &x_content(&den));
        if !c.is_one() {
            num = num.map_coeffs(|tc| tc.exact_div(&c));
            den = den.map_coeffs(|tc| tc.exact_div(&c));
        }

        // Common factors of positive t-degree: certify there are none, or
        // divide them out exactly.
        let trivially_coprime = num.deg_t() == Some(0) || den.deg_t() == Some(0);
        if !trivially_coprime && !certified_coprime_in_t(&num, &den) {
            let g = gcd_bipoly_in_t(&num, &den);
            if !g.is_one() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
                let c = gcd_unipoly(&x_content(&num), &x_content(&den));
                if !c.is_one() {
                    num = num.map_coeffs(|tc| tc.exact_div(&c));
                    den = den.map_coeffs(|tc| tc.exact_div(&c));
                }
            }
        }

        // Scale so den(x, 0) = 1.
        let c0 = den.coeff(0);
        assert!(
            c0.degree() == Some(0),
            "denominator constant term in t must be a nonzero rational, got {c0}"
        );
        let inv = Poly::constant(Var::X, Rat::one() / c0.coeff(0));
        if !inv.is_one() {
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    /// Equality as rational functions (cross multiplication), independent of
    /// any normalization.
    pub fn equivalent(&self, other: &RatFun) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// First `ord` coefficients of the power-series expansion in t.
    pub fn expand(&self, ord: usize) -> TruncSeries<UniPoly> {
        // A component reduced to a constant carries the default variable
        // tag; pin both to t before dividing.
        let num = TruncSeries::from_poly(&self.num.with_var(Var::T), ord);
        let den = TruncSeries::from_poly(&self.den.with_var(Var::T), ord);
        num.div(&den)
    }
}

/// Convenience wrapper matching the library-level naming: the coefficients
/// `t^0..t^(ord-1)` of `f` as a vector of polynomials in x.
pub fn expand_ratfun(f: &RatFun, ord: usize) -> Vec<UniPoly> {
    f.expand(ord).coeffs().to_vec()
}

// ---------------------------------------------------------------------------
// The polynomial families.
// ---------------------------------------------------------------------------

/// `t^2 + (2-x) t + 1`: characteristic polynomial of the base three-term
/// recurrence; its roots are the two branches `alpha(x)`, `1/alpha(x)`.
fn base_char_poly() -> BiPoly {
    let two_minus_x = UniPoly::from_ints(&[2, -1]);
    Poly::new(Var::T, vec![UniPoly::one(), two_minus_x, UniPoly::one()])
}

/// `G_0..G_{count-1}` of the base family: `G_0 = 1`, `G_1 = x - 1`,
/// `G_{m+2} = (x-2) G_{m+1} - G_m`. Each `G_m` is monic of degree m.
pub fn g1_sequence(count: usize) -> Vec<UniPoly> {
    let mut out = Vec::with_capacity(count);
    if count >= 1 {
        out.push(UniPoly::one());
    }
    if count >= 2 {
        out.push(UniPoly::from_ints(&[-1, 1]));
    }
    let x_minus_2 = UniPoly::from_ints(&[-2, 1]);
    for m in 2..count {
        let next = &x_minus_2 * &out[m - 1] - out[m - 2].clone();
        out.push(next);
    }
    out
}

/// Lifts a base-family polynomial to level `s` through the
/// power-substitution resultant: the roots of the result are the s-th
/// powers of the roots of `g1_m`. The sign `(-1)^(m(s+1))` converts the
/// resultant convention into the monic normalization.
fn lift_to_level(g1_m: &UniPoly, s: usize, m: usize) -> UniPoly {
    let r = resultant_power_sub(g1_m, s);
    if (m * (s + 1)) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Monic level-s family member `G_m^(s)`: degree m, roots the s-th powers
/// of the roots of `G_m^(1)`.
pub fn g_poly(s: usize, m: usize) -> UniPoly {
    assert!(s >= 1, "level must be at least 1");
    let g1 = g1_sequence(m + 1);
    let g = lift_to_level(&g1[m], s, m);
    assert_monic_of_degree(&g, m);
    g
}

/// `H_m^(s)(x) = (-1)^m G_m^(s)(-x)`: monic of degree m with integer
/// coefficients.
pub fn h_poly(s: usize, m: usize) -> UniPoly {
    h_from_g(&g_poly(s, m), m)
}

/// `H_0^(s)..H_{count-1}^(s)`, sharing one base-sequence computation.
pub fn h_family(s: usize, count: usize) -> Vec<UniPoly> {
    assert!(s >= 1, "level must be at least 1");
    let g1 = g1_sequence(count);
    g1.iter()
        .enumerate()
        .map(|(m, g)| {
            let gs = lift_to_level(g, s, m);
            assert_monic_of_degree(&gs, m);
            h_from_g(&gs, m)
        })
        .collect()
}

fn h_from_g(g: &UniPoly, m: usize) -> UniPoly {
    let flipped = g.flip_variable_sign();
    if m % 2 == 1 {
        -flipped
    } else {
        flipped
    }
}

fn assert_monic_of_degree(p: &UniPoly, m: usize) {
    assert_eq!(p.degree(), Some(m), "family member has wrong degree");
    assert!(p.lc().unwrap().is_one(), "family member is not monic");
}

// ---------------------------------------------------------------------------
// The pipeline.
// ---------------------------------------------------------------------------

/// Extra series terms computed beyond each truncation point; the pipeline
/// asserts they vanish, which catches any drift between the denominator and
/// the family it is supposed to generate.
const GUARD_TERMS: usize = 4;

/// Computes `F_s(x, t) = sum_m H_m^(s)(x) t^m` as a canonical rational
/// function. Exact throughout; cost grows roughly like `4^s` (the
/// denominator has t-degree `2^s`).
///
/// Steps: power sums of the base characteristic polynomial; transport to
/// level s by power-substitution resultants; reconstruction of the (monic,
/// self-reciprocal) characteristic polynomial by Newton's identities; sign
/// substitution to land in the H-family variables; numerator by truncated
/// multiplication; canonical reduction.
pub fn generating_function(s: usize) -> RatFun {
    assert!(s >= 1, "level must be at least 1");
    let n = 1usize << s;

    // Power sums S_0..S_n of the two base roots, as polynomials in x.
    let sums = power_sums(&base_char_poly(), n + 1);

    // Transported sums: S_l of the 2^s level-s products. S_0 = 2^s = n,
    // which is exactly the root count the reconstruction below demands.
    let lifted: Vec<UniPoly> = sums
        .coeffs()
        .iter()
        .map(|q| resultant_power_sub(q, s))
        .collect();

    // Monic characteristic polynomial of the level-s recurrence.
    let char_poly = from_power_sums(&TruncSeries::new(Var::T, lifted), n);
    assert_eq!(
        char_poly.reverse(n),
        char_poly,
        "characteristic polynomial lost its reciprocal symmetry"
    );

    // Denominator: substitute x -> -x always, t -> -t for odd s.
    let den = char_poly.substitute_signs(true, s % 2 == 1);

    // Numerator: den * sum_m H_m t^m truncates to t-degree < n; the guard
    // window must come out identically zero.
    let hs = h_family(s, n + GUARD_TERMS);
    let h_series = TruncSeries::new(Var::T, hs);
    let prod = &TruncSeries::from_poly(&den, n + GUARD_TERMS) * &h_series;
    for k in n..n + GUARD_TERMS {
        assert!(
            prod.coeff(k).is_zero(),
            "denominator does not annihilate the family recurrence at t^{k}"
        );
    }
    let num = Poly::new(Var::T, prod.coeffs()[..n].to_vec());

    let f = RatFun::new(num, den);
    assert!(
        f.num.is_integer() && f.den.is_integer(),
        "canonical form has non-integer coefficients"
    );
    f
}

// ---------------------------------------------------------------------------
// Hadamard products.
// ---------------------------------------------------------------------------

/// Termwise product of two rational series: if `u = sum a_m t^m` and
/// `v = sum b_m t^m`, returns the rational function of `sum a_m b_m t^m`.
///
/// The characteristic roots of the result are the pairwise products of the
/// input characteristic roots, so its monic characteristic polynomial is
/// `Res_w(p(w), w^(deg q) * q(t/w))` with `p`, `q` the reversals of the two
/// denominators. The numerator is recovered from the truncated product
/// series exactly like the pipeline's step for `F_s`; `ord` terms are
/// expanded (at least the denominator degree plus one is always used), and
/// every extra term doubles as a consistency check.
pub fn hadamard_product(u: &RatFun, v: &RatFun, ord: usize) -> RatFun {
    let du = u.den.deg_t().unwrap();
    let dv = v.den.deg_t().unwrap();
    assert!(
        !u.den.coeff(0).is_zero() && !v.den.coeff(0).is_zero(),
        "hadamard product needs denominators with nonzero constant term"
    );

    // A canonical denominator of t-degree 0 is exactly 1: that operand is a
    // polynomial, so the termwise product is one as well.
    if du == 0 || dv == 0 {
        // Expansion length: past the polynomial operand's degree every
        // termwise product is zero.
        let bound = match (du, dv) {
            (0, 0) => u.num.deg_t().min(v.num.deg_t()),
            (0, _) => u.num.deg_t(),
            _ => v.num.deg_t(),
        };
        let Some(d) = bound else {
            return RatFun::new(BiPoly::zero(), BiPoly::one());
        };
        let terms = d + 1;
        let a = u.expand(terms);
        let b = v.expand(terms);
        let coeffs: Vec<UniPoly> = (0..terms).map(|m| a.coeff(m) * b.coeff(m)).collect();
        return RatFun::new(Poly::new(Var::T, coeffs), BiPoly::one());
    }

    let deg = du * dv;
    let p = reversal_in_w(&u.den, du);
    // w^(deg q) * q(t/w): coefficient of w^(dv - k) is q_k * t^k.
    let q = v.den.reverse(dv);
    let mut homog = vec![BiPoly::zero(); dv + 1];
    for (k, qk) in q.coeffs().iter().enumerate() {
        homog[dv - k] = BiPoly::monomial(Var::T, qk.clone(), k);
    }
    let q_side: Poly<BiPoly> = Poly::new(Var::U, homog);
    let char_poly = resultant(&p, &q_side);
    assert_eq!(
        char_poly.deg_t(),
        Some(deg),
        "hadamard characteristic degree"
    );
    let den = char_poly.reverse(deg);

    let terms = ord.max(deg + 1);
    let a = u.expand(terms);
    let b = v.expand(terms);
    let coeffs: Vec<UniPoly> = (0..terms).map(|m| a.coeff(m) * b.coeff(m)).collect();
    let prod = &TruncSeries::from_poly(&den, terms) * &TruncSeries::new(Var::T, coeffs);
    for k in deg..terms {
        assert!(
            prod.coeff(k).is_zero(),
            "hadamard numerator does not truncate at t^{k}"
        );
    }
    let num = Poly::new(Var::T, prod.coeffs()[..deg].to_vec());
    RatFun::new(num, den)
}

/// Reversal of a t-polynomial, rebased into the resultant's bound variable:
/// the result has w-degree `d` with constant-in-t coefficients.
fn reversal_in_w(den: &BiPoly, d: usize) -> Poly<BiPoly> {
    let rev = den.reverse(d);
    Poly::new(
        Var::U,
        rev.coeffs()
            .iter()
            .map(|c| BiPoly::constant(Var::T, c.clone()))
            .collect(),
    )
}
