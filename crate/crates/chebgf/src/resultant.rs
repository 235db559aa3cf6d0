//! Resultants and discriminants over arbitrary exact coefficient rings.
//!
//! Two independent implementations are kept side by side on purpose:
//!
//! - [`resultant`]: fraction-free Bareiss elimination on the Sylvester
//!   matrix. This is the workhorse; all entries stay in the coefficient
//!   ring, and every division the algorithm performs is exact.
//! - [`resultant_subresultant`]: the subresultant polynomial remainder
//!   sequence. Slower on large inputs but structurally unrelated to the
//!   matrix route, which makes agreement between the two a meaningful check.
//!
//! Both use the convention `Res(f, g) = lc(f)^(deg g) * prod g(alpha)` over
//! the roots `alpha` of `f`, equal to the determinant of the Sylvester
//! matrix with `deg g` rows of `f` on top.
//!
//! [`resultant_power_sub`] computes the specific eliminations
//! `Res_y(y^s - x, q(y))` that drive the generating-function pipeline. It
//! first reduces `q` modulo `y^s - x` by exponent regrouping (exact, since
//! `y^k = x^(k div s) * y^(k mod s)` modulo `y^s - x`), which keeps the
//! Sylvester matrix at most `(2s-1) x (2s-1)` no matter how large `deg q`
//! gets.

use crate::polyring::{Poly, UniPoly, Var};
use crate::scalar::{Coeff, ExactDiv};
use num_traits::{One, Zero};

/// Sylvester matrix of `f` and `g`: `deg g` shifted copies of `f`'s
/// coefficients over `deg f` shifted copies of `g`'s, both descending.
/// Requires both degrees >= 1.
pub fn sylvester_matrix<T: Coeff>(f: &Poly<T>, g: &Poly<T>) -> Vec<Vec<T>> {
    let m = f.degree().expect("sylvester_matrix: zero polynomial");
    let n = g.degree().expect("sylvester_matrix: zero polynomial");
    assert!(
        m >= 1 && n >= 1,
        "sylvester_matrix: need two nonconstant polynomials"
    );
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![T::zero(); size];
        for k in 0..=m {
            row[i + k] = f.coeff(m - k);
        }
        rows.push(row);
    }
    for j in 0..m {
        let mut row = vec![T::zero(); size];
        for k in 0..=n {
            row[j + k] = g.coeff(n - k);
        }
        rows.push(row);
    }
    rows
}

/// Determinant by fraction-free Bareiss elimination. Every division is by a
/// previous pivot and is exact in the ring; consumes the matrix.
pub fn bareiss_determinant<T: Coeff + ExactDiv>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    for row in &m {
        assert_eq!(row.len(), n, "bareiss_determinant: matrix must be square");
    }
    let mut negate = false;
    let mut prev_pivot = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = t.exact_div(&prev_pivot);
            }
            m[i][k] = T::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        T::zero() - det
    } else {
        det
    }
}

/// Shared degenerate cases: constants and near-constants short-circuit the
/// matrix entirely. Panics on a zero polynomial, for which the resultant is
/// not defined here.
fn resultant_edges<T: Coeff>(f: &Poly<T>, g: &Poly<T>) -> Option<T> {
    let m = f.degree().expect("resultant of the zero polynomial");
    let n = g.degree().expect("resultant of the zero polynomial");
    match (m, n) {
        (0, 0) => Some(T::one()),
        (0, _) => Some(pow(f.lc().unwrap(), n)),
        (_, 0) => Some(pow(g.lc().unwrap(), m)),
        _ => None,
    }
}

fn pow<T: Coeff>(base: &T, mut e: usize) -> T {
    let mut b = base.clone();
    let mut acc = T::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Resultant of `f` and `g` via Bareiss elimination of the Sylvester matrix.
pub fn resultant<T: Coeff + ExactDiv>(f: &Poly<T>, g: &Poly<T>) -> T {
    if let Some(r) = resultant_edges(f, g) {
        return r;
    }
    bareiss_determinant(sylvester_matrix(f, g))
}

/// Pseudo-remainder: the unique `R` with `lc(b)^(deg a - deg b + 1) * a =
/// Q*b + R` and `deg R < deg b`. No coefficient division is performed.
/// Requires `deg a >= deg b >= 0` and `b` nonzero.
pub fn pseudo_rem<T: Coeff>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    let da = a.degree().expect("pseudo_rem: zero dividend");
    let db = b.degree().expect("pseudo_rem: zero divisor");
    assert!(da >= db, "pseudo_rem: dividend degree below divisor degree");
    let c = b.lc().unwrap().clone();
    let var = b.var();
    let mut r = a.clone();
    let mut steps = 0usize;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lead = r.lc().unwrap().clone();
        r = r.scale(&c) - b * &Poly::monomial(var, lead, dr - db);
        steps += 1;
    }
    // Top up to the full factor lc(b)^(delta+1) so the subresultant
    // divisibility guarantees hold verbatim.
    for _ in steps..(da - db + 1) {
        r = r.scale(&c);
    }
    r
}

/// Resultant via the subresultant polynomial remainder sequence.
///
/// Each step replaces `(A, B)` by `(B, prem(A, B) / (g * h^delta))` — the
/// classical subresultant damping, whose divisions are exact — while the
/// scalar bookkeeping keeps track of how the resultant transforms:
///
/// ```text
/// Res(A, B) = (-1)^(mn) * c^((m - r) - (delta+1)n) * (g h^delta)^n * Res(B, B')
/// ```
///
/// with `m = deg A`, `n = deg B`, `c = lc(B)`, `r = deg prem(A, B)`. The
/// possibly-negative power of `c` is accumulated as separate numerator and
/// denominator products and resolved by one exact division at the end.
pub fn resultant_subresultant<T: Coeff + ExactDiv>(f: &Poly<T>, g: &Poly<T>) -> T {
    if let Some(r) = resultant_edges(f, g) {
        return r;
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut negate = false;
    if a.degree().unwrap() < b.degree().unwrap() {
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut numer = T::one();
    let mut denom = T::one();
    let mut gg = T::one();
    let mut h = T::one();
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            numer = numer * pow(b.lc().unwrap(), m);
            break;
        }
        let delta = m - n;
        let r_poly = pseudo_rem(&a, &b);
        if r_poly.is_zero() {
            return T::zero();
        }
        if m % 2 == 1 && n % 2 == 1 {
            negate = !negate;
        }
        let c = b.lc().unwrap().clone();
        let r = r_poly.degree().unwrap();
        let e = (m - r) as i64 - ((delta + 1) * n) as i64;
        if e >= 0 {
            numer = numer * pow(&c, e as usize);
        } else {
            denom = denom * pow(&c, (-e) as usize);
        }
        let divisor = gg.clone() * pow(&h, delta);
        numer = numer * pow(&divisor, n);
        let b_next = r_poly.map_coeffs(|v| v.exact_div(&divisor));
        a = b;
        b = b_next;
        gg = a.lc().unwrap().clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => pow(&gg, delta).exact_div(&pow(&h, delta - 1)),
        };
    }
    let total = if negate { T::zero() - numer } else { numer };
    total.exact_div(&denom)
}

/// Discriminant of `p` with respect to its own variable:
/// `(-1)^(d(d-1)/2) * Res(p, p') / lc(p)` for `d = deg p >= 1`.
pub fn discriminant<T: Coeff + ExactDiv>(p: &Poly<T>) -> T {
    let d = p.degree().expect("discriminant of the zero polynomial");
    assert!(d >= 1, "discriminant needs degree >= 1");
    let r = resultant(p, &p.derivative());
    let r = r.exact_div(p.lc().unwrap());
    if (d * (d - 1) / 2) % 2 == 1 {
        T::zero() - r
    } else {
        r
    }
}

/// `Res_y(y^s - x, q(y))` for univariate `q`, landing in Q[x].
///
/// The input variable of `q` is irrelevant; its coefficient sequence is
/// reinterpreted in a bound variable `y`. The reduction
/// `y^k = x^(k div s) * y^(k mod s) (mod y^s - x)` leaves a remainder of
/// y-degree below `s`, and since `y^s - x` is monic,
/// `Res(f, q) = Res(f, q mod f)` exactly. The resulting Sylvester matrix has
/// dimension at most `2s - 1` independent of `deg q`.
pub fn resultant_power_sub(q: &UniPoly, s: usize) -> UniPoly {
    assert!(s >= 1, "power substitution needs s >= 1");
    assert!(!q.is_zero(), "resultant of the zero polynomial");

    // Regroup q's coefficients modulo y^s - x.
    let mut grouped = vec![UniPoly::zero(); s];
    for (k, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let piece = UniPoly::monomial(Var::X, c.clone(), k / s);
        grouped[k % s] = std::mem::replace(&mut grouped[k % s], UniPoly::zero()) + piece;
    }
    let reduced: Poly<UniPoly> = Poly::new(Var::Y, grouped);
    if reduced.is_zero() {
        return UniPoly::zero();
    }

    // f = y^s - x over Q[x].
    let mut f_coeffs = vec![UniPoly::zero(); s + 1];
    f_coeffs[0] = -UniPoly::variable(Var::X);
    f_coeffs[s] = UniPoly::one();
    let f: Poly<UniPoly> = Poly::new(Var::Y, f_coeffs);

    #[cfg(feature = "mulmat-resultant")]
    {
        // Fast path: f is monic, so the resultant is the determinant of
        // multiplication by `reduced` in Q[x][y]/(f) — an s-by-s matrix
        // instead of a (2s-1)-by-(2s-1) Sylvester matrix.
        mulmat::resultant_companion(&f, &reduced)
    }
    #[cfg(not(feature = "mulmat-resultant"))]
    {
        resultant(&f, &reduced)
    }
}

// ---------------------------------------------------------------------------
// Companion-matrix route, kept as a third opinion for tests: for monic f,
// Res(f, g) = det g(C_f) with C_f the companion matrix of f.
// ---------------------------------------------------------------------------

pub mod mulmat {
    use super::*;

    fn mat_mul<T: Coeff>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
        let n = a.len();
        let mut out = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i][j] = std::mem::replace(&mut out[i][j], T::zero())
                        + a[i][k].clone() * b[k][j].clone();
                }
            }
        }
        out
    }

    /// `Res(f, g) = det g(C_f)` for monic `f` of degree >= 1.
    pub fn resultant_companion<T: Coeff + ExactDiv>(f: &Poly<T>, g: &Poly<T>) -> T {
        let d = f.degree().expect("resultant of the zero polynomial");
        assert!(d >= 1, "companion route needs deg f >= 1");
        assert!(f.lc().unwrap().is_one(), "companion route needs monic f");
        assert!(!g.is_zero(), "resultant of the zero polynomial");

        // Companion matrix: subdiagonal ones, last column -f_0..-f_{d-1}.
        let mut companion = vec![vec![T::zero(); d]; d];
        for i in 1..d {
            companion[i][i - 1] = T::one();
        }
        for (i, row) in companion.iter_mut().enumerate() {
            row[d - 1] = T::zero() - f.coeff(i);
        }

        // Horner: g(C) = (...(g_n C + g_{n-1} I) C + ...) + g_0 I.
        let mut acc = vec![vec![T::zero(); d]; d];
        for c in g.coeffs().iter().rev() {
            acc = mat_mul(&acc, &companion);
            for (i, row) in acc.iter_mut().enumerate() {
                row[i] = std::mem::replace(&mut row[i], T::zero()) + c.clone();
            }
        }
        bareiss_determinant(acc)
    }
}
