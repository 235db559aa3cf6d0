//! Dense univariate polynomials over an arbitrary coefficient ring.
//!
//! `Poly<T>` is the single representation used everywhere: `Poly<Rat>` for
//! Q[x], `Poly<Poly<Rat>>` for polynomials in t with Q[x] coefficients, and a
//! third nesting level for resultants in a bound variable. Coefficient
//! vectors are canonical (no trailing zeros); the zero polynomial has an
//! empty vector and degree `None`, which stands in for -infinity.
//!
//! Binary operations require matching variable tags, except that constant
//! polynomials are variable-agnostic and adopt the other operand's tag. This
//! keeps `Zero::zero()` / `One::one()` usable while still catching genuine
//! mixups like `(x+1) + (t+1)`.

use crate::scalar::{Coeff, ExactDiv};
use num::{BigInt, BigRational, One, Signed, Zero};
use num_traits::FromPrimitive;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Variable tag carried by every polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    T,
    U,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::X => "x",
            Var::Y => "y",
            Var::T => "t",
            Var::U => "u",
        };
        f.write_str(s)
    }
}

/// Dense polynomial; `coeffs[i]` is the coefficient of `var^i`.
#[derive(Debug, Clone)]
pub struct Poly<T> {
    var: Var,
    coeffs: Vec<T>,
}

/// Exact rational scalar.
pub type Rat = BigRational;
/// Polynomial in one variable over Q (most often Q[x]).
pub type UniPoly = Poly<Rat>;
/// Polynomial in t whose coefficients live in Q[x].
pub type BiPoly = Poly<UniPoly>;

impl<T: Coeff> Poly<T> {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn new(var: Var, coeffs: Vec<T>) -> Self {
        let mut p = Poly { var, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn constant(var: Var, c: T) -> Self {
        Poly::new(var, vec![c])
    }

    /// The bare variable `v`.
    pub fn variable(var: Var) -> Self {
        Poly::new(var, vec![T::zero(), T::one()])
    }

    /// `c * var^k`.
    pub fn monomial(var: Var, c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Degree, or `None` for the zero polynomial (treated as -infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `var^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Retags the variable. Only sensible when moving a polynomial into a
    /// different role (e.g. treating Q_l(x) as Q_l(y) for a resultant).
    pub fn with_var(&self, var: Var) -> Self {
        Poly {
            var,
            coeffs: self.coeffs.clone(),
        }
    }

    fn unified_var(&self, other: &Self, op: &str) -> Var {
        if self.is_constant() {
            other.var
        } else if other.is_constant() {
            self.var
        } else {
            assert_eq!(
                self.var, other.var,
                "variable mismatch in {op}: {} vs {}",
                self.var, other.var
            );
            self.var
        }
    }

    fn add_impl(&self, other: &Self) -> Self {
        let var = self.unified_var(other, "poly_add");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(var, coeffs)
    }

    fn sub_impl(&self, other: &Self) -> Self {
        let var = self.unified_var(other, "poly_sub");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        Poly::new(var, coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let var = self.unified_var(other, "poly_mul");
        if self.is_zero() || other.is_zero() {
            return Poly::new(var, vec![]);
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] =
                    std::mem::replace(&mut coeffs[i + j], T::zero()) + a.clone() * b.clone();
            }
        }
        Poly::new(var, coeffs)
    }

    fn neg_impl(&self) -> Self {
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c.clone().neg()).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::new(self.var, vec![]);
        }
        Poly::new(
            self.var,
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::constant(self.var, T::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    /// Exact Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, v: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative with respect to this polynomial's own variable.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::new(self.var, vec![]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * T::from_usize(i).expect("characteristic zero"))
            .collect();
        Poly::new(self.var, coeffs)
    }

    /// Coefficient reversal within the window `[0..=n]`: `v^n * p(1/v)`.
    ///
    /// Requires `n >= deg p`.
    pub fn reverse(&self, n: usize) -> Self {
        if let Some(d) = self.degree() {
            assert!(d <= n, "reverse: window {n} below degree {d}");
        }
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Poly::new(self.var, coeffs)
    }

    /// Substitutes `q` for the variable: `p(q)`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Poly::new(q.var, vec![]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_impl(q) + Poly::constant(q.var, c.clone());
        }
        acc
    }

    /// Maps coefficients into another ring, preserving the variable.
    pub fn map_coeffs<U: Coeff>(&self, mut f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.var, self.coeffs.iter().map(&mut f).collect())
    }

    /// Substitutes `var -> -var`: negates the odd-index coefficients.
    pub fn flip_variable_sign(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 1 {
                    c.clone().neg()
                } else {
                    c.clone()
                }
            })
            .collect();
        Poly::new(self.var, coeffs)
    }

    /// Quotient and remainder; requires an invertible leading coefficient.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "div_rem: division by zero polynomial");
        let var = self.unified_var(d, "div_rem");
        let dd = d.degree().unwrap();
        let inv_lc = d
            .lc()
            .unwrap()
            .try_inv()
            .expect("div_rem: leading coefficient is not a unit");
        let mut rem = self.clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let k = dr - dd;
            let c = rem.lc().unwrap().clone() * inv_lc.clone();
            rem = rem.sub_impl(&d.mul_impl(&Poly::monomial(var, c.clone(), k)));
            q[k] = c;
        }
        (Poly::new(var, q), rem)
    }
}

impl<T: Coeff + ExactDiv> Poly<T> {
    /// Exact quotient `self / d`; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        <Self as ExactDiv>::exact_div(self, d)
    }
}

impl<T: Coeff + ExactDiv> ExactDiv for Poly<T> {
    fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "exact_div: division by zero polynomial");
        if self.is_zero() {
            return Poly::new(self.var, vec![]);
        }
        let var = self.unified_var(d, "exact_div");
        let sd = self.degree().unwrap();
        let dd = d.degree().unwrap();
        assert!(sd >= dd, "exact_div: non-exact polynomial division");
        let mut rem = self.clone();
        let mut q = vec![T::zero(); sd - dd + 1];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let k = dr - dd;
            let c = rem.lc().unwrap().exact_div(d.lc().unwrap());
            rem = rem.sub_impl(&d.mul_impl(&Poly::monomial(var, c.clone(), k)));
            q[k] = c;
        }
        assert!(rem.is_zero(), "exact_div: non-exact polynomial division");
        Poly::new(var, q)
    }
}

impl<T: Coeff> PartialEq for Poly<T> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.is_constant() || self.var == other.var)
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly {
            var: Var::X,
            coeffs: vec![],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(Var::X, T::one())
    }
}

impl<T: Coeff> FromPrimitive for Poly<T> {
    fn from_i64(n: i64) -> Option<Self> {
        T::from_i64(n).map(|c| Poly::constant(Var::X, c))
    }

    fn from_u64(n: u64) -> Option<Self> {
        T::from_u64(n).map(|c| Poly::constant(Var::X, c))
    }
}

impl<T: Coeff> Coeff for Poly<T> {
    fn try_inv(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0]
                .try_inv()
                .map(|c| Poly::constant(self.var, c))
        } else {
            None
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl<T: Coeff> $trait for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$impl_fn(&rhs)
            }
        }
        impl<T: Coeff> $trait<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                self.$impl_fn(rhs)
            }
        }
        impl<T: Coeff> $trait for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                self.$impl_fn(rhs)
            }
        }
        impl<T: Coeff> $trait<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$impl_fn(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.neg_impl()
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.neg_impl()
    }
}

// ---------------------------------------------------------------------------
// Q[x]-specific operations.
// ---------------------------------------------------------------------------

impl UniPoly {
    /// Integer-coefficient polynomial in x, low to high.
    pub fn from_ints(coeffs: &[i64]) -> UniPoly {
        Poly::new(
            Var::X,
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    /// Positive rational `c` with `self / c` integer and primitive; 0 for 0.
    pub fn rational_content(&self) -> Rat {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.coeffs {
            num = num::Integer::gcd(&num, &c.numer().abs());
            den = num::Integer::lcm(&den, c.denom());
        }
        if num.is_zero() {
            Rat::zero()
        } else {
            Rat::new(num, den)
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Primitive part with positive leading coefficient, and the matching
    /// content: `self = content * primitive`.
    pub fn content_and_primitive(&self) -> (Rat, UniPoly) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let mut c = self.rational_content();
        if self.lc().unwrap().is_negative() {
            c = -c;
        }
        let inv = c.try_inv().unwrap();
        ((c), self.scale(&inv))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.map_coeffs(|c| num::ToPrimitive::to_f64(c).unwrap())
            .eval(&x)
    }

    pub fn eval_c64(&self, x: num::complex::Complex64) -> num::complex::Complex64 {
        self.map_coeffs(|c| num::complex::Complex64::new(num::ToPrimitive::to_f64(c).unwrap(), 0.0))
            .eval(&x)
    }
}

// ---------------------------------------------------------------------------
// Q[x][t]-specific operations.
// ---------------------------------------------------------------------------

impl BiPoly {
    /// Degree in the outer variable t; `None` for the zero polynomial.
    pub fn deg_t(&self) -> Option<usize> {
        self.degree()
    }

    /// Highest x-degree over all t-coefficients; `None` for zero.
    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    /// Exact evaluation at a rational point (x0, t0).
    pub fn eval_xt(&self, x0: &Rat, t0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t0.clone() + c.eval(x0);
        }
        acc
    }

    /// Multiplies the coefficient of `x^j t^i` by `(-1)^(j*flip_x + i*flip_t)`,
    /// i.e. substitutes `x -> -x` and/or `t -> -t`.
    pub fn substitute_signs(&self, flip_x: bool, flip_t: bool) -> BiPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let c = if flip_x {
                    c.flip_variable_sign()
                } else {
                    c.clone()
                };
                if flip_t && i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Poly::new(self.var, coeffs)
    }

    /// Writes `self = c * q` with `q` integer and primitive; the sign of `c`
    /// makes the first nonzero coefficient of `q` (t-ascending, x-ascending)
    /// positive. The zero polynomial yields `(0, 1)`.
    pub fn integer_normalize(&self) -> (BiPoly, Rat) {
        if self.is_zero() {
            return (self.clone(), Rat::one());
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for tc in &self.coeffs {
            for c in tc.coeffs() {
                num = num::Integer::gcd(&num, &c.numer().abs());
                den = num::Integer::lcm(&den, c.denom());
            }
        }
        let mut c = Rat::new(num, den);
        let first = self
            .coeffs
            .iter()
            .flat_map(|tc| tc.coeffs().iter())
            .find(|v| !v.is_zero())
            .unwrap();
        if first.is_negative() {
            c = -c;
        }
        let inv = c.try_inv().unwrap();
        (self.map_coeffs(|tc| tc.scale(&inv)), c)
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

// ---------------------------------------------------------------------------
// Rendering: expanded monomial form, `^` powers, explicit `*`.
// Q[x] polynomials print descending in x; Q[x][t] polynomials ascending in t
// (generating-function order) with parenthesized multi-term coefficients.
// ---------------------------------------------------------------------------

fn fmt_rat(c: &Rat) -> String {
    c.to_string()
}

/// One `c * x^k` term for positive `c`; `None` suppresses the factor `1`.
fn unipoly_term(c: &Rat, k: usize, var: Var) -> String {
    let mut parts = Vec::new();
    if !c.is_one() || k == 0 {
        parts.push(fmt_rat(c));
    }
    if k == 1 {
        parts.push(var.to_string());
    } else if k > 1 {
        parts.push(format!("{var}^{k}"));
    }
    parts.join("*")
}

impl UniPoly {
    fn fmt_with(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (plus, minus) = if spaced { (" + ", " - ") } else { ("+", "-") };
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { minus } else { plus });
            }
            out.push_str(&unipoly_term(&c.abs(), k, self.var));
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(true))
    }
}

impl BiPoly {
    /// Number of nonzero monomials of a t-coefficient.
    fn term_count(c: &UniPoly) -> usize {
        c.coeffs().iter().filter(|v| !v.is_zero()).count()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let tvar = self.var;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.lc().unwrap().is_negative();
            let mag = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let tpow = if i == 0 {
                String::new()
            } else if i == 1 {
                tvar.to_string()
            } else {
                format!("{tvar}^{i}")
            };
            if Self::term_count(&mag) > 1 {
                out.push('(');
                out.push_str(&mag.fmt_with(false));
                out.push(')');
                if !tpow.is_empty() {
                    out.push('*');
                    out.push_str(&tpow);
                }
            } else if mag.is_one() {
                out.push_str(if tpow.is_empty() { "1" } else { &tpow });
            } else {
                out.push_str(&mag.fmt_with(false));
                if !tpow.is_empty() {
                    out.push('*');
                    out.push_str(&tpow);
                }
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn xp(coeffs: &[i64]) -> UniPoly {
        Poly::new(Var::X, coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn x() -> UniPoly {
        Poly::variable(Var::X)
    }

    #[test]
    fn add_cancels_and_identity() {
        // (x-1) + 1 = x
        assert_eq!(xp(&[-1, 1]) + xp(&[1]), x());
        // 0 + p = p
        let p = xp(&[1, -3, 1]);
        assert_eq!(Poly::zero() + p.clone(), p);
        // (x^2-3x+1) + 3x = x^2+1
        assert_eq!(xp(&[1, -3, 1]) + xp(&[0, 3]), xp(&[1, 0, 1]));
    }

    #[test]
    fn mul_basics() {
        assert_eq!(xp(&[-1, 1]) * xp(&[-1, 1]), xp(&[1, -2, 1]));
        assert_eq!(xp(&[1, 2]) * Poly::zero(), Poly::zero());
        assert!((xp(&[1, 2]) * Poly::zero()).degree().is_none());
    }

    #[test]
    fn bipoly_mul_matches_expansion() {
        // (1+t)^2 - x*t = t^2 + (2-x)t + 1
        let t: BiPoly = Poly::variable(Var::T);
        let one = BiPoly::one();
        let xt = Poly::new(Var::T, vec![UniPoly::zero(), x()]);
        let p = (&one + &t).pow(2) - xt;
        let expected = Poly::new(Var::T, vec![xp(&[1]), xp(&[2, -1]), xp(&[1])]);
        assert_eq!(p, expected);
    }

    #[test]
    #[should_panic(expected = "variable mismatch")]
    fn mismatched_variables_panic() {
        let a = Poly::<Rat>::variable(Var::X) + Poly::constant(Var::X, rat_int(1));
        let b = Poly::<Rat>::variable(Var::T) + Poly::constant(Var::T, rat_int(1));
        let _ = a + b;
    }

    #[test]
    fn reverse_examples() {
        // reverse(1-t, 1) = t-1
        let p = Poly::new(Var::T, vec![rat_int(1), rat_int(-1)]);
        assert_eq!(
            p.reverse(1),
            Poly::new(Var::T, vec![rat_int(-1), rat_int(1)])
        );
        // palindromic bivariate: t^2+(2-x)t+1
        let q = Poly::new(Var::T, vec![xp(&[1]), xp(&[2, -1]), xp(&[1])]);
        assert_eq!(q.reverse(2), q);
        // reverse(x*t^2, 2) = x
        let r = Poly::new(Var::T, vec![UniPoly::zero(), UniPoly::zero(), x()]);
        assert_eq!(r.reverse(2), Poly::constant(Var::T, x()));
    }

    #[test]
    #[should_panic(expected = "reverse: window")]
    fn reverse_window_too_small() {
        let _ = xp(&[1, 2, 3]).reverse(1);
    }

    #[test]
    fn derivative_examples() {
        // d/dt (t^2+(2-x)t+1) = 2t+(2-x)
        let q = Poly::new(Var::T, vec![xp(&[1]), xp(&[2, -1]), xp(&[1])]);
        assert_eq!(
            q.derivative(),
            Poly::new(Var::T, vec![xp(&[2, -1]), xp(&[2])])
        );
        // d/dy ((1+y)^2 + x*y) = 2(1+y) + x, over Q[x] coefficients
        let y: BiPoly = Poly::variable(Var::Y);
        let k = (&y + &BiPoly::one()).pow(2) + Poly::new(Var::Y, vec![UniPoly::zero(), x()]);
        assert_eq!(
            k.derivative(),
            Poly::new(Var::Y, vec![xp(&[2, 1]), xp(&[2])])
        );
        // d/dx constant = 0
        assert!(xp(&[5]).derivative().is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(xp(&[1, 1]).eval(&rat_int(3)), rat_int(4));
        // H_2^(2)(1) = 1+7+1 = 9
        assert_eq!(xp(&[1, 7, 1]).eval(&rat_int(1)), rat_int(9));
        assert_eq!(UniPoly::zero().eval(&rat(7, 3)), Rat::zero());
    }

    #[test]
    fn bipoly_eval() {
        // (1+t)^2 - x*t at (x,t) = (2, 3): 16 - 6 = 10
        let t: BiPoly = Poly::variable(Var::T);
        let xt = Poly::new(Var::T, vec![UniPoly::zero(), x()]);
        let p = (&t + &BiPoly::one()).pow(2) - xt;
        assert_eq!(p.eval_xt(&rat_int(2), &rat_int(3)), rat_int(10));
    }

    #[test]
    fn substitute_signs_examples() {
        // (1-t)^2 - x*t  ->  (1+t)^2 - x*t under x->-x, t->-t
        let t: BiPoly = Poly::variable(Var::T);
        let xt = Poly::new(Var::T, vec![UniPoly::zero(), x()]);
        let g1 = (&BiPoly::one() - &t).pow(2) - &xt;
        let g2 = (&BiPoly::one() + &t).pow(2) - &xt;
        assert_eq!(g1.substitute_signs(true, true), g2);
        assert_eq!(g1.substitute_signs(false, false), g1);
        // x*t -> -x*t under flip_x
        assert_eq!(xt.substitute_signs(true, false), -&xt);
    }

    #[test]
    fn integer_normalize_examples() {
        // (1/2)x + 1/2 -> (x+1, 1/2)
        let p = Poly::constant(Var::T, Poly::new(Var::X, vec![rat(1, 2), rat(1, 2)]));
        let (q, c) = p.integer_normalize();
        assert_eq!(q, Poly::constant(Var::T, xp(&[1, 1])));
        assert_eq!(c, rat(1, 2));
        // 1 - t stays put (positive constant-term convention)
        let p = Poly::new(Var::T, vec![xp(&[1]), xp(&[-1])]);
        let (q, c) = p.integer_normalize();
        assert_eq!(q, p);
        assert_eq!(c, Rat::one());
        // -t + 0 flips sign
        let p = Poly::new(Var::T, vec![UniPoly::zero(), xp(&[-1])]);
        let (q, c) = p.integer_normalize();
        assert_eq!(q, Poly::new(Var::T, vec![UniPoly::zero(), xp(&[1])]));
        assert_eq!(c, -Rat::one());
        // zero
        let (q, c) = BiPoly::zero().integer_normalize();
        assert!(q.is_zero());
        assert_eq!(c, Rat::one());
    }

    #[test]
    fn exact_division() {
        // (y^5 - 1)/(y - 1) = 1+y+y^2+y^3+y^4
        let y = Poly::<Rat>::variable(Var::Y);
        let p = y.pow(5) - Poly::one();
        let d = y.clone() - Poly::one();
        assert_eq!(p.exact_div(&d), Poly::new(Var::Y, vec![rat_int(1); 5]));
    }

    #[test]
    #[should_panic(expected = "non-exact")]
    fn exact_division_rejects_remainder() {
        let y = Poly::<Rat>::variable(Var::Y);
        let p = y.pow(2) + Poly::one();
        let d = y.clone() - Poly::one();
        let _ = p.exact_div(&d);
    }

    #[test]
    fn display_unipoly() {
        assert_eq!(xp(&[1, 7, 1]).to_string(), "x^2 + 7*x + 1");
        assert_eq!(xp(&[1, 26, 13, 1]).to_string(), "x^3 + 13*x^2 + 26*x + 1");
        assert_eq!(xp(&[0, -3]).to_string(), "-3*x");
        assert_eq!(UniPoly::zero().to_string(), "0");
        let half = Poly::new(Var::X, vec![rat(1, 2), rat(-3, 2)]);
        assert_eq!(half.to_string(), "-3/2*x + 1/2");
    }

    #[test]
    fn display_bipoly_ascending_t() {
        // (1-t)^2 - x*t renders as 1 - (x+2)*t + t^2
        let t: BiPoly = Poly::variable(Var::T);
        let xt = Poly::new(Var::T, vec![UniPoly::zero(), x()]);
        let d = (&BiPoly::one() - &t).pow(2) - xt;
        assert_eq!(d.to_string(), "1 - (x+2)*t + t^2");
        let n = &BiPoly::one() - &t;
        assert_eq!(n.to_string(), "1 - t");
    }

    #[test]
    fn constants_unify_variables() {
        let one_x = UniPoly::one();
        let t_poly = Poly::new(Var::T, vec![rat_int(0), rat_int(1)]);
        let sum = one_x + t_poly.clone();
        assert_eq!(sum.var(), Var::T);
        assert_eq!(sum, Poly::new(Var::T, vec![rat_int(1), rat_int(1)]));
    }
}
