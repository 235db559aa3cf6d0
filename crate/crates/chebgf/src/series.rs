//! Truncated power series with coefficients in an arbitrary ring.
//!
//! A `TruncSeries<T>` stores exactly `order` coefficients `a_0..a_{order-1}`
//! and represents the class of the series modulo `v^order`. All operations
//! truncate to the shorter operand, so precision never silently exceeds what
//! the inputs justify.

use crate::polyring::{Poly, Var};
use crate::scalar::Coeff;
use std::ops::{Add, Mul, Sub};

/// Power series in `var` truncated at `var^order` (exclusive).
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<T> {
    var: Var,
    coeffs: Vec<T>,
}

impl<T: Coeff> TruncSeries<T> {
    /// Wraps explicit coefficients `a_0..a_{n-1}`; the length is the order.
    pub fn new(var: Var, coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        TruncSeries { var, coeffs }
    }

    /// Truncates a polynomial to `order` terms (padding with zeros).
    pub fn from_poly(p: &Poly<T>, order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        let coeffs = (0..order).map(|i| p.coeff(i)).collect();
        TruncSeries {
            var: p.var(),
            coeffs,
        }
    }

    pub fn constant(var: Var, c: T, order: usize) -> Self {
        Self::from_poly(&Poly::constant(var, c), order)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Number of stored coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> T {
        assert!(
            k < self.order(),
            "coefficient index beyond truncation order"
        );
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// The underlying polynomial of degree < order.
    pub fn to_poly(&self) -> Poly<T> {
        Poly::new(self.var, self.coeffs.clone())
    }

    /// Drops coefficients beyond `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            1 <= order && order <= self.order(),
            "cannot extend a truncated series (have {}, want {order})",
            self.order()
        );
        TruncSeries {
            var: self.var,
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    fn unified_var(&self, other: &Self, op: &str) -> Var {
        assert_eq!(
            self.var, other.var,
            "variable mismatch in {op}: {} vs {}",
            self.var, other.var
        );
        self.var
    }

    fn zip_with(&self, other: &Self, op: &str, f: impl Fn(&T, &T) -> T) -> Self {
        let var = self.unified_var(other, op);
        let n = self.order().min(other.order());
        TruncSeries {
            var,
            coeffs: (0..n)
                .map(|i| f(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let var = self.unified_var(other, "series_mul");
        let n = self.order().min(other.order());
        let mut coeffs = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] =
                    std::mem::replace(&mut coeffs[i + j], T::zero()) + a.clone() * b.clone();
            }
        }
        TruncSeries { var, coeffs }
    }

    /// Series quotient `self / d`; requires `d` to have an invertible
    /// constant term (a unit of the coefficient ring).
    pub fn div(&self, d: &Self) -> Self {
        let var = self.unified_var(d, "series_div");
        let n = self.order().min(d.order());
        let inv0 = d.coeffs[0]
            .try_inv()
            .expect("series division requires a unit constant term");
        let mut q: Vec<T> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for (j, qj) in q.iter().enumerate() {
                acc = acc - qj.clone() * d.coeffs[k - j].clone();
            }
            q.push(acc * inv0.clone());
        }
        TruncSeries { var, coeffs: q }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inv(&self) -> Self {
        Self::constant(self.var, T::one(), self.order()).div(self)
    }

    /// Termwise antiderivative with constant term 0. Knowing a derivative
    /// mod `v^n` pins down the antiderivative mod `v^(n+1)`, so the result
    /// has order `n + 1`: the coefficient of `v^k` is `a_{k-1} / k`.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(T::zero());
        for k in 1..=n {
            let kk = T::from_usize(k)
                .and_then(|c| c.try_inv())
                .expect("integration requires invertible integers");
            coeffs.push(self.coeffs[k - 1].clone() * kk);
        }
        TruncSeries {
            var: self.var,
            coeffs,
        }
    }

    /// Series exponential; requires a zero constant term.
    ///
    /// Uses the recurrence `n b_n = sum_{k=1..n} k a_k b_{n-k}` for
    /// `exp(sum a_k v^k) = sum b_n v^n`.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "series exp requires zero constant term"
        );
        let n = self.order();
        let mut b: Vec<T> = Vec::with_capacity(n);
        b.push(T::one());
        for m in 1..n {
            let mut acc = T::zero();
            for k in 1..=m {
                let kk = T::from_usize(k).expect("characteristic zero");
                acc = acc + kk * self.coeffs[k].clone() * b[m - k].clone();
            }
            let minv = T::from_usize(m)
                .and_then(|c| c.try_inv())
                .expect("series exp requires invertible integers");
            b.push(acc * minv);
        }
        TruncSeries {
            var: self.var,
            coeffs: b,
        }
    }
}

impl<T: Coeff> Add for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn add(self, rhs: &TruncSeries<T>) -> TruncSeries<T> {
        self.zip_with(rhs, "series_add", |a, b| a.clone() + b.clone())
    }
}

impl<T: Coeff> Sub for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn sub(self, rhs: &TruncSeries<T>) -> TruncSeries<T> {
        self.zip_with(rhs, "series_sub", |a, b| a.clone() - b.clone())
    }
}

impl<T: Coeff> Mul for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn mul(self, rhs: &TruncSeries<T>) -> TruncSeries<T> {
        self.mul_impl(rhs)
    }
}

impl<T: Coeff> Add for TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn add(self, rhs: TruncSeries<T>) -> TruncSeries<T> {
        (&self).add(&rhs)
    }
}

impl<T: Coeff> Sub for TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn sub(self, rhs: TruncSeries<T>) -> TruncSeries<T> {
        (&self).sub(&rhs)
    }
}

impl<T: Coeff> Mul for TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn mul(self, rhs: TruncSeries<T>) -> TruncSeries<T> {
        (&self).mul(&rhs)
    }
}
