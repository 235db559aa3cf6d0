//! Newton's identities: power sums of the roots of a polynomial, and the
//! inverse reconstruction of a monic polynomial from its power sums.
//!
//! Both directions work over any coefficient ring in which the relevant
//! divisions are possible; in particular they are used here over Q and over
//! Q[x] (for polynomials in t whose roots are algebraic functions of x).

use crate::polyring::Poly;
use crate::scalar::Coeff;
use crate::series::TruncSeries;

/// First `n` power sums `S_0, ..., S_{n-1}` of the roots of `p` (with
/// multiplicity), as a truncated series in the same variable.
///
/// Uses the logarithmic-derivative identity: with `P(v) = v^d p(1/v)` the
/// reversal of `p`,
///
/// ```text
/// sum_{l >= 0} S_l v^l  =  rev(p', d-1) / rev(p, d)   (mod v^n)
/// ```
///
/// The leading coefficient of `p` must be a unit. `S_0` is the root count,
/// i.e. `deg p`.
pub fn power_sums<T: Coeff>(p: &Poly<T>, n: usize) -> TruncSeries<T> {
    assert!(n >= 1, "need at least one power sum");
    let d = p.degree().expect("power sums of the zero polynomial");
    if d == 0 {
        // No roots: every sum is empty.
        return TruncSeries::constant(p.var(), T::zero(), n);
    }
    let num = TruncSeries::from_poly(&p.derivative().reverse(d - 1), n);
    let den = TruncSeries::from_poly(&p.reverse(d), n);
    num.div(&den)
}

/// Monic polynomial of degree `n` whose roots have the given power sums
/// `S_0..S_n` (so `sums` must carry at least `n + 1` coefficients, and
/// `S_0` must equal `n`).
///
/// Inverts the logarithmic derivative: the reversal of the answer is
/// `exp( integral of (S_0 - S(v)) / v )`, truncated past `v^n`.
pub fn from_power_sums<T: Coeff>(sums: &TruncSeries<T>, n: usize) -> Poly<T> {
    assert!(
        sums.order() > n,
        "need {} power sums to rebuild degree {n}, have {}",
        n + 1,
        sums.order()
    );
    assert!(
        sums.coeff(0) == T::from_usize(n).expect("characteristic zero"),
        "S_0 must equal the root count {n}"
    );
    let var = sums.var();
    if n == 0 {
        return Poly::constant(var, T::one());
    }
    // (S_0 - S(v)) / v = -(S_1 + S_2 v + ...), to order n.
    let shifted: Vec<T> = (1..=n).map(|k| T::zero() - sums.coeff(k)).collect();
    let log_rev = TruncSeries::new(var, shifted).integrate();
    let rev = log_rev.exp().to_poly();
    rev.reverse(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{BiPoly, Rat, UniPoly, Var};
    use crate::scalar::rat_int;
    use num::{One, Zero};

    fn tp(coeffs: &[i64]) -> Poly<Rat> {
        Poly::new(Var::T, coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn power_sums_of_linear() {
        // roots of t - 3: sums 1, 3, 9, 27
        let s = power_sums(&tp(&[-3, 1]), 4);
        assert_eq!(
            s.coeffs(),
            &[rat_int(1), rat_int(3), rat_int(9), rat_int(27)]
        );
    }

    #[test]
    fn power_sums_of_quadratic() {
        // roots 1 and 2: sums 2, 3, 5, 9, 17, 33
        let s = power_sums(&tp(&[2, -3, 1]), 6);
        let expected = [2, 3, 5, 9, 17, 33].map(rat_int);
        assert_eq!(s.coeffs(), &expected);
    }

    #[test]
    fn power_sums_of_constant() {
        let s = power_sums(&tp(&[5]), 3);
        assert!(s.coeffs().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn bivariate_power_sums_match_recurrence() {
        // For q = t^2 + (2-x)t + 1 the sums satisfy the three-term recurrence
        // S_{l+2} = (x-2) S_{l+1} - S_l with S_0 = 2, S_1 = x - 2, because
        // each root r satisfies r^2 = (x-2)r - 1. This recurrence is an
        // independent derivation to check the series route against.
        let x = UniPoly::variable(Var::X);
        let two = UniPoly::one() + UniPoly::one();
        let q: BiPoly = Poly::new(Var::T, vec![UniPoly::one(), &two - &x, UniPoly::one()]);
        let n = 12;
        let s = power_sums(&q, n);

        let mut expect = vec![two.clone(), &x - &two];
        for l in 2..n {
            let next = (&x - &two) * &expect[l - 1] - expect[l - 2].clone();
            expect.push(next);
        }
        for (l, e) in expect.iter().enumerate() {
            assert_eq!(&s.coeff(l), e, "power sum index {l}");
        }
    }

    #[test]
    fn reconstruction_roundtrip() {
        // monic quartic with integer roots
        let p = tp(&[-1, 1]) * tp(&[-2, 1]) * tp(&[-2, 1]) * tp(&[3, 1]);
        let s = power_sums(&p, 5);
        assert_eq!(from_power_sums(&s, 4), p);
    }

    #[test]
    fn reconstruction_over_polynomial_coefficients() {
        let x = UniPoly::variable(Var::X);
        let two = UniPoly::one() + UniPoly::one();
        let q: BiPoly = Poly::new(Var::T, vec![UniPoly::one(), &two - &x, UniPoly::one()]);
        let s = power_sums(&q, 3);
        assert_eq!(from_power_sums(&s, 2), q);
    }

    #[test]
    #[should_panic(expected = "S_0 must equal the root count")]
    fn root_count_mismatch_panics() {
        let s = power_sums(&tp(&[2, -3, 1]), 6);
        let _ = from_power_sums(&s, 3);
    }

    #[test]
    fn degree_zero_reconstruction() {
        let s = TruncSeries::new(Var::T, vec![Rat::zero(); 2]);
        assert_eq!(from_power_sums(&s, 0), Poly::constant(Var::T, rat_int(1)));
    }
}
