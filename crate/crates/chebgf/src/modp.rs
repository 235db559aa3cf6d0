//! Cheap coprimality certificates via modular specialization.
//!
//! To canonicalize a rational function N/D in t over Q[x] we must know
//! whether N and D share a factor of positive t-degree. Exact bivariate GCDs
//! are expensive at the sizes the pipeline produces, but *coprimality* has a
//! one-sided fast certificate: pick a prime p and an integer point x0; if
//! the specializations of N and D into F_p[t]
//!
//! - keep their t-degrees (leading t-coefficients survive), and
//! - are coprime in F_p[t],
//!
//! then any common factor G of positive t-degree in Q[x][t] is impossible —
//! its image would divide both specializations with its own degree intact
//! (no degree dropped anywhere in N = G*H), forcing a nontrivial GCD mod p.
//! A failed attempt proves nothing (the point may be unlucky); callers fall
//! back to the exact GCD in that case.

use crate::polyring::{BiPoly, Rat, UniPoly};
use num::bigint::BigInt;
use num::{Integer, ToPrimitive};

/// Two large primes with fast u64 arithmetic: 2^61 - 1 (Mersenne) and
/// 2^64 - 2^32 + 1.
const PRIMES: [u64; 2] = [(1 << 61) - 1, 18_446_744_069_414_584_321];

/// Small evaluation points for x; variety guards against unlucky choices.
const SAMPLE_POINTS: [u64; 5] = [2, 3, 5, 7, 11];

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128) + (b as u128);
    (s % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = v.mod_floor(&BigInt::from(p));
    m.to_u64().expect("nonnegative residue below a u64 prime")
}

/// Image of a rational number in F_p, or `None` if its denominator dies.
fn rat_mod(c: &Rat, p: u64) -> Option<u64> {
    let den = inv_mod(bigint_mod(c.denom(), p), p)?;
    Some(mul_mod(bigint_mod(c.numer(), p), den, p))
}

/// Horner evaluation of a Q[x] polynomial at x0 in F_p.
fn unipoly_mod(c: &UniPoly, x0: u64, p: u64) -> Option<u64> {
    let mut acc = 0u64;
    for coeff in c.coeffs().iter().rev() {
        acc = add_mod(mul_mod(acc, x0, p), rat_mod(coeff, p)?, p);
    }
    Some(acc)
}

/// Specializes a t-polynomial over Q[x] to F_p[t] at x = x0. Returns the
/// dense coefficient vector without trailing-zero trimming, so the caller
/// can see whether the leading coefficient survived.
fn bipoly_mod(b: &BiPoly, x0: u64, p: u64) -> Option<Vec<u64>> {
    b.coeffs().iter().map(|c| unipoly_mod(c, x0, p)).collect()
}

/// Degree of gcd in F_p[t]; inputs are dense coefficient vectors.
fn gcd_degree_mod(a: &[u64], b: &[u64], p: u64) -> usize {
    let trim = |v: &[u64]| -> Vec<u64> {
        let mut v = v.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let mut a = trim(a);
    let mut b = trim(b);
    while !b.is_empty() {
        // a mod b in place
        let inv = inv_mod(*b.last().unwrap(), p).expect("leading coefficient is a unit");
        while a.len() >= b.len() {
            let k = a.len() - b.len();
            let q = mul_mod(*a.last().unwrap(), inv, p);
            for (i, bc) in b.iter().enumerate() {
                let sub = mul_mod(q, *bc, p);
                a[k + i] = add_mod(a[k + i], p - sub % p, p);
            }
            a = trim(&a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True only when some (prime, point) pair *proves* that `n` and `d` share
/// no factor of positive t-degree. False means "unknown".
pub(crate) fn certified_coprime_in_t(n: &BiPoly, d: &BiPoly) -> bool {
    let (Some(dn), Some(dd)) = (n.deg_t(), d.deg_t()) else {
        return false;
    };
    for &p in &PRIMES {
        for &x0 in &SAMPLE_POINTS {
            let (Some(ni), Some(di)) = (bipoly_mod(n, x0, p), bipoly_mod(d, x0, p)) else {
                continue;
            };
            // Degrees must survive specialization for the certificate to apply.
            if ni[dn] == 0 || di[dd] == 0 {
                continue;
            }
            if gcd_degree_mod(&ni, &di, p) == 0 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Poly, Var};
    use crate::scalar::rat_int;

    fn xp(coeffs: &[i64]) -> UniPoly {
        Poly::new(Var::X, coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn bp(tcoeffs: Vec<UniPoly>) -> BiPoly {
        Poly::new(Var::T, tcoeffs)
    }

    #[test]
    fn modular_inverse_round_trips() {
        for &p in &PRIMES {
            for a in [1u64, 2, 17, p - 1] {
                let inv = inv_mod(a, p).unwrap();
                assert_eq!(mul_mod(a, inv, p), 1);
            }
            assert!(inv_mod(0, p).is_none());
        }
    }

    #[test]
    fn gcd_degree_detects_common_factor() {
        let p = PRIMES[0];
        // (t+1)(t+2) vs (t+1)(t+3) share t+1
        let a = [2u64, 3, 1];
        let b = [3u64, 4, 1];
        assert_eq!(gcd_degree_mod(&a, &b, p), 1);
        // coprime pair
        let c = [1u64, 1];
        let d = [2u64, 1];
        assert_eq!(gcd_degree_mod(&c, &d, p), 0);
    }

    #[test]
    fn certificate_accepts_coprime_pair() {
        // 1 - t and 1 - (x+2)t + t^2 are coprime in t.
        let n = bp(vec![xp(&[1]), xp(&[-1])]);
        let d = bp(vec![xp(&[1]), xp(&[-2, -1]), xp(&[1])]);
        assert!(certified_coprime_in_t(&n, &d));
    }

    #[test]
    fn certificate_rejects_shared_factor() {
        // multiply both by (1 - x t): a genuine common factor must never
        // be certified coprime.
        let common = bp(vec![xp(&[1]), xp(&[0, -1])]);
        let n = bp(vec![xp(&[1]), xp(&[-1])]) * &common;
        let d = bp(vec![xp(&[1]), xp(&[-2, -1]), xp(&[1])]) * &common;
        assert!(!certified_coprime_in_t(&n, &d));
    }
}
