//! Support library for the `chebgf` binary: the JSON wire format and the
//! plain-text renderers, kept separate from `main` so integration tests can
//! exercise the exact serialization the binary uses.

use chebgf::{BiPoly, Poly, Rat, RatFun, UniPoly, Var};
use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// Wire form of one rational function `F_s = numerator / denominator`.
///
/// Coefficients are decimal strings: they outgrow 64-bit integers well
/// before the level cap, and strings keep the JSON readable and lossless.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRatFun {
    pub s: usize,
    pub numerator: JsonPoly,
    pub denominator: JsonPoly,
}

/// Wire form of a polynomial in t over Z[x]: `t_coeffs[k][j]` is the integer
/// coefficient of `x^j t^k` as a decimal string. The zero polynomial in x is
/// rendered as `["0"]` so every row is non-empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonPoly {
    pub t_coeffs: Vec<Vec<String>>,
}

fn unipoly_to_strings(p: &UniPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs()
        .iter()
        .map(|c| {
            assert!(c.denom().is_one(), "non-integer coefficient {c}");
            c.numer().to_string()
        })
        .collect()
}

fn unipoly_from_strings(row: &[String]) -> Result<UniPoly, String> {
    let coeffs = row
        .iter()
        .map(|s| {
            BigInt::from_str(s)
                .map(Rat::from_integer)
                .map_err(|e| format!("bad integer {s:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(Var::X, coeffs))
}

impl JsonPoly {
    pub fn from_bipoly(p: &BiPoly) -> JsonPoly {
        let rows = match p.deg_t() {
            None => vec![vec!["0".to_string()]],
            Some(d) => (0..=d).map(|k| unipoly_to_strings(&p.coeff(k))).collect(),
        };
        JsonPoly { t_coeffs: rows }
    }

    pub fn to_bipoly(&self) -> Result<BiPoly, String> {
        let coeffs = self
            .t_coeffs
            .iter()
            .map(|row| unipoly_from_strings(row))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(Var::T, coeffs))
    }
}

impl JsonRatFun {
    pub fn from_ratfun(s: usize, f: &RatFun) -> JsonRatFun {
        JsonRatFun {
            s,
            numerator: JsonPoly::from_bipoly(f.num()),
            denominator: JsonPoly::from_bipoly(f.den()),
        }
    }
}

/// The two-line plain-text rendering of a rational function.
pub fn render_pretty(f: &RatFun) -> String {
    format!("numerator: {}\ndenominator: {}", f.num(), f.den())
}

/// The JSON rendering: pretty-printed, field order fixed by the structs.
pub fn render_json(s: usize, f: &RatFun) -> String {
    serde_json::to_string_pretty(&JsonRatFun::from_ratfun(s, f)).expect("serialization succeeds")
}

#[cfg(test)]
mod tests {
    use super::*;
    use chebgf::generating_function;

    #[test]
    fn json_round_trip_level_one() {
        let f = generating_function(1);
        let wire = render_json(1, &f);
        let parsed: JsonRatFun = serde_json::from_str(&wire).unwrap();
        assert_eq!(parsed.s, 1);
        assert_eq!(parsed.numerator.to_bipoly().unwrap(), *f.num());
        assert_eq!(parsed.denominator.to_bipoly().unwrap(), *f.den());
    }

    #[test]
    fn json_rows_cover_every_t_power() {
        let f = generating_function(2);
        let j = JsonPoly::from_bipoly(f.den());
        assert_eq!(j.t_coeffs.len(), 5); // t^0..t^4
                                         // interior zero coefficients still have a row
        assert!(j.t_coeffs.iter().all(|row| !row.is_empty()));
    }

    #[test]
    fn bad_integer_is_rejected() {
        let j = JsonPoly {
            t_coeffs: vec![vec!["1".into(), "x".into()]],
        };
        assert!(j.to_bipoly().is_err());
    }
}
