//! Parsing of the textual form produced by `Display`: terms like `2q^{3/2}`,
//! `-q^{-1/2}`, `q`, `1/3`, and quotients `(num)/(den)`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{HalfLaurent, RatFunc, Rational};
use crate::error::{Error, Result};

fn err(s: &str, why: &str) -> Error {
    Error::Parse(format!("{why} in {s:?}"))
}

/// Split at top-level `+`/`-` signs (not inside `{}`), keeping the sign.
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            '+' | '-' if depth == 0 && i > start => {
                out.push(&s[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_rational(s: &str, whole: &str) -> Result<Rational> {
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts
        .next()
        .unwrap()
        .parse()
        .map_err(|_| err(whole, "bad coefficient"))?;
    let den: BigInt = match parts.next() {
        Some(d) => d.parse().map_err(|_| err(whole, "bad coefficient"))?,
        None => BigInt::one(),
    };
    if den == BigInt::from(0) {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Exponent text after `^`, in units of the variable; returns it doubled.
fn parse_doubled_exponent(s: &str, whole: &str) -> Result<i32> {
    let inner = s
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(s);
    let bad = || err(whole, "bad exponent");
    match inner.split_once('/') {
        Some((a, "2")) => a.parse::<i32>().map_err(|_| bad()),
        Some(_) => Err(bad()),
        None => inner.parse::<i32>().map(|e| 2 * e).map_err(|_| bad()),
    }
}

fn parse_term(term: &str, whole: &str) -> Result<HalfLaurent> {
    let (neg, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err(err(whole, "empty term"));
    }
    let var_at = body.find(['q', 'v']);
    let (coeff_text, var_text) = match var_at {
        Some(i) => (&body[..i], Some(&body[i..])),
        None => (body, None),
    };
    let coeff_text = coeff_text.trim_end_matches(['*', '·']);
    let mut coeff = if coeff_text.is_empty() {
        Rational::one()
    } else {
        parse_rational(coeff_text, whole)?
    };
    if neg {
        coeff = -coeff;
    }
    let v_exp = match var_text {
        None => 0,
        Some(t) => {
            let (var, rest) = t.split_at(1);
            let e = match rest.strip_prefix('^') {
                Some(x) => parse_doubled_exponent(x, whole)?,
                None if rest.is_empty() => 2,
                None => return Err(err(whole, "trailing characters")),
            };
            if var == "v" {
                if e % 2 != 0 {
                    return Err(err(whole, "half-integer power of v"));
                }
                e / 2
            } else {
                e
            }
        }
    };
    Ok(HalfLaurent::monomial(coeff, v_exp))
}

impl FromStr for HalfLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err(s, "empty input"));
        }
        let mut out = HalfLaurent::zero();
        for t in split_terms(&compact) {
            out += &parse_term(t, s)?;
        }
        Ok(out)
    }
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some((num, den)) = compact.split_once(")/(") {
            let num: HalfLaurent = strip_parens(&format!("{num})")).parse()?;
            let den: HalfLaurent = strip_parens(&format!("({den}")).parse()?;
            return RatFunc::new(num, den);
        }
        if let Some((num, den)) = compact.split_once("/(") {
            let num: HalfLaurent = strip_parens(num).parse()?;
            let den: HalfLaurent = strip_parens(&format!("({den}")).parse()?;
            return RatFunc::new(num, den);
        }
        Ok(RatFunc::from(
            strip_parens(&compact).parse::<HalfLaurent>()?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        for text in ["1+q", "-q^{-1/2}+q^{1/2}", "-2q^{2}", "1/3-5/2q^{3/2}", "0"] {
            let p: HalfLaurent = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
    }

    #[test]
    fn accepts_loose_forms() {
        let p: HalfLaurent = "3*q^2 + v - 1".parse().unwrap();
        let expected = HalfLaurent::from_q_coeffs(&[-1, 0, 3]) + HalfLaurent::v_pow(1);
        assert_eq!(p, expected);
    }

    #[test]
    fn parses_quotients() {
        let f: RatFunc = "(q^{2}-1)/(q-1)".parse().unwrap();
        assert_eq!(f, RatFunc::from(HalfLaurent::from_q_coeffs(&[1, 1])));
        let g: RatFunc = "1/(q-1)".parse().unwrap();
        assert_eq!(g.to_string(), "1/(-1+q)");
    }

    #[test]
    fn rejects_garbage() {
        assert!("q^{1/3}".parse::<HalfLaurent>().is_err());
        assert!("x".parse::<HalfLaurent>().is_err());
        assert!("(1)/(0)".parse::<RatFunc>().is_err());
    }
}
