//! Parser for Hecke algebra expressions given on the command line.
//!
//! Terms are separated by `+`, factors by `*`; a term may start with `-`.
//! Factors:
//!
//! * `3`, `-1/2`: a rational scalar
//! * `q`, `q^-2`: a power of `q`
//! * `theta:1,0,-1`: `theta_x` for a weight of rank `n`
//! * `T:2,1,3`: `T_w` for `w` in one-line notation
//! * `s:1,2`: `T_w` for `w = s_1 s_2` given as a word of simple reflections

use heckebench::combinat::{Weight, WeylElement};
use heckebench::hecke::{qpoly, HeckeAlgebra, HeckeElement};
use heckebench::{parse_rational, Error, Poly, Result};

fn list<T: std::str::FromStr>(body: &str, what: &str) -> Result<Vec<T>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| Error::Input(format!("bad {what} entry {p:?}"))))
        .collect()
}

fn factor(h: &HeckeAlgebra, text: &str) -> Result<HeckeElement> {
    let n = h.rank();
    let t = text.trim();
    if let Some(body) = t.strip_prefix("theta:") {
        let x: Vec<i32> = list(body, "weight")?;
        return h.theta(&Weight(x));
    }
    if let Some(body) = t.strip_prefix("T:") {
        let one_line: Vec<usize> = list(body, "permutation")?;
        if one_line.len() != n {
            return Err(Error::Input(format!("T:{body} is not a permutation of 1..{n}")));
        }
        return h.tee(&WeylElement::from_one_line(&one_line)?);
    }
    if let Some(body) = t.strip_prefix("s:") {
        let word: Vec<usize> = list(body, "word")?;
        return h.tee(&WeylElement::from_word(n, &word)?);
    }
    if t == "q" {
        return Ok(h.qvar());
    }
    if let Some(e) = t.strip_prefix("q^") {
        let e: i32 = e.trim().parse().map_err(|_| Error::Input(format!("bad exponent in {t:?}")))?;
        return Ok(h.unit().scale(&qpoly(&[(e, 1)])));
    }
    let c = parse_rational(t).map_err(|_| Error::Input(format!("unrecognized factor {t:?}")))?;
    h.from_theta_poly(&Poly::constant(n, c))
}

fn term(h: &HeckeAlgebra, text: &str) -> Result<HeckeElement> {
    let t = text.trim();
    let (negate, body) = match t.strip_prefix('-') {
        Some(rest) if !rest.trim_start().starts_with(|c: char| c.is_ascii_digit()) => (true, rest),
        _ => (false, t),
    };
    if body.trim().is_empty() {
        return Err(Error::Input(format!("empty term in {text:?}")));
    }
    let mut acc = h.unit();
    for f in body.split('*') {
        if f.trim().is_empty() {
            return Err(Error::Input(format!("empty factor in {text:?}")));
        }
        acc = h.multiply(&acc, &factor(h, f)?)?;
    }
    Ok(if negate { HeckeElement::zero(h.rank()).sub(&acc) } else { acc })
}

/// Parses and evaluates `text` in `h`.
pub fn parse(h: &HeckeAlgebra, text: &str) -> Result<HeckeElement> {
    if text.trim().is_empty() {
        return Err(Error::Input("empty expression".into()));
    }
    let mut sum = HeckeElement::zero(h.rank());
    for t in text.split('+') {
        sum.add_assign(&term(h, t)?);
    }
    Ok(sum)
}
