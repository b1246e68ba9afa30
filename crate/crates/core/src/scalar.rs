use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::{Error, Rational, Result};

/// Coefficient field for the polynomial and linear-algebra kernels.
///
/// Any signed `num-traits` number qualifies. Exactness of every check in this
/// crate relies on the scalar being an exact field such as [`Rational`];
/// floating point types satisfy the bound but equality tests become
/// meaningless for them.
pub trait Scalar: Signed + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {}

impl<T> Scalar for T where T: Signed + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {}

/// Parses `"p"` or `"p/q"` (no decimal point, no exponent).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Input(format!("not a rational of the form p or p/q: {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(Error::Input(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(p, q))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise, always reduced.
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

/// Integer power for any scalar, negative exponents allowed.
pub fn pow<K: Scalar>(base: &K, exp: i64) -> K {
    let mut acc = K::one();
    for _ in 0..exp.unsigned_abs() {
        acc = acc * base.clone();
    }
    if exp < 0 {
        K::one() / acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3.into()));
        assert_eq!(parse_rational("-6/4").unwrap(), Rational::new((-3).into(), 2.into()));
        assert_eq!(fmt_rational(&parse_rational("10/4").unwrap()), "5/2");
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/-2").is_err());
    }

    #[test]
    fn negative_powers() {
        let two = Rational::from_integer(2.into());
        assert_eq!(pow(&two, -3), Rational::new(1.into(), 8.into()));
        assert_eq!(pow(&two, 0), Rational::from_integer(1.into()));
    }
}
