//! Exact rational scalars.
//!
//! Every coefficient in this crate is a `Rat` (arbitrary-precision rational,
//! always in lowest terms with positive denominator). There is no floating
//! point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse an exact rational from `"p"` or `"p/q"` with arbitrary-precision parts.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| Error::BadRational(s.to_string()))?;
    let q: BigInt = den
        .parse()
        .map_err(|_| Error::BadRational(s.to_string()))?;
    if q.is_zero() {
        return Err(Error::BadRational(s.to_string()));
    }
    Ok(Rat::new(p, q))
}

/// Render as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True for a nonnegative integer value.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/2", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn exactness() {
        let a = rat(1, 3);
        let b = rat(1, 6);
        assert_eq!(&a + &b, rat(1, 2));
        assert_eq!((&a + &b) - &b, a);
    }
}
