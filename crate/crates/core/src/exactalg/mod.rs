//! Exact arithmetic and linear algebra over the rationals and over the
//! univariate polynomial ring Q[x].

mod matq;
mod poly;
mod snf;

pub use matq::{MatrixQ, RrefResult};
pub use poly::PolyUni;
pub use snf::{smith_normal_form, MatrixPolyUni, SnfResult};

use num::BigInt;

/// Arbitrary-precision rational. The backing type keeps the denominator
/// positive and the fraction fully reduced.
pub type Rat = num::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics on q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical display: "p" for integers, "p/q" otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    use num::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "p" or "p/q" with optional sign.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_formatting_round_trips() {
        for (p, q) in [(1, 2), (-3, 7), (4, 1), (0, 5)] {
            let r = rat(p, q);
            assert_eq!(parse_rat(&fmt_rat(&r)).unwrap(), r);
        }
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse_rat("1/0").is_none());
    }
}
