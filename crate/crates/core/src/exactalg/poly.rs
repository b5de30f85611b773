//! Univariate polynomials over Q, dense representation.

use super::Rat;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in one variable, coefficients lowest degree first.
/// The zero polynomial is the empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyUni {
    coeffs: Vec<Rat>,
}

impl PolyUni {
    pub fn zero() -> Self {
        PolyUni { coeffs: vec![] }
    }

    pub fn one() -> Self {
        PolyUni::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        PolyUni::from_coeffs(vec![c])
    }

    /// x^k with coefficient c.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return PolyUni::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        PolyUni { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyUni { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return PolyUni::zero();
        }
        PolyUni {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return PolyUni::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rat::one() / lc))
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    /// Panics if div is zero.
    pub fn div_rem(&self, div: &PolyUni) -> (PolyUni, PolyUni) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let lc = div.leading_coeff();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading_coeff() / lc.clone();
            let shift = rd - dd;
            quot[shift] = f.clone();
            // rem -= f * x^shift * div
            let mut coeffs = rem.coeffs;
            for (i, c) in div.coeffs.iter().enumerate() {
                let t = c * &f;
                coeffs[i + shift] = coeffs[i + shift].clone() - t;
            }
            rem = PolyUni::from_coeffs(coeffs);
        }
        (PolyUni::from_coeffs(quot), rem)
    }

    /// Exact division; None if the remainder is nonzero.
    pub fn div_exact(&self, div: &PolyUni) -> Option<PolyUni> {
        let (q, r) = self.div_rem(div);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn divides(&self, other: &PolyUni) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &PolyUni) -> PolyUni {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, n: usize) -> PolyUni {
        let mut acc = PolyUni::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &PolyUni {
    type Output = PolyUni;
    fn add(self, rhs: &PolyUni) -> PolyUni {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyUni::from_coeffs(coeffs)
    }
}

impl Sub for &PolyUni {
    type Output = PolyUni;
    fn sub(self, rhs: &PolyUni) -> PolyUni {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        PolyUni::from_coeffs(coeffs)
    }
}

impl Mul for &PolyUni {
    type Output = PolyUni;
    fn mul(self, rhs: &PolyUni) -> PolyUni {
        if self.is_zero() || rhs.is_zero() {
            return PolyUni::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a * b;
            }
        }
        PolyUni::from_coeffs(coeffs)
    }
}

impl Neg for &PolyUni {
    type Output = PolyUni;
    fn neg(self) -> PolyUni {
        PolyUni {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for PolyUni {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", super::fmt_rat(c))?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{}*", super::fmt_rat(c))?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn x() -> PolyUni {
        PolyUni::monomial(Rat::one(), 1)
    }

    #[test]
    fn division_with_remainder() {
        // x^3 + 1 = (x + 1)(x^2 - x + 1) + 0
        let p = &x().pow(3) + &PolyUni::one();
        let d = &x() + &PolyUni::one();
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(&q * &d, p);
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(2x^2, 3x) = x
        let a = PolyUni::monomial(rat_int(2), 2);
        let b = PolyUni::monomial(rat_int(3), 1);
        assert_eq!(a.gcd(&b), x());
    }

    #[test]
    fn display_uses_rational_coefficients() {
        let p = &PolyUni::monomial(rat(1, 3), 2) + &PolyUni::constant(rat_int(-1));
        assert_eq!(p.to_string(), "1/3*x^2 + -1");
    }
}
