use std::cmp::Ordering;
use std::fmt;

use super::{ExactError, Rational};

/// An element `a + b·√m` of the real quadratic field Q(√m).
///
/// `m` is a square-free integer greater than one. Elements with different
/// `m` never mix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElement {
    a: Rational,
    b: Rational,
    m: u64,
}

pub fn is_square_free(m: u64) -> bool {
    if m < 2 {
        return m == 1;
    }
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Splits `n` as `s²·r` with `r` square-free; returns `(s, r)`.
pub fn square_free_split(mut n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        while n.is_multiple_of(p * p) {
            n /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, n)
}

impl QuadElement {
    pub fn new(a: Rational, b: Rational, m: u64) -> Result<Self, ExactError> {
        if m < 2 || !is_square_free(m) {
            return Err(ExactError::BadDiscriminant(m));
        }
        Ok(QuadElement { a, b, m })
    }

    /// `√m`.
    pub fn sqrt(m: u64) -> Result<Self, ExactError> {
        QuadElement::new(Rational::zero(), Rational::one(), m)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), ExactError> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch(self.m, other.m))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(QuadElement {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            m: self.m,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        let m = Rational::from(self.m as i64);
        Ok(QuadElement {
            a: &self.a * &other.a + &(&self.b * &other.b) * &m,
            b: &self.a * &other.b + &self.b * &other.a,
            m: self.m,
        })
    }

    pub fn neg(&self) -> Self {
        QuadElement {
            a: -&self.a,
            b: -&self.b,
            m: self.m,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadElement {
            a: &self.a * r,
            b: &self.b * r,
            m: self.m,
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        QuadElement {
            a: &self.a + r,
            b: self.b.clone(),
            m: self.m,
        }
    }

    /// Field norm `a² − m·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &(&self.b * &self.b) * &Rational::from(self.m as i64)
    }

    pub fn conjugate(&self) -> Self {
        QuadElement {
            a: self.a.clone(),
            b: -&self.b,
            m: self.m,
        }
    }

    pub fn recip(&self) -> Option<Self> {
        let n = self.norm();
        let inv = n.recip()?;
        Some(self.conjugate().scale(&inv))
    }

    /// Exact sign of `a + b√m`.
    pub fn sign(&self) -> i8 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the part with the larger square wins.
        let a2 = &self.a * &self.a;
        let mb2 = &(&self.b * &self.b) * &Rational::from(self.m as i64);
        match a2.cmp(&mb2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Rough floating value, for diagnostics only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.inner().to_f64().unwrap_or(f64::NAN)
            + self.b.inner().to_f64().unwrap_or(f64::NAN) * (self.m as f64).sqrt()
    }
}

pub(crate) fn write_surd(f: &mut fmt::Formatter<'_>, b: &Rational, m: u64) -> fmt::Result {
    if b.is_one() {
        write!(f, "√{m}")
    } else if (-b).is_one() {
        write!(f, "-√{m}")
    } else {
        write!(f, "{b}√{m}")
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write_surd(f, &self.b, self.m);
        }
        write!(f, "{}", self.a)?;
        if self.b.signum() > 0 {
            write!(f, "+")?;
        }
        write_surd(f, &self.b, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: Rational, b: Rational, m: u64) -> QuadElement {
        QuadElement::new(a, b, m).unwrap()
    }

    #[test]
    fn conjugate_product() {
        let x = q(1.into(), 1.into(), 2);
        let y = q(1.into(), (-1).into(), 2);
        let p = x.try_mul(&y).unwrap();
        assert_eq!(p.a(), &Rational::from(-1));
        assert!(p.b().is_zero());
    }

    #[test]
    fn sign_cases() {
        assert_eq!(q(0.into(), 0.into(), 2).sign(), 0);
        assert_eq!(q(1.into(), 1.into(), 2).sign(), 1);
        assert_eq!(q(Rational::new(3, 2), (-1).into(), 2).sign(), 1);
        assert_eq!(q((-1).into(), 1.into(), 2).sign(), 1);
        assert_eq!(q(Rational::new(7, 5), (-1).into(), 2).sign(), -1);
    }

    #[test]
    fn mismatched_fields() {
        let x = QuadElement::sqrt(2).unwrap();
        let y = QuadElement::sqrt(3).unwrap();
        assert_eq!(x.try_add(&y), Err(ExactError::FieldMismatch(2, 3)));
    }

    #[test]
    fn rejects_non_square_free() {
        assert!(QuadElement::sqrt(8).is_err());
        assert!(QuadElement::sqrt(1).is_err());
        assert_eq!(square_free_split(72), (6, 2));
    }

    #[test]
    fn renders() {
        assert_eq!(q(1.into(), 1.into(), 2).to_string(), "1+√2");
        assert_eq!(
            q(Rational::new(1, 2), Rational::new(-3, 4), 5).to_string(),
            "1/2-3/4√5"
        );
        assert_eq!(q(0.into(), (-1).into(), 3).to_string(), "-√3");
    }
}
