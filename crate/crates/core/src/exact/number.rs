use std::fmt;

use super::{ExactError, QuadElement, Rational};

/// A field element: rational, or a genuinely irrational quadratic number.
///
/// Normalized so that a quadratic value with zero surd part is always stored
/// as `Rat`; structural equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Number {
    Rat(Rational),
    Quad(QuadElement),
}

impl Number {
    pub fn zero() -> Self {
        Number::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Number::Rat(Rational::one())
    }

    pub fn from_quad(q: QuadElement) -> Self {
        if q.b().is_zero() {
            Number::Rat(q.a().clone())
        } else {
            Number::Quad(q)
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Number::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Number::Rat(r) if r.is_one())
    }

    /// The square-free `m` of the quadratic field this value needs, if any.
    pub fn field_tag(&self) -> Option<u64> {
        match self {
            Number::Rat(_) => None,
            Number::Quad(q) => Some(q.m()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Number::Rat(r) => Some(r),
            Number::Quad(_) => None,
        }
    }

    pub fn sign(&self) -> i8 {
        match self {
            Number::Rat(r) => r.signum(),
            Number::Quad(q) => q.sign(),
        }
    }

    pub fn try_add(&self, other: &Number) -> Result<Number, ExactError> {
        Ok(match (self, other) {
            (Number::Rat(x), Number::Rat(y)) => Number::Rat(x + y),
            (Number::Rat(x), Number::Quad(q)) | (Number::Quad(q), Number::Rat(x)) => {
                Number::from_quad(q.add_rational(x))
            }
            (Number::Quad(x), Number::Quad(y)) => Number::from_quad(x.try_add(y)?),
        })
    }

    pub fn try_sub(&self, other: &Number) -> Result<Number, ExactError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Number) -> Result<Number, ExactError> {
        Ok(match (self, other) {
            (Number::Rat(x), Number::Rat(y)) => Number::Rat(x * y),
            (Number::Rat(x), Number::Quad(q)) | (Number::Quad(q), Number::Rat(x)) => {
                Number::from_quad(q.scale(x))
            }
            (Number::Quad(x), Number::Quad(y)) => Number::from_quad(x.try_mul(y)?),
        })
    }

    pub fn neg(&self) -> Number {
        match self {
            Number::Rat(r) => Number::Rat(-r),
            Number::Quad(q) => Number::Quad(q.neg()),
        }
    }

    pub fn recip(&self) -> Result<Number, ExactError> {
        match self {
            Number::Rat(r) => r.recip().map(Number::Rat).ok_or(ExactError::DivisionByZero),
            Number::Quad(q) => q
                .recip()
                .map(Number::from_quad)
                .ok_or(ExactError::DivisionByZero),
        }
    }

    pub fn try_div(&self, other: &Number) -> Result<Number, ExactError> {
        self.try_mul(&other.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Number {
        let mut acc = Number::one();
        for _ in 0..exp {
            // Powers of one value never mix fields.
            acc = acc.try_mul(self).expect("same field");
        }
        acc
    }

    /// Whether the rendered form needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        matches!(self, Number::Quad(q) if !q.a().is_zero())
    }
}

impl From<Rational> for Number {
    fn from(r: Rational) -> Self {
        Number::Rat(r)
    }
}

impl From<i64> for Number {
    fn from(n: i64) -> Self {
        Number::Rat(Rational::from(n))
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Rat(r) => write!(f, "{r}"),
            Number::Quad(q) => write!(f, "{q}"),
        }
    }
}
