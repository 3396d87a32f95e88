use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{parse, ExactError, Number, Poly, QuadElement, Rational, Symbol};

/// Exact coefficient used throughout the crate.
///
/// Always kept in the lowest applicable variant: a polynomial that is
/// constant is stored as a number and a quadratic number with zero surd part
/// as a rational. Derived equality is therefore exact value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(Rational),
    Quad(QuadElement),
    Poly(Poly),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rational::from(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(Rational::new(n, d))
    }

    pub fn var(name: &str) -> Self {
        Scalar::Poly(Poly::var(Symbol::new(name)))
    }

    pub fn sqrt(m: u64) -> Result<Self, ExactError> {
        Ok(Scalar::Quad(QuadElement::sqrt(m)?))
    }

    pub fn from_number(n: Number) -> Self {
        match n {
            Number::Rat(r) => Scalar::Rat(r),
            Number::Quad(q) => Scalar::Quad(q),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        match p.as_constant() {
            Some(c) => Scalar::from_number(c),
            None => Scalar::Poly(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_numeric(&self) -> bool {
        !matches!(self, Scalar::Poly(_))
    }

    pub fn as_number(&self) -> Option<Number> {
        match self {
            Scalar::Rat(r) => Some(Number::Rat(r.clone())),
            Scalar::Quad(q) => Some(Number::Quad(q.clone())),
            Scalar::Poly(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn to_poly(&self) -> Poly {
        match self {
            Scalar::Rat(r) => Poly::constant(Number::Rat(r.clone())),
            Scalar::Quad(q) => Poly::constant(Number::Quad(q.clone())),
            Scalar::Poly(p) => p.clone(),
        }
    }

    pub fn field_tag(&self) -> Option<u64> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Quad(q) => Some(q.m()),
            Scalar::Poly(p) => p.field_tag(),
        }
    }

    /// Number of stored terms; used for pivot selection.
    pub fn term_count(&self) -> usize {
        match self {
            Scalar::Rat(r) => usize::from(!r.is_zero()),
            Scalar::Quad(q) => usize::from(!q.a().is_zero()) + usize::from(!q.b().is_zero()),
            Scalar::Poly(p) => p.term_count(),
        }
    }

    /// Exact sign of a numeric scalar; `None` for polynomials.
    pub fn sign(&self) -> Option<i8> {
        self.as_number().map(|n| n.sign())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        match (self, other) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Ok(Scalar::Rat(x + y)),
            (Scalar::Poly(_), _) | (_, Scalar::Poly(_)) => {
                Ok(Scalar::from_poly(self.to_poly().try_add(&other.to_poly())?))
            }
            _ => Ok(Scalar::from_number(
                self.as_number()
                    .unwrap()
                    .try_add(&other.as_number().unwrap())?,
            )),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Scalar::zero());
        }
        match (self, other) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Ok(Scalar::Rat(x * y)),
            (Scalar::Poly(p), s) | (s, Scalar::Poly(p)) if s.is_numeric() => {
                Ok(Scalar::from_poly(p.try_scale(&s.as_number().unwrap())?))
            }
            (Scalar::Poly(p), Scalar::Poly(q)) => Ok(Scalar::from_poly(p.try_mul(q)?)),
            _ => Ok(Scalar::from_number(
                self.as_number()
                    .unwrap()
                    .try_mul(&other.as_number().unwrap())?,
            )),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Quad(q) => Scalar::Quad(q.neg()),
            Scalar::Poly(p) => Scalar::Poly(p.neg()),
        }
    }

    /// Exact division. Numeric divisors use the field inverse; polynomial
    /// divisors must divide exactly.
    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(n) = other.as_number() {
            return self.try_mul(&Scalar::from_number(n.recip()?));
        }
        let Scalar::Poly(d) = other else {
            unreachable!()
        };
        match self.to_poly().div_exact(d)? {
            Some(q) => Ok(Scalar::from_poly(q)),
            None => Err(ExactError::NotDivisible),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes values for every indeterminate.
    pub fn eval(&self, assignment: &BTreeMap<Symbol, Scalar>) -> Result<Scalar, ExactError> {
        let Scalar::Poly(p) = self else {
            return Ok(self.clone());
        };
        let mut acc = Scalar::zero();
        for (m, c) in p.terms() {
            let mut term = Scalar::from_number(c.clone());
            for (s, e) in m.factors() {
                let val = assignment
                    .get(&s)
                    .ok_or_else(|| ExactError::MissingSymbol(s.name().to_owned()))?;
                term = term.try_mul(&val.pow(e))?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Substitutes values for the indeterminates present in `assignment`,
    /// leaving the rest symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<Symbol, Scalar>) -> Result<Scalar, ExactError> {
        let Scalar::Poly(p) = self else {
            return Ok(self.clone());
        };
        let mut acc = Scalar::zero();
        for (m, c) in p.terms() {
            let mut term = Scalar::from_number(c.clone());
            for (s, e) in m.factors() {
                let val = assignment
                    .get(&s)
                    .cloned()
                    .unwrap_or_else(|| Scalar::Poly(Poly::var(s)));
                term = term.try_mul(&val.pow(e))?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<Number> for Scalar {
    fn from(n: Number) -> Self {
        Scalar::from_number(n)
    }
}

impl From<QuadElement> for Scalar {
    fn from(q: QuadElement) -> Self {
        Scalar::from_number(Number::from_quad(q))
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_poly(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Quad(q) => write!(f, "{q}"),
            Scalar::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_scalar(s)
    }
}

// Operator forms panic on mixed quadratic fields. Within one algebra all
// values share the group's field, so the checked forms are only needed at
// input boundaries.
macro_rules! scalar_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("mixed quadratic fields")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$checked(&rhs).expect("mixed quadratic fields")
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("mixed quadratic fields")
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
