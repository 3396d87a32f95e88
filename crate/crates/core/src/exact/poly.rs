use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use smallvec::SmallVec;

use super::{ExactError, Number, Rational};

/// An interned indeterminate name. Ordered by name.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symbol(&'static str);

fn interner() -> &'static Mutex<HashSet<&'static str>> {
    static NAMES: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    NAMES.get_or_init(|| Mutex::new(HashSet::new()))
}

impl Symbol {
    pub fn new(name: &str) -> Symbol {
        let mut names = interner().lock().expect("symbol interner poisoned");
        if let Some(s) = names.get(name) {
            return Symbol(s);
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        names.insert(leaked);
        Symbol(leaked)
    }

    pub fn name(&self) -> &'static str {
        self.0
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(other.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// A power product of symbols, stored sparsely and sorted by symbol.
/// Ordered graded-lexicographically, earlier names being more significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(Symbol, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(s: Symbol) -> Self {
        let mut v = SmallVec::new();
        v.push((s, 1));
        Monomial(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, s: Symbol) -> u32 {
        self.0.iter().find(|(t, _)| *t == s).map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> impl Iterator<Item = (Symbol, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (sa, ea) = self.0[i];
            let (sb, eb) = other.0[j];
            match sa.cmp(&sb) {
                Ordering::Less => {
                    out.push((sa, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((sb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((sa, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::new();
        let mut j = 0;
        for &(s, e) in &self.0 {
            let mut sub = 0;
            if j < other.0.len() && other.0[j].0 == s {
                sub = other.0[j].1;
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < s {
                return None;
            }
            if sub > e {
                return None;
            }
            if e > sub {
                out.push((s, e - sub));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Removes one factor of `s` (which must be present).
    fn lower(&self, s: Symbol) -> Monomial {
        let mut out = SmallVec::new();
        for &(t, e) in &self.0 {
            if t == s {
                if e > 1 {
                    out.push((t, e - 1));
                }
            } else {
                out.push((t, e));
            }
        }
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            o => return o,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over Q or Q(√m).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Number>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Number) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c).expect("empty poly");
        p
    }

    pub fn var(s: Symbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(s), Number::one());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Number)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Number)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Number> {
        match self.terms.len() {
            0 => Some(Number::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(s, _)| s))
            .collect()
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(s)).max().unwrap_or(0)
    }

    pub fn field_tag(&self) -> Option<u64> {
        self.terms.values().find_map(|c| c.field_tag())
    }

    fn add_term(&mut self, m: Monomial, c: Number) -> Result<(), ExactError> {
        if c.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().try_add(&c)?;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, ExactError> {
        let (mut acc, rest) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &rest.terms {
            acc.add_term(m.clone(), c.clone())?;
        }
        Ok(acc)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, ExactError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn try_scale(&self, k: &Number) -> Result<Poly, ExactError> {
        if k.is_zero() {
            return Ok(Poly::zero());
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.clone(), c.try_mul(k)?);
        }
        Ok(Poly { terms })
    }

    fn try_mul_term(&self, m: &Monomial, k: &Number) -> Result<Poly, ExactError> {
        let mut terms = BTreeMap::new();
        for (mm, c) in &self.terms {
            terms.insert(mm.mul(m), c.try_mul(k)?);
        }
        Ok(Poly { terms })
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, ExactError> {
        let mut acc = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.add_term(ma.mul(mb), ca.try_mul(cb)?)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::constant(Number::one());
        for _ in 0..exp {
            acc = acc.try_mul(self).expect("same field");
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Option<Poly>, ExactError> {
        let (lm, lc) = d.leading_term().ok_or(ExactError::DivisionByZero)?;
        let lc_inv = lc.recip()?;
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.div(lm) else {
                return Ok(None);
            };
            let qc = c.try_mul(&lc_inv)?;
            rem = rem.try_sub(&d.try_mul_term(&qm, &qc)?)?;
            quo.add_term(qm, qc)?;
        }
        Ok(Some(quo))
    }

    /// Division by a polynomial of total degree one.
    ///
    /// Eliminates the leading variable `x` of `ell`; the remainder is free of
    /// `x`, so it is divisible by `ell` only when it is zero.
    pub fn divide_linear(&self, ell: &Poly) -> Result<(Poly, Poly), ExactError> {
        if ell.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if ell.total_degree() != Some(1) {
            return Err(ExactError::NotLinear);
        }
        let (lead, alpha) = ell.leading_term().unwrap();
        let x = lead.factors().next().unwrap().0;
        let alpha_inv = alpha.recip()?;
        let mut quo = Poly::zero();
        let mut rem = self.clone();
        loop {
            let e = rem.degree_in(x);
            if e == 0 {
                break;
            }
            let mut step = Poly::zero();
            for (m, c) in rem.terms.iter().filter(|(m, _)| m.exponent(x) == e) {
                step.add_term(m.lower(x), c.try_mul(&alpha_inv)?)?;
            }
            rem = rem.try_sub(&step.try_mul(ell)?)?;
            quo = quo.try_add(&step)?;
        }
        Ok((quo, rem))
    }

    pub fn terms_owned(self) -> BTreeMap<Monomial, Number> {
        self.terms
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            // Rationals and pure surds carry their sign outside.
            let (negative, magnitude) = match c {
                Number::Quad(q) if !q.a().is_zero() => (false, c.clone()),
                _ if c.sign() < 0 => (true, c.neg()),
                _ => (false, c.clone()),
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                if magnitude.is_compound() {
                    write!(f, "({magnitude})")?;
                } else {
                    write!(f, "{magnitude}")?;
                }
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else if magnitude.is_compound() {
                write!(f, "({magnitude})*{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for Poly {
    fn from(r: Rational) -> Self {
        Poly::constant(Number::Rat(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Poly {
        Poly::var(Symbol::new(s))
    }

    fn c(n: i64) -> Poly {
        Poly::constant(Number::from(n))
    }

    #[test]
    fn grlex_order_for_printing() {
        let p = v("h")
            .try_mul(&v("h"))
            .unwrap()
            .try_add(&v("c").try_mul(&v("hI")).unwrap())
            .unwrap()
            .try_sub(&v("hI"))
            .unwrap()
            .try_add(&c(3))
            .unwrap();
        assert_eq!(p.to_string(), "c*hI + h^2 - hI + 3");
    }

    #[test]
    fn linear_division_perfect_square() {
        let f1 = v("hI").try_scale(&Number::from(-2)).unwrap();
        let sq = f1.try_mul(&f1).unwrap();
        let (q, r) = sq.divide_linear(&f1).unwrap();
        assert_eq!(q, f1);
        assert!(r.is_zero());
    }

    #[test]
    fn linear_division_leaves_remainder() {
        let p = v("hI").try_add(&c(1)).unwrap();
        let (q, r) = p.divide_linear(&v("hI")).unwrap();
        assert_eq!(q, c(1));
        assert_eq!(r, c(1));
    }

    #[test]
    fn linear_division_rejects_zero_and_nonlinear() {
        assert_eq!(
            c(2).divide_linear(&Poly::zero()),
            Err(ExactError::DivisionByZero)
        );
        let sq = v("h").try_mul(&v("h")).unwrap();
        assert_eq!(c(2).divide_linear(&sq), Err(ExactError::NotLinear));
    }

    #[test]
    fn exact_division() {
        let a = v("h").try_add(&v("c")).unwrap();
        let b = v("h").try_sub(&c(2)).unwrap();
        let p = a.try_mul(&b).unwrap();
        assert_eq!(p.div_exact(&a).unwrap(), Some(b.clone()));
        assert_eq!(p.try_add(&c(1)).unwrap().div_exact(&a).unwrap(), None);
    }

    #[test]
    fn monomial_division() {
        let a = Monomial::var(Symbol::new("a"));
        let b = Monomial::var(Symbol::new("b"));
        let ab = a.mul(&b);
        assert_eq!(ab.div(&a), Some(b.clone()));
        assert_eq!(a.div(&b), None);
        assert_eq!(b.div(&ab), None);
    }
}
