//! The contravariant form on the rank-one Verma module.
//!
//! `(xv | yv)` is the coefficient of `v` in `σ(x)·y·v`, where the
//! anti-involution `σ` reverses words and negates indices. The Gram matrix of
//! a graded piece pairs each basis monomial, with its `I` and `L` parts
//! exchanged, against the basis; that makes it upper triangular, and its
//! determinant factors into the linear forms `f(k)`.
//!
//! Exchanging parts agrees with reversing the sorted basis only up to grade
//! 3. From grade 4 on there are monomials fixed by the exchange, such as
//! `I_{-2}L_{-2}v`, so the reversed-basis matrix is a row permutation of the
//! triangular one and is not itself triangular. [`Shapovalov::gram_reversed`]
//! builds it for comparison.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{ExactError, Scalar};
use crate::grading::GroupElement;
use crate::liealg::{AlgebraSpec, Generator, LambdaMode};
use crate::linalg;
use crate::verma::{
    grade_basis, ModuleVector, PbwMonomial, RankOneModule, Slot, VermaError, Weight, ZMonomial,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("grade {grade} Gram matrix has nonzero entry below the diagonal at ({row}, {col})")]
    NotTriangular { grade: u32, row: usize, col: usize },
    #[error("brute-force and triangular determinants disagree at grade {0}")]
    ModeMismatch(u32),
    #[error("brute-force determinant is limited to grade 4, got {0}")]
    TooLarge(u32),
    #[error("weight must be fully numeric")]
    NotNumeric,
    #[error("weight must leave {0} symbolic")]
    NotSymbolic(String),
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `L_n ↦ L_{-n}`, `I_n ↦ I_{-n}`, centrals fixed.
pub fn sigma(g: &Generator) -> Generator {
    match g {
        Generator::L(a) => Generator::L(a.neg()),
        Generator::I(a) => Generator::I(a.neg()),
        other => other.clone(),
    }
}

/// Reverses the word and applies [`sigma`] letterwise.
pub fn sigma_word(xs: &[Generator]) -> Vec<Generator> {
    xs.iter().rev().map(sigma).collect()
}

/// `f(k) = -k(1+λ)φ(I_0) + (k³-k)/12 · φ(C_LI^(1)) δ_{λ,1}`.
pub fn f_form(spec: &AlgebraSpec, weight: &Weight, k: i64) -> Scalar {
    let one_plus = &Scalar::one() + &spec.lambda_scalar();
    let mut out = &(&Scalar::int(-k) * &one_plus) * &weight.get(Slot::I0);
    if spec.lambda_is(1) {
        let c = Scalar::ratio(k * k * k - k, 12);
        out = &out + &(&c * &weight.get(Slot::CLI(1)));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DetMode {
    Brute,
    Triangular,
}

impl std::str::FromStr for DetMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "brute" | "brute-force" => Ok(DetMode::Brute),
            "triangular" => Ok(DetMode::Triangular),
            _ => Err(format!("unknown determinant mode `{s}`")),
        }
    }
}

/// `A_ij = (ū_i | u_j)` over the ascending basis of a grade, where `ū`
/// exchanges the `I` and `L` parts of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub grade: u32,
    pub basis: Vec<ZMonomial>,
    pub entries: Vec<Vec<Scalar>>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn diagonal(&self) -> impl Iterator<Item = &Scalar> {
        self.entries.iter().enumerate().map(|(i, r)| &r[i])
    }

    /// First nonzero entry below the diagonal, if any.
    pub fn below_diagonal(&self) -> Option<(usize, usize)> {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate().take(i) {
                if !e.is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Outcome of trial division of a Gram determinant by the forms `f(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub grade: u32,
    pub det: Scalar,
    /// `f(k)` exponents, ascending `k`; empty when not separable.
    pub exponents: BTreeMap<u32, u32>,
    /// When every `f(k)` is proportional to one form: that form and its
    /// total exponent.
    pub collinear: Option<(Scalar, u32)>,
    /// The leftover numeric factor, when the quotient is numeric.
    pub constant: Option<Scalar>,
    /// The leftover quotient when it is not numeric; zero on success.
    pub residual: Scalar,
}

impl FactorizationReport {
    pub fn separable(&self) -> bool {
        self.collinear.is_none()
    }

    pub fn succeeded(&self) -> bool {
        self.residual.is_zero()
            && self
                .constant
                .as_ref()
                .is_some_and(|c| c.as_rational().is_some() && !c.is_zero())
    }
}

/// The form on `M̄(φ)` with memoized pairings.
pub struct Shapovalov {
    module: RankOneModule,
    cache: Mutex<HashMap<(ZMonomial, ZMonomial), Scalar>>,
}

impl Shapovalov {
    pub fn new(spec: AlgebraSpec, weight: Weight) -> Result<Self, FormError> {
        Ok(Shapovalov {
            module: RankOneModule::rank_one(spec, weight)?,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn module(&self) -> &RankOneModule {
        &self.module
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.module.spec()
    }

    pub fn weight(&self) -> &Weight {
        self.module.weight()
    }

    /// `(xv | yv)`, peeling one generator off `x` at a time.
    pub fn pairing(&self, x: &ZMonomial, y: &ZMonomial) -> Scalar {
        if x.grade() != y.grade() {
            return Scalar::zero();
        }
        let Some((g, rest)) = x.split_first() else {
            return if y.grade() == 0 {
                Scalar::one()
            } else {
                Scalar::zero()
            };
        };
        let key = (x.clone(), y.clone());
        if let Some(hit) = self.cache.lock().expect("pairing cache poisoned").get(&key) {
            return hit.clone();
        }
        // (g·rest v | y v) = (rest v | σ(g) y v)
        let moved = self
            .module
            .act(&sigma(&g), &ModuleVector::monomial(y.clone()))
            .expect("rank-one generator");
        let mut acc = Scalar::zero();
        for (m, c) in moved.terms() {
            let p = self.pairing(&rest, m);
            if !p.is_zero() {
                acc = &acc + &(c * &p);
            }
        }
        self.cache
            .lock()
            .expect("pairing cache poisoned")
            .insert(key, acc.clone());
        acc
    }

    /// Same value, computed as the `v`-coefficient of `σ(x)·y·v` in one pass.
    pub fn pairing_by_projection(&self, x: &ZMonomial, y: &ZMonomial) -> Scalar {
        let word = sigma_word(&x.word());
        let out = self
            .module
            .act_word(&word, &ModuleVector::monomial(y.clone()))
            .expect("rank-one generators");
        out.coeff(&ZMonomial::default())
    }

    /// Bilinear extension to vectors.
    pub fn pairing_vectors(
        &self,
        u: &ModuleVector<ZMonomial>,
        w: &ModuleVector<ZMonomial>,
    ) -> Scalar {
        let mut acc = Scalar::zero();
        for (x, a) in u.terms() {
            for (y, b) in w.terms() {
                let p = self.pairing(x, y);
                if !p.is_zero() {
                    acc = &acc + &(&(a * b) * &p);
                }
            }
        }
        acc
    }

    fn swapped_rows(&self, basis: &[ZMonomial]) -> Vec<Vec<Scalar>> {
        basis
            .iter()
            .map(|u| {
                let row = u.swapped();
                basis.iter().map(|w| self.pairing(&row, w)).collect()
            })
            .collect()
    }

    pub fn gram(&self, n: u32) -> Result<GramMatrix, FormError> {
        let basis = grade_basis(n);
        let entries = self.swapped_rows(&basis);
        let g = GramMatrix {
            grade: n,
            basis,
            entries,
        };
        if let Some((row, col)) = g.below_diagonal() {
            return Err(FormError::NotTriangular { grade: n, row, col });
        }
        Ok(g)
    }

    pub fn det(&self, n: u32, mode: DetMode) -> Result<Scalar, FormError> {
        match mode {
            DetMode::Triangular => {
                let g = self.gram(n)?;
                Ok(g.diagonal().fold(Scalar::one(), |acc, e| &acc * e))
            }
            DetMode::Brute => {
                if n > 4 {
                    return Err(FormError::TooLarge(n));
                }
                let entries = self.swapped_rows(&grade_basis(n));
                Ok(linalg::determinant(&entries)?)
            }
        }
    }

    /// `(u_{d+1-i} | u_j)`: rows taken from the reversed basis. No
    /// triangularity check.
    pub fn gram_reversed(&self, n: u32) -> GramMatrix {
        let basis = grade_basis(n);
        let d = basis.len();
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.pairing(&basis[d - 1 - i], &basis[j]))
                    .collect()
            })
            .collect();
        GramMatrix {
            grade: n,
            basis,
            entries,
        }
    }

    /// Runs both determinant modes and insists they agree.
    pub fn det_checked(&self, n: u32) -> Result<Scalar, FormError> {
        let tri = self.det(n, DetMode::Triangular)?;
        if n <= 4 && self.det(n, DetMode::Brute)? != tri {
            return Err(FormError::ModeMismatch(n));
        }
        Ok(tri)
    }

    /// Trial division of `det A_n` by `f(1), …, f(n)`.
    ///
    /// At `λ = 1` the forms are pairwise independent and each exponent is
    /// reported. Otherwise all `f(k)` are multiples of `(1+λ)φ(I_0)`, which
    /// is divided out as a single factor.
    pub fn factorize(&self, n: u32) -> Result<FactorizationReport, FormError> {
        let w = self.weight();
        if w.get(Slot::I0).is_numeric() {
            return Err(FormError::NotSymbolic("I0".into()));
        }
        let separable = self.spec().lambda_is(1);
        if separable && w.get(Slot::CLI(1)).is_numeric() {
            return Err(FormError::NotSymbolic("CLI1".into()));
        }
        let det = self.det(n, DetMode::Triangular)?;
        let mut rest = det.clone();
        let mut exponents = BTreeMap::new();
        let mut collinear = None;
        if separable {
            for k in 1..=n {
                let f = f_form(self.spec(), w, k as i64);
                let e = divide_out(&mut rest, &f)?;
                if e > 0 {
                    exponents.insert(k, e);
                }
            }
        } else {
            let base = &(&Scalar::one() + &self.spec().lambda_scalar()) * &w.get(Slot::I0);
            let e = divide_out(&mut rest, &base)?;
            collinear = Some((base, e));
        }
        let (constant, residual) = if rest.is_numeric() {
            (Some(rest), Scalar::zero())
        } else {
            (None, rest)
        };
        Ok(FactorizationReport {
            grade: n,
            det,
            exponents,
            collinear,
            constant,
            residual,
        })
    }

    /// Kernel of the Gram matrix at grade `n`, as module vectors.
    pub fn radical_basis(&self, n: u32) -> Result<Vec<ModuleVector<ZMonomial>>, FormError> {
        if !self.weight().is_numeric() || matches!(self.spec().lambda(), LambdaMode::Generic) {
            return Err(FormError::NotNumeric);
        }
        let g = self.gram(n)?;
        let ker = linalg::kernel(&g.entries)?;
        Ok(ker
            .into_iter()
            .map(|x| ModuleVector::from_terms(g.basis.iter().cloned().zip(x)))
            .collect())
    }
}

fn divide_out(rest: &mut Scalar, f: &Scalar) -> Result<u32, FormError> {
    if f.is_zero() || f.is_numeric() {
        return Ok(0);
    }
    let mut e = 0;
    while !rest.is_zero() {
        match rest.try_div(f) {
            Ok(q) => {
                *rest = q;
                e += 1;
            }
            Err(ExactError::NotDivisible) => break,
            Err(other) => return Err(other.into()),
        }
    }
    Ok(e)
}

/// Lowering generators of the rank-one algebra of a given magnitude.
pub fn lowering_pair(k: u32) -> [Generator; 2] {
    let a = GroupElement::int(-(k as i64));
    [Generator::L(a.clone()), Generator::I(a)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(lambda: &str, pairs: &[(&str, &str)]) -> Shapovalov {
        let spec = AlgebraSpec::rank_one(LambdaMode::parse(lambda).unwrap()).unwrap();
        let mut w = Weight::symbolic(&spec);
        for (k, v) in pairs {
            w = w.with(Slot::parse(k).unwrap(), v.parse().unwrap());
        }
        Shapovalov::new(spec, w).unwrap()
    }

    fn z(t: &str) -> ZMonomial {
        ZMonomial::parse(t).unwrap()
    }

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn sigma_words() {
        assert_eq!(sigma_word(&[Generator::l(-2)]), vec![Generator::l(2)]);
        assert_eq!(
            sigma_word(&[Generator::i(-1), Generator::l(-3)]),
            vec![Generator::l(3), Generator::i(1)]
        );
        assert!(sigma_word(&[]).is_empty());
    }

    #[test]
    fn basic_pairings() {
        let f = form("3", &[]);
        assert_eq!(f.pairing(&z("v"), &z("v")), Scalar::one());
        assert_eq!(f.pairing(&z("L[2] v"), &z("I[1,1] v")), Scalar::zero());
        assert_eq!(f.pairing(&z("L[1] v"), &z("I[1] v")), s("-4*hI"));
        assert_eq!(f.pairing(&z("L[1] v"), &z("L[1] v")), s("-2*h"));
        assert_eq!(f.pairing(&z("L[1] v"), &z("L[2] v")), Scalar::zero());
    }

    #[test]
    fn gram_grade_one() {
        let f = form("1", &[]);
        let g = f.gram(1).unwrap();
        let f1 = f_form(f.spec(), f.weight(), 1);
        assert_eq!(
            g.entries,
            vec![
                vec![f1.clone(), s("-2*h")],
                vec![Scalar::zero(), f1.clone()]
            ]
        );
        assert_eq!(f.gram(0).unwrap().entries, vec![vec![Scalar::one()]]);
        assert_eq!(f.det(1, DetMode::Brute).unwrap(), f1.pow(2));
        assert_eq!(f.det(0, DetMode::Triangular).unwrap(), Scalar::one());
    }

    #[test]
    fn factor_grade_one() {
        let r = form("1", &[]).factorize(1).unwrap();
        assert_eq!(r.exponents, BTreeMap::from([(1, 2)]));
        assert_eq!(r.constant, Some(Scalar::one()));
        assert!(r.succeeded());
    }

    #[test]
    fn collinear_forms_at_lambda_three() {
        let r = form("3", &[]).factorize(2).unwrap();
        assert!(!r.separable());
        assert!(r.succeeded(), "{r:?}");
        assert_eq!(r.collinear.as_ref().unwrap().1, 8);
    }

    #[test]
    fn projection_route_agrees() {
        let f = form("1", &[]);
        for n in 0..=3 {
            for x in grade_basis(n) {
                for y in grade_basis(n) {
                    assert_eq!(
                        f.pairing(&x, &y),
                        f.pairing_by_projection(&x, &y),
                        "{x} {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn reversed_basis_rows_break_triangularity_at_grade_four() {
        let f = form("1", &[]);
        for n in 0..=3 {
            assert_eq!(f.gram_reversed(n).entries, f.gram(n).unwrap().entries);
        }
        let lit = f.gram_reversed(4);
        assert_eq!(lit.below_diagonal(), Some((10, 9)));
        let d_lit = linalg::determinant(&lit.entries).unwrap();
        let d = f.det(4, DetMode::Triangular).unwrap();
        assert_eq!(d_lit, -d);
    }

    #[test]
    fn radicals_at_grade_one() {
        let f = form("2", &[("I0", "1"), ("L0", "5"), ("CL", "0")]);
        assert!(f.radical_basis(1).unwrap().is_empty());
        let f = form("2", &[("I0", "0"), ("L0", "5"), ("CL", "0")]);
        let r = f.radical_basis(1).unwrap();
        assert_eq!(r, vec![ModuleVector::monomial(z("I[1] v"))]);
    }

    #[test]
    fn radical_appears_by_grade_three() {
        let f = form("1", &[("I0", "1"), ("CLI1", "3"), ("L0", "0"), ("CL", "0")]);
        assert!(f.radical_basis(1).unwrap().is_empty());
        assert!(f.radical_basis(2).unwrap().is_empty());
        assert!(!f.radical_basis(3).unwrap().is_empty());
    }
}
