//! The deformed generalized Heisenberg-Virasoro algebra `g(G, λ)`: generators,
//! brackets, a Jacobi checker, and the embedding of the rank-one algebra onto
//! the subalgebra indexed by `εZ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{ExactError, Rational, Scalar};
use crate::grading::{GradingError, GroupElement, GroupSpec, OrderClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("λ = {0} is not allowed (λ must differ from 0 and -1)")]
    ForbiddenLambda(Rational),
    #[error("generator {0} does not belong to this algebra")]
    ForeignGenerator(String),
    #[error("C_I is only defined for λ = 0")]
    CentralCI,
    #[error("the order on G is not discrete")]
    NotDiscrete,
    #[error("{0} is not the minimal positive element of G")]
    NotMinimal(GroupElement),
    #[error("source algebra must be the rank-one algebra over Z with the same λ")]
    BadSource,
    #[error("cannot parse generator `{0}`")]
    Parse(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// How the deformation parameter is held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaMode {
    Exact(Rational),
    /// λ is the indeterminate `lambda`, assumed outside {0, ±1, -2}; every
    /// Kronecker delta on λ is zero.
    Generic,
}

impl LambdaMode {
    pub fn parse(text: &str) -> Result<Self, LieError> {
        if text.trim() == "generic" {
            return Ok(LambdaMode::Generic);
        }
        let s: Scalar = text.parse()?;
        match s {
            Scalar::Rat(r) => Ok(LambdaMode::Exact(r)),
            _ => Err(LieError::Parse(text.to_owned())),
        }
    }
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::Exact(r) => write!(f, "{r}"),
            LambdaMode::Generic => f.write_str("generic"),
        }
    }
}

/// A spanning element of the algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    L(GroupElement),
    I(GroupElement),
    CL,
    CI,
    /// `C_LI^(i)`, `1 ≤ i ≤ ν`.
    CLI(u32),
}

impl Generator {
    pub fn is_central(&self) -> bool {
        !matches!(self, Generator::L(_) | Generator::I(_))
    }

    pub fn index(&self) -> Option<&GroupElement> {
        match self {
            Generator::L(a) | Generator::I(a) => Some(a),
            _ => None,
        }
    }

    /// Rank-one `L_n`.
    pub fn l(n: i64) -> Self {
        Generator::L(GroupElement::int(n))
    }

    /// Rank-one `I_n`.
    pub fn i(n: i64) -> Self {
        Generator::I(GroupElement::int(n))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_index = |f: &mut fmt::Formatter<'_>, name: &str, a: &GroupElement| {
            write!(f, "{name}(")?;
            for (i, c) in a.coords().iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")
        };
        match self {
            Generator::L(a) => write_index(f, "L", a),
            Generator::I(a) => write_index(f, "I", a),
            Generator::CL => f.write_str("CL"),
            Generator::CI => f.write_str("CI"),
            Generator::CLI(i) => write!(f, "CLI{i}"),
        }
    }
}

impl FromStr for Generator {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || LieError::Parse(s.to_owned());
        match t {
            "CL" => return Ok(Generator::CL),
            "CI" => return Ok(Generator::CI),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("CLI") {
            return rest.parse::<u32>().map(Generator::CLI).map_err(|_| bad());
        }
        let (kind, rest) = t.split_at(1);
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        let a = GroupElement::new(coords);
        match kind {
            "L" => Ok(Generator::L(a)),
            "I" => Ok(Generator::I(a)),
            _ => Err(bad()),
        }
    }
}

/// A finite linear combination of generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LieElement {
    terms: BTreeMap<Generator, Scalar>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn gen(g: Generator) -> Self {
        LieElement::term(Scalar::one(), g)
    }

    pub fn term(c: Scalar, g: Generator) -> Self {
        let mut e = LieElement::zero();
        e.add_term(g, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &Generator) -> Scalar {
        self.terms.get(g).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, g: Generator, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, k: &Scalar) -> LieElement {
        let mut out = LieElement::zero();
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c * k);
        }
        out
    }

    /// `[(coefficient, generator), …]` in canonical text forms.
    pub fn to_json(&self) -> Vec<(String, String)> {
        self.terms
            .iter()
            .map(|(g, c)| (c.to_string(), g.to_string()))
            .collect()
    }

    pub fn from_json(pairs: &[(String, String)]) -> Result<Self, LieError> {
        let mut out = LieElement::zero();
        for (c, g) in pairs {
            out.add_term(g.parse()?, c.parse()?);
        }
        Ok(out)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·{g}")?;
        }
        Ok(())
    }
}

/// JSON form of a Lie element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieElementJson(pub Vec<(String, String)>);

/// The algebra `g(G, λ)` with `λ ∉ {0, -1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    group: GroupSpec,
    lambda: LambdaMode,
}

impl AlgebraSpec {
    pub fn new(group: GroupSpec, lambda: LambdaMode) -> Result<Self, LieError> {
        if let LambdaMode::Exact(r) = &lambda {
            if r.is_zero() || *r == Rational::from(-1) {
                return Err(LieError::ForbiddenLambda(r.clone()));
            }
        }
        Ok(AlgebraSpec { group, lambda })
    }

    /// The rank-one algebra over `G = Z`.
    pub fn rank_one(lambda: LambdaMode) -> Result<Self, LieError> {
        AlgebraSpec::new(GroupSpec::integers(), lambda)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn lambda(&self) -> &LambdaMode {
        &self.lambda
    }

    pub fn lambda_scalar(&self) -> Scalar {
        match &self.lambda {
            LambdaMode::Exact(r) => Scalar::Rat(r.clone()),
            LambdaMode::Generic => Scalar::var("lambda"),
        }
    }

    /// Kronecker delta `δ_{λ,value}`; always false for generic λ.
    pub fn lambda_is(&self, value: i64) -> bool {
        matches!(&self.lambda, LambdaMode::Exact(r) if *r == Rational::from(value))
    }

    pub fn active_centrals(&self) -> Vec<Generator> {
        let mut out = vec![Generator::CL];
        if self.lambda_is(1) {
            out.push(Generator::CLI(1));
        }
        if self.lambda_is(-2) {
            for i in 2..=self.group.rank() as u32 {
                out.push(Generator::CLI(i));
            }
        }
        out
    }

    pub fn check_generator(&self, g: &Generator) -> Result<(), LieError> {
        match g {
            Generator::L(a) | Generator::I(a) => self
                .group
                .check(a)
                .map_err(|_| LieError::ForeignGenerator(g.to_string())),
            Generator::CL => Ok(()),
            Generator::CI => Err(LieError::CentralCI),
            Generator::CLI(i) if *i >= 1 && (*i as usize) <= self.group.rank() => Ok(()),
            Generator::CLI(_) => Err(LieError::ForeignGenerator(g.to_string())),
        }
    }

    fn value(&self, a: &GroupElement) -> Scalar {
        self.group.value_scalar(a)
    }

    /// `[L_a, I_b]`.
    fn bracket_li(&self, a: &GroupElement, b: &GroupElement) -> LieElement {
        let va = self.value(a);
        let coef = &self.value(b) - &(&self.lambda_scalar() * &va);
        let mut out = LieElement::term(coef, Generator::I(a.add(b)));
        if a.add(b).is_zero() {
            if self.lambda_is(1) {
                let cocycle = &(&(&va * &va) * &va - &va) * &Scalar::ratio(1, 12);
                out.add_term(Generator::CLI(1), cocycle);
            }
            if self.lambda_is(-2) {
                for (i, c) in a.coords().iter().enumerate().skip(1) {
                    out.add_term(Generator::CLI(i as u32 + 1), Scalar::int(*c));
                }
            }
        }
        out
    }

    /// `[L_a, L_b]`.
    fn bracket_ll(&self, a: &GroupElement, b: &GroupElement) -> LieElement {
        let va = self.value(a);
        let mut out = LieElement::term(&self.value(b) - &va, Generator::L(a.add(b)));
        if a.add(b).is_zero() {
            let cocycle = &(&(&va * &va) * &va - &va) * &Scalar::ratio(1, 12);
            out.add_term(Generator::CL, cocycle);
        }
        out
    }

    /// Bracket of two generators.
    pub fn bracket_gen(&self, x: &Generator, y: &Generator) -> LieElement {
        match (x, y) {
            (Generator::L(a), Generator::L(b)) => self.bracket_ll(a, b),
            (Generator::L(a), Generator::I(b)) => self.bracket_li(a, b),
            (Generator::I(b), Generator::L(a)) => self.bracket_li(a, b).scale(&Scalar::int(-1)),
            _ => LieElement::zero(),
        }
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        bilinear(x, y, |g, h| self.bracket_gen(g, h))
    }

    /// Generators with index coordinates in `[-window, window]`, followed by
    /// the active centrals.
    pub fn window_generators(&self, window: i64) -> Vec<Generator> {
        let rank = self.group.rank();
        let mut indices = vec![Vec::<i64>::new()];
        for _ in 0..rank {
            let mut next = Vec::new();
            for prefix in &indices {
                for c in -window..=window {
                    let mut p = prefix.clone();
                    p.push(c);
                    next.push(p);
                }
            }
            indices = next;
        }
        let mut out = Vec::new();
        for idx in &indices {
            out.push(Generator::L(GroupElement::new(idx.iter().copied())));
        }
        for idx in &indices {
            out.push(Generator::I(GroupElement::new(idx.iter().copied())));
        }
        out.extend(self.active_centrals());
        out
    }
}

fn bilinear(
    x: &LieElement,
    y: &LieElement,
    gen: impl Fn(&Generator, &Generator) -> LieElement,
) -> LieElement {
    let mut out = LieElement::zero();
    for (g, c) in x.terms() {
        for (h, d) in y.terms() {
            let b = gen(g, h);
            if !b.is_zero() {
                out = out.add(&b.scale(&(c * d)));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Antisymmetry,
    Jacobi,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    pub generators: Vec<Generator>,
    pub residual: LieElement,
}

#[derive(Clone, Debug)]
pub struct JacobiReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub violation: Option<Violation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks antisymmetry on all generator pairs and the Jacobi identity on all
/// generator triples from the window. Stops at the first violation.
pub fn verify_jacobi(spec: &AlgebraSpec, window: i64) -> JacobiReport {
    verify_jacobi_with(spec, window, |x, y| spec.bracket_gen(x, y))
}

/// As [`verify_jacobi`], with a caller-supplied generator bracket.
pub fn verify_jacobi_with(
    spec: &AlgebraSpec,
    window: i64,
    bracket: impl Fn(&Generator, &Generator) -> LieElement,
) -> JacobiReport {
    let gens = spec.window_generators(window);
    let mut report = JacobiReport {
        pairs_checked: 0,
        triples_checked: 0,
        violation: None,
    };
    let lie = |x: &LieElement, y: &LieElement| bilinear(x, y, &bracket);

    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i..] {
            report.pairs_checked += 1;
            let residual = bracket(x, y).add(&bracket(y, x));
            if !residual.is_zero() {
                report.violation = Some(Violation {
                    kind: ViolationKind::Antisymmetry,
                    generators: vec![x.clone(), y.clone()],
                    residual,
                });
                return report;
            }
        }
    }

    // The Jacobiator is alternating once antisymmetry holds, so multisets of
    // non-central generators suffice.
    let active: Vec<&Generator> = gens.iter().filter(|g| !g.is_central()).collect();
    for i in 0..active.len() {
        for j in i..active.len() {
            let yz_base = bracket(active[i], active[j]);
            for k in j..active.len() {
                let (x, y, z) = (active[i], active[j], active[k]);
                // Three I's always bracket to zero.
                if matches!(
                    (x, y, z),
                    (Generator::I(_), Generator::I(_), Generator::I(_))
                ) {
                    report.triples_checked += 1;
                    continue;
                }
                let xe = LieElement::gen(x.clone());
                let ye = LieElement::gen(y.clone());
                let ze = LieElement::gen(z.clone());
                let t1 = lie(&xe, &bracket(y, z));
                let t2 = lie(&ye, &bracket(z, x));
                let t3 = lie(&ze, &yz_base);
                let residual = t1.add(&t2).add(&t3);
                report.triples_checked += 1;
                if !residual.is_zero() {
                    report.violation = Some(Violation {
                        kind: ViolationKind::Jacobi,
                        generators: vec![x.clone(), y.clone(), z.clone()],
                        residual,
                    });
                    return report;
                }
            }
        }
    }
    report
}

/// Image of an element of the rank-one algebra under the embedding onto the
/// `εZ`-indexed subalgebra of `target`.
///
/// `L_k ↦ ε⁻¹L_{kε} + δ_{k,0}(ε⁻¹−ε)/24·C_L`, `C_L ↦ εC_L`, and likewise for
/// `I_k`, `C_LI^(1)` when λ = 1. For λ = −2 the cocycles `C_LI^(i)`, i ≥ 2,
/// restrict to a coboundary on `εZ`, absorbed by shifting the image of `I_0`
/// by `ε⁻²Σ ε_(i) C_LI^(i)`; the shift vanishes when `ε` lies on the first
/// basis axis.
pub fn iso_2_5(
    x: &LieElement,
    source: &AlgebraSpec,
    target: &AlgebraSpec,
    eps: &GroupElement,
) -> Result<LieElement, LieError> {
    if !source.group.is_integers() || source.lambda != target.lambda {
        return Err(LieError::BadSource);
    }
    match target.group.classify()? {
        OrderClass::Dense => return Err(LieError::NotDiscrete),
        OrderClass::Discrete(e) if &e != eps => return Err(LieError::NotMinimal(eps.clone())),
        OrderClass::Discrete(_) => {}
    }
    let e = target.value(eps);
    if e.is_zero() {
        return Err(ExactError::DivisionByZero.into());
    }
    let e_inv = Scalar::one().try_div(&e)?;
    let shift = &(&e_inv - &e) * &Scalar::ratio(1, 24);

    let mut out = LieElement::zero();
    for (g, c) in x.terms() {
        let image = match g {
            Generator::L(k) => {
                let k = k.coords()[0];
                let mut im = LieElement::term(e_inv.clone(), Generator::L(eps.scale(k)));
                if k == 0 {
                    im.add_term(Generator::CL, shift.clone());
                }
                im
            }
            Generator::I(k) => {
                let k = k.coords()[0];
                let mut im = LieElement::term(e_inv.clone(), Generator::I(eps.scale(k)));
                if k == 0 && target.lambda_is(1) {
                    im.add_term(Generator::CLI(1), shift.clone());
                }
                if k == 0 && target.lambda_is(-2) {
                    let e_inv2 = &e_inv * &e_inv;
                    for (i, ci) in eps.coords().iter().enumerate().skip(1) {
                        im.add_term(Generator::CLI(i as u32 + 1), &e_inv2 * &Scalar::int(*ci));
                    }
                }
                im
            }
            Generator::CL => LieElement::term(e.clone(), Generator::CL),
            Generator::CLI(1) => LieElement::term(e.clone(), Generator::CLI(1)),
            other => return Err(LieError::ForeignGenerator(other.to_string())),
        };
        out = out.add(&image.scale(c));
    }
    Ok(out)
}

/// Result of checking that [`iso_2_5`] preserves brackets on a window.
#[derive(Clone, Debug)]
pub struct IsoReport {
    pub pairs_checked: usize,
    pub failure: Option<(Generator, Generator)>,
}

pub fn verify_iso(
    source: &AlgebraSpec,
    target: &AlgebraSpec,
    eps: &GroupElement,
    window: i64,
) -> Result<IsoReport, LieError> {
    let gens = source.window_generators(window);
    let mut report = IsoReport {
        pairs_checked: 0,
        failure: None,
    };
    for x in &gens {
        for y in &gens {
            let lhs = iso_2_5(&source.bracket_gen(x, y), source, target, eps)?;
            let ix = iso_2_5(&LieElement::gen(x.clone()), source, target, eps)?;
            let iy = iso_2_5(&LieElement::gen(y.clone()), source, target, eps)?;
            let rhs = target.bracket(&ix, &iy);
            report.pairs_checked += 1;
            if lhs != rhs {
                report.failure = Some((x.clone(), y.clone()));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Number;
    use crate::grading::OrderKind;

    fn alg(lambda: i64) -> AlgebraSpec {
        AlgebraSpec::rank_one(LambdaMode::Exact(lambda.into())).unwrap()
    }

    fn el(pairs: &[(&str, Generator)]) -> LieElement {
        let mut e = LieElement::zero();
        for (c, g) in pairs {
            e.add_term(g.clone(), c.parse().unwrap());
        }
        e
    }

    #[test]
    fn rejects_forbidden_lambda() {
        assert!(matches!(alg_try(0), Err(LieError::ForbiddenLambda(_))));
        assert!(matches!(alg_try(-1), Err(LieError::ForbiddenLambda(_))));
    }

    fn alg_try(l: i64) -> Result<AlgebraSpec, LieError> {
        AlgebraSpec::rank_one(LambdaMode::Exact(l.into()))
    }

    #[test]
    fn mixed_bracket_rank_one() {
        let b = alg(2).bracket_gen(&Generator::l(1), &Generator::i(-1));
        assert_eq!(b, el(&[("-3", Generator::i(0))]));
    }

    #[test]
    fn virasoro_bracket_with_central_term() {
        let b = alg(2).bracket_gen(&Generator::l(2), &Generator::l(-2));
        assert_eq!(b, el(&[("-4", Generator::l(0)), ("1/2", Generator::CL)]));
    }

    #[test]
    fn lambda_one_cocycle() {
        let b = alg(1).bracket_gen(&Generator::l(3), &Generator::i(-3));
        assert_eq!(b, el(&[("-6", Generator::i(0)), ("2", Generator::CLI(1))]));
    }

    #[test]
    fn lambda_minus_two_rank_two_cocycle() {
        let sqrt2 = "√2".parse::<Scalar>().unwrap().as_number().unwrap();
        let g = GroupSpec::new(vec![Number::one(), sqrt2], OrderKind::Lex).unwrap();
        let spec = AlgebraSpec::new(g.clone(), LambdaMode::Exact((-2).into())).unwrap();
        let a = g.element([2, 3]).unwrap();
        let b = spec.bracket_gen(&Generator::L(a.clone()), &Generator::I(a.neg()));
        let value_a = g.value_scalar(&a);
        let expected = {
            let mut e = LieElement::term(value_a, Generator::I(g.zero()));
            e.add_term(Generator::CLI(2), Scalar::int(3));
            e
        };
        assert_eq!(b, expected);
        assert_eq!(
            spec.active_centrals(),
            vec![Generator::CL, Generator::CLI(2)]
        );
    }

    #[test]
    fn heisenberg_part_commutes() {
        for l in [1, 3, -2] {
            assert!(alg(l)
                .bracket_gen(&Generator::i(2), &Generator::i(-2))
                .is_zero());
        }
    }

    #[test]
    fn generic_lambda_has_no_li_centrals() {
        let spec = AlgebraSpec::rank_one(LambdaMode::Generic).unwrap();
        let b = spec.bracket_gen(&Generator::l(3), &Generator::i(-3));
        assert_eq!(b, el(&[("-3-3*lambda", Generator::i(0))]));
    }

    #[test]
    fn generator_text_round_trip() {
        for text in ["L(1,-2)", "I(3)", "CL", "CLI1", "CI"] {
            let g: Generator = text.parse().unwrap();
            assert_eq!(g.to_string(), text);
        }
        assert!("X(1)".parse::<Generator>().is_err());
        assert!("L(a)".parse::<Generator>().is_err());
    }

    #[test]
    fn ci_is_rejected_by_algebras() {
        assert_eq!(
            alg(2).check_generator(&Generator::CI),
            Err(LieError::CentralCI)
        );
        assert!(alg(2).check_generator(&Generator::CLI(2)).is_err());
    }

    #[test]
    fn jacobi_small_window() {
        assert!(verify_jacobi(&alg(1), 4).passed());
    }

    #[test]
    fn corrupted_central_term_is_caught() {
        let spec = alg(1);
        let report = verify_jacobi_with(&spec, 3, |x, y| {
            let mut b = spec.bracket_gen(x, y);
            if let (Generator::L(a), Generator::L(_)) = (x, y) {
                if a.coords()[0] > 0 {
                    let c = b.coeff(&Generator::CL);
                    b.add_term(Generator::CL, &c * &Scalar::int(-2));
                }
            }
            b
        });
        let v = report.violation.expect("corruption must be detected");
        let idx: Vec<i64> = v
            .generators
            .iter()
            .filter_map(|g| g.index().map(|a| a.coords()[0]))
            .collect();
        assert!(v.generators.iter().all(|g| matches!(g, Generator::L(_))));
        assert!(idx.contains(&-idx[0]), "violation at {:?}", v.generators);
    }

    #[test]
    fn iso_identity_for_unit_epsilon() {
        let src = alg(1);
        let eps = GroupElement::int(1);
        for g in [
            Generator::l(2),
            Generator::i(-1),
            Generator::l(0),
            Generator::CL,
            Generator::CLI(1),
        ] {
            let x = LieElement::gen(g);
            assert_eq!(iso_2_5(&x, &src, &src, &eps).unwrap(), x);
        }
    }

    #[test]
    fn iso_of_l0_with_epsilon_two() {
        let src = alg(3);
        let target = AlgebraSpec::new(
            GroupSpec::cyclic(Number::from(2)).unwrap(),
            LambdaMode::Exact(3.into()),
        )
        .unwrap();
        let eps = GroupElement::int(1);
        let im = iso_2_5(&LieElement::gen(Generator::l(0)), &src, &target, &eps).unwrap();
        assert_eq!(
            im,
            el(&[("1/2", Generator::l(0)), ("-1/16", Generator::CL)])
        );

        let lhs = iso_2_5(
            &src.bracket_gen(&Generator::l(1), &Generator::l(-1)),
            &src,
            &target,
            &eps,
        )
        .unwrap();
        let rhs = target.bracket(
            &iso_2_5(&LieElement::gen(Generator::l(1)), &src, &target, &eps).unwrap(),
            &iso_2_5(&LieElement::gen(Generator::l(-1)), &src, &target, &eps).unwrap(),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn iso_rejects_dense_targets() {
        let sqrt2 = "√2".parse::<Scalar>().unwrap().as_number().unwrap();
        let g = GroupSpec::new(vec![Number::one(), sqrt2], OrderKind::Embedding).unwrap();
        let target = AlgebraSpec::new(g, LambdaMode::Exact(3.into())).unwrap();
        let r = iso_2_5(
            &LieElement::gen(Generator::l(1)),
            &alg(3),
            &target,
            &GroupElement::new([1, 0]),
        );
        assert_eq!(r, Err(LieError::NotDiscrete));
    }

    #[test]
    fn iso_with_off_axis_epsilon_for_lambda_minus_two() {
        let sqrt2 = "√2".parse::<Scalar>().unwrap().as_number().unwrap();
        let g = GroupSpec::new(vec![Number::one(), sqrt2], OrderKind::Lex).unwrap();
        let target = AlgebraSpec::new(g, LambdaMode::Exact((-2).into())).unwrap();
        let src = alg(-2);
        let report = verify_iso(&src, &target, &GroupElement::new([0, 1]), 3).unwrap();
        assert!(report.failure.is_none(), "{:?}", report.failure);
    }
}
