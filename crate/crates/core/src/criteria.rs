//! Irreducibility decisions for Verma modules.
//!
//! Over `Z` the module `M̄(φ)` is reducible exactly when
//! `12(1+λ)φ(I_0) − (k²−1)φ(C_LI^(1))δ_{λ,1}` vanishes for some nonzero
//! integer `k`. Discrete orders reduce to that case by transporting the weight
//! along the embedding of the rank-one algebra on `εZ`; dense orders are
//! decided by whether the weight vanishes on `I_0` and the `C_LI` centrals.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{ExactError, Scalar};
use crate::grading::{GVector, GradingError, GroupElement, GroupSpec, OrderClass};
use crate::liealg::{iso_2_5, AlgebraSpec, Generator, LieElement, LieError};
use crate::verma::{
    filtration_level, GMonomial, GeneralModule, ModuleVector, Slot, VermaError, Weight,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("expected a dense order")]
    NotDense,
    #[error("expected a discrete order")]
    NotDiscrete,
    #[error("expected the rank-one algebra over Z")]
    NotRankOne,
    #[error("ε must be nonzero")]
    ZeroEpsilon,
    #[error("weight must be numeric to search for a witness")]
    NeedsNumeric,
    #[error("weight does not vanish on I_0 and the active C_LI centrals")]
    NotInN,
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Irreducible,
    Reducible,
}

/// Submodule structure reported by the dense decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseDetail {
    /// `N` is generated by the monomials `I_b v`; as a space it is spanned by
    /// the `L_a I_b v` with `|b| ≥ 1`.
    pub submodule: String,
    pub n_maximal: bool,
    /// Weight identically zero: the monomials of positive length span the
    /// unique maximal submodule.
    pub weight_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub verdict: Verdict,
    pub witness: Option<u64>,
    /// `(k, expression at k)` for `k = 1, 2, …` up to the witness or the
    /// search bound.
    pub trace: Vec<(u64, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dense: Option<DenseDetail>,
}

fn delta(spec: &AlgebraSpec, v: i64) -> bool {
    spec.lambda_is(v)
}

fn one_plus_lambda(spec: &AlgebraSpec) -> Scalar {
    &Scalar::one() + &spec.lambda_scalar()
}

/// `12(1+λ)φ(I_0) − (k²−1)φ(C_LI^(1))δ_{λ,1}`.
pub fn criterion_z(spec: &AlgebraSpec, phi: &Weight, k: i64) -> Scalar {
    let mut out = &(&Scalar::int(12) * &one_plus_lambda(spec)) * &phi.get(Slot::I0);
    if delta(spec, 1) {
        out = &out - &(&Scalar::int(k * k - 1) * &phi.get(Slot::CLI(1)));
    }
    out
}

/// `24(1+λ)μ(I_0) + (1+λ+ε²(1−λ−2k²))μ(C_LI^(1))δ_{λ,1}`.
pub fn criterion_discrete(spec: &AlgebraSpec, mu: &Weight, eps: &Scalar, k: i64) -> Scalar {
    let (a, b) = discrete_coefficients(spec, mu, eps, &Scalar::zero());
    &a + &(&b * &Scalar::int(k * k))
}

/// The discrete expression for an `ε` that may lie off the first basis axis.
///
/// At λ = −2 the term `ε⁻¹Σ_{i≥2} ε_(i) μ(C_LI^(i))` joins `μ(I_0)`; it
/// vanishes whenever `ε` is a multiple of the first basis element.
pub fn criterion_discrete_at(
    spec: &AlgebraSpec,
    mu: &Weight,
    eps: &GroupElement,
    k: i64,
) -> Result<Scalar, CriteriaError> {
    let e = spec.group().value_scalar(eps);
    let corr = off_axis_correction(spec, mu, eps)?;
    let (a, b) = discrete_coefficients(spec, mu, &e, &corr);
    Ok(&a + &(&b * &Scalar::int(k * k)))
}

fn off_axis_correction(
    spec: &AlgebraSpec,
    mu: &Weight,
    eps: &GroupElement,
) -> Result<Scalar, CriteriaError> {
    if !delta(spec, -2) {
        return Ok(Scalar::zero());
    }
    let e = spec.group().value_scalar(eps);
    if e.is_zero() {
        return Err(CriteriaError::ZeroEpsilon);
    }
    let mut s = Scalar::zero();
    for (i, c) in eps.coords().iter().enumerate().skip(1) {
        s = &s + &(&Scalar::int(*c) * &mu.get(Slot::CLI(i as u32 + 1)));
    }
    Ok(s.try_div(&e)?)
}

/// Writes the discrete expression as `A + B·k²`.
fn discrete_coefficients(
    spec: &AlgebraSpec,
    mu: &Weight,
    eps: &Scalar,
    corr: &Scalar,
) -> (Scalar, Scalar) {
    let lp = one_plus_lambda(spec);
    let mut a = &(&Scalar::int(24) * &lp) * &(&mu.get(Slot::I0) + corr);
    let mut b = Scalar::zero();
    if delta(spec, 1) {
        let c1 = mu.get(Slot::CLI(1));
        let e2 = eps * eps;
        let lam = spec.lambda_scalar();
        let const_part = &lp + &(&e2 * &(&Scalar::one() - &lam));
        a = &a + &(&const_part * &c1);
        b = &(&Scalar::int(-2) * &e2) * &c1;
    }
    (a, b)
}

/// Smallest `k ≥ 1` with `a + b·k² = 0`, found exactly.
///
/// `Ok(None)` certifies that no nonzero integer works.
fn smallest_root(a: &Scalar, b: &Scalar) -> Result<Option<u64>, CriteriaError> {
    if b.is_zero() {
        return Ok(a.is_zero().then_some(1));
    }
    if !a.is_numeric() || !b.is_numeric() {
        return Err(CriteriaError::NeedsNumeric);
    }
    let q = a.neg_ref().try_div(b)?;
    let Some(q) = q.as_rational() else {
        return Ok(None);
    };
    if !q.is_integer() || q.signum() <= 0 {
        return Ok(None);
    }
    Ok(q.integer_sqrt().and_then(|r| u64::try_from(r).ok()))
}

fn trace_upto(limit: u64, expr: impl Fn(i64) -> Scalar) -> Vec<(u64, String)> {
    (1..=limit)
        .map(|k| (k, expr(k as i64).to_string()))
        .collect()
}

fn finish(witness: Option<u64>, bound: u64, expr: impl Fn(i64) -> Scalar) -> CriterionResult {
    let limit = witness.map_or(bound, |w| w.min(bound));
    CriterionResult {
        verdict: if witness.is_some() {
            Verdict::Reducible
        } else {
            Verdict::Irreducible
        },
        witness,
        trace: trace_upto(limit, expr),
        dense: None,
    }
}

/// Decides irreducibility of the rank-one module `M̄(φ)`.
///
/// `bound` only limits the length of the reported trace.
pub fn decide_z(
    spec: &AlgebraSpec,
    phi: &Weight,
    bound: u64,
) -> Result<CriterionResult, CriteriaError> {
    if !spec.group().is_integers() {
        return Err(CriteriaError::NotRankOne);
    }
    // criterion_z(k) = (12(1+λ)φ(I_0) + c1) − c1·k²
    let c1 = if delta(spec, 1) {
        phi.get(Slot::CLI(1))
    } else {
        Scalar::zero()
    };
    let a = &(&(&Scalar::int(12) * &one_plus_lambda(spec)) * &phi.get(Slot::I0)) + &c1;
    let b = c1.neg_ref();
    let witness = smallest_root(&a, &b)?;
    Ok(finish(witness, bound, |k| criterion_z(spec, phi, k)))
}

/// Decides irreducibility for a discrete order with minimal element `ε`.
pub fn decide_discrete(
    spec: &AlgebraSpec,
    mu: &Weight,
    bound: u64,
) -> Result<CriterionResult, CriteriaError> {
    let OrderClass::Discrete(eps) = spec.group().classify()? else {
        return Err(CriteriaError::NotDiscrete);
    };
    let e = spec.group().value_scalar(&eps);
    let corr = off_axis_correction(spec, mu, &eps)?;
    let (a, b) = discrete_coefficients(spec, mu, &e, &corr);
    let witness = smallest_root(&a, &b)?;
    Ok(finish(witness, bound, |k| &a + &(&b * &Scalar::int(k * k))))
}

/// Decides irreducibility for a dense order.
///
/// With `strict`, values recorded on inactive `C_LI^(i)` also count.
pub fn decide_dense(
    spec: &AlgebraSpec,
    mu: &Weight,
    strict: bool,
) -> Result<CriterionResult, CriteriaError> {
    if spec.group().classify()? != OrderClass::Dense {
        return Err(CriteriaError::NotDense);
    }
    let vanishes = vanishes_on_i(spec, mu, strict);
    if !vanishes {
        return Ok(CriterionResult {
            verdict: Verdict::Irreducible,
            witness: None,
            trace: Vec::new(),
            dense: None,
        });
    }
    let n_maximal = !(mu.get(Slot::L0).is_zero() && mu.get(Slot::CL).is_zero());
    let weight_zero = mu.values().values().all(Scalar::is_zero);
    Ok(CriterionResult {
        verdict: Verdict::Reducible,
        witness: None,
        trace: Vec::new(),
        dense: Some(DenseDetail {
            submodule: "U(g)·span{ I_b v } = span{ L_a I_b v : |b| >= 1 }".into(),
            n_maximal,
            weight_zero,
        }),
    })
}

fn vanishes_on_i(spec: &AlgebraSpec, mu: &Weight, strict: bool) -> bool {
    if !mu.get(Slot::I0).is_zero() {
        return false;
    }
    let mut slots: Vec<Slot> = Vec::new();
    if strict {
        slots.extend((1..=spec.group().rank() as u32).map(Slot::CLI));
    } else {
        slots.extend(spec.active_centrals().iter().filter_map(|g| match g {
            Generator::CLI(i) => Some(Slot::CLI(*i)),
            _ => None,
        }));
    }
    slots.iter().all(|s| mu.get(*s).is_zero())
}

/// Pulls `μ` back along the embedding of the rank-one algebra onto the
/// `εZ`-indexed subalgebra: `φ(x) = μ(ι(x))`.
pub fn transport_weight(
    spec: &AlgebraSpec,
    mu: &Weight,
    eps: &GroupElement,
) -> Result<(AlgebraSpec, Weight), CriteriaError> {
    let source = AlgebraSpec::rank_one(spec.lambda().clone())?;
    let mut values = std::collections::BTreeMap::new();
    let mut slots = vec![
        (Slot::L0, Generator::l(0)),
        (Slot::I0, Generator::i(0)),
        (Slot::CL, Generator::CL),
    ];
    if source.lambda_is(1) {
        slots.push((Slot::CLI(1), Generator::CLI(1)));
    }
    for (slot, g) in slots {
        let image = iso_2_5(&LieElement::gen(g), &source, spec, eps)?;
        values.insert(slot, evaluate(mu, &image));
    }
    let phi = Weight::new(&source, values)?;
    Ok((source, phi))
}

fn evaluate(mu: &Weight, x: &LieElement) -> Scalar {
    let mut acc = Scalar::zero();
    for (g, c) in x.terms() {
        let slot = match g {
            Generator::L(a) if a.is_zero() => Slot::L0,
            Generator::I(a) if a.is_zero() => Slot::I0,
            Generator::CL => Slot::CL,
            Generator::CLI(i) => Slot::CLI(*i),
            _ => continue,
        };
        acc = &acc + &(c * &mu.get(slot));
    }
    acc
}

/// The closed-form transport for an `ε` of value `eps` on the first axis:
/// `φ(L_0) = ε⁻¹μ(L_0) + (ε⁻¹−ε)/24·μ(C_L)`, `φ(C_L) = εμ(C_L)`, and the same
/// shape for `I_0`, `C_LI^(1)` at λ = 1.
pub fn transport_weight_value(
    spec: &AlgebraSpec,
    mu: &Weight,
    eps: &Scalar,
) -> Result<Weight, CriteriaError> {
    if eps.is_zero() {
        return Err(CriteriaError::ZeroEpsilon);
    }
    let source = AlgebraSpec::rank_one(spec.lambda().clone())?;
    let inv = Scalar::one().try_div(eps)?;
    let shift = &(&inv - eps) * &Scalar::ratio(1, 24);
    let mut values = std::collections::BTreeMap::new();
    values.insert(
        Slot::L0,
        &(&inv * &mu.get(Slot::L0)) + &(&shift * &mu.get(Slot::CL)),
    );
    values.insert(Slot::CL, eps * &mu.get(Slot::CL));
    let mut i0 = &inv * &mu.get(Slot::I0);
    if delta(spec, 1) {
        i0 = &i0 + &(&shift * &mu.get(Slot::CLI(1)));
        values.insert(Slot::CLI(1), eps * &mu.get(Slot::CLI(1)));
    }
    values.insert(Slot::I0, i0);
    Ok(Weight::new(&source, values)?)
}

/// A probe of the submodule `N = span{I_b v}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub probes: usize,
    /// `(generator, monomial)` pairs whose image left the span.
    pub escapes: Vec<(String, String)>,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.escapes.is_empty()
    }
}

fn pure_i(w: &ModuleVector<GMonomial>) -> bool {
    w.terms().all(|(m, _)| m.l_vec.is_empty())
}

fn has_i_factor(w: &ModuleVector<GMonomial>) -> bool {
    w.terms().all(|(m, _)| !m.i_vec.is_empty())
}

/// Checks that `L_a`, `I_a`, `I_{-a}`, `L_0` and `I_0` keep each `I_b v`
/// inside the pure-`I` span, and that `L_{-a}` keeps it inside the span of
/// monomials with at least one `I` factor.
pub fn submodule_n_probe(
    module: &GeneralModule,
    samples: &[(GroupElement, GVector)],
) -> Result<ProbeReport, CriteriaError> {
    let spec = module.spec();
    if spec.group().classify()? != OrderClass::Dense {
        return Err(CriteriaError::NotDense);
    }
    if !vanishes_on_i(spec, module.weight(), false) {
        return Err(CriteriaError::NotInN);
    }
    let mut report = ProbeReport {
        probes: 0,
        escapes: Vec::new(),
    };
    let zero = spec.group().zero();
    for (a, b) in samples {
        let m = GMonomial::new(GVector::empty(), b.clone());
        let w = ModuleVector::monomial(m.clone());
        for g in [
            Generator::L(a.clone()),
            Generator::I(a.clone()),
            Generator::I(a.neg()),
            Generator::L(zero.clone()),
            Generator::I(zero.clone()),
        ] {
            report.probes += 1;
            if !pure_i(&module.act(&g, &w)?) {
                report.escapes.push((g.to_string(), m.to_string()));
            }
        }
        let g = Generator::L(a.neg());
        report.probes += 1;
        if !has_i_factor(&module.act(&g, &w)?) {
            report.escapes.push((g.to_string(), m.to_string()));
        }
    }
    Ok(report)
}

/// Checks `I_a M_r ⊆ M_{r−1}` on monomials of level `r ≥ 1`.
pub fn filtration_probe(
    module: &GeneralModule,
    samples: &[(GroupElement, GMonomial)],
) -> Result<ProbeReport, CriteriaError> {
    let mut report = ProbeReport {
        probes: 0,
        escapes: Vec::new(),
    };
    for (a, m) in samples {
        let w = ModuleVector::monomial(m.clone());
        let Some(r) = filtration_level(&w) else {
            continue;
        };
        if r == 0 {
            continue;
        }
        report.probes += 1;
        let out = module.act(&Generator::I(a.clone()), &w)?;
        if filtration_level(&out).is_some_and(|lvl| lvl + 1 > r) {
            report
                .escapes
                .push((Generator::I(a.clone()).to_string(), m.to_string()));
        }
    }
    Ok(report)
}

fn random_element(group: &GroupSpec, rng: &mut ChaCha8Rng, span: i64) -> GroupElement {
    GroupElement::new((0..group.rank()).map(|_| rng.gen_range(-span..=span)))
}

/// Random positive element with coordinates in `[-span, span]`.
pub fn random_positive(group: &GroupSpec, rng: &mut ChaCha8Rng, span: i64) -> GroupElement {
    loop {
        let e = random_element(group, rng, span);
        match group.sign(&e) {
            Ordering::Greater => return e,
            Ordering::Less => return e.neg(),
            Ordering::Equal => {}
        }
    }
}

/// Random G-vector of length at most `max_len`.
pub fn random_gvector(
    group: &GroupSpec,
    rng: &mut ChaCha8Rng,
    max_len: usize,
    span: i64,
) -> GVector {
    let len = rng.gen_range(0..=max_len);
    let entries = (0..len)
        .map(|_| random_positive(group, rng, span))
        .collect();
    GVector::sorted(group, entries).expect("entries are positive")
}

/// Deterministic `(a, b̲)` samples, `b̲` nonempty, for [`submodule_n_probe`].
pub fn n_probe_samples(group: &GroupSpec, count: usize, seed: u64) -> Vec<(GroupElement, GVector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = random_positive(group, &mut rng, 3);
            let mut b = random_gvector(group, &mut rng, 3, 3);
            while b.is_empty() {
                b = random_gvector(group, &mut rng, 3, 3);
            }
            (a, b)
        })
        .collect()
}

/// Deterministic `(a, L_a I_b v)` samples with `|a| ≥ 1` for [`filtration_probe`].
pub fn filtration_samples(
    group: &GroupSpec,
    count: usize,
    seed: u64,
) -> Vec<(GroupElement, GMonomial)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = random_positive(group, &mut rng, 3);
            let mut l = random_gvector(group, &mut rng, 2, 2);
            if l.is_empty() {
                l = GVector::sorted(group, vec![random_positive(group, &mut rng, 2)])
                    .expect("positive");
            }
            let b = random_gvector(group, &mut rng, 2, 2);
            (a, GMonomial::new(l, b))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Number;
    use crate::grading::OrderKind;
    use crate::liealg::LambdaMode;

    fn rank_one(lambda: i64) -> AlgebraSpec {
        AlgebraSpec::rank_one(LambdaMode::Exact(lambda.into())).unwrap()
    }

    fn weight(spec: &AlgebraSpec, pairs: &[(&str, &str)]) -> Weight {
        let mut w = Weight::symbolic(spec);
        for slot in w.values().keys().copied().collect::<Vec<_>>() {
            w = w.with(slot, Scalar::zero());
        }
        for (k, v) in pairs {
            w = w.with(Slot::parse(k).unwrap(), v.parse().unwrap());
        }
        w
    }

    fn sqrt2_spec(order: OrderKind, lambda: i64) -> AlgebraSpec {
        let s2 = "√2".parse::<Scalar>().unwrap().as_number().unwrap();
        let g = GroupSpec::new(vec![Number::one(), s2], order).unwrap();
        AlgebraSpec::new(g, LambdaMode::Exact(lambda.into())).unwrap()
    }

    #[test]
    fn criterion_z_values() {
        let s = rank_one(2);
        assert_eq!(
            criterion_z(&s, &weight(&s, &[("I0", "1")]), 5),
            Scalar::int(36)
        );
        let s = rank_one(1);
        assert_eq!(
            criterion_z(&s, &weight(&s, &[("I0", "1"), ("CLI1", "3")]), 3),
            Scalar::zero()
        );
        assert_eq!(
            criterion_z(&s, &weight(&s, &[("I0", "1"), ("CLI1", "3")]), -1),
            Scalar::int(24)
        );
    }

    #[test]
    fn decide_z_examples() {
        let s = rank_one(2);
        assert_eq!(
            decide_z(&s, &weight(&s, &[("I0", "1")]), 10)
                .unwrap()
                .verdict,
            Verdict::Irreducible
        );
        let s = rank_one(1);
        let r = decide_z(&s, &weight(&s, &[("I0", "2"), ("CLI1", "24")]), 10).unwrap();
        assert_eq!(r.verdict, Verdict::Irreducible);
        let r = decide_z(&s, &weight(&s, &[("I0", "1"), ("CLI1", "3")]), 10).unwrap();
        assert_eq!((r.verdict, r.witness), (Verdict::Reducible, Some(3)));
        assert_eq!(r.trace.len(), 3);
        assert_eq!(r.trace[2].1, "0");
    }

    #[test]
    fn dense_examples() {
        let s = sqrt2_spec(OrderKind::Embedding, 3);
        let r = decide_dense(&s, &weight(&s, &[("I0", "1")]), false).unwrap();
        assert_eq!(r.verdict, Verdict::Irreducible);
        let r = decide_dense(&s, &weight(&s, &[("L0", "2")]), false).unwrap();
        assert_eq!(r.verdict, Verdict::Reducible);
        assert!(r.dense.as_ref().unwrap().n_maximal);
        let r = decide_dense(&s, &weight(&s, &[]), false).unwrap();
        let d = r.dense.unwrap();
        assert!(!d.n_maximal && d.weight_zero);
        assert_eq!(
            decide_dense(&rank_one(2), &weight(&rank_one(2), &[]), false),
            Err(CriteriaError::NotDense)
        );
    }

    #[test]
    fn strict_mode_sees_inactive_centrals() {
        let s = sqrt2_spec(OrderKind::Embedding, 3);
        let w = weight(&s, &[("CLI1", "5")]);
        assert_eq!(
            decide_dense(&s, &w, false).unwrap().verdict,
            Verdict::Reducible
        );
        assert_eq!(
            decide_dense(&s, &w, true).unwrap().verdict,
            Verdict::Irreducible
        );
    }

    #[test]
    fn transport_examples() {
        let s = rank_one(1);
        let mu = weight(&s, &[("L0", "24"), ("I0", "0"), ("CLI1", "24")]);
        let phi = transport_weight_value(&s, &mu, &Scalar::int(2)).unwrap();
        assert_eq!(phi.get(Slot::L0), Scalar::int(12));
        assert_eq!(phi.get(Slot::I0), Scalar::ratio(-3, 2));
        assert_eq!(phi.get(Slot::CLI(1)), Scalar::int(48));
        assert_eq!(transport_weight_value(&s, &mu, &Scalar::one()).unwrap(), mu);
        assert_eq!(
            transport_weight_value(&s, &mu, &Scalar::zero()),
            Err(CriteriaError::ZeroEpsilon)
        );
    }

    #[test]
    fn discrete_examples() {
        let s = rank_one(2);
        let mu = weight(&s, &[("I0", "1")]);
        assert_eq!(
            criterion_discrete(&s, &mu, &Scalar::int(5), 7),
            Scalar::int(72)
        );
        let s = rank_one(1);
        let mu = weight(&s, &[("I0", "1"), ("CLI1", "5")]);
        assert_eq!(
            criterion_discrete(&s, &mu, &Scalar::one(), 1),
            Scalar::int(48)
        );

        let s = rank_one(3);
        assert_eq!(
            decide_discrete(&s, &weight(&s, &[("I0", "5")]), 5)
                .unwrap()
                .verdict,
            Verdict::Irreducible
        );

        let s = sqrt2_spec(OrderKind::Lex, 1);
        let r = decide_discrete(&s, &weight(&s, &[]), 5).unwrap();
        assert_eq!((r.verdict, r.witness), (Verdict::Reducible, Some(1)));
    }

    #[test]
    fn discrete_agrees_with_rank_one_at_unit_epsilon() {
        let s = rank_one(1);
        for (i0, c1) in [("1", "3"), ("2", "24"), ("0", "0"), ("5", "1"), ("-1", "8")] {
            let mu = weight(&s, &[("I0", i0), ("CLI1", c1)]);
            let a = decide_z(&s, &mu, 6).unwrap();
            let b = decide_discrete(&s, &mu, 6).unwrap();
            assert_eq!((a.verdict, a.witness), (b.verdict, b.witness), "{i0} {c1}");
        }
    }

    #[test]
    fn off_axis_epsilon_at_lambda_minus_two() {
        let s = sqrt2_spec(OrderKind::Lex, -2);
        let mu = weight(&s, &[("I0", "1"), ("CLI2", "3")]);
        let eps = GroupElement::new([0, 1]);
        let (_, phi) = transport_weight(&s, &mu, &eps).unwrap();
        let e = s.group().value_scalar(&eps);
        let lhs = criterion_discrete_at(&s, &mu, &eps, 2).unwrap();
        let rhs = &(&Scalar::int(2) * &e) * &criterion_z(&rank_one(-2), &phi, 2);
        assert_eq!(lhs, rhs);
        let mu = weight(&s, &[("I0", "-3/2√2"), ("CLI2", "3")]);
        assert_eq!(
            decide_discrete(&s, &mu, 3).unwrap().verdict,
            Verdict::Reducible
        );
        assert_ne!(criterion_discrete(&s, &mu, &e, 1), Scalar::zero());
    }

    #[test]
    fn n_probe_and_filtration() {
        let s = sqrt2_spec(OrderKind::Embedding, 3);
        let w = weight(&s, &[("L0", "2"), ("CL", "1/2")]);
        let m = GeneralModule::new(s.clone(), w).unwrap();
        let r = submodule_n_probe(&m, &n_probe_samples(s.group(), 30, 7)).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = filtration_probe(&m, &filtration_samples(s.group(), 30, 7)).unwrap();
        assert!(r.passed() && r.probes == 30, "{r:?}");
    }
}
