use std::collections::BTreeMap;

use verma_core::criteria::{criterion_z, decide_z, Verdict};
use verma_core::exact::{Number, Scalar};
use verma_core::grading::{GVector, GroupElement, GroupSpec, OrderKind};
use verma_core::liealg::{AlgebraSpec, Generator, LambdaMode};
use verma_core::shapovalov::{sigma, Shapovalov};
use verma_core::verma::{
    grade_basis, GMonomial, GeneralModule, ModuleVector, Slot, Weight, ZMonomial,
};

fn spec(l: &str) -> AlgebraSpec {
    AlgebraSpec::rank_one(LambdaMode::parse(l).unwrap()).unwrap()
}

fn symbolic_form(l: &str) -> Shapovalov {
    let s = spec(l);
    Shapovalov::new(s.clone(), Weight::symbolic(&s)).unwrap()
}

fn numeric_form(l: &str, pairs: &[(&str, Scalar)]) -> Shapovalov {
    let s = spec(l);
    let w = Weight::from_pairs(&s, pairs).unwrap();
    Shapovalov::new(s, w).unwrap()
}

#[test]
fn pairing_is_symmetric() {
    for l in ["1", "3", "-2", "generic"] {
        let f = symbolic_form(l);
        for n in 0..=4 {
            let b = grade_basis(n);
            for x in &b {
                for y in &b {
                    assert_eq!(f.pairing(x, y), f.pairing(y, x), "λ={l}: {x} vs {y}");
                }
            }
        }
    }
}

#[test]
fn pairing_matches_projection_route() {
    for l in ["1", "-2", "1/2"] {
        let f = symbolic_form(l);
        for n in 0..=3 {
            let b = grade_basis(n);
            for x in &b {
                for y in &b {
                    assert_eq!(f.pairing(x, y), f.pairing_by_projection(x, y));
                }
            }
        }
    }
}

#[test]
fn form_is_contravariant() {
    for l in ["1", "3", "-2"] {
        let f = symbolic_form(l);
        let m = f.module();
        for k in -3i64..=3 {
            for g in [Generator::l(k), Generator::i(k)] {
                for n in 0..=3u32 {
                    let target = n as i64 - k;
                    if target < 0 {
                        continue;
                    }
                    for x in grade_basis(n) {
                        let gx = m.act(&g, &ModuleVector::monomial(x.clone())).unwrap();
                        for y in grade_basis(target as u32) {
                            let sy = m
                                .act(&sigma(&g), &ModuleVector::monomial(y.clone()))
                                .unwrap();
                            let lhs = f.pairing_vectors(&gx, &ModuleVector::monomial(y.clone()));
                            let rhs = f.pairing_vectors(&ModuleVector::monomial(x.clone()), &sy);
                            assert_eq!(lhs, rhs, "λ={l}: g={g}, x={x}, y={y}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn distinct_grades_are_orthogonal() {
    let f = symbolic_form("1");
    for n in 0..=3 {
        for m in 0..=3 {
            if n == m {
                continue;
            }
            for x in grade_basis(n) {
                for y in grade_basis(m) {
                    assert!(f.pairing(&x, &y).is_zero());
                }
            }
        }
    }
}

#[test]
fn radical_at_first_degenerate_grade_is_singular() {
    // λ = 1, φ(I_0) = 1, φ(C_LI) = 8: f(1) ≠ 0, f(2) = 0
    let f = numeric_form(
        "1",
        &[
            ("I0", Scalar::one()),
            ("CLI1", Scalar::int(8)),
            ("L0", Scalar::int(2)),
            ("CL", Scalar::int(5)),
        ],
    );
    assert!(f.radical_basis(1).unwrap().is_empty());
    let rad = f.radical_basis(2).unwrap();
    assert!(!rad.is_empty());
    for r in &rad {
        for y in grade_basis(2) {
            assert!(f.pairing_vectors(r, &ModuleVector::monomial(y)).is_zero());
        }
        for k in 1..=2 {
            for g in [Generator::l(k), Generator::i(k)] {
                assert!(
                    f.module().act(&g, r).unwrap().is_zero(),
                    "{g} on radical vector"
                );
            }
        }
    }
}

#[test]
fn witness_is_the_smallest_root() {
    for k0 in 1..=6i64 {
        for c1 in [-7i64, 3, 12] {
            let i0 = Scalar::ratio(c1 * (k0 * k0 - 1), 24);
            let s = spec("1");
            let w = Weight::symbolic(&s)
                .with(Slot::I0, i0)
                .with(Slot::CLI(1), Scalar::int(c1));
            let r = decide_z(&s, &w, 10).unwrap();
            assert_eq!(r.verdict, Verdict::Reducible);
            assert_eq!(r.witness, Some(k0 as u64));
            assert!(criterion_z(&s, &w, k0).is_zero());
            for j in 1..k0 {
                assert!(!criterion_z(&s, &w, j).is_zero());
            }
        }
    }
}

#[test]
fn nonzero_i0_away_from_one_is_irreducible() {
    for l in ["3", "-2", "1/2"] {
        let s = spec(l);
        let w = Weight::symbolic(&s).with(Slot::I0, Scalar::ratio(5, 3));
        let r = decide_z(&s, &w, 5).unwrap();
        assert_eq!(r.verdict, Verdict::Irreducible);
        assert_eq!(r.witness, None);
        assert_eq!(r.trace.len(), 5);
    }
}

#[test]
fn lowering_stays_in_the_i_generated_submodule() {
    let sqrt2 = "√2".parse::<Scalar>().unwrap().as_number().unwrap();
    let group = GroupSpec::new(vec![Number::one(), sqrt2], OrderKind::Embedding).unwrap();
    let s = AlgebraSpec::new(group.clone(), LambdaMode::parse("1").unwrap()).unwrap();
    let mut values = BTreeMap::new();
    values.insert(Slot::L0, Scalar::var("h"));
    values.insert(Slot::CL, Scalar::var("c"));
    values.insert(Slot::I0, Scalar::zero());
    values.insert(Slot::CLI(1), Scalar::zero());
    let module = GeneralModule::new(s.clone(), Weight::new(&s, values).unwrap()).unwrap();
    let b = GVector::sorted(
        &group,
        vec![GroupElement::new([1, 0]), GroupElement::new([0, 1])],
    )
    .unwrap();
    let w = ModuleVector::monomial(GMonomial::new(GVector::empty(), b));
    for a in [[-1, 0], [0, -1], [-1, -1], [2, -1], [-3, 2]] {
        let out = module.act(&Generator::L(GroupElement::new(a)), &w).unwrap();
        assert!(!out.is_zero());
        assert!(
            out.terms().all(|(m, _)| !m.i_vec.is_empty()),
            "L{a:?}: {out:?}"
        );
        let lowering = group.sign(&GroupElement::new(a)) == std::cmp::Ordering::Less;
        assert_eq!(out.terms().any(|(m, _)| !m.l_vec.is_empty()), lowering);
        let i_out = module.act(&Generator::I(GroupElement::new(a)), &w).unwrap();
        assert!(i_out.terms().all(|(m, _)| m.l_vec.is_empty()));
    }
}

#[test]
fn zmonomial_text_round_trips() {
    for n in 0..=5 {
        for m in grade_basis(n) {
            assert_eq!(ZMonomial::parse(&m.to_string()).unwrap(), m);
        }
    }
}
