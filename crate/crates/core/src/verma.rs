//! Verma modules and PBW normal ordering.
//!
//! Two monomial flavors are supported. The rank-one flavor [`ZMonomial`]
//! writes `I`'s left of `L`'s, `I_{-n_1}…I_{-n_s} L_{-m_1}…L_{-m_r} v`; it has
//! finite-dimensional graded pieces. The general flavor [`GMonomial`] writes
//! `L`'s left of `I`'s, `L_{-a_1}…L_{-a_r} I_{-b_1}…I_{-b_s} v`, over any
//! supported group, and is used for finitely generated probes.
//!
//! Both are normalized by the same straightening procedure: a lowering
//! generator is prepended when that is already canonical, and otherwise
//! commuted past the leftmost factor, `x·y·w = y·(x·w) + [x,y]·w`; raising
//! and zero-index generators are always commuted rightward until they reach
//! `v`, where they act by the weight or annihilate.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{ExactError, Scalar};
use crate::grading::{
    gvec_compare, partition_compare, partitions, GVector, GradingError, GroupElement, GroupSpec,
    Partition,
};
use crate::liealg::{AlgebraSpec, Generator, LieElement, LieError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VermaError {
    #[error("weight is missing a value for {0}")]
    MissingWeight(String),
    #[error("weight assigns {0}, which is not part of g_0 for this algebra")]
    ForeignWeight(String),
    #[error("this monomial flavor needs the rank-one algebra over Z")]
    NeedsRankOne,
    #[error("graded bases exist only for the rank-one flavor")]
    NoGradedBasis,
    #[error("cannot parse monomial `{0}`")]
    Parse(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A basis element of `g_0` on which a weight takes a value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Slot {
    L0,
    I0,
    CL,
    CLI(u32),
}

impl Slot {
    pub fn name(&self) -> String {
        match self {
            Slot::L0 => "L0".into(),
            Slot::I0 => "I0".into(),
            Slot::CL => "CL".into(),
            Slot::CLI(i) => format!("CLI{i}"),
        }
    }

    /// Indeterminate used for a symbolic weight.
    pub fn symbol(&self) -> String {
        match self {
            Slot::L0 => "h".into(),
            Slot::I0 => "hI".into(),
            Slot::CL => "c".into(),
            Slot::CLI(i) => format!("c{i}"),
        }
    }

    pub fn parse(name: &str) -> Option<Slot> {
        match name {
            "L0" | "L_0" => Some(Slot::L0),
            "I0" | "I_0" => Some(Slot::I0),
            "CL" | "C_L" => Some(Slot::CL),
            _ => name
                .strip_prefix("CLI")
                .and_then(|i| i.parse().ok())
                .map(Slot::CLI),
        }
    }

    fn of_generator(g: &Generator) -> Option<Slot> {
        match g {
            Generator::L(a) if a.is_zero() => Some(Slot::L0),
            Generator::I(a) if a.is_zero() => Some(Slot::I0),
            Generator::CL => Some(Slot::CL),
            Generator::CLI(i) => Some(Slot::CLI(*i)),
            _ => None,
        }
    }
}

/// A linear functional on `g_0`.
///
/// Must cover `L_0`, `I_0` and every central that is active for the algebra.
/// Values on inactive `C_LI^(i)` may be recorded; they never enter the module
/// action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    values: BTreeMap<Slot, Scalar>,
}

impl Weight {
    pub fn new(spec: &AlgebraSpec, values: BTreeMap<Slot, Scalar>) -> Result<Self, VermaError> {
        let mut required = vec![Slot::L0, Slot::I0];
        required.extend(spec.active_centrals().iter().filter_map(Slot::of_generator));
        for slot in &required {
            if !values.contains_key(slot) {
                return Err(VermaError::MissingWeight(slot.name()));
            }
        }
        for slot in values.keys() {
            if let Slot::CLI(i) = slot {
                if *i == 0 || *i as usize > spec.group().rank() {
                    return Err(VermaError::ForeignWeight(slot.name()));
                }
            }
        }
        Ok(Weight { values })
    }

    /// Every required slot gets its own indeterminate.
    pub fn symbolic(spec: &AlgebraSpec) -> Self {
        let mut values = BTreeMap::new();
        values.insert(Slot::L0, Scalar::var(&Slot::L0.symbol()));
        values.insert(Slot::I0, Scalar::var(&Slot::I0.symbol()));
        for g in spec.active_centrals() {
            let s = Slot::of_generator(&g).unwrap();
            values.insert(s, Scalar::var(&s.symbol()));
        }
        Weight { values }
    }

    /// Builds a weight from `(slot name, value)` pairs.
    pub fn from_pairs(spec: &AlgebraSpec, pairs: &[(&str, Scalar)]) -> Result<Self, VermaError> {
        let mut values = BTreeMap::new();
        for (name, v) in pairs {
            let slot =
                Slot::parse(name).ok_or_else(|| VermaError::ForeignWeight((*name).to_owned()))?;
            values.insert(slot, v.clone());
        }
        Weight::new(spec, values)
    }

    pub fn get(&self, slot: Slot) -> Scalar {
        self.values.get(&slot).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn values(&self) -> &BTreeMap<Slot, Scalar> {
        &self.values
    }

    pub fn is_numeric(&self) -> bool {
        self.values.values().all(Scalar::is_numeric)
    }

    pub fn with(&self, slot: Slot, value: Scalar) -> Weight {
        let mut values = self.values.clone();
        values.insert(slot, value);
        Weight { values }
    }

    pub fn to_json(&self) -> BTreeMap<String, String> {
        self.values
            .iter()
            .map(|(k, v)| (k.name(), v.to_string()))
            .collect()
    }
}

/// A PBW monomial acting on the highest-weight vector.
pub trait PbwMonomial: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send {
    fn vacuum() -> Self;

    /// The leftmost generator and the remaining (canonical) monomial.
    fn split_first(&self) -> Option<(Generator, Self)>;

    /// `g·self` when placing the lowering generator `g` in front is already
    /// canonical.
    fn prepend(&self, g: &Generator, group: &GroupSpec) -> Option<Self>;

    fn supports(spec: &AlgebraSpec) -> bool;
}

/// `I_{-n_1}…I_{-n_s} L_{-m_1}…L_{-m_r} v` with `n`, `m` partitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ZMonomial {
    pub i_part: Partition,
    pub l_part: Partition,
}

impl ZMonomial {
    pub fn new(mut i_part: Partition, mut l_part: Partition) -> Self {
        i_part.sort_unstable_by(|a, b| b.cmp(a));
        l_part.sort_unstable_by(|a, b| b.cmp(a));
        ZMonomial { i_part, l_part }
    }

    pub fn grade(&self) -> u32 {
        self.i_part.iter().sum::<u32>() + self.l_part.iter().sum::<u32>()
    }

    pub fn i_sum(&self) -> u32 {
        self.i_part.iter().sum()
    }

    /// The word of lowering generators, left to right.
    pub fn word(&self) -> Vec<Generator> {
        let mut w: Vec<Generator> = self
            .i_part
            .iter()
            .map(|&n| Generator::i(-(n as i64)))
            .collect();
        w.extend(self.l_part.iter().map(|&m| Generator::l(-(m as i64))));
        w
    }

    /// Swaps the `I` and `L` partitions.
    pub fn swapped(&self) -> ZMonomial {
        ZMonomial {
            i_part: self.l_part.clone(),
            l_part: self.i_part.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, VermaError> {
        let bad = || VermaError::Parse(text.to_owned());
        let mut i_part = Vec::new();
        let mut l_part = Vec::new();
        let mut saw_v = false;
        for tok in text.split_whitespace() {
            if saw_v {
                return Err(bad());
            }
            if tok == "v" {
                saw_v = true;
                continue;
            }
            let (target, body) = if let Some(b) = tok.strip_prefix('I') {
                (&mut i_part, b)
            } else if let Some(b) = tok.strip_prefix('L') {
                (&mut l_part, b)
            } else {
                return Err(bad());
            };
            let inner = body
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(bad)?;
            for p in inner.split(',') {
                let n: u32 = p.trim().parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(bad());
                }
                target.push(n);
            }
        }
        if !saw_v {
            return Err(bad());
        }
        let m = ZMonomial { i_part, l_part };
        if m != ZMonomial::new(m.i_part.clone(), m.l_part.clone()) {
            return Err(bad());
        }
        Ok(m)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, name: &str, xs: &[T]) -> fmt::Result {
    if xs.is_empty() {
        return Ok(());
    }
    write!(f, "{name}[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("] ")
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, "I", &self.i_part)?;
        write_list(f, "L", &self.l_part)?;
        f.write_str("v")
    }
}

fn lowering_magnitude(g: &Generator) -> Option<u32> {
    g.index().and_then(|a| {
        let c = a.coords()[0];
        (c < 0).then_some((-c) as u32)
    })
}

impl PbwMonomial for ZMonomial {
    fn vacuum() -> Self {
        ZMonomial::default()
    }

    fn split_first(&self) -> Option<(Generator, Self)> {
        if let Some((&n, rest)) = self.i_part.split_first() {
            let m = ZMonomial {
                i_part: rest.to_vec(),
                l_part: self.l_part.clone(),
            };
            return Some((Generator::i(-(n as i64)), m));
        }
        let (&n, rest) = self.l_part.split_first()?;
        Some((
            Generator::l(-(n as i64)),
            ZMonomial {
                i_part: Vec::new(),
                l_part: rest.to_vec(),
            },
        ))
    }

    fn prepend(&self, g: &Generator, _group: &GroupSpec) -> Option<Self> {
        let k = lowering_magnitude(g)?;
        match g {
            Generator::I(_) if self.i_part.first().is_none_or(|&n| k >= n) => {
                let mut i_part = Vec::with_capacity(self.i_part.len() + 1);
                i_part.push(k);
                i_part.extend_from_slice(&self.i_part);
                Some(ZMonomial {
                    i_part,
                    l_part: self.l_part.clone(),
                })
            }
            Generator::L(_)
                if self.i_part.is_empty() && self.l_part.first().is_none_or(|&m| k >= m) =>
            {
                let mut l_part = Vec::with_capacity(self.l_part.len() + 1);
                l_part.push(k);
                l_part.extend_from_slice(&self.l_part);
                Some(ZMonomial {
                    i_part: Vec::new(),
                    l_part,
                })
            }
            _ => None,
        }
    }

    fn supports(spec: &AlgebraSpec) -> bool {
        spec.group().is_integers()
    }
}

/// `L_{-a_1}…L_{-a_r} I_{-b_1}…I_{-b_s} v` for G-vectors `a`, `b`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GMonomial {
    pub l_vec: GVector,
    pub i_vec: GVector,
}

impl GMonomial {
    pub fn new(l_vec: GVector, i_vec: GVector) -> Self {
        GMonomial { l_vec, i_vec }
    }

    /// Filtration level `|a|`.
    pub fn level(&self) -> usize {
        self.l_vec.len()
    }

    pub fn parse(spec: &GroupSpec, text: &str) -> Result<Self, VermaError> {
        let bad = || VermaError::Parse(text.to_owned());
        let t = text.trim().strip_suffix('v').ok_or_else(bad)?.trim();
        let mut l_vec = GVector::empty();
        let mut i_vec = GVector::empty();
        let mut rest = t;
        while !rest.is_empty() {
            let kind = &rest[..1];
            let close = rest.find(']').ok_or_else(bad)?;
            let body = rest[1..close].strip_prefix('[').ok_or_else(bad)?;
            let mut entries = Vec::new();
            for tuple in body.split(')').map(str::trim).filter(|s| !s.is_empty()) {
                let tuple = tuple
                    .trim_start_matches(',')
                    .trim()
                    .strip_prefix('(')
                    .ok_or_else(bad)?;
                let coords = tuple
                    .split(',')
                    .map(|c| c.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad())?;
                entries.push(GroupElement::new(coords));
            }
            let v = GVector::new(spec, entries)?;
            match kind {
                "L" if l_vec.is_empty() && i_vec.is_empty() => l_vec = v,
                "I" if i_vec.is_empty() => i_vec = v,
                _ => return Err(bad()),
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(GMonomial { l_vec, i_vec })
    }
}

fn write_gvec(f: &mut fmt::Formatter<'_>, name: &str, v: &GVector) -> fmt::Result {
    if v.is_empty() {
        return Ok(());
    }
    write!(f, "{name}[")?;
    for (i, e) in v.entries().iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str("(")?;
        for (j, c) in e.coords().iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")?;
    }
    f.write_str("] ")
}

impl fmt::Display for GMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_gvec(f, "L", &self.l_vec)?;
        write_gvec(f, "I", &self.i_vec)?;
        f.write_str("v")
    }
}

impl PbwMonomial for GMonomial {
    fn vacuum() -> Self {
        GMonomial::default()
    }

    fn split_first(&self) -> Option<(Generator, Self)> {
        if let Some(a) = self.l_vec.first() {
            return Some((
                Generator::L(a.neg()),
                GMonomial {
                    l_vec: self.l_vec.tail(),
                    i_vec: self.i_vec.clone(),
                },
            ));
        }
        let b = self.i_vec.first()?;
        Some((
            Generator::I(b.neg()),
            GMonomial {
                l_vec: GVector::empty(),
                i_vec: self.i_vec.tail(),
            },
        ))
    }

    fn prepend(&self, g: &Generator, group: &GroupSpec) -> Option<Self> {
        match g {
            Generator::L(x) => {
                let a = x.neg();
                let ok = self
                    .l_vec
                    .first()
                    .is_none_or(|a1| group.cmp_unchecked(&a, a1) != Ordering::Less);
                ok.then(|| GMonomial {
                    l_vec: self.l_vec.prepend(a),
                    i_vec: self.i_vec.clone(),
                })
            }
            Generator::I(x) => {
                let b = x.neg();
                let ok = self.l_vec.is_empty()
                    && self
                        .i_vec
                        .first()
                        .is_none_or(|b1| group.cmp_unchecked(&b, b1) != Ordering::Less);
                ok.then(|| GMonomial {
                    l_vec: GVector::empty(),
                    i_vec: self.i_vec.prepend(b),
                })
            }
            _ => None,
        }
    }

    fn supports(_spec: &AlgebraSpec) -> bool {
        true
    }
}

/// Finite linear combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector<M: PbwMonomial> {
    terms: BTreeMap<M, Scalar>,
}

impl<M: PbwMonomial> Default for ModuleVector<M> {
    fn default() -> Self {
        ModuleVector {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: PbwMonomial> ModuleVector<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(M::vacuum())
    }

    pub fn monomial(m: M) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, Scalar::one());
        ModuleVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, other: &ModuleVector<M>, k: &Scalar) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * k);
        }
    }

    pub fn add(&self, other: &ModuleVector<M>) -> ModuleVector<M> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &ModuleVector<M>) -> ModuleVector<M> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::int(-1));
        out
    }

    pub fn scale(&self, k: &Scalar) -> ModuleVector<M> {
        let mut out = ModuleVector::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (M, Scalar)>) -> Self {
        let mut out = ModuleVector::zero();
        for (m, c) in pairs {
            out.add_term(m, c);
        }
        out
    }

    /// `[(coefficient, monomial), …]`.
    pub fn to_json(&self) -> Vec<(String, String)> {
        self.terms
            .iter()
            .map(|(m, c)| (c.to_string(), m.to_string()))
            .collect()
    }
}

/// JSON form of a module vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleVectorJson(pub Vec<(String, String)>);

/// A Verma module `M(μ)` of the given monomial flavor.
///
/// Generator actions on monomials are memoized; the cache is internally
/// synchronized so a module can be shared between threads.
pub struct VermaModule<M: PbwMonomial> {
    spec: AlgebraSpec,
    weight: Weight,
    cache: Mutex<HashMap<(Generator, M), ModuleVector<M>>>,
}

/// The rank-one module with integer-partition monomials.
pub type RankOneModule = VermaModule<ZMonomial>;
/// The general module over any supported `G`.
pub type GeneralModule = VermaModule<GMonomial>;

impl<M: PbwMonomial> VermaModule<M> {
    pub fn new(spec: AlgebraSpec, weight: Weight) -> Result<Self, VermaError> {
        if !M::supports(&spec) {
            return Err(VermaError::NeedsRankOne);
        }
        // Re-validate against this spec.
        let weight = Weight::new(&spec, weight.values)?;
        Ok(VermaModule {
            spec,
            weight,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// Action of a generator on a vector, rewritten into the PBW basis.
    pub fn act(&self, g: &Generator, w: &ModuleVector<M>) -> Result<ModuleVector<M>, VermaError> {
        self.spec.check_generator(g)?;
        Ok(self.apply(g, w))
    }

    /// Applies `xs` right to left: the last generator acts first.
    pub fn act_word(
        &self,
        xs: &[Generator],
        w: &ModuleVector<M>,
    ) -> Result<ModuleVector<M>, VermaError> {
        for g in xs {
            self.spec.check_generator(g)?;
        }
        Ok(xs
            .iter()
            .rev()
            .fold(w.clone(), |acc, g| self.apply(g, &acc)))
    }

    pub fn act_lie(
        &self,
        x: &LieElement,
        w: &ModuleVector<M>,
    ) -> Result<ModuleVector<M>, VermaError> {
        let mut out = ModuleVector::zero();
        for (g, c) in x.terms() {
            out.add_scaled(&self.act(g, w)?, c);
        }
        Ok(out)
    }

    pub(crate) fn apply(&self, g: &Generator, w: &ModuleVector<M>) -> ModuleVector<M> {
        let mut out = ModuleVector::zero();
        for (m, c) in w.terms() {
            out.add_scaled(&self.apply_monomial(g, m), c);
        }
        out
    }

    fn apply_lie(&self, x: &LieElement, m: &M) -> ModuleVector<M> {
        let mut out = ModuleVector::zero();
        for (g, c) in x.terms() {
            out.add_scaled(&self.apply_monomial(g, m), c);
        }
        out
    }

    fn apply_monomial(&self, g: &Generator, m: &M) -> ModuleVector<M> {
        if g.is_central() {
            let slot = Slot::of_generator(g).expect("central generators have slots");
            return ModuleVector::monomial(m.clone()).scale(&self.weight.get(slot));
        }
        let key = (g.clone(), m.clone());
        if let Some(hit) = self.cache.lock().expect("action cache poisoned").get(&key) {
            return hit.clone();
        }
        let result = self.straighten(g, m);
        self.cache
            .lock()
            .expect("action cache poisoned")
            .insert(key, result.clone());
        result
    }

    fn straighten(&self, g: &Generator, m: &M) -> ModuleVector<M> {
        let group = self.spec.group();
        let index = g.index().expect("non-central");
        let lowering = group.sign(index) == Ordering::Less;
        if lowering {
            if let Some(m2) = m.prepend(g, group) {
                return ModuleVector::monomial(m2);
            }
        }
        match m.split_first() {
            None => match Slot::of_generator(g) {
                Some(slot) => ModuleVector::vacuum().scale(&self.weight.get(slot)),
                None => ModuleVector::zero(),
            },
            Some((y, rest)) => {
                // x·y·w = y·(x·w) + [x, y]·w
                let inner = self.apply_monomial(g, &rest);
                let mut out = self.apply(&y, &inner);
                let comm = self.spec.bracket_gen(g, &y);
                out.add_scaled(&self.apply_lie(&comm, &rest), &Scalar::one());
                out
            }
        }
    }
}

impl RankOneModule {
    pub fn rank_one(spec: AlgebraSpec, weight: Weight) -> Result<Self, VermaError> {
        VermaModule::new(spec, weight)
    }
}

/// Basis order on a graded piece: fewer total `I`-degree is larger; then
/// larger `I`-partition is larger; then *smaller* `L`-partition is larger.
pub fn basis_order(u: &ZMonomial, w: &ZMonomial) -> Ordering {
    match w.i_sum().cmp(&u.i_sum()) {
        Ordering::Equal => {}
        o => return o,
    }
    match partition_compare(&u.i_part, &w.i_part) {
        Ordering::Equal => {}
        o => return o,
    }
    partition_compare(&w.l_part, &u.l_part)
}

/// PBW basis of the grade-`n` piece, in ascending [`basis_order`].
pub fn grade_basis(n: u32) -> Vec<ZMonomial> {
    let mut out = Vec::new();
    for k in 0..=n {
        for ip in partitions(k) {
            for lp in partitions(n - k) {
                out.push(ZMonomial {
                    i_part: ip.clone(),
                    l_part: lp,
                });
            }
        }
    }
    out.sort_by(basis_order);
    out
}

/// Largest `|a|` over the support; `None` for the zero vector.
pub fn filtration_level(w: &ModuleVector<GMonomial>) -> Option<usize> {
    w.terms().map(|(m, _)| m.level()).max()
}

/// Formal partial derivative of an `I`-only monomial with respect to `I_{-k}`.
pub fn i_derivative(m: &ZMonomial, k: u32) -> ModuleVector<ZMonomial> {
    let count = m.i_part.iter().filter(|&&n| n == k).count();
    if count == 0 {
        return ModuleVector::zero();
    }
    let mut i_part = m.i_part.clone();
    let pos = i_part.iter().position(|&n| n == k).unwrap();
    i_part.remove(pos);
    ModuleVector::from_terms([(
        ZMonomial {
            i_part,
            l_part: m.l_part.clone(),
        },
        Scalar::int(count as i64),
    )])
}

/// Total `I`-content of a general monomial, as a group element; used to
/// order probe vectors.
pub fn g_weight(spec: &GroupSpec, m: &GMonomial) -> GroupElement {
    m.l_vec.total(spec.rank()).add(&m.i_vec.total(spec.rank()))
}

/// Compares two G-vectors; thin wrapper used by probes.
pub fn gvector_cmp(spec: &GroupSpec, a: &GVector, b: &GVector) -> Ordering {
    gvec_compare(spec, a, b)
}
