//! The index group `G`: a free abelian group of finite rank embedded in a
//! real quadratic field, with a total order compatible with addition.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::exact::{ExactError, Number, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("group element has {got} coordinates, group rank is {rank}")]
    RankMismatch { rank: usize, got: usize },
    #[error("group rank must be positive")]
    EmptyBasis,
    #[error("basis values are linearly dependent over Q")]
    DependentBasis,
    #[error("basis value `{0}` is not a real rational or quadratic number")]
    BadBasisValue(String),
    #[error("embedding order is only supported up to rank 2 (got rank {0})")]
    UnsupportedRank(usize),
    #[error("G-vector entries must be strictly positive and non-increasing")]
    NotCanonical,
    #[error("unknown order kind `{0}`")]
    UnknownOrder(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// Order by the real value of the embedding.
    Embedding,
    /// Lexicographic order on coordinates.
    Lex,
}

/// Element of `G` as integer coordinates over the fixed basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    coords: SmallVec<[i64; 2]>,
}

impl GroupElement {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        GroupElement {
            coords: coords.into_iter().collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        GroupElement {
            coords: SmallVec::from_elem(0, rank),
        }
    }

    /// Rank-one element `n`.
    pub fn int(n: i64) -> Self {
        GroupElement::new([n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        GroupElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupElement {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        GroupElement {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Classification of a compatible total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderClass {
    Dense,
    /// Discrete, with the unique minimal positive element.
    Discrete(GroupElement),
}

/// A free abelian group `G = Z·e_1 ⊕ … ⊕ Z·e_ν ⊂ R` with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    basis: Vec<Number>,
    order: OrderKind,
}

impl GroupSpec {
    pub fn new(basis: Vec<Number>, order: OrderKind) -> Result<Self, GradingError> {
        if basis.is_empty() {
            return Err(GradingError::EmptyBasis);
        }
        let mut tag = None;
        for b in &basis {
            if let Some(m) = b.field_tag() {
                match tag {
                    Some(t) if t != m => return Err(ExactError::FieldMismatch(t, m).into()),
                    _ => tag = Some(m),
                }
            }
        }
        match basis.len() {
            1 if basis[0].is_zero() => return Err(GradingError::DependentBasis),
            2 => {
                if basis[1].is_zero() {
                    return Err(GradingError::DependentBasis);
                }
                // Q-independent iff the ratio is irrational.
                if basis[0].try_div(&basis[1])?.field_tag().is_none() {
                    return Err(GradingError::DependentBasis);
                }
            }
            _ => {}
        }
        Ok(GroupSpec { basis, order })
    }

    /// `G = Z` with its usual order.
    pub fn integers() -> Self {
        GroupSpec {
            basis: vec![Number::one()],
            order: OrderKind::Embedding,
        }
    }

    /// Rank-one group `Z·e` ordered by value.
    pub fn cyclic(generator: Number) -> Result<Self, GradingError> {
        GroupSpec::new(vec![generator], OrderKind::Embedding)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Number] {
        &self.basis
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    /// The quadratic field shared by all basis values, if any.
    pub fn field_tag(&self) -> Option<u64> {
        self.basis.iter().find_map(|b| b.field_tag())
    }

    pub fn is_integers(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn check(&self, g: &GroupElement) -> Result<(), GradingError> {
        if g.rank() == self.rank() {
            Ok(())
        } else {
            Err(GradingError::RankMismatch {
                rank: self.rank(),
                got: g.rank(),
            })
        }
    }

    pub fn element(
        &self,
        coords: impl IntoIterator<Item = i64>,
    ) -> Result<GroupElement, GradingError> {
        let g = GroupElement::new(coords);
        self.check(&g)?;
        Ok(g)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement::zero(self.rank())
    }

    /// The complex (here real) number `Σ coords_i · e_i`.
    pub fn value(&self, g: &GroupElement) -> Number {
        let mut acc = Number::zero();
        for (c, b) in g.coords().iter().zip(&self.basis) {
            if *c != 0 {
                let term = b
                    .try_mul(&Number::from(*c))
                    .expect("basis shares one field");
                acc = acc.try_add(&term).expect("basis shares one field");
            }
        }
        acc
    }

    pub fn value_scalar(&self, g: &GroupElement) -> Scalar {
        Scalar::from_number(self.value(g))
    }

    /// Sign of `g` under the order.
    pub fn sign(&self, g: &GroupElement) -> Ordering {
        match self.order {
            OrderKind::Embedding => self.value(g).sign().cmp(&0),
            OrderKind::Lex => g
                .coords()
                .iter()
                .find(|&&c| c != 0)
                .map_or(Ordering::Equal, |c| c.cmp(&0)),
        }
    }

    pub fn is_positive(&self, g: &GroupElement) -> bool {
        self.sign(g) == Ordering::Greater
    }

    /// Compares two elements; `Greater` means `a ≻ b`.
    pub fn compare(&self, a: &GroupElement, b: &GroupElement) -> Result<Ordering, GradingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(&self, a: &GroupElement, b: &GroupElement) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        self.sign(&a.sub(b))
    }

    pub fn classify(&self) -> Result<OrderClass, GradingError> {
        match (self.order, self.rank()) {
            (OrderKind::Lex, nu) => {
                let mut coords = vec![0; nu];
                coords[nu - 1] = 1;
                Ok(OrderClass::Discrete(GroupElement::new(coords)))
            }
            (OrderKind::Embedding, 1) => {
                let e = if self.basis[0].sign() > 0 { 1 } else { -1 };
                Ok(OrderClass::Discrete(GroupElement::int(e)))
            }
            // Independence was checked at construction.
            (OrderKind::Embedding, 2) => Ok(OrderClass::Dense),
            (OrderKind::Embedding, nu) => Err(GradingError::UnsupportedRank(nu)),
        }
    }

    pub fn to_json(&self) -> GroupSpecJson {
        GroupSpecJson {
            rank: self.rank(),
            basis: self.basis.iter().map(|b| b.to_string()).collect(),
            order: self.order,
        }
    }

    pub fn from_json(j: &GroupSpecJson) -> Result<Self, GradingError> {
        if j.basis.len() != j.rank {
            return Err(GradingError::RankMismatch {
                rank: j.rank,
                got: j.basis.len(),
            });
        }
        let mut basis = Vec::with_capacity(j.rank);
        for text in &j.basis {
            let s: Scalar = text.parse()?;
            let n = s
                .as_number()
                .ok_or_else(|| GradingError::BadBasisValue(text.clone()))?;
            basis.push(n);
        }
        GroupSpec::new(basis, j.order)
    }
}

/// Serialized group description: `{"rank": 2, "basis": ["1", "sqrt(2)"], "order": "embedding"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpecJson {
    pub rank: usize,
    pub basis: Vec<String>,
    pub order: OrderKind,
}

/// A `G_+`-vector: a non-increasing sequence of positive group elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GVector {
    entries: Vec<GroupElement>,
}

impl GVector {
    pub fn empty() -> Self {
        GVector {
            entries: Vec::new(),
        }
    }

    /// Rejects input that is not already canonical.
    pub fn new(spec: &GroupSpec, entries: Vec<GroupElement>) -> Result<Self, GradingError> {
        for e in &entries {
            spec.check(e)?;
            if !spec.is_positive(e) {
                return Err(GradingError::NotCanonical);
            }
        }
        for w in entries.windows(2) {
            if spec.cmp_unchecked(&w[0], &w[1]) == Ordering::Less {
                return Err(GradingError::NotCanonical);
            }
        }
        Ok(GVector { entries })
    }

    /// Sorts and validates positivity.
    pub fn sorted(spec: &GroupSpec, mut entries: Vec<GroupElement>) -> Result<Self, GradingError> {
        entries.sort_by(|a, b| spec.cmp_unchecked(b, a));
        GVector::new(spec, entries)
    }

    pub fn entries(&self) -> &[GroupElement] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> Option<&GroupElement> {
        self.entries.first()
    }

    pub(crate) fn tail(&self) -> GVector {
        GVector {
            entries: self.entries[1..].to_vec(),
        }
    }

    pub(crate) fn prepend(&self, g: GroupElement) -> GVector {
        let mut entries = Vec::with_capacity(self.entries.len() + 1);
        entries.push(g);
        entries.extend_from_slice(&self.entries);
        GVector { entries }
    }

    /// Sum of the entries.
    pub fn total(&self, rank: usize) -> GroupElement {
        self.entries
            .iter()
            .fold(GroupElement::zero(rank), |acc, e| acc.add(e))
    }
}

/// Order on G-vectors: compare entrywise after padding the shorter one with
/// zeros; the first difference decides.
pub fn gvec_compare(spec: &GroupSpec, a: &GVector, b: &GVector) -> Ordering {
    let zero = spec.zero();
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.entries.get(i).unwrap_or(&zero);
        let y = b.entries.get(i).unwrap_or(&zero);
        match spec.cmp_unchecked(x, y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// An integer partition, parts in non-increasing order.
pub type Partition = Vec<u32>;

/// All partitions of `n`, each non-increasing.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Partition, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rem)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The G-vector order specialized to integer partitions.
pub fn partition_compare(a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// All `(I-partition, L-partition)` pairs of total size `n`.
pub fn enumerate_z_bases(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in 0..=n {
        let left = partitions(k);
        let right = partitions(n - k);
        for i in &left {
            for l in &right {
                out.push((i.clone(), l.clone()));
            }
        }
    }
    out
}
