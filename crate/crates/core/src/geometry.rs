//! Points of F^d, the Euclidean and Minkowski products, and the eight
//! spacetime relations as exact predicates.
//!
//! Coordinate 0 is the time component; coordinates `1..d` are spatial.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::FieldElement;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointVec(Vec<FieldElement>);

impl PointVec {
    /// Builds a point, rejecting dimensions below 2.
    pub fn new(coords: Vec<FieldElement>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionTooSmall(coords.len()));
        }
        Ok(PointVec(coords))
    }

    pub(crate) fn from_coords(coords: Vec<FieldElement>) -> Self {
        PointVec(coords)
    }

    /// Convenience constructor from small integer ratios `(num, den)`.
    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        PointVec(coords.iter().map(|&(n, d)| FieldElement::ratio(n, d)).collect())
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        PointVec(coords.iter().map(|&n| FieldElement::from_int(n)).collect())
    }

    pub fn origin(d: usize) -> Self {
        PointVec(vec![FieldElement::zero(); d])
    }

    /// Unit vector along axis `i` (0-based; axis 0 is time).
    pub fn unit(d: usize, i: usize) -> Self {
        let mut coords = vec![FieldElement::zero(); d];
        coords[i] = FieldElement::one();
        PointVec(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<FieldElement> {
        self.0
    }

    pub fn time(&self) -> &FieldElement {
        &self.0[0]
    }

    pub fn spatial(&self) -> &[FieldElement] {
        &self.0[1..]
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(FieldElement::is_zero)
    }

    pub fn scale(&self, c: &FieldElement) -> PointVec {
        PointVec(self.0.iter().map(|x| c * x).collect())
    }

    pub fn checked_add(&self, other: &PointVec) -> Result<PointVec> {
        same_dim(self, other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &PointVec) -> Result<PointVec> {
        same_dim(self, other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &PointVec, f: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> PointVec {
        PointVec(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect())
    }
}

impl fmt::Display for PointVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

// Operator forms panic on dimension mismatch; the checked methods do not.
impl Add for &PointVec {
    type Output = PointVec;
    fn add(self, rhs: &PointVec) -> PointVec {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &PointVec {
    type Output = PointVec;
    fn sub(self, rhs: &PointVec) -> PointVec {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &PointVec {
    type Output = PointVec;
    fn neg(self) -> PointVec {
        PointVec(self.0.iter().map(|x| -x).collect())
    }
}

fn same_dim(p: &PointVec, q: &PointVec) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    Ok(())
}

/// The two symmetric bilinear products on F^d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProductForm {
    Euclid,
    Minkowski,
}

impl ProductForm {
    pub const ALL: [ProductForm; 2] = [ProductForm::Euclid, ProductForm::Minkowski];

    pub fn eval(self, p: &PointVec, q: &PointVec) -> Result<FieldElement> {
        match self {
            ProductForm::Euclid => dot(p, q),
            ProductForm::Minkowski => mink(p, q),
        }
    }

    /// `e_i ⊗ e_j`.
    pub fn unit_product(self, i: usize, j: usize) -> FieldElement {
        match (self, i == j) {
            (_, false) => FieldElement::zero(),
            (ProductForm::Minkowski, true) if i > 0 => FieldElement::from_int(-1),
            (_, true) => FieldElement::one(),
        }
    }
}

/// Euclidean scalar product `p₁q₁ + … + p_d q_d`.
pub fn dot(p: &PointVec, q: &PointVec) -> Result<FieldElement> {
    same_dim(p, q)?;
    Ok(dot_unchecked(p, q))
}

pub(crate) fn dot_unchecked(p: &PointVec, q: &PointVec) -> FieldElement {
    p.0.iter()
        .zip(&q.0)
        .fold(FieldElement::zero(), |acc, (a, b)| acc + a * b)
}

/// Minkowski product `p₁q₁ − p₂q₂ − … − p_d q_d`.
pub fn mink(p: &PointVec, q: &PointVec) -> Result<FieldElement> {
    same_dim(p, q)?;
    Ok(mink_unchecked(p, q))
}

pub(crate) fn mink_unchecked(p: &PointVec, q: &PointVec) -> FieldElement {
    let time = &p.0[0] * &q.0[0];
    p.0[1..].iter().zip(&q.0[1..]).fold(time, |acc, (a, b)| acc - a * b)
}

/// Squared distance `(p − q) ⊗ (p − q)`.
pub fn sq_dist(form: ProductForm, p: &PointVec, q: &PointVec) -> Result<FieldElement> {
    let v = p.checked_sub(q)?;
    form.eval(&v, &v)
}

/// Recovers `p ⊗ q` from squared distances alone:
/// `(d²(p, o) + d²(q, o) − d²(p, q)) / 2`.
pub fn product_from_sqdist(form: ProductForm, p: &PointVec, q: &PointVec) -> Result<FieldElement> {
    same_dim(p, q)?;
    let o = PointVec::origin(p.dim());
    let sum = sq_dist(form, p, &o)? + sq_dist(form, q, &o)? - sq_dist(form, p, q)?;
    Ok(sum / FieldElement::from_int(2))
}

/// `q` lies on the closed segment from `p` to `r`.
pub fn betweenness(p: &PointVec, q: &PointVec, r: &PointVec) -> Result<bool> {
    same_dim(p, q)?;
    same_dim(p, r)?;
    // A single index fixes λ; all other components are then verified.
    let Some(i) = (0..p.dim()).find(|&i| p.0[i] != r.0[i]) else {
        return Ok(q == p);
    };
    let lambda = (&q.0[i] - &p.0[i]) / (&r.0[i] - &p.0[i]);
    if lambda.is_negative() || lambda > FieldElement::one() {
        return Ok(false);
    }
    Ok((0..p.dim()).all(|j| q.0[j] == &p.0[j] + &lambda * (&r.0[j] - &p.0[j])))
}

/// Membership in the time axis `T = {(t, 0, …, 0)}`.
pub fn in_time_axis(p: &PointVec) -> bool {
    p.spatial().iter().all(FieldElement::is_zero)
}

/// Membership in the simultaneity hyperplane through the origin, `S = {p : p₁ = 0}`.
pub fn in_sim_origin(p: &PointVec) -> bool {
    p.time().is_zero()
}

/// The eight relations on F^d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationId {
    /// Betweenness.
    Bw,
    /// Absolute simultaneity.
    S,
    /// Being at rest.
    Rest,
    /// Lightlike relatedness.
    Lambda,
    /// Euclidean congruence of segments.
    CongE,
    /// Minkowski congruence of segments.
    CongMu,
    /// Congruence on simultaneity.
    CongS,
    /// `δ(p, q, r) ⟺ p S q ∧ p λ r`.
    Delta,
}

impl RelationId {
    pub const ALL: [RelationId; 8] = [
        RelationId::Bw,
        RelationId::S,
        RelationId::Rest,
        RelationId::Lambda,
        RelationId::CongE,
        RelationId::CongMu,
        RelationId::CongS,
        RelationId::Delta,
    ];

    /// The seven relations that separate the geometries, in table order.
    pub const CONCEPT_ROWS: [RelationId; 7] = [
        RelationId::CongE,
        RelationId::CongMu,
        RelationId::Lambda,
        RelationId::CongS,
        RelationId::S,
        RelationId::Rest,
        RelationId::Delta,
    ];

    pub fn arity(self) -> usize {
        match self {
            RelationId::S | RelationId::Rest | RelationId::Lambda => 2,
            RelationId::Bw | RelationId::Delta => 3,
            RelationId::CongE | RelationId::CongMu | RelationId::CongS => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RelationId::Bw => "Bw",
            RelationId::S => "S",
            RelationId::Rest => "Rest",
            RelationId::Lambda => "Lambda",
            RelationId::CongE => "CongE",
            RelationId::CongMu => "CongMu",
            RelationId::CongS => "CongS",
            RelationId::Delta => "Delta",
        }
    }

    /// Conventional mathematical symbol, used in the rendered table.
    pub fn symbol(self) -> &'static str {
        match self {
            RelationId::Bw => "Bw",
            RelationId::S => "S",
            RelationId::Rest => "Rest",
            RelationId::Lambda => "λ",
            RelationId::CongE => "≡",
            RelationId::CongMu => "≡_μ",
            RelationId::CongS => "≡_S",
            RelationId::Delta => "δ",
        }
    }

    pub(crate) fn index(self) -> u64 {
        RelationId::ALL.iter().position(|&r| r == self).unwrap() as u64
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_alphanumeric())
            .collect::<String>()
            .to_lowercase();
        let rel = match key.as_str() {
            "bw" | "betweenness" => RelationId::Bw,
            "s" | "simultaneity" => RelationId::S,
            "rest" => RelationId::Rest,
            "lambda" | "λ" | "lightlike" => RelationId::Lambda,
            "conge" | "cong" | "congruence" => RelationId::CongE,
            "congmu" | "congμ" | "minkcong" => RelationId::CongMu,
            "congs" => RelationId::CongS,
            "delta" | "δ" => RelationId::Delta,
            _ => return Err(format!("unknown relation {s:?}")),
        };
        Ok(rel)
    }
}

impl Serialize for RelationId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for RelationId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Evaluates `rel` on `args`.
pub fn eval_relation(rel: RelationId, args: &[PointVec]) -> Result<bool> {
    if args.len() != rel.arity() {
        return Err(Error::ArityMismatch {
            relation: rel,
            expected: rel.arity(),
            got: args.len(),
        });
    }
    for a in &args[1..] {
        same_dim(&args[0], a)?;
    }
    let sq = |form, p: &PointVec, q: &PointVec| {
        let v = p - q;
        match form {
            ProductForm::Euclid => dot_unchecked(&v, &v),
            ProductForm::Minkowski => mink_unchecked(&v, &v),
        }
    };
    let simultaneous = |p: &PointVec, q: &PointVec| p.time() == q.time();
    let lightlike = |p: &PointVec, q: &PointVec| sq(ProductForm::Minkowski, p, q).is_zero();
    let holds = match rel {
        RelationId::Bw => betweenness(&args[0], &args[1], &args[2])?,
        RelationId::S => simultaneous(&args[0], &args[1]),
        RelationId::Rest => args[0].spatial() == args[1].spatial(),
        RelationId::Lambda => {
            // (p₁ − q₁)² = Σ (pᵢ − qᵢ)², evaluated literally.
            let v = &args[0] - &args[1];
            let t2 = v.time() * v.time();
            let s2 = v.spatial().iter().fold(FieldElement::zero(), |acc, x| acc + x * x);
            t2 == s2
        }
        RelationId::CongE => sq(ProductForm::Euclid, &args[0], &args[1]) == sq(ProductForm::Euclid, &args[2], &args[3]),
        RelationId::CongMu => {
            sq(ProductForm::Minkowski, &args[0], &args[1]) == sq(ProductForm::Minkowski, &args[2], &args[3])
        }
        RelationId::CongS => {
            simultaneous(&args[0], &args[1])
                && simultaneous(&args[2], &args[3])
                && sq(ProductForm::Euclid, &args[0], &args[1]) == sq(ProductForm::Euclid, &args[2], &args[3])
        }
        RelationId::Delta => simultaneous(&args[0], &args[1]) && lightlike(&args[0], &args[2]),
    };
    Ok(holds)
}
