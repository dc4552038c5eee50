//! Exact ordered-field arithmetic.
//!
//! Every value is either a rational number or an element `a + b√k` of a real
//! quadratic extension `ℚ(√k)`. Values are kept in canonical form after every
//! operation: rationals are reduced with a positive denominator, and an
//! extension element whose irrational part vanishes collapses to a plain
//! rational. Equality is therefore structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot mix elements of Q(sqrt {0}) and Q(sqrt {1})")]
    IncompatibleExtensions(u64, u64),
    #[error("square root of a negative element")]
    NegativeInput,
    #[error("square root of {value} is not representable in {mode}")]
    NotRepresentable { value: String, mode: FieldMode },
    #[error("extension radicand must be square-free and at least 2, got {0}")]
    InvalidRadicand(u64),
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}

/// Which concrete field the computation lives in.
///
/// The mode only matters where a result might leave the rationals: square
/// roots and parsing of user input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldMode {
    #[default]
    Rational,
    QuadExt(u64),
}

impl FieldMode {
    pub fn quad_ext(k: u64) -> Result<Self, FieldError> {
        check_radicand(k)?;
        Ok(FieldMode::QuadExt(k))
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Rational => f.write_str("rational"),
            FieldMode::QuadExt(k) => write!(f, "quadext:{k}"),
        }
    }
}

impl FromStr for FieldMode {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") {
            return Ok(FieldMode::Rational);
        }
        let k = s
            .strip_prefix("quadext:")
            .and_then(|k| k.parse::<u64>().ok())
            .ok_or_else(|| FieldError::Parse(s.to_string()))?;
        FieldMode::quad_ext(k)
    }
}

fn check_radicand(k: u64) -> Result<(), FieldError> {
    if k < 2 {
        return Err(FieldError::InvalidRadicand(k));
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= k {
        if k.is_multiple_of(p * p) {
            return Err(FieldError::InvalidRadicand(k));
        }
        p += 1;
    }
    Ok(())
}

/// An exact element of ℚ or of a real quadratic extension ℚ(√k).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    /// `a + b√k` with `b ≠ 0`.
    Quadratic {
        a: BigRational,
        b: BigRational,
        k: u64,
    },
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        FieldElement::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; panics when `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        FieldElement::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        FieldElement::Rational(r)
    }

    /// `a + b√k`, collapsing to a rational when `b = 0`.
    pub fn quadratic(a: BigRational, b: BigRational, k: u64) -> Result<Self, FieldError> {
        check_radicand(k)?;
        Ok(Self::quad_unchecked(a, b, k))
    }

    /// The element `√k` itself.
    pub fn sqrt_of(k: u64) -> Result<Self, FieldError> {
        Self::quadratic(BigRational::zero(), BigRational::one(), k)
    }

    fn quad_unchecked(a: BigRational, b: BigRational, k: u64) -> Self {
        if b.is_zero() {
            FieldElement::Rational(a)
        } else {
            FieldElement::Quadratic { a, b, k }
        }
    }

    /// Rational and irrational parts plus the radicand (`None` for rationals).
    pub fn parts(&self) -> (BigRational, BigRational, Option<u64>) {
        match self {
            FieldElement::Rational(r) => (r.clone(), BigRational::zero(), None),
            FieldElement::Quadratic { a, b, k } => (a.clone(), b.clone(), Some(*k)),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Quadratic { .. } => None,
        }
    }

    pub fn radicand(&self) -> Option<u64> {
        match self {
            FieldElement::Rational(_) => None,
            FieldElement::Quadratic { k, .. } => Some(*k),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FieldElement::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, FieldElement::Rational(r) if r.is_one())
    }

    /// Sign of the element as an ordering against zero.
    pub fn signum(&self) -> Ordering {
        match self {
            FieldElement::Rational(r) => r.cmp(&BigRational::zero()),
            FieldElement::Quadratic { a, b, k } => surd_sign(a, b, *k),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    fn common_radicand(&self, other: &Self) -> Result<Option<u64>, FieldError> {
        match (self.radicand(), other.radicand()) {
            (Some(k1), Some(k2)) if k1 != k2 => Err(FieldError::IncompatibleExtensions(k1, k2)),
            (Some(k), _) | (_, Some(k)) => Ok(Some(k)),
            (None, None) => Ok(None),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        if let (FieldElement::Rational(x), FieldElement::Rational(y)) = (self, other) {
            return Ok(FieldElement::Rational(x + y));
        }
        let k = self.common_radicand(other)?.expect("one operand is irrational");
        let (a1, b1, _) = self.parts();
        let (a2, b2, _) = other.parts();
        Ok(Self::quad_unchecked(a1 + a2, b1 + b2, k))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        if let (FieldElement::Rational(x), FieldElement::Rational(y)) = (self, other) {
            return Ok(FieldElement::Rational(x * y));
        }
        let k = self.common_radicand(other)?.expect("one operand is irrational");
        let (a1, b1, _) = self.parts();
        let (a2, b2, _) = other.parts();
        let kr = BigRational::from_integer(BigInt::from(k));
        let a = &a1 * &a2 + &b1 * &b2 * kr;
        let b = a1 * b2 + b1 * a2;
        Ok(Self::quad_unchecked(a, b, k))
    }

    pub fn checked_recip(&self) -> Result<Self, FieldError> {
        match self {
            FieldElement::Rational(r) if r.is_zero() => Err(FieldError::DivisionByZero),
            FieldElement::Rational(r) => Ok(FieldElement::Rational(r.recip())),
            FieldElement::Quadratic { a, b, k } => {
                // (a + b√k)⁻¹ = (a − b√k) / (a² − k b²); the norm is nonzero
                // because k is not a rational square.
                let norm = a * a - b * b * BigRational::from_integer(BigInt::from(*k));
                Ok(Self::quad_unchecked(a / &norm, -(b / &norm), *k))
            }
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.common_radicand(other)?;
        self.checked_mul(&other.checked_recip()?)
    }

    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, FieldError> {
        Ok(self.checked_sub(other)?.signum())
    }

    /// Exact square root in the given field, if it exists there.
    ///
    /// Returns the non-negative root.
    pub fn sqrt_exact(&self, mode: FieldMode) -> Result<Self, FieldError> {
        if self.is_negative() {
            return Err(FieldError::NegativeInput);
        }
        let not_representable = || FieldError::NotRepresentable {
            value: self.to_string(),
            mode,
        };
        match self {
            FieldElement::Rational(r) => {
                if let Some(s) = rational_sqrt(r) {
                    return Ok(FieldElement::Rational(s));
                }
                match mode {
                    FieldMode::QuadExt(k) => {
                        let kr = BigRational::from_integer(BigInt::from(k));
                        let s = rational_sqrt(&(r / kr)).ok_or_else(not_representable)?;
                        Ok(Self::quad_unchecked(BigRational::zero(), s, k))
                    }
                    FieldMode::Rational => Err(not_representable()),
                }
            }
            FieldElement::Quadratic { a, b, k } => {
                match mode {
                    FieldMode::QuadExt(m) if m == *k => {}
                    FieldMode::QuadExt(m) => return Err(FieldError::IncompatibleExtensions(*k, m)),
                    FieldMode::Rational => return Err(not_representable()),
                }
                // (c + d√k)² = (c² + k d²) + 2cd√k, so c² is a root of
                // u² − a u + k b²/4 = 0.
                let kr = BigRational::from_integer(BigInt::from(*k));
                let disc = a * a - b * b * &kr;
                let s = rational_sqrt(&disc).ok_or_else(not_representable)?;
                let two = BigRational::from_integer(BigInt::from(2));
                for u in [(a + &s) / &two, (a - &s) / &two] {
                    if u.is_positive() {
                        if let Some(c) = rational_sqrt(&u) {
                            let d = b / (&two * &c);
                            let root = Self::quad_unchecked(c, d, *k);
                            return Ok(if root.is_negative() { -root } else { root });
                        }
                    }
                }
                Err(not_representable())
            }
        }
    }
}

/// Sign of `a + b√k` decided by comparing squares.
fn surd_sign(a: &BigRational, b: &BigRational, k: u64) -> Ordering {
    let sa = a.cmp(&BigRational::zero());
    let sb = b.cmp(&BigRational::zero());
    match (sa, sb) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (x, y) if x == y => x,
        _ => {
            let kr = BigRational::from_integer(BigInt::from(k));
            let a2 = a * a;
            let bk2 = b * b * kr;
            // a² ≠ k b² since k is not a rational square.
            if sa == Ordering::Greater {
                a2.cmp(&bk2)
            } else {
                bk2.cmp(&a2)
            }
        }
    }
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(BigRational::new(n, d))
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order within one extension. Panics when comparing elements of two
/// different extensions; use [`FieldElement::try_cmp`] to get an error.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.try_cmp(other).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Quadratic { a, b, k } => FieldElement::Quadratic { a: -a, b: -b, k: *k },
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $checked:ident) => {
        impl $imp<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $imp<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $imp<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

// The operator forms panic on division by zero or mixed extensions, like the
// integer operators of std. The `checked_*` methods report those as errors.
forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl From<BigRational> for FieldElement {
    fn from(r: BigRational) -> Self {
        FieldElement::Rational(r)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{r}"),
            FieldElement::Quadratic { a, b, k } => {
                if b.is_negative() {
                    write!(f, "{a}-{}√{k}", -b)
                } else {
                    write!(f, "{a}+{b}√{k}")
                }
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.strip_prefix('+').unwrap_or(n).parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for FieldElement {
    type Err = FieldError;

    /// Accepts `n`, `n/d`, `a+b√k`, `a-b√k` and `b√k` (with `b` optionally
    /// omitted, as in `√2` or `-√2`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FieldError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(root_at) = t.find('√') else {
            return parse_rational(&t).map(FieldElement::Rational).ok_or_else(err);
        };
        let k: u64 = t[root_at + '√'.len_utf8()..].parse().map_err(|_| err())?;
        let head = &t[..root_at];
        // The surd term starts at the last sign that is not a leading sign.
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (a_str, b_str) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("0", head),
        };
        let a = parse_rational(a_str).ok_or_else(err)?;
        let b = match b_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other).ok_or_else(err)?,
        };
        FieldElement::quadratic(a, b, k)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
