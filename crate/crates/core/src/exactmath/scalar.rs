//! Elements of ℚ and ℚ(√d).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::MathError;

/// The field context of a computation: ℚ itself or ℚ(√d) for square-free `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Field {
    Q,
    Qsqrt { d: i64 },
}

fn is_square_free(d: i64) -> bool {
    let m = d.unsigned_abs();
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl Field {
    /// ℚ(√d); `d` must be square-free and different from 0 and 1.
    pub fn qsqrt(d: i64) -> Result<Field, MathError> {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(MathError::BadField(format!("{d} is not a square-free non-square")));
        }
        Ok(Field::Qsqrt { d })
    }

    pub fn radicand(&self) -> Option<i64> {
        match self {
            Field::Q => None,
            Field::Qsqrt { d } => Some(*d),
        }
    }

    /// The generator √d of the extension.
    pub fn sqrt_d(&self) -> Option<Scalar> {
        self.radicand().map(|d| Scalar::from_parts(Rational::ZERO, Rational::ONE, d))
    }

    /// √−1 if it lives in this field.
    pub fn sqrt_minus_one(&self) -> Option<Scalar> {
        match self {
            Field::Qsqrt { d: -1 } => self.sqrt_d(),
            _ => None,
        }
    }

    /// Whether `s` belongs to this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        s.d == 0 || Some(s.d) == self.radicand()
    }

    /// Smallest field containing both; fails when the radicands differ.
    pub fn join(&self, other: &Field) -> Result<Field, MathError> {
        match (self, other) {
            (Field::Q, f) | (f, Field::Q) => Ok(*f),
            (a, b) if a == b => Ok(*a),
            (Field::Qsqrt { d: a }, Field::Qsqrt { d: b }) => Err(MathError::FieldMismatch(*a, *b)),
        }
    }

    /// Parses the CLI spelling `Q` or `Qsqrt:<d>`.
    pub fn parse_cli(text: &str) -> Result<Field, MathError> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Q);
        }
        if let Some(rest) = t.strip_prefix("Qsqrt:") {
            let d: i64 = rest.trim().parse().map_err(|_| MathError::BadField(t.to_string()))?;
            return Field::qsqrt(d);
        }
        Err(MathError::BadField(t.to_string()))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Qsqrt { d } => write!(f, "Qsqrt:{d}"),
        }
    }
}

/// `a + b·√d`, canonical: `d == 0` exactly when `b == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: Rational,
    b: Rational,
    d: i64,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { a: Rational::ZERO, b: Rational::ZERO, d: 0 }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Scalar { a: Rational::from_int(n), b: Rational::ZERO, d: 0 }
    }

    pub fn frac(n: i64, m: i64) -> Self {
        Scalar { a: Rational::new(n, m), b: Rational::ZERO, d: 0 }
    }

    pub fn rational(a: Rational) -> Self {
        Scalar { a, b: Rational::ZERO, d: 0 }
    }

    /// `a + b√d`; a zero `b` drops the radical.
    pub fn from_parts(a: Rational, b: Rational, d: i64) -> Self {
        if b.is_zero() {
            Scalar { a, b, d: 0 }
        } else {
            Scalar { a, b, d }
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    /// The radicand this value actually uses (0 for rationals).
    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.a.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.d == 0 && self.a.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    fn common_d(&self, other: &Self) -> Result<i64, MathError> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(MathError::FieldMismatch(x, y)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MathError> {
        let d = self.common_d(other)?;
        Ok(Self::from_parts(self.a.add(&other.a), self.b.add(&other.b), d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, MathError> {
        let d = self.common_d(other)?;
        Ok(Self::from_parts(self.a.sub(&other.a), self.b.sub(&other.b), d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, MathError> {
        if self.d == 0 && other.d == 0 {
            return Ok(Self::rational(self.a.mul(&other.a)));
        }
        let d = self.common_d(other)?;
        if self.d == 0 {
            return Ok(Self::from_parts(self.a.mul(&other.a), self.a.mul(&other.b), d));
        }
        if other.d == 0 {
            return Ok(Self::from_parts(self.a.mul(&other.a), self.b.mul(&other.a), d));
        }
        let dd = Rational::from_int(d);
        let a = self.a.mul(&other.a).add(&self.b.mul(&other.b).mul(&dd));
        let b = self.a.mul(&other.b).add(&self.b.mul(&other.a));
        Ok(Self::from_parts(a, b, d))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.d == 0 {
            return Some(Self::rational(self.a.inv()));
        }
        // (a - b√d) / (a² - b²d); the norm is nonzero since d is not a square.
        let norm = self.a.mul(&self.a).sub(&self.b.mul(&self.b).mul(&Rational::from_int(self.d)));
        let ni = norm.inv();
        Some(Self::from_parts(self.a.mul(&ni), self.b.neg().mul(&ni), self.d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, MathError> {
        let inv = other.inv().ok_or(MathError::DivisionByZero)?;
        self.try_mul(&inv)
    }

    /// Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        Self::from_parts(self.a.clone(), self.b.neg(), self.d)
    }

    /// Text form: `n/d` or `n/d+n/d*r` (radical coefficient with explicit sign).
    pub fn to_text(&self) -> String {
        if self.d == 0 {
            return self.a.to_fraction_string();
        }
        let b = self.b.to_fraction_string();
        if self.b.is_negative() {
            format!("{}{}*r", self.a.to_fraction_string(), b)
        } else {
            format!("{}+{}*r", self.a.to_fraction_string(), b)
        }
    }

    /// Parses the text form against a field context. Accepts `n`, `n/d`,
    /// `a±c*r`, `c*r` and `r`; `r` denotes √d of the field.
    pub fn parse(text: &str, field: &Field) -> Result<Self, MathError> {
        let bad = || MathError::Parse(text.to_string());
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        if !t.ends_with('r') {
            return Rational::parse(&t).map(Self::rational).ok_or_else(bad);
        }
        let d = field.radicand().ok_or_else(|| MathError::Parse(format!("{text}: radical in Q context")))?;
        let body = &t[..t.len() - 1];
        // split at the last +/- that is not the leading sign
        let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let a = if re.is_empty() { Rational::ZERO } else { Rational::parse(re).ok_or_else(bad)? };
        let im = im.strip_suffix('*').unwrap_or(im);
        let b = match im {
            "" | "+" => Rational::ONE,
            "-" => Rational::ONE.neg(),
            s => Rational::parse(s.strip_prefix('+').unwrap_or(s)).ok_or_else(bad)?,
        };
        Ok(Self::from_parts(a, b, d))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 0 {
            return write!(f, "{}", self.a);
        }
        let rad = format!("√{}", self.d);
        let b = if self.b.is_one() {
            rad
        } else if self.b == Rational::ONE.neg() {
            format!("-{rad}")
        } else {
            format!("{}{rad}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{b}")
        } else if b.starts_with('-') {
            write!(f, "{}{b}", self.a)
        } else {
            write!(f, "{}+{b}", self.a)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::rational(r)
    }
}

// Operator traits panic on mixed radicands: every caller works inside one
// field context, so a mismatch is a logic error. The `try_*` methods report it.

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("scalar division failed")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: self.a.neg(), b: self.b.neg(), d: self.d }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}
