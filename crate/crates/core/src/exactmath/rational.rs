//! Rational numbers with an inline `i64` representation and a big-integer fallback.
//!
//! Almost every structure constant met in practice is a small fraction, so the
//! common path does its arithmetic in `i128` and only allocates when a reduced
//! result no longer fits in `i64`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A reduced fraction with positive denominator.
#[derive(Clone)]
pub enum Rational {
    /// numerator, denominator (> 0), coprime
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational::Small(0, 1);
    pub const ONE: Rational = Rational::Small(1, 1);

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn from_int(n: i64) -> Self {
        Rational::Small(n, 1)
    }

    /// Builds `n/d`, reducing to lowest terms. Panics when `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_i128(n as i128, d as i128)
    }

    fn from_i128(n: i128, d: i128) -> Self {
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        if n == 0 {
            return Self::ZERO;
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    /// Normalizes a big rational, demoting it to the inline form when possible.
    pub fn from_big(r: BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return Rational::Small(n, d);
        }
        Rational::Big(Box::new(r))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(n, _) => *n < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational::Small(m, *d),
                None => Self::from_i128(-(*n as i128), *d as i128),
            },
            Rational::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rational::Small(s, 1);
                    }
                }
                if b == d {
                    return Self::from_i128(*a as i128 + *c as i128, *b as i128);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Self::ZERO;
                }
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Rational::Small(p, 1);
                    }
                }
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => {
                if self.is_zero() || other.is_zero() {
                    return Self::ZERO;
                }
                Self::from_big(self.to_big() * other.to_big())
            }
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        match self {
            Rational::Small(n, d) => {
                assert!(*n != 0, "division by zero");
                Self::from_i128(*d as i128, *n as i128)
            }
            Rational::Big(b) => Self::from_big(b.recip()),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small(n, _) => n.signum() as i32,
            Rational::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    /// Parses `n` or `n/d` with an optional leading minus on the numerator.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        if den.starts_with('-') || den.starts_with('+') {
            return None;
        }
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(n, d)))
    }

    /// Canonical `n/d` text (the denominator is always written).
    pub fn to_fraction_string(&self) -> String {
        match self {
            Rational::Small(n, d) => format!("{n}/{d}"),
            Rational::Big(b) => format!("{}/{}", b.numer(), b.denom()),
        }
    }

    /// Numerator and denominator when both fit in `i64`.
    pub fn numer_denom_i64(&self) -> Option<(i64, i64)> {
        match self {
            Rational::Small(n, d) => Some((*n, *d)),
            Rational::Big(_) => None,
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => a == c && b == d,
            (Rational::Big(a), Rational::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rational::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Rational::Big(b) => {
                1u8.hash(state);
                b.numer().hash(state);
                b.denom().hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(Rational::new(2, -4), Rational::Small(-1, 2));
        assert_eq!(Rational::new(0, -7), Rational::ZERO);
        assert_eq!(Rational::new(6, 3), Rational::from_int(2));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let m = Rational::from_int(i64::MAX);
        let sq = m.mul(&m);
        assert!(matches!(sq, Rational::Big(_)));
        let back = sq.div(&m);
        assert_eq!(back, m);
        assert!(matches!(back, Rational::Small(..)));
        let neg_min = Rational::from_int(i64::MIN).neg();
        assert_eq!(neg_min.to_big(), BigRational::from_integer(-BigInt::from(i64::MIN)));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(Rational::parse("-3/6"), Some(Rational::new(-1, 2)));
        assert_eq!(Rational::parse("5"), Some(Rational::from_int(5)));
        assert_eq!(Rational::parse("1/-2"), None);
        assert_eq!(Rational::parse("1/0"), None);
        assert_eq!(Rational::new(-1, 2).to_fraction_string(), "-1/2");
        assert_eq!(Rational::from_int(3).to_fraction_string(), "3/1");
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in any::<i64>(), b in 1i64..i64::MAX, c in any::<i64>(), d in 1i64..i64::MAX) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x.add(&y).to_big(), big(a, b) + big(c, d));
            prop_assert_eq!(x.mul(&y).to_big(), big(a, b) * big(c, d));
            prop_assert_eq!(x.sub(&y).to_big(), big(a, b) - big(c, d));
            if c != 0 {
                prop_assert_eq!(x.div(&y).to_big(), big(a, b) / big(c, d));
            }
            prop_assert_eq!(x.cmp(&y), big(a, b).cmp(&big(c, d)));
        }

        #[test]
        fn field_axioms_small(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20, e in -50i64..50, f in 1i64..20) {
            let (x, y, z) = (Rational::new(a, b), Rational::new(c, d), Rational::new(e, f));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            if !x.is_zero() {
                prop_assert!(x.mul(&x.inv()).is_one());
            }
        }
    }
}
