//! Exact rational numbers.
//!
//! Values that fit in `i64` numerator/denominator stay in a small inline
//! representation and arithmetic goes through `i128` with overflow checks.
//! Anything larger is promoted to an arbitrary-precision `BigRational`, and
//! demoted again as soon as it fits. The representation is therefore
//! canonical and structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
enum Repr {
    /// Lowest terms, denominator > 0.
    Small(i64, i64),
    /// Only used when the value does not fit `Small`.
    Big(Box<BigRational>),
}

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small(0, 1));
    pub const ONE: Rational = Rational(Repr::Small(1, 1));

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// Builds `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::ZERO;
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational arithmetic keeps values reduced with positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    /// Builds a rational from arbitrary-precision parts. Panics if `den == 0`.
    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        Self::from_big(BigRational::new(num, den))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self.0, Repr::Small(_, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        })
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::ONE;
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Self::from_i128(n as i128, 1)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(b) => {
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
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

fn add_ref(x: &Rational, y: &Rational) -> Rational {
    if let (Repr::Small(a, b), Repr::Small(c, d)) = (&x.0, &y.0) {
        if *b == 1 && *d == 1 {
            return Rational::from_i128(*a as i128 + *c as i128, 1);
        }
        let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
        if let (Some(ad), Some(cb), Some(bd)) = (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
            if let Some(num) = ad.checked_add(cb) {
                return Rational::from_i128(num, bd);
            }
        }
    }
    Rational::from_big(x.to_big() + y.to_big())
}

fn mul_ref(x: &Rational, y: &Rational) -> Rational {
    if x.is_zero() || y.is_zero() {
        return Rational::ZERO;
    }
    if let (Repr::Small(a, b), Repr::Small(c, d)) = (&x.0, &y.0) {
        let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
        // |a|,|b|,|c|,|d| < 2^63 so the products fit in i128.
        return Rational::from_i128(a * c, b * d);
    }
    Rational::from_big(x.to_big() * y.to_big())
}

fn neg_ref(x: &Rational) -> Rational {
    match &x.0 {
        Repr::Small(n, d) => Rational::from_i128(-(*n as i128), *d as i128),
        Repr::Big(b) => Rational::from_big(-(**b).clone()),
    }
}

fn div_ref(x: &Rational, y: &Rational) -> Rational {
    let inv = y.recip().expect("division by zero rational");
    mul_ref(x, &inv)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                $f(self, rhs)
            }
        }
        impl<'b> $trait<&'b Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                $f(&self, rhs)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(self, &rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(&self, &rhs)
            }
        }
    };
}

fn sub_ref(x: &Rational, y: &Rational) -> Rational {
    add_ref(x, &neg_ref(y))
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        neg_ref(&self)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        neg_ref(self)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = add_ref(self, rhs);
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = add_ref(self, &rhs);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = sub_ref(self, rhs);
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = sub_ref(self, &rhs);
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = mul_ref(self, rhs);
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ONE, |acc, x| acc * x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Self::from_bigints(n, d))
    }
}

/// Greatest common divisor of two big integers (non-negative).
pub(crate) fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(1, -2), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, -5), Rational::zero());
        assert_eq!(Rational::new(3, 1).to_string(), "3");
        assert_eq!(Rational::new(-3, 6).to_string(), "-1/2");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_integer(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let min = Rational::from_integer(i64::MIN);
        assert_eq!(-(-min.clone()), min);
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-7", "3/4", "-12/5", "123456789012345678901234567891/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-1_000_000_000_000i64..1_000_000_000_000, 1i64..1_000_000).prop_map(|(n, d)| Rational::new(n, d))
    }

    proptest! {
        #[test]
        fn field_laws(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn agrees_with_bigrational(a in small(), b in small()) {
            let sum = BigRational::from(a.to_big()) + b.to_big();
            prop_assert_eq!(Rational::from_big(sum), &a + &b);
            prop_assert_eq!(a.cmp(&b), a.to_big().cmp(&b.to_big()));
        }
    }
}
