//! Exact scalar fields: arbitrary-precision rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A field given as a context object, so that runtime parameters such as
/// the characteristic live outside the elements.
pub trait Field: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// The image of `num / den`, or `None` if `den` vanishes in the field.
    fn ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    fn int(&self, v: i64) -> Self::Elem {
        self.ratio(&BigInt::from(v), &BigInt::one())
            .expect("1 is invertible")
    }
    fn characteristic(&self) -> u32;
    fn render(&self, a: &Self::Elem) -> String;
}

/// The rationals, with elements kept as reduced fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }
    fn characteristic(&self) -> u32 {
        0
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// `GF(p)` for a prime `p < 2^31`; elements are least non-negative residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `None` unless `p` is a prime below `2^31`.
    pub fn new(p: u64) -> Option<Self> {
        (p < (1 << 31) && is_prime(p)).then_some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits")
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        // Fermat: a^(p-2)
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn ratio(&self, num: &BigInt, den: &BigInt) -> Option<u64> {
        let d = self.reduce(den);
        let d_inv = self.inv(&d)?;
        Some(self.mul(&self.reduce(num), &d_inv))
    }
    fn characteristic(&self) -> u32 {
        self.p as u32
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses `a` or `a/b` with integer `a`, `b`.
pub fn parse_ratio(token: &str) -> Option<(BigInt, BigInt)> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (token.parse::<BigInt>().ok()?, BigInt::one()),
    };
    // keep the sign on the numerator
    if den.is_negative() {
        Some((-num, -den))
    } else {
        Some((num, den))
    }
}
