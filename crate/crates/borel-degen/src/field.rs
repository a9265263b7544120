//! Exact coefficient arithmetic over Q and over a quadratic extension Q(√d).
//!
//! A [`Coeff`] is a pair `(a, b)` of rationals meaning `a + b·√d`.  Rational
//! elements have `b = 0` and carry no radicand, so they mix freely with
//! elements of any extension.  Two irrational elements must share the same
//! radicand; mixing different radicands is a programming error and panics.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Descriptor of the coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientField {
    /// The rational numbers.
    Rationals,
    /// The extension Q(√d) for a square-free integer `d ∉ {0, 1}`.
    Quadratic(i64),
}

impl CoefficientField {
    /// Builds Q(√d), rejecting radicands that are not square-free or are 0 or 1.
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(Error::InvalidInput(format!("{d} is not a square-free radicand")));
        }
        Ok(CoefficientField::Quadratic(d))
    }

    /// The radicand, if this is an extension field.
    pub fn radicand(&self) -> Option<i64> {
        match self {
            CoefficientField::Rationals => None,
            CoefficientField::Quadratic(d) => Some(*d),
        }
    }
}

fn is_square_free(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// An exact element `a + b·√d`.
#[derive(Clone, Debug)]
pub struct Coeff {
    a: BigRational,
    b: BigRational,
    /// Radicand; 0 whenever `b = 0`.
    d: i64,
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for Coeff {}

impl Hash for Coeff {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

fn join_radicands(d1: i64, d2: i64) -> i64 {
    match (d1, d2) {
        (0, d) | (d, 0) => d,
        (d, e) if d == e => d,
        (d, e) => panic!("coefficients from different quadratic fields: sqrt({d}) and sqrt({e})"),
    }
}

impl Coeff {
    /// Builds `a + b·√d`; `d` is ignored when `b = 0`.
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        let d = if b.is_zero() { 0 } else { d };
        Coeff { a, b, d }
    }

    /// The rational number `r`.
    pub fn rational(r: BigRational) -> Self {
        Coeff { a: r, b: BigRational::zero(), d: 0 }
    }

    /// The integer `n`.
    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The big integer `n`.
    pub fn from_bigint(n: BigInt) -> Self {
        Self::rational(BigRational::from_integer(n))
    }

    /// The fraction `n / d`; panics when `d = 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The element `√d`.
    pub fn sqrt(d: i64) -> Self {
        Coeff { a: BigRational::zero(), b: BigRational::one(), d }
    }

    /// Zero.
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    /// One.
    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    /// Rational part `a`.
    pub fn re(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of `√d`.
    pub fn im(&self) -> &BigRational {
        &self.b
    }

    /// Radicand attached to this element (0 for rationals).
    pub fn radicand(&self) -> i64 {
        self.d
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True for the unit element.
    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    /// True when `b = 0`.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value when `b = 0`.
    pub fn to_rational(&self) -> Option<&BigRational> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Sum.
    pub fn add(&self, o: &Coeff) -> Coeff {
        if self.b.is_zero() && o.b.is_zero() {
            return Coeff::rational(&self.a + &o.a);
        }
        let d = join_radicands(self.d, o.d);
        Coeff::new(&self.a + &o.a, &self.b + &o.b, d)
    }

    /// Difference.
    pub fn sub(&self, o: &Coeff) -> Coeff {
        if self.b.is_zero() && o.b.is_zero() {
            return Coeff::rational(&self.a - &o.a);
        }
        let d = join_radicands(self.d, o.d);
        Coeff::new(&self.a - &o.a, &self.b - &o.b, d)
    }

    /// Product, reducing `√d·√d = d`.
    pub fn mul(&self, o: &Coeff) -> Coeff {
        if self.b.is_zero() && o.b.is_zero() {
            return Coeff::rational(&self.a * &o.a);
        }
        let d = join_radicands(self.d, o.d);
        let dd = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &o.a + &self.b * &o.b * dd;
        let b = &self.a * &o.b + &self.b * &o.a;
        Coeff::new(a, b, d)
    }

    /// Additive inverse.
    pub fn neg(&self) -> Coeff {
        Coeff { a: -&self.a, b: -&self.b, d: self.d }
    }

    /// Multiplicative inverse; `(a + b√d)⁻¹ = (a − b√d)/(a² − d b²)`.
    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Coeff::rational(self.a.recip()));
        }
        let dd = BigRational::from_integer(BigInt::from(self.d));
        let norm = &self.a * &self.a - &self.b * &self.b * dd;
        Ok(Coeff::new(&self.a / &norm, -&self.b / &norm, self.d))
    }

    /// Quotient `self / o`.
    pub fn div(&self, o: &Coeff) -> Result<Coeff> {
        Ok(self.mul(&o.inv()?))
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Coeff {
        let mut base = self.clone();
        let mut acc = Coeff::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// True when the element is a negative rational.
    pub fn is_negative_rational(&self) -> bool {
        self.b.is_zero() && self.a.is_negative()
    }

    /// Small integer value when the element is an integer fitting in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.b.is_zero() && self.a.is_integer() {
            self.a.to_integer().to_i64()
        } else {
            None
        }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let b = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if (-&self.b).is_one() {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", fmt_rational(&self.b), self.d)
        };
        if self.a.is_zero() {
            write!(f, "{b}")
        } else if b.starts_with('-') {
            write!(f, "({}{})", fmt_rational(&self.a), b)
        } else {
            write!(f, "({}+{})", fmt_rational(&self.a), b)
        }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        Coeff::add(self, o)
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        Coeff::sub(self, o)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        Coeff::mul(self, o)
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::neg(self)
    }
}

/// Binary field operation selector used by the FFI and CLI layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Neg,
    IsZero,
}

/// Result of [`field_ops`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldValue {
    Element(Coeff),
    Bool(bool),
}

/// Applies one field operation; unary operations require `b` to be absent.
pub fn field_ops(a: &Coeff, b: Option<&Coeff>, op: FieldOp) -> Result<FieldValue> {
    match (op, b) {
        (FieldOp::Add, Some(b)) => Ok(FieldValue::Element(a.add(b))),
        (FieldOp::Mul, Some(b)) => Ok(FieldValue::Element(a.mul(b))),
        (FieldOp::Inv, None) => Ok(FieldValue::Element(a.inv()?)),
        (FieldOp::Neg, None) => Ok(FieldValue::Element(a.neg())),
        (FieldOp::IsZero, None) => Ok(FieldValue::Bool(a.is_zero())),
        (op, _) => Err(Error::InvalidInput(format!("wrong operand count for {op:?}"))),
    }
}
