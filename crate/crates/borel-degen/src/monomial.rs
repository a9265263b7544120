//! Monomials as exponent vectors.
//!
//! Variables are ordered `x₀ > x₁ > … > xₙ`.  The derived [`Ord`] on
//! [`Monomial`] is graded-lex (total degree first, then lexicographic on the
//! exponent vector); it is the canonical storage order of polynomials and is
//! unrelated to whichever term order a computation uses.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Inline capacity of exponent vectors; larger rings spill onto the heap.
pub const INLINE_VARS: usize = 8;

/// Exponent storage.
pub type Exponents = SmallVec<[u32; INLINE_VARS]>;

/// A monomial `x₀^{e₀}⋯xₙ^{eₙ}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Exponents);

impl Monomial {
    /// Monomial with the given exponents.
    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// Monomial from an owned exponent vector.
    pub fn from_vec(exps: Vec<u32>) -> Self {
        Monomial(SmallVec::from_vec(exps))
    }

    /// The unit monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    /// The variable `x_i` in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    /// Exponent vector.
    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i`.
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// True for the unit monomial.
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Product; fails on exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Exponents::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(out))
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    /// Quotient `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Exponents::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    /// Least common multiple.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    /// Greatest common divisor.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e.checked_mul(k).expect("exponent overflow")).collect())
    }

    /// Copy with the exponent of `x_i` replaced by `e`.
    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }

    /// Multiplies by `x_i`.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    /// Divides by `x_i` when possible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.0[i] -= 1;
        Some(m)
    }

    /// Mutable access to the exponents.
    pub fn exps_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    /// Renders with the given variable names, e.g. `x^2*y`.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Default variable names: `x, y, z, w` for four variables, `x0..xn` otherwise.
pub fn default_var_names(n: usize) -> Vec<String> {
    if n == 4 {
        ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect()
    } else if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (0..n).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_var_names(self.nvars())))
    }
}

/// All monomials of degree `d` in `n` variables, in descending lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Binomial coefficient `C(n, k)` as `u128`, zero when `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of monomials of degree `d` in `n` variables.
pub fn count_monomials(n: usize, d: i64) -> u128 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return u128::from(d == 0);
    }
    binomial(d + n as i64 - 1, n as i64 - 1)
}
