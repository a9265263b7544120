//! Sparse multivariate polynomials with exact coefficients.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{default_var_names, Monomial};
use crate::order::TermOrder;

/// A polynomial: a sorted list of `(monomial, nonzero coefficient)` pairs.
///
/// Terms are stored in ascending graded-lex order, so equality does not
/// depend on any term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    /// The zero polynomial in `n` variables.
    pub fn zero(n: usize) -> Self {
        Polynomial { nvars: n, terms: Vec::new() }
    }

    /// The constant `c`.
    pub fn constant(n: usize, c: Coeff) -> Self {
        Self::term(Monomial::one(n), c)
    }

    /// The constant one.
    pub fn one(n: usize) -> Self {
        Self::constant(n, Coeff::one())
    }

    /// The single term `c·m`.
    pub fn term(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial { nvars, terms: vec![(m, c)] }
    }

    /// The monomial `m` with coefficient one.
    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Coeff::one())
    }

    /// The variable `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), n, "monomial has the wrong number of variables");
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial { nvars: n, terms }
    }

    /// Number of variables of the ambient ring.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when there are no terms, that is for the zero polynomial.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// True when the polynomial is a single term.
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Coeff {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    /// Total degree (`None` for zero).
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0.degree())
    }

    /// True when every term has the same degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(format!("{} vs {} variables", self.nvars, other.nvars)));
        }
        Ok(())
    }

    /// Sum, failing on a ring mismatch.
    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a.1.add(&b.1);
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { nvars: self.nvars, terms: out })
    }

    /// Difference, failing on a ring mismatch.
    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.neg())
    }

    /// Product, failing on a ring mismatch or exponent overflow.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Polynomial { nvars: self.nvars, terms })
    }

    /// Negation.
    pub fn neg(&self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect() }
    }

    /// Multiplies by `c·m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        // Multiplying by a monomial preserves the graded-lex order of terms.
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d.mul(c))).collect(),
        }
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces `x_var` by `replacement` and expands.
    pub fn substitute(&self, var: usize, replacement: &Polynomial) -> Result<Polynomial> {
        self.check_ring(replacement)?;
        let mut powers: Vec<Polynomial> = vec![Self::one(self.nvars)];
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().try_mul(replacement)?;
                powers.push(next);
            }
            let rest = m.with_exp(var, 0);
            out = out.try_add(&powers[e].mul_term(&rest, c))?;
        }
        Ok(out)
    }

    /// Evaluates `x_var = value`, keeping the variable slot (its exponent becomes zero).
    pub fn evaluate_var(&self, var: usize, value: &Coeff) -> Polynomial {
        let mut cache: Vec<Coeff> = vec![Coeff::one()];
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exp(var) as usize;
            while cache.len() <= e {
                let next = cache.last().unwrap().mul(value);
                cache.push(next);
            }
            (m.with_exp(var, 0), c.mul(&cache[e]))
        });
        Self::from_terms(self.nvars, terms.collect::<Vec<_>>())
    }

    /// Maps every monomial through `f` into a ring with `n` variables.
    pub fn map_monomials(&self, n: usize, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        Self::from_terms(n, self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect::<Vec<_>>())
    }

    /// Embeds into a ring with `extra` new variables placed before the existing ones.
    pub fn prepend_vars(&self, extra: usize) -> Polynomial {
        let n = self.nvars + extra;
        self.map_monomials(n, |m| {
            let mut e = vec![0u32; extra];
            e.extend_from_slice(m.exps());
            Monomial::from_vec(e)
        })
    }

    /// Embeds into a ring with `extra` new variables placed after the existing ones.
    pub fn append_vars(&self, extra: usize) -> Polynomial {
        let n = self.nvars + extra;
        self.map_monomials(n, |m| {
            let mut e = m.exps().to_vec();
            e.resize(n, 0);
            Monomial::from_vec(e)
        })
    }

    /// Keeps the variables in `keep` (in that order); every other variable must be absent.
    pub fn project_vars(&self, keep: &[usize]) -> Result<Polynomial> {
        for (m, _) in &self.terms {
            for i in 0..self.nvars {
                if m.exp(i) != 0 && !keep.contains(&i) {
                    return Err(Error::DimensionMismatch(format!("variable {i} still occurs")));
                }
            }
        }
        Ok(self.map_monomials(keep.len(), |m| Monomial::from_vec(keep.iter().map(|&i| m.exp(i)).collect())))
    }

    /// The greatest term under `o`.
    pub fn leading_term(&self, o: &TermOrder) -> Result<(Monomial, Coeff)> {
        let mut best: Option<&(Monomial, Coeff)> = None;
        for t in &self.terms {
            best = match best {
                Some(b) if o.compare(&t.0, &b.0) != std::cmp::Ordering::Greater => Some(b),
                _ => Some(t),
            };
        }
        best.cloned().ok_or(Error::NoLeadingTerm)
    }

    /// Divides by the leading coefficient under `o`.
    pub fn make_monic(&self, o: &TermOrder) -> Result<Polynomial> {
        let (_, c) = self.leading_term(o)?;
        Ok(self.scale(&c.inv()?))
    }

    /// Largest exponent of `x_var` dividing every term (zero for the zero polynomial).
    pub fn min_exp(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exp(var)).min().unwrap_or(0)
    }

    /// Largest exponent of `x_var` among the terms.
    pub fn max_exp(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exp(var)).max().unwrap_or(0)
    }

    /// Divides by the monomial `m`, which must divide every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((t.div(m)?, c.clone()));
        }
        // Division by a monomial preserves the graded-lex order of terms.
        Some(Polynomial { nvars: self.nvars, terms })
    }

    /// Renders with the given variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_rational();
            let abs = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mon = m.format_with(names);
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{abs}*{mon}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_var_names(self.nvars)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        self.try_add(o).expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.try_sub(o).expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        self.try_mul(o).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// Convenience constructor: `c · x^exps`.
pub fn term(c: i64, exps: &[u32]) -> Polynomial {
    Polynomial::term(Monomial::new(exps), Coeff::from_int(c))
}
