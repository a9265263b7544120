//! Monomial ideals, Hilbert functions and polynomials, Gotzmann numbers and
//! lex-segment ideals.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::{count_monomials, default_var_names, monomials_of_degree, Monomial};

/// Generator-list order used for display and canonical storage:
/// ascending degree, then descending lex.
pub fn generator_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exps().cmp(a.exps()))
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Removes every monomial divisible by another one, dropping duplicates.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(generator_order);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    /// The ideal generated by `gens` in `n` variables, minimalized.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Self {
        assert!(gens.iter().all(|g| g.nvars() == n), "generator in the wrong ring");
        MonomialIdeal { n, gens: minimalize(gens) }
    }

    /// Builds from exponent vectors.
    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Self {
        Self::new(n, gens.iter().map(|e| Monomial::new(e)).collect())
    }

    /// The zero ideal.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// The unit ideal.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Minimal generators in ascending degree, then descending lex order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// True for the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Largest generator degree (0 for the zero ideal).
    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Borel-fixedness: `(g/x_j)·x_i ∈ I` for every generator `g`, every `x_j | g` and `i < j`.
    pub fn is_borel_fixed(&self) -> bool {
        self.gens.iter().all(|g| {
            (1..self.n).all(|j| {
                g.exp(j) == 0 || (0..j).all(|i| self.contains(&g.div_var(j).unwrap().times_var(i)))
            })
        })
    }

    /// Smallest Borel-fixed ideal containing `gens`.
    pub fn borel_closure(n: usize, gens: Vec<Monomial>) -> Self {
        let mut ideal = Self::new(n, gens);
        loop {
            let mut extra = Vec::new();
            for g in &ideal.gens {
                for j in 1..n {
                    if g.exp(j) == 0 {
                        continue;
                    }
                    let base = g.div_var(j).unwrap();
                    for i in 0..j {
                        let h = base.times_var(i);
                        if !ideal.contains(&h) {
                            extra.push(h);
                        }
                    }
                }
            }
            if extra.is_empty() {
                return ideal;
            }
            let mut all = ideal.gens.clone();
            all.extend(extra);
            ideal = Self::new(n, all);
        }
    }

    /// `I : x_i^∞`: zero the `x_i`-exponent of every generator.
    pub fn colon_var_infinity(&self, i: usize) -> Self {
        Self::new(self.n, self.gens.iter().map(|g| g.with_exp(i, 0)).collect())
    }

    /// `I : m` for a monomial `m`.
    pub fn colon_monomial(&self, m: &Monomial) -> Self {
        Self::new(
            self.n,
            self.gens
                .iter()
                .map(|g| {
                    Monomial::from_vec(g.exps().iter().zip(m.exps()).map(|(a, b)| a.saturating_sub(*b)).collect())
                })
                .collect(),
        )
    }

    /// Intersection via pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::new(self.n, gens)
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &MonomialIdeal) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(self.n, gens)
    }

    /// Saturation by the irrelevant ideal, `∩_i (I : x_i^∞)`.
    pub fn saturation(&self) -> Self {
        if self.gens.is_empty() {
            return self.clone();
        }
        let mut acc = self.colon_var_infinity(0);
        for i in 1..self.n {
            acc = acc.intersect(&self.colon_var_infinity(i));
        }
        acc
    }

    /// Saturation of a Borel-fixed ideal: zero the last variable's exponents.
    pub fn saturation_borel(&self) -> Self {
        self.colon_var_infinity(self.n - 1)
    }

    /// True when the ideal equals its saturation.
    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }

    /// Replaces `x^a y^b z^c w^e` by `x^a y^b z^{c+e}` generatorwise (four variables).
    pub fn z_transform_image(&self) -> Result<Self> {
        if self.n != 4 {
            return Err(Error::InvalidInput("z-transform image needs four variables".into()));
        }
        Ok(Self::new(
            4,
            self.gens
                .iter()
                .map(|g| Monomial::new(&[g.exp(0), g.exp(1), g.exp(2) + g.exp(3), 0]))
                .collect(),
        ))
    }

    /// Number of monomials of degree `d` lying in the ideal.
    pub fn hf_ideal(&self, d: u32) -> u128 {
        if self.gens.len() <= 20 {
            self.hf_inclusion_exclusion(d)
        } else {
            self.hf_brute_force(d)
        }
    }

    /// `hf_ideal` by direct enumeration of degree-`d` monomials.
    pub fn hf_brute_force(&self, d: u32) -> u128 {
        monomials_of_degree(self.n, d).into_iter().filter(|m| self.contains(m)).count() as u128
    }

    /// `hf_ideal` by inclusion–exclusion over generator lcms.
    pub fn hf_inclusion_exclusion(&self, d: u32) -> u128 {
        let gens: Vec<&Monomial> = self.gens.iter().filter(|g| g.degree() <= d).collect();
        let n = self.n;
        let mut total: i128 = 0;
        fn rec(gens: &[&Monomial], start: usize, cur: &Monomial, size: usize, d: u32, n: usize, total: &mut i128) {
            for k in start..gens.len() {
                let l = cur.lcm(gens[k]);
                let deg = l.degree();
                if deg > d {
                    continue;
                }
                let c = count_monomials(n, i64::from(d - deg)) as i128;
                if size.is_multiple_of(2) {
                    *total += c;
                } else {
                    *total -= c;
                }
                rec(gens, k + 1, &l, size + 1, d, n, total);
            }
        }
        rec(&gens, 0, &Monomial::one(n), 0, d, n, &mut total);
        total as u128
    }

    /// Dimension of the degree-`d` piece of the quotient.
    pub fn hf_quotient(&self, d: u32) -> u128 {
        count_monomials(self.n, i64::from(d)) - self.hf_ideal(d)
    }

    /// Monomials of degree `d` in the ideal, in descending lex order.
    pub fn monomials_in_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d).into_iter().filter(|m| self.contains(m)).collect()
    }

    /// Monomials of degree `d` outside the ideal, in descending lex order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d).into_iter().filter(|m| !self.contains(m)).collect()
    }

    /// Hilbert polynomial of the quotient ring, by interpolation on a window past the regularity.
    pub fn hilbert_polynomial_quotient(&self) -> HilbertPolynomial {
        let lcm_deg = self.gens.iter().fold(Monomial::one(self.n), |acc, g| acc.lcm(g)).degree();
        // Past the lcm degree the inclusion-exclusion formula is polynomial in d.
        let mut start = (self.max_degree() + self.n as u32 + 1).max(lcm_deg);
        loop {
            let k = self.n.max(1);
            let pts: Vec<(i64, BigRational)> = (0..k as u32)
                .map(|i| {
                    let d = start + i;
                    (i64::from(d), BigRational::from_integer(BigInt::from(self.hf_quotient(d))))
                })
                .collect();
            let hp = HilbertPolynomial::interpolate(&pts);
            let ok = (k as u32..k as u32 + 2).all(|i| {
                let d = start + i;
                hp.eval(i64::from(d)) == BigRational::from_integer(BigInt::from(self.hf_quotient(d)))
            });
            if ok {
                return hp;
            }
            start *= 2;
        }
    }

    /// Regularity of a Borel-fixed ideal: its largest generator degree.
    pub fn regularity_borel(&self) -> Result<u32> {
        if !self.is_borel_fixed() {
            return Err(Error::InvalidInput("regularity formula needs a Borel-fixed ideal".into()));
        }
        Ok(self.max_degree())
    }

    /// Renders as `(g1, g2, …)` with the given variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        let body: Vec<String> = self.gens.iter().map(|g| g.format_with(names)).collect();
        format!("({})", body.join(", "))
    }

    /// Generators as exponent vectors.
    pub fn exponent_vectors(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.exps().to_vec()).collect()
    }

    /// Set of generators, for order-free comparisons.
    pub fn gen_set(&self) -> HashSet<Monomial> {
        self.gens.iter().cloned().collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_var_names(self.n)))
    }
}

/// A polynomial with rational coefficients in one variable `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    /// From coefficients, index `i` holding the coefficient of `tⁱ`.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    /// `d·t + c`.
    pub fn linear(d: i64, c: i64) -> Self {
        Self::new(vec![BigRational::from_integer(c.into()), BigRational::from_integer(d.into())])
    }

    /// The constant `c`.
    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigRational::from_integer(c.into())])
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree (`None` for zero).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `tⁱ`.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Value at an integer.
    pub fn eval(&self, t: i64) -> BigRational {
        let t = BigRational::from_integer(t.into());
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// Value at an integer, which must be an integer fitting in `i64`.
    pub fn eval_i64(&self, t: i64) -> i64 {
        let v = self.eval(t);
        assert!(v.is_integer(), "Hilbert polynomial value is not an integer");
        v.to_integer().to_i64().expect("Hilbert polynomial value overflows i64")
    }

    /// For `d·t + c`, the pair `(d, c)`.
    pub fn as_linear(&self) -> Option<(i64, i64)> {
        if self.coeffs.len() > 2 || self.coeffs.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some((self.coeff(1).to_integer().to_i64()?, self.coeff(0).to_integer().to_i64()?))
    }

    /// Lagrange interpolation through the given points.
    pub fn interpolate(points: &[(i64, BigRational)]) -> Self {
        let mut acc = vec![BigRational::zero(); points.len()];
        for (k, (xk, yk)) in points.iter().enumerate() {
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if j == k {
                    continue;
                }
                basis = poly_mul_linear(&basis, *xj);
                denom *= BigRational::from_integer((xk - xj).into());
            }
            let f = yk / denom;
            for (i, c) in basis.iter().enumerate() {
                acc[i] += c * &f;
            }
        }
        Self::new(acc)
    }

    fn sub(&self, other: &[BigRational]) -> Self {
        let len = self.coeffs.len().max(other.len());
        let v = (0..len)
            .map(|i| self.coeff(i) - other.get(i).cloned().unwrap_or_else(BigRational::zero))
            .collect();
        Self::new(v)
    }
}

/// Multiplies a coefficient vector by `(t − r)`.
fn poly_mul_linear(p: &[BigRational], r: i64) -> Vec<BigRational> {
    let r = BigRational::from_integer(r.into());
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * &r;
    }
    out
}

/// Coefficients of `C(t + c, k)` as a polynomial in `t`.
pub fn binomial_poly(c: i64, k: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::one()];
    let mut fact = BigInt::one();
    for j in 0..k as i64 {
        p = poly_mul_linear(&p, j - c);
        fact *= BigInt::from(j + 1);
    }
    let f = BigRational::from_integer(fact);
    p.into_iter().map(|x| x / &f).collect()
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let num = if a.is_integer() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            let body = match i {
                0 => num,
                _ => {
                    let var = if i == 1 { "t".to_string() } else { format!("t^{i}") };
                    if a.is_one() {
                        var
                    } else {
                        format!("{num}{var}")
                    }
                }
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { "-" } else { "+" });
            }
            s.push_str(&body);
        }
        write!(f, "{s}")
    }
}

/// Gotzmann decomposition `p(t) = Σ_{i=1..r} C(t + a_i − i + 1, a_i)`, returning `(a_1, …, a_r)`.
pub fn gotzmann_decomposition(p: &HilbertPolynomial) -> Result<Vec<usize>> {
    let mut rest = p.clone();
    let mut a = Vec::new();
    let bad = || Error::NotAHilbertPolynomial(p.to_string());
    while let Some(k) = rest.degree() {
        let lead = rest.coeff(k);
        if lead.is_negative() {
            return Err(bad());
        }
        if a.last().is_some_and(|&prev| k > prev) {
            return Err(bad());
        }
        let i = a.len() as i64 + 1;
        rest = rest.sub(&binomial_poly(k as i64 - i + 1, k));
        a.push(k);
        if a.len() > 1_000_000 {
            return Err(bad());
        }
    }
    Ok(a)
}

/// The Gotzmann number: the length of the Gotzmann decomposition.
pub fn gotzmann_number(p: &HilbertPolynomial) -> Result<usize> {
    gotzmann_decomposition(p).map(|a| a.len())
}

/// The saturated lex-segment ideal in `n` variables whose quotient has Hilbert polynomial `p`.
pub fn lex_segment_ideal(p: &HilbertPolynomial, n: usize) -> Result<MonomialIdeal> {
    let r = gotzmann_number(p)?;
    if p.degree().is_some_and(|d| d + 1 >= n) {
        return Err(Error::NotAHilbertPolynomial(format!("{p} has too large a degree for {n} variables")));
    }
    let r32 = r as u32;
    let total = count_monomials(n, r as i64);
    let pr = p.eval(r as i64);
    let pr = pr.to_integer().to_u128().ok_or_else(|| Error::NotAHilbertPolynomial(p.to_string()))?;
    if pr > total {
        return Err(Error::NotAHilbertPolynomial(p.to_string()));
    }
    let keep = (total - pr) as usize;
    let top: Vec<Monomial> = monomials_of_degree(n, r32).into_iter().take(keep).collect();
    let ideal = if top.is_empty() { MonomialIdeal::zero(n) } else { MonomialIdeal::new(n, top) };
    Ok(ideal.saturation_borel())
}
