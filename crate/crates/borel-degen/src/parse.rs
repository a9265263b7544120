//! Text formats for polynomials, ideals, term orders and Hilbert polynomials.
//!
//! Polynomials are sums of products of factors.  A factor is a rational
//! number (`3`, `3/2`), `sqrt(d)`, a variable with an optional exponent, or a
//! parenthesised sub-expression with an optional exponent.  Factors may be
//! joined by `*` or simply juxtaposed (`2xy^2z` is accepted for single-letter
//! variable names).

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{default_var_names, Monomial};
use crate::monomial_ideal::{HilbertPolynomial, MonomialIdeal};
use crate::order::TermOrder;
use crate::poly::Polynomial;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {} in {:?}", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small_exponent(&mut self) -> Result<u32> {
        let e = self.integer()?;
        u32::try_from(e).map_err(|_| self.err("exponent too large"))
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.nvars());
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        match self.peek() {
            Some(c) => c.is_ascii_alphanumeric() || c == b'(',
            None => false,
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') || self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.integer()?;
                if d == BigInt::from(0) {
                    return Err(Error::DivisionByZero);
                }
                acc = acc.scale(&Coeff::rational(BigRational::new(BigInt::from(1), d)));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self, base: Polynomial) -> Result<Polynomial> {
        if self.eat(b'^') {
            let e = self.small_exponent()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let n = self.nvars();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.power(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let base = Polynomial::constant(n, Coeff::from_bigint(num));
                self.power(base)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let rest = &self.src[self.pos..];
                if rest.starts_with(b"sqrt") {
                    self.pos += 4;
                    if !self.eat(b'(') {
                        return Err(self.err("expected '(' after sqrt"));
                    }
                    let neg = self.eat(b'-');
                    let d = self.integer()?;
                    if !self.eat(b')') {
                        return Err(self.err("expected ')'"));
                    }
                    let d = i64::try_from(if neg { -d } else { d }).map_err(|_| self.err("radicand too large"))?;
                    crate::field::CoefficientField::quadratic(d)?;
                    let base = Polynomial::constant(n, Coeff::sqrt(d));
                    return self.power(base);
                }
                let mut best: Option<usize> = None;
                for (i, name) in self.names.iter().enumerate() {
                    if rest.starts_with(name.as_bytes()) {
                        let better = match best {
                            Some(b) => name.len() > self.names[b].len(),
                            None => true,
                        };
                        if better {
                            best = Some(i);
                        }
                    }
                }
                let Some(i) = best else { return Err(self.err("unknown variable")) };
                self.pos += self.names[i].len();
                let mut m = Monomial::one(n);
                if self.eat(b'^') {
                    m.exps_mut()[i] = self.small_exponent()?;
                } else {
                    m.exps_mut()[i] = 1;
                }
                Ok(Polynomial::monomial(m))
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}

/// Parses a polynomial in `n` variables using the default names.
pub fn parse_polynomial(s: &str, n: usize) -> Result<Polynomial> {
    parse_polynomial_with(s, &default_var_names(n))
}

/// Parses a polynomial with explicit variable names.
pub fn parse_polynomial_with(s: &str, names: &[String]) -> Result<Polynomial> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, names };
    if p.peek().is_none() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Splits at commas that are not nested in brackets.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Removes one pair of enclosing brackets when they wrap the whole string.
fn strip_outer(s: &str, open: char, close: char) -> &str {
    let t = s.trim();
    if t.starts_with(open) && t.ends_with(close) {
        let inner = &t[1..t.len() - 1];
        let mut depth = 0i32;
        for c in inner.chars() {
            if c == open {
                depth += 1;
            } else if c == close {
                depth -= 1;
                if depth < 0 {
                    return t;
                }
            }
        }
        if depth == 0 {
            return inner;
        }
    }
    t
}

/// Parses a comma-separated list of polynomials, optionally wrapped in parentheses.
pub fn parse_polynomial_list(s: &str, n: usize) -> Result<Vec<Polynomial>> {
    let body = strip_outer(s, '(', ')');
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(body).into_iter().map(|p| parse_polynomial(p, n)).collect()
}

/// Parses a monomial ideal such as `x^2, x*y^3, y^6`.
pub fn parse_monomial_ideal(s: &str, n: usize) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    for p in parse_polynomial_list(s, n)? {
        if !p.is_term() {
            return Err(Error::Parse(format!("{p} is not a monomial")));
        }
        gens.push(p.terms()[0].0.clone());
    }
    Ok(MonomialIdeal::new(n, gens))
}

fn int_list(s: &str) -> Result<Vec<i64>> {
    let body = strip_outer(s, '[', ']');
    let body = strip_outer(body, '(', ')');
    split_top_level(body)
        .into_iter()
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {x:?}"))))
        .collect()
}

/// Parses `lex`, `drl`, `bracket(a,b,c,d)`, `m(v1,…,v8)` or `matrix([[…],…])`.
pub fn parse_term_order(s: &str, n: usize) -> Result<TermOrder> {
    let t = s.trim();
    let lower = t.to_ascii_lowercase();
    let order = if lower == "lex" {
        TermOrder::lex(n)
    } else if lower == "drl" || lower == "degrevlex" || lower == "revlex" {
        TermOrder::degrevlex(n)
    } else if let Some(rest) = lower.strip_prefix("bracket") {
        let v = int_list(rest)?;
        let v: [i64; 4] = v.try_into().map_err(|_| Error::Parse("bracket() needs 4 integers".into()))?;
        TermOrder::bracket(v)?
    } else if let Some(rest) = lower.strip_prefix("matrix") {
        let body = strip_outer(rest, '(', ')');
        let body = strip_outer(body, '[', ']');
        let rows = split_top_level(body).into_iter().map(int_list).collect::<Result<Vec<_>>>()?;
        TermOrder::new(rows)?
    } else if let Some(rest) = lower.strip_prefix('m') {
        let body = strip_outer(rest, '(', ')');
        let mut v = Vec::new();
        for part in split_top_level(body) {
            v.extend(int_list(part)?);
        }
        let v: [i64; 8] = v.try_into().map_err(|_| Error::Parse("m() needs 8 integers".into()))?;
        TermOrder::m_order(v)?
    } else {
        return Err(Error::Parse(format!("unknown term order {t:?}")));
    };
    if order.nvars() != n {
        return Err(Error::InvalidTermOrder(format!("order has {} columns, ring has {n} variables", order.nvars())));
    }
    Ok(order)
}

/// Parses a Hilbert polynomial such as `7t-5`, `3t+1`, `4` or `[c0,c1,…]`.
pub fn parse_hilbert_polynomial(s: &str) -> Result<HilbertPolynomial> {
    let t = s.trim();
    let fail = || Error::HilbertPolynomialParse(s.to_string());
    if t.starts_with('[') {
        let body = strip_outer(t, '[', ']');
        let coeffs = split_top_level(body)
            .into_iter()
            .map(|c| parse_rational(c.trim()).ok_or_else(fail))
            .collect::<Result<Vec<_>>>()?;
        return Ok(HilbertPolynomial::new(coeffs));
    }
    let names = vec!["t".to_string()];
    let p = parse_polynomial_with(t, &names).map_err(|_| fail())?;
    let deg = p.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![BigRational::from_integer(BigInt::from(0)); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exp(0) as usize] = c.to_rational().ok_or_else(fail)?.clone();
    }
    Ok(HilbertPolynomial::new(coeffs))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let d: BigInt = b.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(a.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
