//! Buchberger's algorithm over exact fields, initial ideals, saturation by a
//! polynomial, flat limits and the z-transform of monomial ideals.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::{OrderKey, TermOrder};
use crate::poly::Polynomial;

/// An ideal given by a list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialIdeal {
    nvars: usize,
    gens: Vec<Polynomial>,
}

impl PolynomialIdeal {
    /// The ideal generated by the nonzero members of `gens`.
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch(format!("generator in {} variables, ring has {nvars}", g.nvars())));
            }
        }
        Ok(PolynomialIdeal { nvars, gens: gens.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    /// The ideal generated by the monomials of `j`.
    pub fn from_monomial_ideal(j: &MonomialIdeal) -> Self {
        PolynomialIdeal { nvars: j.nvars(), gens: j.gens().iter().cloned().map(Polynomial::monomial).collect() }
    }

    /// Number of ring variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Generators.
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True when every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_term())
    }

    /// The monomial ideal generated by the terms, when every generator is a term.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.is_monomial() {
            return None;
        }
        Some(MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.terms()[0].0.clone()).collect()))
    }
}

/// A Gröbner basis together with its term order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: TermOrder,
    reduced: bool,
}

impl GroebnerBasis {
    /// Basis elements; for a reduced basis they are monic and sorted by leading term.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// The term order.
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// True for a reduced basis.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Leading monomials of the elements.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_term(&self.order).expect("basis elements are nonzero").0).collect()
    }

    /// The initial ideal.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        let n = self.order.nvars();
        MonomialIdeal::new(n, self.leading_monomials())
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements, &self.order)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// True when every S-polynomial reduces to zero.
    pub fn all_s_polynomials_reduce_to_zero(&self) -> bool {
        let polys: Vec<OPoly> = self.elements.iter().map(|g| OPoly::from_poly(g, &self.order)).collect();
        let refs: Vec<&OPoly> = polys.iter().collect();
        for i in 0..polys.len() {
            for j in (i + 1)..polys.len() {
                let s = s_polynomial(&polys[i], &polys[j], &self.order);
                if !reduce_full(s, &refs).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
struct Term {
    key: OrderKey,
    mon: Monomial,
    coeff: Coeff,
}

/// Polynomial with terms sorted by descending order key.
#[derive(Clone, Debug)]
struct OPoly {
    terms: Vec<Term>,
}

fn key_add(a: &OrderKey, b: &OrderKey) -> OrderKey {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

fn key_sub(a: &OrderKey, b: &OrderKey) -> OrderKey {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

impl OPoly {
    fn from_poly(p: &Polynomial, o: &TermOrder) -> Self {
        let mut terms: Vec<Term> =
            p.terms().iter().map(|(m, c)| Term { key: o.key(m), mon: m.clone(), coeff: c.clone() }).collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        OPoly { terms }
    }

    fn to_poly(&self, n: usize) -> Polynomial {
        Polynomial::from_terms(n, self.terms.iter().map(|t| (t.mon.clone(), t.coeff.clone())).collect::<Vec<_>>())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Term {
        &self.terms[0]
    }

    fn make_monic(&mut self) {
        if self.terms.is_empty() || self.terms[0].coeff.is_one() {
            return;
        }
        let inv = self.terms[0].coeff.inv().expect("leading coefficient is nonzero");
        for t in &mut self.terms {
            t.coeff = t.coeff.mul(&inv);
        }
    }

    /// `c · q · self` for a monomial `q` with key `qk`.
    fn mul_term(&self, q: &Monomial, qk: &OrderKey, c: &Coeff) -> OPoly {
        OPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term { key: key_add(&t.key, qk), mon: t.mon.mul(q), coeff: t.coeff.mul(c) })
                .collect(),
        }
    }

    fn sub(&self, other: &OPoly) -> OPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].key.cmp(&other.terms[j].key) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let t = &other.terms[j];
                    out.push(Term { key: t.key.clone(), mon: t.mon.clone(), coeff: t.coeff.neg() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].coeff.sub(&other.terms[j].coeff);
                    if !c.is_zero() {
                        out.push(Term { key: self.terms[i].key.clone(), mon: self.terms[i].mon.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| Term { key: t.key.clone(), mon: t.mon.clone(), coeff: t.coeff.neg() }));
        OPoly { terms: out }
    }
}

fn s_polynomial(f: &OPoly, g: &OPoly, o: &TermOrder) -> OPoly {
    let (lf, lg) = (f.lead(), g.lead());
    let l = lf.mon.lcm(&lg.mon);
    let qf = l.div(&lf.mon).unwrap();
    let qg = l.div(&lg.mon).unwrap();
    let a = f.mul_term(&qf, &o.key(&qf), &lf.coeff.inv().expect("nonzero lead"));
    let b = g.mul_term(&qg, &o.key(&qg), &lg.coeff.inv().expect("nonzero lead"));
    a.sub(&b)
}

/// Full reduction of `f` by `basis`, trying divisors in list order.
fn reduce_full(f: OPoly, basis: &[&OPoly]) -> OPoly {
    if f.is_zero() || basis.is_empty() {
        return f;
    }
    let mut work: BTreeMap<OrderKey, (Monomial, Coeff)> =
        f.terms.into_iter().map(|t| (t.key, (t.mon, t.coeff))).collect();
    let mut rem = Vec::new();
    while let Some((key, (mon, coeff))) = work.pop_last() {
        match basis.iter().find(|g| g.lead().mon.divides(&mon)) {
            Some(g) => {
                let lead = g.lead();
                let q = mon.div(&lead.mon).unwrap();
                let qk = key_sub(&key, &lead.key);
                let factor = coeff.div(&lead.coeff).expect("nonzero lead");
                for t in &g.terms[1..] {
                    let k = key_add(&t.key, &qk);
                    let c = factor.mul(&t.coeff);
                    match work.get_mut(&k) {
                        Some(entry) => {
                            entry.1 = entry.1.sub(&c);
                            if entry.1.is_zero() {
                                work.remove(&k);
                            }
                        }
                        None => {
                            work.insert(k, (t.mon.mul(&q), c.neg()));
                        }
                    }
                }
            }
            None => rem.push(Term { key, mon, coeff }),
        }
    }
    OPoly { terms: rem }
}

/// Remainder of `f` on division by `g` (divisors tried in list order).
pub fn normal_form(f: &Polynomial, g: &[Polynomial], o: &TermOrder) -> Polynomial {
    let basis: Vec<OPoly> = g.iter().filter(|p| !p.is_zero()).map(|p| OPoly::from_poly(p, o)).collect();
    let refs: Vec<&OPoly> = basis.iter().collect();
    reduce_full(OPoly::from_poly(f, o), &refs).to_poly(f.nvars())
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u32,
    key: OrderKey,
}

impl Pair {
    fn new(i: usize, j: usize, store: &[OPoly], o: &TermOrder) -> Self {
        let lcm = store[i].lead().mon.lcm(&store[j].lead().mon);
        let deg = lcm.degree();
        let key = o.key(&lcm);
        Pair { i: i.min(j), j: i.max(j), lcm, deg, key }
    }

    fn rank(&self) -> (u32, &OrderKey, usize, usize) {
        (self.deg, &self.key, self.i, self.j)
    }
}

/// Gebauer–Möller update after adding `store[h]`.
fn update(active: &mut Vec<usize>, pairs: &mut Vec<Pair>, store: &[OPoly], h: usize, o: &TermOrder) {
    let lh = store[h].lead().mon.clone();
    let mut c: Vec<Pair> = active.iter().map(|&g| Pair::new(g, h, store, o)).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let other = if p.i == h { p.j } else { p.i };
        let coprime = lh.is_coprime(&store[other].lead().mon);
        if coprime || !c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm)) {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d
        .into_iter()
        .filter(|p| {
            let other = if p.i == h { p.j } else { p.i };
            !lh.is_coprime(&store[other].lead().mon)
        })
        .collect();
    pairs.retain(|p| {
        if !lh.divides(&p.lcm) {
            return true;
        }
        let a = store[p.i].lead().mon.lcm(&lh);
        let b = store[p.j].lead().mon.lcm(&lh);
        a == p.lcm || b == p.lcm
    });
    pairs.extend(e);
    active.retain(|&g| !lh.divides(&store[g].lead().mon));
    active.push(h);
}

/// Reduced Gröbner basis by Buchberger's algorithm with the normal selection strategy.
pub fn buchberger(ideal: &PolynomialIdeal, o: &TermOrder) -> Result<GroebnerBasis> {
    let n = ideal.nvars();
    if o.nvars() != n {
        return Err(Error::RingMismatch(format!("order on {} variables, ring has {n}", o.nvars())));
    }
    let mut store: Vec<OPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in ideal.gens() {
        let refs: Vec<&OPoly> = active.iter().map(|&i| &store[i]).collect();
        let mut r = reduce_full(OPoly::from_poly(g, o), &refs);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        store.push(r);
        let h = store.len() - 1;
        update(&mut active, &mut pairs, &store, h, o);
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len()).min_by(|&a, &b| pairs[a].rank().cmp(&pairs[b].rank())).unwrap();
        let p = pairs.swap_remove(best);
        let s = s_polynomial(&store[p.i], &store[p.j], o);
        let refs: Vec<&OPoly> = active.iter().map(|&i| &store[i]).collect();
        let mut r = reduce_full(s, &refs);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        store.push(r);
        let h = store.len() - 1;
        update(&mut active, &mut pairs, &store, h, o);
    }
    // Interreduce: drop redundant leads, then tail-reduce each element by the others.
    let mut basis: Vec<OPoly> = active.iter().map(|&i| store[i].clone()).collect();
    basis.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    let mut minimal: Vec<OPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lead().mon.divides(&g.lead().mon)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&OPoly> = (0..minimal.len()).filter(|&j| j != i).map(|j| &minimal[j]).collect();
        let g = &minimal[i];
        let tail = OPoly { terms: g.terms[1..].to_vec() };
        let mut r = reduce_full(tail, &others);
        r.terms.insert(0, g.lead().clone());
        r.make_monic();
        reduced.push(r);
    }
    Ok(GroebnerBasis { elements: reduced.iter().map(|g| g.to_poly(n)).collect(), order: o.clone(), reduced: true })
}

/// Leading monomials of the reduced Gröbner basis.
pub fn initial_ideal(ideal: &PolynomialIdeal, o: &TermOrder) -> Result<MonomialIdeal> {
    Ok(buchberger(ideal, o)?.initial_ideal())
}

/// `I : f^∞` by eliminating `v` from `I + (v·f − 1)`.
pub fn saturate_by(ideal: &PolynomialIdeal, f: &Polynomial) -> Result<PolynomialIdeal> {
    if f.is_zero() {
        return Err(Error::InvalidInput("cannot saturate by zero".into()));
    }
    let n = ideal.nvars();
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.prepend_vars(1)).collect();
    let vf = &Polynomial::var(n + 1, 0) * &f.prepend_vars(1);
    gens.push(&vf - &Polynomial::one(n + 1));
    let mut rows = vec![{
        let mut r = vec![0; n + 1];
        r[0] = 1;
        r
    }];
    for r in TermOrder::degrevlex(n).rows() {
        let mut row = vec![0];
        row.extend_from_slice(r);
        rows.push(row);
    }
    let elim = TermOrder::new(rows)?;
    let gb = buchberger(&PolynomialIdeal::new(n + 1, gens)?, &elim)?;
    let keep: Vec<usize> = (1..=n).collect();
    let out = gb
        .elements()
        .iter()
        .filter(|g| g.max_exp(0) == 0)
        .map(|g| g.project_vars(&keep))
        .collect::<Result<Vec<_>>>()?;
    PolynomialIdeal::new(n, out)
}

/// Outcome of a flat-limit computation.
#[derive(Clone, Debug)]
pub enum FlatLimit {
    /// The special fiber is a monomial ideal.
    Monomial(MonomialIdeal),
    /// The special fiber is not monomial; its reduced degrevlex basis is returned.
    NonMonomial(PolynomialIdeal),
}

impl FlatLimit {
    /// The monomial limit, if any.
    pub fn monomial(&self) -> Option<&MonomialIdeal> {
        match self {
            FlatLimit::Monomial(j) => Some(j),
            FlatLimit::NonMonomial(_) => None,
        }
    }
}

/// The fiber at `u = 0` of the family generated by `gens`, where `u` is variable 0.
///
/// The generators are homogenized in `(u, h)`; a basis for the order that grades
/// by `(u, h)`-degree and then prefers small `u`-exponents yields generators of
/// `Ĩ : u^∞` after dividing out powers of `u`, and setting `h = 1, u = 0` gives
/// generators of the limit.
pub fn flat_limit(gens: &[Polynomial]) -> Result<FlatLimit> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidInput("flat limit of the zero ideal".into()));
    };
    let total = first.nvars();
    if total < 2 {
        return Err(Error::InvalidInput("flat limit needs a parameter and at least one variable".into()));
    }
    let n = total - 1;
    let homog: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            if g.nvars() != total {
                return Err(Error::RingMismatch("flat limit generators in different rings".into()));
            }
            let top = g.max_exp(0);
            Ok(Polynomial::from_terms(
                total + 1,
                g.terms()
                    .iter()
                    .map(|(m, c)| {
                        let mut e = vec![m.exp(0), top - m.exp(0)];
                        e.extend_from_slice(&m.exps()[1..]);
                        (Monomial::from_vec(e), c.clone())
                    })
                    .collect::<Vec<_>>(),
            ))
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut r0 = vec![0i64; total + 1];
    r0[0] = 1;
    r0[1] = 1;
    rows.push(r0);
    let mut r1 = vec![0i64; total + 1];
    r1[0] = -1;
    rows.push(r1);
    for r in TermOrder::degrevlex(n).rows() {
        let mut row = vec![0, 0];
        row.extend_from_slice(r);
        rows.push(row);
    }
    let order = TermOrder::new(rows)?;
    let gb = buchberger(&PolynomialIdeal::new(total + 1, homog)?, &order)?;
    let keep: Vec<usize> = (2..total + 1).collect();
    let mut limit_gens = Vec::new();
    for g in gb.elements() {
        let k = g.min_exp(0);
        let mut um = Monomial::one(total + 1);
        um.exps_mut()[0] = k;
        let g = g.div_monomial(&um).expect("u-power divides every term");
        let g = g.evaluate_var(1, &Coeff::one()).evaluate_var(0, &Coeff::zero());
        if !g.is_zero() {
            limit_gens.push(g.project_vars(&keep)?);
        }
    }
    classify_limit(n, limit_gens)
}

/// Reduces limit generators and reports whether the ideal is monomial.
pub fn classify_limit(n: usize, gens: Vec<Polynomial>) -> Result<FlatLimit> {
    let ideal = PolynomialIdeal::new(n, gens)?;
    let gb = buchberger(&ideal, &TermOrder::degrevlex(n))?;
    if gb.elements().iter().all(|g| g.is_term()) {
        Ok(FlatLimit::Monomial(gb.initial_ideal()))
    } else {
        Ok(FlatLimit::NonMonomial(PolynomialIdeal::new(n, gb.elements().to_vec())?))
    }
}

/// Random scalars used by the z-transform, drawn uniformly from `[2, 10⁶]`.
pub fn z_transform_lambdas(seed: u64) -> (i64, i64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = rng.gen_range(2..=1_000_000);
    let mut b = rng.gen_range(2..=1_000_000);
    while b == a {
        b = rng.gen_range(2..=1_000_000);
    }
    (a, b)
}

/// Initial ideal, under `o`, of `I` after the substitution `w ↦ w + λz`.
pub fn z_transform_with(ideal: &MonomialIdeal, lambda: i64, o: &TermOrder) -> Result<MonomialIdeal> {
    if ideal.nvars() != 4 {
        return Err(Error::InvalidInput("z-transform needs four variables".into()));
    }
    let shift = &Polynomial::var(4, 3) + &Polynomial::var(4, 2).scale(&Coeff::from_int(lambda));
    let gens = ideal
        .gens()
        .iter()
        .map(|g| Polynomial::monomial(g.clone()).substitute(3, &shift))
        .collect::<Result<Vec<_>>>()?;
    initial_ideal(&PolynomialIdeal::new(4, gens)?, o)
}

/// The z-transform: two draws of `λ` under degrevlex and `bracket(4,3,2,1)` must agree.
pub fn z_transform(ideal: &MonomialIdeal, seed: u64) -> Result<MonomialIdeal> {
    let (l1, l2) = z_transform_lambdas(seed);
    let a = z_transform_with(ideal, l1, &TermOrder::degrevlex(4))?;
    let b = z_transform_with(ideal, l2, &TermOrder::bracket([4, 3, 2, 1])?)?;
    if a != b {
        return Err(Error::ZTransformDisagreement);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_monomial_ideal, parse_polynomial, parse_polynomial_list};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 4).unwrap()
    }

    fn ideal(s: &str) -> PolynomialIdeal {
        PolynomialIdeal::new(4, parse_polynomial_list(s, 4).unwrap()).unwrap()
    }

    #[test]
    fn normal_forms() {
        let lex = TermOrder::lex(4);
        assert!(normal_form(&p("x^2*y"), &[p("x^2")], &lex).is_zero());
        assert_eq!(normal_form(&p("y^4 + x*z^3"), &[p("x^2"), p("x*y")], &lex), p("y^4 + x*z^3"));
        let g = [p("x^2"), p("x*y"), p("y^4 + x*z^3")];
        assert_eq!(normal_form(&p("y*(y^4 + x*z^3)"), &g, &lex), p("y^5"));
        assert!(normal_form(&p("y*(y^4 + x*z^3)"), &g, &TermOrder::degrevlex(4)).is_zero());
    }

    #[test]
    fn initial_ideals_of_the_line_pair_family() {
        let i = ideal("x^2, x*y, y^4 + x*z^3");
        let lex = initial_ideal(&i, &TermOrder::lex(4)).unwrap();
        assert_eq!(lex.saturation(), parse_monomial_ideal("x^2, x*y, x*z^3, y^5", 4).unwrap());
        let drl = initial_ideal(&i, &TermOrder::degrevlex(4)).unwrap();
        assert_eq!(drl.saturation(), parse_monomial_ideal("x^2, x*y, y^4", 4).unwrap());
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        let j = parse_monomial_ideal("x^2, x*y^3, y^6, x*y^4", 4).unwrap();
        let gb = buchberger(&PolynomialIdeal::from_monomial_ideal(&j), &TermOrder::lex(4)).unwrap();
        assert_eq!(gb.initial_ideal(), j);
        assert_eq!(gb.elements().len(), 3);
    }

    #[test]
    fn saturation_by_parameter() {
        let n = 3;
        let names: Vec<String> = ["u", "x", "y"].iter().map(|s| s.to_string()).collect();
        let q = |s: &str| crate::parse::parse_polynomial_with(s, &names).unwrap();
        let i = PolynomialIdeal::new(n, vec![q("u*x")]).unwrap();
        let s = saturate_by(&i, &q("u")).unwrap();
        assert_eq!(s.gens(), &[q("x")]);
        let i = PolynomialIdeal::new(n, vec![q("x^2"), q("u*y - u^2*x")]).unwrap();
        let s = saturate_by(&i, &q("u")).unwrap();
        let gb = buchberger(&s, &TermOrder::degrevlex(3)).unwrap();
        let expect = buchberger(&PolynomialIdeal::new(n, vec![q("x^2"), q("y - u*x")]).unwrap(), &TermOrder::degrevlex(3))
            .unwrap();
        assert_eq!(gb.elements(), expect.elements());
    }

    #[test]
    fn flat_limits_of_line_pair_family() {
        let names: Vec<String> = ["u", "x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
        let q = |s: &str| crate::parse::parse_polynomial_with(s, &names).unwrap();
        let lim = flat_limit(&[q("x^2"), q("x*y"), q("u*x*z^3 + y^4")]).unwrap();
        assert_eq!(lim.monomial().unwrap(), &parse_monomial_ideal("x^2, x*y, y^4", 4).unwrap());
        let lim = flat_limit(&[q("x^2"), q("x*y"), q("x*z^3 + u*y^4")]).unwrap();
        assert_eq!(
            lim.monomial().unwrap().saturation(),
            parse_monomial_ideal("x^2, x*y, x*z^3, y^5", 4).unwrap()
        );
        let lim = flat_limit(&[q("x^2"), q("x*y")]).unwrap();
        assert_eq!(lim.monomial().unwrap(), &parse_monomial_ideal("x^2, x*y", 4).unwrap());
    }

    #[test]
    fn z_transform_examples() {
        let j = parse_monomial_ideal("x*z^2*w^3", 4).unwrap();
        assert_eq!(z_transform(&j, 0).unwrap(), parse_monomial_ideal("x*z^5", 4).unwrap());
        let j = parse_monomial_ideal("x^2, x*y*w^2, x*z^3, y^3*w, y^4", 4).unwrap();
        let t = z_transform(&j, 7).unwrap();
        assert!(t.contains_ideal(&j.z_transform_image().unwrap()));
    }
}
