//! Ideals of 2×2 minors of `A(F) = [x, y^m, -F; 0, x, y^l]`, verification of
//! explicit witnesses `F`, the symbolic constraint generator for finding such
//! `F`, and a randomized search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::acm_component::{condition_c2, j_lm, necessary_condition_c1, AcmBorelSpec};
use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::{buchberger, initial_ideal, normal_form, PolynomialIdeal};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::TermOrder;
use crate::poly::Polynomial;

/// `x², x y^l, x F + y^{l+m}` for a form `F` of degree `l + m - 1`.
pub fn minor_ideal(l: u32, m: u32, f: &Polynomial) -> Result<PolynomialIdeal> {
    if l == 0 || m == 0 {
        return Err(Error::InvalidInput("l and m must be positive".into()));
    }
    if f.nvars() != 4 {
        return Err(Error::RingMismatch("F must be a polynomial in x, y, z, w".into()));
    }
    if f.is_zero() || !f.is_homogeneous() || f.degree() != Some(l + m - 1) {
        return Err(Error::InvalidInput(format!("F must be a nonzero form of degree l + m - 1 = {}", l + m - 1)));
    }
    let x = Polynomial::var(4, 0);
    let g = &(&x * f) + &Polynomial::monomial(Monomial::new(&[0, l + m, 0, 0]));
    PolynomialIdeal::new(4, vec![Polynomial::monomial(Monomial::new(&[2, 0, 0, 0])), Polynomial::monomial(Monomial::new(&[1, l, 0, 0])), g])
}

/// Monomials `y^{l-1-i} z^a w^b` with `a + b = m + i` spanning the normal form
/// `F = Σ_i y^{l-1-i} F_{m+i}(z, w)`, tagged by `i` and listed with `a` decreasing.
pub fn f_form_monomials(l: u32, m: u32) -> Vec<(u32, Monomial)> {
    let mut out = Vec::new();
    for i in 0..l {
        let d = m + i;
        for a in (0..=d).rev() {
            out.push((i, Monomial::new(&[0, l - 1 - i, a, d - a])));
        }
    }
    out
}

/// `F` of the normal form with the given coefficients, one per [`f_form_monomials`] entry.
pub fn f_from_coefficients(l: u32, m: u32, c: &[Coeff]) -> Result<Polynomial> {
    let monos = f_form_monomials(l, m);
    if monos.len() != c.len() {
        return Err(Error::InvalidInput(format!("expected {} coefficients, got {}", monos.len(), c.len())));
    }
    Ok(Polynomial::from_terms(4, monos.into_iter().map(|(_, mo)| mo).zip(c.iter().cloned()).collect::<Vec<_>>()))
}

/// A seeded `F` of the normal form with integer coefficients drawn from `[-bound, bound] \ {0}`.
pub fn generic_f(l: u32, m: u32, seed: u64, bound: i64) -> Result<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = f_form_monomials(l, m).len();
    let c: Vec<Coeff> = (0..n)
        .map(|_| loop {
            let v = rng.gen_range(-bound..=bound);
            if v != 0 {
                break Coeff::from_int(v);
            }
        })
        .collect();
    f_from_coefficients(l, m, &c)
}

/// A target Borel ideal with a term order and, for verification, a candidate `F`.
#[derive(Clone, Debug)]
pub struct WitnessProblem {
    pub l: u32,
    pub m: u32,
    pub target: MonomialIdeal,
    pub order: TermOrder,
    pub f: Option<Polynomial>,
}

impl WitnessProblem {
    /// Checked constructor: the target must have the Hilbert polynomial of `J(l,m)`.
    pub fn new(l: u32, m: u32, target: MonomialIdeal, order: TermOrder, f: Option<Polynomial>) -> Result<Self> {
        let reference = j_lm(l, m)?.hilbert_polynomial_quotient();
        let hp = target.hilbert_polynomial_quotient();
        if hp != reference {
            return Err(Error::HilbertPolynomialMismatch(format!("target has {hp}, J({l},{m}) has {reference}")));
        }
        if order.nvars() != 4 {
            return Err(Error::RingMismatch("the term order must be on four variables".into()));
        }
        Ok(WitnessProblem { l, m, target, order, f })
    }
}

/// Outcome of [`verify_witness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// The initial ideal saturates to the target; the initial ideal is attached.
    Verified(MonomialIdeal),
    /// The saturation of the initial ideal differs from the target; it is attached.
    Failed(MonomialIdeal),
}

impl WitnessOutcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, WitnessOutcome::Verified(_))
    }
}

/// Computes `in(I_F)` under the problem's order and compares its saturation with the target.
pub fn verify_witness(p: &WitnessProblem) -> Result<WitnessOutcome> {
    let f = p.f.as_ref().ok_or_else(|| Error::InvalidInput("verification needs F".into()))?;
    let init = initial_ideal(&minor_ideal(p.l, p.m, f)?, &p.order)?;
    let sat = init.saturation();
    Ok(if sat == p.target { WitnessOutcome::Verified(init) } else { WitnessOutcome::Failed(sat) })
}

/// Whether a verified target satisfies both necessary conditions.
pub fn necessary_conditions_hold(p: &WitnessProblem) -> Result<bool> {
    let c1 = necessary_condition_c1(&p.target, &AcmBorelSpec::quadric(p.l, p.m));
    Ok(c1 && condition_c2(&p.target, &j_lm(p.l, p.m)?)?)
}

/// A witness `F` whose minor ideal has an initial ideal saturating to a catalogue entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownWitness {
    pub l: u32,
    pub m: u32,
    pub label: usize,
    pub target: &'static str,
    pub f: &'static str,
    pub order: &'static str,
}

impl KnownWitness {
    /// The parsed problem.
    pub fn problem(&self) -> Result<WitnessProblem> {
        let target = crate::parse::parse_monomial_ideal(self.target, 4)?;
        let order = crate::parse::parse_term_order(self.order, 4)?;
        let f = crate::parse::parse_polynomial(self.f, 4)?;
        WitnessProblem::new(self.l, self.m, target, order, Some(f))
    }
}

/// Special witnesses for the three non-segment ideals of `7t - 5`.
pub const WITNESSES_3_1: [KnownWitness; 3] = [
    KnownWitness { l: 3, m: 1, label: 83, target: "x^2, xy^3, xy^2z, xyz^2, xz^6, y^7", f: "y^2z + wzy + 2yz^2 - w^2z + 4z^3", order: "lex" },
    KnownWitness { l: 3, m: 1, label: 85, target: "x^2, xy^2, xyz^4, xz^5, y^7", f: "y^2z + wzy - 2w^2y + yz^2 - 9w^2z + 3z^3 + 6w^3", order: "lex" },
    KnownWitness { l: 3, m: 1, label: 102, target: "x^2, xy^3, xy^2z, xyz^2, y^6z, y^7", f: "y^2z + yz^2 + zw^2", order: "bracket(10,3,2,1)" },
];

/// Witnesses for the sixteen non-segment candidates of `9t - 12`.
pub const WITNESSES_3_3: [KnownWitness; 16] = [
    KnownWitness { l: 3, m: 3, label: 773, target: "x^2, x y^3, x y^2 z, x y z^2, y^9, x z^12", f: "y^2z^3 - w^3z^2 + z^5 + 2wz^3y + w^2zy^2", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 776, target: "x^2, x y^3, x y^2 z, x y z^3, y^9, x z^11", f: "y^2 z^3 + z^3 w^2 + 5 z^4 y + 25 z^5 + 2 z^3 w y - 6 w^2 z y^2", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 781, target: "x^2, x y^3, x y^2 z, x y z^4, y^9, x z^10", f: "y^2 z^3 - w z^4 - z^5 - y z^4 - w^2 z y^2", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 783, target: "x^2, x y^3, x y^2 z^2, x y z^3, y^9, x z^10", f: "y^2 z^3 + 4 y z^4 + 11 w z^4 - 1127/64 w^3 z^2 + 3 z^5 + 7 w z^3 y", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 787, target: "x^2, x y^2, x y z^6, y^9, x z^9", f: "y^2 z^3 - 2 w z^3 y + 5 w^2 z^2 y + z^5 - 85/9 w^2 z y^2 + 25/3 w^3 y^2 + 3 w z^4", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 790, target: "x^2, x y^3, x y^2 z^2, x y z^4, y^9, x z^9", f: "y^2 z^3 + 2 w z^3 y - z^5 + 2 w z^2 y^2 - 2 y z^4", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 798, target: "x^2, x y^2, y^9, x y z^7, x z^8", f: "9 y^2 z^3 - 18 w z^3 y + 45 w^2 z^2 y + 9 z^5 - 85 w^2 z y^2 + 75 w^3 y^2 - 11 y z^4 + 27 w z^4", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 799, target: "x^2, x y^3, x y^2 z, x y z^6, y^9, x z^8", f: "y^2 z^3 - w z^2 y^2 + 2 w z^3 y sqrt(7) + 4 w^2 z y^2 + 7 z^5", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 804, target: "x^2, x y^3, x y^2 z^3, x y z^4, y^9, x z^8", f: "y^2 z^3 + 8 z^5 - 3 w z^3 y + 2 w z^4 - 12 y z^4", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 814, target: "x^2, x y^3, x y^2 z^2, x y z^6, x z^7, y^9", f: "y^2 z^3 + 6 z^5 + 6 w z^2 y^2 + 6 w z^3 y + 6 w z^4 + 6 y z^4", order: "lex" },
    KnownWitness { l: 3, m: 3, label: 888, target: "x^2, x y^3, x y^2 z, x y z^2, y^9, y^8 z^5", f: "y^2 z^3 + w z^4 - 2 z^5 + w^2 z y^2 + w^3 z^2 + w^2 z^2 y", order: "m(14,2,0,0,0,0,2,1)" },
    KnownWitness { l: 3, m: 3, label: 899, target: "x^2, x y^3, x y^2 z, x y z^3, y^9, y^8 z^4", f: "y^2 z^3 - 2 z^5 + w^2 z y^2 + w^2 z^2 y + w z^4", order: "m(14,2,0,0,0,0,2,1)" },
    KnownWitness { l: 3, m: 3, label: 914, target: "x^2, x y^3, x y^2 z, x y z^4, y^9, y^8 z^3", f: "y^2 z^3 - 2 z^5 + w^2 z y^2 - y z^4 + w z^4", order: "m(14,2,0,0,0,0,2,1)" },
    KnownWitness { l: 3, m: 3, label: 930, target: "x^2, x y^3, x y^2 z^2, x y z^4, y^9, y^8 z^2", f: "y^2 z^3 - 2 z^5 + w z^4 - w^2 z^2 y", order: "m(14,2,0,0,0,0,1,-1)" },
    KnownWitness { l: 3, m: 3, label: 944, target: "x^2, x y^3, x y^2 z^3, x y z^4, y^9, y^8 z", f: "y^2 z^3 + y z^4 - 2 z^5 + w z^4", order: "m(14,2,0,0,0,0,7,1)" },
    KnownWitness { l: 3, m: 3, label: 978, target: "x^2, x y^2, y^9, y^8 z, y^7 z^2", f: "y^2 z^3 + w^2 z^2 y - w^3 z y + w z^2 y^2 + w^4 z - 3 w^5", order: "m(12,2,0,0,0,0,7,1)" },
];

/// Polynomial system in the coefficients `C` of `F` (and auxiliary inverse variables)
/// emitted by [`generate_constraints`].
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    /// Names of the ring variables: the `C` variables, then the inverse variables.
    pub var_names: Vec<String>,
    /// Number of `C` variables (one per [`f_form_monomials`] entry).
    pub n_coeff_vars: usize,
    /// Relations `q(C) = 0`.
    pub equalities: Vec<Polynomial>,
    /// Relations `c_k q_k(C) - 1 = 0` with fresh `c_k`.
    pub inverses: Vec<Polynomial>,
    /// The factors `q_k(C)` that must be nonzero.
    pub nonzero: Vec<Polynomial>,
    /// Leading monomials chosen so far.
    pub leading: MonomialIdeal,
    /// Every S-pair was processed.
    pub complete: bool,
    /// The run stopped at the S-pair budget (or ran out of inverse variables).
    pub budget_exhausted: bool,
    /// The relations generate the unit ideal.
    pub inconsistent: bool,
    pub pairs_processed: usize,
}

impl ConstraintSystem {
    /// Whether `leading` saturates to `target` at the end of a complete run.
    pub fn stabilized_at(&self, target: &MonomialIdeal) -> bool {
        self.complete && !self.inconsistent && self.leading.saturation() == *target
    }

    /// Whether the coefficient values satisfy every equality and keep every
    /// required factor nonzero.
    pub fn is_satisfied_by(&self, c: &[Coeff]) -> bool {
        c.len() == self.n_coeff_vars
            && self.equalities.iter().all(|q| evaluate(q, c).is_zero())
            && self.nonzero.iter().all(|q| !evaluate(q, c).is_zero())
    }
}

fn evaluate(p: &Polynomial, c: &[Coeff]) -> Coeff {
    let mut acc = Coeff::zero();
    for (m, k) in p.terms() {
        let mut t = k.clone();
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                t = t.mul(&c.get(i).cloned().unwrap_or_else(Coeff::zero).pow(e));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// Polynomial in `x, y, z, w` with coefficients in the ring of the `C` variables,
/// terms sorted by decreasing monomial.
#[derive(Clone, Debug)]
struct SymPoly {
    terms: Vec<(Monomial, Polynomial)>,
}

/// Bookkeeping for the coefficient relations.  Coefficients are reduced modulo
/// the equalities that are single terms or linear, after cancelling variables
/// known to be invertible; the remaining equalities are only recorded.
struct SymContext<'a> {
    order: &'a TermOrder,
    nc: usize,
    simple: Vec<Polynomial>,
    gb: Vec<Polynomial>,
    invertible: Vec<bool>,
    nonzero: Vec<Polynomial>,
    others: Vec<Polynomial>,
    cring: TermOrder,
}

impl SymContext<'_> {
    fn normalize(&self, p: &mut SymPoly) {
        for t in p.terms.iter_mut() {
            t.1 = normal_form(&t.1, &self.gb, &self.cring);
        }
        p.terms.retain(|t| !t.1.is_zero());
    }

    fn build(&self, terms: Vec<(Monomial, Polynomial)>) -> SymPoly {
        let mut acc: Vec<(Monomial, Polynomial)> = Vec::new();
        let mut sorted = terms;
        sorted.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        for (m, c) in sorted {
            match acc.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => acc.push((m, c)),
            }
        }
        acc.retain(|t| !t.1.is_zero());
        SymPoly { terms: acc }
    }

    /// `a·f·u - b·g·v` for coefficient polynomials `a, b` and monomials `u, v`.
    fn combine(&self, a: &Polynomial, f: &SymPoly, u: &Monomial, b: &Polynomial, g: &SymPoly, v: &Monomial) -> SymPoly {
        let mut terms = Vec::with_capacity(f.terms.len() + g.terms.len());
        for (m, c) in &f.terms {
            terms.push((m.mul(u), a * c));
        }
        let nb = b.neg();
        for (m, c) in &g.terms {
            terms.push((m.mul(v), &nb * c));
        }
        self.build(terms)
    }

    fn reduce(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.gb, &self.cring)
    }

    /// Divides out the invertible variables common to every term.
    fn strip_invertible(&self, p: &Polynomial) -> Polynomial {
        let Some(first) = p.terms().first() else { return p.clone() };
        let g = p.terms().iter().fold(first.0.clone(), |g, t| g.gcd(&t.0));
        let exps: Vec<u32> = (0..self.nc).map(|i| if self.invertible[i] { g.exp(i) } else { 0 }).collect();
        p.div_monomial(&Monomial::from_vec(exps)).expect("gcd divides every term")
    }

    /// Whether a coefficient was already recorded as vanishing.
    fn declared_zero(&self, p: &Polynomial) -> bool {
        let r = self.strip_invertible(&self.reduce(p));
        r.is_zero() || r.make_monic(&self.cring).is_ok_and(|r| self.others.contains(&r))
    }

    /// Whether a coefficient is already known to be nonzero.
    fn known_nonzero(&self, p: &Polynomial) -> bool {
        p.is_term() && p.terms()[0].0.exps().iter().enumerate().all(|(i, &e)| e == 0 || self.invertible[i])
    }

    /// Recomputes the simplifying basis; returns `true` on inconsistency.
    fn rebuild(&mut self) -> Result<bool> {
        let mut simple = Vec::with_capacity(self.simple.len());
        for r in &self.simple {
            let r = self.strip_invertible(r);
            if r.is_nonzero_constant() {
                return Ok(true);
            }
            simple.push(r);
        }
        self.simple = simple;
        self.gb = buchberger(&PolynomialIdeal::new(self.nc, self.simple.clone())?, &self.cring)?.elements().to_vec();
        if self.gb.iter().any(Polynomial::is_nonzero_constant) {
            return Ok(true);
        }
        Ok(self.nonzero.iter().any(|q| self.reduce(q).is_zero()))
    }

    /// Records `q = 0`; returns `true` on inconsistency.
    fn add_equality(&mut self, q: &Polynomial) -> Result<bool> {
        let r = self.strip_invertible(&self.reduce(q));
        if r.is_zero() {
            return Ok(false);
        }
        if r.is_nonzero_constant() {
            return Ok(true);
        }
        if r.is_term() || r.degree() == Some(1) {
            self.simple.push(r);
            return self.rebuild();
        }
        self.others.push(r.make_monic(&self.cring)?);
        Ok(false)
    }

    /// Records `q != 0`; returns `true` on inconsistency.
    fn add_nonzero(&mut self, q: &Polynomial) -> Result<bool> {
        let r = self.reduce(q);
        if r.is_zero() {
            return Ok(true);
        }
        self.nonzero.push(r.clone());
        if r.is_term() {
            for (i, &e) in r.terms()[0].0.exps().iter().enumerate() {
                if e > 0 {
                    self.invertible[i] = true;
                }
            }
            return self.rebuild();
        }
        Ok(false)
    }
}

/// Runs the Buchberger-like loop with symbolic coefficients of `F`, emitting
/// relations that force the leading monomials into `target`.
///
/// A leading coefficient whose monomial lies in `target` is declared invertible
/// through a fresh variable; one whose monomial lies outside is declared zero
/// and the next term is inspected.  This follows a single branch of the case
/// split, so a witness whose leading coefficients vanish where this branch
/// assumes them invertible need not satisfy the system.  The run stops after `budget` S-pairs, or
/// earlier when a coefficient expression outgrows a fixed size cap.
pub fn generate_constraints(l: u32, m: u32, target: &MonomialIdeal, order: &TermOrder, budget: usize) -> Result<ConstraintSystem> {
    const INVERSE_SLOTS: usize = 32;
    const MAX_COEFF_TERMS: usize = 20_000;
    if l == 0 || m == 0 {
        return Err(Error::InvalidInput("l and m must be positive".into()));
    }
    if order.nvars() != 4 || target.nvars() != 4 {
        return Err(Error::RingMismatch("target and order must live in x, y, z, w".into()));
    }
    let monos = f_form_monomials(l, m);
    let nc_vars = monos.len();
    let nc = nc_vars + INVERSE_SLOTS;
    let mut names: Vec<String> = monos.iter().map(|(_, mo)| format!("C_{}_{}_{}", mo.exp(1), mo.exp(2), mo.exp(3))).collect();
    let mut ctx = SymContext { order, nc, simple: Vec::new(), gb: Vec::new(), invertible: vec![false; nc], nonzero: Vec::new(), others: Vec::new(), cring: TermOrder::degrevlex(nc) };
    let one = Polynomial::one(nc);
    let x2 = ctx.build(vec![(Monomial::new(&[2, 0, 0, 0]), one.clone())]);
    let xyl = ctx.build(vec![(Monomial::new(&[1, l, 0, 0]), one.clone())]);
    let mut g_terms = vec![(Monomial::new(&[0, l + m, 0, 0]), one.clone())];
    for (k, (_, mo)) in monos.iter().enumerate() {
        g_terms.push((mo.mul(&Monomial::new(&[1, 0, 0, 0])), Polynomial::var(nc, k)));
    }
    let g = ctx.build(g_terms);

    let mut basis: Vec<SymPoly> = Vec::new();
    let mut equalities = Vec::new();
    let mut inverses = Vec::new();
    let mut nonzero = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut inconsistent = false;
    let mut exhausted = false;
    let mut processed = 0;
    let mut queue: Vec<SymPoly> = vec![x2, xyl, g];
    let mut next_inverse = 0;

    'outer: loop {
        while let Some(mut h) = queue.pop() {
            ctx.normalize(&mut h);
            // Top-reduce, deciding each leading coefficient as it surfaces.
            let mut changed = false;
            while let Some((lm, lc)) = h.terms.first().cloned() {
                if h.terms.iter().map(|t| t.1.len()).sum::<usize>() > MAX_COEFF_TERMS {
                    exhausted = true;
                    break 'outer;
                }
                if let Some(b) = basis.iter().find(|b| b.terms[0].0.divides(&lm)) {
                    let q = lm.div(&b.terms[0].0).expect("divisible");
                    h = ctx.combine(&b.terms[0].1, &h, &Monomial::one(4), &lc, b, &q);
                    ctx.normalize(&mut h);
                    continue;
                }
                if target.contains(&lm) {
                    if !ctx.known_nonzero(&lc) {
                        if next_inverse == INVERSE_SLOTS {
                            exhausted = true;
                            break 'outer;
                        }
                        let c = Polynomial::var(nc, nc_vars + next_inverse);
                        names.push(format!("c{}", next_inverse + 1));
                        next_inverse += 1;
                        let rel = &(&c * &lc) - &one;
                        inverses.push(rel.clone());
                        nonzero.push(lc.clone());
                        changed = true;
                        if ctx.add_nonzero(&lc)? {
                            inconsistent = true;
                            break 'outer;
                        }
                    }
                    break;
                }
                h.terms.remove(0);
                if ctx.declared_zero(&lc) {
                    continue;
                }
                equalities.push(lc.clone());
                changed = true;
                if ctx.add_equality(&lc)? {
                    inconsistent = true;
                    break 'outer;
                }
                ctx.normalize(&mut h);
            }
            if changed {
                for b in basis.iter_mut() {
                    ctx.normalize(b);
                }
                if basis.iter().any(|b| b.terms.is_empty()) {
                    inconsistent = true;
                    break 'outer;
                }
            }
            if h.terms.is_empty() {
                continue;
            }
            let new = basis.len();
            for old in 0..new {
                if !basis[old].terms[0].0.is_coprime(&h.terms[0].0) {
                    pairs.push((old, new));
                }
            }
            basis.push(h);
        }
        if pairs.is_empty() {
            break;
        }
        if processed == budget {
            exhausted = true;
            break;
        }
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, (i, j))| (basis[*i].terms[0].0.lcm(&basis[*j].terms[0].0).degree(), *i, *j))
            .expect("pairs is nonempty");
        let (i, j) = pairs.remove(pos);
        processed += 1;
        let (mi, ci) = basis[i].terms[0].clone();
        let (mj, cj) = basis[j].terms[0].clone();
        let lcm = mi.lcm(&mj);
        let s = ctx.combine(&cj, &basis[i], &lcm.div(&mi).expect("lcm"), &ci, &basis[j], &lcm.div(&mj).expect("lcm"));
        queue.push(s);
    }
    names.truncate(nc_vars + next_inverse);
    let leading = MonomialIdeal::new(4, basis.iter().filter(|b| !b.terms.is_empty()).map(|b| b.terms[0].0.clone()).collect());
    Ok(ConstraintSystem {
        var_names: names,
        n_coeff_vars: nc_vars,
        equalities,
        inverses,
        nonzero,
        leading,
        complete: !exhausted && !inconsistent && pairs.is_empty(),
        budget_exhausted: exhausted,
        inconsistent,
        pairs_processed: processed,
    })
}

/// Coefficients for try `k` of a search: integers in `[-20, 20]`.  Variables
/// that a constraint system forces to vanish by a one-variable relation are
/// set to zero.
fn sample_coefficients(n: usize, seed: u64, k: u64, forced_zero: &[bool]) -> Vec<Coeff> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ k.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    (0..n).map(|i| if forced_zero[i] { Coeff::zero() } else { Coeff::from_int(rng.gen_range(-20..=20)) }).collect()
}

fn forced_zero_vars(system: Option<&ConstraintSystem>, n: usize) -> Vec<bool> {
    let mut out = vec![false; n];
    if let Some(s) = system {
        for q in &s.equalities {
            if q.len() == 1 {
                let m = &q.terms()[0].0;
                let vars: Vec<usize> = (0..m.nvars()).filter(|&i| m.exp(i) > 0).collect();
                if let [v] = vars[..] {
                    if v < n {
                        out[v] = true;
                    }
                }
            }
        }
    }
    out
}

/// Randomized search for a witness `F`: seeded integer coefficients, checked by
/// [`verify_witness`].  With a constraint system, samples violating its relations
/// are skipped.  Returns the first success in try order.
pub fn heuristic_solve(l: u32, m: u32, target: &MonomialIdeal, order: &TermOrder, seed: u64, tries: usize, system: Option<&ConstraintSystem>) -> Result<Option<Polynomial>> {
    let n = f_form_monomials(l, m).len();
    let forced = forced_zero_vars(system, n);
    let results: Vec<Result<Option<Polynomial>>> = (0..tries as u64)
        .into_par_iter()
        .map(|k| {
            let c = sample_coefficients(n, seed, k, &forced);
            if let Some(s) = system {
                if !s.is_satisfied_by(&c) {
                    return Ok(None);
                }
            }
            let f = f_from_coefficients(l, m, &c)?;
            if f.is_zero() {
                return Ok(None);
            }
            let p = WitnessProblem { l, m, target: target.clone(), order: order.clone(), f: Some(f.clone()) };
            Ok(verify_witness(&p)?.is_verified().then_some(f))
        })
        .collect();
    for r in results {
        if let Some(f) = r? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_monomial_ideal, parse_polynomial, parse_polynomial_list};

    #[test]
    fn minor_ideal_examples() {
        let i = minor_ideal(1, 3, &parse_polynomial("z^3", 4).unwrap()).unwrap();
        assert_eq!(i.gens(), parse_polynomial_list("x^2, x*y, x*z^3 + y^4", 4).unwrap().as_slice());
        assert!(minor_ideal(1, 3, &parse_polynomial("z^2", 4).unwrap()).is_err());
    }

    #[test]
    fn f_form_sizes() {
        assert_eq!(f_form_monomials(1, 3).len(), 4);
        assert_eq!(f_form_monomials(3, 1).len(), 9);
        assert_eq!(f_form_monomials(3, 3).len(), 15);
    }

    #[test]
    fn constraint_examples_for_the_twisted_family() {
        let j7 = parse_monomial_ideal("x^2, x*y, y^4", 4).unwrap();
        let s = generate_constraints(1, 3, &j7, &TermOrder::degrevlex(4), 50).unwrap();
        assert!(s.equalities.is_empty() && !s.inconsistent);
        let j5 = parse_monomial_ideal("x^2, x*y, x*z^3, y^5", 4).unwrap();
        let s = generate_constraints(1, 3, &j5, &TermOrder::lex(4), 50).unwrap();
        assert!(!s.inconsistent);
        let c = [Coeff::one(), Coeff::zero(), Coeff::zero(), Coeff::zero()];
        assert!(s.is_satisfied_by(&c));
        let j3 = parse_monomial_ideal("x^2, x*y, x*z, y^6, y^5*z^2", 4).unwrap();
        assert!(generate_constraints(1, 3, &j3, &TermOrder::lex(4), 50).unwrap().inconsistent);
    }
}
