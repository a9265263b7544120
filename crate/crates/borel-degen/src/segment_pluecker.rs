//! Segment certificates, non-segment obstructions, Plücker coordinates and the
//! component certificate built from them, together with the exact strict
//! feasibility solver shared with the weight computations.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::PolynomialIdeal;
use crate::linalg::{determinant_bareiss, row_basis};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::monomial_ideal::{gotzmann_number, MonomialIdeal};
use crate::order::TermOrder;

/// Difference vectors `v` for which a weight `w` with `w·v ≥ 1` is sought.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeparationProblem {
    pub dim: usize,
    pub vectors: Vec<Vec<i64>>,
}

impl SeparationProblem {
    /// An empty problem in `dim` unknowns.
    pub fn new(dim: usize) -> Self {
        SeparationProblem { dim, vectors: Vec::new() }
    }

    /// Adds the requirement `w·v ≥ 1`.
    pub fn push(&mut self, v: Vec<i64>) {
        assert_eq!(v.len(), self.dim, "difference vector has the wrong length");
        self.vectors.push(v);
    }
}

fn dot(w: &[BigInt], v: &[i64]) -> BigInt {
    w.iter().zip(v).map(|(a, &b)| a * BigInt::from(b)).sum()
}

/// Checks `w·v ≥ 1` for every vector of the problem.
pub fn verify_separation(prob: &SeparationProblem, w: &[BigInt]) -> bool {
    w.len() == prob.dim && prob.vectors.iter().all(|v| dot(w, v) >= BigInt::one())
}

/// Finds an integer `w` with `w·v ≥ 1` for all `v`, or `None` when none exists.
///
/// Solves `max Σ y_j` subject to `Σ y_j v_j = 0`, `y ≥ 0`, by the simplex
/// method with Bland's rule in exact arithmetic.  The problem is bounded
/// exactly when the requested `w` exists, and the simplex multipliers at the
/// optimum are such a `w`.
pub fn strict_feasible(prob: &SeparationProblem) -> Option<Vec<BigInt>> {
    let n = prob.dim;
    let mut seen = HashSet::new();
    let cols: Vec<&Vec<i64>> = prob.vectors.iter().filter(|v| seen.insert(v.as_slice())).collect();
    if cols.iter().any(|v| v.iter().all(|&x| x == 0)) {
        return None;
    }
    if cols.is_empty() {
        return Some(vec![BigInt::zero(); n]);
    }
    let m = cols.len();
    // Columns 0..m are the y's, m..m+n the artificial identity (it tracks B⁻¹).
    let width = m + n;
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut t: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| q(c[i])).collect();
            row.extend((0..n).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    // Reduced costs for maximizing Σ y: d_j = c_j − π·A_j, starting from π = 0.
    let mut d: Vec<BigRational> = (0..width).map(|j| if j < m { BigRational::one() } else { BigRational::zero() }).collect();
    let mut basis: Vec<Option<usize>> = vec![None; n];

    fn pivot(t: &mut [Vec<BigRational>], d: &mut [BigRational], r: usize, c: usize) {
        let inv = t[r][c].recip();
        for v in t[r].iter_mut() {
            *v = &*v * &inv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v = &*v - &f * p;
                }
            }
        }
        if !d[c].is_zero() {
            let f = d[c].clone();
            for (v, p) in d.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v = &*v - &f * p;
                }
            }
        }
    }

    // Drive the artificial variables out of the basis; rows left behind are redundant.
    for r in 0..n {
        if let Some(c) = (0..m).find(|&j| !t[r][j].is_zero()) {
            pivot(&mut t, &mut d, r, c);
            basis[r] = Some(c);
        }
    }
    while let Some(enter) = (0..m).find(|&j| d[j].is_positive()) {
        // No leaving row means the objective is unbounded, so no weight exists.
        let r = (0..n)
            .filter(|&r| basis[r].is_some() && t[r][enter].is_positive())
            .min_by_key(|&r| basis[r])?;
        pivot(&mut t, &mut d, r, enter);
        basis[r] = Some(enter);
    }
    // The reduced cost of artificial column k is −π_k.
    let pi: Vec<BigRational> = (0..n).map(|k| -d[m + k].clone()).collect();
    let lcm = pi.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let w: Vec<BigInt> = pi.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    debug_assert!(verify_separation(prob, &w));
    Some(w)
}

/// Converts weights to machine integers.
pub fn weights_to_i64(w: &[BigInt]) -> Result<Vec<i64>> {
    w.iter().map(|v| v.to_i64().ok_or(Error::ExponentOverflow)).collect()
}

fn diff(a: &Monomial, b: &Monomial) -> Vec<i64> {
    a.exps().iter().zip(b.exps()).map(|(x, y)| i64::from(*x) - i64::from(*y)).collect()
}

/// Weight vector and term order certifying that `J_t` is a segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentWitness {
    pub weights: Vec<i64>,
    pub order: TermOrder,
}

/// Checks that `w` puts every monomial of `J_t` strictly above the complement.
pub fn separates(j: &MonomialIdeal, t: u32, w: &[i64]) -> bool {
    let (mut lo, mut hi) = (None::<i128>, None::<i128>);
    for m in monomials_of_degree(j.nvars(), t) {
        let v: i128 = m.exps().iter().zip(w).map(|(e, c)| i128::from(*e) * i128::from(*c)).sum();
        if j.contains(&m) {
            lo = Some(lo.map_or(v, |x| x.min(v)));
        } else {
            hi = Some(hi.map_or(v, |x| x.max(v)));
        }
    }
    match (lo, hi) {
        (Some(a), Some(b)) => a > b,
        _ => true,
    }
}

/// Decides whether `J_t` is a segment: the first `dim J_t` monomials of `S_t` for some term order.
///
/// The separation constraints between `J_t` and its complement are added
/// lazily: the solver runs on the pairs between Borel-minimal elements of
/// `J_t` and Borel-maximal standard monomials, and the most violated pair of
/// the full system is added until the weight separates or the subsystem is
/// infeasible.
pub fn is_segment(j: &MonomialIdeal, t: u32) -> Result<Option<SegmentWitness>> {
    let n = j.nvars();
    let all = monomials_of_degree(n, t);
    let (inside, outside): (Vec<Monomial>, Vec<Monomial>) = all.into_iter().partition(|m| j.contains(m));
    let to_order = |w: Vec<i64>| -> Result<Option<SegmentWitness>> {
        let order = TermOrder::weighted(&w)?;
        Ok(Some(SegmentWitness { weights: w, order }))
    };
    if inside.is_empty() || outside.is_empty() {
        return to_order(vec![0; n]);
    }
    let moves = |m: &Monomial, up: bool| -> Vec<Monomial> {
        let mut out = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let (from, to) = if up { (i + 1, i) } else { (i, i + 1) };
            if m.exp(from) > 0 {
                let mut e = m.exps().to_vec();
                e[from] -= 1;
                e[to] += 1;
                out.push(Monomial::from_vec(e));
            }
        }
        out
    };
    let minimal: Vec<&Monomial> = inside.iter().filter(|m| moves(m, false).iter().all(|d| !j.contains(d))).collect();
    let maximal: Vec<&Monomial> = outside.iter().filter(|m| moves(m, true).iter().all(|u| j.contains(u))).collect();
    let mut prob = SeparationProblem::new(n);
    for a in &minimal {
        for b in &maximal {
            prob.push(diff(a, b));
        }
    }
    loop {
        let Some(w) = strict_feasible(&prob) else { return Ok(None) };
        let w = weights_to_i64(&w)?;
        let val = |m: &Monomial| -> i128 { m.exps().iter().zip(&w).map(|(e, c)| i128::from(*e) * i128::from(*c)).sum() };
        let a = inside.iter().min_by_key(|m| val(m)).expect("nonempty");
        let b = outside.iter().max_by_key(|m| val(m)).expect("nonempty");
        if val(a) > val(b) {
            return to_order(w);
        }
        prob.push(diff(a, b));
    }
}

/// A triple `u ∉ J_t`, `m1, m2 ∈ J_t` with `u² = m1·m2`, which no term order can separate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonSegmentCertificate {
    pub u: Monomial,
    pub m1: Monomial,
    pub m2: Monomial,
}

/// Searches for a [`NonSegmentCertificate`] in degree `t`.
pub fn non_segment_certificate(j: &MonomialIdeal, t: u32) -> Option<NonSegmentCertificate> {
    let n = j.nvars();
    let mut outside: Vec<Monomial> = monomials_of_degree(n, t).into_iter().filter(|m| !j.contains(m)).collect();
    outside.sort_by(|a, b| b.exps().cmp(a.exps()));
    for u in &outside {
        let sq = u.mul(u);
        for m1 in monomials_of_degree(n, t) {
            if !m1.divides(&sq) || !j.contains(&m1) {
                continue;
            }
            let m2 = sq.div(&m1).expect("m1 divides u²");
            if j.contains(&m2) {
                return Some(NonSegmentCertificate { u: u.clone(), m1, m2 });
            }
        }
    }
    None
}

/// Segment class of a saturated Borel ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentClass {
    /// `J_r` is a segment at the Gotzmann number `r`.
    HilbertSegment(SegmentWitness),
    /// `J_{m0}` is a segment at the regularity `m0`, but `J_r` is not.
    RegSegment(SegmentWitness),
    /// Segment only in the listed degrees below the regularity.
    SegmentAt(Vec<u32>),
    /// Not a segment in any degree from 1 to the Gotzmann number.
    None,
}

/// Classifies a saturated Borel ideal by the degrees in which it is a segment.
pub fn classify_segment(j: &MonomialIdeal) -> Result<SegmentClass> {
    let r = gotzmann_number(&j.hilbert_polynomial_quotient())? as u32;
    let m0 = j.regularity_borel()?;
    if let Some(w) = is_segment(j, r)? {
        return Ok(SegmentClass::HilbertSegment(w));
    }
    if m0 <= r {
        if let Some(w) = is_segment(j, m0)? {
            return Ok(SegmentClass::RegSegment(w));
        }
    }
    let mut degs = Vec::new();
    for t in 1..m0.min(r) {
        if is_segment(j, t)?.is_some() {
            degs.push(t);
        }
    }
    Ok(if degs.is_empty() { SegmentClass::None } else { SegmentClass::SegmentAt(degs) })
}

/// Rows of a basis of `I_t` in the monomial basis of `S_t` (descending lex).
pub fn degree_basis(i: &PolynomialIdeal, t: u32) -> (Vec<Monomial>, Vec<Vec<Coeff>>) {
    let cols = monomials_of_degree(i.nvars(), t);
    let span = crate::linalg::degree_piece_spanning_set(i.gens(), t);
    let rows = if span.is_empty() { Vec::new() } else { row_basis(&span, &cols) };
    (cols, rows)
}

/// Whether the Plücker coordinate of `I_t` indexed by the monomials of `J_t` is nonzero.
pub fn pluecker_nonzero(i: &PolynomialIdeal, j: &MonomialIdeal, t: u32) -> Result<bool> {
    let (cols, rows) = degree_basis(i, t);
    let picked: Vec<usize> = cols.iter().enumerate().filter(|(_, m)| j.contains(m)).map(|(k, _)| k).collect();
    if picked.len() != rows.len() {
        return Err(Error::DimensionMismatch(format!("dim I_{t} = {} but dim J_{t} = {}", rows.len(), picked.len())));
    }
    let sub: Vec<Vec<Coeff>> = rows.iter().map(|r| picked.iter().map(|&k| r[k].clone()).collect()).collect();
    Ok(!determinant_bareiss(sub).is_zero())
}

/// Outcome of [`component_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `J_t` is a segment and the Plücker coordinate of `I_s` at `J_s` is nonzero.
    Certified(SegmentWitness),
    Inconclusive,
}

/// Certifies that `I` and `J` lie on the same Hilbert scheme component.
pub fn component_certificate(i: &PolynomialIdeal, j: &MonomialIdeal, s: u32, t: u32) -> Result<Certificate> {
    let Some(w) = is_segment(j, t)? else { return Ok(Certificate::Inconclusive) };
    if pluecker_nonzero(i, j, s)? {
        Ok(Certificate::Certified(w))
    } else {
        Ok(Certificate::Inconclusive)
    }
}
