//! Enumeration of saturated Borel-fixed ideals with a given Hilbert polynomial.
//!
//! A saturated Borel ideal `J ⊂ k[x,y,z,w]` has generators free of `w`, so it
//! is the extension of a Borel ideal `J' ⊂ R = k[x,y,z]`.  Saturating `J'` by
//! `z` gives `T·R` for an artinian Borel ideal `T ⊂ k[x,y]` whose colength is
//! the degree `d` of the curve.  The ideal `J'` is then `T·R` with a finite set
//! `Q` of monomials removed, where `Q` is closed under the moves
//! `q ↦ q/x_i` and `q ↦ q·x_{i+1}/x_i` that stay inside `T·R`.  The Hilbert
//! polynomial fixes `|Q|`, so the enumeration runs over pairs `(T, Q)`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::{generator_order, gotzmann_number, HilbertPolynomial, MonomialIdeal};

/// The catalogue of saturated Borel ideals with a fixed Hilbert polynomial.
#[derive(Clone, Debug)]
pub struct BorelCatalog {
    entries: Vec<MonomialIdeal>,
    p: HilbertPolynomial,
    nvars: usize,
}

impl BorelCatalog {
    /// Entries in catalogue order.
    pub fn entries(&self) -> &[MonomialIdeal] {
        &self.entries
    }

    /// The Hilbert polynomial.
    pub fn hilbert_polynomial(&self) -> &HilbertPolynomial {
        &self.p
    }

    /// Number of ring variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True when the catalogue is empty.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based position of `ideal` in the catalogue.
    pub fn label(&self, ideal: &MonomialIdeal) -> Result<usize> {
        self.entries.iter().position(|e| e == ideal).map(|i| i + 1).ok_or(Error::NotInCatalogue)
    }

    /// The entry with a 1-based label.
    pub fn get(&self, label: usize) -> Option<&MonomialIdeal> {
        label.checked_sub(1).and_then(|i| self.entries.get(i))
    }
}

/// 1-based label of `ideal` in `c`.
pub fn catalog_label(c: &BorelCatalog, ideal: &MonomialIdeal) -> Result<usize> {
    c.label(ideal)
}

/// Artinian Borel ideal of `k[x,y]` described by the column heights of its
/// standard monomials: `x^i y^j` is standard iff `i < heights.len()` and `j < heights[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Staircase {
    heights: Vec<u32>,
}

impl Staircase {
    /// Membership of `x^i y^j z^k` in `T·R`.
    fn contains(&self, m: &[u32]) -> bool {
        let i = m[0] as usize;
        i >= self.heights.len() || m[1] >= self.heights[i]
    }

    /// Minimal generators of `T·R` in three variables.
    fn generators(&self) -> Vec<Monomial> {
        let a = self.heights.len() as u32;
        let mut g = vec![Monomial::new(&[a, 0, 0])];
        for (i, &h) in self.heights.iter().enumerate() {
            g.push(Monomial::new(&[i as u32, h, 0]));
        }
        crate::monomial_ideal::minimalize(g)
    }

    /// Hilbert function of `R / T·R` in degree `e`.
    fn quotient_hf(&self, e: u32) -> u32 {
        self.heights
            .iter()
            .enumerate()
            .map(|(i, &h)| {
                let i = i as u32;
                if i > e {
                    0
                } else {
                    h.min(e - i + 1)
                }
            })
            .sum()
    }

    fn top_standard_degree(&self) -> u32 {
        self.heights.iter().enumerate().map(|(i, &h)| i as u32 + h - 1).max().unwrap_or(0)
    }
}

/// All strictly decreasing positive sequences summing to `d`.
fn staircases(d: u32) -> Vec<Staircase> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Staircase>) {
        if left == 0 {
            out.push(Staircase { heights: cur.clone() });
            return;
        }
        for h in (1..=left.min(max)).rev() {
            cur.push(h);
            rec(left - h, h - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Lower covers of `q` inside `T·R`: `q/x_i` and `q·x_{i+1}/x_i`.
fn lower_covers(t: &Staircase, q: &[u32; 3]) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(5);
    for i in 0..3 {
        if q[i] == 0 {
            continue;
        }
        let mut a = *q;
        a[i] -= 1;
        if t.contains(&a) {
            out.push(a);
        }
        if i + 1 < 3 {
            let mut b = *q;
            b[i] -= 1;
            b[i + 1] += 1;
            if t.contains(&b) {
                out.push(b);
            }
        }
    }
    out
}

/// Upper covers of `q`: `q·x_i` and `q·x_i/x_{i+1}`.
fn upper_covers(q: &[u32; 3]) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(5);
    for i in 0..3 {
        let mut a = *q;
        a[i] += 1;
        out.push(a);
        if i + 1 < 3 && q[i + 1] > 0 {
            let mut b = *q;
            b[i + 1] -= 1;
            b[i] += 1;
            out.push(b);
        }
    }
    out
}

/// Size of the principal down-set of `q`, or `None` once it exceeds `limit`.
fn down_set_size(t: &Staircase, q: &[u32; 3], limit: usize) -> Option<usize> {
    let mut seen: std::collections::HashSet<[u32; 3]> = std::collections::HashSet::new();
    let mut stack = vec![*q];
    seen.insert(*q);
    while let Some(x) = stack.pop() {
        for y in lower_covers(t, &x) {
            if seen.insert(y) {
                if seen.len() > limit {
                    return None;
                }
                stack.push(y);
            }
        }
    }
    Some(seen.len())
}

/// All down-sets of size exactly `delta` in the poset of monomials of `T·R`.
fn hole_sets(t: &Staircase, delta: usize) -> Vec<Vec<[u32; 3]>> {
    if delta == 0 {
        return vec![Vec::new()];
    }
    // Candidates: elements whose principal down-set has at most `delta` elements.
    let mins: Vec<[u32; 3]> = t
        .generators()
        .iter()
        .map(|g| [g.exp(0), g.exp(1), g.exp(2)])
        .filter(|g| lower_covers(t, g).is_empty())
        .collect();
    let mut cand: std::collections::HashSet<[u32; 3]> = mins.iter().copied().collect();
    let mut stack = mins;
    while let Some(x) = stack.pop() {
        for y in upper_covers(&x) {
            if cand.contains(&y) {
                continue;
            }
            if down_set_size(t, &y, delta).is_some() {
                cand.insert(y);
                stack.push(y);
            }
        }
    }
    let mut cand: Vec<[u32; 3]> = cand.into_iter().collect();
    cand.sort_by(|a, b| {
        let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    let index: HashMap<[u32; 3], usize> = cand.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let lower: Vec<Vec<usize>> = cand.iter().map(|c| lower_covers(t, c).iter().map(|l| index[l]).collect()).collect();
    let mut out = Vec::new();
    let mut chosen = vec![false; cand.len()];
    let mut picked = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        k: usize,
        delta: usize,
        cand: &[[u32; 3]],
        lower: &[Vec<usize>],
        chosen: &mut [bool],
        picked: &mut Vec<usize>,
        out: &mut Vec<Vec<[u32; 3]>>,
    ) {
        if picked.len() == delta {
            out.push(picked.iter().map(|&i| cand[i]).collect());
            return;
        }
        if k == cand.len() || cand.len() - k < delta - picked.len() {
            return;
        }
        if lower[k].iter().all(|&l| chosen[l]) {
            chosen[k] = true;
            picked.push(k);
            dfs(k + 1, delta, cand, lower, chosen, picked, out);
            picked.pop();
            chosen[k] = false;
        }
        dfs(k + 1, delta, cand, lower, chosen, picked, out);
    }
    dfs(0, delta, &cand, &lower, &mut chosen, &mut picked, &mut out);
    out
}

/// Minimal generators of `T·R ∖ Q` in three variables.
fn remove_holes(t: &Staircase, holes: &[[u32; 3]]) -> Vec<Monomial> {
    let hs: std::collections::HashSet<[u32; 3]> = holes.iter().copied().collect();
    let mut gens: Vec<Monomial> = t
        .generators()
        .into_iter()
        .filter(|g| !hs.contains(&[g.exp(0), g.exp(1), g.exp(2)]))
        .collect();
    for q in holes {
        for i in 0..3 {
            let mut a = *q;
            a[i] += 1;
            if !hs.contains(&a) {
                gens.push(Monomial::new(&a));
            }
        }
    }
    crate::monomial_ideal::minimalize(gens)
}

/// Order in which catalogue entries are listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CatalogOrder {
    /// Blocks by the staircase of `J : z^∞` in descending lex order of column
    /// heights; inside a block, by the removed monomials sorted ascending and
    /// compared lexicographically.  This reproduces the labels of the
    /// standard Borel ideal lists, with the lex ideal first.
    #[default]
    Staircase,
    /// Generator lists compared under graded-lex.
    GeneratorLists,
}

/// Compares two ideals by their generator lists (each sorted by [`generator_order`]).
pub fn compare_generator_lists(a: &MonomialIdeal, b: &MonomialIdeal) -> std::cmp::Ordering {
    for (x, y) in a.gens().iter().zip(b.gens()) {
        match generator_order(x, y) {
            std::cmp::Ordering::Equal => {}
            o => return o,
        }
    }
    a.gens().len().cmp(&b.gens().len())
}

/// All saturated Borel-fixed ideals in `nvars` variables whose quotient has Hilbert polynomial `p`.
///
/// Supported: `nvars = 4` with `p` constant or linear, and `nvars = 3` with `p` constant.
pub fn enumerate_saturated_borel(p: &HilbertPolynomial, nvars: usize) -> Result<BorelCatalog> {
    enumerate_saturated_borel_ordered(p, nvars, CatalogOrder::default())
}

/// [`enumerate_saturated_borel`] with an explicit catalogue order.
pub fn enumerate_saturated_borel_ordered(p: &HilbertPolynomial, nvars: usize, order: CatalogOrder) -> Result<BorelCatalog> {
    let (d, c) = p.as_linear().ok_or_else(|| Error::InvalidInput(format!("unsupported Hilbert polynomial {p}")))?;
    let entries = match nvars {
        4 => {
            if d < 0 {
                return Err(Error::NotAHilbertPolynomial(p.to_string()));
            }
            gotzmann_number(p)?;
            let d = d as u32;
            let ts = if d == 0 { vec![Staircase { heights: Vec::new() }] } else { staircases(d) };
            let per_t: Vec<Vec<MonomialIdeal>> = ts
                .par_iter()
                .map(|t| {
                    let top = t.top_standard_degree();
                    let deficit: i64 = if t.heights.is_empty() {
                        0
                    } else {
                        (0..=top).map(|e| i64::from(d - t.quotient_hf(e))).sum()
                    };
                    let delta = c - i64::from(d) + deficit;
                    if delta < 0 {
                        return Vec::new();
                    }
                    let mut sets = hole_sets(t, delta as usize);
                    for q in &mut sets {
                        q.sort();
                    }
                    sets.sort();
                    sets.into_iter()
                        .map(|q| {
                            let gens = remove_holes(t, &q).into_iter().map(|g| Monomial::new(&[g.exp(0), g.exp(1), g.exp(2), 0]));
                            MonomialIdeal::new(4, gens.collect())
                        })
                        .collect()
                })
                .collect();
            per_t.into_iter().flatten().collect::<Vec<_>>()
        }
        3 => {
            if d != 0 || c < 0 {
                return Err(Error::InvalidInput("three variables support constant Hilbert polynomials only".into()));
            }
            let ts = if c == 0 { vec![Staircase { heights: Vec::new() }] } else { staircases(c as u32) };
            ts.iter()
                .map(|t| {
                    let gens = t.generators().into_iter().map(|g| Monomial::new(&[g.exp(0), g.exp(1), 0]));
                    MonomialIdeal::new(3, gens.collect())
                })
                .collect()
        }
        _ => return Err(Error::InvalidInput(format!("enumeration in {nvars} variables is not supported"))),
    };
    let mut entries = entries;
    for e in &entries {
        let hp = e.hilbert_polynomial_quotient();
        if hp != *p {
            return Err(Error::Internal(format!("enumerated {e} has Hilbert polynomial {hp}, expected {p}")));
        }
    }
    if order == CatalogOrder::GeneratorLists {
        entries.sort_by(compare_generator_lists);
    }
    Ok(BorelCatalog { entries, p: p.clone(), nvars })
}
