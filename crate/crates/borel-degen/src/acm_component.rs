//! Borel ideals attached to the component of arithmetically Cohen–Macaulay
//! curves of codimension two: the ideals `J(a,b)` and `J(l,m)`, the shapes of
//! Borel ideals that may lie on the component of `J(l,m)`, the necessary
//! conditions C1 and C2, and the ideals predicted to lie on the component.

use rayon::prelude::*;

use crate::borel_enum::enumerate_saturated_borel;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::{gotzmann_number, MonomialIdeal};

/// Exponent data of `J(a,b) = (x^a, x^{a-1} y^{b_1}, ..., y^{b_a})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcmBorelSpec {
    /// Power of `x` in the first generator.
    pub a: u32,
    /// The `y`-exponents `b_1 < ... < b_a`.
    pub b: Vec<u32>,
}

impl AcmBorelSpec {
    /// Checked constructor.
    pub fn new(a: u32, b: Vec<u32>) -> Result<Self> {
        let s = AcmBorelSpec { a, b };
        s.validate()?;
        Ok(s)
    }

    /// The shape data of `J(l,m) = (x^2, x y^l, y^{l+m})`.
    pub fn quadric(l: u32, m: u32) -> Self {
        AcmBorelSpec { a: 2, b: vec![l, l + m] }
    }

    fn validate(&self) -> Result<()> {
        if self.a == 0 {
            return Err(Error::InvalidInput("a must be positive".into()));
        }
        if self.b.len() != self.a as usize {
            return Err(Error::InvalidInput(format!("b must have {} entries", self.a)));
        }
        let mut prev = 0;
        for &v in &self.b {
            if v <= prev {
                return Err(Error::InvalidInput("b must satisfy 0 < b_1 < ... < b_a".into()));
            }
            prev = v;
        }
        Ok(())
    }

    /// The generators `x^{a-s} y^{b_s}` of `J(a,b)`.
    pub fn generators(&self, n: usize) -> Vec<Monomial> {
        self.staircase(n, false)
    }

    /// The monomials `x^{a-s} y^{d_s}` with `d_s = b_1 + ... + b_s` required by C1.
    pub fn c1_monomials(&self, n: usize) -> Vec<Monomial> {
        self.staircase(n, true)
    }

    fn staircase(&self, n: usize, cumulative: bool) -> Vec<Monomial> {
        let mut d = 0;
        let mut out = Vec::with_capacity(self.a as usize + 1);
        for s in 0..=self.a as usize {
            if s > 0 {
                d = if cumulative { d + self.b[s - 1] } else { self.b[s - 1] };
            }
            let mut e = vec![0; n];
            e[0] = self.a - s as u32;
            e[1] = d;
            out.push(Monomial::from_vec(e));
        }
        out
    }
}

/// The ideal `J(a,b)` in `n ≥ 2` variables.
pub fn j_ab(spec: &AcmBorelSpec, n: usize) -> Result<MonomialIdeal> {
    spec.validate()?;
    if n < 2 {
        return Err(Error::InvalidInput("J(a,b) needs at least two variables".into()));
    }
    Ok(MonomialIdeal::new(n, spec.generators(n)))
}

/// `J(l,m) = (x^2, x y^l, y^{l+m})` in four variables.
pub fn j_lm(l: u32, m: u32) -> Result<MonomialIdeal> {
    if l == 0 || m == 0 {
        return Err(Error::InvalidInput("l and m must be positive".into()));
    }
    j_ab(&AcmBorelSpec::quadric(l, m), 4)
}

/// Whether the exponent sequences must be strictly decreasing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    /// Strictly decreasing until they possibly become zero.
    Borel,
    /// Weakly decreasing.
    AlmostBorel,
}

/// Shape of a Borel or almost Borel ideal that may lie on the component of `J(l,m)`:
///
/// `x^2; x y^{l-p} z^{a_0}, ..., x y^{l-1} z^{a_{p-1}}, x y^l;
///  y^{l+m+p} z^{b_p}, ..., y^{2l+m-1} z^{b_{l-1}}, y^{2l+m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricCandidateSpec {
    pub l: u32,
    pub m: u32,
    pub p: u32,
    /// `a_0, ..., a_{p-1}`.
    pub a: Vec<u32>,
    /// `b_p, ..., b_{l-1}`.
    pub b: Vec<u32>,
    pub strictness: Strictness,
}

fn strictly_decreasing_until_zero(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] > w[1] || (w[0] == 0 && w[1] == 0))
}

fn weakly_decreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

impl QuadricCandidateSpec {
    /// Checked constructor.
    pub fn new(l: u32, m: u32, p: u32, a: Vec<u32>, b: Vec<u32>, strictness: Strictness) -> Result<Self> {
        let s = QuadricCandidateSpec { l, m, p, a, b, strictness };
        s.validate()?;
        Ok(s)
    }

    /// Builds a spec, choosing [`Strictness::Borel`] when both sequences allow it.
    pub fn classify(l: u32, m: u32, p: u32, a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        let strictness = if strictly_decreasing_until_zero(&a) && strictly_decreasing_until_zero(&b) {
            Strictness::Borel
        } else {
            Strictness::AlmostBorel
        };
        Self::new(l, m, p, a, b, strictness)
    }

    /// Checks the shape invariants.
    pub fn validate(&self) -> Result<()> {
        if self.l == 0 || self.m == 0 {
            return Err(Error::InvalidInput("l and m must be positive".into()));
        }
        if self.p > self.l {
            return Err(Error::InvalidInput(format!("p = {} exceeds l = {}", self.p, self.l)));
        }
        if self.a.len() != self.p as usize || self.b.len() != (self.l - self.p) as usize {
            return Err(Error::InvalidInput(format!(
                "expected {} entries in a and {} in b, got {} and {}",
                self.p,
                self.l - self.p,
                self.a.len(),
                self.b.len()
            )));
        }
        let ok = match self.strictness {
            Strictness::Borel => strictly_decreasing_until_zero(&self.a) && strictly_decreasing_until_zero(&self.b),
            Strictness::AlmostBorel => weakly_decreasing(&self.a) && weakly_decreasing(&self.b),
        };
        if !ok {
            return Err(Error::InvalidInput(format!("sequences a = {:?}, b = {:?} violate {:?} shape", self.a, self.b, self.strictness)));
        }
        Ok(())
    }
}

/// The ideal with the generators of [`QuadricCandidateSpec`], minimalized.
pub fn candidate_ideal(spec: &QuadricCandidateSpec) -> Result<MonomialIdeal> {
    spec.validate()?;
    let (l, m, p) = (spec.l, spec.m, spec.p);
    let mut g = vec![Monomial::new(&[2, 0, 0, 0]), Monomial::new(&[1, l, 0, 0]), Monomial::new(&[0, 2 * l + m, 0, 0])];
    for (i, &ai) in spec.a.iter().enumerate() {
        g.push(Monomial::new(&[1, l - p + i as u32, ai, 0]));
    }
    for (k, &bk) in spec.b.iter().enumerate() {
        g.push(Monomial::new(&[0, l + m + p + k as u32, bk, 0]));
    }
    Ok(MonomialIdeal::new(4, g))
}

/// C1: every `x^{a-s} y^{d_s}` lies in `J`.
pub fn necessary_condition_c1(j: &MonomialIdeal, spec: &AcmBorelSpec) -> bool {
    spec.c1_monomials(j.nvars()).iter().all(|m| j.contains(m))
}

/// C2: `dim J_d ≥ dim (ref)_d` for every degree `d`.
///
/// Both ideals are saturated with the same Hilbert polynomial, so their
/// Hilbert functions agree from the Gotzmann number on and the check stops there.
pub fn condition_c2(j: &MonomialIdeal, reference: &MonomialIdeal) -> Result<bool> {
    let p = j.hilbert_polynomial_quotient();
    let q = reference.hilbert_polynomial_quotient();
    if p != q {
        return Err(Error::HilbertPolynomialMismatch(format!("{p} vs {q}")));
    }
    let r = gotzmann_number(&p)? as u32;
    Ok((0..=r).all(|d| j.hf_ideal(d) >= reference.hf_ideal(d)))
}

/// `Σ a_i + Σ b_i = Σ_{i<p} (m + 2i)`: the candidate then has the Hilbert polynomial of `J(l,m)`.
pub fn hp_sum_condition(spec: &QuadricCandidateSpec) -> bool {
    let lhs: u64 = spec.a.iter().chain(&spec.b).map(|&v| u64::from(v)).sum();
    let rhs: u64 = (0..spec.p).map(|i| u64::from(spec.m + 2 * i)).sum();
    lhs == rhs
}

/// A catalogue entry together with its 1-based label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledIdeal {
    pub label: usize,
    pub ideal: MonomialIdeal,
}

/// Catalogue of `J(l,m)`'s Hilbert polynomial split by the conditions C1 and C2.
#[derive(Clone, Debug)]
pub struct FilterResult {
    pub passing: Vec<LabeledIdeal>,
    pub failing_c1: Vec<LabeledIdeal>,
    pub failing_c2: Vec<LabeledIdeal>,
}

/// Which monomials the C1 test demands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum C1Check {
    /// All of `x^2, x y^l, y^{2l+m}`.
    #[default]
    Full,
    /// Only `y^{2l+m}`.
    TopPower,
}

/// C1 for `J(l,m)` in the chosen variant.
pub fn c1_for_quadric(j: &MonomialIdeal, l: u32, m: u32, check: C1Check) -> bool {
    match check {
        C1Check::Full => necessary_condition_c1(j, &AcmBorelSpec::quadric(l, m)),
        C1Check::TopPower => {
            let mut e = vec![0; j.nvars()];
            e[1] = 2 * l + m;
            j.contains(&Monomial::from_vec(e))
        }
    }
}

/// Enumerates the saturated Borel ideals with the Hilbert polynomial of `J(l,m)`
/// and partitions them by C1 (shape `a = 2, b = (l, l+m)`) and then C2 against `J(l,m)`.
pub fn filter_candidates(l: u32, m: u32) -> Result<FilterResult> {
    filter_candidates_with(l, m, C1Check::Full)
}

/// [`filter_candidates`] with a chosen C1 variant.
pub fn filter_candidates_with(l: u32, m: u32, check: C1Check) -> Result<FilterResult> {
    let reference = j_lm(l, m)?;
    let catalog = enumerate_saturated_borel(&reference.hilbert_polynomial_quotient(), 4)?;
    let verdicts: Vec<Result<(bool, bool)>> = catalog
        .entries()
        .par_iter()
        .map(|j| {
            if !c1_for_quadric(j, l, m, check) {
                return Ok((false, false));
            }
            Ok((true, condition_c2(j, &reference)?))
        })
        .collect();
    let mut out = FilterResult { passing: Vec::new(), failing_c1: Vec::new(), failing_c2: Vec::new() };
    for (i, (j, v)) in catalog.entries().iter().zip(verdicts).enumerate() {
        let entry = LabeledIdeal { label: i + 1, ideal: j.clone() };
        match v? {
            (false, _) => out.failing_c1.push(entry),
            (true, false) => out.failing_c2.push(entry),
            (true, true) => out.passing.push(entry),
        }
    }
    Ok(out)
}

/// The `p = 1` prediction: `a = (m - i)`, `b = (i, 0, ..., 0)`.
pub fn predicted_p1(l: u32, m: u32, i: u32) -> Result<QuadricCandidateSpec> {
    if i > m {
        return Err(Error::InvalidInput(format!("i = {i} exceeds m = {m}")));
    }
    if l == 0 {
        return Err(Error::InvalidInput("l must be positive".into()));
    }
    let mut b = vec![0; (l - 1) as usize];
    if let Some(first) = b.first_mut() {
        *first = i;
    } else if i != 0 {
        return Err(Error::InvalidInput("l = 1 leaves no slot for b, so i must be 0".into()));
    }
    QuadricCandidateSpec::classify(l, m, 1, vec![m - i], b)
}

/// The `p = 2` prediction with `a = (a0, a1)`, `b = (b2, 0, ..., 0)`.
///
/// The flag is true when `a0 ≥ m+2`, or `a0 ≤ m+2` and `a0 - a1` is even.
pub fn predicted_p2(l: u32, m: u32, a0: u32, a1: u32, b2: u32) -> Result<(QuadricCandidateSpec, bool)> {
    if a0 + a1 + b2 != 2 * m + 2 {
        return Err(Error::InvalidInput(format!("a0 + a1 + b2 = {} differs from 2m+2 = {}", a0 + a1 + b2, 2 * m + 2)));
    }
    if l < 2 {
        return Err(Error::InvalidInput("p = 2 needs l ≥ 2".into()));
    }
    if a0 < a1 {
        return Err(Error::InvalidInput("a0 ≥ a1 is required".into()));
    }
    let mut b = vec![0; (l - 2) as usize];
    match b.first_mut() {
        Some(first) => *first = b2,
        None if b2 != 0 => return Err(Error::InvalidInput("l = 2 leaves no slot for b2".into())),
        None => {}
    }
    let ok = a0 >= m + 2 || (a0 - a1).is_multiple_of(2);
    Ok((QuadricCandidateSpec::classify(l, m, 2, vec![a0, a1], b)?, ok))
}

/// Which case of the `p = 3` sufficiency statement applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P3Case {
    One,
    Two,
    Three,
    None,
}

fn smallest_odd_prime_factor(mut n: u32) -> Option<u32> {
    while n > 0 && n.is_multiple_of(2) {
        n /= 2;
    }
    if n <= 1 {
        return None;
    }
    let mut f = 3;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return Some(f);
        }
        f += 2;
    }
    Some(n)
}

/// The `p = 3` prediction with `a = (a0, a1, a2)` and `b = 0`, classified by case.
///
/// Case 1: `a1 < m+2`, excluding the corner `a2 = a1 - 1` with `3 a1 ≤ 2m+4`.
/// Case 2: `a1 = m+2` and `a2 ≤ m`.
/// Case 3: `a = (m+2+e+a', m+2+e, m+2-2e-a')` with `e, a' > 0`, `m+2 ≥ 2e+a'`,
/// and `p·e ≤ a'` for the smallest odd prime factor `p` of `a'`.
pub fn predicted_p3(l: u32, m: u32, a0: u32, a1: u32, a2: u32) -> Result<(QuadricCandidateSpec, P3Case)> {
    if a0 + a1 + a2 != 3 * m + 6 {
        return Err(Error::InvalidInput(format!("a0 + a1 + a2 = {} differs from 3m+6 = {}", a0 + a1 + a2, 3 * m + 6)));
    }
    if !(a0 >= a1 && a1 >= a2) {
        return Err(Error::InvalidInput("a0 ≥ a1 ≥ a2 is required".into()));
    }
    if l < 3 {
        return Err(Error::InvalidInput("p = 3 needs l ≥ 3".into()));
    }
    let spec = QuadricCandidateSpec::classify(l, m, 3, vec![a0, a1, a2], vec![0; (l - 3) as usize])?;
    let case = if a1 < m + 2 {
        if a2 + 1 == a1 && 3 * a1 <= 2 * m + 4 {
            P3Case::None
        } else {
            P3Case::One
        }
    } else if a1 == m + 2 && a2 <= m {
        P3Case::Two
    } else {
        let e = a1 - (m + 2);
        let ap = a0 - a1;
        let case3 = e > 0
            && ap > 0
            && m + 2 >= 2 * e + ap
            && a2 == m + 2 - 2 * e - ap
            && smallest_odd_prime_factor(ap).is_some_and(|p| p * e <= ap);
        if case3 {
            P3Case::Three
        } else {
            P3Case::None
        }
    };
    Ok((spec, case))
}

/// All weakly decreasing sequences of `parts` entries in `[0, max_part]` summing to `total`,
/// in descending lex order.
pub fn partitions(total: u32, parts: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, slots: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if u64::from(cap) * u64::from(slots) < u64::from(left) {
            return;
        }
        for v in (0..=cap.min(left)).rev() {
            cur.push(v);
            rec(left - v, slots - 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, max_part, &mut Vec::new(), &mut out);
    out
}

/// The `p = l` prediction with
/// `a_i = m + 2(l-1-i) + (l-1-i) p_{i+1} - (l-i) p_i + p_0` and `p_l = 0`.
///
/// The flag holds when `r·p_{l-r} ≥ Σ p_{λ_j}` for every `r < l` and every
/// partition `λ` of `r(l-r)` into `r` parts of sizes at most `l-1`.
pub fn predicted_part(l: u32, m: u32, p_vec: &[u32]) -> Result<(QuadricCandidateSpec, bool)> {
    if p_vec.len() != l as usize || l == 0 {
        return Err(Error::InvalidInput(format!("p_vec must have l = {l} entries")));
    }
    for i in 1..p_vec.len() {
        if p_vec[i - 1] + (i as u32 - 1) > p_vec[i] + i as u32 {
            return Err(Error::InvalidInput("p_0 ≤ p_1 + 1 ≤ ... ≤ p_{l-1} + l - 1 is required".into()));
        }
    }
    let pv = |i: u32| -> i64 { p_vec.get(i as usize).map_or(0, |&v| i64::from(v)) };
    let (li, mi) = (i64::from(l), i64::from(m));
    let mut a = Vec::with_capacity(l as usize);
    for i in 0..l {
        let ii = i64::from(i);
        let v = mi + 2 * (li - 1 - ii) + (li - 1 - ii) * pv(i + 1) - (li - ii) * pv(i) + pv(0);
        if v < 0 {
            return Err(Error::InvalidInput(format!("a_{i} = {v} is negative")));
        }
        a.push(v as u32);
    }
    let ok = (0..l).all(|r| {
        let bound = i64::from(r) * pv(l - r);
        partitions(r * (l - r), r, l - 1).iter().all(|lam| lam.iter().map(|&x| pv(x)).sum::<i64>() <= bound)
    });
    Ok((QuadricCandidateSpec::classify(l, m, l, a, Vec::new())?, ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_monomial_ideal;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_monomial_ideal(s, 4).unwrap()
    }

    #[test]
    fn j_ab_examples() {
        assert_eq!(j_ab(&AcmBorelSpec::new(2, vec![1, 2]).unwrap(), 4).unwrap(), ideal("x^2, x*y, y^2"));
        assert_eq!(j_ab(&AcmBorelSpec::new(1, vec![1]).unwrap(), 4).unwrap(), ideal("x, y"));
        assert!(AcmBorelSpec::new(2, vec![2, 2]).is_err());
        assert_eq!(j_lm(2, 2).unwrap(), ideal("x^2, x*y^2, y^4"));
    }

    #[test]
    fn candidate_examples() {
        let s = QuadricCandidateSpec::new(2, 2, 2, vec![5, 1], vec![], Strictness::Borel).unwrap();
        assert_eq!(candidate_ideal(&s).unwrap(), ideal("x^2, xy^2, xyz, y^6, xz^5"));
        let s = QuadricCandidateSpec::new(2, 2, 1, vec![1], vec![1], Strictness::Borel).unwrap();
        assert_eq!(candidate_ideal(&s).unwrap(), ideal("x^2, xy^2, xyz, y^6, y^5z"));
        let s = QuadricCandidateSpec::new(3, 3, 0, vec![], vec![0, 0, 0], Strictness::Borel).unwrap();
        assert_eq!(candidate_ideal(&s).unwrap(), j_lm(3, 3).unwrap());
    }

    #[test]
    fn c1_and_c2_examples() {
        let cubic = AcmBorelSpec::new(2, vec![1, 2]).unwrap();
        assert!(!necessary_condition_c1(&ideal("x, y^3z, y^4"), &cubic));
        let s13 = AcmBorelSpec::quadric(1, 3);
        assert!(necessary_condition_c1(&ideal("x^2, x y, x z^3, y^5"), &s13));
        assert!(!necessary_condition_c1(&ideal("x^2, x y, x z, y^6, y^5 z^2"), &s13));
        let j5 = ideal("x^2, x y, x z^3, y^5");
        let j6 = ideal("x^2, x y^2, x y z, x z^2, y^5");
        let j7 = ideal("x^2, x y, y^4");
        assert!(!condition_c2(&j6, &j7).unwrap());
        assert!(condition_c2(&j5, &j7).unwrap());
        assert!(condition_c2(&j7, &j7).unwrap());
        assert!(condition_c2(&j7, &j_lm(2, 2).unwrap()).is_err());
    }

    #[test]
    fn hp_sum_examples() {
        let s = QuadricCandidateSpec::new(2, 2, 2, vec![5, 1], vec![], Strictness::Borel).unwrap();
        assert!(hp_sum_condition(&s));
        let s = QuadricCandidateSpec::new(3, 3, 3, vec![7, 5, 3], vec![], Strictness::Borel).unwrap();
        assert!(hp_sum_condition(&s));
        let s = QuadricCandidateSpec::new(3, 3, 0, vec![], vec![0, 0, 0], Strictness::Borel).unwrap();
        assert!(hp_sum_condition(&s));
    }

    #[test]
    fn predictions() {
        assert_eq!(candidate_ideal(&predicted_p1(2, 2, 1).unwrap()).unwrap(), ideal("x^2, xy^2, xyz, y^6, y^5z"));
        assert_eq!(candidate_ideal(&predicted_p1(2, 2, 2).unwrap()).unwrap(), ideal("x^2, xy, y^6, y^5z^2"));
        assert_eq!(candidate_ideal(&predicted_p1(2, 2, 0).unwrap()).unwrap(), ideal("x^2, xy^2, xyz^2, y^5"));
        let (s, ok) = predicted_p2(2, 2, 5, 1, 0).unwrap();
        assert!(ok);
        assert_eq!(candidate_ideal(&s).unwrap(), ideal("x^2, xy^2, xyz, y^6, xz^5"));
        let (s, ok) = predicted_p2(2, 2, 4, 2, 0).unwrap();
        assert!(ok);
        assert_eq!(candidate_ideal(&s).unwrap(), ideal("x^2, xy^2, xyz^2, xz^4, y^6"));
        assert!(!predicted_p2(3, 2, 3, 2, 1).unwrap().1);
        assert!(predicted_p2(2, 2, 3, 2, 1).is_err());
        assert!(predicted_p2(2, 2, 3, 2, 0).is_err());
        assert_eq!(predicted_p3(3, 3, 7, 5, 3).unwrap().1, P3Case::Two);
        assert_eq!(predicted_p3(3, 3, 9, 6, 0).unwrap().1, P3Case::Three);
        assert_eq!(predicted_p3(3, 3, 8, 7, 0).unwrap().1, P3Case::None);
    }

    #[test]
    fn part_predictions() {
        let (s, ok) = predicted_part(3, 3, &[0, 0, 0]).unwrap();
        assert!(ok);
        assert_eq!(s.a, vec![7, 5, 3]);
        let (s, ok) = predicted_part(2, 3, &[0, 1]).unwrap();
        assert_eq!(s.a, vec![6, 2]);
        assert!(ok);
        assert!(hp_sum_condition(&s));
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partitions(2, 2, 2), vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(partitions(4, 2, 2), vec![vec![2, 2]]);
        assert_eq!(partitions(0, 3, 2), vec![vec![0, 0, 0]]);
    }
}
