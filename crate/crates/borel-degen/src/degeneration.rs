//! Determinantal families of ACM curves on a quadric, Bayer weights realizing
//! monomial preorders on their parameters, flat limits of the families, and the
//! catalogue of predicted limit ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::acm_component::{c1_for_quadric, candidate_ideal, hp_sum_condition, j_lm, partitions, predicted_part, C1Check, QuadricCandidateSpec};
use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::{buchberger, flat_limit, z_transform, FlatLimit, PolynomialIdeal};
use crate::monomial::Monomial;
use crate::monomial_ideal::{gotzmann_number, MonomialIdeal};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::segment_pluecker::{strict_feasible, weights_to_i64, SeparationProblem};

/// Seed used for the z-transform when the caller does not choose one.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Number of perturbed retries after a non-monomial limit.
pub const GENERICITY_RETRIES: usize = 3;

/// Shape of the family `(x², x y^l, G₀)` with
/// `G₀ = Σ_{k<q} t_k x y^{l-1-k} z^{m+k-p_{q-1-k}} w^{p_{q-1-k}} + s y^{l+m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub l: u32,
    pub m: u32,
    pub q: u32,
    /// `p_0, ..., p_{q-1}`.
    pub p_exps: Vec<u32>,
}

impl FamilySpec {
    /// Checked constructor.
    pub fn new(l: u32, m: u32, q: u32, p_exps: Vec<u32>) -> Result<Self> {
        let s = FamilySpec { l, m, q, p_exps };
        s.validate()?;
        Ok(s)
    }

    /// The `q = 2` family with `p = (0, i)`.
    pub fn q2(l: u32, m: u32, i: u32) -> Result<Self> {
        Self::new(l, m, 2, vec![0, i])
    }

    /// The `q = 3` family with `p = (0, j, i)`.
    pub fn q3(l: u32, m: u32, i: u32, j: u32) -> Result<Self> {
        Self::new(l, m, 3, vec![0, j, i])
    }

    /// Checks `1 ≤ q ≤ l`, `m ≥ 1` and that every z-exponent of `F` is non-negative.
    pub fn validate(&self) -> Result<()> {
        if self.l == 0 || self.m == 0 {
            return Err(Error::InvalidInput("l and m must be positive".into()));
        }
        if self.q == 0 || self.q > self.l {
            return Err(Error::InvalidInput(format!("q = {} must lie in 1..={}", self.q, self.l)));
        }
        if self.p_exps.len() != self.q as usize {
            return Err(Error::InvalidInput(format!("expected {} w-exponents, got {}", self.q, self.p_exps.len())));
        }
        for k in 0..self.q {
            let p = self.p_exps[(self.q - 1 - k) as usize];
            if p > self.m + k {
                return Err(Error::InvalidInput(format!("term t_{k} has negative z-exponent {} - {p}", self.m + k)));
            }
        }
        Ok(())
    }

    /// Number of parameters: `t_0, ..., t_{q-1}` and `s`.
    pub fn nparams(&self) -> usize {
        self.q as usize + 1
    }

    /// Index of `s` among the parameters.
    pub fn s_index(&self) -> usize {
        self.q as usize
    }

    /// Terms `(parameter index, exponent of x y z w)` of `G_r = y^r G₀ mod x y^l`.
    fn g_terms(&self, r: u32) -> Vec<(usize, [u32; 4])> {
        let (l, m, q) = (self.l, self.m, self.q);
        let mut out = Vec::new();
        for k in r..q {
            let p = self.p_exps[(q - 1 - k) as usize];
            out.push((k as usize, [1, l - 1 - k + r, m + k - p, p]));
        }
        out.push((self.s_index(), [0, l + m + r, 0, 0]));
        out
    }
}

fn param_ring_term(spec: &FamilySpec, param: usize, exps: [u32; 4]) -> Polynomial {
    let np = spec.nparams();
    let mut e = vec![0; np + 4];
    e[param] = 1;
    e[np..].copy_from_slice(&exps);
    Polynomial::monomial(Monomial::from_vec(e))
}

/// `x², x y^l, G₀, G₁, ..., G_{q-1}` in the ring `k[t_0..t_{q-1}, s, x, y, z, w]`.
pub fn family_generators(spec: &FamilySpec) -> Result<Vec<Polynomial>> {
    spec.validate()?;
    let np = spec.nparams();
    let n = np + 4;
    let mut x2 = vec![0; n];
    x2[np] = 2;
    let mut xyl = vec![0; n];
    xyl[np] = 1;
    xyl[np + 1] = spec.l;
    let mut out = vec![Polynomial::monomial(Monomial::from_vec(x2)), Polynomial::monomial(Monomial::from_vec(xyl))];
    for r in 0..spec.q {
        let mut g = Polynomial::zero(n);
        for (k, e) in spec.g_terms(r) {
            g = &g + &param_ring_term(spec, k, e);
        }
        out.push(g);
    }
    Ok(out)
}

/// A strict inequality `greater > smaller` between monomials in the parameters
/// `t_0, ..., t_{q-1}, s` (exponent vectors of length `q + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub greater: Vec<u32>,
    pub smaller: Vec<u32>,
}

impl Inequality {
    pub fn new(greater: Vec<u32>, smaller: Vec<u32>) -> Self {
        assert_eq!(greater.len(), smaller.len(), "parameter monomials in different rings");
        Inequality { greater, smaller }
    }

    fn difference(&self) -> Vec<i64> {
        self.greater.iter().zip(&self.smaller).map(|(&a, &b)| i64::from(a) - i64::from(b)).collect()
    }

    /// Renders the inequality with parameter names `t0, t1, ..., s`.
    pub fn display(&self) -> String {
        format!("{} > {}", param_monomial_string(&self.greater), param_monomial_string(&self.smaller))
    }
}

/// Names `t0*t1^2*s` for a parameter exponent vector whose last entry is `s`.
pub fn param_monomial_string(e: &[u32]) -> String {
    let q = e.len() - 1;
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &v)| v > 0)
        .map(|(k, &v)| {
            let name = if k == q { "s".to_string() } else { format!("t{k}") };
            if v == 1 {
                name
            } else {
                format!("{name}^{v}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Integer weights for `t_0, ..., t_{q-1}` and `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    pub w_s: i64,
    pub w_t: Vec<i64>,
    /// Degree bound `N` up to which the `s`-minimality requirement is certified.
    pub bayer_bound: u32,
}

impl WeightAssignment {
    /// Weights in parameter order `t_0, ..., t_{q-1}, s`.
    pub fn as_vector(&self) -> Vec<i64> {
        let mut v = self.w_t.clone();
        v.push(self.w_s);
        v
    }

    fn from_vector(v: &[i64], bayer_bound: u32) -> Self {
        let (t, s) = v.split_at(v.len() - 1);
        WeightAssignment { w_s: s[0], w_t: t.to_vec(), bayer_bound }
    }

    /// Weight of a parameter monomial.
    pub fn weight_of(&self, e: &[u32]) -> i128 {
        self.as_vector().iter().zip(e).map(|(&w, &k)| i128::from(w) * i128::from(k)).sum()
    }

    /// Whether `greater` outweighs `smaller`.
    pub fn realizes(&self, ineq: &Inequality) -> bool {
        self.weight_of(&ineq.greater) > self.weight_of(&ineq.smaller)
    }

    /// Whether every monomial of degree at most `bayer_bound` containing `s`
    /// weighs less than every monomial of degree at most `bayer_bound` without `s`
    /// (the constant monomial included).
    pub fn s_is_minimal(&self) -> bool {
        let n = i128::from(self.bayer_bound);
        if n == 0 {
            return true;
        }
        let all_max = self.as_vector().into_iter().max().unwrap_or(0).max(0);
        let t_min = self.w_t.iter().copied().min().unwrap_or(0).min(0);
        let heaviest_with_s = i128::from(self.w_s) + (n - 1) * i128::from(all_max);
        let lightest_without_s = n * i128::from(t_min);
        heaviest_with_s < lightest_without_s
    }

    /// Whether the assignment satisfies the inequalities and, if requested, `s`-minimality.
    pub fn verify(&self, ineqs: &[Inequality], s_minimal: bool) -> bool {
        ineqs.iter().all(|i| i.greater.len() == self.w_t.len() + 1 && self.realizes(i)) && (!s_minimal || self.s_is_minimal())
    }
}

/// Integer weights realizing the strict inequalities, found by the exact LP.
///
/// With `s_minimal` the `t`-weights are positive and `w_s ≤ -N·max w_t - 1`,
/// so every monomial of degree at most `N` containing `s` is smaller than every
/// monomial of degree at most `N` without `s`.
pub fn solve_weights(ineqs: &[Inequality], s_minimal: bool, n: u32) -> Result<WeightAssignment> {
    let Some(first) = ineqs.first() else {
        return Err(Error::InvalidInput("no inequalities given".into()));
    };
    let np = first.greater.len();
    if np < 2 || ineqs.iter().any(|i| i.greater.len() != np || i.smaller.len() != np) {
        return Err(Error::InvalidInput("inequalities need a common parameter ring with at least one t and s".into()));
    }
    let dim = if s_minimal { np + 1 } else { np };
    let mut prob = SeparationProblem::new(dim);
    for i in ineqs {
        let mut v = i.difference();
        v.resize(dim, 0);
        prob.push(v);
    }
    if s_minimal {
        let s = np - 1;
        let big_w = np;
        for k in 0..s {
            let mut pos = vec![0; dim];
            pos[k] = 1;
            prob.push(pos);
            let mut below = vec![0; dim];
            below[big_w] = 1;
            below[k] = -1;
            prob.push(below);
        }
        let mut sv = vec![0; dim];
        sv[s] = -1;
        sv[big_w] = -i64::from(n);
        prob.push(sv);
    }
    let w = strict_feasible(&prob).ok_or_else(|| {
        Error::InconsistentPreorder(ineqs.iter().map(Inequality::display).collect::<Vec<_>>().join(", "))
    })?;
    let w = weights_to_i64(&w[..np])?;
    let out = WeightAssignment::from_vector(&w, n);
    if !out.verify(ineqs, s_minimal) {
        return Err(Error::Internal("LP weights fail the exact re-check".into()));
    }
    Ok(out)
}

/// Solves `A v = b` over the rationals; `None` if inconsistent.
fn solve_rational(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, &bv)| r.iter().chain(std::iter::once(&bv)).map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for k in c..=cols {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..=cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut v = vec![BigRational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = m[row][cols].clone();
    }
    Some(v)
}

/// Integer weight on `x, y, z, w` reproducing the parameter weights of `G₀`, if any.
///
/// When it exists, the family is the orbit of its fiber at `t = 1` under a
/// one-parameter torus subgroup, so its limit is the initial ideal for that weight.
fn torus_weight(spec: &FamilySpec, w: &WeightAssignment) -> Option<Vec<i64>> {
    let weights = w.as_vector();
    let terms = spec.g_terms(0);
    let a: Vec<Vec<i64>> = terms.iter().map(|(_, e)| e.iter().map(|&v| i64::from(v)).collect()).collect();
    let b: Vec<i64> = terms.iter().map(|(k, _)| weights[*k]).collect();
    let v = solve_rational(&a, &b)?;
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| (x.numer() * (&den / x.denom())).to_i64()).collect()
}

fn fiber_generators(spec: &FamilySpec, coeff: impl Fn(usize) -> Coeff) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::monomial(Monomial::new(&[2, 0, 0, 0])), Polynomial::monomial(Monomial::new(&[1, spec.l, 0, 0]))];
    for r in 0..spec.q {
        let terms = spec.g_terms(r).into_iter().map(|(k, e)| (Monomial::new(&e), coeff(k)));
        out.push(Polynomial::from_terms(4, terms.collect::<Vec<_>>()));
    }
    out
}

/// The family over `k[u]` after `t_k ↦ u^{-w_{t_k}}`, `s ↦ u^{-w_s}` and clearing denominators.
pub fn u_family(spec: &FamilySpec, w: &WeightAssignment) -> Vec<Polynomial> {
    let weights = w.as_vector();
    let mut out = vec![Polynomial::monomial(Monomial::new(&[0, 2, 0, 0, 0])), Polynomial::monomial(Monomial::new(&[0, 1, spec.l, 0, 0]))];
    for r in 0..spec.q {
        let terms = spec.g_terms(r);
        let top = terms.iter().map(|(k, _)| weights[*k]).max().expect("G_r has terms");
        let poly_terms: Vec<(Monomial, Coeff)> = terms
            .iter()
            .map(|(k, e)| {
                let ue = u32::try_from(top - weights[*k]).expect("u-exponent is non-negative");
                (Monomial::new(&[ue, e[0], e[1], e[2], e[3]]), Coeff::one())
            })
            .collect();
        out.push(Polynomial::from_terms(5, poly_terms));
    }
    out
}

/// How [`specialize_and_limit_via`] computes the limit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LimitMethod {
    /// Initial ideal for a torus weight when the family is a torus orbit, flat limit otherwise.
    #[default]
    Auto,
    /// Always the flat limit over `k[u]`.
    FlatLimit,
}

/// Whether the limit of this family along `w` is computed as a torus initial ideal.
pub fn is_torus_orbit(spec: &FamilySpec, w: &WeightAssignment) -> bool {
    torus_weight(spec, w).is_some()
}

fn limit_once(spec: &FamilySpec, w: &WeightAssignment, method: LimitMethod) -> Result<MonomialIdeal> {
    let torus = match method {
        LimitMethod::Auto => torus_weight(spec, w),
        LimitMethod::FlatLimit => None,
    };
    if let Some(v) = torus {
        let order = TermOrder::weighted(&v)?;
        let fiber = PolynomialIdeal::new(4, fiber_generators(spec, |_| Coeff::one()))?;
        let gb = buchberger(&fiber, &order)?;
        let vw = |m: &Monomial| -> i128 { m.exps().iter().zip(&v).map(|(&e, &x)| i128::from(e) * i128::from(x)).sum() };
        let monomial = gb.elements().iter().all(|g| {
            let top = g.terms().iter().map(|(m, _)| vw(m)).max();
            g.terms().iter().filter(|(m, _)| Some(vw(m)) == top).count() == 1
        });
        return if monomial { Ok(gb.initial_ideal()) } else { Err(Error::NonGenericWeights) };
    }
    match flat_limit(&u_family(spec, w))? {
        FlatLimit::Monomial(j) => Ok(j),
        FlatLimit::NonMonomial(_) => Err(Error::NonGenericWeights),
    }
}

/// The limit of the family as `t → ∞` along the weights.
///
/// A torus orbit is handled by an initial-ideal computation; other families go
/// through the flat limit over `k[u]`.  A non-monomial limit is reported as
/// [`Error::NonGenericWeights`].
pub fn specialize_and_limit(spec: &FamilySpec, w: &WeightAssignment) -> Result<MonomialIdeal> {
    specialize_and_limit_via(spec, w, LimitMethod::Auto)
}

/// [`specialize_and_limit`] with a chosen method.
pub fn specialize_and_limit_via(spec: &FamilySpec, w: &WeightAssignment, method: LimitMethod) -> Result<MonomialIdeal> {
    spec.validate()?;
    if w.w_t.len() != spec.q as usize {
        return Err(Error::InvalidInput(format!("{} t-weights for q = {}", w.w_t.len(), spec.q)));
    }
    limit_once(spec, w, method)
}

/// Candidate refinements of `w` tried after a non-monomial limit:
/// double every weight and add one to a parameter, the largest first.
fn perturbations(w: &WeightAssignment) -> Vec<WeightAssignment> {
    let v: Vec<i64> = w.as_vector().iter().map(|x| 2 * x).collect();
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by_key(|&k| std::cmp::Reverse(w.as_vector()[k]));
    idx.into_iter()
        .map(|k| {
            let mut p = v.clone();
            p[k] += 1;
            WeightAssignment::from_vector(&p, w.bayer_bound)
        })
        .collect()
}

/// [`specialize_and_limit`] with up to [`GENERICITY_RETRIES`] refinements of the
/// weights, each re-checked against the inequalities.  Returns the weights used.
pub fn limit_with_retries(spec: &FamilySpec, w: &WeightAssignment, ineqs: &[Inequality], s_minimal: bool) -> Result<(WeightAssignment, MonomialIdeal)> {
    let mut current = w.clone();
    for attempt in 0..=GENERICITY_RETRIES {
        match specialize_and_limit(spec, &current) {
            Ok(j) => return Ok((current, j)),
            Err(Error::NonGenericWeights) if attempt < GENERICITY_RETRIES => {
                current = perturbations(&current)
                    .into_iter()
                    .find(|p| p.verify(ineqs, s_minimal))
                    .ok_or(Error::NonGenericWeights)?;
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::NonGenericWeights)
}

/// How a limit is turned into the ideal that is compared with the prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PostProcess {
    Saturate,
    ZThenSaturate,
}

/// Proposition cases of the prediction catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    EqProq2_1,
    EqProq2_2,
    CorBllA,
    CorBllB,
    PdPosA,
    PdPosB,
    PdPosC,
    PdNegA,
    PdNegB,
    PdNegC,
    IleqjA,
    IleqjB,
    AenA,
    AenB,
    AenC,
    P2A,
    P2B,
    P1,
    Part,
}

impl CaseId {
    /// Every case, in catalogue order.
    pub const ALL: [CaseId; 19] = [
        CaseId::EqProq2_1,
        CaseId::EqProq2_2,
        CaseId::CorBllA,
        CaseId::CorBllB,
        CaseId::PdPosA,
        CaseId::PdPosB,
        CaseId::PdPosC,
        CaseId::PdNegA,
        CaseId::PdNegB,
        CaseId::PdNegC,
        CaseId::IleqjA,
        CaseId::IleqjB,
        CaseId::AenA,
        CaseId::AenB,
        CaseId::AenC,
        CaseId::P2A,
        CaseId::P2B,
        CaseId::P1,
        CaseId::Part,
    ];

    /// The tag used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            CaseId::EqProq2_1 => "EqProq2.1",
            CaseId::EqProq2_2 => "EqProq2.2",
            CaseId::CorBllA => "CorBLL.a",
            CaseId::CorBllB => "CorBLL.b",
            CaseId::PdPosA => "PDpos.a",
            CaseId::PdPosB => "PDpos.b",
            CaseId::PdPosC => "PDpos.c",
            CaseId::PdNegA => "PDneg.a",
            CaseId::PdNegB => "PDneg.b",
            CaseId::PdNegC => "PDneg.c",
            CaseId::IleqjA => "ileqj.a",
            CaseId::IleqjB => "ileqj.b",
            CaseId::AenA => "Aen.a",
            CaseId::AenB => "Aen.b",
            CaseId::AenC => "Aen.c",
            CaseId::P2A => "P2A",
            CaseId::P2B => "P2B",
            CaseId::P1 => "P1",
            CaseId::Part => "Part",
        }
    }

    /// Parses a tag produced by [`CaseId::name`] (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown case `{s}`")))
    }

    /// Number of `t` parameters in the family of this case (for [`CaseId::Part`] it is `l`).
    pub fn q(self, l: u32) -> u32 {
        match self {
            CaseId::EqProq2_1 | CaseId::EqProq2_2 => 2,
            CaseId::Part => l,
            _ => 3,
        }
    }

    /// Whether every monomial containing `s` is required to be smaller than those without.
    pub fn s_minimal(self) -> bool {
        !matches!(self, CaseId::EqProq2_1 | CaseId::EqProq2_2 | CaseId::P2A | CaseId::P2B | CaseId::P1)
    }

    /// Whether the z-transform is taken before saturating.
    pub fn postprocess(self) -> PostProcess {
        match self {
            CaseId::EqProq2_2 | CaseId::P2A | CaseId::P2B | CaseId::P1 | CaseId::Part => PostProcess::ZThenSaturate,
            _ => PostProcess::Saturate,
        }
    }
}

impl std::fmt::Display for CaseId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Numerical parameters of a case: `p_vec` is used by [`CaseId::Part`] only
/// (empty means all zeros), `i` and `j` by the other cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseParams {
    pub l: u32,
    pub m: u32,
    pub i: u32,
    pub j: u32,
    pub p_vec: Vec<u32>,
}

impl CaseParams {
    pub fn new(l: u32, m: u32, i: u32, j: u32) -> Self {
        CaseParams { l, m, i, j, p_vec: Vec::new() }
    }

    pub fn part(l: u32, m: u32, p_vec: Vec<u32>) -> Self {
        CaseParams { l, m, i: 0, j: 0, p_vec }
    }
}

/// A proposition instance: family, parameter preorder (one or more alternative
/// branches, each a conjunction of inequalities), post-processing and prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictionCase {
    pub id: CaseId,
    pub params: CaseParams,
    pub family: FamilySpec,
    pub s_minimal: bool,
    pub branches: Vec<Vec<Inequality>>,
    pub postprocess: PostProcess,
    pub predicted: QuadricCandidateSpec,
}

/// Builds parameter monomials for a family with `q` t's: `t(&[(k, e)..])`, `s` is index `q`.
struct ParamRing {
    q: usize,
}

impl ParamRing {
    fn mono(&self, factors: &[(usize, u32)]) -> Vec<u32> {
        let mut e = vec![0; self.q + 1];
        for &(k, v) in factors {
            e[k] += v;
        }
        e
    }

    fn gt(&self, a: &[(usize, u32)], b: &[(usize, u32)]) -> Inequality {
        Inequality::new(self.mono(a), self.mono(b))
    }

    fn chain(&self, order: &[usize]) -> Vec<Inequality> {
        order.windows(2).map(|p| self.gt(&[(p[0], 1)], &[(p[1], 1)])).collect()
    }
}

fn violated(msg: impl Into<String>) -> Error {
    Error::HypothesisViolated(msg.into())
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(violated(msg))
    }
}

fn signed_spec(l: u32, m: u32, p: u32, a: &[i64], b: &[i64]) -> Result<QuadricCandidateSpec> {
    let conv = |v: &[i64]| -> Result<Vec<u32>> {
        v.iter().map(|&x| u32::try_from(x).map_err(|_| violated(format!("predicted exponent {x} is negative")))).collect()
    };
    QuadricCandidateSpec::classify(l, m, p, conv(a)?, conv(b)?).map_err(|e| violated(e.to_string()))
}

/// The case of the prediction catalogue with the given parameters.
///
/// Fails with [`Error::HypothesisViolated`] when the arithmetic hypotheses of
/// the proposition do not hold for `params`.
pub fn prediction_catalogue(id: CaseId, params: &CaseParams) -> Result<PredictionCase> {
    let CaseParams { l, m, i, j, .. } = *params;
    require(l >= 1 && m >= 1, "l, m ≥ 1")?;
    let q = id.q(l);
    require(q <= l, "q ≤ l")?;
    let family = match id {
        CaseId::Part => {
            let p_vec = if params.p_vec.is_empty() { vec![0; l as usize] } else { params.p_vec.clone() };
            FamilySpec::new(l, m, l, p_vec).map_err(|e| violated(e.to_string()))?
        }
        _ if q == 2 => {
            require(i <= m, "i ≤ m")?;
            FamilySpec::q2(l, m, i)?
        }
        _ => {
            require(i <= m, "i ≤ m")?;
            require(j <= m + 1, "j ≤ m + 1")?;
            FamilySpec::q3(l, m, i, j)?
        }
    };
    let r = ParamRing { q: q as usize };
    let s = q as usize;
    let (mi, ii, ji) = (i64::from(m), i64::from(i), i64::from(j));
    let delta = ii - 2 * ji;
    let three = q == 3;
    let decreasing = if three { r.chain(&[0, 1, 2]) } else { Vec::new() };
    let t1sq_gt_t0t2 = if three { r.gt(&[(1, 2)], &[(0, 1), (2, 1)]) } else { Inequality::new(vec![], vec![]) };
    let t0t2_gt_t1sq = if three { r.gt(&[(0, 1), (2, 1)], &[(1, 2)]) } else { Inequality::new(vec![], vec![]) };
    let pad = |n: u32| -> Vec<i64> { vec![0; n as usize] };
    let padded = |head: &[i64], n: u32| -> Vec<i64> {
        let mut v = head.to_vec();
        v.resize(n as usize, 0);
        v
    };
    let with_standing = |extra: Vec<Inequality>| -> Vec<Inequality> {
        let mut v = decreasing.clone();
        v.extend(extra);
        v
    };
    let (branches, p, a, b): (Vec<Vec<Inequality>>, u32, Vec<i64>, Vec<i64>) = match id {
        CaseId::EqProq2_1 | CaseId::EqProq2_2 => {
            let mut base = vec![r.gt(&[(0, 1)], &[(1, 1)]), r.gt(&[(1, 1)], &[(s, 1)])];
            if id == CaseId::EqProq2_1 {
                base.push(r.gt(&[(1, 2)], &[(s, 1), (0, 1)]));
                (vec![base], 2, vec![mi + 2 + ii, mi - ii], pad(l - 2))
            } else {
                base.push(r.gt(&[(s, 1), (0, 1)], &[(1, 2)]));
                let mut b = pad(l - 1);
                b[0] = ii;
                (vec![base], 1, vec![mi - ii], b)
            }
        }
        CaseId::CorBllA | CaseId::CorBllB => {
            require(l >= 3, "l ≥ q = 3")?;
            require(i >= j, "i ≥ j")?;
            if id == CaseId::CorBllA {
                require(delta <= 0, "Δ = i − 2j ≤ 0")?;
                (vec![with_standing(vec![t1sq_gt_t0t2])], 3, vec![mi + 4 + 2 * ji, mi + 2 + ii - 2 * ji, mi - ii], pad(l - 3))
            } else {
                require(delta >= 0, "Δ = i − 2j ≥ 0")?;
                (vec![with_standing(vec![t0t2_gt_t1sq])], 3, vec![mi + 4 + ii, mi + 2, mi - ii], pad(l - 3))
            }
        }
        CaseId::PdPosA | CaseId::PdPosB | CaseId::PdPosC => {
            require(l >= 3, "l ≥ q = 3")?;
            require(delta > 0, "Δ = i − 2j > 0")?;
            let rho = (ji + 1) / delta;
            let d2 = (ji + 1) % delta;
            require(rho >= 1, "ρ ≥ 1 (ρ maximal with ρΔ ≤ j + 1)")?;
            let rh = rho as u32;
            let mut ineqs = with_standing(vec![t1sq_gt_t0t2]);
            let lower = r.gt(&[(0, rh), (2, rh - 1)], &[(1, 2 * rh - 1)]);
            let upper = r.gt(&[(1, 2 * rh + 1)], &[(0, rh + 1), (2, rh)]);
            let a = match id {
                CaseId::PdPosA => {
                    ineqs.push(r.gt(&[(1, 2 * rh - 1)], &[(0, rh), (2, rh - 1)]));
                    vec![mi + 4 + 2 * ji, mi + 2 + ii - 2 * ji, mi - ii]
                }
                CaseId::PdPosB => {
                    ineqs.push(lower);
                    ineqs.push(upper);
                    vec![mi + 4 + 2 * ji + delta - d2, mi + 2 + d2, mi - ii]
                }
                _ => {
                    ineqs.push(r.gt(&[(0, rh + 1), (2, rh)], &[(1, 2 * rh + 1)]));
                    vec![mi + 4 + ii, mi + 2, mi - ii]
                }
            };
            (vec![ineqs], 3, a, pad(l - 3))
        }
        CaseId::PdNegA | CaseId::PdNegB | CaseId::PdNegC => {
            require(l >= 3, "l ≥ q = 3")?;
            require(i >= j, "i ≥ j")?;
            require(delta < 0, "Δ = i − 2j < 0")?;
            let dm = -delta;
            let rho = (ji + 1) / dm;
            let d2 = (ji + 1) % dm;
            require(rho >= 1, "ρ ≥ 1 (ρ maximal with ρΔ⁻ ≤ j + 1)")?;
            let rh = rho as u32;
            let mut ineqs = with_standing(vec![t0t2_gt_t1sq]);
            let first = r.gt(&[(2, rh + 1), (0, rh)], &[(1, 2 * rh + 1)]);
            let second = r.gt(&[(2, rh + 2), (0, rh + 1)], &[(1, 2 * rh + 3)]);
            let a = match id {
                CaseId::PdNegA => {
                    ineqs.push(first);
                    vec![mi + 4 + ii, mi + 2, mi - ii]
                }
                CaseId::PdNegB => {
                    ineqs.push(r.gt(&[(1, 2 * rh + 1)], &[(2, rh + 1), (0, rh)]));
                    ineqs.push(second);
                    vec![mi + 4 + 2 * ji - d2, mi + 2 - dm + d2, mi - ii]
                }
                _ => {
                    ineqs.push(r.gt(&[(1, 2 * rh + 3)], &[(2, rh + 2), (0, rh + 1)]));
                    vec![mi + 4 + 2 * ji, mi + 2 + ii - 2 * ji, mi - ii]
                }
            };
            (vec![ineqs], 3, a, pad(l - 3))
        }
        CaseId::IleqjA | CaseId::IleqjB => {
            require(l >= 3, "l ≥ q = 3")?;
            require(i < j, "i ≤ j − 1")?;
            let t1cube_gt = r.gt(&[(1, 3)], &[(2, 2), (0, 1)]);
            let t1cube_lt = r.gt(&[(2, 2), (0, 1)], &[(1, 3)]);
            if id == CaseId::IleqjA {
                let branches = vec![with_standing(vec![t1sq_gt_t0t2]), with_standing(vec![t0t2_gt_t1sq.clone(), t1cube_gt])];
                (branches, 3, vec![mi + 4 + 2 * ji, mi + 1 - ji, mi + 1 - ji], pad(l - 3))
            } else {
                (vec![with_standing(vec![t0t2_gt_t1sq, t1cube_lt])], 3, vec![mi + 2 + 2 * ji - ii, mi + 3 + ii - ji, mi + 1 - ji], pad(l - 3))
            }
        }
        CaseId::AenA | CaseId::AenB | CaseId::AenC => {
            require(l >= 3, "l ≥ q = 3")?;
            let top = vec![r.gt(&[(1, 1)], &[(0, 1)]), r.gt(&[(1, 1)], &[(2, 1)])];
            let with = |extra: Inequality| -> Vec<Inequality> {
                let mut v = top.clone();
                v.push(extra);
                v
            };
            let t0_gt_t2 = r.gt(&[(0, 1)], &[(2, 1)]);
            let t2_gt_t0 = r.gt(&[(2, 1)], &[(0, 1)]);
            match id {
                CaseId::AenA => {
                    require(i <= 3 * j + 1, "i ≤ 3j + 1")?;
                    (vec![with(t0_gt_t2), with(t2_gt_t0)], 3, vec![mi + 4 + 2 * ji, mi + 1 - ji, mi + 1 - ji], pad(l - 3))
                }
                CaseId::AenB => {
                    require(i >= 3 * j + 2, "i ≥ 3j + 2")?;
                    (vec![with(t0_gt_t2)], 3, vec![mi + 3 + ii - ji, mi + 1 - ji, mi + 2 + 2 * ji - ii], pad(l - 3))
                }
                _ => {
                    require(i >= 3 * j + 2, "i ≥ 3j + 2")?;
                    (vec![with(t2_gt_t0)], 3, vec![mi + 4 + 2 * ji, mi + 1 - ji, mi + 1 - ji], pad(l - 3))
                }
            }
        }
        CaseId::P2A => {
            require(l >= 3, "l ≥ q = 3")?;
            require(i >= j, "i ≥ j")?;
            let extra = vec![r.gt(&[(2, 1)], &[(s, 1)]), r.gt(&[(s, 1), (1, 1)], &[(2, 2)])];
            let mut b1 = with_standing(extra.clone());
            b1.push(t1sq_gt_t0t2.clone());
            let mut b2 = with_standing(extra);
            b2.push(t0t2_gt_t1sq.clone());
            (vec![b1, b2], 2, vec![mi + 2 + ii - ji, mi - ii], padded(&[ji], l - 2))
        }
        CaseId::P2B => {
            require(l >= 3, "l ≥ q = 3")?;
            require(j <= i && i <= 2 * j, "j ≤ i ≤ 2j")?;
            let extra = vec![
                r.gt(&[(1, 1), (2, 2)], &[(s, 1), (1, 2)]),
                r.gt(&[(s, 1), (1, 2)], &[(2, 3)]),
                t1sq_gt_t0t2.clone(),
            ];
            (vec![with_standing(extra)], 2, vec![mi + 2 + ii - 2 * ji, mi - ii], padded(&[2 * ji], l - 2))
        }
        CaseId::P1 => {
            require(l >= 3, "l ≥ q = 3")?;
            require(i >= 2 * j, "i ≥ 2j")?;
            let mut ineqs = r.chain(&[0, 1, s, 2]);
            ineqs.push(r.gt(&[(s, 1), (0, 1)], &[(1, 2)]));
            (vec![ineqs], 1, vec![mi - ii + ji], padded(&[ii - ji], l - 1))
        }
        CaseId::Part => {
            let (spec, ok) = predicted_part(l, m, &family.p_exps).map_err(|e| violated(e.to_string()))?;
            require(ok, "r·p_{l−r} ≥ p_λ for all partitions λ of r(l−r) into r parts ≤ l−1")?;
            let mut order: Vec<usize> = (0..l as usize).collect();
            order.push(s);
            let mut ineqs = r.chain(&order);
            for rr in 1..l {
                let top = r.mono(&[(rr as usize, rr + 1)]);
                for lam in partitions(rr * (rr + 1), rr + 1, l - 1) {
                    let mut e = vec![0; l as usize + 1];
                    for &part in &lam {
                        e[part as usize] += 1;
                    }
                    if e != top {
                        ineqs.push(Inequality::new(top.clone(), e));
                    }
                }
            }
            let a: Vec<i64> = spec.a.iter().map(|&x| i64::from(x)).collect();
            (vec![ineqs], l, a, Vec::new())
        }
    };
    let predicted = signed_spec(l, m, p, &a, &b)?;
    if !hp_sum_condition(&predicted) {
        return Err(Error::Internal(format!("predicted shape {predicted:?} violates the exponent-sum condition")));
    }
    Ok(PredictionCase { id, params: params.clone(), family, s_minimal: id.s_minimal(), branches, postprocess: id.postprocess(), predicted })
}

/// The default Bayer bound: twice the Gotzmann number of the Hilbert polynomial of `J(l,m)`.
pub fn default_bayer_bound(l: u32, m: u32) -> Result<u32> {
    let g = gotzmann_number(&j_lm(l, m)?.hilbert_polynomial_quotient())?;
    u32::try_from(2 * g).map_err(|_| Error::ExponentOverflow)
}

/// Result of one branch of a verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchResult {
    pub weights: WeightAssignment,
    pub limit: MonomialIdeal,
    pub processed: MonomialIdeal,
}

/// Why a prediction was not confirmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub branch: usize,
    pub expected: MonomialIdeal,
    pub weights: Option<WeightAssignment>,
    pub got: Option<MonomialIdeal>,
    pub reason: String,
}

/// Outcome of [`verify_prediction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Confirmed(Vec<BranchResult>),
    Mismatch(Mismatch),
}

impl Verification {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, Verification::Confirmed(_))
    }
}

fn random_fiber_hf_matches(spec: &FamilySpec, w: &WeightAssignment, limit: &MonomialIdeal, degrees: u32) -> Result<bool> {
    let weights = w.as_vector();
    let two = BigRational::from_integer(2.into());
    let fiber = fiber_generators(spec, |k| {
        let e = weights[k];
        let v = if e >= 0 { num_traits::pow(two.clone(), e as usize) } else { num_traits::pow(two.recip(), (-e) as usize) };
        Coeff::rational(v)
    });
    let ideal = PolynomialIdeal::new(4, fiber)?;
    let init = buchberger(&ideal, &TermOrder::degrevlex(4))?.initial_ideal();
    Ok((0..=degrees).all(|d| init.hf_ideal(d) == limit.hf_ideal(d)))
}

/// Runs every branch of the case and compares the processed limit with the prediction.
pub fn verify_prediction(case: &PredictionCase) -> Result<Verification> {
    verify_prediction_with(case, DEFAULT_SEED, None)
}

/// [`verify_prediction`] with an explicit z-transform seed and Bayer bound
/// (`None` means [`default_bayer_bound`]).
pub fn verify_prediction_with(case: &PredictionCase, seed: u64, bayer_bound: Option<u32>) -> Result<Verification> {
    let (l, m) = (case.params.l, case.params.m);
    let n = match bayer_bound {
        Some(n) => n,
        None => default_bayer_bound(l, m)?,
    };
    let expected = candidate_ideal(&case.predicted)?;
    let mut results = Vec::new();
    for (bi, ineqs) in case.branches.iter().enumerate() {
        let w = solve_weights(ineqs, case.s_minimal, n)?;
        let (w, limit) = match limit_with_retries(&case.family, &w, ineqs, case.s_minimal) {
            Ok(v) => v,
            Err(Error::NonGenericWeights) => {
                return Ok(Verification::Mismatch(Mismatch {
                    branch: bi,
                    expected,
                    weights: Some(w),
                    got: None,
                    reason: "limit is not monomial after retries".into(),
                }))
            }
            Err(e) => return Err(e),
        };
        if !random_fiber_hf_matches(&case.family, &w, &limit, n)? {
            return Ok(Verification::Mismatch(Mismatch {
                branch: bi,
                expected,
                weights: Some(w),
                got: Some(limit),
                reason: "Hilbert function of the limit differs from a general fiber".into(),
            }));
        }
        let processed = match case.postprocess {
            PostProcess::Saturate => limit.saturation(),
            PostProcess::ZThenSaturate => z_transform(&limit, seed)?.saturation(),
        };
        if processed != expected {
            return Ok(Verification::Mismatch(Mismatch {
                branch: bi,
                expected,
                weights: Some(w),
                got: Some(processed),
                reason: "processed limit differs from the prediction".into(),
            }));
        }
        if !c1_for_quadric(&limit.saturation(), l, m, C1Check::Full) {
            return Ok(Verification::Mismatch(Mismatch {
                branch: bi,
                expected,
                weights: Some(w),
                got: Some(limit.saturation()),
                reason: "saturated limit misses x², x y^l or y^{2l+m}".into(),
            }));
        }
        results.push(BranchResult { weights: w, limit, processed });
    }
    Ok(Verification::Confirmed(results))
}

/// Outcome of one sweep entry.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub case: PredictionCase,
    pub outcome: Result<Verification>,
}

/// Every admissible instance `(case, l = q, m, i, j)` with `l, m ≤ max` (and
/// `p_vec = 0` for [`CaseId::Part`]).  An instance is admissible when the
/// hypotheses of its proposition hold and every branch is a consistent preorder.
pub fn admissible_cases(ids: &[CaseId], max_l: u32, max_m: u32) -> Vec<PredictionCase> {
    let mut out = Vec::new();
    for &id in ids {
        let ls: Vec<u32> = match id {
            CaseId::Part => (1..=max_l).collect(),
            CaseId::EqProq2_1 | CaseId::EqProq2_2 => (2..=max_l.min(2)).collect(),
            _ => (3..=max_l.min(3)).collect(),
        };
        for l in ls {
            out.extend(admissible_for(id, l, max_m));
        }
    }
    out
}

/// Admissible instances of the `q = 2` and `q = 3` cases in the larger ring
/// `l = q + lift`, where the prediction is padded with zero `b`-entries.
pub fn lifted_cases(ids: &[CaseId], lift: u32, max_m: u32) -> Vec<PredictionCase> {
    ids.iter().filter(|&&id| id != CaseId::Part).flat_map(|&id| admissible_for(id, id.q(0) + lift, max_m)).collect()
}

fn admissible_for(id: CaseId, l: u32, max_m: u32) -> Vec<PredictionCase> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let params: Vec<CaseParams> = match id {
            CaseId::Part => vec![CaseParams::part(l, m, vec![0; l as usize])],
            CaseId::EqProq2_1 | CaseId::EqProq2_2 => (0..=m).map(|i| CaseParams::new(l, m, i, 0)).collect(),
            _ => (0..=m).flat_map(|i| (0..=m + 1).map(move |j| CaseParams::new(l, m, i, j))).collect(),
        };
        for p in params {
            let Ok(case) = prediction_catalogue(id, &p) else { continue };
            let consistent = case.branches.iter().all(|b| !matches!(solve_weights(b, case.s_minimal, 1), Err(Error::InconsistentPreorder(_))));
            if consistent {
                out.push(case);
            }
        }
    }
    out
}

/// Verifies every case in parallel.
pub fn sweep(cases: Vec<PredictionCase>, seed: u64) -> Vec<SweepEntry> {
    cases
        .into_par_iter()
        .map(|case| {
            let outcome = verify_prediction_with(&case, seed, None);
            SweepEntry { case, outcome }
        })
        .collect()
}
