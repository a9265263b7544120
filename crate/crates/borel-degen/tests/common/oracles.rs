//! Independent oracles and random inputs shared by the integration tests.

use borel_degen::field::Coeff;
use borel_degen::groebner::PolynomialIdeal;
use borel_degen::monomial::Monomial;
use borel_degen::monomial_ideal::MonomialIdeal;
use borel_degen::order::TermOrder;
use borel_degen::poly::Polynomial;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::all_monomials;

pub fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, d: u32, terms: usize) -> Polynomial {
    let mons = all_monomials(n, d);
    let picked: Vec<(Monomial, Coeff)> = (0..terms)
        .map(|_| {
            let m = mons[rng.gen_range(0..mons.len())].clone();
            let mut c = rng.gen_range(-5i64..=5);
            if c == 0 {
                c = 1;
            }
            (m, Coeff::from_int(c))
        })
        .collect();
    let p = Polynomial::from_terms(n, picked);
    if p.is_zero() {
        Polynomial::monomial(mons[0].clone())
    } else {
        p
    }
}

pub fn random_polynomial_ideal(rng: &mut ChaCha8Rng, n: usize) -> PolynomialIdeal {
    let k = rng.gen_range(2..=3);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(2..=3);
            let t = rng.gen_range(2..=4);
            random_homogeneous(rng, n, d, t)
        })
        .collect();
    PolynomialIdeal::new(n, gens).unwrap()
}

pub fn orders(n: usize) -> Vec<TermOrder> {
    let mut w: Vec<i64> = (1..=n as i64).rev().collect();
    w[0] += 3;
    vec![TermOrder::lex(n), TermOrder::degrevlex(n), TermOrder::weighted(&w).unwrap()]
}

/// Multivariate division written out term by term, independent of the library's reducer.
pub fn divide_fully(f: &Polynomial, g: &[Polynomial], o: &TermOrder) -> Polynomial {
    let leads: Vec<(Monomial, Coeff)> = g.iter().map(|p| p.leading_term(o).unwrap()).collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.nvars());
    while !p.is_zero() {
        let (m, c) = p.leading_term(o).unwrap();
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let (lm, lc) = &leads[i];
                let q = m.div(lm).unwrap();
                let factor = c.div(lc).unwrap();
                p = &p - &g[i].mul_term(&q, &factor);
            }
            None => {
                let t = Polynomial::term(m, c);
                rem = &rem + &t;
                p = &p - &t;
            }
        }
    }
    rem
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, o: &TermOrder) -> Polynomial {
    let (mf, cf) = f.leading_term(o).unwrap();
    let (mg, cg) = g.leading_term(o).unwrap();
    let l = mf.lcm(&mg);
    let a = f.mul_term(&l.div(&mf).unwrap(), &cf.inv().unwrap());
    let b = g.mul_term(&l.div(&mg).unwrap(), &cg.inv().unwrap());
    &a - &b
}

pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, n: usize, max_exp: u32, max_gens: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            Monomial::new(&e)
        })
        .filter(|m| !m.is_one())
        .collect::<Vec<_>>();
    if gens.is_empty() {
        MonomialIdeal::new(n, vec![Monomial::var(n, 0)])
    } else {
        MonomialIdeal::new(n, gens)
    }
}

/// Membership in the saturation straight from the definition: `m` is in `I^sat`
/// when `m u ∈ I` for every monomial `u` of degree `k = n (D − 1) + 1`, where `D`
/// bounds the generator exponents, since every such `u` has some exponent at least `D`.
pub fn in_saturation_oracle(j: &MonomialIdeal, m: &Monomial) -> bool {
    let n = j.nvars();
    let d = j.gens().iter().flat_map(|g| g.exps().iter().copied()).max().unwrap_or(0).max(1);
    let k = n as u32 * (d - 1) + 1;
    all_monomials(n, k).iter().all(|u| {
        let p = m.mul(u);
        j.gens().iter().any(|g| g.divides(&p))
    })
}
