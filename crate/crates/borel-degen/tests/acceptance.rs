//! Acceptance run: one PASS or FAIL line per criterion.
//!
//! A FAIL exits nonzero unless it matches a documented deviation exactly
//! (see `KNOWN_DEVIATIONS`), in which case the line is still printed as FAIL.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use borel_degen::acm_component::{filter_candidates, filter_candidates_with, C1Check};
use borel_degen::borel_enum::enumerate_saturated_borel;
use borel_degen::degeneration::{admissible_cases, sweep, CaseId, Verification};
use borel_degen::groebner::{buchberger, initial_ideal, z_transform};
use borel_degen::linalg::degree_piece_dimension;
use borel_degen::monomial::Monomial;
use borel_degen::monomial_ideal::{gotzmann_number, lex_segment_ideal, HilbertPolynomial, MonomialIdeal};
use borel_degen::parse::parse_term_order;
use borel_degen::segment_pluecker::{is_segment, non_segment_certificate};
use borel_degen::witness::{generic_f, verify_witness, WitnessOutcome, WitnessProblem, WITNESSES_3_1, WITNESSES_3_3};
use common::oracles::{divide_fully, in_saturation_oracle, orders, random_monomial_ideal, random_polynomial_ideal, s_polynomial};
use common::{all_monomials, ideal, known, KNOWN_LABELS};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Criteria whose published value differs from the computed one, with the computed detail that is expected.
const KNOWN_DEVIATIONS: &[(u32, &str)] = &[(
    5,
    "C1 passes 47 of 989 (published 45); C2 removes only (x^2, xy^3, xy^2z^4, xyz^5, xz^6, y^9): true; \
     16 of 16 witnesses verify, J799 over Q(sqrt 7): true",
)];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

/// Runs a check and appends its runtime against the budget.
fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    let within = took <= budget;
    o.ok &= within;
    o.detail.push_str(&format!(" [{} of {} allowed{}]", secs(took), secs(budget), if within { "" } else { ", OVER BUDGET" }));
    o
}

fn criterion_1() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (d, c, n, budget) in [(5, -2, 7, 60), (6, -3, 31, 60), (7, -5, 112, 60), (9, -12, 989, 600)] {
        let start = Instant::now();
        let got = enumerate_saturated_borel(&HilbertPolynomial::linear(d, c), 4).map(|cat| cat.len());
        let took = start.elapsed();
        let good = matches!(got, Ok(k) if k == n) && took <= Duration::from_secs(budget);
        ok &= good;
        parts.push(format!("{d}t{c:+}: {:?} (expected {n}, {})", got.ok(), secs(took)));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(5), || {
        let Ok(f) = filter_candidates_with(1, 3, C1Check::TopPower) else { return outcome(false, "filter failed") };
        let gens = |list: &[borel_degen::acm_component::LabeledIdeal]| -> Vec<MonomialIdeal> {
            list.iter().map(|e| e.ideal.clone()).collect()
        };
        let expect = |ks: &[usize]| -> Vec<MonomialIdeal> { ks.iter().map(|&k| known(5, -2, k)).collect() };
        let (j6, j7) = (known(5, -2, 6), known(5, -2, 7));
        let values = (j6.hf_ideal(2), j7.hf_ideal(2));
        let ok = gens(&f.failing_c1) == expect(&[1, 2, 3, 4])
            && gens(&f.failing_c2) == expect(&[6])
            && gens(&f.passing) == expect(&[5, 7])
            && values == (1, 2);
        outcome(ok, format!("fail-C1 {{J1..J4}}, fail-C2 {{J6}} with h_J6(2) = {} < {} = h_J7(2), pass {{J5, J7}}", values.0, values.1))
    })
}

/// The six (order, target label) pairs and whether equality holds before saturation.
const DEGENERATIONS: [(&str, usize, bool); 6] = [
    ("bracket(43,9,2,1)", 21, false),
    ("bracket(17,4,1,0)", 22, false),
    ("bracket(16,4,2,0)", 23, true),
    ("bracket(51,13,2,1)", 27, false),
    ("bracket(45,12,2,1)", 28, false),
    ("bracket(38,11,2,1)", 29, true),
];

fn criterion_3() -> Outcome {
    timed(Duration::from_secs(60), || {
        let f = generic_f(2, 2, 0, 20).unwrap();
        let mut ok = true;
        let mut got = Vec::new();
        for (o, label, exact) in DEGENERATIONS {
            let target = known(6, -3, label);
            let p = WitnessProblem::new(2, 2, target.clone(), parse_term_order(o, 4).unwrap(), Some(f.clone())).unwrap();
            let good = match verify_witness(&p).unwrap() {
                WitnessOutcome::Verified(init) => !exact || init == target,
                WitnessOutcome::Failed(_) => false,
            };
            ok &= good;
            got.push(format!("J{label}{}", if good { "" } else { " missed" }));
        }
        outcome(ok, format!("saturated initial ideals {}; J23 and J29 equal before saturation", got.join(", ")))
    })
}

fn verify_table(table: &[borel_degen::witness::KnownWitness]) -> (usize, Vec<usize>) {
    let mut failed = Vec::new();
    for w in table {
        let p = w.problem().unwrap();
        if !verify_witness(&p).unwrap().is_verified() {
            failed.push(w.label);
        }
    }
    (table.len() - failed.len(), failed)
}

fn criterion_4() -> Outcome {
    timed(Duration::from_secs(60), || {
        let (n, failed) = verify_table(&WITNESSES_3_1);
        outcome(failed.is_empty(), format!("{n} of 3 witnesses verify (J83 lex, J85 lex, J102 bracket(10,3,2,1)); failed {failed:?}"))
    })
}

fn criterion_5() -> Outcome {
    timed(Duration::from_secs(900), || {
        let f = filter_candidates(3, 3).unwrap();
        let c1 = f.passing.len() + f.failing_c2.len();
        let c2_ok = f.failing_c2.len() == 1 && f.failing_c2[0].ideal == ideal("x^2, xy^3, xy^2z^4, xyz^5, xz^6, y^9");
        let (n, failed) = verify_table(&WITNESSES_3_3);
        let w799 = !failed.contains(&799);
        let ok = c1 == 45 && c2_ok && failed.is_empty();
        outcome(
            ok,
            format!(
                "C1 passes {c1} of 989 (published 45); C2 removes only (x^2, xy^3, xy^2z^4, xyz^5, xz^6, y^9): {c2_ok}; \
                 {n} of 16 witnesses verify, J799 over Q(sqrt 7): {w799}"
            ),
        )
    })
}

fn criterion_6() -> Outcome {
    timed(Duration::from_secs(1800), || {
        let entries = sweep(admissible_cases(&CaseId::ALL, 4, 4), 42);
        let mut per_case: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for id in CaseId::ALL {
            per_case.insert(id.to_string(), (0, 0));
        }
        let mut failures = Vec::new();
        for e in &entries {
            let slot = per_case.get_mut(&e.case.id.to_string()).unwrap();
            slot.0 += 1;
            if matches!(e.outcome, Ok(Verification::Confirmed(_))) {
                slot.1 += 1;
            } else {
                let p = &e.case.params;
                failures.push(format!("{} ({},{},{},{})", e.case.id, p.l, p.m, p.i, p.j));
            }
        }
        let empty: Vec<&String> = per_case.iter().filter(|(_, v)| v.0 == 0).map(|(k, _)| k).collect();
        let confirmed: usize = per_case.values().map(|v| v.1).sum();
        let ok = failures.is_empty() && empty.is_empty();
        outcome(
            ok,
            format!(
                "{confirmed} of {} admissible instances confirmed over {} cases; cases without instances {empty:?}; failures {failures:?}",
                entries.len(),
                per_case.len()
            ),
        )
    })
}

fn property_groebner() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for case in 0..50 {
        let n = 3 + case % 2;
        let i = random_polynomial_ideal(&mut rng, n);
        let o = &orders(n)[case % 3];
        let gb = buchberger(&i, o).map_err(|e| e.to_string())?;
        let els = gb.elements();
        for a in 0..els.len() {
            for b in a + 1..els.len() {
                if !divide_fully(&s_polynomial(&els[a], &els[b], o), els, o).is_zero() {
                    return Err(format!("S-polynomial {a},{b} of random ideal {case}"));
                }
            }
        }
    }
    Ok(())
}

fn property_initial_hf() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for case in 0..12 {
        let i = random_polynomial_ideal(&mut rng, 3);
        for o in orders(3) {
            let j = initial_ideal(&i, &o).map_err(|e| e.to_string())?;
            if let Some(d) = (0..=12).find(|&d| j.hf_ideal(d) as usize != degree_piece_dimension(i.gens(), d)) {
                return Err(format!("initial ideal HF, ideal {case}, order {}, degree {d}", o.name()));
            }
        }
    }
    Ok(())
}

fn property_saturation() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for case in 0..20 {
        let j = random_monomial_ideal(&mut rng, 4, 4, 6);
        let sat = j.saturation();
        if sat.saturation() != sat {
            return Err(format!("saturation idempotence, ideal {case}"));
        }
        for deg in 0..=j.max_degree() + 1 {
            if all_monomials(4, deg).iter().any(|m| sat.contains(m) != in_saturation_oracle(&j, m)) {
                return Err(format!("colon oracle, ideal {case}, degree {deg}"));
            }
        }
    }
    Ok(())
}

fn property_gotzmann() -> Result<(), String> {
    let mut checked = 0;
    for d in 3i64..=9 {
        for c in -12i64..=2 {
            let p = HilbertPolynomial::linear(d, c);
            let Ok(r) = gotzmann_number(&p) else {
                if c >= -d * (d - 3) / 2 {
                    return Err(format!("{d}t{c:+} rejected"));
                }
                continue;
            };
            let reg = lex_segment_ideal(&p, 4).and_then(|l| l.regularity_borel()).map_err(|e| e.to_string())?;
            if reg as usize != r {
                return Err(format!("{d}t{c:+}: Gotzmann number {r}, lex regularity {reg}"));
            }
            checked += 1;
        }
    }
    (checked > 0).then_some(()).ok_or_else(|| "no polynomial checked".into())
}

fn property_z_transform() -> Result<(), String> {
    for &(d, c, label, _) in KNOWN_LABELS.iter().filter(|e| e.0 <= 7) {
        let j = known(d, c, label);
        let t = z_transform(&j, 1).map_err(|e| e.to_string())?;
        if let Some(deg) = (0..=12).find(|&deg| t.hf_ideal(deg) != j.hf_ideal(deg)) {
            return Err(format!("z-transform of J{label}, degree {deg}"));
        }
    }
    Ok(())
}

fn property_segment_weights() -> Result<(), String> {
    let cat = enumerate_saturated_borel(&HilbertPolynomial::linear(6, -3), 4).map_err(|e| e.to_string())?;
    for (k, j) in cat.entries().iter().enumerate() {
        let reg = j.regularity_borel().map_err(|e| e.to_string())?;
        let Some(w) = is_segment(j, reg).map_err(|e| e.to_string())? else { continue };
        let w: Vec<BigInt> = w.weights.iter().map(|&x| BigInt::from(x)).collect();
        let val = |m: &Monomial| -> BigInt { m.exps().iter().zip(&w).map(|(e, c)| BigInt::from(*e) * c).sum() };
        let (ins, outs): (Vec<Monomial>, Vec<Monomial>) = all_monomials(4, reg).into_iter().partition(|m| j.contains(m));
        for a in &ins {
            for b in &outs {
                if val(a) - val(b) < BigInt::from(1) {
                    return Err(format!("weight of J{} fails a pair in degree {reg}", k + 1));
                }
            }
        }
    }
    Ok(())
}

fn property_mutual_exclusion() -> Result<(), String> {
    let cat = enumerate_saturated_borel(&HilbertPolynomial::linear(7, -5), 4).map_err(|e| e.to_string())?;
    let mut clashes = HashSet::new();
    for (k, j) in cat.entries().iter().enumerate() {
        let reg = j.regularity_borel().map_err(|e| e.to_string())?;
        for t in 1..=reg {
            if is_segment(j, t).map_err(|e| e.to_string())?.is_some() && non_segment_certificate(j, t).is_some() {
                clashes.insert(k + 1);
            }
        }
    }
    clashes.is_empty().then_some(()).ok_or_else(|| format!("clashes {clashes:?}"))
}

type PropertySuite = (&'static str, fn() -> Result<(), String>);

fn criterion_7() -> Outcome {
    let suites: [PropertySuite; 7] = [
        ("S-polynomials on 50 random ideals", property_groebner),
        ("initial-ideal HF up to degree 12", property_initial_hf),
        ("saturation on 20 random ideals", property_saturation),
        ("Gotzmann number vs lex regularity", property_gotzmann),
        ("z-transform HF", property_z_transform),
        ("segment weights re-verified", property_segment_weights),
        ("segment exclusion on 7t-5", property_mutual_exclusion),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, f) in suites {
        match f() {
            Ok(()) => parts.push(format!("{name} ok")),
            Err(e) => {
                ok = false;
                parts.push(format!("{name} FAILED ({e})"));
            }
        }
    }
    outcome(ok, parts.join("; "))
}

fn criterion_8() -> Outcome {
    let f = filter_candidates(3, 1).unwrap();
    let c1 = f.passing.len() + f.failing_c2.len();
    let both = f.passing.len();
    let detected = both == 17 && c1 == 18;
    outcome(
        detected,
        format!("WARNING (3,1): stated count 18 against a 17-label list; computed {c1} pass C1 and {both} pass C1 and C2"),
    )
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut unexpected = 0;
    for (k, f) in criteria {
        let o = f();
        let status = if o.ok { "PASS" } else { "FAIL" };
        let known = !o.ok && KNOWN_DEVIATIONS.iter().any(|(c, s)| *c == k && o.detail.contains(s) && !o.detail.contains("OVER BUDGET"));
        let note = if known { " (documented deviation)" } else { "" };
        println!("{status} criterion {k}: {}{note}", o.detail);
        if !o.ok && !known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
