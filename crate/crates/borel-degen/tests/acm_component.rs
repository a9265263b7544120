mod common;

use borel_degen::acm_component::{
    c1_for_quadric, candidate_ideal, condition_c2, filter_candidates, filter_candidates_with, hp_sum_condition, j_ab,
    j_lm, necessary_condition_c1, partitions, predicted_p1, predicted_p2, predicted_p3, predicted_part, AcmBorelSpec,
    C1Check, P3Case, QuadricCandidateSpec, Strictness,
};
use borel_degen::error::Error;
use borel_degen::monomial::Monomial;
use common::{ideal, known};

const PASSING_3_1: [usize; 17] = [78, 79, 80, 82, 83, 85, 86, 95, 97, 99, 101, 102, 104, 105, 109, 110, 112];

fn labels(v: &[borel_degen::acm_component::LabeledIdeal]) -> Vec<usize> {
    v.iter().map(|e| e.label).collect()
}

/// All weakly decreasing sequences of a given length with entries in `0..=max`.
fn weakly_decreasing(len: usize, max: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=max {
        for rest in weakly_decreasing(len - 1, first) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

#[test]
fn acm_borel_ideals() {
    let cubic = j_ab(&AcmBorelSpec::new(2, vec![1, 2]).unwrap(), 4).unwrap();
    assert_eq!(cubic, ideal("x^2, x y, y^2"));
    for (l, m) in [(1, 3), (2, 2), (3, 1), (3, 3)] {
        let expect = ideal(&format!("x^2, x y^{l}, y^{}", l + m));
        assert_eq!(j_ab(&AcmBorelSpec::quadric(l, m), 4).unwrap(), expect);
        assert_eq!(j_lm(l, m).unwrap(), expect);
    }
    assert_eq!(j_ab(&AcmBorelSpec::new(1, vec![1]).unwrap(), 4).unwrap(), ideal("x, y"));
    assert_eq!(j_lm(1, 3).unwrap(), known(5, -2, 7));
    assert_eq!(j_lm(3, 3).unwrap(), known(9, -12, 989));
}

#[test]
fn candidate_ideal_examples() {
    let s = QuadricCandidateSpec::new(2, 2, 2, vec![5, 1], vec![], Strictness::Borel).unwrap();
    assert_eq!(candidate_ideal(&s).unwrap(), known(6, -3, 22));
    assert!(hp_sum_condition(&s));
    let s = QuadricCandidateSpec::new(2, 2, 1, vec![1], vec![1], Strictness::Borel).unwrap();
    assert_eq!(candidate_ideal(&s).unwrap(), known(6, -3, 28));
    for (l, m) in [(1, 3), (2, 2), (3, 3)] {
        let s = QuadricCandidateSpec::new(l, m, 0, vec![], vec![0; l as usize], Strictness::Borel).unwrap();
        assert_eq!(candidate_ideal(&s).unwrap(), j_lm(l, m).unwrap());
        assert!(hp_sum_condition(&s));
    }
    let s = QuadricCandidateSpec::new(3, 3, 3, vec![7, 5, 3], vec![], Strictness::Borel).unwrap();
    assert!(hp_sum_condition(&s));
    assert!(QuadricCandidateSpec::new(2, 2, 3, vec![1, 1, 1], vec![], Strictness::Borel).is_err());
    assert!(QuadricCandidateSpec::new(2, 2, 2, vec![1, 1], vec![], Strictness::Borel).is_err());
    assert!(QuadricCandidateSpec::new(2, 2, 2, vec![1, 1], vec![], Strictness::AlmostBorel).is_ok());
    assert!(QuadricCandidateSpec::new(2, 2, 2, vec![1, 2], vec![], Strictness::AlmostBorel).is_err());
}

#[test]
fn hp_sum_condition_characterises_the_hilbert_polynomial() {
    for (l, m) in [(1, 1), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
        let hp = j_lm(l, m).unwrap().hilbert_polynomial_quotient();
        let mut almost_non_borel = 0;
        for p in 0..=l {
            let cap = m + 2 * l;
            for a in weakly_decreasing(p as usize, cap) {
                for b in weakly_decreasing((l - p) as usize, cap.min(4)) {
                    let spec = QuadricCandidateSpec::classify(l, m, p, a.clone(), b.clone()).unwrap();
                    let j = candidate_ideal(&spec).unwrap();
                    let same = j.hilbert_polynomial_quotient() == hp;
                    assert_eq!(hp_sum_condition(&spec), same, "(l,m) = ({l},{m}), a = {a:?}, b = {b:?}");
                    match spec.strictness {
                        Strictness::Borel => assert!(j.is_borel_fixed(), "strict shape a = {a:?}, b = {b:?}"),
                        Strictness::AlmostBorel => almost_non_borel += usize::from(!j.is_borel_fixed()),
                    }
                }
            }
        }
        if l >= 2 {
            assert!(almost_non_borel > 0, "some almost Borel candidate is not Borel for ({l},{m})");
        }
    }
}

#[test]
fn c1_examples() {
    let cubic = AcmBorelSpec::new(2, vec![1, 2]).unwrap();
    assert!(!necessary_condition_c1(&ideal("x, y^3 z, y^4"), &cubic));
    assert!(necessary_condition_c1(&ideal("x^2, x y, y^3"), &cubic));
    let q = AcmBorelSpec::quadric(1, 3);
    assert!(necessary_condition_c1(&known(5, -2, 5), &q));
    assert!(!necessary_condition_c1(&known(5, -2, 3), &q));
    assert!(necessary_condition_c1(&known(5, -2, 7), &q));
}

#[test]
fn c1_specialises_to_three_monomials() {
    for &(d, c, label, _) in common::KNOWN_LABELS {
        let j = known(d, c, label);
        for (l, m) in [(1, 3), (2, 2), (3, 1), (3, 3), (2, 5)] {
            let direct = [[2, 0, 0, 0], [1, l, 0, 0], [0, 2 * l + m, 0, 0]].iter().all(|e| j.contains(&Monomial::new(e)));
            assert_eq!(necessary_condition_c1(&j, &AcmBorelSpec::quadric(l, m)), direct, "J{label}, ({l},{m})");
            assert_eq!(c1_for_quadric(&j, l, m, C1Check::Full), direct);
            let top = j.contains(&Monomial::new(&[0, 2 * l + m, 0, 0]));
            assert_eq!(c1_for_quadric(&j, l, m, C1Check::TopPower), top);
        }
    }
}

#[test]
fn c2_examples() {
    let (j5, j6, j7) = (known(5, -2, 5), known(5, -2, 6), known(5, -2, 7));
    assert_eq!(j6.hf_ideal(2), 1);
    assert_eq!(j7.hf_ideal(2), 2);
    assert!(!condition_c2(&j6, &j7).unwrap());
    assert!(condition_c2(&j5, &j7).unwrap());
    assert!(condition_c2(&j7, &j7).unwrap());
    assert!(matches!(condition_c2(&j7, &known(6, -3, 31)), Err(Error::HilbertPolynomialMismatch(_))));
}

#[test]
fn filter_for_one_three() {
    let top = filter_candidates_with(1, 3, C1Check::TopPower).unwrap();
    assert_eq!(labels(&top.failing_c1), vec![1, 2, 3, 4]);
    assert_eq!(labels(&top.failing_c2), vec![6]);
    assert_eq!(labels(&top.passing), vec![5, 7]);
    let full = filter_candidates(1, 3).unwrap();
    assert_eq!(labels(&full.failing_c1), vec![1, 2, 3, 4, 6]);
    assert!(full.failing_c2.is_empty());
    assert_eq!(labels(&full.passing), vec![5, 7]);
}

#[test]
fn filter_for_two_two() {
    let f = filter_candidates(2, 2).unwrap();
    assert_eq!(labels(&f.passing), vec![21, 22, 23, 27, 28, 29, 31]);
    assert_eq!(f.passing.len() + f.failing_c1.len() + f.failing_c2.len(), 31);
    for e in &f.passing {
        assert_eq!(e.ideal, known(6, -3, e.label));
    }
}

#[test]
fn filter_for_three_one() {
    let f = filter_candidates(3, 1).unwrap();
    assert_eq!(labels(&f.passing), PASSING_3_1.to_vec());
    assert_eq!(f.passing.len() + f.failing_c2.len(), 18);
    assert_eq!(labels(&f.failing_c2), vec![90]);
}

#[test]
fn filter_for_three_three() {
    let f = filter_candidates(3, 3).unwrap();
    let c1 = f.passing.len() + f.failing_c2.len();
    // Forty-seven ideals, J989 included, contain x^2, x y^3 and y^9.
    assert_eq!(c1, 47);
    assert_eq!(labels(&f.failing_c2), vec![834]);
    assert_eq!(f.failing_c2[0].ideal, ideal("x^2, xy^3, xy^2z^4, xyz^5, xz^6, y^9"));
    assert!(labels(&f.passing).contains(&916));
    assert!(labels(&f.passing).contains(&989));
    for &(_, _, label, _) in common::KNOWN_LABELS.iter().filter(|e| e.0 == 9 && e.2 != 834) {
        assert!(labels(&f.passing).contains(&label), "J{label} passes");
    }
}

#[test]
fn passing_sets_contain_every_supported_prediction() {
    for (l, m) in [(1, 3), (2, 2), (3, 1), (3, 3)] {
        let f = filter_candidates(l, m).unwrap();
        let passing: Vec<_> = f.passing.iter().map(|e| e.ideal.clone()).collect();
        let mut predicted = vec![j_lm(l, m).unwrap()];
        if l >= 2 {
            for i in 0..=m {
                predicted.push(candidate_ideal(&predicted_p1(l, m, i).unwrap()).unwrap());
            }
        }
        for a1 in 0..=m + 1 {
            for a0 in a1..=2 * m + 2 - a1 {
                let b2 = 2 * m + 2 - a0 - a1;
                if let Ok((spec, true)) = predicted_p2(l, m, a0, a1, b2) {
                    if spec.strictness == Strictness::Borel {
                        predicted.push(candidate_ideal(&spec).unwrap());
                    }
                }
            }
        }
        if l >= 3 {
            for a2 in 0..=m + 2 {
                for a1 in a2..=(3 * m + 6 - a2) / 2 {
                    let a0 = 3 * m + 6 - a1 - a2;
                    let (spec, case) = predicted_p3(l, m, a0, a1, a2).unwrap();
                    if case != P3Case::None && spec.strictness == Strictness::Borel {
                        predicted.push(candidate_ideal(&spec).unwrap());
                    }
                }
            }
        }
        let (spec, ok) = predicted_part(l, m, &vec![0; l as usize]).unwrap();
        assert!(ok);
        predicted.push(candidate_ideal(&spec).unwrap());
        for j in predicted {
            assert!(passing.contains(&j), "({l},{m}): predicted {j:?} passes both conditions");
        }
    }
}

#[test]
fn prediction_examples() {
    let cand = |s: &QuadricCandidateSpec| candidate_ideal(s).unwrap();
    assert_eq!(cand(&predicted_p1(2, 2, 1).unwrap()), known(6, -3, 28));
    assert_eq!(cand(&predicted_p1(2, 2, 2).unwrap()), known(6, -3, 27));
    assert_eq!(cand(&predicted_p1(2, 2, 0).unwrap()), known(6, -3, 29));
    assert!(predicted_p1(2, 2, 3).is_err());

    let (s, ok) = predicted_p2(2, 2, 5, 1, 0).unwrap();
    assert!(ok);
    assert_eq!(cand(&s), known(6, -3, 22));
    let (s, ok) = predicted_p2(2, 2, 4, 2, 0).unwrap();
    assert!(ok);
    assert_eq!(cand(&s), known(6, -3, 23));
    let (_, ok) = predicted_p2(3, 2, 3, 2, 1).unwrap();
    assert!(!ok);
    assert!(predicted_p2(2, 2, 3, 2, 1).is_err());
    assert!(predicted_p2(2, 2, 3, 2, 0).is_err());

    assert_eq!(predicted_p3(3, 3, 7, 5, 3).unwrap().1, P3Case::Two);
    assert_eq!(predicted_p3(3, 3, 9, 6, 0).unwrap().1, P3Case::Three);
    assert_eq!(predicted_p3(3, 3, 8, 7, 0).unwrap().1, P3Case::None);
    assert!(predicted_p3(3, 3, 8, 7, 1).is_err());

    let (s, ok) = predicted_part(3, 3, &[0, 0, 0]).unwrap();
    assert!(ok);
    assert_eq!(s.a, vec![7, 5, 3]);
    for m in 2..6 {
        let (s, _) = predicted_part(2, m, &[0, 0]).unwrap();
        assert_eq!(s.a, vec![m + 2, m]);
        let (s, _) = predicted_part(2, m, &[0, 1]).unwrap();
        assert_eq!(s.a, vec![m + 3, m - 1]);
    }
    assert!(predicted_part(3, 3, &[2, 0, 0]).is_err());
    assert!(predicted_part(3, 3, &[0, 0]).is_err());
}

#[test]
fn partition_examples() {
    assert_eq!(partitions(2, 2, 2), vec![vec![2, 0], vec![1, 1]]);
    assert_eq!(partitions(4, 2, 2), vec![vec![2, 2]]);
    assert_eq!(partitions(0, 3, 2), vec![vec![0, 0, 0]]);
    for (t, k, cap) in [(6, 3, 3), (4, 4, 2), (9, 3, 5)] {
        let ps = partitions(t, k, cap);
        let all = weakly_decreasing(k as usize, cap);
        let expect: Vec<Vec<u32>> = all.into_iter().filter(|v| v.iter().sum::<u32>() == t).collect();
        assert_eq!(ps.len(), expect.len());
        for p in &ps {
            assert!(expect.contains(p));
        }
    }
}
