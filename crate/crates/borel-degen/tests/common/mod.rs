//! Shared fixtures for the integration tests.
#![allow(dead_code)]

pub mod oracles;

use borel_degen::monomial::Monomial;
use borel_degen::monomial_ideal::MonomialIdeal;
use borel_degen::parse::parse_monomial_ideal;

/// Reference ideals by Hilbert polynomial `d t + c` and catalogue label.
pub const KNOWN_LABELS: &[(i64, i64, usize, &str)] = &[
    (5, -2, 1, "x, y^6, y^5 z^3"),
    (5, -2, 2, "x, y^7, y^6 z, y^5 z^2"),
    (5, -2, 3, "x^2, x y, x z, y^6, y^5 z^2"),
    (5, -2, 4, "x^2, x y, x z^2, y^6, y^5 z"),
    (5, -2, 5, "x^2, x y, x z^3, y^5"),
    (5, -2, 6, "x^2, x y^2, x y z, x z^2, y^5"),
    (5, -2, 7, "x^2, x y, y^4"),
    (6, -3, 21, "x^2, xy, y^6, xz^6"),
    (6, -3, 22, "x^2, xy^2, xyz, y^6, xz^5"),
    (6, -3, 23, "x^2, xy^2, xyz^2, xz^4, y^6"),
    (6, -3, 27, "x^2, xy, y^6, y^5z^2"),
    (6, -3, 28, "x^2, xy^2, xyz, y^6, y^5z"),
    (6, -3, 29, "x^2, xy^2, xyz^2, y^5"),
    (6, -3, 31, "x^2, xy^2, y^4"),
    (7, -5, 83, "x^2, xy^3, xy^2z, xyz^2, xz^6, y^7"),
    (7, -5, 85, "x^2, xy^2, xyz^4, xz^5, y^7"),
    (7, -5, 102, "x^2, xy^3, xy^2z, xyz^2, y^6z, y^7"),
    (9, -12, 773, "x^2, x y^3, x y^2 z, x y z^2, y^9, x z^12"),
    (9, -12, 776, "x^2, x y^3, x y^2 z, x y z^3, y^9, x z^11"),
    (9, -12, 781, "x^2, x y^3, x y^2 z, x y z^4, y^9, x z^10"),
    (9, -12, 783, "x^2, x y^3, x y^2 z^2, x y z^3, y^9, x z^10"),
    (9, -12, 787, "x^2, x y^2, x y z^6, y^9, x z^9"),
    (9, -12, 790, "x^2, x y^3, x y^2 z^2, x y z^4, y^9, x z^9"),
    (9, -12, 798, "x^2, x y^2, y^9, x y z^7, x z^8"),
    (9, -12, 799, "x^2, x y^3, x y^2 z, x y z^6, y^9, x z^8"),
    (9, -12, 804, "x^2, x y^3, x y^2 z^3, x y z^4, y^9, x z^8"),
    (9, -12, 814, "x^2, x y^3, x y^2 z^2, x y z^6, x z^7, y^9"),
    (9, -12, 834, "x^2, xy^3, xy^2z^4, xyz^5, xz^6, y^9"),
    (9, -12, 888, "x^2, x y^3, x y^2 z, x y z^2, y^9, y^8 z^5"),
    (9, -12, 899, "x^2, x y^3, x y^2 z, x y z^3, y^9, y^8 z^4"),
    (9, -12, 914, "x^2, x y^3, x y^2 z, x y z^4, y^9, y^8 z^3"),
    (9, -12, 930, "x^2, x y^3, x y^2 z^2, x y z^4, y^9, y^8 z^2"),
    (9, -12, 944, "x^2, x y^3, x y^2 z^3, x y z^4, y^9, y^8 z"),
    (9, -12, 978, "x^2, x y^2, y^9, y^8 z, y^7 z^2"),
    (9, -12, 989, "x^2, xy^3, y^6"),
];

/// The reference ideal with a given label for `d t + c`.
pub fn known(d: i64, c: i64, label: usize) -> MonomialIdeal {
    let (_, _, _, g) = KNOWN_LABELS.iter().find(|e| e.0 == d && e.1 == c && e.2 == label).expect("label is in the table");
    ideal(g)
}

/// Parses a monomial ideal in `x, y, z, w`.
pub fn ideal(s: &str) -> MonomialIdeal {
    parse_monomial_ideal(s, 4).unwrap()
}

/// The monomial `x^a y^b z^c w^d`.
pub fn mono(e: [u32; 4]) -> Monomial {
    Monomial::new(&e)
}

/// All monomials of degree `d` in `n` variables, by direct recursion.
pub fn all_monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Number of degree-`d` monomials lying in `j`, by enumeration.
pub fn brute_force_hf(j: &MonomialIdeal, d: u32) -> u128 {
    all_monomials(j.nvars(), d).iter().filter(|m| j.gens().iter().any(|g| g.divides(m))).count() as u128
}
