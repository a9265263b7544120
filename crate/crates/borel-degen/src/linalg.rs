//! Exact dense linear algebra over the coefficient field.

use std::collections::HashMap;

use crate::field::Coeff;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;

/// Rank by Gaussian elimination (the matrix is consumed).
pub fn rank(mut m: Vec<Vec<Coeff>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        let pivot_row: Vec<Coeff> = m[r].iter().map(|x| x.mul(&inv)).collect();
        for i in (r + 1)..nrows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for k in c..ncols {
                if !pivot_row[k].is_zero() {
                    m[i][k] = m[i][k].sub(&f.mul(&pivot_row[k]));
                }
            }
        }
        m[r] = pivot_row;
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Determinant by fraction-free Bareiss elimination.
pub fn determinant_bareiss(mut m: Vec<Vec<Coeff>>) -> Coeff {
    let n = m.len();
    if n == 0 {
        return Coeff::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut sign_negative = false;
    let mut prev = Coeff::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match ((k + 1)..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign_negative = !sign_negative;
                }
                None => return Coeff::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div(&prev).expect("previous pivot is nonzero");
            }
            m[i][k] = Coeff::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_negative {
        d.neg()
    } else {
        d
    }
}

/// The products `m·g` of degree `d` for homogeneous generators `g`.
pub fn degree_piece_spanning_set(gens: &[Polynomial], d: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for g in gens {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        assert!(g.is_homogeneous(), "degree pieces need homogeneous generators");
        for m in monomials_of_degree(g.nvars(), d - e) {
            out.push(g.mul_term(&m, &Coeff::one()));
        }
    }
    out
}

/// Coefficient matrix of `polys` with columns indexed by `columns`.
pub fn coefficient_matrix(polys: &[Polynomial], columns: &[Monomial]) -> Vec<Vec<Coeff>> {
    let index: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    polys
        .iter()
        .map(|p| {
            let mut row = vec![Coeff::zero(); columns.len()];
            for (m, c) in p.terms() {
                if let Some(&i) = index.get(m) {
                    row[i] = c.clone();
                }
            }
            row
        })
        .collect()
}

/// Dimension of the degree-`d` piece of the ideal generated by homogeneous `gens`.
pub fn degree_piece_dimension(gens: &[Polynomial], d: u32) -> usize {
    let Some(n) = gens.first().map(|g| g.nvars()) else { return 0 };
    let span = degree_piece_spanning_set(gens, d);
    if span.is_empty() {
        return 0;
    }
    let cols = monomials_of_degree(n, d);
    rank(coefficient_matrix(&span, &cols))
}

/// Reduced row-echelon basis of the span of `polys` in the given monomial columns.
pub fn row_basis(polys: &[Polynomial], columns: &[Monomial]) -> Vec<Vec<Coeff>> {
    let mut m = coefficient_matrix(polys, columns);
    let nrows = m.len();
    let ncols = columns.len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        let pivot_row: Vec<Coeff> = m[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..nrows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for k in c..ncols {
                if !pivot_row[k].is_zero() {
                    m[i][k] = m[i][k].sub(&f.mul(&pivot_row[k]));
                }
            }
        }
        m[r] = pivot_row;
        r += 1;
        if r == nrows {
            break;
        }
    }
    m.truncate(r);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Coeff>> {
        rows.iter().map(|r| r.iter().map(|&v| Coeff::from_int(v)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant_bareiss(mat(&[&[2, 1], &[1, 3]])), Coeff::from_int(5));
        assert_eq!(determinant_bareiss(mat(&[&[0, 1], &[1, 0]])), Coeff::from_int(-1));
        assert_eq!(determinant_bareiss(mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), Coeff::zero());
        assert_eq!(determinant_bareiss(mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), Coeff::from_int(6));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
        assert_eq!(rank(mat(&[])), 0);
    }
}
