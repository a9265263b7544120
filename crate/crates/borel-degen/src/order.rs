//! Matrix term orders.
//!
//! A term order is given by an integer matrix `M`; `a > b` iff `M·a > M·b`
//! lexicographically.  A matrix is accepted when it has full column rank and
//! the first nonzero entry of every column is positive, which makes `1` the
//! smallest monomial.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Image `M·a` of an exponent vector; compared lexicographically.
pub type OrderKey = SmallVec<[i64; 8]>;

/// A term order defined by an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    rows: Vec<Vec<i64>>,
    name: String,
}

impl TermOrder {
    /// Validates and wraps a matrix.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::named(rows, None)
    }

    fn named(rows: Vec<Vec<i64>>, name: Option<String>) -> Result<Self> {
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        if n == 0 {
            return Err(Error::InvalidTermOrder("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTermOrder("rows of unequal length".into()));
        }
        for col in 0..n {
            match rows.iter().map(|r| r[col]).find(|&v| v != 0) {
                Some(v) if v > 0 => {}
                _ => {
                    return Err(Error::InvalidTermOrder(format!(
                        "first nonzero entry of column {col} is not positive"
                    )))
                }
            }
        }
        if matrix_rank(&rows) != n {
            return Err(Error::InvalidTermOrder("matrix is rank deficient".into()));
        }
        let name = name.unwrap_or_else(|| {
            let body: Vec<String> = rows
                .iter()
                .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            format!("matrix([{}])", body.join(","))
        });
        Ok(TermOrder { rows, name })
    }

    /// Lexicographic order with `x₀ > x₁ > … > x_{n−1}`.
    pub fn lex(n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        Self::named(rows, Some("lex".into())).expect("identity matrix is a term order")
    }

    /// Degree reverse lexicographic order with `x₀ > … > x_{n−1}`.
    pub fn degrevlex(n: usize) -> Self {
        let mut rows = vec![vec![1; n]];
        for k in (1..n).rev() {
            let mut r = vec![0; n];
            r[k] = -1;
            rows.push(r);
        }
        Self::named(rows, Some("drl".into())).expect("degrevlex matrix is a term order")
    }

    /// The bracket order with rows `[1,1,1,1]`, `v`, `[0,0,−1,0]`, `[0,−1,0,0]`.
    pub fn bracket(v: [i64; 4]) -> Result<Self> {
        let rows = vec![vec![1, 1, 1, 1], v.to_vec(), vec![0, 0, -1, 0], vec![0, -1, 0, 0]];
        Self::named(rows, Some(format!("bracket({},{},{},{})", v[0], v[1], v[2], v[3])))
    }

    /// The order with rows `[1,1,1,1]`, `v₁..v₄`, `v₅..v₈`, `[0,0,1,0]`.
    pub fn m_order(v: [i64; 8]) -> Result<Self> {
        let rows = vec![vec![1, 1, 1, 1], v[..4].to_vec(), v[4..].to_vec(), vec![0, 0, 1, 0]];
        let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        Self::named(rows, Some(format!("m({})", body.join(","))))
    }

    /// Degree first, then the weight `w`, then degrevlex tie-breaking.
    pub fn weighted(w: &[i64]) -> Result<Self> {
        let n = w.len();
        let mut rows = vec![vec![1; n], w.to_vec()];
        rows.extend(Self::degrevlex(n).rows.into_iter().skip(1));
        Self::new(rows)
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.rows[0].len()
    }

    /// Matrix rows.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Short textual name (`lex`, `drl`, `bracket(..)`, or the matrix).
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The key `M·a`.
    pub fn key(&self, m: &Monomial) -> OrderKey {
        self.rows
            .iter()
            .map(|r| r.iter().zip(m.exps()).map(|(c, e)| c * i64::from(*e)).sum())
            .collect()
    }

    /// Compares two monomials.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for r in &self.rows {
            let va: i64 = r.iter().zip(a.exps()).map(|(c, e)| c * i64::from(*e)).sum();
            let vb: i64 = r.iter().zip(b.exps()).map(|(c, e)| c * i64::from(*e)).sum();
            match va.cmp(&vb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// True when the first row is a positive multiple of `(1,…,1)`, so the order refines degree.
    pub fn is_degree_compatible(&self) -> bool {
        let r = &self.rows[0];
        r[0] > 0 && r.iter().all(|&v| v == r[0])
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Exact rank of an integer matrix.
pub fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    rank_rational(&mut m)
}

/// Exact rank of a rational matrix by Gaussian elimination (destroys input).
pub fn rank_rational(m: &mut [Vec<BigRational>]) -> usize {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / &m[rank][col];
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..ncols {
                    let v = &m[rank][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
