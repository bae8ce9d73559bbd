//! Fox calculus and Alexander polynomials.
//!
//! The Alexander matrix of a presentation has entry `(i, j)` equal to the
//! abelianized Fox derivative of relator `i` by generator `j`. The Alexander
//! polynomial generates (up to units) the first elementary ideal: the gcd of
//! all minors of size `generators - 1`.

mod fox;
mod laurent;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::knots::GroupPresentation;
use crate::{Error, Result};

pub use fox::{fox_derivative, GroupRingElement};
pub use laurent::LaurentPolynomial;

/// Matrix over `Z[t, t^-1]`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderMatrix {
    columns: usize,
    rows: Vec<Vec<LaurentPolynomial>>,
}

impl AlexanderMatrix {
    pub fn new(columns: usize, rows: Vec<Vec<LaurentPolynomial>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != columns) {
            return Err(Error::Invalid("ragged matrix".into()));
        }
        Ok(AlexanderMatrix { columns, rows })
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> &[Vec<LaurentPolynomial>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPolynomial {
        &self.rows[i][j]
    }
}

/// Abelianized Fox Jacobian; `exponents[j]` is the power of `t` that
/// generator `j + 1` maps to.
pub fn alexander_matrix(p: &GroupPresentation, exponents: &[i64]) -> Result<AlexanderMatrix> {
    if exponents.len() != p.rank() {
        return Err(Error::RankMismatch {
            expected: p.rank(),
            found: exponents.len(),
        });
    }
    let rows = p
        .relators()
        .iter()
        .map(|r| {
            (1..=p.rank())
                .map(|j| fox_derivative(r, j).abelianize(exponents))
                .collect()
        })
        .collect();
    AlexanderMatrix::new(p.rank(), rows)
}

/// Gcd of the maximal minors of a deficiency-one presentation matrix,
/// normalized. Checks `Δ(1) = ±1`.
pub fn alexander_polynomial(m: &AlexanderMatrix) -> Result<LaurentPolynomial> {
    let delta = first_elementary_ideal(m);
    let value = delta.value_at_one();
    if value.abs() != BigInt::one() {
        return Err(Error::NotKnotGroup {
            polynomial: delta.to_string(),
            value: value.to_string(),
        });
    }
    Ok(delta)
}

/// Generator of the first elementary ideal without the knot sanity check.
pub fn first_elementary_ideal(m: &AlexanderMatrix) -> LaurentPolynomial {
    let n = m.columns;
    if n == 0 {
        return LaurentPolynomial::zero();
    }
    let k = n - 1;
    if k == 0 {
        return LaurentPolynomial::one();
    }
    let mut gcd = LaurentPolynomial::zero();
    for row_set in combinations(m.rows.len(), k) {
        for deleted in 0..n {
            let minor: Vec<Vec<LaurentPolynomial>> = row_set
                .iter()
                .map(|&i| {
                    (0..n)
                        .filter(|&j| j != deleted)
                        .map(|j| m.rows[i][j].clone())
                        .collect()
                })
                .collect();
            gcd = gcd.gcd(&determinant(minor));
        }
    }
    gcd.normalized()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// Determinant over `Z[t, t^-1]` by fraction-free (Bareiss) elimination.
pub fn determinant(mut a: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = a.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut negate = false;
    let mut previous = LaurentPolynomial::one();
    for i in 0..n {
        if a[i][i].is_zero() {
            match (i + 1..n).find(|&r| !a[r][i].is_zero()) {
                Some(r) => {
                    a.swap(i, r);
                    negate = !negate;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for r in i + 1..n {
            for c in i + 1..n {
                let num = &(&a[r][c] * &a[i][i]) - &(&a[r][i] * &a[i][c]);
                a[r][c] = num
                    .div_exact(&previous)
                    .expect("Bareiss division is exact over an integral domain");
            }
        }
        previous = a[i][i].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(t·I - M)` for an integer matrix.
pub fn characteristic_polynomial(m: &[Vec<i64>]) -> LaurentPolynomial {
    let n = m.len();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = LaurentPolynomial::monomial(-m[i][j], 0);
                    if i == j {
                        &c + &LaurentPolynomial::t()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    determinant(rows)
}
