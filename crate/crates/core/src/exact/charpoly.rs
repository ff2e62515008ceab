use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SymMatrix};

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Dimension(format!("row {bad} has length {}, expected {n}", rows[bad].len())));
        }
        Ok(IntMatrix { n, data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() })
    }

    /// Rejects non-square input and any entry that is not an exact integer.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!("{}x{} is not square", m.rows(), m.cols())));
        }
        let n = m.rows();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let x = m[(i, j)];
                if !x.is_finite() || x.fract() != 0.0 || x.abs() > 9.0e15 {
                    return Err(Error::NonInteger { row: i, col: j, value: x });
                }
                data.push(BigInt::from(x as i64));
            }
        }
        Ok(IntMatrix { n, data })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j).to_f64().unwrap_or(f64::NAN))
    }

    fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        data[i * n + j] += a * b;
                    }
                }
            }
        }
        IntMatrix { n, data }
    }

    fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

/// Characteristic polynomial `det(xI - A)` by Faddeev–LeVerrier over the
/// integers. Every division by the step index is exact.
pub fn charpoly_int(a: &IntMatrix) -> IntPolynomial {
    let n = a.n;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    if n == 0 {
        return IntPolynomial::new(coeffs);
    }
    // m holds M_k; A M_k is computed once per step and reused for the trace.
    let mut m = IntMatrix { n, data: vec![BigInt::zero(); n * n] };
    for i in 0..n {
        m.data[i * n + i] = BigInt::from(1);
    }
    for k in 1..=n {
        let am = a.mul(&m);
        let (c, rem) = (-am.trace()).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = c.clone();
        if k < n {
            m = am;
            for i in 0..n {
                m.data[i * n + i] += &c;
            }
        }
    }
    IntPolynomial::new(coeffs)
}

/// Characteristic polynomial of an integer-valued real matrix.
pub fn charpoly_exact(a: &Matrix) -> Result<IntPolynomial> {
    Ok(charpoly_int(&IntMatrix::from_matrix(a)?))
}

pub fn charpoly_sym(a: &SymMatrix) -> Result<IntPolynomial> {
    charpoly_exact(a.as_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_polynomials() {
        let qk3 = IntMatrix::from_i64_rows(&[vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]).unwrap();
        // (x - 4)(x - 1)^2 = x^3 - 6x^2 + 9x - 4
        assert_eq!(charpoly_int(&qk3), IntPolynomial::from_i64(&[-4, 9, -6, 1]));
        let q3 = IntMatrix::from_i64_rows(&[vec![3, 1, 0], vec![2, 3, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(charpoly_int(&q3), IntPolynomial::from_i64(&[-4, 12, -7, 1]));
        let zero = IntMatrix::from_i64_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(charpoly_int(&zero), IntPolynomial::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn rejects_non_integer_entries() {
        let m = Matrix::from_rows(&[vec![1.0, 0.5], vec![0.5, 1.0]]).unwrap();
        assert!(matches!(charpoly_exact(&m), Err(Error::NonInteger { row: 0, col: 1, .. })));
    }

    #[test]
    fn evaluates_to_determinant() {
        // p(0) = (-1)^n det(A)
        let a = IntMatrix::from_i64_rows(&[vec![2, -1, 0, 3], vec![1, 0, 4, 1], vec![0, 5, 1, -2], vec![3, 1, 1, 1]]).unwrap();
        let p = charpoly_int(&a);
        let det = a.to_matrix().determinant();
        assert!((p.coeff(0).to_f64().unwrap() - det).abs() < 1e-9);
    }
}
