use serde::{Deserialize, Serialize};

use super::{Matrix, SymMatrix};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 50;
const OFF_DIAGONAL_TOL: f64 = 1e-14;

/// Eigenvalues sorted in descending order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Sum of the `k` largest values.
    pub fn top_sum(&self, k: usize) -> f64 {
        self.values.iter().take(k).sum()
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().unwrap()
    }
}

pub fn eig_sym(a: &SymMatrix) -> Result<Spectrum> {
    jacobi(a, false).map(|(s, _)| s)
}

/// Eigenvalues and the matrix whose columns are the matching unit eigenvectors.
pub fn eig_sym_vectors(a: &SymMatrix) -> Result<(Spectrum, Matrix)> {
    jacobi(a, true).map(|(s, v)| (s, v.expect("vectors requested")))
}

/// Cyclic Jacobi rotations on a dense copy. Stops once the off-diagonal
/// Frobenius norm drops below `1e-14 * ||A||_F`.
fn jacobi(a: &SymMatrix, want_vectors: bool) -> Result<(Spectrum, Option<Matrix>)> {
    let n = a.order();
    if n == 0 {
        return Err(Error::Dimension("eigenvalues of an empty matrix".into()));
    }
    let src = a.as_matrix();
    for i in 0..n {
        for j in 0..n {
            if !src[(i, j)].is_finite() {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
    }
    let mut m = src.clone();
    let mut v = want_vectors.then(|| Matrix::identity(n));
    let norm = m.frobenius();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&m);
        if off <= OFF_DIAGONAL_TOL * norm {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                m[(p, p)] -= t * apq;
                m[(q, q)] += t * apq;
                m[(p, q)] = 0.0;
                m[(q, p)] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = m[(r, p)];
                    let arq = m[(r, q)];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    m[(r, p)] = new_rp;
                    m[(p, r)] = new_rp;
                    m[(r, q)] = new_rq;
                    m[(q, r)] = new_rq;
                }
                if let Some(v) = v.as_mut() {
                    for r in 0..n {
                        let vrp = v[(r, p)];
                        let vrq = v[(r, q)];
                        v[(r, p)] = c * vrp - s * vrq;
                        v[(r, q)] = s * vrp + c * vrq;
                    }
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&m) > OFF_DIAGONAL_TOL * norm {
        return Err(Error::NotConverged { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].total_cmp(&m[(i, i)]));
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let vectors = v.map(|v| Matrix::from_fn(n, n, |r, c| v[(r, order[c])]));
    Ok((Spectrum { values }, vectors))
}

fn off_diagonal_norm(m: &Matrix) -> f64 {
    let n = m.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[(i, j)] * m[(i, j)];
            }
        }
    }
    sum.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sym(rows: &[&[f64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn diagonal_and_small_cases() {
        let d = SymMatrix::new(Matrix::from_diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(eig_sym(&d).unwrap().values, vec![3.0, 2.0, 1.0]);
        let swap = sym(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_close(&eig_sym(&swap).unwrap().values, &[1.0, -1.0], 1e-14);
        // Q(K3): characteristic polynomial (x - 4)(x - 1)^2
        let qk3 = sym(&[&[2.0, 1.0, 1.0], &[1.0, 2.0, 1.0], &[1.0, 1.0, 2.0]]);
        assert_close(&eig_sym(&qk3).unwrap().values, &[4.0, 1.0, 1.0], 1e-13);
        assert_eq!(eig_sym(&sym(&[&[0.0]])).unwrap().values, vec![0.0]);
    }

    #[test]
    fn rejects_non_finite() {
        let bad = sym(&[&[f64::NAN, 0.0], &[0.0, 1.0]]);
        assert_eq!(eig_sym(&bad), Err(Error::NonFinite { row: 0, col: 0 }));
    }

    fn random_sym() -> impl Strategy<Value = SymMatrix> {
        (1usize..=9).prop_flat_map(|n| {
            proptest::collection::vec(-10.0f64..10.0, n * n).prop_map(move |vals| {
                let m = Matrix::from_fn(n, n, |i, j| vals[i.min(j) * n + i.max(j)]);
                SymMatrix::new(m).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn reconstruction_and_trace(a in random_sym()) {
            let (spec, v) = eig_sym_vectors(&a).unwrap();
            let n = a.order();
            let lambda = Matrix::from_diagonal(&spec.values);
            let rebuilt = &(&v * &lambda) * &v.transpose();
            let scale = a.as_matrix().max_abs().max(1.0);
            prop_assert!(rebuilt.max_abs_diff(a.as_matrix()) <= 1e-10 * scale);
            let trace: f64 = spec.values.iter().sum();
            prop_assert!((trace - a.as_matrix().trace()).abs() <= 1e-9 * n as f64 * scale);
            prop_assert!(spec.values.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
