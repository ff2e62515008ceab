//! Compound and additive compound matrices.
//!
//! Both are indexed by the `k`-subsets of the row/column indices in
//! lexicographic order. The additive compound `Δ_k(A)` is the derivative of
//! `C_k(I + tA)` at `t = 0`; it is assembled here from its closed form, and
//! [`numeric_derivative_compound`] keeps the derivative definition around as a
//! reference.

use std::collections::HashMap;

use super::Matrix;
use crate::error::{Error, Result};

/// All `k`-subsets of `{0, …, n-1}` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSubsetIndex {
    n: usize,
    k: usize,
    sets: Vec<Vec<usize>>,
    position: HashMap<Vec<usize>, usize>,
}

impl KSubsetIndex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Position of a sorted subset.
    pub fn position(&self, set: &[usize]) -> Option<usize> {
        self.position.get(set).copied()
    }
}

pub fn ksubsets_lex(n: usize, k: usize) -> Result<KSubsetIndex> {
    check_k(n, k)?;
    let mut sets = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        sets.push(current.clone());
        // rightmost slot that can still advance
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
    let position = sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    Ok(KSubsetIndex { n, k, sets, position })
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={n}")));
    }
    Ok(())
}

fn check_square(a: &Matrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    Ok(a.rows())
}

/// `C_k(A)`: entry `(i, j)` is the minor on rows `S_i` and columns `S_j`.
pub fn compound(a: &Matrix, k: usize) -> Result<Matrix> {
    let n = check_square(a)?;
    let index = ksubsets_lex(n, k)?;
    let sets = index.sets();
    Ok(Matrix::from_fn(sets.len(), sets.len(), |i, j| {
        a.submatrix(&sets[i], &sets[j]).determinant()
    }))
}

/// `Δ_k(A)` from the closed form: diagonal entries sum `A[v][v]` over `S_i`;
/// when `S_i` and `S_j` differ in one element (`r ∈ S_i`, `c ∈ S_j`) the entry
/// is `(-1)^(pos(r, S_i) + pos(c, S_j)) A[r][c]`; everything else is zero.
pub fn additive_compound(a: &Matrix, k: usize) -> Result<Matrix> {
    let n = check_square(a)?;
    let index = ksubsets_lex(n, k)?;
    let size = index.len();
    let mut out = Matrix::zeros(size, size);
    let mut swapped = Vec::with_capacity(k);
    for (i, set) in index.sets().iter().enumerate() {
        out[(i, i)] = set.iter().map(|&v| a[(v, v)]).sum();
        for (pos_r, &r) in set.iter().enumerate() {
            for c in (0..n).filter(|c| !set.contains(c)) {
                let value = a[(r, c)];
                if value == 0.0 {
                    continue;
                }
                swapped.clear();
                swapped.extend(set.iter().copied().filter(|&v| v != r));
                let pos_c = swapped.partition_point(|&v| v < c);
                swapped.insert(pos_c, c);
                let j = index.position(&swapped).expect("k-subset present in index");
                let sign = if (pos_r + pos_c) % 2 == 0 { 1.0 } else { -1.0 };
                out[(i, j)] = sign * value;
            }
        }
    }
    Ok(out)
}

/// Forward difference `(C_k(I + tA) - C_k(I)) / t`.
pub fn numeric_derivative_compound(a: &Matrix, k: usize, t: f64) -> Result<Matrix> {
    let n = check_square(a)?;
    if t == 0.0 {
        return Err(Error::InvalidParameter("step t must be non-zero".into()));
    }
    let identity = Matrix::identity(n);
    let shifted = &identity + &a.scale(t);
    let base = compound(&identity, k)?;
    Ok((&compound(&shifted, k)? - &base).scale(1.0 / t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn lexicographic_subsets() {
        let idx = ksubsets_lex(4, 2).unwrap();
        let one_based: Vec<Vec<usize>> =
            idx.sets().iter().map(|s| s.iter().map(|v| v + 1).collect()).collect();
        assert_eq!(
            one_based,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(ksubsets_lex(3, 3).unwrap().sets(), &[vec![0, 1, 2]]);
        assert_eq!(ksubsets_lex(5, 2).unwrap().len(), 10);
        assert_eq!(idx.position(&[1, 3]), Some(4));
        assert!(ksubsets_lex(3, 0).is_err());
        assert!(ksubsets_lex(3, 4).is_err());
    }

    #[test]
    fn compound_edge_cases() {
        let a = m(&[&[1.0, 2.0, 0.5], &[-1.0, 3.0, 2.0], &[4.0, 0.0, 1.0]]);
        assert_eq!(compound(&a, 1).unwrap(), a);
        let top = compound(&a, 3).unwrap();
        assert_eq!((top.rows(), top.cols()), (1, 1));
        assert!((top[(0, 0)] - a.determinant()).abs() < 1e-12);
        let d = Matrix::from_diagonal(&[2.0, 3.0, 5.0]);
        assert_eq!(compound(&d, 2).unwrap(), Matrix::from_diagonal(&[6.0, 10.0, 15.0]));
        assert!(compound(&a, 4).is_err());
    }

    #[test]
    fn additive_compound_edge_cases() {
        let a = m(&[&[1.0, 2.0, 0.5], &[-1.0, 3.0, 2.0], &[4.0, 0.0, 1.0]]);
        assert_eq!(additive_compound(&a, 1).unwrap(), a);
        let d = Matrix::from_diagonal(&[2.0, 3.0, 5.0]);
        assert_eq!(additive_compound(&d, 2).unwrap(), Matrix::from_diagonal(&[5.0, 7.0, 8.0]));
        assert_eq!(additive_compound(&a, 3).unwrap()[(0, 0)], a.trace());
    }

    #[test]
    fn quotient_matrix_second_additive_compound() {
        // a = 5: [[3,1,0],[2,a,a-2],[0,1,1]] -> [[a+3,a-2,0],[1,4,1],[0,2,a+1]]
        let q = m(&[&[3.0, 1.0, 0.0], &[2.0, 5.0, 3.0], &[0.0, 1.0, 1.0]]);
        let expected = m(&[&[8.0, 3.0, 0.0], &[1.0, 4.0, 1.0], &[0.0, 2.0, 6.0]]);
        assert_eq!(additive_compound(&q, 2).unwrap(), expected);
    }

    #[test]
    fn numeric_derivative_basics() {
        let a = m(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let d1 = numeric_derivative_compound(&a, 1, 0.37).unwrap();
        assert!(d1.max_abs_diff(&a) < 1e-12);
        let z = numeric_derivative_compound(&Matrix::zeros(3, 3), 2, 1e-3).unwrap();
        assert_eq!(z.max_abs(), 0.0);
        assert!(numeric_derivative_compound(&a, 1, 0.0).is_err());
    }
}
