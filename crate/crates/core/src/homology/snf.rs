//! Smith normal form over the integers.
//!
//! Elimination always pivots on a nonzero entry of least absolute value in
//! the remaining block, which keeps entry growth small; every update is
//! checked and overflow surfaces as [`Error::Overflow`].

use serde::Serialize;

use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};

/// Unimodular `left` and `right` with `left * M * right = diag`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transforms {
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
    pub right_inverse: IntegerMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    /// Nonzero invariant factors, each dividing the next.
    pub diagonal: Vec<i128>,
    pub rank: usize,
    #[serde(skip)]
    pub transforms: Option<Transforms>,
}

impl SmithForm {
    /// The `rows x cols` diagonal matrix `left * M * right`.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(rows, cols);
        for (i, &x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x;
        }
        d
    }
}

struct Reduction {
    a: IntegerMatrix,
    t: Option<Transforms>,
}

impl Reduction {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(t) = &mut self.t {
            t.left.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(t) = &mut self.t {
            t.right.swap_cols(i, j);
            t.right_inverse.swap_rows(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, k: i128) -> Result<()> {
        self.a.add_row(dst, src, k)?;
        if let Some(t) = &mut self.t {
            t.left.add_row(dst, src, k)?;
        }
        Ok(())
    }

    fn add_col(&mut self, dst: usize, src: usize, k: i128) -> Result<()> {
        self.a.add_col(dst, src, k)?;
        if let Some(t) = &mut self.t {
            t.right.add_col(dst, src, k)?;
            let neg = k
                .checked_neg()
                .ok_or(Error::Overflow("smith normal form"))?;
            t.right_inverse.add_row(src, dst, neg)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        self.a.negate_row(i)?;
        if let Some(t) = &mut self.t {
            t.left.negate_row(i)?;
        }
        Ok(())
    }

    /// A nonzero entry of least absolute value in the block `from..`,
    /// preferring the sparsest row and column among ties.
    fn min_pivot(&self, from: usize) -> Option<(usize, usize)> {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let row_fill: Vec<usize> = (0..rows)
            .map(|i| (from..cols).filter(|&j| self.a[(i, j)] != 0).count())
            .collect();
        let col_fill: Vec<usize> = (0..cols)
            .map(|j| (from..rows).filter(|&i| self.a[(i, j)] != 0).count())
            .collect();
        (from..rows)
            .flat_map(|i| (from..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| self.a[(i, j)] != 0)
            .min_by_key(|&(i, j)| {
                (
                    self.a[(i, j)].unsigned_abs(),
                    (row_fill[i] - 1) * (col_fill[j] - 1),
                )
            })
    }

    /// Clears row and column `t` outside the pivot, reducing each entry to
    /// its remainder of least absolute value. Returns `false` if a nonzero
    /// remainder was left behind.
    fn clear_cross(&mut self, t: usize) -> Result<bool> {
        let p = self.a[(t, t)];
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            let x = self.a[(i, t)];
            if x != 0 {
                self.add_row(i, t, -nearest_quotient(x, p))?;
                clean &= self.a[(i, t)] == 0;
            }
        }
        for j in t + 1..self.a.cols() {
            let x = self.a[(t, j)];
            if x != 0 {
                self.add_col(j, t, -nearest_quotient(x, p))?;
                clean &= self.a[(t, j)] == 0;
            }
        }
        Ok(clean)
    }

    fn non_dividing_row(&self, t: usize) -> Option<usize> {
        let p = self.a[(t, t)];
        (t + 1..self.a.rows()).find(|&i| (t + 1..self.a.cols()).any(|j| self.a[(i, j)] % p != 0))
    }

    fn run(mut self) -> Result<SmithForm> {
        let steps = self.a.rows().min(self.a.cols());
        let mut diagonal = Vec::new();
        for t in 0..steps {
            loop {
                let Some((i, j)) = self.min_pivot(t) else {
                    return Ok(self.finish(diagonal));
                };
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                if !self.clear_cross(t)? {
                    continue;
                }
                match self.non_dividing_row(t) {
                    Some(i) => self.add_row(t, i, 1)?,
                    None => break,
                }
            }
            if self.a[(t, t)] < 0 {
                self.negate_row(t)?;
            }
            diagonal.push(self.a[(t, t)]);
        }
        Ok(self.finish(diagonal))
    }

    fn finish(self, diagonal: Vec<i128>) -> SmithForm {
        SmithForm {
            rank: diagonal.len(),
            diagonal,
            transforms: self.t,
        }
    }
}

/// `round(x / p)`, so that `x - q * p` has the least absolute value.
fn nearest_quotient(x: i128, p: i128) -> i128 {
    let q = x / p;
    let r = x - q * p;
    if 2 * r.unsigned_abs() > p.unsigned_abs() {
        q + if (r < 0) == (p < 0) { 1 } else { -1 }
    } else {
        q
    }
}

/// Invariant factors and rank of `m`.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<SmithForm> {
    Reduction {
        a: m.clone(),
        t: None,
    }
    .run()
}

/// As [`smith_normal_form`], also returning the unimodular transforms.
pub fn smith_normal_form_with_transforms(m: &IntegerMatrix) -> Result<SmithForm> {
    Reduction {
        a: m.clone(),
        t: Some(Transforms {
            left: IntegerMatrix::identity(m.rows()),
            right: IntegerMatrix::identity(m.cols()),
            right_inverse: IntegerMatrix::identity(m.cols()),
        }),
    }
    .run()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_transforms(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form_with_transforms(m).unwrap();
        let t = s.transforms.as_ref().unwrap();
        let prod = t
            .left
            .checked_mul(m)
            .unwrap()
            .checked_mul(&t.right)
            .unwrap();
        assert_eq!(prod, s.diagonal_matrix(m.rows(), m.cols()));
        assert_eq!(
            t.right.checked_mul(&t.right_inverse).unwrap(),
            IntegerMatrix::identity(m.cols())
        );
        for w in s.diagonal.windows(2) {
            assert_eq!(w[1] % w[0], 0, "{:?}", s.diagonal);
        }
        assert!(s.diagonal.iter().all(|&d| d > 0));
        s
    }

    #[test]
    fn two_by_two() {
        // Hand elimination: gcd of entries is 2, determinant is -8.
        let m = IntegerMatrix::from_rows(&[[2, 4], [6, 8]]);
        let s = check_transforms(&m);
        assert_eq!(s.diagonal, vec![2, 4]);
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn zero_and_identity() {
        let s = check_transforms(&IntegerMatrix::zeros(3, 3));
        assert!(s.diagonal.is_empty());
        assert_eq!(s.rank, 0);
        let s = check_transforms(&IntegerMatrix::identity(4));
        assert_eq!(s.diagonal, vec![1, 1, 1, 1]);
        assert_eq!(s.rank, 4);
    }

    #[test]
    fn diag_two_three_merges_to_six() {
        let m = IntegerMatrix::from_rows(&[[2, 0], [0, 3]]);
        assert_eq!(check_transforms(&m).diagonal, vec![1, 6]);
    }

    #[test]
    fn rectangular_and_empty() {
        let m = IntegerMatrix::from_rows(&[[0, 0, 4], [0, 6, 0]]);
        assert_eq!(check_transforms(&m).diagonal, vec![2, 12]);
        let m = IntegerMatrix::from_rows(&[[1, -1], [1, -1], [-1, 1]]);
        assert_eq!(check_transforms(&m).rank, 1);
        let empty = IntegerMatrix::zeros(0, 3);
        assert_eq!(check_transforms(&empty).rank, 0);
    }

    #[test]
    fn overflow_is_an_error() {
        let m = IntegerMatrix::new(1, 2, vec![i128::MIN, 0]).unwrap();
        assert!(matches!(smith_normal_form(&m), Err(Error::Overflow(_))));
    }
}
