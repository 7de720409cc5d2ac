//! Dense matrices over an exact field, generic over the scalar type.
//!
//! The same Gaussian elimination backs matrix inversion over cyclotomic
//! fields and the rational linear solves used for conductor reduction, so the
//! scalar is abstracted behind the num-traits `Zero`/`One` bounds plus the
//! field operators.

use num_traits::{One, Zero};
use std::ops::{Div, Mul, Neg, Sub};

/// Scalar bound for exact Gaussian elimination.
pub trait FieldScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> FieldScalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// Row-major rectangular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Clone + PartialEq + Zero> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<U: Clone + PartialEq + Zero>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }
}

impl<T: Clone + PartialEq + Zero + One + Mul<Output = T>> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::new(n, n, vec![T::zero(); n * n]);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::new(self.rows, other.cols, vec![T::zero(); self.rows * other.cols]);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a.clone() * other[(k, j)].clone();
                    let cur = out[(i, j)].clone();
                    out[(i, j)] = cur + add;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Is `self == c * I` for some scalar `c`?
    pub fn proportional_to_identity(&self) -> Option<T> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { c.clone() } else { T::zero() };
                if self[(i, j)] != want {
                    return None;
                }
            }
        }
        Some(c)
    }
}

impl<T: FieldScalar> Matrix<T> {
    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Matrix<T> = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() / p.clone();
                inv[(col, j)] = inv[(col, j)].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let s = a[(col, j)].clone() * f.clone();
                    a[(r, j)] = a[(r, j)].clone() - s;
                    let s = inv[(col, j)].clone() * f.clone();
                    inv[(r, j)] = inv[(r, j)].clone() - s;
                }
            }
        }
        Some(inv)
    }

    /// Determinant by elimination on a copy.
    pub fn determinant(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return T::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det = det * p.clone();
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone() / p.clone();
                for j in col..n {
                    let s = a[(col, j)].clone() * f.clone();
                    a[(r, j)] = a[(r, j)].clone() - s;
                }
            }
        }
        det
    }

    /// Solve `self * x = rhs` for a (possibly rectangular) system with a
    /// unique-or-no solution; `None` when inconsistent.
    ///
    /// Columns are assumed independent, which holds for the subfield-basis
    /// systems this is used on.
    pub fn solve(&self, rhs: &[T]) -> Option<Vec<T>> {
        assert_eq!(rhs.len(), self.rows);
        let mut a = self.clone();
        let mut b = rhs.to_vec();
        let mut pivot_row_of_col = vec![usize::MAX; self.cols];
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                a.swap_rows(p, row);
                b.swap(p, row);
            }
            let piv = a[(row, col)].clone();
            for j in col..self.cols {
                a[(row, j)] = a[(row, j)].clone() / piv.clone();
            }
            b[row] = b[row].clone() / piv;
            for r in 0..self.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in col..self.cols {
                    let s = a[(row, j)].clone() * f.clone();
                    a[(r, j)] = a[(r, j)].clone() - s;
                }
                let s = b[row].clone() * f;
                b[r] = b[r].clone() - s;
            }
            pivot_row_of_col[col] = row;
            row += 1;
        }
        // Any nonzero rhs entry below the pivot rows means inconsistency.
        for r in row..self.rows {
            if !b[r].is_zero() {
                return None;
            }
        }
        let mut x = vec![T::zero(); self.cols];
        for col in 0..self.cols {
            let pr = pivot_row_of_col[col];
            if pr == usize::MAX {
                return None; // dependent column: callers pass bases only
            }
            x[col] = b[pr].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.entries[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.entries[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> Rat {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_of_rational_matrix() {
        let m = Matrix::from_rows(vec![
            vec![rat(2, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.mul(&m), Matrix::identity(2));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(2, 1), rat(4, 1)],
        ]);
        assert!(m.inverse().is_none());
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn solve_rectangular() {
        // Columns (1,0,1) and (0,1,1); rhs in the span.
        let m = Matrix::from_rows(vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1)],
        ]);
        let x = m.solve(&[rat(3, 1), rat(4, 1), rat(7, 1)]).unwrap();
        assert_eq!(x, vec![rat(3, 1), rat(4, 1)]);
        assert!(m.solve(&[rat(3, 1), rat(4, 1), rat(8, 1)]).is_none());
    }

    #[test]
    fn proportionality_check() {
        let two_i = Matrix::from_rows(vec![
            vec![rat(2, 1), rat(0, 1)],
            vec![rat(0, 1), rat(2, 1)],
        ]);
        assert_eq!(two_i.proportional_to_identity(), Some(rat(2, 1)));
        let m = Matrix::from_rows(vec![
            vec![rat(2, 1), rat(1, 1)],
            vec![rat(0, 1), rat(2, 1)],
        ]);
        assert_eq!(m.proportional_to_identity(), None);
    }
}
