//! Dense exact matrices over any [`Scalar`] field.

use alloc::vec::Vec;

use super::field::Scalar;
use crate::error::{Error, Result};

/// A dense `rows × cols` matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<E: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Scalar> Mat<E> {
    /// The zero matrix, using `zero` as the template element.
    pub fn zeros(rows: usize, cols: usize, zero: &E) -> Mat<E> {
        Mat {
            rows,
            cols,
            data: (0..rows * cols).map(|_| zero.zero_like()).collect(),
        }
    }

    /// The identity matrix.
    pub fn identity(n: usize, zero: &E) -> Mat<E> {
        let mut m = Self::zeros(n, n, zero);
        for i in 0..n {
            m.data[i * n + i] = zero.one_like();
        }
        m
    }

    /// A diagonal matrix.
    pub fn diagonal(diag: &[E], zero: &E) -> Mat<E> {
        let n = diag.len();
        let mut m = Self::zeros(n, n, zero);
        for (i, x) in diag.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    /// Build from rows.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Mat<E>> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::ShapeMismatch("ragged matrix rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    /// Set entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// True if every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// True if the matrix is diagonal.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Trace.
    pub fn trace(&self, zero: &E) -> E {
        let mut acc = zero.zero_like();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Sum.
    pub fn add(&self, o: &Mat<E>) -> Mat<E> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    /// Difference.
    pub fn sub(&self, o: &Mat<E>) -> Mat<E> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    /// Multiply every entry by `s`.
    pub fn scale(&self, s: &E) -> Mat<E> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    /// Product, skipping zero entries of the left factor.
    pub fn mul(&self, o: &Mat<E>) -> Mat<E> {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let zero = self.data.first().or(o.data.first());
        let Some(zero) = zero else {
            return Mat {
                rows: self.rows,
                cols: o.cols,
                data: Vec::new(),
            };
        };
        let mut out = Self::zeros(self.rows, o.cols, zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    /// Multiply on the right by a diagonal matrix given by its entries.
    pub fn mul_diag(&self, diag: &[E]) -> Mat<E> {
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let idx = i * self.cols + j;
                if !out.data[idx].is_zero() {
                    out.data[idx] = out.data[idx].mul(&diag[j]);
                }
            }
        }
        out
    }

    /// Multiply on the left by a diagonal matrix given by its entries.
    pub fn diag_mul(diag: &[E], m: &Mat<E>) -> Mat<E> {
        let mut out = m.clone();
        for i in 0..m.rows {
            for j in 0..m.cols {
                let idx = i * m.cols + j;
                if !out.data[idx].is_zero() {
                    out.data[idx] = out.data[idx].mul(&diag[i]);
                }
            }
        }
        out
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if piv != r {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let idx = r * self.cols + j;
                self.data[idx] = self.data[idx].mul(&inv);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let t = f.mul(self.get(r, j));
                    let idx = i * self.cols + j;
                    self.data[idx] = self.data[idx].sub(&t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<E> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let Some(first) = self.data.first() else {
            return Err(Error::ShapeMismatch("determinant of an empty matrix".into()));
        };
        let n = self.rows;
        let mut m = self.clone();
        let mut det = first.one_like();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(first.zero_like());
            };
            if piv != c {
                for j in 0..n {
                    m.data.swap(piv * n + j, c * n + j);
                }
                det = det.neg();
            }
            let pv = m.get(c, c).clone();
            det = det.mul(&pv);
            let inv = pv.inv()?;
            for i in (c + 1)..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).mul(&inv);
                for j in c..n {
                    let t = f.mul(m.get(c, j));
                    let idx = i * n + j;
                    m.data[idx] = m.data[idx].sub(&t);
                }
            }
        }
        Ok(det)
    }

    /// Solve `self · x = rhs` for a square nonsingular system.
    pub fn solve(&self, rhs: &[E]) -> Result<Vec<E>> {
        if self.rows != self.cols || rhs.len() != self.rows {
            return Err(Error::ShapeMismatch("solve needs a square system".into()));
        }
        match self.solve_general(rhs)? {
            Some((x, true)) => Ok(x),
            Some((_, false)) => Err(Error::Invalid("singular linear system".into())),
            None => Err(Error::InputData("inconsistent linear system".into())),
        }
    }

    /// Solve `self · x = rhs` in general.  Returns `None` if inconsistent,
    /// otherwise one solution (free variables set to zero) and a flag telling
    /// whether the solution is unique.
    pub fn solve_general(&self, rhs: &[E]) -> Result<Option<(Vec<E>, bool)>> {
        if rhs.len() != self.rows {
            return Err(Error::ShapeMismatch("right-hand side length".into()));
        }
        let Some(zero) = self.data.first().or(rhs.first()) else {
            return Ok(Some((Vec::new(), true)));
        };
        let zero = zero.zero_like();
        let mut aug = Self::zeros(self.rows, self.cols + 1, &zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x: Vec<E> = (0..self.cols).map(|_| zero.clone()).collect();
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Ok(Some((x, pivots.len() == self.cols)))
    }
}
