//! Dense matrices and exact elimination over a finite field.
//!
//! Small and boring on purpose: everything here is Gaussian elimination at
//! desk scale. Canonical outputs (reduced row echelon form, kernel bases)
//! are what make downstream certificates reproducible.

use crate::gf::{Field, FieldElement};
use crate::{Error, Result};

/// Row-major matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(rows_data: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let rows = rows_data.len();
        let cols = rows_data.first().map(|r| r.len()).unwrap_or(0);
        if rows_data.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: rows_data.iter().map(|r| r.len()).find(|&l| l != cols).unwrap(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            data: rows_data.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElement {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix, field: &Field) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(field, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = field.mul(a, b);
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = field.add(&cur, &prod);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement], field: &Field) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = field.add(&acc, &field.mul(a, &v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &FieldElement, field: &Field) -> Matrix {
        let mut out = self.clone();
        for e in out.data.iter_mut() {
            *e = field.mul(e, c);
        }
        out
    }

    pub fn is_identity(&self, field: &Field) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        *self.at(i, j) == field.one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = field.inv(self.at(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = field.mul(self.at(r, j), &inv);
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let factor = self.at(i, c).clone();
                for j in c..self.cols {
                    let sub = field.mul(&factor, self.at(r, j));
                    let v = field.sub(self.at(i, j), &sub);
                    *self.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Inverse by Gauss-Jordan; `None` when singular.
    pub fn inverse(&self, field: &Field) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = field.one();
        }
        let pivots = aug.rref(field);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Matrix::zero(field, n, n);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(out)
    }

    /// Canonical basis of the right kernel: the kernel vectors, stacked as
    /// rows, are themselves in reduced row echelon form.
    pub fn kernel_basis(&self, field: &Field) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![field.zero(); self.cols];
            vec[free] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                if pc < free {
                    vec[pc] = field.neg(m.at(r, free));
                }
            }
            basis.push(vec);
        }
        if basis.is_empty() {
            return basis;
        }
        // normalize to reduced echelon shape for a canonical answer
        let mut stacked = Matrix::from_rows(basis).expect("uniform rows");
        stacked.rref(field);
        (0..stacked.rows)
            .map(|i| stacked.row(i).to_vec())
            .filter(|row| row.iter().any(|e| !e.is_zero()))
            .collect()
    }

    /// True when every row has at most one nonzero entry (a monomial matrix
    /// once invertibility is known).
    pub fn is_monomial(&self) -> bool {
        (0..self.rows).all(|i| self.row(i).iter().filter(|e| !e.is_zero()).count() <= 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn inverse_round_trip() {
        let f = f7();
        let m = Matrix::from_rows(vec![
            vec![f.from_u32(1), f.from_u32(2)],
            vec![f.from_u32(3), f.from_u32(4)],
        ])
        .unwrap();
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&inv, &f).is_identity(&f));
        assert!(inv.mul(&m, &f).is_identity(&f));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let f = f7();
        let m = Matrix::from_rows(vec![
            vec![f.from_u32(1), f.from_u32(2)],
            vec![f.from_u32(2), f.from_u32(4)],
        ])
        .unwrap();
        assert!(m.inverse(&f).is_none());
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn kernel_is_echelon_and_annihilates() {
        let f = f7();
        let m = Matrix::from_rows(vec![vec![f.from_u32(1), f.from_u32(1), f.from_u32(0)]])
            .unwrap();
        let kb = m.kernel_basis(&f);
        assert_eq!(kb.len(), 2);
        for v in &kb {
            let out = m.mul_vec(v, &f);
            assert!(out.iter().all(|e| e.is_zero()));
        }
        // echelon: leading entries are 1 and appear left to right
        assert_eq!(kb[0][0], f.one());
        assert!(kb[1][0].is_zero());
    }
}
