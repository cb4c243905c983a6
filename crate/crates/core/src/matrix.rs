//! Column-oriented matrices of ring elements.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingModel;

/// An `nrows × ncols` matrix stored by columns; a column is the image of a
/// basis vector, so columns are the generators of a submodule of R^nrows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    nrows: usize,
    cols: Vec<Vec<Polynomial>>,
}

impl Matrix {
    pub fn new(nrows: usize, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        if let Some(j) = cols.iter().position(|c| c.len() != nrows) {
            return Err(Error::argument(format!(
                "column {j} has {} entries, expected {nrows}",
                cols[j].len()
            )));
        }
        Ok(Matrix { nrows, cols })
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if let Some(i) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::argument(format!(
                "row {i} has {} entries, expected {ncols}",
                rows[i].len()
            )));
        }
        let mut cols = vec![Vec::with_capacity(nrows); ncols];
        for row in rows {
            for (j, e) in row.into_iter().enumerate() {
                cols[j].push(e);
            }
        }
        Ok(Matrix { nrows, cols })
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            cols: vec![vec![Polynomial::default(); nrows]; ncols],
        }
    }

    pub fn identity(ring: &RingModel, n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.cols[i][i] = ring.poly().one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial>> {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.nrows)
            .map(|i| self.cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|e| e.is_zero()))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            nrows: self.ncols(),
            cols: self.rows(),
        }
    }

    /// Applies `f` to every entry.
    pub fn map(&self, mut f: impl FnMut(&Polynomial) -> Result<Polynomial>) -> Result<Matrix> {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(&mut f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            nrows: self.nrows,
            cols,
        })
    }

    /// Entries reduced modulo the ring's ideal.
    pub fn reduced(&self, ring: &RingModel) -> Result<Matrix> {
        self.map(|e| ring.reduce(e))
    }

    pub fn mul(&self, ring: &RingModel, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.nrows {
            return Err(Error::argument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        let poly = ring.poly();
        let mut cols = Vec::with_capacity(other.ncols());
        for oc in &other.cols {
            let mut col = vec![Polynomial::default(); self.nrows];
            for (k, b) in oc.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (i, a) in self.cols[k].iter().enumerate() {
                    if !a.is_zero() {
                        col[i] = poly.add(&col[i], &poly.mul(a, b));
                    }
                }
            }
            cols.push(
                col.iter()
                    .map(|e| ring.reduce(e))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(Matrix {
            nrows: self.nrows,
            cols,
        })
    }

    /// `self ⊗ 1_u`: entry (i,j) becomes the block `a_ij · 1_u`.
    pub fn kron_identity(&self, u: usize) -> Matrix {
        let mut cols = Vec::with_capacity(self.ncols() * u);
        for c in &self.cols {
            for s in 0..u {
                let mut col = vec![Polynomial::default(); self.nrows * u];
                for (i, e) in c.iter().enumerate() {
                    col[i * u + s] = e.clone();
                }
                cols.push(col);
            }
        }
        Matrix {
            nrows: self.nrows * u,
            cols,
        }
    }

    /// `1_b ⊗ self`: block diagonal with `b` copies.
    pub fn block_diagonal(&self, b: usize) -> Matrix {
        let u = self.nrows;
        let mut cols = Vec::with_capacity(self.ncols() * b);
        for j in 0..b {
            for c in &self.cols {
                let mut col = vec![Polynomial::default(); u * b];
                for (i, e) in c.iter().enumerate() {
                    col[j * u + i] = e.clone();
                }
                cols.push(col);
            }
        }
        Matrix { nrows: u * b, cols }
    }

    /// Places the columns of `other` after those of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.nrows != other.nrows {
            return Err(Error::argument("row count mismatch in hstack"));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(Matrix {
            nrows: self.nrows,
            cols,
        })
    }

    pub fn without_column(&self, j: usize) -> Matrix {
        let mut cols = self.cols.clone();
        cols.remove(j);
        Matrix {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn without_row(&self, i: usize) -> Matrix {
        Matrix {
            nrows: self.nrows - 1,
            cols: self
                .cols
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.remove(i);
                    c
                })
                .collect(),
        }
    }

    /// First entry (column-major scan) that is a nonzero constant.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, e) in c.iter().enumerate() {
                if e.is_unit_constant() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Gaussian elimination on the unit entry (a, b): clears row `a` using
    /// column `b`, then deletes row `a` and column `b`.
    pub fn eliminate_unit(&self, ring: &RingModel, a: usize, b: usize) -> Result<Matrix> {
        let pivot = self.cols[b][a].constant_term();
        debug_assert!(self.cols[b][a].is_unit_constant());
        let poly = ring.poly();
        let field = poly.field();
        let inv = field.neg(field.inv(pivot));
        let pivot_col = &self.cols[b];
        let mut cols = Vec::with_capacity(self.ncols() - 1);
        for (j, c) in self.cols.iter().enumerate() {
            if j == b {
                continue;
            }
            let factor = &c[a];
            let mut col = Vec::with_capacity(self.nrows - 1);
            for (i, e) in c.iter().enumerate() {
                if i == a {
                    continue;
                }
                if factor.is_zero() || pivot_col[i].is_zero() {
                    col.push(e.clone());
                } else {
                    let prod = poly.scale(&poly.mul(factor, &pivot_col[i]), inv);
                    col.push(ring.reduce(&poly.add(e, &prod))?);
                }
            }
            cols.push(col);
        }
        Ok(Matrix {
            nrows: self.nrows - 1,
            cols,
        })
    }

    /// Drops zero columns and repeated columns, keeping first occurrences.
    pub fn compact(&self) -> Matrix {
        let mut cols: Vec<Vec<Polynomial>> = Vec::new();
        for c in &self.cols {
            if c.iter().all(|e| e.is_zero()) || cols.contains(c) {
                continue;
            }
            cols.push(c.clone());
        }
        Matrix {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn render(&self, ring: &RingModel) -> Vec<Vec<String>> {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|e| ring.render(e)).collect())
            .collect()
    }
}
