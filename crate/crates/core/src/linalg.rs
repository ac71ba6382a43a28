//! Dense matrices and subspaces over an exact [`Field`].
//!
//! Elimination is plain Gauss-Jordan with a fixed pivot rule (first
//! nonzero entry, scanning columns left to right and rows top to bottom),
//! so every result is deterministic and in reduced row-echelon form.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::validation(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds from integer entries given row by row.
    pub fn from_int_rows(field: F, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::validation("ragged rows"));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| field.int(v)))
            .collect();
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::validation("ragged rows"));
        }
        let n_rows = rows.len();
        Matrix::new(field, n_rows, cols, rows.into_iter().flatten().collect())
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.field.is_zero(self.get(i, j)))
    }

    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&j| self.is_zero_column(j)).collect()
    }

    /// Submatrix formed by the columns in `cols`, in increasing order.
    pub fn select_columns(&self, cols: Subset) -> Matrix<F> {
        let idx = cols.to_vec();
        let data = (0..self.rows)
            .flat_map(|i| idx.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| {
                        self.field.add(&acc, &self.field.mul(a, b))
                    })
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let data = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| self.get(i, j).clone()))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Reduced row-echelon form and its pivot columns. Zero rows are kept
    /// at the bottom.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{y : A y = 0}` as a canonical subspace of `K^cols`.
    pub fn kernel(&self) -> RelationSpace<F> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let generators = free
            .iter()
            .map(|&j| {
                let mut v = vec![f.zero(); self.cols];
                v[j] = f.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(r.get(i, j));
                }
                v
            })
            .collect();
        RelationSpace::from_generators(f.clone(), self.cols, generators)
    }
}

/// A subspace of `K^n`, stored as the nonzero rows of a reduced
/// row-echelon basis. Equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationSpace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> RelationSpace<F> {
    pub fn from_generators(field: F, ambient: usize, generators: Vec<Vec<F::Elem>>) -> Self {
        if generators.is_empty() {
            return RelationSpace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field.clone(), ambient, generators).expect("generator length");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        RelationSpace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(field: F, ambient: usize) -> Self {
        RelationSpace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(field: F, ambient: usize) -> Self {
        let id = Matrix::identity(field.clone(), ambient);
        RelationSpace {
            field,
            ambient,
            basis: (0..ambient).map(|i| id.row(i).to_vec()).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        let mut rest = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&rest[p]) {
                continue;
            }
            let factor = rest[p].clone();
            for (x, b) in rest.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&factor, b));
            }
        }
        rest.iter().all(|x| f.is_zero(x))
    }

    pub fn is_subspace_of(&self, other: &RelationSpace<F>) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// Basis vectors as the rows of a matrix.
    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.field.clone(), self.ambient, self.basis.clone())
            .expect("basis rows have ambient length")
    }

    /// `{x : <x, v> = 0 for all v in self}` under the coordinate pairing.
    pub fn orthogonal_complement(&self) -> RelationSpace<F> {
        if self.basis.is_empty() {
            return RelationSpace::whole(self.field.clone(), self.ambient);
        }
        self.to_matrix().kernel()
    }
}
