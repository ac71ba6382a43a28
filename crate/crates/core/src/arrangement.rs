//! Linear arrangements given by the columns of a matrix: their matroids,
//! relation spaces and formality.
//!
//! Column `i` of an `r × n` matrix is the functional `α_i` of hyperplane
//! `i`. The relation space is `ker Φ = {y : Σ y_i α_i = 0}`, the null space
//! of the matrix. It is *formal* when `ker Φ` is spanned by relations with
//! at most three nonzero entries.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::linalg::{Matrix, RelationSpace};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Null space of the matrix, i.e. all linear relations among its columns.
pub fn kernel_basis<F: Field>(a: &Matrix<F>) -> RelationSpace<F> {
    a.kernel()
}

/// The matroid whose bases are the maximal sets of linearly independent columns.
pub fn column_matroid<F: Field>(a: &Matrix<F>) -> Matroid {
    let n = a.cols();
    let r = a.rank();
    let bases: Vec<Subset> = Subset::full(n)
        .k_subsets(r)
        .filter(|&b| a.select_columns(b).rank() == r)
        .collect();
    Matroid::from_sorted_bases(n, bases)
}

pub fn realizes<F: Field>(a: &Matrix<F>, m: &Matroid) -> Result<bool> {
    if a.cols() != m.ground_size() {
        return Err(Error::GroundSetMismatch {
            left: a.cols(),
            right: m.ground_size(),
        });
    }
    Ok(column_matroid(a) == *m)
}

fn embed<F: Field>(field: &F, n: usize, support: Subset, local: &[F::Elem]) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); n];
    for (slot, j) in support.iter().enumerate() {
        v[j] = local[slot].clone();
    }
    v
}

/// The subspace `F ⊆ ker Φ` spanned by relations of weight at most three.
///
/// Every such relation is supported inside some 3-set of columns, so `F`
/// is the span of the null spaces of all column triples (only dependent
/// triples contribute).
pub fn weight3_subspace<F: Field>(a: &Matrix<F>) -> RelationSpace<F> {
    let n = a.cols();
    let field = a.field();
    if n <= 3 {
        return a.kernel();
    }
    let mut generators = Vec::new();
    for triple in Subset::full(n).k_subsets(3) {
        let sub = a.select_columns(triple);
        if sub.rank() == 3 {
            continue;
        }
        for local in sub.kernel().basis() {
            generators.push(embed(field, n, triple, local));
        }
    }
    RelationSpace::from_generators(field.clone(), n, generators)
}

pub fn is_formal<F: Field>(a: &Matrix<F>) -> bool {
    weight3_subspace(a).dim() == a.kernel().dim()
}

/// Rows spanning `F^⊥`, where `F` is the weight-≤3 relation space. Column
/// `i` is the functional of the `i`-th hyperplane of the formalization.
pub fn formalization<F: Field>(a: &Matrix<F>) -> Result<Matrix<F>> {
    if let Some(&column) = a.zero_columns().first() {
        return Err(Error::ZeroFunctional { column });
    }
    let f = weight3_subspace(a);
    Ok(f.orthogonal_complement().to_matrix())
}

/// Dimensions reported by the `formality` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalityReport {
    pub hyperplanes: usize,
    pub kernel_dim: usize,
    pub weight3_dim: usize,
    pub rank: usize,
    pub formalization_rank: usize,
    pub formal: bool,
}

pub fn formality_report<F: Field>(a: &Matrix<F>) -> Result<FormalityReport> {
    let g = formalization(a)?;
    let kernel_dim = a.kernel().dim();
    let weight3_dim = weight3_subspace(a).dim();
    Ok(FormalityReport {
        hyperplanes: a.cols(),
        kernel_dim,
        weight3_dim,
        rank: a.rank(),
        formalization_rank: g.rank(),
        formal: kernel_dim == weight3_dim,
    })
}

/// A matrix over either supported field, as read from a matrix file.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactMatrix {
    Rational(Matrix<Rationals>),
    Prime(Matrix<PrimeField>),
}

macro_rules! dispatch {
    ($self:expr, $m:ident => $body:expr) => {
        match $self {
            ExactMatrix::Rational($m) => $body,
            ExactMatrix::Prime($m) => $body,
        }
    };
}

impl ExactMatrix {
    pub fn rows(&self) -> usize {
        dispatch!(self, m => m.rows())
    }

    pub fn cols(&self) -> usize {
        dispatch!(self, m => m.cols())
    }

    pub fn rank(&self) -> usize {
        dispatch!(self, m => m.rank())
    }

    /// `0` for the rationals.
    pub fn characteristic(&self) -> u32 {
        dispatch!(self, m => m.field().characteristic())
    }

    pub fn zero_columns(&self) -> Vec<usize> {
        dispatch!(self, m => m.zero_columns())
    }

    pub fn kernel_dim(&self) -> usize {
        dispatch!(self, m => m.kernel().dim())
    }

    pub fn weight3_dim(&self) -> usize {
        dispatch!(self, m => weight3_subspace(m).dim())
    }

    pub fn column_matroid(&self) -> Matroid {
        dispatch!(self, m => column_matroid(m))
    }

    pub fn realizes(&self, matroid: &Matroid) -> Result<bool> {
        dispatch!(self, m => realizes(m, matroid))
    }

    pub fn is_formal(&self) -> bool {
        dispatch!(self, m => is_formal(m))
    }

    pub fn formalization(&self) -> Result<ExactMatrix> {
        Ok(match self {
            ExactMatrix::Rational(m) => ExactMatrix::Rational(formalization(m)?),
            ExactMatrix::Prime(m) => ExactMatrix::Prime(formalization(m)?),
        })
    }

    pub fn formality_report(&self) -> Result<FormalityReport> {
        dispatch!(self, m => formality_report(m))
    }

    /// Entries as display strings, row by row.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        dispatch!(self, m => (0..m.rows())
            .map(|i| m.row(i).iter().map(|x| m.field().render(x)).collect())
            .collect())
    }
}

impl From<Matrix<Rationals>> for ExactMatrix {
    fn from(m: Matrix<Rationals>) -> Self {
        ExactMatrix::Rational(m)
    }
}

impl From<Matrix<PrimeField>> for ExactMatrix {
    fn from(m: Matrix<PrimeField>) -> Self {
        ExactMatrix::Prime(m)
    }
}
