//! Dense rational matrices, index sets, and submatrix extraction.
//!
//! All public indices are 1-based. A matrix may have zero rows or columns; the
//! 0×0 matrix stands in for empty complementary minors and has determinant 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {} has {} entries, expected {cols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Matrix::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Integer-entry convenience constructor. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .expect("ragged integer rows")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    /// Builds a matrix from a 1-based entry function.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&Scalar> {
        check_index(i, self.rows)?;
        check_index(j, self.cols)?;
        Ok(&self.entries[(i - 1) * self.cols + (j - 1)])
    }

    /// 1-based entry access. Panics when out of range.
    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "({i},{j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub(crate) fn raw(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Result<Vec<Scalar>> {
        check_index(i, self.rows)?;
        let start = (i - 1) * self.cols;
        Ok(self.entries[start..start + self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Result<Vec<Scalar>> {
        check_index(j, self.cols)?;
        Ok((0..self.rows).map(|i| self.raw(i, j - 1).clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn swap_rows(&self, a: usize, b: usize) -> Result<Matrix> {
        check_index(a, self.rows)?;
        check_index(b, self.rows)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            let src = if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            };
            self.at(src, j).clone()
        }))
    }

    pub fn scale_row(&self, row: usize, factor: &Scalar) -> Result<Matrix> {
        check_index(row, self.rows)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            if i == row {
                self.at(i, j) * factor
            } else {
                self.at(i, j).clone()
            }
        }))
    }

    pub fn scale(&self, factor: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    /// Rows as vectors, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries.chunks(self.cols).map(<[Scalar]>::to_vec).collect()
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

pub(crate) fn check_index(index: usize, bound: usize) -> Result<()> {
    if (1..=bound).contains(&index) {
        Ok(())
    } else {
        Err(Error::Bounds { index, bound })
    }
}

/// A strictly increasing list of 1-based indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::Domain("indices are 1-based; 0 is not allowed".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!(
                "index set {indices:?} is not strictly increasing"
            )));
        }
        Ok(IndexSet(indices))
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn check_within(&self, bound: usize) -> Result<()> {
        match self.0.last() {
            Some(&last) if last > bound => Err(Error::Bounds { index: last, bound }),
            _ => Ok(()),
        }
    }

    /// The indices of `1..=n` not in this set.
    pub fn complement(&self, n: usize) -> IndexSet {
        IndexSet((1..=n).filter(|&i| !self.contains(i)).collect())
    }
}

impl TryFrom<Vec<usize>> for IndexSet {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        IndexSet::new(v)
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Removes the listed rows and columns, keeping the survivors in their
/// original relative order.
pub fn submatrix_delete(a: &Matrix, rows: &IndexSet, cols: &IndexSet) -> Result<Matrix> {
    rows.check_within(a.rows)?;
    cols.check_within(a.cols)?;
    let keep_rows = rows.complement(a.rows);
    let keep_cols = cols.complement(a.cols);
    let mut entries = Vec::with_capacity(keep_rows.len() * keep_cols.len());
    for i in keep_rows.iter() {
        for j in keep_cols.iter() {
            entries.push(a.raw(i - 1, j - 1).clone());
        }
    }
    Matrix::new(keep_rows.len(), keep_cols.len(), entries)
}

/// Appends `vectors` to the right of `m`, in order.
pub fn augment_columns(m: &Matrix, vectors: &[Vec<Scalar>]) -> Result<Matrix> {
    if let Some((k, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != m.rows) {
        return Err(Error::Dimension(format!(
            "column vector {} has length {}, matrix has {} rows",
            k + 1,
            v.len(),
            m.rows
        )));
    }
    let cols = m.cols + vectors.len();
    let mut entries = Vec::with_capacity(m.rows * cols);
    for i in 0..m.rows {
        entries.extend((0..m.cols).map(|j| m.raw(i, j).clone()));
        entries.extend(vectors.iter().map(|v| v[i].clone()));
    }
    Matrix::new(m.rows, cols, entries)
}
