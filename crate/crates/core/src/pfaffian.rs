//! Antisymmetric matrices, Pfaffians, and the Pfaffian form of a determinant.
//!
//! A determinant of an n×n matrix `A` is the Pfaffian over the labels
//! `(1, …, n, n*, …, 1*)` with pairings `(i, j) = (i*, j*) = 0` and
//! `(i, j*) = −(j*, i) = a_ij`. Removing labels from that list gives the
//! minors: `{i, j*}` yields `M_ij` and `{i, j, i*, j*}` yields the
//! doubly-deleted minor. Both come out unsigned, with no extra sign factor,
//! for every `i`, `j` (checked against cofactor expansion in the tests).

use std::collections::HashMap;
use std::fmt;

use crate::det::{complementary_minor, det_bareiss, first_minor};
use crate::error::{Error, Result};
use crate::matrix::{check_index, IndexSet, Matrix};
use crate::scalar::Scalar;

/// An even-order matrix with `Aᵀ = −A`, stored as its strict upper triangle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AntisymmetricMatrix {
    order: usize,
    upper: Vec<Scalar>,
}

impl AntisymmetricMatrix {
    /// `upper` lists `a_ij` for `i < j` in row-major order.
    pub fn from_upper(order: usize, upper: Vec<Scalar>) -> Result<Self> {
        if !order.is_multiple_of(2) {
            return Err(Error::Domain(format!("antisymmetric order {order} is odd")));
        }
        let expected = order * order.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(Error::Dimension(format!(
                "order {order} needs {expected} upper entries, got {}",
                upper.len()
            )));
        }
        Ok(AntisymmetricMatrix { order, upper })
    }

    /// Validates `a` entry by entry; reports the first row-major violation.
    pub fn from_matrix(a: &Matrix) -> Result<Self> {
        let n = a.require_square()?;
        for i in 1..=n {
            for j in 1..=n {
                if a.at(i, j) != &-a.at(j, i) {
                    return Err(Error::NotAntisymmetric { row: i, col: j });
                }
            }
        }
        let upper = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| a.at(i, j).clone())
            .collect();
        AntisymmetricMatrix::from_upper(n, upper)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// 1-based entry. Panics when out of range.
    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        assert!(i >= 1 && j >= 1 && i <= self.order && j <= self.order);
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Scalar::zero(),
            std::cmp::Ordering::Less => self.upper[self.offset(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.upper[self.offset(j, i)],
        }
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.order - (i - 1) * i / 2 + (j - i - 1)
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.order, self.order, |i, j| self.entry(i, j))
    }

    /// The matrix with rows and columns 1 and 2 removed, which is again
    /// antisymmetric, of order two less.
    pub fn delete_leading_pair(&self) -> Result<Self> {
        if self.order < 2 {
            return Err(Error::Dimension("order 0 has no leading pair".into()));
        }
        let n = self.order;
        let upper = (3..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| self.entry(i, j))
            .collect();
        AntisymmetricMatrix::from_upper(n - 2, upper)
    }
}

/// Expands along the first surviving index, memoizing on the surviving set:
/// `Pf(S) = Σ_p (−1)^p · e(s_1, s_p) · Pf(S ∖ {s_1, s_p})`, `p = 2, …, |S|`.
fn pfaffian_with(order: usize, entry: impl Fn(usize, usize) -> Scalar) -> Scalar {
    assert!(order <= 128, "Pfaffian expansion supports order ≤ 128");
    if !order.is_multiple_of(2) {
        return Scalar::zero();
    }
    fn go(
        set: u128,
        entry: &dyn Fn(usize, usize) -> Scalar,
        memo: &mut HashMap<u128, Scalar>,
    ) -> Scalar {
        if set == 0 {
            return Scalar::one();
        }
        if let Some(v) = memo.get(&set) {
            return v.clone();
        }
        let first = set.trailing_zeros() as usize;
        let rest = set & !(1u128 << first);
        let mut total = Scalar::zero();
        let mut position = 1;
        let mut scan = rest;
        while scan != 0 {
            let j = scan.trailing_zeros() as usize;
            scan &= !(1u128 << j);
            position += 1;
            let e = entry(first + 1, j + 1);
            if e.is_zero() {
                continue;
            }
            let term = e * go(rest & !(1u128 << j), entry, memo);
            if position % 2 == 0 {
                total += &term;
            } else {
                total -= &term;
            }
        }
        memo.insert(set, total.clone());
        total
    }
    let full = if order == 128 { u128::MAX } else { (1u128 << order) - 1 };
    go(full, &entry, &mut HashMap::new())
}

/// Pfaffian by first-row expansion. The empty matrix has Pfaffian 1.
pub fn pfaffian(a: &AntisymmetricMatrix) -> Scalar {
    pfaffian_with(a.order, |i, j| a.entry(i, j))
}

/// `Pf(A)² − det A`.
pub fn pfaffian_square_residual(a: &AntisymmetricMatrix) -> Result<Scalar> {
    Ok(pfaffian(a).square() - det_bareiss(&a.to_matrix())?)
}

/// The minors appearing in the perfect-square recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceMinors {
    pub m11: Scalar,
    pub m22: Scalar,
    pub m12: Scalar,
    pub m21: Scalar,
    /// `comp(A; {1,2}, {1,2})`.
    pub inner: Scalar,
    pub det: Scalar,
}

pub fn recurrence_minors(a: &AntisymmetricMatrix) -> Result<RecurrenceMinors> {
    if a.order < 2 {
        return Err(Error::Dimension("recurrence needs order ≥ 2".into()));
    }
    let full = a.to_matrix();
    let pair = IndexSet::new(vec![1, 2])?;
    Ok(RecurrenceMinors {
        m11: first_minor(&full, 1, 1)?,
        m22: first_minor(&full, 2, 2)?,
        m12: first_minor(&full, 1, 2)?,
        m21: first_minor(&full, 2, 1)?,
        inner: complementary_minor(&full, &pair, &pair)?,
        det: det_bareiss(&full)?,
    })
}

/// `comp(A; {1,2}, {1,2})·det A − M_12²`.
pub fn jacobi_recurrence_residual(a: &AntisymmetricMatrix) -> Result<Scalar> {
    let m = recurrence_minors(a)?;
    Ok(m.inner * m.det - m.m12.square())
}

/// A label of the Pfaffian form of a determinant: `i` or `i*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Row(usize),
    Star(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Row(i) => write!(f, "{i}"),
            Label::Star(i) => write!(f, "{i}*"),
        }
    }
}

/// `(1, …, n, n*, …, 1*)`.
pub fn embedding_labels(n: usize) -> Vec<Label> {
    (1..=n)
        .map(Label::Row)
        .chain((1..=n).rev().map(Label::Star))
        .collect()
}

/// The pairing `e(x, y)` induced by `a`.
pub fn pairing(a: &Matrix, x: Label, y: Label) -> Scalar {
    match (x, y) {
        (Label::Row(i), Label::Star(j)) => a.at(i, j).clone(),
        (Label::Star(j), Label::Row(i)) => -a.at(i, j),
        _ => Scalar::zero(),
    }
}

/// The antisymmetric matrix of pairings over [`embedding_labels`]; its
/// Pfaffian equals `det a`.
pub fn determinant_embedding(a: &Matrix) -> Result<AntisymmetricMatrix> {
    let n = a.require_square()?;
    let labels = embedding_labels(n);
    let upper = (0..2 * n)
        .flat_map(|p| (p + 1..2 * n).map(move |q| (p, q)))
        .map(|(p, q)| pairing(a, labels[p], labels[q]))
        .collect();
    AntisymmetricMatrix::from_upper(2 * n, upper)
}

/// Pfaffian of the pairing matrix restricted to `labels`, in the given order.
pub fn pfaffian_over_labels(a: &Matrix, labels: &[Label]) -> Result<Scalar> {
    let n = a.require_square()?;
    for label in labels {
        let (Label::Row(i) | Label::Star(i)) = *label;
        check_index(i, n)?;
    }
    Ok(pfaffian_with(labels.len(), |p, q| {
        pairing(a, labels[p - 1], labels[q - 1])
    }))
}

/// Pfaffian over the embedding labels with `remove` taken out.
///
/// `remove` must be `{i, j*}` (giving `M_ij`, including `i = j`) or
/// `{i, j, i*, j*}` with `i ≠ j` (giving `comp(A; {i,j}, {i,j})`), in any
/// order.
pub fn embedded_minor(a: &Matrix, remove: &[Label]) -> Result<Scalar> {
    let n = a.require_square()?;
    let mut rows: Vec<usize> = Vec::new();
    let mut stars: Vec<usize> = Vec::new();
    for label in remove {
        match *label {
            Label::Row(i) => rows.push(i),
            Label::Star(i) => stars.push(i),
        }
    }
    rows.sort_unstable();
    stars.sort_unstable();
    let well_formed = match (rows.as_slice(), stars.as_slice()) {
        ([_], [_]) => true,
        ([i, j], [p, q]) => i != j && i == p && j == q,
        _ => false,
    };
    if !well_formed {
        return Err(Error::Domain(format!(
            "cannot remove {{{}}}: expected {{i, j*}} or {{i, j, i*, j*}}",
            remove.iter().map(Label::to_string).collect::<Vec<_>>().join(", ")
        )));
    }
    let surviving: Vec<Label> = embedding_labels(n)
        .into_iter()
        .filter(|l| !remove.contains(l))
        .collect();
    if surviving.len() + remove.len() != 2 * n {
        return Err(Error::Domain("removed labels are outside the label set".into()));
    }
    pfaffian_over_labels(a, &surviving)
}
