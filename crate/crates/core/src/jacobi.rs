//! Identities among minors of a single square matrix: the Desnanot–Jacobi
//! identity, the three-term minor relation, and its r-row generalization.
//!
//! Minors are unsigned complementary minors (see [`complementary_minor`]).
//! In the Jacobi identity the cofactor signs cancel in pairs and in the minor
//! relations they contribute one common factor per instance, so every
//! residual below is exactly zero for every input.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::det::{complementary_minor, det_bareiss, first_minor};
use crate::error::{Error, Result};
use crate::matrix::{check_index, submatrix_delete, IndexSet, Matrix};
use crate::pluecker::pluecker_terms;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityKind {
    Jacobi,
    MinorThreeTerm,
    GeneralizedPluecker,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Jacobi => "jacobi",
            IdentityKind::MinorThreeTerm => "minor-three-term",
            IdentityKind::GeneralizedPluecker => "generalized-pluecker",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The indices one residual was evaluated at. For the Jacobi identity
/// `rows = [i]` and `cols = [j]` describe the ordered pair `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Selection {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows={} cols={}",
            self.rows.iter().join(","),
            self.cols.iter().join(",")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub selection: Selection,
    pub residual: Scalar,
}

/// Aggregate outcome of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    /// `(rows, cols)` of the matrix checked.
    pub dims: (usize, usize),
    pub selections: Vec<Selection>,
    pub residuals_checked: usize,
    pub nonzero_residuals: usize,
    /// Failing selections in sweep order.
    pub witnesses: Vec<Witness>,
}

impl IdentityReport {
    fn collect(
        identity: IdentityKind,
        a: &Matrix,
        results: impl IntoIterator<Item = Result<(Selection, Scalar)>>,
    ) -> Result<Self> {
        let mut report = IdentityReport {
            identity,
            dims: (a.rows(), a.cols()),
            selections: Vec::new(),
            residuals_checked: 0,
            nonzero_residuals: 0,
            witnesses: Vec::new(),
        };
        for item in results {
            let (selection, residual) = item?;
            report.residuals_checked += 1;
            if !residual.is_zero() {
                report.nonzero_residuals += 1;
                report.witnesses.push(Witness {
                    selection: selection.clone(),
                    residual,
                });
            }
            report.selections.push(selection);
        }
        Ok(report)
    }

    pub fn passed(&self) -> bool {
        self.nonzero_residuals == 0
    }
}

/// `M_ii·M_jj − M_ij·M_ji − comp(A; {i,j}, {i,j})·det A`.
pub fn jacobi_residual(a: &Matrix, i: usize, j: usize) -> Result<Scalar> {
    let n = a.require_square()?;
    if n < 2 {
        return Err(Error::Dimension("the Jacobi identity needs n ≥ 2".into()));
    }
    check_index(i, n)?;
    check_index(j, n)?;
    if i == j {
        return Err(Error::Domain(format!(
            "i = j = {i}: the doubly-deleted minor needs two distinct indices"
        )));
    }
    let pair = IndexSet::new(vec![i.min(j), i.max(j)])?;
    let lhs = first_minor(a, i, i)? * first_minor(a, j, j)?
        - first_minor(a, i, j)? * first_minor(a, j, i)?;
    let rhs = complementary_minor(a, &pair, &pair)? * det_bareiss(a)?;
    Ok(lhs - rhs)
}

/// Evaluates [`jacobi_residual`] at every ordered pair `i ≠ j`, row-major.
pub fn verify_all_jacobi(a: &Matrix) -> Result<IdentityReport> {
    let n = a.require_square()?;
    if n < 2 {
        return Err(Error::Dimension("the Jacobi identity needs n ≥ 2".into()));
    }
    // Every pair reuses the same first minors, determinant and pair minors.
    let minors = (1..=n)
        .map(|i| (1..=n).map(|j| first_minor(a, i, j)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let det = det_bareiss(a)?;
    let mut inner = vec![vec![Scalar::zero(); n]; n];
    for (i, j) in (0..n).tuple_combinations() {
        let pair = IndexSet::new(vec![i + 1, j + 1])?;
        inner[i][j] = complementary_minor(a, &pair, &pair)?;
        inner[j][i] = inner[i][j].clone();
    }
    IdentityReport::collect(
        IdentityKind::Jacobi,
        a,
        (1..=n)
            .cartesian_product(1..=n)
            .filter(|(i, j)| i != j)
            .map(|(i, j)| {
                let (p, q) = (i - 1, j - 1);
                let residual = &minors[p][p] * &minors[q][q]
                    - &minors[p][q] * &minors[q][p]
                    - &inner[p][q] * &det;
                Ok((Selection { rows: vec![i], cols: vec![j] }, residual))
            }),
    )
}

fn check_minor_relation_args(a: &Matrix, row_pair: &IndexSet, cols: &IndexSet) -> Result<usize> {
    let n = a.require_square()?;
    if row_pair.len() != 2 || cols.len() != 4 {
        return Err(Error::Domain(format!(
            "need 2 rows and 4 columns, got {} and {}",
            row_pair.len(),
            cols.len()
        )));
    }
    if n < 4 {
        return Err(Error::Dimension(format!("need n ≥ 4, got {n}")));
    }
    row_pair.check_within(n)?;
    cols.check_within(n)?;
    Ok(n)
}

/// With `comp(x, y) = comp(A; row_pair, {x, y})` and `cols = {k<l<s<r}`:
/// `[comp(k,l)·comp(s,r), −comp(k,s)·comp(l,r), comp(k,r)·comp(l,s)]`.
pub fn minor_three_term_terms(
    a: &Matrix,
    row_pair: &IndexSet,
    cols: &IndexSet,
) -> Result<[Scalar; 3]> {
    check_minor_relation_args(a, row_pair, cols)?;
    let c = cols.as_slice();
    let comp = |x: usize, y: usize| complementary_minor(a, row_pair, &IndexSet::new(vec![x, y])?);
    let (k, l, s, r) = (c[0], c[1], c[2], c[3]);
    Ok([
        comp(k, l)? * comp(s, r)?,
        -(comp(k, s)? * comp(l, r)?),
        comp(k, r)? * comp(l, s)?,
    ])
}

pub fn minor_three_term_residual(a: &Matrix, row_pair: &IndexSet, cols: &IndexSet) -> Result<Scalar> {
    Ok(minor_three_term_terms(a, row_pair, cols)?.into_iter().sum())
}

/// The shared block and the restricted columns behind a minor relation:
/// `M` is `a` without `del_rows` and `chosen_cols`, and each vector is a
/// chosen column of `a` without its `del_rows` entries, in ascending order.
pub fn restricted_block(
    a: &Matrix,
    del_rows: &IndexSet,
    chosen_cols: &IndexSet,
) -> Result<(Matrix, Vec<Vec<Scalar>>)> {
    let m = submatrix_delete(a, del_rows, chosen_cols)?;
    let vectors = chosen_cols
        .iter()
        .map(|j| {
            Ok(a.column(j)?
                .into_iter()
                .enumerate()
                .filter(|(i, _)| !del_rows.contains(i + 1))
                .map(|(_, x)| x)
                .collect())
        })
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    Ok((m, vectors))
}

fn check_generalized_args(a: &Matrix, del_rows: &IndexSet, chosen_cols: &IndexSet) -> Result<()> {
    let n = a.require_square()?;
    let r = del_rows.len();
    if r == 0 {
        return Err(Error::Domain("need at least one deleted row".into()));
    }
    if chosen_cols.len() != 2 * r {
        return Err(Error::Domain(format!(
            "{r} rows need {} chosen columns, got {}",
            2 * r,
            chosen_cols.len()
        )));
    }
    if n < 2 * r {
        return Err(Error::Dimension(format!("r = {r} needs n ≥ {}, got {n}", 2 * r)));
    }
    del_rows.check_within(n)?;
    chosen_cols.check_within(n)
}

/// Signed terms of the r-row relation, in split-enumeration order.
pub fn generalized_pluecker_terms(
    a: &Matrix,
    del_rows: &IndexSet,
    chosen_cols: &IndexSet,
) -> Result<Vec<Scalar>> {
    check_generalized_args(a, del_rows, chosen_cols)?;
    let (m, vectors) = restricted_block(a, del_rows, chosen_cols)?;
    pluecker_terms(&m, &vectors)
}

/// Plücker sum over the restricted block; zero for every valid input.
pub fn generalized_pluecker_residual(
    a: &Matrix,
    del_rows: &IndexSet,
    chosen_cols: &IndexSet,
) -> Result<Scalar> {
    Ok(generalized_pluecker_terms(a, del_rows, chosen_cols)?.into_iter().sum())
}

/// Every `(row pair, column quadruple)` for an n×n matrix, lexicographic.
pub fn three_term_selections(n: usize) -> impl Iterator<Item = (IndexSet, IndexSet)> {
    index_choices(n, 2, 4)
}

/// Every `(r rows, 2r columns)` choice for an n×n matrix, lexicographic.
pub fn generalized_selections(n: usize, r: usize) -> impl Iterator<Item = (IndexSet, IndexSet)> {
    index_choices(n, r, 2 * r)
}

fn index_choices(n: usize, rows: usize, cols: usize) -> impl Iterator<Item = (IndexSet, IndexSet)> {
    let col_sets: Vec<Vec<usize>> = (1..=n).combinations(cols).collect();
    (1..=n).combinations(rows).flat_map(move |r| {
        col_sets.clone().into_iter().map(move |c| {
            (
                IndexSet::new(r.clone()).expect("combinations are increasing"),
                IndexSet::new(c).expect("combinations are increasing"),
            )
        })
    })
}

fn selection_of(rows: &IndexSet, cols: &IndexSet) -> Selection {
    Selection {
        rows: rows.as_slice().to_vec(),
        cols: cols.as_slice().to_vec(),
    }
}

pub fn verify_minor_three_term(
    a: &Matrix,
    selections: impl IntoIterator<Item = (IndexSet, IndexSet)>,
) -> Result<IdentityReport> {
    IdentityReport::collect(
        IdentityKind::MinorThreeTerm,
        a,
        selections.into_iter().map(|(rows, cols)| {
            let residual = minor_three_term_residual(a, &rows, &cols)?;
            Ok((selection_of(&rows, &cols), residual))
        }),
    )
}

pub fn verify_generalized(
    a: &Matrix,
    selections: impl IntoIterator<Item = (IndexSet, IndexSet)>,
) -> Result<IdentityReport> {
    IdentityReport::collect(
        IdentityKind::GeneralizedPluecker,
        a,
        selections.into_iter().map(|(rows, cols)| {
            let residual = generalized_pluecker_residual(a, &rows, &cols)?;
            Ok((selection_of(&rows, &cols), residual))
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::det::det_laplace;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn int(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn worked() -> Matrix {
        Matrix::from_ints(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    }

    fn oracle_minor(a: &Matrix, rows: &[usize], cols: &[usize]) -> Scalar {
        det_laplace(&submatrix_delete(a, &set(rows), &set(cols)).unwrap()).unwrap()
    }

    #[test]
    fn jacobi_on_identity() {
        assert!(jacobi_residual(&Matrix::identity(4), 1, 2).unwrap().is_zero());
    }

    #[test]
    fn jacobi_worked_adjacent_pair() {
        let a = worked();
        let (m11, m22) = (oracle_minor(&a, &[1], &[1]), oracle_minor(&a, &[2], &[2]));
        let (m12, m21) = (oracle_minor(&a, &[1], &[2]), oracle_minor(&a, &[2], &[1]));
        let comp = oracle_minor(&a, &[1, 2], &[1, 2]);
        let det = det_laplace(&a).unwrap();
        assert_eq!([&m11, &m22, &m12, &m21, &comp, &det], [&int(2), &int(-11), &int(-2), &int(-4), &int(10), &int(-3)]);
        assert!((&m11 * &m22 - &m12 * &m21 - &comp * &det).is_zero());
        assert!(jacobi_residual(&a, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn jacobi_worked_outer_pair() {
        let a = worked();
        let m11 = oracle_minor(&a, &[1], &[1]);
        let m33 = oracle_minor(&a, &[3], &[3]);
        let m13 = oracle_minor(&a, &[1], &[3]);
        let m31 = oracle_minor(&a, &[3], &[1]);
        let comp = oracle_minor(&a, &[1, 3], &[1, 3]);
        assert_eq!([&m11, &m33, &m13, &m31, &comp], [&int(2), &int(-3), &int(-3), &int(-3), &int(5)]);
        assert!(jacobi_residual(&a, 1, 3).unwrap().is_zero());
    }

    #[test]
    fn jacobi_errors() {
        let a = worked();
        assert!(matches!(jacobi_residual(&a, 2, 2), Err(Error::Domain(_))));
        assert!(matches!(jacobi_residual(&a, 1, 4), Err(Error::Bounds { .. })));
        assert!(jacobi_residual(&Matrix::from_ints(&[[1]]), 1, 1).is_err());
        assert!(verify_all_jacobi(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn jacobi_sweeps() {
        let report = verify_all_jacobi(&Matrix::from_ints(&[[1, 2], [2, 4]])).unwrap();
        assert!(report.passed());
        assert_eq!(report.residuals_checked, 2);
        assert!(report.witnesses.is_empty());
        let report = verify_all_jacobi(&Matrix::identity(5)).unwrap();
        assert!(report.passed());
        assert_eq!(report.residuals_checked, 20);
        assert_eq!(report.selections[0], Selection { rows: vec![1], cols: vec![2] });
    }

    #[test]
    fn classical_relation_on_four_by_four() {
        let a = Matrix::from_ints(&[[3, -1, 4, 1], [5, 9, -2, 6], [5, 3, 5, -8], [9, 7, 9, 3]]);
        // D(uv) = 2×2 minor of rows 3,4 on columns u,v.
        let d = |u: usize, v: usize| {
            a.at(3, u) * a.at(4, v) - a.at(3, v) * a.at(4, u)
        };
        let classical = d(3, 4) * d(1, 2) - d(2, 4) * d(1, 3) + d(2, 3) * d(1, 4);
        assert!(classical.is_zero());
        let terms = minor_three_term_terms(&a, &set(&[1, 2]), &set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(terms, [d(3, 4) * d(1, 2), -(d(2, 4) * d(1, 3)), d(2, 3) * d(1, 4)]);
        assert!(minor_three_term_residual(&a, &set(&[1, 2]), &set(&[1, 2, 3, 4])).unwrap().is_zero());
    }

    #[test]
    fn equal_remaining_rows_zero_every_minor() {
        let a = Matrix::from_ints(&[[1, 2, 3, 4], [0, 1, 7, 2], [5, 6, 7, 8], [5, 6, 7, 8]]);
        let terms = minor_three_term_terms(&a, &set(&[1, 2]), &set(&[1, 2, 3, 4])).unwrap();
        assert!(terms.iter().all(Scalar::is_zero));
        for (x, y) in [(1, 2), (1, 3), (2, 4), (3, 4)] {
            assert!(complementary_minor(&a, &set(&[1, 2]), &set(&[x, y])).unwrap().is_zero());
        }
    }

    #[test]
    fn minor_relation_argument_errors() {
        let a = Matrix::identity(5);
        assert!(matches!(
            minor_three_term_residual(&a, &set(&[1]), &set(&[1, 2, 3, 4])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            minor_three_term_residual(&a, &set(&[1, 2]), &set(&[1, 2, 3])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            minor_three_term_residual(&Matrix::identity(3), &set(&[1, 2]), &set(&[1, 2, 3, 4])),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            generalized_pluecker_residual(&a, &set(&[1, 2, 3]), &set(&[1, 2, 3, 4, 5])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            generalized_pluecker_residual(&Matrix::identity(5), &set(&[1, 2, 3]), &set(&[1, 2, 3, 4, 5, 6])),
            Err(Error::Dimension(_))
        ));
        assert!(generalized_pluecker_residual(&a, &IndexSet::empty(), &IndexSet::empty()).is_err());
    }

    #[test]
    fn generalized_r1_is_two_term_cancellation() {
        let a = worked();
        let terms = generalized_pluecker_terms(&a, &set(&[2]), &set(&[1, 3])).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0], -terms[1].clone());
    }

    #[test]
    fn generalized_r3_on_six_by_six() {
        let a = Matrix::from_ints(&[
            [2, -1, 0, 3, 1, 4],
            [1, 5, -2, 0, 2, 1],
            [0, 3, 1, -4, 1, 2],
            [7, 1, 0, 2, -3, 1],
            [1, 1, 6, 0, 2, -1],
            [-2, 0, 1, 1, 4, 3],
        ]);
        let terms = generalized_pluecker_terms(&a, &set(&[1, 2, 3]), &IndexSet::full(6)).unwrap();
        assert_eq!(terms.len(), 20);
        // Rebuild each term with the Laplace oracle on the 3×3 blocks.
        let (m, vs) = restricted_block(&a, &set(&[1, 2, 3]), &IndexSet::full(6)).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 0));
        let splits = crate::pluecker::split_enumeration(3).unwrap();
        let mut oracle_sum = Scalar::zero();
        for (t, term) in splits.iter().zip(&terms) {
            let block = |pos: &IndexSet| {
                let cols: Vec<_> = pos.iter().map(|k| vs[k - 1].clone()).collect();
                det_laplace(&crate::matrix::augment_columns(&m, &cols).unwrap()).unwrap()
            };
            let expected = Scalar::from_int(t.sign as i64) * block(&t.left) * block(&t.right);
            assert_eq!(&expected, term);
            oracle_sum += &expected;
        }
        assert!(oracle_sum.is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn jacobi_vanishes_and_is_symmetric(
            (a, i, j) in (2usize..=7).prop_flat_map(|n| (
                proptest::collection::vec(-9i64..=9, n * n)
                    .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(Scalar::from_int).collect()).unwrap()),
                1..=n, 1..=n,
            ))
        ) {
            prop_assume!(i != j);
            let forward = jacobi_residual(&a, i, j).unwrap();
            prop_assert!(forward.is_zero());
            prop_assert_eq!(forward, jacobi_residual(&a, j, i).unwrap());
            let scaled = a.scale(&Scalar::from_ratio(-7, 3).unwrap());
            prop_assert!(jacobi_residual(&scaled, i, j).unwrap().is_zero());
        }
    }
}
