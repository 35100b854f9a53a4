//! Determinant engines and minor accessors.
//!
//! [`det_laplace`] is the slow reference; [`det_bareiss`] is the working
//! engine; [`det_dodgson`] runs Desnanot–Jacobi condensation and falls back to
//! Bareiss elimination wherever a condensation divisor vanishes.

use crate::error::{Error, Result};
use crate::matrix::{check_index, submatrix_delete, IndexSet, Matrix};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Outcome of [`det_dodgson`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DodgsonResult {
    pub value: Scalar,
    pub fallback_used: bool,
    /// Shallowest recursion level whose interior divisor vanished: 1 is the
    /// whole matrix, 2 its (n−1)-order corner minors, and so on. 0 if none.
    pub fallback_depth: usize,
}

/// Determinant by recursive cofactor expansion along the first row.
///
/// Exponential in `n`; meant as an oracle for small matrices.
pub fn det_laplace(a: &Matrix) -> Result<Scalar> {
    let n = a.require_square()?;
    let mut cols: Vec<usize> = (0..n).collect();
    Ok(expand_first_row(a, 0, &mut cols))
}

fn expand_first_row(a: &Matrix, row: usize, cols: &mut Vec<usize>) -> Scalar {
    match cols.len() {
        0 => return Scalar::one(),
        1 => return a.raw(row, cols[0]).clone(),
        _ => {}
    }
    let mut total = Scalar::zero();
    for p in 0..cols.len() {
        let entry = a.raw(row, cols[p]).clone();
        if entry.is_zero() {
            continue;
        }
        let col = cols.remove(p);
        let minor = expand_first_row(a, row + 1, cols);
        cols.insert(p, col);
        let term = entry * minor;
        if p % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
///
/// Each row is first scaled by the lcm of its denominators, so the
/// elimination itself runs on integers with exact divisions.
pub fn det_bareiss(a: &Matrix) -> Result<Scalar> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(Scalar::one());
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (1..=n)
        .map(|i| {
            let row = a.row(i)?;
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            Ok(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect())
        })
        .collect::<Result<_>>()?;
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    negate = !negate;
                }
                None => return Ok(Scalar::zero()),
            }
        }
        let (pivot_rows, rest) = m.split_at_mut(k + 1);
        let pivot = &pivot_rows[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let cross = &row[j] * &pivot[k] - &row[k] * &pivot[j];
                row[j] = cross / &prev;
            }
        }
        prev = pivot[k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    Ok(Scalar::from_big_ratio(det, scale).expect("row scales are nonzero"))
}

/// Determinant by Dodgson condensation.
///
/// For every contiguous k×k window `W` the corner-minor relation
/// `det W · det W° = det W↘ · det W↖ − det W↙ · det W↗` is solved for `det W`,
/// where `W°` is the interior (k−2)×(k−2) window. When `det W°` is zero that
/// window is evaluated with [`det_bareiss`] instead.
pub fn det_dodgson(a: &Matrix) -> Result<DodgsonResult> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(DodgsonResult {
            value: Scalar::one(),
            fallback_used: false,
            fallback_depth: 0,
        });
    }

    // level[k][r][c] = det of the k×k window with top-left corner (r, c).
    let mut before: Vec<Vec<Scalar>> = vec![vec![Scalar::one(); n + 1]; n + 1];
    let mut current: Vec<Vec<Scalar>> = (0..n)
        .map(|r| (0..n).map(|c| a.raw(r, c).clone()).collect())
        .collect();
    let mut fallback_depth = 0;

    for k in 2..=n {
        let span = n - k + 1;
        let mut next = Vec::with_capacity(span);
        for r in 0..span {
            let mut row = Vec::with_capacity(span);
            for c in 0..span {
                let interior = &before[r + 1][c + 1];
                let cross = &current[r + 1][c + 1] * &current[r][c]
                    - &current[r + 1][c] * &current[r][c + 1];
                let value = match cross.checked_div(interior) {
                    Some(v) => v,
                    None => {
                        let depth = n - k + 1;
                        if fallback_depth == 0 || depth < fallback_depth {
                            fallback_depth = depth;
                        }
                        det_bareiss(&window(a, r, c, k))?
                    }
                };
                row.push(value);
            }
            next.push(row);
        }
        before = current;
        current = next;
    }

    Ok(DodgsonResult {
        value: current[0][0].clone(),
        fallback_used: fallback_depth > 0,
        fallback_depth,
    })
}

fn window(a: &Matrix, r: usize, c: usize, k: usize) -> Matrix {
    Matrix::from_fn(k, k, |i, j| a.raw(r + i - 1, c + j - 1).clone())
}

/// Unsigned determinant of `a` with `rows` and `cols` deleted.
///
/// Deleting nothing gives `det a`; deleting everything gives 1.
pub fn complementary_minor(a: &Matrix, rows: &IndexSet, cols: &IndexSet) -> Result<Scalar> {
    a.require_square()?;
    if rows.len() != cols.len() {
        return Err(Error::Shape(format!(
            "deleting {} rows and {} columns leaves a non-square matrix",
            rows.len(),
            cols.len()
        )));
    }
    det_bareiss(&submatrix_delete(a, rows, cols)?)
}

/// Unsigned first minor `M_ij`: delete row `i` and column `j`.
pub fn first_minor(a: &Matrix, i: usize, j: usize) -> Result<Scalar> {
    let n = a.require_square()?;
    check_index(i, n)?;
    check_index(j, n)?;
    complementary_minor(a, &IndexSet::new(vec![i])?, &IndexSet::new(vec![j])?)
}

/// `(−1)^(Σrows + Σcols)` times the complementary minor.
pub fn signed_cofactor(a: &Matrix, rows: &IndexSet, cols: &IndexSet) -> Result<Scalar> {
    let minor = complementary_minor(a, rows, cols)?;
    Ok(Scalar::sign_of_power(rows.sum() + cols.sum()) * minor)
}
