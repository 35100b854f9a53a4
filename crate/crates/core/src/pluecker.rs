//! Plücker relations for determinants with a shared block of columns.
//!
//! For an n×(n−r) matrix `M` and 2r column vectors `a_1, …, a_2r`,
//!
//! ```text
//! Σ (−1)^(k_1+⋯+k_r) |M a_k1 ⋯ a_kr| · |M a_k(r+1) ⋯ a_k2r| = 0
//! ```
//!
//! summed over splittings of `1..=2r` into increasing halves. Signs come from
//! positions within the vector list. The constant factor `(−1)^(n(n+1)/2)`
//! produced by block Laplace expansion multiplies every term alike and is
//! dropped.

use std::collections::HashMap;

use itertools::Itertools;

use crate::det::det_bareiss;
use crate::error::{Error, Result};
use crate::matrix::{augment_columns, IndexSet, Matrix};
use crate::scalar::Scalar;

/// One splitting of the positions `1..=2r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTerm {
    pub left: IndexSet,
    pub right: IndexSet,
    /// `(−1)^(Σ left)`, as ±1.
    pub sign: i8,
}

/// All `C(2r, r)` splittings, ordered lexicographically by `left`.
pub fn split_enumeration(r: usize) -> Result<Vec<SplitTerm>> {
    if r == 0 {
        return Err(Error::Domain("split size r must be at least 1".into()));
    }
    let all = IndexSet::full(2 * r);
    Ok((1..=2 * r)
        .combinations(r)
        .map(|left| {
            let left = IndexSet::new(left).expect("combinations are increasing");
            let right = IndexSet::new(all.iter().filter(|&k| !left.contains(k)).collect())
                .expect("filtered range is increasing");
            let sign = if left.sum().is_multiple_of(2) { 1 } else { -1 };
            SplitTerm { left, right, sign }
        })
        .collect())
}

/// The signed products of the relation, one per element of
/// [`split_enumeration`], in the same order.
pub fn pluecker_terms(m: &Matrix, vectors: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
    let n = m.rows();
    if vectors.is_empty() || !vectors.len().is_multiple_of(2) {
        return Err(Error::Dimension(format!(
            "need a positive even number of vectors, got {}",
            vectors.len()
        )));
    }
    let r = vectors.len() / 2;
    if n < r || m.cols() != n - r {
        return Err(Error::Dimension(format!(
            "M is {}x{}, but {} vectors need an n×(n−{r}) block",
            m.rows(),
            m.cols(),
            vectors.len()
        )));
    }

    let mut dets: HashMap<IndexSet, Scalar> = HashMap::new();
    let mut det_of = |positions: &IndexSet| -> Result<Scalar> {
        if let Some(d) = dets.get(positions) {
            return Ok(d.clone());
        }
        let chosen: Vec<Vec<Scalar>> = positions.iter().map(|k| vectors[k - 1].clone()).collect();
        let d = det_bareiss(&augment_columns(m, &chosen)?)?;
        dets.insert(positions.clone(), d.clone());
        Ok(d)
    };

    split_enumeration(r)?
        .into_iter()
        .map(|term| {
            let product = det_of(&term.left)? * det_of(&term.right)?;
            Ok(if term.sign < 0 { -product } else { product })
        })
        .collect()
}

/// The full signed sum; zero for every valid input.
pub fn pluecker_sum(m: &Matrix, vectors: &[Vec<Scalar>]) -> Result<Scalar> {
    Ok(pluecker_terms(m, vectors)?.into_iter().sum())
}

/// `[|Mab||Mcd|, −|Mac||Mbd|, |Mad||Mbc|]`.
pub fn three_term_terms(
    m: &Matrix,
    a: &[Scalar],
    b: &[Scalar],
    c: &[Scalar],
    d: &[Scalar],
) -> Result<[Scalar; 3]> {
    let n = m.rows();
    if n < 2 || m.cols() != n - 2 {
        return Err(Error::Dimension(format!(
            "M must be n×(n−2) with n ≥ 2, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let pair = |x: &[Scalar], y: &[Scalar]| -> Result<Scalar> {
        det_bareiss(&augment_columns(m, &[x.to_vec(), y.to_vec()])?)
    };
    Ok([
        pair(a, b)? * pair(c, d)?,
        -(pair(a, c)? * pair(b, d)?),
        pair(a, d)? * pair(b, c)?,
    ])
}

/// `|Mab||Mcd| − |Mac||Mbd| + |Mad||Mbc|`; zero for every valid input.
pub fn three_term_residual(
    m: &Matrix,
    a: &[Scalar],
    b: &[Scalar],
    c: &[Scalar],
    d: &[Scalar],
) -> Result<Scalar> {
    Ok(three_term_terms(m, a, b, c, d)?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::det::det_laplace;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn split_examples() {
        let one = split_enumeration(1).unwrap();
        assert_eq!(
            one,
            vec![
                SplitTerm { left: set(&[1]), right: set(&[2]), sign: -1 },
                SplitTerm { left: set(&[2]), right: set(&[1]), sign: 1 },
            ]
        );
        let two = split_enumeration(2).unwrap();
        assert_eq!(two.len(), 6);
        assert_eq!(two[0], SplitTerm { left: set(&[1, 2]), right: set(&[3, 4]), sign: -1 });
        assert_eq!(split_enumeration(3).unwrap().len(), binomial(6, 3));
        assert!(matches!(split_enumeration(0), Err(Error::Domain(_))));
    }

    #[test]
    fn split_involution_signs() {
        for r in 1..=4 {
            let terms = split_enumeration(r).unwrap();
            assert_eq!(terms.len(), binomial(2 * r, r));
            let expected: i8 = if (r * (2 * r + 1)) % 2 == 0 { 1 } else { -1 };
            for t in &terms {
                let mirror = terms.iter().find(|u| u.left == t.right).unwrap();
                assert_eq!(mirror.right, t.left);
                assert_eq!(t.sign * mirror.sign, expected);
            }
        }
    }

    #[test]
    fn two_by_two_instance_by_hand() {
        // 2×2 determinants written out, then the six signed products.
        let det2 = |x: [i64; 2], y: [i64; 2]| x[0] * y[1] - x[1] * y[0];
        let (a, b, c, d) = ([1, 0], [0, 1], [1, 1], [1, -1]);
        assert_eq!(det2(a, b), 1);
        assert_eq!(det2(c, d), -2);
        assert_eq!(det2(a, c), 1);
        assert_eq!(det2(b, d), -1);
        assert_eq!(det2(a, d), -1);
        assert_eq!(det2(b, c), -1);
        let by_hand = -det2(a, b) * det2(c, d) + det2(a, c) * det2(b, d)
            - det2(a, d) * det2(b, c)
            - det2(b, c) * det2(a, d)
            + det2(b, d) * det2(a, c)
            - det2(c, d) * det2(a, b);
        assert_eq!(by_hand, 0);

        let m = Matrix::zeros(2, 0);
        let vs = [ints(&a), ints(&b), ints(&c), ints(&d)];
        let terms = pluecker_terms(&m, &vs).unwrap();
        assert_eq!(terms, ints(&[2, -1, -1, -1, -1, 2]));
        assert!(pluecker_sum(&m, &vs).unwrap().is_zero());
        assert!(three_term_residual(&m, &vs[0], &vs[1], &vs[2], &vs[3]).unwrap().is_zero());
    }

    #[test]
    fn three_term_with_nonempty_block() {
        let m = Matrix::from_ints(&[[1], [0], [0]]);
        let (a, b, c, d) = (ints(&[0, 1, 0]), ints(&[0, 0, 1]), ints(&[0, 1, 1]), ints(&[0, 1, -1]));
        let det3 = |x: &[Scalar], y: &[Scalar]| {
            det_laplace(&augment_columns(&m, &[x.to_vec(), y.to_vec()]).unwrap()).unwrap()
        };
        let oracle = det3(&a, &b) * det3(&c, &d) - det3(&a, &c) * det3(&b, &d)
            + det3(&a, &d) * det3(&b, &c);
        assert!(oracle.is_zero());
        assert!(three_term_residual(&m, &a, &b, &c, &d).unwrap().is_zero());
    }

    #[test]
    fn repeated_vectors_vanish() {
        let m = Matrix::from_ints(&[[1, 2], [3, 4], [5, 7], [1, 1]]);
        let a = ints(&[1, 2, 3, 4]);
        let vs = [a.clone(), a.clone(), ints(&[0, 1, 0, 2]), ints(&[5, 5, 1, 0])];
        assert!(pluecker_sum(&m, &vs).unwrap().is_zero());
        assert!(three_term_residual(&Matrix::zeros(2, 0), &ints(&[1, 2]), &ints(&[3, 1]), &ints(&[1, 2]), &ints(&[0, 1]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn r1_cancels_pairwise() {
        let m = Matrix::from_ints(&[[2, 1], [0, 3], [1, 1]]);
        let vs = [ints(&[1, 2, 3]), ints(&[4, 0, 1])];
        let terms = pluecker_terms(&m, &vs).unwrap();
        assert_eq!(terms[0], -terms[1].clone());
    }

    #[test]
    fn dimension_errors() {
        let m = Matrix::zeros(3, 1);
        assert!(pluecker_sum(&m, &[]).is_err());
        assert!(pluecker_sum(&m, &[ints(&[1, 2, 3])]).is_err());
        // 3×1 block needs r = 2, so six vectors are wrong.
        let six: Vec<_> = (0..6).map(|_| ints(&[1, 2, 3])).collect();
        assert!(matches!(pluecker_sum(&m, &six), Err(Error::Dimension(_))));
        let bad_len = [ints(&[1, 2, 3]), ints(&[1, 2]), ints(&[1, 0, 0]), ints(&[0, 0, 1])];
        assert!(pluecker_sum(&m, &bad_len).is_err());
        assert!(three_term_residual(&Matrix::zeros(3, 2), &bad_len[0], &bad_len[0], &bad_len[0], &bad_len[0]).is_err());
    }

    #[test]
    fn sum_is_minus_twice_three_term_termwise() {
        let m = Matrix::from_ints(&[[1, 4], [2, -1], [0, 3], [5, 1]]);
        let vs = [ints(&[1, 0, 2, 1]), ints(&[3, 1, 0, -2]), ints(&[0, 2, 1, 1]), ints(&[4, -3, 1, 0])];
        let general = pluecker_terms(&m, &vs).unwrap();
        let three = three_term_terms(&m, &vs[0], &vs[1], &vs[2], &vs[3]).unwrap();
        // Splits led by position 1 pair with their complements.
        assert_eq!(general[0], -three[0].clone());
        assert_eq!(general[1], -three[1].clone());
        assert_eq!(general[2], -three[2].clone());
        assert_eq!(general[5], general[0]);
        assert_eq!(general[4], general[1]);
        assert_eq!(general[3], general[2]);
        assert!(three.iter().any(|t| !t.is_zero()));
    }

    fn arb_instance(r: usize) -> impl Strategy<Value = (Matrix, Vec<Vec<Scalar>>)> {
        (r.max(1)..=7usize).prop_flat_map(move |n| {
            let block = proptest::collection::vec(-9i64..=9, n * (n - r));
            let vecs = proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), 2 * r);
            (block, vecs).prop_map(move |(b, vs)| {
                (
                    Matrix::new(n, n - r, ints(&b)).unwrap(),
                    vs.iter().map(|v| ints(v)).collect(),
                )
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn relation_vanishes_r1((m, vs) in arb_instance(1)) {
            prop_assert!(pluecker_sum(&m, &vs).unwrap().is_zero());
        }

        #[test]
        fn relation_vanishes_r2((m, vs) in arb_instance(2)) {
            prop_assert!(pluecker_sum(&m, &vs).unwrap().is_zero());
            prop_assert!(three_term_residual(&m, &vs[0], &vs[1], &vs[2], &vs[3]).unwrap().is_zero());
            // a ↔ b
            prop_assert!(three_term_residual(&m, &vs[1], &vs[0], &vs[2], &vs[3]).unwrap().is_zero());
        }

        #[test]
        fn relation_vanishes_r3((m, vs) in arb_instance(3)) {
            prop_assert!(pluecker_sum(&m, &vs).unwrap().is_zero());
        }
    }
}
