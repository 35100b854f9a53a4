//! Consistency between the single-matrix minor relations and the Plücker
//! relations they are built from.

use detident::det::{complementary_minor, det_bareiss, det_laplace};
use detident::jacobi::{
    generalized_pluecker_terms, minor_three_term_residual, minor_three_term_terms,
    restricted_block, three_term_selections,
};
use detident::matrix::{augment_columns, IndexSet, Matrix};
use detident::pluecker::{three_term_residual, three_term_terms};
use detident::sample::TrialRng;
use detident::Scalar;

fn inversions(seq: &[usize]) -> usize {
    (0..seq.len())
        .flat_map(|i| (i + 1..seq.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| seq[i] > seq[j])
        .count()
}

/// comp(A; rows, {x,y}) = ±|M u v|, where {u,v} are the other two chosen
/// columns. The sign is the parity of moving u and v behind M's columns.
fn check_proof_construction(a: &Matrix, rows: &IndexSet, cols: &IndexSet) {
    let n = a.rows();
    let (m, vs) = restricted_block(a, rows, cols).unwrap();
    assert!(three_term_residual(&m, &vs[0], &vs[1], &vs[2], &vs[3]).unwrap().is_zero());

    let chosen = cols.as_slice();
    let block_cols: Vec<usize> = (1..=n).filter(|c| !cols.contains(*c)).collect();
    for p in 0..4 {
        for q in p + 1..4 {
            let deleted = IndexSet::new(vec![chosen[p], chosen[q]]).unwrap();
            let kept: Vec<usize> = (0..4).filter(|&t| t != p && t != q).collect();
            let mut arrangement = block_cols.clone();
            arrangement.extend(kept.iter().map(|&t| chosen[t]));
            let sign = Scalar::sign_of_power(inversions(&arrangement));
            let appended =
                augment_columns(&m, &[vs[kept[0]].clone(), vs[kept[1]].clone()]).unwrap();
            assert_eq!(
                complementary_minor(a, rows, &deleted).unwrap(),
                sign * det_laplace(&appended).unwrap(),
                "rows {rows} deleted cols {deleted}"
            );
        }
    }
}

#[test]
fn proof_construction_on_seeded_six_by_six() {
    let mut rng = TrialRng::new(2024, 0);
    let a = rng.matrix(6, 6, 9);
    let rows = IndexSet::new(vec![2, 5]).unwrap();
    let cols = IndexSet::new(vec![1, 3, 4, 6]).unwrap();
    assert!(minor_three_term_residual(&a, &rows, &cols).unwrap().is_zero());
    check_proof_construction(&a, &rows, &cols);
}

#[test]
fn proof_construction_exhaustive_n5() {
    let mut rng = TrialRng::new(7, 1);
    let a = rng.matrix(5, 5, 9);
    for (rows, cols) in three_term_selections(5) {
        check_proof_construction(&a, &rows, &cols);
    }
}

#[test]
fn three_term_block_terms_carry_column_parity() {
    let mut rng = TrialRng::new(11, 0);
    let a = rng.matrix(6, 6, 9);
    for (rows, cols) in three_term_selections(6).step_by(7) {
        let (m, vs) = restricted_block(&a, &rows, &cols).unwrap();
        let block = three_term_terms(&m, &vs[0], &vs[1], &vs[2], &vs[3]).unwrap();
        let minors = minor_three_term_terms(&a, &rows, &cols).unwrap();
        let sign = Scalar::sign_of_power(cols.sum());
        for (b, t) in block.iter().zip(&minors) {
            assert_eq!(b, &(&sign * t));
        }
    }
}

/// The r = 2 generalized relation is the three-term relation counted twice,
/// with one sign per instance: −(−1)^(k+l+s+r).
#[test]
fn generalized_r2_matches_three_term_up_to_instance_sign() {
    let mut rng = TrialRng::new(99, 0);
    for trial in 0..20 {
        let n = rng.usize_in(4, 6);
        let a = rng.matrix(n, n, 9);
        let rows = rng.subset(n, 2);
        let cols = rng.subset(n, 4);
        let general = generalized_pluecker_terms(&a, &rows, &cols).unwrap();
        let three = minor_three_term_terms(&a, &rows, &cols).unwrap();
        assert_eq!(general[5], general[0]);
        assert_eq!(general[4], general[1]);
        assert_eq!(general[3], general[2]);

        let observed: Vec<Scalar> = (0..3)
            .filter(|&p| !three[p].is_zero())
            .map(|p| general[p].checked_div(&three[p]).unwrap())
            .collect();
        let expected = -Scalar::sign_of_power(cols.sum());
        for ratio in &observed {
            assert_eq!(ratio, &expected, "trial {trial}");
        }
        for p in 0..3 {
            assert_eq!(general[p], &expected * &three[p]);
        }
        let total: Scalar = general.iter().sum();
        assert_eq!(total, Scalar::from_int(2) * expected * three.iter().sum::<Scalar>());
    }
}

#[test]
fn dodgson_and_bareiss_on_rational_inputs() {
    let a = Matrix::from_rows(
        ["1/2 -3 4/3", "2 5/7 0", "-1 1 9/4"]
            .iter()
            .map(|r| r.split(' ').map(|t| t.parse().unwrap()).collect())
            .collect(),
    )
    .unwrap();
    let reference = det_laplace(&a).unwrap();
    assert_eq!(det_bareiss(&a).unwrap(), reference);
    assert_eq!(detident::det_dodgson(&a).unwrap().value, reference);
}
