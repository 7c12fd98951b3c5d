//! Algebraic Hochschild computations against the geometric predictions.

use hlab_core::constructions::{beilinson, rolled_up, twisted_group_algebra, BeilinsonSpec, CyclicActionSpec, Variant};
use hlab_core::hochschild::{hh_cohomology, hh_graded, hh_homology, Direction};
use hlab_core::limits::Limits;
use hlab_core::oracle::{fixed_point_hh_homology, hkr_cohomology, hodge_homology, FixedPointQuery};
use hlab_core::Field;

fn fixed_point_row(action: &CyclicActionSpec, d: usize, max_i: usize) -> Vec<u64> {
    (0..=max_i)
        .map(|i| {
            let q = FixedPointQuery { action: action.clone(), i, max_degree: d };
            fixed_point_hh_homology(&q).get(i as i64, Some(d as i64)).unwrap()
        })
        .collect()
}

fn assert_twisted_matches(order: usize, weights: Vec<usize>, p: u64, max_degree: usize) {
    let limits = Limits::default();
    let action = CyclicActionSpec::new(order, weights).unwrap();
    let a = twisted_group_algebra(&action, max_degree, p, &limits).unwrap();
    let max_i = action.n_vars();
    for d in 0..=max_degree {
        let alg = hh_graded(&a, Direction::Homology, d as i64, max_i, &limits).unwrap().values_at_degree(d as i64);
        assert_eq!(alg, fixed_point_row(&action, d, max_i), "{} degree {d}", a.name());
    }
}

#[test]
fn twisted_binary_action_matches_fixed_points() {
    assert_twisted_matches(2, vec![1, 1], 5, 4);
}

#[test]
fn twisted_ternary_scalar_action_matches_fixed_points() {
    assert_twisted_matches(3, vec![1, 1, 1], 7, 3);
}

#[test]
fn twisted_special_linear_order_four() {
    assert_twisted_matches(4, vec![1, 3], 5, 4);
}

#[test]
fn twisted_non_special_linear_homology() {
    assert_twisted_matches(3, vec![1, 1], 7, 4);
}

#[test]
fn rolled_up_matches_fixed_points_over_the_rationals() {
    let limits = Limits::default();
    let b = rolled_up(2, 4, Field::Rational, &limits).unwrap();
    let action = CyclicActionSpec::scalar(2);
    for d in 0..=4 {
        let alg = hh_graded(&b, Direction::Homology, d, 2, &limits).unwrap().values_at_degree(d);
        assert_eq!(alg, fixed_point_row(&action, d as usize, 2), "degree {d}");
    }
}

#[test]
fn beilinson_matches_hkr_and_hodge() {
    let limits = Limits::default();
    for n in 2..=3 {
        let a0 = beilinson(&BeilinsonSpec { n, variant: Variant::Symmetric }, Field::Rational).unwrap();
        let max_i = 2 * n;
        assert_eq!(hh_cohomology(&a0, max_i, &limits).unwrap(), hkr_cohomology(n, max_i));
        let top = max_i as i64;
        let hodge = hodge_homology(n, 0, top);
        assert_eq!(hh_homology(&a0, max_i, &limits).unwrap().agrees_with(&hodge), Some(true));
    }
}
