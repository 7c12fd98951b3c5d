use num::{BigRational, One};
use proptest::prelude::*;

use hlab_core::algebra::format::{parse, serialize};
use hlab_core::algebra::{build_algebra, Arrow, Path, Quiver, Relation, RelationSet};
use hlab_core::combinatorics::binomial;
use hlab_core::constructions::{veronese_hilbert, CyclicActionSpec};
use hlab_core::hochschild::{hh_cohomology, Direction};
use hlab_core::limits::Limits;
use hlab_core::linalg::matrix::{rank_dense, rank_sparse};
use hlab_core::linalg::{homology_dim, kernel_basis, rank, ExactMatrix, LinalgError};
use hlab_core::oracle::{bott, count_forms, fixed_coordinates, fixed_point_hh_cohomology, fixed_point_hh_homology, fixed_point_summand, FixedPointQuery};
use hlab_core::Field;

const PRIME: u64 = 1_000_003;

fn small_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn quiver_strategy(acyclic: bool) -> impl Strategy<Value = Quiver> {
    (1usize..=3).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=4).prop_map(move |pairs| {
            let arrows = pairs
                .into_iter()
                .filter(|(s, t)| !acyclic || s < t)
                .enumerate()
                .map(|(id, (source, target))| Arrow { id, source, target, degree: 1 })
                .collect();
            Quiver::new(n, arrows).unwrap()
        })
    })
}

fn length_two_paths(q: &Quiver) -> Vec<Path> {
    let mut out = Vec::new();
    for a in q.arrows() {
        for b in q.arrows() {
            if let Ok(p) = q.path(&[a.id, b.id]) {
                out.push(p);
            }
        }
    }
    out
}

/// Random relations: some monomials, some differences of parallel paths.
fn relations_for(q: &Quiver, picks: &[(usize, usize, bool)]) -> RelationSet {
    let paths = length_two_paths(q);
    let mut rels = Vec::new();
    if paths.is_empty() {
        return RelationSet::empty();
    }
    for &(i, j, binomial_rel) in picks {
        let p = paths[i % paths.len()].clone();
        let other = paths[j % paths.len()].clone();
        let parallel = (p.source, p.target) == (other.source, other.target) && p != other;
        let terms = if binomial_rel && parallel {
            vec![(BigRational::one(), p), (-BigRational::one(), other)]
        } else {
            vec![(BigRational::one(), p)]
        };
        rels.push(Relation::new(terms).unwrap());
    }
    RelationSet::new(rels)
}

fn path_counts(q: &Quiver, max_degree: usize) -> Vec<usize> {
    let n = q.vertex_count();
    // ends[v] = number of paths of the current length ending at v
    let mut ends = vec![1usize; n];
    let mut out = vec![n];
    for _ in 1..=max_degree {
        let mut next = vec![0; n];
        for a in q.arrows() {
            next[a.target] += ends[a.source];
        }
        out.push(next.iter().sum());
        ends = next;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(rows in small_matrix(7)) {
        let m = ExactMatrix::from_dense_i64(Field::Rational, &rows);
        prop_assert_eq!(rank(&m).unwrap() + kernel_basis(&m).unwrap().dim(), m.cols());
    }

    #[test]
    fn rank_of_transpose(rows in small_matrix(7)) {
        let m = ExactMatrix::from_dense_i64(Field::Rational, &rows);
        prop_assert_eq!(rank(&m).unwrap(), rank(&m.transpose()).unwrap());
    }

    #[test]
    fn rational_and_large_prime_ranks_agree(rows in small_matrix(6)) {
        // |minors| <= 6!·3^6 < p, so no minor vanishes mod p by accident
        let q = ExactMatrix::from_dense_i64(Field::Rational, &rows);
        let p = ExactMatrix::from_dense_i64(Field::prime(PRIME).unwrap(), &rows);
        prop_assert_eq!(rank(&q).unwrap(), rank(&p).unwrap());
    }

    #[test]
    fn dense_and_sparse_elimination_agree(rows in small_matrix(8)) {
        let m = ExactMatrix::from_dense_i64(Field::prime(7).unwrap(), &rows);
        prop_assert_eq!(rank_dense(&m), rank_sparse(&m));
    }

    #[test]
    fn homology_dim_requires_a_complex(a in small_matrix(4), b_cols in 1usize..4, seed in prop::collection::vec(-2i64..=2, 16)) {
        let d_out = ExactMatrix::from_dense_i64(Field::Rational, &a);
        let mid = d_out.cols();
        let d_in_rows: Vec<Vec<i64>> = (0..mid).map(|r| (0..b_cols).map(|c| seed[(r * b_cols + c) % seed.len()]).collect()).collect();
        let d_in = ExactMatrix::from_dense_i64(Field::Rational, &d_in_rows);
        let composed_zero = d_out.mul(&d_in).unwrap().is_zero();
        match homology_dim(&d_in, &d_out) {
            Ok(h) => {
                prop_assert!(composed_zero);
                prop_assert_eq!(h, mid - rank(&d_out).unwrap() - rank(&d_in).unwrap());
            }
            Err(e) => {
                prop_assert!(!composed_zero);
                prop_assert_eq!(e, LinalgError::NotAComplex);
            }
        }
    }

    #[test]
    fn free_path_algebra_counts_paths(q in quiver_strategy(false)) {
        let a = build_algebra(&q, &RelationSet::empty(), 3, Field::Rational, &Limits::default()).unwrap();
        let dims = a.hilbert_function().dims;
        let expected = path_counts(&q, 3);
        if a.is_finite_dimensional() {
            prop_assert_eq!(&dims[..], &expected[..dims.len()]);
            prop_assert!(expected[dims.len()..].iter().all(|c| *c == 0));
        } else {
            prop_assert_eq!(dims, expected);
        }
    }

    #[test]
    fn quotients_are_associative_with_orthogonal_idempotents(
        q in quiver_strategy(false),
        picks in prop::collection::vec((0usize..16, 0usize..16, any::<bool>()), 0..4),
    ) {
        let rels = relations_for(&q, &picks);
        let a = build_algebra(&q, &rels, 3, Field::Rational, &Limits::default()).unwrap();
        a.check_associativity().unwrap();
        a.check_idempotents().unwrap();
    }

    #[test]
    fn arrow_relabelling_preserves_hilbert_data(
        q in quiver_strategy(false),
        picks in prop::collection::vec((0usize..16, 0usize..16, any::<bool>()), 0..4),
        shift in 1usize..50,
    ) {
        let rels = relations_for(&q, &picks);
        let a = build_algebra(&q, &rels, 3, Field::Rational, &Limits::default()).unwrap();
        let k = q.arrows().len();
        // reversed order and shifted ids
        let relabel = |id: usize| shift + (k - 1 - id);
        let arrows = q.arrows().iter().map(|x| Arrow { id: relabel(x.id), ..*x }).collect();
        let q2 = Quiver::new(q.vertex_count(), arrows).unwrap();
        let rels2 = RelationSet::new(
            rels.relations
                .iter()
                .map(|r| {
                    Relation::new(
                        r.terms
                            .iter()
                            .map(|(c, p)| (c.clone(), q2.path(&p.arrows.iter().map(|i| relabel(*i)).collect::<Vec<_>>()).unwrap()))
                            .collect(),
                    )
                    .unwrap()
                })
                .collect(),
        );
        let b = build_algebra(&q2, &rels2, 3, Field::Rational, &Limits::default()).unwrap();
        prop_assert_eq!(a.hilbert_function(), b.hilbert_function());
        prop_assert_eq!(a.hilbert_by_vertex_pair(), b.hilbert_by_vertex_pair());
    }

    #[test]
    fn format_round_trip(
        q in quiver_strategy(false),
        picks in prop::collection::vec((0usize..16, 0usize..16, any::<bool>()), 0..4),
    ) {
        let rels = relations_for(&q, &picks);
        let text = serialize(&q, &rels);
        let parsed = parse(&text).unwrap();
        prop_assert_eq!(&parsed.quiver, &q);
        prop_assert_eq!(&parsed.relations, &rels);
        prop_assert_eq!(serialize(&parsed.quiver, &parsed.relations), text);
    }

    #[test]
    fn zeroth_hochschild_cohomology_is_the_center(
        q in quiver_strategy(true),
        picks in prop::collection::vec((0usize..16, 0usize..16, any::<bool>()), 0..3),
    ) {
        let rels = relations_for(&q, &picks);
        let a = build_algebra(&q, &rels, 4, Field::Rational, &Limits::default()).unwrap();
        prop_assume!(a.is_finite_dimensional());
        let center: usize = (0..=a.top_degree()).map(|d| a.center_dim(d).unwrap()).sum();
        prop_assert_eq!(hh_cohomology(&a, 0, &Limits::default()).unwrap().values(), vec![center as u64]);
    }

    #[test]
    fn special_linear_duality(order in 2usize..6, raw in prop::collection::vec(0usize..6, 1..4), d in 0usize..5) {
        let mut weights: Vec<usize> = raw.iter().map(|w| w % order).collect();
        let head: usize = weights[..weights.len() - 1].iter().sum();
        *weights.last_mut().unwrap() = (order - head % order) % order;
        let action = CyclicActionSpec::new(order, weights).unwrap();
        prop_assert!(action.is_special_linear());
        let n = action.n_vars();
        for i in 0..=n {
            let coh = fixed_point_hh_cohomology(&FixedPointQuery { action: action.clone(), i, max_degree: d });
            let hom = fixed_point_hh_homology(&FixedPointQuery { action: action.clone(), i: n - i, max_degree: d });
            prop_assert_eq!(coh.values_at_degree(d as i64), hom.values_at_degree(d as i64));
        }
    }

    #[test]
    fn identity_summand_without_invariance_counts_all_forms(
        order in 1usize..6,
        raw in prop::collection::vec(0usize..6, 1..4),
        i in 0usize..4,
        d in 0usize..6,
    ) {
        let weights: Vec<usize> = raw.iter().map(|w| w % order).collect();
        let action = CyclicActionSpec::new(order, weights).unwrap();
        let n = action.n_vars();
        let all = fixed_coordinates(&action, 0);
        prop_assert_eq!(all.len(), n);
        let expected = if i <= n && i <= d {
            binomial((d - i + n - 1) as u64, (n - 1) as u64) * binomial(n as u64, i as u64)
        } else {
            0
        };
        prop_assert_eq!(count_forms(&action, &all, i, d, None), expected);
    }
}

#[test]
fn bott_serre_duality_and_vanishing() {
    for n in 2..=6usize {
        let top = n as i64 - 1;
        for p in 0..=top {
            for q in 0..=top {
                for m in -10..=10 {
                    assert_eq!(bott(n, p, q, m), bott(n, top - p, top - q, -m), "n={n} p={p} q={q} m={m}");
                    let allowed = q == 0 || q == top || (q == p && m == 0);
                    if !allowed {
                        assert_eq!(bott(n, p, q, m), 0);
                    }
                }
            }
        }
    }
}

#[test]
fn veronese_is_the_identity_summand() {
    for n in 1..=4 {
        let action = CyclicActionSpec::scalar(n);
        let v = veronese_hilbert(n, 8).unwrap();
        for d in 0..=8 {
            assert_eq!(fixed_point_summand(&action, Direction::Homology, 0, 0, d), v.dims[d] as u64, "n={n} d={d}");
        }
    }
}

#[test]
fn origin_only_fixed_point_count() {
    // for μ_r acting by scalars every g != 1 fixes only the origin
    for r in 2..=5 {
        let action = CyclicActionSpec::scalar(r);
        let isolated = (1..r).filter(|s| fixed_coordinates(&action, *s).is_empty()).count() as u64;
        let t = fixed_point_hh_homology(&FixedPointQuery { action, i: 0, max_degree: 0 });
        assert_eq!(t.get(0, Some(0)).unwrap(), isolated + 1);
    }
}
