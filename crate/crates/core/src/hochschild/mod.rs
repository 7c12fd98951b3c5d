//! Hochschild (co)homology, minimal resolutions, global dimension and Ext.

pub mod complex;
pub mod full_bar;
pub mod resolution;

pub use complex::{Direction, RelativeBarComplex};
pub use full_bar::full_bar_dims;
pub use resolution::{minimal_resolution, ProjectiveSum, Resolution, ResolutionStatus, ResolutionStep};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{simple_module, AlgebraError, GradedAlgebra};
use crate::limits::Limits;
use crate::linalg::LinalgError;
use crate::table::{DimTable, Window};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HochschildError {
    #[error("{0} is infinite-dimensional; an internal-degree window is required")]
    InfiniteDimensional(String),
    #[error("insufficient precision: {} but the algebra is certified only through degree {available}", needed_text(*.needed))]
    InsufficientPrecision { needed: Option<usize>, available: usize },
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn needed_text(needed: Option<usize>) -> String {
    match needed {
        Some(d) => format!("degree {d} is needed"),
        None => "every degree is needed".to_string(),
    }
}

fn is_semisimple(a: &GradedAlgebra) -> bool {
    a.radical().is_empty()
}

fn require_finite(a: &GradedAlgebra) -> Result<(), HochschildError> {
    if a.is_finite_dimensional() {
        Ok(())
    } else {
        Err(HochschildError::InfiniteDimensional(a.name().to_string()))
    }
}

fn ungraded(a: &GradedAlgebra, direction: Direction, max_i: usize, limits: &Limits) -> Result<DimTable, HochschildError> {
    require_finite(a)?;
    if is_semisimple(a) {
        let mut v = vec![0; max_i + 1];
        v[0] = a.vertex_count() as u64;
        return Ok(DimTable::from_ungraded(&v));
    }
    let c = RelativeBarComplex::build(a, direction, None, max_i + 1, limits)?;
    let h = c.homology()?;
    Ok(DimTable::from_ungraded(&h[..=max_i]))
}

/// `dim HH^i(A)` for `0 <= i <= max_i`; `A` must be finite-dimensional.
pub fn hh_cohomology(a: &GradedAlgebra, max_i: usize, limits: &Limits) -> Result<DimTable, HochschildError> {
    ungraded(a, Direction::Cohomology, max_i, limits)
}

/// `dim HH_i(A)` for `0 <= i <= max_i`; `A` must be finite-dimensional.
pub fn hh_homology(a: &GradedAlgebra, max_i: usize, limits: &Limits) -> Result<DimTable, HochschildError> {
    ungraded(a, Direction::Homology, max_i, limits)
}

/// Internal-degree-`d` part of `HH_i` or `HH^i` for `0 <= i <= max_i`.
///
/// Homology windows only need the algebra through degree `d`, so truncated
/// algebras are fine; graded cohomology needs the full (finite) algebra.
pub fn hh_graded(
    a: &GradedAlgebra,
    direction: Direction,
    degree: i64,
    max_i: usize,
    limits: &Limits,
) -> Result<DimTable, HochschildError> {
    let window = Window::graded(0, max_i as i64, degree, degree);
    let mut table = DimTable::new(window);
    match direction {
        Direction::Homology => {
            if degree < 0 {
                return Ok(table);
            }
            if let Some(bound) = a.truncation().bound() {
                if degree as usize > bound {
                    return Err(HochschildError::InsufficientPrecision { needed: Some(degree as usize), available: bound });
                }
            }
        }
        Direction::Cohomology => require_finite(a)?,
    }
    if is_semisimple(a) {
        if degree == 0 {
            table.set(0, Some(0), a.vertex_count() as u64).expect("inside window");
        }
        return Ok(table);
    }
    let c = RelativeBarComplex::build(a, direction, Some(degree), max_i + 1, limits)?;
    for (i, h) in c.homology()?.into_iter().take(max_i + 1).enumerate() {
        table.set(i as i64, Some(degree), h).expect("inside window");
    }
    Ok(table)
}

/// Graded tables for every degree in `degrees`, computed in parallel and merged.
pub fn hh_graded_range(
    a: &GradedAlgebra,
    direction: Direction,
    degrees: std::ops::RangeInclusive<i64>,
    max_i: usize,
    limits: &Limits,
) -> Result<DimTable, HochschildError> {
    let (lo, hi) = (*degrees.start(), *degrees.end());
    if lo > hi {
        return Err(HochschildError::Params(format!("empty degree range {lo}..={hi}")));
    }
    let tables: Vec<DimTable> =
        degrees.into_par_iter().map(|d| hh_graded(a, direction, d, max_i, limits)).collect::<Result<_, _>>()?;
    Ok(tables.iter().skip(1).fold(tables[0].clone(), |acc, t| acc.merge(t)))
}

/// Resolution of every simple module, in parallel.
fn simple_resolutions(a: &GradedAlgebra, max_len: usize, limits: &Limits) -> Result<Vec<Resolution>, HochschildError> {
    require_finite(a)?;
    (0..a.vertex_count())
        .into_par_iter()
        .map(|v| minimal_resolution(a, &simple_module(a, v)?, max_len, None, limits))
        .collect()
}

/// `pd S_v` for every vertex, `None` where the resolution is longer than `max_len`.
pub fn simple_projective_dimensions(
    a: &GradedAlgebra,
    max_len: usize,
    limits: &Limits,
) -> Result<Vec<Option<usize>>, HochschildError> {
    Ok(simple_resolutions(a, max_len, limits)?.iter().map(Resolution::projective_dimension).collect())
}

/// `max_v pd S_v`, or `None` when some resolution is longer than `max_len`.
pub fn global_dimension(a: &GradedAlgebra, max_len: usize, limits: &Limits) -> Result<Option<usize>, HochschildError> {
    let pds = simple_projective_dimensions(a, max_len, limits)?;
    Ok(pds.into_iter().collect::<Option<Vec<_>>>().map(|v| v.into_iter().max().unwrap_or(0)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Smoothness {
    Smooth { global_dimension: usize },
    NotSmoothUpToBound { bound: usize },
}

/// Smooth exactly when the global dimension is finite (within `max_len`).
pub fn smoothness_check(a: &GradedAlgebra, max_len: usize, limits: &Limits) -> Result<Smoothness, HochschildError> {
    Ok(match global_dimension(a, max_len, limits)? {
        Some(g) => Smoothness::Smooth { global_dimension: g },
        None => Smoothness::NotSmoothUpToBound { bound: max_len },
    })
}

/// `dim Ext^i(A/J, A/J)` for `0 <= i <= max_i`, read off cover multiplicities.
pub fn ext_algebra_dims(a: &GradedAlgebra, max_i: usize, limits: &Limits) -> Result<DimTable, HochschildError> {
    let res = simple_resolutions(a, max_i, limits)?;
    let dims: Vec<u64> = (0..=max_i).map(|i| res.iter().map(|r| r.rank_at(i) as u64).sum()).collect();
    Ok(DimTable::from_ungraded(&dims))
}

/// Projective dimension of the simple at `vertex` resolved through internal
/// degree `window`; `None` when longer than `max_len`.
pub fn projective_dimension_graded(
    a: &GradedAlgebra,
    vertex: usize,
    window: usize,
    max_len: usize,
    limits: &Limits,
) -> Result<Option<usize>, HochschildError> {
    let s = simple_module(a, vertex)?;
    Ok(minimal_resolution(a, &s, max_len, Some(window), limits)?.projective_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{beilinson, dual_numbers, kronecker, rolled_up, BeilinsonSpec, Variant};
    use crate::linalg::Field;

    fn a0(n: usize) -> GradedAlgebra {
        beilinson(&BeilinsonSpec { n, variant: Variant::Symmetric }, Field::Rational).unwrap()
    }

    fn a1(n: usize) -> GradedAlgebra {
        beilinson(&BeilinsonSpec { n, variant: Variant::Exterior }, Field::Rational).unwrap()
    }

    #[test]
    fn reduced_matches_unreduced_on_small_algebras() {
        let l = Limits::default();
        for a in [dual_numbers(Field::Rational).unwrap(), kronecker(Field::Rational).unwrap()] {
            for dir in [Direction::Homology, Direction::Cohomology] {
                let full = full_bar_dims(&a, dir, 3, &l).unwrap();
                let reduced = ungraded(&a, dir, 3, &l).unwrap().values();
                assert_eq!(full, reduced, "{} {dir}", a.name());
            }
        }
    }

    #[test]
    fn beilinson_cohomology() {
        let l = Limits::default();
        assert_eq!(hh_cohomology(&a0(2), 3, &l).unwrap().values(), vec![1, 3, 0, 0]);
        assert_eq!(hh_cohomology(&a0(3), 4, &l).unwrap().values(), vec![1, 8, 10, 0, 0]);
        assert_eq!(hh_homology(&a0(3), 3, &l).unwrap().values(), vec![3, 0, 0, 0]);
    }

    #[test]
    fn dual_numbers_hochschild() {
        let l = Limits::default();
        let a = dual_numbers(Field::Rational).unwrap();
        assert_eq!(hh_cohomology(&a, 2, &l).unwrap().values(), vec![2, 1, 1]);
        assert_eq!(hh_homology(&a, 2, &l).unwrap().values(), vec![2, 1, 1]);
    }

    #[test]
    fn rolled_up_graded_homology() {
        let l = Limits::default();
        let b = rolled_up(2, 4, Field::Rational, &l).unwrap();
        assert_eq!(hh_graded(&b, Direction::Homology, 0, 2, &l).unwrap().values_at_degree(0), vec![2, 0, 0]);
        assert_eq!(hh_graded(&b, Direction::Homology, 2, 3, &l).unwrap().values_at_degree(2), vec![3, 4, 1, 0]);
        assert!(matches!(
            hh_graded(&b, Direction::Homology, 5, 1, &l),
            Err(HochschildError::InsufficientPrecision { needed: Some(5), available: 4 })
        ));
    }

    #[test]
    fn dimensions_and_duality() {
        let l = Limits::default();
        for n in 2..=4 {
            assert_eq!(global_dimension(&a0(n), 6, &l).unwrap(), Some(n - 1));
        }
        for n in 2..=3 {
            assert_eq!(global_dimension(&a1(n), 6, &l).unwrap(), Some(n - 1));
        }
        assert_eq!(ext_algebra_dims(&a0(3), 2, &l).unwrap().values(), vec![3, 6, 3]);
        assert_eq!(ext_algebra_dims(&a1(3), 2, &l).unwrap().values(), vec![3, 6, 6]);
        let dual = dual_numbers(Field::Rational).unwrap();
        assert_eq!(smoothness_check(&dual, 5, &l).unwrap(), Smoothness::NotSmoothUpToBound { bound: 5 });
    }

    #[test]
    fn rolled_up_projective_dimension() {
        let l = Limits::default();
        for n in 2..=3 {
            let b = rolled_up(n, 2 * n, Field::Rational, &l).unwrap();
            for v in 0..n {
                assert_eq!(projective_dimension_graded(&b, v, 2 * n, 2 * n, &l).unwrap(), Some(n));
            }
        }
    }
}
