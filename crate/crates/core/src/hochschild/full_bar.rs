//! The unreduced Hochschild complex over the ground field, used only to
//! validate the reduced relative engine on tiny algebras.
//!
//! Homology uses `C_m = A^{⊗(m+1)}`, cohomology `C^m = Hom_k(A^{⊗m}, A)`, with
//! the textbook differentials. Term sizes grow like `dim(A)^m`.

use crate::algebra::GradedAlgebra;
use crate::limits::Limits;
use crate::linalg::{homology_dim, ExactMatrix, FieldScalar, SparseVec};

use super::{Direction, HochschildError};

fn tuple_index(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, x| acc * base + x)
}

fn tuples(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |x| {
                    let mut t2 = t.clone();
                    t2.push(x);
                    t2
                })
            })
            .collect();
    }
    out
}

fn merged(t: &[usize], i: usize, y: usize) -> Vec<usize> {
    let mut m = Vec::with_capacity(t.len() - 1);
    m.extend_from_slice(&t[..i]);
    m.push(y);
    m.extend_from_slice(&t[i + 2..]);
    m
}

struct Ctx<'a> {
    alg: &'a GradedAlgebra,
    n: usize,
    minus: FieldScalar,
}

impl Ctx<'_> {
    fn mul(&self, x: usize, y: usize) -> Result<SparseVec, HochschildError> {
        Ok(self.alg.mul(x, y)?)
    }

    fn signed(&self, c: &FieldScalar, k: usize) -> FieldScalar {
        if k % 2 == 0 {
            c.clone()
        } else {
            c.mul(&self.minus)
        }
    }

    /// `b: A^{⊗(m+1)} -> A^{⊗m}`, `m >= 1`.
    fn boundary(&self, m: usize) -> Result<ExactMatrix, HochschildError> {
        let n = self.n;
        let mut trip = Vec::new();
        for t in tuples(m + 1, n) {
            let col = tuple_index(&t, n);
            for i in 0..m {
                for (y, c) in self.mul(t[i], t[i + 1])?.entries() {
                    trip.push((tuple_index(&merged(&t, i, *y), n), col, self.signed(c, i)));
                }
            }
            for (y, c) in self.mul(t[m], t[0])?.entries() {
                let mut rot = Vec::with_capacity(m);
                rot.push(*y);
                rot.extend_from_slice(&t[1..m]);
                trip.push((tuple_index(&rot, n), col, self.signed(c, m)));
            }
        }
        Ok(ExactMatrix::from_triplets(n.pow(m as u32), n.pow(m as u32 + 1), self.alg.field(), trip)?)
    }

    /// `δ: Hom(A^{⊗m}, A) -> Hom(A^{⊗(m+1)}, A)`; cell `(t, b)` has index
    /// `tuple_index(t) * n + b`.
    fn coboundary(&self, m: usize) -> Result<ExactMatrix, HochschildError> {
        let n = self.n;
        let mut trip = Vec::new();
        for t in tuples(m + 1, n) {
            let row_base = tuple_index(&t, n) * n;
            let tail = tuple_index(&t[1..], n) * n;
            let head = tuple_index(&t[..m], n) * n;
            for b in 0..n {
                for (y, c) in self.mul(t[0], b)?.entries() {
                    trip.push((row_base + y, tail + b, c.clone()));
                }
                for (y, c) in self.mul(b, t[m])?.entries() {
                    trip.push((row_base + y, head + b, self.signed(c, m + 1)));
                }
            }
            for i in 0..m {
                for (y, c) in self.mul(t[i], t[i + 1])?.entries() {
                    let col_base = tuple_index(&merged(&t, i, *y), n) * n;
                    for b in 0..n {
                        trip.push((row_base + b, col_base + b, self.signed(c, i + 1)));
                    }
                }
            }
        }
        let cols = n.pow(m as u32) * n;
        Ok(ExactMatrix::from_triplets(cols * n, cols, self.alg.field(), trip)?)
    }
}

/// `dim HH_i` or `dim HH^i` for `0 <= i <= max_i` from the unreduced complex.
pub fn full_bar_dims(
    alg: &GradedAlgebra,
    direction: Direction,
    max_i: usize,
    limits: &Limits,
) -> Result<Vec<u64>, HochschildError> {
    if !alg.is_finite_dimensional() {
        return Err(HochschildError::InfiniteDimensional(alg.name().to_string()));
    }
    let n = alg.dim();
    let biggest = (n as u128).pow(max_i as u32 + 2);
    limits
        .check_dim("unreduced bar term", usize::try_from(biggest).unwrap_or(usize::MAX))
        .map_err(HochschildError::Resource)?;
    let ctx = Ctx { alg, n, minus: alg.field().from_i64(-1) };
    let field = alg.field();
    let mut out = Vec::with_capacity(max_i + 1);
    match direction {
        Direction::Homology => {
            // d_in: C_{i+1} -> C_i, d_out: C_i -> C_{i-1}
            for i in 0..=max_i {
                let d_in = ctx.boundary(i + 1)?;
                let d_out = if i == 0 { ExactMatrix::zero(0, n, field) } else { ctx.boundary(i)? };
                out.push(homology_dim(&d_in, &d_out)? as u64);
            }
        }
        Direction::Cohomology => {
            for i in 0..=max_i {
                let d_in = if i == 0 { ExactMatrix::zero(n, 0, field) } else { ctx.coboundary(i - 1)? };
                let d_out = ctx.coboundary(i)?;
                out.push(homology_dim(&d_in, &d_out)? as u64);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dual_numbers;
    use crate::linalg::Field;

    #[test]
    fn dual_numbers_classical_values() {
        let a = dual_numbers(Field::Rational).unwrap();
        let l = Limits::default();
        assert_eq!(full_bar_dims(&a, Direction::Cohomology, 2, &l).unwrap(), vec![2, 1, 1]);
        assert_eq!(full_bar_dims(&a, Direction::Homology, 2, &l).unwrap(), vec![2, 1, 1]);
    }

    #[test]
    fn tuple_indexing() {
        assert_eq!(tuples(2, 3).len(), 9);
        assert_eq!(tuple_index(&[1, 2], 3), 5);
        assert_eq!(merged(&[4, 5, 6], 1, 9), vec![4, 9]);
    }
}
