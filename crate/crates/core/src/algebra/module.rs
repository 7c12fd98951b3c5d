use std::collections::HashMap;

use crate::linalg::SparseVec;

use super::graded::GradedAlgebra;
use super::AlgebraError;

/// A basis vector of a graded right module, living in `M·e_vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleBasis {
    pub vertex: usize,
    pub degree: usize,
}

/// A finite-dimensional graded right module given by an explicit action table.
#[derive(Clone, Debug)]
pub struct AlgebraModule {
    basis: Vec<ModuleBasis>,
    /// `(module basis, algebra basis) -> m·a`; absent entries act by zero.
    action: HashMap<(usize, usize), SparseVec>,
}

impl AlgebraModule {
    pub fn new(
        algebra: &GradedAlgebra,
        basis: Vec<ModuleBasis>,
        action: HashMap<(usize, usize), SparseVec>,
    ) -> Result<Self, AlgebraError> {
        for b in &basis {
            if b.vertex >= algebra.vertex_count() {
                return Err(AlgebraError::VertexOutOfRange(b.vertex, algebra.vertex_count()));
            }
        }
        for (&(m, a), v) in &action {
            let el = algebra.element(a);
            for (k, _) in v.entries() {
                let (src, dst) = (basis[m], basis[*k]);
                // m·a lives at the source of a and one degree step up
                if src.vertex != el.target || dst.vertex != el.source || dst.degree != src.degree + el.degree {
                    return Err(AlgebraError::Invariant(format!("action of basis {a} on module vector {m} is not graded")));
                }
            }
        }
        let module = AlgebraModule { basis, action };
        // unital: e_v acts as identity on M·e_v
        for (m, b) in module.basis.iter().enumerate() {
            if module.act(m, algebra.idempotent(b.vertex)) != SparseVec::unit(m, algebra.field()) {
                return Err(AlgebraError::Invariant(format!("e{} does not fix module vector {m}", b.vertex)));
            }
        }
        Ok(module)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ModuleBasis] {
        &self.basis
    }

    pub fn act(&self, m: usize, a: usize) -> SparseVec {
        self.action.get(&(m, a)).cloned().unwrap_or_default()
    }

    /// Checks `(m·a)·b = m·(a·b)` on all certified triples.
    pub fn check_associativity(&self, algebra: &GradedAlgebra) -> Result<(), AlgebraError> {
        for m in 0..self.dim() {
            for a in 0..algebra.dim() {
                for b in 0..algebra.dim() {
                    let deg = algebra.element(a).degree + algebra.element(b).degree;
                    if !algebra.truncation().covers(deg) {
                        continue;
                    }
                    let ma = self.act(m, a);
                    let left = ma.entries().iter().fold(SparseVec::new(), |acc, (k, c)| acc.axpy(c, &self.act(*k, b)));
                    let ab = algebra.mul(a, b)?;
                    let right = ab.entries().iter().fold(SparseVec::new(), |acc, (k, c)| acc.axpy(c, &self.act(m, *k)));
                    if left != right {
                        return Err(AlgebraError::Invariant(format!("module action not associative at ({m},{a},{b})")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The simple right module `S_i = e_i A / e_i rad A`.
pub fn simple_module(algebra: &GradedAlgebra, vertex: usize) -> Result<AlgebraModule, AlgebraError> {
    if vertex >= algebra.vertex_count() {
        return Err(AlgebraError::VertexOutOfRange(vertex, algebra.vertex_count()));
    }
    let mut action = HashMap::new();
    action.insert((0, algebra.idempotent(vertex)), SparseVec::unit(0, algebra.field()));
    AlgebraModule::new(algebra, vec![ModuleBasis { vertex, degree: 0 }], action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{beilinson, dual_numbers, kronecker, BeilinsonSpec, Variant};
    use crate::linalg::Field;

    #[test]
    fn kronecker_simple() {
        let a = kronecker(Field::Rational).unwrap();
        let s = simple_module(&a, 0).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.act(0, 0).entries()[0].1.is_one());
        for b in 1..a.dim() {
            assert!(s.act(0, b).is_zero());
        }
        s.check_associativity(&a).unwrap();
        assert!(matches!(simple_module(&a, 2), Err(AlgebraError::VertexOutOfRange(2, 2))));
    }

    #[test]
    fn dual_numbers_simple() {
        let a = dual_numbers(Field::Rational).unwrap();
        let s = simple_module(&a, 0).unwrap();
        assert!(s.act(0, 1).is_zero());
    }

    #[test]
    fn beilinson_simple_is_a_module() {
        let a = beilinson(&BeilinsonSpec { n: 2, variant: Variant::Symmetric }, Field::Rational).unwrap();
        simple_module(&a, 1).unwrap().check_associativity(&a).unwrap();
    }
}
