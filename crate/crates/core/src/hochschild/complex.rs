//! Reduced Hochschild complexes relative to the vertex subalgebra `E = k^N`.
//!
//! With `J` the radical, the terms are
//!
//! * homology: `C_m = A ⊗_{E^e} J^{⊗_E m}`, basis `a ⊗ j1 ⊗ .. ⊗ jm` with the
//!   chain composable (`source(j_k) = target(j_{k+1})`) and closed up by `a`
//!   (`source(a) = target(j1)`, `target(a) = source(jm)`);
//! * cohomology: `C^m = Hom_{E^e}(J^{⊗_E m}, A)`, basis `(j1 ⊗ .. ⊗ jm ↦ a)`
//!   with `a` parallel to the chain.
//!
//! Differentials:
//!
//! ```text
//! b(a ⊗ j1..jm)   = a·j1 ⊗ j2..jm + Σ_{i<m} (-1)^i a ⊗ ..(ji·ji+1).. + (-1)^m jm·a ⊗ j1..jm-1
//! δf(j1..jm+1)    = j1·f(j2..) + Σ_{i≤m} (-1)^i f(..(ji·ji+1)..) + (-1)^{m+1} f(j1..jm)·jm+1
//! ```
//!
//! The internal degree of a homology cell is `deg a + Σ deg j`, of a cochain
//! cell `deg a - Σ deg j`; both differentials preserve it.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::GradedAlgebra;
use crate::limits::Limits;
use crate::linalg::{kernel_basis, rank, ExactMatrix, Field, FieldScalar, SparseVec};

use super::HochschildError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Homology,
    Cohomology,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Homology => "homology",
            Direction::Cohomology => "cohomology",
        })
    }
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "homology" | "hom" => Ok(Direction::Homology),
            "cohomology" | "cohom" => Ok(Direction::Cohomology),
            other => Err(format!("unknown direction `{other}` (expected homology or cohomology)")),
        }
    }
}

/// Composable chains of radical basis elements of one length.
#[derive(Default)]
struct Chains {
    chains: Vec<Vec<u32>>,
    degrees: Vec<usize>,
    index: HashMap<Vec<u32>, u32>,
}

impl Chains {
    fn push(&mut self, c: Vec<u32>, degree: usize) {
        self.index.insert(c.clone(), self.chains.len() as u32);
        self.chains.push(c);
        self.degrees.push(degree);
    }

    fn len(&self) -> usize {
        self.chains.len()
    }
}

/// Cells `(chain, coefficient element)` of one term.
#[derive(Default)]
struct Term {
    cells: Vec<(u32, u32)>,
    index: HashMap<(u32, u32), usize>,
    by_chain: HashMap<u32, Vec<(u32, usize)>>,
}

impl Term {
    fn push(&mut self, chain: u32, a: u32) {
        let k = self.cells.len();
        self.cells.push((chain, a));
        self.index.insert((chain, a), k);
        self.by_chain.entry(chain).or_default().push((a, k));
    }

    fn cell(&self, chain: u32, a: u32) -> Result<usize, HochschildError> {
        self.index
            .get(&(chain, a))
            .copied()
            .ok_or_else(|| HochschildError::Invariant(format!("differential leaves the complex at chain {chain}, element {a}")))
    }
}

/// A finite stretch `C_0 .. C_len` of a reduced Hochschild complex.
#[derive(Clone, Debug)]
pub struct RelativeBarComplex {
    direction: Direction,
    internal_degree: Option<i64>,
    dims: Vec<usize>,
    /// `maps[k]` connects terms `k` and `k+1`: `C_{k+1} -> C_k` for homology,
    /// `C^k -> C^{k+1}` for cohomology.
    maps: Vec<ExactMatrix>,
    /// Whether every term beyond the last one built vanishes.
    complete: bool,
    field: Field,
}

struct Builder<'a> {
    alg: &'a GradedAlgebra,
    direction: Direction,
    window: Option<i64>,
    /// Basis indices by `(source, target)`.
    parallel: HashMap<(usize, usize), Vec<u32>>,
    signs: [FieldScalar; 2],
}

impl<'a> Builder<'a> {
    fn new(alg: &'a GradedAlgebra, direction: Direction, window: Option<i64>) -> Self {
        let mut parallel: HashMap<(usize, usize), Vec<u32>> = HashMap::new();
        for (i, b) in alg.basis().iter().enumerate() {
            parallel.entry((b.source, b.target)).or_default().push(i as u32);
        }
        let f = alg.field();
        Builder { alg, direction, window, parallel, signs: [f.one(), f.from_i64(-1)] }
    }

    fn sign(&self, k: usize) -> &FieldScalar {
        &self.signs[k % 2]
    }

    /// Largest total chain degree that can still carry a cell.
    fn chain_degree_cap(&self) -> Option<usize> {
        match (self.direction, self.window) {
            (Direction::Homology, Some(d)) => Some(d.max(0) as usize),
            (Direction::Cohomology, Some(d)) if self.alg.is_finite_dimensional() => {
                Some((self.alg.top_degree() as i64 - d).max(0) as usize)
            }
            _ if self.alg.is_finite_dimensional() => None,
            _ => Some(usize::MAX),
        }
    }

    fn extend(&self, prev: &Chains, first: bool) -> Chains {
        let mut next = Chains::default();
        let cap = self.chain_degree_cap();
        let radical: Vec<usize> = self.alg.radical().collect();
        if first {
            for &j in &radical {
                let deg = self.alg.element(j).degree;
                if cap.is_none_or(|c| deg <= c) {
                    next.push(vec![j as u32], deg);
                }
            }
            return next;
        }
        for (c, &deg) in prev.chains.iter().zip(&prev.degrees) {
            let last = self.alg.element(*c.last().expect("nonempty chain") as usize);
            for &j in &radical {
                let e = self.alg.element(j);
                if e.target != last.source {
                    continue;
                }
                let total = deg + e.degree;
                if cap.is_none_or(|cap| total <= cap) {
                    let mut c2 = c.clone();
                    c2.push(j as u32);
                    next.push(c2, total);
                }
            }
        }
        next
    }

    /// Source and target of a chain as an element of `J^{⊗m}`: the chain runs
    /// from `source(jm)` to `target(j1)`. `None` for the empty chain.
    fn ends(&self, c: &[u32]) -> Option<(usize, usize)> {
        let first = self.alg.element(*c.first()? as usize);
        let last = self.alg.element(*c.last()? as usize);
        Some((last.source, first.target))
    }

    fn admissible(&self, chain_degree: usize, a_degree: usize) -> bool {
        let Some(d) = self.window else { return true };
        match self.direction {
            Direction::Homology => (a_degree + chain_degree) as i64 == d,
            Direction::Cohomology => a_degree as i64 - chain_degree as i64 == d,
        }
    }

    fn term(&self, chains: &Chains, empty: bool) -> Term {
        let mut term = Term::default();
        if empty {
            for (i, b) in self.alg.basis().iter().enumerate() {
                if b.source == b.target && self.admissible(0, b.degree) {
                    term.push(0, i as u32);
                }
            }
            return term;
        }
        for (ci, c) in chains.chains.iter().enumerate() {
            let (src, dst) = self.ends(c).expect("nonempty chain");
            // homology closes the loop with a: dst -> src; cohomology needs a parallel to the chain
            let key = match self.direction {
                Direction::Homology => (dst, src),
                Direction::Cohomology => (src, dst),
            };
            for &a in self.parallel.get(&key).into_iter().flatten() {
                if self.admissible(chains.degrees[ci], self.alg.element(a as usize).degree) {
                    term.push(ci as u32, a);
                }
            }
        }
        term
    }

    fn mul(&self, x: u32, y: u32) -> Result<SparseVec, HochschildError> {
        Ok(self.alg.mul(x as usize, y as usize)?)
    }

    /// Homology boundary `C_m -> C_{m-1}`, `m >= 1`.
    fn boundary(
        &self,
        m: usize,
        chains: &Chains,
        term: &Term,
        lower_chains: &Chains,
        lower: &Term,
    ) -> Result<ExactMatrix, HochschildError> {
        let lookup = |c: &[u32]| -> Result<u32, HochschildError> {
            if c.is_empty() {
                return Ok(0);
            }
            lower_chains
                .index
                .get(c)
                .copied()
                .ok_or_else(|| HochschildError::Invariant("boundary leaves the chain set".into()))
        };
        let mut trip = Vec::new();
        for (col, &(ci, a)) in term.cells.iter().enumerate() {
            let c = &chains.chains[ci as usize];
            let tail = lookup(&c[1..])?;
            for (b, coef) in self.mul(a, c[0])?.entries() {
                trip.push((lower.cell(tail, *b as u32)?, col, coef.clone()));
            }
            for i in 1..m {
                let prod = self.mul(c[i - 1], c[i])?;
                for (k, coef) in prod.entries() {
                    let mut merged = Vec::with_capacity(m - 1);
                    merged.extend_from_slice(&c[..i - 1]);
                    merged.push(*k as u32);
                    merged.extend_from_slice(&c[i + 1..]);
                    let row = lower.cell(lookup(&merged)?, a)?;
                    trip.push((row, col, coef.mul(self.sign(i))));
                }
            }
            let head = lookup(&c[..m - 1])?;
            for (b, coef) in self.mul(c[m - 1], a)?.entries() {
                trip.push((lower.cell(head, *b as u32)?, col, coef.mul(self.sign(m))));
            }
        }
        Ok(ExactMatrix::from_triplets(lower.cells.len(), term.cells.len(), self.alg.field(), trip)?)
    }

    /// Cochain differential `C^m -> C^{m+1}`.
    fn coboundary(
        &self,
        m: usize,
        chains: &Chains,
        term: &Term,
        upper_chains: &Chains,
        upper: &Term,
    ) -> Result<ExactMatrix, HochschildError> {
        let lookup = |c: &[u32]| -> Option<u32> {
            if c.is_empty() {
                Some(0)
            } else {
                chains.index.get(c).copied()
            }
        };
        let mut trip = Vec::new();
        for (uc, c) in upper_chains.chains.iter().enumerate() {
            let uc = uc as u32;
            if !upper.by_chain.contains_key(&uc) {
                continue;
            }
            if let Some(tail) = lookup(&c[1..]) {
                for &(a, col) in term.by_chain.get(&tail).into_iter().flatten() {
                    for (b, coef) in self.mul(c[0], a)?.entries() {
                        trip.push((upper.cell(uc, *b as u32)?, col, coef.clone()));
                    }
                }
            }
            for i in 1..=m {
                let prod = self.mul(c[i - 1], c[i])?;
                for (k, coef) in prod.entries() {
                    let mut merged = Vec::with_capacity(m);
                    merged.extend_from_slice(&c[..i - 1]);
                    merged.push(*k as u32);
                    merged.extend_from_slice(&c[i + 1..]);
                    let Some(u) = lookup(&merged) else { continue };
                    let s = coef.mul(self.sign(i));
                    for &(a, col) in term.by_chain.get(&u).into_iter().flatten() {
                        trip.push((upper.cell(uc, a)?, col, s.clone()));
                    }
                }
            }
            if let Some(head) = lookup(&c[..m]) {
                for &(a, col) in term.by_chain.get(&head).into_iter().flatten() {
                    for (b, coef) in self.mul(a, c[m])?.entries() {
                        trip.push((upper.cell(uc, *b as u32)?, col, coef.mul(self.sign(m + 1))));
                    }
                }
            }
        }
        Ok(ExactMatrix::from_triplets(upper.cells.len(), term.cells.len(), self.alg.field(), trip)?)
    }
}

impl RelativeBarComplex {
    /// Builds terms `0..=len` and the maps between them, then verifies that
    /// consecutive maps compose to zero.
    pub fn build(
        alg: &GradedAlgebra,
        direction: Direction,
        internal_degree: Option<i64>,
        len: usize,
        limits: &Limits,
    ) -> Result<Self, HochschildError> {
        if !alg.is_finite_dimensional() {
            let ok = direction == Direction::Homology
                && internal_degree.is_some_and(|d| d >= 0 && alg.truncation().covers(d as usize));
            if !ok {
                return Err(HochschildError::InfiniteDimensional(alg.name().to_string()));
            }
        }
        let builder = Builder::new(alg, direction, internal_degree);
        let mut chains = vec![Chains::default()];
        let mut terms = vec![builder.term(&chains[0], true)];
        for m in 1..=len + 1 {
            let next = builder.extend(&chains[m - 1], m == 1);
            limits.check_dim("chain set", next.len()).map_err(HochschildError::Resource)?;
            let term = builder.term(&next, false);
            limits.check_dim(&format!("term {m}"), term.cells.len()).map_err(HochschildError::Resource)?;
            chains.push(next);
            terms.push(term);
        }
        let complete = terms[len + 1].cells.is_empty();
        let maps = (0..len)
            .into_par_iter()
            .map(|k| match direction {
                Direction::Homology => builder.boundary(k + 1, &chains[k + 1], &terms[k + 1], &chains[k], &terms[k]),
                Direction::Cohomology => builder.coboundary(k, &chains[k], &terms[k], &chains[k + 1], &terms[k + 1]),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let entries: usize = maps.iter().map(ExactMatrix::nnz).sum();
        limits.check_entries("differentials", entries).map_err(HochschildError::Resource)?;
        let complex = RelativeBarComplex {
            direction,
            internal_degree,
            dims: terms[..=len].iter().map(|t| t.cells.len()).collect(),
            maps,
            complete,
            field: alg.field(),
        };
        complex.check_square_zero()?;
        Ok(complex)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn internal_degree(&self) -> Option<i64> {
        self.internal_degree
    }

    pub fn term_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Map between terms `k` and `k+1` (see the struct docs for direction).
    pub fn map(&self, k: usize) -> &ExactMatrix {
        &self.maps[k]
    }

    fn check_square_zero(&self) -> Result<(), HochschildError> {
        for k in 0..self.maps.len().saturating_sub(1) {
            let comp = match self.direction {
                Direction::Homology => self.maps[k].mul(&self.maps[k + 1])?,
                Direction::Cohomology => self.maps[k + 1].mul(&self.maps[k])?,
            };
            if !comp.is_zero() {
                return Err(HochschildError::Invariant(format!("{} differential squares to nonzero at {k}", self.direction)));
            }
        }
        Ok(())
    }

    /// Homology dimensions `H_0 ..` as far as certified: through the last
    /// built term when the complex is complete, one short of it otherwise.
    ///
    /// Each value is `dim ker(out) - rank(in)`; when the complex is complete
    /// the Euler characteristic is compared against the term dimensions.
    pub fn homology(&self) -> Result<Vec<u64>, HochschildError> {
        let len = self.dims.len() - 1;
        let ranks: Vec<usize> = self.maps.par_iter().map(rank).collect::<Result<_, _>>()?;
        // kernel of the map leaving term m
        let out_of = |m: usize| -> Option<&ExactMatrix> {
            match self.direction {
                Direction::Homology => m.checked_sub(1).map(|k| &self.maps[k]),
                Direction::Cohomology => self.maps.get(m),
            }
        };
        let incoming_rank = |m: usize| -> usize {
            match self.direction {
                Direction::Homology => ranks.get(m).copied().unwrap_or(0),
                Direction::Cohomology => m.checked_sub(1).map_or(0, |k| ranks[k]),
            }
        };
        let certified = if self.complete { len + 1 } else { len };
        let kernels: Vec<usize> = (0..=len)
            .into_par_iter()
            .map(|m| match out_of(m) {
                Some(d) => kernel_basis(d).map(|k| k.dim()),
                None => Ok(self.dims[m]),
            })
            .collect::<Result<_, _>>()?;
        let raw: Vec<i64> = (0..=len).map(|m| kernels[m] as i64 - incoming_rank(m) as i64).collect();
        if self.complete {
            let euler_terms: i64 = self.dims.iter().enumerate().map(|(m, d)| sign_i(m) * *d as i64).sum();
            let euler_h: i64 = raw.iter().enumerate().map(|(m, h)| sign_i(m) * h).sum();
            if euler_terms != euler_h {
                return Err(HochschildError::Invariant(format!(
                    "Euler characteristic mismatch: terms {euler_terms}, homology {euler_h}"
                )));
            }
        }
        raw[..certified]
            .iter()
            .map(|h| u64::try_from(*h).map_err(|_| HochschildError::Invariant("negative homology".into())))
            .collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

fn sign_i(m: usize) -> i64 {
    if m % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{beilinson, dual_numbers, kronecker, BeilinsonSpec, Variant};

    #[test]
    fn dual_numbers_terms() {
        let a = dual_numbers(Field::Rational).unwrap();
        let c = RelativeBarComplex::build(&a, Direction::Cohomology, None, 3, &Limits::default()).unwrap();
        // C^m has basis x^{⊗m} -> {1, x}
        assert_eq!(c.term_dims(), &[2, 2, 2, 2]);
        assert!(!c.is_complete());
        assert_eq!(c.homology().unwrap(), vec![2, 1, 1]);
    }

    #[test]
    fn kronecker_complexes_are_complete() {
        let a = kronecker(Field::Rational).unwrap();
        let h = RelativeBarComplex::build(&a, Direction::Homology, None, 2, &Limits::default()).unwrap();
        assert!(h.is_complete());
        assert_eq!(h.homology().unwrap(), vec![2, 0, 0]);
        let c = RelativeBarComplex::build(&a, Direction::Cohomology, None, 2, &Limits::default()).unwrap();
        assert_eq!(c.homology().unwrap(), vec![1, 3, 0]);
    }

    #[test]
    fn internal_degrees_split_the_complex() {
        let a = beilinson(&BeilinsonSpec { n: 3, variant: Variant::Symmetric }, Field::Rational).unwrap();
        let whole = RelativeBarComplex::build(&a, Direction::Cohomology, None, 3, &Limits::default()).unwrap();
        let mut summed = vec![0u64; 4];
        for d in -2..=2 {
            let w = RelativeBarComplex::build(&a, Direction::Cohomology, Some(d), 3, &Limits::default()).unwrap();
            for (i, h) in w.homology().unwrap().iter().enumerate() {
                summed[i] += h;
            }
        }
        assert_eq!(whole.homology().unwrap(), summed);
    }

    #[test]
    fn infinite_algebra_needs_a_homology_window() {
        let a = crate::constructions::rolled_up(2, 3, Field::Rational, &Limits::default()).unwrap();
        assert!(RelativeBarComplex::build(&a, Direction::Cohomology, Some(1), 2, &Limits::default()).is_err());
        assert!(RelativeBarComplex::build(&a, Direction::Homology, None, 2, &Limits::default()).is_err());
        assert!(RelativeBarComplex::build(&a, Direction::Homology, Some(4), 2, &Limits::default()).is_err());
        let c = RelativeBarComplex::build(&a, Direction::Homology, Some(2), 3, &Limits::default()).unwrap();
        assert!(c.is_complete());
    }
}
