use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::linalg::{kernel_basis, ExactMatrix, Field, FieldScalar, SparseVec};

use super::quiver::{Quiver, RelationSet};
use super::AlgebraError;

/// How far the basis of a graded algebra is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// The algebra vanishes above `top`; every degree is certified.
    Exhausted { top: usize },
    /// The basis is certified in degrees `0..=D` only.
    Degree(usize),
}

impl Truncation {
    /// Largest degree in which products are known, `None` meaning all.
    pub fn bound(&self) -> Option<usize> {
        match self {
            Truncation::Exhausted { .. } => None,
            Truncation::Degree(d) => Some(*d),
        }
    }

    pub fn covers(&self, degree: usize) -> bool {
        self.bound().is_none_or(|d| degree <= d)
    }
}

/// What a basis element is, for display and serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// A standard monomial of the quiver algebra, product-order arrow ids.
    Path(Vec<usize>),
    /// `x^exponents · e_character` in a twisted group algebra.
    Monomial { exponents: Vec<u32>, character: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub source: usize,
    pub target: usize,
    pub degree: usize,
    pub label: BasisLabel,
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            BasisLabel::Path(p) if p.is_empty() => write!(f, "e{}", self.source),
            BasisLabel::Path(p) => {
                let ids: Vec<String> = p.iter().map(|a| format!("a{a}")).collect();
                write!(f, "{}", ids.join("·"))
            }
            BasisLabel::Monomial { exponents, character } => {
                let mono: Vec<String> = exponents
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| if *e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                    .collect();
                if mono.is_empty() {
                    write!(f, "e[{character}]")
                } else {
                    write!(f, "{}·e[{character}]", mono.join(""))
                }
            }
        }
    }
}

/// Per-degree dimensions of a graded algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub dims: Vec<usize>,
    /// True when every degree beyond `dims` is known to vanish.
    pub exhausted: bool,
}

impl HilbertSeries {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn get(&self, degree: usize) -> Option<usize> {
        match self.dims.get(degree) {
            Some(d) => Some(*d),
            None if self.exhausted => Some(0),
            None => None,
        }
    }
}

/// A graded quiver algebra with relations, stored by explicit basis and exact
/// structure constants. Basis elements are sorted by degree; the first
/// `vertex_count` of them are the vertex idempotents `e_0, .., e_{N-1}`.
///
/// Products follow function composition: `a·b` is "b then a", so `a·b` can be
/// nonzero only when `source(a) == target(b)`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    name: String,
    field: Field,
    quiver: Quiver,
    relations: RelationSet,
    basis: Vec<BasisElement>,
    degree_offsets: Vec<usize>,
    truncation: Truncation,
    products: HashMap<(usize, usize), SparseVec>,
    arrow_images: Vec<SparseVec>,
}

impl GradedAlgebra {
    /// Assembles an algebra from raw parts, validating the idempotent layout
    /// and degree/vertex compatibility of every stored product.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        name: impl Into<String>,
        field: Field,
        quiver: Quiver,
        relations: RelationSet,
        basis: Vec<BasisElement>,
        truncation: Truncation,
        products: HashMap<(usize, usize), SparseVec>,
        arrow_images: Vec<SparseVec>,
    ) -> Result<Self, AlgebraError> {
        let n = quiver.vertex_count();
        for (v, b) in basis.iter().take(n).enumerate() {
            if b.degree != 0 || b.source != v || b.target != v {
                return Err(AlgebraError::Invariant(format!("basis element {v} is not the idempotent e{v}")));
            }
        }
        if basis.len() < n || basis.iter().skip(n).any(|b| b.degree == 0) {
            return Err(AlgebraError::Invariant("degree-0 part must be the vertex span".into()));
        }
        if basis.windows(2).any(|w| w[0].degree > w[1].degree) {
            return Err(AlgebraError::Invariant("basis must be sorted by degree".into()));
        }
        if arrow_images.len() != quiver.arrows().len() {
            return Err(AlgebraError::Invariant("one image per arrow required".into()));
        }
        for (&(i, j), v) in &products {
            let (a, b) = (&basis[i], &basis[j]);
            for (k, _) in v.entries() {
                let c = &basis[*k];
                if a.source != b.target
                    || c.degree != a.degree + b.degree
                    || c.source != b.source
                    || c.target != a.target
                {
                    return Err(AlgebraError::Invariant(format!("product {i}·{j} is not homogeneous")));
                }
            }
        }
        let top = basis.last().map_or(0, |b| b.degree);
        let len = match truncation {
            Truncation::Exhausted { top } => top + 1,
            Truncation::Degree(d) => d + 1,
        }
        .max(top + 1);
        let mut degree_offsets = vec![0; len + 1];
        for b in &basis {
            degree_offsets[b.degree + 1] += 1;
        }
        for d in 0..len {
            degree_offsets[d + 1] += degree_offsets[d];
        }
        Ok(GradedAlgebra {
            name: name.into(),
            field,
            quiver,
            relations,
            basis,
            degree_offsets,
            truncation,
            products,
            arrow_images,
        })
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn element(&self, i: usize) -> &BasisElement {
        &self.basis[i]
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn is_finite_dimensional(&self) -> bool {
        matches!(self.truncation, Truncation::Exhausted { .. })
    }

    /// Highest degree with a nonzero basis element.
    pub fn top_degree(&self) -> usize {
        self.basis.last().map_or(0, |b| b.degree)
    }

    /// Basis indices in a given degree.
    pub fn degree_range(&self, degree: usize) -> std::ops::Range<usize> {
        if degree + 1 >= self.degree_offsets.len() {
            return self.basis.len()..self.basis.len();
        }
        self.degree_offsets[degree]..self.degree_offsets[degree + 1]
    }

    /// Basis indices of the radical (all positive-degree elements).
    pub fn radical(&self) -> std::ops::Range<usize> {
        self.vertex_count()..self.basis.len()
    }

    pub fn idempotent(&self, vertex: usize) -> usize {
        vertex
    }

    pub fn arrow_image(&self, arrow_index: usize) -> &SparseVec {
        &self.arrow_images[arrow_index]
    }

    /// Product of two basis elements.
    pub fn mul(&self, i: usize, j: usize) -> Result<SparseVec, AlgebraError> {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        if a.source != b.target {
            return Ok(SparseVec::new());
        }
        let degree = a.degree + b.degree;
        if !self.truncation.covers(degree) {
            return Err(AlgebraError::BeyondTruncation { degree, bound: self.truncation.bound().unwrap_or(0) });
        }
        Ok(self.products.get(&(i, j)).cloned().unwrap_or_default())
    }

    /// Product of a basis element with a linear combination on the right.
    pub fn mul_left_basis(&self, i: usize, v: &SparseVec) -> Result<SparseVec, AlgebraError> {
        let mut acc = SparseVec::new();
        for (j, c) in v.entries() {
            let p = self.mul(i, *j)?;
            acc = acc.axpy(c, &p);
        }
        Ok(acc)
    }

    pub fn mul_vec(&self, u: &SparseVec, v: &SparseVec) -> Result<SparseVec, AlgebraError> {
        let mut acc = SparseVec::new();
        for (i, a) in u.entries() {
            for (j, b) in v.entries() {
                let p = self.mul(*i, *j)?;
                acc = acc.axpy(&a.mul(b), &p);
            }
        }
        Ok(acc)
    }

    /// Degree through which the basis and multiplication are exact, `None` = all.
    pub fn certified_degree(&self) -> Option<usize> {
        self.truncation.bound()
    }

    pub fn hilbert_function(&self) -> HilbertSeries {
        let upto = match self.truncation {
            Truncation::Exhausted { top } => top,
            Truncation::Degree(d) => d,
        };
        HilbertSeries {
            dims: (0..=upto).map(|d| self.degree_range(d).len()).collect(),
            exhausted: self.is_finite_dimensional(),
        }
    }

    /// Dimensions of `e_target A e_source` per degree.
    pub fn hilbert_by_vertex_pair(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let len = self.hilbert_function().dims.len();
        let n = self.vertex_count();
        let mut out = BTreeMap::new();
        for s in 0..n {
            for t in 0..n {
                out.insert((s, t), vec![0; len]);
            }
        }
        for b in &self.basis {
            out.get_mut(&(b.source, b.target)).expect("vertex pair")[b.degree] += 1;
        }
        out
    }

    /// Dimension of the degree-`d` part of the center, tested against every
    /// basis element whose product with a degree-`d` element is certified.
    pub fn center_dim(&self, degree: usize) -> Result<usize, AlgebraError> {
        if !self.truncation.covers(degree) {
            return Err(AlgebraError::BeyondTruncation { degree, bound: self.truncation.bound().unwrap_or(0) });
        }
        let unknowns: Vec<usize> = self.degree_range(degree).collect();
        if unknowns.is_empty() {
            return Ok(0);
        }
        let mut triplets = Vec::new();
        let mut row_base = 0;
        for b in 0..self.dim() {
            if !self.truncation.covers(self.basis[b].degree + degree) {
                continue;
            }
            for (col, &z) in unknowns.iter().enumerate() {
                let comm = self.mul(z, b)?.axpy(&self.field.from_i64(-1), &self.mul(b, z)?);
                for (k, v) in comm.entries() {
                    triplets.push((row_base + k, col, v.clone()));
                }
            }
            row_base += self.dim();
        }
        let m = ExactMatrix::from_triplets(row_base, unknowns.len(), self.field, triplets)?;
        Ok(kernel_basis(&m)?.dim())
    }

    /// Checks `(a·b)·c = a·(b·c)` on all certified basis triples.
    pub fn check_associativity(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                if self.basis[a].source != self.basis[b].target {
                    continue;
                }
                for c in 0..n {
                    if self.basis[b].source != self.basis[c].target {
                        continue;
                    }
                    let total = self.basis[a].degree + self.basis[b].degree + self.basis[c].degree;
                    if !self.truncation.covers(total) {
                        continue;
                    }
                    let left = self.mul_vec(&self.mul(a, b)?, &SparseVec::unit(c, self.field))?;
                    let right = self.mul_left_basis(a, &self.mul(b, c)?)?;
                    if left != right {
                        return Err(AlgebraError::Invariant(format!("associativity fails on ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `e_i e_j = δ_ij e_i` and that `Σ e_i` is a two-sided unit.
    pub fn check_idempotents(&self) -> Result<(), AlgebraError> {
        let nv = self.vertex_count();
        let one = SparseVec::from_entries((0..nv).map(|v| (v, self.field.one())).collect());
        for i in 0..nv {
            for j in 0..nv {
                let expect = if i == j { SparseVec::unit(i, self.field) } else { SparseVec::new() };
                if self.mul(i, j)? != expect {
                    return Err(AlgebraError::Invariant(format!("e{i}·e{j} wrong")));
                }
            }
        }
        for b in 0..self.dim() {
            let unit = SparseVec::unit(b, self.field);
            if self.mul_vec(&one, &unit)? != unit || self.mul_vec(&unit, &one)? != unit {
                return Err(AlgebraError::Invariant(format!("1 does not act as identity on basis {b}")));
            }
        }
        Ok(())
    }

    /// Scalar helper.
    pub fn scalar(&self, v: i64) -> FieldScalar {
        self.field.from_i64(v)
    }
}
