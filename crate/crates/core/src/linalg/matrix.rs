use std::collections::BTreeMap;

use super::field::{Field, FieldScalar};
use super::sparse::SparseVec;
use super::LinalgError;

/// Below this size rank and kernel use dense Gauss-Jordan elimination.
pub const DENSE_CUTOFF: usize = 64;

/// Sparse matrix over a single exact field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Self {
        ExactMatrix { rows, cols, field, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        ExactMatrix { rows: n, cols: n, field, data: (0..n).map(|i| SparseVec::unit(i, field)).collect() }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed, zeros dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        field: Field,
        triplets: impl IntoIterator<Item = (usize, usize, FieldScalar)>,
    ) -> Result<Self, LinalgError> {
        let mut per_row: Vec<Vec<(usize, FieldScalar)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::Shape(format!("entry ({r},{c}) outside {rows}x{cols}")));
            }
            if v.field() != field {
                return Err(LinalgError::FieldMismatch(field, v.field()));
            }
            per_row[r].push((c, v));
        }
        Ok(ExactMatrix { rows, cols, field, data: per_row.into_iter().map(SparseVec::from_entries).collect() })
    }

    /// Builds from rows given as sparse vectors.
    pub fn from_rows(cols: usize, field: Field, rows: Vec<SparseVec>) -> Result<Self, LinalgError> {
        for row in &rows {
            for (c, v) in row.entries() {
                if *c >= cols {
                    return Err(LinalgError::Shape(format!("column {c} outside width {cols}")));
                }
                if v.field() != field {
                    return Err(LinalgError::FieldMismatch(field, v.field()));
                }
            }
        }
        Ok(ExactMatrix { rows: rows.len(), cols, field, data: rows })
    }

    pub fn from_dense_i64(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                SparseVec::from_entries(r.iter().enumerate().map(|(c, v)| (c, field.from_i64(*v))).collect())
            })
            .collect();
        ExactMatrix { rows: rows.len(), cols, field, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn get(&self, r: usize, c: usize) -> FieldScalar {
        self.data[r].get(c).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut cols: Vec<Vec<(usize, FieldScalar)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.entries() {
                cols[*c].push((r, v.clone()));
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            data: cols.into_iter().map(SparseVec::from_entries).collect(),
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                row.entries().iter().fold(SparseVec::new(), |acc, (k, v)| acc.axpy(v, &other.data[*k]))
            })
            .collect();
        Ok(ExactMatrix { rows: self.rows, cols: other.cols, field: self.field, data })
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let entries = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let mut acc = self.field.zero();
                let (mut x, mut y) = (0, 0);
                let (a, b) = (row.entries(), v.entries());
                while x < a.len() && y < b.len() {
                    match a[x].0.cmp(&b[y].0) {
                        std::cmp::Ordering::Less => x += 1,
                        std::cmp::Ordering::Greater => y += 1,
                        std::cmp::Ordering::Equal => {
                            acc = acc.add_product(&a[x].1, &b[y].1);
                            x += 1;
                            y += 1;
                        }
                    }
                }
                (!acc.is_zero()).then_some((r, acc))
            })
            .collect();
        SparseVec::from_entries(entries)
    }

    fn to_dense(&self) -> Vec<Vec<FieldScalar>> {
        self.data.iter().map(|r| r.to_dense(self.cols, self.field)).collect()
    }

    fn is_small(&self) -> bool {
        self.rows <= DENSE_CUTOFF && self.cols <= DENSE_CUTOFF
    }
}

/// Incrementally maintained row-echelon basis with unit pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon { field, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Reduces `v` until its leading column carries no pivot.
    pub fn reduce_lead(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, c)) = v.lead() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = c.neg();
                    v = v.axpy(&c, p);
                }
                None => break,
            }
        }
        v
    }

    /// Eliminates every pivot column from `v`, giving a canonical remainder.
    pub fn reduce_full(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            let (col, c) = v.entries()[k].clone();
            match self.pivots.get(&col) {
                Some(p) => v = v.axpy(&c.neg(), p),
                None => k += 1,
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce_lead(v);
        match v.lead() {
            None => false,
            Some((lead, c)) => {
                let inv = c.inv().expect("nonzero lead");
                let v = v.scale(&inv);
                self.pivots.insert(lead, v);
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_lead(v.clone()).is_zero()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Back-substitutes so every pivot row is zero on all other pivot columns.
    pub fn into_reduced(mut self) -> ReducedEchelon {
        let leads: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for lead in leads {
            let row = self.pivots.remove(&lead).expect("pivot present");
            let row = {
                let mut r = row;
                let mut k = 1;
                while k < r.len() {
                    let (col, c) = r.entries()[k].clone();
                    match self.pivots.get(&col) {
                        Some(p) if col > lead => r = r.axpy(&c.neg(), p),
                        _ => k += 1,
                    }
                }
                r
            };
            self.pivots.insert(lead, row);
        }
        ReducedEchelon { field: self.field, pivots: self.pivots }
    }
}

/// Reduced row-echelon form: pivot rows with unit leads, zero on other pivots.
#[derive(Clone, Debug)]
pub struct ReducedEchelon {
    field: Field,
    pivots: BTreeMap<usize, SparseVec>,
}

impl ReducedEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.pivots.get(&col)
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Basis of the null space of the row space's defining matrix.
    pub fn kernel(&self, cols: usize) -> Vec<SparseVec> {
        let mut free_to_entries: BTreeMap<usize, Vec<(usize, FieldScalar)>> = BTreeMap::new();
        for c in 0..cols {
            if !self.pivots.contains_key(&c) {
                free_to_entries.insert(c, vec![(c, self.field.one())]);
            }
        }
        for (lead, row) in &self.pivots {
            for (c, v) in row.entries().iter().skip(1) {
                if let Some(e) = free_to_entries.get_mut(c) {
                    e.push((*lead, v.neg()));
                }
            }
        }
        free_to_entries.into_values().map(SparseVec::from_entries).collect()
    }
}

/// A linear subspace of `field^ambient_dim` with an independent basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn check_field(m: &ExactMatrix) -> Result<(), LinalgError> {
    for row in &m.data {
        for (_, v) in row.entries() {
            if v.field() != m.field {
                return Err(LinalgError::FieldMismatch(m.field, v.field()));
            }
        }
    }
    Ok(())
}

pub fn echelonize(m: &ExactMatrix) -> Echelon {
    let mut ech = Echelon::new(m.field);
    // short rows first keeps fill-in down
    let mut order: Vec<usize> = (0..m.rows).collect();
    order.sort_by_key(|&r| m.data[r].len());
    for r in order {
        if !m.data[r].is_zero() {
            ech.insert(m.data[r].clone());
        }
    }
    ech
}

pub fn rank_sparse(m: &ExactMatrix) -> usize {
    // eliminate along the shorter side
    if m.cols < m.rows {
        echelonize(&m.transpose()).rank()
    } else {
        echelonize(m).rank()
    }
}

/// Dense Gauss-Jordan; returns the reduced matrix and its pivot columns.
fn gauss_jordan(mut a: Vec<Vec<FieldScalar>>, cols: usize) -> (Vec<Vec<FieldScalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].inv().expect("nonzero pivot");
        for v in a[row].iter_mut() {
            *v = v.mul(&inv);
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let c = a[r][col].neg();
                let (src, dst) = if r < row {
                    let (lo, hi) = a.split_at_mut(row);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[row], &mut hi[0])
                };
                for k in col..cols {
                    if !src[k].is_zero() {
                        dst[k] = dst[k].add_product(&c, &src[k]);
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank_dense(m: &ExactMatrix) -> usize {
    gauss_jordan(m.to_dense(), m.cols).1.len()
}

/// Exact rank over the matrix's field.
pub fn rank(m: &ExactMatrix) -> Result<usize, LinalgError> {
    check_field(m)?;
    Ok(if m.is_small() { rank_dense(m) } else { rank_sparse(m) })
}

pub fn kernel_sparse(m: &ExactMatrix) -> Subspace {
    let basis = echelonize(m).into_reduced().kernel(m.cols);
    Subspace { ambient_dim: m.cols, basis }
}

pub fn kernel_dense(m: &ExactMatrix) -> Subspace {
    let (a, pivots) = gauss_jordan(m.to_dense(), m.cols);
    let mut basis = Vec::new();
    let is_pivot: Vec<Option<usize>> = {
        let mut v = vec![None; m.cols];
        for (r, c) in pivots.iter().enumerate() {
            v[*c] = Some(r);
        }
        v
    };
    for free in (0..m.cols).filter(|c| is_pivot[*c].is_none()) {
        let mut entries = vec![(free, m.field.one())];
        for (r, pc) in pivots.iter().enumerate() {
            if !a[r][free].is_zero() {
                entries.push((*pc, a[r][free].neg()));
            }
        }
        basis.push(SparseVec::from_entries(entries));
    }
    Subspace { ambient_dim: m.cols, basis }
}

/// Basis of `{v : m v = 0}`.
pub fn kernel_basis(m: &ExactMatrix) -> Result<Subspace, LinalgError> {
    check_field(m)?;
    Ok(if m.is_small() { kernel_dense(m) } else { kernel_sparse(m) })
}

/// `dim ker(d_out) - rank(d_in)` for `prev --d_in--> middle --d_out--> next`.
pub fn homology_dim(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<usize, LinalgError> {
    if d_out.cols != d_in.rows {
        return Err(LinalgError::Shape(format!(
            "d_in lands in dimension {} but d_out starts from {}",
            d_in.rows, d_out.cols
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(LinalgError::NotAComplex);
    }
    let middle = d_in.rows;
    Ok(middle - rank(d_out)? - rank(d_in)?)
}
