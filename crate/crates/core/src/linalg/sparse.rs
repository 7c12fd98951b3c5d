use super::field::{Field, FieldScalar};

/// A sparse coordinate vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, FieldScalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, field: Field) -> Self {
        SparseVec { entries: vec![(index, field.one())] }
    }

    /// Builds from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries(mut raw: Vec<(usize, FieldScalar)>) -> Self {
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, FieldScalar)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w = w.add(&v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    pub fn entries(&self) -> &[(usize, FieldScalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, FieldScalar)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lead(&self) -> Option<(usize, &FieldScalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Option<&FieldScalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &FieldScalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v.mul(c))).collect() }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &FieldScalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() || y < b.len() {
            if y == b.len() || (x < a.len() && a[x].0 < b[y].0) {
                out.push(a[x].clone());
                x += 1;
            } else if x == a.len() || b[y].0 < a[x].0 {
                out.push((b[y].0, b[y].1.mul(c)));
                y += 1;
            } else {
                let v = a[x].1.add_product(c, &b[y].1);
                if !v.is_zero() {
                    out.push((a[x].0, v));
                }
                x += 1;
                y += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, v)) => self.axpy(&v.field().one(), other),
        }
    }

    /// Reindexes through `f`, summing collisions.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect())
    }

    pub fn to_dense(&self, len: usize, field: Field) -> Vec<FieldScalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels_to_empty() {
        let f = Field::Rational;
        let a = SparseVec::from_entries(vec![(0, f.from_i64(2)), (3, f.from_i64(1))]);
        let b = SparseVec::from_entries(vec![(3, f.from_i64(1)), (0, f.from_i64(2))]);
        assert!(a.axpy(&f.from_i64(-1), &b).is_zero());
    }

    #[test]
    fn duplicates_summed() {
        let f = Field::Prime(5);
        let v = SparseVec::from_entries(vec![(1, f.from_i64(3)), (1, f.from_i64(2)), (0, f.one())]);
        assert_eq!(v.entries().len(), 1);
        assert_eq!(v.lead().unwrap().0, 0);
    }
}
