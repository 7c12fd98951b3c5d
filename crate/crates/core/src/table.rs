//! Dimension tables with explicit validity windows.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("entry (i={i}, d={d:?}) lies outside the certified window {window}")]
    OutOfWindow { i: i64, d: Option<i64>, window: Window },
}

/// Certified ranges: homological index always, internal degree when graded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub i_min: i64,
    pub i_max: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_min: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_max: Option<i64>,
}

impl Window {
    pub fn ungraded(i_min: i64, i_max: i64) -> Self {
        Window { i_min, i_max, d_min: None, d_max: None }
    }

    pub fn graded(i_min: i64, i_max: i64, d_min: i64, d_max: i64) -> Self {
        Window { i_min, i_max, d_min: Some(d_min), d_max: Some(d_max) }
    }

    pub fn is_graded(&self) -> bool {
        self.d_min.is_some()
    }

    pub fn is_empty(&self) -> bool {
        self.i_min > self.i_max || matches!((self.d_min, self.d_max), (Some(a), Some(b)) if a > b)
    }

    pub fn contains(&self, i: i64, d: Option<i64>) -> bool {
        if i < self.i_min || i > self.i_max {
            return false;
        }
        match (d, self.d_min, self.d_max) {
            (None, None, None) => true,
            (Some(d), Some(lo), Some(hi)) => lo <= d && d <= hi,
            _ => false,
        }
    }

    /// Intersection; `None` when gradedness differs or the overlap is empty.
    pub fn intersect(&self, other: &Window) -> Option<Window> {
        if self.is_graded() != other.is_graded() {
            return None;
        }
        let w = Window {
            i_min: self.i_min.max(other.i_min),
            i_max: self.i_max.min(other.i_max),
            d_min: self.d_min.zip(other.d_min).map(|(a, b)| a.max(b)),
            d_max: self.d_max.zip(other.d_max).map(|(a, b)| a.min(b)),
        };
        (!w.is_empty()).then_some(w)
    }

    pub fn points(&self) -> Vec<(i64, Option<i64>)> {
        let mut out = Vec::new();
        for i in self.i_min..=self.i_max {
            match (self.d_min, self.d_max) {
                (Some(lo), Some(hi)) => out.extend((lo..=hi).map(|d| (i, Some(d)))),
                _ => out.push((i, None)),
            }
        }
        out
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i∈[{},{}]", self.i_min, self.i_max)?;
        if let (Some(a), Some(b)) = (self.d_min, self.d_max) {
            write!(f, " d∈[{a},{b}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub i: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    pub dim: u64,
}

/// `(homological index, optional internal degree) -> dimension`. Every point
/// of the window is certified; points without a stored entry are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "TableRepr", into = "TableRepr")]
pub struct DimTable {
    window: Window,
    entries: BTreeMap<(i64, Option<i64>), u64>,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    window: Window,
    entries: Vec<TableEntry>,
}

impl From<TableRepr> for DimTable {
    fn from(r: TableRepr) -> Self {
        let mut t = DimTable::new(r.window);
        for e in r.entries {
            t.entries.insert((e.i, e.d), e.dim);
        }
        t
    }
}

impl From<DimTable> for TableRepr {
    fn from(t: DimTable) -> Self {
        TableRepr {
            window: t.window,
            entries: t.entries.into_iter().map(|((i, d), dim)| TableEntry { i, d, dim }).collect(),
        }
    }
}

impl DimTable {
    pub fn new(window: Window) -> Self {
        DimTable { window, entries: BTreeMap::new() }
    }

    /// Ungraded table over `0..values.len()`.
    pub fn from_ungraded(values: &[u64]) -> Self {
        let mut t = DimTable::new(Window::ungraded(0, values.len() as i64 - 1));
        for (i, v) in values.iter().enumerate() {
            t.entries.insert((i as i64, None), *v);
        }
        t.prune();
        t
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn set(&mut self, i: i64, d: Option<i64>, dim: u64) -> Result<(), TableError> {
        if !self.window.contains(i, d) {
            return Err(TableError::OutOfWindow { i, d, window: self.window });
        }
        if dim == 0 {
            self.entries.remove(&(i, d));
        } else {
            self.entries.insert((i, d), dim);
        }
        Ok(())
    }

    pub fn get(&self, i: i64, d: Option<i64>) -> Result<u64, TableError> {
        if !self.window.contains(i, d) {
            return Err(TableError::OutOfWindow { i, d, window: self.window });
        }
        Ok(self.entries.get(&(i, d)).copied().unwrap_or(0))
    }

    /// Ungraded values for `i_min..=i_max`.
    pub fn values(&self) -> Vec<u64> {
        (self.window.i_min..=self.window.i_max).map(|i| self.entries.get(&(i, None)).copied().unwrap_or(0)).collect()
    }

    /// Values at a fixed internal degree.
    pub fn values_at_degree(&self, d: i64) -> Vec<u64> {
        (self.window.i_min..=self.window.i_max)
            .map(|i| self.entries.get(&(i, Some(d))).copied().unwrap_or(0))
            .collect()
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = TableEntry> + '_ {
        self.entries.iter().map(|(&(i, d), &dim)| TableEntry { i, d, dim })
    }

    /// Restriction to a sub-window.
    pub fn restrict(&self, window: Window) -> DimTable {
        DimTable {
            window,
            entries: self.entries.iter().filter(|(k, _)| window.contains(k.0, k.1)).map(|(k, v)| (*k, *v)).collect(),
        }
    }

    /// Whether both tables agree on the intersection of their windows;
    /// `None` when the intersection is empty.
    pub fn agrees_with(&self, other: &DimTable) -> Option<bool> {
        let w = self.window.intersect(&other.window)?;
        Some(w.points().into_iter().all(|(i, d)| self.get(i, d).ok() == other.get(i, d).ok()))
    }

    /// Union of two tables with disjoint-or-agreeing windows of the same shape.
    pub fn merge(&self, other: &DimTable) -> DimTable {
        let w = &self.window;
        let o = &other.window;
        let window = Window {
            i_min: w.i_min.min(o.i_min),
            i_max: w.i_max.max(o.i_max),
            d_min: w.d_min.zip(o.d_min).map(|(a, b)| a.min(b)),
            d_max: w.d_max.zip(o.d_max).map(|(a, b)| a.max(b)),
        };
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|(k, v)| (*k, *v)));
        DimTable { window, entries }
    }

    fn prune(&mut self) {
        self.entries.retain(|_, v| *v != 0);
    }
}

impl fmt::Display for DimTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_graded() {
            let (lo, hi) = (self.window.d_min.unwrap_or(0), self.window.d_max.unwrap_or(0));
            write!(f, "d\\i")?;
            for i in self.window.i_min..=self.window.i_max {
                write!(f, "\t{i}")?;
            }
            for d in lo..=hi {
                write!(f, "\n{d}")?;
                for v in self.values_at_degree(d) {
                    write!(f, "\t{v}")?;
                }
            }
            Ok(())
        } else {
            let vals: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
            write!(f, "({})", vals.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outside_window_rejected() {
        let t = DimTable::from_ungraded(&[1, 3, 0]);
        assert_eq!(t.get(1, None).unwrap(), 3);
        assert_eq!(t.get(2, None).unwrap(), 0);
        assert!(t.get(3, None).is_err());
        assert!(t.get(0, Some(0)).is_err());
    }

    #[test]
    fn agreement_on_overlap() {
        let a = DimTable::from_ungraded(&[1, 3, 0, 0]);
        let b = DimTable::from_ungraded(&[1, 3]);
        assert_eq!(a.agrees_with(&b), Some(true));
        let c = DimTable::from_ungraded(&[1, 2]);
        assert_eq!(a.agrees_with(&c), Some(false));
        let graded = DimTable::new(Window::graded(0, 1, 0, 0));
        assert_eq!(a.agrees_with(&graded), None);
    }

    #[test]
    fn display() {
        assert_eq!(DimTable::from_ungraded(&[1, 8, 10, 0]).to_string(), "(1, 8, 10, 0)");
    }
}
