use std::collections::HashSet;

use num::rational::BigRational;

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: usize,
    pub source: usize,
    pub target: usize,
    pub degree: usize,
}

/// A finite quiver with positively graded arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        if vertex_count == 0 {
            return Err(AlgebraError::BadQuiver("a quiver needs at least one vertex".into()));
        }
        let mut ids = HashSet::new();
        for a in &arrows {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(AlgebraError::BadQuiver(format!(
                    "arrow {} joins {} -> {} but there are {vertex_count} vertices",
                    a.id, a.source, a.target
                )));
            }
            if a.degree == 0 {
                return Err(AlgebraError::BadQuiver(format!("arrow {} has degree 0", a.id)));
            }
            if !ids.insert(a.id) {
                return Err(AlgebraError::BadQuiver(format!("duplicate arrow id {}", a.id)));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_by_id(&self, id: usize) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    pub fn max_arrow_degree(&self) -> usize {
        self.arrows.iter().map(|a| a.degree).max().unwrap_or(1)
    }

    /// Resolves a product-order id sequence into a path, checking composability.
    pub fn path(&self, ids: &[usize]) -> Result<Path, AlgebraError> {
        let arrows: Vec<&Arrow> = ids
            .iter()
            .map(|id| self.arrow_by_id(*id).ok_or(AlgebraError::UnknownArrow(*id)))
            .collect::<Result<_, _>>()?;
        let Some(first) = arrows.first() else {
            return Err(AlgebraError::BadRelation("empty path in a relation".into()));
        };
        for w in arrows.windows(2) {
            // w[0] · w[1]: w[1] is traversed first
            if w[0].source != w[1].target {
                return Err(AlgebraError::BadRelation(format!(
                    "arrows {} and {} do not compose",
                    w[0].id, w[1].id
                )));
            }
        }
        let last = arrows.last().expect("nonempty");
        Ok(Path {
            source: last.source,
            target: first.target,
            degree: arrows.iter().map(|a| a.degree).sum(),
            arrows: ids.to_vec(),
        })
    }
}

/// A path written in product order: `arrows[0]` is traversed last, so the path
/// `[a, b]` is the product `a·b` ("b then a"). An empty arrow list is the
/// idempotent at `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub degree: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path { source: vertex, target: vertex, degree: 0, arrows: Vec::new() }
    }

    /// `self · other`, if composable.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: other.source, target: self.target, degree: self.degree + other.degree, arrows })
    }
}

/// A homogeneous linear combination of parallel paths of equal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(BigRational, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(BigRational, Path)>) -> Result<Self, AlgebraError> {
        let Some((_, first)) = terms.first() else {
            return Err(AlgebraError::BadRelation("relation without terms".into()));
        };
        for (_, p) in &terms {
            if p.arrows.is_empty() {
                return Err(AlgebraError::BadRelation("relations may not contain idempotents".into()));
            }
            if (p.source, p.target, p.degree) != (first.source, first.target, first.degree) {
                return Err(AlgebraError::Inhomogeneous(format!(
                    "path {:?} ({}->{}, degree {}) vs {:?} ({}->{}, degree {})",
                    p.arrows, p.source, p.target, p.degree, first.arrows, first.source, first.target, first.degree
                )));
            }
        }
        Ok(Relation { terms })
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn degree(&self) -> usize {
        self.terms[0].1.degree
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn new(relations: Vec<Relation>) -> Self {
        RelationSet { relations }
    }

    pub fn empty() -> Self {
        RelationSet::default()
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn kronecker() -> Quiver {
        Quiver::new(
            2,
            vec![
                Arrow { id: 0, source: 0, target: 1, degree: 1 },
                Arrow { id: 1, source: 0, target: 1, degree: 1 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_quivers() {
        assert!(Quiver::new(1, vec![Arrow { id: 0, source: 0, target: 1, degree: 1 }]).is_err());
        let dup = vec![
            Arrow { id: 3, source: 0, target: 0, degree: 1 },
            Arrow { id: 3, source: 0, target: 0, degree: 1 },
        ];
        assert!(Quiver::new(1, dup).is_err());
    }

    #[test]
    fn non_composable_paths_rejected() {
        assert!(kronecker().path(&[0, 1]).is_err());
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let q = Quiver::new(
            1,
            vec![Arrow { id: 0, source: 0, target: 0, degree: 1 }, Arrow { id: 1, source: 0, target: 0, degree: 2 }],
        )
        .unwrap();
        let one = BigRational::one();
        let r = Relation::new(vec![(one.clone(), q.path(&[0, 0]).unwrap()), (one, q.path(&[0]).unwrap())]);
        assert!(matches!(r, Err(AlgebraError::Inhomogeneous(_))));
    }
}
