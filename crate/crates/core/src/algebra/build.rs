use std::collections::{BTreeMap, HashMap};

use crate::limits::Limits;
use crate::linalg::{Echelon, Field, FieldScalar, SparseVec};

use super::graded::{BasisElement, BasisLabel, GradedAlgebra, Truncation};
use super::quiver::{Path, Quiver, RelationSet};
use super::AlgebraError;

/// Paths of one degree, grouped into `(source, target)` blocks in
/// lexicographic arrow-id order.
struct DegreePaths {
    blocks: BTreeMap<(usize, usize), Vec<Path>>,
}

impl DegreePaths {
    fn iter(&self) -> impl Iterator<Item = &Path> {
        self.blocks.values().flatten()
    }
}

fn enumerate_paths(quiver: &Quiver, max_degree: usize, limits: &Limits) -> Result<Vec<DegreePaths>, AlgebraError> {
    let mut by_degree: Vec<DegreePaths> = Vec::with_capacity(max_degree + 1);
    let mut zero = BTreeMap::new();
    for v in 0..quiver.vertex_count() {
        zero.insert((v, v), vec![Path::trivial(v)]);
    }
    by_degree.push(DegreePaths { blocks: zero });
    for d in 1..=max_degree {
        let mut blocks: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for a in quiver.arrows() {
            if a.degree > d {
                continue;
            }
            let step = Path { source: a.source, target: a.target, degree: a.degree, arrows: vec![a.id] };
            for p in by_degree[d - a.degree].iter() {
                if let Some(q) = step.compose(p) {
                    blocks.entry((q.source, q.target)).or_default().push(q);
                }
            }
        }
        for (key, block) in blocks.iter_mut() {
            block.sort_by(|x, y| x.arrows.cmp(&y.arrows));
            limits
                .check_dim(&format!("path space {}->{} in degree {d}", key.0, key.1), block.len())
                .map_err(AlgebraError::Resource)?;
        }
        by_degree.push(DegreePaths { blocks });
    }
    Ok(by_degree)
}

/// Builds the graded algebra `kQ / (rels)` degree by degree up to `max_degree`.
///
/// In each degree the ideal component is the span of all padded relations
/// `p·r·q`. The basis is the set of paths that are not pivots when the ideal is
/// row-reduced with the lexicographically largest path of each row as pivot,
/// so the retained paths are the lexicographically smallest complement.
pub fn build_algebra(
    quiver: &Quiver,
    relations: &RelationSet,
    max_degree: usize,
    field: Field,
    limits: &Limits,
) -> Result<GradedAlgebra, AlgebraError> {
    let rels: Vec<(usize, usize, usize, Vec<(FieldScalar, Vec<usize>)>)> = relations
        .relations
        .iter()
        .map(|r| {
            let terms = r
                .terms
                .iter()
                .map(|(c, p)| Ok((field.from_rational(c)?, p.arrows.clone())))
                .collect::<Result<Vec<_>, AlgebraError>>()?;
            Ok((r.source(), r.target(), r.degree(), terms))
        })
        .collect::<Result<_, AlgebraError>>()?;

    let paths = enumerate_paths(quiver, max_degree, limits)?;

    // per degree: paths indexed by start (source) and end (target) vertex
    let mut by_source: Vec<HashMap<usize, Vec<&Path>>> = Vec::new();
    let mut by_target: Vec<HashMap<usize, Vec<&Path>>> = Vec::new();
    for dp in &paths {
        let mut s: HashMap<usize, Vec<&Path>> = HashMap::new();
        let mut t: HashMap<usize, Vec<&Path>> = HashMap::new();
        for p in dp.iter() {
            s.entry(p.source).or_default().push(p);
            t.entry(p.target).or_default().push(p);
        }
        by_source.push(s);
        by_target.push(t);
    }

    let mut basis: Vec<BasisElement> = Vec::new();
    let mut normal_forms: HashMap<(usize, Vec<usize>), SparseVec> = HashMap::new();

    for (d, dp) in paths.iter().enumerate() {
        // column index of each path inside its block
        let mut position: HashMap<&[usize], usize> = HashMap::new();
        for block in dp.blocks.values() {
            for (i, p) in block.iter().enumerate() {
                position.insert(&p.arrows, i);
            }
        }
        let mut ideal: BTreeMap<(usize, usize), Echelon> =
            dp.blocks.keys().map(|k| (*k, Echelon::new(field))).collect();

        for (r_src, r_tgt, r_deg, terms) in &rels {
            if *r_deg > d {
                continue;
            }
            let pad = d - r_deg;
            for left_deg in 0..=pad {
                let right_deg = pad - left_deg;
                let lefts = by_source[left_deg].get(r_tgt).map(Vec::as_slice).unwrap_or(&[]);
                let rights = by_target[right_deg].get(r_src).map(Vec::as_slice).unwrap_or(&[]);
                for p in lefts {
                    for q in rights {
                        let key = (q.source, p.target);
                        let block_len = dp.blocks[&key].len();
                        let entries = terms
                            .iter()
                            .map(|(c, mid)| {
                                let mut arrows = p.arrows.clone();
                                arrows.extend_from_slice(mid);
                                arrows.extend_from_slice(&q.arrows);
                                // largest path gets the smallest column
                                (block_len - 1 - position[arrows.as_slice()], c.clone())
                            })
                            .collect();
                        ideal.get_mut(&key).expect("block").insert(SparseVec::from_entries(entries));
                    }
                }
            }
        }

        for (key, block) in &dp.blocks {
            let rref = ideal.remove(key).expect("block").into_reduced();
            let len = block.len();
            let mut basis_of_col: HashMap<usize, usize> = HashMap::new();
            for (i, p) in block.iter().enumerate() {
                let col = len - 1 - i;
                if !rref.is_pivot(col) {
                    basis_of_col.insert(col, basis.len());
                    basis.push(BasisElement {
                        source: p.source,
                        target: p.target,
                        degree: d,
                        label: BasisLabel::Path(p.arrows.clone()),
                    });
                }
            }
            for (i, p) in block.iter().enumerate() {
                let col = len - 1 - i;
                let nf = match rref.pivot_row(col) {
                    None => SparseVec::unit(basis_of_col[&col], field),
                    Some(row) => SparseVec::from_entries(
                        row.entries().iter().skip(1).map(|(c, v)| (basis_of_col[c], v.neg())).collect(),
                    ),
                };
                normal_forms.insert((p.source, p.arrows.clone()), nf);
            }
        }
    }

    let window = quiver.max_arrow_degree();
    let dims: Vec<usize> = (0..=max_degree).map(|d| basis.iter().filter(|b| b.degree == d).count()).collect();
    let exhausted = quiver.arrows().is_empty()
        || (max_degree + 1 >= window && dims[max_degree + 1 - window..].iter().all(|&x| x == 0));
    let truncation = if exhausted {
        Truncation::Exhausted { top: basis.last().map_or(0, |b| b.degree) }
    } else {
        Truncation::Degree(max_degree)
    };

    let mut products = HashMap::new();
    for (i, a) in basis.iter().enumerate() {
        let BasisLabel::Path(pa) = &a.label else { unreachable!() };
        for (j, b) in basis.iter().enumerate() {
            if a.source != b.target || a.degree + b.degree > max_degree {
                continue;
            }
            let BasisLabel::Path(pb) = &b.label else { unreachable!() };
            let mut arrows = pa.clone();
            arrows.extend_from_slice(pb);
            let nf = &normal_forms[&(b.source, arrows)];
            if !nf.is_zero() {
                products.insert((i, j), nf.clone());
            }
        }
    }

    let arrow_images = quiver
        .arrows()
        .iter()
        .map(|a| normal_forms.get(&(a.source, vec![a.id])).cloned().unwrap_or_default())
        .collect();

    GradedAlgebra::from_parts("custom", field, quiver.clone(), relations.clone(), basis, truncation, products, arrow_images)
}
