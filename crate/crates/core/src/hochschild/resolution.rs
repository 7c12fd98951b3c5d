//! Minimal graded projective resolutions of right modules.
//!
//! Indecomposable projectives are `P_v = e_v A`, spanned by the basis elements
//! with target `v`. Each step covers the current kernel degree by degree:
//! generators are a complement of `K·J` inside `K`, where `K·J` is spanned by
//! the products `k·α` over kernel vectors `k` and arrows `α`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraModule, GradedAlgebra};
use crate::limits::Limits;
use crate::linalg::{kernel_basis, Echelon, ExactMatrix, SparseVec};

use super::HochschildError;

/// A direct sum `⊕_k e_{v_k} A (-s_k)`, cut off above an optional degree.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    summands: Vec<(usize, usize)>,
    cells: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    tags: Vec<(usize, usize)>,
}

impl ProjectiveSum {
    /// `summands` lists `(vertex, shift)`; cells above `window` are dropped.
    pub fn new(alg: &GradedAlgebra, summands: Vec<(usize, usize)>, window: Option<usize>) -> Self {
        let mut cells = Vec::new();
        let mut index = HashMap::new();
        let mut tags = Vec::new();
        for (k, &(v, s)) in summands.iter().enumerate() {
            for (b, el) in alg.basis().iter().enumerate() {
                if el.target != v || window.is_some_and(|w| s + el.degree > w) {
                    continue;
                }
                index.insert((k, b), cells.len());
                cells.push((k, b));
                tags.push((el.source, s + el.degree));
            }
        }
        ProjectiveSum { summands, cells, index, tags }
    }

    pub fn dim(&self) -> usize {
        self.cells.len()
    }

    pub fn summands(&self) -> &[(usize, usize)] {
        &self.summands
    }

    /// Index of the generator `e_{v_k}` of summand `k`.
    pub fn top_cell(&self, alg: &GradedAlgebra, k: usize) -> Option<usize> {
        self.index.get(&(k, alg.idempotent(self.summands[k].0))).copied()
    }

    fn act(&self, alg: &GradedAlgebra, i: usize, a: usize) -> Result<SparseVec, HochschildError> {
        let (k, b) = self.cells[i];
        let prod = alg.mul(b, a)?;
        let entries = prod
            .into_entries()
            .into_iter()
            .filter_map(|(c, coef)| self.index.get(&(k, c)).map(|&j| (j, coef)))
            .collect();
        Ok(SparseVec::from_entries(entries))
    }
}

enum Ambient<'a> {
    Module(&'a AlgebraModule),
    Projective(ProjectiveSum),
}

impl Ambient<'_> {
    fn dim(&self) -> usize {
        match self {
            Ambient::Module(m) => m.dim(),
            Ambient::Projective(p) => p.dim(),
        }
    }

    fn act(&self, alg: &GradedAlgebra, i: usize, a: usize) -> Result<SparseVec, HochschildError> {
        match self {
            Ambient::Module(m) => Ok(m.act(i, a)),
            Ambient::Projective(p) => p.act(alg, i, a),
        }
    }

    fn act_vec(&self, alg: &GradedAlgebra, v: &SparseVec, a: &SparseVec) -> Result<SparseVec, HochschildError> {
        let mut acc = SparseVec::new();
        for (i, c) in v.entries() {
            for (b, d) in a.entries() {
                acc = acc.axpy(&c.mul(d), &self.act(alg, *i, *b)?);
            }
        }
        Ok(acc)
    }
}

/// `(degree, vertex) -> basis of that block of a graded submodule`.
type Blocks = BTreeMap<(usize, usize), Vec<SparseVec>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ResolutionStatus {
    /// The kernel after step `length` vanished: projective dimension `length`.
    Finished { length: usize },
    /// Steps `0..computed` were built and the last kernel is still nonzero.
    NotFinished { computed: usize },
}

/// One projective `P_i` with its map to the previous term (or the module).
#[derive(Clone, Debug)]
pub struct ResolutionStep {
    projective: ProjectiveSum,
    /// Columns are the cells of `P_i`, rows the basis of the previous term.
    differential: ExactMatrix,
}

impl ResolutionStep {
    /// `(vertex, generator degree)` of each summand.
    pub fn generators(&self) -> &[(usize, usize)] {
        self.projective.summands()
    }

    pub fn projective(&self) -> &ProjectiveSum {
        &self.projective
    }

    pub fn differential(&self) -> &ExactMatrix {
        &self.differential
    }

    /// Number of summands `P_v` per vertex.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for (v, _) in self.generators() {
            *m.entry(*v).or_insert(0) += 1;
        }
        m
    }
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub steps: Vec<ResolutionStep>,
    pub status: ResolutionStatus,
    /// Every differential lands in the radical of its target.
    pub minimal: bool,
    pub length_bound: usize,
    /// Internal degrees above this are not resolved.
    pub window: Option<usize>,
}

impl Resolution {
    pub fn projective_dimension(&self) -> Option<usize> {
        match self.status {
            ResolutionStatus::Finished { length } => Some(length),
            ResolutionStatus::NotFinished { .. } => None,
        }
    }

    /// Total number of summands in step `i`, zero past a finished end.
    pub fn rank_at(&self, i: usize) -> usize {
        self.steps.get(i).map_or(0, |s| s.generators().len())
    }

    /// Checks `d_i ∘ d_{i+1} = 0` for every pair of consecutive steps.
    pub fn check_complex(&self) -> Result<(), HochschildError> {
        for w in self.steps.windows(2) {
            if !w[0].differential.mul(&w[1].differential)?.is_zero() {
                return Err(HochschildError::Invariant("consecutive resolution maps do not compose to zero".into()));
            }
        }
        Ok(())
    }
}

fn minimal_generators(
    alg: &GradedAlgebra,
    ambient: &Ambient<'_>,
    kernel: &Blocks,
    window: Option<usize>,
) -> Result<Vec<(usize, usize, SparseVec)>, HochschildError> {
    let mut kj: HashMap<(usize, usize), Echelon> = HashMap::new();
    for (&(t, _), vecs) in kernel {
        for arrow in 0..alg.quiver().arrows().len() {
            let image = alg.arrow_image(arrow);
            let deg = alg.quiver().arrows()[arrow].degree;
            if window.is_some_and(|w| t + deg > w) {
                continue;
            }
            let src = alg.quiver().arrows()[arrow].source;
            for k in vecs {
                let v = ambient.act_vec(alg, k, image)?;
                if !v.is_zero() {
                    kj.entry((t + deg, src)).or_insert_with(|| Echelon::new(alg.field())).insert(v);
                }
            }
        }
    }
    let mut gens = Vec::new();
    for (&(t, u), vecs) in kernel {
        let mut ech = kj.remove(&(t, u)).unwrap_or_else(|| Echelon::new(alg.field()));
        for k in vecs {
            if ech.insert(k.clone()) {
                gens.push((u, t, k.clone()));
            }
        }
    }
    Ok(gens)
}

fn whole_module(m: &AlgebraModule, alg: &GradedAlgebra) -> Blocks {
    let mut blocks = Blocks::new();
    for (i, b) in m.basis().iter().enumerate() {
        blocks.entry((b.degree, b.vertex)).or_default().push(SparseVec::unit(i, alg.field()));
    }
    blocks
}

/// Minimal projective resolution of `module`, steps `P_0 ..` up to
/// `P_{max_len}`. With `window = Some(w)` every projective is cut off above
/// internal degree `w`, which must lie within the algebra's truncation.
pub fn minimal_resolution(
    alg: &GradedAlgebra,
    module: &AlgebraModule,
    max_len: usize,
    window: Option<usize>,
    limits: &Limits,
) -> Result<Resolution, HochschildError> {
    match (window, alg.truncation().bound()) {
        (None, Some(b)) => return Err(HochschildError::InsufficientPrecision { needed: None, available: b }),
        (Some(w), Some(b)) if w > b => return Err(HochschildError::InsufficientPrecision { needed: Some(w), available: b }),
        _ => {}
    }
    let mut ambient = Ambient::Module(module);
    let mut kernel = whole_module(module, alg);
    kernel.retain(|(t, _), _| window.is_none_or(|w| *t <= w));
    let mut steps: Vec<ResolutionStep> = Vec::new();
    let mut minimal = true;
    let status = loop {
        if kernel.values().all(Vec::is_empty) {
            break ResolutionStatus::Finished { length: steps.len().saturating_sub(1) };
        }
        if steps.len() > max_len {
            break ResolutionStatus::NotFinished { computed: steps.len() };
        }
        let gens = minimal_generators(alg, &ambient, &kernel, window)?;
        let proj = ProjectiveSum::new(alg, gens.iter().map(|(v, t, _)| (*v, *t)).collect(), window);
        limits.check_dim("projective term", proj.dim()).map_err(HochschildError::Resource)?;

        if let Ambient::Projective(prev) = &ambient {
            // generators must avoid the tops of the previous projective
            for (_, _, g) in &gens {
                for k in 0..prev.summands().len() {
                    if prev.top_cell(alg, k).is_some_and(|c| g.get(c).is_some()) {
                        minimal = false;
                    }
                }
            }
        }

        let columns: Vec<SparseVec> = proj
            .cells
            .iter()
            .map(|&(k, b)| ambient.act_vec(alg, &gens[k].2, &SparseVec::unit(b, alg.field())))
            .collect::<Result<_, _>>()?;
        let differential = ExactMatrix::from_triplets(
            ambient.dim(),
            proj.dim(),
            alg.field(),
            columns.iter().enumerate().flat_map(|(c, v)| v.entries().iter().map(move |(r, x)| (*r, c, x.clone()))),
        )?;

        let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for i in 0..proj.dim() {
            let (v, t) = proj.tags[i];
            blocks.entry((t, v)).or_default().push(i);
        }
        let mut next = Blocks::new();
        for (key, cols) in blocks {
            let local = ExactMatrix::from_triplets(
                ambient.dim(),
                cols.len(),
                alg.field(),
                cols.iter().enumerate().flat_map(|(c, &g)| columns[g].entries().iter().map(move |(r, x)| (*r, c, x.clone()))),
            )?;
            let ker = kernel_basis(&local)?;
            if ker.dim() > 0 {
                next.insert(key, ker.basis.into_iter().map(|v| v.map_indices(|c| cols[c])).collect());
            }
        }
        steps.push(ResolutionStep { projective: proj.clone(), differential });
        ambient = Ambient::Projective(proj);
        kernel = next;
    };
    let res = Resolution { steps, status, minimal, length_bound: max_len, window };
    if !res.minimal {
        return Err(HochschildError::Invariant("resolution step is not minimal".into()));
    }
    res.check_complex()?;
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::simple_module;
    use crate::constructions::{beilinson, dual_numbers, BeilinsonSpec, Variant};
    use crate::linalg::Field;

    #[test]
    fn kronecker_simple_resolution() {
        let a = beilinson(&BeilinsonSpec { n: 2, variant: Variant::Symmetric }, Field::Rational).unwrap();
        let s1 = simple_module(&a, 1).unwrap();
        let r = minimal_resolution(&a, &s1, 4, None, &Limits::default()).unwrap();
        assert_eq!(r.status, ResolutionStatus::Finished { length: 1 });
        assert_eq!(r.steps[0].multiplicities(), BTreeMap::from([(1, 1)]));
        assert_eq!(r.steps[1].multiplicities(), BTreeMap::from([(0, 2)]));
        assert!(r.minimal);
    }

    #[test]
    fn dual_numbers_never_finish() {
        let a = dual_numbers(Field::Rational).unwrap();
        let s = simple_module(&a, 0).unwrap();
        for len in [0, 1, 3] {
            let r = minimal_resolution(&a, &s, len, None, &Limits::default()).unwrap();
            assert_eq!(r.status, ResolutionStatus::NotFinished { computed: len + 1 });
            assert!((0..=len).all(|i| r.rank_at(i) == 1));
        }
    }
}
