//! Builders for the explicit algebras: Beilinson algebras on the linear
//! quiver, the rolled-up algebra on the cyclic quiver, twisted group algebras
//! of diagonal cyclic actions, and the Veronese Hilbert series.

use std::collections::HashMap;

use num::rational::BigRational;
use num::One;

use crate::algebra::{
    build_algebra, AlgebraError, Arrow, BasisElement, BasisLabel, GradedAlgebra, HilbertSeries, Quiver, Relation,
    RelationSet, Truncation,
};
use crate::combinatorics::{monomial_count, monomials};
use crate::limits::Limits;
use crate::linalg::field::{is_prime, primitive_root_of_unity};
use crate::linalg::{Field, FieldScalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `A0 = ⊕ Sym_{i-j}(V)`: commutativity relations.
    Symmetric,
    /// `A1 = ⊕ Λ^{j-i}(V*)`: anticommutativity and square-zero relations.
    Exterior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BeilinsonSpec {
    pub n: usize,
    pub variant: Variant,
}

/// A diagonal action of the cyclic group of order `order`: the generator
/// scales `x_i` by `ζ^{weights[i]}` for a fixed primitive root `ζ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicActionSpec {
    pub order: usize,
    pub weights: Vec<usize>,
}

impl CyclicActionSpec {
    pub fn new(order: usize, weights: Vec<usize>) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::Params("group order must be positive".into()));
        }
        if let Some(w) = weights.iter().find(|w| **w >= order) {
            return Err(AlgebraError::Params(format!("weight {w} not in [0, {order})")));
        }
        Ok(CyclicActionSpec { order, weights })
    }

    /// The standard action of `μ_n` on `k^n`: all weights 1.
    pub fn scalar(n: usize) -> Self {
        CyclicActionSpec { order: n, weights: vec![1; n] }
    }

    pub fn n_vars(&self) -> usize {
        self.weights.len()
    }

    /// Weight of the determinant character, `Σ w_i mod r`.
    pub fn det_weight(&self) -> usize {
        self.weights.iter().sum::<usize>() % self.order
    }

    /// Whether the action lands in `SL(V)`.
    pub fn is_special_linear(&self) -> bool {
        self.det_weight() == 0
    }

    pub fn monomial_weight(&self, exponents: &[u32]) -> usize {
        exponents.iter().zip(&self.weights).map(|(e, w)| *e as usize * w).sum::<usize>() % self.order
    }
}

fn arrow_grid(vertices: usize, per_step: usize, cyclic: bool) -> Vec<Arrow> {
    let steps = if cyclic { vertices } else { vertices - 1 };
    (0..steps)
        .flat_map(|i| {
            (0..per_step).map(move |a| Arrow {
                id: i * per_step + a,
                source: i,
                target: (i + 1) % vertices,
                degree: 1,
            })
        })
        .collect()
}

/// Quadratic relations through each middle vertex `i+1` of `i -> i+1 -> i+2`.
fn quadratic_relations(
    quiver: &Quiver,
    n: usize,
    starts: impl Iterator<Item = usize>,
    variant: Variant,
) -> Result<RelationSet, AlgebraError> {
    let vertices = quiver.vertex_count();
    let id = |step: usize, a: usize| (step % vertices) * n + a;
    let one = BigRational::one();
    let mut rels = Vec::new();
    for i in starts {
        for a in 0..n {
            for b in a..n {
                // product order: second step first
                let ab = quiver.path(&[id(i + 1, b), id(i, a)])?;
                let ba = quiver.path(&[id(i + 1, a), id(i, b)])?;
                match variant {
                    Variant::Symmetric if a < b => {
                        rels.push(Relation::new(vec![(one.clone(), ab), (-one.clone(), ba)])?)
                    }
                    Variant::Symmetric => {}
                    Variant::Exterior if a < b => rels.push(Relation::new(vec![(one.clone(), ab), (one.clone(), ba)])?),
                    Variant::Exterior => rels.push(Relation::new(vec![(one.clone(), ab)])?),
                }
            }
        }
    }
    Ok(RelationSet::new(rels))
}

/// Beilinson algebra on the linear quiver `0 -> 1 -> .. -> n-1` with `n`
/// arrows per step. Arrow `i*n + a` is `x_a` from `i` to `i+1`.
pub fn beilinson(spec: &BeilinsonSpec, field: Field) -> Result<GradedAlgebra, AlgebraError> {
    let n = spec.n;
    if n < 2 {
        return Err(AlgebraError::Params(format!("Beilinson algebras need n >= 2, got {n}")));
    }
    let quiver = Quiver::new(n, arrow_grid(n, n, false))?;
    let rels = quadratic_relations(&quiver, n, 0..n.saturating_sub(2), spec.variant)?;
    // one degree past the longest path so the builder certifies exhaustion
    let alg = build_algebra(&quiver, &rels, n, field, &Limits::default())?;
    let tag = match spec.variant {
        Variant::Symmetric => "A0",
        Variant::Exterior => "A1",
    };
    Ok(alg.renamed(format!("{tag}(n={n})")))
}

/// The rolled-up algebra: cyclic quiver on `n` vertices, `n` arrows per step
/// (the extra step `n-1 -> 0` included), commutativity relations through every
/// vertex including the wrap-around.
pub fn rolled_up(n: usize, max_degree: usize, field: Field, limits: &Limits) -> Result<GradedAlgebra, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::Params(format!("the rolled-up algebra needs n >= 2, got {n}")));
    }
    let quiver = Quiver::new(n, arrow_grid(n, n, true))?;
    let rels = quadratic_relations(&quiver, n, 0..n, Variant::Symmetric)?;
    Ok(build_algebra(&quiver, &rels, max_degree, field, limits)?.renamed(format!("B0(n={n})")))
}

/// Twisted group algebra `S * C_r` over `F_p`, presented on the `r` character
/// idempotents `e_χ = (1/r) Σ_s ζ^{-χ s} g^s`.
///
/// Basis elements are `x^a e_χ` (source `χ`, target `χ + w(a)`). Structure
/// constants are not written down symbolically: every product is evaluated in
/// the group basis `x^a g^s` with `g x_i = ζ^{w_i} x_i g` and transformed back
/// through the discrete Fourier transform.
pub fn twisted_group_algebra(
    spec: &CyclicActionSpec,
    max_degree: usize,
    p: u64,
    limits: &Limits,
) -> Result<GradedAlgebra, AlgebraError> {
    let r = spec.order;
    let nv = spec.n_vars();
    if !is_prime(p) {
        return Err(AlgebraError::Params(format!("{p} is not prime")));
    }
    let zeta = primitive_root_of_unity(r as u64, p)
        .ok_or_else(|| AlgebraError::Params(format!("{p} is not congruent to 1 mod {r}: no primitive root of unity")))?;
    let field = Field::prime(p)?;
    let total: u64 = (0..=max_degree).map(|d| monomial_count(nv, d)).sum::<u64>() * r as u64;
    limits.check_dim("twisted group algebra basis", total as usize).map_err(AlgebraError::Resource)?;

    let zpow: Vec<FieldScalar> = (0..r).map(|k| field.from_i64(zeta as i64).pow(k as u64)).collect();
    let z = |k: i64| zpow[k.rem_euclid(r as i64) as usize].clone();
    let inv_r = field.from_i64(r as i64).inv().expect("r invertible mod p");

    // quiver: arrow χ*nv + i is x_i e_χ
    let arrows: Vec<Arrow> = (0..r)
        .flat_map(|chi| {
            spec.weights.iter().enumerate().map(move |(i, w)| Arrow {
                id: chi * nv + i,
                source: chi,
                target: (chi + w) % r,
                degree: 1,
            })
        })
        .collect();
    let quiver = Quiver::new(r, arrows)?;
    let one = BigRational::one();
    let mut rels = Vec::new();
    for chi in 0..r {
        for i in 0..nv {
            for j in i + 1..nv {
                let ij = quiver.path(&[((chi + spec.weights[i]) % r) * nv + j, chi * nv + i])?;
                let ji = quiver.path(&[((chi + spec.weights[j]) % r) * nv + i, chi * nv + j])?;
                rels.push(Relation::new(vec![(one.clone(), ij), (-one.clone(), ji)])?);
            }
        }
    }

    let mut basis = Vec::new();
    let mut index: HashMap<(Vec<u32>, usize), usize> = HashMap::new();
    for d in 0..=max_degree {
        for mono in monomials(nv, d) {
            for chi in 0..r {
                index.insert((mono.clone(), chi), basis.len());
                basis.push(BasisElement {
                    source: chi,
                    target: (chi + spec.monomial_weight(&mono)) % r,
                    degree: d,
                    label: BasisLabel::Monomial { exponents: mono.clone(), character: chi },
                });
            }
        }
    }

    // x^a e_χ in the group basis: s -> coefficient of x^a g^s
    let to_group = |chi: usize| -> Vec<FieldScalar> { (0..r).map(|s| inv_r.mul(&z(-((chi * s) as i64)))).collect() };
    let mut products = HashMap::new();
    for (i, bi) in basis.iter().enumerate() {
        let BasisLabel::Monomial { exponents: ea, character: chi } = &bi.label else { unreachable!() };
        for (j, bj) in basis.iter().enumerate() {
            if bi.degree + bj.degree > max_degree {
                continue;
            }
            let BasisLabel::Monomial { exponents: eb, character: psi } = &bj.label else { unreachable!() };
            let (left, right) = (to_group(*chi), to_group(*psi));
            let wb = spec.monomial_weight(eb) as i64;
            // coefficients of x^{a+b} g^u
            let mut group = vec![field.zero(); r];
            for (s, ls) in left.iter().enumerate() {
                for (t, rt) in right.iter().enumerate() {
                    let twist = z(s as i64 * wb);
                    group[(s + t) % r] = group[(s + t) % r].add(&ls.mul(rt).mul(&twist));
                }
            }
            let sum: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            // g^u = Σ_φ ζ^{φ u} e_φ
            let entries: Vec<(usize, FieldScalar)> = (0..r)
                .map(|phi| {
                    let c = group
                        .iter()
                        .enumerate()
                        .fold(field.zero(), |acc, (u, gu)| acc.add_product(gu, &z((phi * u) as i64)));
                    (index[&(sum.clone(), phi)], c)
                })
                .collect();
            let v = SparseVec::from_entries(entries);
            if !v.is_zero() {
                products.insert((i, j), v);
            }
        }
    }

    let arrow_images = quiver
        .arrows()
        .iter()
        .map(|a| {
            let i = a.id % nv;
            let mut e = vec![0u32; nv];
            e[i] = 1;
            index.get(&(e, a.source)).map(|k| SparseVec::unit(*k, field)).unwrap_or_default()
        })
        .collect();

    let name = format!(
        "S*C{r}(weights={})",
        spec.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(",")
    );
    GradedAlgebra::from_parts(
        name,
        field,
        quiver,
        RelationSet::new(rels),
        basis,
        Truncation::Degree(max_degree),
        products,
        arrow_images,
    )
}

/// Hilbert function of the `n`-th Veronese subring of `k[x_1..x_n]`.
pub fn veronese_hilbert(n: usize, max_degree: usize) -> Result<HilbertSeries, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::Params("the Veronese ring needs n >= 1".into()));
    }
    let dims = (0..=max_degree).map(|d| if d % n == 0 { monomial_count(n, d) as usize } else { 0 }).collect();
    Ok(HilbertSeries { dims, exhausted: false })
}

/// `k[x]/(x^2)` with `x` in degree 1.
pub fn dual_numbers(field: Field) -> Result<GradedAlgebra, AlgebraError> {
    let q = Quiver::new(1, vec![Arrow { id: 0, source: 0, target: 0, degree: 1 }])?;
    let r = RelationSet::new(vec![Relation::new(vec![(BigRational::one(), q.path(&[0, 0])?)])?]);
    Ok(build_algebra(&q, &r, 2, field, &Limits::default())?.renamed("k[x]/(x^2)"))
}

/// Path algebra of the Kronecker quiver (two arrows `0 -> 1`).
pub fn kronecker(field: Field) -> Result<GradedAlgebra, AlgebraError> {
    let q = Quiver::new(2, arrow_grid(2, 2, false))?;
    Ok(build_algebra(&q, &RelationSet::empty(), 2, field, &Limits::default())?.renamed("Kronecker"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn beilinson_examples() {
        let a0_2 = beilinson(&BeilinsonSpec { n: 2, variant: Variant::Symmetric }, q()).unwrap();
        assert_eq!(a0_2.dim(), 4);
        let a0_3 = beilinson(&BeilinsonSpec { n: 3, variant: Variant::Symmetric }, q()).unwrap();
        assert_eq!(a0_3.dim(), 15);
        assert_eq!(a0_3.hilbert_function().dims, vec![3, 6, 6]);
        let a1_3 = beilinson(&BeilinsonSpec { n: 3, variant: Variant::Exterior }, q()).unwrap();
        assert_eq!(a1_3.dim(), 12);
        assert_eq!(a1_3.hilbert_function().dims, vec![3, 6, 3]);
        let a1_2 = beilinson(&BeilinsonSpec { n: 2, variant: Variant::Exterior }, q()).unwrap();
        assert_eq!(a1_2.hilbert_function().dims, vec![2, 2]);
        assert!(beilinson(&BeilinsonSpec { n: 1, variant: Variant::Symmetric }, q()).is_err());
    }

    #[test]
    fn beilinson_closed_forms() {
        for n in 2..=4 {
            let sym = beilinson(&BeilinsonSpec { n, variant: Variant::Symmetric }, q()).unwrap();
            let ext = beilinson(&BeilinsonSpec { n, variant: Variant::Exterior }, q()).unwrap();
            for d in 0..n {
                let pairs = (n - d) as u64;
                assert_eq!(sym.hilbert_function().dims[d] as u64, pairs * monomial_count(n, d));
                assert_eq!(ext.hilbert_function().dims[d] as u64, pairs * binomial(n as u64, d as u64));
            }
            assert!(sym.is_finite_dimensional() && ext.is_finite_dimensional());
            assert_eq!(sym.top_degree(), n - 1);
        }
    }

    #[test]
    fn beilinson_center_is_scalars() {
        let a = beilinson(&BeilinsonSpec { n: 3, variant: Variant::Symmetric }, q()).unwrap();
        assert_eq!(a.center_dim(0).unwrap(), 1);
        assert_eq!(a.center_dim(1).unwrap(), 0);
        assert_eq!(a.center_dim(2).unwrap(), 0);
        a.check_associativity().unwrap();
        a.check_idempotents().unwrap();
    }

    #[test]
    fn rolled_up_examples() {
        let lim = Limits::default();
        assert_eq!(rolled_up(2, 4, q(), &lim).unwrap().hilbert_function().dims, vec![2, 4, 6, 8, 10]);
        assert_eq!(rolled_up(3, 3, q(), &lim).unwrap().hilbert_function().dims, vec![3, 9, 18, 30]);
        assert_eq!(rolled_up(2, 0, q(), &lim).unwrap().hilbert_function().dims, vec![2]);
        let b = rolled_up(2, 3, q(), &lim).unwrap();
        b.check_associativity().unwrap();
        assert_eq!(b.truncation(), Truncation::Degree(3));
    }

    #[test]
    fn twisted_examples() {
        let lim = Limits::default();
        let t = twisted_group_algebra(&CyclicActionSpec::scalar(2), 4, 5, &lim).unwrap();
        assert_eq!(t.hilbert_function().dims, vec![2, 4, 6, 8, 10]);
        t.check_associativity().unwrap();
        t.check_idempotents().unwrap();
        let triv = twisted_group_algebra(&CyclicActionSpec::new(1, vec![0]).unwrap(), 3, 5, &lim).unwrap();
        assert_eq!(triv.hilbert_function().dims, vec![1, 1, 1, 1]);
        let mixed = twisted_group_algebra(&CyclicActionSpec::new(2, vec![1, 0]).unwrap(), 2, 5, &lim).unwrap();
        assert_eq!(mixed.hilbert_function().dims, vec![2, 4, 6]);
        assert!(twisted_group_algebra(&CyclicActionSpec::scalar(3), 2, 5, &lim).is_err());
        assert!(twisted_group_algebra(&CyclicActionSpec::scalar(2), 2, 9, &lim).is_err());
    }

    #[test]
    fn twisted_relations_hold_in_the_dft_structure() {
        // the declared commutativity presentation must vanish under the DFT product
        let t = twisted_group_algebra(&CyclicActionSpec::new(3, vec![1, 2, 0]).unwrap(), 2, 7, &Limits::default())
            .unwrap();
        let position = |id: usize| t.quiver().arrows().iter().position(|a| a.id == id).unwrap();
        for rel in &t.relations().relations {
            let mut acc = SparseVec::new();
            for (c, path) in &rel.terms {
                let c = t.field().from_rational(c).unwrap();
                let x = t.arrow_image(position(path.arrows[0]));
                let y = t.arrow_image(position(path.arrows[1]));
                acc = acc.axpy(&c, &t.mul_vec(x, y).unwrap());
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn veronese_examples() {
        assert_eq!(veronese_hilbert(2, 4).unwrap().dims, vec![1, 0, 3, 0, 5]);
        assert_eq!(veronese_hilbert(1, 5).unwrap().dims, vec![1; 6]);
        assert_eq!(veronese_hilbert(3, 3).unwrap().dims[3], 10);
    }
}
