//! Geometric predictions computed without any algebra: sheaf cohomology of
//! twisted differential forms on projective space, the HKR and Hodge
//! assemblies of Hochschild (co)homology of `P^{n-1}`, and fixed-point counts
//! for twisted group rings of diagonal cyclic actions.

use crate::combinatorics::{binomial, binomial_i, monomial_count, monomials, subsets};
use crate::constructions::CyclicActionSpec;
use crate::hochschild::Direction;
use crate::linalg::{rank, ExactMatrix, Field};
use crate::table::{DimTable, Window};

/// `H^q(P^{n-1}, Ω^p(m))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BottQuery {
    pub n: usize,
    pub p: i64,
    pub q: i64,
    pub m: i64,
}

impl BottQuery {
    /// Whether `0 <= p, q <= n-1`; outside this range the answer is 0 by
    /// convention.
    pub fn in_range(&self) -> bool {
        let top = self.n as i64 - 1;
        (0..=top).contains(&self.p) && (0..=top).contains(&self.q)
    }
}

/// `dim H^q(P^{n-1}, Ω^p(m))` by Bott's formula, `n >= 2`.
pub fn bott(n: usize, p: i64, q: i64, m: i64) -> u64 {
    let query = BottQuery { n, p, q, m };
    if n < 2 || !query.in_range() {
        return 0;
    }
    let top = n as i64 - 1;
    if q == 0 && m > p {
        return binomial_i(m + top - p, m) * binomial_i(m - 1, p);
    }
    if p == q && m == 0 {
        return 1;
    }
    if q == top && m < p - top {
        return binomial_i(-m + p, -m) * binomial_i(-m - 1, top - p);
    }
    0
}

/// `dim H^0(P^{n-1}, Ω^p(m))` computed directly: global sections are the
/// forms `Σ f_I dx_I` with `deg f_I = m - p` killed by contraction with the
/// Euler field, so this is the kernel dimension of
/// `S_{m-p} ⊗ Λ^p -> S_{m-p+1} ⊗ Λ^{p-1}`.
pub fn h0_by_contraction(n: usize, p: usize, m: i64) -> u64 {
    if m < p as i64 || p >= n {
        return 0;
    }
    let deg = (m - p as i64) as usize;
    if p == 0 {
        return monomial_count(n, deg);
    }
    let vars: Vec<usize> = (0..n).collect();
    let src_monos = monomials(n, deg);
    let dst_monos = monomials(n, deg + 1);
    let src_forms = subsets(&vars, p);
    let dst_forms = subsets(&vars, p - 1);
    let dst_mono_idx: std::collections::HashMap<&Vec<u32>, usize> =
        dst_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dst_form_idx: std::collections::HashMap<&Vec<usize>, usize> =
        dst_forms.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let f = Field::Rational;
    let mut trip = Vec::new();
    for (fi, form) in src_forms.iter().enumerate() {
        for (mi, mono) in src_monos.iter().enumerate() {
            let col = fi * src_monos.len() + mi;
            // ι_E(dx_{i1} ∧ .. ∧ dx_{ip}) = Σ_k (-1)^k x_{ik} dx_{..without ik..}
            for (k, &var) in form.iter().enumerate() {
                let mut rest = form.clone();
                rest.remove(k);
                let mut up = mono.clone();
                up[var] += 1;
                let row = dst_form_idx[&rest] * dst_monos.len() + dst_mono_idx[&up];
                trip.push((row, col, f.from_i64(if k % 2 == 0 { 1 } else { -1 })));
            }
        }
    }
    let cols = src_forms.len() * src_monos.len();
    let m = ExactMatrix::from_triplets(dst_forms.len() * dst_monos.len(), cols, f, trip).expect("in-bounds triplets");
    (cols - rank(&m).expect("rational matrix")) as u64
}

/// `dim HH^i(P^{n-1}) = Σ_{p+q=i} h^q(Λ^p T)` with `Λ^p T ≅ Ω^{n-1-p}(n)`.
pub fn hkr_cohomology(n: usize, max_i: usize) -> DimTable {
    let top = n as i64 - 1;
    let dims: Vec<u64> = (0..=max_i as i64)
        .map(|i| (0..=top.min(i)).map(|p| bott(n, top - p, i - p, n as i64)).sum())
        .collect();
    DimTable::from_ungraded(&dims)
}

/// `dim HH_i(P^{n-1}) = Σ_{p-q=i} h^q(Ω^p)` for `i_min <= i <= i_max`.
pub fn hodge_homology(n: usize, i_min: i64, i_max: i64) -> DimTable {
    let top = n as i64 - 1;
    let mut t = DimTable::new(Window::ungraded(i_min, i_max));
    for i in i_min..=i_max {
        let dim: u64 = (0..=top).map(|p| bott(n, p, p - i, 0)).sum();
        t.set(i, None, dim).expect("inside window");
    }
    t
}

/// Form degree `i` and internal degrees `0..=max_degree` of the fixed-point
/// prediction for the twisted group ring of a diagonal cyclic action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointQuery {
    pub action: CyclicActionSpec,
    pub i: usize,
    pub max_degree: usize,
}

/// Coordinates fixed by `c^s`, `c` the generator.
pub fn fixed_coordinates(action: &CyclicActionSpec, s: usize) -> Vec<usize> {
    (0..action.n_vars()).filter(|&j| (s * action.weights[j]) % action.order == 0).collect()
}

/// Number of forms `x^a dx_S` with `a` and `S` supported on `coords`,
/// `|S| = i`, `|a| + |S| = d`, and total weight `≡ residue (mod r)`; with
/// `residue = None` every form is counted.
pub fn count_forms(action: &CyclicActionSpec, coords: &[usize], i: usize, d: usize, residue: Option<usize>) -> u64 {
    if i > coords.len() || i > d {
        return 0;
    }
    let r = action.order;
    let w = |j: usize| action.weights[j];
    let mut count = 0;
    for s in subsets(coords, i) {
        let form_weight: usize = s.iter().map(|&j| w(j)).sum();
        for a in monomials(coords.len(), d - i) {
            let mono_weight: usize = a.iter().zip(coords).map(|(e, &j)| *e as usize * w(j)).sum();
            if residue.is_none_or(|res| (mono_weight + form_weight) % r == res % r) {
                count += 1;
            }
        }
    }
    count
}

/// Contribution of the single group element `c^s` at form degree `i` and
/// internal degree `d`.
pub fn fixed_point_summand(action: &CyclicActionSpec, direction: Direction, s: usize, i: usize, d: usize) -> u64 {
    let coords = fixed_coordinates(action, s);
    match direction {
        Direction::Homology => count_forms(action, &coords, i, d, Some(0)),
        Direction::Cohomology => match action.n_vars().checked_sub(i) {
            Some(k) => count_forms(action, &coords, k, d, Some(action.det_weight())),
            None => 0,
        },
    }
}

fn fixed_point_table(q: &FixedPointQuery, direction: Direction) -> DimTable {
    let i = q.i as i64;
    let mut t = DimTable::new(Window::graded(i, i, 0, q.max_degree as i64));
    for d in 0..=q.max_degree {
        let total: u64 = (0..q.action.order).map(|s| fixed_point_summand(&q.action, direction, s, q.i, d)).sum();
        t.set(i, Some(d as i64), total).expect("inside window");
    }
    t
}

/// `(i, d) -> dim` of `⊕_g (Ω^i_{V^g})^G` in internal degree `d`, with `dx`
/// carrying degree 1.
pub fn fixed_point_hh_homology(q: &FixedPointQuery) -> DimTable {
    fixed_point_table(q, Direction::Homology)
}

/// The cohomological counterpart: form degree `n_vars - i` and invariance
/// shifted by the determinant weight.
pub fn fixed_point_hh_cohomology(q: &FixedPointQuery) -> DimTable {
    fixed_point_table(q, Direction::Cohomology)
}

/// `Σ_i dim Sym_{d-i} · C(n, i)`: all forms of degree `d` on `k^n`.
pub fn all_forms(n: usize, d: usize) -> u64 {
    (0..=n.min(d)).map(|i| monomial_count(n, d - i) * binomial(n as u64, i as u64)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(order: usize, weights: Vec<usize>, i: usize, max_degree: usize) -> FixedPointQuery {
        FixedPointQuery { action: CyclicActionSpec::new(order, weights).unwrap(), i, max_degree }
    }

    #[test]
    fn bott_examples() {
        for d in 0..6 {
            assert_eq!(bott(2, 0, 0, d), d as u64 + 1);
        }
        assert_eq!(bott(2, 1, 1, 0), 1);
        assert_eq!(bott(3, 0, 0, 3), 10);
        assert_eq!(bott(2, 0, 1, -2), 1);
        assert_eq!(bott(3, 1, 1, 0), 1);
        assert_eq!(bott(3, 5, 0, 1), 0);
    }

    #[test]
    fn h0_paths_agree() {
        for n in 2..=3 {
            for p in 0..n {
                for m in -1..=5 {
                    assert_eq!(bott(n, p as i64, 0, m), h0_by_contraction(n, p, m), "n={n} p={p} m={m}");
                }
            }
        }
    }

    #[test]
    fn hkr_and_hodge() {
        assert_eq!(hkr_cohomology(2, 2).values(), vec![1, 3, 0]);
        assert_eq!(hkr_cohomology(3, 4).values(), vec![1, 8, 10, 0, 0]);
        assert_eq!(hodge_homology(2, -1, 1).values(), vec![0, 2, 0]);
        assert_eq!(hodge_homology(4, 0, 0).values(), vec![4]);
    }

    #[test]
    fn fixed_point_examples() {
        let h = fixed_point_hh_homology(&q(2, vec![1, 1], 0, 4));
        assert_eq!(h.values_at_degree(0), vec![2]);
        assert_eq!((0..=4).map(|d| h.get(0, Some(d)).unwrap()).collect::<Vec<_>>(), vec![2, 0, 3, 0, 5]);
        assert_eq!(fixed_point_hh_homology(&q(2, vec![1, 1], 1, 2)).get(1, Some(2)).unwrap(), 4);
        assert_eq!(fixed_point_hh_homology(&q(2, vec![1, 1], 2, 2)).get(2, Some(2)).unwrap(), 1);
        assert_eq!(fixed_point_hh_cohomology(&q(4, vec![1, 3], 0, 0)).get(0, Some(0)).unwrap(), 0);
        assert_eq!(fixed_point_hh_homology(&q(3, vec![1, 1, 1], 3, 3)).get(3, Some(3)).unwrap(), 1);
        assert_eq!(fixed_point_hh_cohomology(&q(3, vec![1, 1, 1], 3, 3)).get(3, Some(3)).unwrap(), 10);
    }

    #[test]
    fn unrestricted_identity_summand_counts_all_forms() {
        let a = CyclicActionSpec::new(3, vec![1, 2, 2]).unwrap();
        let coords = fixed_coordinates(&a, 0);
        for d in 0..6 {
            let total: u64 = (0..=3).map(|i| count_forms(&a, &coords, i, d, None)).sum();
            assert_eq!(total, all_forms(3, d));
        }
    }
}
