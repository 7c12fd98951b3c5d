//! Integer combinatorics shared by the constructions and the oracles.

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Binomial with a possibly negative top argument treated as zero.
pub fn binomial_i(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 {
        return 0;
    }
    binomial(n as u64, k as u64)
}

/// Number of monomials of degree `d` in `vars` variables, `dim Sym_d(k^vars)`.
pub fn monomial_count(vars: usize, d: usize) -> u64 {
    if vars == 0 {
        return u64::from(d == 0);
    }
    binomial((d + vars - 1) as u64, (vars - 1) as u64)
}

/// All exponent vectors of total degree `d` in `vars` variables, in
/// lexicographically decreasing order (`x1^d` first).
pub fn monomials(vars: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(vars: usize, d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if vars == 1 {
            prefix.push(d as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u32);
            rec(vars - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(vars, d, &mut Vec::with_capacity(vars), &mut out);
    out
}

/// All `k`-element subsets of `items`, each in increasing order.
pub fn subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, pick: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if pick.len() == k {
            out.push(pick.clone());
            return;
        }
        for i in start..items.len() {
            pick.push(items[i]);
            rec(items, k, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(items, k, 0, &mut pick, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(monomial_count(3, 3), 10);
        assert_eq!(monomial_count(0, 0), 1);
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(subsets(&[0, 1, 2], 2).len(), 3);
        assert_eq!(subsets::<usize>(&[], 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn monomial_enumeration_matches_count() {
        for vars in 1..5 {
            for d in 0..7 {
                assert_eq!(monomials(vars, d).len() as u64, monomial_count(vars, d));
            }
        }
    }
}
