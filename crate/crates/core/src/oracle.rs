//! Brute-force reference computations.
//!
//! Each function here recomputes something the rest of the crate derives in
//! closed form, by direct search over small objects. None of them call into
//! the closed-form code paths they are compared against.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::strata::VanishingPattern;

/// Partitions of `n` as part vectors, found by filtering all `2^{n-1}`
/// compositions for weakly decreasing ones, sorted largest first.
pub fn partitions_by_compositions(n: usize) -> Vec<Vec<usize>> {
    assert!((1..=24).contains(&n), "composition search is for small n");
    let mut out = Vec::new();
    for mask in 0u32..1 << (n - 1) {
        // Bit i set: cut between positions i and i+1.
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            out.push(parts);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Smallest `m >= 1` with `χ_k^m` trivial, found by repeated multiplication
/// of exponents of `ω`.
pub fn character_order_by_powering(n: usize, k: usize) -> usize {
    let mut power = k % n;
    let mut m = 1;
    while power != 0 {
        power = (power + k) % n;
        m += 1;
    }
    m
}

/// `{j in 0..n : χ_k(ω^j) = 1}`.
pub fn kernel_by_search(n: usize, k: usize) -> Vec<usize> {
    (0..n).filter(|j| (j * k).is_multiple_of(n)).collect()
}

/// `n` times the coefficient of `α_c` in `λ_k`, obtained by writing
/// `λ_k = ε_1 + ... + ε_k - (k/n)(ε_1 + ... + ε_n)` and taking partial sums of
/// the `ε`-coordinates.
pub fn fundamental_coefficient_numerator(n: usize, k: usize, c: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    (1..=c as i64).map(|j| if j <= k { n - k } else { -k }).sum()
}

/// Whether `α_c` has a non-integral coefficient in `λ_k`.
pub fn occurs_by_fraction(n: usize, c: usize, k: usize) -> bool {
    fundamental_coefficient_numerator(n, k, c) % n as i64 != 0
}

/// Whether `v_k` vanishes at a point with this pattern: some `x_c = 0` with
/// `α_c` occurring in `μ_k`.
pub fn v_vanishes(vp: &VanishingPattern, k: usize) -> bool {
    vp.zeros().iter().any(|&c| occurs_by_fraction(vp.n(), c, k))
}

/// `Z^x` as the exponents `j` with `χ_k(ω^j) = 1` for every `k` such that
/// `v_k` does not vanish.
pub fn stabilizer_by_search(vp: &VanishingPattern) -> Vec<usize> {
    let n = vp.n();
    let live: Vec<usize> = (1..n).filter(|&k| !v_vanishes(vp, k)).collect();
    (0..n)
        .filter(|j| live.iter().all(|k| (k * j) % n == 0))
        .collect()
}

/// The `v_k` that vanish, by direct occurrence tests.
pub fn v_zero_set_by_search(vp: &VanishingPattern) -> BTreeSet<usize> {
    (1..vp.n()).filter(|&k| v_vanishes(vp, k)).collect()
}

/// Characters `χ_k` with the searched stabilizer inside their kernel.
pub fn admitting_by_search(vp: &VanishingPattern) -> Vec<usize> {
    let n = vp.n();
    let stab = stabilizer_by_search(vp);
    (0..n)
        .filter(|k| stab.iter().all(|j| (j * k) % n == 0))
        .collect()
}

/// Number of `σ ∈ S_m` with `σ² = 1`, by walking all permutations.
pub fn involutions_by_search(m: usize) -> u64 {
    assert!(m <= 10, "permutation walk is for small m");
    let mut perm: Vec<usize> = (0..m).collect();
    let is_involution = |p: &[usize]| p.iter().enumerate().all(|(i, &j)| p[j] == i);
    let mut count = u64::from(is_involution(&perm));
    // Heap's algorithm, iterative form.
    let mut c = vec![0usize; m];
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count += u64::from(is_involution(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_filter() {
        assert_eq!(
            partitions_by_compositions(4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(partitions_by_compositions(6).len(), 11);
    }

    #[test]
    fn powering() {
        let orders: Vec<_> = (0..6).map(|k| character_order_by_powering(6, k)).collect();
        assert_eq!(orders, vec![1, 6, 3, 2, 3, 6]);
        assert_eq!(kernel_by_search(12, 8), vec![0, 3, 6, 9]);
        assert_eq!(kernel_by_search(6, 3), vec![0, 2, 4]);
    }

    #[test]
    fn epsilon_route() {
        let lambda1: Vec<_> = (1..12).map(|c| fundamental_coefficient_numerator(12, 1, c)).collect();
        assert_eq!(lambda1, vec![11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn searched_stabilizers() {
        let vp = VanishingPattern::new(6, [4]).unwrap();
        assert_eq!(stabilizer_by_search(&vp), vec![0, 2, 4]);
        assert_eq!(v_zero_set_by_search(&vp), BTreeSet::from([1, 2, 4, 5]));
        assert_eq!(admitting_by_search(&vp), vec![0, 3]);
        let vp = VanishingPattern::new(6, [3]).unwrap();
        assert_eq!(stabilizer_by_search(&vp), vec![0, 3]);
    }

    #[test]
    fn involution_counts() {
        // OEIS A000085
        let counts: Vec<_> = (0..=8).map(involutions_by_search).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232, 764]);
    }
}
