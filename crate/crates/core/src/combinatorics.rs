//! Binomial coefficients and lexicographic k-subset enumeration.

use crate::hypergraph::{vertex_bit, VertexMask};

/// `n choose k`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All `k`-subsets of `vertices` (given ascending), as masks, in
/// lexicographic order of their ascending vertex lists.
pub fn k_subsets_of(vertices: &[usize], k: usize) -> Vec<VertexMask> {
    let mut out = Vec::new();
    if k > vertices.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0, |m, &i| m | vertex_bit(vertices[i])));
        // advance to the next combination
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < vertices.len() - k + pos {
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<VertexMask> {
    let all: Vec<usize> = (1..=n).collect();
    k_subsets_of(&all, k)
}
