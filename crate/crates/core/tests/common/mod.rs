//! Brute-force references shared by the integration tests. Nothing here
//! uses the search engine or the matching code.

#![allow(dead_code)]

use berge_core::Hypergraph;
use rand::Rng;

fn assign_edges(
    h: &Hypergraph,
    seq: &[usize],
    closing: bool,
    i: usize,
    used: &mut Vec<bool>,
) -> bool {
    let pairs = seq.len() - 1 + usize::from(closing);
    if i == pairs {
        return true;
    }
    let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
    for (idx, e) in h.edges().iter().enumerate() {
        if !used[idx] && e.contains(&a) && e.contains(&b) {
            used[idx] = true;
            if assign_edges(h, seq, closing, i + 1, used) {
                return true;
            }
            used[idx] = false;
        }
    }
    false
}

fn permute(rest: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == rest.len() {
        return visit(rest);
    }
    for i in k..rest.len() {
        rest.swap(k, i);
        if permute(rest, k + 1, visit) {
            return true;
        }
        rest.swap(k, i);
    }
    false
}

/// Tries every ordering of the inner vertices and every injective edge
/// assignment.
pub fn naive_hamiltonian_path(h: &Hypergraph, x: usize, y: usize) -> bool {
    let mut inner: Vec<usize> = (1..=h.n()).filter(|&v| v != x && v != y).collect();
    permute(&mut inner, 0, &mut |mid| {
        let mut seq = vec![x];
        seq.extend_from_slice(mid);
        seq.push(y);
        assign_edges(h, &seq, false, 0, &mut vec![false; h.edge_count()])
    })
}

pub fn naive_hamiltonian_cycle(h: &Hypergraph) -> bool {
    if h.n() < 2 {
        return false;
    }
    let mut inner: Vec<usize> = (2..=h.n()).collect();
    permute(&mut inner, 0, &mut |mid| {
        let mut seq = vec![1];
        seq.extend_from_slice(mid);
        assign_edges(h, &seq, true, 0, &mut vec![false; h.edge_count()])
    })
}

/// Every `r`-subset of `1..=n` kept independently with probability `p`.
pub fn random_hypergraph<R: Rng>(n: usize, r: usize, p: f64, rng: &mut R) -> Hypergraph {
    let mut edges = Vec::new();
    let mut subset: Vec<usize> = (1..=r).collect();
    loop {
        if rng.gen_bool(p) {
            edges.push(subset.clone());
        }
        // next r-subset in lexicographic order
        let Some(i) = (0..r).rev().find(|&i| subset[i] < n - r + i + 1) else {
            break;
        };
        subset[i] += 1;
        for k in i + 1..r {
            subset[k] = subset[k - 1] + 1;
        }
    }
    Hypergraph::new(n, r, edges).expect("generated edges are valid")
}
