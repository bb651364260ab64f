//! Uniform hypergraphs on labeled vertices `1..=n`.
//!
//! Every edge is kept twice: as an ascending vertex list (the canonical
//! external form) and as a `u64` bitset over vertices, so membership tests
//! in the search engine are a single mask operation. Vertex ids at the API
//! boundary are 1-based; bit `v - 1` of a mask stands for vertex `v`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Largest supported vertex count (one bit per vertex in a `u64`).
pub const MAX_VERTICES: usize = 64;

/// A set of vertices encoded as a bitset; bit `v - 1` is vertex `v`.
pub type VertexMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("uniformity r = {r} is too small (need r >= 2)")]
    RTooSmall { r: usize },
    #[error("uniformity r = {r} exceeds the vertex count n = {n}")]
    RExceedsN { r: usize, n: usize },
    #[error("n = {n} is outside the supported range 1..={max}", max = MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("edge {edge} has {len} distinct vertices, expected {r}")]
    NonUniformEdge { edge: usize, len: usize, r: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {second} duplicates edge {first}")]
    DuplicateEdge { first: usize, second: usize },
}

impl HypergraphError {
    /// 1-based index of the offending edge, when the error is about one edge.
    pub fn edge(&self) -> Option<usize> {
        match *self {
            HypergraphError::NonUniformEdge { edge, .. } => Some(edge),
            HypergraphError::DuplicateEdge { second, .. } => Some(second),
            _ => None,
        }
    }
}

/// An `r`-uniform hypergraph with `n` vertices and an ordered list of
/// distinct edges. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
    masks: Vec<VertexMask>,
}

#[inline]
pub fn vertex_bit(v: usize) -> VertexMask {
    1u64 << (v - 1)
}

/// Ascending 1-based vertex ids of a mask.
pub fn mask_vertices(mut mask: VertexMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    out
}

impl Hypergraph {
    /// Validates and builds a hypergraph. Edges may list their vertices in
    /// any order; the edge order itself is kept and defines edge indices.
    pub fn new<E, I>(n: usize, r: usize, edges: E) -> Result<Self, HypergraphError>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        if r < 2 {
            return Err(HypergraphError::RTooSmall { r });
        }
        if r > n {
            return Err(HypergraphError::RExceedsN { r, n });
        }
        if n == 0 || n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices { n });
        }

        let mut seen: HashMap<VertexMask, usize> = HashMap::new();
        let mut sorted_edges = Vec::new();
        let mut masks = Vec::new();
        for (idx, edge) in edges.into_iter().enumerate() {
            let edge_no = idx + 1;
            let mut mask: VertexMask = 0;
            for v in edge {
                if v == 0 || v > n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
                mask |= vertex_bit(v);
            }
            let len = mask.count_ones() as usize;
            if len != r {
                return Err(HypergraphError::NonUniformEdge {
                    edge: edge_no,
                    len,
                    r,
                });
            }
            if let Some(&first) = seen.get(&mask) {
                return Err(HypergraphError::DuplicateEdge {
                    first,
                    second: edge_no,
                });
            }
            seen.insert(mask, edge_no);
            sorted_edges.push(mask_vertices(mask));
            masks.push(mask);
        }

        Ok(Hypergraph {
            n,
            r,
            edges: sorted_edges,
            masks,
        })
    }

    /// Builds from edge bitsets that are already known to be distinct and
    /// `r`-uniform (used by enumerators that generate edges themselves).
    pub(crate) fn from_masks_unchecked(n: usize, r: usize, masks: Vec<VertexMask>) -> Self {
        debug_assert!(masks.iter().all(|m| m.count_ones() as usize == r));
        let edges = masks.iter().map(|&m| mask_vertices(m)).collect();
        Hypergraph { n, r, edges, masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in index order, each as ascending vertex ids.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Edge with 1-based index `index`.
    pub fn edge(&self, index: usize) -> Option<&[usize]> {
        index
            .checked_sub(1)
            .and_then(|i| self.edges.get(i))
            .map(Vec::as_slice)
    }

    pub fn edge_masks(&self) -> &[VertexMask] {
        &self.masks
    }

    /// Mask with one bit for each of the `n` vertices.
    pub fn all_vertices(&self) -> VertexMask {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        (1..=self.n).contains(&v)
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize, HypergraphError> {
        if !self.contains_vertex(v) {
            return Err(HypergraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let bit = vertex_bit(v);
        Ok(self.masks.iter().filter(|&&m| m & bit != 0).count())
    }

    /// Degree of every vertex; entry `i` is the degree of vertex `i + 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &m in &self.masks {
            let mut rest = m;
            while rest != 0 {
                deg[rest.trailing_zeros() as usize] += 1;
                rest &= rest - 1;
            }
        }
        deg
    }

    /// Minimum degree; 0 for an edgeless hypergraph.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// 1-based index of the edge with exactly this vertex set.
    pub fn find_edge(&self, mask: VertexMask) -> Option<usize> {
        self.masks.iter().position(|&m| m == mask).map(|i| i + 1)
    }

    /// The same hypergraph with edge `index` (1-based) removed. The
    /// remaining edges keep their relative order.
    pub fn without_edge(&self, index: usize) -> Option<Hypergraph> {
        if index == 0 || index > self.edges.len() {
            return None;
        }
        let masks = self
            .masks
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != index)
            .map(|(_, &m)| m)
            .collect();
        Some(Hypergraph::from_masks_unchecked(self.n, self.r, masks))
    }

    /// The same hypergraph with an extra edge appended, if it is new.
    pub fn with_edge(&self, mask: VertexMask) -> Option<Hypergraph> {
        if mask.count_ones() as usize != self.r
            || mask & !self.all_vertices() != 0
            || self.find_edge(mask).is_some()
        {
            return None;
        }
        let mut masks = self.masks.clone();
        masks.push(mask);
        Some(Hypergraph::from_masks_unchecked(self.n, self.r, masks))
    }

    /// Image under a vertex permutation: `perm[v - 1]` is the new id of `v`.
    /// Edge order is preserved.
    pub fn relabeled(&self, perm: &[usize]) -> Hypergraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let masks = self
            .masks
            .iter()
            .map(|&m| {
                mask_vertices(m)
                    .into_iter()
                    .fold(0, |acc, v| acc | vertex_bit(perm[v - 1]))
            })
            .collect();
        Hypergraph::from_masks_unchecked(self.n, self.r, masks)
    }

    /// Edges sorted lexicographically by their ascending vertex lists.
    pub fn canonical(&self) -> Hypergraph {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| self.edges[a].cmp(&self.edges[b]));
        let masks = order.into_iter().map(|i| self.masks[i]).collect();
        Hypergraph::from_masks_unchecked(self.n, self.r, masks)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-graph on {} vertices with {} edges",
            self.r,
            self.n,
            self.edges.len()
        )
    }
}
