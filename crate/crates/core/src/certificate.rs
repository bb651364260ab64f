//! Berge path and cycle certificates and their validation.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{vertex_bit, Hypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Path,
    Cycle,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Path => "path",
            CertificateKind::Cycle => "cycle",
        })
    }
}

/// Alternating vertex/edge sequence `v_1, e_1, v_2, ...`. Vertex ids and
/// edge indices are both 1-based; edge indices refer to the hypergraph's
/// edge order.
///
/// A path with `s` vertices carries `s - 1` edges; a cycle carries `s`,
/// the last one joining `v_s` back to `v_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BergeCertificate {
    pub kind: CertificateKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// The first constraint a certificate breaks. Positions are 1-based:
/// `RepeatedVertex`/`VertexOutOfRange` name a vertex slot, the others name
/// an edge slot (pair `i` is `{v_i, v_{i+1}}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CertificateViolation {
    #[error("certificate has no vertices")]
    Empty,
    #[error("a {kind} with {vertices} vertices cannot have {edges} edges")]
    LengthMismatch {
        kind: CertificateKind,
        vertices: usize,
        edges: usize,
    },
    #[error("vertex at position {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("vertex at position {0} repeats an earlier vertex")]
    RepeatedVertex(usize),
    #[error("edge index at position {0} does not name an edge")]
    IndexOutOfRange(usize),
    #[error("edge at position {0} repeats an earlier edge")]
    RepeatedEdge(usize),
    #[error("edge at position {0} does not contain its vertex pair")]
    PairNotCovered(usize),
}

impl BergeCertificate {
    pub fn path(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        BergeCertificate {
            kind: CertificateKind::Path,
            vertices,
            edges,
        }
    }

    pub fn cycle(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        BergeCertificate {
            kind: CertificateKind::Cycle,
            vertices,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    /// Covers every vertex of `h` (meaningful after validation).
    pub fn is_hamiltonian_in(&self, h: &Hypergraph) -> bool {
        self.vertices.len() == h.n()
    }

    /// Pair `i` (1-based) as `(v_i, v_{i+1})`, wrapping for cycles.
    pub fn pair(&self, i: usize) -> (usize, usize) {
        let s = self.vertices.len();
        (self.vertices[i - 1], self.vertices[i % s])
    }

    /// The same path traversed from the other end.
    pub fn reversed(&self) -> Self {
        match self.kind {
            CertificateKind::Path => {
                let mut vertices = self.vertices.clone();
                vertices.reverse();
                let mut edges = self.edges.clone();
                edges.reverse();
                BergeCertificate::path(vertices, edges)
            }
            CertificateKind::Cycle => {
                // v_1, then v_s .. v_2; edges e_s .. e_1
                let mut vertices = vec![self.vertices[0]];
                vertices.extend(self.vertices[1..].iter().rev());
                let mut edges = self.edges.clone();
                edges.reverse();
                BergeCertificate::cycle(vertices, edges)
            }
        }
    }
}

/// Checks every Berge constraint of `cert` against `h`, left to right.
pub fn validate_certificate(
    h: &Hypergraph,
    cert: &BergeCertificate,
) -> Result<(), CertificateViolation> {
    let s = cert.vertices.len();
    if s == 0 {
        return Err(CertificateViolation::Empty);
    }
    let expected_edges = match cert.kind {
        CertificateKind::Path => s - 1,
        CertificateKind::Cycle => s,
    };
    if cert.edges.len() != expected_edges || (cert.kind == CertificateKind::Cycle && s < 2) {
        return Err(CertificateViolation::LengthMismatch {
            kind: cert.kind,
            vertices: s,
            edges: cert.edges.len(),
        });
    }

    let mut used_vertices = 0u64;
    for (i, &v) in cert.vertices.iter().enumerate() {
        if !h.contains_vertex(v) {
            return Err(CertificateViolation::VertexOutOfRange(i + 1));
        }
        if used_vertices & vertex_bit(v) != 0 {
            return Err(CertificateViolation::RepeatedVertex(i + 1));
        }
        used_vertices |= vertex_bit(v);
    }

    let masks = h.edge_masks();
    let mut used_edges = vec![false; masks.len()];
    for (i, &e) in cert.edges.iter().enumerate() {
        if e == 0 || e > masks.len() {
            return Err(CertificateViolation::IndexOutOfRange(i + 1));
        }
        if used_edges[e - 1] {
            return Err(CertificateViolation::RepeatedEdge(i + 1));
        }
        used_edges[e - 1] = true;
        let (a, b) = cert.pair(i + 1);
        let need = vertex_bit(a) | vertex_bit(b);
        if masks[e - 1] & need != need {
            return Err(CertificateViolation::PairNotCovered(i + 1));
        }
    }
    Ok(())
}
