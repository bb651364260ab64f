//! Extremal constructions and the punctured tight cycle.
//!
//! Labeling conventions (stable, relied on by golden files and special
//! pairs):
//! - clique families put the first clique `Q` on the lowest ids and the
//!   second clique `R` on the highest ids, overlapping in the middle;
//! - bipartite-style families put part `A` on `1..=|A|` and part `B` after it;
//! - tight-cycle families use `v_i = i` and keep edges in `e_1..e_n` order
//!   (minus any deleted ones).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{validate_certificate, BergeCertificate};
use crate::combinatorics::{binomial, k_subsets, k_subsets_of};
use crate::hypergraph::{vertex_bit, Hypergraph, VertexMask, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("internal construction error: {0}")]
    InternalConstructionError(String),
}

fn bad<T>(msg: impl Into<String>) -> Result<T, ConstructionError> {
    Err(ConstructionError::BadParameters(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Two cliques sharing one vertex.
    H1,
    /// Independent-ish part `A` of size ceil((n+1)/2).
    H2,
    /// Tight cycle minus one edge, for `r >= n/2`.
    H3,
    /// Two cliques sharing two vertices.
    H1P,
    /// Part `A` of size ceil(n/2); edges meet `A` at most once.
    H2P,
    /// Tight cycle minus two edges, for `r > n/2`.
    H3P,
    /// The fixed 5-vertex 3-graph.
    H4,
    TightCycle,
    CPrime,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::H1,
        Family::H2,
        Family::H3,
        Family::H1P,
        Family::H2P,
        Family::H3P,
        Family::H4,
        Family::TightCycle,
        Family::CPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::H1 => "H1",
            Family::H2 => "H2",
            Family::H3 => "H3",
            Family::H1P => "H1P",
            Family::H2P => "H2P",
            Family::H3P => "H3P",
            Family::H4 => "H4",
            Family::TightCycle => "TIGHT_CYCLE",
            Family::CPrime => "C_PRIME",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase().replace(['-', '\''], "_");
        let fam = match key.as_str() {
            "H1" => Family::H1,
            "H2" => Family::H2,
            "H3" => Family::H3,
            "H1P" | "H_1" => Family::H1P,
            "H2P" | "H_2" => Family::H2P,
            "H3P" | "H_3" => Family::H3P,
            "H4" => Family::H4,
            "TIGHT_CYCLE" | "TIGHT" | "C" => Family::TightCycle,
            "C_PRIME" | "CPRIME" | "C_" => Family::CPrime,
            _ => return bad(format!("unknown family '{s}'")),
        };
        Ok(fam)
    }
}

/// Which construction to build and with which parameters. `deleted` holds
/// tight-cycle edge labels for the families that remove edges (H3 and
/// C_PRIME take one, H3P takes two); an empty list selects the defaults
/// (`e_n` for one deletion, `e_n, e_1` for two).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub n: usize,
    pub r: usize,
    pub deleted: Vec<usize>,
}

impl ConstructionSpec {
    pub fn new(family: Family, n: usize, r: usize) -> Self {
        ConstructionSpec {
            family,
            n,
            r,
            deleted: Vec::new(),
        }
    }

    pub fn with_deleted(mut self, deleted: Vec<usize>) -> Self {
        self.deleted = deleted;
        self
    }

    pub fn h4() -> Self {
        ConstructionSpec::new(Family::H4, 5, 3)
    }

    fn deletion_count(&self) -> usize {
        match self.family {
            Family::H3 | Family::CPrime => 1,
            Family::H3P => 2,
            _ => 0,
        }
    }

    /// Deleted tight-cycle labels with defaults filled in.
    pub fn effective_deleted(&self) -> Vec<usize> {
        if !self.deleted.is_empty() {
            return self.deleted.clone();
        }
        match self.deletion_count() {
            1 => vec![self.n],
            2 => vec![self.n, 1],
            _ => Vec::new(),
        }
    }

    /// Checks the family's parameter ranges.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let (n, r) = (self.n, self.r);
        if n > MAX_VERTICES {
            return bad(format!(
                "n = {n} exceeds the supported maximum {MAX_VERTICES}"
            ));
        }
        match self.family {
            Family::H1 | Family::H2 => {
                if r < 3 || 2 * r + 1 > n {
                    return bad(format!(
                        "{} needs 3 <= r <= (n-1)/2, got n = {n}, r = {r}",
                        self.family
                    ));
                }
            }
            Family::H1P | Family::H2P => {
                if r < 3 || 2 * r > n {
                    return bad(format!(
                        "{} needs 3 <= r <= n/2, got n = {n}, r = {r}",
                        self.family
                    ));
                }
            }
            Family::H3 => {
                if r < 3 || r >= n || 2 * r < n {
                    return bad(format!(
                        "H3 needs 3 <= r < n and r >= n/2, got n = {n}, r = {r}"
                    ));
                }
            }
            Family::H3P => {
                if r < 3 || r >= n || 2 * r <= n {
                    return bad(format!(
                        "H3P needs 3 <= r < n and r > n/2, got n = {n}, r = {r}"
                    ));
                }
            }
            Family::H4 => {
                if n != 5 || r != 3 {
                    return bad(format!("H4 is fixed at n = 5, r = 3, got n = {n}, r = {r}"));
                }
            }
            Family::TightCycle => {
                if r < 2 || r >= n {
                    return bad(format!(
                        "TIGHT_CYCLE needs 2 <= r < n, got n = {n}, r = {r}"
                    ));
                }
            }
            Family::CPrime => {
                if r < 3 || r >= n {
                    return bad(format!("C_PRIME needs 3 <= r < n, got n = {n}, r = {r}"));
                }
            }
        }

        let want = self.deletion_count();
        if want == 0 {
            if !self.deleted.is_empty() {
                return bad(format!("{} takes no deleted edges", self.family));
            }
            return Ok(());
        }
        let deleted = self.effective_deleted();
        if deleted.len() != want {
            return bad(format!(
                "{} takes exactly {want} deleted edge index(es)",
                self.family
            ));
        }
        if let Some(&j) = deleted.iter().find(|&&j| j == 0 || j > n) {
            return bad(format!("deleted edge index {j} is outside 1..={n}"));
        }
        if want == 2 && deleted[0] == deleted[1] {
            return bad("the two deleted edge indices must differ");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpecialPair {
    pub x: usize,
    pub y: usize,
}

/// Result of [`build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub hypergraph: Hypergraph,
    /// Pair with no hamiltonian path, where the family names one.
    pub special_pair: Option<SpecialPair>,
    /// For tight-cycle based families: the tight-cycle label `i` of `e_i`
    /// stored at each edge position.
    pub edge_labels: Option<Vec<usize>>,
}

/// A tight cycle with some edges deleted, remembering the original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuncturedTightCycle {
    pub hypergraph: Hypergraph,
    pub deleted: Vec<usize>,
    labels: Vec<usize>,
}

impl PuncturedTightCycle {
    /// Tight-cycle labels of the stored edges, in position order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Tight-cycle label of the edge at 1-based `position`.
    pub fn label_of(&self, position: usize) -> Option<usize> {
        position
            .checked_sub(1)
            .and_then(|p| self.labels.get(p))
            .copied()
    }

    /// 1-based position of the edge with tight-cycle label `label`.
    pub fn position_of(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label).map(|p| p + 1)
    }
}

/// Mask of `e_i = {v_i, ..., v_{i+r-1}}` (indices mod n, 1-based).
pub fn tight_edge_mask(n: usize, r: usize, i: usize) -> VertexMask {
    (0..r).fold(0, |m, k| m | vertex_bit((i - 1 + k) % n + 1))
}

fn check_tight(n: usize, r: usize) -> Result<(), ConstructionError> {
    if r < 2 || r >= n || n > MAX_VERTICES {
        return bad(format!(
            "tight cycle needs 2 <= r < n <= {MAX_VERTICES}, got n = {n}, r = {r}"
        ));
    }
    Ok(())
}

/// The tight cycle `C(n, r)` with edges `e_1..e_n` in index order.
pub fn build_tight_cycle(n: usize, r: usize) -> Result<Hypergraph, ConstructionError> {
    check_tight(n, r)?;
    let masks = (1..=n).map(|i| tight_edge_mask(n, r, i)).collect();
    Ok(Hypergraph::from_masks_unchecked(n, r, masks))
}

/// `C(n, r)` with the listed edge labels removed.
pub fn build_tight_cycle_minus(
    n: usize,
    r: usize,
    deleted: &[usize],
) -> Result<PuncturedTightCycle, ConstructionError> {
    check_tight(n, r)?;
    if let Some(&j) = deleted.iter().find(|&&j| j == 0 || j > n) {
        return bad(format!("deleted edge index {j} is outside 1..={n}"));
    }
    let labels: Vec<usize> = (1..=n).filter(|i| !deleted.contains(i)).collect();
    let masks = labels.iter().map(|&i| tight_edge_mask(n, r, i)).collect();
    Ok(PuncturedTightCycle {
        hypergraph: Hypergraph::from_masks_unchecked(n, r, masks),
        deleted: deleted.to_vec(),
        labels,
    })
}

/// The punctured tight cycle `C'(n, r)` obtained by deleting `e_j`.
pub fn build_c_prime(
    n: usize,
    r: usize,
    j: usize,
) -> Result<PuncturedTightCycle, ConstructionError> {
    build_tight_cycle_minus(n, r, &[j])
}

fn clique_edges(vertices: &[usize], r: usize) -> Vec<VertexMask> {
    k_subsets_of(vertices, r)
}

fn sorted_lex(n: usize, r: usize, mut masks: Vec<VertexMask>) -> Hypergraph {
    masks.sort_by_key(|&m| crate::hypergraph::mask_vertices(m));
    masks.dedup();
    Hypergraph::from_masks_unchecked(n, r, masks)
}

/// Two cliques on `1..=q` and `q-shared+1..=n`.
fn two_cliques(n: usize, r: usize, q: usize, shared: usize) -> Hypergraph {
    let first: Vec<usize> = (1..=q).collect();
    let second: Vec<usize> = (q + 1 - shared..=n).collect();
    let mut masks = clique_edges(&first, r);
    masks.extend(clique_edges(&second, r));
    sorted_lex(n, r, masks)
}

/// All `r`-sets meeting `1..=a` in at most one vertex.
fn at_most_one_in_prefix(n: usize, r: usize, a: usize) -> Hypergraph {
    let prefix: VertexMask = (1..=a).fold(0, |m, v| m | vertex_bit(v));
    let masks = k_subsets(n, r)
        .into_iter()
        .filter(|m| (m & prefix).count_ones() <= 1)
        .collect();
    Hypergraph::from_masks_unchecked(n, r, masks)
}

/// Builds the hypergraph described by `spec`.
pub fn build(spec: &ConstructionSpec) -> Result<Construction, ConstructionError> {
    spec.validate()?;
    let (n, r) = (spec.n, spec.r);
    let plain = |hypergraph| Construction {
        hypergraph,
        special_pair: None,
        edge_labels: None,
    };
    let construction = match spec.family {
        Family::H1 => plain(two_cliques(n, r, (n + 2) / 2, 1)),
        Family::H2 => plain(at_most_one_in_prefix(n, r, (n + 2) / 2)),
        Family::H1P => {
            let q = (n + 3) / 2;
            Construction {
                hypergraph: two_cliques(n, r, q, 2),
                special_pair: Some(SpecialPair { x: q - 1, y: q }),
                edge_labels: None,
            }
        }
        Family::H2P => {
            let a = n.div_ceil(2);
            Construction {
                hypergraph: at_most_one_in_prefix(n, r, a),
                special_pair: Some(SpecialPair { x: a + 1, y: a + 2 }),
                edge_labels: None,
            }
        }
        Family::H4 => Construction {
            hypergraph: Hypergraph::new(
                5,
                3,
                vec![vec![1, 5, 2], vec![1, 5, 3], vec![1, 5, 4], vec![2, 3, 4]],
            )
            .expect("H4 edge list is valid"),
            special_pair: Some(SpecialPair { x: 1, y: 5 }),
            edge_labels: None,
        },
        Family::TightCycle => Construction {
            hypergraph: build_tight_cycle(n, r)?,
            special_pair: None,
            edge_labels: Some((1..=n).collect()),
        },
        Family::H3 | Family::H3P | Family::CPrime => {
            let punctured = build_tight_cycle_minus(n, r, &spec.effective_deleted())?;
            Construction {
                hypergraph: punctured.hypergraph,
                special_pair: None,
                edge_labels: Some(punctured.labels),
            }
        }
    };
    Ok(construction)
}

/// Closed-form minimum degree of the family.
pub fn expected_min_degree(spec: &ConstructionSpec) -> Result<usize, ConstructionError> {
    spec.validate()?;
    let (n, r) = (spec.n as u64, spec.r as u64);
    let value = match spec.family {
        Family::H1 | Family::H2 => binomial((n - 1) / 2, r - 1),
        Family::H1P | Family::H2P => binomial(n / 2, r - 1),
        Family::H3 | Family::CPrime => r - 1,
        Family::H3P => r - 2,
        Family::H4 => 2,
        Family::TightCycle => r,
    };
    Ok(value as usize)
}

/// Symmetry of the cyclic order `v_1..v_n`, applied to normalized labels:
/// `i ↦ shift + (i - 1)` or, when reflected, `i ↦ shift - (i - 1)`
/// (mod n, 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralMap {
    pub n: usize,
    pub shift: usize,
    pub reflect: bool,
}

impl DihedralMap {
    pub fn apply(&self, i: usize) -> usize {
        let n = self.n;
        let t = i - 1;
        let zero_based = if self.reflect {
            (self.shift + n - t % n) % n
        } else {
            (self.shift + t) % n
        };
        zero_based + 1
    }

    pub fn apply_mask(&self, mask: VertexMask) -> VertexMask {
        crate::hypergraph::mask_vertices(mask)
            .into_iter()
            .fold(0, |m, v| m | vertex_bit(self.apply(v)))
    }

    /// Label of the image of tight-cycle edge `e_label` under this map.
    fn apply_edge(&self, r: usize, label: usize) -> usize {
        let image = self.apply_mask(tight_edge_mask(self.n, r, label));
        (1..=self.n)
            .find(|&i| tight_edge_mask(self.n, r, i) == image)
            .expect("dihedral maps permute tight-cycle edges")
    }

    fn inverse_edge(&self, r: usize, label: usize) -> usize {
        (1..=self.n)
            .find(|&i| self.apply_edge(r, i) == label)
            .expect("dihedral maps permute tight-cycle edges")
    }
}

/// A hamiltonian path in `C'(n, r)` between two given vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPrimeWitness {
    /// Certificate against [`build_c_prime`]`(n, r, j)`; edge entries are
    /// positions in that hypergraph.
    pub certificate: BergeCertificate,
    /// The same edges as tight-cycle labels `e_i`.
    pub edge_labels: Vec<usize>,
    /// Map from the normalized picture (`x = v_1`, `y = v_h`, deleted
    /// `e_j'` with `h <= j' + 1 <= n`) to the actual labels.
    pub relabeling: DihedralMap,
    /// True when the normalized path was built from `y` to `x` and reversed.
    pub reversed: bool,
    pub normalized_h: usize,
    pub normalized_j: usize,
}

/// Vertex sequence and tight-cycle edge labels of the explicit hamiltonian
/// `v_1, v_h`-path in `C(n, r) - e_j`, assuming `2 <= h <= j + 1 <= n`.
pub fn normalized_witness(n: usize, h: usize, j: usize) -> (Vec<usize>, Vec<usize>) {
    debug_assert!(2 <= h && h <= j + 1 && j < n);
    let mut vertices = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n - 1);

    // first part: v_1 .. v_n through v_1..v_{h-1}
    if h == 2 {
        vertices.push(1);
    } else {
        let mut i = 1;
        while i < h - 1 {
            vertices.push(i);
            edges.push(i);
            i += 2;
        }
        vertices.push(h - 1);
        let mut k = h - 1;
        if h.is_multiple_of(2) {
            edges.push(h - 2);
            vertices.push(h - 2);
            k = h - 2;
        }
        while k > 2 {
            edges.push(k - 2);
            vertices.push(k - 2);
            k -= 2;
        }
    }
    edges.push(n);
    vertices.push(n);

    // second part: v_n down to v_h, skipping e_j
    let mut i = n;
    while i > j + 1 {
        edges.push(i - 1);
        vertices.push(i - 1);
        i -= 1;
    }
    while i > h {
        edges.push(i - 2);
        vertices.push(i - 1);
        i -= 1;
    }
    (vertices, edges)
}

/// Hamiltonian `v_1, v_h`-path in `C'(n, r)` with `e_j` deleted.
pub fn witness_path_c_prime(
    n: usize,
    r: usize,
    j: usize,
    h: usize,
) -> Result<CPrimeWitness, ConstructionError> {
    witness_path_c_prime_between(n, r, j, 1, h)
}

/// Hamiltonian `x, y`-path in `C'(n, r)` with `e_j` deleted, for any
/// distinct `x`, `y`.
pub fn witness_path_c_prime_between(
    n: usize,
    r: usize,
    j: usize,
    x: usize,
    y: usize,
) -> Result<CPrimeWitness, ConstructionError> {
    if r < 3 || r >= n || n > MAX_VERTICES {
        return bad(format!(
            "witness path needs 3 <= r < n, got n = {n}, r = {r}"
        ));
    }
    if j == 0 || j > n {
        return bad(format!("deleted edge index {j} is outside 1..={n}"));
    }
    if x == 0 || x > n || y == 0 || y > n {
        return bad(format!("endpoints must lie in 1..={n}"));
    }
    if x == y {
        return bad("endpoints must be distinct");
    }

    let punctured = build_c_prime(n, r, j)?;
    for reversed in [false, true] {
        let (start, end) = if reversed { (y, x) } else { (x, y) };
        for reflect in [false, true] {
            let map = DihedralMap {
                n,
                shift: start - 1,
                reflect,
            };
            let h = (1..=n)
                .find(|&v| map.apply(v) == end)
                .expect("map is a bijection");
            let j_norm = map.inverse_edge(r, j);
            if !(h <= j_norm + 1 && j_norm < n) {
                continue;
            }
            let (norm_vertices, norm_edges) = normalized_witness(n, h, j_norm);
            let mut vertices: Vec<usize> = norm_vertices.iter().map(|&v| map.apply(v)).collect();
            let mut labels: Vec<usize> = norm_edges.iter().map(|&e| map.apply_edge(r, e)).collect();
            if reversed {
                vertices.reverse();
                labels.reverse();
            }
            let positions = labels
                .iter()
                .map(|&l| {
                    punctured.position_of(l).ok_or_else(|| {
                        ConstructionError::InternalConstructionError(format!(
                            "witness uses the deleted edge e_{l}"
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let certificate = BergeCertificate::path(vertices, positions);
            validate_certificate(&punctured.hypergraph, &certificate).map_err(|v| {
                ConstructionError::InternalConstructionError(format!(
                    "witness for n = {n}, r = {r}, j = {j}, x = {x}, y = {y} is invalid: {v}"
                ))
            })?;
            if !certificate.is_hamiltonian_in(&punctured.hypergraph) {
                return Err(ConstructionError::InternalConstructionError(
                    "witness is not hamiltonian".into(),
                ));
            }
            return Ok(CPrimeWitness {
                certificate,
                edge_labels: labels,
                relabeling: map,
                reversed,
                normalized_h: h,
                normalized_j: j_norm,
            });
        }
    }
    Err(ConstructionError::InternalConstructionError(format!(
        "no symmetry normalizes x = {x}, y = {y}, j = {j} for n = {n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for fam in Family::ALL {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
        }
        assert_eq!("h1p".parse::<Family>().unwrap(), Family::H1P);
        assert!("H9".parse::<Family>().is_err());
    }

    #[test]
    fn h4_matches_listing() {
        let c = build(&ConstructionSpec::h4()).unwrap();
        assert_eq!(
            c.hypergraph.edges(),
            &[vec![1, 2, 5], vec![1, 3, 5], vec![1, 4, 5], vec![2, 3, 4]]
        );
        assert_eq!(c.special_pair, Some(SpecialPair { x: 1, y: 5 }));
        assert!(build(&ConstructionSpec::new(Family::H4, 6, 3)).is_err());
    }

    #[test]
    fn h1p_shares_exactly_two_vertices() {
        let c = build(&ConstructionSpec::new(Family::H1P, 8, 3)).unwrap();
        let h = &c.hypergraph;
        assert_eq!(c.special_pair, Some(SpecialPair { x: 4, y: 5 }));
        // 2 * C(5,3) edges, none spanning both cliques
        assert_eq!(h.edge_count(), 20);
        let q: VertexMask = 0b0001_1111;
        let r: VertexMask = 0b1111_1000;
        assert_eq!((q & r).count_ones(), 2);
        assert!(h.edge_masks().iter().all(|&e| e & !q == 0 || e & !r == 0));
        assert_eq!(h.min_degree(), 6);
    }

    #[test]
    fn h2p_part_a_meets_edges_once() {
        let c = build(&ConstructionSpec::new(Family::H2P, 6, 3)).unwrap();
        let h = &c.hypergraph;
        let a: VertexMask = 0b111;
        assert!(h.edge_masks().iter().all(|&e| (e & a).count_ones() <= 1));
        // C(3,3) + 3 * C(3,2)
        assert_eq!(h.edge_count(), 10);
        assert_eq!(c.special_pair, Some(SpecialPair { x: 4, y: 5 }));
        assert_eq!(h.min_degree(), 3);
    }

    #[test]
    fn tight_cycle_edges() {
        let h = build_tight_cycle(7, 4).unwrap();
        assert_eq!(h.edge(6), Some(&[1, 2, 6, 7][..]));
        let c5 = build_tight_cycle(5, 3).unwrap();
        assert!((1..=5).all(|v| c5.degree(v) == Ok(3)));
        assert!(build_tight_cycle(4, 4).is_err());
        assert!(build_tight_cycle(4, 1).is_err());
    }

    #[test]
    fn c_prime_labels() {
        let p = build_c_prime(7, 4, 6).unwrap();
        assert_eq!(p.hypergraph.edge_count(), 6);
        assert_eq!(p.hypergraph.min_degree(), 3);
        assert_eq!(p.labels(), &[1, 2, 3, 4, 5, 7]);
        assert_eq!(p.position_of(7), Some(6));
        assert_eq!(p.position_of(6), None);
        assert_eq!(p.label_of(6), Some(7));
        assert!(build_c_prime(5, 3, 6).is_err());
        assert!(build_c_prime(5, 3, 0).is_err());
    }

    #[test]
    fn parameter_ranges() {
        assert!(ConstructionSpec::new(Family::H1, 7, 3).validate().is_ok());
        assert!(ConstructionSpec::new(Family::H1, 6, 3).validate().is_err());
        assert!(ConstructionSpec::new(Family::H1P, 6, 3).validate().is_ok());
        assert!(ConstructionSpec::new(Family::H1P, 6, 2).validate().is_err());
        assert!(ConstructionSpec::new(Family::H3, 8, 4).validate().is_ok());
        assert!(ConstructionSpec::new(Family::H3, 9, 4).validate().is_err());
        assert!(ConstructionSpec::new(Family::H3P, 8, 4).validate().is_err());
        assert!(ConstructionSpec::new(Family::H3P, 7, 4).validate().is_ok());
        assert!(ConstructionSpec::new(Family::H3P, 7, 4)
            .with_deleted(vec![2, 2])
            .validate()
            .is_err());
        assert!(ConstructionSpec::new(Family::H3P, 7, 4)
            .with_deleted(vec![2])
            .validate()
            .is_err());
        assert!(ConstructionSpec::new(Family::CPrime, 7, 4)
            .with_deleted(vec![8])
            .validate()
            .is_err());
        assert!(ConstructionSpec::new(Family::TightCycle, 7, 4)
            .with_deleted(vec![1])
            .validate()
            .is_err());
    }

    #[test]
    fn closed_form_degrees() {
        let d = |f, n, r| expected_min_degree(&ConstructionSpec::new(f, n, r)).unwrap();
        assert_eq!(d(Family::H1P, 8, 3), 6);
        assert_eq!(d(Family::H3P, 7, 4), 2);
        assert_eq!(d(Family::H3, 7, 4), 3);
        assert_eq!(d(Family::H1, 9, 3), 6);
        assert_eq!(expected_min_degree(&ConstructionSpec::h4()).unwrap(), 2);
    }

    #[test]
    fn h3_and_h3p_edge_counts() {
        let h3 = build(&ConstructionSpec::new(Family::H3, 7, 4)).unwrap();
        assert_eq!(h3.hypergraph.edge_count(), 6);
        let h3p = build(&ConstructionSpec::new(Family::H3P, 7, 4)).unwrap();
        assert_eq!(h3p.hypergraph.edge_count(), 5);
        assert_eq!(h3p.edge_labels, Some(vec![2, 3, 4, 5, 6]));
    }

    #[test]
    fn witness_h2_case() {
        let w = witness_path_c_prime(7, 4, 6, 2).unwrap();
        assert_eq!(w.certificate.vertices, vec![1, 7, 6, 5, 4, 3, 2]);
        assert_eq!(w.edge_labels, vec![7, 5, 4, 3, 2, 1]);
        assert_eq!(w.normalized_h, 2);
        assert_eq!(w.normalized_j, 6);
        assert!(!w.reversed);
    }

    #[test]
    fn witness_odd_and_even_first_parts() {
        let (v, e) = normalized_witness(9, 3, 5);
        assert_eq!(&v[..4], &[1, 2, 9, 8]);
        assert_eq!(&e[..2], &[1, 9]);
        let (v, e) = normalized_witness(9, 5, 6);
        assert_eq!(&v[..6], &[1, 3, 4, 2, 9, 8]);
        assert_eq!(&e[..4], &[1, 3, 2, 9]);
        let (v, e) = normalized_witness(9, 6, 6);
        assert_eq!(&v[..7], &[1, 3, 5, 4, 2, 9, 8]);
        assert_eq!(&e[..5], &[1, 3, 4, 2, 9]);
        assert_eq!(v.len(), 9);
        assert_eq!(*v.last().unwrap(), 6);
    }

    #[test]
    fn witness_rejects_bad_input() {
        assert!(witness_path_c_prime(7, 4, 6, 1).is_err());
        assert!(witness_path_c_prime(7, 2, 6, 3).is_err());
        assert!(witness_path_c_prime(7, 4, 8, 3).is_err());
        assert!(witness_path_c_prime(7, 4, 3, 8).is_err());
    }

    #[test]
    fn dihedral_maps_are_bijections() {
        for reflect in [false, true] {
            for shift in 0..6 {
                let m = DihedralMap {
                    n: 6,
                    shift,
                    reflect,
                };
                let mut image: Vec<usize> = (1..=6).map(|v| m.apply(v)).collect();
                image.sort_unstable();
                assert_eq!(image, (1..=6).collect::<Vec<_>>());
            }
        }
    }
}
