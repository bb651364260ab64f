//! Exact search and verification toolkit for hamiltonian Berge paths and
//! cycles in `r`-uniform hypergraphs.
//!
//! - [`hypergraph`] and [`certificate`]: the objects under test and the
//!   checker for Berge path/cycle witnesses;
//! - [`constructions`]: extremal families and the punctured tight cycle;
//! - [`search`]: complete backtracking search with matching-based pruning;
//! - [`lemmas`]: brute-force checks of inequalities about subsets of paths;
//! - [`harness`]: degree thresholds and theorem-level verification runs;
//! - [`io`]: the text formats for hypergraphs and certificates.

pub mod certificate;
pub mod combinatorics;
pub mod constructions;
pub mod harness;
pub mod hypergraph;
pub mod io;
pub mod lemmas;
pub mod matching;
pub mod search;

pub use certificate::{
    validate_certificate, BergeCertificate, CertificateKind, CertificateViolation,
};
pub use constructions::{build, ConstructionSpec, Family, SpecialPair};
pub use hypergraph::{Hypergraph, HypergraphError};
pub use search::{
    find_hamiltonian_cycle, find_hamiltonian_path, is_hamiltonian_connected, is_one_extendable,
    longest_path_between, Decision, SearchConfig, SearchOutcome,
};
