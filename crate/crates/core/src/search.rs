//! Exact search for hamiltonian Berge paths and cycles.
//!
//! The engine grows a vertex sequence depth-first. Each new consecutive
//! pair becomes a demand in a [`DemandMatcher`]; it is accepted only if the
//! matcher can still give every pair its own edge, so edge choices never
//! have to be branched on. With Hall pruning on, every node additionally
//! checks a relaxation of the remaining work: each unvisited vertex needs
//! its own edge containing it and some possible predecessor, on top of the
//! edges already committed to the prefix.
//!
//! Refutations are proofs of absence unless a budget was hit, in which
//! case the outcome is [`Decision::Undecided`].

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{validate_certificate, BergeCertificate, CertificateKind};
use crate::hypergraph::{vertex_bit, Hypergraph, VertexMask};
use crate::matching::{lex_first_assignment, Demand, DemandMatcher};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("endpoints must differ, got {0} twice")]
    SameEndpoints(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Found,
    Refuted,
    /// A node or time budget ran out before the search finished.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub decided: Decision,
    pub certificate: Option<BergeCertificate>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        self.decided == Decision::Found
    }

    pub fn is_refuted(&self) -> bool {
        self.decided == Decision::Refuted
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Ascending branch order, so the first certificate found is the
    /// lexicographically smallest vertex sequence.
    pub deterministic: bool,
    pub hall_pruning: bool,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            deterministic: false,
            hall_pruning: true,
            node_budget: None,
            time_budget: None,
        }
    }
}

impl SearchConfig {
    pub fn deterministic() -> Self {
        SearchConfig {
            deterministic: true,
            ..Self::default()
        }
    }

    pub fn without_pruning(self) -> Self {
        SearchConfig {
            hall_pruning: false,
            ..self
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Hamiltonian path ending at this vertex (0-based).
    PathTo(usize),
    /// Hamiltonian cycle back to the start.
    Cycle,
}

struct Engine<'a> {
    n: usize,
    all: VertexMask,
    neighbors: Vec<VertexMask>,
    matcher: DemandMatcher<'a>,
    config: SearchConfig,
    goal: Goal,
    path: Vec<usize>,
    visited: VertexMask,
    nodes: u64,
    started: Instant,
    aborted: bool,
}

fn neighbor_masks(h: &Hypergraph) -> Vec<VertexMask> {
    let mut nb = vec![0u64; h.n()];
    for &m in h.edge_masks() {
        let mut rest = m;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            nb[v] |= m;
            rest &= rest - 1;
        }
    }
    for (v, mask) in nb.iter_mut().enumerate() {
        *mask &= !(1u64 << v);
    }
    nb
}

#[inline]
fn bit(v: usize) -> VertexMask {
    1u64 << v
}

impl<'a> Engine<'a> {
    fn new(h: &'a Hypergraph, config: SearchConfig, goal: Goal, start: usize) -> Self {
        Engine {
            n: h.n(),
            all: h.all_vertices(),
            neighbors: neighbor_masks(h),
            matcher: DemandMatcher::new(h.n(), h.edge_masks()),
            config,
            goal,
            path: vec![start],
            visited: bit(start),
            nodes: 0,
            started: Instant::now(),
            aborted: false,
        }
    }

    fn over_budget(&mut self) -> bool {
        if let Some(limit) = self.config.node_budget {
            if self.nodes > limit {
                self.aborted = true;
            }
        }
        if let Some(limit) = self.config.time_budget {
            if self.nodes.is_multiple_of(1024) && self.started.elapsed() > limit {
                self.aborted = true;
            }
        }
        self.aborted
    }

    /// Relaxation check: prefix pairs plus one demand per unvisited vertex
    /// (and the closing pair of a cycle) must be matchable simultaneously.
    fn lookahead_ok(&mut self) -> bool {
        let remaining = self.all & !self.visited;
        let last = bit(*self.path.last().expect("path is never empty"));
        let preds = match self.goal {
            Goal::PathTo(y) => (remaining & !bit(y)) | last,
            Goal::Cycle => remaining | last,
        };
        let base = self.matcher.len();
        let mut ok = true;
        let mut rest = remaining;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let any = preds & !bit(w);
            if any == 0
                || !self.matcher.push(Demand {
                    required: bit(w),
                    any,
                })
            {
                ok = false;
                break;
            }
        }
        if ok && self.goal == Goal::Cycle {
            ok = self.matcher.push(Demand {
                required: bit(self.path[0]),
                any: remaining,
            });
        }
        self.matcher.truncate(base);
        ok
    }

    fn candidates(&self, last: usize) -> Vec<usize> {
        let remaining = self.all & !self.visited;
        let mut cand = self.neighbors[last] & remaining;
        if let Goal::PathTo(y) = self.goal {
            if remaining != bit(y) {
                cand &= !bit(y);
            }
        }
        let mut out = Vec::with_capacity(cand.count_ones() as usize);
        while cand != 0 {
            out.push(cand.trailing_zeros() as usize);
            cand &= cand - 1;
        }
        if !self.config.deterministic {
            // fail-first: fewest onward continuations
            out.sort_by_key(|&v| ((self.neighbors[v] & remaining & !bit(v)).count_ones(), v));
        }
        out
    }

    fn extend(&mut self) -> bool {
        self.nodes += 1;
        if self.over_budget() {
            return false;
        }
        // free edges must cover the pairs still to come
        let pairs_left = (self.n - self.path.len()) + usize::from(self.goal == Goal::Cycle);
        if self.matcher.edge_count() - self.matcher.len() < pairs_left {
            return false;
        }
        if self.config.hall_pruning && !self.lookahead_ok() {
            return false;
        }
        let last = *self.path.last().expect("path is never empty");
        for v in self.candidates(last) {
            if !self.matcher.push(Demand::pair(bit(last), bit(v))) {
                continue;
            }
            self.path.push(v);
            self.visited |= bit(v);
            if self.visited == self.all {
                match self.goal {
                    Goal::PathTo(_) => return true,
                    Goal::Cycle => {
                        if self.matcher.push(Demand::pair(bit(v), bit(self.path[0]))) {
                            return true;
                        }
                    }
                }
            } else if self.extend() {
                return true;
            }
            self.path.pop();
            self.visited &= !bit(v);
            self.matcher.pop();
            if self.aborted {
                return false;
            }
        }
        false
    }

    fn certificate(&self, h: &Hypergraph) -> BergeCertificate {
        let kind = match self.goal {
            Goal::PathTo(_) => CertificateKind::Path,
            Goal::Cycle => CertificateKind::Cycle,
        };
        canonical_certificate(h, kind, self.path.iter().map(|&v| v + 1).collect())
            .expect("search only accepts feasible sequences")
    }
}

/// Certificate for a fixed vertex sequence, with the lexicographically
/// smallest feasible edge-index sequence.
pub fn canonical_certificate(
    h: &Hypergraph,
    kind: CertificateKind,
    vertices: Vec<usize>,
) -> Option<BergeCertificate> {
    let s = vertices.len();
    let pair_count = match kind {
        CertificateKind::Path => s.saturating_sub(1),
        CertificateKind::Cycle => s,
    };
    let demands: Vec<Demand> = (0..pair_count)
        .map(|i| Demand::pair(vertex_bit(vertices[i]), vertex_bit(vertices[(i + 1) % s])))
        .collect();
    let edges = lex_first_assignment(h.n(), h.edge_masks(), &demands)?;
    Some(BergeCertificate {
        kind,
        vertices,
        edges: edges.into_iter().map(|e| e + 1).collect(),
    })
}

fn check_vertex(h: &Hypergraph, v: usize) -> Result<(), SearchError> {
    if h.contains_vertex(v) {
        Ok(())
    } else {
        Err(SearchError::VertexOutOfRange {
            vertex: v,
            n: h.n(),
        })
    }
}

fn check_endpoints(h: &Hypergraph, x: usize, y: usize) -> Result<(), SearchError> {
    check_vertex(h, x)?;
    check_vertex(h, y)?;
    if x == y {
        return Err(SearchError::SameEndpoints(x));
    }
    Ok(())
}

fn finish(h: &Hypergraph, engine: Engine<'_>, found: bool) -> SearchOutcome {
    let decided = if found {
        Decision::Found
    } else if engine.aborted {
        Decision::Undecided
    } else {
        Decision::Refuted
    };
    let certificate = found.then(|| engine.certificate(h));
    debug_assert!(certificate
        .as_ref()
        .is_none_or(|c| validate_certificate(h, c).is_ok()));
    SearchOutcome {
        decided,
        certificate,
        nodes_explored: engine.nodes,
        elapsed: engine.started.elapsed(),
    }
}

fn refuted_without_search(started: Instant) -> SearchOutcome {
    SearchOutcome {
        decided: Decision::Refuted,
        certificate: None,
        nodes_explored: 0,
        elapsed: started.elapsed(),
    }
}

/// Decides whether `h` has a hamiltonian Berge path from `x` to `y`.
pub fn find_hamiltonian_path(
    h: &Hypergraph,
    x: usize,
    y: usize,
    config: SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    check_endpoints(h, x, y)?;
    let started = Instant::now();
    if h.edge_count() + 1 < h.n() {
        return Ok(refuted_without_search(started));
    }
    let mut engine = Engine::new(h, config, Goal::PathTo(y - 1), x - 1);
    let found = engine.extend();
    Ok(finish(h, engine, found))
}

/// Decides whether `h` has a hamiltonian Berge cycle.
pub fn find_hamiltonian_cycle(h: &Hypergraph, config: SearchConfig) -> SearchOutcome {
    let started = Instant::now();
    if h.n() < 2 || h.edge_count() < h.n() {
        return refuted_without_search(started);
    }
    // every hamiltonian cycle can be rotated to start at vertex 1
    let mut engine = Engine::new(h, config, Goal::Cycle, 0);
    let found = engine.extend();
    finish(h, engine, found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub x: usize,
    pub y: usize,
    pub certificate: BergeCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    /// True iff every pair was found.
    pub hamiltonian_connected: bool,
    pub pairs_checked: usize,
    pub failing_pairs: Vec<(usize, usize)>,
    pub undecided_pairs: Vec<(usize, usize)>,
    pub witnesses: Vec<PairWitness>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityOptions {
    pub search: SearchConfig,
    pub keep_witnesses: bool,
    pub parallel: bool,
    /// Stop at the first failing pair.
    pub stop_at_first_failure: bool,
}

impl Default for ConnectivityOptions {
    fn default() -> Self {
        ConnectivityOptions {
            search: SearchConfig::default(),
            keep_witnesses: false,
            parallel: true,
            stop_at_first_failure: false,
        }
    }
}

/// Unordered pairs `(x, y)`, `x < y`, in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
        .collect()
}

/// Runs the path search on every unordered pair. The report lists pairs in
/// ascending order whatever the scheduling.
pub fn is_hamiltonian_connected(
    h: &Hypergraph,
    options: ConnectivityOptions,
) -> ConnectivityReport {
    let pairs = all_pairs(h.n());
    let run = |&(x, y): &(usize, usize)| {
        let outcome = find_hamiltonian_path(h, x, y, options.search)
            .expect("pairs are in range and distinct");
        ((x, y), outcome)
    };
    let outcomes: Vec<((usize, usize), SearchOutcome)> = if options.stop_at_first_failure {
        let mut out = Vec::new();
        for p in &pairs {
            let (pair, o) = run(p);
            let failed = !o.is_found();
            out.push((pair, o));
            if failed {
                break;
            }
        }
        out
    } else if options.parallel {
        pairs.par_iter().map(run).collect()
    } else {
        pairs.iter().map(run).collect()
    };

    let mut report = ConnectivityReport {
        hamiltonian_connected: true,
        pairs_checked: outcomes.len(),
        failing_pairs: Vec::new(),
        undecided_pairs: Vec::new(),
        witnesses: Vec::new(),
        nodes_explored: 0,
    };
    for ((x, y), outcome) in outcomes {
        report.nodes_explored += outcome.nodes_explored;
        match outcome.decided {
            Decision::Found => {
                if options.keep_witnesses {
                    let certificate = outcome
                        .certificate
                        .expect("found outcomes carry a certificate");
                    report.witnesses.push(PairWitness { x, y, certificate });
                }
            }
            Decision::Refuted => report.failing_pairs.push((x, y)),
            Decision::Undecided => report.undecided_pairs.push((x, y)),
        }
    }
    report.hamiltonian_connected = report.failing_pairs.is_empty()
        && report.undecided_pairs.is_empty()
        && report.pairs_checked == all_pairs(h.n()).len();
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestPath {
    /// Number of vertices on the path.
    pub length: usize,
    pub certificate: BergeCertificate,
}

struct LongestSearch<'a> {
    target: usize,
    neighbors: Vec<VertexMask>,
    matcher: DemandMatcher<'a>,
    path: Vec<usize>,
    visited: VertexMask,
    all: VertexMask,
    best: Option<Vec<usize>>,
    best_len: usize,
    ceiling: usize,
}

impl LongestSearch<'_> {
    /// Vertices reachable from the path end through unvisited vertices
    /// other than the target.
    fn reachable_free(&self, last: usize) -> usize {
        let open = self.all & !self.visited & !bit(self.target);
        let mut seen = 0u64;
        let mut frontier = self.neighbors[last] & open;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                next |= self.neighbors[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            frontier = next & open & !seen;
        }
        seen.count_ones() as usize
    }

    fn run(&mut self) {
        if self.best_len == self.ceiling {
            return;
        }
        let last = *self.path.last().expect("path is never empty");
        if self.path.len() + 1 + self.reachable_free(last) <= self.best_len {
            return;
        }
        if self.neighbors[last] & bit(self.target) != 0
            && self.matcher.push(Demand::pair(bit(last), bit(self.target)))
        {
            if self.path.len() + 1 > self.best_len {
                let mut p = self.path.clone();
                p.push(self.target);
                self.best_len = p.len();
                self.best = Some(p);
            }
            self.matcher.pop();
        }
        let mut cand = self.neighbors[last] & self.all & !self.visited & !bit(self.target);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if !self.matcher.push(Demand::pair(bit(last), bit(v))) {
                continue;
            }
            self.path.push(v);
            self.visited |= bit(v);
            self.run();
            self.path.pop();
            self.visited &= !bit(v);
            self.matcher.pop();
            if self.best_len == self.ceiling {
                return;
            }
        }
    }
}

/// Longest Berge path from `x` to `y` (by vertex count), or `None` when no
/// such path exists. Branch and bound over the same pair-matching engine.
pub fn longest_path_between(
    h: &Hypergraph,
    x: usize,
    y: usize,
) -> Result<Option<LongestPath>, SearchError> {
    check_endpoints(h, x, y)?;
    let ceiling = h.n().min(h.edge_count() + 1);
    let mut search = LongestSearch {
        target: y - 1,
        neighbors: neighbor_masks(h),
        matcher: DemandMatcher::new(h.n(), h.edge_masks()),
        path: vec![x - 1],
        visited: bit(x - 1),
        all: h.all_vertices(),
        best: None,
        best_len: 0,
        ceiling,
    };
    search.run();
    Ok(search.best.map(|p| {
        let certificate =
            canonical_certificate(h, CertificateKind::Path, p.iter().map(|&v| v + 1).collect())
                .expect("best path was matched during search");
        LongestPath {
            length: p.len(),
            certificate,
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtendabilityReport {
    pub one_extendable: bool,
    /// `(edge index, u, w)` with no hamiltonian cycle starting `u, e, w`.
    pub failing: Vec<(usize, usize, usize)>,
    pub triples_checked: usize,
}

/// Checks 1-extendability: for every edge `e` and ordered `u != w` in `e`,
/// a hamiltonian cycle `u, e, w, ...`. Such a cycle exists iff `h - e` has
/// a hamiltonian `w, u`-path, which is what is searched.
pub fn is_one_extendable(h: &Hypergraph, config: SearchConfig) -> ExtendabilityReport {
    let mut jobs = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                jobs.push((i + 1, e[a], e[b]));
            }
        }
    }
    let results: Vec<((usize, usize, usize), bool)> = jobs
        .par_iter()
        .map(|&(idx, u, w)| {
            let rest = h.without_edge(idx).expect("edge index is valid");
            let found = find_hamiltonian_path(&rest, w, u, config)
                .map(|o| o.is_found())
                .unwrap_or(false);
            ((idx, u, w), found)
        })
        .collect();
    let mut failing = Vec::new();
    for ((idx, u, w), found) in results {
        // a w,u-path reversed is a u,w-path, so both orders share the verdict
        if !found {
            failing.push((idx, u, w));
            failing.push((idx, w, u));
        }
    }
    ExtendabilityReport {
        one_extendable: failing.is_empty(),
        failing,
        triples_checked: jobs.len() * 2,
    }
}
