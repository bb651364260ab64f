//! Degree thresholds and theorem-level verification runs.
//!
//! Thresholds for hamiltonian-connectedness of an `n`-vertex `r`-graph
//! (`n >= r >= 3`):
//!
//! 1. `r <= n/2`: `δ >= C(⌊n/2⌋, r-1) + 1`;
//! 2. `r > n/2 >= 3`: `δ >= r - 1`;
//! 3. `n = 5, r = 3`: `δ >= 3`;
//!
//! plus the single point `n = 4, r = 3`, `δ >= 2`. For a hamiltonian cycle
//! (`n > r >= 3`): `δ >= C(⌊(n-1)/2⌋, r-1) + 1` when `r <= (n-1)/2`, and
//! `δ >= r` when `r >= n/2`.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{binomial, k_subsets};
use crate::constructions::{
    build, expected_min_degree, ConstructionError, ConstructionSpec, Family,
};
use crate::hypergraph::{Hypergraph, VertexMask, MAX_VERTICES};
use crate::io::write_hypergraph;
use crate::search::{
    all_pairs, find_hamiltonian_cycle, is_hamiltonian_connected, longest_path_between,
    ConnectivityOptions, Decision, SearchConfig,
};

/// Default cap on the number of potential edges for exhaustive runs.
pub const DEFAULT_ENUMERATION_CAP: u32 = 16;
/// Hard ceiling for the cap (2^26 masks).
pub const MAX_ENUMERATION_CAP: u32 = 26;
/// Consecutive rejected draws after which sampling gives up.
pub const MAX_REJECTIONS: u64 = 200_000;
/// Largest number of potential edges the sampler will draw from.
pub const MAX_SAMPLED_POTENTIAL_EDGES: u64 = 1 << 16;
/// Largest `n` for the optional isomorphism filter.
pub const MAX_CANONICAL_N: usize = 7;

const SAMPLE_BATCH: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error(
        "{potential_edges} potential edges exceed the enumeration cap {cap}; use sampling instead"
    )]
    EnumerationTooLarge { potential_edges: u64, cap: u32 },
    #[error("no threshold condition covers n = {n}, r = {r} ({kind})")]
    ThresholdUncovered {
        n: usize,
        r: usize,
        kind: ThresholdKind,
    },
    #[error("sampling stalled: {rejections} consecutive draws missed min degree {min_degree}")]
    SamplingStalled { rejections: u64, min_degree: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdKind {
    HamiltonianConnected,
    HamiltonianCycle,
}

impl fmt::Display for ThresholdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThresholdKind::HamiltonianConnected => "hamiltonian-connected",
            ThresholdKind::HamiltonianCycle => "hamiltonian-cycle",
        })
    }
}

impl FromStr for ThresholdKind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "hamiltonian-connected" | "connected" | "hc" => Ok(ThresholdKind::HamiltonianConnected),
            "hamiltonian-cycle" | "cycle" => Ok(ThresholdKind::HamiltonianCycle),
            other => Err(HarnessError::BadParameters(format!(
                "unknown threshold kind '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThresholdQuery {
    pub n: usize,
    pub r: usize,
    pub kind: ThresholdKind,
}

impl ThresholdQuery {
    pub fn connected(n: usize, r: usize) -> Self {
        ThresholdQuery {
            n,
            r,
            kind: ThresholdKind::HamiltonianConnected,
        }
    }

    pub fn cycle(n: usize, r: usize) -> Self {
        ThresholdQuery {
            n,
            r,
            kind: ThresholdKind::HamiltonianCycle,
        }
    }
}

/// Which clause of the degree condition produced a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdSource {
    /// The binomial bound for small `r`.
    Condition1,
    /// The linear bound for large `r`.
    Condition2,
    /// The special case `n = 5, r = 3`.
    Condition3,
    /// `n = 4, r = 3`, settled directly rather than by the general theorem.
    SmallCaseRemark,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Threshold {
    Covered {
        min_degree: usize,
        source: ThresholdSource,
    },
    Uncovered,
}

impl Threshold {
    pub fn min_degree(self) -> Option<usize> {
        match self {
            Threshold::Covered { min_degree, .. } => Some(min_degree),
            Threshold::Uncovered => None,
        }
    }
}

/// Minimum degree that guarantees the property, if a condition applies.
pub fn threshold(q: ThresholdQuery) -> Result<Threshold, HarnessError> {
    let (n, r) = (q.n, q.r);
    if r < 3 || n < r {
        return Err(HarnessError::BadParameters(format!(
            "thresholds need n >= r >= 3, got n = {n}, r = {r}"
        )));
    }
    let covered = |min_degree: u64, source| {
        Ok(Threshold::Covered {
            min_degree: min_degree as usize,
            source,
        })
    };
    let (nu, ru) = (n as u64, r as u64);
    match q.kind {
        ThresholdKind::HamiltonianConnected => {
            if 2 * r <= n {
                covered(binomial(nu / 2, ru - 1) + 1, ThresholdSource::Condition1)
            } else if n >= 6 {
                covered(ru - 1, ThresholdSource::Condition2)
            } else if (n, r) == (5, 3) {
                covered(3, ThresholdSource::Condition3)
            } else if (n, r) == (4, 3) {
                covered(2, ThresholdSource::SmallCaseRemark)
            } else {
                Ok(Threshold::Uncovered)
            }
        }
        ThresholdKind::HamiltonianCycle => {
            if r == n {
                Ok(Threshold::Uncovered)
            } else if 2 * r < n {
                covered(
                    binomial((nu - 1) / 2, ru - 1) + 1,
                    ThresholdSource::Condition1,
                )
            } else {
                covered(ru, ThresholdSource::Condition2)
            }
        }
    }
}

fn covered_threshold(q: ThresholdQuery) -> Result<usize, HarnessError> {
    threshold(q)?
        .min_degree()
        .ok_or(HarnessError::ThresholdUncovered {
            n: q.n,
            r: q.r,
            kind: q.kind,
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Every checked instance had the property.
    Verified,
    /// At least one counterexample was found.
    Refuted,
    /// Some searches hit a budget.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The hypergraph in the text file format.
    pub hypergraph: String,
    /// Failing pairs; empty when the property is a cycle.
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl NamedCheck {
    fn new(
        name: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        passed: bool,
    ) -> Self {
        NamedCheck {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleInfo {
    pub seed: u64,
    pub samples: u64,
    pub edge_probability: f64,
    pub rejected: u64,
}

impl Eq for SampleInfo {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub task: String,
    pub n: usize,
    pub r: usize,
    pub kind: Option<ThresholdKind>,
    pub min_degree_threshold: Option<usize>,
    /// Candidate hypergraphs looked at before filtering.
    pub scanned: u64,
    /// Hypergraphs (or pairs) on which the property was actually tested.
    pub instances_checked: u64,
    pub undecided: u64,
    pub failures: Vec<Counterexample>,
    pub checks: Vec<NamedCheck>,
    pub sampled: Option<SampleInfo>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(task: impl Into<String>, n: usize, r: usize) -> Self {
        VerificationReport {
            task: task.into(),
            n,
            r,
            kind: None,
            min_degree_threshold: None,
            scanned: 0,
            instances_checked: 0,
            undecided: 0,
            failures: Vec::new(),
            checks: Vec::new(),
            sampled: None,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn verdict(&self) -> Verdict {
        if !self.failures.is_empty() {
            Verdict::Refuted
        } else if self.undecided > 0 {
            Verdict::Inconclusive
        } else {
            Verdict::Verified
        }
    }

    /// The claim the run was testing came out as expected: named checks
    /// all pass and, for runs without named checks, nothing failed.
    pub fn confirmed(&self) -> bool {
        if self.checks.is_empty() {
            self.verdict() == Verdict::Verified
        } else {
            self.checks.iter().all(|c| c.passed)
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (n = {}, r = {})", self.task, self.n, self.r)?;
        if let Some(t) = self.min_degree_threshold {
            writeln!(f, "  min degree threshold: {t}")?;
        }
        if self.scanned > 0 {
            writeln!(f, "  scanned: {}", self.scanned)?;
        }
        writeln!(f, "  checked: {}", self.instances_checked)?;
        if let Some(s) = &self.sampled {
            writeln!(
                f,
                "  seed {}, {} samples, p = {:.4}, {} rejected draws",
                s.seed, s.samples, s.edge_probability, s.rejected
            )?;
        }
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: expected {}, got {}",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.expected,
                c.actual
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        writeln!(
            f,
            "  failures: {}, undecided: {}",
            self.failures.len(),
            self.undecided
        )?;
        write!(f, "  verdict: {:?}", self.verdict())?;
        if !self.checks.is_empty() {
            write!(
                f,
                "\n  claim confirmed: {}",
                if self.confirmed() { "yes" } else { "no" }
            )?;
        }
        Ok(())
    }
}

fn counterexample(h: &Hypergraph, pairs: Vec<(usize, usize)>) -> Counterexample {
    Counterexample {
        hypergraph: write_hypergraph(h, &[]),
        pairs,
    }
}

/// Result of testing one hypergraph for the property of `kind`.
enum Tested {
    Holds,
    Fails(Vec<(usize, usize)>),
    Undecided,
}

fn test_property(h: &Hypergraph, kind: ThresholdKind, search: SearchConfig) -> Tested {
    match kind {
        ThresholdKind::HamiltonianConnected => {
            let report = is_hamiltonian_connected(
                h,
                ConnectivityOptions {
                    search,
                    keep_witnesses: false,
                    parallel: false,
                    stop_at_first_failure: false,
                },
            );
            if !report.failing_pairs.is_empty() {
                Tested::Fails(report.failing_pairs)
            } else if !report.undecided_pairs.is_empty() {
                Tested::Undecided
            } else {
                Tested::Holds
            }
        }
        ThresholdKind::HamiltonianCycle => match find_hamiltonian_cycle(h, search).decided {
            Decision::Found => Tested::Holds,
            Decision::Refuted => Tested::Fails(Vec::new()),
            Decision::Undecided => Tested::Undecided,
        },
    }
}

/// Checks that a family sits exactly one below the threshold and lacks the
/// property. H1P, H2P, H3P and H4 are checked against hamiltonian-
/// connectedness; H1, H2 and H3 against hamiltonian cycles.
pub fn verify_sharpness(spec: &ConstructionSpec) -> Result<VerificationReport, HarnessError> {
    let started = Instant::now();
    let kind = match spec.family {
        Family::H1P | Family::H2P | Family::H3P | Family::H4 => ThresholdKind::HamiltonianConnected,
        Family::H1 | Family::H2 | Family::H3 => ThresholdKind::HamiltonianCycle,
        other => {
            return Err(HarnessError::BadParameters(format!(
                "{other} is not a sharpness example"
            )))
        }
    };
    let construction = build(spec)?;
    let h = &construction.hypergraph;
    let thr = covered_threshold(ThresholdQuery {
        n: spec.n,
        r: spec.r,
        kind,
    })?;
    let delta = h.min_degree();

    let mut report =
        VerificationReport::new(format!("sharpness of {}", spec.family), spec.n, spec.r);
    report.kind = Some(kind);
    report.min_degree_threshold = Some(thr);
    report.instances_checked = 1;
    report.checks.push(NamedCheck::new(
        "min degree = threshold - 1",
        thr - 1,
        delta,
        delta + 1 == thr,
    ));
    let closed = expected_min_degree(spec)?;
    report.checks.push(NamedCheck::new(
        "min degree = closed form",
        closed,
        delta,
        delta == closed,
    ));

    match kind {
        ThresholdKind::HamiltonianConnected => {
            let hc = is_hamiltonian_connected(h, ConnectivityOptions::default());
            report.undecided = hc.undecided_pairs.len() as u64;
            report.checks.push(NamedCheck::new(
                "hamiltonian-connected",
                false,
                hc.hamiltonian_connected,
                !hc.hamiltonian_connected && hc.undecided_pairs.is_empty(),
            ));
            if let Some(pair) = construction.special_pair {
                let hit = hc
                    .failing_pairs
                    .contains(&(pair.x.min(pair.y), pair.x.max(pair.y)));
                report.checks.push(NamedCheck::new(
                    format!("pair ({}, {}) fails", pair.x, pair.y),
                    true,
                    hit,
                    hit,
                ));
            }
            if spec.family == Family::H3P {
                let total = all_pairs(spec.n).len();
                report.checks.push(NamedCheck::new(
                    "every pair fails",
                    total,
                    hc.failing_pairs.len(),
                    hc.failing_pairs.len() == total,
                ));
            }
            report.notes.push(format!(
                "{} of {} pairs fail",
                hc.failing_pairs.len(),
                hc.pairs_checked
            ));
            if !hc.failing_pairs.is_empty() {
                report.failures.push(counterexample(h, hc.failing_pairs));
            }
        }
        ThresholdKind::HamiltonianCycle => {
            let outcome = find_hamiltonian_cycle(h, SearchConfig::default());
            if outcome.decided == Decision::Undecided {
                report.undecided = 1;
            }
            report.checks.push(NamedCheck::new(
                "hamiltonian cycle",
                "none",
                format!("{:?}", outcome.decided).to_lowercase(),
                outcome.is_refuted(),
            ));
            if outcome.is_refuted() {
                report.failures.push(counterexample(h, Vec::new()));
            }
        }
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustiveOptions {
    /// Largest allowed number of potential edges `C(n, r)`.
    pub cap: u32,
    /// Keep only one labeled representative per isomorphism class
    /// (`n <= 7`); the representative is the mask that is minimal over all
    /// vertex permutations.
    pub canonical_only: bool,
    pub search: SearchConfig,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            canonical_only: false,
            search: SearchConfig::default(),
        }
    }
}

/// For every vertex permutation, where each potential edge goes.
fn edge_permutation_tables(n: usize, potential: &[VertexMask]) -> Vec<Vec<u32>> {
    let index_of = |m: VertexMask| {
        potential
            .iter()
            .position(|&p| p == m)
            .expect("permutations preserve size") as u32
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut tables = Vec::new();
    loop {
        let table = potential
            .iter()
            .map(|&m| {
                let mut img = 0u64;
                let mut rest = m;
                while rest != 0 {
                    img |= 1 << perm[rest.trailing_zeros() as usize];
                    rest &= rest - 1;
                }
                index_of(img)
            })
            .collect();
        tables.push(table);
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("pivot has a successor");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    tables
}

fn is_canonical(mask: u64, tables: &[Vec<u32>]) -> bool {
    tables.iter().all(|t| {
        let mut img = 0u64;
        let mut rest = mask;
        while rest != 0 {
            img |= 1 << t[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        img >= mask
    })
}

fn hypergraph_from_selection(
    n: usize,
    r: usize,
    potential: &[VertexMask],
    selection: u64,
) -> Hypergraph {
    let mut masks = Vec::with_capacity(selection.count_ones() as usize);
    let mut rest = selection;
    while rest != 0 {
        masks.push(potential[rest.trailing_zeros() as usize]);
        rest &= rest - 1;
    }
    Hypergraph::from_masks_unchecked(n, r, masks)
}

#[derive(Default)]
struct ChunkResult {
    scanned: u64,
    checked: u64,
    undecided: u64,
    failures: Vec<Counterexample>,
}

/// Tests every labeled `r`-graph on `n` vertices (each subset of the
/// `C(n, r)` potential edges) whose minimum degree meets the threshold.
pub fn exhaustive_verify(
    n: usize,
    r: usize,
    kind: ThresholdKind,
    options: ExhaustiveOptions,
) -> Result<VerificationReport, HarnessError> {
    let started = Instant::now();
    let thr = covered_threshold(ThresholdQuery { n, r, kind })?;
    let potential_count = binomial(n as u64, r as u64);
    let cap = options.cap.min(MAX_ENUMERATION_CAP);
    if potential_count > u64::from(cap) {
        return Err(HarnessError::EnumerationTooLarge {
            potential_edges: potential_count,
            cap,
        });
    }
    if options.canonical_only && n > MAX_CANONICAL_N {
        return Err(HarnessError::BadParameters(format!(
            "the isomorphism filter supports n <= {MAX_CANONICAL_N}"
        )));
    }
    let potential = k_subsets(n, r);
    let p = potential.len() as u32;
    let tables = if options.canonical_only {
        edge_permutation_tables(n, &potential)
    } else {
        Vec::new()
    };

    // low bits walk a Gray code inside a chunk; high bits pick the chunk
    let low_bits = p.min(12);
    let chunks = 1u64 << (p - low_bits);
    let results: Vec<ChunkResult> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut out = ChunkResult::default();
            let high = chunk << low_bits;
            let mut degrees = vec![0u32; n];
            let add = |degrees: &mut Vec<u32>, e: usize, delta: i32| {
                let mut rest = potential[e];
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    degrees[v] = (degrees[v] as i32 + delta) as u32;
                    rest &= rest - 1;
                }
            };
            let mut rest = high;
            while rest != 0 {
                add(&mut degrees, rest.trailing_zeros() as usize, 1);
                rest &= rest - 1;
            }
            let mut low = 0u64;
            for step in 0..(1u64 << low_bits) {
                if step > 0 {
                    let flip = step.trailing_zeros() as usize;
                    low ^= 1 << flip;
                    add(
                        &mut degrees,
                        flip,
                        if low & (1 << flip) != 0 { 1 } else { -1 },
                    );
                }
                out.scanned += 1;
                if (*degrees.iter().min().expect("n >= 1") as usize) < thr {
                    continue;
                }
                let selection = high | low;
                if options.canonical_only && !is_canonical(selection, &tables) {
                    continue;
                }
                out.checked += 1;
                let h = hypergraph_from_selection(n, r, &potential, selection);
                match test_property(&h, kind, options.search) {
                    Tested::Holds => {}
                    Tested::Fails(pairs) => out.failures.push(counterexample(&h, pairs)),
                    Tested::Undecided => out.undecided += 1,
                }
            }
            out
        })
        .collect();

    let mut report = VerificationReport::new(format!("exhaustive {kind}"), n, r);
    report.kind = Some(kind);
    report.min_degree_threshold = Some(thr);
    for res in results {
        report.scanned += res.scanned;
        report.instances_checked += res.checked;
        report.undecided += res.undecided;
        report.failures.extend(res.failures);
    }
    if let Threshold::Covered {
        source: ThresholdSource::SmallCaseRemark,
        ..
    } = threshold(ThresholdQuery { n, r, kind })?
    {
        report.notes.push(
            "threshold for n = 4, r = 3 comes from a direct check, not the general conditions"
                .into(),
        );
    }
    if options.canonical_only {
        report
            .notes
            .push("one representative per isomorphism class".into());
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Draws an `r`-graph on `n` vertices by including each potential edge
/// with probability `p`, redrawing until the minimum degree is at least
/// `min_degree`. Returns the hypergraph and the number of rejected draws.
pub fn sample_min_degree_hypergraph<R: Rng>(
    n: usize,
    r: usize,
    min_degree: usize,
    p: f64,
    rng: &mut R,
    max_rejections: u64,
) -> Result<(Hypergraph, u64), HarnessError> {
    let potential = k_subsets(n, r);
    let mut rejected = 0;
    loop {
        let chosen: Vec<VertexMask> = potential
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(p))
            .collect();
        let h = Hypergraph::from_masks_unchecked(n, r, chosen);
        if h.min_degree() >= min_degree {
            return Ok((h, rejected));
        }
        rejected += 1;
        if rejected >= max_rejections {
            return Err(HarnessError::SamplingStalled {
                rejections: rejected,
                min_degree,
            });
        }
    }
}

/// Edge probability targeting an expected degree of `threshold + 2`.
pub fn default_edge_probability(n: usize, r: usize, min_degree: usize) -> f64 {
    let per_vertex = binomial(n as u64 - 1, r as u64 - 1) as f64;
    ((min_degree as f64 + 2.0) / per_vertex).min(1.0)
}

/// Independent random stream for batch `index` of a seeded run.
pub fn batch_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn check_sampling_size(n: usize, r: usize) -> Result<(), HarnessError> {
    if n > MAX_VERTICES || r < 2 || r > n {
        return Err(HarnessError::BadParameters(format!(
            "invalid n = {n}, r = {r}"
        )));
    }
    let potential = binomial(n as u64, r as u64);
    if potential > MAX_SAMPLED_POTENTIAL_EDGES {
        return Err(HarnessError::BadParameters(format!(
            "{potential} potential edges exceed the sampler limit {MAX_SAMPLED_POTENTIAL_EDGES}"
        )));
    }
    Ok(())
}

/// Seeded random hypergraphs with minimum degree at least `min_degree`.
/// Batch `b` of 64 draws uses stream `b` of the seed, so the output does
/// not depend on scheduling.
pub fn sample_hypergraphs(
    n: usize,
    r: usize,
    min_degree: usize,
    count: u64,
    seed: u64,
    p: f64,
) -> Result<Vec<(Hypergraph, u64)>, HarnessError> {
    check_sampling_size(n, r)?;
    let batches = count.div_ceil(SAMPLE_BATCH);
    let per_batch: Vec<Result<Vec<(Hypergraph, u64)>, HarnessError>> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = batch_rng(seed, b);
            let size = SAMPLE_BATCH.min(count - b * SAMPLE_BATCH);
            (0..size)
                .map(|_| {
                    sample_min_degree_hypergraph(n, r, min_degree, p, &mut rng, MAX_REJECTIONS)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(count as usize);
    for batch in per_batch {
        out.extend(batch?);
    }
    Ok(out)
}

/// Tests `samples` seeded random hypergraphs at or above the threshold.
pub fn sampled_verify(
    n: usize,
    r: usize,
    kind: ThresholdKind,
    samples: u64,
    seed: u64,
    search: SearchConfig,
) -> Result<VerificationReport, HarnessError> {
    let started = Instant::now();
    let thr = covered_threshold(ThresholdQuery { n, r, kind })?;
    let p = default_edge_probability(n, r, thr);
    let drawn = sample_hypergraphs(n, r, thr, samples, seed, p)?;
    let outcomes: Vec<(Tested, u64)> = drawn
        .par_iter()
        .map(|(h, rejected)| (test_property(h, kind, search), *rejected))
        .collect();

    let mut report = VerificationReport::new(format!("sampled {kind}"), n, r);
    report.kind = Some(kind);
    report.min_degree_threshold = Some(thr);
    let mut rejected_total = 0;
    for ((h, _), (tested, rejected)) in drawn.iter().zip(outcomes) {
        rejected_total += rejected;
        report.instances_checked += 1;
        match tested {
            Tested::Holds => {}
            Tested::Fails(pairs) => report.failures.push(counterexample(h, pairs)),
            Tested::Undecided => report.undecided += 1,
        }
    }
    report.scanned = samples + rejected_total;
    report.sampled = Some(SampleInfo {
        seed,
        samples,
        edge_probability: p,
        rejected: rejected_total,
    });
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Guaranteed number of vertices on a longest `x, y`-path for `h`, if one
/// of the two long-path hypotheses applies.
pub fn long_path_bound(h: &Hypergraph) -> Result<usize, HarnessError> {
    let (n, r, delta) = (h.n(), h.r(), h.min_degree());
    if r >= 3 && 2 * r <= n {
        let need = binomial((n / 2) as u64, (r - 1) as u64) as usize;
        if delta >= need {
            // at least n/2 + 1 vertices
            return Ok(n / 2 + 1 + n % 2);
        }
        return Err(HarnessError::HypothesisViolated(format!(
            "min degree {delta} < C(⌊n/2⌋, r-1) = {need}"
        )));
    }
    if r >= 3 && 2 * r > n {
        if delta + 1 >= r {
            return Ok(r + 1);
        }
        return Err(HarnessError::HypothesisViolated(format!(
            "min degree {delta} < r - 1 = {}",
            r - 1
        )));
    }
    Err(HarnessError::HypothesisViolated(format!("r = {r} < 3")))
}

/// Checks that every pair of `h` is joined by a Berge path at least as long
/// as the long-path bound guarantees.
pub fn verify_long_path_lemma(h: &Hypergraph) -> Result<VerificationReport, HarnessError> {
    let started = Instant::now();
    let bound = long_path_bound(h)?;
    let results: Vec<((usize, usize), usize)> = all_pairs(h.n())
        .into_par_iter()
        .map(|(x, y)| {
            let len = longest_path_between(h, x, y)
                .expect("pairs are valid")
                .map_or(0, |lp| lp.length);
            ((x, y), len)
        })
        .collect();
    let mut report = VerificationReport::new("long x,y-paths", h.n(), h.r());
    report.instances_checked = results.len() as u64;
    let short: Vec<(usize, usize)> = results
        .iter()
        .filter(|&&(_, len)| len < bound)
        .map(|&(p, _)| p)
        .collect();
    let shortest = results.iter().map(|&(_, len)| len).min().unwrap_or(0);
    report.checks.push(NamedCheck::new(
        "shortest longest x,y-path",
        format!(">= {bound}"),
        shortest,
        short.is_empty(),
    ));
    if !short.is_empty() {
        report.failures.push(counterexample(h, short));
    }
    report.elapsed = started.elapsed();
    Ok(report)
}
