//! Brute-force checks of five inequalities about vertex and edge subsets of
//! a graph path `v_1, e_1, ..., e_{s-1}, v_s`.
//!
//! Only positions matter, so a path is just its length `s`. Vertex subsets
//! are bitmasks over positions `1..=s` (bit `i - 1`), edge subsets are
//! bitmasks over `1..=s-1` where edge `i` joins positions `i` and `i + 1`.
//!
//! | lemma        | hypotheses (besides nonempty sets)                      | conclusion                         |
//! |--------------|---------------------------------------------------------|------------------------------------|
//! | `verc2`      | `A` independent, `B - A ≠ ∅`, `dist(A, B - A) >= q >= 1` | `s >= 2|A| + |B-A| + q - 2` etc.   |
//! | `indep2`     | `I` independent, `dist(A', I) >= q`                      | `|I| <= floor((s-a-q+1)/2)` etc.   |
//! | `ver_new`    | `i = j` or `|i - j| >= q >= 2` across `A`, `B`           | `s >= 1 + q(|A|-1)` / `|A|+|B|+q-2`|
//! | `ed_new`     | same, for edge sets `A'`, `B'`                           | same with `s - 1`                  |
//! | `consecpath2`| `A`, `B` avoid `F`'s endpoints, `i = j` or `|i-j| >= 2`   | `s >= |A|+|B|+f-1` / `|A|+|B|+f`   |

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `s` accepted by [`exhaust_lemma`].
pub const MAX_EXHAUSTIVE_S: u32 = 12;
/// Largest `s` accepted by [`sample_lemma`].
pub const MAX_SAMPLED_S: u32 = 31;

pub type Positions = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    Verc2,
    Indep2,
    VerNew,
    EdNew,
    Consecpath2,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::Verc2,
        Lemma::Indep2,
        Lemma::VerNew,
        Lemma::EdNew,
        Lemma::Consecpath2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::Verc2 => "verc2",
            Lemma::Indep2 => "indep2",
            Lemma::VerNew => "ver_new",
            Lemma::EdNew => "ed_new",
            Lemma::Consecpath2 => "consecpath2",
        }
    }

    /// Cases whose conclusion comes with an "equality only if" clause.
    pub fn characterized_cases(self) -> &'static [&'static str] {
        match self {
            Lemma::VerNew | Lemma::EdNew => &["i", "ii"],
            Lemma::Consecpath2 => &["ii"],
            Lemma::Verc2 | Lemma::Indep2 => &[],
        }
    }

    /// Smallest separation parameter the lemma is stated for.
    fn min_q(self) -> u32 {
        match self {
            Lemma::Verc2 | Lemma::Indep2 => 1,
            Lemma::VerNew | Lemma::EdNew | Lemma::Consecpath2 => 2,
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("unknown lemma '{0}'")]
    UnknownLemma(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("s = {s} is outside the supported range 2..={max}")]
    SizeOutOfRange { s: u32, max: u32 },
}

impl FromStr for Lemma {
    type Err = LemmaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == key)
            .ok_or_else(|| LemmaError::UnknownLemma(s.to_string()))
    }
}

/// One configuration on a path of `s` vertices. Unused sets stay empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LemmaInstance {
    pub s: u32,
    pub q: u32,
    /// Vertex positions `A`.
    pub a: Positions,
    /// Vertex positions `B`.
    pub b: Positions,
    /// Edge positions `F`.
    pub f: Positions,
    /// Vertex positions `I`.
    pub independent: Positions,
    /// Edge positions `A'`.
    pub a_edges: Positions,
    /// Edge positions `B'`.
    pub b_edges: Positions,
}

/// Bitmask of 1-based positions.
pub fn positions(list: &[u32]) -> Positions {
    list.iter().fold(0, |m, &p| m | (1 << (p - 1)))
}

/// 1-based positions of a mask, ascending.
pub fn position_list(mut mask: Positions) -> Vec<u32> {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(mask.trailing_zeros() + 1);
        mask &= mask - 1;
    }
    out
}

impl LemmaInstance {
    pub fn new(s: u32, q: u32) -> Self {
        LemmaInstance {
            s,
            q,
            ..Default::default()
        }
    }

    pub fn with_a(mut self, p: &[u32]) -> Self {
        self.a = positions(p);
        self
    }

    pub fn with_b(mut self, p: &[u32]) -> Self {
        self.b = positions(p);
        self
    }

    pub fn with_f(mut self, p: &[u32]) -> Self {
        self.f = positions(p);
        self
    }

    pub fn with_independent(mut self, p: &[u32]) -> Self {
        self.independent = positions(p);
        self
    }

    pub fn with_a_edges(mut self, p: &[u32]) -> Self {
        self.a_edges = positions(p);
        self
    }

    pub fn with_b_edges(mut self, p: &[u32]) -> Self {
        self.b_edges = positions(p);
        self
    }

    /// `a = |A'|`.
    pub fn a_count(&self) -> u32 {
        self.a_edges.count_ones()
    }

    fn vertex_range(&self) -> Positions {
        full(self.s)
    }

    fn edge_range(&self) -> Positions {
        full(self.s.saturating_sub(1))
    }
}

impl fmt::Display for LemmaInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} q={}", self.s, self.q)?;
        for (name, mask) in [
            ("A", self.a),
            ("B", self.b),
            ("F", self.f),
            ("I", self.independent),
            ("A'", self.a_edges),
            ("B'", self.b_edges),
        ] {
            if mask != 0 {
                write!(f, " {name}={:?}", position_list(mask))?;
            }
        }
        Ok(())
    }
}

fn full(k: u32) -> Positions {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

fn is_independent(mask: Positions) -> bool {
    mask & (mask >> 1) == 0
}

/// Positions at distance `1..=k` from some element of `mask`.
fn punctured_ball(mask: Positions, k: u32) -> Positions {
    let mut out = 0;
    for d in 1..=k.min(31) {
        out |= (mask << d) | (mask >> d);
    }
    out
}

/// Positions at distance `0..=k` from some element of `mask`.
fn ball(mask: Positions, k: u32) -> Positions {
    mask | punctured_ball(mask, k)
}

/// Every `i` in `x` and `j` in `y` have `i = j` or `|i - j| >= q`.
fn equal_or_far(x: Positions, y: Positions, q: u32) -> bool {
    y & punctured_ball(x, q.saturating_sub(1)) == 0
}

/// Endpoints of a set of path edges.
fn edge_endpoints(edges: Positions) -> Positions {
    edges | (edges << 1)
}

/// Named hypothesis clauses of `lemma` for `inst`; the hypothesis holds
/// iff all of them do.
pub fn hypothesis_clauses(lemma: Lemma, inst: &LemmaInstance) -> Vec<(&'static str, bool)> {
    let q = inst.q;
    let vr = inst.vertex_range();
    let er = inst.edge_range();
    let s_ok = inst.s >= 2 && inst.s <= MAX_SAMPLED_S;
    match lemma {
        Lemma::Verc2 => {
            let b_minus_a = inst.b & !inst.a;
            vec![
                ("positions in range", s_ok && (inst.a | inst.b) & !vr == 0),
                ("A nonempty", inst.a != 0),
                ("B nonempty", inst.b != 0),
                ("A independent", is_independent(inst.a)),
                ("B - A nonempty", b_minus_a != 0),
                ("q >= 1", q >= 1),
                (
                    "|i - j| >= q for i in A, j in B - A",
                    b_minus_a & ball(inst.a, q.saturating_sub(1)) == 0,
                ),
            ]
        }
        Lemma::Indep2 => vec![
            (
                "positions in range",
                s_ok && inst.independent & !vr == 0 && inst.a_edges & !er == 0,
            ),
            ("I nonempty", inst.independent != 0),
            ("I independent", is_independent(inst.independent)),
            ("A' nonempty", inst.a_edges != 0),
            ("a < s", inst.a_count() < inst.s),
            ("q >= 1", q >= 1),
            (
                "distance from A' to I >= q",
                inst.independent & ball(edge_endpoints(inst.a_edges), q.saturating_sub(1)) == 0,
            ),
        ],
        Lemma::VerNew => vec![
            ("positions in range", s_ok && (inst.a | inst.b) & !vr == 0),
            ("A nonempty", inst.a != 0),
            ("B nonempty", inst.b != 0),
            ("q >= 2", q >= 2),
            (
                "i = j or |i - j| >= q for i in A, j in B",
                equal_or_far(inst.a, inst.b, q),
            ),
        ],
        Lemma::EdNew => vec![
            (
                "positions in range",
                s_ok && (inst.a_edges | inst.b_edges) & !er == 0,
            ),
            ("A' nonempty", inst.a_edges != 0),
            ("B' nonempty", inst.b_edges != 0),
            ("q >= 2", q >= 2),
            (
                "i = j or |i - j| >= q for e_i in A', e_j in B'",
                equal_or_far(inst.a_edges, inst.b_edges, q),
            ),
        ],
        Lemma::Consecpath2 => vec![
            (
                "positions in range",
                s_ok && (inst.a | inst.b) & !vr == 0 && inst.f & !er == 0,
            ),
            ("A nonempty", inst.a != 0),
            ("B nonempty", inst.b != 0),
            (
                "A, B avoid the endpoints of F",
                (inst.a | inst.b) & edge_endpoints(inst.f) == 0,
            ),
            (
                "i = j or |i - j| >= 2 for i in A, j in B",
                equal_or_far(inst.a, inst.b, 2),
            ),
        ],
    }
}

pub fn hypothesis_holds(lemma: Lemma, inst: &LemmaInstance) -> bool {
    hypothesis_clauses(lemma, inst).iter().all(|&(_, ok)| ok)
}

/// One inequality `lhs >= rhs` tested on an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub case: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub tight: bool,
    /// For tight instances of a case with an equality characterization:
    /// whether the instance has the required shape.
    pub characterization: Option<bool>,
}

impl BoundCheck {
    fn new(case: &'static str, lhs: i64, rhs: i64) -> Self {
        BoundCheck {
            case,
            lhs,
            rhs,
            holds: lhs >= rhs,
            tight: lhs == rhs,
            characterization: None,
        }
    }

    fn characterized(mut self, shape_ok: impl FnOnce() -> bool) -> Self {
        if self.tight {
            self.characterization = Some(shape_ok());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.holds && self.characterization != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub lemma: Lemma,
    pub checks: Vec<BoundCheck>,
    /// Checks of literal statements outside the range where they are
    /// claimed to follow; reported, never counted as violations.
    pub notes: Vec<BoundCheck>,
}

impl LemmaVerdict {
    /// No conclusion failed.
    pub fn holds(&self) -> bool {
        self.checks.iter().all(BoundCheck::passed)
    }
}

fn count(mask: Positions) -> i64 {
    i64::from(mask.count_ones())
}

fn require(lemma: Lemma, inst: &LemmaInstance) -> Result<(), LemmaError> {
    match hypothesis_clauses(lemma, inst)
        .into_iter()
        .find(|&(_, ok)| !ok)
    {
        Some((clause, _)) => Err(LemmaError::HypothesisViolated(clause)),
        None => Ok(()),
    }
}

fn nested(x: Positions, y: Positions) -> bool {
    x & !y == 0 || y & !x == 0
}

/// `{1, 1 + q, 1 + 2q, ..., len}`, or `None` if `len` is not on it.
fn progression(len: u32, q: u32) -> Option<Positions> {
    if len == 0 || !(len - 1).is_multiple_of(q) {
        return None;
    }
    Some((0..=(len - 1) / q).fold(0, |m, k| m | (1 << (k * q))))
}

pub fn check_verc2(inst: &LemmaInstance) -> Result<LemmaVerdict, LemmaError> {
    require(Lemma::Verc2, inst)?;
    let s = i64::from(inst.s);
    let q = i64::from(inst.q);
    let a = count(inst.a);
    let b_minus_a = count(inst.b & !inst.a);
    let mut checks = Vec::new();
    let notes = Vec::new();
    if q >= 2 {
        checks.push(BoundCheck::new("i", s, 2 * a + b_minus_a + q - 2));
    } else {
        checks.push(BoundCheck::new("ii", s, 2 * a + b_minus_a - 2));
    }
    if is_independent(inst.b) {
        // the argument needs q >= 2; at q = 1 the bound is asserted as
        // stated but tallied separately
        let case = if q >= 2 {
            "independent B"
        } else {
            "independent B, q = 1"
        };
        checks.push(BoundCheck::new(case, s, 2 * a + 2 * b_minus_a + q - 3));
    }
    Ok(LemmaVerdict {
        lemma: Lemma::Verc2,
        checks,
        notes,
    })
}

pub fn check_indep2(inst: &LemmaInstance) -> Result<LemmaVerdict, LemmaError> {
    require(Lemma::Indep2, inst)?;
    let s = i64::from(inst.s);
    let q = i64::from(inst.q);
    let a = i64::from(inst.a_count());
    let size = count(inst.independent);
    let check = if q >= 2 {
        BoundCheck::new("q >= 2", (s - a - q + 1).div_euclid(2), size)
    } else {
        BoundCheck::new("q = 1", (s - a + 1).div_euclid(2), size)
    };
    Ok(LemmaVerdict {
        lemma: Lemma::Indep2,
        checks: vec![check],
        notes: Vec::new(),
    })
}

/// Shared body of `ver_new` and `ed_new` on a path with `len` positions.
fn separated_sets(len: u32, q: u32, a: Positions, b: Positions) -> BoundCheck {
    let len_i = i64::from(len);
    let qi = i64::from(q);
    if a == b {
        BoundCheck::new("i", len_i, 1 + qi * (count(a) - 1))
            .characterized(|| progression(len, q) == Some(a))
    } else {
        BoundCheck::new("ii", len_i, count(a) + count(b) + qi - 2).characterized(|| nested(a, b))
    }
}

pub fn check_ver_new(inst: &LemmaInstance) -> Result<LemmaVerdict, LemmaError> {
    require(Lemma::VerNew, inst)?;
    let check = separated_sets(inst.s, inst.q, inst.a, inst.b);
    Ok(LemmaVerdict {
        lemma: Lemma::VerNew,
        checks: vec![check],
        notes: Vec::new(),
    })
}

pub fn check_ed_new(inst: &LemmaInstance) -> Result<LemmaVerdict, LemmaError> {
    require(Lemma::EdNew, inst)?;
    let check = separated_sets(inst.s - 1, inst.q, inst.a_edges, inst.b_edges);
    Ok(LemmaVerdict {
        lemma: Lemma::EdNew,
        checks: vec![check],
        notes: Vec::new(),
    })
}

pub fn check_consecpath2(inst: &LemmaInstance) -> Result<LemmaVerdict, LemmaError> {
    require(Lemma::Consecpath2, inst)?;
    let s = i64::from(inst.s);
    let f = count(inst.f);
    let (a, b) = (inst.a, inst.b);
    let check = if a == b {
        BoundCheck::new("i", s, count(a) + count(b) + f - 1)
    } else {
        BoundCheck::new("ii", s, count(a) + count(b) + f).characterized(|| nested(a, b))
    };
    Ok(LemmaVerdict {
        lemma: Lemma::Consecpath2,
        checks: vec![check],
        notes: Vec::new(),
    })
}

pub fn check_lemma(lemma: Lemma, inst: &LemmaInstance) -> Result<LemmaVerdict, LemmaError> {
    match lemma {
        Lemma::Verc2 => check_verc2(inst),
        Lemma::Indep2 => check_indep2(inst),
        Lemma::VerNew => check_ver_new(inst),
        Lemma::EdNew => check_ed_new(inst),
        Lemma::Consecpath2 => check_consecpath2(inst),
    }
}

/// Per-case tallies over a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseStats {
    pub case: &'static str,
    pub tested: u64,
    pub violations: u64,
    pub tight: u64,
    pub characterized: bool,
    pub characterization_failures: u64,
}

impl CaseStats {
    fn new(case: &'static str, characterized: bool) -> Self {
        CaseStats {
            case,
            tested: 0,
            violations: 0,
            tight: 0,
            characterized,
            characterization_failures: 0,
        }
    }
}

/// Outcome of [`exhaust_lemma`] or [`sample_lemma`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub s_max: u32,
    pub q_max: u32,
    pub sampled: Option<u64>,
    /// Candidate configurations looked at.
    pub enumerated: u64,
    /// Configurations satisfying the hypotheses.
    pub instances: u64,
    pub cases: Vec<CaseStats>,
    pub notes: Vec<CaseStats>,
    /// First few instances whose conclusion failed.
    pub counterexamples: Vec<LemmaInstance>,
    pub elapsed: Duration,
}

const KEPT_COUNTEREXAMPLES: usize = 32;

impl LemmaReport {
    pub fn violations(&self) -> u64 {
        self.cases
            .iter()
            .map(|c| c.violations + c.characterization_failures)
            .sum()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }

    /// No instance satisfied the hypotheses, so nothing was really tested.
    pub fn is_vacuous(&self) -> bool {
        self.instances == 0
    }

    pub fn case(&self, name: &str) -> Option<&CaseStats> {
        self.cases.iter().find(|c| c.case == name)
    }

    /// Every case with an equality characterization was hit by at least
    /// one tight instance.
    pub fn every_characterized_case_tight(&self) -> bool {
        self.lemma
            .characterized_cases()
            .iter()
            .all(|name| self.case(name).is_some_and(|c| c.tight > 0))
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: s <= {}, q <= {}: {} instances satisfy the hypotheses ({} enumerated)",
            self.lemma, self.s_max, self.q_max, self.instances, self.enumerated
        )?;
        if self.is_vacuous() {
            writeln!(
                f,
                "  no instance satisfies the hypotheses; nothing was checked"
            )?;
        }
        for c in &self.cases {
            write!(
                f,
                "  case {:<14} tested {:>9}  tight {:>7}  violations {}",
                c.case, c.tested, c.tight, c.violations
            )?;
            if c.characterized {
                write!(
                    f,
                    "  characterization failures {}",
                    c.characterization_failures
                )?;
            }
            writeln!(f)?;
        }
        for c in &self.notes {
            writeln!(
                f,
                "  note {:<14} tested {:>9}  literal failures {}",
                c.case, c.tested, c.violations
            )?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    enumerated: u64,
    instances: u64,
    cases: Vec<CaseStats>,
    notes: Vec<CaseStats>,
    counterexamples: Vec<LemmaInstance>,
}

fn bump(list: &mut Vec<CaseStats>, check: &BoundCheck, characterized: bool) {
    let idx = match list.iter().position(|c| c.case == check.case) {
        Some(i) => i,
        None => {
            list.push(CaseStats::new(check.case, characterized));
            list.len() - 1
        }
    };
    let stats = &mut list[idx];
    stats.tested += 1;
    if !check.holds {
        stats.violations += 1;
    }
    if check.tight {
        stats.tight += 1;
    }
    if check.characterization == Some(false) {
        stats.characterization_failures += 1;
    }
}

impl Tally {
    fn record(&mut self, lemma: Lemma, inst: &LemmaInstance) {
        self.enumerated += 1;
        let Ok(verdict) = check_lemma(lemma, inst) else {
            return;
        };
        self.instances += 1;
        for c in &verdict.checks {
            bump(
                &mut self.cases,
                c,
                lemma.characterized_cases().contains(&c.case),
            );
        }
        for c in &verdict.notes {
            bump(&mut self.notes, c, false);
        }
        if !verdict.holds() && self.counterexamples.len() < KEPT_COUNTEREXAMPLES {
            self.counterexamples.push(*inst);
        }
    }

    fn merge(&mut self, other: Tally) {
        self.enumerated += other.enumerated;
        self.instances += other.instances;
        for (mine, theirs) in [
            (&mut self.cases, other.cases),
            (&mut self.notes, other.notes),
        ] {
            for c in theirs {
                match mine.iter_mut().find(|m| m.case == c.case) {
                    Some(m) => {
                        m.tested += c.tested;
                        m.violations += c.violations;
                        m.tight += c.tight;
                        m.characterization_failures += c.characterization_failures;
                    }
                    None => mine.push(c),
                }
            }
        }
        let room = KEPT_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }
}

/// Calls `visit` on every submask of `mask`, including 0 and `mask`.
fn for_each_submask(mask: Positions, mut visit: impl FnMut(Positions)) {
    let mut sub = mask;
    loop {
        visit(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
}

/// Every candidate configuration for one `(s, q)`.
fn enumerate_shard(lemma: Lemma, s: u32, q: u32) -> Tally {
    let mut tally = Tally::default();
    let vr = full(s);
    let er = full(s - 1);
    let base = LemmaInstance::new(s, q);
    match lemma {
        Lemma::Verc2 => for_each_submask(vr, |a| {
            for_each_submask(vr, |b| tally.record(lemma, &LemmaInstance { a, b, ..base }));
        }),
        Lemma::Indep2 => for_each_submask(vr, |independent| {
            for_each_submask(er, |a_edges| {
                tally.record(
                    lemma,
                    &LemmaInstance {
                        independent,
                        a_edges,
                        ..base
                    },
                )
            });
        }),
        Lemma::VerNew => for_each_submask(vr, |a| {
            for_each_submask(vr, |b| tally.record(lemma, &LemmaInstance { a, b, ..base }));
        }),
        Lemma::EdNew => for_each_submask(er, |a_edges| {
            for_each_submask(er, |b_edges| {
                tally.record(
                    lemma,
                    &LemmaInstance {
                        a_edges,
                        b_edges,
                        ..base
                    },
                )
            });
        }),
        Lemma::Consecpath2 => for_each_submask(er, |f| {
            // sets touching F's endpoints fail the hypotheses outright
            let free = vr & !edge_endpoints(f);
            for_each_submask(free, |a| {
                for_each_submask(free, |b| {
                    tally.record(lemma, &LemmaInstance { a, b, f, ..base })
                });
            });
        }),
    }
    tally
}

fn shards(lemma: Lemma, s_max: u32, q_max: u32) -> Vec<(u32, u32)> {
    let qs: Vec<u32> = match lemma {
        // q is fixed at 2 by the statement
        Lemma::Consecpath2 => vec![2],
        _ => (lemma.min_q()..=q_max).collect(),
    };
    (2..=s_max)
        .flat_map(|s| qs.iter().map(move |&q| (s, q)))
        .collect()
}

fn finish_report(
    lemma: Lemma,
    s_max: u32,
    q_max: u32,
    sampled: Option<u64>,
    tally: Tally,
    started: Instant,
) -> LemmaReport {
    let mut cases = tally.cases;
    cases.sort_by_key(|c| c.case);
    LemmaReport {
        lemma,
        s_max,
        q_max,
        sampled,
        enumerated: tally.enumerated,
        instances: tally.instances,
        cases,
        notes: tally.notes,
        counterexamples: tally.counterexamples,
        elapsed: started.elapsed(),
    }
}

/// Checks the lemma on every configuration with `2 <= s <= s_max` and
/// `q <= q_max`. Shards `(s, q)` run in parallel and merge in order.
pub fn exhaust_lemma(lemma: Lemma, s_max: u32, q_max: u32) -> Result<LemmaReport, LemmaError> {
    if !(2..=MAX_EXHAUSTIVE_S).contains(&s_max) {
        return Err(LemmaError::SizeOutOfRange {
            s: s_max,
            max: MAX_EXHAUSTIVE_S,
        });
    }
    let started = Instant::now();
    let tallies: Vec<Tally> = shards(lemma, s_max, q_max)
        .into_par_iter()
        .map(|(s, q)| enumerate_shard(lemma, s, q))
        .collect();
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t);
    }
    Ok(finish_report(lemma, s_max, q_max, None, total, started))
}

/// Random configurations on a path of exactly `s` vertices, for sizes past
/// the exhaustive cap. Each set is a uniform random subset; only those
/// satisfying the hypotheses count as instances.
pub fn sample_lemma(
    lemma: Lemma,
    s: u32,
    q: u32,
    samples: u64,
    seed: u64,
) -> Result<LemmaReport, LemmaError> {
    if !(2..=MAX_SAMPLED_S).contains(&s) {
        return Err(LemmaError::SizeOutOfRange {
            s,
            max: MAX_SAMPLED_S,
        });
    }
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vr = full(s);
    let er = full(s - 1);
    let mut tally = Tally::default();
    for _ in 0..samples {
        let mut inst = LemmaInstance::new(s, q);
        match lemma {
            Lemma::Verc2 | Lemma::VerNew => {
                inst.a = rng.gen::<u32>() & vr;
                inst.b = rng.gen::<u32>() & vr;
            }
            Lemma::Indep2 => {
                inst.independent = rng.gen::<u32>() & vr;
                inst.a_edges = rng.gen::<u32>() & er;
            }
            Lemma::EdNew => {
                inst.a_edges = rng.gen::<u32>() & er;
                inst.b_edges = rng.gen::<u32>() & er;
            }
            Lemma::Consecpath2 => {
                inst.q = 2;
                inst.f = rng.gen::<u32>() & er;
                let free = vr & !edge_endpoints(inst.f);
                inst.a = rng.gen::<u32>() & free;
                inst.b = rng.gen::<u32>() & free;
            }
        }
        tally.record(lemma, &inst);
    }
    Ok(finish_report(lemma, s, q, Some(seed), tally, started))
}
