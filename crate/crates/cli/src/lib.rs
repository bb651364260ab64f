//! Command-line front end. [`run`] takes the streams explicitly so the
//! whole tool can be driven from tests.
//!
//! Exit codes: 0 found/verified, 1 refuted (a counterexample or a rejected
//! certificate), 2 usage, input or parameter error.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use berge_core::certificate::BergeCertificate;
use berge_core::harness::{
    exhaustive_verify, sampled_verify, threshold, verify_sharpness, Counterexample,
    ExhaustiveOptions, HarnessError, Threshold, ThresholdKind, ThresholdQuery, VerificationReport,
    DEFAULT_ENUMERATION_CAP,
};
use berge_core::io::{
    parse_certificate, parse_hypergraph, parse_special_pair, special_pair_comment,
    write_certificate, write_hypergraph,
};
use berge_core::lemmas::{exhaust_lemma, Lemma, LemmaReport};
use berge_core::search::all_pairs;
use berge_core::{
    build, find_hamiltonian_cycle, find_hamiltonian_path, is_one_extendable, validate_certificate,
    ConstructionSpec, Decision, Family, Hypergraph, SearchConfig,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// Version of the `--json` report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "berge",
    version,
    about = "Hamiltonian Berge paths and cycles in uniform hypergraphs"
)]
struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Ascending search order and no timing in reports, so output is
    /// byte-identical across runs.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a hypergraph from one of the built-in families.
    Gen {
        /// H1, H2, H3, H1P, H2P, H3P, H4, TIGHT_CYCLE or C_PRIME.
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Deleted tight-cycle edge (H3, H3P, C_PRIME).
        #[arg(long)]
        j: Option<usize>,
        /// Second deleted edge (H3P).
        #[arg(long)]
        j2: Option<usize>,
    },
    /// Search for hamiltonian Berge paths.
    Check {
        /// Hypergraph file, or '-' for stdin.
        #[arg(default_value = "-")]
        file: String,
        /// Endpoints; defaults to the file's special pair, else all pairs.
        #[arg(long, num_args = 2, value_names = ["X", "Y"], conflicts_with = "all_pairs")]
        pair: Option<Vec<usize>>,
        #[arg(long)]
        all_pairs: bool,
        /// Also write each certificate to DIR/path_X_Y.cert.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
    /// Search for a hamiltonian Berge cycle.
    Cycle {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Validate a certificate against a hypergraph.
    Certify {
        hypergraph: String,
        certificate: String,
    },
    /// Check that a family sits one below its threshold and fails.
    VerifySharpness {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Test every r-graph on n vertices at or above the threshold.
    VerifyExhaustive {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        kind: KindArg,
        /// Largest number of potential edges C(n, r) to enumerate.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u32,
        /// One representative per isomorphism class (n <= 7).
        #[arg(long)]
        canonical: bool,
    },
    /// Test seeded random r-graphs at or above the threshold.
    VerifySampled {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        kind: KindArg,
    },
    /// Brute-force the path lemmas.
    VerifyLemmas {
        /// verc2, indep2, ver_new, ed_new, consecpath2 or all.
        #[arg(long, default_value = "all")]
        lemma: String,
        #[arg(long, default_value_t = 10)]
        s_max: u32,
        #[arg(long, default_value_t = 4)]
        q_max: u32,
    },
    /// Minimum degree thresholds.
    Thresholds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        kind: KindArg,
    },
    /// Decide 1-extendability.
    OneExtendable {
        #[arg(default_value = "-")]
        file: String,
    },
}

#[derive(Debug, Args)]
struct KindArg {
    /// hamiltonian-connected or hamiltonian-cycle.
    #[arg(long, default_value = "hamiltonian-connected")]
    kind: ThresholdKind,
}

/// Failure that ends a command with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<i32, UsageError>;

struct Ctx<'a> {
    json: bool,
    deterministic: bool,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read_input(&mut self, file: &str) -> Result<String, UsageError> {
        if file == "-" {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| UsageError(format!("reading stdin: {e}")))?;
            Ok(text)
        } else {
            fs::read_to_string(file).map_err(|e| UsageError(format!("{file}: {e}")))
        }
    }

    fn read_hypergraph(&mut self, file: &str) -> Result<(Hypergraph, String), UsageError> {
        let text = self.read_input(file)?;
        let h = parse_hypergraph(&text).map_err(|e| UsageError(format!("{file}: {e}")))?;
        Ok((h, text))
    }

    fn search_config(&self) -> SearchConfig {
        if self.deterministic {
            SearchConfig::deterministic()
        } else {
            SearchConfig::default()
        }
    }

    fn elapsed_ms(&self, d: Duration) -> Value {
        if self.deterministic {
            Value::Null
        } else {
            json!(d.as_secs_f64() * 1000.0)
        }
    }

    fn emit_json(&mut self, report: Value) -> Result<(), UsageError> {
        let text = serde_json::to_string_pretty(&report)?;
        writeln!(self.out, "{text}")?;
        Ok(())
    }
}

/// Common JSON envelope.
#[allow(clippy::too_many_arguments)]
fn envelope(
    task: &str,
    parameters: Value,
    verdict: &str,
    counterexamples: Vec<Value>,
    counts: Value,
    seed: Option<u64>,
    elapsed_ms: Value,
    extra: Option<(&str, Value)>,
) -> Value {
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "task": task,
        "parameters": parameters,
        "verdict": verdict,
        "counterexamples": counterexamples,
        "counts": counts,
        "seed": seed,
        "elapsed_ms": elapsed_ms,
    });
    if let Some((key, value)) = extra {
        v[key] = value;
    }
    v
}

fn counterexample_json(c: &Counterexample) -> Value {
    json!({ "hypergraph": c.hypergraph, "pairs": c.pairs })
}

fn certificate_json(c: &BergeCertificate) -> Value {
    json!({ "kind": c.kind.to_string(), "vertices": c.vertices, "edges": c.edges })
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run(
    argv: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        deterministic: cli.deterministic,
        stdin,
        out: stdout,
        err: stderr,
    };
    let result = match cli.command {
        Command::Gen {
            family,
            n,
            r,
            j,
            j2,
        } => cmd_gen(&mut ctx, family, n, r, j, j2),
        Command::Check {
            file,
            pair,
            all_pairs,
            out_dir,
        } => cmd_check(&mut ctx, &file, pair, all_pairs, out_dir),
        Command::Cycle { file } => cmd_cycle(&mut ctx, &file),
        Command::Certify {
            hypergraph,
            certificate,
        } => cmd_certify(&mut ctx, &hypergraph, &certificate),
        Command::VerifySharpness { family, n, r } => cmd_sharpness(&mut ctx, family, n, r),
        Command::VerifyExhaustive {
            n,
            r,
            kind,
            cap,
            canonical,
        } => {
            let options = ExhaustiveOptions {
                cap,
                canonical_only: canonical,
                search: ctx.search_config(),
            };
            let seed = None;
            harness_report(&mut ctx, exhaustive_verify(n, r, kind.kind, options), seed)
        }
        Command::VerifySampled {
            n,
            r,
            samples,
            seed,
            kind,
        } => {
            let search = ctx.search_config();
            harness_report(
                &mut ctx,
                sampled_verify(n, r, kind.kind, samples, seed, search),
                Some(seed),
            )
        }
        Command::VerifyLemmas {
            lemma,
            s_max,
            q_max,
        } => cmd_lemmas(&mut ctx, &lemma, s_max, q_max),
        Command::Thresholds { n, r, kind } => cmd_thresholds(&mut ctx, n, r, kind.kind),
        Command::OneExtendable { file } => cmd_one_extendable(&mut ctx, &file),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn default_parameters(family: Family) -> (usize, usize) {
    match family {
        Family::H4 => (5, 3),
        Family::H3 | Family::H3P => (7, 4),
        _ => (8, 3),
    }
}

fn spec_from(
    family: Family,
    n: Option<usize>,
    r: Option<usize>,
) -> Result<ConstructionSpec, UsageError> {
    let (dn, dr) = default_parameters(family);
    match (family, n, r) {
        (Family::H4, Some(n), _) if n != 5 => Err(UsageError("H4 has n = 5".into())),
        (Family::H4, _, Some(r)) if r != 3 => Err(UsageError("H4 has r = 3".into())),
        (Family::H4, _, _) => Ok(ConstructionSpec::h4()),
        _ => Ok(ConstructionSpec::new(
            family,
            n.unwrap_or(dn),
            r.unwrap_or(dr),
        )),
    }
}

fn cmd_gen(
    ctx: &mut Ctx<'_>,
    family: Family,
    n: Option<usize>,
    r: Option<usize>,
    j: Option<usize>,
    j2: Option<usize>,
) -> CmdResult {
    let mut spec = spec_from(family, n, r)?;
    if j.is_some() || j2.is_some() {
        let mut deleted = spec.effective_deleted();
        if let Some(j) = j {
            deleted[0] = j;
        }
        if let Some(j2) = j2 {
            if deleted.len() < 2 {
                return Err(UsageError(format!(
                    "{family} deletes a single edge; --j2 does not apply"
                )));
            }
            deleted[1] = j2;
        }
        spec = spec.with_deleted(deleted);
    }
    let c = build(&spec)?;
    let mut comments = vec![format!("{} n={} r={}", spec.family, spec.n, spec.r)];
    if !spec.effective_deleted().is_empty() {
        let list: Vec<String> = spec
            .effective_deleted()
            .iter()
            .map(|d| format!("e{d}"))
            .collect();
        comments.push(format!("deleted tight-cycle edges: {}", list.join(" ")));
    }
    if let Some(labels) = &c.edge_labels {
        let list: Vec<String> = labels.iter().map(|l| format!("e{l}")).collect();
        comments.push(format!("edge labels: {}", list.join(" ")));
    }
    if let Some(p) = c.special_pair {
        comments.push(special_pair_comment(p.x, p.y));
    }
    let text = write_hypergraph(&c.hypergraph, &comments);
    if ctx.json {
        let report = envelope(
            "gen",
            json!({ "family": spec.family.name(), "n": spec.n, "r": spec.r, "deleted": spec.effective_deleted() }),
            "generated",
            Vec::new(),
            json!({ "edges": c.hypergraph.edge_count(), "min_degree": c.hypergraph.min_degree() }),
            None,
            Value::Null,
            Some(("hypergraph", json!(text))),
        );
        ctx.emit_json(report)?;
    } else {
        write!(ctx.out, "{text}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_check(
    ctx: &mut Ctx<'_>,
    file: &str,
    pair: Option<Vec<usize>>,
    all: bool,
    out_dir: Option<PathBuf>,
) -> CmdResult {
    let (h, text) = ctx.read_hypergraph(file)?;
    let pairs: Vec<(usize, usize)> = match (pair, all) {
        (Some(p), _) => vec![(p[0], p[1])],
        (None, true) => all_pairs(h.n()),
        (None, false) => match parse_special_pair(&text) {
            Some(p) => vec![p],
            None => all_pairs(h.n()),
        },
    };
    if let Some(dir) = &out_dir {
        fs::create_dir_all(dir).map_err(|e| UsageError(format!("{}: {e}", dir.display())))?;
    }
    let config = ctx.search_config();
    let single = pairs.len() == 1;
    let mut found = Vec::new();
    let mut refuted = Vec::new();
    let mut undecided = Vec::new();
    let mut nodes = 0;
    let mut elapsed = Duration::ZERO;
    for &(x, y) in &pairs {
        let outcome = find_hamiltonian_path(&h, x, y, config)?;
        nodes += outcome.nodes_explored;
        elapsed += outcome.elapsed;
        match outcome.decided {
            Decision::Found => found.push((
                (x, y),
                outcome
                    .certificate
                    .expect("found paths carry a certificate"),
            )),
            Decision::Refuted => refuted.push((x, y)),
            Decision::Undecided => undecided.push((x, y)),
        }
    }
    if let Some(dir) = &out_dir {
        for ((x, y), cert) in &found {
            write_file(
                &dir.join(format!("path_{x}_{y}.cert")),
                &write_certificate(cert),
            )?;
        }
    }
    let verdict = if !refuted.is_empty() {
        "refuted"
    } else if !undecided.is_empty() {
        "undecided"
    } else {
        "found"
    };
    if ctx.json {
        let counterexamples = if refuted.is_empty() {
            Vec::new()
        } else {
            vec![json!({ "hypergraph": write_hypergraph(&h, &[]), "pairs": refuted })]
        };
        let certificates: Vec<Value> = found
            .iter()
            .map(|((x, y), c)| json!({ "x": x, "y": y, "certificate": certificate_json(c) }))
            .collect();
        let report = envelope(
            "check",
            json!({ "n": h.n(), "r": h.r(), "pairs": pairs }),
            verdict,
            counterexamples,
            json!({ "pairs": pairs.len(), "found": found.len(), "refuted": refuted.len(),
                    "undecided": undecided.len(), "nodes_explored": nodes }),
            None,
            ctx.elapsed_ms(elapsed),
            Some(("certificates", json!(certificates))),
        );
        ctx.emit_json(report)?;
    } else {
        for ((x, y), cert) in &found {
            if !single {
                writeln!(ctx.out, "# pair {x} {y}")?;
            }
            write!(ctx.out, "{}", write_certificate(cert))?;
        }
        for (x, y) in &refuted {
            writeln!(ctx.out, "no hamiltonian Berge path from {x} to {y}")?;
        }
        for (x, y) in &undecided {
            writeln!(ctx.out, "undecided: search budget exhausted for {x}, {y}")?;
        }
        if !single {
            writeln!(
                ctx.err,
                "{} of {} pairs joined by a hamiltonian Berge path",
                found.len(),
                pairs.len()
            )?;
        }
    }
    Ok(if verdict == "found" {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), UsageError> {
    fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn cmd_cycle(ctx: &mut Ctx<'_>, file: &str) -> CmdResult {
    let (h, _) = ctx.read_hypergraph(file)?;
    let outcome = find_hamiltonian_cycle(&h, ctx.search_config());
    let verdict = match outcome.decided {
        Decision::Found => "found",
        Decision::Refuted => "refuted",
        Decision::Undecided => "undecided",
    };
    if ctx.json {
        let counterexamples = if outcome.is_refuted() {
            vec![json!({ "hypergraph": write_hypergraph(&h, &[]), "pairs": [] })]
        } else {
            Vec::new()
        };
        let report = envelope(
            "cycle",
            json!({ "n": h.n(), "r": h.r() }),
            verdict,
            counterexamples,
            json!({ "nodes_explored": outcome.nodes_explored }),
            None,
            ctx.elapsed_ms(outcome.elapsed),
            Some((
                "certificate",
                outcome
                    .certificate
                    .as_ref()
                    .map_or(Value::Null, certificate_json),
            )),
        );
        ctx.emit_json(report)?;
    } else if let Some(c) = &outcome.certificate {
        write!(ctx.out, "{}", write_certificate(c))?;
    } else if outcome.is_refuted() {
        writeln!(ctx.out, "no hamiltonian Berge cycle")?;
    } else {
        writeln!(ctx.out, "undecided: search budget exhausted")?;
    }
    Ok(if outcome.is_found() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}

fn cmd_certify(ctx: &mut Ctx<'_>, hypergraph: &str, certificate: &str) -> CmdResult {
    if hypergraph == "-" && certificate == "-" {
        return Err(UsageError("only one input can come from stdin".into()));
    }
    let (h, _) = ctx.read_hypergraph(hypergraph)?;
    let text = ctx.read_input(certificate)?;
    let cert = parse_certificate(&text).map_err(|e| UsageError(format!("{certificate}: {e}")))?;
    let result = validate_certificate(&h, &cert);
    if ctx.json {
        let report = envelope(
            "certify",
            json!({ "n": h.n(), "r": h.r(), "certificate": certificate_json(&cert) }),
            if result.is_ok() { "valid" } else { "invalid" },
            Vec::new(),
            json!({ "vertices": cert.vertices.len(), "edges": cert.edges.len() }),
            None,
            Value::Null,
            Some((
                "violation",
                result
                    .as_ref()
                    .err()
                    .map_or(Value::Null, |v| json!(v.to_string())),
            )),
        );
        ctx.emit_json(report)?;
    } else {
        let hamiltonian = if cert.is_hamiltonian_in(&h) {
            "hamiltonian "
        } else {
            ""
        };
        match &result {
            Ok(()) => writeln!(
                ctx.out,
                "valid {hamiltonian}Berge {} on {} vertices",
                cert.kind,
                cert.len()
            )?,
            Err(v) => writeln!(ctx.out, "invalid: {v}")?,
        }
    }
    Ok(if result.is_ok() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}

fn cmd_sharpness(
    ctx: &mut Ctx<'_>,
    family: Family,
    n: Option<usize>,
    r: Option<usize>,
) -> CmdResult {
    let spec = spec_from(family, n, r)?;
    harness_report(ctx, verify_sharpness(&spec), None)
}

fn harness_report(
    ctx: &mut Ctx<'_>,
    report: Result<VerificationReport, HarnessError>,
    seed: Option<u64>,
) -> CmdResult {
    let report = report?;
    if ctx.json {
        let verdict = if report.confirmed() {
            "verified"
        } else {
            "refuted"
        };
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "expected": c.expected, "actual": c.actual, "passed": c.passed }))
            .collect();
        let mut counts = json!({
            "scanned": report.scanned,
            "checked": report.instances_checked,
            "failures": report.failures.len(),
            "undecided": report.undecided,
        });
        if let Some(s) = &report.sampled {
            counts["rejected_draws"] = json!(s.rejected);
        }
        let mut parameters = json!({ "n": report.n, "r": report.r });
        if let Some(kind) = report.kind {
            parameters["kind"] = json!(kind.to_string());
        }
        parameters["min_degree_threshold"] = json!(report.min_degree_threshold);
        if let Some(s) = &report.sampled {
            parameters["samples"] = json!(s.samples);
            parameters["edge_probability"] = json!(s.edge_probability);
        }
        let mut out = envelope(
            &report.task,
            parameters,
            verdict,
            report.failures.iter().map(counterexample_json).collect(),
            counts,
            seed,
            ctx.elapsed_ms(report.elapsed),
            Some(("checks", json!(checks))),
        );
        out["notes"] = json!(report.notes);
        ctx.emit_json(out)?;
    } else {
        let mut text = report.to_string();
        if ctx.deterministic {
            text.push('\n');
        } else {
            text.push_str(&format!(
                "\n  elapsed: {:.1} ms\n",
                report.elapsed.as_secs_f64() * 1000.0
            ));
        }
        write!(ctx.out, "{text}")?;
        for c in report.failures.iter().take(3) {
            writeln!(
                ctx.out,
                "counterexample (pairs {:?}):\n{}",
                c.pairs, c.hypergraph
            )?;
        }
    }
    Ok(if report.confirmed() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}

fn cmd_lemmas(ctx: &mut Ctx<'_>, lemma: &str, s_max: u32, q_max: u32) -> CmdResult {
    let lemmas: Vec<Lemma> = if lemma.eq_ignore_ascii_case("all") {
        Lemma::ALL.to_vec()
    } else {
        vec![lemma.parse::<Lemma>()?]
    };
    let mut reports: Vec<LemmaReport> = Vec::new();
    for l in lemmas {
        reports.push(exhaust_lemma(l, s_max, q_max)?);
    }
    let violations: u64 = reports.iter().map(LemmaReport::violations).sum();
    if ctx.json {
        let per_lemma: Vec<Value> = reports
            .iter()
            .map(|rep| {
                json!({
                    "lemma": rep.lemma.name(),
                    "enumerated": rep.enumerated,
                    "instances": rep.instances,
                    "violations": rep.violations(),
                    "vacuous": rep.is_vacuous(),
                    "cases": rep.cases,
                    "notes": rep.notes,
                    "counterexamples": rep.counterexamples.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let elapsed: Duration = reports.iter().map(|r| r.elapsed).sum();
        let report = envelope(
            "verify-lemmas",
            json!({ "lemma": lemma, "s_max": s_max, "q_max": q_max }),
            if violations == 0 {
                "verified"
            } else {
                "refuted"
            },
            Vec::new(),
            json!({
                "instances": reports.iter().map(|r| r.instances).sum::<u64>(),
                "violations": violations,
            }),
            None,
            ctx.elapsed_ms(elapsed),
            Some(("lemmas", json!(per_lemma))),
        );
        ctx.emit_json(report)?;
    } else {
        for rep in &reports {
            writeln!(ctx.out, "{rep}")?;
            for c in rep.counterexamples.iter().take(3) {
                writeln!(ctx.out, "  counterexample: {c}")?;
            }
        }
        writeln!(ctx.out, "violations: {violations}")?;
    }
    Ok(if violations == 0 {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}

fn cmd_thresholds(ctx: &mut Ctx<'_>, n: usize, r: usize, kind: ThresholdKind) -> CmdResult {
    let t = threshold(ThresholdQuery { n, r, kind })?;
    if ctx.json {
        let (min_degree, source) = match t {
            Threshold::Covered { min_degree, source } => (json!(min_degree), json!(source)),
            Threshold::Uncovered => (Value::Null, Value::Null),
        };
        let report = envelope(
            "thresholds",
            json!({ "n": n, "r": r, "kind": kind.to_string() }),
            if t.min_degree().is_some() {
                "covered"
            } else {
                "uncovered"
            },
            Vec::new(),
            json!({ "min_degree": min_degree }),
            None,
            Value::Null,
            Some(("source", source)),
        );
        ctx.emit_json(report)?;
    } else {
        match t {
            Threshold::Covered { min_degree, source } => writeln!(
                ctx.out,
                "{kind} n={n} r={r}: min degree >= {min_degree} ({source:?})"
            )?,
            Threshold::Uncovered => {
                writeln!(ctx.out, "{kind} n={n} r={r}: no degree condition applies")?
            }
        }
    }
    Ok(if t.min_degree().is_some() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}

fn cmd_one_extendable(ctx: &mut Ctx<'_>, file: &str) -> CmdResult {
    let (h, _) = ctx.read_hypergraph(file)?;
    let report = is_one_extendable(&h, ctx.search_config());
    if ctx.json {
        let failing: Vec<Value> = report
            .failing
            .iter()
            .map(|&(e, u, w)| json!({ "edge": e, "u": u, "w": w }))
            .collect();
        let counterexamples = if report.one_extendable {
            Vec::new()
        } else {
            vec![
                json!({ "hypergraph": write_hypergraph(&h, &[]), "pairs": [], "failing": failing }),
            ]
        };
        let out = envelope(
            "one-extendable",
            json!({ "n": h.n(), "r": h.r() }),
            if report.one_extendable {
                "verified"
            } else {
                "refuted"
            },
            counterexamples,
            json!({ "triples": report.triples_checked, "failing": report.failing.len() }),
            None,
            Value::Null,
            None,
        );
        ctx.emit_json(out)?;
    } else if report.one_extendable {
        writeln!(
            ctx.out,
            "1-extendable ({} edge/vertex triples)",
            report.triples_checked
        )?;
    } else {
        writeln!(
            ctx.out,
            "not 1-extendable: {} of {} triples fail",
            report.failing.len(),
            report.triples_checked
        )?;
        for (e, u, w) in report.failing.iter().take(10) {
            writeln!(
                ctx.out,
                "  no hamiltonian Berge cycle starting {u}, e{e}, {w}"
            )?;
        }
    }
    Ok(if report.one_extendable {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("berge")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["gen", "H9"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"], "").0, EXIT_USAGE);
        let (code, _, err) = run_str(&["check", "--pair", "1", "2"], "5 3\n1 2\n");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_str(&["--help"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify-sampled"));
    }

    #[test]
    fn h4_defaults_and_pair() {
        let (code, out, _) = run_str(&["gen", "H4"], "");
        assert_eq!(code, 0);
        assert!(out.contains("# special pair: 1 5"));
        assert!(out.contains("5 3\n1 2 5\n1 3 5\n1 4 5\n2 3 4\n"), "{out}");
        assert!(run_str(&["gen", "H4", "--n", "6"], "").0 == EXIT_USAGE);
    }

    #[test]
    fn thresholds_exit_codes() {
        assert_eq!(
            run_str(&["thresholds", "--n", "8", "--r", "3"], "").0,
            EXIT_OK
        );
        assert_eq!(
            run_str(&["thresholds", "--n", "5", "--r", "4"], "").0,
            EXIT_REFUTED
        );
        assert_eq!(
            run_str(&["thresholds", "--n", "5", "--r", "2"], "").0,
            EXIT_USAGE
        );
    }
}
