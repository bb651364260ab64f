use std::fs;
use std::io::Write;
use std::process::{Command, Stdio};

use berge_cli::{run, EXIT_OK, EXIT_REFUTED, EXIT_USAGE};
use berge_core::constructions::expected_min_degree;
use berge_core::io::parse_hypergraph;
use berge_core::{ConstructionSpec, Family};
use serde_json::Value;

fn berge(args: &[&str], input: &str) -> (i32, String, String) {
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

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let (code, out, err) = berge(&full, "");
    assert_eq!(code, EXIT_OK, "{err}");
    out
}

#[test]
fn h4_has_no_path_between_its_named_pair() {
    let h4 = gen(&["H4"]);
    let (code, out, _) = berge(&["check", "--pair", "1", "5"], &h4);
    assert_eq!(code, EXIT_REFUTED);
    assert!(out.contains("no hamiltonian Berge path"), "{out}");
    // without --pair the special pair comment is used
    assert_eq!(berge(&["check"], &h4).0, EXIT_REFUTED);
}

#[test]
fn punctured_tight_cycle_is_hamiltonian_connected() {
    let dir = tempfile::tempdir().unwrap();
    let hg = gen(&["C_PRIME", "--n", "6", "--r", "4", "--j", "6"]);
    let hg_path = dir.path().join("c.hg");
    fs::write(&hg_path, &hg).unwrap();
    let certs = dir.path().join("certs");
    let (code, out, _) = berge(
        &[
            "check",
            hg_path.to_str().unwrap(),
            "--all-pairs",
            "--out-dir",
            certs.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("path\n").count(), 15);
    let files: Vec<_> = fs::read_dir(&certs)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 15);
    for f in files {
        let (code, out, err) = berge(
            &["certify", hg_path.to_str().unwrap(), f.to_str().unwrap()],
            "",
        );
        assert_eq!(code, EXIT_OK, "{} {out} {err}", f.display());
        assert!(out.starts_with("valid hamiltonian Berge path"));
    }
}

#[test]
fn cycle_certificates_pass_certify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let hg_path = dir.path().join("t.hg");
    fs::write(&hg_path, gen(&["TIGHT_CYCLE", "--n", "7", "--r", "3"])).unwrap();
    let (code, cert, _) = berge(&["cycle", hg_path.to_str().unwrap()], "");
    assert_eq!(code, EXIT_OK);
    assert!(cert.starts_with("cycle\n"));
    let cert_path = dir.path().join("t.cert");
    fs::write(&cert_path, &cert).unwrap();
    assert_eq!(
        berge(
            &[
                "certify",
                hg_path.to_str().unwrap(),
                cert_path.to_str().unwrap()
            ],
            ""
        )
        .0,
        EXIT_OK
    );

    // reuse the first edge index in place of the last
    let mut lines: Vec<String> = cert.lines().map(String::from).collect();
    let mut edges: Vec<&str> = lines[2].split(' ').collect();
    let first = edges[0];
    *edges.last_mut().unwrap() = first;
    lines[2] = edges.join(" ");
    fs::write(&cert_path, lines.join("\n")).unwrap();
    let (code, out, _) = berge(
        &[
            "certify",
            hg_path.to_str().unwrap(),
            cert_path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code, EXIT_REFUTED);
    assert!(out.starts_with("invalid"), "{out}");
}

#[test]
fn certify_from_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let hg_path = dir.path().join("h4.hg");
    fs::write(&hg_path, gen(&["H4"])).unwrap();
    let (code, _, _) = berge(
        &["certify", hg_path.to_str().unwrap(), "-"],
        "path\n2 1 3\n1 2\n",
    );
    assert_eq!(code, EXIT_OK);
    let (code, _, err) = berge(
        &["certify", hg_path.to_str().unwrap(), "-"],
        "walk\n2 1 3\n1 2\n",
    );
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn generated_files_have_the_expected_min_degree() {
    let cases: &[(&str, Family, usize, usize)] = &[
        ("H1", Family::H1, 8, 3),
        ("H2", Family::H2, 8, 3),
        ("H3", Family::H3, 7, 4),
        ("H1P", Family::H1P, 8, 3),
        ("H2P", Family::H2P, 8, 3),
        ("H3P", Family::H3P, 7, 4),
        ("H4", Family::H4, 5, 3),
        ("TIGHT_CYCLE", Family::TightCycle, 9, 4),
        ("C_PRIME", Family::CPrime, 9, 4),
    ];
    for &(name, family, n, r) in cases {
        let text = gen(&[name, "--n", &n.to_string(), "--r", &r.to_string()]);
        let h = parse_hypergraph(&text).unwrap();
        let spec = if family == Family::H4 {
            ConstructionSpec::h4()
        } else {
            ConstructionSpec::new(family, n, r)
        };
        assert_eq!(
            h.min_degree(),
            expected_min_degree(&spec).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn h3p_second_deletion_is_configurable() {
    let text = gen(&["H3P", "--n", "7", "--r", "4", "--j", "3", "--j2", "5"]);
    assert!(text.contains("deleted tight-cycle edges: e3 e5"));
    assert_eq!(berge(&["gen", "C_PRIME", "--j2", "2"], "").0, EXIT_USAGE);
}

#[test]
fn json_reports_share_a_schema() {
    let hg = gen(&["H4"]);
    let reports = [
        berge(&["--json", "check", "--pair", "1", "5"], &hg),
        berge(&["--json", "cycle"], &hg),
        berge(&["--json", "verify-sharpness", "--family", "H4"], ""),
        berge(&["--json", "verify-exhaustive", "--n", "5", "--r", "3"], ""),
        berge(
            &[
                "--json",
                "verify-sampled",
                "--n",
                "6",
                "--r",
                "3",
                "--samples",
                "50",
                "--seed",
                "3",
            ],
            "",
        ),
        berge(
            &[
                "--json",
                "verify-lemmas",
                "--lemma",
                "ver_new",
                "--s-max",
                "6",
                "--q-max",
                "3",
            ],
            "",
        ),
        berge(
            &[
                "--json",
                "thresholds",
                "--n",
                "7",
                "--r",
                "4",
                "--kind",
                "hamiltonian-cycle",
            ],
            "",
        ),
        berge(&["--json", "one-extendable"], &hg),
    ];
    for (code, out, err) in reports {
        assert_ne!(code, EXIT_USAGE, "{err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        for key in [
            "schema_version",
            "task",
            "parameters",
            "verdict",
            "counterexamples",
            "counts",
            "seed",
            "elapsed_ms",
        ] {
            assert!(v.get(key).is_some(), "{key} missing from {out}");
        }
        assert_eq!(v["schema_version"], 1);
    }
    let (code, out, _) = berge(&["--json", "check", "--pair", "1", "5"], &hg);
    assert_eq!(code, EXIT_REFUTED);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "refuted");
    assert_eq!(
        v["counterexamples"][0]["pairs"][0],
        serde_json::json!([1, 5])
    );
    assert!(v["counterexamples"][0]["hypergraph"]
        .as_str()
        .unwrap()
        .starts_with("5 3\n"));
}

#[test]
fn deterministic_output_is_byte_identical() {
    let hg = gen(&["C_PRIME", "--n", "7", "--r", "3", "--j", "2"]);
    for args in [
        vec!["--json", "--deterministic", "check", "--all-pairs"],
        vec!["check", "--all-pairs", "--deterministic"],
        vec![
            "--json",
            "--deterministic",
            "verify-sampled",
            "--n",
            "6",
            "--r",
            "3",
            "--samples",
            "200",
            "--seed",
            "11",
        ],
        vec![
            "--deterministic",
            "verify-exhaustive",
            "--n",
            "5",
            "--r",
            "3",
            "--kind",
            "hamiltonian-cycle",
        ],
    ] {
        let a = berge(&args, &hg);
        let b = berge(&args, &hg);
        assert_eq!(a, b, "{args:?}");
    }
    let (_, out, _) = berge(&["--json", "--deterministic", "check", "--all-pairs"], &hg);
    assert!(out.contains("\"elapsed_ms\": null"));
}

#[test]
fn verification_exit_codes() {
    assert_eq!(
        berge(
            &[
                "verify-sharpness",
                "--family",
                "H2P",
                "--n",
                "8",
                "--r",
                "3"
            ],
            ""
        )
        .0,
        EXIT_OK
    );
    assert_eq!(
        berge(&["verify-sharpness", "--family", "C_PRIME"], "").0,
        EXIT_USAGE
    );
    assert_eq!(
        berge(&["verify-exhaustive", "--n", "6", "--r", "3"], "").0,
        EXIT_USAGE
    );
    assert_eq!(
        berge(&["verify-exhaustive", "--n", "6", "--r", "5"], "").0,
        EXIT_OK
    );
    assert_eq!(
        berge(
            &[
                "verify-lemmas",
                "--lemma",
                "consecpath2",
                "--s-max",
                "8",
                "--q-max",
                "2"
            ],
            ""
        )
        .0,
        EXIT_OK
    );
    assert_eq!(
        berge(&["verify-lemmas", "--lemma", "nope"], "").0,
        EXIT_USAGE
    );
    let h3 = gen(&["H3", "--n", "7", "--r", "4"]);
    let (code, out, _) = berge(&["one-extendable"], &h3);
    assert_eq!(code, EXIT_REFUTED);
    assert!(out.starts_with("not 1-extendable"));
    assert_eq!(
        berge(
            &["one-extendable"],
            &gen(&["TIGHT_CYCLE", "--n", "6", "--r", "4"])
        )
        .0,
        EXIT_OK
    );
}

#[test]
fn verc2_reports_its_q1_counterexamples() {
    // conclusion (ii) and the independent-B bound both fail at q = 1
    let (code, out, _) = berge(
        &[
            "verify-lemmas",
            "--lemma",
            "verc2",
            "--s-max",
            "5",
            "--q-max",
            "1",
        ],
        "",
    );
    assert_eq!(code, EXIT_REFUTED);
    assert!(
        out.contains("counterexample: s=3 q=1 A=[1, 3] B=[2]"),
        "{out}"
    );
    let (code, _, _) = berge(
        &[
            "verify-lemmas",
            "--lemma",
            "verc2",
            "--s-max",
            "10",
            "--q-max",
            "4",
        ],
        "",
    );
    assert_eq!(code, EXIT_REFUTED);
}

#[test]
fn binary_pipeline() {
    let exe = env!("CARGO_BIN_EXE_berge");
    let generated = Command::new(exe).args(["gen", "H4"]).output().unwrap();
    assert!(generated.status.success());
    let mut check = Command::new(exe)
        .args(["check", "--pair", "1", "5"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    check
        .stdin
        .take()
        .unwrap()
        .write_all(&generated.stdout)
        .unwrap();
    let result = check.wait_with_output().unwrap();
    assert_eq!(result.status.code(), Some(1));
    assert!(
        String::from_utf8_lossy(&result.stdout).contains("no hamiltonian Berge path from 1 to 5")
    );
    let usage = Command::new(exe)
        .arg("check")
        .arg("/nonexistent/file")
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
