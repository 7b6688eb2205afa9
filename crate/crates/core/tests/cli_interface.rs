//! End-to-end runs of the installed binary: argument parsing, JSON/TSV
//! output shapes, exit codes, and byte determinism across thread counts.

use serde_json::Value;
use std::path::Path;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    run_in(args, None)
}

fn run_in(args: &[&str], dir: Option<&Path>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_desargues"));
    cmd.args(args);
    if let Some(dir) = dir {
        cmd.current_dir(dir);
    }
    let out = cmd.output().expect("binary should spawn");
    (
        out.status.code().expect("no exit code"),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
    )
}

fn json(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("stdout is a JSON document")
}

#[test]
fn count_single_quantity_json() {
    let (code, stdout, _) =
        run(&["count", "--quantity", "TOTAL_PLANAR", "--q", "3", "--no-timing"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["quantity"], "TOTAL_PLANAR");
    assert_eq!(doc["q"], 3);
    assert_eq!(doc["closed_form"], "234");
    assert_eq!(doc["brute_force"], Value::Null);
    assert_eq!(doc["agree"], Value::Null);
    assert!(doc.get("elapsed_ms").is_none());
}

#[test]
fn count_all_quantities_is_an_array_of_seven() {
    let (code, stdout, _) = run(&["count", "--q", "4", "--no-timing"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    let reports = doc.as_array().expect("array of reports");
    assert_eq!(reports.len(), 7);
    assert!(reports.iter().all(|r| r["q"] == 4));
}

#[test]
fn count_q_max_tsv_has_header_and_prime_powers_only() {
    let (code, stdout, _) = run(&[
        "count",
        "--quantity",
        "THETA_PLANAR",
        "--q-max",
        "9",
        "--format",
        "tsv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "quantity\tq\tclosed_form");
    // prime powers up to 9: 2 3 4 5 7 8 9
    assert_eq!(lines.len(), 1 + 7);
    assert_eq!(lines[2], "THETA_PLANAR\t3\t360");
    assert!(!stdout.contains("\t6\t"));
}

#[test]
fn oracle_agreement_exits_zero() {
    let (code, stdout, _) =
        run(&["oracle", "--quantity", "TOTAL_SPATIAL", "--q", "2", "--no-timing"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["closed_form"], "168");
    assert_eq!(doc["brute_force"], "168");
    assert_eq!(doc["agree"], true);
}

#[test]
fn oracle_disagreement_exits_one() {
    let (code, stdout, _) = run(&[
        "oracle",
        "--quantity",
        "NAIVE_PLANAR_THROUGH_POINT",
        "--q",
        "3",
        "--no-timing",
    ]);
    assert_eq!(code, 1);
    let doc = json(&stdout);
    assert_eq!(doc["closed_form"], "144");
    assert_eq!(doc["brute_force"], "180");
    assert_eq!(doc["agree"], false);
}

#[test]
fn usage_errors_exit_two_with_empty_stdout() {
    for args in [
        &["count", "--quantity", "NO_SUCH_QUANTITY", "--q", "3"] as &[&str],
        &["count", "--quantity", "TOTAL_PLANAR"],
        &["count", "--quantity", "TOTAL_PLANAR", "--q", "3", "--q-max", "5"],
        &["count", "--quantity", "TOTAL_PLANAR", "--q", "6"],
        &["oracle", "--quantity", "TOTAL_PLANAR", "--q", "7"], // over scale limits
        &["verify", "--suite", "no-such-suite", "--q", "3"],
    ] {
        let (code, stdout, stderr) = run(args);
        assert_eq!(code, 2, "args {args:?} should be a usage/scale error");
        assert!(stdout.is_empty(), "args {args:?} wrote to stdout: {stdout}");
        assert!(!stderr.is_empty(), "args {args:?} left stderr empty");
    }
}

#[test]
fn clap_rejects_unknown_flags_and_prints_help() {
    let (code, _, stderr) = run(&["count", "--nonsense"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--nonsense"));
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["count", "oracle", "verify", "section", "lift", "inspect", "twoblock"] {
        assert!(stdout.contains(sub), "help must list the {sub} subcommand");
    }
}

#[test]
fn verify_suite_passes_and_reports_cases() {
    let (code, stdout, _) = run(&[
        "verify",
        "--suite",
        "desargues-theorem",
        "--q",
        "5",
        "--samples",
        "250",
        "--no-timing",
    ]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["suite"], "desargues-theorem");
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["cases"], 250);
    assert!(doc.get("counterexample").is_none());
}

#[test]
fn verify_identities_covers_prime_powers() {
    let (code, stdout, _) = run(&["verify", "--suite", "identities", "--q", "64", "--no-timing"]);
    assert_eq!(code, 0);
    assert_eq!(json(&stdout)["cases"], 270);
}

#[test]
fn output_is_byte_deterministic_across_jobs() {
    let args = |jobs: &'static str| {
        vec![
            "--jobs", jobs, "--no-timing", "oracle", "--quantity", "TOTAL_PLANAR", "--q", "3",
        ]
    };
    let (c1, first, _) = run(&args("1"));
    let (c2, second, _) = run(&args("3"));
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(first, second);

    let tb = |jobs: &'static str| vec!["--jobs", jobs, "--no-timing", "twoblock"];
    let (c1, first, _) = run(&tb("1"));
    let (c2, second, _) = run(&tb("4"));
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(first, second);
}

#[test]
fn twoblock_reports_the_classification() {
    let (code, stdout, _) = run(&["twoblock", "--no-timing"]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["total_subsets"], 32768);
    assert_eq!(doc["hyperplane"], 15);
    assert_eq!(doc["spatial_desargues"], 168);
    assert_eq!(doc["other"], 0);
    assert_eq!(doc["other_examples"], Value::Array(vec![]));
}

#[test]
fn output_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["--no-timing", "count", "--quantity", "P5_CHOICES", "--q", "5"];
    let (code, stdout, _) = run(&args);
    assert_eq!(code, 0);
    let mut with_output: Vec<&str> = vec!["--output", path.to_str().unwrap()];
    with_output.extend_from_slice(&args);
    let (code, piped, _) = run(&with_output);
    assert_eq!(code, 0);
    assert!(piped.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn section_inspect_lift_pipeline_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("config.json");

    let (code, section_out, _) = run(&[
        "--no-timing",
        "--output",
        config_path.to_str().unwrap(),
        "section",
        "--q",
        "3",
        "--compressor",
        "0,0,0,1",
        "1,0,0,1",
        "0,1,0,1",
        "0,0,1,1",
        "1,1,1,1",
        "--hyperplane",
        "1,0,0,0;0,1,0,0;0,0,1,0",
    ]);
    assert_eq!(code, 0);
    assert!(section_out.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&config_path).unwrap()).unwrap();
    assert_eq!(doc["q"], 3);
    assert_eq!(doc["points"].as_object().unwrap().len(), 10);
    assert_eq!(doc["blocks"].as_array().unwrap().len(), 10);
    assert_eq!(doc["blocklines"].as_object().unwrap().len(), 10);

    let (code, inspect_out, _) =
        run(&["--no-timing", "inspect", "--config", config_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let inspected = json(&inspect_out);
    assert_eq!(inspected["q"], 3);
    assert_eq!(inspected["n"], 2);
    assert_eq!(inspected["spatial"], false);
    assert!(inspected["max_blockline_points"].as_u64().unwrap() <= 4);

    let (code, lift_out, _) = run(&[
        "--no-timing",
        "lift",
        "--config",
        config_path.to_str().unwrap(),
        "--vertex",
        "12",
    ]);
    assert_eq!(code, 0);
    let lifts = json(&lift_out);
    let pair = lifts.as_array().expect("a lift emits two compressors");
    assert_eq!(pair.len(), 2);
    for comp in pair {
        assert_eq!(comp["q"], 3);
        assert_eq!(comp["n"], 3, "the lift lands in PG(3,q)");
        let points = comp["points"].as_array().unwrap();
        assert_eq!(points.len(), 5);
        assert_eq!(points[0].as_str().unwrap().split(',').count(), 4);
    }
    assert_ne!(pair[0], pair[1]);

    let (code, stdout, stderr) = run(&[
        "lift",
        "--config",
        config_path.to_str().unwrap(),
        "--vertex",
        "99",
    ]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(!stderr.is_empty());
}

#[test]
fn field_poly_selects_the_modulus() {
    let (code, stdout, _) = run(&[
        "--field-poly",
        "3^2/1,1,2",
        "--no-timing",
        "oracle",
        "--quantity",
        "P5_CHOICES",
        "--q",
        "9",
    ]);
    assert_eq!(code, 0);
    let doc = json(&stdout);
    assert_eq!(doc["closed_form"], "455");
    assert_eq!(doc["agree"], true);

    // modulus order and --q must match
    let (code, stdout, _) = run(&[
        "--field-poly",
        "3^2/1,1,2",
        "oracle",
        "--quantity",
        "P5_CHOICES",
        "--q",
        "3",
    ]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
}

#[test]
fn limits_file_tightens_the_envelope() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("limits.conf");
    std::fs::write(&path, "# keep the planar oracle tiny\nplanar_through_max_q = 2\n").unwrap();
    let (code, stdout, stderr) = run(&[
        "--limits",
        path.to_str().unwrap(),
        "oracle",
        "--quantity",
        "NAIVE_PLANAR_THROUGH_POINT",
        "--q",
        "3",
    ]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("scale"), "stderr should mention the scale limit: {stderr}");
}

#[test]
fn seed_changes_sampling_but_not_verdict() {
    let base = |seed: &'static str| {
        vec![
            "--seed", seed, "--no-timing", "verify", "--suite", "desargues-theorem", "--q", "4",
            "--samples", "50",
        ]
    };
    let (c1, first, _) = run(&base("1"));
    let (c2, second, _) = run(&base("2"));
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(json(&first)["pass"], true);
    assert_eq!(json(&second)["pass"], true);
}
