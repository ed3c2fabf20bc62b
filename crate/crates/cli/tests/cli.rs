//! End-to-end tests of the `muzeta` binary: the documented examples, the
//! JSON envelope, determinism, the round-trip property, and the exit-code
//! contract (0 success / 2 hypothesis failure / 1 usage error).

use std::io::Write as _;
use std::process::{Command, Stdio};

use serde_json::Value;

const SEXTIC: &str = "7*z3^6+5*z1*z3^4+12*z2*z3^4-8*z1^2*z3^2+6*z2^2*z3^2+4*z1^3+z2^3";

/// Run the binary; returns (exit code, stdout, stderr).
fn muzeta(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_muzeta"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(stdin.unwrap_or("").as_bytes())
        .expect("stdin accepts input");
    let out = child.wait_with_output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    )
}

fn json_of(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("stdout is a single JSON object")
}

#[test]
fn fermat_cubic_zeta_example() {
    let (code, out, _) = muzeta(&["zeta-varchenko", "-n", "3", "z1^3+z2^3+z3^3"], None);
    assert_eq!(code, 0);
    let doc = json_of(&out);
    assert_eq!(doc["command"], "zeta-varchenko");
    assert_eq!(doc["input"]["f"], "z1^3+z2^3+z3^3");
    assert_eq!(doc["result"]["zeta"]["factors"], serde_json::json!([[3, -3]]));
    assert_eq!(doc["result"]["zeta"]["display"], "(1-t^3)^-3");
    assert_eq!(doc["result"]["multiplicity"], 3);
    assert!(doc["citations"]
        .as_array()
        .unwrap()
        .contains(&Value::from("boundary-zeta-formula")));
}

#[test]
fn shift_example_reads_stdin() {
    let (code, out, _) = muzeta(
        &["shift", "-n", "3", "--w", "2,2,1", "--k", "2", "--m", "1"],
        Some(SEXTIC),
    );
    assert_eq!(code, 0);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["mu"], 24);
    assert_eq!(doc["result"]["mu_tot"], 2);
    // The evidence trail is part of the output contract.
    let hyp = doc["result"]["evidence"]["hypotheses"].as_object().unwrap();
    assert!(hyp.values().all(|v| v == &Value::Bool(true)));
    assert_eq!(
        doc["result"]["evidence"]["zeta"]["zeta_prime"],
        serde_json::json!([[3, 1], [6, -2]])
    );
}

#[test]
fn milnor_example_certificate() {
    let (code, out, _) = muzeta(&["milnor", "-n", "2", "z1^2+z2^3"], None);
    assert_eq!(code, 0);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["mu"], 2);
    assert_eq!(doc["result"]["certificate"], "safe");
}

#[test]
fn zeta_oka_matches_published_forms() {
    let (code, out, _) = muzeta(
        &["zeta-oka", "-n", "3", "--w", "2,2,1", "--k", "2", "--m", "1", "-"],
        Some(SEXTIC),
    );
    assert_eq!(code, 0);
    let doc = json_of(&out);
    let r = &doc["result"];
    assert_eq!(r["zeta_fs"]["display"], "(1-t^3)(1-t^6)^-4");
    assert_eq!(r["zeta_prime"]["display"], "(1-t^3)(1-t^6)^-2");
    assert_eq!(r["zeta"]["display"], "(1-t^3)(1-t^6)^-2(1-t^8)(1-t^24)^-1");
    assert_eq!(r["zeta"]["degree"], -25);
    assert_eq!(r["multiplicity"], 3);
    assert_eq!(r["mu"], 24);
}

#[test]
fn deterministic_bytes_for_fixed_seed() {
    let args = [
        "mu-star", "-n", "3", "--seed", "17", "--trials", "3", "z1^2+z2^3+z3^5",
    ];
    let (c1, out1, _) = muzeta(&args, None);
    let (c2, out2, _) = muzeta(&args, None);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2, "same seed must give identical bytes");
    let doc = json_of(&out1);
    assert_eq!(doc["result"]["mu_star"], serde_json::json!([8, 2, 1]));
}

#[test]
fn output_round_trips_through_its_input_block() {
    let (code, out, _) = muzeta(&["zeta-varchenko", "-n", "2", "z2^3 + z1^2"], None);
    assert_eq!(code, 0);
    let doc = json_of(&out);
    // The embedded input is canonical...
    let n = doc["input"]["n"].as_u64().unwrap().to_string();
    let f = doc["input"]["f"].as_str().unwrap();
    assert_eq!(f, "z1^2+z2^3");
    // ...and re-running on it reproduces the bytes exactly.
    let (code2, out2, _) = muzeta(&["zeta-varchenko", "-n", &n, f], None);
    assert_eq!(code2, 0);
    assert_eq!(out, out2);
}

#[test]
fn hypothesis_failures_exit_two_with_named_error() {
    // The sextic is Newton-degenerate, so unverified boundary zeta refuses.
    let (code, out, _) = muzeta(&["zeta-varchenko", "-n", "3", SEXTIC], None);
    assert_eq!(code, 2);
    let doc = json_of(&out);
    assert_eq!(doc["error"]["kind"], "hypothesis-failure");
    assert_eq!(doc["error"]["hypothesis"], "newton-nondegenerate");
    // ...and --assume-nd turns the same run into the combinatorial part.
    let (code, out, _) = muzeta(&["zeta-varchenko", "--assume-nd", "-n", "3", SEXTIC], None);
    assert_eq!(code, 0);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["zeta"]["display"], "(1-t^3)(1-t^6)^-4");

    // A non-reduced curve fails the comparison report's first hypothesis.
    let (code, out, _) = muzeta(
        &[
            "zariski-report",
            "-n",
            "3",
            "--k",
            "1",
            "--m",
            "1",
            "z1*z2^2",
            "z1^3+z2^3+z3^3",
        ],
        None,
    );
    assert_eq!(code, 2);
    assert_eq!(json_of(&out)["error"]["hypothesis"], "reduced");
}

#[test]
fn usage_errors_exit_one() {
    // Unknown subcommand, rejected by the parser.
    let (code, _, err) = muzeta(&["frobnicate"], None);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
    // Malformed polynomial, rejected by the library.
    let (code, out, _) = muzeta(&["milnor", "-n", "2", "z1^2+"], None);
    assert_eq!(code, 1);
    let doc = json_of(&out);
    assert_eq!(doc["error"]["kind"], "invalid-input");
    assert_eq!(doc["error"]["hypothesis"], Value::Null);
    // in-w needs exactly one membership target.
    let (code, _, _) = muzeta(&["in-w", "-n", "2", "--m", "2", "z1^2+z2^3"], None);
    assert_eq!(code, 1);
    // --help is not an error.
    let (code, _, _) = muzeta(&["--help"], None);
    assert_eq!(code, 0);
}

#[test]
fn output_flag_writes_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = muzeta(
        &[
            "newton-number",
            "-n",
            "2",
            "z1^2+z2^3",
            "--output",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code, 0);
    assert!(out.is_empty(), "report goes to the file, not stdout");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["result"]["newton_number"], 2);
}

#[test]
fn local_data_file_drives_the_admissibility_check() {
    // In the default chart for w = (2,2,1) the divisor curve's singular
    // point sits at (1/2, -2), where the identity chart is admissible.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("changes.json");
    std::fs::write(
        &path,
        r#"[{"point": ["1/2", "-2"], "images": ["z1", "z2"]}]"#,
    )
    .unwrap();
    let (code, out, _) = muzeta(
        &[
            "shift", "-n", "3", "--w", "2,2,1", "--k", "2", "--m", "2",
            "--local-data", path.to_str().unwrap(),
        ],
        Some(SEXTIC),
    );
    assert_eq!(code, 0);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["mu"], 28);
    assert_eq!(doc["input"]["local_data"][0]["point"][0], "1/2");

    // A wrong point is a data mismatch: named, exit 2.
    std::fs::write(
        &path,
        r#"[{"point": ["1/3", "-2"], "images": ["z1", "z2"]}]"#,
    )
    .unwrap();
    let (code, out, _) = muzeta(
        &[
            "shift", "-n", "3", "--w", "2,2,1", "--k", "2", "--m", "2",
            "--local-data", path.to_str().unwrap(),
        ],
        Some(SEXTIC),
    );
    assert_eq!(code, 2);
    assert_eq!(
        json_of(&out)["error"]["hypothesis"],
        "pre-nondegeneracy-local-data"
    );
}

#[test]
fn fan_commands_share_the_fan_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fan.json");
    std::fs::write(
        &path,
        r#"{"vertices": [[2,2,1],[1,1,1],[1,0,0],[0,1,0],[0,0,1]],
            "maximal_cones": [[1,2,3],[1,2,4],[1,3,4],[2,3,5],[2,4,5]]}"#,
    )
    .unwrap();
    let fan = path.to_str().unwrap();

    let (code, out, _) = muzeta(&["fan-validate", "-n", "3", "--fan", fan], Some(SEXTIC));
    assert_eq!(code, 0);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["ok"], true);
    for check in ["regular", "admissible", "small", "covering"] {
        assert_eq!(doc["result"][check], true, "{check}");
    }

    let (code, out, _) = muzeta(
        &["chart-pullback", "-n", "3", "--fan", fan, "--cone", "1"],
        Some(SEXTIC),
    );
    assert_eq!(code, 0);
    let doc = json_of(&out);
    assert_eq!(
        doc["result"]["generators"],
        serde_json::json!([[2, 2, 1], [1, 1, 1], [1, 0, 0]])
    );
    assert_eq!(doc["result"]["multiplicities"], serde_json::json!([6, 3, 0]));

    // The same chart given inline agrees.
    let (code2, out2, _) = muzeta(
        &["chart-pullback", "-n", "3", "--chart", "2,2,1;1,1,1;1,0,0"],
        Some(SEXTIC),
    );
    assert_eq!(code2, 0);
    assert_eq!(json_of(&out2)["result"], doc["result"]);
}

#[test]
fn membership_and_profile_commands() {
    let (code, out, _) = muzeta(&["in-w", "-n", "2", "--m", "3", "--mu", "2", "z1^2+z2^3"], None);
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["result"]["member"], true);

    // Truncation 6 is past stabilization in every section dimension; at
    // truncation 2 the full-germ colength has not yet reached 8.
    for (m, member) in [("6", true), ("2", false)] {
        let (code, out, _) = muzeta(
            &[
                "in-w", "-n", "3", "--m", m, "--mu-star", "8,2,1", "--seed", "3",
                "z1^2+z2^3+z3^5",
            ],
            None,
        );
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["result"]["member"], member, "m = {m}");
    }

    let (code, out, _) = muzeta(&["nd", "-n", "2", "z1^2+z2^3"], None);
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["result"]["verdict"], "nondegenerate");

    let (code, out, _) = muzeta(&["newton", "-n", "2", "z1^2+z2^3"], None);
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["result"]["convenient"], true);

    let (code, out, _) = muzeta(&["dual", "-n", "2", "z1^2+z2^3"], None);
    assert_eq!(code, 0);
    let doc = json_of(&out);
    assert!(doc["result"]["vertices"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([3, 2])));
}
