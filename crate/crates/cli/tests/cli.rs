//! End-to-end tests of the binary: documented outputs, output formats,
//! exit codes and error reporting.

use std::process::{Command, Output};

use sigma_lfsr::{BlockCompanion, PrimeField};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-lfsr"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, got {:?}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

fn f2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

#[test]
fn primpoly_list_prints_documented_polynomials() {
    assert_eq!(stdout_of(&["primpoly", "list", "--q", "2", "--deg", "4"]), "x^4+x+1\nx^4+x^3+1\n");
    // Degree 3 over F_3: phi(26)/3 = 4 primitive polynomials.
    let lines = stdout_of(&["primpoly", "list", "--q", "3", "--deg", "3"]);
    assert_eq!(lines.lines().count(), 4);
}

#[test]
fn primpoly_order_prints_the_multiplicative_order() {
    assert_eq!(stdout_of(&["primpoly", "order", "--q", "2", "--f", "x^4+x^3+x^2+x+1"]), "5\n");
    // Coefficient form parses to the same polynomial.
    assert_eq!(stdout_of(&["primpoly", "order", "--q", "2", "--f", "1,1,1,1,1"]), "5\n");
    assert_eq!(stdout_of(&["primpoly", "order", "--q", "2", "--f", "x^4+x+1"]), "15\n");
}

#[test]
fn primpoly_test_decides_primitivity() {
    assert_eq!(stdout_of(&["primpoly", "test", "--q", "2", "--f", "x^4+x+1"]), "true\n");
    assert_eq!(stdout_of(&["primpoly", "test", "--q", "2", "--f", "x^4+x^3+x^2+x+1"]), "false\n");
}

#[test]
fn lfsr_run_prints_the_sequence_seed_first() {
    assert_eq!(stdout_of(&["lfsr", "run", "--taps", "1,1", "--init", "0,1", "--count", "6"]), "0,1,1,0,1,1\n");
    // The documented degree-4 register has period 15.
    let line = stdout_of(&["lfsr", "run", "--taps", "1,1,0,0", "--init", "0,0,0,1", "--count", "30"]);
    let vals: Vec<&str> = line.trim().split(',').collect();
    assert_eq!(vals.len(), 30);
    assert_eq!(vals[..15], vals[15..]);
}

#[test]
fn sigma_run_word_hex_and_raw_modes_agree() {
    let base = [
        "sigma", "run", "--field", "q=2,m=2,g=x^2+x+1", "--blocks", "1,1;0,1|0,0;1,0", "--init",
        "1,0|0,0", "--count", "6",
    ];
    assert_eq!(stdout_of(&base), "1,0\n0,0\n1,1\n1,0\n1,0\n1,1\n");

    let mut hex = base.to_vec();
    hex.push("--hex");
    assert_eq!(stdout_of(&hex), "1\n0\n3\n1\n1\n3\n");

    let mut raw = base.to_vec();
    raw.push("--raw");
    let out = run(&raw);
    assert!(out.status.success());
    let expected: Vec<u8> =
        [1u64, 0, 3, 1, 1, 3].iter().flat_map(|w| w.to_le_bytes()).collect();
    assert_eq!(out.stdout, expected);
}

#[test]
fn sigma_test_reports_delta_and_primitivity() {
    assert_eq!(
        stdout_of(&["sigma", "test", "--field", "q=2,m=2,g=x^2+x+1", "--blocks", "1,1;0,1|0,0;1,0"]),
        "delta: x^4+x+1\nprimitive: true\n"
    );
    // Singular C_0 can never reach maximal order.
    assert_eq!(
        stdout_of(&["sigma", "test", "--field", "q=2,m=2", "--blocks", "0,0;0,0|1,0;0,1"]),
        "delta: x^4+x^2\nprimitive: false\n"
    );
}

#[test]
fn census_run_emits_documented_json() {
    let text = stdout_of(&["census", "run", "--q", "2", "--m", "2", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["total"], 16);
    assert_eq!(v["upsilon"], 16);
    assert_eq!(v["conjecture1"], true);
    assert_eq!(v["conjecture2"], true);
    assert_eq!(v["surjective"], true);
    let fibers = v["fibers"].as_array().unwrap();
    assert_eq!(fibers.len(), 2);
    assert_eq!(fibers[0]["poly"], "x^4+x+1");
    assert_eq!(fibers[0]["size"], 8);
    assert!(fibers[0].get("members").is_none());
    // --members includes the serialized tuples.
    let text = stdout_of(&["census", "run", "--q", "2", "--m", "2", "--n", "2", "--members"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["fibers"][0]["members"].as_array().unwrap().len(), 8);
}

#[test]
fn census_run_output_is_jobs_invariant() {
    let a = run(&["census", "run", "--q", "2", "--m", "2", "--n", "3", "--members", "--jobs", "1"]);
    let b = run(&["census", "run", "--q", "2", "--m", "2", "--n", "3", "--members", "--jobs", "8"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn census_run_csv_and_text_formats() {
    let csv = stdout_of(&["census", "run", "--q", "2", "--m", "2", "--n", "2", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "q,m,n,total,upsilon,fibers,conjecture1,conjecture2,surjective");
    assert_eq!(lines.next().unwrap(), "2,2,2,16,16,2,true,true,true");
    let text = stdout_of(&["census", "run", "--q", "2", "--m", "2", "--n", "2", "--format", "text"]);
    assert!(text.contains("total: 16"));
    assert!(text.contains("x^4+x^3+1: 8"));
}

#[test]
fn census_verify_csv_has_one_row_per_cell() {
    let csv = stdout_of(&["census", "verify", "--grid", "q=2,m<=2,n<=3"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 7, "header plus six cells");
    assert!(lines[0].starts_with("q,m,n,skipped"));
    for row in &lines[1..] {
        assert!(row.ends_with(",true"), "cell failed: {row}");
    }
    // Pinned grid: exactly one row.
    let csv = stdout_of(&["census", "verify", "--grid", "q=3,m=2,n=1"]);
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.lines().nth(1).unwrap().starts_with("3,2,1,false,12,12,"));
}

#[test]
fn census_verify_json_format() {
    let text = stdout_of(&["census", "verify", "--grid", "q=2,m<=2,n<=2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), 4);
    assert!(cells.iter().all(|c| c["passed"] == true));
}

#[test]
fn construct_emits_a_tuple_with_the_target_delta() {
    let line = stdout_of(&["construct", "--f", "x^4+x+1", "--m", "2", "--n", "2"]);
    let bc = BlockCompanion::parse(f2(), line.trim()).unwrap();
    assert!(bc.is_invertible());
    assert_eq!(bc.delta_poly().unwrap().to_string(), "x^4+x+1");
    // Feed the tuple back through `sigma test`.
    let piped: Vec<String> = bc.blocks().iter().map(|b| b.to_text()).collect();
    let report =
        stdout_of(&["sigma", "test", "--field", "q=2,m=2", "--blocks", &piped.join("|")]);
    assert_eq!(report, "delta: x^4+x+1\nprimitive: true\n");
}

#[test]
fn splitting_reports_the_subspace_count() {
    let text = stdout_of(&["splitting", "--f", "x^4+x+1", "--m", "2", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["subspace_count"], 20);
    assert_eq!(v["alpha_minpoly"], "x^4+x+1");
    assert_eq!(v["q"], 2);
}

#[test]
fn parse_errors_echo_the_offending_token_and_exit_1() {
    let out = run(&["primpoly", "order", "--q", "2", "--f", "x^2+bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));

    let out = run(&["sigma", "test", "--field", "q=2,m=2", "--blocks", "z,1;0,1|0,0;1,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`z`"));

    let out = run(&["census", "verify", "--grid", "q=2,m<=2,k<=3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k<=3"));

    let out = run(&["lfsr", "run", "--taps", "1,x", "--init", "0,1", "--count", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`x`"));
}

#[test]
fn infeasible_parameters_exit_2() {
    let out = run(&["census", "run", "--q", "2", "--m", "4", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("feasible"));

    let out = run(&["splitting", "--f", "x^4+x+1", "--m", "2", "--n", "2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(1), "wrong-field input is a usage error");
}

#[test]
fn usage_errors_exit_1_and_help_exits_0() {
    let out = run(&["nosuchcommand"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["census", "run", "--q", "2", "--m", "2", "--n", "2", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["census", "--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn every_subcommand_help_names_its_construct() {
    for (args, needle) in [
        (vec!["primpoly", "--help"], "Primitive polynomials"),
        (vec!["primpoly", "order", "--help"], "x^e - 1"),
        (vec!["lfsr", "--help"], "recurrence"),
        (vec!["sigma", "--help"], "matrix taps"),
        (vec!["sigma", "run", "--help"], "keystream"),
        (vec!["sigma", "test", "--help"], "Delta polynomial"),
        (vec!["bench", "--help"], "keystream"),
        (vec!["census", "--help"], "Singer cycles"),
        (vec!["census", "run", "--help"], "block companion"),
        (vec!["census", "verify", "--help"], "splitting-subspace"),
        (vec!["construct", "--help"], "Delta polynomial"),
        (vec!["splitting", "--help"], "alpha-splitting"),
    ] {
        let text = stdout_of(&args);
        assert!(text.contains(needle), "{args:?} help misses {needle:?}:\n{text}");
    }
}

#[test]
fn seed_flag_leaves_documented_outputs_unchanged() {
    let a = stdout_of(&["primpoly", "order", "--q", "2", "--f", "x^6+x^2+1", "--seed", "0"]);
    let b = stdout_of(&["primpoly", "order", "--q", "2", "--f", "x^6+x^2+1", "--seed", "12345"]);
    assert_eq!(a, b);
    let a = stdout_of(&["census", "run", "--q", "2", "--m", "2", "--n", "2", "--seed", "7"]);
    let b = stdout_of(&["census", "run", "--q", "2", "--m", "2", "--n", "2"]);
    assert_eq!(a, b);
}

#[test]
fn bench_keystream_reports_a_rate_and_checksum() {
    let text = stdout_of(&["bench", "keystream", "--m", "32", "--n", "2", "--words", "65536", "--runs", "2"]);
    let mut rate = None;
    let mut checksum = None;
    for line in text.lines() {
        if let Some(v) = line.strip_prefix("median_words_per_sec: ") {
            rate = Some(v.parse::<f64>().unwrap());
        }
        if let Some(v) = line.strip_prefix("checksum: 0x") {
            checksum = Some(u64::from_str_radix(v, 16).unwrap());
        }
    }
    assert!(rate.unwrap() > 0.0);
    // Deterministic register: the checksum is reproducible.
    let again = stdout_of(&["bench", "keystream", "--m", "32", "--n", "2", "--words", "65536", "--runs", "2"]);
    let line = again.lines().find(|l| l.starts_with("checksum:")).unwrap();
    assert_eq!(u64::from_str_radix(line.trim_start_matches("checksum: 0x"), 16).unwrap(), checksum.unwrap());
}
