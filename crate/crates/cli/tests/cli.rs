use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grassmann-bordism"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn nu_and_bounds_golden() {
    let o = run(&["nu", "12"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2\n"));
    let o = run(&["bounds", "--field", "R", "--k", "1", "--n", "3"]);
    assert_eq!(stdout(&o), "bounds: true (nu(4)=2 > nu(1)=0)\n");
    assert_eq!(code(&o), 0);
    let o = run(&["bounds", "--field", "C", "--k", "1", "--n", "2"]);
    assert_eq!(stdout(&o), "bounds: false (nu(3)=0 <= nu(1)=0)\n");
}

#[test]
fn enumerate_listings() {
    let o = run(&["enumerate", "--dim", "2", "--real-only", "--format", "tsv"]);
    assert_eq!(
        stdout(&o),
        "field\tk\tn\tlabel\tblock\nR\t1\t2\tG_1(R^3)\tO\n"
    );
    let o = run(&["enumerate", "--dim", "8"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = run(&["enumerate", "--dim", "3", "--format", "tsv"]);
    assert_eq!(stdout(&o).lines().count(), 1);
    assert_eq!(code(&o), 0);
    let o = run(&[
        "enumerate",
        "--dim",
        "8",
        "--fields",
        "C,H",
        "--format",
        "tsv",
    ]);
    assert_eq!(
        stdout(&o),
        "field\tk\tn\tlabel\tblock\nC\t1\t4\tG_1(C^5)\t-\nH\t1\t2\tG_1(H^3)\t-\n"
    );
}

#[test]
fn stiefel_whitney_numbers() {
    let o = run(&[
        "sw-number",
        "--field",
        "R",
        "--k",
        "1",
        "--n",
        "2",
        "--partition",
        "2",
    ]);
    assert_eq!(stdout(&o), "1\n");
    let o = run(&["sw-vector", "--field", "R", "--k", "1", "--n", "3"]);
    assert!(stdout(&o).lines().all(|l| l.ends_with("\t0")));
    assert_eq!(stdout(&o).lines().count(), 3);
    // CP^2 is bordant to RP^2 x RP^2, whose w_4 is a^2 b^2
    let o = run(&[
        "sw-number",
        "--field",
        "C",
        "--k",
        "1",
        "--n",
        "2",
        "--partition",
        "4",
    ]);
    assert_eq!(stdout(&o), "1\n");
    let o = run(&[
        "sw-number",
        "--field",
        "C",
        "--k",
        "1",
        "--n",
        "2",
        "--partition",
        "3,1",
    ]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["nu", "0"][..],
        &["nu", "twelve"],
        &["bounds", "--field", "X", "--k", "1", "--n", "2"],
        &[
            "sw-number",
            "--field",
            "R",
            "--k",
            "1",
            "--n",
            "4",
            "--partition",
            "1,3",
        ],
        &[
            "sw-number",
            "--field",
            "R",
            "--k",
            "1",
            "--n",
            "4",
            "--partition",
            "3",
        ],
        &["enumerate", "--dim", "0"],
        &["fossum", "--k", "2", "--n", "2"],
        &["verify", "--dim", "8", "--method", "guess"],
        &["bogus"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn guard_names_the_override_flag() {
    let o = run(&["verify", "--dim", "26", "--method", "oracle"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--allow-large"));
    let o = run(&["sw-vector", "--field", "R", "--k", "1", "--n", "26"]);
    assert_eq!(code(&o), 2);
    let o = run(&[
        "--allow-large",
        "sw-vector",
        "--field",
        "R",
        "--k",
        "1",
        "--n",
        "26",
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn proposition_matrix_outputs() {
    let o = run(&["prop-matrix", "--dim", "8", "--format", "tsv"]);
    assert_eq!(stdout(&o), "G_1(R^9)\tG_2(R^6)\n1\t0\n");
    assert_eq!(code(&o), 0);
    let o = run(&["prop-matrix", "--dim", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matrix"], serde_json::json!(["1"]));
}

#[test]
fn verdicts_drive_the_exit_code() {
    let o = run(&["verify", "--dim", "12", "--method", "both"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("d=12: verified"));
    // HP^2 and G_2(R^6) have equal Stiefel-Whitney numbers
    let o = run(&["verify", "--dim", "8", "--method", "oracle"]);
    assert_eq!(code(&o), 1);
    let o = run(&["verify", "--dim", "8", "--method", "matrix-induction"]);
    assert_eq!(code(&o), 0);
    let o = run(&["fossum", "--k", "1", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("G_2(R^6) = G_1(R^3)^4"));
    let o = run(&["sp-check", "--k", "2", "--n", "3", "--p", "3"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["verify", "--dim", "8", "--format", "json"][..],
        &["verify-range", "--max-dim", "12", "--format", "json"],
        &["enumerate", "--dim", "16", "--format", "json"],
        &[
            "sw-vector",
            "--field",
            "H",
            "--k",
            "1",
            "--n",
            "2",
            "--format",
            "json",
        ],
        &["fossum", "--k", "1", "--n", "4", "--format", "json"],
    ] {
        let text = stdout(&run(args));
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            serde_json::to_string(&value).unwrap() + "\n",
            text,
            "{args:?}"
        );
    }
}

fn without_timing(text: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    for r in v.as_array_mut().unwrap() {
        r["elapsed_ms"] = 0.into();
    }
    v
}

#[test]
fn range_output_is_ordered_and_independent_of_jobs() {
    let one = run(&[
        "--jobs",
        "1",
        "verify-range",
        "--max-dim",
        "16",
        "--format",
        "json",
    ]);
    let many = run(&[
        "--jobs",
        "4",
        "verify-range",
        "--max-dim",
        "16",
        "--format",
        "json",
    ]);
    assert_eq!(code(&one), code(&many));
    let one = without_timing(&stdout(&one));
    assert_eq!(one, without_timing(&stdout(&many)));
    let dims: Vec<u64> = one
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [2, 4, 6, 8, 10, 12, 14, 16]);
}
