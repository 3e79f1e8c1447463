use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn specred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specred"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_stdout(args: &[&str]) -> String {
    let out = specred(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok_stdout(args)).unwrap()
}

fn lines(args: &[&str]) -> Vec<Value> {
    ok_stdout(args)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn params(v: &Value) -> (u64, u64) {
    (v["alpha"].as_u64().unwrap(), v["beta"].as_u64().unwrap())
}

fn has_pair(rows: &[Value], p1: (u64, u64), p2: (u64, u64)) -> Option<&Value> {
    rows.iter()
        .find(|r| params(&r["p1"]) == p1 && params(&r["p2"]) == p2)
}

#[test]
fn pineapple_spectrum_counts() {
    let v = json(&["spectrum", "--alpha", "4", "--beta", "3"]);
    assert_eq!(v["command"], "spectrum");
    assert_eq!(
        (v["result"]["b"].as_u64(), v["result"]["c"].as_u64()),
        (Some(13), Some(12))
    );
    assert_eq!(v["result"]["redundancy"]["exact"], "13/12");
    let collisions = v["result"]["collisions"].as_array().unwrap();
    assert_eq!(collisions.len(), 1);
    assert_eq!(
        (params(&collisions[0][0]), params(&collisions[0][1])),
        ((2, 3), (3, 0))
    );

    let v = json(&["spectrum", "--alpha", "3", "--beta", "8"]);
    assert_eq!(v["result"]["c"], 17);
}

#[test]
fn oracle_flag_agrees() {
    let v = json(&["spectrum", "--alpha", "4", "--beta", "3", "--oracle"]);
    assert_eq!(v["result"]["oracle_agrees"], true);
    assert_eq!(v["result"]["oracle"]["b"], 13);
    assert_eq!(
        v["result"]["oracle"]["classes"].as_array().unwrap().len(),
        13
    );
}

#[test]
fn graph6_from_argument_file_and_stdin() {
    let from_arg = json(&["spectrum", "Dhc"]);
    assert_eq!(
        (
            from_arg["result"]["b"].as_u64(),
            from_arg["result"]["c"].as_u64()
        ),
        (Some(5), Some(5))
    );

    let path = std::env::temp_dir().join(format!("specred-cli-{}.g6", std::process::id()));
    std::fs::write(&path, "Dhc\n").unwrap();
    let from_file = json(&["spectrum", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_file, from_arg);

    let mut child = Command::new(env!("CARGO_BIN_EXE_specred"))
        .arg("spectrum")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Dhc\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        serde_json::from_slice::<Value>(&out.stdout).unwrap(),
        from_arg
    );
}

#[test]
fn two_common_search() {
    let rows = lines(&["search", "two-common", "--max-k", "22"]);
    let pair = has_pair(&rows, (16, 44), (8, 220)).expect("example pair");
    assert_eq!(pair["kind"], "two-common-largest");
    assert_eq!(pair["common_factor"], serde_json::json!(["88", "-21", "1"]));
    assert_eq!(pair["witness"]["case"], "c");
    for r in &rows {
        assert_eq!(r["a_scaled"], "0");
    }
}

#[test]
fn one_common_search() {
    let rows = lines(&["search", "one-common", "--max-rho", "11"]);
    let radius = has_pair(&rows, (7, 110), (9, 99)).expect("radius pair");
    assert_eq!(radius["kind"], "one-common-radius");
    assert_eq!(
        radius["shared"][0]["minpoly"],
        serde_json::json!(["-11", "1"])
    );
    assert_eq!(radius["slope"], "11/2");
    let other = has_pair(&rows, (17, 165), (19, 154)).expect("non-radius pair");
    assert_eq!(other["kind"], "one-common-non-radius");

    let threaded = ok_stdout(&["search", "one-common", "--max-rho", "11", "--jobs", "4"]);
    assert_eq!(
        threaded,
        ok_stdout(&["search", "one-common", "--max-rho", "11"])
    );
}

#[test]
fn no_radius_pair_below_three() {
    let rows = lines(&["search", "one-common", "--max-rho", "2"]);
    assert!(rows.iter().all(|r| r["kind"] != "one-common-radius"));
}

#[test]
fn limits_csv() {
    let text = ok_stdout(&[
        "limits",
        "--alpha",
        "3",
        "--beta-from",
        "6",
        "--beta-to",
        "9",
    ]);
    let got: Vec<&str> = text.lines().collect();
    assert_eq!(
        got,
        [
            "alpha,beta,b,c,b_minus_c,r,r_decimal,tail",
            "3,6,15,14,1,15/14,1.071429,false",
            "3,7,17,16,1,17/16,1.062500,false",
            "3,8,19,17,2,19/17,1.117647,true",
            "3,9,21,19,2,21/19,1.105263,true",
        ]
    );
    let text = ok_stdout(&[
        "--digits",
        "2",
        "limits",
        "--beta",
        "0",
        "--alpha-from",
        "2",
        "--alpha-to",
        "4",
    ]);
    assert_eq!(text.lines().nth(1), Some("2,0,2,2,0,1,1.00,true"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["examples", "lemmas", "oracle"] {
        let text = ok_stdout(&["verify", "--suite", suite]);
        assert!(!text.contains("FAIL"), "{text}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(specred(&["spectrum", "!!"]).status.code(), Some(2));
    assert_eq!(
        specred(&["spectrum", "--alpha", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        specred(&["search", "two-common", "--max-k", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        specred(&[
            "limits",
            "--alpha",
            "3",
            "--beta-from",
            "5",
            "--beta-to",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(specred(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        specred(&["spectrum", "--alpha", "400", "--beta", "400"])
            .status
            .code(),
        Some(3)
    );
    // path on 17 vertices, one past the enumeration guard
    assert_eq!(
        specred(&["spectrum", "PhCGGC@?G?_@?@??_?G?@??C"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn output_is_reproducible() {
    for args in [
        &["spectrum", "--alpha", "5", "--beta", "4", "--oracle"][..],
        &["search", "two-common", "--max-k", "30"],
        &["search", "one-common", "--max-rho", "8", "--jobs", "3"],
        &[
            "limits",
            "--alpha",
            "4",
            "--beta-from",
            "0",
            "--beta-to",
            "30",
        ],
    ] {
        assert_eq!(ok_stdout(args), ok_stdout(args), "{args:?}");
    }
}
