use std::process::{Command, Output};

fn stirling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stirling"))
        .args(args)
        .output()
        .expect("run stirling binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn third_dumont_derivative() {
    let o = stirling(&["grammar", "--dumont", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x^3*y + 4*x^2*y^2 + x*y^3\n");
}

#[test]
fn gamma_table_as_json() {
    let o = stirling(&["gamma", "--m", "2,2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["entries"],
        serde_json::json!([{ "i": 1, "j": 2, "g": "1" }, { "i": 2, "j": 1, "g": "1" }])
    );
}

#[test]
fn gamma_check_and_csv() {
    assert!(stirling(&["gamma", "--m", "1,2,1", "--check"])
        .status
        .success());
    let o = stirling(&["gamma", "--m", "2,2", "--format", "csv"]);
    assert_eq!(stdout(&o), "i,j,gamma\n1,2,1\n2,1,1\n");
}

#[test]
fn enumerate_and_group_action() {
    let o = stirling(&["enumerate", "--m", "2,2"]);
    assert_eq!(stdout(&o), "1,1,2,2\n1,2,2,1\n2,2,1,1\n");
    let o = stirling(&["gfs", "--word", "15565333124411", "--phi-set", "1,3"]);
    assert_eq!(stdout(&o), "3,5,5,6,5,3,3,1,1,2,4,4,1,1\n");
    let o = stirling(&["gfs", "--word", "2211", "--rep"]);
    assert_eq!(stdout(&o), "1,2,2,1\n");
    let o = stirling(&["gfs", "--word", "1221", "--orbit"]);
    assert_eq!(stdout(&o), "1,2,2,1\n2,2,1,1\n");
}

#[test]
fn malformed_flags_exit_2() {
    for args in [
        &["enumerate", "--m", "2,0"][..],
        &["stats", "--word", "1,x"],
        &["jacobi", "--n", "2", "--set", "3"],
        &["gfs", "--word", "1221", "--phi", "7"],
        &["verify", "--suite", "nope"],
        &["verify", "--max-total", "0"],
    ] {
        let o = stirling(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = stirling(&["enumerate", "--m", "2,0"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--m"));
}

#[test]
fn certificates() {
    let o = stirling(&["realroot", "--m", "2,2", "--i", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("real-rooted: true"));
    let o = stirling(&["probe", "--m", "2,2", "--trials", "500", "--seed", "42"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("not a certificate"));
    assert!(stirling(&["jacobi", "--n", "2", "--conjecture"])
        .status
        .success());
}

#[test]
fn verify_single_suite() {
    let o = stirling(&[
        "verify",
        "--suite",
        "theorem",
        "--max-total",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["suite"], "theorem");
    assert_eq!(v[0]["verdict"], "pass");
    assert!(v[0].get("wall_time").is_none());
}
