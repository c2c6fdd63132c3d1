use std::process::{Command, Output};

fn mporder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mporder")).args(args).output().expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = mporder(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn body(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn classify_generic_point() {
    let out = stdout_ok(&["classify", "-l", "2", "-n", "3", "--h", "-1", "--H", "1/3"]);
    let expected = r#"{
  "J": [],
  "mode": "canonical",
  "point": "h=-1 H=1/3",
  "psi": [
    "2/3",
    "1/3"
  ],
  "regular": true,
  "s": [
    0,
    0
  ],
  "sign": "+",
  "w": [
    1,
    2
  ],
  "walls": []
}
"#;
    assert_eq!(out, expected);
}

#[test]
fn classify_lists_walls_through_the_point() {
    let out = stdout_ok(&["classify", "-l", "2", "-n", "3", "--h", "-1", "--H", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["walls"], serde_json::json!(["H1+2h"]));
    assert_eq!(v["regular"], serde_json::json!(false));
}

#[test]
fn zero_delta_is_a_usage_error() {
    let out = mporder(&["classify", "-l", "2", "-n", "3", "--h", "0", "--H", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("theta·delta = 0"));
}

#[test]
fn bad_arguments_exit_with_two() {
    assert_eq!(mporder(&["order", "--bogus"]).status.code(), Some(2));
    assert_eq!(mporder(&["order", "-l", "6", "-n", "12", "--h", "-1", "--H", "1,1,1,1,1"]).status.code(), Some(2));
    assert_eq!(mporder(&["classify", "-l", "3", "--h", "-1", "--H", "1"]).status.code(), Some(2));
    assert_eq!(mporder(&["order", "-l", "2", "--h", "-1", "--H", "1/3", "--which", "a"]).status.code(), Some(2));
}

#[test]
fn walls_at_level_two() {
    let out = stdout_ok(&["walls", "-l", "2", "-n", "3"]);
    assert_eq!(out, "# 6 git-walls for l=2 n=3; git walls among c-walls: true\nH1\n-H1+h\nh\nH1+h\n-H1+2h\nH1+2h\n");
    assert_eq!(body(&stdout_ok(&["walls", "-l", "1", "-n", "4"])), vec!["h"]);
    let c: serde_json::Value =
        serde_json::from_str(&stdout_ok(&["walls", "-l", "3", "-n", "2", "--which", "c", "--format", "json"])).unwrap();
    assert_eq!(c["git_in_c"], serde_json::json!(true));
}

#[test]
fn geometric_order_at_the_asymptotic_point_is_dominance() {
    for (ell, n, big_h) in [("2", "3", "3"), ("3", "2", "2,2")] {
        let geo = stdout_ok(&["hasse", "-l", ell, "-n", n, "--h", "-1", "--H", big_h]);
        let dom = stdout_ok(&["hasse", "-l", ell, "-n", n, "--h", "-1", "--H", big_h, "--which", "dominance"]);
        assert_eq!(body(&geo), body(&dom));
    }
}

#[test]
fn dominance_on_four_is_a_chain() {
    let out = stdout_ok(&["hasse", "-l", "1", "-n", "4", "--h", "-1", "--which", "dominance"]);
    assert_eq!(
        body(&out),
        vec!["[[3,1]] < [[4]]", "[[2,2]] < [[3,1]]", "[[2,1,1]] < [[2,2]]", "[[1,1,1,1]] < [[2,1,1]]"]
    );
}

#[test]
fn c_order_is_total_off_c_walls() {
    let out = stdout_ok(&["order", "-l", "2", "-n", "3", "--h", "-1", "--H", "1/3", "--which", "c"]);
    assert!(!out.contains("||"));
}

#[test]
fn facet_order_on_a_wall_has_one_class() {
    let args = ["-l", "2", "-n", "1", "--h", "-1", "--H", "0"];
    let classes = stdout_ok(&[&["fixed-points", "--format", "table"][..], &args].concat());
    assert_eq!(classes, "# 1 classes at h=-1 H=0 (canonical, J={1})\n[[1],[]] [[],[1]]\n");
    let dot = stdout_ok(&[&["order", "--which", "facet", "--format", "dot"][..], &args].concat());
    assert_eq!(
        dot,
        "digraph order {\n  label=\"facet order at h=-1 H=0 (canonical, J={1})\";\n  n0 [label=\"[[1],[]]\"];\n  n1 [label=\"[[],[1]]\"];\n}\n"
    );
}

#[test]
fn charge_labels() {
    let out = stdout_ok(&["fixed-points", "-l", "2", "-n", "2", "--charge", "1,-1", "--format", "table"]);
    assert_eq!(
        out,
        "[[2],[]] -> [5]\n[[1,1],[]] -> [3,2]\n[[1],[1]] -> [3,1,1]\n[[],[2]] -> [2,2,1]\n[[],[1,1]] -> [1,1,1,1,1]\n"
    );
    assert_eq!(mporder(&["fixed-points", "-l", "2", "--charge", "1,1"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_stable() {
    let args = ["order", "-l", "3", "-n", "2", "--h", "1", "--H", "1/5,2/7", "--format", "json"];
    assert_eq!(stdout_ok(&args), stdout_ok(&args));
}

#[test]
fn verify_suite_and_injected_fault() {
    let out = mporder(&["verify", "--only", "bar-duality"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).lines().all(|l| l.starts_with("PASS")));
    let bad = mporder(&["verify", "--only", "f-minus-c", "--inject-fault", "--format", "json"]);
    assert_eq!(bad.status.code(), Some(1));
    let first: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&bad.stdout).lines().next().unwrap()).unwrap();
    assert_eq!(first["pass"], serde_json::json!(false));
    assert!(first["witness"].is_string());
    assert_eq!(mporder(&["verify", "--only", "no-such-check"]).status.code(), Some(2));
}
