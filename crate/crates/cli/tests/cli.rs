use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn linial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linial")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = linial(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn column(v: &Value, key: &str) -> Vec<String> {
    v.as_array().unwrap().iter().map(|r| r[key].as_str().unwrap().to_string()).collect()
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn genocchi_table() {
    let v = json_of(&["table", "--family", "g", "--n", "5"]);
    assert_eq!(column(&v, "value"), ["1", "1", "3", "17", "155"]);
}

#[test]
fn median_genocchi_series_and_enumeration_agree() {
    let s = json_of(&["table", "--family", "h", "--n", "4"]);
    let e = json_of(&["table", "--family", "h", "--n", "4", "--method", "enumeration"]);
    assert_eq!(column(&s, "value"), ["1", "2", "8", "56", "608"]);
    assert_eq!(s, e);
    let d = json_of(&["table", "--family", "D", "--from", "1", "--n", "4"]);
    assert_eq!(column(&d, "value"), ["2", "8", "56", "608"]);
}

#[test]
fn type_b_regions_table() {
    let v = json_of(&["table", "--family", "rB", "--n", "2"]);
    assert_eq!(column(&v, "value"), ["2", "12"]);
}

#[test]
fn csv_table() {
    let out = linial(&["table", "--family", "descent", "--n", "2", "--csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,value\n1,2\n2,8\n");
}

#[test]
fn chi_all_routes_agree() {
    let v = json_of(&["chi", "--family", "typeA", "--n", "2"]);
    assert_eq!(strs(&v["chi"]), ["-1", "3", "-3", "1"]);
    assert_eq!(v["agree"], Value::Bool(true));
    assert_eq!(v["routes"].as_array().unwrap().len(), 5);
}

#[test]
fn chi_dowling_single_route() {
    let v = json_of(&["chi", "--family", "dowling", "--n", "1", "--m", "3", "--route", "finite_field_interpolation"]);
    assert_eq!(strs(&v["chi"]), ["-1", "1"]);
    assert_eq!(v["route"], "finite_field_interpolation");
}

#[test]
fn unavailable_route_exits_2() {
    let out = linial(&["chi", "--family", "dowling", "--n", "2", "--m", "3", "--route", "rational_arrangement"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn bounds_need_force() {
    let out = linial(&["table", "--family", "g", "--n", "30"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
}

#[test]
fn bad_family_exits_2() {
    assert_eq!(linial(&["chi", "--family", "typeC", "--n", "2"]).status.code(), Some(2));
    assert_eq!(linial(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn mobius_top_and_element() {
    let top = json_of(&["mobius", "--family", "typeA", "--n", "3"]);
    assert_eq!(top["values"][0]["mobius"], "-3");
    let el = json_of(&["mobius", "--family", "typeA", "--n", "2", "--element", "12|34"]);
    assert_eq!(el["values"][0]["mobius"], "1");
    let out = linial(&["mobius", "--family", "typeA", "--n", "2", "--element", "13|24"]);
    assert_eq!(out.status.code(), Some(2));
    let dow = json_of(&["mobius", "--family", "dowling", "--n", "2", "--m", "3"]);
    assert_eq!(dow["values"][0]["mobius"], "-3");
}

#[test]
fn regions_type_b() {
    let v = json_of(&["regions", "--family", "typeB", "--n", "2"]);
    assert_eq!(v["regions"], "12");
    assert_eq!(v["poincare_at_1"], "12");
    let d = json_of(&["regions", "--family", "dowling", "--n", "1", "--m", "3"]);
    assert_eq!(d["regions"], Value::Null);
}

#[test]
fn series_kinds() {
    let bd = json_of(&["series", "--kind", "bd", "--trunc", "3"]);
    assert_eq!(bd, serde_json::json!([[], ["2"], ["8"], ["56"]]));
    let ch = json_of(&["series", "--kind", "char", "--trunc", "2", "--m", "2"]);
    assert_eq!(strs(&ch[2]), ["-2", "5", "-4", "1"]);
}

#[test]
fn psi_round_trip() {
    let found = json_of(&["psi", "--find", "(4,2,1,5,6,3,7,8)"]);
    let edges: Vec<(u64, u64)> = found["tree"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap(), e[1].as_u64().unwrap()))
        .collect();
    assert_eq!(edges, [(8, 1), (1, 2), (8, 3), (1, 4), (6, 5), (3, 6), (8, 7)]);

    let text: String = edges.iter().map(|(p, c)| format!("{p} {c}\n")).collect();
    let mut child = Command::new(env!("CARGO_BIN_EXE_linial"))
        .args(["psi", "--tree", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cycle"], "(4,2,1,5,6,3,7,8)");
}

#[test]
fn enumerate_labeled() {
    // |D^2_4| is the type B region count r^B_2.
    let v = json_of(&["enumerate", "--family", "labeled_dperm", "--n", "2", "--m", "2"]);
    assert_eq!(v["count"], 12);
    let v = json_of(&["enumerate", "--family", "labeled_dperm", "--n", "1", "--m", "3"]);
    assert_eq!(v["members"], serde_json::json!(["(1^0)(2^0)", "(1^0,2^0)"]));
}

#[test]
fn verify_is_deterministic_and_passes() {
    let args = ["verify", "gandhi"];
    let a = linial(&args);
    let b = linial(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["pass"], Value::Bool(true));
    assert!(v["reports"][0]["items"][0].get("millis").is_none());

    let timed = json_of(&["verify", "bijection_psi", "--n", "3", "--timings"]);
    assert!(timed["reports"][0]["items"][0].get("millis").is_some());
}
