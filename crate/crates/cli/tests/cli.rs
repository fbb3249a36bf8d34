use std::io::Write;
use std::process::{Command, Output};

use gfrob::algebra::{dual_numbers, group_algebra, load_algebra};
use gfrob::exactlin::Scalar;
use gfrob::group::FiniteGroup;
use gfrob_cli::count_records;

fn gfrob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfrob")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn check_z2_from_file() {
    let a = group_algebra(&FiniteGroup::from_spec("cyclic:2").unwrap());
    let f = temp_file(&a.to_json());
    let o = gfrob(&["check", "--algebra", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("== check =="));
    assert!(!text.contains("FAIL"));
    assert!(text.contains("PASS frobenius-diagram"));
}

#[test]
fn eval_identity_over_trivial_algebra() {
    let o = gfrob(&["eval", "--cobordism", "id(e)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[e] -> [e]\n[1]\n");
}

#[test]
fn eval_from_file_with_comments() {
    let f = temp_file("# torus with one boundary circle\ncap ; split(a,a)\n; merge(a,a)\n");
    let o = gfrob(&["eval", "--group", "cyclic:2", "--cobordism", f.path().to_str().unwrap(), "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["domain"], serde_json::json!([]));
    assert_eq!(v["codomain"], serde_json::json!(["e"]));
    assert_eq!(v["matrix"], serde_json::json!([["1"]]));
}

#[test]
fn cerf_with_corrupted_algebra_reports_labeling() {
    let g = FiniteGroup::from_spec("symmetric:3").unwrap();
    let mut a = group_algebra(&g);
    a.set_action_entry(1, 3, (0, 0), Scalar::from_int(5));
    let f = temp_file(&a.to_json());
    let o = gfrob(&["cerf", "--case", "111", "--algebra", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL cerf-111"), "{text}");
    let elements = text.lines().find(|l| l.trim_start().starts_with("elements:")).unwrap();
    assert_eq!(elements.split(',').count(), 4);
}

#[test]
fn cerf_single_labeling() {
    let o = gfrob(&["cerf", "--group", "symmetric:3", "--case", "202", "--labels", "p132,p231,e,p321", "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#""name":"cerf-202","status":"pass","instances":3"#), "{text}");
}

#[test]
fn records_round_trip_counts() {
    let o = gfrob(&["check", "--group", "quaternion8", "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(count_records(&stdout(&o)).unwrap(), (13, 0));

    let g = FiniteGroup::from_spec("cyclic:3").unwrap();
    let mut a = group_algebra(&g);
    a.set_product_entry(1, 1, (0, 0, 0), Scalar::from_int(2));
    let f = temp_file(&a.to_json());
    let o = gfrob(&["check", "--algebra", f.path().to_str().unwrap(), "--format", "records"]);
    assert_eq!(o.status.code(), Some(1));
    let (pass, fail) = count_records(&stdout(&o)).unwrap();
    assert!(fail >= 1);
    assert_eq!(pass + fail, 13);
}

#[test]
fn orbifold_emits_reloadable_algebra() {
    let o = gfrob(&["orbifold", "--group", "symmetric:3"]);
    assert_eq!(o.status.code(), Some(0));
    let orb = load_algebra(&stdout(&o)).unwrap();
    assert_eq!(orb.group().spec(), Some("cyclic:1"));
    assert_eq!(orb.dims(), &[3]);
}

#[test]
fn derive_prints_structure() {
    let o = gfrob(&["derive", "--algebra", "builtin:dual-numbers"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("theta[e] = [0 1; 1 0]"), "{text}");
    assert!(text.contains("euler[e]"));
    assert!(text.contains("delta[e,e]"));
}

#[test]
fn error_categories() {
    let o = gfrob(&["eval", "--group", "cyclic:2", "--cobordism", "merge(a,a) ; id(a)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("error[type]"));

    let degenerate = dual_numbers(Scalar::one(), Scalar::zero());
    let f = temp_file(&degenerate.to_json());
    let o = gfrob(&["eval", "--algebra", f.path().to_str().unwrap(), "--cobordism", "id(e)", "--format", "records"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["category"], "degenerate-pairing");

    let o = gfrob(&["eval", "--cobordism", "cyl(e e)"]);
    assert!(stdout(&o).starts_with("error[parse]"));

    let f = temp_file("{\"group\": \"cyclic:2\", \"dims\": 3}");
    let o = gfrob(&["check", "--algebra", f.path().to_str().unwrap()]);
    assert!(stdout(&o).starts_with("error[parse]"));
}

#[test]
fn fuzz_is_deterministic() {
    let args = ["fuzz", "--group", "symmetric:3", "--seed", "42", "--trials", "200"];
    let (a, b) = (gfrob(&args), gfrob(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fuzz_reports_minimized_counterexample() {
    let g = FiniteGroup::from_spec("symmetric:3").unwrap();
    let mut a = group_algebra(&g);
    a.set_action_entry(1, 3, (0, 0), Scalar::from_int(2));
    let f = temp_file(&a.to_json());
    let o = gfrob(&["fuzz", "--algebra", f.path().to_str().unwrap(), "--seed", "5", "--trials", "300"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("counterexample"), "{text}");
    assert!(text.contains("minimized:"));
}
