use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_magnus-kernel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full, "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn limits_text_and_json_agree() {
    let args = ["limits", "--k", "4", "--n", "1", "--u", "y1", "b[5] b[6]^-1"];
    let o = run(&args, "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("alpha=5 omega=2 aw_length=-2\n"));
    let v = json(&args);
    assert_eq!(v["alpha"], 5);
    assert_eq!(v["omega"], 2);
    assert_eq!(v["aw_length"], -2);
    assert_eq!(v["omega_form"], "b[1] y[1,1] y[1,2]^-1 b[2]^-1");
    assert!(text.contains(&format!("alpha_form={}", v["alpha_form"].as_str().unwrap())));
}

#[test]
fn trivial_word_is_a_precondition_error() {
    let o = run(&["limits", "--k", "4", "--u", "y1", "1"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("trivial word"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["limits", "--k", "4", "--u", "y1", "b[1]]"], "").status.code(), Some(1));
    assert_eq!(run(&["limits", "--k", "x", "--u", "y1", "b[1]"], "").status.code(), Some(1));
    assert_eq!(run(&["project", "x b"], "").status.code(), Some(2));
    assert_eq!(run(&["limits", "--k", "0", "--u", "y1", "b[1]"], "").status.code(), Some(2));
    assert_eq!(
        run(&["amalgam", "--k", "4", "--u", "y1 y2", "--i", "2", "--j", "-1", "b[4]"], "").status.code(),
        Some(2)
    );
}

#[test]
fn conjugate_example() {
    let v = json(&["conjugate", "y[1,0]", "b[3]^-1 y[1,0] b[3]"]);
    assert_eq!(v["verdict"], "conjugate");
    assert_eq!(v["conjugator"], "b[3]");
    let v = json(&["conjugate", "y[1,0]", "y[1,1]"]);
    assert_eq!(v["verdict"], "neither");
    assert!(v["conjugator"].is_null());
}

#[test]
fn stdin_word() {
    let o = run(&["limits", "--k", "3", "--u", "y1", "-"], "b[-2] y[1,-2] y[1,0] b[4] y[1,1]^-1\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("alpha=0 omega=0 aw_length=1"));
}

#[test]
fn amalgam_worked_example() {
    let v = json(&[
        "amalgam", "--k", "4", "--u", "y1 y2", "--i", "-1", "--j", "2",
        "b[4] y[2,1] y[1,3] b[0] y[1,0] y[2,0]",
    ]);
    assert_eq!(v["s"], 3);
    assert_eq!(v["t"], 4);
    let b: Vec<i64> = v["identifications"]
        .as_array()
        .unwrap()
        .iter()
        .map(|id| id["b_index"].as_i64().unwrap())
        .collect();
    assert_eq!(b, [5, 6, 7, 8]);
}

#[test]
fn h_group_commands() {
    let o = run(&["project", "x^-1 b x b^-1"], "");
    assert_eq!(stdout(&o).trim(), "b[1] b[0]^-1");
    let o = run(&["lift", "b[1] b[0]^-1"], "");
    let back = run(&["project", stdout(&o).trim()], "");
    assert_eq!(stdout(&back).trim(), "b[1] b[0]^-1");
    let v = json(&["phi3", "x^2 y^2 z^2"]);
    assert_eq!(v["length"], 10);
    assert_eq!(v["cyclic_core"], "c a^-1 b^-1 a b c");
}

#[test]
fn dual_and_suitable() {
    let v = json(&["dual", "--k", "3", "--u", "y1", "b[0]"]);
    assert_eq!(v["word"], "b[0]' y[1,0]'");
    let v = json(&["suitable", "--k", "4", "--u", "y1 y2", "b[4] y[2,1] y[1,3] b[0] y[1,0] y[2,0]"]);
    assert!(v["word"].is_string());
    assert!(v["window"].is_array());
}

#[test]
fn sample_then_member() {
    let v = json(&["sample", "b[0] y[1,0]", "--seed", "3", "--factors", "2", "--length", "2"]);
    let w = v["word"].as_str().unwrap().to_string();
    if w != "1" {
        let m = json(&["member", &w, "b[0] y[1,0]", "--factors", "2", "--length", "2"]);
        assert_eq!(m["found"], true);
    }
}

#[test]
fn selftest_quick_context() {
    let o = run(&["--json", "selftest", "--k", "3", "--u", "y1", "--trials", "20"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["fail"], 0, "{c}");
        assert!(c.get("name").is_some() && c.get("pass").is_some() && c.get("counterexample").is_some());
    }
    assert_eq!(run(&["selftest", "--trials", "0"], "").status.code(), Some(2));
}
