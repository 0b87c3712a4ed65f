use std::process::Command;

use jackpos::symfunc::{jack, SymPoly};
use jackpos::part;

fn jackpos(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jackpos")).args(args).env_remove("JACKPOS_OUT_DIR").output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn compute_examples() {
    let (code, out, _) = jackpos(&["compute", "binomial", "--lambda", "3,1", "--mu", "3", "-n", "2"]);
    assert_eq!((code, out.as_str()), (0, "(2*t+2)/(t+2)\n"));
    let (_, out, _) = jackpos(&["compute", "interp", "--shape", "3,2", "-n", "2", "--monic"]);
    assert_eq!(out, "m(3,2) + (-1)*m(3,1) + (-t-6)*m(2,2) + (t+5)*m(2,1) + (-t-4)*m(1,1)\n");
    let (_, tab, _) = jackpos(&["compute", "interp", "--shape", "3,2", "-n", "2", "--monic", "--tableau"]);
    assert_eq!(tab, out);
}

#[test]
fn json_output_round_trips() {
    let (code, out, _) = jackpos(&["compute", "jack", "--shape", "2,1", "-n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let p: SymPoly = serde_json::from_str(&out).unwrap();
    assert_eq!(p, jack(&part![2, 1], 3).unwrap());
}

#[test]
fn exit_code_contract() {
    assert_eq!(jackpos(&["compute", "schur", "--shape", "2,3", "-n", "2"]).0, 2);
    assert_eq!(jackpos(&["compute", "schur", "--shape", "1,1,1", "-n", "2"]).0, 3);
    assert_eq!(jackpos(&["verify", "thm1", "-d", "3", "-n", "5"]).0, 3);
    assert_eq!(jackpos(&["table", "-d", "9", "-n", "2"]).0, 3);
    let (code, out, _) = jackpos(&["verify", "binomial-formula", "-d", "3", "-n", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("binomial-formula: pass"));
    let (code, out, _) = jackpos(&["verify", "conj-kt", "-d", "3", "-n", "2", "--tau", "0,1,inf", "--serial"]);
    assert_eq!(code, 0);
    assert!(out.contains("no counterexample found (sampling probe)"));
}

#[test]
fn io_failure_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let target = blocker.join("table.csv");
    assert_eq!(jackpos(&["table", "-d", "1", "-n", "1", "-o", target.to_str().unwrap()]).0, 4);
}

#[test]
fn table_output_is_deterministic_and_honours_the_output_dir() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_jackpos"))
            .args(["table", "-d", "4", "-n", "2", "-o", name])
            .env("JACKPOS_OUT_DIR", dir.path())
            .output()
            .unwrap();
        assert!(out.status.success());
        std::fs::read(dir.path().join(name)).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("lambda,nu,num,den\n"));
    assert!(text.lines().any(|l| l == "(3,1),(3),2*t+2,t+2"));
    let (_, single, _) = jackpos(&["table", "-d", "0", "-n", "1"]);
    assert_eq!(single, "lambda,nu,num,den\n(),(),1,1\n");
}

#[test]
fn verify_report_is_deterministic() {
    let args = ["verify", "thm1", "-d", "3", "-n", "2"];
    assert_eq!(jackpos(&args).1, jackpos(&args).1);
    let (_, json, _) = jackpos(&["verify", "thm2", "-d", "3", "-n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["claim"], "thm2");
    assert_eq!(v["pass"], true);
    assert!(v["counterexamples"].as_array().unwrap().is_empty());
}
