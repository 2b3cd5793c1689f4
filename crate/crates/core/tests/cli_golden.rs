use std::path::PathBuf;
use std::process::Command;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn birur(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_birur"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn check(args: &[&str], golden: &str, code: i32) {
    let (c, out) = birur(args);
    assert_eq!(c, code, "exit code for {args:?}");
    let want = std::fs::read_to_string(golden_dir().join(golden)).unwrap();
    assert_eq!(out, want, "output of {args:?} differs from {golden}");
}

#[test]
fn golden_files() {
    check(&["solve", "circle_line.txt"], "solve_circle_line.json", 0);
    check(
        &["rur", "--form", "1", "circle_line.txt"],
        "rur_form1_circle_line.json",
        0,
    );
    check(&["sign", "circle_line_f.txt"], "sign_circle_line.json", 0);
    check(&["split", "cubic_split.txt"], "split_cubic.json", 0);
    check(&["radical", "cubic_split.txt"], "radical_cubic.json", 0);
    check(&["solve", "degenerate.txt"], "solve_degenerate.json", 3);
}

#[test]
fn worked_rur_values() {
    let (_, out) = birur(&["rur", "--form", "1", "circle_line.txt"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let r = &v["result"]["rur"];
    let s = |k: &str| serde_json::to_string(&r[k]).unwrap();
    assert_eq!(s("f"), r#"["-2","0","1"]"#);
    assert_eq!(s("f1"), r#"["0","2"]"#);
    assert_eq!(s("fX"), r#"["2"]"#);
    assert_eq!(s("fY"), r#"["2"]"#);
}

#[test]
fn repeated_runs_are_identical() {
    let a = birur(&["solve", "--max-width", "1/1000000", "cubic_split.txt"]);
    let b = birur(&["solve", "--max-width", "1/1000000", "cubic_split.txt"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
}

#[test]
fn exit_codes() {
    assert_eq!(birur(&["solve", "no_such_file.txt"]).0, 1);
    assert_eq!(birur(&["solve", "--mode", "fast", "circle_line.txt"]).0, 2);
    let (code, out) = birur(&["solve", "--mode", "rand", "--seed", "3", "circle_line.txt"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"mode\": \"rand\""));
    let (code, out) = birur(&["solve", "--text", "circle_line.txt"]);
    assert_eq!(code, 0);
    assert!(out.contains("2 real solution(s)"));
}
