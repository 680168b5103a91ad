use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superpoisson"))
}

fn script(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("scripts")
        .join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("superpoisson-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn run_prints_values() {
    let out = bin()
        .arg("run")
        .arg(script("classical.hp"))
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("PASS"));
}

#[test]
fn exit_codes() {
    for (name, expected) in [("cubic.hp", 0), ("linfty_fail.hp", 1), ("shifted.hp", 1)] {
        let out = bin().arg("run").arg(script(name)).output().unwrap();
        assert_eq!(code(&out), expected, "{name}");
    }
    let empty = scratch("empty.hp", "");
    assert_eq!(code(&bin().arg("run").arg(&empty).output().unwrap()), 0);
}

#[test]
fn first_error_aborts_with_position() {
    let path = scratch("bad.hp", "chart R2;\nlet P = xs1 + ;\nnondeg(P);\n");
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 2, column 15"), "{stderr}");
    assert!(out.stdout.is_empty());

    let semantic = scratch("undefined.hp", "chart R2;\nschouten(Q, x1);\n");
    assert_eq!(code(&bin().arg("run").arg(&semantic).output().unwrap()), 2);
}

#[test]
fn check_writes_reports() {
    let report =
        std::env::temp_dir().join(format!("superpoisson-report-{}.txt", std::process::id()));
    let out = bin()
        .args(["check"])
        .arg(script("linfty_fail.hp"))
        .arg("--report")
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
    let lines = std::fs::read_to_string(&report).unwrap();
    assert!(
        lines
            .lines()
            .any(|l| l.starts_with("CHECK") && l.contains(" FAIL")),
        "{lines}"
    );
    let mut jsonl = report.into_os_string();
    jsonl.push(".jsonl");
    let records = std::fs::read_to_string(&jsonl).unwrap();
    for line in records.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "FAIL", "{line}");
        assert_eq!(v["identity"], "linfty");
    }
}

#[test]
fn truncation_and_format_flags() {
    let path = scratch("fmt.hp", "chart R2;\nlet P = xs2*xs1;\nlegendre(P);\n");
    let out = bin()
        .args(["--format", "latex", "run"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains('\\') || text.contains('{'), "{text}");

    let out = bin()
        .args([
            "--trunc-fiber",
            "2",
            "--trunc-lambda",
            "0",
            "--trunc-base",
            "3",
            "run",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn repl_reads_stdin() {
    use std::io::Write;
    let mut child = bin()
        .arg("repl")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"chart R2;\nlet P = xs2*xs1;\nhp(P,\n  x1, x2);\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
}
