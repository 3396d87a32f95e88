use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn verma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn jobs() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    v.sort();
    v
}

#[test]
fn golden_jobs_match() {
    let jobs = jobs();
    assert!(jobs.len() >= 15);
    for job in jobs {
        let out = verma(&["run", job.to_str().unwrap()]);
        let got = format!(
            "exit: {}\n{}",
            out.status.code().unwrap(),
            String::from_utf8(out.stdout).unwrap()
        );
        let want = fs::read_to_string(job.with_extension("out")).unwrap();
        assert_eq!(got, want, "{}", job.display());
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for job in jobs() {
        let a = verma(&["run", job.to_str().unwrap()]);
        let b = verma(&["run", job.to_str().unwrap()]);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn flags_agree_with_job_files() {
    let out = verma(&["det", "--lambda", "1", "--grade", "1"]);
    let job = verma(&[
        "run",
        golden_dir()
            .join("det_grade1_lambda1.json")
            .to_str()
            .unwrap(),
    ]);
    assert_eq!(out.stdout, job.stdout);
}

#[test]
fn table_output() {
    let out = verma(&["factor", "--lambda", "1", "--grade", "2", "--table"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "f(1): 6\nf(2): 2\nconstant: 4\n"
    );
    let out = verma(&[
        "radical",
        "--lambda",
        "2",
        "--grade",
        "1",
        "--table",
        "--weight",
        r#"{"L0":"5","I0":"0","CL":"0"}"#,
    ]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("I[1] v"));
}

#[test]
fn negative_lambda_and_unicode_minus() {
    let a = verma(&["det", "--lambda", "-2", "--grade", "2"]);
    let b = verma(&["det", "--lambda", "−2", "--grade", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(
        verma(&["det", "--lambda", "0", "--grade", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(verma(&["det", "--grade", "1"]).status.code(), Some(1));
    assert_eq!(
        verma(&["gram", "--lambda", "1", "--grade", "1", "--mode", "fast"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        verma(&["run", "/nonexistent/job.json"]).status.code(),
        Some(1)
    );
    assert_eq!(verma(&["--help"]).status.code(), Some(0));
}
