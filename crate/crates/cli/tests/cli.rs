//! End-to-end checks of the binary: output shapes and exit codes.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn icbench(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_icbench"));
    cmd.args(args).env_remove("ICBENCH_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    icbench(args).output().expect("failed to launch icbench")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

/// Temp file that cleans up after itself.
struct TempFile(PathBuf);

impl TempFile {
    fn with_content(name: &str, content: &str) -> TempFile {
        let path =
            std::env::temp_dir().join(format!("icbench-cli-{}-{name}", std::process::id()));
        std::fs::write(&path, content).expect("writing temp file");
        TempFile(path)
    }

    fn path(&self) -> &str {
        self.0.to_str().expect("temp path is UTF-8")
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

#[test]
fn fit_gaussian_file() {
    let data = TempFile::with_content("gauss.txt", "1 2 3\n");
    let out = run(&["fit", "--model", "gauss", data.path()]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "model: gauss\n\
         n: 3\n\
         location: 2.00000\n\
         scale: 0.666667\n\
         max_loglik: -3.64862\n\
         aic: 11.2972\n\
         tic_emp: 1.25000\n"
    );
}

#[test]
fn fit_laplace_file_has_no_trace_line() {
    let data = TempFile::with_content("laplace.txt", "1 2 3\n");
    let out = run(&["fit", "--model", "laplace", data.path()]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "model: laplace\n\
         n: 3\n\
         location: 2.00000\n\
         scale: 0.666667\n\
         max_loglik: -3.86305\n\
         aic: 11.7261\n"
    );
}

#[test]
fn fit_reads_stdin() {
    let mut child = icbench(&["fit", "--model", "gauss"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("failed to launch icbench");
    child.stdin.take().unwrap().write_all(b"0 1").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("n: 2\n"), "{text}");
    assert!(text.contains("location: 0.500000\n"), "{text}");
    assert!(text.contains("scale: 0.250000\n"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["fit", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["fit", "--model", "cauchy"]).status.code(), Some(2));
    assert_eq!(
        run(&["bias", "--data", "gauss", "--model", "gauss", "--n", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["bias", "--data", "gauss", "--model", "gauss", "--n", "25", "--order", "4"])
            .status
            .code(),
        Some(2)
    );
    let bad_env = icbench(&["bias", "--data", "gauss", "--model", "gauss", "--n", "5", "--reps", "2"])
        .env("ICBENCH_THREADS", "abc")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn data_errors_exit_one() {
    assert_eq!(
        run(&["fit", "--model", "gauss", "/nonexistent/icbench-input"]).status.code(),
        Some(1)
    );
    let constant = TempFile::with_content("constant.txt", "5 5 5\n");
    assert_eq!(run(&["fit", "--model", "gauss", constant.path()]).status.code(), Some(1));
    let garbled = TempFile::with_content("garbled.txt", "1 foo 3\n");
    assert_eq!(run(&["fit", "--model", "laplace", garbled.path()]).status.code(), Some(1));
}

#[test]
fn bias_markdown_prints_series_cell() {
    let out = run(&[
        "bias", "--data", "laplace", "--model", "gauss", "--n", "25", "--reps", "50",
        "--nb", "10", "--seed", "7",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("| C_n | 4.040 |"), "{text}");
    assert!(text.contains("| AIC | 2.000 |"), "{text}");
}

#[test]
fn bias_series_order_override() {
    let out = run(&[
        "bias", "--data", "laplace", "--model", "gauss", "--n", "25", "--reps", "50",
        "--nb", "10", "--seed", "7", "--order", "2",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("| C_n | 4.094 |"), "{}", stdout_of(&out));
}

#[test]
fn table2_csv_to_file_leaves_trace_cells_empty() {
    let target = TempFile::with_content("table2.csv", "");
    let out = run(&[
        "table2", "--reps", "30", "--nb", "10", "--format", "csv", "--out", target.path(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "", "results should go to the file, not stdout");
    let csv = std::fs::read_to_string(target.path()).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("scenario,model,n,method,estimate,stderr,reps,nb,seed"));
    assert!(csv.lines().any(|l| l.starts_with("gauss,laplace,25,tic,,")), "{csv}");
    assert!(csv.lines().any(|l| l.starts_with("laplace,laplace,1600,tic_emp,,")), "{csv}");
}
