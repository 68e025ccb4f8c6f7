//! End-to-end tests for the `cvstab` binary: output shapes, exit codes and
//! the pipe-ability contracts between subcommands.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cvstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cvstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const BUILTINS: [&str; 5] = [
    "three-mode-q",
    "three-mode-p",
    "nine-mode",
    "five-mode-braunstein",
    "eight-mode-gottesman",
];

#[test]
fn show_then_validate_round_trips_every_builtin() {
    let dir = tempfile::tempdir().unwrap();
    for name in BUILTINS {
        let out = cvstab(&["show", name]);
        assert_eq!(exit_code(&out), 0, "{name}");
        let path = dir.path().join(format!("{name}.cvstab"));
        fs::write(&path, stdout(&out)).unwrap();
        let check = cvstab(&["validate", path.to_str().unwrap()]);
        assert_eq!(exit_code(&check), 0, "{name}: {}", stdout(&check));
        assert!(stdout(&check).starts_with("PASS"), "{name}");
    }
}

#[test]
fn show_rejects_unknown_names_with_the_list() {
    let out = cvstab(&["show", "four-mode"]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr(&out);
    for name in BUILTINS {
        assert!(err.contains(name), "missing {name} in: {err}");
    }
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_file(
        dir.path(),
        "conjugate.cvstab",
        "cvstab 1\nn 1\nk 2\nrow 1 | 0\nrow 0 | 1\n",
    );
    let out = cvstab(&["validate", &bad]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).starts_with("FAIL"));

    let malformed = write_file(dir.path(), "broken.cvstab", "cvstab 9\n");
    let out = cvstab(&["validate", &malformed]);
    assert_eq!(exit_code(&out), 2);

    let out = cvstab(&["validate", "/nonexistent/path.cvstab"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn logicals_and_complement_report_the_position_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "q.cvstab",
        "cvstab 1\nn 3\nk 2\nrow 0 0 0 | 1 -1 0\nrow 0 0 0 | 0 1 -1\n",
    );
    let out = cvstab(&["logicals", &path]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("logical x 1 1 1 | 0 0 0"));
    let out = cvstab(&["complement", &path]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("dim W^omega = 4"));
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("basis"))
            .count(),
        4
    );
}

#[test]
fn syndrome_matches_the_documented_sign_convention() {
    let out = cvstab(&["syndrome", "three-mode-q", "--error", "mode=1,q=0.3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "(-0.3, 0)");
}

#[test]
fn decode_recovers_the_shift_from_a_syndrome() {
    let out = cvstab(&[
        "decode",
        "three-mode-q",
        "--syndrome",
        "-0.3,0",
        "--decoder",
        "single-mode",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("mode 1, q-shift 0.3, p-shift 0"), "{text}");
    assert!(text.contains("success"), "{text}");

    // Scoring against a known error reports the logical displacement.
    let out = cvstab(&[
        "decode",
        "five-mode-braunstein",
        "--error",
        "mode=3,q=0.2,p=-0.4",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("logical-displacement"));
    assert!(stdout(&out).contains("success"));
}

#[test]
fn check_reports_families_and_exit_codes() {
    let out = cvstab(&["check", "three-mode-q"]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("q: PASS"), "{text}");
    assert!(text.contains("p: FAIL"), "{text}");
    assert!(text.contains("arbitrary: FAIL"), "{text}");

    let out = cvstab(&["check", "eight-mode-gottesman"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("arbitrary: PASS"));
}

#[test]
fn lift_output_pipes_into_validate() {
    let dir = tempfile::tempdir().unwrap();
    // The eight-mode check matrix as Pauli strings (signs stripped).
    let pauli = write_file(
        dir.path(),
        "eight.pauli",
        "XXXXXXXX\nZZZZZZZZ\nIXIXYZYZ\nIXZYIXZY\nIYXZXZIY\nlogical XXIIIZIZ\n",
    );
    let out = cvstab(&["lift", &pauli]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let lifted = write_file(dir.path(), "eight.cvstab", &stdout(&out));
    let check = cvstab(&["validate", &lifted]);
    assert_eq!(exit_code(&check), 0, "{}", stdout(&check));
    assert!(stdout(&check).contains("n=8 k=5"));
    assert!(stdout(&out).contains("lifted logical"));

    // Pure-Z rows lift unchanged (all +1).
    let z = write_file(dir.path(), "z.pauli", "ZZI\nIZZ\n");
    let out = cvstab(&["lift", &z]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("row 0 0 0 | 1 1 0"));

    // The degenerate double-Y instance has no lift.
    let unsat = write_file(dir.path(), "unsat.pauli", "Y\nY\n");
    let out = cvstab(&["lift", &unsat]);
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout(&out).trim(), "UNSAT");
}

#[test]
fn simulate_is_byte_reproducible_and_sweep_has_one_row_per_point() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for run in 0..2 {
        let csv = dir.path().join(format!("run{run}.csv"));
        let out = cvstab(&[
            "simulate",
            "three-mode-q",
            "--model",
            "single-mode-gaussian:sigma=0.5,restrict=q",
            "--trials",
            "500",
            "--seed",
            "9",
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
        outputs.push(fs::read(&csv).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let text = String::from_utf8(outputs[0].clone()).unwrap();
    assert!(text.starts_with(
        "param,trials,failures,failure_rate,max_logical_disp,rms_logical_disp,seed\n"
    ));
    assert_eq!(text.lines().count(), 2);
    // Noiseless q-restricted errors on the position code never fail.
    assert!(text.lines().nth(1).unwrap().starts_with("0.5,500,0,0,"));

    let out = cvstab(&[
        "sweep",
        "five-mode-braunstein",
        "--model",
        "single-mode-gaussian:sigma=0.5",
        "--sigma-m-grid",
        "0,0.01,0.1",
        "--trials",
        "300",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4, "{text}");
}

#[test]
fn trials_csv_is_written_when_requested() {
    let dir = tempfile::tempdir().unwrap();
    let trials = dir.path().join("trials.csv");
    let csv = dir.path().join("summary.csv");
    let out = cvstab(&[
        "simulate",
        "three-mode-q",
        "--model",
        "fixed:mode=1,q=0.25",
        "--trials",
        "3",
        "--csv",
        csv.to_str().unwrap(),
        "--trials-csv",
        trials.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = fs::read_to_string(&trials).unwrap();
    assert!(text.starts_with("trial,success,max_logical_disp,"));
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().starts_with("0,true,"));
}
