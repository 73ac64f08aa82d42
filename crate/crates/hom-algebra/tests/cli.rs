//! End-to-end tests of the `homalg` binary: exit codes, output shapes, and
//! determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn homalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn check_passes_on_the_classical_bracket_fixture() {
    let out = homalg(&["check", fixture("sl2.json").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    // Default suite for a bracket file: only bracket-flavored identities.
    assert!(text.contains("skew-symmetric: pass"));
    assert!(text.contains("hom-lie: pass"));
    assert!(!text.contains("hom-associative"));

    let named = homalg(&[
        "check",
        fixture("sl2.json").to_str().unwrap(),
        "--identity",
        "hom-lie",
    ]);
    assert_eq!(exit_code(&named), 0);
    assert_eq!(stdout(&named), "hom-lie: pass (10 tuples checked)\n");
}

#[test]
fn check_reports_the_broken_jacobi_residual() {
    let out = homalg(&[
        "check",
        fixture("broken_jacobi.json").to_str().unwrap(),
        "--identity",
        "hom-jacobi",
    ]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("hom-jacobi: FAIL"));
    assert!(text.contains("(1,2,3): (0, 0, 2)"));
}

#[test]
fn check_rejects_malformed_input_with_exit_two() {
    let bad = homalg(&["check", fixture("bad_rational.json").to_str().unwrap()]);
    assert_eq!(exit_code(&bad), 2);
    assert!(stderr(&bad).contains("malformed rational"));

    let missing = homalg(&["check", "/nonexistent/nowhere.json"]);
    assert_eq!(exit_code(&missing), 2);

    let unknown = homalg(&[
        "check",
        fixture("sl2.json").to_str().unwrap(),
        "--identity",
        "nonsense",
    ]);
    assert_eq!(exit_code(&unknown), 2);
    assert!(stderr(&unknown).contains("unknown identity"));
}

#[test]
fn variety_prints_tagged_equations() {
    let out = homalg(&["variety", "2", "--kind", "homass"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("homvariety homass n=2"));
    assert_eq!(text.lines().count(), 1 + 16);
    assert!(text.lines().skip(1).all(|l| l.ends_with(" = 0")));

    let lie = homalg(&["variety", "2", "--kind", "homlie"]);
    let lie_text = stdout(&lie);
    assert_eq!(lie_text.lines().count(), 1 + 8);
    assert!(lie_text.lines().skip(1).all(|l| l.contains(" : 0 = 0")));

    let cas = homalg(&["variety", "2", "--kind", "homlie", "--format", "cas"]);
    assert!(stdout(&cas).starts_with("# ring Q["));
}

#[test]
fn variety_writes_files_and_validates_input() {
    let dir = std::env::temp_dir().join("homalg-cli-variety");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("homass2.txt");
    let out = homalg(&[
        "variety",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("homvariety homass n=2\n"));

    assert_eq!(exit_code(&homalg(&["variety", "2", "--kind", "mystery"])), 2);
    assert_eq!(exit_code(&homalg(&["variety", "0"])), 2);
}

#[test]
fn transport_round_trips_through_a_base_change() {
    let dir = std::env::temp_dir().join("homalg-cli-transport");
    std::fs::create_dir_all(&dir).unwrap();
    let matrix_path = dir.join("swap.json");
    std::fs::write(
        &matrix_path,
        "[[\"0\", \"1\", \"0\"], [\"1\", \"0\", \"0\"], [\"0\", \"0\", \"-1\"]]",
    )
    .unwrap();
    let moved_path = dir.join("moved.json");
    let out = homalg(&[
        "transport",
        fixture("sl2.json").to_str().unwrap(),
        matrix_path.to_str().unwrap(),
        "--out",
        moved_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));

    // The transported bracket is still a Hom-Lie algebra.
    let check = homalg(&["check", moved_path.to_str().unwrap(), "--identity", "hom-lie"]);
    assert_eq!(exit_code(&check), 0);

    // Transporting back along the inverse recovers the original file.
    let back_path = dir.join("back.json");
    let back = homalg(&[
        "transport",
        moved_path.to_str().unwrap(),
        matrix_path.to_str().unwrap(),
        "--out",
        back_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&back), 0);
    assert_eq!(
        std::fs::read_to_string(&back_path).unwrap(),
        std::fs::read_to_string(fixture("sl2.json")).unwrap()
    );

    // A singular matrix is an input error.
    let singular_path = dir.join("singular.json");
    std::fs::write(
        &singular_path,
        "[[\"1\", \"0\", \"0\"], [\"1\", \"0\", \"0\"], [\"0\", \"0\", \"1\"]]",
    )
    .unwrap();
    let singular = homalg(&[
        "transport",
        fixture("sl2.json").to_str().unwrap(),
        singular_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&singular), 2);
    assert!(stderr(&singular).contains("singular"));
}

#[test]
fn sl2_solve_prints_the_six_dimensional_basis() {
    let out = homalg(&["sl2-solve"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("dimension: 6\n"));
    assert_eq!(text.matches("basis ").count(), 6);
    // Deterministic output.
    assert_eq!(stdout(&homalg(&["sl2-solve"])), text);
}

#[test]
fn family_handles_full_points_samples_and_errors() {
    let full = homalg(&[
        "family",
        "5",
        "--params",
        "a=1,b=1,C123=1,C132=1,C231=1",
    ]);
    assert_eq!(exit_code(&full), 0);
    assert!(stdout(&full).contains("hom-lie: pass"));

    let sampled = homalg(&["family", "7", "--samples", "5"]);
    assert_eq!(exit_code(&sampled), 1);
    let text = stdout(&sampled);
    assert!(text.contains("k=7 status=fail"));
    assert!(text.contains("point=a="));
    assert!(text.contains("residual=(1,2,3):"));

    // Pinning only some parameters samples the rest.
    let pinned = homalg(&["family", "5", "--params", "a=1", "--samples", "5"]);
    assert_eq!(exit_code(&pinned), 0);
    assert!(stdout(&pinned).contains("k=5 status=pass samples=5"));

    let zero_constraint = homalg(&[
        "family",
        "1",
        "--params",
        "a=0,b=1,C121=1,C123=1,C132=1,C231=1",
    ]);
    assert_eq!(exit_code(&zero_constraint), 2);
    assert!(stderr(&zero_constraint).contains("constraint `a`"));

    assert_eq!(exit_code(&homalg(&["family", "21"])), 2);
    let unknown_param = homalg(&["family", "5", "--params", "zz=1", "--samples", "2"]);
    assert_eq!(exit_code(&unknown_param), 2);
}

#[test]
fn families_report_is_deterministic_with_machine_lines() {
    let args = ["families-report", "--samples", "3", "--seed", "11"];
    let first = homalg(&args);
    assert_eq!(exit_code(&first), 0);
    let text = stdout(&first);
    assert_eq!(text.matches("\nk=").count(), 20);
    for k in [1, 3, 4, 5, 6, 11] {
        assert!(text.contains(&format!("k={k} status=pass")), "family {k} must pass");
    }
    assert_eq!(stdout(&homalg(&args)), text);
}

#[test]
fn santilli_demo_matches_the_sandwich_element() {
    let pass = homalg(&["santilli-demo", "--samples", "5"]);
    assert_eq!(exit_code(&pass), 0, "stderr: {}", stderr(&pass));
    assert!(stdout(&pass).contains("star associativity on matrix-unit triples: pass"));

    let fail = homalg(&["santilli-demo", "--w", "2e11", "--samples", "3"]);
    assert_eq!(exit_code(&fail), 1);
    assert!(stdout(&fail).contains("FAIL"));

    assert_eq!(exit_code(&homalg(&["santilli-demo", "--cap", "2"])), 2);
    assert_eq!(exit_code(&homalg(&["santilli-demo", "--w", "garbage"])), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&homalg(&["no-such-command"])), 2);
    assert_eq!(exit_code(&homalg(&[])), 2);
    let help = homalg(&["--help"]);
    assert_eq!(exit_code(&help), 0);
    assert!(stdout(&help).contains("check"));
}
