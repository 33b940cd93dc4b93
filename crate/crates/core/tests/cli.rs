//! End-to-end tests of the `biobjq` binary: flag validation, exit codes,
//! deterministic file output and the front/hypervolume round trip.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn biobjq() -> Command {
    Command::new(env!("CARGO_BIN_EXE_biobjq"))
}

fn run(args: &[&str]) -> Output {
    biobjq().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn path_str(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn generate_sep_k(dir: &Path, name: &str) -> PathBuf {
    let out = dir.join(name);
    let output = run(&[
        "generate",
        "--class",
        "sep-k",
        "--k",
        "2",
        "--n",
        "4",
        "--spectrum",
        "sphere",
        "--seed",
        "7",
        "--out",
        path_str(&out),
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    out
}

#[test]
fn generate_writes_the_documented_optimum() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate_sep_k(dir.path(), "sepk.json");
    let descriptor = biobj_quad::InstanceDescriptor::from_file(&path).unwrap();
    assert_eq!(descriptor.x2, vec![0.0, 2.0, 0.0, 0.0]);
}

#[test]
fn generate_prints_path_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("instance.json");
    let output = run(&[
        "generate",
        "--class",
        "two-o",
        "--n",
        "6",
        "--spectrum",
        "ellipsoid",
        "--seed",
        "3",
        "--out",
        path_str(&out),
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("instance.json"), "{text}");
    assert!(text.contains("class=two-o"), "{text}");
    assert!(text.contains("n=6"), "{text}");
    assert!(text.contains("cond(spectrum)=1.0"), "{text}");
}

#[test]
fn generate_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out: &Path| {
        vec![
            "generate".to_string(),
            "--class".into(),
            "two-o".into(),
            "--n".into(),
            "10".into(),
            "--spectrum".into(),
            "ellipsoid".into(),
            "--seed".into(),
            "1".into(),
            "--out".into(),
            out.to_str().unwrap().to_string(),
        ]
    };
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert!(biobjq().args(args(&a)).status().unwrap().success());
    assert!(biobjq().args(args(&b)).status().unwrap().success());
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert!(!bytes_a.is_empty());
    assert_eq!(bytes_a, bytes_b);
}

#[test]
fn generate_rejects_axis_beyond_dimension_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bad.json");
    let output = run(&[
        "generate",
        "--class",
        "sep-k",
        "--k",
        "5",
        "--n",
        "4",
        "--spectrum",
        "sphere",
        "--seed",
        "7",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let err = stderr(&output);
    assert!(err.contains("k = 5") && err.contains("n = 4"), "{err}");
    assert!(!out.exists());
}

#[test]
fn usage_errors_exit_with_code_two() {
    let output = run(&["generate", "--no-such-flag"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["no-such-command"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn front_of_the_double_sphere_matches_known_values() {
    // Class `one` with a sphere spectrum materializes the double sphere
    // with optima 0 and (1, 1).
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("ds.json");
    let output = run(&[
        "generate",
        "--class",
        "one",
        "--n",
        "2",
        "--spectrum",
        "sphere",
        "--seed",
        "0",
        "--normalization",
        "none",
        "--out",
        path_str(&instance),
    ]);
    assert!(output.status.success(), "{}", stderr(&output));

    let csv = dir.path().join("front.csv");
    let output = run(&[
        "front",
        "--instance",
        path_str(&instance),
        "-m",
        "3",
        "--out",
        path_str(&csv),
    ]);
    assert!(output.status.success(), "{}", stderr(&output));

    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(
        lines[0].starts_with("# closed_form kappa_alpha="),
        "{}",
        lines[0]
    );
    assert_eq!(lines[1], "t,x_1,x_2,f1,f2,du,dv");
    let expect = [(0.0, 2.0), (0.5, 0.5), (2.0, 0.0)];
    for (line, (u, v)) in lines[2..].iter().zip(expect) {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 7);
        assert!((fields[3] - u).abs() <= 1e-9, "{line}");
        assert!((fields[4] - v).abs() <= 1e-9, "{line}");
    }
}

#[test]
fn front_requires_at_least_two_samples() {
    let dir = tempfile::tempdir().unwrap();
    let instance = generate_sep_k(dir.path(), "inst.json");
    let csv = dir.path().join("front.csv");
    let output = run(&[
        "front",
        "--instance",
        path_str(&instance),
        "-m",
        "1",
        "--out",
        path_str(&csv),
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("at least 2 samples"));
}

#[test]
fn verify_passes_on_a_generated_instance() {
    let dir = tempfile::tempdir().unwrap();
    let instance = generate_sep_k(dir.path(), "inst.json");
    let report = dir.path().join("report.json");
    let output = run(&[
        "verify",
        "--instance",
        path_str(&instance),
        "--samples",
        "201",
        "--out",
        path_str(&report),
    ]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("proportional_pareto_segment"), "{text}");
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(json["properties"].as_array().unwrap().len() >= 9);
}

#[test]
fn verify_rejects_a_corrupted_instance_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let instance = generate_sep_k(dir.path(), "inst.json");
    let mut descriptor = biobj_quad::InstanceDescriptor::from_file(&instance).unwrap();
    descriptor.q1[0][0] = -3.0;
    let text = serde_json::to_string_pretty(&descriptor).unwrap();
    let corrupted = dir.path().join("corrupted.json");
    std::fs::write(&corrupted, text).unwrap();

    let output = run(&["verify", "--instance", path_str(&corrupted)]);
    assert_eq!(output.status.code(), Some(1));
    assert!(
        stderr(&output).contains("not positive definite"),
        "{}",
        stderr(&output)
    );
}

#[test]
fn p10_instance_verifies_clean() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("p10.json");
    let output = run(&["p10", "--out", path_str(&instance)]);
    assert!(output.status.success());
    let descriptor = biobj_quad::InstanceDescriptor::from_file(&instance).unwrap();
    assert_eq!(descriptor.n, 10);
    assert_eq!(descriptor.alpha, 1.0);

    let output = run(&[
        "verify",
        "--instance",
        path_str(&instance),
        "--samples",
        "301",
    ]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("not-applicable"), "{text}");

    // The sampled set keeps its coordinates strictly ordered row by row.
    let csv = dir.path().join("front.csv");
    let output = run(&[
        "front",
        "--instance",
        path_str(&instance),
        "-m",
        "1001",
        "--out",
        path_str(&csv),
    ]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 1002); // header + 1001 samples
    assert_eq!(
        rows[0],
        "t,x_1,x_2,x_3,x_4,x_5,x_6,x_7,x_8,x_9,x_10,f1,f2,du,dv"
    );
    for row in &rows[2..rows.len() - 1] {
        let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
        for i in 2..11 {
            assert!(fields[i - 1] > fields[i], "{row}");
        }
    }
}

#[test]
fn hv_examples_and_empty_input() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("points.csv");

    std::fs::write(&csv, "f1,f2\n0.0,0.0\n").unwrap();
    let output = run(&["hv", "--front", path_str(&csv), "--reference", "1,1"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "1.00000000000e0");

    std::fs::write(&csv, "").unwrap();
    let output = run(&["hv", "--front", path_str(&csv), "--reference", "1,1"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "0.00000000000e0");

    std::fs::write(&csv, "f1,f2\n0.1,oops\n").unwrap();
    let output = run(&["hv", "--front", path_str(&csv), "--reference", "1,1"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("line 2"), "{}", stderr(&output));
}

#[test]
fn front_then_hv_reproduces_the_in_process_value() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("inst.json");
    let output = run(&[
        "generate",
        "--class",
        "two-o",
        "--n",
        "2",
        "--spectrum",
        "1,10",
        "--seed",
        "4",
        "--out",
        path_str(&instance),
    ]);
    assert!(output.status.success(), "{}", stderr(&output));

    let csv = dir.path().join("front.csv");
    let output = run(&[
        "front",
        "--instance",
        path_str(&instance),
        "-m",
        "1001",
        "--out",
        path_str(&csv),
    ]);
    assert!(output.status.success());

    let output = run(&["hv", "--front", path_str(&csv), "--reference", "1.1,1.1"]);
    assert!(output.status.success());
    let printed = stdout(&output).trim().to_string();

    let descriptor = biobj_quad::InstanceDescriptor::from_file(&instance).unwrap();
    let problem = descriptor.problem().unwrap();
    let samples = biobj_quad::front_samples(&problem, 1001, biobj_quad::GridKind::Uniform).unwrap();
    let points: Vec<(f64, f64)> = samples.iter().map(|s| (s.f1, s.f2)).collect();
    let expected = biobj_quad::hypervolume_2d(&points, (1.1, 1.1));
    assert_eq!(printed, format!("{expected:.11e}"));
}
