use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn ghzprobe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghzprobe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn optimal_lists_chsh() {
    let out = ghzprobe(&["optimal", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let tuples: Vec<&str> = v["vectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["tuple"].as_str().unwrap())
        .collect();
    assert_eq!(tuples.len(), 4);
    assert!(tuples.contains(&"(1,1,1,-1)"));
    assert_eq!(v["vectors"][0]["fourier"], "(1,1,1,-1)/2");
    assert_eq!(v["vectors"][0]["certificate"]["optimal"], true);
}

#[test]
fn optimal_lists_three_particle_vectors() {
    let out = ghzprobe(&["optimal", "--n", "3", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,f,fourier,lambda_max");
    assert!(lines[1].starts_with("0,\"(1,1,1,-1,1,-1,-1,-1)\",\"(0,1,1,0,1,0,0,-1)/2\",2.0"));
    assert!(lines[2].starts_with("1,\"(1,-1,-1,-1,-1,-1,-1,1)\""));
    assert_eq!(lines.len(), 5);
}

#[test]
fn spectrum_presets() {
    let out = ghzprobe(&[
        "spectrum",
        "--n",
        "2",
        "--f",
        "+++-",
        "--preset",
        "orthogonal",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!((v["spectral_radius"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-15);
    let mut spec: Vec<f64> = v["spectrum"]
        .as_object()
        .unwrap()
        .values()
        .map(|x| x.as_f64().unwrap())
        .collect();
    spec.sort_by(f64::total_cmp);
    assert_eq!(spec, [0.0, 0.0, 2.0, 2.0]);
    assert_eq!(v["coefficients"]["11"], 1.0);

    let out = ghzprobe(&[
        "spectrum",
        "--n",
        "2",
        "--f",
        "(1,-1,1,1)",
        "--preset",
        "aligned",
    ]);
    let v = json(&out);
    assert_eq!(v["spectral_radius"], 1.0);
    assert!(v["spectrum"]
        .as_object()
        .unwrap()
        .values()
        .all(|x| x == 1.0));
}

#[test]
fn spectrum_at_optimal_geometry_n4() {
    let f = "+++-+---+------+";
    let out = ghzprobe(&["spectrum", "--n", "4", "--f", f, "--preset", "optimal:++++"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let spec = v["spectrum"].as_object().unwrap();
    assert_eq!(spec.len(), 16);
    for (w, x) in spec {
        let expected = if w == "++++" || w == "----" { 8.0 } else { 0.0 };
        assert!((x.as_f64().unwrap() - expected).abs() < 1e-9, "{w}");
    }
}

#[test]
fn geometry_file_matches_preset() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let h = std::f64::consts::FRAC_PI_2;
    fs::write(
        &path,
        format!(r#"{{"sites": [{{"phi0": {h}, "phi1": 0.0}}, {{"phi0": {h}, "phi1": 0}}]}}"#),
    )
    .unwrap();
    let from_file = ghzprobe(&[
        "spectrum",
        "--n",
        "2",
        "--f",
        "+++-",
        "--geometry-file",
        path.to_str().unwrap(),
    ]);
    let from_preset = ghzprobe(&[
        "spectrum",
        "--n",
        "2",
        "--f",
        "+++-",
        "--preset",
        "orthogonal",
    ]);
    assert_eq!(code(&from_file), 0);
    assert_eq!(from_file.stdout, from_preset.stdout);

    fs::write(&path, "{\"sites\": 3}").unwrap();
    let bad = ghzprobe(&[
        "spectrum",
        "--n",
        "2",
        "--f",
        "+++-",
        "--geometry-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&bad), 2);
    let missing = ghzprobe(&[
        "spectrum",
        "--n",
        "2",
        "--f",
        "+++-",
        "--geometry-file",
        "/nonexistent/g.json",
    ]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn eigensystem_report() {
    let out = ghzprobe(&[
        "eigensystem",
        "--n",
        "3",
        "--f",
        "+++-+---",
        "--preset",
        "optimal:+++",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["f"], "+++-+---");
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 4);
    assert_eq!(pairs[0]["w"], "+++");
    assert!((pairs[0]["lambda"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    let re = pairs[0]["phase_re"].as_f64().unwrap();
    let im = pairs[0]["phase_im"].as_f64().unwrap();
    assert!((re * re + im * im - 1.0).abs() < 1e-12);
    for p in &pairs[1..] {
        assert_eq!(p["lambda"], 0.0);
    }
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = ghzprobe(&["verify", "--n", "3", "--trials", "100", "--seed", "7"]);
    assert_eq!(code(&a), 0);
    let v = json(&a);
    assert_eq!(v["passed"], true);
    assert!(v["max"]["spectrum_residual"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["results"].as_array().unwrap().len(), 100);
    let b = ghzprobe(&["verify", "--n", "3", "--trials", "100", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let c = ghzprobe(&["verify", "--n", "3", "--trials", "100", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn verify_n5_and_aligned() {
    let out = ghzprobe(&["verify", "--n", "5", "--trials", "10", "--format", "text"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout).unwrap().contains("PASS"));

    let out = ghzprobe(&["verify", "--n", "2", "--trials", "1", "--preset", "aligned"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"][0]["max_abs_coefficient"], 0.0);
    assert_eq!(v["results"][0]["geometry"]["sites"][0]["phi0"], 0.0);
}

#[test]
fn mermin_report() {
    let out = ghzprobe(&["mermin", "--n", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["expected_radius"], 4.0);
    assert_eq!(code(&ghzprobe(&["mermin", "--n", "7"])), 2);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = ghzprobe(&["optimal", "--n", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(
        fs::read(&path).unwrap(),
        ghzprobe(&["optimal", "--n", "2"]).stdout
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["optimal", "--n", "1"][..],
        &["optimal", "--n", "17"],
        &["optimal"],
        &[
            "spectrum",
            "--n",
            "2",
            "--f",
            "++-",
            "--preset",
            "orthogonal",
        ],
        &[
            "spectrum",
            "--n",
            "2",
            "--f",
            "++x-",
            "--preset",
            "orthogonal",
        ],
        &["spectrum", "--n", "2", "--f", "+++-"],
        &[
            "spectrum", "--n", "2", "--f", "+++-", "--preset", "diagonal",
        ],
        &[
            "spectrum",
            "--n",
            "2",
            "--f",
            "+++-",
            "--preset",
            "optimal:+++",
        ],
        &["verify", "--n", "6", "--trials", "1"],
        &[
            "eigensystem",
            "--n",
            "11",
            "--f",
            "+",
            "--preset",
            "aligned",
        ],
        &["frobnicate"],
        &["optimal", "--n", "2", "--format", "xml"],
    ] {
        let out = ghzprobe(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(code(&ghzprobe(&["--help"])), 0);
}
