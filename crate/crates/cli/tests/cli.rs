use std::process::Command;

use densitycheck_cli::{main_with, EXIT_ERROR, EXIT_FAILED_CHECKS};

fn run(argv: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = main_with(argv.iter().copied(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn dimensions_pass() {
    let (code, out, _) = run(&["dimensions"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim(psi) = [L^-3/2]"), "{out}");
    assert!(out.contains("dim(phi) = [L^-1]"), "{out}");
}

#[test]
fn symmetry_names_the_classes() {
    let (code, out, _) = run(&["symmetry"]);
    assert_eq!(code, 0);
    for class in ["Symmetric", "Antisymmetric", "NoTimeDerivative"] {
        assert!(out.contains(class), "{out}");
    }
}

#[test]
fn derive_reports_the_legendre_mismatch() {
    let (code, out, err) = run(&["derive"]);
    assert_eq!(code, EXIT_FAILED_CHECKS);
    assert!(
        err.contains("scalar_legendre_equals_stated_hamiltonian_density"),
        "{err}"
    );
    assert!(out.contains("PASS  scalar_legendre_identity"), "{out}");
    assert!(
        out.contains("PASS  scalar_legendre_without_potential"),
        "{out}"
    );
}

#[test]
fn uncharged_experiment_passes_and_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("params.txt");
    std::fs::write(&config, "# no coupling\ne = 0\nresolution = 8\n").unwrap();
    let csv = dir.path().join("u.csv");
    let (code, out, err) = run(&[
        "orthogonality",
        "--config",
        config.to_str().unwrap(),
        "--d",
        "2,3",
        "--format",
        "csv",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains("interaction_vanishes"), "{out}");
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "d,re_u,im_u,error");
    assert_eq!(lines.len(), 3);
    assert!(
        lines[1].starts_with("2.0000000000000000e0,"),
        "{}",
        lines[1]
    );
}

#[test]
fn json_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("r{i}.json"));
        let (code, _, _) = run(&[
            "orthogonality",
            "--resolution",
            "8",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        bodies.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    let doc: serde_json::Value = serde_json::from_slice(&bodies[0]).unwrap();
    assert_eq!(doc["command"], "orthogonality");
    assert_eq!(doc["passed"], true);
    assert_eq!(
        doc["experiment"]["interaction"].as_array().unwrap().len(),
        3
    );
}

#[test]
fn continuity_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        assert_eq!(run(&["continuity", "--out", p.to_str().unwrap()]).0, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn error_exit_codes() {
    assert_ne!(run(&["bogus"]).0, 0);
    assert_ne!(run(&["orthogonality", "--resolution", "0"]).0, 0);

    let dir = tempfile::tempdir().unwrap();
    let unwritable = dir.path().join("missing").join("out.json");
    assert_eq!(
        run(&["dimensions", "--out", unwritable.to_str().unwrap()]).0,
        EXIT_ERROR
    );

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "width = 3\n").unwrap();
    let (code, _, err) = run(&["orthogonality", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("unknown key `width`"), "{err}");

    // A charge inside the ball is not a valid configuration.
    assert_eq!(
        run(&["orthogonality", "--d", "0.5", "--resolution", "8"]).0,
        EXIT_ERROR
    );
    assert_eq!(
        run(&["orthogonality", "--config", "/nonexistent/params"]).0,
        EXIT_ERROR
    );
}

#[test]
fn help_lists_subcommands() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for name in [
        "dimensions",
        "derive",
        "symmetry",
        "continuity",
        "dirac-consistency",
        "orthogonality",
        "all",
    ] {
        assert!(out.contains(name), "{out}");
    }
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_densitycheck");
    assert_eq!(
        Command::new(bin)
            .arg("dimensions")
            .output()
            .unwrap()
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        Command::new(bin)
            .arg("derive")
            .output()
            .unwrap()
            .status
            .code(),
        Some(EXIT_FAILED_CHECKS)
    );
    let all = Command::new(bin)
        .args(["all", "--resolution", "8"])
        .output()
        .unwrap();
    assert_eq!(all.status.code(), Some(EXIT_FAILED_CHECKS));
    let err = String::from_utf8(all.stderr).unwrap();
    assert_eq!(
        err.trim(),
        "failed claims: scalar_legendre_equals_stated_hamiltonian_density"
    );
}
