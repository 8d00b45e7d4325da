//! End-to-end command-line tests: exit codes, report JSON, certificate
//! files and determinism, driven through `dstab::cli::run` without
//! spawning processes.

use std::path::{Path, PathBuf};

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> i32 {
    let mut argv = vec!["dstab".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    dstab::cli::run(argv)
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn eig_identity_spectrum() {
    let out = scratch("eig_id3.json");
    let code = run(&[
        "eig",
        "--matrix",
        &data("id3.csv"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let report = read_json(&out);
    assert_eq!(report["schema"], "dstab-report/1");
    let eigs = report["spectra"][0]["eigenvalues"].as_array().unwrap();
    assert_eq!(eigs.len(), 3);
    for e in eigs {
        assert!((e["re"].as_f64().unwrap() - 1.0).abs() < 1e-12);
        assert!(e["im"].as_f64().unwrap().abs() < 1e-12);
    }
}

#[test]
fn check_falsifies_known_counterexample() {
    let out = scratch("check_notds.json");
    let code = run(&[
        "check",
        "--matrix",
        &data("notds2x2.csv"),
        "--region",
        "halfplane",
        "--budget",
        "2000",
        "--seed",
        "7",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let report = read_json(&out);
    assert_eq!(report["verdict"]["status"], "Falsified");
    let w = &report["verdict"]["witness"];
    assert_eq!(w["type"], "diagonal");
    let d = w["dBoundary"].as_array().unwrap();
    let ratio = d[0].as_f64().unwrap() / d[1].as_f64().unwrap();
    assert!((ratio - 2.5).abs() < 1e-6, "ratio {ratio}");
}

#[test]
fn check_exact_certifies_triangular() {
    let out = scratch("check_triangular.json");
    let code = run(&[
        "check",
        "--matrix",
        &data("triangular4.csv"),
        "--region",
        "halfplane",
        "--exact",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let report = read_json(&out);
    assert_eq!(report["verdict"]["status"], "Certified");
    let cert_path = report["certificatePath"].as_str().unwrap();
    let cert = read_json(Path::new(cert_path));
    assert_eq!(cert["schema"], "dstab-certificate/1");
    assert_eq!(cert["reason"], "all_coefficients_positive");
    assert_eq!(
        report["verdict"]["certificateId"].as_str().unwrap().len(),
        64
    );
}

#[test]
fn check_exact_worked_example_is_inconclusive() {
    let out = scratch("check_mech4x4.json");
    let code = run(&[
        "check",
        "--matrix",
        &data("mech4x4.csv"),
        "--region",
        "halfplane",
        "--exact",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    let report = read_json(&out);
    assert_eq!(report["verdict"]["status"], "Inconclusive");
}

#[test]
fn certify_sector_emits_honest_inconclusive() {
    // Proper-sector certificates guard the boundary rays at pi +- theta
    // (parameter -2cos(theta)); their one-sign census is structurally
    // mixed for sector-stable matrices, so the exit code is 2.
    let out = scratch("neg_identity_cert.json");
    let matrix = scratch("neg_id2.csv");
    std::fs::write(&matrix, "-1,0\n0,-1\n").unwrap();
    let theta = format!("{}", std::f64::consts::FRAC_PI_3);
    let code = run(&[
        "certify",
        "--matrix",
        matrix.to_str().unwrap(),
        "--region",
        "sector",
        "--theta",
        &theta,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    let cert = read_json(&out);
    assert_eq!(cert["status"], "inconclusive");
    assert_eq!(cert["reason"], "mixed_signs");
    assert_eq!(cert["cos2theta"], "-1");
    assert_eq!(cert["variables"], serde_json::json!(["d1", "d2", "X"]));
}

#[test]
fn certify_half_plane_block_det() {
    let out = scratch("triangular_blockdet_cert.json");
    let code = run(&[
        "certify",
        "--matrix",
        &data("triangular4.csv"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let cert = read_json(&out);
    assert_eq!(cert["status"], "nonvanishing_on_orthant");
    assert_eq!(cert["cos2theta"], "0");
}

#[test]
fn certify_charpoly_sum_method() {
    let out = scratch("triangular_charpoly_cert.json");
    let code = run(&[
        "certify",
        "--matrix",
        &data("triangular4.csv"),
        "--method",
        "charpoly-sum",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let cert = read_json(&out);
    assert_eq!(cert["status"], "nonvanishing_on_orthant");
}

#[test]
fn classes_report_identity() {
    let out = scratch("classes_id3.json");
    let code = run(&[
        "classes",
        "--matrix",
        &data("id3.csv"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let report = read_json(&out);
    assert_eq!(report["results"]["isQ"], true);
    assert_eq!(report["results"]["isP"], true);
    assert_eq!(report["results"]["isP0plus"], true);
}

#[test]
fn compound_of_diagonal() {
    let matrix = scratch("diag123.csv");
    std::fs::write(&matrix, "1,0,0\n0,2,0\n0,0,3\n").unwrap();
    let out = scratch("diag123_compound.csv");
    let code = run(&[
        "compound",
        "--matrix",
        matrix.to_str().unwrap(),
        "--exact",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.trim(), "3,0,0\n0,4,0\n0,0,5");
}

#[test]
fn compound_json_output() {
    let matrix = scratch("half_thirds.csv");
    std::fs::write(&matrix, "1/2,0\n0,1/3\n").unwrap();
    let out = scratch("half_thirds_compound.json");
    let code = run(&[
        "compound",
        "--matrix",
        matrix.to_str().unwrap(),
        "--exact",
        "--json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v = read_json(&out);
    assert_eq!(v["n"], 1);
    assert_eq!(v["rows"][0][0], "5/6");
}

#[test]
fn region_check_boundary_exit_code() {
    let matrix = scratch("rotation.csv");
    std::fs::write(&matrix, "0,1\n-1,0\n").unwrap();
    let out = scratch("rotation_region.json");
    let code = run(&[
        "region-check",
        "--matrix",
        matrix.to_str().unwrap(),
        "--region",
        "halfplane",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    let report = read_json(&out);
    assert_eq!(report["results"]["allInside"], false);
    assert_eq!(report["results"]["boundaryHits"].as_array().unwrap().len(), 2);
}

#[test]
fn boundary_bundle_agreement() {
    let matrix = scratch("rotation2.csv");
    std::fs::write(&matrix, "0,1\n-1,0\n").unwrap();
    let out = scratch("rotation_boundary.json");
    let code = run(&[
        "boundary",
        "--matrix",
        matrix.to_str().unwrap(),
        "--d",
        "1,1",
        "--out",
        out.to_str().unwrap(),
    ]);
    // All six conditions fail in agreement: consistent.
    assert_eq!(code, 0);
    let report = read_json(&out);
    assert_eq!(report["results"]["agreement"], true);
    for c in report["results"]["conditions"].as_array().unwrap() {
        assert_eq!(c, false);
    }
}

#[test]
fn verdicts_are_deterministic_per_seed() {
    let out1 = scratch("det1.json");
    let out2 = scratch("det2.json");
    for out in [&out1, &out2] {
        let code = run(&[
            "check",
            "--matrix",
            &data("notds2x2.csv"),
            "--region",
            "halfplane",
            "--budget",
            "500",
            "--seed",
            "42",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 1);
    }
    let r1 = read_json(&out1);
    let r2 = read_json(&out2);
    assert_eq!(r1["verdict"], r2["verdict"]);
    assert_eq!(r1["inputDigest"], r2["inputDigest"]);
}

#[test]
fn sweep_inconclusive_exit() {
    let matrix = scratch("neg_id3.csv");
    std::fs::write(&matrix, "-1,0,0\n0,-1,0\n0,0,-1\n").unwrap();
    let out = scratch("sweep_neg_id.json");
    let code = run(&[
        "sweep",
        "--matrix",
        matrix.to_str().unwrap(),
        "--region",
        "halfplane",
        "--budget",
        "100",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
}

#[test]
fn mech_falsifies_low_damping() {
    let out = scratch("mech_osc.json");
    let code = run(&[
        "mech",
        "--system",
        &data("oscillator.json"),
        "--zeta",
        "0.4",
        "--budget",
        "500",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let report = read_json(&out);
    assert_eq!(report["verdict"]["status"], "Falsified");
    assert!(report["results"]["testedNotion"]
        .as_str()
        .unwrap()
        .contains("diag(D, I)"));
}

#[test]
fn frac_exact_path_is_honest() {
    let out = scratch("frac_neg_id.json");
    let code = run(&[
        "frac",
        "--system",
        &data("frac_neg_identity.json"),
        "--exact",
        "--out",
        out.to_str().unwrap(),
    ]);
    // gamma = 4/3 maps to the pi/3 sector: the exact engine runs but the
    // one-sign census of a proper-sector certificate is structurally
    // mixed, so the honest verdict is inconclusive.
    assert_eq!(code, 2);
    let report = read_json(&out);
    assert_eq!(report["verdict"]["status"], "Inconclusive");
    assert!(report["certificatePath"].is_null());
    let notes = report["verdict"]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("mixed signs")));
}

#[test]
fn plot_data_emission() {
    let plot = scratch("plot.csv");
    let out = scratch("plot_report.json");
    let code = run(&[
        "region-check",
        "--matrix",
        &data("id3.csv"),
        "--region",
        "sector",
        "--theta",
        "0.7853981633974483",
        "--out",
        out.to_str().unwrap(),
        "--plot-data",
        plot.to_str().unwrap(),
    ]);
    assert_eq!(code, 1); // identity spectrum is outside the sector
    let text = std::fs::read_to_string(&plot).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("label,re,im"));
    assert!(text.lines().filter(|l| l.starts_with("boundary")).count() > 100);
    assert!(text.lines().any(|l| l.starts_with("sigma(A)")));
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(run(&["no-such-command"]), 64);
    assert_eq!(run(&["eig"]), 64); // missing --matrix
    assert_eq!(run(&["eig", "--matrix", "/nonexistent/file.csv"]), 65);
    // Exact mode on a matrix with no exact token form.
    let matrix = scratch("sci.csv");
    std::fs::write(&matrix, "1e-3,0\n0,1e3\n").unwrap();
    assert_eq!(
        run(&[
            "check",
            "--matrix",
            matrix.to_str().unwrap(),
            "--region",
            "halfplane",
            "--exact",
        ]),
        65
    );
    // Sector angle out of range.
    let id = data("id3.csv");
    assert_eq!(
        run(&["region-check", "--matrix", &id, "--region", "sector", "--theta", "2.0"]),
        65
    );
    // Unsupported exact-mode angle for certificates.
    assert_eq!(
        run(&[
            "certify",
            "--matrix",
            &data("triangular4.csv"),
            "--region",
            "sector",
            "--theta",
            "0.5",
        ]),
        65
    );
}
