use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use coherence_core::{coherence_at, Acceleration, FieldKind, ModeParameters, SeriesOptions};

fn coherence(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coherence"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = coherence(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Parses CSV text into a header and rows of floats.
fn parse(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header = rdr.headers().unwrap().iter().map(String::from).collect();
    let rows = rdr
        .records()
        .map(|r| r.unwrap().iter().map(|c| c.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn dirac_point_at_rest() {
    let (header, rows) = parse(&stdout(&[
        "point",
        "--field",
        "dirac",
        "--alpha",
        "0.70710678",
        "--theta",
        "0",
    ]));
    assert_eq!(header, ["alpha", "param", "coherence", "tail_guarantee"]);
    assert_eq!(rows.len(), 1);
    assert!((rows[0][2] - 1.0).abs() < 1e-12);
}

#[test]
fn dirac_limit_maximum() {
    let (_, rows) = parse(&stdout(&["maximize", "--field", "dirac", "--theta-limit"]));
    assert!((rows[0][0] - 0.7435).abs() < 1e-4);
    assert!((rows[0][2] - 0.694).abs() < 5e-4);
}

#[test]
fn loss_at_distinguished_amplitude() {
    let (header, rows) = parse(&stdout(&["loss", "--alpha", "0.63245553"]));
    assert_eq!(header, ["alpha", "c_at_0", "c_at_limit", "delta"]);
    assert!((rows[0][3] - 0.322).abs() < 5e-4);
}

#[test]
fn csv_round_trips_to_full_precision() {
    for (field, stop) in [("scalar", "3"), ("dirac", "0.78")] {
        let text = stdout(&[
            "sweep",
            "--field",
            field,
            "--alpha",
            "0.3,0.5,0.9",
            "--start",
            "0",
            "--stop",
            stop,
            "--count",
            "7",
        ]);
        assert!(text.ends_with('\n') && !text.contains('\r'));
        let (_, rows) = parse(&text);
        assert_eq!(rows.len(), 21);
        let kind: FieldKind = field.parse().unwrap();
        for row in rows {
            let rep = coherence_at(
                ModeParameters::new(row[0]).unwrap(),
                Acceleration::new(kind, row[1]),
                SeriesOptions::default(),
            )
            .unwrap();
            assert_eq!(rep.value.to_bits(), row[2].to_bits(), "{field} {row:?}");
            assert_eq!(rep.tail_guarantee.to_bits(), row[3].to_bits());
        }
    }
}

#[test]
fn json_output_has_metadata_and_ordered_keys() {
    let text = stdout(&[
        "point", "--alpha", "0.5,0.8", "--r", "1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["metadata"]["field_kind"], "scalar");
    assert_eq!(v["metadata"]["log_base"], 2);
    assert_eq!(v["metadata"]["series_tol"], 1e-12);
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    let keys: Vec<&String> = v["rows"][0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["alpha", "param", "coherence", "tail_guarantee"]);
    let meta = text.find("\"metadata\"").unwrap();
    assert!(meta < text.find("\"rows\"").unwrap());
}

fn read_all(dir: &Path) -> Vec<(String, Vec<u8>)> {
    ["fig2.csv", "fig3.csv", "fig4.csv", "fig5.csv"]
        .iter()
        .map(|name| (name.to_string(), fs::read(dir.join(name)).unwrap()))
        .collect()
}

#[test]
fn figures_are_byte_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        stdout(&[
            "figures",
            "--out-dir",
            dir.path().to_str().unwrap(),
            "--points",
            "9",
        ]);
    }
    let (fa, fb) = (read_all(a.path()), read_all(b.path()));
    assert_eq!(fa, fb);

    let (header, rows) = parse(std::str::from_utf8(&fa[0].1).unwrap());
    assert_eq!(header, ["alpha", "param", "coherence", "tail_guarantee"]);
    assert_eq!(rows.len(), 45);
    assert_eq!(rows.last().unwrap()[1], 8.0);
    let (_, rows) = parse(std::str::from_utf8(&fa[1].1).unwrap());
    assert!(rows.iter().all(|r| r[1] < std::f64::consts::FRAC_PI_4));
    let fig5 = std::str::from_utf8(&fa[3].1).unwrap();
    assert_eq!(
        fig5.lines().filter(|l| l.starts_with("surface,")).count(),
        81
    );
    assert_eq!(fig5.lines().filter(|l| l.starts_with("ridge,")).count(), 9);
}

#[test]
fn config_file_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    fs::write(
        &path,
        r#"{"command": "sweep", "field_kind": "dirac", "alpha": [0.5, 0.7],
            "param": {"start": 0.0, "stop": 0.5, "count": 4}}"#,
    )
    .unwrap();
    let from_config = stdout(&["--config", path.to_str().unwrap()]);
    let from_flags = stdout(&[
        "sweep", "--field", "dirac", "--alpha", "0.5,0.7", "--start", "0", "--stop", "0.5",
        "--count", "4",
    ]);
    assert_eq!(from_config, from_flags);

    let out = dir.path().join("limit.csv");
    fs::write(
        &path,
        format!(
            r#"{{"command": "maximize", "field_kind": "dirac", "param": "limit", "output_path": {:?}}}"#,
            out.to_str().unwrap()
        ),
    )
    .unwrap();
    stdout(&["--config", path.to_str().unwrap()]);
    let (_, rows) = parse(&fs::read_to_string(&out).unwrap());
    assert!((rows[0][2] - 0.694).abs() < 5e-4);
}

fn exit_code(args: &[&str]) -> i32 {
    let out = coherence(args);
    let stderr = String::from_utf8_lossy(&out.stderr);
    if !out.status.success() {
        assert_eq!(stderr.trim_end().lines().count(), 1, "{stderr}");
    }
    out.status.code().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["point", "--alpha", "1.5", "--r", "1"]), 2);
    assert_eq!(exit_code(&["point", "--alpha", "0.5"]), 2);
    assert_eq!(exit_code(&["point", "--alpha", "0.5", "--theta", "1.0"]), 2);
    assert_eq!(
        exit_code(&["point", "--field", "scalar", "--alpha", "0.5", "--theta", "0.1"]),
        2
    );
    assert_eq!(exit_code(&["loss", "--field", "scalar"]), 2);
    assert_eq!(
        exit_code(&["point", "--alpha", "0.5", "--r", "1", "--series-tol", "0"]),
        2
    );
    assert_eq!(exit_code(&["point", "--alpha", "0.5", "--r", "12"]), 3);
    assert_eq!(
        exit_code(&[
            "point",
            "--alpha",
            "0.5",
            "--r",
            "1",
            "-o",
            "/nonexistent/dir/out.csv"
        ]),
        4
    );
    assert_eq!(exit_code(&["--config", "/nonexistent/run.json"]), 4);
    assert_eq!(exit_code(&["point", "--alpha", "0.5", "--r", "1"]), 0);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"command": "ridge", "alpha": 0.5}"#).unwrap();
    assert_eq!(exit_code(&["--config", path.to_str().unwrap()]), 2);
    fs::write(&path, "{not json").unwrap();
    assert_eq!(exit_code(&["--config", path.to_str().unwrap()]), 2);
}

#[test]
fn physical_acceleration_input() {
    // a = pi gives tanh r = exp(-1) in natural units.
    let a = std::f64::consts::PI.to_string();
    let (_, rows) = parse(&stdout(&[
        "point",
        "--field",
        "scalar",
        "--alpha",
        "0.5",
        "--acceleration",
        &a,
    ]));
    assert!((rows[0][1].tanh() - (-1f64).exp()).abs() < 1e-14);
    let (_, rows) = parse(&stdout(&[
        "point",
        "--field",
        "dirac",
        "--alpha",
        "0.5",
        "--acceleration",
        &a,
    ]));
    assert!((rows[0][1].tan().powi(2) - (-2f64).exp()).abs() < 1e-14);
}

#[test]
fn axioms_subcommand_passes() {
    let (header, rows) = parse(
        &stdout(&["axioms", "--seed", "7", "--trials", "200"])
            .replace("faithfulness", "0")
            .replace("dephasing", "1")
            .replace("permutation", "2")
            .replace("convexity", "3"),
    );
    assert_eq!(header, ["check", "trials", "violations", "worst_excess"]);
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r[1] == 200.0 && r[2] == 0.0));
}
