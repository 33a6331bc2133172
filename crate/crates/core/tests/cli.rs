use std::f64::consts::PI;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krylov-sampling"))
        .args(args)
        .output()
        .unwrap()
}

fn rows(path: &Path) -> (String, Vec<Vec<f64>>) {
    let text = fs::read_to_string(path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    let data = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    (header, data)
}

#[test]
fn table1_default_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["table1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(dir.path().join("table1.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "hamiltonian,m,d,match");
    assert_eq!(lines.len(), 8);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
    assert_eq!(lines[7], "H_I3,15,15,true");
}

#[test]
fn table1_with_corrupted_spec_fails() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("broken.txt");
    // A single X field in place of the Ising couplings: d = 2, not 15.
    fs::write(&spec, "0.5 XIII\n").unwrap();
    let h = format!("H_I3={}", spec.display());
    let out = run(&["table1", "--hamiltonian", &h, "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = fs::read_to_string(dir.path().join("table1.csv")).unwrap();
    assert!(text.lines().any(|l| l == "H_I3,2,2,false"), "{text}");
}

#[test]
fn unparsable_spec_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("bad.txt");
    fs::write(&spec, "0.5 XIII\nhalf IXII\n").unwrap();
    let out = run(&[
        "reconstruct",
        "--hamiltonian",
        spec.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2"));
}

#[test]
fn unknown_hamiltonian_and_bad_flags() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(
        run(&["reconstruct", "--hamiltonian", "H_7", "--out", d]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["spread", "--seed", "minus one"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["effdim", "--hamiltonian", "H_1", "--dt", "-1", "--out", d])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reconstruct_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(
        run(&["reconstruct", "--hamiltonian", "H_2", "--out", d]).status.code(),
        Some(0)
    );
    let (header, data) = rows(&dir.path().join("reconstruct_H_2.csv"));
    assert_eq!(header, "l,r_mean,r_std");
    assert_eq!(data.len(), 4);
    assert_eq!(data[3][0], 3.0);
    assert!(data[3][1] <= 1e-8);
    assert!((data[0][1] - 1.0).abs() <= 1e-12);

    assert_eq!(
        run(&["reconstruct", "--hamiltonian", "h_i1", "--out", d]).status.code(),
        Some(0)
    );
    let (_, data) = rows(&dir.path().join("reconstruct_H_I1.csv"));
    assert_eq!(data.len(), 10);
    assert_eq!(data.last().unwrap()[0], 9.0);
}

#[test]
fn effdim_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    for name in ["H_1", "H_4"] {
        assert_eq!(
            run(&["effdim", "--hamiltonian", name, "--out", d]).status.code(),
            Some(0)
        );
    }
    let (header, h1) = rows(&dir.path().join("effdim_H_1.csv"));
    assert_eq!(header, "T,m_eff");
    assert_eq!(h1.len(), 200);
    assert!(h1[0][0] > 0.0 && (h1[199][0] - 8.0 * PI).abs() < 1e-12);
    let near = h1
        .iter()
        .min_by(|a, b| (a[0] - 4.0 * PI).abs().total_cmp(&(b[0] - 4.0 * PI).abs()))
        .unwrap();
    assert!((near[1] - 1.0).abs() <= 0.05, "{near:?}");
    assert!(h1.iter().all(|r| (1.0..=2.0).contains(&r[1])));

    let (_, h4) = rows(&dir.path().join("effdim_H_4.csv"));
    assert!(h4.iter().all(|r| (1.0..=5.0).contains(&r[1])));
    assert!(h4[180..].iter().all(|r| (r[1] - 5.0).abs() <= 0.5));
}

#[test]
fn spread_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(
        &cfg,
        format!("hamiltonian = H_1\ninitial_state = 0000\nspread_points = 9\noutput_dir = {d}\n"),
    )
    .unwrap();
    assert_eq!(
        run(&["spread", "--config", cfg.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let (header, data) = rows(&dir.path().join("spread_H_1.csv"));
    assert_eq!(header, "t,C_S");
    assert_eq!(data.len(), 9);
    assert!(data[0][1].abs() <= 1e-10);
    assert!((data[2][0] - PI).abs() < 1e-12);
    assert!((data[2][1] - 1.0).abs() <= 1e-8);

    assert_eq!(
        run(&["spread", "--hamiltonian", "H_I2", "--out", d]).status.code(),
        Some(0)
    );
    let (_, data) = rows(&dir.path().join("spread_H_I2.csv"));
    assert_eq!(data.len(), 500);
    assert!(data.iter().all(|r| r[1] >= -1e-12 && r[1] <= 15.0));
}

#[test]
fn numbers_carry_enough_digits() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(
        run(&["spread", "--hamiltonian", "H_3", "--out", d]).status.code(),
        Some(0)
    );
    let text = fs::read_to_string(dir.path().join("spread_H_3.csv")).unwrap();
    for field in text.lines().skip(1).flat_map(|l| l.split(',')) {
        let mantissa = field.trim_start_matches('-').split('e').next().unwrap();
        let digits = mantissa.chars().filter(char::is_ascii_digit).count();
        assert!(digits >= 12, "{field}");
    }
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(
        &cfg,
        "hamiltonian = H_1\nseed = 1\noutput_dir = /nonexistent/should/not/be/used\n",
    )
    .unwrap();
    let out_dir = dir.path().join("o");
    let out = run(&[
        "reconstruct",
        "--config",
        cfg.to_str().unwrap(),
        "--hamiltonian",
        "H_3",
        "--seed",
        "9",
        "--t-max",
        "3.5",
        "--dt",
        "0.8",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out_dir.join("reconstruct_H_3.csv").is_file());
}
