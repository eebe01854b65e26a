//! End-to-end tests of the `hadvp` binary: exit codes, determinism, file
//! ingestion, and spot values.

use std::path::PathBuf;
use std::process::{Command, Output};

fn hadvp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hadvp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

fn tmpfile(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hadvp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn shift_nonrel_hydrogen_value() {
    let out = hadvp(&["shift", "--z", "1", "--state", "1s", "--method", "nonrel-point", "--no-unc"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("-1.395378e-11"), "{text}");
}

#[test]
fn shift_muonic_reduced_mass_display() {
    let out = hadvp(&[
        "shift", "--z", "1", "--state", "2s", "--method", "nonrel-point", "--mass",
        "muon-reduced", "--unit", "mev", "--no-unc",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("-1.119503e-2"), "{}", stdout(&out));
}

#[test]
fn potential_single_point_single_row() {
    let out = hadvp(&[
        "potential", "--z", "1", "--r-min", "1.0", "--r-max", "2.0", "--points", "1",
        "--length-unit", "gevinv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2, "{text}");
    assert!(text.starts_with("r_gevinv,dv_hadronic_approx_gev\n"));
}

#[test]
fn potential_is_deterministic() {
    let args = [
        "potential", "--z", "1", "--species", "hadronic-approx,muon-loop", "--r-min", "1e-3",
        "--r-max", "1e2", "--points", "50",
    ];
    let a = hadvp(&args);
    let b = hadvp(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(!a.stdout.is_empty());
}

#[test]
fn potential_rejects_bad_range_and_species() {
    let out = hadvp(&["potential", "--z", "1", "--r-min", "-1.0", "--r-max", "2.0"]);
    assert_eq!(code(&out), 2);
    let out = hadvp(&[
        "potential", "--z", "1", "--r-min", "1.0", "--r-max", "2.0", "--species", "tau-loop",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn sweep_empty_range_and_precondition() {
    let out = hadvp(&[
        "sweep", "--z-min", "5", "--z-max", "4", "--state", "1s", "--method", "nonrel-point",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 1, "header only");

    // Z alpha > 1 fails the precondition before any computation
    let out = hadvp(&[
        "sweep", "--z-min", "138", "--z-max", "140", "--state", "1s", "--method", "nonrel-point",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn sweep_small_range_values_and_radius_sources() {
    let out = hadvp(&[
        "sweep", "--z-min", "1", "--z-max", "3", "--state", "1s", "--method", "nonrel-point",
        "--no-unc",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    // Z=1 from the builtin table, Z=3 from the empirical estimate
    assert!(text.contains("1,1s1/2,nonrel-point,0.8783,table"), "{text}");
    assert!(text.lines().nth(3).unwrap().contains(",empirical,"), "{text}");
    // Z^4 growth of the leading shift
    let vals: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(5).unwrap().parse().unwrap())
        .collect();
    // CSV carries six significant digits
    assert!((vals[1] / vals[0] - 16.0).abs() < 1e-4);
    assert!((vals[2] / vals[0] - 81.0).abs() < 5e-4);
}

#[test]
fn state_parsing_errors() {
    let out = hadvp(&["shift", "--z", "1", "--state", "2p", "--method", "nonrel-point"]);
    assert_eq!(code(&out), 2, "ambiguous p state needs explicit j");
    let out = hadvp(&["shift", "--z", "1", "--state", "2p5/2", "--method", "nonrel-point"]);
    assert_eq!(code(&out), 2);
    let out = hadvp(&["shift", "--z", "1", "--state", "xyz", "--method", "nonrel-point"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn params_file_round_trip_and_validation() {
    let good = tmpfile(
        "params-good.txt",
        "hadvp-params v1\nlabel restated\n\
0.0 0.7 0.0 0.0023092 3.9925370\n\
0.7 2.0 0.0 0.0022333 4.2191779\n\
2.0 4.0 0.0 0.0024402 3.2496684\n\
4.0 10.0 0.0 0.0027340 2.0995092\n\
10.0 91.1876 0.0010485 0.0029431 1.0\n\
91.1876 1.0e4 0.0012234 0.0029237 1.0\n\
1.0e4 1.0e5 0.0016894 0.0028984 1.0\n",
    );
    let base = hadvp(&["shift", "--z", "1", "--state", "1s", "--method", "nonrel-point", "--no-unc"]);
    let with_file = hadvp(&[
        "shift", "--z", "1", "--state", "1s", "--method", "nonrel-point", "--no-unc", "--params",
        good.to_str().unwrap(),
    ]);
    assert_eq!(code(&with_file), 0);
    assert_eq!(stdout(&base), stdout(&with_file), "restated set reproduces builtin");

    let bad = tmpfile("params-bad.txt", "hadvp-params v1\n0.0 2.0 0.0 1e-3 1.0\n1.0 3.0 0.0 1e-3 1.0\n");
    let out = hadvp(&[
        "shift", "--z", "1", "--state", "1s", "--method", "nonrel-point", "--params",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn alt_params_enable_parameter_uncertainty() {
    // a 1% scaled B column acts as the alternate set
    let alt = tmpfile(
        "params-alt.txt",
        "hadvp-params v1\nlabel scaled\n\
0.0 0.7 0.0 0.00233229 3.9925370\n\
0.7 2.0 0.0 0.0022333 4.2191779\n\
2.0 4.0 0.0 0.0024402 3.2496684\n\
4.0 10.0 0.0 0.0027340 2.0995092\n\
10.0 91.1876 0.0010485 0.0029431 1.0\n\
91.1876 1.0e4 0.0012234 0.0029237 1.0\n\
1.0e4 1.0e5 0.0016894 0.0028984 1.0\n",
    );
    let out = hadvp(&[
        "shift", "--z", "1", "--state", "1s", "--method", "nonrel-point", "--alt-params",
        alt.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let unc_param: f64 = text.lines().nth(1).unwrap().split(',').nth(4).unwrap().parse().unwrap();
    let value: f64 = text.lines().nth(1).unwrap().split(',').nth(3).unwrap().parse().unwrap();
    assert!((unc_param / value.abs() - 0.01).abs() < 1e-6, "{text}");
}

#[test]
fn radii_csv_overrides_builtin() {
    let radii = tmpfile("radii.csv", "Z,R_rms_fm,uncertainty_fm\n1, 0.9000, 0.001\n");
    let out = hadvp(&[
        "sweep", "--z-min", "1", "--z-max", "1", "--state", "1s", "--method", "nonrel-point",
        "--no-unc", "--radii", radii.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("1,1s1/2,nonrel-point,0.9,table"), "{}", stdout(&out));

    let bad = tmpfile("radii-bad.csv", "wrong,header\n1,2\n");
    let out = hadvp(&[
        "shift", "--z", "1", "--state", "1s", "--method", "nonrel-point", "--radii",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn table_two_single_row() {
    let out = hadvp(&["table", "II", "--only-z", "1", "--no-unc", "--jobs", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    let cells: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(cells[0], "1");
    // nonrel column and its published value
    assert_eq!(cells[2], "-1.395378e-11");
    assert_eq!(cells[4], "-1.395000e-11");
    let diff: f64 = cells[5].parse().unwrap();
    assert!(diff.abs() < 5e-3);
}

#[test]
fn table_four_runs_and_diffs_small() {
    let out = hadvp(&["table", "IV", "--no-unc"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for line in text.lines().skip(1).take(3) {
        let cells: Vec<&str> = line.split(',').collect();
        let nonrel_diff: f64 = cells[3].parse().unwrap();
        assert!(nonrel_diff.abs() < 1.5e-2, "{line}");
    }
    assert!(text.contains("reduced mass"), "{text}");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hadvp-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pot.csv");
    let out = hadvp(&[
        "potential", "--z", "1", "--r-min", "1.0", "--r-max", "2.0", "--points", "2",
        "--length-unit", "fm", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("r_fm,"));
    assert_eq!(content.lines().count(), 3);
}
