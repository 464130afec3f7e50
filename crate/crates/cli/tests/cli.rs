//! End-to-end runs of the `susy-dirac` binary.

use std::process::{Command, Output};
use std::time::Instant;

use num_complex::Complex64;
use serde_json::Value;
use susy_dirac::angular::{Channel, Sign};
use susy_dirac::oracles::promotor_time_integral;
use susy_dirac::resolvent::free_iterated_kernel;
use susy_dirac::susy_core::{ModelSpec, PhysicalParams};
use susy_dirac_cli::output::{read_csv, read_json};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_susy-dirac")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    read_json(&stdout(o)).unwrap()
}

fn complex(v: &Value) -> Complex64 {
    Complex64::new(v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

#[test]
fn oscillator_spectrum_has_unpaired_zero_mode() {
    let args = ["spectrum", "--model", "dirac-oscillator", "--omega", "1", "--jmax", "5/2", "--nmax", "3", "--format", "json"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    let rows = doc["rows"].as_array().unwrap();
    let energies: Vec<f64> = rows.iter().map(|r| r["energy"].as_f64().unwrap()).collect();
    assert!(energies.windows(2).all(|w| w[0] <= w[1]));
    let zero: Vec<&Value> = rows.iter().filter(|r| r["flag"].as_str() == Some("zero mode, unpaired")).collect();
    assert!(!zero.is_empty());
    for r in &zero {
        assert_eq!(r["energy"].as_f64(), Some(1.0));
        assert_eq!(r["sigma"].as_str(), Some("+"));
        assert!(r["paired_with"].is_null());
    }
    assert!(!rows.iter().any(|r| (r["energy"].as_f64().unwrap() + 1.0).abs() < 1e-12));
    // 3 values of j, two σ, two sectors, n = 0..3
    assert_eq!(rows.len(), 3 * 2 * 2 * 4);
    assert_eq!(stdout(&run(&args)), stdout(&o), "byte-identical reruns");
}

#[test]
fn linear_spectrum_lies_below_threshold() {
    let o = run(&["spectrum", "--model", "linear", "--gamma", "1", "--jmax", "1/2", "--nmax", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (header, rows) = read_csv(&stdout(&o)).unwrap();
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let threshold = 2f64.sqrt();
    let mut continuum = 0;
    for r in &rows {
        let e: f64 = r[col("energy")].parse().unwrap();
        if r[col("flag")] == "continuum" {
            continuum += 1;
            assert!((e.abs() - threshold).abs() < 1e-9);
        } else {
            assert!(e.abs() < threshold);
        }
    }
    assert_eq!(continuum, 2);
    assert!(rows.len() > 2);
}

#[test]
fn free_spectrum_is_purely_continuous() {
    let o = run(&["spectrum", "--model", "free"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("purely continuous spectrum"));
    let doc = json(&o);
    assert_eq!(doc["note"].as_str(), Some("purely continuous spectrum"));
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["flag"].as_str() == Some("continuum")));
}

#[test]
fn oscillator_kernel_matches_quadrature() {
    let o = run(&[
        "greens", "--model", "dirac-oscillator", "--channel", "j=1/2,sigma=+1", "--sector", "+", "--zeta", "0.3+0.4i",
        "--r1", "0.7", "--r2", "1.2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    let value = complex(&doc["value"]);
    let p = PhysicalParams::natural();
    let ch = Channel::radial(1, Sign::Plus).unwrap();
    let ms = ModelSpec::DiracOscillator { omega: 1.0 };
    let quad = promotor_time_integral(0.7, 1.2, Complex64::new(0.3, 0.4), ch, Sign::Plus, &ms, &p).unwrap();
    assert!((value - quad).norm() <= 1e-8 * quad.norm(), "{value} vs {quad}");
    let kp = &doc["kernel_params"];
    assert_eq!(kp["rho"].as_f64(), Some(0.25));
    assert!(kp["nu"].is_object() && kp["mu"].is_object());
}

#[test]
fn free_green_matrix_upper_left_is_scaled_kernel() {
    let o = run(&["greens", "--model", "free", "--z", "0.5+0.1i", "--p1", "0,0,0", "--p2", "0,0,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    let m = doc["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 4);
    assert!(m.iter().all(|row| row.as_array().unwrap().len() == 4));
    let z = Complex64::new(0.5, 0.1);
    let g = free_iterated_kernel([0.0; 3], [0.0, 0.0, 1.0], z * z, &PhysicalParams::natural()).unwrap();
    for (i, row) in m.iter().enumerate().take(2) {
        let v = complex(&row[i]);
        assert!((v - (z + 1.0) * g).norm() <= 1e-12 * g.norm());
    }
}

#[test]
fn kernel_at_pole_names_index() {
    let o = run(&[
        "greens", "--model", "dirac-oscillator", "--channel", "j=1/2,sigma=+1", "--sector", "+", "--zeta", "5", "--r1",
        "0.7", "--r2", "1.2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("pole proximity") && err.contains("n = 1"), "{err}");
    let o = run(&[
        "greens", "--model", "linear", "--channel", "j=1/2,sigma=+1", "--sector", "+", "--zeta", "3", "--r1", "0.7", "--r2",
        "1.2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("branch cut"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["spectrum", "--jmax", "1"],
        vec!["spectrum", "--model", "hydrogen"],
        vec!["spectrum", "--unknown"],
        vec!["greens", "--zeta", "1+"],
        vec!["greens", "--channel", "j=1/2,sigma=+1", "--sector", "+", "--zeta", "0.3+0.4i", "--r1", "0.7"],
        vec!["verify", "--suite", "everything"],
        vec!["spectrum", "--config", "/nonexistent/run.conf"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# linear model\nmodel = linear\ngamma = 1\njmax = 1/2 # only j = 1/2\nnmax=1\nformat=csv\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file = run(&["spectrum", "--config", cfg]);
    assert_eq!(from_file.status.code(), Some(0), "{}", stderr(&from_file));
    let (header, rows) = read_csv(&stdout(&from_file)).unwrap();
    assert_eq!(header[0], "model");
    assert!(rows.iter().all(|r| r[0] == "linear"));
    let overridden = run(&["spectrum", "--config", cfg, "--model", "dirac-oscillator", "--format", "json"]);
    assert_eq!(overridden.status.code(), Some(0));
    assert_eq!(json(&overridden)["model"].as_str(), Some("dirac-oscillator"));
    let out = dir.path().join("spectrum.json");
    let o = run(&["spectrum", "--config", cfg, "--format", "json", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc = read_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), rows.len());
}

#[test]
fn states_csv_round_trips() {
    let o = run(&["states", "--channel", "j=1/2,sigma=+1", "--sector", "+", "--n", "1", "--points", "400", "--rmax", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (header, rows) = read_csv(&stdout(&o)).unwrap();
    assert_eq!(header, ["r", "upper_re", "upper_im", "lower_re", "lower_im"]);
    assert_eq!(rows.len(), 400);
    let vals: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|v| v.parse().unwrap()).collect()).collect();
    let h = vals[1][0] - vals[0][0];
    let norm: f64 = vals.iter().map(|v| v[1..].iter().map(|x| x * x).sum::<f64>() * v[0] * v[0]).sum::<f64>() * h;
    assert!((norm - 1.0).abs() < 1e-2, "norm {norm}");
    let j = run(&["states", "--channel", "j=1/2,sigma=+1", "--sector", "+", "--n", "1", "--points", "400", "--rmax", "10", "--format", "json"]);
    let doc = json(&j);
    assert_eq!(doc["r"].as_array().unwrap().len(), 400);
    assert!((doc["energy"].as_f64().unwrap() - 5f64.sqrt()).abs() < 1e-11);
}

#[test]
fn oscillator_poles_follow_ladder() {
    let o = run(&["poles", "--channel", "j=1/2,sigma=+1", "--sector", "+", "--window", "0.5,18"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let poles: Vec<f64> = json(&o)["poles"].as_array().unwrap().iter().map(|p| p["zeta"].as_f64().unwrap()).collect();
    assert_eq!(poles.len(), 5);
    for (n, z) in poles.iter().enumerate() {
        assert!((z - (1.0 + 4.0 * n as f64)).abs() <= 1e-8);
    }
}

#[test]
fn verify_broken_algebra() {
    let o = run(&["verify", "--suite", "algebra", "--model", "free-broken"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    assert_eq!(doc["pass"], Value::Bool(true));
    let reports = doc["reports"].as_array().unwrap();
    assert!(reports.iter().all(|r| r["name"].as_str().unwrap().contains("free-broken")));
    let broken = reports
        .iter()
        .flat_map(|r| r["checks"].as_array().unwrap())
        .any(|c| c["name"].as_str() == Some("classify_susy reports Broken") && c["pass"] == Value::Bool(true));
    assert!(broken);
    assert!(reports.iter().all(|r| r.get("runtime_seconds").is_none()));
}

#[test]
fn verify_spectra_passes_and_is_deterministic() {
    let o = run(&["verify", "--suite", "spectra"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    assert_eq!(doc["pass"], Value::Bool(true));
    assert_eq!(doc["reports"].as_array().unwrap().len(), 2);
    assert_eq!(stdout(&run(&["verify", "--suite", "spectra"])), stdout(&o));
}

#[test]
fn tightened_tolerances_fail_with_listing() {
    let o = run(&["verify", "--suite", "limits", "--tol-scale", "1e-12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("FAILED"));
    assert_eq!(json(&o)["pass"], Value::Bool(false));
}

#[test]
fn verify_all_within_budget() {
    let t0 = Instant::now();
    let o = run(&["verify", "--suite", "all", "--timing"]);
    let seconds = t0.elapsed().as_secs_f64();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    assert_eq!(doc["pass"], Value::Bool(true));
    assert!(doc["reports"][0]["runtime_seconds"].is_number());
    assert!(seconds < 75.0, "verify --suite all took {seconds:.1} s");
}
