//! Subcommand implementations.

use num_complex::Complex64;
use susy_dirac::angular::{Channel, Sign};
use susy_dirac::fields::RadialGrid;
use susy_dirac::oracles::{merged_json, pole_scan, run_suite, PoleScanMethod, Suite, SuiteConfig};
use susy_dirac::resolvent::{
    dirac_green_blocks, free_dirac_green, free_iterated_kernel, free_sector_kernel, partial_wave_sector_kernel,
    radial_kernel, KernelParams, Mat4, ResolventQuery,
};
use susy_dirac::spectra::{continuum_branch, enumerate_levels, SpectralLine};
use susy_dirac::susy_core::ModelSpec;
use susy_dirac::wavefunctions::{build_4spinor, level_grid};
use susy_dirac::Error;

use crate::config::{boolean, count, positive, Format, RunConfig, Settings};
use crate::output::{csv_float, render_csv, Json};
use crate::parse::{format_half_integer, parse_channel, parse_complex, parse_half_integer, parse_sign, parse_vec3, parse_window};
use crate::{CliError, Outcome, EXIT_FAILURE, EXIT_OK};

/// Default largest `j` (doubled) of the partial-wave sums behind the 4×4 Green's function.
const DEFAULT_PW_TWICE_JMAX: u32 = 25;

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn twice_mj_str(t: i32) -> String {
    let mag = format_half_integer(t.unsigned_abs());
    if t < 0 {
        format!("-{mag}")
    } else {
        mag
    }
}

fn header(cfg: &RunConfig, command: &str) -> Vec<(String, Json)> {
    let p = &cfg.params;
    vec![
        ("command".into(), Json::str(command)),
        ("model".into(), Json::str(cfg.model.name())),
        ("couplings".into(), Json::obj(cfg.couplings().into_iter().map(|(k, v)| (k, Json::Num(v))))),
        (
            "params".into(),
            Json::obj([("m", Json::Num(p.m)), ("m0", Json::Num(p.m0)), ("c", Json::Num(p.c)), ("hbar", Json::Num(p.hbar))]),
        ),
    ]
}

fn channel_json(ch: Channel) -> Json {
    Json::obj([
        ("j", Json::str(format_half_integer(ch.twice_j))),
        ("mj", Json::str(twice_mj_str(ch.twice_mj))),
        ("sigma", Json::str(sign_str(ch.sigma))),
        ("l", Json::Int(ch.l() as i64)),
        ("kappa", Json::Int(ch.kappa() as i64)),
    ])
}

fn level_label(line: &SpectralLine) -> String {
    format!(
        "n={},j={},sigma={},sector={},branch={}",
        line.n,
        format_half_integer(line.ch.twice_j),
        sign_str(line.ch.sigma),
        sign_str(line.sector),
        sign_str(line.branch)
    )
}

/// One spectrum row; continuum thresholds leave the level labels empty.
#[derive(Debug, Clone, PartialEq)]
struct SpectrumRow {
    j: Option<String>,
    mj_degeneracy: Option<u32>,
    sigma: Option<Sign>,
    sector: Option<Sign>,
    n: Option<u32>,
    branch: Sign,
    eps: f64,
    energy: f64,
    paired_with: Option<String>,
    flag: Option<&'static str>,
}

const SPECTRUM_COLUMNS: [&str; 11] =
    ["model", "j", "mj_degeneracy", "sigma", "sector", "n", "branch", "epsilon", "energy", "paired_with", "flag"];

/// `spectrum`: discrete levels with `j <= jmax`, `n <= nmax`, plus continuum threshold rows.
pub fn spectrum(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let ms = &cfg.model;
    let p = &cfg.params;
    let mut rows = Vec::new();
    let mut note = None;
    match enumerate_levels(ms, cfg.twice_j_max, cfg.n_max, p) {
        Ok(levels) => {
            for lv in levels {
                let one_d = ms.is_one_dimensional();
                let flag = match (lv.zero_mode, lv.partner.is_some()) {
                    (true, false) => Some("zero mode, unpaired"),
                    (true, true) => Some("zero mode"),
                    _ => None,
                };
                rows.push(SpectrumRow {
                    j: (!one_d).then(|| format_half_integer(lv.line.ch.twice_j)),
                    mj_degeneracy: Some(lv.mj_degeneracy),
                    sigma: (!one_d).then_some(lv.line.ch.sigma),
                    sector: Some(lv.line.sector),
                    n: Some(lv.line.n),
                    branch: lv.line.branch,
                    eps: lv.line.eps,
                    energy: lv.line.energy,
                    paired_with: lv.partner.as_ref().map(level_label),
                    flag,
                });
            }
        }
        Err(Error::NoDiscreteSpectrum(_)) => note = Some("purely continuous spectrum"),
        Err(e) => return Err(e.into()),
    }
    match continuum_branch(ms, p) {
        Ok(cb) => {
            for branch in [Sign::Minus, Sign::Plus] {
                rows.push(SpectrumRow {
                    j: None,
                    mj_degeneracy: None,
                    sigma: None,
                    sector: None,
                    n: None,
                    branch,
                    eps: cb.eps_threshold,
                    energy: branch.as_f64() * cb.threshold,
                    paired_with: None,
                    flag: Some("continuum"),
                });
            }
        }
        Err(Error::PurelyDiscrete(_)) => {}
        Err(e) => return Err(e.into()),
    }
    rows.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    let body = match cfg.format {
        Format::Json => {
            let mut doc = header(cfg, "spectrum");
            doc.push(("jmax".into(), Json::str(format_half_integer(cfg.twice_j_max))));
            doc.push(("nmax".into(), Json::Int(cfg.n_max as i64)));
            let opt_str = |s: Option<String>| s.map_or(Json::Null, Json::Str);
            let json_rows = rows
                .iter()
                .map(|r| {
                    Json::obj([
                        ("model", Json::str(ms.name())),
                        ("j", opt_str(r.j.clone())),
                        ("mj_degeneracy", r.mj_degeneracy.map_or(Json::Null, |d| Json::Int(d as i64))),
                        ("sigma", opt_str(r.sigma.map(|s| sign_str(s).to_string()))),
                        ("sector", opt_str(r.sector.map(|s| sign_str(s).to_string()))),
                        ("n", r.n.map_or(Json::Null, |n| Json::Int(n as i64))),
                        ("branch", Json::str(sign_str(r.branch))),
                        ("epsilon", Json::Num(r.eps)),
                        ("energy", Json::Num(r.energy)),
                        ("paired_with", opt_str(r.paired_with.clone())),
                        ("flag", opt_str(r.flag.map(str::to_string))),
                    ])
                })
                .collect();
            doc.push(("rows".into(), Json::Arr(json_rows)));
            doc.push(("note".into(), note.map_or(Json::Null, Json::str)));
            Json::Obj(doc).render()
        }
        Format::Csv => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        ms.name().to_string(),
                        r.j.clone().unwrap_or_default(),
                        r.mj_degeneracy.map(|d| d.to_string()).unwrap_or_default(),
                        r.sigma.map(|s| sign_str(s).to_string()).unwrap_or_default(),
                        r.sector.map(|s| sign_str(s).to_string()).unwrap_or_default(),
                        r.n.map(|n| n.to_string()).unwrap_or_default(),
                        sign_str(r.branch).to_string(),
                        csv_float(r.eps),
                        csv_float(r.energy),
                        r.paired_with.clone().unwrap_or_default(),
                        r.flag.unwrap_or_default().to_string(),
                    ]
                })
                .collect();
            render_csv(&SPECTRUM_COLUMNS, &table)
        }
    };
    let (code, diagnostics) = match note {
        Some(n) => (EXIT_FAILURE, vec![format!("{}: {n}; only continuum thresholds reported", ms.name())]),
        None => (EXIT_OK, Vec::new()),
    };
    Ok(Outcome { body, code, diagnostics })
}

fn opt_complex(z: Option<Complex64>) -> Json {
    z.map_or(Json::Null, Json::complex)
}

fn kernel_params(ms: &ModelSpec, q: &ResolventQuery, cfg: &RunConfig) -> Result<Option<KernelParams>, CliError> {
    Ok(match ms {
        ModelSpec::DiracOscillator { omega } => Some(KernelParams::oscillator(q, *omega, &cfg.params)),
        ModelSpec::LinearSuperpotential { gamma } => Some(KernelParams::linear(q, *gamma, &cfg.params)?),
        _ => None,
    })
}

/// `greens`: radial sector kernel (with `--zeta`) or 4×4 Dirac Green's function (with `--z`).
pub fn greens(cfg: &RunConfig, s: &Settings) -> Result<Outcome, CliError> {
    match (s.get("z"), s.get("zeta")) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --z (4×4 Green's function) or --zeta (radial kernel)".into())),
        (Some(_), None) => greens_matrix(cfg, s),
        (None, Some(_)) => greens_radial(cfg, s),
        (None, None) => Err(CliError::Usage("greens needs --zeta (radial kernel) or --z (4×4 Green's function)".into())),
    }
}

fn greens_radial(cfg: &RunConfig, s: &Settings) -> Result<Outcome, CliError> {
    let zeta = s.required("zeta", parse_complex)?;
    let ch = s.required("channel", parse_channel)?;
    let sector = s.required("sector", parse_sign)?;
    let r1 = s.required("r1", positive)?;
    let r2 = s.required("r2", positive)?;
    let ms = &cfg.model;
    if !ms.is_spherical() {
        return Err(CliError::Usage(format!("radial kernels need a spherical model, got {}", ms.name())));
    }
    let q = ResolventQuery::new(zeta, r1, r2, ch, sector)?;
    let kp = kernel_params(ms, &q, cfg)?;
    let value = radial_kernel(ms, &q, &cfg.params)?;
    let mu = susy_dirac::resolvent::mu_of_zeta(zeta, &cfg.params);
    let body = match cfg.format {
        Format::Json => {
            let mut doc = header(cfg, "greens");
            doc.push(("kind".into(), Json::str("radial")));
            doc.push(("channel".into(), channel_json(ch)));
            doc.push(("sector".into(), Json::str(sign_str(sector))));
            doc.push(("zeta".into(), Json::complex(zeta)));
            doc.push(("r1".into(), Json::Num(r1)));
            doc.push(("r2".into(), Json::Num(r2)));
            doc.push(("value".into(), Json::complex(value)));
            let params = match kp {
                Some(k) => Json::obj([
                    ("mu", Json::complex(k.mu)),
                    ("nu", Json::complex(k.nu)),
                    ("rho", Json::Num(k.rho)),
                    ("lambda", k.lambda.map_or(Json::Null, Json::Num)),
                    ("omega", opt_complex(k.omega)),
                    ("mu_pm_sq", opt_complex(k.mu_pm_sq)),
                ]),
                None => Json::obj([
                    ("mu", Json::complex(mu)),
                    ("nu", Json::Null),
                    ("rho", Json::Null),
                    ("lambda", Json::Null),
                    ("omega", Json::Null),
                    ("mu_pm_sq", Json::Null),
                ]),
            };
            doc.push(("kernel_params".into(), params));
            Json::Obj(doc).render()
        }
        Format::Csv => {
            let (nu, rho) = kp.map_or((None, None), |k| (Some(k.nu), Some(k.rho)));
            let opt = |x: Option<f64>| x.map(csv_float).unwrap_or_default();
            render_csv(
                &["zeta_re", "zeta_im", "r1", "r2", "value_re", "value_im", "mu_re", "mu_im", "nu_re", "nu_im", "rho"],
                &[vec![
                    csv_float(zeta.re),
                    csv_float(zeta.im),
                    csv_float(r1),
                    csv_float(r2),
                    csv_float(value.re),
                    csv_float(value.im),
                    csv_float(mu.re),
                    csv_float(mu.im),
                    opt(nu.map(|v| v.re)),
                    opt(nu.map(|v| v.im)),
                    opt(rho),
                ]],
            )
        }
    };
    Ok(Outcome { body, code: EXIT_OK, diagnostics: Vec::new() })
}

fn greens_matrix(cfg: &RunConfig, s: &Settings) -> Result<Outcome, CliError> {
    let z = s.required("z", parse_complex)?;
    let x1 = s.required("p1", parse_vec3)?;
    let x2 = s.required("p2", parse_vec3)?;
    let ms = &cfg.model;
    let p = &cfg.params;
    if !ms.is_spherical() {
        return Err(CliError::Usage(format!("the 4×4 Green's function needs a three-dimensional model, got {}", ms.name())));
    }
    let zeta = z * z;
    let mut pw_jmax = None;
    let matrix: Mat4 = match ms {
        ModelSpec::FreeDirac => free_dirac_green(x1, x2, z, p)?,
        ModelSpec::FreeDiracBrokenSusy => {
            dirac_green_blocks(free_sector_kernel(zeta, p), free_sector_kernel(zeta, p), z, ms, p)?.eval(x1, x2)?
        }
        _ => {
            let tj = s.parsed("pw-jmax", parse_half_integer)?.unwrap_or(DEFAULT_PW_TWICE_JMAX);
            if tj % 2 != 1 {
                return Err(CliError::Usage("--pw-jmax: j must be a positive odd half-integer".into()));
            }
            pw_jmax = Some(tj);
            let gp = partial_wave_sector_kernel(ms, Sign::Plus, zeta, tj, p);
            let gm = partial_wave_sector_kernel(ms, Sign::Minus, zeta, tj, p);
            dirac_green_blocks(gp, gm, z, ms, p)?.eval(x1, x2)?
        }
    };
    let free_kernel = match ms {
        ModelSpec::FreeDirac | ModelSpec::FreeDiracBrokenSusy => Some(free_iterated_kernel(x1, x2, zeta, p)?),
        _ => None,
    };
    let body = match cfg.format {
        Format::Json => {
            let mut doc = header(cfg, "greens");
            doc.push(("kind".into(), Json::str("dirac")));
            doc.push(("z".into(), Json::complex(z)));
            doc.push(("zeta".into(), Json::complex(zeta)));
            doc.push(("p1".into(), Json::Arr(x1.iter().map(|&v| Json::Num(v)).collect())));
            doc.push(("p2".into(), Json::Arr(x2.iter().map(|&v| Json::Num(v)).collect())));
            doc.push(("partial_wave_jmax".into(), pw_jmax.map_or(Json::Null, |t| Json::str(format_half_integer(t)))));
            doc.push(("iterated_kernel".into(), opt_complex(free_kernel)));
            let rows = matrix.iter().map(|row| Json::Arr(row.iter().map(|&v| Json::complex(v)).collect())).collect();
            doc.push(("matrix".into(), Json::Arr(rows)));
            Json::Obj(doc).render()
        }
        Format::Csv => {
            let mut table = Vec::new();
            for (i, row) in matrix.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    table.push(vec![i.to_string(), k.to_string(), csv_float(v.re), csv_float(v.im)]);
                }
            }
            render_csv(&["row", "col", "re", "im"], &table)
        }
    };
    Ok(Outcome { body, code: EXIT_OK, diagnostics: Vec::new() })
}

fn default_channel(ms: &ModelSpec, s: &Settings) -> Result<Channel, CliError> {
    match s.parsed("channel", parse_channel)? {
        Some(ch) => Ok(ch),
        None if ms.is_one_dimensional() => Ok(Channel::radial(1, Sign::Plus)?),
        None => Err(CliError::Usage("missing --channel".into())),
    }
}

/// `states`: `r` and the complex upper and lower radial components of a Dirac eigenstate.
pub fn states(cfg: &RunConfig, s: &Settings) -> Result<Outcome, CliError> {
    let ms = &cfg.model;
    let p = &cfg.params;
    let ch = default_channel(ms, s)?;
    let sector = s.required("sector", parse_sign)?;
    let n = u32::try_from(s.required("n", count)?).map_err(|_| CliError::Usage("--n: too large".into()))?;
    let branch = s.parsed("branch", parse_sign)?.unwrap_or(sector);
    let line = SpectralLine::new(ms, ch, sector, n, branch, p)?;
    let base = level_grid(ms, ch, sector, n, p)?;
    let grid = RadialGrid::uniform(base.r_min(), cfg.r_max.unwrap_or(base.r_max()), cfg.points.unwrap_or(base.len()))?;
    let state = build_4spinor(&line, p, &grid)?;
    let rs = grid.points();
    let up = state.upper.radial.values();
    let lo = state.lower.radial.values();
    let format = if s.get("format").is_some() { cfg.format } else { Format::Csv };
    let body = match format {
        Format::Csv => {
            let table: Vec<Vec<String>> = (0..rs.len())
                .map(|i| {
                    vec![csv_float(rs[i]), csv_float(up[i].re), csv_float(up[i].im), csv_float(lo[i].re), csv_float(lo[i].im)]
                })
                .collect();
            render_csv(&["r", "upper_re", "upper_im", "lower_re", "lower_im"], &table)
        }
        Format::Json => {
            let mut doc = header(cfg, "states");
            doc.push(("upper_channel".into(), channel_json(state.upper.ch)));
            doc.push(("lower_channel".into(), channel_json(state.lower.ch)));
            doc.push(("sector".into(), Json::str(sign_str(sector))));
            doc.push(("n".into(), Json::Int(n as i64)));
            doc.push(("branch".into(), Json::str(sign_str(branch))));
            doc.push(("epsilon".into(), Json::Num(line.eps)));
            doc.push(("energy".into(), Json::Num(line.energy)));
            let col = |f: &dyn Fn(usize) -> f64| Json::Arr((0..rs.len()).map(|i| Json::Num(f(i))).collect());
            doc.push(("r".into(), col(&|i| rs[i])));
            doc.push(("upper_re".into(), col(&|i| up[i].re)));
            doc.push(("upper_im".into(), col(&|i| up[i].im)));
            doc.push(("lower_re".into(), col(&|i| lo[i].re)));
            doc.push(("lower_im".into(), col(&|i| lo[i].im)));
            Json::Obj(doc).render()
        }
    };
    Ok(Outcome { body, code: EXIT_OK, diagnostics: Vec::new() })
}

/// `poles`: kernel poles of one channel in a real `ζ` window.
pub fn poles(cfg: &RunConfig, s: &Settings) -> Result<Outcome, CliError> {
    let ms = &cfg.model;
    let p = &cfg.params;
    let ch = s.required("channel", parse_channel)?;
    let sector = s.required("sector", parse_sign)?;
    let window = match s.parsed("window", parse_window)? {
        Some(w) => w,
        None => match ms {
            ModelSpec::DiracOscillator { omega } => {
                let mc2 = p.mc2();
                (0.0, mc2 * mc2 + 4.0 * mc2 * p.hbar * omega * (cfg.n_max as f64 + 1.5))
            }
            ModelSpec::LinearSuperpotential { .. } => (0.0, continuum_branch(ms, p)?.threshold.powi(2)),
            _ => return Err(CliError::Usage(format!("--window is required for model {}", ms.name()))),
        },
    };
    let scan = pole_scan(ms, ch, sector, window, p)?;
    let method = match scan.method {
        PoleScanMethod::Analytic => "analytic",
        PoleScanMethod::Peak => "peak",
    };
    let index = |k: usize| scan.indices.get(k).copied();
    let body = match cfg.format {
        Format::Json => {
            let mut doc = header(cfg, "poles");
            doc.push(("channel".into(), channel_json(ch)));
            doc.push(("sector".into(), Json::str(sign_str(sector))));
            doc.push(("window".into(), Json::Arr(vec![Json::Num(window.0), Json::Num(window.1)])));
            doc.push(("method".into(), Json::str(method)));
            let items = scan
                .poles
                .iter()
                .enumerate()
                .map(|(k, &z)| {
                    Json::obj([
                        ("n", index(k).map_or(Json::Null, |n| Json::Int(n as i64))),
                        ("zeta", Json::Num(z)),
                        ("energy", if z >= 0.0 { Json::Num(z.sqrt()) } else { Json::Null }),
                    ])
                })
                .collect();
            doc.push(("poles".into(), Json::Arr(items)));
            doc.push(("truncation".into(), scan.truncation.clone().map_or(Json::Null, Json::Str)));
            Json::Obj(doc).render()
        }
        Format::Csv => {
            let table: Vec<Vec<String>> = scan
                .poles
                .iter()
                .enumerate()
                .map(|(k, &z)| {
                    vec![
                        index(k).map(|n| n.to_string()).unwrap_or_default(),
                        csv_float(z),
                        if z >= 0.0 { csv_float(z.sqrt()) } else { String::new() },
                    ]
                })
                .collect();
            render_csv(&["n", "zeta", "energy"], &table)
        }
    };
    let diagnostics = scan.truncation.iter().map(|t| format!("note: {t}")).collect();
    Ok(Outcome { body, code: EXIT_OK, diagnostics })
}

/// `verify`: runs a suite, rescales tolerances by `tol-scale`, emits the merged report.
pub fn verify(cfg: &RunConfig, s: &Settings) -> Result<Outcome, CliError> {
    let suite: Suite = s
        .get("suite")
        .unwrap_or("all")
        .parse()
        .map_err(|e: Error| CliError::Usage(format!("--suite: {e}")))?;
    let seed = s.parsed("seed", count)?.unwrap_or(SuiteConfig::default().seed);
    let timing = s.parsed("timing", boolean)?.unwrap_or(false);
    let suite_cfg = SuiteConfig {
        params: cfg.params,
        model: s.get("model").map(|_| cfg.model.name().to_string()),
        seed,
    };
    if susy_dirac::oracles::suite_jobs(suite, &suite_cfg).is_empty() {
        return Err(CliError::Usage(format!("suite {suite} has no jobs for model {}", cfg.model.name())));
    }
    let mut reports = run_suite(suite, &suite_cfg);
    if cfg.tol_scale != 1.0 {
        for r in &mut reports {
            for c in &mut r.checks {
                if c.tolerance > 0.0 {
                    c.tolerance *= cfg.tol_scale;
                    c.pass = c.measured <= c.tolerance;
                }
            }
        }
    }
    let mut diagnostics = Vec::new();
    for r in &reports {
        for c in r.failed() {
            let note = c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
            diagnostics.push(format!("FAILED {}: {}: measured {:.3e}, tolerance {:.1e}{note}", r.name, c.name, c.measured, c.tolerance));
        }
    }
    let pass = !reports.is_empty() && reports.iter().all(|r| r.pass());
    let body = match cfg.format {
        Format::Json => merged_json(&reports, timing),
        Format::Csv => {
            let mut sorted: Vec<_> = reports.iter().collect();
            sorted.sort_by(|a, b| a.name.cmp(&b.name));
            let table: Vec<Vec<String>> = sorted
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(|c| {
                        vec![r.name.clone(), c.name.clone(), csv_float(c.measured), csv_float(c.tolerance), c.pass.to_string()]
                    })
                })
                .collect();
            render_csv(&["report", "check", "measured", "tolerance", "pass"], &table)
        }
    };
    if !pass {
        diagnostics.push(format!("verification failed: {} failed check(s)", diagnostics.len()));
    }
    Ok(Outcome { body, code: if pass { EXIT_OK } else { EXIT_FAILURE }, diagnostics })
}
