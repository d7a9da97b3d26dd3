//! Command-line front end.
//!
//! Every subcommand renders its whole output to a string before anything is
//! written, so sweeps may run in parallel while the bytes stay fixed for a
//! given set of flags.

use crate::classifier::{classify, classify_modulated, Status};
use crate::error::{Error, Result};
use crate::frame_bounds::{
    exp_system_bounds, frame_bounds_subspace, gamma_of_xi, upper_beurling_density, witness_values,
    FrameBoundEstimate, FrequencySet, SubspaceOptions,
};
use crate::sampling_lab::{derivative_recovery, even_subspace_bound, full_space_min_rayleigh, run_dynamical, DynExperiment};
use crate::toeplitz_ops::{analysis_section, hankel_section, spectral_summary, toeplitz_section};
use crate::windows::{builtin, WindowKind, WindowSpec, Xi};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use std::fmt::Write as _;

#[derive(Debug, Parser)]
#[command(name = "framescope", version, about = "Classify split windowed-exponential systems and measure their frame bounds")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SectionKind {
    Toeplitz,
    Hankel,
    Analysis,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    /// Built-in window name or window JSON.
    #[arg(long)]
    pub window: Option<String>,
    /// Modulation parameter, a float or an exact `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verdict JSON for a window or a modulation parameter.
    Classify(WindowArgs),
    /// Subspace frame bounds of F(g) over a sweep of M.
    Bounds {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long = "M", value_delimiter = ',', default_values_t = [4usize, 8, 16, 32])]
        m: Vec<usize>,
        /// Negative indices summed exactly before the tail bound.
        #[arg(long, default_value_t = 4096)]
        cutoff: usize,
    },
    /// Subspace frame bounds of an exponential system over a sweep of M.
    Expsys {
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        /// Frequency set JSON (rays and extra points).
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long = "M", value_delimiter = ',', default_values_t = [4usize, 8, 16, 32])]
        m: Vec<usize>,
        /// Elements enumerated per ray.
        #[arg(long, default_value_t = 2048)]
        cutoff: usize,
    },
    /// Finite-section dump (csv) or spectral summary (json).
    Spectrum {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum, default_value_t = SectionKind::Toeplitz)]
        section: SectionKind,
    },
    /// Inner products of the witness function against the shifted system.
    Witness {
        #[arg(long)]
        t: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = -5)]
        n_lo: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 5)]
        n_hi: i64,
    },
    /// Dynamical-sampling recovery of seeded random sequences.
    Dynsample {
        /// One of delta, cosine, sawtooth; all three when omitted.
        #[arg(long, value_delimiter = ',')]
        experiment: Vec<String>,
        #[arg(long = "N", value_delimiter = ',', default_values_t = [8usize, 16, 32])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [0u64])]
        seed: Vec<u64>,
        /// Standard deviation of additive complex Gaussian noise.
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
    },
    /// Derivative-sampling stability over a sweep of M.
    Derivsample {
        #[arg(long = "M", value_delimiter = ',', default_values_t = [8usize])]
        m: Vec<usize>,
        /// Restrict to even real trigonometric polynomials.
        #[arg(long)]
        even: bool,
        /// Number of derivative samples at n = -1, …, -N.
        #[arg(long = "N", default_value_t = 256)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [0u64])]
        seed: Vec<u64>,
    },
    /// Upper Beurling density of a frequency set.
    Density {
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        #[arg(long)]
        gamma: Option<String>,
    },
}

fn invalid(field: &str, msg: impl Into<String>) -> Error {
    Error::InvalidArgument { field: field.into(), msg: msg.into() }
}

fn parse_window(s: &str) -> Result<WindowSpec> {
    if s.trim_start().starts_with('{') {
        WindowSpec::from_json(s)
    } else {
        builtin(s).ok_or_else(|| invalid("window", format!("unknown window `{s}`")))
    }
}

/// The window named by `--window` or `--xi` (exactly one), with a label for
/// CSV rows.
fn resolve_window(args: &WindowArgs) -> Result<(WindowSpec, String)> {
    match (&args.window, &args.xi) {
        (Some(w), None) => {
            let spec = parse_window(w)?;
            let label = if builtin(w).is_some() { w.clone() } else { "custom".into() };
            Ok((spec, label))
        }
        (None, Some(x)) => Ok((WindowSpec::modulated(Xi::parse(x)?), "modulated".into())),
        (Some(_), Some(_)) => Err(invalid("window", "give either --window or --xi, not both")),
        (None, None) => Err(invalid("window", "one of --window or --xi is required")),
    }
}

fn resolve_gamma(xi: &Option<String>, gamma: &Option<String>) -> Result<(FrequencySet, Option<Xi>)> {
    match (xi, gamma) {
        (Some(x), None) => {
            let xi = Xi::parse(x)?;
            Ok((gamma_of_xi(xi.value()), Some(xi)))
        }
        (None, Some(g)) => {
            let set: FrequencySet = serde_json::from_str(g).map_err(|e| invalid("gamma", e.to_string()))?;
            for r in &set.rays {
                crate::frame_bounds::Ray::new(r.offset, r.direction, r.start).map_err(|e| invalid("gamma", e.to_string()))?;
            }
            Ok((set, None))
        }
        (Some(_), Some(_)) => Err(invalid("gamma", "give either --xi or --gamma, not both")),
        (None, None) => Err(invalid("gamma", "one of --xi or --gamma is required")),
    }
}

fn window_xi(w: &WindowSpec) -> String {
    match w.kind() {
        WindowKind::Modulated(xi) => xi.to_string(),
        _ => String::new(),
    }
}

fn bounds_output(label: &str, xi: &str, verdict: Status, rows: &[FrameBoundEstimate], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("window,xi,M,A_M,B_M,tail,rigorous,verdict\n");
            for e in rows {
                let _ = writeln!(
                    out,
                    "{label},{xi},{},{},{},{},{},{}",
                    e.m,
                    num(e.a_m),
                    num(e.b_m),
                    num(e.tail),
                    e.rigorous,
                    verdict.as_str()
                );
            }
            out
        }
        Format::Json => {
            let v = json!({ "window": label, "xi": xi, "verdict": verdict, "estimates": rows });
            format!("{v}\n")
        }
    }
}

/// Shortest round-trip form, in exponent notation for very small or large
/// magnitudes.
fn num(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || !a.is_finite() || (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn sorted_unique<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v.dedup();
    v
}

const DYN_HEADER: &str = "experiment,N,seed,relative_error,condition_number,residual";

/// Runs one subcommand and returns its full output.
pub fn execute(cfg: &RunConfig) -> Result<String> {
    let format = cfg.format;
    match &cfg.command {
        Command::Classify(args) => {
            let verdict = match (&args.window, &args.xi) {
                (None, Some(x)) => classify_modulated(Xi::parse(x)?),
                _ => classify(&resolve_window(args)?.0),
            };
            Ok(match format {
                Format::Json => format!("{}\n", verdict.to_json()),
                Format::Csv => {
                    let flag = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
                    format!(
                        "status,injective,bounded_below,invertible\n{},{},{},{}\n",
                        verdict.status.as_str(),
                        flag(verdict.toeplitz.injective),
                        flag(verdict.toeplitz.bounded_below),
                        flag(verdict.toeplitz.invertible)
                    )
                }
            })
        }
        Command::Bounds { window, m, cutoff } => {
            let (w, label) = resolve_window(window)?;
            let opts = SubspaceOptions { truncation: *cutoff };
            let ms = sorted_unique(m);
            let rows = ms.par_iter().map(|&m| frame_bounds_subspace(&w, m, opts)).collect::<Result<Vec<_>>>()?;
            Ok(bounds_output(&label, &window_xi(&w), classify(&w).status, &rows, format))
        }
        Command::Expsys { xi, gamma, m, cutoff } => {
            let (set, xi) = resolve_gamma(xi, gamma)?;
            if *cutoff == 0 {
                return Err(invalid("cutoff", "must be positive"));
            }
            let ms = sorted_unique(m);
            let rows = ms.par_iter().map(|&m| exp_system_bounds(&set, m, *cutoff)).collect::<Result<Vec<_>>>()?;
            let verdict = xi.map(|x| classify_modulated(x).status).unwrap_or(Status::Unknown);
            let xi_text = xi.map(|x| x.to_string()).unwrap_or_default();
            Ok(bounds_output("gamma", &xi_text, verdict, &rows, format))
        }
        Command::Spectrum { window, n, section } => {
            let (w, label) = resolve_window(window)?;
            let s = match section {
                SectionKind::Toeplitz => toeplitz_section(&w, *n)?,
                SectionKind::Hankel => hankel_section(&w, *n)?,
                SectionKind::Analysis => analysis_section(&w, *n)?,
            };
            Ok(match format {
                Format::Csv => s.to_csv(),
                Format::Json => {
                    let v = json!({
                        "window": label,
                        "section": s.recipe.name(),
                        "N": n,
                        "rows": s.rows(),
                        "cols": s.cols(),
                        "summary": spectral_summary(&s)?,
                    });
                    format!("{v}\n")
                }
            })
        }
        Command::Witness { t, n_lo, n_hi } => {
            if n_lo > n_hi {
                return Err(invalid("n-lo", "must not exceed --n-hi"));
            }
            let vals = witness_values(*t, *n_lo, *n_hi)?;
            let nu = |n: i64| if n >= 0 { n as f64 + t } else { -((-n) as f64 + t) };
            Ok(match format {
                Format::Csv => {
                    let mut out = String::from("t,n,nu,re,im,abs\n");
                    for (n, v) in vals {
                        let _ = writeln!(out, "{t},{n},{},{},{},{}", nu(n), num(v.re), num(v.im), num(v.norm()));
                    }
                    out
                }
                Format::Json => {
                    let rows: Vec<_> = vals
                        .iter()
                        .map(|(n, v)| json!({ "n": n, "nu": nu(*n), "re": v.re, "im": v.im, "abs": v.norm() }))
                        .collect();
                    format!("{}\n", json!({ "t": t, "values": rows }))
                }
            })
        }
        Command::Dynsample { experiment, n, seed, noise } => {
            if !(noise.is_finite() && *noise >= 0.0) {
                return Err(invalid("noise", "must be a nonnegative number"));
            }
            let exps = if experiment.is_empty() {
                DynExperiment::ALL.to_vec()
            } else {
                let parsed = experiment
                    .iter()
                    .map(|e| DynExperiment::parse(e).ok_or_else(|| invalid("experiment", format!("unknown experiment `{e}`"))))
                    .collect::<Result<Vec<_>>>()?;
                sorted_unique(&parsed)
            };
            let grid: Vec<(DynExperiment, usize, u64)> = exps
                .iter()
                .flat_map(|&e| sorted_unique(n).into_iter().flat_map(move |n| seed.iter().map(move |&s| (e, n, s))))
                .collect();
            let mut grid = grid;
            grid.sort();
            grid.dedup();
            let reports = grid
                .par_iter()
                .map(|&(e, n, s)| run_dynamical(e, n, s, *noise).map(|r| (e, s, r)))
                .collect::<Result<Vec<_>>>()?;
            Ok(match format {
                Format::Csv => {
                    let mut out = format!("{DYN_HEADER}\n");
                    for (e, s, r) in &reports {
                        let _ = writeln!(
                            out,
                            "{},{},{s},{},{},{}",
                            e.name(),
                            r.n,
                            num(r.relative_error),
                            num(r.condition_number),
                            num(r.residual)
                        );
                    }
                    out
                }
                Format::Json => {
                    let rows: Vec<_> = reports
                        .iter()
                        .map(|(e, s, r)| json!({ "experiment": e.name(), "seed": s, "report": r }))
                        .collect();
                    format!("{}\n", serde_json::Value::Array(rows))
                }
            })
        }
        Command::Derivsample { m, even, n, seed } => {
            let name = if *even { "derivative_even" } else { "derivative_full" };
            let grid: Vec<(usize, u64)> = sorted_unique(m)
                .into_iter()
                .flat_map(|m| sorted_unique(seed).into_iter().map(move |s| (m, s)))
                .collect();
            let rows = grid
                .par_iter()
                .map(|&(m, s)| {
                    let r = derivative_recovery(m, *n, s, *even)?;
                    let q = if *even { even_subspace_bound(m)? } else { full_space_min_rayleigh(m)? };
                    Ok((m, s, r, q))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(match format {
                Format::Csv => {
                    let mut out = format!("{DYN_HEADER},M,min_rayleigh\n");
                    for (m, s, r, q) in &rows {
                        let _ = writeln!(
                            out,
                            "{name},{},{s},{},{},{},{m},{q}",
                            r.n,
                            num(r.relative_error),
                            num(r.condition_number),
                            num(r.residual)
                        );
                    }
                    out
                }
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(m, s, r, q)| json!({ "experiment": name, "seed": s, "M": m, "min_rayleigh": q, "report": r }))
                        .collect();
                    format!("{}\n", serde_json::Value::Array(v))
                }
            })
        }
        Command::Density { xi, gamma } => {
            let (set, xi) = resolve_gamma(xi, gamma)?;
            let d = upper_beurling_density(&set);
            let label = xi.map(|x| x.to_string()).unwrap_or_default();
            Ok(match format {
                Format::Csv => format!("xi,density\n{label},{d}\n"),
                Format::Json => format!("{}\n", json!({ "xi": label, "density": d })),
            })
        }
    }
}

/// Parses arguments, runs, writes output and returns the process exit code:
/// 0 on success, 2 for invalid input, 3 for numerical failure.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cfg) {
        Ok(text) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, text),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(text.as_bytes())
                }
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    2
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_numerical() {
                3
            } else {
                2
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<String> {
        let cfg = RunConfig::try_parse_from(std::iter::once("framescope").chain(args.iter().copied())).unwrap();
        execute(&cfg)
    }

    #[test]
    fn classify_negative_xi() {
        let out = exec(&["classify", "--xi", "-0.75", "--format", "json"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "Incomplete");
    }

    #[test]
    fn flag_conflicts_name_the_field() {
        let err = exec(&["bounds", "--window", "sign", "--xi", "0.1"]).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument { ref field, .. } if field == "window"));
        let err = exec(&["bounds", "--window", "gaussian"]).unwrap_err();
        assert!(err.to_string().contains("window"));
        let err = exec(&["expsys", "--M", "4"]).unwrap_err();
        assert!(err.to_string().contains("gamma"));
        assert!(exec(&["witness", "--t", "0.2"]).is_err());
    }

    #[test]
    fn bounds_rows_are_sorted_by_m() {
        let out = exec(&["bounds", "--window", "constant2", "--M", "8,2,4"]).unwrap();
        let ms: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
        assert_eq!(ms, vec!["2", "4", "8"]);
    }

    #[test]
    fn gamma_json_is_accepted() {
        let g = r#"{"rays":[{"offset":0.0,"direction":1,"start":0},{"offset":0.0,"direction":-1,"start":1}]}"#;
        let out = exec(&["expsys", "--gamma", g, "--M", "2", "--cutoff", "64"]).unwrap();
        assert!(out.lines().nth(1).unwrap().starts_with("gamma,,2,"));
        let out = exec(&["density", "--gamma", g]).unwrap();
        assert_eq!(out, "xi,density\n,1\n");
        let bad = r#"{"rays":[{"offset":0.0,"direction":2,"start":0}]}"#;
        assert!(exec(&["density", "--gamma", bad]).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["framescope", "classify", "--xi", "abc"]), 2);
        assert_eq!(run(["framescope", "frobnicate"]), 2);
        let dir = std::env::temp_dir().join(format!("framescope-exit-{}", std::process::id()));
        let out = dir.with_extension("csv");
        let out = out.to_str().unwrap();
        assert_eq!(run(["framescope", "dynsample", "--experiment", "sawtooth", "--N", "8", "--out", out]), 3);
        assert_eq!(run(["framescope", "dynsample", "--experiment", "delta", "--N", "4", "--out", out]), 0);
        let _ = std::fs::remove_file(out);
    }
}
