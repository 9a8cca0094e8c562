//! The `hilbertian` command-line front end.
//!
//! Every subcommand reads its inputs, calls the library once and writes the
//! result to `--out` (or stdout).
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (including negative verdicts of `check-psd` / `check-nd`) |
//! | 1 | numerical failure (eigen-solver did not converge) |
//! | 2 | invalid arguments or input files |
//! | 3 | mathematical rejection: `NotPositiveDefinite`, `UnboundedMetric`, `NotHilbertian`; a JSON diagnostic is printed on stdout |

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::features::{approximate_kernel, sample_frequencies};
use crate::gram::{
    build_gram, euclidean_embedding, is_negative_definite, is_positive_definite, nd_to_psd,
    GramMatrix, SymmetricKernelMatrix, DEFAULT_TOL,
};
use crate::io;
use crate::product::{product_synthesis, ProductSpectralMeasure};
use crate::profiles::{
    self, metric_from_kernel, uniform_grid, KernelProfile, ProfileDescriptor, ZOO_NAMES,
};
use crate::spectral::{
    atom_at_zero_with_step, bochner_inversion, bochner_synthesis, gamma_from_spectral,
    int_bound_integral, screw_synthesis, spectral_from_gamma, GammaMeasure, InversionConfig,
    SpectralMeasure, DEFAULT_ATOM_STEP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERIC: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_REJECTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hilbertian",
    version,
    about = "Kernels, Hilbertian metrics and spectral measures on the real line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List zoo kernels or sample one on a grid.
    #[command(subcommand)]
    Zoo(ZooCommand),
    /// Gram matrix of a profile at the points of a CSV file.
    Gram {
        #[arg(long)]
        points: PathBuf,
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Positive definiteness verdict of a matrix.
    CheckPsd {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Negative definiteness verdict of a matrix.
    CheckNd {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Negative definite matrix to positive definite one, relative to a base index.
    NdToPsd {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Euclidean coordinates from a squared-distance matrix.
    Embed {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Squared metric 2k(0) - 2k(t) sampled on a grid.
    ToMetric {
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Spectral measure of a profile.
    Invert {
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        config: InversionArgs,
        /// Where to write the JSON residual report (stderr otherwise).
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Kernel profile of a spectral measure, sampled on a grid.
    Synth {
        #[arg(long)]
        measure: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Squared metric of a gamma measure, sampled on a grid.
    Screw {
        #[arg(long)]
        gamma: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Spectral measure to gamma measure, or back when --k0 is given.
    Gamma {
        #[arg(long)]
        input: PathBuf,
        /// k(0) of the kernel; switches to gamma -> spectral.
        #[arg(long)]
        k0: Option<f64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Compare the gamma integral against 4 k(0).
    BoundCheck {
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long)]
        k0: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Long-run mean of a profile (mass of the spectral atom at zero).
    Atom0 {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, default_value_t = 200.0)]
        window: f64,
        #[arg(long, default_value_t = DEFAULT_ATOM_STEP)]
        step: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Random Fourier feature frequencies for a spectral measure.
    Rff {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long, default_value_t = 1024)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV of x,y pairs; emit approximation errors instead of the sample.
        #[arg(long)]
        pairs: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Evaluate a factored product measure at vector pairs.
    ProductSynth {
        #[arg(long)]
        measure: PathBuf,
        /// JSON array of {"x": [...], "y": [...]}.
        #[arg(long)]
        pairs: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Subcommand)]
enum ZooCommand {
    /// Kernel names and parameters.
    List {
        #[command(flatten)]
        out: OutArgs,
    },
    /// Sample a zoo kernel as t,value CSV.
    Sample {
        #[command(flatten)]
        profile: ProfileArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
struct ProfileArgs {
    /// Zoo kernel name.
    #[arg(long, conflicts_with_all = ["profile", "samples"])]
    kernel: Option<String>,
    /// Kernel parameter KEY=VALUE (repeatable).
    #[arg(long = "param", value_parser = parse_param, requires = "kernel")]
    params: Vec<(String, f64)>,
    /// Profile descriptor JSON {"name": ..., "params": {...}}.
    #[arg(long, conflicts_with = "samples")]
    profile: Option<PathBuf>,
    /// Sampled profile CSV with columns t,value.
    #[arg(long)]
    samples: Option<PathBuf>,
}

impl ProfileArgs {
    fn load(&self) -> Result<KernelProfile> {
        if let Some(name) = &self.kernel {
            let mut d = ProfileDescriptor::new(name.clone());
            for (k, v) in &self.params {
                d.params.insert(k.clone(), *v);
            }
            profiles::from_descriptor(&d)
        } else if let Some(path) = &self.profile {
            profiles::from_descriptor(&io::read_json::<ProfileDescriptor>(path)?)
        } else if let Some(path) = &self.samples {
            let (ts, vs) = io::read_profile_file(path)?;
            KernelProfile::from_samples(ts, vs)
        } else {
            Err(Error::Config(
                "one of --kernel, --profile or --samples is required".into(),
            ))
        }
    }
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, default_value_t = profiles::DEFAULT_GRID_MIN, allow_hyphen_values = true)]
    grid_min: f64,
    #[arg(long, default_value_t = profiles::DEFAULT_GRID_MAX, allow_hyphen_values = true)]
    grid_max: f64,
    #[arg(long, default_value_t = profiles::DEFAULT_GRID_LEN)]
    grid_n: usize,
}

impl GridArgs {
    fn grid(&self) -> Result<Vec<f64>> {
        if self.grid_n == 0 || !(self.grid_max >= self.grid_min) {
            return Err(Error::Config(format!(
                "bad grid [{}, {}] x {}",
                self.grid_min, self.grid_max, self.grid_n
            )));
        }
        Ok(uniform_grid(self.grid_min, self.grid_max, self.grid_n))
    }
}

#[derive(Debug, Args)]
struct InversionArgs {
    #[arg(long, default_value_t = 40.0)]
    t_max: f64,
    #[arg(long, default_value_t = 16_001)]
    n_samples: usize,
    #[arg(long, default_value_t = 2048)]
    bins: usize,
    #[arg(long, default_value_t = 8.0)]
    freq_max: f64,
    /// Long-run mean window T.
    #[arg(long, default_value_t = 200.0)]
    window: f64,
    #[arg(long, default_value_t = DEFAULT_ATOM_STEP)]
    atom_step: f64,
    #[arg(long, default_value_t = 1e-4)]
    clamp_threshold: f64,
    #[arg(long, default_value_t = 1e-2)]
    tail_tolerance: f64,
    /// Disable the analytic extension of inverse-square tails.
    #[arg(long)]
    no_tail_extrapolation: bool,
}

impl From<&InversionArgs> for InversionConfig {
    fn from(a: &InversionArgs) -> Self {
        InversionConfig {
            t_max: a.t_max,
            n_samples: a.n_samples,
            bins: a.bins,
            freq_max: a.freq_max,
            window: a.window,
            atom_step: a.atom_step,
            clamp_threshold: a.clamp_threshold,
            tail_tolerance: a.tail_tolerance,
            tail_extrapolation: !a.no_tail_extrapolation,
        }
    }
}

#[derive(Debug, Args)]
struct OutArgs {
    /// Output file (stdout otherwise).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn parse_param(s: &str) -> std::result::Result<(String, f64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))?;
    let v = v
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("bad value in `{s}`: {e}"))?;
    Ok((k.trim().to_string(), v))
}

#[derive(Deserialize)]
struct VectorPair {
    x: Vec<f64>,
    y: Vec<f64>,
}

/// Runs the CLI with process stdout/stderr and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI against the given writers.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) if e.is_rejection() => {
            let _ = io::write_json(&mut *stdout, &e.to_json());
            EXIT_REJECTED
        }
        Err(e @ Error::Numeric { .. }) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_NUMERIC
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn with_out(
    out: &OutArgs,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match &out.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

fn write_to(path: &Path, f: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    f(&mut w)?;
    w.flush()?;
    Ok(())
}

fn sampled(grid: &[f64], f: impl Fn(f64) -> f64) -> Vec<f64> {
    grid.iter().map(|&t| f(t)).collect()
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match command {
        Command::Zoo(ZooCommand::List { out }) => with_out(&out, stdout, |w| {
            let entries = [
                ("gaussian", json!({"scale": 1.0})),
                ("laplacian", json!({"scale": 1.0})),
                ("cauchy", json!({"scale": 1.0})),
                ("cosine", json!({"omega": 1.0})),
                ("constant", json!({"c": 1.0})),
            ];
            debug_assert_eq!(entries.len(), ZOO_NAMES.len());
            for (name, params) in entries {
                io::write_json(&mut *w, &json!({"name": name, "params": params}))?;
            }
            Ok(())
        }),
        Command::Zoo(ZooCommand::Sample { profile, grid, out }) => {
            let k = profile.load()?;
            let ts = grid.grid()?;
            let vs = ts
                .iter()
                .map(|&t| k.try_eval(t))
                .collect::<Result<Vec<_>>>()?;
            with_out(&out, stdout, |w| io::write_profile(w, &ts, &vs))
        }
        Command::Gram {
            points,
            profile,
            out,
        } => {
            let k = profile.load()?;
            let g = build_gram(&k, &io::read_points_file(&points)?)?;
            with_out(&out, stdout, |w| io::write_matrix(w, g.entries()))
        }
        Command::CheckPsd { matrix, tol, out } => {
            let g = GramMatrix::from_rows(&io::read_matrix_file(&matrix)?)?;
            let v = is_positive_definite(&g, tol)?;
            with_out(&out, stdout, |w| {
                io::write_json(
                    w,
                    &json!({
                        "psd": v.verdict,
                        "witness_eigenvalue": v.witness_eigenvalue,
                        "witness_vector": v.witness_vector,
                        "threshold": v.threshold,
                    }),
                )
            })
        }
        Command::CheckNd { matrix, tol, out } => {
            let n = SymmetricKernelMatrix::from_rows(&io::read_matrix_file(&matrix)?)?;
            let v = is_negative_definite(&n, tol)?;
            with_out(&out, stdout, |w| {
                io::write_json(
                    w,
                    &json!({
                        "nd": v.verdict,
                        "witness_eigenvalue": v.witness_eigenvalue,
                        "witness_vector": v.witness_vector,
                        "threshold": v.threshold,
                    }),
                )
            })
        }
        Command::NdToPsd { matrix, base, out } => {
            let n = SymmetricKernelMatrix::from_rows(&io::read_matrix_file(&matrix)?)?;
            let k = nd_to_psd(&n, base)?;
            with_out(&out, stdout, |w| io::write_matrix(w, k.entries()))
        }
        Command::Embed { matrix, tol, out } => {
            let d2 = SymmetricKernelMatrix::from_rows(&io::read_matrix_file(&matrix)?)?;
            let e = euclidean_embedding(&d2, tol)?;
            writeln!(
                stderr,
                "{}",
                json!({"rank": e.rank, "residual": e.residual})
            )?;
            with_out(&out, stdout, |w| io::write_matrix(w, &e.coordinates))
        }
        Command::ToMetric { profile, grid, out } => {
            let d2 = metric_from_kernel(&profile.load()?);
            let ts = grid.grid()?;
            let vs = sampled(&ts, |t| d2.eval(t));
            with_out(&out, stdout, |w| io::write_profile(w, &ts, &vs))
        }
        Command::Invert {
            profile,
            config,
            report,
            out,
        } => {
            let k = profile.load()?;
            let outcome = bochner_inversion(&k, &InversionConfig::from(&config))?;
            match report {
                Some(path) => write_to(&path, |w| io::write_json(w, &outcome.report))?,
                None => io::write_json(&mut *stderr, &outcome.report)?,
            }
            with_out(&out, stdout, |w| io::write_json(w, &outcome.measure))
        }
        Command::Synth { measure, grid, out } => {
            let mu: SpectralMeasure = io::read_json(&measure)?;
            let ts = grid.grid()?;
            let vs = sampled(&ts, |t| bochner_synthesis(&mu, t));
            with_out(&out, stdout, |w| io::write_profile(w, &ts, &vs))
        }
        Command::Screw { gamma, grid, out } => {
            let g: GammaMeasure = io::read_json(&gamma)?;
            let ts = grid.grid()?;
            let vs = sampled(&ts, |t| screw_synthesis(&g, t));
            with_out(&out, stdout, |w| io::write_profile(w, &ts, &vs))
        }
        Command::Gamma { input, k0, out } => match k0 {
            None => {
                let mu: SpectralMeasure = io::read_json(&input)?;
                let split = gamma_from_spectral(&mu);
                writeln!(stderr, "{}", json!({"atom_zero": split.atom_zero}))?;
                with_out(&out, stdout, |w| io::write_json(w, &split.gamma))
            }
            Some(k0) => {
                let g: GammaMeasure = io::read_json(&input)?;
                let mu = spectral_from_gamma(&g, k0)?;
                with_out(&out, stdout, |w| io::write_json(w, &mu))
            }
        },
        Command::BoundCheck { gamma, k0, out } => {
            let g: GammaMeasure = io::read_json(&gamma)?;
            let integral = int_bound_integral(&g);
            let bound = 4.0 * k0;
            let ok = integral <= bound * (1.0 + 1e-12);
            let tight = ok && (integral - bound).abs() <= 1e-10 * bound.abs().max(1.0);
            let integral = if integral.is_finite() {
                json!(integral)
            } else {
                json!(null)
            };
            with_out(&out, stdout, |w| {
                io::write_json(
                    w,
                    &json!({"integral": integral, "bound": bound, "ok": ok, "tight": tight}),
                )
            })
        }
        Command::Atom0 {
            profile,
            window,
            step,
            out,
        } => {
            let k = profile.load()?;
            let a = atom_at_zero_with_step(&k, window, step)?;
            with_out(&out, stdout, |w| {
                io::write_json(w, &json!({"atom0": a, "window": window, "step": step}))
            })
        }
        Command::Rff {
            measure,
            m,
            seed,
            pairs,
            out,
        } => {
            let mu: SpectralMeasure = io::read_json(&measure)?;
            let sample = sample_frequencies(&mu, m, seed)?;
            match pairs {
                None => with_out(&out, stdout, |w| io::write_json(w, &sample)),
                Some(path) => {
                    let rows = io::read_matrix_file(&path)?;
                    with_out(&out, stdout, |w| {
                        writeln!(w, "x,y,approx,exact,abs_error")?;
                        for row in &rows {
                            let [x, y] = row[..] else {
                                return Err(Error::InvalidInput(format!(
                                    "pairs CSV rows need two columns, got {}",
                                    row.len()
                                )));
                            };
                            let approx = approximate_kernel(&sample, x, y);
                            let exact = bochner_synthesis(&mu, x - y);
                            writeln!(
                                w,
                                "{},{},{},{},{}",
                                io::fmt_f64(x),
                                io::fmt_f64(y),
                                io::fmt_f64(approx),
                                io::fmt_f64(exact),
                                io::fmt_f64((approx - exact).abs())
                            )?;
                        }
                        Ok(())
                    })
                }
            }
        }
        Command::ProductSynth {
            measure,
            pairs,
            out,
        } => {
            let m: ProductSpectralMeasure = io::read_json(&measure)?;
            let pairs: Vec<VectorPair> = io::read_json(&pairs)?;
            let values = pairs
                .iter()
                .map(|p| {
                    if p.x.len() != p.y.len() {
                        return Err(Error::DimensionMismatch {
                            expected: p.x.len(),
                            got: p.y.len(),
                        });
                    }
                    let t: Vec<f64> = p.x.iter().zip(&p.y).map(|(a, b)| a - b).collect();
                    product_synthesis(&m, &t)
                })
                .collect::<Result<Vec<_>>>()?;
            with_out(&out, stdout, |w| {
                io::write_json(w, &json!({"values": values}))
            })
        }
    }
}
