//! The `ugap` command line: argument grammar, dispatch and JSON output.
//!
//! Every invocation prints one JSON document (`gap table` prints one per
//! line) of the form `{schema_version, command, inputs, output, exit_code}`.
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

pub mod grammar;
pub mod render;

use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ugap_core::combinatorics::{
    dim_schur, skew_count, ssyt_brute, weyl_dimension, Partition, SkewShape, BRUTE_CELL_CAP,
};
use ugap_core::gap::{certify_analytic, certify_gap, DEFAULT_D_CAP, DEFAULT_WEIGHT_CAP};
use ugap_core::peak::{build_product_peak, verify};
use ugap_core::rational;
use ugap_montecarlo as mc;

use render::{envelope, float, q};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ugap", version, about = "Spectral gaps and peak sets on unitary groups")]
pub struct Cli {
    /// Worker threads (default: all cores). `--threads 1` runs serially.
    #[arg(long, global = true, env = "UGAP_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur polynomial counts at the all-ones point.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// Evaluate central spectra.
    #[command(subcommand)]
    Spectrum(SpectrumCmd),
    /// Spectral-gap certificates for Rider's measures.
    #[command(subcommand)]
    Gap(GapCmd),
    /// Peak-set plans on products of unitary groups.
    #[command(subcommand)]
    Peak(PeakCmd),
    /// Monte Carlo estimates over Haar-random unitaries.
    #[command(subcommand)]
    Mc(McCmd),
}

#[derive(Subcommand, Debug)]
pub enum SchurCmd {
    /// s_λ(1^m): semistandard tableaux of shape λ with entries ≤ m.
    Dim {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        vars: usize,
    },
    /// s_{λ/μ}(1^m).
    Skew {
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
        #[arg(long)]
        vars: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpectrumCmd {
    /// Fourier coefficient of a spectrum at a signature.
    Eval {
        #[arg(long)]
        spec: String,
        /// `lambda=..;d=..` or `m1,..,mn`; `|` between factors.
        #[arg(long)]
        sig: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GapCmd {
    /// Certificate for ν_n with an exhaustive cross-check.
    Certify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_WEIGHT_CAP)]
        weight_cap: u32,
        #[arg(long, default_value_t = DEFAULT_D_CAP)]
        d_cap: u32,
        /// Skip the enumeration.
        #[arg(long)]
        analytic_only: bool,
    },
    /// One analytic certificate per n, newline-delimited.
    Table {
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        /// Also enumerate up to this weight (and d cap) for each n.
        #[arg(long)]
        weight_cap: Option<u32>,
        #[arg(long)]
        d_cap: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PeakCmd {
    /// Peak plan for {σ on one factor} in ∏ U(d_k).
    Plan {
        #[arg(long)]
        dims: String,
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        no_verify: bool,
        #[arg(long, default_value_t = 6)]
        weight_cap: u32,
        #[arg(long, default_value_t = 6)]
        d_cap: u32,
        #[arg(long, default_value_t = 2)]
        max_nontrivial: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum McCmd {
    /// E|tr u|^p on U(d).
    Moments {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Even-moment ψ₂ proxy of Re tr u on U(d).
    Psi2 {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = mc::DEFAULT_PSI2_MAX_P)]
        max_p: u32,
    },
    /// Moment-generating-function check for Re tr u on U(d).
    Subgaussian {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Largest E|f|^p / (E|f|²)^{p/2} for f = Σ x_k tr u_k.
    Khintchine {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        dims: String,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
    /// P(Re tr u > δd) with an exact binomial interval.
    Tail {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        /// Compare with e·θ^{d²}.
        #[arg(long)]
        theta: Option<f64>,
    },
}

/// A command's result before it is wrapped in the envelope.
struct Outcome {
    name: &'static str,
    inputs: Value,
    output: Value,
    ok: bool,
}

enum Failure {
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<Outcome, Failure>;

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>().map_err(Failure::from)
}

fn parse_rational(s: &str) -> Result<rational::Rational, Failure> {
    rational::parse(s).ok_or_else(|| Failure::Usage(format!("expected a rational, got {s:?}")))
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.threads {
        Some(0) => {
            let _ = writeln!(err, "error: --threads must be at least 1");
            EXIT_USAGE
        }
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => {
                let (mut o, mut e) = (Vec::new(), Vec::new());
                let code = pool.install(|| dispatch(cli.command, &mut o, &mut e));
                let _ = out.write_all(&o);
                let _ = err.write_all(&e);
                code
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        None => dispatch(cli.command, out, err),
    }
}

fn emit(out: &mut dyn Write, doc: &Value) {
    let _ = writeln!(out, "{doc}");
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Command::Gap(GapCmd::Table {
        n_from,
        n_to,
        weight_cap,
        d_cap,
    }) = command
    {
        return gap_table(n_from, n_to, weight_cap, d_cap, out, err);
    }
    let result = match command {
        Command::Schur(c) => schur(c),
        Command::Spectrum(c) => spectrum(c),
        Command::Gap(c) => gap(c),
        Command::Peak(c) => peak(c),
        Command::Mc(c) => montecarlo(c),
    };
    match result {
        Ok(o) => {
            let code = if o.ok { EXIT_OK } else { EXIT_VERIFY };
            emit(out, &envelope(o.name, o.inputs, o.output, code));
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn schur(c: SchurCmd) -> CmdResult {
    match c {
        SchurCmd::Dim { lambda, vars } => {
            let l = parse_partition(&lambda)?;
            let count = dim_schur(&l, vars);
            let weyl = weyl_dimension(&l, vars);
            let shape = SkewShape::straight(l.clone());
            let brute = (shape.cells() <= BRUTE_CELL_CAP)
                .then(|| ssyt_brute(&shape, vars))
                .transpose()?;
            let ok = count == weyl && brute.as_ref().is_none_or(|b| *b == count);
            Ok(Outcome {
                name: "schur dim",
                inputs: json!({"lambda": l.to_string(), "vars": vars}),
                output: json!({
                    "count": count.to_string(),
                    "weyl_product": weyl.to_string(),
                    "brute_force": brute.map(|b| b.to_string()),
                    "agree": ok,
                }),
                ok,
            })
        }
        SchurCmd::Skew { outer, inner, vars } => {
            let shape = SkewShape::new(parse_partition(&outer)?, parse_partition(&inner)?)?;
            let count = skew_count(&shape, vars);
            let brute = (shape.cells() <= BRUTE_CELL_CAP)
                .then(|| ssyt_brute(&shape, vars))
                .transpose()?;
            let ok = brute.as_ref().is_none_or(|b| *b == count);
            Ok(Outcome {
                name: "schur skew",
                inputs: json!({
                    "outer": shape.outer().to_string(),
                    "inner": shape.inner().to_string(),
                    "vars": vars,
                }),
                output: json!({
                    "count": count.to_string(),
                    "brute_force": brute.map(|b| b.to_string()),
                    "agree": ok,
                }),
                ok,
            })
        }
    }
}

fn spectrum(c: SpectrumCmd) -> CmdResult {
    let SpectrumCmd::Eval { spec, sig } = c;
    let s = grammar::parse_spectrum(&spec)?;
    let pi = grammar::parse_product_signature(&sig, s.group())?;
    let value = s.eval(&pi)?;
    Ok(Outcome {
        name: "spectrum eval",
        inputs: json!({"spec": s.to_string(), "sig": pi.to_string()}),
        output: json!({
            "value": q(&value),
            "value_float": float(rational::to_f64(&value)),
            "tv_bound": q(s.tv_bound()),
        }),
        ok: true,
    })
}

fn gap(c: GapCmd) -> CmdResult {
    match c {
        GapCmd::Certify {
            n,
            weight_cap,
            d_cap,
            analytic_only,
        } => {
            let cert = if analytic_only {
                certify_analytic(n)?
            } else {
                certify_gap(n, weight_cap, d_cap)?
            };
            Ok(Outcome {
                name: "gap certify",
                inputs: json!({
                    "n": n,
                    "weight_cap": (!analytic_only).then_some(weight_cap),
                    "d_cap": (!analytic_only).then_some(d_cap),
                }),
                output: render::certificate(&cert),
                ok: cert.verdict,
            })
        }
        GapCmd::Table { .. } => unreachable!("streamed separately"),
    }
}

fn gap_table(
    n_from: usize,
    n_to: usize,
    weight_cap: Option<u32>,
    d_cap: Option<u32>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if n_from > n_to {
        let _ = writeln!(err, "error: --n-from must not exceed --n-to");
        return EXIT_USAGE;
    }
    let mut code = EXIT_OK;
    for n in n_from..=n_to {
        let cert = match weight_cap {
            Some(w) => certify_gap(n, w, d_cap.unwrap_or(w)),
            None => certify_analytic(n),
        };
        let cert = match cert {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "error: n={n}: {e}");
                return EXIT_USAGE;
            }
        };
        let row_code = if cert.verdict { EXIT_OK } else { EXIT_VERIFY };
        code = code.max(row_code);
        let output = json!({
            "n": n,
            "delta": q(&cert.delta),
            "delta_conjugate": q(&cert.delta_conjugate),
            "gamma_analytic": q(&cert.gamma_analytic),
            "gamma_float": float(rational::to_f64(&cert.gamma_analytic)),
            "enumeration_max": cert.enumeration.as_ref().map(|e| q(&e.max_value)),
            "verdict": cert.verdict,
            "failure": cert.failure,
        });
        emit(
            out,
            &envelope(
                "gap table",
                json!({"n": n, "weight_cap": weight_cap, "d_cap": weight_cap.map(|w| d_cap.unwrap_or(w))}),
                output,
                row_code,
            ),
        );
    }
    code
}

fn peak(c: PeakCmd) -> CmdResult {
    let PeakCmd::Plan {
        dims,
        epsilon,
        no_verify,
        weight_cap,
        d_cap,
        max_nontrivial,
    } = c;
    let dims = grammar::parse_dims(&dims)?;
    let target = parse_rational(&epsilon)?;
    let plan = build_product_peak(&dims, &target)?;
    let mut ok = plan.audit_ok() && plan.epsilon <= target;
    let verification = if no_verify {
        Value::Null
    } else {
        let v = verify(&plan, weight_cap, d_cap, max_nontrivial)?;
        ok &= v.ok;
        render::verification(&v, weight_cap, d_cap, max_nontrivial)
    };
    let mut output = render::plan(&plan);
    output["verification"] = verification;
    Ok(Outcome {
        name: "peak plan",
        inputs: json!({"dims": dims, "epsilon": q(&target)}),
        output,
        ok,
    })
}

fn montecarlo(c: McCmd) -> CmdResult {
    match c {
        McCmd::Moments { d, p, samples, seed } => {
            let s = mc::trace_moments(d, p, samples, seed)?;
            let exact = mc::moment_oracle(d, p / 2) as f64;
            let mut output = render::stats(&s);
            output["exact"] = float(exact);
            output["within_3_stderr"] = json!(s.covers(exact));
            Ok(Outcome {
                name: "mc moments",
                inputs: json!({"d": d, "p": p, "samples": samples, "seed": seed}),
                output,
                ok: true,
            })
        }
        McCmd::Psi2 {
            d,
            samples,
            seed,
            max_p,
        } => {
            let xs: Vec<f64> = mc::sample_traces(d, samples, seed)?
                .iter()
                .map(|t| t.re)
                .collect();
            let prof = mc::psi2_profile(&xs, max_p)?;
            Ok(Outcome {
                name: "mc psi2",
                inputs: json!({"d": d, "samples": samples, "seed": seed, "max_p": max_p}),
                output: json!({
                    "estimator": "max over even p of p^(-1/2) (E|Re tr u|^p)^(1/p)",
                    "estimate": float(prof.value),
                    "argmax_p": prof.argmax_p,
                    "per_p": prof.per_p.iter().map(|(p, v)| json!({"p": p, "value": float(*v)})).collect::<Vec<_>>(),
                }),
                ok: true,
            })
        }
        McCmd::Subgaussian { d, s, samples, seed } => {
            let xs: Vec<f64> = mc::sample_traces(d, samples, seed)?
                .iter()
                .map(|t| t.re)
                .collect();
            let r = mc::sg_check(&xs, s, &mc::default_t_grid())?;
            Ok(Outcome {
                name: "mc subgaussian",
                inputs: json!({"d": d, "s": float(s), "samples": samples, "seed": seed}),
                output: json!({
                    "mean": float(r.mean),
                    "mean_stderr": float(r.mean_stderr),
                    "rows": r.rows.iter().map(|row| json!({
                        "t": float(row.t),
                        "mgf": float(row.mgf),
                        "stderr": float(row.stderr),
                        "bound": float(row.bound),
                        "pass": row.pass,
                    })).collect::<Vec<_>>(),
                    "pass": r.pass,
                }),
                ok: true,
            })
        }
        McCmd::Khintchine {
            p,
            dims,
            trials,
            samples,
            seed,
        } => {
            let dims = grammar::parse_dims(&dims)?;
            let r = mc::khintchine_estimate(p, &dims, trials, samples, seed)?;
            Ok(Outcome {
                name: "mc khintchine",
                inputs: json!({"p": p, "dims": dims, "trials": trials, "samples": samples, "seed": seed}),
                output: json!({
                    "moment_ratio": render::stats(&r.best),
                    "norm_convention": float(r.norm_convention),
                    "gaussian_moment_ratio": float(r.gaussian_ratio),
                    "gaussian_norm_convention": float(r.gaussian_norm),
                    "best_coefficients": r.best_coefficients.iter().map(|x| float(*x)).collect::<Vec<_>>(),
                    "ratios": r.ratios.iter().map(|x| float(*x)).collect::<Vec<_>>(),
                }),
                ok: true,
            })
        }
        McCmd::Tail {
            d,
            delta,
            samples,
            seed,
            theta,
        } => {
            let r = mc::tail_check(d, delta, samples, seed, theta)?;
            Ok(Outcome {
                name: "mc tail",
                inputs: json!({"d": d, "delta": float(delta), "samples": samples, "seed": seed, "theta": theta.map(float)}),
                output: json!({
                    "events": r.events,
                    "empirical": float(r.empirical),
                    "confidence": float(r.confidence),
                    "interval": [float(r.interval.0), float(r.interval.1)],
                    "exact": r.exact.map(float),
                    "exact_in_interval": r.exact_in_interval(),
                    "bound_rhs": r.bound_rhs.map(float),
                    "consistent": r.consistent,
                    "vacuous": r.vacuous,
                    "verdict": r.verdict,
                }),
                ok: true,
            })
        }
    }
}
