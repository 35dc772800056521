//! Command line front end for the hochster library: parse an ideal file,
//! dispatch one computation, print text or JSON to stdout. Errors go to
//! stderr as a single line; the exit code separates bad input (1), internal
//! inconsistencies (2), and resource limits (3).

use std::io::{Read as _, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hochster::betti::{betti_geq_k, closed_form_truncation_betti, hochster_betti};
use hochster::hilbert::{hilbert_numerator_geq_truncation, hilbert_numerator_monomial};
use hochster::invariants::{
    has_linear_resolution, is_componentwise_linear, k_index, min_linear_truncation,
    quotient_regularity, regularity,
};
use hochster::polarization::{betti_monomial, polarize};
use hochster::truncation::{f_vector_truncated, squarefree_truncate, truncate_geq};
use hochster::{Error, FieldChar, MonomialIdeal, Result, SweepConfig};

#[derive(Parser)]
#[command(
    name = "hochster",
    version,
    about = "Graded Betti tables, Hilbert numerators, and linearity invariants \
             of monomial ideals and their truncations"
)]
struct Cli {
    /// Field characteristic for homology: 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0, value_name = "P")]
    ch: u64,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the parallel sweeps; affects wall time only.
    #[arg(long, global = true, value_name = "T")]
    threads: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Graded Betti table of the quotient by the ideal or a truncation.
    Betti {
        /// oracle sweeps the complex; closed-form and geq compute the
        /// degree-k truncated table without ever building the truncation.
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Truncation degree. With oracle or closed-form this selects the
        /// squarefree truncation; with geq, the degree truncation.
        #[arg(long, value_name = "K")]
        k: Option<usize>,
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// Truncate the ideal and print it in the input format.
    Truncate {
        /// sqfree keeps the squarefree degree-k slice plus the higher
        /// generators; geq intersects with the k-th power of the maximal
        /// ideal.
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, value_name = "K")]
        k: usize,
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// f-vector of the ideal's Stanley-Reisner complex.
    Fvector {
        /// Report the complex of the degree-k squarefree truncation instead.
        #[arg(long, value_name = "K")]
        k: Option<usize>,
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// Hilbert series numerator of the quotient.
    Hilbert {
        /// Numerator of the quotient by the degree truncation at K.
        #[arg(long, value_name = "K")]
        geq: Option<usize>,
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// Polarize the ideal; prints the squarefree result and the variable map.
    Polarize {
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// Regularity of the ideal and of its quotient.
    Reg {
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// With --k, test the ideal for a k-linear resolution; without, report
    /// the smallest degree whose squarefree truncation is linear.
    Linear {
        #[arg(long, value_name = "K")]
        k: Option<usize>,
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// Length of the linear prefix of the degree-k truncation's resolution.
    Index {
        #[arg(long, value_name = "K")]
        k: usize,
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// Componentwise linearity check.
    Cwl {
        /// Ideal file, or - for stdin.
        file: String,
    },
    /// Cross-check the closed forms against the sweep oracle on random
    /// ideals. Deterministic for a fixed seed.
    Verify {
        /// Ambient variable count for the sampled ideals.
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Smallest generator degree to sample.
        #[arg(long = "min-deg", default_value_t = 2, value_name = "D")]
        min_deg: usize,
        /// Largest generator degree to sample.
        #[arg(long = "max-deg", default_value_t = 3, value_name = "D")]
        max_deg: usize,
        /// Generators drawn per ideal before normalization.
        #[arg(long = "gens", default_value_t = 4, value_name = "G")]
        gens: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    ClosedForm,
    Geq,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Sqfree,
    Geq,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => return exit_for_clap(e),
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(out.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Ok(()) => ExitCode::SUCCESS,
                // A consumer like `head` closing the pipe early is not an
                // error worth reporting.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Help and version print in full and exit 0; every other parse failure is
/// reported as the one-line diagnostic clap puts first.
fn exit_for_clap(e: clap::Error) -> ExitCode {
    use clap::error::ErrorKind;
    if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
        print!("{e}");
        ExitCode::SUCCESS
    } else {
        let msg = e.to_string();
        eprintln!("{}", msg.lines().next().unwrap_or("error: bad arguments"));
        ExitCode::from(1)
    }
}

/// Runs one subcommand and returns the bytes destined for stdout.
fn run(cli: Cli) -> Result<String> {
    let ch = FieldChar::new(cli.ch)?;
    let json = cli.json;
    match cli.cmd {
        Cmd::Betti { method, k, file } => {
            let ideal = load_ideal(&file)?;
            let table = match method {
                Method::Oracle => match k {
                    None => betti_monomial(&ideal, ch)?,
                    Some(k) => betti_monomial(&squarefree_truncate(&ideal, k)?, ch)?,
                },
                Method::ClosedForm => {
                    let k = require_k(k, "closed-form")?;
                    if !ideal.is_squarefree() {
                        return Err(Error::input(
                            "the closed form needs a squarefree ideal; polarize first",
                        ));
                    }
                    let n = ideal.ambient_vars();
                    let b = hochster_betti(&ideal, ch)?;
                    let f = ideal.stanley_reisner()?.f_vector()?;
                    let fk = f_vector_truncated(&f, n, k.saturating_sub(1));
                    closed_form_truncation_betti(&b, &fk, n, k)?
                }
                Method::Geq => {
                    let k = require_k(k, "geq")?;
                    let b = betti_monomial(&ideal, ch)?;
                    let nm = hilbert_numerator_monomial(&ideal)?;
                    betti_geq_k(&b, &hilbert_numerator_geq_truncation(&nm, k), k)?
                }
            };
            if json {
                json_line(&table)
            } else {
                Ok(table.to_string())
            }
        }
        Cmd::Truncate { mode, k, file } => {
            let ideal = load_ideal(&file)?;
            let out = match mode {
                Mode::Sqfree => squarefree_truncate(&ideal, k)?,
                Mode::Geq => truncate_geq(&ideal, k)?,
            };
            if json {
                json_line(&out)
            } else {
                Ok(out.to_string())
            }
        }
        Cmd::Fvector { k, file } => {
            let ideal = load_ideal(&file)?;
            let f = ideal.stanley_reisner()?.f_vector()?;
            let out = match k {
                None => f,
                Some(k) => {
                    let min = ideal.min_degree().unwrap_or(0);
                    if k < min.max(1) {
                        return Err(Error::input(format!(
                            "truncation degree {k} is below the minimal generator degree {min}"
                        )));
                    }
                    f_vector_truncated(&f, ideal.ambient_vars(), k - 1)
                }
            };
            if json {
                json_line(&out)
            } else {
                Ok(format!("{out}\n"))
            }
        }
        Cmd::Hilbert { geq, file } => {
            let ideal = load_ideal(&file)?;
            let nm = hilbert_numerator_monomial(&ideal)?;
            let out = match geq {
                None => nm,
                Some(k) => hilbert_numerator_geq_truncation(&nm, k),
            };
            if json {
                json_line(&out)
            } else {
                Ok(format!("{out}\n"))
            }
        }
        Cmd::Polarize { file } => {
            let ideal = load_ideal(&file)?;
            let p = polarize(&ideal)?;
            if json {
                json_line(&serde_json::json!({
                    "source_vars": p.source_vars(),
                    "target_vars": p.target_vars(),
                    "ideal": p.ideal(),
                    "slots": p.slots(),
                }))
            } else {
                let mut out = p.ideal().to_string();
                for (pos, &(v, l)) in p.slots().iter().enumerate() {
                    out.push_str(&format!("# x{} = copy {} of source x{}\n", pos + 1, l, v));
                }
                Ok(out)
            }
        }
        Cmd::Reg { file } => {
            let ideal = load_ideal(&file)?;
            let b = betti_monomial(&ideal, ch)?;
            let (ri, rq) = (regularity(&b), quotient_regularity(&b));
            if json {
                json_line(&serde_json::json!({ "ideal": ri, "quotient": rq }))
            } else {
                Ok(format!("reg(I) = {ri}\nreg(R/I) = {rq}\n"))
            }
        }
        Cmd::Linear { k, file } => {
            let ideal = load_ideal(&file)?;
            match k {
                Some(k) => {
                    let b = betti_monomial(&ideal, ch)?;
                    let linear = has_linear_resolution(&b, k);
                    if json {
                        json_line(&serde_json::json!({ "k": k, "linear": linear }))
                    } else {
                        Ok(format!("{linear}\n"))
                    }
                }
                None => {
                    let d = min_linear_truncation(&ideal, ch)?;
                    if json {
                        json_line(&serde_json::json!({ "min_linear_truncation": d }))
                    } else {
                        Ok(format!("{d}\n"))
                    }
                }
            }
        }
        Cmd::Index { k, file } => {
            let ideal = load_ideal(&file)?;
            let b = betti_monomial(&ideal, ch)?;
            let nm = hilbert_numerator_monomial(&ideal)?;
            let table = betti_geq_k(&b, &hilbert_numerator_geq_truncation(&nm, k), k)?;
            let idx = k_index(&table, k);
            if json {
                json_line(&idx)
            } else {
                Ok(format!("{idx}\n"))
            }
        }
        Cmd::Cwl { file } => {
            let ideal = load_ideal(&file)?;
            let verdict = is_componentwise_linear(&ideal, ch)?;
            if json {
                json_line(&verdict)
            } else {
                Ok(format!("{verdict}\n"))
            }
        }
        Cmd::Verify {
            n,
            trials,
            seed,
            min_deg,
            max_deg,
            gens,
        } => {
            let cfg = SweepConfig {
                vars: n,
                trials,
                seed,
                min_degree: min_deg,
                max_degree: max_deg,
                generators: gens,
                ch,
            };
            let report = hochster::run_sweep(&cfg)?;
            if json {
                let checks: Vec<_> = report
                    .lines()
                    .iter()
                    .map(|&(label, passes)| serde_json::json!({ "label": label, "passes": passes }))
                    .collect();
                json_line(&serde_json::json!({
                    "n": n,
                    "trials": trials,
                    "seed": seed,
                    "char": ch.value(),
                    "min_degree": min_deg,
                    "max_degree": max_deg,
                    "generators": gens,
                    "checks": checks,
                }))
            } else {
                Ok(format!("{report}\n"))
            }
        }
    }
}

fn load_ideal(path: &str) -> Result<MonomialIdeal> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::input(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {path}: {e}")))?
    };
    MonomialIdeal::parse(&text)
}

fn require_k(k: Option<usize>, method: &str) -> Result<usize> {
    k.ok_or_else(|| Error::input(format!("--k is required by the {method} method")))
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    let s = serde_json::to_string(value)
        .map_err(|e| Error::inconsistency(format!("json encoding failed: {e}")))?;
    Ok(format!("{s}\n"))
}
