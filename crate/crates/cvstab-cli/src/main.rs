//! `cvstab`: construct, validate, convert and simulate continuous-variable
//! stabilizer codes from the command line.
//!
//! Exit codes: 0 on success, 1 on a domain failure (invalid code, UNSAT
//! lift, failed check or decode), 2 on usage or parse errors.

use clap::{Args, Parser, Subcommand};
use cvstab::channel::{parse_model, parse_shift_spec, MeasurementNoise};
use cvstab::code::{logical_basis, syndrome_observables, LogicalBasis, StabilizerCode};
use cvstab::decode::{
    check_single_mode_correctability, decode_min_norm, decode_single_mode, evaluate_correction,
    syndrome, FamilyReport, Syndrome,
};
use cvstab::format::{parse_code_file, render_code_file};
use cvstab::lift::{lift_logicals, lift_signs, parse_binary_code_file, verify_lift};
use cvstab::numfmt::sig12;
use cvstab::sim::{
    run_trials, sweep, write_summary_csv, write_trials_csv, DecoderKind, SimConfig, SweepGrid,
};
use cvstab::{builtin, builtin_names};
use std::fs;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cvstab",
    version,
    about = "Continuous-variable stabilizer code toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a builtin code in the cvstab text format.
    Show { name: String },
    /// Validate a cvstab file: isotropy and rank, exactly.
    Validate { file: String },
    /// Derive and print the logical pairs of a code file.
    Logicals { file: String },
    /// Print a basis of the symplectic complement of a code file.
    Complement { file: String },
    /// Lift a binary code file (Pauli strings or cvbits) to a CV code.
    Lift {
        file: String,
        /// Node budget for the sign search.
        #[arg(long, default_value_t = cvstab::lift::DEFAULT_NODE_BUDGET)]
        max_nodes: u64,
    },
    /// Compute the syndrome of a shift error.
    Syndrome {
        /// Builtin name or cvstab file path.
        code: String,
        /// Shift literal, e.g. mode=1,q=0.3,p=-0.1 (1-based mode).
        #[arg(long)]
        error: String,
    },
    /// Decode a syndrome (or a known error) back to a correction.
    Decode {
        /// Builtin name or cvstab file path.
        code: String,
        /// Comma-separated syndrome values.
        #[arg(long, conflicts_with = "error", allow_hyphen_values = true)]
        syndrome: Option<String>,
        /// Shift literal; its syndrome is decoded and the result is scored
        /// against it.
        #[arg(long)]
        error: Option<String>,
        #[arg(long, default_value = "single-mode")]
        decoder: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Certify single-mode correctability, overall and per quadrature.
    Check {
        /// Builtin name or cvstab file path.
        code: String,
    },
    /// Monte Carlo run; writes summary CSV to --csv or standard output.
    Simulate {
        /// Builtin name or cvstab file path.
        code: String,
        #[command(flatten)]
        sim: SimArgs,
        /// Per-trial CSV log path.
        #[arg(long)]
        trials_csv: Option<String>,
    },
    /// Sweep the model sigma or the measurement noise over a grid.
    Sweep {
        /// Builtin name or cvstab file path.
        code: String,
        #[command(flatten)]
        sim: SimArgs,
        /// Comma-separated model sigma grid.
        #[arg(long, conflicts_with = "sigma_m_grid")]
        sigma_grid: Option<String>,
        /// Comma-separated measurement noise grid.
        #[arg(long)]
        sigma_m_grid: Option<String>,
    },
}

#[derive(Args)]
struct SimArgs {
    /// Error model spec, e.g. single-mode-gaussian:sigma=0.5,restrict=q
    #[arg(long)]
    model: String,
    #[arg(long, default_value = "single-mode")]
    decoder: String,
    /// Measurement noise on each syndrome component.
    #[arg(long, default_value_t = 0.0)]
    sigma_m: f64,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Success tolerance on the logical displacement.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Summary CSV path; standard output when omitted.
    #[arg(long)]
    csv: Option<String>,
}

/// A failure carrying the process exit code mandated by the contract.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<cvstab::Error> for Failure {
    fn from(e: cvstab::Error) -> Self {
        let code = match &e {
            cvstab::Error::Parse { .. }
            | cvstab::Error::UnknownBuiltin(_)
            | cvstab::Error::InvalidModel(_)
            | cvstab::Error::InvalidParameter(_)
            | cvstab::Error::SyndromeLength { .. } => 2,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

/// Resolve a builtin name or a cvstab file path to a code and basis.
fn resolve_code(arg: &str) -> Result<(StabilizerCode, LogicalBasis), Failure> {
    if builtin_names().contains(&arg) {
        let b = builtin(arg)?;
        return Ok((b.code, b.basis));
    }
    let parsed = parse_code_file(&read_file(arg)?)?;
    let basis = parsed.resolve_basis()?;
    Ok((parsed.code, basis))
}

fn parse_float_list(s: &str, what: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Failure::usage(format!("`{t}` is not a number in {what}")))
        })
        .collect()
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Show { name } => show(&name),
        Command::Validate { file } => validate(&file),
        Command::Logicals { file } => logicals(&file),
        Command::Complement { file } => complement(&file),
        Command::Lift { file, max_nodes } => lift(&file, max_nodes),
        Command::Syndrome { code, error } => syndrome_cmd(&code, &error),
        Command::Decode {
            code,
            syndrome,
            error,
            decoder,
            tol,
        } => decode_cmd(&code, syndrome.as_deref(), error.as_deref(), &decoder, tol),
        Command::Check { code } => check_cmd(&code),
        Command::Simulate {
            code,
            sim,
            trials_csv,
        } => simulate_cmd(&code, &sim, trials_csv.as_deref()),
        Command::Sweep {
            code,
            sim,
            sigma_grid,
            sigma_m_grid,
        } => sweep_cmd(&code, &sim, sigma_grid.as_deref(), sigma_m_grid.as_deref()),
    }
}

fn show(name: &str) -> Result<(), Failure> {
    let b = builtin(name).map_err(|_| {
        Failure::usage(format!(
            "unknown builtin `{name}`; available: {}",
            builtin_names().join(", ")
        ))
    })?;
    let mut comments = vec![format!(
        "{name}: n={}, k={}, logical modes={}",
        b.code.n(),
        b.code.k(),
        b.code.logical_modes()
    )];
    for obs in syndrome_observables(&b.code) {
        comments.push(obs.to_string());
    }
    comments.extend(b.notes.iter().map(ToString::to_string));
    print!("{}", render_code_file(&b.code, Some(&b.basis), &comments));
    Ok(())
}

fn validate(file: &str) -> Result<(), Failure> {
    let text = read_file(file)?;
    match parse_code_file(&text) {
        Ok(parsed) => {
            println!(
                "PASS n={} k={} logical-modes={}",
                parsed.code.n(),
                parsed.code.k(),
                parsed.code.logical_modes()
            );
            Ok(())
        }
        Err(e @ cvstab::Error::Parse { .. }) => Err(e.into()),
        Err(e) => {
            println!("FAIL {e}");
            Err(Failure::domain(String::new()))
        }
    }
}

fn logicals(file: &str) -> Result<(), Failure> {
    let parsed = parse_code_file(&read_file(file)?)?;
    let basis = logical_basis(&parsed.code);
    for (x, z) in basis.pairs() {
        println!("logical x {x}");
        println!("logical z {z}");
    }
    Ok(())
}

fn complement(file: &str) -> Result<(), Failure> {
    let parsed = parse_code_file(&read_file(file)?)?;
    let wo = parsed.code.complement();
    println!("# dim W^omega = {} (2n - k)", wo.dim());
    for v in wo.basis() {
        println!("basis {v}");
    }
    Ok(())
}

fn lift(file: &str, max_nodes: u64) -> Result<(), Failure> {
    let parsed = parse_binary_code_file(&read_file(file)?)?;
    let assignment = match lift_signs(&parsed.checks, max_nodes) {
        Ok(a) => a,
        Err(e @ cvstab::Error::LiftUnsat { .. }) => {
            println!("UNSAT");
            return Err(e.into());
        }
        Err(e @ cvstab::Error::LiftBudgetExceeded { .. }) => {
            println!("BUDGET");
            return Err(e.into());
        }
        Err(e) => return Err(e.into()),
    };
    let code = verify_lift(&parsed.checks, &assignment)?;
    let mut comments = vec![format!(
        "lifted from {file}: n={}, k={}",
        code.n(),
        code.k()
    )];
    if !parsed.logicals.is_empty() {
        let lifted = lift_logicals(&parsed.logicals, &code, max_nodes)?;
        comments.push("lifted logical rows (unpaired):".to_string());
        for v in &lifted {
            comments.push(format!("lifted logical {v}"));
        }
    }
    print!("{}", render_code_file(&code, None, &comments));
    Ok(())
}

fn syndrome_cmd(code_arg: &str, error_spec: &str) -> Result<(), Failure> {
    let (code, _basis) = resolve_code(code_arg)?;
    let e = parse_shift_spec(error_spec, code.n())?;
    let s = syndrome(&code, &e)?;
    println!("{}", format_tuple(s.values()));
    Ok(())
}

fn format_tuple(values: &[f64]) -> String {
    let inner: Vec<String> = values.iter().map(|&x| sig12(x)).collect();
    format!("({})", inner.join(", "))
}

fn decode_cmd(
    code_arg: &str,
    syndrome_spec: Option<&str>,
    error_spec: Option<&str>,
    decoder: &str,
    tol: f64,
) -> Result<(), Failure> {
    let (code, basis) = resolve_code(code_arg)?;
    let decoder: DecoderKind = decoder.parse()?;
    let true_error = error_spec
        .map(|spec| parse_shift_spec(spec, code.n()))
        .transpose()?;
    let s = match (syndrome_spec, &true_error) {
        (Some(spec), _) => {
            let values = parse_float_list(spec, "--syndrome")?;
            Syndrome::new(&code, values)?
        }
        (None, Some(e)) => syndrome(&code, e)?,
        (None, None) => return Err(Failure::usage("decode needs --syndrome or --error")),
    };

    let (correction, mut ok) = match decoder {
        DecoderKind::SingleMode => {
            let d = decode_single_mode(&code, &s, tol)?;
            println!(
                "mode {}, q-shift {}, p-shift {}",
                d.mode + 1,
                sig12(d.correction.s()[d.mode]),
                sig12(d.correction.t()[d.mode])
            );
            println!("syndrome-residual {}", sig12(d.residual_norm));
            (d.correction, d.syndrome_match)
        }
        DecoderKind::MinNorm => {
            let e = decode_min_norm(&code, &s)?;
            let fmt = |xs: &[f64]| xs.iter().map(|&x| sig12(x)).collect::<Vec<_>>().join(" ");
            println!("correction {} | {}", fmt(e.s()), fmt(e.t()));
            let back = syndrome(&code, &e)?;
            let residual: f64 = back
                .values()
                .iter()
                .zip(s.values())
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            println!("syndrome-residual {}", sig12(residual));
            (e, residual <= tol)
        }
    };

    if let Some(error) = true_error {
        let result = evaluate_correction(&code, &basis, &error, correction, tol)?;
        println!(
            "logical-displacement {}",
            format_tuple(&result.logical_displacement)
        );
        ok = result.success;
    }
    println!("{}", if ok { "success" } else { "failure" });
    if ok {
        Ok(())
    } else {
        Err(Failure::domain(String::new()))
    }
}

fn print_family(label: &str, report: &FamilyReport) {
    println!("{label}: {}", if report.pass { "PASS" } else { "FAIL" });
    for f in &report.failures {
        println!(
            "  modes ({}, {}) witness: {}",
            f.modes.0 + 1,
            f.modes.1 + 1,
            f.witness
        );
    }
}

fn check_cmd(code_arg: &str) -> Result<(), Failure> {
    let (code, basis) = resolve_code(code_arg)?;
    let report = check_single_mode_correctability(&code, &basis)?;
    print_family("q", &report.q_only);
    print_family("p", &report.p_only);
    print_family("arbitrary", &report.arbitrary);
    if report.arbitrary.pass {
        Ok(())
    } else {
        Err(Failure::domain(String::new()))
    }
}

fn sim_config(sim: &SimArgs) -> Result<SimConfig, Failure> {
    Ok(SimConfig {
        decoder: sim.decoder.parse()?,
        noise: MeasurementNoise::new(sim.sigma_m)?,
        trials: sim.trials,
        seed: sim.seed,
        tolerance: sim.tol,
    })
}

fn write_csv(path: Option<&str>, content: &[u8]) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, content).map_err(Into::into),
        None => std::io::stdout().write_all(content).map_err(Into::into),
    }
}

fn simulate_cmd(code_arg: &str, sim: &SimArgs, trials_csv: Option<&str>) -> Result<(), Failure> {
    let (code, basis) = resolve_code(code_arg)?;
    let model = parse_model(&sim.model, code.n())?;
    let cfg = sim_config(sim)?;
    let mut log = Vec::new();
    let summary = run_trials(&code, &basis, &model, &cfg, trials_csv.map(|_| &mut log))?;

    let mut buf = Vec::new();
    write_summary_csv(&mut buf, &[(model.primary_sigma(), &summary)], cfg.seed)
        .map_err(Failure::from)?;
    write_csv(sim.csv.as_deref(), &buf)?;
    if let Some(path) = trials_csv {
        let mut tbuf = Vec::new();
        write_trials_csv(&mut tbuf, &log).map_err(Failure::from)?;
        fs::write(path, tbuf)?;
    }
    eprintln!(
        "trials={} failures={} failure-rate={} max-logical-disp={} wall-time={:?}",
        summary.trials,
        summary.failures(),
        sig12(summary.failure_rate),
        sig12(summary.max_logical_disp),
        summary.wall_time
    );
    Ok(())
}

fn sweep_cmd(
    code_arg: &str,
    sim: &SimArgs,
    sigma_grid: Option<&str>,
    sigma_m_grid: Option<&str>,
) -> Result<(), Failure> {
    let (code, basis) = resolve_code(code_arg)?;
    let model = parse_model(&sim.model, code.n())?;
    let cfg = sim_config(sim)?;
    let grid = match (sigma_grid, sigma_m_grid) {
        (Some(g), None) => SweepGrid::ModelSigma(parse_float_list(g, "--sigma-grid")?),
        (None, Some(g)) => SweepGrid::MeasurementSigma(parse_float_list(g, "--sigma-m-grid")?),
        _ => {
            return Err(Failure::usage(
                "sweep needs exactly one of --sigma-grid or --sigma-m-grid",
            ))
        }
    };
    let rows = sweep(&code, &basis, &model, &grid, &cfg)?;
    let mut buf = Vec::new();
    let refs: Vec<(f64, &cvstab::sim::SimSummary)> = rows.iter().map(|(p, s)| (*p, s)).collect();
    write_summary_csv(&mut buf, &refs, cfg.seed).map_err(Failure::from)?;
    write_csv(sim.csv.as_deref(), &buf)?;
    Ok(())
}
