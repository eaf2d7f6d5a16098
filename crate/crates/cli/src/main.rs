mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mtzeta::Complex64;

use commands::{CoeffKind, Failure, IdentityKind, IdentityOptions, Outcome};
use config::{ConfigFlags, Format, RunConfig};
use output::{envelope, error_exit_code, error_record, usage_record};

#[derive(Parser, Debug)]
#[command(
    name = "mtzeta",
    version,
    about = "Mordell-Tornheim zeta values, omega limits and finite analogues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: ConfigFlags,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    t.parse::<Complex64>()
        .ok()
        .filter(|z| z.re.is_finite() && z.im.is_finite())
        .ok_or_else(|| format!("not a complex number: {s:?} (use a+bi)"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate zeta_MT(s1, s2; s3).
    EvalMt {
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s1: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s2: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s3: Complex64,
    },
    /// Evaluate omega_U(s1, s2, s3).
    EvalOmegaU {
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s1: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s2: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s3: Complex64,
    },
    /// Directed limit of omega_U at (-m1, -m2, -m3).
    LimitSweep { m1: u32, m2: u32, m3: u32 },
    /// Table of the b and c coefficients.
    Coeffs {
        #[arg(long, default_value_t = 4)]
        max_m: u32,
    },
    /// Exact identity verification.
    IdentityCheck {
        #[arg(value_enum)]
        kind: IdentityKind,
        #[arg(long, default_value_t = 8)]
        max_m: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        max_abs_k: i64,
    },
    /// Generating-series checks at the configured degree.
    SeriesCheck,
    /// Finite omega residues omega_p(k1, k2, k3) mod p.
    Finite {
        #[arg(allow_hyphen_values = true)]
        k1: i64,
        #[arg(allow_hyphen_values = true)]
        k2: i64,
        #[arg(allow_hyphen_values = true)]
        k3: i64,
    },
    /// Classify a point against the singular set of omega_U.
    Singularity {
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s1: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s2: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        s3: Complex64,
        #[arg(long, value_enum)]
        coeff: Option<CoeffKind>,
        #[arg(long, default_value_t = 0)]
        l: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::EvalMt { .. } => "eval-mt",
            Command::EvalOmegaU { .. } => "eval-omega-u",
            Command::LimitSweep { .. } => "limit-sweep",
            Command::Coeffs { .. } => "coeffs",
            Command::IdentityCheck { .. } => "identity-check",
            Command::SeriesCheck => "series-check",
            Command::Finite { .. } => "finite",
            Command::Singularity { .. } => "singularity",
        }
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome, Failure> {
        commands::check_format(cfg.format, matches!(self, Command::LimitSweep { .. }))?;
        match *self {
            Command::EvalMt { s1, s2, s3 } => commands::eval_mt([s1, s2, s3], cfg),
            Command::EvalOmegaU { s1, s2, s3 } => commands::eval_omega_u([s1, s2, s3], cfg),
            Command::LimitSweep { m1, m2, m3 } => commands::sweep([m1, m2, m3], cfg),
            Command::Coeffs { max_m } => commands::coeffs(max_m),
            Command::IdentityCheck {
                kind,
                max_m,
                samples,
                max_abs_k,
            } => commands::identity_check(
                kind,
                &IdentityOptions {
                    max_m,
                    samples,
                    max_abs_k,
                },
                cfg,
            ),
            Command::SeriesCheck => commands::series_check(cfg),
            Command::Finite { k1, k2, k3 } => commands::finite([k1, k2, k3], cfg),
            Command::Singularity {
                s1,
                s2,
                s3,
                coeff,
                l,
            } => commands::singularity([s1, s2, s3], coeff, l),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = cli.command.name();
    let cfg = match RunConfig::resolve(&cli.flags) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let format = cfg.format;
    let config_json = cfg.to_json();
    let (doc, text, csv, code) = match cli.command.run(&cfg) {
        Ok(o) => {
            let code = if o.violation { 3 } else { 0 };
            let doc = envelope(command, o.inputs, config_json, o.outputs, None);
            (doc, Some(o.text), o.csv, code)
        }
        Err(Failure::Usage(msg)) => {
            let doc = envelope(
                command,
                serde_json::Value::Null,
                config_json,
                serde_json::Value::Null,
                Some(usage_record(&msg)),
            );
            (doc, None, None, 1)
        }
        Err(Failure::Eval { inputs, error }) => {
            let code = error_exit_code(&error);
            let doc = envelope(
                command,
                inputs,
                config_json,
                serde_json::Value::Null,
                Some(error_record(&error)),
            );
            (doc, None, None, code)
        }
    };
    match (format, text, csv) {
        (Format::Json, _, _) => println!("{}", serde_json::to_string_pretty(&doc).expect("json")),
        (Format::Csv, _, Some(csv)) => print!("{csv}"),
        (_, Some(text), _) => print!("{text}"),
        _ => {
            let msg = doc["error"]["message"].as_str().unwrap_or("failed");
            eprintln!("error: {msg}");
        }
    }
    ExitCode::from(code as u8)
}
