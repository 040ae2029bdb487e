//! Command-line front end for `tmrec`.
//!
//! Word arguments are digit strings read left to right as letters 1, 2, …
//! of the word. Letter 1 is the least significant digit of the matrix
//! index, so `"01"` over the binary alphabet names index 2, not 1.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tmrec::SignSequence;

pub mod commands;
pub mod report;

use commands::CliError;
pub use report::{Row, Summary, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tmrec",
    version,
    about = "Thue-Morse Hankel determinants and recurrence matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compare det H(n+1) with the folding product for 0 ≤ n ≤ max-n.
    VerifyDet {
        #[arg(long)]
        max_n: usize,
        /// Signs σ_0 σ_1 … as a string over {+,-}; unlisted positions are +.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
    },
    /// Check H = L·U and the factor shapes on unfoldings up to the given depth.
    VerifyLu {
        #[arg(long)]
        depth: usize,
    },
    /// J-fraction coefficients of the Thue-Morse series against the closed rules.
    Jfraction {
        #[arg(long)]
        count: usize,
    },
    /// Hankel determinants of the β sequence.
    BetaHankel {
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        offset: usize,
    },
    /// Hankel determinants of the γ sequence.
    GammaHankel {
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 2)]
        offset: usize,
    },
    /// A sequence as an `n,value` table.
    Sequence {
        #[arg(value_enum)]
        kind: SequenceKind,
        /// Largest index printed.
        #[arg(long)]
        max_n: usize,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
    },
    /// Recurrence-matrix calculator. Presentations are JSON files or builtin names.
    Recmat {
        #[command(subcommand)]
        op: RecmatOp,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, global = true)]
    pub format: Option<FormatArg>,
    /// Write to this file instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SequenceKind {
    /// Binary digit sum τ(n).
    Tau,
    /// i^τ(n), or the coefficients of ∏(1 + σ_k i x^{2^k}) when --sigma is given.
    Moments,
    /// Folding sequence f(n), from n = 1.
    Fold,
    /// β_n, from n = 1.
    Beta,
    /// γ_n, from n = 2.
    Gamma,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum RecmatOp {
    /// Value at one word pair.
    Eval {
        presentation: String,
        row: String,
        col: String,
    },
    /// The p^n × q^n matrix of values at length n.
    Unfold {
        presentation: String,
        #[arg(long)]
        depth: usize,
    },
    Sum {
        left: String,
        right: String,
    },
    Product {
        left: String,
        right: String,
    },
    Hadamard {
        left: String,
        right: String,
    },
    Convolve {
        left: String,
        right: String,
    },
    Transpose {
        presentation: String,
    },
    Minimize {
        presentation: String,
    },
}

enum Output {
    Report(VerificationReport),
    Text(String),
}

fn recmat(op: &RecmatOp, format: Option<FormatArg>) -> Result<String, CliError> {
    use commands::*;
    let pick = |default: Format| match format {
        None => default,
        Some(FormatArg::Csv) => Format::Csv,
        Some(FormatArg::Json) => Format::Json,
    };
    let binary = |op: BinaryOp, l: &str, r: &str| -> Result<String, CliError> {
        let p = recmat_binary(op, &load_presentation(l)?, &load_presentation(r)?)?;
        Ok(render_presentation(&p, pick(Format::Json)))
    };
    match op {
        RecmatOp::Eval {
            presentation,
            row,
            col,
        } => recmat_eval(
            &load_presentation(presentation)?,
            row,
            col,
            pick(Format::Csv),
        ),
        RecmatOp::Unfold {
            presentation,
            depth,
        } => Ok(recmat_unfold(
            &load_presentation(presentation)?,
            *depth,
            pick(Format::Csv),
        )),
        RecmatOp::Sum { left, right } => binary(BinaryOp::Sum, left, right),
        RecmatOp::Product { left, right } => binary(BinaryOp::Product, left, right),
        RecmatOp::Hadamard { left, right } => binary(BinaryOp::Hadamard, left, right),
        RecmatOp::Convolve { left, right } => binary(BinaryOp::Convolve, left, right),
        RecmatOp::Transpose { presentation } => {
            let p = recmat_transpose(&load_presentation(presentation)?);
            Ok(render_presentation(&p, pick(Format::Json)))
        }
        RecmatOp::Minimize { presentation } => {
            let p = recmat_minimize(&load_presentation(presentation)?);
            Ok(render_presentation(&p, pick(Format::Json)))
        }
    }
}

fn parse_sigma(sigma: &Option<String>) -> Result<SignSequence, CliError> {
    match sigma {
        Some(s) => s
            .parse::<SignSequence>()
            .map_err(|e| CliError::Usage(format!("--sigma: {e}"))),
        None => Ok(SignSequence::regular()),
    }
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    use commands::*;
    Ok(match &cli.command {
        Command::VerifyDet { max_n, sigma } => {
            Output::Report(cmd_verify_det(*max_n, &parse_sigma(sigma)?))
        }
        Command::Sequence { kind, max_n, sigma } => {
            let sigma = parse_sigma(sigma)?;
            Output::Text(match kind {
                SequenceKind::Tau => sequence_table(Sequence::Tau, *max_n, &sigma),
                SequenceKind::Moments => sequence_table(Sequence::Moments, *max_n, &sigma),
                SequenceKind::Fold => sequence_table(Sequence::Fold, *max_n, &sigma),
                SequenceKind::Beta => sequence_table(Sequence::Beta, *max_n, &sigma),
                SequenceKind::Gamma => sequence_table(Sequence::Gamma, *max_n, &sigma),
            })
        }
        Command::VerifyLu { depth } => Output::Report(cmd_verify_lu(*depth)?),
        Command::Jfraction { count } => Output::Report(cmd_jfraction(*count)?),
        Command::BetaHankel { max_order, offset } => {
            Output::Report(cmd_beta_hankel(*max_order, *offset))
        }
        Command::GammaHankel { max_order, offset } => {
            if *offset + 2 * *max_order < 3 {
                return Err(CliError::Usage("γ starts at index 2".into()));
            }
            Output::Report(cmd_gamma_hankel(*max_order, *offset))
        }
        Command::Recmat { op, out } => {
            let text = recmat(op, out.format)?;
            if let Some(path) = &out.output {
                std::fs::write(path, &text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                Output::Text(String::new())
            } else {
                Output::Text(text)
            }
        }
    })
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(Output::Report(report)) => {
            let _ = stdout.write_all(report.to_csv().as_bytes());
            let summary = report.summary();
            let _ = writeln!(stderr, "{summary}");
            if let Some(row) = report.first_mismatch() {
                let _ = writeln!(stderr, "first mismatch: {}", row.cells.join(","));
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Ok(Output::Text(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}
