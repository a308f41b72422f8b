use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ival_core::expr::{evaluate, DivMode};
use ival_core::oracle::sweep::{sweep, SweepOp};
use ival_core::oracle::Oracle;
use ival_core::render::{render_div, Style};
use ival_core::{Error, MiniParams};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_EMPTY: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Interval arithmetic with directed rounding. `/` is relational division.
#[derive(Parser)]
#[command(name = "ival", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an interval expression such as "[1,2]*[3,4] + 0.1".
    ///
    /// Exit status: 0 for a nonempty result, 2 for Empty, 1 for a syntax error.
    Eval {
        /// The expression; read from standard input when omitted.
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        /// Print a two-part quotient as a union instead of its hull.
        #[arg(long)]
        split_div: bool,
        /// Print bounds as exact hexadecimal significands.
        #[arg(long)]
        hex: bool,
        /// Use "U" instead of "∪" between the parts of a union.
        #[arg(long)]
        ascii: bool,
    },
    /// Check every operation on every pair of minifloat intervals against an
    /// exact oracle. Prints one JSON record per operation.
    ///
    /// Exit status: 0 when all checks pass, 3 on any counterexample.
    Exhaust {
        /// Significand bits, hidden bit included.
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
        emin: i32,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        emax: i32,
        #[arg(long, value_enum, default_value_t = OpChoice::All)]
        op: OpChoice,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpChoice {
    Add,
    Sub,
    Mul,
    Div,
    All,
}

impl OpChoice {
    fn ops(self) -> Vec<SweepOp> {
        match self {
            OpChoice::Add => vec![SweepOp::Add],
            OpChoice::Sub => vec![SweepOp::Sub],
            OpChoice::Mul => vec![SweepOp::Mul],
            OpChoice::Div => vec![SweepOp::Div],
            OpChoice::All => SweepOp::ALL.to_vec(),
        }
    }
}

fn report_syntax_error(input: &str, err: &Error) {
    eprintln!("error: {err}");
    if let Error::Parse { position, .. } = err {
        eprintln!("  {input}");
        eprintln!("  {}^", " ".repeat(*position));
    }
}

fn run_eval(expr: Option<String>, split_div: bool, hex: bool, ascii: bool) -> u8 {
    let input = match expr {
        Some(e) => e,
        None => {
            let mut buf = String::new();
            if let Err(e) = io::stdin().read_to_string(&mut buf) {
                eprintln!("error: cannot read standard input: {e}");
                return EXIT_USAGE;
            }
            buf.trim().to_string()
        }
    };
    let mode = if split_div { DivMode::Split } else { DivMode::Hull };
    match evaluate(&input, mode) {
        Ok(evaluation) => {
            for w in &evaluation.warnings {
                eprintln!("warning: {w}");
            }
            println!("{}", render_div(&evaluation.value, Style { hex, ascii }));
            if evaluation.value.is_empty() {
                EXIT_EMPTY
            } else {
                EXIT_OK
            }
        }
        Err(err) => {
            report_syntax_error(&input, &err);
            EXIT_USAGE
        }
    }
}

fn run_exhaust(p: u32, emin: i32, emax: i32, op: OpChoice) -> u8 {
    let params = match MiniParams::new(p, emin, emax) {
        Ok(params) => params,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };
    let oracle = Oracle::new(params);
    let mut status = EXIT_OK;
    for op in op.ops() {
        let report = sweep(&oracle, op);
        println!("{}", report.to_json_line());
        if !report.passed() {
            status = EXIT_COUNTEREXAMPLE;
        }
    }
    status
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let code = match cli.command {
        Command::Eval { expr, split_div, hex, ascii } => run_eval(expr, split_div, hex, ascii),
        Command::Exhaust { p, emin, emax, op } => run_exhaust(p, emin, emax, op),
    };
    ExitCode::from(code)
}
