use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qdtop::{
    cmd_analyze, cmd_corpus, cmd_export_dot, cmd_verify, parse_spec, render_analyze_text, render_verify_summary,
    report_json, CliError, CorpusFlags, EXIT_OK, EXIT_RULE_FAILURE,
};

/// Quasi divisor topology of finite modules.
#[derive(Parser)]
#[command(name = "qdtop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classes, basis sets, Hasse edges, separation and algebraic predicates.
    Analyze {
        /// `Z:8`, `F2[x]:x^2,x`, `ring:Trunc(2,3)` or a bare ring expression.
        spec: String,
        /// Add definitional topology checks.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Hasse diagram in DOT format.
    Dot { spec: String },
    /// Run the theorem rules over a generated corpus.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Comma-separated rule ids, e.g. `R2,R14`.
        #[arg(long)]
        rules: Option<String>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Ignored; the report is always JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the corpus instance list.
    Corpus {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CorpusArgs {
    /// Largest catalog ring order.
    #[arg(long, default_value_t = CorpusFlags::default().max_order)]
    max_order: usize,
    /// Summands per generated module.
    #[arg(long, default_value_t = CorpusFlags::default().summands)]
    summands: usize,
    #[arg(long, default_value_t = CorpusFlags::default().min_modulus)]
    min_modulus: u64,
    #[arg(long, default_value_t = CorpusFlags::default().max_modulus)]
    max_modulus: u64,
    /// Characteristic of the polynomial domain.
    #[arg(long, default_value_t = CorpusFlags::default().poly_char)]
    poly_char: u64,
    /// Largest polynomial modulus degree; 0 drops polynomial modules.
    #[arg(long, default_value_t = CorpusFlags::default().poly_degree)]
    poly_degree: usize,
    /// Largest module order.
    #[arg(long, default_value_t = CorpusFlags::default().max_elements)]
    max_elements: usize,
}

impl CorpusArgs {
    fn flags(&self) -> CorpusFlags {
        CorpusFlags {
            max_order: self.max_order,
            summands: self.summands,
            min_modulus: self.min_modulus,
            max_modulus: self.max_modulus,
            poly_char: self.poly_char,
            poly_degree: self.poly_degree,
            max_elements: self.max_elements,
        }
    }
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { spec, oracle, json } => {
            let report = cmd_analyze(&parse_spec(&spec)?, oracle)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", render_analyze_text(&report));
            }
            Ok(EXIT_OK)
        }
        Command::Dot { spec } => {
            print!("{}", cmd_export_dot(&parse_spec(&spec)?)?);
            Ok(EXIT_OK)
        }
        Command::Verify { corpus, rules, out, .. } => {
            let report = cmd_verify(&corpus.flags(), rules.as_deref())?;
            let text = report_json(&report)?;
            match &out {
                Some(path) => write_out(path, &text)?,
                None => print!("{text}"),
            }
            eprint!("{}", render_verify_summary(&report));
            Ok(if report.total_failures() == 0 {
                EXIT_OK
            } else {
                EXIT_RULE_FAILURE
            })
        }
        Command::Corpus { corpus, json } => {
            let list = cmd_corpus(&corpus.flags())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&list)?);
            } else {
                for line in list {
                    println!("{line}");
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
