mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gpspec", version, about = "Spectra of generalized Paley graphs and weights of irreducible cyclic codes")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Largest q for adjacency-matrix oracles.
    #[arg(long, default_value_t = 1 << 12, global = true)]
    max_q_oracle: u64,
    /// Largest q for codeword enumeration and the periods cross-check.
    #[arg(long, default_value_t = 1 << 20, global = true)]
    max_q_enum: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Instance {
    #[arg(short)]
    pub p: u64,
    #[arg(short)]
    pub m: u32,
    #[arg(short)]
    pub k: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectrum of Γ(k, p^m).
    Spectrum {
        #[command(flatten)]
        inst: Instance,
        /// Also compute the spectrum from the adjacency matrix.
        #[arg(long)]
        oracle: bool,
        /// Also report the complement.
        #[arg(long)]
        complement: bool,
        /// Energy, closed walks, spanning trees, srg and Ramanujan status.
        #[arg(long)]
        invariants: bool,
        /// Ihara zeta function.
        #[arg(long)]
        zeta: bool,
    },
    /// Weight distribution of C(k, p^m).
    Code {
        #[command(flatten)]
        inst: Instance,
        /// Enumerate codewords.
        #[arg(long)]
        enumerate: bool,
        /// Derive weights from the graph spectrum.
        #[arg(long)]
        bridge: bool,
    },
    /// Run a verification suite.
    Verify {
        /// table1, table2, exceptional, bridge, ramanujan, oracle or invariants.
        suite: String,
        /// Bound on q for the bridge, oracle and invariants suites.
        #[arg(long)]
        max_q: Option<u64>,
        #[arg(long, default_value_t = 50)]
        p_max: u64,
        #[arg(long, default_value_t = 12)]
        m_max: u32,
    },
    /// Enumerate semiprimitive pairs with p <= p-max and even m <= m-max.
    Sweep {
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        m_max: u32,
        /// Compare against the printed table of small semiprimitive pairs.
        #[arg(long)]
        semiprimitive: bool,
        /// Only list Ramanujan graphs.
        #[arg(long)]
        ramanujan: bool,
    },
    /// The eleven exceptional pairs with their derived data.
    Exceptional,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = commands::Caps { oracle: cli.max_q_oracle, enumerate: cli.max_q_enum };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let outcome = match cli.command {
        Command::Spectrum { inst, oracle, complement, invariants, zeta } => {
            commands::spectrum(&echo, inst, caps, commands::SpectrumFlags { oracle, complement, invariants, zeta })
        }
        Command::Code { inst, enumerate, bridge } => commands::code(&echo, inst, caps, enumerate, bridge),
        Command::Verify { suite, max_q, p_max, m_max } => commands::verify(&echo, &suite, max_q, p_max, m_max, caps),
        Command::Sweep { p_max, m_max, semiprimitive, ramanujan } => {
            commands::sweep(&echo, p_max, m_max, semiprimitive, ramanujan)
        }
        Command::Exceptional => commands::exceptional(&echo),
    };
    match outcome {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable")),
                Format::Table => print!("{}", report.to_table()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({"command": echo, "error": e.to_string()}))
                        .expect("serializable")
                ),
                Format::Table => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}
