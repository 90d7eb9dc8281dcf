use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use platkit::{render_csv, render_json, render_text, sweep_monic, table_rows, KnotReport};
use platkit_core::{
    canonical_even_rep, canonical_expand, plat_equivalent, tau_closed_form, ContFrac, Error,
    Rational,
};

#[derive(Parser)]
#[command(
    name = "platkit",
    version,
    about = "Invariants of 2-plat 2-knots F(p, q)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full invariant report for one knot
    Invariants {
        #[arg(short, long, allow_hyphen_values = true)]
        p: i64,
        #[arg(short, long, allow_hyphen_values = true)]
        q: i64,
        /// Emit JSON instead of key: value lines
        #[arg(long)]
        json: bool,
    },
    /// Invariant table over all classes with p up to a bound
    Table {
        #[arg(long, default_value_t = 19, value_parser = clap::value_parser!(i64).range(0..))]
        max_p: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search every class with p up to a bound for monic Alexander polynomials
    SweepMonic {
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(i64).range(3..))]
        max_p: i64,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Decide whether F(p, q) and F(p2, q2) are the same knot
    Classify {
        #[arg(allow_hyphen_values = true)]
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(allow_hyphen_values = true)]
        p2: i64,
        #[arg(allow_hyphen_values = true)]
        q2: i64,
    },
    /// Reciprocal-first continued fraction utilities
    Cf {
        #[command(subcommand)]
        cmd: CfCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum CfCmd {
    /// Canonical expansion of a rational q/p (1/0 allowed)
    Expand {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Evaluate comma-separated entries to a rational
    Eval {
        #[arg(allow_hyphen_values = true)]
        entries: String,
    },
    /// Reverse the entry list
    Reverse {
        #[arg(allow_hyphen_values = true)]
        entries: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Invariants { p, q, json } => {
            let report = KnotReport::build(p, q)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", report.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Table { max_p, format } => {
            let rows = table_rows(max_p)?;
            let out = match format {
                Format::Text => render_text(&rows),
                Format::Csv => render_csv(&rows),
                Format::Json => render_json(&rows),
            };
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::SweepMonic { max_p, jobs } => {
            let out = sweep_monic(max_p, jobs);
            if out.monic.is_empty() {
                println!(
                    "checked {} representatives with p <= {max_p}: no monic Alexander polynomial",
                    out.pairs_checked
                );
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "checked {} representatives with p <= {max_p}: {} monic",
                    out.pairs_checked,
                    out.monic.len()
                );
                for (p, q) in &out.monic {
                    println!("F({p}, {q})");
                }
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Classify { p, q, p2, q2 } => {
            if plat_equivalent(p, q, p2, q2)? {
                println!("equivalent: same p and q = q' (mod p)");
            } else if p != p2 {
                println!("distinct: determinant {p} vs {p2}");
            } else {
                // Same p, different residue; tau separates the classes.
                let t1 = tau_closed_form(p, canonical_even_rep(p, q))?;
                let t2 = tau_closed_form(p2, canonical_even_rep(p2, q2))?;
                println!("distinct: tau {t1} vs {t2}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cf { cmd } => {
            match cmd {
                CfCmd::Expand { value } => {
                    let r: Rational = value.parse()?;
                    println!("{}", canonical_expand(&r));
                }
                CfCmd::Eval { entries } => {
                    let cf: ContFrac = entries.parse()?;
                    println!("{}", cf.eval());
                }
                CfCmd::Reverse { entries } => {
                    let cf: ContFrac = entries.parse()?;
                    println!("{}", cf.reverse());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
