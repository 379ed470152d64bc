use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use grlb_cli::record::{self, csv_row, Computation, Source, CSV_HEADER};
use grlb_cli::tables;
use grlb_cli::verify::{self, Suite};
use grlb_core::engine::{Family, HorosphericalDatum, DEFAULT_MAX_N};

const EXIT_INVALID: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "grlb", version, about = "Exact greatest Ricci lower bounds of horospherical manifolds of Picard number one")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Engine,
    ClosedForm,
}

#[derive(Subcommand)]
enum Command {
    /// Compute R(X) for one manifold
    Compute {
        /// X1, X2, X3, X4 or X5
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        /// Fractional digits of the decimal rendering
        #[arg(long, default_value_t = 4)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Root-system engine or the per-family integral formula
        #[arg(long, value_enum, default_value_t = SourceArg::Engine)]
        source: SourceArg,
    },
    /// Regenerate table 1, 2 or 3
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Override the per-row digit counts of table 2
        #[arg(long)]
        digits: Option<usize>,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        /// Emit a JSON report
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Invalid(String),
    Verification(String),
}

fn max_n_ceiling() -> Result<u32, Failure> {
    match std::env::var("GRLB_MAX_N") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Invalid(format!("GRLB_MAX_N must be a nonnegative integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records serialize")
}

fn write_csv(rows: &[&Computation], digits: impl Fn(&Computation) -> usize) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::Verification(e.to_string());
    w.write_record(CSV_HEADER).map_err(io_err)?;
    for c in rows {
        w.write_record(csv_row(c, digits(c))).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Verification(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Compute { family, n, k, digits, format, source } => {
            let datum = HorosphericalDatum::new(family, n, k).map_err(|e| Failure::Invalid(e.to_string()))?;
            datum
                .check_ceiling(max_n_ceiling()?)
                .map_err(|e| Failure::Invalid(format!("{e} (raise it with GRLB_MAX_N)")))?;
            let source = match source {
                SourceArg::Engine => Source::Engine,
                SourceArg::ClosedForm => Source::ClosedForm,
            };
            let c = record::compute(&datum, source).map_err(|e| Failure::Invalid(e.to_string()))?;
            Ok(match format {
                Format::Text => c.text(digits),
                Format::Json => to_json(&c.record(digits)),
                Format::Csv => write_csv(&[&c], |_| digits)?,
            })
        }
        Command::Table { id, format, digits } => {
            let fail = |e: grlb_core::Error| Failure::Verification(e.to_string());
            Ok(match id {
                1 => {
                    let rows = tables::table1().map_err(fail)?;
                    match format {
                        Format::Json => to_json(&rows),
                        Format::Text => tables::render_table1_text(&rows),
                        Format::Csv => {
                            let mut w = csv::Writer::from_writer(Vec::new());
                            let err = |e: csv::Error| Failure::Verification(e.to_string());
                            w.write_record(["family", "dim", "R_decimal"]).map_err(err)?;
                            for r in &rows {
                                let dec = r.r_decimal.clone().unwrap_or_default();
                                w.write_record([r.family, r.dim.as_str(), dec.as_str()]).map_err(err)?;
                            }
                            let bytes = w.into_inner().map_err(|e| Failure::Verification(e.to_string()))?;
                            String::from_utf8(bytes).expect("csv output is UTF-8")
                        }
                    }
                }
                2 => {
                    let cells = tables::table2().map_err(fail)?;
                    match format {
                        Format::Text => tables::render_table2_text(&cells, digits),
                        Format::Json => to_json(&tables::table2_records(&cells, digits)),
                        Format::Csv => {
                            let comps: Vec<&Computation> = cells.iter().filter_map(|c| c.value.as_ref()).collect();
                            write_csv(&comps, |c| tables::table2_digits(c.datum.family(), digits))?
                        }
                    }
                }
                _ => {
                    let rows = tables::table3().map_err(fail)?;
                    match format {
                        Format::Text => tables::render_table3_text(&rows),
                        Format::Json => {
                            let recs: Vec<_> = rows
                                .iter()
                                .map(|c| c.record(digits.unwrap_or_else(|| tables::table3_digits(&c.r))))
                                .collect();
                            to_json(&recs)
                        }
                        Format::Csv => {
                            let comps: Vec<&Computation> = rows.iter().collect();
                            write_csv(&comps, |c| digits.unwrap_or_else(|| tables::table3_digits(&c.r)))?
                        }
                    }
                }
            })
        }
        Command::Verify { suite, max_n, json } => {
            let report = verify::run(suite, max_n).map_err(|e| match e {
                grlb_core::Error::InvalidParameter(_) => Failure::Invalid(e.to_string()),
                other => Failure::Verification(other.to_string()),
            })?;
            let out = if json {
                to_json(&report)
            } else {
                let mut s = String::new();
                for c in &report.checks {
                    s.push_str(&format!("{c}\n"));
                }
                s.push_str(&format!(
                    "suite {}: {}/{} checks hold (max n = {})",
                    report.suite,
                    report.total - report.failures,
                    report.total,
                    report.max_n
                ));
                s
            };
            if report.passed {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.trim_end());
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(Failure::Verification(msg)) => {
            println!("{}", msg.trim_end());
            eprintln!("error: verification failed");
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
    }
}
