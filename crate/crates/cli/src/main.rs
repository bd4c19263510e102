use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use esscert_core::essential::{self, Essentiality};
use esscert_core::runner::{self, dims, render_table, Config, Group, PageName};
use esscert_core::series;
use esscert_core::{group, Check, Error, Pipeline, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "esscert", version, about = "Verifies the cohomology computations for the Sylow 2-subgroup of SU3(4)")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Largest base degree p of the E∞ window.
    #[arg(long, global = true, default_value_t = 16)]
    pmax: i32,
    /// Largest fibre degree q of the E∞ window.
    #[arg(long, global = true, default_value_t = 12)]
    qmax: i32,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Restrict to these check groups (comma separated).
    #[arg(long, global = true, value_delimiter = ',')]
    only: Vec<String>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run check groups: group, e3, e4, einf, relations, essential, products, series, or all.
    Verify { groups: Vec<String> },
    /// Print the dimension table of a page.
    Dims {
        #[arg(long, default_value = "einf")]
        page: String,
    },
    /// Essential classes: run the lemmas, scan all bidegrees, or test one element.
    Essential {
        #[arg(long, conflicts_with = "check")]
        scan: bool,
        /// An E∞ element such as "a2^4*a4*t3".
        #[arg(long)]
        check: Option<String>,
    },
    /// Products of essential classes; --all adds the exhaustive pair and triple scan.
    Products {
        #[arg(long)]
        all: bool,
    },
    /// The Poincaré series and its functional equation.
    Series,
    /// Structure of the group.
    Group,
    /// Full certificate, JSON by default.
    Report,
}

enum Outcome {
    Report(VerificationReport, Option<String>),
    Text(String),
}

fn parse_groups(names: &[String]) -> Result<Vec<Group>, Error> {
    names
        .iter()
        .flat_map(|s| s.split(','))
        .map(str::trim)
        .filter(|s| !s.is_empty() && *s != "all")
        .map(str::parse)
        .collect()
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let opts = &cli.opts;
    let config = |extra: &[String]| -> Result<Config, Error> {
        let mut groups = parse_groups(&opts.only)?;
        groups.extend(parse_groups(extra)?);
        Config::new(opts.pmax, opts.qmax, &groups)
    };
    let pipeline = || -> Result<Pipeline, Error> { Pipeline::new(config(&[])?.window) };
    Ok(match &cli.command {
        Command::Verify { groups } => Outcome::Report(runner::run(&config(groups)?)?, None),
        Command::Report => Outcome::Report(runner::run(&config(&[])?)?, None),
        Command::Dims { page } => {
            let page: PageName = page.parse()?;
            let pl = pipeline()?;
            let rows = dims(&pl, page)?;
            match opts.format {
                Some(Format::Json) => Outcome::Text(
                    serde_json::to_string_pretty(&json!({ "page": format!("{page:?}").to_lowercase(), "rows": rows }))
                        .expect("dims serialize"),
                ),
                _ => Outcome::Text(render_table(&rows)),
            }
        }
        Command::Essential { scan, check } => {
            let pl = pipeline()?;
            let einf = pl.einf()?;
            let mut report = VerificationReport::new();
            if let Some(expr) = check {
                let x = einf.parse(expr)?;
                let bd = x
                    .bidegree()?
                    .ok_or_else(|| Error::Domain(format!("{expr} is zero")))?;
                let check = match essential::is_essential_einf(einf, &x, bd)? {
                    Essentiality::Essential(w) => {
                        Check::pass("essential.check", format!("{x} at {bd} is E∞-essential"))
                            .with_witness(serde_json::to_value(&w).expect("witness serializes"))
                    }
                    Essentiality::NotDivisible(a) => Check::fail(
                        "essential.check",
                        format!("{x} at {bd} is not divisible by N({}·a1)", a.symbolic()),
                    ),
                };
                report.push(check);
                Outcome::Report(report, None)
            } else if *scan {
                let s = essential::essential_scan(einf)?;
                let w = einf.window();
                let mut rows = vec![vec![0; w.pmax as usize + 1]; w.qmax as usize + 1];
                for &(bd, ess, _) in &s.by_bidegree {
                    rows[bd.q as usize][bd.p as usize] = ess;
                }
                let table = render_table(&rows);
                report.extend(essential::scan_checks(&s));
                report.push(
                    Check::info("essential.scan.table", "essential dimension and quotient dimension per bidegree")
                        .with_witness(serde_json::to_value(&s).expect("scan serializes")),
                );
                Outcome::Report(report, Some(table))
            } else {
                report.extend(essential::verify_essential(einf)?);
                Outcome::Report(report, None)
            }
        }
        Command::Products { all } => {
            let pl = pipeline()?;
            let mut report = VerificationReport::new();
            report.extend(runner::products(&pl, *all)?);
            Outcome::Report(report, None)
        }
        Command::Series => {
            let pl = pipeline()?;
            let einf = pl.einf()?;
            let p = series::poincare_numerator(einf)?;
            let mut report = VerificationReport::new();
            report.extend(series::verify_series(einf)?);
            Outcome::Report(report, Some(format!("P(t) = {p}\n")))
        }
        Command::Group => {
            config(&[])?;
            let mut report = VerificationReport::new();
            report.extend(group::verify_group());
            Outcome::Report(report, None)
        }
    })
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.opts.out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let default_format = match cli.command {
        Command::Report => Format::Json,
        _ => Format::Text,
    };
    let format = cli.opts.format.unwrap_or(default_format);
    let (text, passed) = match outcome {
        Outcome::Text(t) => (t, true),
        Outcome::Report(r, preamble) => {
            let body = match format {
                Format::Json => format!("{}\n", r.to_json()),
                Format::Text => format!("{}{}", preamble.unwrap_or_default(), r.render_text()),
            };
            if !r.passed() {
                for c in r.failures() {
                    eprintln!("failed: {}", c.id);
                }
            }
            (body, r.passed())
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
