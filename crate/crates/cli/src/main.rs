//! `degbern`: tables of (degenerate) Bernoulli numbers and an exact
//! identity-suite runner.
//!
//! Exit codes: 0 all identities hold, 1 some identity failed, 2 usage or
//! configuration error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degbern::arith::{Rat, UniPoly};
use degbern::classical::BernoulliTable;
use degbern::degenerate::{self, DegenBernoulliTable};
use degbern::dirichlet::{characters_from_json, characters_to_json, enumerate_characters};
use degbern::padic::{self, CosetSpec, LambdaMode, MeasureSpec, MeasureValue};
use degbern::report::{emit, Format, IdentityReport};
use degbern::stirling::StirlingTable;
use degbern::suite::{self, Section, SuiteConfig, SuiteTables};
use serde_json::json;

#[derive(Parser)]
#[command(name = "degbern", version, about = "Exact degenerate Bernoulli numbers and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit tables of numbers or polynomials.
    #[command(subcommand)]
    Table(TableCmd),
    /// Run identity checks and emit a report.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Special values ζ(1−n, x|λ) = −β_n(x|λ)/n.
    Zeta(ZetaArgs),
    /// Values of the distribution μ_{k,β}.
    #[command(subcommand)]
    Measure(MeasureCmd),
    /// Emit the enumerated characters modulo d in the character-file format.
    Characters {
        #[arg(long)]
        d: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum TableCmd {
    /// n, B_n, B_n(x).
    Bernoulli {
        #[arg(long, default_value_t = 24)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
    },
    /// β_n(λ) by default; β_n(x|λ) with --poly; specializations with --at-x / --at-lambda.
    Beta {
        #[arg(long, default_value_t = 24)]
        n_max: usize,
        #[arg(long, value_parser = parse_rat)]
        at_lambda: Option<Rat>,
        #[arg(long, value_parser = parse_rat)]
        at_x: Option<Rat>,
        /// Emit the full polynomial in x and λ (ignored with --at-x).
        #[arg(long)]
        poly: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
    },
    /// Stirling triangle as CSV rows n,k,value.
    Stirling {
        #[arg(long, value_parser = ["1", "2"])]
        kind: String,
        #[arg(long, default_value_t = 24)]
        n_max: usize,
    },
}

#[derive(Args, Clone)]
struct SuiteArgs {
    #[arg(long, default_value_t = 24)]
    n_max: usize,
    #[arg(long, default_value_t = 5)]
    d_max: u64,
    #[arg(long, default_value_t = 20)]
    sum_terms: u64,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6,7,8,9,10,11,12")]
    char_moduli: Vec<u64>,
    #[arg(long, default_value_t = 10)]
    char_n_max: usize,
    #[arg(long, default_value_t = 8)]
    k_max: usize,
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    primes: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    measure_moduli: Vec<u64>,
    #[arg(long, alias = "n-levels", default_value_t = 3)]
    levels: u32,
    /// Test hook: add 1 to the x^i l^j coefficient of β_n, given as `n:i:j`.
    #[arg(long, hide = true, value_parser = parse_perturbation)]
    perturb: Option<(usize, u32, u32)>,
    #[command(flatten)]
    out: OutArgs,
}

fn parse_perturbation(s: &str) -> Result<(usize, u32, u32), String> {
    let bad = || format!("expected n:i:j, got {s:?}");
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    Ok((
        parts[0].parse().map_err(|_| bad())?,
        parts[1].parse().map_err(|_| bad())?,
        parts[2].parse().map_err(|_| bad())?,
    ))
}

#[derive(Args, Clone)]
struct OutArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long)]
    jobs: Option<usize>,
}

impl SuiteArgs {
    fn config(&self) -> SuiteConfig {
        let mut cfg = SuiteConfig {
            n_max: self.n_max,
            d_max: self.d_max,
            sum_terms: self.sum_terms,
            char_moduli: self.char_moduli.clone(),
            char_n_max: self.char_n_max,
            k_max: self.k_max,
            primes: self.primes.clone(),
            measure_moduli: self.measure_moduli.clone(),
            levels: self.levels,
            format: self.out.format.into(),
            ..SuiteConfig::default()
        };
        if let Some(j) = self.out.jobs {
            cfg.jobs = j;
        }
        cfg
    }
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Every identity.
    All(SuiteArgs),
    /// Three routes to β_n(x|λ).
    Routes(SuiteArgs),
    /// λ → 0 and λ = 1 specializations, degree bounds.
    Degeneration(SuiteArgs),
    /// β_n(1|λ) − β_n(λ) = δ_{1,n}.
    Reflection(SuiteArgs),
    /// Multiplication theorem.
    Multiplication(SuiteArgs),
    /// Degenerate and classical power sums.
    PowerSums(SuiteArgs),
    /// Both Stirling transforms.
    Stirling(SuiteArgs),
    /// Zeta special values against the classical Hurwitz values.
    Zeta(SuiteArgs),
    /// Closed form against series for character-twisted numbers.
    Characters {
        /// Moduli, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6,7,8,9,10,11,12")]
        d: Vec<u64>,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Check the characters in this file instead of enumerating.
        #[arg(long)]
        file: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Distribution law and level-N character sums.
    Measure {
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        p: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        d: Vec<u64>,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        n_levels: u32,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct ZetaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_rat)]
    x: Option<Rat>,
    #[arg(long, value_parser = parse_rat)]
    lambda: Option<Rat>,
}

#[derive(Subcommand)]
enum MeasureCmd {
    /// μ_{k,β}(a + d p^N Z_p), symbolic in λ unless --lambda is given.
    Value {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        p: u64,
        #[arg(long = "N")]
        level: u32,
        #[arg(long)]
        a: u64,
        #[arg(long, value_parser = parse_rat)]
        lambda: Option<Rat>,
    },
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e: degbern::Error| e.to_string())
}

enum Outcome {
    Done,
    Reports(Vec<IdentityReport>, Format),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Reports(reports, format)) => {
            print!("{}", emit(&reports, format));
            let failed = suite::failures(&reports);
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                eprintln!("{failed} of {} identity checks failed", reports.len());
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> degbern::Result<Outcome> {
    match cmd {
        Command::Table(t) => table(t).map(|()| Outcome::Done),
        Command::Verify(v) => verify(v),
        Command::Zeta(z) => {
            let table = DegenBernoulliTable::new(z.n);
            let mut value = degenerate::zeta_special_value(&table, z.n)?;
            if let Some(l) = &z.lambda {
                value = value.eval_lambda(l);
            }
            match &z.x {
                Some(x) => println!("{}", UniPoly::render(&value.eval_x(x), "l")),
                None => println!("{value}"),
            }
            Ok(Outcome::Done)
        }
        Command::Measure(MeasureCmd::Value { k, d, p, level, a, lambda }) => {
            let mode = lambda.map_or(LambdaMode::Symbolic, LambdaMode::Fixed);
            let spec = MeasureSpec::new(k, d, p, mode)?;
            let coset = CosetSpec::new(a, d, p, level)?;
            let table = DegenBernoulliTable::new(k);
            let value = padic::mu_value(&table, &spec, &coset)?;
            match &value {
                MeasureValue::Fixed(r) => println!("{r}\tv_{p} = {}", padic::padic_valuation(r, p)),
                MeasureValue::Symbolic(_) => println!("{value}"),
            }
            Ok(Outcome::Done)
        }
        Command::Characters { d } => {
            println!("{}", characters_to_json(&enumerate_characters(d)?));
            Ok(Outcome::Done)
        }
    }
}

fn table(cmd: TableCmd) -> degbern::Result<()> {
    match cmd {
        TableCmd::Bernoulli { n_max, format } => {
            let t = BernoulliTable::new(n_max);
            let rows: Vec<(usize, String, String)> =
                (0..=n_max).map(|n| (n, t.number(n).unwrap().to_string(), t.poly(n).unwrap().to_string())).collect();
            match format {
                OutFormat::Csv => {
                    println!("n,B_n,B_n(x)");
                    rows.iter().for_each(|(n, b, p)| println!("{n},{b},{p}"));
                }
                OutFormat::Json => {
                    let v: Vec<_> = rows.iter().map(|(n, b, p)| json!({"n": n, "number": b, "poly": p})).collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
        }
        TableCmd::Beta { n_max, at_lambda, at_x, poly, format } => {
            let values: Vec<String> = match (&at_x, poly) {
                (Some(x), _) => degenerate::beta_at_x(n_max, x)
                    .iter()
                    .map(|p| match &at_lambda {
                        Some(l) => p.eval(l).to_string(),
                        None => p.to_string(),
                    })
                    .collect(),
                (None, true) => DegenBernoulliTable::new(n_max)
                    .polys()
                    .iter()
                    .map(|p| match &at_lambda {
                        Some(l) => p.eval_lambda(l).to_string(),
                        None => p.to_string(),
                    })
                    .collect(),
                (None, false) => degenerate::beta_at_x(n_max, &Rat::zero())
                    .iter()
                    .map(|p| match &at_lambda {
                        Some(l) => p.eval(l).to_string(),
                        None => p.to_string(),
                    })
                    .collect(),
            };
            match format {
                OutFormat::Csv => {
                    println!("n,value");
                    values.iter().enumerate().for_each(|(n, v)| println!("{n},{v}"));
                }
                OutFormat::Json => {
                    let v: Vec<_> = values.iter().enumerate().map(|(n, v)| json!({"n": n, "value": v})).collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
        }
        TableCmd::Stirling { kind, n_max } => {
            let t = StirlingTable::new(n_max);
            println!("n,k,value");
            for n in 0..=n_max {
                let row = if kind == "1" { t.row1(n)? } else { t.row2(n)? };
                for (k, v) in row.iter().enumerate() {
                    println!("{n},{k},{v}");
                }
            }
        }
    }
    Ok(())
}

fn verify(cmd: VerifyCmd) -> degbern::Result<Outcome> {
    let sectioned = |args: SuiteArgs, sections: &[Section]| -> degbern::Result<Outcome> {
        let cfg = args.config();
        cfg.validate()?;
        let mut tables = SuiteTables::build(cfg.n_max);
        if let Some((n, i, j)) = args.perturb {
            tables.beta = tables.beta.perturbed(n, i, j, &Rat::one())?;
        }
        Ok(Outcome::Reports(suite::run_with_tables(&cfg, &tables, sections)?, cfg.format))
    };
    match cmd {
        VerifyCmd::All(a) => sectioned(a, &Section::ALL),
        VerifyCmd::Routes(a) => sectioned(a, &[Section::Routes]),
        VerifyCmd::Degeneration(a) => sectioned(a, &[Section::Degeneration]),
        VerifyCmd::Reflection(a) => sectioned(a, &[Section::Reflection]),
        VerifyCmd::Multiplication(a) => sectioned(a, &[Section::Multiplication]),
        VerifyCmd::PowerSums(a) => sectioned(a, &[Section::PowerSums]),
        VerifyCmd::Stirling(a) => sectioned(a, &[Section::Stirling]),
        VerifyCmd::Zeta(a) => sectioned(a, &[Section::Zeta]),
        VerifyCmd::Characters { d, n_max, file, out } => {
            let format: Format = out.format.into();
            match file {
                None => {
                    let cfg = SuiteConfig {
                        n_max,
                        char_n_max: n_max,
                        char_moduli: d,
                        format,
                        jobs: out.jobs.unwrap_or(SuiteConfig::default().jobs),
                        ..SuiteConfig::default()
                    };
                    cfg.validate()?;
                    let tables = SuiteTables::build(n_max);
                    Ok(Outcome::Reports(suite::run_with_tables(&cfg, &tables, &[Section::Characters])?, format))
                }
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| degbern::Error::Config(format!("{}: {e}", path.display())))?;
                    let chars = characters_from_json(&text)?;
                    let tables = SuiteTables::build(n_max);
                    let mut reports = Vec::new();
                    for (i, chi) in chars.iter().enumerate() {
                        reports.extend(suite::character_checks(&tables, chi, i, n_max)?);
                    }
                    reports.sort();
                    Ok(Outcome::Reports(reports, format))
                }
            }
        }
        VerifyCmd::Measure { p, d, k_max, n_levels, out } => {
            let cfg = SuiteConfig {
                n_max: k_max,
                k_max,
                primes: p,
                measure_moduli: d,
                levels: n_levels,
                format: out.format.into(),
                jobs: out.jobs.unwrap_or(SuiteConfig::default().jobs),
                ..SuiteConfig::default()
            };
            cfg.validate()?;
            let tables = SuiteTables::build(cfg.n_max);
            Ok(Outcome::Reports(suite::run_with_tables(&cfg, &tables, &[Section::Measure])?, cfg.format))
        }
    }
}
