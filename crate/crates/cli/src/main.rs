use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tracemult::exactarith::rational::rat_to_string;
use tracemult::expr::{parse_mpoly, parse_ratfun};
use tracemult::multsolver::{solve_detailed, RationalShape, Z};
use tracemult::symfunc::{MultTable, Partition2};
use tracemult::trace44::checks::{self, Check, CheckOptions};
use tracemult::trace44::{
    asymptotic, hilbert_forms, hilbert_series, multiplicities, multiplicity_series, AlgebraKind, Source,
};
use tracemult::Error;

#[derive(Parser)]
#[command(name = "tracemult", version, about = "Schur multiplicity series of rational symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pure,
    Mixed,
}

impl From<Kind> for AlgebraKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Pure => AlgebraKind::Pure,
            Kind::Mixed => AlgebraKind::Mixed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Factored,
    Expanded,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Stored,
    Solved,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Roundtrip,
    Oracle,
    Prop5,
    StoredVsSolved,
    Asympt,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Hilbert series of the pure or mixed trace algebra.
    Hilbert {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "expanded")]
        form: Form,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Print the multiplicity series M'(t, v).
    MultSeries {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "stored")]
        source: SourceArg,
    },
    /// Multiplicity at one partition, or every multiplicity up to a total degree.
    Eval {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Partition as L1,L2.
        #[arg(long, value_parser = parse_pair, required_unless_present = "grid", conflicts_with = "grid")]
        lambda: Option<(u32, u32)>,
        /// All partitions with l1 + l2 <= MAXDEG.
        #[arg(long, value_name = "MAXDEG")]
        grid: Option<u32>,
        #[arg(long, value_enum, default_value = "csv")]
        format: GridFormat,
    },
    /// Multiplicity series of c(xy) (p(x,xy) + p(y,xy)) / (q(x,xy) q(y,xy)).
    ///
    /// The numerator file holds the symmetric polynomial p(x,xy) + p(y,xy)
    /// in x, y. The q file holds q as a polynomial in x whose coefficients
    /// may be rational in v, where v stands for xy. The optional factor
    /// file holds c(v).
    Solve {
        #[arg(long)]
        num_file: PathBuf,
        #[arg(long)]
        q_file: PathBuf,
        #[arg(long)]
        zfactor: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Run one of the built-in checks; exit status 1 on failure.
    Verify {
        #[arg(long, value_enum)]
        check: CheckArg,
        /// Truncation degree for the oracle check.
        #[arg(long, default_value_t = 30)]
        degree: u32,
        /// Scales for the asymptotic check.
        #[arg(long, value_delimiter = ',', default_values_t = [64u32, 128, 256, 512])]
        scales: Vec<u32>,
        /// Largest allowed |exact/asymptotic - 1| at the last scale.
        #[arg(long, default_value_t = 0.15)]
        tolerance: f64,
    },
    /// Degree-14 approximation of a multiplicity, as JSON.
    Asympt {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_parser = parse_pair)]
        lambda: (u32, u32),
    },
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected L1,L2, got {s:?}"))?;
    let a: u32 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a < b {
        return Err(format!("need L1 >= L2, got {a},{b}"));
    }
    Ok((a, b))
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::UnknownIdentifier { .. }
            | Error::InvalidInput(_)
            | Error::InvalidPartition(..)
            | Error::UnexpectedVariable { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn partition((a, b): (u32, u32)) -> Result<Partition2, Failure> {
    Ok(Partition2::new(a as i64, b as i64)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Hilbert { kind, form, format } => {
            let kind = AlgebraKind::from(kind);
            let (num, den) = match form {
                Form::Expanded => {
                    let h = hilbert_series(kind);
                    (h.num().to_string(), h.den().to_string())
                }
                Form::Factored => {
                    let (n, d) = hilbert_forms(kind);
                    let squash = |s: &str| s.split_whitespace().collect::<String>();
                    (squash(n[n.len() - 1]), squash(d[d.len() - 1]))
                }
            };
            match format {
                TextOrJson::Text => println!("({num})/({den})"),
                TextOrJson::Json => println!(
                    "{}",
                    json!({ "kind": kind.to_string(), "numerator": num, "denominator": den })
                ),
            }
        }
        Command::MultSeries { kind, source } => {
            let source = match source {
                SourceArg::Stored => Source::Stored,
                SourceArg::Solved => Source::Solved,
            };
            println!("{}", multiplicity_series(kind.into(), source)?);
        }
        Command::Eval { kind, lambda, grid, format } => {
            let kind = AlgebraKind::from(kind);
            let (ls, top) = match (lambda, grid) {
                (Some(l), _) => (vec![partition(l)?], l.0 + l.1),
                (None, Some(n)) => (Partition2::up_to(n), n),
                (None, None) => return Err(Failure::Usage("need --lambda or --grid".into())),
            };
            let ms = multiplicities(kind, &ls)?;
            if lambda.is_some() && matches!(format, GridFormat::Csv) {
                println!("{}", rat_to_string(&ms[0]));
                return Ok(());
            }
            let table = MultTable::from_entries(top, ls.into_iter().zip(ms).collect::<BTreeMap<_, _>>());
            match format {
                GridFormat::Csv => print!("{}", table.to_csv()),
                GridFormat::Json => println!("{}", table.to_json()),
            }
        }
        Command::Solve { num_file, q_file, zfactor, format } => {
            let num = parse_mpoly(&read(&num_file)?)?;
            let q = parse_ratfun(&read(&q_file)?)?.rename("v", Z);
            let c = match zfactor {
                Some(p) => parse_ratfun(&read(&p)?)?.rename("v", Z),
                None => tracemult::exactarith::RatFun::one(),
            };
            let shape = RationalShape::from_symmetric_numerator(&num, q, c)?;
            let sol = solve_detailed(&shape)?;
            match format {
                TextOrJson::Text => println!("{}", sol.series),
                TextOrJson::Json => println!(
                    "{}",
                    json!({
                        "series": sol.series.to_string(),
                        "numerator": sol.numerator.to_string(),
                        "q": sol.q.to_string(),
                        "numerator_t_degree": sol.numerator_degree,
                        "degree_bound": sol.degree_bound,
                    })
                ),
            }
        }
        Command::Verify { check, degree, scales, tolerance } => {
            let check = match check {
                CheckArg::Roundtrip => Check::Roundtrip,
                CheckArg::Oracle => Check::Oracle,
                CheckArg::Prop5 => Check::Prop5,
                CheckArg::StoredVsSolved => Check::StoredVsSolved,
                CheckArg::Asympt => Check::Asympt,
            };
            if degree == 0 {
                return Err(Failure::Usage("--degree must be positive".into()));
            }
            let opts = CheckOptions { degree, scales, tolerance, ..CheckOptions::default() };
            let r = checks::run(check, &opts);
            let text = serde_json::to_string_pretty(&r).expect("serializable");
            if !r.pass {
                println!("{text}");
                return Err(Failure::Check(format!("check {} failed", r.check)));
            }
            println!("{text}");
        }
        Command::Asympt { kind, lambda } => {
            let v = asymptotic(kind.into(), partition(lambda)?);
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
