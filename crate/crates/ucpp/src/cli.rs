//! Command-line front end. Exit codes: 0 when every check passes, 1 when a
//! verification finds a discrepancy, 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ucpp_core::exactalg::Var;
use ucpp_core::genfun::{uc_product_truncated, verify_uc_limit, IdentityReport};
use ucpp_core::phasemodel::{scalar_product_op, scalar_product_pp, scalar_product_schur, ScalarArgs, ScalarDims};
use ucpp_core::schur::{schur_bialternant, skew_schur};
use ucpp_core::{BoxDims, Error, MPoly, Partition};

use crate::json::{mpoly_to_json, report_to_json, series_to_json};
use crate::suites::{check_macmahon, run_suites, Config, Suite};

#[derive(Parser, Debug)]
#[command(name = "ucpp", version, about = "Exact checks for boxed UC plane partitions and the phase model")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Op,
    Pp,
    Schur,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Macmahon,
    Routes,
    BbCommute,
    #[value(name = "lemma34")]
    TransferRoutes,
    Fock,
    Vertex,
    BoxColumns,
    UcLimit,
    RttDiagnostic,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::All => Suite::ALL.to_vec(),
            SuiteArg::Macmahon => vec![Suite::Macmahon],
            SuiteArg::Routes => vec![Suite::Routes],
            SuiteArg::BbCommute => vec![Suite::BbCommute],
            SuiteArg::TransferRoutes => vec![Suite::TransferRoutes],
            SuiteArg::Fock => vec![Suite::Fock],
            SuiteArg::Vertex => vec![Suite::Vertex],
            SuiteArg::BoxColumns => vec![Suite::BoxColumns],
            SuiteArg::UcLimit => vec![Suite::UcLimit],
            SuiteArg::RttDiagnostic => vec![Suite::RttDiagnostic],
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// MacMahon's generating function of plane partitions in an N×L×M box.
    Boxgf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: u32,
        /// Also compare against enumeration.
        #[arg(long)]
        check: bool,
    },
    /// The UC plane partition product truncated at total degree D.
    Ucgf {
        #[arg(long = "max-deg")]
        max_deg: u32,
        #[arg(long)]
        check: bool,
    },
    /// The scalar product of the model.
    Scalar {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n1: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n2: u32,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        m2: u32,
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
    },
    /// A Schur polynomial, or a skew one with --skew.
    Schur {
        /// Comma-separated parts, e.g. 2,1.
        #[arg(long, allow_hyphen_values = false)]
        mu: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        vars: u32,
        #[arg(long)]
        skew: Option<String>,
    },
    /// Runs property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long = "max-deg")]
        max_deg: Option<u32>,
    },
}

/// Everything a run prints, plus its exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(_) | Error::Domain(_) | Error::InvalidPartition(_) | Error::InvalidPlanePartition(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Failure::Usage(format!("bad part {:?} in {:?}", p, s))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

/// User-facing polynomials never carry half-integer powers.
fn integral(p: MPoly) -> Result<MPoly, Failure> {
    if p.has_integer_exponents() {
        Ok(p)
    } else {
        Err(Failure::Internal(format!("result kept a half-integer power: {}", p)))
    }
}

fn report_line(r: &IdentityReport) -> String {
    match &r.first_discrepancy {
        None => format!("PASS {}", r.name),
        Some(d) => {
            let mut s = format!("FAIL {}: coefficient of {} is {} vs {}", r.name, d.monomial, d.lhs, d.rhs);
            if let Some(c) = &d.context {
                let _ = write!(s, " ({})", c);
            }
            s
        }
    }
}

struct Printed {
    text: String,
    json: Value,
    ok: bool,
}

fn execute(cli: &Cli, cfg: &Config) -> Result<Printed, Failure> {
    match &cli.command {
        Command::Boxgf { n, l, m, check } => {
            let b = BoxDims::new(*n, *l, *m);
            let poly = integral((cfg.macmahon)(b))?;
            let mut text = poly.to_string();
            let mut report = Value::Null;
            let mut ok = true;
            if *check {
                let r = check_macmahon(b, cfg.macmahon)?;
                ok = r.equal;
                text.push('\n');
                text.push_str(&report_line(&r));
                report = report_to_json(&r);
            }
            Ok(Printed { text, json: json!({"polynomial": mpoly_to_json(&poly), "report": report}), ok })
        }
        Command::Ucgf { max_deg, check } => {
            let s = uc_product_truncated(*max_deg);
            let mut text = s.to_string();
            let mut report = Value::Null;
            let mut ok = true;
            if *check {
                let r = verify_uc_limit(*max_deg);
                ok = r.equal;
                text.push('\n');
                text.push_str(&report_line(&r));
                report = report_to_json(&r);
            }
            Ok(Printed { text, json: json!({"series": series_to_json(&s), "report": report}), ok })
        }
        Command::Scalar { n1, n2, m1, m2, route } => {
            let dims = ScalarDims::new(*n1 as usize, *n2 as usize, *m1 as usize, *m2 as usize);
            let args = ScalarArgs::standard(dims);
            let value = match route {
                Route::Op | Route::All => scalar_product_op(dims, &args)?,
                Route::Pp => scalar_product_pp(dims, &args)?,
                Route::Schur => scalar_product_schur(dims, &args)?,
            };
            let value = integral(value)?;
            let mut text = value.to_string();
            let mut reports = Vec::new();
            if *route == Route::All {
                let pp = scalar_product_pp(dims, &args)?;
                let schur = scalar_product_schur(dims, &args)?;
                reports.push(IdentityReport::compare("op=pp", value.clone(), pp));
                reports.push(IdentityReport::compare("op=schur", value.clone(), schur));
                for r in &reports {
                    text.push('\n');
                    text.push_str(&report_line(r));
                }
            }
            let ok = reports.iter().all(|r| r.equal);
            let json = json!({
                "route": format!("{:?}", route).to_lowercase(),
                "polynomial": mpoly_to_json(&value),
                "reports": reports.iter().map(report_to_json).collect::<Vec<_>>(),
            });
            Ok(Printed { text, json, ok })
        }
        Command::Schur { mu, vars, skew } => {
            let mu = parse_partition(mu)?;
            let xs = Var::family('x', *vars as usize);
            let poly = match skew {
                Some(nu) => skew_schur(&mu, &parse_partition(nu)?, &xs),
                None => schur_bialternant(&mu, &xs),
            };
            Ok(Printed { text: poly.to_string(), json: mpoly_to_json(&poly), ok: true })
        }
        Command::Verify { suite, max_deg } => {
            let cfg = Config { max_deg: *max_deg, ..*cfg };
            let outcomes = run_suites(&suite.suites(), &cfg)?;
            let mut text = String::new();
            let mut suites_json = Vec::new();
            for o in &outcomes {
                for r in &o.reports {
                    let _ = writeln!(text, "[{}] {}", o.suite.name(), report_line(r));
                }
                let mut diag = Value::Null;
                if let Some((t, v)) = &o.diagnostic {
                    text.push_str(t);
                    diag = v.clone();
                }
                suites_json.push(json!({
                    "suite": o.suite.name(),
                    "passed": o.passed(),
                    "reports": o.reports.iter().map(report_to_json).collect::<Vec<_>>(),
                    "diagnostic": diag,
                }));
            }
            let ok = outcomes.iter().all(|o| o.passed());
            let total: usize = outcomes.iter().map(|o| o.reports.len()).sum();
            let failed: usize = outcomes.iter().map(|o| o.reports.iter().filter(|r| !r.equal).count()).sum();
            let _ = write!(text, "{} checks, {} failed", total, failed);
            Ok(Printed { text, json: json!({"passed": ok, "suites": suites_json}), ok })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, cfg: &Config) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match execute(&cli, cfg) {
        Ok(p) => {
            let mut stdout = match cli.format {
                Format::Text => p.text,
                Format::Json => serde_json::to_string_pretty(&p.json).expect("values serialize"),
            };
            stdout.push('\n');
            Outcome { code: if p.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}\n", msg) },
        Err(Failure::Internal(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {}\n", msg) },
    }
}
