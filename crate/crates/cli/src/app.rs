use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use upsilon_core::invariants::oracle;
use upsilon_core::{Engine, KnotComplex, Rational, SecondaryValue, SouthWestRegion};

use crate::complex_file::read_complex;
use crate::error::{CliError, Result};
use crate::expr::{parse_for_cli, KnotExpr};
use crate::output::{self, Format, Output, Table};
use crate::region::parse_region_for_cli;
use crate::reports;

#[derive(Parser, Debug)]
#[command(name = "upsilon", version, about = "Exact upsilon-type knot concordance invariants")]
pub struct Cli {
    /// Output format; CSV decimals are for display only.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Cross-check the result against the brute-force oracle.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Read the complex from a JSON file instead of a knot expression.
    #[arg(long, global = true, value_name = "PATH")]
    pub complex_file: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Knot {
    /// Knot expression, e.g. "T(8,5) # -T(6,5) # -T(4,3)".
    #[arg(allow_hyphen_values = true)]
    pub knot: Option<String>,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The upsilon function on [0, 2] as exact breakpoints.
    Upsilon {
        #[command(flatten)]
        knot: Knot,
        /// For CSV: evaluate at N equally spaced points instead.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Upsilon at a single t in [0, 2].
    UpsilonAt {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        t: Rational,
    },
    /// Upsilon of a south-west region.
    RegionUpsilon {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        region: String,
    },
    /// V(s) in the region convention, V = -2 upsilon of Q(s).
    Vk {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
    /// The least s >= 0 with V(s) = 0.
    NuPlus {
        #[command(flatten)]
        knot: Knot,
    },
    /// d-invariant of q-surgery in spin^c structure m.
    Dinv {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// eta of a south-west region.
    Eta {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        region: String,
    },
    /// Points where the upsilon function bends upwards.
    BreakingPoints {
        #[command(flatten)]
        knot: Knot,
    },
    /// Kim-Livingston secondary invariant at a breaking point.
    Kl {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, value_parser = rational_arg)]
        t: Rational,
        #[arg(long, value_parser = rational_arg)]
        s: Rational,
    },
    /// Secondary upsilon for regions C+, C- and C.
    Secondary {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        plus: String,
        #[arg(long)]
        minus: String,
        #[arg(long)]
        region: String,
    },
    /// Check the knot-type axioms; exit status 2 when they fail.
    Validate {
        #[command(flatten)]
        knot: Knot,
    },
    /// Test whether a knot can be concordant to a thin knot.
    ThinCheck {
        #[command(flatten)]
        knot: Knot,
    },
    /// Invariants of P(-2,3,q) and the algebraic-knot constraint table.
    PretzelReport {
        #[arg(long)]
        q: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Upsilon { .. } => "upsilon",
            Command::UpsilonAt { .. } => "upsilon-at",
            Command::RegionUpsilon { .. } => "region-upsilon",
            Command::Vk { .. } => "vk",
            Command::NuPlus { .. } => "nu-plus",
            Command::Dinv { .. } => "dinv",
            Command::Eta { .. } => "eta",
            Command::BreakingPoints { .. } => "breaking-points",
            Command::Kl { .. } => "kl",
            Command::Secondary { .. } => "secondary",
            Command::Validate { .. } => "validate",
            Command::ThinCheck { .. } => "thin-check",
            Command::PretzelReport { .. } => "pretzel-report",
        }
    }

    fn supports_oracle(&self) -> bool {
        matches!(
            self,
            Command::Upsilon { .. }
                | Command::UpsilonAt { .. }
                | Command::RegionUpsilon { .. }
                | Command::Vk { .. }
                | Command::Kl { .. }
                | Command::Secondary { .. }
        )
    }
}

/// The knot being worked on: its label, the parsed expression if any, and the complex.
struct Input {
    label: String,
    expr: Option<KnotExpr>,
    complex: KnotComplex,
}

fn input(cli: &Cli, knot: &Knot) -> Result<Input> {
    match (&knot.knot, &cli.complex_file) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either a knot expression or --complex-file, not both".into())),
        (None, None) => Err(CliError::Usage("missing knot expression (or --complex-file)".into())),
        (None, Some(path)) => Ok(Input {
            label: format!("file({})", path.display()),
            expr: None,
            complex: read_complex(path)?,
        }),
        (Some(text), None) => {
            let expr = parse_for_cli(text)?;
            let complex = expr.build(Path::new("."))?;
            Ok(Input { label: expr.to_string(), expr: Some(expr), complex })
        }
    }
}

fn agree<T: PartialEq + std::fmt::Display>(what: &str, engine: &T, oracle: &T) -> Result<()> {
    if engine != oracle {
        return Err(CliError::OracleMismatch(format!("{what}: engine {engine}, oracle {oracle}")));
    }
    Ok(())
}

const ORACLE: &str = "oracle";

fn scalar(command: &'static str, v: &Rational) -> Output {
    Output::new(command, output::rational(v), Table::Scalar(Some(v.clone())))
}

fn secondary_output(command: &'static str, v: &SecondaryValue) -> Output {
    Output::new(command, output::secondary(v), Table::Scalar(v.value().cloned()))
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let name = cli.command.name();
    if cli.oracle && !cli.command.supports_oracle() {
        return Err(CliError::Usage(format!("--oracle is not available for `{name}`")));
    }
    if cli.complex_file.is_some() && matches!(cli.command, Command::PretzelReport { .. }) {
        return Err(CliError::Usage("`pretzel-report` does not take --complex-file".into()));
    }
    let out = match &cli.command {
        Command::Upsilon { knot, samples } => {
            let k = input(cli, knot)?;
            let engine = Engine::new(&k.complex)?;
            let f = engine.upsilon_function()?;
            let rows = match samples {
                Some(0) => return Err(CliError::Usage("--samples must be positive".into())),
                Some(n) => f.samples(*n),
                None => f.breakpoints().to_vec(),
            };
            let mut out = Output::new(name, output::pl_function(&f), Table::Series(rows))
                .knot(k.label)
                .provenance("Engine::upsilon_function");
            if cli.oracle {
                let g = oracle::upsilon_function_exhaustive(&engine)?;
                agree("upsilon", &f, &g)?;
                out = out.provenance(format!("{ORACLE}::upsilon_function_exhaustive"));
            }
            out
        }
        Command::UpsilonAt { knot, t } => {
            let k = input(cli, knot)?;
            let v = Engine::new(&k.complex)?.upsilon_at(t)?;
            let mut out = Output::new(name, output::rational(&v), Table::Series(vec![(t.clone(), v.clone())]))
                .knot(k.label)
                .field("t", json!(t.to_string()))
                .provenance("Engine::upsilon_at");
            if cli.oracle {
                let o = oracle::brute_force_upsilon(&k.complex, &SouthWestRegion::classical(t)?)?.mul_int(-2);
                agree("upsilon", &v, &o)?;
                out = out.provenance(format!("{ORACLE}::brute_force_upsilon"));
            }
            out
        }
        Command::RegionUpsilon { knot, region } => {
            let r = parse_region_for_cli(region)?;
            let k = input(cli, knot)?;
            let v = Engine::new(&k.complex)?.upsilon_region(&r)?;
            let mut out = scalar(name, &v)
                .knot(k.label)
                .region(r.to_string())
                .provenance("Engine::upsilon_region");
            if cli.oracle {
                agree("region upsilon", &v, &oracle::brute_force_upsilon(&k.complex, &r)?)?;
                out = out.provenance(format!("{ORACLE}::brute_force_upsilon"));
            }
            out
        }
        Command::Vk { knot, s } => {
            let k = input(cli, knot)?;
            let v = Engine::new(&k.complex)?.vk(*s)?;
            let mut out = scalar(name, &v)
                .knot(k.label)
                .region(SouthWestRegion::quadrant(&Rational::from(*s)).to_string())
                .field("s", json!(s))
                .field("label", json!("V (region convention, -2 upsilon of Q_s)"))
                .provenance("Engine::vk");
            if cli.oracle {
                let q = SouthWestRegion::quadrant(&Rational::from(*s));
                agree("V", &v, &oracle::brute_force_upsilon(&k.complex, &q)?.mul_int(-2))?;
                out = out.provenance(format!("{ORACLE}::brute_force_upsilon"));
            }
            out
        }
        Command::NuPlus { knot } => {
            let k = input(cli, knot)?;
            let v = Rational::from(Engine::new(&k.complex)?.nu_plus()?);
            scalar(name, &v).knot(k.label).provenance("Engine::nu_plus")
        }
        Command::Dinv { knot, q, m } => {
            let k = input(cli, knot)?;
            let v = Engine::new(&k.complex)?.d_invariant(*q, *m)?;
            scalar(name, &v)
                .knot(k.label)
                .field("q", json!(q))
                .field("m", json!(m))
                .provenance("Engine::d_invariant")
        }
        Command::Eta { knot, region } => {
            let r = parse_region_for_cli(region)?;
            let k = input(cli, knot)?;
            let v = Engine::new(&k.complex)?.eta(&r)?;
            scalar(name, &v).knot(k.label).region(r.to_string()).provenance("Engine::eta")
        }
        Command::BreakingPoints { knot } => {
            let k = input(cli, knot)?;
            let mut points = Engine::new(&k.complex)?.breaking_points()?;
            let mut out_prov = vec!["Engine::breaking_points".to_string()];
            let jumps = k.expr.as_ref().and_then(|e| match e {
                KnotExpr::Sum(..) | KnotExpr::Mirror(_) => None,
                atom => atom.staircase_jumps(),
            });
            if let Some(jumps) = jumps {
                for (bp, sbp) in points.iter_mut().zip(jumps.breaking_points()) {
                    if bp.t == sbp.t {
                        bp.i_minus = sbp.i_minus;
                        bp.i_plus = sbp.i_plus;
                    }
                }
                out_prov.push("JumpSequence::breaking_points".into());
            }
            let value: Vec<_> = points
                .iter()
                .map(|bp| {
                    json!({
                        "t": output::rational(&bp.t),
                        "jump": output::rational(&bp.jump),
                        "i_minus": bp.i_minus,
                        "i_plus": bp.i_plus,
                    })
                })
                .collect();
            let rows = points.iter().map(|bp| (bp.t.clone(), bp.jump.clone())).collect();
            let mut out = Output::new(name, json!(value), Table::Series(rows)).knot(k.label);
            for p in out_prov {
                out = out.provenance(p);
            }
            out
        }
        Command::Kl { knot, t, s } => {
            let k = input(cli, knot)?;
            let v = Engine::new(&k.complex)?.kim_livingston(t, s)?;
            let mut out = secondary_output(name, &v)
                .knot(k.label)
                .field("t", json!(t.to_string()))
                .field("s", json!(s.to_string()))
                .provenance("Engine::kim_livingston");
            if cli.oracle {
                agree("KL", &v, &oracle::brute_force_kim_livingston(&k.complex, t, s)?)?;
                out = out.provenance(format!("{ORACLE}::brute_force_kim_livingston"));
            }
            out
        }
        Command::Secondary { knot, plus, minus, region } => {
            let (cp, cm, c) = (
                parse_region_for_cli(plus)?,
                parse_region_for_cli(minus)?,
                parse_region_for_cli(region)?,
            );
            let k = input(cli, knot)?;
            let v = Engine::new(&k.complex)?.secondary(&cp, &cm, &c)?;
            let mut out = secondary_output(name, &v)
                .knot(k.label)
                .region(c.to_string())
                .field("plus", json!(cp.to_string()))
                .field("minus", json!(cm.to_string()))
                .provenance("Engine::secondary");
            if cli.oracle {
                agree("secondary", &v, &oracle::brute_force_secondary(&k.complex, &cp, &cm, &c)?)?;
                out = out.provenance(format!("{ORACLE}::brute_force_secondary"));
            }
            out
        }
        Command::Validate { knot } => {
            let k = input(cli, knot)?;
            let report = k.complex.validate();
            let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            Output::new(name, json!(report.is_knot_type()), Table::Report)
                .knot(k.label)
                .field("violations", json!(violations))
                .provenance("KnotComplex::validate")
        }
        Command::ThinCheck { knot } => {
            let expr = match (&knot.knot, &cli.complex_file) {
                (Some(text), None) => parse_for_cli(text)?,
                (None, None) => return Err(CliError::Usage("missing knot expression".into())),
                _ => return Err(CliError::Usage("`thin-check` needs a knot expression, not --complex-file".into())),
            };
            let report = reports::thin_check(&expr, Path::new("."))?;
            report_output(name, report).knot(expr.to_string())
        }
        Command::PretzelReport { q } => report_output(name, reports::pretzel_report(*q)?),
    };
    Ok(out)
}

fn report_output(name: &'static str, report: reports::ReportVerdict) -> Output {
    let mut out = Output::new(name, report.to_json(), Table::Report);
    for p in report.provenance() {
        out = out.provenance(p);
    }
    out
}

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let result = execute(&cli).and_then(|out| {
        let text = out.render(cli.format)?;
        Ok((out, text))
    });
    match result {
        Ok((out, text)) => {
            let _ = stdout.write_all(text.as_bytes());
            if cli.format == Format::Csv {
                let _ = writeln!(stderr, "note: CSV decimals are rounded for display; use JSON for exact values");
            }
            if let Command::Validate { .. } = cli.command {
                if out.value != json!(true) {
                    return 2;
                }
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
