use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperalg::harness::{self, Mode, DEFAULT_MAX_COUNTEREXAMPLES};
use hyperalg::invertibles::{find_invertible_threshold, SplitParams};
use hyperalg::literal::{
    coeffs_json, format_complex_octonion, format_octonion, format_quaternion, format_zorn, parse_complex_octonion,
    parse_complex_quaternion, parse_oct_params, parse_octonion, parse_quat_params, parse_quaternion, parse_zorn,
    scalar_json,
};
use hyperalg::recurrence::RecurrenceSpec;
use hyperalg::reps::{self, ConstMatrix};
use hyperalg::scalar::format_rational;
use hyperalg::table::{OCT_PARAM_NAMES, OCT_TABLE, QUAT_PARAM_NAMES, QUAT_TABLE};
use hyperalg::{AlgebraError, ComplexOctonion, Octonion, OctParams, ProductKind, QuatParams, Quaternion, RepMatrix};

const EXIT_ASSERTION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "hyperalg", version, about = "Exact quaternion and octonion arithmetic, representation matrices and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements.
    Mul(MulArgs),
    /// Print a representation matrix or a named constant matrix.
    Rep(RepArgs),
    /// Run identity checks and print one JSON report per check.
    Verify(VerifyArgs),
    /// Scan recurrence-built elements of a split algebra for invertibility.
    Invertibles(InvertiblesArgs),
    /// Print the multiplication table.
    Tables(TablesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Quat,
    Oct,
    Coct,
    Zorn,
}

#[derive(Clone, Copy, ValueEnum)]
enum RealAlgebra {
    Quat,
    Oct,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Paper,
    Central,
}

#[derive(Args)]
struct MulArgs {
    #[arg(long, value_enum)]
    algebra: Algebra,
    /// `β1,β2` or `α,β,γ`, or a JSON object. Defaults to the division algebra.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// Product of complex octonions; required with `--algebra coct`.
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// Print `1 + 2e1 - e3` instead of JSON.
    #[arg(long)]
    pretty: bool,
    #[arg(allow_hyphen_values = true)]
    lhs: String,
    #[arg(allow_hyphen_values = true)]
    rhs: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct RepArgs {
    /// lambda, rho, Lambda, Delta, Gamma, Theta, Phi, Psi, or const.
    map: String,
    /// The element, or the constant's name after `const`.
    #[arg(allow_hyphen_values = true)]
    element: String,
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check ids, group names or `all`.
    #[arg(required = true)]
    ids: Vec<String>,
    /// Every tuple of basis elements (the default).
    #[arg(long, conflicts_with = "random")]
    exhaustive: bool,
    /// This many seeded random tuples instead.
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    /// Random-mode seed.
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_COUNTEREXAMPLES)]
    max_counterexamples: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Json,
    Csv,
}

#[derive(Args)]
struct InvertiblesArgs {
    /// Recurrence coefficients `a,b,c`.
    #[arg(long, allow_hyphen_values = true)]
    rec: String,
    /// Initial terms `x0,x1,x2`.
    #[arg(long, allow_hyphen_values = true)]
    seed: String,
    #[arg(long, value_enum)]
    algebra: RealAlgebra,
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    #[arg(long, default_value_t = 200)]
    bound: usize,
    #[arg(long, value_enum, default_value = "json")]
    out: Out,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, value_enum)]
    algebra: RealAlgebra,
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// Entries in terms of the parameter names instead of values.
    #[arg(long)]
    symbolic: bool,
    /// Print a grid instead of JSON.
    #[arg(long)]
    pretty: bool,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<hyperalg::ParseError> for Failure {
    fn from(e: hyperalg::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<hyperalg::HarnessError> for Failure {
    fn from(e: hyperalg::HarnessError) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub fn run(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Command::Mul(a) => mul(a),
        Command::Rep(a) => rep(a),
        Command::Verify(a) => verify(a),
        Command::Invertibles(a) => invertibles(a),
        Command::Tables(a) => tables(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}

fn quat_params(p: &Option<String>) -> Result<QuatParams, Failure> {
    Ok(p.as_deref().map(parse_quat_params).transpose()?.unwrap_or_else(QuatParams::hamilton))
}

fn oct_params(p: &Option<String>) -> Result<OctParams, Failure> {
    Ok(p.as_deref().map(parse_oct_params).transpose()?.unwrap_or_else(OctParams::cayley))
}

fn complex_json(a: &ComplexOctonion) -> Value {
    json!({ "re": coeffs_json(&a.re.coeffs), "im": coeffs_json(&a.im.coeffs) })
}

fn mul(a: MulArgs) -> Result<u8, Failure> {
    let line = match a.algebra {
        Algebra::Quat => {
            let p = quat_params(&a.params)?;
            let (l, r) = (parse_quaternion(&a.lhs, &p)?, parse_quaternion(&a.rhs, &p)?);
            let prod = l.try_mul(&r)?;
            if a.pretty { format_quaternion(&prod) } else { coeffs_json(&prod.coeffs).to_string() }
        }
        Algebra::Oct => {
            let p = oct_params(&a.params)?;
            let (l, r) = (parse_octonion(&a.lhs, &p)?, parse_octonion(&a.rhs, &p)?);
            let prod = l.try_mul(&r)?;
            if a.pretty { format_octonion(&prod) } else { coeffs_json(&prod.coeffs).to_string() }
        }
        Algebra::Coct => {
            let p = oct_params(&a.params)?;
            if !p.is_cayley() {
                return Err(Failure::Domain(format!("complex octonions are defined only for O(1,1,1), got {p}")));
            }
            let kind = match a.kind {
                Some(Kind::Paper) => ProductKind::Paper,
                Some(Kind::Central) => ProductKind::Central,
                None => return Err(Failure::Usage("--kind paper|central is required with --algebra coct".into())),
            };
            let (l, r) = (parse_complex_octonion(&a.lhs)?, parse_complex_octonion(&a.rhs)?);
            let prod = l.mul(&r, kind);
            if a.pretty { format_complex_octonion(&prod) } else { complex_json(&prod).to_string() }
        }
        Algebra::Zorn => {
            if a.params.is_some() {
                return Err(Failure::Usage("the Zorn algebra takes no parameters".into()));
            }
            let prod = &parse_zorn(&a.lhs)? * &parse_zorn(&a.rhs)?;
            format_zorn(&prod)
        }
    };
    emit(&format!("{line}\n"));
    Ok(0)
}

fn rep_matrix(a: &RepArgs) -> Result<RepMatrix, Failure> {
    let quat = || -> Result<Quaternion, Failure> { Ok(parse_quaternion(&a.element, &quat_params(&a.params)?)?) };
    let oct = || -> Result<Octonion, Failure> { Ok(parse_octonion(&a.element, &oct_params(&a.params)?)?) };
    let no_params = || {
        if a.params.is_some() {
            Err(Failure::Usage(format!("`{}` takes no --params", a.map)))
        } else {
            Ok(())
        }
    };
    Ok(match a.map.as_str() {
        "lambda" | "λ" => reps::quat_left(&quat()?)?,
        "rho" | "ρ" => reps::quat_right(&quat()?)?,
        "Lambda" | "Λ" => reps::oct_left(&oct()?)?,
        "Delta" | "Δ" => reps::oct_right(&oct()?)?,
        "Gamma" | "Γ" => {
            no_params()?;
            reps::cquat_left(&parse_complex_quaternion(&a.element)?)?
        }
        "Theta" | "Θ" => {
            no_params()?;
            reps::cquat_right(&parse_complex_quaternion(&a.element)?)?
        }
        "Phi" | "Φ" => {
            no_params()?;
            reps::coct_left(&parse_complex_octonion(&a.element)?)?
        }
        "Psi" | "Ψ" => {
            no_params()?;
            reps::coct_right(&parse_complex_octonion(&a.element)?)?
        }
        "const" => {
            no_params()?;
            a.element.parse::<ConstMatrix>().map_err(Failure::Usage)?.matrix()
        }
        other => return Err(Failure::Usage(format!("unknown map `{other}`"))),
    })
}

fn rep(a: RepArgs) -> Result<u8, Failure> {
    let m = rep_matrix(&a)?;
    match a.format {
        Format::Csv => emit(&m.to_string()),
        Format::Json => {
            let rows: Vec<Value> = m.rows().map(|r| Value::Array(r.iter().map(scalar_json).collect())).collect();
            emit(&format!("{}\n", Value::Array(rows)));
        }
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8, Failure> {
    let mode = match a.random {
        Some(count) => Mode::Random { count, seed: a.seed },
        None => Mode::Exhaustive,
    };
    let mut checks = Vec::new();
    for id in &a.ids {
        checks.extend(harness::resolve(id)?);
    }
    let mut code = 0;
    for check in checks {
        let report = harness::run(check, mode, a.max_counterexamples);
        if !report.passed() {
            code = EXIT_ASSERTION;
        }
        emit(&format!("{}\n", serde_json::to_string(&report).expect("report serializes")));
    }
    Ok(code)
}

fn int_triple(flag: &str, text: &str) -> Result<[i64; 3], Failure> {
    let parts: Result<Vec<i64>, _> = text.split(',').map(|s| s.trim().parse::<i64>()).collect();
    parts
        .ok()
        .and_then(|v| v.try_into().ok())
        .ok_or_else(|| Failure::Usage(format!("--{flag} expects three comma-separated integers, got `{text}`")))
}

fn invertibles(a: InvertiblesArgs) -> Result<u8, Failure> {
    let spec = RecurrenceSpec::new(int_triple("rec", &a.rec)?, int_triple("seed", &a.seed)?);
    let params = match a.algebra {
        RealAlgebra::Quat => SplitParams::Quaternion(quat_params(&a.params)?),
        RealAlgebra::Oct => SplitParams::Octonion(oct_params(&a.params)?),
    };
    let report = find_invertible_threshold(&spec, &params, a.bound);
    match a.out {
        Out::Json => emit(&format!("{}\n", serde_json::to_string(&report).expect("report serializes"))),
        Out::Csv => {
            let mut out = String::from("n,norm\n");
            for (n, x) in report.norms.iter().enumerate() {
                let _ = writeln!(out, "{n},{}", format_rational(x));
            }
            emit(&out);
        }
    }
    Ok(0)
}

fn tables(a: TablesArgs) -> Result<u8, Failure> {
    let (labels, rows): (Vec<String>, Vec<Vec<String>>) = match a.algebra {
        RealAlgebra::Quat => {
            let p = quat_params(&a.params)?;
            let rows = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            if a.symbolic {
                                QUAT_TABLE[i][j].symbolic(&QUAT_PARAM_NAMES)
                            } else {
                                format_quaternion(&(&Quaternion::basis(i, p.clone()) * &Quaternion::basis(j, p.clone())))
                            }
                        })
                        .collect()
                })
                .collect();
            (basis_labels(4), rows)
        }
        RealAlgebra::Oct => {
            let p = oct_params(&a.params)?;
            let rows = (0..8)
                .map(|i| {
                    (0..8)
                        .map(|j| {
                            if a.symbolic {
                                OCT_TABLE[i][j].symbolic(&OCT_PARAM_NAMES)
                            } else {
                                format_octonion(&(&Octonion::basis(i, p.clone()) * &Octonion::basis(j, p.clone())))
                            }
                        })
                        .collect()
                })
                .collect();
            (basis_labels(8), rows)
        }
    };
    if a.pretty {
        let mut out = format!("*,{}\n", labels.join(","));
        for (label, row) in labels.iter().zip(&rows) {
            let _ = writeln!(out, "{label},{}", row.join(","));
        }
        emit(&out);
    } else {
        emit(&format!("{}\n", json!({ "basis": labels, "products": rows })));
    }
    Ok(0)
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn basis_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|k| if k == 0 { "1".to_string() } else { format!("e{k}") }).collect()
}
