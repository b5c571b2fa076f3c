//! Subcommands of the `gapsum` binary.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use gapsum_core::{
    banna_alpha, basis_ed, bernoulli_number, brute_sum, c_value, decompose, express_in_basis,
    format_rational, genocchi, member_general, membership, Error, GeneralSpace, MembershipReport,
    Polynomial,
};

use crate::factor::factored;
use crate::parser::{parse_poly_capped, ParseError, DEFAULT_MAX_DEGREE};

/// Exit status: success.
pub const EXIT_OK: i32 = 0;
/// Exit status: the queried polynomial is not a member.
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit status: bad flags, bad expression or invalid arguments.
pub const EXIT_USAGE: i32 = 2;
/// Exit status: an internal consistency check failed.
pub const EXIT_INTERNAL: i32 = 3;

pub const MAX_DEGREE_ENV: &str = "GAPSUM_MAX_DEGREE";

#[derive(Debug, Parser)]
#[command(
    name = "gapsum",
    version,
    about = "Exact gap sums P(n) + P(n-d) + P(n-2d) + ... of rational polynomials"
)]
pub struct Cli {
    /// Machine-readable JSON output; rationals are "a/b" strings.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print polynomials in factored form where small rational roots exist.
    #[arg(long, global = true)]
    pub factored: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct StepPoly {
    /// Step d >= 1.
    #[arg(short = 'd', long = "step")]
    pub d: u32,
    /// Polynomial expression in X, e.g. "3*X^2 + 3*X + 2".
    #[arg(short = 'P', long = "poly", allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Debug, Args)]
pub struct MaybeGeneral {
    /// Step d >= 1 (for E_d).
    #[arg(short = 'd', long = "step", required_unless_present = "general")]
    pub d: Option<u32>,
    /// Work in E_D for the divisor given with -D.
    #[arg(long, requires = "divisor", conflicts_with = "d")]
    pub general: bool,
    /// Divisor D with D(1) != 0, e.g. "1 + X + X^2".
    #[arg(
        short = 'D',
        long = "divisor",
        requires = "general",
        allow_hyphen_values = true
    )]
    pub divisor: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brute-force gap sum S_{P,d}(n).
    Sum {
        #[command(flatten)]
        args: StepPoly,
        #[arg(short = 'n', long = "at")]
        n: u64,
    },
    /// Decide whether P is in E_d (or E_D with --general).
    Member {
        #[command(flatten)]
        space: MaybeGeneral,
        #[arg(short = 'P', long = "poly", allow_hyphen_values = true)]
        poly: String,
        /// Also print f, the closed form S and the e_k coordinates.
        #[arg(long)]
        witness: bool,
    },
    /// Split P = Q + R with Q in E_d (or E_D) and deg R <= d - 2.
    Decompose {
        #[command(flatten)]
        space: MaybeGeneral,
        #[arg(short = 'P', long = "poly", allow_hyphen_values = true)]
        poly: String,
    },
    /// Banna polynomial alpha with P(X) = alpha(X) + ... + alpha(X-d+1).
    Banna {
        #[command(flatten)]
        args: StepPoly,
    },
    /// Basis e_0..e_K of E_d, or h, h*1, h*X, ... of E_D with --general.
    Basis {
        #[command(flatten)]
        space: MaybeGeneral,
        /// Largest basis index to print
        #[arg(short = 'k', long = "max-index")]
        k: usize,
    },
    /// Table of c_0..c_N, the constants with X^n - c_n in E_2.
    Cn {
        #[arg(short = 'n', long = "max")]
        n: usize,
    },
    /// Genocchi numbers G_1..G_N.
    Genocchi {
        #[arg(short = 'n', long = "max")]
        n: usize,
    },
    /// Bernoulli numbers B_0..B_N.
    Bernoulli {
        #[arg(short = 'n', long = "max")]
        n: usize,
    },
    /// Check the closed form of a member against brute sums for n = 0..N.
    Verify {
        #[command(flatten)]
        args: StepPoly,
        #[arg(short = 'n', long = "max")]
        n: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Negative(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => EXIT_USAGE,
            CliError::Negative(_) => EXIT_NEGATIVE,
            CliError::Core(e) => match e {
                Error::Invariant(_) | Error::DirectSumViolation(_) => EXIT_INTERNAL,
                Error::NotMember(_) | Error::NoBannaRepresentation(_) => EXIT_NEGATIVE,
                _ => EXIT_USAGE,
            },
            CliError::Internal(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

struct Ctx<'a, W: Write> {
    out: &'a mut W,
    json: bool,
    factored: bool,
    max_degree: u64,
}

impl<W: Write> Ctx<'_, W> {
    fn poly(&self, text: &str) -> Result<Polynomial, CliError> {
        Ok(parse_poly_capped(text, self.max_degree)?)
    }

    fn show(&self, p: &Polynomial) -> String {
        if self.factored {
            factored(p)
        } else {
            p.to_string()
        }
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        let text =
            serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn divisor(&self, space: &MaybeGeneral) -> Result<Option<GeneralSpace>, CliError> {
        match (&space.divisor, space.d) {
            (Some(text), _) => Ok(Some(GeneralSpace::new(self.poly(text)?)?)),
            (None, Some(0)) => Err(Error::ZeroStep.into()),
            (None, Some(_)) => Ok(None),
            (None, None) => Err(CliError::Usage(
                "either -d or --general -D is required".into(),
            )),
        }
    }
}

fn read_max_degree() -> Result<u64, CliError> {
    match std::env::var(MAX_DEGREE_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{MAX_DEGREE_ENV} must be a natural number, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn strings(values: impl IntoIterator<Item = gapsum_core::Rational>) -> Vec<String> {
    values.into_iter().map(|r| format_rational(&r)).collect()
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T, W, E>(argv: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
        let max_degree = read_max_degree()?;
        let mut ctx = Ctx {
            out: &mut *out,
            json: cli.json,
            factored: cli.factored,
            max_degree,
        };
        dispatch(&mut ctx, &cli.command)
    }));
    match outcome {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            let _ = writeln!(err, "internal invariant violated: {msg}");
            EXIT_INTERNAL
        }
    }
}

#[derive(Serialize)]
struct MemberJson<'a> {
    #[serde(flatten)]
    report: &'a MembershipReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    coordinates: Option<Vec<String>>,
}

fn dispatch<W: Write>(ctx: &mut Ctx<'_, W>, command: &Command) -> Result<i32, CliError> {
    match command {
        Command::Sum { args, n } => {
            let p = ctx.poly(&args.poly)?;
            let value = brute_sum(&p, args.d, *n)?;
            if ctx.json {
                ctx.emit_json(&json!({ "d": args.d, "n": n, "sum": format_rational(&value) }))?;
            } else {
                writeln!(ctx.out, "{}", format_rational(&value))?;
            }
            Ok(EXIT_OK)
        }
        Command::Member {
            space,
            poly,
            witness,
        } => {
            let p = ctx.poly(poly)?;
            if let Some(space) = ctx.divisor(space)? {
                return member_general_cmd(ctx, &p, &space);
            }
            let d = space.d.expect("checked by divisor()");
            let report = membership(&p, d)?;
            let coordinates = if report.member && *witness {
                Some(express_in_basis(&p, d)?)
            } else {
                None
            };
            if ctx.json {
                ctx.emit_json(&MemberJson {
                    report: &report,
                    coordinates: coordinates.map(strings),
                })?;
            } else {
                writeln!(ctx.out, "member={}", report.member)?;
                if *witness {
                    match (&report.f, &report.closed_form) {
                        (Some(f), Some(s)) => {
                            writeln!(ctx.out, "f = {}", ctx.show(f))?;
                            writeln!(ctx.out, "S = {}", ctx.show(s))?;
                            let coords = strings(coordinates.unwrap_or_default());
                            writeln!(ctx.out, "coordinates = [{}]", coords.join(", "))?;
                        }
                        _ => writeln!(ctx.out, "R = {}", ctx.show(&report.defect))?,
                    }
                }
            }
            Ok(if report.member {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Decompose { space, poly } => {
            let p = ctx.poly(poly)?;
            let (q, r) = match ctx.divisor(space)? {
                Some(space) => space.decompose(&p)?,
                None => {
                    let dec = decompose(&p, space.d.expect("checked by divisor()"))?;
                    (dec.q_part, dec.r_part)
                }
            };
            if ctx.json {
                ctx.emit_json(&json!({ "Q": q, "R": r }))?;
            } else {
                writeln!(ctx.out, "Q = {}", ctx.show(&q))?;
                writeln!(ctx.out, "R = {}", ctx.show(&r))?;
            }
            Ok(EXIT_OK)
        }
        Command::Banna { args } => {
            let p = ctx.poly(&args.poly)?;
            let alpha = banna_alpha(&p, args.d)?;
            if ctx.json {
                ctx.emit_json(&json!({ "d": args.d, "P": p, "alpha": alpha }))?;
            } else {
                writeln!(ctx.out, "alpha = {}", ctx.show(&alpha))?;
                let terms: Vec<String> = (0..args.d)
                    .map(|j| match j {
                        0 => "alpha(X)".to_string(),
                        j => format!("alpha(X - {j})"),
                    })
                    .collect();
                writeln!(ctx.out, "{} = {}", ctx.show(&p), terms.join(" + "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Basis { space, k } => {
            let general = ctx.divisor(space)?;
            let (labels, polys): (Vec<String>, Vec<Polynomial>) = match &general {
                Some(space) => (0..=*k)
                    .map(|i| {
                        let label = match i {
                            0 => "h".to_string(),
                            1 => "h*1".to_string(),
                            2 => "h*X".to_string(),
                            i => format!("h*X^{}", i - 1),
                        };
                        (label, space.basis(i))
                    })
                    .unzip(),
                None => {
                    let d = space.d.expect("checked by divisor()");
                    (0..=*k).map(|i| (format!("e_{i}"), basis_ed(d, i))).unzip()
                }
            };
            if ctx.json {
                ctx.emit_json(&json!({ "basis": polys }))?;
            } else {
                for (label, p) in labels.iter().zip(&polys) {
                    writeln!(ctx.out, "{label} = {}", ctx.show(p))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Cn { n } => table(ctx, "c", "c", 0..=*n, c_value),
        Command::Genocchi { n } => table(ctx, "G", "genocchi", 1..=*n, genocchi),
        Command::Bernoulli { n } => table(ctx, "B", "bernoulli", 0..=*n, bernoulli_number),
        Command::Verify { args, n } => verify(ctx, args, *n),
    }
}

fn member_general_cmd<W: Write>(
    ctx: &mut Ctx<'_, W>,
    p: &Polynomial,
    space: &GeneralSpace,
) -> Result<i32, CliError> {
    let verdict = member_general(p, space.divisor())?;
    if ctx.json {
        ctx.emit_json(&verdict)?;
    } else {
        writeln!(ctx.out, "member={}", verdict.member)?;
        if verdict.member {
            writeln!(ctx.out, "quotient = {}", ctx.show(&verdict.quotient))?;
        } else {
            writeln!(ctx.out, "remainder = {}", ctx.show(&verdict.remainder))?;
        }
    }
    Ok(if verdict.member {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn table<W: Write>(
    ctx: &mut Ctx<'_, W>,
    symbol: &str,
    key: &str,
    range: std::ops::RangeInclusive<usize>,
    value: impl Fn(usize) -> gapsum_core::Rational,
) -> Result<i32, CliError> {
    let rows: Vec<(usize, String)> = range.map(|i| (i, format_rational(&value(i)))).collect();
    if ctx.json {
        let values: Vec<&String> = rows.iter().map(|(_, v)| v).collect();
        let first = rows.first().map_or(0, |(i, _)| *i);
        ctx.emit_json(&json!({ "first_index": first, key: values }))?;
    } else {
        for (i, v) in rows {
            writeln!(ctx.out, "{symbol}_{i} = {v}")?;
        }
    }
    Ok(EXIT_OK)
}

fn verify<W: Write>(ctx: &mut Ctx<'_, W>, args: &StepPoly, n: u64) -> Result<i32, CliError> {
    let p = ctx.poly(&args.poly)?;
    let report = membership(&p, args.d)?;
    let Some(s) = report.closed_form else {
        return Err(CliError::Negative(format!(
            "{p} is not in E_{}; no closed form to verify",
            args.d
        )));
    };
    for m in 0..=n {
        let brute = brute_sum(&p, args.d, m)?;
        let closed = s.evaluate_int(m as i64);
        if brute != closed {
            return Err(CliError::Internal(format!(
                "mismatch at n = {m}: closed form gives {}, brute sum gives {}",
                format_rational(&closed),
                format_rational(&brute)
            )));
        }
    }
    if ctx.json {
        ctx.emit_json(&json!({ "ok": true, "checked_up_to": n, "closed_form": s }))?;
    } else {
        writeln!(
            ctx.out,
            "OK: S = {} matches brute sums for n = 0..{n}",
            ctx.show(&s)
        )?;
    }
    Ok(EXIT_OK)
}
