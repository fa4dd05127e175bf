//! Verbs of the `iso` command and their execution.

use std::fmt::Write as _;

use clap::{Args, Subcommand, ValueEnum};
use isobaric_core::arith::{dirichlet_power, known_function, local_power, LocalMF};
use isobaric_core::companion::{
    companion_window, determinant, different_matrix, different_window, CompanionWindow, Core,
    GenericCore, NumericCore,
};
use isobaric_core::hessenberg::{build_minus, build_plus, HessenbergMatrix, Superdiagonal};
use isobaric_core::isopoly::{convolve_terms, gfp, glp, wip_closed};
use isobaric_core::roots::{gfp_root_closed, gfp_root_matrix, gfp_root_stirling_matrix, wip_root};
use isobaric_core::{IsobaricPoly, Rational, WeightVector};
use serde::Serialize;

use crate::format::{
    matrix_text, parse_rational, parse_row_range, parse_values, parse_weights, values_text,
    window_text, Entry, MatrixJson, ParseError, PolyJson, ValuesJson, WindowJson,
};
use crate::verify::{self, Suite};
use crate::{CliError, Format};

/// A comma-separated list of rationals kept as one flag value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueList(pub Vec<Rational>);

fn value_list(s: &str) -> Result<ValueList, ParseError> {
    parse_values(s).map(ValueList)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowRange {
    pub lo: i64,
    pub hi: i64,
}

fn row_range(s: &str) -> Result<RowRange, ParseError> {
    parse_row_range(s).map(|(lo, hi)| RowRange { lo, hi })
}

fn positive(s: &str) -> Result<usize, ParseError> {
    match s.trim().parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(ParseError(format!(
            "expected a positive integer, got {:?}",
            s
        ))),
    }
}

/// A sequence of polynomials for `conv`: `gfp`, `glp`, `root:Q` or `wip:W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqSpec {
    Gfp,
    Glp,
    Root(Rational),
    Wip(WeightVector),
}

fn seq_spec(s: &str) -> Result<SeqSpec, ParseError> {
    match s.split_once(':') {
        None if s == "gfp" => Ok(SeqSpec::Gfp),
        None if s == "glp" => Ok(SeqSpec::Glp),
        Some(("root", q)) => Ok(SeqSpec::Root(parse_rational(q)?)),
        Some(("wip", w)) => Ok(SeqSpec::Wip(parse_weights(w)?)),
        _ => Err(ParseError(format!(
            "unknown sequence {:?}; expected gfp, glp, root:Q or wip:W",
            s
        ))),
    }
}

impl SeqSpec {
    fn term(&self, k: usize, n: usize) -> IsobaricPoly {
        match self {
            SeqSpec::Gfp => gfp(k, n),
            SeqSpec::Glp => glp(k, n),
            SeqSpec::Root(q) => gfp_root_closed(q, k, n),
            SeqSpec::Wip(w) => wip_closed(w, k, n),
        }
    }
}

#[derive(Args, Clone, Debug)]
pub struct PolyArgs {
    /// Part bound: the polynomial lives in t1..tk.
    #[arg(long, value_parser = positive)]
    pub k: usize,
    /// Isobaric degree.
    #[arg(long)]
    pub n: usize,
    /// Evaluate at t1,...,tk instead of printing the polynomial.
    #[arg(long, value_parser = value_list, allow_hyphen_values = true)]
    pub eval: Option<ValueList>,
}

#[derive(Args, Clone, Debug)]
pub struct CoreArgs {
    /// Numerical core t1,...,tk.
    #[arg(long, value_parser = value_list, allow_hyphen_values = true, conflicts_with = "k", required_unless_present = "k")]
    pub core: Option<ValueList>,
    /// Symbolic core of size k.
    #[arg(long, value_parser = positive)]
    pub k: Option<usize>,
    /// Row labels to print, `a..b`.
    #[arg(long, value_parser = row_range, default_value = "0..5", allow_hyphen_values = true)]
    pub rows: RowRange,
}

#[derive(Args, Clone, Debug)]
pub struct MfSource {
    /// Named function: zeta, epsilon, mobius, phi, sigma, tau, id.
    #[arg(long = "fn", requires_all = ["p", "big_n"], conflicts_with = "values", required_unless_present = "values")]
    pub function: Option<String>,
    /// The prime.
    #[arg(long)]
    pub p: Option<u64>,
    /// Highest prime power.
    #[arg(long = "N", id = "big_n")]
    pub big_n: Option<usize>,
    /// Explicit values f(1),f(p),...,f(p^N) with f(1) = 1.
    #[arg(long, value_parser = value_list, allow_hyphen_values = true)]
    pub values: Option<ValueList>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Det,
    Perm,
    Stirling,
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Weighted isobaric polynomial P_{w,k,n}.
    Wip {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        weights: WeightVector,
    },
    /// Generalized Fibonacci polynomial F_{k,n}.
    Gfp {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Generalized Lucas polynomial G_{k,n}.
    Glp {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Hessenberg matrix of a weighted isobaric polynomial and its value.
    Hessenberg {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = parse_weights, default_value = "ones", allow_hyphen_values = true)]
        weights: WeightVector,
        /// Superdiagonal: plus takes the permanent, minus the determinant.
        #[arg(long, value_enum, default_value_t = Sign::Minus)]
        sign: Sign,
    },
    /// q-th convolution root of the Fibonacci polynomials.
    RootGfp {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Rational,
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Print the matrix used by det, perm or stirling.
        #[arg(long)]
        show_matrix: bool,
    },
    /// q-th convolution root of a weighted family.
    RootWip {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Rational,
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        weights: WeightVector,
    },
    /// Degree-n term of the convolution of two sequences.
    Conv {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_parser = seq_spec)]
        left: SeqSpec,
        #[arg(long, value_parser = seq_spec)]
        right: SeqSpec,
    },
    /// Rows of the infinite companion matrix.
    Companion {
        #[command(flatten)]
        core: CoreArgs,
    },
    /// Rows of the infinite different matrix.
    Different {
        #[command(flatten)]
        core: CoreArgs,
        /// Also print the determinant of the k x k different matrix.
        #[arg(long)]
        det: bool,
    },
    /// Values of a multiplicative function at 1, p, ..., p^N.
    Mf {
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        p: u64,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Rational Dirichlet power of a multiplicative function at one prime.
    MfRoot {
        #[command(flatten)]
        source: MfSource,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, required_unless_present = "verify", conflicts_with = "verify")]
        q: Option<Rational>,
        /// Take the m-th root and check that its m-th power gives f back.
        #[arg(long, value_parser = positive)]
        verify: Option<usize>,
    },
    /// Run self-checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

/// Printed output of a successful command, or of a failed verification.
pub struct Printed {
    pub text: String,
    pub verified: bool,
}

fn ok(text: String) -> Result<Printed, CliError> {
    Ok(Printed {
        text,
        verified: true,
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ValueJson {
    value: String,
}

#[derive(Serialize)]
struct MatrixValueJson {
    matrix: MatrixJson,
    value: PolyJson,
}

#[derive(Serialize)]
struct DifferentJson {
    window: WindowJson,
    det: Option<crate::format::EntryJson>,
}

#[derive(Serialize)]
struct VerifyJson {
    suite: &'static str,
    checks: usize,
    passed: bool,
    failure: Option<String>,
}

fn show_poly(
    p: &IsobaricPoly,
    eval: &Option<ValueList>,
    format: Format,
) -> Result<Printed, CliError> {
    match eval {
        Some(ValueList(t)) => {
            if t.len() < p.k() {
                return Err(CliError::Domain(format!(
                    "--eval needs {} values, got {}",
                    p.k(),
                    t.len()
                )));
            }
            let v = p.evaluate(t).to_string();
            ok(match format {
                Format::Text => format!("{}\n", v),
                Format::Json => json(&ValueJson { value: v }),
            })
        }
        None => ok(match format {
            Format::Text => format!("{}\n", p),
            Format::Json => json(&PolyJson::from(p)),
        }),
    }
}

fn show_matrix(m: &HessenbergMatrix, format: Format) -> Result<Printed, CliError> {
    let value = m.polynomial()?;
    ok(match format {
        Format::Text => format!("{}value: {}\n", matrix_text(m), value),
        Format::Json => json(&MatrixValueJson {
            matrix: MatrixJson::from(m),
            value: PolyJson::from(&value),
        }),
    })
}

fn show_window<V: Entry>(w: &CompanionWindow<V>, format: Format) -> String {
    match format {
        Format::Text => window_text(w),
        Format::Json => json(&WindowJson::from_window(w)),
    }
}

fn show_values(f: &LocalMF, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", values_text(f.values())),
        Format::Json => json(&ValuesJson {
            label: f.label().to_string(),
            values: f.values().iter().map(ToString::to_string).collect(),
        }),
    }
}

fn different_output<C: Core>(
    core: &C,
    args: &CoreArgs,
    det: bool,
    format: Format,
) -> Result<Printed, CliError>
where
    C::Value: Entry,
{
    let w = different_window(core, args.rows.lo, args.rows.hi)?;
    let d = det.then(|| determinant(core, &different_matrix(core)));
    ok(match format {
        Format::Text => {
            let mut s = window_text(&w);
            if let Some(d) = &d {
                let _ = writeln!(s, "det D = {}", d);
            }
            s
        }
        Format::Json => json(&DifferentJson {
            window: WindowJson::from_window(&w),
            det: d.as_ref().map(Entry::to_json),
        }),
    })
}

fn mf_source(src: &MfSource) -> Result<LocalMF, CliError> {
    match (&src.values, &src.function, src.p, src.big_n) {
        (Some(ValueList(v)), _, _, _) => Ok(LocalMF::new("f", v.clone())?),
        (None, Some(name), Some(p), Some(n)) => Ok(known_function(name, p, n)?),
        _ => Err(CliError::Usage(
            "give either --values or --fn with --p and --N".into(),
        )),
    }
}

pub fn execute(command: &Command, format: Format) -> Result<Printed, CliError> {
    match command {
        Command::Wip { poly, weights } => {
            show_poly(&wip_closed(weights, poly.k, poly.n), &poly.eval, format)
        }
        Command::Gfp { poly } => show_poly(&gfp(poly.k, poly.n), &poly.eval, format),
        Command::Glp { poly } => show_poly(&glp(poly.k, poly.n), &poly.eval, format),
        Command::Hessenberg {
            k,
            n,
            weights,
            sign,
        } => {
            let m = match sign {
                Sign::Plus => build_plus(weights, *k, *n),
                Sign::Minus => build_minus(weights, *k, *n),
            };
            show_matrix(&m, format)
        }
        Command::RootGfp {
            q,
            poly,
            method,
            show_matrix: with_matrix,
        } => {
            let matrix = match method {
                Method::Formula => None,
                _ if poly.n == 0 => {
                    return Err(CliError::Domain("matrix methods need n >= 1".into()));
                }
                Method::Det => Some(gfp_root_matrix(q, poly.k, poly.n, Superdiagonal::Minus)),
                Method::Perm => Some(gfp_root_matrix(q, poly.k, poly.n, Superdiagonal::Plus)),
                Method::Stirling => Some(gfp_root_stirling_matrix(q, poly.k, poly.n)?),
            };
            match (&matrix, with_matrix) {
                (Some(m), true) if poly.eval.is_none() => show_matrix(m, format),
                (Some(m), _) => show_poly(&m.polynomial()?, &poly.eval, format),
                (None, _) => show_poly(&gfp_root_closed(q, poly.k, poly.n), &poly.eval, format),
            }
        }
        Command::RootWip { q, poly, weights } => {
            show_poly(&wip_root(weights, poly.k, poly.n, q), &poly.eval, format)
        }
        Command::Conv { poly, left, right } => {
            let a: Vec<_> = (0..=poly.n).map(|i| left.term(poly.k, i)).collect();
            let b: Vec<_> = (0..=poly.n).map(|i| right.term(poly.k, i)).collect();
            show_poly(&convolve_terms(&a, &b, poly.n)?, &poly.eval, format)
        }
        Command::Companion { core } => {
            let RowRange { lo, hi } = core.rows;
            let text = match (&core.core, core.k) {
                (Some(ValueList(t)), _) => show_window(
                    &companion_window(&NumericCore::new(t.clone()), lo, hi)?,
                    format,
                ),
                (None, Some(k)) => {
                    show_window(&companion_window(&GenericCore::new(k), lo, hi)?, format)
                }
                (None, None) => return Err(CliError::Usage("give --core or --k".into())),
            };
            ok(text)
        }
        Command::Different { core, det } => match (&core.core, core.k) {
            (Some(ValueList(t)), _) => {
                different_output(&NumericCore::new(t.clone()), core, *det, format)
            }
            (None, Some(k)) => different_output(&GenericCore::new(k), core, *det, format),
            (None, None) => Err(CliError::Usage("give --core or --k".into())),
        },
        Command::Mf { function, p, big_n } => {
            ok(show_values(&known_function(function, *p, *big_n)?, format))
        }
        Command::MfRoot { source, q, verify } => {
            let f = mf_source(source)?;
            match (q, verify) {
                (Some(q), _) => ok(show_values(&local_power(&f, q), format)),
                (None, Some(m)) => {
                    let root = local_power(&f, &Rational::new(1.into(), (*m as i64).into()));
                    let back = dirichlet_power(&root, *m);
                    let verified = back.same_values(&f);
                    let mut text = show_values(&root, format);
                    if format == Format::Text {
                        let verdict = if verified { "PASS" } else { "FAIL" };
                        let _ = writeln!(text, "{} {}-fold power of the root equals f", verdict, m);
                    }
                    Ok(Printed { text, verified })
                }
                (None, None) => Err(CliError::Usage("give --q or --verify".into())),
            }
        }
        Command::Verify { suite, max_n } => {
            let reports = verify::run(*suite, *max_n);
            let verified = reports.iter().all(verify::Report::passed);
            let text = match format {
                Format::Text => reports.iter().map(|r| r.line() + "\n").collect(),
                Format::Json => json(
                    &reports
                        .iter()
                        .map(|r| VerifyJson {
                            suite: r.suite.name(),
                            checks: r.checks,
                            passed: r.passed(),
                            failure: r.failure.clone(),
                        })
                        .collect::<Vec<_>>(),
                ),
            };
            Ok(Printed { text, verified })
        }
    }
}
