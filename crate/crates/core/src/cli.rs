//! Command-line front end. The binary only forwards to [`run`].

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::borel::{is_borel_fixed, is_lex_segment, is_strongly_stable, pset, pset_lower_bound};
use crate::error::{Error, Result};
use crate::groebner::{gin, initial_ideal, rs_generic, rs_linear_forms, GinOptions, MatrixKind, RationalPolyIdeal};
use crate::hilbert::{bigint_to_json, biguint_to_json, hilbert, HilbertTable, DEFAULT_HORIZON};
use crate::ideal::MonomialIdeal;
use crate::lexmac::{
    build_lex, lex_bound1, lex_bound2, lex_reduction_number, rs_lex_closed, rvv_check, Termination, DEFAULT_LEX_CAP,
};
use crate::monomial::{RingContext, TermOrder};
use crate::parse::{ideal_to_json, parse_ideal, parse_index_list, parse_monomial, parse_poly_ideal, parse_polynomial};
use crate::reduction::{
    colength_mod_reduction, reduction_number_vars, reduction_spectrum, rs_borel, Hypothesis, VariableReduction,
};
use crate::scenarios::run_all;

/// Environment variable overriding the lex construction cap.
pub const CAP_ENV: &str = "BORELRED_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "borelred",
    version,
    about = "Reduction numbers, Borel specialization and lex-segment ideals of monomial ideals",
    after_help = "Input files hold `ring n=<int> char=<0|p>` and `ideal: m1, m2, ...`, or the JSON \
                  form {\"n\":4,\"char\":0,\"generators\":[[2,0,0,0]]}. Use `-` for stdin.\n\
                  The characteristic defaults to 0 and only changes the Borel-fixedness test \
                  (and the hypotheses that depend on it); polynomial commands always work over the rationals."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct IdealInput {
    /// Ideal file (`-` for stdin).
    pub input: String,
    /// Override the characteristic of the input (0 or a prime); only
    /// Borel-fixedness depends on it.
    #[arg(long = "char")]
    pub char_marker: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of R/I in degree t, or the table up to --upto.
    Hilbert {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long, conflicts_with = "upto")]
        t: Option<u64>,
        #[arg(long)]
        upto: Option<u64>,
    },
    /// Krull dimension of R/I.
    Dim {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Whether I is Borel-fixed in the input characteristic.
    IsBorel {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Whether I is strongly stable.
    IsStable {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Whether I is a lex-segment ideal.
    IsLex {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// The set P(m) of monomials specializing to m, lex-descending.
    Pset {
        /// Monomial such as x1*x3.
        #[arg(long)]
        monomial: String,
        /// Number of variables.
        #[arg(long)]
        n: usize,
    },
    /// Lower bound for |P(m)|.
    PsetBound {
        #[arg(long)]
        monomial: String,
        #[arg(long)]
        n: usize,
    },
    /// Reduction number with respect to a set of variables.
    Reduction {
        #[command(flatten)]
        ideal: IdealInput,
        /// Comma-separated 1-based variable indices, e.g. 2,3,4.
        #[arg(long)]
        vars: String,
    },
    /// r_s(R/I) of a Borel-fixed ideal.
    Rs {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        s: usize,
        /// Skip the Borel-fixedness check.
        #[arg(long)]
        trust: bool,
    },
    /// Reduction numbers of all candidate variable s-reductions.
    Spectrum {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        trust: bool,
    },
    /// Lex-segment ideal with the Hilbert function of an ideal or of a JSON table.
    LexIdeal {
        /// Ideal file, or a JSON Hilbert table {"values":[...],"eventually_polynomial":true}.
        input: String,
        /// Number of variables (required for Hilbert tables).
        #[arg(long)]
        n: Option<usize>,
        /// Degree cap for the construction (default 64, or $BORELRED_CAP).
        #[arg(long)]
        cap: Option<u64>,
    },
    /// r_s of the lex-segment ideal, from the Hilbert function.
    RsLex {
        input: String,
        #[arg(long)]
        s: usize,
    },
    /// Reduction-number bounds for I^lex and the actual value.
    Bounds {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        gin: GinArgs,
    },
    /// Checks the Hilbert-function inequality in terms of the colength e.
    RvvCheck {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long, default_value_t = 20)]
        horizon: u64,
    },
    /// Generic initial ideal under grevlex (polynomial input, char 0).
    Gin {
        input: String,
        #[command(flatten)]
        gin: GinArgs,
    },
    /// Initial ideal for a term order (polynomial input, char 0).
    Initial {
        input: String,
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// r_s through random linear forms, or through the forms given.
    RsOracle {
        input: String,
        #[arg(long, required_unless_present = "forms")]
        s: Option<usize>,
        /// Semicolon-separated linear forms, e.g. "x1 + x2; x3".
        #[arg(long)]
        forms: Option<String>,
        #[command(flatten)]
        gin: GinArgs,
    },
    /// Runs the built-in worked examples and prints a pass/fail table.
    VerifyPaper,
}

#[derive(Debug, Clone, clap::Args)]
pub struct GinArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = crate::groebner::DEFAULT_ENTRY_BOUND)]
    pub entry_bound: i64,
    /// Draw upper-triangular matrices instead of dense ones.
    #[arg(long)]
    pub triangular: bool,
}

impl GinArgs {
    fn options(&self) -> Result<GinOptions> {
        if self.entry_bound < 1 {
            return Err(Error::Usage("--entry-bound must be positive".into()));
        }
        Ok(GinOptions {
            seed: self.seed,
            entry_bound: self.entry_bound,
            kind: if self.triangular {
                MatrixKind::UpperTriangularRandom
            } else {
                MatrixKind::DenseRandom
            },
        })
    }
}

/// What a run printed and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::Usage(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {path}: {e}")))
    }
}

fn load_ideal(input: &IdealInput) -> Result<MonomialIdeal> {
    let ideal = parse_ideal(&read_input(&input.input)?)?;
    match input.char_marker {
        Some(c) => ideal.with_char(c),
        None => Ok(ideal),
    }
}

/// Hilbert table from either an ideal file or a JSON table; the ring is
/// known only for ideal input.
fn load_table(path: &str) -> Result<(HilbertTable, Option<RingContext>)> {
    let src = read_input(path)?;
    let value: Option<Value> = serde_json::from_str(&src).ok();
    if let Some(v) = value.filter(|v| v.get("values").is_some()) {
        return Ok((HilbertTable::from_json(&v)?, None));
    }
    let ideal = parse_ideal(&src)?;
    Ok((HilbertTable::from_ideal(&ideal, DEFAULT_HORIZON), Some(ideal.context())))
}

fn lex_cap(flag: Option<u64>) -> Result<u64> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("{CAP_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_LEX_CAP),
    }
}

struct Report {
    text: String,
    json: Value,
}

fn report(text: impl Into<String>, json: Value) -> Result<Report> {
    Ok(Report {
        text: text.into(),
        json,
    })
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Hilbert { ideal, t, upto } => {
            let i = load_ideal(ideal)?;
            match (t, upto) {
                (_, Some(top)) => {
                    let values: Vec<_> = (0..=*top).map(|k| hilbert(&i, k)).collect();
                    let text = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    report(
                        text,
                        json!({"values": values.iter().map(biguint_to_json).collect::<Vec<_>>(), "eventually_polynomial": false}),
                    )
                }
                (t, None) => {
                    let t = t.unwrap_or(0);
                    let h = hilbert(&i, t);
                    report(h.to_string(), json!({"t": t, "value": biguint_to_json(&h)}))
                }
            }
        }
        Command::Dim { ideal } => {
            let d = load_ideal(ideal)?.krull_dim();
            report(d.to_string(), json!({"dim": d}))
        }
        Command::IsBorel { ideal } => {
            let i = load_ideal(ideal)?;
            let b = is_borel_fixed(&i);
            report(
                b.to_string(),
                json!({"borel_fixed": b, "char": i.context().char_marker()}),
            )
        }
        Command::IsStable { ideal } => {
            let b = is_strongly_stable(&load_ideal(ideal)?);
            report(b.to_string(), json!({"strongly_stable": b}))
        }
        Command::IsLex { ideal } => {
            let b = is_lex_segment(&load_ideal(ideal)?);
            report(b.to_string(), json!({"lex_segment": b}))
        }
        Command::Pset { monomial, n } => {
            let m = parse_monomial(monomial, *n)?;
            let p = pset(&m);
            let text = p.members().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            report(text, p.to_json())
        }
        Command::PsetBound { monomial, n } => {
            let b = pset_lower_bound(&parse_monomial(monomial, *n)?);
            report(b.to_string(), json!({"bound": biguint_to_json(&b)}))
        }
        Command::Reduction { ideal, vars } => {
            let i = load_ideal(ideal)?;
            let v = VariableReduction::new(parse_index_list(vars)?, i.n())?;
            let rep = reduction_number_vars(&i, &v)?;
            report(format!("r={}", rep.r), rep.to_json())
        }
        Command::Rs { ideal, s, trust } => {
            let i = load_ideal(ideal)?;
            let rep = rs_borel(&i, *s, hypothesis(*trust))?;
            report(format!("r={}", rep.r), rep.to_json())
        }
        Command::Spectrum { ideal, s, trust } => {
            let i = load_ideal(ideal)?;
            let sp = reduction_spectrum(&i, *s, hypothesis(*trust))?;
            let mut text = String::new();
            for e in &sp.entries {
                writeln!(text, "{}: r={}", e.reduction, e.r).expect("string write");
            }
            write!(text, "distinct={}", sp.distinct_count()).expect("string write");
            report(text, sp.to_json())
        }
        Command::LexIdeal { input, n, cap } => {
            let (table, ring) = load_table(input)?;
            let ctx = match (ring, n) {
                (Some(ctx), Some(n)) if ctx.n() != *n => {
                    return Err(Error::Usage("--n disagrees with the ring of the input ideal".into()))
                }
                (Some(ctx), _) => ctx,
                (None, Some(n)) => RingContext::char0(*n)?,
                (None, None) => return Err(Error::Usage("--n is required for Hilbert-table input".into())),
            };
            let built = build_lex(&table, ctx, lex_cap(*cap)?)?;
            if let Termination::Truncated { degree } = built.termination {
                return Err(Error::CapExceeded {
                    what: format!("maximal Macaulay growth; partial result {}", built.ideal),
                    cap: degree,
                });
            }
            report(built.ideal.to_string(), built.to_json())
        }
        Command::RsLex { input, s } => {
            let (table, _) = load_table(input)?;
            let r = rs_lex_closed(&table, *s)?;
            report(r.to_string(), json!({"s": s, "r": r}))
        }
        Command::Bounds { ideal, gin } => {
            let i = load_ideal(ideal)?;
            let opts = gin.options()?;
            let b = lex_bound2(&i, &opts)?;
            let q = VariableReduction::last(i.n(), b.d);
            let e = colength_mod_reduction(&i, &q)?;
            let b1 = lex_bound1(b.d, &e);
            let actual = lex_reduction_number(&i)?;
            let mut j = b.to_json();
            j["e"] = biguint_to_json(&e);
            j["lex_bound1"] = bigint_to_json(&b1);
            j["actual"] = json!(actual);
            let ii = b.bound_ii.as_ref().map_or("absent".to_string(), ToString::to_string);
            report(
                format!(
                    "d={} e={} r={} actual={} bound1={} bound_i={} bound_ii={}",
                    b.d, e, b.r, actual, b1, b.bound_i, ii
                ),
                j,
            )
        }
        Command::RvvCheck { ideal, horizon } => {
            let out = rvv_check(&load_ideal(ideal)?, *horizon)?;
            let text = match out.first_violation {
                None => format!("holds for t <= {} (d={}, e={})", out.horizon, out.d, out.e),
                Some(t) => format!("violated at t={t} (d={}, e={})", out.d, out.e),
            };
            report(text, out.to_json())
        }
        Command::Gin { input, gin: args } => {
            let i = parse_poly_ideal(&read_input(input)?)?;
            let g = gin(&i, &args.options()?)?;
            report(g.to_string(), ideal_to_json(&g))
        }
        Command::Initial { input, order } => {
            let order: TermOrder = order.parse()?;
            let i = parse_poly_ideal(&read_input(input)?)?;
            let init = initial_ideal(&i, order);
            report(init.to_string(), ideal_to_json(&init))
        }
        Command::RsOracle { input, s, forms, gin: args } => {
            let i = parse_poly_ideal(&read_input(input)?)?;
            let r = match forms {
                Some(list) => {
                    let forms = parse_forms(list, &i)?;
                    if s.is_some_and(|s| s != forms.len()) {
                        return Err(Error::Usage("--s disagrees with the number of --forms".into()));
                    }
                    rs_linear_forms(&i, &forms)?
                }
                None => rs_generic(&i, s.expect("clap requires --s without --forms"), &args.options()?)?,
            };
            report(format!("r={r}"), json!({"r": r}))
        }
        Command::VerifyPaper => {
            let outcomes = run_all();
            let mut text = String::new();
            let mut rows = Vec::new();
            for o in &outcomes {
                let mark = if o.passed { "PASS" } else { "FAIL" };
                writeln!(text, "{mark}  {:<44} {}", o.anchor, o.description).expect("string write");
                if !o.passed {
                    writeln!(text, "      {}", o.detail).expect("string write");
                }
                rows.push(json!({"anchor": o.anchor, "description": o.description, "passed": o.passed, "detail": o.detail}));
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            write!(text, "{passed}/{} passed", outcomes.len()).expect("string write");
            if passed != outcomes.len() {
                return Err(Error::Inconclusive(text));
            }
            report(text, json!({"scenarios": rows, "passed": passed, "total": outcomes.len()}))
        }
    }
}

fn hypothesis(trust: bool) -> Hypothesis {
    if trust {
        Hypothesis::Trust
    } else {
        Hypothesis::Verify
    }
}

fn parse_forms(list: &str, ideal: &RationalPolyIdeal) -> Result<Vec<crate::groebner::RationalPoly>> {
    list.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_polynomial(s, ideal.n()))
        .collect()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(r) => {
            let body = match cli.format {
                Format::Text => r.text,
                Format::Json => r.json.to_string(),
            };
            Outcome {
                code: 0,
                stdout: format!("{body}\n"),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: if e.is_input_error() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
