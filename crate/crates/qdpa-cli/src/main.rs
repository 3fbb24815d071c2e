//! `qdpa` — exact computer algebra for the quantum divided power algebra,
//! its operator calculus, and the quantum groups acting on it.
//!
//! Subcommands: `eval`, `apply`, `normalize`, `verify`, `decompose`, `info`.
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod parser;

use std::process::ExitCode;

use clap::{Args, Parser as ClapParser, Subcommand};

use qdpa::galg::AlgebraKind;
use qdpa::hopf::{verify_hopf, HopfPresentation, PresentationName};
use qdpa::qarith::{char_q, ScalarField};
use qdpa::repn::decompose;
use qdpa::suites::{run_suite, LawStatus, SuiteParams, SuiteReport};
use qdpa::weyl::WeylVariant;

use parser::{parse_element, parse_operator, Session};

#[derive(ClapParser)]
#[command(
    name = "qdpa",
    about = "Exact q-calculus on the quantum divided power algebra",
    version
)]
struct Cli {
    #[command(flatten)]
    session: SessionArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SessionArgs {
    /// Dimension n of the underlying lattice Z^n
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,

    /// Scalar field: `generic` or `root:<m>` (q a primitive m-th root of unity)
    #[arg(long, global = true, default_value = "generic")]
    q: String,

    /// Algebra kind: `divided`, `restricted:<l>`, or `exterior`
    #[arg(long, global = true, default_value = "divided")]
    kind: String,

    /// Degree bound for verification suites
    #[arg(long, global = true, default_value_t = 5)]
    deg: i64,

    /// Weyl normal-form variant: `+` or `-`
    #[arg(long, global = true, default_value = "+")]
    variant: String,

    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,

    /// Emit CSV (decompose tables)
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an element expression
    Eval { expr: String },
    /// Apply an operator expression to an element
    Apply { operator: String, element: String },
    /// Normal-order an operator word in the quantum Weyl algebra
    Normalize { word: String },
    /// Run a verification suite: qarith|lattice|galg|ops|weyl|hopf|uq|rootvectors|repn|all
    Verify {
        suite: String,
        /// Restrict the hopf suite to one presentation: dq+|dq-|aq|uq
        #[arg(long)]
        presentation: Option<String>,
    },
    /// Decompose the graded components into simple modules
    Decompose {
        /// Restricted exponent bound (alternative to --kind restricted:<l>)
        #[arg(long)]
        l: Option<u32>,
        /// Top degree for the unbounded divided power algebra
        #[arg(long, default_value_t = 5)]
        max_degree: i64,
    },
    /// Print the session parameters and basic dimensions
    Info,
}

struct Usage(String);

fn parse_field(text: &str) -> Result<ScalarField, Usage> {
    if text == "generic" {
        return Ok(ScalarField::Generic);
    }
    if let Some(m) = text.strip_prefix("root:") {
        let m: u32 = m
            .parse()
            .map_err(|_| Usage(format!("bad root order `{m}`")))?;
        return ScalarField::root_of_unity(m)
            .map_err(|e| Usage(e.to_string()));
    }
    Err(Usage(format!(
        "bad field `{text}`: expected `generic` or `root:<m>`"
    )))
}

fn parse_kind(text: &str, l_flag: Option<u32>) -> Result<AlgebraKind, Usage> {
    match text {
        "divided" => Ok(AlgebraKind::DividedPower),
        "exterior" => Ok(AlgebraKind::Exterior),
        "restricted" => {
            let l = l_flag.ok_or_else(|| {
                Usage("`--kind restricted` needs `--l <l>` or `--kind restricted:<l>`".into())
            })?;
            Ok(AlgebraKind::Restricted(l))
        }
        other => {
            if let Some(l) = other.strip_prefix("restricted:") {
                let l: u32 = l
                    .parse()
                    .map_err(|_| Usage(format!("bad restricted bound `{l}`")))?;
                return Ok(AlgebraKind::Restricted(l));
            }
            Err(Usage(format!(
                "bad kind `{other}`: expected divided, restricted:<l>, or exterior"
            )))
        }
    }
}

fn parse_variant(text: &str) -> Result<WeylVariant, Usage> {
    match text {
        "+" => Ok(WeylVariant::Plus),
        "-" => Ok(WeylVariant::Minus),
        other => Err(Usage(format!("bad variant `{other}`: expected + or -"))),
    }
}

fn build_session(args: &SessionArgs, l_flag: Option<u32>) -> Result<Session, Usage> {
    let field = parse_field(&args.q)?;
    let kind = parse_kind(&args.kind, l_flag)?;
    kind.validate(&field).map_err(|e| Usage(e.to_string()))?;
    if args.n == 0 {
        return Err(Usage("dimension must be at least 1".into()));
    }
    Ok(Session {
        n: args.n,
        field,
        kind,
        variant: parse_variant(&args.variant)?,
    })
}

fn print_suite_report(report: &SuiteReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&report.laws).unwrap());
        return;
    }
    for law in &report.laws {
        let tag = match law.status {
            LawStatus::Pass => "PASS",
            LawStatus::Fail => "FAIL",
            LawStatus::Skipped => "SKIP",
        };
        match (&law.status, &law.counterexample) {
            (LawStatus::Fail, Some(cx)) => {
                println!("[{tag}] {}: {} -- {cx}", law.suite, law.law)
            }
            (LawStatus::Skipped, Some(why)) => {
                println!("[{tag}] {}: {} ({why})", law.suite, law.law)
            }
            _ => println!("[{tag}] {}: {}", law.suite, law.law),
        }
    }
    let fails = report.failures().len();
    let total = report.laws.len();
    println!(
        "{} laws checked, {} failed",
        total, fails
    );
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    let l_flag = match &cli.command {
        Command::Decompose { l, .. } => *l,
        _ => None,
    };
    let session = build_session(&cli.session, l_flag)?;
    let json = cli.session.json;
    let csv = cli.session.csv;

    match cli.command {
        Command::Eval { expr } => {
            let e = parse_element(&expr, &session).map_err(|e| Usage(e.to_string()))?;
            if json {
                println!("{}", serde_json::json!({ "result": e.to_string() }));
            } else {
                println!("{e}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Apply { operator, element } => {
            let op = parse_operator(&operator, &session).map_err(|e| Usage(e.to_string()))?;
            let el = parse_element(&element, &session).map_err(|e| Usage(e.to_string()))?;
            let out = op.apply(&el);
            if json {
                println!("{}", serde_json::json!({ "result": out.to_string() }));
            } else {
                println!("{out}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Normalize { word } => {
            let op = parse_operator(&word, &session).map_err(|e| Usage(e.to_string()))?;
            let nf = weyl_from_opexpr(&op, &session);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "variant": session.variant.to_string(),
                        "normal_form": nf.to_string(),
                        "terms": nf.num_terms(),
                    })
                );
            } else {
                println!("{nf}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            presentation,
        } => {
            let params = SuiteParams {
                n: session.n,
                field: session.field,
                kind: session.kind,
                degree: cli.session.deg,
                variant: session.variant,
                ..Default::default()
            };
            let report = match presentation {
                Some(p) if suite == "hopf" => {
                    let name = match p.as_str() {
                        "dq+" => PresentationName::Dq(WeylVariant::Plus),
                        "dq-" => PresentationName::Dq(WeylVariant::Minus),
                        "aq" => PresentationName::FrakAq,
                        "uq" => PresentationName::FrakUq,
                        other => {
                            return Err(Usage(format!(
                                "unknown presentation `{other}`: expected dq+, dq-, aq, or uq"
                            )))
                        }
                    };
                    let p = HopfPresentation::new(name, session.n, session.field);
                    let hopf_report = verify_hopf(&p, cli.session.deg);
                    let mut report = SuiteReport::new();
                    for r in hopf_report.results {
                        report.push(
                            "hopf",
                            format!("{name}: {}", r.axiom),
                            format!("hopf-{name}"),
                            r.counterexample,
                        );
                    }
                    report
                }
                Some(_) => {
                    return Err(Usage("--presentation only applies to the hopf suite".into()))
                }
                None => run_suite(&suite, &params).map_err(|e| Usage(e.to_string()))?,
            };
            print_suite_report(&report, json);
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Decompose { max_degree, .. } => {
            let cap = match session.kind {
                AlgebraKind::DividedPower => Some(max_degree),
                _ => None,
            };
            let report = decompose(session.kind, session.n, session.field, cap)
                .map_err(|e| Usage(e.to_string()))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else if csv {
                println!("degree,dimension,hw_vector,weight,submodule_dimension,simple");
                for c in &report.components {
                    for s in &c.summands {
                        println!(
                            "{},{},\"{}\",\"{}\",{},{}",
                            c.degree,
                            c.dimension,
                            s.vector,
                            s.weight_label,
                            s.submodule_dimension,
                            s.simple
                        );
                    }
                }
            } else {
                print!("{report}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Info => {
            let ch = char_q(&session.field);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "n": session.n,
                        "q": session.field.to_string(),
                        "char_q": ch,
                        "kind": session.kind.to_string(),
                        "variant": session.variant.to_string(),
                    })
                );
            } else {
                println!("n        = {}", session.n);
                println!("q        = {}", session.field);
                println!("char(q)  = {ch}");
                println!("kind     = {}", session.kind);
                println!("variant  = {}", session.variant);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Interpret an operator expression in the Weyl algebra: primitives become
/// one-symbol words, composition becomes the product (right factor applies
/// first), sums and scalar multiples pass through.
fn weyl_from_opexpr(op: &qdpa::ops::OpExpr, s: &Session) -> qdpa::weyl::WeylElement {
    use qdpa::ops::OpExpr;
    use qdpa::weyl::{normalize, WeylElement};
    match op {
        OpExpr::Identity => WeylElement::one(s.variant, s.n, s.field),
        OpExpr::Prim(p) => normalize(std::slice::from_ref(p), s.variant, s.n, &s.field),
        OpExpr::Compose(a, b) => {
            weyl_from_opexpr(a, s).mul(&weyl_from_opexpr(b, s))
        }
        OpExpr::Sum(terms) => {
            let mut acc = WeylElement::zero(s.variant, s.n, s.field);
            for t in terms {
                acc = acc.add(&weyl_from_opexpr(t, s));
            }
            acc
        }
        OpExpr::Scale(c, inner) => weyl_from_opexpr(inner, s).scale(c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
