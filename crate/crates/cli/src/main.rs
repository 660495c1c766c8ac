use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use lg_core::alexander::{alexander, check_specializations};
use lg_core::braid::{lg, mirror, BraidWord};
use lg_core::fixtures::{check_fixture, expand_table_notation, load_fixtures, shipped_fixtures, KnotFixture};
use lg_core::obstruct::obstruction_report;
use lg_core::repdata::{basis, transcribed_braiding, RepData};
use lg_core::ring::{bar_involution, bilaurent_to_json, p_degree_stats, p_inversion, ExtScalar};
use lg_core::tangle::{double_clasp_identity_holds, evaluate, scalar_of, skein_identity_holds, LayeredTangle};
use lg_core::Error;

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "lg", version, about = "Links-Gould invariant of braid closures and tangles")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate LG of a braid closure, e.g. `lg compute "n=3; 1 -2 1 -2"`.
    Compute {
        braid: Option<String>,
        /// Use the Hopf link H_n (boundary of an annulus with n full twists).
        #[arg(long, allow_negative_numbers = true)]
        hopf: Option<i32>,
        /// Read a layered (1,1)-tangle from a file instead of a braid.
        #[arg(long)]
        tangle: Option<PathBuf>,
    },
    /// Obstruction report for a top coefficient, e.g. `lg analyze "3*q^2+q^4"` or `lg analyze "q^-2*a_2*a_-2"`.
    Analyze { poly: String },
    /// Check the representation, the skein identities and the fixture set.
    Validate {
        /// Skip braids with more than 6 strands.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Corrupt one braiding entry before validating.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Recompute every fixture and compare with the tabulated values.
    Tables {
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Run only the named fixture.
        #[arg(long)]
        only: Option<String>,
        /// Skip braids with more than 6 strands.
        #[arg(long)]
        quick: bool,
    },
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::IllFormedTangle { .. } | Error::OrientationMismatch(_) | Error::ZeroPolynomial => {
            EXIT_PARSE
        }
        _ => EXIT_FAILURE,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_for(&e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { braid, hopf, tangle } => compute(braid, hopf, tangle, cli.json),
        Command::Analyze { poly } => analyze(&poly),
        Command::Validate { quick, fixtures, inject_fault } => validate(quick, fixtures, inject_fault, cli.json),
        Command::Tables { fixtures, only, quick } => tables(fixtures, only, quick, cli.json),
    };
    result.unwrap_or_else(fail)
}

fn compute(braid: Option<String>, hopf: Option<i32>, tangle: Option<PathBuf>, as_json: bool) -> Result<ExitCode, Error> {
    let rep = lg_core::load_rep()?;
    let (input, value) = match (braid, hopf, tangle) {
        (Some(text), None, None) => {
            let b = BraidWord::parse(&text)?;
            (b.to_string(), lg(&b, &rep)?)
        }
        (None, Some(n), None) => {
            let b = BraidWord::hopf(n)?;
            (b.to_string(), lg(&b, &rep)?)
        }
        (None, None, Some(path)) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let t = LayeredTangle::parse(&text)?;
            (path.display().to_string(), scalar_of(&evaluate(&t, &rep)?)?)
        }
        _ => return Err(Error::Parse("give exactly one of a braid, --hopf or --tangle".into())),
    };
    let stats = if value.is_zero() { None } else { Some(p_degree_stats(&value)?) };
    if as_json {
        let mut out = json!({ "input": input, "lg": bilaurent_to_json(&value), "lg_text": value.to_string() });
        if let Some((deg, span, top)) = &stats {
            out["deg_p_plus"] = json!(deg);
            out["p_span"] = json!(span);
            out["top"] = json!(top.to_string());
        }
        println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    } else {
        println!("LG = {value}");
        if let Some((deg, span, top)) = stats {
            println!("deg_p+ = {deg}");
            println!("p_span = {span}");
            println!("top = {top}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn analyze(text: &str) -> Result<ExitCode, Error> {
    let f = expand_table_notation(text)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let report = obstruction_report(&f);
    println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("json"));
    Ok(if report.verdict.is_annular() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_NEGATIVE) })
}

fn fixture_set(path: Option<PathBuf>, quick: bool) -> Result<Vec<KnotFixture>, Error> {
    let mut fx = match path {
        Some(p) => load_fixtures(&p)?,
        None => shipped_fixtures(),
    };
    if quick {
        fx.retain(|f| f.braid_word().map_or(true, |b| b.strands() <= 6));
    }
    Ok(fx)
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn check(name: impl Into<String>, r: Result<bool, Error>) -> Check {
    match r {
        Ok(passed) => Check { name: name.into(), passed, detail: String::new() },
        Err(e) => Check { name: name.into(), passed: false, detail: e.to_string() },
    }
}

fn fixture_checks(f: &KnotFixture, rep: &RepData) -> Vec<Check> {
    let evaluated = f.braid_word().and_then(|b| Ok((lg(&b, rep)?, b)));
    let (value, b) = match evaluated {
        Ok(x) => x,
        Err(e) => return vec![check(format!("fixture {}", f.name), Err(e))],
    };
    let spec = alexander(&b).map(|a| check_specializations(&value, &a));
    let mirrored = lg(&mirror(&b), rep).map(|m| m == bar_involution(&value));
    vec![
        check(format!("specializations {}", f.name), spec),
        check(format!("p-symmetry {}", f.name), Ok(p_inversion(&value) == value)),
        check(format!("mirror rule {}", f.name), mirrored),
    ]
}

fn print_checks(checks: &[Check], as_json: bool) {
    if as_json {
        let rows: Vec<_> =
            checks.iter().map(|c| json!({ "check": c.name, "passed": c.passed, "detail": c.detail })).collect();
        println!("{}", serde_json::to_string_pretty(&rows).expect("json"));
        return;
    }
    for c in checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            println!("{status}  {}", c.name);
        } else {
            println!("{status}  {}: {}", c.name, c.detail);
        }
    }
}

fn validate(quick: bool, fixtures: Option<PathBuf>, inject_fault: bool, as_json: bool) -> Result<ExitCode, Error> {
    let mut braiding = transcribed_braiding();
    if inject_fault {
        braiding.set(basis(2, 1), basis(1, 2), ExtScalar::mono(1, 0, 2));
    }
    let rep = match RepData::from_braiding(braiding) {
        Ok(rep) => rep,
        Err(e) => {
            print_checks(&[check("representation", Err(e))], as_json);
            return Ok(ExitCode::from(EXIT_FAILURE));
        }
    };
    let mut checks = vec![check("representation", Ok(true))];
    for n in 1..=3 {
        checks.push(check(format!("skein identity n={n}"), skein_identity_holds(n, &rep)));
    }
    checks.push(check("double clasp identity", double_clasp_identity_holds(&rep)));
    let fx = fixture_set(fixtures, quick)?;
    let per_fixture: Vec<Vec<Check>> = fx.par_iter().map(|f| fixture_checks(f, &rep)).collect();
    checks.extend(per_fixture.into_iter().flatten());
    print_checks(&checks, as_json);
    Ok(if checks.iter().all(|c| c.passed) { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAILURE) })
}

/// Orders `3_1 < 8_3 < 8_15 < 11a_367` by crossing number, then by index.
fn name_key(name: &str) -> (u32, String, u32, String) {
    let number = |s: &str| s.chars().take_while(|c| c.is_ascii_digit()).collect::<String>().parse().unwrap_or(u32::MAX);
    let (head, tail) = name.split_once('_').unwrap_or((name, ""));
    (number(head), head.to_string(), number(tail), name.to_string())
}

fn tables(fixtures: Option<PathBuf>, only: Option<String>, quick: bool, as_json: bool) -> Result<ExitCode, Error> {
    let rep = lg_core::load_rep()?;
    let mut fx = fixture_set(fixtures, quick)?;
    if let Some(name) = &only {
        fx.retain(|f| &f.name == name);
        if fx.is_empty() {
            return Err(Error::Parse(format!("no fixture named {name:?}")));
        }
    }
    fx.sort_by_key(|f| name_key(&f.name));
    let results: Vec<_> = fx.par_iter().map(|f| (f, check_fixture(f, &rep))).collect();
    let mut mismatches = 0;
    let mut rows = Vec::new();
    for (f, r) in results {
        match r {
            Ok(c) => {
                mismatches += c.mismatches.len();
                if as_json {
                    rows.push(json!({
                        "name": c.name,
                        "deg_p_plus": c.deg,
                        "top": c.top.to_string(),
                        "expected_top": f.expected_top().map(|t| t.to_string()).unwrap_or_default(),
                        "report": c.report.to_json(),
                        "mismatches": c.mismatches,
                    }));
                } else if c.passed() {
                    println!("ok        {:8} deg_p+={:<2} top={}  {}", c.name, c.deg, c.top, c.report.verdict);
                } else {
                    for m in &c.mismatches {
                        println!("MISMATCH  {:8} {m}", c.name);
                    }
                }
            }
            Err(e) => {
                mismatches += 1;
                if as_json {
                    rows.push(json!({ "name": f.name, "error": e.to_string() }));
                } else {
                    println!("ERROR     {:8} {e}", f.name);
                }
            }
        }
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&json!({ "fixtures": rows, "mismatches": mismatches })).expect("json"));
    } else {
        println!("{} fixtures, {mismatches} mismatches", fx.len());
    }
    Ok(if mismatches == 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAILURE) })
}
