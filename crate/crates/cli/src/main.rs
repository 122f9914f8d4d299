//! `extbetti`: command-line access to Betti tables, strongly stable
//! constructions and extremal Betti numbers of monomial ideals.

use std::fs;
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use extbetti_core::betti::{ek_betti, extremal_corners, RenderOptions};
use extbetti_core::constructions::{
    check_matrix_lex, check_matrix_necessary, lexsegment_ideal, murai_ideal, piecewise_lex,
    realize_matrix_greedy, u_ideal, GreedyOutcome, MatrixCheck,
};
use extbetti_core::enumeration::{
    count_strongly_stable, enumerate_strongly_stable, search_extremal_profile, search_matrix,
    SearchOutcome, DEFAULT_SEARCH_BUDGET,
};
use extbetti_core::extremal::{
    check_conditions, check_conditions_sharp, construct_ij_lex, ConditionReport,
};
use extbetti_core::fixtures::{reference_fixtures, run_fixtures, RunConfig, Status};
use extbetti_core::format::{
    corners_json, corners_text, ideal_json, matrix_json, parse_ideal, parse_matrix, write_ideal,
    write_matrix,
};
use extbetti_core::macaulay::{is_o_sequence, macaulay_rep, macaulay_shift};
use extbetti_core::oracle::{oracle_betti_with_budget, DEFAULT_ORACLE_BUDGET};
use extbetti_core::{BettiTable, BigUint, Error, ExtremalProfile, MVector, MonomialIdeal};

#[derive(Parser)]
#[command(
    name = "extbetti",
    version,
    about = "Graded Betti numbers of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Override the node or multidegree budget of searches and the oracle.
    #[arg(long, global = true)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Macaulay representations, shifts and O-sequences.
    Macaulay {
        #[command(subcommand)]
        op: MacaulayOp,
        #[command(flatten)]
        common: Common,
    },
    /// Betti table of the ideal in FILE ("-" reads standard input).
    Betti {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Ek)]
        method: Method,
        /// Show the table of S/I instead of I.
        #[arg(long)]
        quotient: bool,
        /// Print the zero rows from degree 1 on.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Matrix of generators of a strongly stable ideal.
    Matrix {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Necessary conditions on a matrix of generators.
    CheckMatrix {
        file: String,
        /// Test the lexsegment characterization instead.
        #[arg(long)]
        lex: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Greedy construction of an ideal with the given matrix of generators.
    RealizeMatrix {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Build one of the standard ideals.
    Construct {
        #[command(subcommand)]
        what: ConstructOp,
        #[command(flatten)]
        common: Common,
    },
    /// Extremal Betti profiles.
    Extremal {
        #[command(subcommand)]
        op: ExtremalOp,
        #[command(flatten)]
        common: Common,
    },
    /// All strongly stable ideals with generators of degree at most DMAX.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u32,
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive searches over strongly stable ideals.
    Search {
        #[command(subcommand)]
        op: SearchOp,
        #[command(flatten)]
        common: Common,
    },
    /// Replay the built-in reference fixtures.
    #[command(name = "verify-paper")]
    Fixtures {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Method {
    Oracle,
    Ek,
    Both,
}

#[derive(Subcommand)]
enum MacaulayOp {
    /// The d-th Macaulay representation of A.
    Rep { a: String, d: usize },
    /// A^<d,j>.
    Shift {
        a: String,
        d: usize,
        #[arg(allow_hyphen_values = true)]
        j: i64,
    },
    /// Whether a comma-separated sequence is an O-sequence.
    Oseq { seq: String },
}

#[derive(Subcommand)]
enum ConstructOp {
    /// Biggest m_i monomials of degree D with max-index i.
    PiecewiseLex {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: String,
    },
    /// Strongly stable ideal with a prescribed m-vector.
    Murai {
        #[arg(long)]
        m: String,
    },
    /// U(ell, k, d) in n variables.
    UIdeal {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
    },
    /// The lexsegment ideal of the top MU monomials of degree D.
    Lexsegment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        mu: u64,
    },
}

#[derive(Subcommand)]
enum ExtremalOp {
    /// Evaluate the existence inequalities for a profile.
    Check {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        n: usize,
        /// Also run an exhaustive search with generators up to this degree.
        #[arg(long)]
        confirm_dmax: Option<u32>,
    },
    /// Build the lexsegment-sum witness for a profile.
    Construct {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum SearchOp {
    /// An ideal with the matrix of generators in FILE.
    Matrix {
        file: String,
        #[arg(long)]
        dmax: u32,
    },
    /// An ideal with the given extremal Betti numbers.
    Profile {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u32,
    },
}

/// Exit status: 0 success, 1 negative answer, 2 bad input, 3 budget.
enum Failure {
    Negative,
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Run = Result<(), Failure>;

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
}

fn parse_list(text: &str) -> Result<Vec<u64>, Error> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            u64::from_str(s)
                .map_err(|_| Error::Parse(format!("{s:?} is not a nonnegative integer")))
        })
        .collect()
}

fn parse_big(text: &str) -> Result<BigUint, Error> {
    BigUint::from_str(text)
        .map_err(|_| Error::Parse(format!("{text:?} is not a nonnegative integer")))
}

fn emit(common: Common, value: Value, text: impl FnOnce() -> String) {
    if common.json {
        println!("{value}");
    } else {
        print!("{}", text());
    }
}

fn verdict(ok: bool) -> Run {
    if ok {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn macaulay(op: MacaulayOp, common: Common) -> Run {
    match op {
        MacaulayOp::Rep { a, d } => {
            if d == 0 {
                return Err(Error::Domain("d must be positive".into()).into());
            }
            let rep = macaulay_rep(&parse_big(&a)?, d);
            let terms: Vec<String> = rep
                .ks()
                .iter()
                .zip((1..=d).rev())
                .map(|(k, i)| format!("binom({k},{i})"))
                .collect();
            emit(common, json!({"a": a, "d": d, "k": rep.ks()}), || {
                format!("{a} = {}\n", terms.join(" + "))
            });
            Ok(())
        }
        MacaulayOp::Shift { a, d, j } => {
            if d == 0 {
                return Err(Error::Domain("d must be positive".into()).into());
            }
            let v = macaulay_shift(&parse_big(&a)?, d, j);
            emit(common, json!({"value": v.to_string()}), || format!("{v}\n"));
            Ok(())
        }
        MacaulayOp::Oseq { seq } => {
            let m = parse_list(&seq)?;
            let ok = is_o_sequence(&m);
            emit(common, json!({"o_sequence": ok}), || format!("{ok}\n"));
            verdict(ok)
        }
    }
}

fn budget_or(common: Common, default: u64) -> u64 {
    common.budget.unwrap_or(default)
}

fn betti(file: &str, method: Method, quotient: bool, full: bool, common: Common) -> Run {
    let ideal = parse_ideal(&read_input(file)?)?;
    let opts = RenderOptions {
        leading_zero_rows: full,
        quotient,
    };
    let oracle = || oracle_betti_with_budget(&ideal, budget_or(common, DEFAULT_ORACLE_BUDGET));
    let table: BettiTable = match method {
        Method::Ek => ek_betti(&ideal)?,
        Method::Oracle => oracle()?,
        Method::Both => {
            let a = ek_betti(&ideal)?;
            let b = oracle()?;
            if a != b {
                eprintln!("Eliahou-Kervaire and oracle tables differ");
                eprintln!("ek:\n{}oracle:\n{}", a.render(opts), b.render(opts));
                return Err(Failure::Negative);
            }
            a
        }
    };
    let corners = extremal_corners(&table);
    emit(
        common,
        json!({
            "table": serde_json::from_str::<Value>(&table.to_json()).expect("valid JSON"),
            "extremal": corners_json(&corners),
        }),
        || {
            format!(
                "{}extremal: {}\n",
                table.render(opts),
                corners_text(&corners)
            )
        },
    );
    Ok(())
}

fn report_check(check: &MatrixCheck, common: Common) -> Run {
    let list: Vec<String> = check.violations.iter().map(|v| v.to_string()).collect();
    emit(
        common,
        json!({"passes": check.passes(), "violations": list}),
        || {
            if check.passes() {
                "pass\n".to_string()
            } else {
                format!("fail\n{}\n", list.join("\n"))
            }
        },
    );
    verdict(check.passes())
}

fn construct(what: ConstructOp, common: Common) -> Run {
    let ideal: MonomialIdeal = match what {
        ConstructOp::PiecewiseLex { d, m } => {
            let p = piecewise_lex(d, &MVector(parse_list(&m)?))?;
            if !common.json {
                println!("# strongly stable: {}", p.strongly_stable);
            } else {
                println!(
                    "{}",
                    json!({"ideal": ideal_json(&p.ideal), "strongly_stable": p.strongly_stable})
                );
                return Ok(());
            }
            p.ideal
        }
        ConstructOp::Murai { m } => murai_ideal(&MVector(parse_list(&m)?))?,
        ConstructOp::UIdeal { ell, k, d, n } => u_ideal(ell, k, d, n)?,
        ConstructOp::Lexsegment { n, d, mu } => lexsegment_ideal(n, d, mu)?,
    };
    emit(common, ideal_json(&ideal), || write_ideal(&ideal));
    Ok(())
}

fn report_json(r: &ConditionReport) -> Value {
    Value::Array(
        r.checks
            .iter()
            .map(|c| {
                json!({
                    "p": c.p,
                    "carried": c.carried.as_ref().map(|s| s.to_string()),
                    "lhs": c.lhs.to_string(),
                    "rhs": c.rhs.to_string(),
                    "holds": c.holds(),
                })
            })
            .collect(),
    )
}

fn outcome_json(o: &SearchOutcome) -> Value {
    match o {
        SearchOutcome::Found(i) => json!({"outcome": "found", "ideal": ideal_json(i)}),
        SearchOutcome::NoneCertified => json!({"outcome": "none", "certified": true}),
        SearchOutcome::NoneWithinBounds => json!({"outcome": "none", "certified": false}),
    }
}

fn outcome_text(o: &SearchOutcome) -> String {
    match o {
        SearchOutcome::Found(i) => format!("found\n{}", write_ideal(i)),
        SearchOutcome::NoneCertified => "none (certified: no such ideal exists)\n".into(),
        SearchOutcome::NoneWithinBounds => "none found (bounded search)\n".into(),
    }
}

fn extremal(op: ExtremalOp, common: Common) -> Run {
    match op {
        ExtremalOp::Check {
            profile,
            n,
            confirm_dmax,
        } => {
            let p = ExtremalProfile::parse(&profile, n)?;
            let plain = check_conditions(&p);
            let sharp = check_conditions_sharp(&p);
            let search = match confirm_dmax {
                Some(d) => Some(search_extremal_profile(
                    &p,
                    d,
                    budget_or(common, DEFAULT_SEARCH_BUDGET),
                )?),
                None => None,
            };
            emit(
                common,
                json!({
                    "profile": p.to_string(),
                    "passes": sharp.passes(),
                    "conditions": report_json(&plain),
                    "refined": report_json(&sharp),
                    "search": search.as_ref().map(outcome_json),
                }),
                || {
                    let mut out = String::new();
                    for c in &plain.checks {
                        out.push_str(&format!("{c}\n"));
                    }
                    if plain != sharp {
                        out.push_str("refined (carried terms from the whole tail):\n");
                        for c in &sharp.checks {
                            out.push_str(&format!("{c}\n"));
                        }
                    }
                    out.push_str(if sharp.passes() { "pass\n" } else { "fail\n" });
                    if let Some(s) = &search {
                        out.push_str(&format!("search: {}", outcome_text(s)));
                    }
                    out
                },
            );
            verdict(sharp.passes())
        }
        ExtremalOp::Construct { profile, n } => {
            let p = ExtremalProfile::parse(&profile, n)?;
            let ideal = construct_ij_lex(&p)?;
            let table = ek_betti(&ideal)?;
            let corners = extremal_corners(&table);
            emit(
                common,
                json!({
                    "ideal": ideal_json(&ideal),
                    "table": serde_json::from_str::<Value>(&table.to_json()).expect("valid JSON"),
                    "extremal": corners_json(&corners),
                }),
                || {
                    format!(
                        "{}\n{}extremal: {}\n",
                        write_ideal(&ideal),
                        table.render(RenderOptions::default()),
                        corners_text(&corners)
                    )
                },
            );
            Ok(())
        }
    }
}

fn search(op: SearchOp, common: Common) -> Run {
    let budget = budget_or(common, DEFAULT_SEARCH_BUDGET);
    let outcome = match op {
        SearchOp::Matrix { file, dmax } => {
            search_matrix(&parse_matrix(&read_input(&file)?)?, dmax, budget)?
        }
        SearchOp::Profile { profile, n, dmax } => {
            search_extremal_profile(&ExtremalProfile::parse(&profile, n)?, dmax, budget)?
        }
    };
    emit(common, outcome_json(&outcome), || outcome_text(&outcome));
    verdict(matches!(outcome, SearchOutcome::Found(_)))
}

fn run_fixture_suite(common: Common) -> Run {
    let cfg = RunConfig {
        oracle_budget: budget_or(common, DEFAULT_ORACLE_BUDGET),
        search_budget: budget_or(common, DEFAULT_SEARCH_BUDGET),
        ..Default::default()
    };
    let results = run_fixtures(&reference_fixtures(), &cfg);
    let all_pass = results.iter().all(|r| r.status == Status::Pass);
    emit(
        common,
        Value::Array(
            results
                .iter()
                .map(
                    |r| json!({"name": r.name, "status": r.status.to_string(), "detail": r.detail}),
                )
                .collect(),
        ),
        || {
            results
                .iter()
                .map(|r| format!("{} {}: {}\n", r.status, r.name, r.detail))
                .collect()
        },
    );
    verdict(all_pass)
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Macaulay { op, common } => macaulay(op, common),
        Command::Betti {
            file,
            method,
            quotient,
            full,
            common,
        } => betti(&file, method, quotient, full, common),
        Command::Matrix { file, common } => {
            let m = parse_ideal(&read_input(&file)?)?.generator_matrix()?;
            emit(common, matrix_json(&m), || write_matrix(&m));
            Ok(())
        }
        Command::CheckMatrix { file, lex, common } => {
            let m = parse_matrix(&read_input(&file)?)?;
            let check = if lex {
                check_matrix_lex(&m)
            } else {
                check_matrix_necessary(&m)
            };
            report_check(&check, common)
        }
        Command::RealizeMatrix { file, common } => {
            let m = parse_matrix(&read_input(&file)?)?;
            match realize_matrix_greedy(&m)? {
                GreedyOutcome::Realized(i) => {
                    emit(
                        common,
                        json!({"realized": true, "ideal": ideal_json(&i)}),
                        || write_ideal(&i),
                    );
                    Ok(())
                }
                GreedyOutcome::Failed(f) => {
                    emit(
                        common,
                        json!({"realized": false, "failure": f.to_string()}),
                        || format!("greedy construction failed: {f}\n"),
                    );
                    Err(Failure::Negative)
                }
            }
        }
        Command::Construct { what, common } => construct(what, common),
        Command::Extremal { op, common } => extremal(op, common),
        Command::Enumerate {
            n,
            dmax,
            count_only,
            common,
        } => {
            let budget = budget_or(common, DEFAULT_SEARCH_BUDGET);
            if count_only {
                let c = count_strongly_stable(n, dmax, budget)?;
                emit(common, json!({"count": c}), || format!("{c}\n"));
            } else {
                let all = enumerate_strongly_stable(n, dmax, budget)?;
                emit(
                    common,
                    Value::Array(all.iter().map(ideal_json).collect()),
                    || all.iter().map(write_ideal).collect::<Vec<_>>().join("\n"),
                );
            }
            Ok(())
        }
        Command::Search { op, common } => search(op, common),
        Command::Fixtures { common } => run_fixture_suite(common),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Infeasible(_) => 1,
                Error::Budget(_) => 3,
                Error::Parse(_) | Error::Input(_) | Error::UnitIdeal | Error::Domain(_) => 2,
            })
        }
    }
}
