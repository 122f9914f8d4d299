//! Built-in reference fixtures and their runner.
//!
//! The fixtures are data, kept in `fixtures/reference.toml` next to this
//! crate; the header of that file documents every kind.

use std::fmt;

use num_bigint::BigUint;
use serde::Deserialize;

use crate::betti::{extremal_corners, BettiTable};
use crate::constructions::{piecewise_lex, realize_matrix_greedy, u_ideal, GreedyOutcome};
use crate::enumeration::{
    search_extremal_profile, search_matrix, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};
use crate::error::{Error, Result};
use crate::extremal::{
    check_conditions, check_conditions_sharp, construct_ij_lex, ExtremalProfile,
};
use crate::ideal::{GeneratorMatrix, MVector, MonomialIdeal};
use crate::macaulay::{macaulay_shift, s_q, to_big};
use crate::monomial::Monomial;
use crate::oracle::{oracle_betti_with_budget, DEFAULT_ORACLE_BUDGET};

/// The reference fixture file, embedded at build time.
pub const REFERENCE_FIXTURES: &str = include_str!("../fixtures/reference.toml");

#[derive(Deserialize)]
struct FixtureFile {
    fixture: Vec<Fixture>,
}

#[derive(Deserialize, Clone, Debug)]
pub struct Fixture {
    pub name: String,
    #[serde(flatten)]
    pub kind: FixtureKind,
}

#[derive(Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FixtureKind {
    TwinTables {
        n: usize,
        stable: Vec<Vec<u32>>,
        other: Vec<Vec<u32>>,
        table: Vec<[u64; 3]>,
    },
    MatrixObstruction {
        n: usize,
        jmin: u32,
        rows: Vec<Vec<u64>>,
        dmax: u32,
    },
    GreedyRealization {
        n: usize,
        jmin: u32,
        rows: Vec<Vec<u64>>,
        realized: bool,
        #[serde(default)]
        new_generators: Vec<Vec<u32>>,
    },
    PiecewiseLex {
        n: usize,
        d: u32,
        m: Vec<u64>,
        generators: Vec<Vec<u32>>,
        strongly_stable: bool,
    },
    MultipleNotPiecewiseLex {
        d: u32,
        m: Vec<u64>,
        absent: Vec<u32>,
        present: Vec<u32>,
    },
    UIdealCounts {
        n: usize,
        ell: usize,
        k: u64,
        d: u32,
        mvector: Vec<u64>,
    },
    ExtremalFamily {
        n: usize,
        template: String,
        values: Vec<u64>,
        admissible: Vec<u64>,
        carried: u64,
        bound: u64,
    },
    PrefixSumAdjudication {
        n: usize,
        vector: Vec<u64>,
        q: u64,
        stated: u64,
        ell: usize,
        k: u64,
        d: u32,
        profile: String,
        dmax: u32,
    },
}

pub fn load_fixtures(text: &str) -> Result<Vec<Fixture>> {
    let file: FixtureFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(file.fixture)
}

pub fn reference_fixtures() -> Vec<Fixture> {
    load_fixtures(REFERENCE_FIXTURES).expect("embedded fixtures parse")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A budget ran out before the fixture could be decided.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug)]
pub struct FixtureResult {
    pub name: String,
    pub status: Status,
    /// Expected-versus-actual summary, plus notes.
    pub detail: String,
}

/// Knobs for a fixture run. `ek` is the table source for stable ideals and
/// can be swapped to check that the runner notices a broken formula.
pub struct RunConfig {
    pub oracle_budget: u64,
    pub search_budget: u64,
    pub ek: fn(&MonomialIdeal) -> Result<BettiTable>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            oracle_budget: DEFAULT_ORACLE_BUDGET,
            search_budget: DEFAULT_SEARCH_BUDGET,
            ek: crate::betti::ek_betti,
        }
    }
}

fn ideal_of(n: usize, rows: &[Vec<u32>]) -> Result<MonomialIdeal> {
    let gens = rows
        .iter()
        .map(|r| Monomial::new(r.clone()))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

fn matrix_of(n: usize, jmin: u32, rows: &[Vec<u64>]) -> Result<GeneratorMatrix> {
    GeneratorMatrix::new(n, jmin, rows.iter().cloned().map(MVector).collect())
}

fn table_diff(expected: &BettiTable, actual: &BettiTable) -> String {
    let mut keys: Vec<(usize, u32)> = expected.entries().map(|e| (e.0, e.1)).collect();
    keys.extend(actual.entries().map(|e| (e.0, e.1)));
    keys.sort();
    keys.dedup();
    let diffs: Vec<String> = keys
        .into_iter()
        .filter(|&(i, j)| expected.get(i, j) != actual.get(i, j))
        .map(|(i, j)| {
            format!(
                "beta_{{{i},{j}}}: expected {} got {}",
                expected.get(i, j),
                actual.get(i, j)
            )
        })
        .collect();
    diffs.join(", ")
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        ok,
        detail: detail.into(),
    })
}

fn run_one(kind: &FixtureKind, cfg: &RunConfig) -> Result<Outcome> {
    match kind {
        FixtureKind::TwinTables {
            n,
            stable,
            other,
            table,
        } => {
            let expected = BettiTable::from_entries(
                *n,
                table.iter().map(|e| (e[0] as usize, e[1] as u32, e[2])),
            )?;
            let a = ideal_of(*n, stable)?;
            let b = ideal_of(*n, other)?;
            let ek = (cfg.ek)(&a)?;
            let oracle = oracle_betti_with_budget(&b, cfg.oracle_budget)?;
            let mut notes = Vec::new();
            if ek != expected {
                notes.push(format!(
                    "Eliahou-Kervaire table differs: {}",
                    table_diff(&expected, &ek)
                ));
            }
            if oracle != expected {
                notes.push(format!(
                    "oracle table differs: {}",
                    table_diff(&expected, &oracle)
                ));
            }
            let stable_shapes = format!(
                "first ideal strongly stable: {}, second stable: {}",
                a.is_strongly_stable(),
                b.is_stable()
            );
            if notes.is_empty() {
                outcome(
                    true,
                    format!("both tables equal {}; {stable_shapes}", expected.to_json()),
                )
            } else {
                outcome(false, notes.join("; "))
            }
        }
        FixtureKind::MatrixObstruction {
            n,
            jmin,
            rows,
            dmax,
        } => {
            let m = matrix_of(*n, *jmin, rows)?;
            let necessary = crate::constructions::check_matrix_necessary(&m).passes();
            let search = search_matrix(&m, *dmax, cfg.search_budget)?;
            let ok = necessary && search == SearchOutcome::NoneCertified;
            outcome(
                ok,
                format!("necessary conditions pass: {necessary} (expected true); search: {search:?} (expected NoneCertified)"),
            )
        }
        FixtureKind::GreedyRealization {
            n,
            jmin,
            rows,
            realized,
            new_generators,
        } => {
            let m = matrix_of(*n, *jmin, rows)?;
            match realize_matrix_greedy(&m)? {
                GreedyOutcome::Realized(i) => {
                    let matches = i.generator_matrix()? == m;
                    let last = m.last_degree().unwrap_or(0);
                    let top: Vec<Vec<u32>> = i
                        .gens()
                        .iter()
                        .filter(|g| g.degree() == last && last > m.jmin())
                        .map(|g| g.exps().to_vec())
                        .collect();
                    let gens_ok = new_generators.is_empty() || &top == new_generators;
                    outcome(
                        *realized && matches && gens_ok,
                        format!("realized {i} (expected realized: {realized}); last-degree generators {top:?}"),
                    )
                }
                GreedyOutcome::Failed(f) => outcome(
                    !*realized,
                    format!("greedy stopped: {f} (expected realized: {realized})"),
                ),
            }
        }
        FixtureKind::PiecewiseLex {
            n,
            d,
            m,
            generators,
            strongly_stable,
        } => {
            let p = piecewise_lex(*d, &MVector(m.clone()))?;
            let expected = ideal_of(*n, generators)?;
            outcome(
                p.ideal == expected && p.strongly_stable == *strongly_stable,
                format!(
                    "got {} (strongly stable: {}), expected {expected} (strongly stable: {strongly_stable})",
                    p.ideal, p.strongly_stable
                ),
            )
        }
        FixtureKind::MultipleNotPiecewiseLex {
            d,
            m,
            absent,
            present,
        } => {
            let p = piecewise_lex(*d, &MVector(m.clone()))?;
            let mj = p.ideal.times_maximal(1);
            let u = Monomial::new(absent.clone())?;
            let v = Monomial::new(present.clone())?;
            let pl = mj.is_piecewise_lex_up_to(mj.n())?;
            let ok = !mj.contains(&u)
                && mj.contains(&v)
                && v < u
                && u.max_index() == v.max_index()
                && !pl;
            outcome(
                ok,
                format!(
                    "{u} in m*J: {}; {v} in m*J: {}; piecewise lex: {pl}",
                    mj.contains(&u),
                    mj.contains(&v)
                ),
            )
        }
        FixtureKind::UIdealCounts {
            n,
            ell,
            k,
            d,
            mvector,
        } => {
            let u = u_ideal(*ell, *k, *d, *n)?;
            let got = u.m_vector();
            let closed: Vec<BigUint> = (1..=*n)
                .map(|i| {
                    if i <= *ell {
                        macaulay_shift(&BigUint::from(*k), ell - 1, i as i64 - *ell as i64)
                    } else {
                        BigUint::from(0u32)
                    }
                })
                .collect();
            let ok = got.0 == *mvector && to_big(&got.0) == closed;
            let closed_txt: Vec<String> = closed.iter().map(|c| c.to_string()).collect();
            outcome(
                ok,
                format!(
                    "m-vector {got}, shift formula ({}), expected {}",
                    closed_txt.join(","),
                    MVector(mvector.clone())
                ),
            )
        }
        FixtureKind::ExtremalFamily {
            n,
            template,
            values,
            admissible,
            carried,
            bound,
        } => {
            let mut passing = Vec::new();
            let mut notes = Vec::new();
            let mut ok = true;
            for &b in values {
                let p = ExtremalProfile::parse(&template.replace("{b}", &b.to_string()), *n)?;
                let r = check_conditions(&p);
                let first = r.checks.iter().find(|c| c.p == 1).expect("two corners");
                if first.carried != Some(BigUint::from(*carried))
                    || first.rhs != BigUint::from(*bound)
                {
                    ok = false;
                    notes.push(format!("b={b}: {first}"));
                }
                if r.passes() != check_conditions_sharp(&p).passes() {
                    ok = false;
                    notes.push(format!("b={b}: refined test disagrees"));
                }
                if r.passes() {
                    passing.push(b);
                    let i = construct_ij_lex(&p)?;
                    let corners = extremal_corners(&(cfg.ek)(&i)?);
                    if corners != p.triples() {
                        ok = false;
                        notes.push(format!("b={b}: constructed corners {corners:?}"));
                    }
                }
            }
            ok &= passing == *admissible;
            outcome(
                ok,
                format!(
                    "carried term {carried}, bound {bound}; admissible b = {passing:?} (expected {admissible:?}){}",
                    if notes.is_empty() { String::new() } else { format!("; {}", notes.join("; ")) }
                ),
            )
        }
        FixtureKind::PrefixSumAdjudication {
            n,
            vector,
            q,
            stated,
            ell,
            k,
            d,
            profile,
            dmax,
        } => {
            let by_definition = s_q(&to_big(vector), *q);
            let u = u_ideal(*ell, *k, *d, *n)?;
            let idx = vector.len();
            let by_counting = u
                .times_maximal(*q as u32)
                .gens()
                .iter()
                .filter(|g| g.max_index() == idx)
                .count();
            let p = ExtremalProfile::parse(profile, *n)?;
            let verdict = check_conditions(&p).passes();
            let search = search_extremal_profile(&p, *dmax, cfg.search_budget)?;
            let found = matches!(search, SearchOutcome::Found(_));
            let decided = !matches!(search, SearchOutcome::NoneWithinBounds);
            let ok =
                by_definition == BigUint::from(by_counting as u64) && decided && verdict == found;
            let agreement = if by_definition == BigUint::from(*stated) {
                "agrees with".to_string()
            } else {
                "differs from".to_string()
            };
            outcome(
                ok,
                format!(
                    "S_{q}({}) = {by_definition} by definition, {by_counting} by counting; {agreement} the stated value {stated}; condition verdict {verdict}, search {}",
                    MVector(vector.clone()),
                    match search {
                        SearchOutcome::Found(i) => format!("found {i}"),
                        other => format!("{other:?}"),
                    }
                ),
            )
        }
    }
}

/// Runs every fixture. Budget errors mark a fixture as skipped; any other
/// error is a failure.
pub fn run_fixtures(fixtures: &[Fixture], cfg: &RunConfig) -> Vec<FixtureResult> {
    fixtures
        .iter()
        .map(|f| {
            let (status, detail) = match run_one(&f.kind, cfg) {
                Ok(o) => (if o.ok { Status::Pass } else { Status::Fail }, o.detail),
                Err(e @ Error::Budget(_)) => (Status::Skipped, e.to_string()),
                Err(e) => (Status::Fail, e.to_string()),
            };
            FixtureResult {
                name: f.name.clone(),
                status,
                detail,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        let f = reference_fixtures();
        assert!(f.len() >= 10);
        let mut names: Vec<&str> = f.iter().map(|x| x.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), f.len(), "fixture names are unique");
    }

    #[test]
    fn malformed_fixture_file() {
        assert!(matches!(
            load_fixtures("[[fixture]]\nname = 1"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn cheap_fixtures_pass() {
        let cheap: Vec<Fixture> = reference_fixtures()
            .into_iter()
            .filter(|f| {
                matches!(
                    f.kind,
                    FixtureKind::PiecewiseLex { .. }
                        | FixtureKind::UIdealCounts { .. }
                        | FixtureKind::MultipleNotPiecewiseLex { .. }
                        | FixtureKind::GreedyRealization { .. }
                )
            })
            .collect();
        for r in run_fixtures(&cheap, &RunConfig::default()) {
            assert_eq!(r.status, Status::Pass, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn tiny_budget_skips() {
        let f: Vec<Fixture> = reference_fixtures()
            .into_iter()
            .filter(|f| matches!(f.kind, FixtureKind::TwinTables { .. }))
            .collect();
        let cfg = RunConfig {
            oracle_budget: 3,
            ..Default::default()
        };
        let r = run_fixtures(&f, &cfg);
        assert_eq!(r[0].status, Status::Skipped);
    }

    fn corrupted_ek(i: &MonomialIdeal) -> Result<BettiTable> {
        let mut t = crate::betti::ek_betti(i)?;
        t.add(0, 9, 1)?;
        Ok(t)
    }

    #[test]
    fn corrupted_formula_is_caught() {
        let f: Vec<Fixture> = reference_fixtures()
            .into_iter()
            .filter(|f| matches!(f.kind, FixtureKind::TwinTables { .. }))
            .collect();
        let cfg = RunConfig {
            ek: corrupted_ek,
            ..Default::default()
        };
        let r = run_fixtures(&f, &cfg);
        assert_eq!(r[0].status, Status::Fail, "{}", r[0].detail);
    }
}
