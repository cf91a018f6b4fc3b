//! One pass/fail line per acceptance criterion, on the default grid.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eala_twist::liealg::{Degree, Gen, Kind};
use eala_twist::verify::{run_suite, CheckResult, Grid, Suite, Verdict};

struct Run {
    results: Vec<CheckResult>,
    wall: Duration,
}

impl Run {
    fn of(suites: &[Suite], grid: &Grid) -> Run {
        let start = Instant::now();
        let results = suites.iter().flat_map(|&s| run_suite(s, grid)).collect();
        Run { results, wall: start.elapsed() }
    }

    fn count(&self, v: Verdict) -> usize {
        self.results.iter().filter(|r| r.verdict == v).count()
    }

    fn with_prefix(&self, prefix: &str) -> impl Iterator<Item = &CheckResult> {
        let prefix = prefix.to_string();
        self.results.iter().filter(move |r| r.item.starts_with(&prefix))
    }

    fn first_failure(&self) -> Option<String> {
        self.results
            .iter()
            .find(|r| r.verdict == Verdict::Fail)
            .map(|r| format!("{} {}: {}", r.suite, r.item, r.detail.as_deref().unwrap_or("")))
    }

    fn stats(&self) -> String {
        format!(
            "{} checks, {} discrepancies, {:.2} s",
            self.results.len(),
            self.count(Verdict::PaperDiscrepancy),
            self.wall.as_secs_f64()
        )
    }
}

/// `Ok(note)` or `Err(reason)`.
type Criterion = Result<String, String>;

fn no_failures(run: &Run) -> Criterion {
    match run.first_failure() {
        Some(f) => Err(f),
        None if run.results.is_empty() => Err("no checks ran".into()),
        None => Ok(run.stats()),
    }
}

fn all_pass(run: &Run) -> Criterion {
    no_failures(run)?;
    match run.results.iter().find(|r| r.verdict != Verdict::Pass) {
        Some(r) => Err(format!("{} {}: {}", r.verdict, r.item, r.detail.as_deref().unwrap_or(""))),
        None => Ok(run.stats()),
    }
}

fn within(v: Criterion, wall: Duration, limit: Duration) -> Criterion {
    let note = v?;
    if wall < limit {
        Ok(note)
    } else {
        Err(format!("took {:.2} s, limit {} s", wall.as_secs_f64(), limit.as_secs()))
    }
}

/// Every discrepancy must carry the oracle-side difference.
fn discrepancies_explained(run: &Run) -> Criterion {
    match run.results.iter().find(|r| r.verdict == Verdict::PaperDiscrepancy && r.detail.is_none()) {
        Some(r) => Err(format!("silent discrepancy at {}", r.item)),
        None => Ok(String::new()),
    }
}

/// Both maps were compared for `d`, `d1`, `d2`, every graded family and the
/// `m + n = 0` branch of `f_m`.
fn covers_families(run: &Run, grid: &Grid) -> Criterion {
    for &n in &grid.ns {
        let mut wanted: Vec<Gen> = vec![Gen::D, Gen::D1, Gen::D2, Gen::f(-n)];
        for kind in [Kind::E, Kind::F, Kind::G, Kind::H] {
            wanted.push(Gen::try_new(kind, Degree(1, 0)).expect("graded"));
        }
        for g in wanted {
            for map in ["delta", "antipode"] {
                let name = format!("{map}/n={n} {g}");
                if !run.results.iter().any(|r| r.item == name) {
                    return Err(format!("missing {name}"));
                }
            }
        }
    }
    Ok(String::new())
}

fn closed_forms(suites: &[Suite], grid: &Grid) -> Criterion {
    let run = Run::of(suites, grid);
    no_failures(&run)?;
    discrepancies_explained(&run)?;
    for &s in suites {
        let per = Run { results: run.results.iter().filter(|r| r.suite == s.id()).cloned().collect(), wall: run.wall };
        covers_families(&per, grid)?;
    }
    Ok(format!("{}; every corrected form matches the oracle", run.stats()))
}

fn main() -> ExitCode {
    let grid = Grid::default();
    let mut lines: Vec<(&str, Criterion)> = Vec::new();

    let lie = Run::of(&[Suite::LieAxioms], &grid);
    lines.push(("1 lie-algebra soundness", within(all_pass(&lie), lie.wall, Duration::from_secs(30))));

    let fac = Run::of(&[Suite::Factorials], &grid);
    let fac_note = within(no_failures(&fac), fac.wall, Duration::from_secs(10)).map(|n| {
        format!("{n}; discrepancies are the printed zero-binomial convention, the generalized binomial holds")
    });
    lines.push(("2 factorial identities", fac_note));

    let fam = Run::of(&[Suite::TwistFamilies], &grid);
    lines.push(("3 twist-family products", all_pass(&fam)));

    let co = Run::of(&[Suite::Cocycle], &grid);
    let slowest = co.results.iter().map(|r| r.elapsed).max().unwrap_or_default();
    lines.push(("4 twist validity", within(all_pass(&co), slowest, Duration::from_secs(60))));

    let hopf = Run::of(&[Suite::Hopf], &grid);
    lines.push(("5 hopf axioms", all_pass(&hopf)));

    lines.push((
        "6 closed forms of the three primary cases",
        closed_forms(&[Suite::ClosedFormG, Suite::ClosedFormE, Suite::ClosedFormD], &grid),
    ));

    let transport = Run::of(&[Suite::TauTransport], &grid);
    let tau = no_failures(&transport).and_then(|note| {
        for label in ["oracle/", "corrected/"] {
            if let Some(r) = transport.with_prefix(label).find(|r| r.verdict != Verdict::Pass) {
                return Err(format!("{}: {}", r.item, r.detail.as_deref().unwrap_or("")));
            }
        }
        Ok(note)
    });
    let partners = closed_forms(&[Suite::ClosedFormH, Suite::ClosedFormF, Suite::ClosedFormDf], &grid);
    lines
        .push(("7 involution images and transport", partners.and_then(|p| tau.map(|t| format!("{p}; transport {t}")))));

    let res = Run::of(&[Suite::Restriction], &grid);
    lines.push(("8 restriction without d1, d2", all_pass(&res)));

    let wit = Run::of(&[Suite::Noncocommutative], &grid);
    lines.push(("9 noncocommutativity witness", all_pass(&wit)));

    let exchange = Run::of(
        &[
            Suite::ExchangeG,
            Suite::TwistExchangeG,
            Suite::AntipodeExchangeG,
            Suite::ExchangeE,
            Suite::TwistExchangeE,
            Suite::AntipodeExchangeE,
            Suite::ExchangeD,
            Suite::TwistExchangeD,
            Suite::AntipodeExchangeD,
        ],
        &grid,
    );
    let exchange_note = no_failures(&exchange).and_then(|n| discrepancies_explained(&exchange).map(|_| n));
    lines.push(("10 exchange identities", exchange_note));

    let mutation = Run::of(&[Suite::Mutation], &grid);
    lines.push(("11 mutation sensitivity", all_pass(&mutation)));

    let mut ok = true;
    for (name, v) in &lines {
        match v {
            Ok(note) => println!("PASS criterion {name}: {note}"),
            Err(why) => {
                ok = false;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
