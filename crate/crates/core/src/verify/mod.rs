//! Named, enumerable check suites with machine-readable results.
//!
//! Every suite expands a [`Grid`] into independent [`Item`]s. Items run in
//! parallel when the `parallel` feature is on and sequentially otherwise; the
//! result order is the item order either way.

mod algebra;
mod exchange;
mod forms;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::liealg::Degree;
use crate::scalars::{int, rat, Rational};
use crate::series::{compare_series, Series};
use crate::uea::{Tensor, UElt};

/// Outcome of one check. `Fail` means an internal inconsistency;
/// `PaperDiscrepancy` means a printed formula disagrees with direct computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    PaperDiscrepancy,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::PaperDiscrepancy => "paper-discrepancy",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameter ranges shared by the suites.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    /// Truncation order `N` for series checks.
    pub order: usize,
    /// Truncation order for the twist-family products.
    pub family_order: usize,
    /// The `n` degrees defining `E`.
    pub ns: Vec<Degree>,
    /// Sampled generator degrees lie in `[-radius, radius]^2`, plus `-n`.
    pub radius: i64,
    /// Degree window for the Hopf-axiom samples.
    pub hopf_radius: i64,
    /// Shift parameters `c` for the twist families and exchange identities.
    pub cs: Vec<Rational>,
    /// Largest power `i`, `j` in exchange identities.
    pub max_power: usize,
    /// Largest `r`, `s`, `m` in the factorial identities.
    pub max_factorial: usize,
    /// Random generator pairs per context for the multiplicativity axioms.
    pub pairs: usize,
    pub seed: u64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            order: 3,
            family_order: 4,
            ns: vec![Degree(1, 1), Degree(0, 1), Degree(2, -1)],
            radius: 2,
            hopf_radius: 1,
            cs: vec![int(0), int(1), rat(-1, 2)],
            max_power: 3,
            max_factorial: 4,
            pairs: 12,
            seed: 0,
        }
    }
}

impl Grid {
    /// A small grid that still reaches every formula branch.
    pub fn quick() -> Self {
        Grid {
            order: 2,
            family_order: 3,
            ns: vec![Degree(1, 1), Degree(0, 1)],
            radius: 1,
            hopf_radius: 1,
            cs: vec![int(0), rat(-1, 2)],
            max_power: 2,
            max_factorial: 2,
            pairs: 3,
            seed: 0,
        }
    }

    /// Sets `N`; the twist-family products run one order higher.
    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self.family_order = order + 1;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Sampled degrees `m` for a given `n`: the window plus `-n`.
    pub fn degrees(&self, n: Degree) -> Vec<Degree> {
        let mut out = Vec::new();
        for a in -self.radius..=self.radius {
            for b in -self.radius..=self.radius {
                out.push(Degree(a, b));
            }
        }
        if !out.contains(&-n) {
            out.push(-n);
        }
        out
    }
}

/// The suites. Each one covers a family of identities; see [`Suite::about`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    LieAxioms,
    Mutation,
    Factorials,
    TwistFamilies,
    Cocycle,
    Hopf,
    Restriction,
    Noncocommutative,
    ExchangeG,
    TwistExchangeG,
    AntipodeExchangeG,
    ExchangeE,
    TwistExchangeE,
    AntipodeExchangeE,
    ExchangeD,
    TwistExchangeD,
    AntipodeExchangeD,
    ClosedFormG,
    ClosedFormE,
    ClosedFormD,
    ClosedFormH,
    ClosedFormF,
    ClosedFormDf,
    TauTransport,
}

impl Suite {
    pub const ALL: [Suite; 24] = [
        Suite::LieAxioms,
        Suite::Mutation,
        Suite::Factorials,
        Suite::TwistFamilies,
        Suite::Cocycle,
        Suite::Hopf,
        Suite::Restriction,
        Suite::Noncocommutative,
        Suite::ExchangeG,
        Suite::TwistExchangeG,
        Suite::AntipodeExchangeG,
        Suite::ExchangeE,
        Suite::TwistExchangeE,
        Suite::AntipodeExchangeE,
        Suite::ExchangeD,
        Suite::TwistExchangeD,
        Suite::AntipodeExchangeD,
        Suite::ClosedFormG,
        Suite::ClosedFormE,
        Suite::ClosedFormD,
        Suite::ClosedFormH,
        Suite::ClosedFormF,
        Suite::ClosedFormDf,
        Suite::TauTransport,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::LieAxioms => "lie-axioms",
            Suite::Mutation => "mutation",
            Suite::Factorials => "factorials",
            Suite::TwistFamilies => "twist-families",
            Suite::Cocycle => "cocycle",
            Suite::Hopf => "hopf",
            Suite::Restriction => "restriction",
            Suite::Noncocommutative => "noncocommutative",
            Suite::ExchangeG => "exchange-g",
            Suite::TwistExchangeG => "twist-exchange-g",
            Suite::AntipodeExchangeG => "antipode-exchange-g",
            Suite::ExchangeE => "exchange-e",
            Suite::TwistExchangeE => "twist-exchange-e",
            Suite::AntipodeExchangeE => "antipode-exchange-e",
            Suite::ExchangeD => "exchange-d",
            Suite::TwistExchangeD => "twist-exchange-d",
            Suite::AntipodeExchangeD => "antipode-exchange-d",
            Suite::ClosedFormG => "closed-form-g",
            Suite::ClosedFormE => "closed-form-e",
            Suite::ClosedFormD => "closed-form-d",
            Suite::ClosedFormH => "closed-form-h",
            Suite::ClosedFormF => "closed-form-f",
            Suite::ClosedFormDf => "closed-form-df",
            Suite::TauTransport => "tau-transport",
        }
    }

    /// One-line description for listings.
    pub fn about(self) -> &'static str {
        match self {
            Suite::LieAxioms => "antisymmetry and Jacobi on the bracket table",
            Suite::Mutation => "every corrupted q-exponent breaks the Jacobi check",
            Suite::Factorials => "rising/falling factorial identities",
            Suite::TwistFamilies => "products of the twist families and the coproduct of T^[m]",
            Suite::Cocycle => "cocycle and counit conditions for the twist",
            Suite::Hopf => "Hopf axioms of the twisted structure",
            Suite::Restriction => "Hopf axioms without d1, d2 in the T = ±d/2 cases",
            Suite::Noncocommutative => "a generator whose coproduct is not flip-symmetric mod t^2",
            Suite::ExchangeG => "moving generators past T-factorials and powers of E = g_n",
            Suite::TwistExchangeG => "moving generators past I_c for E = g_n",
            Suite::AntipodeExchangeG => "moving generators past J_c for E = g_n",
            Suite::ExchangeE => "moving generators past powers of E = e_n",
            Suite::TwistExchangeE => "moving generators past I_c for E = e_n",
            Suite::AntipodeExchangeE => "moving generators past J_c for E = e_n",
            Suite::ExchangeD => "moving generators past factorials of T = d/2",
            Suite::TwistExchangeD => "moving generators past I_c for T = d/2",
            Suite::AntipodeExchangeD => "moving generators past J_c for T = d/2",
            Suite::ClosedFormG => "closed-form coproduct and antipode, E = g_n",
            Suite::ClosedFormE => "closed-form coproduct and antipode, E = e_n",
            Suite::ClosedFormD => "closed-form coproduct and antipode, T = d/2",
            Suite::ClosedFormH => "closed-form coproduct and antipode, E = h_n",
            Suite::ClosedFormF => "closed-form coproduct and antipode, E = f_n",
            Suite::ClosedFormDf => "closed-form coproduct and antipode, T = -d/2",
            Suite::TauTransport => "involution transport between paired cases",
        }
    }

    /// Expands the suite into its items.
    pub fn items(self, grid: &Grid) -> Vec<Item> {
        match self {
            Suite::LieAxioms => algebra::lie_axioms(grid),
            Suite::Mutation => algebra::mutation(grid),
            Suite::Factorials => algebra::factorials(grid),
            Suite::TwistFamilies => algebra::twist_families(grid),
            Suite::Cocycle => algebra::cocycle(grid),
            Suite::Hopf => algebra::hopf(grid),
            Suite::Restriction => algebra::restriction(grid),
            Suite::Noncocommutative => algebra::noncocommutative(grid),
            Suite::ExchangeG => exchange::exchange_g(grid),
            Suite::TwistExchangeG => exchange::twist_exchange_g(grid),
            Suite::AntipodeExchangeG => exchange::antipode_exchange_g(grid),
            Suite::ExchangeE => exchange::exchange_e(grid),
            Suite::TwistExchangeE => exchange::twist_exchange_e(grid),
            Suite::AntipodeExchangeE => exchange::antipode_exchange_e(grid),
            Suite::ExchangeD => exchange::exchange_d(grid),
            Suite::TwistExchangeD => exchange::twist_exchange_d(grid),
            Suite::AntipodeExchangeD => exchange::antipode_exchange_d(grid),
            Suite::ClosedFormG => forms::closed_form(crate::twist::Case::G, grid),
            Suite::ClosedFormE => forms::closed_form(crate::twist::Case::E, grid),
            Suite::ClosedFormD => forms::closed_form(crate::twist::Case::D, grid),
            Suite::ClosedFormH => forms::closed_form(crate::twist::Case::H, grid),
            Suite::ClosedFormF => forms::closed_form(crate::twist::Case::F, grid),
            Suite::ClosedFormDf => forms::closed_form(crate::twist::Case::DF, grid),
            Suite::TauTransport => forms::tau_transport(grid),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.id() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Verdict and optional explanation produced by one item.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub detail: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { verdict: Verdict::Pass, detail: None }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::Fail, detail: Some(detail.into()) }
    }

    pub fn discrepancy(detail: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::PaperDiscrepancy, detail: Some(detail.into()) }
    }

    /// Pass when `mismatch` is `None`, fail otherwise.
    pub fn expect_none(mismatch: Option<String>) -> Self {
        match mismatch {
            None => Outcome::pass(),
            Some(d) => Outcome::fail(d),
        }
    }
}

type CheckFn = Box<dyn Fn() -> Vec<Outcome> + Send + Sync>;

/// One independent unit of work yielding one outcome per name. Grouping lets
/// several checks share an expensive intermediate.
pub struct Item {
    pub names: Vec<String>,
    check: CheckFn,
}

impl Item {
    pub fn new(name: impl Into<String>, check: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Item { names: vec![name.into()], check: Box::new(move || vec![check()]) }
    }

    pub fn group(names: Vec<String>, check: impl Fn() -> Vec<Outcome> + Send + Sync + 'static) -> Self {
        Item { names, check: Box::new(check) }
    }

    pub fn run(&self) -> Vec<Outcome> {
        let out = (self.check)();
        assert_eq!(out.len(), self.names.len(), "item {:?} produced the wrong number of outcomes", self.names);
        out
    }
}

impl fmt::Debug for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Item").field("names", &self.names).finish_non_exhaustive()
    }
}

/// The result of running one item.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub item: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl CheckResult {
    /// Everything except the timing, for determinism comparisons.
    pub fn outcome(&self) -> (&str, &str, Verdict, Option<&str>) {
        (&self.suite, &self.item, self.verdict, self.detail.as_deref())
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("check results serialize")
    }
}

/// How to schedule items.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled.
    #[default]
    Parallel,
}

fn run_one(suite: Suite, item: &Item) -> Vec<CheckResult> {
    let start = Instant::now();
    let outcomes = item.run();
    let elapsed = start.elapsed() / outcomes.len().max(1) as u32;
    item.names
        .iter()
        .zip(outcomes)
        .map(|(name, outcome)| CheckResult {
            suite: suite.id().to_string(),
            item: name.clone(),
            verdict: outcome.verdict,
            detail: outcome.detail,
            elapsed,
        })
        .collect()
}

/// Runs items and returns their results in item order, in parallel when
/// requested and the `parallel` feature is enabled.
pub fn run_items(suite: Suite, items: &[Item], exec: Execution) -> Vec<CheckResult> {
    let nested: Vec<Vec<CheckResult>> = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(|item| run_one(suite, item)).collect()
        }
        _ => items.iter().map(|item| run_one(suite, item)).collect(),
    };
    nested.into_iter().flatten().collect()
}

pub fn run_suite(suite: Suite, grid: &Grid) -> Vec<CheckResult> {
    run_suite_with(suite, grid, Execution::default())
}

pub fn run_suite_with(suite: Suite, grid: &Grid, exec: Execution) -> Vec<CheckResult> {
    run_items(suite, &suite.items(grid), exec)
}

/// Aggregated results of several suites.
#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub results: Vec<CheckResult>,
}

impl Summary {
    pub fn new(results: Vec<CheckResult>) -> Self {
        Summary { results }
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.results.iter().filter(|r| r.verdict == verdict).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.verdict == Verdict::PaperDiscrepancy)
    }

    pub fn all_green(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    /// Per-suite counts as an aligned text table.
    pub fn table(&self) -> String {
        let mut rows: Vec<(String, usize, usize, usize, Duration)> = Vec::new();
        for r in &self.results {
            if rows.last().map(|row| row.0 != r.suite).unwrap_or(true) {
                rows.push((r.suite.clone(), 0, 0, 0, Duration::ZERO));
            }
            let row = rows.last_mut().expect("just pushed");
            match r.verdict {
                Verdict::Pass => row.1 += 1,
                Verdict::Fail => row.2 += 1,
                Verdict::PaperDiscrepancy => row.3 += 1,
            }
            row.4 += r.elapsed;
        }
        let mut out = format!("{:<22} {:>7} {:>5} {:>12} {:>10}\n", "suite", "pass", "fail", "discrepancy", "cpu-ms");
        for (suite, p, f, d, t) in rows {
            out += &format!("{:<22} {:>7} {:>5} {:>12} {:>10.1}\n", suite, p, f, d, t.as_secs_f64() * 1e3);
        }
        out += &format!(
            "{:<22} {:>7} {:>5} {:>12}\n",
            "total",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::PaperDiscrepancy)
        );
        out
    }
}

pub fn run_all(grid: &Grid) -> Summary {
    run_all_with(grid, Execution::default())
}

pub fn run_all_with(grid: &Grid, exec: Execution) -> Summary {
    let mut results = Vec::new();
    for suite in Suite::ALL {
        results.extend(run_suite_with(suite, grid, exec));
    }
    Summary::new(results)
}

/// Every displayed identity and the suite responsible for it. The manifest
/// test checks that each label names at least one item of its suite.
pub const MANIFEST: &[(Suite, &str)] = &[
    (Suite::LieAxioms, "antisymmetry"),
    (Suite::LieAxioms, "jacobi"),
    (Suite::Mutation, "mutation"),
    (Suite::Factorials, "rising-split"),
    (Suite::Factorials, "falling-split"),
    (Suite::Factorials, "falling-as-rising"),
    (Suite::Factorials, "mixed-sum"),
    (Suite::Factorials, "falling-sum"),
    (Suite::TwistFamilies, "twist-product"),
    (Suite::TwistFamilies, "u-product"),
    (Suite::TwistFamilies, "delta-falling"),
    (Suite::TwistFamilies, "u-closed-form"),
    (Suite::TwistFamilies, "u-inverse-closed-form"),
    (Suite::Cocycle, "cocycle"),
    (Suite::Cocycle, "counit-left"),
    (Suite::Cocycle, "counit-right"),
    (Suite::Hopf, "coassociativity"),
    (Suite::Hopf, "counit-left"),
    (Suite::Hopf, "counit-right"),
    (Suite::Hopf, "antipode-left"),
    (Suite::Hopf, "antipode-right"),
    (Suite::Hopf, "delta-multiplicative"),
    (Suite::Hopf, "counit-multiplicative"),
    (Suite::Hopf, "antipode-antimultiplicative"),
    (Suite::Restriction, "closed"),
    (Suite::Restriction, "coassociativity"),
    (Suite::Restriction, "antipode-left"),
    (Suite::Noncocommutative, "witness"),
    (Suite::ExchangeG, "l-falling"),
    (Suite::ExchangeG, "l-rising"),
    (Suite::ExchangeG, "e-falling"),
    (Suite::ExchangeG, "e-rising"),
    (Suite::ExchangeG, "f-power"),
    (Suite::ExchangeG, "e-power"),
    (Suite::ExchangeG, "g-power"),
    (Suite::ExchangeG, "d-power"),
    (Suite::ExchangeG, "h-power"),
    (Suite::ExchangeG, "di-power"),
    (Suite::TwistExchangeG, "l-left"),
    (Suite::TwistExchangeG, "di-right"),
    (Suite::TwistExchangeG, "h-right"),
    (Suite::TwistExchangeG, "d-right"),
    (Suite::TwistExchangeG, "f-right"),
    (Suite::TwistExchangeG, "e-right"),
    (Suite::TwistExchangeG, "g-right"),
    (Suite::AntipodeExchangeG, "h-j"),
    (Suite::AntipodeExchangeG, "d-j"),
    (Suite::AntipodeExchangeG, "di-j"),
    (Suite::AntipodeExchangeG, "f-j"),
    (Suite::AntipodeExchangeG, "e-j"),
    (Suite::AntipodeExchangeG, "g-j"),
    (Suite::ExchangeE, "e-power"),
    (Suite::ExchangeE, "d-power"),
    (Suite::ExchangeE, "di-power"),
    (Suite::ExchangeE, "f-power"),
    (Suite::ExchangeE, "f-power-opposite"),
    (Suite::ExchangeE, "g-power"),
    (Suite::ExchangeE, "h-power"),
    (Suite::TwistExchangeE, "l-left"),
    (Suite::TwistExchangeE, "di-right"),
    (Suite::TwistExchangeE, "e-right"),
    (Suite::TwistExchangeE, "f-right"),
    (Suite::TwistExchangeE, "f-right-opposite"),
    (Suite::TwistExchangeE, "g-right"),
    (Suite::TwistExchangeE, "h-right"),
    (Suite::TwistExchangeE, "d-right"),
    (Suite::AntipodeExchangeE, "e-j"),
    (Suite::AntipodeExchangeE, "di-j"),
    (Suite::AntipodeExchangeE, "f-j"),
    (Suite::AntipodeExchangeE, "f-j-opposite"),
    (Suite::AntipodeExchangeE, "g-j"),
    (Suite::AntipodeExchangeE, "h-j"),
    (Suite::AntipodeExchangeE, "d-j"),
    (Suite::ExchangeD, "l-falling"),
    (Suite::ExchangeD, "l-rising"),
    (Suite::TwistExchangeD, "l-left"),
    (Suite::TwistExchangeD, "di-right"),
    (Suite::TwistExchangeD, "e-right"),
    (Suite::TwistExchangeD, "f-right"),
    (Suite::TwistExchangeD, "f-right-opposite"),
    (Suite::TwistExchangeD, "g-right"),
    (Suite::TwistExchangeD, "h-right"),
    (Suite::TwistExchangeD, "d-right"),
    (Suite::AntipodeExchangeD, "e-j"),
    (Suite::AntipodeExchangeD, "di-j"),
    (Suite::AntipodeExchangeD, "f-j"),
    (Suite::AntipodeExchangeD, "f-j-opposite"),
    (Suite::AntipodeExchangeD, "g-j"),
    (Suite::AntipodeExchangeD, "h-j"),
    (Suite::AntipodeExchangeD, "d-j"),
    (Suite::ClosedFormG, "delta"),
    (Suite::ClosedFormG, "antipode"),
    (Suite::ClosedFormE, "delta"),
    (Suite::ClosedFormE, "antipode"),
    (Suite::ClosedFormD, "delta"),
    (Suite::ClosedFormD, "antipode"),
    (Suite::ClosedFormH, "delta"),
    (Suite::ClosedFormH, "antipode"),
    (Suite::ClosedFormF, "delta"),
    (Suite::ClosedFormF, "antipode"),
    (Suite::ClosedFormDf, "delta"),
    (Suite::ClosedFormDf, "antipode"),
    (Suite::TauTransport, "oracle"),
    (Suite::TauTransport, "printed"),
    (Suite::TauTransport, "corrected"),
];

/// Two sides of a claimed identity.
pub(crate) enum Claim {
    Elt(UElt, UElt),
    Series(Series<UElt>, Series<UElt>),
    Tensor(Series<Tensor>, Series<Tensor>),
}

impl Claim {
    /// `None` when both sides agree, otherwise a description of the first difference.
    pub(crate) fn mismatch(&self) -> Option<String> {
        match self {
            Claim::Elt(a, b) => (a != b).then(|| format!("lhs - rhs = {}", a - b)),
            Claim::Series(a, b) => compare_series(a, b).map(|m| format!("t^{}: lhs - rhs = {}", m.order, m.difference)),
            Claim::Tensor(a, b) => compare_series(a, b).map(|m| format!("t^{}: lhs - rhs = {}", m.order, m.difference)),
        }
    }
}

/// Judges a printed identity, falling back to the corrected reading when the
/// printed one fails. A corrected reading that also fails is an internal error.
pub(crate) fn judge(printed: Claim, corrected: Option<Claim>) -> Outcome {
    let Some(diff) = printed.mismatch() else {
        return Outcome::pass();
    };
    match corrected {
        None => Outcome::discrepancy(format!("printed form: {diff}")),
        Some(c) => match c.mismatch() {
            None => Outcome::discrepancy(format!("printed form: {diff}; corrected form holds")),
            Some(cd) => Outcome::fail(format!("printed form: {diff}; corrected form: {cd}")),
        },
    }
}
