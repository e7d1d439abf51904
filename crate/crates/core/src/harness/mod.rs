//! Desk-scale verification. Each check instantiates one finitely checkable
//! statement on explicit inputs and returns a structured [`Report`]; a batch
//! run executes every check over the default corpus and merges the reports
//! in a fixed order, so batch output is stable for a given seed and budget.
//!
//! Reports never panic on a falsified statement: failures are verdicts with
//! witnesses, and statements whose hypotheses cannot be decided at this
//! scale come back `unverifiable` with a note naming the hypothesis.

mod checks;

pub use checks::{
    check_a1, check_a3, check_a4, check_a5, check_a6, check_a7, check_hmono,
    check_indecomposable, check_initial, check_interval, interval_uniqueness_search,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::doc::{BATCH_SCHEMA, REPORT_SCHEMA};
use crate::error::Result;
use crate::fincat::{generate_categories, seeded_relative_categories, FinCategory, RelCategory};
use crate::par;
use crate::sset::{find_isomorphism, nerve, standard, SSetMap};
use crate::sspace::{classification_diagram, discrete_levels};

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unverifiable,
}

/// The structured result of one check: a verdict plus enough context to
/// reproduce it.
///
/// Invariants, enforced by the mutators: a failing report carries at least
/// one concrete witness, and an unverifiable one names the hypothesis that
/// put the statement out of reach. Metrics are deterministic counters, so a
/// report depends only on its inputs and budgets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(rename = "$schema", default)]
    pub schema: String,
    pub check: String,
    pub verdict: Verdict,
    #[serde(rename = "hypothesisNotes", default)]
    pub hypothesis_notes: Vec<String>,
    #[serde(default)]
    pub witnesses: Vec<serde_json::Value>,
    #[serde(default)]
    pub metrics: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(check: &str) -> Self {
        Report {
            schema: REPORT_SCHEMA.into(),
            check: check.into(),
            verdict: Verdict::Pass,
            hypothesis_notes: Vec::new(),
            witnesses: Vec::new(),
            metrics: BTreeMap::new(),
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.hypothesis_notes.push(text.into());
    }

    pub fn metric(&mut self, key: impl Into<String>, value: u64) {
        self.metrics.insert(key.into(), value);
    }

    /// Record a counterexample and turn the verdict to `Fail`.
    pub fn fail(&mut self, witness: serde_json::Value) {
        self.verdict = Verdict::Fail;
        self.witnesses.push(witness);
    }

    /// Fail with `witness` unless `ok` holds.
    pub fn require(&mut self, ok: bool, witness: impl FnOnce() -> serde_json::Value) {
        if !ok {
            self.fail(witness());
        }
    }

    /// Mark the report out of scope, naming the undecidable hypothesis. A
    /// failure already recorded takes precedence.
    pub fn unverifiable(&mut self, hypothesis: impl Into<String>) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::Unverifiable;
        }
        self.hypothesis_notes.push(hypothesis.into());
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// A full batch run: the merged reports plus the parameters that reproduce
/// them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Batch {
    #[serde(rename = "$schema", default)]
    pub schema: String,
    pub seed: u64,
    pub budget: u64,
    pub reports: Vec<Report>,
}

/// The instance corpus checks quantify over.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub seed: u64,
    pub categories: Vec<FinCategory>,
    pub relcategories: Vec<RelCategory>,
}

impl Corpus {
    /// One-line description, recorded in reports so failures name their
    /// quantification domain.
    pub fn describe(&self) -> String {
        format!(
            "corpus: {} categories (every category with at most 2 objects and 5 arrows up to \
             isomorphism, chains up to length 4, the free isomorphism) and {} seeded relative \
             categories (seed {})",
            self.categories.len(),
            self.relcategories.len(),
            self.seed
        )
    }
}

/// Every category with at most two objects and five arrows up to
/// isomorphism, the chains `linear(n)` for `n <= 4`, the free-standing
/// isomorphism, and three seeded pseudo-random relative categories.
pub fn default_corpus(seed: u64) -> Result<Corpus> {
    let mut categories = generate_categories(2, 5);
    // the generator already covers everything with <= 2 objects; the longer
    // chains are the only shapes that need appending
    for n in 2..=4 {
        categories.push(FinCategory::linear(n));
    }
    let relcategories = seeded_relative_categories(seed, 3)?;
    Ok(Corpus { seed, categories, relcategories })
}

type Job = Box<dyn Fn() -> Result<Report> + Send + Sync>;

/// Run every check over `corpus`, concurrently, and merge the reports in a
/// fixed order: initial, interval, indecomposable, A1, A3, A4, A5 (one
/// report per category), A6, A7 (one per pair), h-mono (one per space),
/// interval uniqueness.
pub fn run_all(corpus: &Corpus, budget: u64) -> Result<Vec<Report>> {
    let corpus_note = corpus.describe();
    let mut jobs: Vec<Job> = Vec::new();

    jobs.push(Box::new(|| Ok(checks::check_initial())));
    jobs.push(Box::new(move || Ok(checks::check_interval(budget))));
    jobs.push(Box::new(move || Ok(checks::check_indecomposable(budget))));
    jobs.push(Box::new(|| Ok(checks::check_a1())));

    // A3 on two fixed decompositions: a pair of points under the identity,
    // and two nerves with an edge landing in the first summand.
    jobs.push(Box::new(move || {
        let parts = vec![standard(0, 2), standard(0, 2)];
        let total = checks::fold_coproduct(&parts, 2)?;
        let z = SSetMap::identity(total);
        let mut r = checks::check_a3(&parts, &z);
        r.note("instance: two points under the identity");
        Ok(r)
    }));
    jobs.push(Box::new(move || {
        let parts =
            vec![nerve(&FinCategory::interval(), 2), nerve(&FinCategory::bar_interval(), 2)];
        let total = checks::fold_coproduct(&parts, 2)?;
        let into_first = SSetMap::new(
            parts[0].clone(),
            total.clone(),
            (0..=2).map(|j| (0..parts[0].cells(j)).collect()).collect(),
        )?;
        let edge = find_isomorphism(&standard(1, 2), &parts[0])
            .expect("the nerve of the interval is a standard edge");
        let z = edge.then(&into_first)?;
        let mut r = checks::check_a3(&parts, &z);
        r.note("instance: interval and free-isomorphism nerves, an edge into the first summand");
        Ok(r)
    }));

    jobs.push(Box::new(|| Ok(checks::check_a4())));

    for cat in corpus.categories.iter().cloned() {
        jobs.push(Box::new(move || checks::check_a5(&cat, budget)));
    }

    // A6 on the three canonical shapes of (non-)equivalence.
    jobs.push(Box::new(|| {
        let bar = FinCategory::bar_interval();
        let pt = FinCategory::point();
        let f = checks::collapse_functor(&bar, &pt);
        let mut r = checks::check_a6(&bar, &pt, &f);
        r.note("instance: the free isomorphism collapsed to the point");
        Ok(r)
    }));
    jobs.push(Box::new(|| {
        let pt = FinCategory::point();
        let two = FinCategory::discrete(2);
        let f = crate::fincat::Functor::new(&pt, &two, vec![0], vec![0])
            .expect("the one-object inclusion is a functor");
        let mut r = checks::check_a6(&pt, &two, &f);
        r.note("instance: one object included into the discrete pair");
        Ok(r)
    }));
    jobs.push(Box::new(|| {
        let i = FinCategory::interval();
        let pt = FinCategory::point();
        let f = checks::collapse_functor(&i, &pt);
        let mut r = checks::check_a6(&i, &pt, &f);
        r.note("instance: the interval collapsed to the point");
        Ok(r)
    }));

    for n in 0..=3 {
        for m in 0..=3 {
            jobs.push(Box::new(move || checks::check_a7(n, m, budget)));
        }
    }

    for cat in corpus.categories.iter().cloned() {
        jobs.push(Box::new(move || {
            let x = discrete_levels(&nerve(&cat, 2));
            let mut r = checks::check_hmono(&x);
            r.note(format!("instance: discrete nerve of {}", cat.name()));
            Ok(r)
        }));
    }
    for rel in corpus.relcategories.iter().cloned() {
        jobs.push(Box::new(move || {
            let x = classification_diagram(&rel, 2, 2, budget)?;
            let mut r = checks::check_hmono(&x);
            r.note(format!("instance: classification diagram of {}", rel.category().name()));
            Ok(r)
        }));
    }

    jobs.push(Box::new(move || checks::interval_uniqueness_search(2, 5, budget)));

    let outcomes = par::map_collect(&jobs, |job| job());
    let mut reports = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        let mut report = outcome?;
        report.note(corpus_note.clone());
        reports.push(report);
    }
    Ok(reports)
}

/// [`run_all`] over the default corpus, wrapped with its parameters.
pub fn batch(seed: u64, budget: u64) -> Result<Batch> {
    let corpus = default_corpus(seed)?;
    let reports = run_all(&corpus, budget)?;
    Ok(Batch { schema: BATCH_SCHEMA.into(), seed, budget, reports })
}
