//! Subcommand bodies: load documents, call the library, shape the result.
//!
//! Every handler returns `Handled`, separating "the operation ran and the
//! check failed" (exit 1, envelope still emitted) from library errors, which
//! the caller maps to exit 2 or 3.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use deltakit::doc::{
    category_from_doc, category_to_doc, parse_document, relcategory_from_doc, relcategory_to_doc,
    simplex_map_from_text, simplex_map_to_text, space_from_doc, space_to_doc, sset_from_doc,
    sset_to_doc, to_json_string, CategoryDoc, Document, BATCH_SCHEMA, REPORT_SCHEMA,
};
use deltakit::error::{Error, Result};
use deltakit::fincat::FinCategory;
use deltakit::harness::{batch, default_corpus, interval_uniqueness_search, Batch, Report, Verdict};
use deltakit::realization::{c_nerve, diagonal, realize};
use deltakit::simplex::{automorphisms, enumerate_maps, hom_count};
use deltakit::sset::{nerve, strict_segal_failure};
use deltakit::sspace::{
    classification_diagram, discrete_levels, is_complete, is_segal, CompletenessMode, SegalMode,
    SimplicialSpace,
};
use serde_json::{json, Value};

use crate::envelope::CLI_SCHEMA;

pub struct Handled {
    pub result: Value,
    pub failed: bool,
}

impl Handled {
    fn ok(result: impl serde::Serialize) -> Self {
        Handled {
            result: serde_json::to_value(result).expect("results serialize infallibly"),
            failed: false,
        }
    }

    fn report(report: Report) -> Self {
        let failed = report.verdict == Verdict::Fail;
        Handled {
            result: serde_json::to_value(&report).expect("reports serialize infallibly"),
            failed,
        }
    }
}

/// Read and parse an input document; a saved output envelope is accepted and
/// unwrapped to its result, so artifacts chain between subcommands.
fn load_document(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::invalid("input", format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::invalid("input", format!("malformed JSON: {e}")))?;
    let value = unwrap_envelope(value);
    parse_document(&value.to_string())
}

fn unwrap_envelope(value: Value) -> Value {
    if value.get("$schema").and_then(Value::as_str) == Some(CLI_SCHEMA) {
        value.get("result").cloned().unwrap_or(Value::Null)
    } else {
        value
    }
}

fn expect_category(doc: Document) -> Result<FinCategory> {
    match doc {
        Document::Category(d) => category_from_doc(&d),
        _ => Err(Error::invalid("input", "expected a category document")),
    }
}

fn expect_space(doc: Document) -> Result<SimplicialSpace> {
    match doc {
        Document::Space(d) => space_from_doc(&d),
        _ => Err(Error::invalid("input", "expected a simplicial space document")),
    }
}

pub fn delta_hom(n: usize, m: usize, budget: u64) -> Result<Handled> {
    let maps = enumerate_maps(n, m, budget)?;
    let records: Vec<Value> = maps
        .iter()
        .map(|f| json!({ "text": simplex_map_to_text(f), "images": f.images() }))
        .collect();
    Ok(Handled::ok(json!({
        "kind": "homEnumeration",
        "source": n,
        "target": m,
        "count": maps.len(),
        "closedForm": hom_count(n, m).to_string(),
        "maps": records,
    })))
}

pub fn delta_aut(max_degree: usize, budget: u64) -> Result<Handled> {
    let auts = automorphisms(max_degree, budget)?;
    let elements: Vec<Value> = auts
        .iter()
        .map(|a| json!({ "vertexPerms": a.vertex_perms() }))
        .collect();
    Ok(Handled::ok(json!({
        "kind": "automorphismGroup",
        "maxDegree": max_degree,
        "order": auts.len(),
        "elements": elements,
    })))
}

pub fn nerve_cmd(input: &Path, truncation: usize) -> Result<Handled> {
    let cat = expect_category(load_document(input)?)?;
    Ok(Handled::ok(sset_to_doc(&nerve(&cat, truncation))))
}

pub fn segal_check(input: &Path, mode: &str) -> Result<Handled> {
    let mut report = Report::new("segal");
    report.note(format!("mode: {mode}"));
    match load_document(input)? {
        Document::SSet(d) => {
            if mode != "strict" {
                return Err(Error::invalid(
                    "input",
                    format!("mode {mode} needs a simplicial space; a plain complex is checked strictly"),
                ));
            }
            let x = sset_from_doc(&d)?;
            report.note("input: simplicial set, strict spine comparison");
            for n in 0..=x.truncation() {
                report.metric(format!("cellsAtDegree{n}"), x.cells(n) as u64);
            }
            if let Some(f) = strict_segal_failure(&x) {
                report.fail(json!({ "witness": f.to_string() }));
            }
        }
        Document::Space(d) => {
            let x = space_from_doc(&d)?;
            let m = match mode {
                "strict" => SegalMode::Strict,
                "pi0" => SegalMode::Pi0,
                other => {
                    return Err(Error::invalid(
                        "input",
                        format!("mode {other} is not a Segal mode (strict or pi0)"),
                    ));
                }
            };
            let sr = is_segal(&x, m)?;
            report.note("input: simplicial space");
            for (n, pairs) in &sr.comparisons {
                let sides: Vec<String> =
                    pairs.iter().map(|(lhs, rhs)| format!("{lhs} vs {rhs}")).collect();
                report.note(format!("degree {n}: {}", sides.join(", ")));
            }
            for f in &sr.failures {
                report.fail(json!({ "witness": f }));
            }
        }
        Document::Category(_) => {
            return Err(Error::invalid("input", "expected a simplicial set or space document"));
        }
    }
    Ok(Handled::report(report))
}

pub fn complete_check(input: &Path, mode: &str) -> Result<Handled> {
    let mut report = Report::new("completeness");
    report.note(format!("mode: {mode}"));
    let x = match load_document(input)? {
        Document::SSet(d) => {
            report.note("input: simplicial set, lifted to its discrete simplicial space");
            discrete_levels(&sset_from_doc(&d)?)
        }
        Document::Space(d) => space_from_doc(&d)?,
        Document::Category(_) => {
            return Err(Error::invalid("input", "expected a simplicial set or space document"));
        }
    };
    let m = match mode {
        "pi0" => CompletenessMode::Pi0,
        "nerve-equivalence" => CompletenessMode::NerveEquivalence,
        other => {
            return Err(Error::invalid(
                "input",
                format!("mode {other} is not a completeness mode (pi0 or nerve-equivalence)"),
            ));
        }
    };
    let cr = is_complete(&x, m)?;
    report.metric("objectComponents", cr.object_components as u64);
    report.metric("invertibleComponents", cr.invertible_components as u64);
    report.metric("degeneracyInjective", u64::from(cr.degeneracy_injective));
    report.metric("imageIsTheInvertiblePart", u64::from(cr.image_is_the_invertible_part));
    if let Some(fe) = cr.functor_is_equivalence {
        report.metric("functorIsEquivalence", u64::from(fe));
    }
    if cr.complete {
        report.note("verdict: complete");
    } else {
        report.note("verdict: incomplete");
        report.fail(json!({
            "objectComponents": cr.object_components,
            "invertibleComponents": cr.invertible_components,
            "degeneracyInjective": cr.degeneracy_injective,
        }));
    }
    Ok(Handled::report(report))
}

pub fn realize_cmd(input: &Path) -> Result<Handled> {
    let x = expect_space(load_document(input)?)?;
    Ok(Handled::ok(sset_to_doc(realize(&x).complex())))
}

pub fn diagonal_cmd(input: &Path) -> Result<Handled> {
    let x = expect_space(load_document(input)?)?;
    let d = diagonal(&x)?;
    Ok(Handled::ok(sset_to_doc(&d)))
}

pub fn c_nerve_cmd(input: &Path, outer: usize, budget: u64) -> Result<Handled> {
    let x = expect_space(load_document(input)?)?;
    let r = realize(&x);
    let cn = c_nerve(r.unit(), outer, budget)?;
    Ok(Handled::ok(space_to_doc(cn.space())))
}

pub fn classify_cmd(input: &Path, outer: usize, inner: usize, budget: u64) -> Result<Handled> {
    let rel = match load_document(input)? {
        Document::Category(d) if d.weq.is_some() => relcategory_from_doc(&d)?,
        Document::Category(_) => {
            return Err(Error::invalid(
                "input",
                "expected a relative category document (a category with a weq list)",
            ));
        }
        _ => return Err(Error::invalid("input", "expected a relative category document")),
    };
    let x = classification_diagram(&rel, outer, inner, budget)?;
    Ok(Handled::ok(space_to_doc(&x)))
}

pub fn axiom_check(seed: u64, budget: u64, filter: Option<&str>) -> Result<Handled> {
    let mut b = batch(seed, budget)?;
    if let Some(name) = filter {
        let known: BTreeSet<&str> = b.reports.iter().map(|r| r.check.as_str()).collect();
        if !known.contains(name) {
            let names: Vec<&str> = known.into_iter().collect();
            return Err(Error::invalid(
                "input",
                format!("unknown check {name:?}; available: {}", names.join(", ")),
            ));
        }
        b.reports.retain(|r| r.check == name);
    }
    let failed = b.reports.iter().any(|r| r.verdict == Verdict::Fail);
    Ok(Handled { result: serde_json::to_value(&b).expect("batches serialize infallibly"), failed })
}

pub fn interval_search(max_objects: usize, max_arrows: usize, budget: u64) -> Result<Handled> {
    Ok(Handled::report(interval_uniqueness_search(max_objects, max_arrows, budget)?))
}

pub fn corpus_gen(seed: u64) -> Result<Handled> {
    let corpus = default_corpus(seed)?;
    let categories: Vec<CategoryDoc> = corpus.categories.iter().map(category_to_doc).collect();
    let relcategories: Vec<CategoryDoc> =
        corpus.relcategories.iter().map(relcategory_to_doc).collect();
    Ok(Handled::ok(json!({
        "kind": "corpus",
        "seed": corpus.seed,
        "description": corpus.describe(),
        "categories": categories,
        "relcategories": relcategories,
    })))
}

pub fn validate_cmd(input: &Path) -> Result<Handled> {
    let text = fs::read_to_string(input)
        .map_err(|e| Error::invalid("input", format!("cannot read {}: {e}", input.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::invalid("input", format!("malformed JSON: {e}")))?;
    Ok(Handled::ok(validate_value(&value)?))
}

/// Re-serialize and re-parse; emitted documents must come back equal.
fn round_trips<T>(doc: &T) -> bool
where
    T: serde::Serialize + serde::de::DeserializeOwned + PartialEq,
{
    serde_json::from_str::<T>(&to_json_string(doc)).map(|back| &back == doc).unwrap_or(false)
}

fn summary(detected: &str, round_trip: bool) -> Value {
    json!({ "kind": "validation", "detected": detected, "valid": true, "roundTrip": round_trip })
}

fn validate_value(value: &Value) -> Result<Value> {
    match value.get("$schema").and_then(Value::as_str) {
        Some(CLI_SCHEMA) => {
            let invocation = value
                .get("invocation")
                .ok_or_else(|| Error::invalid("input", "envelope without an invocation"))?;
            if invocation.get("subcommand").and_then(Value::as_str).is_none() {
                return Err(Error::invalid("input", "envelope invocation lacks a subcommand"));
            }
            let result = value
                .get("result")
                .ok_or_else(|| Error::invalid("input", "envelope without a result"))?;
            let inner = validate_value(result)?;
            Ok(json!({
                "kind": "validation",
                "detected": "envelope",
                "valid": true,
                "inner": inner,
            }))
        }
        Some(REPORT_SCHEMA) => {
            let report: Report = serde_json::from_value(value.clone())
                .map_err(|e| Error::invalid("input", format!("malformed report: {e}")))?;
            Ok(summary("report", round_trips(&report)))
        }
        Some(BATCH_SCHEMA) => {
            let b: Batch = serde_json::from_value(value.clone())
                .map_err(|e| Error::invalid("input", format!("malformed batch: {e}")))?;
            Ok(summary("batch", round_trips(&b)))
        }
        _ => match value.get("kind").and_then(Value::as_str) {
            Some(kind) => validate_kind(kind, value),
            None => validate_shape(value),
        },
    }
}

/// Rebuild a structural document through the library constructors, so every
/// simplicial identity, composition law, and endpoint condition is checked.
fn validate_shape(value: &Value) -> Result<Value> {
    match parse_document(&value.to_string())? {
        Document::SSet(d) => {
            sset_from_doc(&d)?;
            Ok(summary("sset", round_trips(&d)))
        }
        Document::Category(d) => {
            let detected = if d.weq.is_some() {
                relcategory_from_doc(&d)?;
                "relcategory"
            } else {
                category_from_doc(&d)?;
                "category"
            };
            Ok(summary(detected, round_trips(&d)))
        }
        Document::Space(d) => {
            space_from_doc(&d)?;
            Ok(summary("space", round_trips(&d)))
        }
    }
}

fn validate_kind(kind: &str, value: &Value) -> Result<Value> {
    let bad = |detail: String| Error::invalid("input", detail);
    match kind {
        "homEnumeration" => {
            let maps = value
                .get("maps")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("homEnumeration without a maps array".into()))?;
            for (i, m) in maps.iter().enumerate() {
                let text = m
                    .get("text")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad(format!("map {i} lacks a text form")))?;
                let parsed = simplex_map_from_text(text)?;
                let images: Vec<usize> = m
                    .get("images")
                    .and_then(Value::as_array)
                    .map(|a| a.iter().filter_map(Value::as_u64).map(|v| v as usize).collect())
                    .unwrap_or_default();
                if parsed.images() != images.as_slice() {
                    return Err(bad(format!("map {i}: text and images disagree")));
                }
            }
            if value.get("count").and_then(Value::as_u64) != Some(maps.len() as u64) {
                return Err(bad("homEnumeration count does not match its maps".into()));
            }
            Ok(summary("homEnumeration", true))
        }
        "automorphismGroup" => {
            let elements = value
                .get("elements")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("automorphismGroup without elements".into()))?;
            for (i, e) in elements.iter().enumerate() {
                let perms = e
                    .get("vertexPerms")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad(format!("element {i} lacks vertexPerms")))?;
                for (n, p) in perms.iter().enumerate() {
                    let row: Vec<u64> = p
                        .as_array()
                        .map(|a| a.iter().filter_map(Value::as_u64).collect())
                        .unwrap_or_default();
                    let mut sorted = row.clone();
                    sorted.sort_unstable();
                    if sorted != (0..=n as u64).collect::<Vec<_>>() {
                        return Err(bad(format!("element {i} is not a permutation at degree {n}")));
                    }
                }
            }
            Ok(summary("automorphismGroup", true))
        }
        "corpus" => {
            let mut categories = 0usize;
            let mut relcategories = 0usize;
            for (field, count) in
                [("categories", &mut categories), ("relcategories", &mut relcategories)]
            {
                let docs = value
                    .get(field)
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad(format!("corpus without a {field} array")))?;
                for (i, doc) in docs.iter().enumerate() {
                    let d: CategoryDoc = serde_json::from_value(doc.clone())
                        .map_err(|e| bad(format!("{field}[{i}]: malformed category: {e}")))?;
                    if d.weq.is_some() {
                        relcategory_from_doc(&d)?;
                    } else {
                        category_from_doc(&d)?;
                    }
                    *count += 1;
                }
            }
            if value.get("seed").and_then(Value::as_u64).is_none() {
                return Err(bad("corpus without a seed".into()));
            }
            Ok(json!({
                "kind": "validation",
                "detected": "corpus",
                "valid": true,
                "categories": categories,
                "relcategories": relcategories,
            }))
        }
        "validation" => Ok(summary("validation", true)),
        other => Err(bad(format!("unknown result kind {other:?}"))),
    }
}
