//! End-to-end tests against the built binary: exit codes, byte stability,
//! document chaining, and the validate round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

use deltakit::doc::{
    category_to_doc, relcategory_to_doc, space_from_doc, space_to_doc, sset_from_doc, sset_to_doc,
    to_json_string, SpaceDoc,
};
use deltakit::fincat::{seeded_relative_categories, FinCategory};
use deltakit::sset::{delete_cell_upward, is_isomorphic, nerve};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltakit"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("the binary exits normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_file(name: &str, text: &str) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn delta_hom_returns_the_three_edge_endomorphisms_byte_stably() {
    let first = run(&["delta-hom", "1", "1"]);
    assert_eq!(code(&first), 0);
    let doc = stdout_json(&first);
    assert_eq!(doc["result"]["count"], 3);
    let texts: Vec<&str> = doc["result"]["maps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["text"].as_str().unwrap())
        .collect();
    assert_eq!(texts, ["1->1:[0,0]", "1->1:[0,1]", "1->1:[1,1]"]);
    // the defaulted budget is recorded in the invocation
    assert_eq!(doc["invocation"]["budget"], 1_000_000);
    let second = run(&["delta-hom", "1", "1"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn the_free_isomorphism_nerve_is_reported_incomplete() {
    let bar = write_file(
        "bar-category.json",
        &to_json_string(&category_to_doc(&FinCategory::bar_interval())),
    );
    let nerve_out = tmp("bar-nerve.json");
    let built = run(&["nerve", bar.to_str().unwrap(), "--out", nerve_out.to_str().unwrap()]);
    assert_eq!(code(&built), 0);
    assert!(built.stdout.is_empty());

    let checked = run(&["complete-check", nerve_out.to_str().unwrap()]);
    assert_eq!(code(&checked), 1);
    let doc = stdout_json(&checked);
    assert_eq!(doc["result"]["verdict"], "fail");
    let notes = doc["result"]["hypothesisNotes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("incomplete")));
}

#[test]
fn the_walking_arrow_nerve_is_complete() {
    let cat = write_file(
        "walking-arrow.json",
        &to_json_string(&category_to_doc(&FinCategory::interval())),
    );
    let nerve_out = tmp("walking-arrow-nerve.json");
    assert_eq!(code(&run(&["nerve", cat.to_str().unwrap(), "--out", nerve_out.to_str().unwrap()])), 0);
    let checked = run(&["complete-check", nerve_out.to_str().unwrap()]);
    assert_eq!(code(&checked), 0);
    assert_eq!(stdout_json(&checked)["result"]["verdict"], "pass");
}

#[test]
fn validate_names_the_offending_degree_and_cell() {
    let k = nerve(&FinCategory::linear(2), 2);
    let mut doc = serde_json::to_value(sset_to_doc(&k)).unwrap();
    let edge_count = doc["cells"]["1"].as_array().unwrap().len() as u64;
    let old = doc["faces"]["2"][0][0].as_u64().unwrap();
    doc["faces"]["2"][0][0] = Value::from((old + 1) % edge_count);
    let broken = write_file("broken-sset.json", &serde_json::to_string(&doc).unwrap());

    let out = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("degree 2"), "stderr: {stderr}");
    assert!(stderr.contains("cell"), "stderr: {stderr}");
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = run(&["delta-hom", "3", "3", "--budget", "1"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn unknown_flags_and_subcommands_are_rejected() {
    assert_eq!(code(&run(&["delta-hom", "1", "1", "--frobnicate"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    // modes outside a check's vocabulary are input errors
    let bar = write_file(
        "bar-for-modes.json",
        &to_json_string(&category_to_doc(&FinCategory::bar_interval())),
    );
    let nerve_out = tmp("bar-nerve-for-modes.json");
    assert_eq!(code(&run(&["nerve", bar.to_str().unwrap(), "--out", nerve_out.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["complete-check", nerve_out.to_str().unwrap(), "--mode", "strict"])), 2);
    assert_eq!(
        code(&run(&["segal-check", nerve_out.to_str().unwrap(), "--mode", "nerve-equivalence"])),
        2
    );
}

#[test]
fn artifacts_chain_and_round_trip() {
    let rel = &seeded_relative_categories(42, 3).unwrap()[0];
    let rel_path = write_file("seeded-rel.json", &to_json_string(&relcategory_to_doc(rel)));
    let space_path = tmp("classified-space.json");
    let classified =
        run(&["classify", rel_path.to_str().unwrap(), "--out", space_path.to_str().unwrap()]);
    assert_eq!(code(&classified), 0);

    // the emitted space re-validates and re-parses to an equal value
    let validated = run(&["validate", space_path.to_str().unwrap()]);
    assert_eq!(code(&validated), 0);
    let summary = stdout_json(&validated);
    assert_eq!(summary["result"]["inner"]["detected"], "space");
    assert_eq!(summary["result"]["inner"]["valid"], true);
    let envelope: Value =
        serde_json::from_str(&std::fs::read_to_string(&space_path).unwrap()).unwrap();
    let parsed: SpaceDoc = serde_json::from_value(envelope["result"].clone()).unwrap();
    assert_eq!(space_to_doc(&space_from_doc(&parsed).unwrap()), parsed);

    // the strict Segal check passes on the classified space
    let segal = run(&["segal-check", space_path.to_str().unwrap(), "--mode", "strict"]);
    assert_eq!(code(&segal), 0);
    assert_eq!(stdout_json(&segal)["result"]["verdict"], "pass");

    // realization and diagonal agree, across two separate invocations
    let realized = run(&["realize", space_path.to_str().unwrap()]);
    assert_eq!(code(&realized), 0);
    let diagonaled = run(&["diagonal", space_path.to_str().unwrap()]);
    assert_eq!(code(&diagonaled), 0);
    let r = sset_from_doc(
        &serde_json::from_value(stdout_json(&realized)["result"].clone()).unwrap(),
    )
    .unwrap();
    let d = sset_from_doc(
        &serde_json::from_value(stdout_json(&diagonaled)["result"].clone()).unwrap(),
    )
    .unwrap();
    assert!(is_isomorphic(&r, &d));

    // the realization unit's nerve is materialized, so it gets a small
    // instance: the walking arrow with identity weak equivalences
    let mut small = category_to_doc(&FinCategory::interval());
    let mut weq: Vec<usize> = small.identities.values().copied().collect();
    weq.sort_unstable();
    small.weq = Some(weq);
    let small_rel = write_file("walking-arrow-rel.json", &to_json_string(&small));
    let small_space = tmp("walking-arrow-space.json");
    assert_eq!(
        code(&run(&["classify", small_rel.to_str().unwrap(), "--out", small_space.to_str().unwrap()])),
        0
    );
    let cn_path = tmp("unit-nerve.json");
    let cn = run(&[
        "c-nerve",
        small_space.to_str().unwrap(),
        "--outer",
        "1",
        "--out",
        cn_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&cn), 0);
    assert_eq!(code(&run(&["validate", cn_path.to_str().unwrap()])), 0);
}

#[test]
fn interval_search_is_exact_at_the_bounds() {
    let found = run(&["interval-search", "2", "5"]);
    assert_eq!(code(&found), 0);
    let doc = stdout_json(&found);
    assert_eq!(doc["result"]["verdict"], "pass");
    assert_eq!(doc["result"]["metrics"]["equivalenceClasses"], 1);

    let excluded = run(&["interval-search", "1", "3"]);
    assert_eq!(code(&excluded), 1);
    assert_eq!(stdout_json(&excluded)["result"]["verdict"], "fail");
}

#[test]
fn axiom_check_filters_embed_the_seed_and_reject_unknown_names() {
    let out = run(&["axiom-check", "--check", "interval", "--seed", "42"]);
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["invocation"]["seed"], 42);
    assert_eq!(doc["result"]["seed"], 42);
    let reports = doc["result"]["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["check"], "interval");
    assert_eq!(reports[0]["verdict"], "pass");

    assert_eq!(code(&run(&["axiom-check", "--check", "frobnicate"])), 2);
}

#[test]
fn corpus_gen_is_seeded_and_byte_stable() {
    let first = run(&["corpus-gen", "--seed", "7"]);
    assert_eq!(code(&first), 0);
    let second = run(&["corpus-gen", "--seed", "7"]);
    assert_eq!(first.stdout, second.stdout);
    let doc = stdout_json(&first);
    assert_eq!(doc["result"]["seed"], 7);
    assert_eq!(doc["result"]["categories"].as_array().unwrap().len(), 374);
    assert_eq!(doc["result"]["relcategories"].as_array().unwrap().len(), 3);

    let path = write_file("corpus-seven.json", &String::from_utf8(first.stdout).unwrap());
    let validated = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&validated), 0);
    let summary = stdout_json(&validated);
    assert_eq!(summary["result"]["inner"]["categories"], 374);
    assert_eq!(summary["result"]["inner"]["relcategories"], 3);
}

#[test]
fn segal_check_reports_a_missing_spine_witness() {
    let k = nerve(&FinCategory::linear(2), 2);
    let cell = k.cell_by_name(2, "0->1|1->2").unwrap();
    let broken = delete_cell_upward(&k, 2, cell).unwrap();
    let path = write_file("unfillable.json", &to_json_string(&sset_to_doc(&broken)));

    let out = run(&["segal-check", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["verdict"], "fail");
    let witness = doc["result"]["witnesses"][0]["witness"].as_str().unwrap();
    assert!(witness.contains("fills the edge tuple"), "witness: {witness}");
}

#[test]
fn timings_are_opt_in_and_leave_the_rest_of_the_envelope_unchanged() {
    let plain = run(&["delta-hom", "2", "2"]);
    let timed = run(&["delta-hom", "2", "2", "--timings"]);
    assert_eq!(code(&timed), 0);
    let mut timed_doc = stdout_json(&timed);
    assert!(timed_doc["invocation"]["elapsedMs"].is_u64());
    timed_doc["invocation"].as_object_mut().unwrap().remove("elapsedMs");
    assert_eq!(stdout_json(&plain), timed_doc);
}

#[test]
fn the_out_flag_writes_the_same_bytes_stdout_would_carry() {
    let via_stdout = run(&["delta-aut", "3"]);
    assert_eq!(code(&via_stdout), 0);
    let path = tmp("aut-three.json");
    let via_file = run(&["delta-aut", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&via_file), 0);
    assert!(via_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), via_stdout.stdout);
    let doc = stdout_json(&via_stdout);
    assert_eq!(doc["result"]["order"], 2);
}
