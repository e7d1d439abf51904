//! The acceptance gate: twelve bounded criteria, one printed line each.
//!
//! Every criterion is an exact assertion (a frozen count, an isomorphism, a
//! named witness) plus a wall-clock bound that is asserted, not aspirational.
//! Run with `--nocapture` to see the per-criterion lines on success; they are
//! printed automatically on failure.

mod common;

use std::time::{Duration, Instant};

use deltakit::fincat::{are_isomorphic, generate_categories, pushout_over_objects, FinCategory};
use deltakit::harness::{
    check_a5, check_a7, check_hmono, check_initial, check_interval, default_corpus,
    interval_uniqueness_search,
};
use deltakit::realization::{realization_diagonal_iso, realize};
use deltakit::simplex::{automorphisms, enumerate_maps, hom_count};
use deltakit::sset::{delete_cell_upward, is_strict_segal, nerve, strict_segal_failure, SegalFailure};
use deltakit::sspace::{
    classification_diagram, discrete_levels, homotopy_cat, is_complete, is_segal,
    CompletenessMode, SegalMode,
};
use deltakit::DEFAULT_ENUM_BUDGET;

const BUDGET: u64 = DEFAULT_ENUM_BUDGET;

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn criterion(
        &mut self,
        number: usize,
        label: &str,
        bound: Duration,
        body: impl FnOnce() -> Result<String, String>,
    ) {
        let start = Instant::now();
        let outcome = body();
        let elapsed = start.elapsed();
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) if elapsed <= bound => {
                println!("criterion {number:>2}: pass  {secs:>7.3}s  {label}  [{detail}]");
            }
            Ok(detail) => {
                println!(
                    "criterion {number:>2}: FAIL  {secs:>7.3}s  {label}  \
                     [over the {bound:?} bound; {detail}]"
                );
                self.failures
                    .push(format!("criterion {number}: exceeded the {bound:?} bound ({secs:.3}s)"));
            }
            Err(why) => {
                println!("criterion {number:>2}: FAIL  {secs:>7.3}s  {label}  [{why}]");
                self.failures.push(format!("criterion {number}: {why}"));
            }
        }
    }
}

/// Independent brute-force count and image list for monotone maps [n] -> [m]:
/// an odometer over all (m+1)^(n+1) tuples, keeping the weakly increasing
/// ones. Shares no code with the library enumeration.
fn brute_force_monotone(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    let mut tuple = vec![0usize; n + 1];
    loop {
        if tuple.windows(2).all(|w| w[0] <= w[1]) {
            found.push(tuple.clone());
        }
        let mut i = n + 1;
        loop {
            if i == 0 {
                return found;
            }
            i -= 1;
            if tuple[i] < m {
                tuple[i] += 1;
                for t in tuple.iter_mut().skip(i + 1) {
                    *t = 0;
                }
                break;
            }
        }
    }
}

fn hom_counts_match_brute_force() -> Result<String, String> {
    let unit = enumerate_maps(1, 1, BUDGET).map_err(|e| e.to_string())?;
    if unit.len() != 3 {
        return Err(format!("|Hom([1],[1])| = {}, expected 3", unit.len()));
    }
    let expected = [vec![0, 0], vec![0, 1], vec![1, 1]];
    for (map, want) in unit.iter().zip(expected.iter()) {
        if map.images() != want.as_slice() {
            return Err(format!("endomorphism images {:?}, expected {want:?}", map.images()));
        }
    }
    for n in 0..=5 {
        for m in 0..=5 {
            let brute = brute_force_monotone(n, m);
            let maps = enumerate_maps(n, m, BUDGET).map_err(|e| e.to_string())?;
            let images: Vec<Vec<usize>> = maps.iter().map(|f| f.images().to_vec()).collect();
            if images != brute {
                return Err(format!("Hom([{n}],[{m}]) disagrees with brute force"));
            }
            if hom_count(n, m) != brute.len() as u128 {
                return Err(format!("closed form disagrees at ({n},{m})"));
            }
        }
    }
    Ok("36 pairs, |Hom([1],[1])| = 3".into())
}

fn automorphisms_are_identity_and_reversal() -> Result<String, String> {
    let auts = automorphisms(4, BUDGET).map_err(|e| e.to_string())?;
    if auts.len() != 2 {
        return Err(format!("{} automorphisms, expected 2", auts.len()));
    }
    let is_identity = |perms: &[Vec<usize>]| {
        perms
            .iter()
            .all(|p| p.iter().enumerate().all(|(i, &v)| v == i))
    };
    let is_reversal = |perms: &[Vec<usize>]| {
        perms
            .iter()
            .enumerate()
            .all(|(n, p)| p.iter().enumerate().all(|(i, &v)| v == n - i))
    };
    let identity = auts
        .iter()
        .find(|a| is_identity(a.vertex_perms()))
        .ok_or("no identity automorphism")?;
    let reversal = auts
        .iter()
        .find(|a| is_reversal(a.vertex_perms()))
        .ok_or("no reversal automorphism")?;
    if reversal.then(reversal) != *identity {
        return Err("reversal squared is not the identity".into());
    }
    if identity.then(identity) != *identity {
        return Err("identity squared is not the identity".into());
    }
    Ok("group of order 2, reversal squares to the identity".into())
}

/// Glue n copies of the walking arrow end to start and compare with the
/// length-n chain; the bound applies to each gluing step separately.
fn edge_chains_rebuild_linear_categories() -> Result<(Duration, String), String> {
    let seg = FinCategory::linear(1);
    let mut acc = seg.clone();
    let mut tip = 1usize;
    let mut slowest = Duration::ZERO;
    for n in 2..=5 {
        let step = Instant::now();
        let (glued, _, inr) =
            pushout_over_objects(&acc, &seg, &[(tip, 0)], BUDGET).map_err(|e| e.to_string())?;
        acc = glued;
        tip = inr.apply_object(1);
        let ok = are_isomorphic(&acc, &FinCategory::linear(n), BUDGET).map_err(|e| e.to_string())?;
        let took = step.elapsed();
        slowest = slowest.max(took);
        if !ok {
            return Err(format!("chain of {n} edges is not the length-{n} chain"));
        }
    }
    Ok((slowest, format!("chains up to length 5, slowest step {:.3}s", slowest.as_secs_f64())))
}

fn nerves_are_segal_and_every_deletion_fails() -> Result<String, String> {
    let corpus = generate_categories(2, 5);
    if corpus.len() != 371 {
        return Err(format!("{} corpus categories, expected 371", corpus.len()));
    }
    let mut mutations = 0usize;
    for cat in &corpus {
        let k = nerve(cat, 2);
        if !is_strict_segal(&k) {
            return Err(format!("nerve of {} is not strict Segal", cat.name()));
        }
        for c in 0..k.cells(2) {
            if k.is_degenerate(2, c) {
                continue;
            }
            let broken = delete_cell_upward(&k, 2, c).map_err(|e| e.to_string())?;
            match strict_segal_failure(&broken) {
                Some(SegalFailure::Missing { degree: 2, .. }) => mutations += 1,
                Some(other) => {
                    return Err(format!(
                        "deleting 2-cell {c} of {} gave the wrong witness: {other}",
                        cat.name()
                    ));
                }
                None => {
                    return Err(format!(
                        "deleting 2-cell {c} of {} did not break the Segal condition",
                        cat.name()
                    ));
                }
            }
        }
    }
    if mutations == 0 {
        return Err("no nondegenerate 2-cells were available to delete".into());
    }
    Ok(format!("371 nerves, {mutations} deletions, each with a missing-spine witness"))
}

fn completeness_is_rigidity_with_skeletality() -> Result<String, String> {
    let corpus = default_corpus(42).map_err(|e| e.to_string())?;
    let mut complete = 0usize;
    let mut incomplete = 0usize;
    for cat in &corpus.categories {
        let x = discrete_levels(&nerve(cat, 2));
        let report = is_complete(&x, CompletenessMode::Pi0).map_err(|e| e.to_string())?;
        let gaunt = cat.is_rigid() && cat.is_skeletal();
        if report.complete != gaunt {
            return Err(format!(
                "{}: complete = {}, rigid and skeletal = {}",
                cat.name(),
                report.complete,
                gaunt
            ));
        }
        if report.complete {
            complete += 1;
        } else {
            incomplete += 1;
        }
    }
    let walking = is_complete(
        &discrete_levels(&nerve(&FinCategory::interval(), 2)),
        CompletenessMode::Pi0,
    )
    .map_err(|e| e.to_string())?;
    if !walking.complete {
        return Err("the walking-arrow nerve is not complete".into());
    }
    let free_iso = is_complete(
        &discrete_levels(&nerve(&FinCategory::bar_interval(), 2)),
        CompletenessMode::Pi0,
    )
    .map_err(|e| e.to_string())?;
    if free_iso.complete {
        return Err("the free-isomorphism nerve is complete".into());
    }
    Ok(format!("{complete} complete, {incomplete} incomplete, both sides realized"))
}

fn realization_agrees_with_the_diagonal() -> Result<String, String> {
    let mut rng = common::rng(6);
    let mut mismatches = 0usize;
    for i in 0..100 {
        let x = common::random_space(&mut rng);
        let r = realize(&x);
        match realization_diagonal_iso(&x, &r) {
            Ok(cmp) if cmp.is_levelwise_bijective() => {}
            Ok(_) => {
                mismatches += 1;
                eprintln!("space {i}: comparison map is not levelwise bijective");
            }
            Err(e) => {
                mismatches += 1;
                eprintln!("space {i}: comparison map does not exist: {e}");
            }
        }
    }
    if mismatches > 0 {
        return Err(format!("{mismatches} of 100 spaces mismatched"));
    }
    Ok("100 seeded spaces, zero mismatches".into())
}

fn a5_holds_across_the_corpus() -> Result<String, String> {
    let corpus = default_corpus(42).map_err(|e| e.to_string())?;
    for cat in &corpus.categories {
        let report = check_a5(cat, BUDGET).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("A5 failed on {}: {:?}", cat.name(), report.witnesses));
        }
    }
    Ok(format!("{} categories", corpus.categories.len()))
}

fn interval_axioms_hold_and_record_the_strict_failure() -> Result<String, String> {
    let report = check_interval(BUDGET);
    if !report.passed() {
        return Err(format!("interval check failed: {:?}", report.witnesses));
    }
    for (key, want) in [
        ("terminalSources", 4),
        ("chainLength", 5),
        ("contractedObjects", 2),
        ("contractedArrows", 4),
        ("gluedEdgePairTwoCells", 7),
        ("twoSimplexTwoCells", 10),
    ] {
        match report.metrics.get(key) {
            Some(&v) if v == want => {}
            other => return Err(format!("metric {key} = {other:?}, expected {want}")),
        }
    }
    if !report
        .hypothesis_notes
        .iter()
        .any(|n| n.contains("spine comparison fails"))
    {
        return Err("the strict spine-comparison failure was not recorded".into());
    }
    Ok("terminality, gluing, contractibility; strict failure recorded 7 vs 10".into())
}

fn a7_counts_agree_in_low_degrees() -> Result<String, String> {
    for n in 0..=3 {
        for m in 0..=3 {
            let report = check_a7(n, m, BUDGET).map_err(|e| e.to_string())?;
            if !report.passed() {
                return Err(format!("counts disagree at ({n},{m}): {:?}", report.metrics));
            }
            if (n, m) == (2, 3) && report.metrics.get("monotoneMaps") != Some(&20) {
                return Err(format!(
                    "monotone count at (2,3) = {:?}, expected 20",
                    report.metrics.get("monotoneMaps")
                ));
            }
        }
    }
    Ok("16 pairs, all four counts equal, 20 at (2,3)".into())
}

fn the_interval_is_unique_up_to_equivalence() -> Result<String, String> {
    let report = interval_uniqueness_search(2, 5, BUDGET).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!("uniqueness search failed: {:?}", report.witnesses));
    }
    let classes = report.metrics.get("equivalenceClasses").copied().unwrap_or(0);
    if classes != 1 {
        return Err(format!("{classes} equivalence classes, expected 1"));
    }
    let matches = report.metrics.get("matches").copied().unwrap_or(0);
    Ok(format!("{matches} match(es) in one class, isomorphic to the walking arrow"))
}

fn classification_diagrams_round_trip() -> Result<String, String> {
    let corpus = default_corpus(42).map_err(|e| e.to_string())?;
    for rel in &corpus.relcategories {
        let x = classification_diagram(rel, 2, 2, BUDGET).map_err(|e| e.to_string())?;
        let segal = is_segal(&x, SegalMode::Strict).map_err(|e| e.to_string())?;
        if !segal.passes {
            return Err(format!("diagram of {} is not strict Segal", rel.category().name()));
        }
        let hc = homotopy_cat(&x).map_err(|e| e.to_string())?;
        let ok = are_isomorphic(&hc.category, rel.category(), BUDGET).map_err(|e| e.to_string())?;
        if !ok {
            return Err(format!(
                "homotopy category of the diagram of {} is not the base",
                rel.category().name()
            ));
        }
    }
    Ok(format!("{} seeded relative categories", corpus.relcategories.len()))
}

fn hmono_and_initial_are_exact() -> Result<String, String> {
    let corpus = default_corpus(42).map_err(|e| e.to_string())?;
    let mut complete = 0usize;
    for cat in &corpus.categories {
        let x = discrete_levels(&nerve(cat, 2));
        if !is_complete(&x, CompletenessMode::Pi0).map_err(|e| e.to_string())?.complete {
            continue;
        }
        complete += 1;
        let report = check_hmono(&x);
        if !report.passed() {
            return Err(format!("h-mono failed on the nerve of {}", cat.name()));
        }
    }
    for rel in &corpus.relcategories {
        let x = classification_diagram(rel, 2, 2, BUDGET).map_err(|e| e.to_string())?;
        if !is_complete(&x, CompletenessMode::Pi0).map_err(|e| e.to_string())?.complete {
            continue;
        }
        complete += 1;
        let report = check_hmono(&x);
        if !report.passed() {
            return Err(format!(
                "h-mono failed on the classification diagram of {}",
                rel.category().name()
            ));
        }
    }
    if complete == 0 {
        return Err("no complete corpus spaces".into());
    }
    let initial = check_initial();
    if !initial.passed() {
        return Err(format!("initial-object check failed: {:?}", initial.witnesses));
    }
    for (key, want) in [("mapsPointToEmpty", 0), ("mapsEdgeToEmpty", 0), ("mapsEmptyToPoint", 1)] {
        match initial.metrics.get(key) {
            Some(&v) if v == want => {}
            other => return Err(format!("metric {key} = {other:?}, expected {want}")),
        }
    }
    Ok(format!("{complete} complete spaces; initial counts 0, 0, 1"))
}

#[test]
fn acceptance() {
    let mut gate = Gate { failures: Vec::new() };

    gate.criterion(
        1,
        "hom enumeration matches brute force through degree 5",
        Duration::from_secs(1),
        hom_counts_match_brute_force,
    );
    gate.criterion(
        2,
        "simplex-category automorphisms through degree 4",
        Duration::from_secs(10),
        automorphisms_are_identity_and_reversal,
    );
    {
        // the bound applies per gluing step, so the body reports its slowest
        let start = Instant::now();
        let outcome = edge_chains_rebuild_linear_categories();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok((slowest, detail)) if slowest <= Duration::from_secs(1) => {
                println!(
                    "criterion  3: pass  {secs:>7.3}s  edge-chain pushouts rebuild the chains  [{detail}]"
                );
            }
            Ok((_, detail)) => {
                println!(
                    "criterion  3: FAIL  {secs:>7.3}s  edge-chain pushouts rebuild the chains  \
                     [a gluing step exceeded 1s; {detail}]"
                );
                gate.failures.push("criterion 3: a gluing step exceeded the 1s bound".into());
            }
            Err(why) => {
                println!(
                    "criterion  3: FAIL  {secs:>7.3}s  edge-chain pushouts rebuild the chains  [{why}]"
                );
                gate.failures.push(format!("criterion 3: {why}"));
            }
        }
    }
    gate.criterion(
        4,
        "corpus nerves are strict Segal and every 2-cell deletion fails",
        Duration::from_secs(30),
        nerves_are_segal_and_every_deletion_fails,
    );
    gate.criterion(
        5,
        "discrete-nerve completeness is rigidity with skeletality",
        Duration::from_secs(30),
        completeness_is_rigidity_with_skeletality,
    );
    gate.criterion(
        6,
        "realization agrees with the diagonal on seeded spaces",
        Duration::from_secs(60),
        realization_agrees_with_the_diagonal,
    );
    gate.criterion(
        7,
        "A5 holds across the corpus",
        Duration::from_secs(60),
        a5_holds_across_the_corpus,
    );
    gate.criterion(
        8,
        "interval axioms hold and the strict failure is recorded",
        Duration::from_secs(30),
        interval_axioms_hold_and_record_the_strict_failure,
    );
    gate.criterion(
        9,
        "A7 counts agree in low degrees",
        Duration::from_secs(5),
        a7_counts_agree_in_low_degrees,
    );
    gate.criterion(
        10,
        "the interval is unique up to equivalence",
        Duration::from_secs(120),
        the_interval_is_unique_up_to_equivalence,
    );
    gate.criterion(
        11,
        "classification diagrams round-trip their base",
        Duration::from_secs(60),
        classification_diagrams_round_trip,
    );
    gate.criterion(
        12,
        "h-mono on complete spaces and exact initial counts",
        Duration::from_secs(5),
        hmono_and_initial_are_exact,
    );

    assert!(gate.failures.is_empty(), "acceptance failures:\n{}", gate.failures.join("\n"));
}
