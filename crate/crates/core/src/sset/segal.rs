//! The strict Segal condition, spines, and the fundamental category of a
//! complex satisfying it.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{subcomplex, FinSSet, SSetMap};
use crate::error::{Error, Result};
use crate::fincat::{Arrow, FinCategory};

/// Why a complex fails the strict Segal condition at some degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegalFailure {
    /// Two distinct cells share a spine.
    Duplicate { degree: usize, first: usize, second: usize },
    /// A compatible edge tuple has no filler cell.
    Missing { degree: usize, spine: Vec<usize> },
}

impl std::fmt::Display for SegalFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SegalFailure::Duplicate { degree, first, second } => write!(
                f,
                "cells {first} and {second} at degree {degree} share a spine"
            ),
            SegalFailure::Missing { degree, spine } => write!(
                f,
                "no cell at degree {degree} fills the edge tuple {spine:?}"
            ),
        }
    }
}

/// The spine of an `n`-cell: its `n` consecutive edges.
pub fn spine(x: &FinSSet, n: usize, c: usize) -> Vec<usize> {
    (0..n).map(|i| x.edge(n, c, i, i + 1)).collect()
}

/// First witness against the strict Segal condition, or `None` when the
/// spine map is bijective at every degree the truncation exposes.
pub fn strict_segal_failure(x: &FinSSet) -> Option<SegalFailure> {
    let d = x.truncation();
    for n in 2..=d {
        let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in 0..x.cells(n) {
            let sp = spine(x, n, c);
            if let Some(&first) = seen.get(&sp) {
                return Some(SegalFailure::Duplicate { degree: n, first, second: c });
            }
            seen.insert(sp, c);
        }
        // every compatible tuple must be realized
        let mut missing: Option<SegalFailure> = None;
        let mut tuple: Vec<usize> = Vec::with_capacity(n);
        enumerate_tuples(x, n, &mut tuple, &mut |t| {
            if missing.is_none() && !seen.contains_key(t) {
                missing = Some(SegalFailure::Missing { degree: n, spine: t.to_vec() });
            }
        });
        if missing.is_some() {
            return missing;
        }
    }
    None
}

fn enumerate_tuples(x: &FinSSet, n: usize, tuple: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if tuple.len() == n {
        visit(tuple);
        return;
    }
    for e in 0..x.cells(1) {
        if let Some(&last) = tuple.last() {
            // chain tail to head: target of the previous edge is d_0
            if x.face(1, 0, last) != x.face(1, 1, e) {
                continue;
            }
        }
        tuple.push(e);
        enumerate_tuples(x, n, tuple, visit);
        tuple.pop();
    }
}

pub fn is_strict_segal(x: &FinSSet) -> bool {
    strict_segal_failure(x).is_none()
}

/// The category whose objects are vertices, arrows are edges, and whose
/// composition reads the long face of the unique spine filler.
///
/// Requires truncation at least 2 and the strict Segal condition; category
/// laws that fail (possible when degree 3 is truncated away) surface as
/// `IllDefinedComposition`.
pub fn fundamental_category(x: &FinSSet) -> Result<FinCategory> {
    if x.truncation() < 2 {
        return Err(Error::NotSegal(format!(
            "truncation {} exposes no composition data",
            x.truncation()
        )));
    }
    if let Some(failure) = strict_segal_failure(x) {
        return Err(Error::NotSegal(failure.to_string()));
    }
    let objects: Vec<String> = (0..x.cells(0)).map(|v| x.cell_name(0, v).to_string()).collect();
    let arrows: Vec<Arrow> = (0..x.cells(1))
        .map(|e| Arrow {
            name: x.cell_name(1, e).to_string(),
            src: x.face(1, 1, e),
            tgt: x.face(1, 0, e),
        })
        .collect();
    let identities: Vec<usize> = (0..x.cells(0)).map(|v| x.degen(0, 0, v)).collect();
    let mut spine2: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for t in 0..x.cells(2) {
        spine2.insert((x.edge(2, t, 0, 1), x.edge(2, t, 1, 2)), t);
    }
    let mut compose = BTreeMap::new();
    for g in 0..x.cells(1) {
        for f in 0..x.cells(1) {
            if x.face(1, 0, f) != x.face(1, 1, g) {
                continue;
            }
            let tau = spine2[&(f, g)];
            compose.insert((g, f), x.face(2, 1, tau));
        }
    }
    FinCategory::new("fundamental", objects, arrows, identities, compose).map_err(|e| {
        Error::IllDefinedComposition(format!("filler composition violates the category laws: {e}"))
    })
}

/// The canonical comparison from a strict Segal complex to the nerve of its
/// fundamental category, verified to be a levelwise bijection.
pub fn nerve_iso(x: &Arc<FinSSet>) -> Result<SSetMap> {
    let cat = fundamental_category(x)?;
    let d = x.truncation();
    let target = super::nerve(&cat, d);
    let mut levels: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    levels.push((0..x.cells(0)).collect());
    for n in 1..=d {
        let level: Vec<usize> = (0..x.cells(n))
            .map(|c| {
                let name: Vec<String> = spine(x, n, c)
                    .into_iter()
                    .map(|e| x.cell_name(1, e).to_string())
                    .collect();
                target
                    .cell_by_name(n, &name.join("|"))
                    .expect("every spine is a composable string")
            })
            .collect();
        levels.push(level);
    }
    let map = SSetMap::new(Arc::clone(x), target, levels)?;
    if !map.is_levelwise_bijective() {
        return Err(Error::NotSegal(
            "comparison with the nerve of the fundamental category is not bijective".into(),
        ));
    }
    Ok(map)
}

/// Remove a cell together with everything its absence breaks: cells having
/// it as an iterated face, and cells whose degeneracies get removed.
pub fn delete_cell_upward(x: &Arc<FinSSet>, degree: usize, cell: usize) -> Result<Arc<FinSSet>> {
    let d = x.truncation();
    if degree > d || cell >= x.cells(degree) {
        return Err(Error::IndexOutOfRange(format!(
            "no cell {cell} at degree {degree}"
        )));
    }
    let mut keep: Vec<Vec<bool>> = (0..=d).map(|n| vec![true; x.cells(n)]).collect();
    keep[degree][cell] = false;
    loop {
        let mut changed = false;
        for n in 1..=d {
            for c in 0..x.cells(n) {
                if keep[n][c] && (0..=n).any(|i| !keep[n - 1][x.face(n, i, c)]) {
                    keep[n][c] = false;
                    changed = true;
                }
            }
        }
        for n in 0..d {
            for c in 0..x.cells(n) {
                if keep[n][c] && (0..=n).any(|i| !keep[n + 1][x.degen(n, i, c)]) {
                    keep[n][c] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let (sub, _) = subcomplex(x, &keep)?;
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{are_equivalent, FinCategory};
    use crate::sset::{nerve, standard};

    #[test]
    fn nerves_satisfy_the_strict_segal_condition() {
        for cat in [
            FinCategory::interval(),
            FinCategory::bar_interval(),
            FinCategory::z2(),
            FinCategory::linear(3),
            FinCategory::discrete(2),
        ] {
            let n = nerve(&cat, 3);
            assert!(is_strict_segal(&n), "{}", cat.name());
        }
    }

    #[test]
    fn deleting_a_filler_breaks_the_condition_with_a_witness() {
        // the composite witness 0->1|1->2 is nondegenerate, so the deletion
        // removes exactly that filler and leaves its spine unfillable
        let n = nerve(&FinCategory::linear(2), 2);
        let broken = delete_cell_upward(&n, 2, n.cell_by_name(2, "0->1|1->2").unwrap()).unwrap();
        assert_eq!(broken.cells(1), n.cells(1));
        match strict_segal_failure(&broken) {
            Some(SegalFailure::Missing { degree: 2, ref spine }) => {
                let names: Vec<&str> = spine.iter().map(|&e| broken.cell_name(1, e)).collect();
                assert_eq!(names, vec!["0->1", "1->2"]);
            }
            other => panic!("expected a missing tuple, got {other:?}"),
        }
    }

    #[test]
    fn fundamental_category_round_trips_the_nerve() {
        for cat in [FinCategory::interval(), FinCategory::bar_interval(), FinCategory::z2()] {
            let n = nerve(&cat, 3);
            let recovered = fundamental_category(&n).unwrap();
            assert_eq!(recovered.object_count(), cat.object_count());
            assert_eq!(recovered.arrow_count(), cat.arrow_count());
            assert!(are_equivalent(&recovered, &cat, 1_000_000).unwrap().0);
            let iso = nerve_iso(&n).unwrap();
            assert!(iso.is_levelwise_bijective());
        }
    }

    #[test]
    fn fundamental_category_rejects_non_segal_complexes() {
        let n = nerve(&FinCategory::linear(2), 2);
        let broken = delete_cell_upward(&n, 2, n.cell_by_name(2, "0->1|1->2").unwrap()).unwrap();
        assert!(matches!(fundamental_category(&broken), Err(Error::NotSegal(_))));
    }

    #[test]
    fn representable_complexes_recover_linear_posets() {
        let x = standard(3, 3);
        let cat = fundamental_category(&x).unwrap();
        assert!(are_equivalent(&cat, &FinCategory::linear(3), 1_000_000).unwrap().0);
        assert_eq!(cat.arrow_count(), 10);
    }

    #[test]
    fn spine_of_a_nerve_string_lists_its_arrows() {
        let cat = FinCategory::interval();
        let n = nerve(&cat, 3);
        let c = n.cell_by_name(3, "id_x|f|id_y").unwrap();
        let names: Vec<&str> =
            spine(&n, 3, c).into_iter().map(|e| n.cell_name(1, e)).collect();
        assert_eq!(names, vec!["id_x", "f", "id_y"]);
    }
}
