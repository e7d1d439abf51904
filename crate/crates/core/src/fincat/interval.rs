//! What makes the walking arrow special: it is rigid with two isomorphism
//! classes, it is not the discrete pair, and the Segal subobjects of its
//! nerve are exactly the empty complex, the point, the discrete pair, and
//! the whole nerve.
//!
//! At truncation two and above, a subcomplex of a nerve satisfying the
//! strict Segal condition is closed under identities (degeneracies of its
//! vertices) and composition (the long face of the degree-two filler its
//! spine surjectivity demands), so Segal subobjects of a nerve correspond
//! exactly to subcategories. The sweep below enumerates subcategories; an
//! independent brute force over raw subcomplexes backs this up in tests.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{are_equivalent, Arrow, FinCategory};
use crate::error::{Error, Result};
use crate::sset::{discrete_sset, empty_sset, is_isomorphic, nerve, FinSSet};

/// Every subcategory: a subset of objects with their identities plus a
/// composition-closed subset of non-identity arrows between them.
pub fn subcategories(a: &FinCategory, budget: u64) -> Result<Vec<FinCategory>> {
    let nobj = a.object_count();
    let nonid: Vec<usize> =
        (0..a.arrow_count()).filter(|&f| !a.is_identity_arrow(f)).collect();
    let bits = nobj + nonid.len();
    if bits >= 63 || (1u64 << bits) > budget {
        return Err(Error::BudgetExceeded(format!(
            "subcategory sweep needs 2^{bits} masks, over the budget {budget}"
        )));
    }
    let mut out = Vec::new();
    for obj_mask in 0..(1u64 << nobj) {
        'arrows: for arr_mask in 0..(1u64 << nonid.len()) {
            let keep_obj = |x: usize| obj_mask >> x & 1 == 1;
            let keep_arr: Vec<usize> = nonid
                .iter()
                .enumerate()
                .filter(|&(i, _)| arr_mask >> i & 1 == 1)
                .map(|(_, &f)| f)
                .collect();
            for &f in &keep_arr {
                if !keep_obj(a.arrow(f).src) || !keep_obj(a.arrow(f).tgt) {
                    continue 'arrows;
                }
            }
            // selected arrows plus identities, closed under composition?
            let mut selected: Vec<usize> =
                (0..nobj).filter(|&x| keep_obj(x)).map(|x| a.identity_of(x)).collect();
            selected.extend(&keep_arr);
            selected.sort_unstable();
            for &g in &selected {
                for &f in &selected {
                    if a.arrow(f).tgt == a.arrow(g).src
                        && !selected.contains(&a.compose(g, f)?)
                    {
                        continue 'arrows;
                    }
                }
            }
            out.push(restrict(a, obj_mask, &selected)?);
        }
    }
    Ok(out)
}

fn restrict(a: &FinCategory, obj_mask: u64, selected: &[usize]) -> Result<FinCategory> {
    let mut obj_new = vec![usize::MAX; a.object_count()];
    let mut objects = Vec::new();
    for x in 0..a.object_count() {
        if obj_mask >> x & 1 == 1 {
            obj_new[x] = objects.len();
            objects.push(a.objects()[x].clone());
        }
    }
    let mut arr_new = vec![usize::MAX; a.arrow_count()];
    let arrows: Vec<Arrow> = selected
        .iter()
        .enumerate()
        .map(|(i, &f)| {
            arr_new[f] = i;
            let old = a.arrow(f);
            Arrow { name: old.name.clone(), src: obj_new[old.src], tgt: obj_new[old.tgt] }
        })
        .collect();
    let identities: Vec<usize> = (0..a.object_count())
        .filter(|&x| obj_new[x] != usize::MAX)
        .map(|x| arr_new[a.identity_of(x)])
        .collect();
    let mut compose = BTreeMap::new();
    for &g in selected {
        for &f in selected {
            if a.arrow(f).tgt == a.arrow(g).src {
                compose.insert((arr_new[g], arr_new[f]), arr_new[a.compose(g, f)?]);
            }
        }
    }
    FinCategory::new(format!("{}-sub", a.name()), objects, arrows, identities, compose)
}

/// The verdict sheet for one candidate category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalMatch {
    pub two_iso_classes: bool,
    pub rigid: bool,
    pub distinct_from_discrete_pair: bool,
    /// Segal subobject classes of the nerve, labeled, with multiplicities.
    pub segal_subshapes: Vec<(String, usize)>,
    pub subshapes_are_exactly_four: bool,
}

impl IntervalMatch {
    pub fn is_interval(&self) -> bool {
        self.two_iso_classes
            && self.rigid
            && self.distinct_from_discrete_pair
            && self.subshapes_are_exactly_four
    }
}

/// Run all interval tests against one category.
pub fn characterize_interval(a: &FinCategory, budget: u64) -> Result<IntervalMatch> {
    let two_iso_classes = a.iso_classes().len() == 2;
    let rigid = a.is_rigid();
    let distinct_from_discrete_pair =
        !are_equivalent(a, &FinCategory::discrete(2), budget)?.0;
    let refs: Vec<(&str, Arc<FinSSet>)> = vec![
        ("empty", empty_sset(2)),
        ("point", discrete_sset(&["pt".into()], 2)),
        ("pair", discrete_sset(&["p0".into(), "p1".into()], 2)),
        ("full", nerve(a, 2)),
    ];
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for sub in subcategories(a, budget)? {
        let shape = nerve(&sub, 2);
        let label = refs
            .iter()
            .find(|(_, r)| is_isomorphic(&shape, r))
            .map(|(l, _)| l.to_string())
            .unwrap_or_else(|| "other".into());
        *counts.entry(label).or_insert(0) += 1;
    }
    let subshapes_are_exactly_four = ["empty", "point", "pair", "full"]
        .iter()
        .all(|l| counts.get(*l).copied().unwrap_or(0) > 0)
        && !counts.contains_key("other");
    let segal_subshapes = counts.into_iter().collect();
    Ok(IntervalMatch {
        two_iso_classes,
        rigid,
        distinct_from_discrete_pair,
        segal_subshapes,
        subshapes_are_exactly_four,
    })
}
