//! The classification diagram of a relative category: level `n` is the
//! nerve of the category of functors out of the chain `linear(n)` with the
//! distinguished arrows as transformation components.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Result;
use crate::fincat::{
    enumerate_functors, natural_transformations, Arrow, FinCategory, Functor, RelCategory,
};
use crate::simplex::SimplexMap;
use crate::sset::{nerve, nerve_map, FinSSet, SSetMap};

use super::SimplicialSpace;

/// The functor `linear(dom u) -> linear(cod u)` with object assignment `u`.
fn linear_functor(u: &SimplexMap) -> Functor {
    let dom = FinCategory::linear(u.domain());
    let cod = FinCategory::linear(u.codomain());
    let mut pair_index = BTreeMap::new();
    for (idx, arr) in cod.arrows().iter().enumerate() {
        pair_index.insert((arr.src, arr.tgt), idx);
    }
    let object_map = u.images().to_vec();
    let arrow_map = dom
        .arrows()
        .iter()
        .map(|arr| pair_index[&(u.images()[arr.src], u.images()[arr.tgt])])
        .collect();
    Functor::new(&dom, &cod, object_map, arrow_map).expect("monotone maps induce functors")
}

struct WeqCat {
    category: FinCategory,
    objects: Vec<Functor>,
    object_index: BTreeMap<Functor, usize>,
    arrows: Vec<(usize, usize, Vec<usize>)>,
    arrow_index: BTreeMap<(usize, usize, Vec<usize>), usize>,
}

/// Functors `linear(n) -> base` with the natural transformations whose
/// components are all distinguished.
fn weq_functor_category(r: &RelCategory, n: usize, budget: u64) -> Result<WeqCat> {
    let dom = FinCategory::linear(n);
    let base = r.category();
    let objects = enumerate_functors(&dom, base, budget)?;
    let object_index: BTreeMap<Functor, usize> =
        objects.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
    let mut arrows = Vec::new();
    for (p, f) in objects.iter().enumerate() {
        for (q, g) in objects.iter().enumerate() {
            for comp in natural_transformations(&dom, base, f, g) {
                if comp.iter().all(|&c| r.is_weq(c)) {
                    arrows.push((p, q, comp));
                }
            }
        }
    }
    let arrow_index: BTreeMap<(usize, usize, Vec<usize>), usize> =
        arrows.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
    let names: Vec<String> = (0..objects.len()).map(|p| format!("F{p}")).collect();
    let arrow_rows: Vec<Arrow> = arrows
        .iter()
        .enumerate()
        .map(|(i, &(p, q, _))| Arrow { name: format!("t{i}"), src: p, tgt: q })
        .collect();
    let identities: Vec<usize> = objects
        .iter()
        .enumerate()
        .map(|(p, f)| {
            let comp: Vec<usize> =
                (0..=n).map(|z| base.identity_of(f.apply_object(z))).collect();
            arrow_index[&(p, p, comp)]
        })
        .collect();
    let mut compose = BTreeMap::new();
    for (i, (p1, q1, c1)) in arrows.iter().enumerate() {
        for (j, (p2, q2, c2)) in arrows.iter().enumerate() {
            if q1 != p2 {
                continue;
            }
            let comp: Vec<usize> = (0..=n)
                .map(|z| base.compose(c2[z], c1[z]))
                .collect::<Result<_>>()?;
            let composite = arrow_index[&(*p1, *q2, comp)];
            compose.insert((j, i), composite);
        }
    }
    let category = FinCategory::new(format!("w{n}"), names, arrow_rows, identities, compose)?;
    Ok(WeqCat { category, objects, object_index, arrows, arrow_index })
}

/// The nerve-level map induced by precomposition with `linear_functor(u)`,
/// from functors out of `linear(cod u)` to functors out of `linear(dom u)`.
fn precompose_map(from: &WeqCat, to: &WeqCat, u: &SimplexMap, inner: usize) -> Result<SSetMap> {
    let l = linear_functor(u);
    let object_map: Vec<usize> =
        from.objects.iter().map(|f| to.object_index[&l.then(f)]).collect();
    let arrow_map: Vec<usize> = from
        .arrows
        .iter()
        .map(|(p, q, comp)| {
            let restricted: Vec<usize> =
                (0..=u.domain()).map(|z| comp[u.images()[z]]).collect();
            to.arrow_index[&(object_map[*p], object_map[*q], restricted)]
        })
        .collect();
    let fun = Functor::new(&from.category, &to.category, object_map, arrow_map)?;
    nerve_map(&from.category, &to.category, &fun, inner)
}

/// The classification diagram of a relative category, truncated at `outer`
/// levels of `inner`-truncated nerves.
pub fn classification_diagram(
    r: &RelCategory,
    outer: usize,
    inner: usize,
    budget: u64,
) -> Result<SimplicialSpace> {
    let cats: Vec<WeqCat> =
        (0..=outer).map(|n| weq_functor_category(r, n, budget)).collect::<Result<_>>()?;
    let levels: Vec<Arc<FinSSet>> = cats.iter().map(|w| nerve(&w.category, inner)).collect();
    let mut outer_faces: Vec<Vec<SSetMap>> = vec![Vec::new(); outer + 1];
    for n in 1..=outer {
        outer_faces[n] = (0..=n)
            .map(|i| precompose_map(&cats[n], &cats[n - 1], &SimplexMap::coface(n - 1, i)?, inner))
            .collect::<Result<_>>()?;
    }
    let mut outer_degens: Vec<Vec<SSetMap>> = vec![Vec::new(); outer + 1];
    for n in 0..outer {
        outer_degens[n] = (0..=n)
            .map(|i| {
                precompose_map(&cats[n], &cats[n + 1], &SimplexMap::codegeneracy(n, i)?, inner)
            })
            .collect::<Result<_>>()?;
    }
    SimplicialSpace::new(levels, outer_faces, outer_degens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::nerve;
    use crate::sspace::{
        discrete_levels, is_complete, is_segal, CompletenessMode, SegalMode,
    };
    use std::collections::BTreeSet;

    const BUDGET: u64 = 1_000_000;

    #[test]
    fn identity_equivalences_classify_to_the_discrete_diagram() {
        let cat = FinCategory::interval();
        let weq: BTreeSet<usize> = (0..cat.object_count()).map(|x| cat.identity_of(x)).collect();
        let r = RelCategory::new(cat.clone(), weq).unwrap();
        let x = classification_diagram(&r, 2, 2, BUDGET).unwrap();
        let reference = discrete_levels(&nerve(&cat, 2));
        for n in 0..=2usize {
            for j in 0..=2usize {
                assert_eq!(x.level(n).cells(j), reference.level(n).cells(j), "level {n} at {j}");
            }
        }
        assert!(is_segal(&x, SegalMode::Strict).unwrap().passes);
        assert!(is_complete(&x, CompletenessMode::Pi0).unwrap().complete);
    }

    #[test]
    fn inverting_the_interval_completes_it() {
        let r = RelCategory::with_isos(FinCategory::bar_interval());
        let x = classification_diagram(&r, 2, 2, BUDGET).unwrap();
        assert!(is_segal(&x, SegalMode::Strict).unwrap().passes);
        let report = is_complete(&x, CompletenessMode::Pi0).unwrap();
        assert!(report.complete, "{report:?}");
        assert_eq!(report.object_components, 1);
        // The fixed-endpoint functor categories collapse to a point each.
        let raw = is_complete(&discrete_levels(&nerve(&FinCategory::bar_interval(), 2)), CompletenessMode::Pi0)
            .unwrap();
        assert!(!raw.complete);
    }

    #[test]
    fn group_classification_is_segal_and_complete() {
        // Unlike the levelwise-discrete nerve of the group, which keeps the
        // nonidentity equivalence separate from the degenerate edges.
        let r = RelCategory::with_isos(FinCategory::z2());
        let x = classification_diagram(&r, 2, 2, BUDGET).unwrap();
        assert!(is_segal(&x, SegalMode::Strict).unwrap().passes);
        let report = is_complete(&x, CompletenessMode::Pi0).unwrap();
        assert!(report.complete, "{report:?}");
        assert_eq!(report.object_components, 1);
    }
}
