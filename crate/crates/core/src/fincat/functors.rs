//! Functor enumeration, natural transformations, and equivalence of finite
//! categories.

use super::FinCategory;
use crate::error::{Error, Result};

/// A functor between two [`FinCategory`] values, stored as its object and
/// arrow assignments. The source and target are passed explicitly to the
/// operations that need them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Functor {
    object_map: Vec<usize>,
    arrow_map: Vec<usize>,
}

impl Functor {
    /// Validating constructor: endpoints, identities, and composition must
    /// all be preserved.
    pub fn new(a: &FinCategory, b: &FinCategory, object_map: Vec<usize>, arrow_map: Vec<usize>) -> Result<Self> {
        let f = Functor { object_map, arrow_map };
        f.check(a, b)?;
        Ok(f)
    }

    pub fn check(&self, a: &FinCategory, b: &FinCategory) -> Result<()> {
        let invalid = |detail: String| Error::Invalid { kind: "functor", detail };
        if self.object_map.len() != a.object_count() || self.arrow_map.len() != a.arrow_count() {
            return Err(invalid("assignment lengths do not match the source".into()));
        }
        if self.object_map.iter().any(|&x| x >= b.object_count())
            || self.arrow_map.iter().any(|&f| f >= b.arrow_count())
        {
            return Err(invalid("assignment value out of range".into()));
        }
        for (f, arr) in a.arrows().iter().enumerate() {
            let img = &b.arrows()[self.arrow_map[f]];
            if img.src != self.object_map[arr.src] || img.tgt != self.object_map[arr.tgt] {
                return Err(invalid(format!("endpoints not preserved at {}", arr.name)));
            }
        }
        for x in 0..a.object_count() {
            if self.arrow_map[a.identity_of(x)] != b.identity_of(self.object_map[x]) {
                return Err(invalid(format!("identity of object {x} not preserved")));
            }
        }
        for (&(g, f), &gf) in a.composition_table() {
            if b.compose(self.arrow_map[g], self.arrow_map[f])? != self.arrow_map[gf] {
                return Err(invalid(format!(
                    "composition not preserved at ({}, {})",
                    a.arrows()[g].name,
                    a.arrows()[f].name
                )));
            }
        }
        Ok(())
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.arrow_map
    }

    pub fn apply_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn apply_arrow(&self, f: usize) -> usize {
        self.arrow_map[f]
    }

    pub fn identity(a: &FinCategory) -> Self {
        Functor {
            object_map: (0..a.object_count()).collect(),
            arrow_map: (0..a.arrow_count()).collect(),
        }
    }

    /// Diagram-order composition: `self : A -> B` then `g : B -> C`.
    pub fn then(&self, g: &Functor) -> Functor {
        Functor {
            object_map: self.object_map.iter().map(|&x| g.object_map[x]).collect(),
            arrow_map: self.arrow_map.iter().map(|&f| g.arrow_map[f]).collect(),
        }
    }

    /// Every hom-set maps bijectively onto the corresponding hom-set of the
    /// target.
    pub fn is_fully_faithful(&self, a: &FinCategory, b: &FinCategory) -> bool {
        for x in 0..a.object_count() {
            for y in 0..a.object_count() {
                let dom = a.hom(x, y);
                let mut images: Vec<usize> = dom.iter().map(|&f| self.arrow_map[f]).collect();
                images.sort_unstable();
                images.dedup();
                if images.len() != dom.len() {
                    return false;
                }
                let cod = b.hom(self.object_map[x], self.object_map[y]);
                if images.len() != cod.len() {
                    return false;
                }
            }
        }
        true
    }

    /// Every object of the target is isomorphic to an image object.
    pub fn is_essentially_surjective(&self, a: &FinCategory, b: &FinCategory) -> bool {
        (0..b.object_count()).all(|y| {
            (0..a.object_count()).any(|x| b.objects_isomorphic(self.object_map[x], y))
        })
    }
}

/// All functors `a -> b` in lexicographic order on (object map, arrow map).
///
/// The object-map space `|ob b|^|ob a|` is checked against `budget` before
/// the search starts; search nodes are also counted against it.
pub fn enumerate_functors(a: &FinCategory, b: &FinCategory, budget: u64) -> Result<Vec<Functor>> {
    let nobj = a.object_count();
    let mut space: u128 = 1;
    for _ in 0..nobj {
        space = space.saturating_mul(b.object_count() as u128);
    }
    if space > budget as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{space} object assignments exceed budget {budget}"
        )));
    }
    if a.object_count() > 0 && b.object_count() == 0 {
        return Ok(Vec::new());
    }

    // per-arrow composition constraints: triples (g, f, gf)
    let triples: Vec<(usize, usize, usize)> =
        a.composition_table().iter().map(|(&(g, f), &gf)| (g, f, gf)).collect();

    let mut out = Vec::new();
    let mut nodes: u64 = 0;
    let mut object_map = vec![0usize; nobj];
    loop {
        enumerate_arrow_maps(a, b, &object_map, &triples, &mut nodes, budget, &mut out)?;
        // advance object map odometer
        let mut k = nobj;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            object_map[k] += 1;
            if object_map[k] < b.object_count() {
                break;
            }
            object_map[k] = 0;
        }
    }
}

fn enumerate_arrow_maps(
    a: &FinCategory,
    b: &FinCategory,
    object_map: &[usize],
    triples: &[(usize, usize, usize)],
    nodes: &mut u64,
    budget: u64,
    out: &mut Vec<Functor>,
) -> Result<()> {
    let narr = a.arrow_count();
    // candidates per arrow: forced for identities, a hom-set otherwise
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(narr);
    for (f, arr) in a.arrows().iter().enumerate() {
        if a.is_identity_arrow(f) {
            candidates.push(vec![b.identity_of(object_map[arr.src])]);
        } else {
            let hom = b.hom(object_map[arr.src], object_map[arr.tgt]);
            if hom.is_empty() {
                return Ok(());
            }
            candidates.push(hom);
        }
    }
    // constraints indexed by the largest participating arrow
    let mut by_last: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); narr];
    for &(g, f, gf) in triples {
        by_last[g.max(f).max(gf)].push((g, f, gf));
    }

    fn rec(
        b: &FinCategory,
        object_map: &[usize],
        candidates: &[Vec<usize>],
        by_last: &[Vec<(usize, usize, usize)>],
        assign: &mut Vec<usize>,
        depth: usize,
        nodes: &mut u64,
        budget: u64,
        out: &mut Vec<Functor>,
    ) -> Result<()> {
        if depth == candidates.len() {
            out.push(Functor { object_map: object_map.to_vec(), arrow_map: assign.clone() });
            return Ok(());
        }
        for &cand in &candidates[depth] {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExceeded(format!("functor search exceeded {budget} nodes")));
            }
            assign[depth] = cand;
            let consistent = by_last[depth].iter().all(|&(g, f, gf)| {
                matches!(b.compose(assign[g], assign[f]), Ok(c) if c == assign[gf])
            });
            if consistent {
                rec(b, object_map, candidates, by_last, assign, depth + 1, nodes, budget, out)?;
            }
        }
        Ok(())
    }

    let mut assign = vec![usize::MAX; narr];
    rec(b, object_map, &candidates, &by_last, &mut assign, 0, nodes, budget, out)
}

/// All natural transformations `f => g` between functors `a -> b`, as
/// component vectors indexed by objects of `a`, in lexicographic order.
pub fn natural_transformations(
    a: &FinCategory,
    b: &FinCategory,
    f: &Functor,
    g: &Functor,
) -> Vec<Vec<usize>> {
    let nobj = a.object_count();
    let slots: Vec<Vec<usize>> =
        (0..nobj).map(|x| b.hom(f.apply_object(x), g.apply_object(x))).collect();
    if slots.iter().any(|s| s.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; nobj];
    'outer: loop {
        let comp: Vec<usize> = (0..nobj).map(|x| slots[x][pick[x]]).collect();
        let natural = a.arrows().iter().enumerate().all(|(u, arr)| {
            // g(u) o comp[src] == comp[tgt] o f(u)
            let lhs = b.compose(g.apply_arrow(u), comp[arr.src]);
            let rhs = b.compose(comp[arr.tgt], f.apply_arrow(u));
            matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
        });
        if natural {
            out.push(comp);
        }
        let mut k = nobj;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < slots[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
    out
}

/// Whether some natural transformation `f => g` has all components
/// invertible.
pub fn are_naturally_isomorphic(a: &FinCategory, b: &FinCategory, f: &Functor, g: &Functor) -> bool {
    natural_transformations(a, b, f, g)
        .iter()
        .any(|comp| comp.iter().all(|&c| b.is_invertible(c)))
}

/// Equivalence of categories, decided by exhaustive functor search.
///
/// Returns the first (in enumeration order) fully faithful and essentially
/// surjective functor `a -> b` as a witness. One direction suffices: an
/// equivalence has a quasi-inverse, so if the categories are equivalent a
/// witness exists on this side.
pub fn are_equivalent(a: &FinCategory, b: &FinCategory, budget: u64) -> Result<(bool, Option<Functor>)> {
    for f in enumerate_functors(a, b, budget)? {
        if f.is_fully_faithful(a, b) && f.is_essentially_surjective(a, b) {
            return Ok((true, Some(f)));
        }
    }
    Ok((false, None))
}

/// Isomorphism of categories: some functor is bijective on objects and on
/// arrows. Stronger than [`are_equivalent`].
pub fn are_isomorphic(a: &FinCategory, b: &FinCategory, budget: u64) -> Result<bool> {
    fn bijective(map: &[usize], size: usize) -> bool {
        let mut seen = vec![false; size];
        map.len() == size && map.iter().all(|&v| v < size && !std::mem::replace(&mut seen[v], true))
    }
    if a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count() {
        return Ok(false);
    }
    for f in enumerate_functors(a, b, budget)? {
        if bijective(f.object_map(), b.object_count()) && bijective(f.arrow_map(), b.arrow_count())
        {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;
    use crate::DEFAULT_ENUM_BUDGET;

    fn functors(a: &FinCategory, b: &FinCategory) -> Vec<Functor> {
        enumerate_functors(a, b, DEFAULT_ENUM_BUDGET).unwrap()
    }

    #[test]
    fn functor_counts_match_monotone_maps() {
        // functors between chains are exactly the monotone maps
        for n in 0..=3 {
            for m in 0..=3 {
                let fs = functors(&FinCategory::linear(n), &FinCategory::linear(m));
                let maps = simplex::enumerate_maps_default(n, m).unwrap();
                assert_eq!(fs.len(), maps.len(), "({n},{m})");
                // explicit bijection: object maps coincide with image sequences
                let mut obj_maps: Vec<Vec<usize>> = fs.iter().map(|f| f.object_map().to_vec()).collect();
                obj_maps.sort();
                obj_maps.dedup();
                assert_eq!(obj_maps.len(), fs.len());
                let images: Vec<Vec<usize>> = maps.iter().map(|m| m.images().to_vec()).collect();
                assert_eq!(obj_maps, images);
            }
        }
    }

    #[test]
    fn frozen_functor_counts() {
        assert_eq!(functors(&FinCategory::linear(1), &FinCategory::linear(1)).len(), 3);
        assert_eq!(functors(&FinCategory::linear(2), &FinCategory::linear(3)).len(), 20);
        assert_eq!(functors(&FinCategory::empty(), &FinCategory::linear(1)).len(), 1);
        assert_eq!(functors(&FinCategory::linear(1), &FinCategory::empty()).len(), 0);
        assert_eq!(functors(&FinCategory::empty(), &FinCategory::empty()).len(), 1);
    }

    #[test]
    fn isomorphism_refines_equivalence() {
        let bar = FinCategory::bar_interval();
        let pt = FinCategory::point();
        // equivalent but not isomorphic: different object counts
        assert!(are_equivalent(&bar, &pt, DEFAULT_ENUM_BUDGET).unwrap().0);
        assert!(!are_isomorphic(&bar, &pt, DEFAULT_ENUM_BUDGET).unwrap());
        assert!(are_isomorphic(&bar, &FinCategory::bar_interval(), DEFAULT_ENUM_BUDGET).unwrap());
        let z2 = FinCategory::z2();
        assert!(!are_isomorphic(&z2, &FinCategory::point(), DEFAULT_ENUM_BUDGET).unwrap());
    }

    #[test]
    fn functors_validate() {
        let a = FinCategory::bar_interval();
        let b = FinCategory::z2();
        for f in functors(&a, &b) {
            f.check(&a, &b).unwrap();
        }
        // an endpoint-breaking assignment is rejected
        assert!(Functor::new(
            &FinCategory::interval(),
            &FinCategory::interval(),
            vec![0, 1],
            vec![0, 1, 0]
        )
        .is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let a = FinCategory::discrete(4);
        let b = FinCategory::discrete(4);
        assert!(matches!(
            enumerate_functors(&a, &b, 200),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn equivalences() {
        let budget = DEFAULT_ENUM_BUDGET;
        // the walking isomorphism collapses to the point
        let (eq, wit) = are_equivalent(&FinCategory::bar_interval(), &FinCategory::point(), budget).unwrap();
        assert!(eq);
        let w = wit.unwrap();
        assert!(w.is_fully_faithful(&FinCategory::bar_interval(), &FinCategory::point()));
        // the walking arrow does not
        let (eq, wit) = are_equivalent(&FinCategory::interval(), &FinCategory::point(), budget).unwrap();
        assert!(!eq);
        assert!(wit.is_none());
        // reflexivity on a sample
        for c in [FinCategory::interval(), FinCategory::bar_interval(), FinCategory::linear(2), FinCategory::z2()] {
            assert!(are_equivalent(&c, &c, budget).unwrap().0, "{} ~ itself", c.name());
        }
        // symmetry on a mixed pair
        assert!(are_equivalent(&FinCategory::point(), &FinCategory::bar_interval(), budget).unwrap().0);
        // equivalent categories have the same number of isomorphism classes
        assert_eq!(
            FinCategory::bar_interval().iso_classes().len(),
            FinCategory::point().iso_classes().len()
        );
        // the empty category is equivalent only to itself
        assert!(are_equivalent(&FinCategory::empty(), &FinCategory::empty(), budget).unwrap().0);
        assert!(!are_equivalent(&FinCategory::empty(), &FinCategory::point(), budget).unwrap().0);
        assert!(!are_equivalent(&FinCategory::point(), &FinCategory::empty(), budget).unwrap().0);
    }

    #[test]
    fn natural_transformation_components() {
        let a = FinCategory::interval();
        let b = FinCategory::interval();
        let id = Functor::identity(&a);
        // only the identity transformation id => id
        assert_eq!(natural_transformations(&a, &b, &id, &id).len(), 1);
        // const_x => const_y: one transformation with component f at both objects
        let cx = Functor::new(&a, &b, vec![0, 0], vec![0, 0, 0]).unwrap();
        let cy = Functor::new(&a, &b, vec![1, 1], vec![1, 1, 1]).unwrap();
        let ts = natural_transformations(&a, &b, &cx, &cy);
        assert_eq!(ts, vec![vec![2, 2]]);
        // and none the other way
        assert!(natural_transformations(&a, &b, &cy, &cx).is_empty());
        // const_x => id: component at x is id_x, at y is f
        assert_eq!(natural_transformations(&a, &b, &cx, &id), vec![vec![0, 2]]);
        assert!(are_naturally_isomorphic(&a, &b, &id, &id));
        assert!(!are_naturally_isomorphic(&a, &b, &cx, &cy));
    }
}
