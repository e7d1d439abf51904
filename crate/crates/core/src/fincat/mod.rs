//! Finite categories presented by explicit composition tables.
//!
//! Objects and arrows are indices into name tables; composition is a partial
//! table defined exactly on composable pairs. Constructors validate totality
//! on composable pairs, unit laws, and associativity, so every value of
//! [`FinCategory`] in circulation is a genuine category.

mod corpus;
mod functors;
mod interval;
mod pushout;

pub use corpus::{generate_categories, seeded_relative_categories};
pub use functors::{
    are_equivalent, are_isomorphic, are_naturally_isomorphic, enumerate_functors,
    natural_transformations, Functor,
};
pub use interval::{characterize_interval, subcategories, IntervalMatch};
pub use pushout::pushout_over_objects;

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// An arrow of a finite category: a name and object endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category with explicit composition table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    /// `identities[x]` = index of `id_x`.
    identities: Vec<usize>,
    /// `(g, f) -> g o f`, keyed by arrow indices, defined exactly on
    /// composable pairs (`tgt(f) == src(g)`).
    compose: BTreeMap<(usize, usize), usize>,
}

impl FinCategory {
    pub fn new(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        compose: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let cat = FinCategory { name: name.into(), objects, arrows, identities, compose };
        cat.validate()?;
        Ok(cat)
    }

    fn validate(&self) -> Result<()> {
        let invalid = |detail: String| Error::Invalid { kind: "category", detail };
        let nobj = self.objects.len();
        let narr = self.arrows.len();
        {
            let mut names: Vec<&str> = self.objects.iter().map(|s| s.as_str()).collect();
            names.sort_unstable();
            names.dedup();
            if names.len() != nobj {
                return Err(invalid("duplicate object names".into()));
            }
            let mut names: Vec<&str> = self.arrows.iter().map(|a| a.name.as_str()).collect();
            names.sort_unstable();
            names.dedup();
            if names.len() != narr {
                return Err(invalid("duplicate arrow names".into()));
            }
        }
        for a in &self.arrows {
            if a.src >= nobj || a.tgt >= nobj {
                return Err(invalid(format!("arrow {} has endpoint out of range", a.name)));
            }
        }
        if self.identities.len() != nobj {
            return Err(invalid("one identity per object required".into()));
        }
        for (x, &i) in self.identities.iter().enumerate() {
            let a = self.arrows.get(i).ok_or_else(|| invalid("identity index out of range".into()))?;
            if a.src != x || a.tgt != x {
                return Err(invalid(format!("identity of object {x} is not an endo-arrow")));
            }
        }
        // composition defined exactly on composable pairs, with matching endpoints
        for g in 0..narr {
            for f in 0..narr {
                let composable = self.arrows[f].tgt == self.arrows[g].src;
                match self.compose.get(&(g, f)) {
                    Some(&gf) if composable => {
                        let a = self
                            .arrows
                            .get(gf)
                            .ok_or_else(|| invalid("composite index out of range".into()))?;
                        if a.src != self.arrows[f].src || a.tgt != self.arrows[g].tgt {
                            return Err(invalid(format!(
                                "composite of {} and {} has wrong endpoints",
                                self.arrows[f].name, self.arrows[g].name
                            )));
                        }
                    }
                    Some(_) => {
                        return Err(invalid(format!(
                            "composition defined on non-composable pair ({}, {})",
                            self.arrows[g].name, self.arrows[f].name
                        )))
                    }
                    None if composable => {
                        return Err(invalid(format!(
                            "missing composite of {} then {}",
                            self.arrows[f].name, self.arrows[g].name
                        )))
                    }
                    None => {}
                }
            }
        }
        // unit laws
        for f in 0..narr {
            let idt = self.identities[self.arrows[f].tgt];
            let ids = self.identities[self.arrows[f].src];
            if self.compose[&(idt, f)] != f || self.compose[&(f, ids)] != f {
                return Err(invalid(format!("unit law fails at {}", self.arrows[f].name)));
            }
        }
        // associativity over composable triples, walking genuine paths only
        let out_by_src = self.arrows_by_src();
        for f in 0..narr {
            for &g in &out_by_src[self.arrows[f].tgt] {
                let gf = self.compose[&(g, f)];
                for &h in &out_by_src[self.arrows[g].tgt] {
                    let hg = self.compose[&(h, g)];
                    if self.compose[&(h, gf)] != self.compose[&(hg, f)] {
                        return Err(invalid(format!(
                            "associativity fails at ({}, {}, {})",
                            self.arrows[h].name, self.arrows[g].name, self.arrows[f].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn identity_of(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity_arrow(&self, f: usize) -> bool {
        self.identities[self.arrows[f].src] == f && self.arrows[f].src == self.arrows[f].tgt
    }

    pub fn composition_table(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.compose
    }

    /// `g o f` (apply `f` first). Errors on non-composable pairs.
    pub fn compose(&self, g: usize, f: usize) -> Result<usize> {
        self.compose.get(&(g, f)).copied().ok_or_else(|| {
            Error::DomainMismatch(format!(
                "arrows {} and {} are not composable",
                self.arrows[g].name, self.arrows[f].name
            ))
        })
    }

    /// Arrow indices from `x` to `y`, ascending.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&f| self.arrows[f].src == x && self.arrows[f].tgt == y).collect()
    }

    fn arrows_by_src(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.objects.len()];
        for (i, a) in self.arrows.iter().enumerate() {
            out[a.src].push(i);
        }
        out
    }

    /// Two-sided inverse of `f`, if any.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let a = &self.arrows[f];
        for g in self.hom(a.tgt, a.src) {
            if self.compose[&(g, f)] == self.identities[a.src]
                && self.compose[&(f, g)] == self.identities[a.tgt]
            {
                return Some(g);
            }
        }
        None
    }

    pub fn is_invertible(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    pub fn objects_isomorphic(&self, x: usize, y: usize) -> bool {
        x == y || self.hom(x, y).iter().any(|&f| self.is_invertible(f))
    }

    /// Partition of objects into isomorphism classes, ordered by smallest
    /// member.
    pub fn iso_classes(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        let mut class = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class[x] != usize::MAX {
                continue;
            }
            let c = out.len();
            class[x] = c;
            let mut members = vec![x];
            for y in x + 1..n {
                if class[y] == usize::MAX && self.objects_isomorphic(x, y) {
                    class[y] = c;
                    members.push(y);
                }
            }
            out.push(members);
        }
        out
    }

    /// No object has a nontrivial automorphism.
    pub fn is_rigid(&self) -> bool {
        (0..self.arrows.len()).all(|f| {
            let a = &self.arrows[f];
            a.src != a.tgt || !self.is_invertible(f) || f == self.identities[a.src]
        })
    }

    /// No two distinct objects are isomorphic.
    pub fn is_skeletal(&self) -> bool {
        let n = self.objects.len();
        (0..n).all(|x| (x + 1..n).all(|y| !self.objects_isomorphic(x, y)))
    }

    // ---- builtins ----

    /// The empty category.
    pub fn empty() -> Self {
        FinCategory {
            name: "empty".into(),
            objects: Vec::new(),
            arrows: Vec::new(),
            identities: Vec::new(),
            compose: BTreeMap::new(),
        }
    }

    /// The terminal category: one object, its identity.
    pub fn point() -> Self {
        FinCategory::new(
            "point",
            vec!["x".into()],
            vec![Arrow { name: "id_x".into(), src: 0, tgt: 0 }],
            vec![0],
            BTreeMap::from([((0, 0), 0)]),
        )
        .expect("point is a category")
    }

    /// The linear order `0 < 1 < ... < n` as a category; arrows are the
    /// pairs `i <= j`.
    pub fn linear(n: usize) -> Self {
        let objects: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        let mut index = BTreeMap::new();
        for i in 0..=n {
            for j in i..=n {
                index.insert((i, j), arrows.len());
                arrows.push(Arrow { name: format!("{i}->{j}"), src: i, tgt: j });
            }
        }
        let identities: Vec<usize> = (0..=n).map(|i| index[&(i, i)]).collect();
        let mut compose = BTreeMap::new();
        for (&(i, j), &f) in &index {
            for (&(j2, k), &g) in &index {
                if j == j2 {
                    compose.insert((g, f), index[&(i, k)]);
                }
            }
        }
        FinCategory::new(format!("linear({n})"), objects, arrows, identities, compose)
            .expect("chains are categories")
    }

    /// The walking arrow: two objects, one non-identity arrow between them.
    pub fn interval() -> Self {
        FinCategory::new(
            "interval",
            vec!["x".into(), "y".into()],
            vec![
                Arrow { name: "id_x".into(), src: 0, tgt: 0 },
                Arrow { name: "id_y".into(), src: 1, tgt: 1 },
                Arrow { name: "f".into(), src: 0, tgt: 1 },
            ],
            vec![0, 1],
            BTreeMap::from([((0, 0), 0), ((1, 1), 1), ((2, 0), 2), ((1, 2), 2)]),
        )
        .expect("interval is a category")
    }

    /// The walking isomorphism: two objects and a mutually inverse pair.
    pub fn bar_interval() -> Self {
        FinCategory::new(
            "bar_interval",
            vec!["x".into(), "y".into()],
            vec![
                Arrow { name: "id_x".into(), src: 0, tgt: 0 },
                Arrow { name: "id_y".into(), src: 1, tgt: 1 },
                Arrow { name: "u".into(), src: 0, tgt: 1 },
                Arrow { name: "v".into(), src: 1, tgt: 0 },
            ],
            vec![0, 1],
            BTreeMap::from([
                ((0, 0), 0),
                ((1, 1), 1),
                ((2, 0), 2),
                ((1, 2), 2),
                ((3, 1), 3),
                ((0, 3), 3),
                ((3, 2), 0),
                ((2, 3), 1),
            ]),
        )
        .expect("bar interval is a category")
    }

    /// The discrete category on `n` objects.
    pub fn discrete(n: usize) -> Self {
        let objects: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
        let arrows: Vec<Arrow> =
            (0..n).map(|i| Arrow { name: format!("id_d{i}"), src: i, tgt: i }).collect();
        let compose = (0..n).map(|i| ((i, i), i)).collect();
        FinCategory::new(format!("discrete({n})"), objects, arrows, (0..n).collect(), compose)
            .expect("discrete categories are categories")
    }

    /// The cyclic group of order two as a one-object category.
    pub fn z2() -> Self {
        FinCategory::new(
            "z2",
            vec!["x".into()],
            vec![
                Arrow { name: "id_x".into(), src: 0, tgt: 0 },
                Arrow { name: "t".into(), src: 0, tgt: 0 },
            ],
            vec![0],
            BTreeMap::from([((0, 0), 0), ((0, 1), 1), ((1, 0), 1), ((1, 1), 0)]),
        )
        .expect("z2 is a category")
    }

    /// Rename in place (used by generators; structure is unchanged).
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// A category with a distinguished class of weak equivalences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelCategory {
    category: FinCategory,
    /// Arrow indices of the weak equivalences.
    weq: std::collections::BTreeSet<usize>,
}

impl RelCategory {
    /// Validates that `weq` contains all identities and is closed under
    /// composition.
    pub fn new(category: FinCategory, weq: std::collections::BTreeSet<usize>) -> Result<Self> {
        for &w in &weq {
            if w >= category.arrow_count() {
                return Err(Error::invalid("relative category", "weq index out of range"));
            }
        }
        for x in 0..category.object_count() {
            if !weq.contains(&category.identity_of(x)) {
                return Err(Error::invalid(
                    "relative category",
                    format!("identity of object {x} is not a weak equivalence"),
                ));
            }
        }
        for &g in &weq {
            for &f in &weq {
                if category.arrows()[f].tgt == category.arrows()[g].src
                    && !weq.contains(&category.compose(g, f)?)
                {
                    return Err(Error::invalid(
                        "relative category",
                        "weak equivalences are not closed under composition",
                    ));
                }
            }
        }
        Ok(RelCategory { category, weq })
    }

    /// The minimal structure: weak equivalences are the isomorphisms.
    pub fn with_isos(category: FinCategory) -> Self {
        let weq = (0..category.arrow_count()).filter(|&f| category.is_invertible(f)).collect();
        RelCategory::new(category, weq).expect("isomorphisms are closed under composition")
    }

    pub fn category(&self) -> &FinCategory {
        &self.category
    }

    pub fn weq(&self) -> &std::collections::BTreeSet<usize> {
        &self.weq
    }

    pub fn is_weq(&self, f: usize) -> bool {
        self.weq.contains(&f)
    }
}
