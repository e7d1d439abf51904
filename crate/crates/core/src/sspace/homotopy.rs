//! The homotopy category of a simplicial space, the invertible part of its
//! edge level, and the completeness and locality checks built on them.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::fincat::{Arrow, FinCategory, Functor};
use crate::simplex::SimplexMap;
use crate::sset::{fundamental_category, pi0, pi0_map, subcomplex};

use super::SimplicialSpace;

/// The homotopy category of a space: objects are the vertices of level 0,
/// arrows are the components of the strict endpoint fibers of level 1,
/// composition is read off the vertices of level 2.
#[derive(Clone, Debug)]
pub struct HomotopyCat {
    pub category: FinCategory,
    /// A representative level-1 vertex for each arrow.
    pub arrow_vertex: Vec<usize>,
    /// The component of each arrow inside the whole edge level.
    pub arrow_component: Vec<usize>,
}

pub fn homotopy_cat(x: &SimplicialSpace) -> Result<HomotopyCat> {
    if x.outer_truncation() < 2 {
        return Err(Error::Invalid {
            kind: "sspace",
            detail: format!(
                "the homotopy category needs outer truncation >= 2, found {}",
                x.outer_truncation()
            ),
        });
    }
    let l0 = x.level(0);
    let l1 = x.level(1);
    let inner = x.inner_truncation();
    let nobj = l0.cells(0);
    let src_of = x.outer_face(1, 1);
    let tgt_of = x.outer_face(1, 0);
    let p1 = pi0(l1);

    let objects: Vec<String> = (0..nobj).map(|v| l0.cell_name(0, v).to_string()).collect();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut arrow_vertex: Vec<usize> = Vec::new();
    let mut arrow_component: Vec<usize> = Vec::new();
    // Every level-1 vertex lies in exactly one strict fiber, so a single
    // table resolves vertices to arrows.
    let mut arrow_of = vec![usize::MAX; l1.cells(0)];
    for a in 0..nobj {
        for b in 0..nobj {
            let keep: Vec<Vec<bool>> = (0..=inner)
                .map(|j| {
                    let sa = l0.degenerate_vertex(a, j);
                    let sb = l0.degenerate_vertex(b, j);
                    (0..l1.cells(j))
                        .map(|c| src_of.apply(j, c) == sa && tgt_of.apply(j, c) == sb)
                        .collect()
                })
                .collect();
            let (fiber, inc) = subcomplex(l1, &keep)?;
            let pf = pi0(&fiber);
            let base = arrows.len();
            for k in 0..pf.count {
                let rep = (0..fiber.cells(0))
                    .find(|&fv| pf.class_of[fv] == k)
                    .expect("components are inhabited");
                arrows.push(Arrow {
                    name: format!("h{}:{}>{}", arrows.len(), objects[a], objects[b]),
                    src: a,
                    tgt: b,
                });
                arrow_vertex.push(inc.apply(0, rep));
                arrow_component.push(p1.class_of[inc.apply(0, rep)]);
            }
            for fv in 0..fiber.cells(0) {
                arrow_of[inc.apply(0, fv)] = base + pf.class_of[fv];
            }
        }
    }
    let identities: Vec<usize> =
        (0..nobj).map(|v| arrow_of[x.outer_degen(0, 0).apply(0, v)]).collect();

    let act01 = x.outer_action(&SimplexMap::se(0, 2)?)?;
    let act12 = x.outer_action(&SimplexMap::se(1, 2)?)?;
    let act02 = x.outer_face(2, 1);
    let mut candidates: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
    for t in 0..x.level(2).cells(0) {
        let f = arrow_of[act01.apply(0, t)];
        let g = arrow_of[act12.apply(0, t)];
        let gf = arrow_of[act02.apply(0, t)];
        candidates.entry((g, f)).or_default().insert(gf);
    }
    let mut compose = BTreeMap::new();
    for (gi, g) in arrows.iter().enumerate() {
        for (fi, f) in arrows.iter().enumerate() {
            if f.tgt != g.src {
                continue;
            }
            match candidates.get(&(gi, fi)) {
                Some(set) if set.len() == 1 => {
                    compose.insert((gi, fi), *set.iter().next().expect("nonempty"));
                }
                Some(_) => {
                    return Err(Error::IllDefinedComposition(format!(
                        "ambiguous composites of {} with {}",
                        f.name, g.name
                    )))
                }
                None => {
                    return Err(Error::IllDefinedComposition(format!(
                        "no 2-cell composes {} with {}",
                        f.name, g.name
                    )))
                }
            }
        }
    }
    let category = FinCategory::new("ho", objects, arrows, identities, compose).map_err(|e| {
        Error::IllDefinedComposition(format!("fiber composition violates the category laws: {e}"))
    })?;
    Ok(HomotopyCat { category, arrow_vertex, arrow_component })
}

/// The invertible part of the edge level, component by component.
#[derive(Clone, Debug)]
pub struct HoEquiv {
    pub homotopy: HomotopyCat,
    /// Per component of the edge level: every arrow it carries is
    /// invertible in the homotopy category.
    pub component_invertible: Vec<bool>,
}

impl HoEquiv {
    pub fn component_count(&self) -> usize {
        self.component_invertible.len()
    }

    pub fn invertible_count(&self) -> usize {
        self.component_invertible.iter().filter(|&&b| b).count()
    }
}

pub fn hoequiv(x: &SimplicialSpace) -> Result<HoEquiv> {
    let homotopy = homotopy_cat(x)?;
    let p1 = pi0(x.level(1));
    let mut component_invertible = vec![true; p1.count];
    for idx in 0..homotopy.category.arrow_count() {
        if !homotopy.category.is_invertible(idx) {
            component_invertible[homotopy.arrow_component[idx]] = false;
        }
    }
    Ok(HoEquiv { homotopy, component_invertible })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletenessMode {
    /// Compare components of the vertex level with the invertible
    /// components of the edge level.
    Pi0,
    /// Require the degeneracy to induce an equivalence between the
    /// fundamental categories of the vertex level and of the invertible
    /// part; both must be strict Segal complexes.
    NerveEquivalence,
}

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub complete: bool,
    pub object_components: usize,
    pub invertible_components: usize,
    pub degeneracy_injective: bool,
    pub image_is_the_invertible_part: bool,
    /// Nerve-equivalence mode only: the induced functor between the
    /// fundamental categories is an equivalence.
    pub functor_is_equivalence: Option<bool>,
}

pub fn is_complete(x: &SimplicialSpace, mode: CompletenessMode) -> Result<CompletenessReport> {
    let he = hoequiv(x)?;
    let cls = pi0_map(x.outer_degen(0, 0));
    let invertible: BTreeSet<usize> = he
        .component_invertible
        .iter()
        .enumerate()
        .filter_map(|(k, &b)| b.then_some(k))
        .collect();
    let mut seen = BTreeSet::new();
    let mut degeneracy_injective = true;
    for &k in &cls {
        if !seen.insert(k) {
            degeneracy_injective = false;
        }
    }
    let image_is_the_invertible_part = seen == invertible;
    let mut report = CompletenessReport {
        complete: degeneracy_injective && image_is_the_invertible_part,
        object_components: cls.len(),
        invertible_components: invertible.len(),
        degeneracy_injective,
        image_is_the_invertible_part,
        functor_is_equivalence: None,
    };
    if mode == CompletenessMode::NerveEquivalence {
        let l0 = x.level(0);
        let l1 = x.level(1);
        let inner = x.inner_truncation();
        let p1 = pi0(l1);
        let keep: Vec<Vec<bool>> = (0..=inner)
            .map(|j| {
                (0..l1.cells(j))
                    .map(|c| he.component_invertible[p1.class_of[l1.vertex(j, c, 0)]])
                    .collect()
            })
            .collect();
        let (h, hinc) = subcomplex(l1, &keep)?;
        let c0 = fundamental_category(l0).map_err(|e| {
            Error::OracleUnavailable(format!("the vertex level is not a nerve: {e}"))
        })?;
        let ch = fundamental_category(&h).map_err(|e| {
            Error::OracleUnavailable(format!("the invertible part is not a nerve: {e}"))
        })?;
        let s0 = x.outer_degen(0, 0);
        let mut back0 = vec![None; l1.cells(0)];
        for v in 0..h.cells(0) {
            back0[hinc.apply(0, v)] = Some(v);
        }
        let mut back1 = vec![None; l1.cells(1)];
        for e in 0..h.cells(1) {
            back1[hinc.apply(1, e)] = Some(e);
        }
        let object_map: Option<Vec<usize>> =
            (0..l0.cells(0)).map(|v| back0[s0.apply(0, v)]).collect();
        let arrow_map: Option<Vec<usize>> =
            (0..l0.cells(1)).map(|e| back1[s0.apply(1, e)]).collect();
        let eq = match (object_map, arrow_map) {
            (Some(object_map), Some(arrow_map)) => {
                let fun = Functor::new(&c0, &ch, object_map, arrow_map).map_err(|e| {
                    Error::Invalid {
                        kind: "sspace",
                        detail: format!("the degeneracy does not induce a functor: {e}"),
                    }
                })?;
                fun.is_fully_faithful(&c0, &ch) && fun.is_essentially_surjective(&c0, &ch)
            }
            // The degeneracy does not even land in the invertible part.
            _ => false,
        };
        report.functor_is_equivalence = Some(eq);
        report.complete = report.complete && eq;
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ZeroLocalReport {
    pub local: bool,
    pub degrees: Vec<(usize, bool)>,
}

/// Whether the composite degeneracy `X_0 -> X_n` is an equivalence at every
/// outer degree, in the sense fixed by `mode`.
pub fn is_zero_local(x: &SimplicialSpace, mode: CompletenessMode) -> Result<ZeroLocalReport> {
    let mut degrees = Vec::new();
    for n in 1..=x.outer_truncation() {
        let collapse = SimplexMap::new(n, 0, vec![0; n + 1])?;
        let act = x.outer_action(&collapse)?;
        let ok = match mode {
            CompletenessMode::Pi0 => {
                let m = pi0_map(&act);
                let pn = pi0(x.level(n));
                let mut seen = BTreeSet::new();
                m.iter().all(|&k| seen.insert(k)) && m.len() == pn.count
            }
            CompletenessMode::NerveEquivalence => {
                let c0 = fundamental_category(x.level(0)).map_err(|e| {
                    Error::OracleUnavailable(format!("the vertex level is not a nerve: {e}"))
                })?;
                let cn = fundamental_category(x.level(n)).map_err(|e| {
                    Error::OracleUnavailable(format!("level {n} is not a nerve: {e}"))
                })?;
                let fun =
                    Functor::new(&c0, &cn, act.levels()[0].clone(), act.levels()[1].clone())
                        .map_err(|e| Error::Invalid {
                            kind: "sspace",
                            detail: format!("the degeneracy does not induce a functor: {e}"),
                        })?;
                fun.is_fully_faithful(&c0, &cn) && fun.is_essentially_surjective(&c0, &cn)
            }
        };
        degrees.push((n, ok));
    }
    Ok(ZeroLocalReport { local: degrees.iter().all(|&(_, ok)| ok), degrees })
}
