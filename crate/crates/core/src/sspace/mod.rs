//! Truncated simplicial objects in truncated simplicial sets: a row of
//! levels joined by outer face and degeneracy maps that satisfy the
//! simplicial identities. The inner direction carries the homotopy, the
//! outer direction carries the composition data.

mod classify;
mod homotopy;
mod segal;

pub use classify::classification_diagram;
pub use homotopy::{
    hoequiv, homotopy_cat, is_complete, is_zero_local, CompletenessMode, CompletenessReport,
    HoEquiv, HomotopyCat, ZeroLocalReport,
};
pub use segal::{is_segal, SegalMode, SegalReport};

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::simplex::{enumerate_maps, SimplexMap};
use crate::sset::{discrete_sset, FinSSet, SSetMap};

/// A simplicial space truncated in both directions. Level `n` is a
/// [`FinSSet`]; the outer maps are levelwise simplicial maps indexed like
/// the face and degeneracy tables of a single complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSpace {
    outer_truncation: usize,
    levels: Vec<Arc<FinSSet>>,
    /// `outer_faces[n][i] : X_n -> X_{n-1}` for `1 <= n`, `i <= n`.
    outer_faces: Vec<Vec<SSetMap>>,
    /// `outer_degens[n][i] : X_n -> X_{n+1}` for `n < N`, `i <= n`.
    outer_degens: Vec<Vec<SSetMap>>,
}

fn same_map(a: &SSetMap, b: &SSetMap) -> bool {
    a.levels() == b.levels()
}

impl SimplicialSpace {
    pub fn new(
        levels: Vec<Arc<FinSSet>>,
        outer_faces: Vec<Vec<SSetMap>>,
        outer_degens: Vec<Vec<SSetMap>>,
    ) -> Result<Self> {
        let invalid = |detail: String| Error::Invalid { kind: "sspace", detail };
        if levels.is_empty() {
            return Err(invalid("at least one level is required".into()));
        }
        let n_outer = levels.len() - 1;
        let inner = levels[0].truncation();
        if levels.iter().any(|l| l.truncation() != inner) {
            return Err(Error::DomainMismatch("levels have mixed inner truncations".into()));
        }
        if outer_faces.len() != n_outer + 1 || outer_degens.len() != n_outer + 1 {
            return Err(invalid(format!(
                "expected {} outer map tables, found {}/{}",
                n_outer + 1,
                outer_faces.len(),
                outer_degens.len()
            )));
        }
        if !outer_faces[0].is_empty() {
            return Err(invalid("level 0 has no outer faces".into()));
        }
        for n in 1..=n_outer {
            if outer_faces[n].len() != n + 1 {
                return Err(invalid(format!(
                    "level {n} needs {} outer faces, found {}",
                    n + 1,
                    outer_faces[n].len()
                )));
            }
            for (i, m) in outer_faces[n].iter().enumerate() {
                if m.source().as_ref() != levels[n].as_ref()
                    || m.target().as_ref() != levels[n - 1].as_ref()
                {
                    return Err(Error::DomainMismatch(format!(
                        "outer face {i} at level {n} has the wrong endpoints"
                    )));
                }
            }
        }
        for n in 0..=n_outer {
            let expected = if n == n_outer { 0 } else { n + 1 };
            if outer_degens[n].len() != expected {
                return Err(invalid(format!(
                    "level {n} needs {expected} outer degeneracies, found {}",
                    outer_degens[n].len()
                )));
            }
            for (i, m) in outer_degens[n].iter().enumerate() {
                if m.source().as_ref() != levels[n].as_ref()
                    || m.target().as_ref() != levels[n + 1].as_ref()
                {
                    return Err(Error::DomainMismatch(format!(
                        "outer degeneracy {i} at level {n} has the wrong endpoints"
                    )));
                }
            }
        }
        let space = SimplicialSpace { outer_truncation: n_outer, levels, outer_faces, outer_degens };
        space.check_outer_identities()?;
        Ok(space)
    }

    fn check_outer_identities(&self) -> Result<()> {
        let invalid = |detail: String| Error::Invalid { kind: "sspace", detail };
        let d = self.outer_truncation;
        for n in 2..=d {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = self.outer_faces[n][j].then(&self.outer_faces[n - 1][i])?;
                    let rhs = self.outer_faces[n][i].then(&self.outer_faces[n - 1][j - 1])?;
                    if !same_map(&lhs, &rhs) {
                        return Err(invalid(format!("outer identity d{i} d{j} fails at level {n}")));
                    }
                }
            }
        }
        for n in 0..=d {
            if n + 2 > d {
                break;
            }
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = self.outer_degens[n][j].then(&self.outer_degens[n + 1][i])?;
                    let rhs = self.outer_degens[n][i].then(&self.outer_degens[n + 1][j + 1])?;
                    if !same_map(&lhs, &rhs) {
                        return Err(invalid(format!("outer identity s{i} s{j} fails at level {n}")));
                    }
                }
            }
        }
        for n in 0..d {
            let ident = SSetMap::identity(self.levels[n].clone());
            for j in 0..=n {
                for i in 0..=(n + 1) {
                    let got = self.outer_degens[n][j].then(&self.outer_faces[n + 1][i])?;
                    if i == j || i == j + 1 {
                        if !same_map(&got, &ident) {
                            return Err(invalid(format!(
                                "outer d{i} s{j} is not the identity at level {n}"
                            )));
                        }
                    } else if i < j {
                        if n == 0 {
                            continue;
                        }
                        let want = self.outer_faces[n][i].then(&self.outer_degens[n - 1][j - 1])?;
                        if !same_map(&got, &want) {
                            return Err(invalid(format!("outer d{i} s{j} fails at level {n}")));
                        }
                    } else {
                        if n == 0 {
                            continue;
                        }
                        let want = self.outer_faces[n][i - 1].then(&self.outer_degens[n - 1][j])?;
                        if !same_map(&got, &want) {
                            return Err(invalid(format!("outer d{i} s{j} fails at level {n}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn outer_truncation(&self) -> usize {
        self.outer_truncation
    }

    pub fn inner_truncation(&self) -> usize {
        self.levels[0].truncation()
    }

    pub fn level(&self, n: usize) -> &Arc<FinSSet> {
        &self.levels[n]
    }

    pub fn outer_face(&self, n: usize, i: usize) -> &SSetMap {
        &self.outer_faces[n][i]
    }

    pub fn outer_degen(&self, n: usize, i: usize) -> &SSetMap {
        &self.outer_degens[n][i]
    }

    /// The structure map `X(u) : X_m -> X_k` of a simplex morphism
    /// `u : [k] -> [m]`, assembled from the generating faces and
    /// degeneracies via the epi-mono factorization.
    pub fn outer_action(&self, u: &SimplexMap) -> Result<SSetMap> {
        if u.codomain() > self.outer_truncation || u.domain() > self.outer_truncation {
            return Err(Error::IndexOutOfRange(format!(
                "map {u} exceeds the outer truncation {}",
                self.outer_truncation
            )));
        }
        let mut acc = SSetMap::identity(self.levels[u.codomain()].clone());
        for g in u.factor().iter().rev() {
            let step = if g.codomain() == g.domain() + 1 {
                let missing = (0..=g.codomain())
                    .find(|v| !g.images().contains(v))
                    .expect("a coface misses exactly one value");
                &self.outer_faces[g.codomain()][missing]
            } else {
                let t = (0..g.domain())
                    .find(|&t| g.images()[t] == g.images()[t + 1])
                    .expect("a codegeneracy repeats exactly one value");
                &self.outer_degens[g.codomain()][g.images()[t]]
            };
            acc = acc.then(step)?;
        }
        Ok(acc)
    }
}

/// The levelwise-discrete space on a single complex: level `n` is the
/// discrete complex on the degree-`n` cells, the outer maps are the face
/// and degeneracy tables of the source.
pub fn discrete_levels(k: &Arc<FinSSet>) -> SimplicialSpace {
    let d = k.truncation();
    let levels: Vec<Arc<FinSSet>> = (0..=d).map(|n| discrete_sset(k.names_at(n), d)).collect();
    let mut outer_faces: Vec<Vec<SSetMap>> = vec![Vec::new(); d + 1];
    for n in 1..=d {
        outer_faces[n] = (0..=n)
            .map(|i| {
                let row: Vec<usize> = (0..k.cells(n)).map(|c| k.face(n, i, c)).collect();
                SSetMap::new(levels[n].clone(), levels[n - 1].clone(), vec![row; d + 1])
                    .expect("face rows of a valid complex are simplicial")
            })
            .collect();
    }
    let mut outer_degens: Vec<Vec<SSetMap>> = vec![Vec::new(); d + 1];
    for n in 0..d {
        outer_degens[n] = (0..=n)
            .map(|i| {
                let row: Vec<usize> = (0..k.cells(n)).map(|c| k.degen(n, i, c)).collect();
                SSetMap::new(levels[n].clone(), levels[n + 1].clone(), vec![row; d + 1])
                    .expect("degeneracy rows of a valid complex are simplicial")
            })
            .collect();
    }
    SimplicialSpace::new(levels, outer_faces, outer_degens)
        .expect("outer identities are inherited from the source complex")
}

/// The constant space on a complex, with identity outer maps.
pub fn constant_levels(k: &Arc<FinSSet>, outer: usize) -> SimplicialSpace {
    let levels = vec![k.clone(); outer + 1];
    let mut outer_faces: Vec<Vec<SSetMap>> = vec![Vec::new(); outer + 1];
    for n in 1..=outer {
        outer_faces[n] = (0..=n).map(|_| SSetMap::identity(k.clone())).collect();
    }
    let mut outer_degens: Vec<Vec<SSetMap>> = vec![Vec::new(); outer + 1];
    for n in 0..outer {
        outer_degens[n] = (0..=n).map(|_| SSetMap::identity(k.clone())).collect();
    }
    SimplicialSpace::new(levels, outer_faces, outer_degens)
        .expect("identity maps satisfy the simplicial identities")
}

/// The representable space of `[n]`: level `k` is discrete on the monotone
/// maps `[k] -> [n]`, and the outer maps precompose with cofaces and
/// codegeneracies.
pub fn h_space(n: usize, outer: usize, inner: usize) -> SimplicialSpace {
    let cells: Vec<Vec<SimplexMap>> = (0..=outer)
        .map(|k| enumerate_maps(k, n, u64::MAX).expect("the budget is unlimited"))
        .collect();
    let index: Vec<BTreeMap<Vec<usize>, usize>> = cells
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, m)| (m.images().to_vec(), i)).collect())
        .collect();
    let names: Vec<Vec<String>> = cells
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|m| {
                    m.images().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
                })
                .collect()
        })
        .collect();
    let levels: Vec<Arc<FinSSet>> = names.iter().map(|ns| discrete_sset(ns, inner)).collect();
    let mut outer_faces: Vec<Vec<SSetMap>> = vec![Vec::new(); outer + 1];
    for k in 1..=outer {
        outer_faces[k] = (0..=k)
            .map(|i| {
                let delta = SimplexMap::coface(k - 1, i).expect("index in range");
                let row: Vec<usize> = cells[k]
                    .iter()
                    .map(|f| index[k - 1][delta.then(f).expect("composable").images()])
                    .collect();
                SSetMap::new(levels[k].clone(), levels[k - 1].clone(), vec![row; inner + 1])
                    .expect("precomposition rows are simplicial")
            })
            .collect();
    }
    let mut outer_degens: Vec<Vec<SSetMap>> = vec![Vec::new(); outer + 1];
    for k in 0..outer {
        outer_degens[k] = (0..=k)
            .map(|i| {
                let sigma = SimplexMap::codegeneracy(k, i).expect("index in range");
                let row: Vec<usize> = cells[k]
                    .iter()
                    .map(|f| index[k + 1][sigma.then(f).expect("composable").images()])
                    .collect();
                SSetMap::new(levels[k].clone(), levels[k + 1].clone(), vec![row; inner + 1])
                    .expect("precomposition rows are simplicial")
            })
            .collect();
    }
    SimplicialSpace::new(levels, outer_faces, outer_degens)
        .expect("precomposition satisfies the simplicial identities")
}

/// A levelwise simplicial map commuting with the outer structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    levels: Vec<SSetMap>,
}

impl SpaceMap {
    pub fn new(x: &SimplicialSpace, y: &SimplicialSpace, levels: Vec<SSetMap>) -> Result<Self> {
        if x.outer_truncation() != y.outer_truncation()
            || x.inner_truncation() != y.inner_truncation()
        {
            return Err(Error::DomainMismatch("spaces have different truncations".into()));
        }
        let invalid = |detail: String| Error::Invalid { kind: "space-map", detail };
        if levels.len() != x.outer_truncation() + 1 {
            return Err(invalid(format!(
                "expected {} level maps, found {}",
                x.outer_truncation() + 1,
                levels.len()
            )));
        }
        for (n, m) in levels.iter().enumerate() {
            if m.source().as_ref() != x.level(n).as_ref()
                || m.target().as_ref() != y.level(n).as_ref()
            {
                return Err(Error::DomainMismatch(format!(
                    "level {n} map has the wrong endpoints"
                )));
            }
        }
        for n in 1..=x.outer_truncation() {
            for i in 0..=n {
                let lhs = x.outer_face(n, i).then(&levels[n - 1])?;
                let rhs = levels[n].then(y.outer_face(n, i))?;
                if !same_map(&lhs, &rhs) {
                    return Err(invalid(format!("outer face {i} at level {n} does not commute")));
                }
            }
        }
        for n in 0..x.outer_truncation() {
            for i in 0..=n {
                let lhs = x.outer_degen(n, i).then(&levels[n + 1])?;
                let rhs = levels[n].then(y.outer_degen(n, i))?;
                if !same_map(&lhs, &rhs) {
                    return Err(invalid(format!(
                        "outer degeneracy {i} at level {n} does not commute"
                    )));
                }
            }
        }
        Ok(SpaceMap { levels })
    }

    pub fn level(&self, n: usize) -> &SSetMap {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[SSetMap] {
        &self.levels
    }
}

struct MapSearch<'a> {
    x: &'a SimplicialSpace,
    y: &'a SimplicialSpace,
    order: Vec<(usize, usize, usize)>,
    /// Outer-degeneracy witness per slot: `(i, c)` when the cell is
    /// `s_i(c)` from the level below.
    outer_witness: Vec<Vec<Vec<Option<(usize, usize)>>>>,
    assign: Vec<Vec<Vec<usize>>>,
    nodes: u64,
    budget: u64,
    out: Vec<SpaceMap>,
}

impl MapSearch<'_> {
    fn rec(&mut self, slot: usize) -> Result<()> {
        if slot == self.order.len() {
            self.finish();
            return Ok(());
        }
        let (n, j, c) = self.order[slot];
        let xl = self.x.level(n);
        let yl = self.y.level(n);
        let mut cands: Vec<usize> = if let Some((i, w)) = xl.degeneracy_witness(j, c) {
            vec![yl.degen(j - 1, i, self.assign[n][j - 1][w])]
        } else if let Some((i, w)) = self.outer_witness[n][j][c] {
            vec![self.y.outer_degen(n - 1, i).apply(j, self.assign[n - 1][j][w])]
        } else {
            (0..yl.cells(j)).collect()
        };
        if j >= 1 {
            cands.retain(|&v| {
                (0..=j).all(|i| yl.face(j, i, v) == self.assign[n][j - 1][xl.face(j, i, c)])
            });
        }
        if n >= 1 {
            cands.retain(|&v| {
                (0..=n).all(|i| {
                    self.y.outer_face(n, i).apply(j, v)
                        == self.assign[n - 1][j][self.x.outer_face(n, i).apply(j, c)]
                })
            });
        }
        for v in cands {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(format!(
                    "space map search visited more than {} nodes",
                    self.budget
                )));
            }
            self.assign[n][j][c] = v;
            self.rec(slot + 1)?;
        }
        self.assign[n][j][c] = usize::MAX;
        Ok(())
    }

    fn finish(&mut self) {
        let mut maps = Vec::with_capacity(self.assign.len());
        for n in 0..self.assign.len() {
            match SSetMap::new(
                self.x.level(n).clone(),
                self.y.level(n).clone(),
                self.assign[n].clone(),
            ) {
                Ok(m) => maps.push(m),
                Err(_) => return,
            }
        }
        if let Ok(sm) = SpaceMap::new(self.x, self.y, maps) {
            self.out.push(sm);
        }
    }
}

/// All space maps from `x` to `y`, in lexicographic order of their cell
/// assignments. The search is cut off once `budget` candidate placements
/// have been tried.
pub fn space_maps(x: &SimplicialSpace, y: &SimplicialSpace, budget: u64) -> Result<Vec<SpaceMap>> {
    if x.outer_truncation() != y.outer_truncation() || x.inner_truncation() != y.inner_truncation()
    {
        return Err(Error::DomainMismatch("spaces have different truncations".into()));
    }
    let n_outer = x.outer_truncation();
    let inner = x.inner_truncation();
    let mut order = Vec::new();
    let mut assign = Vec::with_capacity(n_outer + 1);
    let mut outer_witness: Vec<Vec<Vec<Option<(usize, usize)>>>> = Vec::with_capacity(n_outer + 1);
    for n in 0..=n_outer {
        let mut level_assign = Vec::with_capacity(inner + 1);
        let mut level_witness = Vec::with_capacity(inner + 1);
        for j in 0..=inner {
            for c in 0..x.level(n).cells(j) {
                order.push((n, j, c));
            }
            level_assign.push(vec![usize::MAX; x.level(n).cells(j)]);
            level_witness.push(vec![None; x.level(n).cells(j)]);
        }
        assign.push(level_assign);
        outer_witness.push(level_witness);
    }
    for n in 1..=n_outer {
        for i in 0..n {
            let m = x.outer_degen(n - 1, i);
            for j in 0..=inner {
                for c in 0..x.level(n - 1).cells(j) {
                    let img = m.apply(j, c);
                    if outer_witness[n][j][img].is_none() {
                        outer_witness[n][j][img] = Some((i, c));
                    }
                }
            }
        }
    }
    let mut search =
        MapSearch { x, y, order, outer_witness, assign, nodes: 0, budget, out: Vec::new() };
    search.rec(0)?;
    Ok(search.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::simplex::hom_count;
    use crate::sset::nerve;

    #[test]
    fn representable_levels_count_monotone_maps() {
        let x = h_space(1, 3, 2);
        assert_eq!(x.outer_truncation(), 3);
        assert_eq!(x.inner_truncation(), 2);
        let counts: Vec<usize> = (0..=3).map(|k| x.level(k).cells(0)).collect();
        assert_eq!(counts, vec![2, 3, 4, 5]);
        for k in 0..=3usize {
            assert_eq!(counts[k] as u128, hom_count(k, 1));
        }
    }

    #[test]
    fn representable_action_is_precomposition() {
        let x = h_space(2, 3, 1);
        for dom in 0..=3usize {
            let maps_dom = enumerate_maps(dom, 2, u64::MAX).unwrap();
            for cod in 0..=3usize {
                for u in enumerate_maps(dom, cod, u64::MAX).unwrap() {
                    let act = x.outer_action(&u).unwrap();
                    for (pos, f) in enumerate_maps(cod, 2, u64::MAX).unwrap().iter().enumerate() {
                        let expect = u.then(f).unwrap();
                        let found = maps_dom.iter().position(|m| *m == expect).unwrap();
                        assert_eq!(act.apply(0, pos), found, "action of {u} at {f}");
                    }
                }
            }
        }
    }

    #[test]
    fn discrete_levels_reuse_the_source_structure() {
        let k = nerve(&FinCategory::linear(2), 2);
        let x = discrete_levels(&k);
        assert_eq!(x.outer_truncation(), 2);
        for n in 0..=2usize {
            assert_eq!(x.level(n).cells(0), k.cells(n));
        }
        for i in 0..=2usize {
            for c in 0..k.cells(2) {
                assert_eq!(x.outer_face(2, i).apply(0, c), k.face(2, i, c));
                assert_eq!(x.outer_face(2, i).apply(1, c), k.face(2, i, c));
            }
        }
        let ident = x.outer_action(&SimplexMap::identity(1)).unwrap();
        assert!(same_map(&ident, &SSetMap::identity(x.level(1).clone())));
    }

    #[test]
    fn constant_spaces_validate() {
        let k = nerve(&FinCategory::z2(), 2);
        let x = constant_levels(&k, 3);
        assert_eq!(x.outer_truncation(), 3);
        let act = x.outer_action(&SimplexMap::new(3, 0, vec![0; 4]).unwrap()).unwrap();
        assert!(same_map(&act, &SSetMap::identity(k)));
    }

    #[test]
    fn space_maps_between_representables_count_monotone_maps() {
        for (n, m) in [(1usize, 1usize), (1, 2), (2, 1)] {
            let x = h_space(n, 2, 2);
            let y = h_space(m, 2, 2);
            let maps = space_maps(&x, &y, 1_000_000).unwrap();
            assert_eq!(maps.len() as u128, hom_count(n, m), "maps h({n}) -> h({m})");
        }
    }

    #[test]
    fn mismatched_level_maps_are_rejected() {
        let x = h_space(1, 2, 2);
        let y = h_space(2, 2, 2);
        let bad = vec![
            SSetMap::identity(x.level(0).clone()),
            SSetMap::identity(x.level(1).clone()),
            SSetMap::identity(x.level(2).clone()),
        ];
        assert!(SpaceMap::new(&x, &y, bad).is_err());
    }

    #[test]
    fn tiny_budget_stops_the_search() {
        let x = h_space(2, 2, 2);
        let y = h_space(2, 2, 2);
        match space_maps(&x, &y, 3) {
            Err(Error::BudgetExceeded(_)) => {}
            other => panic!("expected a budget failure, got {other:?}"),
        }
    }
}
