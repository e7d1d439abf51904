//! Enumeration of all simplicial maps between two truncated complexes.
//!
//! The generic engine backtracks degree by degree: degenerate cells are
//! forced by naturality, nondegenerate cells draw candidates from a face
//! signature index on the target. When the target satisfies the strict
//! Segal condition, cells of degree two and up are determined by their
//! spine, so the search collapses to vertex and edge assignments plus a
//! triangle compatibility check; both routes produce identical output.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::segal::strict_segal_failure;
use super::{FinSSet, SSetMap};
use crate::error::{Error, Result};

type Pins = BTreeMap<(usize, usize), usize>;

/// All maps `x -> y`, sorted by their level tables.
pub fn mapset(x: &Arc<FinSSet>, y: &Arc<FinSSet>, budget: u64) -> Result<Vec<SSetMap>> {
    mapset_pinned(x, y, &[], budget)
}

/// All maps `x -> y` sending each pinned `(degree, cell)` to the given
/// target cell. Pins are closed downward along faces before the search;
/// contradictory pins yield an empty result.
pub fn mapset_pinned(
    x: &Arc<FinSSet>,
    y: &Arc<FinSSet>,
    pins: &[(usize, usize, usize)],
    budget: u64,
) -> Result<Vec<SSetMap>> {
    let d = x.truncation();
    if y.truncation() != d {
        return Err(Error::DomainMismatch(format!(
            "mapset between truncations {d} and {}",
            y.truncation()
        )));
    }
    for &(n, c, v) in pins {
        if n > d || c >= x.cells(n) || v >= y.cells(n) {
            return Err(Error::IndexOutOfRange(format!(
                "pin ({n}, {c}) -> {v} outside the complexes"
            )));
        }
    }
    let Some(closed) = close_pins(x, y, pins) else {
        return Ok(Vec::new());
    };
    let mut out = if d >= 2 && strict_segal_failure(y).is_none() {
        segal_path(x, y, &closed, budget)?
    } else {
        generic_path(x, y, &closed, budget)?
    };
    out.sort_by(|a, b| a.levels().cmp(b.levels()));
    Ok(out)
}

/// Propagate each pin to all its iterated faces; `None` on contradiction.
fn close_pins(x: &FinSSet, y: &FinSSet, pins: &[(usize, usize, usize)]) -> Option<Pins> {
    let mut closed: Pins = BTreeMap::new();
    let mut work: Vec<(usize, usize, usize)> = pins.to_vec();
    while let Some((n, c, v)) = work.pop() {
        match closed.get(&(n, c)) {
            Some(&old) if old != v => return None,
            Some(_) => continue,
            None => {
                closed.insert((n, c), v);
                if n >= 1 {
                    for i in 0..=n {
                        work.push((n - 1, x.face(n, i, c), y.face(n, i, v)));
                    }
                }
            }
        }
    }
    Some(closed)
}

/// Face signature index of the target: at each degree `n >= 1`, cells
/// keyed by their face tuple.
fn face_index(y: &FinSSet) -> Vec<BTreeMap<Vec<usize>, Vec<usize>>> {
    let d = y.truncation();
    let mut out = vec![BTreeMap::new(); d + 1];
    for n in 1..=d {
        for c in 0..y.cells(n) {
            let sig: Vec<usize> = (0..=n).map(|i| y.face(n, i, c)).collect();
            out[n].entry(sig).or_insert_with(Vec::new).push(c);
        }
    }
    out
}

fn generic_path(
    x: &Arc<FinSSet>,
    y: &Arc<FinSSet>,
    pins: &Pins,
    budget: u64,
) -> Result<Vec<SSetMap>> {
    let d = x.truncation();
    let order: Vec<(usize, usize)> =
        (0..=d).flat_map(|n| (0..x.cells(n)).map(move |c| (n, c))).collect();
    let witnesses: Vec<Vec<Option<(usize, usize)>>> = (0..=d)
        .map(|n| (0..x.cells(n)).map(|c| x.degeneracy_witness(n, c)).collect())
        .collect();
    let index = face_index(y);
    let mut phi: Vec<Vec<usize>> = (0..=d).map(|n| vec![usize::MAX; x.cells(n)]).collect();
    let mut out = Vec::new();
    let mut nodes = 0u64;
    rec_generic(
        x, y, pins, &order, &witnesses, &index, 0, &mut phi, &mut nodes, budget, &mut out,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn rec_generic(
    x: &Arc<FinSSet>,
    y: &Arc<FinSSet>,
    pins: &Pins,
    order: &[(usize, usize)],
    witnesses: &[Vec<Option<(usize, usize)>>],
    index: &[BTreeMap<Vec<usize>, Vec<usize>>],
    depth: usize,
    phi: &mut Vec<Vec<usize>>,
    nodes: &mut u64,
    budget: u64,
    out: &mut Vec<SSetMap>,
) -> Result<()> {
    if depth == order.len() {
        if let Ok(m) = SSetMap::new(Arc::clone(x), Arc::clone(y), phi.clone()) {
            out.push(m);
        }
        return Ok(());
    }
    let (n, c) = order[depth];
    let candidates: Vec<usize> = if let Some((i, cp)) = witnesses[n][c] {
        vec![y.degen(n - 1, i, phi[n - 1][cp])]
    } else if n == 0 {
        (0..y.cells(0)).collect()
    } else {
        let sig: Vec<usize> = (0..=n).map(|i| phi[n - 1][x.face(n, i, c)]).collect();
        index[n].get(&sig).cloned().unwrap_or_default()
    };
    let pin = pins.get(&(n, c)).copied();
    for cand in candidates {
        if let Some(p) = pin {
            if cand != p {
                continue;
            }
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded(format!(
                "map enumeration exceeded {budget} nodes"
            )));
        }
        phi[n][c] = cand;
        rec_generic(x, y, pins, order, witnesses, index, depth + 1, phi, nodes, budget, out)?;
        phi[n][c] = usize::MAX;
    }
    Ok(())
}

struct SegalSearch<'a> {
    x: &'a Arc<FinSSet>,
    y: &'a Arc<FinSSet>,
    pins: &'a Pins,
    /// degenerate-edge witnesses at degree 1.
    edge_witness: Vec<Option<(usize, usize)>>,
    /// target edges keyed by (d_0, d_1).
    edge_index: BTreeMap<(usize, usize), Vec<usize>>,
    /// triangles of the source: (e01, e12, e02) per 2-cell.
    triangles: Vec<(usize, usize, usize)>,
    /// triangles to re-check once a given edge is assigned.
    triggers: Vec<Vec<usize>>,
    /// target spine index per degree.
    spine_index: Vec<BTreeMap<Vec<usize>, usize>>,
    /// composite of a target 2-cell found by spine.
    budget: u64,
    nodes: u64,
    out: Vec<SSetMap>,
}

fn segal_path(
    x: &Arc<FinSSet>,
    y: &Arc<FinSSet>,
    pins: &Pins,
    budget: u64,
) -> Result<Vec<SSetMap>> {
    let d = x.truncation();
    let edge_witness: Vec<Option<(usize, usize)>> =
        (0..x.cells(1)).map(|c| x.degeneracy_witness(1, c)).collect();
    let mut edge_index: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in 0..y.cells(1) {
        edge_index.entry((y.face(1, 0, e), y.face(1, 1, e))).or_default().push(e);
    }
    let triangles: Vec<(usize, usize, usize)> = (0..x.cells(2))
        .map(|t| (x.edge(2, t, 0, 1), x.edge(2, t, 1, 2), x.edge(2, t, 0, 2)))
        .collect();
    let mut triggers = vec![Vec::new(); x.cells(1)];
    for (ti, &(a, b, c)) in triangles.iter().enumerate() {
        triggers[a.max(b).max(c)].push(ti);
    }
    let mut spine_index: Vec<BTreeMap<Vec<usize>, usize>> = vec![BTreeMap::new(); d + 1];
    for n in 2..=d {
        for c in 0..y.cells(n) {
            let sp: Vec<usize> = (0..n).map(|i| y.edge(n, c, i, i + 1)).collect();
            spine_index[n].insert(sp, c);
        }
    }
    let mut search = SegalSearch {
        x,
        y,
        pins,
        edge_witness,
        edge_index,
        triangles,
        triggers,
        spine_index,
        budget,
        nodes: 0,
        out: Vec::new(),
    };
    let mut phi0 = vec![usize::MAX; x.cells(0)];
    let mut phi1 = vec![usize::MAX; x.cells(1)];
    search.assign_vertex(0, &mut phi0, &mut phi1)?;
    Ok(search.out)
}

impl SegalSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "map enumeration exceeded {} nodes",
                self.budget
            )));
        }
        Ok(())
    }

    fn assign_vertex(
        &mut self,
        v: usize,
        phi0: &mut Vec<usize>,
        phi1: &mut Vec<usize>,
    ) -> Result<()> {
        if v == self.x.cells(0) {
            return self.assign_edge(0, phi0, phi1);
        }
        let candidates: Vec<usize> = match self.pins.get(&(0, v)) {
            Some(&p) => vec![p],
            None => (0..self.y.cells(0)).collect(),
        };
        for cand in candidates {
            self.tick()?;
            phi0[v] = cand;
            self.assign_vertex(v + 1, phi0, phi1)?;
            phi0[v] = usize::MAX;
        }
        Ok(())
    }

    fn assign_edge(
        &mut self,
        e: usize,
        phi0: &mut Vec<usize>,
        phi1: &mut Vec<usize>,
    ) -> Result<()> {
        if e == self.x.cells(1) {
            return self.extend(phi0, phi1);
        }
        let candidates: Vec<usize> = if let Some((i, cp)) = self.edge_witness[e] {
            debug_assert_eq!(i, 0);
            vec![self.y.degen(0, i, phi0[cp])]
        } else {
            let key = (phi0[self.x.face(1, 0, e)], phi0[self.x.face(1, 1, e)]);
            self.edge_index.get(&key).cloned().unwrap_or_default()
        };
        let pin = self.pins.get(&(1, e)).copied();
        'cands: for cand in candidates {
            if let Some(p) = pin {
                if cand != p {
                    continue;
                }
            }
            self.tick()?;
            phi1[e] = cand;
            for &ti in &self.triggers[e] {
                let (a, b, c) = self.triangles[ti];
                let key = vec![phi1[a], phi1[b]];
                match self.spine_index[2].get(&key) {
                    Some(&tau) if self.y.face(2, 1, tau) == phi1[c] => {}
                    _ => {
                        phi1[e] = usize::MAX;
                        continue 'cands;
                    }
                }
            }
            self.assign_edge(e + 1, phi0, phi1)?;
            phi1[e] = usize::MAX;
        }
        Ok(())
    }

    /// Degrees two and up are spine-determined; missing spines kill the
    /// branch, and the final validation is the safety net.
    fn extend(&mut self, phi0: &[usize], phi1: &[usize]) -> Result<()> {
        let d = self.x.truncation();
        let mut phi: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
        phi.push(phi0.to_vec());
        phi.push(phi1.to_vec());
        for n in 2..=d {
            let mut level = Vec::with_capacity(self.x.cells(n));
            for c in 0..self.x.cells(n) {
                let sp: Vec<usize> =
                    (0..n).map(|i| phi[1][self.x.edge(n, c, i, i + 1)]).collect();
                let Some(&tau) = self.spine_index[n].get(&sp) else {
                    return Ok(());
                };
                if let Some(&p) = self.pins.get(&(n, c)) {
                    if p != tau {
                        return Ok(());
                    }
                }
                level.push(tau);
            }
            phi.push(level);
        }
        if let Ok(m) = SSetMap::new(Arc::clone(self.x), Arc::clone(self.y), phi) {
            self.out.push(m);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::sset::{discrete_sset, empty_sset, nerve, product, standard};

    #[test]
    fn frozen_map_counts() {
        let pt = standard(0, 2);
        let edge = standard(1, 2);
        let nothing = empty_sset(2);
        let ni = nerve(&FinCategory::interval(), 2);
        assert_eq!(mapset(&pt, &nothing, 10_000).unwrap().len(), 0);
        assert_eq!(mapset(&pt, &ni, 10_000).unwrap().len(), 2);
        assert_eq!(mapset(&edge, &ni, 10_000).unwrap().len(), 3);
        assert_eq!(mapset(&nothing, &ni, 10_000).unwrap().len(), 1);
    }

    #[test]
    fn maps_into_a_nerve_count_functors() {
        // maps from the nerve of a category into the nerve of another
        // correspond to functors; spot-check against the functor search
        let a = FinCategory::bar_interval();
        let b = FinCategory::z2();
        let na = nerve(&a, 3);
        let nb = nerve(&b, 3);
        let via_sset = mapset(&na, &nb, 1_000_000).unwrap();
        let via_cat = crate::fincat::enumerate_functors(&a, &b, 1_000_000).unwrap();
        assert_eq!(via_sset.len(), via_cat.len());
    }

    #[test]
    fn engines_agree_after_cell_deletion() {
        // deleting a degenerate filler cascades down to the arrow beneath it,
        // leaving the discrete nerve on two objects
        let ni = nerve(&FinCategory::interval(), 2);
        let broken = crate::sset::delete_cell_upward(&ni, 2, ni.cell_by_name(2, "f|id_y").unwrap())
            .unwrap();
        assert_eq!((broken.cells(0), broken.cells(1), broken.cells(2)), (2, 2, 2));
        let edge = standard(1, 2);
        let generic = generic_path(&edge, &broken, &BTreeMap::new(), 1_000_000).unwrap();
        let mut sorted = generic;
        sorted.sort_by(|a, b| a.levels().cmp(b.levels()));
        let public = mapset(&edge, &broken, 1_000_000).unwrap();
        assert_eq!(
            sorted.iter().map(|m| m.levels().to_vec()).collect::<Vec<_>>(),
            public.iter().map(|m| m.levels().to_vec()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn engines_agree_on_a_segal_target() {
        let edge = standard(1, 2);
        let nz = nerve(&FinCategory::z2(), 2);
        let fast = mapset(&edge, &nz, 1_000_000).unwrap();
        let slow = {
            let mut maps = generic_path(&edge, &nz, &BTreeMap::new(), 1_000_000).unwrap();
            maps.sort_by(|a, b| a.levels().cmp(b.levels()));
            maps
        };
        assert_eq!(fast.len(), slow.len());
        for (f, s) in fast.iter().zip(&slow) {
            assert_eq!(f.levels(), s.levels());
        }
    }

    #[test]
    fn pins_cut_the_mapset_down() {
        let edge = standard(1, 2);
        let ni = nerve(&FinCategory::interval(), 2);
        let all = mapset(&edge, &ni, 10_000).unwrap();
        assert_eq!(all.len(), 3);
        // pin the source vertex of the edge to x: leaves id_x image and f
        let pinned = mapset_pinned(&edge, &ni, &[(0, 0, 0)], 10_000).unwrap();
        assert_eq!(pinned.len(), 2);
        for m in &pinned {
            assert_eq!(m.apply(0, 0), 0);
        }
        // pinning the edge to id_y forces vertex 0 to y, contradicting the
        // explicit vertex pin: empty result, no error
        let idy = ni.cell_by_name(1, "id_y").unwrap();
        let none = mapset_pinned(&edge, &ni, &[(0, 0, 0), (1, 1, idy)], 10_000).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn budget_stops_the_search() {
        let three = discrete_sset(&["a".into(), "b".into(), "c".into()], 2);
        let big = discrete_sset(
            &(0..6).map(|i| format!("v{i}")).collect::<Vec<_>>(),
            2,
        );
        let err = mapset(&three, &big, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
        let ok = mapset(&three, &big, 100_000).unwrap();
        assert_eq!(ok.len(), 216);
    }

    #[test]
    fn product_mapping_counts_multiply_for_discrete_targets() {
        let pt = standard(0, 2);
        let two = discrete_sset(&["a".into(), "b".into()], 2);
        let (tt, _, _) = product(&two, &two).unwrap();
        assert_eq!(mapset(&pt, &tt, 10_000).unwrap().len(), 4);
    }
}
