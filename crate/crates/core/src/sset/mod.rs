//! Truncated finite simplicial sets: explicit cell tables with face and
//! degeneracy maps, validated against the simplicial identities as far as
//! the truncation allows.
//!
//! Cells at each degree are named; all structural data is index-based.
//! Everything downstream (maps, limits, quotients, mapping complexes)
//! treats a complex as immutable behind an `Arc`.

mod build;
mod colimits;
mod hom;
mod maps;
mod segal;

pub use build::{
    discrete_sset, empty_sset, nerve, nerve_map, objects_inclusion, standard, standard_map,
};
pub use colimits::{coequalizer, coproduct, pairing, product, product_map, pullback};
pub use hom::{internal_hom, InternalHom};
pub use maps::{mapset, mapset_pinned};
pub use segal::{
    delete_cell_upward, fundamental_category, is_strict_segal, nerve_iso, spine,
    strict_segal_failure, SegalFailure,
};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::simplex::SimplexMap;

/// A simplicial set truncated at degree `truncation`: cell names per degree,
/// plus face and degeneracy tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSSet {
    truncation: usize,
    /// `names[n][c]`: unique within each degree.
    names: Vec<Vec<String>>,
    /// `faces[n][i][c]` for `1 <= n <= truncation`, `0 <= i <= n`; `faces[0]` empty.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degens[n][i][c]` for `0 <= n < truncation`, `0 <= i <= n`; top degree empty.
    degens: Vec<Vec<Vec<usize>>>,
}

impl FinSSet {
    pub fn new(
        truncation: usize,
        names: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let x = FinSSet { truncation, names, faces, degens };
        x.validate()?;
        Ok(x)
    }

    fn validate(&self) -> Result<()> {
        let invalid = |detail: String| Error::Invalid { kind: "sset", detail };
        let d = self.truncation;
        if self.names.len() != d + 1 || self.faces.len() != d + 1 || self.degens.len() != d + 1 {
            return Err(invalid(format!(
                "expected {} degree tables, found {}/{}/{}",
                d + 1,
                self.names.len(),
                self.faces.len(),
                self.degens.len()
            )));
        }
        for n in 0..=d {
            let mut sorted: Vec<&str> = self.names[n].iter().map(|s| s.as_str()).collect();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != self.names[n].len() {
                return Err(invalid(format!("duplicate cell name at degree {n}")));
            }
        }
        if !self.faces[0].is_empty() {
            return Err(invalid("degree 0 has no face maps".into()));
        }
        for n in 1..=d {
            if self.faces[n].len() != n + 1 {
                return Err(invalid(format!(
                    "degree {n} needs {} face maps, found {}",
                    n + 1,
                    self.faces[n].len()
                )));
            }
            for (i, row) in self.faces[n].iter().enumerate() {
                if row.len() != self.names[n].len() {
                    return Err(invalid(format!("face {i} at degree {n} has wrong length")));
                }
                for (c, &img) in row.iter().enumerate() {
                    if img >= self.names[n - 1].len() {
                        return Err(Error::IndexOutOfRange(format!(
                            "face {i} of cell {c} at degree {n} points at {img}"
                        )));
                    }
                }
            }
        }
        for n in 0..=d {
            let expected = if n == d { 0 } else { n + 1 };
            if self.degens[n].len() != expected {
                return Err(invalid(format!(
                    "degree {n} needs {expected} degeneracy maps, found {}",
                    self.degens[n].len()
                )));
            }
            for (i, row) in self.degens[n].iter().enumerate() {
                if row.len() != self.names[n].len() {
                    return Err(invalid(format!("degeneracy {i} at degree {n} has wrong length")));
                }
                for (c, &img) in row.iter().enumerate() {
                    if img >= self.names[n + 1].len() {
                        return Err(Error::IndexOutOfRange(format!(
                            "degeneracy {i} of cell {c} at degree {n} points at {img}"
                        )));
                    }
                }
            }
        }
        // simplicial identities, wherever both sides stay within truncation
        for n in 2..=d {
            for j in 0..=n {
                for i in 0..j {
                    for c in 0..self.names[n].len() {
                        let lhs = self.faces[n - 1][i][self.faces[n][j][c]];
                        let rhs = self.faces[n - 1][j - 1][self.faces[n][i][c]];
                        if lhs != rhs {
                            return Err(invalid(format!(
                                "face identity d{i} d{j} fails on cell {c} at degree {n}"
                            )));
                        }
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
                    for c in 0..self.names[n].len() {
                        let lhs = self.degens[n + 1][i][self.degens[n][j][c]];
                        let rhs = self.degens[n + 1][j + 1][self.degens[n][i][c]];
                        if lhs != rhs {
                            return Err(invalid(format!(
                                "degeneracy identity s{i} s{j} fails on cell {c} at degree {n}"
                            )));
                        }
                    }
                }
            }
        }
        for n in 0..d {
            // mixed identities on s_j applied to degree-n cells
            for j in 0..=n {
                for i in 0..=(n + 1) {
                    for c in 0..self.names[n].len() {
                        let sc = self.degens[n][j][c];
                        let got = self.faces[n + 1][i][sc];
                        if i == j || i == j + 1 {
                            if got != c {
                                return Err(invalid(format!(
                                    "d{i} s{j} is not the identity on cell {c} at degree {n}"
                                )));
                            }
                        } else if i < j {
                            if n == 0 {
                                continue;
                            }
                            let want = self.degens[n - 1][j - 1][self.faces[n][i][c]];
                            if got != want {
                                return Err(invalid(format!(
                                    "d{i} s{j} != s{} d{i} on cell {c} at degree {n}",
                                    j - 1
                                )));
                            }
                        } else {
                            if n == 0 {
                                continue;
                            }
                            let want = self.degens[n - 1][j][self.faces[n][i - 1][c]];
                            if got != want {
                                return Err(invalid(format!(
                                    "d{i} s{j} != s{j} d{} on cell {c} at degree {n}",
                                    i - 1
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Cell count at a degree; zero beyond the truncation.
    pub fn cells(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, |v| v.len())
    }

    pub fn total_cells(&self) -> usize {
        self.names.iter().map(|v| v.len()).sum()
    }

    pub fn cell_name(&self, n: usize, c: usize) -> &str {
        &self.names[n][c]
    }

    pub fn names_at(&self, n: usize) -> &[String] {
        &self.names[n]
    }

    pub fn cell_by_name(&self, n: usize, name: &str) -> Option<usize> {
        self.names.get(n)?.iter().position(|s| s == name)
    }

    /// `d_i` of cell `c` at degree `n` (requires `1 <= n <= truncation`).
    pub fn face(&self, n: usize, i: usize, c: usize) -> usize {
        self.faces[n][i][c]
    }

    /// `s_i` of cell `c` at degree `n` (requires `n < truncation`).
    pub fn degen(&self, n: usize, i: usize, c: usize) -> usize {
        self.degens[n][i][c]
    }

    /// First witness `(i, c')` with `s_i(c') = c`, if the cell is degenerate.
    pub fn degeneracy_witness(&self, n: usize, c: usize) -> Option<(usize, usize)> {
        if n == 0 {
            return None;
        }
        for (i, row) in self.degens[n - 1].iter().enumerate() {
            if let Some(cp) = row.iter().position(|&img| img == c) {
                return Some((i, cp));
            }
        }
        None
    }

    pub fn is_degenerate(&self, n: usize, c: usize) -> bool {
        self.degeneracy_witness(n, c).is_some()
    }

    /// Vertex `i` of an `n`-cell, as a degree-0 cell.
    pub fn vertex(&self, n: usize, c: usize, i: usize) -> usize {
        let mut cur = c;
        let mut deg = n;
        for j in ((i + 1)..=n).rev() {
            cur = self.face(deg, j, cur);
            deg -= 1;
        }
        for _ in 0..i {
            cur = self.face(deg, 0, cur);
            deg -= 1;
        }
        cur
    }

    /// The edge of an `n`-cell spanning vertices `r < s`, as a degree-1 cell.
    pub fn edge(&self, n: usize, c: usize, r: usize, s: usize) -> usize {
        assert!(r < s && s <= n, "edge ({r}, {s}) of an {n}-cell");
        let mut cur = c;
        let mut deg = n;
        for j in ((s + 1)..=n).rev() {
            cur = self.face(deg, j, cur);
            deg -= 1;
        }
        for _ in 0..(s - r - 1) {
            cur = self.face(deg, r + 1, cur);
            deg -= 1;
        }
        for _ in 0..r {
            cur = self.face(deg, 0, cur);
            deg -= 1;
        }
        debug_assert_eq!(deg, 1);
        cur
    }

    /// The iterated `s_0` degeneracy of a vertex, at the given degree.
    pub fn degenerate_vertex(&self, v: usize, degree: usize) -> usize {
        let mut cur = v;
        for j in 0..degree {
            cur = self.degen(j, 0, cur);
        }
        cur
    }

    /// The contravariant action of a monotone map `u : [k] -> [m]` on a
    /// degree-`m` cell, assembled from the face and degeneracy tables via
    /// the epi-mono factorization of `u`.
    pub fn action(&self, u: &SimplexMap, cell: usize) -> Result<usize> {
        if u.codomain() > self.truncation || u.domain() > self.truncation {
            return Err(Error::IndexOutOfRange(format!(
                "map {u} exceeds the truncation {}",
                self.truncation
            )));
        }
        if cell >= self.cells(u.codomain()) {
            return Err(Error::IndexOutOfRange(format!(
                "no cell {cell} at degree {}",
                u.codomain()
            )));
        }
        let mut cur = cell;
        for g in u.factor().iter().rev() {
            if g.codomain() == g.domain() + 1 {
                let missing = (0..=g.codomain())
                    .find(|v| !g.images().contains(v))
                    .expect("a coface misses exactly one value");
                cur = self.face(g.codomain(), missing, cur);
            } else {
                let t = (0..g.domain())
                    .find(|&t| g.images()[t] == g.images()[t + 1])
                    .expect("a codegeneracy repeats exactly one value");
                cur = self.degen(g.codomain(), g.images()[t], cur);
            }
        }
        Ok(cur)
    }
}

/// Connected components of the underlying graph (vertices and edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi0 {
    /// Component of each vertex, numbered by first appearance.
    pub class_of: Vec<usize>,
    pub count: usize,
}

pub fn pi0(x: &FinSSet) -> Pi0 {
    let nv = x.cells(0);
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    if x.truncation() >= 1 {
        for e in 0..x.cells(1) {
            let a = find(&mut parent, x.face(1, 1, e));
            let b = find(&mut parent, x.face(1, 0, e));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let mut class_of = vec![usize::MAX; nv];
    let mut count = 0;
    for v in 0..nv {
        let r = find(&mut parent, v);
        if class_of[r] == usize::MAX {
            class_of[r] = count;
            count += 1;
        }
        class_of[v] = class_of[r];
    }
    Pi0 { class_of, count }
}

/// The map on components induced by a simplicial map: entry per source
/// component, valued in target components.
pub fn pi0_map(f: &SSetMap) -> Vec<usize> {
    let px = pi0(f.source());
    let py = pi0(f.target());
    let mut out = vec![usize::MAX; px.count];
    for v in 0..f.source().cells(0) {
        out[px.class_of[v]] = py.class_of[f.apply(0, v)];
    }
    out
}

/// A degreewise map of cell indices commuting with faces and degeneracies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSetMap {
    source: Arc<FinSSet>,
    target: Arc<FinSSet>,
    levels: Vec<Vec<usize>>,
}

impl SSetMap {
    pub fn new(source: Arc<FinSSet>, target: Arc<FinSSet>, levels: Vec<Vec<usize>>) -> Result<Self> {
        let invalid = |detail: String| Error::Invalid { kind: "sset-map", detail };
        let d = source.truncation();
        if target.truncation() != d {
            return Err(Error::DomainMismatch(format!(
                "map between truncations {d} and {}",
                target.truncation()
            )));
        }
        if levels.len() != d + 1 {
            return Err(invalid(format!("expected {} levels, found {}", d + 1, levels.len())));
        }
        for n in 0..=d {
            if levels[n].len() != source.cells(n) {
                return Err(invalid(format!("level {n} has wrong length")));
            }
            for (c, &img) in levels[n].iter().enumerate() {
                if img >= target.cells(n) {
                    return Err(Error::IndexOutOfRange(format!(
                        "level {n} sends cell {c} to {img}, beyond {}",
                        target.cells(n)
                    )));
                }
            }
        }
        for n in 1..=d {
            for i in 0..=n {
                for c in 0..source.cells(n) {
                    if target.face(n, i, levels[n][c]) != levels[n - 1][source.face(n, i, c)] {
                        return Err(invalid(format!(
                            "face d{i} does not commute on cell {c} at degree {n}"
                        )));
                    }
                }
            }
        }
        for n in 0..d {
            for i in 0..=n {
                for c in 0..source.cells(n) {
                    if target.degen(n, i, levels[n][c]) != levels[n + 1][source.degen(n, i, c)] {
                        return Err(invalid(format!(
                            "degeneracy s{i} does not commute on cell {c} at degree {n}"
                        )));
                    }
                }
            }
        }
        Ok(SSetMap { source, target, levels })
    }

    pub fn identity(x: Arc<FinSSet>) -> SSetMap {
        let levels = (0..=x.truncation()).map(|n| (0..x.cells(n)).collect()).collect();
        SSetMap { source: Arc::clone(&x), target: x, levels }
    }

    pub fn source(&self) -> &Arc<FinSSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinSSet> {
        &self.target
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn apply(&self, n: usize, c: usize) -> usize {
        self.levels[n][c]
    }

    /// Diagram-order composition: `self` then `g`.
    pub fn then(&self, g: &SSetMap) -> Result<SSetMap> {
        if self.target.as_ref() != g.source.as_ref() {
            return Err(Error::DomainMismatch(
                "composition endpoints do not match".into(),
            ));
        }
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, row)| row.iter().map(|&c| g.levels[n][c]).collect())
            .collect();
        Ok(SSetMap {
            source: Arc::clone(&self.source),
            target: Arc::clone(&g.target),
            levels,
        })
    }

    pub fn is_levelwise_bijective(&self) -> bool {
        for n in 0..=self.source.truncation() {
            if self.source.cells(n) != self.target.cells(n) {
                return false;
            }
            let mut seen = vec![false; self.target.cells(n)];
            for &img in &self.levels[n] {
                if seen[img] {
                    return false;
                }
                seen[img] = true;
            }
        }
        true
    }
}

/// The subcomplex spanned by the `keep` mask, with its inclusion.
///
/// Fails unless the mask is closed under faces and degeneracies.
pub fn subcomplex(x: &Arc<FinSSet>, keep: &[Vec<bool>]) -> Result<(Arc<FinSSet>, SSetMap)> {
    let d = x.truncation();
    let invalid = |detail: String| Error::Invalid { kind: "subcomplex", detail };
    if keep.len() != d + 1 || (0..=d).any(|n| keep[n].len() != x.cells(n)) {
        return Err(invalid("mask shape does not match the complex".into()));
    }
    for n in 1..=d {
        for c in 0..x.cells(n) {
            if keep[n][c] {
                for i in 0..=n {
                    if !keep[n - 1][x.face(n, i, c)] {
                        return Err(invalid(format!(
                            "cell {c} at degree {n} kept but face d{i} dropped"
                        )));
                    }
                }
            }
        }
    }
    for n in 0..d {
        for c in 0..x.cells(n) {
            if keep[n][c] {
                for i in 0..=n {
                    if !keep[n + 1][x.degen(n, i, c)] {
                        return Err(invalid(format!(
                            "cell {c} at degree {n} kept but degeneracy s{i} dropped"
                        )));
                    }
                }
            }
        }
    }
    let mut new_index: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    let mut old_index: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut fwd = vec![usize::MAX; x.cells(n)];
        let mut back = Vec::new();
        for c in 0..x.cells(n) {
            if keep[n][c] {
                fwd[c] = back.len();
                back.push(c);
            }
        }
        new_index.push(fwd);
        old_index.push(back);
    }
    let names: Vec<Vec<String>> = (0..=d)
        .map(|n| old_index[n].iter().map(|&c| x.cell_name(n, c).to_string()).collect())
        .collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 1..=d {
        faces[n] = (0..=n)
            .map(|i| old_index[n].iter().map(|&c| new_index[n - 1][x.face(n, i, c)]).collect())
            .collect();
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 0..d {
        degens[n] = (0..=n)
            .map(|i| old_index[n].iter().map(|&c| new_index[n + 1][x.degen(n, i, c)]).collect())
            .collect();
    }
    let sub = Arc::new(FinSSet::new(d, names, faces, degens)?);
    let inclusion = SSetMap::new(Arc::clone(&sub), Arc::clone(x), old_index)?;
    Ok((sub, inclusion))
}

/// First isomorphism found by backtracking over degree-ascending cell
/// bijections, or `None`.
pub fn find_isomorphism(x: &Arc<FinSSet>, y: &Arc<FinSSet>) -> Option<SSetMap> {
    let d = x.truncation();
    if y.truncation() != d {
        return None;
    }
    for n in 0..=d {
        if x.cells(n) != y.cells(n) {
            return None;
        }
    }
    let mut levels: Vec<Vec<usize>> = (0..=d).map(|n| vec![usize::MAX; x.cells(n)]).collect();
    let mut used: Vec<Vec<bool>> = (0..=d).map(|n| vec![false; y.cells(n)]).collect();
    let order: Vec<(usize, usize)> =
        (0..=d).flat_map(|n| (0..x.cells(n)).map(move |c| (n, c))).collect();

    fn consistent(
        x: &FinSSet,
        y: &FinSSet,
        levels: &[Vec<usize>],
        n: usize,
        c: usize,
        cand: usize,
    ) -> bool {
        if n >= 1 {
            for i in 0..=n {
                if y.face(n, i, cand) != levels[n - 1][x.face(n, i, c)] {
                    return false;
                }
            }
        }
        // degeneracies of earlier-assigned lower cells landing on c
        if n >= 1 {
            for i in 0..n {
                for cp in 0..x.cells(n - 1) {
                    if x.degen(n - 1, i, cp) == c {
                        let img = levels[n - 1][cp];
                        if y.degen(n - 1, i, img) != cand {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn rec(
        x: &FinSSet,
        y: &FinSSet,
        order: &[(usize, usize)],
        depth: usize,
        levels: &mut Vec<Vec<usize>>,
        used: &mut Vec<Vec<bool>>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let (n, c) = order[depth];
        for cand in 0..y.cells(n) {
            if used[n][cand] || !consistent(x, y, levels, n, c, cand) {
                continue;
            }
            levels[n][c] = cand;
            used[n][cand] = true;
            if rec(x, y, order, depth + 1, levels, used) {
                return true;
            }
            levels[n][c] = usize::MAX;
            used[n][cand] = false;
        }
        false
    }

    if rec(x, y, &order, 0, &mut levels, &mut used) {
        SSetMap::new(Arc::clone(x), Arc::clone(y), levels).ok()
    } else {
        None
    }
}

pub fn is_isomorphic(x: &Arc<FinSSet>, y: &Arc<FinSSet>) -> bool {
    find_isomorphism(x, y).is_some()
}

/// The map from the one-point complex picking out vertex `v`.
pub fn vertex_map(x: &Arc<FinSSet>, v: usize) -> Result<SSetMap> {
    let point = discrete_sset(&["pt".to_string()], x.truncation());
    let levels: Vec<Vec<usize>> =
        (0..=x.truncation()).map(|n| vec![x.degenerate_vertex(v, n)]).collect();
    SSetMap::new(point, Arc::clone(x), levels)
}

/// Forget all cells above degree `d`. Returns the same complex when `d`
/// equals the current truncation.
pub fn truncate(x: &Arc<FinSSet>, d: usize) -> Result<Arc<FinSSet>> {
    if d > x.truncation() {
        return Err(Error::IndexOutOfRange(format!(
            "cannot truncate at {d} beyond the stored degree {}",
            x.truncation()
        )));
    }
    if d == x.truncation() {
        return Ok(Arc::clone(x));
    }
    let names = x.names[..=d].to_vec();
    let faces = x.faces[..=d].to_vec();
    let mut degens = x.degens[..d].to_vec();
    degens.push(Vec::new());
    Ok(Arc::new(FinSSet::new(d, names, faces, degens)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;

    #[test]
    fn validation_rejects_a_broken_face_identity() {
        // two vertices, two edges both from a to b, one fake 2-cell whose
        // faces violate d0 d1 = d0 d0 compatibility is hard to fake at this
        // size; instead corrupt an edge endpoint out of range
        let names = vec![vec!["a".into(), "b".into()], vec!["e".into()]];
        let faces = vec![vec![], vec![vec![1], vec![5]]];
        let degens = vec![vec![vec![0, 0]], vec![]];
        // degens[0] rows must send each vertex somewhere at degree 1
        let err = FinSSet::new(1, names, faces, degens).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange(_)));
    }

    #[test]
    fn degenerate_cells_are_recognized() {
        let x = standard(1, 2);
        // degree-1 cells of the walking edge: 0.0, 0.1, 1.1
        let c00 = x.cell_by_name(1, "0.0").unwrap();
        let c01 = x.cell_by_name(1, "0.1").unwrap();
        assert!(x.is_degenerate(1, c00));
        assert!(!x.is_degenerate(1, c01));
        assert_eq!(x.degeneracy_witness(1, c00), Some((0, 0)));
    }

    #[test]
    fn vertices_and_edges_extract_correctly() {
        let x = standard(2, 3);
        let top = x.cell_by_name(2, "0.1.2").unwrap();
        for i in 0..=2 {
            assert_eq!(x.cell_name(0, x.vertex(2, top, i)), format!("{i}"));
        }
        assert_eq!(x.cell_name(1, x.edge(2, top, 0, 1)), "0.1");
        assert_eq!(x.cell_name(1, x.edge(2, top, 1, 2)), "1.2");
        assert_eq!(x.cell_name(1, x.edge(2, top, 0, 2)), "0.2");
    }

    #[test]
    fn pi0_counts_components() {
        let two = discrete_sset(&["u".into(), "v".into()], 2);
        assert_eq!(pi0(&two).count, 2);
        let edge = standard(1, 2);
        assert_eq!(pi0(&edge).count, 1);
        let nerve_bar = nerve(&FinCategory::bar_interval(), 2);
        assert_eq!(pi0(&nerve_bar).count, 1);
    }

    #[test]
    fn identity_and_composition_of_maps() {
        let x = standard(1, 2);
        let id = SSetMap::identity(Arc::clone(&x));
        let composed = id.then(&id).unwrap();
        assert_eq!(composed.levels(), id.levels());
        assert!(id.is_levelwise_bijective());
    }

    #[test]
    fn subcomplex_requires_closure() {
        let x = standard(1, 2);
        // dropping a vertex while keeping the edge must fail
        let mut keep: Vec<Vec<bool>> = (0..=2).map(|n| vec![true; x.cells(n)]).collect();
        keep[0][0] = false;
        assert!(subcomplex(&x, &keep).is_err());
        // dropping the nondegenerate edge and everything above it works
        let e = x.cell_by_name(1, "0.1").unwrap();
        let sub = delete_cell_upward(&x, 1, e).unwrap();
        assert_eq!(sub.cells(0), 2);
        assert_eq!(sub.cells(1), 2);
    }

    #[test]
    fn isomorphism_search_finds_a_relabeling() {
        let a = nerve(&FinCategory::interval(), 2);
        let renamed = {
            let names: Vec<Vec<String>> = (0..=2)
                .map(|n| (0..a.cells(n)).map(|c| format!("c{n}_{c}")).collect())
                .collect();
            let faces = (1..=2).fold(vec![Vec::new(); 3], |mut acc, n| {
                acc[n] = (0..=n).map(|i| (0..a.cells(n)).map(|c| a.face(n, i, c)).collect()).collect();
                acc
            });
            let degens = (0..2).fold(vec![Vec::new(); 3], |mut acc, n| {
                acc[n] = (0..=n).map(|i| (0..a.cells(n)).map(|c| a.degen(n, i, c)).collect()).collect();
                acc
            });
            Arc::new(FinSSet::new(2, names, faces, degens).unwrap())
        };
        let iso = find_isomorphism(&a, &renamed).expect("relabeled copy is isomorphic");
        assert!(iso.is_levelwise_bijective());
        let b = nerve(&FinCategory::discrete(2), 2);
        assert!(!is_isomorphic(&a, &b));
    }
}
