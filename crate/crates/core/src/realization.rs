//! Realization of a simplicial space against the standard cosimplicial
//! simplex, computed as a degreewise coend quotient, with the diagonal as an
//! independent oracle; plus the path-object fiber product and the Cech-style
//! nerve of a map.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::simplex::{enumerate_maps, SimplexMap};
use crate::sset::{
    internal_hom, pairing, product, product_map, pullback, standard, standard_map, truncate,
    FinSSet, InternalHom, SSetMap,
};
use crate::sspace::{SimplicialSpace, SpaceMap};

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// The realization quotient, with enough bookkeeping to locate the class of
/// any pre-quotient cell `(block, simplex cell, level cell)`.
#[derive(Clone, Debug)]
pub struct Realization {
    complex: Arc<FinSSet>,
    unit: SSetMap,
    /// `offsets[j][n]`: first flat index of block `n` at degree `j`; the
    /// final entry is the total pre-quotient cell count.
    offsets: Vec<Vec<usize>>,
    /// `widths[j][n]`: level-`n` cell count at inner degree `j`.
    widths: Vec<Vec<usize>>,
    /// `class_of[j][flat]`: quotient class of each pre-quotient cell.
    class_of: Vec<Vec<usize>>,
    /// `reps[j][class]`: least pre-quotient member.
    reps: Vec<Vec<usize>>,
}

impl Realization {
    pub fn complex(&self) -> &Arc<FinSSet> {
        &self.complex
    }

    /// The canonical map from (the truncation of) level 0 into the
    /// realization.
    pub fn unit(&self) -> &SSetMap {
        &self.unit
    }

    /// The class of the pre-quotient cell `(delta_cell, level_cell)` in
    /// block `n` at degree `j`.
    pub fn class(&self, j: usize, n: usize, delta_cell: usize, level_cell: usize) -> usize {
        self.class_of[j][self.offsets[j][n] + delta_cell * self.widths[j][n] + level_cell]
    }

    /// Decompose a flat pre-quotient index at degree `j` into
    /// `(block, delta cell, level cell)`.
    fn decompose(&self, j: usize, flat: usize) -> (usize, usize, usize) {
        let n = (0..self.offsets[j].len() - 1)
            .rfind(|&n| self.offsets[j][n] <= flat)
            .expect("blocks cover every flat index");
        let rest = flat - self.offsets[j][n];
        (n, rest / self.widths[j][n], rest % self.widths[j][n])
    }
}

/// Realize a simplicial space: the degreewise quotient of the blocks
/// `standard(n) x level(n)` by the coend relations along generating simplex
/// morphisms, truncated at the smaller of the two stored truncations.
pub fn realize(x: &SimplicialSpace) -> Realization {
    let outer = x.outer_truncation();
    let t = outer.min(x.inner_truncation());
    let deltas: Vec<Arc<FinSSet>> = (0..=outer).map(|n| standard(n, t)).collect();
    let mut offsets = vec![vec![0usize; outer + 2]; t + 1];
    let mut widths = vec![vec![0usize; outer + 1]; t + 1];
    for j in 0..=t {
        for n in 0..=outer {
            widths[j][n] = x.level(n).cells(j);
            offsets[j][n + 1] = offsets[j][n] + deltas[n].cells(j) * widths[j][n];
        }
    }
    let mut parent: Vec<Vec<usize>> =
        (0..=t).map(|j| (0..offsets[j][outer + 1]).collect()).collect();
    // relations along cofaces: (Delta(u)(c), x) ~ (c, d_i x)
    for n in 1..=outer {
        for i in 0..=n {
            let u = SimplexMap::coface(n - 1, i).expect("index in range");
            let su = standard_map(&u, t);
            let f = x.outer_face(n, i);
            for j in 0..=t {
                for c in 0..deltas[n - 1].cells(j) {
                    let uc = su.apply(j, c);
                    for xv in 0..widths[j][n] {
                        let a = offsets[j][n] + uc * widths[j][n] + xv;
                        let b = offsets[j][n - 1] + c * widths[j][n - 1] + f.apply(j, xv);
                        union(&mut parent[j], a, b);
                    }
                }
            }
        }
    }
    // relations along codegeneracies: (Delta(u)(c), x) ~ (c, s_i x)
    for n in 0..outer {
        for i in 0..=n {
            let u = SimplexMap::codegeneracy(n, i).expect("index in range");
            let su = standard_map(&u, t);
            let s = x.outer_degen(n, i);
            for j in 0..=t {
                for c in 0..deltas[n + 1].cells(j) {
                    let uc = su.apply(j, c);
                    for xv in 0..widths[j][n] {
                        let a = offsets[j][n] + uc * widths[j][n] + xv;
                        let b = offsets[j][n + 1] + c * widths[j][n + 1] + s.apply(j, xv);
                        union(&mut parent[j], a, b);
                    }
                }
            }
        }
    }
    // classes numbered by least member
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(t + 1);
    let mut reps: Vec<Vec<usize>> = Vec::with_capacity(t + 1);
    let mut members: Vec<Vec<Vec<usize>>> = Vec::with_capacity(t + 1);
    for j in 0..=t {
        let total = offsets[j][outer + 1];
        let mut ids = vec![usize::MAX; total];
        let mut rep = Vec::new();
        let mut mem: Vec<Vec<usize>> = Vec::new();
        for c in 0..total {
            let r = find(&mut parent[j], c);
            if ids[r] == usize::MAX {
                ids[r] = rep.len();
                rep.push(c);
                mem.push(Vec::new());
            }
            ids[c] = ids[r];
            mem[ids[c]].push(c);
        }
        class_of.push(ids);
        reps.push(rep);
        members.push(mem);
    }
    let partial = Realization {
        complex: standard(0, 0), // replaced below
        unit: SSetMap::identity(standard(0, 0)),
        offsets,
        widths,
        class_of,
        reps,
    };
    let names: Vec<Vec<String>> = (0..=t)
        .map(|j| {
            partial.reps[j]
                .iter()
                .map(|&flat| {
                    let (n, dc, xc) = partial.decompose(j, flat);
                    format!(
                        "{n}:{}:{}",
                        deltas[n].cell_name(j, dc),
                        x.level(n).cell_name(j, xc)
                    )
                })
                .collect()
        })
        .collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); t + 1];
    for j in 1..=t {
        faces[j] = (0..=j)
            .map(|i| {
                members[j]
                    .iter()
                    .map(|m| {
                        let img = |flat: usize| {
                            let (n, dc, xc) = partial.decompose(j, flat);
                            partial.class_of[j - 1][partial.offsets[j - 1][n]
                                + deltas[n].face(j, i, dc) * partial.widths[j - 1][n]
                                + x.level(n).face(j, i, xc)]
                        };
                        let first = img(m[0]);
                        for &other in &m[1..] {
                            assert_eq!(img(other), first, "coend face descent");
                        }
                        first
                    })
                    .collect()
            })
            .collect();
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); t + 1];
    for j in 0..t {
        degens[j] = (0..=j)
            .map(|i| {
                members[j]
                    .iter()
                    .map(|m| {
                        let img = |flat: usize| {
                            let (n, dc, xc) = partial.decompose(j, flat);
                            partial.class_of[j + 1][partial.offsets[j + 1][n]
                                + deltas[n].degen(j, i, dc) * partial.widths[j + 1][n]
                                + x.level(n).degen(j, i, xc)]
                        };
                        let first = img(m[0]);
                        for &other in &m[1..] {
                            assert_eq!(img(other), first, "coend degeneracy descent");
                        }
                        first
                    })
                    .collect()
            })
            .collect();
    }
    let complex =
        Arc::new(FinSSet::new(t, names, faces, degens).expect("the coend quotient is simplicial"));
    // block 0 is a single simplex cell wide, so its flat index is the level
    // cell itself
    let unit_source = truncate(x.level(0), t).expect("t is at most the inner truncation");
    let unit_levels: Vec<Vec<usize>> =
        (0..=t).map(|j| (0..partial.widths[j][0]).map(|v| partial.class_of[j][v]).collect()).collect();
    let unit = SSetMap::new(unit_source, Arc::clone(&complex), unit_levels)
        .expect("the unit into the realization is simplicial");
    Realization { complex, unit, ..partial }
}

/// Realize a map of spaces between already-realized endpoints.
pub fn realize_map(f: &SpaceMap, rx: &Realization, ry: &Realization) -> Result<SSetMap> {
    let t = rx.complex.truncation();
    if ry.complex.truncation() != t {
        return Err(Error::DomainMismatch(format!(
            "realizations truncated at {t} and {}",
            ry.complex.truncation()
        )));
    }
    let levels: Vec<Vec<usize>> = (0..=t)
        .map(|j| {
            rx.reps[j]
                .iter()
                .map(|&flat| {
                    let (n, dc, xc) = rx.decompose(j, flat);
                    ry.class(j, n, dc, f.level(n).apply(j, xc))
                })
                .collect()
        })
        .collect();
    SSetMap::new(Arc::clone(&rx.complex), Arc::clone(&ry.complex), levels)
}

/// The diagonal complex: degree-`n` cells are the degree-`n` cells of level
/// `n`, with structure maps acting in both directions at once.
pub fn diagonal(x: &SimplicialSpace) -> Result<Arc<FinSSet>> {
    let outer = x.outer_truncation();
    if x.inner_truncation() < outer {
        return Err(Error::invalid(
            "diagonal",
            format!(
                "inner truncation {} is smaller than the outer truncation {outer}",
                x.inner_truncation()
            ),
        ));
    }
    let names: Vec<Vec<String>> = (0..=outer).map(|j| x.level(j).names_at(j).to_vec()).collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); outer + 1];
    for j in 1..=outer {
        faces[j] = (0..=j)
            .map(|i| {
                (0..x.level(j).cells(j))
                    .map(|c| x.outer_face(j, i).apply(j - 1, x.level(j).face(j, i, c)))
                    .collect()
            })
            .collect();
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); outer + 1];
    for j in 0..outer {
        degens[j] = (0..=j)
            .map(|i| {
                (0..x.level(j).cells(j))
                    .map(|c| x.outer_degen(j, i).apply(j + 1, x.level(j).degen(j, i, c)))
                    .collect()
            })
            .collect();
    }
    Ok(Arc::new(FinSSet::new(outer, names, faces, degens)?))
}

/// The canonical comparison from the realization onto the diagonal, sending
/// the class of `(c, x)` to the outer action of `c`'s monotone map on `x`.
/// Bijectivity of this map is the module's central oracle equivalence.
pub fn realization_diagonal_iso(x: &SimplicialSpace, r: &Realization) -> Result<SSetMap> {
    let diag = diagonal(x)?;
    let t = r.complex.truncation();
    let mut levels: Vec<Vec<usize>> = Vec::with_capacity(t + 1);
    for j in 0..=t {
        let mut row = Vec::with_capacity(r.reps[j].len());
        for &flat in &r.reps[j] {
            let (n, dc, xc) = r.decompose(j, flat);
            let maps = enumerate_maps(j, n, u64::MAX)?;
            row.push(x.outer_action(&maps[dc])?.apply(j, xc));
        }
        levels.push(row);
    }
    SSetMap::new(Arc::clone(&r.complex), diag, levels)
}

/// The path-object fiber product of `f : X -> Z` and `g : Y -> Z`: the
/// strict pullback of `X x Y` against `hom(standard(1), Z)` over `Z x Z`,
/// the latter mapping by evaluation at the two endpoints.
pub fn c_fiber_product(f: &SSetMap, g: &SSetMap, budget: u64) -> Result<Arc<FinSSet>> {
    if f.target().as_ref() != g.target().as_ref() {
        return Err(Error::DomainMismatch("fiber product legs have different targets".into()));
    }
    let z = f.target();
    let path = internal_hom(&standard(1, z.truncation()), z, budget)?;
    let ev0 = path.evaluation_at_vertex(0)?;
    let ev1 = path.evaluation_at_vertex(1)?;
    let (xy, _, _) = product(f.source(), g.source())?;
    let (zz, _, _) = product(z, z)?;
    let legs = product_map(f, g, &xy, &zz)?;
    let endpoints = pairing(&ev0, &ev1, &zz)?;
    let (p, _, _) = pullback(&legs, &endpoints)?;
    Ok(p)
}

/// The Cech-style nerve of a map: level `n` is the strict pullback of the
/// `(n+1)`-fold power of the map against the stacked vertex evaluations out
/// of `hom(standard(n), target)`.
pub struct CNerve {
    space: SimplicialSpace,
    homs: Vec<InternalHom>,
    /// `pairs[n][j][c]`: the (power cell, hom cell) behind each level cell.
    pairs: Vec<Vec<Vec<(usize, usize)>>>,
    pair_index: Vec<Vec<BTreeMap<(usize, usize), usize>>>,
}

impl CNerve {
    pub fn space(&self) -> &SimplicialSpace {
        &self.space
    }

    pub fn into_space(self) -> SimplicialSpace {
        self.space
    }

    pub fn hom(&self, n: usize) -> &InternalHom {
        &self.homs[n]
    }

    pub fn pair(&self, n: usize, j: usize, c: usize) -> (usize, usize) {
        self.pairs[n][j][c]
    }

    /// The level-`n` cell over a (power cell, hom cell) pair, when the
    /// vertex-evaluation equations hold.
    pub fn pair_cell(&self, n: usize, j: usize, power: usize, hom: usize) -> Option<usize> {
        self.pair_index[n][j].get(&(power, hom)).copied()
    }
}

fn tuple_digits(mut i: usize, base: usize, count: usize) -> Vec<usize> {
    let mut out = vec![0; count];
    for k in (0..count).rev() {
        out[k] = i % base;
        i /= base;
    }
    out
}

fn tuple_index(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

pub fn c_nerve(p: &SSetMap, outer: usize, budget: u64) -> Result<CNerve> {
    let x = Arc::clone(p.source());
    let y = Arc::clone(p.target());
    let d = x.truncation();
    // (k+1)-fold powers, with the power of p between them
    let mut xpow: Vec<Arc<FinSSet>> = vec![Arc::clone(&x)];
    let mut ypow: Vec<Arc<FinSSet>> = vec![Arc::clone(&y)];
    let mut pmap: Vec<SSetMap> = vec![p.clone()];
    for k in 1..=outer {
        let (xp, _, _) = product(&xpow[k - 1], &x)?;
        let (yp, _, _) = product(&ypow[k - 1], &y)?;
        pmap.push(product_map(&pmap[k - 1], p, &xp, &yp)?);
        xpow.push(xp);
        ypow.push(yp);
    }
    // mapping complexes out of the simplices, with stacked vertex evaluations
    let mut homs: Vec<InternalHom> = Vec::with_capacity(outer + 1);
    let mut evals: Vec<SSetMap> = Vec::with_capacity(outer + 1);
    for n in 0..=outer {
        let hom = internal_hom(&standard(n, d), &y, budget)?;
        let mut acc = hom.evaluation_at_vertex(0)?;
        for v in 1..=n {
            acc = pairing(&acc, &hom.evaluation_at_vertex(v)?, &ypow[v])?;
        }
        evals.push(acc);
        homs.push(hom);
    }
    // levels
    let mut levels: Vec<Arc<FinSSet>> = Vec::with_capacity(outer + 1);
    let mut pairs: Vec<Vec<Vec<(usize, usize)>>> = Vec::with_capacity(outer + 1);
    let mut pair_index: Vec<Vec<BTreeMap<(usize, usize), usize>>> = Vec::with_capacity(outer + 1);
    for n in 0..=outer {
        let (l, pt, ph) = pullback(&pmap[n], &evals[n])?;
        let mut by_degree = Vec::with_capacity(d + 1);
        let mut idx = Vec::with_capacity(d + 1);
        for j in 0..=d {
            let v: Vec<(usize, usize)> =
                (0..l.cells(j)).map(|c| (pt.apply(j, c), ph.apply(j, c))).collect();
            idx.push(v.iter().enumerate().map(|(i, &ab)| (ab, i)).collect());
            by_degree.push(v);
        }
        levels.push(l);
        pairs.push(by_degree);
        pair_index.push(idx);
    }
    // hom cells indexed by their underlying map tables, for precomposition
    let hom_index: Vec<Vec<BTreeMap<Vec<Vec<usize>>, usize>>> = homs
        .iter()
        .map(|h| {
            (0..=d)
                .map(|j| {
                    h.cells[j]
                        .iter()
                        .enumerate()
                        .map(|(i, m)| (m.levels().to_vec(), i))
                        .collect()
                })
                .collect()
        })
        .collect();
    // a structure map reindexes the tuple along u and precomposes the hom
    // coordinate with standard_map(u) x id
    let structure_map = |from: usize, to: usize, u: &SimplexMap| -> Result<SSetMap> {
        let su = standard_map(u, d);
        let mut table: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
        for j in 0..=d {
            let id_j = SSetMap::identity(standard(j, d));
            let inc = product_map(&su, &id_j, &homs[to].products[j], &homs[from].products[j])?;
            let mut row = Vec::with_capacity(levels[from].cells(j));
            for c in 0..levels[from].cells(j) {
                let (a, b) = pairs[from][j][c];
                let old = tuple_digits(a, x.cells(j), from + 1);
                let new: Vec<usize> = u.images().iter().map(|&v| old[v]).collect();
                let new_a = tuple_index(&new, x.cells(j));
                let composed = inc.then(&homs[from].cells[j][b])?;
                let new_b = hom_index[to][j][composed.levels()];
                row.push(pair_index[to][j][&(new_a, new_b)]);
            }
            table.push(row);
        }
        SSetMap::new(Arc::clone(&levels[from]), Arc::clone(&levels[to]), table)
    };
    let mut outer_faces: Vec<Vec<SSetMap>> = vec![Vec::new(); outer + 1];
    for n in 1..=outer {
        for i in 0..=n {
            let u = SimplexMap::coface(n - 1, i).expect("index in range");
            outer_faces[n].push(structure_map(n, n - 1, &u)?);
        }
    }
    let mut outer_degens: Vec<Vec<SSetMap>> = vec![Vec::new(); outer + 1];
    for n in 0..outer {
        for i in 0..=n {
            let u = SimplexMap::codegeneracy(n, i).expect("index in range");
            outer_degens[n].push(structure_map(n, n + 1, &u)?);
        }
    }
    let space = SimplicialSpace::new(levels, outer_faces, outer_degens)?;
    Ok(CNerve { space, homs, pairs, pair_index })
}
