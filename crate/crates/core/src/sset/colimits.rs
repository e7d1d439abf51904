//! Degreewise limits and colimits of truncated complexes.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{FinSSet, SSetMap};
use crate::error::{Error, Result};

fn check_same_truncation(x: &FinSSet, y: &FinSSet) -> Result<usize> {
    if x.truncation() != y.truncation() {
        return Err(Error::DomainMismatch(format!(
            "truncations {} and {} differ",
            x.truncation(),
            y.truncation()
        )));
    }
    Ok(x.truncation())
}

/// Cartesian product with projections. Pair cells are indexed densely,
/// first factor major.
pub fn product(
    x: &Arc<FinSSet>,
    y: &Arc<FinSSet>,
) -> Result<(Arc<FinSSet>, SSetMap, SSetMap)> {
    let d = check_same_truncation(x, y)?;
    let mut names = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut level = Vec::with_capacity(x.cells(n) * y.cells(n));
        for a in 0..x.cells(n) {
            for b in 0..y.cells(n) {
                level.push(format!("({}|{})", x.cell_name(n, a), y.cell_name(n, b)));
            }
        }
        names.push(level);
    }
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 1..=d {
        faces[n] = (0..=n)
            .map(|i| {
                let mut row = Vec::with_capacity(x.cells(n) * y.cells(n));
                for a in 0..x.cells(n) {
                    for b in 0..y.cells(n) {
                        row.push(x.face(n, i, a) * y.cells(n - 1) + y.face(n, i, b));
                    }
                }
                row
            })
            .collect();
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 0..d {
        degens[n] = (0..=n)
            .map(|i| {
                let mut row = Vec::with_capacity(x.cells(n) * y.cells(n));
                for a in 0..x.cells(n) {
                    for b in 0..y.cells(n) {
                        row.push(x.degen(n, i, a) * y.cells(n + 1) + y.degen(n, i, b));
                    }
                }
                row
            })
            .collect();
    }
    let p = Arc::new(FinSSet::new(d, names, faces, degens)?);
    let proj1 = SSetMap::new(
        Arc::clone(&p),
        Arc::clone(x),
        (0..=d)
            .map(|n| {
                (0..x.cells(n)).flat_map(|a| std::iter::repeat(a).take(y.cells(n))).collect()
            })
            .collect(),
    )?;
    let proj2 = SSetMap::new(
        Arc::clone(&p),
        Arc::clone(y),
        (0..=d).map(|n| (0..x.cells(n)).flat_map(|_| 0..y.cells(n)).collect()).collect(),
    )?;
    Ok((p, proj1, proj2))
}

/// The map `X x Y -> X' x Y'` acting by `f` and `g` componentwise.
/// `xy` and `xy2` must be products built by [`product`] of the respective
/// sources and targets.
pub fn product_map(
    f: &SSetMap,
    g: &SSetMap,
    xy: &Arc<FinSSet>,
    xy2: &Arc<FinSSet>,
) -> Result<SSetMap> {
    let d = check_same_truncation(f.source(), g.source())?;
    let levels: Vec<Vec<usize>> = (0..=d)
        .map(|n| {
            let yc = g.source().cells(n);
            let yc2 = g.target().cells(n);
            (0..xy.cells(n))
                .map(|i| f.apply(n, i / yc) * yc2 + g.apply(n, i % yc))
                .collect()
        })
        .collect();
    SSetMap::new(Arc::clone(xy), Arc::clone(xy2), levels)
}

/// The map `Z -> X x Y` with components `f` and `g`.
pub fn pairing(f: &SSetMap, g: &SSetMap, xy: &Arc<FinSSet>) -> Result<SSetMap> {
    if f.source().as_ref() != g.source().as_ref() {
        return Err(Error::DomainMismatch("pairing components have different sources".into()));
    }
    let d = f.source().truncation();
    let levels: Vec<Vec<usize>> = (0..=d)
        .map(|n| {
            let yc = g.target().cells(n);
            (0..f.source().cells(n)).map(|c| f.apply(n, c) * yc + g.apply(n, c)).collect()
        })
        .collect();
    SSetMap::new(Arc::clone(f.source()), Arc::clone(xy), levels)
}

/// Disjoint union with inclusions. Cell names gain a side prefix.
pub fn coproduct(
    x: &Arc<FinSSet>,
    y: &Arc<FinSSet>,
) -> Result<(Arc<FinSSet>, SSetMap, SSetMap)> {
    let d = check_same_truncation(x, y)?;
    let mut names = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut level: Vec<String> =
            (0..x.cells(n)).map(|c| format!("l.{}", x.cell_name(n, c))).collect();
        level.extend((0..y.cells(n)).map(|c| format!("r.{}", y.cell_name(n, c))));
        names.push(level);
    }
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 1..=d {
        faces[n] = (0..=n)
            .map(|i| {
                let mut row: Vec<usize> = (0..x.cells(n)).map(|c| x.face(n, i, c)).collect();
                row.extend((0..y.cells(n)).map(|c| x.cells(n - 1) + y.face(n, i, c)));
                row
            })
            .collect();
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 0..d {
        degens[n] = (0..=n)
            .map(|i| {
                let mut row: Vec<usize> = (0..x.cells(n)).map(|c| x.degen(n, i, c)).collect();
                row.extend((0..y.cells(n)).map(|c| x.cells(n + 1) + y.degen(n, i, c)));
                row
            })
            .collect();
    }
    let s = Arc::new(FinSSet::new(d, names, faces, degens)?);
    let inl = SSetMap::new(
        Arc::clone(x),
        Arc::clone(&s),
        (0..=d).map(|n| (0..x.cells(n)).collect()).collect(),
    )?;
    let inr = SSetMap::new(
        Arc::clone(y),
        Arc::clone(&s),
        (0..=d).map(|n| (x.cells(n)..x.cells(n) + y.cells(n)).collect()).collect(),
    )?;
    Ok((s, inl, inr))
}

/// Fiber product of `f: X -> Z` and `g: Y -> Z`, with projections.
pub fn pullback(f: &SSetMap, g: &SSetMap) -> Result<(Arc<FinSSet>, SSetMap, SSetMap)> {
    if f.target().as_ref() != g.target().as_ref() {
        return Err(Error::DomainMismatch("pullback legs have different targets".into()));
    }
    let x = f.source();
    let y = g.source();
    let d = x.truncation();
    let mut pairs: Vec<Vec<(usize, usize)>> = Vec::with_capacity(d + 1);
    let mut index: Vec<BTreeMap<(usize, usize), usize>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut level = Vec::new();
        let mut lookup = BTreeMap::new();
        for a in 0..x.cells(n) {
            for b in 0..y.cells(n) {
                if f.apply(n, a) == g.apply(n, b) {
                    lookup.insert((a, b), level.len());
                    level.push((a, b));
                }
            }
        }
        pairs.push(level);
        index.push(lookup);
    }
    let names: Vec<Vec<String>> = (0..=d)
        .map(|n| {
            pairs[n]
                .iter()
                .map(|&(a, b)| format!("({}|{})", x.cell_name(n, a), y.cell_name(n, b)))
                .collect()
        })
        .collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 1..=d {
        faces[n] = (0..=n)
            .map(|i| {
                pairs[n]
                    .iter()
                    .map(|&(a, b)| index[n - 1][&(x.face(n, i, a), y.face(n, i, b))])
                    .collect()
            })
            .collect();
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 0..d {
        degens[n] = (0..=n)
            .map(|i| {
                pairs[n]
                    .iter()
                    .map(|&(a, b)| index[n + 1][&(x.degen(n, i, a), y.degen(n, i, b))])
                    .collect()
            })
            .collect();
    }
    let p = Arc::new(FinSSet::new(d, names, faces, degens)?);
    let proj1 = SSetMap::new(
        Arc::clone(&p),
        Arc::clone(x),
        (0..=d).map(|n| pairs[n].iter().map(|&(a, _)| a).collect()).collect(),
    )?;
    let proj2 = SSetMap::new(
        Arc::clone(&p),
        Arc::clone(y),
        (0..=d).map(|n| pairs[n].iter().map(|&(_, b)| b).collect()).collect(),
    )?;
    Ok((p, proj1, proj2))
}

/// Coequalizer of a parallel pair `f, g: X -> Y`: the quotient of `Y` by
/// the degreewise identifications `f(c) ~ g(c)`, with the projection.
///
/// Face and degeneracy descent is verified on every member of every class;
/// a violation surfaces as `IllFormedQuotient`.
pub fn coequalizer(f: &SSetMap, g: &SSetMap) -> Result<(Arc<FinSSet>, SSetMap)> {
    if f.source().as_ref() != g.source().as_ref() || f.target().as_ref() != g.target().as_ref() {
        return Err(Error::DomainMismatch("parallel pair endpoints do not match".into()));
    }
    let y = f.target();
    let d = y.truncation();
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    let mut members: Vec<Vec<Vec<usize>>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut parent: Vec<usize> = (0..y.cells(n)).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for c in 0..f.source().cells(n) {
            let (a, b) = (f.apply(n, c), g.apply(n, c));
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                parent[hi] = lo;
            }
        }
        let mut ids = vec![usize::MAX; y.cells(n)];
        let mut mem: Vec<Vec<usize>> = Vec::new();
        for c in 0..y.cells(n) {
            let r = find(&mut parent, c);
            if ids[r] == usize::MAX {
                ids[r] = mem.len();
                mem.push(Vec::new());
            }
            ids[c] = ids[r];
            mem[ids[c]].push(c);
        }
        class_of.push(ids);
        members.push(mem);
    }
    // names from the least member of each class
    let names: Vec<Vec<String>> = (0..=d)
        .map(|n| members[n].iter().map(|m| y.cell_name(n, m[0]).to_string()).collect())
        .collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 1..=d {
        faces[n] = (0..=n)
            .map(|i| {
                members[n]
                    .iter()
                    .map(|m| {
                        let img = class_of[n - 1][y.face(n, i, m[0])];
                        for &other in &m[1..] {
                            if class_of[n - 1][y.face(n, i, other)] != img {
                                return Err(Error::IllFormedQuotient(format!(
                                    "face d{i} disagrees across the class of {} at degree {n}",
                                    y.cell_name(n, m[0])
                                )));
                            }
                        }
                        Ok(img)
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 0..d {
        degens[n] = (0..=n)
            .map(|i| {
                members[n]
                    .iter()
                    .map(|m| {
                        let img = class_of[n + 1][y.degen(n, i, m[0])];
                        for &other in &m[1..] {
                            if class_of[n + 1][y.degen(n, i, other)] != img {
                                return Err(Error::IllFormedQuotient(format!(
                                    "degeneracy s{i} disagrees across the class of {} at degree {n}",
                                    y.cell_name(n, m[0])
                                )));
                            }
                        }
                        Ok(img)
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
    }
    let q = Arc::new(FinSSet::new(d, names, faces, degens)?);
    let proj = SSetMap::new(Arc::clone(y), Arc::clone(&q), class_of)?;
    Ok((q, proj))
}
