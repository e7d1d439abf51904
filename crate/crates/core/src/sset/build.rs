//! Builders: representable complexes, nerves, discrete complexes, and the
//! maps induced by monotone maps and functors.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{FinSSet, SSetMap};
use crate::error::Result;
use crate::fincat::{FinCategory, Functor};
use crate::simplex::{enumerate_maps, SimplexMap};

fn simplex_cells(k: usize, n: usize) -> Vec<SimplexMap> {
    enumerate_maps(k, n, u64::MAX).expect("unbounded enumeration cannot exceed its budget")
}

fn images_name(images: &[usize]) -> String {
    images.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
}

/// The representable complex on `[n]`, truncated at degree `d`: cells at
/// degree `k` are the monotone maps `[k] -> [n]`, named by their images.
pub fn standard(n: usize, d: usize) -> Arc<FinSSet> {
    let mut names = Vec::with_capacity(d + 1);
    let mut index: Vec<BTreeMap<Vec<usize>, usize>> = Vec::with_capacity(d + 1);
    let mut cells: Vec<Vec<SimplexMap>> = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let maps = simplex_cells(k, n);
        let mut lookup = BTreeMap::new();
        for (i, m) in maps.iter().enumerate() {
            lookup.insert(m.images().to_vec(), i);
        }
        names.push(maps.iter().map(|m| images_name(m.images())).collect());
        index.push(lookup);
        cells.push(maps);
    }
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for k in 1..=d {
        faces[k] = (0..=k)
            .map(|i| {
                let delta = SimplexMap::coface(k - 1, i).expect("i <= k");
                cells[k]
                    .iter()
                    .map(|m| index[k - 1][delta.then(m).expect("composable").images()])
                    .collect()
            })
            .collect();
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for k in 0..d {
        degens[k] = (0..=k)
            .map(|i| {
                let sigma = SimplexMap::codegeneracy(k, i).expect("i <= k");
                cells[k]
                    .iter()
                    .map(|m| index[k + 1][sigma.then(m).expect("composable").images()])
                    .collect()
            })
            .collect();
    }
    Arc::new(FinSSet::new(d, names, faces, degens).expect("representable complex is well formed"))
}

/// The map of representable complexes induced by a monotone map.
pub fn standard_map(f: &SimplexMap, d: usize) -> SSetMap {
    let source = standard(f.domain(), d);
    let target = standard(f.codomain(), d);
    let levels: Vec<Vec<usize>> = (0..=d)
        .map(|k| {
            let src_cells = simplex_cells(k, f.domain());
            let tgt_cells = simplex_cells(k, f.codomain());
            let mut lookup = BTreeMap::new();
            for (i, m) in tgt_cells.iter().enumerate() {
                lookup.insert(m.images().to_vec(), i);
            }
            src_cells
                .iter()
                .map(|m| lookup[m.then(f).expect("composable").images()])
                .collect()
        })
        .collect();
    SSetMap::new(source, target, levels).expect("postcomposition is simplicial")
}

/// The complex with the given vertex set and only degenerate cells above it.
pub fn discrete_sset(names: &[String], d: usize) -> Arc<FinSSet> {
    let count = names.len();
    let all_names: Vec<Vec<String>> = (0..=d).map(|_| names.to_vec()).collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 1..=d {
        faces[n] = vec![(0..count).collect(); n + 1];
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for n in 0..d {
        degens[n] = vec![(0..count).collect(); n + 1];
    }
    Arc::new(FinSSet::new(d, all_names, faces, degens).expect("discrete complex is well formed"))
}

pub fn empty_sset(d: usize) -> Arc<FinSSet> {
    discrete_sset(&[], d)
}

/// Composable strings of length `k` in a category, in lexicographic order
/// on arrow indices.
fn strings(a: &FinCategory, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return (0..a.object_count()).map(|x| vec![x]).collect();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(a: &FinCategory, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for f in 0..a.arrow_count() {
            if let Some(&last) = current.last() {
                if a.arrow(f).src != a.arrow(last).tgt {
                    continue;
                }
            }
            current.push(f);
            rec(a, k, current, out);
            current.pop();
        }
    }
    rec(a, k, &mut current, &mut out);
    out
}

/// The nerve of a finite category, truncated at degree `d`: degree-`k`
/// cells are composable strings of `k` arrows; degree 0 is the object set.
pub fn nerve(a: &FinCategory, d: usize) -> Arc<FinSSet> {
    let cells: Vec<Vec<Vec<usize>>> = (0..=d).map(|k| strings(a, k)).collect();
    let index: Vec<BTreeMap<Vec<usize>, usize>> = cells
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let names: Vec<Vec<String>> = (0..=d)
        .map(|k| {
            cells[k]
                .iter()
                .map(|s| {
                    if k == 0 {
                        a.objects()[s[0]].clone()
                    } else {
                        s.iter().map(|&f| a.arrow(f).name.clone()).collect::<Vec<_>>().join("|")
                    }
                })
                .collect()
        })
        .collect();
    let string_vertex = |s: &[usize], k: usize, i: usize| -> usize {
        // vertex i of a string: source of the first arrow, then targets
        if i == 0 {
            if k == 0 {
                s[0]
            } else {
                a.arrow(s[0]).src
            }
        } else {
            a.arrow(s[i - 1]).tgt
        }
    };
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for k in 1..=d {
        faces[k] = (0..=k)
            .map(|i| {
                cells[k]
                    .iter()
                    .map(|s| {
                        let fs: Vec<usize> = if k == 1 {
                            vec![string_vertex(s, k, if i == 0 { 1 } else { 0 })]
                        } else if i == 0 {
                            s[1..].to_vec()
                        } else if i == k {
                            s[..k - 1].to_vec()
                        } else {
                            let mut t = s[..i - 1].to_vec();
                            t.push(a.compose(s[i], s[i - 1]).expect("adjacent arrows compose"));
                            t.extend_from_slice(&s[i + 1..]);
                            t
                        };
                        index[k - 1][&fs]
                    })
                    .collect()
            })
            .collect();
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for k in 0..d {
        degens[k] = (0..=k)
            .map(|i| {
                cells[k]
                    .iter()
                    .map(|s| {
                        let id = a.identity_of(string_vertex(s, k, i));
                        let ds: Vec<usize> = if k == 0 {
                            vec![id]
                        } else {
                            let mut t = s[..i].to_vec();
                            t.push(id);
                            t.extend_from_slice(&s[i..]);
                            t
                        };
                        index[k + 1][&ds]
                    })
                    .collect()
            })
            .collect();
    }
    Arc::new(FinSSet::new(d, names, faces, degens).expect("nerve is well formed"))
}

/// The nerve map induced by a functor.
pub fn nerve_map(a: &FinCategory, b: &FinCategory, f: &Functor, d: usize) -> Result<SSetMap> {
    f.check(a, b)?;
    let source = nerve(a, d);
    let target = nerve(b, d);
    let levels: Vec<Vec<usize>> = (0..=d)
        .map(|k| {
            let src = strings(a, k);
            let tgt = strings(b, k);
            let lookup: BTreeMap<Vec<usize>, usize> =
                tgt.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
            src.iter()
                .map(|s| {
                    let img: Vec<usize> = if k == 0 {
                        vec![f.apply_object(s[0])]
                    } else {
                        s.iter().map(|&x| f.apply_arrow(x)).collect()
                    };
                    lookup[&img]
                })
                .collect()
        })
        .collect();
    SSetMap::new(source, target, levels)
}

/// The inclusion of the discrete complex on a category's objects into its
/// nerve, hitting the degenerate copies of the vertices.
pub fn objects_inclusion(a: &FinCategory, d: usize) -> SSetMap {
    let target = nerve(a, d);
    let source = discrete_sset(target.names_at(0), d);
    let levels: Vec<Vec<usize>> = (0..=d)
        .map(|j| (0..a.object_count()).map(|v| target.degenerate_vertex(v, j)).collect())
        .collect();
    SSetMap::new(source, target, levels).expect("vertex degeneracies are simplicial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::are_equivalent;
    use crate::sset::{is_isomorphic, pi0};

    #[test]
    fn standard_one_has_the_frozen_cell_counts() {
        let x = standard(1, 2);
        assert_eq!((x.cells(0), x.cells(1), x.cells(2)), (2, 3, 4));
        let y = standard(2, 3);
        assert_eq!(y.cells(3), 15);
    }

    #[test]
    fn nerve_counts_for_the_two_intervals() {
        let strict = nerve(&FinCategory::interval(), 3);
        assert_eq!(
            (0..=3).map(|n| strict.cells(n)).collect::<Vec<_>>(),
            vec![2, 3, 4, 5]
        );
        let invertible = nerve(&FinCategory::bar_interval(), 3);
        assert_eq!(
            (0..=3).map(|n| invertible.cells(n)).collect::<Vec<_>>(),
            vec![2, 4, 8, 16]
        );
    }

    #[test]
    fn nerve_of_a_linear_poset_matches_the_representable_complex() {
        for n in 0..=3 {
            let via_nerve = nerve(&FinCategory::linear(n), 3);
            let via_simplex = standard(n, 3);
            assert!(is_isomorphic(&via_nerve, &via_simplex), "linear({n})");
        }
    }

    #[test]
    fn standard_maps_compose_like_their_monotone_maps() {
        let f = SimplexMap::coface(1, 1).unwrap();
        let g = SimplexMap::codegeneracy(1, 0).unwrap();
        let fg = f.then(&g).unwrap();
        let lhs = standard_map(&f, 2).then(&standard_map(&g, 2)).unwrap();
        let rhs = standard_map(&fg, 2);
        assert_eq!(lhs.levels(), rhs.levels());
    }

    #[test]
    fn discrete_complexes_have_identity_structure() {
        let x = discrete_sset(&["a".into(), "b".into(), "c".into()], 3);
        assert_eq!(pi0(&x).count, 3);
        for n in 1..=3 {
            assert_eq!(x.cells(n), 3);
            for i in 0..=n {
                for c in 0..3 {
                    assert_eq!(x.face(n, i, c), c);
                }
            }
        }
    }

    #[test]
    fn nerve_map_tracks_an_equivalence() {
        let bar = FinCategory::bar_interval();
        let point = FinCategory::point();
        let (ok, witness) = are_equivalent(&bar, &point, 1_000_000).unwrap();
        assert!(ok);
        let f = witness.unwrap();
        let m = nerve_map(&bar, &point, &f, 2).unwrap();
        // the nerve of the point is a single cell in every degree
        for n in 0..=2 {
            assert!(m.levels()[n].iter().all(|&c| c == 0));
        }
    }
}
