//! Shared test helpers: seeded generators of small complexes and spaces.
//! Everything goes through the library's validated constructors, so a
//! generated instance is well formed by construction, and every generated
//! space keeps at most 20 cells in any level.

use std::sync::Arc;

use deltakit::sset::{
    coequalizer, coproduct, discrete_sset, product, product_map, standard, vertex_map, FinSSet,
    SSetMap,
};
use deltakit::sspace::{constant_levels, discrete_levels, h_space, SimplicialSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random complex at truncation `d`: one or two standard simplices,
/// glued along up to two random vertex pairs, never more than 20 cells in
/// total.
pub fn random_sset(rng: &mut ChaCha8Rng, d: usize) -> Arc<FinSSet> {
    // degree-3 representables are already too big at truncation 3
    let max_first = if d >= 3 { 1 } else { 2.min(d) };
    let mut x = standard(rng.gen_range(0..=max_first), d);
    if rng.gen_bool(0.5) {
        let second = standard(rng.gen_range(0..=1.min(d)), d);
        if x.total_cells() + second.total_cells() <= 20 {
            x = coproduct(&x, &second).unwrap().0;
        }
    }
    for _ in 0..rng.gen_range(0..=2u32) {
        let vertices = x.cells(0);
        if vertices < 2 {
            break;
        }
        let a = rng.gen_range(0..vertices);
        let b = rng.gen_range(0..vertices);
        if a == b {
            continue;
        }
        let left = vertex_map(&x, a).unwrap();
        let right = vertex_map(&x, b).unwrap();
        x = coequalizer(&left, &right).unwrap().0;
    }
    assert!(x.total_cells() <= 20);
    x
}

/// The external product of `k` and `l`: level `n` is `k`'s degree-`n` cell
/// set times `l`, with the outer structure maps acting on the first factor
/// through `k`'s face and degeneracy tables.
pub fn external_product(k: &Arc<FinSSet>, l: &Arc<FinSSet>) -> SimplicialSpace {
    let outer = k.truncation();
    let inner = l.truncation();
    let blocks: Vec<Arc<FinSSet>> =
        (0..=outer).map(|n| discrete_sset(k.names_at(n), inner)).collect();
    let levels: Vec<Arc<FinSSet>> = blocks.iter().map(|b| product(b, l).unwrap().0).collect();
    let block_map = |row: Vec<usize>, from: usize, to: usize| -> SSetMap {
        let constant_rows = (0..=inner).map(|_| row.clone()).collect();
        SSetMap::new(Arc::clone(&blocks[from]), Arc::clone(&blocks[to]), constant_rows).unwrap()
    };
    let id_l = SSetMap::identity(Arc::clone(l));
    let mut outer_faces: Vec<Vec<SSetMap>> = vec![Vec::new()];
    for n in 1..=outer {
        outer_faces.push(
            (0..=n)
                .map(|i| {
                    let row = (0..k.cells(n)).map(|c| k.face(n, i, c)).collect();
                    product_map(&block_map(row, n, n - 1), &id_l, &levels[n], &levels[n - 1])
                        .unwrap()
                })
                .collect(),
        );
    }
    let mut outer_degens: Vec<Vec<SSetMap>> = Vec::new();
    for n in 0..outer {
        outer_degens.push(
            (0..=n)
                .map(|i| {
                    let row = (0..k.cells(n)).map(|c| k.degen(n, i, c)).collect();
                    product_map(&block_map(row, n, n + 1), &id_l, &levels[n], &levels[n + 1])
                        .unwrap()
                })
                .collect(),
        );
    }
    outer_degens.push(Vec::new());
    SimplicialSpace::new(levels, outer_faces, outer_degens).unwrap()
}

/// One seeded random space with equal inner and outer truncations, at most
/// 20 cells in any level, drawn from four families: discrete diagrams,
/// constant diagrams, representables, and external products.
pub fn random_space(rng: &mut ChaCha8Rng) -> SimplicialSpace {
    // a discrete diagram turns each degree-n cell into a point with its
    // degenerate tower, so the level size is widest-degree times d + 1
    let fits_discretely = |k: &Arc<FinSSet>| {
        let d = k.truncation();
        (0..=d).map(|n| k.cells(n)).max().unwrap() * (d + 1) <= 20
    };
    let space = match rng.gen_range(0..4u32) {
        0 => {
            let d = rng.gen_range(1..=3);
            let mut k = random_sset(rng, d);
            for _ in 0..8 {
                if fits_discretely(&k) {
                    break;
                }
                k = random_sset(rng, d);
            }
            if !fits_discretely(&k) {
                k = standard(1.min(d), d);
            }
            discrete_levels(&k)
        }
        1 => {
            let d = rng.gen_range(1..=3);
            constant_levels(&random_sset(rng, d), d)
        }
        2 => {
            // level sizes of the representable on [n] grow with both n and
            // the truncation; these pairs stay within the bound
            let n = rng.gen_range(0..=2);
            let d = if n == 2 { 1 } else { rng.gen_range(1..=3) };
            h_space(n, d, d)
        }
        _ => {
            let d = rng.gen_range(1..=2);
            let k = random_sset(rng, d);
            let l = if rng.gen_bool(0.5) {
                standard(rng.gen_range(0..=1), d)
            } else {
                discrete_sset(&["p".into(), "q".into()], d)
            };
            let widest = (0..=d).map(|n| k.cells(n)).max().unwrap();
            if widest * l.total_cells() <= 20 {
                external_product(&k, &l)
            } else {
                constant_levels(&k, d)
            }
        }
    };
    for n in 0..=space.outer_truncation() {
        assert!(space.level(n).total_cells() <= 20, "level {n} is too big");
    }
    assert_eq!(space.outer_truncation(), space.inner_truncation());
    space
}
