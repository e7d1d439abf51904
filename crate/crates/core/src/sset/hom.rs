//! Mapping complexes: the internal hom of truncated complexes, materialized
//! cell by cell, with evaluation maps at vertices.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{mapset, product, product_map, standard, standard_map, FinSSet, SSetMap};
use crate::error::{Error, Result};
use crate::simplex::SimplexMap;

/// The mapping complex `hom(X, Y)` together with the raw maps behind each
/// cell: degree-`k` cells are maps `X x Delta^k -> Y`.
#[derive(Clone, Debug)]
pub struct InternalHom {
    pub complex: Arc<FinSSet>,
    pub source: Arc<FinSSet>,
    pub target: Arc<FinSSet>,
    /// Maps behind the cells, aligned with `complex` cell indices.
    pub cells: Vec<Vec<SSetMap>>,
    /// The products `X x Delta^k`, aligned by degree.
    pub products: Vec<Arc<FinSSet>>,
}

/// Materialize the mapping complex. `budget` bounds each degreewise map
/// enumeration.
pub fn internal_hom(x: &Arc<FinSSet>, y: &Arc<FinSSet>, budget: u64) -> Result<InternalHom> {
    let d = x.truncation();
    if y.truncation() != d {
        return Err(Error::DomainMismatch(format!(
            "mapping complex between truncations {d} and {}",
            y.truncation()
        )));
    }
    let mut products = Vec::with_capacity(d + 1);
    let mut cells: Vec<Vec<SSetMap>> = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let delta = standard(k, d);
        let (prod, _, _) = product(x, &delta)?;
        cells.push(mapset(&prod, y, budget)?);
        products.push(prod);
    }
    let index: Vec<BTreeMap<&[Vec<usize>], usize>> = cells
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, m)| (m.levels(), i)).collect())
        .collect();
    let names: Vec<Vec<String>> =
        (0..=d).map(|k| (0..cells[k].len()).map(|i| format!("m{i}")).collect()).collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for k in 1..=d {
        faces[k] = (0..=k)
            .map(|i| {
                let delta = standard_map(&SimplexMap::coface(k - 1, i).expect("i <= k"), d);
                let inc =
                    product_map(&SSetMap::identity(Arc::clone(x)), &delta, &products[k - 1], &products[k])?;
                cells[k]
                    .iter()
                    .map(|m| {
                        let composed = inc.then(m)?;
                        Ok(index[k - 1][composed.levels()])
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
    }
    let mut degens: Vec<Vec<Vec<usize>>> = vec![Vec::new(); d + 1];
    for k in 0..d {
        degens[k] = (0..=k)
            .map(|i| {
                let sigma = standard_map(&SimplexMap::codegeneracy(k, i).expect("i <= k"), d);
                let dec =
                    product_map(&SSetMap::identity(Arc::clone(x)), &sigma, &products[k + 1], &products[k])?;
                cells[k]
                    .iter()
                    .map(|m| {
                        let composed = dec.then(m)?;
                        Ok(index[k + 1][composed.levels()])
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
    }
    let complex = Arc::new(FinSSet::new(d, names, faces, degens)?);
    Ok(InternalHom {
        complex,
        source: Arc::clone(x),
        target: Arc::clone(y),
        cells,
        products,
    })
}

impl InternalHom {
    /// Evaluation at a vertex `v` of the source: the map
    /// `hom(X, Y) -> Y` reading each cell at `(v, id)`.
    pub fn evaluation_at_vertex(&self, v: usize) -> Result<SSetMap> {
        if v >= self.source.cells(0) {
            return Err(Error::IndexOutOfRange(format!("no vertex {v} in the hom source")));
        }
        let d = self.source.truncation();
        let levels: Vec<Vec<usize>> = (0..=d)
            .map(|k| {
                let delta = standard(k, d);
                let id_cell = delta
                    .cell_by_name(k, &(0..=k).map(|i| i.to_string()).collect::<Vec<_>>().join("."))
                    .expect("identity cell exists");
                let xv = self.source.degenerate_vertex(v, k);
                let pair = xv * delta.cells(k) + id_cell;
                self.cells[k].iter().map(|m| m.apply(k, pair)).collect()
            })
            .collect();
        SSetMap::new(Arc::clone(&self.complex), Arc::clone(&self.target), levels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::sset::nerve;

    #[test]
    fn hom_from_the_edge_into_a_nerve_has_frozen_counts() {
        let edge = standard(1, 2);
        let ni = nerve(&FinCategory::interval(), 2);
        let hom = internal_hom(&edge, &ni, 1_000_000).unwrap();
        // vertices of hom(edge, nerve) are the three maps edge -> nerve
        assert_eq!(hom.complex.cells(0), 3);
        let ev0 = hom.evaluation_at_vertex(0).unwrap();
        let ev1 = hom.evaluation_at_vertex(1).unwrap();
        // the two evaluations differ on the vertex picking out the arrow map
        let differs = (0..hom.complex.cells(0))
            .any(|c| ev0.apply(0, c) != ev1.apply(0, c));
        assert!(differs);
    }

    #[test]
    fn adjunction_counts_hold_on_small_instances() {
        let pt = standard(0, 2);
        let edge = standard(1, 2);
        let ni = nerve(&FinCategory::interval(), 2);
        let hom = internal_hom(&edge, &ni, 1_000_000).unwrap();
        // maps Z -> hom(X, Y) match maps Z x X -> Y
        for z in [&pt, &edge] {
            let into_hom = mapset(z, &hom.complex, 1_000_000).unwrap().len();
            let (zx, _, _) = product(z, &edge).unwrap();
            let direct = mapset(&zx, &ni, 1_000_000).unwrap().len();
            assert_eq!(into_hom, direct);
        }
    }

    #[test]
    fn hom_into_a_point_is_a_point() {
        let edge = standard(1, 2);
        let pt = standard(0, 2);
        let hom = internal_hom(&edge, &pt, 1_000_000).unwrap();
        for k in 0..=2 {
            assert_eq!(hom.complex.cells(k), 1);
        }
    }
}
