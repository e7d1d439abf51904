//! Segal conditions for simplicial spaces: each higher level is compared
//! with the fiber power of the edge level over the vertex level, either as
//! an isomorphism of complexes or on connected components.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::Result;
use crate::simplex::SimplexMap;
use crate::sset::{pi0, pi0_map, pullback, FinSSet, SSetMap};

use super::SimplicialSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegalMode {
    /// The spine comparison must be a levelwise bijection.
    Strict,
    /// The spine comparison must be a bijection on connected components.
    Pi0,
}

#[derive(Clone, Debug)]
pub struct SegalReport {
    pub passes: bool,
    /// Per outer degree `n >= 2`: compared sizes, inner degree by inner
    /// degree in strict mode, as a single component-count pair otherwise.
    pub comparisons: Vec<(usize, Vec<(usize, usize)>)>,
    pub failures: Vec<String>,
}

pub fn is_segal(x: &SimplicialSpace, mode: SegalMode) -> Result<SegalReport> {
    match mode {
        SegalMode::Strict => strict(x),
        SegalMode::Pi0 => components(x),
    }
}

fn strict(x: &SimplicialSpace) -> Result<SegalReport> {
    let n_outer = x.outer_truncation();
    let inner = x.inner_truncation();
    let mut comparisons = Vec::new();
    let mut failures = Vec::new();
    if n_outer < 2 {
        return Ok(SegalReport { passes: true, comparisons, failures });
    }
    let tgt = x.outer_face(1, 0);
    let src = x.outer_face(1, 1);
    let mut power: Arc<FinSSet> = x.level(1).clone();
    let mut last_edge = SSetMap::identity(power.clone());
    // One pair index per pullback stage, to resolve spine coordinates into
    // cells of the iterated power.
    let mut stage_pairs: Vec<Vec<BTreeMap<(usize, usize), usize>>> = Vec::new();
    for n in 2..=n_outer {
        let f = last_edge.then(tgt)?;
        let (p, q1, q2) = pullback(&f, src)?;
        let mut pair_index = vec![BTreeMap::new(); inner + 1];
        for j in 0..=inner {
            for c in 0..p.cells(j) {
                pair_index[j].insert((q1.apply(j, c), q2.apply(j, c)), c);
            }
        }
        stage_pairs.push(pair_index);
        last_edge = q2;
        power = p;
        let spine_maps: Vec<SSetMap> =
            (0..n).map(|i| x.outer_action(&SimplexMap::se(i, n)?)).collect::<Result<_>>()?;
        let mut levels = Vec::with_capacity(inner + 1);
        for j in 0..=inner {
            let mut row = Vec::with_capacity(x.level(n).cells(j));
            for c in 0..x.level(n).cells(j) {
                let mut idx = spine_maps[0].apply(j, c);
                for (s, m) in spine_maps.iter().enumerate().skip(1) {
                    idx = stage_pairs[s - 1][j][&(idx, m.apply(j, c))];
                }
                row.push(idx);
            }
            levels.push(row);
        }
        let cmp = SSetMap::new(x.level(n).clone(), power.clone(), levels)
            .expect("the spine comparison is simplicial");
        let counts: Vec<(usize, usize)> =
            (0..=inner).map(|j| (x.level(n).cells(j), power.cells(j))).collect();
        comparisons.push((n, counts));
        if !cmp.is_levelwise_bijective() {
            failures.push(format!(
                "level {n} is not isomorphic to the {n}-fold fiber power of the edge level"
            ));
        }
    }
    Ok(SegalReport { passes: failures.is_empty(), comparisons, failures })
}

fn components(x: &SimplicialSpace) -> Result<SegalReport> {
    let n_outer = x.outer_truncation();
    let mut comparisons = Vec::new();
    let mut failures = Vec::new();
    if n_outer < 2 {
        return Ok(SegalReport { passes: true, comparisons, failures });
    }
    let p1 = pi0(x.level(1));
    let tgt = pi0_map(x.outer_face(1, 0));
    let src = pi0_map(x.outer_face(1, 1));
    for n in 2..=n_outer {
        let pn = pi0(x.level(n));
        let spine_class: Vec<Vec<usize>> = (0..n)
            .map(|i| Ok(pi0_map(&x.outer_action(&SimplexMap::se(i, n)?)?)))
            .collect::<Result<_>>()?;
        let reached: Vec<Vec<usize>> = (0..pn.count)
            .map(|k| (0..n).map(|i| spine_class[i][k]).collect())
            .collect();
        let mut chains: Vec<Vec<usize>> = (0..p1.count).map(|c| vec![c]).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for chain in &chains {
                let last = *chain.last().expect("chains are nonempty");
                for c in 0..p1.count {
                    if src[c] == tgt[last] {
                        let mut longer = chain.clone();
                        longer.push(c);
                        next.push(longer);
                    }
                }
            }
            chains = next;
        }
        let reached_set: BTreeSet<&Vec<usize>> = reached.iter().collect();
        let chain_set: BTreeSet<&Vec<usize>> = chains.iter().collect();
        comparisons.push((n, vec![(pn.count, chains.len())]));
        if reached_set.len() != pn.count {
            failures.push(format!("level {n} has components with equal spines"));
        }
        if reached_set != chain_set {
            failures.push(format!(
                "level {n} components miss or exceed the compatible spine tuples"
            ));
        }
    }
    Ok(SegalReport { passes: failures.is_empty(), comparisons, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::sset::{delete_cell_upward, nerve};
    use crate::sspace::{constant_levels, discrete_levels, h_space};

    #[test]
    fn representables_are_segal_in_both_modes() {
        for n in 0..=2usize {
            let x = h_space(n, 3, 2);
            assert!(is_segal(&x, SegalMode::Strict).unwrap().passes, "h({n}) strict");
            assert!(is_segal(&x, SegalMode::Pi0).unwrap().passes, "h({n}) components");
        }
    }

    #[test]
    fn nerve_levels_are_segal() {
        for cat in [FinCategory::interval(), FinCategory::z2(), FinCategory::linear(3)] {
            let x = discrete_levels(&nerve(&cat, 2));
            let report = is_segal(&x, SegalMode::Strict).unwrap();
            assert!(report.passes, "{}: {:?}", cat.name(), report.failures);
        }
    }

    #[test]
    fn constant_spaces_are_segal() {
        let x = constant_levels(&nerve(&FinCategory::bar_interval(), 2), 3);
        assert!(is_segal(&x, SegalMode::Strict).unwrap().passes);
        assert!(is_segal(&x, SegalMode::Pi0).unwrap().passes);
    }

    #[test]
    fn deleting_a_composite_breaks_the_segal_condition() {
        let full = nerve(&FinCategory::linear(2), 2);
        let string = full.cell_by_name(2, "0->1|1->2").unwrap();
        let broken = delete_cell_upward(&full, 2, string).unwrap();
        let x = discrete_levels(&broken);
        let strict = is_segal(&x, SegalMode::Strict).unwrap();
        assert!(!strict.passes);
        // The only outer degree is 2, and the power has one more cell than
        // the level.
        let (n, counts) = &strict.comparisons[0];
        assert_eq!(*n, 2);
        assert_eq!(counts[0].1, counts[0].0 + 1);
        assert!(!is_segal(&x, SegalMode::Pi0).unwrap().passes);
    }
}
