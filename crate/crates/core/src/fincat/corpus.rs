//! Exhaustive generation of small categories up to isomorphism, plus a
//! seeded supply of relative categories for randomized sweeps.
//!
//! Categories are built by fixing an arrow layout (identities first, then
//! extra arrows sorted by their (source, target) slot) and backtracking
//! over composition tables with incremental associativity pruning. Each
//! completed table is kept only if it is the lexicographically least
//! representative of its relabeling orbit, so the output is duplicate-free.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Arrow, FinCategory, RelCategory};
use crate::error::Result;

/// All categories with at most `max_objects` objects and `max_arrows`
/// arrows (identities included), one representative per isomorphism class,
/// in a deterministic order.
pub fn generate_categories(max_objects: usize, max_arrows: usize) -> Vec<FinCategory> {
    let mut out = Vec::new();
    out.push(FinCategory::empty());
    for nobj in 1..=max_objects {
        if nobj > max_arrows {
            break;
        }
        for extra in 0..=(max_arrows - nobj) {
            for slots in slot_assignments(nobj, extra) {
                generate_with_slots(nobj, &slots, &mut out);
            }
        }
    }
    for (i, cat) in out.iter_mut().enumerate() {
        *cat = cat.clone().with_name(format!("g{i}"));
    }
    out
}

/// Nondecreasing sequences of `extra` slots, each slot a (src, tgt) pair
/// encoded as `src * nobj + tgt`.
fn slot_assignments(nobj: usize, extra: usize) -> Vec<Vec<usize>> {
    let nslots = nobj * nobj;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(nslots: usize, extra: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == extra {
            out.push(current.clone());
            return;
        }
        for s in start..nslots {
            current.push(s);
            rec(nslots, extra, s, current, out);
            current.pop();
        }
    }
    rec(nslots, extra, 0, &mut current, &mut out);
    out
}

struct TableSearch {
    nobj: usize,
    /// per arrow: (src, tgt); identities occupy indices 0..nobj.
    ends: Vec<(usize, usize)>,
    /// free composition cells (g, f) in assignment order.
    cells: Vec<(usize, usize)>,
    /// partial table; identity compositions prefilled.
    table: Vec<Vec<Option<usize>>>,
    /// arrows per slot, ascending.
    by_slot: BTreeMap<(usize, usize), Vec<usize>>,
}

fn generate_with_slots(nobj: usize, slots: &[usize], out: &mut Vec<FinCategory>) {
    let mut ends: Vec<(usize, usize)> = (0..nobj).map(|x| (x, x)).collect();
    for &s in slots {
        ends.push((s / nobj, s % nobj));
    }
    let narr = ends.len();
    let mut by_slot: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, &e) in ends.iter().enumerate() {
        by_slot.entry(e).or_default().push(i);
    }
    let mut table = vec![vec![None; narr]; narr];
    let mut cells = Vec::new();
    for g in 0..narr {
        for f in 0..narr {
            if ends[f].1 != ends[g].0 {
                continue;
            }
            if f < nobj {
                table[g][f] = Some(g);
            } else if g < nobj {
                table[g][f] = Some(f);
            } else {
                cells.push((g, f));
            }
        }
    }
    let mut search = TableSearch { nobj, ends, cells, table, by_slot };
    search.assign(0, out);
}

impl TableSearch {
    fn assign(&mut self, depth: usize, out: &mut Vec<FinCategory>) {
        if depth == self.cells.len() {
            self.emit(out);
            return;
        }
        let (g, f) = self.cells[depth];
        let slot = (self.ends[f].0, self.ends[g].1);
        let candidates = self.by_slot.get(&slot).cloned().unwrap_or_default();
        for c in candidates {
            self.table[g][f] = Some(c);
            if self.associative_so_far() {
                self.assign(depth + 1, out);
            }
            self.table[g][f] = None;
        }
    }

    /// Check every triple whose three products are all defined.
    fn associative_so_far(&self) -> bool {
        let narr = self.ends.len();
        for h in 0..narr {
            for g in 0..narr {
                if self.ends[g].1 != self.ends[h].0 {
                    continue;
                }
                let Some(hg) = self.table[h][g] else { continue };
                for f in 0..narr {
                    if self.ends[f].1 != self.ends[g].0 {
                        continue;
                    }
                    let Some(gf) = self.table[g][f] else { continue };
                    let (Some(left), Some(right)) = (self.table[h][gf], self.table[hg][f]) else {
                        continue;
                    };
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn emit(&self, out: &mut Vec<FinCategory>) {
        if !self.is_canonical() {
            return;
        }
        let narr = self.ends.len();
        let objects: Vec<String> = (0..self.nobj).map(|x| format!("x{x}")).collect();
        let arrows: Vec<Arrow> = (0..narr)
            .map(|i| {
                let (src, tgt) = self.ends[i];
                let name = if i < self.nobj { format!("id{i}") } else { format!("f{}", i - self.nobj) };
                Arrow { name, src, tgt }
            })
            .collect();
        let identities: Vec<usize> = (0..self.nobj).collect();
        let mut compose = BTreeMap::new();
        for g in 0..narr {
            for f in 0..narr {
                if let Some(c) = self.table[g][f] {
                    compose.insert((g, f), c);
                }
            }
        }
        let cat = FinCategory::new("candidate", objects, arrows, identities, compose)
            .expect("search output satisfies the category laws");
        out.push(cat);
    }

    /// Signature of the current complete table under the identity relabeling.
    fn signature(&self, object_perm: &[usize], arrow_perm: &[usize]) -> Vec<usize> {
        // arrow_perm[i] = new index of old arrow i; table entries remapped
        // and flattened in new-index lex order over composable pairs.
        let narr = self.ends.len();
        let mut inverse = vec![0; narr];
        for (old, &new) in arrow_perm.iter().enumerate() {
            inverse[new] = old;
        }
        let new_ends: Vec<(usize, usize)> = (0..narr)
            .map(|new| {
                let (s, t) = self.ends[inverse[new]];
                (object_perm[s], object_perm[t])
            })
            .collect();
        let mut sig = Vec::new();
        for &(s, t) in new_ends.iter().skip(self.nobj) {
            sig.push(s * self.nobj + t);
        }
        for g in 0..narr {
            for f in 0..narr {
                if new_ends[f].1 != new_ends[g].0 {
                    continue;
                }
                let c = self.table[inverse[g]][inverse[f]].expect("table complete");
                sig.push(arrow_perm[c]);
            }
        }
        sig
    }

    /// A table is canonical when no relabeling produces a smaller signature.
    fn is_canonical(&self) -> bool {
        let narr = self.ends.len();
        let base = self.signature(&(0..self.nobj).collect::<Vec<_>>(), &(0..narr).collect::<Vec<_>>());
        for object_perm in permutations(self.nobj) {
            // relabeled non-identity arrows regroup by their new slots; every
            // ordering within a slot group is a legal arrow relabeling
            let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            for i in self.nobj..narr {
                let (s, t) = self.ends[i];
                groups.entry((object_perm[s], object_perm[t])).or_default().push(i);
            }
            let group_list: Vec<Vec<usize>> = groups.into_values().collect();
            for within in per_group_permutations(&group_list) {
                let mut arrow_perm = vec![0; narr];
                for x in 0..self.nobj {
                    arrow_perm[x] = object_perm[x];
                }
                let mut next = self.nobj;
                for member in within {
                    arrow_perm[member] = next;
                    next += 1;
                }
                if self.signature(&object_perm, &arrow_perm) < base {
                    return false;
                }
            }
        }
        true
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out.sort();
    out
}

/// Concatenated orderings: every way of permuting each group internally,
/// flattened group by group.
fn per_group_permutations(groups: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for group in groups {
        let perms = permutations(group.len());
        let mut next = Vec::new();
        for prefix in &out {
            for perm in &perms {
                let mut row = prefix.clone();
                row.extend(perm.iter().map(|&i| group[i]));
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// Deterministic pseudo-random relative categories: small posets with a
/// composition-closed class of marked arrows.
pub fn seeded_relative_categories(seed: u64, count: usize) -> Result<Vec<RelCategory>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for k in 0..count {
        let nobj = rng.gen_range(2..=3usize);
        // random strict order on 0..nobj (as a DAG on i < j), then its
        // reflexive-transitive closure as the hom relation
        let mut rel = vec![vec![false; nobj]; nobj];
        for i in 0..nobj {
            rel[i][i] = true;
            for j in (i + 1)..nobj {
                if rng.gen_bool(0.5) {
                    rel[i][j] = true;
                }
            }
        }
        for m in 0..nobj {
            for i in 0..nobj {
                for j in 0..nobj {
                    if rel[i][m] && rel[m][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
        let cat = poset_category(&format!("rel{k}"), &rel)?;
        // mark a random arrow set, then close under composition
        let mut weq: BTreeSet<usize> = (0..cat.object_count()).map(|x| cat.identity_of(x)).collect();
        for i in 0..cat.arrow_count() {
            if !cat.is_identity_arrow(i) && rng.gen_bool(0.5) {
                weq.insert(i);
            }
        }
        loop {
            let mut grew = false;
            let pairs: Vec<(usize, usize)> = weq
                .iter()
                .flat_map(|&g| weq.iter().map(move |&f| (g, f)))
                .filter(|&(g, f)| cat.arrow(f).tgt == cat.arrow(g).src)
                .collect();
            for (g, f) in pairs {
                let c = cat.compose(g, f)?;
                if weq.insert(c) {
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        out.push(RelCategory::new(cat, weq)?);
    }
    Ok(out)
}

/// The category of a reflexive-transitive relation: one arrow `i->j` per
/// related pair.
fn poset_category(name: &str, rel: &[Vec<bool>]) -> Result<FinCategory> {
    let n = rel.len();
    let objects: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut arrows = Vec::new();
    let mut arrow_index = BTreeMap::new();
    for i in 0..n {
        arrow_index.insert((i, i), arrows.len());
        arrows.push(Arrow { name: format!("e{i}_{i}"), src: i, tgt: i });
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && rel[i][j] {
                arrow_index.insert((i, j), arrows.len());
                arrows.push(Arrow { name: format!("e{i}_{j}"), src: i, tgt: j });
            }
        }
    }
    let identities: Vec<usize> = (0..n).collect();
    let mut compose = BTreeMap::new();
    for (&(i, j), &f) in &arrow_index {
        for (&(j2, k), &g) in &arrow_index {
            if j == j2 {
                compose.insert((g, f), arrow_index[&(i, k)]);
            }
        }
    }
    FinCategory::new(name, objects, arrows, identities, compose)
}
