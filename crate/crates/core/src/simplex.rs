//! The simplex category at desk scale: monotone maps between finite
//! ordinals `[n] = {0 < 1 < ... < n}`, their generators and identities, and
//! the automorphism group of a truncation.
//!
//! Maps are stored as full image sequences, so equality, composition, and
//! enumeration are table operations. Enumeration order is lexicographic on
//! image sequences everywhere; callers rely on that for determinism.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::DEFAULT_ENUM_BUDGET;

/// A monotone map `[domain] -> [codomain]`, stored as its image sequence.
///
/// Invariants: `images.len() == domain + 1`, entries weakly increasing,
/// every entry `<= codomain`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimplexMap {
    domain: usize,
    codomain: usize,
    images: Vec<usize>,
}

impl SimplexMap {
    /// Validating constructor.
    pub fn new(domain: usize, codomain: usize, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain + 1 {
            return Err(Error::invalid(
                "simplex map",
                format!("expected {} images, got {}", domain + 1, images.len()),
            ));
        }
        for w in images.windows(2) {
            if w[0] > w[1] {
                return Err(Error::invalid(
                    "simplex map",
                    format!("images not weakly increasing: {} > {}", w[0], w[1]),
                ));
            }
        }
        if let Some(&last) = images.last() {
            if last > codomain {
                return Err(Error::IndexOutOfRange(format!(
                    "image {last} exceeds codomain {codomain}"
                )));
            }
        }
        Ok(SimplexMap { domain, codomain, images })
    }

    pub fn identity(n: usize) -> Self {
        SimplexMap { domain: n, codomain: n, images: (0..=n).collect() }
    }

    /// Coface `delta_i : [n] -> [n+1]`, the injection missing `i`.
    pub fn coface(n: usize, i: usize) -> Result<Self> {
        if i > n + 1 {
            return Err(Error::IndexOutOfRange(format!("coface index {i} > {}", n + 1)));
        }
        let images = (0..=n).map(|k| if k < i { k } else { k + 1 }).collect();
        Ok(SimplexMap { domain: n, codomain: n + 1, images })
    }

    /// Codegeneracy `sigma_i : [n+1] -> [n]`, the surjection hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(Error::IndexOutOfRange(format!("codegeneracy index {i} > {n}")));
        }
        let images = (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect();
        Ok(SimplexMap { domain: n + 1, codomain: n, images })
    }

    /// The edge inclusion `se_i : [1] -> [n]` sending `0, 1` to `i, i + 1`.
    ///
    /// These are the spine edges: every `[1] -> [n]` hitting consecutive
    /// vertices is one of them, and every map factors through composites of
    /// them and vertex maps.
    pub fn se(i: usize, n: usize) -> Result<Self> {
        if n == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange(format!("se({i}) needs {} <= {n}", i + 1)));
        }
        Ok(SimplexMap { domain: 1, codomain: n, images: vec![i, i + 1] })
    }

    /// The vertex `[0] -> [n]` hitting `i`.
    pub fn vertex(i: usize, n: usize) -> Result<Self> {
        if i > n {
            return Err(Error::IndexOutOfRange(format!("vertex {i} > {n}")));
        }
        Ok(SimplexMap { domain: 0, codomain: n, images: vec![i] })
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Evaluate at a point of the domain ordinal.
    pub fn apply(&self, k: usize) -> Result<usize> {
        self.images
            .get(k)
            .copied()
            .ok_or_else(|| Error::IndexOutOfRange(format!("point {k} > {}", self.domain)))
    }

    /// Diagram-order composition: `self` then `g`.
    pub fn then(&self, g: &SimplexMap) -> Result<SimplexMap> {
        if self.codomain != g.domain {
            return Err(Error::DomainMismatch(format!(
                "cannot compose {self} with {g}: codomain {} != domain {}",
                self.codomain, g.domain
            )));
        }
        let images = self.images.iter().map(|&k| g.images[k]).collect();
        Ok(SimplexMap { domain: self.domain, codomain: g.codomain, images })
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// Conjugation by the order reversals of domain and codomain:
    /// `reverse(f)(k) = codomain - f(domain - k)`.
    ///
    /// This is an involution and extends to the nontrivial automorphism of
    /// the simplex category.
    pub fn reverse(&self) -> SimplexMap {
        let images = (0..=self.domain).map(|k| self.codomain - self.images[self.domain - k]).collect();
        SimplexMap { domain: self.domain, codomain: self.codomain, images }
    }

    /// Factor into generating cofaces and codegeneracies, in diagram order:
    /// the left-to-right composite of the returned list equals `self`, with
    /// codegeneracies first (the epi-mono factorization). The identity
    /// factors as the empty list.
    pub fn factor(&self) -> Vec<SimplexMap> {
        let mut gens = Vec::new();
        let mut current = self.clone();
        // A repeated value splits off a codegeneracy on the domain side.
        while let Some(t) = (0..current.domain).find(|&t| current.images[t] == current.images[t + 1]) {
            gens.push(SimplexMap::codegeneracy(current.domain - 1, t).expect("index in range"));
            current.images.remove(t + 1);
            current.domain -= 1;
        }
        // Now injective: each missing value splits off a coface on the
        // codomain side. Peeling collects them outermost first.
        let mut monos = Vec::new();
        while current.domain < current.codomain {
            let v = (0..=current.codomain)
                .find(|v| !current.images.contains(v))
                .expect("a non-surjective map misses some value");
            monos.push(SimplexMap::coface(current.codomain - 1, v).expect("index in range"));
            for img in current.images.iter_mut() {
                if *img > v {
                    *img -= 1;
                }
            }
            current.codomain -= 1;
        }
        monos.reverse();
        gens.extend(monos);
        gens
    }
}

impl fmt::Display for SimplexMap {
    /// Text form `n->m:[i0,...,in]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images.iter().map(|i| i.to_string()).collect();
        write!(f, "{}->{}:[{}]", self.domain, self.codomain, imgs.join(","))
    }
}

impl FromStr for SimplexMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid("simplex map text", format!("cannot parse {s:?}"));
        let (dom, rest) = s.split_once("->").ok_or_else(bad)?;
        let (cod, imgs) = rest.split_once(':').ok_or_else(bad)?;
        let imgs = imgs.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let domain: usize = dom.trim().parse().map_err(|_| bad())?;
        let codomain: usize = cod.trim().parse().map_err(|_| bad())?;
        let images = if imgs.trim().is_empty() {
            Vec::new()
        } else {
            imgs.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        SimplexMap::new(domain, codomain, images)
    }
}

/// `|Hom([n], [m])| = binomial(n + m + 1, n + 1)`, the number of weakly
/// increasing `(n+1)`-sequences valued in `{0..m}`.
pub fn hom_count(n: usize, m: usize) -> u128 {
    binomial((n + m + 1) as u128, (n + 1) as u128)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All monotone maps `[n] -> [m]` in lexicographic order on image sequences.
///
/// The count is checked against `budget` before enumeration starts.
pub fn enumerate_maps(n: usize, m: usize, budget: u64) -> Result<Vec<SimplexMap>> {
    let count = hom_count(n, m);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded(format!(
            "|Hom([{n}],[{m}])| = {count} exceeds budget {budget}"
        )));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut images = vec![0usize; n + 1];
    loop {
        out.push(SimplexMap { domain: n, codomain: m, images: images.clone() });
        // next weakly increasing sequence in lexicographic order
        let mut k = n + 1;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if images[k] < m {
                let v = images[k] + 1;
                for img in images.iter_mut().skip(k) {
                    *img = v;
                }
                break;
            }
        }
    }
}

/// Convenience wrapper with the default enumeration budget.
pub fn enumerate_maps_default(n: usize, m: usize) -> Result<Vec<SimplexMap>> {
    enumerate_maps(n, m, DEFAULT_ENUM_BUDGET)
}

/// An object-fixing automorphism of the simplex category truncated at
/// `max_degree`, acting bijectively on every hom-set.
///
/// Such a functor is determined by its action on vertex maps `[0] -> [n]`,
/// i.e. by one permutation per object; a general map `f` goes to
/// `pi_m o f o pi_n^{-1}`. The search in [`automorphisms`] enumerates all
/// permutation tuples and keeps those whose conjugation action preserves
/// monotonicity, then re-verifies functoriality on every composable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaAutomorphism {
    max_degree: usize,
    /// `vertex_perms[n][i]` = image of vertex `i` of `[n]`.
    vertex_perms: Vec<Vec<usize>>,
}

impl DeltaAutomorphism {
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn vertex_perms(&self) -> &[Vec<usize>] {
        &self.vertex_perms
    }

    /// Apply to a map with both endpoints inside the truncation.
    pub fn apply(&self, f: &SimplexMap) -> Result<SimplexMap> {
        let (n, m) = (f.domain(), f.codomain());
        if n > self.max_degree || m > self.max_degree {
            return Err(Error::IndexOutOfRange(format!(
                "map {f} outside truncation {}",
                self.max_degree
            )));
        }
        let pn = &self.vertex_perms[n];
        let pm = &self.vertex_perms[m];
        let mut inv = vec![0usize; n + 1];
        for (i, &v) in pn.iter().enumerate() {
            inv[v] = i;
        }
        let images: Vec<usize> = (0..=n).map(|k| pm[f.images[inv[k]]]).collect();
        SimplexMap::new(n, m, images)
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_perms.iter().all(|p| p.iter().enumerate().all(|(i, &v)| i == v))
    }

    /// Composition (`self` then `other`), defined on the common truncation.
    pub fn then(&self, other: &DeltaAutomorphism) -> DeltaAutomorphism {
        let d = self.max_degree.min(other.max_degree);
        let vertex_perms = (0..=d)
            .map(|n| (0..=n).map(|i| other.vertex_perms[n][self.vertex_perms[n][i]]).collect())
            .collect();
        DeltaAutomorphism { max_degree: d, vertex_perms }
    }

    /// Mapping table on `Hom([n],[m])`: position `k` holds the index (in
    /// lexicographic enumeration order) of the image of the `k`-th map.
    pub fn table(&self, n: usize, m: usize) -> Result<Vec<usize>> {
        let maps = enumerate_maps_default(n, m)?;
        let mut out = Vec::with_capacity(maps.len());
        for f in &maps {
            let g = self.apply(f)?;
            let idx = maps.binary_search(&g).map_err(|_| {
                Error::invalid("automorphism", format!("image {g} not found in hom-set"))
            })?;
            out.push(idx);
        }
        Ok(out)
    }

    /// All mapping tables within the truncation, keyed by `(domain, codomain)`.
    pub fn tables(&self) -> Result<std::collections::BTreeMap<(usize, usize), Vec<usize>>> {
        let mut out = std::collections::BTreeMap::new();
        for n in 0..=self.max_degree {
            for m in 0..=self.max_degree {
                out.insert((n, m), self.table(n, m)?);
            }
        }
        Ok(out)
    }
}

fn permutations_lex(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

/// Exhaustive search for object-fixing automorphisms of the truncated
/// simplex category.
///
/// Candidates range over all tuples of vertex permutations (one per object,
/// every hom-set bijection compatible with vertices arises this way because
/// maps are determined by their vertex composites). A candidate survives if
/// conjugation keeps every hom-set inside itself; survivors are then
/// re-verified to preserve identities and all compositions within the
/// truncation. Expected result at every degree: identity and order reversal.
pub fn automorphisms(max_degree: usize, budget: u64) -> Result<Vec<DeltaAutomorphism>> {
    let mut tuple_count: u128 = 1;
    for n in 0..=max_degree {
        tuple_count = tuple_count.saturating_mul(factorial(n + 1));
    }
    if tuple_count > budget as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{tuple_count} permutation tuples exceed budget {budget}"
        )));
    }

    let perms_per_degree: Vec<Vec<Vec<usize>>> = (0..=max_degree).map(|n| permutations_lex(n + 1)).collect();
    let homs: Vec<Vec<Vec<SimplexMap>>> = (0..=max_degree)
        .map(|n| (0..=max_degree).map(|m| enumerate_maps_default(n, m).expect("within budget")).collect())
        .collect();

    let mut found = Vec::new();
    let mut choice = vec![0usize; max_degree + 1];
    'outer: loop {
        let candidate = DeltaAutomorphism {
            max_degree,
            vertex_perms: (0..=max_degree).map(|n| perms_per_degree[n][choice[n]].clone()).collect(),
        };
        if closes_hom_sets(&candidate, &homs) && preserves_composition(&candidate, &homs) {
            found.push(candidate);
        }
        // advance the mixed-radix choice vector
        let mut n = max_degree + 1;
        loop {
            if n == 0 {
                break 'outer;
            }
            n -= 1;
            choice[n] += 1;
            if choice[n] < perms_per_degree[n].len() {
                break;
            }
            choice[n] = 0;
        }
    }
    Ok(found)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Conjugation keeps every hom-set monotone.
fn closes_hom_sets(a: &DeltaAutomorphism, homs: &[Vec<Vec<SimplexMap>>]) -> bool {
    for row in homs {
        for hom in row {
            for f in hom {
                if a.apply(f).is_err() {
                    return false;
                }
            }
        }
    }
    true
}

/// Identities map to identities and `F(g o f) = F(g) o F(f)` on all
/// composable pairs within the truncation.
fn preserves_composition(a: &DeltaAutomorphism, homs: &[Vec<Vec<SimplexMap>>]) -> bool {
    let d = a.max_degree;
    for n in 0..=d {
        match a.apply(&SimplexMap::identity(n)) {
            Ok(img) if img.is_identity() => {}
            _ => return false,
        }
    }
    for n in 0..=d {
        for m in 0..=d {
            for f in &homs[n][m] {
                let fa = match a.apply(f) {
                    Ok(v) => v,
                    Err(_) => return false,
                };
                for p in 0..=d {
                    for g in &homs[m][p] {
                        let lhs = a.apply(&f.then(g).expect("composable"));
                        let ga = a.apply(g);
                        match (lhs, ga) {
                            (Ok(lhs), Ok(ga)) => {
                                if lhs != fa.then(&ga).expect("composable") {
                                    return false;
                                }
                            }
                            _ => return false,
                        }
                    }
                }
            }
        }
    }
    true
}
