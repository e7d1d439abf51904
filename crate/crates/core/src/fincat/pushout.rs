//! Pushouts of finite categories along object identifications.
//!
//! The glued category is presented by reduced words: alternating runs of
//! arrows from either side, with adjacent same-side composable letters
//! collapsed and identity letters dropped. Rewriting is confluent, so two
//! words denote the same morphism exactly when their reduced forms agree.
//! The word closure can be infinite (a cyclic gluing generates a free
//! monoid), so exploration is budgeted and overflow reports `NonTerminating`.

use std::collections::BTreeMap;

use super::{Arrow, FinCategory, Functor};
use crate::error::{Error, Result};

/// A letter is one non-identity arrow from side 0 (left) or side 1 (right).
type Letter = (u8, usize);

/// A morphism of the pushout: its source class plus a reduced word of
/// letters in application order (`word[0]` acts first).
type Morph = (usize, Vec<Letter>);

struct Glue<'a> {
    sides: [&'a FinCategory; 2],
    /// class of each object, indexed `side * stride + object`.
    class_of: Vec<usize>,
    class_count: usize,
    /// smallest `(side, object)` member of each class, for naming.
    class_rep: Vec<(u8, usize)>,
}

impl<'a> Glue<'a> {
    fn new(a: &'a FinCategory, b: &'a FinCategory, pairs: &[(usize, usize)]) -> Result<Self> {
        let (na, nb) = (a.object_count(), b.object_count());
        for &(x, y) in pairs {
            if x >= na || y >= nb {
                return Err(Error::IndexOutOfRange(format!(
                    "glue pair ({x}, {y}) outside object ranges {na} and {nb}"
                )));
            }
        }
        let mut parent: Vec<usize> = (0..na + nb).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for &(x, y) in pairs {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, na + y));
            if rx != ry {
                let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
                parent[hi] = lo;
            }
        }
        let mut class_of = vec![usize::MAX; na + nb];
        let mut class_rep = Vec::new();
        for i in 0..na + nb {
            let r = find(&mut parent, i);
            if class_of[r] == usize::MAX {
                class_of[r] = class_rep.len();
                let rep = if r < na { (0u8, r) } else { (1u8, r - na) };
                class_rep.push(rep);
            }
            class_of[i] = class_of[r];
        }
        let class_count = class_rep.len();
        Ok(Glue { sides: [a, b], class_of, class_count, class_rep })
    }

    fn object_class(&self, side: u8, object: usize) -> usize {
        let offset = if side == 0 { 0 } else { self.sides[0].object_count() };
        self.class_of[offset + object]
    }

    fn letter_src(&self, l: Letter) -> usize {
        self.object_class(l.0, self.sides[l.0 as usize].arrow(l.1).src)
    }

    fn letter_tgt(&self, l: Letter) -> usize {
        self.object_class(l.0, self.sides[l.0 as usize].arrow(l.1).tgt)
    }

    fn morph_tgt(&self, m: &Morph) -> usize {
        m.1.last().map_or(m.0, |&l| self.letter_tgt(l))
    }

    /// Collapse adjacent same-side composable letters and drop identities
    /// until no rewrite applies.
    fn reduce(&self, mut word: Vec<Letter>) -> Vec<Letter> {
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < word.len() {
                let (s, f) = word[i];
                let (t, g) = word[i + 1];
                let cat = self.sides[s as usize];
                // raw endpoint match, not class match: letters linked only
                // through a glued object do not compose inside one side
                if s == t && cat.arrow(f).tgt == cat.arrow(g).src {
                    let gf = cat.compose(g, f).expect("endpoints checked");
                    word.remove(i + 1);
                    if cat.is_identity_arrow(gf) {
                        word.remove(i);
                    } else {
                        word[i] = (s, gf);
                    }
                    changed = true;
                } else {
                    i += 1;
                }
            }
            if !changed {
                return word;
            }
        }
    }
}

/// Glue two categories along the object identifications in `pairs`,
/// returning the pushout with the two inclusion functors.
///
/// `budget` caps the number of word extensions explored; gluings whose
/// morphism closure is infinite surface as `NonTerminating`.
pub fn pushout_over_objects(
    a: &FinCategory,
    b: &FinCategory,
    pairs: &[(usize, usize)],
    budget: u64,
) -> Result<(FinCategory, Functor, Functor)> {
    let glue = Glue::new(a, b, pairs)?;

    let mut letters: Vec<Letter> = Vec::new();
    for side in 0..2u8 {
        let cat = glue.sides[side as usize];
        for i in 0..cat.arrow_count() {
            if !cat.is_identity_arrow(i) {
                letters.push((side, i));
            }
        }
    }

    // BFS over reduced words, extending on the right by one letter at a time.
    // Every prefix of a reduced word is reduced, so right extension from the
    // identities reaches every reduced word.
    let mut index: BTreeMap<Morph, usize> = BTreeMap::new();
    let mut morphs: Vec<Morph> = Vec::new();
    for class in 0..glue.class_count {
        let m = (class, Vec::new());
        index.insert(m.clone(), morphs.len());
        morphs.push(m);
    }
    let mut steps = 0u64;
    let mut head = 0;
    while head < morphs.len() {
        let current = morphs[head].clone();
        head += 1;
        let tgt = glue.morph_tgt(&current);
        for &l in &letters {
            if glue.letter_src(l) != tgt {
                continue;
            }
            steps += 1;
            if steps > budget {
                return Err(Error::NonTerminating(format!(
                    "pushout word closure exceeded {budget} extensions; the gluing likely \
                     generates infinitely many morphisms"
                )));
            }
            let mut word = current.1.clone();
            word.push(l);
            let next = (current.0, glue.reduce(word));
            if !index.contains_key(&next) {
                index.insert(next.clone(), morphs.len());
                morphs.push(next);
            }
        }
    }

    let objects: Vec<String> = (0..glue.class_count)
        .map(|c| {
            let (side, obj) = glue.class_rep[c];
            let tag = if side == 0 { "l" } else { "r" };
            format!("{tag}.{}", glue.sides[side as usize].objects()[obj])
        })
        .collect();
    let letter_name = |l: Letter| {
        let tag = if l.0 == 0 { "l" } else { "r" };
        format!("{tag}.{}", glue.sides[l.0 as usize].arrow(l.1).name)
    };
    let arrows: Vec<Arrow> = morphs
        .iter()
        .map(|m| {
            let name = if m.1.is_empty() {
                format!("id_{}", objects[m.0])
            } else {
                m.1.iter().map(|&l| letter_name(l)).collect::<Vec<_>>().join("+")
            };
            Arrow { name, src: m.0, tgt: glue.morph_tgt(m) }
        })
        .collect();
    let identities: Vec<usize> = (0..glue.class_count).collect();

    let mut compose = BTreeMap::new();
    for (gi, g) in morphs.iter().enumerate() {
        for (fi, f) in morphs.iter().enumerate() {
            if glue.morph_tgt(f) != g.0 {
                continue;
            }
            let mut word = f.1.clone();
            word.extend_from_slice(&g.1);
            let key = (f.0, glue.reduce(word));
            let Some(&c) = index.get(&key) else {
                return Err(Error::IllFormedQuotient(
                    "pushout closure missed a reduced composite".into(),
                ));
            };
            compose.insert((gi, fi), c);
        }
    }

    let pushout = FinCategory::new("pushout", objects, arrows, identities, compose)?;

    let inclusion = |side: u8| -> Result<Functor> {
        let cat = glue.sides[side as usize];
        let object_map: Vec<usize> =
            (0..cat.object_count()).map(|x| glue.object_class(side, x)).collect();
        let arrow_map: Vec<usize> = (0..cat.arrow_count())
            .map(|i| {
                let m = if cat.is_identity_arrow(i) {
                    (glue.object_class(side, cat.arrow(i).src), Vec::new())
                } else {
                    (glue.object_class(side, cat.arrow(i).src), vec![(side, i)])
                };
                index[&m]
            })
            .collect();
        Functor::new(cat, &pushout, object_map, arrow_map)
    };
    let inc_a = inclusion(0)?;
    let inc_b = inclusion(1)?;
    Ok((pushout, inc_a, inc_b))
}
