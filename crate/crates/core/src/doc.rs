//! JSON documents: every object the tooling reads or writes has a stable,
//! schema-tagged document form. Printing is deterministic (sorted keys,
//! fixed field order), and parse-then-print is byte-identical on documents
//! the crate itself produced.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{Arrow, FinCategory, RelCategory};
use crate::simplex::SimplexMap;
use crate::sset::{FinSSet, SSetMap};
use crate::sspace::SimplicialSpace;

pub const SSET_SCHEMA: &str = "deltakit/sset/v1";
pub const CATEGORY_SCHEMA: &str = "deltakit/category/v1";
pub const SPACE_SCHEMA: &str = "deltakit/space/v1";
pub const REPORT_SCHEMA: &str = "deltakit/report/v1";
pub const BATCH_SCHEMA: &str = "deltakit/batch/v1";

/// A truncated complex document: cell names plus face and degeneracy tables,
/// all keyed by degree.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SSetDoc {
    #[serde(rename = "$schema", default)]
    pub schema: String,
    pub truncation: usize,
    pub cells: BTreeMap<String, Vec<String>>,
    pub faces: BTreeMap<String, Vec<Vec<usize>>>,
    pub degens: BTreeMap<String, Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<serde_json::Value>,
}

pub fn sset_to_doc(x: &FinSSet) -> SSetDoc {
    let d = x.truncation();
    let cells = (0..=d).map(|n| (n.to_string(), x.names_at(n).to_vec())).collect();
    let faces = (1..=d)
        .map(|n| {
            let rows: Vec<Vec<usize>> =
                (0..=n).map(|i| (0..x.cells(n)).map(|c| x.face(n, i, c)).collect()).collect();
            (n.to_string(), rows)
        })
        .collect();
    let degens = (0..d)
        .map(|n| {
            let rows: Vec<Vec<usize>> =
                (0..=n).map(|i| (0..x.cells(n)).map(|c| x.degen(n, i, c)).collect()).collect();
            (n.to_string(), rows)
        })
        .collect();
    SSetDoc {
        schema: SSET_SCHEMA.to_string(),
        truncation: d,
        cells,
        faces,
        degens,
        provenance: None,
    }
}

pub fn sset_from_doc(doc: &SSetDoc) -> Result<Arc<FinSSet>> {
    let d = doc.truncation;
    let mut names = Vec::with_capacity(d + 1);
    for n in 0..=d {
        names.push(
            doc.cells
                .get(&n.to_string())
                .ok_or_else(|| Error::invalid("doc", format!("missing cells at degree {n}")))?
                .clone(),
        );
    }
    let mut faces = vec![Vec::new(); d + 1];
    for n in 1..=d {
        faces[n] = doc
            .faces
            .get(&n.to_string())
            .ok_or_else(|| Error::invalid("doc", format!("missing faces at degree {n}")))?
            .clone();
    }
    let mut degens = vec![Vec::new(); d + 1];
    for n in 0..d {
        degens[n] = doc
            .degens
            .get(&n.to_string())
            .ok_or_else(|| Error::invalid("doc", format!("missing degeneracies at degree {n}")))?
            .clone();
    }
    Ok(Arc::new(FinSSet::new(d, names, faces, degens)?))
}

/// A map between complexes as per-degree assignments. Source and target are
/// carried by position in the enclosing document.
pub type MapBody = BTreeMap<String, Vec<usize>>;

fn map_to_body(f: &SSetMap) -> MapBody {
    f.levels().iter().enumerate().map(|(n, row)| (n.to_string(), row.clone())).collect()
}

fn map_from_body(
    body: &MapBody,
    source: &Arc<FinSSet>,
    target: &Arc<FinSSet>,
) -> Result<SSetMap> {
    let d = source.truncation();
    let mut levels = Vec::with_capacity(d + 1);
    for n in 0..=d {
        levels.push(
            body.get(&n.to_string())
                .ok_or_else(|| Error::invalid("doc", format!("missing map row at degree {n}")))?
                .clone(),
        );
    }
    SSetMap::new(Arc::clone(source), Arc::clone(target), levels)
}

/// A finite category document; a relative category adds the `weq` list.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CategoryDoc {
    #[serde(rename = "$schema", default)]
    pub schema: String,
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    /// Object index (as a key) to identity arrow index.
    pub identities: BTreeMap<String, usize>,
    /// Triples `[g, f, g.f]` over all composable pairs, sorted.
    pub compose: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weq: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowDoc {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

pub fn category_to_doc(a: &FinCategory) -> CategoryDoc {
    let arrows = a
        .arrows()
        .iter()
        .map(|f| ArrowDoc { id: f.name.clone(), src: f.src, tgt: f.tgt })
        .collect();
    let identities =
        (0..a.object_count()).map(|x| (x.to_string(), a.identity_of(x))).collect();
    let mut compose = Vec::new();
    for g in 0..a.arrow_count() {
        for f in 0..a.arrow_count() {
            if let Ok(gf) = a.compose(g, f) {
                compose.push([g, f, gf]);
            }
        }
    }
    compose.sort_unstable();
    CategoryDoc {
        schema: CATEGORY_SCHEMA.to_string(),
        name: a.name().to_string(),
        objects: a.objects().to_vec(),
        arrows,
        identities,
        compose,
        weq: None,
    }
}

pub fn relcategory_to_doc(r: &RelCategory) -> CategoryDoc {
    let mut doc = category_to_doc(r.category());
    doc.weq = Some(r.weq().iter().copied().collect());
    doc
}

pub fn category_from_doc(doc: &CategoryDoc) -> Result<FinCategory> {
    let arrows: Vec<Arrow> = doc
        .arrows
        .iter()
        .map(|a| Arrow { name: a.id.clone(), src: a.src, tgt: a.tgt })
        .collect();
    let mut identities = Vec::with_capacity(doc.objects.len());
    for x in 0..doc.objects.len() {
        identities.push(
            *doc.identities
                .get(&x.to_string())
                .ok_or_else(|| Error::invalid("doc", format!("missing identity of object {x}")))?,
        );
    }
    let compose: BTreeMap<(usize, usize), usize> =
        doc.compose.iter().map(|&[g, f, gf]| ((g, f), gf)).collect();
    FinCategory::new(&doc.name, doc.objects.clone(), arrows, identities, compose)
}

pub fn relcategory_from_doc(doc: &CategoryDoc) -> Result<RelCategory> {
    let category = category_from_doc(doc)?;
    let weq: BTreeSet<usize> = doc
        .weq
        .as_ref()
        .ok_or_else(|| Error::invalid("doc", "no weq list in the document".to_string()))?
        .iter()
        .copied()
        .collect();
    RelCategory::new(category, weq)
}

/// A simplicial space document: level complexes plus outer structure maps.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpaceDoc {
    #[serde(rename = "$schema", default)]
    pub schema: String,
    #[serde(rename = "outerTruncation")]
    pub outer_truncation: usize,
    pub levels: Vec<SSetDoc>,
    #[serde(rename = "outerFaces")]
    pub outer_faces: Vec<Vec<MapBody>>,
    #[serde(rename = "outerDegens")]
    pub outer_degens: Vec<Vec<MapBody>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<serde_json::Value>,
}

pub fn space_to_doc(x: &SimplicialSpace) -> SpaceDoc {
    let outer = x.outer_truncation();
    let levels = (0..=outer).map(|n| sset_to_doc(x.level(n))).collect();
    let mut outer_faces = vec![Vec::new(); outer + 1];
    for n in 1..=outer {
        outer_faces[n] = (0..=n).map(|i| map_to_body(x.outer_face(n, i))).collect();
    }
    let mut outer_degens = vec![Vec::new(); outer + 1];
    for n in 0..outer {
        outer_degens[n] = (0..=n).map(|i| map_to_body(x.outer_degen(n, i))).collect();
    }
    SpaceDoc {
        schema: SPACE_SCHEMA.to_string(),
        outer_truncation: outer,
        levels,
        outer_faces,
        outer_degens,
        provenance: None,
    }
}

pub fn space_from_doc(doc: &SpaceDoc) -> Result<SimplicialSpace> {
    let outer = doc.outer_truncation;
    if doc.levels.len() != outer + 1 {
        return Err(Error::invalid(
            "doc",
            format!("expected {} levels, found {}", outer + 1, doc.levels.len()),
        ));
    }
    let levels: Vec<Arc<FinSSet>> =
        doc.levels.iter().map(sset_from_doc).collect::<Result<_>>()?;
    if doc.outer_faces.len() != outer + 1 || doc.outer_degens.len() != outer + 1 {
        return Err(Error::invalid("doc", "outer map tables do not match the truncation"));
    }
    let mut outer_faces = vec![Vec::new(); outer + 1];
    for n in 1..=outer {
        for body in &doc.outer_faces[n] {
            outer_faces[n].push(map_from_body(body, &levels[n], &levels[n - 1])?);
        }
    }
    let mut outer_degens = vec![Vec::new(); outer + 1];
    for n in 0..outer {
        for body in &doc.outer_degens[n] {
            outer_degens[n].push(map_from_body(body, &levels[n], &levels[n + 1])?);
        }
    }
    SimplicialSpace::new(levels, outer_faces, outer_degens)
}

/// Any input document the tooling accepts, detected by schema tag (with a
/// structural fallback for untagged documents).
#[derive(Clone, Debug)]
pub enum Document {
    SSet(SSetDoc),
    Category(CategoryDoc),
    Space(SpaceDoc),
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::invalid("doc", format!("malformed JSON: {e}")))?;
    let tag = value.get("$schema").and_then(|v| v.as_str()).map(str::to_string);
    let detected = match tag.as_deref() {
        Some(SSET_SCHEMA) => "sset",
        Some(CATEGORY_SCHEMA) => "category",
        Some(SPACE_SCHEMA) => "space",
        Some(other) => {
            return Err(Error::invalid("doc", format!("unknown schema tag {other:?}")));
        }
        None if value.get("outerTruncation").is_some() => "space",
        None if value.get("truncation").is_some() => "sset",
        None if value.get("objects").is_some() => "category",
        None => {
            return Err(Error::invalid(
                "doc",
                "cannot detect the document kind (no schema tag or known field)".to_string(),
            ));
        }
    };
    let wrap = |e: serde_json::Error| Error::invalid("doc", format!("malformed {detected}: {e}"));
    Ok(match detected {
        "sset" => {
            let mut doc: SSetDoc = serde_json::from_value(value).map_err(wrap)?;
            if doc.schema.is_empty() {
                doc.schema = SSET_SCHEMA.to_string();
            }
            Document::SSet(doc)
        }
        "category" => {
            let mut doc: CategoryDoc = serde_json::from_value(value).map_err(wrap)?;
            if doc.schema.is_empty() {
                doc.schema = CATEGORY_SCHEMA.to_string();
            }
            Document::Category(doc)
        }
        _ => {
            let mut doc: SpaceDoc = serde_json::from_value(value).map_err(wrap)?;
            if doc.schema.is_empty() {
                doc.schema = SPACE_SCHEMA.to_string();
            }
            Document::Space(doc)
        }
    })
}

/// Deterministic pretty printing with a trailing newline.
pub fn to_json_string<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize infallibly");
    out.push('\n');
    out
}

/// Text form of a monotone map: `n->m:[i0,...,in]`.
pub fn simplex_map_to_text(u: &SimplexMap) -> String {
    let images: Vec<String> = u.images().iter().map(|i| i.to_string()).collect();
    format!("{}->{}:[{}]", u.domain(), u.codomain(), images.join(","))
}

pub fn simplex_map_from_text(text: &str) -> Result<SimplexMap> {
    let bad = || Error::invalid("doc", format!("cannot parse the map {text:?}"));
    let (dom, rest) = text.split_once("->").ok_or_else(bad)?;
    let (cod, images) = rest.split_once(":[").ok_or_else(bad)?;
    let images = images.strip_suffix(']').ok_or_else(bad)?;
    let domain: usize = dom.trim().parse().map_err(|_| bad())?;
    let codomain: usize = cod.trim().parse().map_err(|_| bad())?;
    let images: Vec<usize> = if images.trim().is_empty() {
        Vec::new()
    } else {
        images
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    SimplexMap::new(domain, codomain, images)
}
