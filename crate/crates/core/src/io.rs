//! JSON documents: schemas, curve families, cut results.
//!
//! Positions are exact `"n/d"` strings; chord endpoints name the occurrence
//! index within the chord's face, and faces are referenced by id.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{ConstructionState, LevelTag, Recipe};
use crate::curve::{Chord, Curve, CurveFamily, CurvePoint, Pos};
use crate::cut::{CircleOrigin, CutResult};
use crate::error::CurveError;
use crate::schema::{Occ, SurfaceSchema, SurfaceType};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad position {0:?}: expected \"n/d\" strictly between 0 and 1")]
    Position(String),
    #[error("unknown face id {0:?}")]
    UnknownFace(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDoc {
    pub index: usize,
    pub pos: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordDoc {
    pub face: String,
    pub from: PointDoc,
    pub to: PointDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<LevelTag>,
    pub chords: Vec<ChordDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub schema: SurfaceSchema,
    pub curves: Vec<CurveDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disc_face: Option<String>,
}

pub fn format_pos(p: &Pos) -> String {
    format!("{}/{}", p.numer(), p.denom())
}

pub fn parse_pos(s: &str) -> Result<Pos, IoError> {
    let bad = || IoError::Position(s.to_owned());
    let (n, d) = s.split_once('/').ok_or_else(bad)?;
    let n: i64 = n.trim().parse().map_err(|_| bad())?;
    let d: i64 = d.trim().parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    let p = Pos::new(n, d);
    if p <= Pos::from_integer(0) || p >= Pos::from_integer(1) {
        return Err(bad());
    }
    Ok(p)
}

pub fn curve_doc(s: &SurfaceSchema, c: &Curve, tag: Option<LevelTag>) -> CurveDoc {
    let point = |p: &CurvePoint| PointDoc { index: p.occ.index, pos: format_pos(&p.pos) };
    CurveDoc {
        id: c.id.clone(),
        tag,
        chords: c
            .chords
            .iter()
            .map(|ch| ChordDoc { face: s.faces[ch.face].id.clone(), from: point(&ch.from), to: point(&ch.to) })
            .collect(),
    }
}

pub fn family_doc(fam: &CurveFamily) -> FamilyDoc {
    FamilyDoc {
        schema: fam.schema.clone(),
        curves: fam.curves.iter().zip(&fam.tags).map(|(c, t)| curve_doc(&fam.schema, c, *t)).collect(),
        recipe: None,
        disc_face: None,
    }
}

pub fn construction_doc(st: &ConstructionState) -> FamilyDoc {
    FamilyDoc { recipe: st.recipe, disc_face: Some(st.disc.face_id.clone()), ..family_doc(&st.family) }
}

/// Curves of a document, without validation.
pub fn curves_from_doc(doc: &FamilyDoc) -> Result<(Vec<Curve>, Vec<Option<LevelTag>>), IoError> {
    let mut curves = Vec::with_capacity(doc.curves.len());
    let mut tags = Vec::with_capacity(doc.curves.len());
    for c in &doc.curves {
        let mut chords = Vec::with_capacity(c.chords.len());
        for ch in &c.chords {
            let face = doc.schema.face_index(&ch.face).ok_or_else(|| IoError::UnknownFace(ch.face.clone()))?;
            let point = |p: &PointDoc| -> Result<CurvePoint, IoError> {
                Ok(CurvePoint::new(Occ::new(face, p.index), parse_pos(&p.pos)?))
            };
            chords.push(Chord::new(face, point(&ch.from)?, point(&ch.to)?));
        }
        curves.push(Curve::new(c.id.clone(), chords));
        tags.push(c.tag);
    }
    Ok((curves, tags))
}

/// Parses and validates a family document.
pub fn family_from_doc(doc: &FamilyDoc) -> Result<CurveFamily, IoError> {
    let (curves, tags) = curves_from_doc(doc)?;
    Ok(CurveFamily::with_tags(doc.schema.clone(), curves, tags)?)
}

pub fn family_to_json(fam: &CurveFamily) -> String {
    serde_json::to_string_pretty(&family_doc(fam)).expect("family serializes")
}

pub fn family_from_json(s: &str) -> Result<CurveFamily, IoError> {
    family_from_doc(&serde_json::from_str(s)?)
}

pub fn schema_to_json(s: &SurfaceSchema) -> String {
    serde_json::to_string_pretty(s).expect("schema serializes")
}

pub fn schema_from_json(s: &str) -> Result<SurfaceSchema, IoError> {
    Ok(serde_json::from_str(s)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceDoc {
    pub circle: usize,
    #[serde(flatten)]
    pub origin: CircleOrigin,
    pub edges: Vec<String>,
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub faces: Vec<String>,
    #[serde(rename = "type")]
    pub surface: SurfaceType,
    pub notation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutDoc {
    pub faces: Vec<crate::schema::FaceWord>,
    pub pairs: Vec<crate::schema::Pair>,
    pub provenance: Vec<ProvenanceDoc>,
    pub components: Vec<ComponentDoc>,
}

pub fn cut_doc(cut: &CutResult) -> CutDoc {
    let s = &cut.schema;
    CutDoc {
        faces: s.faces.clone(),
        pairs: s.pairs.clone(),
        provenance: cut
            .circles
            .iter()
            .enumerate()
            .map(|(i, c)| ProvenanceDoc {
                circle: i,
                origin: c.origin.clone(),
                edges: c.edges.iter().map(|(occ, _)| s.letter(*occ).edge.to_string()).collect(),
                component: c.component,
            })
            .collect(),
        components: cut
            .components
            .iter()
            .map(|c| ComponentDoc {
                faces: c.faces.iter().map(|&f| s.faces[f].id.clone()).collect(),
                surface: c.surface,
                notation: c.surface.notation(),
            })
            .collect(),
    }
}

pub fn cut_to_json(cut: &CutResult) -> String {
    serde_json::to_string_pretty(&cut_doc(cut)).expect("cut serializes")
}
