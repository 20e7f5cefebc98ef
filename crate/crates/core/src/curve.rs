//! Closed transverse curves as cyclic chord sequences.
//!
//! Each chord crosses one face between two boundary points; consecutive
//! chords meet on a glued edge, where the endpoint of one chord is carried by
//! the edge's parameter map onto the start of the next. Two chords of one
//! face cross iff their endpoints alternate around the face boundary, which
//! is ordered by `(occurrence index, position)`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::construct::LevelTag;
use crate::error::CurveError;
use crate::schema::{validate_schema_with, EdgeLabel, Flag, Occ, SchemaIndex, SurfaceSchema};

/// Exact position along an edge occurrence, strictly inside `(0, 1)`.
pub type Pos = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurvePoint {
    pub occ: Occ,
    pub pos: Pos,
}

impl CurvePoint {
    pub fn new(occ: Occ, pos: Pos) -> Self {
        CurvePoint { occ, pos }
    }

    /// Sort key along the boundary cycle of the point's face.
    pub fn key(&self) -> (usize, Pos) {
        (self.occ.index, self.pos)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Chord {
    pub face: usize,
    pub from: CurvePoint,
    pub to: CurvePoint,
}

impl Chord {
    pub fn new(face: usize, from: CurvePoint, to: CurvePoint) -> Self {
        Chord { face, from, to }
    }

    fn sorted_keys(&self) -> ((usize, Pos), (usize, Pos)) {
        let (a, b) = (self.from.key(), self.to.key());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Whether two chords of the same face have alternating endpoints.
    pub fn interleaves(&self, other: &Chord) -> bool {
        if self.face != other.face {
            return false;
        }
        let (a1, a2) = self.sorted_keys();
        let (b1, b2) = other.sorted_keys();
        (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub id: String,
    pub chords: Vec<Chord>,
}

impl Curve {
    pub fn new(id: impl Into<String>, chords: Vec<Chord>) -> Self {
        Curve { id: id.into(), chords }
    }

    pub fn points(&self) -> impl Iterator<Item = &CurvePoint> + '_ {
        self.chords.iter().flat_map(|c| [&c.from, &c.to])
    }

    /// The same point set traversed in the opposite direction.
    pub fn reversed(&self) -> Curve {
        let chords = self
            .chords
            .iter()
            .rev()
            .map(|c| Chord::new(c.face, c.to, c.from))
            .collect();
        Curve { id: self.id.clone(), chords }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sidedness {
    OneSided,
    TwoSided,
}

impl fmt::Display for Sidedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sidedness::OneSided => "one_sided",
            Sidedness::TwoSided => "two_sided",
        })
    }
}

/// A family of curves on one schema with optional construction tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    pub schema: SurfaceSchema,
    pub curves: Vec<Curve>,
    pub tags: Vec<Option<LevelTag>>,
}

impl CurveFamily {
    /// Validates every curve and the joint genericity of the family.
    pub fn new(schema: SurfaceSchema, curves: Vec<Curve>) -> Result<Self, CurveError> {
        let tags = vec![None; curves.len()];
        CurveFamily::with_tags(schema, curves, tags)
    }

    pub fn with_tags(schema: SurfaceSchema, curves: Vec<Curve>, tags: Vec<Option<LevelTag>>) -> Result<Self, CurveError> {
        assert_eq!(curves.len(), tags.len(), "one tag slot per curve");
        let family = CurveFamily { schema, curves, tags };
        family.check()?;
        Ok(family)
    }

    pub fn check(&self) -> Result<(), CurveError> {
        let index = self.schema.index()?;
        let mut ids = HashSet::new();
        let mut owner: HashMap<(Occ, Pos), &str> = HashMap::new();
        for curve in &self.curves {
            if !ids.insert(curve.id.as_str()) {
                return Err(CurveError::DuplicateId(curve.id.clone()));
            }
            let violations = curve_violations(&self.schema, &index, curve);
            if !violations.is_empty() {
                return Err(CurveError::Invalid { curve: curve.id.clone(), violations });
            }
            for p in curve.points() {
                if let Some(other) = owner.insert((p.occ, p.pos), &curve.id) {
                    if other != curve.id {
                        return Err(CurveError::Genericity { a: other.to_owned(), b: curve.id.clone() });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn curve(&self, id: &str) -> Option<&Curve> {
        self.curves.iter().find(|c| c.id == id)
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.id == id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveViolation {
    Empty,
    FaceOutOfRange { chord: usize },
    OccurrenceOutOfRange { chord: usize },
    WrongFace { chord: usize },
    PositionOutOfRange { chord: usize },
    DegenerateChord { chord: usize },
    BoundaryEndpoint { chord: usize },
    NotClosed { chord: usize },
    RepeatedPoint { face: usize, index: usize, pos: Pos },
}

impl fmt::Display for CurveViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveViolation::Empty => write!(f, "curve has no chords"),
            CurveViolation::FaceOutOfRange { chord } => write!(f, "chord {chord} names a missing face"),
            CurveViolation::OccurrenceOutOfRange { chord } => {
                write!(f, "chord {chord} names a missing edge occurrence")
            }
            CurveViolation::WrongFace { chord } => write!(f, "chord {chord} has an endpoint outside its face"),
            CurveViolation::PositionOutOfRange { chord } => {
                write!(f, "chord {chord} has an endpoint position outside (0,1)")
            }
            CurveViolation::DegenerateChord { chord } => write!(f, "chord {chord} has coincident endpoints"),
            CurveViolation::BoundaryEndpoint { chord } => {
                write!(f, "chord {chord} leaves through a boundary edge")
            }
            CurveViolation::NotClosed { chord } => {
                write!(f, "chord {chord} does not continue into the next chord across its edge")
            }
            CurveViolation::RepeatedPoint { face, index, pos } => {
                write!(f, "point {pos} on occurrence {face}:{index} is used twice")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveValidity {
    pub violations: Vec<CurveViolation>,
}

impl CurveValidity {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Image of a point under the parameter map of its glued edge.
pub fn carry(index: &SchemaIndex, p: &CurvePoint) -> Option<CurvePoint> {
    let (other, flag) = index.partner(p.occ)?;
    let pos = match flag {
        Flag::Same => p.pos,
        Flag::Reversed => Pos::from_integer(1) - p.pos,
    };
    Some(CurvePoint::new(other, pos))
}

pub fn validate_curve(s: &SurfaceSchema, c: &Curve) -> CurveValidity {
    let schema_ok = validate_schema_with(s, false);
    if !schema_ok.is_valid() {
        // Curve checks need the pairing; report as a non-closed curve.
        return CurveValidity { violations: vec![CurveViolation::NotClosed { chord: 0 }] };
    }
    let index = s.index().expect("validated schema indexes");
    CurveValidity { violations: curve_violations(s, &index, c) }
}

pub(crate) fn curve_violations(s: &SurfaceSchema, index: &SchemaIndex, c: &Curve) -> Vec<CurveViolation> {
    let mut v = Vec::new();
    if c.chords.is_empty() {
        v.push(CurveViolation::Empty);
        return v;
    }
    let zero = Pos::from_integer(0);
    let one = Pos::from_integer(1);
    let mut structural = false;
    for (i, chord) in c.chords.iter().enumerate() {
        if chord.face >= s.faces.len() {
            v.push(CurveViolation::FaceOutOfRange { chord: i });
            structural = true;
            continue;
        }
        for p in [&chord.from, &chord.to] {
            if p.occ.face != chord.face {
                v.push(CurveViolation::WrongFace { chord: i });
                structural = true;
            } else if p.occ.index >= s.face_len(chord.face) {
                v.push(CurveViolation::OccurrenceOutOfRange { chord: i });
                structural = true;
            }
            if p.pos <= zero || p.pos >= one {
                v.push(CurveViolation::PositionOutOfRange { chord: i });
            }
        }
        if chord.from == chord.to {
            v.push(CurveViolation::DegenerateChord { chord: i });
        }
    }
    if structural {
        return v;
    }
    let n = c.chords.len();
    for i in 0..n {
        let end = &c.chords[i].to;
        match carry(index, end) {
            None => v.push(CurveViolation::BoundaryEndpoint { chord: i }),
            Some(image) => {
                if image != c.chords[(i + 1) % n].from {
                    v.push(CurveViolation::NotClosed { chord: i });
                }
            }
        }
    }
    let mut seen = HashSet::new();
    for p in c.points() {
        if !seen.insert((p.occ, p.pos)) {
            v.push(CurveViolation::RepeatedPoint { face: p.occ.face, index: p.occ.index, pos: p.pos });
        }
    }
    v
}

fn ensure_valid(s: &SurfaceSchema, c: &Curve) -> Result<SchemaIndex, CurveError> {
    let index = s.index()?;
    let violations = curve_violations(s, &index, c);
    if !violations.is_empty() {
        return Err(CurveError::Invalid { curve: c.id.clone(), violations });
    }
    Ok(index)
}

/// True iff no two chords of the curve cross.
pub fn is_simple(s: &SurfaceSchema, c: &Curve) -> Result<bool, CurveError> {
    ensure_valid(s, c)?;
    Ok(self_crossings(c) == 0)
}

pub(crate) fn self_crossings(c: &Curve) -> u32 {
    let mut count = 0;
    for (i, a) in c.chords.iter().enumerate() {
        for b in &c.chords[i + 1..] {
            if a.interleaves(b) {
                count += 1;
            }
        }
    }
    count
}

/// Realized transverse crossings of two jointly generic curves.
pub fn crossings(a: &Curve, b: &Curve) -> Result<u32, CurveError> {
    if a.id == b.id {
        return Err(CurveError::DuplicateId(a.id.clone()));
    }
    let points: HashSet<(Occ, Pos)> = a.points().map(|p| (p.occ, p.pos)).collect();
    if b.points().any(|p| points.contains(&(p.occ, p.pos))) {
        return Err(CurveError::Genericity { a: a.id.clone(), b: b.id.clone() });
    }
    Ok(crossings_unchecked(a, b))
}

pub(crate) fn crossings_unchecked(a: &Curve, b: &Curve) -> u32 {
    let mut count = 0;
    for ca in &a.chords {
        for cb in &b.chords {
            if ca.interleaves(cb) {
                count += 1;
            }
        }
    }
    count
}

/// Crossing count split by face index.
pub fn crossings_by_face(a: &Curve, b: &Curve) -> BTreeMap<usize, u32> {
    let mut out = BTreeMap::new();
    for ca in &a.chords {
        for cb in &b.chords {
            if ca.interleaves(cb) {
                *out.entry(ca.face).or_insert(0) += 1;
            }
        }
    }
    out
}

pub fn mod2_intersection(a: &Curve, b: &Curve) -> Result<u32, CurveError> {
    Ok(crossings(a, b)? % 2)
}

/// One-sided iff the curve crosses orientation-reversing gluings an odd
/// number of times.
pub fn sidedness(s: &SurfaceSchema, c: &Curve) -> Result<Sidedness, CurveError> {
    let index = ensure_valid(s, c)?;
    if self_crossings(c) > 0 {
        return Err(CurveError::NotSimple(c.id.clone()));
    }
    Ok(flip_parity(&index, c))
}

pub(crate) fn flip_parity(index: &SchemaIndex, c: &Curve) -> Sidedness {
    let flips = c
        .chords
        .iter()
        .filter(|ch| matches!(index.partner(ch.to.occ), Some((_, Flag::Same))))
        .count();
    if flips % 2 == 1 {
        Sidedness::OneSided
    } else {
        Sidedness::TwoSided
    }
}

/// Labels glued to themselves within one face in the same direction.
pub fn crosscap_labels(s: &SurfaceSchema) -> Vec<EdgeLabel> {
    let Ok(index) = s.index() else { return Vec::new() };
    index
        .labels()
        .filter(|(_, occs)| {
            occs.len() == 2 && occs[0].face == occs[1].face && s.letter(occs[0]).dir == s.letter(occs[1]).dir
        })
        .map(|(l, _)| l.clone())
        .collect()
}

/// Passes through each cross-cap label: endpoints on its occurrences over two.
pub fn crosscap_passes(s: &SurfaceSchema, c: &Curve) -> BTreeMap<EdgeLabel, u32> {
    let mut out: BTreeMap<EdgeLabel, u32> = crosscap_labels(s).into_iter().map(|l| (l, 0)).collect();
    for p in c.points() {
        if p.occ.face >= s.faces.len() || p.occ.index >= s.face_len(p.occ.face) {
            continue;
        }
        if let Some(count) = out.get_mut(&s.letter(p.occ).edge) {
            *count += 1;
        }
    }
    for count in out.values_mut() {
        *count /= 2;
    }
    out
}

/// The core curve of a cross-cap whose two occurrences are cyclically
/// adjacent in one face, placed at `pos`.
pub fn crosscap_core(s: &SurfaceSchema, label: &EdgeLabel, pos: Pos, id: impl Into<String>) -> Option<Curve> {
    let index = s.index().ok()?;
    let occs = index.occurrences(label);
    let [a, b] = occs else { return None };
    if a.face != b.face || s.letter(*a).dir != s.letter(*b).dir {
        return None;
    }
    let len = s.face_len(a.face);
    let (first, second) = if (a.index + 1) % len == b.index {
        (*a, *b)
    } else if (b.index + 1) % len == a.index {
        (*b, *a)
    } else {
        return None;
    };
    Some(Curve::new(
        id,
        vec![Chord::new(first.face, CurvePoint::new(first, pos), CurvePoint::new(second, pos))],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::parse_word;
    use crate::schema::FaceWord;

    fn r(n: i64, d: i64) -> Pos {
        Pos::new(n, d)
    }

    fn pt(face: usize, index: usize, pos: Pos) -> CurvePoint {
        CurvePoint::new(Occ::new(face, index), pos)
    }

    fn chord(i: usize, p: Pos, j: usize, q: Pos) -> Chord {
        Chord::new(0, pt(0, i, p), pt(0, j, q))
    }

    #[test]
    fn core_of_rp2_is_valid_and_one_sided() {
        let s = SurfaceSchema::from_word("x x");
        let core = Curve::new("core", vec![chord(0, r(1, 2), 1, r(1, 2))]);
        assert!(validate_curve(&s, &core).is_valid());
        assert!(is_simple(&s, &core).unwrap());
        assert_eq!(sidedness(&s, &core).unwrap(), Sidedness::OneSided);
        assert_eq!(crosscap_passes(&s, &core), BTreeMap::from([(EdgeLabel::from("x"), 1)]));
        assert_eq!(crosscap_core(&s, &"x".into(), r(1, 2), "core").unwrap(), core);
    }

    #[test]
    fn corner_contact_and_mismatch_are_invalid() {
        let s = SurfaceSchema::from_word("x x");
        let corner = Curve::new("c", vec![chord(0, r(0, 1), 1, r(0, 1))]);
        assert!(validate_curve(&s, &corner)
            .violations
            .contains(&CurveViolation::PositionOutOfRange { chord: 0 }));
        let open = Curve::new("c", vec![chord(0, r(1, 3), 1, r(1, 2))]);
        assert!(validate_curve(&s, &open).violations.contains(&CurveViolation::NotClosed { chord: 0 }));
    }

    #[test]
    fn boundary_exit_is_invalid() {
        let s = SurfaceSchema::from_word("x x e");
        let c = Curve::new("c", vec![chord(0, r(1, 2), 2, r(1, 2))]);
        assert!(validate_curve(&s, &c)
            .violations
            .contains(&CurveViolation::BoundaryEndpoint { chord: 0 }));
    }

    /// Square torus `a b a⁻ b⁻`: crossing `a` goes from occurrence 0 to 2.
    fn torus_curves() -> (SurfaceSchema, Curve, Curve) {
        let s = SurfaceSchema::from_word("a b a- b-");
        let vertical = Curve::new("v", vec![chord(2, r(1, 2), 0, r(1, 2))]);
        let horizontal = Curve::new("h", vec![chord(3, r(1, 2), 1, r(1, 2))]);
        (s, vertical, horizontal)
    }

    #[test]
    fn opposite_side_chords_cross_once() {
        let (s, v, h) = torus_curves();
        assert!(validate_curve(&s, &v).is_valid());
        assert!(validate_curve(&s, &h).is_valid());
        assert_eq!(crossings(&v, &h).unwrap(), 1);
        assert_eq!(crossings(&h, &v).unwrap(), 1);
        assert_eq!(mod2_intersection(&v, &h).unwrap(), 1);
        assert_eq!(sidedness(&s, &v).unwrap(), Sidedness::TwoSided);
        assert!(crosscap_passes(&s, &v).is_empty());
    }

    #[test]
    fn parallel_shifts_are_disjoint() {
        let (s, v, _) = torus_curves();
        let shifted = Curve::new("v2", vec![chord(2, r(1, 3), 0, r(2, 3))]);
        assert!(validate_curve(&s, &shifted).is_valid());
        assert_eq!(crossings(&v, &shifted).unwrap(), 0);
        assert_eq!(mod2_intersection(&v, &shifted).unwrap(), 0);
    }

    #[test]
    fn shared_point_is_a_genericity_error() {
        let (_, v, _) = torus_curves();
        let mut twin = v.clone();
        twin.id = "twin".into();
        assert!(matches!(crossings(&v, &twin), Err(CurveError::Genericity { .. })));
    }

    #[test]
    fn alternating_chords_in_one_curve_are_not_simple() {
        // Square face glued into a torus; the curve runs v then h in one loop:
        // chord 0 from the left side (b⁻) to the top (a⁻), chord 1 from the
        // bottom (a) to the right side (b).
        let s = SurfaceSchema::from_word("a b a- b-");
        let simple = Curve::new(
            "diag",
            vec![chord(3, r(1, 2), 2, r(1, 2)), chord(0, r(1, 2), 1, r(1, 2))],
        );
        assert!(validate_curve(&s, &simple).is_valid());
        assert!(is_simple(&s, &simple).unwrap());
        // Swap which pair of sides each chord joins so the two chords alternate.
        let crossing = Curve::new(
            "x",
            vec![chord(3, r(1, 2), 1, r(1, 3)), chord(3, r(2, 3), 1, r(1, 2))],
        );
        assert!(validate_curve(&s, &crossing).is_valid(), "{:?}", validate_curve(&s, &crossing));
        assert!(!is_simple(&s, &crossing).unwrap());
        assert!(matches!(sidedness(&s, &crossing), Err(CurveError::NotSimple(_))));
    }

    #[test]
    fn double_crossing_has_even_parity() {
        let (_, v, _) = torus_curves();
        // Two chords from the left side to the right side, both alternating with v.
        let s = SurfaceSchema::from_word("a b a- b-");
        let w = Curve::new(
            "w",
            vec![chord(3, r(1, 3), 1, r(1, 2)), chord(3, r(1, 2), 1, r(2, 3))],
        );
        assert!(validate_curve(&s, &w).is_valid());
        assert_eq!(crossings(&v, &w).unwrap(), 2);
        assert_eq!(mod2_intersection(&v, &w).unwrap(), 0);
    }

    #[test]
    fn orientable_multi_face_curves_are_two_sided() {
        let s = SurfaceSchema::from_faces(vec![
            FaceWord::new("T1", parse_word("a b d-")),
            FaceWord::new("T2", parse_word("b a d-")),
        ]);
        // Crosses d and a: T1 (d⁻ → a) then T2 (a → d⁻).
        let c = Curve::new(
            "c",
            vec![
                Chord::new(0, pt(0, 2, r(1, 2)), pt(0, 0, r(1, 2))),
                Chord::new(1, pt(1, 1, r(1, 2)), pt(1, 2, r(1, 2))),
            ],
        );
        assert!(validate_curve(&s, &c).is_valid(), "{:?}", validate_curve(&s, &c));
        assert_eq!(sidedness(&s, &c).unwrap(), Sidedness::TwoSided);
    }
}
