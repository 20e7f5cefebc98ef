//! Cutting a schema along disjoint simple curves.
//!
//! Inside each face the chords of the curves are pairwise non-crossing, so
//! they split the polygon into sub-polygons without interior vertices. Every
//! chord turns into two unpaired boundary edges, one per side, and each edge
//! crossed by a curve is split into segments labelled `label#j` (segment
//! index counted along the label's own direction, so both occurrences of a
//! glued edge agree on the numbering).
//!
//! The cut surface is then classified component by component, and each new
//! boundary circle remembers which curve produced it. Essentiality,
//! peripherality and annulus certificates are read off that provenance.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{
    crosscap_core, crosscap_labels, crosscap_passes, crossings_unchecked, curve_violations, flip_parity, self_crossings,
    Curve, Pos, Sidedness,
};
use crate::error::{CurveError, CutError};
use crate::schema::{
    classify_with_index, components_with_index, cycles_with_index, Dir, EdgeLabel, FaceWord, Letter, Occ, Pair,
    SurfaceSchema, SurfaceType,
};

/// Where a boundary circle of a cut surface came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "origin", rename_all = "snake_case")]
pub enum CircleOrigin {
    Original,
    Cut { curve: String, side: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCircle {
    pub edges: Vec<(Occ, bool)>,
    pub origin: CircleOrigin,
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutComponent {
    /// Face indices of the cut schema belonging to this component.
    pub faces: Vec<usize>,
    pub schema: SurfaceSchema,
    pub surface: SurfaceType,
    /// Indices into [`CutResult::circles`].
    pub circles: Vec<usize>,
}

impl CutComponent {
    pub fn euler_characteristic(&self) -> i64 {
        self.surface.euler_characteristic()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub schema: SurfaceSchema,
    pub circles: Vec<CutCircle>,
    pub components: Vec<CutComponent>,
}

impl CutResult {
    /// New boundary circles produced by the curve with this id.
    pub fn circles_of(&self, curve: &str) -> Vec<usize> {
        self.circles
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(&c.origin, CircleOrigin::Cut { curve: id, .. } if id == curve))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn surface_types(&self) -> Vec<SurfaceType> {
        self.components.iter().map(|c| c.surface).collect()
    }

    pub fn total_euler_characteristic(&self) -> i64 {
        self.components.iter().map(CutComponent::euler_characteristic).sum()
    }

    fn component_origins(&self, component: &CutComponent) -> Vec<&CircleOrigin> {
        component.circles.iter().map(|&i| &self.circles[i].origin).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ChordEnd {
    From,
    To,
}

#[derive(Clone, Copy, Debug)]
struct CutPoint {
    curve: usize,
    chord: usize,
    end: ChordEnd,
}

#[derive(Clone, Debug)]
enum Item {
    Seg(Letter),
    Pt(usize),
}

fn copy_label(curve: &str, chord: usize, forward: bool) -> EdgeLabel {
    EdgeLabel(format!("cut:{curve}:{chord}:{}", if forward { 'a' } else { 'b' }))
}

fn segment_label(edge: &EdgeLabel, j: usize, cuts: usize) -> EdgeLabel {
    if cuts == 0 {
        edge.clone()
    } else {
        EdgeLabel(format!("{edge}#{j}"))
    }
}

fn check_curves(s: &SurfaceSchema, curves: &[&Curve]) -> Result<(), CutError> {
    let index = s.index().map_err(CurveError::from)?;
    for c in curves {
        let violations = curve_violations(s, &index, c);
        if !violations.is_empty() {
            return Err(CurveError::Invalid { curve: c.id.clone(), violations }.into());
        }
        if self_crossings(c) > 0 {
            return Err(CurveError::NotSimple(c.id.clone()).into());
        }
    }
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i + 1..] {
            let n = crate::curve::crossings(a, b)?;
            if n > 0 {
                return Err(CutError::Crossing { a: a.id.clone(), b: b.id.clone(), crossings: n });
            }
        }
    }
    Ok(())
}

/// Cuts along pairwise disjoint simple curves and classifies the result.
pub fn cut_along(s: &SurfaceSchema, curves: &[&Curve]) -> Result<CutResult, CutError> {
    check_curves(s, curves)?;
    Ok(cut_unchecked(s, curves))
}

fn cut_unchecked(s: &SurfaceSchema, curves: &[&Curve]) -> CutResult {
    let index = s.index().expect("checked schema");
    let one = Pos::from_integer(1);

    // Cut points per occurrence, sorted along the face direction.
    let mut points: Vec<CutPoint> = Vec::new();
    let mut on_occ: HashMap<Occ, Vec<(Pos, usize)>> = HashMap::new();
    for (ci, c) in curves.iter().enumerate() {
        for (hi, ch) in c.chords.iter().enumerate() {
            for (end, p) in [(ChordEnd::From, &ch.from), (ChordEnd::To, &ch.to)] {
                on_occ.entry(p.occ).or_default().push((p.pos, points.len()));
                points.push(CutPoint { curve: ci, chord: hi, end });
            }
        }
    }
    for list in on_occ.values_mut() {
        list.sort_by(|a, b| a.0.cmp(&b.0));
    }

    let mut faces = Vec::new();
    let mut copy_origin: HashMap<EdgeLabel, usize> = HashMap::new();
    for (fi, face) in s.faces.iter().enumerate() {
        let mut items: Vec<Item> = Vec::new();
        let mut item_of_point: HashMap<usize, usize> = HashMap::new();
        for (j, letter) in face.word.iter().enumerate() {
            let occ = Occ::new(fi, j);
            let cuts = on_occ.get(&occ).map(Vec::as_slice).unwrap_or(&[]);
            let k = cuts.len();
            // Segment j counted along the label direction.
            let seg = |m: usize| {
                let jj = match letter.dir {
                    Dir::Forward => m,
                    Dir::Backward => k - m,
                };
                Letter { edge: segment_label(&letter.edge, jj, k), dir: letter.dir }
            };
            items.push(Item::Seg(seg(0)));
            for (m, &(_, pid)) in cuts.iter().enumerate() {
                item_of_point.insert(pid, items.len());
                items.push(Item::Pt(pid));
                items.push(Item::Seg(seg(m + 1)));
            }
        }
        if item_of_point.is_empty() {
            let word = items
                .into_iter()
                .map(|it| match it {
                    Item::Seg(l) => l,
                    Item::Pt(_) => unreachable!(),
                })
                .collect();
            faces.push(FaceWord::new(face.id.clone(), word));
            continue;
        }
        let len = items.len();
        let mut visited = vec![false; len];
        let mut sub = 0;
        for start in 0..len {
            if visited[start] || !matches!(items[start], Item::Seg(_)) {
                continue;
            }
            let mut word = Vec::new();
            let mut cur = start;
            loop {
                visited[cur] = true;
                if let Item::Seg(l) = &items[cur] {
                    word.push(l.clone());
                }
                let mut next = (cur + 1) % len;
                if let Item::Pt(pid) = items[next] {
                    let p = points[pid];
                    let curve = curves[p.curve];
                    let forward = p.end == ChordEnd::From;
                    let label = copy_label(&curve.id, p.chord, forward);
                    copy_origin.insert(label.clone(), p.curve);
                    word.push(Letter { edge: label, dir: Dir::Forward });
                    let other_end = if forward { ChordEnd::To } else { ChordEnd::From };
                    let ch = &curve.chords[p.chord];
                    let other = match other_end {
                        ChordEnd::From => &ch.from,
                        ChordEnd::To => &ch.to,
                    };
                    let qid = on_occ[&other.occ]
                        .iter()
                        .find(|(pos, pid2)| *pos == other.pos && points[*pid2].chord == p.chord && points[*pid2].curve == p.curve)
                        .map(|(_, q)| *q)
                        .expect("chord endpoint registered");
                    next = (item_of_point[&qid] + 1) % len;
                }
                cur = next;
                if cur == start {
                    break;
                }
            }
            faces.push(FaceWord::new(format!("{}.{sub}", face.id), word));
            sub += 1;
        }
    }

    let mut pairs = Vec::new();
    for pair in &s.pairs {
        let occs = index.occurrences(&pair.edge);
        let k = on_occ.get(&occs[0]).map_or(0, Vec::len);
        for j in 0..=k {
            pairs.push(Pair { edge: segment_label(&pair.edge, j, k), flag: pair.flag });
        }
    }
    let _ = one;

    let schema = SurfaceSchema { faces, pairs };
    let new_index = schema.index().expect("cut schema is well formed");
    let cycles = cycles_with_index(&schema, &new_index);
    let mut side_counter: BTreeMap<usize, u32> = BTreeMap::new();
    let mut circles: Vec<CutCircle> = cycles
        .into_iter()
        .map(|cyc| {
            let first = &schema.letter(cyc.edges[0].0).edge;
            let origin = match copy_origin.get(first) {
                Some(&ci) => {
                    let side = side_counter.entry(ci).or_insert(0);
                    let o = CircleOrigin::Cut { curve: curves[ci].id.clone(), side: *side };
                    *side += 1;
                    o
                }
                None => CircleOrigin::Original,
            };
            CutCircle { edges: cyc.edges, origin, component: usize::MAX }
        })
        .collect();

    let groups = schema.face_components(&new_index);
    let mut face_comp = vec![0; schema.faces.len()];
    for (k, g) in groups.iter().enumerate() {
        for &f in g {
            face_comp[f] = k;
        }
    }
    let comp_schemas = components_with_index(&schema, &new_index);
    let mut components: Vec<CutComponent> = groups
        .into_iter()
        .zip(comp_schemas)
        .map(|(faces, cs)| {
            let ci = cs.index().expect("component indexes");
            let surface = classify_with_index(&cs, &ci).expect("cut component classifies");
            CutComponent { faces, schema: cs, surface, circles: Vec::new() }
        })
        .collect();
    for (i, circle) in circles.iter_mut().enumerate() {
        let k = face_comp[circle.edges[0].0.face];
        circle.component = k;
        components[k].circles.push(i);
    }
    CutResult { schema, circles, components }
}

/// Types of the components left after cutting along one curve.
pub fn cut_classification(s: &SurfaceSchema, c: &Curve) -> Result<Vec<SurfaceType>, CutError> {
    Ok(cut_along(s, &[c])?.surface_types())
}

pub fn orientable_after_cut(s: &SurfaceSchema, c: &Curve) -> Result<bool, CutError> {
    Ok(cut_classification(s, c)?.iter().all(|t| t.orientable))
}

/// Sidedness read from the number of boundary circles the curve leaves behind.
pub fn sidedness_by_cut(cut: &CutResult, curve: &str) -> Sidedness {
    if cut.circles_of(curve).len() == 1 {
        Sidedness::OneSided
    } else {
        Sidedness::TwoSided
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EssentialityCertificate {
    /// Passes once through this cross-cap and crosses its core an odd number of times.
    SingleCrossCapPass { label: EdgeLabel },
    OneSided,
    /// Two-sided and no complementary piece bounded by one side alone is a disc or Möbius band.
    CutComplement { components: Vec<SurfaceType> },
    BoundsDisc,
    BoundsMobiusBand,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Essentiality {
    pub essential: bool,
    pub certificate: EssentialityCertificate,
}

impl fmt::Display for Essentiality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({:?})", if self.essential { "essential" } else { "inessential" }, self.certificate)
    }
}

/// Fast certificate: a single pass through some cross-cap whose core the
/// curve crosses an odd number of times.
pub fn single_pass_certificate(s: &SurfaceSchema, c: &Curve) -> Option<EdgeLabel> {
    let passes = crosscap_passes(s, c);
    for label in crosscap_labels(s) {
        if passes.get(&label) != Some(&1) {
            continue;
        }
        let index = s.index().ok()?;
        let first = index.occurrences(&label)[0];
        // Core position below every existing point on that edge.
        let lowest = c
            .points()
            .filter(|p| s.letter(p.occ).edge == label)
            .map(|p| p.pos)
            .min()
            .unwrap_or_else(|| Pos::from_integer(1));
        let _ = first;
        let Some(core) = crosscap_core(s, &label, lowest / 2, format!("{}::core", c.id)) else {
            continue;
        };
        if crossings_unchecked(c, &core) % 2 == 1 {
            return Some(label);
        }
    }
    None
}

/// Essentiality with the cheapest available certificate.
pub fn is_essential(s: &SurfaceSchema, c: &Curve) -> Result<Essentiality, CutError> {
    check_curves(s, &[c])?;
    if let Some(label) = single_pass_certificate(s, c) {
        return Ok(Essentiality { essential: true, certificate: EssentialityCertificate::SingleCrossCapPass { label } });
    }
    let index = s.index().map_err(CurveError::from)?;
    if flip_parity(&index, c) == Sidedness::OneSided {
        return Ok(Essentiality { essential: true, certificate: EssentialityCertificate::OneSided });
    }
    Ok(essentiality_from_cut(&cut_unchecked(s, &[c]), &c.id))
}

/// Cut-based essentiality, never using the cross-cap fast path.
pub fn is_essential_by_cut(s: &SurfaceSchema, c: &Curve) -> Result<Essentiality, CutError> {
    Ok(essentiality_from_cut(&cut_along(s, &[c])?, &c.id))
}

pub(crate) fn essentiality_from_cut(cut: &CutResult, curve: &str) -> Essentiality {
    if sidedness_by_cut(cut, curve) == Sidedness::OneSided {
        return Essentiality { essential: true, certificate: EssentialityCertificate::OneSided };
    }
    for comp in &cut.components {
        let origins = cut.component_origins(comp);
        let lone_side = matches!(origins.as_slice(), [CircleOrigin::Cut { curve: id, .. }] if id == curve);
        if lone_side {
            if comp.surface.is_disc() {
                return Essentiality { essential: false, certificate: EssentialityCertificate::BoundsDisc };
            }
            if comp.surface.is_mobius_band() {
                return Essentiality { essential: false, certificate: EssentialityCertificate::BoundsMobiusBand };
            }
        }
    }
    Essentiality {
        essential: true,
        certificate: EssentialityCertificate::CutComplement { components: cut.surface_types() },
    }
}

/// Whether the curve is homotopic to a boundary component.
pub fn is_peripheral(s: &SurfaceSchema, c: &Curve) -> Result<bool, CutError> {
    let cut = cut_along(s, &[c])?;
    Ok(peripheral_from_cut(&cut, &c.id))
}

pub(crate) fn peripheral_from_cut(cut: &CutResult, curve: &str) -> bool {
    if sidedness_by_cut(cut, curve) == Sidedness::OneSided {
        return false;
    }
    cut.components.iter().any(|comp| {
        if !comp.surface.is_annulus() {
            return false;
        }
        let origins = cut.component_origins(comp);
        let ours = origins.iter().filter(|o| matches!(o, CircleOrigin::Cut { curve: id, .. } if id == curve)).count();
        let original = origins.iter().filter(|o| matches!(o, CircleOrigin::Original)).count();
        ours == 1 && original == 1
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnnulusVerdict {
    CoboundAnnulus,
    NoAnnulus,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnulusCertificate {
    pub verdict: AnnulusVerdict,
    /// Type of a complementary piece bounded by one side of each curve, if any.
    pub witness: Option<SurfaceType>,
}

/// Decides whether two disjoint curves cobound an embedded annulus.
pub fn annulus_certificate(s: &SurfaceSchema, a: &Curve, b: &Curve) -> Result<AnnulusCertificate, CutError> {
    let n = crate::curve::crossings(a, b)?;
    if n > 0 {
        if n % 2 == 0 {
            return Ok(AnnulusCertificate { verdict: AnnulusVerdict::Unknown, witness: None });
        }
        return Err(CutError::Crossing { a: a.id.clone(), b: b.id.clone(), crossings: n });
    }
    let cut = cut_along(s, &[a, b])?;
    Ok(annulus_from_cut(&cut, &a.id, &b.id))
}

pub(crate) fn annulus_from_cut(cut: &CutResult, a: &str, b: &str) -> AnnulusCertificate {
    let mut witness = None;
    for comp in &cut.components {
        let origins = cut.component_origins(comp);
        let is_side = |o: &&CircleOrigin, id: &str| matches!(o, CircleOrigin::Cut { curve, .. } if curve == id);
        let from_a = origins.iter().filter(|o| is_side(o, a)).count();
        let from_b = origins.iter().filter(|o| is_side(o, b)).count();
        if from_a == 1 && from_b == 1 && origins.len() == 2 {
            if comp.surface.is_annulus() {
                return AnnulusCertificate { verdict: AnnulusVerdict::CoboundAnnulus, witness: Some(comp.surface) };
            }
            witness.get_or_insert(comp.surface);
        }
    }
    AnnulusCertificate { verdict: AnnulusVerdict::NoAnnulus, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{Chord, CurvePoint};
    use crate::schema::{euler_characteristic, standard_schema};

    fn r(n: i64, d: i64) -> Pos {
        Pos::new(n, d)
    }

    fn chord(i: usize, p: Pos, j: usize, q: Pos) -> Chord {
        Chord::new(0, CurvePoint::new(Occ::new(0, i), p), CurvePoint::new(Occ::new(0, j), q))
    }

    fn n21() -> SurfaceSchema {
        standard_schema(SurfaceType::non_orientable(2, 1)).unwrap()
    }

    /// `x1 x1 x2 x2 e1`: through x1 then x2, once each.
    fn alpha() -> Curve {
        Curve::new("alpha", vec![chord(1, r(1, 2), 2, r(1, 2)), chord(3, r(1, 2), 0, r(1, 2))])
    }

    fn beta() -> Curve {
        Curve::new("beta", vec![chord(0, r(1, 2), 1, r(1, 2))])
    }

    #[test]
    fn klein_with_boundary_alpha_gives_pants() {
        let s = n21();
        let cut = cut_along(&s, &[&alpha()]).unwrap();
        assert_eq!(cut.surface_types(), vec![SurfaceType::orientable(0, 3)]);
        assert_eq!(cut.circles_of("alpha").len(), 2);
        assert_eq!(cut.total_euler_characteristic(), euler_characteristic(&s).unwrap());
    }

    #[test]
    fn klein_with_boundary_beta_gives_rp2_with_two_holes() {
        let s = n21();
        let cut = cut_along(&s, &[&beta()]).unwrap();
        assert_eq!(cut.surface_types(), vec![SurfaceType::non_orientable(1, 2)]);
        assert_eq!(cut.circles_of("beta").len(), 1);
        assert_eq!(sidedness_by_cut(&cut, "beta"), Sidedness::OneSided);
    }

    #[test]
    fn torus_cut_is_annulus() {
        let s = SurfaceSchema::from_word("a b a- b-");
        let v = Curve::new("v", vec![chord(2, r(1, 2), 0, r(1, 2))]);
        assert_eq!(cut_classification(&s, &v).unwrap(), vec![SurfaceType::orientable(0, 2)]);
        let e = is_essential(&s, &v).unwrap();
        assert!(e.essential);
        assert!(!is_peripheral(&s, &v).unwrap());
    }

    #[test]
    fn small_circle_bounds_a_disc() {
        // Two chords hugging the same stretch of x1 from both sides.
        let s = standard_schema(SurfaceType::non_orientable(2, 0)).unwrap();
        let c = Curve::new("o", vec![chord(1, r(1, 3), 1, r(2, 3)), chord(0, r(2, 3), 0, r(1, 3))]);
        assert!(crate::curve::validate_curve(&s, &c).is_valid());
        let e = is_essential(&s, &c).unwrap();
        assert!(!e.essential);
        assert_eq!(e.certificate, EssentialityCertificate::BoundsDisc);
    }

    /// Twice around the core of the cross-cap whose edges are occurrences `i`, `i+1`.
    fn doubled_core(i: usize) -> Curve {
        Curve::new("ring", vec![chord(i, r(1, 3), i + 1, r(2, 3)), chord(i, r(2, 3), i + 1, r(1, 3))])
    }

    #[test]
    fn curve_around_crosscap_bounds_mobius() {
        let s = standard_schema(SurfaceType::non_orientable(2, 0)).unwrap();
        let c = doubled_core(2);
        assert!(crate::curve::validate_curve(&s, &c).is_valid());
        assert_eq!(crate::curve::sidedness(&s, &c).unwrap(), Sidedness::TwoSided);
        let e = is_essential(&s, &c).unwrap();
        assert!(!e.essential, "{e}");
        assert_eq!(e.certificate, EssentialityCertificate::BoundsMobiusBand);
        assert_eq!(
            cut_classification(&s, &c).unwrap(),
            vec![SurfaceType::non_orientable(1, 1), SurfaceType::non_orientable(1, 1)]
        );
    }

    #[test]
    fn core_of_crosscap_takes_fast_path() {
        let s = standard_schema(SurfaceType::non_orientable(3, 0)).unwrap();
        let core = Curve::new("core", vec![chord(2, r(1, 2), 3, r(1, 2))]);
        let e = is_essential(&s, &core).unwrap();
        assert_eq!(e.certificate, EssentialityCertificate::SingleCrossCapPass { label: "x2".into() });
        assert!(is_essential_by_cut(&s, &core).unwrap().essential);
        assert_eq!(cut_classification(&s, &core).unwrap(), vec![SurfaceType::non_orientable(2, 1)]);
    }

    #[test]
    fn boundary_parallel_curve_is_peripheral() {
        // Möbius band `x x e`: the curve crossing x twice, hugging e.
        let s = SurfaceSchema::from_word("x x e");
        let core = Curve::new("core", vec![chord(0, r(1, 2), 1, r(1, 2))]);
        assert!(!is_peripheral(&s, &core).unwrap());
        let rim = doubled_core(0);
        assert!(crate::curve::validate_curve(&s, &rim).is_valid());
        let cut = cut_along(&s, &[&rim]).unwrap();
        assert_eq!(cut.components.len(), 2);
        assert!(is_peripheral(&s, &rim).unwrap());
        assert!(!is_peripheral(&SurfaceSchema::from_word("a b a- b-"), &Curve::new(
            "v",
            vec![chord(2, r(1, 2), 0, r(1, 2))]
        ))
        .unwrap());
    }

    #[test]
    fn parallel_pushoffs_cobound_annulus() {
        let s = SurfaceSchema::from_word("a b a- b-");
        let v1 = Curve::new("v1", vec![chord(2, r(2, 3), 0, r(1, 3))]);
        let v2 = Curve::new("v2", vec![chord(2, r(1, 3), 0, r(2, 3))]);
        let cert = annulus_certificate(&s, &v1, &v2).unwrap();
        assert_eq!(cert.verdict, AnnulusVerdict::CoboundAnnulus);
        assert_eq!(cert.witness, Some(SurfaceType::orientable(0, 2)));
    }

    #[test]
    fn crossing_curves_are_rejected() {
        let s = SurfaceSchema::from_word("a b a- b-");
        let v = Curve::new("v", vec![chord(2, r(1, 2), 0, r(1, 2))]);
        let h = Curve::new("h", vec![chord(3, r(1, 2), 1, r(1, 2))]);
        assert!(matches!(cut_along(&s, &[&v, &h]), Err(CutError::Crossing { crossings: 1, .. })));
        assert!(matches!(annulus_certificate(&s, &v, &h), Err(CutError::Crossing { .. })));
    }

    #[test]
    fn different_crosscaps_give_no_annulus() {
        let s = standard_schema(SurfaceType::non_orientable(3, 0)).unwrap();
        let a = Curve::new("a", vec![chord(1, r(1, 2), 2, r(1, 2)), chord(3, r(1, 2), 0, r(1, 2))]);
        let b = Curve::new("b", vec![chord(4, r(1, 2), 5, r(1, 2))]);
        let cert = annulus_certificate(&s, &a, &b).unwrap();
        assert_eq!(cert.verdict, AnnulusVerdict::NoAnnulus);
    }
}
