//! Certifying that a family is a 1-system.
//!
//! Per curve: simplicity, essentiality, non-peripherality and sidedness (by
//! flip parity and by cutting). Per pair: the realized crossing count plus a
//! distinctness certificate — odd crossing parity, differing sidedness, or,
//! for disjoint pairs, the type of the piece they cobound after cutting.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{ConstructionState, LevelTag, Recipe, Role};
use crate::curve::{crossings_by_face, crossings_unchecked, flip_parity, self_crossings, Curve, CurveFamily, Sidedness};
use crate::cut::{
    annulus_from_cut, cut_along, essentiality_from_cut, peripheral_from_cut, sidedness_by_cut, single_pass_certificate,
    AnnulusVerdict, Essentiality, EssentialityCertificate,
};
use crate::error::CurveError;
use crate::schema::{classify_surface, SurfaceType};

/// Crossings the construction promises between two tagged curves.
///
/// Curves of equal slope are parallel copies; curves through one cross-cap
/// meet only there, which no longer counts; meridians live in their own
/// cylinders. A core crosses each line through its own cross-cap once and
/// nothing else.
pub fn expected_crossings(u: &LevelTag, v: &LevelTag) -> u32 {
    if u.role == Role::Meridian || v.role == Role::Meridian {
        return 0;
    }
    match (u.role, v.role) {
        (Role::GammaCore, Role::GammaCore) => return 0,
        (Role::GammaCore, Role::Gamma) | (Role::Gamma, Role::GammaCore) => {
            return u32::from(u.crosscap == v.crosscap);
        }
        (Role::GammaCore, _) | (_, Role::GammaCore) => return 0,
        _ => {}
    }
    if u.slope == v.slope {
        return 0;
    }
    if u.role == Role::Gamma && v.role == Role::Gamma && u.crosscap == v.crosscap {
        return 0;
    }
    1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    OddCrossing,
    SidednessMismatch,
    NoAnnulus,
    /// The pair cobounds an annulus: the curves are homotopic.
    CoboundAnnulus,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctnessCertificate {
    pub kind: CertificateKind,
    pub crossings: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sidedness: Option<(Sidedness, Sidedness)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<SurfaceType>,
}

impl DistinctnessCertificate {
    pub fn certifies(&self) -> bool {
        matches!(
            self.kind,
            CertificateKind::OddCrossing | CertificateKind::SidednessMismatch | CertificateKind::NoAnnulus
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub id: String,
    pub simple: bool,
    pub sidedness: Sidedness,
    /// Sidedness read from the number of circles cutting leaves behind.
    pub sidedness_by_cut: Option<Sidedness>,
    pub essential: Option<Essentiality>,
    /// The cut-only verdict, for comparison with the certificate above.
    pub essential_by_cut: Option<bool>,
    pub peripheral: Option<bool>,
}

impl CurveReport {
    pub fn ok(&self) -> bool {
        self.simple
            && self.essential.as_ref().is_some_and(|e| e.essential)
            && self.peripheral == Some(false)
            && self.sidedness_by_cut == Some(self.sidedness)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub a: String,
    pub b: String,
    pub crossings: u32,
    pub certificate: DistinctnessCertificate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub count: usize,
    pub pairs: usize,
    pub max_crossings: u32,
    pub unknown: usize,
    pub is_1_system: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionChecks {
    pub matrix_mismatches: Vec<String>,
    pub crossings_outside_disc: Vec<String>,
    pub expected_size: Option<u64>,
    pub actual_size: u64,
    pub expected_type: Option<SurfaceType>,
    pub actual_type: Option<SurfaceType>,
}

impl ConstructionChecks {
    pub fn ok(&self) -> bool {
        self.matrix_mismatches.is_empty()
            && self.crossings_outside_disc.is_empty()
            && self.expected_size.map_or(true, |n| n == self.actual_size)
            && self.expected_type == self.actual_type.filter(|_| self.expected_type.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionChecks>,
    pub curves: Vec<CurveReport>,
    pub pairs: Vec<PairReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.is_1_system && self.construction.as_ref().map_or(true, ConstructionChecks::ok)
    }

    pub fn pair(&self, a: &str, b: &str) -> Option<&PairReport> {
        self.pairs.iter().find(|p| (p.a == a && p.b == b) || (p.a == b && p.b == a))
    }
}

fn run<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return job();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

fn curve_report(fam: &CurveFamily, c: &Curve) -> CurveReport {
    let index = fam.schema.index().expect("family was checked");
    let sidedness = flip_parity(&index, c);
    if self_crossings(c) > 0 {
        return CurveReport {
            id: c.id.clone(),
            simple: false,
            sidedness,
            sidedness_by_cut: None,
            essential: None,
            essential_by_cut: None,
            peripheral: None,
        };
    }
    let cut = cut_along(&fam.schema, &[c]).expect("simple valid curve cuts");
    let by_cut = essentiality_from_cut(&cut, &c.id);
    let essential = match single_pass_certificate(&fam.schema, c) {
        Some(label) => Essentiality { essential: true, certificate: EssentialityCertificate::SingleCrossCapPass { label } },
        None if sidedness == Sidedness::OneSided => {
            Essentiality { essential: true, certificate: EssentialityCertificate::OneSided }
        }
        None => by_cut.clone(),
    };
    CurveReport {
        id: c.id.clone(),
        simple: true,
        sidedness,
        sidedness_by_cut: Some(sidedness_by_cut(&cut, &c.id)),
        essential: Some(essential),
        essential_by_cut: Some(by_cut.essential),
        peripheral: Some(peripheral_from_cut(&cut, &c.id)),
    }
}

fn certificate(fam: &CurveFamily, a: &Curve, b: &Curve, sa: Sidedness, sb: Sidedness, simple: bool) -> DistinctnessCertificate {
    let n = crossings_unchecked(a, b);
    let mut cert = DistinctnessCertificate { kind: CertificateKind::Unknown, crossings: n, sidedness: None, witness: None };
    if n % 2 == 1 {
        cert.kind = CertificateKind::OddCrossing;
    } else if sa != sb {
        cert.kind = CertificateKind::SidednessMismatch;
        cert.sidedness = Some((sa, sb));
    } else if n == 0 && simple {
        let cut = cut_along(&fam.schema, &[a, b]).expect("disjoint simple curves cut");
        let ann = annulus_from_cut(&cut, &a.id, &b.id);
        cert.witness = ann.witness;
        cert.kind = match ann.verdict {
            AnnulusVerdict::CoboundAnnulus => CertificateKind::CoboundAnnulus,
            AnnulusVerdict::NoAnnulus => CertificateKind::NoAnnulus,
            AnnulusVerdict::Unknown => CertificateKind::Unknown,
        };
    }
    cert
}

/// Full 1-system check of a family. `workers = 0` runs on the calling thread's
/// default pool; the report is identical for every worker count.
pub fn verify_one_system(fam: &CurveFamily, workers: usize) -> Result<VerificationReport, CurveError> {
    fam.check()?;
    let curves = &fam.curves;
    let reports: Vec<CurveReport> = run(workers, || curves.par_iter().map(|c| curve_report(fam, c)).collect());
    let idx: Vec<(usize, usize)> = (0..curves.len()).flat_map(|i| (i + 1..curves.len()).map(move |j| (i, j))).collect();
    let pairs: Vec<PairReport> = run(workers, || {
        idx.par_iter()
            .map(|&(i, j)| {
                let (ri, rj) = (&reports[i], &reports[j]);
                let cert = certificate(fam, &curves[i], &curves[j], ri.sidedness, rj.sidedness, ri.simple && rj.simple);
                PairReport {
                    a: curves[i].id.clone(),
                    b: curves[j].id.clone(),
                    crossings: cert.crossings,
                    certificate: cert,
                    expected: None,
                }
            })
            .collect()
    });

    let mut failures = Vec::new();
    for r in &reports {
        if !r.simple {
            failures.push(format!("{} is not simple", r.id));
            continue;
        }
        if !r.essential.as_ref().is_some_and(|e| e.essential) {
            failures.push(format!("{} is inessential", r.id));
        }
        if r.peripheral == Some(true) {
            failures.push(format!("{} is peripheral", r.id));
        }
        if r.sidedness_by_cut != Some(r.sidedness) {
            failures.push(format!("{}: flip parity and cut disagree on sidedness", r.id));
        }
    }
    let mut unknown = 0;
    for p in &pairs {
        if p.crossings > 1 {
            failures.push(format!("{} and {} cross {} times", p.a, p.b, p.crossings));
        }
        match p.certificate.kind {
            CertificateKind::Unknown => {
                unknown += 1;
                failures.push(format!("{} and {}: distinctness not certified", p.a, p.b));
            }
            CertificateKind::CoboundAnnulus => failures.push(format!("{} and {} cobound an annulus", p.a, p.b)),
            _ => {}
        }
    }
    let summary = Summary {
        count: curves.len(),
        pairs: pairs.len(),
        max_crossings: pairs.iter().map(|p| p.crossings).max().unwrap_or(0),
        unknown,
        is_1_system: failures.is_empty(),
        failures,
    };
    Ok(VerificationReport { summary, construction: None, curves: reports, pairs })
}

/// Construction-level checks on a tagged family: crossing matrix against
/// [`expected_crossings`], crossings confined to `disc_face`, and, when a
/// recipe is given, size and surface type.
pub fn verify_tagged(
    fam: &CurveFamily,
    recipe: Option<&Recipe>,
    disc_face: Option<&str>,
    workers: usize,
) -> Result<VerificationReport, CurveError> {
    let mut report = verify_one_system(fam, workers)?;
    let mut mismatches = Vec::new();
    for p in report.pairs.iter_mut() {
        let (i, j) = (fam.position(&p.a).unwrap(), fam.position(&p.b).unwrap());
        match (fam.tags[i], fam.tags[j]) {
            (Some(u), Some(v)) => {
                let e = expected_crossings(&u, &v);
                p.expected = Some(e);
                if e != p.crossings {
                    mismatches.push(format!("{} x {}: expected {e}, realized {}", p.a, p.b, p.crossings));
                }
            }
            _ => mismatches.push(format!("{} x {}: untagged curve", p.a, p.b)),
        }
    }
    let mut outside = Vec::new();
    if let Some(face) = disc_face.and_then(|id| fam.schema.face_index(id)) {
        for (i, a) in fam.curves.iter().enumerate() {
            for b in &fam.curves[i + 1..] {
                if crossings_by_face(a, b).keys().any(|&f| f != face) {
                    outside.push(format!("{} x {}", a.id, b.id));
                }
            }
        }
    }
    report.construction = Some(ConstructionChecks {
        matrix_mismatches: mismatches,
        crossings_outside_disc: outside,
        expected_size: recipe.map(Recipe::expected_size),
        actual_size: fam.curves.len() as u64,
        expected_type: recipe.map(Recipe::expected_type),
        actual_type: classify_surface(&fam.schema).ok(),
    });
    Ok(report)
}

pub fn verify_construction(st: &ConstructionState, workers: usize) -> Result<VerificationReport, CurveError> {
    verify_tagged(&st.family, st.recipe.as_ref(), Some(&st.disc.face_id), workers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_mrt, build_theorem_a, build_theorem_b};
    use crate::curve::{Chord, CurvePoint, Pos};
    use crate::schema::{Occ, SurfaceSchema};

    fn tag(role: Role, slope: Option<u32>, level: u32, crosscap: Option<u32>) -> LevelTag {
        LevelTag { role, slope, level, crosscap, handle: None }
    }

    #[test]
    fn oracle_rules() {
        let base2 = tag(Role::Base, Some(2), 0, None);
        assert_eq!(expected_crossings(&base2, &tag(Role::Tilde, Some(2), 5, None)), 0);
        assert_eq!(
            expected_crossings(&tag(Role::Gamma, Some(1), 4, Some(3)), &tag(Role::Gamma, Some(2), 4, Some(3))),
            0
        );
        assert_eq!(expected_crossings(&tag(Role::Base, Some(0), 0, None), &tag(Role::Tilde, Some(1), 5, None)), 1);
        let core = tag(Role::GammaCore, None, 4, Some(3));
        assert_eq!(expected_crossings(&core, &tag(Role::Gamma, Some(0), 4, Some(3))), 1);
        assert_eq!(expected_crossings(&core, &tag(Role::Gamma, Some(0), 6, Some(4))), 0);
        assert_eq!(expected_crossings(&core, &base2), 0);
    }

    #[test]
    fn mrt_passes_on_genus_two_base() {
        let st = build_mrt(4, 0).unwrap();
        let r = verify_construction(&st, 2).unwrap();
        assert!(r.passed(), "{:?}", r.summary.failures);
        assert_eq!(r.summary.count, 27);
        assert_eq!(r.summary.unknown, 0);
    }

    // On a torus base the lowest and highest two-sided copies of each slope
    // bound an annulus around the far side of the torus: there is one more
    // two-sided level than there are holes and cross-caps to separate them.
    #[test]
    fn torus_base_duplicates_extreme_copies() {
        for st in [build_mrt(2, 0).unwrap(), build_mrt(3, 1).unwrap(), build_theorem_a(6, 2, None).unwrap()] {
            let r = verify_construction(&st, 0).unwrap();
            let top = st.family.tags.iter().flatten().filter(|t| t.role != Role::Gamma).map(|t| t.level).max().unwrap();
            let bad: Vec<_> = r.pairs.iter().filter(|p| !p.certificate.certifies()).collect();
            assert_eq!(bad.len(), 3, "{:?}", r.summary.failures);
            for p in bad {
                assert_eq!(p.certificate.kind, CertificateKind::CoboundAnnulus);
                let (ta, tb) = (st.tag(&p.a).unwrap(), st.tag(&p.b).unwrap());
                assert_eq!((ta.role, ta.level, tb.level), (Role::Base, 0, top));
                assert_eq!(ta.slope, tb.slope);
            }
            assert!(r.construction.as_ref().unwrap().ok());
        }
    }

    #[test]
    fn worker_count_does_not_change_report() {
        let st = build_theorem_a(5, 1, None).unwrap();
        let a = verify_construction(&st, 1).unwrap();
        let b = verify_construction(&st, 3).unwrap();
        assert_eq!(a, b);
        let st = build_theorem_b(7, None).unwrap();
        assert_eq!(verify_construction(&st, 1).unwrap(), verify_construction(&st, 4).unwrap());
    }

    #[test]
    fn pushoff_pair_fails() {
        let s = SurfaceSchema::from_word("a b a- b-");
        let chord = |i, p, j, q| Chord::new(0, CurvePoint::new(Occ::new(0, i), p), CurvePoint::new(Occ::new(0, j), q));
        let v1 = Curve::new("v1", vec![chord(2, Pos::new(2, 3), 0, Pos::new(1, 3))]);
        let v2 = Curve::new("v2", vec![chord(2, Pos::new(1, 3), 0, Pos::new(2, 3))]);
        let fam = CurveFamily::new(s, vec![v1, v2]).unwrap();
        let r = verify_one_system(&fam, 1).unwrap();
        assert!(!r.passed());
        assert_eq!(r.pairs[0].certificate.kind, CertificateKind::CoboundAnnulus);
    }

    #[test]
    fn double_crossing_is_unknown() {
        let s = SurfaceSchema::from_word("a b a- b-");
        let chord = |i, p, j, q| Chord::new(0, CurvePoint::new(Occ::new(0, i), p), CurvePoint::new(Occ::new(0, j), q));
        let v = Curve::new("v", vec![chord(2, Pos::new(1, 2), 0, Pos::new(1, 2))]);
        let w = Curve::new(
            "w",
            vec![chord(3, Pos::new(1, 3), 1, Pos::new(1, 3)), chord(3, Pos::new(2, 3), 1, Pos::new(2, 3))],
        );
        let fam = CurveFamily::new(s, vec![v, w]).unwrap();
        let r = verify_one_system(&fam, 1).unwrap();
        assert!(!r.passed());
        assert_eq!(r.summary.max_crossings, 2);
        assert_eq!(r.pairs[0].certificate.kind, CertificateKind::Unknown);
    }
}
