//! Builders for the large 1-systems.
//!
//! Every surface is assembled around one disc face `D`. Its boundary reads
//! `R₀ … R_{N−1} L₀ … L_{N−1}` followed by one slit per feature (hole or
//! cross-cap) in left-to-right order. Band faces join `Rₛ` to `Lₛ`; since all
//! N band attachments interleave, disc plus bands is a ribbon graph of genus
//! m = (N−1)/2 with two boundary circles, which two cap faces close up into
//! S_m. A curve of slope s at level ℓ runs once through band s and once across
//! D, like a straight line y = aₛx + ℓ in a large planar disc:
//!
//! * on `Rₛ` its rank is by ascending level, on `Lₛ` by descending level;
//! * it crosses the slit of every feature that sits higher than itself, so
//!   lines of the same slope never meet and lines of distinct slopes meet
//!   exactly once;
//! * lines of a cross-cap level all run through that cross-cap (entering the
//!   first `x` occurrence and re-emerging antipodally from the second), so
//!   they stop meeting each other.
//!
//! Holes are free edges `hⱼ` behind their slit; handles are annulus faces
//! `hₐ⁻ t hᵦ⁻ t⁻` glued onto two holes.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::curve::{Chord, Curve, CurveFamily, CurvePoint, Pos};
use crate::error::BuildError;
use crate::schema::{cycles_with_index, FaceWord, Letter, Occ, SurfaceSchema, SurfaceType};
use crate::sizes;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Base,
    Shift,
    Gamma,
    GammaCore,
    Tilde,
    Meridian,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Base => "base",
            Role::Shift => "shift",
            Role::Gamma => "gamma",
            Role::GammaCore => "gamma_core",
            Role::Tilde => "tilde",
            Role::Meridian => "meridian",
        })
    }
}

/// Construction bookkeeping attached to each curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelTag {
    pub role: Role,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slope: Option<u32>,
    pub level: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crosscap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handle: Option<u32>,
}

impl LevelTag {
    fn line(role: Role, slope: u32, level: u32, crosscap: Option<u32>) -> Self {
        LevelTag { role, slope: Some(slope), level, crosscap, handle: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub g: u32,
    pub b: u32,
    pub k: u32,
}

impl ConstructionParams {
    pub fn m(&self) -> u32 {
        self.k / 2
    }

    pub fn n(&self) -> u32 {
        self.k - self.k / 2
    }

    /// Theorem A parameters; `k` defaults to max(2, ⌊g/3⌋) kept below g/2.
    pub fn theorem_a(g: u32, b: u32, k: Option<u32>) -> Result<Self, BuildError> {
        if g < 5 {
            return Err(BuildError::Unsupported(format!(
                "theorem A needs g >= 5 (got g={g}): smaller g forces k <= 1, whose base family lives on a \
                 sphere and contains a null-homotopic curve"
            )));
        }
        let k = k.unwrap_or_else(|| sizes::default_k_a(g));
        if k < 2 {
            return Err(BuildError::Unsupported(format!("theorem A needs k >= 2 (got k={k})")));
        }
        if g < 2 * k + 1 {
            return Err(BuildError::Unsupported(format!("need g - 2k >= 1 (got g={g}, k={k})")));
        }
        Ok(ConstructionParams { g, b, k })
    }

    /// Theorem B parameters on a closed surface; `k` defaults to max(1, ⌊g/4⌋).
    pub fn theorem_b(g: u32, k: Option<u32>) -> Result<Self, BuildError> {
        if g < 3 {
            return Err(BuildError::Unsupported(format!("theorem B needs g >= 3 (got g={g})")));
        }
        let k = k.unwrap_or_else(|| sizes::default_k_b(g));
        if k < 1 {
            return Err(BuildError::Unsupported(
                "theorem B needs k >= 1: on a sphere base the curves through one cross-cap share a mod-2 class"
                    .into(),
            ));
        }
        if g < 2 * k + 1 {
            return Err(BuildError::Unsupported(format!("need g - 2k >= 1 (got g={g}, k={k})")));
        }
        Ok(ConstructionParams { g, b: 0, k })
    }
}

/// What a finished build promises: its size and surface type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "recipe", rename_all = "snake_case")]
pub enum Recipe {
    Mrt { k: u32, b: u32 },
    TheoremA { g: u32, b: u32, k: u32 },
    TheoremB { g: u32, k: u32 },
}

impl Recipe {
    pub fn expected_size(&self) -> u64 {
        match *self {
            Recipe::Mrt { k, b } => sizes::size_c(k, b),
            Recipe::TheoremA { g, b, k } => sizes::size_gamma(g, b, k),
            Recipe::TheoremB { g, k } => sizes::size_omega(g, k),
        }
    }

    pub fn expected_type(&self) -> SurfaceType {
        match *self {
            Recipe::Mrt { k, b } => SurfaceType::orientable(k, b),
            Recipe::TheoremA { g, b, .. } => SurfaceType::non_orientable(g, b),
            Recipe::TheoremB { g, .. } => SurfaceType::non_orientable(g, 0),
        }
    }
}

/// Endpoint positions reserved for one line on its two disc sectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub slope: u32,
    pub level: u32,
    pub right: Pos,
    pub left: Pos,
}

/// The distinguished disc face where every crossing lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscRegion {
    pub face_id: String,
    /// `(Rₛ, Lₛ)` edge labels per slope.
    pub sectors: Vec<(String, String)>,
    pub slots: Vec<Slot>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FeatureKind {
    Hole,
    CrossCap,
}

#[derive(Clone, Debug)]
struct Feature {
    kind: FeatureKind,
    /// Twice the level of a cross-cap; 2ℓ+1 for a hole between ℓ and ℓ+1.
    key: u32,
    number: u32,
    glued: bool,
}

impl Feature {
    fn edge(&self) -> String {
        match self.kind {
            FeatureKind::Hole => format!("h{}", self.number),
            FeatureKind::CrossCap => format!("x{}", self.number),
        }
    }

    fn slit(&self) -> String {
        format!("s{}", self.edge())
    }

    fn width(&self) -> usize {
        match self.kind {
            FeatureKind::Hole => 3,
            FeatureKind::CrossCap => 4,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Line {
    slope: u32,
    level: u32,
    /// Feature index of the cross-cap this line runs through.
    cap: Option<usize>,
}

#[derive(Clone, Copy, Debug)]
enum Member {
    Line(Line),
    Core(usize),
    Meridian(usize),
}

#[derive(Clone, Debug)]
struct Layout {
    slopes: u32,
    features: Vec<Feature>,
    handles: Vec<(usize, usize)>,
    members: Vec<(String, LevelTag, Member)>,
}

#[derive(Clone, Debug)]
pub struct ConstructionState {
    pub schema: SurfaceSchema,
    pub family: CurveFamily,
    pub disc: DiscRegion,
    pub next_level: u32,
    pub recipe: Option<Recipe>,
    layout: Layout,
}

impl ConstructionState {
    pub fn tag(&self, id: &str) -> Option<LevelTag> {
        self.family.position(id).and_then(|i| self.family.tags[i])
    }

    pub fn slopes(&self) -> u32 {
        self.layout.slopes
    }

    pub fn crosscaps(&self) -> usize {
        self.layout.features.iter().filter(|f| f.kind == FeatureKind::CrossCap).count()
    }

    pub fn holes(&self) -> usize {
        self.layout.features.iter().filter(|f| f.kind == FeatureKind::Hole).count()
    }

    pub fn handles(&self) -> usize {
        self.layout.handles.len()
    }

    /// Surface type implied by the layout (base genus, handles, holes, cross-caps).
    pub fn layout_type(&self) -> SurfaceType {
        let genus = (self.layout.slopes - 1) / 2 + self.handles() as u32;
        let boundary = self.layout.features.iter().filter(|f| f.kind == FeatureKind::Hole && !f.glued).count() as u32;
        match self.crosscaps() as u32 {
            0 => SurfaceType::orientable(genus, boundary),
            c => SurfaceType::non_orientable(2 * genus + c, boundary),
        }
    }
}

fn rank_pos(rank: usize, count: usize) -> Pos {
    Pos::new(rank as i64 + 1, count as i64 + 1)
}

/// Cap words closing the two band-side circles of the bare ribbon graph.
fn cap_words(slopes: u32) -> Result<Vec<Vec<Letter>>, BuildError> {
    let mut faces = vec![disc_face(slopes, &[])];
    faces.extend((0..slopes).map(band_face));
    let bare = SurfaceSchema::from_faces(faces);
    let index = bare.index().map_err(|e| BuildError::Internal(e.to_string()))?;
    let cycles = cycles_with_index(&bare, &index);
    if cycles.len() != 2 {
        return Err(BuildError::Internal(format!("ribbon graph has {} boundary circles, expected 2", cycles.len())));
    }
    Ok(cycles
        .into_iter()
        .map(|cyc| {
            cyc.edges
                .iter()
                .rev()
                .map(|&(occ, forward)| {
                    let l = bare.letter(occ);
                    if forward {
                        l.inverse()
                    } else {
                        l.clone()
                    }
                })
                .collect()
        })
        .collect())
}

fn disc_face(slopes: u32, features: &[Feature]) -> FaceWord {
    let mut word: Vec<Letter> = (0..slopes).map(|s| Letter::fwd(format!("R{s}"))).collect();
    word.extend((0..slopes).map(|s| Letter::fwd(format!("L{s}"))));
    for f in features {
        word.push(Letter::fwd(f.slit()));
        word.push(Letter::fwd(f.edge()));
        if f.kind == FeatureKind::CrossCap {
            word.push(Letter::fwd(f.edge()));
        }
        word.push(Letter::bwd(f.slit()));
    }
    FaceWord::new("D", word)
}

fn band_face(s: u32) -> FaceWord {
    FaceWord::new(
        format!("band{s}"),
        vec![
            Letter::bwd(format!("R{s}")),
            Letter::fwd(format!("A{s}")),
            Letter::bwd(format!("L{s}")),
            Letter::fwd(format!("B{s}")),
        ],
    )
}

impl Layout {
    fn new(slopes: u32) -> Self {
        Layout { slopes, features: Vec::new(), handles: Vec::new(), members: Vec::new() }
    }

    fn add_lines(&mut self, role: Role, level: u32, cap: Option<usize>) {
        let crosscap = cap.map(|f| self.features[f].number);
        for s in 0..self.slopes {
            let id = match crosscap {
                Some(x) => format!("{role}.s{s}.l{level}.x{x}"),
                None => format!("{role}.s{s}.l{level}"),
            };
            let tag = LevelTag::line(role, s, level, crosscap);
            self.members.push((id, tag, Member::Line(Line { slope: s, level, cap })));
        }
    }

    fn add_feature(&mut self, kind: FeatureKind, key: u32) -> usize {
        let number = self.features.iter().filter(|f| f.kind == kind).count() as u32 + 1;
        self.features.push(Feature { kind, key, number, glued: false });
        self.features.len() - 1
    }

    fn materialize(&self) -> Result<(SurfaceSchema, CurveFamily, DiscRegion), BuildError> {
        let n = self.slopes as usize;
        let mut faces = vec![disc_face(self.slopes, &self.features)];
        faces.extend((0..self.slopes).map(band_face));
        for (i, word) in cap_words(self.slopes)?.into_iter().enumerate() {
            faces.push(FaceWord::new(format!("cap{i}"), word));
        }
        let handle_base = faces.len();
        for (h, &(a, b)) in self.handles.iter().enumerate() {
            let t = format!("t{}", h + 1);
            faces.push(FaceWord::new(
                format!("handle{}", h + 1),
                vec![
                    Letter::bwd(self.features[a].edge()),
                    Letter::fwd(t.clone()),
                    Letter::bwd(self.features[b].edge()),
                    Letter::bwd(t),
                ],
            ));
        }
        let schema = SurfaceSchema::from_faces(faces);

        // Disc occurrence index of each feature's slit⁺.
        let mut offsets = Vec::with_capacity(self.features.len());
        let mut at = 2 * n;
        for f in &self.features {
            offsets.push(at);
            at += f.width();
        }

        let lines: Vec<(usize, Line)> = self
            .members
            .iter()
            .enumerate()
            .filter_map(|(i, (_, _, m))| match m {
                Member::Line(l) => Some((i, *l)),
                _ => None,
            })
            .collect();

        let mut right = vec![Pos::from_integer(0); self.members.len()];
        let mut left = right.clone();
        for s in 0..self.slopes {
            let mut on: Vec<&(usize, Line)> = lines.iter().filter(|(_, l)| l.slope == s).collect();
            on.sort_by_key(|(_, l)| l.level);
            for (r, (i, _)) in on.iter().enumerate() {
                right[*i] = rank_pos(r, on.len());
                left[*i] = rank_pos(on.len() - 1 - r, on.len());
            }
        }

        // slit[f][member] position on the upward slit side.
        let mut slit: Vec<Vec<Option<Pos>>> = vec![vec![None; self.members.len()]; self.features.len()];
        for (f, feat) in self.features.iter().enumerate() {
            let mut on: Vec<(u32, i64, usize)> = lines
                .iter()
                .filter(|(_, l)| feat.key > 2 * l.level)
                .map(|&(i, l)| {
                    let ascending = l.cap.map_or(true, |g| f > g);
                    let s = l.slope as i64;
                    (l.level, if ascending { s } else { -s }, i)
                })
                .collect();
            on.sort();
            for (r, &(_, _, i)) in on.iter().enumerate() {
                slit[f][i] = Some(rank_pos(r, on.len()));
            }
        }

        // Through-positions on cross-caps: core first, then slopes descending.
        let mut through = vec![Pos::from_integer(0); self.members.len()];
        for (f, feat) in self.features.iter().enumerate() {
            if feat.kind != FeatureKind::CrossCap {
                continue;
            }
            let mut on: Vec<(i64, usize)> = self
                .members
                .iter()
                .enumerate()
                .filter_map(|(i, (_, _, m))| match m {
                    Member::Core(g) if *g == f => Some((i64::MIN, i)),
                    Member::Line(l) if l.cap == Some(f) => Some((-(l.slope as i64), i)),
                    _ => None,
                })
                .collect();
            on.sort();
            for (r, &(_, i)) in on.iter().enumerate() {
                through[i] = rank_pos(r, on.len());
            }
        }

        let one = Pos::from_integer(1);
        let d = |index: usize, pos: Pos| CurvePoint::new(Occ::new(0, index), pos);
        let mut curves = Vec::with_capacity(self.members.len());
        let mut tags = Vec::with_capacity(self.members.len());
        let mut slots = Vec::new();
        for (i, (id, tag, member)) in self.members.iter().enumerate() {
            let chords = match *member {
                Member::Line(l) => {
                    let s = l.slope as usize;
                    let band = 1 + s;
                    slots.push(Slot { slope: l.slope, level: l.level, right: right[i], left: left[i] });
                    let mut chords = vec![Chord::new(
                        band,
                        CurvePoint::new(Occ::new(band, 0), one - right[i]),
                        CurvePoint::new(Occ::new(band, 2), one - left[i]),
                    )];
                    let mut cur = d(n + s, left[i]);
                    for (f, feat) in self.features.iter().enumerate() {
                        let base = offsets[f];
                        let (enter, exit) = if let Some(p) = slit[f][i] {
                            (d(base, p), d(base + feat.width() - 1, one - p))
                        } else if l.cap == Some(f) {
                            (d(base + 1, through[i]), d(base + 2, through[i]))
                        } else {
                            continue;
                        };
                        chords.push(Chord::new(0, cur, enter));
                        cur = exit;
                    }
                    chords.push(Chord::new(0, cur, d(s, right[i])));
                    chords
                }
                Member::Core(f) => {
                    let base = offsets[f];
                    vec![Chord::new(0, d(base + 1, through[i]), d(base + 2, through[i]))]
                }
                Member::Meridian(h) => {
                    let face = handle_base + h;
                    let half = Pos::new(1, 2);
                    vec![Chord::new(
                        face,
                        CurvePoint::new(Occ::new(face, 1), half),
                        CurvePoint::new(Occ::new(face, 3), half),
                    )]
                }
            };
            curves.push(Curve::new(id.clone(), chords));
            tags.push(Some(*tag));
        }
        let family = CurveFamily::with_tags(schema.clone(), curves, tags)
            .map_err(|e| BuildError::Internal(e.to_string()))?;
        let disc = DiscRegion {
            face_id: "D".into(),
            sectors: (0..self.slopes).map(|s| (format!("R{s}"), format!("L{s}"))).collect(),
            slots,
        };
        Ok((schema, family, disc))
    }
}

fn state(layout: Layout, next_level: u32, recipe: Option<Recipe>) -> Result<ConstructionState, BuildError> {
    let (schema, family, disc) = layout.materialize()?;
    Ok(ConstructionState { schema, family, disc, next_level, recipe, layout })
}

/// S_m with the 2m+1 pairwise once-crossing base curves.
pub fn mrt_base(m: u32) -> Result<ConstructionState, BuildError> {
    if m < 1 {
        return Err(BuildError::Unsupported("the base needs m >= 1".into()));
    }
    let mut layout = Layout::new(2 * m + 1);
    layout.add_lines(Role::Base, 0, None);
    state(layout, 1, None)
}

fn push_shift(layout: &mut Layout, level: u32) {
    layout.add_feature(FeatureKind::Hole, 2 * level - 1);
    layout.add_lines(Role::Shift, level, None);
}

/// Copies every slope one level up and punches a hole just below the copies.
pub fn mrt_shift_step(st: &ConstructionState) -> Result<ConstructionState, BuildError> {
    let mut layout = st.layout.clone();
    push_shift(&mut layout, st.next_level);
    state(layout, st.next_level + 1, None)
}

fn push_handles(layout: &mut Layout, n_pairs: usize) -> Result<(), BuildError> {
    let free: Vec<usize> = layout
        .features
        .iter()
        .enumerate()
        .filter(|(_, f)| f.kind == FeatureKind::Hole && !f.glued)
        .map(|(i, _)| i)
        .collect();
    if free.len() < 2 * n_pairs {
        return Err(BuildError::InsufficientHoles { needed: 2 * n_pairs, available: free.len() });
    }
    for pair in free[..2 * n_pairs].chunks(2) {
        let (a, b) = (pair[0], pair[1]);
        layout.features[a].glued = true;
        layout.features[b].glued = true;
        layout.handles.push((a, b));
        let h = layout.handles.len() as u32;
        let tag = LevelTag {
            role: Role::Meridian,
            slope: None,
            level: layout.features[a].key / 2,
            crosscap: None,
            handle: Some(h),
        };
        layout.members.push((format!("meridian.t{h}"), tag, Member::Meridian(layout.handles.len() - 1)));
    }
    Ok(())
}

/// Joins the oldest free holes in pairs by cylinders and adds their meridians.
pub fn glue_handles_with_meridians(st: &ConstructionState, n_pairs: usize) -> Result<ConstructionState, BuildError> {
    let mut layout = st.layout.clone();
    push_handles(&mut layout, n_pairs)?;
    state(layout, st.next_level, None)
}

fn push_crosscap(layout: &mut Layout, level: u32, tilde: bool) {
    let f = layout.add_feature(FeatureKind::CrossCap, 2 * level);
    layout.add_lines(Role::Gamma, level, Some(f));
    let x = layout.features[f].number;
    let tag = LevelTag { role: Role::GammaCore, slope: None, level, crosscap: Some(x), handle: None };
    layout.members.push((format!("gamma_core.x{x}"), tag, Member::Core(f)));
    if tilde {
        layout.add_lines(Role::Tilde, level + 1, None);
    }
}

/// Adds a cross-cap at a fresh level, the γ lines through it with its core,
/// and a plain copy of every slope one level higher.
pub fn crosscap_step(st: &ConstructionState) -> Result<ConstructionState, BuildError> {
    let mut layout = st.layout.clone();
    push_crosscap(&mut layout, st.next_level, true);
    state(layout, st.next_level + 2, None)
}

/// Like [`crosscap_step`] but keeps only the one-sided curves.
pub fn crosscap_step_one_sided(st: &ConstructionState) -> Result<ConstructionState, BuildError> {
    let mut layout = st.layout.clone();
    push_crosscap(&mut layout, st.next_level, false);
    state(layout, st.next_level + 1, None)
}

fn mrt_layout(k: u32, b: u32) -> (Layout, u32) {
    let (m, n) = (k / 2, k - k / 2);
    let mut layout = Layout::new(2 * m + 1);
    layout.add_lines(Role::Base, 0, None);
    for level in 1..=2 * n + b {
        push_shift(&mut layout, level);
    }
    push_handles(&mut layout, n as usize).expect("2n holes were just punched");
    (layout, 2 * n + b + 1)
}

/// The orientable family on S_{k,b}.
pub fn build_mrt(k: u32, b: u32) -> Result<ConstructionState, BuildError> {
    if k < 2 {
        return Err(BuildError::Unsupported(format!("the orientable build needs k >= 2 (got k={k})")));
    }
    let (layout, next) = mrt_layout(k, b);
    state(layout, next, Some(Recipe::Mrt { k, b }))
}

/// The mixed-sidedness family on N_{g,b}.
pub fn build_theorem_a(g: u32, b: u32, k: Option<u32>) -> Result<ConstructionState, BuildError> {
    let p = ConstructionParams::theorem_a(g, b, k)?;
    let (mut layout, mut next) = mrt_layout(p.k, b);
    for _ in 0..g - 2 * p.k {
        push_crosscap(&mut layout, next, true);
        next += 2;
    }
    state(layout, next, Some(Recipe::TheoremA { g, b, k: p.k }))
}

/// The family of one-sided curves on N_g.
pub fn build_theorem_b(g: u32, k: Option<u32>) -> Result<ConstructionState, BuildError> {
    let p = ConstructionParams::theorem_b(g, k)?;
    let mut layout = Layout::new(2 * p.k + 1);
    let mut next = 1;
    for _ in 0..g - 2 * p.k {
        push_crosscap(&mut layout, next, false);
        next += 1;
    }
    state(layout, next, Some(Recipe::TheoremB { g, k: p.k }))
}
