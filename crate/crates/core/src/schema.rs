//! Polygon gluing schemas and their classification.
//!
//! A schema is a set of polygonal faces, each given by a cyclic word of
//! directed edge occurrences. A label that occurs twice is an interior edge
//! glued according to its [`Flag`]; a label that occurs once is a boundary
//! edge. Positions along an occurrence are always measured in the direction
//! the face word is read, so a gluing of two occurrences read in the same
//! direction maps `t ↦ t` (orientation-reversing, e.g. the cross-cap `x x`)
//! and a gluing of opposite occurrences maps `t ↦ 1 − t`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SchemaError;

/// Opaque edge identifier, unique within a schema.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeLabel(pub String);

impl EdgeLabel {
    pub fn new(s: impl Into<String>) -> Self {
        EdgeLabel(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for EdgeLabel {
    fn from(s: &str) -> Self {
        EdgeLabel(s.to_owned())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    #[serde(rename = "+")]
    Forward,
    #[serde(rename = "-")]
    Backward,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
        }
    }
}

/// One directed occurrence of an edge label inside a face word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub edge: EdgeLabel,
    pub dir: Dir,
}

impl Letter {
    pub fn fwd(edge: impl Into<String>) -> Self {
        Letter { edge: EdgeLabel(edge.into()), dir: Dir::Forward }
    }

    pub fn bwd(edge: impl Into<String>) -> Self {
        Letter { edge: EdgeLabel(edge.into()), dir: Dir::Backward }
    }

    pub fn inverse(&self) -> Letter {
        Letter { edge: self.edge.clone(), dir: self.dir.flip() }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dir {
            Dir::Forward => write!(f, "{}", self.edge),
            Dir::Backward => write!(f, "{}⁻", self.edge),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceWord {
    pub id: String,
    pub word: Vec<Letter>,
}

impl FaceWord {
    pub fn new(id: impl Into<String>, word: Vec<Letter>) -> Self {
        FaceWord { id: id.into(), word }
    }
}

/// Parameter map of a glued edge: `Same` is `t ↦ t`, `Reversed` is `t ↦ 1 − t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Same,
    Reversed,
}

impl Flag {
    /// The only flag consistent with occurrence directions `a` and `b`.
    pub fn for_dirs(a: Dir, b: Dir) -> Flag {
        if a == b {
            Flag::Same
        } else {
            Flag::Reversed
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair {
    pub edge: EdgeLabel,
    pub flag: Flag,
}

/// Occurrence identity: face index plus position in that face's word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occ {
    pub face: usize,
    pub index: usize,
}

impl Occ {
    pub fn new(face: usize, index: usize) -> Self {
        Occ { face, index }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSchema {
    pub faces: Vec<FaceWord>,
    pub pairs: Vec<Pair>,
}

/// Result of classifying a connected schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceType {
    pub orientable: bool,
    /// Orientable genus `k`, or the number `g ≥ 1` of projective planes.
    pub genus: u32,
    pub boundary: u32,
}

impl SurfaceType {
    pub fn orientable(genus: u32, boundary: u32) -> Self {
        SurfaceType { orientable: true, genus, boundary }
    }

    pub fn non_orientable(genus: u32, boundary: u32) -> Self {
        SurfaceType { orientable: false, genus, boundary }
    }

    pub fn is_legal(&self) -> bool {
        self.orientable || self.genus >= 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        let g = i64::from(self.genus);
        let b = i64::from(self.boundary);
        if self.orientable {
            2 - 2 * g - b
        } else {
            2 - g - b
        }
    }

    pub fn is_disc(&self) -> bool {
        *self == SurfaceType::orientable(0, 1)
    }

    pub fn is_annulus(&self) -> bool {
        *self == SurfaceType::orientable(0, 2)
    }

    pub fn is_mobius_band(&self) -> bool {
        *self == SurfaceType::non_orientable(1, 1)
    }

    /// Compact notation, `S_{k,b}` or `N_{g,b}`.
    pub fn notation(&self) -> String {
        let letter = if self.orientable { 'S' } else { 'N' };
        format!("{letter}_{{{},{}}}", self.genus, self.boundary)
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientable {
            write!(f, "orientable k={} b={}", self.genus, self.boundary)
        } else {
            write!(f, "non-orientable g={} b={}", self.genus, self.boundary)
        }
    }
}

/// A single violated schema invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyFace { face: String },
    DuplicateFaceId { face: String },
    Multiplicity { edge: EdgeLabel, count: usize },
    UnpairedInterior { edge: EdgeLabel },
    PairOnBoundaryEdge { edge: EdgeLabel },
    UnknownPair { edge: EdgeLabel },
    DuplicatePair { edge: EdgeLabel },
    FlagMismatch { edge: EdgeLabel, expected: Flag },
    Disconnected { components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyFace { face } => write!(f, "face {face} has an empty word"),
            Violation::DuplicateFaceId { face } => write!(f, "face id {face} is used twice"),
            Violation::Multiplicity { edge, count } => {
                write!(f, "edge {edge} occurs {count} times (must be 1 or 2)")
            }
            Violation::UnpairedInterior { edge } => {
                write!(f, "edge {edge} occurs twice but has no pairing")
            }
            Violation::PairOnBoundaryEdge { edge } => {
                write!(f, "edge {edge} occurs once but has a pairing")
            }
            Violation::UnknownPair { edge } => write!(f, "pairing names unknown edge {edge}"),
            Violation::DuplicatePair { edge } => write!(f, "edge {edge} is paired twice"),
            Violation::FlagMismatch { edge, expected } => {
                write!(f, "edge {edge} flag disagrees with occurrence directions (expected {expected:?})")
            }
            Violation::Disconnected { components } => {
                write!(f, "schema has {components} connected components")
            }
        }
    }
}

/// Outcome of [`validate_schema`]; valid iff no violations were found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Validity {
    pub violations: Vec<Violation>,
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    Start,
    End,
}

/// Derived lookup tables for a schema whose label multiplicities are valid.
#[derive(Clone, Debug)]
pub struct SchemaIndex {
    /// Offset of each face's first corner in the global corner numbering.
    corner_offset: Vec<usize>,
    partner: HashMap<Occ, (Occ, Flag)>,
    label_occs: BTreeMap<EdgeLabel, Vec<Occ>>,
}

impl SchemaIndex {
    /// Glued partner of an occurrence, or `None` for a boundary edge.
    pub fn partner(&self, occ: Occ) -> Option<(Occ, Flag)> {
        self.partner.get(&occ).copied()
    }

    pub fn occurrences(&self, edge: &EdgeLabel) -> &[Occ] {
        self.label_occs.get(edge).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn labels(&self) -> impl Iterator<Item = (&EdgeLabel, &[Occ])> {
        self.label_occs.iter().map(|(l, v)| (l, v.as_slice()))
    }

    fn corner(&self, face: usize, j: usize) -> usize {
        self.corner_offset[face] + j
    }

    fn num_corners(&self) -> usize {
        *self.corner_offset.last().unwrap_or(&0)
    }
}

impl SurfaceSchema {
    pub fn new(faces: Vec<FaceWord>, pairs: Vec<Pair>) -> Self {
        SurfaceSchema { faces, pairs }
    }

    /// Builds a schema from faces alone, pairing every doubly occurring label
    /// with the flag its occurrence directions dictate.
    pub fn from_faces(faces: Vec<FaceWord>) -> Self {
        let mut seen: BTreeMap<&EdgeLabel, Vec<Dir>> = BTreeMap::new();
        let mut order: Vec<&EdgeLabel> = Vec::new();
        for face in &faces {
            for letter in &face.word {
                let dirs = seen.entry(&letter.edge).or_default();
                if dirs.is_empty() {
                    order.push(&letter.edge);
                }
                dirs.push(letter.dir);
            }
        }
        let pairs = order
            .into_iter()
            .filter_map(|edge| match seen[edge].as_slice() {
                [a, b] => Some(Pair { edge: edge.clone(), flag: Flag::for_dirs(*a, *b) }),
                _ => None,
            })
            .collect();
        SurfaceSchema { faces, pairs }
    }

    /// Parses a single-face word such as `"a b a- b-"`; trailing `-` or `⁻`
    /// marks a backward occurrence.
    pub fn from_word(word: &str) -> Self {
        SurfaceSchema::from_faces(vec![FaceWord::new("F", parse_word(word))])
    }

    pub fn face_index(&self, id: &str) -> Option<usize> {
        self.faces.iter().position(|f| f.id == id)
    }

    pub fn letter(&self, occ: Occ) -> &Letter {
        &self.faces[occ.face].word[occ.index]
    }

    pub fn face_len(&self, face: usize) -> usize {
        self.faces[face].word.len()
    }

    pub fn num_labels(&self) -> usize {
        self.faces
            .iter()
            .flat_map(|f| f.word.iter().map(|l| &l.edge))
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Builds the lookup index, failing on any multiplicity or pairing defect.
    pub fn index(&self) -> Result<SchemaIndex, SchemaError> {
        let mut label_occs: BTreeMap<EdgeLabel, Vec<Occ>> = BTreeMap::new();
        let mut corner_offset = Vec::with_capacity(self.faces.len() + 1);
        let mut total = 0;
        for (fi, face) in self.faces.iter().enumerate() {
            if face.word.is_empty() {
                return Err(SchemaError::Invalid(vec![Violation::EmptyFace { face: face.id.clone() }]));
            }
            corner_offset.push(total);
            total += face.word.len();
            for (j, letter) in face.word.iter().enumerate() {
                label_occs.entry(letter.edge.clone()).or_default().push(Occ::new(fi, j));
            }
        }
        corner_offset.push(total);

        let mut partner = HashMap::new();
        let mut violations = Vec::new();
        let mut flags: HashMap<&EdgeLabel, Flag> = HashMap::new();
        for pair in &self.pairs {
            if flags.insert(&pair.edge, pair.flag).is_some() {
                violations.push(Violation::DuplicatePair { edge: pair.edge.clone() });
            }
        }
        for (edge, occs) in &label_occs {
            match occs.len() {
                1 => {
                    if flags.contains_key(edge) {
                        violations.push(Violation::PairOnBoundaryEdge { edge: edge.clone() });
                    }
                }
                2 => match flags.get(edge) {
                    None => violations.push(Violation::UnpairedInterior { edge: edge.clone() }),
                    Some(&flag) => {
                        let expected = Flag::for_dirs(self.letter(occs[0]).dir, self.letter(occs[1]).dir);
                        if flag != expected {
                            violations.push(Violation::FlagMismatch { edge: edge.clone(), expected });
                        }
                        partner.insert(occs[0], (occs[1], flag));
                        partner.insert(occs[1], (occs[0], flag));
                    }
                },
                count => violations.push(Violation::Multiplicity { edge: edge.clone(), count }),
            }
        }
        for pair in &self.pairs {
            if !label_occs.contains_key(&pair.edge) {
                violations.push(Violation::UnknownPair { edge: pair.edge.clone() });
            }
        }
        if !violations.is_empty() {
            return Err(SchemaError::Invalid(violations));
        }
        Ok(SchemaIndex { corner_offset, partner, label_occs })
    }

    /// Face components under gluing, as lists of face indices in stored order.
    pub(crate) fn face_components(&self, index: &SchemaIndex) -> Vec<Vec<usize>> {
        let n = self.faces.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            let mut queue = VecDeque::from([start]);
            comp[start] = id;
            while let Some(f) = queue.pop_front() {
                members.push(f);
                for j in 0..self.faces[f].word.len() {
                    if let Some((other, _)) = index.partner(Occ::new(f, j)) {
                        if comp[other.face] == usize::MAX {
                            comp[other.face] = id;
                            queue.push_back(other.face);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Vertex classes of the glued complex, as a corner → vertex map.
    fn vertex_classes(&self, index: &SchemaIndex) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(index.num_corners());
        for (occ, &(other, flag)) in &index.partner {
            if occ > &other {
                continue;
            }
            let (s1, e1) = self.corner_ends(index, *occ);
            let (s2, e2) = self.corner_ends(index, other);
            match flag {
                Flag::Same => {
                    uf.union(s1, s2);
                    uf.union(e1, e2);
                }
                Flag::Reversed => {
                    uf.union(s1, e2);
                    uf.union(e1, s2);
                }
            }
        }
        uf.classes()
    }

    fn corner_ends(&self, index: &SchemaIndex, occ: Occ) -> (usize, usize) {
        let len = self.face_len(occ.face);
        (index.corner(occ.face, occ.index), index.corner(occ.face, (occ.index + 1) % len))
    }

    /// Continues a boundary walk through the edge end `(occ, end)`; returns the
    /// next boundary occurrence and whether it is read forwards.
    fn walk_link(&self, index: &SchemaIndex, mut occ: Occ, mut end: End) -> (Occ, bool) {
        loop {
            let Some((other, flag)) = index.partner(occ) else {
                return (occ, end == End::Start);
            };
            let other_end = match (flag, end) {
                (Flag::Same, e) => e,
                (Flag::Reversed, End::Start) => End::End,
                (Flag::Reversed, End::End) => End::Start,
            };
            let len = self.face_len(other.face);
            match other_end {
                End::Start => {
                    occ = Occ::new(other.face, (other.index + len - 1) % len);
                    end = End::End;
                }
                End::End => {
                    occ = Occ::new(other.face, (other.index + 1) % len);
                    end = End::Start;
                }
            }
        }
    }
}

/// Checks multiplicities, pairing totality and connectedness.
pub fn validate_schema(s: &SurfaceSchema) -> Validity {
    validate_schema_with(s, true)
}

pub fn validate_schema_with(s: &SurfaceSchema, require_connected: bool) -> Validity {
    let mut violations = Vec::new();
    let mut ids = BTreeSet::new();
    for face in &s.faces {
        if !ids.insert(face.id.as_str()) {
            violations.push(Violation::DuplicateFaceId { face: face.id.clone() });
        }
    }
    match s.index() {
        Ok(index) => {
            if require_connected {
                let components = s.face_components(&index).len();
                if components > 1 {
                    violations.push(Violation::Disconnected { components });
                }
            }
        }
        Err(SchemaError::Invalid(v)) => violations.extend(v),
        Err(other) => unreachable!("index() only reports violations: {other}"),
    }
    Validity { violations }
}

fn checked(s: &SurfaceSchema, require_connected: bool) -> Result<SchemaIndex, SchemaError> {
    let validity = validate_schema_with(s, require_connected);
    if !validity.is_valid() {
        return Err(SchemaError::Invalid(validity.violations));
    }
    s.index()
}

/// `V − E + F`, with vertices found by walking corners around glued edges.
pub fn euler_characteristic(s: &SurfaceSchema) -> Result<i64, SchemaError> {
    let index = checked(s, false)?;
    Ok(euler_with_index(s, &index))
}

pub(crate) fn euler_with_index(s: &SurfaceSchema, index: &SchemaIndex) -> i64 {
    let (_, v) = s.vertex_classes(index);
    let e = index.label_occs.len();
    let f = s.faces.len();
    v as i64 - e as i64 + f as i64
}

/// A boundary circle: boundary occurrences in walking order, each with the
/// direction it is traversed relative to its face word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCycle {
    pub edges: Vec<(Occ, bool)>,
}

pub fn boundary_cycles(s: &SurfaceSchema) -> Result<Vec<BoundaryCycle>, SchemaError> {
    let index = checked(s, false)?;
    Ok(cycles_with_index(s, &index))
}

pub(crate) fn cycles_with_index(s: &SurfaceSchema, index: &SchemaIndex) -> Vec<BoundaryCycle> {
    let mut visited: BTreeSet<Occ> = BTreeSet::new();
    let mut out = Vec::new();
    for (fi, face) in s.faces.iter().enumerate() {
        for j in 0..face.word.len() {
            let start = Occ::new(fi, j);
            if index.partner(start).is_some() || visited.contains(&start) {
                continue;
            }
            let mut edges = Vec::new();
            let (mut occ, mut forward) = (start, true);
            loop {
                visited.insert(occ);
                edges.push((occ, forward));
                let len = s.face_len(occ.face);
                let (next_occ, next_end) = if forward {
                    (Occ::new(occ.face, (occ.index + 1) % len), End::Start)
                } else {
                    (Occ::new(occ.face, (occ.index + len - 1) % len), End::End)
                };
                let (n, f) = s.walk_link(index, next_occ, next_end);
                if n == start {
                    break;
                }
                occ = n;
                forward = f;
            }
            out.push(BoundaryCycle { edges });
        }
    }
    out
}

/// Whether face orientations can be chosen so every gluing preserves orientation.
pub fn is_orientable(s: &SurfaceSchema) -> Result<bool, SchemaError> {
    let index = checked(s, true)?;
    Ok(orientation_with_index(s, &index).is_some())
}

/// A consistent choice of face flips, if one exists (`true` = flip the face).
pub(crate) fn orientation_with_index(s: &SurfaceSchema, index: &SchemaIndex) -> Option<Vec<bool>> {
    let n = s.faces.len();
    let mut flip: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let ff = flip[f].unwrap();
            for j in 0..s.faces[f].word.len() {
                let occ = Occ::new(f, j);
                let Some((other, flag)) = index.partner(occ) else { continue };
                // Same-direction gluing needs exactly one of the faces flipped.
                let want = ff ^ (flag == Flag::Same);
                match flip[other.face] {
                    None => {
                        flip[other.face] = Some(want);
                        queue.push_back(other.face);
                    }
                    Some(existing) if existing != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(flip.into_iter().map(Option::unwrap).collect())
}

pub fn classify_surface(s: &SurfaceSchema) -> Result<SurfaceType, SchemaError> {
    let index = checked(s, true)?;
    classify_with_index(s, &index)
}

pub(crate) fn classify_with_index(s: &SurfaceSchema, index: &SchemaIndex) -> Result<SurfaceType, SchemaError> {
    if s.faces.is_empty() {
        return Err(SchemaError::Inconsistent("empty schema has no surface type".into()));
    }
    let chi = euler_with_index(s, index);
    let b = cycles_with_index(s, index).len() as i64;
    let orientable = orientation_with_index(s, index).is_some();
    let deficit = 2 - b - chi;
    let boundary = b as u32;
    if orientable {
        if deficit < 0 || deficit % 2 != 0 {
            return Err(SchemaError::Inconsistent(format!(
                "orientable schema with χ={chi}, b={b} has no integer genus"
            )));
        }
        Ok(SurfaceType::orientable((deficit / 2) as u32, boundary))
    } else {
        if deficit < 1 {
            return Err(SchemaError::Inconsistent(format!(
                "non-orientable schema with χ={chi}, b={b} gives genus {deficit}"
            )));
        }
        Ok(SurfaceType::non_orientable(deficit as u32, boundary))
    }
}

/// Splits a schema into its gluing-connected pieces, preserving stored order.
pub fn connected_components(s: &SurfaceSchema) -> Result<Vec<SurfaceSchema>, SchemaError> {
    let index = checked(s, false)?;
    Ok(components_with_index(s, &index))
}

pub(crate) fn components_with_index(s: &SurfaceSchema, index: &SchemaIndex) -> Vec<SurfaceSchema> {
    s.face_components(index)
        .into_iter()
        .map(|members| {
            let faces: Vec<FaceWord> = members.iter().map(|&f| s.faces[f].clone()).collect();
            let labels: BTreeSet<&EdgeLabel> = faces.iter().flat_map(|f| f.word.iter().map(|l| &l.edge)).collect();
            let pairs = s.pairs.iter().filter(|p| labels.contains(&p.edge)).cloned().collect();
            SurfaceSchema { faces, pairs }
        })
        .collect()
}

/// Canonical one-face schema: handles `aᵢ bᵢ aᵢ⁻ bᵢ⁻` or cross-caps `xⱼ xⱼ`,
/// then boundary circles (the first a bare free edge `e₁`, the rest
/// `cₗ eₗ cₗ⁻` so they stay separate circles).
pub fn standard_schema(t: SurfaceType) -> Result<SurfaceSchema, SchemaError> {
    if !t.is_legal() {
        return Err(SchemaError::IllegalType(t));
    }
    let mut word = Vec::new();
    if t.orientable {
        for i in 1..=t.genus {
            word.push(Letter::fwd(format!("a{i}")));
            word.push(Letter::fwd(format!("b{i}")));
            word.push(Letter::bwd(format!("a{i}")));
            word.push(Letter::bwd(format!("b{i}")));
        }
    } else {
        for j in 1..=t.genus {
            word.push(Letter::fwd(format!("x{j}")));
            word.push(Letter::fwd(format!("x{j}")));
        }
    }
    for l in 1..=t.boundary {
        if l == 1 {
            word.push(Letter::fwd("e1"));
        } else {
            word.push(Letter::fwd(format!("c{l}")));
            word.push(Letter::fwd(format!("e{l}")));
            word.push(Letter::bwd(format!("c{l}")));
        }
    }
    if word.is_empty() {
        word = vec![Letter::fwd("s"), Letter::bwd("s")];
    }
    Ok(SurfaceSchema::from_faces(vec![FaceWord::new("F", word)]))
}

/// Parses whitespace separated letters; `a-`, `a⁻` and `a'` are backward.
pub fn parse_word(word: &str) -> Vec<Letter> {
    word.split_whitespace()
        .map(|tok| {
            for suffix in ["⁻", "-", "'"] {
                if let Some(base) = tok.strip_suffix(suffix) {
                    return Letter::bwd(base);
                }
            }
            Letter::fwd(tok)
        })
        .collect()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Dense class ids in first-seen order, plus the class count.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut ids = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            out[x] = ids[r];
        }
        (out, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(word: &str) -> SurfaceType {
        classify_surface(&SurfaceSchema::from_word(word)).unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(validate_schema(&SurfaceSchema::from_word("a a")).is_valid());

        let triple = SurfaceSchema::from_word("a a a");
        let v = validate_schema(&triple);
        assert!(matches!(v.violations.as_slice(), [Violation::Multiplicity { count: 3, .. }]));

        let two = SurfaceSchema::from_faces(vec![
            FaceWord::new("A", parse_word("a a")),
            FaceWord::new("B", parse_word("b b")),
        ]);
        assert_eq!(validate_schema(&two).violations, vec![Violation::Disconnected { components: 2 }]);
        assert!(validate_schema_with(&two, false).is_valid());
    }

    #[test]
    fn flag_must_match_directions() {
        let mut s = SurfaceSchema::from_word("x x");
        s.pairs[0].flag = Flag::Reversed;
        let v = validate_schema(&s);
        assert_eq!(v.violations, vec![Violation::FlagMismatch { edge: "x".into(), expected: Flag::Same }]);

        let mut unpaired = SurfaceSchema::from_word("a a-");
        unpaired.pairs.clear();
        assert_eq!(validate_schema(&unpaired).violations, vec![Violation::UnpairedInterior { edge: "a".into() }]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&SurfaceSchema::from_word("a b a- b-")).unwrap(), 0);
        assert_eq!(euler_characteristic(&SurfaceSchema::from_word("a a")).unwrap(), 1);
        assert_eq!(euler_characteristic(&SurfaceSchema::from_word("x x e")).unwrap(), 0);
        assert_eq!(euler_characteristic(&SurfaceSchema::from_word("e")).unwrap(), 1);
        assert_eq!(euler_characteristic(&SurfaceSchema::from_word("s s-")).unwrap(), 2);
    }

    #[test]
    fn boundary_examples() {
        let mobius = SurfaceSchema::from_word("x x e");
        assert_eq!(boundary_cycles(&mobius).unwrap().len(), 1);
        assert_eq!(boundary_cycles(&SurfaceSchema::from_word("a b a b-")).unwrap().len(), 0);
        let pants = standard_schema(SurfaceType::orientable(0, 3)).unwrap();
        let cycles = boundary_cycles(&pants).unwrap();
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.edges.len() == 1));
    }

    #[test]
    fn orientability_examples() {
        assert!(is_orientable(&SurfaceSchema::from_word("a b a- b-")).unwrap());
        assert!(!is_orientable(&SurfaceSchema::from_word("a a")).unwrap());
        assert!(!is_orientable(&SurfaceSchema::from_word("a b a b-")).unwrap());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify("a a b b"), SurfaceType::non_orientable(2, 0));
        assert_eq!(classify("a b a b-"), SurfaceType::non_orientable(2, 0));
        assert_eq!(classify("a b a- b- c c"), SurfaceType::non_orientable(3, 0));
        assert_eq!(classify("x x e"), SurfaceType::non_orientable(1, 1));
        assert_eq!(classify("a b a- b-"), SurfaceType::orientable(1, 0));
        assert_eq!(classify("s s-"), SurfaceType::orientable(0, 0));
    }

    #[test]
    fn multi_face_gluing_is_classified() {
        // Torus split into two triangles along a diagonal d.
        let s = SurfaceSchema::from_faces(vec![
            FaceWord::new("T1", parse_word("a b d-")),
            FaceWord::new("T2", parse_word("d a- b-")),
        ]);
        assert_eq!(classify_surface(&s).unwrap(), SurfaceType::orientable(1, 0));
        // Same split with the second triangle written clockwise.
        let flipped = SurfaceSchema::from_faces(vec![
            FaceWord::new("T1", parse_word("a b d-")),
            FaceWord::new("T2", parse_word("b a d-")),
        ]);
        assert_eq!(classify_surface(&flipped).unwrap(), SurfaceType::orientable(1, 0));
    }

    #[test]
    fn components_examples() {
        let torus = SurfaceSchema::from_word("a b a- b-");
        assert_eq!(connected_components(&torus).unwrap().len(), 1);
        let union = SurfaceSchema::from_faces(vec![
            FaceWord::new("T", parse_word("a b a- b-")),
            FaceWord::new("P", parse_word("x x")),
        ]);
        let comps = connected_components(&union).unwrap();
        let types: Vec<_> = comps.iter().map(|c| classify_surface(c).unwrap()).collect();
        assert_eq!(types, vec![SurfaceType::orientable(1, 0), SurfaceType::non_orientable(1, 0)]);
        assert!(connected_components(&SurfaceSchema::default()).unwrap().is_empty());
    }

    #[test]
    fn standard_words() {
        let rp2 = standard_schema(SurfaceType::non_orientable(1, 0)).unwrap();
        assert_eq!(rp2.faces[0].word, parse_word("x1 x1"));
        let torus = standard_schema(SurfaceType::orientable(1, 0)).unwrap();
        assert_eq!(torus.faces[0].word, parse_word("a1 b1 a1- b1-"));
        let n31 = standard_schema(SurfaceType::non_orientable(3, 1)).unwrap();
        assert_eq!(n31.faces[0].word, parse_word("x1 x1 x2 x2 x3 x3 e1"));
        assert_eq!(classify_surface(&n31).unwrap(), SurfaceType::non_orientable(3, 1));
        assert!(standard_schema(SurfaceType::non_orientable(0, 1)).is_err());
    }

    #[test]
    fn standard_round_trip_small() {
        for genus in 0..5 {
            for boundary in 0..5 {
                for orientable in [true, false] {
                    let t = SurfaceType { orientable, genus, boundary };
                    if !t.is_legal() {
                        continue;
                    }
                    let s = standard_schema(t).unwrap();
                    assert_eq!(classify_surface(&s).unwrap(), t, "{t}");
                    assert_eq!(euler_characteristic(&s).unwrap(), t.euler_characteristic());
                }
            }
        }
    }

    #[test]
    fn serde_shape() {
        let s = SurfaceSchema::from_word("x x e");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"faces":[{"id":"F","word":[{"edge":"x","dir":"+"},{"edge":"x","dir":"+"},{"edge":"e","dir":"+"}]}],"pairs":[{"edge":"x","flag":"same"}]}"#
        );
        let back: SurfaceSchema = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
