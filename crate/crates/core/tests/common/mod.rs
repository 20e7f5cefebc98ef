//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use crosscap::schema::{standard_schema, FaceWord, Letter, Occ, SurfaceSchema, SurfaceType};
use crosscap::{Chord, Curve, CurvePoint, Flag, Pos};
use num_bigint::BigInt;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;

type Q = Ratio<BigInt>;
type Pt = (Q, Q);

fn q(n: i64, d: i64) -> Q {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

fn big(p: &Pos) -> Q {
    Ratio::new(BigInt::from(*p.numer()), BigInt::from(*p.denom()))
}

/// A face drawn in the plane with exact rational coordinates: a regular
/// polygon (vertices rounded to 1e-6) whose sides bulge outward along
/// parabolas, so the boundary is strictly convex even where several chord
/// endpoints share one side.
pub struct Embedding {
    vertices: Vec<Pt>,
    bulge: Q,
}

impl Embedding {
    pub fn regular(n: usize) -> Self {
        assert!(n >= 2, "faces with one side have no chords to compare");
        let vertices = (0..n)
            .map(|i| {
                let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                let r = |x: f64| q((x * 1e6).round() as i64, 1_000_000);
                (r(a.cos()), r(a.sin()))
            })
            .collect();
        // Turning at each vertex stays positive: 2·atan(4c) < 2π/n.
        let bulge = if n == 2 { q(1, 4) } else { q(1, 8 * n as i64) };
        Embedding { vertices, bulge }
    }

    pub fn point(&self, side: usize, t: &Q) -> Pt {
        let n = self.vertices.len();
        let (a, b) = (&self.vertices[side], &self.vertices[(side + 1) % n]);
        let (dx, dy) = (&b.0 - &a.0, &b.1 - &a.1);
        let one = q(1, 1);
        let h = q(4, 1) * t * (&one - t) * &self.bulge;
        // Counter-clockwise vertices: (dy, -dx) points outward.
        (&a.0 + t * &dx + &h * &dy, &a.1 + t * &dy - &h * &dx)
    }
}

fn orient(p: &Pt, q: &Pt, r: &Pt) -> i32 {
    let v = (&q.0 - &p.0) * (&r.1 - &p.1) - (&q.1 - &p.1) * (&r.0 - &p.0);
    let zero = Ratio::from_integer(BigInt::from(0));
    if v > zero {
        1
    } else if v < zero {
        -1
    } else {
        0
    }
}

/// Proper intersection of two closed segments; touching is a test bug.
pub fn segments_cross(p1: &Pt, p2: &Pt, q1: &Pt, q2: &Pt) -> bool {
    let (o1, o2, o3, o4) = (orient(p1, p2, q1), orient(p1, p2, q2), orient(q1, q2, p1), orient(q1, q2, p2));
    assert!(o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0, "degenerate configuration");
    o1 != o2 && o3 != o4
}

/// Crossings of two curves counted geometrically, face by face.
pub fn geometric_crossings(s: &SurfaceSchema, a: &Curve, b: &Curve) -> u32 {
    let embeddings: Vec<Embedding> = s.faces.iter().map(|f| Embedding::regular(f.word.len().max(2))).collect();
    let at = |c: &Chord, p: &CurvePoint| embeddings[c.face].point(p.occ.index, &big(&p.pos));
    let mut n = 0;
    for ca in &a.chords {
        for cb in &b.chords {
            if ca.face == cb.face && segments_cross(&at(ca, &ca.from), &at(ca, &ca.to), &at(cb, &cb.from), &at(cb, &cb.to)) {
                n += 1;
            }
        }
    }
    n
}

/// Random legal surface type small enough for quick cutting.
pub fn random_type(rng: &mut impl Rng) -> SurfaceType {
    let b = rng.gen_range(0..=2);
    if rng.gen_bool(0.5) {
        SurfaceType::orientable(rng.gen_range(0..=2), b)
    } else {
        SurfaceType::non_orientable(rng.gen_range(1..=4), b)
    }
}

/// The standard schema of `t`, sometimes split along a diagonal into two faces.
pub fn random_schema(rng: &mut impl Rng, t: SurfaceType) -> SurfaceSchema {
    let s = standard_schema(t).unwrap();
    let word = &s.faces[0].word;
    if word.len() < 2 || rng.gen_bool(0.4) {
        return s;
    }
    let rot = rng.gen_range(0..word.len());
    let mut w: Vec<Letter> = word[rot..].iter().chain(&word[..rot]).cloned().collect();
    let cut = rng.gen_range(1..w.len());
    let mut second = w.split_off(cut);
    w.push(Letter::fwd("diag"));
    second.push(Letter::bwd("diag"));
    SurfaceSchema::from_faces(vec![FaceWord::new("P", w), FaceWord::new("Q", second)])
}

/// Random non-crossing perfect matching of `n` points in boundary order.
fn random_matching(rng: &mut impl Rng, lo: usize, hi: usize, out: &mut Vec<(usize, usize)>) {
    if lo >= hi {
        return;
    }
    let partners: Vec<usize> = (lo + 1..hi).step_by(2).collect();
    let j = *partners.choose(rng).unwrap();
    out.push((lo, j));
    random_matching(rng, lo + 1, j, out);
    random_matching(rng, j + 1, hi, out);
}

/// `count` distinct positions in (0, 1), sorted.
fn random_positions(rng: &mut impl Rng, count: usize) -> Vec<Pos> {
    let d = 64 * (count as i64 + 1);
    let mut v: Vec<i64> = rand::seq::index::sample(rng, (d - 1) as usize, count).into_iter().map(|x| x as i64 + 1).collect();
    v.sort_unstable();
    v.into_iter().map(|n| Pos::new(n, d)).collect()
}

/// Builds every closed component of the multicurve with `counts[label]`
/// crossings per paired label and a random matching in each face.
/// `None` when some face gets an odd number of points.
pub fn random_multicurve(rng: &mut impl Rng, s: &SurfaceSchema, counts: &BTreeMap<String, usize>) -> Option<Vec<Curve>> {
    let index = s.index().unwrap();
    let mut per_face: Vec<Vec<CurvePoint>> = vec![Vec::new(); s.faces.len()];
    let mut partner: HashMap<(Occ, Pos), (Occ, Pos)> = HashMap::new();
    for p in &s.pairs {
        let c = counts.get(p.edge.as_str()).copied().unwrap_or(0);
        let occs = index.occurrences(&p.edge);
        for t in random_positions(rng, c) {
            let u = match p.flag {
                Flag::Same => t,
                Flag::Reversed => Pos::from_integer(1) - t,
            };
            per_face[occs[0].face].push(CurvePoint::new(occs[0], t));
            per_face[occs[1].face].push(CurvePoint::new(occs[1], u));
            partner.insert((occs[0], t), (occs[1], u));
            partner.insert((occs[1], u), (occs[0], t));
        }
    }
    let mut other_end: HashMap<(Occ, Pos), CurvePoint> = HashMap::new();
    for pts in per_face.iter_mut() {
        if pts.len() % 2 == 1 {
            return None;
        }
        pts.sort_by(|a, b| (a.occ.index, a.pos).cmp(&(b.occ.index, b.pos)));
        let mut m = Vec::new();
        random_matching(rng, 0, pts.len(), &mut m);
        for (i, j) in m {
            other_end.insert((pts[i].occ, pts[i].pos), pts[j]);
            other_end.insert((pts[j].occ, pts[j].pos), pts[i]);
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut starts: Vec<CurvePoint> = per_face.iter().flatten().copied().collect();
    starts.sort_by(|a, b| (a.occ, a.pos).cmp(&(b.occ, b.pos)));
    let mut curves = Vec::new();
    for start in starts {
        if seen.contains(&(start.occ, start.pos)) {
            continue;
        }
        let mut chords = Vec::new();
        let mut from = start;
        loop {
            seen.insert((from.occ, from.pos));
            let to = other_end[&(from.occ, from.pos)];
            seen.insert((to.occ, to.pos));
            chords.push(Chord::new(from.occ.face, from, to));
            let (occ, pos) = partner[&(to.occ, to.pos)];
            from = CurvePoint::new(occ, pos);
            if from == start {
                break;
            }
        }
        curves.push(Curve::new(format!("r{}", curves.len()), chords));
    }
    Some(curves)
}

/// A random simple closed curve: one component of a random multicurve.
pub fn random_simple_curve(rng: &mut impl Rng, s: &SurfaceSchema, max_per_label: usize) -> Option<Curve> {
    let counts: BTreeMap<String, usize> =
        s.pairs.iter().map(|p| (p.edge.as_str().to_owned(), rng.gen_range(0..=max_per_label))).collect();
    let mut comps = random_multicurve(rng, s, &counts)?;
    if comps.is_empty() {
        return None;
    }
    let i = rng.gen_range(0..comps.len());
    let mut c = comps.swap_remove(i);
    c.id = "c".into();
    Some(c)
}

/// A simple curve on the standard `N_g` through every cross-cap exactly once.
pub fn curve_through_each_crosscap_once(rng: &mut impl Rng, g: u32) -> Curve {
    let s = standard_schema(SurfaceType::non_orientable(g, 0)).unwrap();
    let counts: BTreeMap<String, usize> = (1..=g).map(|i| (format!("x{i}"), 1)).collect();
    for _ in 0..10_000 {
        let comps = random_multicurve(rng, &s, &counts).unwrap();
        if comps.len() == 1 {
            let mut c = comps.into_iter().next().unwrap();
            c.id = "once".into();
            return c;
        }
    }
    panic!("no single-component matching found for g={g}");
}

/// Random chord pairs on random faces, for the crossing kernel.
pub fn random_chord_pair(rng: &mut impl Rng) -> (usize, Chord, Chord) {
    let n = rng.gen_range(2..=12);
    let mut slots: Vec<(usize, Pos)> = Vec::new();
    while slots.len() < 4 {
        let side = rng.gen_range(0..n);
        let d = rng.gen_range(2..=40);
        let p = (side, Pos::new(rng.gen_range(1..d), d));
        if !slots.contains(&p) {
            slots.push(p);
        }
    }
    let pt = |(side, pos): (usize, Pos)| CurvePoint::new(Occ::new(0, side), pos);
    (n, Chord::new(0, pt(slots[0]), pt(slots[1])), Chord::new(0, pt(slots[2]), pt(slots[3])))
}

pub fn random_surface(rng: &mut impl Rng) -> SurfaceSchema {
    let t = random_type(rng);
    random_schema(rng, t)
}
