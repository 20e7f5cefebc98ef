//! Exhaustive search over small simple curves.
//!
//! A simple curve is determined up to order-preserving reparameterization by
//! how many times it crosses each glued edge and, in every face, by a
//! non-crossing perfect matching of the crossing points on that face's
//! boundary. We enumerate both, keep the matchings that close into a single
//! circle, and store each curve in a canonical form.

use std::collections::BTreeSet;

use crate::curve::{carry, Chord, Curve, CurvePoint, Pos};
use crate::error::EnumerateError;
use crate::schema::{EdgeLabel, Flag, Occ, SchemaIndex, SurfaceSchema};

pub const MAX_FACES: usize = 2;
pub const MAX_LABELS: usize = 12;
pub const MAX_CHORDS: usize = 8;
/// Default cap on examined (count vector, matching) configurations.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// All simple curves with at most `max_chords` chords, up to rotation,
/// reversal and reparameterization.
pub fn enumerate_small_curves(s: &SurfaceSchema, max_chords: usize) -> Result<Vec<Curve>, EnumerateError> {
    enumerate_with_budget(s, max_chords, DEFAULT_BUDGET)
}

pub fn enumerate_with_budget(s: &SurfaceSchema, max_chords: usize, budget: u64) -> Result<Vec<Curve>, EnumerateError> {
    if s.faces.len() > MAX_FACES {
        return Err(EnumerateError::TooLarge(format!("{} faces (limit {MAX_FACES})", s.faces.len())));
    }
    if s.num_labels() > MAX_LABELS {
        return Err(EnumerateError::TooLarge(format!("{} edge labels (limit {MAX_LABELS})", s.num_labels())));
    }
    if max_chords > MAX_CHORDS {
        return Err(EnumerateError::TooLarge(format!("max_chords {max_chords} (limit {MAX_CHORDS})")));
    }
    let index = s.index()?;
    let paired: Vec<EdgeLabel> = s.pairs.iter().map(|p| p.edge.clone()).collect();
    let mut search = Search { s, index: &index, paired: &paired, budget, spent: 0, seen: BTreeSet::new(), out: Vec::new() };
    let mut counts = vec![0usize; paired.len()];
    search.counts(&mut counts, 0, max_chords)?;
    Ok(search.out)
}

struct Search<'a> {
    s: &'a SurfaceSchema,
    index: &'a SchemaIndex,
    paired: &'a [EdgeLabel],
    budget: u64,
    spent: u64,
    seen: BTreeSet<Vec<(Occ, Pos)>>,
    out: Vec<Curve>,
}

impl Search<'_> {
    fn counts(&mut self, counts: &mut Vec<usize>, at: usize, left: usize) -> Result<(), EnumerateError> {
        if at == counts.len() {
            if counts.iter().any(|&c| c > 0) {
                self.realize(counts)?;
            }
            return Ok(());
        }
        for c in 0..=left {
            counts[at] = c;
            self.counts(counts, at + 1, left - c)?;
        }
        counts[at] = 0;
        Ok(())
    }

    fn realize(&mut self, counts: &[usize]) -> Result<(), EnumerateError> {
        // Points by face, in boundary order.
        let mut per_face: Vec<Vec<CurvePoint>> = vec![Vec::new(); self.s.faces.len()];
        for (label, &c) in self.paired.iter().zip(counts) {
            let occs = self.index.occurrences(label);
            let flag = self.index.partner(occs[0]).map(|(_, f)| f).unwrap_or(Flag::Same);
            for r in 0..c {
                let p = Pos::new(r as i64 + 1, c as i64 + 1);
                per_face[occs[0].face].push(CurvePoint::new(occs[0], p));
                let q = match flag {
                    Flag::Same => p,
                    Flag::Reversed => Pos::from_integer(1) - p,
                };
                per_face[occs[1].face].push(CurvePoint::new(occs[1], q));
            }
        }
        for pts in &mut per_face {
            if pts.len() % 2 == 1 {
                return Ok(());
            }
            pts.sort_by_key(CurvePoint::key);
        }
        let options: Vec<Vec<Vec<(usize, usize)>>> = per_face.iter().map(|pts| matchings(pts.len())).collect();
        let mut choice = vec![0usize; options.len()];
        loop {
            self.spent += 1;
            if self.spent > self.budget {
                return Err(EnumerateError::BudgetExceeded(self.budget));
            }
            let chords: Vec<Chord> = choice
                .iter()
                .enumerate()
                .flat_map(|(f, &k)| {
                    let pts = &per_face[f];
                    options[f][k].iter().map(move |&(i, j)| Chord::new(f, pts[i], pts[j]))
                })
                .collect();
            if let Some(curve) = self.close(&chords) {
                let key = canonical_key(&curve);
                if self.seen.insert(key) {
                    self.out.push(Curve::new(format!("e{}", self.out.len()), curve.chords));
                }
            }
            // Next combination of per-face matchings.
            let mut f = 0;
            loop {
                if f == choice.len() {
                    return Ok(());
                }
                choice[f] += 1;
                if choice[f] < options[f].len() {
                    break;
                }
                choice[f] = 0;
                f += 1;
            }
        }
    }

    /// Chains undirected chords into one closed curve, if they form one circle.
    fn close(&self, chords: &[Chord]) -> Option<Curve> {
        if chords.is_empty() {
            return None;
        }
        let key = |p: &CurvePoint| (p.occ, p.pos);
        let mut at: std::collections::HashMap<(Occ, Pos), usize> = std::collections::HashMap::new();
        for (i, c) in chords.iter().enumerate() {
            at.insert(key(&c.from), i);
            at.insert(key(&c.to), i);
        }
        // Start from the smallest point, leaving through its chord.
        let start = chords.iter().flat_map(|c| [c.from, c.to]).min_by_key(|p| (p.occ, p.pos))?;
        let mut used = vec![false; chords.len()];
        let mut out = Vec::with_capacity(chords.len());
        let mut from = start;
        loop {
            let i = at[&key(&from)];
            if used[i] {
                break;
            }
            used[i] = true;
            let c = &chords[i];
            let to = if c.from == from { c.to } else { c.from };
            out.push(Chord::new(c.face, from, to));
            from = carry(self.index, &to)?;
        }
        (out.len() == chords.len() && from == start).then(|| Curve::new("", out))
    }
}

/// Non-crossing perfect matchings of 2p points on a circle.
fn matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            for inner in rec(lo + 1, j) {
                for outer in rec(j + 1, hi) {
                    let mut m = Vec::with_capacity(1 + inner.len() + outer.len());
                    m.push((lo, j));
                    m.extend(inner.iter().copied());
                    m.extend(outer.iter().copied());
                    out.push(m);
                }
            }
        }
        out
    }
    rec(0, n)
}

/// Least rotation of the `(occurrence, position)` sequence over both
/// directions. Positions are rank-determined, so within one count vector this
/// is the `(occurrence, rank)` form.
pub fn canonical_key(c: &Curve) -> Vec<(Occ, Pos)> {
    let seq = |curve: &Curve| -> Vec<(Occ, Pos)> { curve.chords.iter().flat_map(|ch| [ch.from, ch.to]).map(|p| (p.occ, p.pos)).collect() };
    let fwd = seq(c);
    let bwd = seq(&c.reversed());
    let mut best: Option<Vec<(Occ, Pos)>> = None;
    for s in [fwd, bwd] {
        for r in (0..s.len()).step_by(2) {
            let rot: Vec<_> = s[r..].iter().chain(&s[..r]).copied().collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{crosscap_passes, is_simple, sidedness, Sidedness};
    use crate::cut::{cut_classification, is_essential};
    use crate::schema::{standard_schema, SurfaceType};

    #[test]
    fn matching_counts_are_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (p, &c) in catalan.iter().enumerate() {
            assert_eq!(matchings(2 * p).len(), c);
        }
    }

    #[test]
    fn rp2_contains_core() {
        let s = SurfaceSchema::from_word("x x");
        let curves = enumerate_small_curves(&s, 2).unwrap();
        assert!(curves.iter().all(|c| is_simple(&s, c).unwrap()));
        assert!(curves.iter().any(|c| c.chords.len() == 1 && sidedness(&s, c).unwrap() == Sidedness::OneSided));
        // Passing the cross-cap twice gives the two-sided boundary of a Möbius band.
        assert!(curves.iter().any(|c| c.chords.len() == 2 && !is_essential(&s, c).unwrap().essential));
    }

    #[test]
    fn klein_behaviours() {
        let s = standard_schema(SurfaceType::non_orientable(2, 0)).unwrap();
        let curves = enumerate_small_curves(&s, 4).unwrap();
        let mut kinds = BTreeSet::new();
        for c in &curves {
            let passes: Vec<u32> = crosscap_passes(&s, c).into_values().collect();
            let ess = is_essential(&s, c).unwrap().essential;
            let cut = cut_classification(&s, c).unwrap();
            kinds.insert((ess, format!("{:?}", sidedness(&s, c).unwrap()), passes, format!("{cut:?}")));
        }
        assert!(kinds.len() >= 4, "{kinds:?}");
    }

    #[test]
    fn guards() {
        let s = standard_schema(SurfaceType::non_orientable(2, 0)).unwrap();
        assert!(matches!(enumerate_small_curves(&s, 9), Err(EnumerateError::TooLarge(_))));
        assert!(matches!(enumerate_with_budget(&s, 4, 3), Err(EnumerateError::BudgetExceeded(3))));
    }
}
