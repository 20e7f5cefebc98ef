use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use crosscap::construct::{build_mrt, build_theorem_a, build_theorem_b, ConstructionState};
use crosscap::cut::{cut_along, CircleOrigin};
use crosscap::enumerate::enumerate_small_curves;
use crosscap::error::CurveError;
use crosscap::io::{self, FamilyDoc, IoError};
use crosscap::schema::{classify_surface, standard_schema, validate_schema, SurfaceSchema, SurfaceType};
use crosscap::sizes;
use crosscap::verify::{verify_construction, verify_one_system, verify_tagged, VerificationReport};
use crosscap::Curve;

use crate::manifest::Manifest;
use crate::{svg, Theorem};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn emit(out: Option<&Path>, contents: &str) -> Result<()> {
    match out {
        Some(p) => write(p, contents),
        None => {
            println!("{contents}");
            Ok(())
        }
    }
}

/// A bare schema, or the `schema` member of a family or cut document.
fn read_schema(path: &Path) -> Result<SurfaceSchema> {
    let v: serde_json::Value = serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    let v = match v.get("schema") {
        Some(inner) => inner.clone(),
        None => v,
    };
    let s: SurfaceSchema = serde_json::from_value(v).with_context(|| format!("{} is not a schema", path.display()))?;
    let validity = validate_schema(&s);
    if !validity.is_valid() {
        let v: Vec<String> = validity.violations.iter().map(ToString::to_string).collect();
        bail!("invalid schema: {}", v.join("; "));
    }
    Ok(s)
}

fn read_doc(path: &Path) -> Result<FamilyDoc> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn classify(path: &Path) -> Result<bool> {
    let s = read_schema(path)?;
    println!("{}", classify_surface(&s)?);
    Ok(true)
}

fn parse_surface(spec: &str) -> Result<SurfaceType> {
    let bad = || anyhow!("surface {spec:?}: expected S<k>[,b] or N<g>[,b]");
    let mut chars = spec.trim().chars();
    let orientable = match chars.next() {
        Some('S' | 's') => true,
        Some('N' | 'n') => false,
        _ => return Err(bad()),
    };
    let rest: String = chars.filter(|c| !matches!(c, '_' | '{' | '}')).collect();
    let (genus, boundary) = rest.split_once(',').unwrap_or((&rest, "0"));
    let genus = genus.trim().parse().map_err(|_| bad())?;
    let boundary = boundary.trim().parse().map_err(|_| bad())?;
    let t = SurfaceType { orientable, genus, boundary };
    if !t.is_legal() {
        bail!("non-orientable genus must be at least 1");
    }
    Ok(t)
}

pub fn schema(surface: Option<&str>, word: Option<&str>, out: Option<&Path>) -> Result<bool> {
    let s = match (surface, word) {
        (Some(t), _) => standard_schema(parse_surface(t)?)?,
        (None, Some(w)) => SurfaceSchema::from_word(w),
        (None, None) => bail!("give a surface such as N3 or --word"),
    };
    emit(out, &io::schema_to_json(&s))?;
    Ok(true)
}

fn construct(theorem: Theorem, g: u32, b: u32, k: Option<u32>) -> Result<ConstructionState> {
    Ok(match theorem {
        Theorem::A => build_theorem_a(g, b, k)?,
        Theorem::B => {
            if b != 0 {
                bail!("the one-sided family is built on closed surfaces only (got b={b})");
            }
            build_theorem_b(g, k)?
        }
        Theorem::Mrt => build_mrt(k.ok_or_else(|| anyhow!("--k is required for mrt"))?, b)?,
    })
}

pub fn build(theorem: Theorem, g: u32, b: u32, k: Option<u32>, out: &Path, verify: Option<usize>) -> Result<bool> {
    let st = construct(theorem, g, b, k)?;
    let family = serde_json::to_string_pretty(&io::construction_doc(&st))?;
    write(out, &family)?;
    let report = verify.map(|w| verify_construction(&st, w)).transpose()?;
    let manifest = Manifest::for_build(theorem, &st, &family, report.as_ref());
    let mpath = Manifest::path_for(out);
    write(&mpath, &serde_json::to_string_pretty(&manifest)?)?;
    let t = classify_surface(&st.schema)?;
    println!("wrote {} curves on {} to {}", st.family.curves.len(), t.notation(), out.display());
    match report {
        Some(r) => {
            print_summary(&r);
            Ok(r.passed())
        }
        None => Ok(true),
    }
}

fn print_summary(r: &VerificationReport) {
    let s = &r.summary;
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    eprintln!(
        "{verdict}: {} curves, {} pairs, max crossings {}, unknown certificates {}",
        s.count, s.pairs, s.max_crossings, s.unknown
    );
    for f in &s.failures {
        eprintln!("  {f}");
    }
    if let Some(c) = &r.construction {
        for m in c.matrix_mismatches.iter().chain(&c.crossings_outside_disc) {
            eprintln!("  {m}");
        }
        if let (Some(e), a) = (c.expected_size, c.actual_size) {
            if e != a {
                eprintln!("  size {a}, expected {e}");
            }
        }
        if c.expected_type.is_some() && c.expected_type != c.actual_type {
            eprintln!("  surface {:?}, expected {:?}", c.actual_type, c.expected_type);
        }
    }
}

pub fn verify(path: &Path, out: Option<&Path>, workers: usize) -> Result<bool> {
    let doc = read_doc(path)?;
    let fam = match io::family_from_doc(&doc) {
        Ok(f) => f,
        // A well-formed document whose curves break the family rules is a
        // verification failure, not an input error.
        Err(IoError::Curve(e)) if !matches!(e, CurveError::Schema(_)) => {
            eprintln!("FAIL: {e}");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let tagged = !fam.tags.is_empty() && fam.tags.iter().all(Option::is_some);
    let report = if tagged {
        verify_tagged(&fam, doc.recipe.as_ref(), doc.disc_face.as_deref(), workers)
    } else {
        verify_one_system(&fam, workers)
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            eprintln!("FAIL: {e}");
            return Ok(false);
        }
    };
    emit(out, &serde_json::to_string_pretty(&report)?)?;
    print_summary(&report);
    Ok(report.passed())
}

pub fn cut(path: &Path, ids: &[String], out: Option<&Path>) -> Result<bool> {
    let doc = read_doc(path)?;
    // Only the chosen curves need to be simple and disjoint.
    let (all, _) = io::curves_from_doc(&doc)?;
    let curves: Vec<&Curve> = ids
        .iter()
        .map(|id| all.iter().find(|c| &c.id == id).ok_or_else(|| anyhow!("no curve {id:?} in {}", path.display())))
        .collect::<Result<_>>()?;
    let cut = cut_along(&doc.schema, &curves)?;
    for (i, comp) in cut.components.iter().enumerate() {
        let faces: Vec<&str> = comp.faces.iter().map(|&f| cut.schema.faces[f].id.as_str()).collect();
        println!("component {i}: {} ({}, chi={}) faces {}", comp.surface, comp.surface.notation(), comp.euler_characteristic(), faces.join(","));
        for &c in &comp.circles {
            match &cut.circles[c].origin {
                CircleOrigin::Original => println!("  circle {c}: original boundary"),
                CircleOrigin::Cut { curve, side } => println!("  circle {c}: cut along {curve}, side {side}"),
            }
        }
    }
    if let Some(p) = out {
        write(p, &io::cut_to_json(&cut))?;
    }
    Ok(true)
}

struct Row {
    g: u32,
    k: Option<u32>,
    predicted: Option<u64>,
    built: Option<usize>,
    bound: sizes::Rational,
    verified: String,
}

pub fn table(theorem: Theorem, (lo, hi): (u32, u32), b: u32, verify: Option<usize>) -> Result<bool> {
    if theorem == Theorem::Mrt {
        bail!("table covers theorems a and b");
    }
    if theorem == Theorem::B && b != 0 {
        bail!("the one-sided family is built on closed surfaces only (got b={b})");
    }
    let mut rows = Vec::new();
    let mut all_ok = true;
    for g in lo..=hi {
        let (bound, st) = match theorem {
            Theorem::A => (sizes::bound_a(g, b), build_theorem_a(g, b, None)),
            _ => (sizes::bound_b(g), build_theorem_b(g, None)),
        };
        let row = match st {
            Ok(st) => {
                let verified = match verify {
                    None => "-".to_owned(),
                    Some(w) => {
                        let r = verify_construction(&st, w)?;
                        all_ok &= r.passed();
                        if r.passed() {
                            "pass".to_owned()
                        } else {
                            format!("FAIL({})", r.summary.failures.len())
                        }
                    }
                };
                let recipe = st.recipe.expect("builders record their recipe");
                let k = match recipe {
                    crosscap::construct::Recipe::TheoremA { k, .. } | crosscap::construct::Recipe::TheoremB { k, .. } => k,
                    crosscap::construct::Recipe::Mrt { k, .. } => k,
                };
                Row { g, k: Some(k), predicted: Some(recipe.expected_size()), built: Some(st.family.curves.len()), bound, verified }
            }
            Err(e) => Row { g, k: None, predicted: None, built: None, bound, verified: format!("refused: {e}") },
        };
        rows.push(row);
    }
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_owned());
    println!("{:>4} {:>3} {:>9} {:>6} {:>10} {:>6}  {}", "g", "k", "predicted", "built", "bound", ">=", "verified");
    for r in &rows {
        let meets = r.built.map(|n| sizes::Rational::from_integer(n as i64) >= r.bound);
        all_ok &= meets != Some(false);
        println!(
            "{:>4} {:>3} {:>9} {:>6} {:>10} {:>6}  {}",
            r.g,
            opt(r.k.map(|k| k.to_string())),
            opt(r.predicted.map(|n| n.to_string())),
            opt(r.built.map(|n| n.to_string())),
            r.bound.to_string(),
            opt(meets.map(|m| if m { "yes" } else { "NO" }.to_owned())),
            r.verified
        );
    }
    Ok(all_ok)
}

pub fn export_svg(path: &Path, out: &Path) -> Result<bool> {
    let doc = read_doc(path)?;
    let (curves, _) = io::curves_from_doc(&doc)?;
    write(out, &svg::render(&doc.schema, &curves))?;
    Ok(true)
}

pub fn enumerate(path: &Path, max_chords: usize, out: Option<&Path>) -> Result<bool> {
    let s = read_schema(path)?;
    let curves = enumerate_small_curves(&s, max_chords)?;
    eprintln!("{} curves with at most {max_chords} chords", curves.len());
    // Enumerated curves overlap one another, so this is a list of curves
    // rather than a family that would pass the genericity check.
    let curves = curves.iter().map(|c| io::curve_doc(&s, c, None)).collect();
    let doc = FamilyDoc { schema: s, curves, recipe: None, disc_face: None };
    emit(out, &serde_json::to_string_pretty(&doc)?)?;
    Ok(true)
}
