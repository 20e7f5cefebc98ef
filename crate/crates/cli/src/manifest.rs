use std::path::{Path, PathBuf};

use crosscap::construct::{ConstructionState, Recipe};
use crosscap::io;
use crosscap::schema::classify_surface;
use crosscap::sizes::{predicted_sizes, PredictedSizes};
use crosscap::verify::{Summary, VerificationReport};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::Theorem;

pub fn sha256(data: &str) -> String {
    hex::encode(Sha256::digest(data.as_bytes()))
}

/// Everything needed to check that a build is reproducible. No timestamps:
/// the same command must produce a byte-identical manifest.
#[derive(Debug, Serialize)]
pub struct Manifest {
    pub command: &'static str,
    pub theorem: String,
    pub recipe: Option<Recipe>,
    pub tool_version: &'static str,
    pub schema_sha256: String,
    pub family_sha256: String,
    pub surface: String,
    pub predicted_count: Option<u64>,
    pub actual_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_sizes: Option<PredictedSizes>,
    pub verification: Option<VerificationSummary>,
}

#[derive(Debug, Serialize)]
pub struct VerificationSummary {
    pub passed: bool,
    #[serde(flatten)]
    pub summary: Summary,
}

impl Manifest {
    pub fn for_build(theorem: Theorem, st: &ConstructionState, family_json: &str, report: Option<&VerificationReport>) -> Self {
        let predicted_sizes = match st.recipe {
            Some(Recipe::TheoremA { g, b, k }) => Some(predicted_sizes(g, b, k)),
            Some(Recipe::TheoremB { g, k }) => Some(predicted_sizes(g, 0, k)),
            _ => None,
        };
        Manifest {
            command: "build",
            theorem: format!("{theorem:?}").to_lowercase(),
            recipe: st.recipe,
            tool_version: env!("CARGO_PKG_VERSION"),
            schema_sha256: sha256(&io::schema_to_json(&st.schema)),
            family_sha256: sha256(family_json),
            surface: classify_surface(&st.schema).map_or_else(|e| e.to_string(), |t| t.notation()),
            predicted_count: st.recipe.map(|r| r.expected_size()),
            actual_count: st.family.curves.len(),
            predicted_sizes,
            verification: report.map(|r| VerificationSummary { passed: r.passed(), summary: r.summary.clone() }),
        }
    }

    /// `family.json` → `family.manifest.json`, next to the output.
    pub fn path_for(out: &Path) -> PathBuf {
        out.with_extension("manifest.json")
    }
}
