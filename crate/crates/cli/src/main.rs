use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod manifest;
mod svg;

/// Curves on compact surfaces: build, verify and cut 1-systems.
#[derive(Parser, Debug)]
#[command(name = "crosscap", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    A,
    B,
    /// The orientable family on S_{k,b} (uses --k and --b; --g is ignored).
    Mrt,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the surface type of a schema (or of a family file's schema).
    Classify { path: PathBuf },
    /// Emit the standard schema of a surface, e.g. `N3`, `S2,1`, or a face word.
    Schema {
        /// `S<k>[,b]` or `N<g>[,b]`.
        #[arg(conflicts_with = "word")]
        surface: Option<String>,
        /// A single face word such as "a b a- b-".
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a construction family and write it with a manifest.
    Build {
        #[arg(long, value_enum, default_value = "a")]
        theorem: Theorem,
        #[arg(long, default_value_t = 0)]
        g: u32,
        #[arg(long, default_value_t = 0)]
        b: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        out: PathBuf,
        /// Also run full verification and record it in the manifest.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Verify a family file; exits 1 unless it is a certified 1-system.
    Verify {
        path: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0: all available cores).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Cut along disjoint curves of a family file and classify the pieces.
    Cut {
        path: PathBuf,
        #[arg(required = true)]
        curves: Vec<String>,
        /// Write the cut schema with provenance as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Predicted and built sizes over a range of genera.
    Table {
        #[arg(long, value_enum, default_value = "a")]
        theorem: Theorem,
        /// A genus or range: `6`, `6..12` or `6..=12`.
        #[arg(long, value_parser = parse_range)]
        g: (u32, u32),
        #[arg(long, default_value_t = 0)]
        b: u32,
        /// Skip verification.
        #[arg(long)]
        counts_only: bool,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Render a family file as SVG.
    ExportSvg {
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// List small simple curves on a schema as a family file.
    Enumerate {
        path: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_chords: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Inclusive genus range.
fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    if let Some((lo, hi)) = s.split_once("..=") {
        Ok((num(lo)?, num(hi)?))
    } else if let Some((lo, hi)) = s.split_once("..") {
        let hi = num(hi)?;
        // `a..b` is inclusive too; a half-open range of genera is never wanted.
        Ok((num(lo)?, hi))
    } else {
        let g = num(s)?;
        Ok((g, g))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { path } => commands::classify(&path),
        Command::Schema { surface, word, out } => commands::schema(surface.as_deref(), word.as_deref(), out.as_deref()),
        Command::Build { theorem, g, b, k, out, verify, workers } => {
            commands::build(theorem, g, b, k, &out, verify.then_some(workers))
        }
        Command::Verify { path, out, workers } => commands::verify(&path, out.as_deref(), workers),
        Command::Cut { path, curves, out } => commands::cut(&path, &curves, out.as_deref()),
        Command::Table { theorem, g, b, counts_only, workers } => {
            commands::table(theorem, g, b, (!counts_only).then_some(workers))
        }
        Command::ExportSvg { path, out } => commands::export_svg(&path, &out),
        Command::Enumerate { path, max_chords, out } => commands::enumerate(&path, max_chords, out.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
