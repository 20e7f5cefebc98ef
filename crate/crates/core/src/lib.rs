//! Combinatorial toolkit for curves on compact surfaces.
//!
//! Surfaces are polygon gluing schemas ([`schema`]); curves are cyclic chord
//! sequences with exact rational endpoints ([`curve`]). On top of that the
//! crate cuts surfaces along disjoint curves and classifies the pieces
//! ([`cut`]), builds large 1-systems on non-orientable surfaces
//! ([`construct`]), and certifies them ([`verify`]).
//!
//! ```
//! use crosscap::construct::build_theorem_b;
//! use crosscap::verify::verify_construction;
//!
//! let state = build_theorem_b(8, None).unwrap();
//! assert_eq!(state.family.curves.len(), 24);
//! let report = verify_construction(&state, 1).unwrap();
//! assert!(report.passed());
//! ```

pub mod construct;
pub mod curve;
pub mod cut;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod schema;
pub mod sizes;
pub mod verify;

pub use construct::{ConstructionParams, ConstructionState, LevelTag, Role};
pub use curve::{Chord, Curve, CurveFamily, CurvePoint, Pos, Sidedness};
pub use cut::{CutResult, Essentiality};
pub use error::{BuildError, CurveError, CutError, EnumerateError, SchemaError};
pub use schema::{Dir, EdgeLabel, FaceWord, Flag, Letter, Occ, Pair, SurfaceSchema, SurfaceType};
pub use verify::{CertificateKind, DistinctnessCertificate, VerificationReport};
