//! Eccentric connectivity index toolkit.
//!
//! * [`graph`]: dense simple graphs, distances, eccentricities and the index.
//! * [`families`]: the named extremal families and their closed forms.
//! * [`canon`] and [`enumeration`]: canonical labeling and exhaustive
//!   generation of connected graphs up to isomorphism.
//! * [`extremal`]: exhaustive optimum search and statement verifiers.
//! * [`graph6`] and [`report`]: interchange format and report rendering.

pub mod canon;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod report;

pub use canon::{canonical_key, CanonicalKey};
pub use enumeration::{ClassFilter, Dominating, Enumerator};
pub use error::{Error, Result};
pub use extremal::{search_extremal, verify, Direction, ExtremalResult, Statement, Verdict, VerificationOutcome};
pub use families::FamilySpec;
pub use graph::{EciReport, Graph};
pub use graph6::{decode_graph6, encode_graph6};
pub use report::{emit_report, Format, Report};
