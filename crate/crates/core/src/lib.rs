//! Degree sequences of simple graphs: exact graphicality, sufficient
//! conditions on `(n, d1, dn)`, extremal families and exhaustive checks.
//!
//! ```
//! use degseq::{bounds, seqcore};
//!
//! let seq: seqcore::DegreeSequence = "5,1^11".parse().unwrap();
//! assert!(seqcore::erdos_gallai_check(&seq).graphic);
//! assert!(bounds::improved_bound(&seq).holds);
//! assert!(!bounds::zz_simplified(&seq).holds);
//! ```
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod bounds;
pub mod cli;
pub mod extremal;
pub mod oracle;
pub mod seqcore;

pub use bounds::{BoundVerdict, BoundsSummary, Predicate};
pub use seqcore::{DegreeSequence, EgReport, Realization};
