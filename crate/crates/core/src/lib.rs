//! Exact decision procedures for the discussion-based ranking semantics of
//! abstract argumentation frameworks.
//!
//! Two independent back-ends answer the same questions:
//!
//! - [`ranking`] powers the adjacency matrix up to `2|A| - 1` and compares
//!   column sums, which is enough to settle every comparison exactly;
//! - [`reduction`] turns each argument into a weighted automaton over the
//!   rationals and decides equivalence through [`qautomaton`].
//!
//! [`walks`] provides the walk counters both rely on, including a
//! brute-force enumerator that serves as the test oracle, and [`linalg`]
//! is the exact rational kernel underneath everything.
//!
//! ```
//! use disrank::{aaf, ranking};
//!
//! let af = aaf::parse_apx("arg(a). arg(b). arg(c). att(a,b). att(b,c).").unwrap();
//! let rank = ranking::full_ranking(&af);
//! assert_eq!(rank.to_string(), "a > c > b");
//! ```

pub mod aaf;
mod error;
pub mod linalg;
pub mod qautomaton;
pub mod ranking;
pub mod reduction;
pub mod walks;

pub use aaf::{ArgFramework, ArgIndex};
pub use error::{Error, Result};
pub use linalg::{BigRational, Orientation, RatMatrix, RatVector};
pub use qautomaton::{EquivalenceResult, ForwardBasis, LinearRep, QAutomaton, Word};
pub use ranking::{CompareOutcome, DisPrefix, RankResult, Relation};
pub use reduction::WalkCountVerdict;
pub use walks::{Walk, WalkCountTable};
