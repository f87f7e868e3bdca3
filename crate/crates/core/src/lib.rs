//! Zero-sum theory over finite abelian groups of rank at most three.
//!
//! The crate computes exact zero-sum statistics of sequences (multisets of
//! group elements), enumerates extremal sequences up to automorphism, matches
//! them against structural templates and checks the binomial congruence
//! system that pins down the number of long zero-sum subsequences.

pub mod cli;
pub mod congruence;
pub mod error;
pub mod group;
pub mod report;
pub mod search;
pub mod sequence;
pub mod structure;
pub mod symmetry;
pub mod zerosum;

pub use error::{Error, Result};
pub use group::{is_basis, Automorphism, GroupElement, GroupSpec};
pub use sequence::{ParseMode, Sequence};
pub use zerosum::{ZeroSumEngine, ZeroSumProfile};
pub use search::{Budget, ExtremalReport, SearchOptions, SearchTask};
pub use structure::{FormMatch, FormName};
