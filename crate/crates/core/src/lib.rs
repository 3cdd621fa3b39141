//! Conjugacy stability of finitely generated subgroups of free groups.
//!
//! The crate is layered bottom-up:
//!
//! - [`words`]: reduced words, cyclic reduction, roots, conjugacy in `F`.
//! - [`stallings`]: folded subgroup graphs, membership, bases, pullbacks and
//!   coset automata.
//! - [`conjstab`]: the decision procedure, which reports a certificate
//!   `(u, v, g)` whenever the subgroup is not conjugacy stable.
//! - [`oracle`]: brute-force search used to cross-check the decider.
//! - [`corpus`]: enumeration of small subgroups for agreement runs.

pub mod conjstab;
pub mod corpus;
pub mod error;
pub mod oracle;
pub mod stallings;
pub mod words;

pub use conjstab::{
    candidate_reps, conjugacy_in_subgroup, decide_stability, validate_certificate, CandidateRep,
    Certificate, Outcome, RepAnalysis, StabilityReport, Verdict,
};
pub use error::{Error, Result};
pub use stallings::{CosetAutomaton, StallingsGraph, Subgroup};
pub use words::{Alphabet, Letter, RootDecomposition, Word};
