//! Desk-scale combinatorics for truncated higher-category checks.
//!
//! The crate mechanizes a finite, fully checkable fragment of the theory of
//! Segal-style higher categories:
//!
//! * [`simplex`] — monotone maps between finite ordinals, their composition
//!   identities, and the automorphisms of the truncated simplex category;
//! * [`fincat`] — finite categories presented by explicit composition tables,
//!   functor enumeration, equivalence, pushouts over object identifications,
//!   and the subobject characterization of the walking arrow;
//! * [`sset`] — truncated finite simplicial sets with explicit face and
//!   degeneracy tables, nerves, limits and colimits, mapping sets, internal
//!   homs, and the strict Segal condition;
//! * [`sspace`] — simplicial spaces (outer simplicial diagrams of simplicial
//!   sets), Segal and completeness checks, homotopy categories, and
//!   classification diagrams of relative categories;
//! * [`realization`] — realization and Cech-style nerve along the canonical
//!   cosimplicial object, plus the diagonal used as an independent oracle;
//! * [`harness`] — named axiom instance checks producing machine-readable
//!   reports over a deterministic corpus.
//!
//! Everything is exact and exhaustively enumerable: no floating point, no
//! randomized decision procedures. Random *inputs* (corpus generation) are
//! seeded and deterministic. All enumerations are budgeted and return
//! [`Error::BudgetExceeded`] instead of running away.

pub mod doc;
pub mod error;
pub mod fincat;
pub mod harness;
pub mod par;
pub mod realization;
pub mod simplex;
pub mod sset;
pub mod sspace;

pub use error::Error;

/// Default cap on enumerations (maps, functors, search nodes).
pub const DEFAULT_ENUM_BUDGET: u64 = 1_000_000;

/// Default cap on free-composition closure steps in pushouts.
pub const DEFAULT_PUSHOUT_BUDGET: u64 = 10_000;
