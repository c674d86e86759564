//! Finite totally ordered sets, the categories they form, and the
//! structure connecting them: endpoint-preserving subcategories, Galois
//! adjoints, Birkhoff-style dualities, ordinal-sum and interval-join
//! monoidal structures with their module actions and pairings, and an
//! exhaustive checker that verifies every identity between these functors
//! on all morphisms up to a size bound.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything can be shared freely across threads; the
//! law sweeps exploit this.

pub mod algebra;
pub mod cli;
pub mod core;
pub mod duality;
pub mod laws;

pub use crate::core::{Error, FinOrd, HomPoset, MonMap, Tag};
