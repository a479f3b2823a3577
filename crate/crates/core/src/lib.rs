//! Exact algorithms for finite closure systems and finite topological
//! spaces: closures and axioms, specialization orders, independent and
//! generating sets, irreducible decompositions, separating chains, the
//! generating-set decomposition of a closure system into blocks with
//! ideals, and the min-max theorem for up-independent sets of posets.
//!
//! Subsets are [`SubsetMask`]s over a ground of at most 20 elements by
//! default; every exhaustive search is guarded by [`Limits`].

pub mod closure;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod gmp;
pub mod harness;
pub mod independence;
pub mod irreducible;
pub mod limits;
pub mod mask;
pub mod minmax;
pub mod order;
mod search;
pub mod separating;

pub use closure::{AxiomReport, ClosureSystem, Completion, Elem, Representation, Rule};
pub use error::{Error, Result};
pub use limits::Limits;
pub use mask::SubsetMask;
pub use order::{Direction, OrderPredicate, Poset, QuasiOrder};
