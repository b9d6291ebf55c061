//! Elements of `S_n` and `B_n`, their statistics, cycle types, and
//! enumeration of the subsets the generating functions range over.
//!
//! `D_n` is not a separate element type; it is the filter "even number of
//! negative entries" on [`SignedPerm`].

mod partition;
mod perm;
mod signed;
mod spec;

pub use partition::{partitions, CycleType, Parity, PartitionFilter};
pub(crate) use partition::factorial;
pub use perm::{Perm, StatsA};
pub use signed::{SignedPerm, StatsB, StatsD};
pub use spec::{Budget, Class, Element, ElementKind, Elements, GroupSpec};

/// Cycle type of a permutation.
pub fn cycle_type(p: &Perm) -> CycleType {
    CycleType::of(p)
}
