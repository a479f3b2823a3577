//! The canonical hand-checkable systems used throughout the tests and the
//! bundled CLI fixtures.

use crate::closure::{ClosureSystem, Completion};
use crate::mask::SubsetMask;
use crate::order::QuasiOrder;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Alexandroff space of `{a, b, c}` with `c ≤ a`, `c ≤ b`.
pub fn v3() -> ClosureSystem {
    let order = QuasiOrder::from_pairs(3, &[(2, 0), (2, 1)]).expect("valid pairs");
    ClosureSystem::alexandroff(labels(&["a", "b", "c"]), order).expect("valid fixture")
}

/// Alexandroff space of the chain `a ≤ b ≤ c`.
pub fn ch3() -> ClosureSystem {
    ClosureSystem::alexandroff(labels(&["a", "b", "c"]), QuasiOrder::chain(3)).expect("valid fixture")
}

/// Moore family `{x}, {x,y}, {x,z}, {x,y,z}` on `{x, y, z}`.
pub fn m3() -> ClosureSystem {
    let family = [0b001, 0b011, 0b101, 0b111]
        .into_iter()
        .map(SubsetMask::from_bits)
        .collect();
    ClosureSystem::moore(labels(&["x", "y", "z"]), family, Completion::Reject).expect("valid fixture")
}

pub fn pu2() -> ClosureSystem {
    ClosureSystem::powerset_union(2).expect("valid fixture")
}

pub fn pu3() -> ClosureSystem {
    ClosureSystem::powerset_union(3).expect("valid fixture")
}
