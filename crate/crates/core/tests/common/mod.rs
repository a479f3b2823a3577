#![allow(dead_code)]

use noecover_core::{ClosureSystem, Completion, Poset, QuasiOrder, Rule, SubsetMask};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

pub fn random_moore(rng: &mut ChaCha8Rng, n: usize) -> ClosureSystem {
    let picks = rng.gen_range(0..=n + 2);
    let family = (0..picks)
        .map(|_| SubsetMask::from_bits(rng.gen_range(0..1u32 << n)))
        .collect();
    ClosureSystem::moore(labels(n), family, Completion::Complete).unwrap()
}

pub fn random_implications(rng: &mut ChaCha8Rng, n: usize) -> ClosureSystem {
    let rules = (0..rng.gen_range(0..=n))
        .map(|_| Rule {
            premise: SubsetMask::from_bits(rng.gen_range(0..1u32 << n)),
            conclusion: rng.gen_range(0..n),
        })
        .collect();
    ClosureSystem::implications(labels(n), rules).unwrap()
}

pub fn random_quasi_order(rng: &mut ChaCha8Rng, n: usize) -> QuasiOrder {
    let pairs: Vec<_> = (0..rng.gen_range(0..=n + 1))
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    QuasiOrder::from_pairs(n, &pairs).unwrap()
}

/// Edges only go from lower to higher ids, so the closure is antisymmetric.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if rng.gen_bool(0.3) {
                pairs.push((x, y));
            }
        }
    }
    Poset::new(QuasiOrder::from_pairs(n, &pairs).unwrap()).unwrap()
}

/// Closed sets recomputed from scratch as the fixpoints of φ.
pub fn fixpoints(sys: &ClosureSystem) -> Vec<SubsetMask> {
    sys.full().subsets().filter(|&x| sys.closure(x) == x).collect()
}

/// Intersection of every closed superset.
pub fn closure_oracle(closed: &[SubsetMask], full: SubsetMask, x: SubsetMask) -> SubsetMask {
    closed.iter().filter(|c| x.is_subset(**c)).fold(full, |acc, &c| acc & c)
}

pub fn all_subsets(full: SubsetMask) -> Vec<SubsetMask> {
    (0..=full.bits())
        .map(SubsetMask::from_bits)
        .filter(|s| s.is_subset(full))
        .collect()
}
