//! Exhaustive and seeded generators for the acceptance suite.

use noecover_core::{fixtures, ClosureSystem, Completion, Poset, QuasiOrder, Rule, SubsetMask};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2026;

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn is_transitive(down: &[SubsetMask]) -> bool {
    // x ≤ y ≤ z ⇒ x ≤ z, i.e. ↓y ⊆ ↓z whenever y ∈ ↓z.
    down.iter().all(|&dz| dz.iter().all(|y| down[y].is_subset(dz)))
}

/// Every labeled poset on `n` points: each unordered pair is unrelated or
/// related one way, and the relation must be transitive.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut down: Vec<SubsetMask> = (0..n).map(SubsetMask::singleton).collect();
        for &(i, j) in &pairs {
            match code % 3 {
                1 => down[j] = down[j].insert(i),
                2 => down[i] = down[i].insert(j),
                _ => {}
            }
            code /= 3;
        }
        if is_transitive(&down) {
            let order = QuasiOrder::from_down_sets(down).expect("reflexive and transitive");
            out.push(Poset::new(order).expect("antisymmetric by construction"));
        }
    }
    out
}

/// Every quasi-order on `n` points, filtered from all relations.
pub fn all_quasi_orders(n: usize) -> Vec<QuasiOrder> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for code in 0u32..1 << off.len() {
        let mut down: Vec<SubsetMask> = (0..n).map(SubsetMask::singleton).collect();
        for (k, &(x, y)) in off.iter().enumerate() {
            if code >> k & 1 == 1 {
                down[y] = down[y].insert(x);
            }
        }
        if is_transitive(&down) {
            out.push(QuasiOrder::from_down_sets(down).expect("reflexive and transitive"));
        }
    }
    out
}

/// Every intersection-closed family on three points that contains the
/// full set.
pub fn all_moore_families_3() -> Vec<ClosureSystem> {
    let full = SubsetMask::full(3);
    let mut out = Vec::new();
    for code in 0u32..1 << 8 {
        let family: Vec<SubsetMask> = (0..8)
            .filter(|b| code >> b & 1 == 1)
            .map(SubsetMask::from_bits)
            .collect();
        let closed = family.contains(&full)
            && family
                .iter()
                .all(|&a| family.iter().all(|&b| family.contains(&(a & b))));
        if closed {
            out.push(ClosureSystem::moore(labels(3), family, Completion::Reject).expect("checked above"));
        }
    }
    out
}

pub fn random_moore(rng: &mut ChaCha8Rng, n: usize) -> ClosureSystem {
    let picks = rng.gen_range(0..=2 * n);
    let family = (0..picks)
        .map(|_| SubsetMask::from_bits(rng.gen_range(0..1u32 << n)))
        .collect();
    ClosureSystem::moore(labels(n), family, Completion::Complete).expect("completed family")
}

pub fn random_implications(rng: &mut ChaCha8Rng, n: usize) -> ClosureSystem {
    let rules = (0..rng.gen_range(0..=n + 1))
        .map(|_| Rule {
            premise: SubsetMask::from_bits(rng.gen_range(0..1u32 << n)),
            conclusion: rng.gen_range(0..n),
        })
        .collect();
    ClosureSystem::implications(labels(n), rules).expect("rules within the ground")
}

pub struct Suite {
    pub posets: Vec<Poset>,
    pub moore: Vec<ClosureSystem>,
    /// Every system: fixtures, Alexandroff spaces of all posets on ≤ 5 and
    /// quasi-orders on ≤ 3 points, Moore families, implication bases.
    pub systems: Vec<(String, ClosureSystem)>,
}

pub const RANDOM_MOORE: usize = 1200;
pub const RANDOM_IMPLICATIONS: usize = 300;

pub fn build() -> Suite {
    let posets: Vec<Poset> = (0..=5).flat_map(all_posets).collect();
    let mut moore = all_moore_families_3();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..RANDOM_MOORE {
        moore.push(random_moore(&mut rng, 1 + i % 6));
    }
    let mut systems: Vec<(String, ClosureSystem)> = vec![
        ("V3".into(), fixtures::v3()),
        ("CH3".into(), fixtures::ch3()),
        ("M3".into(), fixtures::m3()),
        ("PU2".into(), fixtures::pu2()),
        ("PU3".into(), fixtures::pu3()),
    ];
    for (i, p) in posets.iter().enumerate() {
        let sys = ClosureSystem::alexandroff(labels(p.len()), p.order().clone()).expect("poset");
        systems.push((format!("poset#{i}"), sys));
    }
    let quasi = (0..=3).flat_map(all_quasi_orders).filter(|q| !q.is_antisymmetric());
    for (i, q) in quasi.enumerate() {
        let n = q.len();
        systems.push((
            format!("quasi#{i}"),
            ClosureSystem::alexandroff(labels(n), q).expect("quasi-order"),
        ));
    }
    for (i, m) in moore.iter().enumerate() {
        systems.push((format!("moore#{i}"), m.clone()));
    }
    for i in 0..RANDOM_IMPLICATIONS {
        systems.push((format!("rules#{i}"), random_implications(&mut rng, 1 + i % 6)));
    }
    Suite { posets, moore, systems }
}
