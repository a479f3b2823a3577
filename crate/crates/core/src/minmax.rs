//! The min-max theorem for finite posets: the largest up-independent set,
//! the fewest ideals covering the poset and the fewest consistent sets
//! covering it all have the same size.

use crate::error::{Error, Result};
use crate::independence::Certificate;
use crate::limits::Limits;
use crate::mask::SubsetMask;
use crate::order::{OrderPredicate, Poset};
use crate::search::{max_clique, min_cover};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QurPartition {
    /// Elements whose up-set is up-directed.
    pub q: SubsetMask,
    /// `↓Q`.
    pub u: SubsetMask,
    /// The rest; always empty for finite posets.
    pub r: SubsetMask,
}

impl QurPartition {
    pub fn r_empty(&self) -> bool {
        self.r.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinMaxReport {
    pub max_up_independent: Certificate,
    pub min_ideal_cover: Vec<SubsetMask>,
    pub min_consistent_cover: Vec<SubsetMask>,
    pub equal: bool,
    /// Witness and cover members re-checked against their predicates, and
    /// both covers union to the whole poset.
    pub certified: bool,
    /// Every ideal of the cover has a maximum.
    pub ideals_principal: bool,
}

impl MinMaxReport {
    pub fn sizes(&self) -> (usize, usize, usize) {
        (
            self.max_up_independent.size,
            self.min_ideal_cover.len(),
            self.min_consistent_cover.len(),
        )
    }
}

pub fn qur_partition(p: &Poset) -> QurPartition {
    // ↑x is up-directed exactly when any two of its members share an
    // upper bound, which then lies in ↑x as well.
    let q: SubsetMask = (0..p.len())
        .filter(|&x| p.check(OrderPredicate::Consistent, p.principal_up(x)).holds)
        .collect();
    let u = p.down_set(q);
    QurPartition { q, u, r: p.full() - u }
}

fn maximal(sets: Vec<SubsetMask>) -> Vec<SubsetMask> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| s.is_proper_subset(t)))
        .collect()
}

/// Inclusion-maximal nonempty subsets of `within` passing `kind`, canonical
/// order.
fn maximal_passing(p: &Poset, kind: OrderPredicate, within: SubsetMask) -> Vec<SubsetMask> {
    let passing = within
        .subsets()
        .filter(|&a| !a.is_empty() && p.check(kind, a).holds)
        .collect();
    maximal(passing)
}

fn cover_by(p: &Poset, kind: OrderPredicate, universe: SubsetMask, limits: &Limits) -> Result<Vec<SubsetMask>> {
    let candidates = maximal_passing(p, kind, universe);
    let indices =
        min_cover(universe, &candidates, limits.budget.saturating_mul(64))?.expect("singletons pass both predicates");
    Ok(indices.into_iter().map(|i| candidates[i]).collect())
}

fn is_principal(p: &Poset, ideal: SubsetMask) -> bool {
    ideal.iter().any(|x| p.principal_down(x) == ideal)
}

pub fn minmax_report(p: &Poset, limits: &Limits) -> Result<MinMaxReport> {
    limits.check_ground(p.len())?;
    limits.check_subsets(p.len())?;
    let full = p.full();
    let incompatible: Vec<SubsetMask> = (0..p.len())
        .map(|x| {
            (0..p.len())
                .filter(|&y| y != x && (p.principal_up(x) & p.principal_up(y)).is_empty())
                .collect()
        })
        .collect();
    let witness = max_clique(&incompatible);
    let max_up_independent = Certificate {
        set: witness,
        size: witness.len(),
    };
    let min_ideal_cover = cover_by(p, OrderPredicate::Ideal, full, limits)?;
    let min_consistent_cover = cover_by(p, OrderPredicate::Consistent, full, limits)?;

    let union = |sets: &[SubsetMask]| sets.iter().fold(SubsetMask::EMPTY, |acc, &s| acc | s);
    let certified = p.check(OrderPredicate::UpIndependent, witness).holds
        && min_ideal_cover.iter().all(|&s| p.check(OrderPredicate::Ideal, s).holds)
        && min_consistent_cover
            .iter()
            .all(|&s| p.check(OrderPredicate::Consistent, s).holds)
        && union(&min_ideal_cover) == full
        && union(&min_consistent_cover) == full;
    let ideals_principal = min_ideal_cover.iter().all(|&s| is_principal(p, s));
    let equal = max_up_independent.size == min_ideal_cover.len() && min_ideal_cover.len() == min_consistent_cover.len();
    Ok(MinMaxReport {
        max_up_independent,
        min_ideal_cover,
        min_consistent_cover,
        equal,
        certified,
        ideals_principal,
    })
}

/// Fewest ideals with union `a`, which must be an initial segment.
pub fn ideal_decompose_downset(p: &Poset, a: SubsetMask, limits: &Limits) -> Result<Vec<SubsetMask>> {
    if !a.is_subset(p.full()) {
        return Err(Error::OutOfGround(a));
    }
    if !p.check(OrderPredicate::InitialSegment, a).holds {
        return Err(Error::NotInitialSegment(a));
    }
    limits.check_subsets(a.len())?;
    cover_by(p, OrderPredicate::Ideal, a, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::QuasiOrder;

    fn vee() -> Poset {
        Poset::new(QuasiOrder::from_pairs(3, &[(2, 0), (2, 1)]).unwrap()).unwrap()
    }

    fn chain3() -> Poset {
        Poset::new(QuasiOrder::chain(3)).unwrap()
    }

    fn m(bits: u32) -> SubsetMask {
        SubsetMask::from_bits(bits)
    }

    #[test]
    fn qur_examples() {
        let q = qur_partition(&vee());
        assert_eq!((q.q, q.u, q.r), (m(0b011), m(0b111), m(0)));
        let q = qur_partition(&chain3());
        assert_eq!((q.q, q.u, q.r), (m(0b111), m(0b111), m(0)));
        let q = qur_partition(&Poset::new(QuasiOrder::antichain(2)).unwrap());
        assert!(q.r_empty() && q.q == m(0b11));
    }

    #[test]
    fn report_examples() {
        let limits = Limits::default();
        let r = minmax_report(&vee(), &limits).unwrap();
        assert_eq!(r.sizes(), (2, 2, 2));
        assert!(r.equal && r.certified && r.ideals_principal);
        assert_eq!(r.min_ideal_cover, vec![m(0b101), m(0b110)]);
        assert_eq!(r.max_up_independent.set, m(0b011));

        assert_eq!(minmax_report(&chain3(), &limits).unwrap().sizes(), (1, 1, 1));
        let anti = Poset::new(QuasiOrder::antichain(3)).unwrap();
        assert_eq!(minmax_report(&anti, &limits).unwrap().sizes(), (3, 3, 3));
        let empty = Poset::new(QuasiOrder::antichain(0)).unwrap();
        assert_eq!(minmax_report(&empty, &limits).unwrap().sizes(), (0, 0, 0));
    }

    #[test]
    fn consistent_cover_example() {
        // Two tops over a shared bottom: {a, c} and {b, c} are both ideals
        // and consistent sets.
        let r = minmax_report(&vee(), &Limits::default()).unwrap();
        assert_eq!(r.min_consistent_cover, vec![m(0b101), m(0b110)]);
    }

    #[test]
    fn downset_examples() {
        let limits = Limits::default();
        assert_eq!(
            ideal_decompose_downset(&vee(), m(0b111), &limits).unwrap(),
            vec![m(0b101), m(0b110)]
        );
        assert_eq!(
            ideal_decompose_downset(&chain3(), m(0b011), &limits).unwrap(),
            vec![m(0b011)]
        );
        assert!(ideal_decompose_downset(&chain3(), m(0), &limits).unwrap().is_empty());
        assert_eq!(
            ideal_decompose_downset(&chain3(), m(0b010), &limits).unwrap_err(),
            Error::NotInitialSegment(m(0b010))
        );
    }
}
