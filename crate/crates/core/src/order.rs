//! Quasi-orders, posets and the order-theoretic side of finite closure
//! systems.

use std::ops::Deref;

use crate::closure::ClosureSystem;
use crate::error::{Error, Result};
use crate::independence::independence_check;
use crate::irreducible::is_irreducible;
use crate::limits::Limits;
use crate::mask::SubsetMask;

/// A reflexive, transitive relation on `{0..n-1}`, stored as principal
/// down-sets and up-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiOrder {
    down: Vec<SubsetMask>,
    up: Vec<SubsetMask>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderPredicate {
    Antichain,
    InitialSegment,
    Cofinal,
    Ideal,
    UpIndependent,
    Consistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredicateWitness {
    Pair(usize, usize),
    Element(usize),
    /// The predicate requires a nonempty set.
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredicateOutcome {
    pub holds: bool,
    pub witness: Option<PredicateWitness>,
}

impl PredicateOutcome {
    fn pass() -> Self {
        PredicateOutcome {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: PredicateWitness) -> Self {
        PredicateOutcome {
            holds: false,
            witness: Some(w),
        }
    }
}

fn transpose(rel: &[SubsetMask]) -> Vec<SubsetMask> {
    let n = rel.len();
    let mut out = vec![SubsetMask::EMPTY; n];
    for (y, set) in rel.iter().enumerate() {
        for x in set.iter() {
            out[x] = out[x].insert(y);
        }
    }
    out
}

impl QuasiOrder {
    /// Reflexive-transitive closure of the given `x ≤ y` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut down: Vec<SubsetMask> = (0..n).map(SubsetMask::singleton).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::NotQuasiOrder(format!("pair ({x}, {y}) out of range")));
            }
            down[y] = down[y].insert(x);
        }
        // Warshall over masks.
        for k in 0..n {
            let through = down[k];
            for d in down.iter_mut() {
                if d.contains(k) {
                    *d |= through;
                }
            }
        }
        let up = transpose(&down);
        Ok(QuasiOrder { down, up })
    }

    /// `down[y]` is the set of `x ≤ y`; validated for reflexivity and
    /// transitivity.
    pub fn from_down_sets(down: Vec<SubsetMask>) -> Result<Self> {
        let n = down.len();
        let full = SubsetMask::full(n);
        for (y, d) in down.iter().enumerate() {
            if !d.is_subset(full) {
                return Err(Error::OutOfGround(*d));
            }
            if !d.contains(y) {
                return Err(Error::NotQuasiOrder(format!("{y} ≰ {y}")));
            }
            for x in d.iter() {
                if !down[x].is_subset(*d) {
                    return Err(Error::NotQuasiOrder(format!("not transitive below {x} ≤ {y}")));
                }
            }
        }
        let up = transpose(&down);
        Ok(QuasiOrder { down, up })
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_pairs(n, &[]).expect("in range")
    }

    /// `0 ≤ 1 ≤ .. ≤ n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs).expect("in range")
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    /// `x < y`: `x ≤ y` and `y ≰ x`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && !self.leq(y, x)
    }

    pub fn principal_down(&self, x: usize) -> SubsetMask {
        self.down[x]
    }

    pub fn principal_up(&self, x: usize) -> SubsetMask {
        self.up[x]
    }

    pub fn down_set(&self, a: SubsetMask) -> SubsetMask {
        a.iter().fold(SubsetMask::EMPTY, |acc, y| acc | self.down[y])
    }

    pub fn up_set(&self, a: SubsetMask) -> SubsetMask {
        a.iter().fold(SubsetMask::EMPTY, |acc, y| acc | self.up[y])
    }

    /// ↓A or ↑A.
    pub fn down_up(&self, a: SubsetMask, dir: Direction) -> SubsetMask {
        match dir {
            Direction::Down => self.down_set(a),
            Direction::Up => self.up_set(a),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.mutual_pair().is_none()
    }

    fn mutual_pair(&self) -> Option<(usize, usize)> {
        (0..self.len()).find_map(|x| {
            (self.down[x] & (self.up[x] - SubsetMask::singleton(x)))
                .first()
                .map(|y| (x, y))
        })
    }

    /// Elements whose equivalence class is maximal.
    pub fn maximal_elements(&self) -> SubsetMask {
        (0..self.len())
            .filter(|&x| self.up[x].is_subset(self.down[x]))
            .collect()
    }

    /// Sub-order on `a`, with the parent id of each new index.
    pub fn restrict(&self, a: SubsetMask) -> (QuasiOrder, Vec<usize>) {
        let ids: Vec<usize> = a.iter().collect();
        let down = ids
            .iter()
            .map(|&y| SubsetMask::from_bits(a.extract(self.down[y])))
            .collect::<Vec<_>>();
        let up = transpose(&down);
        (QuasiOrder { down, up }, ids)
    }

    fn has_upper_bound_in(&self, x: usize, y: usize, within: SubsetMask) -> bool {
        !(self.up[x] & self.up[y] & within).is_empty()
    }

    /// Pairs of distinct members in lexicographic order.
    fn pairs(a: SubsetMask) -> impl Iterator<Item = (usize, usize)> {
        a.iter()
            .flat_map(move |x| (a - SubsetMask::full(x + 1)).iter().map(move |y| (x, y)))
    }

    /// Decides one of the order predicates by definition.
    pub fn check(&self, kind: OrderPredicate, a: SubsetMask) -> PredicateOutcome {
        assert!(a.is_subset(self.full()), "{a:?} is not within the order");
        let full = self.full();
        match kind {
            OrderPredicate::Antichain => Self::pairs(a)
                .find(|&(x, y)| self.leq(x, y) || self.leq(y, x))
                .map_or_else(PredicateOutcome::pass, |(x, y)| {
                    PredicateOutcome::fail(PredicateWitness::Pair(x, y))
                }),
            OrderPredicate::InitialSegment => match (self.down_set(a) - a).first() {
                None => PredicateOutcome::pass(),
                Some(x) => {
                    let y = (self.up[x] & a).first().expect("x lies below a member");
                    PredicateOutcome::fail(PredicateWitness::Pair(x, y))
                }
            },
            OrderPredicate::Cofinal => match (full - self.down_set(a)).first() {
                None => PredicateOutcome::pass(),
                Some(x) => PredicateOutcome::fail(PredicateWitness::Element(x)),
            },
            OrderPredicate::Ideal => {
                if a.is_empty() {
                    return PredicateOutcome::fail(PredicateWitness::Empty);
                }
                let seg = self.check(OrderPredicate::InitialSegment, a);
                if !seg.holds {
                    return seg;
                }
                Self::pairs(a)
                    .find(|&(x, y)| !self.has_upper_bound_in(x, y, a))
                    .map_or_else(PredicateOutcome::pass, |(x, y)| {
                        PredicateOutcome::fail(PredicateWitness::Pair(x, y))
                    })
            }
            OrderPredicate::UpIndependent => Self::pairs(a)
                .find(|&(x, y)| self.has_upper_bound_in(x, y, full))
                .map_or_else(PredicateOutcome::pass, |(x, y)| {
                    PredicateOutcome::fail(PredicateWitness::Pair(x, y))
                }),
            OrderPredicate::Consistent => Self::pairs(a)
                .find(|&(x, y)| !self.has_upper_bound_in(x, y, full))
                .map_or_else(PredicateOutcome::pass, |(x, y)| {
                    PredicateOutcome::fail(PredicateWitness::Pair(x, y))
                }),
        }
    }

    /// Collapses mutual-≤ classes. Classes are numbered by least member.
    pub fn quotient(&self) -> Quotient {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let members = self.down[x] & self.up[x];
            for y in members.iter() {
                class_of[y] = classes.len();
            }
            classes.push(members);
        }
        let down = classes
            .iter()
            .map(|members| {
                let rep = members.first().expect("classes are nonempty");
                self.down[rep].iter().map(|x| class_of[x]).collect()
            })
            .collect();
        let order = QuasiOrder::from_down_sets(down).expect("quotient of a quasi-order");
        Quotient {
            poset: Poset::new(order).expect("quotient is antisymmetric"),
            class_of,
            classes,
        }
    }

    /// Least-id representative of every maximal class; the canonical
    /// minimal cofinal subset.
    pub fn well_founded_cofinal(&self) -> SubsetMask {
        self.maximal_elements()
            .iter()
            .filter(|&x| (self.down[x] & self.up[x]).first() == Some(x))
            .collect()
    }
}

/// An antisymmetric quasi-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset(QuasiOrder);

impl Poset {
    pub fn new(order: QuasiOrder) -> Result<Self> {
        match order.mutual_pair() {
            None => Ok(Poset(order)),
            Some((x, y)) => Err(Error::NotAntisymmetric(x, y)),
        }
    }

    pub fn order(&self) -> &QuasiOrder {
        &self.0
    }

    pub fn into_order(self) -> QuasiOrder {
        self.0
    }
}

impl Deref for Poset {
    type Target = QuasiOrder;

    fn deref(&self) -> &QuasiOrder {
        &self.0
    }
}

impl TryFrom<QuasiOrder> for Poset {
    type Error = Error;

    fn try_from(order: QuasiOrder) -> Result<Self> {
        Poset::new(order)
    }
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub poset: Poset,
    /// Class index of every original element.
    pub class_of: Vec<usize>,
    /// Members of every class.
    pub classes: Vec<SubsetMask>,
}

/// All initial segments of a finite poset ordered by containment.
#[derive(Debug, Clone)]
pub struct DownsetLattice {
    pub sets: Vec<SubsetMask>,
    /// Members in the longest strictly descending chain of segments.
    pub longest_chain: usize,
}

impl DownsetLattice {
    /// Whether segment `i` contains segment `j`.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.sets[j].is_subset(self.sets[i])
    }

    /// Every segment of a finite poset is finitely generated, so this
    /// always holds; kept as an explicit check.
    pub fn is_well_founded(&self) -> bool {
        self.longest_chain <= self.sets.len()
    }
}

/// Longest strictly increasing chain, counted in members.
pub(crate) fn longest_chain(sets: &[SubsetMask]) -> usize {
    let mut by_size: Vec<SubsetMask> = sets.to_vec();
    by_size.sort_by_key(|s| (s.len(), *s));
    let mut best = vec![1usize; by_size.len()];
    for i in 0..by_size.len() {
        for j in 0..i {
            if by_size[j].is_proper_subset(by_size[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn fg_initial_segments(poset: &Poset, limits: &Limits) -> Result<DownsetLattice> {
    limits.check_subsets(poset.len())?;
    let sets: Vec<SubsetMask> = poset.full().subsets().filter(|&a| poset.down_set(a) == a).collect();
    let longest_chain = longest_chain(&sets);
    Ok(DownsetLattice { sets, longest_chain })
}

/// Finite θ-enumeration: walk `order` and keep every element outside the
/// closure of those already kept.
pub fn greedy_generating_sequence(sys: &ClosureSystem, order: &[usize]) -> Result<Vec<usize>> {
    let mut seen = SubsetMask::EMPTY;
    for &y in order {
        if y >= sys.len() {
            return Err(Error::InvalidOrder(format!("element {y} out of range")));
        }
        if seen.contains(y) {
            return Err(Error::InvalidOrder(format!("`{}` listed twice", sys.label(y))));
        }
        seen = seen.insert(y);
    }
    let mut picked = Vec::new();
    let mut picked_set = SubsetMask::EMPTY;
    loop {
        let span = sys.closure(picked_set);
        match order.iter().copied().find(|&y| !span.contains(y)) {
            Some(y) => {
                picked.push(y);
                picked_set = picked_set.insert(y);
            }
            None => return Ok(picked),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Correspondence {
    AntichainDiscrete,
    CofinalDense,
    IdealIrreducible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceViolation {
    pub subset: SubsetMask,
    pub kind: Correspondence,
}

#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub subsets_checked: usize,
    pub antichains: usize,
    pub cofinal: usize,
    pub ideals: Vec<SubsetMask>,
    pub irreducible_closed: Vec<SubsetMask>,
    pub violations: Vec<CorrespondenceViolation>,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, on every subset of `poset`, that the order notions line up with
/// the topological ones of its Alexandroff space.
pub fn correspondence_check(poset: &Poset, limits: &Limits) -> Result<CorrespondenceReport> {
    limits.check_subsets(poset.len())?;
    let sys = ClosureSystem::alexandroff_unlabeled(poset.order().clone())?.with_limits(*limits)?;
    let mut report = CorrespondenceReport {
        subsets_checked: 0,
        antichains: 0,
        cofinal: 0,
        ideals: Vec::new(),
        irreducible_closed: Vec::new(),
        violations: Vec::new(),
    };
    for a in poset.full().subsets() {
        report.subsets_checked += 1;
        let antichain = poset.check(OrderPredicate::Antichain, a).holds;
        let indep = independence_check(&sys, a)?;
        let discrete = indep.discrete.as_ref().is_some_and(|d| d.holds);
        if antichain != discrete {
            report.violations.push(CorrespondenceViolation {
                subset: a,
                kind: Correspondence::AntichainDiscrete,
            });
        }
        let cofinal = poset.check(OrderPredicate::Cofinal, a).holds;
        if cofinal != indep.generating {
            report.violations.push(CorrespondenceViolation {
                subset: a,
                kind: Correspondence::CofinalDense,
            });
        }
        let ideal = poset.check(OrderPredicate::Ideal, a).holds;
        let irreducible = sys.is_closed(a) && is_irreducible(&sys, a)?.is_irreducible();
        if ideal != irreducible {
            report.violations.push(CorrespondenceViolation {
                subset: a,
                kind: Correspondence::IdealIrreducible,
            });
        }
        report.antichains += antichain as usize;
        report.cofinal += cofinal as usize;
        if ideal {
            report.ideals.push(a);
        }
        if irreducible {
            report.irreducible_closed.push(a);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn m(bits: u32) -> SubsetMask {
        SubsetMask::from_bits(bits)
    }

    // a=0, b=1, c=2 with c ≤ a, c ≤ b.
    fn v3() -> QuasiOrder {
        QuasiOrder::from_pairs(3, &[(2, 0), (2, 1)]).unwrap()
    }

    #[test]
    fn down_up_examples() {
        assert_eq!(v3().down_up(m(0b100), Direction::Up), m(0b111));
        assert_eq!(QuasiOrder::chain(3).down_up(m(0b010), Direction::Down), m(0b011));
        for q in [v3(), QuasiOrder::chain(3)] {
            assert!(q.down_up(SubsetMask::EMPTY, Direction::Up).is_empty());
            assert!(q.down_up(SubsetMask::EMPTY, Direction::Down).is_empty());
        }
    }

    #[test]
    fn predicate_examples() {
        let q = v3();
        assert!(q.check(OrderPredicate::Antichain, m(0b011)).holds);
        assert_eq!(
            q.check(OrderPredicate::Consistent, m(0b011)),
            PredicateOutcome::fail(PredicateWitness::Pair(0, 1))
        );
        assert!(QuasiOrder::chain(3).check(OrderPredicate::Ideal, m(0b011)).holds);
        assert_eq!(
            q.check(OrderPredicate::Ideal, SubsetMask::EMPTY),
            PredicateOutcome::fail(PredicateWitness::Empty)
        );
        assert_eq!(
            q.check(OrderPredicate::InitialSegment, m(0b001)),
            PredicateOutcome::fail(PredicateWitness::Pair(2, 0))
        );
        assert_eq!(
            q.check(OrderPredicate::Cofinal, m(0b001)),
            PredicateOutcome::fail(PredicateWitness::Element(1))
        );
        assert_eq!(
            q.check(OrderPredicate::UpIndependent, m(0b101)),
            PredicateOutcome::fail(PredicateWitness::Pair(0, 2))
        );
        // Whole V3 is a down-set but not up-directed.
        assert_eq!(
            q.check(OrderPredicate::Ideal, m(0b111)),
            PredicateOutcome::fail(PredicateWitness::Pair(0, 1))
        );
    }

    #[test]
    fn quotient_examples() {
        let cycle = QuasiOrder::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        let quot = cycle.quotient();
        assert_eq!(quot.classes, vec![m(0b11)]);
        assert_eq!(quot.class_of, vec![0, 0]);
        let q = v3();
        let quot = q.quotient();
        assert_eq!(quot.poset.order(), &q);
        let spec = fixtures::m3().specialization();
        assert!(spec.is_antisymmetric());
        assert_eq!(spec.quotient().classes.len(), 3);
    }

    #[test]
    fn well_founded_cofinal_examples() {
        assert_eq!(v3().well_founded_cofinal(), m(0b011));
        assert_eq!(QuasiOrder::chain(3).well_founded_cofinal(), m(0b100));
        assert_eq!(QuasiOrder::antichain(3).well_founded_cofinal(), m(0b111));
        // Top class {1, 2}: representative 1.
        let q = QuasiOrder::from_pairs(3, &[(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(q.well_founded_cofinal(), m(0b010));
    }

    #[test]
    fn downset_lattices() {
        let limits = Limits::default();
        let anti = Poset::new(QuasiOrder::antichain(2)).unwrap();
        let lat = fg_initial_segments(&anti, &limits).unwrap();
        assert_eq!(lat.sets, vec![m(0), m(1), m(2), m(3)]);
        assert_eq!(lat.longest_chain, 3);
        let ch = Poset::new(QuasiOrder::chain(3)).unwrap();
        let lat = fg_initial_segments(&ch, &limits).unwrap();
        assert_eq!(lat.sets, vec![m(0), m(1), m(3), m(7)]);
        assert_eq!(lat.longest_chain, 4);
        assert!(lat.contains(3, 1) && !lat.contains(1, 3));
        let empty = Poset::new(QuasiOrder::antichain(0)).unwrap();
        let lat = fg_initial_segments(&empty, &limits).unwrap();
        assert_eq!(lat.sets, vec![SubsetMask::EMPTY]);
        assert!(lat.is_well_founded());
    }

    #[test]
    fn greedy_examples() {
        let ch3 = fixtures::ch3();
        assert_eq!(greedy_generating_sequence(&ch3, &[0, 1, 2]).unwrap(), vec![0, 1, 2]);
        assert_eq!(greedy_generating_sequence(&ch3, &[2, 1, 0]).unwrap(), vec![2]);
        let m3 = fixtures::m3();
        assert_eq!(greedy_generating_sequence(&m3, &[0, 1, 2]).unwrap(), vec![1, 2]);
        assert!(matches!(
            greedy_generating_sequence(&m3, &[0, 0]),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn correspondence_examples() {
        let limits = Limits::default();
        let report = correspondence_check(&Poset::new(v3()).unwrap(), &limits).unwrap();
        assert!(report.holds());
        assert_eq!(report.subsets_checked, 8);
        let ch = Poset::new(QuasiOrder::chain(3)).unwrap();
        let report = correspondence_check(&ch, &limits).unwrap();
        assert!(report.holds());
        assert_eq!(report.ideals, vec![m(1), m(3), m(7)]);
        assert_eq!(report.irreducible_closed, report.ideals);
        let single = Poset::new(QuasiOrder::antichain(1)).unwrap();
        assert!(correspondence_check(&single, &limits).unwrap().holds());
    }

    #[test]
    fn not_antisymmetric() {
        let cycle = QuasiOrder::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(Poset::new(cycle).unwrap_err(), Error::NotAntisymmetric(0, 1));
    }

    fn arb_order() -> impl Strategy<Value = QuasiOrder> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..10)
                .prop_map(move |pairs| QuasiOrder::from_pairs(n, &pairs).unwrap())
        })
    }

    proptest! {
        #[test]
        fn down_up_monotone_idempotent(q in arb_order()) {
            for a in q.full().subsets() {
                for dir in [Direction::Down, Direction::Up] {
                    let once = q.down_up(a, dir);
                    prop_assert!(a.is_subset(once));
                    prop_assert_eq!(q.down_up(once, dir), once);
                    for e in (q.full() - a).iter() {
                        prop_assert!(once.is_subset(q.down_up(a.insert(e), dir)));
                    }
                }
            }
        }

        #[test]
        fn ideal_is_directed_initial_segment(q in arb_order()) {
            for a in q.full().subsets() {
                let seg = a.iter().all(|y| (0..q.len()).all(|x| !q.leq(x, y) || a.contains(x)));
                let directed = !a.is_empty() && a.iter().all(|x| a.iter().all(|y| {
                    a.iter().any(|z| q.leq(x, z) && q.leq(y, z))
                }));
                prop_assert_eq!(q.check(OrderPredicate::InitialSegment, a).holds, seg);
                prop_assert_eq!(q.check(OrderPredicate::Ideal, a).holds, seg && directed);
            }
        }

        #[test]
        fn cofinal_output_is_minimal(q in arb_order()) {
            let d = q.well_founded_cofinal();
            prop_assert_eq!(q.down_set(d), q.full());
            for x in d.iter() {
                prop_assert_ne!(q.down_set(d.remove(x)), q.full());
            }
        }

        #[test]
        fn quotient_roundtrip(q in arb_order()) {
            let quot = q.quotient();
            let sys = ClosureSystem::alexandroff_unlabeled(quot.poset.order().clone()).unwrap();
            prop_assert_eq!(&sys.specialization(), quot.poset.order());
            for x in 0..q.len() {
                for y in 0..q.len() {
                    prop_assert_eq!(q.leq(x, y), quot.poset.leq(quot.class_of[x], quot.class_of[y]));
                }
            }
        }

        #[test]
        fn downsets_form_a_lattice(q in arb_order()) {
            let poset = q.quotient().poset;
            let lat = fg_initial_segments(&poset, &Limits::default()).unwrap();
            let sets: std::collections::HashSet<_> = lat.sets.iter().copied().collect();
            for &a in &lat.sets {
                for &b in &lat.sets {
                    prop_assert!(sets.contains(&(a | b)) && sets.contains(&(a & b)));
                }
            }
            prop_assert_eq!(lat.longest_chain, poset.len() + 1);
        }
    }
}
