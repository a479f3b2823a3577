//! Separating chains of closed sets and their correspondence with
//! independent sets.
//!
//! A chain `I_0 ⊋ I_1 ⊋ … ⊋ I_N` of closed sets is separating when for every
//! non-top member `I` and every `F ⊆ I_0 ∖ I` some member `J` has
//! `I ⊄ φ(F ∪ J)`. Finite chains are checked in two modes: [`Mode::Full`]
//! quantifies `I` over `I_1..I_N`, while [`Mode::ToDepth`] leaves out the
//! last member, which stands in for an infinite tail that would always
//! supply a deeper `J`.

use crate::closure::ClosureSystem;
use crate::error::{Error, Result};
use crate::independence::{first_dependent, is_independent};
use crate::mask::SubsetMask;

/// A nonempty strictly descending list of sets, top first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedChain {
    sets: Vec<SubsetMask>,
}

impl ClosedChain {
    pub fn new(sets: Vec<SubsetMask>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidChain("chain is empty".into()));
        }
        if let Some(w) = sets.windows(2).find(|w| !w[1].is_proper_subset(w[0])) {
            return Err(Error::InvalidChain(format!(
                "{:?} is not strictly below {:?}",
                w[1], w[0]
            )));
        }
        Ok(ClosedChain { sets })
    }

    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `⋃𝓘 = I_0`.
    pub fn top(&self) -> SubsetMask {
        self.sets[0]
    }

    /// Parses `a,b,c;a,c;c`; `-` is the empty member.
    pub fn parse(sys: &ClosureSystem, text: &str) -> Result<Self> {
        let sets = text
            .split(';')
            .map(|member| sys.parse_set(member))
            .collect::<Result<Vec<_>>>()?;
        ClosedChain::new(sets)
    }

    pub fn format(&self, sys: &ClosureSystem) -> String {
        self.sets
            .iter()
            .map(|&s| sys.format_set(s))
            .collect::<Vec<_>>()
            .join(" > ")
    }

    fn validate(&self, sys: &ClosureSystem) -> Result<()> {
        for &s in &self.sets {
            sys.require_within(s)?;
            if !sys.is_closed(s) {
                return Err(Error::InvalidChain(format!(
                    "member {} is not closed",
                    sys.format_set(s)
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Full,
    ToDepth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparatingVerdict {
    pub mode: Mode,
    pub separating: bool,
    /// Least `(m, F)` with `F ⊆ I_0 ∖ I_m` and `I_m ⊆ φ(F ∪ J)` for all `J`.
    pub witness: Option<(usize, SubsetMask)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// Work in the closure induced on `X`.
    Induced,
    /// Work in the whole space; needs a topological closure.
    Whole,
}

fn tested_members(chain: &ClosedChain, mode: Mode) -> std::ops::Range<usize> {
    let last = chain.len() - 1;
    match mode {
        Mode::Full => 1..last + 1,
        Mode::ToDepth => 1..last.max(1),
    }
}

pub fn is_separating(sys: &ClosureSystem, chain: &ClosedChain, mode: Mode) -> Result<SeparatingVerdict> {
    chain.validate(sys)?;
    let sets = chain.sets();
    let top = chain.top();
    for m in tested_members(chain, mode) {
        let target = sets[m];
        let room = top - target;
        sys.limits().check_subsets(room.len())?;
        let blocked = room
            .subsets_by_size()
            .find(|&f| sets.iter().all(|&j| target.is_subset(sys.closure(f | j))));
        if let Some(f) = blocked {
            return Ok(SeparatingVerdict {
                mode,
                separating: false,
                witness: Some((m, f)),
            });
        }
    }
    Ok(SeparatingVerdict {
        mode,
        separating: true,
        witness: None,
    })
}

/// Builds `I_n := φ(X ∖ {x_i : i < n})`, `n = 0..|X|`, with `x_0, x_1, ..`
/// the members of `X` in id order, either in the closure induced on `X` or
/// in the whole space. Returns the system the chain lives in.
pub fn chain_from_independent(
    sys: &ClosureSystem,
    x: SubsetMask,
    ambient: Ambient,
) -> Result<(ClosureSystem, ClosedChain)> {
    sys.require_within(x)?;
    if let Some(e) = first_dependent(sys, x) {
        return Err(Error::NotIndependent(e));
    }
    let (system, members): (ClosureSystem, Vec<SubsetMask>) = match ambient {
        Ambient::Induced => {
            let induced = sys.induce(x);
            let full = induced.full();
            let members = (0..=x.len())
                .map(|n| induced.closure(full - SubsetMask::full(n)))
                .collect();
            (induced, members)
        }
        Ambient::Whole => {
            sys.require_topological()?;
            let order: Vec<usize> = x.iter().collect();
            let members = (0..=order.len())
                .map(|n| {
                    let dropped = SubsetMask::from_elems(order[..n].iter().copied());
                    sys.closure(x - dropped)
                })
                .collect();
            (sys.clone(), members)
        }
    };
    let mut sets: Vec<SubsetMask> = members;
    sets.dedup();
    Ok((system, ClosedChain::new(sets)?))
}

fn first_escape(sys: &ClosureSystem, sets: &[SubsetMask], target: SubsetMask, f: SubsetMask) -> Option<(usize, usize)> {
    sets.iter().enumerate().find_map(|(j, &member)| {
        let span = sys.closure(f | member);
        (target - span).first().map(|z| (j, z))
    })
}

/// Replays the extraction of an independent set from a chain: start below
/// the second member, then repeatedly pick the first member `J` and least
/// point `z ∈ I ∖ φ(F ∪ J)`, until no such pair exists.
pub fn independent_from_separating(sys: &ClosureSystem, chain: &ClosedChain) -> Result<SubsetMask> {
    if chain.len() < 2 {
        return Err(Error::ChainTooShort {
            needed: 2,
            got: chain.len(),
        });
    }
    chain.validate(sys)?;
    let sets = chain.sets();
    let mut current = sets[1];
    let first = (sets[0] - current).first().expect("strict descent");
    let mut picked = SubsetMask::singleton(first);
    // Every escape has J ⊊ current, so this walks strictly down the chain.
    while let Some((j, z)) = first_escape(sys, sets, current, picked) {
        picked = picked.insert(z);
        current = sets[j];
    }
    if !is_independent(sys, picked) {
        return Err(Error::NotIndependent(first_dependent(sys, picked).expect("dependent")));
    }
    Ok(picked)
}

/// Least `(m, F)` (by `m`, then size, then mask) with `m ≥ 1`,
/// `F ⊆ I_0 ∖ I_m` and `I_m ⊆ φ(F) ∪ J` for every member `J`. Uses the
/// topological identity `φ(F ∪ J) = φ(F) ∪ J`.
pub fn nonseparating_witness(sys: &ClosureSystem, chain: &ClosedChain) -> Result<Option<(usize, SubsetMask)>> {
    if chain.len() < 2 {
        return Err(Error::ChainTooShort {
            needed: 2,
            got: chain.len(),
        });
    }
    sys.require_topological()?;
    chain.validate(sys)?;
    let sets = chain.sets();
    let top = chain.top();
    for (m, &target) in sets.iter().enumerate().skip(1) {
        let room = top - target;
        sys.limits().check_subsets(room.len())?;
        for f in room.subsets_by_size() {
            let span = sys.closure(f);
            if sets.iter().all(|&j| target.is_subset(span | j)) {
                return Ok(Some((m, f)));
            }
        }
    }
    Ok(None)
}

/// Every strictly descending chain of closed sets with at least
/// `min_members` members, in lexicographic order of member lists (members
/// compared canonically, larger sets first within a chain).
pub fn descending_chains(sys: &ClosureSystem, min_members: usize) -> Result<Vec<ClosedChain>> {
    let closed = sys.closed_family()?;
    let mut out = Vec::new();
    let budget = sys.limits().budget;

    fn extend(
        closed: &[SubsetMask],
        prefix: &mut Vec<SubsetMask>,
        min_members: usize,
        out: &mut Vec<ClosedChain>,
        budget: u64,
    ) -> Result<()> {
        if prefix.len() >= min_members {
            if out.len() as u64 >= budget {
                return Err(Error::LimitExceeded {
                    needed: out.len() as u64 + 1,
                    budget,
                });
            }
            out.push(ClosedChain { sets: prefix.clone() });
        }
        let last = *prefix.last().expect("nonempty prefix");
        for &next in closed {
            if next.is_proper_subset(last) {
                prefix.push(next);
                extend(closed, prefix, min_members, out, budget)?;
                prefix.pop();
            }
        }
        Ok(())
    }

    for &start in &closed {
        let mut prefix = vec![start];
        extend(&closed, &mut prefix, min_members, &mut out, budget)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn chain(sys: &ClosureSystem, text: &str) -> ClosedChain {
        ClosedChain::parse(sys, text).unwrap()
    }

    #[test]
    fn separating_examples() {
        let v3 = fixtures::v3();
        let c = chain(&v3, "a,b,c;a,c;c");
        let v = is_separating(&v3, &c, Mode::Full).unwrap();
        assert!(!v.separating);
        assert_eq!(v.witness, Some((2, SubsetMask::EMPTY)));

        let pu2 = fixtures::pu2();
        let c = chain(&pu2, "p,p0,p1,p01;p,p0");
        assert!(!is_separating(&pu2, &c, Mode::Full).unwrap().separating);

        let induced = pu2.induce(pu2.parse_set("p0,p1").unwrap());
        let c = chain(&induced, "p0,p1;p1;-");
        let v = is_separating(&induced, &c, Mode::ToDepth).unwrap();
        assert!(v.separating && v.witness.is_none());
        assert!(!is_separating(&induced, &c, Mode::Full).unwrap().separating);
    }

    #[test]
    fn invalid_chains() {
        let v3 = fixtures::v3();
        assert!(matches!(
            ClosedChain::parse(&v3, "a,c;a,c"),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(ClosedChain::parse(&v3, "c;a,c"), Err(Error::InvalidChain(_))));
        let not_closed = chain(&v3, "a,b,c;a");
        assert!(matches!(
            is_separating(&v3, &not_closed, Mode::Full),
            Err(Error::InvalidChain(_))
        ));
    }

    #[test]
    fn chain_construction_examples() {
        let pu2 = fixtures::pu2();
        let (induced, c) = chain_from_independent(&pu2, pu2.parse_set("p0,p1").unwrap(), Ambient::Induced).unwrap();
        assert_eq!(c, chain(&induced, "p0,p1;p1;-"));

        let v3 = fixtures::v3();
        let (_, c) = chain_from_independent(&v3, v3.parse_set("a,b").unwrap(), Ambient::Whole).unwrap();
        assert_eq!(c, chain(&v3, "a,b,c;b,c;-"));

        let (_, c) = chain_from_independent(&v3, v3.parse_set("a").unwrap(), Ambient::Whole).unwrap();
        assert_eq!(c, chain(&v3, "a,c;-"));

        let m3 = fixtures::m3();
        assert_eq!(
            chain_from_independent(&m3, m3.parse_set("y,z").unwrap(), Ambient::Whole).unwrap_err(),
            Error::NotTopological
        );
        assert_eq!(
            chain_from_independent(&v3, v3.parse_set("a,c").unwrap(), Ambient::Induced).unwrap_err(),
            Error::NotIndependent(2)
        );
    }

    #[test]
    fn extraction_examples() {
        let pu2 = fixtures::pu2();
        let (induced, c) = chain_from_independent(&pu2, pu2.parse_set("p0,p1").unwrap(), Ambient::Induced).unwrap();
        assert_eq!(independent_from_separating(&induced, &c).unwrap(), induced.full());

        let v3 = fixtures::v3();
        let c = chain(&v3, "a,b,c;b,c;-");
        assert_eq!(
            independent_from_separating(&v3, &c).unwrap(),
            v3.parse_set("a,b").unwrap()
        );

        let short = chain(&v3, "a,b,c");
        assert_eq!(
            independent_from_separating(&v3, &short).unwrap_err(),
            Error::ChainTooShort { needed: 2, got: 1 }
        );
    }

    #[test]
    fn witness_examples() {
        let ch3 = fixtures::ch3();
        let c = chain(&ch3, "a,b,c;a,b;a");
        assert_eq!(
            nonseparating_witness(&ch3, &c).unwrap(),
            Some((1, ch3.parse_set("c").unwrap()))
        );

        let v3 = fixtures::v3();
        let c = chain(&v3, "a,b,c;a,c;c");
        assert_eq!(nonseparating_witness(&v3, &c).unwrap(), Some((2, SubsetMask::EMPTY)));

        assert_eq!(
            nonseparating_witness(&v3, &chain(&v3, "a,b,c")).unwrap_err(),
            Error::ChainTooShort { needed: 2, got: 1 }
        );
        let pu2 = fixtures::pu2();
        assert_eq!(
            nonseparating_witness(&pu2, &chain(&pu2, "p,p0,p1,p01;p,p0")).unwrap_err(),
            Error::NotTopological
        );
    }

    #[test]
    fn chains_enumerated() {
        let ch3 = fixtures::ch3();
        // Four nested closed sets: 2^4 - 1 - 4 chains with ≥ 2 members.
        assert_eq!(descending_chains(&ch3, 2).unwrap().len(), 11);
        assert_eq!(descending_chains(&ch3, 1).unwrap().len(), 15);
    }
}
