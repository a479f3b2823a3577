//! Irreducible closed sets and decompositions of closed sets into finite
//! unions of them.

use crate::closure::ClosureSystem;
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::search::min_cover;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// Irreducible sets are nonempty by definition.
    Empty,
    /// Two proper closed subsets whose union is the set.
    Split(SubsetMask, SubsetMask),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Fewest parts; lexicographically least part list among those.
    Min,
    /// All maximal irreducible closed subsets.
    Components,
    /// Recursive splitting, then irredundant pruning.
    Noether,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub target: SubsetMask,
    pub parts: Vec<SubsetMask>,
    pub strategy: Strategy,
    /// Part counts of the `Min` and `Components` strategies; they differ
    /// only for non-topological systems.
    pub min_size: usize,
    pub components_size: usize,
}

/// Lexicographically least pair `(A, B)`, `A < B`, of proper closed subsets
/// with `A ∪ B = c`. `closed` lists closed subsets of `c` in canonical order.
fn split_pair(c: SubsetMask, closed: &[SubsetMask]) -> Option<(SubsetMask, SubsetMask)> {
    let proper: Vec<_> = closed.iter().copied().filter(|&s| s != c).collect();
    for (i, &a) in proper.iter().enumerate() {
        for &b in &proper[i + 1..] {
            if a | b == c {
                return Some((a, b));
            }
        }
    }
    None
}

fn classify(c: SubsetMask, closed_below: &[SubsetMask]) -> Irreducibility {
    if c.is_empty() {
        return Irreducibility::Empty;
    }
    match split_pair(c, closed_below) {
        Some((a, b)) => Irreducibility::Split(a, b),
        None => Irreducibility::Irreducible,
    }
}

/// Decides irreducibility of the closed set `c` by definition.
pub fn is_irreducible(sys: &ClosureSystem, c: SubsetMask) -> Result<Irreducibility> {
    let below = sys.closed_subsets_of(c)?;
    Ok(classify(c, &below))
}

/// Irreducible closed subsets of the closed set `c`, in canonical order.
pub fn irreducibles_within(sys: &ClosureSystem, c: SubsetMask) -> Result<Vec<SubsetMask>> {
    let closed = sys.closed_subsets_of(c)?;
    Ok(irreducibles_among(&closed))
}

fn irreducibles_among(closed: &[SubsetMask]) -> Vec<SubsetMask> {
    closed
        .iter()
        .copied()
        .filter(|&d| {
            let below: Vec<_> = closed.iter().copied().filter(|e| e.is_subset(d)).collect();
            classify(d, &below).is_irreducible()
        })
        .collect()
}

pub fn enumerate_irreducibles(sys: &ClosureSystem) -> Result<Vec<SubsetMask>> {
    let closed = sys.closed_family()?;
    Ok(irreducibles_among(&closed))
}

fn maximal(sets: &[SubsetMask]) -> Vec<SubsetMask> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| s.is_proper_subset(t)))
        .collect()
}

fn noether_split(sys: &ClosureSystem, c: SubsetMask, out: &mut Vec<SubsetMask>) -> Result<()> {
    if c.is_empty() {
        return Ok(());
    }
    let below = sys.closed_subsets_of(c)?;
    match split_pair(c, &below) {
        None => out.push(c),
        Some((a, b)) => {
            // Both halves are proper, so the recursion strictly shrinks.
            noether_split(sys, a, out)?;
            noether_split(sys, b, out)?;
        }
    }
    Ok(())
}

/// Drops duplicates and parts covered by the remaining ones, in canonical
/// order.
fn prune(target: SubsetMask, mut parts: Vec<SubsetMask>) -> Vec<SubsetMask> {
    parts.sort();
    parts.dedup();
    let mut keep = maximal(&parts);
    let mut i = 0;
    while i < keep.len() {
        let others = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(SubsetMask::EMPTY, |acc, (_, &p)| acc | p);
        if others == target {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    keep
}

pub fn decompose(sys: &ClosureSystem, c: SubsetMask, strategy: Strategy) -> Result<Decomposition> {
    sys.require_closed(c)?;
    let candidates = irreducibles_within(sys, c)?;
    let node_budget = sys.limits().budget.saturating_mul(64);
    let min_parts: Vec<SubsetMask> = min_cover(c, &candidates, node_budget)?
        .ok_or_else(|| Error::InvalidDecomposition(format!("{c:?} is not a union of irreducibles")))?
        .into_iter()
        .map(|i| candidates[i])
        .collect();
    let components = maximal(&candidates);
    let parts = match strategy {
        Strategy::Min => min_parts.clone(),
        Strategy::Components => components.clone(),
        Strategy::Noether => {
            let mut raw = Vec::new();
            noether_split(sys, c, &mut raw)?;
            prune(c, raw)
        }
    };
    Ok(Decomposition {
        target: c,
        parts,
        strategy,
        min_size: min_parts.len(),
        components_size: components.len(),
    })
}

/// Re-checks a decomposition from scratch: every part closed and
/// irreducible, union equal to the target.
pub fn validate_decomposition(sys: &ClosureSystem, d: &Decomposition) -> Result<bool> {
    let mut union = SubsetMask::EMPTY;
    for &p in &d.parts {
        if !sys.is_closed(p) || !is_irreducible(sys, p)?.is_irreducible() {
            return Ok(false);
        }
        union |= p;
    }
    Ok(union == d.target)
}
