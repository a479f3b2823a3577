//! Independent, discrete and generating sets.

use crate::closure::ClosureSystem;
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discreteness {
    pub holds: bool,
    /// Least subset of X that is not closed in the induced closure.
    pub non_closed: Option<SubsetMask>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub independent: bool,
    /// Least `x ∈ X` with `x ∈ φ(X ∖ {x})`.
    pub violating: Option<usize>,
    /// Only decided for topological systems.
    pub discrete: Option<Discreteness>,
    pub generating: bool,
}

/// Size-annotated optimum of an exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub set: SubsetMask,
    pub size: usize,
}

#[derive(Debug, Clone)]
pub struct BooleanEmbedding {
    /// `(S', φ(S'))` for every `S' ⊆ X` in canonical order.
    pub images: Vec<(SubsetMask, SubsetMask)>,
    pub verified: bool,
}

pub(crate) fn first_dependent(sys: &ClosureSystem, x: SubsetMask) -> Option<usize> {
    x.iter().find(|&e| sys.closure(x.remove(e)).contains(e))
}

pub fn is_independent(sys: &ClosureSystem, x: SubsetMask) -> bool {
    first_dependent(sys, x).is_none()
}

/// Least subset of `x` that is not a fixpoint of the closure induced on `x`.
pub(crate) fn non_discrete_witness(sys: &ClosureSystem, x: SubsetMask) -> Option<SubsetMask> {
    x.subsets().find(|&y| sys.closure(y) & x != y)
}

pub fn independence_check(sys: &ClosureSystem, x: SubsetMask) -> Result<IndependenceReport> {
    sys.require_within(x)?;
    let violating = first_dependent(sys, x);
    let discrete = if sys.is_topological()? {
        sys.limits().check_subsets(x.len())?;
        let non_closed = non_discrete_witness(sys, x);
        Some(Discreteness {
            holds: non_closed.is_none(),
            non_closed,
        })
    } else {
        None
    };
    Ok(IndependenceReport {
        independent: violating.is_none(),
        violating,
        discrete,
        generating: sys.is_generating(x),
    })
}

fn better(candidate: SubsetMask, best: Certificate) -> bool {
    candidate.len() > best.size || (candidate.len() == best.size && candidate < best.set)
}

/// Largest independent set, least mask among the largest. Branch and bound
/// in id order; only independent prefixes are extended.
pub fn max_independent(sys: &ClosureSystem) -> Result<Certificate> {
    let n = sys.len();
    sys.limits().check_ground(n)?;

    fn walk(sys: &ClosureSystem, next: usize, cur: SubsetMask, best: &mut Certificate) {
        let n = sys.len();
        if cur.len() + (n - next) < best.size {
            return;
        }
        if next == n {
            if better(cur, *best) {
                *best = Certificate {
                    set: cur,
                    size: cur.len(),
                };
            }
            return;
        }
        let with = cur.insert(next);
        if is_independent(sys, with) {
            walk(sys, next + 1, with, best);
        }
        walk(sys, next + 1, cur, best);
    }

    let mut best = Certificate {
        set: SubsetMask::EMPTY,
        size: 0,
    };
    walk(sys, 0, SubsetMask::EMPTY, &mut best);
    debug_assert!(is_independent(sys, best.set));
    if !is_independent(sys, best.set) {
        return Err(Error::NotIndependent(first_dependent(sys, best.set).unwrap_or(0)));
    }
    Ok(best)
}

/// Smallest generating set, least mask among the smallest.
pub fn min_generating(sys: &ClosureSystem) -> Result<Certificate> {
    let n = sys.len();
    sys.limits().check_ground(n)?;
    let full = sys.full();
    for k in 0..=n {
        // Sized subsets come out in increasing mask order.
        if let Some(set) = full.subsets_of_size(k).find(|&x| sys.is_generating(x)) {
            return Ok(Certificate { set, size: k });
        }
    }
    unreachable!("the full set generates")
}

/// Maps every subset of the independent set `x` to its closure and checks
/// that the map is an order embedding.
pub fn boolean_embedding(sys: &ClosureSystem, x: SubsetMask) -> Result<BooleanEmbedding> {
    sys.require_within(x)?;
    if let Some(e) = first_dependent(sys, x) {
        return Err(Error::NotIndependent(e));
    }
    sys.limits().check_subsets(2 * x.len())?;
    let images: Vec<_> = x.subsets().map(|s| (s, sys.closure(s))).collect();
    let verified = images
        .iter()
        .all(|&(s, cs)| images.iter().all(|&(t, ct)| s.is_subset(t) == cs.is_subset(ct)));
    Ok(BooleanEmbedding { images, verified })
}
