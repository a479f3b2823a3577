//! Exact combinatorial searches shared by the decomposition and min-max
//! code. Ties are broken canonically so results are reproducible.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// Minimum-cardinality cover of `universe` by `candidates` (which must be
/// in canonical order). Among minimum covers, returns the lexicographically
/// least increasing index sequence. `None` if no cover exists.
pub(crate) fn min_cover(
    universe: SubsetMask,
    candidates: &[SubsetMask],
    node_budget: u64,
) -> Result<Option<Vec<usize>>> {
    let m = candidates.len();
    let mut suffix_union = vec![SubsetMask::EMPTY; m + 1];
    let mut suffix_widest = vec![0usize; m + 1];
    for i in (0..m).rev() {
        suffix_union[i] = suffix_union[i + 1] | (candidates[i] & universe);
        suffix_widest[i] = suffix_widest[i + 1].max((candidates[i] & universe).len());
    }
    if !universe.is_subset(suffix_union[0]) {
        return Ok(None);
    }

    struct Search<'a> {
        universe: SubsetMask,
        candidates: &'a [SubsetMask],
        suffix_union: Vec<SubsetMask>,
        suffix_widest: Vec<usize>,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn dfs(&mut self, start: usize, slots: usize, covered: SubsetMask, picked: &mut Vec<usize>) -> Result<bool> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::LimitExceeded {
                    needed: self.nodes,
                    budget: self.budget,
                });
            }
            let missing = self.universe - covered;
            if missing.is_empty() {
                return Ok(true);
            }
            if slots == 0
                || !missing.is_subset(self.suffix_union[start])
                || self.suffix_widest[start] * slots < missing.len()
            {
                return Ok(false);
            }
            for i in start..self.candidates.len() {
                if !missing.is_subset(self.suffix_union[i]) {
                    break;
                }
                let gain = self.candidates[i] & missing;
                if gain.is_empty() {
                    continue;
                }
                picked.push(i);
                if self.dfs(i + 1, slots - 1, covered | gain, picked)? {
                    return Ok(true);
                }
                picked.pop();
            }
            Ok(false)
        }
    }

    let mut search = Search {
        universe,
        candidates,
        suffix_union,
        suffix_widest,
        nodes: 0,
        budget: node_budget,
    };
    for k in 0..=m {
        let mut picked = Vec::with_capacity(k);
        if search.dfs(0, k, SubsetMask::EMPTY, &mut picked)? {
            return Ok(Some(picked));
        }
    }
    Ok(None)
}

/// Maximum clique of the graph given by neighbourhood masks, least mask
/// among maximum cliques.
pub(crate) fn max_clique(adjacency: &[SubsetMask]) -> SubsetMask {
    fn expand(adj: &[SubsetMask], cur: SubsetMask, cand: SubsetMask, best: &mut SubsetMask) {
        if cur.len() > best.len() || (cur.len() == best.len() && cur < *best) {
            *best = cur;
        }
        if cur.len() + cand.len() < best.len() {
            return;
        }
        for v in cand.iter() {
            let later = cand - SubsetMask::full(v + 1);
            expand(adj, cur.insert(v), later & adj[v], best);
        }
    }
    let mut best = SubsetMask::EMPTY;
    expand(
        adjacency,
        SubsetMask::EMPTY,
        SubsetMask::full(adjacency.len()),
        &mut best,
    );
    best
}
