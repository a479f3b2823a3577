//! End-to-end verification pipelines over a single system. Each pipeline
//! returns a list of named checks; failing checks carry a witness set.

use std::time::{Duration, Instant};

use crate::closure::{ClosureSystem, IntersectionDefect};
use crate::error::{Error, Result};
use crate::gmp::{claim1_check, eq1_violation, gmp_construct, gmp_normalize, gmp_verify, recovered_irreducibles};
use crate::independence::non_discrete_witness;
use crate::irreducible::{decompose, is_irreducible, validate_decomposition, Strategy};
use crate::mask::SubsetMask;
use crate::order::longest_chain;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<SubsetMask>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HarnessReport {
    pub checks: Vec<Check>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn run(&mut self, name: &str, body: impl FnOnce() -> Result<(String, Option<SubsetMask>)>) -> Result<()> {
        let start = Instant::now();
        let (detail, witness) = body()?;
        self.checks.push(Check {
            name: name.to_string(),
            passed: witness.is_none(),
            detail,
            witness,
            elapsed: start.elapsed(),
        });
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseSubset {
    pub set: SubsetMask,
    /// Members in the longest strictly descending chain of closed sets of
    /// the space induced on `set`.
    pub longest_chain: usize,
}

/// The canonical minimal cofinal subset of the specialization order on `c`,
/// which is dense in `c`.
pub fn construct_dense_noetherian(sys: &ClosureSystem, c: SubsetMask) -> Result<DenseSubset> {
    sys.require_topological()?;
    sys.require_closed(c)?;
    let (order, ids) = sys.specialization().restrict(c);
    let set: SubsetMask = order.well_founded_cofinal().iter().map(|i| ids[i]).collect();
    let induced = sys.induce(set);
    let longest_chain = longest_chain(&induced.closed_family()?);
    Ok(DenseSubset { set, longest_chain })
}

fn count(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn first_failing<T>(
    items: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> Result<Option<SubsetMask>>,
) -> Result<(usize, Option<SubsetMask>)> {
    let mut seen = 0;
    for item in items {
        seen += 1;
        if let Some(w) = check(&item)? {
            return Ok((seen, Some(w)));
        }
    }
    Ok((seen, None))
}

/// On every closed set: a verified minimum irreducible decomposition and a
/// dense subset; on every discrete set `X`: `|X|` is at most the number of
/// components of `φ(X)`.
pub fn verify_theorem_main(sys: &ClosureSystem) -> Result<HarnessReport> {
    sys.require_topological()?;
    let closed = sys.closed_family()?;
    let mut report = HarnessReport::default();

    report.run("decompose", || {
        let (n, w) = first_failing(closed.iter().copied(), |&c| {
            let d = decompose(sys, c, Strategy::Min)?;
            Ok((!validate_decomposition(sys, &d)?).then_some(c))
        })?;
        Ok((count(n, "closed set"), w))
    })?;

    report.run("dense", || {
        let (n, w) = first_failing(closed.iter().copied(), |&c| {
            let d = construct_dense_noetherian(sys, c)?;
            let dense = d.set.is_subset(c) && c.is_subset(sys.closure(d.set));
            Ok((!dense).then_some(c))
        })?;
        Ok((count(n, "closed set"), w))
    })?;

    report.run("discrete-bound", || {
        let mut discrete = 0usize;
        for x in sys.full().subsets() {
            sys.limits().check_subsets(x.len())?;
            if non_discrete_witness(sys, x).is_some() {
                continue;
            }
            discrete += 1;
            let components = decompose(sys, sys.closure(x), Strategy::Components)?.parts.len();
            if x.len() > components {
                return Ok((format!("{} > {components}", x.len()), Some(x)));
            }
        }
        Ok((count(discrete, "discrete set"), None))
    })?;

    Ok(report)
}

/// Builds the block decomposition, verifies condition (*), normalizes,
/// checks the ideal characterization and recovers the irreducible cover.
pub fn verify_prop_topo(sys: &ClosureSystem) -> Result<HarnessReport> {
    sys.require_topological()?;
    let mut report = HarnessReport::default();
    let d = gmp_construct(sys)?;
    let min_parts = decompose(sys, sys.full(), Strategy::Min)?.parts.len();

    report.run("gmp-construct", || {
        let detail = count(d.blocks.len(), "block");
        Ok((detail, (d.blocks.len() != min_parts).then_some(sys.full())))
    })?;

    report.run("gmp-verify", || {
        let v = gmp_verify(sys, &d)?;
        let witness = if v.holds {
            None
        } else {
            Some(v.counterexample.unwrap_or_else(|| d.union()))
        };
        Ok((count(v.subsets_checked as usize, "subset"), witness))
    })?;
    if !report.passed() {
        return Ok(report);
    }

    report.run("eq1", || {
        let w = eq1_violation(sys, &d).map(|i| d.blocks[i].a);
        Ok(("blocks avoid the closure of the others".into(), w))
    })?;

    report.run("normalize", || {
        let n = gmp_normalize(sys, &d)?;
        let again = gmp_normalize(sys, &n)?;
        let stable = again == n && gmp_verify(sys, &n)?.counterexample.is_none();
        Ok(("idempotent, preserves (*)".into(), (!stable).then_some(n.union())))
    })?;

    report.run("claim1", || {
        let n = gmp_normalize(sys, &d)?;
        let r = match claim1_check(sys, &n) {
            Ok(r) => r,
            Err(Error::NotNormalized(i)) => return Ok(("not normalized".into(), Some(n.blocks[i].a))),
            Err(e) => return Err(e),
        };
        let w = r
            .blocks
            .iter()
            .find(|b| !b.irreducible || b.mismatch.is_some())
            .map(|b| b.mismatch.unwrap_or(b.a));
        Ok((count(r.blocks.len(), "block"), w))
    })?;

    report.run("recover", || {
        let parts = recovered_irreducibles(sys, &d);
        let union = parts.iter().fold(SubsetMask::EMPTY, |acc, &p| acc | p);
        if union != sys.full() {
            return Ok(("cover is incomplete".into(), Some(sys.full() - union)));
        }
        for &p in &parts {
            if !is_irreducible(sys, p)?.is_irreducible() {
                return Ok(("reducible part".into(), Some(p)));
            }
        }
        let rendered: Vec<_> = parts.iter().map(|&p| sys.format_set(p)).collect();
        Ok((rendered.join(" "), None))
    })?;

    Ok(report)
}

/// Closure axioms, then both pipelines when the system is topological.
pub fn run_all(sys: &ClosureSystem) -> Result<HarnessReport> {
    let mut report = HarnessReport::default();
    let axioms = sys.axiom_report()?;
    report.run("axioms", || {
        let witness = axioms
            .extensive
            .or(axioms.monotone.map(|p| p.0))
            .or(axioms.idempotent)
            .or(match axioms.intersection_closed {
                Some(IntersectionDefect::MissingFullSet) => Some(sys.full()),
                Some(IntersectionDefect::MissingMeet(a, b)) => Some(a & b),
                None => None,
            });
        Ok(("closure axioms and intersections".into(), witness))
    })?;
    if !report.passed() || !axioms.is_topological() {
        return Ok(report);
    }
    report.checks.extend(verify_theorem_main(sys)?.checks);
    report.checks.extend(verify_prop_topo(sys)?.checks);
    Ok(report)
}
