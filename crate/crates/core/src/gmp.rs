//! Decompositions of a ground set into disjoint blocks `A_i`, each with a
//! proper ideal `N_i` of its powerset, such that condition (*) holds:
//! `X` generates `E` exactly when `A_i ∩ X ∉ N_i` for every block.

use crate::closure::ClosureSystem;
use crate::error::{Error, Result};
use crate::irreducible::{decompose, is_irreducible, Strategy};
use crate::mask::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealDescriptor {
    /// Members listed in canonical order.
    Explicit(Vec<SubsetMask>),
    /// `Y ∈ N ⟺ Y ⊆ A ∧ φ(Y) ⊉ reference`.
    Implicit { reference: SubsetMask },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub a: SubsetMask,
    pub ideal: IdealDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmpDecomposition {
    pub blocks: Vec<Block>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealDefect {
    Empty,
    /// A member with a non-member one step below it.
    NotDownwardClosed(SubsetMask),
    NotUnionClosed(SubsetMask, SubsetMask),
    /// The block itself is a member.
    Improper,
    /// A listed member that is not a subset of the block.
    OutsideBlock(SubsetMask),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockDefect {
    pub block: usize,
    pub defect: IdealDefect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmpVerdict {
    pub holds: bool,
    pub subsets_checked: u64,
    /// Least `X ⊆ ⋃A_i` on which condition (*) fails.
    pub counterexample: Option<SubsetMask>,
    pub overlap: Option<(usize, usize)>,
    pub ideal_defects: Vec<BlockDefect>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim1Block {
    pub a: SubsetMask,
    pub closure: SubsetMask,
    pub irreducible: bool,
    /// Least `Y ⊆ A` whose membership disagrees with `φ(Y) ⊉ A`.
    pub mismatch: Option<SubsetMask>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim1Report {
    pub blocks: Vec<Claim1Block>,
}

impl Claim1Report {
    pub fn holds(&self) -> bool {
        self.blocks.iter().all(|b| b.irreducible && b.mismatch.is_none())
    }
}

impl Block {
    pub fn contains(&self, sys: &ClosureSystem, y: SubsetMask) -> bool {
        if !y.is_subset(self.a) {
            return false;
        }
        match &self.ideal {
            IdealDescriptor::Explicit(members) => members.binary_search(&y).is_ok(),
            IdealDescriptor::Implicit { reference } => !reference.is_subset(sys.closure(y)),
        }
    }

    fn defects(&self, sys: &ClosureSystem) -> Vec<IdealDefect> {
        let mut out = Vec::new();
        if let IdealDescriptor::Explicit(members) = &self.ideal {
            if let Some(&y) = members.iter().find(|y| !y.is_subset(self.a)) {
                out.push(IdealDefect::OutsideBlock(y));
            }
        }
        let members: Vec<SubsetMask> = self.a.subsets().filter(|&y| self.contains(sys, y)).collect();
        if members.is_empty() {
            out.push(IdealDefect::Empty);
            return out;
        }
        if let Some(&y) = members
            .iter()
            .find(|&&y| y.iter().any(|e| !self.contains(sys, y.remove(e))))
        {
            out.push(IdealDefect::NotDownwardClosed(y));
        }
        // The running union stays a member until the first failure.
        let mut acc = members[0];
        for &y in &members[1..] {
            if !self.contains(sys, acc | y) {
                out.push(IdealDefect::NotUnionClosed(acc, y));
                break;
            }
            acc |= y;
        }
        if self.contains(sys, self.a) {
            out.push(IdealDefect::Improper);
        }
        out
    }
}

impl GmpDecomposition {
    pub fn union(&self) -> SubsetMask {
        self.blocks.iter().fold(SubsetMask::EMPTY, |acc, b| acc | b.a)
    }

    fn others(&self, i: usize) -> SubsetMask {
        self.blocks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(SubsetMask::EMPTY, |acc, (_, b)| acc | b.a)
    }

    /// Members of every ideal listed explicitly, in canonical order.
    pub fn materialize(&self, sys: &ClosureSystem) -> Result<GmpDecomposition> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            sys.limits().check_subsets(b.a.len())?;
            let members = b.a.subsets().filter(|&y| b.contains(sys, y)).collect();
            blocks.push(Block {
                a: b.a,
                ideal: IdealDescriptor::Explicit(members),
            });
        }
        Ok(GmpDecomposition { blocks })
    }

    /// Parses `A=a N=- | A=b,c N=-;c`; `N=implicit` means the ideal
    /// `{Y ⊆ A : φ(Y) ⊉ A}` and `N=implicit(R)` uses the reference `R`.
    pub fn parse(sys: &ClosureSystem, text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in text.split('|') {
            let bad = || Error::InvalidDecomposition(format!("cannot read block `{}`", part.trim()));
            let mut a = None;
            let mut n = None;
            for field in part.split_whitespace() {
                if let Some(v) = field.strip_prefix("A=") {
                    a = Some(sys.parse_set(v)?);
                } else if let Some(v) = field.strip_prefix("N=") {
                    n = Some(v.to_string());
                } else {
                    return Err(bad());
                }
            }
            let (a, n) = (a.ok_or_else(bad)?, n.ok_or_else(bad)?);
            sys.require_within(a)?;
            let ideal = if n == "implicit" {
                IdealDescriptor::Implicit { reference: a }
            } else if let Some(r) = n.strip_prefix("implicit(").and_then(|r| r.strip_suffix(')')) {
                let reference = sys.parse_set(r)?;
                sys.require_within(reference)?;
                IdealDescriptor::Implicit { reference }
            } else if n.is_empty() {
                IdealDescriptor::Explicit(Vec::new())
            } else {
                let mut members = n.split(';').map(|m| sys.parse_set(m)).collect::<Result<Vec<_>>>()?;
                members.sort();
                members.dedup();
                IdealDescriptor::Explicit(members)
            };
            blocks.push(Block { a, ideal });
        }
        Ok(GmpDecomposition { blocks })
    }

    /// Inverse of [`GmpDecomposition::parse`] for explicit ideals; implicit
    /// ones print as `implicit` together with their reference set.
    pub fn format(&self, sys: &ClosureSystem) -> String {
        let label = |s: SubsetMask| {
            if s.is_empty() {
                "-".to_string()
            } else {
                sys.labels_of(s).join(",")
            }
        };
        self.blocks
            .iter()
            .map(|b| {
                let n = match &b.ideal {
                    IdealDescriptor::Explicit(members) => {
                        members.iter().map(|&m| label(m)).collect::<Vec<_>>().join(";")
                    }
                    IdealDescriptor::Implicit { reference } if *reference == b.a => "implicit".into(),
                    IdealDescriptor::Implicit { reference } => format!("implicit({})", label(*reference)),
                };
                format!("A={} N={}", label(b.a), n)
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

/// Builds the decomposition from a minimum cover of `E` by irreducible
/// closed sets `X_i`: `A_i = X_i ∖ ⋃_{j≠i} X_j` and
/// `N_i = {Y ⊆ A_i : φ(Y) ≠ X_i}`.
pub fn gmp_construct(sys: &ClosureSystem) -> Result<GmpDecomposition> {
    sys.require_topological()?;
    let cover = decompose(sys, sys.full(), Strategy::Min)?.parts;
    let mut blocks = Vec::with_capacity(cover.len());
    for (i, &x) in cover.iter().enumerate() {
        let rest = cover
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(SubsetMask::EMPTY, |acc, (_, &c)| acc | c);
        let a = x - rest;
        let mut block = Block {
            a,
            ideal: IdealDescriptor::Implicit { reference: x },
        };
        if a.len() <= sys.limits().explicit_ideal {
            let members = a.subsets().filter(|&y| block.contains(sys, y)).collect();
            block.ideal = IdealDescriptor::Explicit(members);
        }
        blocks.push(block);
    }
    Ok(GmpDecomposition { blocks })
}

pub fn gmp_verify(sys: &ClosureSystem, d: &GmpDecomposition) -> Result<GmpVerdict> {
    let union = d.union();
    sys.require_within(union)?;
    sys.limits().check_subsets(union.len())?;
    let mut overlap = None;
    'outer: for (i, bi) in d.blocks.iter().enumerate() {
        for (j, bj) in d.blocks.iter().enumerate().skip(i + 1) {
            if !(bi.a & bj.a).is_empty() {
                overlap = Some((i, j));
                break 'outer;
            }
        }
    }
    let mut ideal_defects = Vec::new();
    for (i, b) in d.blocks.iter().enumerate() {
        sys.limits().check_subsets(b.a.len())?;
        ideal_defects.extend(
            b.defects(sys)
                .into_iter()
                .map(|defect| BlockDefect { block: i, defect }),
        );
    }
    let mut subsets_checked = 0;
    let mut counterexample = None;
    for x in union.subsets() {
        subsets_checked += 1;
        let generates = sys.is_generating(x);
        let predicted = d.blocks.iter().all(|b| !b.contains(sys, b.a & x));
        if generates != predicted {
            counterexample = Some(x);
            break;
        }
    }
    Ok(GmpVerdict {
        holds: counterexample.is_none() && overlap.is_none() && ideal_defects.is_empty(),
        subsets_checked,
        counterexample,
        overlap,
        ideal_defects,
    })
}

/// First block meeting the closure of the other blocks.
pub fn eq1_violation(sys: &ClosureSystem, d: &GmpDecomposition) -> Option<usize> {
    (0..d.blocks.len()).find(|&i| !(d.blocks[i].a & sys.closure(d.others(i))).is_empty())
}

/// Shrinks every block to `A_i ∖ φ(⋃_{j≠i} A_j)` and restricts its ideal.
pub fn gmp_normalize(sys: &ClosureSystem, d: &GmpDecomposition) -> Result<GmpDecomposition> {
    if let Some(x) = gmp_verify(sys, d)?.counterexample {
        return Err(Error::ConditionFails(x));
    }
    let blocks: Vec<Block> = d
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let a = b.a - sys.closure(d.others(i));
            let ideal = match &b.ideal {
                IdealDescriptor::Explicit(members) => {
                    IdealDescriptor::Explicit(members.iter().copied().filter(|m| m.is_subset(a)).collect())
                }
                IdealDescriptor::Implicit { reference } => IdealDescriptor::Implicit { reference: *reference },
            };
            Block { a, ideal }
        })
        .collect();
    let normalized = GmpDecomposition { blocks };
    if let Some(x) = gmp_verify(sys, &normalized)?.counterexample {
        return Err(Error::ConditionFails(x));
    }
    Ok(normalized)
}

/// Checks `N_i = {Y ⊆ A_i : φ(Y) ⊉ A_i}` and that `φ(A_i)` is irreducible.
pub fn claim1_check(sys: &ClosureSystem, d: &GmpDecomposition) -> Result<Claim1Report> {
    if let Some(x) = gmp_verify(sys, d)?.counterexample {
        return Err(Error::ConditionFails(x));
    }
    if let Some(i) = eq1_violation(sys, d) {
        return Err(Error::NotNormalized(i));
    }
    let mut blocks = Vec::with_capacity(d.blocks.len());
    for b in &d.blocks {
        sys.limits().check_subsets(b.a.len())?;
        let closure = sys.closure(b.a);
        let mismatch =
            b.a.subsets()
                .find(|&y| b.contains(sys, y) != !b.a.is_subset(sys.closure(y)));
        blocks.push(Claim1Block {
            a: b.a,
            closure,
            irreducible: is_irreducible(sys, closure)?.is_irreducible(),
            mismatch,
        });
    }
    Ok(Claim1Report { blocks })
}

/// `φ(A_i)` for every block, in block order.
pub fn recovered_irreducibles(sys: &ClosureSystem, d: &GmpDecomposition) -> Vec<SubsetMask> {
    d.blocks.iter().map(|b| sys.closure(b.a)).collect()
}
