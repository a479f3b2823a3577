//! Finite closure systems and their closure operators.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::mask::SubsetMask;
use crate::order::QuasiOrder;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem {
    pub id: usize,
    pub label: String,
}

/// Horn rule `premise -> conclusion`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub premise: SubsetMask,
    pub conclusion: usize,
}

/// How a non-intersection-closed Moore family is treated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Completion {
    /// Refuse it.
    #[default]
    Reject,
    /// Add the full set and close under pairwise intersection.
    Complete,
    /// Store it verbatim. The operator is still a closure (of the
    /// completion); [`ClosureSystem::axiom_report`] flags the defect.
    Keep,
}

#[derive(Debug, Clone)]
pub enum Representation {
    MooreFamily(Vec<SubsetMask>),
    ImplicationBase(Vec<Rule>),
    AlexandroffOf(QuasiOrder),
    /// Ground = all subsets of `{0..n-1}`; element id equals the inner
    /// subset's mask.
    PowersetUnion(usize),
    /// Restriction `X ↦ φ(X) ∩ E'` of a parent system.
    Induced(Box<Induced>),
}

#[derive(Debug, Clone)]
pub struct Induced {
    pub parent: ClosureSystem,
    /// `E'` in parent ids.
    pub embedding: SubsetMask,
}

#[derive(Debug, Clone)]
pub enum IntersectionDefect {
    MissingFullSet,
    MissingMeet(SubsetMask, SubsetMask),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyDefect {
    /// φ(∅) is the given nonempty set.
    EmptyNotClosed(SubsetMask),
    /// φ(A ∪ B) ≠ φ(A) ∪ φ(B).
    UnionNotPreserved(SubsetMask, SubsetMask),
}

/// Outcome of the exhaustive axiom check. Each field is `None` when the
/// property holds and carries a counterexample otherwise.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub extensive: Option<SubsetMask>,
    /// A pair `X ⊆ Y` with `φ(X) ⊄ φ(Y)`.
    pub monotone: Option<(SubsetMask, SubsetMask)>,
    pub idempotent: Option<SubsetMask>,
    pub intersection_closed: Option<IntersectionDefect>,
    pub topological: Option<TopologyDefect>,
}

impl AxiomReport {
    /// Extensive, monotone, idempotent and intersection-closed.
    pub fn is_closure_system(&self) -> bool {
        self.extensive.is_none()
            && self.monotone.is_none()
            && self.idempotent.is_none()
            && self.intersection_closed.is_none()
    }

    pub fn is_topological(&self) -> bool {
        self.topological.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct ClosureSystem {
    ground: Vec<Elem>,
    repr: Representation,
    limits: Limits,
    topological: OnceLock<bool>,
}

pub(crate) fn validate_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for label in labels {
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::InvalidLabel(label.clone()));
        }
        if !seen.insert(label.as_str()) {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    Ok(())
}

fn check_within(n: usize, set: SubsetMask) -> Result<()> {
    if set.is_subset(SubsetMask::full(n)) {
        Ok(())
    } else {
        Err(Error::OutOfGround(set))
    }
}

impl ClosureSystem {
    fn assemble(labels: Vec<String>, repr: Representation, limits: Limits) -> Result<Self> {
        validate_labels(&labels)?;
        limits.check_ground(labels.len())?;
        let ground = labels
            .into_iter()
            .enumerate()
            .map(|(id, label)| Elem { id, label })
            .collect();
        Ok(ClosureSystem {
            ground,
            repr,
            limits,
            topological: OnceLock::new(),
        })
    }

    pub fn moore(labels: Vec<String>, family: Vec<SubsetMask>, completion: Completion) -> Result<Self> {
        Self::moore_with_limits(labels, family, completion, Limits::default())
    }

    pub(crate) fn moore_with_limits(
        labels: Vec<String>,
        family: Vec<SubsetMask>,
        completion: Completion,
        limits: Limits,
    ) -> Result<Self> {
        let n = labels.len();
        limits.check_ground(n)?;
        let full = SubsetMask::full(n);
        for &c in &family {
            check_within(n, c)?;
        }
        let mut sets: BTreeSet<SubsetMask> = family.into_iter().collect();
        match completion {
            Completion::Reject => {
                if !sets.contains(&full) {
                    return Err(Error::MissingFullSet);
                }
                if let Some((a, b)) = missing_meet(&sets) {
                    return Err(Error::NotIntersectionClosed { a, b });
                }
            }
            Completion::Complete => {
                sets.insert(full);
                while let Some((a, b)) = missing_meet(&sets) {
                    sets.insert(a & b);
                }
            }
            Completion::Keep => {}
        }
        Self::assemble(labels, Representation::MooreFamily(sets.into_iter().collect()), limits)
    }

    pub fn implications(labels: Vec<String>, rules: Vec<Rule>) -> Result<Self> {
        Self::implications_with_limits(labels, rules, Limits::default())
    }

    pub(crate) fn implications_with_limits(labels: Vec<String>, rules: Vec<Rule>, limits: Limits) -> Result<Self> {
        let n = labels.len();
        limits.check_ground(n)?;
        for r in &rules {
            check_within(n, r.premise)?;
            if r.conclusion >= n {
                return Err(Error::OutOfGround(SubsetMask::singleton(r.conclusion)));
            }
        }
        Self::assemble(labels, Representation::ImplicationBase(rules), limits)
    }

    pub fn alexandroff(labels: Vec<String>, order: QuasiOrder) -> Result<Self> {
        Self::alexandroff_with_limits(labels, order, Limits::default())
    }

    pub(crate) fn alexandroff_with_limits(labels: Vec<String>, order: QuasiOrder, limits: Limits) -> Result<Self> {
        if labels.len() != order.len() {
            return Err(Error::NotQuasiOrder(format!(
                "{} labels for an order on {} elements",
                labels.len(),
                order.len()
            )));
        }
        Self::assemble(labels, Representation::AlexandroffOf(order), limits)
    }

    /// Alexandroff system with generated labels `e0, e1, ..`.
    pub fn alexandroff_unlabeled(order: QuasiOrder) -> Result<Self> {
        let labels = (0..order.len()).map(|i| format!("e{i}")).collect();
        Self::alexandroff(labels, order)
    }

    /// The system `φ(𝒜) = P(⋃𝒜)` on all subsets of an `inner`-element set.
    pub fn powerset_union(inner: usize) -> Result<Self> {
        Self::powerset_union_with_limits(inner, Limits::default())
    }

    pub(crate) fn powerset_union_with_limits(inner: usize, limits: Limits) -> Result<Self> {
        if inner > limits.max_powerset_inner {
            return Err(Error::GroundTooLarge {
                size: inner,
                max: limits.max_powerset_inner,
            });
        }
        let labels = (0..1usize << inner)
            .map(|a| {
                let digits: String = SubsetMask::from_bits(a as u32)
                    .iter()
                    .map(|d| char::from_digit(d as u32, 10).expect("inner universe below 10"))
                    .collect();
                format!("p{digits}")
            })
            .collect();
        Self::assemble(labels, Representation::PowersetUnion(inner), limits)
    }

    pub fn with_limits(mut self, limits: Limits) -> Result<Self> {
        limits.check_ground(self.len())?;
        self.limits = limits;
        Ok(self)
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn representation(&self) -> &Representation {
        &self.repr
    }

    pub fn ground(&self) -> &[Elem] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn label(&self, id: usize) -> &str {
        &self.ground[id].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.ground.iter().position(|e| e.label == label)
    }

    pub fn labels_of(&self, set: SubsetMask) -> Vec<String> {
        set.iter().map(|i| self.label(i).to_string()).collect()
    }

    /// `{a,c}` style rendering, `{}` for the empty set.
    pub fn format_set(&self, set: SubsetMask) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    /// Parses a comma-separated label list; `-` denotes the empty set.
    pub fn parse_set(&self, text: &str) -> Result<SubsetMask> {
        let text = text.trim();
        if text == "-" || text.is_empty() {
            return Ok(SubsetMask::EMPTY);
        }
        text.split(',')
            .map(|l| {
                let l = l.trim();
                self.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(SubsetMask::from_elems)
    }

    /// φ(X). Panics if `x` leaves the ground set.
    pub fn closure(&self, x: SubsetMask) -> SubsetMask {
        assert!(
            x.is_subset(self.full()),
            "{x:?} is not within a ground of size {}",
            self.len()
        );
        match &self.repr {
            Representation::MooreFamily(family) => family
                .iter()
                .filter(|c| x.is_subset(**c))
                .fold(self.full(), |acc, &c| acc & c),
            Representation::ImplicationBase(rules) => {
                let mut cur = x;
                loop {
                    let before = cur;
                    for r in rules {
                        if r.premise.is_subset(cur) {
                            cur = cur.insert(r.conclusion);
                        }
                    }
                    if cur == before {
                        return cur;
                    }
                }
            }
            Representation::AlexandroffOf(order) => order.down_set(x),
            Representation::PowersetUnion(_) => {
                let union = x
                    .iter()
                    .fold(SubsetMask::EMPTY, |acc, a| acc | SubsetMask::from_bits(a as u32));
                union
                    .subsets()
                    .map(|a| SubsetMask::singleton(a.bits() as usize))
                    .fold(SubsetMask::EMPTY, |acc, s| acc | s)
            }
            Representation::Induced(induced) => {
                let emb = induced.embedding;
                let lifted = emb.deposit(x.bits());
                let image = induced.parent.closure(lifted) & emb;
                SubsetMask::from_bits(emb.extract(image))
            }
        }
    }

    pub fn is_closed(&self, x: SubsetMask) -> bool {
        self.closure(x) == x
    }

    pub fn is_generating(&self, x: SubsetMask) -> bool {
        self.closure(x) == self.full()
    }

    pub(crate) fn require_closed(&self, c: SubsetMask) -> Result<()> {
        check_within(self.len(), c)?;
        if self.is_closed(c) {
            Ok(())
        } else {
            Err(Error::NotClosed(c))
        }
    }

    pub(crate) fn require_within(&self, x: SubsetMask) -> Result<()> {
        check_within(self.len(), x)
    }

    /// All closed sets in canonical order, collected as the image of φ.
    pub fn closed_family(&self) -> Result<Vec<SubsetMask>> {
        self.limits.check_subsets(self.len())?;
        let images: BTreeSet<SubsetMask> = self.full().subsets().map(|x| self.closure(x)).collect();
        Ok(images.into_iter().collect())
    }

    /// Closed subsets of the closed set `c`, in canonical order.
    pub fn closed_subsets_of(&self, c: SubsetMask) -> Result<Vec<SubsetMask>> {
        self.require_closed(c)?;
        self.limits.check_subsets(c.len())?;
        let images: BTreeSet<SubsetMask> = c.subsets().map(|y| self.closure(y)).collect();
        Ok(images.into_iter().collect())
    }

    pub fn axiom_report(&self) -> Result<AxiomReport> {
        self.limits.check_subsets(self.len())?;
        let full = self.full();
        let mut extensive = None;
        let mut idempotent = None;
        let mut monotone = None;
        for x in full.subsets() {
            let cx = self.closure(x);
            if extensive.is_none() && !x.is_subset(cx) {
                extensive = Some(x);
            }
            if idempotent.is_none() && self.closure(cx) != cx {
                idempotent = Some(x);
            }
            if monotone.is_none() {
                // Single-element steps suffice: ⊆ is their transitive closure.
                for e in (full - x).iter() {
                    let y = x.insert(e);
                    if !cx.is_subset(self.closure(y)) {
                        monotone = Some((x, y));
                        break;
                    }
                }
            }
        }
        let intersection_closed = match &self.repr {
            Representation::MooreFamily(family) => {
                let sets: BTreeSet<SubsetMask> = family.iter().copied().collect();
                if !sets.contains(&full) {
                    Some(IntersectionDefect::MissingFullSet)
                } else {
                    missing_meet(&sets).map(|(a, b)| IntersectionDefect::MissingMeet(a, b))
                }
            }
            _ => {
                let sets: BTreeSet<SubsetMask> = self.closed_family()?.into_iter().collect();
                if !sets.contains(&full) {
                    Some(IntersectionDefect::MissingFullSet)
                } else {
                    missing_meet(&sets).map(|(a, b)| IntersectionDefect::MissingMeet(a, b))
                }
            }
        };
        let topological = self.topology_defect();
        let _ = self.topological.set(topological.is_none());
        Ok(AxiomReport {
            extensive,
            monotone,
            idempotent,
            intersection_closed,
            topological,
        })
    }

    /// φ(∅) = ∅ and φ(X) = ⋃_{x∈X} φ({x}) for all X; the least failing X
    /// yields the pair `(X ∖ {max X}, {max X})`.
    fn topology_defect(&self) -> Option<TopologyDefect> {
        let bottom = self.closure(SubsetMask::EMPTY);
        if !bottom.is_empty() {
            return Some(TopologyDefect::EmptyNotClosed(bottom));
        }
        let points: Vec<SubsetMask> = (0..self.len())
            .map(|i| self.closure(SubsetMask::singleton(i)))
            .collect();
        self.full().subsets().find_map(|x| {
            let joined = x.iter().fold(SubsetMask::EMPTY, |acc, i| acc | points[i]);
            (joined != self.closure(x)).then(|| {
                let top = x.last().expect("nonempty");
                TopologyDefect::UnionNotPreserved(x.remove(top), SubsetMask::singleton(top))
            })
        })
    }

    /// Whether φ preserves finite unions. Cached after the first call.
    pub fn is_topological(&self) -> Result<bool> {
        if let Some(&t) = self.topological.get() {
            return Ok(t);
        }
        self.limits.check_subsets(self.len())?;
        let t = self.topology_defect().is_none();
        let _ = self.topological.set(t);
        Ok(t)
    }

    pub(crate) fn require_topological(&self) -> Result<()> {
        if self.is_topological()? {
            Ok(())
        } else {
            Err(Error::NotTopological)
        }
    }

    /// The system induced on `sub`, relabelled by increasing parent id.
    pub fn induce(&self, sub: SubsetMask) -> ClosureSystem {
        assert!(sub.is_subset(self.full()), "{sub:?} is not within the ground");
        let ground = sub
            .iter()
            .enumerate()
            .map(|(id, parent)| Elem {
                id,
                label: self.ground[parent].label.clone(),
            })
            .collect();
        ClosureSystem {
            ground,
            repr: Representation::Induced(Box::new(Induced {
                parent: self.clone(),
                embedding: sub,
            })),
            limits: self.limits,
            topological: OnceLock::new(),
        }
    }

    /// `x ≤ y ⟺ x ∈ φ({y})`.
    pub fn specialization(&self) -> QuasiOrder {
        let down = (0..self.len())
            .map(|y| self.closure(SubsetMask::singleton(y)))
            .collect();
        QuasiOrder::from_down_sets(down).expect("closure operators induce quasi-orders")
    }
}

/// First pair (in canonical order) whose intersection is missing.
fn missing_meet(sets: &BTreeSet<SubsetMask>) -> Option<(SubsetMask, SubsetMask)> {
    let list: Vec<_> = sets.iter().copied().collect();
    for (i, &a) in list.iter().enumerate() {
        for &b in &list[i + 1..] {
            if !sets.contains(&(a & b)) {
                return Some((a, b));
            }
        }
    }
    None
}
