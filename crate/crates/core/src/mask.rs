//! Fixed-width subsets of a finite ground set.
//!
//! Every set in this crate is a [`SubsetMask`]: bit `i` is set iff the
//! element with id `i` is a member. The canonical order on subsets is the
//! numeric order of the mask, and every search that has to break ties does
//! so in that order.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitOrAssign, Not, Sub};

/// Hard ceiling on the ground size representable by a mask.
pub const MAX_BITS: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_BITS, "ground of size {n} exceeds mask width");
        if n == MAX_BITS {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_BITS);
        SubsetMask(1 << i)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems
            .into_iter()
            .fold(SubsetMask::EMPTY, |m, i| m | SubsetMask::singleton(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_BITS && self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: SubsetMask) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn insert(self, i: usize) -> Self {
        self | SubsetMask::singleton(i)
    }

    pub fn remove(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1 << i))
    }

    /// Least element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Greatest element, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Members in increasing id order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self` in increasing numeric order, starting with the
    /// empty set.
    pub fn subsets(self) -> Submasks {
        Submasks {
            set: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `self` ordered by cardinality, then numerically.
    pub fn subsets_by_size(self) -> SubsetsBySize {
        SubsetsBySize {
            set: self,
            size: 0,
            inner: self.subsets_of_size(0),
        }
    }

    /// All subsets of `self` with exactly `k` members, in increasing numeric
    /// order.
    pub fn subsets_of_size(self, k: usize) -> SizedSubsets {
        let width = self.len();
        SizedSubsets {
            set: self,
            width,
            current: (k <= width).then(|| if k == 0 { 0 } else { (1u64 << k) - 1 }),
        }
    }

    /// Scatters the low bits of `compact` onto the positions of `self`
    /// (parallel bit deposit). Monotone in `compact`.
    pub fn deposit(self, compact: u32) -> SubsetMask {
        let mut out = 0u32;
        let mut src = compact;
        let mut positions = self.0;
        while positions != 0 && src != 0 {
            let low = positions & positions.wrapping_neg();
            if src & 1 == 1 {
                out |= low;
            }
            src >>= 1;
            positions &= positions - 1;
        }
        SubsetMask(out)
    }

    /// Gathers the bits of `sparse` sitting at the positions of `self` into
    /// a compact mask (parallel bit extract). Inverse of [`deposit`](Self::deposit).
    pub fn extract(self, sparse: SubsetMask) -> u32 {
        let mut out = 0u32;
        for (k, i) in self.iter().enumerate() {
            if sparse.contains(i) {
                out |= 1 << k;
            }
        }
        out
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitOrAssign for SubsetMask {
    fn bitor_assign(&mut self, rhs: SubsetMask) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !rhs.0)
    }
}

impl Not for SubsetMask {
    type Output = SubsetMask;
    fn not(self) -> SubsetMask {
        SubsetMask(!self.0)
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SubsetMask::from_elems(iter)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-rippler walk over the subsets of a mask.
pub struct Submasks {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        let following = cur.wrapping_sub(self.set) & self.set;
        self.next = (following != 0).then_some(following);
        Some(SubsetMask(cur))
    }
}

pub struct SizedSubsets {
    set: SubsetMask,
    width: usize,
    current: Option<u64>,
}

impl Iterator for SizedSubsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.current?;
        if cur >> self.width != 0 {
            self.current = None;
            return None;
        }
        // Gosper's hack on the compact index space.
        self.current = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            Some((((ripple ^ cur) >> 2) / low) | ripple)
        };
        Some(self.set.deposit(cur as u32))
    }
}

pub struct SubsetsBySize {
    set: SubsetMask,
    size: usize,
    inner: SizedSubsets,
}

impl Iterator for SubsetsBySize {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        loop {
            if let Some(m) = self.inner.next() {
                return Some(m);
            }
            if self.size >= self.set.len() {
                return None;
            }
            self.size += 1;
            self.inner = self.set.subsets_of_size(self.size);
        }
    }
}
