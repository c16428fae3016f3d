//! Finite sets of non-negative integers and the power-set lattice of a ground set.
//!
//! Sets are fixed-width bit vectors indexed by element value, so a sumset is a
//! shifted-OR accumulation: one word operation per element of the smaller side.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Largest element an [`IntSet`] can hold. Labels are bounded by
/// [`Limits::max_element`] (at most 63), so the sum of two labels always fits.
pub const MAX_REPRESENTABLE: u32 = 127;

/// Hard upper bound on [`Limits::max_element`].
pub const MAX_LABEL_ELEMENT: u32 = 63;

/// Hard upper bound on [`Limits::max_ground_size`]; beyond this the sumset
/// table over `P(X)` stops being desk-sized.
pub const MAX_GROUND_CAP: usize = 10;

/// A finite set of non-negative integers, each at most [`MAX_REPRESENTABLE`].
///
/// The derived order is the canonical one used throughout the crate: by
/// cardinality first, then lexicographically on the sorted elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IntSet(u128);

impl IntSet {
    pub const EMPTY: IntSet = IntSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        IntSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(x: u32) -> Result<Self, Error> {
        check_representable(x)?;
        Ok(IntSet(1u128 << x))
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Result<Self, Error> {
        let mut bits = 0u128;
        for x in elements {
            check_representable(x)?;
            bits |= 1u128 << x;
        }
        Ok(IntSet(bits))
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn range(n: u32) -> Result<Self, Error> {
        Self::from_elements(0..n)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: u32) -> bool {
        x <= MAX_REPRESENTABLE && self.0 >> x & 1 == 1
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    pub fn is_subset(self, other: IntSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: IntSet) -> IntSet {
        IntSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IntSet) -> IntSet {
        IntSet(self.0 & other.0)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// The set `{0}`.
    pub const fn zero() -> IntSet {
        IntSet(1)
    }

    pub fn is_zero_singleton(self) -> bool {
        self.0 == 1
    }
}

fn check_representable(x: u32) -> Result<(), Error> {
    if x > MAX_REPRESENTABLE {
        return Err(Error::ElementOutOfRange {
            element: x,
            bound: MAX_REPRESENTABLE,
        });
    }
    Ok(())
}

/// Iterator over the elements of an [`IntSet`], smallest first.
#[derive(Clone)]
pub struct Elements(u128);

impl Iterator for Elements {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for IntSet {
    type Item = u32;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl Ord for IntSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for IntSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"{0,1,3}"`, `"0, 1, 3"`, `"{}"` or `"∅"`. Duplicates are rejected.
impl FromStr for IntSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let invalid = || Error::InvalidSetLiteral(s.to_string());
        let t = s.trim();
        if t == "∅" {
            return Ok(IntSet::EMPTY);
        }
        let inner = match (t.strip_prefix('{'), t.ends_with('}')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => t,
            _ => return Err(invalid()),
        };
        if inner.trim().is_empty() {
            return if t.starts_with('{') {
                Ok(IntSet::EMPTY)
            } else {
                Err(invalid())
            };
        }
        let mut set = IntSet::EMPTY;
        for part in inner.split(',') {
            let x: u32 = part.trim().parse().map_err(|_| invalid())?;
            check_representable(x)?;
            if set.contains(x) {
                return Err(invalid());
            }
            set.0 |= 1u128 << x;
        }
        Ok(set)
    }
}

/// `{a + b : a ∈ A, b ∈ B}`.
///
/// Both operands must be non-empty; the result must stay within
/// [`MAX_REPRESENTABLE`].
pub fn sumset(a: IntSet, b: IntSet) -> Result<IntSet, Error> {
    let (Some(ma), Some(mb)) = (a.max(), b.max()) else {
        return Err(Error::EmptyOperand);
    };
    if ma + mb > MAX_REPRESENTABLE {
        return Err(Error::ElementOutOfRange {
            element: ma + mb,
            bound: MAX_REPRESENTABLE,
        });
    }
    Ok(sumset_unchecked(a, b))
}

/// Shifted-OR sumset without the range check; callers guarantee
/// `max(a) + max(b) <= MAX_REPRESENTABLE`.
#[inline]
pub(crate) fn sumset_unchecked(a: IntSet, b: IntSet) -> IntSet {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc = 0u128;
    for x in small.iter() {
        acc |= large.0 << x;
    }
    IntSet(acc)
}

/// Bounds for ground sets and labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible element of a ground set (at most [`MAX_LABEL_ELEMENT`]).
    pub max_element: u32,
    /// Largest admissible `|X|` (at most [`MAX_GROUND_CAP`]).
    pub max_ground_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_element: 63,
            max_ground_size: 5,
        }
    }
}

/// The ground set `X`: contains 0, and its power set supplies every label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    base: IntSet,
}

impl GroundSet {
    pub fn new(base: IntSet) -> Result<Self, Error> {
        Self::with_limits(base, Limits::default())
    }

    pub fn with_limits(base: IntSet, limits: Limits) -> Result<Self, Error> {
        let bound = limits.max_element.min(MAX_LABEL_ELEMENT);
        let cap = limits.max_ground_size.min(MAX_GROUND_CAP);
        if let Some(m) = base.max().filter(|&m| m > bound) {
            return Err(Error::ElementOutOfRange { element: m, bound });
        }
        if !base.contains(0) {
            return Err(Error::MissingZero);
        }
        if base.len() > cap {
            return Err(Error::GroundSetTooLarge {
                size: base.len(),
                cap,
            });
        }
        Ok(GroundSet { base })
    }

    pub fn base(self) -> IntSet {
        self.base
    }

    /// `|X|`.
    pub fn size(self) -> usize {
        self.base.len()
    }

    /// `max(X)`.
    pub fn max_element(self) -> u32 {
        self.base.max().unwrap_or(0)
    }

    /// `2^|X| - 2`, the number of edge labels an IASGL must produce.
    pub fn graceful_edge_count(self) -> usize {
        (1usize << self.size()) - 2
    }

    pub(crate) fn require_size_at_most(self, cap: usize, what: &'static str) -> Result<(), Error> {
        if self.size() > cap {
            return Err(Error::Infeasible {
                what,
                requested: self.size(),
                cap,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.base, f)
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet({})", self.base)
    }
}

impl FromStr for GroundSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        GroundSet::new(s.parse()?)
    }
}

/// All non-empty subsets of `X` in canonical order (cardinality, then
/// lexicographic).
pub fn all_nonempty_subsets(x: GroundSet) -> Vec<IntSet> {
    PowerSet::new(x).subsets().to_vec()
}

/// Every unordered pair `(A, B)` of non-empty subsets of `X` with `A + B = c`,
/// trivial pairs included. Pairs are listed with `A <= B` in canonical order.
pub fn summand_decompositions(c: IntSet, x: GroundSet) -> Result<Vec<(IntSet, IntSet)>, Error> {
    if c.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let power = PowerSet::new(x);
    let Some(target) = power.index_of(c) else {
        return Err(Error::NotASubset {
            set: c,
            ground: x.base(),
        });
    };
    let mut out = Vec::new();
    for i in 0..power.len() {
        for j in i..power.len() {
            if power.sum_index(i, j) == Some(target) {
                out.push((power.subset(i), power.subset(j)));
            }
        }
    }
    Ok(out)
}

/// The non-empty subsets of a ground set, indexed in canonical order, with the
/// sumset table restricted to results that stay inside `X`.
///
/// Index 0 is always `{0}`.
#[derive(Clone)]
pub struct PowerSet {
    ground: GroundSet,
    subsets: Vec<IntSet>,
    // canonical index by local mask (bit j = j-th smallest element of X)
    by_local: Vec<u16>,
    // m * m, u16::MAX where the sumset leaves X
    sums: Vec<u16>,
}

const OUTSIDE: u16 = u16::MAX;

impl PowerSet {
    pub fn new(ground: GroundSet) -> Self {
        let elements = ground.base().to_vec();
        let n = elements.len();
        let full = 1usize << n;
        let mut subsets: Vec<(IntSet, usize)> = (1..full)
            .map(|local| {
                let mut bits = 0u128;
                for (j, &e) in elements.iter().enumerate() {
                    if local >> j & 1 == 1 {
                        bits |= 1u128 << e;
                    }
                }
                (IntSet(bits), local)
            })
            .collect();
        subsets.sort();
        let mut by_local = alloc::vec![OUTSIDE; full];
        for (idx, &(_, local)) in subsets.iter().enumerate() {
            by_local[local] = idx as u16;
        }
        let subsets: Vec<IntSet> = subsets.into_iter().map(|(s, _)| s).collect();
        let m = subsets.len();
        let mut power = PowerSet {
            ground,
            subsets,
            by_local,
            sums: alloc::vec![OUTSIDE; m * m],
        };
        for i in 0..m {
            for j in i..m {
                let s = sumset_unchecked(power.subsets[i], power.subsets[j]);
                let idx = power.index_of(s).map_or(OUTSIDE, |k| k as u16);
                power.sums[i * m + j] = idx;
                power.sums[j * m + i] = idx;
            }
        }
        power
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// `2^|X| - 1`.
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[IntSet] {
        &self.subsets
    }

    pub fn subset(&self, index: usize) -> IntSet {
        self.subsets[index]
    }

    /// Canonical index of `s`, or `None` when `s` is empty or not inside `X`.
    pub fn index_of(&self, s: IntSet) -> Option<usize> {
        let base = self.ground.base();
        if s.is_empty() || !s.is_subset(base) {
            return None;
        }
        let mut local = 0usize;
        for e in s.iter() {
            let below = base.bits() & ((1u128 << e) - 1);
            local |= 1 << below.count_ones();
        }
        Some(self.by_local[local] as usize)
    }

    /// Index of `subset(i) + subset(j)` when that sumset is a subset of `X`.
    #[inline]
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.sums[i * self.subsets.len() + j];
        (v != OUTSIDE).then_some(v as usize)
    }

    /// Index of `X` itself.
    pub fn full_index(&self) -> usize {
        self.subsets.len() - 1
    }
}
