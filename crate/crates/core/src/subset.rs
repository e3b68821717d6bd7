//! Subsets of the ground set `E = {1, …, n}` as bitmasks.
//!
//! Internally element `i` (1-based, as printed) is bit `i - 1`. All parsing and
//! formatting happens in 1-based form; everything else works on 0-based
//! indices.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Largest supported ground set. Every subset scan is exhaustive, so tables
/// have `2^n` entries.
pub const MAX_GROUND: usize = 20;

/// A subset `X ⊆ {1, …, n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSubset {
    n: u8,
    mask: u32,
}

impl GroundSubset {
    pub fn new(n: usize, mask: u32) -> Result<Self, Error> {
        check_ground(n)?;
        if n < 32 && mask >> n != 0 {
            return Err(Error::InvalidSubset {
                index: 32 - mask.leading_zeros() as usize,
                n,
            });
        }
        Ok(Self { n: n as u8, mask })
    }

    /// Caller guarantees `n <= MAX_GROUND` and `mask < 2^n`.
    pub(crate) fn from_mask(n: usize, mask: u32) -> Self {
        debug_assert!(n <= MAX_GROUND && mask >> n == 0);
        Self { n: n as u8, mask }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_mask(n, 0)
    }

    pub fn full(n: usize) -> Self {
        Self::from_mask(n, full_mask(n))
    }

    /// Builds a subset from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self, Error> {
        check_ground(n)?;
        let mut mask = 0u32;
        for i in indices {
            if i >= n {
                return Err(Error::InvalidSubset { index: i + 1, n });
            }
            mask |= 1 << i;
        }
        Ok(Self::from_mask(n, mask))
    }

    /// Builds a subset from 1-based element labels.
    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self, Error> {
        check_ground(n)?;
        let mut mask = 0u32;
        for e in elements {
            if e == 0 || e > n {
                return Err(Error::InvalidSubset { index: e, n });
            }
            mask |= 1 << (e - 1);
        }
        Ok(Self::from_mask(n, mask))
    }

    /// Parses a comma-separated list of 1-based labels, e.g. `"5,6"`. The
    /// empty string, `-` and `{}` all denote the empty set; surrounding braces
    /// are accepted.
    pub fn parse(n: usize, text: &str) -> Result<Self, Error> {
        let body = text.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() || body == "-" {
            return Self::new(n, 0);
        }
        let mut elements = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            let e: usize = part
                .parse()
                .map_err(|_| Error::MalformedSubset(alloc::string::String::from(part)))?;
            elements.push(e);
        }
        Self::from_elements(n, elements)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Membership of 0-based index `i`.
    pub fn contains(&self, i: usize) -> bool {
        i < self.n() && self.mask >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        debug_assert!(i < self.n());
        Self { mask: self.mask | 1 << i, ..self }
    }

    pub fn without(self, i: usize) -> Self {
        Self { mask: self.mask & !(1 << i), ..self }
    }

    pub fn union(self, other: Self) -> Self {
        Self { mask: self.mask | other.mask, ..self }
    }

    pub fn intersection(self, other: Self) -> Self {
        Self { mask: self.mask & other.mask, ..self }
    }

    pub fn difference(self, other: Self) -> Self {
        Self { mask: self.mask & !other.mask, ..self }
    }

    pub fn complement(self) -> Self {
        Self { mask: !self.mask & full_mask(self.n()), ..self }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.mask & other.mask == 0
    }

    /// 0-based members in increasing order.
    pub fn indices(&self) -> Indices {
        Indices { rest: self.mask }
    }

    /// 1-based members in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone)]
pub struct Indices {
    rest: u32,
}

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            return None;
        }
        let i = self.rest.trailing_zeros() as usize;
        self.rest &= self.rest - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.rest.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Indices {}

pub(crate) fn check_ground(n: usize) -> Result<(), Error> {
    if n > MAX_GROUND {
        Err(Error::GroundTooLarge(n))
    } else {
        Ok(())
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// All subsets of `{1, …, n}` in increasing mask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = GroundSubset> {
    (0..=full_mask(n)).map(move |m| GroundSubset::from_mask(n, m))
}

/// The `k`-subsets of `{1, …, n}` in lexicographic order of their sorted
/// member lists.
pub fn subsets_of_size(n: usize, k: usize) -> SizedSubsets {
    SizedSubsets {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

/// All subsets ordered by size, then lexicographically.
pub fn subsets_by_size(n: usize) -> impl Iterator<Item = GroundSubset> {
    (0..=n).flat_map(move |k| subsets_of_size(n, k))
}

pub struct SizedSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for SizedSubsets {
    type Item = GroundSubset;

    fn next(&mut self) -> Option<GroundSubset> {
        let cur = self.current.as_mut()?;
        let mask = cur.iter().fold(0u32, |m, &i| m | 1 << i);
        let out = GroundSubset::from_mask(self.n, mask);
        // advance to the next combination
        let k = cur.len();
        let mut pos = k;
        while pos > 0 && cur[pos - 1] == self.n - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            self.current = None;
        } else {
            cur[pos - 1] += 1;
            for j in pos..k {
                cur[j] = cur[j - 1] + 1;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_display_round_trip() {
        let s = GroundSubset::parse(9, "5,6").unwrap();
        assert_eq!(s.mask(), 0b110000);
        assert_eq!(s.to_string(), "{5,6}");
        assert_eq!(GroundSubset::parse(9, "{5, 6}").unwrap(), s);
        assert!(GroundSubset::parse(3, "").unwrap().is_empty());
        assert!(GroundSubset::parse(3, "{}").unwrap().is_empty());
    }

    #[test]
    fn parse_rejects_out_of_range_and_garbage() {
        assert_eq!(
            GroundSubset::parse(3, "1,4"),
            Err(Error::InvalidSubset { index: 4, n: 3 })
        );
        assert_eq!(
            GroundSubset::parse(3, "0"),
            Err(Error::InvalidSubset { index: 0, n: 3 })
        );
        assert!(matches!(GroundSubset::parse(3, "1,x"), Err(Error::MalformedSubset(_))));
        assert_eq!(GroundSubset::new(21, 0), Err(Error::GroundTooLarge(21)));
    }

    #[test]
    fn sized_subsets_are_lexicographic() {
        let got: Vec<_> = subsets_of_size(4, 2).map(|s| s.elements()).collect();
        assert_eq!(
            got,
            [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]].map(|a| a.to_vec()).to_vec()
        );
        assert_eq!(subsets_of_size(3, 0).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_by_size(5).count(), 32);
    }

    #[test]
    fn set_algebra() {
        let a = GroundSubset::parse(5, "1,2,3").unwrap();
        let b = GroundSubset::parse(5, "3,4").unwrap();
        assert_eq!(a.union(b).to_string(), "{1,2,3,4}");
        assert_eq!(a.intersection(b).to_string(), "{3}");
        assert_eq!(a.difference(b).to_string(), "{1,2}");
        assert_eq!(a.complement().to_string(), "{4,5}");
        assert!(a.intersection(b).is_subset(&a));
        assert!(!a.is_disjoint(&b));
    }
}
