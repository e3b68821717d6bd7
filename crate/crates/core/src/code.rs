//! Block codes over a finite alphabet: puncturing, shortening, supports and
//! the rank function `r(X) = log_q |C_X|` of an almost affine code.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::rank::RankFunction;
use crate::subset::{self, GroundSubset};

/// Code symbols are the integers `0..q`.
pub type Symbol = u8;

/// The alphabet `A = {0, …, q-1}`. Structured alphabets such as `F_3^2` are
/// flattened to integers by the caller.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet(u16);

impl Alphabet {
    pub fn new(q: usize) -> Result<Self> {
        if (2..=256).contains(&q) {
            Ok(Self(q as u16))
        } else {
            Err(Error::InvalidAlphabet(q))
        }
    }

    pub fn size(&self) -> usize {
        self.0 as usize
    }

    pub(crate) fn check_word(&self, word: &[Symbol]) -> Result<()> {
        match word.iter().position(|&s| s as usize >= self.size()) {
            Some(i) => Err(Error::SymbolOutOfRange {
                symbol: word[i] as usize,
                coordinate: i + 1,
                q: self.size(),
            }),
            None => Ok(()),
        }
    }
}

/// `log_q(value)` when `value` is an exact power of `q`.
pub fn exact_log(q: usize, mut value: usize) -> Option<u32> {
    if value == 0 {
        return None;
    }
    let mut k = 0;
    while value > 1 {
        if value % q != 0 {
            return None;
        }
        value /= q;
        k += 1;
    }
    Some(k)
}

/// `q^e` if it fits in a `u64`.
pub(crate) fn radix_pow(q: usize, e: usize) -> Option<u64> {
    (q as u64).checked_pow(e as u32)
}

/// A nonempty set of distinct words of length `n`, stored flat in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BlockCode {
    alphabet: Alphabet,
    n: usize,
    size: usize,
    words: Vec<Symbol>,
}

impl BlockCode {
    /// Builds a code from its words, sorting them. Duplicates are an error.
    pub fn from_words<I, W>(alphabet: Alphabet, n: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = W>,
        W: AsRef<[Symbol]>,
    {
        subset::check_ground(n)?;
        let mut flat = Vec::new();
        let mut size = 0;
        for w in words {
            let w = w.as_ref();
            if w.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: w.len() });
            }
            alphabet.check_word(w)?;
            flat.extend_from_slice(w);
            size += 1;
        }
        Self::assemble(alphabet, n, size, flat, false)
    }

    /// Builds a code from `size` words laid out back to back.
    pub fn from_flat(alphabet: Alphabet, n: usize, size: usize, flat: Vec<Symbol>) -> Result<Self> {
        subset::check_ground(n)?;
        if flat.len() != n * size {
            return Err(Error::LengthMismatch { expected: n * size, got: flat.len() });
        }
        alphabet.check_word(&flat).map_err(|e| match e {
            Error::SymbolOutOfRange { symbol, coordinate, q } => Error::SymbolOutOfRange {
                symbol,
                coordinate: (coordinate - 1) % n.max(1) + 1,
                q,
            },
            e => e,
        })?;
        Self::assemble(alphabet, n, size, flat, false)
    }

    /// Like [`BlockCode::from_flat`] but silently merges repeated words; the
    /// symbols must already be in range.
    pub(crate) fn from_flat_collapsing(alphabet: Alphabet, n: usize, size: usize, flat: Vec<Symbol>) -> Self {
        Self::assemble(alphabet, n, size, flat, true).expect("collapsing assembly cannot fail")
    }

    fn assemble(alphabet: Alphabet, n: usize, size: usize, flat: Vec<Symbol>, collapse: bool) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCode);
        }
        if n == 0 {
            if size > 1 && !collapse {
                return Err(Error::DuplicateWord);
            }
            return Ok(Self { alphabet, n, size: 1, words: Vec::new() });
        }
        let q = alphabet.size();
        let (words, size) = if radix_pow(q, n).is_some() {
            canonical_packed(q, n, &flat, collapse)?
        } else {
            canonical_slices(n, &flat, collapse)?
        };
        Ok(Self { alphabet, n, size, words })
    }

    /// The whole space `A^n`. Refuses spaces with more than `limit` words.
    pub fn full_space(alphabet: Alphabet, n: usize, limit: usize) -> Result<Self> {
        subset::check_ground(n)?;
        let q = alphabet.size();
        let total = radix_pow(q, n)
            .filter(|&t| t <= limit as u64)
            .ok_or(Error::Infeasible {
                what: "full space",
                size: (q as u128).saturating_pow(n as u32),
                limit: limit as u128,
            })? as usize;
        let mut words = Vec::with_capacity(total * n);
        let mut w = vec![0 as Symbol; n];
        for _ in 0..total {
            words.extend_from_slice(&w);
            increment(&mut w, q);
        }
        Ok(Self { alphabet, n, size: total, words })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn q(&self) -> usize {
        self.alphabet.size()
    }

    /// Word length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codewords.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self, i: usize) -> &[Symbol] {
        &self.words[i * self.n..(i + 1) * self.n]
    }

    pub fn words(&self) -> impl ExactSizeIterator<Item = &[Symbol]> + '_ {
        (0..self.size).map(move |i| self.word(i))
    }

    /// Words in lexicographic order, flattened.
    pub fn as_flat(&self) -> &[Symbol] {
        &self.words
    }

    pub fn index_of(&self, word: &[Symbol]) -> Option<usize> {
        if word.len() != self.n {
            return None;
        }
        let (mut lo, mut hi) = (0, self.size);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.word(mid).cmp(word) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, word: &[Symbol]) -> bool {
        self.index_of(word).is_some()
    }

    pub fn is_subcode_of(&self, other: &BlockCode) -> bool {
        self.alphabet == other.alphabet && self.n == other.n && self.words().all(|w| other.contains(w))
    }

    /// `log_q |C|` when `|C|` is a power of `q`.
    pub fn dimension(&self) -> Option<u32> {
        exact_log(self.q(), self.size)
    }

    fn check_subset(&self, x: GroundSubset) -> Result<()> {
        if x.n() != self.n {
            return Err(Error::GroundMismatch { left: self.n, right: x.n() });
        }
        Ok(())
    }

    /// The projection `C_X` onto the coordinates of `X` (kept in increasing
    /// order), with repeated projections merged.
    pub fn puncture(&self, x: GroundSubset) -> Result<BlockCode> {
        self.check_subset(x)?;
        let coords: Vec<usize> = x.indices().collect();
        let mut flat = Vec::with_capacity(self.size * coords.len());
        for w in self.words() {
            flat.extend(coords.iter().map(|&i| w[i]));
        }
        Ok(Self::from_flat_collapsing(self.alphabet, coords.len(), self.size, flat))
    }

    /// `|C_X|`, without materializing the projection.
    pub fn projection_size(&self, x: GroundSubset) -> Result<usize> {
        self.check_subset(x)?;
        let coords: Vec<usize> = x.indices().collect();
        if coords.is_empty() {
            return Ok(1);
        }
        let q = self.q() as u64;
        if let Some(space) = radix_pow(self.q(), coords.len()) {
            let keys: Vec<u64> = self
                .words()
                .map(|w| coords.iter().fold(0u64, |k, &i| k * q + w[i] as u64))
                .collect();
            let mut scratch = DistinctCounter::default();
            Ok(scratch.count(&keys, space))
        } else {
            let set: BTreeSet<Vec<Symbol>> =
                self.words().map(|w| coords.iter().map(|&i| w[i]).collect()).collect();
            Ok(set.len())
        }
    }

    /// `r(X) = log_q |C_X|`. Fails when `|C_X|` is not a power of `q`.
    pub fn rank(&self, x: GroundSubset) -> Result<u32> {
        let size = self.projection_size(x)?;
        exact_log(self.q(), size).ok_or(Error::NotAlmostAffine { subset: x, size, q: self.q() })
    }

    /// `|C_X|` for every `X`, indexed by mask.
    pub fn projection_sizes(&self) -> Vec<usize> {
        let n = self.n;
        let mut sizes = vec![0usize; 1 << n];
        sizes[0] = 1;
        if n == 0 {
            return sizes;
        }
        if radix_pow(self.q(), n).is_none() {
            for x in subset::all_subsets(n).skip(1) {
                sizes[x.mask() as usize] = self.projection_size(x).expect("ground matches");
            }
            return sizes;
        }
        // Depth-first over subsets built in increasing coordinate order; each
        // level extends its parent's keys by one more coordinate.
        let columns: Vec<Vec<Symbol>> =
            (0..n).map(|i| self.words().map(|w| w[i]).collect()).collect();
        let mut levels: Vec<Vec<u64>> = (0..=n).map(|_| vec![0u64; self.size]).collect();
        let mut counter = DistinctCounter::default();
        let q = self.q() as u64;
        // stack of (mask, next coordinate to try, depth)
        let mut stack: Vec<(u32, usize, usize)> = vec![(0, 0, 0)];
        while let Some((mask, next, depth)) = stack.pop() {
            if next >= n {
                continue;
            }
            stack.push((mask, next + 1, depth));
            let child = mask | 1 << next;
            let (head, tail) = levels.split_at_mut(depth + 1);
            let parent = &head[depth];
            let keys = &mut tail[0];
            let col = &columns[next];
            for ((k, &p), &s) in keys.iter_mut().zip(parent.iter()).zip(col.iter()) {
                *k = p * q + s as u64;
            }
            let space = radix_pow(self.q(), depth + 1).expect("fits: q^n fits");
            sizes[child as usize] = counter.count(keys, space);
            stack.push((child, next + 1, depth + 1));
        }
        sizes
    }

    /// Checks `|C| = q^k` and that every `|C_X|` is a power of `q`. Subsets
    /// are scanned by size, then lexicographically; a failing `|C|` is
    /// reported with the full ground set as witness.
    pub fn verify_almost_affine(&self) -> AffineReport {
        let q = self.q();
        let full = GroundSubset::full(self.n);
        let Some(k) = self.dimension() else {
            return AffineReport::failed(full, self.size);
        };
        let sizes = self.projection_sizes();
        for x in subset::subsets_by_size(self.n) {
            let size = sizes[x.mask() as usize];
            if exact_log(q, size).is_none() {
                return AffineReport::failed(x, size);
            }
        }
        AffineReport::passed(k)
    }

    /// The rank function of `M_C`, tabulated over all subsets.
    pub fn matroid(&self) -> Result<RankFunction> {
        let q = self.q();
        if self.dimension().is_none() {
            return Err(Error::NotAlmostAffine {
                subset: GroundSubset::full(self.n),
                size: self.size,
                q,
            });
        }
        let sizes = self.projection_sizes();
        for x in subset::subsets_by_size(self.n) {
            let size = sizes[x.mask() as usize];
            if exact_log(q, size).is_none() {
                return Err(Error::NotAlmostAffine { subset: x, size, q });
            }
        }
        let values = sizes.iter().map(|&s| exact_log(q, s).unwrap() as i32).collect();
        RankFunction::from_values(self.n, values)
    }

    /// The `c`-support: coordinates where some codeword differs from `c`.
    pub fn support(&self, c: &[Symbol]) -> Result<GroundSubset> {
        if !self.contains(c) {
            return Err(Error::NotACodeword);
        }
        let from_c = self.support_from(c);
        // The union is the set of non-constant columns, whichever codeword
        // anchors it.
        assert_eq!(from_c, self.support_from(self.word(0)), "support depends on anchor");
        Ok(from_c)
    }

    fn support_from(&self, c: &[Symbol]) -> GroundSubset {
        let mut mask = 0u32;
        for w in self.words() {
            for (i, (a, b)) in w.iter().zip(c).enumerate() {
                if a != b {
                    mask |= 1 << i;
                }
            }
        }
        GroundSubset::from_mask(self.n, mask)
    }

    /// `C(X, c) = {w ∈ C : w_X = c_X}` for a codeword `c`.
    pub fn shorten(&self, x: GroundSubset, c: &[Symbol]) -> Result<BlockCode> {
        self.check_subset(x)?;
        if !self.contains(c) {
            return Err(Error::NotACodeword);
        }
        Ok(self.shorten_unanchored(x, c)?.code.expect("anchor itself survives"))
    }

    /// `C(X, c)` for an arbitrary word `c ∈ A^n`. The result may be empty and
    /// need not be almost affine; `anchor_in_code` records whether `c ∈ C`.
    pub fn shorten_unanchored(&self, x: GroundSubset, c: &[Symbol]) -> Result<UnanchoredShortening> {
        self.check_subset(x)?;
        if c.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: c.len() });
        }
        let coords: Vec<usize> = x.indices().collect();
        let mut flat = Vec::new();
        let mut size = 0;
        for w in self.words() {
            if coords.iter().all(|&i| w[i] == c[i]) {
                flat.extend_from_slice(w);
                size += 1;
            }
        }
        let code = (size > 0).then_some(Self { alphabet: self.alphabet, n: self.n, size, words: flat });
        Ok(UnanchoredShortening { code, anchor_in_code: self.contains(c) })
    }

    /// A subcode of dimension `i`, obtained by shortening on a set `X` grown
    /// greedily until `r(X) = k - i`. Returns `X` and the subcode anchored at the
    /// smallest codeword.
    pub fn subcode_of_dimension(&self, i: u32) -> Result<(GroundSubset, BlockCode)> {
        let rank = self.matroid()?;
        let k = rank.rank() as u32;
        if i > k {
            return Err(Error::Parameter(alloc::format!("dimension {i} exceeds code dimension {k}")));
        }
        let target = (k - i) as i32;
        let mut x = GroundSubset::empty(self.n);
        for e in 0..self.n {
            if rank.get(x) == target {
                break;
            }
            if rank.get(x.with(e)) > rank.get(x) {
                x = x.with(e);
            }
        }
        let sub = self.shorten(x, self.word(0))?;
        Ok((x, sub))
    }
}

/// Result of [`BlockCode::shorten_unanchored`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnanchoredShortening {
    pub code: Option<BlockCode>,
    pub anchor_in_code: bool,
}

/// Outcome of [`BlockCode::verify_almost_affine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineReport {
    dimension: Option<u32>,
    witness: Option<(GroundSubset, usize)>,
}

impl AffineReport {
    fn passed(k: u32) -> Self {
        Self { dimension: Some(k), witness: None }
    }

    fn failed(x: GroundSubset, size: usize) -> Self {
        Self { dimension: None, witness: Some((x, size)) }
    }

    pub fn is_almost_affine(&self) -> bool {
        self.witness.is_none()
    }

    pub fn dimension(&self) -> Option<u32> {
        self.dimension
    }

    /// First subset whose projection size is not a power of `q`.
    pub fn witness(&self) -> Option<GroundSubset> {
        self.witness.map(|(x, _)| x)
    }

    /// `|C_X|` at the witness.
    pub fn witness_size(&self) -> Option<usize> {
        self.witness.map(|(_, s)| s)
    }
}

/// Counts distinct keys below `space`, reusing a bitmap between calls.
#[derive(Default)]
struct DistinctCounter {
    bitmap: Vec<u64>,
    sorted: Vec<u64>,
}

const BITMAP_LIMIT: u64 = 1 << 30;

impl DistinctCounter {
    fn count(&mut self, keys: &[u64], space: u64) -> usize {
        if keys.len() <= 1 {
            return keys.len();
        }
        let words = space.div_ceil(64);
        if space <= BITMAP_LIMIT && words <= 4 * keys.len() as u64 + 1024 {
            let words = words as usize;
            if self.bitmap.len() < words {
                self.bitmap.resize(words, 0);
            }
            let bm = &mut self.bitmap[..words];
            for &k in keys.iter() {
                bm[(k >> 6) as usize] |= 1 << (k & 63);
            }
            let mut total = 0;
            for w in bm.iter_mut() {
                total += w.count_ones() as usize;
                *w = 0;
            }
            total
        } else {
            self.sorted.clear();
            self.sorted.extend_from_slice(keys);
            self.sorted.sort_unstable();
            1 + self.sorted.windows(2).filter(|p| p[0] != p[1]).count()
        }
    }
}

fn increment(w: &mut [Symbol], q: usize) {
    for s in w.iter_mut().rev() {
        if (*s as usize) + 1 < q {
            *s += 1;
            return;
        }
        *s = 0;
    }
}

fn canonical_packed(q: usize, n: usize, flat: &[Symbol], collapse: bool) -> Result<(Vec<Symbol>, usize)> {
    let q = q as u64;
    let mut keys: Vec<u64> = flat
        .chunks_exact(n)
        .map(|w| w.iter().fold(0u64, |k, &s| k * q + s as u64))
        .collect();
    keys.sort_unstable();
    let before = keys.len();
    keys.dedup();
    if keys.len() != before && !collapse {
        return Err(Error::DuplicateWord);
    }
    let mut out = vec![0 as Symbol; keys.len() * n];
    for (w, mut k) in out.chunks_exact_mut(n).zip(keys.iter().copied()) {
        for s in w.iter_mut().rev() {
            *s = (k % q) as Symbol;
            k /= q;
        }
    }
    Ok((out, keys.len()))
}

fn canonical_slices(n: usize, flat: &[Symbol], collapse: bool) -> Result<(Vec<Symbol>, usize)> {
    let mut rows: Vec<&[Symbol]> = flat.chunks_exact(n).collect();
    rows.sort_unstable();
    let before = rows.len();
    rows.dedup();
    if rows.len() != before && !collapse {
        return Err(Error::DuplicateWord);
    }
    Ok((rows.concat(), rows.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_codes::{sa_example, words};

    fn set(n: usize, s: &str) -> GroundSubset {
        GroundSubset::parse(n, s).unwrap()
    }

    #[test]
    fn exact_log_is_integral_only() {
        assert_eq!(exact_log(4, 16), Some(2));
        assert_eq!(exact_log(4, 1), Some(0));
        assert_eq!(exact_log(2, 3), None);
        assert_eq!(exact_log(9, 0), None);
        assert_eq!(exact_log(3, 729), Some(6));
    }

    #[test]
    fn puncture_examples() {
        let c = sa_example();
        let p = c.puncture(set(3, "1,2")).unwrap();
        assert_eq!((p.len(), p.n()), (16, 2));
        let p = c.puncture(set(3, "")).unwrap();
        assert_eq!((p.len(), p.n()), (1, 0));
        let p = c.puncture(set(3, "1")).unwrap();
        assert_eq!(p.as_flat(), &[0, 1, 2, 3]);
        assert_eq!(c.puncture(GroundSubset::full(3)).unwrap(), c);
        assert!(matches!(c.puncture(set(4, "4")), Err(Error::GroundMismatch { .. })));
    }

    #[test]
    fn rank_examples() {
        let c = sa_example();
        assert_eq!(c.rank(set(3, "1,2")).unwrap(), 2);
        assert_eq!(c.rank(set(3, "")).unwrap(), 0);
        assert_eq!(c.rank(set(3, "1,2,3")).unwrap(), 2);
    }

    #[test]
    fn rank_refuses_to_round() {
        let a = Alphabet::new(2).unwrap();
        let c = BlockCode::from_words(a, 2, words(&["00", "01", "10"])).unwrap();
        let err = c.rank(GroundSubset::full(2)).unwrap_err();
        assert!(matches!(err, Error::NotAlmostAffine { size: 3, .. }));
        assert_eq!(c.rank(set(2, "1")).unwrap(), 1);
    }

    #[test]
    fn verify_reports_witness() {
        let a = Alphabet::new(2).unwrap();
        let c = BlockCode::from_words(a, 2, words(&["00", "01", "10"])).unwrap();
        let rep = c.verify_almost_affine();
        assert!(!rep.is_almost_affine());
        assert_eq!(rep.dimension(), None);
        assert_eq!(rep.witness(), Some(GroundSubset::full(2)));
        assert_eq!(rep.witness_size(), Some(3));

        let rep = sa_example().verify_almost_affine();
        assert!(rep.is_almost_affine());
        assert_eq!(rep.dimension(), Some(2));
        assert_eq!(rep.witness(), None);
    }

    #[test]
    fn verify_finds_first_bad_projection() {
        // |C| = 4 but the first coordinate takes three values
        let a = Alphabet::new(2).unwrap();
        let c = BlockCode::from_words(a, 3, words(&["000", "001", "110", "111"])).unwrap();
        assert!(c.verify_almost_affine().is_almost_affine());
        let a4 = Alphabet::new(4).unwrap();
        let c = BlockCode::from_words(a4, 2, words(&["00", "10", "21", "22"])).unwrap();
        let rep = c.verify_almost_affine();
        assert_eq!(rep.witness(), Some(set(2, "1")));
        assert_eq!(rep.witness_size(), Some(3));
    }

    #[test]
    fn support_examples() {
        let c = sa_example();
        assert_eq!(c.support(&[0, 0, 0]).unwrap(), set(3, "1,2,3"));
        let one = BlockCode::from_words(c.alphabet(), 3, [[1u8, 2, 3]]).unwrap();
        assert_eq!(one.support(&[1, 2, 3]).unwrap(), set(3, ""));
        let sub = c.shorten(set(3, "1"), &[0, 0, 0]).unwrap();
        assert_eq!(sub.support(&[0, 0, 0]).unwrap(), set(3, "2,3"));
        assert_eq!(c.support(&[0, 0, 1]), Err(Error::NotACodeword));
    }

    #[test]
    fn shorten_examples() {
        let c = sa_example();
        let s = c.shorten(set(3, "1"), &[0, 0, 0]).unwrap();
        assert_eq!(s.as_flat(), &[0, 0, 0, 0, 1, 1, 0, 2, 2, 0, 3, 3]);
        assert_eq!(c.shorten(set(3, ""), &[1, 1, 2]).unwrap(), c);
        let s = c.shorten(set(3, "1,2"), &[0, 0, 0]).unwrap();
        assert_eq!(s.as_flat(), &[0, 0, 0]);
        assert_eq!(c.shorten(set(3, "1"), &[0, 0, 1]), Err(Error::NotACodeword));
    }

    #[test]
    fn unanchored_shortening_may_be_empty() {
        let c = sa_example();
        let u = c.shorten_unanchored(set(3, "1,2,3"), &[0, 0, 1]).unwrap();
        assert_eq!(u, UnanchoredShortening { code: None, anchor_in_code: false });
        let u = c.shorten_unanchored(set(3, "1"), &[0, 3, 3]).unwrap();
        assert!(u.anchor_in_code);
        assert_eq!(u.code.unwrap().len(), 4);
    }

    #[test]
    fn matroid_of_sa_example_is_u23() {
        let r = sa_example().matroid().unwrap();
        let by_mask: Vec<i32> = r.values().to_vec();
        assert_eq!(by_mask, vec![0, 1, 1, 2, 1, 2, 2, 2]);
    }

    #[test]
    fn one_word_code_has_zero_rank() {
        let a = Alphabet::new(3).unwrap();
        let c = BlockCode::from_words(a, 4, [[0u8, 1, 2, 0]]).unwrap();
        assert!(c.matroid().unwrap().values().iter().all(|&v| v == 0));
    }

    #[test]
    fn construction_errors() {
        let a = Alphabet::new(2).unwrap();
        assert_eq!(
            BlockCode::from_words(a, 2, words(&["01", "01"])),
            Err(Error::DuplicateWord)
        );
        assert_eq!(
            BlockCode::from_words(a, 2, words(&["02"])),
            Err(Error::SymbolOutOfRange { symbol: 2, coordinate: 2, q: 2 })
        );
        assert_eq!(
            BlockCode::from_words(a, 2, words(&["011"])),
            Err(Error::LengthMismatch { expected: 2, got: 3 })
        );
        assert_eq!(BlockCode::from_words(a, 2, Vec::<Vec<u8>>::new()), Err(Error::EmptyCode));
        assert_eq!(Alphabet::new(1), Err(Error::InvalidAlphabet(1)));
        assert_eq!(Alphabet::new(257), Err(Error::InvalidAlphabet(257)));
    }

    #[test]
    fn words_are_sorted() {
        let a = Alphabet::new(3).unwrap();
        let c = BlockCode::from_words(a, 2, words(&["21", "02", "10"])).unwrap();
        assert_eq!(c.as_flat(), &[0, 2, 1, 0, 2, 1]);
        assert_eq!(c.index_of(&[1, 0]), Some(1));
        assert_eq!(c.index_of(&[1, 1]), None);
    }

    #[test]
    fn full_space_is_free() {
        let a = Alphabet::new(3).unwrap();
        let c = BlockCode::full_space(a, 3, 1000).unwrap();
        assert_eq!(c.len(), 27);
        let r = c.matroid().unwrap();
        assert!(crate::subset::all_subsets(3).all(|x| r.get(x) == x.len() as i32));
        assert!(BlockCode::full_space(a, 10, 1000).is_err());
    }

    #[test]
    fn table_matches_single_projections() {
        let c = sa_example();
        let sizes = c.projection_sizes();
        for x in crate::subset::all_subsets(3) {
            assert_eq!(sizes[x.mask() as usize], c.projection_size(x).unwrap());
        }
    }

    #[test]
    fn subcodes_of_every_dimension() {
        let c = sa_example();
        for i in 0..=2 {
            let (x, sub) = c.subcode_of_dimension(i).unwrap();
            assert_eq!(sub.dimension(), Some(i));
            assert_eq!(c.rank(x).unwrap(), 2 - i);
            assert!(sub.is_subcode_of(&c));
        }
        assert!(c.subcode_of_dimension(3).is_err());
    }
}
