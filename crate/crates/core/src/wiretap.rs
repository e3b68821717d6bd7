//! The two-party wire-tap channel of type II over an almost affine code.
//!
//! A message `m ∈ A^(E \ B)` is sent as a uniformly chosen word of the coset
//! code `C_m = Φ_m(C)`, where `Φ_m` keeps the basis coordinates and mixes every
//! other coordinate with the message through a Latin square. An adversary who
//! already knows `m_X = M` and taps the coordinates `Y` learns
//! `|X| + ρ_X(Y)` symbols, where `ρ_X = r_D - r_C` and `D = D_(X,M)` is the
//! union of all cosets compatible with `M`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::code::{radix_pow, BlockCode, Symbol};
use crate::error::{Error, Result};
use crate::latin::LatinSquare;
use crate::rank::{profiles, Profile, RankFunction};
use crate::subset::{self, GroundSubset};

/// Most words [`WiretapScheme::overcode`] will materialize.
pub const OVERCODE_LIMIT: u64 = 10_000_000;

/// Most messages [`WiretapScheme::count_compatible`] will enumerate.
pub const ENUMERATION_LIMIT: u64 = 100_000_000;

/// A message: one symbol per coordinate of `E \ B`, in increasing coordinate
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Message(pub Vec<Symbol>);

impl Message {
    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }
}

/// What the adversary knows (`m_X = M`) and where it taps (`Y`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TapScenario {
    known: GroundSubset,
    known_values: Vec<Symbol>,
    taps: GroundSubset,
}

impl TapScenario {
    pub fn known(&self) -> GroundSubset {
        self.known
    }

    /// `M`, in increasing coordinate order of `X`.
    pub fn known_values(&self) -> &[Symbol] {
        &self.known_values
    }

    pub fn taps(&self) -> GroundSubset {
        self.taps
    }

    /// `μ = |Y|`.
    pub fn mu(&self) -> usize {
        self.taps.len()
    }
}

/// Ranks and entropy for one [`TapScenario`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TapAnalysis {
    /// `r_D(Y)`
    pub overcode_rank: u32,
    /// `r_C(Y)`
    pub code_rank: u32,
    /// `ρ_X(Y)`, the symbols learned beyond `M`.
    pub extra: u32,
    /// `H(m | t, M)` in base-`q` units.
    pub entropy: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Equivocation {
    pub mu: usize,
    /// `E_μ = min_{|Y| = μ} H(m | t, M)`
    pub equivocation: u32,
    /// `Δ_μ = n - k - E_μ`
    pub uncertainty: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UncertaintyRow {
    pub mu: usize,
    /// `Δ_μ` by exhaustive minimization over tap sets.
    pub delta: u32,
    /// The `j` with `σ_j <= μ < σ_{j+1}`.
    pub level: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncertaintyTable {
    pub known_size: usize,
    pub profile: Profile,
    pub rows: Vec<UncertaintyRow>,
}

impl UncertaintyTable {
    /// Tap counts at which `Δ_μ` increases.
    pub fn steps(&self) -> Vec<usize> {
        self.rows
            .windows(2)
            .filter(|w| w[1].delta > w[0].delta)
            .map(|w| w[1].mu)
            .collect()
    }
}

/// The materialized overcode and its matroid.
#[derive(Clone, Debug)]
pub struct Overcode {
    pub code: BlockCode,
    pub matroid: RankFunction,
}

#[derive(Clone, Debug)]
pub struct WiretapScheme {
    code: BlockCode,
    basis: GroundSubset,
    phi: LatinSquare,
    matroid: RankFunction,
    k: usize,
    message_coords: Vec<usize>,
    basis_coords: Vec<usize>,
    // mixed-radix value of c_B -> index of c in `code`
    basis_lookup: Vec<u32>,
}

impl WiretapScheme {
    pub fn new(code: BlockCode, basis: GroundSubset, phi: LatinSquare) -> Result<Self> {
        if phi.q() != code.q() {
            return Err(Error::AlphabetMismatch { left: code.q(), right: phi.q() });
        }
        if basis.n() != code.n() {
            return Err(Error::GroundMismatch { left: code.n(), right: basis.n() });
        }
        let matroid = code.matroid()?;
        let k = matroid.rank() as usize;
        if basis.len() != k || matroid.get(basis) != k as i32 {
            return Err(Error::InvalidBasis { basis });
        }
        let basis_coords: Vec<usize> = basis.indices().collect();
        let message_coords: Vec<usize> = basis.complement().indices().collect();
        let q = code.q() as u64;
        let mut basis_lookup = vec![u32::MAX; code.len()];
        for (idx, w) in code.words().enumerate() {
            let key = basis_coords.iter().fold(0u64, |acc, &i| acc * q + w[i] as u64) as usize;
            if basis_lookup[key] != u32::MAX {
                return Err(Error::Consistency(format!(
                    "two codewords agree on the basis {basis}"
                )));
            }
            basis_lookup[key] = idx as u32;
        }
        Ok(Self { code, basis, phi, matroid, k, message_coords, basis_coords, basis_lookup })
    }

    /// Uses `φ(a, b) = a + b mod q`.
    pub fn with_cyclic(code: BlockCode, basis: GroundSubset) -> Result<Self> {
        let phi = LatinSquare::cyclic(code.q())?;
        Self::new(code, basis, phi)
    }

    pub fn code(&self) -> &BlockCode {
        &self.code
    }

    pub fn basis(&self) -> GroundSubset {
        self.basis
    }

    pub fn phi(&self) -> &LatinSquare {
        &self.phi
    }

    /// Rank function of `M_C`.
    pub fn matroid(&self) -> &RankFunction {
        &self.matroid
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.code.q()
    }

    /// `n - k`.
    pub fn message_len(&self) -> usize {
        self.message_coords.len()
    }

    /// The coordinates of `E \ B` (0-based), i.e. where each message symbol
    /// goes.
    pub fn message_coords(&self) -> &[usize] {
        &self.message_coords
    }

    fn check_word(&self, w: &[Symbol]) -> Result<()> {
        if w.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), got: w.len() });
        }
        self.code.alphabet().check_word(w)
    }

    fn check_message(&self, m: &Message) -> Result<()> {
        if m.0.len() != self.message_len() {
            return Err(Error::LengthMismatch { expected: self.message_len(), got: m.0.len() });
        }
        self.code.alphabet().check_word(&m.0)
    }

    fn check_ground(&self, x: GroundSubset) -> Result<()> {
        if x.n() != self.n() {
            return Err(Error::GroundMismatch { left: self.n(), right: x.n() });
        }
        Ok(())
    }

    /// Validates `X ⊆ E \ B` and `M ∈ A^X`.
    fn check_known(&self, known: GroundSubset, values: Option<&[Symbol]>) -> Result<()> {
        self.check_ground(known)?;
        if !known.is_disjoint(&self.basis) {
            return Err(Error::KnownIntersectsBasis { known, basis: self.basis });
        }
        if let Some(values) = values {
            if values.len() != known.len() {
                return Err(Error::LengthMismatch { expected: known.len(), got: values.len() });
            }
            self.code.alphabet().check_word(values)?;
        }
        Ok(())
    }

    pub fn scenario(&self, known: GroundSubset, known_values: Vec<Symbol>, taps: GroundSubset) -> Result<TapScenario> {
        self.check_known(known, Some(&known_values))?;
        self.check_ground(taps)?;
        Ok(TapScenario { known, known_values, taps })
    }

    /// Positions within a message of the coordinates of `known`.
    pub fn message_positions(&self, known: GroundSubset) -> Vec<usize> {
        self.message_coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| known.contains(c))
            .map(|(p, _)| p)
            .collect()
    }

    /// `m_X`.
    pub fn restrict(&self, m: &Message, known: GroundSubset) -> Vec<Symbol> {
        self.message_positions(known).into_iter().map(|p| m.0[p]).collect()
    }

    /// `q^(n - k - |X|)`, the number of messages with `m_X = M`.
    pub fn messages_matching_count(&self, known: GroundSubset) -> Option<u64> {
        radix_pow(self.q(), self.message_len() - known.len())
    }

    /// Calls `f` on every message with `m_X = M`, in lexicographic order.
    pub fn for_each_matching_message(
        &self,
        known: GroundSubset,
        values: &[Symbol],
        mut f: impl FnMut(&Message),
    ) -> Result<()> {
        self.check_known(known, Some(values))?;
        let fixed = self.message_positions(known);
        let free: Vec<usize> = (0..self.message_len()).filter(|p| !fixed.contains(p)).collect();
        let mut m = Message(vec![0; self.message_len()]);
        for (&p, &v) in fixed.iter().zip(values) {
            m.0[p] = v;
        }
        let q = self.q() as Symbol;
        loop {
            f(&m);
            // odometer over the free positions, last position fastest
            let mut carry = true;
            for &p in free.iter().rev() {
                if m.0[p] + 1 < q {
                    m.0[p] += 1;
                    carry = false;
                    break;
                }
                m.0[p] = 0;
            }
            if carry {
                return Ok(());
            }
        }
    }

    fn shift_into(&self, m: &[Symbol], w: &[Symbol], out: &mut [Symbol]) {
        out.copy_from_slice(w);
        for (&i, &mi) in self.message_coords.iter().zip(m) {
            out[i] = self.phi.mix(w[i], mi);
        }
    }

    /// `Φ_m(w)`: basis coordinates copied, every other coordinate `i` mapped
    /// to `φ(w_i, m_i)`. Defined on all of `A^n`.
    pub fn shift_word(&self, m: &Message, w: &[Symbol]) -> Result<Vec<Symbol>> {
        self.check_message(m)?;
        self.check_word(w)?;
        let mut out = vec![0; self.n()];
        self.shift_into(&m.0, w, &mut out);
        Ok(out)
    }

    /// `Φ_m^{-1}(w)`.
    pub fn unshift_word(&self, m: &Message, w: &[Symbol]) -> Result<Vec<Symbol>> {
        self.check_message(m)?;
        self.check_word(w)?;
        let mut out = w.to_vec();
        for (&i, &mi) in self.message_coords.iter().zip(&m.0) {
            out[i] = self.phi.unmix_second(mi, w[i]);
        }
        Ok(out)
    }

    /// `C_m = Φ_m(C)`.
    pub fn coset_code(&self, m: &Message) -> Result<BlockCode> {
        self.check_message(m)?;
        let n = self.n();
        let mut flat = vec![0; self.code.len() * n];
        for (c, out) in self.code.words().zip(flat.chunks_exact_mut(n.max(1))) {
            self.shift_into(&m.0, c, out);
        }
        BlockCode::from_flat(self.code.alphabet(), n, self.code.len(), flat).map_err(|e| match e {
            Error::DuplicateWord => Error::Consistency("Φ_m is not injective on C".into()),
            e => e,
        })
    }

    /// Sends `m` as a uniformly random word of `C_m`.
    pub fn encode<R: Rng + ?Sized>(&self, m: &Message, rng: &mut R) -> Result<Vec<Symbol>> {
        self.check_message(m)?;
        let c = self.code.word(rng.gen_range(0..self.code.len()));
        let mut out = vec![0; self.n()];
        self.shift_into(&m.0, c, &mut out);
        Ok(out)
    }

    /// The codeword agreeing with `w` on the basis.
    fn basis_preimage(&self, w: &[Symbol]) -> &[Symbol] {
        let q = self.q() as u64;
        let key = self.basis_coords.iter().fold(0u64, |acc, &i| acc * q + w[i] as u64) as usize;
        self.code.word(self.basis_lookup[key] as usize)
    }

    /// The unique `m` with `w ∈ C_m`: take the codeword `c` with `c_B = w_B`
    /// and solve `φ(c_i, m_i) = w_i` off the basis.
    pub fn decode(&self, w: &[Symbol]) -> Result<Message> {
        self.check_word(w)?;
        let c = self.basis_preimage(w);
        Ok(Message(
            self.message_coords.iter().map(|&i| self.phi.unmix_first(c[i], w[i])).collect(),
        ))
    }

    /// `D_(X,M) = ⋃_{m_X = M} C_m`, materialized, with its matroid. Checks that
    /// `D` is almost affine of dimension `n - |X|` and, when `X` is nonempty,
    /// that a second value `M' ≠ M` yields the same matroid.
    pub fn overcode(&self, known: GroundSubset, values: &[Symbol]) -> Result<Overcode> {
        self.check_known(known, Some(values))?;
        let code = self.overcode_words(known, values)?;
        let matroid = code.matroid()?;
        let expected = (self.n() - known.len()) as i32;
        if matroid.rank() != expected {
            return Err(Error::Consistency(format!(
                "overcode has rank {} instead of n - |X| = {expected}",
                matroid.rank()
            )));
        }
        if !values.is_empty() {
            let mut other = values.to_vec();
            other[0] = ((other[0] as usize + 1) % self.q()) as Symbol;
            let second = self.overcode_words(known, &other)?.matroid()?;
            if second != matroid {
                return Err(Error::Consistency("overcode matroid depends on M".into()));
            }
        }
        Ok(Overcode { code, matroid })
    }

    /// `D_(X,M)` without the matroid checks.
    pub fn overcode_words(&self, known: GroundSubset, values: &[Symbol]) -> Result<BlockCode> {
        self.check_known(known, Some(values))?;
        let n = self.n();
        let cosets = self.messages_matching_count(known).unwrap_or(u64::MAX);
        let total = cosets.saturating_mul(self.code.len() as u64);
        if total > OVERCODE_LIMIT {
            return Err(Error::Infeasible { what: "overcode", size: total as u128, limit: OVERCODE_LIMIT as u128 });
        }
        let mut flat = vec![0; total as usize * n];
        let mut chunks = flat.chunks_exact_mut(n.max(1));
        self.for_each_matching_message(known, values, |m| {
            for c in self.code.words() {
                self.shift_into(&m.0, c, chunks.next().expect("sized"));
            }
        })?;
        BlockCode::from_flat(self.code.alphabet(), n, total as usize, flat).map_err(|e| match e {
            Error::DuplicateWord => Error::Consistency("cosets C_m overlap".into()),
            e => e,
        })
    }

    /// `r_D(Y) = |Y \ (B ∪ X)| + r(Y ∩ (B ∪ X))`.
    pub fn overcode_rank(&self, known: GroundSubset, taps: GroundSubset) -> Result<u32> {
        self.check_known(known, None)?;
        self.check_ground(taps)?;
        let covered = self.basis.union(known);
        Ok(taps.difference(covered).len() as u32 + self.matroid.get(taps.intersection(covered)) as u32)
    }

    pub fn overcode_rank_table(&self, known: GroundSubset) -> Result<RankFunction> {
        self.check_known(known, None)?;
        let covered = self.basis.union(known);
        RankFunction::from_fn(self.n(), |y| {
            y.difference(covered).len() as i32 + self.matroid.get(y.intersection(covered))
        })
    }

    /// `ρ_X(Y) = r_D(Y) - r_C(Y)`.
    pub fn rho_x(&self, known: GroundSubset, taps: GroundSubset) -> Result<u32> {
        let d = self.overcode_rank(known, taps)?;
        Ok(d - self.matroid.get(taps) as u32)
    }

    /// The demi-matroid `ρ_X` over all tap sets.
    pub fn rho_table(&self, known: GroundSubset) -> Result<RankFunction> {
        self.overcode_rank_table(known)?.minus(&self.matroid)
    }

    /// `Ω_(t,Y,M)(m)`: empty if `m_X ≠ M`, else the words of `C_m` reading `t`
    /// on `Y`. Its size is checked to be `0` or `q^(k - r(Y))`.
    pub fn omega(
        &self,
        scenario: &TapScenario,
        m: &Message,
        tapped: &[Symbol],
    ) -> Result<Vec<Vec<Symbol>>> {
        self.check_message(m)?;
        let taps: Vec<usize> = scenario.taps.indices().collect();
        if tapped.len() != taps.len() {
            return Err(Error::LengthMismatch { expected: taps.len(), got: tapped.len() });
        }
        if self.restrict(m, scenario.known) != scenario.known_values {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut w = vec![0; self.n()];
        for c in self.code.words() {
            self.shift_into(&m.0, c, &mut w);
            if taps.iter().zip(tapped).all(|(&i, &t)| w[i] == t) {
                out.push(w.clone());
            }
        }
        out.sort();
        let full = self.q().pow(self.k as u32 - self.matroid.get(scenario.taps) as u32);
        if !out.is_empty() && out.len() != full {
            return Err(Error::Consistency(format!(
                "|Ω| = {} is neither 0 nor q^(k - r(Y)) = {full}",
                out.len()
            )));
        }
        Ok(out)
    }

    /// Number of messages `m` with `Ω_(w_Y,Y,M)(m) ≠ ∅`, by enumeration,
    /// checked against `q^(n - k - |X| - ρ_X(Y))`.
    pub fn count_compatible(
        &self,
        known: GroundSubset,
        values: &[Symbol],
        w: &[Symbol],
        taps: GroundSubset,
    ) -> Result<u64> {
        self.check_known(known, Some(values))?;
        self.check_ground(taps)?;
        let sent = self.decode(w)?;
        if self.restrict(&sent, known) != values {
            return Err(Error::NotInOvercode);
        }
        let count = self.messages_matching_count(known).unwrap_or(u64::MAX);
        if count > ENUMERATION_LIMIT {
            return Err(Error::Infeasible { what: "message enumeration", size: count as u128, limit: ENUMERATION_LIMIT as u128 });
        }
        // Ω(m) ≠ ∅ iff some codeword equals the pattern Φ_m^{-1}(w) on Y.
        let punctured = self.code.puncture(taps)?;
        let tap_coords: Vec<usize> = taps.indices().collect();
        let slot: Vec<Option<usize>> = tap_coords
            .iter()
            .map(|&i| self.message_coords.iter().position(|&c| c == i))
            .collect();
        let mut pattern = vec![0; tap_coords.len()];
        let mut found = 0u64;
        self.for_each_matching_message(known, values, |m| {
            for ((p, &i), s) in pattern.iter_mut().zip(&tap_coords).zip(&slot) {
                *p = match s {
                    Some(pos) => self.phi.unmix_second(m.0[*pos], w[i]),
                    None => w[i],
                };
            }
            if punctured.contains(&pattern) {
                found += 1;
            }
        })?;
        let exponent = self.message_len() - known.len() - self.rho_x(known, taps)? as usize;
        let expected = (self.q() as u64).pow(exponent as u32);
        if found != expected {
            return Err(Error::Consistency(format!(
                "{found} compatible messages, expected q^{exponent} = {expected}"
            )));
        }
        Ok(found)
    }

    /// `H(m | t, M) = n - k - |X| - ρ_X(Y)` in base-`q` units.
    pub fn conditional_entropy(&self, known: GroundSubset, taps: GroundSubset) -> Result<u32> {
        let rho = self.rho_x(known, taps)?;
        Ok((self.message_len() - known.len()) as u32 - rho)
    }

    pub fn analyze(&self, scenario: &TapScenario) -> Result<TapAnalysis> {
        let overcode_rank = self.overcode_rank(scenario.known, scenario.taps)?;
        let code_rank = self.matroid.get(scenario.taps) as u32;
        let extra = overcode_rank - code_rank;
        let entropy = self.conditional_entropy(scenario.known, scenario.taps)?;
        Ok(TapAnalysis { overcode_rank, code_rank, extra, entropy })
    }

    /// `E_μ` and `Δ_μ` by scanning every tap set of size `μ`.
    pub fn equivocation(&self, known: GroundSubset, mu: usize) -> Result<Equivocation> {
        if mu > self.n() {
            return Err(Error::Parameter(format!("μ = {mu} exceeds n = {}", self.n())));
        }
        let rho = self.rho_table(known)?;
        Ok(self.equivocation_from(&rho, known, mu))
    }

    fn equivocation_from(&self, rho: &RankFunction, known: GroundSubset, mu: usize) -> Equivocation {
        let unknown = (self.message_len() - known.len()) as u32;
        let equivocation = subset::subsets_of_size(self.n(), mu)
            .map(|y| unknown - rho.get(y) as u32)
            .min()
            .expect("some tap set of every size");
        Equivocation { mu, equivocation, uncertainty: self.message_len() as u32 - equivocation }
    }

    /// `Δ_μ` for `μ = 0..=n`, each paired with the level predicted by the
    /// `σ`-profile of `ρ_X`; the two must give `Δ_μ = |X| + j`.
    pub fn uncertainty_table(&self, known: GroundSubset) -> Result<UncertaintyTable> {
        let rho = self.rho_table(known)?;
        let profile = profiles(&rho)?;
        let l_expected = self.message_len() - known.len();
        if profile.rank() != l_expected {
            return Err(Error::Consistency(format!(
                "ρ_X has rank {} instead of n - k - |X| = {l_expected}",
                profile.rank()
            )));
        }
        let mut rows = Vec::with_capacity(self.n() + 1);
        for mu in 0..=self.n() {
            let eq = self.equivocation_from(&rho, known, mu);
            let level = profile.level(mu);
            if eq.uncertainty as usize != known.len() + level {
                return Err(Error::Consistency(format!(
                    "Δ_{mu} = {} but σ-profile predicts |X| + {level}",
                    eq.uncertainty
                )));
            }
            rows.push(UncertaintyRow { mu, delta: eq.uncertainty, level });
        }
        Ok(UncertaintyTable { known_size: known.len(), profile, rows })
    }
}

/// Picks the basis greedily from the last coordinate downwards.
pub fn trailing_basis(matroid: &RankFunction) -> GroundSubset {
    let n = matroid.n();
    let mut b = GroundSubset::empty(n);
    for i in (0..n).rev() {
        if matroid.get(b.with(i)) > matroid.get(b) {
            b = b.with(i);
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_codes::sa_example;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(n: usize, s: &str) -> GroundSubset {
        GroundSubset::parse(n, s).unwrap()
    }

    fn scheme() -> WiretapScheme {
        WiretapScheme::with_cyclic(sa_example(), set(3, "1,2")).unwrap()
    }

    #[test]
    fn shift_examples() {
        let s = scheme();
        assert_eq!(s.shift_word(&Message(vec![0]), &[0, 1, 1]).unwrap(), vec![0, 1, 1]);
        assert_eq!(s.shift_word(&Message(vec![1]), &[0, 1, 1]).unwrap(), vec![0, 1, 2]);
        assert!(s.shift_word(&Message(vec![1, 0]), &[0, 1, 1]).is_err());
        assert!(s.shift_word(&Message(vec![1]), &[0, 1]).is_err());
    }

    #[test]
    fn shift_is_a_bijection_of_the_space() {
        let s = scheme();
        let space = BlockCode::full_space(s.code().alphabet(), 3, 64).unwrap();
        for m in 0..4 {
            let m = Message(vec![m]);
            let mut images: Vec<Vec<u8>> = space.words().map(|w| s.shift_word(&m, w).unwrap()).collect();
            for (w, img) in space.words().zip(&images) {
                assert_eq!(s.unshift_word(&m, img).unwrap(), w);
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), 64);
        }
    }

    #[test]
    fn decode_examples() {
        let s = scheme();
        assert_eq!(s.decode(&[0, 1, 2]).unwrap(), Message(vec![1]));
        assert!(s.decode(&[0, 1, 4]).is_err());
    }

    #[test]
    fn zero_message_coset_is_the_code() {
        let s = scheme();
        assert_eq!(&s.coset_code(&Message(vec![0])).unwrap(), s.code());
    }

    #[test]
    fn encode_lands_in_coset() {
        let s = scheme();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for m in 0..4 {
            let m = Message(vec![m]);
            let coset = s.coset_code(&m).unwrap();
            for _ in 0..50 {
                let w = s.encode(&m, &mut rng).unwrap();
                assert!(coset.contains(&w));
                assert_eq!(s.decode(&w).unwrap(), m);
            }
        }
    }

    #[test]
    fn rejects_bad_bases_and_known_sets() {
        let c = sa_example();
        assert!(matches!(
            WiretapScheme::with_cyclic(c.clone(), set(3, "1")),
            Err(Error::InvalidBasis { .. })
        ));
        let phi = LatinSquare::cyclic(3).unwrap();
        assert!(matches!(
            WiretapScheme::new(c, set(3, "1,2"), phi),
            Err(Error::AlphabetMismatch { .. })
        ));
        let s = scheme();
        assert!(matches!(
            s.overcode_rank(set(3, "1"), set(3, "")),
            Err(Error::KnownIntersectsBasis { .. })
        ));
    }

    #[test]
    fn overcode_small_cases() {
        let s = scheme();
        let free = s.overcode(set(3, ""), &[]).unwrap();
        assert_eq!(free.code.len(), 64);
        assert_eq!(free.matroid, RankFunction::free(3).unwrap());
        let d = s.overcode(set(3, "3"), &[2]).unwrap();
        assert_eq!(d.code.len(), 16);
        assert_eq!(d.matroid, s.overcode_rank_table(set(3, "3")).unwrap());
    }

    #[test]
    fn omega_sizes() {
        let s = scheme();
        let sc = s.scenario(set(3, ""), vec![], set(3, "1")).unwrap();
        for m in 0..4 {
            for t in 0..4 {
                let om = s.omega(&sc, &Message(vec![m]), &[t]).unwrap();
                assert_eq!(om.len(), 4);
            }
        }
        let all = s.scenario(set(3, ""), vec![], set(3, "")).unwrap();
        assert_eq!(s.omega(&all, &Message(vec![1]), &[]).unwrap().len(), 16);
        let known = s.scenario(set(3, "3"), vec![2], set(3, "1")).unwrap();
        assert!(s.omega(&known, &Message(vec![1]), &[0]).unwrap().is_empty());
    }

    #[test]
    fn count_compatible_examples() {
        let s = scheme();
        let w = s.shift_word(&Message(vec![3]), &[1, 2, 3]).unwrap();
        let e = GroundSubset::full(3);
        assert_eq!(s.count_compatible(set(3, ""), &[], &w, set(3, "")).unwrap(), 4);
        assert_eq!(s.count_compatible(set(3, ""), &[], &w, e).unwrap(), 1);
        assert_eq!(s.count_compatible(set(3, "3"), &[3], &w, set(3, "1")).unwrap(), 1);
        assert_eq!(
            s.count_compatible(set(3, "3"), &[0], &w, set(3, "1")),
            Err(Error::NotInOvercode)
        );
    }

    #[test]
    fn entropy_extremes() {
        let s = scheme();
        assert_eq!(s.conditional_entropy(set(3, ""), set(3, "")).unwrap(), 1);
        assert_eq!(s.conditional_entropy(set(3, ""), GroundSubset::full(3)).unwrap(), 0);
        assert_eq!(s.conditional_entropy(set(3, "3"), set(3, "")).unwrap(), 0);
    }

    #[test]
    fn uncertainty_table_for_sa_example() {
        let s = scheme();
        let t = s.uncertainty_table(set(3, "")).unwrap();
        // ρ_∅(Y) = |Y| - r(Y) for U_{2,3}: only E has value 1
        assert_eq!(t.profile.sigma(), &[0, 3]);
        let deltas: Vec<u32> = t.rows.iter().map(|r| r.delta).collect();
        assert_eq!(deltas, vec![0, 0, 0, 1]);
        assert_eq!(t.steps(), vec![3]);
    }

    #[test]
    fn trailing_basis_prefers_last_coordinates() {
        let s = scheme();
        assert_eq!(trailing_basis(s.matroid()), set(3, "2,3"));
    }
}
