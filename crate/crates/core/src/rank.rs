//! Rank functions on the subsets of `E = {1, …, n}`: the matroid and
//! demi-matroid axioms, the first and supplement duals, essential sets, flags
//! with their alternating-sum rank functions, and `σ`-profiles.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::subset::{self, GroundSubset};

/// An integer-valued function on all subsets of the ground set, stored densely
/// by mask. Whether it is a (demi-)matroid is checked separately.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RankFunction {
    n: usize,
    values: Vec<i32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `r(∅) = 0`
    R1,
    /// `r(X) <= r(X ∪ x) <= r(X) + 1`
    R2,
    /// `r(X) = r(X ∪ x) = r(X ∪ y)` implies `r(X ∪ {x, y}) = r(X)`
    R3,
}

/// Where an axiom fails. Elements are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub set: GroundSubset,
    pub x: Option<usize>,
    pub y: Option<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at X = {}", self.axiom, self.set)?;
        if let Some(x) = self.x {
            write!(f, ", x = {}", x + 1)?;
        }
        if let Some(y) = self.y {
            write!(f, ", y = {}", y + 1)?;
        }
        Ok(())
    }
}

impl RankFunction {
    /// `values[mask]` is the value at the subset with that mask.
    pub fn from_values(n: usize, values: Vec<i32>) -> Result<Self> {
        subset::check_ground(n)?;
        if values.len() != 1 << n {
            return Err(Error::TableSize { expected: 1 << n, got: values.len() });
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(GroundSubset) -> i32) -> Result<Self> {
        subset::check_ground(n)?;
        Ok(Self { n, values: subset::all_subsets(n).map(&mut f).collect() })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| 0)
    }

    /// `r(X) = |X|`.
    pub fn free(n: usize) -> Result<Self> {
        Self::from_fn(n, |x| x.len() as i32)
    }

    /// The uniform matroid `U_{k,n}`: `r(X) = min(|X|, k)`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        Self::from_fn(n, |x| x.len().min(k) as i32)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn get(&self, x: GroundSubset) -> i32 {
        debug_assert_eq!(x.n(), self.n);
        self.values[x.mask() as usize]
    }

    pub(crate) fn at(&self, mask: u32) -> i32 {
        self.values[mask as usize]
    }

    /// `r(E)`.
    pub fn rank(&self) -> i32 {
        self.values[self.values.len() - 1]
    }

    fn full(&self) -> u32 {
        subset::full_mask(self.n)
    }

    fn check_same_ground(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Pointwise `self - other`.
    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(Self { n: self.n, values })
    }

    /// Pointwise `self + other`.
    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, values })
    }

    /// First failure of R1 or R2, scanning masks upward and elements upward.
    pub fn check_demimatroid(&self) -> core::result::Result<(), AxiomViolation> {
        let n = self.n;
        if self.values[0] != 0 {
            return Err(AxiomViolation { axiom: Axiom::R1, set: GroundSubset::empty(n), x: None, y: None });
        }
        for mask in 0..=self.full() {
            let here = self.at(mask);
            for x in 0..n {
                if mask >> x & 1 == 1 {
                    continue;
                }
                let step = self.at(mask | 1 << x) - here;
                if !(0..=1).contains(&step) {
                    return Err(AxiomViolation {
                        axiom: Axiom::R2,
                        set: GroundSubset::from_mask(n, mask),
                        x: Some(x),
                        y: None,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_demimatroid(&self) -> bool {
        self.check_demimatroid().is_ok()
    }

    /// R1, R2 and R3.
    pub fn check_matroid(&self) -> core::result::Result<(), AxiomViolation> {
        self.check_demimatroid()?;
        let n = self.n;
        for mask in 0..=self.full() {
            let here = self.at(mask);
            for x in 0..n {
                if mask >> x & 1 == 1 || self.at(mask | 1 << x) != here {
                    continue;
                }
                for y in x + 1..n {
                    if mask >> y & 1 == 1 || self.at(mask | 1 << y) != here {
                        continue;
                    }
                    if self.at(mask | 1 << x | 1 << y) != here {
                        return Err(AxiomViolation {
                            axiom: Axiom::R3,
                            set: GroundSubset::from_mask(n, mask),
                            x: Some(x),
                            y: Some(y),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_matroid(&self) -> bool {
        self.check_matroid().is_ok()
    }

    /// The first dual `r*(X) = |X| + r(E \ X) - r(E)`.
    pub fn dual(&self) -> Self {
        let full = self.full();
        let total = self.rank();
        let values = (0..=full)
            .map(|m| m.count_ones() as i32 + self.at(!m & full) - total)
            .collect();
        Self { n: self.n, values }
    }

    /// The supplement dual `r̄(X) = r(E) - r(E \ X)`.
    pub fn supplement_dual(&self) -> Self {
        let full = self.full();
        let total = self.rank();
        let values = (0..=full).map(|m| total - self.at(!m & full)).collect();
        Self { n: self.n, values }
    }

    /// `𝓔 = {(X, x) : x ∈ X, r(X \ x) = r(X)}`.
    pub fn essential_set(&self) -> EssentialSet {
        let members = (0..=self.full())
            .map(|m| {
                let here = self.at(m);
                GroundSubset::from_mask(self.n, m)
                    .indices()
                    .filter(|&x| self.at(m & !(1 << x)) == here)
                    .fold(0u32, |acc, x| acc | 1 << x)
            })
            .collect();
        EssentialSet { n: self.n, members }
    }

    /// Sets with `r(X) = |X| = r(E)`, in mask order.
    pub fn bases(&self) -> Vec<GroundSubset> {
        let total = self.rank();
        subset::all_subsets(self.n)
            .filter(|x| x.len() as i32 == total && self.get(*x) == total)
            .collect()
    }

    /// `k`-subsets with `r(X) < |X|`, in lexicographic order.
    pub fn dependent_sets(&self, k: usize) -> Vec<GroundSubset> {
        subset::subsets_of_size(self.n, k)
            .filter(|x| self.get(*x) < k as i32)
            .collect()
    }
}

/// The pairs `(X, x)` of an essential set, one bitmask of `x` per `X`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EssentialSet {
    n: usize,
    members: Vec<u32>,
}

impl EssentialSet {
    /// `x` is 0-based.
    pub fn contains(&self, set: GroundSubset, x: usize) -> bool {
        self.members[set.mask() as usize] >> x & 1 == 1
    }

    /// All pairs ordered by mask, then element.
    pub fn pairs(&self) -> impl Iterator<Item = (GroundSubset, usize)> + '_ {
        self.members.iter().enumerate().flat_map(move |(m, &xs)| {
            let set = GroundSubset::from_mask(self.n, m as u32);
            GroundSubset::from_mask(self.n, xs).indices().map(move |x| (set, x))
        })
    }

    pub fn len(&self) -> usize {
        self.members.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `self ⊆ other`, or the first pair of `self` missing from `other`.
    pub fn check_subset(&self, other: &EssentialSet) -> core::result::Result<(), (GroundSubset, usize)> {
        for (m, (&a, &b)) in self.members.iter().zip(&other.members).enumerate() {
            let missing = a & !b;
            if missing != 0 {
                return Err((GroundSubset::from_mask(self.n, m as u32), missing.trailing_zeros() as usize));
            }
        }
        Ok(())
    }

    pub fn is_subset(&self, other: &EssentialSet) -> bool {
        self.check_subset(other).is_ok()
    }
}

/// Demi-matroids `f_1, …, f_m` on one ground set with `f_m <= … <= f_1`
/// pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    members: Vec<RankFunction>,
}

impl Flag {
    pub fn new(members: Vec<RankFunction>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptyFlag)?;
        for (i, f) in members.iter().enumerate() {
            first.check_same_ground(f)?;
            f.check_demimatroid()
                .map_err(|violation| Error::NotDemimatroid { index: i + 1, violation })?;
        }
        for (i, pair) in members.windows(2).enumerate() {
            if let Some(m) = (0..pair[0].values.len()).find(|&m| pair[1].values[m] > pair[0].values[m]) {
                return Err(Error::NotAFlag {
                    index: i + 2,
                    subset: GroundSubset::from_mask(first.n, m as u32),
                });
            }
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[RankFunction] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> usize {
        self.members[0].n
    }

    /// Whether `𝓔_1 ⊆ 𝓔_2 ⊆ … ⊆ 𝓔_m`; on failure, the 1-based index `j`
    /// with `𝓔_j ⊄ 𝓔_{j+1}` and the offending pair.
    pub fn check_essential_chain(&self) -> core::result::Result<(), (usize, GroundSubset, usize)> {
        let sets: Vec<EssentialSet> = self.members.iter().map(RankFunction::essential_set).collect();
        for (j, pair) in sets.windows(2).enumerate() {
            pair[0].check_subset(&pair[1]).map_err(|(x, e)| (j + 1, x, e))?;
        }
        Ok(())
    }

    /// `Σ (-1)^(i+1) g_i` over the listed members.
    fn alternating(n: usize, fs: &[RankFunction], sign_of: impl Fn(usize) -> i32) -> RankFunction {
        let mut values = vec![0i32; 1 << n];
        for (i, f) in fs.iter().enumerate() {
            let s = sign_of(i + 1);
            for (v, &fv) in values.iter_mut().zip(&f.values) {
                *v += s * fv;
            }
        }
        RankFunction { n, values }
    }
}

fn sign(exponent: usize) -> i32 {
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Outcome of [`pair_rho`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairRho {
    /// `f1 - f2` is a demi-matroid.
    Demimatroid(RankFunction),
    /// `𝓔_{f1} ⊄ 𝓔_{f2}`; both failure witnesses are carried.
    Rejected(PairRejection),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRejection {
    /// A pair `(X, x)` of `𝓔_{f1}` outside `𝓔_{f2}` (`x` 0-based).
    pub inclusion_witness: (GroundSubset, usize),
    /// The first axiom failure of `f1 - f2`.
    pub axiom_witness: AxiomViolation,
    pub difference: RankFunction,
}

/// `ρ = f1 - f2` for a pair `f2 <= f1`. The essential-set test and the direct
/// axiom test must agree; disagreement is reported as a consistency error.
pub fn pair_rho(f1: &RankFunction, f2: &RankFunction) -> Result<PairRho> {
    let flag = Flag::new(vec![f1.clone(), f2.clone()])?;
    let rho = flag.members[0].minus(&flag.members[1])?;
    let inclusion = f1.essential_set().check_subset(&f2.essential_set());
    match (inclusion, rho.check_demimatroid()) {
        (Ok(()), Ok(())) => Ok(PairRho::Demimatroid(rho)),
        (Err(inclusion_witness), Err(axiom_witness)) => Ok(PairRho::Rejected(PairRejection {
            inclusion_witness,
            axiom_witness,
            difference: rho,
        })),
        (Ok(()), Err(v)) => Err(Error::Consistency(format!(
            "essential sets nested but f1 - f2 violates {v}"
        ))),
        (Err((x, e)), Ok(())) => Err(Error::Consistency(format!(
            "f1 - f2 is a demi-matroid but ({x}, {}) ∈ 𝓔_1 \\ 𝓔_2",
            e + 1
        ))),
    }
}

/// `ρ_F = Σ (-1)^(i+1) r_i`. When the essential sets form a chain the result
/// is checked to be a demi-matroid; otherwise it is returned unchecked.
pub fn flag_rho(flag: &Flag) -> Result<RankFunction> {
    let rho = Flag::alternating(flag.n(), &flag.members, |i| sign(i + 1));
    if flag.check_essential_chain().is_ok() {
        if let Err(v) = rho.check_demimatroid() {
            return Err(Error::Consistency(format!("essential chain holds but ρ_F violates {v}")));
        }
    }
    Ok(rho)
}

/// `η_F`, `θ_F` and `π_F` of a flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagDuals {
    /// `Σ (-1)^(m-i) r_i*`
    pub eta: RankFunction,
    /// `Σ (-1)^(i+1) r̄_i`
    pub theta: RankFunction,
    /// `Σ (-1)^(m-i) (r̄_i)*`
    pub pi: RankFunction,
}

/// Computes the three alternating sums from the duals of the members and
/// checks them against `ρ_F`:
/// `θ = ρ̄`, `η = ρ̄` (m even) or `ρ*` (m odd), `π = ρ` (m even) or `ρ̄*` (m odd).
/// With an essential chain all three are also checked to be demi-matroids.
pub fn flag_duals(flag: &Flag) -> Result<FlagDuals> {
    let n = flag.n();
    let m = flag.len();
    let duals: Vec<RankFunction> = flag.members.iter().map(RankFunction::dual).collect();
    let supplements: Vec<RankFunction> = flag.members.iter().map(RankFunction::supplement_dual).collect();
    let dual_supplements: Vec<RankFunction> = supplements.iter().map(RankFunction::dual).collect();

    let eta = Flag::alternating(n, &duals, |i| sign(m - i));
    let theta = Flag::alternating(n, &supplements, |i| sign(i + 1));
    let pi = Flag::alternating(n, &dual_supplements, |i| sign(m - i));

    let rho = flag_rho(flag)?;
    let rho_bar = rho.supplement_dual();
    let (eta_expected, pi_expected) = if m % 2 == 0 {
        (rho_bar.clone(), rho.clone())
    } else {
        (rho.dual(), rho_bar.dual())
    };
    for (name, got, want) in [("θ", &theta, &rho_bar), ("η", &eta, &eta_expected), ("π", &pi, &pi_expected)] {
        if let Some(mask) = (0..got.values.len()).find(|&k| got.values[k] != want.values[k]) {
            return Err(Error::Consistency(format!(
                "{name}_F differs from its dual form at {}",
                GroundSubset::from_mask(n, mask as u32)
            )));
        }
    }
    if flag.check_essential_chain().is_ok() {
        for (name, f) in [("η", &eta), ("θ", &theta), ("π", &pi)] {
            if let Err(v) = f.check_demimatroid() {
                return Err(Error::Consistency(format!("{name}_F violates {v}")));
            }
        }
    }
    Ok(FlagDuals { eta, theta, pi })
}

/// `σ_i = min{|X| : r(X) = i}` for `0 <= i <= r(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile {
    sigma: Vec<u32>,
}

impl Profile {
    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    /// The rank `l` of the demi-matroid.
    pub fn rank(&self) -> usize {
        self.sigma.len() - 1
    }

    /// The `j` with `σ_j <= μ < σ_{j+1}`, taking `σ_{l+1} = ∞`.
    pub fn level(&self, mu: usize) -> usize {
        self.sigma.iter().rposition(|&s| s as usize <= mu).expect("σ_0 = 0")
    }
}

pub fn profiles(f: &RankFunction) -> Result<Profile> {
    f.check_demimatroid()
        .map_err(|violation| Error::NotDemimatroid { index: 1, violation })?;
    let l = f.rank() as usize;
    let mut sigma = vec![u32::MAX; l + 1];
    for (m, &v) in f.values.iter().enumerate() {
        let size = (m as u32).count_ones();
        let slot = &mut sigma[v as usize];
        *slot = (*slot).min(size);
    }
    debug_assert!(sigma.iter().all(|&s| s != u32::MAX));
    Ok(Profile { sigma })
}

/// Visits masks by increasing popcount, then increasing value.
fn layered_masks(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..=subset::full_mask(n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

/// Largest ground set accepted by [`random_demimatroid`].
pub const RANDOM_MAX_GROUND: usize = 8;

/// A seeded random demi-matroid on `n <= 8` elements. Each `r(X)` is drawn
/// uniformly from `[max_x r(X \ x), min_x r(X \ x) + 1]`. Valid and
/// deterministic per seed; not uniform over demi-matroids.
pub fn random_demimatroid(n: usize, seed: u64) -> Result<RankFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_demimatroid_with(&mut rng, n)
}

pub fn random_demimatroid_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<RankFunction> {
    if n > RANDOM_MAX_GROUND {
        return Err(Error::Parameter(format!("random demi-matroids need n <= 8, got {n}")));
    }
    let mut values = vec![0i32; 1 << n];
    for m in layered_masks(n).into_iter().skip(1) {
        let (lo, hi) = facet_bounds(&values, m);
        values[m as usize] = rng.gen_range(lo..=hi);
    }
    RankFunction::from_values(n, values)
}

/// A random demi-matroid `f <= upper`. With probability `follow` per subset
/// the value is chosen to keep `𝓔_upper ⊆ 𝓔_f` locally whenever that is
/// possible, which makes valid pairs common.
pub fn random_dominated_with<R: Rng + ?Sized>(rng: &mut R, upper: &RankFunction, follow: f64) -> Result<RankFunction> {
    let n = upper.n;
    if n > RANDOM_MAX_GROUND {
        return Err(Error::Parameter(format!("random demi-matroids need n <= 8, got {n}")));
    }
    upper
        .check_demimatroid()
        .map_err(|violation| Error::NotDemimatroid { index: 1, violation })?;
    let mut values = vec![0i32; 1 << n];
    for m in layered_masks(n).into_iter().skip(1) {
        let (lo, hi) = facet_bounds(&values, m);
        let hi = hi.min(upper.at(m));
        let mut forced = GroundSubset::from_mask(n, m)
            .indices()
            .filter(|&x| upper.at(m & !(1 << x)) == upper.at(m))
            .map(|x| values[(m & !(1 << x)) as usize]);
        let pick = match forced.next() {
            Some(v) if rng.gen_bool(follow) && forced.all(|w| w == v) && (lo..=hi).contains(&v) => v,
            _ => rng.gen_range(lo..=hi),
        };
        values[m as usize] = pick;
    }
    RankFunction::from_values(n, values)
}

fn facet_bounds(values: &[i32], m: u32) -> (i32, i32) {
    let mut lo = i32::MIN;
    let mut hi = i32::MAX;
    let mut rest = m;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        let v = values[(m & !bit) as usize];
        lo = lo.max(v);
        hi = hi.min(v + 1);
    }
    (lo, hi)
}
