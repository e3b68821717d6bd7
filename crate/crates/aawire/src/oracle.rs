//! Brute-force recomputation of the closed forms in `aawire_core`.
//!
//! Everything here works from codewords, the Latin square table and raw rank
//! values. The formulas being checked (`overcode_rank`, `rho_x`,
//! `conditional_entropy`, the σ-profile prediction, the dual identities) are
//! only called to obtain the value under test.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use aawire_core::{
    all_subsets, exact_log, flag_duals, flag_rho, pair_rho, profiles, random_demimatroid_with,
    random_dominated_with, subsets_of_size, BlockCode, Flag, GroundSubset, Message, PairRho,
    RankFunction, WiretapScheme,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus;

/// Most elementary steps one claim instance may take.
pub const STEP_LIMIT: u64 = 100_000_000;

/// Most distinct tap values the entropy enumeration will tabulate.
pub const TAP_TABLE_LIMIT: u64 = 1 << 25;

/// Default seed for every sampled suite.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Skipped(_) => "skipped",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub claim: &'static str,
    pub parameters: String,
    pub closed_form: String,
    pub enumerated: String,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn compare(claim: &'static str, parameters: String, closed: impl fmt::Display, enumerated: impl fmt::Display, start: Instant) -> Self {
        let closed_form = closed.to_string();
        let enumerated = enumerated.to_string();
        let outcome = if closed_form == enumerated { Outcome::Pass } else { Outcome::Fail };
        Self { claim, parameters, closed_form, enumerated, outcome, elapsed: start.elapsed() }
    }

    fn skipped(claim: &'static str, parameters: String, reason: String) -> Self {
        Self {
            claim,
            parameters,
            closed_form: String::new(),
            enumerated: String::new(),
            outcome: Outcome::Skipped(reason),
            elapsed: Duration::ZERO,
        }
    }

    fn failed(claim: &'static str, parameters: String, error: impl fmt::Display, start: Instant) -> Self {
        Self {
            claim,
            parameters,
            closed_form: String::new(),
            enumerated: format!("error: {error}"),
            outcome: Outcome::Fail,
            elapsed: start.elapsed(),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn is_failure(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<7} {:<26} {}", self.outcome.label(), self.claim, self.parameters)?;
        match &self.outcome {
            Outcome::Skipped(reason) => write!(f, " ({reason})"),
            _ => write!(f, ": closed form {} / enumerated {}", self.closed_form, self.enumerated),
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} needs {size} steps, over the limit of {limit}")]
    Infeasible { what: &'static str, size: u128, limit: u128 },
    #[error("conditional distribution of m given t = {tap} is not uniform")]
    NotUniform { tap: u64 },
    #[error("support size {support} for t = {tap} is not a power of q")]
    NotPowerOfQ { tap: u64, support: u64 },
    #[error(transparent)]
    Core(#[from] aawire_core::Error),
}

/// Result of enumerating every (message, codeword) pair for one scenario.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntropyEnumeration {
    /// `H(m | t, M)` in base-`q` units.
    pub entropy: Ratio<u64>,
    pub pairs: u64,
    /// Number of distinct tapped values observed.
    pub tap_values: usize,
    /// Distinct values of `|{m : Ω_(t,Y,M)(m) ≠ ∅}|` over observed `t`.
    pub compatible_counts: Vec<u64>,
    /// Distinct nonzero `|Ω_(t,Y,M)(m)|` over all `m` and `t`.
    pub omega_sizes: Vec<u64>,
}

#[derive(Clone, Copy, Default)]
struct TapEntry {
    total: u64,
    support: u64,
    per_message: u64,
}

enum TapTable {
    Dense(Vec<TapEntry>),
    Sparse(HashMap<u64, TapEntry>),
}

impl TapTable {
    fn entry(&mut self, key: u64) -> &mut TapEntry {
        match self {
            TapTable::Dense(v) => &mut v[key as usize],
            TapTable::Sparse(m) => m.entry(key).or_default(),
        }
    }

    fn observed(&self) -> Vec<(u64, TapEntry)> {
        match self {
            TapTable::Dense(v) => {
                v.iter().enumerate().filter(|(_, e)| e.support > 0).map(|(k, e)| (k as u64, *e)).collect()
            }
            TapTable::Sparse(m) => m.iter().map(|(&k, &e)| (k, e)).collect(),
        }
    }
}

/// Pairs to enumerate and size of the tap value space, or why
/// [`oracle_entropy`] would refuse.
pub fn entropy_cost(scheme: &WiretapScheme, known: GroundSubset, taps: GroundSubset) -> Result<(u128, u128), OracleError> {
    let messages = scheme
        .messages_matching_count(known)
        .ok_or(OracleError::Infeasible { what: "message space", size: u128::MAX, limit: STEP_LIMIT as u128 })?;
    let pairs = messages as u128 * scheme.code().len() as u128;
    if pairs > STEP_LIMIT as u128 {
        return Err(OracleError::Infeasible { what: "entropy enumeration", size: pairs, limit: STEP_LIMIT as u128 });
    }
    let tap_space = (scheme.q() as u128).checked_pow(taps.len() as u32).unwrap_or(u128::MAX);
    if tap_space.min(pairs) > TAP_TABLE_LIMIT as u128 {
        return Err(OracleError::Infeasible { what: "tap table", size: tap_space.min(pairs), limit: TAP_TABLE_LIMIT as u128 });
    }
    Ok((pairs, tap_space))
}

/// Exact `H(m | t, M)` from the uniform model: `m` uniform over messages
/// with `m_X = M`, the transmission uniform in `C_m`. Terms with
/// `p(m | t, M) = 0` contribute `0`.
pub fn oracle_entropy(
    scheme: &WiretapScheme,
    known: GroundSubset,
    values: &[u8],
    taps: GroundSubset,
) -> Result<EntropyEnumeration, OracleError> {
    let (pairs, tap_space) = entropy_cost(scheme, known, taps)?;
    let q = scheme.q() as u64;
    let code = scheme.code();
    let table = scheme.phi().table();
    let qs = scheme.q();
    let coords = scheme.message_coords();
    let tap_coords: Vec<usize> = taps.indices().collect();
    let mut entries = if tap_space <= TAP_TABLE_LIMIT as u128 {
        TapTable::Dense(vec![TapEntry::default(); tap_space as usize])
    } else {
        TapTable::Sparse(HashMap::new())
    };
    let mut omega_sizes = BTreeSet::new();
    let mut keys = Vec::with_capacity(code.len());
    let mut word = vec![0u8; scheme.n()];
    let mut bad = None;
    scheme.for_each_matching_message(known, values, |m| {
        keys.clear();
        for c in code.words() {
            word.copy_from_slice(c);
            for (&i, &mi) in coords.iter().zip(m.symbols()) {
                word[i] = table[c[i] as usize * qs + mi as usize];
            }
            keys.push(tap_coords.iter().fold(0u64, |k, &i| k * q + word[i] as u64));
        }
        keys.sort_unstable();
        for run in keys.chunk_by(|a, b| a == b) {
            let count = run.len() as u64;
            omega_sizes.insert(count);
            let e = entries.entry(run[0]);
            if e.support == 0 {
                e.per_message = count;
            } else if e.per_message != count {
                bad.get_or_insert(run[0]);
            }
            e.total += count;
            e.support += 1;
        }
    })?;
    if let Some(tap) = bad {
        return Err(OracleError::NotUniform { tap });
    }
    let mut numerator = 0u64;
    let mut compatible = BTreeSet::new();
    let observed = entries.observed();
    for &(tap, e) in &observed {
        // p(m | t, M) = per_message / total = 1 / support for every m in the support
        let log = exact_log(q as usize, e.support as usize)
            .ok_or(OracleError::NotPowerOfQ { tap, support: e.support })?;
        numerator += e.total * log as u64;
        compatible.insert(e.support);
    }
    Ok(EntropyEnumeration {
        entropy: Ratio::new(numerator, pairs as u64),
        pairs: pairs as u64,
        tap_values: observed.len(),
        compatible_counts: compatible.into_iter().collect(),
        omega_sizes: omega_sizes.into_iter().collect(),
    })
}

/// Overcode built directly as the union of the coset codes.
pub fn materialize_overcode(
    scheme: &WiretapScheme,
    known: GroundSubset,
    values: &[u8],
) -> Result<BlockCode, OracleError> {
    let messages = scheme.messages_matching_count(known).unwrap_or(u64::MAX);
    let size = messages as u128 * scheme.code().len() as u128;
    if size > aawire_core::wiretap::OVERCODE_LIMIT as u128 {
        return Err(OracleError::Infeasible {
            what: "overcode",
            size,
            limit: aawire_core::wiretap::OVERCODE_LIMIT as u128,
        });
    }
    let n = scheme.n();
    let mut flat = Vec::with_capacity(size as usize * n);
    let mut err = None;
    scheme.for_each_matching_message(known, values, |m| {
        for c in scheme.code().words() {
            match scheme.shift_word(m, c) {
                Ok(w) => flat.extend_from_slice(&w),
                Err(e) => {
                    err.get_or_insert(e);
                }
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    Ok(BlockCode::from_flat(scheme.code().alphabet(), n, size as usize, flat)?)
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Instances per sampled claim when exhaustive coverage is too large.
    pub samples: usize,
    pub seed: u64,
    /// Random known sets whose overcodes are materialized, for codes too
    /// large to cover exhaustively.
    pub overcode_samples: usize,
    /// Known sets whose overcodes are always checked.
    pub pinned_known: Vec<GroundSubset>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { samples: 50, seed: DEFAULT_SEED, overcode_samples: 2, pinned_known: Vec::new() }
    }
}

fn set_label(x: GroundSubset) -> String {
    x.to_string()
}

fn word_label(q: usize, w: &[u8]) -> String {
    corpus::format_word(q, w)
}

fn random_message<R: Rng>(rng: &mut R, scheme: &WiretapScheme) -> Message {
    Message((0..scheme.message_len()).map(|_| rng.gen_range(0..scheme.q()) as u8).collect())
}

fn random_values<R: Rng>(rng: &mut R, q: usize, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(0..q) as u8).collect()
}

/// Small enough to check every instance.
fn exhaustive(scheme: &WiretapScheme) -> bool {
    (scheme.q() as u128).pow(scheme.n() as u32) <= 1 << 16
}

pub fn verify_lemma_suite(scheme: &WiretapScheme, options: &SuiteOptions) -> Vec<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut reports = Vec::new();
    let q = scheme.q();
    let n = scheme.n();
    let full = exhaustive(scheme);

    reports.push(check_partition(scheme));
    reports.extend(check_coset_matroids(scheme, full, options.samples.min(8), &mut rng));

    // overcode instances
    let free = scheme.basis().complement();
    let mut knowns: Vec<GroundSubset> = options.pinned_known.clone();
    if full {
        knowns.extend(all_subsets(n).filter(|x| x.is_subset(&free)));
    } else {
        for _ in 0..options.overcode_samples {
            let x = GroundSubset::new(n, rng.gen::<u32>() & free.mask()).expect("subset of E");
            knowns.push(x);
        }
    }
    let mut seen = BTreeSet::new();
    knowns.retain(|x| seen.insert(*x));
    for x in knowns {
        reports.extend(check_overcode(scheme, x, &mut rng));
    }

    // Ω, compatible counts and entropy
    let mut scenarios = Vec::new();
    if full {
        for x in all_subsets(n).filter(|x| x.is_subset(&free)) {
            let values_space = BlockCode::full_space(scheme.code().alphabet(), x.len(), 1 << 16).expect("small");
            for m in values_space.words() {
                for y in all_subsets(n) {
                    scenarios.push((x, m.to_vec(), y));
                }
            }
        }
    } else {
        for _ in 0..options.samples {
            let x = GroundSubset::new(n, rng.gen::<u32>() & free.mask()).expect("subset of E");
            let m = random_values(&mut rng, q, x.len());
            let y = GroundSubset::new(n, rng.gen::<u32>() & GroundSubset::full(n).mask()).expect("subset of E");
            scenarios.push((x, m, y));
        }
    }
    for (x, m, y) in scenarios {
        reports.extend(check_scenario(scheme, x, &m, y));
    }
    reports
}

fn check_partition(scheme: &WiretapScheme) -> VerificationReport {
    let start = Instant::now();
    let q = scheme.q();
    let n = scheme.n();
    let params = format!("q={q} n={n} k={}", scheme.k());
    let space = (q as u128).pow(n as u32);
    let cosets = scheme.messages_matching_count(GroundSubset::empty(n)).unwrap_or(u64::MAX);
    if space > STEP_LIMIT as u128 || cosets > 10_000 {
        return VerificationReport::skipped("cosets-partition", params, format!("q^n = {space} words, {cosets} cosets"));
    }
    let mut hit = vec![false; space as usize];
    let mut overlaps = 0u64;
    let mut misdecoded = 0u64;
    let mut covered = 0u64;
    let result = scheme.for_each_matching_message(GroundSubset::empty(n), &[], |m| {
        for c in scheme.code().words() {
            let w = scheme.shift_word(m, c).expect("valid word");
            let idx = w.iter().fold(0usize, |acc, &s| acc * q + s as usize);
            if hit[idx] {
                overlaps += 1;
            } else {
                hit[idx] = true;
                covered += 1;
            }
            if scheme.decode(&w).ok().as_ref() != Some(m) {
                misdecoded += 1;
            }
        }
    });
    if let Err(e) = result {
        return VerificationReport::failed("cosets-partition", params, e, start);
    }
    VerificationReport::compare(
        "cosets-partition",
        params,
        format!("{space} words covered, 0 overlaps, 0 misdecoded"),
        format!("{covered} words covered, {overlaps} overlaps, {misdecoded} misdecoded"),
        start,
    )
}

fn check_coset_matroids(
    scheme: &WiretapScheme,
    full: bool,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<VerificationReport> {
    let mut messages = Vec::new();
    if full {
        let _ = scheme.for_each_matching_message(GroundSubset::empty(scheme.n()), &[], |m| messages.push(m.clone()));
    } else {
        messages.push(Message(vec![0; scheme.message_len()]));
        messages.extend((0..samples).map(|_| random_message(rng, scheme)));
    }
    messages
        .into_iter()
        .map(|m| {
            let start = Instant::now();
            let params = format!("m={}", word_label(scheme.q(), m.symbols()));
            match scheme.coset_code(&m).and_then(|c| c.matroid()) {
                Ok(r) => {
                    let same = r == *scheme.matroid();
                    let mut decoded = 0;
                    if let Ok(c) = scheme.coset_code(&m) {
                        decoded = c.words().filter(|w| scheme.decode(w).ok().as_ref() == Some(&m)).count();
                    }
                    VerificationReport::compare(
                        "coset-matroid-and-decode",
                        params,
                        format!("matroid of C, {} decoded", scheme.code().len()),
                        format!("{}, {decoded} decoded", if same { "matroid of C" } else { "different matroid" }),
                        start,
                    )
                }
                Err(e) => VerificationReport::failed("coset-matroid-and-decode", params, e, start),
            }
        })
        .collect()
}

fn check_overcode(scheme: &WiretapScheme, known: GroundSubset, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let q = scheme.q();
    let n = scheme.n();
    let values = random_values(rng, q, known.len());
    let params = format!("X={} M={}", set_label(known), word_label(q, &values));
    let start = Instant::now();
    let built = match materialize_overcode(scheme, known, &values) {
        Ok(d) => d,
        Err(OracleError::Infeasible { what, size, limit }) => {
            return vec![VerificationReport::skipped("overcode-rank", params, format!("{what}: {size} > {limit}"))]
        }
        Err(e) => return vec![VerificationReport::failed("overcode-rank", params, e, start)],
    };
    let mut out = Vec::new();
    let measured = match built.matroid() {
        Ok(r) => r,
        Err(e) => return vec![VerificationReport::failed("overcode-rank", params, e, start)],
    };
    let closed = scheme.overcode_rank_table(known).expect("valid known set");
    let mismatches = all_subsets(n).filter(|&y| closed.get(y) != measured.get(y)).count();
    out.push(VerificationReport::compare(
        "overcode-rank",
        params.clone(),
        format!("|D| = {}, rank {}, {} of {} subsets agree", q.pow((n - known.len()) as u32), n - known.len(), 1 << n, 1 << n),
        format!("|D| = {}, rank {}, {} of {} subsets agree", built.len(), measured.rank(), (1 << n) - mismatches, 1 << n),
        start,
    ));

    if !known.is_empty() {
        let start = Instant::now();
        let mut other = values.clone();
        other[0] = ((other[0] as usize + 1 + rng.gen_range(0..q - 1)) % q) as u8;
        let label = format!("{params} M'={}", word_label(q, &other));
        match materialize_overcode(scheme, known, &other).and_then(|d| Ok(d.matroid()?)) {
            Ok(r) => out.push(VerificationReport::compare(
                "overcode-independent-of-M",
                label,
                "equal matroids",
                if r == measured { "equal matroids" } else { "different matroids" },
                start,
            )),
            Err(e) => out.push(VerificationReport::failed("overcode-independent-of-M", label, e, start)),
        }
    }

    // Δ_μ from the materialized ranks against |X| + j from the σ-profile
    let start = Instant::now();
    let code_rank = scheme.matroid();
    let unknown = (scheme.message_len() - known.len()) as i32;
    let brute: Vec<String> = (0..=n)
        .map(|mu| {
            let best = subsets_of_size(n, mu)
                .map(|y| unknown - (measured.get(y) - code_rank.get(y)))
                .min()
                .expect("a tap set");
            (scheme.message_len() as i32 - best).to_string()
        })
        .collect();
    let predicted = scheme
        .rho_table(known)
        .and_then(|rho| profiles(&rho))
        .map(|p| (0..=n).map(|mu| (known.len() + p.level(mu)).to_string()).collect::<Vec<_>>());
    match predicted {
        Ok(p) => out.push(VerificationReport::compare("uncertainty-profile", params, p.join(","), brute.join(","), start)),
        Err(e) => out.push(VerificationReport::failed("uncertainty-profile", params, e, start)),
    }
    out
}

fn check_scenario(scheme: &WiretapScheme, known: GroundSubset, values: &[u8], taps: GroundSubset) -> Vec<VerificationReport> {
    let q = scheme.q();
    let params = format!("X={} M={} Y={}", set_label(known), word_label(q, values), set_label(taps));
    let start = Instant::now();
    let e = match oracle_entropy(scheme, known, values, taps) {
        Ok(e) => e,
        Err(OracleError::Infeasible { what, size, limit }) => {
            return vec![VerificationReport::skipped("entropy", params, format!("{what}: {size} > {limit}"))];
        }
        Err(err) => return vec![VerificationReport::failed("entropy", params, err, start)],
    };
    let r_y = scheme.code().rank(taps).expect("almost affine");
    let omega = (q as u64).pow(scheme.k() as u32 - r_y);
    let rho = scheme.rho_x(known, taps).expect("valid scenario");
    let compatible = (q as u64).pow((scheme.message_len() - known.len()) as u32 - rho);
    let closed_h = scheme.conditional_entropy(known, taps).expect("valid scenario");
    let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    vec![
        VerificationReport::compare("omega-size", params.clone(), omega, list(&e.omega_sizes), start),
        VerificationReport::compare("compatible-count", params.clone(), compatible, list(&e.compatible_counts), start),
        VerificationReport::compare("entropy", params, Ratio::from_integer(closed_h as u64), e.entropy, start),
    ]
}

// Raw-table helpers, written against value slices so they share nothing with
// `RankFunction`'s own checks.

fn raw_is_demimatroid(n: usize, v: &[i32]) -> bool {
    if v[0] != 0 {
        return false;
    }
    (0..1u32 << n).all(|m| {
        (0..n).filter(|&i| m >> i & 1 == 0).all(|i| {
            let d = v[(m | 1 << i) as usize] - v[m as usize];
            d == 0 || d == 1
        })
    })
}

fn raw_essential(n: usize, v: &[i32]) -> Vec<bool> {
    let mut out = vec![false; (1 << n) * n.max(1)];
    for m in 0..1u32 << n {
        for i in 0..n {
            if m >> i & 1 == 1 && v[(m & !(1 << i)) as usize] == v[m as usize] {
                out[m as usize * n + i] = true;
            }
        }
    }
    out
}

fn raw_subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

fn raw_dual(n: usize, v: &[i32]) -> Vec<i32> {
    let full = (1u32 << n) - 1;
    (0..=full).map(|m| m.count_ones() as i32 + v[(full & !m) as usize] - v[full as usize]).collect()
}

fn raw_supplement(n: usize, v: &[i32]) -> Vec<i32> {
    let full = (1u32 << n) - 1;
    (0..=full).map(|m| v[full as usize] - v[(full & !m) as usize]).collect()
}

/// `Σ_i sign(i) v_i` pointwise, `i` counted from 1.
fn raw_alternating(tables: &[Vec<i32>], sign: impl Fn(usize) -> i32) -> Vec<i32> {
    (0..tables[0].len())
        .map(|x| tables.iter().enumerate().map(|(i, t)| sign(i + 1) * t[x]).sum())
        .collect()
}

struct Tally {
    claim: &'static str,
    parameters: String,
    cases: u64,
    failures: u64,
    start: Instant,
    note: String,
}

impl Tally {
    fn new(claim: &'static str, parameters: String) -> Self {
        Self { claim, parameters, cases: 0, failures: 0, start: Instant::now(), note: String::new() }
    }

    fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn finish(self) -> VerificationReport {
        let mut r = VerificationReport::compare(
            self.claim,
            self.parameters,
            format!("{} cases hold{}", self.cases, self.note),
            format!("{} cases hold{}", self.cases - self.failures, self.note),
            self.start,
        );
        if self.cases == 0 {
            r.outcome = Outcome::Fail;
            r.enumerated = "no cases generated".into();
        }
        r
    }
}

/// Random flag built from a random ternary or binary code and a chain of
/// shortenings at growing coordinate sets through one anchor word.
fn nested_code_flag<R: Rng>(rng: &mut R, m: usize) -> Vec<RankFunction> {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let n = rng.gen_range(2..=6);
    let dim = rng.gen_range(1..=n);
    let rows: Vec<Vec<u8>> = (0..dim).map(|_| (0..n).map(|_| rng.gen_range(0..p) as u8).collect()).collect();
    let code = corpus::linear_span(p, n, &rows).expect("prime field");
    let anchor = code.word(rng.gen_range(0..code.len())).to_vec();
    let mut x = GroundSubset::empty(n);
    let mut members = vec![code.matroid().expect("linear")];
    while members.len() < m {
        let extra = GroundSubset::new(n, rng.gen::<u32>() & ((1 << n) - 1)).unwrap();
        x = x.union(extra);
        let sub = code.shorten(x, &anchor).expect("anchor in code");
        members.push(sub.matroid().expect("subcode is almost affine"));
    }
    members
}

pub fn verify_demimatroid_theorems(trials: usize, seed: u64) -> Vec<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = format!("trials={trials} seed={seed}");

    let mut valid = Tally::new("sampler-output-valid", format!("{params} n<=6"));
    let mut involution = Tally::new("dual-involution", format!("{params} n<=6"));
    let mut supplement = Tally::new("supplement-involution", format!("{params} n<=6"));
    let mut commute = Tally::new("duals-commute", format!("{params} n<=6"));
    let mut dual_rank = Tally::new("dual-rank", format!("{params} n<=6"));
    let mut identity = Tally::new("identity-pair-zero", format!("{params} n<=6"));
    for _ in 0..trials {
        let n = rng.gen_range(0..=6);
        let f = random_demimatroid_with(&mut rng, n).expect("n <= 6");
        let v = f.values();
        valid.record(raw_is_demimatroid(n, v));
        let d = raw_dual(n, v);
        let s = raw_supplement(n, v);
        involution.record(raw_dual(n, &d) == v && f.dual().values() == d);
        supplement.record(raw_supplement(n, &s) == v && f.supplement_dual().values() == s);
        commute.record(raw_dual(n, &s) == raw_supplement(n, &d));
        dual_rank.record(d[(1 << n) - 1] == n as i32 - v[(1 << n) - 1] && raw_is_demimatroid(n, &d));
        identity.record(matches!(pair_rho(&f, &f), Ok(PairRho::Demimatroid(r)) if r.values().iter().all(|&x| x == 0)));
    }

    let mut pairs = Tally::new("pair-theorem", format!("{params} n<=5"));
    let mut duality = Tally::new("essential-duality", format!("{params} n<=5"));
    let (mut included, mut excluded) = (0u64, 0u64);
    for _ in 0..trials {
        let n = rng.gen_range(1..=5);
        let f1 = random_demimatroid_with(&mut rng, n).expect("n <= 5");
        let follow = rng.gen_range(0.0..=1.0);
        let f2 = random_dominated_with(&mut rng, &f1, follow).expect("dominated sample");
        let (v1, v2) = (f1.values(), f2.values());
        let inclusion = raw_subset(&raw_essential(n, v1), &raw_essential(n, v2));
        let diff: Vec<i32> = v1.iter().zip(v2).map(|(a, b)| a - b).collect();
        let demi = raw_is_demimatroid(n, &diff);
        let core_agrees = matches!(
            (pair_rho(&f1, &f2), demi),
            (Ok(PairRho::Demimatroid(_)), true) | (Ok(PairRho::Rejected(_)), false)
        );
        pairs.record(inclusion == demi && core_agrees);
        if inclusion {
            included += 1;
        } else {
            excluded += 1;
        }
        let d1 = raw_dual(n, v1);
        let d2 = raw_dual(n, v2);
        let s1 = raw_supplement(n, v1);
        let s2 = raw_supplement(n, v2);
        let dual_inclusion = raw_subset(&raw_essential(n, &d2), &raw_essential(n, &d1));
        let supp_inclusion = raw_subset(&raw_essential(n, &s1), &raw_essential(n, &s2));
        duality.record(inclusion == dual_inclusion && inclusion == supp_inclusion);
    }
    pairs.note = format!("; both directions seen: {}", included > 0 && excluded > 0);
    if included == 0 || excluded == 0 {
        pairs.failures += 1;
        pairs.cases += 1;
    }

    let mut reports = vec![
        valid.finish(),
        involution.finish(),
        supplement.finish(),
        commute.finish(),
        dual_rank.finish(),
        identity.finish(),
        pairs.finish(),
        duality.finish(),
    ];

    for m in 2..=4 {
        let mut chain = Tally::new("nested-code-chain", format!("{params} m={m}"));
        let mut implication = Tally::new("flag-rho-demimatroid", format!("{params} m={m}"));
        let mut identities = Tally::new("flag-duality-identities", format!("{params} m={m}"));
        for _ in 0..trials {
            let members = nested_code_flag(&mut rng, m);
            chain.record(check_flag(&members, &mut implication, &mut identities));
        }
        // random chains of demi-matroids: the implication applies only when the
        // essential sets are nested
        let mut random_chain = Tally::new("random-flag-implication", format!("{params} m={m} n<=5"));
        let mut nested = 0;
        for _ in 0..trials {
            let n = rng.gen_range(1..=5);
            let mut members = vec![random_demimatroid_with(&mut rng, n).expect("n <= 5")];
            while members.len() < m {
                let follow = rng.gen_range(0.5..=1.0);
                let next = random_dominated_with(&mut rng, members.last().unwrap(), follow).expect("dominated");
                members.push(next);
            }
            if check_flag(&members, &mut random_chain, &mut identities) {
                nested += 1;
            }
        }
        random_chain.note = format!("; nested essential sets in {nested}");
        reports.extend([chain.finish(), implication.finish(), random_chain.finish(), identities.finish()]);
    }
    reports
}

/// Records the implication and the duality identities for one flag; returns
/// whether the essential sets form a chain.
fn check_flag(members: &[RankFunction], implication: &mut Tally, identities: &mut Tally) -> bool {
    let n = members[0].n();
    let m = members.len();
    let tables: Vec<Vec<i32>> = members.iter().map(|f| f.values().to_vec()).collect();
    let essentials: Vec<Vec<bool>> = tables.iter().map(|t| raw_essential(n, t)).collect();
    let nested = essentials.windows(2).all(|w| raw_subset(&w[0], &w[1]));

    let odd_plus = |i: usize| if i % 2 == 1 { 1 } else { -1 };
    let from_top = |i: usize| if (m - i) % 2 == 0 { 1 } else { -1 };
    let rho = raw_alternating(&tables, odd_plus);
    let duals: Vec<Vec<i32>> = tables.iter().map(|t| raw_dual(n, t)).collect();
    let supps: Vec<Vec<i32>> = tables.iter().map(|t| raw_supplement(n, t)).collect();
    let supp_duals: Vec<Vec<i32>> = supps.iter().map(|t| raw_dual(n, t)).collect();
    let eta = raw_alternating(&duals, from_top);
    let theta = raw_alternating(&supps, odd_plus);
    let pi = raw_alternating(&supp_duals, from_top);
    let rho_bar = raw_supplement(n, &rho);
    let (eta_expected, pi_expected) = if m % 2 == 0 {
        (rho_bar.clone(), rho.clone())
    } else {
        (raw_dual(n, &rho), raw_dual(n, &rho_bar))
    };
    let raw_ok = theta == rho_bar && eta == eta_expected && pi == pi_expected;
    let core_ok = Flag::new(members.to_vec())
        .and_then(|flag| {
            let d = flag_duals(&flag)?;
            let r = flag_rho(&flag)?;
            Ok(r.values() == rho && d.eta.values() == eta && d.theta.values() == theta && d.pi.values() == pi)
        })
        .unwrap_or(false);
    identities.record(raw_ok && core_ok);

    if nested {
        implication.record(
            raw_is_demimatroid(n, &rho)
                && raw_is_demimatroid(n, &eta)
                && raw_is_demimatroid(n, &theta)
                && raw_is_demimatroid(n, &pi),
        );
    }
    nested
}

pub fn summary(reports: &[VerificationReport]) -> (usize, usize, usize) {
    let pass = reports.iter().filter(|r| r.passed()).count();
    let fail = reports.iter().filter(|r| r.is_failure()).count();
    (pass, fail, reports.len() - pass - fail)
}
