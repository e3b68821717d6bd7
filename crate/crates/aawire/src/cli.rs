//! Command-line front end.
//!
//! Exit status: `0` when every requested check passes, `1` when a check or
//! verification fails, `2` for unusable input.

use std::ffi::OsString;
use std::path::Path;
use std::time::Instant;

use aawire_core::{
    pair_rho, profiles, subsets_by_size, trailing_basis, Error as CoreError, Flag, GroundSubset,
    LatinSquare, Message, PairRho, RankFunction, WiretapScheme,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::corpus::{self, CodeFile, CorpusError};
use crate::oracle::{self, SuiteOptions, VerificationReport, DEFAULT_SEED};

#[derive(Parser, Debug)]
#[command(name = "aawire", version, about = "Almost affine codes, demi-matroids and the wire-tap channel of type II")]
pub struct Cli {
    /// Print the same values as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Append wall-clock timings (output is then no longer reproducible).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a code is almost affine and report its dimension.
    Check {
        code: String,
        /// Also check the matroid axioms on the full rank table.
        #[arg(long)]
        verify: bool,
    },
    /// Rank table, bases or dependent sets of a code's matroid.
    Matroid {
        code: String,
        #[arg(long, conflicts_with_all = ["ranks", "dependents"])]
        bases: bool,
        #[arg(long, conflicts_with = "dependents")]
        ranks: bool,
        #[arg(long, value_name = "K")]
        dependents: Option<usize>,
    },
    /// Write a code (builtin or file) in canonical file form.
    Export {
        code: String,
        #[arg(long, short)]
        output: std::path::PathBuf,
    },
    /// Dual rank table `|X| + r(E - X) - r(E)`.
    Dual { source: String },
    /// Supplement dual `r(E) - r(E - X)`.
    Sdual { source: String },
    /// σ-profile of a rank function, or of the difference of a pair.
    Profiles {
        source: String,
        /// `overcode` for the wire-tap overcode of `source`, or a second code
        /// or rank table to subtract.
        #[arg(long)]
        pair: Option<String>,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value = "")]
        known: String,
        #[arg(long)]
        values: Option<String>,
        /// Materialize the overcode and compare with the closed form.
        #[arg(long)]
        verify: bool,
    },
    /// Alternating-sum rank functions of a flag and their duality identities.
    Flag {
        #[arg(required = true, num_args = 1..)]
        members: Vec<String>,
    },
    #[command(subcommand)]
    Wiretap(Wiretap),
    /// Run the brute-force verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sampled instances per claim for codes too large to cover
        /// exhaustively.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Codes for the lemma suite (default: both example codes).
        #[arg(long = "code")]
        codes: Vec<String>,
        /// Known set whose overcode is always checked.
        #[arg(long)]
        known: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Wiretap {
    /// Encode a message as a random word of its coset code.
    Encode {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        message: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Recover the message from a transmitted word.
    Decode {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        word: String,
    },
    /// What an adversary knowing `m_X = M` learns from tapping `Y`.
    Analyze {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value = "")]
        known: String,
        #[arg(long)]
        values: Option<String>,
        #[arg(long)]
        taps: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        verify: bool,
    },
    /// Uncertainty `Δ_μ` for every number of tapped symbols.
    Table {
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value = "")]
        known: String,
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct SchemeArgs {
    #[arg(long, default_value = "non-pappus-folded")]
    code: String,
    /// Basis of the code's matroid (default: greedy from the last coordinate).
    #[arg(long)]
    basis: Option<String>,
    /// `mod` for addition modulo q, or a Latin square file.
    #[arg(long, default_value = "mod")]
    phi: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Lemmas,
    Demimatroid,
    All,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Verification(String),
}

impl From<CorpusError> for CliError {
    fn from(e: CorpusError) -> Self {
        match e {
            CorpusError::Core(c) => c.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Consistency(_) => CliError::Verification(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<oracle::OracleError> for CliError {
    fn from(e: oracle::OracleError) -> Self {
        match e {
            oracle::OracleError::Infeasible { .. } => CliError::Input(e.to_string()),
            oracle::OracleError::Core(c) => c.into(),
            e => CliError::Verification(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Text lines and JSON fields built side by side.
struct Report {
    lines: Vec<String>,
    json: Map<String, Value>,
    warnings: Vec<String>,
    ok: bool,
}

impl Report {
    fn new(echo: &str) -> Self {
        let mut json = Map::new();
        json.insert("command".into(), json!(echo));
        Self { lines: vec![format!("# {echo}")], json, warnings: Vec::new(), ok: true }
    }

    fn input(&mut self, file: &CodeFile) {
        let digest = file.digest();
        self.lines.push(format!("# input {} sha256:{}", file.label(), &digest[..16]));
        let inputs = self.json.entry("inputs").or_insert_with(|| json!([]));
        inputs.as_array_mut().unwrap().push(json!({"name": file.label(), "sha256": digest}));
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn field(&mut self, key: &str, text: impl std::fmt::Display, value: Value) {
        self.lines.push(format!("{key}: {text}"));
        self.json.insert(key.replace(' ', "_"), value);
    }

    fn set(&mut self, key: &str, value: Value) {
        self.json.insert(key.into(), value);
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.lines.push(format!("check {name}: {}", if ok { "pass" } else { "FAIL" }));
        let checks = self.json.entry("checks").or_insert_with(|| json!({}));
        checks.as_object_mut().unwrap().insert(name.into(), json!(ok));
        self.ok &= ok;
    }
}

fn subset(n: usize, text: &str) -> CliResult<GroundSubset> {
    GroundSubset::parse(n, text).map_err(|e| CliError::Input(format!("subset `{text}`: {e}")))
}

fn elements(x: GroundSubset) -> Value {
    json!(x.elements())
}

fn word(q: usize, w: &[u8]) -> String {
    corpus::format_word(q, w)
}

fn parse_symbols(q: usize, n: usize, text: &str, what: &str) -> CliResult<Vec<u8>> {
    corpus::parse_word(q, n, text).map_err(|(field, m)| match field {
        Some(f) => CliError::Input(format!("{what} `{text}`, position {f}: {m}")),
        None => CliError::Input(format!("{what} `{text}`: {m}")),
    })
}

fn load_code(report: &mut Report, spec: &str) -> CliResult<CodeFile> {
    let loaded = corpus::resolve(spec)?;
    report.warnings.extend(loaded.warnings.iter().map(|w| format!("{spec}: {w}")));
    report.input(&loaded.value);
    Ok(loaded.value)
}

/// A code (whose matroid is used) or a rank-table file.
fn load_rank(report: &mut Report, spec: &str) -> CliResult<RankFunction> {
    if let Ok(text) = std::fs::read_to_string(spec) {
        if text.trim_start().starts_with(corpus::RANK_MAGIC) {
            let loaded = corpus::parse_rank_table(&text)?;
            report.warnings.extend(loaded.warnings.iter().map(|w| format!("{spec}: {w}")));
            let digest = corpus::sha256_hex(text.as_bytes());
            report.lines.push(format!("# input {spec} sha256:{}", &digest[..16]));
            return Ok(loaded.value);
        }
    }
    let code = load_code(report, spec)?;
    Ok(code.code.matroid()?)
}

fn export(report: &mut Report, spec: &str, output: &Path) -> CliResult<()> {
    let file = load_code(report, spec)?;
    corpus::save(&file, output)?;
    report.field("words", file.code.len(), json!(file.code.len()));
    report.field("written", output.display(), json!(output.display().to_string()));
    Ok(())
}

fn build_scheme(report: &mut Report, args: &SchemeArgs) -> CliResult<WiretapScheme> {
    let file = load_code(report, &args.code)?;
    let code = file.code;
    let n = code.n();
    let matroid = code.matroid()?;
    let basis = match &args.basis {
        Some(b) => subset(n, b)?,
        None => trailing_basis(&matroid),
    };
    let (phi, phi_label) = if args.phi == "mod" {
        (LatinSquare::cyclic(code.q())?, "mod".to_string())
    } else {
        let loaded = corpus::load_latin(Path::new(&args.phi))?;
        report.warnings.extend(loaded.warnings.iter().map(|w| format!("{}: {w}", args.phi)));
        let digest = corpus::sha256_hex(corpus::render_latin(&loaded.value).as_bytes());
        report.lines.push(format!("# input {} sha256:{}", args.phi, &digest[..16]));
        (loaded.value, args.phi.clone())
    };
    let scheme = WiretapScheme::new(code, basis, phi)?;
    report.field(
        "scheme",
        format!(
            "q={} n={} k={} basis={} phi={}",
            scheme.q(),
            scheme.n(),
            scheme.k(),
            scheme.basis(),
            phi_label
        ),
        json!({"q": scheme.q(), "n": scheme.n(), "k": scheme.k(), "basis": elements(scheme.basis()), "phi": phi_label}),
    );
    Ok(scheme)
}

fn known_values(scheme: &WiretapScheme, known: GroundSubset, values: Option<&str>) -> CliResult<Vec<u8>> {
    match values {
        Some(v) => parse_symbols(scheme.q(), known.len(), v, "values"),
        None => Ok(vec![0; known.len()]),
    }
}

fn by_size(f: &RankFunction) -> String {
    let n = f.n();
    (0..=n)
        .map(|k| {
            aawire_core::subsets_of_size(n, k).map(|x| f.get(x).to_string()).collect::<Vec<_>>().join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn rank_json(f: &RankFunction) -> Value {
    json!(subsets_by_size(f.n()).map(|x| json!([x.elements(), f.get(x)])).collect::<Vec<_>>())
}

fn rank_lines(report: &mut Report, key: &str, f: &RankFunction) {
    report.line(format!("{key} by size: {}", by_size(f)));
    report.set(key, rank_json(f));
}

fn check(report: &mut Report, spec: &str, verify: bool) -> CliResult<()> {
    let file = load_code(report, spec)?;
    let c = &file.code;
    report.field("code", file.label(), json!(file.label()));
    report.field("q", c.q(), json!(c.q()));
    report.field("n", c.n(), json!(c.n()));
    report.field("words", c.len(), json!(c.len()));
    let r = c.verify_almost_affine();
    report.field("almost affine", if r.is_almost_affine() { "yes" } else { "no" }, json!(r.is_almost_affine()));
    match r.dimension() {
        Some(k) => report.field("dimension", k, json!(k)),
        None => report.field("dimension", "none", Value::Null),
    }
    if let (Some(x), Some(size)) = (r.witness(), r.witness_size()) {
        report.field(
            "witness",
            format!("X = {x}, |C_X| = {size}"),
            json!({"subset": x.elements(), "size": size}),
        );
    }
    report.ok &= r.is_almost_affine();
    if verify && r.is_almost_affine() {
        let m = c.matroid()?;
        report.check("matroid axioms", m.is_matroid());
        report.check("rank of E equals dimension", Some(m.rank() as u32) == r.dimension());
    }
    Ok(())
}

fn matroid(report: &mut Report, spec: &str, bases: bool, dependents: Option<usize>) -> CliResult<()> {
    let file = load_code(report, spec)?;
    let f = file.code.matroid()?;
    let n = f.n();
    report.field("rank", f.rank(), json!(f.rank()));
    if bases {
        let b = f.bases();
        report.field("bases", b.len(), json!(b.iter().map(|x| x.elements()).collect::<Vec<_>>()));
        for x in b {
            report.line(x.to_string());
        }
    } else if let Some(k) = dependents {
        if k > n {
            return Err(CliError::Input(format!("--dependents {k} exceeds n = {n}")));
        }
        let d = f.dependent_sets(k);
        report.line(format!("dependent {k}-sets: {}", d.len()));
        report.set("dependent_size", json!(k));
        report.set("dependent_sets", json!(d.iter().map(|x| x.elements()).collect::<Vec<_>>()));
        for x in d {
            report.line(x.to_string());
        }
    } else {
        rank_lines(report, "ranks", &f);
        for x in subsets_by_size(n) {
            report.line(format!("{x} {}", f.get(x)));
        }
    }
    report.check("matroid axioms", f.is_matroid());
    Ok(())
}

fn dual(report: &mut Report, spec: &str, supplement: bool) -> CliResult<()> {
    let f = load_rank(report, spec)?;
    if let Err(v) = f.check_demimatroid() {
        return Err(CliError::Input(format!("{spec} is not a demi-matroid: {v}")));
    }
    let g = if supplement { f.supplement_dual() } else { f.dual() };
    report.field("rank", g.rank(), json!(g.rank()));
    rank_lines(report, if supplement { "supplement dual" } else { "dual" }, &g);
    report.check("demi-matroid", g.is_demimatroid());
    let back = if supplement { g.supplement_dual() } else { g.dual() };
    report.check("involution", back == f);
    report.line("");
    for l in corpus::render_rank_table(&g).lines() {
        report.line(l);
    }
    Ok(())
}

fn show_profile(report: &mut Report, f: &RankFunction) -> CliResult<()> {
    let p = profiles(f)?;
    let sigma: Vec<String> = p.sigma().iter().map(u32::to_string).collect();
    report.field("rank", p.rank(), json!(p.rank()));
    report.field("sigma", sigma.join(","), json!(p.sigma()));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn profiles_cmd(
    report: &mut Report,
    source: &str,
    pair: Option<&str>,
    scheme_args: &SchemeArgs,
    known: &str,
    values: Option<&str>,
    verify: bool,
) -> CliResult<()> {
    match pair {
        None => {
            let f = load_rank(report, source)?;
            show_profile(report, &f)
        }
        Some("overcode") => {
            let args = SchemeArgs { code: source.to_string(), ..scheme_args.clone() };
            let s = &build_scheme(report, &args)?;
            let x = subset(s.n(), known)?;
            let m = known_values(s, x, values)?;
            report.field("known", format!("X={x} M={}", word(s.q(), &m)), json!({"set": elements(x), "values": m}));
            let rho = s.rho_table(x)?;
            show_profile(report, &rho)?;
            if verify {
                let d = s.overcode(x, &m)?;
                report.check("materialized overcode rank table", d.matroid == s.overcode_rank_table(x)?);
            }
            Ok(())
        }
        Some(other) => {
            let f1 = load_rank(report, source)?;
            let f2 = load_rank(report, other)?;
            if f1.n() != f2.n() {
                return Err(CliError::Input(format!("ground sets differ: {} vs {}", f1.n(), f2.n())));
            }
            Flag::new(vec![f1.clone(), f2.clone()])?;
            match pair_rho(&f1, &f2)? {
                PairRho::Demimatroid(rho) => show_profile(report, &rho),
                PairRho::Rejected(r) => {
                    let (x, e) = r.inclusion_witness;
                    report.field(
                        "not a demi-matroid",
                        format!("({x},{}) essential for the first but not the second", e + 1),
                        json!({"set": x.elements(), "element": e + 1}),
                    );
                    report.ok = false;
                    Ok(())
                }
            }
        }
    }
}

fn flag(report: &mut Report, members: &[String]) -> CliResult<()> {
    let tables = members.iter().map(|m| load_rank(report, m)).collect::<CliResult<Vec<_>>>()?;
    let flag = Flag::new(tables)?;
    let m = flag.len();
    report.field("length", m, json!(m));
    let chain = flag.check_essential_chain();
    match &chain {
        Ok(()) => report.field("essential sets nested", "yes", json!(true)),
        Err((j, x, e)) => report.field(
            "essential sets nested",
            format!("no: ({x},{}) essential for member {} but not {}", e + 1, j + 1, j + 2),
            json!(false),
        ),
    }
    let rho = aawire_core::flag_rho(&flag)?;
    let duals = aawire_core::flag_duals(&flag)?;
    let rho_bar = rho.supplement_dual();
    rank_lines(report, "rho", &rho);
    rank_lines(report, "eta", &duals.eta);
    rank_lines(report, "theta", &duals.theta);
    rank_lines(report, "pi", &duals.pi);
    let (eta_expected, pi_expected, parity) = if m % 2 == 0 {
        (rho_bar.clone(), rho.clone(), "even")
    } else {
        (rho.dual(), rho_bar.dual(), "odd")
    };
    report.check("theta = sdual(rho)", duals.theta == rho_bar);
    report.check(
        &format!("eta = {} ({parity} length)", if m % 2 == 0 { "sdual(rho)" } else { "dual(rho)" }),
        duals.eta == eta_expected,
    );
    report.check(
        &format!("pi = {} ({parity} length)", if m % 2 == 0 { "rho" } else { "dual(sdual(rho))" }),
        duals.pi == pi_expected,
    );
    if chain.is_ok() {
        for (name, f) in [("rho", &rho), ("eta", &duals.eta), ("theta", &duals.theta), ("pi", &duals.pi)] {
            report.check(&format!("{name} is a demi-matroid"), f.is_demimatroid());
        }
    }
    Ok(())
}

fn encode(report: &mut Report, args: &SchemeArgs, message: &str, seed: u64, count: usize) -> CliResult<()> {
    let s = &build_scheme(report, args)?;
    let m = Message(parse_symbols(s.q(), s.message_len(), message, "message")?);
    report.field("message", word(s.q(), m.symbols()), json!(m.symbols()));
    report.field("seed", seed, json!(seed));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(s.encode(&m, &mut rng)?);
    }
    report.set("transmissions", json!(out));
    for w in &out {
        report.line(format!("transmission: {}", word(s.q(), w)));
    }
    report.check("decodes back", out.iter().all(|w| s.decode(w).ok().as_ref() == Some(&m)));
    Ok(())
}

fn decode(report: &mut Report, args: &SchemeArgs, text: &str) -> CliResult<()> {
    let s = &build_scheme(report, args)?;
    let w = parse_symbols(s.q(), s.n(), text, "word")?;
    let m = s.decode(&w)?;
    report.field("word", word(s.q(), &w), json!(w));
    report.field("message", word(s.q(), m.symbols()), json!(m.symbols()));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn analyze(
    report: &mut Report,
    args: &SchemeArgs,
    known: &str,
    values: Option<&str>,
    taps: &str,
    seed: u64,
    verify: bool,
) -> CliResult<()> {
    let s = &build_scheme(report, args)?;
    let x = subset(s.n(), known)?;
    let m = known_values(s, x, values)?;
    let y = subset(s.n(), taps)?;
    let scenario = s.scenario(x, m.clone(), y)?;
    let a = s.analyze(&scenario)?;
    report.field("known", format!("X={x} M={}", word(s.q(), &m)), json!({"set": elements(x), "values": m}));
    report.field("taps", format!("Y={y} mu={}", y.len()), json!({"set": elements(y), "mu": y.len()}));
    report.field("overcode rank", a.overcode_rank, json!(a.overcode_rank));
    report.field("code rank", a.code_rank, json!(a.code_rank));
    report.field("extra symbols", a.extra, json!(a.extra));
    let bits = a.entropy as f64 * (s.q() as f64).log2();
    report.field(
        "entropy",
        format!("{} symbols ({bits:.6} bits)", a.entropy),
        json!({"symbols": a.entropy, "bits": format!("{bits:.6}")}),
    );
    if verify {
        match s.overcode(x, &m) {
            Ok(d) => report.check("materialized overcode rank", d.matroid.get(y) as u32 == a.overcode_rank),
            Err(CoreError::Infeasible { what, size, limit }) => {
                report.line(format!("check materialized overcode rank: skipped ({what}: {size} > {limit})"))
            }
            Err(e) => return Err(e.into()),
        }
        // a transmission of a random message with m_X = M
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut message: Vec<u8> = (0..s.message_len()).map(|_| rand::Rng::gen_range(&mut rng, 0..s.q()) as u8).collect();
        for (p, v) in s.message_positions(x).into_iter().zip(&m) {
            message[p] = *v;
        }
        let sent = s.encode(&Message(message), &mut rng)?;
        match s.count_compatible(x, &m, &sent, y) {
            Ok(count) => {
                let expected = (s.q() as u64).pow(s.message_len() as u32 - x.len() as u32 - a.extra);
                report.line(format!("compatible messages for w={}: {count}", word(s.q(), &sent)));
                report.set("compatible_messages", json!(count));
                report.check("compatible count", count == expected);
            }
            Err(CoreError::Infeasible { what, size, limit }) => {
                report.line(format!("check compatible count: skipped ({what}: {size} > {limit})"))
            }
            Err(e) => return Err(e.into()),
        }
        match oracle::oracle_entropy(s, x, &m, y) {
            Ok(e) => {
                report.field("oracle entropy", e.entropy, json!(e.entropy.to_string()));
                report.check("oracle entropy", e.entropy == num_rational::Ratio::from_integer(a.entropy as u64));
            }
            Err(oracle::OracleError::Infeasible { what, size, limit }) => {
                report.line(format!("oracle entropy: skipped ({what}: {size} > {limit})"));
                report.set("oracle_entropy", Value::Null);
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn table(report: &mut Report, args: &SchemeArgs, known: &str, verify: bool) -> CliResult<()> {
    let s = &build_scheme(report, args)?;
    let x = subset(s.n(), known)?;
    let t = s.uncertainty_table(x)?;
    report.field("known", x, elements(x));
    let sigma: Vec<String> = t.profile.sigma().iter().map(u32::to_string).collect();
    report.field("sigma", sigma.join(","), json!(t.profile.sigma()));
    let steps = t.steps();
    let steps_text: Vec<String> = steps.iter().map(usize::to_string).collect();
    report.field("steps at mu", steps_text.join(","), json!(steps));
    report.line("mu delta equivocation j");
    let mut rows = Vec::new();
    for r in &t.rows {
        let e = s.message_len() as u32 - r.delta;
        report.line(format!("{} {} {} {}", r.mu, r.delta, e, r.level));
        rows.push(json!({"mu": r.mu, "delta": r.delta, "equivocation": e, "j": r.level}));
    }
    report.set("rows", json!(rows));
    if verify {
        let m = vec![0; x.len()];
        let d = s.overcode(x, &m)?;
        let rho = d.matroid.minus(s.matroid())?;
        let n = s.n();
        let ok = t.rows.iter().all(|r| {
            let best = aawire_core::subsets_of_size(n, r.mu).map(|y| rho.get(y)).max().unwrap();
            r.delta as i32 == x.len() as i32 + best
        });
        report.check("delta from materialized overcode", ok);
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    report: &mut Report,
    suite: Suite,
    trials: usize,
    seed: u64,
    samples: usize,
    codes: &[String],
    known: Option<&str>,
    timings: bool,
) -> CliResult<()> {
    let mut all: Vec<(String, VerificationReport)> = Vec::new();
    if matches!(suite, Suite::Lemmas | Suite::All) {
        let codes: Vec<String> = if codes.is_empty() {
            vec!["sa-example".into(), "non-pappus-folded".into()]
        } else {
            codes.to_vec()
        };
        for spec in &codes {
            let args = SchemeArgs { code: spec.clone(), basis: None, phi: "mod".into() };
            let s = &build_scheme(report, &args)?;
            let mut options = SuiteOptions { samples, seed, ..SuiteOptions::default() };
            if let Some(k) = known {
                options.pinned_known.push(subset(s.n(), k)?);
            }
            for r in oracle::verify_lemma_suite(s, &options) {
                all.push((format!("lemmas {spec}"), r));
            }
        }
    }
    if matches!(suite, Suite::Demimatroid | Suite::All) {
        for r in oracle::verify_demimatroid_theorems(trials, seed) {
            all.push(("demimatroid".into(), r));
        }
    }
    let mut json_reports = Vec::new();
    for (group, r) in &all {
        let mut line = format!("[{group}] {r}");
        if timings {
            line.push_str(&format!(" [{:.3} s]", r.elapsed.as_secs_f64()));
        }
        report.line(line);
        let mut v = json!({
            "group": group,
            "claim": r.claim,
            "parameters": r.parameters,
            "closed_form": r.closed_form,
            "enumerated": r.enumerated,
            "outcome": r.outcome.label(),
        });
        if let oracle::Outcome::Skipped(reason) = &r.outcome {
            v["reason"] = json!(reason);
        }
        if timings {
            v["elapsed_seconds"] = json!(r.elapsed.as_secs_f64());
        }
        json_reports.push(v);
    }
    let reports: Vec<VerificationReport> = all.into_iter().map(|(_, r)| r).collect();
    let (pass, fail, skip) = oracle::summary(&reports);
    report.field(
        "summary",
        format!("{pass} passed, {fail} failed, {skip} skipped"),
        json!({"passed": pass, "failed": fail, "skipped": skip}),
    );
    report.set("reports", json!(json_reports));
    report.ok &= fail == 0;
    Ok(())
}

fn echo(args: &[OsString]) -> String {
    let mut parts = vec!["aawire".to_string()];
    parts.extend(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()));
    parts.join(" ")
}

/// Runs one invocation and captures its output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    let mut report = Report::new(&echo(&args));
    let result = match &cli.command {
        Command::Check { code, verify } => check(&mut report, code, *verify),
        Command::Matroid { code, bases, ranks: _, dependents } => matroid(&mut report, code, *bases, *dependents),
        Command::Export { code, output } => export(&mut report, code, output),
        Command::Dual { source } => dual(&mut report, source, false),
        Command::Sdual { source } => dual(&mut report, source, true),
        Command::Profiles { source, pair, scheme, known, values, verify } => {
            profiles_cmd(&mut report, source, pair.as_deref(), scheme, known, values.as_deref(), *verify)
        }
        Command::Flag { members } => flag(&mut report, members),
        Command::Wiretap(Wiretap::Encode { scheme, message, seed, count }) => {
            encode(&mut report, scheme, message, *seed, *count)
        }
        Command::Wiretap(Wiretap::Decode { scheme, word }) => decode(&mut report, scheme, word),
        Command::Wiretap(Wiretap::Analyze { scheme, known, values, taps, seed, verify }) => {
            analyze(&mut report, scheme, known, values.as_deref(), taps, *seed, *verify)
        }
        Command::Wiretap(Wiretap::Table { scheme, known, verify }) => table(&mut report, scheme, known, *verify),
        Command::Verify { suite, trials, seed, samples, codes, known } => {
            verify_cmd(&mut report, *suite, *trials, *seed, *samples, codes, known.as_deref(), cli.timings)
        }
    };
    let mut stderr = String::new();
    for w in &report.warnings {
        stderr.push_str(&format!("warning: {w}\n"));
    }
    let code = match result {
        Ok(()) if report.ok => 0,
        Ok(()) => 1,
        Err(CliError::Input(e)) => {
            stderr.push_str(&format!("error: {e}\n"));
            return Outcome { code: 2, stdout: String::new(), stderr };
        }
        Err(CliError::Verification(e)) => {
            stderr.push_str(&format!("verification failed: {e}\n"));
            report.ok = false;
            1
        }
    };
    if cli.timings {
        let secs = start.elapsed().as_secs_f64();
        report.lines.push(format!("elapsed: {secs:.3} s"));
        report.json.insert("elapsed_seconds".into(), json!(secs));
    }
    report.json.insert("ok".into(), json!(report.ok));
    let stdout = if cli.json {
        let mut s = serde_json::to_string_pretty(&Value::Object(report.json)).expect("serializable");
        s.push('\n');
        s
    } else {
        let mut s = report.lines.join("\n");
        s.push('\n');
        s
    };
    Outcome { code, stdout, stderr }
}

/// Used by `main`: runs and writes to the process streams.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
