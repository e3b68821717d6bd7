//! Text formats for codes, rank tables and Latin squares, plus the built-in
//! example codes.
//!
//! A code file is a magic line, `key value` header lines and one codeword per
//! line after `words`:
//!
//! ```text
//! aawire-code 1
//! name sa-example
//! q 4
//! n 3
//! count 16
//! words
//! 000
//! 011
//! ...
//! ```
//!
//! See `docs/formats.md` for the full grammar.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use aawire_core::{all_subsets, Alphabet, BlockCode, GroundSubset, LatinSquare, RankFunction};
use sha2::{Digest, Sha256};

pub const CODE_MAGIC: &str = "aawire-code 1";
pub const RANK_MAGIC: &str = "aawire-rank 1";
pub const LATIN_MAGIC: &str = "aawire-latin 1";

/// Largest code `builtin` will construct.
pub const BUILTIN_LIMIT: usize = 1 << 24;

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("line {line}{}: {message}", field_suffix(*.field))]
    Parse { line: usize, field: Option<usize>, message: String },
    #[error(transparent)]
    Core(#[from] aawire_core::Error),
    #[error("{}: {source}", .path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("unknown built-in code `{0}`")]
    UnknownBuiltin(String),
}

fn field_suffix(field: Option<usize>) -> String {
    field.map(|f| format!(", field {f}")).unwrap_or_default()
}

pub type Result<T, E = CorpusError> = std::result::Result<T, E>;

fn parse_err(line: usize, field: Option<usize>, message: impl Into<String>) -> CorpusError {
    CorpusError::Parse { line, field, message: message.into() }
}

/// A parsed value together with the non-fatal problems found on the way.
#[derive(Debug, Clone)]
pub struct Loaded<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

/// A code with its optional name and note.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub name: Option<String>,
    pub note: Option<String>,
    pub code: BlockCode,
}

impl CodeFile {
    pub fn new(code: BlockCode) -> Self {
        Self { name: None, note: None, code }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    /// Display label: the name, or `unnamed`.
    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("unnamed")
    }

    /// Hex SHA-256 of the canonical serialization.
    pub fn digest(&self) -> String {
        sha256_hex(render_code(self).as_bytes())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Formats a word: digit string for `q <= 10`, otherwise space separated.
pub fn format_word(q: usize, w: &[u8]) -> String {
    if w.is_empty() {
        return "-".to_string();
    }
    if q <= 10 {
        w.iter().map(|&s| char::from(b'0' + s)).collect()
    } else {
        w.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// Parses a word written either as a digit string (`q <= 10`) or as symbols
/// separated by commas or whitespace. Errors carry the 1-based coordinate.
pub fn parse_word(q: usize, n: usize, text: &str) -> std::result::Result<Vec<u8>, (Option<usize>, String)> {
    let text = text.trim();
    if text == "-" || (text.is_empty() && n == 0) {
        return if n == 0 { Ok(Vec::new()) } else { Err((None, format!("expected {n} symbols, got 0"))) };
    }
    let parts: Vec<&str> = if text.contains(|c: char| c == ',' || c.is_whitespace()) {
        text.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect()
    } else if q <= 10 {
        (0..text.len()).map(|i| &text[i..i + 1]).collect()
    } else {
        vec![text]
    };
    let mut word = Vec::with_capacity(parts.len());
    for (i, p) in parts.iter().enumerate() {
        let s: usize = p
            .parse()
            .map_err(|_| (Some(i + 1), format!("`{p}` is not a symbol")))?;
        if s >= q {
            return Err((Some(i + 1), format!("symbol {s} at coordinate {} is outside 0..{}", i + 1, q - 1)));
        }
        word.push(s as u8);
    }
    if word.len() != n {
        return Err((None, format!("expected {n} symbols, got {}", word.len())));
    }
    Ok(word)
}

/// Significant lines: number, text. Comments and blank lines are dropped and
/// reported.
fn significant_lines(text: &str, warnings: &mut Vec<String>) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut comments = 0;
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if raw.contains('#') {
            comments += 1;
        }
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        out.push((i + 1, body.to_string()));
    }
    if comments > 0 {
        warnings.push(format!("ignored {comments} comment line(s)"));
    }
    out
}

fn expect_magic(lines: &[(usize, String)], magic: &str) -> Result<()> {
    match lines.first() {
        Some((_, l)) if l.split_whitespace().collect::<Vec<_>>().join(" ") == magic => Ok(()),
        Some((n, l)) => Err(parse_err(*n, None, format!("expected `{magic}`, found `{l}`"))),
        None => Err(parse_err(1, None, format!("empty file, expected `{magic}`"))),
    }
}

fn parse_number(line: usize, key: &str, value: &str) -> Result<usize> {
    value
        .parse()
        .map_err(|_| parse_err(line, Some(2), format!("`{key}` needs a number, found `{value}`")))
}

pub fn parse_code(text: &str) -> Result<Loaded<CodeFile>> {
    let mut warnings = Vec::new();
    let lines = significant_lines(text, &mut warnings);
    expect_magic(&lines, CODE_MAGIC)?;
    let mut name = None;
    let mut note = None;
    let mut q = None;
    let mut n = None;
    let mut count = None;
    let mut rest = lines.len();
    for (idx, (line, body)) in lines.iter().enumerate().skip(1) {
        if body == "words" {
            rest = idx + 1;
            break;
        }
        let (key, value) = body.split_once(char::is_whitespace).unwrap_or((body.as_str(), ""));
        let value = value.trim();
        match key {
            "name" => name = Some(value.to_string()),
            "note" => note = Some(value.to_string()),
            "q" => q = Some(parse_number(*line, key, value)?),
            "n" => n = Some(parse_number(*line, key, value)?),
            "count" => count = Some((*line, parse_number(*line, key, value)?)),
            _ => return Err(parse_err(*line, Some(1), format!("unknown header key `{key}`"))),
        }
        if idx + 1 == lines.len() {
            return Err(parse_err(*line, None, "missing `words` line"));
        }
    }
    if lines.len() == 1 {
        return Err(parse_err(lines[0].0, None, "missing header"));
    }
    let header_end = lines[rest.saturating_sub(1)].0;
    let q = q.ok_or_else(|| parse_err(header_end, None, "missing `q`"))?;
    let n = n.ok_or_else(|| parse_err(header_end, None, "missing `n`"))?;
    let alphabet = Alphabet::new(q)?;
    aawire_core::GroundSubset::new(n, 0)?;

    let mut rows: Vec<(Vec<u8>, usize)> = Vec::new();
    for (line, body) in &lines[rest..] {
        let w = parse_word(q, n, body).map_err(|(f, m)| parse_err(*line, f, m))?;
        rows.push((w, *line));
    }
    if let Some((line, c)) = count {
        if c != rows.len() {
            return Err(parse_err(line, Some(2), format!("count says {c} words, file has {}", rows.len())));
        }
    } else {
        warnings.push("no `count` header".to_string());
    }
    if rows.windows(2).any(|w| w[0].0 > w[1].0) {
        warnings.push("codewords are not sorted; canonicalized".to_string());
    }
    let mut sorted = rows.clone();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            let (a, b) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
            return Err(parse_err(b, None, format!("duplicate codeword (first on line {a})")));
        }
    }
    if rows.is_empty() {
        return Err(parse_err(header_end, None, "a code needs at least one word"));
    }
    let code = BlockCode::from_words(alphabet, n, sorted.into_iter().map(|(w, _)| w))?;
    let file = CodeFile { name, note, code };
    if warnings.is_empty() && render_code(&file) != text {
        warnings.push("whitespace or layout is not canonical".to_string());
    }
    Ok(Loaded { value: file, warnings })
}

/// Canonical serialization: fixed header order, sorted rows, single spaces,
/// trailing newline.
pub fn render_code(file: &CodeFile) -> String {
    let c = &file.code;
    let mut s = String::new();
    s.push_str(CODE_MAGIC);
    s.push('\n');
    if let Some(name) = &file.name {
        let _ = writeln!(s, "name {name}");
    }
    if let Some(note) = &file.note {
        let _ = writeln!(s, "note {note}");
    }
    let _ = writeln!(s, "q {}\nn {}\ncount {}\nwords", c.q(), c.n(), c.len());
    for w in c.words() {
        s.push_str(&format_word(c.q(), w));
        s.push('\n');
    }
    s
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })
}

pub fn load(path: &Path) -> Result<Loaded<CodeFile>> {
    parse_code(&read(path)?)
}

pub fn save(file: &CodeFile, path: &Path) -> Result<()> {
    std::fs::write(path, render_code(file)).map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })
}

/// Rank tables list every subset with its value, in mask order.
pub fn render_rank_table(f: &RankFunction) -> String {
    let mut s = format!("{RANK_MAGIC}\nn {}\n", f.n());
    for x in all_subsets(f.n()) {
        let _ = writeln!(s, "{x} {}", f.get(x));
    }
    s
}

pub fn parse_rank_table(text: &str) -> Result<Loaded<RankFunction>> {
    let mut warnings = Vec::new();
    let lines = significant_lines(text, &mut warnings);
    expect_magic(&lines, RANK_MAGIC)?;
    let (line, body) = lines.get(1).ok_or_else(|| parse_err(lines[0].0, None, "missing `n`"))?;
    let n = match body.split_once(char::is_whitespace) {
        Some(("n", v)) => parse_number(*line, "n", v.trim())?,
        _ => return Err(parse_err(*line, Some(1), "expected `n <size>`")),
    };
    GroundSubset::new(n, 0)?;
    let mut values: Vec<Option<i32>> = vec![None; 1 << n];
    let mut previous = None;
    let mut ordered = true;
    for (line, body) in &lines[2..] {
        let (set, value) = body
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| parse_err(*line, None, "expected `<subset> <value>`"))?;
        let x = GroundSubset::parse(n, set).map_err(|e| parse_err(*line, Some(1), e.to_string()))?;
        let v: i32 = value
            .trim()
            .parse()
            .map_err(|_| parse_err(*line, Some(2), format!("`{value}` is not an integer")))?;
        if values[x.mask() as usize].replace(v).is_some() {
            return Err(parse_err(*line, Some(1), format!("{x} listed twice")));
        }
        if previous.is_some_and(|p| p > x.mask()) {
            ordered = false;
        }
        previous = Some(x.mask());
    }
    if !ordered {
        warnings.push("subsets are not in canonical order".to_string());
    }
    let last = lines.last().map_or(1, |l| l.0);
    let values = values
        .into_iter()
        .enumerate()
        .map(|(m, v)| {
            v.ok_or_else(|| {
                parse_err(last, None, format!("no value for {}", GroundSubset::new(n, m as u32).unwrap()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Loaded { value: RankFunction::from_values(n, values)?, warnings })
}

pub fn render_latin(phi: &LatinSquare) -> String {
    let q = phi.q();
    let mut s = format!("{LATIN_MAGIC}\nq {q}\n");
    for row in phi.table().chunks(q) {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_latin(text: &str) -> Result<Loaded<LatinSquare>> {
    let mut warnings = Vec::new();
    let lines = significant_lines(text, &mut warnings);
    expect_magic(&lines, LATIN_MAGIC)?;
    let (line, body) = lines.get(1).ok_or_else(|| parse_err(lines[0].0, None, "missing `q`"))?;
    let q = match body.split_once(char::is_whitespace) {
        Some(("q", v)) => parse_number(*line, "q", v.trim())?,
        _ => return Err(parse_err(*line, Some(1), "expected `q <size>`")),
    };
    Alphabet::new(q)?;
    if lines.len() != q + 2 {
        let at = lines.last().map_or(1, |l| l.0);
        return Err(parse_err(at, None, format!("expected {q} rows, found {}", lines.len() - 2)));
    }
    let mut table = Vec::with_capacity(q * q);
    for (line, body) in &lines[2..] {
        let row = parse_word(q, q, body).map_err(|(f, m)| parse_err(*line, f, m))?;
        table.extend(row);
    }
    Ok(Loaded { value: LatinSquare::new(q, table)?, warnings })
}

pub fn load_latin(path: &Path) -> Result<Loaded<LatinSquare>> {
    parse_latin(&read(path)?)
}

pub fn load_rank_table(path: &Path) -> Result<Loaded<RankFunction>> {
    parse_rank_table(&read(path)?)
}

/// Row span over the prime field `F_p`.
pub fn linear_span(p: usize, n: usize, rows: &[Vec<u8>]) -> Result<BlockCode> {
    if !(2..=251).contains(&p) || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(aawire_core::Error::Parameter(format!("{p} is not a supported prime")).into());
    }
    let mut words: Vec<Vec<u8>> = vec![vec![0; n]];
    for row in rows {
        if row.len() != n {
            return Err(aawire_core::Error::LengthMismatch { expected: n, got: row.len() }.into());
        }
        if words.iter().any(|w| w == row) {
            continue;
        }
        // the span of the previous rows is a subgroup; add the cosets a·row + span
        let mut next = Vec::with_capacity(words.len() * p);
        for a in 0..p {
            for w in &words {
                next.push(
                    w.iter()
                        .zip(row)
                        .map(|(&x, &g)| ((x as usize + a * g as usize) % p) as u8)
                        .collect(),
                );
            }
        }
        next.sort();
        next.dedup();
        if next.len() > BUILTIN_LIMIT {
            return Err(aawire_core::Error::Infeasible {
                what: "row span",
                size: next.len() as u128,
                limit: BUILTIN_LIMIT as u128,
            }
            .into());
        }
        words = next;
    }
    Ok(BlockCode::from_words(Alphabet::new(p)?, n, words)?)
}

/// Folds coordinate pairs `(x_{2i-1}, x_{2i})` into the symbol `p·x_{2i-1} + x_{2i}`.
pub fn fold_pairs(code: &BlockCode) -> Result<BlockCode> {
    let p = code.q();
    if code.n() % 2 != 0 || p * p > 256 {
        return Err(aawire_core::Error::Parameter(format!(
            "cannot fold length {} over q = {p}",
            code.n()
        ))
        .into());
    }
    let words = code
        .words()
        .map(|w| w.chunks(2).map(|c| (p * c[0] as usize + c[1] as usize) as u8).collect::<Vec<u8>>());
    Ok(BlockCode::from_words(Alphabet::new(p * p)?, code.n() / 2, words)?)
}

/// Generator of the ternary length-18 code whose folding has the non-Pappus
/// matroid. Row 4, columns 13 and 14, read `1 2`; with `2 1` there the folded
/// code is not almost affine (`|C_{2,4,7}| = 3^5`).
pub const NON_PAPPUS_GENERATOR: &str = "\
1 0 1 0 0 0 1 0 0 0 1 0 1 0 1 0 0 0
0 1 0 1 0 0 0 1 0 0 0 1 0 1 0 1 0 0
0 0 0 0 0 0 1 0 1 0 2 1 0 1 1 0 1 0
0 0 0 0 0 0 0 2 0 1 2 0 1 2 0 2 0 1
0 0 1 0 1 0 0 1 0 0 0 1 0 0 1 1 1 0
0 0 0 1 0 1 2 1 0 0 2 1 0 0 1 0 0 1
";

pub const NON_PAPPUS_GENERATOR_SHA256: &str =
    "78a111d4c065ab77f2466534b1691a9374ebd1e724e6c5b33fcb98262e16f450";

pub fn parse_matrix(text: &str) -> Vec<Vec<u8>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|x| x.parse().expect("matrix entry")).collect())
        .collect()
}

/// The unfolded ternary code.
pub fn non_pappus_ternary() -> Result<BlockCode> {
    let digest = sha256_hex(NON_PAPPUS_GENERATOR.as_bytes());
    if digest != NON_PAPPUS_GENERATOR_SHA256 {
        return Err(aawire_core::Error::Consistency(format!("generator checksum mismatch: {digest}")).into());
    }
    linear_span(3, 18, &parse_matrix(NON_PAPPUS_GENERATOR))
}

pub fn sa_example() -> CodeFile {
    let words = [
        "000", "011", "022", "033", "101", "112", "123", "130", "202", "213", "220", "231", "303", "310",
        "321", "332",
    ]
    .iter()
    .map(|w| w.bytes().map(|b| b - b'0').collect::<Vec<u8>>());
    let code = BlockCode::from_words(Alphabet::new(4).expect("q = 4"), 3, words).expect("listed words");
    CodeFile::new(code).named("sa-example").with_note("quaternary, length 3, matroid U(2,3)")
}

pub fn non_pappus_folded() -> Result<CodeFile> {
    let code = fold_pairs(&non_pappus_ternary()?)?;
    Ok(CodeFile::new(code)
        .named("non-pappus-folded")
        .with_note("ternary row span of G folded pairwise by (a,b) -> 3a+b"))
}

/// A code over `Z_q` whose matroid is `U_{k,n}`: zero, repetition, parity
/// and full-space codes for `k ∈ {0, 1, n-1, n}`, Reed-Solomon for prime
/// `q >= n` otherwise.
pub fn uniform(q: usize, k: usize, n: usize) -> Result<CodeFile> {
    let alphabet = Alphabet::new(q)?;
    GroundSubset::new(n, 0)?;
    if k > n {
        return Err(aawire_core::Error::Parameter(format!("k = {k} exceeds n = {n}")).into());
    }
    let size = (q as u128).pow(k as u32);
    if size > BUILTIN_LIMIT as u128 {
        return Err(aawire_core::Error::Infeasible { what: "uniform code", size, limit: BUILTIN_LIMIT as u128 }.into());
    }
    let label = format!("uniform({q},{k},{n})");
    let code = if k == n {
        BlockCode::full_space(alphabet, n, BUILTIN_LIMIT)?
    } else if k == 0 {
        BlockCode::from_words(alphabet, n, [vec![0; n]])?
    } else if k == 1 {
        BlockCode::from_words(alphabet, n, (0..q).map(|a| vec![a as u8; n]))?
    } else if k + 1 == n {
        let space = BlockCode::full_space(alphabet, k, BUILTIN_LIMIT)?;
        let words = space.words().map(|w| {
            let sum: usize = w.iter().map(|&s| s as usize).sum();
            let mut v = w.to_vec();
            v.push(((q - sum % q) % q) as u8);
            v
        });
        BlockCode::from_words(alphabet, n, words)?
    } else {
        let prime = (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0);
        if !prime || n > q {
            return Err(aawire_core::Error::Parameter(format!(
                "{label}: need 0, 1, n-1 or n for k, or a prime q >= n"
            ))
            .into());
        }
        // evaluation of polynomials of degree < k at the points 0..n
        let rows: Vec<Vec<u8>> = (0..k)
            .map(|e| (0..n).map(|x| ((x as u64).pow(e as u32) % q as u64) as u8).collect())
            .collect();
        linear_span(q, n, &rows)?
    };
    Ok(CodeFile::new(code).named(&label))
}

pub const BUILTIN_NAMES: &[&str] = &["sa-example", "non-pappus-folded", "uniform(q,k,n)"];

pub fn builtin(name: &str) -> Result<CodeFile> {
    match name {
        "sa-example" => Ok(sa_example()),
        "non-pappus-folded" => non_pappus_folded(),
        _ => {
            let Some(args) = name.strip_prefix("uniform(").and_then(|r| r.strip_suffix(')')) else {
                return Err(CorpusError::UnknownBuiltin(name.to_string()));
            };
            let nums: Vec<usize> = args
                .split(',')
                .map(|a| a.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| CorpusError::UnknownBuiltin(name.to_string()))?;
            match nums[..] {
                [q, k, n] => uniform(q, k, n),
                _ => Err(CorpusError::UnknownBuiltin(name.to_string())),
            }
        }
    }
}

/// A builtin name, or else a path to a code file.
pub fn resolve(spec: &str) -> Result<Loaded<CodeFile>> {
    if Path::new(spec).is_file() {
        return load(Path::new(spec));
    }
    match builtin(spec) {
        Err(CorpusError::UnknownBuiltin(_)) if spec.contains(['/', '.']) => {
            load(Path::new(spec))
        }
        other => other.map(|value| Loaded { value, warnings: Vec::new() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_parse_round_trip() {
        let f = sa_example();
        let text = render_code(&f);
        let back = parse_code(&text).unwrap();
        assert!(back.warnings.is_empty(), "{:?}", back.warnings);
        assert_eq!(back.value, f);
        assert_eq!(render_code(&back.value), text);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word(4, 3, "012").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_word(4, 3, "0,1,2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_word(12, 2, "11 3").unwrap(), vec![11, 3]);
        assert_eq!(parse_word(4, 3, "014").unwrap_err().0, Some(3));
        assert!(parse_word(4, 3, "01").is_err());
        assert_eq!(parse_word(4, 0, "-").unwrap(), Vec::<u8>::new());
    }

    #[test]
    fn uniform_codes_have_uniform_matroids() {
        for (q, k, n) in [(2, 0, 3), (3, 1, 4), (4, 3, 4), (4, 2, 2), (5, 2, 5), (7, 3, 6), (2, 2, 3)] {
            let c = uniform(q, k, n).unwrap().code;
            assert_eq!(c.matroid().unwrap(), RankFunction::uniform(k, n).unwrap(), "({q},{k},{n})");
        }
        assert!(uniform(4, 2, 4).is_err());
        assert!(builtin("uniform(2,1)").is_err());
        assert!(matches!(builtin("nope"), Err(CorpusError::UnknownBuiltin(_))));
    }

    #[test]
    fn linear_span_rejects_composite_modulus() {
        assert!(linear_span(4, 2, &[vec![1, 1]]).is_err());
        assert_eq!(linear_span(3, 2, &[vec![1, 1], vec![2, 2]]).unwrap().len(), 3);
    }

    #[test]
    fn rank_table_round_trip() {
        let f = RankFunction::uniform(2, 3).unwrap();
        let text = render_rank_table(&f);
        assert!(text.starts_with("aawire-rank 1\nn 3\n{} 0\n{1} 1\n"));
        let back = parse_rank_table(&text).unwrap();
        assert!(back.warnings.is_empty());
        assert_eq!(back.value, f);
    }

    #[test]
    fn latin_round_trip_and_rejection() {
        let phi = LatinSquare::cyclic(4).unwrap();
        let back = parse_latin(&render_latin(&phi)).unwrap().value;
        assert_eq!(back, phi);
        let bad = "aawire-latin 1\nq 3\n0 1 2\n1 1 0\n2 0 1\n";
        assert!(matches!(parse_latin(bad), Err(CorpusError::Core(aawire_core::Error::InvalidLatinSquare(_)))));
    }
}
