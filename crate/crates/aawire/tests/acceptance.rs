// One line per acceptance criterion. Runs without the libtest harness so the
// lines show up in plain `cargo test` output.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use aawire::cli;
use aawire::corpus;
use aawire::oracle::{self, DEFAULT_SEED};
use aawire_core::{
    all_subsets, profiles, subsets_of_size, BlockCode, GroundSubset, Message, RankFunction,
    WiretapScheme,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;

fn set(n: usize, s: &str) -> GroundSubset {
    GroundSubset::parse(n, s).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut full = vec!["aawire", "--json"];
    full.extend_from_slice(args);
    let out = cli::run(full);
    if out.code != 0 {
        return Err(format!("`{}` exited {}: {}", args.join(" "), out.code, out.stderr.trim()));
    }
    serde_json::from_str(&out.stdout).map_err(|e| e.to_string())
}

fn cli_text(args: &[&str]) -> Result<String, String> {
    let mut full = vec!["aawire"];
    full.extend_from_slice(args);
    let out = cli::run(full);
    if out.code != 0 {
        return Err(format!("`{}` exited {}: {}", args.join(" "), out.code, out.stderr.trim()));
    }
    Ok(out.stdout)
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, String> {
    v.get(key).ok_or_else(|| format!("missing field `{key}`"))
}

fn folded_scheme() -> WiretapScheme {
    let code = corpus::non_pappus_folded().unwrap().code;
    WiretapScheme::with_cyclic(code, set(9, "7,8,9")).unwrap()
}

fn sa_scheme(basis: &str) -> WiretapScheme {
    WiretapScheme::with_cyclic(corpus::sa_example().code, set(3, basis)).unwrap()
}

fn criterion_1() -> Check {
    let check = cli_json(&["check", "sa-example"])?;
    ensure(field(&check, "almost_affine")? == &Value::Bool(true), || "not almost affine".into())?;
    ensure(field(&check, "dimension")? == 2, || format!("dimension {}", check["dimension"]))?;
    let text = cli_text(&["matroid", "sa-example"])?;
    let line = "ranks by size: 0;1,1,1;2,2,2;2";
    ensure(text.lines().any(|l| l == line), || format!("rank table line missing:\n{text}"))?;
    let m = corpus::sa_example().code.matroid().map_err(|e| e.to_string())?;
    ensure(m == RankFunction::uniform(2, 3).unwrap(), || "matroid is not U(2,3)".into())?;
    Ok("sa-example almost affine, dimension 2, ranks 0;1,1,1;2,2,2;2 = U(2,3)".into())
}

fn criterion_2() -> Check {
    let check = cli_json(&["check", "non-pappus-folded"])?;
    ensure(field(&check, "words")? == 729, || format!("{} words", check["words"]))?;
    ensure(field(&check, "almost_affine")? == &Value::Bool(true), || "not almost affine".into())?;
    ensure(field(&check, "dimension")? == 3, || format!("dimension {}", check["dimension"]))?;
    let deps = cli_json(&["matroid", "non-pappus-folded", "--dependents", "3"])?;
    let got: BTreeSet<Vec<u64>> = field(&deps, "dependent_sets")?
        .as_array()
        .ok_or("dependent_sets is not a list")?
        .iter()
        .map(|s| s.as_array().unwrap().iter().map(|e| e.as_u64().unwrap()).collect())
        .collect();
    let want: BTreeSet<Vec<u64>> = [
        [1, 2, 3], [1, 5, 7], [1, 6, 8], [2, 4, 7], [2, 6, 9], [3, 4, 8], [3, 5, 9], [4, 5, 6],
    ]
    .iter()
    .map(|t| t.to_vec())
    .collect();
    ensure(got == want, || format!("dependent 3-sets {got:?}"))?;
    Ok("non-pappus-folded: 729 words, almost affine, dimension 3, the 8 dependent triples".into())
}

struct Folded {
    scheme: WiretapScheme,
    known: GroundSubset,
    /// `ρ_X` from the materialized overcode.
    rho: RankFunction,
}

fn criterion_3(folded: &mut Option<Folded>) -> Check {
    let scheme = folded_scheme();
    let known = set(9, "5,6");
    let over = scheme.overcode(known, &[0, 0]).map_err(|e| e.to_string())?;
    ensure(over.code.len() == 9usize.pow(7), || format!("overcode has {} words", over.code.len()))?;
    ensure(over.matroid.rank() == 7, || format!("rank {}", over.matroid.rank()))?;
    let got: BTreeSet<GroundSubset> = over.matroid.bases().into_iter().collect();
    let want: BTreeSet<GroundSubset> = subsets_of_size(9, 3)
        .filter(|t| t.is_subset(&set(9, "5,6,7,8,9")))
        .map(|t| t.union(set(9, "1,2,3,4")))
        .collect();
    ensure(want.len() == 10 && got == want, || format!("bases {got:?}"))?;
    let closed = scheme.overcode_rank_table(known).map_err(|e| e.to_string())?;
    ensure(closed == over.matroid, || "closed-form overcode ranks differ".into())?;
    let rho = over.matroid.minus(scheme.matroid()).map_err(|e| e.to_string())?;
    *folded = Some(Folded { scheme, known, rho });
    Ok("X={5,6}, B={7,8,9}: 9^7 words, rank 7, bases {1,2,3,4} + each 3-subset of {5..9}".into())
}

fn criterion_4(folded: &Option<Folded>) -> Check {
    let f = folded.as_ref().ok_or("needs the overcode of criterion 3")?;
    let p = profiles(&f.rho).map_err(|e| e.to_string())?;
    ensure(p.sigma() == [0, 3, 5, 6, 7], || format!("sigma {:?}", p.sigma()))?;
    let closed = f.scheme.rho_table(f.known).map_err(|e| e.to_string())?;
    ensure(closed == f.rho, || "closed-form rho_X differs from the materialized one".into())?;
    Ok("sigma(rho_X) = (0,3,5,6,7)".into())
}

fn criterion_5() -> Check {
    let mut got = Vec::new();
    for (taps, rho, h) in [("4,5,6", 1, 3), ("3,4,8", 1, 3), ("1,2,9", 0, 4)] {
        let v = cli_json(&["wiretap", "analyze", "--known", "5,6", "--taps", taps])?;
        let extra = field(&v, "extra_symbols")?;
        let entropy = field(field(&v, "entropy")?, "symbols")?;
        ensure(extra == rho && entropy == h, || format!("Y={{{taps}}}: rho {extra}, H {entropy}"))?;
        got.push(format!("Y={{{taps}}} rho={rho} H={h}"));
    }
    Ok(got.join(", "))
}

fn criterion_6(folded: &Option<Folded>) -> Check {
    let f = folded.as_ref().ok_or("needs the overcode of criterion 3")?;
    let table = f.scheme.uncertainty_table(f.known).map_err(|e| e.to_string())?;
    let n = f.scheme.n();
    let l = (f.scheme.message_len() - f.known.len()) as i32;
    let mut deltas = Vec::new();
    for row in &table.rows {
        // independent minimization over the materialized ρ_X
        let eq = subsets_of_size(n, row.mu).map(|y| l - f.rho.get(y)).min().unwrap();
        let delta = f.scheme.message_len() as i32 - eq;
        ensure(delta as u32 == row.delta, || format!("mu {}: {} vs {delta}", row.mu, row.delta))?;
        ensure(row.delta as usize == f.known.len() + row.level, || {
            format!("mu {}: delta {} but |X| + j = {}", row.mu, row.delta, f.known.len() + row.level)
        })?;
        deltas.push(row.delta);
    }
    ensure(deltas == [2, 2, 2, 3, 3, 4, 5, 6, 6, 6], || format!("deltas {deltas:?}"))?;
    Ok(format!("Delta_0..9 = {deltas:?} = |X| + j"))
}

fn criterion_7() -> Check {
    let scheme = sa_scheme("1,2");
    let q = scheme.q();
    let n = scheme.n();
    let mut seen = vec![None::<u8>; q.pow(n as u32)];
    let index = |w: &[u8]| w.iter().fold(0, |k, &s| k * q + s as usize);
    for m in 0..q as u8 {
        let msg = Message(vec![m]);
        let coset = scheme.coset_code(&msg).map_err(|e| e.to_string())?;
        ensure(coset.len() == 16, || format!("C_{m} has {} words", coset.len()))?;
        for (c, w) in scheme.code().words().zip(coset.words()) {
            let i = index(w);
            ensure(seen[i].is_none(), || format!("word {w:?} in two cosets"))?;
            seen[i] = Some(m);
            let sent = scheme.shift_word(&msg, c).map_err(|e| e.to_string())?;
            let back = scheme.decode(&sent).map_err(|e| e.to_string())?;
            ensure(back == msg, || format!("decode(shift({m}, {c:?})) = {back:?}"))?;
        }
    }
    ensure(seen.iter().all(Option::is_some), || "cosets do not cover A^3".into())?;
    let full = BlockCode::full_space(scheme.code().alphabet(), n, 64).map_err(|e| e.to_string())?;
    for w in full.words() {
        let m = scheme.decode(w).map_err(|e| e.to_string())?;
        ensure(Some(m.0[0]) == seen[index(w)], || format!("decode({w:?}) = {m:?}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for m in 0..q as u8 {
        let msg = Message(vec![m]);
        for _ in 0..16 {
            let w = scheme.encode(&msg, &mut rng).map_err(|e| e.to_string())?;
            ensure(scheme.decode(&w).map_err(|e| e.to_string())? == msg, || "encode/decode".into())?;
        }
    }
    Ok("4 cosets of 16 tile A^3; decode total and inverts all 4*16 pairs".into())
}

fn entropy_matches(scheme: &WiretapScheme, x: GroundSubset, m: &[u8], y: GroundSubset) -> Result<(), String> {
    let closed = scheme.conditional_entropy(x, y).map_err(|e| e.to_string())?;
    let got = oracle::oracle_entropy(scheme, x, m, y).map_err(|e| e.to_string())?;
    ensure(got.entropy == Ratio::from_integer(closed as u64), || {
        format!("X={x} M={m:?} Y={y}: enumerated {} closed form {closed}", got.entropy)
    })
}

fn all_values(q: usize, len: usize) -> Vec<Vec<u8>> {
    (0..q.pow(len as u32))
        .map(|mut k| {
            let mut v = vec![0u8; len];
            for s in v.iter_mut().rev() {
                *s = (k % q) as u8;
                k /= q;
            }
            v
        })
        .collect()
}

fn criterion_8() -> Check {
    let mut exhaustive = 0;
    for basis in ["1,2", "2,3"] {
        let scheme = sa_scheme(basis);
        let n = scheme.n();
        let free = scheme.basis().complement();
        for x in all_subsets(n).filter(|x| x.is_subset(&free)) {
            for m in all_values(scheme.q(), x.len()) {
                for y in all_subsets(n) {
                    entropy_matches(&scheme, x, &m, y)?;
                    exhaustive += 1;
                }
            }
        }
    }
    let scheme = folded_scheme();
    let free = scheme.basis().complement();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let (mut sampled, mut refused) = (0, 0);
    while sampled < 50 {
        let x = GroundSubset::new(9, rng.gen_range(0..1u32 << 9)).unwrap().intersection(free);
        let y = GroundSubset::new(9, rng.gen_range(0..1u32 << 9)).unwrap();
        if oracle::entropy_cost(&scheme, x, y).is_err() {
            refused += 1;
            continue;
        }
        let m: Vec<u8> = (0..x.len()).map(|_| rng.gen_range(0..9)).collect();
        entropy_matches(&scheme, x, &m, y)?;
        sampled += 1;
    }
    Ok(format!(
        "sa-example exhaustive over bases {{1,2}} and {{2,3}} ({exhaustive} cases), non-pappus-folded 50 sampled ({refused} draws over the guard redrawn)"
    ))
}

fn criterion_9() -> Check {
    let reports = oracle::verify_demimatroid_theorems(1000, DEFAULT_SEED);
    let (pass, fail, skip) = oracle::summary(&reports);
    if let Some(r) = reports.iter().find(|r| !r.passed()) {
        return Err(format!("{r}"));
    }
    ensure(fail == 0 && skip == 0, || format!("{fail} failed, {skip} skipped"))?;
    Ok(format!("1000 random demi-matroids, {pass} claims, 0 failures"))
}

fn criterion_10() -> Check {
    let mut got = Vec::new();
    for (name, scheme, want) in [
        ("sa-example", sa_scheme("1,2"), vec![0, 3]),
        ("non-pappus-folded", folded_scheme(), vec![0, 3, 5, 6, 7, 8, 9]),
    ] {
        let n = scheme.n();
        let empty = GroundSubset::empty(n);
        let rho = scheme.rho_table(empty).map_err(|e| e.to_string())?;
        let sigma = profiles(&rho).map_err(|e| e.to_string())?.sigma().to_vec();
        let code = scheme.code();
        let mut weights = vec![u32::MAX; n - scheme.k() + 1];
        for y in all_subsets(n) {
            let nullity = y.len() - code.rank(y).map_err(|e| e.to_string())? as usize;
            weights[nullity] = weights[nullity].min(y.len() as u32);
        }
        ensure(sigma == weights && sigma == want, || format!("{name}: sigma {sigma:?}, weights {weights:?}"))?;
        let steps = scheme.uncertainty_table(empty).map_err(|e| e.to_string())?.steps();
        ensure(steps.iter().map(|&s| s as u32).eq(sigma[1..].iter().copied()), || {
            format!("{name}: steps {steps:?}")
        })?;
        got.push(format!("{name} {sigma:?}"));
    }
    Ok(format!("X=empty sigma = min |Y| with nullity j: {}", got.join(", ")))
}

fn report(number: usize, limit: Option<Duration>, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let result = match (result, limit) {
        (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took longer than {limit:?}")),
        (r, _) => r,
    };
    let secs = elapsed.as_secs_f64();
    match &result {
        Ok(detail) => println!("criterion {number}: pass ({secs:.2} s) {detail}"),
        Err(detail) => println!("criterion {number}: FAIL ({secs:.2} s) {detail}"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut folded = None;
    let results = [
        report(1, Some(secs(1)), criterion_1),
        report(2, Some(secs(30)), criterion_2),
        report(3, Some(secs(60)), || criterion_3(&mut folded)),
        report(4, Some(secs(10)), || criterion_4(&folded)),
        report(5, None, criterion_5),
        report(6, Some(secs(300)), || criterion_6(&folded)),
        report(7, None, criterion_7),
        report(8, None, criterion_8),
        report(9, Some(secs(120)), criterion_9),
        report(10, None, criterion_10),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
