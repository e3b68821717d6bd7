#![allow(dead_code)]

use aawire_core::{Alphabet, BlockCode, GroundSubset};
use rand::Rng;

/// Row span of `rows` over F_p, shifted by `offset`.
pub fn affine_span(p: usize, n: usize, rows: &[Vec<u8>], offset: &[u8]) -> BlockCode {
    let mut words = vec![offset.to_vec()];
    for row in rows {
        let mut next = Vec::with_capacity(words.len() * p);
        for w in &words {
            for a in 0..p {
                next.push(
                    (0..n)
                        .map(|i| ((w[i] as usize + a * row[i] as usize) % p) as u8)
                        .collect::<Vec<u8>>(),
                );
            }
        }
        next.sort();
        next.dedup();
        words = next;
    }
    BlockCode::from_words(Alphabet::new(p).unwrap(), n, words).unwrap()
}

pub fn random_affine<R: Rng>(rng: &mut R, p: usize, n: usize, rows: usize) -> BlockCode {
    let gen: Vec<Vec<u8>> = (0..rows)
        .map(|_| (0..n).map(|_| rng.gen_range(0..p) as u8).collect())
        .collect();
    let offset: Vec<u8> = (0..n).map(|_| rng.gen_range(0..p) as u8).collect();
    affine_span(p, n, &gen, &offset)
}

pub fn sa_example() -> BlockCode {
    let words = [
        "000", "011", "022", "033", "101", "112", "123", "130", "202", "213", "220", "231",
        "303", "310", "321", "332",
    ]
    .iter()
    .map(|w| w.bytes().map(|b| b - b'0').collect::<Vec<u8>>());
    BlockCode::from_words(Alphabet::new(4).unwrap(), 3, words).unwrap()
}

pub fn set(n: usize, s: &str) -> GroundSubset {
    GroundSubset::parse(n, s).unwrap()
}
