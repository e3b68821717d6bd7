mod common;

use aawire_core::{all_subsets, BlockCode, LatinSquare, Message, WiretapScheme};
use common::{random_affine, sa_example, set};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sa_scheme() -> WiretapScheme {
    WiretapScheme::with_cyclic(sa_example(), set(3, "1,2")).unwrap()
}

#[test]
fn cosets_partition_the_space() {
    let s = sa_scheme();
    let mut all = Vec::new();
    for m in 0..4 {
        let coset = s.coset_code(&Message(vec![m])).unwrap();
        assert_eq!(coset.len(), 16);
        assert_eq!(coset.matroid().unwrap(), *s.matroid());
        all.extend(coset.words().map(<[u8]>::to_vec));
    }
    all.sort();
    all.dedup();
    assert_eq!(all.len(), 64);
    assert_eq!(s.decode(&[0, 1, 2]).unwrap(), Message(vec![1]));
}

#[test]
fn encode_is_uniform_on_the_coset() {
    let s = sa_scheme();
    let m = Message(vec![2]);
    let coset = s.coset_code(&m).unwrap();
    let mut counts = vec![0u32; coset.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let draws = 100_000;
    for _ in 0..draws {
        let w = s.encode(&m, &mut rng).unwrap();
        counts[coset.index_of(&w).expect("in coset")] += 1;
    }
    let expected = draws as f64 / 16.0;
    let sd = (expected * (1.0 - 1.0 / 16.0)).sqrt();
    for c in counts {
        assert!((c as f64 - expected).abs() < 4.0 * sd, "count {c}");
    }
}

#[test]
fn same_seed_same_transmission() {
    let s = sa_scheme();
    let m = Message(vec![3]);
    let a: Vec<_> = (0..20).scan(ChaCha8Rng::seed_from_u64(9), |r, _| s.encode(&m, r).ok()).collect();
    let b: Vec<_> = (0..20).scan(ChaCha8Rng::seed_from_u64(9), |r, _| s.encode(&m, r).ok()).collect();
    assert_eq!(a, b);
}

#[test]
fn non_commutative_square_still_round_trips() {
    // a square that is not symmetric
    let table = vec![0, 1, 2, 3, 3, 2, 1, 0, 1, 0, 3, 2, 2, 3, 0, 1];
    let phi = LatinSquare::new(4, table).unwrap();
    assert_ne!(phi.apply(1, 2).unwrap(), phi.apply(2, 1).unwrap());
    let s = WiretapScheme::new(sa_example(), set(3, "1,2"), phi).unwrap();
    let space = BlockCode::full_space(s.code().alphabet(), 3, 64).unwrap();
    let mut seen = 0;
    for w in space.words() {
        let m = s.decode(w).unwrap();
        assert!(s.coset_code(&m).unwrap().contains(w));
        seen += 1;
    }
    assert_eq!(seen, 64);
}

fn random_scheme() -> impl Strategy<Value = WiretapScheme> {
    (any::<u64>(), prop_oneof![Just(2usize), Just(3)], 2usize..=5, 1usize..=3).prop_filter_map(
        "trivial code",
        |(seed, p, n, rows)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let code = random_affine(&mut rng, p, n, rows.min(n - 1));
            let basis = aawire_core::trailing_basis(&code.matroid().ok()?);
            WiretapScheme::with_cyclic(code, basis).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn overcode_matches_closed_form(s in random_scheme(), pick in any::<u32>()) {
        let message_part = s.basis().complement();
        let known = aawire_core::GroundSubset::new(s.n(), pick & message_part.mask()).unwrap();
        let values = vec![1 % s.q() as u8; known.len()];
        let d = s.overcode(known, &values).unwrap();
        prop_assert_eq!(&d.matroid, &s.overcode_rank_table(known).unwrap());
        prop_assert!(s.rho_table(known).unwrap().is_demimatroid());
        // every word of D decodes to a message with m_X = M
        for w in d.code.words() {
            let m = s.decode(w).unwrap();
            prop_assert_eq!(s.restrict(&m, known), values.clone());
        }
    }

    #[test]
    fn uncertainty_is_monotone_with_fixed_ends(s in random_scheme()) {
        for known in all_subsets(s.n()).filter(|x| x.is_disjoint(&s.basis())) {
            let t = s.uncertainty_table(known).unwrap();
            prop_assert_eq!(t.rows[0].delta as usize, known.len());
            prop_assert_eq!(t.rows[s.n()].delta as usize, s.message_len());
            prop_assert!(t.rows.windows(2).all(|w| w[0].delta <= w[1].delta));
        }
    }
}
