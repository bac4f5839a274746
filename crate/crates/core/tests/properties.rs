use std::collections::HashSet;

use mealy_growth::family::{build_i, build_i_prime, Gen, GeneratorWord};
use mealy_growth::growth::{
    automaton_growth, ball_and_word_growth, distinguishing_word, spherical_growth, GrowthLimits,
    Transformation,
};
use mealy_growth::machine::MealyMachine;
use mealy_growth::madic::{act_integer, MadicCodec};
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_machine(max_m: usize, max_n: usize) -> impl Strategy<Value = MealyMachine> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        (
            prop::collection::vec(0..n, n * m),
            prop::collection::vec(0..m, n * m),
        )
            .prop_map(move |(t, o)| MealyMachine::new(m, t, o).unwrap())
    })
}

fn arb_machine_with_words(max_len: usize) -> impl Strategy<Value = (MealyMachine, Vec<Vec<usize>>)> {
    arb_machine(4, 5).prop_flat_map(move |a| {
        let m = a.alphabet();
        (Just(a), prop::collection::vec(prop::collection::vec(0..m, 0..=max_len), 1..20))
    })
}

/// All words of length exactly `len`.
fn words_of_length(m: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| (0..m).map(move |x| [w.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn apply_preserves_length_and_prefixes((a, words) in arb_machine_with_words(12)) {
        for s in 0..a.num_states() {
            for w in &words {
                let image = a.apply(s, w).unwrap();
                prop_assert_eq!(image.len(), w.len());
                for cut in 0..=w.len() {
                    prop_assert_eq!(&a.apply(s, &w[..cut]).unwrap()[..], &image[..cut]);
                }
            }
        }
    }

    #[test]
    fn product_is_composition(
        (a, words) in arb_machine_with_words(10),
        b_seed in prop::collection::vec(any::<usize>(), 40),
    ) {
        let (m, nb) = (a.alphabet(), 1 + b_seed[0] % 3);
        let b = MealyMachine::new(
            m,
            (0..nb * m).map(|i| b_seed[1 + i % 39] % nb).collect(),
            (0..nb * m).map(|i| b_seed[(7 + i) % 39 + 1] % m).collect(),
        ).unwrap();
        let p = a.product(&b).unwrap();
        for f in 0..a.num_states() {
            for g in 0..nb {
                for w in &words {
                    let pair = f * nb + g;
                    prop_assert_eq!(p.apply(pair, w).unwrap(), a.apply(f, &b.apply(g, w).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn minimize_is_sound_and_idempotent(a in arb_machine(3, 6)) {
        let (min, map) = a.minimize();
        prop_assert_eq!(&min.minimize().0, &min);
        let n = a.num_states();
        for len in 0..=n {
            for w in words_of_length(a.alphabet(), len) {
                for s in 0..n {
                    prop_assert_eq!(a.apply(s, &w).unwrap(), min.apply(map[s], &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn equivalence_matches_moore_bound(a in arb_machine(3, 6)) {
        let n = a.num_states();
        let words: Vec<Vec<usize>> = (0..n).flat_map(|len| words_of_length(a.alphabet(), len)).collect();
        for s in 0..n {
            for t in 0..n {
                let by_words = words.iter().all(|w| a.apply(s, w).unwrap() == a.apply(t, w).unwrap());
                prop_assert_eq!(a.states_equivalent(s, t).unwrap(), by_words);
            }
        }
    }

    #[test]
    fn similar_machines_grow_alike(a in arb_machine(3, 3), xi_seed in any::<u64>(), theta_seed in any::<u64>()) {
        let (m, n) = (a.alphabet(), a.num_states());
        let shuffle = |size: usize, seed: u64| {
            let mut p: Vec<usize> = (0..size).collect();
            let mut s = seed;
            for i in (1..size).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                p.swap(i, (s >> 33) as usize % (i + 1));
            }
            p
        };
        let (xi, theta) = (shuffle(m, xi_seed), shuffle(n, theta_seed));
        let b = a.relabel(&xi, &theta).unwrap();
        prop_assert!(a.check_similar(&b, &xi, &theta).unwrap());
        let found = a.search_similarity(&b).unwrap();
        prop_assert!(found.is_some());
        let limits = GrowthLimits::default();
        prop_assert_eq!(
            automaton_growth(&a, 5, limits).unwrap().values,
            automaton_growth(&b, 5, limits).unwrap().values
        );
    }

    #[test]
    fn keys_decide_equality(
        m in 2usize..4,
        letters_a in prop::collection::vec(any::<bool>(), 0..10),
        letters_b in prop::collection::vec(any::<bool>(), 0..10),
        probes in prop::collection::vec(prop::collection::vec(0usize..4, 16), 200),
    ) {
        let word = |letters: &[bool]| {
            let gens: Vec<Gen> = letters.iter().map(|&b| if b { Gen::F0 } else { Gen::F1 }).collect();
            GeneratorWord::from_gens(m, &gens).to_transformation().unwrap()
        };
        let (ta, tb) = (word(&letters_a), word(&letters_b));
        let probes: Vec<Vec<usize>> = probes.into_iter().map(|p| p.into_iter().map(|x| x % m).collect()).collect();
        if ta.key() == tb.key() {
            for p in &probes {
                prop_assert_eq!(ta.apply(p).unwrap(), tb.apply(p).unwrap());
            }
            prop_assert_eq!(distinguishing_word(&ta, &tb).unwrap(), None);
        } else {
            let w = distinguishing_word(&ta, &tb).unwrap().expect("different keys");
            prop_assert!(w.len() <= ta.num_states() + tb.num_states());
            prop_assert_ne!(ta.apply(&w).unwrap(), tb.apply(&w).unwrap());
        }
    }

    #[test]
    fn integer_action_matches_machine(
        m in 2usize..5,
        runs in prop::collection::vec((any::<bool>(), 1u64..=50), 0..=8),
        p in 0u64..=1_000_000,
    ) {
        let word = GeneratorWord::new(
            m,
            runs.iter().map(|&(is_f0, e)| if is_f0 { (Gen::F0, BigUint::from(1u32)) } else { (Gen::F1, BigUint::from(e)) }),
        );
        let total: u64 = runs.iter().filter(|r| !r.0).map(|r| r.1).sum();
        let codec = MadicCodec::fitting(m, &BigUint::from(p + total + 2)).unwrap();
        let a = build_i(m).unwrap();
        let mut symbols = codec.encode(&BigUint::from(p)).unwrap();
        for (g, e) in word.runs().iter().rev() {
            let state = if *g == Gen::F0 { 1 } else { 2 };
            let times = if *g == Gen::F0 { 1 } else { u64::try_from(e).unwrap() };
            for _ in 0..times {
                symbols = a.apply(state, &symbols).unwrap();
            }
        }
        prop_assert_eq!(codec.decode(&symbols).unwrap(), act_integer(&word, &BigUint::from(p)));
    }
}

#[test]
fn growth_routes_agree() {
    let limits = GrowthLimits::default();
    for (m, n) in [(2, 12), (3, 12), (4, 12), (5, 12)] {
        let a = build_i(m).unwrap();
        let (ball, word) = ball_and_word_growth(&a, &[0, 1, 2], n, limits).unwrap();
        let spherical = spherical_growth(&a, &[0, 1, 2], n, limits).unwrap();
        let automaton = automaton_growth(&a, n, limits).unwrap();
        assert_eq!(automaton.values, spherical.values, "m={m}");
        assert_eq!(spherical.values, ball.values, "m={m}");
        for i in 0..=n {
            assert!(word.values[i] <= spherical.values[i] && spherical.values[i] <= ball.values[i]);
        }
        assert_eq!(word.partial_sums().values, ball.values);
    }
}

#[test]
fn spherical_without_identity() {
    let a = build_i(2).unwrap();
    let limits = GrowthLimits::default();
    let g = spherical_growth(&a, &[1, 2], 6, limits).unwrap();
    let (_, word) = ball_and_word_growth(&a, &[1, 2], 6, limits).unwrap();
    for i in 0..=6 {
        assert!(word.values[i] <= g.values[i]);
    }
    assert_eq!(g.values[2], BigUint::from(4u32));
}

#[test]
fn relabelled_family_grows_alike() {
    let limits = GrowthLimits::default();
    for m in 2..=4 {
        let a = ball_and_word_growth(&build_i(m).unwrap(), &[0, 1, 2], 8, limits).unwrap();
        let b = ball_and_word_growth(&build_i_prime(m).unwrap(), &[0, 1, 2], 8, limits).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn enumeration_is_deterministic() {
    let gens: Vec<Transformation> = {
        let a = build_i(3).unwrap();
        (1..3).map(|s| Transformation::at(&a, s).unwrap()).collect()
    };
    let first = mealy_growth::growth::explore_ball(&gens, 7, GrowthLimits::default(), true).unwrap();
    let second = mealy_growth::growth::explore_ball(&gens, 7, GrowthLimits::default(), true).unwrap();
    assert_eq!(first.edges, second.edges);
    let keys = |b: &mealy_growth::growth::Ball| b.elements.iter().map(Transformation::key).collect::<Vec<_>>();
    assert_eq!(keys(&first), keys(&second));
    let unique: HashSet<_> = keys(&first).into_iter().collect();
    assert_eq!(unique.len(), first.elements.len());
}
