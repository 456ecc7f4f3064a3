use itertools::Itertools;
use proptest::prelude::*;

use smoothwords::analysis::{letter_frequencies, max_gap_report, naive_occurrences};
use smoothwords::derivative::derivative;
use smoothwords::inverse::{
    phi_inverse_prefix, phi_prefix, pseudo_inverse, pseudo_inverse_chain, pseudo_inverse_with_base,
    ChainExpander,
};
use smoothwords::kolakoski::{
    kolakoski_prefix, verify_base_prefix, verify_fixpoint_prefix, GeneratorState, KolakoskiStream,
};
use smoothwords::rle::{exponents, rle_encode, rle_reconstruct};
use smoothwords::substitution::build_for;
use smoothwords::transform::{apply_permutation, is_palindrome, reverse};
use smoothwords::{Alphabet, BaseSequenceSpec, CyclicOrder, Letter, Permutation, Symbol, Word};

const SAME_REMAINDER: [&[Letter]; 6] = [
    &[1, 3],
    &[2, 4],
    &[3, 5],
    &[1, 4, 7],
    &[3, 6, 9],
    &[2, 6, 10, 14],
];

fn word_over(letters: Vec<Letter>, len: std::ops::Range<usize>) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(letters), len).prop_map(Word::from)
}

/// An alphabet with one shared remainder, a cyclic order on it, and a start
/// letter.
fn ordered_alphabet() -> impl Strategy<Value = (Alphabet, CyclicOrder, Letter)> {
    prop::sample::select(SAME_REMAINDER.to_vec()).prop_flat_map(|letters| {
        let n = letters.len();
        (
            Just(letters.to_vec()).prop_shuffle(),
            0..n,
        )
            .prop_map(move |(arrangement, i)| {
                let a = Alphabet::new(letters.to_vec()).unwrap();
                let start = arrangement[i];
                (a.clone(), CyclicOrder::new(&a, arrangement).unwrap(), start)
            })
    })
}

/// A periodic base sequence in 𝔅ₙ over one of a few alphabets.
fn base_spec() -> impl Strategy<Value = BaseSequenceSpec> {
    let alphabets: Vec<Vec<Letter>> = vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3], vec![2, 4, 7]];
    prop::sample::select(alphabets).prop_flat_map(|letters| {
        let a = Alphabet::new(letters.clone()).unwrap();
        prop::collection::vec(prop::sample::select(letters), 2..7).prop_filter_map(
            "adjacent bases must differ",
            move |period| BaseSequenceSpec::periodic(&a, Word::from(period)).ok(),
        )
    })
}

fn permutations(letters: &[Letter]) -> Vec<Permutation> {
    let a = Alphabet::new(letters.to_vec()).unwrap();
    letters
        .iter()
        .copied()
        .permutations(letters.len())
        .map(|images| Permutation::from_images(&a, &images).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rle_roundtrip(w in word_over(vec![1, 2, 3, 7], 0..60)) {
        let rd = rle_encode(&w);
        prop_assert_eq!(rle_reconstruct(&rd).unwrap(), w.clone());
        prop_assert!(rd.bases.windows(2).all(|p| p[0] != p[1]));
        prop_assert_eq!(rd.exponents.iter().sum::<u64>() as usize, w.len());
    }

    #[test]
    fn reversal_is_an_involution(w in word_over(vec![1, 2, 3], 0..40)) {
        prop_assert_eq!(reverse(&reverse(&w)), w.clone());
        prop_assert_eq!(is_palindrome(&w), reverse(&w) == w);
    }

    #[test]
    fn derivative_commutes_with_reversal_and_permutation(w in word_over(vec![1, 2, 3], 0..12)) {
        let a = Alphabet::new(vec![1, 2, 3]).unwrap();
        prop_assert_eq!(exponents(&reverse(&w)), reverse(&exponents(&w)));
        if let Ok(d) = derivative(&w, &a) {
            prop_assert!(w.is_empty() || d.len() < w.len());
            prop_assert_eq!(derivative(&reverse(&w), &a).unwrap(), reverse(&d));
            for sigma in permutations(&[1, 2, 3]) {
                let image = apply_permutation(&w, &sigma).unwrap();
                prop_assert_eq!(derivative(&image, &a).unwrap(), d.clone());
                prop_assert_eq!(exponents(&image), exponents(&w));
            }
        } else {
            prop_assert!(derivative(&reverse(&w), &a).is_err());
        }
    }

    #[test]
    fn pseudo_inverse_splits(
        (_, order, alpha) in ordered_alphabet(),
        seed_u in prop::collection::vec(0usize..4, 0..10),
        seed_v in prop::collection::vec(0usize..4, 0..10),
    ) {
        let letters = order.arrangement().to_vec();
        let pick = |s: &[usize]| -> Word { s.iter().map(|&i| letters[i % letters.len()]).collect() };
        let (u, v) = (pick(&seed_u), pick(&seed_v));
        let next = order.advance(alpha, u.len()).unwrap();
        let whole = pseudo_inverse(alpha, &u.concat(&v), &order).unwrap();
        let split = pseudo_inverse(alpha, &u, &order).unwrap()
            .concat(&pseudo_inverse(next, &v, &order).unwrap());
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn pseudo_inverse_length_arithmetic(
        (alphabet, order, alpha) in ordered_alphabet(),
        blocks in 0usize..6,
        seed in prop::collection::vec(0usize..4, 24),
    ) {
        let n = alphabet.size();
        let letters = alphabet.letters();
        let w: Word = seed[..blocks * n].iter().map(|&i| letters[i % n]).collect();
        let out = pseudo_inverse(alpha, &w, &order).unwrap();
        prop_assert_eq!(out.len() % n, 0);
        if alphabet.is_two_letter_odd() {
            let odd: Word = seed[..2 * blocks + 1].iter().map(|&i| letters[i % n]).collect();
            prop_assert_eq!(pseudo_inverse(alpha, &odd, &order).unwrap().len() % 2, 1);
        }
    }

    #[test]
    fn chain_distributes_over_blocks_of_n(
        (alphabet, order, _) in ordered_alphabet(),
        chain_seed in prop::collection::vec(0usize..4, 0..4),
        blocks in 0usize..3,
        seed in prop::collection::vec(0usize..4, 16),
        tail in prop::collection::vec(0usize..4, 0..5),
    ) {
        let n = alphabet.size();
        let letters = alphabet.letters();
        let p: Word = chain_seed.iter().map(|&i| letters[i % n]).collect();
        let v1: Word = seed[..blocks * n].iter().map(|&i| letters[i % n]).collect();
        let v2: Word = tail.iter().map(|&i| letters[i % n]).collect();
        let whole = pseudo_inverse_chain(&p, &v1.concat(&v2), &order).unwrap();
        let parts = pseudo_inverse_chain(&p, &v1, &order).unwrap()
            .concat(&pseudo_inverse_chain(&p, &v2, &order).unwrap());
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn explicit_base_roundtrips(pairs in prop::collection::vec((1u64..5, 0usize..3), 0..20)) {
        let letters = [1, 2, 3];
        let mut v = Word::new();
        for &(_, i) in &pairs {
            let prev = v.last();
            let mut b = letters[i];
            if Some(b) == prev {
                b = letters[(i + 1) % 3];
            }
            v.push(b);
        }
        let u: Word = pairs.iter().map(|&(e, _)| e).collect();
        let w = pseudo_inverse_with_base(&u, &v).unwrap();
        let rd = rle_encode(&w);
        prop_assert_eq!(rd.exponents, u);
        prop_assert_eq!(rd.bases, v);
    }

    #[test]
    fn phi_inverse_is_prefix_monotone_and_left_inverse(
        u in word_over(vec![2, 3], 1..9),
        extra in word_over(vec![2, 3], 0..3),
    ) {
        let order = CyclicOrder::increasing(&Alphabet::new(vec![2, 3]).unwrap());
        let short = phi_inverse_prefix(&u, &order).unwrap();
        let long = phi_inverse_prefix(&u.concat(&extra), &order).unwrap();
        prop_assert!(short.is_prefix_of(&long));
        prop_assert_eq!(phi_prefix(&short, u.len()).unwrap(), u.clone());
        let streamed: Word = ChainExpander::phi_inverse(&u, &order).unwrap().collect();
        prop_assert_eq!(streamed, short);
    }

    #[test]
    fn phi_inverse_preserves_palindromes_on_odd_alphabets(u in word_over(vec![1, 3], 1..10)) {
        let order = CyclicOrder::increasing(&Alphabet::new(vec![1, 3]).unwrap());
        let w = phi_inverse_prefix(&u, &order).unwrap();
        prop_assert!(is_palindrome(&w));
        prop_assert_eq!(w.len() % 2, 1);
    }

    #[test]
    fn generators_agree_and_fix_delta(spec in base_spec(), m in 1usize..3_000) {
        let w = kolakoski_prefix(&spec, m).unwrap();
        prop_assert_eq!(w.len(), m);
        prop_assert!(verify_fixpoint_prefix(&w));
        prop_assert!(verify_base_prefix(&spec, &w));
        let ring: Word = GeneratorState::new(&spec).take(m).collect();
        let nested: Word = KolakoskiStream::new(&spec).take(m).collect();
        prop_assert_eq!(&ring, &w);
        prop_assert_eq!(&nested, &w);
    }

    #[test]
    fn frequency_counts_sum_to_k(spec in base_spec(), ks in prop::collection::vec(0usize..2_000, 1..5)) {
        let alphabet = Alphabet::new(spec.period().iter().copied().unique().collect::<Vec<_>>());
        prop_assume!(alphabet.is_ok());
        let alphabet = alphabet.unwrap();
        let w = kolakoski_prefix(&spec, 2_000).unwrap();
        prop_assume!(w.iter().all(|&a| alphabet.contains(a)));
        let report = letter_frequencies(w.iter().copied(), &alphabet, &ks).unwrap();
        for k in report.samples() {
            let rows = report.at(k);
            prop_assert_eq!(rows.iter().map(|r| r.count).sum::<u64>(), k as u64);
            prop_assert!(rows.iter().all(|r| (0.0..=1.0).contains(&r.ratio)));
        }
    }

    #[test]
    fn factor_index_agrees_with_naive_scanner(w in word_over(vec![1, 2, 3], 0..200), lmax in 1usize..7) {
        let index = max_gap_report(&w, lmax);
        for len in 1..=lmax {
            let naive = naive_occurrences(&w, len);
            let stats = index.of_length(len);
            prop_assert_eq!(stats.len(), naive.len());
            prop_assert!(stats.windows(2).all(|p| p[0].factor < p[1].factor));
            for s in stats {
                let starts = &naive[&s.factor];
                prop_assert_eq!(s.occurrences, starts.len());
                prop_assert_eq!(s.first, starts[0]);
                prop_assert_eq!(s.last, *starts.last().unwrap());
                prop_assert_eq!(s.max_gap, starts.windows(2).map(|p| p[1] - p[0]).max());
            }
        }
    }
}

fn built_substitutions() -> Vec<smoothwords::Substitution> {
    [
        ("2,4", "2,4"),
        ("3,6,9", "6,9,3"),
        ("2,6,10,14", "6,10,14,2"),
        ("1,5,9,13", "5,9,13,1"),
        ("3,5", "3,5"),
        ("1,7,13,19,25,31", "7,13,1,31,19,25"),
    ]
    .iter()
    .map(|&(a, o)| {
        let a = Alphabet::parse(a).unwrap();
        build_for(&a, &CyclicOrder::parse(&a, o).unwrap()).unwrap()
    })
    .collect()
}

#[test]
fn incidence_matrix_is_a_homomorphism() {
    for sigma in built_substitutions() {
        let m = sigma.incidence_matrix();
        let lengths: Vec<u64> = sigma
            .symbols()
            .iter()
            .map(|&s| sigma.rule(s).unwrap().len() as u64)
            .collect();
        assert_eq!(m.column_sums(), lengths);
        for t in 0..=5 {
            assert_eq!(sigma.power(t).incidence_matrix(), m.pow(t as u32), "{} t = {t}", sigma.name());
        }
        let squared = sigma.compose(&sigma).unwrap();
        assert_eq!(squared.incidence_matrix(), m.mul(&m));
    }
}

#[test]
fn abelianization_predicts_letter_counts() {
    for sigma in built_substitutions() {
        let symbols = sigma.symbols().to_vec();
        let letters: Vec<Letter> = symbols
            .iter()
            .flat_map(|&s| sigma.expansion(s).unwrap().to_vec())
            .unique()
            .sorted()
            .collect();
        let content = |s: Symbol| -> Vec<u64> {
            let block = sigma.expansion(s).unwrap();
            letters.iter().map(|a| block.iter().filter(|&x| x == a).count() as u64).collect()
        };
        let m = sigma.incidence_matrix();
        let seed = symbols[0];
        for t in 0..5u32 {
            let mut unit = vec![0u64; symbols.len()];
            unit[0] = 1;
            let symbol_counts = m.pow(t).apply(&unit);
            let mut predicted = vec![0u64; letters.len()];
            for (i, &c) in symbol_counts.iter().enumerate() {
                for (j, x) in content(symbols[i]).into_iter().enumerate() {
                    predicted[j] += c * x;
                }
            }
            let flat = sigma.flatten(&sigma.iterate(seed, t as usize).unwrap()).unwrap();
            let actual: Vec<u64> = letters
                .iter()
                .map(|a| flat.iter().filter(|&x| x == a).count() as u64)
                .collect();
            assert_eq!(actual, predicted, "{} t = {t}", sigma.name());
        }
    }
}

#[test]
fn primitivity_matches_direct_expansion() {
    for sigma in built_substitutions() {
        let p = sigma.is_primitive();
        let k = p.exponent.expect("built substitutions are primitive");
        let symbols = sigma.symbols();
        let all_occur = |t: usize| {
            symbols.iter().all(|&b| {
                let image = sigma.iterate(b, t).unwrap();
                symbols.iter().all(|a| image.contains(a))
            })
        };
        assert!(all_occur(k), "{}", sigma.name());
        assert!(k == 1 || !all_occur(k - 1), "{}", sigma.name());
    }
}
