//! Worked examples that cross module boundaries.

use smoothwords::analysis::{
    closure_check, closure_check_factors, equal_run_blocks, letter_frequencies, max_gap_report,
    naive_occurrences, phi_inverse_palindrome_check, recurrence_report, ClosureOp, Verdict,
};
use smoothwords::inverse::{phi_inverse_prefix, phi_prefix, pseudo_inverse_chain};
use smoothwords::kolakoski::{kolakoski_prefix, kolakoski_stream};
use smoothwords::rle::rle_encode;
use smoothwords::substitution::{build_for, build_sing_even, build_sing_odd, verify_substitution_fixpoint};
use smoothwords::{Alphabet, BaseSequenceSpec, CyclicOrder, Permutation, Symbol, Word};

fn ab(s: &str) -> Alphabet {
    Alphabet::parse(s).unwrap()
}

fn spec(alphabet: &str, period: &str) -> BaseSequenceSpec {
    BaseSequenceSpec::periodic(&ab(alphabet), Word::parse_list(period).unwrap()).unwrap()
}

fn order(alphabet: &str, arrangement: &str) -> CyclicOrder {
    CyclicOrder::parse(&ab(alphabet), arrangement).unwrap()
}

#[test]
fn phi_inverse_of_constant_words_approaches_k() {
    let o = order("2,3", "2,3");
    let k = kolakoski_prefix(&spec("2,3", "2,3"), 200_000).unwrap();
    let mut previous = 0;
    for depth in 1..=14 {
        let w = phi_inverse_prefix(&vec![2; depth], &o).unwrap();
        assert!(w.is_prefix_of(&k), "depth {depth}");
        assert!(w.len() >= previous);
        previous = w.len();
    }
    assert!(previous > 1_000);

    // Δ₁⁻¹(1) = 1, so the {1,2} limit stalls at its first letter.
    let o12 = order("1,2", "1,2");
    let k12 = kolakoski_prefix(&spec("1,2", "1,2"), 10).unwrap();
    assert!(phi_inverse_prefix(&[1; 8], &o12).unwrap().is_prefix_of(&k12));
}

#[test]
fn phi_of_kolakoski_prefix() {
    let k = kolakoski_prefix(&spec("1,2", "1,2"), 19).unwrap();
    assert_eq!(phi_prefix(&k, 3).unwrap(), Word::from([1, 1, 1]));
    assert_eq!(phi_prefix(&k, 1).unwrap(), Word::from([1]));
}

#[test]
fn chain_identities_of_the_worked_example() {
    let o = order("2,3,4", "2,4,3");
    let full = pseudo_inverse_chain(&[2, 3, 2], &[2, 4], &o).unwrap();
    let inner = pseudo_inverse_chain(&[3, 2], &[2, 4], &o).unwrap();
    assert_eq!(pseudo_inverse_chain(&[2], &inner, &o).unwrap(), full);
    assert_eq!(
        pseudo_inverse_chain(&[2], &[2, 4], &o).unwrap(),
        Word::parse("2^2 4^4").unwrap()
    );
}

#[test]
fn stream_equals_prefix_up_to_1e5() {
    let s = spec("1,2", "1,2");
    let streamed: Word = kolakoski_stream(&s).take(100_000).collect();
    assert_eq!(streamed, kolakoski_prefix(&s, 100_000).unwrap());
    let s = spec("1,2", "2,1");
    let streamed: Word = kolakoski_stream(&s).take(13).collect();
    assert_eq!(streamed, Word::parse("2 2 1 1 2 1 2 2 1 2 2 1 1").unwrap());
}

#[test]
fn substitutions_fix_their_kolakoski_words() {
    let cases = [
        ("2,4", "2,4"),
        ("3,6,9", "3,6,9"),
        ("3,6,9", "6,3,9"),
        ("2,6,10,14", "6,10,14,2"),
        ("1,5,9,13", "5,9,13,1"),
        ("1,5,9,13", "1,5,9,13"),
        ("1,3", "1,3"),
        ("3,5", "5,3"),
        ("1,7,13,19,25,31", "7,1,19,13,31,25"),
        ("3,9,15,21,27,33", "3,9,15,21,27,33"),
        ("3,7,11,15", "7,15,3,11"),
    ];
    for (alphabet, arrangement) in cases {
        let a = ab(alphabet);
        let o = order(alphabet, arrangement);
        let sigma = build_for(&a, &o).unwrap();
        let s = BaseSequenceSpec::periodic(&a, Word::from(o.arrangement())).unwrap();
        let check = verify_substitution_fixpoint(&sigma, &s, 10_000).unwrap();
        assert!(check.agrees, "{alphabet} / {arrangement}: {check:?}");
        assert!(sigma.is_primitive().primitive, "{alphabet} / {arrangement}");
    }
}

#[test]
fn zero_quotient_seeds_elsewhere() {
    // Order 1,3 over {1,3}: q₁ = 0, so A₁ ↦ B₁ is not prolongable.
    let a = ab("1,3");
    let sigma = build_for(&a, &order("1,3", "1,3")).unwrap();
    let check = verify_substitution_fixpoint(&sigma, &spec("1,3", "1,3"), 1).unwrap();
    assert!(check.agrees);
    assert_ne!(check.seed, Symbol::A(1));
}

#[test]
fn sing_substitutions_fix_two_letter_words() {
    let even = build_sing_even(2, 4).unwrap();
    let check = verify_substitution_fixpoint(&even, &spec("2,4", "2,4"), 10_000).unwrap();
    assert!(check.agrees);
    let odd = build_sing_odd(3, 5).unwrap();
    let check = verify_substitution_fixpoint(&odd, &spec("3,5", "3,5"), 10_000).unwrap();
    assert!(check.agrees);
}

#[test]
fn frequency_of_well_proportioned_word_matches_direct_count() {
    let s = spec("3,6,9", "3,6,9");
    let w = kolakoski_prefix(&s, 100_000).unwrap();
    let report = letter_frequencies(w.iter().copied(), &ab("3,6,9"), &[1_000, 100_000]).unwrap();
    for row in &report.rows {
        let direct = w[..row.k].iter().filter(|&&x| x == row.letter).count() as u64;
        assert_eq!(row.count, direct);
    }
    for k in report.samples() {
        let total: u64 = report.at(k).iter().map(|r| r.count).sum();
        assert_eq!(total, k as u64);
        let ratio: f64 = report.at(k).iter().map(|r| r.ratio).sum();
        assert!((ratio - 1.0).abs() < 1e-12);
    }
    assert!(report.at(100_000).iter().all(|r| r.deviation < 1e-2));
}

#[test]
fn four_letter_word_recurs() {
    let w = kolakoski_prefix(&spec("1,5,9,13", "5,9,13,1"), 1_000_000).unwrap();
    let report = recurrence_report(&w, 16);
    assert!(report.non_recurrent().is_empty());
    assert_eq!(report.window, 10_000);
}

#[test]
fn factor_index_matches_naive_scanner_on_prefixes() {
    for (alphabet, period) in [("1,2", "1,2"), ("1,3", "3,1"), ("2,3,4", "2,4,3")] {
        let w = kolakoski_prefix(&spec(alphabet, period), 3_000).unwrap();
        let index = max_gap_report(&w, 8);
        for len in 1..=8 {
            let naive = naive_occurrences(&w, len);
            let stats = index.of_length(len);
            assert_eq!(stats.len(), naive.len());
            assert!(stats.len() <= w.len() - len + 1);
            for s in stats {
                let starts = &naive[&s.factor];
                assert_eq!(s.occurrences, starts.len());
                assert_eq!(s.max_gap, starts.windows(2).map(|p| p[1] - p[0]).max());
            }
        }
    }
}

#[test]
fn single_letter_gaps_on_two_letter_alphabets() {
    let w = kolakoski_prefix(&spec("2,4", "2,4"), 100_000).unwrap();
    let index = max_gap_report(&w, 1);
    for s in index.of_length(1) {
        assert!(s.max_gap.unwrap() as u64 <= 2 * 4);
    }
    let half = max_gap_report(&w[..50_000], 4);
    let factor = Word::from([2, 2, 4, 4]);
    assert_eq!(half.get(&factor).unwrap().max_gap, index_gap(&w, &factor));
}

fn index_gap(w: &[u64], factor: &[u64]) -> Option<usize> {
    max_gap_report(w, factor.len()).get(factor).unwrap().max_gap
}

#[test]
fn identity_and_reversal_closure_on_odd_words() {
    let a = ab("1,3");
    let w = kolakoski_prefix(&spec("1,3", "1,3"), 30_000).unwrap();
    let id = ClosureOp::Permutation(Permutation::identity(&a));
    assert!(closure_check(&w, &id, 10).unwrap().is_empty());
    assert!(closure_check(&w, &ClosureOp::Reversal, 10).unwrap().is_empty());
}

#[test]
fn complement_witnesses_come_from_full_run_blocks() {
    let a = ab("2,4");
    let w = kolakoski_prefix(&spec("2,4", "2,4"), 200_000).unwrap();
    let blocks = equal_run_blocks(&w);
    let factors: Vec<Word> = blocks[1..blocks.len() - 1]
        .iter()
        .filter(|b| b.exponent == 4)
        .map(|b| b.factor.clone())
        .collect();
    assert!(!factors.is_empty());
    let op = ClosureOp::Permutation(Permutation::complement(&a).unwrap());
    let witnesses = closure_check_factors(&w, &op, &factors[..10]).unwrap();
    assert!(witnesses.iter().any(|x| x.verdict == Verdict::Absent));
    assert!(witnesses.iter().all(|x| x.recheck(&w)));
    for b in &blocks {
        let runs = rle_encode(&b.factor);
        assert!(runs.exponents.iter().all(|&e| e == b.exponent));
        assert_eq!(runs.len(), b.runs);
    }
}

#[test]
fn palindrome_check_on_three_five() {
    let check = phi_inverse_palindrome_check(&order("3,5", "3,5"), 8).unwrap();
    assert!(check.passed());
    assert_eq!(check.cases, 510);
}
