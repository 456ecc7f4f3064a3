//! The derivative D on finite words and differentiability.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rle::exponents;
use crate::word::{Letter, Word};

/// D(w): the run lengths of `w`, discarding an edge run whose length is
/// below the largest letter `aₙ`.
///
/// `w` must be a word over `alphabet`, every run length must be at most
/// `aₙ`, and every interior run length must itself be a letter.
pub fn derivative(w: &[Letter], alphabet: &Alphabet) -> Result<Word> {
    alphabet.check_word(w)?;
    let runs = exponents(w);
    let top = alphabet.max();
    if let Some((j, &len)) = runs.iter().enumerate().find(|(_, &len)| len > top) {
        return Err(Error::NotDifferentiable(format!(
            "run {} has length {len} > {top}",
            j + 1
        )));
    }
    if runs.len() > 2 {
        if let Some((j, &len)) = runs[1..runs.len() - 1]
            .iter()
            .enumerate()
            .find(|(_, &len)| !alphabet.contains(len))
        {
            return Err(Error::NotDifferentiable(format!(
                "interior run {} has length {len}, not a letter of {alphabet}",
                j + 2
            )));
        }
    }
    Ok(trim_edges(&runs, top))
}

/// D for a prefix of a longer word: the final run's true length is unknown,
/// so it is dropped before [`derivative`] is applied.
pub fn derivative_prefix(w: &[Letter], alphabet: &Alphabet) -> Result<Word> {
    derivative(drop_last_run(w), alphabet)
}

/// `w` without its final run.
pub fn drop_last_run(w: &[Letter]) -> &[Letter] {
    match w.last() {
        None => w,
        Some(&last) => {
            let keep = w.iter().rposition(|&a| a != last).map_or(0, |i| i + 1);
            &w[..keep]
        }
    }
}

fn trim_edges(runs: &[Letter], top: Letter) -> Word {
    match runs {
        [] => Word::new(),
        [only] => {
            if *only == top {
                Word::from([top])
            } else {
                Word::new()
            }
        }
        [first, .., last] => {
            let start = usize::from(*first < top);
            let end = runs.len() - usize::from(*last < top);
            Word::from(&runs[start..end])
        }
    }
}

/// True when Dʲ(w) is defined for every j in 1..=k.
pub fn differentiability_order(w: &[Letter], alphabet: &Alphabet, k: usize) -> bool {
    let mut current = Word::from(w);
    for _ in 0..k {
        if current.is_empty() {
            return true;
        }
        match derivative(&current, alphabet) {
            Ok(next) => current = next,
            Err(_) => return false,
        }
    }
    true
}

/// How often a finite word can be differentiated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Differentiability {
    /// Every iterate is defined; the iterates reach ε.
    Smooth,
    /// Dᵏ(w) is defined but Dᵏ⁺¹(w) is not.
    Times(usize),
}

pub fn differentiability(w: &[Letter], alphabet: &Alphabet) -> Differentiability {
    let mut current = Word::from(w);
    let mut k = 0;
    // |D(w)| < |w| for nonempty differentiable w, so this terminates.
    while !current.is_empty() {
        match derivative(&current, alphabet) {
            Ok(next) => {
                debug_assert!(next.len() < current.len());
                current = next;
                k += 1;
            }
            Err(_) => return Differentiability::Times(k),
        }
    }
    Differentiability::Smooth
}

/// True when `w` is a C∞-word: arbitrarily often differentiable.
pub fn is_smooth_finite(w: &[Letter], alphabet: &Alphabet) -> bool {
    differentiability(w, alphabet) == Differentiability::Smooth
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> Alphabet {
        Alphabet::parse(s).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn derivative_trims_short_edge_runs() {
        let a = ab("1,2");
        assert_eq!(derivative(&w("2 2 1 1 2"), &a).unwrap(), w("2 2"));
        assert_eq!(derivative(&w("2 2"), &a).unwrap(), w("2"));
        assert_eq!(derivative(&w("1"), &a).unwrap(), Word::new());
        assert_eq!(derivative(&[], &a).unwrap(), Word::new());
        // Δ(w) = y z with both below aₙ.
        assert_eq!(derivative(&w("1 2"), &a).unwrap(), Word::new());
        // Δ(w) = aₙ x aₙ keeps everything.
        assert_eq!(derivative(&w("1 1 2 1 1"), &a).unwrap(), w("2 1 2"));
        // Δ(w) = y x aₙ and aₙ x z.
        assert_eq!(derivative(&w("1 2 1 1"), &a).unwrap(), w("1 2"));
        assert_eq!(derivative(&w("1 1 2 1"), &a).unwrap(), w("2 1"));
    }

    #[test]
    fn derivative_errors() {
        let a = ab("1,2");
        assert!(matches!(
            derivative(&w("1 1 1"), &a),
            Err(Error::NotDifferentiable(_))
        ));
        let odd = ab("1,3");
        // Interior run of length 2 is not a letter of {1,3}.
        assert!(matches!(
            derivative(&w("1 3 3 1"), &odd),
            Err(Error::NotDifferentiable(_))
        ));
        // Edge runs only need to be at most aₙ.
        assert_eq!(derivative(&w("3 3 1 3 3"), &odd).unwrap(), w("1"));
        assert!(matches!(
            derivative(&w("1 5"), &a),
            Err(Error::NotInAlphabet { .. })
        ));
    }

    #[test]
    fn prefix_derivative_drops_last_run() {
        let a = ab("1,2");
        assert_eq!(drop_last_run(&w("1 2 2 1 1")), &[1, 2, 2]);
        assert_eq!(drop_last_run(&w("2 2")), &[] as &[Letter]);
        assert_eq!(derivative_prefix(&w("1 2 2 1 1 2 1"), &a).unwrap(), w("2 2"));
    }

    #[test]
    fn differentiability_orders() {
        let a = ab("1,2");
        assert!(differentiability_order(&[], &a, 10));
        assert!(!differentiability_order(&w("1 1 1"), &a, 1));
        assert_eq!(differentiability(&w("1 1 1"), &a), Differentiability::Times(0));
        assert!(is_smooth_finite(&w("1 2 2 1 1 2 1 2 2 1"), &a));
    }

    #[test]
    fn four_times_but_not_five_times_differentiable() {
        let period = w(
            "3^3 1^3 3^3 1 3 1 3^3 1^3 3^3 1 3^3 1 3^3 1^3 3^3 1 3 1 3^3 1^3 3^3 1 3^3 1^3 3^3 1",
        );
        let word: Word = (0..4).flat_map(|_| period.iter().copied()).collect();
        let a = ab("1,3");
        assert!(differentiability_order(&word, &a, 4));
        assert!(!differentiability_order(&word, &a, 5));
        assert_eq!(differentiability(&word, &a), Differentiability::Times(4));
    }
}
