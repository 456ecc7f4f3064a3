//! Empirical checks of the structural theorems on long prefixes: letter
//! frequencies, recurrence and gap statistics, closure of factor sets under
//! reversal and letter permutations.
//!
//! Factor scans over different lengths run in parallel; every report is
//! ordered by factor length, then lexicographically, so output is
//! deterministic.

mod closure;
mod factors;
mod frequency;
mod report;

pub use closure::{
    closure_check, closure_check_factors, equal_run_blocks, phi_inverse_palindrome_check,
    ClosureOp, ClosureWitness, PalindromeCheck, RunBlock, Verdict,
};
pub use factors::{
    gap_changes, max_gap_report, naive_occurrences, recurrence_report, recurrence_window,
    FactorIndex, FactorStats, GapChange,
};
pub use frequency::{
    exact_frequency_check, is_well_proportioned_prefix, letter_frequencies, FrequencyReport,
    FrequencyRow,
};
pub use report::{write_frequency_csv, write_gap_csv, write_witness_csv};
