//! Functional equivalence of a reversible circuit and a quantum circuit on
//! Boolean inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ir::{Library, QuantumCircuit, ReversibleCircuit};
use crate::sim::dense::{simulate_dense, StateVector, NCVV1_DENSE_LINE_LIMIT, NCV_DENSE_LINE_LIMIT};
use crate::sim::{apply_to_pattern, simulate_quantum, QuartState, SimError, EXHAUSTIVE_LINE_LIMIT};

/// Amplitude tolerance for dense comparisons.
pub const DENSE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every one of the `2^n` Boolean inputs (`n <= 20`).
    Exhaustive,
    /// `samples` uniformly drawn inputs from a seeded generator.
    Random { samples: usize, seed: u64 },
    /// Every Boolean input, quantum side run through the state-vector oracle.
    Dense,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Equivalent { checked: u64 },
    Counterexample(Counterexample),
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("reversible circuit has {reversible} lines, quantum circuit has {quantum}")]
    LineCountMismatch { reversible: usize, quantum: usize },
    #[error("{lines} lines exceeds the limit of {max} for this mode")]
    TooManyLines { lines: usize, max: usize },
    #[error("simulating input {input}: {source}")]
    Simulation { input: String, source: SimError },
}

fn pattern_string(p: u64, n: usize) -> String {
    QuartState::from_pattern(p, n).compact()
}

/// `Ok(None)` when the quantum circuit agrees on `pattern`.
fn check_restricted(
    rev: &ReversibleCircuit,
    qc: &QuantumCircuit,
    pattern: u64,
) -> Result<Option<Counterexample>, VerifyError> {
    let n = rev.line_count();
    let expected = apply_to_pattern(rev, pattern);
    let input = QuartState::from_pattern(pattern, n);
    let actual = simulate_quantum(qc, &input)
        .map_err(|source| VerifyError::Simulation { input: input.compact(), source })?;
    if actual.to_pattern() == Some(expected) {
        Ok(None)
    } else {
        Ok(Some(Counterexample { input: input.compact(), expected: pattern_string(expected, n), actual: actual.compact() }))
    }
}

fn check_dense(rev: &ReversibleCircuit, qc: &QuantumCircuit, pattern: u64) -> Result<Option<Counterexample>, VerifyError> {
    let n = rev.line_count();
    let expected = apply_to_pattern(rev, pattern);
    let input = QuartState::from_pattern(pattern, n);
    let state = simulate_dense(qc, &input).map_err(|source| VerifyError::Simulation { input: input.compact(), source })?;
    let want = StateVector::product_state(&QuartState::from_pattern(expected, n), qc.library());
    if state.max_abs_diff(&want) <= DENSE_TOLERANCE {
        return Ok(None);
    }
    let actual = state
        .basis_label(DENSE_TOLERANCE)
        .map(|s| s.compact())
        .unwrap_or_else(|| "<not a basis state>".to_string());
    Ok(Some(Counterexample { input: input.compact(), expected: pattern_string(expected, n), actual }))
}

fn first_failure<F>(patterns: impl IntoParallelIterator<Item = u64>, check: F) -> Result<Option<Counterexample>, VerifyError>
where
    F: Fn(u64) -> Result<Option<Counterexample>, VerifyError> + Sync,
{
    patterns
        .into_par_iter()
        .find_map_first(|p| match check(p) {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

/// Checks that `qc` computes the same Boolean function as `rev`.
///
/// A quantum output that is not Boolean counts as a mismatch. Simulation
/// errors (such as an NCV control holding a V-value) abort the check.
pub fn verify(rev: &ReversibleCircuit, qc: &QuantumCircuit, mode: VerifyMode) -> Result<Verdict, VerifyError> {
    let n = rev.line_count();
    if n != qc.line_count() {
        return Err(VerifyError::LineCountMismatch { reversible: n, quantum: qc.line_count() });
    }
    let (failure, checked) = match mode {
        VerifyMode::Exhaustive => {
            if n > EXHAUSTIVE_LINE_LIMIT {
                return Err(VerifyError::TooManyLines { lines: n, max: EXHAUSTIVE_LINE_LIMIT });
            }
            (first_failure(0..1u64 << n, |p| check_restricted(rev, qc, p))?, 1u64 << n)
        }
        VerifyMode::Random { samples, seed } => {
            if n >= 64 {
                return Err(VerifyError::TooManyLines { lines: n, max: 63 });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let patterns: Vec<u64> = (0..samples).map(|_| rng.gen_range(0..1u64 << n)).collect();
            (first_failure(patterns, |p| check_restricted(rev, qc, p))?, samples as u64)
        }
        VerifyMode::Dense => {
            let max = match qc.library() {
                Library::Ncv => NCV_DENSE_LINE_LIMIT,
                Library::NcvV1 => NCVV1_DENSE_LINE_LIMIT,
            };
            if n > max {
                return Err(VerifyError::TooManyLines { lines: n, max });
            }
            (first_failure(0..1u64 << n, |p| check_dense(rev, qc, p))?, 1u64 << n)
        }
    };
    Ok(match failure {
        None => Verdict::Equivalent { checked },
        Some(c) => Verdict::Counterexample(c),
    })
}
