//! Simulation engines.
//!
//! - Boolean simulation of Toffoli cascades and whole truth tables.
//! - [`quart`]: the restricted four-valued engine used for quantum cascades.
//! - [`dense`]: a complex state-vector oracle used to cross-check the
//!   four-valued engine.
//!
//! Patterns are read with line 0 as the most significant digit, so `1111 ->
//! 1000` means line 0 stays 1 and lines 1..3 end at 0.

pub mod dense;
pub mod quart;

use rayon::prelude::*;
use thiserror::Error;

use crate::ir::{LineId, ReversibleCircuit, ToffoliGate};

pub use dense::{gate_unitary, simulate_dense, StateVector};
pub use quart::{simulate_quantum, step_quart, trace_quantum, QuartState, QuartValue};

/// Largest line count [`truth_table`] will enumerate by default.
pub const EXHAUSTIVE_LINE_LIMIT: usize = 20;

/// Below this many lines the table is filled on the calling thread.
const PARALLEL_LINE_THRESHOLD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("input has {found} values but the circuit has {expected} lines")]
    LengthMismatch { expected: usize, found: usize },
    #[error("gate index {gate_index}: NCV control line {line} holds {value}, only 0/1 are valid controls")]
    InvalidNcvControl { gate_index: usize, line: LineId, value: QuartValue },
    #[error("{lines} lines exceeds the limit of {max} for this operation")]
    TooManyLines { lines: usize, max: usize },
    #[error("NCV dense simulation needs a Boolean input, line {line} holds {value}")]
    NonBooleanNcvInput { line: LineId, value: QuartValue },
    #[error("invalid symbol {symbol:?} at position {position}")]
    InvalidSymbol { position: usize, symbol: String },
    #[error("output table is not a bijection (pattern {0} hit twice)")]
    NotBijective(u64),
}

/// Flips the target iff every control is set.
pub fn simulate_reversible(circuit: &ReversibleCircuit, input: &[bool]) -> Result<Vec<bool>, SimError> {
    if input.len() != circuit.line_count() {
        return Err(SimError::LengthMismatch { expected: circuit.line_count(), found: input.len() });
    }
    let mut state = input.to_vec();
    for g in circuit.gates() {
        if g.controls().iter().all(|c| state[c.index()]) {
            state[g.target().index()] ^= true;
        }
    }
    Ok(state)
}

/// State after each gate; the last entry is the output.
pub fn trace_reversible(circuit: &ReversibleCircuit, input: &[bool]) -> Result<Vec<Vec<bool>>, SimError> {
    if input.len() != circuit.line_count() {
        return Err(SimError::LengthMismatch { expected: circuit.line_count(), found: input.len() });
    }
    let mut state = input.to_vec();
    let mut trace = Vec::with_capacity(circuit.len());
    for g in circuit.gates() {
        if g.controls().iter().all(|c| state[c.index()]) {
            state[g.target().index()] ^= true;
        }
        trace.push(state.clone());
    }
    Ok(trace)
}

/// Bit masks of a gate in pattern encoding.
fn gate_masks(gate: &ToffoliGate, line_count: usize) -> (u64, u64) {
    let bit = |l: LineId| 1u64 << (line_count - 1 - l.index());
    let controls = gate.controls().iter().fold(0, |m, &c| m | bit(c));
    (controls, bit(gate.target()))
}

/// Applies the circuit to a packed pattern (line 0 is the high bit).
pub fn apply_to_pattern(circuit: &ReversibleCircuit, pattern: u64) -> u64 {
    let n = circuit.line_count();
    circuit.gates().iter().fold(pattern, |p, g| {
        let (cm, tm) = gate_masks(g, n);
        if p & cm == cm {
            p ^ tm
        } else {
            p
        }
    })
}

/// Permutation of `0..2^n` realised by a reversible circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<u64>);

impl Permutation {
    pub fn from_table(table: Vec<u64>) -> Result<Self, SimError> {
        let mut seen = vec![false; table.len()];
        for &v in &table {
            match seen.get_mut(v as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(SimError::NotBijective(v)),
            }
        }
        Ok(Permutation(table))
    }

    pub fn get(&self, input: u64) -> u64 {
        self.0[input as usize]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i as u64 == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u64;
        }
        Permutation(inv)
    }
}

/// Full truth table with the default line limit.
pub fn truth_table(circuit: &ReversibleCircuit) -> Result<Permutation, SimError> {
    truth_table_bounded(circuit, EXHAUSTIVE_LINE_LIMIT)
}

pub fn truth_table_bounded(circuit: &ReversibleCircuit, max_lines: usize) -> Result<Permutation, SimError> {
    let n = circuit.line_count();
    if n > max_lines || n >= 64 {
        return Err(SimError::TooManyLines { lines: n, max: max_lines });
    }
    let table: Vec<u64> = if n < PARALLEL_LINE_THRESHOLD {
        (0..1u64 << n).map(|p| apply_to_pattern(circuit, p)).collect()
    } else {
        (0..1u64 << n).into_par_iter().map(|p| apply_to_pattern(circuit, p)).collect()
    };
    Permutation::from_table(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::make_toffoli;

    fn l(i: usize) -> LineId {
        LineId(i)
    }

    fn example_circuit() -> ReversibleCircuit {
        let mut c = ReversibleCircuit::new(4).unwrap();
        for (ctrl, t) in [(vec![0, 1], 3), (vec![0], 1), (vec![0], 2), (vec![3], 0)] {
            let ctrl: Vec<LineId> = ctrl.into_iter().map(LineId).collect();
            c.push(make_toffoli(&ctrl, l(t)).unwrap()).unwrap();
        }
        c
    }

    #[test]
    fn example_maps_1111_to_1000() {
        let out = simulate_reversible(&example_circuit(), &[true; 4]).unwrap();
        assert_eq!(out, vec![true, false, false, false]);
        let tt = truth_table(&example_circuit()).unwrap();
        assert_eq!(tt.get(0b1111), 0b1000);
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = ReversibleCircuit::new(3).unwrap();
        assert_eq!(simulate_reversible(&c, &[true, false, true]).unwrap(), vec![true, false, true]);
        assert!(truth_table(&c).unwrap().is_identity());
    }

    #[test]
    fn single_not_on_one_line() {
        let c = ReversibleCircuit::new(1).unwrap().append_gate(ToffoliGate::not(l(0))).unwrap();
        assert_eq!(truth_table(&c).unwrap().as_slice(), &[1, 0]);
    }

    #[test]
    fn toffoli_only_swaps_110_and_111() {
        let c = ReversibleCircuit::new(3).unwrap().append_gate(make_toffoli(&[l(0), l(1)], l(2)).unwrap()).unwrap();
        for p in 0..8u64 {
            let bits: Vec<bool> = (0..3).map(|i| p >> (2 - i) & 1 == 1).collect();
            let out = simulate_reversible(&c, &bits).unwrap();
            let expected = match p {
                0b110 => vec![true, true, true],
                0b111 => vec![true, true, false],
                _ => bits.clone(),
            };
            assert_eq!(out, expected, "input {p:03b}");
        }
    }

    #[test]
    fn trace_ends_at_output() {
        let trace = trace_reversible(&example_circuit(), &[true; 4]).unwrap();
        assert_eq!(trace.len(), 4);
        assert_eq!(trace[0], vec![true, true, true, false]);
        assert_eq!(trace[3], simulate_reversible(&example_circuit(), &[true; 4]).unwrap());
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            simulate_reversible(&example_circuit(), &[true, true]),
            Err(SimError::LengthMismatch { expected: 4, found: 2 })
        );
    }

    #[test]
    fn too_many_lines() {
        let c = ReversibleCircuit::new(21).unwrap();
        assert_eq!(truth_table(&c), Err(SimError::TooManyLines { lines: 21, max: 20 }));
        assert!(truth_table_bounded(&c, 21).is_ok());
    }

    #[test]
    fn non_bijective_table_rejected() {
        assert_eq!(Permutation::from_table(vec![0, 0]), Err(SimError::NotBijective(0)));
        assert_eq!(Permutation::from_table(vec![0, 2]), Err(SimError::NotBijective(2)));
    }

    #[test]
    fn inverse_circuit_gives_inverse_permutation() {
        let c = example_circuit();
        let fwd = truth_table(&c).unwrap();
        let back = truth_table(&c.inverse()).unwrap();
        assert_eq!(fwd.inverse(), back);
    }
}
