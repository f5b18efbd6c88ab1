//! Dense complex state-vector simulation.
//!
//! This is an oracle for the four-valued engine, not a general simulator: it
//! starts from a basis (or product) state built from a [`QuartState`] and
//! multiplies in the gate unitaries one by one.
//!
//! NCV lines are qubits and the four restricted values embed as
//! `|0>`, `|1>`, `v0 = (1+i)/2 (1, -i)` and `v1 = (1+i)/2 (-i, 1)`.
//! NCV-|v1> lines are 4-level qudits whose basis order is `0, v0, 1, v1`.

use ndarray::Array2;
use num_complex::Complex64;

use super::quart::{QuartState, QuartValue};
use super::SimError;
use crate::ir::{LineId, Library, QuantumCircuit, QuantumGate, QuantumOpKind};

pub const NCV_DENSE_LINE_LIMIT: usize = 8;
pub const NCVV1_DENSE_LINE_LIMIT: usize = 6;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// `(1 + i) / 2`
const HALF_ONE_PLUS_I: Complex64 = Complex64::new(0.5, 0.5);
/// `(1 - i) / 2`
const HALF_ONE_MINUS_I: Complex64 = Complex64::new(0.5, -0.5);

fn perm4(rows: [[u8; 4]; 4]) -> Array2<Complex64> {
    Array2::from_shape_fn((4, 4), |(r, c)| if rows[r][c] == 1 { ONE } else { ZERO })
}

/// Single-line matrix of an operation in the given library.
pub fn base_unitary(kind: QuantumOpKind, library: Library) -> Array2<Complex64> {
    match (library, kind) {
        (Library::Ncv, QuantumOpKind::Not) => Array2::from_shape_vec((2, 2), vec![ZERO, ONE, ONE, ZERO]).unwrap(),
        (Library::Ncv, QuantumOpKind::V) => {
            Array2::from_shape_vec((2, 2), vec![ONE, -I, -I, ONE]).unwrap() * HALF_ONE_PLUS_I
        }
        (Library::Ncv, QuantumOpKind::VDag) => {
            Array2::from_shape_vec((2, 2), vec![ONE, I, I, ONE]).unwrap() * HALF_ONE_MINUS_I
        }
        (Library::NcvV1, QuantumOpKind::Not) => perm4([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]),
        (Library::NcvV1, QuantumOpKind::V) => perm4([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]),
        (Library::NcvV1, QuantumOpKind::VDag) => perm4([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]),
    }
}

fn trigger_digit(library: Library) -> usize {
    match library {
        Library::Ncv => 1,
        Library::NcvV1 => QuartValue::V1.basis_index(),
    }
}

/// Unitary of a gate on its own lines.
///
/// Uncontrolled gates give the `r x r` base matrix. Controlled gates give an
/// `r^2 x r^2` matrix indexed by `control * r + target`: identity on every
/// control block except the trigger block (`1` for NCV, `v1` for NCV-|v1>),
/// which carries the base matrix.
pub fn gate_unitary(gate: &QuantumGate, library: Library) -> Array2<Complex64> {
    let base = base_unitary(gate.kind(), library);
    if !gate.is_controlled() {
        return base;
    }
    let r = library.radix();
    let fire = trigger_digit(library);
    let mut m = Array2::zeros((r * r, r * r));
    for c in 0..r {
        for t_out in 0..r {
            for t_in in 0..r {
                m[[c * r + t_out, c * r + t_in]] = if c == fire {
                    base[[t_out, t_in]]
                } else if t_out == t_in {
                    ONE
                } else {
                    ZERO
                };
            }
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    radix: usize,
    line_count: usize,
}

fn single_line_vector(value: QuartValue, library: Library) -> Vec<Complex64> {
    match library {
        Library::NcvV1 => {
            let mut v = vec![ZERO; 4];
            v[value.basis_index()] = ONE;
            v
        }
        Library::Ncv => match value {
            QuartValue::Zero => vec![ONE, ZERO],
            QuartValue::One => vec![ZERO, ONE],
            QuartValue::V0 => vec![HALF_ONE_PLUS_I, HALF_ONE_PLUS_I * -I],
            QuartValue::V1 => vec![HALF_ONE_PLUS_I * -I, HALF_ONE_PLUS_I],
        },
    }
}

impl StateVector {
    /// Tensor product of the per-line embeddings of `state`.
    pub fn product_state(state: &QuartState, library: Library) -> Self {
        let radix = library.radix();
        let mut amplitudes = vec![ONE];
        for &v in state.values() {
            let line = single_line_vector(v, library);
            amplitudes = amplitudes.iter().flat_map(|&a| line.iter().map(move |&b| a * b)).collect();
        }
        StateVector { amplitudes, radix, line_count: state.len() }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn radix(&self) -> usize {
        self.radix
    }

    pub fn line_count(&self) -> usize {
        self.line_count
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Largest absolute amplitude difference.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        assert_eq!(self.amplitudes.len(), other.amplitudes.len(), "state vectors of different size");
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Basis state this vector equals within `tol`, if any: one amplitude
    /// within `tol` of 1 and all others within `tol` of 0.
    pub fn basis_label(&self, tol: f64) -> Option<QuartState> {
        let mut hit = None;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if (a - ONE).norm() <= tol {
                if hit.is_some() {
                    return None;
                }
                hit = Some(i);
            } else if a.norm() > tol {
                return None;
            }
        }
        let index = hit?;
        let to_value = |digit: usize| match self.radix {
            2 => QuartValue::from_bool(digit == 1),
            _ => QuartValue::from_basis_index(digit).expect("radix 4 digit"),
        };
        let values = (0..self.line_count)
            .map(|line| to_value(index / self.radix.pow((self.line_count - 1 - line) as u32) % self.radix))
            .collect();
        Some(QuartState(values))
    }

    /// Multiplies a local matrix into the lines `lines` (first line is the
    /// most significant local digit). Zero matrix entries are skipped.
    fn apply_local(&mut self, lines: &[LineId], matrix: &Array2<Complex64>) {
        let r = self.radix;
        let n = self.line_count;
        let strides: Vec<usize> = lines.iter().map(|l| r.pow((n - 1 - l.index()) as u32)).collect();
        let dim = matrix.nrows();
        let offsets: Vec<usize> = (0..dim)
            .map(|local| {
                let mut rem = local;
                let mut off = 0;
                for s in strides.iter().rev() {
                    off += (rem % r) * s;
                    rem /= r;
                }
                off
            })
            .collect();
        let entries: Vec<(usize, usize, Complex64)> = matrix
            .indexed_iter()
            .filter(|(_, v)| **v != ZERO)
            .map(|((row, col), v)| (row, col, *v))
            .collect();
        let mut local = vec![ZERO; dim];
        for base in 0..self.amplitudes.len() {
            if strides.iter().any(|s| base / s % r != 0) {
                continue;
            }
            local.iter_mut().for_each(|x| *x = ZERO);
            for &(row, col, v) in &entries {
                local[row] += v * self.amplitudes[base + offsets[col]];
            }
            for (k, off) in offsets.iter().enumerate() {
                self.amplitudes[base + off] = local[k];
            }
        }
    }
}

/// Runs the circuit on a basis input by state-vector multiplication.
///
/// NCV inputs must be Boolean; NCV-|v1> inputs may use any of the four
/// basis values. Limited to 8 qubits / 6 qudits.
pub fn simulate_dense(circuit: &QuantumCircuit, basis_input: &QuartState) -> Result<StateVector, SimError> {
    let library = circuit.library();
    let n = circuit.line_count();
    let max = match library {
        Library::Ncv => NCV_DENSE_LINE_LIMIT,
        Library::NcvV1 => NCVV1_DENSE_LINE_LIMIT,
    };
    if n > max {
        return Err(SimError::TooManyLines { lines: n, max });
    }
    if basis_input.len() != n {
        return Err(SimError::LengthMismatch { expected: n, found: basis_input.len() });
    }
    if library == Library::Ncv {
        if let Some((i, &value)) = basis_input.values().iter().enumerate().find(|(_, v)| !v.is_boolean()) {
            return Err(SimError::NonBooleanNcvInput { line: LineId(i), value });
        }
    }
    let mut state = StateVector::product_state(basis_input, library);
    for gate in circuit.gates() {
        let m = gate_unitary(gate, library);
        match gate.control() {
            Some(c) => state.apply_local(&[c, gate.target()], &m),
            None => state.apply_local(&[gate.target()], &m),
        }
    }
    Ok(state)
}
