//! Restricted four-valued simulation over `{0, v0, 1, v1}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SimError;
use crate::ir::{Library, QuantumCircuit, QuantumGate, QuantumOpKind};

/// One of the four values a line can hold when inputs are Boolean.
///
/// The discriminants follow the qudit basis order `0, v0, 1, v1`, so
/// `value as usize` is the basis index used by the four-level library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuartValue {
    Zero = 0,
    V0 = 1,
    One = 2,
    V1 = 3,
}

impl QuartValue {
    pub const ALL: [QuartValue; 4] = [QuartValue::Zero, QuartValue::V0, QuartValue::One, QuartValue::V1];

    pub fn from_bool(bit: bool) -> Self {
        if bit {
            QuartValue::One
        } else {
            QuartValue::Zero
        }
    }

    pub fn is_boolean(self) -> bool {
        matches!(self, QuartValue::Zero | QuartValue::One)
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            QuartValue::Zero => Some(false),
            QuartValue::One => Some(true),
            _ => None,
        }
    }

    /// Position in the basis order `0, v0, 1, v1`.
    pub fn basis_index(self) -> usize {
        self as usize
    }

    pub fn from_basis_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            QuartValue::Zero => "0",
            QuartValue::V0 => "v0",
            QuartValue::One => "1",
            QuartValue::V1 => "v1",
        }
    }
}

impl fmt::Display for QuartValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Effect of one operation on a single line.
///
/// V walks the cycle `0 -> v0 -> 1 -> v1 -> 0`, V† walks it backwards and NOT
/// swaps `0 <-> 1` and `v0 <-> v1`.
pub fn step_quart(value: QuartValue, kind: QuantumOpKind) -> QuartValue {
    let i = value.basis_index();
    let j = match kind {
        QuantumOpKind::V => (i + 1) % 4,
        QuantumOpKind::VDag => (i + 3) % 4,
        QuantumOpKind::Not => (i + 2) % 4,
    };
    QuartValue::ALL[j]
}

/// Values of every line at one point of a cascade.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuartState(pub Vec<QuartValue>);

impl QuartState {
    pub fn from_bools(bits: &[bool]) -> Self {
        QuartState(bits.iter().map(|&b| QuartValue::from_bool(b)).collect())
    }

    /// Pattern `index` over `line_count` lines, line 0 most significant.
    pub fn from_pattern(index: u64, line_count: usize) -> Self {
        QuartState(
            (0..line_count)
                .map(|i| QuartValue::from_bool(index >> (line_count - 1 - i) & 1 == 1))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[QuartValue] {
        &self.0
    }

    pub fn is_boolean(&self) -> bool {
        self.0.iter().all(|v| v.is_boolean())
    }

    pub fn to_bools(&self) -> Option<Vec<bool>> {
        self.0.iter().map(|v| v.as_bool()).collect()
    }

    /// Inverse of [`from_pattern`](Self::from_pattern); `None` unless every
    /// line is Boolean.
    pub fn to_pattern(&self) -> Option<u64> {
        self.0.iter().try_fold(0u64, |acc, v| v.as_bool().map(|b| acc << 1 | b as u64))
    }

    /// `1000` for Boolean states, the spaced form otherwise.
    pub fn compact(&self) -> String {
        if self.is_boolean() {
            self.0.iter().map(|v| v.symbol()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for QuartState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Accepts `1111`, `v1 v1 1 1`, `v1,v1,1,1` or `v1v111`.
impl FromStr for QuartState {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        let mut chars = s.char_indices().peekable();
        while let Some((pos, c)) = chars.next() {
            let value = match c {
                c if c.is_whitespace() || c == ',' => continue,
                '0' => QuartValue::Zero,
                '1' => QuartValue::One,
                'v' | 'V' => match chars.next() {
                    Some((_, '0')) => QuartValue::V0,
                    Some((_, '1')) => QuartValue::V1,
                    _ => return Err(SimError::InvalidSymbol { position: pos, symbol: s[pos..].chars().take(2).collect() }),
                },
                other => return Err(SimError::InvalidSymbol { position: pos, symbol: other.to_string() }),
            };
            out.push(value);
        }
        Ok(QuartState(out))
    }
}

fn trigger(library: Library) -> QuartValue {
    match library {
        Library::Ncv => QuartValue::One,
        Library::NcvV1 => QuartValue::V1,
    }
}

fn apply_gate(
    library: Library,
    gate: &QuantumGate,
    gate_index: usize,
    values: &mut [QuartValue],
) -> Result<(), SimError> {
    let fire = match gate.control() {
        None => true,
        Some(c) => {
            let cv = values[c.index()];
            if library == Library::Ncv && !cv.is_boolean() {
                return Err(SimError::InvalidNcvControl { gate_index, line: c, value: cv });
            }
            cv == trigger(library)
        }
    };
    if fire {
        let t = gate.target().index();
        values[t] = step_quart(values[t], gate.kind());
    }
    Ok(())
}

fn check_len(circuit: &QuantumCircuit, input: &QuartState) -> Result<(), SimError> {
    if input.len() != circuit.line_count() {
        return Err(SimError::LengthMismatch { expected: circuit.line_count(), found: input.len() });
    }
    Ok(())
}

/// Runs the cascade on a four-valued input.
///
/// A controlled gate fires iff its control holds the library trigger (`1` for
/// NCV, `v1` for NCV-|v1>). Under NCV a control holding `v0`/`v1` is outside
/// the restricted model and is reported as an error.
pub fn simulate_quantum(circuit: &QuantumCircuit, input: &QuartState) -> Result<QuartState, SimError> {
    check_len(circuit, input)?;
    let mut values = input.0.clone();
    for (i, g) in circuit.gates().iter().enumerate() {
        apply_gate(circuit.library(), g, i, &mut values)?;
    }
    Ok(QuartState(values))
}

/// Like [`simulate_quantum`] but returns the state after every gate; entry
/// `i` is the state once gate `i` has been applied.
pub fn trace_quantum(circuit: &QuantumCircuit, input: &QuartState) -> Result<Vec<QuartState>, SimError> {
    check_len(circuit, input)?;
    let mut values = input.0.clone();
    let mut trace = Vec::with_capacity(circuit.len());
    for (i, g) in circuit.gates().iter().enumerate() {
        apply_gate(circuit.library(), g, i, &mut values)?;
        trace.push(QuartState(values.clone()));
    }
    Ok(trace)
}
