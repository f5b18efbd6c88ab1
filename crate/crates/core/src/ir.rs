//! Circuit intermediate representations.
//!
//! A [`ReversibleCircuit`] is a cascade of multiple-control Toffoli gates; a
//! [`QuantumCircuit`] is a cascade of NOT / V / V† gates with at most one
//! control, tagged with the [`Library`] whose control semantics apply.
//!
//! Both containers validate every gate on insertion, so a circuit value never
//! references a line outside its range and no gate ever controls its own
//! target.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrError {
    #[error("target line {0} also appears as a control")]
    TargetInControls(LineId),
    #[error("control line {0} listed more than once")]
    DuplicateControl(LineId),
    #[error("controlled gate uses line {0} as both control and target")]
    ControlIsTarget(LineId),
    #[error("line {line} out of range for a circuit with {line_count} lines")]
    LineOutOfRange { line: LineId, line_count: usize },
    #[error("a circuit needs at least one line")]
    NoLines,
    #[error("expected {expected} line names, got {found}")]
    NameCountMismatch { expected: usize, found: usize },
    #[error("invalid line name {0:?}")]
    InvalidName(String),
    #[error("line name {0:?} used twice")]
    DuplicateName(String),
}

/// Zero-based index of a circuit line. Line 0 is drawn at the top and is the
/// most significant digit of an input pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LineId(pub usize);

impl LineId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for LineId {
    fn from(index: usize) -> Self {
        LineId(index)
    }
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multiple-control Toffoli gate `T(C, t)`.
///
/// Controls are kept sorted by line index. With no controls the gate is a
/// NOT, with one control a CNOT.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ToffoliGate {
    controls: Vec<LineId>,
    target: LineId,
}

impl ToffoliGate {
    /// Builds a gate, rejecting repeated controls and a target that is also a
    /// control. Duplicates are reported, never silently merged.
    pub fn new(controls: impl IntoIterator<Item = LineId>, target: LineId) -> Result<Self, IrError> {
        let mut controls: Vec<LineId> = controls.into_iter().collect();
        if controls.contains(&target) {
            return Err(IrError::TargetInControls(target));
        }
        controls.sort_unstable();
        if let Some(w) = controls.windows(2).find(|w| w[0] == w[1]) {
            return Err(IrError::DuplicateControl(w[0]));
        }
        Ok(ToffoliGate { controls, target })
    }

    pub fn not(target: LineId) -> Self {
        ToffoliGate { controls: Vec::new(), target }
    }

    pub fn controls(&self) -> &[LineId] {
        &self.controls
    }

    pub fn target(&self) -> LineId {
        self.target
    }

    /// Number of control lines, `|C|`.
    pub fn control_count(&self) -> usize {
        self.controls.len()
    }

    fn max_line(&self) -> LineId {
        self.controls.last().copied().map_or(self.target, |c| c.max(self.target))
    }
}

/// Free-function form of [`ToffoliGate::new`].
pub fn make_toffoli(controls: &[LineId], target: LineId) -> Result<ToffoliGate, IrError> {
    ToffoliGate::new(controls.iter().copied(), target)
}

fn default_names(line_count: usize) -> Vec<String> {
    (1..=line_count).map(|i| format!("x{i}")).collect()
}

fn check_names(names: &[String], line_count: usize) -> Result<(), IrError> {
    if names.len() != line_count {
        return Err(IrError::NameCountMismatch { expected: line_count, found: names.len() });
    }
    for (i, name) in names.iter().enumerate() {
        let bad = name.is_empty()
            || name.starts_with('.')
            || name.starts_with('#')
            || name.chars().any(|c| c.is_whitespace() || c.is_control());
        if bad {
            return Err(IrError::InvalidName(name.clone()));
        }
        if names[..i].contains(name) {
            return Err(IrError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

fn check_line(line: LineId, line_count: usize) -> Result<(), IrError> {
    if line.0 < line_count {
        Ok(())
    } else {
        Err(IrError::LineOutOfRange { line, line_count })
    }
}

/// Ordered cascade `g1 g2 ... gd` of Toffoli gates over `n` lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReversibleCircuit {
    line_count: usize,
    names: Vec<String>,
    gates: Vec<ToffoliGate>,
}

impl ReversibleCircuit {
    /// Empty circuit whose lines are named `x1 ... xn`.
    pub fn new(line_count: usize) -> Result<Self, IrError> {
        if line_count == 0 {
            return Err(IrError::NoLines);
        }
        Ok(ReversibleCircuit { line_count, names: default_names(line_count), gates: Vec::new() })
    }

    pub fn with_names(names: Vec<String>) -> Result<Self, IrError> {
        if names.is_empty() {
            return Err(IrError::NoLines);
        }
        check_names(&names, names.len())?;
        Ok(ReversibleCircuit { line_count: names.len(), names, gates: Vec::new() })
    }

    pub fn push(&mut self, gate: ToffoliGate) -> Result<(), IrError> {
        check_line(gate.max_line(), self.line_count)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Consuming form of [`push`](Self::push), convenient for chaining.
    pub fn append_gate(mut self, gate: ToffoliGate) -> Result<Self, IrError> {
        self.push(gate)?;
        Ok(self)
    }

    pub fn line_count(&self) -> usize {
        self.line_count
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gates(&self) -> &[ToffoliGate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Toffoli gates are self-inverse, so the inverse circuit is the same
    /// cascade read backwards.
    pub fn inverse(&self) -> Self {
        ReversibleCircuit {
            line_count: self.line_count,
            names: self.names.clone(),
            gates: self.gates.iter().rev().cloned().collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuantumOpKind {
    Not,
    V,
    VDag,
}

impl QuantumOpKind {
    pub fn inverse(self) -> Self {
        match self {
            QuantumOpKind::Not => QuantumOpKind::Not,
            QuantumOpKind::V => QuantumOpKind::VDag,
            QuantumOpKind::VDag => QuantumOpKind::V,
        }
    }
}

/// Quantum gate library. Decides which control value fires a controlled gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Library {
    /// Qubits; controls fire on `1`.
    Ncv,
    /// Four-level qudits with basis order `0, v0, 1, v1`; controls fire on `v1`.
    NcvV1,
}

impl Library {
    pub fn radix(self) -> usize {
        match self {
            Library::Ncv => 2,
            Library::NcvV1 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Library::Ncv => "ncv",
            Library::NcvV1 => "ncv-v1",
        }
    }
}

impl fmt::Display for Library {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Library {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ncv" => Ok(Library::Ncv),
            "ncv-v1" | "ncvv1" | "ncv_v1" => Ok(Library::NcvV1),
            _ => Err(format!("unknown library {s:?} (expected ncv or ncv-v1)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumGate {
    kind: QuantumOpKind,
    target: LineId,
    control: Option<LineId>,
}

impl QuantumGate {
    pub fn uncontrolled(kind: QuantumOpKind, target: LineId) -> Self {
        QuantumGate { kind, target, control: None }
    }

    pub fn controlled(kind: QuantumOpKind, control: LineId, target: LineId) -> Result<Self, IrError> {
        if control == target {
            return Err(IrError::ControlIsTarget(target));
        }
        Ok(QuantumGate { kind, target, control: Some(control) })
    }

    pub fn kind(&self) -> QuantumOpKind {
        self.kind
    }

    pub fn target(&self) -> LineId {
        self.target
    }

    pub fn control(&self) -> Option<LineId> {
        self.control
    }

    pub fn is_controlled(&self) -> bool {
        self.control.is_some()
    }

    /// Same lines, inverse operation.
    pub fn inverse(&self) -> Self {
        QuantumGate { kind: self.kind.inverse(), ..*self }
    }

    fn max_line(&self) -> LineId {
        self.control.map_or(self.target, |c| c.max(self.target))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumCircuit {
    line_count: usize,
    library: Library,
    names: Vec<String>,
    gates: Vec<QuantumGate>,
}

impl QuantumCircuit {
    pub fn new(line_count: usize, library: Library) -> Result<Self, IrError> {
        if line_count == 0 {
            return Err(IrError::NoLines);
        }
        Ok(QuantumCircuit { line_count, library, names: default_names(line_count), gates: Vec::new() })
    }

    pub fn with_names(names: Vec<String>, library: Library) -> Result<Self, IrError> {
        if names.is_empty() {
            return Err(IrError::NoLines);
        }
        check_names(&names, names.len())?;
        Ok(QuantumCircuit { line_count: names.len(), library, names, gates: Vec::new() })
    }

    pub fn push(&mut self, gate: QuantumGate) -> Result<(), IrError> {
        check_line(gate.max_line(), self.line_count)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = QuantumGate>) -> Result<(), IrError> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    pub fn line_count(&self) -> usize {
        self.line_count
    }

    pub fn library(&self) -> Library {
        self.library
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gates(&self) -> &[QuantumGate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Copy of the circuit with the gate at `index` dropped.
    pub fn without_gate(&self, index: usize) -> Self {
        let mut out = self.clone();
        if index < out.gates.len() {
            out.gates.remove(index);
        }
        out
    }
}
