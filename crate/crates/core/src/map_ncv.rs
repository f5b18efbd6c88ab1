//! Toffoli to NCV mapping for gates with at most two controls.
//!
//! Larger gates have no decomposition here; their cost comes from the
//! embedded table in [`crate::cost`].

use thiserror::Error;

use crate::ir::{Library, QuantumCircuit, QuantumGate, QuantumOpKind, ReversibleCircuit, ToffoliGate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("{}Toffoli gate with {controls} controls has no NCV decomposition (at most 2 supported)",
        gate_index.map(|i| format!("gate index {i}: ")).unwrap_or_default())]
    UnsupportedControlCount { gate_index: Option<usize>, controls: usize },
}

pub const NCV_MAX_CONTROLS: usize = 2;

/// NCV cascade of a single gate.
///
/// Two controls `c1 < c2` on target `t` give the five-gate cascade
/// `V t|c2, CNOT c2|c1, V† t|c2, CNOT c2|c1, V t|c1`.
pub fn map_gate_ncv(gate: &ToffoliGate) -> Result<Vec<QuantumGate>, MapError> {
    use QuantumOpKind::*;
    let t = gate.target();
    let c = |kind, ctrl, tgt| QuantumGate::controlled(kind, ctrl, tgt).expect("distinct lines");
    match *gate.controls() {
        [] => Ok(vec![QuantumGate::uncontrolled(Not, t)]),
        [c1] => Ok(vec![c(Not, c1, t)]),
        [c1, c2] => Ok(vec![c(V, c2, t), c(Not, c1, c2), c(VDag, c2, t), c(Not, c1, c2), c(V, c1, t)]),
        ref more => Err(MapError::UnsupportedControlCount { gate_index: None, controls: more.len() }),
    }
}

pub fn map_circuit_ncv(circuit: &ReversibleCircuit) -> Result<QuantumCircuit, MapError> {
    let mut out =
        QuantumCircuit::with_names(circuit.names().to_vec(), Library::Ncv).expect("names already validated");
    for (i, g) in circuit.gates().iter().enumerate() {
        let gates = map_gate_ncv(g).map_err(|MapError::UnsupportedControlCount { controls, .. }| {
            MapError::UnsupportedControlCount { gate_index: Some(i), controls }
        })?;
        out.extend(gates).expect("mapped gates stay on the original lines");
    }
    Ok(out)
}
