//! Toffoli to NCV-|v1> mapping by control sensitisation.
//!
//! For controls `c1 < c2 < ... < ck` and target `t` the cascade is
//!
//! ```text
//! V c1
//! V c2 ctrl c1, V c3 ctrl c2, ..., V ck ctrl c(k-1)     sensitise
//! NOT t ctrl ck
//! V† ck ctrl c(k-1), ..., V† c2 ctrl c1                 desensitise
//! V† c1
//! ```
//!
//! After the sensitising prefix `ck` holds `v1` exactly when every control
//! was 1, so the `v1`-controlled NOT fires on the Toffoli condition. The
//! suffix is the prefix reversed and inverted. `2k + 1` gates, `2k - 1` of
//! them controlled, no extra lines.

use crate::ir::{Library, QuantumCircuit, QuantumGate, QuantumOpKind, ReversibleCircuit, ToffoliGate};

pub fn map_gate_v1(gate: &ToffoliGate) -> Vec<QuantumGate> {
    let controls = gate.controls();
    let target = gate.target();
    let Some((&last, _)) = controls.split_last() else {
        return vec![QuantumGate::uncontrolled(QuantumOpKind::Not, target)];
    };

    let mut prefix = Vec::with_capacity(controls.len());
    prefix.push(QuantumGate::uncontrolled(QuantumOpKind::V, controls[0]));
    for pair in controls.windows(2) {
        prefix.push(QuantumGate::controlled(QuantumOpKind::V, pair[0], pair[1]).expect("controls are distinct"));
    }

    let mut out = Vec::with_capacity(2 * controls.len() + 1);
    out.extend_from_slice(&prefix);
    out.push(QuantumGate::controlled(QuantumOpKind::Not, last, target).expect("target is not a control"));
    out.extend(prefix.iter().rev().map(QuantumGate::inverse));
    out
}

/// Maps every gate in order; the line count and names are kept.
pub fn map_circuit_v1(circuit: &ReversibleCircuit) -> QuantumCircuit {
    let mut out = QuantumCircuit::with_names(circuit.names().to_vec(), Library::NcvV1)
        .expect("names already validated");
    for g in circuit.gates() {
        out.extend(map_gate_v1(g)).expect("mapped gates stay on the original lines");
    }
    out
}
