//! Mapping of reversible Toffoli circuits onto quantum gate cascades.
//!
//! Two target libraries are supported:
//!
//! - **NCV**: NOT, CNOT, controlled-V and controlled-V† on qubits, where V is
//!   the square root of NOT. Toffoli gates with up to two controls are
//!   decomposed; larger ones are only costed from a lookup table.
//! - **NCV-|v1>**: the same operations on 4-level qudits (basis order `0, v0,
//!   1, v1`) whose controlled gates fire when the control holds `v1`. Any
//!   Toffoli gate maps to `2k + 1` gates without extra lines.
//!
//! Circuits are checked by a restricted four-valued simulator, which is in
//! turn cross-checked against a dense state-vector oracle.

pub mod cost;
pub mod fixtures;
pub mod io;
pub mod ir;
pub mod map_ncv;
pub mod map_v1;
pub mod sim;
pub mod verify;

pub use cost::{compare_circuit, delta_range, ncv_cost, ncvv1_cost, report, CostError, CostReport};
pub use io::{parse_qc, parse_real, write_qc, write_real, FormatError};
pub use ir::{
    make_toffoli, IrError, Library, LineId, QuantumCircuit, QuantumGate, QuantumOpKind, ReversibleCircuit,
    ToffoliGate,
};
pub use map_ncv::{map_circuit_ncv, map_gate_ncv, MapError};
pub use map_v1::{map_circuit_v1, map_gate_v1};
pub use sim::{
    gate_unitary, simulate_dense, simulate_quantum, simulate_reversible, step_quart, trace_quantum, trace_reversible, truth_table,
    QuartState, QuartValue, SimError, StateVector,
};
pub use verify::{verify, Verdict, VerifyError, VerifyMode};
