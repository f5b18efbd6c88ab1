//! Worked example circuits shipped with the crate, with the intermediate
//! values expected when they run on input `1111`.
//!
//! The three example circuits compute the same 4-line function: a Toffoli
//! cascade, a six-gate NCV circuit and a nine-gate NCV-|v1> circuit.

use crate::io::{parse_qc, parse_real};
use crate::ir::{QuantumCircuit, ReversibleCircuit};

pub const EXAMPLE_REAL: &str = include_str!("../fixtures/example.real");
pub const EXAMPLE_NCV_QC: &str = include_str!("../fixtures/example_ncv.qc");
pub const EXAMPLE_NCVV1_QC: &str = include_str!("../fixtures/example_ncvv1.qc");
pub const THREE_CONTROL_REAL: &str = include_str!("../fixtures/three_control.real");

pub const EXAMPLE_INPUT: &str = "1111";
pub const EXAMPLE_OUTPUT: &str = "1000";

/// `(gates applied, state)` checkpoints of the Toffoli cascade.
pub const EXAMPLE_REAL_TRACE: &[(usize, &str)] = &[(1, "1 1 1 0"), (2, "1 0 1 0"), (3, "1 0 0 0")];

pub const EXAMPLE_NCV_TRACE: &[(usize, &str)] =
    &[(1, "1 1 1 v1"), (2, "1 1 1 0"), (3, "1 0 1 0"), (4, "1 0 1 0"), (5, "1 0 0 0")];

pub const EXAMPLE_NCVV1_TRACE: &[(usize, &str)] =
    &[(2, "v1 v1 1 1"), (3, "v1 v1 1 0"), (4, "v1 0 1 0"), (6, "1 0 0 0")];

pub fn example_real() -> ReversibleCircuit {
    parse_real(EXAMPLE_REAL).expect("bundled fixture parses")
}

pub fn example_ncv() -> QuantumCircuit {
    parse_qc(EXAMPLE_NCV_QC).expect("bundled fixture parses")
}

pub fn example_ncvv1() -> QuantumCircuit {
    parse_qc(EXAMPLE_NCVV1_QC).expect("bundled fixture parses")
}

pub fn three_control_real() -> ReversibleCircuit {
    parse_real(THREE_CONTROL_REAL).expect("bundled fixture parses")
}
