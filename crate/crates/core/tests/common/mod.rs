#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use revq_core::sim::QuartValue;
use revq_core::{
    step_quart, Library, LineId, QuantumCircuit, QuantumGate, QuantumOpKind, QuartState, ReversibleCircuit,
    ToffoliGate,
};

pub const KINDS: [QuantumOpKind; 3] = [QuantumOpKind::Not, QuantumOpKind::V, QuantumOpKind::VDag];

pub fn random_toffoli<R: Rng>(rng: &mut R, n: usize, max_controls: usize) -> ToffoliGate {
    let mut lines: Vec<usize> = (0..n).collect();
    lines.shuffle(rng);
    let k = rng.gen_range(0..=max_controls.min(n - 1));
    let controls = lines[1..=k].iter().map(|&i| LineId(i));
    ToffoliGate::new(controls, LineId(lines[0])).unwrap()
}

pub fn random_reversible<R: Rng>(rng: &mut R, n: usize, gates: usize, max_controls: usize) -> ReversibleCircuit {
    let mut c = ReversibleCircuit::new(n).unwrap();
    for _ in 0..gates {
        c.push(random_toffoli(rng, n, max_controls)).unwrap();
    }
    c
}

pub fn random_gate<R: Rng>(rng: &mut R, n: usize) -> QuantumGate {
    let kind = *KINDS.choose(rng).unwrap();
    let target = rng.gen_range(0..n);
    if n > 1 && rng.gen_bool(0.6) {
        let mut control = rng.gen_range(0..n - 1);
        if control >= target {
            control += 1;
        }
        QuantumGate::controlled(kind, LineId(control), LineId(target)).unwrap()
    } else {
        QuantumGate::uncontrolled(kind, LineId(target))
    }
}

/// Any cascade is valid under the v1 trigger.
pub fn random_ncvv1<R: Rng>(rng: &mut R, n: usize, gates: usize) -> QuantumCircuit {
    let mut c = QuantumCircuit::new(n, Library::NcvV1).unwrap();
    for _ in 0..gates {
        c.push(random_gate(rng, n)).unwrap();
    }
    c
}

/// NCV cascade whose controls stay Boolean on every Boolean input. Gates
/// are drawn at random and rejected when their control could hold a V-value
/// for some input.
pub fn random_valid_ncv<R: Rng>(rng: &mut R, n: usize, gates: usize) -> QuantumCircuit {
    let mut c = QuantumCircuit::new(n, Library::Ncv).unwrap();
    let mut states: Vec<Vec<QuartValue>> = (0..1u64 << n).map(|p| QuartState::from_pattern(p, n).0).collect();
    let mut attempts = 0;
    while c.len() < gates && attempts < 50 * gates {
        attempts += 1;
        let g = random_gate(rng, n);
        if let Some(ctrl) = g.control() {
            if states.iter().any(|s| !s[ctrl.index()].is_boolean()) {
                continue;
            }
        }
        for s in &mut states {
            let fire = g.control().is_none_or(|ctrl| s[ctrl.index()] == QuartValue::One);
            if fire {
                let t = g.target().index();
                s[t] = step_quart(s[t], g.kind());
            }
        }
        c.push(g).unwrap();
    }
    c
}

pub fn controls(k: usize) -> Vec<LineId> {
    (0..k).map(LineId).collect()
}
