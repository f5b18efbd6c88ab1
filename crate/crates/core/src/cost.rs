//! Quantum cost metrics.
//!
//! Cost here is the number of controlled (two-line) gates; the total gate
//! count is reported next to it. NCV costs for Toffoli gates come from a
//! published lookup table of the best known decompositions, indexed by the
//! number of controls and the number of free (ancillary) lines. NCV-|v1>
//! costs follow from the sensitisation cascade: `2k - 1` controlled gates.

use serde::Serialize;
use thiserror::Error;

use crate::ir::{QuantumCircuit, ReversibleCircuit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
pub enum CostError {
    #[error("no NCV cost data for {0} controls (table covers 1..=15)")]
    OutOfTableRange(usize),
    #[error("at least one ancillary line must be available, got {0}")]
    InsufficientAncillae(usize),
}

pub const NCV_TABLE_MAX_CONTROLS: usize = 15;

/// NCV quantum cost of a `k`-control Toffoli gate. Row `k - 1`, column
/// `a - 1` is the cost with `a` ancillary lines available; missing columns
/// mean more ancillae do not help.
pub const NCV_COST_TABLE: [&[u32]; NCV_TABLE_MAX_CONTROLS] = [
    &[1],
    &[5],
    &[14],
    &[20],
    &[32],
    &[44],
    &[64, 56],
    &[76, 68],
    &[96, 88, 80],
    &[108, 100, 92],
    &[132, 120, 112, 104],
    &[156, 132, 124, 116],
    &[180, 156, 148, 136, 128],
    &[204, 180, 172, 148, 140],
    &[228, 204, 198, 172, 160, 152],
];

fn table_row(k: usize) -> Result<&'static [u32], CostError> {
    if (1..=NCV_TABLE_MAX_CONTROLS).contains(&k) {
        Ok(NCV_COST_TABLE[k - 1])
    } else {
        Err(CostError::OutOfTableRange(k))
    }
}

/// Cost from the widest populated column not exceeding `ancillae`.
pub fn ncv_cost(k: usize, ancillae: usize) -> Result<u32, CostError> {
    let row = table_row(k)?;
    if ancillae < 1 {
        return Err(CostError::InsufficientAncillae(ancillae));
    }
    Ok(row[ancillae.min(row.len()) - 1])
}

/// Controlled-gate count of the NCV-|v1> cascade; a bare NOT counts 1.
pub fn ncvv1_cost(k: usize) -> u32 {
    if k == 0 {
        1
    } else {
        2 * k as u32 - 1
    }
}

/// `round(100 * (ncv - v1) / ncv)`, halves rounded up.
pub fn savings_percent(ncv: u32, ncvv1: u32) -> i64 {
    let (a, b) = (ncv as i64 - ncvv1 as i64, ncv as i64);
    (200 * a + b).div_euclid(2 * b)
}

/// Smallest and largest savings over every populated ancilla column.
pub fn delta_range(k: usize) -> Result<(i64, i64), CostError> {
    let row = table_row(k)?;
    let v1 = ncvv1_cost(k);
    let savings = row.iter().map(|&c| savings_percent(c, v1));
    let lo = savings.clone().min().expect("rows are non-empty");
    let hi = savings.max().expect("rows are non-empty");
    Ok((lo, hi))
}

/// One line of the comparison table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub controls: usize,
    pub ncv: Vec<u32>,
    pub ncvv1: u32,
    pub delta: (i64, i64),
}

pub fn table_rows() -> Vec<TableRow> {
    (1..=NCV_TABLE_MAX_CONTROLS)
        .map(|k| TableRow {
            controls: k,
            ncv: NCV_COST_TABLE[k - 1].to_vec(),
            ncvv1: ncvv1_cost(k),
            delta: delta_range(k).expect("k within table"),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateCost {
    pub index: usize,
    pub controls: usize,
    pub cost: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub total_gates: usize,
    pub controlled_gates: usize,
    pub per_gate: Vec<GateCost>,
}

pub fn report(circuit: &QuantumCircuit) -> CostReport {
    let per_gate: Vec<GateCost> = circuit
        .gates()
        .iter()
        .enumerate()
        .map(|(index, g)| {
            let controls = g.is_controlled() as usize;
            GateCost { index, controls, cost: controls as u32 }
        })
        .collect();
    CostReport {
        total_gates: per_gate.len(),
        controlled_gates: per_gate.iter().filter(|g| g.controls == 1).count(),
        per_gate,
    }
}

/// Side-by-side NCV / NCV-|v1> cost of one Toffoli gate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateComparison {
    pub index: usize,
    pub controls: usize,
    pub ancillae: usize,
    pub ncv: Result<u32, CostError>,
    pub ncvv1: u32,
    pub delta: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircuitComparison {
    pub rows: Vec<GateComparison>,
    /// Sum over the rows that have an NCV cost.
    pub total_ncv: u32,
    pub total_ncvv1: u32,
    pub unpriced: usize,
}

/// NCV and NCV-|v1> costs for one gate. A NOT costs 1 in both libraries.
pub fn compare_gate(k: usize, ancillae: usize) -> (Result<u32, CostError>, u32) {
    let ncv = if k == 0 { Ok(1) } else { ncv_cost(k, ancillae) };
    (ncv, ncvv1_cost(k))
}

/// Costs every gate of a reversible circuit.
///
/// With `ancillae = None` each gate gets the lines it does not touch
/// (`n - k - 1`), floored at 1 since the table starts at one ancilla.
/// A gate outside the table is reported in its row and left out of the
/// NCV total; the other rows are unaffected.
pub fn compare_circuit(circuit: &ReversibleCircuit, ancillae: Option<usize>) -> CircuitComparison {
    let n = circuit.line_count();
    let rows: Vec<GateComparison> = circuit
        .gates()
        .iter()
        .enumerate()
        .map(|(index, g)| {
            let k = g.control_count();
            let ancillae = ancillae.unwrap_or_else(|| (n - k - 1).max(1));
            let (ncv, ncvv1) = compare_gate(k, ancillae);
            let delta = ncv.as_ref().ok().map(|&c| savings_percent(c, ncvv1));
            GateComparison { index, controls: k, ancillae, ncv, ncvv1, delta }
        })
        .collect();
    CircuitComparison {
        total_ncv: rows.iter().filter_map(|r| r.ncv.as_ref().ok()).sum(),
        total_ncvv1: rows.iter().map(|r| r.ncvv1).sum(),
        unpriced: rows.iter().filter(|r| r.ncv.is_err()).count(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{make_toffoli, LineId, Library, QuantumGate, QuantumOpKind, ToffoliGate};

    #[test]
    fn ncv_lookups() {
        assert_eq!(ncv_cost(3, 1), Ok(14));
        assert_eq!(ncv_cost(9, 3), Ok(80));
        assert_eq!(ncv_cost(7, 6), Ok(56));
        assert_eq!(ncv_cost(15, 6), Ok(152));
        assert_eq!(ncv_cost(16, 1), Err(CostError::OutOfTableRange(16)));
        assert_eq!(ncv_cost(0, 1), Err(CostError::OutOfTableRange(0)));
        assert_eq!(ncv_cost(4, 0), Err(CostError::InsufficientAncillae(0)));
    }

    #[test]
    fn ncvv1_costs() {
        assert_eq!(ncvv1_cost(0), 1);
        assert_eq!(ncvv1_cost(1), 1);
        assert_eq!(ncvv1_cost(2), 3);
        assert_eq!(ncvv1_cost(15), 29);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_range(1), Ok((0, 0)));
        assert_eq!(delta_range(3), Ok((64, 64)));
        assert_eq!(delta_range(7), Ok((77, 80)));
        assert_eq!(delta_range(14), Ok((81, 87)));
        assert_eq!(delta_range(16), Err(CostError::OutOfTableRange(16)));
    }

    #[test]
    fn rounding_at_borderline_cells() {
        // 63/80 and 103/128 sit close to .5 boundaries.
        assert_eq!(savings_percent(80, 17), 79);
        assert_eq!(savings_percent(128, 25), 80);
        assert_eq!(savings_percent(1, 1), 0);
    }

    #[test]
    fn table_monotone() {
        for row in NCV_COST_TABLE {
            assert!(row.windows(2).all(|w| w[0] >= w[1]));
        }
        for col in 0..6 {
            let column: Vec<u32> = NCV_COST_TABLE.iter().filter_map(|r| r.get(col).copied()).collect();
            assert!(column.windows(2).all(|w| w[0] < w[1]), "column {col}");
        }
    }

    #[test]
    fn report_counts() {
        let mut c = QuantumCircuit::new(2, Library::NcvV1).unwrap();
        assert_eq!(report(&c), CostReport { total_gates: 0, controlled_gates: 0, per_gate: vec![] });
        c.push(QuantumGate::uncontrolled(QuantumOpKind::V, LineId(0))).unwrap();
        c.push(QuantumGate::controlled(QuantumOpKind::Not, LineId(0), LineId(1)).unwrap()).unwrap();
        let r = report(&c);
        assert_eq!((r.total_gates, r.controlled_gates), (2, 1));
        assert_eq!(r.per_gate[1], GateCost { index: 1, controls: 1, cost: 1 });
    }

    #[test]
    fn circuit_comparison() {
        let l = LineId;
        let mut c = ReversibleCircuit::new(17).unwrap();
        c.push(ToffoliGate::not(l(0))).unwrap();
        c.push(make_toffoli(&[l(0), l(1), l(2)], l(3)).unwrap()).unwrap();
        c.push(make_toffoli(&(0..16).map(l).collect::<Vec<_>>(), l(16)).unwrap()).unwrap();
        let cmp = compare_circuit(&c, Some(1));
        assert_eq!(cmp.rows[0].ncv, Ok(1));
        assert_eq!(cmp.rows[0].delta, Some(0));
        assert_eq!(cmp.rows[1].ncv, Ok(14));
        assert_eq!(cmp.rows[1].ncvv1, 5);
        assert_eq!(cmp.rows[1].delta, Some(64));
        assert_eq!(cmp.rows[2].ncv, Err(CostError::OutOfTableRange(16)));
        assert_eq!(cmp.rows[2].delta, None);
        assert_eq!(cmp.total_ncv, 15);
        assert_eq!(cmp.total_ncvv1, 1 + 5 + 31);
        assert_eq!(cmp.unpriced, 1);
        // Default ancillae: free lines, floored at one.
        let cmp = compare_circuit(&c, None);
        assert_eq!(cmp.rows[1].ancillae, 13);
        assert_eq!(cmp.rows[2].ancillae, 1);
    }
}
