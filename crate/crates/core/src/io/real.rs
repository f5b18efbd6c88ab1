use super::{syntax, tokenize, write_header, FormatError, LineKind, Skeleton};
use crate::ir::{ReversibleCircuit, ToffoliGate};

/// Parses a `.real` document.
///
/// Gate lines read `tK w1 ... wK`: the first `K - 1` names are controls, the
/// last is the target. Other RevLib gate kinds (Fredkin, Peres, V) and the
/// `.constants` / `.garbage` sections are rejected as unsupported.
pub fn parse_real(text: &str) -> Result<ReversibleCircuit, FormatError> {
    let mut skel = Skeleton::new();
    let mut gates = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let tokens = tokenize(i + 1, raw);
        match skel.process(&tokens)? {
            LineKind::Handled => {}
            LineKind::Directive(t) => return Err(syntax(t[0].pos, format!("unknown directive {}", t[0].text))),
            LineKind::Gate(t) => {
                let head = t[0];
                let lower = head.text.to_ascii_lowercase();
                let arity = match lower.strip_prefix('t').map(str::parse::<usize>) {
                    Some(Ok(k)) if k >= 1 => k,
                    Some(_) => return Err(syntax(head.pos, format!("invalid gate size in {:?}", head.text))),
                    None => {
                        let unsupported = lower.starts_with('f')
                            || lower.starts_with('p')
                            || lower.starts_with('v');
                        return Err(if unsupported {
                            FormatError::UnsupportedFeature { pos: head.pos, feature: format!("gate {}", head.text) }
                        } else {
                            syntax(head.pos, format!("unknown gate {:?}", head.text))
                        });
                    }
                };
                let operands = &t[1..];
                if operands.len() != arity {
                    return Err(FormatError::ArityMismatch { pos: head.pos, expected: arity, found: operands.len() });
                }
                let lines = operands.iter().map(|tok| skel.line(tok)).collect::<Result<Vec<_>, _>>()?;
                let (&target, controls) = lines.split_last().expect("arity >= 1");
                let gate = ToffoliGate::new(controls.iter().copied(), target)
                    .map_err(|source| FormatError::InvalidGate { pos: head.pos, source })?;
                gates.push(gate);
            }
        }
    }
    let names = skel.finish()?;
    let mut circuit = ReversibleCircuit::with_names(names)
        .map_err(|source| FormatError::InvalidGate { pos: super::Position { line: 1, column: 1 }, source })?;
    for g in gates {
        circuit.push(g).expect("operands resolved against the variable table");
    }
    Ok(circuit)
}

/// Canonical text: sorted controls, one gate per line, LF endings.
pub fn write_real(circuit: &ReversibleCircuit) -> String {
    let names = circuit.names();
    let mut out = String::new();
    write_header(&mut out, names);
    out.push_str(".begin\n");
    for g in circuit.gates() {
        out.push_str(&format!("t{}", g.control_count() + 1));
        for l in g.controls().iter().chain(std::iter::once(&g.target())) {
            out.push(' ');
            out.push_str(&names[l.index()]);
        }
        out.push('\n');
    }
    out.push_str(".end\n");
    out
}
