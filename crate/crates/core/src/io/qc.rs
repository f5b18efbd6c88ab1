use super::{syntax, tokenize, write_header, FormatError, LineKind, Position, Skeleton};
use crate::ir::{Library, QuantumCircuit, QuantumGate, QuantumOpKind};

fn mnemonic(gate: &QuantumGate) -> &'static str {
    match (gate.is_controlled(), gate.kind()) {
        (false, QuantumOpKind::Not) => "not",
        (false, QuantumOpKind::V) => "v",
        (false, QuantumOpKind::VDag) => "v+",
        (true, QuantumOpKind::Not) => "cnot",
        (true, QuantumOpKind::V) => "cv",
        (true, QuantumOpKind::VDag) => "cv+",
    }
}

fn parse_mnemonic(text: &str) -> Option<(QuantumOpKind, bool)> {
    Some(match text.to_ascii_lowercase().as_str() {
        "not" => (QuantumOpKind::Not, false),
        "v" => (QuantumOpKind::V, false),
        "v+" => (QuantumOpKind::VDag, false),
        "cnot" => (QuantumOpKind::Not, true),
        "cv" => (QuantumOpKind::V, true),
        "cv+" => (QuantumOpKind::VDag, true),
        _ => return None,
    })
}

/// Parses a `.qc` document.
///
/// The header carries `.library ncv|ncv-v1`, which fixes the control trigger
/// for the whole circuit. Gate lines: `not t`, `v t`, `v+ t`, `cnot c t`,
/// `cv c t`, `cv+ c t`.
pub fn parse_qc(text: &str) -> Result<QuantumCircuit, FormatError> {
    let mut skel = Skeleton::new();
    let mut library: Option<Library> = None;
    let mut gates = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let tokens = tokenize(i + 1, raw);
        if let Some(first) = tokens.first() {
            if first.text.eq_ignore_ascii_case(".begin") && library.is_none() {
                skel.require_header(first.pos)?;
                return Err(FormatError::MissingSection { pos: first.pos, section: ".library" });
            }
        }
        match skel.process(&tokens)? {
            LineKind::Handled => {}
            LineKind::Directive(t) if t[0].text.eq_ignore_ascii_case(".library") => {
                skel.header_only(&t[0])?;
                if library.is_some() {
                    return Err(syntax(t[0].pos, "duplicate .library"));
                }
                let [name] = &t[1..] else {
                    return Err(FormatError::ArityMismatch { pos: t[0].pos, expected: 1, found: t.len() - 1 });
                };
                library = Some(
                    name.text
                        .parse()
                        .map_err(|_| FormatError::UnknownLibrary { pos: name.pos, name: name.text.to_string() })?,
                );
            }
            LineKind::Directive(t) => return Err(syntax(t[0].pos, format!("unknown directive {}", t[0].text))),
            LineKind::Gate(t) => {
                let head = t[0];
                let (kind, controlled) =
                    parse_mnemonic(head.text).ok_or_else(|| syntax(head.pos, format!("unknown gate {:?}", head.text)))?;
                let operands = &t[1..];
                let expected = 1 + controlled as usize;
                if operands.len() != expected {
                    return Err(FormatError::ArityMismatch { pos: head.pos, expected, found: operands.len() });
                }
                let gate = if controlled {
                    let c = skel.line(&operands[0])?;
                    let tgt = skel.line(&operands[1])?;
                    QuantumGate::controlled(kind, c, tgt)
                        .map_err(|source| FormatError::InvalidGate { pos: head.pos, source })?
                } else {
                    QuantumGate::uncontrolled(kind, skel.line(&operands[0])?)
                };
                gates.push(gate);
            }
        }
    }
    let names = skel.finish()?;
    let library = library.expect(".begin requires .library");
    let mut circuit = QuantumCircuit::with_names(names, library)
        .map_err(|source| FormatError::InvalidGate { pos: Position { line: 1, column: 1 }, source })?;
    circuit.extend(gates).expect("operands resolved against the variable table");
    Ok(circuit)
}

/// Canonical text, LF endings. Controlled gates list the control first.
pub fn write_qc(circuit: &QuantumCircuit) -> String {
    let names = circuit.names();
    let mut out = String::new();
    write_header(&mut out, names);
    out.push_str(&format!(".library {}\n.begin\n", circuit.library()));
    for g in circuit.gates() {
        out.push_str(mnemonic(g));
        for l in g.control().iter().chain(std::iter::once(&g.target())) {
            out.push(' ');
            out.push_str(&names[l.index()]);
        }
        out.push('\n');
    }
    out.push_str(".end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::LineId;

    const SMALL: &str = "\
.numvars 2
.variables a b
.library ncv-v1
.begin
v a
cnot a b
v+ a
cv b a
cv+ b a
not b
.end
";

    #[test]
    fn parse_and_write() {
        let c = parse_qc(SMALL).unwrap();
        assert_eq!(c.library(), Library::NcvV1);
        assert_eq!(c.len(), 6);
        assert_eq!(c.gates()[1], QuantumGate::controlled(QuantumOpKind::Not, LineId(0), LineId(1)).unwrap());
        assert_eq!(write_qc(&c), SMALL);
    }

    fn err(text: &str) -> FormatError {
        parse_qc(text).unwrap_err()
    }

    #[test]
    fn error_cases() {
        assert!(matches!(
            err(".numvars 1\n.variables a\n.library qutrit\n"),
            FormatError::UnknownLibrary { pos: Position { line: 3, column: 10 }, .. }
        ));
        assert!(matches!(
            err(".numvars 1\n.variables a\n.begin\n.end\n"),
            FormatError::MissingSection { section: ".library", .. }
        ));
        assert!(matches!(
            err(".numvars 2\n.variables a b\n.library ncv\n.begin\ncnot a\n.end\n"),
            FormatError::ArityMismatch { expected: 2, found: 1, .. }
        ));
        assert!(matches!(
            err(".numvars 2\n.variables a b\n.library ncv\n.begin\ncv a a\n.end\n"),
            FormatError::InvalidGate { .. }
        ));
        assert!(matches!(
            err(".numvars 2\n.variables a b\n.library ncv\n.begin\nh a\n.end\n"),
            FormatError::Syntax { .. }
        ));
        assert!(matches!(
            err(".numvars 2\n.variables a b\n.library ncv\n.library ncv\n"),
            FormatError::Syntax { .. }
        ));
    }
}
