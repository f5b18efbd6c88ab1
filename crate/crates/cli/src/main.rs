//! `revq`: map, simulate, verify and cost reversible circuits.
//!
//! Exit status is 0 on success, 1 on any operational error and 2 when a
//! verification finds a counterexample.

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use revq_core::cost::{compare_circuit, table_rows};
use revq_core::*;
use serde_json::json;

type CliResult<T> = Result<T, Box<dyn Error>>;

#[derive(Parser)]
#[command(name = "revq", version, about = "Map reversible Toffoli circuits to NCV and NCV-|v1> cascades")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a .real circuit to a quantum cascade.
    Map {
        input: PathBuf,
        #[arg(long, value_parser = parse_library)]
        lib: Library,
        /// Write the .qc file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Simulate a .real or .qc circuit on one input pattern.
    Sim {
        input: PathBuf,
        /// e.g. `1111` or `v1 v1 1 1`
        pattern: String,
        /// Print the state after every gate.
        #[arg(long)]
        trace: bool,
    },
    /// Check a quantum circuit against a reversible one on Boolean inputs.
    Verify {
        reversible: PathBuf,
        quantum: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Seed for random mode; drawn from the clock when omitted.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1024)]
        samples: usize,
    },
    /// Per-gate NCV vs NCV-|v1> cost of a .real circuit.
    Cost {
        input: PathBuf,
        /// Ancillary lines per gate; defaults to the lines each gate leaves free.
        #[arg(long)]
        ancillae: Option<usize>,
    },
    /// Dump the embedded cost tables.
    Tables,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
    Dense,
}

fn parse_library(s: &str) -> Result<Library, String> {
    s.parse().map_err(|_| format!("unknown library {s:?} (expected ncv or ncv-v1)"))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_real(path: &Path) -> CliResult<ReversibleCircuit> {
    parse_real(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_qc(path: &Path) -> CliResult<QuantumCircuit> {
    parse_qc(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

enum AnyCircuit {
    Reversible(ReversibleCircuit),
    Quantum(QuantumCircuit),
}

/// Picks the format from the extension, falling back to a `.library` sniff.
fn load_any(path: &Path) -> CliResult<AnyCircuit> {
    let text = read(path)?;
    let is_qc = match path.extension().and_then(|e| e.to_str()) {
        Some("qc") => true,
        Some("real") => false,
        _ => text.lines().any(|l| l.trim_start().starts_with(".library")),
    };
    let wrap = |e: FormatError| -> Box<dyn Error> { format!("{}: {e}", path.display()).into() };
    Ok(if is_qc {
        AnyCircuit::Quantum(parse_qc(&text).map_err(wrap)?)
    } else {
        AnyCircuit::Reversible(parse_real(&text).map_err(wrap)?)
    })
}

fn cmd_map(input: &Path, lib: Library, output: Option<&Path>, as_json: bool) -> CliResult<ExitCode> {
    let rev = load_real(input)?;
    let qc = match lib {
        Library::Ncv => map_circuit_ncv(&rev)?,
        Library::NcvV1 => map_circuit_v1(&rev),
    };
    let r = report(&qc);
    let text = write_qc(&qc);
    match output {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    let summary = if as_json {
        json!({ "library": lib.name(), "total_gates": r.total_gates, "controlled_gates": r.controlled_gates })
            .to_string()
    } else {
        format!("{lib}: {} gates, {} controlled", r.total_gates, r.controlled_gates)
    };
    // keep stdout clean when it carries the circuit
    if output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sim(input: &Path, pattern: &str, trace: bool, as_json: bool) -> CliResult<ExitCode> {
    let state: QuartState = pattern.parse()?;
    let steps: Vec<QuartState> = match load_any(input)? {
        AnyCircuit::Reversible(c) => {
            if let Some(pos) = state.values().iter().position(|v| !v.is_boolean()) {
                return Err(SimError::InvalidSymbol { position: pos, symbol: state.values()[pos].to_string() }.into());
            }
            let bits = state.to_bools().expect("checked Boolean");
            let mut steps: Vec<QuartState> =
                trace_reversible(&c, &bits)?.iter().map(|s| QuartState::from_bools(s)).collect();
            if steps.is_empty() {
                steps.push(state.clone());
            }
            steps
        }
        AnyCircuit::Quantum(qc) => {
            let mut steps = trace_quantum(&qc, &state)?;
            if steps.is_empty() {
                steps.push(state.clone());
            }
            steps
        }
    };
    let output = steps.last().expect("non-empty").compact();
    if as_json {
        let mut v = json!({ "input": state.compact(), "output": output });
        if trace {
            v["trace"] = steps.iter().map(|s| s.to_string()).collect();
        }
        println!("{v}");
    } else {
        if trace {
            println!("input:        {state}");
            for (i, s) in steps.iter().enumerate() {
                println!("after gate {:<2} {s}", i + 1);
            }
        }
        println!("{output}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(rev: &Path, quantum: &Path, mode: Mode, seed: Option<u64>, samples: usize, as_json: bool) -> CliResult<ExitCode> {
    let rev = load_real(rev)?;
    let qc = load_qc(quantum)?;
    let mut used_seed = None;
    let mode = match mode {
        Mode::Exhaustive => VerifyMode::Exhaustive,
        Mode::Dense => VerifyMode::Dense,
        Mode::Random => {
            let seed = seed.unwrap_or_else(|| {
                SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos() as u64).unwrap_or(0)
            });
            used_seed = Some(seed);
            VerifyMode::Random { samples, seed }
        }
    };
    let verdict = verify(&rev, &qc, mode)?;
    if as_json {
        let mut v = serde_json::to_value(&verdict)?;
        if let Some(seed) = used_seed {
            v = json!({ "seed": seed, "verdict": v });
        }
        println!("{v}");
    } else {
        if let Some(seed) = used_seed {
            println!("seed {seed}");
        }
        match &verdict {
            Verdict::Equivalent { checked } => println!("EQUIVALENT ({checked} inputs checked)"),
            Verdict::Counterexample(c) => {
                println!("NOT EQUIVALENT");
                println!("input {}: expected {}, got {}", c.input, c.expected, c.actual);
            }
        }
    }
    Ok(if verdict.is_equivalent() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_cost(input: &Path, ancillae: Option<usize>, as_json: bool) -> CliResult<ExitCode> {
    let rev = load_real(input)?;
    let cmp = compare_circuit(&rev, ancillae);
    if as_json {
        let rows: Vec<_> = cmp
            .rows
            .iter()
            .map(|r| {
                json!({
                    "gate": r.index + 1,
                    "controls": r.controls,
                    "ancillae": r.ancillae,
                    "ncv": r.ncv.as_ref().ok(),
                    "ncv_error": r.ncv.as_ref().err().map(|e| e.to_string()),
                    "ncvv1": r.ncvv1,
                    "delta_percent": r.delta,
                })
            })
            .collect();
        let v = json!({
            "rows": rows,
            "total_ncv": cmp.total_ncv,
            "total_ncvv1": cmp.total_ncvv1,
            "unpriced": cmp.unpriced,
        });
        println!("{v}");
        return Ok(ExitCode::SUCCESS);
    }
    println!("gate  k  anc  ncv | ncv-v1 | delta");
    for r in &cmp.rows {
        let prefix = format!("{:>4} {:>2} {:>4}", r.index + 1, r.controls, r.ancillae);
        match (&r.ncv, r.delta) {
            (Ok(ncv), Some(d)) => println!("{prefix}  {ncv} | {} | {d}%", r.ncvv1),
            (Err(e), _) => println!("{prefix}  - | {} | -   error: {e}", r.ncvv1),
            (Ok(_), None) => unreachable!("delta is present whenever the NCV cost is"),
        }
    }
    print!("total: ncv {} | ncv-v1 {}", cmp.total_ncv, cmp.total_ncvv1);
    if cmp.unpriced > 0 {
        print!(" ({} gate(s) without NCV cost left out)", cmp.unpriced);
    }
    println!();
    Ok(ExitCode::SUCCESS)
}

fn cmd_tables(as_json: bool) -> CliResult<ExitCode> {
    let rows = table_rows();
    if as_json {
        println!("{}", serde_json::to_string(&rows)?);
        return Ok(ExitCode::SUCCESS);
    }
    println!("NCV cost by controls (k) and ancillae (columns 1..6)");
    for r in &rows {
        let cells: Vec<String> = r.ncv.iter().map(|c| format!("{c:>4}")).collect();
        println!("{:>3} | {}", r.controls, cells.join(" "));
    }
    println!();
    println!("NCV-|v1> cost and savings");
    for r in &rows {
        let (lo, hi) = r.delta;
        let delta = if lo == hi { format!("{lo}%") } else { format!("{lo}%-{hi}%") };
        println!("{:>3} | {:>3} | {delta}", r.controls, r.ncvv1);
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Map { input, lib, output } => cmd_map(input, *lib, output.as_deref(), cli.json),
        Command::Sim { input, pattern, trace } => cmd_sim(input, pattern, *trace, cli.json),
        Command::Verify { reversible, quantum, mode, seed, samples } => {
            cmd_verify(reversible, quantum, *mode, *seed, *samples, cli.json)
        }
        Command::Cost { input, ancillae } => cmd_cost(input, *ancillae, cli.json),
        Command::Tables => cmd_tables(cli.json),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::FAILURE
    })
}
