//! Line-based circuit text format, one op per line:
//!
//! ```text
//! qubits 3
//! H 0
//! CNOT 0 1
//! RPHI 2 0.7853981634
//! CRS 1 2 3
//! TOFFOLI 0 1 2
//! ```
//!
//! Qubit indices are 0-based; qubit 1 of the usual ket notation is index 0,
//! the most significant bit. `parse_circuit` and `emit_circuit` are exact
//! inverses on the named-gate subset; custom-matrix gates have no text form.

use crate::circuit::{Circuit, GateKind};
use crate::error::{Error, Result};

pub fn emit_circuit(circuit: &Circuit) -> Result<String> {
    let mut out = format!("qubits {}\n", circuit.qubit_count());
    for (i, op) in circuit.ops().iter().enumerate() {
        let t = &op.targets;
        let line = match &op.kind {
            GateKind::H => format!("H {}", t[0]),
            GateKind::X => format!("X {}", t[0]),
            GateKind::Y => format!("Y {}", t[0]),
            GateKind::Z => format!("Z {}", t[0]),
            GateKind::S => format!("S {}", t[0]),
            GateKind::T => format!("T {}", t[0]),
            GateKind::RPhi(phi) => format!("RPHI {} {}", t[0], phi),
            GateKind::Rs(s) => format!("RS {} {}", t[0], s),
            GateKind::CRPhi(phi) => format!("CRPHI {} {} {}", t[0], t[1], phi),
            GateKind::CRs(s) => format!("CRS {} {} {}", t[0], t[1], s),
            GateKind::Cnot => format!("CNOT {} {}", t[0], t[1]),
            GateKind::Cz => format!("CZ {} {}", t[0], t[1]),
            GateKind::Swap => format!("SWAP {} {}", t[0], t[1]),
            GateKind::Toffoli => format!("TOFFOLI {} {} {}", t[0], t[1], t[2]),
            GateKind::Custom(_) | GateKind::ControlledCustom(_) => {
                return Err(Error::InvalidParameter(format!(
                    "op {i}: custom-matrix gates have no text form"
                )))
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut circuit: Option<Circuit> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let word = parts.next().unwrap().to_ascii_uppercase();
        let args: Vec<&str> = parts.collect();
        let err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        let parse_usize = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("bad qubit index {s:?}")))
        };
        let parse_f64 = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| err(format!("bad angle {s:?}")))
        };
        let parse_u32 = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| err(format!("bad exponent {s:?}")))
        };
        if word == "QUBITS" {
            if circuit.is_some() {
                return Err(err("duplicate qubits header".into()));
            }
            if args.len() != 1 {
                return Err(err("qubits header needs one count".into()));
            }
            circuit = Some(Circuit::new(parse_usize(args[0])?));
            continue;
        }
        let c = circuit
            .as_mut()
            .ok_or_else(|| err("missing qubits header".into()))?;
        let need = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(err(format!("{word} expects {n} arguments")))
            }
        };
        let (kind, targets): (GateKind, Vec<usize>) = match word.as_str() {
            "H" => (need(1).map(|_| GateKind::H)?, vec![parse_usize(args[0])?]),
            "X" => (need(1).map(|_| GateKind::X)?, vec![parse_usize(args[0])?]),
            "Y" => (need(1).map(|_| GateKind::Y)?, vec![parse_usize(args[0])?]),
            "Z" => (need(1).map(|_| GateKind::Z)?, vec![parse_usize(args[0])?]),
            "S" => (need(1).map(|_| GateKind::S)?, vec![parse_usize(args[0])?]),
            "T" => (need(1).map(|_| GateKind::T)?, vec![parse_usize(args[0])?]),
            "RPHI" => {
                need(2)?;
                (GateKind::RPhi(parse_f64(args[1])?), vec![parse_usize(args[0])?])
            }
            "RS" => {
                need(2)?;
                (GateKind::Rs(parse_u32(args[1])?), vec![parse_usize(args[0])?])
            }
            "CRPHI" => {
                need(3)?;
                (
                    GateKind::CRPhi(parse_f64(args[2])?),
                    vec![parse_usize(args[0])?, parse_usize(args[1])?],
                )
            }
            "CRS" => {
                need(3)?;
                (
                    GateKind::CRs(parse_u32(args[2])?),
                    vec![parse_usize(args[0])?, parse_usize(args[1])?],
                )
            }
            "CNOT" => {
                need(2)?;
                (GateKind::Cnot, vec![parse_usize(args[0])?, parse_usize(args[1])?])
            }
            "CZ" => {
                need(2)?;
                (GateKind::Cz, vec![parse_usize(args[0])?, parse_usize(args[1])?])
            }
            "SWAP" => {
                need(2)?;
                (GateKind::Swap, vec![parse_usize(args[0])?, parse_usize(args[1])?])
            }
            "TOFFOLI" => {
                need(3)?;
                (
                    GateKind::Toffoli,
                    vec![
                        parse_usize(args[0])?,
                        parse_usize(args[1])?,
                        parse_usize(args[2])?,
                    ],
                )
            }
            other => return Err(err(format!("unknown gate {other:?}"))),
        };
        c.add(kind, &targets).map_err(|e| err(e.to_string()))?;
    }
    circuit.ok_or(Error::Parse {
        line: 0,
        message: "empty circuit file".into(),
    })
}
