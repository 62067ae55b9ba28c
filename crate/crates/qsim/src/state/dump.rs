//! JSON serialization of states: a `[re, im]` pair per amplitude plus the
//! qubit count. Used by the CLI's `--dump-state`.

use crate::error::{Error, Result};
use crate::state::StateVector;
use crate::C64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct StateDump {
    pub qubit_count: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl From<&StateVector> for StateDump {
    fn from(state: &StateVector) -> Self {
        Self {
            qubit_count: state.qubit_count(),
            amplitudes: state.amplitudes().iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

pub fn state_to_json(state: &StateVector) -> String {
    serde_json::to_string(&StateDump::from(state)).expect("state serialization cannot fail")
}

pub fn state_from_json(text: &str) -> Result<StateVector> {
    let dump: StateDump = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })?;
    let amplitudes: Vec<C64> = dump
        .amplitudes
        .iter()
        .map(|[re, im]| C64::new(*re, *im))
        .collect();
    StateVector::from_amplitudes(dump.qubit_count, amplitudes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::RandomSource;

    #[test]
    fn json_round_trip() {
        let mut rng = RandomSource::new(15);
        let state = crate::state::random_state(3, &mut rng);
        let text = state_to_json(&state);
        let back = state_from_json(&text).unwrap();
        assert_eq!(back.qubit_count(), 3);
        for (a, b) in back.amplitudes().iter().zip(state.amplitudes()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }
}
