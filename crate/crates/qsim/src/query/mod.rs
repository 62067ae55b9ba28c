//! Query-model oracles and the query algorithms built on them: phase
//! kickback, Deutsch-Jozsa, Bernstein-Vazirani, Simon, Grover, and
//! amplitude amplification.

pub mod early;
pub mod grover;
pub mod oracle;

pub use early::{
    bernstein_vazirani, deutsch_jozsa, simon, simon_instance, simon_sample, DjVerdict,
    SimonOutcome,
};
pub use grover::{
    amplitude_amplify, diffusion_matrix, good_weight, grover, grover_angle, grover_exact,
    grover_iterate_in_place, grover_iterations, grover_state, grover_success_probability,
    grover_unknown_t,
};
pub use oracle::{BitOracle, FunctionOracle, OracleKind};
