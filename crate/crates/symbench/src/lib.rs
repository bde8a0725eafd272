//! Benchmark toolkit for symbolic tasks spanning the Chomsky hierarchy.
//!
//! Five tasks — sum of a number sequence, modulo-10 arithmetic, decimal
//! arithmetic, multi-digit multiplication, and symbolic counting — are
//! generated at parameterized difficulty from seeded streams, solved exactly
//! by formal-machine oracles, and used to evaluate chat-completion language
//! models. A capacity module estimates how many bits (and parameters, at
//! 2 bits per parameter) a model needs to hold each task either as an
//! executable machine or as memorized knowledge tuples.
//!
//! Modules follow the pipeline: [`numerics`] (exact digit arithmetic) →
//! [`machines`] (oracles) → [`taskgen`] (seeded instances) → [`prompting`]
//! (zero-shot CoT prompts) → [`gateway`] (providers) → [`evalrun`]
//! (query/extract/score, resumable) → [`report`] (curves and tables), with
//! [`capacity`] alongside for the parameter-count estimates.

pub mod capacity;
pub mod machines;
pub mod numerics;
pub mod task;

pub use task::TaskKind;
