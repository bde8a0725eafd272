//! Executable formal-machine oracles for the five tasks.
//!
//! Each oracle returns the exact answer plus a [`MachineTrace`]. These are
//! concrete task machines, not a generic automata framework: a stack machine
//! for sequence sums, a bounded-tape machine for multiplication, a counter
//! automaton for symbol counting, and a recursive-descent expression engine
//! for the modulo-10 and decimal arithmetic tasks.

mod counter;
mod expr;
mod mul_tape;
mod sum;
mod trace;

pub use counter::{run_counter_machine, CounterMachine, CounterState};
pub use expr::{
    eval_decimal, eval_mod10, parse_expression, BinOp, ExprError, ExprNode, Literal, LiteralKind,
    MUL_SIGN,
};
pub use mul_tape::{run_mul_machine, MulTapeMachine, TapeCell};
pub use sum::{run_sum_machine, SumMachine, SumState};
pub use trace::{MachineTrace, TraceStep};
