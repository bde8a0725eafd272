//! Counter automaton for character-frequency counting.
//!
//! Three states: q0 reads the target character into the register, q1 scans
//! the string, q2 is entered exactly once per match and increments the
//! counter before falling back to q1. Matching is case-sensitive.

use super::MachineTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounterState {
    Q0,
    Q1,
    Q2,
}

impl CounterState {
    fn label(self) -> &'static str {
        match self {
            CounterState::Q0 => "q0",
            CounterState::Q1 => "q1",
            CounterState::Q2 => "q2",
        }
    }
}

/// Finite controller plus a one-character register and an integer counter.
#[derive(Debug, Clone)]
pub struct CounterMachine {
    register: char,
    counter: u64,
    state: CounterState,
}

impl CounterMachine {
    pub fn new(target: char) -> Self {
        Self { register: target, counter: 0, state: CounterState::Q0 }
    }

    pub fn counter(&self) -> u64 {
        self.counter
    }

    pub fn state(&self) -> CounterState {
        self.state
    }

    /// Run over the text, returning the exact match count and the trace.
    /// The trace visits q2 exactly `count` times.
    pub fn run(mut self, text: &str) -> (u64, MachineTrace) {
        let mut trace = MachineTrace::new();
        trace.push(
            self.state.label(),
            Some(self.register.to_string()),
            format!("register={}", self.register),
        );
        self.state = CounterState::Q1;
        for c in text.chars() {
            if c == self.register {
                // The counter increments exactly on the q1 -> q2 transition.
                self.state = CounterState::Q2;
                self.counter += 1;
                trace.push(self.state.label(), Some(c.to_string()), format!("counter={}", self.counter));
                self.state = CounterState::Q1;
            } else {
                trace.push(self.state.label(), Some(c.to_string()), format!("counter={}", self.counter));
            }
        }
        trace.push(self.state.label(), None, format!("answer={}", self.counter));
        (self.counter, trace)
    }
}

/// Count case-sensitive occurrences of `target` in `text`.
pub fn run_counter_machine(target: char, text: &str) -> (u64, MachineTrace) {
    CounterMachine::new(target).run(text)
}
