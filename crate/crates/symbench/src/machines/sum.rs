//! Stack machine for summing a sequence of numbers.
//!
//! The construction mirrors the production rules A -> tB; A -> t: the
//! accumulator holds t (the sum of the consumed prefix) and the stack holds
//! B (the unread remainder, top = next number). Each step pops one number
//! and folds it into the accumulator, so the stack depth always equals the
//! remaining-input length. The source labels this machine a nondeterministic
//! PDA, but the construction itself is deterministic; we implement it
//! deterministically.

use super::MachineTrace;
use crate::numerics::DigitNumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumState {
    Reading,
    Accumulating,
    Done,
}

impl SumState {
    fn label(self) -> &'static str {
        match self {
            SumState::Reading => "reading",
            SumState::Accumulating => "accumulating",
            SumState::Done => "done",
        }
    }
}

/// Stack machine summing base-10 numbers.
#[derive(Debug, Clone)]
pub struct SumMachine {
    stack: Vec<DigitNumber>,
    accumulator: DigitNumber,
    state: SumState,
}

impl SumMachine {
    /// Load the input sequence onto the stack (top = first number).
    /// All numbers must share one base.
    pub fn new(numbers: &[DigitNumber]) -> Self {
        let base = numbers.first().map_or(10, DigitNumber::base);
        assert!(
            numbers.iter().all(|n| n.base() == base),
            "sum machine input must share one base"
        );
        let mut stack: Vec<DigitNumber> = numbers.to_vec();
        stack.reverse();
        Self {
            stack,
            accumulator: DigitNumber::zero(base).unwrap(),
            state: SumState::Reading,
        }
    }

    pub fn state(&self) -> SumState {
        self.state
    }

    pub fn stack_depth(&self) -> usize {
        self.stack.len()
    }

    pub fn accumulator(&self) -> &DigitNumber {
        &self.accumulator
    }

    fn snapshot(&self) -> String {
        format!("t={} stack_depth={}", self.accumulator, self.stack.len())
    }

    /// Run to completion, returning the exact sum and the step trace.
    pub fn run(mut self) -> (DigitNumber, MachineTrace) {
        let mut trace = MachineTrace::new();
        trace.push(self.state.label(), None, self.snapshot());
        self.state = SumState::Accumulating;
        while let Some(next) = self.stack.pop() {
            let consumed = next.to_string();
            self.accumulator = self.accumulator.add(&next).expect("uniform base");
            trace.push(self.state.label(), Some(consumed), self.snapshot());
        }
        self.state = SumState::Done;
        trace.push(self.state.label(), None, format!("answer={}", self.accumulator));
        (self.accumulator, trace)
    }
}

/// Sum a sequence of numbers with the stack machine. The empty sum is 0.
pub fn run_sum_machine(numbers: &[DigitNumber]) -> (DigitNumber, MachineTrace) {
    SumMachine::new(numbers).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dn(v: u128) -> DigitNumber {
        DigitNumber::from_u128(v, 10).unwrap()
    }

    #[test]
    fn empty_sum_is_zero() {
        let (sum, trace) = run_sum_machine(&[]);
        assert!(sum.is_zero());
        assert_eq!(trace.final_step().unwrap().snapshot, "answer=0");
    }

    #[test]
    fn small_sequence() {
        let (sum, trace) = run_sum_machine(&[dn(10), dn(20), dn(30)]);
        assert_eq!(sum, dn(60));
        // reading + one accumulate per number + done
        assert_eq!(trace.step_count(), 5);
    }

    #[test]
    fn single_element_sum_is_the_element() {
        let (sum, _) = run_sum_machine(&[dn(42)]);
        assert_eq!(sum, dn(42));
    }

    #[test]
    fn matches_big_integer_fold() {
        // 100 pseudo-random two-digit numbers against a host-integer fold.
        let mut state = 7u64;
        let mut values = Vec::new();
        for _ in 0..100 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            values.push(10 + (state >> 33) % 90);
        }
        let numbers: Vec<DigitNumber> = values.iter().map(|&v| dn(u128::from(v))).collect();
        let (sum, _) = run_sum_machine(&numbers);
        let expected: u128 = values.iter().map(|&v| u128::from(v)).sum();
        assert_eq!(sum, dn(expected));
    }

    #[test]
    fn stack_depth_tracks_remaining_input() {
        let numbers = vec![dn(11), dn(22), dn(33), dn(44)];
        let mut machine = SumMachine::new(&numbers);
        assert_eq!(machine.stack_depth(), 4);
        // Drive manually through the run loop's single-step equivalent.
        let mut remaining = numbers.len();
        while machine.stack_depth() > 0 {
            let next = machine.stack.pop().unwrap();
            machine.accumulator = machine.accumulator.add(&next).unwrap();
            remaining -= 1;
            assert_eq!(machine.stack_depth(), remaining);
        }
        assert_eq!(machine.accumulator, dn(110));
    }
}
