//! Bounded-tape machine for multi-digit multiplication.
//!
//! The tape holds the multiplicand, the multiplier, and an output region of
//! n+m cells: 2(n+m) working cells plus two fixed delimiters. The six
//! controller states split into two digit-reading states (one per number),
//! one output-writing state, and three head-movement states.
//!
//! For each digit d of the multiplicand, taken right to left, the machine
//! adds d times the multiplier into the output region shifted by the digit's
//! place value, then blanks the digit and moves on. The source describes the
//! inner update as unary increments (d*v*b single steps); that is exponential
//! in the digit count, so each pass performs the same update at digit
//! granularity and the trace records the pass structure instead.

use super::MachineTrace;
use crate::numerics::DigitNumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TapeCell {
    Digit(u8),
    Blank,
    Sep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MulState {
    ReadFirst,
    ReadSecond,
    Write,
    MoveToFirst,
    MoveToSecond,
    MoveToOutput,
}

impl MulState {
    fn label(self) -> &'static str {
        match self {
            MulState::ReadFirst => "read-first",
            MulState::ReadSecond => "read-second",
            MulState::Write => "write",
            MulState::MoveToFirst => "move-to-first",
            MulState::MoveToSecond => "move-to-second",
            MulState::MoveToOutput => "move-to-output",
        }
    }
}

/// Bounded tape, head index, and six-state controller.
#[derive(Debug, Clone)]
pub struct MulTapeMachine {
    tape: Vec<TapeCell>,
    head: usize,
    state: MulState,
    base: u32,
    n: usize,
    m: usize,
    passes: usize,
}

impl MulTapeMachine {
    /// Lay out `a` and `b` on the tape with an empty output region.
    /// Both numbers must share one base.
    pub fn new(a: &DigitNumber, b: &DigitNumber) -> Self {
        assert_eq!(a.base(), b.base(), "mul machine factors must share one base");
        let n = a.digit_count();
        let m = b.digit_count();
        let mut tape = Vec::with_capacity(2 * (n + m) + 2);
        tape.extend(a.digits().iter().map(|&d| TapeCell::Digit(d)));
        tape.push(TapeCell::Sep);
        tape.extend(b.digits().iter().map(|&d| TapeCell::Digit(d)));
        tape.push(TapeCell::Sep);
        tape.extend(std::iter::repeat(TapeCell::Blank).take(n + m));
        Self { tape, head: n - 1, state: MulState::ReadFirst, base: a.base(), n, m, passes: 0 }
    }

    /// Cells excluding the fixed delimiters; never exceeds 2(n+m).
    pub fn working_cell_count(&self) -> usize {
        self.tape.iter().filter(|c| !matches!(c, TapeCell::Sep)).count()
    }

    /// Completed passes, one per multiplicand digit.
    pub fn passes(&self) -> usize {
        self.passes
    }

    fn first_pos(&self, place: usize) -> usize {
        self.n - 1 - place
    }

    fn second_pos(&self, place: usize) -> usize {
        self.n + 1 + self.m - 1 - place
    }

    fn out_pos(&self, place: usize) -> usize {
        self.n + 1 + self.m + 1 + place
    }

    fn out_digit(&self, place: usize) -> u32 {
        match self.tape[self.out_pos(place)] {
            TapeCell::Digit(d) => u32::from(d),
            _ => 0,
        }
    }

    fn step(&mut self, trace: &mut MachineTrace, state: MulState, consumed: Option<String>) {
        self.state = state;
        trace.push(state.label(), consumed, format!("head={}", self.head));
    }

    /// Run to completion, returning the exact product and the trace.
    pub fn run(mut self) -> (DigitNumber, MachineTrace) {
        let mut trace = MachineTrace::new();
        for place in 0..self.n {
            self.passes += 1;
            self.head = self.first_pos(place);
            let d = match self.tape[self.head] {
                TapeCell::Digit(d) => u32::from(d),
                other => unreachable!("multiplicand cell already consumed: {other:?}"),
            };
            self.step(&mut trace, MulState::ReadFirst, Some(d.to_string()));

            let mut carry: u32 = 0;
            for j in 0..self.m {
                self.head = self.second_pos(j);
                self.step(&mut trace, MulState::MoveToSecond, None);
                let bj = match self.tape[self.head] {
                    TapeCell::Digit(v) => u32::from(v),
                    other => unreachable!("multiplier cell blanked: {other:?}"),
                };
                self.step(&mut trace, MulState::ReadSecond, Some(bj.to_string()));

                self.head = self.out_pos(place + j);
                self.step(&mut trace, MulState::MoveToOutput, None);
                let t = self.out_digit(place + j) + d * bj + carry;
                let cell = t % self.base;
                carry = t / self.base;
                let pos = self.out_pos(place + j);
                self.tape[pos] = TapeCell::Digit(cell as u8);
                self.step(&mut trace, MulState::Write, Some(cell.to_string()));
            }
            // Propagate the remaining carry further into the output region.
            let mut k = place + self.m;
            while carry > 0 {
                self.head = self.out_pos(k);
                self.step(&mut trace, MulState::MoveToOutput, None);
                let t = self.out_digit(k) + carry;
                let cell = t % self.base;
                carry = t / self.base;
                let pos = self.out_pos(k);
                self.tape[pos] = TapeCell::Digit(cell as u8);
                self.step(&mut trace, MulState::Write, Some(cell.to_string()));
                k += 1;
            }

            // Blank the consumed multiplicand digit and return the head.
            self.head = self.first_pos(place);
            self.tape[self.head] = TapeCell::Blank;
            self.step(&mut trace, MulState::MoveToFirst, None);
        }

        let mut digits: Vec<u8> = (0..self.n + self.m)
            .rev()
            .map(|k| match self.tape[self.out_pos(k)] {
                TapeCell::Digit(d) => d,
                _ => 0,
            })
            .collect();
        if digits.iter().all(|&d| d == 0) {
            digits = vec![0];
        }
        let product = DigitNumber::from_digits(self.base, digits).expect("digits below base");
        trace.push("done", None, format!("answer={product} passes={}", self.passes));
        (product, trace)
    }
}

/// Multiply with the tape machine; the trace shows one pass per digit of `a`.
pub fn run_mul_machine(a: &DigitNumber, b: &DigitNumber) -> (DigitNumber, MachineTrace) {
    MulTapeMachine::new(a, b).run()
}
