//! Step-by-step records of oracle machine runs.

use std::fmt;

/// One machine step: controller state, symbol consumed (if any), and a short
/// snapshot of the auxiliary store (stack / tape / counter).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub state: &'static str,
    pub consumed: Option<String>,
    pub snapshot: String,
}

/// Full run record. The final step carries the answer in its snapshot.
#[derive(Debug, Clone, Default)]
pub struct MachineTrace {
    steps: Vec<TraceStep>,
}

impl MachineTrace {
    pub fn new() -> Self {
        Self { steps: Vec::new() }
    }

    pub fn push(&mut self, state: &'static str, consumed: Option<String>, snapshot: String) {
        self.steps.push(TraceStep { state, consumed, snapshot });
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn final_step(&self) -> Option<&TraceStep> {
        self.steps.last()
    }
}

/// Line-oriented text serialization: one tab-separated step per line
/// (`index, state, consumed, snapshot`), as printed by `oracle --trace`.
impl fmt::Display for MachineTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(
                f,
                "{i}\t{}\t{}\t{}",
                step.state,
                step.consumed.as_deref().unwrap_or("-"),
                step.snapshot
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_per_step() {
        let mut trace = MachineTrace::new();
        trace.push("q0", Some("a".into()), "counter=0".into());
        trace.push("q1", None, "counter=1".into());
        let text = trace.to_string();
        assert_eq!(text.lines().count(), 2);
        assert_eq!(text.lines().next().unwrap(), "0\tq0\ta\tcounter=0");
        assert_eq!(trace.step_count(), 2);
        assert_eq!(trace.final_step().unwrap().state, "q1");
    }
}
