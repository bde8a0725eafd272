//! The five benchmark tasks and their formal-machine categorization.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One of the five symbolic tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TaskKind {
    /// Sum of a sequence of whole numbers (context-free; pushdown automaton).
    #[serde(rename = "sum")]
    SumOfSequence,
    /// Bracketed +,-,x expressions over single digits, evaluated mod 10
    /// (context-free; pushdown automaton).
    #[serde(rename = "mod10")]
    Mod10Arithmetic,
    /// Exact arithmetic over fixed-precision decimals (context-sensitive;
    /// linearly bounded automaton).
    #[serde(rename = "decimal")]
    DecimalArithmetic,
    /// Product of two multi-digit whole numbers (context-sensitive;
    /// linearly bounded automaton).
    #[serde(rename = "mult")]
    Multiplication,
    /// Character-match counting in a string (counter automaton).
    #[serde(rename = "count")]
    SymbolicCounting,
}

impl TaskKind {
    pub const ALL: [TaskKind; 5] = [
        TaskKind::SumOfSequence,
        TaskKind::Mod10Arithmetic,
        TaskKind::DecimalArithmetic,
        TaskKind::Multiplication,
        TaskKind::SymbolicCounting,
    ];

    /// Short stable identifier used in files, CLI flags, and seed derivation.
    pub fn id(self) -> &'static str {
        match self {
            TaskKind::SumOfSequence => "sum",
            TaskKind::Mod10Arithmetic => "mod10",
            TaskKind::DecimalArithmetic => "decimal",
            TaskKind::Multiplication => "mult",
            TaskKind::SymbolicCounting => "count",
        }
    }

    /// Human-readable name, as used in reports.
    pub fn display_name(self) -> &'static str {
        match self {
            TaskKind::SumOfSequence => "Sum of Sequence",
            TaskKind::Mod10Arithmetic => "Modulo-10 Arithmetic",
            TaskKind::DecimalArithmetic => "Decimal Arithmetic",
            TaskKind::Multiplication => "Multiplication",
            TaskKind::SymbolicCounting => "Symbolic Counting",
        }
    }

    /// Machine class solving the task, by Chomsky-hierarchy categorization.
    pub fn machine_class(self) -> &'static str {
        match self {
            TaskKind::SumOfSequence | TaskKind::Mod10Arithmetic => "Pushdown Automaton",
            TaskKind::DecimalArithmetic | TaskKind::Multiplication => {
                "Linearly Bounded Automaton"
            }
            TaskKind::SymbolicCounting => "Counter Automaton",
        }
    }
}

impl fmt::Display for TaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TaskKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sum" => Ok(TaskKind::SumOfSequence),
            "mod10" => Ok(TaskKind::Mod10Arithmetic),
            "decimal" => Ok(TaskKind::DecimalArithmetic),
            "mult" => Ok(TaskKind::Multiplication),
            "count" => Ok(TaskKind::SymbolicCounting),
            other => Err(format!(
                "unknown task {other:?} (expected sum, mod10, decimal, mult, or count)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_roundtrip() {
        for task in TaskKind::ALL {
            assert_eq!(task.id().parse::<TaskKind>().unwrap(), task);
        }
        assert!("modulo".parse::<TaskKind>().is_err());
    }

    #[test]
    fn serde_uses_ids() {
        let json = serde_json::to_string(&TaskKind::Mod10Arithmetic).unwrap();
        assert_eq!(json, "\"mod10\"");
    }
}
