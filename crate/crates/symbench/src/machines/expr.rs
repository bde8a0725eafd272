//! Recursive-descent parser and evaluators for arithmetic expressions.
//!
//! Grammar (left-associative, x binds tighter than + and -, brackets
//! override):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('x' factor)*
//! factor := literal | '(' expr ')'
//! ```
//!
//! Canonical rendering uses `+`, `-`, `U+00D7` and no whitespace; the parser
//! additionally accepts `*`, `U+2212`, and whitespace, so rendering a parse
//! normalizes the input. Brackets parse to explicit group nodes, which makes
//! `render(parse(s))` token-identical to normalized `s`.

use crate::numerics::{DecimalOp, ExactDecimal};
use std::fmt;
use thiserror::Error;

pub const MUL_SIGN: char = '\u{00D7}';

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => MUL_SIGN,
        }
    }
}

/// Which literal shapes the expression grammar admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiteralKind {
    /// Single digits 0-9.
    Digit,
    /// Fixed-scale decimals like `3.75` (bare integers allowed at scale 0).
    Decimal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Digit(u8),
    Decimal(ExactDecimal),
}

/// Expression tree. Group nodes record explicit brackets so rendering
/// reproduces them verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprNode {
    Literal(Literal),
    Group(Box<ExprNode>),
    Binary { op: BinOp, left: Box<ExprNode>, right: Box<ExprNode> },
}

impl ExprNode {
    pub fn digit(d: u8) -> Self {
        ExprNode::Literal(Literal::Digit(d))
    }

    pub fn decimal(d: ExactDecimal) -> Self {
        ExprNode::Literal(Literal::Decimal(d))
    }

    pub fn group(inner: ExprNode) -> Self {
        ExprNode::Group(Box::new(inner))
    }

    pub fn binary(op: BinOp, left: ExprNode, right: ExprNode) -> Self {
        ExprNode::Binary { op, left: Box::new(left), right: Box::new(right) }
    }

    pub fn literal_count(&self) -> usize {
        match self {
            ExprNode::Literal(_) => 1,
            ExprNode::Group(inner) => inner.literal_count(),
            ExprNode::Binary { left, right, .. } => left.literal_count() + right.literal_count(),
        }
    }

    /// Canonical text: no whitespace, `+`, `-`, multiplication sign, and
    /// brackets exactly where group nodes sit.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out);
        out
    }

    fn render_into(&self, out: &mut String) {
        match self {
            ExprNode::Literal(Literal::Digit(d)) => out.push(char::from(b'0' + d)),
            ExprNode::Literal(Literal::Decimal(d)) => out.push_str(&d.to_string()),
            ExprNode::Group(inner) => {
                out.push('(');
                inner.render_into(out);
                out.push(')');
            }
            ExprNode::Binary { op, left, right } => {
                left.render_into(out);
                out.push(op.symbol());
                right.render_into(out);
            }
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at char {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("modulo-10 evaluation requires single-digit literals, found {0}")]
    NonDigitLiteral(String),
}

fn parse_err<T>(pos: usize, message: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError::Parse { pos, message: message.into() })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    kind: LiteralKind,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<ExprNode, ExprError> {
        let mut node = self.term()?;
        loop {
            self.skip_ws();
            let op = match self.peek() {
                Some('+') => BinOp::Add,
                Some('-') | Some('\u{2212}') => BinOp::Sub,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            node = ExprNode::binary(op, node, rhs);
        }
        Ok(node)
    }

    fn term(&mut self) -> Result<ExprNode, ExprError> {
        let mut node = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(MUL_SIGN) | Some('*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    node = ExprNode::binary(BinOp::Mul, node, rhs);
                }
                _ => break,
            }
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<ExprNode, ExprError> {
        self.skip_ws();
        match self.peek() {
            None => parse_err(self.pos, "unexpected end of input"),
            Some('(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                match self.bump() {
                    Some(')') => Ok(ExprNode::group(inner)),
                    _ => parse_err(open, "unbalanced bracket: '(' is never closed"),
                }
            }
            Some(c) if c.is_ascii_digit() => self.literal(),
            Some(c) => parse_err(self.pos, format!("illegal token {c:?}")),
        }
    }

    fn literal(&mut self) -> Result<ExprNode, ExprError> {
        let start = self.pos;
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        match self.kind {
            LiteralKind::Digit => {
                if digits.len() != 1 {
                    return parse_err(
                        start,
                        format!("literal {digits:?} is not a single digit"),
                    );
                }
                Ok(ExprNode::digit(digits.as_bytes()[0] - b'0'))
            }
            LiteralKind::Decimal => {
                if self.peek() == Some('.') {
                    self.pos += 1;
                    let mut frac = String::new();
                    while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        frac.push(self.bump().unwrap());
                    }
                    if frac.is_empty() {
                        return parse_err(self.pos, "expected digits after decimal point");
                    }
                    digits.push('.');
                    digits.push_str(&frac);
                }
                let value = ExactDecimal::parse(&digits)
                    .map_err(|e| ExprError::Parse { pos: start, message: e.to_string() })?;
                Ok(ExprNode::decimal(value))
            }
        }
    }
}

/// Parse an expression in the generator's grammar. Errors carry the char
/// position of the offending token.
pub fn parse_expression(text: &str, kind: LiteralKind) -> Result<ExprNode, ExprError> {
    let mut parser = Parser { chars: text.chars().collect(), pos: 0, kind };
    parser.skip_ws();
    if parser.peek().is_none() {
        return parse_err(0, "empty input");
    }
    let node = parser.expr()?;
    parser.skip_ws();
    match parser.peek() {
        None => Ok(node),
        Some(')') => parse_err(parser.pos, "unbalanced bracket: ')' without matching '('"),
        Some(c) => parse_err(parser.pos, format!("unexpected trailing token {c:?}")),
    }
}

/// Evaluate a single-digit expression modulo 10, reducing after every binary
/// operation; subtraction normalizes into 0..=9.
pub fn eval_mod10(expr: &ExprNode) -> Result<u8, ExprError> {
    match expr {
        ExprNode::Literal(Literal::Digit(d)) => Ok(*d),
        ExprNode::Literal(Literal::Decimal(d)) => Err(ExprError::NonDigitLiteral(d.to_string())),
        ExprNode::Group(inner) => eval_mod10(inner),
        ExprNode::Binary { op, left, right } => {
            let a = u16::from(eval_mod10(left)?);
            let b = u16::from(eval_mod10(right)?);
            let v = match op {
                BinOp::Add => (a + b) % 10,
                BinOp::Sub => (a + 10 - b) % 10,
                BinOp::Mul => (a * b) % 10,
            };
            Ok(v as u8)
        }
    }
}

/// Evaluate a decimal expression exactly; never rounds. Bare digits count as
/// scale-0 decimals.
pub fn eval_decimal(expr: &ExprNode) -> Result<ExactDecimal, ExprError> {
    match expr {
        ExprNode::Literal(Literal::Digit(d)) => Ok(ExactDecimal::parse(&d.to_string()).unwrap()),
        ExprNode::Literal(Literal::Decimal(d)) => Ok(d.clone()),
        ExprNode::Group(inner) => eval_decimal(inner),
        ExprNode::Binary { op, left, right } => {
            let a = eval_decimal(left)?;
            let b = eval_decimal(right)?;
            let op = match op {
                BinOp::Add => DecimalOp::Add,
                BinOp::Sub => DecimalOp::Sub,
                BinOp::Mul => DecimalOp::Mul,
            };
            Ok(ExactDecimal::apply(op, &a, &b))
        }
    }
}

impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_digit(s: &str) -> ExprNode {
        parse_expression(s, LiteralKind::Digit).unwrap()
    }

    #[test]
    fn bracketed_sum() {
        let node = parse_digit("(3+4)");
        assert_eq!(
            node,
            ExprNode::group(ExprNode::binary(BinOp::Add, ExprNode::digit(3), ExprNode::digit(4)))
        );
    }

    #[test]
    fn precedence_mul_over_add() {
        let node = parse_digit("3+4\u{00D7}2");
        assert_eq!(
            node,
            ExprNode::binary(
                BinOp::Add,
                ExprNode::digit(3),
                ExprNode::binary(BinOp::Mul, ExprNode::digit(4), ExprNode::digit(2)),
            )
        );
        assert_eq!(eval_mod10(&node).unwrap(), 1); // 3 + 8 = 11 -> 1
    }

    #[test]
    fn left_associativity() {
        // 1-2-3 parses as (1-2)-3: -1 -> 9, 9-3 -> 6 under mod-10 reduction.
        assert_eq!(eval_mod10(&parse_digit("1-2-3")).unwrap(), 6);
        // which matches exact evaluation then mod: -4 mod 10 = 6.
    }

    #[test]
    fn ascii_aliases_normalize() {
        let node = parse_digit("2 * (3 \u{2212} 5)");
        assert_eq!(node.render(), "2\u{00D7}(3-5)");
    }

    #[test]
    fn render_parse_roundtrip_is_identity_on_canonical_text() {
        let text = "((1+2)\u{00D7}3-(4-(5\u{00D7}6)))+7\u{00D7}(8-9)";
        let node = parse_digit(text);
        assert_eq!(node.render(), text);
    }

    #[test]
    fn eval_mod10_examples() {
        assert_eq!(eval_mod10(&parse_digit("7")).unwrap(), 7);
        assert_eq!(eval_mod10(&parse_digit("3-5")).unwrap(), 8);
        assert_eq!(eval_mod10(&parse_digit("(3+4)\u{00D7}2")).unwrap(), 4);
        assert_eq!(eval_mod10(&parse_digit("2+3\u{00D7}4")).unwrap(), 4);
        assert_eq!(eval_mod10(&parse_digit("(2+3)\u{00D7}4")).unwrap(), 0);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_expression("", LiteralKind::Digit).unwrap_err() {
            ExprError::Parse { pos, message } => {
                assert_eq!(pos, 0);
                assert!(message.contains("empty"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        match parse_expression("(3+4", LiteralKind::Digit).unwrap_err() {
            ExprError::Parse { pos, message } => {
                assert_eq!(pos, 0);
                assert!(message.contains("unbalanced"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        match parse_expression("3+4)", LiteralKind::Digit).unwrap_err() {
            ExprError::Parse { pos, message } => {
                assert_eq!(pos, 3);
                assert!(message.contains("unbalanced"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        match parse_expression("3+a", LiteralKind::Digit).unwrap_err() {
            ExprError::Parse { pos, message } => {
                assert_eq!(pos, 2);
                assert!(message.contains("illegal token"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_expression("34+1", LiteralKind::Digit).is_err());
    }

    #[test]
    fn decimal_expressions() {
        let node = parse_expression("1.5+2.25", LiteralKind::Decimal).unwrap();
        assert_eq!(eval_decimal(&node).unwrap().to_string(), "3.75");
        let node = parse_expression("0.5\u{00D7}0.5", LiteralKind::Decimal).unwrap();
        assert_eq!(eval_decimal(&node).unwrap().to_string(), "0.25");
        let node = parse_expression("(1.5-2.25)\u{00D7}2.0", LiteralKind::Decimal).unwrap();
        assert_eq!(eval_decimal(&node).unwrap().to_string(), "-1.500");
    }

    #[test]
    fn digit_literals_fine_in_decimal_grammar() {
        let node = parse_expression("3\u{00D7}1.5", LiteralKind::Decimal).unwrap();
        assert_eq!(eval_decimal(&node).unwrap().to_string(), "4.5");
    }

    #[test]
    fn mod10_rejects_decimal_literal() {
        let node = parse_expression("1.5+2.0", LiteralKind::Decimal).unwrap();
        assert!(matches!(eval_mod10(&node), Err(ExprError::NonDigitLiteral(_))));
    }

    #[test]
    fn literal_count() {
        assert_eq!(parse_digit("(1+2)\u{00D7}(3+(4-5))").literal_count(), 5);
    }
}
