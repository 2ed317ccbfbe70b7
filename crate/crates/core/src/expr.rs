//! Algebraic front-end: `!`, `&`, `|` over variables `x1..x16`.
//!
//! `!` binds tightest, then `&`, then `|`. The Unicode glyphs `¬`, `∧` and
//! `∨` are accepted as synonyms. Error columns are 1-based character offsets.

use std::fmt;

use crate::error::{Error, Result};
use crate::function::{BooleanFunction, MAX_ARITY};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(index: usize) -> Expr {
        Expr::Var(index)
    }

    pub fn negate(inner: Expr) -> Expr {
        Expr::Not(Box::new(inner))
    }

    pub fn and(lhs: Expr, rhs: Expr) -> Expr {
        Expr::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Expr, rhs: Expr) -> Expr {
        Expr::Or(Box::new(lhs), Box::new(rhs))
    }

    /// Largest variable index referenced.
    pub fn max_var(&self) -> usize {
        match self {
            Expr::Var(m) => *m,
            Expr::Not(e) => e.max_var(),
            Expr::And(a, b) | Expr::Or(a, b) => a.max_var().max(b.max_var()),
        }
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        match self {
            Expr::Var(m) => assignment[m - 1],
            Expr::Not(e) => !e.eval(assignment),
            Expr::And(a, b) => a.eval(assignment) && b.eval(assignment),
            Expr::Or(a, b) => a.eval(assignment) || b.eval(assignment),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Or(..) => 0,
            Expr::And(..) => 1,
            Expr::Not(_) | Expr::Var(_) => 2,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Operands are parenthesized when they bind looser than the operator;
        // right operands also at equal precedence so the tree shape survives
        // a reparse.
        let side = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Var(m) => write!(f, "x{m}"),
            Expr::Not(e) => {
                f.write_str("!")?;
                side(f, e, 2)
            }
            Expr::And(a, b) => {
                side(f, a, 1)?;
                f.write_str(" & ")?;
                side(f, b, 2)
            }
            Expr::Or(a, b) => {
                side(f, a, 0)?;
                f.write_str(" | ")?;
                side(f, b, 1)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Var(usize),
    Not,
    And,
    Or,
    Open,
    Close,
    End,
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    arity: usize,
}

fn syntax(column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let column = i + 1;
        let token = match chars[i] {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '!' | '¬' | '~' => Token::Not,
            '&' | '∧' => Token::And,
            '|' | '∨' => Token::Or,
            '(' => Token::Open,
            ')' => Token::Close,
            'x' | 'X' => {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err(syntax(column, "expected a variable index after 'x'"));
                }
                let digits: String = chars[start..end].iter().collect();
                let index = digits
                    .parse::<usize>()
                    .ok()
                    .filter(|&m| m >= 1)
                    .ok_or_else(|| syntax(column, format!("invalid variable x{digits}")))?;
                tokens.push((Token::Var(index), column));
                i = end;
                continue;
            }
            other => return Err(syntax(column, format!("unexpected character {other:?}"))),
        };
        tokens.push((token, column));
        i += 1;
    }
    tokens.push((Token::End, chars.len() + 1));
    Ok(tokens)
}

impl Parser {
    fn peek(&self) -> (Token, usize) {
        self.tokens[self.pos]
    }

    fn advance(&mut self) -> (Token, usize) {
        let t = self.tokens[self.pos];
        if t.0 != Token::End {
            self.pos += 1;
        }
        t
    }

    fn disjunction(&mut self) -> Result<Expr> {
        let mut lhs = self.conjunction()?;
        while self.peek().0 == Token::Or {
            self.advance();
            lhs = Expr::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek().0 == Token::And {
            self.advance();
            lhs = Expr::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.advance() {
            (Token::Not, _) => Ok(Expr::negate(self.unary()?)),
            (Token::Var(m), column) => {
                if m > self.arity {
                    Err(syntax(
                        column,
                        format!("variable x{m} exceeds arity {}", self.arity),
                    ))
                } else {
                    Ok(Expr::Var(m))
                }
            }
            (Token::Open, column) => {
                let inner = self.disjunction()?;
                match self.advance() {
                    (Token::Close, _) => Ok(inner),
                    (_, at) => Err(syntax(
                        at,
                        format!("expected ')' to close '(' at column {column}"),
                    )),
                }
            }
            (Token::End, column) => Err(syntax(column, "unexpected end of expression")),
            (_, column) => Err(syntax(column, "expected a variable, '!' or '('")),
        }
    }
}

/// Parses `text` as an expression over `x1..x_arity`.
pub fn parse(text: &str, arity: usize) -> Result<Expr> {
    if !(1..=MAX_ARITY).contains(&arity) {
        return Err(Error::ArityOutOfRange(arity));
    }
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        arity,
    };
    let expr = parser.disjunction()?;
    match parser.peek() {
        (Token::End, _) => Ok(expr),
        (_, column) => Err(syntax(column, "unexpected trailing input")),
    }
}

/// Truth table of `expr` over `arity` variables.
pub fn compile(expr: &Expr, arity: usize) -> Result<BooleanFunction> {
    Ok(match expr {
        Expr::Var(m) => BooleanFunction::variable(arity, *m)?,
        Expr::Not(e) => !&compile(e, arity)?,
        Expr::And(a, b) => &compile(a, arity)? & &compile(b, arity)?,
        Expr::Or(a, b) => &compile(a, arity)? | &compile(b, arity)?,
    })
}

/// Parses and compiles in one step.
pub fn parse_function(text: &str, arity: usize) -> Result<BooleanFunction> {
    compile(&parse(text, arity)?, arity)
}
