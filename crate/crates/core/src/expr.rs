//! Formal class expressions such as `2*CP(2) - CP(1)^2`.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | atom | factor '^' INT | '(' expr ')'
//! atom   := NAME '(' INT (',' INT)* ')'
//! ```
//!
//! `*` is the product of classes and `^` a repeated product. Integer literals
//! are scalars: they scale a class, and `0` may stand for the zero class of
//! any dimension.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chern::{ChernError, ChernVector};
use crate::variety::{GoodProduct, GoodVariety, Mode, VarietyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("unknown atom {name:?} at line {line}, column {column}")]
    UnknownAtom { name: String, line: usize, column: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("expression is not a product of varieties")]
    NotAProduct,
    #[error(transparent)]
    Variety(#[from] VarietyError),
    #[error(transparent)]
    Chern(#[from] ChernError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassExpr {
    Int(BigInt),
    Atom(GoodVariety),
    Add(Box<ClassExpr>, Box<ClassExpr>),
    Sub(Box<ClassExpr>, Box<ClassExpr>),
    Mul(Box<ClassExpr>, Box<ClassExpr>),
    Pow(Box<ClassExpr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "integer {n}"),
            Token::Name(s) => write!(f, "name {s:?}"),
            Token::Plus => f.write_str("'+'"),
            Token::Minus => f.write_str("'-'"),
            Token::Star => f.write_str("'*'"),
            Token::Caret => f.write_str("'^'"),
            Token::LParen => f.write_str("'('"),
            Token::RParen => f.write_str("')'"),
            Token::Comma => f.write_str("','"),
            Token::End => f.write_str("end of input"),
        }
    }
}

/// Token with its 1-based line and column.
type Spanned = (Token, usize, usize);

fn tokenize(text: &str) -> Result<Vec<Spanned>, ExprError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                digits.push(advance(&mut chars).unwrap());
            }
            out.push((Token::Int(digits.parse().expect("digits")), l, col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while chars.peek().is_some_and(|d| d.is_ascii_alphanumeric() || *d == '_') {
                name.push(advance(&mut chars).unwrap());
            }
            out.push((Token::Name(name), l, col));
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            ',' => Token::Comma,
            other => {
                return Err(ExprError::Syntax { line: l, column: col, msg: format!("unexpected character {other:?}") })
            }
        };
        advance(&mut chars);
        out.push((tok, l, col));
    }
    out.push((Token::End, line, column));
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn next(&mut self) -> Spanned {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, msg: String) -> ExprError {
        let (_, line, column) = &self.tokens[self.pos];
        ExprError::Syntax { line: *line, column: *column, msg }
    }

    fn expect(&mut self, want: Token) -> Result<(), ExprError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!("expected {want}, found {}", self.peek())))
        }
    }

    fn expr(&mut self) -> Result<ClassExpr, ExprError> {
        let mut left = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.next();
                    left = ClassExpr::Add(Box::new(left), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.next();
                    left = ClassExpr::Sub(Box::new(left), Box::new(self.term()?));
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<ClassExpr, ExprError> {
        let mut left = self.factor()?;
        while *self.peek() == Token::Star {
            self.next();
            left = ClassExpr::Mul(Box::new(left), Box::new(self.factor()?));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<ClassExpr, ExprError> {
        let mut base = self.primary()?;
        while *self.peek() == Token::Caret {
            self.next();
            let (tok, line, column) = self.next();
            let exponent = match tok {
                Token::Int(k) => u32::try_from(&k).ok().filter(|&k| k >= 1),
                other => {
                    return Err(ExprError::Syntax { line, column, msg: format!("expected exponent, found {other}") })
                }
            };
            let exponent = exponent.ok_or(ExprError::Syntax {
                line,
                column,
                msg: "exponent must be a positive integer".into(),
            })?;
            base = ClassExpr::Pow(Box::new(base), exponent);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<ClassExpr, ExprError> {
        let (tok, line, column) = self.next();
        match tok {
            Token::Int(n) => Ok(ClassExpr::Int(n)),
            Token::LParen => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Token::Name(name) => {
                if !matches!(name.as_str(), "CP" | "H" | "Sigma" | "BlCP" | "BlLin") {
                    return Err(ExprError::UnknownAtom { name, line, column });
                }
                self.expect(Token::LParen)?;
                let mut args = Vec::new();
                loop {
                    let (tok, l, c) = self.next();
                    match tok {
                        Token::Int(k) => args.push(u64::try_from(&k).map_err(|_| ExprError::Syntax {
                            line: l,
                            column: c,
                            msg: format!("argument {k} too large"),
                        })?),
                        other => {
                            return Err(ExprError::Syntax {
                                line: l,
                                column: c,
                                msg: format!("expected integer, found {other}"),
                            })
                        }
                    }
                    if *self.peek() == Token::Comma {
                        self.next();
                    } else {
                        break;
                    }
                }
                self.expect(Token::RParen)?;
                let variety = GoodVariety::from_atom(&name, &args).map_err(|e| ExprError::Syntax {
                    line,
                    column,
                    msg: e.to_string(),
                })?;
                Ok(ClassExpr::Atom(variety))
            }
            other => Err(ExprError::Syntax { line, column, msg: format!("expected a class, found {other}") }),
        }
    }
}

/// Parses a class expression.
pub fn parse_class_expr(text: &str) -> Result<ClassExpr, ExprError> {
    let mut p = Parser { tokens: tokenize(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Token::End {
        return Err(p.error_here(format!("unexpected {}", p.peek())));
    }
    Ok(e)
}

/// Intermediate value: scalars stay dimensionless until combined.
#[derive(Clone)]
enum Value {
    Scalar(BigInt),
    Class(ChernVector),
}

impl Value {
    fn into_class(self) -> ChernVector {
        match self {
            Value::Scalar(k) => ChernVector::point(k),
            Value::Class(v) => v,
        }
    }
}

fn combine(a: Value, b: Value, sign: i32) -> Result<Value, ExprError> {
    let sign = BigInt::from(sign);
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y * sign),
        (Value::Scalar(x), Value::Class(v)) if x.is_zero() => Value::Class(v.scale(&sign)),
        (Value::Class(v), Value::Scalar(y)) if y.is_zero() => Value::Class(v),
        (Value::Scalar(_), Value::Class(v)) => return Err(ExprError::DimensionMismatch { left: 0, right: v.dim() }),
        (Value::Class(v), Value::Scalar(_)) => return Err(ExprError::DimensionMismatch { left: v.dim(), right: 0 }),
        (Value::Class(u), Value::Class(v)) => {
            if u.dim() != v.dim() {
                return Err(ExprError::DimensionMismatch { left: u.dim(), right: v.dim() });
            }
            Value::Class(u.add(&v.scale(&sign))?)
        }
    })
}

fn multiply(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
        (Value::Scalar(x), Value::Class(v)) | (Value::Class(v), Value::Scalar(x)) => Value::Class(v.scale(&x)),
        (Value::Class(u), Value::Class(v)) => Value::Class(u.product(&v)),
    }
}

fn check_atom(v: &GoodVariety) -> Result<(), VarietyError> {
    match v {
        // any genus is a meaningful class
        GoodVariety::Curve(_) => Ok(()),
        other => other.validate(Mode::Relaxed),
    }
}

impl ClassExpr {
    fn value(&self) -> Result<Value, ExprError> {
        Ok(match self {
            ClassExpr::Int(k) => Value::Scalar(k.clone()),
            ClassExpr::Atom(v) => {
                check_atom(v)?;
                Value::Class(v.chern()?)
            }
            ClassExpr::Add(a, b) => combine(a.value()?, b.value()?, 1)?,
            ClassExpr::Sub(a, b) => combine(a.value()?, b.value()?, -1)?,
            ClassExpr::Mul(a, b) => multiply(a.value()?, b.value()?),
            ClassExpr::Pow(base, k) => {
                let b = base.value()?;
                let mut acc = Value::Scalar(BigInt::one());
                for _ in 0..*k {
                    acc = multiply(acc, b.clone());
                }
                acc
            }
        })
    }

    /// The class the expression denotes. A bare integer `k` is `k` points.
    pub fn evaluate(&self) -> Result<ChernVector, ExprError> {
        Ok(self.value()?.into_class())
    }

    /// The product of varieties the expression spells out, for expressions
    /// built from atoms with `*` and `^` only.
    pub fn as_product(&self) -> Result<GoodProduct, ExprError> {
        fn collect(e: &ClassExpr, out: &mut Vec<GoodVariety>) -> Result<(), ExprError> {
            match e {
                ClassExpr::Atom(v) => out.push(v.clone()),
                ClassExpr::Mul(a, b) => {
                    collect(a, out)?;
                    collect(b, out)?;
                }
                ClassExpr::Pow(b, k) => {
                    for _ in 0..*k {
                        collect(b, out)?;
                    }
                }
                _ => return Err(ExprError::NotAProduct),
            }
            Ok(())
        }
        let mut factors = Vec::new();
        collect(self, &mut factors)?;
        Ok(GoodProduct::new(factors))
    }

    fn precedence(&self) -> u8 {
        match self {
            ClassExpr::Add(..) | ClassExpr::Sub(..) => 1,
            ClassExpr::Mul(..) => 2,
            ClassExpr::Pow(..) => 3,
            ClassExpr::Int(_) | ClassExpr::Atom(_) => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            ClassExpr::Int(k) => write!(f, "{k}"),
            ClassExpr::Atom(v) => write!(f, "{v}"),
            ClassExpr::Add(a, b) | ClassExpr::Sub(a, b) => {
                a.write_at(f, 1)?;
                f.write_str(if matches!(self, ClassExpr::Add(..)) { " + " } else { " - " })?;
                b.write_at(f, 2)
            }
            ClassExpr::Mul(a, b) => {
                a.write_at(f, 2)?;
                f.write_str("*")?;
                b.write_at(f, 3)
            }
            ClassExpr::Pow(b, k) => {
                b.write_at(f, 3)?;
                write!(f, "^{k}")
            }
        }
    }
}

impl fmt::Display for ClassExpr {
    /// Canonical text with the fewest parentheses that reparse to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
