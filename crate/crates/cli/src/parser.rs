//! Recursive-descent parser for multivector expressions.
//!
//! ```text
//! expr    := addexpr
//! addexpr := mulexpr (('+'|'-') mulexpr)*
//! mulexpr := unary (('*'|'^'|'_|') unary)*
//! unary   := '-' unary | atom
//! atom    := RATIONAL | BASIS | FUNC '(' args ')' | '(' expr ')'
//! ```
//!
//! `*`, `^` and `_|` share one precedence level and associate to the left.
//! Basis vectors are single atoms `e1`..`en`; blades are written with `^`.

use std::fmt;

use gproj::{Rational, Signature};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Geometric,
    Outer,
    Contraction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Rev,
    Gi,
    Inv,
    Grade,
    Proj,
    Projr,
    Lift,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "rev" => Func::Rev,
            "gi" => Func::Gi,
            "inv" => Func::Inv,
            "grade" => Func::Grade,
            "proj" => Func::Proj,
            "projr" => Func::Projr,
            "lift" => Func::Lift,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Rev => "rev",
            Func::Gi => "gi",
            Func::Inv => "inv",
            Func::Grade => "grade",
            Func::Proj => "proj",
            Func::Projr => "projr",
            Func::Lift => "lift",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Grade | Func::Proj | Func::Projr => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    /// 0-based basis vector index.
    Basis(usize),
    Neg(Box<Expr>),
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Call {
        func: Func,
        args: Vec<Expr>,
    },
}

impl Expr {
    fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }
}

impl Drop for Expr {
    // Iterative, so dropping a sum of many thousand terms cannot overflow.
    fn drop(&mut self) {
        fn detach(e: &mut Expr, stack: &mut Vec<Expr>) {
            match e {
                Expr::Neg(inner) => stack.push(std::mem::replace(&mut **inner, Expr::Basis(0))),
                Expr::Binary { lhs, rhs, .. } => {
                    stack.push(std::mem::replace(&mut **lhs, Expr::Basis(0)));
                    stack.push(std::mem::replace(&mut **rhs, Expr::Basis(0)));
                }
                Expr::Call { args, .. } => stack.append(args),
                Expr::Rational(_) | Expr::Basis(_) => {}
            }
        }
        let mut stack = Vec::new();
        detach(self, &mut stack);
        while let Some(mut e) = stack.pop() {
            detach(&mut e, &mut stack);
        }
    }
}

/// Fully parenthesized rendering, mostly useful in tests and diagnostics.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(r) => write!(f, "{r}"),
            Expr::Basis(i) => write!(f, "e{}", i + 1),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary { op, lhs, rhs } => {
                let sym = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Geometric => "*",
                    BinOp::Outer => "^",
                    BinOp::Contraction => "_|",
                };
                write!(f, "({lhs} {sym} {rhs})")
            }
            Expr::Call { func, args } => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Contract,
    Slash,
    LParen,
    RParen,
    Comma,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("number `{n}`"),
            Token::Ident(s) => format!("`{s}`"),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Caret => "`^`".into(),
            Token::Contract => "`_|`".into(),
            Token::Slash => "`/`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Comma => "`,`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push((start, Token::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            b'_' if bytes.get(i + 1) == Some(&b'|') => {
                i += 2;
                tokens.push((start, Token::Contract));
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'/' => Token::Slash,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b',' => Token::Comma,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return err(i, format!("unexpected character `{ch}`"));
            }
        };
        tokens.push((start, tok));
        i += 1;
    }
    tokens.push((text.len(), Token::End));
    Ok(tokens)
}

/// Deepest nesting of parentheses, calls and unary minus accepted.
pub const MAX_NESTING: usize = 256;

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    sig: Signature,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> (usize, Token) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        let (offset, tok) = self.bump();
        if tok == want {
            Ok(())
        } else {
            err(
                offset,
                format!("expected {}, found {}", want.describe(), tok.describe()),
            )
        }
    }

    /// Runs `f` one nesting level deeper.
    fn nested<T>(
        &mut self,
        f: impl FnOnce(&mut Self) -> Result<T, ParseError>,
    ) -> Result<T, ParseError> {
        if self.depth >= MAX_NESTING {
            return err(self.offset(), format!("nesting deeper than {MAX_NESTING}"));
        }
        self.depth += 1;
        let result = f(self);
        self.depth -= 1;
        result
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.mulexpr()?;
        loop {
            let op = match self.peek() {
                Token::Plus => BinOp::Add,
                Token::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::binary(op, lhs, self.mulexpr()?);
        }
    }

    fn mulexpr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Token::Star => BinOp::Geometric,
                Token::Caret => BinOp::Outer,
                Token::Contract => BinOp::Contraction,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::binary(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.nested(Self::unary)?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (offset, tok) = self.bump();
        match tok {
            Token::Int(numer) => {
                if *self.peek() != Token::Slash {
                    return Ok(Expr::Rational(Rational::from_integer(numer)));
                }
                self.bump();
                let (doff, dtok) = self.bump();
                match dtok {
                    Token::Int(d) if !d.is_zero() => Ok(Expr::Rational(Rational::new(numer, d))),
                    Token::Int(_) => err(doff, "denominator must be positive"),
                    other => err(
                        doff,
                        format!("expected denominator, found {}", other.describe()),
                    ),
                }
            }
            Token::Ident(name) => self.ident(offset, &name),
            Token::LParen => {
                let inner = self.nested(Self::expr)?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            other => err(
                offset,
                format!("expected an operand, found {}", other.describe()),
            ),
        }
    }

    fn ident(&mut self, offset: usize, name: &str) -> Result<Expr, ParseError> {
        if let Some(digits) = name.strip_prefix('e') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let index: usize = match digits.parse() {
                    Ok(i) if i >= 1 => i,
                    _ => return err(offset, format!("invalid basis vector `{name}`")),
                };
                if index > self.sig.dim() {
                    return err(
                        offset,
                        format!("basis vector `{name}` out of range for {}", self.sig),
                    );
                }
                return Ok(Expr::Basis(index - 1));
            }
        }
        let Some(func) = Func::from_name(name) else {
            return err(offset, format!("unknown identifier `{name}`"));
        };
        self.expect(Token::LParen)?;
        let mut args = vec![self.nested(Self::expr)?];
        while *self.peek() == Token::Comma {
            self.bump();
            args.push(self.nested(Self::expr)?);
        }
        let close = self.offset();
        self.expect(Token::RParen)?;
        if args.len() != func.arity() {
            return err(
                close,
                format!(
                    "`{}` takes {} argument(s), got {}",
                    func.name(),
                    func.arity(),
                    args.len()
                ),
            );
        }
        Ok(Expr::Call { func, args })
    }
}

pub fn parse(text: &str, sig: Signature) -> Result<Expr, ParseError> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        sig,
        depth: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        Token::End => Ok(e),
        other => err(p.offset(), format!("unexpected {}", other.describe())),
    }
}
