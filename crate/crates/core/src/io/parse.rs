//! Recursive-descent parser for scalar expressions.
//!
//! ```text
//! expression := term (('+' | '-') term)*
//! term       := factor (('*' | '/') factor)*
//! factor     := base ('^' nonneg-int)?
//! base       := integer | name | '(' expression ')' | '-' factor
//! ```
//!
//! There is no implicit multiplication. `p/q` literals are plain divisions.

use num_bigint::BigInt;

use crate::algebra::{Ctx, Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// Line and column, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Parsed expression tree; names are resolved when lowering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Name(String, Pos),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("integer {v}"),
        Tok::Ident(s) => format!("name `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '_') {
                return Err(syntax(
                    Pos {
                        line,
                        column: column + (i - start),
                    },
                    "implicit multiplication is not supported",
                ));
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
            }
        };
        column += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expression(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, pos) = self.bump();
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs), pos);
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            let (_, pos) = self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs), pos);
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(v) => {
                let e: u32 = v
                    .try_into()
                    .map_err(|_| syntax(pos, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            Tok::Minus => Err(syntax(pos, "negative exponent")),
            other => Err(syntax(
                pos,
                format!(
                    "exponent must be a nonnegative integer literal, found {}",
                    describe(&other)
                ),
            )),
        }
    }

    fn base(&mut self) -> Result<Expr> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::Ident(name) => Ok(Expr::Name(name, pos)),
            Tok::Minus => Ok(Expr::Neg(Box::new(self.factor()?))),
            Tok::LParen => {
                let inner = self.expression()?;
                let (close, cpos) = self.bump();
                if close != Tok::RParen {
                    return Err(syntax(
                        cpos,
                        format!("expected `)`, found {}", describe(&close)),
                    ));
                }
                Ok(inner)
            }
            other => Err(syntax(pos, format!("unexpected {}", describe(&other)))),
        }
    }
}

/// Parses text into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let e = p.expression()?;
    if *p.peek() != Tok::End {
        let pos = p.pos();
        return Err(syntax(pos, format!("unexpected {}", describe(p.peek()))));
    }
    Ok(e)
}

/// Resolves names against `ctx` and evaluates to a canonical rational function.
pub fn lower(expr: &Expr, ctx: &Ctx) -> Result<RationalFunction> {
    Ok(match expr {
        Expr::Int(v) => RationalFunction::from_int(ctx, v.clone()),
        Expr::Name(name, pos) => match ctx.index_of(name) {
            Some(i) => RationalFunction::var(ctx, i),
            None => {
                return Err(syntax(*pos, format!("unknown name `{name}`")));
            }
        },
        Expr::Neg(inner) => -lower(inner, ctx)?,
        Expr::Pow(inner, e) => lower(inner, ctx)?.pow(*e),
        Expr::Binary(op, a, b, pos) => {
            let a = lower(a, ctx)?;
            let b = lower(b, ctx)?;
            match op {
                BinOp::Add => &a + &b,
                BinOp::Sub => &a - &b,
                BinOp::Mul => &a * &b,
                BinOp::Div => {
                    if b.is_zero() {
                        return Err(syntax(*pos, "division by zero"));
                    }
                    a.checked_div(&b)?
                }
            }
        }
    })
}

/// Parses a scalar expression over `ctx`.
pub fn parse_scalar(text: &str, ctx: &Ctx) -> Result<RationalFunction> {
    lower(&parse_expr(text)?, ctx)
}

/// Parses an expression that must be a polynomial (no remaining denominator).
pub fn parse_polynomial(text: &str, ctx: &Ctx) -> Result<Polynomial> {
    let f = parse_scalar(text, ctx)?;
    let (num, den) = f.into_parts();
    if !den.is_one() {
        return Err(Error::Schema(format!("`{text}` is not a polynomial")));
    }
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarContext;

    fn ctx() -> Ctx {
        VarContext::new(["x", "y", "z"], ["a"]).unwrap()
    }

    #[test]
    fn sphere_invariant() {
        let c = ctx();
        let f = parse_scalar("x^2+y^2+z^2", &c).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numer().num_terms(), 3);
        assert_eq!(f.to_string(), "x^2+y^2+z^2");
    }

    #[test]
    fn quotient_entry() {
        let c = ctx();
        let f = parse_scalar("-x/z", &c).unwrap();
        assert_eq!(f.numer(), &-Polynomial::var(&c, 0));
        assert_eq!(f.denom(), &Polynomial::var(&c, 2));
        assert_eq!(f.to_string(), "-x/z");
    }

    #[test]
    fn zeroth_power_and_literals() {
        let c = ctx();
        assert!(parse_scalar("(x+y)^0", &c).unwrap().is_one());
        assert_eq!(parse_scalar("6/4", &c).unwrap().to_string(), "3/2");
        assert_eq!(parse_scalar("-x^2", &c).unwrap().to_string(), "-x^2");
        assert_eq!(
            parse_scalar("2*a*x - -y", &c).unwrap().to_string(),
            "2*x*a+y"
        );
    }

    fn err_pos(text: &str) -> (usize, usize) {
        match parse_scalar(text, &ctx()) {
            Err(Error::Syntax { line, column, .. }) => (line, column),
            other => panic!("expected syntax error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn negative_corpus() {
        assert_eq!(err_pos("(x+y"), (1, 5));
        assert_eq!(err_pos("x+y)"), (1, 4));
        assert_eq!(err_pos("x^y"), (1, 3));
        assert_eq!(err_pos("x^-2"), (1, 3));
        assert_eq!(err_pos("x^(2)"), (1, 3));
        assert_eq!(err_pos("q + 1"), (1, 1));
        assert_eq!(err_pos("x/0"), (1, 2));
        assert_eq!(err_pos("x/(y-y)"), (1, 2));
        assert_eq!(err_pos("2x"), (1, 2));
        assert_eq!(err_pos("x +\n  $"), (2, 3));
        assert_eq!(err_pos(""), (1, 1));
        assert_eq!(err_pos("x^2^3"), (1, 4));
        assert_eq!(err_pos("x y"), (1, 3));
    }
}
