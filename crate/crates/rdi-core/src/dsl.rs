//! A small expression language for user-supplied scenario functions.
//!
//! Expressions are written over the spacetime variables `t, x, y, z`
//! (SI units), free parameters bound at evaluation time, the physical
//! constants `hbar, c, e, m, pi`, and the functions `exp, sqrt, sin, cos,
//! arcsin, arctan, arcsinh, log`.  Operators are `+ - * / ^` with the usual
//! precedence; `^` is right-associative and binds tighter than unary minus.
//!
//! Parsed expressions evaluate generically over any [`Scalar`], so the same
//! source string yields plain values or derivative-carrying jets.

use std::collections::HashMap;
use std::fmt;

use crate::constants::PhysicalConstants;
use crate::error::{CoreError, Result};
use crate::jets::{checked, Scalar};

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    /// Variable, parameter or constant; resolved at evaluation time.
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Built-in univariate functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Sqrt,
    Sin,
    Cos,
    Arcsin,
    Arctan,
    Arcsinh,
    Log,
}

impl Func {
    fn name(&self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Sqrt => "sqrt",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Arcsin => "arcsin",
            Func::Arctan => "arctan",
            Func::Arcsinh => "arcsinh",
            Func::Log => "log",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "exp" => Func::Exp,
            "sqrt" => Func::Sqrt,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "arcsin" => Func::Arcsin,
            "arctan" => Func::Arctan,
            "arcsinh" => Func::Arcsinh,
            "log" => Func::Log,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token with its starting byte offset; `None` at end of input.
    fn next(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let b = self.src[start];
        let tok = match b {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                let mut end = start;
                while end < self.src.len()
                    && (self.src[end].is_ascii_digit() || self.src[end] == b'.')
                {
                    end += 1;
                }
                // optional exponent part
                if end < self.src.len() && (self.src[end] == b'e' || self.src[end] == b'E') {
                    let mut e = end + 1;
                    if e < self.src.len() && (self.src[e] == b'+' || self.src[e] == b'-') {
                        e += 1;
                    }
                    if e < self.src.len() && self.src[e].is_ascii_digit() {
                        while e < self.src.len() && self.src[e].is_ascii_digit() {
                            e += 1;
                        }
                        end = e;
                    }
                }
                let text = std::str::from_utf8(&self.src[start..end]).unwrap();
                let v: f64 = text.parse().map_err(|_| CoreError::Syntax {
                    offset: start,
                    message: format!("malformed number `{text}`"),
                })?;
                self.pos = end;
                return Ok(Some((start, Tok::Num(v))));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let mut end = start;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[start..end]).unwrap().to_string();
                self.pos = end;
                return Ok(Some((start, Tok::Ident(text))));
            }
            _ => {
                return Err(CoreError::Syntax {
                    offset: start,
                    message: format!("unexpected character `{}`", b as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let off = self.offset();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(CoreError::Syntax { offset: off, message: format!("expected {what}") }),
        }
    }

    /// Pratt loop: parses expressions whose operators bind at least `min_bp`.
    fn expr(&mut self, min_bp: u8) -> Result<Expr> {
        let mut lhs = self.prefix()?;
        loop {
            let (l_bp, r_bp, make): (u8, u8, fn(Box<Expr>, Box<Expr>) -> Expr) = match self.peek() {
                Some(Tok::Plus) => (1, 2, |a, b| Expr::Add(a, b)),
                Some(Tok::Minus) => (1, 2, |a, b| Expr::Sub(a, b)),
                Some(Tok::Star) => (3, 4, |a, b| Expr::Mul(a, b)),
                Some(Tok::Slash) => (3, 4, |a, b| Expr::Div(a, b)),
                // right-associative: x^y^z = x^(y^z)
                Some(Tok::Caret) => (7, 7, |a, b| Expr::Pow(a, b)),
                _ => break,
            };
            if l_bp < min_bp {
                break;
            }
            self.bump();
            let rhs = self.expr(r_bp)?;
            lhs = make(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expr> {
        let off = self.offset();
        match self.bump() {
            Some(Tok::Num(v)) => Ok(Expr::Number(v)),
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::LParen) {
                    let func = Func::from_name(&name).ok_or_else(|| CoreError::Syntax {
                        offset: off,
                        message: format!("unknown function `{name}`"),
                    })?;
                    self.bump();
                    let arg = self.expr(0)?;
                    self.expect(Tok::RParen, "closing `)`")?;
                    Ok(Expr::Call(func, Box::new(arg)))
                } else {
                    Ok(Expr::Ident(name))
                }
            }
            Some(Tok::Minus) => {
                // `^` binds tighter than unary minus: -x^2 parses as -(x^2)
                let inner = self.expr(6)?;
                Ok(Expr::Neg(Box::new(inner)))
            }
            Some(Tok::LParen) => {
                let inner = self.expr(0)?;
                self.expect(Tok::RParen, "closing `)`")?;
                Ok(inner)
            }
            Some(t) => Err(CoreError::Syntax {
                offset: off,
                message: format!("unexpected token {t:?}"),
            }),
            None => Err(CoreError::Syntax {
                offset: off,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parses an expression from source text.
pub fn parse(src: &str) -> Result<Expr> {
    let mut lexer = Lexer::new(src);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next()? {
        toks.push(t);
    }
    let mut p = Parser { toks, pos: 0, end: src.len() };
    let e = p.expr(0)?;
    if p.pos < p.toks.len() {
        return Err(CoreError::Syntax {
            offset: p.offset(),
            message: "trailing input after expression".into(),
        });
    }
    Ok(e)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Number(_) | Expr::Ident(_) | Expr::Call(..) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.precedence();
        if p < min {
            write!(f, "(")?;
        }
        match self {
            Expr::Number(v) => write!(f, "{v}")?,
            Expr::Ident(s) => write!(f, "{s}")?,
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.fmt_prec(f, 4)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " * ")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " / ")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Pow(a, b) => {
                a.fmt_prec(f, 5)?;
                write!(f, "^")?;
                b.fmt_prec(f, 4)?;
            }
            Expr::Call(func, a) => {
                write!(f, "{}(", func.name())?;
                a.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
        }
        if p < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    /// Canonical form: reparsing the output reproduces the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Evaluation bindings: spacetime variables (as scalars of the target type),
/// named parameters and the physical constants.
pub struct EvalContext<'a, S> {
    /// Values of `t, x, y, z`, in SI units (`t` in seconds).
    pub vars: [S; 4],
    pub params: &'a HashMap<String, f64>,
    pub constants: &'a PhysicalConstants,
}

impl Expr {
    /// Evaluates the expression, propagating whatever derivative structure
    /// the scalar type carries.
    pub fn eval<S: Scalar>(&self, ctx: &EvalContext<'_, S>) -> Result<S> {
        match self {
            Expr::Number(v) => Ok(S::from_re(*v)),
            Expr::Ident(name) => match name.as_str() {
                "t" => Ok(ctx.vars[0]),
                "x" => Ok(ctx.vars[1]),
                "y" => Ok(ctx.vars[2]),
                "z" => Ok(ctx.vars[3]),
                "hbar" => Ok(S::from_re(ctx.constants.hbar)),
                "c" => Ok(S::from_re(ctx.constants.c)),
                "e" => Ok(S::from_re(ctx.constants.e)),
                "m" => Ok(S::from_re(ctx.constants.m)),
                "pi" => Ok(S::from_re(std::f64::consts::PI)),
                _ => ctx
                    .params
                    .get(name)
                    .map(|v| S::from_re(*v))
                    .ok_or_else(|| CoreError::UnknownIdentifier { name: name.clone() }),
            },
            Expr::Neg(a) => Ok(-a.eval(ctx)?),
            Expr::Add(a, b) => Ok(a.eval(ctx)? + b.eval(ctx)?),
            Expr::Sub(a, b) => Ok(a.eval(ctx)? - b.eval(ctx)?),
            Expr::Mul(a, b) => Ok(a.eval(ctx)? * b.eval(ctx)?),
            Expr::Div(a, b) => Ok(a.eval(ctx)? / b.eval(ctx)?),
            Expr::Pow(a, b) => {
                let base = a.eval(ctx)?;
                // constant exponents keep the derivative structure exact
                match b.as_ref() {
                    Expr::Number(p) if p.fract() == 0.0 && p.abs() < 2_147_483_647.0 => {
                        Ok(base.powi(*p as i32))
                    }
                    Expr::Number(p) => Ok(base.powf(*p)),
                    Expr::Neg(inner) => match inner.as_ref() {
                        Expr::Number(p) if p.fract() == 0.0 && p.abs() < 2_147_483_647.0 => {
                            Ok(base.powi(-(*p as i32)))
                        }
                        Expr::Number(p) => Ok(base.powf(-p)),
                        _ => Ok((b.eval(ctx)? * checked::ln(&base)?).exp()),
                    },
                    _ => Ok((b.eval(ctx)? * checked::ln(&base)?).exp()),
                }
            }
            Expr::Call(func, a) => {
                let x = a.eval(ctx)?;
                match func {
                    Func::Exp => Ok(x.exp()),
                    Func::Sqrt => checked::sqrt(&x),
                    Func::Sin => Ok(x.sin()),
                    Func::Cos => Ok(x.cos()),
                    Func::Arcsin => checked::asin(&x),
                    Func::Arctan => Ok(x.atan()),
                    Func::Arcsinh => Ok(x.asinh()),
                    Func::Log => checked::ln(&x),
                }
            }
        }
    }
}
