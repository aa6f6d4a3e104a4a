//! Text front end shared by polynomials, `F[ζ]` elements and scalars.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ["'"]* ['^' nat]
//! atom   := int ['/' nat] | 'i' | var | '[' expr ',' expr ']' | '(' expr ')'
//! ```
//!
//! Noncommutative variables are `x1, x2, …`; a postfix apostrophe applies the
//! involution. `F[ζ]` variables are `z{ℓ}_{ij}` and `zc{ℓ}_{ij}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cpoly::{CPoly, Var};
use crate::error::{Error, Result};
use crate::free::NcPolynomial;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k] as char;
        if c.is_ascii_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            let n: BigInt = src[start..k].parse().expect("digit run");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                k += 1;
            }
            out.push((Tok::Ident(src[start..k].to_string()), start));
        } else if "+-*/^[](),'".contains(c) {
            out.push((Tok::Sym(c), k));
            k += 1;
        } else {
            return Err(Error::Parse {
                pos: k,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(BigRational),
    Name(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Bracket(Box<Expr>, Box<Expr>, usize),
    Star(Box<Expr>, usize),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected a natural number"),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let mut base = self.atom()?;
        loop {
            let at = self.offset();
            if self.eat('\'') {
                base = Expr::Star(Box::new(base), at);
            } else {
                break;
            }
        }
        if self.eat('^') {
            let at = self.offset();
            let k = self.nat()?;
            let k: u32 = k.try_into().map_err(|_| Error::Parse {
                pos: at,
                msg: "exponent too large".into(),
            })?;
            base = Expr::Pow(Box::new(base), k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    let den_at = self.offset();
                    let d = self.nat()?;
                    if d.is_zero() {
                        return Err(Error::Parse {
                            pos: den_at,
                            msg: "zero denominator".into(),
                        });
                    }
                    Ok(Expr::Num(BigRational::new(n, d)))
                } else {
                    Ok(Expr::Num(BigRational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Name(name, at))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b), at))
            }
            Some(_) => self.err("expected a number, variable, '(' or '['"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_expr(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

trait Target: Sized {
    fn scalar(s: Scalar) -> Self;
    fn name(name: &str, pos: usize) -> Result<Self>;
    fn add(a: Self, b: Self) -> Self;
    fn sub(a: Self, b: Self) -> Self;
    fn mul(a: Self, b: Self) -> Self;
    fn neg(a: Self) -> Self;
    fn star(a: Self, pos: usize) -> Result<Self>;
    fn bracket(a: Self, b: Self, pos: usize) -> Result<Self>;

    fn pow(a: Self, k: u32) -> Self
    where
        Self: Clone,
    {
        let mut acc = Self::scalar(Scalar::one());
        for _ in 0..k {
            acc = Self::mul(acc, a.clone());
        }
        acc
    }
}

fn build<T: Target + Clone>(e: &Expr) -> Result<T> {
    Ok(match e {
        Expr::Num(r) => T::scalar(Scalar::from_rational(r.clone())),
        Expr::Name(n, pos) => {
            if n == "i" {
                T::scalar(Scalar::i())
            } else {
                T::name(n, *pos)?
            }
        }
        Expr::Add(a, b) => T::add(build(a)?, build(b)?),
        Expr::Sub(a, b) => T::sub(build(a)?, build(b)?),
        Expr::Mul(a, b) => T::mul(build(a)?, build(b)?),
        Expr::Neg(a) => T::neg(build(a)?),
        Expr::Pow(a, k) => T::pow(build(a)?, *k),
        Expr::Bracket(a, b, pos) => T::bracket(build(a)?, build(b)?, *pos)?,
        Expr::Star(a, pos) => T::star(build(a)?, *pos)?,
    })
}

fn bad_name<T>(name: &str, pos: usize, what: &str) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: format!("unknown {what} {name:?}"),
    })
}

impl Target for NcPolynomial {
    fn scalar(s: Scalar) -> Self {
        NcPolynomial::constant(s)
    }
    fn name(name: &str, pos: usize) -> Result<Self> {
        match name.strip_prefix('x').and_then(|d| d.parse::<u32>().ok()) {
            Some(k) if k >= 1 && !name[1..].starts_with('0') => Ok(NcPolynomial::var(k)),
            _ => bad_name(name, pos, "variable"),
        }
    }
    fn add(a: Self, b: Self) -> Self {
        &a + &b
    }
    fn sub(a: Self, b: Self) -> Self {
        &a - &b
    }
    fn mul(a: Self, b: Self) -> Self {
        &a * &b
    }
    fn neg(a: Self) -> Self {
        -&a
    }
    fn star(a: Self, _: usize) -> Result<Self> {
        Ok(a.star())
    }
    fn bracket(a: Self, b: Self, _: usize) -> Result<Self> {
        Ok(a.commutator(&b))
    }
}

fn parse_zeta(name: &str) -> Option<Var> {
    let (conj, rest) = if let Some(r) = name.strip_prefix("zc") {
        (true, r)
    } else {
        (false, name.strip_prefix('z')?)
    };
    let (l, ij) = rest.split_once('_')?;
    let matrix: u32 = l.parse().ok()?;
    let (row, col) = match ij.split_once('_') {
        Some((i, j)) => (i.parse().ok()?, j.parse().ok()?),
        None if ij.len() == 2 && ij.bytes().all(|b| b.is_ascii_digit()) => {
            ((ij.as_bytes()[0] - b'0') as u32, (ij.as_bytes()[1] - b'0') as u32)
        }
        None => return None,
    };
    if matrix == 0 || row == 0 || col == 0 {
        return None;
    }
    Some(Var {
        matrix,
        row,
        col,
        conjugate: conj,
    })
}

impl Target for CPoly {
    fn scalar(s: Scalar) -> Self {
        CPoly::constant(s)
    }
    fn name(name: &str, pos: usize) -> Result<Self> {
        match parse_zeta(name) {
            Some(v) => Ok(CPoly::var(v)),
            None => bad_name(name, pos, "variable"),
        }
    }
    fn add(a: Self, b: Self) -> Self {
        &a + &b
    }
    fn sub(a: Self, b: Self) -> Self {
        &a - &b
    }
    fn mul(a: Self, b: Self) -> Self {
        &a * &b
    }
    fn neg(a: Self) -> Self {
        -&a
    }
    fn star(_: Self, pos: usize) -> Result<Self> {
        Err(Error::Parse {
            pos,
            msg: "no involution on commutative polynomials".into(),
        })
    }
    fn bracket(_: Self, _: Self, pos: usize) -> Result<Self> {
        Err(Error::Parse {
            pos,
            msg: "commutator syntax is for noncommutative input".into(),
        })
    }
}

impl Target for Scalar {
    fn scalar(s: Scalar) -> Self {
        s
    }
    fn name(name: &str, pos: usize) -> Result<Self> {
        bad_name(name, pos, "symbol")
    }
    fn add(a: Self, b: Self) -> Self {
        &a + &b
    }
    fn sub(a: Self, b: Self) -> Self {
        &a - &b
    }
    fn mul(a: Self, b: Self) -> Self {
        &a * &b
    }
    fn neg(a: Self) -> Self {
        -a
    }
    fn star(a: Self, _: usize) -> Result<Self> {
        Ok(a.conj())
    }
    fn bracket(_: Self, _: Self, _: usize) -> Result<Self> {
        Ok(Scalar::zero())
    }
}

pub fn parse_poly(src: &str) -> Result<NcPolynomial> {
    build(&parse_expr(src)?)
}

pub fn parse_cpoly(src: &str) -> Result<CPoly> {
    build(&parse_expr(src)?)
}

pub fn parse_scalar(src: &str) -> Result<Scalar> {
    build(&parse_expr(src)?)
}
