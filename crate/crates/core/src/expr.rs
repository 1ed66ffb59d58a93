//! Expression language over the generators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' ['-'] int)?
//! atom   := 'T'int | 'L'int | 'X'int | 'x' '(' int (',' int)* ')'
//!         | 'sigma' '(' int ')' | 'q' | 'u'int | int | '(' expr ')'
//! ```
//!
//! Unary minus and negative exponents go beyond the minimal grammar; negative
//! powers are only evaluated where an inverse is available.

use std::fmt;

use num_bigint::BigInt;

use crate::affine::{self, AffineAlgebra, AffineElement};
use crate::error::{Error, Result};
use crate::hecke::{AkAlgebra, HeckeElement};
use crate::perm::Composition;
use crate::ring::RingElem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    U(usize),
    T(usize),
    L(usize),
    X(usize),
    XLambda(Vec<usize>),
    Sigma(usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    Mul(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { offset: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let at = self.pos;
            let k = self.digits()?;
            let k: i64 = k.try_into().map_err(|_| Error::Syntax { offset: at, msg: "exponent too large".into() })?;
            return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    /// An unsigned decimal integer; whitespace may precede it.
    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits"))
    }

    /// Index directly attached to a generator name, as in `T1`.
    fn index(&mut self) -> Result<usize> {
        let at = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Err(self.error("expected an index"));
        }
        let n = self.digits()?;
        n.try_into().map_err(|_| Error::Syntax { offset: at, msg: "index too large".into() })
    }

    fn small_int(&mut self) -> Result<usize> {
        self.skip_ws();
        let at = self.pos;
        self.digits()?.try_into().map_err(|_| Error::Syntax { offset: at, msg: "integer too large".into() })
    }

    fn atom(&mut self) -> Result<Expr> {
        let c = self.peek().ok_or_else(|| self.error("unexpected end of input"))?;
        let rest = &self.src[self.pos..];
        if c.is_ascii_digit() {
            return Ok(Expr::Int(self.digits()?));
        }
        if rest.starts_with(b"sigma") {
            self.pos += 5;
            self.expect(b'(')?;
            let i = self.small_int()?;
            self.expect(b')')?;
            return Ok(Expr::Sigma(i));
        }
        self.pos += 1;
        match c {
            b'(' => {
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            b'q' => Ok(Expr::Q),
            b'u' => Ok(Expr::U(self.index()?)),
            b'T' => Ok(Expr::T(self.index()?)),
            b'L' => Ok(Expr::L(self.index()?)),
            b'X' => Ok(Expr::X(self.index()?)),
            b'x' => {
                self.expect(b'(')?;
                let mut parts = vec![self.small_int()?];
                while self.eat(b',') {
                    parts.push(self.small_int()?);
                }
                self.expect(b')')?;
                Ok(Expr::XLambda(parts))
            }
            _ => {
                self.pos -= 1;
                Err(self.error(&format!("unexpected character '{}'", rest_char(rest))))
            }
        }
    }
}

fn rest_char(rest: &[u8]) -> char {
    std::str::from_utf8(rest).ok().and_then(|s| s.chars().next()).unwrap_or('?')
}

// Printing: precedence 0 = sum, 1 = product, 2 = factor, 3 = atom.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) => 1,
        Expr::Neg(..) | Expr::Pow(..) => 2,
        _ => 3,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "(")?;
        write_at(f, e, 0)?;
        return write!(f, ")");
    }
    match e {
        Expr::Int(n) if n.sign() == num_bigint::Sign::Minus => write!(f, "(0 - {})", -n),
        Expr::Int(n) => write!(f, "{n}"),
        Expr::Q => write!(f, "q"),
        Expr::U(i) => write!(f, "u{i}"),
        Expr::T(i) => write!(f, "T{i}"),
        Expr::L(i) => write!(f, "L{i}"),
        Expr::X(i) => write!(f, "X{i}"),
        Expr::XLambda(p) => {
            let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            write!(f, "x({})", s.join(","))
        }
        Expr::Sigma(i) => write!(f, "sigma({i})"),
        Expr::Neg(x) => {
            write!(f, "-")?;
            write_at(f, x, 2)
        }
        Expr::Pow(x, k) => {
            write_at(f, x, 3)?;
            write!(f, "^{k}")
        }
        Expr::Mul(a, b) => {
            write_at(f, a, 1)?;
            write!(f, "*")?;
            write_at(f, b, 2)
        }
        Expr::Add(a, b) => {
            write_at(f, a, 0)?;
            write!(f, " + ")?;
            write_at(f, b, 1)
        }
        Expr::Sub(a, b) => {
            write_at(f, a, 0)?;
            write!(f, " - ")?;
            write_at(f, b, 1)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(f, self, 0)
    }
}

/// Where an expression is evaluated.
#[derive(Clone, Debug)]
pub enum EvalContext {
    Cyclotomic(AkAlgebra),
    Affine(AffineAlgebra),
}

impl EvalContext {
    pub fn cyclotomic(m: usize, r: usize) -> Result<Self> {
        Ok(EvalContext::Cyclotomic(AkAlgebra::new(m, r)?))
    }

    pub fn affine(m: usize, r: usize) -> Result<Self> {
        Ok(EvalContext::Affine(AffineAlgebra::new(m, r)?))
    }

    fn m(&self) -> usize {
        match self {
            EvalContext::Cyclotomic(h) => h.m(),
            EvalContext::Affine(a) => a.m(),
        }
    }
}

/// Result of evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Hecke(HeckeElement),
    Affine(AffineElement),
}

impl Value {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Hecke(x) => x.to_json(),
            Value::Affine(x) => x.to_json(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Hecke(x) => write!(f, "{x}"),
            Value::Affine(x) => write!(f, "{x}"),
        }
    }
}

// Scalars stay in ℛ until they meet an algebra element.
enum V {
    S(RingElem),
    H(HeckeElement),
    A(AffineElement),
}

pub fn eval(e: &Expr, ctx: &EvalContext) -> Result<Value> {
    Ok(match (ev(e, ctx)?, ctx) {
        (V::S(c), EvalContext::Cyclotomic(h)) => Value::Hecke(h.scalar(c)),
        (V::S(c), EvalContext::Affine(a)) => Value::Affine(a.scalar(c)),
        (V::H(x), _) => Value::Hecke(x),
        (V::A(x), _) => Value::Affine(x),
    })
}

/// Parses and evaluates.
pub fn eval_str(src: &str, ctx: &EvalContext) -> Result<Value> {
    eval(&parse(src)?, ctx)
}

fn lift(v: V, ctx: &EvalContext) -> V {
    match (v, ctx) {
        (V::S(c), EvalContext::Cyclotomic(h)) => V::H(h.scalar(c)),
        (V::S(c), EvalContext::Affine(a)) => V::A(a.scalar(c)),
        (v, _) => v,
    }
}

fn ev(e: &Expr, ctx: &EvalContext) -> Result<V> {
    let m = ctx.m();
    Ok(match e {
        Expr::Int(n) => V::S(RingElem::int(m, n.clone())),
        Expr::Q => V::S(RingElem::q(m)),
        Expr::U(i) => V::S(RingElem::u(m, *i)?),
        Expr::T(i) => match ctx {
            EvalContext::Cyclotomic(h) => V::H(h.gen_t(*i)?),
            EvalContext::Affine(a) => V::A(a.gen_t(*i)?),
        },
        Expr::L(j) => match ctx {
            EvalContext::Cyclotomic(h) => V::H(h.gen_l(*j)?),
            EvalContext::Affine(_) => return Err(Error::Context(format!("L{j} in an affine context"))),
        },
        Expr::X(j) => match ctx {
            EvalContext::Affine(a) => V::A(a.gen_x(*j, 1)?),
            EvalContext::Cyclotomic(_) => return Err(Error::Context(format!("X{j} in a cyclotomic context"))),
        },
        Expr::XLambda(p) => {
            let lambda = Composition(p.clone());
            match ctx {
                EvalContext::Cyclotomic(h) => V::H(h.x_lambda(&lambda)?),
                EvalContext::Affine(a) => V::A(a.x_lambda(&lambda)?),
            }
        }
        Expr::Sigma(i) => match ctx {
            EvalContext::Cyclotomic(h) => V::H(h.sigma(*i)?),
            EvalContext::Affine(a) => {
                if *i > a.r() {
                    return Err(Error::Range(format!("σ_{i} with r = {}", a.r())));
                }
                let mut v = vec![0; a.r()];
                if *i > 0 {
                    v[i - 1] = 1;
                }
                V::A(a.sigma(&v)?)
            }
        },
        Expr::Neg(x) => match ev(x, ctx)? {
            V::S(c) => V::S(-c),
            V::H(h) => V::H(h.neg()),
            V::A(a) => V::A(a.scale(&-RingElem::one(m))),
        },
        Expr::Pow(x, k) => pow(x, *k, ctx)?,
        Expr::Mul(a, b) => match (ev(a, ctx)?, ev(b, ctx)?) {
            (V::S(x), V::S(y)) => V::S(x.try_mul(&y)?),
            (V::S(c), V::H(h)) | (V::H(h), V::S(c)) => V::H(h.scale(&c)),
            (V::S(c), V::A(h)) | (V::A(h), V::S(c)) => V::A(h.scale(&c)),
            (x, y) => binary(lift(x, ctx), lift(y, ctx), ctx, Op::Mul)?,
        },
        Expr::Add(a, b) => add_sub(a, b, ctx, Op::Add)?,
        Expr::Sub(a, b) => add_sub(a, b, ctx, Op::Sub)?,
    })
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

fn add_sub(a: &Expr, b: &Expr, ctx: &EvalContext, op: Op) -> Result<V> {
    match (ev(a, ctx)?, ev(b, ctx)?) {
        (V::S(x), V::S(y)) => Ok(V::S(match op {
            Op::Add => x.try_add(&y)?,
            _ => x.try_sub(&y)?,
        })),
        (x, y) => binary(lift(x, ctx), lift(y, ctx), ctx, op),
    }
}

fn binary(x: V, y: V, ctx: &EvalContext, op: Op) -> Result<V> {
    match (x, y, ctx) {
        (V::H(x), V::H(y), EvalContext::Cyclotomic(h)) => Ok(V::H(match op {
            Op::Add => x.try_add(&y)?,
            Op::Sub => x.try_sub(&y)?,
            Op::Mul => h.multiply(&x, &y)?,
        })),
        (V::A(x), V::A(y), EvalContext::Affine(a)) => Ok(V::A(match op {
            Op::Add => x.add(&y),
            Op::Sub => x.sub(&y),
            Op::Mul => a.multiply(&x, &y)?,
        })),
        _ => Err(Error::Internal("operands from different algebras".into())),
    }
}

fn pow(x: &Expr, k: i64, ctx: &EvalContext) -> Result<V> {
    if k < 0 {
        return match (x, ctx) {
            (Expr::X(j), EvalContext::Affine(a)) => Ok(V::A(a.gen_x(*j, k)?)),
            (Expr::T(i), EvalContext::Cyclotomic(h)) => power_of(V::H(h.gen_t_inverse(*i)?), (-k) as u64, ctx),
            (Expr::T(i), EvalContext::Affine(a)) => {
                // T_i⁻¹ = q⁻¹T_i − (1 − q⁻¹)
                let m = a.m();
                let qi = RingElem::q_pow(m, -1);
                let inv = a.gen_t(*i)?.scale(&qi).sub(&a.scalar(&RingElem::one(m) - &qi));
                power_of(V::A(inv), (-k) as u64, ctx)
            }
            (Expr::L(1), EvalContext::Cyclotomic(h)) => power_of(V::H(affine::l1_inverse(h)?), (-k) as u64, ctx),
            _ => match ev(x, ctx)? {
                V::S(c) => {
                    let inv = c.unit_inverse().ok_or_else(|| Error::Division(format!("{c} is not a unit")))?;
                    Ok(V::S(inv.pow((-k) as u32)))
                }
                _ => Err(Error::Unsupported(format!("negative power of {x}"))),
            },
        };
    }
    if let (Expr::X(j), EvalContext::Affine(a)) = (x, ctx) {
        return Ok(V::A(a.gen_x(*j, k)?));
    }
    power_of(ev(x, ctx)?, k as u64, ctx)
}

fn power_of(base: V, k: u64, ctx: &EvalContext) -> Result<V> {
    match base {
        V::S(c) => Ok(V::S(c.pow(k.try_into().map_err(|_| Error::Range("exponent too large".into()))?))),
        base => {
            let base = lift(base, ctx);
            let mut acc = lift(V::S(RingElem::one(ctx.m())), ctx);
            for _ in 0..k {
                acc = binary(acc, clone_v(&base), ctx, Op::Mul)?;
            }
            Ok(acc)
        }
    }
}

fn clone_v(v: &V) -> V {
    match v {
        V::S(c) => V::S(c.clone()),
        V::H(h) => V::H(h.clone()),
        V::A(a) => V::A(a.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: usize, r: usize) -> EvalContext {
        EvalContext::cyclotomic(m, r).unwrap()
    }

    #[test]
    fn precedence() {
        let e = parse("(q-1)*T1 + q").unwrap();
        assert!(matches!(e, Expr::Add(..)));
        assert_eq!(parse("x(2,1)*L3^2").unwrap().to_string(), "x(2,1)*L3^2");
        assert_eq!(parse("a").unwrap_err(), Error::Syntax { offset: 0, msg: "unexpected character 'a'".into() });
        assert!(matches!(parse("T1 +").unwrap_err(), Error::Syntax { offset: 4, .. }));
    }

    #[test]
    fn quadratic() {
        let c = ctx(2, 2);
        let v = eval_str("T1*T1", &c).unwrap();
        assert_eq!(v, eval_str("(q-1)*T1 + q", &c).unwrap());
    }

    #[test]
    fn cyclotomic_l1_square() {
        let c = ctx(2, 2);
        assert_eq!(eval_str("L1^2", &c).unwrap(), eval_str("(u1+u2)*L1 - u1*u2", &c).unwrap());
    }

    #[test]
    fn context_errors() {
        assert!(matches!(eval_str("X1", &ctx(2, 2)), Err(Error::Context(_))));
        let a = EvalContext::affine(2, 2).unwrap();
        assert!(matches!(eval_str("L1", &a), Err(Error::Context(_))));
        assert_eq!(eval_str("X1^-1*X1", &a).unwrap(), eval_str("1", &a).unwrap());
    }

    #[test]
    fn inverses() {
        let c = ctx(2, 3);
        assert_eq!(eval_str("T2^-1*T2", &c).unwrap(), eval_str("1", &c).unwrap());
        assert_eq!(eval_str("q^-2*q^2", &c).unwrap(), eval_str("1", &c).unwrap());
        let a = EvalContext::affine(1, 2).unwrap();
        assert_eq!(eval_str("T1*T1^-1", &a).unwrap(), eval_str("1", &a).unwrap());
    }

    #[test]
    fn printed_elements_reparse() {
        let c = ctx(2, 3);
        let v = eval_str("x(1,2)*sigma(1)*T2*L3 - q^-1*u2*T1", &c).unwrap();
        assert_eq!(eval_str(&v.to_string(), &c).unwrap(), v);
    }
}
