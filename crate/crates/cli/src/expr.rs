//! The expression mini-language: parsing and evaluation.
//!
//! Scalars and algebra elements share one grammar. A product of scalar
//! factors stays a scalar, which is what allows `/` and negative powers on
//! coefficients such as `q^-2` or `(q^2 - 1)/(q + 1)`.

use qonsager::freealg::NcPoly;
use qonsager::onsager::{named_morphism, root_vector, MorphismName};
use qonsager::pbw::{lift_to_pbw, pbw_multiply, PbwElement};
use qonsager::roots::{normalize_root, Family, RootError};
use qonsager::scalar::{qint, ScalarError};
use qonsager::{Poly, Root, Scalar};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i64),
    Q,
    C,
    QInt(i64),
    Atom(Family, i64),
    Sum(Vec<(bool, Expr)>),
    Product(Box<Expr>, Box<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i64),
    Commutator(Box<Expr>, Box<Expr>, Option<Box<Expr>>),
    Morph(MorphismName, Box<Expr>),
}

#[derive(Debug, Error, PartialEq)]
#[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("division by a non-scalar expression")]
    NonScalarDivisor,
    #[error("negative power of a non-scalar expression")]
    NonScalarPower,
    #[error("q-commutator parameter must be a scalar")]
    NonScalarParameter,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Root(#[from] RootError),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const MORPHS: [&str; 5] = ["T0inv", "T1inv", "Phi", "T0", "T1"];

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn rest(&mut self) -> &'a str {
        self.skip_ws();
        &self.src[self.pos..]
    }

    fn error<T>(&mut self, expected: &[&str]) -> Result<T, ParseError> {
        self.skip_ws();
        let found = match self.src[self.pos..].chars().next() {
            None => "end of input".to_string(),
            Some(c) => format!("{c:?}"),
        };
        Err(ParseError {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        })
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.error(&[&format!("{tok:?}")])
        }
    }

    fn uint(&mut self) -> Option<i64> {
        let rest = self.rest();
        let n = rest.bytes().take_while(|b| b.is_ascii_digit()).count();
        if n == 0 {
            return None;
        }
        let v = rest[..n].parse().ok()?;
        self.pos += n;
        Some(v)
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat("-");
        match self.uint() {
            Some(v) => Ok(if neg { -v } else { v }),
            None => self.error(&["integer"]),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut neg = self.eat("-");
        loop {
            terms.push((neg, self.term()?));
            if self.eat("+") {
                neg = false;
            } else if self.eat("-") {
                neg = true;
            } else {
                break;
            }
        }
        Ok(match terms.as_slice() {
            [(false, _)] => terms.pop().unwrap().1,
            _ => Expr::Sum(terms),
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat("*") {
                acc = Expr::Product(Box::new(acc), Box::new(self.power()?));
            } else if self.eat("/") {
                acc = Expr::Quotient(Box::new(acc), Box::new(self.power()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.factor()?;
        if self.eat("^") {
            let e = self.int()?;
            return Ok(Expr::Power(Box::new(base), e));
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        const FACTOR: [&str; 8] = ["integer", "\"q\"", "\"c\"", "\"[\"", "\"(\"", "\"B0\"", "\"B1\"", "morphism"];
        if let Some(v) = self.uint() {
            return Ok(Expr::Int(v));
        }
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        if self.eat("[") {
            // `[n]q` is a q-integer, anything else a commutator
            let save = self.pos;
            if let Some(n) = self.uint() {
                if self.eat("]") {
                    if self.eat("q") {
                        return Ok(Expr::QInt(n));
                    }
                    return self.error(&["\"q\""]);
                }
            }
            self.pos = save;
            let x = self.expr()?;
            self.expect(",")?;
            let y = self.expr()?;
            let p = if self.eat(";") { Some(Box::new(self.expr()?)) } else { None };
            self.expect("]")?;
            return Ok(Expr::Commutator(Box::new(x), Box::new(y), p));
        }
        if self.eat("B(") {
            let k = self.int()?;
            self.expect(",")?;
            let fam = if self.eat("a0") {
                Family::Alpha0
            } else if self.eat("a1") {
                Family::Alpha1
            } else if self.eat("d") {
                Family::Delta
            } else {
                return self.error(&["\"a0\"", "\"a1\"", "\"d\""]);
            };
            self.expect(")")?;
            return Ok(Expr::Atom(fam, k));
        }
        if self.eat("B0") {
            return Ok(Expr::Atom(Family::Alpha0, 0));
        }
        if self.eat("B1") {
            return Ok(Expr::Atom(Family::Alpha1, 0));
        }
        for m in MORPHS {
            if self.rest().starts_with(m) && self.rest()[m.len()..].trim_start().starts_with('(') {
                self.pos += m.len();
                self.expect("(")?;
                let e = self.expr()?;
                self.expect(")")?;
                return Ok(Expr::Morph(m.parse().expect("known morphism"), Box::new(e)));
            }
        }
        if self.eat("q") {
            return Ok(Expr::Q);
        }
        if self.eat("c") {
            return Ok(Expr::C);
        }
        self.error(&FACTOR)
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.error(&["\"+\"", "\"-\"", "\"*\"", "\"/\"", "\"^\"", "end of input"]);
    }
    Ok(e)
}

/// Where an expression is evaluated.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Free,
    Pbw,
}

/// An evaluated expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Free(Poly),
    Pbw(PbwElement),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Free(p) => write!(f, "{p}"),
            Value::Pbw(p) => write!(f, "{p}"),
        }
    }
}

/// Intermediate values: scalars stay scalars until they meet an element.
#[derive(Clone)]
enum V {
    S(Scalar),
    F(Poly),
    P(PbwElement),
}

impl V {
    fn lift(self, t: Target) -> V {
        match (self, t) {
            (V::S(k), Target::Free) => V::F(Poly::constant(k)),
            (V::S(k), Target::Pbw) => V::P(PbwElement::constant(k)),
            (v, _) => v,
        }
    }

    fn add(self, o: V, t: Target) -> V {
        match (self, o) {
            (V::S(a), V::S(b)) => V::S(a + b),
            (a, b) => match (a.lift(t), b.lift(t)) {
                (V::F(a), V::F(b)) => V::F(a.add(&b)),
                (V::P(a), V::P(b)) => V::P(a.add(&b)),
                _ => unreachable!("one target per evaluation"),
            },
        }
    }

    fn neg(self) -> V {
        match self {
            V::S(a) => V::S(-a),
            V::F(a) => V::F(a.neg()),
            V::P(a) => V::P(a.neg()),
        }
    }

    fn mul(self, o: V, t: Target) -> V {
        match (self, o) {
            (V::S(a), V::S(b)) => V::S(a * b),
            (V::S(k), V::F(x)) | (V::F(x), V::S(k)) => V::F(x.scale(&k)),
            (V::S(k), V::P(x)) | (V::P(x), V::S(k)) => V::P(x.scale(&k)),
            (V::F(a), V::F(b)) => V::F(a.mul(&b)),
            (V::P(a), V::P(b)) => V::P(pbw_multiply(&a, &b)),
            (a, b) => match (a.lift(t), b.lift(t)) {
                (V::F(a), V::F(b)) => V::F(a.mul(&b)),
                (V::P(a), V::P(b)) => V::P(pbw_multiply(&a, &b)),
                _ => unreachable!("one target per evaluation"),
            },
        }
    }

    fn one(t: Target) -> V {
        V::S(Scalar::one()).lift(t)
    }
}

fn ev(e: &Expr, t: Target) -> Result<V, EvalError> {
    Ok(match e {
        Expr::Int(k) => V::S(Scalar::from_int(*k)),
        Expr::Q => V::S(Scalar::q()),
        Expr::C => V::S(Scalar::c()),
        Expr::QInt(n) => V::S(qint(*n)),
        Expr::Atom(fam, k) => {
            let r: Root = normalize_root(*fam, *k)?;
            match t {
                Target::Free => V::F((*root_vector(r)).clone()),
                Target::Pbw => V::P(PbwElement::root(r)),
            }
        }
        Expr::Sum(terms) => {
            let mut acc = V::S(Scalar::zero());
            for (neg, x) in terms {
                let v = ev(x, t)?;
                acc = acc.add(if *neg { v.neg() } else { v }, t);
            }
            acc
        }
        Expr::Product(a, b) => ev(a, t)?.mul(ev(b, t)?, t),
        Expr::Quotient(a, b) => match ev(b, t)? {
            V::S(k) => ev(a, t)?.mul(V::S(k.inv()?), t),
            _ => return Err(EvalError::NonScalarDivisor),
        },
        Expr::Power(a, n) => match ev(a, t)? {
            V::S(k) => V::S(k.pow(*n)?),
            _ if *n < 0 => return Err(EvalError::NonScalarPower),
            v => {
                let mut acc = V::one(t);
                for _ in 0..*n {
                    acc = acc.mul(v.clone(), t);
                }
                acc
            }
        },
        Expr::Commutator(a, b, p) => {
            let p = match p {
                None => Scalar::one(),
                Some(p) => match ev(p, t)? {
                    V::S(k) => k,
                    _ => return Err(EvalError::NonScalarParameter),
                },
            };
            let (x, y) = (ev(a, t)?, ev(b, t)?);
            let xy = x.clone().mul(y.clone(), t);
            let yx = y.mul(x, t);
            xy.add(yx.mul(V::S(-p), t), t)
        }
        Expr::Morph(m, a) => {
            let x = match ev(a, Target::Free)?.lift(Target::Free) {
                V::F(x) => x,
                _ => unreachable!("free evaluation"),
            };
            let y = named_morphism(*m).apply(&x);
            match t {
                Target::Free => V::F(y),
                Target::Pbw => V::P(lift_to_pbw(&y)),
            }
        }
    })
}

/// Evaluate exactly in the free algebra or in the ordered-monomial basis.
pub fn eval(e: &Expr, t: Target) -> Result<Value, EvalError> {
    Ok(match ev(e, t)?.lift(t) {
        V::F(x) => Value::Free(x),
        V::P(x) => Value::Pbw(x),
        V::S(_) => unreachable!("lifted"),
    })
}

/// Shorthand used by tests: parse and evaluate in the free algebra.
pub fn free(text: &str) -> Result<NcPoly<Scalar>, String> {
    let e = parse(text).map_err(|e| e.to_string())?;
    match eval(&e, Target::Free).map_err(|e| e.to_string())? {
        Value::Free(x) => Ok(x),
        Value::Pbw(_) => unreachable!("free target"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        let e = parse("[B(1,d), B0]").unwrap();
        assert!(matches!(e, Expr::Commutator(_, _, None)));
        let e = parse("[B(0,a1), B(1,a1); q^-2]").unwrap();
        assert!(matches!(e, Expr::Commutator(_, _, Some(_))));
        let e = parse("T0(B1) * B0^2").unwrap();
        match e {
            Expr::Product(a, b) => {
                assert!(matches!(*a, Expr::Morph(MorphismName::T0, _)));
                assert!(matches!(*b, Expr::Power(_, 2)));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(parse("[3]q").unwrap(), Expr::QInt(3));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = parse("B0 + * B1").unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(err.expected.iter().any(|s| s.contains("B0")));
        let err = parse("B(1,x)").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(parse("[B0, B1").is_err());
        assert!(parse("B0 B1").is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(free("B(1,d)").unwrap().to_string(), "-B0*B1 + q^-2*B1*B0");
        assert_eq!(free("B0^0").unwrap(), Poly::one());
        assert_eq!(free("[2]q*c").unwrap(), Poly::constant(qonsager::onsager::c_two()));
        assert!(free("B(0,d)").is_err());
        assert!(free("B0/B1").is_err());
        let x = free("(q^2 - 1)/(q - 1) * B0").unwrap();
        assert_eq!(x, free("(q + 1)*B0").unwrap());
        let e = parse("[B(1,d), B0]").unwrap();
        let v = eval(&e, Target::Pbw).unwrap();
        assert_eq!(v.to_string(), "(c*q + c*q^-1)*B(1,a0) + (-c*q - c*q^-1)*B1");
    }

    #[test]
    fn render_round_trip() {
        for s in ["T0(B1)", "B(2,d) + [3]q/c", "(1/2)*B(1,a0)*B0 - q^-3*c"] {
            let x = free(s).unwrap();
            assert_eq!(free(&x.to_string()).unwrap(), x, "{s}");
        }
    }
}
