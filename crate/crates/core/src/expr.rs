//! Text grammar shared by every front end.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' uint]
//! atom   := uint | ident | '(' expr ')'
//! ```
//!
//! Identifiers are interpreted by the target algebra: `g` (field
//! generator), `t` (ring variable), `x`, `d`, `X`, `Y`, `x1`, `x2`, `d1`, `d2`.
//! Automorphisms are written either as an image pair `(exprX ; exprY)` or as
//! a word of generators `s`, `t[..]`, `gamma[..]`, `phi[..]`,
//! `aff[a,b;c,d;e,f]`.

use thiserror::Error;

use crate::gfq::FieldSpec;
use crate::poly::{BiPoly, UniPoly};
use crate::ring::{CoeffRing, PolyRing};
use crate::weyl::WeylElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("{symbol} not valid in a {context} expression")]
    Symbol { symbol: String, context: String },
    #[error("{0}")]
    Semantic(String),
}

fn syntax<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax {
        pos,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let v = digits
                .parse::<u64>()
                .or_else(|_| syntax(start, "integer literal too large"))?;
            out.push(Token {
                tok: Tok::Int(v),
                pos: start,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                pos: start,
            });
        } else if "+-*^()[];,".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                pos: i,
            });
            i += 1;
        } else {
            return syntax(i, format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

/// Parsed arithmetic expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Identifiers used anywhere in the expression.
    pub fn symbols(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut Vec<String>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone())
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_symbols(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            at: 0,
            end: text.chars().count(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.pos).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            syntax(self.pos(), format!("expected '{c}'"))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.at < self.toks.len() {
            syntax(self.pos(), "unexpected trailing input")
        } else {
            Ok(())
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            match self.peek() {
                Some(&Tok::Int(k)) => {
                    self.at += 1;
                    let k = u32::try_from(k).or_else(|_| syntax(pos, "exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), k))
                }
                _ => syntax(pos, "expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                Ok(Expr::Var(name))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(_) => syntax(pos, "expected a number, a variable or '('"),
            None => syntax(pos, "unexpected end of input"),
        }
    }
}

/// Parses a complete expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser::new(text)?;
    let e = parser.expr()?;
    parser.finish()?;
    Ok(e)
}

/// Syntax of one word letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSyntax {
    S,
    T(Expr),
    Gamma(Expr),
    Phi(Expr),
    /// Row-major matrix entries and the translation.
    Affine([Expr; 4], [Expr; 2]),
}

/// Syntax of an automorphism literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutSyntax {
    Images(Expr, Expr),
    Word(Vec<GenSyntax>),
}

impl AutSyntax {
    pub fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        let mut push = |e: &Expr| {
            for s in e.symbols() {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        };
        match self {
            AutSyntax::Images(a, b) => {
                push(a);
                push(b);
            }
            AutSyntax::Word(gens) => {
                for g in gens {
                    match g {
                        GenSyntax::S => {}
                        GenSyntax::T(e) | GenSyntax::Gamma(e) | GenSyntax::Phi(e) => push(e),
                        GenSyntax::Affine(m, v) => m.iter().chain(v.iter()).for_each(&mut push),
                    }
                }
            }
        }
        out
    }
}

/// Parses `(exprX ; exprY)` or a generator word.
pub fn parse_aut(text: &str) -> Result<AutSyntax, ParseError> {
    let mut p = Parser::new(text)?;
    if p.peek() == Some(&Tok::Sym('(')) {
        p.at += 1;
        let a = p.expr()?;
        p.expect(';')?;
        let b = p.expr()?;
        p.expect(')')?;
        p.finish()?;
        return Ok(AutSyntax::Images(a, b));
    }
    let mut gens = Vec::new();
    while p.at < p.toks.len() {
        let pos = p.pos();
        let Some(Tok::Ident(name)) = p.peek().cloned() else {
            return syntax(pos, "expected a generator: s, t[..], gamma[..], phi[..] or aff[..]");
        };
        p.at += 1;
        let gen = match name.as_str() {
            "s" => GenSyntax::S,
            "t" | "gamma" | "phi" => {
                p.expect('[')?;
                let e = p.expr()?;
                p.expect(']')?;
                match name.as_str() {
                    "t" => GenSyntax::T(e),
                    "gamma" => GenSyntax::Gamma(e),
                    _ => GenSyntax::Phi(e),
                }
            }
            "aff" => {
                p.expect('[')?;
                let mut es = Vec::new();
                for sep in [',', ';', ',', ';', ','] {
                    es.push(p.expr()?);
                    p.expect(sep)?;
                }
                es.push(p.expr()?);
                p.expect(']')?;
                let [a, b, c, d, e, f]: [Expr; 6] = es.try_into().expect("six entries");
                GenSyntax::Affine([a, b, c, d], [e, f])
            }
            other => return syntax(pos, format!("unknown generator '{other}'")),
        };
        gens.push(gen);
    }
    if gens.is_empty() {
        return syntax(0, "empty automorphism");
    }
    Ok(AutSyntax::Word(gens))
}

/// A target algebra in which expressions are evaluated.
pub trait Interp {
    type Value: Clone;
    /// Short name used in error messages, e.g. `K[x]`.
    fn context(&self) -> String;
    fn int(&self, v: u64) -> Self::Value;
    fn var(&self, name: &str) -> Option<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    fn pow(&self, a: &Self::Value, k: u32) -> Self::Value {
        let mut acc = self.int(1);
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

pub fn eval<I: Interp>(interp: &I, e: &Expr) -> Result<I::Value, ParseError> {
    Ok(match e {
        Expr::Int(v) => interp.int(*v),
        Expr::Var(name) => interp.var(name).ok_or_else(|| ParseError::Symbol {
            symbol: name.clone(),
            context: interp.context(),
        })?,
        Expr::Neg(a) => interp.neg(&eval(interp, a)?),
        Expr::Add(a, b) => interp.add(&eval(interp, a)?, &eval(interp, b)?),
        Expr::Sub(a, b) => interp.sub(&eval(interp, a)?, &eval(interp, b)?),
        Expr::Mul(a, b) => interp.mul(&eval(interp, a)?, &eval(interp, b)?),
        Expr::Pow(a, k) => interp.pow(&eval(interp, a)?, *k),
    })
}

/// Coefficient rings whose constants have names in the grammar.
pub trait NamedConstants: CoeffRing {
    fn constant_named(&self, name: &str) -> Option<Self::Elem>;
    fn label(&self) -> &'static str;
}

impl NamedConstants for FieldSpec {
    fn constant_named(&self, name: &str) -> Option<Self::Elem> {
        (name == "g" && self.degree() > 1).then(|| self.generator().raw())
    }
    fn label(&self) -> &'static str {
        "K"
    }
}

impl NamedConstants for PolyRing<FieldSpec> {
    fn constant_named(&self, name: &str) -> Option<Self::Elem> {
        match name {
            "t" => Some(self.t()),
            _ => self
                .base()
                .constant_named(name)
                .map(|c| UniPoly::constant(self.base(), c)),
        }
    }
    fn label(&self) -> &'static str {
        "K[t]"
    }
}

/// Coefficient ring itself.
pub struct CoeffInterp<'a, R>(pub &'a R);

impl<R: NamedConstants> Interp for CoeffInterp<'_, R> {
    type Value = R::Elem;
    fn context(&self) -> String {
        self.0.label().to_string()
    }
    fn int(&self, v: u64) -> R::Elem {
        self.0.from_int((v % self.0.characteristic() as u64) as i64)
    }
    fn var(&self, name: &str) -> Option<R::Elem> {
        self.0.constant_named(name)
    }
    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.0.add(a, b)
    }
    fn sub(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.0.sub(a, b)
    }
    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.0.neg(a)
    }
    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.0.mul(a, b)
    }
}

/// Univariate polynomials in the variable `var`.
pub struct UniInterp<'a, R> {
    pub ring: &'a R,
    pub var: &'a str,
}

impl<R: NamedConstants> Interp for UniInterp<'_, R> {
    type Value = UniPoly<R>;
    fn context(&self) -> String {
        format!("{}[{}]", self.ring.label(), self.var)
    }
    fn int(&self, v: u64) -> UniPoly<R> {
        UniPoly::constant(self.ring, CoeffInterp(self.ring).int(v))
    }
    fn var(&self, name: &str) -> Option<UniPoly<R>> {
        if name == self.var {
            return Some(UniPoly::var(self.ring));
        }
        self.ring
            .constant_named(name)
            .map(|c| UniPoly::constant(self.ring, c))
    }
    fn add(&self, a: &UniPoly<R>, b: &UniPoly<R>) -> UniPoly<R> {
        a + b
    }
    fn sub(&self, a: &UniPoly<R>, b: &UniPoly<R>) -> UniPoly<R> {
        a - b
    }
    fn neg(&self, a: &UniPoly<R>) -> UniPoly<R> {
        -a
    }
    fn mul(&self, a: &UniPoly<R>, b: &UniPoly<R>) -> UniPoly<R> {
        a * b
    }
    fn pow(&self, a: &UniPoly<R>, k: u32) -> UniPoly<R> {
        a.pow(k)
    }
}

/// Polynomials in `X`, `Y`.
pub struct BiInterp<'a, R>(pub &'a R);

impl<R: NamedConstants> Interp for BiInterp<'_, R> {
    type Value = BiPoly<R>;
    fn context(&self) -> String {
        format!("{}[X,Y]", self.0.label())
    }
    fn int(&self, v: u64) -> BiPoly<R> {
        BiPoly::constant(self.0, CoeffInterp(self.0).int(v))
    }
    fn var(&self, name: &str) -> Option<BiPoly<R>> {
        match name {
            "X" => Some(BiPoly::x(self.0)),
            "Y" => Some(BiPoly::y(self.0)),
            _ => self
                .0
                .constant_named(name)
                .map(|c| BiPoly::constant(self.0, c)),
        }
    }
    fn add(&self, a: &BiPoly<R>, b: &BiPoly<R>) -> BiPoly<R> {
        a + b
    }
    fn sub(&self, a: &BiPoly<R>, b: &BiPoly<R>) -> BiPoly<R> {
        a - b
    }
    fn neg(&self, a: &BiPoly<R>) -> BiPoly<R> {
        -a
    }
    fn mul(&self, a: &BiPoly<R>, b: &BiPoly<R>) -> BiPoly<R> {
        a * b
    }
    fn pow(&self, a: &BiPoly<R>, k: u32) -> BiPoly<R> {
        a.pow(k)
    }
}

/// Elements of `A_1` (`x`, `d`) or `A_2` (`x1`, `x2`, `d1`, `d2`).
pub struct WeylInterp<'a, R> {
    pub ring: &'a R,
    pub n: usize,
}

impl<R: NamedConstants> Interp for WeylInterp<'_, R> {
    type Value = WeylElement<R>;
    fn context(&self) -> String {
        format!("A_{}", self.n)
    }
    fn int(&self, v: u64) -> WeylElement<R> {
        WeylElement::constant(self.ring, self.n, CoeffInterp(self.ring).int(v))
    }
    fn var(&self, name: &str) -> Option<WeylElement<R>> {
        let gen = match (self.n, name) {
            (1, "x") => Some(WeylElement::x(self.ring, 1, 1)),
            (1, "d") => Some(WeylElement::d(self.ring, 1, 1)),
            (2, "x1") => Some(WeylElement::x(self.ring, 2, 1)),
            (2, "x2") => Some(WeylElement::x(self.ring, 2, 2)),
            (2, "d1") => Some(WeylElement::d(self.ring, 2, 1)),
            (2, "d2") => Some(WeylElement::d(self.ring, 2, 2)),
            _ => None,
        };
        gen.or_else(|| {
            self.ring
                .constant_named(name)
                .map(|c| WeylElement::constant(self.ring, self.n, c))
        })
    }
    fn add(&self, a: &WeylElement<R>, b: &WeylElement<R>) -> WeylElement<R> {
        a + b
    }
    fn sub(&self, a: &WeylElement<R>, b: &WeylElement<R>) -> WeylElement<R> {
        a - b
    }
    fn neg(&self, a: &WeylElement<R>) -> WeylElement<R> {
        -a
    }
    fn mul(&self, a: &WeylElement<R>, b: &WeylElement<R>) -> WeylElement<R> {
        a * b
    }
    fn pow(&self, a: &WeylElement<R>, k: u32) -> WeylElement<R> {
        a.pow(k)
    }
}

/// Dense polynomials in `g` with coefficients mod `p`, ascending.
struct IntPolyInterp(u32);

impl Interp for IntPolyInterp {
    type Value = Vec<u32>;
    fn context(&self) -> String {
        format!("F_{}[g]", self.0)
    }
    fn int(&self, v: u64) -> Vec<u32> {
        vec![(v % self.0 as u64) as u32]
    }
    fn var(&self, name: &str) -> Option<Vec<u32>> {
        (name == "g").then(|| vec![0, 1])
    }
    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let mut out = vec![0; a.len().max(b.len())];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = (a.get(k).unwrap_or(&0) + b.get(k).unwrap_or(&0)) % self.0;
        }
        out
    }
    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|c| (self.0 - c) % self.0).collect()
    }
    fn sub(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let mut out = vec![0; a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.0;
            }
        }
        out
    }
}

/// Ascending coefficients of an integer polynomial in `g`, reduced mod `p`.
pub fn parse_integer_poly_in_g(text: &str, p: u32) -> Result<Vec<u32>, ParseError> {
    let mut coeffs = eval(&IntPolyInterp(p), &parse_expr(text)?)?;
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

pub fn parse_field_element(spec: &FieldSpec, text: &str) -> Result<crate::gfq::FieldElement, ParseError> {
    let raw = eval(&CoeffInterp(spec), &parse_expr(text)?)?;
    Ok(spec.wrap(raw))
}

pub fn parse_uni<R: NamedConstants>(ring: &R, var: &str, text: &str) -> Result<UniPoly<R>, ParseError> {
    eval(&UniInterp { ring, var }, &parse_expr(text)?)
}

pub fn parse_bi<R: NamedConstants>(ring: &R, text: &str) -> Result<BiPoly<R>, ParseError> {
    eval(&BiInterp(ring), &parse_expr(text)?)
}

pub fn parse_weyl<R: NamedConstants>(ring: &R, n: usize, text: &str) -> Result<WeylElement<R>, ParseError> {
    eval(&WeylInterp { ring, n }, &parse_expr(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_powers() {
        let f = FieldSpec::prime(5).unwrap();
        let p = parse_uni(&f, "x", "2*x^2 + 3*(x+1)^2 - 1").unwrap();
        assert_eq!(p.to_string(), "x+2");
        let p = parse_uni(&f, "x", "-x").unwrap();
        assert_eq!(p.to_string(), "4*x");
    }

    #[test]
    fn weyl_input_is_normal_ordered() {
        let f = FieldSpec::prime(3).unwrap();
        let a = parse_weyl(&f, 1, "d*x").unwrap();
        let b = parse_weyl(&f, 1, "x*d+1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "x*d+1");
    }

    #[test]
    fn wrong_symbol_is_named() {
        let f = FieldSpec::prime(2).unwrap();
        let err = parse_uni(&f, "x", "X").unwrap_err();
        assert_eq!(err.to_string(), "X not valid in a K[x] expression");
        let err = parse_bi(&f, "d + X").unwrap_err();
        assert_eq!(err.to_string(), "d not valid in a K[X,Y] expression");
        // g needs a proper extension
        assert!(parse_uni(&f, "x", "g*x").is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let f = FieldSpec::prime(2).unwrap();
        assert_eq!(
            parse_uni(&f, "x", "x + * 1").unwrap_err(),
            ParseError::Syntax {
                pos: 4,
                message: "expected a number, a variable or '('".into()
            }
        );
        assert!(matches!(
            parse_uni(&f, "x", "(x+1"),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_uni(&f, "x", "x $ 1"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_uni(&f, "x", "x^y"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
    }

    #[test]
    fn ring_variable() {
        let r = PolyRing::new(FieldSpec::prime(3).unwrap());
        let f = parse_uni(&r, "x", "(t+1)*x^2 + t").unwrap();
        assert_eq!(f.to_string(), "(t+1)*x^2+t");
    }

    #[test]
    fn automorphism_literals() {
        let a = parse_aut("(Y ; -X)").unwrap();
        assert!(matches!(a, AutSyntax::Images(..)));
        let w = parse_aut("gamma[2] t[g+1] phi[X^2] s phi[X]").unwrap();
        let AutSyntax::Word(gens) = &w else { panic!() };
        assert_eq!(gens.len(), 5);
        assert_eq!(w.symbols(), vec!["g".to_string(), "X".to_string()]);
        let w = parse_aut("aff[1,1;0,1;0,1]").unwrap();
        assert!(matches!(&w, AutSyntax::Word(g) if matches!(g[0], GenSyntax::Affine(..))));
        assert!(parse_aut("phi[X").is_err());
        assert!(parse_aut("q").is_err());
        assert!(parse_aut("").is_err());
    }

    #[test]
    fn modulus_text() {
        assert_eq!(parse_integer_poly_in_g("g^2+g+1", 2).unwrap(), vec![1, 1, 1]);
    }
}
