//! Element expressions for the command line.
//!
//! The grammar is small: sums of scalar-weighted products of basis
//! literals, with parentheses.  `^` binds tightest, then `*`, then
//! `><`, then `+` and `-`.  Every error carries the 1-based column it
//! was raised at, and the printed form of any element parses back to
//! the same element, so reports can be replayed through `eval`.
//!
//!     a^-3*b          one Ore basis element
//!     w[2,1] + w[2,1] twice a dual basis element
//!     5/3*u[r]        a group algebra term
//!     w[1,0]><a*b     an Ore double basis element

use crate::cograded::GDoubleIdx;
use crate::double::DoubleIdx;
use crate::group::FiniteGroup;
use crate::linalg::{Elem, Idx};
use crate::ore::{DualIdx, OreIdx};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct ExprError {
    /// 1-based column in the input text.
    pub pos: usize,
    pub msg: String,
}

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "column {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ExprError {}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError { pos, msg: msg.into() })
}

#[derive(Debug, Clone, PartialEq)]
pub enum GenKind {
    A,
    B,
    W(i64, u8),
    D(String),
    U(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gen {
    pub kind: GenKind,
    pub pow: Option<i64>,
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Scalar(Scalar, usize),
    Gen(Gen),
    Mul(Box<Node>, Box<Node>),
    /// `left >< right`, a two-sided double element.
    Boxed(Box<Node>, Box<Node>, usize),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Neg(Box<Node>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    BoxOp,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pos = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                toks.push((Tok::Plus, pos));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, pos));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, pos));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, pos));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, pos));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, pos));
                i += 1;
            }
            '[' => {
                toks.push((Tok::LBrack, pos));
                i += 1;
            }
            ']' => {
                toks.push((Tok::RBrack, pos));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, pos));
                i += 1;
            }
            '>' => {
                if chars.get(i + 1) == Some(&'<') {
                    toks.push((Tok::BoxOp, pos));
                    i += 2;
                } else {
                    return err(pos, "expected `<` after `>`");
                }
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                match s.parse::<i64>() {
                    Ok(n) => toks.push((Tok::Num(n), start + 1)),
                    Err(_) => return err(start + 1, format!("integer out of range: {s}")),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), start + 1));
            }
            c => return err(pos, format!("unexpected character `{c}`")),
        }
    }
    Ok(Lexer { toks, end: chars.len() + 1 })
}

struct Parser {
    lx: Lexer,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.lx.toks.get(self.at).map(|t| t.1).unwrap_or(self.lx.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.lx.toks.get(self.at).map(|t| t.0.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<usize, ExprError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(pos),
            _ => err(pos, format!("expected {what}")),
        }
    }

    /// A possibly signed integer (for exponents and bracket indices).
    fn signed_int(&mut self) -> Result<i64, ExprError> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(if neg { -n } else { n }),
            _ => err(pos, "expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.boxterm()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Node::Add(Box::new(lhs), Box::new(self.boxterm()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Node::Sub(Box::new(lhs), Box::new(self.boxterm()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn boxterm(&mut self) -> Result<Node, ExprError> {
        let lhs = self.prod()?;
        if self.peek() == Some(&Tok::BoxOp) {
            let pos = self.pos();
            self.bump();
            let rhs = self.prod()?;
            if self.peek() == Some(&Tok::BoxOp) {
                return err(self.pos(), "`><` does not chain; parenthesize");
            }
            return Ok(Node::Boxed(Box::new(lhs), Box::new(rhs), pos));
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Num(d)) if d != 0 => Ok(Node::Scalar(Scalar::frac(n, d), pos)),
                        Some(Tok::Num(_)) => err(dpos, "zero denominator"),
                        _ => err(dpos, "expected a denominator"),
                    }
                } else {
                    Ok(Node::Scalar(Scalar::int(n), pos))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                let kind = match name.as_str() {
                    "a" => GenKind::A,
                    "b" => GenKind::B,
                    "w" => {
                        self.expect(Tok::LBrack, "`[` after `w`")?;
                        let m = self.signed_int()?;
                        self.expect(Tok::Comma, "`,`")?;
                        let npos = self.pos();
                        let n = self.signed_int()?;
                        if n != 0 && n != 1 {
                            return err(npos, "second index must be 0 or 1");
                        }
                        self.expect(Tok::RBrack, "`]`")?;
                        GenKind::W(m, n as u8)
                    }
                    "d" | "u" => {
                        self.expect(Tok::LBrack, format!("`[` after `{name}`").as_str())?;
                        let npos = self.pos();
                        let label = match self.bump() {
                            Some(Tok::Ident(s)) => s,
                            Some(Tok::Num(k)) => k.to_string(),
                            _ => return err(npos, "expected a group element name"),
                        };
                        self.expect(Tok::RBrack, "`]`")?;
                        if name == "d" {
                            GenKind::D(label)
                        } else {
                            GenKind::U(label)
                        }
                    }
                    other => return err(pos, format!("unknown literal `{other}`")),
                };
                let pow = if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    Some(self.signed_int()?)
                } else {
                    None
                };
                Ok(Node::Gen(Gen { kind, pow, pos }))
            }
            _ => err(pos, "expected a number, literal, or `(`"),
        }
    }
}

pub fn parse(text: &str) -> Result<Node, ExprError> {
    let mut p = Parser { lx: lex(text)?, at: 0 };
    if p.peek().is_none() {
        return err(1, "empty expression");
    }
    let node = p.expr()?;
    if p.peek().is_some() {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(node)
}

/// Instance-specific meaning of the literals.  Everything above the
/// literals (sums, scalar weights, products) is shared.
pub trait Semantics {
    type I: Idx;

    fn gen(&self, g: &Gen) -> Result<Elem<Self::I>, ExprError>;

    /// The unit element, for promoting bare scalars; errors where the
    /// instance has none.
    fn unit(&self, pos: usize) -> Result<Elem<Self::I>, ExprError>;

    fn mul(&self, x: &Elem<Self::I>, y: &Elem<Self::I>) -> Elem<Self::I>;

    fn boxed(&self, left: &Node, right: &Node, pos: usize) -> Result<Elem<Self::I>, ExprError> {
        let _ = (left, right);
        err(pos, "this instance has no `><` elements")
    }
}

enum V<I: Idx> {
    S(Scalar),
    E(Elem<I>),
}

fn to_elem<S: Semantics>(v: V<S::I>, sem: &S, pos: usize) -> Result<Elem<S::I>, ExprError> {
    match v {
        V::E(e) => Ok(e),
        V::S(s) if s.is_zero() => Ok(Elem::zero()),
        V::S(s) => Ok(sem.unit(pos)?.scale(&s)),
    }
}

fn eval_node<S: Semantics>(n: &Node, sem: &S) -> Result<V<S::I>, ExprError> {
    match n {
        Node::Scalar(s, _) => Ok(V::S(s.clone())),
        Node::Gen(g) => Ok(V::E(sem.gen(g)?)),
        Node::Neg(x) => Ok(match eval_node(x, sem)? {
            V::S(s) => V::S(-s),
            V::E(e) => V::E(e.scale(&-Scalar::one())),
        }),
        Node::Mul(x, y) => {
            let (vx, vy) = (eval_node(x, sem)?, eval_node(y, sem)?);
            Ok(match (vx, vy) {
                (V::S(s), V::S(t)) => V::S(s * t),
                (V::S(s), V::E(e)) | (V::E(e), V::S(s)) => V::E(e.scale(&s)),
                (V::E(e), V::E(f)) => V::E(sem.mul(&e, &f)),
            })
        }
        Node::Add(x, y) | Node::Sub(x, y) => {
            let sub = matches!(n, Node::Sub(..));
            let vx = eval_node(x, sem)?;
            let vy = eval_node(y, sem)?;
            let flip = |v: V<S::I>| match v {
                V::S(s) => V::S(-s),
                V::E(e) => V::E(e.scale(&-Scalar::one())),
            };
            let vy = if sub { flip(vy) } else { vy };
            Ok(match (vx, vy) {
                (V::S(s), V::S(t)) => V::S(s + t),
                (va, vb) => {
                    let mut e = to_elem(va, sem, node_pos(n))?;
                    e.add_assign(&to_elem(vb, sem, node_pos(n))?);
                    V::E(e)
                }
            })
        }
        Node::Boxed(l, r, pos) => Ok(V::E(sem.boxed(l, r, *pos)?)),
    }
}

fn node_pos(n: &Node) -> usize {
    match n {
        Node::Scalar(_, p) => *p,
        Node::Gen(g) => g.pos,
        Node::Boxed(_, _, p) => *p,
        Node::Neg(x) => node_pos(x),
        Node::Mul(x, _) | Node::Add(x, _) | Node::Sub(x, _) => node_pos(x),
    }
}

pub fn eval<S: Semantics>(n: &Node, sem: &S) -> Result<Elem<S::I>, ExprError> {
    let v = eval_node(n, sem)?;
    to_elem(v, sem, node_pos(n))
}

pub fn parse_eval<S: Semantics>(text: &str, sem: &S) -> Result<Elem<S::I>, ExprError> {
    eval(&parse(text)?, sem)
}

/// a^m b^n with m from the exponent and n from the `b` factors.
pub struct OreSem;

impl Semantics for OreSem {
    type I = OreIdx;

    fn gen(&self, g: &Gen) -> Result<Elem<OreIdx>, ExprError> {
        match (&g.kind, g.pow) {
            (GenKind::A, k) => Ok(Elem::basis((k.unwrap_or(1), 0))),
            (GenKind::B, None) => Ok(Elem::basis((0, 1))),
            (GenKind::B, Some(_)) => err(g.pos, "`b` takes no exponent; write repeated factors"),
            _ => err(g.pos, "this instance has `a` and `b` literals only"),
        }
    }

    fn unit(&self, _pos: usize) -> Result<Elem<OreIdx>, ExprError> {
        Ok(Elem::basis((0, 0)))
    }

    fn mul(&self, x: &Elem<OreIdx>, y: &Elem<OreIdx>) -> Elem<OreIdx> {
        crate::ore::ore_algebra().mul(x, y)
    }
}

pub struct DualSem;

impl Semantics for DualSem {
    type I = DualIdx;

    fn gen(&self, g: &Gen) -> Result<Elem<DualIdx>, ExprError> {
        match (&g.kind, g.pow) {
            (GenKind::W(m, n), None) => Ok(Elem::basis((*m, *n))),
            (GenKind::W(..), Some(_)) => err(g.pos, "`w[..]` takes no exponent"),
            _ => err(g.pos, "this instance has `w[m,n]` literals only"),
        }
    }

    fn unit(&self, pos: usize) -> Result<Elem<DualIdx>, ExprError> {
        err(pos, "no unit in this instance; scalars must weight a literal")
    }

    fn mul(&self, x: &Elem<DualIdx>, y: &Elem<DualIdx>) -> Elem<DualIdx> {
        crate::ore::ore_dual(None).mul(x, y)
    }
}

/// One side of a finite group pair: `d[..]` for functions on the
/// group, `u[..]` for the group algebra.
pub struct GroupSem {
    pub group: FiniteGroup,
    pub functions: bool,
}

impl GroupSem {
    fn resolve(&self, label: &str, pos: usize) -> Result<usize, ExprError> {
        match self.group.index_of(label) {
            Some(i) => Ok(i),
            None => err(pos, format!("`{label}` is not an element of {}", self.group.label)),
        }
    }
}

impl Semantics for GroupSem {
    type I = usize;

    fn gen(&self, g: &Gen) -> Result<Elem<usize>, ExprError> {
        if g.pow.is_some() {
            return err(g.pos, "group literals take no exponent");
        }
        match (&g.kind, self.functions) {
            (GenKind::D(l), true) | (GenKind::U(l), false) => {
                Ok(Elem::basis(self.resolve(l, g.pos)?))
            }
            (GenKind::U(_), true) => err(g.pos, "this instance has `d[..]` literals only"),
            (GenKind::D(_), false) => err(g.pos, "this instance has `u[..]` literals only"),
            _ => err(g.pos, "group instances use `d[..]` or `u[..]` literals"),
        }
    }

    fn unit(&self, _pos: usize) -> Result<Elem<usize>, ExprError> {
        if self.functions {
            Ok(Elem::from_terms(
                (0..self.group.order()).map(|i| (i, Scalar::one())),
            ))
        } else {
            Ok(Elem::basis(self.group.e))
        }
    }

    fn mul(&self, x: &Elem<usize>, y: &Elem<usize>) -> Elem<usize> {
        let inst = if self.functions {
            crate::group::group_function_algebra(&self.group)
        } else {
            crate::group::group_algebra(&self.group)
        };
        inst.mul(x, y)
    }
}

/// `w[p,k]><a^r*b^l` pairs: the w-side lives left of the box.
pub struct OreDoubleSem;

impl Semantics for OreDoubleSem {
    type I = DoubleIdx;

    fn gen(&self, g: &Gen) -> Result<Elem<DoubleIdx>, ExprError> {
        err(g.pos, "double elements are written `w[p,k]><a^r*b^l`")
    }

    fn unit(&self, pos: usize) -> Result<Elem<DoubleIdx>, ExprError> {
        err(pos, "no unit in this instance; scalars must weight a `><` literal")
    }

    fn mul(&self, x: &Elem<DoubleIdx>, y: &Elem<DoubleIdx>) -> Elem<DoubleIdx> {
        crate::double::ore_double(None).qt.inst.mul(x, y)
    }

    fn boxed(&self, left: &Node, right: &Node, pos: usize) -> Result<Elem<DoubleIdx>, ExprError> {
        let l = eval(left, &DualSem).map_err(|e| ExprError {
            pos: e.pos,
            msg: format!("left of `><` must be a w-side element: {}", e.msg),
        })?;
        let r = eval(right, &OreSem).map_err(|e| ExprError {
            pos: e.pos,
            msg: format!("right of `><` must be an a-side element: {}", e.msg),
        })?;
        let _ = pos;
        let mut out = Elem::zero();
        for (i, c) in l.terms() {
            for (j, d) in r.terms() {
                out.add_term((*i, *j), c * d);
            }
        }
        Ok(out)
    }
}

/// `u[p]><d[q]` pairs for the group double.
pub struct GroupDoubleSem {
    pub group: FiniteGroup,
}

impl Semantics for GroupDoubleSem {
    type I = GDoubleIdx;

    fn gen(&self, g: &Gen) -> Result<Elem<GDoubleIdx>, ExprError> {
        err(g.pos, "double elements are written `u[p]><d[q]`")
    }

    fn unit(&self, _pos: usize) -> Result<Elem<GDoubleIdx>, ExprError> {
        let n = self.group.order();
        Ok(Elem::from_terms((0..n).map(|h| ((self.group.e, h), Scalar::one()))))
    }

    fn mul(&self, x: &Elem<GDoubleIdx>, y: &Elem<GDoubleIdx>) -> Elem<GDoubleIdx> {
        crate::cograded::group_double(&self.group, None).graded.inst.mul(x, y)
    }

    fn boxed(&self, left: &Node, right: &Node, pos: usize) -> Result<Elem<GDoubleIdx>, ExprError> {
        let alg = GroupSem { group: self.group.clone(), functions: false };
        let fun = GroupSem { group: self.group.clone(), functions: true };
        let l = eval(left, &alg).map_err(|e| ExprError {
            pos: e.pos,
            msg: format!("left of `><` must be a u-side element: {}", e.msg),
        })?;
        let r = eval(right, &fun).map_err(|e| ExprError {
            pos: e.pos,
            msg: format!("right of `><` must be a d-side element: {}", e.msg),
        })?;
        let _ = pos;
        let mut out = Elem::zero();
        for (i, c) in l.terms() {
            for (j, d) in r.terms() {
                out.add_term((*i, *j), c * d);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ore(text: &str) -> Elem<OreIdx> {
        parse_eval(text, &OreSem).unwrap()
    }

    #[test]
    fn parses_signed_monomials() {
        let e = ore("-1*a^-1*b");
        assert_eq!(e.coeff(&(-1, 1)), -Scalar::one());
        assert_eq!(e.terms().count(), 1);
        assert_eq!(ore("a^5"), Elem::basis((5, 0)));
        assert_eq!(ore("b"), Elem::basis((0, 1)));
        assert_eq!(ore("1"), Elem::basis((0, 0)));
    }

    #[test]
    fn sums_collect() {
        let two = parse_eval("w[3,0] + w[3,0]", &DualSem).unwrap();
        assert_eq!(two.coeff(&(3, 0)), Scalar::int(2));
        let zero = parse_eval("w[2,1] - w[2,1]", &DualSem).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn products_use_instance_tables() {
        assert_eq!(ore("b*b"), Elem::zero());
        assert_eq!(ore("b*a"), Elem::basis((1, 1)).scale(&-Scalar::one()));
        let d = parse_eval("w[3,0]*w[3,1]", &DualSem).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn bad_second_index_is_rejected_with_position() {
        let e = parse("w[1,2]").unwrap_err();
        assert!(e.msg.contains("second index must be 0 or 1"));
        assert_eq!(e.pos, 5);
    }

    #[test]
    fn unknown_literals_name_the_instance_shape() {
        let e = parse_eval("w[1,0]", &OreSem).unwrap_err();
        assert!(e.msg.contains("`a` and `b`"));
        let e = parse_eval("a*b", &DualSem).unwrap_err();
        assert!(e.msg.contains("w[m,n]"));
    }

    #[test]
    fn boxed_literals_build_double_basis() {
        let e = parse_eval("w[1,0]><a^-1*b", &OreDoubleSem).unwrap();
        assert_eq!(e.coeff(&((1, 0), (-1, 1))), Scalar::one());
        let e = parse_eval("-1*w[0,1]><1", &OreDoubleSem).unwrap();
        assert_eq!(e.coeff(&((0, 1), (0, 0))), -Scalar::one());
        let bad = parse_eval("a><w[0,0]", &OreDoubleSem).unwrap_err();
        assert!(bad.msg.contains("left of `><`"));
    }

    #[test]
    fn group_literals_resolve_names() {
        let g = crate::group::s3();
        let sem = GroupSem { group: g.clone(), functions: true };
        let name = g.name(1).to_string();
        let e = parse_eval(&format!("d[{name}]"), &sem).unwrap();
        assert_eq!(e, Elem::basis(1));
        let bad = parse_eval("d[nope]", &sem).unwrap_err();
        assert!(bad.msg.contains("not an element"));
        let wrong = parse_eval("u[e]", &sem).unwrap_err();
        assert!(wrong.msg.contains("d[..]"));
    }

    #[test]
    fn roundtrips_rendered_elements() {
        let a = crate::ore::ore_algebra();
        let d = crate::ore::ore_dual(None);
        for m in -3..=3i64 {
            for n in 0..=1u8 {
                let e = Elem::single((m, n), Scalar::frac(-5, 3));
                assert_eq!(parse_eval(&a.render(&e), &OreSem).unwrap(), e);
                assert_eq!(parse_eval(&d.render(&e), &DualSem).unwrap(), e);
            }
        }
        let mix: Elem<OreIdx> = Elem::from_terms(vec![
            ((2, 1), Scalar::int(3)),
            ((-1, 0), Scalar::frac(1, 2)),
            ((0, 0), -Scalar::one()),
        ]);
        assert_eq!(parse_eval(&a.render(&mix), &OreSem).unwrap(), mix);

        let dd = crate::double::ore_double(None);
        let pair: Elem<DoubleIdx> = Elem::from_terms(vec![
            (((2, 1), (0, 1)), Scalar::int(-2)),
            (((0, 0), (0, 0)), Scalar::one()),
        ]);
        assert_eq!(parse_eval(&dd.qt.inst.render(&pair), &OreDoubleSem).unwrap(), pair);

        let g = crate::group::s3();
        let gd = crate::cograded::group_double(&g, None);
        let pe: Elem<GDoubleIdx> =
            Elem::from_terms(vec![((1, 2), Scalar::int(4)), ((0, 5), -Scalar::one())]);
        let sem = GroupDoubleSem { group: g.clone() };
        assert_eq!(parse_eval(&gd.graded.inst.render(&pe), &sem).unwrap(), pe);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("").unwrap_err().pos, 1);
        assert_eq!(parse("a +").unwrap_err().pos, 4);
        assert_eq!(parse("a > b").unwrap_err().pos, 3);
        assert_eq!(parse("3/0").unwrap_err().pos, 3);
        assert_eq!(parse("w[1,0]><a><b").unwrap_err().pos, 10);
    }
}
