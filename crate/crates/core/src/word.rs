//! Group words: syntax tree, parser and canonical renderer.
//!
//! ```text
//! word := term { term }
//! term := atom [ "^" int ]
//! atom := var | "(" word ")" | "[" word "," word { "," word } "]"
//! var  := "x" digits
//! int  := ["-"] digits        (nonzero)
//! ```
//!
//! `[u, v]` is `u⁻¹ v⁻¹ u v`, and `[a, b, c]` is the left-normed `[[a, b], c]`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Result, WordlabError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(u32),
    Inverse(Box<Expr>),
    Power(Box<Expr>, i64),
    Product(Vec<Expr>),
    Commutator(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(i: u32) -> Expr {
        Expr::Var(i)
    }

    pub fn pow(self, e: i64) -> Expr {
        assert!(e != 0, "zero exponent");
        if e == 1 {
            self
        } else {
            Expr::Power(Box::new(self), e)
        }
    }

    pub fn comm(self, other: Expr) -> Expr {
        Expr::Commutator(Box::new(self), Box::new(other))
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Expr::Var(i) => {
                out.insert(*i);
            }
            Expr::Inverse(c) | Expr::Power(c, _) => c.collect_vars(out),
            Expr::Product(cs) => cs.iter().for_each(|c| c.collect_vars(out)),
            Expr::Commutator(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// A parsed word together with its distinct variables in index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    ast: Expr,
    variables: Vec<u32>,
}

impl Word {
    pub fn new(ast: Expr) -> Self {
        let mut vars = BTreeSet::new();
        ast.collect_vars(&mut vars);
        Word {
            ast,
            variables: vars.into_iter().collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        if p.at_end() {
            return Err(p.error("empty word"));
        }
        let ast = p.word()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(Word::new(ast))
    }

    pub fn ast(&self) -> &Expr {
        &self.ast
    }

    /// Distinct variable indices, ascending (`x0` sorts before `x1`).
    pub fn variables(&self) -> &[u32] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn pow(&self, n: i64) -> Word {
        Word::new(self.ast.clone().pow(n))
    }

    /// `[self, x_var]`
    pub fn commutator_with(&self, var: u32) -> Word {
        Word::new(self.ast.clone().comm(Expr::Var(var)))
    }

    /// True for words built from variables and commutators alone, with each
    /// variable occurring exactly once.
    pub fn is_multilinear_commutator(&self) -> bool {
        fn walk(e: &Expr, seen: &mut Vec<u32>) -> bool {
            match e {
                Expr::Var(i) => {
                    seen.push(*i);
                    true
                }
                Expr::Commutator(a, b) => walk(a, seen) && walk(b, seen),
                _ => false,
            }
        }
        let mut seen = Vec::new();
        walk(&self.ast, &mut seen) && seen.len() == self.variables.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.ast, f)
    }
}

impl std::str::FromStr for Word {
    type Err = WordlabError;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

/// `[…[x1^n1, x2]^n2, …, xk]^nk`; exponent 1 leaves the power node out.
pub fn gamma_power_word(exponents: &[u32]) -> Result<Word> {
    let (&first, rest) = exponents
        .split_first()
        .ok_or_else(|| WordlabError::Validation("exponent sequence is empty".into()))?;
    if exponents.contains(&0) {
        return Err(WordlabError::Validation("exponents must be positive".into()));
    }
    let mut ast = Expr::var(1).pow(first as i64);
    for (k, &n) in rest.iter().enumerate() {
        ast = ast.comm(Expr::var(k as u32 + 2)).pow(n as i64);
    }
    Ok(Word::new(ast))
}

/// Lower central word `[x1, …, xk]`.
pub fn lower_central_word(k: usize) -> Result<Word> {
    gamma_power_word(&vec![1; k])
}

fn render(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Var(i) => write!(f, "x{i}"),
        Expr::Power(c, n) => {
            render_base(c, f)?;
            write!(f, "^{n}")
        }
        Expr::Inverse(c) => {
            render_base(c, f)?;
            f.write_str("^-1")
        }
        Expr::Product(cs) => {
            for (k, c) in cs.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                if matches!(c, Expr::Product(_)) {
                    f.write_str("(")?;
                    render(c, f)?;
                    f.write_str(")")?;
                } else {
                    render(c, f)?;
                }
            }
            Ok(())
        }
        Expr::Commutator(..) => {
            // flatten the left-normed spine: [[a,b],c] renders as [a,b,c]
            let mut parts = Vec::new();
            let mut head = e;
            while let Expr::Commutator(a, b) = head {
                parts.push(&**b);
                head = a;
            }
            parts.push(head);
            parts.reverse();
            f.write_str("[")?;
            for (k, p) in parts.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                render(p, f)?;
            }
            f.write_str("]")
        }
    }
}

fn render_base(c: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match c {
        Expr::Var(_) | Expr::Commutator(..) => render(c, f),
        _ => {
            f.write_str("(")?;
            render(c, f)?;
            f.write_str(")")
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> WordlabError {
        WordlabError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn word(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'x' | b'(' | b'[') => terms.push(self.term()?),
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Product(terms)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.int()?;
            if e == 0 {
                self.pos = start;
                return Err(self.error("exponent 0 is not allowed"));
            }
            return Ok(Expr::Power(Box::new(atom), e));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let digits = self.digits();
                if digits.is_empty() {
                    self.pos = start;
                    return Err(self.error("expected digits after `x`"));
                }
                digits
                    .parse::<u32>()
                    .map(Expr::Var)
                    .map_err(|_| self.error("variable index too large"))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut acc = self.word()?;
                self.expect(b',')?;
                loop {
                    let next = self.word()?;
                    acc = acc.comm(next);
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(acc);
                        }
                        _ => return Err(self.error("expected `,` or `]`")),
                    }
                }
            }
            Some(_) => Err(self.error("expected a variable, `(` or `[`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected an integer exponent"));
        }
        let v: i64 = digits
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }
}
