//! Recursive-descent parser for polynomial text.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary ('*' unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' '-'? int)?`,
//! `atom := number ('/' number)? | ident | '(' expr ')'`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::poly::Poly;
use super::scalar::Scalar;
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, AlgebraError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*^()/".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((Tok::Sym('-'), col));
            i += 1;
        } else {
            return Err(AlgebraError::Parse { col, msg: alloc::format!("unexpected character '{}'", c) });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err<T>(&self, msg: &str) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse { col: self.col(), msg: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<C: Scalar>(&mut self) -> Result<Poly<C>, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Scalar>(&mut self) -> Result<Poly<C>, AlgebraError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary<C: Scalar>(&mut self) -> Result<Poly<C>, AlgebraError> {
        if self.eat('-') {
            return Ok(self.unary::<C>()?.neg());
        }
        self.power()
    }

    fn power<C: Scalar>(&mut self) -> Result<Poly<C>, AlgebraError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        let neg = self.eat('-');
        let n = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                n.parse::<i64>().map_err(|_| AlgebraError::Parse { col, msg: "exponent too large".into() })?
            }
            _ => return self.err("expected integer exponent"),
        };
        base.pow(if neg { -n } else { n }).map_err(|e| AlgebraError::Parse { col, msg: e.to_string() })
    }

    fn atom<C: Scalar>(&mut self) -> Result<Poly<C>, AlgebraError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut lit = n;
                if self.peek() == Some(&Tok::Sym('/')) {
                    if let Some((Tok::Num(d), _)) = self.toks.get(self.pos + 1).cloned() {
                        self.pos += 2;
                        lit = alloc::format!("{}/{}", lit, d);
                    }
                }
                match C::parse_literal(&lit) {
                    Some(c) => Ok(Poly::constant(c)),
                    None => Err(AlgebraError::Parse {
                        col,
                        msg: alloc::format!("literal '{}' is not in the coefficient domain", lit),
                    }),
                }
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(Poly::var(&v))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

pub(crate) fn parse_poly<C: Scalar>(s: &str) -> Result<Poly<C>, AlgebraError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(AlgebraError::Parse { col: 1, msg: "empty polynomial".into() });
    }
    let mut p = Parser { toks, pos: 0, end_col: s.chars().count() + 1 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{LaurentPoly, QPoly};
    use alloc::string::ToString;

    #[test]
    fn parses_nested_expressions() {
        let p: LaurentPoly = parse_poly("(x+1)^2 - 2*(x - -1)").unwrap();
        assert_eq!(p.to_string(), "x^2 - 1");
    }

    #[test]
    fn errors_carry_columns() {
        match parse_poly::<num_bigint::BigInt>("x + * y") {
            Err(AlgebraError::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("unexpected {:?}", other),
        }
        match parse_poly::<num_bigint::BigInt>("1/2*x") {
            Err(AlgebraError::Parse { col, .. }) => assert_eq!(col, 1),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn rational_literals_in_rational_domain() {
        let q: QPoly = parse_poly("1/2*h - 3/4").unwrap();
        assert_eq!(q.to_string(), "1/2*h - 3/4");
    }
}
