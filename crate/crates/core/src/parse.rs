//! Text grammar for polynomials.
//!
//! Identifiers, integer and rational literals (`3`, `-2/5`), operators
//! `+ - * ^` and parentheses. `/` only forms rational literals after an
//! integer; there is no general division. Implicit multiplication is not
//! accepted — write `x*y`, not `xy`.

use std::sync::Arc;

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::ring::PolyRing;

pub fn parse_poly(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    Parser::new(ring, text, 1, 1)?.parse_all()
}

/// Parse with an offset so diagnostics point into an enclosing file.
pub fn parse_poly_at(
    ring: &Arc<PolyRing>,
    text: &str,
    line: usize,
    col: usize,
) -> Result<Polynomial> {
    Parser::new(ring, text, line, col)?.parse_all()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Parser {
    ring: Arc<PolyRing>,
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(ring: &Arc<PolyRing>, text: &str, line0: usize, col0: usize) -> Result<Parser> {
        let mut toks = Vec::new();
        let mut line = line0;
        let mut col = col0;
        let mut chars = text.chars().peekable();
        while let Some(&c) = chars.peek() {
            let (tl, tc) = (line, col);
            let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>,
                            line: &mut usize,
                            col: &mut usize| {
                let c = chars.next().unwrap();
                if c == '\n' {
                    *line += 1;
                    *col = 1;
                } else {
                    *col += 1;
                }
                c
            };
            if c.is_whitespace() {
                bump(&mut chars, &mut line, &mut col);
                continue;
            }
            if c.is_ascii_digit() {
                let mut num = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        num.push(bump(&mut chars, &mut line, &mut col));
                    } else {
                        break;
                    }
                }
                let numerator: BigInt = num.parse().unwrap();
                let mut value = BigRational::from_integer(numerator);
                if chars.peek() == Some(&'/') {
                    bump(&mut chars, &mut line, &mut col);
                    let mut den = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            den.push(bump(&mut chars, &mut line, &mut col));
                        } else {
                            break;
                        }
                    }
                    if den.is_empty() {
                        return Err(Error::Parse {
                            line,
                            col,
                            msg: "expected denominator after `/`".into(),
                        });
                    }
                    let d: BigInt = den.parse().unwrap();
                    if d.is_zero() {
                        return Err(Error::Parse {
                            line,
                            col,
                            msg: "zero denominator".into(),
                        });
                    }
                    value /= BigRational::from_integer(d);
                }
                toks.push((Tok::Num(value), tl, tc));
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        id.push(bump(&mut chars, &mut line, &mut col));
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Ident(id), tl, tc));
                continue;
            }
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(Error::Parse {
                        line,
                        col,
                        msg: format!("unexpected character `{other}`"),
                    })
                }
            };
            bump(&mut chars, &mut line, &mut col);
            toks.push((tok, tl, tc));
        }
        Ok(Parser { ring: ring.clone(), toks, pos: 0, end: (line, col) })
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse { line, col, msg: msg.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_all(&mut self) -> Result<Polynomial> {
        if self.toks.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let p = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while matches!(self.peek(), Some(Tok::Plus) | Some(Tok::Minus)) {
            if let Some(Tok::Minus) = self.next() {
                negate = !negate;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.next();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            match self.next() {
                Some(Tok::Num(q)) => {
                    if !q.is_integer() || q < BigRational::zero() {
                        return Err(self.err("exponent must be a non-negative integer"));
                    }
                    let e: u32 = q.to_integer().try_into().map_err(|_| {
                        self.err("exponent too large")
                    })?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            negate = !negate;
        }
        let p = match self.next() {
            Some(Tok::Num(q)) => Polynomial::constant(&self.ring, q),
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Polynomial::var(&self.ring, i),
                None => {
                    self.pos -= 1;
                    return Err(self.err(format!("unknown variable `{name}`")));
                }
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => inner,
                    _ => return Err(self.err("expected `)`")),
                }
            }
            _ => return Err(self.err("expected a number, variable or `(`")),
        };
        Ok(if negate { -&p } else { p })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_round_trip() {
        let r = PolyRing::with_param(vec!["x", "y", "z"]).unwrap();
        for s in [
            "x*y - t*z",
            "y*(x^3 - y^2) - t*z",
            "x^2 + 2*x*y + y^2",
            "-2/5*x + 1",
            "x^3 - y^2",
        ] {
            let p = parse_poly(&r, s).unwrap();
            let q = parse_poly(&r, &p.to_string()).unwrap();
            assert_eq!(p, q, "round trip failed for {s}");
        }
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = PolyRing::new(vec!["x"]).unwrap();
        let e = parse_poly(&r, "x + w").unwrap_err();
        assert!(e.to_string().contains("unknown variable"), "{e}");
    }

    #[test]
    fn reports_position() {
        let r = PolyRing::new(vec!["x"]).unwrap();
        match parse_poly(&r, "x +\n+ %") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
