//! Recursive-descent parser for bivariate integer polynomials.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' exp)?
//! exp   := INT ('^' exp)?
//! atom  := INT | 'X' | 'Y' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::BiPoly;
use crate::error::{Error, Result};

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((pos, Tok::Int(s.parse().expect("digits parse"))));
                continue;
            }
            'x' | 'X' => Tok::X,
            'y' | 'Y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].1
    }

    fn pos(&self) -> usize {
        self.toks[self.i].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].1.clone();
        if t != Tok::End {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Int(_) | Tok::X | Tok::Y | Tok::LParen => {
                    return self.err("implicit multiplication is not allowed; use '*'")
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32> {
        let pos = self.pos();
        let Tok::Int(n) = self.peek().clone() else {
            return self.err("exponent must be a nonnegative integer literal");
        };
        self.bump();
        let mut e = n;
        if *self.peek() == Tok::Caret {
            self.bump();
            let rhs = self.exponent()?;
            e = num_traits::Pow::pow(&e, rhs);
        }
        match e.to_u32() {
            Some(v) if v <= MAX_EXPONENT => Ok(v),
            _ => Err(Error::Parse {
                pos,
                msg: format!("exponent exceeds {MAX_EXPONENT}"),
            }),
        }
    }

    fn atom(&mut self) -> Result<BiPoly> {
        match self.bump() {
            Tok::Int(n) => Ok(BiPoly::constant(n)),
            Tok::X => Ok(BiPoly::x()),
            Tok::Y => Ok(BiPoly::y()),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.bump() != Tok::RParen {
                    self.i -= 1;
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Tok::End => self.err("unexpected end of input"),
            t => {
                self.i -= 1;
                self.err(format!("unexpected token {t:?}"))
            }
        }
    }
}

/// Parse a polynomial in `X`, `Y` (case-insensitive) with integer coefficients.
pub fn parse_polynomial(text: &str) -> Result<BiPoly> {
    let mut p = Parser {
        toks: tokenize(text)?,
        i: 0,
    };
    if *p.peek() == Tok::End {
        return p.err("empty polynomial");
    }
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = parse_polynomial("X^2 + Y^2 - 1").unwrap();
        assert_eq!(
            p,
            BiPoly::from_i64_terms(&[((2, 0), 1), ((0, 2), 1), ((0, 0), -1)])
        );
        let p = parse_polynomial("-(X - Y)*(X + Y)").unwrap();
        assert_eq!(p, BiPoly::from_i64_terms(&[((2, 0), -1), ((0, 2), 1)]));
        assert!(matches!(
            parse_polynomial("X^Y"),
            Err(Error::Parse { pos: 2, .. })
        ));
    }

    #[test]
    fn precedence_and_errors() {
        assert_eq!(
            parse_polynomial("-x^2").unwrap(),
            BiPoly::from_i64_terms(&[((2, 0), -1)])
        );
        assert_eq!(parse_polynomial("2^3^2").unwrap(), BiPoly::constant(512));
        assert_eq!(
            parse_polynomial("  3 * y ").unwrap(),
            BiPoly::from_i64_terms(&[((0, 1), 3)])
        );
        assert!(matches!(
            parse_polynomial("2X"),
            Err(Error::Parse { pos: 1, .. })
        ));
        assert!(matches!(parse_polynomial("(X"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_polynomial("X + Z"),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(parse_polynomial(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("X^-1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "X^2 + Y^2 - 1",
            "-(X - Y)*(X + Y)",
            "7",
            "-3*x*y^4 + 12*X - 5",
            "0",
        ] {
            let p = parse_polynomial(s).unwrap();
            assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
        }
    }
}
