//! Shared literal grammar for scalars, polynomials, UD words and octonion
//! expressions:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' ['-'] INT)?
//! atom  := INT | 'zeta' '(' INT ')' | IDENT | '(' expr ')'
//! ```
//!
//! Parenthesized groups are kept in the tree so that consumers which care
//! about explicit grouping (non-associative products) can insist on it.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polymat::MultiPoly;
use crate::scalars::CycloNum;

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Int(BigInt),
    Zeta(u32),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Group(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    /// Byte offset of the node's first token in the source.
    pub pos: usize,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(Error::parse(
                p.pos,
                format!("unexpected '{}'", p.src[p.pos] as char),
            ));
        }
        Ok(e)
    }

    /// Strips redundant grouping.
    pub fn ungrouped(&self) -> &Expr {
        match &self.kind {
            ExprKind::Group(inner) => inner.ungrouped(),
            _ => self,
        }
    }

    /// Evaluates a variable-free expression to an exact scalar.
    pub fn to_scalar(&self) -> Result<CycloNum> {
        Ok(match &self.kind {
            ExprKind::Int(n) => CycloNum::from_bigint(n.clone()),
            ExprKind::Zeta(n) => CycloNum::zeta(*n, 1),
            ExprKind::Var(v) => {
                return Err(Error::parse(
                    self.pos,
                    format!("unexpected identifier '{v}' in scalar literal"),
                ))
            }
            ExprKind::Neg(a) => -a.to_scalar()?,
            ExprKind::Add(a, b) => a.to_scalar()? + b.to_scalar()?,
            ExprKind::Sub(a, b) => a.to_scalar()? - b.to_scalar()?,
            ExprKind::Mul(a, b) => a.to_scalar()? * b.to_scalar()?,
            ExprKind::Div(a, b) => {
                let d = b.to_scalar()?;
                a.to_scalar()?
                    .checked_div(&d)
                    .map_err(|_| Error::parse(b.pos, "division by zero"))?
            }
            ExprKind::Pow(a, e) => a
                .to_scalar()?
                .pow(*e)
                .map_err(|_| Error::parse(self.pos, "zero raised to a negative power"))?,
            ExprKind::Group(a) => a.to_scalar()?,
        })
    }

    /// Evaluates to a commutative polynomial; identifiers become variables.
    /// Division and negative powers are allowed only for constants.
    pub fn to_poly(&self) -> Result<MultiPoly> {
        Ok(match &self.kind {
            ExprKind::Int(_) | ExprKind::Zeta(_) => MultiPoly::constant(self.to_scalar()?),
            ExprKind::Var(v) => MultiPoly::var(v),
            ExprKind::Neg(a) => -&a.to_poly()?,
            ExprKind::Add(a, b) => &a.to_poly()? + &b.to_poly()?,
            ExprKind::Sub(a, b) => &a.to_poly()? - &b.to_poly()?,
            ExprKind::Mul(a, b) => &a.to_poly()? * &b.to_poly()?,
            ExprKind::Div(a, b) => {
                let d = b.to_poly()?;
                let c = d
                    .as_constant()
                    .ok_or_else(|| Error::parse(b.pos, "polynomial division by a non-constant"))?;
                let inv = c
                    .inverse()
                    .map_err(|_| Error::parse(b.pos, "division by zero"))?;
                a.to_poly()?.scale(&inv)
            }
            ExprKind::Pow(a, e) => {
                let base = a.to_poly()?;
                if *e < 0 {
                    let c = base.as_constant().ok_or_else(|| {
                        Error::parse(self.pos, "negative power of a non-constant polynomial")
                    })?;
                    let v = c
                        .pow(*e)
                        .map_err(|_| Error::parse(self.pos, "zero raised to a negative power"))?;
                    MultiPoly::constant(v)
                } else {
                    base.pow(*e as u64)
                }
            }
            ExprKind::Group(a) => a.to_poly()?,
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(Error::parse(
                self.pos,
                format!("expected '{}', found '{}'", c as char, x as char),
            )),
            None => Err(Error::parse(
                self.pos,
                format!("expected '{}', found end of input", c as char),
            )),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            let pos = self.pos;
            self.pos += 1;
            let rhs = self.term()?;
            let kind = if c == b'+' {
                ExprKind::Add(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Sub(Box::new(lhs), Box::new(rhs))
            };
            lhs = Expr { kind, pos };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let pos = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            let kind = if c == b'*' {
                ExprKind::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Div(Box::new(lhs), Box::new(rhs))
            };
            lhs = Expr { kind, pos };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            let pos = self.pos;
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            let pos = self.pos;
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let digits_at = self.pos;
            let n = self.integer()?;
            let e: i64 = n
                .try_into()
                .map_err(|_| Error::parse(digits_at, "exponent too large"))?;
            return Ok(Expr {
                kind: ExprKind::Pow(Box::new(base), if neg { -e } else { e }),
                pos,
            });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.src.get(start) {
                Some(&c) => Error::parse(start, format!("expected integer, found '{}'", c as char)),
                None => Error::parse(start, "expected integer, found end of input"),
            });
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Expr> {
        let Some(c) = self.peek() else {
            return Err(Error::parse(self.pos, "unexpected end of input"));
        };
        let pos = self.pos;
        if c.is_ascii_digit() {
            let n = self.integer()?;
            return Ok(Expr {
                kind: ExprKind::Int(n),
                pos,
            });
        }
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            self.expect(b')')?;
            return Ok(Expr {
                kind: ExprKind::Group(Box::new(inner)),
                pos,
            });
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[pos..self.pos]).expect("ascii identifier");
            if name == "zeta" {
                self.expect(b'(')?;
                let at = self.pos;
                let n = self.integer()?;
                self.expect(b')')?;
                let n: u32 = n
                    .try_into()
                    .ok()
                    .filter(|&n: &u32| n >= 1)
                    .ok_or_else(|| Error::parse(at, "zeta level must be a positive integer"))?;
                return Ok(Expr {
                    kind: ExprKind::Zeta(n),
                    pos,
                });
            }
            return Ok(Expr {
                kind: ExprKind::Var(name.to_string()),
                pos,
            });
        }
        Err(Error::parse(pos, format!("unexpected '{}'", c as char)))
    }
}

/// Parses a scalar literal such as `3/4 - zeta(5)^2`.
pub fn parse_scalar(src: &str) -> Result<CycloNum> {
    Expr::parse(src)?.to_scalar()
}

/// Parses a commutative polynomial such as `a^2 + 6*a*b + 3*b^2`.
pub fn parse_poly(src: &str) -> Result<MultiPoly> {
    Expr::parse(src)?.to_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1/2 + 1/2").unwrap(), CycloNum::one());
        assert_eq!(parse_scalar("zeta(4)^2").unwrap(), CycloNum::from_int(-1));
        assert_eq!(parse_scalar("-2^2").unwrap(), CycloNum::from_int(-4));
        assert_eq!(parse_scalar("2^-1 * 4").unwrap(), CycloNum::from_int(2));
        assert_eq!(
            parse_scalar("zeta(3) + zeta(3)^2").unwrap(),
            CycloNum::from_int(-1)
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_scalar("1 + x"),
            Err(Error::Parse {
                pos: 4,
                message: "unexpected identifier 'x' in scalar literal".into()
            })
        );
        match parse_poly("a + (b") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        match parse_poly("a + * b") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("zeta(0)").is_err());
        assert!(parse_poly("a / b").is_err());
    }

    #[test]
    fn polynomials() {
        let p = parse_poly("(a + b)^2 - a^2 - b^2").unwrap();
        assert_eq!(p, parse_poly("2*a*b").unwrap());
        assert_eq!(parse_poly("a/2 + a/2").unwrap(), MultiPoly::var("a"));
    }
}
