//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | ident | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Juxtaposition is accepted only around parentheses, as in `x(x+y)` or
//! `(x+y)(x-y)`; `8x` is a syntax error. Whitespace is ignored.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer;

impl Lexer {
    fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
        let bytes = text.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let start = i;
            match c {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    i += 1;
                    continue;
                }
                b'+' => out.push((Tok::Plus, i)),
                b'-' => out.push((Tok::Minus, i)),
                b'*' => out.push((Tok::Star, i)),
                b'/' => out.push((Tok::Slash, i)),
                b'^' => out.push((Tok::Caret, i)),
                b'(' => out.push((Tok::LParen, i)),
                b')' => out.push((Tok::RParen, i)),
                b'0'..=b'9' => {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let v: BigInt = text[start..i].parse().expect("digits");
                    out.push((Tok::Int(v), start));
                    continue;
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    out.push((Tok::Ident(text[start..i].to_string()), start));
                    continue;
                }
                _ => {
                    return Err(Error::Syntax {
                        pos: i,
                        msg: format!("unexpected character `{}`", text[i..].chars().next().unwrap()),
                    })
                }
            }
            i += 1;
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let (mut acc, mut parenthesized) = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let (f, p) = self.factor()?;
                    acc = &acc * &f;
                    parenthesized = p;
                }
                Some(Tok::LParen) => {
                    let (f, p) = self.factor()?;
                    acc = &acc * &f;
                    parenthesized = p;
                }
                Some(Tok::Ident(_)) | Some(Tok::Int(_)) if parenthesized => {
                    let (f, p) = self.factor()?;
                    acc = &acc * &f;
                    parenthesized = p;
                }
                Some(Tok::Ident(_)) | Some(Tok::Int(_)) => {
                    return self.err("missing `*` between factors")
                }
                _ => return Ok(acc),
            }
        }
    }

    /// Returns the factor and whether its base was a parenthesized group.
    fn factor(&mut self) -> Result<(Polynomial, bool)> {
        let (base, parenthesized) = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(v)) => {
                    let e: u32 = match u32::try_from(&v) {
                        Ok(e) if e <= 10_000 => e,
                        _ => return self.err("exponent too large"),
                    };
                    self.pos += 1;
                    return Ok((base.pow(e), parenthesized));
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok((base, parenthesized))
    }

    fn base(&mut self) -> Result<(Polynomial, bool)> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut value = Rational::from_bigint(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            value = &value / &Rational::from_bigint(d);
                        }
                        Some(Tok::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected an unsigned integer denominator"),
                    }
                }
                Ok((Polynomial::constant(self.ring, value), false))
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok((Polynomial::var(self.ring, i), false))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok((inner, true))
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = Lexer::tokenize(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn ring(v: &str) -> Ring {
        Ring::from_list(v).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = ring("x,y");
        assert!(parse_polynomial("x*y - y*x", &r).unwrap().is_zero());
    }

    /// Oracle: distribute the six factors of `xy(x+z)(x^2+yz)(z+yt)` by
    /// hand, one factor at a time.
    #[test]
    fn expands_the_four_factor_product() {
        let r = ring("x,y,z,t");
        let f = parse_polynomial("x*y*(x+z)*(x^2+y*z)*(z+y*t)", &r).unwrap();
        // xy(x+z) = x^2y + xyz
        // (x^2y + xyz)(x^2 + yz) = x^4y + x^2y^2z + x^3yz + xy^2z^2
        // times (z + yt):
        let expected = [
            "x^4*y*z", "x^2*y^2*z^2", "x^3*y*z^2", "x*y^2*z^3",
            "x^4*y^2*t", "x^2*y^3*z*t", "x^3*y^2*z*t", "x*y^3*z^2*t",
        ];
        assert_eq!(f.len(), 8);
        let sum = expected
            .iter()
            .map(|s| parse_polynomial(s, &r).unwrap())
            .fold(Polynomial::zero(&r), |a, b| &a + &b);
        assert_eq!(f, sum);
        assert_eq!(f.total_degree(), Some(7));
        // juxtaposition around parentheses gives the same polynomial
        assert_eq!(parse_polynomial("x*y(x+z)(x^2+y*z)(z+y*t)", &r).unwrap(), f);
    }

    #[test]
    fn plane_curve() {
        let r = ring("x,y");
        let f = parse_polynomial("x^4+y^5+y^4x", &r);
        // `y^4x` is juxtaposition without parentheses
        assert!(matches!(f, Err(Error::Syntax { .. })));
        let f = parse_polynomial("x^4+y^5+y^4*x", &r).unwrap();
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring("x,y");
        assert_eq!(
            parse_polynomial("x + * y", &r),
            Err(Error::Syntax {
                pos: 4,
                msg: "unexpected token Star".into()
            })
        );
        assert_eq!(
            parse_polynomial("x + w", &r),
            Err(Error::UnknownVariable("w".into()))
        );
        assert!(matches!(parse_polynomial("(x+y", &r), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_polynomial("8x", &r), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_polynomial("1/0", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x $ y", &r), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn rationals_and_names() {
        let r = ring("x1,x2,t");
        let f = parse_polynomial("-3/6*x1^2 + x2*t - 2", &r).unwrap();
        assert_eq!(f.leading_coefficient(), Some(&Rational::new(-1, 2)));
        assert_eq!(f.constant_term(), Rational::from_int(-2));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let r = ring("x,y,z");
        proptest::collection::vec(((0u16..4, 0u16..4, 0u16..4), -20i64..20, 1i64..6), 0..7).prop_map(
            move |terms| {
                Polynomial::from_terms(
                    &r,
                    terms.into_iter().map(|((a, b, c), n, d)| {
                        (super::super::Monomial::from_exponents(&[a, b, c]), Rational::new(n, d))
                    }),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn parse_format_roundtrip(f in arb_poly()) {
            let back = parse_polynomial(&f.to_string(), f.ring()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
