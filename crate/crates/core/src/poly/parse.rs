//! Text form of polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)? | '(' expr ')'
//! coeff  := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant and multiplication must be explicit: `2x0` is
//! rejected. A leading minus is accepted so that printed output parses back.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::Poly;
use super::ring::RingRef;
use super::PolyError;

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

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(syntax(i, "implicit multiplication is not allowed; use '*'"));
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => return Err(syntax(i, &format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

fn syntax(pos: usize, msg: &str) -> PolyError {
    PolyError::Syntax {
        pos,
        msg: msg.to_string(),
    }
}

struct Parser<'a, K: Field> {
    ring: &'a RingRef,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    _k: std::marker::PhantomData<K>,
}

impl<'a, K: Field> Parser<'a, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly<K>, PolyError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = true;
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<K>, PolyError> {
        let mut acc = match self.peek() {
            Some(Tok::Int(_)) => self.coeff()?,
            _ => self.factor()?,
        };
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn coeff(&mut self) -> Result<Poly<K>, PolyError> {
        let Some(Tok::Int(num)) = self.bump() else {
            unreachable!("caller checked for an integer")
        };
        let mut den = BigInt::one();
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Some(Tok::Int(d)) if !d.is_zero() => den = d,
                Some(Tok::Int(_)) => return Err(syntax(at, "zero denominator")),
                _ => return Err(syntax(at, "expected denominator")),
            }
        }
        let c = K::from_ratio(&num, &den)
            .ok_or_else(|| syntax(self.offset(), "denominator vanishes in coefficient field"))?;
        Ok(Poly::constant(self.ring, c))
    }

    fn factor(&mut self) -> Result<Poly<K>, PolyError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Ident(name)) => {
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or(PolyError::UnknownVariable { name, pos: at })?;
                let mut exp = 1u32;
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    let at = self.offset();
                    match self.bump() {
                        Some(Tok::Int(e)) => {
                            exp = u32::try_from(&e)
                                .ok()
                                .filter(|&e| e <= super::monomial::MAX_EXPONENT)
                                .ok_or(PolyError::ExponentOverflow)?;
                        }
                        _ => return Err(syntax(at, "expected exponent")),
                    }
                }
                Ok(Poly::monomial(
                    self.ring,
                    Monomial::var(self.ring.nvars(), idx, exp as u16),
                    K::one(),
                ))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(at, "unbalanced parenthesis")),
                }
            }
            Some(Tok::Int(_)) => Err(syntax(at, "coefficient must come first in a term")),
            Some(_) => Err(syntax(at, "expected variable or '('")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parse `text` as a polynomial in `ring`.
pub fn parse<K: Field>(ring: &RingRef, text: &str) -> Result<Poly<K>, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
        _k: std::marker::PhantomData,
    };
    let f = p.expr()?;
    if p.pos < p.toks.len() {
        let at = p.offset();
        return Err(syntax(at, "unexpected trailing input"));
    }
    Ok(f)
}

/// Parse a comma-separated list of polynomials (commas inside parentheses are not allowed
/// by the grammar anyway).
pub fn parse_list<K: Field>(ring: &RingRef, text: &str) -> Result<Vec<Poly<K>>, PolyError> {
    text.split([',', '\n', ';'])
        .map(str::trim)
        .filter(|s| !s.is_empty() && !s.starts_with('#'))
        .map(|s| parse(ring, s))
        .collect()
}

pub(crate) fn format_poly<K: Field>(f: &Poly<K>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let vars = f.ring().vars();
    let mut out = String::new();
    for (i, (m, c)) in f.terms().iter().enumerate() {
        let negative = c.prints_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors: Vec<String> = Vec::new();
        if !magnitude.is_one() || m.is_one() {
            factors.push(magnitude.to_text());
        }
        for (v, e) in m.exponents().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[v].clone()),
                _ => factors.push(format!("{}^{}", vars[v], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{int, PrimeField, Rational};
    use crate::poly::Ring;

    fn r() -> RingRef {
        Ring::projective3()
    }

    #[test]
    fn parses_quadric() {
        let s: Poly = parse(&r(), "49*x1^2 + x2^2 - 36*x3^2 - 14*x0^2").unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_string(), "-14*x0^2 + 49*x1^2 + x2^2 - 36*x3^2");
    }

    #[test]
    fn zero_and_constants() {
        let z: Poly = parse(&r(), "0").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        let c: Poly = parse(&r(), "-3/6").unwrap();
        assert_eq!(c.constant_term(), Rational::new((-1).into(), 2.into()));
        assert_eq!(c.to_string(), "-1/2");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse::<Rational>(&r(), "x0*(x0 - 1").unwrap_err();
        assert!(matches!(e, PolyError::Syntax { pos: 3, .. }), "{e:?}");
        let e = parse::<Rational>(&r(), "2x0").unwrap_err();
        assert!(matches!(e, PolyError::Syntax { pos: 1, .. }), "{e:?}");
        let e = parse::<Rational>(&r(), "x0 + y7").unwrap_err();
        assert!(matches!(e, PolyError::UnknownVariable { pos: 5, .. }), "{e:?}");
        assert!(parse::<Rational>(&r(), "x0 +").is_err());
        assert!(parse::<Rational>(&r(), "x0 x1").is_err());
        assert!(parse::<Rational>(&r(), "").is_err());
        assert!(parse::<Rational>(&r(), "x0*3").is_err());
        assert!(parse::<Rational>(&r(), "1/0").is_err());
    }

    #[test]
    fn nested_parentheses() {
        let f: Poly = parse(&r(), "(x0 + x1)*(x0 - (x1 - 2))").unwrap();
        let g: Poly = parse(&r(), "x0^2 + 2*x0 - x1^2 + 2*x1").unwrap();
        assert_eq!(f, g);
        let h: Poly = parse(&r(), "-(x0 - 1)").unwrap();
        assert_eq!(h.to_string(), "-x0 + 1");
    }

    #[test]
    fn prime_field_parsing() {
        type F5 = PrimeField<5>;
        let f: Poly<F5> = parse(&r(), "7*x0 + 1/2").unwrap();
        assert_eq!(f.to_string(), "2*x0 + 3");
        assert!(parse::<F5>(&r(), "1/5").is_err());
        let _ = int(0);
    }

    #[test]
    fn list_parsing() {
        let gens: Vec<Poly> = parse_list(&r(), "x0, x1 - 1\n# comment\nx2").unwrap();
        assert_eq!(gens.len(), 3);
    }
}
