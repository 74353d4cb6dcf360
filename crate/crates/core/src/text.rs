//! Text syntax for ring elements and polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! polynomial  := sign? term (sign term)*
//! term        := coefficient ('*' factor)* | factor ('*' factor)*
//! factor      := variable ('^' positive-integer)?
//! coefficient := integer | integer '/' positive-integer
//! ```
//!
//! Variables may come from any level of a polynomial tower; over
//! `ZZ[T1..T15][x,y,z]` the text `T1*x^4` multiplies the inner symbol `T1`
//! into the coefficient of `x^4`. Printing distributes nested coefficients
//! into flat products for the same reason, so format -> parse is lossless.
//! Printing order is graded lexicographic, leading term first, with earlier
//! variables (x before y before z) more significant.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::ring::{Element, PolyRing, Ring};

/// Output flavor for [`format_poly`] and [`format_element`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Latex,
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum TokKind {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokKind,
    start: usize,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' | '-' | '*' | '/' | '^' => {
                let kind = match c {
                    '+' => TokKind::Plus,
                    '-' => TokKind::Minus,
                    '*' => TokKind::Star,
                    '/' => TokKind::Slash,
                    _ => TokKind::Caret,
                };
                toks.push(Token { kind, start: i });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push(Token {
                    kind: TokKind::Num(input[start..i].to_string()),
                    start,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push(Token {
                    kind: TokKind::Ident(input[start..i].to_string()),
                    start,
                });
            }
            _ => return Err(Error::parse(i, format!("unexpected character {c:?}"))),
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser<'a> {
    ring: &'a PolyRing,
    ambient: Ring,
    toks: Vec<Token>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&TokKind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.start)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_poly(&mut self) -> Result<MultiPoly> {
        if self.toks.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut acc = MultiPoly::zero(self.ring.clone());
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(TokKind::Plus) => {
                    self.bump();
                    false
                }
                Some(TokKind::Minus) => {
                    self.bump();
                    true
                }
                None if !first => break,
                Some(_) if first => false,
                None => return Err(Error::parse(self.end, "expected a term")),
                Some(_) => {
                    return Err(Error::parse(self.here(), "expected '+' or '-'"));
                }
            };
            first = false;
            let term = self.parse_term()?;
            let term = if negative { term.neg() } else { term };
            acc = acc.add(&term).expect("same ambient ring");
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<MultiPoly> {
        let mut term = match self.peek() {
            Some(TokKind::Num(_)) => self.parse_coefficient()?,
            Some(TokKind::Ident(_)) => self.parse_factor()?,
            _ => {
                return Err(Error::parse(
                    self.here(),
                    "expected a coefficient or a variable",
                ))
            }
        };
        while matches!(self.peek(), Some(TokKind::Star)) {
            self.bump();
            let f = self.parse_factor()?;
            term = term.mul(&f).expect("same ambient ring");
        }
        Ok(term)
    }

    fn parse_coefficient(&mut self) -> Result<MultiPoly> {
        let tok = self.bump().expect("caller peeked a number");
        let num = match tok.kind {
            TokKind::Num(s) => BigInt::from_str(&s).expect("lexer produced digits"),
            _ => unreachable!(),
        };
        if !matches!(self.peek(), Some(TokKind::Slash)) {
            return Ok(self.ring.constant(self.ring.base().embed_int(num)));
        }
        let slash = self.bump().unwrap();
        match self.bump() {
            Some(Token {
                kind: TokKind::Num(s),
                start: dstart,
            }) => {
                let den = BigInt::from_str(&s).expect("lexer produced digits");
                if den.is_zero() {
                    return Err(Error::parse(dstart, "denominator must be positive"));
                }
                let elem = embed_ratio(self.ring.base(), num, den).ok_or_else(|| {
                    Error::parse(
                        slash.start,
                        "rational coefficients need the rationals as base ring",
                    )
                })?;
                Ok(self.ring.constant(elem))
            }
            other => Err(Error::parse(
                other.map_or(self.end, |t| t.start),
                "expected a denominator",
            )),
        }
    }

    fn parse_factor(&mut self) -> Result<MultiPoly> {
        let tok = match self.bump() {
            Some(t) => t,
            None => return Err(Error::parse(self.end, "expected a variable")),
        };
        let name = match tok.kind {
            TokKind::Ident(s) => s,
            _ => return Err(Error::parse(tok.start, "expected a variable")),
        };
        let var = self
            .ring
            .resolve_var(&name)
            .ok_or_else(|| Error::parse(tok.start, format!("unknown variable {name:?}")))?;
        let exp = if matches!(self.peek(), Some(TokKind::Caret)) {
            self.bump();
            match self.bump() {
                Some(Token {
                    kind: TokKind::Num(s),
                    start,
                }) => {
                    let e: u32 = s
                        .parse()
                        .map_err(|_| Error::parse(start, "exponent too large"))?;
                    if e == 0 {
                        return Err(Error::parse(start, "exponent must be positive"));
                    }
                    e
                }
                other => {
                    return Err(Error::parse(
                        other.map_or(self.end, |t| t.start),
                        "expected a positive integer exponent",
                    ))
                }
            }
        } else {
            1
        };
        match self.ambient.pow(&Element::Poly(var), exp) {
            Element::Poly(p) => Ok(p),
            _ => unreachable!("power of a polynomial is a polynomial"),
        }
    }
}

/// Embeds `num/den` into a ring whose tower bottoms out at the rationals.
fn embed_ratio(ring: &Ring, num: BigInt, den: BigInt) -> Option<Element> {
    match ring {
        Ring::Rationals => Some(Element::Rat(BigRational::new(num, den))),
        Ring::Polynomial(p) => {
            let inner = embed_ratio(p.base(), num, den)?;
            Some(Element::Poly(p.constant(inner)))
        }
        _ => None,
    }
}

/// Parses the polynomial grammar over `ring`.
pub fn parse_poly(ring: &PolyRing, input: &str) -> Result<MultiPoly> {
    let toks = lex(input)?;
    let mut parser = Parser {
        ring,
        ambient: ring.as_ring(),
        toks,
        pos: 0,
        end: input.len(),
    };
    parser.parse_poly()
}

/// Parses an element in the text syntax of any ring kind.
pub fn parse_element(ring: &Ring, input: &str) -> Result<Element> {
    match ring {
        Ring::Polynomial(p) => parse_poly(p, input).map(Element::Poly),
        _ => {
            let s = input.trim();
            if s.is_empty() {
                return Err(Error::parse(0, "empty element"));
            }
            match ring {
                Ring::Integers => BigInt::from_str(s)
                    .map(Element::Int)
                    .map_err(|_| Error::parse(0, format!("invalid integer {s:?}"))),
                Ring::Rationals => {
                    let (num, den) = match s.split_once('/') {
                        Some((n, d)) => (n, Some(d)),
                        None => (s, None),
                    };
                    let num = BigInt::from_str(num.trim())
                        .map_err(|_| Error::parse(0, format!("invalid numerator {num:?}")))?;
                    let den = match den {
                        Some(d) => BigInt::from_str(d.trim())
                            .map_err(|_| Error::parse(0, format!("invalid denominator {d:?}")))?,
                        None => BigInt::one(),
                    };
                    if den.is_zero() {
                        return Err(Error::parse(0, "denominator must be positive"));
                    }
                    Ok(Element::Rat(BigRational::new(num, den)))
                }
                Ring::Modular(_) => {
                    let v = BigInt::from_str(s)
                        .map_err(|_| Error::parse(0, format!("invalid residue {s:?}")))?;
                    Ok(ring.embed_int(v))
                }
                Ring::Polynomial(_) => unreachable!(),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Printer

struct FlatTerm {
    scalar: Element,
    factors: Vec<(String, u32)>,
}

fn flat_terms(p: &MultiPoly, out: &mut Vec<FlatTerm>) {
    let vars = p.ring().vars();
    let terms: Vec<_> = p.terms().collect();
    for (mono, coeff) in terms.into_iter().rev() {
        let outer: Vec<(String, u32)> = vars
            .iter()
            .zip(mono.exponents())
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v.clone(), e))
            .collect();
        match coeff {
            Element::Poly(inner) => {
                let mut tmp = Vec::new();
                flat_terms(inner, &mut tmp);
                for mut t in tmp {
                    t.factors.extend(outer.iter().cloned());
                    out.push(t);
                }
            }
            scalar => out.push(FlatTerm {
                scalar: scalar.clone(),
                factors: outer,
            }),
        }
    }
}

/// Splits a bottom-level scalar into (is_negative, magnitude text).
fn scalar_text(e: &Element, style: Style) -> (bool, String) {
    match e {
        Element::Int(x) => (x.is_negative(), x.magnitude().to_string()),
        Element::Rat(x) => {
            let neg = x.numer().is_negative();
            let num = x.numer().magnitude();
            if x.denom().is_one() {
                (neg, num.to_string())
            } else {
                match style {
                    Style::Plain => (neg, format!("{}/{}", num, x.denom())),
                    Style::Latex => (neg, format!("\\frac{{{}}}{{{}}}", num, x.denom())),
                }
            }
        }
        Element::Mod(v) => (false, v.to_string()),
        Element::Poly(_) => unreachable!("flattening removes nested coefficients"),
    }
}

fn latex_var(name: &str) -> String {
    for (prefix, sym) in [("T", "\\Theta"), ("P", "\\Phi")] {
        if let Some(rest) = name.strip_prefix(prefix) {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                return format!("{sym}_{{{rest}}}");
            }
        }
    }
    name.to_string()
}

fn factor_text(name: &str, exp: u32, style: Style) -> String {
    match style {
        Style::Plain => {
            if exp == 1 {
                name.to_string()
            } else {
                format!("{name}^{exp}")
            }
        }
        Style::Latex => {
            let v = latex_var(name);
            if exp == 1 {
                v
            } else {
                format!("{v}^{{{exp}}}")
            }
        }
    }
}

/// Renders a polynomial; inverse of [`parse_poly`] for `Style::Plain`.
pub fn format_poly(p: &MultiPoly, style: Style) -> String {
    let mut flats = Vec::new();
    flat_terms(p, &mut flats);
    if flats.is_empty() {
        return "0".to_string();
    }
    let (mul_sep, sca_sep) = match style {
        Style::Plain => ("*", "*"),
        Style::Latex => (" ", " "),
    };
    let mut s = String::new();
    for (idx, t) in flats.iter().enumerate() {
        let (neg, abs) = scalar_text(&t.scalar, style);
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let factors = t
            .factors
            .iter()
            .map(|(n, e)| factor_text(n, *e, style))
            .collect::<Vec<_>>()
            .join(mul_sep);
        if t.factors.is_empty() {
            s.push_str(&abs);
        } else if abs == "1" {
            s.push_str(&factors);
        } else {
            s.push_str(&abs);
            s.push_str(sca_sep);
            s.push_str(&factors);
        }
    }
    s
}

/// Renders any ring element; inverse of [`parse_element`] for `Style::Plain`.
pub fn format_element(ring: &Ring, e: &Element, style: Style) -> String {
    match (ring, e) {
        (Ring::Polynomial(_), Element::Poly(p)) => format_poly(p, style),
        _ => {
            let (neg, abs) = scalar_text(e, style);
            if neg {
                format!("-{abs}")
            } else {
                abs
            }
        }
    }
}
