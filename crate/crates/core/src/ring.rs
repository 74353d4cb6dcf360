//! Commutative rings with 1, chosen at runtime, and their elements.
//!
//! Four kinds are provided: the integers, the rationals, the integers modulo
//! n (composite n is allowed, so zero divisors exist), and polynomial rings
//! over any of the above. Polynomial rings nest; a tower like
//! `ZZ[T1..T15][x,y,z]` is how symbolic coefficients are modelled.
//!
//! The contract deliberately has no division: everything downstream
//! (Pfaffians, determinants, verification) is division-free and therefore
//! valid over an arbitrary commutative ring with 1. Integer arithmetic is
//! arbitrary precision throughout.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::text;

/// A commutative ring with 1. The ring value itself carries the arithmetic;
/// elements are passive data tagged by variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Integers,
    Rationals,
    /// Integers modulo `n`, `n >= 2`. `n` may be composite.
    Modular(u64),
    Polynomial(PolyRing),
}

/// A polynomial ring `base[v1, ..., vk]`. Cheap to clone.
#[derive(Clone, Debug)]
pub struct PolyRing(Arc<PolyRingData>);

#[derive(Debug, PartialEq, Eq)]
struct PolyRingData {
    base: Ring,
    vars: Vec<String>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

/// An element of some [`Ring`]. Always kept in canonical form: modular
/// values reduced to `[0, n)`, rationals fully reduced with positive
/// denominator, polynomials with zero coefficients stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    Poly(MultiPoly),
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn integers() -> Ring {
        Ring::Integers
    }

    pub fn rationals() -> Ring {
        Ring::Rationals
    }

    pub fn modular(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidRing(format!(
                "modulus must be at least 2, got {n}"
            )));
        }
        Ok(Ring::Modular(n))
    }

    /// Builds `base[vars...]`. Variable names must be nonempty identifiers,
    /// pairwise distinct, and disjoint from every level of `base`.
    pub fn polynomial<S: Into<String>>(
        base: Ring,
        vars: impl IntoIterator<Item = S>,
    ) -> Result<Ring> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing(
                "polynomial ring needs at least one variable".into(),
            ));
        }
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!(
                    "variable name {v:?} is not a valid identifier"
                )));
            }
        }
        for (k, v) in vars.iter().enumerate() {
            if vars[..k].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable name {v:?}")));
            }
            if base.tower_vars().contains(&v.as_str()) {
                return Err(Error::InvalidRing(format!(
                    "variable {v:?} collides with a variable of the coefficient ring"
                )));
            }
        }
        Ok(Ring::Polynomial(PolyRing(Arc::new(PolyRingData {
            base,
            vars,
        }))))
    }

    /// All variable names in the polynomial tower, innermost last.
    pub fn tower_vars(&self) -> Vec<&str> {
        match self {
            Ring::Polynomial(p) => {
                let mut out: Vec<&str> = p.vars().iter().map(String::as_str).collect();
                out.extend(p.base().tower_vars());
                out
            }
            _ => Vec::new(),
        }
    }

    pub fn as_poly(&self) -> Option<&PolyRing> {
        match self {
            Ring::Polynomial(p) => Some(p),
            _ => None,
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            Ring::Integers => Element::Int(BigInt::zero()),
            Ring::Rationals => Element::Rat(BigRational::zero()),
            Ring::Modular(_) => Element::Mod(0),
            Ring::Polynomial(p) => Element::Poly(MultiPoly::zero(p.clone())),
        }
    }

    pub fn one(&self) -> Element {
        self.embed_int(1)
    }

    /// The canonical image of an integer in this ring; a ring homomorphism.
    pub fn embed_int(&self, n: impl Into<BigInt>) -> Element {
        let n = n.into();
        match self {
            Ring::Integers => Element::Int(n),
            Ring::Rationals => Element::Rat(BigRational::from_integer(n)),
            Ring::Modular(m) => {
                let r = n.mod_floor(&BigInt::from(*m));
                Element::Mod(u64::try_from(r).expect("mod_floor result fits the modulus"))
            }
            Ring::Polynomial(p) => Element::Poly(p.constant(p.base().embed_int(n))),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (Ring::Integers, Element::Int(x), Element::Int(y)) => Element::Int(x + y),
            (Ring::Rationals, Element::Rat(x), Element::Rat(y)) => Element::Rat(x + y),
            (Ring::Modular(n), Element::Mod(x), Element::Mod(y)) => {
                Element::Mod(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            (Ring::Polynomial(_), Element::Poly(x), Element::Poly(y)) => Element::Poly(
                x.add(y)
                    .unwrap_or_else(|e| panic!("add on mismatched polynomial rings: {e}")),
            ),
            _ => panic!("element does not belong to ring {self}"),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        match (self, a) {
            (Ring::Integers, Element::Int(x)) => Element::Int(-x),
            (Ring::Rationals, Element::Rat(x)) => Element::Rat(-x),
            (Ring::Modular(n), Element::Mod(x)) => Element::Mod(if *x == 0 { 0 } else { n - x }),
            (Ring::Polynomial(_), Element::Poly(x)) => Element::Poly(x.neg()),
            _ => panic!("element does not belong to ring {self}"),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (Ring::Integers, Element::Int(x), Element::Int(y)) => Element::Int(x * y),
            (Ring::Rationals, Element::Rat(x), Element::Rat(y)) => Element::Rat(x * y),
            (Ring::Modular(n), Element::Mod(x), Element::Mod(y)) => {
                Element::Mod(((*x as u128 * *y as u128) % *n as u128) as u64)
            }
            (Ring::Polynomial(_), Element::Poly(x), Element::Poly(y)) => Element::Poly(
                x.mul(y)
                    .unwrap_or_else(|e| panic!("mul on mismatched polynomial rings: {e}")),
            ),
            _ => panic!("element does not belong to ring {self}"),
        }
    }

    pub fn pow(&self, a: &Element, mut exp: u32) -> Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        match a {
            Element::Int(x) => x.is_zero(),
            Element::Rat(x) => x.is_zero(),
            Element::Mod(x) => *x == 0,
            Element::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Element) -> bool {
        *a == self.one()
    }

    /// Shallow membership check: variant, modular range, polynomial ambient.
    pub fn contains(&self, a: &Element) -> bool {
        match (self, a) {
            (Ring::Integers, Element::Int(_)) => true,
            (Ring::Rationals, Element::Rat(_)) => true,
            (Ring::Modular(n), Element::Mod(x)) => x < n,
            (Ring::Polynomial(p), Element::Poly(q)) => q.ring() == p,
            _ => false,
        }
    }

    /// Re-normalizes an element; a fixed point on anything produced by this
    /// crate, since all constructors already canonicalize.
    pub fn canonicalize(&self, a: &Element) -> Element {
        match (self, a) {
            (Ring::Integers, Element::Int(x)) => Element::Int(x.clone()),
            (Ring::Rationals, Element::Rat(x)) => {
                Element::Rat(BigRational::new(x.numer().clone(), x.denom().clone()))
            }
            (Ring::Modular(n), Element::Mod(x)) => Element::Mod(x % n),
            (Ring::Polynomial(p), Element::Poly(q)) => {
                let terms = q
                    .terms()
                    .map(|(m, c)| (m.clone(), p.base().canonicalize(c)))
                    .collect::<Vec<_>>();
                Element::Poly(MultiPoly::from_terms(p.clone(), terms).expect("arity preserved"))
            }
            _ => panic!("element does not belong to ring {self}"),
        }
    }

    /// Parses an element in this ring's text syntax.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        text::parse_element(self, s)
    }

    /// Canonical text form of an element; inverse of [`Ring::parse_element`].
    pub fn format_element(&self, a: &Element) -> String {
        text::format_element(self, a, text::Style::Plain)
    }

    /// Short token used by CLI flags and JSON documents. Polynomial rings
    /// have no token here; the symbolic coefficient rings are tokenized as
    /// `sym` at the document layer, where the degree is known.
    pub fn token(&self) -> Option<String> {
        match self {
            Ring::Integers => Some("int".into()),
            Ring::Rationals => Some("rat".into()),
            Ring::Modular(n) => Some(format!("mod:{n}")),
            Ring::Polynomial(_) => None,
        }
    }

    /// Parses `int`, `rat`, or `mod:n`.
    pub fn parse_token(s: &str) -> Result<Ring> {
        match s {
            "int" => Ok(Ring::Integers),
            "rat" => Ok(Ring::Rationals),
            _ => {
                if let Some(n) = s.strip_prefix("mod:") {
                    let n: u64 = n.parse().map_err(|_| {
                        Error::InvalidRing(format!("bad modulus in ring token {s:?}"))
                    })?;
                    Ring::modular(n)
                } else {
                    Err(Error::InvalidRing(format!(
                        "unknown ring token {s:?} (expected int, rat, or mod:n)"
                    )))
                }
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "ZZ"),
            Ring::Rationals => write!(f, "QQ"),
            Ring::Modular(n) => write!(f, "ZZ/{n}"),
            Ring::Polynomial(p) => write!(f, "{}[{}]", p.base(), p.vars().join(",")),
        }
    }
}

impl PolyRing {
    pub fn base(&self) -> &Ring {
        &self.0.base
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn as_ring(&self) -> Ring {
        Ring::Polynomial(self.clone())
    }

    /// The `idx`-th variable of this level as a polynomial.
    pub fn indeterminate(&self, idx: usize) -> MultiPoly {
        MultiPoly::indeterminate(self.clone(), idx)
    }

    /// A base-ring element as a constant polynomial.
    pub fn constant(&self, c: Element) -> MultiPoly {
        MultiPoly::constant(self.clone(), c)
    }

    /// Resolves a variable name anywhere in the tower to an element of this
    /// ring; inner variables come back as constants of the outer levels.
    pub fn resolve_var(&self, name: &str) -> Option<MultiPoly> {
        if let Some(idx) = self.var_index(name) {
            return Some(self.indeterminate(idx));
        }
        match self.base() {
            Ring::Polynomial(inner) => inner
                .resolve_var(name)
                .map(|p| self.constant(Element::Poly(p))),
            _ => None,
        }
    }
}
