//! Sparse multivariate polynomials over an arbitrary coefficient ring.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector under the graded
//! lexicographic order (total degree first, then lex with earlier variables
//! more significant), so iteration order and printing are deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{Element, PolyRing};
use crate::text;

/// An exponent vector, one slot per ambient variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    /// The monomial 1.
    pub fn unit(arity: usize) -> Monomial {
        Monomial(vec![0; arity])
    }

    /// `var_idx` raised to `exp`, all other exponents zero.
    pub fn var(arity: usize, var_idx: usize, exp: u32) -> Monomial {
        let mut e = vec![0; arity];
        e[var_idx] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial in canonical form: no stored coefficient is zero and
/// the zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Element>,
}

impl MultiPoly {
    pub fn zero(ring: PolyRing) -> MultiPoly {
        MultiPoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: PolyRing, c: Element) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !ring.base().is_zero(&c) {
            terms.insert(Monomial::unit(ring.nvars()), c);
        }
        MultiPoly { ring, terms }
    }

    pub fn indeterminate(ring: PolyRing, var_idx: usize) -> MultiPoly {
        assert!(var_idx < ring.nvars(), "variable index out of range");
        let one = ring.base().one();
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.nvars(), var_idx, 1), one);
        MultiPoly { ring, terms }
    }

    /// Builds from a term list; duplicate monomials combine by addition and
    /// zero coefficients are stripped.
    pub fn from_terms(
        ring: PolyRing,
        terms: impl IntoIterator<Item = (Monomial, Element)>,
    ) -> Result<MultiPoly> {
        let mut map: BTreeMap<Monomial, Element> = BTreeMap::new();
        let base = ring.base().clone();
        for (m, c) in terms {
            if m.arity() != ring.nvars() {
                return Err(Error::ShapeError(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    m.arity(),
                    ring.nvars()
                )));
            }
            assert!(
                base.contains(&c),
                "coefficient does not belong to the base ring {base}"
            );
            let combined = match map.remove(&m) {
                Some(prev) => base.add(&prev, &c),
                None => c,
            };
            if !base.is_zero(&combined) {
                map.insert(m, combined);
            }
        }
        Ok(MultiPoly { ring, terms: map })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order; reverse for the canonical
    /// (leading-first) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Element)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> Element {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.base().zero())
    }

    fn require_same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "operands live in {} and {}",
                self.ring.as_ring(),
                other.ring.as_ring()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.require_same_ring(other)?;
        let base = self.ring.base();
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.remove(m) {
                Some(prev) => {
                    let s = base.add(&prev, c);
                    if !base.is_zero(&s) {
                        terms.insert(m.clone(), s);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> MultiPoly {
        let base = self.ring.base();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), base.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.require_same_ring(other)?;
        let base = self.ring.base();
        let mut terms: BTreeMap<Monomial, Element> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = base.mul(ca, cb);
                match terms.remove(&m) {
                    Some(prev) => {
                        let s = base.add(&prev, &c);
                        if !base.is_zero(&s) {
                            terms.insert(m, s);
                        }
                    }
                    None => {
                        if !base.is_zero(&c) {
                            terms.insert(m, c);
                        }
                    }
                }
            }
        }
        Ok(MultiPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Maximum total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// True iff every term has total degree `d`. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    /// Exact substitution of base-ring values for the variables.
    pub fn evaluate(&self, point: &[Element]) -> Result<Element> {
        if point.len() != self.ring.nvars() {
            return Err(Error::ShapeError(format!(
                "evaluation point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let base = self.ring.base();
        let mut acc = base.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term = base.mul(&term, &base.pow(v, e));
                }
            }
            acc = base.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Parses the plain-text grammar; see [`crate::text`].
    pub fn parse(ring: &PolyRing, input: &str) -> Result<MultiPoly> {
        text::parse_poly(ring, input)
    }

    pub fn format(&self, style: text::Style) -> String {
        text::format_poly(self, style)
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format(text::Style::Plain))
    }
}
