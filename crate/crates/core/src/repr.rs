//! Explicit linear Pfaffian representations of ternary forms, degrees 1-5.
//!
//! For each degree `d` there is a fixed layout of three `2d x 2d`
//! skew-symmetric matrices `A`, `B`, `C` whose entries are `0`, `+-1`, the
//! coefficients of the input form (in a fixed slot order), and — at degree 5
//! only — nine polynomial combinations of the coefficients. The pencil
//! `M = x*A + y*B + z*C` then satisfies `Pf(M) = f` identically in the
//! coefficients, so the same layout works over every commutative ring
//! with 1. [`verify`] recomputes `Pf(M)` from scratch and compares; nothing
//! downstream trusts the construction.
//!
//! Coefficient slots are numbered as in the tables returned by
//! [`slot_monomials`]; the generic (symbolic) coefficient rings name them
//! `T1..` for degrees up to 4 and `P1..P21` for degree 5.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pfaffian::SkewMatrix;
use crate::poly::{Monomial, MultiPoly};
use crate::ring::{Element, Ring};

/// The form variables, in significance order.
pub const FORM_VARS: [&str; 3] = ["x", "y", "z"];

/// Names of the degree-5 derived entries, in report order.
pub const DERIVED_NAMES: [&str; 9] = [
    "a23", "a29", "a39", "b23", "b29", "b39", "b68", "b69", "c23",
];

// ---------------------------------------------------------------------------
// Slot tables: slot k (1-based) <-> one monomial, as (x, y, z) exponents.

const SLOTS_D1: [[u32; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

const SLOTS_D2: [[u32; 3]; 6] = [
    [2, 0, 0],
    [0, 2, 0],
    [0, 0, 2],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
];

const SLOTS_D3: [[u32; 3]; 10] = [
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
    [1, 0, 2],
    [0, 2, 1],
    [0, 1, 2],
    [1, 1, 1],
];

const SLOTS_D4: [[u32; 3]; 15] = [
    [4, 0, 0],
    [0, 4, 0],
    [0, 0, 4],
    [3, 1, 0],
    [2, 2, 0],
    [1, 3, 0],
    [3, 0, 1],
    [2, 0, 2],
    [1, 0, 3],
    [0, 3, 1],
    [0, 2, 2],
    [0, 1, 3],
    [2, 1, 1],
    [1, 2, 1],
    [1, 1, 2],
];

const SLOTS_D5: [[u32; 3]; 21] = [
    [5, 0, 0],
    [0, 5, 0],
    [0, 0, 5],
    [4, 1, 0],
    [3, 2, 0],
    [2, 3, 0],
    [1, 4, 0],
    [4, 0, 1],
    [3, 0, 2],
    [2, 0, 3],
    [1, 0, 4],
    [0, 4, 1],
    [0, 3, 2],
    [0, 2, 3],
    [0, 1, 4],
    [3, 1, 1],
    [1, 3, 1],
    [1, 1, 3],
    [2, 2, 1],
    [2, 1, 2],
    [1, 2, 2],
];

/// The monomial table for a degree: slot `k` (1-based) carries the monomial
/// with exponents `slot_monomials(d)[k-1]`.
pub fn slot_monomials(degree: u32) -> Result<&'static [[u32; 3]]> {
    match degree {
        1 => Ok(&SLOTS_D1),
        2 => Ok(&SLOTS_D2),
        3 => Ok(&SLOTS_D3),
        4 => Ok(&SLOTS_D4),
        5 => Ok(&SLOTS_D5),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

/// Number of coefficient slots at each supported degree (3, 6, 10, 15, 21).
pub fn slot_count(degree: u32) -> Result<usize> {
    slot_monomials(degree).map(<[_]>::len)
}

/// Names of the symbolic coefficients: `T1..` below degree 5, `P1..P21`
/// at degree 5.
pub fn coeff_symbols(degree: u32) -> Result<Vec<String>> {
    let n = slot_count(degree)?;
    let prefix = if degree == 5 { "P" } else { "T" };
    Ok((1..=n).map(|k| format!("{prefix}{k}")).collect())
}

/// The generic coefficient ring `ZZ[T1..]` (resp. `ZZ[P1..P21]`), over which
/// one Pfaffian computation certifies the construction for every ring.
pub fn symbolic_coefficient_ring(degree: u32) -> Result<Ring> {
    Ring::polynomial(Ring::integers(), coeff_symbols(degree)?)
}

/// The ring `base[x,y,z]` that forms and pencil entries live in.
pub fn form_ring(base: Ring) -> Result<Ring> {
    Ring::polynomial(base, FORM_VARS)
}

// ---------------------------------------------------------------------------
// Coefficient vectors

/// The coefficients of a homogeneous ternary form, indexed by the slot
/// tables above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientVector {
    degree: u32,
    ring: Ring,
    slots: Vec<Element>,
}

impl CoefficientVector {
    pub fn new(ring: Ring, degree: u32, slots: Vec<Element>) -> Result<CoefficientVector> {
        let expected = slot_count(degree)?;
        if slots.len() != expected {
            return Err(Error::ShapeError(format!(
                "degree {degree} has {expected} coefficient slots, got {}",
                slots.len()
            )));
        }
        for s in &slots {
            if !ring.contains(s) {
                return Err(Error::RingMismatch(format!(
                    "coefficient does not belong to {ring}"
                )));
            }
        }
        Ok(CoefficientVector {
            degree,
            ring,
            slots,
        })
    }

    /// The all-zero vector (the zero form of the given degree).
    pub fn zero(ring: Ring, degree: u32) -> Result<CoefficientVector> {
        let n = slot_count(degree)?;
        let slots = (0..n).map(|_| ring.zero()).collect();
        CoefficientVector::new(ring, degree, slots)
    }

    /// The generic vector: slot `k` is the `k`-th indeterminate of the
    /// symbolic coefficient ring.
    pub fn generic(degree: u32) -> Result<CoefficientVector> {
        let ring = symbolic_coefficient_ring(degree)?;
        let p = ring.as_poly().expect("symbolic ring is polynomial").clone();
        let slots = (0..p.nvars())
            .map(|k| Element::Poly(p.indeterminate(k)))
            .collect();
        CoefficientVector::new(ring, degree, slots)
    }

    /// Reads the coefficients out of a homogeneous form in `R[x,y,z]`.
    /// With `degree: None` the degree is inferred; the zero form then has
    /// no degree to infer and is rejected.
    pub fn from_form(f: &MultiPoly, degree: Option<u32>) -> Result<CoefficientVector> {
        let pring = f.ring();
        let var_ok = pring.nvars() == 3 && pring.vars().iter().map(String::as_str).eq(FORM_VARS);
        if !var_ok {
            return Err(Error::RingMismatch(format!(
                "a ternary form must live in R[x,y,z]; got variables [{}]",
                pring.vars().join(",")
            )));
        }
        let d = match degree {
            Some(d) => d,
            None => f.degree().ok_or(Error::AmbiguousDegree)?,
        };
        let monos = slot_monomials(d)?;
        if !f.is_homogeneous(d) {
            return Err(Error::DegreeError(format!(
                "polynomial is not homogeneous of degree {d}"
            )));
        }
        let slots = monos
            .iter()
            .map(|e| f.coeff(&Monomial::new(e.to_vec())))
            .collect();
        CoefficientVector::new(pring.base().clone(), d, slots)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn slots(&self) -> &[Element] {
        &self.slots
    }

    /// Slot by 0-based index.
    pub fn slot(&self, idx: usize) -> &Element {
        &self.slots[idx]
    }

    /// The form these coefficients denote: `sum_k slot_k * monomial_k`
    /// in `R[x,y,z]`.
    pub fn to_form(&self) -> Result<MultiPoly> {
        let fring = form_ring(self.ring.clone())?;
        let fp = fring.as_poly().expect("form ring is polynomial").clone();
        let monos = slot_monomials(self.degree)?;
        MultiPoly::from_terms(
            fp,
            monos
                .iter()
                .zip(&self.slots)
                .map(|(e, c)| (Monomial::new(e.to_vec()), c.clone())),
        )
    }
}

// ---------------------------------------------------------------------------
// Matrix layouts

/// What a layout places at one strict-upper position.
#[derive(Clone, Copy, Debug)]
enum Slot {
    One,
    NegOne,
    /// Coefficient slot, 1-based.
    Coeff(usize),
    NegCoeff(usize),
    /// Degree-5 derived entry, by name.
    Derived(&'static str),
}

use Slot::{Coeff, Derived, NegCoeff, NegOne, One};

type Layout = &'static [(usize, usize, Slot)];

const M1_A: Layout = &[(1, 2, Coeff(1))];
const M1_B: Layout = &[(1, 2, Coeff(2))];
const M1_C: Layout = &[(1, 2, Coeff(3))];

const M2_A: Layout = &[
    (1, 2, One),
    (1, 3, Coeff(4)),
    (1, 4, Coeff(5)),
    (3, 4, Coeff(1)),
];
const M2_B: Layout = &[(1, 3, Coeff(2)), (1, 4, Coeff(6)), (2, 4, NegOne)];
const M2_C: Layout = &[(1, 4, Coeff(3)), (2, 3, One)];

const M3_A: Layout = &[
    (1, 2, Coeff(1)),
    (1, 3, Coeff(10)),
    (1, 5, Coeff(6)),
    (1, 6, Coeff(5)),
    (3, 4, NegOne),
    (5, 6, NegOne),
];
const M3_B: Layout = &[
    (1, 2, Coeff(4)),
    (1, 5, NegOne),
    (1, 6, Coeff(2)),
    (2, 3, NegOne),
    (4, 5, NegOne),
];
const M3_C: Layout = &[
    (1, 3, Coeff(9)),
    (1, 4, One),
    (1, 5, Coeff(7)),
    (1, 6, Coeff(8)),
    (2, 6, One),
    (3, 5, Coeff(3)),
];

// The signs of the three unit entries in row/column 4 are fixed so that the
// Pfaffian of the pencil comes out as +f rather than -f; this is a congruence
// by diag(1, 1, 1, -1, 1, 1, 1, 1), which leaves the representation class and
// every structural property of the matrices unchanged.
const M4_A: Layout = &[
    (1, 2, Coeff(1)),
    (1, 3, Coeff(6)),
    (1, 5, Coeff(4)),
    (3, 4, NegOne),
    (3, 5, Coeff(15)),
    (3, 8, Coeff(9)),
    (5, 6, One),
    (5, 8, Coeff(8)),
    (7, 8, NegOne),
];
const M4_B: Layout = &[
    (1, 3, Coeff(2)),
    (1, 5, Coeff(5)),
    (2, 6, NegOne),
    (2, 8, Coeff(14)),
    (3, 5, Coeff(11)),
    (4, 8, One),
    (5, 7, One),
];
const M4_C: Layout = &[
    (1, 2, Coeff(7)),
    (1, 3, Coeff(10)),
    (1, 5, Coeff(13)),
    (1, 6, NegOne),
    (2, 7, NegOne),
    (3, 5, Coeff(12)),
    (3, 8, Coeff(3)),
    (4, 5, NegOne),
];

const M5_A: Layout = &[
    (1, 2, Coeff(1)),
    (2, 3, Derived("a23")),
    (2, 5, Coeff(7)),
    (2, 7, Coeff(5)),
    (2, 8, NegCoeff(9)),
    (2, 9, Derived("a29")),
    (3, 4, One),
    (3, 9, Derived("a39")),
    (5, 6, One),
    (7, 8, One),
    (9, 10, One),
];
const M5_B: Layout = &[
    (1, 2, Coeff(4)),
    (1, 3, One),
    (2, 3, Derived("b23")),
    (2, 5, Coeff(2)),
    (2, 7, Coeff(6)),
    (2, 9, Derived("b29")),
    (3, 8, Coeff(15)),
    (3, 9, Derived("b39")),
    (4, 8, One),
    (6, 8, Derived("b68")),
    (6, 9, Derived("b69")),
    (6, 10, One),
    (7, 9, One),
];
const M5_C: Layout = &[
    (1, 2, Coeff(8)),
    (1, 5, One),
    (2, 3, Derived("c23")),
    (2, 10, One),
    (3, 8, Coeff(3)),
    (4, 9, One),
    (6, 7, One),
    (6, 9, NegCoeff(10)),
    (8, 9, NegCoeff(11)),
];

fn realize(
    cv: &CoefficientVector,
    derived: Option<&BTreeMap<String, Element>>,
    size: usize,
    layout: Layout,
) -> Result<SkewMatrix> {
    let ring = cv.ring().clone();
    let entries: Vec<_> = layout
        .iter()
        .map(|&(i, j, slot)| {
            let v = match slot {
                One => ring.one(),
                NegOne => ring.neg(&ring.one()),
                Coeff(k) => cv.slot(k - 1).clone(),
                NegCoeff(k) => ring.neg(cv.slot(k - 1)),
                Derived(name) => derived
                    .expect("derived map is present exactly at degree 5")
                    .get(name)
                    .expect("derived name from the fixed table")
                    .clone(),
            };
            ((i, j), v)
        })
        .collect();
    SkewMatrix::from_upper(ring, size, entries)
}

// ---------------------------------------------------------------------------
// Representations

/// A triple of scalar skew-symmetric matrices denoting the pencil
/// `M = x*A + y*B + z*C`, together with the degree it represents and, at
/// degree 5, the derived entries that were substituted into the layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    degree: u32,
    a: SkewMatrix,
    b: SkewMatrix,
    c: SkewMatrix,
    derived: Option<BTreeMap<String, Element>>,
}

impl Representation {
    pub fn new(
        degree: u32,
        a: SkewMatrix,
        b: SkewMatrix,
        c: SkewMatrix,
        derived: Option<BTreeMap<String, Element>>,
    ) -> Result<Representation> {
        slot_count(degree)?;
        let size = 2 * degree as usize;
        for m in [&a, &b, &c] {
            if m.size() != size {
                return Err(Error::ShapeError(format!(
                    "degree {degree} needs {size}x{size} matrices, got {}x{}",
                    m.size(),
                    m.size()
                )));
            }
        }
        if a.ring() != b.ring() || a.ring() != c.ring() {
            return Err(Error::RingMismatch(
                "the three pencil matrices live in different rings".into(),
            ));
        }
        if derived.is_some() && degree != 5 {
            return Err(Error::ShapeError(format!(
                "derived entries exist only at degree 5, not degree {degree}"
            )));
        }
        if let Some(map) = &derived {
            for name in map.keys() {
                if !DERIVED_NAMES.contains(&name.as_str()) {
                    return Err(Error::ShapeError(format!(
                        "unknown derived entry name {name:?}"
                    )));
                }
            }
            for v in map.values() {
                if !a.ring().contains(v) {
                    return Err(Error::RingMismatch(format!(
                        "derived entry does not belong to {}",
                        a.ring()
                    )));
                }
            }
        }
        Ok(Representation {
            degree,
            a,
            b,
            c,
            derived,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        2 * self.degree as usize
    }

    /// The common coefficient ring of `A`, `B`, `C`.
    pub fn ring(&self) -> &Ring {
        self.a.ring()
    }

    pub fn a(&self) -> &SkewMatrix {
        &self.a
    }

    pub fn b(&self) -> &SkewMatrix {
        &self.b
    }

    pub fn c(&self) -> &SkewMatrix {
        &self.c
    }

    /// The matrices with their display names, in pencil order.
    pub fn matrices(&self) -> [(&'static str, &SkewMatrix); 3] {
        [("A", &self.a), ("B", &self.b), ("C", &self.c)]
    }

    pub fn derived(&self) -> Option<&BTreeMap<String, Element>> {
        self.derived.as_ref()
    }

    /// Assembles `M = x*A + y*B + z*C` over `R[x,y,z]`; every entry is a
    /// linear form.
    pub fn pencil(&self) -> Result<SkewMatrix> {
        let fring = form_ring(self.ring().clone())?;
        let fp = fring.as_poly().expect("form ring is polynomial").clone();
        let mut linear: BTreeMap<(usize, usize), Vec<(Monomial, Element)>> = BTreeMap::new();
        for (var_idx, (_, m)) in self.matrices().into_iter().enumerate() {
            for (&ij, v) in m.upper_entries() {
                linear
                    .entry(ij)
                    .or_default()
                    .push((Monomial::var(3, var_idx, 1), v.clone()));
            }
        }
        let upper = linear
            .into_iter()
            .map(|(ij, terms)| {
                MultiPoly::from_terms(fp.clone(), terms).map(|p| (ij, Element::Poly(p)))
            })
            .collect::<Result<Vec<_>>>()?;
        SkewMatrix::from_upper(fring, self.size(), upper)
    }

    /// The scalar matrix `x0*A + y0*B + z0*C` at a point of `R^3`, without
    /// going through polynomials. Used for determinant spot-checks.
    pub fn specialize(&self, point: &[Element]) -> Result<SkewMatrix> {
        if point.len() != 3 {
            return Err(Error::ShapeError(format!(
                "a specialization point has 3 coordinates, got {}",
                point.len()
            )));
        }
        let ring = self.ring().clone();
        for v in point {
            if !ring.contains(v) {
                return Err(Error::RingMismatch(format!(
                    "specialization point does not belong to {ring}"
                )));
            }
        }
        let mut acc: BTreeMap<(usize, usize), Element> = BTreeMap::new();
        for (weight, (_, m)) in point.iter().zip(self.matrices()) {
            for (&ij, v) in m.upper_entries() {
                let term = ring.mul(weight, v);
                match acc.remove(&ij) {
                    Some(prev) => {
                        acc.insert(ij, ring.add(&prev, &term));
                    }
                    None => {
                        acc.insert(ij, term);
                    }
                }
            }
        }
        SkewMatrix::from_upper(ring, self.size(), acc)
    }
}

// ---------------------------------------------------------------------------
// Builders

fn require_degree(cv: &CoefficientVector, d: u32) -> Result<()> {
    if cv.degree() != d {
        return Err(Error::DegreeError(format!(
            "builder for degree {d} got a degree-{} coefficient vector",
            cv.degree()
        )));
    }
    Ok(())
}

/// Degree 1: `A`, `B`, `C` are 2x2 with the three coefficients at (1,2), so
/// `Pf(M) = m_{12} = c1*x + c2*y + c3*z`.
pub fn build_m1(cv: &CoefficientVector) -> Result<Representation> {
    require_degree(cv, 1)?;
    Representation::new(
        1,
        realize(cv, None, 2, M1_A)?,
        realize(cv, None, 2, M1_B)?,
        realize(cv, None, 2, M1_C)?,
        None,
    )
}

/// Degree 2: the 4x4 layout.
pub fn build_m2(cv: &CoefficientVector) -> Result<Representation> {
    require_degree(cv, 2)?;
    Representation::new(
        2,
        realize(cv, None, 4, M2_A)?,
        realize(cv, None, 4, M2_B)?,
        realize(cv, None, 4, M2_C)?,
        None,
    )
}

/// Degree 3: the 6x6 layout.
pub fn build_m3(cv: &CoefficientVector) -> Result<Representation> {
    require_degree(cv, 3)?;
    Representation::new(
        3,
        realize(cv, None, 6, M3_A)?,
        realize(cv, None, 6, M3_B)?,
        realize(cv, None, 6, M3_C)?,
        None,
    )
}

/// Degree 4: the 8x8 layout.
pub fn build_m4(cv: &CoefficientVector) -> Result<Representation> {
    require_degree(cv, 4)?;
    Representation::new(
        4,
        realize(cv, None, 8, M4_A)?,
        realize(cv, None, 8, M4_B)?,
        realize(cv, None, 8, M4_C)?,
        None,
    )
}

/// The nine degree-5 entries that are polynomial in the coefficients rather
/// than single coefficients. The literal `2` means `1 + 1` in the ring, so
/// the formulas specialize correctly even in characteristic 2.
pub fn derived_entries(cv: &CoefficientVector) -> Result<BTreeMap<String, Element>> {
    require_degree(cv, 5)?;
    let r = cv.ring().clone();
    let phi = |k: usize| cv.slot(k - 1);
    let p2 = |a: usize, b: usize| r.mul(phi(a), phi(b));
    let p3 = |a: usize, b: usize, c: usize| r.mul(phi(a), &r.mul(phi(b), phi(c)));
    let one = r.one();
    let two = r.embed_int(2);

    // a23 = -2*P6*P5*P3 - P6*P18 - P5*P14 + 1 - P17
    let mut a23 = r.neg(&r.mul(&two, &p3(6, 5, 3)));
    a23 = r.sub(&a23, &p2(6, 18));
    a23 = r.sub(&a23, &p2(5, 14));
    a23 = r.add(&a23, &one);
    a23 = r.sub(&a23, phi(17));

    // a29 = -P6*P5*P11 - P15*P5^2 - P5*P21 + P16
    let mut a29 = r.neg(&p3(6, 5, 11));
    a29 = r.sub(&a29, &p3(15, 5, 5));
    a29 = r.sub(&a29, &p2(5, 21));
    a29 = r.add(&a29, phi(16));

    // a39 = -P5*P3 - P18
    let a39 = r.sub(&r.neg(&p2(5, 3)), phi(18));

    // b23 = -P6^2*P3 - P12 - P6*P14
    let mut b23 = r.neg(&p3(6, 6, 3));
    b23 = r.sub(&b23, phi(12));
    b23 = r.sub(&b23, &p2(6, 14));

    // b29 = P5^2*P3 + P5*P18 - P6^2*P11 - P6*P15*P5 - P6*P21 - P9 + P19
    let mut b29 = p3(5, 5, 3);
    b29 = r.add(&b29, &p2(5, 18));
    b29 = r.sub(&b29, &p3(6, 6, 11));
    b29 = r.sub(&b29, &p3(6, 15, 5));
    b29 = r.sub(&b29, &p2(6, 21));
    b29 = r.sub(&b29, phi(9));
    b29 = r.add(&b29, phi(19));

    // b39 = -P6*P3 - P14
    let b39 = r.sub(&r.neg(&p2(6, 3)), phi(14));

    // b68 = P6*P11 + P15*P5 + P21
    let b68 = r.add(&r.add(&p2(6, 11), &p2(15, 5)), phi(21));

    // b69 = -P5*P11 - 1 - P20
    let b69 = r.sub(&r.sub(&r.neg(&p2(5, 11)), &one), phi(20));

    // c23 = -P6*P15 - P13
    let c23 = r.sub(&r.neg(&p2(6, 15)), phi(13));

    let mut map = BTreeMap::new();
    for (name, value) in [
        ("a23", a23),
        ("a29", a29),
        ("a39", a39),
        ("b23", b23),
        ("b29", b29),
        ("b39", b39),
        ("b68", b68),
        ("b69", b69),
        ("c23", c23),
    ] {
        map.insert(name.to_string(), value);
    }
    Ok(map)
}

/// Degree 5: the 10x10 layout with the nine derived entries substituted.
pub fn build_m5(cv: &CoefficientVector) -> Result<Representation> {
    require_degree(cv, 5)?;
    let derived = derived_entries(cv)?;
    Representation::new(
        5,
        realize(cv, Some(&derived), 10, M5_A)?,
        realize(cv, Some(&derived), 10, M5_B)?,
        realize(cv, Some(&derived), 10, M5_C)?,
        Some(derived),
    )
}

/// Dispatches to the builder for the vector's degree.
pub fn build(cv: &CoefficientVector) -> Result<Representation> {
    match cv.degree() {
        1 => build_m1(cv),
        2 => build_m2(cv),
        3 => build_m3(cv),
        4 => build_m4(cv),
        5 => build_m5(cv),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

/// Builds a representation of `f`, a homogeneous form in `R[x,y,z]` of
/// degree 1 to 5. The zero form needs an explicit degree.
pub fn represent(f: &MultiPoly, degree: Option<u32>) -> Result<Representation> {
    build(&CoefficientVector::from_form(f, degree)?)
}

/// The generic form of a degree: `sum_k T_k * monomial_k` over the symbolic
/// coefficient ring.
pub fn generic_form(degree: u32) -> Result<MultiPoly> {
    CoefficientVector::generic(degree)?.to_form()
}

// ---------------------------------------------------------------------------
// Verification

/// Outcome of re-deriving the Pfaffian (and optionally the determinant) of a
/// representation's pencil and comparing against the target form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// Whether `Pf(M) = f` exactly.
    pub pfaffian_matches: bool,
    /// `Pf(M) - f`; zero exactly when `pfaffian_matches`.
    pub difference: MultiPoly,
    /// Whether `det(M) = f^2` exactly; `None` unless the cross-check ran.
    pub det_matches: Option<bool>,
}

impl VerifyReport {
    /// True when every check that ran passed.
    pub fn ok(&self) -> bool {
        self.pfaffian_matches && self.det_matches.unwrap_or(true)
    }
}

/// Recomputes `Pf(x*A + y*B + z*C)` from scratch and compares it with `f`;
/// with `cross_check` also compares `det(M)` with `f^2` via the independent
/// determinant algorithm.
pub fn verify(rep: &Representation, f: &MultiPoly, cross_check: bool) -> Result<VerifyReport> {
    let pencil = rep.pencil()?;
    let fp = pencil.ring().as_poly().expect("pencil ring is polynomial");
    if f.ring() != fp {
        return Err(Error::RingMismatch(format!(
            "form lives in {} but the representation's pencil lives in {}",
            f.ring().as_ring(),
            pencil.ring()
        )));
    }
    let pf = match pencil.pfaffian() {
        Element::Poly(p) => p,
        _ => unreachable!("pencil entries are polynomials"),
    };
    let difference = pf.sub(f)?;
    let pfaffian_matches = difference.is_zero();
    let det_matches = if cross_check {
        let det = pencil.determinant();
        let f_squared = f.mul(f)?;
        Some(det == Element::Poly(f_squared))
    } else {
        None
    };
    Ok(VerifyReport {
        pfaffian_matches,
        difference,
        det_matches,
    })
}

// ---------------------------------------------------------------------------
// Niceness

/// One matrix entry that breaks the niceness conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryWitness {
    /// "A", "B", or "C".
    pub matrix: &'static str,
    pub row: usize,
    pub col: usize,
    pub value: Element,
}

/// Verdict of the niceness predicate with the evidence for a `false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceReport {
    pub nice: bool,
    /// Entries outside `{-1, 0, 1} ∪ {±coefficients}`.
    pub entry_violations: Vec<EntryWitness>,
    /// Coefficients appearing as a whole entry a number of times other than
    /// exactly once, with that count.
    pub multiplicity_violations: Vec<(String, usize)>,
}

/// Decides whether a representation over the generic symbolic coefficient
/// ring is *nice*: every entry is `0`, `+-1`, or a signed coefficient
/// symbol, and each coefficient symbol occupies exactly one entry across
/// the three matrices.
///
/// Requires the generic ring because niceness is about entries *being* the
/// symbols; over a specialized ring (say `ZZ` with some coefficient equal
/// to 1) membership would be ambiguous.
pub fn is_nice(rep: &Representation) -> Result<NiceReport> {
    let expected = symbolic_coefficient_ring(rep.degree())?;
    if rep.ring() != &expected {
        return Err(Error::RequiresSymbolicRing);
    }
    let ring = rep.ring().clone();
    let one = ring.one();
    let minus_one = ring.neg(&one);
    let symbols = coeff_symbols(rep.degree())?;
    let mut occurrences = vec![0usize; symbols.len()];
    let mut entry_violations = Vec::new();
    for (name, m) in rep.matrices() {
        for (&(i, j), v) in m.upper_entries() {
            if *v == one || *v == minus_one {
                continue;
            }
            if let Some(k) = signed_symbol_index(v) {
                occurrences[k] += 1;
                continue;
            }
            entry_violations.push(EntryWitness {
                matrix: name,
                row: i,
                col: j,
                value: v.clone(),
            });
        }
    }
    let multiplicity_violations: Vec<(String, usize)> = symbols
        .iter()
        .zip(&occurrences)
        .filter(|&(_, &count)| count != 1)
        .map(|(s, &count)| (s.clone(), count))
        .collect();
    Ok(NiceReport {
        nice: entry_violations.is_empty() && multiplicity_violations.is_empty(),
        entry_violations,
        multiplicity_violations,
    })
}

/// If `v` is exactly `+-1` times a single indeterminate of its ring,
/// returns that indeterminate's index.
fn signed_symbol_index(v: &Element) -> Option<usize> {
    let p = match v {
        Element::Poly(p) => p,
        _ => return None,
    };
    if p.num_terms() != 1 {
        return None;
    }
    let (mono, coeff) = p.terms().next().expect("one term");
    if mono.total_degree() != 1 {
        return None;
    }
    let base = p.ring().base();
    if !(base.is_one(coeff) || *coeff == base.neg(&base.one())) {
        return None;
    }
    mono.exponents().iter().position(|&e| e == 1)
}
