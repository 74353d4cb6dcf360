//! Seeded random sampling of ring elements, polynomials, and matrices.
//!
//! All randomized suites draw through [`Sampler`] so runs are reproducible
//! from a single 64-bit seed. The distributions are deliberately small and
//! documented: integers uniform on `[-10, 10]`; rationals with numerator
//! uniform on `[-10, 10]` and denominator uniform on `[1, 10]`; modular
//! elements uniform on `[0, n)`; polynomial-ring elements are sparse
//! polynomials whose coefficients recurse into the base ring.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pfaffian::{SkewMatrix, SquareMatrix};
use crate::poly::{Monomial, MultiPoly};
use crate::ring::{Element, PolyRing, Ring};

/// Default shape of random polynomials drawn by [`Sampler::element`] on a
/// polynomial ring: at most this total degree and this many terms.
const DEFAULT_POLY_DEGREE: u32 = 4;
const DEFAULT_POLY_TERMS: usize = 5;

/// A deterministic random source for ring data.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A random element of `ring`, per the module-level distributions.
    pub fn element(&mut self, ring: &Ring) -> Element {
        match ring {
            Ring::Integers => ring.embed_int(self.rng.gen_range(-10i64..=10)),
            Ring::Rationals => {
                let num = self.rng.gen_range(-10i64..=10);
                let den = self.rng.gen_range(1i64..=10);
                Element::Rat(num_rational::BigRational::new(num.into(), den.into()))
            }
            Ring::Modular(n) => Element::Mod(self.rng.gen_range(0..*n)),
            Ring::Polynomial(p) => {
                Element::Poly(self.poly(p, DEFAULT_POLY_DEGREE, DEFAULT_POLY_TERMS))
            }
        }
    }

    /// A random nonzero element; retries until one appears (every supported
    /// ring has at least two elements, so this terminates).
    pub fn nonzero_element(&mut self, ring: &Ring) -> Element {
        loop {
            let e = self.element(ring);
            if !ring.is_zero(&e) {
                return e;
            }
        }
    }

    /// A sparse random polynomial: up to `max_terms` monomials of total
    /// degree at most `max_degree`, coefficients drawn from the base ring.
    /// May come out with fewer terms (or zero) after cancellation.
    pub fn poly(&mut self, ring: &PolyRing, max_degree: u32, max_terms: usize) -> MultiPoly {
        let nvars = ring.nvars();
        let nterms = self.rng.gen_range(0..=max_terms);
        let mut terms = Vec::with_capacity(nterms);
        for _ in 0..nterms {
            let total = self.rng.gen_range(0..=max_degree);
            let mut exps = vec![0u32; nvars];
            for _ in 0..total {
                let v = self.rng.gen_range(0..nvars);
                exps[v] += 1;
            }
            terms.push((Monomial::new(exps), self.element(ring.base())));
        }
        MultiPoly::from_terms(ring.clone(), terms).expect("sampled arity is correct")
    }

    /// A random skew-symmetric matrix with every strict-upper entry drawn
    /// independently.
    pub fn skew(&mut self, ring: &Ring, size: usize) -> SkewMatrix {
        let mut entries = Vec::new();
        for i in 1..=size {
            for j in (i + 1)..=size {
                entries.push(((i, j), self.element(ring)));
            }
        }
        SkewMatrix::from_upper(ring.clone(), size, entries).expect("indices are valid")
    }

    /// A random dense square matrix.
    pub fn square(&mut self, ring: &Ring, size: usize) -> SquareMatrix {
        let rows = (0..size)
            .map(|_| (0..size).map(|_| self.element(ring)).collect())
            .collect();
        SquareMatrix::new(ring.clone(), rows).expect("rows are square")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let ring = Ring::integers();
        let mut a = Sampler::new(42);
        let mut b = Sampler::new(42);
        for _ in 0..20 {
            assert_eq!(a.element(&ring), b.element(&ring));
        }
    }

    #[test]
    fn elements_live_in_their_ring() {
        let rings = [
            Ring::integers(),
            Ring::rationals(),
            Ring::modular(6).unwrap(),
            Ring::polynomial(Ring::integers(), ["x", "y"]).unwrap(),
        ];
        let mut s = Sampler::new(1);
        for ring in &rings {
            for _ in 0..50 {
                let e = s.element(ring);
                assert!(ring.contains(&e), "sampled element outside {ring}");
                assert_eq!(ring.canonicalize(&e), e, "sample not canonical");
            }
        }
    }

    #[test]
    fn ring_axioms_hold_on_samples() {
        let rings = [
            Ring::integers(),
            Ring::rationals(),
            Ring::modular(5).unwrap(),
            Ring::modular(6).unwrap(),
            Ring::polynomial(Ring::integers(), ["t"]).unwrap(),
        ];
        let mut s = Sampler::new(2);
        for ring in &rings {
            for _ in 0..200 {
                let a = s.element(ring);
                let b = s.element(ring);
                let c = s.element(ring);
                assert_eq!(
                    ring.add(&ring.add(&a, &b), &c),
                    ring.add(&a, &ring.add(&b, &c))
                );
                assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
                assert_eq!(
                    ring.mul(&a, &ring.add(&b, &c)),
                    ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
                );
                assert_eq!(ring.add(&a, &ring.neg(&a)), ring.zero());
                assert_eq!(ring.mul(&ring.one(), &a), a);
            }
        }
    }

    #[test]
    fn embed_int_is_a_homomorphism() {
        let rings = [
            Ring::integers(),
            Ring::rationals(),
            Ring::modular(6).unwrap(),
        ];
        let mut s = Sampler::new(3);
        for ring in &rings {
            for _ in 0..100 {
                let m = s.rng.gen_range(-50i64..=50);
                let k = s.rng.gen_range(-50i64..=50);
                assert_eq!(
                    ring.embed_int(m + k),
                    ring.add(&ring.embed_int(m), &ring.embed_int(k))
                );
                assert_eq!(
                    ring.embed_int(m * k),
                    ring.mul(&ring.embed_int(m), &ring.embed_int(k))
                );
            }
        }
    }
}
