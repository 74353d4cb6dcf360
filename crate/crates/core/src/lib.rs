//! Exact linear Pfaffian representations of ternary forms.
//!
//! Given a homogeneous polynomial `f` in `x, y, z` of degree `d` between 1
//! and 5, with coefficients in any commutative ring with 1, this crate
//! builds a `2d x 2d` skew-symmetric matrix `M = x*A + y*B + z*C` with
//! constant matrices `A`, `B`, `C` such that the Pfaffian of `M` equals `f`
//! (and hence `det M = f^2`). Everything is division-free and exact:
//! arbitrary-precision integers and rationals, modular arithmetic with any
//! modulus `>= 2`, and sparse multivariate polynomials over nested rings.
//!
//! The construction is uniform in the coefficients, so its correctness is
//! certified once and for all per degree by a symbolic identity over
//! `ZZ[c1..ck][x,y,z]`; see [`repr`].

pub mod error;
pub mod json;
pub mod latex;
pub mod pfaffian;
pub mod poly;
pub mod repr;
pub mod ring;
pub mod sample;
pub mod text;

pub use error::{Error, Result};
pub use pfaffian::{SkewMatrix, SquareMatrix};
pub use poly::{Monomial, MultiPoly};
pub use repr::{CoefficientVector, NiceReport, Representation, VerifyReport};
pub use ring::{Element, PolyRing, Ring};
pub use text::Style;
