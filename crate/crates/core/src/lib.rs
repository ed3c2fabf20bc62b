//! Exact-arithmetic invariants of hypersurface singularities.
//!
//! This library computes polyhedral and algebraic invariants of an analytic
//! germ `f : (C^n, 0) -> (C, 0)` given by a polynomial with rational
//! coefficients, entirely in exact arithmetic (no floating point anywhere in
//! the computational core):
//!
//! * **Newton polyhedra** ([`newton`]): the Newton polyhedron `Γ₊(f)`, its
//!   compact boundary `Γ(f)`, the face lattice, the dual Newton diagram, and
//!   Kouchnirenko's Newton number.
//! * **Nondegeneracy certificates** ([`nd`]): exact face-by-face
//!   nondegeneracy tests (monomial, edge-discriminant and surface-resultant
//!   methods) and verification of "pre-nondegeneracy" data for weighted
//!   homogeneous germs whose projectivized singular locus is nontrivial.
//! * **Toric charts** ([`fan`]): simplicial fans, regularity / admissibility
//!   / covering validation, monomial chart pullbacks, and Hirzebruch–Jung
//!   resolution of two-dimensional cones.
//! * **Monodromy zeta-functions** ([`zeta`]): the A'Campo formula from
//!   resolution data, the Varchenko formula from the Newton boundary, and the
//!   additive assembly of the zeta-function of a Newton-degenerate germ from
//!   its combinatorial part plus finitely many local contributions.
//! * **Milnor numbers by linear algebra** ([`milnor`]): truncated Jacobian
//!   quotients computed by exact sparse row reduction, stabilization and safe
//!   certificates, generic hyperplane-section Milnor numbers, and the whole
//!   `μ*`-sequence of Teissier.
//! * **Pipelines** ([`pipeline`]): the Milnor–Orlik product formula, the
//!   shift formula `μ(f + z_k^{d_k+m}) = Π(dᵢ−1) + m·w_k·μ_tot` for convenient
//!   weighted homogeneous germs with nondegenerate proper restrictions, the
//!   resulting `μ*`-triples for surfaces, and a certified comparison report
//!   that certifies pairs of projective curves as candidates for `μ*`-constant
//!   Zariski pairs of surface germs.
//!
//! # Conventions
//!
//! * Variables are `z1, …, zn`; exponent vectors are written additively.
//! * All scalars are [`Rat`] (arbitrary-precision rationals); all published
//!   weight vectors and exponents are integers.
//! * Every nontrivial result carries enough data to be re-checked: weight
//!   vectors, face supports, chart matrices, certified singular points,
//!   per-subset zeta factors, rank certificates.
//!
//! # Quick example
//!
//! ```
//! use muzeta::poly::Poly;
//! use muzeta::zeta::{milnor_from_zeta, varchenko_zeta};
//!
//! // An ordinary cusp: zeta-function (1-t^6)/(1-t^2)(1-t^3) … computed from
//! // the Newton boundary of z1^2 + z2^3.
//! let f = Poly::parse(2, "z1^2+z2^3").unwrap();
//! let report = varchenko_zeta(&f).unwrap();
//! assert_eq!(report.zeta.to_string(), "(1-t^2)^-1(1-t^3)^-1(1-t^6)");
//! assert_eq!(milnor_from_zeta(&report.zeta, 2).unwrap(), 2);
//! ```

#![forbid(unsafe_code)]
#![warn(missing_docs)]
#![warn(clippy::all)]
#![deny(clippy::float_arithmetic)]

pub mod error;
pub mod fan;
pub mod matrix;
pub mod milnor;
pub mod nd;
pub mod newton;
pub mod pipeline;
pub mod poly;
pub mod univar;
pub mod zeta;

/// Arbitrary-precision integer scalar used throughout the crate.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

pub use error::{Error, Result};

/// Convenience constructor for a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Convenience constructor for a rational `p/q`.
///
/// # Panics
/// Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(Int::from(p), Int::from(q))
}

/// Serde helper: a vector of rationals as exact `p/q` strings.
pub(crate) fn rats_as_strings<S: serde::Serializer>(
    v: &[Rat],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&r.to_string())?;
    }
    seq.end()
}
