//! Exact-arithmetic workbench for equivariant degenerations of algebraic
//! varieties.
//!
//! The crate builds flat one-parameter families from torus actions on affine
//! or projective varieties, splits their central fibres, computes adapted
//! section bases with vanishing orders, performs the pole re-embedding and
//! blow-ups along invariant sections, and evaluates weighted trace tables,
//! Chow invariants and stability ratios — all over arbitrary-precision
//! rationals, with no floating point anywhere.
//!
//! Layers, bottom up:
//!
//! * [`ring`], [`order`], [`poly`], [`parse`] — sparse multivariate
//!   polynomials over `BigRational` with pluggable term orders;
//! * [`linalg`] — exact Gaussian elimination used by the section machinery;
//! * [`groebner`], [`ideal`] — Buchberger engine and ideal calculus
//!   (normal forms, elimination, saturation, colon, intersection, radical
//!   membership, standard monomials);
//! * [`family`], [`sections`] — equivariant families, component splits,
//!   vanishing orders and adapted section bases;
//! * [`transform`], [`blowup`] — the pole re-embedding of a family, residual
//!   component checks, composition invariants, Rees-style blow-ups;
//! * [`chow`], [`defect`] — weighted Hilbert/trace tables, exact polynomial
//!   fitting, Chow invariants, trace-defect polynomials and the stability
//!   ratio report;
//! * [`famfile`], [`report`] — the family description file format and the
//!   JSON report schema used by the CLI.

pub mod blowup;
pub mod budget;
pub mod chow;
pub mod defect;
pub mod error;
pub mod family;
pub mod famfile;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod order;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod sections;
pub mod transform;

pub use budget::Budget;
pub use error::{Error, Result};
pub use ideal::Ideal;
pub use order::TermOrder;
pub use poly::{Polynomial, Rational};
pub use ring::{Monomial, PolyRing};
