//! Exact decision procedures for integer-valued and integral-valued
//! polynomials on finite-rank algebras over the integers.
//!
//! For an order `A` (a free Z-module of finite rank with an associative
//! unital multiplication) this crate decides membership in
//! `Int(A) = { f ∈ Q[X] : f(A) ⊆ A }`, tests membership in the ring of
//! integral-valued polynomials `{ f : f(a) integral over Z }` on explicit
//! element sets, and builds monic certificates exhibiting the latter as
//! integral over pullback rings `Z[X] + μ_a(X)·Q[X]`.

pub mod density;
pub mod error;
pub mod exact;
pub mod json;
pub mod matrix;
pub mod membership;
pub mod order;
pub mod par;
pub mod sample;

pub use error::{Error, Result};
pub use exact::{ExactRational, IntPolynomial, Polynomial, RatPolynomial};
pub use matrix::{RatMatrix, SpectrumPoly};
pub use membership::{MembershipVerdict, Verdict, Witness};

pub use order::{AlgebraElement, Order, ResidueBox};
pub use par::Strategy;
