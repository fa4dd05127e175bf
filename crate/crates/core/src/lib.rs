//! Exact arithmetic for weighted isobaric polynomials.
//!
//! An isobaric polynomial of degree `n` in `t1..tk` is a sum of monomials
//! `t1^a1 ... tk^ak` with `a1 + 2 a2 + ... + k ak = n`. This crate builds the
//! weighted families (generalized Fibonacci and Lucas polynomials among them),
//! their lower-Hessenberg determinant and permanent representations, their
//! rational convolution roots, and applies those roots to multiplicative
//! arithmetic functions at a single prime.
//!
//! Everything is exact: coefficients are [`Rational`] (arbitrary precision).
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod companion;
mod error;
pub mod hessenberg;
pub mod isopoly;
pub mod partition;
pub mod roots;
pub mod weights;

pub use error::Error;
pub use isopoly::IsobaricPoly;
pub use partition::ExponentVector;
pub use weights::WeightVector;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Integer `v` as a [`Rational`].
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
