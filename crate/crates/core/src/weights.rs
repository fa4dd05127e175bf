use alloc::vec::Vec;

use num_traits::One;

use crate::Rational;

/// A weight sequence `(w1, w2, ...)` selecting a family of weighted isobaric
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightVector {
    /// `wj = 1` for every `j`: the generalized Fibonacci family.
    Ones,
    /// `wj = j`: the generalized Lucas family.
    Identity,
    /// Listed weights; indices past the end repeat the final entry.
    Explicit(Vec<Rational>),
}

impl WeightVector {
    pub fn ones() -> Self {
        WeightVector::Ones
    }

    pub fn identity() -> Self {
        WeightVector::Identity
    }

    /// Panics on an empty list.
    pub fn explicit(values: Vec<Rational>) -> Self {
        assert!(!values.is_empty(), "weight vector needs at least one entry");
        WeightVector::Explicit(values)
    }

    /// `w_j` for `j >= 1`.
    pub fn get(&self, j: usize) -> Rational {
        assert!(j >= 1, "weights are indexed from 1");
        match self {
            WeightVector::Ones => Rational::one(),
            WeightVector::Identity => Rational::from_integer(j.into()),
            WeightVector::Explicit(values) => values
                .get(j - 1)
                .or_else(|| values.last())
                .cloned()
                .expect("non-empty weights"),
        }
    }

    /// `(w1, ..., wk)`.
    pub fn prefix(&self, k: usize) -> Vec<Rational> {
        (1..=k).map(|j| self.get(j)).collect()
    }
}
