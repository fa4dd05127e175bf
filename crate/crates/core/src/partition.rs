//! Exponent vectors of partitions with bounded part size.
//!
//! A partition of `n` with parts no larger than `k` is stored by its
//! multiplicities `(a1, ..., ak)`, where `aj` counts the parts equal to `j`.
//! The same vector indexes the monomial `t1^a1 ... tk^ak`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Rational, WeightVector};

/// Multiplicities of a partition, fixed at length `k`, with the weighted
/// degree `sum j * aj` cached.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    multiplicities: Vec<u32>,
    degree: usize,
}

impl ExponentVector {
    pub fn new(multiplicities: Vec<u32>) -> Self {
        let degree = multiplicities
            .iter()
            .enumerate()
            .map(|(i, &a)| (i + 1) * a as usize)
            .sum();
        ExponentVector {
            multiplicities,
            degree,
        }
    }

    /// The empty partition of 0 over `k` parts.
    pub fn zero(k: usize) -> Self {
        ExponentVector {
            multiplicities: vec![0; k],
            degree: 0,
        }
    }

    /// The single part `j` (the monomial `t_j`). Requires `1 <= j <= k`.
    pub fn unit(k: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= k, "part {} outside 1..={}", j, k);
        let mut multiplicities = vec![0; k];
        multiplicities[j - 1] = 1;
        ExponentVector {
            multiplicities,
            degree: j,
        }
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Multiplicity of part `j` (1-based); zero beyond `k`.
    pub fn get(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn k(&self) -> usize {
        self.multiplicities.len()
    }

    /// Number of parts, `|alpha|`.
    pub fn norm(&self) -> usize {
        self.multiplicities.iter().map(|&a| a as usize).sum()
    }

    /// Exponent vector of `t^self * t_j`.
    pub fn with_part(&self, j: usize) -> Self {
        assert!(
            j >= 1 && j <= self.k(),
            "part {} outside 1..={}",
            j,
            self.k()
        );
        let mut next = self.clone();
        next.multiplicities[j - 1] += 1;
        next.degree += j;
        next
    }

    /// Exponent vector of `t^self / t_j`, if `t_j` divides the monomial.
    pub fn without_part(&self, j: usize) -> Option<Self> {
        if self.get(j) == 0 {
            return None;
        }
        let mut next = self.clone();
        next.multiplicities[j - 1] -= 1;
        next.degree -= j;
        Some(next)
    }

    /// Exponent vector of the product of two monomials over the same `k`.
    pub fn combine(&self, other: &Self) -> Self {
        assert_eq!(self.k(), other.k());
        ExponentVector {
            multiplicities: self
                .multiplicities
                .iter()
                .zip(&other.multiplicities)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.multiplicities)
    }
}

/// Every exponent vector of degree `n` over parts `1..=k`, in descending
/// lexicographic order of the multiplicities. `n = 0` yields the zero vector.
pub fn enumerate(n: usize, k: usize) -> Vec<ExponentVector> {
    assert!(k >= 1, "part bound must be positive");
    let mut out = Vec::new();
    let mut current = vec![0u32; k];
    fill(0, n, &mut current, &mut out);
    out
}

fn fill(index: usize, remaining: usize, current: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
    let part = index + 1;
    if part == current.len() {
        if remaining.is_multiple_of(part) {
            current[index] = (remaining / part) as u32;
            out.push(ExponentVector::new(current.clone()));
            current[index] = 0;
        }
        return;
    }
    for a in (0..=remaining / part).rev() {
        current[index] = a as u32;
        fill(index + 1, remaining - a * part, current, out);
    }
    current[index] = 0;
}

pub fn factorial(m: usize) -> BigUint {
    (2..=m).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `a1! a2! ... ak!`
pub fn factorial_product(alpha: &ExponentVector) -> BigUint {
    alpha
        .multiplicities()
        .iter()
        .fold(BigUint::one(), |acc, &a| acc * factorial(a as usize))
}

/// `|alpha|! / (a1! ... ak!)`
pub fn multinomial(alpha: &ExponentVector) -> BigUint {
    // Built as a product of binomials so intermediate values stay small.
    let mut total = 0usize;
    let mut acc = BigUint::one();
    for &a in alpha.multiplicities() {
        for i in 1..=a as usize {
            total += 1;
            acc = acc * BigUint::from(total) / BigUint::from(i);
        }
    }
    acc
}

pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    (0..r).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

/// `sum ai * wi` over the parts of `alpha`.
pub fn weight_dot(alpha: &ExponentVector, omega: &WeightVector) -> Rational {
    alpha
        .multiplicities()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .fold(Rational::zero(), |acc, (i, &a)| {
            acc + omega.get(i + 1) * Rational::from_integer(a.into())
        })
}
