//! Sparse isobaric polynomials and the weighted families built from them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::partition::{self, ExponentVector};
use crate::{Error, Rational, Result, WeightVector};

/// An isobaric polynomial of fixed degree `n` in `t1..tk`.
///
/// Zero coefficients are never stored. Degree 0 polynomials are constants,
/// keyed by the all-zero exponent vector.
#[derive(Clone, PartialEq, Eq)]
pub struct IsobaricPoly {
    n: usize,
    k: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl IsobaricPoly {
    pub fn zero(n: usize, k: usize) -> Self {
        assert!(k >= 1, "part bound must be positive");
        IsobaricPoly {
            n,
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: usize, c: Rational) -> Self {
        let mut p = IsobaricPoly::zero(0, k);
        p.insert(ExponentVector::zero(k), c);
        p
    }

    pub fn one(k: usize) -> Self {
        IsobaricPoly::constant(k, Rational::one())
    }

    /// `c * t_j`; the zero polynomial of degree `j` when `j > k`.
    pub fn t(k: usize, j: usize, c: Rational) -> Self {
        let mut p = IsobaricPoly::zero(j, k);
        if j <= k {
            p.insert(ExponentVector::unit(k, j), c);
        }
        p
    }

    /// Builds a polynomial from `(alpha, coeff)` pairs, summing repeats.
    pub fn from_terms<I>(n: usize, k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = IsobaricPoly::zero(n, k);
        for (alpha, c) in terms {
            if alpha.degree() != n || alpha.k() != k {
                return Err(Error::ShapeMismatch {
                    left: (n, k),
                    right: (alpha.degree(), alpha.k()),
                });
            }
            p.add_term(alpha, c);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &ExponentVector) -> Rational {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient by multiplicities, e.g. `coeff_of(&[1, 1, 0])` for `t1 t2`.
    pub fn coeff_of(&self, multiplicities: &[u32]) -> Rational {
        self.coeff(&ExponentVector::new(multiplicities.to_vec()))
    }

    /// Non-zero terms in descending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter().rev()
    }

    /// The value of a degree-0 polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        (self.n == 0).then(|| self.coeff(&ExponentVector::zero(self.k)))
    }

    fn insert(&mut self, alpha: ExponentVector, c: Rational) {
        if !c.is_zero() {
            self.terms.insert(alpha, c);
        }
    }

    fn add_term(&mut self, alpha: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::ShapeMismatch {
                left: (self.n, self.k),
                right: (other.n, other.k),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.add_term(alpha.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return IsobaricPoly::zero(self.n, self.k);
        }
        IsobaricPoly {
            n: self.n,
            k: self.k,
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `t_j`, raising the degree by `j`. Since `t_j = 0` for
    /// `j > k`, that case gives the zero polynomial of the raised degree.
    pub fn monomial_mul(&self, j: usize) -> Self {
        assert!(j >= 1, "parts are indexed from 1");
        if j > self.k {
            return IsobaricPoly::zero(self.n + j, self.k);
        }
        IsobaricPoly {
            n: self.n + j,
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(a, v)| (a.with_part(j), v.clone()))
                .collect(),
        }
    }

    /// Product of isobaric polynomials; degrees add.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::PartBoundMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let mut out = IsobaricPoly::zero(self.n + other.n, self.k);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.combine(b), x * y);
            }
        }
        Ok(out)
    }

    /// Substitutes `t1..tk`. Entries of `t` beyond `k` are ignored.
    pub fn evaluate(&self, t: &[Rational]) -> Rational {
        assert!(
            t.len() >= self.k,
            "need {} values to evaluate, got {}",
            self.k,
            t.len()
        );
        let mut total = Rational::zero();
        for (alpha, c) in &self.terms {
            let mut term = c.clone();
            for (tj, &a) in t.iter().zip(alpha.multiplicities()) {
                if a != 0 {
                    term *= num_traits::pow(tj.clone(), a as usize);
                }
            }
            total += term;
        }
        total
    }
}

impl fmt::Debug for IsobaricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IsobaricPoly(n={}, k={}: {})", self.n, self.k, self)
    }
}

/// Terms in descending lexicographic exponent order, written `c t1^a t2^b`
/// with unit coefficients elided.
impl fmt::Display for IsobaricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (alpha, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let is_constant = alpha.norm() == 0;
            let mut need_space = false;
            if !magnitude.is_one() || is_constant {
                write!(f, "{}", magnitude)?;
                need_space = true;
            }
            for (j, &a) in alpha.multiplicities().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if need_space {
                    f.write_str(" ")?;
                }
                write!(f, "t{}", j + 1)?;
                if a > 1 {
                    write!(f, "^{}", a)?;
                }
                need_space = true;
            }
        }
        Ok(())
    }
}

/// `P_{w,k,n}` from the closed multinomial formula, for `n >= 1`; at `n = 0`
/// the value `w_k`, which is 1 for the Fibonacci and `k` for the Lucas
/// weights.
pub fn wip_closed(omega: &WeightVector, k: usize, n: usize) -> IsobaricPoly {
    if n == 0 {
        return IsobaricPoly::constant(k, omega.get(k));
    }
    let mut p = IsobaricPoly::zero(n, k);
    for alpha in partition::enumerate(n, k) {
        let norm = Rational::from_integer(alpha.norm().into());
        let c = Rational::from_integer(partition::multinomial(&alpha).into())
            * partition::weight_dot(&alpha, omega)
            / norm;
        p.insert(alpha, c);
    }
    p
}

/// Generalized Fibonacci polynomial `F_{k,n}` (complete homogeneous
/// symmetric polynomial on the elementary basis).
pub fn gfp(k: usize, n: usize) -> IsobaricPoly {
    wip_closed(&WeightVector::Ones, k, n)
}

/// Generalized Lucas polynomial `G_{k,n}` (power sum on the elementary basis).
pub fn glp(k: usize, n: usize) -> IsobaricPoly {
    wip_closed(&WeightVector::Identity, k, n)
}

/// `P_{w,k,n}` by the linear recursion `P_n = sum_j t_j P_{n-j}` over the
/// core `[t1..tk]`, seeded with the closed form in degrees `0..k`.
pub fn wip_recursive(omega: &WeightVector, k: usize, n: usize) -> IsobaricPoly {
    let seeds = n.min(k - 1);
    let mut seq: Vec<IsobaricPoly> = (0..=seeds).map(|d| wip_closed(omega, k, d)).collect();
    for m in seq.len()..=n {
        let mut next = IsobaricPoly::zero(m, k);
        for j in 1..=k {
            let shifted = seq[m - j].monomial_mul(j);
            next = next.add(&shifted).expect("degrees agree by construction");
        }
        seq.push(next);
    }
    seq.swap_remove(n)
}

/// A sequence `(P_0, P_1, ...)` of isobaric polynomials over a fixed `k`,
/// where `P_n` has degree `n`.
pub trait PolySequence {
    fn k(&self) -> usize;
    fn term(&self, n: usize) -> IsobaricPoly;
}

/// Weighted isobaric sequence with a configurable degree-0 value.
#[derive(Clone, Debug)]
pub struct Wip {
    pub omega: WeightVector,
    pub k: usize,
    degree_zero: Rational,
}

impl Wip {
    /// Degree-0 value defaults to `w_k`.
    pub fn new(omega: WeightVector, k: usize) -> Self {
        let degree_zero = omega.get(k);
        Wip {
            omega,
            k,
            degree_zero,
        }
    }

    pub fn gfp(k: usize) -> Self {
        Wip::new(WeightVector::Ones, k)
    }

    pub fn glp(k: usize) -> Self {
        Wip::new(WeightVector::Identity, k)
    }

    pub fn with_degree_zero(mut self, value: Rational) -> Self {
        self.degree_zero = value;
        self
    }
}

impl PolySequence for Wip {
    fn k(&self) -> usize {
        self.k
    }

    fn term(&self, n: usize) -> IsobaricPoly {
        if n == 0 {
            IsobaricPoly::constant(self.k, self.degree_zero.clone())
        } else {
            wip_closed(&self.omega, self.k, n)
        }
    }
}

/// Caches the terms of a sequence by degree.
pub struct Memo<S> {
    source: S,
    cache: Vec<IsobaricPoly>,
}

impl<S: PolySequence> Memo<S> {
    pub fn new(source: S) -> Self {
        Memo {
            source,
            cache: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.source.k()
    }

    pub fn get(&mut self, n: usize) -> &IsobaricPoly {
        self.prefix(n);
        &self.cache[n]
    }

    /// Terms of degree `0..=n`.
    pub fn prefix(&mut self, n: usize) -> &[IsobaricPoly] {
        while self.cache.len() <= n {
            let next = self.source.term(self.cache.len());
            self.cache.push(next);
        }
        &self.cache[..=n]
    }
}

/// Degree-`n` convolution product `sum_j A_j B_{n-j}` of two sequences.
pub fn convolve<A: PolySequence, B: PolySequence>(
    a: &mut Memo<A>,
    b: &mut Memo<B>,
    n: usize,
) -> Result<IsobaricPoly> {
    if a.k() != b.k() {
        return Err(Error::PartBoundMismatch {
            left: a.k(),
            right: b.k(),
        });
    }
    let left = a.prefix(n);
    let right = b.prefix(n);
    convolve_terms(left, right, n)
}

/// Degree-`n` convolution of two explicit prefixes (each of length > `n`).
pub fn convolve_terms(a: &[IsobaricPoly], b: &[IsobaricPoly], n: usize) -> Result<IsobaricPoly> {
    assert!(
        a.len() > n && b.len() > n,
        "prefixes shorter than degree {}",
        n
    );
    let k = a[0].k();
    let mut out = IsobaricPoly::zero(n, k);
    for j in 0..=n {
        out = out.add(&a[j].mul(&b[n - j])?)?;
    }
    Ok(out)
}

/// The first `len` terms of the `m`-fold convolution power of `seq`; `m = 0`
/// gives the identity `(1, 0, 0, ...)`.
pub fn convolution_power(seq: &[IsobaricPoly], m: usize, len: usize) -> Result<Vec<IsobaricPoly>> {
    assert!(seq.len() >= len && len > 0);
    let k = seq[0].k();
    let mut acc: Vec<IsobaricPoly> = (0..len)
        .map(|d| {
            if d == 0 {
                IsobaricPoly::one(k)
            } else {
                IsobaricPoly::zero(d, k)
            }
        })
        .collect();
    for _ in 0..m {
        acc = (0..len)
            .map(|d| convolve_terms(&acc, seq, d))
            .collect::<Result<_>>()?;
    }
    Ok(acc)
}
