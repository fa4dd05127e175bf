//! Rational convolution roots.
//!
//! The `q`-th root of the Fibonacci sequence is built from the rising product
//! `B_j(q) = q (q+1) ... (q+j)`: the coefficient of `t^alpha` in `F^q_{k,n}` is
//! `B_{|alpha|-1}(q) / (a1! ... ak!)`. The same polynomial is the determinant
//! (or permanent) of a lower Hessenberg matrix with cells
//! `(1/i) (p q + i - p) t_p`, `p = i - j + 1`, and of its Stirling-ratio
//! rewrite. Roots of general weighted sequences also need the falling product
//! `B_{-j}(q) = q (q-1) ... (q-j)` and the total derivative in the weights.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::hessenberg::{Cell, HessenbergMatrix, Superdiagonal};
use crate::isopoly::PolySequence;
use crate::partition::{self, ExponentVector};
use crate::{Error, IsobaricPoly, Rational, Result, WeightVector};

/// Stirling operator: `q (q+1) ... (q+j)` for `j >= 0` and
/// `q (q-1) ... (q-m)` for `j = -m < 0`. Both give `q` at `j = 0`.
pub fn stirling_b(j: i64, q: &Rational) -> Rational {
    let step = if j >= 0 { 1 } else { -1 };
    (1..=j.unsigned_abs() as i64).fold(q.clone(), |acc, i| {
        acc * (q + Rational::from_integer((step * i).into()))
    })
}

/// Unsigned Stirling numbers of the first kind `c(m, 1..=m)`: the
/// coefficients of `B_{m-1}(q) = q (q+1) ... (q+m-1)` in powers `q^1..q^m`.
pub fn stirling1_expand(m: usize) -> Vec<BigUint> {
    assert!(m >= 1, "m must be positive");
    // Coefficients of q^0..q^deg.
    let mut poly = vec![BigUint::zero(), BigUint::one()];
    for i in 1..m {
        let shift = BigUint::from(i);
        let mut next = vec![BigUint::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] += c * &shift;
        }
        poly = next;
    }
    poly.remove(0);
    poly
}

/// `F^q_{k,n}` from the closed formula. `q = 0` gives the convolution
/// identity `(1, 0, 0, ...)`.
pub fn gfp_root_closed(q: &Rational, k: usize, n: usize) -> IsobaricPoly {
    if n == 0 {
        return IsobaricPoly::one(k);
    }
    let terms = partition::enumerate(n, k).into_iter().map(|alpha| {
        let b = stirling_b(alpha.norm() as i64 - 1, q);
        let c = b / Rational::from_integer(partition::factorial_product(&alpha).into());
        (alpha, c)
    });
    IsobaricPoly::from_terms(n, k, terms).expect("enumerated vectors have degree n")
}

/// `F^q_{k,n}` through the nested-minor recursion
/// `F^q_n = sum_{j=1}^{n} (1/n)(j q + n - j) t_j F^q_{n-j}`.
pub fn gfp_root_recursive(q: &Rational, k: usize, n: usize) -> IsobaricPoly {
    let mut seq = vec![IsobaricPoly::one(k)];
    for m in 1..=n {
        let mut next = IsobaricPoly::zero(m, k);
        for j in 1..=m.min(k) {
            let s = root_recursion_coeff(q, m, j);
            let term = seq[m - j].monomial_mul(j).scale(&s);
            next = next.add(&term).expect("degrees agree");
        }
        seq.push(next);
    }
    seq.swap_remove(n)
}

/// `(1/n)(j q + n - j)`, the coefficient of `t_j` in the degree-`n` step.
pub fn root_recursion_coeff(q: &Rational, n: usize, j: usize) -> Rational {
    let jj = Rational::from_integer(j.into());
    let nn = Rational::from_integer(n.into());
    (&jj * q + &nn - &jj) / nn
}

/// Hessenberg matrix whose determinant (`Minus`) or permanent (`Plus`) is
/// `F^q_{k,n}`. Cell `(i, j)` is `(1/i)((i-j+1) q + j - 1) t_{i-j+1}`.
pub fn gfp_root_matrix(q: &Rational, k: usize, n: usize, sup: Superdiagonal) -> HessenbergMatrix {
    HessenbergMatrix::from_fn(n, k, sup, |i, j| {
        let part = i - j + 1;
        Cell::monomial(root_recursion_coeff(q, i, part), part, k)
    })
}

/// The same matrix written with Stirling-operator ratios: row `i` places
/// `(1/i)(p B_{i-p} / B_{i-p-1} - (i-p)(p-1)) t_p` at column `i-p+1` for
/// `p < i`, and `B_0 t_i` in column 1. Superdiagonal `-1`.
///
/// Fails with [`Error::DegenerateQ`] when a ratio denominator `B_m(q)`
/// vanishes, i.e. for `q` in `{0, -1, ..., -(n-2)}`.
pub fn gfp_root_stirling_matrix(q: &Rational, k: usize, n: usize) -> Result<HessenbergMatrix> {
    assert!(n >= 1, "matrix size must be positive");
    // Denominators B_0 .. B_{n-2}.
    let b: Vec<Rational> = (0..n as i64).map(|j| stirling_b(j, q)).collect();
    if b[..n - 1].iter().any(Zero::is_zero) {
        return Err(Error::DegenerateQ { q: q.clone(), n });
    }
    Ok(HessenbergMatrix::from_fn(
        n,
        k,
        Superdiagonal::Minus,
        |i, j| {
            let part = i - j + 1;
            if part == i {
                return Cell::monomial(b[0].clone(), part, k);
            }
            let ratio = &b[i - part] / &b[i - part - 1];
            let p = Rational::from_integer(part.into());
            let correction = Rational::from_integer(((i - part) * (part - 1)).into());
            let coeff = (p * ratio - correction) / Rational::from_integer(i.into());
            Cell::monomial(coeff, part, k)
        },
    ))
}

/// Polynomial in the weight variables `w1..wk`, keyed by exponent lists.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct OmegaPolynomial {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl OmegaPolynomial {
    pub fn zero() -> Self {
        OmegaPolynomial::default()
    }

    /// `c * w1^a1 ... wk^ak`.
    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = OmegaPolynomial::zero();
        p.add_term(exponents, c);
        p
    }

    fn add_term(&mut self, mut exponents: Vec<u32>, c: Rational) {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        let slot = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        let mut key = exponents.to_vec();
        while key.last() == Some(&0) {
            key.pop();
        }
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// `D_1`: the sum of the first partial derivatives in every `w_i`.
    pub fn total_derivative_once(&self) -> Self {
        let mut out = OmegaPolynomial::zero();
        for (exps, c) in &self.terms {
            for (i, &a) in exps.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut lowered = exps.clone();
                lowered[i] -= 1;
                out.add_term(lowered, c * Rational::from_integer(a.into()));
            }
        }
        out
    }

    /// `D_j = D_1 (D_{j-1})`, with `D_0` the identity.
    pub fn total_derivative(&self, j: usize) -> Self {
        (0..j).fold(self.clone(), |p, _| p.total_derivative_once())
    }

    pub fn evaluate(&self, omega: &WeightVector) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (exps, c)| {
            let mut term = c.clone();
            for (i, &a) in exps.iter().enumerate() {
                if a != 0 {
                    term *= num_traits::pow(omega.get(i + 1), a as usize);
                }
            }
            acc + term
        })
    }
}

impl fmt::Debug for OmegaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OmegaPolynomial({})", self)
    }
}

/// Terms in descending lexicographic exponent order, variables written `w1, w2, ...`.
impl fmt::Display for OmegaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let constant = exps.iter().all(|&a| a == 0);
            let mut need_space = false;
            if !magnitude.is_one() || constant {
                write!(f, "{}", magnitude)?;
                need_space = true;
            }
            for (v, &a) in exps.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if need_space {
                    f.write_str(" ")?;
                }
                write!(f, "w{}", v + 1)?;
                if a > 1 {
                    write!(f, "^{}", a)?;
                }
                need_space = true;
            }
        }
        Ok(())
    }
}

/// Coefficient of `t^alpha` in `P^q_{w,k,n}`:
/// `sum_{j=0}^{|a|-1} C(|a|-1, j) B_{-j}(q) D_{|a|-j-1}(w^a) / (a1! ... ak!)`.
///
/// The divisor is the product of factorials of the multiplicities; it is what
/// makes the all-ones weights reproduce the Fibonacci root coefficients.
pub fn wip_root_coeff(omega: &WeightVector, alpha: &ExponentVector, q: &Rational) -> Rational {
    let norm = alpha.norm();
    assert!(norm >= 1, "root coefficients are defined for |alpha| >= 1");
    let base = OmegaPolynomial::monomial(alpha.multiplicities().to_vec(), Rational::one());
    // derivatives[d] = D_d(w^alpha) evaluated at the weights.
    let mut derivatives = Vec::with_capacity(norm);
    let mut current = base;
    for _ in 0..norm {
        derivatives.push(current.evaluate(omega));
        current = current.total_derivative_once();
    }
    let mut total = Rational::zero();
    for j in 0..norm {
        let binom = Rational::from_integer(partition::binomial(norm - 1, j).into());
        total += binom * stirling_b(-(j as i64), q) * &derivatives[norm - j - 1];
    }
    total / Rational::from_integer(partition::factorial_product(alpha).into())
}

/// `P^q_{w,k,n}`; degree 0 is the constant 1.
pub fn wip_root(omega: &WeightVector, k: usize, n: usize, q: &Rational) -> IsobaricPoly {
    if n == 0 {
        return IsobaricPoly::one(k);
    }
    let terms = partition::enumerate(n, k).into_iter().map(|alpha| {
        let c = wip_root_coeff(omega, &alpha, q);
        (alpha, c)
    });
    IsobaricPoly::from_terms(n, k, terms).expect("enumerated vectors have degree n")
}

/// The sequence `(F^q_{k,0}, F^q_{k,1}, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfpRoot {
    pub q: Rational,
    pub k: usize,
}

impl PolySequence for GfpRoot {
    fn k(&self) -> usize {
        self.k
    }

    fn term(&self, n: usize) -> IsobaricPoly {
        gfp_root_closed(&self.q, self.k, n)
    }
}

/// The sequence `(P^q_{w,k,0}, P^q_{w,k,1}, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WipRoot {
    pub omega: WeightVector,
    pub q: Rational,
    pub k: usize,
}

impl PolySequence for WipRoot {
    fn k(&self) -> usize {
        self.k
    }

    fn term(&self, n: usize) -> IsobaricPoly {
        wip_root(&self.omega, self.k, n, &self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isopoly::gfp;
    use crate::{rat, ratio};
    use alloc::string::ToString;

    #[test]
    fn stirling_operator_values() {
        let q = ratio(7, 3);
        assert_eq!(stirling_b(0, &q), q);
        assert_eq!(stirling_b(2, &rat(3)), rat(60));
        assert_eq!(stirling_b(-2, &ratio(1, 2)), ratio(3, 8));
        assert_eq!(stirling_b(-1, &rat(1)), rat(0));
    }

    #[test]
    fn stirling_triangle_rows() {
        let as_u: Vec<Vec<u32>> = (1..=3)
            .map(|m| {
                stirling1_expand(m)
                    .iter()
                    .map(|c| u32::try_from(c).unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(as_u, vec![vec![1], vec![1, 1], vec![2, 3, 1]]);
    }

    #[test]
    fn root_degree_two() {
        // (1/2) q (q+1) t1^2 + q t2 at q = 2/3.
        let q = ratio(2, 3);
        let p = gfp_root_closed(&q, 3, 2);
        assert_eq!(p.coeff_of(&[2, 0, 0]), ratio(1, 2) * &q * (&q + rat(1)));
        assert_eq!(p.coeff_of(&[0, 1, 0]), q);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn root_special_exponents() {
        for n in 0..6 {
            assert_eq!(gfp_root_closed(&rat(1), 3, n), gfp(3, n));
        }
        assert_eq!(gfp_root_closed(&rat(0), 3, 0), IsobaricPoly::one(3));
        assert!(gfp_root_closed(&rat(0), 3, 4).is_zero());
    }

    #[test]
    fn root_matrix_cells() {
        let q = ratio(5, 7);
        let m = gfp_root_matrix(&q, 4, 3, Superdiagonal::Minus);
        assert_eq!(m.cell(3, 2).coeff, (rat(2) * &q + rat(1)) / rat(3));
        assert_eq!(m.cell(3, 2).part, Some(2));
        let m4 = gfp_root_matrix(&q, 4, 4, Superdiagonal::Minus);
        assert_eq!(m4.cell(4, 3).coeff, (rat(2) * &q + rat(2)) / rat(4));
        let m1 = gfp_root_matrix(&q, 4, 1, Superdiagonal::Plus);
        assert_eq!(m1.cell(1, 1), &Cell::monomial(q, 1, 4));
    }

    #[test]
    fn stirling_matrix_cells_and_degeneracy() {
        let q = ratio(1, 2);
        let m = gfp_root_stirling_matrix(&q, 3, 3).unwrap();
        assert_eq!(m.cell(2, 2).coeff, (&q + rat(1)) / rat(2));
        assert_eq!(m.cell(3, 2).coeff, (rat(2) * &q + rat(1)) / rat(3));
        assert!(matches!(
            gfp_root_stirling_matrix(&rat(-1), 3, 3),
            Err(Error::DegenerateQ { .. })
        ));
        assert!(gfp_root_stirling_matrix(&rat(-1), 3, 2).is_ok());
        assert!(gfp_root_stirling_matrix(&rat(-2), 3, 3).is_ok());
        assert!(gfp_root_stirling_matrix(&rat(0), 3, 1).is_ok());
    }

    #[test]
    fn total_derivatives() {
        let m = OmegaPolynomial::monomial(vec![3, 2], rat(1));
        assert_eq!(
            m.total_derivative(2).to_string(),
            "2 w1^3 + 12 w1^2 w2 + 6 w1 w2^2"
        );
        assert_eq!(m.total_derivative(0), m);
        let w1w2 = OmegaPolynomial::monomial(vec![1, 1], rat(1));
        assert_eq!(w1w2.total_derivative(1).to_string(), "w1 + w2");
    }

    #[test]
    fn wip_root_low_degree() {
        let w = WeightVector::explicit(vec![rat(3), rat(-2), rat(5)]);
        let q = ratio(3, 4);
        let p1 = wip_root(&w, 3, 1, &q);
        assert_eq!(p1.coeff_of(&[1, 0, 0]), &q * rat(3));
        assert_eq!(p1.len(), 1);
    }
}
