//! Lower Hessenberg matrices with a constant `+1` or `-1` superdiagonal.
//!
//! For such a matrix the leading principal minors obey
//! `M_n = sum_{j=1}^{n} c_j m_{n,n-j+1} M_{n-j}` with `M_0 = 1`, where the
//! sign factor `c_j` is `(-s)^(j-1)` for the determinant and `s^(j-1)` for the
//! permanent (`s` the superdiagonal value). So a `-1` superdiagonal gives the
//! determinant and a `+1` superdiagonal the permanent from the same all-plus
//! recursion.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::companion::{Core, GenericCore, NumericCore};
use crate::{Error, IsobaricPoly, Rational, Result, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Superdiagonal {
    Plus,
    Minus,
}

impl Superdiagonal {
    pub fn value(self) -> i64 {
        match self {
            Superdiagonal::Plus => 1,
            Superdiagonal::Minus => -1,
        }
    }
}

/// Determinant or permanent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expansion {
    Determinant,
    Permanent,
}

/// A cell is a rational, optionally times one variable `t_part`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub coeff: Rational,
    pub part: Option<usize>,
}

impl Cell {
    pub fn constant(coeff: Rational) -> Self {
        Cell { coeff, part: None }
    }

    pub fn zero() -> Self {
        Cell::constant(Rational::zero())
    }

    /// `coeff * t_part`, collapsed to zero when `part > k`.
    pub fn monomial(coeff: Rational, part: usize, k: usize) -> Self {
        if part > k || coeff.is_zero() {
            Cell::zero()
        } else {
            Cell {
                coeff,
                part: Some(part),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.part {
            _ if self.coeff.is_zero() => f.write_str("0"),
            None => write!(f, "{}", self.coeff),
            Some(m) if self.coeff.is_one() => write!(f, "t{}", m),
            Some(m) if self.coeff == -Rational::one() => write!(f, "-t{}", m),
            Some(m) => write!(f, "{} t{}", self.coeff, m),
        }
    }
}

/// Lower Hessenberg matrix of size `n` over parts `1..=k`. Only the cells on
/// or below the diagonal are stored; the superdiagonal is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergMatrix {
    k: usize,
    sup: Superdiagonal,
    rows: Vec<Vec<Cell>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HessenbergValue {
    Numeric(Rational),
    Symbolic(IsobaricPoly),
}

impl fmt::Display for HessenbergValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HessenbergValue::Numeric(v) => write!(f, "{}", v),
            HessenbergValue::Symbolic(p) => write!(f, "{}", p),
        }
    }
}

impl HessenbergMatrix {
    /// `rows[i]` holds columns `1..=i+1` of row `i+1`.
    pub fn from_rows(rows: Vec<Vec<Cell>>, sup: Superdiagonal, k: usize) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidArgument("Hessenberg matrix needs size >= 1"));
        }
        if rows.iter().enumerate().any(|(i, r)| r.len() != i + 1) {
            return Err(Error::InvalidArgument(
                "Hessenberg rows must hold exactly the cells on or below the diagonal",
            ));
        }
        Ok(HessenbergMatrix { k, sup, rows })
    }

    /// Build from a cell function `f(i, j)` for `1 <= j <= i <= n`.
    pub fn from_fn<F>(n: usize, k: usize, sup: Superdiagonal, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Cell,
    {
        assert!(n >= 1, "Hessenberg matrix needs size >= 1");
        let rows = (1..=n)
            .map(|i| (1..=i).map(|j| f(i, j)).collect())
            .collect();
        HessenbergMatrix { k, sup, rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn superdiagonal(&self) -> Superdiagonal {
        self.sup
    }

    /// Cell `(i, j)`, 1-based, for `j <= i`.
    pub fn cell(&self, i: usize, j: usize) -> &Cell {
        &self.rows[i - 1][j - 1]
    }

    /// Full `n x n` grid including the superdiagonal and zeros above it.
    pub fn dense(&self) -> Vec<Vec<Cell>> {
        let n = self.size();
        let sup = Rational::from_integer(self.sup.value().into());
        (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        if j <= i {
                            self.cell(i, j).clone()
                        } else if j == i + 1 {
                            Cell::constant(sup.clone())
                        } else {
                            Cell::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_numeric(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.part.is_none())
    }

    /// Whether every non-zero cell `(i, j)` is a multiple of `t_{i-j+1}`, which
    /// makes the principal minors isobaric.
    pub fn is_isobaric(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, c)| c.is_zero() || c.part == Some(i - j + 1))
        })
    }

    /// All principal minors `M_0..=M_n` under the given expansion, computed in
    /// the value domain of `core`.
    pub fn minors_with<C: Core>(&self, core: &C, expansion: Expansion) -> Vec<C::Value> {
        let s = self.sup.value();
        let step_sign = match expansion {
            Expansion::Determinant => -s,
            Expansion::Permanent => s,
        };
        let n = self.size();
        let mut minors: Vec<C::Value> = Vec::with_capacity(n + 1);
        minors.push(core.constant(Rational::one()));
        for i in 1..=n {
            let mut acc = core.zero(i as i64);
            let mut sign = 1i64;
            for j in 1..=i {
                let cell = self.cell(i, i - j + 1);
                if !cell.is_zero() {
                    let c = if sign == 1 {
                        cell.coeff.clone()
                    } else {
                        -cell.coeff.clone()
                    };
                    let entry = match cell.part {
                        Some(m) => core.t(m, &c),
                        None => core.constant(c),
                    };
                    acc = core.add(&acc, &core.mul(&entry, &minors[i - j]));
                }
                sign *= step_sign;
            }
            minors.push(acc);
        }
        minors
    }

    pub fn evaluate_with<C: Core>(&self, core: &C, expansion: Expansion) -> C::Value {
        self.minors_with(core, expansion)
            .pop()
            .expect("at least one minor")
    }

    /// Determinant for a `-1` superdiagonal, permanent for `+1`.
    pub fn natural_expansion(&self) -> Expansion {
        match self.sup {
            Superdiagonal::Minus => Expansion::Determinant,
            Superdiagonal::Plus => Expansion::Permanent,
        }
    }

    pub fn determinant(&self) -> Result<HessenbergValue> {
        self.value_as(Expansion::Determinant)
    }

    pub fn permanent(&self) -> Result<HessenbergValue> {
        self.value_as(Expansion::Permanent)
    }

    /// The determinant (`-1` superdiagonal) or permanent (`+1`).
    pub fn value(&self) -> Result<HessenbergValue> {
        self.value_as(self.natural_expansion())
    }

    fn value_as(&self, expansion: Expansion) -> Result<HessenbergValue> {
        if self.is_numeric() {
            let core = NumericCore::new(Vec::new());
            return Ok(HessenbergValue::Numeric(
                self.evaluate_with(&core, expansion),
            ));
        }
        if !self.is_isobaric() || self.k == 0 {
            return Err(Error::NotIsobaric);
        }
        let core = GenericCore::new(self.k);
        Ok(HessenbergValue::Symbolic(
            self.evaluate_with(&core, expansion),
        ))
    }

    /// Symbolic value as an isobaric polynomial of degree `n`.
    pub fn polynomial(&self) -> Result<IsobaricPoly> {
        if !self.is_isobaric() || self.k == 0 {
            return Err(Error::NotIsobaric);
        }
        let core = GenericCore::new(self.k);
        Ok(self.evaluate_with(&core, self.natural_expansion()))
    }
}

fn wip_matrix(omega: &WeightVector, k: usize, n: usize, sup: Superdiagonal) -> HessenbergMatrix {
    HessenbergMatrix::from_fn(n, k, sup, |i, j| {
        let part = i - j + 1;
        let coeff = if i == n {
            omega.get(part)
        } else {
            Rational::one()
        };
        Cell::monomial(coeff, part, k)
    })
}

/// `H_+`: unweighted `t`'s above the last row, last row `w_{n-j+1} t_{n-j+1}`,
/// superdiagonal `+1`. Its permanent is `P_{w,k,n}`.
pub fn build_plus(omega: &WeightVector, k: usize, n: usize) -> HessenbergMatrix {
    wip_matrix(omega, k, n, Superdiagonal::Plus)
}

/// `H_-`: as [`build_plus`] with superdiagonal `-1`. Its determinant is
/// `P_{w,k,n}`.
pub fn build_minus(omega: &WeightVector, k: usize, n: usize) -> HessenbergMatrix {
    wip_matrix(omega, k, n, Superdiagonal::Minus)
}

/// `perm H_+ == det H_- == P_{w,k,n}`, compared exactly.
pub fn rep_check(omega: &WeightVector, k: usize, n: usize) -> bool {
    let expected = crate::isopoly::wip_closed(omega, k, n);
    let perm = build_plus(omega, k, n).polynomial();
    let det = build_minus(omega, k, n).polynomial();
    matches!((perm, det), (Ok(p), Ok(d)) if p == expected && d == expected)
}
