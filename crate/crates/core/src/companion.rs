//! Companion matrix of a core polynomial `X^k - t1 X^(k-1) - ... - tk`, windows
//! of its doubly infinite row orbit, and the different matrix.
//!
//! Rows of the infinite companion matrix are labelled so that row `n` ends in
//! `F_{k,n}`: row 0 is the last unit row `e_k`, row `n + 1` is row `n` times
//! `A_k`, and rows below 0 come from `A_k^{-1}`. With that labelling the
//! `k x k` block made of rows `m-k+1 ..= m` equals `A_k^m`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_traits::{One, Zero};

use crate::{Error, IsobaricPoly, Rational, Result};

/// Coefficient domain of a core polynomial: either evaluated `t`'s or the
/// formal generators `t1..tk`.
pub trait Core {
    type Value: Clone + PartialEq + Debug;

    fn k(&self) -> usize;
    /// `c * t_j`, which is zero for `j > k`.
    fn t(&self, j: usize, c: &Rational) -> Self::Value;
    /// A scalar, of isobaric degree 0.
    fn constant(&self, c: Rational) -> Self::Value;
    /// Zero of the given isobaric degree.
    fn zero(&self, degree: i64) -> Self::Value;
    fn is_zero(&self, v: &Self::Value) -> bool;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, a: &Self::Value, c: &Rational) -> Self::Value;
    /// `a * t_j`.
    fn times_t(&self, a: &Self::Value, j: usize) -> Self::Value;
    /// `a / t_k`, when defined.
    fn div_tk(&self, a: &Self::Value, degree: i64) -> Result<Self::Value>;

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.add(a, &self.scale(b, &-Rational::one()))
    }
}

/// Numerical core: `t1..tk` evaluated to rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericCore {
    t: Vec<Rational>,
}

impl NumericCore {
    pub fn new(t: Vec<Rational>) -> Self {
        NumericCore { t }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.t
    }

    pub fn is_singular(&self) -> bool {
        self.t.last().is_none_or(Zero::is_zero)
    }
}

impl Core for NumericCore {
    type Value = Rational;

    fn k(&self) -> usize {
        self.t.len()
    }

    fn t(&self, j: usize, c: &Rational) -> Rational {
        match self.t.get(j.wrapping_sub(1)) {
            Some(tj) if j >= 1 => tj * c,
            _ => Rational::zero(),
        }
    }

    fn constant(&self, c: Rational) -> Rational {
        c
    }

    fn zero(&self, _degree: i64) -> Rational {
        Rational::zero()
    }

    fn is_zero(&self, v: &Rational) -> bool {
        v.is_zero()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn scale(&self, a: &Rational, c: &Rational) -> Rational {
        a * c
    }

    fn times_t(&self, a: &Rational, j: usize) -> Rational {
        self.t(j, a)
    }

    fn div_tk(&self, a: &Rational, _degree: i64) -> Result<Rational> {
        match self.t.last() {
            Some(tk) if !tk.is_zero() => Ok(a / tk),
            _ => Err(Error::SingularCore),
        }
    }
}

/// Generic core: the `t_j` are formal variables and values are
/// [`IsobaricPoly`]s.
///
/// Zero is treated as degree-free: structurally zero entries whose isobaric
/// degree would be negative are stored as the zero polynomial of degree 0,
/// and adding zero to anything returns the other operand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericCore {
    k: usize,
}

impl GenericCore {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "part bound must be positive");
        GenericCore { k }
    }
}

impl Core for GenericCore {
    type Value = IsobaricPoly;

    fn k(&self) -> usize {
        self.k
    }

    fn t(&self, j: usize, c: &Rational) -> IsobaricPoly {
        IsobaricPoly::t(self.k, j, c.clone())
    }

    fn constant(&self, c: Rational) -> IsobaricPoly {
        IsobaricPoly::constant(self.k, c)
    }

    fn zero(&self, degree: i64) -> IsobaricPoly {
        IsobaricPoly::zero(degree.max(0) as usize, self.k)
    }

    fn is_zero(&self, v: &IsobaricPoly) -> bool {
        v.is_zero()
    }

    fn add(&self, a: &IsobaricPoly, b: &IsobaricPoly) -> IsobaricPoly {
        if a.is_zero() && a.degree() != b.degree() {
            return b.clone();
        }
        if b.is_zero() && a.degree() != b.degree() {
            return a.clone();
        }
        a.add(b).expect("isobaric degrees agree")
    }

    fn mul(&self, a: &IsobaricPoly, b: &IsobaricPoly) -> IsobaricPoly {
        a.mul(b).expect("same part bound")
    }

    fn scale(&self, a: &IsobaricPoly, c: &Rational) -> IsobaricPoly {
        a.scale(c)
    }

    fn times_t(&self, a: &IsobaricPoly, j: usize) -> IsobaricPoly {
        a.monomial_mul(j)
    }

    fn div_tk(&self, a: &IsobaricPoly, degree: i64) -> Result<IsobaricPoly> {
        if a.is_zero() {
            Ok(self.zero(degree))
        } else {
            Err(Error::NegativeSymbolicRow(degree))
        }
    }
}

pub type Matrix<V> = Vec<Vec<V>>;

/// The `k x k` companion matrix: ones on the superdiagonal and last row
/// `(t_k, ..., t_1)`.
pub fn companion_matrix<C: Core>(core: &C) -> Matrix<C::Value> {
    let k = core.k();
    let one = Rational::one();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    // Entry (i, j) of the companion matrix has isobaric degree i - j + 1.
                    let degree = i as i64 - j as i64 + 1;
                    if i + 1 == k {
                        core.t(k - j, &one)
                    } else if j == i + 1 {
                        core.constant(one.clone())
                    } else {
                        core.zero(degree)
                    }
                })
                .collect()
        })
        .collect()
}

/// `row * A_k`.
fn step_forward<C: Core>(core: &C, row: &[C::Value]) -> Vec<C::Value> {
    let k = core.k();
    let last = &row[k - 1];
    let mut next = Vec::with_capacity(k);
    next.push(core.times_t(last, k));
    for j in 2..=k {
        next.push(core.add(&row[j - 2], &core.times_t(last, k - j + 1)));
    }
    next
}

/// `row * A_k^{-1}`, where `row` carries label `label` and its column-`j`
/// entry has degree `label + offset - j`.
fn step_backward<C: Core>(
    core: &C,
    row: &[C::Value],
    label: i64,
    offset: i64,
) -> Result<Vec<C::Value>> {
    let k = core.k();
    let prev_label = label - 1;
    let last = core.div_tk(&row[0], prev_label + offset - k as i64)?;
    let mut prev = Vec::with_capacity(k);
    for j in 2..=k {
        prev.push(core.sub(&row[j - 1], &core.times_t(&last, k - j + 1)));
    }
    prev.push(last);
    Ok(prev)
}

/// Rows `lo ..= hi` of the orbit of a seed row under right multiplication by
/// `A_k` (and `A_k^{-1}` below the seed).
#[derive(Clone, Debug, PartialEq)]
pub struct CompanionWindow<V> {
    k: usize,
    lo: i64,
    rows: Vec<Vec<V>>,
}

impl<V: Clone> CompanionWindow<V> {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.rows.len() as i64 - 1
    }

    pub fn rows(&self) -> &[Vec<V>] {
        &self.rows
    }

    pub fn row(&self, label: i64) -> Option<&[V]> {
        let idx = usize::try_from(label - self.lo).ok()?;
        self.rows.get(idx).map(Vec::as_slice)
    }

    /// Column `j` (1-based from the left) over the window's rows.
    pub fn column(&self, j: usize) -> Vec<V> {
        self.rows.iter().map(|r| r[j - 1].clone()).collect()
    }

    pub fn rightmost(&self) -> Vec<V> {
        self.column(self.k)
    }

    /// The `k x k` block whose last row is row `m`, when it lies in the window.
    pub fn block_ending_at(&self, m: i64) -> Option<Matrix<V>> {
        let first = m - self.k as i64 + 1;
        (first..=m)
            .map(|label| self.row(label).map(<[V]>::to_vec))
            .collect()
    }
}

fn orbit<C: Core>(
    core: &C,
    seed: Vec<C::Value>,
    offset: i64,
    lo: i64,
    hi: i64,
) -> Result<CompanionWindow<C::Value>> {
    if lo > hi {
        return Err(Error::InvalidArgument("window needs lo <= hi"));
    }
    let mut below = Vec::new();
    let mut current = seed.clone();
    let mut label = 0;
    while label > lo {
        current = step_backward(core, &current, label, offset)?;
        label -= 1;
        if label <= hi {
            below.push(current.clone());
        }
    }
    below.reverse();
    let mut rows = below;
    let mut current = seed;
    let mut label = 0;
    loop {
        if label >= lo && label <= hi {
            rows.push(current.clone());
        }
        if label >= hi {
            break;
        }
        current = step_forward(core, &current);
        label += 1;
    }
    Ok(CompanionWindow {
        k: core.k(),
        lo,
        rows,
    })
}

/// Rows `lo ..= hi` of the infinite companion matrix. Row `n` ends in
/// `F_{k,n}`; negative rows need an invertible core.
pub fn companion_window<C: Core>(core: &C, lo: i64, hi: i64) -> Result<CompanionWindow<C::Value>> {
    let k = core.k();
    if k == 0 {
        return Err(Error::InvalidArgument(
            "core needs at least one coefficient",
        ));
    }
    let seed: Vec<C::Value> = (1..=k)
        .map(|j| {
            if j == k {
                core.constant(Rational::one())
            } else {
                core.zero((k - j) as i64)
            }
        })
        .collect();
    // Entry (n, j) has isobaric degree n + k - j.
    orbit(core, seed, k as i64, lo, hi)
}

/// Row `0` of the different matrix: the coefficients of the derivative of the
/// core polynomial, `(-t_{k-1}, -2 t_{k-2}, ..., -(k-1) t_1, k)`.
fn different_seed<C: Core>(core: &C) -> Vec<C::Value> {
    let k = core.k();
    (1..=k)
        .map(|j| {
            if j == k {
                core.constant(Rational::from_integer(k.into()))
            } else {
                core.t(k - j, &-Rational::from_integer(j.into()))
            }
        })
        .collect()
}

/// The `k x k` different matrix: row 0 is the derivative row and each further
/// row is the previous one times `A_k`.
pub fn different_matrix<C: Core>(core: &C) -> Matrix<C::Value> {
    let k = core.k();
    let mut rows = vec![different_seed(core)];
    while rows.len() < k {
        let next = step_forward(core, rows.last().expect("non-empty"));
        rows.push(next);
    }
    rows
}

/// Rows `lo ..= hi` of the infinite different matrix; row `n` ends in `G_{k,n}`.
pub fn different_window<C: Core>(core: &C, lo: i64, hi: i64) -> Result<CompanionWindow<C::Value>> {
    if core.k() == 0 {
        return Err(Error::InvalidArgument(
            "core needs at least one coefficient",
        ));
    }
    orbit(core, different_seed(core), core.k() as i64, lo, hi)
}

/// `S_{(n, 1^r)}`: the window entry at row `n`, column `k - r`, with the sign
/// `(-1)^r` removed.
pub fn schur_hook<C: Core>(core: &C, n: i64, r: usize) -> Result<C::Value> {
    let k = core.k();
    if r >= k {
        return Err(Error::HookOutOfRange { r, k });
    }
    let window = companion_window(core, n, n)?;
    let entry = &window.rows[0][k - r - 1];
    Ok(if r % 2 == 1 {
        core.scale(entry, &-Rational::one())
    } else {
        entry.clone()
    })
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant<C: Core>(core: &C, m: &Matrix<C::Value>) -> C::Value {
    let size = m.len();
    if size == 0 {
        return core.constant(Rational::one());
    }
    if size == 1 {
        return m[0][0].clone();
    }
    let mut total: Option<C::Value> = None;
    for col in 0..size {
        if core.is_zero(&m[0][col]) {
            continue;
        }
        let minor: Matrix<C::Value> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut term = core.mul(&m[0][col], &determinant(core, &minor));
        if col % 2 == 1 {
            term = core.scale(&term, &-Rational::one());
        }
        total = Some(match total {
            None => term,
            Some(acc) => core.add(&acc, &term),
        });
    }
    total.unwrap_or_else(|| core.zero(0))
}

/// `G_1 ..= G_count` recovered from the Fibonacci values through
/// `n F_n = sum_{i=1}^{n} G_i F_{n-i}`.
pub fn glp_from_gfp<C: Core>(core: &C, count: usize) -> Result<Vec<C::Value>> {
    let window = companion_window(core, 0, count as i64)?;
    let f = window.rightmost();
    let mut g: Vec<C::Value> = Vec::with_capacity(count);
    for n in 1..=count {
        let mut value = core.scale(&f[n], &Rational::from_integer(n.into()));
        for i in 1..n {
            value = core.sub(&value, &core.mul(&g[i - 1], &f[n - i]));
        }
        g.push(value);
    }
    Ok(g)
}

/// Trace of a square matrix.
pub fn trace<C: Core>(core: &C, m: &Matrix<C::Value>) -> C::Value {
    m.iter()
        .enumerate()
        .map(|(i, row)| row[i].clone())
        .reduce(|acc, v| core.add(&acc, &v))
        .unwrap_or_else(|| core.zero(0))
}
