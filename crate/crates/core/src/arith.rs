//! Multiplicative arithmetic functions at a single prime.
//!
//! A multiplicative function is fixed by its values on prime powers, and the
//! Dirichlet product restricted to the powers of one prime is the Cauchy
//! product of value lists. Reading the values `v_n` as Fibonacci values
//! `F_{N,n}(t)` of a numerical core recovered from them turns `q`-th
//! convolution roots of the Fibonacci sequence into `q`-th Dirichlet roots.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::roots::gfp_root_closed;
use crate::{Error, Rational, Result};

/// Values `(v_0 = 1, v_1, ..., v_N)` of a multiplicative function at
/// `p^0, ..., p^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMF {
    label: String,
    values: Vec<Rational>,
}

impl LocalMF {
    pub fn new(label: impl Into<String>, values: Vec<Rational>) -> Result<Self> {
        match values.first() {
            Some(v0) if v0.is_one() => Ok(LocalMF {
                label: label.into(),
                values,
            }),
            _ => Err(Error::NotNormalized),
        }
    }

    /// The Dirichlet identity `(1, 0, ..., 0)`.
    pub fn epsilon(n: usize) -> Self {
        let mut values = vec![Rational::zero(); n + 1];
        values[0] = Rational::one();
        LocalMF {
            label: "epsilon".into(),
            values,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Highest prime power `N` carried.
    pub fn truncation(&self) -> usize {
        self.values.len() - 1
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Whether the values agree, ignoring labels.
    pub fn same_values(&self, other: &LocalMF) -> bool {
        self.values == other.values
    }
}

/// Comma-separated values, e.g. `1,1/2,3/8`.
impl fmt::Display for LocalMF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// `(a * b)(p^n) = sum_{i=0}^{n} a(p^i) b(p^{n-i})`.
pub fn dirichlet_convolve_local(a: &LocalMF, b: &LocalMF) -> Result<LocalMF> {
    if a.values.len() != b.values.len() {
        return Err(Error::LengthMismatch {
            left: a.truncation(),
            right: b.truncation(),
        });
    }
    let len = a.values.len();
    let values = (0..len)
        .map(|n| {
            (0..=n).fold(Rational::zero(), |acc, i| {
                acc + &a.values[i] * &b.values[n - i]
            })
        })
        .collect();
    Ok(LocalMF {
        label: format!("{}*{}", a.label, b.label),
        values,
    })
}

/// `m`-fold Dirichlet power; `m = 0` gives epsilon.
pub fn dirichlet_power(f: &LocalMF, m: usize) -> LocalMF {
    let mut acc = LocalMF::epsilon(f.truncation());
    for _ in 0..m {
        acc = dirichlet_convolve_local(&acc, f).expect("same truncation");
    }
    acc.with_label(format!("{}^{}", f.label, m))
}

/// The core `(t_1, ..., t_N)` whose Fibonacci values are `v_1, ..., v_N`:
/// `t_n = v_n - sum_{i=1}^{n-1} t_i v_{n-i}`.
pub fn recover_core(f: &LocalMF) -> Vec<Rational> {
    let v = &f.values;
    let mut t: Vec<Rational> = Vec::with_capacity(f.truncation());
    for n in 1..v.len() {
        let mut tn = v[n].clone();
        for i in 1..n {
            tn -= &t[i - 1] * &v[n - i];
        }
        t.push(tn);
    }
    t
}

/// The `q`-th Dirichlet power: value `n` is `F^q_{N,n}` evaluated at the
/// recovered core. `q = 1` returns the values unchanged, `q = -1` the
/// Dirichlet inverse, `q = 0` epsilon.
pub fn local_power(f: &LocalMF, q: &Rational) -> LocalMF {
    let n_max = f.truncation();
    let label = format!("{}^({})", f.label, q);
    if n_max == 0 {
        return LocalMF::epsilon(0).with_label(label);
    }
    let t = recover_core(f);
    let values = (0..=n_max)
        .map(|n| gfp_root_closed(q, n_max, n).evaluate(&t))
        .collect();
    LocalMF { label, values }
}

/// Whether the `m`-fold Dirichlet power of `f^(1/m)` is `f` again.
pub fn root_verify(f: &LocalMF, m: usize) -> bool {
    assert!(m >= 1, "root order must be positive");
    let q = Rational::new(1.into(), (m as i64).into());
    let root = local_power(f, &q);
    dirichlet_power(&root, m).same_values(f)
}

/// Named multiplicative functions at a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownFunction {
    Zeta,
    Epsilon,
    Mobius,
    Phi,
    Sigma,
    Tau,
    Id,
}

impl KnownFunction {
    pub const ALL: [KnownFunction; 7] = [
        KnownFunction::Zeta,
        KnownFunction::Epsilon,
        KnownFunction::Mobius,
        KnownFunction::Phi,
        KnownFunction::Sigma,
        KnownFunction::Tau,
        KnownFunction::Id,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KnownFunction::Zeta => "zeta",
            KnownFunction::Epsilon => "epsilon",
            KnownFunction::Mobius => "mobius",
            KnownFunction::Phi => "phi",
            KnownFunction::Sigma => "sigma",
            KnownFunction::Tau => "tau",
            KnownFunction::Id => "id",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        KnownFunction::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFunction(name.into()))
    }

    /// Value at `p^n`.
    pub fn at(self, p: u64, n: usize) -> Rational {
        let p = Rational::from_integer(p.into());
        let pow = |e: usize| num_traits::pow(p.clone(), e);
        let int = |v: i64| Rational::from_integer(v.into());
        match (self, n) {
            (_, 0) => Rational::one(),
            (KnownFunction::Zeta, _) => Rational::one(),
            (KnownFunction::Epsilon, _) => Rational::zero(),
            (KnownFunction::Mobius, 1) => int(-1),
            (KnownFunction::Mobius, _) => Rational::zero(),
            (KnownFunction::Phi, _) => pow(n) - pow(n - 1),
            (KnownFunction::Sigma, _) => (pow(n + 1) - int(1)) / (p.clone() - int(1)),
            (KnownFunction::Tau, _) => int(n as i64 + 1),
            (KnownFunction::Id, _) => pow(n),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `(f(1), f(p), ..., f(p^N))` for a named function.
pub fn known_function(name: &str, p: u64, n: usize) -> Result<LocalMF> {
    let f = KnownFunction::from_name(name)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let values = (0..=n).map(|e| f.at(p, e)).collect();
    Ok(LocalMF {
        label: String::from(f.name()),
        values,
    })
}
