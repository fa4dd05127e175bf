//! Independent oracles shared by the integration tests. Nothing here calls
//! into the recursions it is used to check.

#![allow(dead_code)]

use isobaric_core::{rat, Rational};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Dense = Vec<Vec<Rational>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut ChaCha8Rng, span: i64) -> Rational {
    let num = rng.gen_range(-span..=span);
    let den = rng.gen_range(1..=4);
    Rational::new(num.into(), den.into())
}

/// All permutations of `0..n` with their signs (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(k: usize, p: &mut Vec<usize>, sign: &mut i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k <= 1 {
            out.push((p.clone(), *sign));
            return;
        }
        for i in 0..k - 1 {
            go(k - 1, p, sign, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
            *sign = -*sign;
        }
        go(k - 1, p, sign, out);
    }
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    let mut sign = 1;
    go(n, &mut p, &mut sign, &mut out);
    out
}

/// Leibniz expansion: returns (determinant, permanent).
pub fn naive_det_perm(m: &Dense) -> (Rational, Rational) {
    let n = m.len();
    let mut det = Rational::zero();
    let mut perm = Rational::zero();
    for (p, sign) in permutations(n) {
        let prod = (0..n).fold(Rational::one(), |acc, i| acc * &m[i][p[i]]);
        perm += &prod;
        det += prod * rat(sign);
    }
    (det, perm)
}

pub fn identity(k: usize) -> Dense {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { rat(1) } else { rat(0) })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).fold(Rational::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn mat_inverse(a: &Dense) -> Option<Dense> {
    let n = a.len();
    let mut aug: Dense = a
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (v, p) in aug[r].iter_mut().zip(pivot_row) {
                    *v -= &f * p;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_pow(a: &Dense, e: i64) -> Dense {
    let base = if e < 0 {
        mat_inverse(a).expect("invertible")
    } else {
        a.clone()
    };
    (0..e.unsigned_abs()).fold(identity(a.len()), |acc, _| mat_mul(&acc, &base))
}

/// The companion matrix written out directly from its definition.
pub fn companion_dense(t: &[Rational]) -> Dense {
    let k = t.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i + 1 == k {
                        t[k - 1 - j].clone()
                    } else if j == i + 1 {
                        rat(1)
                    } else {
                        rat(0)
                    }
                })
                .collect()
        })
        .collect()
}

/// Every vector `(a1..ak)` with entries `<= n` and `sum j aj = n`, by brute force.
pub fn brute_partitions(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let total = (n + 1).pow(k as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<u32> = (0..k)
            .map(|_| {
                let d = (c % (n + 1)) as u32;
                c /= n + 1;
                d
            })
            .collect();
        let deg: usize = v
            .iter()
            .enumerate()
            .map(|(i, &a)| (i + 1) * a as usize)
            .sum();
        if deg == n {
            out.push(v);
        }
    }
    out
}

/// Partitions of `n` into parts `<= k`, by the textbook recursion.
pub fn count_partitions(n: usize, k: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let with_k = if n >= k {
        count_partitions(n - k, k)
    } else {
        0
    };
    with_k + count_partitions(n, k - 1)
}

/// Numeric linear recurrence `x_n = sum_{j=1}^{k} t_j x_{n-j}` from seeds.
pub fn linear_recurrence(t: &[Rational], seeds: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = seeds.to_vec();
    while out.len() < len {
        let n = out.len();
        let next = t
            .iter()
            .enumerate()
            .filter(|(j, _)| *j < n)
            .fold(Rational::zero(), |acc, (j, tj)| acc + tj * &out[n - 1 - j]);
        out.push(next);
    }
    out.truncate(len);
    out
}

pub fn fibonacci(len: usize) -> Vec<i64> {
    let mut v = vec![1i64, 1];
    while v.len() < len {
        let n = v.len();
        v.push(v[n - 1] + v[n - 2]);
    }
    v.truncate(len);
    v
}

/// Lucas numbers starting at L_0 = 2.
pub fn lucas(len: usize) -> Vec<i64> {
    let mut v = vec![2i64, 1];
    while v.len() < len {
        let n = v.len();
        v.push(v[n - 1] + v[n - 2]);
    }
    v.truncate(len);
    v
}
