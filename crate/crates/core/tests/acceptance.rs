//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#![allow(clippy::needless_range_loop)]

mod common;

use std::process::ExitCode;

use isobaric_core::arith::{
    dirichlet_convolve_local, known_function, local_power, root_verify, KnownFunction, LocalMF,
};
use isobaric_core::companion::{
    companion_window, determinant, different_matrix, glp_from_gfp, trace, GenericCore, NumericCore,
};
use isobaric_core::hessenberg::{
    build_minus, build_plus, Cell, HessenbergMatrix, HessenbergValue, Superdiagonal,
};
use isobaric_core::isopoly::{convolve_terms, gfp, glp, wip_closed};
use isobaric_core::roots::{
    gfp_root_closed, gfp_root_matrix, gfp_root_recursive, gfp_root_stirling_matrix,
    root_recursion_coeff, stirling_b, wip_root,
};
use isobaric_core::{rat, ratio, Error, IsobaricPoly, Rational, WeightVector};
use num_traits::{Signed, Zero};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);
/// Expected terms of one degree: `(n, [(alpha, coeff)])`.
type ExpectedDegree = (usize, Vec<(Vec<u32>, Rational)>);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn q_grid() -> Vec<Rational> {
    vec![ratio(1, 2), rat(-1), ratio(2, 3), rat(3), ratio(-5, 2)]
}

fn hessenberg_representation() -> Outcome {
    let families = [
        ("ones", WeightVector::ones()),
        ("identity", WeightVector::identity()),
        (
            "fixed",
            WeightVector::explicit(vec![
                rat(4),
                rat(-7),
                rat(2),
                rat(11),
                rat(-3),
                rat(5),
                rat(1),
                rat(6),
                rat(-2),
            ]),
        ),
    ];
    for (name, omega) in &families {
        for k in 2..=4 {
            for n in 1..=9 {
                let expected = wip_closed(omega, k, n);
                let perm = build_plus(omega, k, n)
                    .polynomial()
                    .map_err(|e| e.to_string())?;
                let det = build_minus(omega, k, n)
                    .polynomial()
                    .map_err(|e| e.to_string())?;
                ensure(perm == expected && det == expected, || {
                    format!("weights {} k={} n={}", name, k, n)
                })?;
            }
        }
    }
    let printed = wip_closed(
        &WeightVector::explicit(vec![rat(2), rat(3), rat(5), rat(7)]),
        4,
        4,
    );
    ensure(
        printed.to_string() == "2 t1^4 + 7 t1^2 t2 + 7 t1 t3 + 3 t2^2 + 7 t4",
        || format!("n=4 polynomial printed as {}", printed),
    )
}

/// Cells of the 3x3 and 4x4 root matrices written out by hand, row by row.
fn root_matrix_cells(q: &Rational, k: usize) -> Vec<Vec<Cell>> {
    let c = |num_q: i64, num_1: i64, den: i64, part: usize| {
        Cell::monomial((q * rat(num_q) + rat(num_1)) / rat(den), part, k)
    };
    vec![
        vec![c(1, 0, 1, 1)],
        vec![c(1, 0, 1, 2), c(1, 1, 2, 1)],
        vec![c(1, 0, 1, 3), c(2, 1, 3, 2), c(1, 2, 3, 1)],
        vec![c(1, 0, 1, 4), c(3, 1, 4, 3), c(2, 2, 4, 2), c(1, 3, 4, 1)],
    ]
}

fn root_matrix_forms() -> Outcome {
    for q in q_grid() {
        for k in 2..=3 {
            for n in 1..=9 {
                let expected = gfp_root_closed(&q, k, n);
                for sup in [Superdiagonal::Minus, Superdiagonal::Plus] {
                    let got = gfp_root_matrix(&q, k, n, sup)
                        .polynomial()
                        .map_err(|e| e.to_string())?;
                    ensure(got == expected, || {
                        format!("q={} k={} n={} {:?}", q, k, n, sup)
                    })?;
                }
            }
            let by_hand = root_matrix_cells(&q, k);
            for n in 3..=4 {
                let m = gfp_root_matrix(&q, k, n, Superdiagonal::Minus);
                for i in 1..=n {
                    for j in 1..=i {
                        ensure(m.cell(i, j) == &by_hand[i - 1][j - 1], || {
                            format!(
                                "q={} k={} n={} cell ({},{}) is {}",
                                q,
                                k,
                                n,
                                i,
                                j,
                                m.cell(i, j)
                            )
                        })?;
                    }
                }
                let dense = m.dense();
                for i in 1..n {
                    ensure(dense[i - 1][i] == Cell::constant(rat(-1)), || {
                        format!("superdiagonal at row {}", i)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn stirling_matrix_form() -> Outcome {
    for q in q_grid().into_iter().chain([rat(0), rat(-2), rat(-3)]) {
        for k in 2..=3 {
            for n in 1..=9 {
                let degenerate = (0..=n as i64 - 2).any(|m| q == rat(-m));
                match gfp_root_stirling_matrix(&q, k, n) {
                    Ok(m) => {
                        ensure(!degenerate, || format!("q={} n={} accepted", q, n))?;
                        let got = m.polynomial().map_err(|e| e.to_string())?;
                        ensure(got == gfp_root_closed(&q, k, n), || {
                            format!("q={} k={} n={}", q, k, n)
                        })?;
                    }
                    Err(Error::DegenerateQ { .. }) => {
                        ensure(degenerate, || format!("q={} n={} rejected", q, n))?
                    }
                    Err(e) => return Err(format!("q={} n={}: {}", q, n, e)),
                }
            }
        }
    }
    Ok(())
}

fn nested_minor_recursion() -> Outcome {
    for q in q_grid() {
        for k in 1..=4 {
            let f: Vec<IsobaricPoly> = (0..=7).map(|n| gfp_root_closed(&q, k, n)).collect();
            for n in 1..=7 {
                let mut rhs = IsobaricPoly::zero(n, k);
                for j in 1..=n {
                    let expected_s = (&q * rat(j as i64) + rat((n - j) as i64)) / rat(n as i64);
                    ensure(root_recursion_coeff(&q, n, j) == expected_s, || {
                        format!("s_{} at q={} n={}", j, q, n)
                    })?;
                    let s = IsobaricPoly::t(k, j, expected_s);
                    rhs = rhs
                        .add(&s.mul(&f[n - j]).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                }
                ensure(rhs == f[n] && gfp_root_recursive(&q, k, n) == f[n], || {
                    format!("q={} k={} n={}", q, k, n)
                })?;
            }
        }
    }
    Ok(())
}

fn root_group_laws() -> Outcome {
    let conv = |a: &[IsobaricPoly], b: &[IsobaricPoly], n| {
        convolve_terms(a, b, n).map_err(|e| e.to_string())
    };
    for k in 1..=3 {
        let f: Vec<IsobaricPoly> = (0..=8).map(|n| gfp(k, n)).collect();
        for m in 2..=4i64 {
            let root: Vec<_> = (0..=8)
                .map(|n| gfp_root_closed(&ratio(1, m), k, n))
                .collect();
            let mut acc = root.clone();
            for _ in 1..m {
                acc = (0..=8)
                    .map(|n| conv(&acc, &root, n))
                    .collect::<Result<_, _>>()?;
            }
            ensure(acc == f, || format!("m={} k={}", m, k))?;
        }
        for a in q_grid() {
            let fa: Vec<_> = (0..=8).map(|n| gfp_root_closed(&a, k, n)).collect();
            for b in q_grid() {
                let fb: Vec<_> = (0..=8).map(|n| gfp_root_closed(&b, k, n)).collect();
                for n in 0..=8 {
                    ensure(
                        conv(&fa, &fb, n)? == gfp_root_closed(&(&a + &b), k, n),
                        || format!("a={} b={} k={} n={}", a, b, k, n),
                    )?;
                }
            }
        }
        for n in 0..=8 {
            let zero = gfp_root_closed(&rat(0), k, n);
            let identity = if n == 0 {
                IsobaricPoly::one(k)
            } else {
                IsobaricPoly::zero(n, k)
            };
            ensure(zero == identity, || format!("F^0 at k={} n={}", k, n))?;
            ensure(gfp_root_closed(&rat(1), k, n) == f[n], || {
                format!("F^1 at k={} n={}", k, n)
            })?;
        }
    }
    Ok(())
}

fn wip_roots() -> Outcome {
    let weights = [
        vec![rat(2), rat(-3), rat(5)],
        vec![ratio(1, 2), rat(7), rat(-1)],
    ];
    for w in &weights {
        let omega = WeightVector::explicit(w.clone());
        let (w1, w2, w3) = (&w[0], &w[1], &w[2]);
        for q in q_grid() {
            let (qm1, qm2) = (&q - rat(1), &q - rat(2));
            // P^q for n = 1, 2, 3 written out term by term.
            let expected: Vec<ExpectedDegree> = vec![
                (0, vec![(vec![0, 0, 0], rat(1))]),
                (1, vec![(vec![1, 0, 0], &q * w1)]),
                (
                    2,
                    vec![
                        (vec![2, 0, 0], &q * w1 + ratio(1, 2) * &q * &qm1 * w1 * w1),
                        (vec![0, 1, 0], &q * w2),
                    ],
                ),
                (
                    3,
                    vec![
                        (
                            vec![3, 0, 0],
                            &q * w1
                                + &q * &qm1 * w1 * w1
                                + ratio(1, 6) * &q * &qm1 * &qm2 * w1 * w1 * w1,
                        ),
                        (vec![1, 1, 0], &q * (w1 + w2) + &q * &qm1 * w1 * w2),
                        (vec![0, 0, 1], &q * w3),
                    ],
                ),
            ];
            for (n, terms) in expected {
                let want = IsobaricPoly::from_terms(
                    n,
                    3,
                    terms
                        .into_iter()
                        .map(|(a, c)| (isobaric_core::ExponentVector::new(a), c)),
                )
                .map_err(|e| e.to_string())?;
                let got = wip_root(&omega, 3, n, &q);
                ensure(got == want, || {
                    format!("w={:?} q={} n={}: {}", w, q, n, got)
                })?;
            }
        }
    }
    for q in q_grid() {
        for k in 1..=4 {
            for n in 0..=8 {
                ensure(
                    wip_root(&WeightVector::ones(), k, n, &q) == gfp_root_closed(&q, k, n),
                    || format!("unit weights q={} k={} n={}", q, k, n),
                )?;
            }
        }
        // (2, 2) separates the two readings of the denominator.
        let c = wip_root(&WeightVector::ones(), 2, 6, &q).coeff_of(&[2, 2]);
        ensure(c == stirling_b(3, &q) / rat(4), || {
            format!("alpha=(2,2) q={} gives {}", q, c)
        })?;
    }
    Ok(())
}

fn companion_structure() -> Outcome {
    for seed in 0..12u64 {
        let k = 1 + (seed % 3) as usize;
        let mut rng = common::rng(seed);
        let mut t: Vec<Rational> = (0..k)
            .map(|_| common::random_rational(&mut rng, 5))
            .collect();
        if t[k - 1].is_zero() {
            t[k - 1] = rat(1);
        }
        let a = common::companion_dense(&t);
        let core = NumericCore::new(t.clone());
        let w = companion_window(&core, -2 - k as i64, 6).map_err(|e| e.to_string())?;
        for m in -2..=4i64 {
            ensure(w.block_ending_at(m) == Some(common::mat_pow(&a, m)), || {
                format!("block power seed={} k={} m={}", seed, k, m)
            })?;
        }
        for n in 0..=6usize {
            ensure(
                w.row(n as i64).unwrap()[k - 1] == gfp(k, n).evaluate(&t),
                || format!("rightmost seed={} n={}", seed, n),
            )?;
        }
        for m in 1..=6i64 {
            let block = w.block_ending_at(m).unwrap();
            ensure(
                trace(&core, &block) == glp(k, m as usize).evaluate(&t),
                || format!("trace seed={} m={}", seed, m),
            )?;
        }
    }
    for k in 1..=4 {
        let core = GenericCore::new(k);
        let w = companion_window(&core, 1 - k as i64, 6).map_err(|e| e.to_string())?;
        for m in 1..=6i64 {
            ensure(
                trace(&core, &w.block_ending_at(m).unwrap()) == glp(k, m as usize),
                || format!("symbolic trace k={} m={}", k, m),
            )?;
        }
    }
    let fib = NumericCore::new(vec![rat(1), rat(1)]);
    let w = companion_window(&fib, 0, 6).map_err(|e| e.to_string())?;
    let want: Vec<Rational> = [1, 1, 2, 3, 5, 8, 13].into_iter().map(rat).collect();
    ensure(w.rightmost() == want, || {
        format!("Fibonacci fixture {:?}", w.rightmost())
    })?;
    let lucas = glp_from_gfp(&fib, 5).map_err(|e| e.to_string())?;
    let want: Vec<Rational> = [1, 3, 4, 7, 11].into_iter().map(rat).collect();
    ensure(lucas == want, || format!("Lucas fixture {:?}", lucas))
}

fn newton_consistency() -> Outcome {
    for k in 1..=4 {
        let g = glp_from_gfp(&GenericCore::new(k), 8).map_err(|e| e.to_string())?;
        for (i, v) in g.iter().enumerate() {
            ensure(*v == glp(k, i + 1), || format!("k={} n={}", k, i + 1))?;
        }
    }
    Ok(())
}

fn dirichlet_roots() -> Outcome {
    let get = |name: &str, p| known_function(name, p, 8).map_err(|e| e.to_string());
    let subjects = [
        get("zeta", 2)?,
        get("phi", 2)?,
        get("phi", 3)?,
        get("sigma", 2)?,
        get("tau", 3)?,
        get("mobius", 5)?,
    ];
    for f in &subjects {
        for m in 2..=3 {
            ensure(root_verify(f, m), || format!("{} m={}", f, m))?;
        }
    }
    let half = local_power(&get("zeta", 3)?, &ratio(1, 2));
    ensure(
        half.values()[..5]
            == [
                rat(1),
                ratio(1, 2),
                ratio(3, 8),
                ratio(5, 16),
                ratio(35, 128),
            ],
        || format!("zeta^(1/2) = {}", half),
    )?;
    for p in [2, 3, 5] {
        for f in KnownFunction::ALL {
            let f = get(f.name(), p)?;
            let unit = dirichlet_convolve_local(&f, &local_power(&f, &rat(-1)))
                .map_err(|e| e.to_string())?;
            ensure(unit.same_values(&LocalMF::epsilon(8)), || {
                format!("{} p={}", f.label(), p)
            })?;
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for case in 0..100u64 {
        let n = 1 + (case % 7) as usize;
        let sup = if case % 2 == 0 {
            Superdiagonal::Minus
        } else {
            Superdiagonal::Plus
        };
        let mut rng = common::rng(10_000 + case);
        let m = HessenbergMatrix::from_fn(n, 0, sup, |_, _| {
            Cell::constant(common::random_rational(&mut rng, 6))
        });
        let dense: common::Dense = m
            .dense()
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.coeff).collect())
            .collect();
        let (det, perm) = common::naive_det_perm(&dense);
        let want = |v: Rational| Ok::<_, String>(HessenbergValue::Numeric(v));
        ensure(
            m.determinant().map_err(|e| e.to_string()) == want(det),
            || format!("det case {}", case),
        )?;
        ensure(
            m.permanent().map_err(|e| e.to_string()) == want(perm),
            || format!("perm case {}", case),
        )?;
    }
    Ok(())
}

fn different_determinant() -> Outcome {
    let mut rng = common::rng(4242);
    for case in 0..20 {
        let t = vec![
            common::random_rational(&mut rng, 9),
            common::random_rational(&mut rng, 9),
        ];
        let core = NumericCore::new(t.clone());
        let d = determinant(&core, &different_matrix(&core));
        let disc = &t[0] * &t[0] + rat(4) * &t[1];
        ensure(d.abs() == disc.abs(), || {
            format!("case {}: det D = {}, t = {:?}", case, d, t)
        })?;
        // The determinant carries the opposite sign.
        ensure(d == -disc, || format!("case {}: sign", case))?;
    }
    let core = GenericCore::new(2);
    let symbolic = determinant(&core, &different_matrix(&core));
    ensure(symbolic.to_string() == "-t1^2 - 4 t2", || {
        format!("symbolic det D = {}", symbolic)
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "Hessenberg determinant/permanent representation of weighted polynomials",
            hessenberg_representation,
        ),
        (
            "root matrices: determinant and permanent equal the closed form",
            root_matrix_forms,
        ),
        (
            "Stirling-operator matrix equals the closed form; degenerate q rejected",
            stirling_matrix_form,
        ),
        ("nested-minor recursion for roots", nested_minor_recursion),
        ("root group laws", root_group_laws),
        (
            "weighted roots: explicit low degrees and unit weights",
            wip_roots,
        ),
        (
            "companion windows: powers, Fibonacci column, Lucas traces",
            companion_structure,
        ),
        (
            "Lucas values recovered from Fibonacci values",
            newton_consistency,
        ),
        (
            "Dirichlet roots and inverses at prime powers",
            dirichlet_roots,
        ),
        (
            "Hessenberg recursion matches Leibniz expansion",
            oracle_equivalence,
        ),
        (
            "different matrix determinant versus discriminant",
            different_determinant,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS [{}] {}", i + 1, name),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {}: {}", i + 1, name, why);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
