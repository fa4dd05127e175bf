//! Self-checks run by the `verify` verb. Each suite counts the identities it
//! compared and stops at the first one that fails.

use isobaric_core::arith::{
    dirichlet_convolve_local, known_function, local_power, root_verify, KnownFunction, LocalMF,
};
use isobaric_core::companion::{companion_window, glp_from_gfp, trace, GenericCore};
use isobaric_core::hessenberg::{rep_check, Superdiagonal};
use isobaric_core::isopoly::{convolve_terms, gfp, glp};
use isobaric_core::partition::{enumerate, factorial, factorial_product, multinomial};
use isobaric_core::roots::{gfp_root_closed, gfp_root_matrix, gfp_root_recursive};
use isobaric_core::{rat, ratio, Rational, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Partitions,
    Hessenberg,
    Roots,
    Companion,
    Mf,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Partitions,
        Suite::Hessenberg,
        Suite::Roots,
        Suite::Companion,
        Suite::Mf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Partitions => "partitions",
            Suite::Hessenberg => "hessenberg",
            Suite::Roots => "roots",
            Suite::Companion => "companion",
            Suite::Mf => "mf",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: usize,
    pub failure: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn line(&self) -> String {
        match &self.failure {
            None => format!("PASS {} ({} checks)", self.suite.name(), self.checks),
            Some(why) => format!(
                "FAIL {} after {} checks: {}",
                self.suite.name(),
                self.checks,
                why
            ),
        }
    }
}

struct Tally {
    checks: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
        if ok {
            self.checks += 1;
            Ok(())
        } else {
            Err(what())
        }
    }
}

pub fn run(suite: Suite, max_n: usize) -> Vec<Report> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    suites
        .into_iter()
        .map(|s| {
            let mut tally = Tally { checks: 0 };
            let result = match s {
                Suite::Partitions => partitions(&mut tally, max_n),
                Suite::Hessenberg => hessenberg(&mut tally, max_n),
                Suite::Roots => roots(&mut tally, max_n),
                Suite::Companion => companion(&mut tally, max_n),
                Suite::Mf => mf(&mut tally, max_n),
                Suite::All => unreachable!(),
            };
            Report {
                suite: s,
                checks: tally.checks,
                failure: result.err(),
            }
        })
        .collect()
}

/// Partitions of `n` with parts at most `k`.
fn partition_count(n: usize, k: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in 1..=k {
        for m in part..=n {
            ways[m] += ways[m - part];
        }
    }
    ways[n]
}

fn partitions(tally: &mut Tally, max_n: usize) -> Result<(), String> {
    for n in 0..=max_n {
        for k in 1..=max_n.max(1) {
            let all = enumerate(n, k);
            tally.check(all.len() == partition_count(n, k), || {
                format!("count n={} k={}", n, k)
            })?;
            for a in &all {
                tally.check(
                    a.degree() == n && multinomial(a) * factorial_product(a) == factorial(a.norm()),
                    || format!("vector {:?}", a.multiplicities()),
                )?;
            }
        }
    }
    Ok(())
}

fn hessenberg(tally: &mut Tally, max_n: usize) -> Result<(), String> {
    let families = [
        WeightVector::ones(),
        WeightVector::identity(),
        WeightVector::explicit(vec![rat(2), rat(3), rat(5), rat(7)]),
    ];
    for omega in &families {
        for k in 1..=4 {
            for n in 1..=max_n {
                tally.check(rep_check(omega, k, n), || {
                    format!("{:?} k={} n={}", omega, k, n)
                })?;
            }
        }
    }
    Ok(())
}

fn roots(tally: &mut Tally, max_n: usize) -> Result<(), String> {
    let grid = [ratio(1, 2), rat(-1), ratio(2, 3), rat(3)];
    for q in &grid {
        for k in 1..=3 {
            for n in 1..=max_n {
                let closed = gfp_root_closed(q, k, n);
                for sup in [Superdiagonal::Minus, Superdiagonal::Plus] {
                    let m = gfp_root_matrix(q, k, n, sup);
                    tally.check(m.polynomial().ok().as_ref() == Some(&closed), || {
                        format!("matrix {:?} q={} k={} n={}", sup, q, k, n)
                    })?;
                }
                tally.check(gfp_root_recursive(q, k, n) == closed, || {
                    format!("recursion q={} k={} n={}", q, k, n)
                })?;
            }
        }
    }
    for k in 1..=3 {
        let half: Vec<_> = (0..=max_n)
            .map(|n| gfp_root_closed(&ratio(1, 2), k, n))
            .collect();
        for n in 0..=max_n {
            let square = convolve_terms(&half, &half, n).map_err(|e| e.to_string())?;
            tally.check(square == gfp(k, n), || {
                format!("square root k={} n={}", k, n)
            })?;
        }
    }
    Ok(())
}

fn companion(tally: &mut Tally, max_n: usize) -> Result<(), String> {
    for k in 1..=4 {
        let core = GenericCore::new(k);
        let w = companion_window(&core, 1 - k as i64, max_n as i64).map_err(|e| e.to_string())?;
        for n in 0..=max_n {
            let row = w.row(n as i64).expect("row in window");
            tally.check(row[k - 1] == gfp(k, n), || {
                format!("rightmost k={} n={}", k, n)
            })?;
        }
        for m in 1..=max_n {
            let block = w.block_ending_at(m as i64).expect("block in window");
            tally.check(trace(&core, &block) == glp(k, m), || {
                format!("trace k={} m={}", k, m)
            })?;
        }
        let g = glp_from_gfp(&core, max_n).map_err(|e| e.to_string())?;
        for (i, v) in g.iter().enumerate() {
            tally.check(*v == glp(k, i + 1), || {
                format!("Newton k={} n={}", k, i + 1)
            })?;
        }
    }
    Ok(())
}

fn mf(tally: &mut Tally, max_n: usize) -> Result<(), String> {
    for p in [2, 3, 5] {
        for f in KnownFunction::ALL {
            let f = known_function(f.name(), p, max_n).map_err(|e| e.to_string())?;
            for m in 2..=3 {
                tally.check(root_verify(&f, m), || {
                    format!("{} p={} m={}", f.label(), p, m)
                })?;
            }
            let inv = local_power(&f, &Rational::from_integer((-1).into()));
            let unit = dirichlet_convolve_local(&f, &inv).map_err(|e| e.to_string())?;
            tally.check(unit.same_values(&LocalMF::epsilon(max_n)), || {
                format!("{} p={} inverse", f.label(), p)
            })?;
        }
    }
    Ok(())
}
