//! The benchmark problem catalogue and analytic true-front sampling.

mod dtlz;
mod wfg;
mod zdt;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::problem::{ObjectiveVector, ProblemSpec};
use crate::refpoints::{binomial, ReferencePointSet};

pub use wfg::{on_front_decision, WFG_K, WFG_M, WFG_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Zdt,
    Dtlz,
    Wfg,
}

/// Identifier of one catalogue entry, e.g. `zdt1` or `wfg4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BenchmarkId {
    pub suite: Suite,
    pub index: u8,
}

impl BenchmarkId {
    pub fn new(suite: Suite, index: u8) -> Result<Self> {
        let valid = match suite {
            Suite::Zdt => matches!(index, 1..=4 | 6),
            Suite::Dtlz => matches!(index, 1..=7),
            Suite::Wfg => matches!(index, 2..=9),
        };
        if valid {
            Ok(Self { suite, index })
        } else {
            Err(Error::UnknownBenchmark(format!("{suite:?}{index}")))
        }
    }

    /// All twenty catalogue problems.
    pub fn all() -> Vec<BenchmarkId> {
        let mut ids = Vec::new();
        for i in [1u8, 2, 3, 4, 6] {
            ids.push(BenchmarkId { suite: Suite::Zdt, index: i });
        }
        for i in 1..=7u8 {
            ids.push(BenchmarkId { suite: Suite::Dtlz, index: i });
        }
        for i in 2..=9u8 {
            ids.push(BenchmarkId { suite: Suite::Wfg, index: i });
        }
        ids
    }

    pub fn objective_count(&self) -> usize {
        match self.suite {
            Suite::Zdt => 2,
            Suite::Dtlz | Suite::Wfg => 3,
        }
    }

    pub fn dimension(&self) -> usize {
        match (self.suite, self.index) {
            (Suite::Zdt, 1..=3) => 30,
            (Suite::Zdt, _) => 10,
            (Suite::Dtlz, 1) => 7,
            (Suite::Dtlz, 7) => 22,
            (Suite::Dtlz, _) => 12,
            (Suite::Wfg, _) => 12,
        }
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suite = match self.suite {
            Suite::Zdt => "zdt",
            Suite::Dtlz => "dtlz",
            Suite::Wfg => "wfg",
        };
        write!(f, "{suite}{}", self.index)
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let (suite, rest) = if let Some(rest) = lower.strip_prefix("zdt") {
            (Suite::Zdt, rest)
        } else if let Some(rest) = lower.strip_prefix("dtlz") {
            (Suite::Dtlz, rest)
        } else if let Some(rest) = lower.strip_prefix("wfg") {
            (Suite::Wfg, rest)
        } else {
            return Err(Error::UnknownBenchmark(s.to_string()));
        };
        let index: u8 = rest
            .parse()
            .map_err(|_| Error::UnknownBenchmark(s.to_string()))?;
        BenchmarkId::new(suite, index).map_err(|_| Error::UnknownBenchmark(s.to_string()))
    }
}

/// Instantiates the standard formulation with the catalogue's dimensions
/// and bounds.
pub fn make_benchmark(id: BenchmarkId) -> ProblemSpec {
    let d = id.dimension();
    let m = id.objective_count();
    let (lower, upper) = match (id.suite, id.index) {
        (Suite::Zdt, 4) => {
            let mut lo = vec![-5.0; d];
            let mut hi = vec![5.0; d];
            lo[0] = 0.0;
            hi[0] = 1.0;
            (lo, hi)
        }
        (Suite::Zdt, _) | (Suite::Dtlz, _) => (vec![0.0; d], vec![1.0; d]),
        (Suite::Wfg, _) => (
            vec![0.0; d],
            (1..=d).map(|i| 2.0 * i as f64).collect(),
        ),
    };
    let index = id.index;
    let evaluator = move |x: &[f64]| -> Vec<f64> {
        match (id.suite, index) {
            (Suite::Zdt, 1) => zdt::zdt1(x),
            (Suite::Zdt, 2) => zdt::zdt2(x),
            (Suite::Zdt, 3) => zdt::zdt3(x),
            (Suite::Zdt, 4) => zdt::zdt4(x),
            (Suite::Zdt, 6) => zdt::zdt6(x),
            (Suite::Dtlz, 1) => dtlz::dtlz1(x, 3),
            (Suite::Dtlz, 2) => dtlz::dtlz2(x, 3),
            (Suite::Dtlz, 3) => dtlz::dtlz3(x, 3),
            (Suite::Dtlz, 4) => dtlz::dtlz4(x, 3),
            (Suite::Dtlz, 5) => dtlz::dtlz5(x, 3),
            (Suite::Dtlz, 6) => dtlz::dtlz6(x, 3),
            (Suite::Dtlz, 7) => dtlz::dtlz7(x, 3),
            (Suite::Wfg, i) => wfg::evaluate(i, x),
            _ => unreachable!("invalid benchmark id"),
        }
    };
    ProblemSpec::new(m, lower, upper, evaluator).expect("catalogue bounds are valid")
}

/// Points sampled from the analytic Pareto front, used as the IGD reference
/// set and the hypervolume normalization basis.
#[derive(Debug, Clone)]
pub struct TruePFSample {
    pub points: Vec<ObjectiveVector>,
    /// Requested target count (filtered fronts may return slightly fewer).
    pub target: usize,
}

impl TruePFSample {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Samples the analytic front of `id` with roughly `n` points.
pub fn sample_true_pf(id: BenchmarkId, n: usize) -> Result<TruePFSample> {
    assert!(n >= 10, "front sample needs at least 10 points");
    let points: Vec<Vec<f64>> = match (id.suite, id.index) {
        (Suite::Zdt, 1) | (Suite::Zdt, 4) => grid01(n)
            .map(|f1| vec![f1, 1.0 - f1.sqrt()])
            .collect(),
        (Suite::Zdt, 2) => grid01(n).map(|f1| vec![f1, 1.0 - f1 * f1]).collect(),
        (Suite::Zdt, 3) => {
            let dense: Vec<Vec<f64>> = grid01(20 * n)
                .map(|f1| {
                    vec![
                        f1,
                        1.0 - f1.sqrt() - f1 * (10.0 * PI * f1).sin(),
                    ]
                })
                .collect();
            thin(nondominated_filter(dense), n)
        }
        (Suite::Zdt, 6) => {
            let f1_min = zdt::zdt6_f1_minimum();
            (0..n)
                .map(|i| {
                    let f1 = f1_min + (1.0 - f1_min) * i as f64 / (n - 1) as f64;
                    vec![f1, 1.0 - f1 * f1]
                })
                .collect()
        }
        (Suite::Dtlz, 1) => simplex_lattice(3, n)
            .into_iter()
            .map(|w| w.iter().map(|&v| 0.5 * v).collect())
            .collect(),
        (Suite::Dtlz, 2) | (Suite::Dtlz, 3) | (Suite::Dtlz, 4) => simplex_lattice(3, n)
            .into_iter()
            .map(|w| {
                let norm = w.iter().map(|&v| v * v).sum::<f64>().sqrt();
                w.iter().map(|&v| v / norm).collect()
            })
            .collect(),
        (Suite::Dtlz, 5) | (Suite::Dtlz, 6) => (0..n)
            .map(|i| {
                let theta = FRAC_PI_2 * i as f64 / (n - 1) as f64;
                vec![
                    theta.cos() * FRAC_PI_4.cos(),
                    theta.cos() * FRAC_PI_4.sin(),
                    theta.sin(),
                ]
            })
            .collect(),
        (Suite::Dtlz, 7) => {
            let side = ((2.5 * n as f64).sqrt().ceil() as usize).clamp(50, 160);
            let mut dense = Vec::with_capacity(side * side);
            for f1 in grid01(side) {
                for f2 in grid01(side) {
                    let h = |v: f64| v * (1.0 + (3.0 * PI * v).sin());
                    dense.push(vec![f1, f2, 6.0 - h(f1) - h(f2)]);
                }
            }
            thin(nondominated_filter(dense), n)
        }
        (Suite::Wfg, 2) => {
            let side = ((2.5 * n as f64).sqrt().ceil() as usize).clamp(50, 160);
            let mut dense = Vec::with_capacity(side * side);
            for x1 in grid01(side) {
                for x2 in grid01(side) {
                    let h = wfg::shapes(2, &[x1, x2]);
                    dense.push(scale_by_two_i(&h));
                }
            }
            thin(nondominated_filter(dense), n)
        }
        (Suite::Wfg, 3) => grid01(n)
            .map(|x1| scale_by_two_i(&wfg::linear_shapes(&[x1, 0.5])))
            .collect(),
        (Suite::Wfg, _) => simplex_lattice(3, n)
            .into_iter()
            .map(|w| {
                let norm = w.iter().map(|&v| v * v).sum::<f64>().sqrt();
                scale_by_two_i(&w.iter().map(|&v| v / norm).collect::<Vec<f64>>())
            })
            .collect(),
        _ => return Err(Error::UnknownBenchmark(id.to_string())),
    };
    let points = points
        .into_iter()
        .map(|p| ObjectiveVector::new(p).expect("front points are finite"))
        .collect();
    Ok(TruePFSample { points, target: n })
}

fn grid01(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| i as f64 / (n - 1) as f64)
}

fn scale_by_two_i(h: &[f64]) -> Vec<f64> {
    h.iter()
        .enumerate()
        .map(|(i, &v)| 2.0 * (i + 1) as f64 * v)
        .collect()
}

/// Das-Dennis lattice with the smallest division count reaching `n` points.
fn simplex_lattice(m: usize, n: usize) -> Vec<Vec<f64>> {
    let mut p = 1;
    while binomial(m + p - 1, p) < n {
        p += 1;
    }
    ReferencePointSet::das_dennis(m, p)
        .expect("valid lattice parameters")
        .points()
        .to_vec()
}

fn nondominated_filter(points: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let dominates = |a: &[f64], b: &[f64]| {
        let mut strict = false;
        for (x, y) in a.iter().zip(b) {
            if x > y {
                return false;
            }
            if x < y {
                strict = true;
            }
        }
        strict
    };
    points
        .iter()
        .filter(|p| !points.iter().any(|q| dominates(q, p)))
        .cloned()
        .collect()
}

/// Deterministic stride-based reduction to at most `n` points.
fn thin(mut points: Vec<Vec<f64>>, n: usize) -> Vec<Vec<f64>> {
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if points.len() <= n {
        return points;
    }
    (0..n)
        .map(|i| points[i * points.len() / n].clone())
        .collect()
}
