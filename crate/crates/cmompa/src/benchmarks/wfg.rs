//! WFG test problems 2-9 (three objectives, four position and eight
//! distance parameters), built from the standard transformation toolkit.

use std::f64::consts::{FRAC_PI_2, PI};

/// Position-parameter count for the d=12, m=3 instantiation.
pub const WFG_K: usize = 4;
pub const WFG_M: usize = 3;
pub const WFG_N: usize = 12;

fn correct_to_01(v: f64) -> f64 {
    debug_assert!(
        (-1e-8..=1.0 + 1e-8).contains(&v),
        "transformation result {v} far outside [0, 1]"
    );
    v.clamp(0.0, 1.0)
}

// ---- transformation functions -----------------------------------------

fn s_linear(y: f64, a: f64) -> f64 {
    correct_to_01((y - a).abs() / ((a - y).floor() + a).abs())
}

fn s_decept(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let tmp1 = (y - a + b).floor() * (1.0 - c + (a - b) / b) / (a - b);
    let tmp2 = (a + b - y).floor() * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    correct_to_01(1.0 + ((y - a).abs() - b) * (tmp1 + tmp2 + 1.0 / b))
}

fn s_multi(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let tmp1 = (y - c).abs() / (2.0 * ((c - y).floor() + c));
    let tmp2 = (4.0 * a + 2.0) * PI * (0.5 - tmp1);
    correct_to_01((1.0 + tmp2.cos() + 4.0 * b * tmp1 * tmp1) / (b + 2.0))
}

fn b_param(y: f64, u: f64, a: f64, b: f64, c: f64) -> f64 {
    let v = a - (1.0 - 2.0 * u) * ((0.5 - u).floor() + a).abs();
    correct_to_01(y.powf(b + (c - b) * v))
}

fn r_sum(ys: &[f64]) -> f64 {
    correct_to_01(ys.iter().sum::<f64>() / ys.len() as f64)
}

fn r_nonsep(ys: &[f64], a: usize) -> f64 {
    let n = ys.len();
    let mut numerator = 0.0;
    for j in 0..n {
        numerator += ys[j];
        for k in 0..a.saturating_sub(1) {
            numerator += (ys[j] - ys[(j + k + 1) % n]).abs();
        }
    }
    let half_up = a.div_ceil(2) as f64;
    let denominator = (n as f64 / a as f64) * half_up * (1.0 + 2.0 * a as f64 - 2.0 * half_up);
    correct_to_01(numerator / denominator)
}

// ---- shape functions ---------------------------------------------------

pub fn linear_shapes(x: &[f64]) -> Vec<f64> {
    let m_total = x.len() + 1;
    (1..=m_total)
        .map(|m| {
            if m == 1 {
                x.iter().product()
            } else if m < m_total {
                x[..m_total - m].iter().product::<f64>() * (1.0 - x[m_total - m])
            } else {
                1.0 - x[0]
            }
        })
        .collect()
}

pub fn convex_shapes(x: &[f64]) -> Vec<f64> {
    let m_total = x.len() + 1;
    let factor = |v: f64| 1.0 - (v * FRAC_PI_2).cos();
    (1..=m_total)
        .map(|m| {
            if m == 1 {
                x.iter().map(|&v| factor(v)).product()
            } else if m < m_total {
                x[..m_total - m].iter().map(|&v| factor(v)).product::<f64>()
                    * (1.0 - (x[m_total - m] * FRAC_PI_2).sin())
            } else {
                1.0 - (x[0] * FRAC_PI_2).sin()
            }
        })
        .collect()
}

pub fn concave_shapes(x: &[f64]) -> Vec<f64> {
    let m_total = x.len() + 1;
    (1..=m_total)
        .map(|m| {
            if m == 1 {
                x.iter().map(|&v| (v * FRAC_PI_2).sin()).product()
            } else if m < m_total {
                x[..m_total - m]
                    .iter()
                    .map(|&v| (v * FRAC_PI_2).sin())
                    .product::<f64>()
                    * (x[m_total - m] * FRAC_PI_2).cos()
            } else {
                (x[0] * FRAC_PI_2).cos()
            }
        })
        .collect()
}

pub fn disc_shape(x1: f64, alpha: f64, beta: f64, a: f64) -> f64 {
    1.0 - x1.powf(alpha) * (a * x1.powf(beta) * PI).cos().powi(2)
}

/// Shape vector of problem `index` over position parameters `x` (values in
/// [0, 1]); used both by evaluation and by true-front sampling.
pub fn shapes(index: u8, x: &[f64]) -> Vec<f64> {
    match index {
        2 => {
            let mut h = convex_shapes(x);
            let m = h.len();
            h[m - 1] = disc_shape(x[0], 1.0, 1.0, 5.0);
            h
        }
        3 => linear_shapes(x),
        4..=9 => concave_shapes(x),
        _ => unreachable!("unsupported WFG index {index}"),
    }
}

fn degeneracy(index: u8, m: usize) -> Vec<f64> {
    if index == 3 {
        let mut a = vec![0.0; m - 1];
        a[0] = 1.0;
        a
    } else {
        vec![1.0; m - 1]
    }
}

const PARAM_A: f64 = 0.98 / 49.98;
const PARAM_B: f64 = 0.02;
const PARAM_C: f64 = 50.0;

/// Reduction of the working vector to m values: equal-weight sums over
/// position groups of size k/(m-1), then over the distance block.
fn reduce_by_sum(y: &[f64], k: usize, m: usize) -> Vec<f64> {
    let group = k / (m - 1);
    let mut t = Vec::with_capacity(m);
    for i in 0..m - 1 {
        t.push(r_sum(&y[i * group..(i + 1) * group]));
    }
    t.push(r_sum(&y[k..]));
    t
}

fn reduce_by_nonsep(y: &[f64], k: usize, m: usize) -> Vec<f64> {
    let group = k / (m - 1);
    let mut t = Vec::with_capacity(m);
    for i in 0..m - 1 {
        t.push(r_nonsep(&y[i * group..(i + 1) * group], group));
    }
    t.push(r_nonsep(&y[k..], y.len() - k));
    t
}

/// Applies the per-problem transition chain to the normalized vector.
fn transitions(index: u8, mut y: Vec<f64>, k: usize, m: usize) -> Vec<f64> {
    let n = y.len();
    match index {
        2 | 3 => {
            for v in y[k..].iter_mut() {
                *v = s_linear(*v, 0.35);
            }
            // Non-separable pairing of the distance block halves its length.
            let mut reduced = y[..k].to_vec();
            let pairs = (n - k) / 2;
            for q in 0..pairs {
                reduced.push(r_nonsep(&y[k + 2 * q..k + 2 * q + 2], 2));
            }
            reduce_by_sum(&reduced, k, m)
        }
        4 => {
            for v in y.iter_mut() {
                *v = s_multi(*v, 30.0, 10.0, 0.35);
            }
            reduce_by_sum(&y, k, m)
        }
        5 => {
            for v in y.iter_mut() {
                *v = s_decept(*v, 0.35, 0.001, 0.05);
            }
            reduce_by_sum(&y, k, m)
        }
        6 => {
            for v in y[k..].iter_mut() {
                *v = s_linear(*v, 0.35);
            }
            reduce_by_nonsep(&y, k, m)
        }
        7 => {
            let raw = y.clone();
            for i in 0..k {
                let u = r_sum(&raw[i + 1..]);
                y[i] = b_param(raw[i], u, PARAM_A, PARAM_B, PARAM_C);
            }
            for v in y[k..].iter_mut() {
                *v = s_linear(*v, 0.35);
            }
            reduce_by_sum(&y, k, m)
        }
        8 => {
            let raw = y.clone();
            for i in k..n {
                let u = r_sum(&raw[..i]);
                y[i] = b_param(raw[i], u, PARAM_A, PARAM_B, PARAM_C);
            }
            for v in y[k..].iter_mut() {
                *v = s_linear(*v, 0.35);
            }
            reduce_by_sum(&y, k, m)
        }
        9 => {
            let raw = y.clone();
            for i in 0..n - 1 {
                let u = r_sum(&raw[i + 1..]);
                y[i] = b_param(raw[i], u, PARAM_A, PARAM_B, PARAM_C);
            }
            for (i, v) in y.iter_mut().enumerate() {
                *v = if i < k {
                    s_decept(*v, 0.35, 0.001, 0.05)
                } else {
                    s_multi(*v, 30.0, 95.0, 0.35)
                };
            }
            reduce_by_nonsep(&y, k, m)
        }
        _ => unreachable!("unsupported WFG index {index}"),
    }
}

/// Full evaluation of WFG problem `index` at raw decision vector `z`
/// (coordinate i bounded by [0, 2(i+1)]).
pub fn evaluate(index: u8, z: &[f64]) -> Vec<f64> {
    let k = WFG_K;
    let m = WFG_M;
    let y: Vec<f64> = z
        .iter()
        .enumerate()
        .map(|(i, &v)| correct_to_01(v / (2.0 * (i + 1) as f64)))
        .collect();
    let t = transitions(index, y, k, m);

    let a = degeneracy(index, m);
    let x_m = t[m - 1];
    let x: Vec<f64> = (0..m - 1)
        .map(|i| x_m.max(a[i]) * (t[i] - 0.5) + 0.5)
        .collect();
    let h = shapes(index, &x);
    (0..m)
        .map(|i| x_m + 2.0 * (i + 1) as f64 * h[i])
        .collect()
}

/// A raw decision vector lying on the Pareto set: the given position values
/// (in [0, 1]) plus the distance settings that zero the distance component.
/// WFG8/9 distance optima depend on the other variables, so those are solved
/// coordinate by coordinate.
pub fn on_front_decision(index: u8, position: &[f64]) -> Vec<f64> {
    assert_eq!(position.len(), WFG_K);
    let mut y = vec![0.0; WFG_N];
    y[..WFG_K].copy_from_slice(position);
    match index {
        2..=7 => {
            for v in y[WFG_K..].iter_mut() {
                *v = 0.35;
            }
        }
        8 => {
            for i in WFG_K..WFG_N {
                let u = r_sum(&y[..i]);
                let v = PARAM_A - (1.0 - 2.0 * u) * ((0.5 - u).floor() + PARAM_A).abs();
                y[i] = 0.35f64.powf(1.0 / (PARAM_B + (PARAM_C - PARAM_B) * v));
            }
        }
        9 => {
            y[WFG_N - 1] = 0.35;
            for i in (WFG_K..WFG_N - 1).rev() {
                let u = r_sum(&y[i + 1..]);
                let v = PARAM_A - (1.0 - 2.0 * u) * ((0.5 - u).floor() + PARAM_A).abs();
                y[i] = 0.35f64.powf(1.0 / (PARAM_B + (PARAM_C - PARAM_B) * v));
            }
        }
        _ => unreachable!(),
    }
    y.iter()
        .enumerate()
        .map(|(i, &v)| v * 2.0 * (i + 1) as f64)
        .collect()
}
