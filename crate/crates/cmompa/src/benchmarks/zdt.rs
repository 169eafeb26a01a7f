//! ZDT test problems (two objectives).

pub fn zdt1(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = 1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64;
    vec![f1, g * (1.0 - (f1 / g).sqrt())]
}

pub fn zdt2(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = 1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64;
    let ratio = f1 / g;
    vec![f1, g * (1.0 - ratio * ratio)]
}

pub fn zdt3(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = 1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64;
    let ratio = f1 / g;
    vec![
        f1,
        g * (1.0 - ratio.sqrt() - ratio * (10.0 * std::f64::consts::PI * f1).sin()),
    ]
}

pub fn zdt4(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = 1.0
        + 10.0 * (x.len() - 1) as f64
        + x[1..]
            .iter()
            .map(|&v| v * v - 10.0 * (4.0 * std::f64::consts::PI * v).cos())
            .sum::<f64>();
    vec![f1, g * (1.0 - (f1 / g).sqrt())]
}

pub fn zdt6(x: &[f64]) -> Vec<f64> {
    let f1 = 1.0
        - (-4.0 * x[0]).exp() * (6.0 * std::f64::consts::PI * x[0]).sin().powi(6);
    let g = 1.0 + 9.0 * (x[1..].iter().sum::<f64>() / (x.len() - 1) as f64).powf(0.25);
    let ratio = f1 / g;
    vec![f1, g * (1.0 - ratio * ratio)]
}

/// Smallest attainable first objective of ZDT6 (maximum of
/// exp(-4x)*sin^6(6*pi*x) over [0,1]), located by scan plus ternary
/// refinement.
pub fn zdt6_f1_minimum() -> f64 {
    let u = |x: f64| (-4.0 * x).exp() * (6.0 * std::f64::consts::PI * x).sin().powi(6);
    let mut best_x = 0.0;
    let mut best = 0.0;
    let scan = 100_000;
    for i in 0..=scan {
        let x = i as f64 / scan as f64;
        let v = u(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    let (mut lo, mut hi) = (best_x - 1e-5, best_x + 1e-5);
    for _ in 0..200 {
        let a = lo + (hi - lo) / 3.0;
        let b = hi - (hi - lo) / 3.0;
        if u(a) < u(b) {
            lo = a;
        } else {
            hi = b;
        }
    }
    1.0 - u((lo + hi) / 2.0)
}
