//! DTLZ test problems, instantiated at three objectives.

use std::f64::consts::{FRAC_PI_2, PI};

fn g_rastrigin(tail: &[f64]) -> f64 {
    100.0
        * (tail.len() as f64
            + tail
                .iter()
                .map(|&v| (v - 0.5) * (v - 0.5) - (20.0 * PI * (v - 0.5)).cos())
                .sum::<f64>())
}

fn g_sphere(tail: &[f64]) -> f64 {
    tail.iter().map(|&v| (v - 0.5) * (v - 0.5)).sum()
}

pub fn dtlz1(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_rastrigin(&x[m - 1..]);
    let scale = 0.5 * (1.0 + g);
    (0..m)
        .map(|i| {
            let mut f = scale;
            for &v in &x[..m - 1 - i] {
                f *= v;
            }
            if i > 0 {
                f *= 1.0 - x[m - 1 - i];
            }
            f
        })
        .collect()
}

fn spherical(angles: &[f64], g: f64, m: usize) -> Vec<f64> {
    (0..m)
        .map(|i| {
            let mut f = 1.0 + g;
            for &a in &angles[..m - 1 - i] {
                f *= a.cos();
            }
            if i > 0 {
                f *= angles[m - 1 - i].sin();
            }
            f
        })
        .collect()
}

pub fn dtlz2(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_sphere(&x[m - 1..]);
    let angles: Vec<f64> = x[..m - 1].iter().map(|&v| v * FRAC_PI_2).collect();
    spherical(&angles, g, m)
}

pub fn dtlz3(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_rastrigin(&x[m - 1..]);
    let angles: Vec<f64> = x[..m - 1].iter().map(|&v| v * FRAC_PI_2).collect();
    spherical(&angles, g, m)
}

pub fn dtlz4(x: &[f64], m: usize) -> Vec<f64> {
    const ALPHA: f64 = 100.0;
    let g = g_sphere(&x[m - 1..]);
    let angles: Vec<f64> = x[..m - 1].iter().map(|&v| v.powf(ALPHA) * FRAC_PI_2).collect();
    spherical(&angles, g, m)
}

fn dtlz5_angles(x: &[f64], g: f64, m: usize) -> Vec<f64> {
    let mut angles = Vec::with_capacity(m - 1);
    angles.push(x[0] * FRAC_PI_2);
    for &v in &x[1..m - 1] {
        angles.push(PI / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * v));
    }
    angles
}

pub fn dtlz5(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_sphere(&x[m - 1..]);
    spherical(&dtlz5_angles(x, g, m), g, m)
}

pub fn dtlz6(x: &[f64], m: usize) -> Vec<f64> {
    let g: f64 = x[m - 1..].iter().map(|&v| v.powf(0.1)).sum();
    spherical(&dtlz5_angles(x, g, m), g, m)
}

pub fn dtlz7(x: &[f64], m: usize) -> Vec<f64> {
    let tail = &x[m - 1..];
    let g = 1.0 + 9.0 * tail.iter().sum::<f64>() / tail.len() as f64;
    let mut f: Vec<f64> = x[..m - 1].to_vec();
    let h = m as f64
        - f.iter()
            .map(|&fi| fi / (1.0 + g) * (1.0 + (3.0 * PI * fi).sin()))
            .sum::<f64>();
    f.push((1.0 + g) * h);
    f
}
