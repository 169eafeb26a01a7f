//! Solution-quality metrics: inverted generational distance, exact
//! hypervolume, and the paired significance test.

mod hypervolume;
mod wilcoxon;

pub use hypervolume::hv as hypervolume;
pub use wilcoxon::wilcoxon_signed_rank;

use crate::benchmarks::TruePFSample;
use crate::problem::ObjectiveVector;

/// Mean distance from each reference-front point to its nearest member of
/// the approximation set. Lower is better.
pub fn igd(approx: &[ObjectiveVector], reference: &TruePFSample) -> f64 {
    assert!(!approx.is_empty() && !reference.is_empty());
    let m = reference.points[0].len();
    assert_eq!(approx[0].len(), m, "objective count mismatch");
    let total: f64 = reference
        .points
        .iter()
        .map(|r| {
            approx
                .iter()
                .map(|p| {
                    (0..m)
                        .map(|i| {
                            let d = p[i] - r[i];
                            d * d
                        })
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    total / reference.len() as f64
}

/// Exact hypervolume against a reference point, on raw objective vectors.
pub fn hv(approx: &[ObjectiveVector], z: &[f64]) -> f64 {
    let points: Vec<Vec<f64>> = approx.iter().map(|p| p.values().to_vec()).collect();
    hypervolume(&points, z)
}

/// The reference point used for normalized hypervolume: 1.1 times the
/// per-objective nadir of the true front.
pub fn hv_reference(true_pf: &TruePFSample) -> Vec<f64> {
    let m = true_pf.points[0].len();
    (0..m)
        .map(|i| {
            1.1 * true_pf
                .points
                .iter()
                .map(|p| p[i])
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect()
}

/// Hypervolume against z = 1.1 * nadir(true front), normalized by the
/// reference-box volume so values are comparable across problems.
pub fn normalized_hv(approx: &[ObjectiveVector], true_pf: &TruePFSample) -> f64 {
    let z = hv_reference(true_pf);
    let volume: f64 = z.iter().product();
    hv(approx, &z) / volume
}
