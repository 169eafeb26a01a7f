//! Two-sided Wilcoxon signed-rank test for paired samples.

use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Sample-size boundary between exact enumeration and the normal
/// approximation.
const EXACT_LIMIT: usize = 25;

/// Two-sided p-value of the paired Wilcoxon signed-rank test. Zero
/// differences are dropped, tied absolute differences share average ranks,
/// and all-zero differences yield p = 1 by convention.
pub fn wilcoxon_signed_rank(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::StatsInput(format!(
            "paired samples must have equal length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    if a.len() < 5 {
        return Err(Error::StatsInput(format!(
            "need at least 5 pairs, got {}",
            a.len()
        )));
    }
    let differences: Vec<f64> = a
        .iter()
        .zip(b)
        .map(|(x, y)| x - y)
        .filter(|d| *d != 0.0)
        .collect();
    if differences.is_empty() {
        return Ok(1.0);
    }

    let ranks = average_ranks(&differences);
    let w_plus: f64 = differences
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d > 0.0)
        .map(|(_, r)| *r)
        .sum();

    let n = differences.len();
    if n <= EXACT_LIMIT {
        Ok(exact_p(&ranks, w_plus))
    } else {
        Ok(normal_p(&differences, &ranks, w_plus))
    }
}

/// Ranks of |d|, ascending, ties sharing the average rank.
fn average_ranks(differences: &[f64]) -> Vec<f64> {
    let n = differences.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        differences[i]
            .abs()
            .partial_cmp(&differences[j].abs())
            .unwrap()
    });
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && differences[order[j + 1]].abs() == differences[order[i]].abs() {
            j += 1;
        }
        let average = (i + j + 2) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = average;
        }
        i = j + 1;
    }
    ranks
}

/// Exact conditional null distribution of W+ over all 2^n sign assignments,
/// via a subset-sum count on doubled ranks (ties make ranks half-integral).
fn exact_p(ranks: &[f64], w_plus: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let total: usize = doubled.iter().sum();
    let mut counts = vec![0.0f64; total + 1];
    counts[0] = 1.0;
    for &r in &doubled {
        for s in (r..=total).rev() {
            counts[s] += counts[s - r];
        }
    }
    let observed = (2.0 * w_plus).round() as usize;
    let assignments = 2f64.powi(ranks.len() as i32);
    let lower: f64 = counts[..=observed].iter().sum();
    let upper: f64 = counts[observed..].iter().sum();
    (2.0 * (lower.min(upper)) / assignments).min(1.0)
}

/// Large-sample normal approximation with tie correction and continuity
/// correction.
fn normal_p(differences: &[f64], ranks: &[f64], w_plus: f64) -> f64 {
    let n = differences.len() as f64;
    let mean = n * (n + 1.0) / 4.0;
    let mut variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;

    // Tie correction: subtract sum(t^3 - t)/48 over tie groups.
    let mut sorted: Vec<f64> = ranks.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        variance -= (t * t * t - t) / 48.0;
        i = j + 1;
    }

    let centered = w_plus - mean;
    let corrected = centered - 0.5 * centered.signum();
    let z = corrected / variance.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    (2.0 * (1.0 - normal.cdf(z.abs()))).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_samples_give_p_one() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        assert_eq!(wilcoxon_signed_rank(&a, &a).unwrap(), 1.0);
    }

    #[test]
    fn constant_shift_over_thirty_runs_is_significant() {
        let a: Vec<f64> = (0..30).map(|i| i as f64).collect();
        let b: Vec<f64> = (0..30).map(|i| i as f64 + 1.0).collect();
        let p = wilcoxon_signed_rank(&a, &b).unwrap();
        assert!(p < 0.001, "p = {p}");
    }

    #[test]
    fn unequal_lengths_rejected() {
        assert!(wilcoxon_signed_rank(&[1.0; 6], &[1.0; 5]).is_err());
    }

    #[test]
    fn small_samples_use_the_exact_path() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0];
        let b = [2.0, 3.0, 4.0, 5.0, 6.0];
        let p = wilcoxon_signed_rank(&a, &b).unwrap();
        // Maximal statistic with n = 5: exact two-sided p = 2/32.
        assert!((p - 2.0 / 32.0).abs() < 1e-12, "p = {p}");
    }

    #[test]
    fn exact_and_normal_agree_for_moderate_n() {
        // Deterministic pseudo-random pairs, n = 20.
        let mut state = 88172645463325252u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..20 {
            let a: Vec<f64> = (0..20).map(|_| next()).collect();
            let b: Vec<f64> = (0..20).map(|_| next()).collect();
            let differences: Vec<f64> =
                a.iter().zip(&b).map(|(x, y)| x - y).filter(|d| *d != 0.0).collect();
            let ranks = average_ranks(&differences);
            let w_plus: f64 = differences
                .iter()
                .zip(&ranks)
                .filter(|(d, _)| **d > 0.0)
                .map(|(_, r)| *r)
                .sum();
            let exact = exact_p(&ranks, w_plus);
            let approx = normal_p(&differences, &ranks, w_plus);
            assert!(
                (exact - approx).abs() <= 0.02,
                "exact {exact} vs normal {approx}"
            );
        }
    }
}
