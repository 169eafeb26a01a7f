//! Structured reference points on the normalized hyperplane and the
//! reference-point-based niching used to size and truncate the archive.

use crate::error::{Error, Result};
use crate::movement::RandomSource;
use crate::problem::Individual;

/// Uniformly structured weight vectors on the unit simplex.
#[derive(Debug, Clone)]
pub struct ReferencePointSet {
    points: Vec<Vec<f64>>,
    divisions: usize,
}

impl ReferencePointSet {
    /// Das-Dennis systematic generation: all compositions of `p` into `m`
    /// non-negative parts, scaled by 1/p. Point count is C(m+p-1, p).
    pub fn das_dennis(m: usize, p: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidConfig(format!(
                "reference points need at least 2 objectives (got {m})"
            )));
        }
        if p < 1 {
            return Err(Error::InvalidConfig("divisions must be >= 1".into()));
        }
        let mut points = Vec::with_capacity(binomial(m + p - 1, p));
        let mut current = vec![0.0; m];
        recurse(&mut points, &mut current, p, p, 0);
        Ok(Self {
            points,
            divisions: p,
        })
    }

    /// Wraps an explicit point set (tests and custom layouts); simplex-lattice
    /// count invariants only hold for `das_dennis` output.
    pub fn from_points(points: Vec<Vec<f64>>) -> Self {
        let divisions = 0;
        Self { points, divisions }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn divisions(&self) -> usize {
        self.divisions
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }
}

fn recurse(points: &mut Vec<Vec<f64>>, current: &mut Vec<f64>, p: usize, rest: usize, depth: usize) {
    if depth == current.len() - 1 {
        current[depth] = rest as f64 / p as f64;
        points.push(current.clone());
        return;
    }
    for i in 0..=rest {
        current[depth] = i as f64 / p as f64;
        recurse(points, current, p, rest - i, depth + 1);
    }
}

/// C(n, k) in u64 space; small inputs only (m <= 3 here).
pub fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Picks `needed` members of `last_level` by the reference-point niching
/// procedure: normalize `selected` plus `last_level` by the ideal point and
/// extreme-point intercepts, associate everyone with the nearest reference
/// line, then repeatedly serve the reference point with the smallest niche
/// count.
pub fn reference_point_select(
    selected: &[Individual],
    last_level: &[Individual],
    needed: usize,
    refs: &ReferencePointSet,
    rng: &mut RandomSource,
) -> Vec<Individual> {
    assert!(
        needed <= last_level.len(),
        "asked for {needed} individuals from a level of {}",
        last_level.len()
    );
    if needed == 0 {
        return Vec::new();
    }
    if needed == last_level.len() {
        return last_level.to_vec();
    }

    let m = last_level[0].objectives.len();
    let normalized = normalize(selected, last_level, m);
    let (selected_norm, candidates_norm) = normalized.split_at(selected.len());

    // Niche counts from the members already admitted in earlier levels.
    let mut niche_count = vec![0usize; refs.len()];
    for row in selected_norm {
        let (r, _) = nearest_reference(row, refs);
        niche_count[r] += 1;
    }

    // Candidate associations, grouped per reference point.
    let mut per_ref: Vec<Vec<(usize, f64)>> = vec![Vec::new(); refs.len()];
    for (i, row) in candidates_norm.iter().enumerate() {
        let (r, d) = nearest_reference(row, refs);
        per_ref[r].push((i, d));
    }

    let mut active: Vec<usize> = (0..refs.len()).filter(|&r| !per_ref[r].is_empty()).collect();
    let mut chosen = Vec::with_capacity(needed);
    while chosen.len() < needed {
        debug_assert!(!active.is_empty(), "ran out of associated candidates");
        let min_count = active.iter().map(|&r| niche_count[r]).min().unwrap();
        let tied: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&r| niche_count[r] == min_count)
            .collect();
        let r = tied[if tied.len() == 1 { 0 } else { rng.index(tied.len()) }];

        let bucket = &mut per_ref[r];
        let pick = if niche_count[r] == 0 {
            // Empty niche: take the candidate closest to the reference line.
            bucket
                .iter()
                .enumerate()
                .min_by(|a, b| a.1 .1.partial_cmp(&b.1 .1).unwrap())
                .map(|(slot, _)| slot)
                .unwrap()
        } else {
            // Occupied niche: any associated candidate.
            rng.index(bucket.len())
        };
        let (candidate, _) = bucket.swap_remove(pick);
        chosen.push(last_level[candidate].clone());
        niche_count[r] += 1;
        if bucket.is_empty() {
            active.retain(|&x| x != r);
        }
    }
    chosen
}

/// Ideal-point translation plus intercept scaling of the union
/// `selected ++ last_level`; returns one normalized row per individual.
fn normalize(selected: &[Individual], last_level: &[Individual], m: usize) -> Vec<Vec<f64>> {
    let all: Vec<&Individual> = selected.iter().chain(last_level.iter()).collect();
    let mut ideal = vec![f64::INFINITY; m];
    let mut nadir = vec![f64::NEG_INFINITY; m];
    for ind in &all {
        for j in 0..m {
            ideal[j] = ideal[j].min(ind.objectives[j]);
            nadir[j] = nadir[j].max(ind.objectives[j]);
        }
    }

    let translated: Vec<Vec<f64>> = all
        .iter()
        .map(|ind| (0..m).map(|j| ind.objectives[j] - ideal[j]).collect())
        .collect();

    let intercepts = intercepts_from_extremes(&translated, m).unwrap_or_else(|| {
        // Degenerate hyperplane: fall back to nadir-minus-ideal ranges.
        (0..m).map(|j| nadir[j] - ideal[j]).collect()
    });

    translated
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .map(|(j, v)| {
                    let a = if intercepts[j] > 1e-12 { intercepts[j] } else { 1.0 };
                    v / a
                })
                .collect()
        })
        .collect()
}

/// Extreme points by achievement scalarizing function, then the intercepts of
/// the hyperplane through them. `None` when the system is singular or yields
/// a non-positive intercept.
fn intercepts_from_extremes(translated: &[Vec<f64>], m: usize) -> Option<Vec<f64>> {
    const EPS_WEIGHT: f64 = 1e-6;
    let mut extremes: Vec<usize> = Vec::with_capacity(m);
    for axis in 0..m {
        let best = (0..translated.len()).min_by(|&a, &b| {
            let asf = |row: &[f64]| {
                (0..m)
                    .map(|j| row[j] / if j == axis { 1.0 } else { EPS_WEIGHT })
                    .fold(f64::NEG_INFINITY, f64::max)
            };
            asf(&translated[a]).partial_cmp(&asf(&translated[b])).unwrap()
        })?;
        extremes.push(best);
    }

    // Solve E * b = 1; intercepts are 1/b.
    let mut matrix: Vec<Vec<f64>> = extremes
        .iter()
        .map(|&i| translated[i].clone())
        .collect();
    let mut rhs = vec![1.0; m];
    for col in 0..m {
        let pivot = (col..m).max_by(|&a, &b| {
            matrix[a][col].abs().partial_cmp(&matrix[b][col].abs()).unwrap()
        })?;
        if matrix[pivot][col].abs() < 1e-12 {
            return None;
        }
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in 0..m {
            if row != col {
                let factor = matrix[row][col] / matrix[col][col];
                for k in col..m {
                    matrix[row][k] -= factor * matrix[col][k];
                }
                rhs[row] -= factor * rhs[col];
            }
        }
    }
    let mut intercepts = Vec::with_capacity(m);
    for j in 0..m {
        let b = rhs[j] / matrix[j][j];
        if !(b.is_finite() && b > 1e-12) {
            return None;
        }
        intercepts.push(1.0 / b);
    }
    Some(intercepts)
}

/// Index and perpendicular distance of the reference line nearest to a
/// normalized objective row.
fn nearest_reference(row: &[f64], refs: &ReferencePointSet) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (r, w) in refs.points().iter().enumerate() {
        let d = perpendicular_distance(row, w);
        if d < best.1 {
            best = (r, d);
        }
    }
    best
}

fn perpendicular_distance(row: &[f64], w: &[f64]) -> f64 {
    let ww: f64 = w.iter().map(|x| x * x).sum();
    let fw: f64 = row.iter().zip(w).map(|(a, b)| a * b).sum();
    let t = fw / ww;
    row.iter()
        .zip(w)
        .map(|(a, b)| (a - t * b) * (a - t * b))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::ObjectiveVector;

    fn ind(values: &[f64]) -> Individual {
        Individual {
            position: Vec::new(),
            objectives: ObjectiveVector::new(values.to_vec()).unwrap(),
            violation: 0.0,
        }
    }

    #[test]
    fn das_dennis_m2_p4_enumerates_compositions() {
        let refs = ReferencePointSet::das_dennis(2, 4).unwrap();
        let expected = vec![
            vec![0.0, 1.0],
            vec![0.25, 0.75],
            vec![0.5, 0.5],
            vec![0.75, 0.25],
            vec![1.0, 0.0],
        ];
        assert_eq!(refs.points(), expected.as_slice());
    }

    #[test]
    fn das_dennis_m3_p1_is_the_unit_vectors() {
        let refs = ReferencePointSet::das_dennis(3, 1).unwrap();
        let mut points = refs.points().to_vec();
        points.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(
            points,
            vec![
                vec![0.0, 0.0, 1.0],
                vec![0.0, 1.0, 0.0],
                vec![1.0, 0.0, 0.0]
            ]
        );
    }

    #[test]
    fn das_dennis_m3_p12_has_91_points() {
        let refs = ReferencePointSet::das_dennis(3, 12).unwrap();
        assert_eq!(refs.len(), 91);
        assert_eq!(binomial(3 + 12 - 1, 12), 91);
    }

    #[test]
    fn das_dennis_counts_match_binomial() {
        for m in [2usize, 3] {
            for p in 1..=20 {
                let refs = ReferencePointSet::das_dennis(m, p).unwrap();
                assert_eq!(refs.len(), binomial(m + p - 1, p), "m={m} p={p}");
                for point in refs.points() {
                    let sum: f64 = point.iter().sum();
                    assert!((sum - 1.0).abs() < 1e-12);
                    for &c in point {
                        // Every coordinate is a multiple of 1/p.
                        let scaled = c * p as f64;
                        assert!((scaled - scaled.round()).abs() < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_dimensions_rejected() {
        assert!(ReferencePointSet::das_dennis(1, 4).is_err());
        assert!(ReferencePointSet::das_dennis(3, 0).is_err());
    }

    #[test]
    fn select_zero_returns_empty() {
        let refs = ReferencePointSet::das_dennis(2, 4).unwrap();
        let level = vec![ind(&[0.5, 0.5])];
        let mut rng = RandomSource::new(0);
        assert!(reference_point_select(&[], &level, 0, &refs, &mut rng).is_empty());
    }

    #[test]
    fn select_whole_level_returns_it() {
        let refs = ReferencePointSet::das_dennis(2, 4).unwrap();
        let level = vec![ind(&[0.1, 0.9]), ind(&[0.9, 0.1])];
        let mut rng = RandomSource::new(0);
        let out = reference_point_select(&[], &level, 2, &refs, &mut rng);
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn single_reference_point_admits_closest_candidate() {
        // One reference line along (0.5, 0.5). Candidates (hand-normalized:
        // ideal (0,0), extremes (1,0) and (0,0.6) give intercepts (1, 0.6)):
        //   (0.00, 0.60) -> normalized (0.00, 1.000), perp dist 0.707
        //   (0.45, 0.55) -> normalized (0.45, 0.917), perp dist 0.330
        //   (1.00, 0.00) -> normalized (1.00, 0.000), perp dist 0.707
        let refs = ReferencePointSet::from_points(vec![vec![0.5, 0.5]]);
        let level = vec![ind(&[0.0, 0.6]), ind(&[0.45, 0.55]), ind(&[1.0, 0.0])];
        let mut rng = RandomSource::new(0);
        let out = reference_point_select(&[], &level, 1, &refs, &mut rng);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].objectives.values(), &[0.45, 0.55]);
    }

    #[test]
    fn output_is_subset_of_level_with_requested_size() {
        let refs = ReferencePointSet::das_dennis(2, 6).unwrap();
        let mut rng = RandomSource::new(11);
        let level: Vec<Individual> = (0..10)
            .map(|_| {
                let a = rng.uniform();
                ind(&[a, 1.0 - a + 0.2 * rng.uniform()])
            })
            .collect();
        for needed in 0..=level.len() {
            let out = reference_point_select(&[], &level, needed, &refs, &mut rng);
            assert_eq!(out.len(), needed);
            for picked in &out {
                assert!(level
                    .iter()
                    .any(|c| c.objectives.values() == picked.objectives.values()));
            }
        }
    }

    #[test]
    fn selection_invariant_under_per_objective_affine_rescaling() {
        let refs = ReferencePointSet::das_dennis(2, 6).unwrap();
        let mut gen = RandomSource::new(5);
        let level: Vec<Individual> = (0..12)
            .map(|_| ind(&[gen.uniform(), gen.uniform()]))
            .collect();
        let selected: Vec<Individual> = (0..4).map(|_| ind(&[gen.uniform(), gen.uniform()])).collect();

        let rescaled = |scale: f64, shift: f64| -> (Vec<Individual>, Vec<Individual>) {
            let map = |src: &[Individual]| {
                src.iter()
                    .map(|i| ind(&[i.objectives[0] * scale + shift, i.objectives[1]]))
                    .collect::<Vec<_>>()
            };
            (map(&selected), map(&level))
        };

        let mut rng_a = RandomSource::new(77);
        let base = reference_point_select(&selected, &level, 5, &refs, &mut rng_a);
        let (sel_b, lvl_b) = rescaled(3.5, -2.0);
        let mut rng_b = RandomSource::new(77);
        let scaled = reference_point_select(&sel_b, &lvl_b, 5, &refs, &mut rng_b);

        let picked_f2: Vec<f64> = base.iter().map(|i| i.objectives[1]).collect();
        let scaled_f2: Vec<f64> = scaled.iter().map(|i| i.objectives[1]).collect();
        assert_eq!(picked_f2, scaled_f2);
    }
}
