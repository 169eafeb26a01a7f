//! The competitive multi-objective marine-predators optimizer.
//!
//! One iteration consumes the random stream in this fixed order, which is
//! part of the determinism contract:
//!
//! 1. movement phase, row by row (per row: first step vector, second step
//!    vector, then the uniform vector where the stage uses one),
//! 2. elite perturbation, row by row (dimension index, then the Gaussian),
//! 3. competition learning (prey permutation, perturbed permutation, then per
//!    pair: the learning rate, loser mutation draws, winner mutation draws),
//! 4. elite-selection niching tie-breaks,
//! 5. predator-matrix padding picks.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::movement::{brownian_step, levy_step, uniform_init, uniform_step, RandomSource, StepVector};
use crate::pareto::{fast_nondominated_sort, DominanceRelation};
use crate::problem::{clamp_to_bounds, Archive, Individual, ObjectiveVector, Population, ProblemSpec};
use crate::refpoints::{reference_point_select, ReferencePointSet};

/// Optimizer hyperparameters and experiment controls.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Initial population size N.
    pub population_size: usize,
    /// Divisions per objective for the reference-point lattice; fixes the
    /// archive size N_a = C(m+p-1, p).
    pub divisions: usize,
    /// Maximum iteration count k_max.
    pub max_iterations: usize,
    /// Step attenuation theta.
    pub theta: f64,
    /// Distribution index of the polynomial mutation.
    pub mutation_distribution_index: f64,
    /// Per-dimension mutation probability; `None` means 1/d.
    pub mutation_probability: Option<f64>,
    pub seed: u64,
    /// Record the archive's objective vectors after every iteration.
    pub record_history: bool,
}

impl RunConfig {
    /// Defaults: population 100, theta 0.5, mutation index 20, and a lattice
    /// sized to roughly match the population (p=99 for two objectives giving
    /// N_a=100, p=12 for three giving N_a=91).
    pub fn new(objective_count: usize) -> Self {
        Self {
            population_size: 100,
            divisions: if objective_count <= 2 { 99 } else { 12 },
            max_iterations: 300,
            theta: 0.5,
            mutation_distribution_index: 20.0,
            mutation_probability: None,
            seed: 0,
            record_history: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_iterations(mut self, k_max: usize) -> Self {
        self.max_iterations = k_max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::InvalidConfig("population size must be >= 2".into()));
        }
        if self.max_iterations < 3 {
            return Err(Error::InvalidConfig("max iterations must be >= 3".into()));
        }
        if !(self.theta > 0.0) {
            return Err(Error::InvalidConfig("theta must be positive".into()));
        }
        if self.divisions < 1 {
            return Err(Error::InvalidConfig("divisions must be >= 1".into()));
        }
        if let Some(p) = self.mutation_probability {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidConfig(
                    "mutation probability must lie in [0, 1]".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Elite guidance matrix: N_a rows cyclically copied from the archive's
/// first non-dominated level.
#[derive(Debug, Clone)]
pub struct PredatorMatrix {
    pub rows: Vec<Individual>,
}

impl PredatorMatrix {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Output of one optimizer run.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub archive: Archive,
    /// Archive objective vectors per iteration, when recording was enabled.
    pub history: Option<Vec<Vec<ObjectiveVector>>>,
    pub evaluations: u64,
    pub iterations: usize,
    pub wall_time: Duration,
}

/// Step attenuation schedule: (1 - k/k_max)^(2k/k_max).
pub fn gamma(k: usize, k_max: usize) -> f64 {
    assert!(k <= k_max);
    let ratio = k as f64 / k_max as f64;
    (1.0 - ratio).powf(2.0 * ratio)
}

/// Movement stage of iteration `k` out of `k_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MovementStage {
    /// Brownian exploration around the prey.
    One,
    /// Split Lévy/Brownian transition.
    Two,
    /// Lévy exploitation around the predators.
    Three,
}

/// Stage boundaries: stage one while k < ceil(k_max/3), stage two while
/// k <= floor(2*k_max/3), stage three afterwards.
pub fn stage_for(k: usize, k_max: usize) -> MovementStage {
    if k < k_max.div_ceil(3) {
        MovementStage::One
    } else if k <= 2 * k_max / 3 {
        MovementStage::Two
    } else {
        MovementStage::Three
    }
}

/// Builds the predator matrix from the archive's first non-dominated level:
/// whole-set repeats, then uniformly random picks for the remainder.
pub fn build_predator_matrix(
    archive: &Archive,
    relation: DominanceRelation,
    rng: &mut RandomSource,
) -> PredatorMatrix {
    assert!(!archive.is_empty(), "archive must be non-empty");
    let levels = fast_nondominated_sort(&archive.members, relation);
    let elites: Vec<&Individual> = levels[0].iter().map(|&i| &archive.members[i]).collect();
    let capacity = archive.capacity;

    let mut rows = Vec::with_capacity(capacity);
    for _ in 0..capacity / elites.len() {
        rows.extend(elites.iter().map(|e| (*e).clone()));
    }
    while rows.len() < capacity {
        rows.push(elites[rng.index(elites.len())].clone());
    }
    PredatorMatrix { rows }
}

fn elementwise(a: &StepVector, f: impl Fn(f64, usize) -> f64) -> Vec<f64> {
    a.0.iter().enumerate().map(|(j, &v)| f(v, j)).collect()
}

/// Stage-one row: S = rb1 (*) (E - rb2 (*) A), P = A + theta * r (*) S.
pub fn stage_one_position(
    prey: &[f64],
    predator: &[f64],
    theta: f64,
    rb1: &StepVector,
    rb2: &StepVector,
    r: &StepVector,
) -> Vec<f64> {
    let step = elementwise(rb1, |b, j| b * (predator[j] - rb2.0[j] * prey[j]));
    elementwise(r, |u, j| prey[j] + theta * u * step[j])
}

/// Stage-two first-half row (Lévy around the prey):
/// S = rl1 (*) (E - rl2 (*) A), P = A + theta * r (*) S.
pub fn stage_two_levy_position(
    prey: &[f64],
    predator: &[f64],
    theta: f64,
    rl1: &StepVector,
    rl2: &StepVector,
    r: &StepVector,
) -> Vec<f64> {
    let step = elementwise(rl1, |l, j| l * (predator[j] - rl2.0[j] * prey[j]));
    elementwise(r, |u, j| prey[j] + theta * u * step[j])
}

/// Stage-two second-half row (Brownian around the predator):
/// S = rb1 (*) (rb2 (*) E - A), P = E + theta * gamma * S.
pub fn stage_two_brownian_position(
    prey: &[f64],
    predator: &[f64],
    theta: f64,
    gamma_k: f64,
    rb1: &StepVector,
    rb2: &StepVector,
) -> Vec<f64> {
    let step = elementwise(rb1, |b, j| b * (rb2.0[j] * predator[j] - prey[j]));
    (0..prey.len())
        .map(|j| predator[j] + theta * gamma_k * step[j])
        .collect()
}

/// Stage-three row: S = rl1 (*) (rl2 (*) E - A), P = E + theta * gamma * S.
pub fn stage_three_position(
    prey: &[f64],
    predator: &[f64],
    theta: f64,
    gamma_k: f64,
    rl1: &StepVector,
    rl2: &StepVector,
) -> Vec<f64> {
    let step = elementwise(rl1, |l, j| l * (rl2.0[j] * predator[j] - prey[j]));
    (0..prey.len())
        .map(|j| predator[j] + theta * gamma_k * step[j])
        .collect()
}

/// Moves every archive member under the stage rule for iteration `k`,
/// clamps to bounds, and re-evaluates.
pub fn phase_update(
    archive: &Archive,
    predators: &PredatorMatrix,
    k: usize,
    config: &RunConfig,
    problem: &ProblemSpec,
    rng: &mut RandomSource,
) -> Result<Population> {
    assert_eq!(archive.len(), predators.len());
    let d = problem.dimension();
    let theta = config.theta;
    let k_max = config.max_iterations;
    let stage = stage_for(k, k_max);
    let gamma_k = gamma(k, k_max);
    let half = archive.len() / 2;

    let mut population = Vec::with_capacity(archive.len());
    for (i, (prey, predator)) in archive
        .members
        .iter()
        .zip(predators.rows.iter())
        .enumerate()
    {
        let mut position = match stage {
            MovementStage::One => {
                let rb1 = brownian_step(d, rng);
                let rb2 = brownian_step(d, rng);
                let r = uniform_step(d, rng);
                stage_one_position(&prey.position, &predator.position, theta, &rb1, &rb2, &r)
            }
            MovementStage::Two if i < half => {
                let rl1 = levy_step(d, rng);
                let rl2 = levy_step(d, rng);
                let r = uniform_step(d, rng);
                stage_two_levy_position(&prey.position, &predator.position, theta, &rl1, &rl2, &r)
            }
            MovementStage::Two => {
                let rb1 = brownian_step(d, rng);
                let rb2 = brownian_step(d, rng);
                stage_two_brownian_position(
                    &prey.position,
                    &predator.position,
                    theta,
                    gamma_k,
                    &rb1,
                    &rb2,
                )
            }
            MovementStage::Three => {
                let rl1 = levy_step(d, rng);
                let rl2 = levy_step(d, rng);
                stage_three_position(
                    &prey.position,
                    &predator.position,
                    theta,
                    gamma_k,
                    &rl1,
                    &rl2,
                )
            }
        };
        clamp_to_bounds(&mut position, problem);
        population.push(problem.evaluate(position)?);
    }
    Ok(population)
}

/// Position after perturbing one dimension by a scaled Gaussian, pre-clamp.
pub fn perturb_position(position: &[f64], dim: usize, gaussian: f64, problem: &ProblemSpec) -> Vec<f64> {
    let mut out = position.to_vec();
    out[dim] += (problem.upper_bounds()[dim] - problem.lower_bounds()[dim]) * gaussian;
    out
}

/// Gaussian elite perturbation: one uniformly chosen dimension per
/// individual is shifted by a range-scaled N(0,1) draw.
pub fn gaussian_elite_perturbation(
    population: &[Individual],
    problem: &ProblemSpec,
    rng: &mut RandomSource,
) -> Result<Population> {
    assert!(!population.is_empty());
    let d = problem.dimension();
    let mut out = Vec::with_capacity(population.len());
    for individual in population {
        let dim = rng.index(d);
        let gaussian = rng.normal();
        let mut position = perturb_position(&individual.position, dim, gaussian, problem);
        clamp_to_bounds(&mut position, problem);
        out.push(problem.evaluate(position)?);
    }
    Ok(out)
}

/// Shift-based density estimation fitness of `pool[index]`: the minimum
/// shifted Euclidean distance to any other pool member. Larger is better.
pub fn sde_fitness(pool: &[Individual], index: usize) -> f64 {
    assert!(pool.len() >= 2, "fitness needs at least two individuals");
    let x = &pool[index].objectives;
    let m = x.len();
    let mut best = f64::INFINITY;
    for (other, y) in pool.iter().enumerate() {
        if other == index {
            continue;
        }
        let mut sum = 0.0;
        for i in 0..m {
            let shifted = (y.objectives[i] - x[i]).max(0.0);
            sum += shifted * shifted;
        }
        best = best.min(sum.sqrt());
    }
    best
}

/// Loser position after moving toward the winner by rate `eta`.
pub fn learn_position(loser: &[f64], winner: &[f64], eta: f64) -> Vec<f64> {
    loser
        .iter()
        .zip(winner)
        .map(|(&l, &w)| l + eta * (w - l))
        .collect()
}

/// Bounded polynomial mutation, in place.
pub fn polynomial_mutation(
    position: &mut [f64],
    problem: &ProblemSpec,
    probability: f64,
    distribution_index: f64,
    rng: &mut RandomSource,
) {
    let lower = problem.lower_bounds();
    let upper = problem.upper_bounds();
    let exponent = 1.0 / (distribution_index + 1.0);
    for j in 0..position.len() {
        if rng.uniform() >= probability {
            continue;
        }
        let range = upper[j] - lower[j];
        let u = rng.uniform();
        let delta = if u <= 0.5 {
            let base = (position[j] - lower[j]) / range;
            (2.0 * u + (1.0 - 2.0 * u) * (1.0 - base).powf(distribution_index + 1.0))
                .powf(exponent)
                - 1.0
        } else {
            let base = (upper[j] - position[j]) / range;
            1.0 - (2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - base).powf(distribution_index + 1.0))
                .powf(exponent)
        };
        position[j] = (position[j] + delta * range).clamp(lower[j], upper[j]);
    }
}

/// Competition-mechanism learning: random pairing across the two inputs,
/// the lower-fitness member of each pair learns from the other, and both are
/// polynomially mutated. Returns all 2*|prey| updated individuals.
pub fn competition_learning(
    prey: &[Individual],
    perturbed: &[Individual],
    problem: &ProblemSpec,
    config: &RunConfig,
    rng: &mut RandomSource,
) -> Result<Population> {
    assert_eq!(prey.len(), perturbed.len());
    let mut pool: Vec<Individual> = Vec::with_capacity(prey.len() * 2);
    pool.extend_from_slice(prey);
    pool.extend_from_slice(perturbed);
    let fitness: Vec<f64> = (0..pool.len()).map(|i| sde_fitness(&pool, i)).collect();

    let mut prey_order: Vec<usize> = (0..prey.len()).collect();
    let mut perturbed_order: Vec<usize> = (0..perturbed.len()).collect();
    rng.shuffle(&mut prey_order);
    rng.shuffle(&mut perturbed_order);

    let probability = config
        .mutation_probability
        .unwrap_or(1.0 / problem.dimension() as f64);
    let eta_m = config.mutation_distribution_index;

    let mut out = Vec::with_capacity(pool.len());
    for (&p, &q) in prey_order.iter().zip(&perturbed_order) {
        let (loser_idx, winner_idx) = if fitness[p] < fitness[prey.len() + q] {
            (p, prey.len() + q)
        } else {
            (prey.len() + q, p)
        };
        let eta = rng.uniform();
        let mut loser = learn_position(&pool[loser_idx].position, &pool[winner_idx].position, eta);
        let mut winner = pool[winner_idx].position.clone();
        polynomial_mutation(&mut loser, problem, probability, eta_m, rng);
        polynomial_mutation(&mut winner, problem, probability, eta_m, rng);
        clamp_to_bounds(&mut loser, problem);
        clamp_to_bounds(&mut winner, problem);
        out.push(problem.evaluate(loser)?);
        out.push(problem.evaluate(winner)?);
    }
    Ok(out)
}

/// Non-dominated sort, whole-level admission, and reference-point truncation
/// of the straddling level. Returns an archive of exactly `capacity`.
pub fn elite_selection(
    pool: Population,
    capacity: usize,
    relation: DominanceRelation,
    refs: &ReferencePointSet,
    rng: &mut RandomSource,
) -> Archive {
    assert!(
        pool.len() >= capacity,
        "elite selection needs at least {capacity} candidates, got {}",
        pool.len()
    );
    let levels = fast_nondominated_sort(&pool, relation);
    let mut selected: Vec<Individual> = Vec::with_capacity(capacity);
    for level in levels {
        let members: Vec<Individual> = level.iter().map(|&i| pool[i].clone()).collect();
        if selected.len() + members.len() <= capacity {
            selected.extend(members);
            if selected.len() == capacity {
                break;
            }
        } else {
            let needed = capacity - selected.len();
            let chosen = reference_point_select(&selected, &members, needed, refs, rng);
            selected.extend(chosen);
            break;
        }
    }
    debug_assert_eq!(selected.len(), capacity);
    Archive::new(selected, capacity)
}

/// Full optimizer run over `problem` under `config`.
pub fn run(problem: &ProblemSpec, config: &RunConfig) -> Result<RunResult> {
    config.validate()?;
    let started = Instant::now();
    let refs = ReferencePointSet::das_dennis(problem.objective_count(), config.divisions)?;
    let capacity = refs.len();
    if config.population_size < capacity {
        return Err(Error::InvalidConfig(format!(
            "population size {} cannot seed an archive of {capacity} (raise --pop or lower --divisions)",
            config.population_size
        )));
    }
    let relation = if problem.is_constrained() {
        DominanceRelation::Constrained
    } else {
        DominanceRelation::Objectives
    };

    let mut rng = RandomSource::new(config.seed);
    let mut evaluations = 0u64;

    let initial = uniform_init(config.population_size, problem, &mut rng)?;
    evaluations += initial.len() as u64;
    let mut archive = elite_selection(initial, capacity, relation, &refs, &mut rng);
    let mut predators = build_predator_matrix(&archive, relation, &mut rng);

    let mut history = config.record_history.then(Vec::new);
    for k in 1..=config.max_iterations {
        let prey = phase_update(&archive, &predators, k, config, problem, &mut rng)?;
        let perturbed = gaussian_elite_perturbation(&prey, problem, &mut rng)?;
        let offspring = competition_learning(&prey, &perturbed, problem, config, &mut rng)?;
        evaluations += 4 * capacity as u64;

        let mut pool = archive.members;
        pool.reserve(4 * capacity);
        pool.extend(prey);
        pool.extend(perturbed);
        pool.extend(offspring);
        debug_assert_eq!(pool.len(), 5 * capacity);

        archive = elite_selection(pool, capacity, relation, &refs, &mut rng);
        predators = build_predator_matrix(&archive, relation, &mut rng);
        if let Some(h) = history.as_mut() {
            h.push(archive.objectives());
        }
    }

    Ok(RunResult {
        archive,
        history,
        evaluations,
        iterations: config.max_iterations,
        wall_time: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::ObjectiveVector;
    use approx::assert_abs_diff_eq;

    fn ind(values: &[f64], violation: f64) -> Individual {
        Individual {
            position: values.to_vec(),
            objectives: ObjectiveVector::new(values.to_vec()).unwrap(),
            violation,
        }
    }

    fn sphere_problem(d: usize) -> ProblemSpec {
        ProblemSpec::new(2, vec![0.0; d], vec![1.0; d], |x| {
            let s: f64 = x.iter().map(|v| v * v).sum();
            vec![s, (x[0] - 1.0).powi(2) + s]
        })
        .unwrap()
    }

    #[test]
    fn gamma_schedule_endpoints() {
        assert_eq!(gamma(0, 300), 1.0);
        assert_eq!(gamma(300, 300), 0.0);
        assert_eq!(gamma(150, 300), 0.5);
    }

    #[test]
    fn stage_boundaries_for_300_iterations() {
        assert_eq!(stage_for(1, 300), MovementStage::One);
        assert_eq!(stage_for(99, 300), MovementStage::One);
        assert_eq!(stage_for(100, 300), MovementStage::Two);
        assert_eq!(stage_for(200, 300), MovementStage::Two);
        assert_eq!(stage_for(201, 300), MovementStage::Three);
        assert_eq!(stage_for(300, 300), MovementStage::Three);
    }

    #[test]
    fn predator_matrix_even_split() {
        let members = vec![
            ind(&[0.0, 1.0], 0.0),
            ind(&[1.0, 0.0], 0.0),
            ind(&[2.0, 2.0], 0.0),
            ind(&[3.0, 3.0], 0.0),
            ind(&[4.0, 4.0], 0.0),
            ind(&[5.0, 5.0], 0.0),
        ];
        let archive = Archive::new(members, 6);
        let mut rng = RandomSource::new(0);
        let matrix = build_predator_matrix(&archive, DominanceRelation::Objectives, &mut rng);
        assert_eq!(matrix.len(), 6);
        let count = |target: &[f64]| {
            matrix
                .rows
                .iter()
                .filter(|r| r.objectives.values() == target)
                .count()
        };
        assert_eq!(count(&[0.0, 1.0]), 3);
        assert_eq!(count(&[1.0, 0.0]), 3);
    }

    #[test]
    fn predator_matrix_pads_with_random_elites() {
        let members = vec![
            ind(&[0.0, 1.0], 0.0),
            ind(&[1.0, 0.0], 0.0),
            ind(&[2.0, 2.0], 0.0),
            ind(&[3.0, 3.0], 0.0),
            ind(&[4.0, 4.0], 0.0),
        ];
        let archive = Archive::new(members, 5);
        let mut rng = RandomSource::new(0);
        let matrix = build_predator_matrix(&archive, DominanceRelation::Objectives, &mut rng);
        assert_eq!(matrix.len(), 5);
        let count = |target: &[f64]| {
            matrix
                .rows
                .iter()
                .filter(|r| r.objectives.values() == target)
                .count()
        };
        // Two full repeats of both elites plus one random elite pick.
        let (a, b) = (count(&[0.0, 1.0]), count(&[1.0, 0.0]));
        assert_eq!(a + b, 5);
        assert!(a >= 2 && b >= 2);
    }

    #[test]
    fn predator_matrix_copies_full_nondominated_archive() {
        let members = vec![
            ind(&[0.0, 2.0], 0.0),
            ind(&[1.0, 1.0], 0.0),
            ind(&[2.0, 0.0], 0.0),
        ];
        let archive = Archive::new(members.clone(), 3);
        let mut rng = RandomSource::new(0);
        let matrix = build_predator_matrix(&archive, DominanceRelation::Objectives, &mut rng);
        for (row, source) in matrix.rows.iter().zip(&members) {
            assert_eq!(row.objectives.values(), source.objectives.values());
        }
    }

    #[test]
    fn stage_one_zero_randoms_leave_prey_in_place() {
        let zeros = StepVector(vec![0.0; 3]);
        let prey = [0.2, 0.4, 0.6];
        let predator = [0.9, 0.9, 0.9];
        let p = stage_one_position(&prey, &predator, 0.5, &zeros, &zeros, &zeros);
        assert_eq!(p, prey.to_vec());
    }

    #[test]
    fn stage_three_at_final_iteration_returns_predator() {
        let ones = StepVector(vec![1.0; 3]);
        let prey = [0.2, 0.4, 0.6];
        let predator = [0.9, 0.8, 0.7];
        let g = gamma(300, 300);
        let p = stage_three_position(&prey, &predator, 0.5, g, &ones, &ones);
        assert_eq!(p, predator.to_vec());
    }

    #[test]
    fn perturbation_changes_exactly_one_dimension() {
        let problem = sphere_problem(4);
        let position = [0.5, 0.5, 0.5, 0.5];
        let moved = perturb_position(&position, 2, 0.25, &problem);
        assert_eq!(moved[0], 0.5);
        assert_eq!(moved[1], 0.5);
        assert_eq!(moved[3], 0.5);
        assert_abs_diff_eq!(moved[2], 0.75);
    }

    #[test]
    fn perturbation_with_zero_gaussian_is_identity() {
        let problem = sphere_problem(4);
        let position = [0.1, 0.2, 0.3, 0.4];
        assert_eq!(perturb_position(&position, 1, 0.0, &problem), position.to_vec());
    }

    #[test]
    fn perturbation_preserves_cardinality() {
        let problem = sphere_problem(3);
        let mut rng = RandomSource::new(4);
        let pop = uniform_init(10, &problem, &mut rng).unwrap();
        let out = gaussian_elite_perturbation(&pop, &problem, &mut rng).unwrap();
        assert_eq!(out.len(), pop.len());
    }

    #[test]
    fn sde_fitness_hand_example() {
        let pool = vec![ind(&[0.0, 0.0], 0.0), ind(&[1.0, 1.0], 0.0)];
        assert_abs_diff_eq!(sde_fitness(&pool, 0), 2.0f64.sqrt());
        assert_abs_diff_eq!(sde_fitness(&pool, 1), 0.0);
    }

    #[test]
    fn sde_fitness_zero_for_duplicate() {
        let pool = vec![
            ind(&[0.3, 0.7], 0.0),
            ind(&[0.3, 0.7], 0.0),
            ind(&[0.9, 0.9], 0.0),
        ];
        assert_eq!(sde_fitness(&pool, 0), 0.0);
    }

    #[test]
    fn sde_fitness_zero_when_dominated_by_everyone() {
        let pool = vec![
            ind(&[5.0, 5.0], 0.0),
            ind(&[1.0, 1.0], 0.0),
            ind(&[2.0, 2.0], 0.0),
        ];
        assert_eq!(sde_fitness(&pool, 0), 0.0);
    }

    #[test]
    fn learning_rate_extremes() {
        let loser = [0.1, 0.9];
        let winner = [0.7, 0.3];
        assert_eq!(learn_position(&loser, &winner, 1.0), winner.to_vec());
        assert_eq!(learn_position(&loser, &winner, 0.0), loser.to_vec());
    }

    #[test]
    fn competition_learning_doubles_the_input() {
        let problem = sphere_problem(3);
        let config = RunConfig::new(2);
        let mut rng = RandomSource::new(8);
        let prey = uniform_init(6, &problem, &mut rng).unwrap();
        let perturbed = uniform_init(6, &problem, &mut rng).unwrap();
        let out = competition_learning(&prey, &perturbed, &problem, &config, &mut rng).unwrap();
        assert_eq!(out.len(), 12);
        for member in &out {
            for (j, &x) in member.position.iter().enumerate() {
                assert!(x >= problem.lower_bounds()[j] && x <= problem.upper_bounds()[j]);
            }
        }
    }

    #[test]
    fn elite_selection_keeps_an_exact_antichain() {
        let pool = vec![
            ind(&[0.0, 3.0], 0.0),
            ind(&[1.0, 2.0], 0.0),
            ind(&[2.0, 1.0], 0.0),
            ind(&[3.0, 0.0], 0.0),
        ];
        let refs = ReferencePointSet::das_dennis(2, 3).unwrap();
        let mut rng = RandomSource::new(0);
        let archive = elite_selection(pool.clone(), 4, DominanceRelation::Objectives, &refs, &mut rng);
        let mut got: Vec<Vec<f64>> = archive
            .members
            .iter()
            .map(|m| m.objectives.values().to_vec())
            .collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let want: Vec<Vec<f64>> = pool.iter().map(|m| m.objectives.values().to_vec()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn elite_selection_prefers_the_first_level_copies() {
        let mut pool: Vec<Individual> = (0..4).map(|_| ind(&[1.0, 1.0], 0.0)).collect();
        pool.extend((0..4).map(|_| ind(&[2.0, 2.0], 0.0)));
        let refs = ReferencePointSet::das_dennis(2, 3).unwrap();
        let mut rng = RandomSource::new(0);
        let archive = elite_selection(pool, 4, DominanceRelation::Objectives, &refs, &mut rng);
        assert!(archive
            .members
            .iter()
            .all(|m| m.objectives.values() == [1.0, 1.0]));
    }

    #[test]
    fn constrained_elite_selection_keeps_feasible_candidates() {
        let mut pool: Vec<Individual> = (0..4)
            .map(|i| ind(&[i as f64, 4.0 - i as f64], 0.0))
            .collect();
        pool.extend((0..4).map(|i| ind(&[-10.0 - i as f64, -10.0], 0.5 + i as f64)));
        let refs = ReferencePointSet::das_dennis(2, 3).unwrap();
        let mut rng = RandomSource::new(0);
        let archive = elite_selection(pool, 4, DominanceRelation::Constrained, &refs, &mut rng);
        assert!(archive.members.iter().all(|m| m.is_feasible()));
    }

    #[test]
    fn smoke_run_microscopic_budget() {
        let problem = sphere_problem(5);
        let mut config = RunConfig::new(2);
        config.divisions = 9; // archive of 10
        config.population_size = 12;
        config.max_iterations = 3;
        let result = run(&problem, &config).unwrap();
        assert_eq!(result.archive.len(), 10);
        assert_eq!(result.iterations, 3);
        for member in &result.archive.members {
            for (j, &x) in member.position.iter().enumerate() {
                assert!(x >= problem.lower_bounds()[j] && x <= problem.upper_bounds()[j]);
            }
        }
        // N initial evaluations plus 4*N_a per iteration.
        assert_eq!(result.evaluations, 12 + 3 * 4 * 10);
    }

    #[test]
    fn equal_seeds_give_bitwise_equal_archives() {
        let problem = sphere_problem(4);
        let mut config = RunConfig::new(2);
        config.divisions = 7;
        config.population_size = 10;
        config.max_iterations = 12;
        config.seed = 99;
        let a = run(&problem, &config).unwrap();
        let b = run(&problem, &config).unwrap();
        for (x, y) in a.archive.members.iter().zip(&b.archive.members) {
            assert_eq!(x.position, y.position);
            assert_eq!(x.objectives.values(), y.objectives.values());
            assert_eq!(x.violation, y.violation);
        }
    }

    #[test]
    fn degenerate_identical_objectives_collapse_to_a_point() {
        // Both objectives are the same sphere; the whole front is one point.
        let problem = ProblemSpec::new(2, vec![-1.0; 4], vec![1.0; 4], |x| {
            let s: f64 = x.iter().map(|v| v * v).sum();
            vec![s, s]
        })
        .unwrap();
        let mut config = RunConfig::new(2);
        config.divisions = 9;
        config.population_size = 12;
        config.max_iterations = 100;
        config.seed = 5;
        let result = run(&problem, &config).unwrap();
        let best = result
            .archive
            .members
            .iter()
            .map(|m| {
                let f = m.objectives.values();
                (f[0] * f[0] + f[1] * f[1]).sqrt()
            })
            .fold(f64::INFINITY, f64::min);
        assert!(best <= 1e-2, "distance to degenerate front point: {best}");
    }
}
