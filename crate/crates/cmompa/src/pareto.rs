//! Pareto dominance, constrained domination, and fast non-dominated sorting.

use crate::problem::{Individual, ObjectiveVector};

/// Strict Pareto dominance: `a` is no worse than `b` everywhere and strictly
/// better somewhere. Identical vectors do not dominate each other.
pub fn dominates(a: &ObjectiveVector, b: &ObjectiveVector) -> bool {
    assert_eq!(a.len(), b.len(), "objective vector length mismatch");
    let mut strictly_better = false;
    for i in 0..a.len() {
        if a[i] > b[i] {
            return false;
        }
        if a[i] < b[i] {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Constrained domination: feasible beats infeasible, less-infeasible beats
/// more-infeasible, and Pareto dominance decides between feasible pairs.
pub fn constrained_dominates(a: &Individual, b: &Individual) -> bool {
    match (a.violation == 0.0, b.violation == 0.0) {
        (true, true) => dominates(&a.objectives, &b.objectives),
        (false, false) => a.violation < b.violation,
        (true, false) => true,
        (false, true) => false,
    }
}

/// Which domination predicate drives sorting and elite selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceRelation {
    /// Plain Pareto dominance on objectives.
    Objectives,
    /// Constrained domination (violation-aware).
    Constrained,
}

impl DominanceRelation {
    pub fn dominates(&self, a: &Individual, b: &Individual) -> bool {
        match self {
            DominanceRelation::Objectives => dominates(&a.objectives, &b.objectives),
            DominanceRelation::Constrained => constrained_dominates(a, b),
        }
    }
}

/// Fast non-dominated sort. Returns index sets: level 0 is dominated by
/// nobody, each later level only by members of earlier ones. Levels
/// partition the input.
pub fn fast_nondominated_sort(pop: &[Individual], relation: DominanceRelation) -> Vec<Vec<usize>> {
    assert!(!pop.is_empty(), "cannot sort an empty population");
    let n = pop.len();
    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut domination_count = vec![0usize; n];

    for p in 0..n {
        for q in (p + 1)..n {
            if relation.dominates(&pop[p], &pop[q]) {
                dominated_by[p].push(q);
                domination_count[q] += 1;
            } else if relation.dominates(&pop[q], &pop[p]) {
                dominated_by[q].push(p);
                domination_count[p] += 1;
            }
        }
    }

    let mut levels = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| domination_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            for &q in &dominated_by[p] {
                domination_count[q] -= 1;
                if domination_count[q] == 0 {
                    next.push(q);
                }
            }
        }
        levels.push(std::mem::take(&mut current));
        current = next;
    }
    levels
}
