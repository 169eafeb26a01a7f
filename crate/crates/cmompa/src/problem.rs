//! Foundation value types shared by the optimizer, benchmarks, metrics, and
//! the deployment model.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A point in objective space. Minimization convention throughout: objectives
/// the application wants maximized are stored negated.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector(Vec<f64>);

impl ObjectiveVector {
    /// Wraps raw objective values. Every entry must be finite.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteObjective {
                    index,
                    value,
                    position: Vec::new(),
                });
            }
        }
        Ok(Self(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

impl std::ops::Index<usize> for ObjectiveVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl fmt::Display for ObjectiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// One evaluated solution: decision vector, objectives, constraint violation.
#[derive(Debug, Clone)]
pub struct Individual {
    pub position: Vec<f64>,
    pub objectives: ObjectiveVector,
    /// Scalar infeasibility; zero for unconstrained problems and for feasible
    /// solutions of constrained ones.
    pub violation: f64,
}

impl Individual {
    pub fn is_feasible(&self) -> bool {
        self.violation == 0.0
    }
}

/// An ordered collection of evaluated individuals.
pub type Population = Vec<Individual>;

/// The elite set carried between iterations. After every elite selection the
/// member count equals `capacity` exactly.
#[derive(Debug, Clone)]
pub struct Archive {
    pub members: Vec<Individual>,
    pub capacity: usize,
}

impl Archive {
    pub fn new(members: Vec<Individual>, capacity: usize) -> Self {
        assert!(
            members.len() <= capacity,
            "archive holds {} members but capacity is {}",
            members.len(),
            capacity
        );
        Self { members, capacity }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Objective vectors of all members, in archive order.
    pub fn objectives(&self) -> Vec<ObjectiveVector> {
        self.members.iter().map(|m| m.objectives.clone()).collect()
    }
}

type Evaluator = dyn Fn(&[f64]) -> Vec<f64> + Send + Sync;
type ViolationFn = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// An abstract box-bounded minimization problem: bounds, an objective
/// evaluator, and an optional constraint-violation function.
#[derive(Clone)]
pub struct ProblemSpec {
    dimension: usize,
    objective_count: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    evaluator: Arc<Evaluator>,
    violation: Option<Arc<ViolationFn>>,
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("dimension", &self.dimension)
            .field("objective_count", &self.objective_count)
            .field("constrained", &self.violation.is_some())
            .finish()
    }
}

impl ProblemSpec {
    /// Unconstrained problem; the violation function is constant zero.
    pub fn new<F>(
        objective_count: usize,
        lower: Vec<f64>,
        upper: Vec<f64>,
        evaluator: F,
    ) -> Result<Self>
    where
        F: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    {
        Self::build(objective_count, lower, upper, Arc::new(evaluator), None)
    }

    /// Constrained problem with an explicit violation function (>= 0, zero
    /// iff feasible).
    pub fn new_constrained<F, V>(
        objective_count: usize,
        lower: Vec<f64>,
        upper: Vec<f64>,
        evaluator: F,
        violation: V,
    ) -> Result<Self>
    where
        F: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
        V: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::build(
            objective_count,
            lower,
            upper,
            Arc::new(evaluator),
            Some(Arc::new(violation)),
        )
    }

    fn build(
        objective_count: usize,
        lower: Vec<f64>,
        upper: Vec<f64>,
        evaluator: Arc<Evaluator>,
        violation: Option<Arc<ViolationFn>>,
    ) -> Result<Self> {
        if lower.len() != upper.len() || lower.is_empty() {
            return Err(Error::InvalidProblem(format!(
                "bound vectors must be non-empty and equal length (got {} and {})",
                lower.len(),
                upper.len()
            )));
        }
        if objective_count == 0 {
            return Err(Error::InvalidProblem("objective count must be >= 1".into()));
        }
        for j in 0..lower.len() {
            if !(lower[j] < upper[j]) {
                return Err(Error::InvalidProblem(format!(
                    "lower bound must be strictly below upper bound in dimension {j} ({} vs {})",
                    lower[j], upper[j]
                )));
            }
        }
        Ok(Self {
            dimension: lower.len(),
            objective_count,
            lower,
            upper,
            evaluator,
            violation,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn objective_count(&self) -> usize {
        self.objective_count
    }

    pub fn lower_bounds(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper_bounds(&self) -> &[f64] {
        &self.upper
    }

    pub fn is_constrained(&self) -> bool {
        self.violation.is_some()
    }

    /// Evaluates a position into a full `Individual`. Non-finite objectives
    /// are a fatal error; they are never silently ranked.
    pub fn evaluate(&self, position: Vec<f64>) -> Result<Individual> {
        assert_eq!(position.len(), self.dimension, "position length mismatch");
        let raw = (self.evaluator)(&position);
        assert_eq!(
            raw.len(),
            self.objective_count,
            "evaluator returned {} objectives, expected {}",
            raw.len(),
            self.objective_count
        );
        for (index, &value) in raw.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteObjective {
                    index,
                    value,
                    position,
                });
            }
        }
        let violation = match &self.violation {
            Some(v) => {
                let value = v(&position);
                if !value.is_finite() || value < 0.0 {
                    return Err(Error::InvalidViolation { value });
                }
                value
            }
            None => 0.0,
        };
        Ok(Individual {
            position,
            objectives: ObjectiveVector(raw),
            violation,
        })
    }
}

/// Projects every coordinate of `x` into the problem's box. In-bounds
/// coordinates are left untouched.
pub fn clamp_to_bounds(x: &mut [f64], problem: &ProblemSpec) {
    assert_eq!(x.len(), problem.dimension(), "position length mismatch");
    for (j, value) in x.iter_mut().enumerate() {
        *value = value.clamp(problem.lower[j], problem.upper[j]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_problem(d: usize) -> ProblemSpec {
        ProblemSpec::new(2, vec![0.0; d], vec![1.0; d], |x| {
            vec![x[0], 1.0 - x[0]]
        })
        .unwrap()
    }

    #[test]
    fn clamp_is_identity_inside_the_box() {
        let p = unit_problem(3);
        let mut x = vec![0.2, 0.5, 0.9];
        let orig = x.clone();
        clamp_to_bounds(&mut x, &p);
        assert_eq!(x, orig);
    }

    #[test]
    fn clamp_projects_out_of_box_coordinates() {
        let p = unit_problem(3);
        let mut x = vec![2.0, -5.0, 0.5];
        clamp_to_bounds(&mut x, &p);
        assert_eq!(x, vec![1.0, 0.0, 0.5]);
    }

    #[test]
    fn degenerate_box_rejected_at_construction() {
        let err = ProblemSpec::new(1, vec![1.0, 0.0], vec![1.0, 1.0], |_| vec![0.0]);
        assert!(err.is_err());
    }

    #[test]
    fn nan_objective_is_fatal() {
        let p = ProblemSpec::new(1, vec![0.0], vec![1.0], |_| vec![f64::NAN]).unwrap();
        assert!(matches!(
            p.evaluate(vec![0.5]),
            Err(Error::NonFiniteObjective { .. })
        ));
    }

    #[test]
    fn violation_defaults_to_zero_for_unconstrained() {
        let p = unit_problem(2);
        let ind = p.evaluate(vec![0.3, 0.4]).unwrap();
        assert_eq!(ind.violation, 0.0);
        assert!(ind.is_feasible());
    }
}
