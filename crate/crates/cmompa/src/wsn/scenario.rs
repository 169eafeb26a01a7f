//! Deployment scenario model: candidate sites, monitoring targets, sensor
//! catalogue, radio parameters, and the JSON schema used by the CLI.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::movement::RandomSource;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn distance(&self, other: &Point3) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// One sensor model: sensing sphere radius (meters) and manufacturing cost.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SensorType {
    pub sensing_radius: f64,
    pub unit_cost: f64,
}

/// A candidate deployment location and its location-specific cost factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Site {
    pub position: Point3,
    pub location_cost: f64,
}

/// Probabilistic communication model parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadioParams {
    /// Communication range R_c (meters).
    pub comm_range: f64,
    /// Detection uncertainty R_e (meters).
    pub range_uncertainty: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    /// Link acceptance threshold delta on the communication probability.
    pub link_threshold: f64,
}

impl Default for RadioParams {
    fn default() -> Self {
        Self {
            comm_range: 10.0,
            range_uncertainty: 2.0,
            lambda1: 0.5,
            lambda2: 1.0,
            link_threshold: 0.8,
        }
    }
}

/// Coverage and connectivity degree requirements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRequirements {
    /// Every target must be sensed by at least this many nodes.
    pub k_coverage: u32,
    /// Every deployed node must have at least this many neighbors.
    pub c_connectivity: u32,
}

impl Default for DegreeRequirements {
    fn default() -> Self {
        Self {
            k_coverage: 1,
            c_connectivity: 1,
        }
    }
}

/// Full problem instance for the deployment optimizer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeploymentScenario {
    /// Axis-aligned bounding box, anchored at the origin.
    #[serde(rename = "box")]
    pub bounding_box: Point3,
    pub sites: Vec<Site>,
    pub targets: Vec<Point3>,
    pub types: Vec<SensorType>,
    pub radio: RadioParams,
    pub constraints: DegreeRequirements,
    /// Relaxation threshold for near-binary decision entries.
    pub epsilon: f64,
}

impl DeploymentScenario {
    pub fn site_count(&self) -> usize {
        self.sites.len()
    }

    pub fn type_count(&self) -> usize {
        self.types.len()
    }

    pub fn target_count(&self) -> usize {
        self.targets.len()
    }

    /// Decision-vector length of the relaxed formulation.
    pub fn dimension(&self) -> usize {
        self.site_count() * self.type_count()
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |message: String| Err(Error::InvalidScenario(message));
        if self.sites.is_empty() || self.targets.is_empty() || self.types.is_empty() {
            return fail("sites, targets, and types must all be non-empty".into());
        }
        if !(self.radio.range_uncertainty < self.radio.comm_range) {
            return fail(format!(
                "range uncertainty {} must be below the communication range {}",
                self.radio.range_uncertainty, self.radio.comm_range
            ));
        }
        if !(0.0..=1.0).contains(&self.radio.link_threshold) {
            return fail(format!(
                "link threshold {} must lie in [0, 1]",
                self.radio.link_threshold
            ));
        }
        if self.constraints.k_coverage < 1 || self.constraints.c_connectivity < 1 {
            return fail("degree requirements must be at least 1".into());
        }
        if !(self.epsilon > 0.0 && self.epsilon < 0.5) {
            return fail(format!("epsilon {} must lie in (0, 0.5)", self.epsilon));
        }
        for (v, t) in self.types.iter().enumerate() {
            if !(t.sensing_radius > 0.0) || !(t.unit_cost > 0.0) {
                return fail(format!("type {v} needs positive radius and cost"));
            }
        }
        for (i, site) in self.sites.iter().enumerate() {
            let p = site.position;
            let inside = (0.0..=self.bounding_box.x).contains(&p.x)
                && (0.0..=self.bounding_box.y).contains(&p.y)
                && (0.0..=self.bounding_box.z).contains(&p.z);
            if !inside {
                return fail(format!("site {i} lies outside the bounding box"));
            }
            if site.location_cost < 1.0 {
                return fail(format!("site {i} location cost must be >= 1"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let scenario: DeploymentScenario = serde_json::from_str(json)?;
        scenario.validate()?;
        Ok(scenario)
    }
}

/// Inputs for random scenario generation.
#[derive(Debug, Clone)]
pub struct ScenarioSpec {
    pub bounding_box: Point3,
    pub site_count: usize,
    pub target_count: usize,
    pub seed: u64,
    pub constraints: DegreeRequirements,
}

impl Default for ScenarioSpec {
    fn default() -> Self {
        Self {
            bounding_box: Point3 {
                x: 55.0,
                y: 55.0,
                z: 20.0,
            },
            site_count: 100,
            target_count: 300,
            seed: 0,
            constraints: DegreeRequirements::default(),
        }
    }
}

/// Standard sensor catalogue: radii 5/10/15 m at costs 2/5/10.
pub fn standard_sensor_types() -> Vec<SensorType> {
    vec![
        SensorType {
            sensing_radius: 5.0,
            unit_cost: 2.0,
        },
        SensorType {
            sensing_radius: 10.0,
            unit_cost: 5.0,
        },
        SensorType {
            sensing_radius: 15.0,
            unit_cost: 10.0,
        },
    ]
}

/// Uniformly places sites and targets in the box, draws integer location
/// costs in [1, 5], and applies the standard sensor and radio catalogue.
pub fn generate_scenario(spec: &ScenarioSpec) -> DeploymentScenario {
    assert!(spec.site_count >= 1 && spec.target_count >= 1);
    let mut rng = RandomSource::new(spec.seed);
    let point = |rng: &mut RandomSource, b: &Point3| Point3 {
        x: rng.uniform() * b.x,
        y: rng.uniform() * b.y,
        z: rng.uniform() * b.z,
    };
    let sites = (0..spec.site_count)
        .map(|_| Site {
            position: point(&mut rng, &spec.bounding_box),
            location_cost: (rng.index(5) + 1) as f64,
        })
        .collect();
    let targets = (0..spec.target_count)
        .map(|_| point(&mut rng, &spec.bounding_box))
        .collect();
    DeploymentScenario {
        bounding_box: spec.bounding_box,
        sites,
        targets,
        types: standard_sensor_types(),
        radio: RadioParams::default(),
        constraints: spec.constraints,
        epsilon: 0.1,
    }
}
