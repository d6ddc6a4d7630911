//! Deterministic generators for concrete theorem instances and negative controls.

mod degrees;
mod generators;
pub mod random;
pub mod shapes;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{GeomError, SimplicialComplex, SubBall};
use crate::hypotheses::Theorem;
use crate::plmap::{PLMap, PlMapError};
use crate::rational::{Point, Rational};

pub use degrees::{degree_targets, scenario_degree};
pub use generators::{
    gen_by_name, gen_degree_d_circle_map, gen_halfspace, gen_negative_control, gen_relative_disk_maps, gen_rotation_disk,
    gen_t33_instances, gen_theorem47, halfspace_from_map, resolve_generator, scenario_names, NegativeKind,
};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    /// Stated outright by the theorem or lemma being exercised.
    FromPaper,
    /// Forced by the construction, e.g. by symmetry.
    Forced,
    /// Computed by an independent oracle when the generator was written.
    OracleDerived,
}

/// Which degree a scenario's expected value refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeTarget {
    /// The injective map on `D`, or on `X` when no `D` is given.
    Injective,
    /// The restriction to the sphere `∂Y`.
    Boundary,
    /// A sphere map from `X` to the scenario's target sphere.
    Sphere,
    /// A self-map of the ball `X` read off its boundary.
    Relative,
    /// The restriction to the face ball `E`, projected off the last axis.
    Face,
}

impl DegreeTarget {
    pub const ALL: [DegreeTarget; 5] =
        [DegreeTarget::Injective, DegreeTarget::Boundary, DegreeTarget::Sphere, DegreeTarget::Relative, DegreeTarget::Face];

    pub fn name(self) -> &'static str {
        match self {
            DegreeTarget::Injective => "injective",
            DegreeTarget::Boundary => "boundary",
            DegreeTarget::Sphere => "sphere",
            DegreeTarget::Relative => "relative",
            DegreeTarget::Face => "face",
        }
    }
}

impl std::str::FromStr for DegreeTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DegreeTarget::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| format!("unknown degree target {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExpectedValue {
    Degree { target: DegreeTarget, value: i64 },
    Conclusion { theorem: Theorem, guaranteed: bool },
    /// The report for `theorem` has exactly one failed check, at this index.
    OnlyFailure { theorem: Theorem, check: usize },
    FixedPoints { nonempty: bool },
    /// The exact fixed-point set is this single point, rationals as `"p/q"`.
    UniqueFixedPoint { point: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(flatten)]
    pub value: ExpectedValue,
    pub provenance: Provenance,
}

impl Expected {
    pub fn new(value: ExpectedValue, provenance: Provenance) -> Self {
        Expected { value, provenance }
    }
}

/// How a scenario's map was specified.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    #[serde(default)]
    pub params: serde_json::Map<String, serde_json::Value>,
}

/// A complete instance: the ball, its distinguished sub-balls, the map and
/// what the pipeline should find.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub x: SimplicialComplex,
    /// Target sphere for sphere maps.
    pub target: Option<SimplicialComplex>,
    pub y: Option<SubBall>,
    pub d: Option<SubBall>,
    pub e: Option<SubBall>,
    pub map: PLMap,
    pub generator: Option<GeneratorSpec>,
    pub expected: Vec<Expected>,
}

impl Scenario {
    pub fn expected_degree(&self, target: DegreeTarget) -> Option<i64> {
        self.expected.iter().find_map(|e| match e.value {
            ExpectedValue::Degree { target: t, value } if t == target => Some(value),
            _ => None,
        })
    }

    pub fn expected_conclusion(&self, theorem: Theorem) -> Option<bool> {
        self.expected.iter().find_map(|e| match e.value {
            ExpectedValue::Conclusion { theorem: t, guaranteed } if t == theorem => Some(guaranteed),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("bad generator parameter: {0}")]
    BadParameter(String),
    #[error("degree out of range: {0}")]
    DegreeOutOfRange(i64),
    #[error("image of D is not in a closed half-space touching E")]
    StraddlesAxis,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Map(#[from] PlMapError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        })
    }
}

/// Splitting of `R^n` along the last coordinate: `p` drops it, `q` reads it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfspaceFrame {
    pub side: Side,
}

impl HalfspaceFrame {
    pub fn p(x: &[Rational]) -> Point {
        x[..x.len() - 1].to_vec()
    }

    pub fn q(x: &[Rational]) -> Rational {
        x[x.len() - 1].clone()
    }

    /// The closed half-space holding all of `points`, preferring `Plus` when they lie on the hyperplane.
    pub fn containing<'a>(points: impl IntoIterator<Item = &'a [Rational]>) -> Option<HalfspaceFrame> {
        let (mut pos, mut neg) = (false, false);
        for p in points {
            match crate::rational::sign(&Self::q(p)) {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        match (pos, neg) {
            (true, true) => None,
            (false, true) => Some(HalfspaceFrame { side: Side::Minus }),
            _ => Some(HalfspaceFrame { side: Side::Plus }),
        }
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        match self.side {
            Side::Plus => crate::rational::sign(&Self::q(x)) >= 0,
            Side::Minus => crate::rational::sign(&Self::q(x)) <= 0,
        }
    }
}
