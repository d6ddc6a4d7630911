//! The on-disk scenario format: JSON with every rational as a `"p/q"` string.

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::geom::{SimplicialComplex, SubBall};
use crate::plmap::PLMap;
use crate::rational::{format_rational, parse_rational, Point, Rational};
use crate::scenarios::{resolve_generator, Expected, GeneratorSpec, Scenario};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    pub schema_version: u32,
    pub dimension: usize,
    pub complex: ComplexBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<ComplexBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<SubBallBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<SubBallBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<SubBallBlock>,
    pub map: MapBlock,
    pub metadata: Metadata,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexBlock {
    pub vertices: Vec<Vec<String>>,
    pub simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<i8>>,
}

/// Faces of `X`, in the order and orientation they are used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubBallBlock {
    pub simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<i8>>,
}

/// Either explicit vertex images or a generator to build them; both may be present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapBlock {
    /// Domain of the map when it is not `X` itself.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<ComplexBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<Expected>,
}

pub(crate) fn fmt_points(points: &[Point]) -> Vec<Vec<String>> {
    points.iter().map(|p| fmt_point(p)).collect()
}

pub(crate) fn fmt_point(p: &[Rational]) -> Vec<String> {
    p.iter().map(format_rational).collect()
}

fn parse_points(rows: &[Vec<String>]) -> Result<Vec<Point>, CliError> {
    rows.iter().map(|r| r.iter().map(|c| parse_rational(c).map_err(CliError::from)).collect()).collect()
}

impl ComplexBlock {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexBlock {
            vertices: fmt_points(k.vertices()),
            simplices: k.simplices().to_vec(),
            orientation: k.orientation().map(<[i8]>::to_vec),
        }
    }

    pub fn build(&self, dimension: usize) -> Result<SimplicialComplex, CliError> {
        let k = SimplicialComplex::new(dimension, parse_points(&self.vertices)?, self.simplices.clone())?;
        Ok(match &self.orientation {
            Some(o) => k.with_orientation(o.clone())?,
            None => k,
        })
    }
}

impl SubBallBlock {
    fn from_ball(b: &SubBall) -> Self {
        SubBallBlock { simplices: b.complex().simplices().to_vec(), orientation: b.complex().orientation().map(<[i8]>::to_vec) }
    }

    fn build(&self, parent: &SimplicialComplex) -> Result<SubBall, CliError> {
        let arity = self.simplices.first().map_or(0, Vec::len);
        let ball = if arity >= 4 {
            SubBall::by_construction(parent, self.simplices.clone())?
        } else {
            SubBall::from_simplices(parent, self.simplices.clone())?
        };
        Ok(match &self.orientation {
            Some(o) => {
                let oriented = ball.complex().with_orientation(o.clone())?;
                ball.with_orientation(oriented)
            }
            None => ball,
        })
    }
}

impl ScenarioDocument {
    pub fn from_scenario(s: &Scenario) -> Self {
        let domain = (s.map.domain() != &s.x).then(|| ComplexBlock::from_complex(s.map.domain()));
        ScenarioDocument {
            schema_version: SCHEMA_VERSION,
            dimension: s.x.ambient_dim(),
            complex: ComplexBlock::from_complex(&s.x),
            target: s.target.as_ref().map(ComplexBlock::from_complex),
            y: s.y.as_ref().map(SubBallBlock::from_ball),
            d: s.d.as_ref().map(SubBallBlock::from_ball),
            e: s.e.as_ref().map(SubBallBlock::from_ball),
            map: MapBlock { domain, images: Some(fmt_points(s.map.images())), generator: s.generator.clone() },
            metadata: Metadata { name: s.name.clone(), notes: Vec::new(), expected: s.expected.clone() },
        }
    }

    /// Builds and validates every geometric object in the document.
    pub fn to_scenario(&self) -> Result<Scenario, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Schema(format!("unsupported schema_version {}", self.schema_version)));
        }
        let x = self.complex.build(self.dimension)?;
        let target = self.target.as_ref().map(|t| t.build(self.dimension)).transpose()?;
        let domain = match &self.map.domain {
            Some(b) => b.build(self.dimension)?,
            None => x.clone(),
        };
        let map = match (&self.map.images, &self.map.generator) {
            (Some(images), _) => {
                let images = parse_points(images)?;
                let target_dim = images.first().map_or(self.dimension, Vec::len);
                PLMap::new(domain, target_dim, images)?
            }
            (None, Some(spec)) => resolve_generator(spec, &domain)?,
            (None, None) => return Err(CliError::Schema("map block needs images or a generator".into())),
        };
        let ball = |b: &Option<SubBallBlock>| b.as_ref().map(|b| b.build(&x)).transpose();
        Ok(Scenario {
            name: self.metadata.name.clone(),
            y: ball(&self.y)?,
            d: ball(&self.d)?,
            e: ball(&self.e)?,
            x,
            target,
            map,
            generator: self.map.generator.clone(),
            expected: self.metadata.expected.clone(),
        })
    }
}

/// Parses and validates a scenario file.
pub fn parse_scenario(bytes: &[u8]) -> Result<Scenario, CliError> {
    parse_document(bytes)?.to_scenario()
}

pub fn parse_document(bytes: &[u8]) -> Result<ScenarioDocument, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CliError::Schema(format!("not UTF-8: {e}")))?;
    serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
}

/// Canonical pretty JSON with a trailing newline.
pub fn serialize_scenario(s: &Scenario) -> String {
    to_json(&ScenarioDocument::from_scenario(s))
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents serialize");
    out.push('\n');
    out
}
