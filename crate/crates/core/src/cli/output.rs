//! Result documents written by the commands. Field order is fixed and every
//! list is in a deterministic order, so equal runs give equal bytes.

use serde::{Deserialize, Serialize};

use super::document::{fmt_point, ScenarioDocument, SCHEMA_VERSION};
use super::{CliError, ExitCode, SolveMode};
use crate::degree::DegreeError;
use crate::fixpoint::{
    applicable_theorems, certify, pl_evaluator, sampled_residual_search, CertificateStatus, FixedPointSet, FixpointError,
};
use crate::hypotheses::{check, CheckInput, HypothesisReport, Theorem};
use crate::rational::format_rational;
use crate::scenarios::{degree_targets, scenario_degree, DegreeTarget, Scenario};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeDoc {
    pub schema_version: u32,
    pub scenario: String,
    pub target: DegreeTarget,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn degree_document(s: &Scenario, target: DegreeTarget) -> (DegreeDoc, ExitCode) {
    let expected = s.expected_degree(target);
    let mut doc = DegreeDoc {
        schema_version: SCHEMA_VERSION,
        scenario: s.name.clone(),
        target,
        value: None,
        method: None,
        provenance: None,
        expected,
        error: None,
    };
    let code = match scenario_degree(s, target) {
        Ok(d) => {
            doc.value = Some(d.value);
            doc.method = Some(d.method.name().to_string());
            doc.provenance = Some(d.provenance);
            match expected {
                Some(e) if e != d.value => {
                    doc.error = Some(format!("computed {} but the scenario expects {e}", d.value));
                    ExitCode::InputError
                }
                _ => ExitCode::Success,
            }
        }
        Err(e) => {
            let code = match e {
                DegreeError::MissingInput(_) => ExitCode::InputError,
                _ => ExitCode::NotApplicable,
            };
            doc.error = Some(e.to_string());
            code
        }
    };
    (doc, code)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub schema_version: u32,
    pub scenario: String,
    /// `auto` or the theorem asked for.
    pub theorem: String,
    pub max_depth: usize,
    /// First report, in checking order, that guarantees a fixed point.
    pub guaranteed_by: Option<Theorem>,
    pub reports: Vec<HypothesisReport>,
}

fn reports_code(reports: &[HypothesisReport]) -> ExitCode {
    if reports.iter().any(HypothesisReport::guaranteed) {
        ExitCode::Success
    } else if reports.iter().any(HypothesisReport::has_undecided) {
        ExitCode::Undecided
    } else {
        ExitCode::NotApplicable
    }
}

pub fn check_document(s: &Scenario, hint: Option<Theorem>, max_depth: usize) -> (CheckDoc, ExitCode) {
    let theorems = hint.map_or_else(|| applicable_theorems(s), |t| vec![t]);
    let reports: Vec<HypothesisReport> = match &s.y {
        Some(y) => {
            let input = CheckInput { f: &s.map, x: &s.x, y, d: s.d.as_ref() };
            theorems.into_iter().map(|t| check(t, &input, max_depth)).collect()
        }
        None => Vec::new(),
    };
    let doc = CheckDoc {
        schema_version: SCHEMA_VERSION,
        scenario: s.name.clone(),
        theorem: hint.map_or_else(|| "auto".to_string(), |t| t.name().to_string()),
        max_depth,
        guaranteed_by: reports.iter().find(|r| r.guaranteed()).map(|r| r.theorem),
        reports,
    };
    let code = reports_code(&doc.reports);
    (doc, code)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub carrier: usize,
    pub kind: String,
    pub vertices: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedPointsDoc {
    pub exact: bool,
    pub components: Vec<ComponentDoc>,
}

impl FixedPointsDoc {
    fn from_set(f: &FixedPointSet) -> Self {
        FixedPointsDoc {
            exact: f.exact,
            components: f
                .components
                .iter()
                .map(|c| ComponentDoc {
                    carrier: c.carrier,
                    kind: c.shape.kind().to_string(),
                    vertices: c.shape.vertices().iter().map(|p| fmt_point(p)).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleDoc {
    pub point: Vec<f64>,
    pub residual: f64,
}

/// A certificate (exact mode) or a labeled, uncertified sample list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub schema_version: u32,
    pub scenario: String,
    pub mode: String,
    pub certified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub guaranteed_by: Vec<Theorem>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<HypothesisReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_points: Option<FixedPointsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<SampleDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn solve_document(
    s: &Scenario,
    mode: SolveMode,
    hint: Option<Theorem>,
    max_depth: usize,
    grid_depth: usize,
    tol: f64,
) -> Result<(SolveDoc, ExitCode), CliError> {
    if s.map.target_dim() != s.x.ambient_dim() || s.x.dim() != s.x.ambient_dim() {
        return Err(CliError::Usage("solving needs a map from a full-dimensional X into its own ambient space".into()));
    }
    let mut doc = SolveDoc {
        schema_version: SCHEMA_VERSION,
        scenario: s.name.clone(),
        mode: String::new(),
        certified: false,
        status: None,
        guaranteed_by: Vec::new(),
        reports: Vec::new(),
        fixed_points: None,
        residual: None,
        tol: None,
        samples: None,
        note: None,
    };
    match mode {
        SolveMode::Exact => {
            let c = certify(s, hint, max_depth);
            doc.mode = "exact".into();
            doc.certified = true;
            doc.status = Some(c.status.name().to_string());
            doc.guaranteed_by = c.guaranteed_by();
            doc.residual = Some(format_rational(&c.residual));
            let fixed = c.fixed_points.as_ref().expect("self-map checked above");
            doc.fixed_points = Some(FixedPointsDoc::from_set(fixed));
            doc.reports = c.reports;
            let code = match c.status {
                CertificateStatus::Inconsistent => ExitCode::InputError,
                _ if fixed.is_empty() => ExitCode::NotApplicable,
                _ => ExitCode::Success,
            };
            Ok((doc, code))
        }
        SolveMode::Sampled => {
            doc.mode = "sampled".into();
            doc.tol = Some(tol);
            doc.note = Some("approximate search; not a certificate".into());
            let eval = pl_evaluator(&s.map);
            match sampled_residual_search(&eval, &s.x, grid_depth, tol) {
                Ok(points) => {
                    doc.samples = Some(points.into_iter().map(|p| SampleDoc { point: p.point, residual: p.residual }).collect());
                    Ok((doc, ExitCode::Success))
                }
                Err(e @ FixpointError::ToleranceNotReached { .. }) => {
                    doc.samples = Some(Vec::new());
                    doc.note = Some(format!("approximate search; not a certificate; {e}"));
                    Ok((doc, ExitCode::NotApplicable))
                }
                Err(e) => Err(CliError::Usage(e.to_string())),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub schema_version: u32,
    pub scenario: ScenarioDocument,
    pub degrees: Vec<DegreeDoc>,
    pub check: CheckDoc,
    pub solve: SolveDoc,
}

/// Everything about a scenario in one self-contained document.
pub fn report_document(s: &Scenario, max_depth: usize) -> Result<(ReportDoc, ExitCode), CliError> {
    let degrees = degree_targets(s).into_iter().map(|t| degree_document(s, t).0).collect();
    let (check, check_code) = check_document(s, None, max_depth);
    let (solve, solve_code) = solve_document(s, SolveMode::Exact, None, max_depth, 0, 0.0)?;
    let code = if solve_code == ExitCode::InputError { solve_code } else { check_code };
    let doc = ReportDoc { schema_version: SCHEMA_VERSION, scenario: ScenarioDocument::from_scenario(s), degrees, check, solve };
    Ok((doc, code))
}
