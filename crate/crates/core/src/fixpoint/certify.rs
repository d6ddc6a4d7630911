use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{exact_pl_fixed_points, FixedPointSet};
use crate::hypotheses::{check, CheckInput, HypothesisReport, Theorem};
use crate::rational::{max_abs_diff, Rational};
use crate::scenarios::Scenario;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateStatus {
    /// Some theorem's hypotheses all pass and the exact set is nonempty.
    TheoremConfirmed,
    #[serde(rename = "TheoremNotApplicable_FixedPointAnyway")]
    TheoremNotApplicableFixedPointAnyway,
    #[serde(rename = "TheoremNotApplicable_NoFixedPoint")]
    TheoremNotApplicableNoFixedPoint,
    /// A guaranteed fixed point is missing from the exact set: a bug, never a valid outcome.
    Inconsistent,
}

impl CertificateStatus {
    pub fn name(self) -> &'static str {
        match self {
            CertificateStatus::TheoremConfirmed => "TheoremConfirmed",
            CertificateStatus::TheoremNotApplicableFixedPointAnyway => "TheoremNotApplicable_FixedPointAnyway",
            CertificateStatus::TheoremNotApplicableNoFixedPoint => "TheoremNotApplicable_NoFixedPoint",
            CertificateStatus::Inconsistent => "Inconsistent",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub scenario: String,
    pub reports: Vec<HypothesisReport>,
    /// `None` when the map is not a self-map of `X`'s ambient space.
    pub fixed_points: Option<FixedPointSet>,
    /// Largest `|f(p) - p|` over the vertices of all components; zero unless something is broken.
    pub residual: Rational,
    pub status: CertificateStatus,
}

impl Certificate {
    pub fn guaranteed_by(&self) -> Vec<Theorem> {
        self.reports.iter().filter(|r| r.guaranteed()).map(|r| r.theorem).collect()
    }
}

/// The main theorems in the order automatic checking tries them, skipping
/// those whose inputs the scenario lacks.
pub fn applicable_theorems(s: &Scenario) -> Vec<Theorem> {
    if s.y.is_none() {
        return Vec::new();
    }
    [Theorem::T33, Theorem::T35, Theorem::T47, Theorem::T48].into_iter().filter(|&t| t != Theorem::T47 || s.d.is_some()).collect()
}

/// Runs the hypothesis checks (one theorem, or every applicable one when
/// `hint` is `None`), solves for the exact fixed-point set and cross-checks
/// the two.
pub fn certify(s: &Scenario, hint: Option<Theorem>, max_depth: usize) -> Certificate {
    let theorems = match hint {
        Some(t) => vec![t],
        None => applicable_theorems(s),
    };
    let reports: Vec<HypothesisReport> = match &s.y {
        Some(y) => {
            let input = CheckInput { f: &s.map, x: &s.x, y, d: s.d.as_ref() };
            theorems.into_iter().map(|t| check(t, &input, max_depth)).collect()
        }
        None => Vec::new(),
    };
    let self_map = s.map.target_dim() == s.x.ambient_dim() && s.x.dim() == s.x.ambient_dim();
    let fixed_points = self_map.then(|| exact_pl_fixed_points(&s.map));
    let mut residual = Rational::zero();
    for c in fixed_points.iter().flat_map(|f| &f.components) {
        for p in c.shape.vertices() {
            let r = match s.map.evaluate(p) {
                Ok(y) => max_abs_diff(&y, p),
                Err(_) => Rational::from_integer(1.into()),
            };
            if r > residual {
                residual = r;
            }
        }
    }
    let guaranteed = reports.iter().any(HypothesisReport::guaranteed);
    let nonempty = fixed_points.as_ref().is_some_and(|f| !f.is_empty());
    let status = match (guaranteed, nonempty) {
        (true, true) => CertificateStatus::TheoremConfirmed,
        (true, false) => CertificateStatus::Inconsistent,
        (false, true) => CertificateStatus::TheoremNotApplicableFixedPointAnyway,
        (false, false) => CertificateStatus::TheoremNotApplicableNoFixedPoint,
    };
    let status = if residual.is_zero() { status } else { CertificateStatus::Inconsistent };
    Certificate { scenario: s.name.clone(), reports, fixed_points, residual, status }
}
