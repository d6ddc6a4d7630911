//! Exact decisions of the hypotheses of the fixed-point theorems on PL data.

mod blockading;
mod frame;
mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use blockading::{check_blockading, BlockadingResult, BlockadingWitness, Refutation};
pub use frame::BoundaryFrame;
pub(crate) use theorems::boundary_degree;
pub use theorems::{check_cor34, check_cor36, check_cor49, check_t33, check_t35, check_t47, check_t48, CheckInput};

pub const DEFAULT_MAX_DEPTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Theorem {
    T33,
    T35,
    T47,
    T48,
    Cor34,
    Cor36,
    Cor49,
}

impl Theorem {
    pub const ALL: [Theorem; 7] =
        [Theorem::T33, Theorem::T35, Theorem::T47, Theorem::T48, Theorem::Cor34, Theorem::Cor36, Theorem::Cor49];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T33 => "T33",
            Theorem::T35 => "T35",
            Theorem::T47 => "T47",
            Theorem::T48 => "T48",
            Theorem::Cor34 => "Cor34",
            Theorem::Cor36 => "Cor36",
            Theorem::Cor49 => "Cor49",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    Pass,
    Fail,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), status, detail: detail.into() }
    }

    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        Check::new(name, CheckStatus::Pass, detail)
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> Self {
        Check::new(name, CheckStatus::Fail, detail)
    }

    pub fn undecided(name: &str, detail: impl Into<String>) -> Self {
        Check::new(name, CheckStatus::Undecided, detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conclusion {
    FixedPointGuaranteed,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub theorem: Theorem,
    pub checks: Vec<Check>,
    pub conclusion: Conclusion,
}

impl HypothesisReport {
    /// The conclusion is derived: a fixed point is guaranteed only when every check passed.
    pub fn new(theorem: Theorem, checks: Vec<Check>) -> Self {
        let all_pass = !checks.is_empty() && checks.iter().all(|c| c.status == CheckStatus::Pass);
        let conclusion = if all_pass { Conclusion::FixedPointGuaranteed } else { Conclusion::NotApplicable };
        HypothesisReport { theorem, checks, conclusion }
    }

    pub fn guaranteed(&self) -> bool {
        self.conclusion == Conclusion::FixedPointGuaranteed
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn status_of(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    pub fn has_undecided(&self) -> bool {
        self.count(CheckStatus::Undecided) > 0
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {:?}", self.theorem, self.conclusion)?;
        for c in &self.checks {
            writeln!(f, "  [{:?}] {}: {}", c.status, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Runs one theorem's checks.
pub fn check(theorem: Theorem, input: &CheckInput<'_>, max_depth: usize) -> HypothesisReport {
    match theorem {
        Theorem::T33 => check_t33(input.f, input.x, input.y, max_depth),
        Theorem::T35 => check_t35(input.f, input.x, input.y, max_depth),
        Theorem::T47 => match input.d {
            Some(d) => check_t47(input.f, input.x, input.y, d, max_depth),
            None => HypothesisReport::new(Theorem::T47, vec![Check::fail("D is a ball meeting the boundary in a ball", "no sub-ball D given")]),
        },
        Theorem::T48 => check_t48(input.f, input.x, input.y, max_depth),
        Theorem::Cor34 => check_cor34(input.f, input.x, input.y, max_depth),
        Theorem::Cor36 => check_cor36(input.f, input.x, input.y, max_depth),
        Theorem::Cor49 => check_cor49(input.f, input.x, input.y, max_depth),
    }
}
