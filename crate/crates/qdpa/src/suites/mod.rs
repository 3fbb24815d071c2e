//! Law-by-law verification suites.
//!
//! Each suite checks the identities one module is responsible for, at the
//! session parameters (dimension, field, kind, degree bound, Weyl variant,
//! RNG seed), and reports every law with a pass/fail/skipped status and a
//! counterexample when something breaks. Laws that only make sense in some
//! field mode (e.g. the braided coproduct at generic `q`, or the
//! `x^(l)`-power laws at `q^l = 1`) are reported as skipped elsewhere.

mod galg;
mod hopf;
mod lattice;
mod ops;
mod qarith;
mod repn;
mod uq;
mod weyl;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::galg::AlgebraKind;
use crate::qarith::ScalarField;
use crate::weyl::WeylVariant;

pub use weyl::{
    order_independence_violations, random_word_soundness, word_soundness_exhaustive,
};

/// Session parameters a suite runs under.
#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    pub n: usize,
    pub field: ScalarField,
    pub kind: AlgebraKind,
    pub degree: i64,
    pub variant: WeylVariant,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: 2,
            field: ScalarField::Generic,
            kind: AlgebraKind::DividedPower,
            degree: 5,
            variant: WeylVariant::Plus,
            seed: 0x9d7a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
    Skipped,
}

/// One verified law. `paper_ref` is a stable slug identifying the law in
/// machine-readable reports.
#[derive(Debug, Clone, Serialize)]
pub struct LawResult {
    pub suite: String,
    pub law: String,
    pub paper_ref: String,
    pub status: LawStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub laws: Vec<LawResult>,
}

impl SuiteReport {
    pub fn new() -> Self {
        SuiteReport { laws: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.status != LawStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&LawResult> {
        self.laws
            .iter()
            .filter(|l| l.status == LawStatus::Fail)
            .collect()
    }

    pub fn push(
        &mut self,
        suite: &str,
        law: impl Into<String>,
        slug: impl Into<String>,
        counterexample: Option<String>,
    ) {
        let cx = counterexample;
        self.laws.push(LawResult {
            suite: suite.to_string(),
            law: law.into(),
            paper_ref: slug.into(),
            status: if cx.is_none() {
                LawStatus::Pass
            } else {
                LawStatus::Fail
            },
            counterexample: cx,
        });
    }

    pub fn skip(
        &mut self,
        suite: &str,
        law: impl Into<String>,
        slug: impl Into<String>,
        why: impl Into<String>,
    ) {
        self.laws.push(LawResult {
            suite: suite.to_string(),
            law: law.into(),
            paper_ref: slug.into(),
            status: LawStatus::Skipped,
            counterexample: Some(why.into()),
        });
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.laws.extend(other.laws);
    }
}

impl Default for SuiteReport {
    fn default() -> Self {
        Self::new()
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "qarith",
    "lattice",
    "galg",
    "ops",
    "weyl",
    "hopf",
    "uq",
    "rootvectors",
    "repn",
];

/// Run one named suite (or `all`) with the given parameters.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    match name {
        "qarith" => Ok(qarith::suite(params)),
        "lattice" => Ok(lattice::suite(params)),
        "galg" => Ok(galg::suite(params)),
        "ops" => Ok(ops::suite(params)),
        "weyl" => Ok(weyl::suite(params)),
        "hopf" => Ok(hopf::suite(params)),
        "uq" => Ok(uq::suite(params)),
        "rootvectors" => Ok(uq::rootvector_suite(params)),
        "repn" => Ok(repn::suite(params)),
        "all" => {
            let mut report = SuiteReport::new();
            for s in SUITE_NAMES {
                report.merge(run_suite(s, params)?);
            }
            Ok(report)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}
