//! Exhaustive sweeps and machine checks of the classification results.
//!
//! Every `verify_*` function enumerates all instances up to a bound, compares
//! what the statement predicts against decompositions computed from the
//! character table, and returns a [`VerificationReport`].

mod census;
mod families;
mod lemmas;
mod special;
mod sweep;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::characters::MAX_TABLE_N;
use crate::error::{Error, Result};

pub use census::{
    skew_two_component_census, verify_skew_lemmas, verify_skew_products, MAX_SKEW_PRODUCT_SIZE,
    MAX_SKEW_SIZE,
};
pub use families::{
    hook_times_natural, natural_square, natural_times_near_square, natural_times_rectangle,
    printed_product, sign_natural_times_rectangle, skew_two_component_families, FamilyMember,
    FamilyShape, SKEW_FAMILIES,
};
pub use lemmas::{
    verify_almost_width, verify_dvir_oracle, verify_dvir_random, verify_hook_bound,
    verify_rectangle_case, verify_row_classification, verify_row_lifts, verify_section_lemmas,
    verify_width_bound, MAX_RECTANGLE_N,
};
pub use special::{verify_34c, verify_extcomp, verify_special};
pub use sweep::{exception_tag, sweep, sweep_with, write_catalog, SweepEntry};

/// Counterexamples kept in full; the rest are only counted.
pub const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The instance, e.g. `[3^2] * [4,2]`.
    pub case: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
}

impl Counterexample {
    pub fn new(case: impl Into<String>, message: impl Into<String>) -> Self {
        Counterexample {
            case: case.into(),
            message: message.into(),
            expected: None,
            actual: None,
        }
    }

    pub fn with_values(mut self, expected: impl ToString, actual: impl ToString) -> Self {
        self.expected = Some(expected.to_string());
        self.actual = Some(actual.to_string());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub theorem: String,
    pub n_max: usize,
    /// Number of individual assertions evaluated.
    pub checked: u64,
    pub counterexample_count: usize,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    /// Not serialized, so that JSON output is reproducible byte for byte.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    /// Concatenates sub-reports under one theorem id.
    pub fn merge(theorem: &str, n_max: usize, parts: Vec<VerificationReport>) -> Self {
        let mut out = Checker::new(theorem, n_max);
        let mut wall = Duration::ZERO;
        for part in parts {
            out.checked += part.checked;
            out.count += part.counterexample_count;
            for cx in part.counterexamples {
                if out.kept.len() < MAX_REPORTED {
                    out.kept.push(cx);
                }
            }
            out.notes.extend(part.notes.into_iter().map(|n| format!("{}: {n}", part.theorem)));
            wall += part.wall_time;
        }
        let mut report = out.finish();
        report.wall_time = wall;
        report
    }
}

/// Accumulates assertions for one report.
pub(crate) struct Checker {
    theorem: String,
    n_max: usize,
    checked: u64,
    count: usize,
    kept: Vec<Counterexample>,
    notes: Vec<String>,
    started: Instant,
}

impl Checker {
    pub(crate) fn new(theorem: &str, n_max: usize) -> Self {
        Checker {
            theorem: theorem.to_string(),
            n_max,
            checked: 0,
            count: 0,
            kept: Vec::new(),
            notes: Vec::new(),
            started: Instant::now(),
        }
    }

    /// Records one assertion; `failure` is only built when `ok` is false.
    pub(crate) fn check(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok {
            self.fail(failure());
        }
    }

    pub(crate) fn fail(&mut self, cx: Counterexample) {
        self.count += 1;
        if self.kept.len() < MAX_REPORTED {
            self.kept.push(cx);
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub(crate) fn finish(self) -> VerificationReport {
        VerificationReport {
            pass: self.count == 0,
            theorem: self.theorem,
            n_max: self.n_max,
            checked: self.checked,
            counterexample_count: self.count,
            counterexamples: self.kept,
            notes: self.notes,
            wall_time: self.started.elapsed(),
        }
    }
}

pub(crate) fn check_bound(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        return Err(Error::OutOfRange {
            what,
            value,
            min: 0,
            max,
        });
    }
    Ok(())
}

pub(crate) fn check_n_max(n_max: usize) -> Result<()> {
    check_bound("n_max", n_max, MAX_TABLE_N)
}

pub(crate) fn pair_label(mu: &crate::Partition, nu: &crate::Partition) -> String {
    format!("{mu} * {nu}")
}
