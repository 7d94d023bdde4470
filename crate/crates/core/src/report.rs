//! Verification reports and their text, JSON and CSV renderings.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bigpoly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// How `residue` is compared with `expected`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// The check passes iff the two polynomials are identical.
    #[default]
    Eq,
    /// The check passes iff the two polynomials differ. Used to record
    /// instances where a congruence is known not to hold.
    Ne,
}

impl Relation {
    fn is_eq(&self) -> bool {
        *self == Relation::Eq
    }
}

/// One named check on one parameter instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub residue: Polynomial,
    pub expected: Polynomial,
    #[serde(default, skip_serializing_if = "Relation::is_eq")]
    pub relation: Relation,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl CongruenceReport {
    /// Builds a report whose status follows from comparing the residues.
    pub fn new<'a>(
        check: &str,
        params: impl IntoIterator<Item = (&'a str, i64)>,
        residue: Polynomial,
        expected: Polynomial,
    ) -> Self {
        Self::with_relation(check, params, residue, expected, Relation::Eq)
    }

    pub fn with_relation<'a>(
        check: &str,
        params: impl IntoIterator<Item = (&'a str, i64)>,
        residue: Polynomial,
        expected: Polynomial,
        relation: Relation,
    ) -> Self {
        let same = residue == expected;
        let status = if same == (relation == Relation::Eq) {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            check: check.to_string(),
            params: params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            residue,
            expected,
            relation,
            status,
            elapsed_ms: 0,
        }
    }

    pub fn timed(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }

    fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_text(&self) -> String {
        let op = match self.relation {
            Relation::Eq => "expected",
            Relation::Ne => "expected not",
        };
        format!(
            "{} {} [{}] residue: {} | {}: {} ({} ms)",
            self.status.to_string().to_uppercase(),
            self.check,
            self.params_text(),
            self.residue,
            op,
            self.expected,
            self.elapsed_ms
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// CSV header for this report's parameter set:
    /// `check,<param keys>...,status,residue,expected`.
    pub fn csv_header(&self) -> String {
        let mut cols = vec!["check".to_string()];
        cols.extend(self.params.keys().cloned());
        cols.extend(["status", "residue", "expected"].map(String::from));
        cols.join(",")
    }

    pub fn to_csv_row(&self) -> String {
        let mut cols = vec![self.check.clone()];
        cols.extend(self.params.values().map(i64::to_string));
        cols.push(self.status.to_string());
        cols.push(self.residue.to_string());
        let expected = match self.relation {
            Relation::Eq => self.expected.to_string(),
            Relation::Ne => format!("!= {}", self.expected),
        };
        cols.push(expected);
        cols.join(",")
    }
}
