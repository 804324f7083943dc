use std::fmt;

use serde::{Deserialize, Serialize};

/// The first violated identity found by a checker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckFailure {
    /// Which identity failed, e.g. `"(b) j=1"`.
    pub condition: String,
    /// Homological degree (`k` for Taylor/homotopy checks, `n` for φ checks).
    pub degree: usize,
    /// Label of the basis element whose image violates the identity.
    pub witness: String,
    pub detail: String,
}

/// Outcome of one identity family. `checks` counts matrix identities tested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failure: Option<CheckFailure>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            checks: 0,
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Records a failure unless an earlier one is already recorded.
    pub(crate) fn fail(&mut self, failure: CheckFailure) {
        if self.failure.is_none() {
            self.failure = Some(failure);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass ({} checks)", self.name, self.checks),
            Some(e) => write!(
                f,
                "{}: FAIL {} at degree {} on {}: {}",
                self.name, e.condition, e.degree, e.witness, e.detail
            ),
        }
    }
}
