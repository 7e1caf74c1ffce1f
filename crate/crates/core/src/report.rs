//! Verification results shared by every checker.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

const MAX_WITNESSES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// A non-vanishing residual at some position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub position: String,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    #[serde(rename = "residual_terms")]
    pub residual_term_count: usize,
    #[serde(rename = "witnesses")]
    pub details: Vec<Witness>,
    pub region: String,
    pub duration_ms: f64,
    /// Number of individual identities compared.
    #[serde(skip)]
    pub compared: usize,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (residual terms: {})",
            self.name, self.status, self.residual_term_count
        )
    }
}

/// Accumulates residuals while a check runs.
pub struct Collector {
    name: String,
    region: String,
    start: Instant,
    count: usize,
    compared: usize,
    witnesses: Vec<Witness>,
}

impl Collector {
    pub fn new(name: impl Into<String>) -> Self {
        Collector {
            name: name.into(),
            region: String::new(),
            start: Instant::now(),
            count: 0,
            compared: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn region(&mut self, region: impl Into<String>) -> &mut Self {
        self.region = region.into();
        self
    }

    /// Records one compared identity; `residual` is `None` when it holds.
    pub fn compare<D: fmt::Display>(&mut self, position: impl FnOnce() -> String, residual: Option<D>) {
        self.compared += 1;
        if let Some(r) = residual {
            self.count += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(Witness {
                    position: position(),
                    residual: r.to_string(),
                });
            }
        }
    }

    /// Records a boolean identity with a description of the failure.
    pub fn expect(&mut self, ok: bool, position: impl FnOnce() -> String, residual: impl FnOnce() -> String) {
        self.compare(position, (!ok).then(residual));
    }

    /// Counts identities that were compared in bulk and held.
    pub fn add_compared(&mut self, n: usize) {
        self.compared += n;
    }

    /// Folds a sub-report into this one.
    pub fn absorb(&mut self, sub: &CheckReport) {
        self.compared += sub.compared;
        self.count += sub.residual_term_count;
        for w in &sub.details {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(Witness {
                    position: format!("{}: {}", sub.name, w.position),
                    residual: w.residual.clone(),
                });
            }
        }
    }

    pub fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            status: if self.count == 0 { Status::Pass } else { Status::Fail },
            residual_term_count: self.count,
            details: self.witnesses,
            region: self.region,
            duration_ms: self.start.elapsed().as_secs_f64() * 1e3,
            compared: self.compared,
        }
    }
}
