//! Verification reports shared by every checker.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

/// A counterexample: basis-index tuple or a named word/element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Tuple(Vec<usize>),
    Word(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Tuple(t) => {
                let parts: Vec<String> = t.iter().map(|i| i.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            Witness::Word(w) => write!(f, "{w}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub condition: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    /// Number of tuples (or items) examined.
    #[serde(default)]
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(condition: impl Into<String>, mode: Mode, checked: usize) -> Self {
        CheckResult {
            condition: condition.into(),
            status: Status::Pass,
            witness: None,
            mode,
            seed: None,
            checked,
            detail: None,
        }
    }

    pub fn fail(condition: impl Into<String>, mode: Mode, witness: Witness) -> Self {
        CheckResult {
            condition: condition.into(),
            status: Status::Fail,
            witness: Some(witness),
            mode,
            seed: None,
            checked: 0,
            detail: None,
        }
    }

    /// Pass/fail from a boolean with no tuple structure.
    pub fn from_bool(condition: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        let mut r = if ok {
            Self::pass(condition, Mode::Exhaustive, 1)
        } else {
            Self::fail(condition, Mode::Exhaustive, Witness::Word(detail.clone()))
        };
        if ok && !detail.is_empty() {
            r.detail = Some(detail);
        }
        r
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), results: Vec::new() }
    }

    pub fn push(&mut self, r: CheckResult) {
        self.results.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.results.extend(other.results);
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, condition: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.condition == condition)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for r in &self.results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let mode = match r.mode {
                Mode::Exhaustive => "exhaustive".to_string(),
                Mode::Sampled => format!("sampled, seed {}", r.seed.unwrap_or(0)),
            };
            write!(f, "  [{status}] {} ({mode}, {} checked)", r.condition, r.checked)?;
            if let Some(w) = &r.witness {
                write!(f, " witness {w}")?;
            }
            if let Some(d) = &r.detail {
                write!(f, " — {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs `ok` over `items` in parallel and returns the first failing item in
/// iteration order, so results do not depend on scheduling.
pub fn first_failure<T, F>(items: &[T], ok: F) -> Option<&T>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync,
{
    items.par_iter().find_first(|t| !ok(t))
}

/// Tuple check helper: builds the [`CheckResult`] for a list of index tuples.
pub fn check_tuples<F>(condition: &str, tuples: &[Vec<usize>], mode: Mode, seed: Option<u64>, ok: F) -> CheckResult
where
    F: Fn(&[usize]) -> bool + Sync,
{
    match first_failure(tuples, |t| ok(t)) {
        None => CheckResult::pass(condition, mode, tuples.len()).with_seed(seed),
        Some(t) => {
            let mut r = CheckResult::fail(condition, mode, Witness::Tuple(t.clone())).with_seed(seed);
            r.checked = tuples.len();
            r
        }
    }
}
