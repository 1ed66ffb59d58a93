//! Results of verification checks.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::hecke::HeckeElement;

/// Pass/fail of one comparison, with the difference kept on failure.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub witness: Option<Value>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { pass: true, witness: None }
    }

    pub fn fail(witness: Value) -> Self {
        Outcome { pass: false, witness: Some(witness) }
    }

    pub fn from_bool(ok: bool, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(witness())
        }
    }

    /// Equal elements pass; otherwise the witness is `lhs − rhs`.
    pub fn equal(lhs: &HeckeElement, rhs: &HeckeElement) -> Self {
        Self::from_bool(lhs == rhs, || match lhs.try_sub(rhs) {
            Ok(d) => d.to_json(),
            Err(e) => Value::String(e.to_string()),
        })
    }

    /// All outcomes pass; the first failing witness is kept.
    pub fn all(items: impl IntoIterator<Item = Outcome>) -> Self {
        for o in items {
            if !o.pass {
                return o;
            }
        }
        Self::pass()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped(guard)")]
    SkippedGuard,
    #[serde(rename = "error")]
    Error,
}

/// One line of a suite report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub check: String,
    pub params: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub millis: u128,
}

impl Check {
    /// Runs `f`, timing it; errors become `Status::Error` (or a guard skip).
    pub fn run(check: &str, params: Value, f: impl FnOnce() -> Result<Outcome>) -> Check {
        let start = Instant::now();
        let res = f();
        let millis = start.elapsed().as_millis();
        let id = format!("{check}{params}");
        match res {
            Ok(o) => Check {
                id,
                check: check.into(),
                params,
                status: if o.pass { Status::Pass } else { Status::Fail },
                witness: o.witness,
                millis,
            },
            Err(crate::Error::Guard(msg)) => Check {
                id,
                check: check.into(),
                params,
                status: Status::SkippedGuard,
                witness: Some(Value::String(msg)),
                millis,
            },
            Err(e) => Check {
                id,
                check: check.into(),
                params,
                status: Status::Error,
                witness: Some(Value::String(e.to_string())),
                millis,
            },
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::SkippedGuard)
    }
}
