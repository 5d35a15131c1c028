use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Precondition of the check does not hold for this input.
    NotApplicable,
    /// The numeric gap is smaller than the configured margin.
    Inconclusive,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    /// Worst of two verdicts: fail, then inconclusive, then pass.
    /// `NotApplicable` only survives when both sides are not applicable.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            (Pass, _) | (_, Pass) => Pass,
            (NotApplicable, NotApplicable) => NotApplicable,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "n/a",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Verdict of one check on one input, with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    /// The input the check ran on (an N, or a parameter such as `m=10`).
    pub subject: String,
    pub verdict: Verdict,
    /// Set when an inequality holds with equality (e.g. `Res(2^k) = 1`).
    pub tight: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(check: &'static str, subject: impl Into<String>, verdict: Verdict) -> Self {
        CheckOutcome {
            check,
            subject: subject.into(),
            verdict,
            tight: false,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn tight(mut self, tight: bool) -> Self {
        self.tight = tight;
        self
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<16} {:<14} {}", self.check, self.subject, self.verdict)?;
        if self.tight {
            f.write_str(" (equality)")?;
        }
        if !self.detail.is_empty() {
            write!(f, "  {}", self.detail)?;
        }
        Ok(())
    }
}
