use std::fmt;

/// Outcome of a structural check. A failure carries the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn fail(msg: impl Into<String>) -> Self {
        Verdict::Fail(msg.into())
    }

    /// Keeps the first failure of a sequence of checks.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail(msg) => write!(f, "FAIL: {msg}"),
        }
    }
}
