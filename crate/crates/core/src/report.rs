//! Verification reports: one line per checked property.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, cases: usize) -> Self {
        Check {
            name: name.into(),
            passed: true,
            cases,
            detail: None,
            counterexample: None,
        }
    }

    pub fn fail(name: impl Into<String>, cases: usize, counterexample: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            cases,
            detail: None,
            counterexample: Some(counterexample.into()),
        }
    }

    /// Pass iff `counterexample` is `None`.
    pub fn from_search(name: impl Into<String>, cases: usize, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Check::pass(name, cases),
            Some(c) => Check::fail(name, cases, c),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.title, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let noun = if c.cases == 1 { "case" } else { "cases" };
            write!(f, "{status} {} ({} {noun})", c.name, c.cases)?;
            if let Some(d) = &c.detail {
                write!(f, " [{d}]")?;
            }
            if let Some(x) = &c.counterexample {
                write!(f, " counterexample: {x}")?;
            }
            writeln!(f)?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}", self.title)
    }
}
