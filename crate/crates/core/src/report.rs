//! Check results: one [`Outcome`] per verified identity, collected in a
//! [`Report`] whose order is the order the identities were listed in.

use std::fmt;

use serde::Serialize;

/// First failing basis assignment of an identity and both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub assignment: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at: Vec<String> = self.assignment.iter().map(|(n, v)| format!("{n}={v}")).collect();
        if at.is_empty() {
            write!(f, "lhs = {}, rhs = {}", self.lhs, self.rhs)
        } else {
            write!(f, "at {}: lhs = {}, rhs = {}", at.join(", "), self.lhs, self.rhs)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub label: String,
    pub checked: u64,
    pub violations: u64,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Outcome {
    /// A yes/no condition that has no basis-level witness (ranks, shapes).
    pub fn condition(label: impl Into<String>, holds: bool, note: impl Into<String>) -> Outcome {
        Outcome {
            label: label.into(),
            checked: 1,
            violations: u64::from(!holds),
            witness: None,
            note: Some(note.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn with_prefix(mut self, prefix: &str) -> Outcome {
        self.label = format!("{prefix}{}", self.label);
        self
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "({}) holds on {} cases", self.label, self.checked)?;
        } else {
            write!(
                f,
                "({}) fails on {} of {} cases",
                self.label, self.violations, self.checked
            )?;
            if let Some(w) = &self.witness {
                write!(f, ", first {w}")?;
            }
        }
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            outcomes: Vec::new(),
        }
    }

    pub fn push(&mut self, outcome: Outcome) {
        self.outcomes.push(outcome);
    }

    /// Appends another report's outcomes with their labels prefixed.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        self.outcomes
            .extend(other.outcomes.into_iter().map(|o| o.with_prefix(prefix)));
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(Outcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn failed_labels(&self) -> Vec<&str> {
        self.failures().map(|o| o.label.as_str()).collect()
    }

    pub fn first_failure(&self) -> Option<&Outcome> {
        self.failures().next()
    }

    pub fn outcome(&self, label: &str) -> Option<&Outcome> {
        self.outcomes.iter().find(|o| o.label == label)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// Aligned text rendering, one line per outcome.
    pub fn render_text(&self) -> String {
        let width = self.outcomes.iter().map(|o| o.label.chars().count()).max().unwrap_or(0);
        let mut out = format!("{}\n", self.subject);
        for o in &self.outcomes {
            let pad = width - o.label.chars().count();
            let status = if o.passed() { "ok  " } else { "FAIL" };
            out.push_str(&format!(
                "  {status} {}{} {:>6}/{:<6}",
                o.label,
                " ".repeat(pad),
                o.checked - o.violations,
                o.checked
            ));
            if let Some(w) = &o.witness {
                out.push_str(&format!("  {w}"));
            }
            if let Some(n) = &o.note {
                out.push_str(&format!("  [{n}]"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}
