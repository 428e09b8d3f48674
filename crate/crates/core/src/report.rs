//! Structured pass/fail verdicts.
//!
//! A [`Report`] lists each identity that was checked. A failing item carries
//! a basis-index witness and the first nonzero residual. Overall pass holds
//! exactly when every item passes; `notes` are extra diagnostics that do not
//! gate the verdict.

use serde::Serialize;

use crate::kernel::Scalar;

#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    /// Short name of the identity, e.g. `"jacobi"`.
    pub identity: String,
    /// The defining equation, quoted in the report for traceability.
    pub formula: String,
    pub pass: bool,
    /// Basis indices of the first violation, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Nonzero residual at the witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Scalar>,
}

impl CheckItem {
    pub fn passing(identity: impl Into<String>, formula: impl Into<String>) -> Self {
        CheckItem {
            identity: identity.into(),
            formula: formula.into(),
            pass: true,
            witness: None,
            residual: None,
        }
    }

    pub fn failing(
        identity: impl Into<String>,
        formula: impl Into<String>,
        witness: Vec<usize>,
        residual: Scalar,
    ) -> Self {
        CheckItem {
            identity: identity.into(),
            formula: formula.into(),
            pass: false,
            witness: Some(witness),
            residual: Some(residual),
        }
    }

    /// Build from an optional violation `(witness, residual)`.
    pub fn from_violation(
        identity: impl Into<String>,
        formula: impl Into<String>,
        violation: Option<(Vec<usize>, Scalar)>,
    ) -> Self {
        match violation {
            None => CheckItem::passing(identity, formula),
            Some((w, r)) => CheckItem::failing(identity, formula, w, r),
        }
    }

    /// A recorded fact with an explicit boolean and no witness data.
    pub fn flag(identity: impl Into<String>, formula: impl Into<String>, pass: bool) -> Self {
        CheckItem {
            identity: identity.into(),
            formula: formula.into(),
            pass,
            witness: None,
            residual: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// Name of the check that produced this report.
    pub check: String,
    pub items: Vec<CheckItem>,
    /// Non-gating diagnostics (consistency cross-checks, coincidence flags).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<CheckItem>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            items: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, item: CheckItem) -> &mut Self {
        self.items.push(item);
        self
    }

    pub fn note(&mut self, item: CheckItem) -> &mut Self {
        self.notes.push(item);
        self
    }

    /// Overall verdict: pass iff every item passes.
    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn item(&self, identity: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.identity == identity)
    }

    pub fn item_pass(&self, identity: &str) -> bool {
        self.item(identity).is_some_and(|i| i.pass)
    }

    /// First failing item, if any.
    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.pass)
    }

    /// Machine-readable form with the overall verdict included.
    pub fn render_json(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.check,
            "pass": self.pass(),
            "items": self.items,
            "notes": self.notes,
        })
    }

    /// Render as human-readable text, one line per item.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{}: {}\n",
            if self.pass() { "PASS" } else { "FAIL" },
            self.check
        ));
        for item in &self.items {
            out.push_str(&render_item_line(item, "  "));
        }
        for note in &self.notes {
            out.push_str(&render_item_line(note, "  note "));
        }
        out
    }
}

fn render_item_line(item: &CheckItem, indent: &str) -> String {
    let mut line = format!(
        "{indent}[{}] {}   {}",
        if item.pass { "ok" } else { "FAIL" },
        item.identity,
        item.formula
    );
    if let Some(w) = &item.witness {
        let idx: Vec<String> = w.iter().map(usize::to_string).collect();
        line.push_str(&format!("   witness ({})", idx.join(", ")));
    }
    if let Some(r) = &item.residual {
        line.push_str(&format!(" residual {r}"));
    }
    line.push('\n');
    line
}
