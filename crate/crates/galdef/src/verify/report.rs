use serde::Serialize;
use std::fmt;

/// Verdict of one checked assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

/// One entry of the verification report: an assertion id, the statement
/// label it certifies, the parameters it ran at, and the verdict with a
/// witness on failure (or a reason on skip).
#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub id: String,
    pub anchor: String,
    pub params: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl ReportEntry {
    pub fn pass(id: impl Into<String>, anchor: impl Into<String>, params: impl Into<String>) -> Self {
        ReportEntry {
            id: id.into(),
            anchor: anchor.into(),
            params: params.into(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        anchor: impl Into<String>,
        params: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        ReportEntry {
            id: id.into(),
            anchor: anchor.into(),
            params: params.into(),
            verdict: Verdict::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn skip(
        id: impl Into<String>,
        anchor: impl Into<String>,
        params: impl Into<String>,
        reason: impl Into<String>,
    ) -> Self {
        ReportEntry {
            id: id.into(),
            anchor: anchor.into(),
            params: params.into(),
            verdict: Verdict::Skip,
            witness: Some(reason.into()),
        }
    }

    pub fn check(
        id: impl Into<String>,
        anchor: impl Into<String>,
        params: impl Into<String>,
        ok: bool,
        witness_on_fail: impl Into<String>,
    ) -> Self {
        if ok {
            ReportEntry::pass(id, anchor, params)
        } else {
            ReportEntry::fail(id, anchor, params, witness_on_fail)
        }
    }
}

/// Structured pass/fail record with summary counts. Entries stay sorted
/// by id for byte-identical output under a fixed configuration.
#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn from_entries(mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = entries.iter().filter(|e| e.verdict == Verdict::Pass).count();
        let failed = entries.iter().filter(|e| e.verdict == Verdict::Fail).count();
        let skipped = entries.iter().filter(|e| e.verdict == Verdict::Skip).count();
        VerificationReport {
            entries,
            passed,
            failed,
            skipped,
        }
    }

    pub fn merge(reports: Vec<VerificationReport>) -> Self {
        let mut entries = Vec::new();
        for r in reports {
            entries.extend(r.entries);
        }
        VerificationReport::from_entries(entries)
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self).expect("report serializes")
    }

    /// JUnit-style XML for CI consumption: one testcase per entry.
    pub fn to_junit(&self, suite_name: &str) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        out.push_str(&format!(
            "<testsuite name=\"{}\" tests=\"{}\" failures=\"{}\" skipped=\"{}\">\n",
            xml_escape(suite_name),
            self.entries.len(),
            self.failed,
            self.skipped
        ));
        for e in &self.entries {
            out.push_str(&format!(
                "  <testcase name=\"{}\" classname=\"{}\"",
                xml_escape(&e.id),
                xml_escape(&e.anchor)
            ));
            match e.verdict {
                Verdict::Pass => out.push_str("/>\n"),
                Verdict::Fail => {
                    out.push_str(&format!(
                        ">\n    <failure message=\"{}\">{}</failure>\n  </testcase>\n",
                        xml_escape(e.witness.as_deref().unwrap_or("")),
                        xml_escape(&e.params)
                    ));
                }
                Verdict::Skip => {
                    out.push_str(&format!(
                        ">\n    <skipped message=\"{}\"/>\n  </testcase>\n",
                        xml_escape(e.witness.as_deref().unwrap_or(""))
                    ));
                }
            }
        }
        out.push_str("</testsuite>\n");
        out
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let tag = match e.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skip => "SKIP",
            };
            write!(f, "[{tag}] {} ({})", e.id, e.params)?;
            if let Some(w) = &e.witness {
                write!(f, " :: {w}")?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "{} passed, {} failed, {} skipped",
            self.passed, self.failed, self.skipped
        )
    }
}
