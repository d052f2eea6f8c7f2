//! Structured check reports.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cat::CategoryView;
use crate::error::{Error, Result};
use crate::expr::{check_equation, Env, MorphExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// Evidence attached to a failing entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs_expr: Option<MorphExpr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_expr: Option<MorphExpr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn note(msg: impl Into<String>) -> Self {
        Witness {
            note: Some(msg.into()),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub equation_id: String,
    pub instantiation: Vec<String>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub scope: Vec<String>,
    pub entries: Vec<Entry>,
    #[serde(default)]
    pub notes: Vec<String>,
    pub summary: Summary,
    pub elapsed_us: u64,
}

impl Report {
    pub fn new(
        title: impl Into<String>,
        scope: Vec<String>,
        audit: Audit,
        started: Instant,
    ) -> Self {
        let mut r = Report {
            title: title.into(),
            scope,
            entries: audit.entries,
            notes: audit.notes,
            summary: Summary {
                total: 0,
                passed: 0,
                failed: 0,
                verdict: Verdict::Pass,
            },
            elapsed_us: started.elapsed().as_micros() as u64,
        };
        r.finalize();
        r
    }

    fn finalize(&mut self) {
        self.entries.sort_by(|a, b| {
            (&a.equation_id, &a.instantiation).cmp(&(&b.equation_id, &b.instantiation))
        });
        self.scope.sort();
        self.scope.dedup();
        let passed = self.entries.iter().filter(|e| e.verdict.passed()).count();
        let failed = self.entries.len() - passed;
        self.summary = Summary {
            total: self.entries.len(),
            passed,
            failed,
            verdict: Verdict::from_bool(failed == 0),
        };
    }

    /// Append another report's entries, scope and notes.
    pub fn absorb(&mut self, other: Report) {
        self.entries.extend(other.entries);
        self.scope.extend(other.scope);
        self.notes.extend(other.notes);
        self.elapsed_us += other.elapsed_us;
        self.finalize();
    }

    pub fn passed(&self) -> bool {
        self.summary.verdict.passed()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Entries with the given equation id.
    pub fn entries_for<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Entry> + 'a {
        self.entries.iter().filter(move |e| e.equation_id == id)
    }

    /// True iff entries with this id exist and all pass.
    pub fn holds(&self, id: &str) -> bool {
        let mut any = false;
        for e in self.entries_for(id) {
            any = true;
            if !e.verdict.passed() {
                return false;
            }
        }
        any
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.verdict.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.title);
        for sc in &self.scope {
            let _ = writeln!(s, "  scope: {sc}");
        }
        for e in &self.entries {
            let tag = if e.verdict.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "  {tag} {} [{}]",
                e.equation_id,
                e.instantiation.join(", ")
            );
            if let Some(w) = &e.witness {
                if let Some(n) = &w.note {
                    let _ = writeln!(s, "       note: {n}");
                }
                if let (Some(l), Some(r)) = (&w.lhs_expr, &w.rhs_expr) {
                    let _ = writeln!(s, "       lhs: {l}");
                    let _ = writeln!(s, "       rhs: {r}");
                }
                if let (Some(l), Some(r)) = (&w.lhs, &w.rhs) {
                    let _ = writeln!(s, "       values: {l} vs {r}");
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        let _ = writeln!(
            s,
            "  summary: {} ({} passed, {} failed, {} us)",
            if self.passed() { "pass" } else { "fail" },
            self.summary.passed,
            self.summary.failed,
            self.elapsed_us
        );
        s
    }
}

/// Accumulates entries while a checker runs.
#[derive(Debug, Default)]
pub struct Audit {
    pub entries: Vec<Entry>,
    pub notes: Vec<String>,
}

impl Audit {
    pub fn new() -> Self {
        Audit::default()
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn fact(&mut self, id: &str, inst: Vec<String>, holds: bool, note: Option<String>) -> bool {
        self.entries.push(Entry {
            equation_id: id.into(),
            instantiation: inst,
            verdict: Verdict::from_bool(holds),
            witness: if holds { None } else { note.map(Witness::note) },
        });
        holds
    }

    /// Build both legs and compare them. Failure to build a leg, for
    /// instance because a required arrow does not exist, fails the entry.
    pub fn equation(
        &mut self,
        id: &str,
        inst: Vec<String>,
        view: &CategoryView,
        env: &Env,
        build: impl FnOnce() -> Result<(MorphExpr, MorphExpr)>,
    ) -> bool {
        let witness = match build() {
            Err(e) => Some(Witness::note(e.to_string())),
            Ok((lhs, rhs)) => match check_equation(view, &lhs, &rhs, env) {
                Ok(v) if v.holds => None,
                Ok(v) => Some(Witness {
                    lhs: Some(view.mor_label(&v.lhs)),
                    rhs: Some(view.mor_label(&v.rhs)),
                    lhs_expr: Some(v.lhs_expr),
                    rhs_expr: Some(v.rhs_expr),
                    note: None,
                }),
                Err(e) => Some(Witness {
                    lhs_expr: Some(lhs),
                    rhs_expr: Some(rhs),
                    note: Some(e.to_string()),
                    ..Default::default()
                }),
            },
        };
        let holds = witness.is_none();
        self.entries.push(Entry {
            equation_id: id.into(),
            instantiation: inst,
            verdict: Verdict::from_bool(holds),
            witness,
        });
        holds
    }

    pub fn absorb(&mut self, r: Report) {
        self.entries.extend(r.entries);
        self.notes.extend(r.notes);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.passed())
    }

    pub fn holds(&self, id: &str) -> bool {
        let mut any = false;
        for e in self.entries.iter().filter(|e| e.equation_id == id) {
            any = true;
            if !e.verdict.passed() {
                return false;
            }
        }
        any
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{Mor, Obj, TableCategory};

    #[test]
    fn entries_sort_and_summarize() {
        let mut a = Audit::new();
        a.fact("b", vec!["1".into()], true, None);
        a.fact("a", vec!["2".into()], false, Some("broken".into()));
        a.fact("a", vec!["1".into()], true, None);
        let r = Report::new("t", vec![], a, Instant::now());
        let ids: Vec<_> = r
            .entries
            .iter()
            .map(|e| (e.equation_id.as_str(), e.instantiation[0].as_str()))
            .collect();
        assert_eq!(ids, [("a", "1"), ("a", "2"), ("b", "1")]);
        assert_eq!(r.summary.failed, 1);
        assert_eq!(r.exit_code(), 1);
        assert!(!r.holds("a") && r.holds("b") && !r.holds("c"));
    }

    #[test]
    fn failing_equation_carries_witness() {
        let c = CategoryView::new(TableCategory::discrete_group(2));
        let mut a = Audit::new();
        let ok = a.equation("x", vec![], &c, &Env::new(), || {
            Ok((MorphExpr::named("f", Mor::Table(0)), MorphExpr::id(Obj(1))))
        });
        assert!(!ok);
        let w = a.entries[0].witness.as_ref().unwrap();
        assert!(w.note.as_ref().unwrap().contains("type"));
    }

    #[test]
    fn json_round_trip() {
        let mut a = Audit::new();
        a.fact("eq", vec!["0".into()], false, Some("n".into()));
        a.note("hello");
        let r = Report::new("t", vec!["s".into()], a, Instant::now());
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}
