//! Row type shared by every formula-versus-oracle comparison.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RowStatus {
    Pass,
    Fail,
    Skipped,
}

impl RowStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            RowStatus::Pass
        } else {
            RowStatus::Fail
        }
    }
}

impl std::fmt::Display for RowStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "PASS",
            RowStatus::Fail => "FAIL",
            RowStatus::Skipped => "SKIPPED",
        })
    }
}

/// One predicted-versus-measured comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub subject: String,
    pub check: String,
    pub predicted: String,
    pub measured: String,
    pub status: RowStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationRow {
    pub fn compare(
        subject: impl Into<String>,
        check: impl Into<String>,
        predicted: impl ToString,
        measured: impl ToString,
        ok: bool,
    ) -> Self {
        VerificationRow {
            subject: subject.into(),
            check: check.into(),
            predicted: predicted.to_string(),
            measured: measured.to_string(),
            status: RowStatus::from_bool(ok),
            note: None,
        }
    }

    pub fn skipped(subject: impl Into<String>, check: impl Into<String>, why: impl Into<String>) -> Self {
        VerificationRow {
            subject: subject.into(),
            check: check.into(),
            predicted: String::new(),
            measured: String::new(),
            status: RowStatus::Skipped,
            note: Some(why.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn failed(&self) -> bool {
        self.status == RowStatus::Fail
    }
}

pub fn any_failed(rows: &[VerificationRow]) -> bool {
    rows.iter().any(VerificationRow::failed)
}
