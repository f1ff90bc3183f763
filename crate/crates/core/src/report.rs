//! Verification records shared by the geometry and fixity checks.

use std::fmt;

use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// The measured value disagrees with a printed formula.
    Discrepancy,
    /// Not computed within the budget.
    Skipped,
}

impl Status {
    /// Whether this status should make a batch run fail.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::Discrepancy)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepancy => "DISCREPANCY",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// One compared quantity: what was expected, what was measured.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub subject: String,
    pub quantity: String,
    pub expected: String,
    pub measured: String,
    pub status: Status,
    pub note: String,
}

impl CheckRecord {
    pub fn compare(subject: &str, quantity: &str, expected: String, measured: String, mismatch: Status) -> Self {
        let status = if expected == measured { Status::Pass } else { mismatch };
        CheckRecord {
            subject: subject.to_string(),
            quantity: quantity.to_string(),
            expected,
            measured,
            status,
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: expected {} measured {}",
            self.status, self.subject, self.quantity, self.expected, self.measured
        )?;
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

/// CSV with header `subject,quantity,expected,measured,status,note`.
pub fn records_csv(records: &[CheckRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["subject", "quantity", "expected", "measured", "status", "note"])?;
    for r in records {
        w.write_record([
            r.subject.as_str(),
            r.quantity.as_str(),
            r.expected.as_str(),
            r.measured.as_str(),
            &r.status.to_string(),
            r.note.as_str(),
        ])?;
    }
    finish_csv(w)
}

pub(crate) fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
