//! Machine-checkable verdicts for identity checks.

use serde::{Deserialize, Serialize};

/// Outcome of an exact identity check over a finite range.
///
/// Serialized as `{claim, range, pass, witness, notes}`. `witness` names the
/// first failing index (and what differed) when `pass` is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub range: [i64; 2],
    pub pass: bool,
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(claim: impl Into<String>, lo: i64, hi: i64) -> Self {
        Certificate {
            claim: claim.into(),
            range: [lo, hi],
            pass: true,
            witness: None,
            notes: Vec::new(),
        }
    }

    /// Records a failure; only the first witness is kept.
    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.pass {
            self.pass = false;
            self.witness = Some(witness.into());
        }
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note(note);
        self
    }

    /// Runs `f` for each index in `lo..=hi`, stopping at the first failure.
    pub fn over(claim: impl Into<String>, lo: i64, hi: i64, mut f: impl FnMut(i64) -> Option<String>) -> Self {
        let mut cert = Certificate::new(claim, lo, hi);
        for n in lo..=hi {
            if let Some(w) = f(n) {
                cert.fail(format!("n={n}: {w}"));
                break;
            }
        }
        cert
    }

    pub fn all(certs: &[Certificate]) -> bool {
        certs.iter().all(|c| c.pass)
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {} (range {}..={})", self.claim, self.range[0], self.range[1])?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        Ok(())
    }
}
