use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub format_version: u32,
    pub command: Vec<String>,
    pub params: Value,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    pub wall_clock_ms: u128,
    /// Preformatted block shown before the verdicts in text mode.
    #[serde(skip)]
    pub text: Option<String>,
    /// Text mode prints `text` alone, for output meant to be saved as a file.
    #[serde(skip)]
    pub raw_text: bool,
}

impl RunReport {
    pub fn new(params: Value) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            command: std::env::args().collect(),
            params,
            verdicts: Vec::new(),
            data: Value::Null,
            wall_clock_ms: 0,
            text: None,
            raw_text: false,
        }
    }

    pub fn push(&mut self, check: &str, status: Status, detail: impl Serialize) {
        self.verdicts.push(Verdict {
            check: check.to_string(),
            status,
            detail: serde_json::to_value(detail).expect("serializable detail"),
        });
    }

    pub fn check(&mut self, check: &str, ok: bool, detail: impl Serialize) {
        self.push(check, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    pub fn failed(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if self.raw_text {
            return self.text.clone().unwrap_or_default();
        }
        if let Some(t) = &self.text {
            out.push_str(t);
            if !t.ends_with('\n') {
                out.push('\n');
            }
        }
        for v in &self.verdicts {
            let tag = match v.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            let detail = match &v.detail {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("[{tag}] {}: {detail}\n", v.check));
        }
        out.push_str(&format!("wall clock: {} ms\n", self.wall_clock_ms));
        out
    }
}

/// Short hex digest of a face's vertex set, used to check that a face index
/// still refers to the intended face.
pub fn face_digest(vertices: &[usize]) -> String {
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    let text: Vec<String> = vs.iter().map(ToString::to_string).collect();
    let hash = Sha256::digest(text.join(",").as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_ignores_order() {
        assert_eq!(face_digest(&[2, 0, 1]), face_digest(&[0, 1, 2, 0]));
        assert_ne!(face_digest(&[0, 1]), face_digest(&[0, 2]));
        assert_eq!(face_digest(&[0]).len(), 16);
    }

    #[test]
    fn failure_detected() {
        let mut r = RunReport::new(Value::Null);
        r.check("a", true, "ok");
        assert!(!r.failed());
        r.check("b", false, 3);
        assert!(r.failed());
        assert!(r.render_text().contains("[FAIL] b: 3"));
    }
}
