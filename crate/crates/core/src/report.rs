//! Structured verification reports.
//!
//! Every suite produces a list of samples (input, both sides rendered
//! canonically, a status) plus suite-level notes.  Reports serialize to
//! JSON deterministically: field order is fixed by struct declaration,
//! sample order by insertion, and no hash-based container is used
//! anywhere, so the same configuration always produces the same bytes.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A window was exhausted before the comparison stabilized.
    Inconclusive,
    /// The check does not apply to the instance; reported, not hidden.
    Unsupported,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Unsupported => "UNSUPPORTED",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Sample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub instance: String,
    pub status: Status,
    pub samples_run: u64,
    /// Bounded sample list: all failures are kept, passes up to a cap.
    pub samples: Vec<Sample>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub name: String,
    pub checked: u64,
    pub mismatches: u64,
    pub status: Status,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub instance: String,
    pub radius: u32,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrupt: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub inconclusive: u64,
    pub unsupported: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: Config,
    pub oracles: Vec<OracleReport>,
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: Config) -> Self {
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            oracles: Vec::new(),
            suites: Vec::new(),
            summary: Summary { pass: 0, fail: 0, inconclusive: 0, unsupported: 0 },
        }
    }

    pub fn push_suite(&mut self, s: SuiteReport) {
        match s.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Inconclusive => self.summary.inconclusive += 1,
            Status::Unsupported => self.summary.unsupported += 1,
        }
        self.suites.push(s);
    }

    /// Exit code contract: 0 all pass, 1 any fail or inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 || self.summary.inconclusive > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for o in &self.oracles {
            out.push_str(&format!(
                "oracle {}: {} ({} checked, {} mismatches)\n",
                o.name,
                o.status.label(),
                o.checked,
                o.mismatches
            ));
            for n in &o.notes {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        for s in &self.suites {
            out.push_str(&format!(
                "suite {} on {}: {} ({} samples)\n",
                s.name,
                s.instance,
                s.status.label(),
                s.samples_run
            ));
            for n in &s.notes {
                out.push_str(&format!("  note: {n}\n"));
            }
            for smp in s.samples.iter().filter(|s| s.status == Status::Fail).take(5) {
                out.push_str(&format!(
                    "  fail at {}:\n    lhs = {}\n    rhs = {}\n",
                    smp.input, smp.lhs, smp.rhs
                ));
                if let Some(n) = &smp.note {
                    out.push_str(&format!("    note: {n}\n"));
                }
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} inconclusive, {} unsupported\n",
            self.summary.pass, self.summary.fail, self.summary.inconclusive, self.summary.unsupported
        ));
        out
    }
}

/// Cap on recorded passing samples per suite; failures are always kept.
const PASS_SAMPLE_CAP: usize = 24;

/// Incremental builder used by the check routines.
pub struct SuiteRun {
    name: String,
    instance: String,
    samples_run: u64,
    samples: Vec<Sample>,
    pass_recorded: usize,
    notes: Vec<String>,
    any_fail: bool,
    any_inconclusive: bool,
    unsupported: bool,
}

impl SuiteRun {
    pub fn new(name: impl Into<String>, instance: impl Into<String>) -> Self {
        SuiteRun {
            name: name.into(),
            instance: instance.into(),
            samples_run: 0,
            samples: Vec::new(),
            pass_recorded: 0,
            notes: Vec::new(),
            any_fail: false,
            any_inconclusive: false,
            unsupported: false,
        }
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Records one comparison that has already been decided.
    pub fn sample(&mut self, input: impl Into<String>, lhs: String, rhs: String, ok: bool) {
        self.samples_run += 1;
        let status = if ok { Status::Pass } else { Status::Fail };
        if !ok {
            self.any_fail = true;
        }
        if ok && self.pass_recorded >= PASS_SAMPLE_CAP {
            return;
        }
        if ok {
            self.pass_recorded += 1;
        }
        self.samples.push(Sample { input: input.into(), lhs, rhs, status, note: None });
    }

    /// Records an equality check of two rendered values.
    pub fn check<T: PartialEq>(
        &mut self,
        input: impl Into<String>,
        lhs: &T,
        rhs: &T,
        render: impl Fn(&T) -> String,
    ) {
        let ok = lhs == rhs;
        self.sample(input, render(lhs), render(rhs), ok);
    }

    pub fn inconclusive(&mut self, input: impl Into<String>, note: impl Into<String>) {
        self.samples_run += 1;
        self.any_inconclusive = true;
        self.samples.push(Sample {
            input: input.into(),
            lhs: String::new(),
            rhs: String::new(),
            status: Status::Inconclusive,
            note: Some(note.into()),
        });
    }

    /// Marks the whole suite as not applicable, with the reason.
    pub fn mark_unsupported(&mut self, reason: impl Into<String>) {
        self.unsupported = true;
        self.notes.push(reason.into());
    }

    pub fn failed(&self) -> bool {
        self.any_fail
    }

    pub fn finish(self) -> SuiteReport {
        let status = if self.any_fail {
            Status::Fail
        } else if self.any_inconclusive {
            Status::Inconclusive
        } else if self.unsupported {
            Status::Unsupported
        } else {
            Status::Pass
        };
        SuiteReport {
            name: self.name,
            instance: self.instance,
            status,
            samples_run: self.samples_run,
            samples: self.samples,
            notes: self.notes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_report() -> Report {
        let cfg = Config {
            instance: "ore-dual".into(),
            radius: 4,
            seed: 7,
            group: None,
            corrupt: None,
        };
        let mut r = Report::new(cfg);
        let mut run = SuiteRun::new("demo", "ore-dual");
        run.sample("x=w[0,1]", "1*w[0,1]".into(), "1*w[0,1]".into(), true);
        r.push_suite(run.finish());
        r
    }

    #[test]
    fn json_is_deterministic() {
        assert_eq!(tiny_report().to_json(), tiny_report().to_json());
    }

    #[test]
    fn failures_dominate_suite_status() {
        let mut run = SuiteRun::new("demo", "ore");
        run.sample("a", "1".into(), "2".into(), false);
        run.sample("b", "1".into(), "1".into(), true);
        let rep = run.finish();
        assert_eq!(rep.status, Status::Fail);
        assert_eq!(rep.samples_run, 2);
    }

    #[test]
    fn exit_code_reflects_summary() {
        let mut r = tiny_report();
        assert_eq!(r.exit_code(), 0);
        let mut bad = SuiteRun::new("demo2", "ore");
        bad.sample("a", "0".into(), "1".into(), false);
        r.push_suite(bad.finish());
        assert_eq!(r.exit_code(), 1);
    }
}
