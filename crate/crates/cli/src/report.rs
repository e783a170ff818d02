//! Reports: a human-readable section followed by a `key=value` section that
//! renders a subset of the same facts.

use std::fmt::Write as _;

use npp_core::{QReport, Scalar};

/// Witnesses kept per check.
pub const WITNESS_CAP: usize = 10;

pub const CONVENTIONS: [(&str, &str); 6] = [
    ("indices", "basis indices are 1-based; witnesses list the basis elements an identity was evaluated at"),
    ("contraction", "r_X∘r_Y multiplies the two legs at the shared slot, leg of the first factor on the left"),
    ("t_map", "T_r(e_i*) = Σ_j r_ij e_j"),
    ("dual", "f*(x) is the transpose of f(x) acting on A*, with <e_i*, e_j> = δ_ij"),
    ("coboundary", "δ_r(x) = (L∗(x)⊗I + I⊗ad(x)) r"),
    ("form", "ω♯(x) = ω(x, ·) and T_{r_ω} = (ω♯)⁻¹"),
];

#[derive(Clone, Debug)]
struct CheckLine {
    key: String,
    passed: bool,
    evaluated: usize,
    failures: usize,
    failing: Vec<String>,
}

#[derive(Clone, Debug)]
struct Witness {
    check: String,
    identity: String,
    at: String,
    lhs: String,
    rhs: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    command: String,
    checks: Vec<CheckLine>,
    facts: Vec<(String, String)>,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    expect: Option<Expect>,
    strict: bool,
    /// Canonical text of constructed objects, printed after the report.
    pub objects: Option<String>,
}

fn vector(v: &[Scalar]) -> String {
    v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
}

impl Report {
    pub fn new(command: String) -> Self {
        Report { command, ..Default::default() }
    }

    pub fn expect(&mut self, expect: Option<Expect>, strict: bool) {
        self.expect = expect;
        self.strict = strict;
    }

    /// Record a check; its verdict counts towards the exit code.
    pub fn check(&mut self, key: &str, r: &QReport) {
        self.checks.push(CheckLine {
            key: key.to_string(),
            passed: r.passed(),
            evaluated: r.evaluated,
            failures: r.failures.len(),
            failing: r.failed_identities().into_iter().collect(),
        });
        for f in r.failures.iter().take(WITNESS_CAP) {
            self.witnesses.push(Witness {
                check: key.to_string(),
                identity: f.identity.clone(),
                at: f.witness.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","),
                lhs: vector(&f.lhs),
                rhs: vector(&f.rhs),
            });
        }
        for n in &r.notes {
            self.notes.push(format!("{key}: {n}"));
        }
    }

    /// A check with a bare verdict.
    pub fn verdict_check(&mut self, key: &str, passed: bool) {
        self.checks.push(CheckLine { key: key.to_string(), passed, evaluated: 1, failures: usize::from(!passed), failing: vec![] });
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push((key.into(), value.to_string()));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn discrepancy(&self) -> Option<bool> {
        self.expect.map(|e| (e == Expect::Pass) != self.passed())
    }

    pub fn exit_code(&self) -> i32 {
        match (self.strict, self.discrepancy()) {
            (true, Some(d)) => i32::from(d),
            _ => i32::from(!self.passed()),
        }
    }

    pub fn render(&self) -> String {
        let word = |b: bool| if b { "pass" } else { "fail" };
        let mut h = String::new();
        let _ = writeln!(h, "== report ==");
        let _ = writeln!(h, "command: {}", self.command);
        let _ = writeln!(h, "conventions:");
        for (k, v) in CONVENTIONS {
            let _ = writeln!(h, "  {k}: {v}");
        }
        if !self.checks.is_empty() {
            let _ = writeln!(h, "checks:");
        }
        for c in &self.checks {
            let _ = writeln!(h, "  {}: {} ({} evaluated, {} failed)", c.key, word(c.passed), c.evaluated, c.failures);
            if !c.failing.is_empty() {
                let _ = writeln!(h, "    failing identities: {}", c.failing.join(", "));
            }
        }
        if !self.facts.is_empty() {
            let _ = writeln!(h, "results:");
        }
        for (k, v) in &self.facts {
            let _ = writeln!(h, "  {k}: {v}");
        }
        if !self.witnesses.is_empty() {
            let _ = writeln!(h, "witnesses (at most {WITNESS_CAP} per check):");
        }
        for (n, w) in self.witnesses.iter().enumerate() {
            let _ = writeln!(h, "  {}. [{}] {} at ({}): lhs ({}) rhs ({})", n + 1, w.check, w.identity, w.at, w.lhs, w.rhs);
        }
        if !self.notes.is_empty() {
            let _ = writeln!(h, "notes:");
        }
        for n in &self.notes {
            let _ = writeln!(h, "  - {n}");
        }
        if let Some(e) = self.expect {
            let d = self.discrepancy() == Some(true);
            let _ = writeln!(h, "expectation: {}, observed {}, discrepancy: {d}", word(e == Expect::Pass), word(self.passed()));
        }
        let _ = writeln!(h, "verdict: {}", word(self.passed()));
        let _ = writeln!(h, "exit: {}", self.exit_code());

        let mut m = String::new();
        let _ = writeln!(m, "== machine ==");
        let _ = writeln!(m, "command={}", self.command);
        for (k, v) in CONVENTIONS {
            let _ = writeln!(m, "convention.{k}={v}");
        }
        for c in &self.checks {
            let _ = writeln!(m, "check.{}={}", c.key, word(c.passed));
            let _ = writeln!(m, "check.{}.evaluated={}", c.key, c.evaluated);
            let _ = writeln!(m, "check.{}.failed={}", c.key, c.failures);
            if !c.failing.is_empty() {
                let _ = writeln!(m, "check.{}.failing={}", c.key, c.failing.join(","));
            }
        }
        for (k, v) in &self.facts {
            let _ = writeln!(m, "{k}={v}");
        }
        for (n, w) in self.witnesses.iter().enumerate() {
            let n = n + 1;
            let _ = writeln!(m, "witness.{n}.check={}", w.check);
            let _ = writeln!(m, "witness.{n}.identity={}", w.identity);
            let _ = writeln!(m, "witness.{n}.at={}", w.at);
            let _ = writeln!(m, "witness.{n}.lhs={}", w.lhs);
            let _ = writeln!(m, "witness.{n}.rhs={}", w.rhs);
        }
        for (n, note) in self.notes.iter().enumerate() {
            let _ = writeln!(m, "note.{}={note}", n + 1);
        }
        if let Some(e) = self.expect {
            let _ = writeln!(m, "expect={}", word(e == Expect::Pass));
            let _ = writeln!(m, "discrepancy={}", self.discrepancy() == Some(true));
        }
        let _ = writeln!(m, "verdict={}", word(self.passed()));
        let _ = writeln!(m, "exit={}", self.exit_code());

        let mut out = h;
        out.push_str(&m);
        if let Some(o) = &self.objects {
            out.push_str("== objects ==\n");
            out.push_str(o);
        }
        out
    }
}

/// The `key=value` lines of a rendered report.
pub fn machine_section(rendered: &str) -> Vec<(&str, &str)> {
    rendered
        .split("== machine ==\n")
        .nth(1)
        .unwrap_or("")
        .lines()
        .take_while(|l| !l.starts_with("== "))
        .filter_map(|l| l.split_once('='))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use npp_core::scalar::int;
    use npp_core::CheckReport;

    fn failing() -> QReport {
        let mut r = CheckReport::new("x", "y");
        r.compare("id.a", &[0, 1], vec![int(1)], vec![int(2)]);
        r.compare("id.b", &[1, 1], vec![int(0)], vec![int(0)]);
        r
    }

    #[test]
    fn machine_values_appear_in_the_human_section() {
        let mut rep = Report::new("check thing".into());
        rep.check("thing", &failing());
        rep.fact("count", 3);
        rep.note("hello");
        rep.expect(Some(Expect::Pass), false);
        let text = rep.render();
        let human = text.split("== machine ==").next().unwrap();
        for (_, v) in machine_section(&text) {
            assert!(human.contains(v), "{v}");
        }
        assert!(text.contains("witness.1.at=1,2"));
        assert!(text.contains("discrepancy=true"));
        assert_eq!(rep.exit_code(), 1);
    }

    #[test]
    fn strict_expectations_decide_the_exit_code() {
        let mut rep = Report::new("c".into());
        rep.check("thing", &failing());
        rep.expect(Some(Expect::Fail), true);
        assert_eq!(rep.exit_code(), 0);
        rep.expect(Some(Expect::Pass), true);
        assert_eq!(rep.exit_code(), 1);
        rep.expect(Some(Expect::Fail), false);
        assert_eq!(rep.exit_code(), 1);
    }
}
