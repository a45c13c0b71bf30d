//! Deterministic run reports: command name, input digests, per-check lines
//! in canonical order, and a final verdict. The verdict is `pass` exactly
//! when the exit code is 0; input and format problems never reach a report
//! and exit with code 2 instead.

use sha2::{Digest, Sha256};

pub struct Report {
    command: &'static str,
    inputs: Vec<(String, String)>,
    lines: Vec<String>,
    pass: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, inputs: Vec::new(), lines: Vec::new(), pass: true }
    }

    pub fn input(&mut self, name: &str, bytes: &[u8]) {
        let digest = Sha256::digest(bytes);
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.inputs.push((name.to_string(), hex));
    }

    pub fn check(&mut self, label: &str, ok: bool) {
        self.lines.push(format!("check: {label} : {}", if ok { "ok" } else { "FAIL" }));
        self.pass &= ok;
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn fail(&mut self) {
        self.pass = false;
    }

    pub fn exit_code(&self) -> u8 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn print(&self) {
        println!("command: {}", self.command);
        for (name, digest) in &self.inputs {
            println!("input: {name} sha256={digest}");
        }
        for line in &self.lines {
            println!("{line}");
        }
        println!("verdict: {}", if self.pass { "pass" } else { "fail" });
    }
}
