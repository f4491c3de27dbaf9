//! Machine-readable reports shared by the CLI and the examples.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::om::OrientedMatroid;

pub const SCHEMA: u32 = 1;

/// One verification or description record.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub target: String,
    pub parameters: Value,
    pub pass: bool,
    pub data: Value,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            pass: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
    }

    /// Zeroes every timing field; two runs on the same input then serialize identically.
    pub fn without_timing(mut self) -> Self {
        for c in &mut self.checks {
            c.wall_ms = 0.0;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<5} {:<9} {:<8} {:>10.1} ms\n",
                if c.pass { "pass" } else { "FAIL" },
                c.id,
                c.target,
                c.wall_ms
            ));
        }
        out
    }
}

/// Runs `f` and returns its value with the elapsed wall time in milliseconds.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64() * 1e3)
}

/// A tope chain written as `+(+++) -(-++)`, skipping zero coefficients.
pub fn format_chain(m: &OrientedMatroid, chain: &[BigInt]) -> String {
    let terms: Vec<String> = m
        .topes()
        .iter()
        .zip(chain)
        .filter(|(_, c)| !c.is_zero())
        .map(|(t, c)| {
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            if mag == BigInt::from(1) {
                format!("{sign}({t})")
            } else {
                format!("{sign}{mag}({t})")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" ")
    }
}
