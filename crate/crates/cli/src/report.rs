// SPDX-License-Identifier: Apache-2.0

//! JSON reports. Rationals are `"p/q"` strings; key names are stable.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub index: usize,
    pub kind: String,
    pub block: usize,
    pub prime: Vec<String>,
    pub mult: u32,
    pub delta: Vec<String>,
    pub dual: usize,
    pub pairing: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub pattern: String,
    pub components: usize,
    pub lower: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    /// 1-based generator indices.
    pub index: [usize; 3],
    pub pattern: String,
    #[serde(rename = "dim_A")]
    pub dim_a: usize,
    #[serde(rename = "dim_H")]
    pub dim_h: usize,
    #[serde(rename = "criterion_A")]
    pub criterion_a: bool,
    #[serde(rename = "criterion_H")]
    pub criterion_h: bool,
    pub bounds: Vec<BoundReport>,
    pub bounds_total: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedClassReport {
    pub index: [usize; 3],
    #[serde(rename = "dim_A")]
    pub dim_a: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub module: String,
    /// Normalized global annihilator, constant term first.
    pub delta: Vec<String>,
    pub generators: Vec<GeneratorReport>,
    pub classes: Vec<ClassReport>,
    pub ordered_classes: Vec<OrderedClassReport>,
    #[serde(rename = "dim_A_total")]
    pub dim_a_total: usize,
    #[serde(rename = "dim_A_sorted_classes")]
    pub dim_a_sorted_classes: usize,
    #[serde(rename = "dim_H_total")]
    pub dim_h_total: usize,
    pub checks: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariationClass {
    pub index: [usize; 3],
    /// Normal form in `t1, t2`.
    pub value: String,
    pub coords: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariationReport {
    pub module: String,
    pub classes: Vec<VariationClass>,
    pub h: Vec<String>,
    #[serde(rename = "dim_H")]
    pub dim_h: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ClassView {
    Sorted,
    All,
}

fn fmt_index(i: &[usize; 3]) -> String {
    format!("({},{},{})", i[0], i[1], i[2])
}

fn poly_text(c: &[String]) -> String {
    c.join(" ")
}

impl AnalysisReport {
    pub fn table(&self, view: ClassView) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "module {}", self.module);
        let _ = writeln!(s, "delta  \"{}\"", poly_text(&self.delta));
        for g in &self.generators {
            let _ = writeln!(
                s,
                "gen {:<3} {:<10} prime \"{}\" mult {} dual {}",
                g.index,
                g.kind,
                poly_text(&g.prime),
                g.mult,
                g.dual
            );
        }
        match view {
            ClassView::Sorted => {
                let _ = writeln!(s, "{:<10} {:<13} {:>6} {:>6} {:>7} {:>7}  bounds", "class", "pattern", "dim A", "dim H", "crit A", "crit H");
                for c in &self.classes {
                    let _ = writeln!(
                        s,
                        "{:<10} {:<13} {:>6} {:>6} {:>7} {:>7}  [{}, {}]",
                        fmt_index(&c.index),
                        c.pattern,
                        c.dim_a,
                        c.dim_h,
                        c.criterion_a,
                        c.criterion_h,
                        c.bounds_total[0],
                        c.bounds_total[1]
                    );
                }
            }
            ClassView::All => {
                let _ = writeln!(s, "{:<10} {:>6}", "class", "dim A");
                for c in &self.ordered_classes {
                    let _ = writeln!(s, "{:<10} {:>6}", fmt_index(&c.index), c.dim_a);
                }
            }
        }
        let _ = writeln!(s, "dim A, all ordered classes: {}", self.dim_a_total);
        let _ = writeln!(s, "dim A, sorted classes:      {}", self.dim_a_sorted_classes);
        let _ = writeln!(s, "dim H:                      {}", self.dim_h_total);
        for (k, v) in &self.checks {
            let _ = writeln!(s, "check {:<30} {}", k, if *v { "pass" } else { "FAIL" });
        }
        s
    }
}

impl VariationReport {
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "module {}", self.module);
        for c in &self.classes {
            let _ = writeln!(s, "{:<10} {}", fmt_index(&c.index), c.value);
        }
        let _ = writeln!(s, "h = [{}]", self.h.join(", "));
        s
    }
}
