// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::Command;

use blanchfield::analyzer::{Analyzer, Engine, Fault};
use blanchfield::format::parse_module;
use blanchfield::report::{AnalysisReport, VariationReport};
use blanchfield::run;
use blanchfield_core::arith::parse_rat;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn invoke(args: &[&str], engine: Engine) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("blanchfield").chain(args.iter().copied());
    let code = run(argv, engine, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("blanchfield-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn analyze_json(file: &str) -> (String, AnalysisReport) {
    let path = tmp(&format!("{file}.json"));
    let (code, _, err) = invoke(&["analyze", &data(file), "--report", path.to_str().unwrap()], Engine::default());
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&path).unwrap();
    let report = serde_json::from_str(&text).unwrap();
    (text, report)
}

#[test]
fn analyze_example_a() {
    let (_, r) = analyze_json("example-A.bmod");
    assert_eq!((r.dim_a_total, r.dim_h_total), (24, 2));
    for c in &r.classes {
        assert_eq!(c.criterion_a, c.dim_a > 0);
        assert_eq!(c.criterion_h, c.dim_h > 0);
    }
    assert_eq!(r.dim_h_total, r.classes.iter().map(|c| c.dim_h).sum::<usize>());
}

#[test]
fn analyze_trivial_knots() {
    for f in ["trefoil.bmod", "figure-eight.bmod"] {
        let (_, r) = analyze_json(f);
        assert_eq!((r.dim_a_total, r.dim_h_total), (0, 0), "{f}");
    }
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let (a, r) = analyze_json("example-B.bmod");
    let (b, _) = analyze_json("example-B.bmod");
    assert_eq!(a, b);
    let again: AnalysisReport = serde_json::from_str(&serde_json::to_string_pretty(&r).unwrap()).unwrap();
    assert_eq!(again, r);
    for g in &r.generators {
        for c in g.delta.iter().chain(&g.pairing).chain(&g.prime) {
            parse_rat(c).unwrap();
        }
    }
    assert_eq!(r.delta.iter().map(|c| parse_rat(c).unwrap()).count(), 9);
    assert_eq!((r.dim_a_total, r.dim_a_sorted_classes, r.dim_h_total), (30, 10, 4));
}

#[test]
fn class_views() {
    let (code, sorted, _) = invoke(&["analyze", &data("example-B.bmod")], Engine::default());
    assert_eq!(code, 0);
    assert!(sorted.contains("first-pair"));
    let (code, all, _) = invoke(&["analyze", &data("example-B.bmod"), "--classes", "all"], Engine::default());
    assert_eq!(code, 0);
    assert!(all.contains("(2,1,1)"));
    assert!(all.contains("dim A, all ordered classes: 30"));
}

#[test]
fn input_errors_exit_one() {
    let (code, _, err) = invoke(&["analyze", &data("malformed.bmod")], Engine::default());
    assert_eq!(code, 1);
    assert!(err.contains("malformed.bmod:3"), "{err}");
    let (code, _, err) = invoke(&["variation", &data("example-A.bmod"), &data("empty.surg")], Engine::default());
    assert_eq!(code, 1, "{err}");
    let (code, _, _) = invoke(&["analyze", &data("missing.bmod")], Engine::default());
    assert_eq!(code, 1);
    let (code, _, _) = invoke(&["frobnicate"], Engine::default());
    assert_eq!(code, 1);
}

#[test]
fn resource_guard_exits_three() {
    let (code, _, err) = invoke(&["analyze", &data("example-B.bmod"), "--max-dim", "10"], Engine::default());
    assert_eq!(code, 3, "{err}");
}

#[test]
fn variation_outputs() {
    let path = tmp("variation.json");
    let (code, out, err) = invoke(
        &["variation", &data("example-A.bmod"), &data("example-A-elementary.surg"), "--report", path.to_str().unwrap()],
        Engine::default(),
    );
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("(1,1,2)    t2 - t1"), "{out}");
    let r: VariationReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.h.len(), 2);
    assert!(r.h.iter().any(|c| c != "0"));
    for c in &r.classes {
        assert_eq!(c.value == "0", c.index != [1, 1, 2]);
    }

    let (code, out, _) = invoke(&["variation", &data("example-A.bmod"), &data("equal-leaves.surg")], Engine::default());
    assert_eq!(code, 0);
    assert!(out.contains("h = [0, 0]"));
}

#[test]
fn selftest_passes_on_examples() {
    for f in ["example-A.bmod", "example-B.bmod", "trefoil.bmod"] {
        let (code, out, err) = invoke(&["selftest", &data(f)], Engine::default());
        assert_eq!(code, 0, "{f}: {out}{err}");
    }
    let (code, out, _) = invoke(&["analyze", &data("example-A.bmod"), "--check"], Engine::default());
    assert_eq!(code, 0);
    assert!(out.contains("check p_map_full_rank"));
}

#[test]
fn corrupted_engine_exits_two() {
    let engine = Engine::corrupted(Fault::InflatedHDims);
    let (code, out, _) = invoke(&["selftest", &data("example-A.bmod")], engine);
    assert_eq!(code, 2);
    assert!(out.contains("FAIL criterion_H_iff_dim"), "{out}");
    let (code, _, _) = invoke(&["analyze", &data("example-A.bmod"), "--check"], engine);
    assert_eq!(code, 2);
}

#[test]
fn analyzer_memoizes() {
    let f = parse_module("a", &std::fs::read_to_string(data("example-B.bmod")).unwrap()).unwrap();
    let a = Analyzer::new(5000);
    let first = a.report(&f.name, &f.module).unwrap();
    let n = a.cached_entries();
    assert_eq!(a.report(&f.name, &f.module).unwrap(), first);
    assert_eq!(a.cached_entries(), n);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_blanchfield");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["analyze", &data("trefoil.bmod")]), Some(0));
    assert_eq!(status(&["analyze", &data("malformed.bmod")]), Some(1));
    assert_eq!(status(&["analyze", &data("example-B.bmod"), "--max-dim", "4"]), Some(3));
    assert_eq!(status(&["--help"]), Some(0));
}
