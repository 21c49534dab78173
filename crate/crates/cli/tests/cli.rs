use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use stellate::interp::{execute, RunConfig, EXIT_GUARD, EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS};
use stellate::parse_expr;
use stellate_core::{MonomialModule, MultiplicativeSet, PrimeFamily};

fn stellate(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_stellate"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn demo() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/scripts/demo.stl").to_string()
}

#[test]
fn demo_script_runs() {
    let (code, out) = stellate(&["eval", &demo(), "--samples", "30"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        &lines[..6],
        ["<x1>", "<x1^-1>", "<x1>", "<x1>", "<x1>", "true"]
    );
    assert!(out.contains("check gv B: holds"));
}

#[test]
fn transform_prints_and_exits_zero() {
    let (code, out) = stellate(&["check", "gv", "<x1, x2>"]);
    assert_eq!(
        (code, out.trim()),
        (EXIT_OK, "check gv <x1, x2>: holds (inverse = <1>)")
    );
}

#[test]
fn non_gv_axiom_suite_exits_one_with_witness() {
    let (code, out) = stellate(&[
        "suite",
        "star-axioms",
        "stransform(closure{<x1>})",
        "--samples",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_VIOLATIONS);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["schema"], 1);
    let v = &doc["results"][1]["report"]["violations"][0];
    assert_eq!(v["witness"], "x1^-1");
}

#[test]
fn exit_codes() {
    let (code, _) = stellate(&["suite", "no-such-suite"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, out) = stellate(&["check", "gv", "<x1,"]);
    assert_eq!(code, EXIT_USAGE, "{out}");
    assert!(out.contains("2:"), "{out}");
    let (code, out) = stellate(&["suite", "idempotence", "closure{<x1>}", "--max-iter", "8"]);
    assert_eq!(code, EXIT_GUARD, "{out}");
    assert!(out.contains("within 8"), "{out}");
}

#[test]
fn max_iter_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_stellate"))
        .args([
            "check",
            "insat",
            "<x2^5>",
            "closure{<x1>}",
            "--format",
            "json",
        ])
        .env("STELLATE_MAX_ITER", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_GUARD));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["config"]["max_iter"], 5);
}

#[test]
fn out_file_receives_report() {
    let path = std::env::temp_dir().join(format!("stellate-{}.json", std::process::id()));
    let (code, out) = stellate(&[
        "counterexample",
        "ex2-10",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(doc["results"][0]["report"]["pass"], true);
}

#[test]
fn same_config_same_document() {
    let src = std::fs::read_to_string(demo()).unwrap();
    let cfg = RunConfig {
        samples: 20,
        seed: 9,
        ..RunConfig::default()
    };
    assert_eq!(
        execute(&src, &cfg).deterministic_json(),
        execute(&src, &cfg).deterministic_json()
    );
}

fn module(nvars: usize) -> impl Strategy<Value = MonomialModule> {
    prop::collection::vec(prop::collection::vec(-3i64..=4, nvars), 1..=4)
        .prop_map(move |g| MonomialModule::new(nvars, g).unwrap())
}

fn reparse(nvars: usize, text: &str) -> Value {
    let src = format!("ring R = monomial(vars={nvars})\nprint {text}");
    let o = execute(&src, &RunConfig::default());
    assert_eq!(o.exit_code, EXIT_OK, "{}", o.json());
    o.document["results"][1]["value"].clone()
}

proptest! {
    #[test]
    fn printed_modules_reparse_equal(m in (1usize..=4).prop_flat_map(module)) {
        let text = m.to_string();
        prop_assert!(parse_expr(&text).is_ok());
        prop_assert_eq!(reparse(m.nvars(), &text), Value::String(text));
    }

    #[test]
    fn printed_sets_and_families_reparse(
        (s, sig) in (1usize..=3).prop_flat_map(|n| (
            prop::collection::vec(module(n).prop_map(|m| m.scale(&m.meet().neg()).unwrap()), 1..=2),
            prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 1..=3),
        ))
    ) {
        let n = s[0].nvars();
        let set = MultiplicativeSet::new(s).unwrap();
        prop_assert_eq!(reparse(n, &set.to_string()), Value::String(set.to_string()));
        let f = PrimeFamily::new(n, sig.into_iter().map(|x| x.into_iter().collect()).collect()).unwrap();
        prop_assert_eq!(reparse(n, &f.to_string()), Value::String(f.to_string()));
    }
}
