//! End-to-end runs of the `affbranch` binary.

use std::collections::BTreeMap;
use std::process::{Command, Output};

use affbranch_cli::output::{DecomposeDoc, ElementDoc, InvolutionDoc, VerifyDoc};
use serde::{de::DeserializeOwned, Serialize};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affbranch")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Parses, re-serializes and demands the same bytes back.
fn round_trip<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let v: T = serde_json::from_str(text).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again, text);
    v
}

fn weight_text(coeffs: &[Vec<i64>]) -> String {
    coeffs
        .iter()
        .map(|c| {
            let terms: Vec<String> = c.iter().enumerate().filter(|(_, a)| **a != 0).map(|(i, a)| format!("{a}*L{i}")).collect();
            format!("L({})", if terms.is_empty() { "0".into() } else { terms.join(" + ") })
        })
        .collect::<Vec<_>>()
        .join(" ⊗ ")
}

#[test]
fn g2_spin_table_modulo_delta() {
    let out = stdout(&["decompose", "--algebra", "G2", "--sigma", "0,1,0", "--k", "1", "--rep", "spin", "--mod-delta"]);
    let mut lines: Vec<&str> = out.lines().filter(|l| l.starts_with("  ")).map(str::trim).collect();
    lines.sort();
    let mut want = vec![
        "L(2*L1) ⊗ L(10*L0)",
        "L(1*L0 + 1*L1) ⊗ L(7*L0 + 3*L1)",
        "L(2*L1) ⊗ L(4*L0 + 6*L1)",
        "L(2*L0) ⊗ L(6*L0 + 4*L1)",
        "L(1*L0 + 1*L1) ⊗ L(3*L0 + 7*L1)",
        "L(2*L0) ⊗ L(10*L1)",
    ];
    want.sort();
    assert_eq!(lines, want);
}

#[test]
fn complex_a2_has_four_abelian_subspaces() {
    let out = stdout(&["enumerate", "--algebra", "complex:A2", "--what", "abelian", "--format", "json"]);
    let items: Vec<ElementDoc> = round_trip(&out);
    assert_eq!(items.len(), 4);
    for e in &items {
        assert_eq!(e.word.len(), e.inversions.len());
        assert_eq!(e.label["weights"].as_array().unwrap().len(), e.inversions.len());
    }
}

#[test]
fn d4_twisted_verifies() {
    let out = stdout(&["verify", "--algebra", "D4", "--sigma", "0,1,0,0", "--k", "2", "--rep", "all", "--depth", "2", "--format", "json"]);
    let doc: VerifyDoc = round_trip(&out);
    assert_eq!(doc.status, "ok");
    assert_eq!(doc.depth, "2");
    assert!(doc.residuals.is_empty());
    assert_eq!(doc.checks.len(), 2);
}

#[test]
fn invalid_sigma_names_the_violated_condition() {
    let out = run(&["decompose", "--algebra", "D4", "--sigma", "1,0,0,0,0", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("kΣaᵢsᵢ ≠ 2"));
    let out = run(&["decompose", "--algebra", "G2", "--sigma", "0,1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["decompose", "--algebra", "Q7", "--node", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["decompose", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn text_and_json_list_the_same_components() {
    let base = ["decompose", "--algebra", "D4", "--sigma", "0,1,0,0", "--k", "2", "--rep", "all"];
    let text = stdout(&base);
    let json = stdout(&[&base[..], &["--format", "json"]].concat());
    let doc: DecomposeDoc = round_trip(&json);
    let mut from_json = BTreeMap::<(String, String, String, u64), u32>::new();
    for m in &doc.modules {
        for c in &m.components {
            *from_json
                .entry((m.module.clone(), weight_text(&c.coeffs), c.delta.clone().unwrap(), c.mult))
                .or_default() += 1;
        }
    }
    let mut from_text = BTreeMap::new();
    let mut module = String::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix('[') {
            module = rest.split(']').next().unwrap().to_string();
        } else if let Some(body) = line.strip_prefix("  ") {
            let (weight, rest) = body.split_once("  delta ").unwrap();
            let mut parts = rest.split("  ");
            let delta = parts.next().unwrap().to_string();
            let mult: u64 = parts.next().unwrap().strip_prefix("mult ").unwrap().parse().unwrap();
            *from_text.entry((module.clone(), weight.to_string(), delta, mult)).or_default() += 1;
        }
    }
    assert_eq!(from_text, from_json);
    assert_eq!(from_json.values().sum::<u32>(), 18);
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--algebra", "F4", "--sigma", "0,1,0,0,0", "--what", "reps", "--format", "json"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let items: Vec<ElementDoc> = round_trip(&a);
    assert_eq!(items.iter().filter(|e| e.label == "w_sigma").count(), 1);
}

#[test]
fn hermitian_data_need_a_charge() {
    let out = run(&["decompose", "--algebra", "A3", "--sigma", "1,0,1,0"]);
    assert_eq!(out.status.code(), Some(1));
    let json = stdout(&["decompose", "--algebra", "A3", "--sigma", "1,0,1,0", "--charge", "-2..2", "--format", "json"]);
    let doc: DecomposeDoc = round_trip(&json);
    assert!(!doc.modules.is_empty());
    assert!(doc.modules.iter().flat_map(|m| &m.components).all(|c| c.charge.is_some()));
    let out = stdout(&["verify", "--algebra", "A3", "--sigma", "1,0,1,0", "--charge", "-1..1"]);
    assert!(out.contains("status ok"));
}

#[test]
fn cap_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_affbranch"))
        .args(["enumerate", "--algebra", "E6", "--node", "2", "--what", "reps"])
        .env("AFFBRANCH_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 3"));
}

#[test]
fn involutions_and_inspect_round_trip() {
    let json = stdout(&["enumerate", "--algebra", "D4", "--what", "involutions", "--format", "json"]);
    let items: Vec<InvolutionDoc> = round_trip(&json);
    assert_eq!(items.len(), 8);
    assert!(items.iter().all(|x| x.sigma.len() == if x.k == 1 { 5 } else { 4 }));
    let json = stdout(&["inspect", "--algebra", "D4", "--node", "1", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["table"], "D4^(2)");
    let text = stdout(&["inspect", "--algebra", "complex:B2"]);
    assert!(text.contains("B2^(1)"));
}
