use std::collections::HashSet;
use std::process::Command as Process;

use clap::CommandFactory;
use largescale_cli::{run, Cli, Outcome, OPERATIONS};
use serde_json::Value;

fn go(args: &[&str]) -> Outcome {
    run(std::iter::once("largescale").chain(args.iter().copied()))
}

fn outputs(args: &[&str]) -> Value {
    let o = go(args);
    assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    v["outputs"].clone()
}

fn binary(args: &[&str]) -> std::process::Output {
    Process::new(env!("CARGO_BIN_EXE_largescale"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn exit_codes() {
    let out = binary(&["rank", "named:samerank_M", "1,1", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = binary(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = binary(&["--help"]);
    assert_eq!(out.status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("broken.json");
    std::fs::write(
        &bad,
        "{\n  \"format\": 1,\n  \"m\": 2,\n  \"generators\": [[0,0]],\n  \"relations\": [\n",
    )
    .unwrap();
    let out = binary(&["bound", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("broken.json") && stderr.contains("line"),
        "{stderr}"
    );
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["error"]["kind"], "input");
}

#[test]
fn usage_errors_on_degree_shapes() {
    assert_eq!(go(&["rank", "named:samerank_M", "0,0,0", "1,1,1"]).code, 2);
    assert_eq!(
        go(&["ibar", "named:samerank_M", "2,0", "0,0", "1,1"]).code,
        2
    );
    assert_eq!(
        go(&["dims", "named:samerank_M", "--box", "1,1", "--lo", "2,0"]).code,
        2
    );
    assert_eq!(
        go(&["random", "--seed", "1", "--params", "m=2,colour=3"]).code,
        2
    );
}

#[test]
fn domain_errors_exit_one() {
    let o = go(&["quiverize", "named:samerank_M", "-n", "2"]);
    assert_eq!(o.code, 1);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert!(v.get("outputs").is_none() && v["error"]["message"].is_string());
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["decompose", "named:samerank_N"][..],
        &["random", "--seed", "7", "--params", "m=3,max_gens=3"],
        &["indec", "named:m3_indecomposable", "-n", "2"],
        &["serre-step", "void:3", "--iterate"],
    ] {
        let a = binary(args);
        let b = binary(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let v: Value = serde_json::from_slice(&a.stdout).unwrap();
        assert!(v.get("timing_ms").is_none());
    }
    assert!(
        serde_json::from_str::<Value>(&go(&["--timing", "kdim", "simplex:2"]).stdout).unwrap()
            ["timing_ms"]
            .is_number()
    );
}

#[test]
fn svg_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    for p in [&a, &b] {
        assert_eq!(
            go(&[
                "decompose",
                "named:samerank_M",
                "--svg",
                p.to_str().unwrap()
            ])
            .code,
            0
        );
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    assert_eq!(String::from_utf8(x).unwrap().matches("<circle").count(), 2);
}

fn subcommand_exists(path: &str) -> bool {
    let mut cmd = Cli::command();
    for part in path.split(' ') {
        match cmd.find_subcommand(part) {
            Some(c) => cmd = c.clone(),
            None => return false,
        }
    }
    true
}

#[test]
fn every_operation_is_dispatched() {
    let mut seen = HashSet::new();
    for (op, sub) in OPERATIONS {
        assert!(seen.insert(*op), "{op} listed twice");
        assert!(
            subcommand_exists(sub),
            "{op} maps to missing subcommand `{sub}`"
        );
    }
    assert_eq!(seen.len(), 42);
}

#[test]
fn worked_examples_through_the_cli() {
    let q = &outputs(&["decompose", "named:samerank_M"])["decomposition"]["quadrants"];
    let corners: Vec<Value> = q
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["corner"].clone())
        .collect();
    assert_eq!(
        corners,
        vec![serde_json::json!([0, 0]), serde_json::json!([1, 1])]
    );
    assert_eq!(outputs(&["kdim", "skeleton:3:0"])["kdim"], 1);
    assert_eq!(
        outputs(&["equivalent", "named:samerank_M", "named:samerank_N"])["equivalent"],
        false
    );
    assert_eq!(
        outputs(&["section-exists", "named:notsplit"])["section_exists"],
        false
    );
    assert_eq!(
        outputs(&["indec", "named:m3_indecomposable", "-n", "2"])["verdict"],
        "yes"
    );
    assert_eq!(outputs(&["quiver-shape", "-n", "1"])["graph"]["name"], "D4");
    let dims = outputs(&["delocalize", "named:rho_counterexample", "--box", "0,0"]);
    assert_eq!(dims["dims"][0]["dim"], 2);
}

#[test]
fn rationals_and_characteristic_conflicts() {
    assert_eq!(
        outputs(&["--char", "0", "rank", "named:samerank_N", "0,0", "1,1"])["rank"],
        0
    );
    let o = go(&["--char", "0", "rank", "named:samerank_N", "1,1", "2,2"]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["field"]["name"], "Q");
    assert_eq!(v["outputs"]["rank"], 2);

    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    assert_eq!(
        go(&[
            "--char",
            "3",
            "named",
            "samerank_N",
            "-o",
            a.to_str().unwrap()
        ])
        .code,
        0
    );
    assert_eq!(
        go(&[
            "--char",
            "7",
            "named",
            "samerank_N",
            "-o",
            b.to_str().unwrap()
        ])
        .code,
        0
    );
    assert_eq!(
        go(&["equivalent", a.to_str().unwrap(), b.to_str().unwrap()]).code,
        2
    );
    assert_eq!(
        go(&[
            "--char",
            "3",
            "equivalent",
            a.to_str().unwrap(),
            b.to_str().unwrap()
        ])
        .code,
        0
    );
    let v: Value = serde_json::from_str(&go(&["bound", a.to_str().unwrap()]).stdout).unwrap();
    assert_eq!(v["field"]["characteristic"], 3);
}

#[test]
fn written_files_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let dec = dir.path().join("dec.json");
    let module = dir.path().join("m.json");
    outputs(&["decompose", "named:samerank_N", "-o", dec.to_str().unwrap()]);
    outputs(&[
        "reconstruct",
        dec.to_str().unwrap(),
        "-o",
        module.to_str().unwrap(),
    ]);
    assert_eq!(
        outputs(&["equivalent", module.to_str().unwrap(), "named:samerank_N"])["equivalent"],
        true
    );

    let rep = dir.path().join("rep.json");
    outputs(&[
        "quiverize",
        "named:m3_indecomposable",
        "-n",
        "2",
        "-o",
        rep.to_str().unwrap(),
    ]);
    assert_eq!(outputs(&["endo", rep.to_str().unwrap()])["dim"], 1);
}

#[test]
fn verify_paper_passes_and_names_a_damaged_fixture() {
    let o = binary(&["verify-paper"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
    let listed = outputs(&["verify-paper", "--list"]);
    assert_eq!(listed["checks"].as_array().unwrap().len(), 7);

    let src = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/named");
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(src).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    assert_eq!(
        go(&["verify-paper", "--fixtures", dir.path().to_str().unwrap()]).code,
        0
    );

    let target = dir.path().join("samerank_M.json");
    let text = std::fs::read_to_string(&target)
        .unwrap()
        .replace("\"coeffs\": [1, -1, 0]", "\"coeffs\": [1, 0, 0]");
    std::fs::write(&target, text).unwrap();
    let o = binary(&["verify-paper", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let failed: Vec<&Value> = v["outputs"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["id"], "same-rank");
    assert!(failed[0]["detail"]
        .as_str()
        .unwrap()
        .starts_with("same-rank failed"));
}
