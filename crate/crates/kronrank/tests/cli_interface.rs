//! End-to-end checks of the `kronrank` binary: exit-code contract, module
//! file round-trips, report structure and witness re-verification.

use std::path::PathBuf;
use std::process::Command;

use kronrank::cli::{parse_module, serialize_module};
use kronrank::grassmann::Subspace;
use kronrank::linalg::{Field, Matrix};
use kronrank::test_modules::soc_dim;

const RINGEL_DOC: &str = r#"{
  "field": { "prime": 5 },
  "r": 3,
  "dim": [2, 2],
  "maps": [
    [[1, 0], [0, 1]],
    [[0, 1], [0, 0]],
    [[0, 0], [1, 0]]
  ]
}
"#;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kronrank"))
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("kronrank-e2e");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn exit_codes_follow_the_contract() {
    let module = fixture("e.json", RINGEL_DOC);

    let ok = bin()
        .args(["check", "esp", "--d", "2", "--mode", "exhaustive"])
        .arg(&module)
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0), "{ok:?}");

    let failed = bin()
        .args(["check", "csr", "--d", "1"])
        .arg(&module)
        .output()
        .unwrap();
    assert_eq!(failed.status.code(), Some(2));

    let sampled = bin()
        .args([
            "check", "esp", "--d", "2", "--mode", "sample", "--count", "8",
        ])
        .arg(&module)
        .output()
        .unwrap();
    assert_eq!(sampled.status.code(), Some(3));

    let error = bin()
        .args(["check", "esp", "--d", "7"])
        .arg(&module)
        .output()
        .unwrap();
    assert_eq!(error.status.code(), Some(1));
}

#[test]
fn csr_failure_reports_the_expected_witness_dimensions() {
    let module = fixture("e-witness.json", RINGEL_DOC);
    let out = bin()
        .args(["check", "csr", "--d", "1"])
        .arg(&module)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let witness = &report["result"]["verdicts"][0]["witness"];
    let mut dims = [
        witness["dim_u"].as_u64().unwrap(),
        witness["dim_v"].as_u64().unwrap(),
    ];
    dims.sort_unstable();
    assert_eq!(dims, [2, 3]);

    // the witness subspaces re-verify through the library
    let m = parse_module(RINGEL_DOC).unwrap();
    for (key, expected) in [
        ("u", witness["dim_u"].clone()),
        ("v", witness["dim_v"].clone()),
    ] {
        let basis = witness[key]["basis"].as_array().unwrap();
        let rows: Vec<i64> = basis
            .iter()
            .flat_map(|row| row.as_array().unwrap().iter().map(|v| v.as_i64().unwrap()))
            .collect();
        let sub = Subspace::from_spanning_rows(Matrix::from_int_rows(
            Field::prime(5).unwrap(),
            basis.len(),
            3,
            &rows,
        ))
        .unwrap();
        assert_eq!(
            soc_dim(&m, &sub).unwrap() as u64,
            expected.as_u64().unwrap()
        );
    }
}

#[test]
fn grassmann_count_matches_the_binomial() {
    let out = bin()
        .args(["grassmann", "count", "--d", "1", "--r", "3", "--q", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["count"], "7");
}

#[test]
fn constructed_modules_round_trip_through_check() {
    let out = bin()
        .args(["construct", "ringel-e", "--q", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let module_doc = serde_json::to_string(&report["result"]["module"]).unwrap();
    let parsed = parse_module(&module_doc).unwrap();
    assert_eq!(
        serialize_module(&parsed),
        serialize_module(&parse_module(RINGEL_DOC).unwrap())
    );

    let xu = bin()
        .args([
            "construct",
            "xu",
            "--r",
            "3",
            "--q",
            "5",
            "--basis",
            "0,1,0",
        ])
        .output()
        .unwrap();
    assert_eq!(xu.status.code(), Some(0));
    let xu_report: serde_json::Value = serde_json::from_slice(&xu.stdout).unwrap();
    let xu_doc = serde_json::to_string(&xu_report["result"]["module"]).unwrap();
    let path = fixture("xw.json", &xu_doc);
    let e_path = fixture("e-hom.json", RINGEL_DOC);
    let hom = bin().arg("hom").arg(&path).arg(&e_path).output().unwrap();
    assert_eq!(hom.status.code(), Some(0));
    let hom_report: serde_json::Value = serde_json::from_slice(&hom.stdout).unwrap();
    assert_eq!(hom_report["result"]["hom_dim"], 1);
}

#[test]
fn tau_and_dual_commands_emit_valid_modules() {
    let module = fixture("e-tau.json", RINGEL_DOC);
    // dim E = (2,2); Phi(2,2) = (10,4) and Phi^-1(2,2) = (4,10) for r = 3
    let expected = [
        (vec!["tau"], (10, 4)),
        (vec!["tau", "--inverse"], (4, 10)),
        (vec!["dual"], (2, 2)),
    ];
    for (args, dims) in expected {
        let out = bin().args(&args).arg(&module).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let doc = serde_json::to_string(&report["result"]["module"]).unwrap();
        let parsed = parse_module(&doc).unwrap();
        assert_eq!((parsed.dim().d1, parsed.dim().d2), dims, "{args:?}");
    }
}

#[test]
fn orbit_command_reports_monotone_flags() {
    let xu = bin()
        .args([
            "construct",
            "xu",
            "--r",
            "3",
            "--q",
            "2",
            "--basis",
            "1,0,0",
        ])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&xu.stdout).unwrap();
    let doc = serde_json::to_string(&report["result"]["module"]).unwrap();
    let path = fixture("xalpha.json", &doc);
    let out = bin()
        .args(["orbit", "--range", "-2..2"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let scan: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let steps = scan["result"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 5);
    for pair in steps.windows(2) {
        for d in [0usize, 1] {
            let before = pair[0]["esp"][d].as_bool().unwrap();
            let after = pair[1]["esp"][d].as_bool().unwrap();
            assert!(!before || after, "esp flags stay on along tau^-1");
        }
    }
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let module = fixture("e-out.json", RINGEL_DOC);
    let target = std::env::temp_dir()
        .join("kronrank-e2e")
        .join("report.json");
    let _ = std::fs::remove_file(&target);
    let out = bin()
        .args(["check", "esp", "--d", "2"])
        .arg(&module)
        .arg("--out")
        .arg(&target)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(written["result"]["verdicts"][0]["status"], "holds");
}

#[test]
fn stratum_and_profile_commands() {
    let module = fixture("e-stratum.json", RINGEL_DOC);
    let out = bin().arg("stratum").arg(&module).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["stratum"], 2);

    let out = bin()
        .args(["profile", "--d", "1"])
        .arg(&module)
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["min_soc"], 2);
    assert_eq!(report["result"]["max_soc"], 3);
    assert_eq!(
        report["result"]["observations"].as_array().unwrap().len(),
        31
    );
}

#[test]
fn tower_command_builds_three_members() {
    let module = fixture("e-tower.json", RINGEL_DOC);
    let out = bin()
        .args(["construct", "tower", "--n", "3", "--seed", "0"])
        .arg(&module)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let members = report["result"]["members"].as_array().unwrap();
    assert_eq!(members.len(), 3);
    let dims: Vec<_> = members.iter().map(|m| m["dim"].clone()).collect();
    assert_eq!(
        dims,
        vec![
            serde_json::json!([2, 2]),
            serde_json::json!([4, 4]),
            serde_json::json!([6, 6])
        ]
    );
}
