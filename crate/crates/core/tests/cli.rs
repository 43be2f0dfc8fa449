use std::process::{Command, Output};

fn fslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fslab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn predict_and_brute_on_a_four_cycle() {
    let out = fslab(&["predict", "Cl", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["prediction"]["case"], "cycle");
    assert_eq!(v["prediction"]["verdict"]["value"], 2);

    let out = fslab(&["brute", "Cl", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["component_count"], 2);
}

#[test]
fn verify_reports_a_match() {
    let out = fslab(&["verify", "Cl", "1,1,2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(json(&out)["matched"], true);
    assert_eq!(json(&out)["brute_count"], 1);
}

#[test]
fn kappa_plain_and_brute() {
    // path on four vertices: max bridge length 2
    let out = fslab(&["kappa", "Ch"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "3");
    let out = fslab(&["kappa", "Ch", "--brute"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["kappa_brute"], "3");
}

#[test]
fn path_and_exchangeable() {
    let out = fslab(&["path", "Cl", "1,1,2", "0,1,2,3", "1,0,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["reachable"], true);
    assert!(!v["swaps"].as_array().unwrap().is_empty());

    let out = fslab(&["path", "Cl", "2,2", "0,1,2,3", "1,0,2,3"]);
    assert_eq!(json(&out)["reachable"], false);

    // P4 with K_{2,2}: the same-class pair cannot be exchanged
    let out = fslab(&["exchangeable", "Ch", "2,2", "0", "1", "0,1,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "false");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        vec!["predict", "C!", "2,2"],
        vec!["predict", "Cl", "2,3"],
        vec!["predict", "Cl", "two"],
        vec!["path", "Cl", "2,2", "0,0,1,2", "0,1,2,3"],
        vec!["exchangeable", "Cl", "2,2", "1", "1", "0,1,2,3"],
        vec!["bogus"],
    ] {
        assert_eq!(fslab(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sweep_from_config_and_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.toml");
    let report = dir.path().join("report.jsonl");
    std::fs::write(&cfg, "n_min = 4\nn_max = 5\nfamily = \"cycles\"\n").unwrap();
    let out = fslab(&[
        "sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--jobs",
        "2",
        "--output",
        report.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&report).unwrap();
    assert_eq!(text.lines().count(), 4 + 6 + 1);
    assert!(!text.contains("runtime_ms"));

    let json_cfg = dir.path().join("sweep.json");
    std::fs::write(&json_cfg, r#"{"n_min": 4, "n_max": 4, "format": "csv"}"#).unwrap();
    let out = fslab(&["sweep", "--config", json_cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("graph6,"));

    std::fs::write(&cfg, "n_min = 4\nn_max = 12\n").unwrap();
    assert_eq!(
        fslab(&["sweep", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    // a cap violation is recorded per instance and fails the run
    std::fs::write(
        &cfg,
        "n_min = 5\nn_max = 5\nfamily = \"trees\"\nmax_vertices = 4\n",
    )
    .unwrap();
    assert_eq!(
        fslab(&["sweep", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn enumerate_and_exceptions() {
    let out = fslab(&["enumerate", "5"]);
    assert_eq!(stdout(&out).lines().count(), 21);
    let out = fslab(&["enumerate", "4", "--all"]);
    assert_eq!(stdout(&out).lines().count(), 11);
    assert_eq!(fslab(&["enumerate", "9"]).status.code(), Some(2));
    assert_eq!(fslab(&["exceptions"]).status.code(), Some(0));
}

#[test]
fn two_components_subcommand() {
    // T6 spider at its exceptional k has six components, as predicted
    let out = fslab(&["two-components", "EkE?", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = json(&out);
    assert_eq!(v["brute_count"], 6);
    assert_eq!(v["prediction"]["verdict"]["kind"], "six_components");
}
