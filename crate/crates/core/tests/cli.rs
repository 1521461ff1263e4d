use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn cpac(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cpac"))
        .args(args)
        .env_remove("CPAC_BUDGET")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = cpac(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {stdout}"))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dims_of_full_cube() {
    let (_, stdout, _) = cpac(&["dims", "--class", "full", "--universe", "3"]);
    assert!(stdout.starts_with(r#"{"vc":3,"ldim":3,"#), "{stdout}");
}

#[test]
fn obstruction_reports_no_zero_loss_outside_range() {
    let v = json(&["demo", "obstruction", "--k", "1", "--f", "inc"]);
    assert_eq!(v["zero_loss"], false);
    let v = json(&[
        "demo",
        "obstruction",
        "--k",
        "3",
        "--f",
        "inc",
        "--learner",
        "asym-block",
    ]);
    assert_eq!(v["zero_loss"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(cpac(&["frobnicate"]).0, 2);
    assert_eq!(
        cpac(&["dims", "--class", "full", "--universe", "3", "--nope"]).0,
        2
    );
    assert_eq!(cpac(&["dims", "--universe", "3"]).0, 2);
    let (code, stdout, _) = cpac(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("experiment"));
    let (code, stdout, stderr) = cpac(&[
        "learn",
        "--class",
        "block:inc",
        "--learner",
        "asym-block",
        "--sample",
        "[]",
    ]);
    assert_eq!((code, stdout.as_str()), (1, ""));
    assert!(stderr.starts_with("error:"));
    assert_eq!(
        cpac(&["dims", "--class", "nonsense", "--universe", "3"]).0,
        1
    );
    assert_eq!(
        cpac(&[
            "dims",
            "--class",
            "diagonal",
            "--universe",
            "3",
            "--budget",
            "0"
        ])
        .0,
        1
    );
}

#[test]
fn class_build_round_trips_into_dims() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("class.json");
    json(&[
        "class",
        "build",
        "--class",
        "baseline-2",
        "--bound",
        "9",
        "--out",
        path(&file),
    ]);
    let built: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(built["members"].as_array().unwrap().len(), 45);
    let v = json(&["dims", "--class-json", path(&file), "--universe", "10"]);
    assert_eq!(
        (v["vc"].as_u64(), v["class"].as_str()),
        (Some(2), Some("baseline-2"))
    );
}

#[test]
fn learned_hypothesis_round_trips_into_membership() {
    let v = json(&[
        "learn",
        "--class",
        "block:inc",
        "--learner",
        "asym-block",
        "--sample",
        "[[8,1],[10,1],[12,1]]",
    ]);
    assert_eq!(v["epsilon"], "1/5");
    let h = v["output"].to_string();
    let m = json(&[
        "class",
        "member",
        "--class",
        "block:inc",
        "--hypothesis",
        &h,
    ]);
    assert_eq!(m["verdict"], "yes");
    let m = json(&[
        "class",
        "member",
        "--class",
        "block:inc",
        "--hypothesis",
        "2,4",
    ]);
    assert_eq!(m["verdict"], "no");
}

#[test]
fn learners_from_sample_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.json");
    std::fs::write(&file, "[[3,1],[5,1]]").unwrap();
    let v = json(&[
        "learn",
        "--class",
        "good:all-ones:0",
        "--learner",
        "erm-good",
        "--sample",
        path(&file),
    ]);
    assert_eq!(
        (v["output"]["support"].clone(), v["achieved_loss"].clone()),
        (serde_json::json!([3]), "1/2".into())
    );
    let v = json(&[
        "learn",
        "--class",
        "full",
        "--learner",
        "lift",
        "--sample",
        path(&file),
        "--schedule",
        "1,2",
    ]);
    assert_eq!(v["epsilon"], "1/2");
    assert_eq!(v["resamples"], 4);
}

#[test]
fn machine_code_round_trip_and_budget_env() {
    let dir = tempfile::tempdir().unwrap();
    let decoded = json(&["machine", "decode", "--code", "638"]);
    let file = dir.path().join("p.txt");
    std::fs::write(&file, decoded["program"].as_str().unwrap()).unwrap();
    assert_eq!(
        json(&["machine", "code", "--program", path(&file)])["code"],
        638
    );
    let v = json(&["machine", "run", "--program", path(&file), "--input", "5"]);
    assert_eq!(v["output"], serde_json::json!([0, 1]));

    std::fs::write(&file, "DJZ 0 0\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cpac"))
        .args(["machine", "run", "--program", path(&file)])
        .env("CPAC_BUDGET", "7")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (v["status"].as_str(), v["steps_used"].as_u64()),
        (Some("running"), Some(7))
    );
}

#[test]
fn diag_demo_defeats_the_witness() {
    let v = json(&[
        "demo",
        "diag",
        "--witness",
        "all-zeros",
        "--k",
        "0",
        "--budget",
        "100000",
    ]);
    assert_eq!(
        (
            v["member"].clone(),
            v["agrees"].clone(),
            v["witness_refuted"].clone()
        ),
        (true.into(), true.into(), true.into())
    );
    assert_eq!(
        cpac(&["demo", "diag", "--witness", "bogus", "--k", "0"]).0,
        1
    );
}

#[test]
fn experiment_outputs_and_config_echo_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"class":"baseline-1","distribution":[[0,1,"1/2"],[1,0,"1/2"]],"m":[2,8],"trials":50,"seed":5}"#,
    )
    .unwrap();
    let out = dir.path().join("run");
    let first = json(&["experiment", "run", path(&cfg), "--out", path(&out)]);
    let csv = std::fs::read_to_string(out.with_extension("csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("m,trials,successes,rate,inf_loss_num,inf_loss_den,seed,generator_id,n")
    );
    assert_eq!(lines.count(), 2);

    let echo = dir.path().join("echo.json");
    std::fs::write(&echo, first["config"].to_string()).unwrap();
    assert_eq!(json(&["experiment", "run", path(&echo)]), first);

    let reseeded = json(&[
        "experiment",
        "run",
        path(&cfg),
        "--seed",
        "6",
        "--trials",
        "60",
    ]);
    assert_eq!(reseeded["config"]["seed"], 6);
    assert_eq!(reseeded["rows"][0]["trials"], 60);

    let (code, stdout, _) = cpac(&["experiment", "run", path(&cfg), "--csv"]);
    assert_eq!((code, stdout), (0, csv));

    std::fs::write(&cfg, r#"{"class":"full","distribution":[[0,1,"1/2"]]}"#).unwrap();
    assert_eq!(cpac(&["experiment", "run", path(&cfg)]).0, 1);
}
