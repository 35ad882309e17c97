use std::process::{Command, Output};

fn hlzeta(args: &[&str], dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlzeta"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_tab_separated_parts() {
    let d = tempfile::tempdir().unwrap();
    let o = hlzeta(
        &[
            "eval", "phi", "--z", "0.5", "0", "--s", "2", "0", "--v", "1", "0",
        ],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    let (re, im) = line.trim_end().split_once('\t').unwrap();
    assert!((re.parse::<f64>().unwrap() - 1.164_481_052_930_025).abs() < 1e-14);
    assert_eq!(
        re.trim_start_matches('-')
            .replace('.', "")
            .trim_start_matches('0')
            .len(),
        17
    );
    assert_eq!(im, "0");

    let o = hlzeta(&["eval", "digamma", "--z", "1", "0"], d.path());
    let v: f64 = stdout(&o).split('\t').next().unwrap().parse().unwrap();
    assert!((v + 0.577_215_664_901_532_9).abs() < 1e-15);

    let o = hlzeta(&["eval", "stieltjes1", "--a", "0.5", "0"], d.path());
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).split('\t').next().unwrap().parse().unwrap();
    assert!((v + 1.353_459_680_804_941_5).abs() < 1e-8);
}

#[test]
fn eval_errors_map_to_exit_codes() {
    let d = tempfile::tempdir().unwrap();
    let o = hlzeta(
        &[
            "eval", "phi", "--z", "1", "0", "--s", "2", "0", "--v", "1", "0",
        ],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
    assert_eq!(
        hlzeta(&["eval", "phi", "--z", "0.5", "0"], d.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hlzeta(
            &["eval", "loggamma", "--z", "1", "0", "--s", "1", "0"],
            d.path()
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(hlzeta(&["eval", "nosuch"], d.path()).status.code(), Some(2));
    assert_eq!(
        hlzeta(&["eval", "loggamma", "--z", "-3", "0"], d.path())
            .status
            .code(),
        Some(2)
    );
    // a one-term budget cannot converge
    let o = hlzeta(
        &[
            "eval",
            "phi",
            "--z",
            "0.5",
            "0",
            "--s",
            "2",
            "0",
            "--v",
            "1",
            "0",
            "--max-terms",
            "1",
        ],
        d.path(),
    );
    assert_eq!(
        o.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn verify_summary_and_codes() {
    let d = tempfile::tempdir().unwrap();
    let o = hlzeta(
        &["verify", "ID-02", "--count", "100", "--seed", "7"],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ID-02 PASS 100/100 worst_rel="));
    assert!(d.path().join("hlzeta-ID-02.json").exists());

    assert_eq!(
        hlzeta(&["verify", "ID-99"], d.path()).status.code(),
        Some(2)
    );

    let o = hlzeta(
        &["verify", "ID-13", "--tol-abs", "1e-5", "--count", "10"],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mode=absolute"));

    let o = hlzeta(
        &[
            "verify", "ID-12", "--count", "3", "--format", "csv", "--out", "t.csv",
        ],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    let csv = std::fs::read_to_string(d.path().join("t.csv")).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("identity_id,index,mode,tol,n,"));
}

#[test]
fn suite_filter_and_config_errors() {
    let d = tempfile::tempdir().unwrap();
    let o = hlzeta(
        &[
            "suite",
            "--filter",
            "ID-00,ID-02",
            "--count",
            "20",
            "--out",
            "r.json",
        ],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let rows = stdout(&o).lines().filter(|l| l.starts_with("ID-")).count();
    assert_eq!(rows, 2);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(v["identities"].as_array().unwrap().len(), 2);
    assert_eq!(v["identities"][0]["points"].as_array().unwrap().len(), 20);

    for bad in [
        ["--tol-rel", "0"],
        ["--tol-abs", "-1"],
        ["--count", "0"],
        ["--filter", "ID-42"],
    ] {
        let o = hlzeta(&["suite", bad[0], bad[1], "--out", "never.json"], d.path());
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(!d.path().join("never.json").exists());
    }
}

#[test]
fn suite_failure_still_writes_report() {
    let d = tempfile::tempdir().unwrap();
    let o = hlzeta(
        &[
            "suite",
            "--filter",
            "ID-12,ID-00",
            "--count",
            "5",
            "--out",
            "p.json",
        ],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(d.path().join("p.json").exists());
}

#[test]
fn reports_identical_across_runs_and_job_counts() {
    let d = tempfile::tempdir().unwrap();
    let args = |out: &'static str, jobs: &'static str| {
        vec![
            "suite",
            "--filter",
            "ID-01,ID-07,ID-14",
            "--count",
            "25",
            "--format",
            "csv",
            "--out",
            out,
            "--jobs",
            jobs,
        ]
    };
    assert_eq!(hlzeta(&args("a.csv", "1"), d.path()).status.code(), Some(0));
    assert_eq!(hlzeta(&args("b.csv", "4"), d.path()).status.code(), Some(0));
    let a = std::fs::read(d.path().join("a.csv")).unwrap();
    let b = std::fs::read(d.path().join("b.csv")).unwrap();
    assert_eq!(a, b);
}
