use std::process::{Command, Output};

fn bin(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bounded-catalan"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("BOUNDED_CATALAN_THREADS", t),
        None => cmd.env_remove("BOUNDED_CATALAN_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_all_reports_agreement() {
    let o = bin(&["enumerate", "--m", "2", "--n", "11", "--method", "all"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1,1,2,5,8,12,18,26,37,53,76,109 AGREE\n");
}

#[test]
fn validation_errors_exit_with_two() {
    for args in [
        &["enumerate", "--m", "2", "--n", "20", "--method", "oracle"][..],
        &["table", "--m-list", "10-2"],
        &["graph", "--m", "2", "--format", "csv"],
        &["growth", "--m", "3", "--tol", "0"],
        &["gf"],
    ] {
        let o = bin(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn table_is_independent_of_thread_count() {
    let one = bin(&["table", "--m-list", "2-6,9"], Some("1"));
    let four = bin(&["table", "--m-list", "2-6,9"], Some("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
    assert!(stdout(&one).lines().nth(4).unwrap().starts_with("5,2.312,2.352,2.352,1.552"));
    assert_eq!(bin(&["table", "--m-list", "2"], Some("zero")).status.code(), Some(2));
}

#[test]
fn graph_dot_for_m2() {
    let o = bin(&["graph", "--m", "2", "--format", "dot"], None);
    let text = stdout(&o);
    let nodes: std::collections::BTreeSet<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| l.starts_with('"') && !l.contains("->"))
        .collect();
    assert_eq!(nodes.len(), 9);
    assert_eq!(text.matches("style=dashed").count(), 3);
}

#[test]
fn growth_json_round_trips() {
    let o = bin(&["growth", "--m", "4", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: bounded_catalan::cli::GrowthJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap() + "\n", text);
    assert_eq!(v.rho_cross_check, Some(true));
}
