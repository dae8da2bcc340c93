//! The binary as a user runs it: exit codes, output formats and the order cap.

use std::process::{Command, Output};

use qplab_cli::ReportJson;
use qplab_core::partitions::Family;
use qplab_core::registry::{list_identities, Verifier};

fn qplab(args: &[&str]) -> Output {
    qplab_env(args, None)
}

fn qplab_env(args: &[&str], max_order: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qplab"));
    cmd.args(args).env_remove("QPLAB_MAX_ORDER");
    if let Some(v) = max_order {
        cmd.env("QPLAB_MAX_ORDER", v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let o = qplab(&["verify", "--all", "--order", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    let pass_lines = text.lines().filter(|l| l.starts_with("PASS")).count();
    assert_eq!(pass_lines, list_identities().len() - 1);
    assert_eq!(text.lines().filter(|l| l.starts_with("XFAIL")).count(), 1);
    assert!(!text.lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn verify_one_as_json() {
    let o = qplab(&["verify", "--id", "thm-1.2-a", "--order", "30", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: ReportJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.status, "pass");
    assert_eq!(r.order, 24);
    assert!(r.mismatch.is_none());
    assert!(r.notes.contains("clamped"));
}

#[test]
fn json_round_trips_to_registry_reports() {
    let o = qplab(&["verify", "--all", "--order", "20", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let parsed: Vec<ReportJson> = serde_json::from_str(&stdout(&o)).unwrap();
    let direct = Verifier::default().verify_all(20);
    assert_eq!(parsed.len(), direct.len());
    for (p, d) in parsed.iter().zip(&direct) {
        let mut expected = ReportJson::from(d);
        expected.elapsed_ms = p.elapsed_ms;
        assert_eq!(*p, expected);
    }
    let control = parsed.iter().find(|r| r.status == "mismatch").unwrap();
    assert_eq!(control.id, "deliberate-mismatch-selftest");
    assert_eq!(control.mismatch.as_ref().unwrap().n, 2);
}

#[test]
fn exit_codes() {
    let control = qplab(&["verify", "--id", "deliberate-mismatch-selftest"]);
    assert_eq!(control.status.code(), Some(1));
    assert!(stdout(&control).contains("first mismatch at n=2"));

    let unknown = qplab(&["verify", "--id", "nosuch"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("nosuch"));

    for bad in [
        &["verify", "--id", "euler", "--order", "0"][..],
        &["verify", "--id", "euler", "--order", "ten"],
        &["verify"],
        &["coeffs", "--target", "zeta"],
        &["coeffs", "--target", "family:Z"],
        &["coeffs", "--target", "rational:1/1*2"],
        &["enum", "--family", "Q", "--n", "3"],
        &["enum", "--family", "E", "--n", "31"],
    ] {
        assert_eq!(qplab(bad).status.code(), Some(2), "{bad:?}");
    }
    let env = qplab_env(&["verify", "--id", "euler"], Some("many"));
    assert_eq!(env.status.code(), Some(2));
}

#[test]
fn coefficient_examples() {
    let cases = [
        (&["--target", "omega", "--order", "5"][..], "1,2,3,4,6,8"),
        (
            &["--target", "family:A:signed", "--order", "8"],
            "0,1,2,3,4,5,6,7,8",
        ),
        (&["--target", "theta", "--order", "4"], "1,2,0,0,2"),
        (&["--target", "theta-alt", "--order", "4"], "1,-2,0,0,2"),
        (
            &["--target", "rational:0,1/1-1^2", "--order", "4"],
            "0,1,2,3,4",
        ),
    ];
    for (args, expected) in cases {
        let mut full = vec!["coeffs"];
        full.extend_from_slice(args);
        let o = qplab(&full);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), expected, "{args:?}");
    }
}

#[test]
fn csv_and_json_tables() {
    let o = qplab(&["coeffs", "--target", "psi", "--order", "3", "--csv"]);
    assert_eq!(stdout(&o), "n,coefficient\n0,0\n1,1\n2,1\n3,1\n");
    let o = qplab(&["coeffs", "--target", "omega", "--order", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["target"], "omega");
    assert_eq!(v["order"], 3);
    assert_eq!(v["coefficients"], serde_json::json!(["1", "2", "3", "4"]));
}

#[test]
fn family_coefficients_match_the_template() {
    for family in Family::ALL {
        for signed in [false, true] {
            let target = format!(
                "family:{}{}",
                family.id(),
                if signed { ":signed" } else { "" }
            );
            let o = qplab(&["coeffs", "--target", &target, "--order", "30"]);
            let expected: Vec<String> = family
                .generating_function(signed)
                .expand(30)
                .unwrap()
                .coeffs()
                .iter()
                .map(ToString::to_string)
                .collect();
            assert_eq!(stdout(&o).trim(), expected.join(","), "{target}");
        }
    }
}

#[test]
fn enumerate_examples() {
    let o = qplab(&["enum", "--family", "E", "--n", "4", "--list", "--stats"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("count: 6"));
    for part in ["4b", "3b+1b", "3b+1g", "3g+1b", "3g+1g", "2b+1b+1g"] {
        assert!(text.lines().any(|l| l.trim() == part), "{part}");
    }
    for stat in ["E_0 = 4", "E_1 = 2", "E_2 = 4", "E_3 = 2"] {
        assert!(text.contains(stat), "{stat}");
    }
    let o = qplab(&["enum", "--family", "A", "--n", "0"]);
    assert!(stdout(&o).contains("count: 0"));
}

#[test]
fn max_order_caps_requests() {
    let o = qplab_env(&["coeffs", "--target", "omega", "--order", "50"], Some("5"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1,2,3,4,6,8");
    assert!(stderr(&o).contains("capped"));

    let o = qplab_env(&["verify", "--id", "euler", "--json"], Some("10"));
    let r: ReportJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.order, 10);

    let o = qplab_env(&["enum", "--family", "E", "--n", "12"], Some("10"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn show_prints_both_recipes() {
    let o = qplab(&["show", "--id", "euler"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("lhs:") && text.contains("rhs:"));
    let o = qplab(&["list"]);
    assert_eq!(stdout(&o).lines().count(), list_identities().len());
}
