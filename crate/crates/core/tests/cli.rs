use density_crt::cli::{run, Report, Status};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dcrt").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn invoke_json(args: &[&str]) -> (i32, Report) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, _) = invoke(&full);
    let report: Report = serde_json::from_str(out.trim()).expect("one JSON record");
    (code, report)
}

#[test]
fn solve_prints_the_class() {
    let (code, out, _) = invoke(&["solve", "2:3", "3:5"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "x ≡ 8 (mod 15)");
}

#[test]
fn solve_without_solution_exits_one() {
    let (code, out, _) = invoke(&["solve", "0:4", "1:6"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "no solution");
    let (code, r) = invoke_json(&["solve", "0:4", "1:6"]);
    assert_eq!(code, 1);
    assert_eq!(r.status, Status::NoSolution);
    assert_eq!(r.modulus, Some(12));
}

#[test]
fn solve_accepts_negative_residues() {
    let (code, r) = invoke_json(&["solve", "-1:5", "0:3"]);
    assert_eq!(code, 0);
    assert_eq!((r.residue, r.modulus), (Some(9), Some(15)));
}

#[test]
fn count_with_enumeration() {
    let (code, r) = invoke_json(&[
        "count",
        "--m",
        "6",
        "--a",
        "{1,4}",
        "--n",
        "10",
        "--b",
        "3+3",
        "--enumerate",
    ]);
    assert_eq!(code, 0);
    let sols = r.solutions.unwrap();
    assert_eq!(sols.len() as u64, r.count.unwrap());
    assert_eq!(r.modulus, Some(30));
    for x in &sols {
        assert!([1, 4].contains(&(x % 6)) && (3..6).contains(&(x % 10)));
    }
}

#[test]
fn count_respects_enumeration_cap() {
    let (code, _, err) = invoke(&[
        "count",
        "--m",
        "1000",
        "--a",
        "{1}",
        "--n",
        "1001",
        "--b",
        "{1}",
        "--enumerate",
        "--cap",
        "50",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "{err}");
    let (code, out, _) = invoke(&[
        "count", "--m", "1000", "--a", "{1}", "--n", "1001", "--b", "{1}",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("count = 1 "), "{out}");
}

#[test]
fn bound_modes() {
    let (code, r) = invoke_json(&[
        "bound", "--mode", "interval", "--m", "3", "--n", "6", "--size-a", "1", "--size-b", "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.bound, Some(0));
    assert_eq!(r.guaranteed, Some(false));

    let (code, r) = invoke_json(&[
        "bound",
        "--mode",
        "arbitrary",
        "--m",
        "4",
        "--n",
        "6",
        "--size-a",
        "4",
        "--size-b",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.bound, Some(12));
    assert_eq!(r.case.as_deref(), Some("overlap"));

    let (code, _, err) = invoke(&[
        "bound",
        "--mode",
        "arbitrary",
        "--m",
        "4",
        "--n",
        "6",
        "--size-a",
        "5",
        "--size-b",
        "0",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("exceeds"));
}

#[test]
fn extremal_reports_profiles() {
    let (code, r) = invoke_json(&[
        "extremal", "--size-a", "5", "--cap-a", "2", "--size-b", "5", "--cap-b", "3", "--length",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.profile_a, Some(vec![0, 1, 2, 2]));
    assert_eq!(r.profile_b, Some(vec![0, 0, 2, 3]));
    assert_eq!(r.bound, Some(2));
    assert_eq!(r.case.as_deref(), Some("boundary"));

    let (code, r) = invoke_json(&[
        "extremal", "--size-a", "9", "--cap-a", "2", "--size-b", "0", "--cap-b", "3", "--length",
        "4",
    ]);
    assert_eq!(code, 1);
    assert_eq!(r.status, Status::NoSolution);
}

#[test]
fn tightness_reports_zero_count() {
    let (code, out, _) = invoke(&["tightness", "--M", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("m = 3, n = 6"), "{out}");
    assert!(out.contains("count = 0"), "{out}");
    let (code, r) = invoke_json(&["tightness", "--M", "1"]);
    assert_eq!(code, 0);
    assert_eq!((r.m, r.n, r.count), (Some(3), Some(6), Some(0)));
    let a = r.interval_a.unwrap();
    let b = r.interval_b.unwrap();
    assert_eq!((a.modulus, a.start, a.length), (3, 0, 1));
    assert_eq!((b.modulus, b.start, b.length), (6, 1, 2));
}

#[test]
fn runner_prints_witness() {
    let (code, out, _) = invoke(&["runner", "--speeds", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "t = 1/3, distances 1/3, 1/3");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["runner", "--speeds", "1,1"][..],
        &["runner", "--speeds", "1,2,3"],
        &["runner", "--speeds", "x,2"],
        &["solve", "2-3"],
        &["solve"],
        &[
            "count", "--m", "5", "--a", "{1,6}", "--n", "3", "--b", "{0}",
        ],
        &["count", "--m", "5", "--a", "0+9", "--n", "3", "--b", "{0}"],
        &["bogus"],
        &[],
    ] {
        let (code, out, err) = invoke(args);
        assert_eq!(code, 2, "{args:?}: {out} {err}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn overflow_exits_two() {
    let big = (u64::MAX / 2).to_string();
    let (code, _, err) = invoke(&["runner", "--speeds", &format!("{big},3")]);
    assert_eq!(code, 2);
    assert!(err.contains("overflow"), "{err}");
    let (code, r) = invoke_json(&["runner", "--speeds", &format!("{big},3")]);
    assert_eq!(code, 2);
    assert_eq!(r.status, Status::Error);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("tightness"));
}

#[test]
fn json_round_trips() {
    let cases: &[&[&str]] = &[
        &["solve", "2:3", "3:5"],
        &["tightness", "--M", "7"],
        &["runner", "--speeds", "4,9"],
        &[
            "extremal", "--size-a", "7", "--cap-a", "3", "--size-b", "2", "--cap-b", "2",
            "--length", "4",
        ],
        &[
            "count",
            "--m",
            "12",
            "--a",
            "{1,5,7,11}",
            "--n",
            "8",
            "--b",
            "6+5",
            "--enumerate",
        ],
    ];
    for args in cases {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let (_, out, _) = invoke(&full);
        let report: Report = serde_json::from_str(out.trim()).unwrap();
        let again = serde_json::to_string(&report).unwrap();
        assert_eq!(again, out.trim());
        let value: serde_json::Value = serde_json::from_str(&again).unwrap();
        assert_eq!(value["status"], "ok");
    }
}
