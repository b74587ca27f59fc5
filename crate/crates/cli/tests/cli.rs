use proptest::prelude::*;
use qonsager_cli::expr::{eval, free, parse, Target, Value};
use qonsager_cli::{run, EXIT_CAPACITY, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use std::process::Command;

fn qons(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qons").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn dims_table() {
    let (code, out, _) = qons(&["dims", "--max", "5"]);
    assert_eq!(code, EXIT_OK);
    let normal: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(normal, ["1", "2", "4", "8", "14", "24"]);
}

#[test]
fn normalize_examples() {
    let (code, out, _) = qons(&["normalize", "--mode", "pbw", "--expr", "B1*B0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "q^2*B0*B1 + q^2*B(1,d)");
    let (_, out, _) = qons(&["normalize", "--mode", "pbw", "--expr", "[B(1,d), B0]"]);
    assert_eq!(out.trim(), "(c*q + c*q^-1)*B(1,a0) + (-c*q - c*q^-1)*B1");
    let (_, out, _) = qons(&["expand", "--expr", "B(1,d)"]);
    assert_eq!(out.trim(), "-B0*B1 + q^-2*B1*B0");
    // the first defining relation normalizes to zero
    let rel = "B0^3*B1 - [3]q*B0^2*B1*B0 + [3]q*B0*B1*B0^2 - B1*B0^3 + q*c*[2]q^2*[B0, B1]";
    let (_, out, _) = qons(&["normalize", "--mode", "free", "--expr", rel]);
    assert_eq!(out.trim(), "0");
}

#[test]
fn pbw_target_handles_morphisms() {
    let e = parse("T0(B1)").unwrap();
    let Value::Pbw(x) = eval(&e, Target::Pbw).unwrap() else { panic!() };
    assert_eq!(x.to_string(), "B(1,a0)");
}

#[test]
fn exit_codes() {
    assert_eq!(qons(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    assert_eq!(qons(&["dims"]).0, EXIT_USAGE);
    let (code, _, err) = qons(&["expand", "--expr", "B0 + * B1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("byte 5"), "{err}");
    assert_eq!(qons(&["--help"]).0, EXIT_OK);
    let good = ["check", "--lhs", "[B(1,d), B0]", "--rhs", "c*[2]q*(B(1,a0) - B1)"];
    assert_eq!(qons(&good).0, EXIT_OK);
    // mutated coefficient
    let bad = ["check", "--lhs", "[B(1,d), B0]", "--rhs", "c*[2]q*(B(1,a0) - q*B1)"];
    assert_eq!(qons(&bad).0, EXIT_FAILURE);
    let (code, _, err) = qons(&["normalize", "--mode", "free", "--expr", "B0^6", "--bound", "4"]);
    assert_eq!(code, EXIT_CAPACITY);
    assert!(err.contains("bound"));
    assert_eq!(qons(&["verify", "--suite", "braid-translates", "--bound", "8"]).0, EXIT_CAPACITY);
    assert_eq!(qons(&["verify", "--suite", "imaginary-commute", "--bound", "10"]).0, EXIT_OK);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_qons");
    let out = Command::new(bin).args(["dims", "--max", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(out.stdout).unwrap().contains("3\t8\t8"));
    let out = Command::new(bin).args(["verify", "--suite"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}

#[test]
fn imaginary_suite_report() {
    let (code, out, _) = qons(&["--no-timing", "verify", "--suite", "imaginary-commute", "--bound", "10", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let items = v["items"].as_array().unwrap();
    assert!(items.iter().any(|i| i["params"] == "n=3,m=2" && i["status"] == "pass"));
    for key in ["identity", "params", "degree", "status", "millis"] {
        assert!(items[0].get(key).is_some(), "{key}");
    }
}

#[test]
fn cache_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("qons-cli-{}", std::process::id()));
    let path = dir.join("sys.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = qons(&["complete", "--bound", "6", "--cache", p]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(path.exists());
    let (code, out, _) = qons(&["normalize", "--mode", "free", "--expr", "B0^3*B1", "--bound", "6", "--cache", p]);
    assert_eq!(code, EXIT_OK);
    assert!(!out.contains("B0^3*B1"), "{out}");
    std::fs::write(&path, "{}").unwrap();
    assert_eq!(qons(&["dims", "--max", "3", "--cache", p]).0, EXIT_USAGE);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn golden_report_and_determinism() {
    let golden = include_str!("golden/verify_all_b10.json");
    let (code, one, _) = qons(&["--no-timing", "verify", "--suite", "all", "--bound", "10", "--json", "--jobs", "1"]);
    assert_eq!(code, EXIT_CAPACITY);
    assert_eq!(one, golden);
    let (_, four, _) = qons(&["--no-timing", "verify", "--suite", "all", "--bound", "10", "--json", "--jobs", "4"]);
    assert_eq!(one, four);
}

fn expr_text() -> impl Strategy<Value = String> {
    let leaf = prop::sample::select(vec![
        "B0", "B1", "B(1,d)", "B(2,d)", "B(1,a0)", "B(1,a1)", "B(-1,a0)", "q", "c", "[2]q", "q^-2", "3",
    ])
    .prop_map(String::from);
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}*{b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("[{a}, {b}]")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("[{a}, {b}; q^2]")),
            inner.prop_map(|a| format!("Phi({a})")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_parse_round_trip(s in expr_text()) {
        let x = free(&s).unwrap();
        prop_assert_eq!(free(&x.to_string()).unwrap(), x);
        let Value::Pbw(p) = eval(&parse(&s).unwrap(), Target::Pbw).unwrap() else { unreachable!() };
        let Value::Pbw(back) = eval(&parse(&p.to_string()).unwrap(), Target::Pbw).unwrap() else { unreachable!() };
        prop_assert_eq!(back, p);
    }
}
