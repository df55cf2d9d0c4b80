use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_tuttekit");

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn pencil_coloop_by_every_method() {
    let input = data("pencil_coloop.json");
    for method in ["auto", "subset", "delcon", "activity", "finite-field"] {
        let out = stdout_ok(&["tutte", "--input", &input, "--method", method]);
        assert_eq!(out, "x^3 + x^2 + x*y\n", "method {method}");
    }
    assert_eq!(
        stdout_ok(&["char", "--input", &input]),
        "q^3 - 4*q^2 + 5*q - 2\n"
    );
}

#[test]
fn coboundary_profiles() {
    let out = stdout_ok(&[
        "coboundary",
        "--input",
        &data("pencil_coloop.json"),
        "--method",
        "finite-field",
        "--profiles",
    ]);
    assert!(out.lines().any(|l| l == "5,48,60,12,4,1"), "{out}");
}

#[test]
fn affine_and_degenerate_inputs() {
    let inv = stdout_ok(&["invariants", "--input", &data("affine_lines.json")]);
    assert!(inv.contains("regions: 10\n"), "{inv}");
    assert!(inv.contains("bounded_regions: 2\n"), "{inv}");
    assert_eq!(stdout_ok(&["tutte", "--input", &data("empty.json")]), "1\n");
    assert_eq!(
        stdout_ok(&["tutte", "--input", &data("with_loop.json")]),
        "x^2*y\n"
    );
}

#[test]
fn structured_output_is_json() {
    let out = stdout_ok(&[
        "tutte",
        "--input",
        &data("pencil_coloop.json"),
        "--format",
        "structured",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["quantity"], "tutte");
    assert_eq!(v["rank"], 3);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["polynomial"], "x^3 + x^2 + x*y");
}

#[test]
fn families_and_graphs() {
    assert_eq!(
        stdout_ok(&["family", "braid", "--n", "3", "char"]),
        "q^3 - 3*q^2 + 2*q\n"
    );
    assert_eq!(
        stdout_ok(&["family", "graphical", "--graph", &data("k4.edges"), "char"]),
        "q^4 - 6*q^3 + 11*q^2 - 6*q\n"
    );
    let oracle = stdout_ok(&["family", "shi", "--n", "3", "oracle"]);
    assert!(
        oracle.contains("characteristic: q^3 - 6*q^2 + 9*q\n"),
        "{oracle}"
    );
}

#[test]
fn arithmetic_and_toric() {
    assert_eq!(
        stdout_ok(&["arith", "tutte", "--input", &data("tilted_square.txt")]),
        "x^2 + 1\n"
    );
    let z = stdout_ok(&["arith", "zonotope", "--input", &data("rectangle.txt")]);
    assert!(z.contains("2*q^2 + 3*q + 1"), "{z}");
    let t = stdout_ok(&["toric", "--input", &data("tilted_square.txt"), "--q", "4"]);
    assert!(t.contains("profile: 4,10,4,2\n"), "{t}");
    assert!(t.contains("identity: holds\n"), "{t}");
}

#[test]
fn check_suite_passes() {
    let out = stdout_ok(&["check", "--input", &data("pencil_coloop.json")]);
    assert!(out.ends_with("0 failed\n"), "{out}");
    let out = stdout_ok(&["check", "--vectors", &data("tilted_square.txt")]);
    assert!(out.ends_with("0 failed\n"), "{out}");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: Vec<Vec<String>> = vec![
        vec!["poset".into(), "--input".into(), data("pencil_coloop.json")],
        vec![
            "coboundary".into(),
            "--input".into(),
            data("affine_lines.json"),
            "--format".into(),
            "structured".into(),
        ],
        vec![
            "family".into(),
            "catalan".into(),
            "--n".into(),
            "3".into(),
            "coboundary".into(),
        ],
        vec![
            "family".into(),
            "graphical".into(),
            "--graph".into(),
            data("hexagon.edges"),
            "tutte".into(),
            "--method".into(),
            "delcon".into(),
        ],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let missing = run(&["tutte", "--input", "/nonexistent/arrangement.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error: "));

    let bad_flag = run(&[
        "tutte",
        "--input",
        &data("pencil_coloop.json"),
        "--method",
        "bogus",
    ]);
    assert_eq!(bad_flag.status.code(), Some(1));

    // 2^40 subsets is over the default budget
    let budget = run(&[
        "family",
        "coordinate",
        "--n",
        "40",
        "tutte",
        "--method",
        "subset",
        "--budget",
        "1000",
    ]);
    assert_eq!(
        budget.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&budget.stderr)
    );
}
