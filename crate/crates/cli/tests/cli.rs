use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ugap").chain(args.iter().copied());
    let code = ugap_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    assert!(err.is_empty(), "stderr: {err}");
    (code, serde_json::from_str(&out).expect("one JSON document"))
}

#[test]
fn certify_n4() {
    let (code, doc) = json(&["gap", "certify", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["exit_code"], 0);
    let out = &doc["output"];
    assert_eq!(out["delta"], "1/2");
    assert_eq!(out["gamma_analytic"], "3/10");
    assert_eq!(out["verdict"], true);
    assert_eq!(out["enumeration"]["max_value"], "3/10");
}

#[test]
fn certify_n4_golden() {
    let (_, doc) = json(&["gap", "certify", "--n", "4", "--weight-cap", "12", "--d-cap", "12"]);
    let golden: Value =
        serde_json::from_str(include_str!("golden/gap_certify_n4.json")).unwrap();
    assert_eq!(doc, golden);
}

#[test]
fn schur_examples() {
    let (code, doc) = json(&["schur", "dim", "--lambda", "2,1", "--vars", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["output"]["count"], "8");
    assert_eq!(doc["output"]["agree"], true);

    let (code, doc) = json(&["schur", "skew", "--outer", "2,1", "--inner", "1", "--vars", "3"]);
    assert_eq!(code, 0);
    // s_{21/1} = h_1^2
    assert_eq!(doc["output"]["count"], "9");
}

#[test]
fn spectrum_examples() {
    let (_, doc) = json(&["spectrum", "eval", "--spec", "mu(2,4)", "--sig", "lambda=1;d=0"]);
    assert_eq!(doc["output"]["value"], "1/2");
    let (_, doc) = json(&["spectrum", "eval", "--spec", "mu(2,4)", "--sig", "lambda=2;d=0"]);
    assert_eq!(doc["output"]["value"], "3/10");
    let (_, doc) = json(&["spectrum", "eval", "--spec", "nu(4)", "--sig", "0,0,0,-1"]);
    assert_eq!(doc["output"]["value"], "1/2");
    let (_, doc) = json(&[
        "spectrum",
        "eval",
        "--spec",
        "prod(haar(2), dirac(3))",
        "--sig",
        "1,0|1,0,0",
    ]);
    assert_eq!(doc["output"]["value"], "0/1");
}

#[test]
fn table_is_newline_delimited() {
    let (code, out, _) = run(&["gap", "table", "--n-from", "4", "--n-to", "9"]);
    assert_eq!(code, 0);
    let rows: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0]["output"]["gamma_analytic"], "3/10");
    assert_eq!(rows[1]["output"]["gamma_analytic"], "3/10");
    assert_eq!(rows[2]["output"]["gamma_analytic"], "2/7");
    assert!(rows.iter().all(|r| r["output"]["verdict"] == true));
}

#[test]
fn usage_errors_exit_two() {
    let (code, out, err) = run(&["gap", "certify", "--bogus"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("Usage"));

    let (code, _, err) = run(&["gap", "certify", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("n > 3"));

    let (code, _, _) = run(&["spectrum", "eval", "--spec", "mu(5,4)", "--sig", "lambda=1;d=0"]);
    assert_eq!(code, 2);

    let (code, _, err) = run(&["mc", "moments", "--d", "2", "--p", "2", "--samples", "1000"]);
    assert_eq!(code, 2);
    assert!(err.contains("--seed"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("gap"));
}

#[test]
fn peak_plan_small() {
    let (code, doc) = json(&["peak", "plan", "--dims", "5", "--epsilon", "1/10"]);
    assert_eq!(code, 0);
    let out = &doc["output"];
    assert_eq!(out["audit"]["ok"], true);
    assert_eq!(out["verification"]["ok"], true);
    assert_eq!(out["target_set"].as_array().unwrap().len(), 1);
}

#[test]
fn monte_carlo_threads_do_not_change_output() {
    let args = ["mc", "moments", "--d", "3", "--p", "4", "--samples", "20000", "--seed", "42"];
    let (_, a) = json(&args);
    let mut serial = vec!["--threads", "1"];
    serial.extend_from_slice(&args);
    let (_, b) = json(&serial);
    assert_eq!(a["output"], b["output"]);
    assert_eq!(a["output"]["exact"], 2.0);
}

#[test]
fn monte_carlo_documents() {
    let (code, doc) = json(&["mc", "psi2", "--d", "4", "--samples", "20000", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(doc["output"]["estimate"].as_f64().unwrap() < 0.8);

    let (_, doc) = json(&[
        "mc", "khintchine", "--p", "4", "--dims", "3,3", "--trials", "4", "--samples", "5000",
        "--seed", "1",
    ]);
    assert!(doc["output"]["moment_ratio"]["estimate"].as_f64().unwrap() > 1.0);

    let (_, doc) = json(&[
        "mc", "tail", "--d", "1", "--delta", "0.5", "--samples", "20000", "--seed", "3",
    ]);
    assert_eq!(doc["output"]["exact_in_interval"], true);

    let (_, doc) = json(&["mc", "subgaussian", "--d", "2", "--samples", "20000", "--seed", "5"]);
    assert!(doc["output"]["rows"].as_array().unwrap().len() > 1);
}

#[test]
fn floats_carry_seventeen_digits() {
    let (_, out, _) = run(&["spectrum", "eval", "--spec", "mu(1,3)", "--sig", "lambda=1;d=0"]);
    assert!(out.contains("\"value_float\":6.6666666666666663e-1"), "{out}");
}
