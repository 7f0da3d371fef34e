use std::process::Command;

use gap_cli::gen::horner_from_strings;
use gauss_appell::rational::{format_rational, parse_rational};
use proptest::prelude::*;

fn run(argv: &[&str]) -> String {
    let mut buf = Vec::new();
    let ok = gap_cli::run_args(argv.iter().copied(), &mut buf)
        .unwrap_or_else(|e| panic!("{argv:?}: {e:#}"));
    assert!(ok, "{argv:?} reported failures");
    String::from_utf8(buf).unwrap()
}

fn run_err(argv: &[&str]) -> String {
    let mut buf = Vec::new();
    format!(
        "{:#}",
        gap_cli::run_args(argv.iter().copied(), &mut buf).unwrap_err()
    )
}

fn bin(argv: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_gap"))
        .args(argv)
        .output()
        .unwrap()
}

fn coeffs(line: &str) -> Vec<String> {
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn gen_concrete_rows() {
    let out = run(&[
        "gen",
        "--family",
        "bernoulli",
        "--a",
        "3",
        "--b",
        "1",
        "--c",
        "7",
        "--n",
        "2",
    ]);
    assert_eq!(
        out,
        "{\"family\":\"bernoulli\",\"convention\":null,\"params\":{\"a\":\"3\",\"b\":\"1\",\"c\":\"7\"},\"n\":2,\"coeffs\":[\"1/6\",\"-3/7\",\"3/7\"]}\n"
    );
    let out = run(&[
        "gen", "--family", "hermite", "--a", "1", "--b", "1", "--c", "1", "--n", "0",
    ]);
    assert_eq!(coeffs(out.trim()), vec!["1"]);
}

#[test]
fn gen_records_euler_convention() {
    let out = run(&["gen", "--family", "euler", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["convention"], "integer");
    assert_eq!(coeffs(out.trim()), vec!["-1", "0", "1"]);
    let out = run(&[
        "gen",
        "--family",
        "euler",
        "--euler-convention",
        "series",
        "--n",
        "1",
    ]);
    assert_eq!(coeffs(out.trim()), vec!["-1/2", "1"]);
}

#[test]
fn gen_symbolic_genocchi() {
    let out = run(&["gen", "--family", "genocchi", "--n", "0..4"]);
    let rows: Vec<Vec<String>> = out.lines().map(coeffs).collect();
    assert_eq!(rows[0], vec!["0"]);
    assert_eq!(rows[2], vec!["-1", "2", "0"]);
    assert_eq!(rows[4], vec!["1", "0", "-6", "4", "0"]);
}

#[test]
fn gen_csv_and_latex() {
    let csv = run(&[
        "gen", "--a", "3", "--b", "1", "--c", "7", "--n", "1,2", "--format", "csv",
    ]);
    assert_eq!(
        csv,
        "n,k,coeff\n1,0,-1/2\n1,1,3/7\n2,0,1/6\n2,1,-3/7\n2,2,3/7\n"
    );
    let tex = run(&["gen", "--n", "2", "--format", "latex"]);
    assert_eq!(
        tex.trim(),
        "{}_{2}F_{1}B_{2}(a,b;c;x) = \\frac{1}{6} - \\frac{ab}{c}x + \\frac{(a)_{2}(b)_{2}}{(c)_{2}}x^{2}"
    );
}

#[test]
fn gen_rejects_bad_input() {
    assert!(run_err(&["gen", "--a", "1", "--b", "1", "--c", "-2", "--n", "4"]).contains("c=-2"));
    assert!(run_err(&["gen", "--family", "laguerre"]).contains("laguerre"));
    assert!(run_err(&["gen", "--a", "1", "--n", "1"]).contains("none of them"));
    assert!(run_err(&["gen", "--n", "0..4", "--order", "5"]).contains("--order"));
    assert!(run_err(&["gen", "--family", "custom"]).contains("--custom"));
}

#[test]
fn custom_family() {
    let out = run(&[
        "gen", "--family", "custom", "--custom", "2,1/3", "--a", "1", "--b", "1", "--c", "1",
        "--n", "2",
    ]);
    assert_eq!(coeffs(out.trim()), vec!["0", "2/3", "4"]);
}

#[test]
fn eval_examples() {
    let b2 = [
        "eval",
        "--family",
        "bernoulli",
        "--a",
        "3",
        "--b",
        "1",
        "--c",
        "7",
        "--n",
        "2",
    ];
    assert_eq!(run(&[&b2[..], &["--x", "0"]].concat()), "1/6\n");
    assert_eq!(run(&[&b2[..], &["--x", "1"]].concat()), "1/6\n");
    assert_eq!(
        run(&[
            "eval", "--family", "genocchi", "--a", "3", "--b", "1", "--c", "7", "--n", "0", "--x",
            "-5/2"
        ]),
        "0\n"
    );
    assert!(run_err(&["eval", "--n", "2", "--x", "1"]).contains("--a"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gen_then_eval_round_trip(
        fam in prop::sample::select(vec!["bernoulli", "euler", "genocchi", "hermite"]),
        a in -9i64..10, b in -9i64..10, c in 1i64..9, n in 0usize..9,
        xn in -20i64..21, xd in 1i64..7,
    ) {
        let (a, b, c, n, x) = (a.to_string(), b.to_string(), c.to_string(), n.to_string(), format!("{xn}/{xd}"));
        let base = ["--family", fam, "--a", &a, "--b", &b, "--c", &c, "--n", &n];
        let line = run(&[&["gen"][..], &base].concat());
        let value = horner_from_strings(&coeffs(line.trim()), &parse_rational(&x).unwrap()).unwrap();
        let printed = run(&[&["eval"][..], &base, &["--x", &x]].concat());
        prop_assert_eq!(printed, format!("{}\n", format_rational(&value)));
    }
}

#[test]
fn numbers_output() {
    assert_eq!(
        run(&["numbers", "--family", "bernoulli", "--order", "4"]),
        "family: bernoulli\nA: 1,-1/2,1/6,0,-1/30\nbeta: -1/2,-1/12,0,1/120,0\n"
    );
    let e = run(&[
        "numbers",
        "--family",
        "euler",
        "--convention",
        "integer",
        "--order",
        "4",
    ]);
    assert!(e.contains("A: 1,0,-1,0,5\n"));
    let g = run(&["numbers", "--family", "genocchi", "--order", "4"]);
    assert!(g.ends_with("A: 0,1,-1,0,1\nbeta: undefined (A_0=0)\n"));
    let j: serde_json::Value = serde_json::from_str(&run(&[
        "numbers", "--family", "genocchi", "--order", "2", "--format", "json",
    ]))
    .unwrap();
    assert!(j["beta"].is_null());
    assert_eq!(j["A"][1], "1");
}

#[test]
fn plot_csv_and_svg() {
    let base = [
        "plot",
        "--family",
        "bernoulli",
        "--a",
        "3",
        "--b",
        "1",
        "--c",
        "7",
        "--n",
        "2",
        "--xmin",
        "-1",
        "--xmax",
        "1",
    ];
    let csv = run(&[&base[..], &["--samples", "201", "--format", "csv"]].concat());
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "x,y");
    assert_eq!(rows.len(), 202);
    assert_eq!(rows[101], "0,0.166666666667");
    assert_eq!(rows[201], "1,0.166666666667");
    let svg = run(&[&base[..], &["--samples", "11", "--format", "svg"]].concat());
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(">bernoulli n=2 (a,b;c)=(3,1;7)</text>"));
    assert_eq!(svg.matches("<polyline").count(), 1);
    assert_eq!(svg.trim_end().lines().last(), Some("</svg>"));
}

#[test]
fn plot_preconditions() {
    let base = ["plot", "--a", "3", "--b", "1", "--c", "7", "--n", "2"];
    assert!(run_err(&[&base[..], &["--samples", "1"]].concat()).contains("--samples"));
    assert!(run_err(&[&base[..], &["--xmin", "1", "--xmax", "1"]].concat()).contains("--xmin"));
    assert!(run_err(&[&base[..], &["--format", "json"]].concat()).contains("csv|svg"));
}

#[test]
fn verify_report_shape() {
    let out = run(&[
        "verify", "--suite", "odes", "--family", "euler", "--nmax", "4", "--trials", "2",
    ]);
    let recs: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(recs[0]["record"], "header");
    assert_eq!(recs[0]["seed"], 42);
    let last = recs.last().unwrap();
    assert_eq!(last["record"], "summary");
    assert_eq!(last["failed"], 0);
    assert_eq!(last["checks"], 2 * 5 * 2);
    let checks = &recs[1..recs.len() - 1];
    let key = |r: &serde_json::Value| (r["n"].as_u64().unwrap(), r["trial"].as_u64().unwrap());
    assert!(checks.windows(2).all(|w| key(&w[0]) <= key(&w[1])));
    let ode_u = checks
        .iter()
        .find(|r| r["check"] == "ode_u" && r["n"] == 3)
        .unwrap();
    assert_eq!(ode_u["residuals"]["corrected_constant"], "n+1");
    assert_eq!(ode_u["residuals"]["corrected_residual_is_zero"], true);
    assert_eq!(ode_u["residuals"]["printed_residual_is_zero"], false);
    let ode_v = checks.iter().find(|r| r["check"] == "ode_v").unwrap();
    assert_eq!(ode_v["residuals"]["printed_residual_is_zero"], true);
}

#[test]
fn verify_genocchi_skips_beta_suites() {
    let out = bin(&[
        "verify", "--suite", "all", "--family", "genocchi", "--nmax", "6",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let recs: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let skipped: Vec<&str> = recs
        .iter()
        .filter(|r| r["status"] == "skip")
        .map(|r| r["suite"].as_str().unwrap())
        .collect();
    assert_eq!(
        skipped,
        vec![
            "recurrence",
            "lemma1",
            "lemma1",
            "odes",
            "odes",
            "pdes",
            "pdes"
        ]
    );
    for suite in ["expansion", "shift", "summation"] {
        assert!(recs
            .iter()
            .any(|r| r["suite"] == suite && r["status"] == "pass"));
    }
}

#[test]
fn verify_with_explicit_params() {
    let out = run(&[
        "verify",
        "--suite",
        "recurrence",
        "--a",
        "3",
        "--b",
        "1",
        "--c",
        "7",
        "--nmax",
        "6",
    ]);
    let header: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(header["trials"], 1);
    assert_eq!(header["params"][0]["c"], "7");
}

#[test]
fn binary_exit_codes_and_out_file() {
    assert_eq!(bin(&["gen", "--family", "nope"]).status.code(), Some(2));
    let path = std::env::temp_dir().join(format!("gap-out-{}.jsonl", std::process::id()));
    let out = bin(&[
        "gen",
        "--n",
        "1",
        "--a",
        "3",
        "--b",
        "1",
        "--c",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(coeffs(written.trim()), vec!["-1/2", "3/7"]);
}

#[test]
fn repeated_runs_are_identical() {
    let argv = [
        "plot", "--family", "euler", "--a", "3", "--b", "1", "--c", "7", "--n", "3", "--format",
        "svg",
    ];
    assert_eq!(run(&argv), run(&argv));
    let argv = [
        "gen", "--family", "hermite", "--n", "0..6", "--format", "latex",
    ];
    assert_eq!(run(&argv), run(&argv));
}
