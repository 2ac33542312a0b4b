use std::process::Command;

use serde_json::Value;

struct Run {
    status: i32,
    stdout: String,
    stderr: String,
}

fn spectral(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_spectral"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        status: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json_ok(args: &[&str]) -> Value {
    let run = spectral(args);
    assert_eq!(run.status, 0, "{args:?}: {}", run.stderr);
    assert!(run.stderr.is_empty());
    serde_json::from_str(&run.stdout).expect("stdout is JSON")
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect()
}

#[test]
fn decide_reports_cycle() {
    let doc = json_ok(&[
        "spectrum", "decide", "--n", "4", "--digits", "0,1", "--s", "0,6",
    ]);
    assert_eq!(doc["result"]["verdict"], "NotSpectral");
    assert_eq!(doc["result"]["cycle"], serde_json::json!([[2, 6]]));
    assert!(doc["result"]["provenance"].is_string());

    let doc = json_ok(&[
        "spectrum", "decide", "--n", "4", "--digits", "0,1", "--s", "0,2",
    ]);
    assert_eq!(doc["result"]["verdict"], "Spectral");
    assert_eq!(
        doc["result"]["searched"]["bounds"],
        serde_json::json!(["0", "2/3"])
    );
}

#[test]
fn search_lists_candidates_in_order() {
    let doc = json_ok(&["compat", "search", "--n", "6", "--digits", "0,1,2"]);
    let sets: Vec<Vec<i64>> = doc["result"]["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(ints)
        .collect();
    assert_eq!(
        sets,
        vec![
            vec![-4, -2, 0],
            vec![-4, 0, 4],
            vec![-2, 0, 2],
            vec![0, 2, 4]
        ]
    );
    assert_eq!(doc["result"]["count"], 4);

    let doc = json_ok(&["compat", "search", "--n", "3", "--digits", "0,2"]);
    assert_eq!(doc["result"]["candidates"], serde_json::json!([]));
}

#[test]
fn construct_reports_full_record() {
    let doc = json_ok(&["tiling", "construct", "--n", "6", "--digits", "0,1,2,3,4,5"]);
    let r = &doc["result"];
    assert_eq!(ints(&r["s"]), vec![0, 2, 3, 4, 5, 7]);
    assert_eq!(r["p"]["prime"], 2);
    assert_eq!(r["q"]["prime"], 3);
    assert_eq!(
        r["e"],
        serde_json::json!(["0", "1/3", "1/2", "2/3", "5/6", "7/6"])
    );
    assert_eq!(r["modulus_l"], 6);
}

#[test]
#[allow(clippy::approx_constant)]
fn other_subcommands() {
    let doc = json_ok(&[
        "compat",
        "check",
        "--n",
        "5",
        "--digits",
        "0,2,-2,11,-11",
        "--s",
        "0,1,-1,2,-2",
    ]);
    assert_eq!(doc["result"]["compatible"], true);
    let doc = json_ok(&[
        "compat", "check", "--n", "4", "--digits", "0,1", "--s", "0,1",
    ]);
    assert_eq!(doc["result"]["compatible"], false);
    assert_eq!(doc["result"]["certificate"], Value::Null);

    let doc = json_ok(&["compat", "reduce", "--n", "4", "--s", "0,6,7"]);
    assert_eq!(ints(&doc["result"]["reduced"]), vec![-1, 0, 2]);

    let doc = json_ok(&[
        "compat", "power", "--n", "4", "--digits", "0,1", "--s", "0,2", "--k", "2",
    ]);
    assert_eq!(doc["result"]["n"], 16);
    assert_eq!(ints(&doc["result"]["digits"]), vec![0, 1, 4, 5]);
    assert_eq!(ints(&doc["result"]["s"]), vec![0, 2, 8, 10]);

    let doc = json_ok(&["spectrum", "report", "--n", "3", "--digits", "0,2"]);
    assert_eq!(doc["result"]["outcome"], "NoCompatiblePairFound");
    let doc = json_ok(&["spectrum", "report", "--n", "2", "--digits", "3,5"]);
    assert_eq!(doc["result"]["outcome"], "UnitIntervalCase");
    assert_eq!(doc["result"]["canonical"]["scale_factor"], 2);
    let doc = json_ok(&["spectrum", "report", "--n", "16", "--digits", "0,1,8,9"]);
    assert_eq!(doc["result"]["outcome"], "SpectralWithCertificate");

    let doc = json_ok(&[
        "measure", "fourier", "--n", "2", "--digits", "0,1", "--xi", "0.5,-0.5",
    ]);
    let values = doc["result"]["values"].as_array().unwrap();
    assert_eq!(values.len(), 2);
    assert!((values[0]["abs"].as_f64().unwrap() - 0.63662).abs() < 1e-5);

    let doc = json_ok(&[
        "measure", "lambda", "--n", "4", "--s", "0,2", "--depth", "2",
    ]);
    assert_eq!(ints(&doc["result"]["elements"]), vec![0, 2, 8, 10]);

    let doc = json_ok(&["tiling", "check", "--n", "16", "--digits", "0,1,8,9"]);
    assert_eq!(doc["result"]["complementing"], true);
    assert_eq!(ints(&doc["result"]["complement"]), vec![0, 2, 4, 6]);
    let doc = json_ok(&["tiling", "check", "--n", "3", "--digits", "0,2"]);
    assert_eq!(doc["result"]["complementing"], false);
}

#[test]
fn qgrid_formats() {
    let doc = json_ok(&[
        "measure", "qgrid", "--n", "4", "--digits", "0,1", "--s", "0,2", "--depth", "6",
    ]);
    let points = doc["result"]["points"].as_array().unwrap();
    assert_eq!(points.len(), 101);
    for p in points {
        let q = p["q_value"].as_f64().unwrap();
        assert!(q <= 1.0 + 1e-9);
    }
    assert_eq!(points[0]["xi"], 0.0);

    let run = spectral(&[
        "measure", "qgrid", "--n", "4", "--digits", "0,1", "--s", "0,6", "--grid", "-1,3,8",
        "--format", "csv",
    ]);
    assert_eq!(run.status, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines[0], "xi,q_value,error_bound");
    assert_eq!(lines.len(), 9);
    let xs: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert!(xs.windows(2).all(|w| w[0] < w[1]));
    let at_two: Vec<f64> = lines[7].split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(at_two[0], 2.0);
    assert!(at_two[1] < 1e-6);
}

#[test]
fn witnesses_round_trip_through_verify() {
    let mut seen = 0;
    for (n, d, s) in [
        ("4", "0,1", "0,6"),
        ("4", "0,1", "0,-6"),
        ("3", "0,1,2", "0,5,7"),
        ("-4", "0,1", "0,2"),
        ("6", "0,1,2", "0,8,16"),
        ("4", "0,1", "0,2"),
    ] {
        let doc = json_ok(&["spectrum", "decide", "--n", n, "--digits", d, "--s", s]);
        if doc["result"]["verdict"] != "NotSpectral" {
            continue;
        }
        seen += 1;
        let cycle = serde_json::to_string(&doc["result"]["cycle"]).unwrap();
        let check = json_ok(&[
            "spectrum", "verify", "--n", n, "--digits", d, "--s", s, "--cycle", &cycle,
        ]);
        assert_eq!(
            check["result"]["valid"], true,
            "N={n} D={d} S={s} cycle {cycle}"
        );
    }
    assert!(seen >= 3);
    let bad = json_ok(&[
        "spectrum", "verify", "--n", "4", "--digits", "0,1", "--s", "0,6", "--cycle", "[[3,6]]",
    ]);
    assert_eq!(bad["result"]["valid"], false);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["compat", "search", "--n", "6", "--digits", "0,1,2"][..],
        &[
            "measure", "qgrid", "--n", "6", "--digits", "0,1,2", "--s", "0,2,4", "--depth", "4",
        ][..],
        &[
            "measure", "qgrid", "--n", "4", "--digits", "0,1", "--s", "0,6", "--format", "csv",
        ][..],
        &["tiling", "construct", "--n", "16", "--digits", "0,1,8,9"][..],
        &["spectrum", "report", "--n", "6", "--digits", "0,1,2"][..],
    ] {
        let first = spectral(args);
        let second = spectral(args);
        assert_eq!(first.status, 0);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn malformed_input_exits_with_one() {
    for args in [
        &[
            "compat", "check", "--n", "4", "--digits", "0,1,0", "--s", "0,2",
        ][..],
        &[
            "compat", "check", "--n", "4", "--digits", "0,1", "--s", "0,2,2",
        ][..],
        &[
            "compat", "check", "--n", "4", "--digits", "0,x", "--s", "0,2",
        ][..],
        &["compat", "check", "--n", "4", "--digits", "0,1"][..],
        &[
            "compat", "check", "--n", "1", "--digits", "0,1", "--s", "0,2",
        ][..],
        &[
            "measure", "qgrid", "--n", "4", "--digits", "0,1", "--s", "0,2", "--grid", "1,0,5",
        ][..],
        &[
            "measure",
            "qgrid",
            "--n",
            "4",
            "--digits",
            "0,1",
            "--s",
            "0,2",
            "--epsilon",
            "2",
        ][..],
        &[
            "measure", "qgrid", "--n", "4", "--digits", "0,1", "--s", "0,2", "--depth", "0",
        ][..],
        &[
            "measure", "qgrid", "--n", "4", "--digits", "0,1", "--s", "0,2", "--format", "xml",
        ][..],
        &[
            "spectrum", "verify", "--n", "4", "--digits", "0,1", "--s", "0,6", "--cycle", "[2,6]",
        ][..],
        &[
            "compat", "power", "--n", "4", "--digits", "0,1", "--s", "0,2", "--k", "0",
        ][..],
        &["frobnicate"][..],
        &[][..],
    ] {
        let run = spectral(args);
        assert_eq!(run.status, 1, "{args:?}: {}", run.stderr);
        assert!(run.stdout.is_empty());
        assert!(!run.stderr.is_empty());
    }
    assert_eq!(spectral(&["--help"]).status, 0);
}

#[test]
fn violated_hypotheses_exit_with_two() {
    for (args, needle) in [
        (
            &[
                "spectrum", "decide", "--n", "4", "--digits", "0,1", "--s", "0,1",
            ][..],
            "compatible",
        ),
        (
            &[
                "spectrum", "decide", "--n", "4", "--digits", "0,1", "--s", "0,2,4",
            ][..],
            "|S|",
        ),
        (
            &[
                "spectrum", "decide", "--n", "4", "--digits", "0,2", "--s", "0,1",
            ][..],
            "gcd",
        ),
        (
            &[
                "spectrum", "decide", "--n", "4", "--digits", "1,2", "--s", "0,2",
            ][..],
            "0",
        ),
        (
            &["tiling", "construct", "--n", "3", "--digits", "0,2"][..],
            "complementing",
        ),
        (
            &["compat", "reduce", "--n", "2", "--s", "0,1"][..],
            "|N| = 2",
        ),
        (
            &[
                "measure",
                "lambda",
                "--n",
                "10",
                "--s",
                "0,1,2,3,4,5,6",
                "--depth",
                "9",
            ][..],
            "budget",
        ),
    ] {
        let run = spectral(args);
        assert_eq!(run.status, 2, "{args:?}: {}", run.stderr);
        assert!(run.stdout.is_empty());
        assert!(run.stderr.contains(needle), "{args:?}: {}", run.stderr);
    }
}

#[test]
fn in_process_entry_point_matches_binary() {
    let args = [
        "spectral", "spectrum", "decide", "--n", "4", "--digits", "0,1", "--s", "0,6",
    ];
    let inv = spectral::execute(args);
    let run = spectral(&args[1..]);
    assert_eq!(inv.status as i32, run.status);
    assert_eq!(inv.stdout, run.stdout);
}
