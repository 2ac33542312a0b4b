//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p spectral --test acceptance`.

// `ensure!` negates its condition so that NaN fails every check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::TAU;
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;
use spectral_core::arith::mask_zero_residues;
use spectral_core::*;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sys(n: i64, d: &[i64]) -> ScaleDigitSystem {
    ScaleDigitSystem::new(n, d.to_vec()).expect("valid system")
}

fn cand(s: &[i64]) -> SpectrumCandidate {
    SpectrumCandidate::new(s.to_vec()).expect("valid candidate")
}

fn cli(args: &[&str]) -> Result<Value, String> {
    let inv = spectral::execute(std::iter::once("spectral").chain(args.iter().copied()));
    ensure!(
        inv.status == 0,
        "{args:?} exited {}: {}",
        inv.status,
        inv.stderr
    );
    serde_json::from_str(&inv.stdout).map_err(|e| format!("{args:?}: bad JSON: {e}"))
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array()
        .map(|a| a.iter().filter_map(Value::as_i64).collect())
        .unwrap_or_default()
}

/// Compatible pairs from the worked examples, reused by several criteria.
fn example_pairs() -> Vec<(ScaleDigitSystem, SpectrumCandidate)> {
    vec![
        (sys(4, &[0, 1]), cand(&[0, 2])),
        (sys(5, &[0, 2, -2, 11, -11]), cand(&[0, 1, -1, 2, -2])),
        (sys(6, &[0, 1, 2]), cand(&[0, 2, 4])),
        (sys(6, &[0, 1, 2]), cand(&[0, -2, 2])),
        (sys(6, &[0, 1, 2]), cand(&[0, 4, 8])),
    ]
}

fn quarter_cantor() -> Check {
    let doc = cli(&[
        "spectrum", "decide", "--n", "4", "--digits", "0,1", "--s", "0,2",
    ])?;
    ensure!(
        doc["result"]["verdict"] == "Spectral",
        "verdict {}",
        doc["result"]["verdict"]
    );
    let doc = cli(&[
        "measure", "lambda", "--n", "4", "--s", "0,2", "--depth", "2",
    ])?;
    let got = ints(&doc["result"]["elements"]);
    ensure!(got == [0, 2, 8, 10], "depth-2 slice {got:?}");
    Ok(())
}

fn five_digit_example() -> Check {
    let doc = cli(&[
        "compat",
        "check",
        "--n",
        "5",
        "--digits",
        "0,2,-2,11,-11",
        "--s",
        "0,1,-1,2,-2",
    ])?;
    ensure!(
        doc["result"]["compatible"] == true,
        "compat check rejected the pair"
    );
    let (s, c) = (sys(5, &[0, 2, -2, 11, -11]), cand(&[0, 1, -1, 2, -2]));
    let verdict = decide_spectrum(&s, &c).map_err(|e| e.to_string())?;
    ensure!(verdict.is_spectral(), "verdict {verdict:?}");
    let slice = lambda_enumerate(5, &c, 3).map_err(|e| e.to_string())?;
    let (lo, hi) = (slice[0], slice[slice.len() - 1]);
    ensure!(
        slice == (lo..=hi).collect::<Vec<_>>(),
        "slice has gaps in [{lo}, {hi}]"
    );
    Ok(())
}

fn six_digit_example() -> Check {
    let s = sys(6, &[0, 1, 2]);
    for set in [[0, 2, 4], [0, -2, 2], [0, 4, 8]] {
        let c = cand(&set);
        let cert = is_compatible(&s, &c).map_err(|e| e.to_string())?;
        ensure!(
            cert.is_some_and(|c| c.verify()),
            "{set:?} not certified compatible"
        );
        let verdict = decide_spectrum(&s, &c).map_err(|e| e.to_string())?;
        ensure!(verdict.is_spectral(), "{set:?}: {verdict:?}");
    }
    for k in 1..=5 {
        let base = lambda_enumerate(6, &cand(&[0, 2, 4]), k).map_err(|e| e.to_string())?;
        let wide = lambda_enumerate(6, &cand(&[0, 4, 8]), k).map_err(|e| e.to_string())?;
        let doubled: Vec<i64> = base.iter().map(|x| 2 * x).collect();
        ensure!(wide == doubled, "depth {k}: slices differ");
    }
    Ok(())
}

fn negative_verdict() -> Check {
    let (s, c) = (sys(4, &[0, 1]), cand(&[0, 6]));
    let verdict = decide_spectrum(&s, &c).map_err(|e| e.to_string())?;
    let SpectrumVerdict::NotSpectral { witness } = verdict else {
        return Err(format!("expected a cycle, got {verdict:?}"));
    };
    ensure!(
        witness == [CycleStep { eta: 2, digit: 6 }],
        "witness {witness:?}"
    );
    ensure!(
        verify_witness(&s, &c, &witness),
        "witness failed verification"
    );
    let policy = TruncationPolicy::new(8, 1e-12).map_err(|e| e.to_string())?;
    let q = q_eval(&s, &c, 2.0, &policy).map_err(|e| e.to_string())?;
    ensure!(q.value < 1e-6, "Q(2) = {}", q.value);
    Ok(())
}

fn transfer_identity() -> Check {
    let mut corpus = example_pairs();
    corpus.push((sys(4, &[0, 1]), cand(&[0, 6])));
    for s in [
        sys(4, &[0, 2]),
        sys(4, &[0, 1, 2, 3]),
        sys(6, &[0, 1, 2, 3, 4, 5]),
        sys(16, &[0, 1, 8, 9]),
    ] {
        let built = construct_spectrum_set(&s).map_err(|e| e.to_string())?;
        corpus.push((s, built.result_s));
    }
    for s in [
        sys(6, &[0, 1, 2]),
        sys(8, &[0, 1, 4, 5]),
        sys(-6, &[0, 1, 2]),
        sys(9, &[0, 1, 2]),
    ] {
        for c in search_candidate_s(&s).map_err(|e| e.to_string())? {
            corpus.push((s.clone(), c));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (s, c) in &corpus {
        ensure!(
            is_compatible(s, c).map_err(|e| e.to_string())?.is_some(),
            "corpus pair not compatible"
        );
        let n = s.scale() as f64;
        for _ in 0..100 {
            let xi: f64 = rng.random_range(-20.0..20.0);
            let sum: f64 = c
                .elements()
                .iter()
                .map(|&x| symbol_eval(s.digits(), (xi + x as f64) / n).norm_sqr())
                .sum();
            ensure!(
                (sum - 1.0).abs() < 1e-9,
                "N={} S={:?} ξ={xi}: sum {sum}",
                s.scale(),
                c.elements()
            );
        }
    }
    Ok(())
}

fn transfer_recursion() -> Check {
    let mut rng = StdRng::seed_from_u64(0xd1ce);
    let tight = TruncationPolicy::new(1, 1e-12).map_err(|e| e.to_string())?;
    let coarse = tight.with_epsilon(1e-4).map_err(|e| e.to_string())?;
    let fine = tight.with_epsilon(1e-6).map_err(|e| e.to_string())?;
    for (s, c) in example_pairs() {
        let xs: Vec<f64> = (0..20).map(|_| rng.random_range(-5.0..5.0)).collect();
        let worst = |p: &TruncationPolicy| -> Result<f64, String> {
            xs.iter().try_fold(0.0f64, |acc, &xi| {
                let r = transfer_residual(&s, &c, xi, 3, p).map_err(|e| e.to_string())?;
                Ok(acc.max(r))
            })
        };
        let at_tight = worst(&tight)?;
        ensure!(
            at_tight < 1e-8,
            "N={} S={:?}: residual {at_tight}",
            s.scale(),
            c.elements()
        );
        // At 1e-12 the residual is pure roundoff; compare where truncation dominates.
        let (rc, rf) = (worst(&coarse)?, worst(&fine)?);
        ensure!(
            rc >= 10.0 * rf,
            "N={} S={:?}: {rc} vs {rf}",
            s.scale(),
            c.elements()
        );
    }
    Ok(())
}

fn completeness_bounds() -> Check {
    for (s, c) in example_pairs() {
        let max_depth = if c.len() > 3 { 5 } else { 7 };
        for i in 0..=16 {
            let xi = -2.0 + 0.25 * i as f64;
            let mut last = 0.0;
            for depth in 1..=max_depth {
                let policy = TruncationPolicy::new(depth, 1e-12).map_err(|e| e.to_string())?;
                let q = q_eval(&s, &c, xi, &policy)
                    .map_err(|e| e.to_string())?
                    .value;
                ensure!(q <= 1.0 + 1e-9, "Q = {q} at ξ={xi}, depth {depth}");
                ensure!(
                    q + 1e-12 >= last,
                    "Q decreased at ξ={xi}, depth {depth}: {last} -> {q}"
                );
                last = q;
            }
        }
        let policy = TruncationPolicy::new(max_depth, 1e-12).map_err(|e| e.to_string())?;
        let q0 = q_eval(&s, &c, 0.0, &policy)
            .map_err(|e| e.to_string())?
            .value;
        ensure!(
            (q0 - 1.0).abs() < 1e-8,
            "Q(0) = {q0} for N={} S={:?}",
            s.scale(),
            c.elements()
        );
    }
    Ok(())
}

fn tiling_pipeline() -> Check {
    for (n, d, want) in [
        (4, vec![0, 2], vec![0, 1]),
        (4, vec![0, 1, 2, 3], vec![0, 1, 2, 3]),
        (6, vec![0, 1, 2, 3, 4, 5], vec![0, 2, 3, 4, 5, 7]),
        (16, vec![0, 1, 8, 9], vec![0, 1, 8, 9]),
    ] {
        let s = sys(n, &d);
        let built = construct_spectrum_set(&s).map_err(|e| e.to_string())?;
        ensure!(
            built.result_s.elements() == want,
            "D={d:?}: S = {:?}",
            built.result_s.elements()
        );
        let cert = is_compatible(&s, &built.result_s).map_err(|e| e.to_string())?;
        ensure!(cert.is_some(), "D={d:?}: constructed S not compatible");
        let report = report_measure_spectrality(&s).map_err(|e| e.to_string())?;
        ensure!(
            matches!(
                report,
                MeasureSpectralityReport::SpectralWithCertificate { .. }
            ),
            "D={d:?}: {report:?}"
        );
    }
    Ok(())
}

fn residue_masks() -> Check {
    let mut systems = 0usize;
    for m in 2i64..=12 {
        for n in [m, -m] {
            for mask in 1u32..(1 << 13) {
                let digits: Vec<i64> = (0..13).filter(|b| mask >> b & 1 == 1).collect();
                let exact = mask_zero_residues(&sys(n, &digits)).map_err(|e| e.to_string())?;
                for k in 1..m {
                    let x = k as f64 / n as f64;
                    let (mut re, mut im) = (0.0, 0.0);
                    for &d in &digits {
                        let phase = -TAU * d as f64 * x;
                        re += phase.cos();
                        im += phase.sin();
                    }
                    let size = re.hypot(im) / digits.len() as f64;
                    let numeric_zero = if size < 1e-10 {
                        true
                    } else if size > 1e-6 {
                        false
                    } else {
                        return Err(format!(
                            "N={n} D={digits:?} k={k}: |m| = {size:e} in the gray zone"
                        ));
                    };
                    ensure!(
                        exact.vanishes_at(k) == numeric_zero,
                        "N={n} D={digits:?} k={k}: exact {} numeric {numeric_zero}",
                        exact.vanishes_at(k)
                    );
                }
                systems += 1;
            }
        }
    }
    ensure!(systems == 22 * 8191, "checked {systems} systems");
    Ok(())
}

fn middle_third_guard() -> Check {
    let doc = cli(&["compat", "search", "--n", "3", "--digits", "0,2"])?;
    ensure!(
        doc["result"]["candidates"]
            .as_array()
            .is_some_and(Vec::is_empty),
        "candidates {}",
        doc["result"]["candidates"]
    );
    let doc = cli(&["spectrum", "report", "--n", "3", "--digits", "0,2"])?;
    ensure!(
        doc["result"]["outcome"] == "NoCompatiblePairFound",
        "outcome {}",
        doc["result"]["outcome"]
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "quarter Cantor pair (4, {0,1}, {0,2}) is spectral with slice {0,2,8,10}",
            quarter_cantor,
        ),
        (
            "(5, {0,±2,±11}, {0,±1,±2}) is compatible, spectral, and its slice is an interval",
            five_digit_example,
        ),
        (
            "(6, {0,1,2}) with three S sets, all spectral; scaled slices agree",
            six_digit_example,
        ),
        (
            "(4, {0,1}, {0,6}) is not spectral, cycle [(2,6)], Q(2) < 1e-6",
            negative_verdict,
        ),
        (
            "sum of |m_D((ξ+s)/N)|² is 1 on the compatible corpus",
            transfer_identity,
        ),
        (
            "transfer residual small and shrinking with the tolerance",
            transfer_recursion,
        ),
        (
            "Q bounded by 1, nondecreasing in depth, Q(0) = 1",
            completeness_bounds,
        ),
        (
            "tiling construction reproduces the expected S sets",
            tiling_pipeline,
        ),
        (
            "exact zero residues agree with floating point for |N| ≤ 12",
            residue_masks,
        ),
        (
            "middle-third Cantor digits yield no compatible pair and no claim",
            middle_third_guard,
        ),
    ];
    let mut failures = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {title} ({secs:.2}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {title} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
