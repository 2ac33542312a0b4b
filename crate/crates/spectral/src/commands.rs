//! Dispatch of parsed commands to `spectral-core` and rendering of results.

use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};
use spectral_core::arith::{mask_zero_residues, RationalInterval};
use spectral_core::{
    attractor_bounds, canonicalize_digits, construct_spectrum_set, decide_spectrum, find_modulus_l,
    is_compatible, is_complementing, lambda_enumerate, mu_hat, pair_power, q_eval, reduce_s,
    report_measure_spectrality, search_candidate_s, verify_witness, CanonicalForm,
    CompatibilityCertificate, CycleStep, MeasureSpectralityReport, PrimePowers, ScaleDigitSystem,
    SearchedRange, SpectrumCandidate, SpectrumVerdict, TruncationPolicy,
};

use crate::args::{
    Cli, Command, CompatCommand, Format, FourierArgs, LambdaArgs, MeasureCommand, PairArgs,
    PowerArgs, QgridArgs, ReduceArgs, SpectrumCommand, SystemArgs, TilingCommand, VerifyArgs,
};

const EXACT_ZEROS: &str =
    "symbol zeros decided exactly by cyclotomic divisibility of the digit polynomial";
const NO_CYCLE: &str = "compatible pair with no nonzero integer cycle of x -> (x + s)/N in the attractor enclosure, so Lambda(N, S) is a spectrum";
const CYCLE: &str =
    "nonzero integer cycle of x -> (x + s)/N; Q vanishes on it, so Lambda(N, S) is not a spectrum";
const TILING: &str =
    "prime-power cyclotomic divisors of a complementing digit set define a compatible S = N E";

/// How a command failed, which fixes the process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// The request itself is malformed; exit status 1.
    Input,
    /// The request is well formed but violates a hypothesis; exit status 2.
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub message: String,
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self.kind {
            FailureKind::Input => 1,
            FailureKind::Precondition => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<spectral_core::Error> for Failure {
    fn from(err: spectral_core::Error) -> Self {
        let kind = if err.is_input_error() {
            FailureKind::Input
        } else {
            FailureKind::Precondition
        };
        Failure {
            kind,
            message: err.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

/// Run a parsed command and return the text destined for stdout.
pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Compat(c) => match c {
            CompatCommand::Check(a) => compat_check(a),
            CompatCommand::Search(a) => compat_search(a),
            CompatCommand::Reduce(a) => compat_reduce(a),
            CompatCommand::Power(a) => compat_power(a),
        },
        Command::Spectrum(c) => match c {
            SpectrumCommand::Decide(a) => spectrum_decide(a),
            SpectrumCommand::Verify(a) => spectrum_verify(a),
            SpectrumCommand::Report(a) => spectrum_report(a),
        },
        Command::Measure(c) => match c {
            MeasureCommand::Fourier(a) => measure_fourier(a),
            MeasureCommand::Qgrid(a) => measure_qgrid(a),
            MeasureCommand::Lambda(a) => measure_lambda(a),
        },
        Command::Tiling(c) => match c {
            TilingCommand::Check(a) => tiling_check(a),
            TilingCommand::Construct(a) => tiling_construct(a),
        },
    }
}

fn emit(command: &str, input: Value, result: Value) -> Outcome {
    let doc = json!({ "command": command, "input": input, "result": result });
    let mut text = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
    text.push('\n');
    Ok(text)
}

fn system(args: &SystemArgs) -> Result<ScaleDigitSystem, Failure> {
    Ok(ScaleDigitSystem::new(args.n, args.digits.clone())?)
}

fn pair(args: &PairArgs) -> Result<(ScaleDigitSystem, SpectrumCandidate), Failure> {
    Ok((
        system(&args.system)?,
        SpectrumCandidate::new(args.s.clone())?,
    ))
}

fn system_input(s: &ScaleDigitSystem) -> Value {
    json!({ "n": s.scale(), "digits": s.digits() })
}

fn pair_input(s: &ScaleDigitSystem, c: &SpectrumCandidate) -> Value {
    json!({ "n": s.scale(), "digits": s.digits(), "s": c.elements() })
}

fn interval_json(i: &RationalInterval) -> Value {
    json!([i.lo().to_string(), i.hi().to_string()])
}

fn certificate_json(c: &CompatibilityCertificate) -> Value {
    let zeros: Vec<Value> = c
        .zero_differences
        .iter()
        .map(|z| json!({ "first": z.first, "second": z.second, "order": z.order }))
        .collect();
    json!({ "zero_differences": zeros, "provenance": EXACT_ZEROS })
}

fn cycle_json(witness: &[CycleStep]) -> Value {
    witness
        .iter()
        .map(|step| json!([step.eta, step.digit]))
        .collect()
}

fn searched_json(searched: &SearchedRange) -> Value {
    json!({
        "bounds": interval_json(&searched.bounds),
        "integers": searched.integers.map(|(lo, hi)| json!([lo, hi])),
    })
}

fn verdict_json(v: &SpectrumVerdict) -> Value {
    match v {
        SpectrumVerdict::Spectral { searched } => json!({
            "verdict": "Spectral",
            "cycle": null,
            "searched": searched_json(searched),
            "provenance": NO_CYCLE,
        }),
        SpectrumVerdict::NotSpectral { witness } => json!({
            "verdict": "NotSpectral",
            "cycle": cycle_json(witness),
            "searched": null,
            "provenance": CYCLE,
        }),
    }
}

fn canonical_json(c: &CanonicalForm) -> Value {
    json!({
        "reduced_digits": c.reduced.digits(),
        "offset": c.offset,
        "scale_factor": c.scale_factor,
    })
}

fn prime_powers_json(p: &Option<PrimePowers>) -> Value {
    match p {
        None => Value::Null,
        Some(p) => json!({
            "prime": p.prime,
            "cap": p.cap,
            "exponents": p.exponents,
            "powers": p.powers(),
        }),
    }
}

fn compat_check(args: &PairArgs) -> Outcome {
    let (s, c) = pair(args)?;
    let cert = is_compatible(&s, &c)?;
    let mask = mask_zero_residues(&s)?;
    emit(
        "compat check",
        pair_input(&s, &c),
        json!({
            "compatible": cert.is_some(),
            "certificate": cert.as_ref().map(certificate_json),
            "zero_residues": mask.to_vec(),
            "provenance": EXACT_ZEROS,
        }),
    )
}

fn compat_search(args: &SystemArgs) -> Outcome {
    let s = system(args)?;
    let found = search_candidate_s(&s)?;
    let sets: Vec<&[i64]> = found.iter().map(SpectrumCandidate::elements).collect();
    emit(
        "compat search",
        system_input(&s),
        json!({
            "count": sets.len(),
            "candidates": sets,
            "window": [2 - s.modulus() as i64, s.modulus() as i64 - 2],
            "provenance": "exhaustive clique search through 0 on the window, edges given by exact symbol zeros",
        }),
    )
}

fn compat_reduce(args: &ReduceArgs) -> Outcome {
    let c = SpectrumCandidate::new(args.s.clone())?;
    let reduced = reduce_s(args.n, &c)?;
    emit(
        "compat reduce",
        json!({ "n": args.n, "s": c.elements() }),
        json!({
            "reduced": reduced.elements(),
            "provenance": "each element replaced by its residue representative in [2-|N|, |N|-2]; compatibility depends on residues only",
        }),
    )
}

fn compat_power(args: &PowerArgs) -> Outcome {
    let (s, c) = pair(&args.pair)?;
    let power = pair_power(&s, &c, args.k)?;
    emit(
        "compat power",
        json!({ "n": s.scale(), "digits": s.digits(), "s": c.elements(), "k": args.k }),
        json!({
            "n": power.system.scale(),
            "digits": power.system.digits(),
            "s": power.candidate.elements(),
            "compatible": true,
            "provenance": "Minkowski sums D + N D + ... and S + N S + ... of a compatible pair stay compatible at scale N^k",
        }),
    )
}

fn spectrum_decide(args: &PairArgs) -> Outcome {
    let (s, c) = pair(args)?;
    let verdict = decide_spectrum(&s, &c)?;
    let cert = is_compatible(&s, &c)?.expect("the decider checked compatibility");
    let mut result = verdict_json(&verdict);
    result["certificate"] = certificate_json(&cert);
    emit("spectrum decide", pair_input(&s, &c), result)
}

fn spectrum_verify(args: &VerifyArgs) -> Outcome {
    let (s, c) = pair(&args.pair)?;
    let witness: Vec<CycleStep> = args
        .cycle
        .iter()
        .map(|&(eta, digit)| CycleStep { eta, digit })
        .collect();
    let valid = verify_witness(&s, &c, &witness);
    let mut input = pair_input(&s, &c);
    input["cycle"] = cycle_json(&witness);
    emit(
        "spectrum verify",
        input,
        json!({
            "valid": valid,
            "provenance": "each step checked exactly: eta nonzero, digit in S, (eta + digit)/N equal to the next eta",
        }),
    )
}

fn spectrum_report(args: &SystemArgs) -> Outcome {
    let s = system(args)?;
    let result = match report_measure_spectrality(&s)? {
        MeasureSpectralityReport::SpectralWithCertificate {
            canonical,
            candidate,
            certificate,
            verdict,
        } => json!({
            "outcome": "SpectralWithCertificate",
            "canonical": canonical_json(&canonical),
            "s": candidate.elements(),
            "certificate": certificate_json(&certificate),
            "verdict": verdict_json(&verdict),
            "provenance": "the canonical measure has spectrum Lambda(N, S); the original has spectrum Lambda(N, S) / scale_factor",
        }),
        MeasureSpectralityReport::UnitIntervalCase { canonical } => json!({
            "outcome": "UnitIntervalCase",
            "canonical": canonical_json(&canonical),
            "provenance": "|N| = 2 with digits {0, 1} is Lebesgue measure on an interval of length 1, spectrum Z / scale_factor",
        }),
        MeasureSpectralityReport::NoCompatiblePairFound { canonical } => json!({
            "outcome": "NoCompatiblePairFound",
            "canonical": canonical_json(&canonical),
            "provenance": "no compatible S exists in the reduced window; spectrality is not decided",
        }),
    };
    emit("spectrum report", system_input(&s), result)
}

fn measure_fourier(args: &FourierArgs) -> Outcome {
    let s = system(&args.system)?;
    let policy = TruncationPolicy::default().with_epsilon(args.epsilon)?;
    let values: Vec<Value> = args
        .xi
        .iter()
        .map(|&xi| {
            let est = mu_hat(&s, xi, &policy);
            json!({
                "xi": xi,
                "re": est.value.re,
                "im": est.value.im,
                "abs": est.value.norm(),
                "error_bound": est.error_bound,
            })
        })
        .collect();
    let mut input = system_input(&s);
    input["epsilon"] = json!(args.epsilon);
    emit(
        "measure fourier",
        input,
        json!({
            "values": values,
            "provenance": "infinite product of symbols truncated with an explicit tail bound",
        }),
    )
}

fn measure_qgrid(args: &QgridArgs) -> Outcome {
    let (s, c) = pair(&args.pair)?;
    let policy = TruncationPolicy::new(args.policy.depth, args.policy.epsilon)?;
    // Fail fast on oversized slices before spawning work.
    lambda_enumerate(s.scale(), &c, policy.depth())?;
    let rows = args
        .grid
        .points()
        .into_par_iter()
        .map(|xi| q_eval(&s, &c, xi, &policy).map(|q| (xi, q.value, q.error_bound)))
        .collect::<Result<Vec<_>, _>>()?;

    if args.format == Format::Csv {
        let mut out = String::from("xi,q_value,error_bound\n");
        for (xi, q, err) in rows {
            let cells = [xi, q, err].map(|v| Value::from(v).to_string());
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        return Ok(out);
    }
    let points: Vec<Value> = rows
        .iter()
        .map(|&(xi, q, err)| json!({ "xi": xi, "q_value": q, "error_bound": err }))
        .collect();
    let mut input = pair_input(&s, &c);
    input["depth"] = json!(policy.depth());
    input["epsilon"] = json!(policy.product_epsilon());
    input["grid"] = json!({ "lo": args.grid.lo, "hi": args.grid.hi, "count": args.grid.count });
    emit(
        "measure qgrid",
        input,
        json!({
            "points": points,
            "provenance": "Q summed directly over the depth slice of Lambda(N, S); Q <= 1 for compatible pairs and Q = 1 identically for spectra",
        }),
    )
}

fn measure_lambda(args: &LambdaArgs) -> Outcome {
    let c = SpectrumCandidate::new(args.s.clone())?;
    let elements = lambda_enumerate(args.n, &c, args.depth)?;
    let bounds = attractor_bounds(args.n, c.elements())?;
    emit(
        "measure lambda",
        json!({ "n": args.n, "s": c.elements(), "depth": args.depth }),
        json!({
            "count": elements.len(),
            "elements": elements,
            "attractor_bounds": interval_json(&bounds),
            "provenance": "all sums s_0 + s_1 N + ... + s_{depth-1} N^{depth-1} with digits in S",
        }),
    )
}

fn tiling_check(args: &SystemArgs) -> Outcome {
    let s = system(args)?;
    let complement = is_complementing(s.digits(), s.modulus())?;
    let modulus_l = if complement.is_some() {
        find_modulus_l(&s)?
    } else {
        None
    };
    emit(
        "tiling check",
        system_input(&s),
        json!({
            "complementing": complement.is_some(),
            "complement": complement,
            "modulus": s.modulus(),
            "modulus_l": modulus_l,
            "provenance": "exhaustive search for E with D + E a complete residue system",
        }),
    )
}

fn tiling_construct(args: &SystemArgs) -> Outcome {
    let s = system(args)?;
    let built = construct_spectrum_set(&s)?;
    let canonical = canonicalize_digits(&s)?;
    let e: Vec<String> = built.fractional_e.iter().map(ToString::to_string).collect();
    emit(
        "tiling construct",
        system_input(&s),
        json!({
            "modulus_l": built.modulus_l,
            "complement_e0": built.complement_e0,
            "p": prime_powers_json(&built.prime_power_sets.p),
            "q": prime_powers_json(&built.prime_power_sets.q),
            "e": e,
            "s": built.result_s.elements(),
            "certificate": certificate_json(&built.certificate),
            "canonical": canonical_json(&canonical),
            "provenance": TILING,
        }),
    )
}
