//! Command-line front end.
//!
//! Exit codes: 0 success (graphic, confirmed, clean), 2 usage, parse, domain
//! or guard errors, 3 a negative finding (not graphic, violations found,
//! sharpness not confirmed).
//!
//! `--format json` prints exactly one JSON object per invocation. Sequences
//! for `check` and `realize` are read from standard input, one per line,
//! when no positional argument is given.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{bounds_summary_with, improved_bound, zz_corollary, BoundVerdict, BoundsSummary};
use crate::extremal::{gap_example, witness_nongraphic};
use crate::oracle::{cross_check_with, sharpness_scan_with, OracleError, ScanOptions, ViolationReport};
use crate::seqcore::{
    erdos_gallai_check_with, havel_hakimi_realize, parse_sequence, DegreeSequence, EgMethod,
    EgReport, RealizeError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

/// Sweeps above this many sequences need `--force`.
pub const SWEEP_GUARD_SEQUENCES: u128 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "degseq",
    version,
    about = "Graphicality checks, sufficiency bounds and extremal degree sequences"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for `sweep` and `scan`; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub jobs: u64,
    /// Use the per-index Erdős–Gallai evaluation instead of the run-length one.
    #[arg(long, global = true)]
    pub naive_eg: bool,
    /// Lift the feasibility guards of `sweep` and `scan`.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact graphicality plus every sufficiency bound.
    Check {
        /// Sequence such as `4^2,1^6`; read from stdin when omitted.
        sequence: Option<String>,
    },
    /// Print a simple graph with the given degrees, one edge `u v` per line.
    Realize { sequence: Option<String> },
    /// Non-graphic even-sum sequence one below the floor bound for `d`.
    Witness {
        d: u64,
        #[arg(long)]
        verify: bool,
    },
    /// Graphic sequence meeting the floor bound but not `d^2/4 + d + 1`.
    Gap {
        x: u64,
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustive cross-check of every sequence with n <= nmax, d1 <= dmax.
    Sweep {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 5)]
        dmax: u64,
    },
    /// Confirm the floor bound is exact for `d1` on a window of lengths.
    Scan {
        #[arg(long)]
        d1: u64,
        #[arg(long, default_value_t = 2)]
        extra: u64,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match execute(&cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary.
pub fn main_with_std() -> i32 {
    let stdin = std::io::stdin();
    let mut stdin = stdin.lock();
    let stdout = std::io::stdout();
    let mut stdout = stdout.lock();
    let stderr = std::io::stderr();
    let mut stderr = stderr.lock();
    let code = run(std::env::args_os(), &mut stdin, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    code
}

type CmdResult = Result<i32, String>;

fn execute(cli: &Cli, io: &mut Io<'_>) -> CmdResult {
    let method = if cli.naive_eg {
        EgMethod::Naive
    } else {
        EgMethod::RunLength
    };
    match &cli.command {
        Command::Check { sequence } => {
            with_inputs(cli, io, "check", sequence.as_deref(), |seq| check_one(seq, method))
        }
        Command::Realize { sequence } => with_inputs(cli, io, "realize", sequence.as_deref(), realize_one),
        Command::Witness { d, verify } => {
            let seq = witness_nongraphic(*d).map_err(|e| e.to_string())?;
            family(cli, io, "witness", json!({ "d": d }), &seq, *verify, method)
        }
        Command::Gap { x, verify } => {
            let seq = gap_example(*x).map_err(|e| e.to_string())?;
            family(cli, io, "gap", json!({ "x": x }), &seq, *verify, method)
        }
        Command::Sweep { nmax, dmax } => sweep(cli, io, *nmax, *dmax),
        Command::Scan { d1, extra } => scan(cli, io, *d1, *extra, method),
    }
}

/// Outcome of one sequence-valued command.
struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

fn with_inputs(
    cli: &Cli,
    io: &mut Io<'_>,
    command: &str,
    positional: Option<&str>,
    mut one: impl FnMut(&DegreeSequence) -> Outcome,
) -> CmdResult {
    let Some(text) = positional else {
        return batch(cli, io, command, one);
    };
    let seq = parse_sequence(text).map_err(|e| format!("cannot parse {text:?}: {e}"))?;
    let outcome = one(&seq);
    match cli.format {
        Format::Text => write_str(io.out, &outcome.text)?,
        Format::Json => write_json(
            io.out,
            &json!({ "command": command, "input": text, "results": outcome.json }),
        )?,
    }
    Ok(outcome.code)
}

fn batch(
    cli: &Cli,
    io: &mut Io<'_>,
    command: &str,
    mut one: impl FnMut(&DegreeSequence) -> Outcome,
) -> CmdResult {
    let mut items = Vec::new();
    let mut code = EXIT_OK;
    let mut first = true;
    let mut line = String::new();
    loop {
        line.clear();
        let read = io.stdin.read_line(&mut line).map_err(|e| e.to_string())?;
        if read == 0 {
            break;
        }
        let input = line.trim();
        if input.is_empty() {
            continue;
        }
        match parse_sequence(input) {
            Ok(seq) => {
                let outcome = one(&seq);
                if code == EXIT_OK {
                    code = outcome.code;
                }
                match cli.format {
                    Format::Text => {
                        if !first {
                            write_str(io.out, "\n")?;
                        }
                        write_str(io.out, &format!("input: {input}\n"))?;
                        write_str(io.out, &outcome.text)?;
                    }
                    Format::Json => items.push(json!({ "input": input, "results": outcome.json })),
                }
            }
            Err(e) => {
                code = EXIT_USAGE;
                writeln!(io.err, "error: cannot parse {input:?}: {e}").map_err(|e| e.to_string())?;
                if cli.format == Format::Json {
                    items.push(json!({ "input": input, "error": e.to_string() }));
                }
            }
        }
        first = false;
    }
    if cli.format == Format::Json {
        write_json(
            io.out,
            &json!({ "command": command, "input": "-", "results": items }),
        )?;
    }
    Ok(code)
}

fn sequence_fields(seq: &DegreeSequence) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("sequence".into(), json!(seq));
    m.insert("n".into(), json!(seq.n()));
    m.insert("sum".into(), json!(seq.sum()));
    m.insert("d1".into(), json!(seq.d1()));
    m.insert("dn".into(), json!(seq.dn()));
    m
}

fn check_one(seq: &DegreeSequence, method: EgMethod) -> Outcome {
    let summary = bounds_summary_with(seq, method);
    let mut m = sequence_fields(seq);
    m.insert("erdos_gallai".into(), json!(summary.erdos_gallai));
    m.insert("bounds".into(), json!(summary.verdicts));
    Outcome {
        code: if summary.erdos_gallai.graphic {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        },
        text: check_text(seq, &summary),
        json: Value::Object(m),
    }
}

fn eg_line(eg: &EgReport) -> String {
    let verdict = if eg.graphic { "graphic" } else { "not graphic" };
    let violation = match eg.first_violation {
        Some(v) => format!("k={} lhs={} rhs={}", v.k, v.lhs, v.rhs),
        None => "none".into(),
    };
    format!(
        "erdos_gallai: {verdict}\n  parity_even: {}\n  first_violation: {violation}\n",
        eg.parity_even
    )
}

fn verdict_line(v: &BoundVerdict) -> String {
    let state = if v.holds {
        "holds"
    } else if v.applicable {
        "fails"
    } else {
        "n/a"
    };
    let mut line = format!(
        "  {:<15} {:<6} lhs={} rhs={} min_n={}",
        v.predicate.name(),
        state,
        v.lhs,
        v.rhs,
        v.min_n
    );
    if let Some(eps) = v.epsilon_prime {
        line.push_str(&format!(" epsilon_prime={eps}"));
    }
    line.push('\n');
    line
}

fn header_text(seq: &DegreeSequence) -> String {
    format!(
        "sequence: {seq}\nn: {}\nsum: {}\nd1: {}\ndn: {}\n",
        seq.n(),
        seq.sum(),
        seq.d1(),
        seq.dn()
    )
}

fn check_text(seq: &DegreeSequence, summary: &BoundsSummary) -> String {
    let mut s = header_text(seq);
    s.push_str(&eg_line(&summary.erdos_gallai));
    s.push_str("bounds:\n");
    for v in &summary.verdicts {
        s.push_str(&verdict_line(v));
    }
    s
}

fn realize_one(seq: &DegreeSequence) -> Outcome {
    match havel_hakimi_realize(seq) {
        Ok(r) => {
            let mut text = String::new();
            for (u, v) in &r.edges {
                text.push_str(&format!("{u} {v}\n"));
            }
            Outcome {
                code: EXIT_OK,
                text,
                json: json!({ "graphic": true, "n": r.n, "edges": r.edges }),
            }
        }
        Err(RealizeError::NotGraphic) => Outcome {
            code: EXIT_NEGATIVE,
            text: "NOT GRAPHIC\n".into(),
            json: json!({ "graphic": false }),
        },
        Err(e @ RealizeError::TooLarge { .. }) => Outcome {
            code: EXIT_USAGE,
            text: format!("error: {e}\n"),
            json: json!({ "error": e.to_string() }),
        },
    }
}

fn family(
    cli: &Cli,
    io: &mut Io<'_>,
    command: &str,
    input: Value,
    seq: &DegreeSequence,
    verify: bool,
    method: EgMethod,
) -> CmdResult {
    let mut m = sequence_fields(seq);
    let mut text = format!("{seq}\n");
    if verify {
        let eg = erdos_gallai_check_with(seq, method);
        let floor = improved_bound(seq);
        let corollary = zz_corollary(seq);
        text.push_str(&header_text(seq));
        text.push_str(&eg_line(&eg));
        text.push_str("bounds:\n");
        text.push_str(&verdict_line(&floor));
        text.push_str(&verdict_line(&corollary));
        m.insert("erdos_gallai".into(), json!(eg));
        m.insert("bounds".into(), json!([floor, corollary]));
    }
    match cli.format {
        Format::Text => write_str(io.out, &text)?,
        Format::Json => write_json(
            io.out,
            &json!({ "command": command, "input": input, "results": Value::Object(m) }),
        )?,
    }
    Ok(EXIT_OK)
}

fn sweep_size(nmax: usize, dmax: u64) -> u128 {
    // sum_{n=1..nmax} C(n + dmax - 1, dmax - 1) = C(nmax + dmax, dmax) - 1
    let (n, k) = (nmax as u128 + dmax as u128, dmax.min(nmax as u64) as u128);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul(n - i) / (i + 1);
        if c > SWEEP_GUARD_SEQUENCES * 1000 {
            return c;
        }
    }
    c - 1
}

fn sweep(cli: &Cli, io: &mut Io<'_>, nmax: usize, dmax: u64) -> CmdResult {
    if nmax == 0 || dmax == 0 {
        return Err("nmax and dmax must be at least 1".into());
    }
    if !cli.force && sweep_size(nmax, dmax) > SWEEP_GUARD_SEQUENCES {
        return Err(format!(
            "refusing sweep over more than {SWEEP_GUARD_SEQUENCES} sequences without --force"
        ));
    }
    let report = cross_check_with(nmax, dmax, cli.jobs as usize).map_err(|e| e.to_string())?;
    match cli.format {
        Format::Text => write_str(io.out, &sweep_text(&report))?,
        Format::Json => write_json(
            io.out,
            &json!({
                "command": "sweep",
                "input": { "nmax": nmax, "dmax": dmax },
                "results": report,
            }),
        )?,
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn sweep_text(r: &ViolationReport) -> String {
    let mut s = format!(
        "sequences_checked: {}\ngraphic_count: {}\nrealizations_checked: {}\n",
        r.sequences_checked, r.graphic_count, r.realizations_checked
    );
    s.push_str(&format!("violations: {}\n", r.violations.len()));
    for v in &r.violations {
        s.push_str(&format!("  {} {}: {}\n", v.sequence, v.predicate.name(), v.detail));
    }
    for (name, list) in [
        ("eg_hh_mismatches", &r.eg_hh_mismatches),
        ("rle_naive_mismatches", &r.rle_naive_mismatches),
        ("invalid_realizations", &r.invalid_realizations),
    ] {
        s.push_str(&format!("{name}: {}\n", list.len()));
        for m in list {
            s.push_str(&format!("  {}: {}\n", m.sequence, m.detail));
        }
    }
    s.push_str(&format!("flatten_failures: {}\n", r.flatten_failures.len()));
    for f in &r.flatten_failures {
        s.push_str(&format!(
            "  {} k={}: flattened lhs={} rhs={}\n",
            f.sequence, f.k, f.flattened_lhs, f.flattened_rhs
        ));
    }
    s
}

const SCAN_NOTE: &str = "lengths above the window are not enumerated; the floor bound covers them";

fn scan(cli: &Cli, io: &mut Io<'_>, d1: u64, extra: u64, method: EgMethod) -> CmdResult {
    let options = ScanOptions {
        jobs: cli.jobs as usize,
        force: cli.force,
        eg_method: method,
    };
    let r = sharpness_scan_with(d1, extra, &options).map_err(|e| match e {
        OracleError::Refused { .. } => format!("{e}; pass --force to run anyway"),
        e => e.to_string(),
    })?;
    match cli.format {
        Format::Text => {
            let mut s = format!(
                "d1: {}\nthreshold: {}\nwitness_at_threshold_minus_1: {}\nwitness_confirmed: {}\n",
                r.d1, r.threshold, r.witness_at_threshold_minus_1, r.witness_confirmed
            );
            s.push_str("lengths:\n");
            for l in &r.lengths {
                s.push_str(&format!(
                    "  length={} sequences={} graphic={}",
                    l.length, l.sequences, l.graphic
                ));
                if let Some(c) = &l.counterexample {
                    s.push_str(&format!(" counterexample={c}"));
                }
                s.push('\n');
            }
            let confirmed: Vec<String> = r.lengths_confirmed.iter().map(|l| l.to_string()).collect();
            s.push_str(&format!("lengths_confirmed: {}\n", confirmed.join(",")));
            s.push_str(&format!("confirmed: {}\nnote: {SCAN_NOTE}\n", r.confirmed));
            write_str(io.out, &s)?;
        }
        Format::Json => write_json(
            io.out,
            &json!({
                "command": "scan",
                "input": { "d1": d1, "extra": extra },
                "results": r,
                "note": SCAN_NOTE,
            }),
        )?,
    }
    Ok(if r.confirmed { EXIT_OK } else { EXIT_NEGATIVE })
}

fn write_str(out: &mut dyn Write, s: &str) -> Result<(), String> {
    out.write_all(s.as_bytes()).map_err(|e| e.to_string())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), String> {
    let s = serde_json::to_string(value).map_err(|e| e.to_string())?;
    writeln!(out, "{s}").map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_size_closed_form() {
        // C(20, 8) - 1
        assert_eq!(sweep_size(12, 8), 125_969);
        assert_eq!(sweep_size(8, 5), 1_286);
        assert_eq!(sweep_size(1, 1), 1);
        assert!(sweep_size(40, 40) > SWEEP_GUARD_SEQUENCES);
    }

    #[test]
    fn verdict_line_shape() {
        let seq: DegreeSequence = "3,1^5".parse().unwrap();
        let line = verdict_line(&crate::bounds::bhjw_bound(&seq));
        assert_eq!(line, "  bhjw            holds  lhs=24 rhs=24 min_n=6 epsilon_prime=1\n");
    }
}
