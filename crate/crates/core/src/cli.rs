//! The `tricomm` command line.
//!
//! Exit status: 0 success (or a true answer), 1 a false answer where the
//! command asserts one (`check --assert`, a `sweep` with mismatches, a failed
//! `examples` fixture), 2 usage or parse errors, 3 overflow or aborted search.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::classifier::{a_conjugates, classify, direct_commute, CommutationReport, Witness};
use crate::error::{Error, ParseError};
use crate::fixtures::FIXTURES;
use crate::freeness::find_relation;
use crate::morphisms::BinaryMorphism;
use crate::numtheory::{mult_dependence, MultDependence};
use crate::omega::{gap, gaps_direct, omega_prefix};
use crate::sweep::{run_sweep, SweepConfig, SweepSummary};
use crate::words::Word;

/// Version tag carried by every JSON record.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "tricomm",
    version,
    about = "Commutation of upper triangular binary morphisms"
)]
pub struct Cli {
    /// Emit JSON records instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide g1 g2 = g2 g1 by composing both ways.
    Check {
        g1: String,
        g2: String,
        /// Exit with status 1 when the morphisms do not commute.
        #[arg(long)]
        assert: bool,
    },
    /// Classify a pair of upper triangular morphisms and explain the verdict.
    Classify { g1: String, g2: String },
    /// Print a prefix of the infinite word omega(h).
    Omega {
        h: String,
        #[arg(long)]
        len: u64,
    },
    /// Print the gap sequence A(1..=N) of omega(h).
    Gaps {
        h: String,
        #[arg(long)]
        upto: u64,
        /// Read the gaps off an explicit prefix instead of the closed form.
        #[arg(long)]
        direct: bool,
    },
    /// Decide whether two words are a-conjugates.
    Conjugate { u: String, v: String },
    /// Multiplicative dependence of two integers >= 2.
    Multdep { p: u64, q: u64 },
    /// Search for a relation between g1 and g2 among products of bounded length.
    Free {
        g1: String,
        g2: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Compare classify against composition on every pair of small morphisms.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_s: u64,
        #[arg(long, default_value_t = 3)]
        max_p: u64,
        #[arg(long, default_value_t = 2)]
        max_exp: u64,
        #[arg(long, default_value_t = 3)]
        max_bonly_exp: u64,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        parallel: usize,
        /// Write records here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the seven built-in families of commuting pairs.
    Examples,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Overflow(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CountOverflow | Error::SearchAborted { .. } => Failure::Overflow(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

pub fn parse_morphism(text: &str) -> Result<BinaryMorphism, ParseError> {
    text.parse()
}

fn morphism_arg(text: &str) -> Result<BinaryMorphism, Failure> {
    parse_morphism(text).map_err(|e| Failure::Usage(format!("cannot parse {text:?}: {e}")))
}

fn word_arg(text: &str) -> Result<Word, Failure> {
    text.parse()
        .map_err(|e| Failure::Usage(format!("cannot parse {text:?}: {e}")))
}

fn record(kind: &str, body: Value) -> Value {
    let mut obj = json!({ "schema_version": SCHEMA_VERSION, "kind": kind });
    if let (Value::Object(dst), Value::Object(src)) = (&mut obj, body) {
        dst.extend(src);
    }
    obj
}

fn emit(out: &mut dyn Write, value: &Value) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        None => "-".into(),
        Some(Witness::Dependence { r, m, n }) => format!("r={r} m={m} n={n}"),
        Some(Witness::PeriodicBlock { alpha }) => format!("alpha={alpha}"),
        Some(Witness::BlockPower { alpha, beta, i, j }) => {
            format!("alpha={alpha} beta={beta} i={i} j={j}")
        }
    }
}

fn report_text(out: &mut dyn Write, r: &CommutationReport) -> io::Result<()> {
    writeln!(out, "case: {}", r.case)?;
    writeln!(out, "swapped: {}", r.swapped)?;
    let conds: Vec<String> = r
        .conditions
        .iter()
        .map(|(name, holds)| format!("{name}={holds}"))
        .collect();
    writeln!(out, "conditions: {}", conds.join(" "))?;
    writeln!(out, "witness: {}", witness_text(&r.witness))?;
    writeln!(out, "prediction: {}", r.prediction)
}

fn summary_record(summary: &SweepSummary) -> Result<Value, Failure> {
    Ok(record(
        "sweep_summary",
        json!({
            "config": summary.config,
            "morphisms": summary.morphisms,
            "pairs": summary.pairs,
            "commuting": summary.commuting,
            "mismatches": summary.mismatches.len(),
            "cases": serde_json::to_value(&summary.cases)?,
            "conditions": summary.conditions,
        }),
    ))
}

fn write_sweep(out: &mut dyn Write, summary: &SweepSummary, as_json: bool) -> Result<(), Failure> {
    if as_json {
        for m in &summary.mismatches {
            emit(out, &record("sweep_mismatch", serde_json::to_value(m)?))?;
        }
        return emit(out, &summary_record(summary)?);
    }
    for m in &summary.mismatches {
        writeln!(
            out,
            "mismatch #{}: {} vs {} case={} prediction={} direct={}",
            m.index, m.g1, m.g2, m.case, m.prediction, m.direct
        )?;
    }
    let cases: Vec<String> = summary
        .cases
        .iter()
        .map(|(case, n)| format!("{case}={n}"))
        .collect();
    writeln!(
        out,
        "pairs={} commuting={} mismatches={} cases: {}",
        summary.pairs,
        summary.commuting,
        summary.mismatches.len(),
        cases.join(" ")
    )?;
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let as_json = cli.json;
    match cli.command {
        Command::Check { g1, g2, assert } => {
            let (h1, h2) = (morphism_arg(&g1)?, morphism_arg(&g2)?);
            let commute = direct_commute(&h1, &h2)?;
            if as_json {
                emit(
                    out,
                    &record("check", json!({ "g1": h1.to_string(), "g2": h2.to_string(), "commute": commute })),
                )?;
            } else {
                writeln!(out, "commute: {commute}")?;
            }
            Ok(if assert && !commute { 1 } else { 0 })
        }
        Command::Classify { g1, g2 } => {
            let (h1, h2) = (morphism_arg(&g1)?, morphism_arg(&g2)?);
            let report = classify(&h1, &h2)?;
            if as_json {
                let mut body = serde_json::to_value(&report)?;
                if let Value::Object(map) = &mut body {
                    map.insert("g1".into(), h1.to_string().into());
                    map.insert("g2".into(), h2.to_string().into());
                }
                emit(out, &record("classify", body))?;
            } else {
                report_text(out, &report)?;
            }
            Ok(0)
        }
        Command::Omega { h, len } => {
            let g = morphism_arg(&h)?;
            let prefix = omega_prefix(&g.to_triangular()?, len)?;
            if as_json {
                emit(
                    out,
                    &record("omega", json!({ "morphism": g.to_string(), "len": len, "prefix": prefix.to_string() })),
                )?;
            } else {
                writeln!(out, "{prefix}")?;
            }
            Ok(0)
        }
        Command::Gaps { h, upto, direct } => {
            let g = morphism_arg(&h)?;
            let form = g.to_triangular()?;
            let gaps = if direct {
                gaps_direct(&form, upto)?
            } else {
                (1..=upto).map(|i| gap(&form, i)).collect::<Result<Vec<_>, _>>()?
            };
            if as_json {
                let method = if direct { "direct" } else { "closed_form" };
                emit(
                    out,
                    &record(
                        "gaps",
                        json!({ "morphism": g.to_string(), "upto": upto, "method": method, "gaps": gaps }),
                    ),
                )?;
            } else {
                let text: Vec<String> = gaps.iter().map(u64::to_string).collect();
                writeln!(out, "{}", text.join(" "))?;
            }
            Ok(0)
        }
        Command::Conjugate { u, v } => {
            let (wu, wv) = (word_arg(&u)?, word_arg(&v)?);
            let answer = a_conjugates(&wu, &wv);
            if as_json {
                emit(
                    out,
                    &record("conjugate", json!({ "u": wu.to_string(), "v": wv.to_string(), "a_conjugates": answer })),
                )?;
            } else {
                writeln!(out, "a-conjugates: {answer}")?;
            }
            Ok(0)
        }
        Command::Multdep { p, q } => {
            if p < 2 || q < 2 {
                return Err(Failure::Usage("multdep needs integers >= 2".into()));
            }
            let dep = mult_dependence(p, q);
            if as_json {
                emit(
                    out,
                    &record("multdep", json!({ "p": p, "q": q, "dependence": dep })),
                )?;
            } else {
                match dep {
                    MultDependence::Independent => writeln!(out, "independent")?,
                    MultDependence::Dependent { r, m, n } => {
                        writeln!(out, "dependent r={r} m={m} n={n}")?
                    }
                }
            }
            Ok(0)
        }
        Command::Free { g1, g2, depth } => {
            let (h1, h2) = (morphism_arg(&g1)?, morphism_arg(&g2)?);
            let relation = find_relation(&h1, &h2, depth)?;
            if as_json {
                let rel = relation
                    .as_ref()
                    .map(|r| json!({ "left": r.left_str(), "right": r.right_str() }));
                emit(
                    out,
                    &record(
                        "free",
                        json!({ "g1": h1.to_string(), "g2": h2.to_string(), "depth": depth, "relation": rel }),
                    ),
                )?;
            } else {
                match &relation {
                    Some(r) => writeln!(out, "relation: {r}")?,
                    None => writeln!(out, "no relation up to depth {depth}")?,
                }
            }
            Ok(0)
        }
        Command::Sweep {
            max_s,
            max_p,
            max_exp,
            max_bonly_exp,
            parallel,
            output,
        } => {
            let cfg = SweepConfig {
                max_s,
                max_p,
                max_exp,
                max_bonly_exp,
                parallel,
            };
            let summary = run_sweep(&cfg)?;
            match output {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    write_sweep(&mut file, &summary, as_json)?;
                    file.flush()?;
                }
                None => write_sweep(out, &summary, as_json)?,
            }
            Ok(if summary.mismatches.is_empty() { 0 } else { 1 })
        }
        Command::Examples => {
            let mut all_ok = true;
            for fx in &FIXTURES {
                let (g1, g2) = fx.morphisms();
                let commute = direct_commute(&g1, &g2)?;
                let report = classify(&g1, &g2)?;
                let expected_ok = fx.expect.is_none_or(|(case, cond)| {
                    report.case == case && report.condition(cond) == Some(true)
                });
                let ok = commute && report.prediction && expected_ok;
                all_ok &= ok;
                if as_json {
                    emit(
                        out,
                        &record(
                            "example",
                            json!({
                                "number": fx.number,
                                "title": fx.title,
                                "g1": fx.g1,
                                "g2": fx.g2,
                                "commute": commute,
                                "case": report.case,
                                "prediction": report.prediction,
                                "ok": ok,
                            }),
                        ),
                    )?;
                } else {
                    writeln!(
                        out,
                        "example {}: {} | {} vs {} | commute={} case={} {}",
                        fx.number,
                        fx.title,
                        fx.g1,
                        fx.g2,
                        commute,
                        report.case,
                        if ok { "ok" } else { "FAILED" }
                    )?;
                }
            }
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return e.exit_code();
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Overflow(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
        // a closed pipe (`tricomm ... | head`) is not worth reporting
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["tricomm"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_morphism_examples() {
        let g = parse_morphism("a=aa,b=ab").unwrap();
        assert_eq!(g.image_a.to_string(), "aa");
        assert_eq!(g.image_b.to_string(), "ab");
        let g = parse_morphism("a=eps,b=ab").unwrap();
        assert!(!g.is_nonsingular().unwrap());
        let e = parse_morphism("a=ca,b=b").unwrap_err();
        assert_eq!(e.position, 2);
    }

    #[test]
    fn classify_text() {
        let (code, out, _) = run_capture(&["classify", "a=a,b=bb", "a=aa,b=b"]);
        assert_eq!(code, 0);
        assert!(out.contains("case: GapOneVsMany"), "{out}");
        assert!(out.contains("prediction: true"));
    }

    #[test]
    fn multdep_text() {
        let (code, out, _) = run_capture(&["multdep", "8", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "dependent r=2 m=3 n=2");
        let (code, _, _) = run_capture(&["multdep", "1", "4"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["check", "a=aa,b=ab", "a=a,b=ba"]).0, 0);
        assert_eq!(run_capture(&["check", "--assert", "a=aa,b=ab", "a=a,b=ba"]).0, 1);
        assert_eq!(run_capture(&["check", "--assert", "a=a,b=bb", "a=aa,b=b"]).0, 0);
        assert_eq!(run_capture(&["check", "a=ca,b=b", "a=a,b=b"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["classify", "a=ab,b=b", "a=a,b=b"]).0, 2);
        assert_eq!(run_capture(&["omega", "a=a,b=ab", "--len", "5"]).0, 2);
        let huge = format!("a={},b=b", "a".repeat(2000));
        assert_eq!(
            run_capture(&["free", &huge, "a=aa,b=bab", "--depth", "6"]).0,
            3
        );
    }

    #[test]
    fn json_records_carry_schema_version() {
        let cases: [&[&str]; 8] = [
            &["--json", "check", "a=a,b=bb", "a=aa,b=b"],
            &["--json", "classify", "a=a,b=bb", "a=aa,b=b"],
            &["--json", "omega", "a=a,b=bab", "--len", "7"],
            &["--json", "gaps", "a=a,b=babaab", "--upto", "9"],
            &["--json", "conjugate", "aba", "baa"],
            &["--json", "multdep", "2", "3"],
            &["--json", "free", "a=a,b=bb", "a=aa,b=b", "--depth", "2"],
            &["--json", "examples"],
        ];
        for args in cases {
            let (code, out, err) = run_capture(args);
            assert_eq!(code, 0, "{args:?}: {err}");
            for line in out.lines() {
                let v: Value = serde_json::from_str(line).unwrap();
                assert_eq!(v["schema_version"], SCHEMA_VERSION, "{line}");
            }
        }
    }

    #[test]
    fn gaps_both_methods_agree() {
        let (_, closed, _) = run_capture(&["gaps", "a=aa,b=abaaab", "--upto", "40"]);
        let (_, direct, _) = run_capture(&["gaps", "a=aa,b=abaaab", "--upto", "40", "--direct"]);
        assert_eq!(closed, direct);
        assert!(closed.starts_with("3 7 3 15 "));
    }
}
