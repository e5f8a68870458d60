//! Command-line front end: argument parsing, JSON/CSV rendering and exit
//! codes. Table regeneration lives in [`tables`], the corpus runner in
//! [`corpus`].

pub mod corpus;
pub mod tables;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;

use logspin::bounds::{degree_bounds, modular_form_bounds, BoundsReport};
use logspin::cone::cone_primitives;
use logspin::divisor::{spin_divisor, DivisorTerm, Signature, Theta, Torsion};
use logspin::hilbert::{hilbert_function, hilbert_series, saturation, RationalSeries, Saturation};
use logspin::presentation::{present, PresentationSummary};
use logspin::verify::{default_cutoff, verify_presentation};
use logspin::Error;

pub use corpus::{run_corpus, CorpusRecord, CorpusReport, CorpusSpec};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "logspin", version, about = "Log spin canonical rings of stacky curves")]
pub struct Cli {
    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    pub csv: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SignatureArgs {
    /// `g;e1,...,er;delta[;torsion=t][;theta=v]`
    pub signature: String,
    /// Torsion class of `L_X` in genus 1 with `delta = 0`.
    #[arg(long)]
    pub torsion: Option<String>,
    /// `h^0(L)` in genus at least 2: `generic` or a dimension.
    #[arg(long)]
    pub theta: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions `h^0(floor(kL))` for `k <= K` and the Hilbert series.
    Hilbert {
        #[command(flatten)]
        sig: SignatureArgs,
        #[arg(long = "K", default_value_t = 30)]
        k: usize,
    },
    /// Least `s` with `deg floor(kL) >= 0` for all `k >= s`.
    Saturation {
        #[command(flatten)]
        sig: SignatureArgs,
    },
    /// Generator and relation degree bounds.
    Bounds {
        #[command(flatten)]
        sig: SignatureArgs,
    },
    /// Weight bounds for a ring of modular forms.
    Modular {
        #[command(flatten)]
        sig: SignatureArgs,
        /// The ring has forms of odd weight.
        #[arg(long)]
        odd_forms: bool,
    },
    /// A verified presentation (genus 0 and 1), or bounds otherwise.
    Present {
        #[command(flatten)]
        sig: SignatureArgs,
    },
    /// Standard monomial counts against `h^0` up to `K`.
    Verify {
        #[command(flatten)]
        sig: SignatureArgs,
        #[arg(long = "K")]
        k: Option<usize>,
    },
    /// Minimal generators of the cone `0 <= y <= (a/b) x`.
    Cone {
        /// `a/b`
        fraction: String,
    },
    /// Regenerate a table as CSV.
    Tables {
        #[arg(long, default_value = "all")]
        which: String,
        /// Diff against the checked-in golden file instead of printing.
        #[arg(long)]
        check: bool,
    },
    /// Present, verify and check bounds over a range of signatures.
    Corpus {
        #[arg(long, value_delimiter = ',', default_values_t = [0u32, 1])]
        genus: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_values_t = [3u32, 5, 7, 9, 11, 13])]
        orders: Vec<u32>,
        #[arg(long, default_value_t = 6)]
        max_points: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [0u32, 2, 4])]
        delta: Vec<u32>,
        /// Keep only the exceptional signatures.
        #[arg(long)]
        exceptional_only: bool,
    },
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::HypothesisFailure { .. } => EXIT_MISMATCH,
            Error::Parse { .. } => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Runs the CLI on `argv` (including the program name), writing the payload
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn parse_signature(args: &SignatureArgs, check: bool) -> Result<Signature, Failure> {
    let mut sig = Signature::parse_unchecked(&args.signature)?;
    if let Some(t) = &args.torsion {
        sig = sig.with_torsion(t.parse::<Torsion>()?)?;
    }
    if let Some(v) = &args.theta {
        sig = sig.with_theta(v.parse::<Theta>()?)?;
    }
    if check {
        sig.validate()?;
    }
    Ok(sig)
}

fn json<T: Serialize>(command: &str, body: T) -> String {
    let env = Envelope { schema_version: SCHEMA_VERSION, command, body };
    let mut s = serde_json::to_string_pretty(&env).expect("payload serializes");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct HilbertOut {
    input: String,
    signature: String,
    cutoff: usize,
    divisor: Vec<DivisorTerm>,
    dims: Vec<u64>,
    series: RationalSeries,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta: Option<&'static str>,
}

#[derive(Serialize)]
struct SaturationOut {
    input: String,
    signature: String,
    saturation: Saturation,
}

#[derive(Serialize)]
struct BoundsOut {
    input: String,
    signature: String,
    #[serde(flatten)]
    report: BoundsReport,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PresentOut {
    input: String,
    supported: bool,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    presentation: Option<PresentationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsReport>,
}

#[derive(Serialize)]
struct DegreeRow {
    k: usize,
    expected: u64,
    counted: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerifyOut {
    input: String,
    signature: String,
    cutoff: usize,
    per_degree: Vec<DegreeRow>,
    first_mismatch: Option<usize>,
    pass: bool,
}

#[derive(Serialize)]
struct ConeOut {
    alpha: u32,
    beta: u32,
    primitives: Vec<(u32, u32)>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CorpusOut {
    total: usize,
    exceptional: usize,
    verified: usize,
    failures: Vec<CorpusRecord>,
}

fn dispatch(cli: &Cli) -> Result<(String, i32), Failure> {
    let csv = cli.csv;
    match &cli.command {
        Command::Hilbert { sig, k } => {
            let s = parse_signature(sig, true)?;
            let l = spin_divisor(&s)?;
            let dims = hilbert_function(&l, *k).dims;
            if csv {
                let rows = dims.iter().enumerate().map(|(k, d)| vec![k.to_string(), d.to_string()]).collect();
                return Ok((csv_text(&["k", "h0"], rows), EXIT_OK));
            }
            let theta = (s.genus() >= 2 && s.theta() == Some(Theta::Generic)).then_some("generic theta");
            let body = HilbertOut {
                input: sig.signature.clone(),
                signature: s.to_string(),
                cutoff: *k,
                divisor: l.to_terms(),
                dims,
                series: hilbert_series(&l, *k)?,
                theta,
            };
            Ok((json("hilbert", body), EXIT_OK))
        }
        Command::Saturation { sig } => {
            let s = parse_signature(sig, true)?;
            let sat = saturation(&spin_divisor(&s)?);
            if csv {
                return Ok((csv_text(&["signature", "saturation"], vec![vec![s.to_string(), sat.to_string()]]), EXIT_OK));
            }
            let body = SaturationOut { input: sig.signature.clone(), signature: s.to_string(), saturation: sat };
            Ok((json("saturation", body), EXIT_OK))
        }
        Command::Bounds { sig } => {
            let s = parse_signature(sig, true)?;
            bounds_output("bounds", sig, &s, degree_bounds(&s), csv)
        }
        Command::Modular { sig, odd_forms } => {
            let s = parse_signature(sig, false)?;
            let report = modular_form_bounds(&s, *odd_forms)?;
            bounds_output("modular", sig, &s, report, csv)
        }
        Command::Present { sig } => {
            let s = parse_signature(sig, true)?;
            let out = match present(&s) {
                Ok(p) => PresentOut {
                    input: sig.signature.clone(),
                    supported: true,
                    presentation: Some(p.summary()),
                    bounds: None,
                },
                Err(Error::UnsupportedGenus(report)) => PresentOut {
                    input: sig.signature.clone(),
                    supported: false,
                    presentation: None,
                    bounds: Some(*report),
                },
                Err(e) => return Err(e.into()),
            };
            if csv {
                let Some(p) = out.presentation else {
                    let b = out.bounds.expect("bounds when unsupported");
                    return Ok((bounds_csv(&s, &b), EXIT_OK));
                };
                let rows = p
                    .generators
                    .iter()
                    .map(|g| {
                        let poles: Vec<String> = g.pole_orders.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        vec![g.name.clone(), g.degree.to_string(), poles.join(" ")]
                    })
                    .collect();
                return Ok((csv_text(&["name", "degree", "poleOrders"], rows), EXIT_OK));
            }
            Ok((json("present", out), EXIT_OK))
        }
        Command::Verify { sig, k } => {
            let s = parse_signature(sig, true)?;
            let p = present(&s)?;
            let cutoff = k.unwrap_or_else(|| default_cutoff(&p));
            let report = verify_presentation(&p, cutoff);
            let code = if report.pass { EXIT_OK } else { EXIT_MISMATCH };
            let per_degree: Vec<DegreeRow> = report
                .per_degree
                .iter()
                .enumerate()
                .map(|(k, &(expected, counted))| DegreeRow { k, expected, counted })
                .collect();
            if csv {
                let rows = per_degree
                    .iter()
                    .map(|r| vec![r.k.to_string(), r.expected.to_string(), r.counted.to_string()])
                    .collect();
                return Ok((csv_text(&["k", "expected", "counted"], rows), code));
            }
            let body = VerifyOut {
                input: sig.signature.clone(),
                signature: s.to_string(),
                cutoff,
                per_degree,
                first_mismatch: report.first_mismatch,
                pass: report.pass,
            };
            Ok((json("verify", body), code))
        }
        Command::Cone { fraction } => {
            let (a, b) = fraction.split_once('/').ok_or_else(|| usage(format!("expected a/b, got `{fraction}`")))?;
            let alpha: u32 = a.trim().parse().map_err(|_| usage(format!("bad numerator `{a}`")))?;
            let beta: u32 = b.trim().parse().map_err(|_| usage(format!("bad denominator `{b}`")))?;
            let primitives: Vec<(u32, u32)> =
                cone_primitives(alpha, beta)?.into_iter().map(|p| (p.degree, p.pole)).collect();
            if csv {
                let rows = primitives.iter().map(|&(k, c)| vec![k.to_string(), c.to_string()]).collect();
                return Ok((csv_text(&["k", "c"], rows), EXIT_OK));
            }
            Ok((json("cone", ConeOut { alpha, beta, primitives }), EXIT_OK))
        }
        Command::Tables { which, check } => {
            let names: Vec<&str> = if which == "all" {
                tables::NAMES.to_vec()
            } else {
                let name = tables::NAMES
                    .iter()
                    .find(|n| *n == which)
                    .ok_or_else(|| usage(format!("unknown table `{which}`; one of {}", tables::NAMES.join(", "))))?;
                vec![name]
            };
            let mut text = String::new();
            let mut code = EXIT_OK;
            for (i, name) in names.iter().enumerate() {
                let table = tables::regenerate(name)?;
                if *check {
                    let golden = tables::golden(name).expect("every name has a golden file");
                    let status = if table == golden { "ok" } else { "DIFFERS" };
                    if table != golden {
                        code = EXIT_MISMATCH;
                    }
                    text.push_str(&format!("{name}: {status}\n"));
                    if table != golden {
                        text.push_str(&tables::line_diff(golden, &table));
                    }
                    continue;
                }
                if names.len() > 1 {
                    if i > 0 {
                        text.push('\n');
                    }
                    text.push_str(&format!("# {name}\n"));
                }
                text.push_str(&table);
            }
            Ok((text, code))
        }
        Command::Corpus { genus, orders, max_points, delta, exceptional_only } => {
            let spec = CorpusSpec {
                genera: genus.clone(),
                orders: orders.clone(),
                max_points: *max_points,
                deltas: delta.clone(),
                exceptional_only: *exceptional_only,
            };
            let report = run_corpus(&spec);
            let code = if report.failures().next().is_none() { EXIT_OK } else { EXIT_MISMATCH };
            let failures: Vec<CorpusRecord> = report.failures().cloned().collect();
            if csv {
                let rows = failures
                    .iter()
                    .map(|r| vec![r.signature.clone(), r.failure.clone().unwrap_or_default()])
                    .collect();
                return Ok((csv_text(&["signature", "failure"], rows), code));
            }
            let body = CorpusOut {
                total: report.records.len(),
                exceptional: report.records.iter().filter(|r| r.exceptional).count(),
                verified: report.records.iter().filter(|r| r.verified).count(),
                failures,
            };
            Ok((json("corpus", body), code))
        }
    }
}

fn bounds_csv(s: &Signature, b: &BoundsReport) -> String {
    let row = vec![
        s.to_string(),
        b.e.to_string(),
        b.gen_bound.to_string(),
        b.rel_bound.to_string(),
        b.exceptional.is_some().to_string(),
        b.note.clone().unwrap_or_default(),
    ];
    csv_text(&["signature", "e", "genBound", "relBound", "exceptional", "note"], vec![row])
}

fn bounds_output(
    command: &str,
    args: &SignatureArgs,
    s: &Signature,
    report: BoundsReport,
    csv: bool,
) -> Result<(String, i32), Failure> {
    if csv {
        return Ok((bounds_csv(s, &report), EXIT_OK));
    }
    let body = BoundsOut { input: args.signature.clone(), signature: s.to_string(), report };
    Ok((json(command, body), EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("logspin").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn payload(args: &[&str]) -> serde_json::Value {
        let (code, out, err) = cli(args);
        assert_eq!(code, EXIT_OK, "{err}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn present_reports_relation_degrees() {
        let v = payload(&["present", "0;3,7,7;0"]);
        assert_eq!(v["schemaVersion"], 1);
        assert_eq!(v["relationDegrees"], serde_json::json!([10, 14]));
        assert_eq!(v["generators"][2]["poleOrders"], serde_json::json!({"P1": 2, "P2": 3, "P3": 2}));
        assert_eq!(v["exceptional"], false);
    }

    #[test]
    fn stabilizers_are_sorted_and_the_input_echoed() {
        let v = payload(&["saturation", "0;7,3,7;0"]);
        assert_eq!(v["input"], "0;7,3,7;0");
        assert_eq!(v["signature"], "0;3,7,7;0");
        assert_eq!(v["saturation"], 5);
        assert_eq!(payload(&["saturation", "0;3,3,3;0"])["saturation"], "inf");
    }

    #[test]
    fn verify_exits_zero_on_agreement() {
        let (code, out, _) = cli(&["verify", "0;3,3,5;0", "--K", "40"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["perDegree"].as_array().unwrap().len(), 41);
        let (code, out, _) = cli(&["--csv", "verify", "1;;2", "--K", "3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "k,expected,counted\n0,1,1\n1,1,1\n2,2,2\n3,3,3\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli(&["hilbert", "0;4;0"]).0, EXIT_DOMAIN);
        assert_eq!(cli(&["hilbert", "0;3;1"]).0, EXIT_DOMAIN);
        assert_eq!(cli(&["hilbert", "zero"]).0, EXIT_USAGE);
        assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(cli(&["hilbert", "0;3;0", "--K", "-1"]).0, EXIT_USAGE);
        assert_eq!(cli(&["cone", "2/4"]).0, EXIT_DOMAIN);
        assert_eq!(cli(&["cone", "two"]).0, EXIT_USAGE);
        assert_eq!(cli(&["tables", "--which", "nope"]).0, EXIT_USAGE);
        assert_eq!(cli(&["present", "0;3;0", "--torsion", "two-torsion"]).0, EXIT_DOMAIN);
        assert_eq!(cli(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn output_is_deterministic() {
        for args in [&["present", "1;3,3,5;0;torsion=two-torsion"][..], &["hilbert", "2;3,5;2"], &["tables"]] {
            assert_eq!(cli(args), cli(args));
        }
    }

    #[test]
    fn hilbert_payload() {
        let v = payload(&["hilbert", "0;3,7,7;0", "--K", "14"]);
        assert_eq!(v["dims"], serde_json::json!([1, 0, 0, 1, 0, 1, 1, 2, 1, 1, 2, 1, 3, 2, 3]));
        assert_eq!(v["divisor"][0], serde_json::json!({"point": "inf", "num": -1, "den": 1}));
        assert_eq!(v["series"]["denominator"], serde_json::json!([[1, 2], [3, 1], [7, 2]]));
        let v = payload(&["hilbert", "2;;0", "--K", "3"]);
        assert_eq!(v["theta"], "generic theta");
        let v = payload(&["hilbert", "2;;0", "--theta", "1", "--K", "3"]);
        assert!(v.get("theta").is_none());
    }

    #[test]
    fn bounds_and_modular() {
        let v = payload(&["bounds", "0;3,3,5;0"]);
        assert_eq!((v["genBound"].clone(), v["relBound"].clone()), (15.into(), 30.into()));
        assert_eq!(v["exceptional"]["generatorDegrees"], serde_json::json!([3, 10, 15]));
        let v = payload(&["modular", "0;2,3;2"]);
        assert_eq!((v["genBound"].clone(), v["relBound"].clone()), (18.into(), 36.into()));
        assert!(v["note"].is_string());
        let v = payload(&["modular", "1;3,3;2", "--odd-forms"]);
        assert_eq!((v["genBound"].clone(), v["relBound"].clone()), (5.into(), 10.into()));
        assert_eq!(cli(&["modular", "0;2,3;2", "--odd-forms"]).0, EXIT_DOMAIN);
    }

    #[test]
    fn higher_genus_presentation_falls_back_to_bounds() {
        let v = payload(&["present", "3;5;2"]);
        assert_eq!(v["supported"], false);
        assert_eq!(v["bounds"]["genBound"], 5);
    }

    #[test]
    fn cone_pairs() {
        let (code, out, _) = cli(&["--csv", "cone", "3/7"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "k,c\n3,1\n5,2\n7,3\n");
        assert_eq!(payload(&["cone", "1/1"])["primitives"], serde_json::json!([[1, 1]]));
    }

    #[test]
    fn saturation_table_matches_golden() {
        let (code, out, _) = cli(&["tables", "--which", "g0-saturation"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, tables::golden("g0-saturation").unwrap());
    }

    #[test]
    fn exceptional_corpus_through_the_cli() {
        let v = payload(&["corpus", "--exceptional-only"]);
        assert_eq!(v["total"], 14);
        assert_eq!(v["exceptional"], 14);
        assert_eq!(v["verified"], 14);
        assert_eq!(v["failures"], serde_json::json!([]));
    }
}
