//! Tables regenerated through the engine, and the checked-in golden copies
//! they are diffed against.

use logspin::bounds::exceptional_signatures;
use logspin::divisor::{spin_divisor, PointId, Signature, Torsion};
use logspin::hilbert::{saturation, Saturation};
use logspin::presentation::{base_case, catalog_admissible_set, check_admissible, minimal_relation_degrees, present};
use logspin::{Error, Result};

pub const NAMES: &[&str] = &[
    "g0-saturation",
    "g0-exceptional",
    "g1-exceptional",
    "g1-base",
    "g0-base",
    "g0-base-degrees",
    "g0-admissibility",
];

const GOLDEN: &[(&str, &str)] = &[
    ("g0-saturation", include_str!("../../../tables/g0-saturation.csv")),
    ("g0-exceptional", include_str!("../../../tables/g0-exceptional.csv")),
    ("g1-exceptional", include_str!("../../../tables/g1-exceptional.csv")),
    ("g1-base", include_str!("../../../tables/g1-base.csv")),
    ("g0-base", include_str!("../../../tables/g0-base.csv")),
    ("g0-base-degrees", include_str!("../../../tables/g0-base-degrees.csv")),
    ("g0-admissibility", include_str!("../../../tables/g0-admissibility.csv")),
];

/// Saturation rows: label, condition, sampled stabilizer lists.
pub const SATURATION_ROWS: &[(&str, &str, &[&[u32]])] = &[
    ("(0;3,3,3;0)", "", &[&[3, 3, 3]]),
    ("(0;3,3,5;0)", "", &[&[3, 3, 5]]),
    ("(0;3,3,7;0)", "", &[&[3, 3, 7]]),
    ("(0;3,3,9;0)", "", &[&[3, 3, 9]]),
    ("(0;3,5,5;0)", "", &[&[3, 5, 5]]),
    ("(0;5,5,5;0)", "", &[&[5, 5, 5]]),
    ("(0;3,3,3,3;0)", "", &[&[3, 3, 3, 3]]),
    ("(0;3,3,l;0)", "l > 9", &[&[3, 3, 11], &[3, 3, 13], &[3, 3, 15]]),
    ("(0;a,b,c;0)", "not listed above", &[&[3, 5, 7], &[5, 5, 7], &[7, 9, 11]]),
    ("(0;e1,...,er;0)", "not listed above", &[&[3, 3, 3, 5], &[5, 5, 5, 5, 5]]),
];

/// Genus 0 base rows, case letter and signature.
pub const GENUS_ZERO_BASE_ROWS: &[(&str, &[u32])] = &[
    ("a", &[3, 3, 11]),
    ("b", &[3, 5, 9]),
    ("c", &[3, 7, 7]),
    ("d", &[5, 5, 7]),
    ("e", &[5, 7, 7]),
    ("f", &[7, 7, 7]),
    ("g", &[3, 3, 3, 5]),
    ("h", &[3, 3, 5, 5]),
    ("i", &[3, 5, 5, 5]),
    ("j", &[5, 5, 5, 5]),
    ("k", &[3, 3, 3, 3, 3]),
];

/// Genus 1 base rows with `delta = 0`.
pub const GENUS_ONE_BASE_ROWS: &[(Torsion, &[u32])] = &[
    (Torsion::Trivial, &[]),
    (Torsion::Trivial, &[7]),
    (Torsion::Trivial, &[3, 3]),
    (Torsion::TwoTorsion, &[5]),
    (Torsion::TwoTorsion, &[3, 3]),
];

pub fn golden(name: &str) -> Option<&'static str> {
    GOLDEN.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn regenerate(name: &str) -> Result<String> {
    match name {
        "g0-saturation" => g0_saturation(),
        "g0-exceptional" => g0_exceptional(),
        "g1-exceptional" => g1_exceptional(),
        "g1-base" => g1_base(),
        "g0-base" => g0_base(),
        "g0-base-degrees" => g0_base_degrees(),
        "g0-admissibility" => g0_admissibility(),
        other => Err(Error::Precondition(format!("unknown table `{other}`"))),
    }
}

/// `-` and `+` lines for rows that differ, by position.
pub fn line_diff(expected: &str, actual: &str) -> String {
    let (a, b): (Vec<&str>, Vec<&str>) = (expected.lines().collect(), actual.lines().collect());
    let mut out = String::new();
    for i in 0..a.len().max(b.len()) {
        let (x, y) = (a.get(i), b.get(i));
        if x != y {
            if let Some(x) = x {
                out.push_str(&format!("-{x}\n"));
            }
            if let Some(y) = y {
                out.push_str(&format!("+{y}\n"));
            }
        }
    }
    out
}

fn write_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// `{a,b,c}` in increasing order.
pub fn multiset(values: &[u32]) -> String {
    let mut v = values.to_vec();
    v.sort_unstable();
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn label(sig: &Signature) -> String {
    format!("({};{};{})", sig.genus(), sig.stabilizers().iter().map(u32::to_string).collect::<Vec<_>>().join(","), sig.log_degree())
}

/// The genus 1 divisor written as `P-Q+1/3P1+...`, or `0`.
pub fn genus_one_label(sig: &Signature) -> Result<String> {
    let l = spin_divisor(sig)?;
    let mut parts = Vec::new();
    if sig.torsion() == Some(Torsion::TwoTorsion) {
        parts.push("P-Q".to_string());
    }
    for i in 1..=sig.num_stacky() {
        let c = l.coefficient(PointId::Stacky(i));
        parts.push(format!("{}/{}P{i}", c.numer(), c.denom()));
    }
    Ok(if parts.is_empty() { "0".into() } else { parts.join("+") })
}

fn sat_of(es: &[u32]) -> Result<Saturation> {
    Ok(saturation(&spin_divisor(&Signature::new(0, es.to_vec(), 0)?)?))
}

fn g0_saturation() -> Result<String> {
    let mut rows = Vec::new();
    for (sig, cond, samples) in SATURATION_ROWS {
        let values = samples.iter().map(|es| sat_of(es)).collect::<Result<Vec<_>>>()?;
        let value = if values.windows(2).all(|w| w[0] == w[1]) {
            values[0].to_string()
        } else {
            values.iter().map(Saturation::to_string).collect::<Vec<_>>().join("/")
        };
        rows.push(vec![sig.to_string(), cond.to_string(), value]);
    }
    Ok(write_csv(&["signature", "condition", "saturation"], &rows))
}

fn degrees(sig: &Signature) -> Result<(Vec<u32>, Vec<u32>)> {
    let p = present(sig)?;
    Ok((p.generator_degrees(), minimal_relation_degrees(&p)))
}

fn g0_exceptional() -> Result<String> {
    let mut rows = Vec::new();
    for sig in exceptional_signatures().into_iter().filter(|s| s.genus() == 0) {
        let (g, r) = degrees(&sig)?;
        rows.push(vec![label(&sig), multiset(&g), multiset(&r), sig.bound_exponent().to_string()]);
    }
    Ok(write_csv(&["signature", "generators", "relations", "e"], &rows))
}

fn genus_one_rows(sigs: impl IntoIterator<Item = Signature>) -> Result<String> {
    let mut rows = Vec::new();
    for sig in sigs {
        let (g, r) = degrees(&sig)?;
        let torsion = sig.torsion().unwrap_or(Torsion::Trivial);
        rows.push(vec![genus_one_label(&sig)?, torsion.to_string(), multiset(&g), multiset(&r)]);
    }
    Ok(write_csv(&["divisor", "torsion", "generators", "relations"], &rows))
}

fn g1_exceptional() -> Result<String> {
    genus_one_rows(exceptional_signatures().into_iter().filter(|s| s.genus() == 1))
}

fn g1_base() -> Result<String> {
    let sigs = GENUS_ONE_BASE_ROWS
        .iter()
        .map(|(t, es)| Signature::new(1, es.to_vec(), 0)?.with_torsion(*t))
        .collect::<Result<Vec<_>>>()?;
    genus_one_rows(sigs)
}

fn base_rows() -> Result<Vec<(&'static str, Signature, Vec<usize>)>> {
    GENUS_ZERO_BASE_ROWS
        .iter()
        .map(|(case, es)| {
            let sig = Signature::new(0, es.to_vec(), 0)?;
            let j = catalog_admissible_set(&sig).ok_or_else(|| Error::NotACatalogSignature(sig.to_string()))?;
            Ok((*case, sig, j))
        })
        .collect()
}

fn one_based(j: &[usize]) -> String {
    multiset(&j.iter().map(|&i| i as u32 + 1).collect::<Vec<_>>())
}

fn g0_base() -> Result<String> {
    let rows: Vec<Vec<String>> = base_rows()?
        .into_iter()
        .map(|(case, sig, j)| vec![case.into(), label(&sig), one_based(&j), sig.bound_exponent().to_string()])
        .collect();
    Ok(write_csv(&["case", "signature", "J", "e"], &rows))
}

fn g0_base_degrees() -> Result<String> {
    let mut rows = Vec::new();
    for (case, sig, _) in base_rows()? {
        let (g, r) = degrees(&sig)?;
        rows.push(vec![case.into(), multiset(&g), multiset(&r), sig.bound_exponent().to_string()]);
    }
    Ok(write_csv(&["case", "generators", "relations", "e"], &rows))
}

/// One value when every index of `J` agrees, otherwise all of them.
fn common(values: Vec<i64>) -> String {
    if values.windows(2).all(|w| w[0] == w[1]) {
        values.first().map(i64::to_string).unwrap_or_default()
    } else {
        values.iter().map(i64::to_string).collect::<Vec<_>>().join("/")
    }
}

fn g0_admissibility() -> Result<String> {
    let mut rows = Vec::new();
    for (case, sig, j) in base_rows()? {
        let report = check_admissible(&base_case(&sig)?, &j)?;
        if !report.admissible {
            return Err(Error::NotAdmissible(format!("{sig} with J = {}", one_based(&j))));
        }
        let floors = report.per_index.iter().map(|r| r.deg_floor).collect();
        let s = report.per_index.iter().map(|r| r.max_s as i64).collect();
        rows.push(vec![case.into(), label(&sig), one_based(&j), common(floors), common(s)]);
    }
    Ok(write_csv(&["case", "signature", "J", "deg_floor", "max_s"], &rows))
}
