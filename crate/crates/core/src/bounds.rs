//! Degree bounds for generators and relations, the exceptional signatures,
//! and the modular forms front end.

use serde::Serialize;

use crate::divisor::{Signature, Torsion};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    LogSpin,
    ModularEven,
    ModularOdd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExceptionalRow {
    pub label: &'static str,
    pub generator_degrees: Vec<u32>,
    pub relation_degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundsReport {
    pub e: u32,
    pub gen_bound: u32,
    pub rel_bound: u32,
    pub exceptional: Option<ExceptionalRow>,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

struct Row {
    genus: u32,
    torsion: Option<Torsion>,
    stabilizers: &'static [u32],
    label: &'static str,
    gens: &'static [u32],
    rels: &'static [u32],
}

const EXCEPTIONAL: &[Row] = &[
    Row { genus: 0, torsion: None, stabilizers: &[3, 3, 3], label: "(0;3,3,3;0)", gens: &[3], rels: &[] },
    Row { genus: 0, torsion: None, stabilizers: &[3, 3, 5], label: "(0;3,3,5;0)", gens: &[3, 10, 15], rels: &[30] },
    Row { genus: 0, torsion: None, stabilizers: &[3, 3, 7], label: "(0;3,3,7;0)", gens: &[3, 7, 12], rels: &[24] },
    Row { genus: 0, torsion: None, stabilizers: &[3, 3, 9], label: "(0;3,3,9;0)", gens: &[3, 7, 9], rels: &[21] },
    Row { genus: 0, torsion: None, stabilizers: &[3, 5, 5], label: "(0;3,5,5;0)", gens: &[3, 5, 10], rels: &[20] },
    Row { genus: 0, torsion: None, stabilizers: &[3, 5, 7], label: "(0;3,5,7;0)", gens: &[3, 5, 7], rels: &[17] },
    Row { genus: 0, torsion: None, stabilizers: &[5, 5, 5], label: "(0;5,5,5;0)", gens: &[3, 5, 5], rels: &[15] },
    Row { genus: 0, torsion: None, stabilizers: &[3, 3, 3, 3], label: "(0;3,3,3,3;0)", gens: &[3, 3, 4], rels: &[12] },
    Row { genus: 1, torsion: Some(Torsion::TwoTorsion), stabilizers: &[], label: "P-Q", gens: &[2], rels: &[] },
    Row { genus: 1, torsion: Some(Torsion::TwoTorsion), stabilizers: &[3], label: "P-Q+1/3P1", gens: &[2, 3, 7], rels: &[14] },
    Row { genus: 1, torsion: Some(Torsion::TwoTorsion), stabilizers: &[5], label: "P-Q+2/5P1", gens: &[2, 3, 5], rels: &[12] },
    Row { genus: 1, torsion: Some(Torsion::Trivial), stabilizers: &[3], label: "1/3P1", gens: &[1, 6, 9], rels: &[18] },
    Row { genus: 1, torsion: Some(Torsion::Trivial), stabilizers: &[5], label: "2/5P1", gens: &[1, 5, 8], rels: &[16] },
    Row { genus: 1, torsion: Some(Torsion::Trivial), stabilizers: &[7], label: "3/7P1", gens: &[1, 5, 7], rels: &[15] },
];

/// The exceptional row for a signature, matched after sorting stabilizers
/// and, in genus 1, by torsion class. Signatures with `delta > 0` never
/// match.
pub fn is_exceptional(sig: &Signature) -> Option<ExceptionalRow> {
    if sig.log_degree() != 0 {
        return None;
    }
    EXCEPTIONAL
        .iter()
        .find(|r| r.genus == sig.genus() && r.torsion == sig.torsion() && r.stabilizers == sig.stabilizers())
        .map(|r| ExceptionalRow {
            label: r.label,
            generator_degrees: r.gens.to_vec(),
            relation_degrees: r.rels.to_vec(),
        })
}

/// Every exceptional signature.
pub fn exceptional_signatures() -> Vec<Signature> {
    EXCEPTIONAL
        .iter()
        .map(|r| {
            let sig = Signature::new(r.genus, r.stabilizers.to_vec(), 0).expect("valid");
            match r.torsion {
                Some(t) if r.genus == 1 => sig.with_torsion(t).expect("genus 1"),
                _ => sig,
            }
        })
        .collect()
}

/// `(e, 2e)` with `e = max(5, e_1, ..., e_r)`, replaced by the row's
/// maxima for exceptional signatures.
pub fn degree_bounds(sig: &Signature) -> BoundsReport {
    let e = sig.bound_exponent();
    let exceptional = is_exceptional(sig);
    let (gen_bound, rel_bound) = match &exceptional {
        Some(row) => (
            row.generator_degrees.iter().copied().max().unwrap_or(0),
            row.relation_degrees.iter().copied().max().unwrap_or(0),
        ),
        None => (e, 2 * e),
    };
    BoundsReport { e, gen_bound, rel_bound, exceptional, mode: Mode::LogSpin, note: None }
}

/// Weight bounds for a ring of modular forms with the given signature.
///
/// Without odd weight forms the bound is `(6 m, 12 m)` with
/// `m = max(3, e_1, ..., e_r)`; even stabilizers are allowed. With odd
/// weight forms the stabilizers must be odd and the log spin bounds apply.
pub fn modular_form_bounds(sig: &Signature, has_odd_forms: bool) -> Result<BoundsReport> {
    if has_odd_forms {
        sig.validate()?;
        let mut report = degree_bounds(sig);
        report.mode = Mode::ModularOdd;
        return Ok(report);
    }
    let m = sig.stabilizers().iter().copied().fold(3, u32::max);
    Ok(BoundsReport {
        e: m,
        gen_bound: 6 * m,
        rel_bound: 12 * m,
        exceptional: None,
        mode: Mode::ModularEven,
        note: Some(
            "general bound 6*max(3,e_i) / 12*max(3,e_i); sharper even-weight bounds from earlier tables are not applied"
                .into(),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn bounds_examples() {
        let b = degree_bounds(&sig("2;9;2"));
        assert_eq!((b.gen_bound, b.rel_bound), (9, 18));
        assert!(b.exceptional.is_none());
        let b = degree_bounds(&sig("0;3,3,5;0"));
        let row = b.exceptional.unwrap();
        assert_eq!(row.generator_degrees, [3, 10, 15]);
        assert_eq!(row.relation_degrees, [30]);
        let b = degree_bounds(&sig("3;;0"));
        assert_eq!((b.gen_bound, b.rel_bound), (5, 10));
    }

    #[test]
    fn exceptional_lookup() {
        let row = is_exceptional(&sig("1;3;0;torsion=two-torsion")).unwrap();
        assert_eq!(row.generator_degrees, [2, 3, 7]);
        assert_eq!(row.relation_degrees, [14]);
        assert!(is_exceptional(&sig("1;3;2")).is_none());
        assert_eq!(is_exceptional(&sig("0;9,3,3;0")).unwrap().relation_degrees, [21]);
        assert!(is_exceptional(&sig("0;3,5,9;0")).is_none());
        assert_eq!(exceptional_signatures().len(), 14);
        assert!(exceptional_signatures().iter().all(|s| is_exceptional(s).is_some()));
    }

    #[test]
    fn modular_examples() {
        let even = Signature::unchecked(0, vec![2, 3], 2);
        let b = modular_form_bounds(&even, false).unwrap();
        assert_eq!((b.gen_bound, b.rel_bound), (18, 36));
        assert!(b.note.is_some());
        let b = modular_form_bounds(&sig("1;3,3,3;4"), true).unwrap();
        assert_eq!((b.gen_bound, b.rel_bound), (5, 10));
        assert_eq!(modular_form_bounds(&even, true), Err(Error::SpinParity(2)));
        let b = modular_form_bounds(&sig("0;3,3,5;0"), true).unwrap();
        assert!(b.exceptional.is_some());
    }
}
