//! Cartesian corpus of signatures, checked in parallel.

use rayon::prelude::*;
use serde::Serialize;

use logspin::bounds::{degree_bounds, is_exceptional};
use logspin::divisor::{Signature, Torsion};
use logspin::presentation::{minimal_relation_degrees, present};
use logspin::verify::verify_presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub genera: Vec<u32>,
    /// Allowed stabilizer orders; each signature uses a multiset of them.
    pub orders: Vec<u32>,
    pub max_points: usize,
    pub deltas: Vec<u32>,
    pub exceptional_only: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            genera: vec![0, 1],
            orders: vec![3, 5, 7, 9, 11, 13],
            max_points: 6,
            deltas: vec![0, 2, 4],
            exceptional_only: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusRecord {
    pub signature: String,
    /// `max(5, e_1, ..., e_r)`.
    pub e: u32,
    pub max_stabilizer: u32,
    pub exceptional: bool,
    pub generator_degrees: Vec<u32>,
    pub relation_degrees: Vec<u32>,
    pub verify_cutoff: usize,
    pub verified: bool,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub records: Vec<CorpusRecord>,
}

impl CorpusReport {
    pub fn failures(&self) -> impl Iterator<Item = &CorpusRecord> {
        self.records.iter().filter(|r| r.failure.is_some())
    }
}

fn multisets(orders: &[u32], r: usize) -> Vec<Vec<u32>> {
    let mut orders = orders.to_vec();
    orders.sort_unstable();
    orders.dedup();
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|m: Vec<u32>| {
                let last = m.last().copied().unwrap_or(0);
                orders.iter().filter(move |&&e| e >= last).map(move |&e| {
                    let mut n = m.clone();
                    n.push(e);
                    n
                })
            })
            .collect();
    }
    out
}

/// Every signature of the corpus in a fixed order: genus, then `delta`,
/// then number of points, then stabilizers lexicographically, with both
/// torsion classes in genus 1 for `delta = 0`.
pub fn corpus_signatures(spec: &CorpusSpec) -> Vec<Result<Signature, String>> {
    let mut out = Vec::new();
    for &g in &spec.genera {
        for &delta in &spec.deltas {
            for r in 0..=spec.max_points {
                for es in multisets(&spec.orders, r) {
                    let sig = match Signature::new(g, es.clone(), delta) {
                        Ok(s) => s,
                        Err(e) => {
                            out.push(Err(format!("{g};{es:?};{delta}: {e}")));
                            continue;
                        }
                    };
                    if g == 1 && delta == 0 {
                        for t in [Torsion::Trivial, Torsion::TwoTorsion] {
                            out.push(sig.clone().with_torsion(t).map_err(|e| e.to_string()));
                        }
                    } else {
                        out.push(Ok(sig));
                    }
                }
            }
        }
    }
    if spec.exceptional_only {
        out.retain(|s| s.as_ref().is_ok_and(|s| is_exceptional(s).is_some()));
    }
    out
}

/// Presents and verifies one signature at `K = max(30, 3e)` and checks the
/// degree bounds, or the exceptional row's degrees.
pub fn check_signature(sig: &Signature) -> CorpusRecord {
    let e = sig.bound_exponent();
    let exceptional = is_exceptional(sig);
    let mut record = CorpusRecord {
        signature: sig.to_string(),
        e,
        max_stabilizer: sig.stabilizers().iter().copied().max().unwrap_or(0),
        exceptional: exceptional.is_some(),
        generator_degrees: Vec::new(),
        relation_degrees: Vec::new(),
        verify_cutoff: 30.max(3 * e as usize),
        verified: false,
        failure: None,
    };
    if sig.genus() >= 2 {
        return record;
    }
    let p = match present(sig) {
        Ok(p) => p,
        Err(err) => {
            record.failure = Some(format!("present: {err}"));
            return record;
        }
    };
    let mut gens = p.generator_degrees();
    gens.sort_unstable();
    record.generator_degrees = gens;
    record.relation_degrees = minimal_relation_degrees(&p);
    let report = verify_presentation(&p, record.verify_cutoff);
    record.verified = report.pass;
    let max_gen = record.generator_degrees.last().copied().unwrap_or(0);
    let max_rel = record.relation_degrees.last().copied().unwrap_or(0);
    record.failure = if let Some(k) = report.first_mismatch {
        let (expected, counted) = report.per_degree[k];
        Some(format!("verify: degree {k} has {counted} standard monomials, h0 = {expected}"))
    } else if let Some(row) = &exceptional {
        let mut want = row.generator_degrees.clone();
        want.sort_unstable();
        (want != record.generator_degrees || row.relation_degrees != record.relation_degrees).then(|| {
            format!(
                "exceptional degrees {:?}/{:?}, expected {:?}/{:?}",
                record.generator_degrees, record.relation_degrees, want, row.relation_degrees
            )
        })
    } else {
        let b = degree_bounds(sig);
        if max_gen > b.gen_bound {
            Some(format!("generator in degree {max_gen} > {}", b.gen_bound))
        } else if max_rel > b.rel_bound {
            Some(format!("relation in degree {max_rel} > {}", b.rel_bound))
        } else {
            None
        }
    };
    record
}

/// Checks every corpus signature on the rayon pool; records come back in
/// enumeration order.
pub fn run_corpus(spec: &CorpusSpec) -> CorpusReport {
    let sigs = corpus_signatures(spec);
    let records = sigs
        .par_iter()
        .map(|s| match s {
            Ok(sig) => check_signature(sig),
            Err(msg) => CorpusRecord {
                signature: msg.clone(),
                e: 0,
                max_stabilizer: 0,
                exceptional: false,
                generator_degrees: Vec::new(),
                relation_degrees: Vec::new(),
                verify_cutoff: 0,
                verified: false,
                failure: Some("invalid signature".into()),
            },
        })
        .collect();
    CorpusReport { records }
}
