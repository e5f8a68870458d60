//! Choosing a base case and the inductive steps for a signature.

use super::catalog::{entry, genus_zero_seed};
use super::raise::raise_orders;
use super::sat::{add_point_sat1, add_point_sat2, add_point_sat3};
use super::Presentation;
use crate::bounds::degree_bounds;
use crate::divisor::{Signature, Torsion};
use crate::error::{Error, Result};
use crate::verify::{default_cutoff, verify_presentation};

/// Genus 0 base rows with the length of the prefix that must match exactly.
const GENUS_ZERO_BASES: &[(&[u32], usize)] = &[
    (&[3, 3, 11], 2),
    (&[3, 5, 9], 2),
    (&[3, 7, 7], 1),
    (&[5, 5, 7], 2),
    (&[5, 7, 7], 1),
    (&[7, 7, 7], 0),
    (&[3, 3, 3, 5], 3),
    (&[3, 3, 5, 5], 2),
    (&[3, 5, 5, 5], 1),
    (&[5, 5, 5, 5], 0),
];

/// A verified presentation for a genus 0 or 1 signature.
///
/// `delta > 0` starts from `k[u]` (genus 0) or the Weierstrass ring
/// (genus 1), adds log points and then each stacky point by sat-1.
/// `delta = 0` starts from a stored base case, adds order 3 points by
/// sat-3 or sat-2 where needed, and raises trailing blocks of stabilizer
/// orders. Exceptional signatures return their stored presentation.
pub fn present(sig: &Signature) -> Result<Presentation> {
    if sig.genus() >= 2 {
        return Err(Error::UnsupportedGenus(Box::new(degree_bounds(sig))));
    }
    sig.validate()?;
    let p = route(sig)?;
    if p.signature() != sig {
        return Err(Error::HypothesisFailure {
            degree: 0,
            detail: format!("routing {sig} ended at {}", p.signature()),
        });
    }
    let report = verify_presentation(&p, default_cutoff(&p));
    if let Some(k) = report.first_mismatch {
        let (expected, counted) = report.per_degree[k];
        return Err(Error::HypothesisFailure {
            degree: k as u32,
            detail: format!("{sig}: {counted} standard monomials, h0 = {expected}"),
        });
    }
    Ok(p)
}

fn route(sig: &Signature) -> Result<Presentation> {
    if sig.log_degree() > 0 {
        return effective_chain(sig);
    }
    let es = sig.stabilizers();
    let r = es.len();
    let first_above_three = es.iter().position(|&e| e > 3).unwrap_or(r);
    if sig.genus() == 0 {
        if r <= 2 {
            return Presentation::trivial(sig.clone());
        }
        if let Ok(e) = entry(sig) {
            if e.exceptional {
                return Ok(e.presentation());
            }
        }
        if r <= 4 {
            let (base, t) = GENUS_ZERO_BASES
                .iter()
                .find(|(base, t)| {
                    base.len() == r && base[..*t] == es[..*t] && es[*t..].iter().zip(&base[*t..]).all(|(a, b)| a >= b)
                })
                .ok_or_else(|| Error::NotACatalogSignature(format!("no base row below {sig}")))?;
            let start = entry(&Signature::new(0, base.to_vec(), 0)?)?.presentation();
            return corollary(start, es, *t);
        }
        let mut p = entry(&Signature::new(0, vec![3; 5], 0)?)?.presentation();
        for _ in 5..r {
            p = add_point_sat3(&p)?;
        }
        return corollary(p, es, first_above_three);
    }
    let torsion = sig.torsion().unwrap_or(Torsion::Trivial);
    let stored = |es: &[u32]| -> Result<Presentation> {
        let mut base = Signature::new(1, es.to_vec(), 0)?;
        if torsion == Torsion::TwoTorsion {
            base = base.with_torsion(Torsion::TwoTorsion)?;
        }
        Ok(entry(&base)?.presentation())
    };
    if let Ok(e) = entry(sig) {
        if e.exceptional {
            return Ok(e.presentation());
        }
    }
    match torsion {
        Torsion::TwoTorsion => {
            if r == 1 {
                return corollary(stored(&[5])?, es, 0);
            }
            let mut p = stored(&[3, 3])?;
            for _ in 2..r {
                p = add_point_sat2(&p)?;
            }
            corollary(p, es, first_above_three)
        }
        Torsion::Trivial => match r {
            0 => stored(&[]),
            1 => corollary(stored(&[7])?, es, 0),
            2 if es[0] == 3 && es[1] <= 5 => stored(es),
            2 if es[0] == 3 => corollary(stored(&[3, 7])?, es, 1),
            2 => corollary(stored(&[5, 5])?, es, 0),
            _ => {
                let mut p = stored(&[3, 3, 3])?;
                for _ in 3..r {
                    p = add_point_sat1(&p, 1, 3)?;
                    p.shared_partner = Some(p.num_generators() - 1);
                    p.partners.clear();
                }
                corollary(p, es, first_above_three)
            }
        },
    }
}

/// Raises `J = {i, ..., r-1}` for `i = t, ..., r-1` until the stabilizers
/// reach `target`.
fn corollary(mut p: Presentation, target: &[u32], t: usize) -> Result<Presentation> {
    let r = target.len();
    for i in t..r {
        while p.signature().stabilizers()[i] < target[i] {
            let j: Vec<usize> = (i..r).collect();
            p = raise_orders(&p, &j)?;
        }
    }
    Ok(p)
}

/// `delta > 0`: seed, log points by sat-1 with `1/1`, then each stacky
/// point in increasing order by sat-1 with `(e-1)/2 / e`.
fn effective_chain(sig: &Signature) -> Result<Presentation> {
    let mut p = match sig.genus() {
        0 => genus_zero_seed(),
        _ => entry(&Signature::new(1, Vec::new(), 2)?)?.presentation(),
    };
    for _ in 1..sig.log_degree() / 2 {
        p = add_point_sat1(&p, 1, 1)?;
    }
    for &e in sig.stabilizers() {
        p = add_point_sat1(&p, (e - 1) / 2, e)?;
    }
    Ok(p)
}
