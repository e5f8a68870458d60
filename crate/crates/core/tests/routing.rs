use std::collections::BTreeSet;

use logspin::bounds::{exceptional_signatures, is_exceptional};
use logspin::presentation::{base_case, catalog_signatures, minimal_relation_degrees, present, Presentation};
use logspin::verify::{default_cutoff, generator_necessity, verify_presentation};
use logspin::{Signature, Torsion};

fn corpus(orders: &[u32], max_r: usize, deltas: &[u32]) -> Vec<Signature> {
    let mut shapes: Vec<Vec<u32>> = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_r {
        layer = layer
            .iter()
            .flat_map(|m: &Vec<u32>| {
                orders.iter().filter(|&&e| m.last().is_none_or(|&l| e >= l)).map(move |&e| {
                    let mut n = m.clone();
                    n.push(e);
                    n
                })
            })
            .collect();
        shapes.extend(layer.iter().cloned());
    }
    let mut out = Vec::new();
    for g in 0..=1 {
        for &delta in deltas {
            for es in &shapes {
                let sig = Signature::new(g, es.clone(), delta).unwrap();
                if g == 1 && delta == 0 {
                    out.push(sig.clone().with_torsion(Torsion::Trivial).unwrap());
                    out.push(sig.with_torsion(Torsion::TwoTorsion).unwrap());
                } else {
                    out.push(sig);
                }
            }
        }
    }
    out
}

fn routed() -> Vec<(Signature, Presentation)> {
    corpus(&[3, 5, 7, 9], 4, &[0, 2])
        .into_iter()
        .map(|s| {
            let p = present(&s).unwrap_or_else(|e| panic!("{s}: {e}"));
            (s, p)
        })
        .collect()
}

#[test]
fn every_routed_signature_verifies() {
    for (s, p) in routed() {
        assert_eq!(p.signature(), &s);
        let cutoff = default_cutoff(&p).max(3 * s.bound_exponent() as usize);
        assert!(verify_presentation(&p, cutoff).pass, "{s}");
    }
}

#[test]
fn bound_violations_are_the_two_genus_one_trivial_rows() {
    let violators: BTreeSet<String> = routed()
        .into_iter()
        .filter(|(s, p)| {
            let e = s.bound_exponent();
            let rel = minimal_relation_degrees(p).into_iter().max().unwrap_or(0);
            !p.is_exceptional() && (p.max_generator_degree() > e || rel > 2 * e)
        })
        .map(|(s, _)| s.to_string())
        .collect();
    let expected: BTreeSet<String> =
        ["1;3,3;0;torsion=trivial", "1;3,5;0;torsion=trivial"].into_iter().map(String::from).collect();
    assert_eq!(violators, expected);
}

#[test]
fn odd_weight_witness_fails_only_for_trivial_rings() {
    for (s, p) in routed() {
        if s.num_stacky() == 0 {
            continue;
        }
        let witness = p.generator_degrees().iter().any(|&d| d % 2 == 1 && d <= 3);
        if p.num_generators() == 0 {
            assert!(s.genus() == 0 && s.log_degree() == 0 && s.num_stacky() <= 2, "{s}");
        } else {
            assert!(witness, "{s}: {:?}", p.generator_degrees());
        }
    }
}

#[test]
fn exceptional_routing() {
    let exceptional = exceptional_signatures();
    assert_eq!(exceptional.len(), 14);
    for s in &exceptional {
        let p = present(s).unwrap();
        assert!(p.is_exceptional(), "{s}");
        let row = is_exceptional(s).unwrap();
        let mut gens = row.generator_degrees.clone();
        gens.sort_unstable();
        assert_eq!(p.generator_degrees(), gens, "{s}");
        assert_eq!(minimal_relation_degrees(&p), row.relation_degrees, "{s}");
    }
    for s in ["0;3,5,9;0", "0;3,3,11;0", "0;3,7,7;0", "1;9;0;torsion=trivial", "1;3,3;0;torsion=two-torsion", "0;3,3,5;2"] {
        let s: Signature = s.parse().unwrap();
        assert!(!present(&s).unwrap().is_exceptional(), "{s}");
    }
}

#[test]
fn catalog_entries_verify_and_need_every_generator() {
    for s in catalog_signatures() {
        let p = base_case(&s).unwrap();
        let k = (4 * p.max_generator_degree() as usize).max(12);
        assert!(verify_presentation(&p, k).pass, "{s}");
        assert!(generator_necessity(&p, k).into_iter().all(|n| n), "{s}");
    }
}

#[test]
fn removing_a_relation_is_detected_by_its_degree() {
    for s in catalog_signatures() {
        let p = base_case(&s).unwrap();
        let k = 4 * p.max_generator_degree().max(5) as usize;
        for (i, m) in p.initial_ideal().iter().enumerate() {
            let d = p.monomial_degree(m) as usize;
            if d > k {
                continue;
            }
            let report = verify_presentation(&p.without_ideal_member(i), k);
            let first = report.first_mismatch.unwrap_or_else(|| panic!("{s}: dropping {} undetected", p.render_monomial(m)));
            assert!(first <= d, "{s}: {first} > {d}");
        }
    }
}
