use std::cmp::Ordering;
use std::collections::BTreeSet;

use proptest::prelude::*;

use logspin::cone::cone_primitives;
use logspin::divisor::{deg_floor, spin_divisor, PointId, Signature, Theta, Torsion};
use logspin::hilbert::{h0, hilbert_function, hilbert_series, saturation, Saturation};
use logspin::order::{compare, Monomial, OrderSpec, Variable, VariableTable};
use logspin::verify::standard_monomial_counts;

fn signature() -> impl Strategy<Value = Signature> {
    (0u32..4, proptest::collection::vec(prop::sample::select(vec![3u32, 5, 7, 9, 11]), 0..6), 0u32..4, any::<bool>())
        .prop_map(|(g, es, half_delta, tors)| {
            let sig = Signature::new(g, es, 2 * half_delta).unwrap();
            if g == 1 && half_delta == 0 && tors {
                sig.with_torsion(Torsion::TwoTorsion).unwrap()
            } else {
                sig
            }
        })
}

fn table(degrees: &[u32], poles: &[i64]) -> VariableTable {
    let mut t = VariableTable::new();
    for (i, (&d, &c)) in degrees.iter().zip(poles).enumerate() {
        t.push(Variable { name: format!("v{i}"), degree: d, poles: [(PointId::Stacky(1), c)].into_iter().collect() });
    }
    t
}

fn specs(n: usize, perm: &[usize]) -> Vec<OrderSpec> {
    let split = n / 2;
    vec![
        OrderSpec::Grevlex(perm.to_vec()),
        OrderSpec::GradedPLex { point: PointId::Stacky(1), vars: perm.to_vec() },
        OrderSpec::block(OrderSpec::Grevlex(perm[..split].to_vec()), OrderSpec::Grevlex(perm[split..].to_vec())),
    ]
}

/// Every exponent vector with weighted degree at most `cutoff`, counted
/// when no ideal member divides it.
fn naive_counts(degrees: &[u32], ideal: &[Monomial], cutoff: usize) -> Vec<u64> {
    let mut counts = vec![0u64; cutoff + 1];
    let bounds: Vec<u32> = degrees.iter().map(|&d| cutoff as u32 / d).collect();
    let mut exps = vec![0u32; degrees.len()];
    loop {
        let deg: u32 = exps.iter().zip(degrees).map(|(e, d)| e * d).sum();
        if deg as usize <= cutoff {
            let m = Monomial::from_exponents(exps.clone());
            if !ideal.iter().any(|g| g.divides(&m)) {
                counts[deg as usize] += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == exps.len() {
                return counts;
            }
            if exps[i] < bounds[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn cone_oracle(a: u32, b: u32) -> BTreeSet<(u32, u32)> {
    let pts: Vec<(u32, u32)> = (1..=b).flat_map(|x| (0..=a * x / b).map(move |y| (x, y))).collect();
    let in_cone = |x: u32, y: u32| x > 0 && y * b <= a * x;
    pts.iter()
        .copied()
        .filter(|&p| p != (1, 0))
        .filter(|&(x, y)| !pts.iter().any(|&(qx, qy)| (qx, qy) != (x, y) && qx <= x && qy <= y && in_cone(x - qx, y - qy)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn signature_text_round_trips(sig in signature(), theta in prop::option::of(0u32..4)) {
        let sig = match theta {
            Some(v) if sig.genus() >= 2 => sig.with_theta(Theta::Dim(v)).unwrap(),
            _ => sig,
        };
        let back: Signature = sig.to_string().parse().unwrap();
        prop_assert_eq!(back, sig);
    }

    #[test]
    fn floors_are_superadditive(sig in signature(), a in 0u32..40, b in 0u32..40) {
        let l = spin_divisor(&sig).unwrap();
        prop_assert!(deg_floor(&l, a + b) >= deg_floor(&l, a) + deg_floor(&l, b));
    }

    #[test]
    fn spin_divisor_has_half_canonical_degree(sig in signature()) {
        let l = spin_divisor(&sig).unwrap();
        let g = i64::from(sig.genus());
        let twice: num_rational::Ratio<i64> = l.degree() * 2;
        let stacky: num_rational::Ratio<i64> =
            sig.stabilizers().iter().map(|&e| num_rational::Ratio::new(i64::from(e) - 1, i64::from(e))).sum();
        prop_assert_eq!(twice, num_rational::Ratio::from_integer(2 * g - 2 + i64::from(sig.log_degree())) + stacky);
    }

    #[test]
    fn series_expands_to_the_hilbert_function(sig in signature(), k in 10usize..40) {
        let l = spin_divisor(&sig).unwrap();
        let dims = hilbert_function(&l, k).dims;
        let series = hilbert_series(&l, k).unwrap();
        let expanded = series.expand(k);
        prop_assert_eq!(expanded.len(), k + 1);
        for (d, e) in dims.iter().zip(&expanded) {
            prop_assert_eq!(*d as i64, *e);
        }
    }

    #[test]
    fn saturation_matches_a_scan(sig in signature()) {
        let l = spin_divisor(&sig).unwrap();
        let effective = |k: u32| deg_floor(&l, k) >= 0;
        match saturation(&l) {
            Saturation::Finite(s) => {
                prop_assert!((s..s + 300).all(effective));
                prop_assert!(s == 0 || !effective(s - 1));
            }
            Saturation::Infinite => prop_assert!((1..300).any(|k| !effective(k)) && (300..600).any(|k| !effective(k))),
        }
    }

    #[test]
    fn h0_vanishes_in_negative_degree(sig in signature(), k in 0u32..30) {
        let l = spin_divisor(&sig).unwrap();
        if deg_floor(&l, k) < 0 {
            prop_assert_eq!(h0(&l, k), 0);
        }
    }

    #[test]
    fn cone_matches_oracle(b in 1u32..14, a in 1u32..14) {
        prop_assume!(a <= b && num_integer::Integer::gcd(&a, &b) == 1);
        let got: BTreeSet<(u32, u32)> = cone_primitives(a, b).unwrap().into_iter().map(|p| (p.degree, p.pole)).collect();
        prop_assert_eq!(got, cone_oracle(a, b));
    }

    #[test]
    fn counts_match_cartesian_enumeration(
        degrees in proptest::collection::vec(1u32..6, 1..=4),
        raw in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 0..4),
        cutoff in 0usize..=20,
    ) {
        let n = degrees.len();
        let ideal: Vec<Monomial> = raw
            .into_iter()
            .map(|e| Monomial::from_exponents(e[..n].to_vec()))
            .filter(|m| m.total() > 0)
            .collect();
        prop_assert_eq!(standard_monomial_counts(&degrees, &ideal, cutoff), naive_counts(&degrees, &ideal, cutoff));
    }

    #[test]
    fn orders_are_monomial_orders(
        degrees in proptest::collection::vec(1u32..8, 4),
        poles in proptest::collection::vec(0i64..4, 4),
        perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
        a in proptest::collection::vec(0u32..5, 4),
        b in proptest::collection::vec(0u32..5, 4),
        c in proptest::collection::vec(0u32..5, 4),
    ) {
        let t = table(&degrees, &poles);
        let (a, b, c) = (Monomial::from_exponents(a), Monomial::from_exponents(b), Monomial::from_exponents(c));
        for spec in specs(4, &perm) {
            let cmp = |x: &Monomial, y: &Monomial| compare(x, y, &spec, &t);
            prop_assert_eq!(cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(cmp(&a, &b), cmp(&b, &a).reverse());
            if cmp(&a, &b).is_le() && cmp(&b, &c).is_le() {
                prop_assert!(cmp(&a, &c).is_le());
            }
            prop_assert_eq!(cmp(&a, &b), cmp(&a.mul(&c), &b.mul(&c)));
            if a.degree(&t) < b.degree(&t) {
                prop_assert!(cmp(&a, &b).is_lt());
            }
        }
    }

    #[test]
    fn block_order_restricts_to_its_blocks(
        a in proptest::collection::vec(0u32..5, 4),
        b in proptest::collection::vec(0u32..5, 4),
    ) {
        let t = table(&[1, 3, 3, 5], &[0, 1, 2, 2]);
        let outer = OrderSpec::Grevlex(vec![2, 3]);
        let inner = OrderSpec::GradedPLex { point: PointId::Stacky(1), vars: vec![0, 1] };
        let block = OrderSpec::block(outer.clone(), inner.clone());
        let only = |v: &[u32], keep: &[usize]| {
            Monomial::from_exponents(v.iter().enumerate().map(|(i, &e)| if keep.contains(&i) { e } else { 0 }).collect())
        };
        let (ai, bi) = (only(&a, &[0, 1]), only(&b, &[0, 1]));
        prop_assert_eq!(compare(&ai, &bi, &block, &t), compare(&ai, &bi, &inner, &t));
        let (ao, bo) = (only(&a, &[2, 3]), only(&b, &[2, 3]));
        prop_assert_eq!(compare(&ao, &bo, &block, &t), compare(&ao, &bo, &outer, &t));
    }
}
