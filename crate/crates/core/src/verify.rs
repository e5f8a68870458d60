//! Certification of presentations: standard monomials of the initial ideal
//! are counted degree by degree and compared with `h^0`.

use serde::Serialize;

use crate::hilbert::hilbert_function;
use crate::order::Monomial;
use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub cutoff: usize,
    /// `(expected, counted)` for each degree `0..=cutoff`.
    pub per_degree: Vec<(u64, u64)>,
    pub first_mismatch: Option<usize>,
    pub pass: bool,
}

/// `max(30, 3 * max generator degree)`.
pub fn default_cutoff(p: &Presentation) -> usize {
    30.max(3 * p.max_generator_degree() as usize)
}

/// Number of monomials of each weighted degree `0..=cutoff` divisible by no
/// member of `ideal`.
///
/// Depth-first over variables; exponents of a variable are raised until the
/// degree exceeds the cutoff or the prefix becomes divisible by an ideal
/// member whose last variable is the current one, after which every larger
/// exponent is divisible too.
pub fn standard_monomial_counts(degrees: &[u32], ideal: &[Monomial], cutoff: usize) -> Vec<u64> {
    let n = degrees.len();
    let mut by_last: Vec<Vec<&Monomial>> = vec![Vec::new(); n];
    let mut counts = vec![0u64; cutoff + 1];
    for m in ideal {
        match m.max_var() {
            Some(v) => by_last[v].push(m),
            // the unit ideal
            None => return counts,
        }
    }
    let mut exps = vec![0u32; n];
    walk(0, 0, degrees, &by_last, &mut exps, &mut counts);
    counts
}

fn walk(
    v: usize,
    deg: usize,
    degrees: &[u32],
    by_last: &[Vec<&Monomial>],
    exps: &mut [u32],
    counts: &mut [u64],
) {
    if v == degrees.len() {
        counts[deg] += 1;
        return;
    }
    walk(v + 1, deg, degrees, by_last, exps, counts);
    let step = degrees[v] as usize;
    let mut d = deg + step;
    while d < counts.len() {
        exps[v] += 1;
        let hit = by_last[v].iter().any(|m| m.support().all(|(i, e)| exps[i] >= e));
        if hit {
            break;
        }
        walk(v + 1, d, degrees, by_last, exps, counts);
        d += step;
    }
    exps[v] = 0;
}

pub fn standard_monomial_count(p: &Presentation, k: usize) -> u64 {
    standard_monomial_counts(&p.table().degrees(), p.initial_ideal(), k)[k]
}

/// Compares standard-monomial counts with the Hilbert function up to
/// `cutoff`.
pub fn verify_presentation(p: &Presentation, cutoff: usize) -> VerificationReport {
    let expected = hilbert_function(p.divisor(), cutoff).dims;
    let counted = standard_monomial_counts(&p.table().degrees(), p.initial_ideal(), cutoff);
    let per_degree: Vec<(u64, u64)> = expected.into_iter().zip(counted).collect();
    let first_mismatch = per_degree.iter().position(|(e, c)| e != c);
    VerificationReport { cutoff, per_degree, first_mismatch, pass: first_mismatch.is_none() }
}

/// For each generator, whether deleting it (with every ideal member that
/// mentions it) drops some count below `h^0` in degrees `<= cutoff`.
pub fn generator_necessity(p: &Presentation, cutoff: usize) -> Vec<bool> {
    let expected = hilbert_function(p.divisor(), cutoff).dims;
    (0..p.num_generators())
        .map(|i| {
            let q = p.without_generator(i);
            let counted = standard_monomial_counts(&q.table().degrees(), q.initial_ideal(), cutoff);
            counted.iter().zip(&expected).any(|(c, e)| c < e)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::Signature;
    use crate::order::{OrderSpec, Variable, VariableTable};
    use crate::presentation::base_case;

    fn linear_ring() -> Presentation {
        let mut t = VariableTable::new();
        for name in ["u", "y1", "y2"] {
            t.push(Variable { name: name.into(), degree: 1, poles: Default::default() });
        }
        let sig: Signature = "0;;6".parse().unwrap();
        let ideal = vec![Monomial::from_pairs(&[(1, 1), (2, 1)])];
        Presentation::new(sig, t, ideal, OrderSpec::Grevlex(vec![0, 1, 2])).unwrap()
    }

    #[test]
    fn count_examples() {
        let p = linear_ring();
        assert_eq!(standard_monomial_count(&p, 2), 5);
        assert_eq!(standard_monomial_counts(&[3, 5], &[], 0), [1]);
        let p = base_case(&"0;3,7,7;0".parse().unwrap()).unwrap();
        assert_eq!(standard_monomial_count(&p, 12), 3);
        assert!(verify_presentation(&linear_ring(), 20).pass);
    }

    #[test]
    fn unit_ideal_has_no_standard_monomials() {
        assert_eq!(standard_monomial_counts(&[1], &[Monomial::one()], 3), [0, 0, 0, 0]);
    }

    #[test]
    fn catalog_example_passes_and_negative_control_fails() {
        let p = base_case(&"0;3,7,7;0".parse().unwrap()).unwrap();
        let report = verify_presentation(&p, 14);
        assert!(report.pass);
        let dims: Vec<u64> = report.per_degree.iter().map(|&(e, _)| e).collect();
        assert_eq!(dims, [1, 0, 0, 1, 0, 1, 1, 2, 1, 1, 2, 1, 3, 2, 3]);
        let x51_sq = p.initial_ideal().iter().position(|m| p.monomial_degree(m) == 10).unwrap();
        let report = verify_presentation(&p.without_ideal_member(x51_sq), 14);
        assert_eq!(report.first_mismatch, Some(10));
    }

    #[test]
    fn necessity() {
        let p = base_case(&"0;3,7,7;0".parse().unwrap()).unwrap();
        assert_eq!(generator_necessity(&p, 14), [true; 4]);
        let p = base_case(&"1;;2".parse().unwrap()).unwrap();
        assert_eq!(generator_necessity(&p, 12), [true; 3]);
        // u^2 duplicated by a free degree 2 generator
        let mut t = VariableTable::new();
        t.push(Variable { name: "u".into(), degree: 1, poles: Default::default() });
        t.push(Variable { name: "y".into(), degree: 2, poles: Default::default() });
        let sig: Signature = "0;;2".parse().unwrap();
        let q = Presentation::new(sig, t, vec![], OrderSpec::Grevlex(vec![0, 1])).unwrap();
        assert_eq!(generator_necessity(&q, 8), [true, false]);
    }
}
