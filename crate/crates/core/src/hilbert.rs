//! Dimensions of the graded pieces `H^0(floor(kL))`, Hilbert series and
//! saturation of the effective monoid.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::divisor::{PointId, QDivisor, Theta, Torsion};
use crate::error::{Error, Result};

/// `dims[k] = h^0(floor(kL))` for `0 <= k <= cutoff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub dims: Vec<u64>,
    pub cutoff: usize,
}

/// Numerator over `(1 - t)^2 prod_i (1 - t^{e_i})`, with one extra factor
/// `1 - t^2` when `L_X = P - Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalSeries {
    pub numerator: Vec<i64>,
    /// `(exponent, multiplicity)` pairs of the factors `1 - t^exponent`.
    pub denominator: Vec<(u32, u32)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Saturation {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Saturation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Saturation::Finite(s) => write!(f, "{s}"),
            Saturation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Saturation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Saturation::Finite(v) => s.serialize_u32(*v),
            Saturation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `h^0(floor(kL))` for a log spin divisor.
pub fn h0(l: &QDivisor, k: u32) -> u64 {
    let sig = l.signature();
    let d = l.deg_floor(k);
    let g = i64::from(sig.genus());
    match sig.genus() {
        0 => (d + 1).max(0) as u64,
        1 => match d {
            d if d < 0 => 0,
            0 => u64::from(degree_zero_is_trivial(l, k)),
            d => d as u64,
        },
        _ => match k {
            0 => 1,
            1 => match sig.theta().unwrap_or(Theta::Generic) {
                Theta::Dim(v) => u64::from(v),
                Theta::Generic => (d - g + 1).max(0) as u64,
            },
            2 if sig.log_degree() == 0 => g as u64,
            2 => (g - 1 + i64::from(sig.log_degree())) as u64,
            _ => (d - g + 1) as u64,
        },
    }
}

/// In genus 1 a degree 0 floor is principal only when it is `k L_X` with
/// `k L_X ~ 0`; any other support is taken in general position.
fn degree_zero_is_trivial(l: &QDivisor, k: u32) -> bool {
    if k == 0 {
        return true;
    }
    let floor = l.floor(k);
    if floor.terms().any(|(p, _)| !matches!(p, PointId::P | PointId::Q)) {
        return false;
    }
    match l.signature().torsion() {
        Some(Torsion::TwoTorsion) => k % 2 == 0,
        _ => floor.terms().next().is_none(),
    }
}

pub fn hilbert_function(l: &QDivisor, cutoff: usize) -> HilbertProfile {
    let dims = (0..=cutoff).map(|k| h0(l, k as u32)).collect();
    HilbertProfile { dims, cutoff }
}

impl RationalSeries {
    fn denominator_poly(&self) -> Vec<i64> {
        let mut poly = vec![1i64];
        for &(e, mult) in &self.denominator {
            for _ in 0..mult {
                let mut next = vec![0i64; poly.len() + e as usize];
                for (i, &c) in poly.iter().enumerate() {
                    next[i] += c;
                    next[i + e as usize] -= c;
                }
                poly = next;
            }
        }
        poly
    }

    /// Power-series coefficients of numerator / denominator up to `t^cutoff`.
    pub fn expand(&self, cutoff: usize) -> Vec<i64> {
        let den = self.denominator_poly();
        let mut out = vec![0i64; cutoff + 1];
        for n in 0..=cutoff {
            let mut acc = self.numerator.get(n).copied().unwrap_or(0);
            for (j, &c) in den.iter().enumerate().skip(1).take(n) {
                acc -= c * out[n - j];
            }
            out[n] = acc;
        }
        out
    }

    pub fn denominator_degree(&self) -> usize {
        self.denominator.iter().map(|&(e, m)| (e * m) as usize).sum()
    }
}

fn series_denominator(l: &QDivisor) -> Vec<(u32, u32)> {
    let sig = l.signature();
    let mut den: Vec<(u32, u32)> = vec![(1, 2)];
    if sig.torsion() == Some(Torsion::TwoTorsion) {
        den.push((2, 1));
    }
    for &e in sig.stabilizers() {
        match den.iter_mut().find(|(x, _)| *x == e) {
            Some(entry) => entry.1 += 1,
            None => den.push((e, 1)),
        }
    }
    den.sort_unstable();
    den
}

/// Reconstructs the rational Hilbert series from dimension counts.
///
/// The dimensions are exactly quasi-polynomial once `k >= 3`, so the
/// numerator has degree at most `D + 2` where `D` is the degree of the
/// denominator. The product is computed on a window of length
/// `max(cutoff, 2D + 4)` and every coefficient past `D + 2` must vanish.
pub fn hilbert_series(l: &QDivisor, cutoff: usize) -> Result<RationalSeries> {
    let mut series = RationalSeries { numerator: Vec::new(), denominator: series_denominator(l) };
    let d = series.denominator_degree();
    let window = cutoff.max(2 * d + 4);
    let dims = hilbert_function(l, window).dims;
    let den = series.denominator_poly();
    let mut num = vec![0i64; window + 1];
    for (n, slot) in num.iter_mut().enumerate() {
        *slot = den.iter().enumerate().take(n + 1).map(|(j, &c)| c * dims[n - j] as i64).sum();
    }
    if let Some(degree) = (d + 3..=window).find(|&n| num[n] != 0) {
        return Err(Error::NonTerminatingNumerator { degree });
    }
    num.truncate(d + 3);
    while num.len() > 1 && num.last() == Some(&0) {
        num.pop();
    }
    series.numerator = num;
    Ok(series)
}

/// Saturation of `Eff(L) = { k : deg floor(kL) >= 0 }`.
pub fn saturation(l: &QDivisor) -> Saturation {
    let deg = l.degree();
    let zero = Ratio::from_integer(0);
    if deg < zero {
        return Saturation::Infinite;
    }
    if deg == zero {
        // deg floor(kL) = 0 exactly when every kc is integral.
        return if l.is_integral() { Saturation::Finite(0) } else { Saturation::Infinite };
    }
    // deg floor(kL) > k deg L - m, so every k with k deg L >= m is effective.
    let m = l.terms().filter(|(_, c)| !c.is_integer()).count() as i64;
    let bound = Ratio::from_integer(m) / deg;
    let bound = bound.ceil().to_integer().max(0) as u32;
    (0..bound)
        .rev()
        .find(|&k| l.deg_floor(k) < 0)
        .map_or(Saturation::Finite(0), |k| Saturation::Finite(k + 1))
}

/// Period of `k -> deg floor(kL) - k deg L`.
pub fn period(l: &QDivisor) -> u64 {
    l.terms().fold(1u64, |acc, (_, c)| acc.lcm(&(*c.denom() as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::{spin_divisor, Signature};

    fn spin(s: &str) -> QDivisor {
        spin_divisor(&s.parse::<Signature>().unwrap()).unwrap()
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0(&spin("0;3,7,7;0"), 7), 2);
        assert_eq!(h0(&spin("0;3,7,7;0"), 0), 1);
        assert_eq!(h0(&spin("1;5;0;torsion=two-torsion"), 2), 1);
        assert_eq!(h0(&spin("1;5;0;torsion=two-torsion"), 1), 0);
        assert_eq!(h0(&spin("2;;0"), 0), 1);
        assert_eq!(h0(&spin("2;;0"), 2), 2);
        assert_eq!(h0(&spin("2;;2"), 2), 3);
    }

    #[test]
    fn hilbert_function_examples() {
        let dims = hilbert_function(&spin("0;3,7,7;0"), 14).dims;
        assert_eq!(dims, [1, 0, 0, 1, 0, 1, 1, 2, 1, 1, 2, 1, 3, 2, 3]);
        assert_eq!(hilbert_function(&spin("0;;0"), 3).dims, [1, 0, 0, 0]);
        assert_eq!(hilbert_function(&spin("1;;0"), 4).dims, [1, 1, 1, 1, 1]);
        assert_eq!(hilbert_function(&spin("1;;0;torsion=two-torsion"), 4).dims, [1, 0, 1, 0, 1]);
    }

    #[test]
    fn genus_one_stacky_degree_zero_is_nontrivial() {
        // floor(3 * 1/3 P1) = P1 has degree 1; floor(kL) for k = 1, 2 is zero
        let l = spin("1;3;0");
        assert_eq!(hilbert_function(&l, 6).dims, [1, 1, 1, 1, 1, 1, 2]);
        let l = spin("1;3;0;torsion=two-torsion");
        assert_eq!(hilbert_function(&l, 4).dims, [1, 0, 1, 1, 1]);
    }

    #[test]
    fn series_round_trips() {
        for s in ["0;3,7,7;0", "0;3,3,3;0", "1;;0", "1;3,5;0;torsion=two-torsion", "0;5;4", "2;3,9;2", "3;;0"] {
            let l = spin(s);
            let series = hilbert_series(&l, 0).unwrap();
            let dims: Vec<i64> = hilbert_function(&l, 80).dims.iter().map(|&d| d as i64).collect();
            assert_eq!(series.expand(80), dims, "{s}");
        }
    }

    #[test]
    fn series_for_elliptic_ring() {
        let series = hilbert_series(&spin("1;;0"), 10).unwrap();
        assert_eq!(series.numerator, [1, -1]);
        assert_eq!(series.denominator, [(1, 2)]);
        let series = hilbert_series(&spin("0;3,3,3;0"), 10).unwrap();
        assert_eq!(&series.expand(7), &[1, 0, 0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(saturation(&spin("0;3,3,5;0")), Saturation::Finite(18));
        assert_eq!(saturation(&spin("0;3,3,3;0")), Saturation::Infinite);
        assert_eq!(saturation(&spin("0;3,3,11;0")), Saturation::Finite(9));
        assert_eq!(saturation(&spin("0;3;0")), Saturation::Infinite);
        assert_eq!(saturation(&spin("1;;0")), Saturation::Finite(0));
        assert_eq!(saturation(&spin("1;;0;torsion=two-torsion")), Saturation::Finite(0));
        assert_eq!(saturation(&spin("0;;2")), Saturation::Finite(0));
    }
}
