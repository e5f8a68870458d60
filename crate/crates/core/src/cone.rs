//! Minimal generators of the lattice cone `0 <= y <= (alpha/beta) x` and the
//! relation sets among the new generators of a point addition.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A monoid generator `(degree, pole)` of the cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConePrimitive {
    pub degree: u32,
    pub pole: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct USet {
    /// 1-based index `i`: members are monomials in `y_1, ..., y_i`.
    pub index: usize,
    pub monomials: Vec<Vec<u32>>,
}

/// Minimal generators other than `(1, 0)` of the monoid of lattice points
/// `(x, y)` with `0 <= y <= alpha x / beta`, in increasing degree.
///
/// Cone points are swept in increasing `x` then `y`; a point is primitive
/// when it is not reachable from the origin by `(1, 0)` steps and earlier
/// primitives. All primitives lie in `x <= beta`.
pub fn cone_primitives(alpha: u32, beta: u32) -> Result<Vec<ConePrimitive>> {
    if alpha == 0 || beta == 0 || alpha.gcd(&beta) != 1 {
        return Err(Error::ReducedFraction { alpha, beta });
    }
    let (a, b) = (alpha as usize, beta as usize);
    let mut reach = vec![vec![false; a + 1]; b + 1];
    let mut prims: Vec<ConePrimitive> = Vec::new();
    for x in 0..=b {
        reach[x][0] = true;
        for y in 1..=(a * x) / b {
            let by_step = x > 0 && reach[x - 1][y];
            let by_prim = prims.iter().any(|p| {
                let (px, py) = (p.degree as usize, p.pole as usize);
                px <= x && py <= y && reach[x - px][y - py]
            });
            if !(by_step || by_prim) {
                prims.push(ConePrimitive { degree: x as u32, pole: y as u32 });
            }
            reach[x][y] = true;
        }
    }
    Ok(prims)
}

/// The sets `U_1, ..., U_{n-1}` for strictly increasing poles `c`.
///
/// A tuple `(a_1, ..., a_i)` lies in `U_i` when
/// `sum a_j c_j >= c_{i+1}` (U-1), no single decrement keeps that
/// inequality (U-2), and there is no `r < i` with
/// `sum_{j <= r} a_j c_j > c_{r+1}` (U-3). Minimality bounds each `a_j` by
/// `ceil(c_{i+1} / c_j)`, which makes the enumeration finite.
pub fn u_relation_sets(c: &[u32]) -> Vec<USet> {
    (1..c.len()).map(|i| USet { index: i, monomials: u_set(c, i) }).collect()
}

fn u_set(c: &[u32], i: usize) -> Vec<Vec<u32>> {
    let target = c[i];
    let bounds: Vec<u32> = c[..i].iter().map(|&cj| target.div_ceil(cj)).collect();
    let weight = |a: &[u32]| -> u32 { a.iter().zip(c).map(|(x, y)| x * y).sum() };
    let mut out = Vec::new();
    let mut a = vec![0u32; i];
    loop {
        let total = weight(&a);
        let u1 = total >= target;
        let u2 = u1 && a.iter().zip(c).all(|(&x, &cj)| x == 0 || total - cj < target);
        let u3 = u2 && (1..i).all(|r| weight(&a[..r]) <= c[r]);
        if u3 {
            out.push(a.clone());
        }
        // odometer over the box, last coordinate fastest
        let mut j = i;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if a[j] < bounds[j] {
                a[j] += 1;
                break;
            }
            a[j] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(alpha: u32, beta: u32) -> Vec<(u32, u32)> {
        cone_primitives(alpha, beta).unwrap().iter().map(|p| (p.degree, p.pole)).collect()
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(pairs(3, 7), [(3, 1), (5, 2), (7, 3)]);
        assert_eq!(pairs(1, 3), [(3, 1)]);
        assert_eq!(pairs(1, 1), [(1, 1)]);
        assert_eq!(pairs(2, 5), [(3, 1), (5, 2)]);
    }

    #[test]
    fn rejects_unreduced() {
        assert_eq!(cone_primitives(2, 4), Err(Error::ReducedFraction { alpha: 2, beta: 4 }));
        assert!(cone_primitives(0, 1).is_err());
    }

    #[test]
    fn u_set_examples() {
        let u = u_relation_sets(&[1, 2, 3]);
        assert_eq!(u.len(), 2);
        assert_eq!(u[0].monomials, [vec![2]]);
        assert_eq!(u[1].monomials, [vec![0, 2], vec![1, 1]]);
        assert!(u_relation_sets(&[1]).is_empty());
        assert_eq!(u_relation_sets(&[1, 2])[0].monomials, [vec![2]]);
    }
}
