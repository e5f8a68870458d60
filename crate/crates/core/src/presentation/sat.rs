//! Adding a point to the divisor: the three saturation steps.

use std::collections::BTreeMap;

use num_rational::Ratio;

use super::{Presentation, Step};
use crate::cone::{cone_primitives, u_relation_sets};
use crate::divisor::{spin_coefficient, PointId};
use crate::error::{Error, Result};
use crate::hilbert::{h0, period, saturation, Saturation};
use crate::order::{Monomial, OrderSpec};

/// Inserts a stacky point of order `e` keeping stabilizers sorted, shifts
/// the pole columns and partner keys past it, and returns its 0-based index.
/// Existing generators get pole order 0 at the new point.
pub(crate) fn insert_stacky(p: &mut Presentation, e: u32) -> Result<usize> {
    let old = p.signature.stabilizers().to_vec();
    let pos = old.iter().filter(|&&x| x <= e).count();
    let mut es = old;
    es.insert(pos, e);
    let sig = p.signature.with_stabilizers(es)?;
    p.set_signature(sig)?;
    let shift = |pt: PointId| match pt {
        PointId::Stacky(j) if j > pos => PointId::Stacky(j + 1),
        other => other,
    };
    for i in 0..p.table.len() {
        let var = p.table.get_mut(i);
        let mut poles: BTreeMap<PointId, i64> = var.poles.iter().map(|(&pt, &c)| (shift(pt), c)).collect();
        poles.insert(PointId::Stacky(pos + 1), 0);
        var.poles = poles;
    }
    p.partners = p.partners.iter().map(|(&k, &v)| (if k >= pos { k + 1 } else { k }, v)).collect();
    Ok(pos)
}

/// Generic pole orders `floor(d (e_i - 1)/(2 e_i))` at every stacky point.
fn generic_poles(p: &Presentation, degree: u32) -> BTreeMap<PointId, i64> {
    p.signature
        .stabilizers()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let c = spin_coefficient(e) * Ratio::from_integer(i64::from(degree));
            (PointId::Stacky(i + 1), c.floor().to_integer())
        })
        .collect()
}

fn new_generator(p: &mut Presentation, degree: u32, point: PointId, pole: i64) -> usize {
    let mut poles = generic_poles(p, degree);
    poles.insert(point, pole);
    p.push_generator(degree, poles)
}

/// Adds a point with coefficient `alpha/beta`, at which `L'` has no base
/// point. `1/1` adds a log point (`delta` grows by 2); otherwise the new
/// point is stacky of order `beta = 2 alpha + 1`.
///
/// The new generators are the cone primitives `y_j` with pole `c_j` at the
/// new point. The initial ideal grows by `x y_j` for every old generator
/// other than the degree 1 generator `u`, and by the U-set monomials.
pub fn add_point_sat1(p: &Presentation, alpha: u32, beta: u32) -> Result<Presentation> {
    let prims = cone_primitives(alpha, beta)?;
    let u = p
        .table
        .iter()
        .position(|v| v.degree == 1)
        .ok_or_else(|| Error::Precondition("sat1 needs a generator of degree 1".into()))?;
    let mut q = p.clone();
    let point = if alpha == 1 && beta == 1 {
        let sig = p.signature.with_log_degree(p.signature.log_degree() + 2)?;
        q.set_signature(sig)?;
        let n = q.divisor.terms().filter(|(pt, _)| matches!(pt, PointId::General(_))).count();
        PointId::General(n)
    } else {
        if beta != 2 * alpha + 1 {
            return Err(Error::Precondition(format!(
                "{alpha}/{beta} is neither 1/1 nor a spin coefficient (e-1)/(2e)"
            )));
        }
        PointId::Stacky(insert_stacky(&mut q, beta)? + 1)
    };
    check_sat1_dimensions(p, &q, alpha, beta)?;

    let nold = p.table.len();
    let ys: Vec<usize> = prims.iter().map(|c| new_generator(&mut q, c.degree, point, i64::from(c.pole))).collect();
    for x in (0..nold).filter(|&x| x != u) {
        for &y in &ys {
            q.ideal.push(Monomial::from_pairs(&[(x, 1), (y, 1)]));
        }
    }
    let poles: Vec<u32> = prims.iter().map(|c| c.pole).collect();
    for set in u_relation_sets(&poles) {
        for a in set.monomials {
            let pairs: Vec<(usize, u32)> = a.iter().enumerate().map(|(j, &e)| (ys[j], e)).collect();
            q.ideal.push(Monomial::from_pairs(&pairs));
        }
    }
    if let PointId::Stacky(i) = point {
        if let Some(&y) = ys.iter().find(|&&y| q.table.get(y).degree == beta) {
            q.partners.insert(i - 1, y);
        }
    }
    q.order = OrderSpec::block(OrderSpec::GradedPLex { point, vars: ys }, p.order.clone());
    q.exceptional = false;
    q.provenance.push(Step::Sat1 { alpha, beta, point });
    Ok(q)
}

/// `h^0(floor(kL)) = h^0(floor(kL')) + floor(k alpha / beta)` for
/// `k <= 2 beta + period`; past that range both sides are quasi-linear.
fn check_sat1_dimensions(old: &Presentation, new: &Presentation, alpha: u32, beta: u32) -> Result<()> {
    let kmax = 2 * u64::from(beta) + period(&new.divisor);
    for k in 0..=kmax as u32 {
        let lhs = h0(&new.divisor, k);
        let rhs = h0(&old.divisor, k) + u64::from(k * alpha / beta);
        if lhs != rhs {
            return Err(Error::HypothesisFailure {
                degree: k,
                detail: format!("h0 is {lhs}, expected {rhs} after adding {alpha}/{beta}"),
            });
        }
    }
    Ok(())
}

/// Adds a stacky point of order 3 at a base point of `L'` in genus >= 1.
///
/// Two generators `s3`, `s4` of degrees 3 and 4 with pole order 1 at the
/// new point. The initial ideal grows by `s3 z` for old `z` other than the
/// designated `x2, x3`, by `s3 x3^2` when `x3^2` is standard, by `s4 z` for
/// every old `z`, and by `s4^2`. Afterwards `s3` is the shared partner and
/// the designated pair becomes `x2, s3`.
pub fn add_point_sat2(p: &Presentation) -> Result<Presentation> {
    let sig = &p.signature;
    if sig.genus() == 0 {
        return Err(Error::Precondition("sat2 requires genus >= 1".into()));
    }
    if sig.genus() == 1 && p.divisor.deg_floor(3) < 2 {
        return Err(Error::Precondition("sat2 in genus 1 requires deg floor(3L') >= 2".into()));
    }
    // New points are general, so they are base points exactly when
    // H^0(floor L') = 0.
    if h0(&p.divisor, 1) != 0 {
        return Err(Error::Precondition("sat2 requires the new point to be a base point of L'".into()));
    }
    let (x2, x3) = match p.designated[..] {
        [x2, x3, ..] => (x2, x3),
        _ => return Err(Error::Precondition("sat2 requires designated generators x2, x3".into())),
    };
    let mut q = p.clone();
    let point = PointId::Stacky(insert_stacky(&mut q, 3)? + 1);
    let nold = p.table.len();
    let s3 = new_generator(&mut q, 3, point, 1);
    let s4 = new_generator(&mut q, 4, point, 1);
    for z in (0..nold).filter(|&z| z != x2 && z != x3) {
        q.ideal.push(Monomial::from_pairs(&[(s3, 1), (z, 1)]));
    }
    if p.is_standard(&Monomial::pow(x3, 2)) {
        q.ideal.push(Monomial::from_pairs(&[(s3, 1), (x3, 2)]));
    }
    for z in 0..nold {
        q.ideal.push(Monomial::from_pairs(&[(s4, 1), (z, 1)]));
    }
    q.ideal.push(Monomial::pow(s4, 2));
    q.shared_partner = Some(s3);
    q.partners.clear();
    q.designated = vec![x2, s3];
    q.order = OrderSpec::block(OrderSpec::GradedPLex { point, vars: vec![s3, s4] }, p.order.clone());
    q.exceptional = false;
    q.provenance.push(Step::Sat2(point));
    Ok(q)
}

/// Adds a stacky point of order 3 in genus 0 when `sat(Eff(L')) = 3`.
///
/// Three generators `t3, t4, t5` with pole order 1 at the new point. The
/// initial ideal grows by `t3 z` for old `z` outside the designated
/// `x3, x4, x5`, by `t3 m` for the standard `m` among `x4^2, x4 x5, x5^2`,
/// by `t4 z` and `t5 z` for every old `z`, and by `t4^2, t4 t5, t5^2`.
/// Afterwards `t3` is the shared partner and `t3, t4, t5` are designated.
pub fn add_point_sat3(p: &Presentation) -> Result<Presentation> {
    if p.signature.genus() != 0 {
        return Err(Error::Precondition("sat3 requires genus 0".into()));
    }
    let sat = saturation(&p.divisor);
    if sat != Saturation::Finite(3) {
        return Err(Error::Precondition(format!("sat3 requires saturation 3, found {sat}")));
    }
    let (x3, x4, x5) = match p.designated[..] {
        [x3, x4, x5, ..] => (x3, x4, x5),
        _ => return Err(Error::Precondition("sat3 requires designated generators x3, x4, x5".into())),
    };
    let mut q = p.clone();
    let point = PointId::Stacky(insert_stacky(&mut q, 3)? + 1);
    let nold = p.table.len();
    let t3 = new_generator(&mut q, 3, point, 1);
    let t4 = new_generator(&mut q, 4, point, 1);
    let t5 = new_generator(&mut q, 5, point, 1);
    for z in (0..nold).filter(|z| ![x3, x4, x5].contains(z)) {
        q.ideal.push(Monomial::from_pairs(&[(t3, 1), (z, 1)]));
    }
    for m in [Monomial::pow(x4, 2), Monomial::from_pairs(&[(x4, 1), (x5, 1)]), Monomial::pow(x5, 2)] {
        if p.is_standard(&m) {
            q.ideal.push(m.mul(&Monomial::var(t3)));
        }
    }
    for t in [t4, t5] {
        for z in 0..nold {
            q.ideal.push(Monomial::from_pairs(&[(t, 1), (z, 1)]));
        }
    }
    q.ideal.push(Monomial::pow(t4, 2));
    q.ideal.push(Monomial::from_pairs(&[(t4, 1), (t5, 1)]));
    q.ideal.push(Monomial::pow(t5, 2));
    q.shared_partner = Some(t3);
    q.partners.clear();
    q.designated = vec![t3, t4, t5];
    q.order = OrderSpec::block(OrderSpec::GradedPLex { point, vars: vec![t3, t4, t5] }, p.order.clone());
    q.exceptional = false;
    q.provenance.push(Step::Sat3(point));
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::presentation::{base_case, minimal_relation_degrees};
    use crate::verify::verify_presentation;

    fn catalog(s: &str) -> Presentation {
        base_case(&s.parse().unwrap()).unwrap()
    }

    fn ideal(p: &Presentation) -> Vec<String> {
        p.initial_ideal().iter().map(|m| p.render_monomial(m)).collect()
    }

    #[test]
    fn log_points_on_the_line() {
        let a = add_point_sat1(&catalog("0;;2"), 1, 1).unwrap();
        assert_eq!(a.generator_degrees(), [1, 1]);
        assert!(a.initial_ideal().is_empty());
        let b = add_point_sat1(&a, 1, 1).unwrap();
        assert_eq!(b.signature().to_string(), "0;;6");
        assert_eq!(ideal(&b), ["x1_2*x1_3"]);
        assert!(verify_presentation(&b, 30).pass);
    }

    #[test]
    fn stacky_point_on_the_weierstrass_seed() {
        let p = add_point_sat1(&catalog("1;;2"), 1, 3).unwrap();
        assert_eq!(p.generator_degrees(), [1, 2, 3, 3]);
        let y = p.table().get(3);
        assert_eq!(y.pole(PointId::Stacky(1)), 1);
        assert_eq!(ideal(&p), ["x3_1^2", "x2_1*x3_2", "x3_1*x3_2"]);
        assert_eq!(p.partners().get(&0), Some(&3));
        assert!(verify_presentation(&p, 30).pass);
    }

    #[test]
    fn three_sevenths_adds_cone_and_u_relations() {
        let base = add_point_sat1(&add_point_sat1(&catalog("0;;2"), 1, 1).unwrap(), 1, 1).unwrap();
        let p = add_point_sat1(&base, 3, 7).unwrap();
        assert_eq!(p.generator_degrees(), [1, 1, 1, 3, 5, 7]);
        let rendered = ideal(&p);
        for m in ["x3_1^2", "x3_1*x5_1", "x5_1^2"] {
            assert!(rendered.contains(&m.to_string()), "{m}");
        }
        assert!(verify_presentation(&p, 30).pass);
    }

    #[test]
    fn sat1_needs_a_degree_one_generator() {
        let err = add_point_sat1(&catalog("0;3,7,7;0"), 1, 3).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)), "{err:?}");
    }

    #[test]
    fn sat3_adds_an_order_three_point() {
        let p = add_point_sat3(&catalog("0;3,3,3,3,3;0")).unwrap();
        assert_eq!(p.signature().stabilizers(), [3; 6]);
        let mut degrees = p.generator_degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, [3, 3, 3, 3, 4, 4, 4, 5, 5]);
        assert!(verify_presentation(&p, 30).pass);
        let p = add_point_sat3(&add_point_sat3(&p).unwrap()).unwrap();
        assert_eq!(p.max_generator_degree(), 5);
        assert!(minimal_relation_degrees(&p).into_iter().all(|d| d <= 10));
        assert!(verify_presentation(&p, 30).pass);
    }

    #[test]
    fn sat3_rejects_other_saturations() {
        let err = add_point_sat3(&catalog("0;3,7,7;0")).unwrap_err();
        assert_eq!(err, Error::Precondition("sat3 requires saturation 3, found 5".into()));
    }

    #[test]
    fn sat2_on_the_torsion_chain() {
        let p = add_point_sat2(&catalog("1;3,3;0;torsion=two-torsion")).unwrap();
        assert_eq!(p.signature().stabilizers(), [3, 3, 3]);
        assert_eq!(p.generator_degrees(), [2, 3, 3, 3, 4, 4]);
        for m in ["x2_1*x4_2", "x4_1*x4_2", "x4_2^2"] {
            assert!(ideal(&p).contains(&m.to_string()), "{m}");
        }
        assert!(verify_presentation(&p, 30).pass);
    }

    #[test]
    fn sat2_preconditions() {
        for s in ["1;;0;torsion=two-torsion", "1;3;0;torsion=two-torsion"] {
            let err = add_point_sat2(&catalog(s)).unwrap_err();
            assert!(matches!(err, Error::Precondition(ref m) if m.contains("deg floor(3L')")), "{s}: {err:?}");
        }
        let err = add_point_sat2(&catalog("1;;2")).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("base point")), "{err:?}");
    }
}
