//! Raising stabilizer orders `e_i -> e_i + 2` on an admissible set.

use num_rational::Ratio;
use serde::Serialize;

use super::{Presentation, Step};
use crate::divisor::{spin_coefficient, spin_divisor, PointId};
use crate::error::{Error, Result};
use crate::order::{Monomial, OrderSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IndexAdmissibility {
    /// 0-based stacky index.
    pub index: usize,
    pub partner: Option<usize>,
    pub ad_i: bool,
    pub ad_ii: bool,
    pub ad_iii: bool,
    /// `deg floor(e_i L)` on the raised divisor.
    pub deg_floor: i64,
    /// `max_k #S(i, k)`.
    pub max_s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AdmissibilityReport {
    pub j: Vec<usize>,
    pub per_index: Vec<IndexAdmissibility>,
    /// Every point of `J` uses the shared partner of an all-order-3
    /// configuration, which replaces `(Ad-ii)`.
    pub shared_section: bool,
    pub admissible: bool,
}

fn normalize(p: &Presentation, j: &[usize]) -> Result<Vec<usize>> {
    let r = p.signature.num_stacky();
    let mut j = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if let Some(&bad) = j.iter().find(|&&i| i >= r) {
        return Err(Error::Precondition(format!("stacky index {bad} out of range (r = {r})")));
    }
    Ok(j)
}

fn raised(es: &[u32], j: &[usize]) -> Vec<u32> {
    es.iter().enumerate().map(|(i, &e)| if j.contains(&i) { e + 2 } else { e }).collect()
}

/// Conditions (Ad-i), (Ad-ii), (Ad-iii) for raising every `e_i`, `i` in `J`.
///
/// `(Ad-iii)` is evaluated on the raised divisor `L`, and `#S(i, k)` counts
/// `j` in `J - {i}` with `e_j' + 2k | e_i - e_j'` for
/// `k <= max_j |e_i - e_j'|`.
pub fn check_admissible(p: &Presentation, j: &[usize]) -> Result<AdmissibilityReport> {
    let j = normalize(p, j)?;
    let es = p.signature.stabilizers();
    let new_es = raised(es, &j);
    let raised_sig = p.signature.with_stabilizers(new_es.clone())?;
    let raised_l = spin_divisor(&raised_sig)?;
    let floor_bound = (2 * i64::from(p.signature.genus()) - 1).max(0);
    let mut per_index = Vec::new();
    for &i in &j {
        let e = es[i];
        let point = PointId::Stacky(i + 1);
        let partner = p.partner_at(i);
        let ad_i = partner.is_some_and(|y| {
            let v = p.table.get(y);
            v.degree == e && v.pole(point) == i64::from((e - 1) / 2)
        });
        let ad_ii = p.table.iter().enumerate().filter(|&(z, _)| Some(z) != partner).all(|(_, v)| {
            Ratio::new(v.pole(point), i64::from(v.degree)) < spin_coefficient(e)
        });
        let e_new = i64::from(new_es[i]);
        let kmax = j.iter().map(|&m| (e_new - i64::from(es[m])).abs()).max().unwrap_or(0);
        let max_s = (0..=kmax)
            .map(|k| {
                j.iter()
                    .filter(|&&m| m != i)
                    .filter(|&&m| (e_new - i64::from(es[m])) % (i64::from(es[m]) + 2 * k) == 0)
                    .count()
            })
            .max()
            .unwrap_or(0);
        let deg_floor = raised_l.deg_floor(new_es[i]);
        let ad_iii = deg_floor >= floor_bound + max_s as i64;
        per_index.push(IndexAdmissibility { index: i, partner, ad_i, ad_ii, ad_iii, deg_floor, max_s });
    }
    let shared_section = p.shared_partner.is_some() && j.iter().all(|i| !p.partners.contains_key(i));
    let admissible = per_index.iter().all(|r| r.ad_i && r.ad_iii)
        && (shared_section || per_index.iter().all(|r| r.ad_ii));
    Ok(AdmissibilityReport { j, per_index, shared_section, admissible })
}

/// Raises `e_i` to `e_i + 2` for `i` in `J`.
///
/// Each raised point gets a generator `y_i` of degree `e_i` (new) with pole
/// order `(e_i - 1)/2` at `Q_i`, `floor(e_i (e_j' - 1)/(2 e_j') - 1/e_j')`
/// at the other raised points and the generic value elsewhere. The initial
/// ideal grows by `y_j x` for every old generator `x` other than the partner
/// at `Q_j`, and by `y_i y_j` for `i != j`. The new `y_i` become the
/// partners, and the result is checked to be admissible for `J` again.
pub fn raise_orders(p: &Presentation, j: &[usize]) -> Result<Presentation> {
    let j = normalize(p, j)?;
    if j.is_empty() {
        return Ok(p.clone());
    }
    let report = check_admissible(p, &j)?;
    if !report.admissible {
        return Err(Error::NotAdmissible(format!("{} with J = {:?}: {:?}", p.signature, j, report.per_index)));
    }
    let old_es = p.signature.stabilizers().to_vec();
    let new_es = raised(&old_es, &j);
    if new_es.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition(format!("raising {j:?} would unsort {old_es:?}")));
    }
    let mut q = p.clone();
    q.set_signature(p.signature.with_stabilizers(new_es.clone())?)?;
    let nold = p.table.len();
    let mut ys = Vec::new();
    for &i in &j {
        let e = i64::from(new_es[i]);
        let poles = new_es
            .iter()
            .enumerate()
            .map(|(m, &em)| {
                let pole = if m == i {
                    (e - 1) / 2
                } else if j.contains(&m) {
                    let old = i64::from(old_es[m]);
                    (Ratio::new(e * (old - 1), 2 * old) - Ratio::new(1, old)).floor().to_integer()
                } else {
                    (spin_coefficient(em) * e).floor().to_integer()
                };
                (PointId::Stacky(m + 1), pole)
            })
            .collect();
        ys.push(q.push_generator(new_es[i], poles));
    }
    for (a, &m) in j.iter().enumerate() {
        let partner = p.partner_at(m);
        for x in (0..nold).filter(|&x| Some(x) != partner) {
            q.ideal.push(Monomial::from_pairs(&[(x, 1), (ys[a], 1)]));
        }
        for &yi in &ys[..a] {
            q.ideal.push(Monomial::from_pairs(&[(yi, 1), (ys[a], 1)]));
        }
    }
    for (a, &m) in j.iter().enumerate() {
        q.partners.insert(m, ys[a]);
    }
    q.order = OrderSpec::block(OrderSpec::Grevlex(ys), p.order.clone());
    q.exceptional = false;
    q.provenance.push(Step::Raise(j.clone()));
    let after = check_admissible(&q, &j)?;
    if !after.admissible {
        return Err(Error::NotAdmissible(format!(
            "raised presentation {} lost admissibility for J = {:?}",
            q.signature, j
        )));
    }
    Ok(q)
}
