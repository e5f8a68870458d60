//! Presentations of log spin canonical rings at the level of generator
//! degrees, pole orders and initial ideals, and the inductive steps that
//! build them.

mod catalog;
mod raise;
mod route;
mod sat;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::divisor::{spin_divisor, PointId, QDivisor, Signature};
use crate::error::Result;
use crate::order::{Monomial, OrderSpec, Variable, VariableTable};

pub use catalog::{base_case, catalog_admissible_set, catalog_checksum, catalog_signatures, CATALOG_SHA256};
pub use raise::{check_admissible, raise_orders, AdmissibilityReport, IndexAdmissibility};
pub use route::present;
pub use sat::{add_point_sat1, add_point_sat2, add_point_sat3};

/// One inductive step in the history of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Catalog(String),
    Seed(String),
    Sat1 { alpha: u32, beta: u32, point: PointId },
    Sat2(PointId),
    Sat3(PointId),
    /// 0-based stacky indices.
    Raise(Vec<usize>),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Catalog(s) => write!(f, "catalog {s}"),
            Step::Seed(s) => write!(f, "seed {s}"),
            Step::Sat1 { alpha, beta, point } => write!(f, "sat1 {alpha}/{beta} at {point}"),
            Step::Sat2(p) => write!(f, "sat2 at {p}"),
            Step::Sat3(p) => write!(f, "sat3 at {p}"),
            Step::Raise(j) => {
                let pts: Vec<String> = j.iter().map(|i| format!("P{}", i + 1)).collect();
                write!(f, "raise {{{}}}", pts.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub degree: u32,
    #[serde(rename = "poleOrders")]
    pub pole_orders: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    signature: Signature,
    divisor: QDivisor,
    table: VariableTable,
    ideal: Vec<Monomial>,
    /// Ideal members needed for the standard-monomial count that are leading
    /// terms of Groebner elements rather than of minimal relations.
    groebner_only: Vec<Monomial>,
    order: OrderSpec,
    /// Stacky index to the generator realizing `(Ad-i)` there.
    partners: BTreeMap<usize, usize>,
    /// A single generator serving as partner at every point not listed in
    /// `partners` (the all-order-3 configurations).
    shared_partner: Option<usize>,
    /// Generators singled out for the next point addition: `x2, x3` before
    /// sat-2, `x3, x4, x5` before sat-3.
    designated: Vec<usize>,
    provenance: Vec<Step>,
    exceptional: bool,
}

impl Presentation {
    /// A presentation with no partner data, for hand-built examples.
    pub fn new(
        signature: Signature,
        table: VariableTable,
        ideal: Vec<Monomial>,
        order: OrderSpec,
    ) -> Result<Self> {
        let divisor = spin_divisor(&signature)?;
        Ok(Self {
            signature,
            divisor,
            table,
            ideal,
            groebner_only: Vec::new(),
            order,
            partners: BTreeMap::new(),
            shared_partner: None,
            designated: Vec::new(),
            provenance: Vec::new(),
            exceptional: false,
        })
    }

    /// The ring `k`: no generators.
    pub fn trivial(signature: Signature) -> Result<Self> {
        let mut p = Self::new(signature, VariableTable::new(), Vec::new(), OrderSpec::Grevlex(Vec::new()))?;
        p.provenance.push(Step::Seed("trivial ring".into()));
        Ok(p)
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn divisor(&self) -> &QDivisor {
        &self.divisor
    }

    pub fn table(&self) -> &VariableTable {
        &self.table
    }

    pub fn initial_ideal(&self) -> &[Monomial] {
        &self.ideal
    }

    pub fn groebner_only(&self) -> &[Monomial] {
        &self.groebner_only
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn partners(&self) -> &BTreeMap<usize, usize> {
        &self.partners
    }

    pub fn shared_partner(&self) -> Option<usize> {
        self.shared_partner
    }

    pub fn designated(&self) -> &[usize] {
        &self.designated
    }

    pub fn provenance(&self) -> &[Step] {
        &self.provenance
    }

    pub fn is_exceptional(&self) -> bool {
        self.exceptional
    }

    pub fn num_generators(&self) -> usize {
        self.table.len()
    }

    pub fn generators(&self) -> Vec<GeneratorInfo> {
        self.table
            .iter()
            .map(|v| GeneratorInfo {
                name: v.name.clone(),
                degree: v.degree,
                pole_orders: v.poles.iter().map(|(p, &c)| (p.to_string(), c)).collect(),
            })
            .collect()
    }

    /// Sorted generator degrees.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d = self.table.degrees();
        d.sort_unstable();
        d
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.table.iter().map(|v| v.degree).max().unwrap_or(0)
    }

    /// Divisibility-minimal members of the initial ideal, in input order.
    pub fn minimal_ideal(&self) -> Vec<Monomial> {
        minimalize(&self.ideal)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.degree(&self.table)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.ideal.iter().any(|g| g.divides(m))
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        m.render(&self.table)
    }

    pub fn render_order(&self) -> String {
        self.order.render(&self.table)
    }

    /// Same presentation with the initial ideal replaced.
    pub fn with_initial_ideal(&self, ideal: Vec<Monomial>) -> Presentation {
        let mut p = self.clone();
        p.groebner_only.retain(|m| ideal.contains(m));
        p.ideal = ideal;
        p
    }

    /// Drops one ideal member by position.
    pub fn without_ideal_member(&self, index: usize) -> Presentation {
        let mut ideal = self.ideal.clone();
        ideal.remove(index);
        self.with_initial_ideal(ideal)
    }

    /// Drops a generator together with every ideal member mentioning it.
    pub fn without_generator(&self, var: usize) -> Presentation {
        let mut table = VariableTable::new();
        for (i, v) in self.table.iter().enumerate() {
            if i != var {
                table.push(v.clone());
            }
        }
        let shift = |ms: &[Monomial]| -> Vec<Monomial> { ms.iter().filter_map(|m| m.remove_var(var)).collect() };
        let fix = |i: usize| if i > var { i - 1 } else { i };
        Presentation {
            signature: self.signature.clone(),
            divisor: self.divisor.clone(),
            table,
            ideal: shift(&self.ideal),
            groebner_only: shift(&self.groebner_only),
            order: self.order.without_var(var),
            partners: self.partners.iter().filter(|(_, &v)| v != var).map(|(&k, &v)| (k, fix(v))).collect(),
            shared_partner: self.shared_partner.filter(|&v| v != var).map(fix),
            designated: self.designated.iter().filter(|&&v| v != var).map(|&v| fix(v)).collect(),
            provenance: self.provenance.clone(),
            exceptional: self.exceptional,
        }
    }

    /// The generator acting as partner at stacky index `i`.
    pub fn partner_at(&self, i: usize) -> Option<usize> {
        self.partners.get(&i).copied().or(self.shared_partner)
    }

    /// Serializable summary.
    pub fn summary(&self) -> PresentationSummary {
        PresentationSummary {
            signature: self.signature.to_string(),
            generators: self.generators(),
            generator_degrees: self.generator_degrees(),
            initial_ideal: self.ideal.iter().map(|m| self.render_monomial(m)).collect(),
            groebner_only: self.groebner_only.iter().map(|m| self.render_monomial(m)).collect(),
            relation_degrees: minimal_relation_degrees(self),
            order: self.render_order(),
            exceptional: self.exceptional,
            provenance: self.provenance.iter().map(Step::to_string).collect(),
        }
    }

    fn push_generator(&mut self, degree: u32, poles: BTreeMap<PointId, i64>) -> usize {
        let name = self.table.fresh_name(degree);
        self.table.push(Variable { name, degree, poles })
    }

    fn set_signature(&mut self, signature: Signature) -> Result<()> {
        self.divisor = spin_divisor(&signature)?;
        self.signature = signature;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PresentationSummary {
    pub signature: String,
    pub generators: Vec<GeneratorInfo>,
    pub generator_degrees: Vec<u32>,
    pub initial_ideal: Vec<String>,
    pub groebner_only: Vec<String>,
    pub relation_degrees: Vec<u32>,
    pub order: String,
    pub exceptional: bool,
    pub provenance: Vec<String>,
}

fn minimalize(ideal: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<&Monomial> = ideal.iter().collect();
    sorted.sort_by_key(|m| m.total());
    let mut keep: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !keep.iter().any(|k| k.divides(m)) {
            keep.push(m.clone());
        }
    }
    ideal.iter().filter(|m| keep.contains(m)).fold(Vec::new(), |mut acc, m| {
        if !acc.contains(m) {
            acc.push(m.clone());
        }
        acc
    })
}

/// Sorted degrees of the minimal relations: the divisibility-minimal
/// members of the initial ideal that are not marked Groebner-only.
pub fn minimal_relation_degrees(p: &Presentation) -> Vec<u32> {
    let mut d: Vec<u32> = p
        .minimal_ideal()
        .iter()
        .filter(|m| !p.groebner_only.contains(m))
        .map(|m| p.monomial_degree(m))
        .collect();
    d.sort_unstable();
    d
}
