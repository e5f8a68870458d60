//! Base and exceptional presentations stored as data.

use sha2::{Digest, Sha256};

use super::{Presentation, Step};
use crate::divisor::{PointId, Signature, Torsion};
use crate::error::{Error, Result};
use crate::order::{Monomial, OrderSpec, Variable, VariableTable};

/// SHA-256 of the `Debug` rendering of the catalog table.
pub const CATALOG_SHA256: &str = "942445cc7a867bdc3390f4c03b2b819b8f2bedad234197f3cb470c72aa1fe3b6";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Class {
    Genus0,
    Trivial,
    TwoTorsion,
    /// Genus 1 with `delta = 2`: `L_X` is one point.
    Weierstrass,
}

#[derive(Debug)]
pub(crate) struct Entry {
    pub genus: u32,
    pub stabilizers: &'static [u32],
    pub class: Class,
    pub exceptional: bool,
    /// 0-based admissible set used when raising from this entry.
    pub j: &'static [usize],
    pub degrees: &'static [u32],
    /// Per generator, pole orders at the stacky points.
    pub poles: &'static [&'static [i64]],
    pub partners: &'static [(usize, usize)],
    pub shared: Option<usize>,
    /// Grevlex variable chain, smallest first.
    pub order: &'static [usize],
    pub ideal: &'static [&'static [(usize, u32)]],
    /// Indices into `ideal`.
    pub groebner_only: &'static [usize],
    pub designated: &'static [usize],
}

pub(crate) static ENTRIES: &[Entry] = &[
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 3],
        class: Class::Genus0,
        exceptional: true,
        j: &[],
        degrees: &[3],
        poles: &[&[1, 1, 1]],
        partners: &[],
        shared: None,
        order: &[0],
        ideal: &[],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 5],
        class: Class::Genus0,
        exceptional: true,
        j: &[],
        degrees: &[3, 10, 15],
        poles: &[&[1, 1, 1], &[3, 3, 4], &[5, 5, 6]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 7],
        class: Class::Genus0,
        exceptional: true,
        j: &[],
        degrees: &[3, 7, 12],
        poles: &[&[1, 1, 1], &[2, 2, 3], &[4, 4, 5]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 9],
        class: Class::Genus0,
        exceptional: true,
        j: &[],
        degrees: &[3, 7, 9],
        poles: &[&[1, 1, 1], &[2, 2, 3], &[3, 3, 4]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(1, 3)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 11],
        class: Class::Genus0,
        exceptional: false,
        j: &[2],
        degrees: &[3, 7, 9, 11],
        poles: &[&[1, 1, 1], &[2, 2, 3], &[3, 3, 4], &[3, 3, 5]],
        partners: &[(2, 3)],
        shared: None,
        order: &[0, 1, 2, 3],
        ideal: &[&[(1, 2)], &[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 5, 5],
        class: Class::Genus0,
        exceptional: true,
        j: &[],
        degrees: &[3, 5, 10],
        poles: &[&[1, 1, 1], &[1, 2, 2], &[3, 4, 4]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 5, 7],
        class: Class::Genus0,
        exceptional: true,
        j: &[],
        degrees: &[3, 5, 7],
        poles: &[&[1, 1, 1], &[1, 2, 2], &[2, 2, 3]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(1, 2), (2, 1)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 5, 9],
        class: Class::Genus0,
        exceptional: false,
        j: &[2],
        degrees: &[3, 5, 7, 9],
        poles: &[&[1, 1, 1], &[1, 2, 2], &[2, 2, 3], &[3, 3, 4]],
        partners: &[(2, 3)],
        shared: None,
        order: &[1, 0, 2, 3],
        ideal: &[&[(0, 1), (3, 1)], &[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 7, 7],
        class: Class::Genus0,
        exceptional: false,
        j: &[1, 2],
        degrees: &[3, 5, 7, 7],
        poles: &[&[1, 1, 1], &[1, 2, 2], &[2, 3, 2], &[2, 2, 3]],
        partners: &[(1, 2), (2, 3)],
        shared: None,
        order: &[0, 1, 2, 3],
        ideal: &[&[(1, 2)], &[(2, 1), (3, 1)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[5, 5, 5],
        class: Class::Genus0,
        exceptional: true,
        j: &[],
        degrees: &[3, 5, 5],
        poles: &[&[1, 1, 1], &[2, 2, 2], &[2, 2, 2]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 3)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[5, 5, 7],
        class: Class::Genus0,
        exceptional: false,
        j: &[2],
        degrees: &[3, 5, 5, 7],
        poles: &[&[1, 1, 1], &[2, 2, 2], &[2, 2, 2], &[2, 2, 3]],
        partners: &[(2, 3)],
        shared: None,
        order: &[1, 3, 0, 2],
        ideal: &[&[(2, 2)], &[(0, 4)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[5, 7, 7],
        class: Class::Genus0,
        exceptional: false,
        j: &[1, 2],
        degrees: &[3, 5, 5, 7, 7],
        poles: &[&[1, 1, 1], &[2, 2, 2], &[2, 2, 2], &[2, 3, 2], &[2, 2, 3]],
        partners: &[(1, 3), (2, 4)],
        shared: None,
        order: &[1, 0, 2, 3, 4],
        ideal: &[&[(2, 2)], &[(0, 1), (4, 1)], &[(2, 1), (4, 1)], &[(2, 1), (3, 1)], &[(3, 1), (4, 1)], &[(0, 1), (3, 2)]],
        groebner_only: &[5],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[7, 7, 7],
        class: Class::Genus0,
        exceptional: false,
        j: &[0, 1, 2],
        degrees: &[3, 5, 5, 7, 7, 7],
        poles: &[&[1, 1, 1], &[2, 2, 2], &[2, 2, 2], &[3, 2, 2], &[2, 3, 2], &[2, 2, 3]],
        partners: &[(0, 3), (1, 4), (2, 5)],
        shared: None,
        order: &[0, 1, 2, 3, 4, 5],
        ideal: &[&[(2, 2)], &[(1, 1), (2, 1)], &[(1, 2)], &[(2, 1), (5, 1)], &[(2, 1), (4, 1)], &[(2, 1), (3, 1)], &[(4, 1), (5, 1)], &[(3, 1), (5, 1)], &[(3, 1), (4, 1)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 3, 3],
        class: Class::Genus0,
        exceptional: true,
        j: &[],
        degrees: &[3, 3, 4],
        poles: &[&[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 3)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 3, 5],
        class: Class::Genus0,
        exceptional: false,
        j: &[3],
        degrees: &[3, 3, 4, 5],
        poles: &[&[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 2]],
        partners: &[(3, 3)],
        shared: None,
        order: &[0, 3, 1, 2],
        ideal: &[&[(2, 2)], &[(1, 3)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 5, 5],
        class: Class::Genus0,
        exceptional: false,
        j: &[2, 3],
        degrees: &[3, 3, 4, 5, 5],
        poles: &[&[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 2, 1], &[1, 1, 1, 2]],
        partners: &[(2, 3), (3, 4)],
        shared: None,
        order: &[0, 1, 2, 3, 4],
        ideal: &[&[(2, 2)], &[(1, 1), (4, 1)], &[(2, 1), (4, 1)], &[(2, 1), (3, 1)], &[(3, 1), (4, 1)], &[(1, 1), (3, 2)]],
        groebner_only: &[5],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 5, 5, 5],
        class: Class::Genus0,
        exceptional: false,
        j: &[1, 2, 3],
        degrees: &[3, 3, 4, 5, 5, 5],
        poles: &[&[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 2, 1, 1], &[1, 1, 2, 1], &[1, 1, 1, 2]],
        partners: &[(1, 3), (2, 4), (3, 5)],
        shared: None,
        order: &[0, 1, 2, 3, 4, 5],
        ideal: &[&[(2, 2)], &[(1, 1), (5, 1)], &[(1, 1), (4, 1)], &[(2, 1), (5, 1)], &[(2, 1), (4, 1)], &[(2, 1), (3, 1)], &[(4, 1), (5, 1)], &[(3, 1), (5, 1)], &[(3, 1), (4, 1)], &[(1, 1), (3, 2)]],
        groebner_only: &[9],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[5, 5, 5, 5],
        class: Class::Genus0,
        exceptional: false,
        j: &[0, 1, 2, 3],
        degrees: &[3, 3, 4, 5, 5, 5, 5],
        poles: &[&[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1], &[2, 1, 1, 1], &[1, 2, 1, 1], &[1, 1, 2, 1], &[1, 1, 1, 2]],
        partners: &[(0, 3), (1, 4), (2, 5), (3, 6)],
        shared: None,
        order: &[0, 1, 2, 3, 4, 5, 6],
        ideal: &[&[(2, 2)], &[(1, 1), (6, 1)], &[(1, 1), (5, 1)], &[(1, 1), (4, 1)], &[(2, 1), (6, 1)], &[(2, 1), (5, 1)], &[(2, 1), (4, 1)], &[(2, 1), (3, 1)], &[(5, 1), (6, 1)], &[(4, 1), (6, 1)], &[(4, 1), (5, 1)], &[(3, 1), (6, 1)], &[(3, 1), (5, 1)], &[(3, 1), (4, 1)], &[(1, 1), (3, 2)]],
        groebner_only: &[14],
        designated: &[],
    },
    Entry {
        genus: 0,
        stabilizers: &[3, 3, 3, 3, 3],
        class: Class::Genus0,
        exceptional: false,
        j: &[0, 1, 2, 3, 4],
        degrees: &[3, 3, 3, 4, 4, 5],
        poles: &[&[1, 1, 1, 1, 1], &[0, 1, 1, 1, 1], &[0, 1, 1, 1, 1], &[1, 1, 1, 1, 1], &[1, 1, 1, 1, 1], &[1, 1, 1, 1, 1]],
        partners: &[],
        shared: Some(0),
        order: &[1, 2, 0, 3, 4, 5],
        ideal: &[&[(0, 1), (2, 1)], &[(0, 1), (4, 1)], &[(2, 1), (4, 1)], &[(4, 2)], &[(3, 1), (4, 1)], &[(3, 2)], &[(4, 1), (5, 1)], &[(3, 1), (5, 1)], &[(5, 2)]],
        groebner_only: &[],
        designated: &[1, 3, 5],
    },
    Entry {
        genus: 1,
        stabilizers: &[],
        class: Class::Trivial,
        exceptional: false,
        j: &[],
        degrees: &[1],
        poles: &[&[]],
        partners: &[],
        shared: None,
        order: &[0],
        ideal: &[],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[3],
        class: Class::Trivial,
        exceptional: true,
        j: &[],
        degrees: &[1, 6, 9],
        poles: &[&[0], &[2], &[3]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[5],
        class: Class::Trivial,
        exceptional: true,
        j: &[],
        degrees: &[1, 5, 8],
        poles: &[&[0], &[2], &[3]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[7],
        class: Class::Trivial,
        exceptional: true,
        j: &[0],
        degrees: &[1, 5, 7],
        poles: &[&[0], &[2], &[3]],
        partners: &[(0, 2)],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(1, 3)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[3, 3],
        class: Class::Trivial,
        exceptional: false,
        j: &[],
        degrees: &[1, 3, 6],
        poles: &[&[0, 0], &[1, 1], &[2, 2]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[3, 5],
        class: Class::Trivial,
        exceptional: false,
        j: &[],
        degrees: &[1, 3, 5],
        poles: &[&[0, 0], &[1, 1], &[1, 2]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(1, 2), (2, 1)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[3, 7],
        class: Class::Trivial,
        exceptional: false,
        j: &[1],
        degrees: &[1, 3, 5, 7],
        poles: &[&[0, 0], &[1, 1], &[1, 2], &[2, 3]],
        partners: &[(1, 3)],
        shared: None,
        order: &[1, 0, 2, 3],
        ideal: &[&[(0, 1), (3, 1)], &[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[5, 5],
        class: Class::Trivial,
        exceptional: false,
        j: &[0, 1],
        degrees: &[1, 3, 5, 5],
        poles: &[&[0, 0], &[1, 1], &[2, 1], &[1, 2]],
        partners: &[(0, 2), (1, 3)],
        shared: None,
        order: &[0, 1, 2, 3],
        ideal: &[&[(1, 2)], &[(2, 1), (3, 1)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[3, 3, 3],
        class: Class::Trivial,
        exceptional: false,
        j: &[0, 1, 2],
        degrees: &[1, 3, 3],
        poles: &[&[0, 0, 0], &[1, 1, 1], &[0, 1, 1]],
        partners: &[],
        shared: Some(1),
        order: &[0, 2, 1],
        ideal: &[&[(1, 2), (2, 1)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[],
        class: Class::TwoTorsion,
        exceptional: true,
        j: &[],
        degrees: &[2],
        poles: &[&[]],
        partners: &[],
        shared: None,
        order: &[0],
        ideal: &[],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[3],
        class: Class::TwoTorsion,
        exceptional: true,
        j: &[],
        degrees: &[2, 3, 7],
        poles: &[&[0], &[1], &[2]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[5],
        class: Class::TwoTorsion,
        exceptional: true,
        j: &[0],
        degrees: &[2, 3, 5],
        poles: &[&[0], &[1], &[2]],
        partners: &[(0, 2)],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(1, 4)]],
        groebner_only: &[],
        designated: &[],
    },
    Entry {
        genus: 1,
        stabilizers: &[3, 3],
        class: Class::TwoTorsion,
        exceptional: false,
        j: &[0, 1],
        degrees: &[2, 3, 3, 4],
        poles: &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]],
        partners: &[(0, 1), (1, 2)],
        shared: None,
        order: &[0, 1, 2, 3],
        ideal: &[&[(1, 1), (2, 1)], &[(3, 2)]],
        groebner_only: &[],
        designated: &[0, 1],
    },
    Entry {
        genus: 1,
        stabilizers: &[],
        class: Class::Weierstrass,
        exceptional: false,
        j: &[],
        degrees: &[1, 2, 3],
        poles: &[&[], &[], &[]],
        partners: &[],
        shared: None,
        order: &[0, 1, 2],
        ideal: &[&[(2, 2)]],
        groebner_only: &[],
        designated: &[],
    },
];

impl Entry {
    pub(crate) fn signature(&self) -> Signature {
        let delta = if self.class == Class::Weierstrass { 2 } else { 0 };
        let sig = Signature::new(self.genus, self.stabilizers.to_vec(), delta).expect("catalog signature is valid");
        match self.class {
            Class::TwoTorsion => sig.with_torsion(Torsion::TwoTorsion).expect("genus 1, delta 0"),
            _ => sig,
        }
    }

    pub(crate) fn presentation(&self) -> Presentation {
        let mut table = VariableTable::new();
        for (&degree, poles) in self.degrees.iter().zip(self.poles) {
            let poles = poles.iter().enumerate().map(|(i, &c)| (PointId::Stacky(i + 1), c)).collect();
            table.push(Variable { name: table.fresh_name(degree), degree, poles });
        }
        let ideal: Vec<Monomial> = self.ideal.iter().map(|m| Monomial::from_pairs(m)).collect();
        let signature = self.signature();
        let label = signature.to_string();
        let mut p = Presentation::new(signature, table, ideal, OrderSpec::Grevlex(self.order.to_vec()))
            .expect("catalog signature is valid");
        p.groebner_only = self.groebner_only.iter().map(|&i| p.ideal[i].clone()).collect();
        p.partners = self.partners.iter().copied().collect();
        p.shared_partner = self.shared;
        p.designated = self.designated.to_vec();
        p.exceptional = self.exceptional;
        p.provenance.push(Step::Catalog(label));
        p
    }
}

fn find(sig: &Signature) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.signature() == *sig)
}

pub(crate) fn entry(sig: &Signature) -> Result<&'static Entry> {
    find(sig).ok_or_else(|| Error::NotACatalogSignature(sig.to_string()))
}

/// `k[u]` with `deg u = 1`, for genus 0 and `delta = 2`.
pub(crate) fn genus_zero_seed() -> Presentation {
    let signature = Signature::new(0, Vec::new(), 2).expect("valid");
    let mut table = VariableTable::new();
    table.push(Variable { name: "u".into(), degree: 1, poles: Default::default() });
    let mut p = Presentation::new(signature, table, Vec::new(), OrderSpec::Grevlex(vec![0])).expect("valid");
    p.provenance.push(Step::Seed("k[u]".into()));
    p
}

/// The stored presentation for a catalog signature, or the genus 0 seed
/// `k[u]` for `(0; ; 2)`.
pub fn base_case(sig: &Signature) -> Result<Presentation> {
    if sig.genus() == 0 && sig.stabilizers().is_empty() && sig.log_degree() == 2 {
        return Ok(genus_zero_seed());
    }
    Ok(entry(sig)?.presentation())
}

/// Admissible set stored with a catalog entry, 0-based.
pub fn catalog_admissible_set(sig: &Signature) -> Option<Vec<usize>> {
    find(sig).map(|e| e.j.to_vec())
}

/// Every signature with a stored presentation.
pub fn catalog_signatures() -> Vec<Signature> {
    ENTRIES.iter().map(Entry::signature).collect()
}

pub fn catalog_checksum() -> String {
    let digest = Sha256::digest(format!("{ENTRIES:?}").as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
