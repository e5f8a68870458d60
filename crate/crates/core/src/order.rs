//! Weighted monomials and the term orders used to state initial ideals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::divisor::PointId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
    /// `-ord_P` relative to the floor of the divisor.
    pub poles: BTreeMap<PointId, i64>,
}

impl Variable {
    pub fn pole(&self, point: PointId) -> i64 {
        self.poles.get(&point).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VariableTable {
    vars: Vec<Variable>,
}

impl VariableTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a variable and returns its index.
    ///
    /// # Panics
    /// If the name is taken or the degree is zero.
    pub fn push(&mut self, var: Variable) -> usize {
        assert!(var.degree >= 1, "variable {} has degree 0", var.name);
        assert!(self.index_of(&var.name).is_none(), "duplicate variable {}", var.name);
        self.vars.push(var);
        self.vars.len() - 1
    }

    /// A fresh name `x{degree}_{n}`.
    pub fn fresh_name(&self, degree: u32) -> String {
        let n = self.vars.iter().filter(|v| v.degree == degree).count();
        (n + 1..)
            .map(|i| format!("x{degree}_{i}"))
            .find(|name| self.index_of(name).is_none())
            .expect("unbounded search")
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn get(&self, i: usize) -> &Variable {
        &self.vars[i]
    }

    pub fn get_mut(&mut self, i: usize) -> &mut Variable {
        &mut self.vars[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Variable> {
        self.vars.iter()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.vars.iter().map(|v| v.degree).collect()
    }
}

/// Exponent vector; trailing zeros are trimmed so equal monomials compare
/// equal regardless of the table size they were built against.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self { exps }
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Self {
        let len = pairs.iter().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut exps = vec![0; len];
        for &(i, e) in pairs {
            exps[i] += e;
        }
        Self::from_exponents(exps)
    }

    pub fn var(i: usize) -> Self {
        Self::pow(i, 1)
    }

    pub fn pow(i: usize, e: u32) -> Self {
        Self::from_pairs(&[(i, e)])
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `(variable, exponent)` pairs with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.len().checked_sub(1)
    }

    pub fn mentions(&self, i: usize) -> bool {
        self.exponent(i) > 0
    }

    /// Number of variable factors.
    pub fn total(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        Monomial { exps: (0..len).map(|i| self.exponent(i) + other.exponent(i)).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn degree(&self, table: &VariableTable) -> u32 {
        self.support().map(|(i, e)| table.get(i).degree * e).sum()
    }

    pub fn pole_order(&self, table: &VariableTable, point: PointId) -> i64 {
        self.support().map(|(i, e)| table.get(i).pole(point) * i64::from(e)).sum()
    }

    /// Drops variable `i` and shifts later indices down.
    pub fn remove_var(&self, i: usize) -> Option<Monomial> {
        if self.mentions(i) {
            return None;
        }
        let mut exps = self.exps.clone();
        if i < exps.len() {
            exps.remove(i);
        }
        Some(Monomial::from_exponents(exps))
    }

    pub fn render(&self, table: &VariableTable) -> String {
        if self.exps.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .support()
            .map(|(i, e)| {
                let name = &table.get(i).name;
                if e == 1 { name.clone() } else { format!("{name}^{e}") }
            })
            .collect();
        parts.join("*")
    }
}

pub fn degree(m: &Monomial, table: &VariableTable) -> u32 {
    m.degree(table)
}

pub fn pole_order(m: &Monomial, table: &VariableTable, point: PointId) -> i64 {
    m.pole_order(table, point)
}

/// Term orders. Variable lists are ascending: the first entry is the
/// smallest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    /// Degree, then the monomial with the smaller exponent at the first
    /// differing variable (scanning from the smallest) is greater.
    Grevlex(Vec<usize>),
    /// Degree, then larger pole order at `point`, then as grevlex.
    GradedPLex { point: PointId, vars: Vec<usize> },
    /// Degree, then the `outer` part under `outer`, then the rest under
    /// `inner`.
    Block { outer: Box<OrderSpec>, inner: Box<OrderSpec> },
}

impl OrderSpec {
    pub fn variables(&self) -> Vec<usize> {
        match self {
            OrderSpec::Grevlex(vars) | OrderSpec::GradedPLex { vars, .. } => vars.clone(),
            OrderSpec::Block { outer, inner } => {
                let mut v = outer.variables();
                v.extend(inner.variables());
                v
            }
        }
    }

    /// Whether the spec uses every variable of a table of size `n` once.
    pub fn is_permutation_of(&self, n: usize) -> bool {
        let mut v = self.variables();
        v.sort_unstable();
        v == (0..n).collect::<Vec<_>>()
    }

    pub fn block(outer: OrderSpec, inner: OrderSpec) -> OrderSpec {
        OrderSpec::Block { outer: Box::new(outer), inner: Box::new(inner) }
    }

    /// Rewrites variable indices after removing variable `i`.
    pub fn without_var(&self, i: usize) -> OrderSpec {
        let fix = |vars: &[usize]| -> Vec<usize> {
            vars.iter().filter(|&&v| v != i).map(|&v| if v > i { v - 1 } else { v }).collect()
        };
        match self {
            OrderSpec::Grevlex(vars) => OrderSpec::Grevlex(fix(vars)),
            OrderSpec::GradedPLex { point, vars } => OrderSpec::GradedPLex { point: *point, vars: fix(vars) },
            OrderSpec::Block { outer, inner } => OrderSpec::block(outer.without_var(i), inner.without_var(i)),
        }
    }

    pub fn render(&self, table: &VariableTable) -> String {
        let names = |vars: &[usize]| -> String {
            vars.iter().map(|&v| table.get(v).name.as_str()).collect::<Vec<_>>().join("<")
        };
        match self {
            OrderSpec::Grevlex(vars) => format!("grevlex({})", names(vars)),
            OrderSpec::GradedPLex { point, vars } => format!("plex({point}; {})", names(vars)),
            OrderSpec::Block { outer, inner } => {
                format!("block({}; {})", outer.render(table), inner.render(table))
            }
        }
    }
}

fn restricted_degree(m: &Monomial, vars: &[usize], table: &VariableTable) -> u32 {
    vars.iter().map(|&v| m.exponent(v) * table.get(v).degree).sum()
}

fn reverse_scan(a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
    for &v in vars {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// Compares two monomials over the same table.
pub fn compare(a: &Monomial, b: &Monomial, spec: &OrderSpec, table: &VariableTable) -> Ordering {
    match spec {
        OrderSpec::Grevlex(vars) => restricted_degree(a, vars, table)
            .cmp(&restricted_degree(b, vars, table))
            .then_with(|| reverse_scan(a, b, vars)),
        OrderSpec::GradedPLex { point, vars } => {
            let pole = |m: &Monomial| -> i64 {
                vars.iter().map(|&v| i64::from(m.exponent(v)) * table.get(v).pole(*point)).sum()
            };
            restricted_degree(a, vars, table)
                .cmp(&restricted_degree(b, vars, table))
                .then_with(|| pole(a).cmp(&pole(b)))
                .then_with(|| reverse_scan(a, b, vars))
        }
        OrderSpec::Block { outer, inner } => {
            let vars = spec.variables();
            restricted_degree(a, &vars, table)
                .cmp(&restricted_degree(b, &vars, table))
                .then_with(|| compare(a, b, outer, table))
                .then_with(|| compare(a, b, inner, table))
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.support().map(|(i, e)| if e == 1 { format!("v{i}") } else { format!("v{i}^{e}") }).collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(spec: &[(&str, u32, i64)], point: PointId) -> VariableTable {
        let mut t = VariableTable::new();
        for &(name, degree, pole) in spec {
            let mut poles = BTreeMap::new();
            poles.insert(point, pole);
            t.push(Variable { name: name.into(), degree, poles });
        }
        t
    }

    #[test]
    fn grevlex_example() {
        let t = table(&[("x3_1", 3, 1), ("x5_1", 5, 2)], PointId::Stacky(2));
        let spec = OrderSpec::Grevlex(vec![0, 1]);
        let a = Monomial::pow(0, 5);
        let b = Monomial::pow(1, 3);
        assert_eq!(compare(&a, &b, &spec, &t), Ordering::Less);
        assert_eq!(compare(&a, &a, &spec, &t), Ordering::Equal);
        assert_eq!(spec.render(&t), "grevlex(x3_1<x5_1)");
    }

    #[test]
    fn grevlex_same_degree_variables() {
        let t = table(&[("x3_1", 3, 1), ("x5_1", 5, 2), ("x7_1", 7, 2), ("x7_2", 7, 3)], PointId::Stacky(3));
        let spec = OrderSpec::Grevlex(vec![0, 1, 2, 3]);
        assert_eq!(compare(&Monomial::var(3), &Monomial::var(2), &spec, &t), Ordering::Greater);
        let x71x72 = Monomial::from_pairs(&[(2, 1), (3, 1)]);
        assert_eq!(compare(&Monomial::pow(3, 2), &x71x72, &spec, &t), Ordering::Greater);
    }

    #[test]
    fn plex_example() {
        let p = PointId::Stacky(1);
        let t = table(&[("u", 1, 0), ("y", 3, 1)], p);
        let spec = OrderSpec::GradedPLex { point: p, vars: vec![0, 1] };
        assert_eq!(compare(&Monomial::var(1), &Monomial::pow(0, 3), &spec, &t), Ordering::Greater);
        assert_eq!(spec.render(&t), "plex(P1; u<y)");
    }

    #[test]
    fn block_compares_outer_first() {
        let t = table(&[("a", 1, 0), ("b", 1, 0), ("y", 1, 1)], PointId::P);
        let spec = OrderSpec::block(OrderSpec::Grevlex(vec![2]), OrderSpec::Grevlex(vec![0, 1]));
        // a*y versus b*b: outer parts y versus 1
        let ay = Monomial::from_pairs(&[(0, 1), (2, 1)]);
        let bb = Monomial::pow(1, 2);
        assert_eq!(compare(&ay, &bb, &spec, &t), Ordering::Greater);
        assert_eq!(spec.render(&t), "block(grevlex(y); grevlex(a<b))");
    }

    #[test]
    fn degree_and_pole_order() {
        let p = PointId::Stacky(2);
        let t = table(&[("x3_1", 3, 1), ("x5_1", 5, 2), ("x7_1", 7, 3)], p);
        assert_eq!(Monomial::from_pairs(&[(0, 1), (1, 1)]).degree(&t), 8);
        assert_eq!(Monomial::pow(2, 2).pole_order(&t, p), 6);
        assert_eq!(Monomial::one().degree(&t), 0);
    }

    #[test]
    fn monomial_algebra() {
        let a = Monomial::from_pairs(&[(0, 1), (2, 2)]);
        let b = Monomial::from_exponents(vec![1, 0, 2, 0, 0]);
        assert_eq!(a, b);
        assert!(Monomial::var(2).divides(&a));
        assert!(!Monomial::var(1).divides(&a));
        assert_eq!(a.mul(&Monomial::var(1)).exponents(), &[1, 1, 2]);
        assert_eq!(a.remove_var(1), Some(Monomial::from_pairs(&[(0, 1), (1, 2)])));
        assert_eq!(a.remove_var(0), None);
        assert_eq!(a.max_var(), Some(2));
    }

    #[test]
    fn fresh_names_are_unique() {
        let mut t = VariableTable::new();
        for d in [3, 3, 5] {
            let name = t.fresh_name(d);
            t.push(Variable { name, degree: d, poles: BTreeMap::new() });
        }
        let names: Vec<&str> = t.iter().map(|v| v.name.as_str()).collect();
        assert_eq!(names, ["x3_1", "x3_2", "x5_1"]);
    }
}
