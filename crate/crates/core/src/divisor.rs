//! Signatures and rational divisors on stacky curves.
//!
//! A [`Signature`] fixes the genus, the stabilizer orders and the degree of
//! the log divisor. [`spin_divisor`] turns it into the log spin canonical
//! divisor `L = L_X + sum (e_i - 1)/(2 e_i) P_i`, where the integral part
//! `L_X` is carried by abstract points: `-inf` in genus 0 with `delta = 0`,
//! `P - Q` for the two-torsion class in genus 1, and distinct general points
//! whenever `L_X` is effective.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Torsion {
    /// `L_X = 0`.
    Trivial,
    /// `L_X = P - Q` with `P`, `Q` distinct two-torsion points.
    TwoTorsion,
}

impl fmt::Display for Torsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Torsion::Trivial => f.write_str("trivial"),
            Torsion::TwoTorsion => f.write_str("two-torsion"),
        }
    }
}

impl FromStr for Torsion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "trivial" | "0" | "zero" => Ok(Torsion::Trivial),
            "two-torsion" | "twotorsion" | "torsion" | "p-q" | "2" => Ok(Torsion::TwoTorsion),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected `trivial` or `two-torsion`".into(),
            }),
        }
    }
}

/// Dimension of `H^0(L)` in genus at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Theta {
    Generic,
    Dim(u32),
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theta::Generic => f.write_str("generic"),
            Theta::Dim(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Theta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("generic") {
            return Ok(Theta::Generic);
        }
        s.parse().map(Theta::Dim).map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "expected `generic` or a nonnegative integer".into(),
        })
    }
}

/// `(g; e_1, ..., e_r; delta)` together with the genus 1 torsion class and
/// the genus >= 2 theta dimension.
///
/// Stabilizers are kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    genus: u32,
    stabilizers: Vec<u32>,
    log_degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    torsion: Option<Torsion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta: Option<Theta>,
}

impl Signature {
    /// Validated constructor. Genus 1 with `delta = 0` defaults to the
    /// trivial class and genus >= 2 to a generic theta dimension.
    pub fn new(genus: u32, stabilizers: Vec<u32>, log_degree: u32) -> Result<Self> {
        let sig = Self::unchecked(genus, stabilizers, log_degree);
        sig.validate()?;
        Ok(sig)
    }

    /// Builds a signature without parity checks. Used for orbifold data that
    /// need not come from a spin structure (even stabilizers, odd cusp count).
    pub fn unchecked(genus: u32, mut stabilizers: Vec<u32>, log_degree: u32) -> Self {
        stabilizers.sort_unstable();
        let torsion = (genus == 1 && log_degree == 0).then_some(Torsion::Trivial);
        let theta = (genus >= 2).then_some(Theta::Generic);
        Self { genus, stabilizers, log_degree, torsion, theta }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(&e) = self.stabilizers.iter().find(|&&e| e < 3 || e % 2 == 0) {
            return Err(Error::SpinParity(e));
        }
        if self.log_degree % 2 == 1 {
            return Err(Error::LogParity(self.log_degree));
        }
        Ok(())
    }

    pub fn with_torsion(mut self, torsion: Torsion) -> Result<Self> {
        if self.genus != 1 || self.log_degree != 0 {
            return Err(Error::InvalidSignature(
                "a torsion class is only meaningful in genus 1 with delta = 0".into(),
            ));
        }
        self.torsion = Some(torsion);
        Ok(self)
    }

    pub fn with_theta(mut self, theta: Theta) -> Result<Self> {
        if self.genus < 2 {
            return Err(Error::InvalidSignature("theta is only meaningful in genus >= 2".into()));
        }
        self.theta = Some(theta);
        Ok(self)
    }

    /// Same curve data with a different list of stabilizer orders.
    pub fn with_stabilizers(&self, stabilizers: Vec<u32>) -> Result<Self> {
        let mut sig = Self::new(self.genus, stabilizers, self.log_degree)?;
        sig.torsion = self.torsion;
        sig.theta = self.theta;
        Ok(sig)
    }

    /// Same curve data with a different log degree. Torsion is dropped when
    /// `delta > 0`.
    pub fn with_log_degree(&self, log_degree: u32) -> Result<Self> {
        let mut sig = Self::new(self.genus, self.stabilizers.clone(), log_degree)?;
        if log_degree == 0 {
            sig.torsion = self.torsion;
        }
        sig.theta = self.theta;
        Ok(sig)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn stabilizers(&self) -> &[u32] {
        &self.stabilizers
    }

    pub fn log_degree(&self) -> u32 {
        self.log_degree
    }

    pub fn torsion(&self) -> Option<Torsion> {
        self.torsion
    }

    pub fn theta(&self) -> Option<Theta> {
        self.theta
    }

    pub fn num_stacky(&self) -> usize {
        self.stabilizers.len()
    }

    /// `max(5, e_1, ..., e_r)`.
    pub fn bound_exponent(&self) -> u32 {
        self.stabilizers.iter().copied().fold(5, u32::max)
    }

    /// `(e - 1) / (2e)` for each stacky point.
    pub fn stacky_coefficients(&self) -> Vec<Rational> {
        self.stabilizers.iter().map(|&e| spin_coefficient(e)).collect()
    }

    /// Parses without parity checks (see [`Signature::unchecked`]).
    pub fn parse_unchecked(s: &str) -> Result<Self> {
        parse_signature(s)
    }
}

pub fn spin_coefficient(e: u32) -> Rational {
    Ratio::new(i64::from(e) - 1, 2 * i64::from(e))
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.stabilizers.iter().map(u32::to_string).collect();
        write!(f, "{};{};{}", self.genus, es.join(","), self.log_degree)?;
        if let Some(t) = self.torsion {
            write!(f, ";torsion={t}")?;
        }
        if let Some(v) = self.theta {
            write!(f, ";theta={v}")?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// `g;e1,e2,...;delta[;torsion=t][;theta=v]`
    fn from_str(s: &str) -> Result<Self> {
        let sig = parse_signature(s)?;
        sig.validate()?;
        Ok(sig)
    }
}

fn parse_signature(s: &str) -> Result<Signature> {
    let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
    let fields: Vec<&str> = s.trim().split(';').map(str::trim).collect();
    if fields.len() < 3 {
        return Err(bad("expected `g;e1,...,er;delta`"));
    }
    let genus: u32 = fields[0].parse().map_err(|_| bad("genus is not a nonnegative integer"))?;
    let stabilizers = match fields[1] {
        "" | "-" | "—" => Vec::new(),
        list => list
            .split(',')
            .map(|e| e.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("stabilizers must be positive integers"))?,
    };
    let delta: u32 = fields[2].parse().map_err(|_| bad("delta is not a nonnegative integer"))?;
    let mut sig = Signature::unchecked(genus, stabilizers, delta);
    for extra in &fields[3..] {
        let (key, value) = extra.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        match key.trim() {
            "torsion" => sig = sig.with_torsion(value.parse()?)?,
            "theta" => sig = sig.with_theta(value.parse()?)?,
            _ => return Err(bad("unknown key")),
        }
    }
    Ok(sig)
}

/// Opaque point labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PointId {
    Infinity,
    P,
    Q,
    /// Stacky point, 1-based.
    Stacky(usize),
    /// Point of the log divisor, 1-based.
    Log(usize),
    /// Point in general position carrying part of `L_X`, 1-based.
    General(usize),
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointId::Infinity => f.write_str("inf"),
            PointId::P => f.write_str("P"),
            PointId::Q => f.write_str("Q"),
            PointId::Stacky(i) => write!(f, "P{i}"),
            PointId::Log(i) => write!(f, "D{i}"),
            PointId::General(i) => write!(f, "G{i}"),
        }
    }
}

/// A finite rational combination of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDivisor {
    terms: BTreeMap<PointId, Rational>,
    signature: Signature,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorTerm {
    pub point: String,
    pub num: i64,
    pub den: i64,
}

impl QDivisor {
    pub fn new(signature: Signature) -> Self {
        Self { terms: BTreeMap::new(), signature }
    }

    /// Adds `coeff * point`, dropping the term if it cancels.
    pub fn add_term(&mut self, point: PointId, coeff: Rational) {
        let c = self.terms.entry(point).or_insert_with(|| Ratio::from_integer(0));
        *c += coeff;
        if *c == Ratio::from_integer(0) {
            self.terms.remove(&point);
        }
    }

    pub fn coefficient(&self, point: PointId) -> Rational {
        self.terms.get(&point).copied().unwrap_or_else(|| Ratio::from_integer(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (PointId, Rational)> + '_ {
        self.terms.iter().map(|(&p, &c)| (p, c))
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn degree(&self) -> Rational {
        self.terms.values().copied().sum()
    }

    pub fn deg_floor(&self, k: u32) -> i64 {
        let k = Ratio::from_integer(i64::from(k));
        self.terms.values().map(|&c| (c * k).floor().to_integer()).sum()
    }

    pub fn floor(&self, k: u32) -> QDivisor {
        let k = Ratio::from_integer(i64::from(k));
        let mut out = QDivisor::new(self.signature.clone());
        for (&p, &c) in &self.terms {
            out.add_term(p, (c * k).floor());
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Whether `2 deg L = 2g - 2 + delta + sum (e_i - 1)/e_i`.
    pub fn has_spin_degree(&self) -> bool {
        let sig = &self.signature;
        let mut target = Ratio::from_integer(2 * i64::from(sig.genus) - 2 + i64::from(sig.log_degree));
        for &e in &sig.stabilizers {
            target += Ratio::new(i64::from(e) - 1, i64::from(e));
        }
        self.degree() * 2 == target
    }

    pub fn to_terms(&self) -> Vec<DivisorTerm> {
        self.terms
            .iter()
            .map(|(p, c)| DivisorTerm { point: p.to_string(), num: *c.numer(), den: *c.denom() })
            .collect()
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (p, c)) in self.terms.iter().enumerate() {
            let neg = *c < Ratio::from_integer(0);
            let a = if neg { -*c } else { *c };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if a != Ratio::from_integer(1) {
                write!(f, "{a}*")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The log spin canonical divisor of a signature.
pub fn spin_divisor(sig: &Signature) -> Result<QDivisor> {
    sig.validate()?;
    let mut div = QDivisor::new(sig.clone());
    let one = Ratio::from_integer(1);
    let half_delta = i64::from(sig.log_degree / 2);
    // deg L_X = g - 1 + delta/2
    let integral = i64::from(sig.genus) - 1 + half_delta;
    match (sig.genus, integral) {
        (0, -1) => div.add_term(PointId::Infinity, -one),
        (1, 0) => {
            if sig.torsion == Some(Torsion::TwoTorsion) {
                div.add_term(PointId::P, one);
                div.add_term(PointId::Q, -one);
            }
        }
        _ => {
            for i in 1..=integral {
                div.add_term(PointId::General(i as usize), one);
            }
        }
    }
    for (i, &e) in sig.stabilizers.iter().enumerate() {
        div.add_term(PointId::Stacky(i + 1), spin_coefficient(e));
    }
    Ok(div)
}

/// `deg floor(k L)`.
pub fn deg_floor(divisor: &QDivisor, k: u32) -> i64 {
    divisor.deg_floor(k)
}

/// `floor(k L)`.
pub fn floor_divisor(divisor: &QDivisor, k: u32) -> QDivisor {
    divisor.floor(k)
}
