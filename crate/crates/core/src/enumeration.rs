//! Integer points along a design line, admissibility filters, and catalog
//! annotation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lines::LineDescriptor;
use crate::variety::DesignPoint;
use crate::Rational;

/// Which points survive enumeration. The flags are independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdmissibilityFilter {
    pub require_integral: bool,
    /// `b, r, λ ≥ 1`.
    pub require_positive: bool,
    /// `2 ≤ k ≤ v - 1`.
    pub require_proper: bool,
    /// `b ≥ v`.
    pub require_fisher: bool,
}

impl Default for AdmissibilityFilter {
    fn default() -> Self {
        AdmissibilityFilter {
            require_integral: true,
            require_positive: true,
            require_proper: true,
            require_fisher: false,
        }
    }
}

impl AdmissibilityFilter {
    pub fn strict_fisher() -> Self {
        AdmissibilityFilter {
            require_fisher: true,
            ..Self::default()
        }
    }

    pub fn none() -> Self {
        AdmissibilityFilter {
            require_integral: false,
            require_positive: false,
            require_proper: false,
            require_fisher: false,
        }
    }

    pub fn admits(&self, p: &DesignPoint) -> bool {
        let one = Rational::one();
        if self.require_integral && !p.is_integral() {
            return false;
        }
        if self.require_positive && (p.b < one || p.r < one || p.lambda < one) {
            return false;
        }
        if self.require_proper && (p.k < Rational::from_integer(2.into()) || p.k > &p.v - &one) {
            return false;
        }
        if self.require_fisher && p.b < p.v {
            return false;
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coordinate {
    V,
    B,
    R,
    K,
    Lambda,
}

impl Coordinate {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        crate::variety::COORDINATE_NAMES[self.index()]
    }
}

/// An upper bound `coordinate ≤ max` on enumerated points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub coordinate: Coordinate,
    pub max: BigInt,
}

impl Bound {
    pub fn new(coordinate: Coordinate, max: impl Into<BigInt>) -> Self {
        Bound {
            coordinate,
            max: max.into(),
        }
    }

    pub fn r(max: impl Into<BigInt>) -> Self {
        Bound::new(Coordinate::R, max)
    }

    pub fn v(max: impl Into<BigInt>) -> Self {
        Bound::new(Coordinate::V, max)
    }

    /// Smallest value the bounded coordinate can take under `filter`; without
    /// a sign restriction the range is symmetric about zero.
    fn lower_limit(&self, filter: &AdmissibilityFilter) -> BigInt {
        let floor = match self.coordinate {
            Coordinate::B | Coordinate::R | Coordinate::Lambda if filter.require_positive => Some(1),
            Coordinate::V if filter.require_proper => Some(3),
            Coordinate::K if filter.require_proper => Some(2),
            _ => None,
        };
        floor.map_or_else(|| -self.max.clone(), BigInt::from)
    }
}

/// All points of `line` whose bounded coordinate is an integer in range and
/// which pass `filter`, in ascending order of the line parameter.
///
/// The bounded coordinate drives the scan. Every other coordinate is affine in
/// it with slope `β_i`, so integrality repeats with period `lcm(den β_i)`: only
/// the residues that give an integral point in the first period are visited.
pub fn integer_points(
    line: &LineDescriptor,
    bound: &Bound,
    filter: &AdmissibilityFilter,
) -> Result<Vec<DesignPoint>> {
    let param = line.parametrization()?;
    let c = bound.coordinate.index();
    let dc = &param.direction[c];
    if dc.is_zero() {
        return Err(Error::ConstantBoundCoordinate(line.to_string()));
    }
    let oc = &param.origin[c];
    // x_i = alpha_i + beta_i * s, where s is the bounded coordinate.
    let beta: [Rational; 5] = core::array::from_fn(|i| &param.direction[i] / dc);
    let alpha: [Rational; 5] = core::array::from_fn(|i| &param.origin[i] - &beta[i] * oc);
    let period = beta
        .iter()
        .fold(BigInt::one(), |acc, b| acc.lcm(b.denom()));

    let point_at = |s: &BigInt| {
        let s = Rational::from_integer(s.clone());
        DesignPoint::from_array(core::array::from_fn(|i| &alpha[i] + &beta[i] * &s))
    };

    let lo = bound.lower_limit(filter);
    let hi = &bound.max;
    let mut out = Vec::new();
    if lo > *hi {
        return Ok(out);
    }
    let mut starts = Vec::new();
    let mut s = lo.clone();
    while s < &lo + &period && s <= *hi {
        if !filter.require_integral || point_at(&s).is_integral() {
            starts.push(s.clone());
        }
        s += 1;
    }
    let mut values = Vec::new();
    for start in starts {
        let mut s = start;
        while s <= *hi {
            values.push(s.clone());
            s += &period;
        }
    }
    values.sort();
    if dc.is_negative() {
        values.reverse();
    }
    for s in values {
        let p = point_at(&s);
        if filter.admits(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogStatus {
    Exists,
    Nonexistent,
    Open,
    /// Exists, but is not the residual of any symmetric design.
    ExistsNoSymmetricParent,
}

impl CatalogStatus {
    pub const ALL: [CatalogStatus; 4] = [
        CatalogStatus::Exists,
        CatalogStatus::Nonexistent,
        CatalogStatus::Open,
        CatalogStatus::ExistsNoSymmetricParent,
    ];

    pub fn token(self) -> &'static str {
        match self {
            CatalogStatus::Exists => "exists",
            CatalogStatus::Nonexistent => "nonexistent",
            CatalogStatus::Open => "open",
            CatalogStatus::ExistsNoSymmetricParent => "exists_no_symmetric_parent",
        }
    }

    pub fn design_exists(self) -> bool {
        matches!(self, CatalogStatus::Exists | CatalogStatus::ExistsNoSymmetricParent)
    }
}

impl fmt::Display for CatalogStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for CatalogStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogStatus::ALL
            .into_iter()
            .find(|st| st.token() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown catalog status {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub point: DesignPoint,
    pub status: CatalogStatus,
    pub source: String,
}

impl CatalogEntry {
    pub fn new(point: DesignPoint, status: CatalogStatus, source: impl Into<String>) -> Result<Self> {
        if !point.is_integral() {
            return Err(Error::Catalog(format!("{point} is not integral")));
        }
        if !point.on_variety() {
            return Err(Error::Catalog(format!("{point} fails the design equations")));
        }
        Ok(CatalogEntry {
            point,
            status,
            source: source.into(),
        })
    }
}

/// Known-design records keyed by parameter point.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: BTreeMap<DesignPoint, CatalogEntry>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an entry; a second entry for the same point is an error.
    pub fn insert(&mut self, entry: CatalogEntry) -> Result<()> {
        if self.entries.contains_key(&entry.point) {
            return Err(Error::Catalog(format!("duplicate entry for {}", entry.point)));
        }
        self.entries.insert(entry.point.clone(), entry);
        Ok(())
    }

    pub fn from_entries(entries: impl IntoIterator<Item = CatalogEntry>) -> Result<Self> {
        let mut catalog = Catalog::new();
        for e in entries {
            catalog.insert(e)?;
        }
        Ok(catalog)
    }

    pub fn get(&self, p: &DesignPoint) -> Option<&CatalogEntry> {
        self.entries.get(p)
    }

    pub fn status(&self, p: &DesignPoint) -> Option<CatalogStatus> {
        self.get(p).map(|e| e.status)
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Annotation {
    Cataloged(CatalogStatus),
    Uncataloged,
}

impl fmt::Display for Annotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Annotation::Cataloged(s) => s.fmt(f),
            Annotation::Uncataloged => f.write_str("uncataloged"),
        }
    }
}

pub fn annotate(points: &[DesignPoint], catalog: &Catalog) -> Vec<(DesignPoint, Annotation)> {
    points
        .iter()
        .map(|p| {
            let a = catalog
                .status(p)
                .map_or(Annotation::Uncataloged, Annotation::Cataloged);
            (p.clone(), a)
        })
        .collect()
}
