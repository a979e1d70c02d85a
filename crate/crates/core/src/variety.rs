//! Points of the design variety, the Q invariant, and the seven degenerate planes.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::format;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve_affine;
use crate::rational::{self, int};
use crate::Rational;

/// Coordinate names in tuple order.
pub const COORDINATE_NAMES: [&str; 5] = ["v", "b", "r", "k", "λ"];

/// A point `(v, b, r, k, λ)` of rational five-space.
///
/// Any tuple is representable; membership in the variety is a query, and the
/// classification operations reject off-variety input.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DesignPoint {
    pub v: Rational,
    pub b: Rational,
    pub r: Rational,
    pub k: Rational,
    pub lambda: Rational,
}

impl DesignPoint {
    pub fn new(v: Rational, b: Rational, r: Rational, k: Rational, lambda: Rational) -> Self {
        DesignPoint { v, b, r, k, lambda }
    }

    pub fn from_ints([v, b, r, k, l]: [i64; 5]) -> Self {
        DesignPoint::new(int(v), int(b), int(r), int(k), int(l))
    }

    pub fn from_array([v, b, r, k, lambda]: [Rational; 5]) -> Self {
        DesignPoint { v, b, r, k, lambda }
    }

    pub fn to_array(&self) -> [Rational; 5] {
        [
            self.v.clone(),
            self.b.clone(),
            self.r.clone(),
            self.k.clone(),
            self.lambda.clone(),
        ]
    }

    pub fn coords(&self) -> [&Rational; 5] {
        [&self.v, &self.b, &self.r, &self.k, &self.lambda]
    }

    pub fn origin() -> Self {
        DesignPoint::from_ints([0, 0, 0, 0, 0])
    }

    /// The residuals `(vr - bk, r(k-1) - λ(v-1))` of the two design equations.
    pub fn residuals(&self) -> (Rational, Rational) {
        let one = Rational::one();
        let first = &self.v * &self.r - &self.b * &self.k;
        let second = &self.r * (&self.k - &one) - &self.lambda * (&self.v - &one);
        (first, second)
    }

    /// True iff `vr = bk` and `r(k-1) = λ(v-1)` hold exactly.
    pub fn on_variety(&self) -> bool {
        let (a, b) = self.residuals();
        a.is_zero() && b.is_zero()
    }

    /// `Q = r² - λb`.
    pub fn q_value(&self) -> Rational {
        &self.r * &self.r - &self.lambda * &self.b
    }

    /// The order `n = r - λ`.
    pub fn order(&self) -> Rational {
        &self.r - &self.lambda
    }

    pub fn is_integral(&self) -> bool {
        self.coords().iter().all(|x| x.is_integer())
    }

    pub fn is_symmetric(&self) -> bool {
        self.v == self.b
    }

    pub(crate) fn require_on_variety(&self) -> Result<()> {
        if self.on_variety() {
            Ok(())
        } else {
            Err(Error::OffVariety(Box::new(self.clone())))
        }
    }

    /// Checks the four Q-identities
    /// `Qv = b(r-λ)`, `Qk = r(r-λ)`, `Q(v-1) = r(b-r)`, `Q(k-1) = λ(b-r)`.
    pub fn verify_q_equations(&self) -> Result<bool> {
        self.require_on_variety()?;
        let one = Rational::one();
        let q = self.q_value();
        let n = self.order();
        let c = &self.b - &self.r;
        Ok(&q * &self.v == &self.b * &n
            && &q * &self.k == &self.r * &n
            && &q * (&self.v - &one) == &self.r * &c
            && &q * (&self.k - &one) == &self.lambda * &c)
    }

    /// The planes whose full defining systems this point satisfies.
    pub fn planes_containing(&self) -> Result<PlaneSet> {
        self.require_on_variety()?;
        Ok(PlaneId::ALL
            .iter()
            .copied()
            .filter(|plane| plane.contains(self))
            .collect())
    }

    /// True iff the point lies on none of the seven planes.
    pub fn is_bumpy(&self) -> Result<bool> {
        Ok(self.planes_containing()?.is_empty())
    }
}

impl fmt::Display for DesignPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{},{}", self.v, self.b, self.r, self.k, self.lambda)
    }
}

impl FromStr for DesignPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::Parse(format!(
                "expected 5 comma-separated components, found {}",
                parts.len()
            )));
        }
        let mut it = parts.into_iter().map(rational::parse);
        Ok(DesignPoint {
            v: it.next().unwrap()?,
            b: it.next().unwrap()?,
            r: it.next().unwrap()?,
            k: it.next().unwrap()?,
            lambda: it.next().unwrap()?,
        })
    }
}

/// The three singular points Γ₀, Γ₁, Γ₂ of the variety.
pub fn singular_points() -> [DesignPoint; 3] {
    [
        DesignPoint::from_ints([0, 0, 0, 0, 0]),
        DesignPoint::from_ints([1, 0, 0, 0, 0]),
        DesignPoint::from_ints([1, 0, 0, 1, 0]),
    ]
}

/// A linear equation `coeffs · (v,b,r,k,λ) = rhs` with small integer data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneEquation {
    pub coeffs: [i8; 5],
    pub rhs: i8,
}

impl PlaneEquation {
    const fn new(coeffs: [i8; 5], rhs: i8) -> Self {
        PlaneEquation { coeffs, rhs }
    }

    pub fn holds_at(&self, p: &DesignPoint) -> bool {
        let lhs = self
            .coeffs
            .iter()
            .zip(p.coords())
            .filter(|(c, _)| **c != 0)
            .fold(Rational::zero(), |acc, (c, x)| acc + int(*c as i64) * x);
        lhs == int(self.rhs as i64)
    }
}

const V: usize = 0;
const B: usize = 1;
const R: usize = 2;
const K: usize = 3;
const L: usize = 4;

const fn unit(i: usize) -> [i8; 5] {
    let mut c = [0; 5];
    c[i] = 1;
    c
}

const fn diff(i: usize, j: usize) -> [i8; 5] {
    let mut c = [0; 5];
    c[i] = 1;
    c[j] = -1;
    c
}

/// One of the seven planes Π₀..Π₆ contained in the variety.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneId {
    Pi0,
    Pi1,
    Pi2,
    Pi3,
    Pi4,
    Pi5,
    Pi6,
}

impl PlaneId {
    pub const ALL: [PlaneId; 7] = [
        PlaneId::Pi0,
        PlaneId::Pi1,
        PlaneId::Pi2,
        PlaneId::Pi3,
        PlaneId::Pi4,
        PlaneId::Pi5,
        PlaneId::Pi6,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<PlaneId> {
        PlaneId::ALL.get(i).copied()
    }

    /// The defining system, third equation included even where it is implied
    /// by the other two.
    pub fn equations(self) -> &'static [PlaneEquation; 3] {
        const PI0: [PlaneEquation; 3] = [
            PlaneEquation::new(unit(B), 0),
            PlaneEquation::new(unit(R), 0),
            PlaneEquation::new(unit(L), 0),
        ];
        const PI1: [PlaneEquation; 3] = [
            PlaneEquation::new(unit(B), 0),
            PlaneEquation::new(unit(R), 0),
            PlaneEquation::new(unit(V), 1),
        ];
        const PI2: [PlaneEquation; 3] = [
            PlaneEquation::new(unit(R), 0),
            PlaneEquation::new(unit(L), 0),
            PlaneEquation::new(unit(K), 0),
        ];
        const PI3: [PlaneEquation; 3] = [
            PlaneEquation::new(diff(B, R), 0),
            PlaneEquation::new(diff(R, L), 0),
            PlaneEquation::new(diff(V, K), 0),
        ];
        const PI4: [PlaneEquation; 3] = [
            PlaneEquation::new(unit(V), 0),
            PlaneEquation::new(unit(K), 0),
            PlaneEquation::new(diff(R, L), 0),
        ];
        const PI5: [PlaneEquation; 3] = [
            PlaneEquation::new(unit(V), 1),
            PlaneEquation::new(unit(K), 1),
            PlaneEquation::new(diff(B, R), 0),
        ];
        const PI6: [PlaneEquation; 3] = [
            PlaneEquation::new(unit(V), 1),
            PlaneEquation::new(unit(K), 0),
            PlaneEquation::new(unit(R), 0),
        ];
        match self {
            PlaneId::Pi0 => &PI0,
            PlaneId::Pi1 => &PI1,
            PlaneId::Pi2 => &PI2,
            PlaneId::Pi3 => &PI3,
            PlaneId::Pi4 => &PI4,
            PlaneId::Pi5 => &PI5,
            PlaneId::Pi6 => &PI6,
        }
    }

    pub fn contains(self, p: &DesignPoint) -> bool {
        self.equations().iter().all(|eq| eq.holds_at(p))
    }

    /// A point of the plane with two free rational parameters, used to sample
    /// the plane. Both parameters range over all of Q.
    pub fn point_with(self, s: Rational, t: Rational) -> DesignPoint {
        let z = Rational::zero;
        let o = Rational::one;
        let arr = match self {
            PlaneId::Pi0 => [s, z(), z(), t, z()],
            PlaneId::Pi1 => [o(), z(), z(), s, t],
            PlaneId::Pi2 => [s, t, z(), z(), z()],
            PlaneId::Pi3 => [s.clone(), t.clone(), t.clone(), s, t],
            PlaneId::Pi4 => [z(), s, t.clone(), z(), t],
            PlaneId::Pi5 => [o(), s.clone(), s, o(), t],
            PlaneId::Pi6 => [o(), s, z(), z(), t],
        };
        DesignPoint::from_array(arr)
    }

    /// Intersection of two distinct planes.
    pub fn intersection(self, other: PlaneId) -> Result<Flat> {
        plane_intersection(self, other)
    }
}

impl fmt::Display for PlaneId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Π{}", self.index())
    }
}

impl FromStr for PlaneId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .trim()
            .trim_start_matches("Π")
            .trim_start_matches("Pi")
            .trim_start_matches("pi");
        digits
            .parse::<usize>()
            .ok()
            .and_then(PlaneId::from_index)
            .ok_or_else(|| Error::Parse(format!("unknown plane {s:?}")))
    }
}

/// A set of planes, stored as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PlaneSet(u8);

impl PlaneSet {
    pub fn empty() -> Self {
        PlaneSet(0)
    }

    pub fn insert(&mut self, plane: PlaneId) {
        self.0 |= 1 << plane.index();
    }

    pub fn contains(&self, plane: PlaneId) -> bool {
        self.0 & (1 << plane.index()) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = PlaneId> + '_ {
        PlaneId::ALL.into_iter().filter(|p| self.contains(*p))
    }
}

impl FromIterator<PlaneId> for PlaneSet {
    fn from_iter<I: IntoIterator<Item = PlaneId>>(iter: I) -> Self {
        let mut set = PlaneSet::empty();
        for p in iter {
            set.insert(p);
        }
        set
    }
}

impl fmt::Display for PlaneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// An affine flat of dimension at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flat {
    Empty,
    Point(DesignPoint),
    /// `point + t * direction`, with the direction scaled so that its first
    /// nonzero entry is 1 and `point` has 0 in that coordinate.
    Line {
        point: DesignPoint,
        direction: [Rational; 5],
    },
}

impl Flat {
    pub fn contains(&self, p: &DesignPoint) -> bool {
        match self {
            Flat::Empty => false,
            Flat::Point(q) => q == p,
            Flat::Line { point, direction } => {
                let lead = direction.iter().position(|d| !d.is_zero()).unwrap();
                let t = p.coords()[lead] - point.coords()[lead];
                point
                    .coords()
                    .iter()
                    .zip(direction)
                    .zip(p.coords())
                    .all(|((base, d), x)| *base + &t * d == *x)
            }
        }
    }

    /// The condensed notation of the plane-intersection table: `∅`, a string
    /// of coordinates such as `10010`, or a line such as `1bb1b` written in
    /// its first varying coordinate.
    pub fn condensed(&self) -> String {
        fn digit(x: &Rational) -> Option<String> {
            rational::as_i64(x)
                .filter(|n| (0..=9).contains(n))
                .map(|n| n.to_string())
        }
        fn join(parts: Vec<String>) -> String {
            if parts.iter().all(|p| p.chars().count() == 1) {
                parts.concat()
            } else {
                parts.join(",")
            }
        }
        match self {
            Flat::Empty => "∅".into(),
            Flat::Point(p) => join(
                p.coords()
                    .iter()
                    .map(|x| digit(x).unwrap_or_else(|| x.to_string()))
                    .collect(),
            ),
            Flat::Line { point, direction } => {
                let lead = direction.iter().position(|d| !d.is_zero()).unwrap();
                let sym = COORDINATE_NAMES[lead];
                let parts = point
                    .coords()
                    .iter()
                    .zip(direction)
                    .map(|(base, d)| {
                        if d.is_zero() {
                            digit(base).unwrap_or_else(|| base.to_string())
                        } else if d.is_one() && base.is_zero() {
                            sym.to_string()
                        } else {
                            format!("({base}+{d}{sym})")
                        }
                    })
                    .collect();
                join(parts)
            }
        }
    }
}

/// Intersection of two distinct planes, computed from their defining systems.
pub fn plane_intersection(i: PlaneId, j: PlaneId) -> Result<Flat> {
    if i == j {
        return Err(Error::SamePlane);
    }
    let rows: Vec<(Vec<Rational>, Rational)> = i
        .equations()
        .iter()
        .chain(j.equations())
        .map(|eq| {
            (
                eq.coeffs.iter().map(|c| int(*c as i64)).collect(),
                int(eq.rhs as i64),
            )
        })
        .collect();
    let Some(sol) = solve_affine(&rows, 5) else {
        return Ok(Flat::Empty);
    };
    let to_arr = |v: Vec<Rational>| -> [Rational; 5] { v.try_into().unwrap() };
    match sol.kernel.len() {
        0 => Ok(Flat::Point(DesignPoint::from_array(to_arr(sol.particular)))),
        1 => {
            let mut dir = to_arr(sol.kernel.into_iter().next().unwrap());
            let lead = dir.iter().position(|d| !d.is_zero()).unwrap();
            let scale = dir[lead].clone();
            for d in dir.iter_mut() {
                *d = &*d / &scale;
            }
            let mut base = to_arr(sol.particular);
            let shift = base[lead].clone();
            for (x, d) in base.iter_mut().zip(dir.iter()) {
                *x -= &shift * d;
            }
            Ok(Flat::Line {
                point: DesignPoint::from_array(base),
                direction: dir,
            })
        }
        n => Err(Error::Precondition(format!(
            "planes {i} and {j} meet in a flat of dimension {n}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn pt(a: [i64; 5]) -> DesignPoint {
        DesignPoint::from_ints(a)
    }

    fn planes(ps: &[PlaneId]) -> PlaneSet {
        ps.iter().copied().collect()
    }

    #[test]
    fn membership() {
        assert!(pt([7, 7, 3, 3, 1]).on_variety());
        assert!(pt([1, 0, 0, 0, 0]).on_variety());
        assert!(!pt([2, 2, 1, 1, 1]).on_variety());
    }

    #[test]
    fn q_values() {
        assert_eq!(pt([7, 7, 3, 3, 1]).q_value(), int(2));
        assert_eq!(pt([0, 0, 0, 0, 0]).q_value(), int(0));
        assert_eq!(pt([10, 15, 6, 4, 2]).q_value(), int(6));
    }

    #[test]
    fn q_equations() {
        assert!(pt([7, 7, 3, 3, 1]).verify_q_equations().unwrap());
        assert!(pt([1, 0, 0, 1, 0]).verify_q_equations().unwrap());
        assert!(pt([10, 15, 6, 4, 2]).verify_q_equations().unwrap());
        assert!(matches!(
            pt([2, 2, 1, 1, 1]).verify_q_equations(),
            Err(Error::OffVariety(_))
        ));
    }

    #[test]
    fn plane_membership() {
        use PlaneId::*;
        assert_eq!(
            pt([1, 0, 0, 1, 0]).planes_containing().unwrap(),
            planes(&[Pi0, Pi1, Pi3, Pi5])
        );
        assert!(pt([10, 15, 6, 4, 2]).planes_containing().unwrap().is_empty());
        assert_eq!(
            pt([0, 5, 0, 0, 0]).planes_containing().unwrap(),
            planes(&[Pi2, Pi4])
        );
    }

    #[test]
    fn bumpiness() {
        assert!(pt([7, 7, 3, 3, 1]).is_bumpy().unwrap());
        assert!(!pt([5, 3, 3, 5, 3]).is_bumpy().unwrap());
        assert!(pt([0, 0, -1, 2, 1]).is_bumpy().unwrap());
        assert!(pt([2, 2, 1, 1, 1]).is_bumpy().is_err());
    }

    #[test]
    fn intersections() {
        use PlaneId::*;
        assert_eq!(plane_intersection(Pi1, Pi4).unwrap(), Flat::Empty);
        assert_eq!(plane_intersection(Pi3, Pi5).unwrap().condensed(), "1bb1b");
        assert_eq!(plane_intersection(Pi3, Pi0).unwrap().condensed(), "v00v0");
        assert_eq!(plane_intersection(Pi1, Pi5).unwrap().condensed(), "1001λ");
        assert!(matches!(plane_intersection(Pi2, Pi2), Err(Error::SamePlane)));
        let flat = plane_intersection(Pi3, Pi5).unwrap();
        assert!(flat.contains(&pt([1, 4, 4, 1, 4])));
        assert!(!flat.contains(&pt([1, 4, 4, 1, 3])));
    }

    #[test]
    fn singular_points_span_pi0() {
        for g in singular_points() {
            assert!(g.on_variety());
            assert!(PlaneId::Pi0.contains(&g));
        }
    }

    #[test]
    fn point_string_round_trip() {
        let p = DesignPoint::new(frac(5, 3), int(-2), int(0), frac(1, 2), int(7));
        let s = p.to_string();
        assert_eq!(s, "5/3,-2,0,1/2,7");
        assert_eq!(s.parse::<DesignPoint>().unwrap(), p);
        assert_eq!("(7, 7, 3, 3, 1)".parse::<DesignPoint>().unwrap(), pt([7, 7, 3, 3, 1]));
        assert!("1,2,3".parse::<DesignPoint>().is_err());
    }

    #[test]
    fn sampled_planes_lie_in_variety() {
        for plane in PlaneId::ALL {
            for (s, t) in [(int(3), frac(-2, 7)), (frac(5, 2), int(0)), (int(-4), int(9))] {
                let p = plane.point_with(s, t);
                assert!(plane.contains(&p));
                assert!(p.on_variety(), "{plane} sample {p}");
            }
        }
    }

    #[test]
    fn plane_ids_parse() {
        assert_eq!("Π3".parse::<PlaneId>().unwrap(), PlaneId::Pi3);
        assert_eq!("pi6".parse::<PlaneId>().unwrap(), PlaneId::Pi6);
        assert!("Π7".parse::<PlaneId>().is_err());
    }
}
