//! Design lines: the replicate, P, F₀ and F₁ families and their constant-Q
//! limits Λ_P, Λ₀, Λ₁.
//!
//! Every line is handled through an affine parametrization
//! `origin + t * direction`. The parameter is Q for the P/F₀/F₁ families, the
//! multiplier m for replicate lines, λ for Λ_P and Λ₁, and v for Λ₀ (on which
//! λ is identically zero).

use alloc::boxed::Box;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, int};
use crate::variety::{DesignPoint, PlaneId};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineFamily {
    Replicate,
    P,
    F0,
    F1,
    LambdaP,
    Lambda0,
    Lambda1,
}

impl LineFamily {
    pub fn token(self) -> &'static str {
        match self {
            LineFamily::Replicate => "R",
            LineFamily::P => "P",
            LineFamily::F0 => "F0",
            LineFamily::F1 => "F1",
            LineFamily::LambdaP => "LP",
            LineFamily::Lambda0 => "L0",
            LineFamily::Lambda1 => "L1",
        }
    }
}

/// Names one design line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineDescriptor {
    /// The multiple line `{(v, mb, mr, k, mλ)}` through a base point.
    Replicate(DesignPoint),
    P { f: Rational, p: Rational },
    F0 { f: Rational, p: Rational },
    F1 { f: Rational, p: Rational },
    LambdaP { p: Rational },
    Lambda0 { f: Rational },
    Lambda1 { f: Rational },
}

/// `origin + t * direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLine {
    pub origin: [Rational; 5],
    pub direction: [Rational; 5],
}

impl AffineLine {
    pub fn at(&self, t: &Rational) -> DesignPoint {
        let mut out = self.origin.clone();
        for (x, d) in out.iter_mut().zip(&self.direction) {
            *x += t * d;
        }
        DesignPoint::from_array(out)
    }

    /// The parameter value reaching `p`, if `p` is on the line. The parameter
    /// is solved from the first coordinate that varies, then every coordinate
    /// is checked.
    pub fn parameter_of(&self, p: &DesignPoint) -> Option<Rational> {
        let lead = self.direction.iter().position(|d| !d.is_zero())?;
        let t = (p.coords()[lead] - &self.origin[lead]) / &self.direction[lead];
        (self.at(&t) == *p).then_some(t)
    }

    /// Coefficients `(a, c)` with `coeffs·x(t) = a + c t`.
    pub fn linear_form(&self, coeffs: &[Rational; 5]) -> (Rational, Rational) {
        let dot = |xs: &[Rational; 5]| {
            coeffs
                .iter()
                .zip(xs)
                .fold(Rational::zero(), |acc, (c, x)| acc + c * x)
        };
        (dot(&self.origin), dot(&self.direction))
    }
}

impl LineDescriptor {
    pub fn family(&self) -> LineFamily {
        match self {
            LineDescriptor::Replicate(_) => LineFamily::Replicate,
            LineDescriptor::P { .. } => LineFamily::P,
            LineDescriptor::F0 { .. } => LineFamily::F0,
            LineDescriptor::F1 { .. } => LineFamily::F1,
            LineDescriptor::LambdaP { .. } => LineFamily::LambdaP,
            LineDescriptor::Lambda0 { .. } => LineFamily::Lambda0,
            LineDescriptor::Lambda1 { .. } => LineFamily::Lambda1,
        }
    }

    /// `(f, p)` for the P/F₀/F₁ families.
    pub fn fp(&self) -> Option<(&Rational, &Rational)> {
        match self {
            LineDescriptor::P { f, p } | LineDescriptor::F0 { f, p } | LineDescriptor::F1 { f, p } => {
                Some((f, p))
            }
            _ => None,
        }
    }

    pub fn is_lambda(&self) -> bool {
        matches!(
            self,
            LineDescriptor::LambdaP { .. } | LineDescriptor::Lambda0 { .. } | LineDescriptor::Lambda1 { .. }
        )
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidLine(format!("{self}: {why}")));
        match self {
            LineDescriptor::Replicate(base) => {
                if base.b.is_zero() && base.r.is_zero() && base.lambda.is_zero() {
                    return bad("b, r and λ of the base are all zero");
                }
            }
            LineDescriptor::P { f, p } | LineDescriptor::F0 { f, p } | LineDescriptor::F1 { f, p } => {
                if f.is_zero() || p.is_zero() {
                    return bad("f and p must be nonzero");
                }
                if f == p {
                    return bad("f must differ from p");
                }
            }
            LineDescriptor::LambdaP { p } => {
                if p.is_zero() {
                    return bad("p must be nonzero");
                }
            }
            LineDescriptor::Lambda0 { f } | LineDescriptor::Lambda1 { f } => {
                if f.is_zero() {
                    return bad("f must be nonzero");
                }
            }
        }
        Ok(())
    }

    /// The affine parametrization of the line.
    pub fn parametrization(&self) -> Result<AffineLine> {
        self.validate()?;
        let z = Rational::zero;
        let o = Rational::one;
        let line = match self {
            LineDescriptor::Replicate(base) => AffineLine {
                origin: [base.v.clone(), z(), z(), base.k.clone(), z()],
                direction: [z(), base.b.clone(), base.r.clone(), z(), base.lambda.clone()],
            },
            LineDescriptor::P { f, p } | LineDescriptor::F0 { f, p } | LineDescriptor::F1 { f, p } => {
                let d = f - p;
                let pd = p * &d;
                let fd = f * &d;
                let direction = [o() / &pd, f / &pd, o() / &d, o() / &fd, p / &fd];
                let origin = match self.family() {
                    LineFamily::P => [o(), z(), z(), p / f, -(&pd / f)],
                    LineFamily::F0 => [-(&d / p), -(&fd / p), z(), z(), z()],
                    _ => {
                        let fp = f * p;
                        [-(p / &d), -(&fp / &d), -(&fp / &d), -(p / &d), -(&fp / &d)]
                    }
                };
                AffineLine { origin, direction }
            }
            LineDescriptor::LambdaP { p } => AffineLine {
                origin: [z(), z(), -p.clone(), o(), z()],
                direction: [z(), z(), z(), o() / p, o()],
            },
            LineDescriptor::Lambda0 { f } => AffineLine {
                origin: [z(), z(), f.clone(), o(), z()],
                direction: [o(), f.clone(), z(), z(), z()],
            },
            LineDescriptor::Lambda1 { f } => AffineLine {
                origin: [int(2), f * int(2), f.clone(), o(), z()],
                direction: [o() / f, o(), o(), o() / f, o()],
            },
        };
        Ok(line)
    }

    /// The point at parameter `t` (Q, m, λ or v depending on the family).
    pub fn point_at(&self, t: &Rational) -> Result<DesignPoint> {
        Ok(self.parametrization()?.at(t))
    }

    pub fn contains(&self, p: &DesignPoint) -> Result<bool> {
        Ok(self.parametrization()?.parameter_of(p).is_some())
    }

    /// Whether two descriptors name the same point set.
    pub fn same_line(&self, other: &LineDescriptor) -> Result<bool> {
        let a = self.parametrization()?;
        let b = other.parametrization()?;
        Ok(a.parameter_of(&b.at(&Rational::zero())).is_some()
            && a.parameter_of(&b.at(&Rational::one())).is_some())
    }

    /// The two flat points on a P/F₀/F₁ line (the Q = 0 point first), or the
    /// single Π₀ point of a replicate line.
    pub fn flat_points(&self) -> Result<FlatPoints> {
        self.validate()?;
        let z = Rational::zero;
        let o = Rational::one;
        match self {
            LineDescriptor::Replicate(base) => Ok(FlatPoints::Single((
                DesignPoint::new(base.v.clone(), z(), z(), base.k.clone(), z()),
                PlaneId::Pi0,
            ))),
            LineDescriptor::P { f, p } | LineDescriptor::F0 { f, p } | LineDescriptor::F1 { f, p } => {
                let d = f - p;
                let (first, second) = match self.family() {
                    LineFamily::P => (
                        (
                            DesignPoint::new(o(), z(), z(), p / f, -(p * &d / f)),
                            PlaneId::Pi1,
                        ),
                        (
                            DesignPoint::new(z(), -f.clone(), -p.clone(), z(), -p.clone()),
                            PlaneId::Pi4,
                        ),
                    ),
                    LineFamily::F0 => (
                        (
                            DesignPoint::new(-(&d / p), -(f * &d / p), z(), z(), z()),
                            PlaneId::Pi2,
                        ),
                        (
                            DesignPoint::new(o(), f.clone(), f.clone(), o(), p.clone()),
                            PlaneId::Pi5,
                        ),
                    ),
                    _ => {
                        let fp = -(f * p / &d);
                        (
                            (
                                DesignPoint::new(-(p / &d), fp.clone(), fp.clone(), -(p / &d), fp),
                                PlaneId::Pi3,
                            ),
                            (
                                DesignPoint::new(o(), f.clone(), z(), z(), -p.clone()),
                                PlaneId::Pi6,
                            ),
                        )
                    }
                };
                Ok(FlatPoints::Pair([first, second]))
            }
            _ => Err(Error::UnsupportedLine {
                op: "flat_points",
                line: self.to_string(),
            }),
        }
    }
}

/// Flat points on a design line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlatPoints {
    Pair([(DesignPoint, PlaneId); 2]),
    Single((DesignPoint, PlaneId)),
}

impl FlatPoints {
    pub fn as_slice(&self) -> &[(DesignPoint, PlaneId)] {
        match self {
            FlatPoints::Pair(pair) => pair,
            FlatPoints::Single(one) => core::slice::from_ref(one),
        }
    }
}

/// The four lines through a bumpy point: replicate, P (or Λ_P), F₀ (or Λ₀),
/// F₁ (or Λ₁), in that order.
pub fn lines_through(p: &DesignPoint) -> Result<[LineDescriptor; 4]> {
    if !p.is_bumpy()? {
        return Err(Error::NotBumpy(Box::new(p.clone())));
    }
    let q = p.q_value();
    let n = p.order();
    let c = &p.b - &p.r;

    // Bumpy points have Q, r, r-λ and b-r all nonzero.
    let p_line = if p.b.is_zero() {
        LineDescriptor::LambdaP { p: -p.r.clone() }
    } else {
        LineDescriptor::P {
            f: &q * &p.b / (&p.r * &c),
            p: &q / &c,
        }
    };
    let f = &q / &n;
    let f0_line = if p.lambda.is_zero() {
        LineDescriptor::Lambda0 { f: f.clone() }
    } else {
        LineDescriptor::F0 {
            f: f.clone(),
            p: &q * &p.lambda / (&p.r * &n),
        }
    };
    let f1_line = if c == n {
        LineDescriptor::Lambda1 { f: f.clone() }
    } else {
        LineDescriptor::F1 { f, p: &q / &c }
    };
    Ok([LineDescriptor::Replicate(p.clone()), p_line, f0_line, f1_line])
}

impl fmt::Display for LineDescriptor {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tok = self.family().token();
        match self {
            LineDescriptor::Replicate(base) => write!(fm, "{tok}({base})"),
            LineDescriptor::P { f, p } | LineDescriptor::F0 { f, p } | LineDescriptor::F1 { f, p } => {
                write!(fm, "{tok}({f},{p})")
            }
            LineDescriptor::LambdaP { p } => write!(fm, "{tok}({p})"),
            LineDescriptor::Lambda0 { f } | LineDescriptor::Lambda1 { f } => write!(fm, "{tok}({f})"),
        }
    }
}

impl FromStr for LineDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("line {s:?}: expected NAME(args)")))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("line {s:?}: missing ')'")))?;
        let name = name.trim();
        let nums = || -> Result<Vec<Rational>> { args.split(',').map(rational::parse).collect() };
        let arity = |want: usize, got: &[Rational]| {
            if got.len() == want {
                Ok(())
            } else {
                Err(Error::Parse(format!("line {s:?}: expected {want} arguments")))
            }
        };
        let line = match name {
            "R" => LineDescriptor::Replicate(args.parse()?),
            "P" | "F0" | "F1" => {
                let v = nums()?;
                arity(2, &v)?;
                let [f, p]: [Rational; 2] = v.try_into().unwrap();
                match name {
                    "P" => LineDescriptor::P { f, p },
                    "F0" => LineDescriptor::F0 { f, p },
                    _ => LineDescriptor::F1 { f, p },
                }
            }
            "LP" | "L0" | "L1" => {
                let mut v = nums()?;
                arity(1, &v)?;
                let x = v.pop().unwrap();
                match name {
                    "LP" => LineDescriptor::LambdaP { p: x },
                    "L0" => LineDescriptor::Lambda0 { f: x },
                    _ => LineDescriptor::Lambda1 { f: x },
                }
            }
            other => return Err(Error::Parse(format!("unknown line family {other:?}"))),
        };
        line.validate()?;
        Ok(line)
    }
}

/// A linear relation `Vv + Bb + Rr + Kk + Lλ = A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearRelation {
    pub coeffs: [Rational; 5],
    pub rhs: Rational,
}

impl LinearRelation {
    pub fn new(coeffs: [Rational; 5], rhs: Rational) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::Domain("relation has no nonzero coefficient".into()));
        }
        Ok(LinearRelation { coeffs, rhs })
    }

    pub fn from_ints(coeffs: [i64; 5], rhs: i64) -> Result<Self> {
        LinearRelation::new(coeffs.map(int), int(rhs))
    }

    pub fn evaluate(&self, p: &DesignPoint) -> Rational {
        self.coeffs
            .iter()
            .zip(p.coords())
            .fold(Rational::zero(), |acc, (c, x)| acc + c * x)
    }

    pub fn holds_at(&self, p: &DesignPoint) -> bool {
        self.evaluate(p) == self.rhs
    }
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(crate::variety::COORDINATE_NAMES) {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}{name}")?;
            } else {
                write!(f, " + {c}{name}")?;
            }
            first = false;
        }
        write!(f, " = {}", self.rhs)
    }
}

fn reject_lambda(op: &'static str, line: &LineDescriptor) -> Result<()> {
    if line.is_lambda() {
        Err(Error::UnsupportedLine {
            op,
            line: line.to_string(),
        })
    } else {
        Ok(())
    }
}

/// Whether the relation holds identically along the line: the parameter
/// coefficient vanishes and the constant term equals the right-hand side.
pub fn relation_on_line(rel: &LinearRelation, line: &LineDescriptor) -> Result<bool> {
    reject_lambda("relation_on_line", line)?;
    let (constant, slope) = line.parametrization()?.linear_form(&rel.coeffs);
    Ok(slope.is_zero() && constant == rel.rhs)
}

/// The coefficient patterns of relations satisfied by a whole class of flat
/// points, keyed by line family and the plane of that flat point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationPattern {
    /// `Bb + Rr + Lλ = 0`, satisfied on Π₀.
    Replicate,
    /// Π₁: `K = L = 0`, `A = V`.
    P1,
    /// Π₂: `V = B = 0`, `A = 0`.
    F0Plane2,
    /// Π₃: `K = -V`, `L = -B-R`, `A = 0`.
    F1Plane3,
    /// Π₄: `B = 0`, `L = -R`, `A = 0`.
    P4,
    /// Π₅: `R = -B`, `L = 0`, `A = V+K`.
    F0Plane5,
    /// Π₆: `B = L = 0`, `A = V`.
    F1Plane6,
}

impl RelationPattern {
    pub const ALL: [RelationPattern; 7] = [
        RelationPattern::Replicate,
        RelationPattern::P1,
        RelationPattern::F0Plane2,
        RelationPattern::F1Plane3,
        RelationPattern::P4,
        RelationPattern::F0Plane5,
        RelationPattern::F1Plane6,
    ];

    pub fn line_family(self) -> LineFamily {
        match self {
            RelationPattern::Replicate => LineFamily::Replicate,
            RelationPattern::P1 | RelationPattern::P4 => LineFamily::P,
            RelationPattern::F0Plane2 | RelationPattern::F0Plane5 => LineFamily::F0,
            RelationPattern::F1Plane3 | RelationPattern::F1Plane6 => LineFamily::F1,
        }
    }

    pub fn plane(self) -> PlaneId {
        match self {
            RelationPattern::Replicate => PlaneId::Pi0,
            RelationPattern::P1 => PlaneId::Pi1,
            RelationPattern::F0Plane2 => PlaneId::Pi2,
            RelationPattern::F1Plane3 => PlaneId::Pi3,
            RelationPattern::P4 => PlaneId::Pi4,
            RelationPattern::F0Plane5 => PlaneId::Pi5,
            RelationPattern::F1Plane6 => PlaneId::Pi6,
        }
    }

    pub fn matches(self, rel: &LinearRelation) -> bool {
        let [v, b, r, k, l] = &rel.coeffs;
        let a = &rel.rhs;
        match self {
            RelationPattern::Replicate => v.is_zero() && k.is_zero() && a.is_zero(),
            RelationPattern::P1 => k.is_zero() && l.is_zero() && a == v,
            RelationPattern::F0Plane2 => v.is_zero() && b.is_zero() && a.is_zero(),
            RelationPattern::F1Plane3 => *k == -v.clone() && *l == -(b + r) && a.is_zero(),
            RelationPattern::P4 => b.is_zero() && *l == -r.clone() && a.is_zero(),
            RelationPattern::F0Plane5 => *r == -b.clone() && l.is_zero() && *a == v + k,
            RelationPattern::F1Plane6 => b.is_zero() && l.is_zero() && a == v,
        }
    }

    /// Patterns available on a line family.
    pub fn for_family(family: LineFamily) -> impl Iterator<Item = RelationPattern> {
        RelationPattern::ALL
            .into_iter()
            .filter(move |pat| pat.line_family() == family)
    }
}

/// Decides a relation along a line from a single bumpy witness: if the
/// relation has one of the flat-point patterns of the line's family it holds
/// at that flat point, so holding at the witness makes it hold at two points
/// and hence everywhere.
pub fn table_v_propagation(
    rel: &LinearRelation,
    line: &LineDescriptor,
    witness: &DesignPoint,
) -> Result<bool> {
    reject_lambda("table_v_propagation", line)?;
    if !line.contains(witness)? {
        return Err(Error::NotOnLine {
            point: Box::new(witness.clone()),
            line: line.to_string(),
        });
    }
    if !witness.is_bumpy()? {
        return Err(Error::NotBumpy(Box::new(witness.clone())));
    }
    let matched = RelationPattern::for_family(line.family()).any(|pat| pat.matches(rel));
    Ok(matched && rel.holds_at(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn pt(a: [i64; 5]) -> DesignPoint {
        DesignPoint::from_ints(a)
    }
    fn line(s: &str) -> LineDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn point_at_examples() {
        assert_eq!(line("P(5/3,2/3)").point_at(&int(6)).unwrap(), pt([10, 15, 6, 4, 2]));
        assert_eq!(line("F1(1,1/2)").point_at(&int(2)).unwrap(), pt([7, 7, 3, 3, 1]));
        assert_eq!(
            line("R(13,13,4,4,1)").point_at(&int(2)).unwrap(),
            pt([13, 26, 8, 4, 2])
        );
    }

    #[test]
    fn four_lines_examples() {
        let got = lines_through(&pt([10, 15, 6, 4, 2])).unwrap();
        assert_eq!(got[0], LineDescriptor::Replicate(pt([10, 15, 6, 4, 2])));
        assert_eq!(got[1], line("P(5/3,2/3)"));
        assert_eq!(got[2], line("F0(3/2,1/2)"));
        assert_eq!(got[3], line("F1(3/2,2/3)"));

        let got = lines_through(&pt([7, 7, 3, 3, 1])).unwrap();
        assert_eq!(got[1..], [line("P(7/6,1/2)"), line("F0(1,1/3)"), line("F1(1,1/2)")]);

        let got = lines_through(&pt([3, 6, 2, 1, 0])).unwrap();
        assert_eq!(got[1..], [line("P(3,1)"), line("L0(2)"), line("F1(2,1)")]);

        assert!(matches!(lines_through(&pt([1, 0, 0, 1, 0])), Err(Error::NotBumpy(_))));
        assert!(matches!(lines_through(&pt([2, 2, 1, 1, 1])), Err(Error::OffVariety(_))));
    }

    #[test]
    fn degenerate_substitutions() {
        // b = 0 on a bumpy point forces the Λ_P line.
        let p = pt([0, 0, -1, 2, 1]);
        let got = lines_through(&p).unwrap();
        assert_eq!(got[1], LineDescriptor::LambdaP { p: int(1) });
        // b - r = r - λ gives the Λ₁ line.
        let p = line("L1(2)").point_at(&int(4)).unwrap();
        let got = lines_through(&p).unwrap();
        assert_eq!(got[3], LineDescriptor::Lambda1 { f: int(2) });
        for l in got {
            assert!(l.contains(&p).unwrap());
        }
    }

    #[test]
    fn containment_examples() {
        assert!(line("F0(3/2,1/2)").contains(&pt([4, 6, 3, 2, 1])).unwrap());
        assert!(!line("F1(1,1/2)").contains(&pt([10, 15, 6, 4, 2])).unwrap());
        assert!(line("R(13,13,4,4,1)").contains(&pt([13, 39, 12, 4, 3])).unwrap());
    }

    #[test]
    fn flat_point_examples() {
        let FlatPoints::Pair(pair) = line("F0(3/2,1/2)").flat_points().unwrap() else {
            panic!()
        };
        assert_eq!(pair[0], (pt([-2, -3, 0, 0, 0]), PlaneId::Pi2));
        assert_eq!(
            pair[1],
            (DesignPoint::new(int(1), frac(3, 2), frac(3, 2), int(1), frac(1, 2)), PlaneId::Pi5)
        );
        let FlatPoints::Pair(pair) = line("F1(1,1/2)").flat_points().unwrap() else {
            panic!()
        };
        assert_eq!(pair[0], (pt([-1, -1, -1, -1, -1]), PlaneId::Pi3));
        assert_eq!(
            pair[1],
            (DesignPoint::new(int(1), int(1), int(0), int(0), frac(-1, 2)), PlaneId::Pi6)
        );
        assert_eq!(
            line("R(7,7,3,3,1)").flat_points().unwrap(),
            FlatPoints::Single((pt([7, 0, 0, 3, 0]), PlaneId::Pi0))
        );
        assert!(line("L0(2)").flat_points().is_err());
    }

    #[test]
    fn relation_examples() {
        let metis = LinearRelation::from_ints([1, 0, -1, -1, 0], 1).unwrap();
        assert!(relation_on_line(&metis, &line("F1(2,2/3)")).unwrap());
        assert!(!relation_on_line(&metis, &line("F0(3/2,1/2)")).unwrap());
        let qr = LinearRelation::from_ints([0, 0, 1, -1, -1], 0).unwrap();
        assert!(relation_on_line(&qr, &line("P(5/3,2/3)")).unwrap());
        assert!(relation_on_line(&qr, &line("L0(2)")).is_err());
    }

    #[test]
    fn propagation_examples() {
        let rel = LinearRelation::from_ints([-1, 1, -1, 0, 0], -1).unwrap();
        assert!(table_v_propagation(&rel, &line("P(5/3,2/3)"), &pt([10, 15, 6, 4, 2])).unwrap());
        let metis = LinearRelation::from_ints([1, 0, -1, -1, 0], 1).unwrap();
        assert!(table_v_propagation(&metis, &line("F1(2,2/3)"), &pt([13, 26, 8, 4, 2])).unwrap());
        let rep = line("R(7,7,3,3,1)");
        let bad = LinearRelation::from_ints([0, 1, -2, 0, 1], 0).unwrap();
        assert!(!table_v_propagation(&bad, &rep, &pt([7, 7, 3, 3, 1])).unwrap());
        let good = LinearRelation::from_ints([0, 1, -3, 0, 2], 0).unwrap();
        assert!(table_v_propagation(&good, &rep, &pt([7, 7, 3, 3, 1])).unwrap());
        assert!(matches!(
            table_v_propagation(&metis, &line("F1(2,2/3)"), &pt([7, 7, 3, 3, 1])),
            Err(Error::NotOnLine { .. })
        ));
    }

    #[test]
    fn descriptor_validation_and_parsing() {
        assert!("P(1,1)".parse::<LineDescriptor>().is_err());
        assert!("F0(0,1)".parse::<LineDescriptor>().is_err());
        assert!("LP(0)".parse::<LineDescriptor>().is_err());
        assert!("R(7,0,0,3,0)".parse::<LineDescriptor>().is_err());
        assert!("Q(1,2)".parse::<LineDescriptor>().is_err());
        assert!("P(1,2,3)".parse::<LineDescriptor>().is_err());
        for s in ["P(5/3,2/3)", "F0(3/2,1/2)", "F1(-2,7)", "LP(-3)", "L0(2)", "L1(1/2)", "R(13,26,8,4,2)"] {
            assert_eq!(line(s).to_string(), s);
        }
    }
}
