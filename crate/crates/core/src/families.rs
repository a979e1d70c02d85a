//! Named families of design points and the parameter maps between them:
//! symmetric parents of quasi-residual and quasi-derived points, 3-design
//! lines, the Hadamard 3-design derivation, family (A) and the
//! difference-family lines handed to Wilson's construction.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lines::{lines_through, LineDescriptor, LineFamily};
use crate::rational::{as_integer, int};
use crate::sieve::{wilson_t7, Verdict};
use crate::variety::DesignPoint;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// `b = v`.
    Symmetric,
    /// `v = r + k + 1`.
    Metis,
    /// Symmetric and Metis.
    Hadamard,
    /// `r = k + λ`.
    QuasiResidual,
    /// `k = λ + 1`.
    QuasiDerived,
    /// `b = 4(r - λ)`.
    FamilyA,
    /// Quasi-residual with `k | v` and `v | k²` (integral points only).
    AffineCandidate,
    /// On a 3-design line with `λ₃` a positive integer.
    ThreeDesignCompatible,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 8] = [
        FamilyTag::Symmetric,
        FamilyTag::Metis,
        FamilyTag::Hadamard,
        FamilyTag::QuasiResidual,
        FamilyTag::QuasiDerived,
        FamilyTag::FamilyA,
        FamilyTag::AffineCandidate,
        FamilyTag::ThreeDesignCompatible,
    ];

    pub fn token(self) -> &'static str {
        match self {
            FamilyTag::Symmetric => "symmetric",
            FamilyTag::Metis => "metis",
            FamilyTag::Hadamard => "hadamard",
            FamilyTag::QuasiResidual => "quasi-residual",
            FamilyTag::QuasiDerived => "quasi-derived",
            FamilyTag::FamilyA => "family-a",
            FamilyTag::AffineCandidate => "affine-candidate",
            FamilyTag::ThreeDesignCompatible => "three-design-compatible",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.token() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family tag {s:?}")))
    }
}

pub fn is_metis(p: &DesignPoint) -> bool {
    p.v == &p.r + &p.k + int(1)
}

pub fn is_quasi_residual(p: &DesignPoint) -> bool {
    p.r == &p.k + &p.lambda
}

pub fn is_quasi_derived(p: &DesignPoint) -> bool {
    p.k == &p.lambda + int(1)
}

pub fn is_family_a(p: &DesignPoint) -> bool {
    p.b == (&p.r - &p.lambda) * int(4)
}

pub fn is_affine_candidate(p: &DesignPoint) -> bool {
    if !is_quasi_residual(p) {
        return false;
    }
    let (Some(v), Some(k)) = (as_integer(&p.v), as_integer(&p.k)) else {
        return false;
    };
    !k.is_zero() && !v.is_zero() && v.is_multiple_of(&k) && (&k * &k).is_multiple_of(&v)
}

/// Every tag the point satisfies.
pub fn classify(p: &DesignPoint) -> Result<BTreeSet<FamilyTag>> {
    p.require_on_variety()?;
    let mut tags = BTreeSet::new();
    let symmetric = p.is_symmetric();
    let metis = is_metis(p);
    let checks = [
        (FamilyTag::Symmetric, symmetric),
        (FamilyTag::Metis, metis),
        (FamilyTag::Hadamard, symmetric && metis),
        (FamilyTag::QuasiResidual, is_quasi_residual(p)),
        (FamilyTag::QuasiDerived, is_quasi_derived(p)),
        (FamilyTag::FamilyA, is_family_a(p)),
        (FamilyTag::AffineCandidate, is_affine_candidate(p)),
        (FamilyTag::ThreeDesignCompatible, three_design_witness(p)?.is_some()),
    ];
    tags.extend(checks.into_iter().filter(|(_, holds)| *holds).map(|(t, _)| t));
    Ok(tags)
}

/// On an F₁ line the Metis relation holds exactly when `p = f/(f+1)`.
pub fn metis_f1_parameter(f: &Rational) -> Result<Rational> {
    if f.is_zero() || *f == int(-1) {
        return Err(Error::Domain(format!("metis_f1_parameter({f}): f must not be 0 or -1")));
    }
    Ok(f / (f + int(1)))
}

/// `(b+1, b+1, r, r, λ)`, the symmetric design a quasi-residual point would
/// be the residual of.
pub fn residual_parent(p: &DesignPoint) -> Result<DesignPoint> {
    p.require_on_variety()?;
    if !is_quasi_residual(p) {
        return Err(Error::Precondition(format!("{p} is not quasi-residual (r ≠ k+λ)")));
    }
    Ok(parent_map(ParentKind::Residual, p))
}

/// `(b+1, b+1, v, v, k)`, the symmetric design a quasi-derived point with
/// `v = r + 1` would be derived from.
pub fn derived_parent(p: &DesignPoint) -> Result<DesignPoint> {
    p.require_on_variety()?;
    if !is_quasi_derived(p) {
        return Err(Error::Precondition(format!("{p} is not quasi-derived (k ≠ λ+1)")));
    }
    if p.v != &p.r + int(1) {
        return Err(Error::Precondition(format!("{p} does not satisfy v = r+1")));
    }
    Ok(parent_map(ParentKind::Derived, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParentKind {
    Residual,
    Derived,
}

fn parent_map(kind: ParentKind, p: &DesignPoint) -> DesignPoint {
    let b1 = &p.b + int(1);
    match kind {
        ParentKind::Residual => DesignPoint::new(b1.clone(), b1, p.r.clone(), p.r.clone(), p.lambda.clone()),
        ParentKind::Derived => DesignPoint::new(b1.clone(), b1, p.v.clone(), p.v.clone(), p.k.clone()),
    }
}

/// The line traced by the parents of the points of `line`.
///
/// Applies to `P(f,f-1)` and `F₀(f,f-1)` for residual parents and to `P(f,1)`
/// and `F₁(f,1)` for derived parents. The image is found by mapping two points
/// of `line` and picking the design line through both images.
pub fn parent_line_image(line: &LineDescriptor, kind: ParentKind) -> Result<LineDescriptor> {
    line.validate()?;
    let applicable = match (kind, line) {
        (ParentKind::Residual, LineDescriptor::P { f, p } | LineDescriptor::F0 { f, p }) => *p == f - int(1),
        (ParentKind::Derived, LineDescriptor::P { p, .. } | LineDescriptor::F1 { p, .. }) => p.is_one(),
        _ => false,
    };
    if !applicable {
        return Err(Error::UnsupportedLine {
            op: match kind {
                ParentKind::Residual => "residual parent_line_image",
                ParentKind::Derived => "derived parent_line_image",
            },
            line: line.to_string(),
        });
    }
    let param = line.parametrization()?;
    let mut images = (1..40i64).filter_map(|t| {
        let img = parent_map(kind, &param.at(&int(t)));
        img.is_bumpy().ok()?.then_some(img)
    });
    let (Some(first), Some(second)) = (images.next(), images.next()) else {
        return Err(Error::Domain(format!("{line}: parent images are flat")));
    };
    for candidate in lines_through(&first)? {
        if candidate.family() != LineFamily::Replicate && candidate.contains(&second)? {
            return Ok(candidate);
        }
    }
    Err(Error::Domain(format!("{line}: parent images {first} and {second} share no design line")))
}

/// `λ₃ = λ(k-2)/(v-2)`, the triple count a 3-design with these parameters
/// would have.
pub fn lambda3(p: &DesignPoint) -> Result<Rational> {
    let two = int(2);
    if p.v == two {
        return Err(Error::Domain("lambda3 is undefined at v = 2".into()));
    }
    Ok(&p.lambda * (&p.k - &two) / (&p.v - &two))
}

/// Lines along which `λ₃` is affine in the line parameter:
/// `P` with `p = f/2`, `F₀` with `p = -f`, `F₁` with `p = 2f`.
pub fn three_design_line(line: &LineDescriptor) -> Result<bool> {
    line.validate()?;
    match line {
        LineDescriptor::P { f, p } => Ok(p * int(2) == *f),
        LineDescriptor::F0 { f, p } => Ok(*p == -f.clone()),
        LineDescriptor::F1 { f, p } => Ok(*p == f * int(2)),
        _ => Err(Error::UnsupportedLine {
            op: "three_design_line",
            line: line.to_string(),
        }),
    }
}

/// A 3-design line through `p` when `p` is bumpy and integral with `λ₃` a
/// positive integer.
pub fn three_design_witness(p: &DesignPoint) -> Result<Option<LineDescriptor>> {
    p.require_on_variety()?;
    if !p.is_integral() || !p.is_bumpy()? || p.v == int(2) {
        return Ok(None);
    }
    let l3 = lambda3(p)?;
    if !l3.is_integer() || l3 < Rational::one() {
        return Ok(None);
    }
    for line in lines_through(p)? {
        if line.fp().is_some() && three_design_line(&line)? {
            return Ok(Some(line));
        }
    }
    Ok(None)
}

/// From the Hadamard 3-design point `(2λ+2, 4λ+2, 2λ+1, λ+1, λ)` on `P(2,1)`
/// with `λ` odd, the point `(λ'+2, 4λ'+4, 2λ'+2, λ'/2+1, λ')`, `λ' = λ-1`, on
/// `P(4,2)`.
pub fn hadamard3_derive(p: &DesignPoint) -> Result<DesignPoint> {
    let line = LineDescriptor::P { f: int(2), p: int(1) };
    if !line.contains(p)? {
        return Err(Error::NotOnLine {
            point: Box::new(p.clone()),
            line: line.to_string(),
        });
    }
    let lambda = as_integer(&p.lambda).ok_or_else(|| Error::Precondition(format!("{p}: λ is not an integer")))?;
    if lambda.is_even() {
        return Err(Error::Precondition(format!("{p}: λ must be odd")));
    }
    let l: BigInt = lambda - 1;
    let q = |n: BigInt| Rational::from_integer(n);
    Ok(DesignPoint::new(
        q(&l + 2),
        q(&l * 4 + 4),
        q(&l * 2 + 2),
        q(&l / 2 + 1),
        q(l),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyAPoint {
    Point(DesignPoint),
    /// Every point of the line is in family (A).
    WholeLine,
    None,
}

/// The points of `line` with `b = 4(r - λ)`. A replicate line is either
/// wholly in family (A) or counted as missing it; its trivial `m = 0` point is
/// not reported.
pub fn family_a_point(line: &LineDescriptor) -> Result<FamilyAPoint> {
    if let LineDescriptor::Replicate(base) = line {
        line.validate()?;
        return Ok(if is_family_a(base) {
            FamilyAPoint::WholeLine
        } else {
            FamilyAPoint::None
        });
    }
    let param = line.parametrization()?;
    let coeffs = [int(0), int(1), int(-4), int(0), int(4)];
    let (constant, slope) = param.linear_form(&coeffs);
    Ok(if !slope.is_zero() {
        FamilyAPoint::Point(param.at(&(-constant / slope)))
    } else if constant.is_zero() {
        FamilyAPoint::WholeLine
    } else {
        FamilyAPoint::None
    })
}

/// `(m², 3m², m²-1, (m²-1)/3, (m²-4)/3)`, a quasi-derived family on `F₁(3,1)`.
pub fn cb_design(m: u64) -> Result<DesignPoint> {
    if m < 2 {
        return Err(Error::Domain(format!("cb_design({m}): need m ≥ 2")));
    }
    if m.is_multiple_of(3) {
        return Err(Error::Domain(format!("cb_design({m}): 3 | m gives non-integral k")));
    }
    let m2 = BigInt::from(m) * BigInt::from(m);
    let q = |n: BigInt| Rational::from_integer(n);
    Ok(DesignPoint::new(
        q(m2.clone()),
        q(&m2 * 3),
        q(&m2 - 1),
        q((&m2 - 1) / 3),
        q((&m2 - 4) / 3),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DifferenceFamilyKind {
    F0,
    F1,
}

/// An F₀ or F₁ line written with `k` as parameter, with the integrality
/// conditions under which Wilson's construction can apply along it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceFamilyLine {
    pub kind: DifferenceFamilyKind,
    pub line: LineDescriptor,
    pub f: Rational,
    pub p: Rational,
    /// `λ = (2p)k/2` on F₀, so `2p` must be an integer.
    pub two_p_integral: bool,
    pub f_integral: bool,
}

pub fn difference_family_line(kind: DifferenceFamilyKind, f: Rational, p: Rational) -> Result<DifferenceFamilyLine> {
    let line = match kind {
        DifferenceFamilyKind::F0 => LineDescriptor::F0 { f: f.clone(), p: p.clone() },
        DifferenceFamilyKind::F1 => LineDescriptor::F1 { f: f.clone(), p: p.clone() },
    };
    line.validate()?;
    Ok(DifferenceFamilyLine {
        kind,
        line,
        two_p_integral: (&p * int(2)).is_integer(),
        f_integral: f.is_integer(),
        f,
        p,
    })
}

impl DifferenceFamilyLine {
    pub fn flags_pass(&self) -> bool {
        self.two_p_integral && self.f_integral
    }

    /// F₀: `v = f(k-1)/p + 1, b = fv, r = fk, λ = pk`.
    /// F₁: `v = fk/p + 1, b = fv, r = fk, λ = p(k-1)`.
    pub fn point_for_k(&self, k: &Rational) -> DesignPoint {
        let (f, p) = (&self.f, &self.p);
        let one = Rational::one();
        let (v, lambda) = match self.kind {
            DifferenceFamilyKind::F0 => (f * (k - &one) / p + &one, p * k),
            DifferenceFamilyKind::F1 => (f * k / p + &one, p * (k - &one)),
        };
        DesignPoint::new(v.clone(), f * &v, f * k, k.clone(), lambda)
    }

    /// Wilson's criterion at `q = v` for the point with block size `k`, when
    /// that point is integral.
    pub fn wilson_handoff(&self, k: u64) -> Option<Verdict> {
        let p = self.point_for_k(&Rational::from_integer(k.into()));
        if !p.is_integral() {
            return None;
        }
        let v = as_integer(&p.v)?.to_u64()?;
        let lambda = as_integer(&p.lambda)?.to_u64()?;
        Some(wilson_t7(v, k, lambda))
    }
}
