//! Number-theoretic existence tests for design parameters: Bruck–Ryser–Chowla
//! (with Schützenberger's even case), the Hall–Connor transfer, Wilson's
//! prime-power construction, the Pell-like family behind the F₁(1,1/3)
//! parents, and the combined per-point sieve.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{exact_sqrt, exact_sqrt_u128, is_prime_power, is_residue_mod_squarefree, squarefree_decompose};
use crate::enumeration::{Catalog, CatalogStatus};
use crate::error::{Error, Result};
use crate::rational::{as_integer, int};
use crate::variety::DesignPoint;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    RuledOut,
    NotRuledOut,
    ExistsByCriterion,
    Inapplicable,
}

impl Outcome {
    /// Merge order: ruled out dominates, a construction beats "not ruled out".
    fn strength(self) -> u8 {
        match self {
            Outcome::Inapplicable => 0,
            Outcome::NotRuledOut => 1,
            Outcome::ExistsByCriterion => 2,
            Outcome::RuledOut => 3,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Outcome::RuledOut => "ruled-out",
            Outcome::NotRuledOut => "not-ruled-out",
            Outcome::ExistsByCriterion => "exists-by-criterion",
            Outcome::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReasonTag {
    Integrality,
    Positivity,
    Proper,
    Fisher,
    /// Odd-v Bruck–Ryser–Chowla condition.
    Brc,
    /// Even-v condition: the order must be a square.
    Schutzenberger,
    HallConnor,
    WilsonT7,
    Catalog,
    /// Passed every applicable check.
    Admissible,
}

impl ReasonTag {
    pub fn token(self) -> &'static str {
        match self {
            ReasonTag::Integrality => "integrality",
            ReasonTag::Positivity => "positivity",
            ReasonTag::Proper => "proper",
            ReasonTag::Fisher => "fisher",
            ReasonTag::Brc => "brc",
            ReasonTag::Schutzenberger => "schutzenberger",
            ReasonTag::HallConnor => "hall-connor",
            ReasonTag::WilsonT7 => "wilson-t7",
            ReasonTag::Catalog => "catalog",
            ReasonTag::Admissible => "admissible",
        }
    }
}

/// One step of a verdict's reasoning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reason {
    pub tag: ReasonTag,
    pub outcome: Outcome,
    pub text: String,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.tag.token(), self.outcome, self.text)
    }
}

/// A checkable witness attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `c₀x² + c₁y² + c₂z² = 0` with `(x,y,z) ≠ 0`.
    Ternary { coeffs: [BigInt; 3], witness: [BigInt; 3] },
    /// `n = root²`.
    Square { n: BigInt, root: BigInt },
    /// `q = prime^exponent`.
    PrimePower { q: u64, prime: u64, exponent: u32 },
}

impl Certificate {
    pub fn verify(&self) -> bool {
        match self {
            Certificate::Ternary { coeffs, witness } => {
                witness.iter().any(|w| !w.is_zero())
                    && coeffs
                        .iter()
                        .zip(witness)
                        .fold(BigInt::zero(), |acc, (c, w)| acc + c * w * w)
                        .is_zero()
            }
            Certificate::Square { n, root } => root * root == *n,
            Certificate::PrimePower { q, prime, exponent } => {
                is_prime_power(*prime).ok().flatten() == Some((*prime, 1))
                    && prime.checked_pow(*exponent) == Some(*q)
            }
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Ternary { coeffs, witness } => {
                write!(f, "({},{},{}) solves ", witness[0], witness[1], witness[2])?;
                for (i, (c, var)) in coeffs.iter().zip(["x²", "y²", "z²"]).enumerate() {
                    match (i, c.is_negative()) {
                        (0, _) => write!(f, "{c}{var}")?,
                        (_, true) => write!(f, " - {}{var}", -c)?,
                        (_, false) => write!(f, " + {c}{var}")?,
                    }
                }
                f.write_str(" = 0")
            }
            Certificate::Square { n, root } => write!(f, "{n} = {root}²"),
            Certificate::PrimePower { q, prime, exponent } => write!(f, "{q} = {prime}^{exponent}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Every check that was run, in order.
    pub reasons: Vec<Reason>,
    pub certificate: Option<Certificate>,
    pub catalog: Option<CatalogStatus>,
}

impl Verdict {
    fn single(tag: ReasonTag, outcome: Outcome, text: String, certificate: Option<Certificate>) -> Self {
        Verdict {
            outcome,
            reasons: vec![Reason { tag, outcome, text }],
            certificate,
            catalog: None,
        }
    }

    /// The first reason whose outcome is the verdict's outcome.
    pub fn primary_reason(&self) -> Option<&Reason> {
        self.reasons.iter().find(|r| r.outcome == self.outcome)
    }

    pub fn is_ruled_out(&self) -> bool {
        self.outcome == Outcome::RuledOut
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.outcome)?;
        if let Some(r) = self.primary_reason() {
            write!(f, " ({})", r.text)?;
        }
        Ok(())
    }
}

/// Result of deciding `ax² + by² + cz² = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryResult {
    pub solvable: bool,
    /// A nontrivial solution when one was found within the search cap.
    pub witness: Option<[BigInt; 3]>,
}

const WITNESS_SEARCH_CAP: u128 = 50_000_000;

/// Decides whether `ax² + by² + cz² = 0` has a nontrivial integer solution.
///
/// Reduction to Legendre's normal form:
/// 1. divide out `gcd(a, b, c)`;
/// 2. replace each coefficient by its squarefree part (`a = s q²` becomes `s`
///    with `x` rescaled by `q`);
/// 3. while two coefficients share a factor `g`, `g` divides the third
///    variable, and `(a, b, c) → (a/g, b/g, cg)`.
///
/// The reduced form is solvable iff the coefficients are not all of one sign
/// and `-bc`, `-ca`, `-ab` are squares modulo `|a|`, `|b|`, `|c|`. A witness is
/// then searched inside Holzer's box `|x| ≤ √|bc|`, `|y| ≤ √|ca|` and mapped
/// back to the original coefficients.
pub fn ternary_solvable(a: i64, b: i64, c: i64) -> Result<TernaryResult> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Domain(format!("ternary form ({a},{b},{c}) has a zero coefficient")));
    }
    let original = [a as i128, b as i128, c as i128];
    let g = original[0].gcd(&original[1]).gcd(&original[2]);
    let mut coeffs = original.map(|x| x / g);
    // original variable i = scale_num[i] / scale_den[i] * reduced variable i
    let mut scale_num = [1u128; 3];
    let mut scale_den = [1u128; 3];
    for i in 0..3 {
        let (s, q) = squarefree_decompose(coeffs[i]);
        coeffs[i] = s;
        scale_den[i] = q;
    }
    loop {
        let mut changed = false;
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let g = coeffs[i].gcd(&coeffs[j]);
            if g > 1 {
                coeffs[i] /= g;
                coeffs[j] /= g;
                coeffs[k] *= g;
                scale_num[k] *= g as u128;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let [ra, rb, rc] = coeffs;
    let mixed = !(ra > 0 && rb > 0 && rc > 0) && !(ra < 0 && rb < 0 && rc < 0);
    let solvable = mixed
        && is_residue_mod_squarefree(-rb * rc, ra.unsigned_abs())
        && is_residue_mod_squarefree(-rc * ra, rb.unsigned_abs())
        && is_residue_mod_squarefree(-ra * rb, rc.unsigned_abs());
    if !solvable {
        return Ok(TernaryResult {
            solvable: false,
            witness: None,
        });
    }
    let witness = holzer_search(coeffs).map(|w| {
        // x_i = w_i * num_i / den_i; clear denominators.
        let den = scale_den.iter().fold(1u128, |acc, d| acc.lcm(d));
        let lifted: [BigInt; 3] = core::array::from_fn(|i| {
            BigInt::from(w[i]) * BigInt::from(scale_num[i]) * BigInt::from(den / scale_den[i])
        });
        let g = lifted.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        lifted.map(|x| x / &g)
    });
    if let Some(w) = &witness {
        let cert = Certificate::Ternary {
            coeffs: original.map(BigInt::from),
            witness: w.clone(),
        };
        debug_assert!(cert.verify());
    }
    Ok(TernaryResult {
        solvable: true,
        witness,
    })
}

fn holzer_search([a, b, c]: [i128; 3]) -> Option<[i128; 3]> {
    let xmax = (b * c).unsigned_abs().sqrt();
    let ymax = (c * a).unsigned_abs().sqrt();
    if (xmax + 1).saturating_mul(ymax + 1) > WITNESS_SEARCH_CAP {
        return None;
    }
    for x in 0..=xmax as i128 {
        for y in 0..=ymax as i128 {
            if x == 0 && y == 0 {
                continue;
            }
            let rest = -(a * x * x + b * y * y);
            if rest % c != 0 {
                continue;
            }
            let z2 = rest / c;
            if z2 < 0 {
                continue;
            }
            if let Some(z) = exact_sqrt_u128(z2 as u128) {
                return Some([x, y, z as i128]);
            }
        }
    }
    None
}

fn integer_coords(p: &DesignPoint) -> Option<[BigInt; 5]> {
    let [v, b, r, k, l] = p.to_array();
    Some([as_integer(&v)?, as_integer(&b)?, as_integer(&r)?, as_integer(&k)?, as_integer(&l)?])
}

fn to_i64(n: &BigInt, what: &str) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::Domain(format!("{what} = {n} exceeds the supported range")))
}

/// Bruck–Ryser–Chowla for a symmetric point. Non-symmetric points are
/// `Inapplicable`; the point must otherwise be integral, proper and on the
/// variety.
pub fn brc(p: &DesignPoint) -> Result<Verdict> {
    p.require_on_variety()?;
    if !p.is_symmetric() {
        return Ok(Verdict::single(
            ReasonTag::Brc,
            Outcome::Inapplicable,
            format!("{p} is not symmetric"),
            None,
        ));
    }
    let [v, _, r, k, lambda] =
        integer_coords(p).ok_or_else(|| Error::Precondition(format!("{p} is not integral")))?;
    if k < BigInt::from(2) || k >= v || lambda < BigInt::one() {
        return Err(Error::Precondition(format!("{p} is not a proper design point")));
    }
    let n = &r - &lambda;
    if v.is_even() {
        return Ok(match exact_sqrt(&n) {
            Some(root) => Verdict::single(
                ReasonTag::Schutzenberger,
                Outcome::NotRuledOut,
                format!("v even and n = r-λ = {n} is a square"),
                Some(Certificate::Square { n, root }),
            ),
            None => Verdict::single(
                ReasonTag::Schutzenberger,
                Outcome::RuledOut,
                format!("v even and n = r-λ = {n} is not a square"),
                None,
            ),
        });
    }
    // x² = n y² + (-1)^((v-1)/2) λ z²
    let half: BigInt = (&v - 1) / 2;
    let signed_lambda = if half.is_even() { lambda.clone() } else { -lambda.clone() };
    let coeffs = [BigInt::one(), -n.clone(), -signed_lambda.clone()];
    let equation = format!("x² = {n}y² {} {}z²", if half.is_even() { "+" } else { "-" }, lambda);
    let res = ternary_solvable(to_i64(&coeffs[0], "coefficient")?, to_i64(&coeffs[1], "n")?, to_i64(&coeffs[2], "λ")?)?;
    Ok(if res.solvable {
        Verdict::single(
            ReasonTag::Brc,
            Outcome::NotRuledOut,
            format!("{equation} has a nontrivial solution"),
            res.witness.map(|witness| Certificate::Ternary { coeffs, witness }),
        )
    } else {
        Verdict::single(
            ReasonTag::Brc,
            Outcome::RuledOut,
            format!("{equation} has no nontrivial solution"),
            None,
        )
    })
}

/// Hall–Connor: a quasi-residual point with `λ = 2` is residual, so it is
/// ruled out whenever its symmetric parent `(b+1, b+1, r, r, 2)` is.
pub fn hall_connor(p: &DesignPoint) -> Result<Verdict> {
    p.require_on_variety()?;
    let two = int(2);
    if p.lambda != two || p.r != &p.k + &p.lambda {
        return Ok(Verdict::single(
            ReasonTag::HallConnor,
            Outcome::Inapplicable,
            format!("{p} is not quasi-residual with λ = 2"),
            None,
        ));
    }
    let parent = DesignPoint::new(&p.b + int(1), &p.b + int(1), p.r.clone(), p.r.clone(), two);
    let pv = brc(&parent)?;
    let detail = pv.reasons.first().map(|r| r.text.clone()).unwrap_or_default();
    let outcome = if pv.is_ruled_out() {
        Outcome::RuledOut
    } else {
        Outcome::NotRuledOut
    };
    let verb = if pv.is_ruled_out() { "ruled out" } else { "not ruled out" };
    Ok(Verdict::single(
        ReasonTag::HallConnor,
        outcome,
        format!("Hall-Connor (simple-design convention): parent {parent} {verb}; {detail}"),
        pv.certificate,
    ))
}

/// Wilson's construction: for a prime power `q ≥ k` with `2λ` a multiple of
/// `k` or `k-1`, a `(q, k, λ)` design exists when `k(k-1) | λ(q-1)`.
pub fn wilson_t7(q: u64, k: u64, lambda: u64) -> Verdict {
    if k < 2 || lambda < 1 {
        return Verdict::single(
            ReasonTag::WilsonT7,
            Outcome::Inapplicable,
            format!("needs k ≥ 2 and λ ≥ 1, got k = {k}, λ = {lambda}"),
            None,
        );
    }
    if !(2 * lambda).is_multiple_of(k) && !(2 * lambda).is_multiple_of(k - 1) {
        return Verdict::single(
            ReasonTag::WilsonT7,
            Outcome::Inapplicable,
            format!("2λ = {} is a multiple of neither k nor k-1", 2 * lambda),
            None,
        );
    }
    let pp = if q >= 2 { is_prime_power(q).ok().flatten() } else { None };
    let divides = (lambda as u128 * (q as u128).saturating_sub(1)).is_multiple_of(k as u128 * (k as u128 - 1));
    match pp {
        Some((prime, exponent)) if q >= k && divides => Verdict::single(
            ReasonTag::WilsonT7,
            Outcome::ExistsByCriterion,
            format!("q = {q} is a prime power ≥ k and k(k-1) | λ(q-1)"),
            Some(Certificate::PrimePower { q, prime, exponent }),
        ),
        Some(_) if q < k => Verdict::single(
            ReasonTag::WilsonT7,
            Outcome::NotRuledOut,
            format!("q = {q} is below k = {k}"),
            None,
        ),
        Some(_) => Verdict::single(
            ReasonTag::WilsonT7,
            Outcome::NotRuledOut,
            format!("k(k-1) = {} does not divide λ(q-1) = {}", k * (k - 1), lambda as u128 * (q as u128 - 1)),
            None,
        ),
        None => Verdict::single(
            ReasonTag::WilsonT7,
            Outcome::NotRuledOut,
            format!("q = {q} is not a prime power"),
            None,
        ),
    }
}

/// Solutions of `3l² - 2m² = 1` in ascending order, from `(1,1)` via
/// `(l, m) → (5l + 4m, 6l + 5m)`.
pub fn pell_solutions(count: usize) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(count);
    let (mut l, mut m) = (BigInt::one(), BigInt::one());
    for _ in 0..count {
        out.push((l.clone(), m.clone()));
        let next = (&l * 5 + &m * 4, &l * 6 + &m * 5);
        l = next.0;
        m = next.1;
    }
    out
}

/// The symmetric parent `(3m²+1, m², (m²-1)/3)` of the F₁(1,1/3) family point
/// indexed by `m`. Even `m` always passes, with the explicit solution
/// `X = Y = 1, Z = m` of `Z² = ((2m²+1)/3)X² + ((m²-1)/3)Y²`; odd `m` passes
/// only when the order `(2m²+1)/3` is a square.
pub fn cb_parent_check(m: u64) -> Result<Verdict> {
    if m < 2 {
        return Err(Error::Domain(format!("m = {m}: need m ≥ 2")));
    }
    if m.is_multiple_of(3) {
        return Err(Error::Domain(format!("m = {m} is divisible by 3; parameters are not integral")));
    }
    let m2 = BigInt::from(m) * BigInt::from(m);
    let k = m2.clone();
    let lambda: BigInt = (&m2 - 1) / 3;
    let v: BigInt = &m2 * 3 + 1;
    let parent = DesignPoint::from_array([&v, &v, &k, &k, &lambda].map(|x| Rational::from_integer(x.clone())));
    let mut verdict = brc(&parent)?;
    if m.is_multiple_of(2) {
        let order: BigInt = (&m2 * 2 + 1) / 3;
        let cert = Certificate::Ternary {
            coeffs: [order, lambda, BigInt::from(-1)],
            witness: [BigInt::one(), BigInt::one(), BigInt::from(m)],
        };
        debug_assert!(cert.verify());
        verdict.certificate = Some(cert);
    }
    Ok(verdict)
}

/// Runs every applicable test on `p` and merges the outcomes. With a catalog,
/// a cataloged status is attached; a catalog entry that contradicts a
/// criterion is an error.
pub fn sieve_point(p: &DesignPoint, catalog: Option<&Catalog>) -> Result<Verdict> {
    p.require_on_variety()?;
    let mut reasons = Vec::new();
    let mut certificate = None;
    let mut outcome = Outcome::NotRuledOut;
    let mut record = |v: Verdict, outcome: &mut Outcome, certificate: &mut Option<Certificate>| {
        if v.outcome.strength() > outcome.strength() {
            *outcome = v.outcome;
            *certificate = v.certificate.clone();
        }
        reasons.extend(v.reasons);
    };

    match integer_coords(p) {
        None => record(
            Verdict::single(ReasonTag::Integrality, Outcome::RuledOut, format!("{p} is not integral"), None),
            &mut outcome,
            &mut certificate,
        ),
        Some([v, b, r, k, lambda]) => {
            let one = BigInt::one();
            if b < one || r < one || lambda < one {
                record(
                    Verdict::single(ReasonTag::Positivity, Outcome::RuledOut, "b, r and λ must be positive".into(), None),
                    &mut outcome,
                    &mut certificate,
                );
            } else if k < BigInt::from(2) || k >= v {
                record(
                    Verdict::single(ReasonTag::Proper, Outcome::Inapplicable, "outside 2 ≤ k ≤ v-1".into(), None),
                    &mut outcome,
                    &mut certificate,
                );
            } else if b < v {
                record(
                    Verdict::single(
                        ReasonTag::Fisher,
                        Outcome::RuledOut,
                        format!("Fisher's inequality fails: b = {b} < v = {v}"),
                        None,
                    ),
                    &mut outcome,
                    &mut certificate,
                );
            } else {
                if p.is_symmetric() {
                    record(brc(p)?, &mut outcome, &mut certificate);
                }
                let hc = hall_connor(p)?;
                if hc.outcome != Outcome::Inapplicable {
                    record(hc, &mut outcome, &mut certificate);
                }
                if let (Some(v), Some(k), Some(l)) = (v.to_u64(), k.to_u64(), lambda.to_u64()) {
                    let w = wilson_t7(v, k, l);
                    if w.outcome != Outcome::Inapplicable {
                        record(w, &mut outcome, &mut certificate);
                    }
                }
            }
        }
    }

    let mut status = None;
    if let Some(entry) = catalog.and_then(|c| c.get(p)) {
        let contradiction = match (entry.status, outcome) {
            (s, Outcome::RuledOut) if s.design_exists() => true,
            (CatalogStatus::Nonexistent, Outcome::ExistsByCriterion) => true,
            _ => false,
        };
        if contradiction {
            return Err(Error::CatalogContradiction {
                point: Box::new(p.clone()),
                status: entry.status.to_string(),
                detail: reasons.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; "),
            });
        }
        reasons.push(Reason {
            tag: ReasonTag::Catalog,
            outcome,
            text: if entry.source.is_empty() {
                format!("cataloged as {}", entry.status)
            } else {
                format!("cataloged as {} ({})", entry.status, entry.source)
            },
        });
        status = Some(entry.status);
    }

    if !reasons.iter().any(|r| r.outcome == outcome) {
        reasons.push(Reason {
            tag: ReasonTag::Admissible,
            outcome,
            text: "no criterion rules it out".into(),
        });
    }
    Ok(Verdict {
        outcome,
        reasons,
        certificate,
        catalog: status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: [i64; 5]) -> DesignPoint {
        DesignPoint::from_ints(a)
    }

    #[test]
    fn ternary_examples() {
        assert!(!ternary_solvable(1, 1, -6).unwrap().solvable);
        let r = ternary_solvable(1, -2, -1).unwrap();
        assert!(r.solvable);
        let w = r.witness.unwrap();
        let [x, y, z] = w.map(|n| n.to_i64().unwrap());
        assert_eq!(x * x - 2 * y * y - z * z, 0);
        assert!(!ternary_solvable(1, 1, 1).unwrap().solvable);
        assert!(ternary_solvable(0, 1, 1).is_err());
    }

    #[test]
    fn ternary_witness_maps_back() {
        // non-squarefree, non-coprime coefficients
        for (a, b, c) in [(4, 9, -25), (12, -18, 6), (8, -2, -6), (45, -20, 1), (-3, 6, 2)] {
            let r = ternary_solvable(a, b, c).unwrap();
            if let Some(w) = r.witness {
                let cert = Certificate::Ternary {
                    coeffs: [a, b, c].map(BigInt::from),
                    witness: w,
                };
                assert!(cert.verify(), "{a},{b},{c}");
            } else {
                assert!(!r.solvable, "{a},{b},{c}");
            }
        }
    }

    #[test]
    fn brc_examples() {
        assert!(brc(&pt([22, 22, 7, 7, 2])).unwrap().is_ruled_out());
        assert!(brc(&pt([91, 91, 36, 36, 14])).unwrap().is_ruled_out());
        assert!(brc(&pt([43, 43, 7, 7, 1])).unwrap().is_ruled_out());
        for p in [[25, 25, 9, 9, 3], [112, 112, 37, 37, 12], [16, 16, 6, 6, 2], [7, 7, 3, 3, 1]] {
            let v = brc(&pt(p)).unwrap();
            assert_eq!(v.outcome, Outcome::NotRuledOut, "{p:?}");
            assert!(v.certificate.is_none_or(|c| c.verify()));
        }
        assert_eq!(brc(&pt([10, 15, 6, 4, 2])).unwrap().outcome, Outcome::Inapplicable);
    }

    #[test]
    fn hall_connor_examples() {
        let v = hall_connor(&pt([15, 21, 7, 5, 2])).unwrap();
        assert!(v.is_ruled_out());
        assert!(v.reasons[0].text.contains("Hall-Connor (simple-design convention)"));
        assert!(v.reasons[0].text.contains("22,22,7,7,2"));
        assert_eq!(hall_connor(&pt([10, 15, 6, 4, 2])).unwrap().outcome, Outcome::NotRuledOut);
        assert_eq!(hall_connor(&pt([13, 26, 8, 4, 2])).unwrap().outcome, Outcome::Inapplicable);
    }

    #[test]
    fn wilson_examples() {
        let v = wilson_t7(13, 4, 2);
        assert_eq!(v.outcome, Outcome::ExistsByCriterion);
        assert!(v.certificate.unwrap().verify());
        assert_eq!(wilson_t7(7, 3, 1).outcome, Outcome::ExistsByCriterion);
        assert_eq!(wilson_t7(10, 4, 2).outcome, Outcome::NotRuledOut);
        assert_eq!(wilson_t7(16, 6, 2).outcome, Outcome::Inapplicable);
    }

    #[test]
    fn pell() {
        let s = pell_solutions(2);
        assert_eq!(s, vec![(BigInt::from(1), BigInt::from(1)), (BigInt::from(9), BigInt::from(11))]);
        let s = pell_solutions(9);
        assert_eq!(s[8].1, BigInt::from(102_558_961u64));
        for (l, m) in &s {
            assert_eq!(BigInt::from(3) * l * l - BigInt::from(2) * m * m, BigInt::one());
        }
    }

    #[test]
    fn cb_parents() {
        let v = cb_parent_check(4).unwrap();
        assert_eq!(v.outcome, Outcome::NotRuledOut);
        let cert = v.certificate.unwrap();
        assert!(cert.verify());
        assert!(matches!(&cert, Certificate::Ternary { witness, .. } if *witness == [1, 1, 4].map(BigInt::from)));
        assert!(cb_parent_check(5).unwrap().is_ruled_out());
        assert_eq!(cb_parent_check(11).unwrap().outcome, Outcome::NotRuledOut);
        assert!(cb_parent_check(6).is_err());
    }

    #[test]
    fn sieve_examples() {
        let v = sieve_point(&pt([15, 21, 7, 5, 2]), None).unwrap();
        assert!(v.is_ruled_out());
        assert_eq!(v.primary_reason().unwrap().tag, ReasonTag::HallConnor);
        assert_eq!(sieve_point(&pt([112, 112, 37, 37, 12]), None).unwrap().outcome, Outcome::NotRuledOut);
        let v = sieve_point(&pt([21, 14, 4, 6, 1]), None).unwrap();
        assert!(v.is_ruled_out());
        assert_eq!(v.primary_reason().unwrap().tag, ReasonTag::Fisher);
        // vr = bk holds but r(k-1) = 4 differs from λ(v-1) = 5
        assert!(sieve_point(&pt([6, 4, 2, 3, 1]), None).is_err());
        assert_eq!(sieve_point(&pt([13, 26, 8, 4, 2]), None).unwrap().outcome, Outcome::ExistsByCriterion);
        assert!(sieve_point(&pt([4, 6, 3, 2, 2]), None).is_err());
    }

    #[test]
    fn catalog_contradiction_is_an_error() {
        use crate::enumeration::CatalogEntry;
        let cat = Catalog::from_entries([
            CatalogEntry::new(pt([22, 22, 7, 7, 2]), CatalogStatus::Exists, "bogus").unwrap(),
            CatalogEntry::new(pt([22, 33, 12, 8, 4]), CatalogStatus::Nonexistent, "").unwrap(),
        ])
        .unwrap();
        assert!(matches!(
            sieve_point(&pt([22, 22, 7, 7, 2]), Some(&cat)),
            Err(Error::CatalogContradiction { .. })
        ));
        let v = sieve_point(&pt([22, 33, 12, 8, 4]), Some(&cat)).unwrap();
        assert_eq!(v.catalog, Some(CatalogStatus::Nonexistent));
        assert_eq!(v.outcome, Outcome::NotRuledOut);
    }
}
