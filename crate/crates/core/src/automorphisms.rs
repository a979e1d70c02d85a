//! The affine automorphism group of the variety: multiples `M_m` times the
//! S₃ generated by complementation `C` and the equation swap `N`.
//!
//! Maps act on the right, as in `ΔCN = (ΔC)N`; a word is applied left to
//! right. Multiples commute with everything, so an element is stored as a
//! multiplier together with one of the six reduced words over `{C, N}`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lines::LineDescriptor;
use crate::variety::{DesignPoint, PlaneId};
use crate::Rational;

/// `ΔC = (v, b, b-r, v-k, b-2r+λ)`.
pub fn apply_complement(p: &DesignPoint) -> DesignPoint {
    let two_r = &p.r + &p.r;
    DesignPoint::new(
        p.v.clone(),
        p.b.clone(),
        &p.b - &p.r,
        &p.v - &p.k,
        &p.b - two_r + &p.lambda,
    )
}

/// `ΔM_m = (v, mb, mr, k, mλ)`.
pub fn apply_multiple(p: &DesignPoint, m: &Rational) -> DesignPoint {
    DesignPoint::new(p.v.clone(), m * &p.b, m * &p.r, p.k.clone(), m * &p.lambda)
}

/// `ΔN = (1-k, λ, r, 1-v, b)`; it exchanges the two design equations.
pub fn apply_n(p: &DesignPoint) -> DesignPoint {
    let one = Rational::one();
    DesignPoint::new(
        &one - &p.k,
        p.lambda.clone(),
        p.r.clone(),
        &one - &p.v,
        p.b.clone(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    C,
    N,
}

/// A letter of an input word for [`canonicalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    C,
    N,
    Multiple(Rational),
}

/// The six elements of `⟨C, N⟩ ≅ S₃` as reduced words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum S3Word {
    Identity,
    C,
    N,
    CN,
    NC,
    CNC,
}

type Perm3 = [u8; 3];

const fn then3(first: Perm3, second: Perm3) -> Perm3 {
    [
        second[first[0] as usize],
        second[first[1] as usize],
        second[first[2] as usize],
    ]
}

impl Letter {
    /// Action on the singular points Γ₀, Γ₁, Γ₂.
    fn perm(self) -> Perm3 {
        match self {
            // C fixes Γ₀ and swaps Γ₁ = (1,0,0,0,0) with Γ₂ = (1,0,0,1,0).
            Letter::C => [0, 2, 1],
            // N swaps Γ₀ and Γ₂ and fixes Γ₁.
            Letter::N => [2, 1, 0],
        }
    }

    fn apply(self, p: &DesignPoint) -> DesignPoint {
        match self {
            Letter::C => apply_complement(p),
            Letter::N => apply_n(p),
        }
    }
}

impl S3Word {
    pub const ALL: [S3Word; 6] = [
        S3Word::Identity,
        S3Word::C,
        S3Word::N,
        S3Word::CN,
        S3Word::NC,
        S3Word::CNC,
    ];

    pub fn letters(self) -> &'static [Letter] {
        use Letter::{C, N};
        match self {
            S3Word::Identity => &[],
            S3Word::C => &[C],
            S3Word::N => &[N],
            S3Word::CN => &[C, N],
            S3Word::NC => &[N, C],
            S3Word::CNC => &[C, N, C],
        }
    }

    /// The permutation of `{Γ₀, Γ₁, Γ₂}` (image of index `i` at position `i`).
    pub fn singular_action(self) -> [u8; 3] {
        self.letters()
            .iter()
            .fold([0, 1, 2], |acc, l| then3(acc, l.perm()))
    }

    fn from_action(perm: Perm3) -> S3Word {
        S3Word::ALL
            .into_iter()
            .find(|w| w.singular_action() == perm)
            .expect("S3 is generated by C and N")
    }

    /// `self` followed by `other`.
    pub fn then(self, other: S3Word) -> S3Word {
        S3Word::from_action(then3(self.singular_action(), other.singular_action()))
    }

    pub fn inverse(self) -> S3Word {
        S3Word::ALL
            .into_iter()
            .find(|w| self.then(*w) == S3Word::Identity)
            .unwrap()
    }
}

impl fmt::Display for S3Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == S3Word::Identity {
            return f.write_str("id");
        }
        for l in self.letters() {
            f.write_str(match l {
                Letter::C => "C",
                Letter::N => "N",
            })?;
        }
        Ok(())
    }
}

/// An element `M_m · s` of the automorphism group in direct-product form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    multiplier: Rational,
    word: S3Word,
}

impl AffineElement {
    pub fn new(multiplier: Rational, word: S3Word) -> Result<Self> {
        if multiplier.is_zero() {
            return Err(Error::ZeroMultiplier);
        }
        Ok(AffineElement { multiplier, word })
    }

    pub fn identity() -> Self {
        AffineElement {
            multiplier: Rational::one(),
            word: S3Word::Identity,
        }
    }

    pub fn complement() -> Self {
        AffineElement {
            multiplier: Rational::one(),
            word: S3Word::C,
        }
    }

    pub fn n() -> Self {
        AffineElement {
            multiplier: Rational::one(),
            word: S3Word::N,
        }
    }

    pub fn multiple(m: Rational) -> Result<Self> {
        AffineElement::new(m, S3Word::Identity)
    }

    pub fn multiplier(&self) -> &Rational {
        &self.multiplier
    }

    pub fn word(&self) -> S3Word {
        self.word
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &AffineElement) -> AffineElement {
        AffineElement {
            multiplier: &self.multiplier * &other.multiplier,
            word: self.word.then(other.word),
        }
    }

    pub fn inverse(&self) -> AffineElement {
        AffineElement {
            multiplier: Rational::one() / &self.multiplier,
            word: self.word.inverse(),
        }
    }

    pub fn apply(&self, p: &DesignPoint) -> DesignPoint {
        let moved = self
            .word
            .letters()
            .iter()
            .fold(p.clone(), |acc, l| l.apply(&acc));
        if self.multiplier.is_one() {
            moved
        } else {
            apply_multiple(&moved, &self.multiplier)
        }
    }

    /// `(A, Γ)` with `Δ ↦ ΔA + Γ` in row-vector convention.
    pub fn matrix(&self) -> ([[Rational; 5]; 5], [Rational; 5]) {
        let shift = self.apply(&DesignPoint::origin()).to_array();
        let rows = core::array::from_fn(|i| {
            let mut unit: [Rational; 5] = core::array::from_fn(|_| Rational::zero());
            unit[i] = Rational::one();
            let image = self.apply(&DesignPoint::from_array(unit)).to_array();
            core::array::from_fn(|j| &image[j] - &shift[j])
        });
        (rows, shift)
    }

    /// The induced permutation of the planes; Π₀ is always fixed and multiples
    /// act trivially.
    pub fn plane_permutation(&self) -> PlanePermutation {
        self.word
            .letters()
            .iter()
            .fold(PlanePermutation::identity(), |acc, l| acc.then(&PlanePermutation::of_letter(*l)))
    }

    /// The image of a design line.
    pub fn line_image(&self, line: &LineDescriptor) -> Result<LineDescriptor> {
        line.validate()?;
        if let LineDescriptor::Replicate(base) = line {
            return Ok(LineDescriptor::Replicate(self.apply(base)));
        }
        let mut gen = GeneralLine::from_descriptor(line);
        for l in self.word.letters() {
            gen = gen.under(*l);
        }
        gen.f *= &self.multiplier;
        gen.p *= &self.multiplier;
        Ok(gen.into_descriptor())
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({})·{}", self.multiplier, self.word)
    }
}

/// Collapses a word over `C`, `N` and multiples into direct-product form.
pub fn canonicalize(word: &[Generator]) -> Result<AffineElement> {
    word.iter().try_fold(AffineElement::identity(), |acc, g| {
        let step = match g {
            Generator::C => AffineElement::complement(),
            Generator::N => AffineElement::n(),
            Generator::Multiple(m) => AffineElement::multiple(m.clone())?,
        };
        Ok(acc.then(&step))
    })
}

/// A permutation of Π₀..Π₆; entry `i` is the image of Πᵢ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlanePermutation([PlaneId; 7]);

impl PlanePermutation {
    pub fn identity() -> Self {
        PlanePermutation(PlaneId::ALL)
    }

    fn swapping(pairs: &[(PlaneId, PlaneId)]) -> Self {
        let mut images = PlaneId::ALL;
        for &(a, b) in pairs {
            images[a.index()] = b;
            images[b.index()] = a;
        }
        PlanePermutation(images)
    }

    fn of_letter(l: Letter) -> Self {
        use PlaneId::*;
        match l {
            Letter::C => PlanePermutation::swapping(&[(Pi2, Pi3), (Pi5, Pi6)]),
            Letter::N => PlanePermutation::swapping(&[(Pi1, Pi2), (Pi4, Pi5)]),
        }
    }

    pub fn image(&self, plane: PlaneId) -> PlaneId {
        self.0[plane.index()]
    }

    pub fn then(&self, other: &PlanePermutation) -> PlanePermutation {
        PlanePermutation(PlaneId::ALL.map(|p| other.image(self.image(p))))
    }

    /// Nontrivial cycles, each starting at its smallest plane.
    pub fn cycles(&self) -> Vec<Vec<PlaneId>> {
        let mut seen = [false; 7];
        let mut out = Vec::new();
        for start in PlaneId::ALL {
            if seen[start.index()] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur.index()] {
                seen[cur.index()] = true;
                cycle.push(cur);
                cur = self.image(cur);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for PlanePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let names: Vec<_> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", names.join(" "))?;
        }
        Ok(())
    }
}

/// P/F₀/F₁ line with the Λ-lines folded in as limits:
/// `Λ_P(p) = P(0,p)`, `Λ₀(f) = F₀(f,0)`, `Λ₁(f) = F₁(f,f)`.
struct GeneralLine {
    kind: GeneralKind,
    f: Rational,
    p: Rational,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum GeneralKind {
    P,
    F0,
    F1,
}

impl GeneralLine {
    fn from_descriptor(line: &LineDescriptor) -> Self {
        let (kind, f, p) = match line {
            LineDescriptor::P { f, p } => (GeneralKind::P, f.clone(), p.clone()),
            LineDescriptor::F0 { f, p } => (GeneralKind::F0, f.clone(), p.clone()),
            LineDescriptor::F1 { f, p } => (GeneralKind::F1, f.clone(), p.clone()),
            LineDescriptor::LambdaP { p } => (GeneralKind::P, Rational::zero(), p.clone()),
            LineDescriptor::Lambda0 { f } => (GeneralKind::F0, f.clone(), Rational::zero()),
            LineDescriptor::Lambda1 { f } => (GeneralKind::F1, f.clone(), f.clone()),
            LineDescriptor::Replicate(_) => unreachable!("replicate lines are mapped by their base"),
        };
        GeneralLine { kind, f, p }
    }

    /// `C`: P stays P, F₀ and F₁ swap, `(f, p) ↦ (f, f-p)`.
    /// `N`: F₁ stays F₁, P and F₀ swap, `(f, p) ↦ (-p, -f)`.
    fn under(self, l: Letter) -> Self {
        match l {
            Letter::C => GeneralLine {
                kind: match self.kind {
                    GeneralKind::P => GeneralKind::P,
                    GeneralKind::F0 => GeneralKind::F1,
                    GeneralKind::F1 => GeneralKind::F0,
                },
                p: &self.f - &self.p,
                f: self.f,
            },
            Letter::N => GeneralLine {
                kind: match self.kind {
                    GeneralKind::P => GeneralKind::F0,
                    GeneralKind::F0 => GeneralKind::P,
                    GeneralKind::F1 => GeneralKind::F1,
                },
                f: -self.p,
                p: -self.f,
            },
        }
    }

    fn into_descriptor(self) -> LineDescriptor {
        let GeneralLine { kind, f, p } = self;
        match kind {
            GeneralKind::P if f.is_zero() => LineDescriptor::LambdaP { p },
            GeneralKind::F0 if p.is_zero() => LineDescriptor::Lambda0 { f },
            GeneralKind::F1 if f == p => LineDescriptor::Lambda1 { f },
            GeneralKind::P => LineDescriptor::P { f, p },
            GeneralKind::F0 => LineDescriptor::F0 { f, p },
            GeneralKind::F1 => LineDescriptor::F1 { f, p },
        }
    }
}
