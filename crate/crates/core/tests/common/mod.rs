#![allow(dead_code)]

use design_lines_core::rational::frac;
use design_lines_core::{DesignPoint, LineDescriptor, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-30..=30), rng.gen_range(1..=7))
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = small_rational(rng);
        if x != Rational::from_integer(0.into()) {
            return x;
        }
    }
}

/// A rational point on the variety from a random `(v, k, λ)` with `k ∉ {0, 1}`:
/// `r = λ(v-1)/(k-1)`, `b = vr/k`.
pub fn random_point(rng: &mut ChaCha8Rng) -> DesignPoint {
    loop {
        let v = small_rational(rng);
        let k = small_rational(rng);
        let lambda = small_rational(rng);
        let one = Rational::from_integer(1.into());
        if k == Rational::from_integer(0.into()) || k == one {
            continue;
        }
        let r = &lambda * (&v - &one) / (&k - &one);
        let b = &v * &r / &k;
        let p = DesignPoint::new(v, b, r, k, lambda);
        assert!(p.on_variety());
        return p;
    }
}

/// Random `(f, p)` with `f, p ≠ 0` and `f ≠ p`.
pub fn random_fp(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    loop {
        let f = nonzero_rational(rng);
        let p = nonzero_rational(rng);
        if f != p {
            return (f, p);
        }
    }
}

pub fn pfam(f: &Rational, p: &Rational) -> [LineDescriptor; 3] {
    [
        LineDescriptor::P { f: f.clone(), p: p.clone() },
        LineDescriptor::F0 { f: f.clone(), p: p.clone() },
        LineDescriptor::F1 { f: f.clone(), p: p.clone() },
    ]
}
