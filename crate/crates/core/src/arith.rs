//! Integer helpers: squares, trial-division factorization, prime powers,
//! squarefree parts and quadratic residues. Inputs are desk-scale.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::Signed;

use crate::error::{Error, Result};

/// The exact square root of `n`, if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

pub fn is_square(n: &BigInt) -> Result<bool> {
    if n.is_negative() {
        return Err(Error::Domain(format!("is_square({n}): negative argument")));
    }
    Ok(exact_sqrt(n).is_some())
}

pub fn exact_sqrt_u128(n: u128) -> Option<u128> {
    let root = n.sqrt();
    (root * root == n).then_some(root)
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut push = |p: u128, n: &mut u128| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut p = 3;
    while p * p <= n {
        push(p, &mut n);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, e))` when `n = p^e` for a prime `p`.
pub fn is_prime_power(n: u64) -> Result<Option<(u64, u32)>> {
    if n < 2 {
        return Err(Error::Domain(format!("is_prime_power({n}): argument below 2")));
    }
    let f = factorize(n as u128);
    Ok((f.len() == 1).then(|| (f[0].0 as u64, f[0].1)))
}

/// Writes `n = s * q²` with `s` squarefree (carrying the sign of `n`).
/// Returns `(s, q)`. `n` must be nonzero.
pub fn squarefree_decompose(n: i128) -> (i128, u128) {
    debug_assert!(n != 0);
    let mut core = 1u128;
    let mut root = 1u128;
    for (p, e) in factorize(n.unsigned_abs()) {
        root *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
    }
    (n.signum() * core as i128, root)
}

pub fn mod_pow(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Whether `a` is a square modulo the squarefree modulus `m`, decided prime by
/// prime with Euler's criterion.
pub fn is_residue_mod_squarefree(a: i128, m: u128) -> bool {
    factorize(m).into_iter().all(|(p, _)| {
        if p == 2 {
            return true;
        }
        let r = a.rem_euclid(p as i128) as u128;
        r == 0 || mod_pow(r, (p - 1) / 2, p) == 1
    })
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}
