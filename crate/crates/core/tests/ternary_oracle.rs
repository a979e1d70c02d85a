//! Legendre-criterion decisions checked against exhaustive search.

use design_lines_core::sieve::{ternary_solvable, Certificate};
use num_bigint::BigInt;

/// Nontrivial solution of `ax² + by² + cz² = 0` with all entries in
/// `[0, height]`, found by scanning `x, y` and testing `z²` for squareness.
fn brute_force(a: i64, b: i64, c: i64, height: i64) -> Option<(i64, i64, i64)> {
    for x in 0..=height {
        for y in 0..=height {
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
            let z = (z2 as f64).sqrt().round() as i64;
            for z in [z - 1, z, z + 1] {
                if z >= 0 && z <= height && z * z == z2 {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

#[test]
fn agrees_with_brute_force_up_to_twelve() {
    // Solvability is invariant under permuting coefficients and under a
    // global sign change, so each class is checked once.
    let mut checked = 0;
    for a in 1..=12i64 {
        for b in -12..=12i64 {
            for c in -12..=12i64 {
                if b == 0 || c == 0 || b.abs() < a || c.abs() < b.abs() {
                    continue;
                }
                let decided = ternary_solvable(a, b, c).unwrap();
                let found = brute_force(a, b, c, 200);
                assert_eq!(decided.solvable, found.is_some(), "({a},{b},{c}) oracle {found:?}");
                if let Some(w) = decided.witness {
                    let cert = Certificate::Ternary {
                        coeffs: [a, b, c].map(BigInt::from),
                        witness: w,
                    };
                    assert!(cert.verify(), "({a},{b},{c})");
                } else {
                    assert!(!decided.solvable);
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn descent_example() {
    // x² + y² = 6z² has no solution mod 3; search well past the Holzer box
    assert!(!ternary_solvable(1, 1, -6).unwrap().solvable);
    assert!(brute_force(1, 1, -6, 2000).is_none());
}
