//! Small dense rational linear algebra used for plane intersections.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rational;

/// Solution set of an affine system: `particular + span(kernel)`.
#[derive(Debug, Clone)]
pub(crate) struct AffineSolution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Solves `rows[i].0 · x = rows[i].1` for `x` in Q^n. `None` if inconsistent.
pub(crate) fn solve_affine(rows: &[(Vec<Rational>, Rational)], n: usize) -> Option<AffineSolution> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|(coeffs, rhs)| {
            debug_assert_eq!(coeffs.len(), n);
            let mut row = coeffs.clone();
            row.push(rhs.clone());
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(sel) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, sel);
        let inv = Rational::one() / m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in 0..=n {
                    let delta = &factor * &m[rank][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }

    if m[rank..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }

    let mut particular = vec![Rational::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        particular[col] = m[i][n].clone();
    }

    let kernel = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (i, &col) in pivots.iter().enumerate() {
                v[col] = -m[i][free].clone();
            }
            v
        })
        .collect();

    Some(AffineSolution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn line_in_three_space() {
        // x + y = 2, y - z = 0
        let rows = vec![
            (vec![int(1), int(1), int(0)], int(2)),
            (vec![int(0), int(1), int(-1)], int(0)),
        ];
        let sol = solve_affine(&rows, 3).unwrap();
        assert_eq!(sol.kernel.len(), 1);
        let k = &sol.kernel[0];
        assert_eq!(&k[0] + &k[1], int(0));
        assert_eq!(&k[1] - &k[2], int(0));
    }

    #[test]
    fn inconsistent() {
        let rows = vec![(vec![int(1)], int(0)), (vec![int(1)], int(1))];
        assert!(solve_affine(&rows, 1).is_none());
    }
}
