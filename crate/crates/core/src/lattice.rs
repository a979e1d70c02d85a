//! Integer solutions of `A x = b` by an incremental echelon lattice basis.
//!
//! Columns of `A` are fed one at a time. The solver keeps a row-echelon basis
//! of the lattice they span, one basis vector per pivot row, each tagged with
//! the sparse combination of original columns that produces it. A new column
//! is reduced against the basis; where it meets an existing pivot the two are
//! combined with the extended gcd, which is unimodular, so the basis always
//! spans exactly the lattice of the columns seen so far.
//!
//! The right-hand side is reduced against the same basis as it grows. When
//! the residual reaches zero the accumulated combination is a solution and
//! the remaining columns are never looked at. If every column is consumed and
//! the residual is not zero, `b` is not in the lattice and there is no integer
//! solution.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse combination of original columns.
pub type Combination = BTreeMap<usize, BigInt>;

#[derive(Debug, Clone)]
struct BasisVector {
    entries: Vec<BigInt>,
    combo: Combination,
}

fn leading(v: &[BigInt], from: usize) -> Option<usize> {
    (from..v.len()).find(|&i| !v[i].is_zero())
}

fn combine(a: &Combination, s: &BigInt, b: &Combination, t: &BigInt) -> Combination {
    let mut out = Combination::new();
    if !s.is_zero() {
        for (k, x) in a {
            out.insert(*k, x * s);
        }
    }
    if !t.is_zero() {
        for (k, y) in b {
            let e = out.entry(*k).or_insert_with(BigInt::zero);
            *e += y * t;
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn axpy(a: &[BigInt], s: &BigInt, b: &[BigInt], t: &BigInt) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x * s + y * t).collect()
}

#[derive(Debug, Clone)]
pub struct IncrementalSolver {
    basis: Vec<Option<BasisVector>>,
    residual: Vec<BigInt>,
    solution: Combination,
    /// First row at which the residual may still be nonzero.
    cursor: usize,
    columns_used: usize,
}

impl IncrementalSolver {
    pub fn new(rhs: Vec<BigInt>) -> Self {
        let rows = rhs.len();
        let mut s = IncrementalSolver {
            basis: vec![None; rows],
            residual: rhs,
            solution: Combination::new(),
            cursor: 0,
            columns_used: 0,
        };
        s.advance();
        s
    }

    pub fn is_solved(&self) -> bool {
        self.cursor >= self.residual.len()
    }

    pub fn columns_used(&self) -> usize {
        self.columns_used
    }

    /// The combination `x` with `A x = b`, once solved.
    pub fn solution(&self) -> Option<&Combination> {
        self.is_solved().then_some(&self.solution)
    }

    /// Adds column `index` given as dense entries. Returns whether the system
    /// is now solved.
    pub fn push_column(&mut self, index: usize, entries: Vec<BigInt>) -> bool {
        debug_assert_eq!(entries.len(), self.residual.len());
        self.columns_used += 1;
        let mut w = BasisVector {
            entries,
            combo: Combination::from([(index, BigInt::one())]),
        };
        let mut from = 0;
        while let Some(row) = leading(&w.entries, from) {
            match self.basis[row].take() {
                None => {
                    if w.entries[row].is_negative() {
                        for x in w.entries.iter_mut() {
                            *x = -&*x;
                        }
                        for x in w.combo.values_mut() {
                            *x = -&*x;
                        }
                    }
                    self.basis[row] = Some(w);
                    if row == self.cursor {
                        self.advance();
                    }
                    return self.is_solved();
                }
                Some(u) => {
                    let (a, c) = (&u.entries[row], &w.entries[row]);
                    let eg = a.extended_gcd(c);
                    let g = eg.gcd;
                    if c.is_multiple_of(a) {
                        // u stays; w loses its leading entry.
                        let q = c / a;
                        let neg_q = -q;
                        w = BasisVector {
                            entries: axpy(&w.entries, &BigInt::one(), &u.entries, &neg_q),
                            combo: combine(&w.combo, &BigInt::one(), &u.combo, &neg_q),
                        };
                        self.basis[row] = Some(u);
                    } else {
                        // [s t; c/g -a/g] has determinant -1.
                        let (s, t) = (eg.x, eg.y);
                        let cg = c / &g;
                        let ag = -(a / &g);
                        let merged = BasisVector {
                            entries: axpy(&u.entries, &s, &w.entries, &t),
                            combo: combine(&u.combo, &s, &w.combo, &t),
                        };
                        w = BasisVector {
                            entries: axpy(&u.entries, &cg, &w.entries, &ag),
                            combo: combine(&u.combo, &cg, &w.combo, &ag),
                        };
                        self.basis[row] = Some(merged);
                        if row == self.cursor {
                            self.advance();
                        }
                    }
                    from = row + 1;
                }
            }
        }
        self.is_solved()
    }

    /// Reduces the residual row by row until it is zero or blocked by a
    /// missing or non-dividing pivot.
    fn advance(&mut self) {
        while let Some(row) = leading(&self.residual, self.cursor) {
            self.cursor = row;
            let Some(u) = &self.basis[row] else { return };
            let (q, rem) = self.residual[row].div_rem(&u.entries[row]);
            if !rem.is_zero() {
                return;
            }
            let neg_q = -&q;
            self.residual = axpy(&self.residual, &BigInt::one(), &u.entries, &neg_q);
            self.solution = combine(&self.solution, &BigInt::one(), &u.combo, &q);
        }
        self.cursor = self.residual.len();
    }
}

/// Solves `A x = b` over the integers, with `A` given column by column.
pub fn solve_integer_system<I>(rhs: Vec<BigInt>, columns: I) -> Option<Combination>
where
    I: IntoIterator<Item = Vec<BigInt>>,
{
    let mut solver = IncrementalSolver::new(rhs);
    if solver.is_solved() {
        return Some(Combination::new());
    }
    for (j, col) in columns.into_iter().enumerate() {
        if solver.push_column(j, col) {
            break;
        }
    }
    solver.solution().cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(cols: &[Vec<i64>], rhs: &[i64], x: &Combination) {
        for (i, &b) in rhs.iter().enumerate() {
            let s: BigInt = x.iter().map(|(j, c)| c * cols[*j][i]).sum();
            assert_eq!(s, BigInt::from(b));
        }
    }

    #[test]
    fn gcd_combination_needed() {
        // 6x + 10y + 15z = 1 needs all three columns.
        let cols = vec![vec![6], vec![10], vec![15]];
        let x = solve_integer_system(big(&[1]), cols.iter().map(|c| big(c))).unwrap();
        check(&cols, &[1], &x);
        let cols = [vec![6], vec![10]];
        assert!(solve_integer_system(big(&[1]), cols.iter().map(|c| big(c))).is_none());
    }

    #[test]
    fn zero_rhs_is_trivial() {
        let x = solve_integer_system(big(&[0, 0]), Vec::<Vec<BigInt>>::new()).unwrap();
        assert!(x.is_empty());
    }

    #[test]
    fn parity_obstruction() {
        // columns (1,1) and (1,-1) span the even-sum lattice
        let cols = vec![vec![1, 1], vec![1, -1]];
        assert!(solve_integer_system(big(&[1, 0]), cols.iter().map(|c| big(c))).is_none());
        let x = solve_integer_system(big(&[3, 1]), cols.iter().map(|c| big(c))).unwrap();
        check(&cols, &[3, 1], &x);
    }

    #[test]
    fn random_systems_with_planted_solutions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..6);
            let ncols = rng.gen_range(1..9);
            let cols: Vec<Vec<i64>> = (0..ncols)
                .map(|_| (0..rows).map(|_| rng.gen_range(-4..5)).collect())
                .collect();
            let planted: Vec<i64> = (0..ncols).map(|_| rng.gen_range(-3..4)).collect();
            let rhs: Vec<i64> = (0..rows)
                .map(|i| (0..ncols).map(|j| cols[j][i] * planted[j]).sum())
                .collect();
            let x = solve_integer_system(big(&rhs), cols.iter().map(|c| big(c)))
                .expect("planted solution exists");
            check(&cols, &rhs, &x);
        }
    }
}
