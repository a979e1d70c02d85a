//! Pseudo-designs: integer multiplicities on k-subsets with constant pair
//! sums. Negative multiplicities are allowed, so these exist whenever the
//! divisibility conditions hold, whether or not a genuine design does.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::lattice::{solve_integer_system, Combination};
use crate::variety::DesignPoint;
use crate::Rational;

/// Largest `C(v, k)` the solver accepts.
pub const MAX_COLUMNS: u64 = 100_000;

/// Integer weights `c_Y` on k-subsets `Y` of `{0, …, v-1}`; zero weights are
/// not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityFunction {
    v: u32,
    k: u32,
    entries: BTreeMap<Vec<u32>, BigInt>,
}

/// Why a multiplicity function is not a pseudo-design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Imbalance {
    /// Two pairs with different sums.
    Pairs {
        first: (u32, u32),
        first_sum: BigInt,
        second: (u32, u32),
        second_sum: BigInt,
    },
    /// For `k = 1`, two points with different sums.
    Points {
        first: u32,
        first_sum: BigInt,
        second: u32,
        second_sum: BigInt,
    },
}

impl fmt::Display for Imbalance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Imbalance::Pairs {
                first,
                first_sum,
                second,
                second_sum,
            } => write!(
                f,
                "pair {{{},{}}} sums to {first_sum} but pair {{{},{}}} sums to {second_sum}",
                first.0, first.1, second.0, second.1
            ),
            Imbalance::Points {
                first,
                first_sum,
                second,
                second_sum,
            } => write!(f, "point {first} sums to {first_sum} but point {second} sums to {second_sum}"),
        }
    }
}

fn pair_index(v: u32, x: u32, y: u32) -> usize {
    debug_assert!(x < y && y < v);
    let (v, x, y) = (v as usize, x as usize, y as usize);
    x * v - x * (x + 1) / 2 + (y - x - 1)
}

impl MultiplicityFunction {
    pub fn new(v: u32, k: u32) -> Result<Self> {
        if k < 1 || k > v {
            return Err(Error::Multiplicity(format!("need v ≥ k ≥ 1, got v = {v}, k = {k}")));
        }
        Ok(MultiplicityFunction {
            v,
            k,
            entries: BTreeMap::new(),
        })
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Sets `c_Y`; the subset may be given in any order. A zero weight removes
    /// the entry.
    pub fn set(&mut self, subset: &[u32], c: BigInt) -> Result<()> {
        let mut key = subset.to_vec();
        key.sort_unstable();
        if key.len() != self.k as usize {
            return Err(Error::Multiplicity(format!("{subset:?} does not have {} elements", self.k)));
        }
        if key.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Multiplicity(format!("{subset:?} repeats an element")));
        }
        if key.last().is_some_and(|&m| m >= self.v) {
            return Err(Error::Multiplicity(format!("{subset:?} leaves the ground set 0..{}", self.v)));
        }
        if c.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, c);
        }
        Ok(())
    }

    pub fn get(&self, subset: &[u32]) -> BigInt {
        let mut key = subset.to_vec();
        key.sort_unstable();
        self.entries.get(&key).cloned().unwrap_or_default()
    }

    /// Nonzero entries in lexicographic order of the subsets.
    pub fn entries(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.entries.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }

    /// `Σ c_Y` over blocks containing each point.
    pub fn point_sums(&self) -> Vec<BigInt> {
        let mut sums = vec![BigInt::zero(); self.v as usize];
        for (y, c) in &self.entries {
            for &x in y {
                sums[x as usize] += c;
            }
        }
        sums
    }

    /// `Σ c_Y` over blocks containing each pair, indexed lexicographically.
    pub fn pair_sums(&self) -> Vec<((u32, u32), BigInt)> {
        let v = self.v;
        let mut sums = vec![BigInt::zero(); (v as usize) * (v as usize).saturating_sub(1) / 2];
        for (y, c) in &self.entries {
            for (i, &a) in y.iter().enumerate() {
                for &b in &y[i + 1..] {
                    sums[pair_index(v, a, b)] += c;
                }
            }
        }
        let mut out = Vec::with_capacity(sums.len());
        let mut it = sums.into_iter();
        for x in 0..v {
            for y in x + 1..v {
                out.push(((x, y), it.next().unwrap()));
            }
        }
        out
    }

    /// The parameter point `(v, Σc, r, k, λ)` when every pair sum equals a
    /// common `λ` (and, for `k = 1`, every point sum a common `r`).
    pub fn verify(&self) -> core::result::Result<DesignPoint, Imbalance> {
        let point_sums = self.point_sums();
        let (r, lambda) = if self.k == 1 || self.v < 2 {
            if let Some((i, s)) = point_sums.iter().enumerate().find(|(_, s)| **s != point_sums[0]) {
                return Err(Imbalance::Points {
                    first: 0,
                    first_sum: point_sums[0].clone(),
                    second: i as u32,
                    second_sum: s.clone(),
                });
            }
            (point_sums.first().cloned().unwrap_or_default(), BigInt::zero())
        } else {
            let pairs = self.pair_sums();
            let (p0, s0) = &pairs[0];
            if let Some((p, s)) = pairs.iter().find(|(_, s)| s != s0) {
                return Err(Imbalance::Pairs {
                    first: *p0,
                    first_sum: s0.clone(),
                    second: *p,
                    second_sum: s.clone(),
                });
            }
            (point_sums[0].clone(), s0.clone())
        };
        let q = |n: BigInt| Rational::from_integer(n);
        Ok(DesignPoint::new(
            q(self.v.into()),
            q(self.total()),
            q(r),
            q(self.k.into()),
            q(lambda),
        ))
    }
}

/// `(k-1) | λ(v-1)` and `k(k-1) | λv(v-1)`.
pub fn gj_conditions(v: u64, k: u64, lambda: u64) -> Result<bool> {
    if k < 2 || v < k || lambda < 1 {
        return Err(Error::Domain(format!(
            "divisibility conditions need v ≥ k ≥ 2 and λ ≥ 1, got ({v},{k},{lambda})"
        )));
    }
    let (v, k, l) = (v as u128, k as u128, lambda as u128);
    Ok((l * (v - 1)) % (k - 1) == 0 && (l * v * (v - 1)) % (k * (k - 1)) == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Try a solution constant on orbits of the cyclic shift `x ↦ x+1 mod v`,
    /// then fall back to the full system.
    #[default]
    CyclicThenFull,
    /// Solve the full pair-by-subset system directly.
    FullOnly,
}

pub fn solve(v: u64, k: u64, lambda: u64) -> Result<MultiplicityFunction> {
    solve_with(v, k, lambda, Strategy::default())
}

/// A multiplicity function with pair sums `λ`. Deterministic in its inputs.
pub fn solve_with(v: u64, k: u64, lambda: u64, strategy: Strategy) -> Result<MultiplicityFunction> {
    if !gj_conditions(v, k, lambda)? {
        return Err(Error::DivisibilityConditions { v, k, lambda });
    }
    let columns = binomial(v, k).unwrap_or(u64::MAX);
    if columns > MAX_COLUMNS {
        return Err(Error::ScaleExceeded {
            v,
            k,
            columns,
            limit: MAX_COLUMNS,
        });
    }
    let (v, k) = (v as u32, k as u32);
    let subsets = k_subsets(v, k);
    if strategy == Strategy::CyclicThenFull {
        if let Some(mf) = solve_cyclic(v, k, lambda, &subsets)? {
            return Ok(mf);
        }
    }
    solve_full(v, k, lambda, &subsets)
}

/// All k-subsets of `0..v` in lexicographic order.
fn k_subsets(v: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k as usize).rev().find(|&i| cur[i] < v - k + i as u32) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k as usize {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn shift(y: &[u32], by: u32, v: u32) -> Vec<u32> {
    let mut s: Vec<u32> = y.iter().map(|&x| (x + by) % v).collect();
    s.sort_unstable();
    s
}

fn solve_cyclic(v: u32, k: u32, lambda: u64, subsets: &[Vec<u32>]) -> Result<Option<MultiplicityFunction>> {
    // Orbits of the shift, each listed once from its smallest member.
    let mut index: BTreeMap<&[u32], usize> = BTreeMap::new();
    for (i, y) in subsets.iter().enumerate() {
        index.insert(y.as_slice(), i);
    }
    let mut orbit_of = vec![usize::MAX; subsets.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for (i, y) in subsets.iter().enumerate() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = Vec::new();
        for s in 0..v {
            let j = index[shift(y, s, v).as_slice()];
            if orbit_of[j] == usize::MAX {
                orbit_of[j] = id;
                members.push(j);
            }
        }
        orbits.push(members);
    }
    // Row d: blocks of the orbit containing the pair {0, d}.
    let half = v / 2;
    let columns = orbits.iter().map(|members| {
        let mut col = vec![BigInt::zero(); half as usize];
        for &j in members {
            let y = &subsets[j];
            if y[0] != 0 {
                continue;
            }
            for &d in &y[1..] {
                if d <= half {
                    col[d as usize - 1] += 1;
                }
            }
        }
        col
    });
    let rhs = vec![BigInt::from(lambda); half as usize];
    let Some(x) = solve_integer_system(rhs, columns) else {
        return Ok(None);
    };
    let mut mf = MultiplicityFunction::new(v, k)?;
    for (o, c) in x {
        for &j in &orbits[o] {
            mf.set(&subsets[j], c.clone())?;
        }
    }
    Ok(Some(mf))
}

fn solve_full(v: u32, k: u32, lambda: u64, subsets: &[Vec<u32>]) -> Result<MultiplicityFunction> {
    let rows = (v as usize) * (v as usize - 1) / 2;
    let columns = subsets.iter().map(|y| {
        let mut col = vec![BigInt::zero(); rows];
        for (i, &a) in y.iter().enumerate() {
            for &b in &y[i + 1..] {
                col[pair_index(v, a, b)] += 1;
            }
        }
        col
    });
    let x: Combination =
        solve_integer_system(vec![BigInt::from(lambda); rows], columns).ok_or(Error::NoIntegerSolution)?;
    let mut mf = MultiplicityFunction::new(v, k)?;
    for (j, c) in x {
        mf.set(&subsets[j], c)?;
    }
    Ok(mf)
}

/// The parameter point a pseudo-design with these `(v, k, λ)` realizes.
pub fn expected_point(v: u64, k: u64, lambda: u64) -> Option<DesignPoint> {
    let (v, k, l) = (v as i128, k as i128, lambda as i128);
    if k < 2 {
        return None;
    }
    let r = Rational::new((l * (v - 1)).into(), (k - 1).into());
    let b = Rational::new((l * v * (v - 1)).into(), (k * (k - 1)).into());
    let int = |n: i128| Rational::from_integer(n.into());
    Some(DesignPoint::new(int(v), b, r, int(k), int(l)))
}
