//! Text format for multiplicity functions.
//!
//! ```text
//! # comment
//! 7 3
//! 1: 0 1 3
//! -1: 2 4 6
//! ```
//!
//! The first non-comment line is `v k`; each following line is a weight, a
//! colon and the k elements of a subset of `0..v`.

use std::fmt::Write;

use design_lines_core::pseudo::MultiplicityFunction;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::CliError;

pub fn parse(text: &str) -> Result<MultiplicityFunction, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (n, header) = lines
        .next()
        .ok_or_else(|| CliError::Domain("multiplicity file is empty".into()))?;
    let fail = |n: usize, msg: &str| CliError::Domain(format!("line {n}: {msg}"));
    let dims: Vec<u32> = header
        .split_whitespace()
        .map(|t| t.parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| fail(n, "header must be `v k`"))?;
    let [v, k] = dims[..] else {
        return Err(fail(n, "header must be `v k`"));
    };
    let mut mf = MultiplicityFunction::new(v, k).map_err(|e| fail(n, &e.to_string()))?;
    for (n, line) in lines {
        let (c, subset) = line
            .split_once(':')
            .ok_or_else(|| fail(n, "expected `c: i1 ... ik`"))?;
        let c: BigInt = c.trim().parse().map_err(|_| fail(n, "weight is not an integer"))?;
        let subset: Vec<u32> = subset
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| fail(n, "subset elements must be nonnegative integers"))?;
        if !mf.get(&subset).is_zero() {
            return Err(fail(n, "subset listed twice"));
        }
        mf.set(&subset, c).map_err(|e| fail(n, &e.to_string()))?;
    }
    Ok(mf)
}

pub fn render(mf: &MultiplicityFunction) -> String {
    let mut out = format!("{} {}\n", mf.v(), mf.k());
    for (subset, c) in mf.entries() {
        let elems: Vec<String> = subset.iter().map(u32::to_string).collect();
        writeln!(out, "{c}: {}", elems.join(" ")).unwrap();
    }
    out
}
