//! Koike-Terada folding for `Sp_{2m}` and the combinatorial `GL_{2m} → Sp_{2m}`
//! restriction rule.
//!
//! Folding uses the boundary-strip form of the modification rule: while the
//! diagram has `p > m` rows, remove a rim strip of `h = 2p − 2m − 2` boxes
//! starting at the foot of the first column and multiply by `(−1)^c`, where
//! `c` is the number of columns the strip meets. `h = 0` (that is `p = m + 1`)
//! or a removal that leaves a non-partition gives zero.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::isotypic::Isotypic;
use crate::partition::{partition_to_weight, skew_expansion, Partition};
use crate::root_system::{DominantWeight, Family, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum FoldResult {
    Zero,
    Signed { folded: Partition, sign: i8 },
}

impl FoldResult {
    pub fn sign(&self) -> i8 {
        match self {
            FoldResult::Zero => 0,
            FoldResult::Signed { sign, .. } => *sign,
        }
    }
}

/// Removes the rim strip of `h` boxes that starts at the bottom of the first
/// column. `None` when the rim is too short or the remainder is not a partition.
/// Returns the new shape and the number of columns the strip touches.
fn remove_rim_strip(lambda: &Partition, h: u32) -> Option<(Partition, u32)> {
    let mut rows: Vec<u32> = lambda.parts().to_vec();
    let mut r = rows.len() - 1; // row of the current box
    let mut c = 0u32; // 0-based column of the current box
    let mut taken = 0u32;
    let mut columns = 1u32;
    // Start of the strip inside the current row.
    let mut row_start = 0u32;
    loop {
        taken += 1;
        if taken == h {
            break;
        }
        if c + 1 < rows[r] {
            c += 1;
            columns += 1;
        } else {
            // leaving row r: it keeps the boxes left of the strip
            rows[r] = row_start;
            if r == 0 {
                return None;
            }
            r -= 1;
            row_start = c;
        }
    }
    // The strip must end at the end of its row.
    if c + 1 != rows[r] {
        return None;
    }
    rows[r] = row_start;
    Partition::new(rows).ok().map(|p| (p, columns))
}

pub fn fold_sp(m: usize, lambda: &Partition) -> FoldResult {
    let mut shape = lambda.clone();
    let mut sign = 1i8;
    while shape.len() > m {
        let p = shape.len() as u32;
        let h = 2 * p - 2 * m as u32 - 2;
        if h == 0 {
            return FoldResult::Zero;
        }
        match remove_rim_strip(&shape, h) {
            Some((next, columns)) => {
                if columns % 2 == 1 {
                    sign = -sign;
                }
                shape = next;
            }
            None => return FoldResult::Zero,
        }
    }
    FoldResult::Signed { folded: shape, sign }
}

/// `ν` with `(2ν)ᵗ ⊆ λ`, i.e. `2ν_i ≤ λᵗ_i`.
fn even_column_partitions(lambda: &Partition) -> Vec<Partition> {
    let bound: Vec<u32> = lambda.transpose().parts().iter().map(|c| c / 2).collect();
    let mut out = Vec::new();
    fn rec(bound: &[u32], i: usize, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(current.clone()).expect("built decreasing"));
        if i == bound.len() {
            return;
        }
        for v in 1..=cap.min(bound[i]) {
            current.push(v);
            rec(bound, i + 1, v, current, out);
            current.pop();
        }
    }
    rec(&bound, 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// Restriction of the `GL_{2m}` module `λ` to `Sp_{2m}`:
/// `Σ_μ Σ_ν N^λ_{μ,(2ν)ᵗ} · sign(μ) · V(π(μ))`.
pub fn restrict_gl_to_sp_kt(m: usize, lambda: &Partition) -> Result<Isotypic<DominantWeight>> {
    if lambda.len() > 2 * m {
        return Err(Error::HypothesisViolated { parts: lambda.len(), max: 2 * m });
    }
    let cm = RootSystem::new(Family::C, m)?;
    let mut signed: BTreeMap<Partition, i64> = BTreeMap::new();
    for nu in even_column_partitions(lambda) {
        let beta = nu.scaled(2).transpose();
        for (mu, n) in skew_expansion(lambda, &beta)? {
            if let FoldResult::Signed { folded, sign } = fold_sp(m, &mu) {
                *signed.entry(folded).or_default() += sign as i64 * n as i64;
            }
        }
    }
    let mut out = Isotypic::new();
    for (mu, mult) in signed {
        let weight = DominantWeight::new(cm, partition_to_weight(&mu, m)?)?;
        if mult < 0 {
            return Err(Error::NegativeMultiplicity { weight: weight.to_string(), mult: mult as i128 });
        }
        out.add(weight, mult as u64);
    }
    Ok(out)
}
