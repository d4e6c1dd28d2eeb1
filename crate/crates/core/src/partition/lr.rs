//! Littlewood-Richardson coefficients by direct enumeration of LR tableaux:
//! semistandard fillings of a skew shape whose reverse reading word
//! (right to left, top to bottom) is a lattice word.

use std::collections::BTreeMap;

use super::Partition;
use crate::error::{Error, Result};
use crate::isotypic::Isotypic;

/// `N^λ_{μ,ν}`: the multiplicity of `λ` in the product of the `μ` and `ν` modules.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let mut count = 0u64;
    LrWalk::new(lambda, mu, Some(nu)).run(&mut |_| count += 1);
    count
}

/// `{μ ↦ N^λ_{μ,ν}}` over all `μ` with a nonzero coefficient. A single pass over
/// the LR fillings of `λ/ν`, tallied by content.
pub fn skew_expansion(lambda: &Partition, nu: &Partition) -> Result<Isotypic<Partition>> {
    if !lambda.contains(nu) {
        return Err(Error::NotSubdiagram { inner: nu.to_string(), outer: lambda.to_string() });
    }
    let mut tally: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    LrWalk::new(lambda, nu, None).run(&mut |content| {
        *tally.entry(content.to_vec()).or_default() += 1;
    });
    let mut out = Isotypic::new();
    for (content, mult) in tally {
        out.add(Partition::new(content).expect("lattice content is a partition"), mult);
    }
    Ok(out)
}

struct LrWalk<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: Option<&'a Partition>,
    /// letters[row][col], 0 for boxes of the inner shape.
    letters: Vec<Vec<u32>>,
    counts: Vec<u32>,
}

impl<'a> LrWalk<'a> {
    fn new(outer: &'a Partition, inner: &'a Partition, content: Option<&'a Partition>) -> Self {
        let rows = outer.len();
        LrWalk {
            outer,
            inner,
            content,
            letters: (0..rows).map(|r| vec![0; outer.part(r) as usize]).collect(),
            counts: vec![0; rows + 1],
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[u32])) {
        self.row(0, emit);
    }

    fn row(&mut self, r: usize, emit: &mut dyn FnMut(&[u32])) {
        if r == self.outer.len() {
            let used = self.counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
            if let Some(target) = self.content {
                if target.len() != used || (0..used).any(|i| target.part(i) != self.counts[i]) {
                    return;
                }
            }
            emit(&self.counts[..used]);
            return;
        }
        let start = self.inner.part(r) as usize;
        let end = self.outer.part(r) as usize;
        let before = self.counts.clone();
        self.letter(r, 1, start, end, &before, emit);
    }

    /// Places the run of letter `j` in row `r` starting at column `pos`.
    fn letter(
        &mut self,
        r: usize,
        j: usize,
        pos: usize,
        end: usize,
        before: &[u32],
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if pos == end {
            self.row(r + 1, emit);
            return;
        }
        // Row r (0-based) only holds letters 1..=r+1.
        if j > r + 1 {
            return;
        }
        let remaining = end - pos;
        let mut max_run = remaining as u32;
        if j >= 2 {
            // reading row r right to left, every j is read before any j-1 of this row
            max_run = max_run.min(before[j - 2].saturating_sub(before[j - 1]));
        }
        if let Some(target) = self.content {
            max_run = max_run.min(target.part(j - 1).saturating_sub(self.counts[j - 1]));
        }
        // Column strictness: the box above must hold a smaller letter.
        let mut strict_ok = 0u32;
        while strict_ok < max_run {
            let col = pos + strict_ok as usize;
            if r > 0 && col >= self.inner.part(r - 1) as usize && self.letters[r - 1][col] >= j as u32 {
                break;
            }
            strict_ok += 1;
        }
        // Longest runs first only affects visiting order.
        for run in (0..=strict_ok).rev() {
            for c in pos..pos + run as usize {
                self.letters[r][c] = j as u32;
            }
            self.counts[j - 1] += run;
            self.letter(r, j + 1, pos + run as usize, end, before, emit);
            self.counts[j - 1] -= run;
        }
        for c in pos..end {
            self.letters[r][c] = 0;
        }
    }
}
