//! Partitions (Young diagrams), the weight ↔ partition dictionary and
//! Littlewood-Richardson coefficients.

mod lr;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lr::{lr_coefficient, skew_expansion};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so equality and ordering are on canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0) as usize;
        let cols = (1..=width as u32)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition(cols)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Multiplies every part by `factor`.
    pub fn scaled(&self, factor: u32) -> Partition {
        if factor == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * factor).collect())
    }

    /// All partitions of size at most `max_size` with at most `max_len` parts,
    /// ordered by size then reverse-lexicographically.
    pub fn all_bounded(max_len: usize, max_size: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        for n in 0..=max_size {
            let mut current = Vec::new();
            partitions_of(n, n, max_len, &mut current, &mut out);
        }
        out
    }
}

fn partitions_of(
    remaining: u32,
    max_part: u32,
    max_len: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        partitions_of(remaining - p, p, max_len, current, out);
        current.pop();
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Tail sums: `λ_j = a_j + a_{j+1} + … + a_n`.
pub fn weight_to_partition(coeffs: &[u32]) -> Partition {
    let mut parts = vec![0u32; coeffs.len()];
    let mut acc = 0;
    for (j, a) in coeffs.iter().enumerate().rev() {
        acc += a;
        parts[j] = acc;
    }
    Partition::new(parts).expect("tail sums are weakly decreasing")
}

/// Inverse of [`weight_to_partition`]: successive differences padded to `n` entries.
pub fn partition_to_weight(p: &Partition, n: usize) -> Result<Vec<u32>> {
    if p.len() > n {
        return Err(Error::PartitionTooLong { parts: p.len(), rank: n });
    }
    Ok((0..n).map(|i| p.part(i) - p.part(i + 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(p(&[0, 0]).is_empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[2]).transpose(), p(&[1, 1]));
        assert_eq!(p(&[4, 2]).transpose(), p(&[2, 2, 1, 1]));
    }

    #[test]
    fn weight_partition_examples() {
        assert_eq!(weight_to_partition(&[0, 0, 0]), Partition::empty());
        assert_eq!(weight_to_partition(&[2, 0]), p(&[2]));
        assert_eq!(weight_to_partition(&[0, 0, 1, 0]), p(&[1, 1, 1]));

        assert_eq!(partition_to_weight(&Partition::empty(), 3).unwrap(), vec![0, 0, 0]);
        assert_eq!(partition_to_weight(&p(&[2]), 2).unwrap(), vec![2, 0]);
        assert_eq!(partition_to_weight(&p(&[2, 2, 2]), 4).unwrap(), vec![0, 0, 2, 0]);
        assert_eq!(
            partition_to_weight(&p(&[1, 1, 1]), 2),
            Err(Error::PartitionTooLong { parts: 3, rank: 2 })
        );
    }

    #[test]
    fn bounded_enumeration_counts() {
        // p(0..=5) = 1,1,2,3,5,7
        assert_eq!(Partition::all_bounded(10, 5).len(), 19);
        // at most two parts, size ≤ 4: 1+1+2+2+3
        assert_eq!(Partition::all_bounded(2, 4).len(), 9);
    }

    #[test]
    fn json_is_a_plain_array() {
        let json = serde_json::to_string(&p(&[4, 2])).unwrap();
        assert_eq!(json, "[4,2]");
        let back: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(back, p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
