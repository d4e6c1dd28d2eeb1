//! Classical root data in ε-coordinates, dominant weights, the level pairing,
//! duality and the Weyl dimension formula.
//!
//! Internally weights live in *doubled* ε-coordinates (`2·ε_i` components) so
//! half-integral spin weights of types B and D stay integral. Type `A_n` uses
//! `n + 1` coordinates (the GL form with last entry zero).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isotypic::Dimensioned;
use crate::partition::Partition;

/// Exact dimensions. Arbitrary precision, never rounded.
pub type BigCount = BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::C => 1,
            Family::B => 2,
            Family::D => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(format!("unknown family {other:?} (expected A, B, C or D)")),
        }
    }
}

/// A simple classical root system. Construction rejects `B_1`, `D_1`, `D_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSystem")]
pub struct RootSystem {
    family: Family,
    rank: usize,
}

#[derive(Deserialize)]
struct RawSystem {
    family: Family,
    rank: usize,
}

impl TryFrom<RawSystem> for RootSystem {
    type Error = Error;

    fn try_from(raw: RawSystem) -> Result<Self> {
        RootSystem::new(raw.family, raw.rank)
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = family.min_rank();
        if rank < min {
            return Err(Error::InvalidRank { family, min, rank });
        }
        Ok(RootSystem { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of ε-coordinates: `rank + 1` for type A, `rank` otherwise.
    pub fn nvars(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Coefficients of the highest coroot on the simple coroots, i.e. the
    /// levels of the fundamental weights.
    pub fn comarks(&self) -> Vec<u32> {
        let n = self.rank;
        match self.family {
            Family::A | Family::C => vec![1; n],
            Family::B => (1..=n).map(|i| if i == 1 || i == n { 1 } else { 2 }).collect(),
            Family::D => (1..=n).map(|i| if i == 1 || i >= n - 1 { 1 } else { 2 }).collect(),
        }
    }

    pub(crate) fn positive_roots_doubled(&self) -> Vec<Vec<i64>> {
        let nv = self.nvars();
        let unit = |i: usize, c: i64| {
            let mut v = vec![0i64; nv];
            v[i] = c;
            v
        };
        let mut roots = Vec::new();
        for i in 0..nv {
            for j in i + 1..nv {
                let mut minus = vec![0i64; nv];
                minus[i] = 2;
                minus[j] = -2;
                roots.push(minus);
                if self.family != Family::A {
                    let mut plus = vec![0i64; nv];
                    plus[i] = 2;
                    plus[j] = 2;
                    roots.push(plus);
                }
            }
            match self.family {
                Family::B => roots.push(unit(i, 2)),
                Family::C => roots.push(unit(i, 4)),
                _ => {}
            }
        }
        roots
    }

    pub(crate) fn rho_doubled(&self) -> Vec<i64> {
        let n = self.rank as i64;
        let nv = self.nvars();
        (0..nv as i64)
            .map(|i| match self.family {
                Family::A => 2 * (n - i),
                Family::B => 2 * (n - i) - 1,
                Family::C => 2 * (n - i),
                Family::D => 2 * (n - 1 - i),
            })
            .collect()
    }

    #[cfg(test)]
    pub(crate) fn highest_root_doubled(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.nvars()];
        match self.family {
            Family::A => {
                v[0] = 2;
                v[self.rank] = -2;
            }
            Family::B | Family::D => {
                v[0] = 2;
                v[1] = 2;
            }
            Family::C => v[0] = 4,
        }
        v
    }

    /// Dominant representative of the Weyl orbit of a doubled ε-vector.
    pub(crate) fn dominant_rep(&self, v: &[i64]) -> Vec<i64> {
        let mut w: Vec<i64> = match self.family {
            Family::A => v.to_vec(),
            _ => v.iter().map(|x| x.abs()).collect(),
        };
        w.sort_unstable_by(|a, b| b.cmp(a));
        if self.family == Family::D {
            let negatives = v.iter().filter(|&&x| x < 0).count();
            if negatives % 2 == 1 && !v.contains(&0) {
                let last = w.len() - 1;
                w[last] = -w[last];
            }
        }
        w
    }

    pub(crate) fn is_dominant(&self, v: &[i64]) -> bool {
        let n = v.len();
        match self.family {
            Family::A => v.windows(2).all(|w| w[0] >= w[1]),
            Family::B | Family::C => v.windows(2).all(|w| w[0] >= w[1]) && v[n - 1] >= 0,
            Family::D => v[..n - 1].windows(2).all(|w| w[0] >= w[1]) && v[n - 2] >= v[n - 1].abs(),
        }
    }

    /// Doubled ε-coordinates to fundamental-weight coefficients. `None` when the
    /// vector is not a dominant integral weight of this system.
    pub(crate) fn weight_from_doubled(&self, v: &[i64]) -> Option<DominantWeight> {
        if v.len() != self.nvars() || !self.is_dominant(v) {
            return None;
        }
        let n = self.rank;
        let half = |x: i64| if x >= 0 && x % 2 == 0 { Some((x / 2) as u32) } else { None };
        let mut coeffs = Vec::with_capacity(n);
        match self.family {
            Family::A | Family::C => {
                for i in 0..n {
                    let next = if i + 1 < v.len() { v[i + 1] } else { 0 };
                    coeffs.push(half(v[i] - next)?);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    coeffs.push(half(v[i] - v[i + 1])?);
                }
                coeffs.push(u32::try_from(v[n - 1]).ok()?);
            }
            Family::D => {
                for i in 0..n - 2 {
                    coeffs.push(half(v[i] - v[i + 1])?);
                }
                coeffs.push(half(v[n - 2] - v[n - 1])?);
                coeffs.push(half(v[n - 2] + v[n - 1])?);
            }
        }
        Some(DominantWeight { system: *self, coeffs })
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// `λ = Σ a_i ω_i` in Bourbaki numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DominantWeight {
    #[serde(flatten)]
    system: RootSystem,
    coeffs: Vec<u32>,
}

impl DominantWeight {
    pub fn new(system: RootSystem, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != system.rank {
            return Err(Error::WeightLength {
                family: system.family,
                rank: system.rank,
                got: coeffs.len(),
            });
        }
        Ok(DominantWeight { system, coeffs })
    }

    pub fn zero(system: RootSystem) -> Self {
        DominantWeight { system, coeffs: vec![0; system.rank] }
    }

    /// `mult · ω_i`, with `i` 1-based.
    pub fn fundamental(system: RootSystem, i: usize, mult: u32) -> Self {
        assert!((1..=system.rank).contains(&i), "fundamental weight index {i} out of range");
        let mut coeffs = vec![0; system.rank];
        coeffs[i - 1] = mult;
        DominantWeight { system, coeffs }
    }

    pub fn system(&self) -> RootSystem {
        self.system
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    pub fn level(&self) -> u32 {
        level(self)
    }

    pub fn dual(&self) -> DominantWeight {
        dual_weight(self)
    }

    pub(crate) fn doubled_eps(&self) -> Vec<i64> {
        let a: Vec<i64> = self.coeffs.iter().map(|&x| x as i64).collect();
        let n = self.system.rank;
        let tail = |from: usize, to: usize| a[from..to].iter().sum::<i64>();
        match self.system.family {
            Family::A => (0..=n).map(|j| 2 * tail(j.min(n), n)).collect(),
            Family::C => (0..n).map(|j| 2 * tail(j, n)).collect(),
            Family::B => (0..n).map(|j| 2 * tail(j, n - 1) + a[n - 1]).collect(),
            Family::D => {
                let spin = a[n - 2] + a[n - 1];
                let mut v: Vec<i64> = (0..n - 2).map(|j| 2 * tail(j, n - 2) + spin).collect();
                v.push(spin);
                v.push(a[n - 1] - a[n - 2]);
                v
            }
        }
    }
}

impl Dimensioned for DominantWeight {
    fn dim(&self) -> BigUint {
        weyl_dim(self)
    }
}

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

/// Subscript digits for labels such as `ω₁₂`.
pub fn subscript(n: usize) -> String {
    n.to_string().chars().map(|c| SUBSCRIPTS[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if a > 1 {
                write!(f, "{a}")?;
            }
            write!(f, "ω{}", subscript(i + 1))?;
        }
        Ok(())
    }
}

/// `(λ, θ)` with `(θ, θ) = 2`, as a comark-weighted coefficient sum.
pub fn level(w: &DominantWeight) -> u32 {
    w.system.comarks().iter().zip(&w.coeffs).map(|(c, a)| c * a).sum()
}

/// All dominant weights of level at most `k`, in lexicographic order of
/// coefficient vectors.
pub fn level_k_weights(rs: RootSystem, k: u32) -> Vec<DominantWeight> {
    weights_within_budget(rs, &rs.comarks(), k)
}

/// All `λ` with `Σ costs_i · a_i ≤ budget`, lexicographic. Every cost must be ≥ 1.
pub(crate) fn weights_within_budget(rs: RootSystem, costs: &[u32], budget: u32) -> Vec<DominantWeight> {
    debug_assert!(costs.len() == rs.rank() && costs.iter().all(|&c| c >= 1));
    fn rec(comarks: &[u32], budget: u32, current: &mut Vec<u32>, rs: RootSystem, out: &mut Vec<DominantWeight>) {
        let i = current.len();
        if i == comarks.len() {
            out.push(DominantWeight { system: rs, coeffs: current.clone() });
            return;
        }
        for a in 0..=budget / comarks[i] {
            current.push(a);
            rec(comarks, budget - a * comarks[i], current, rs, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(costs, budget, &mut Vec::new(), rs, &mut out);
    out
}

/// `-w₀λ`: reverses A, swaps the spin nodes of odd-rank D, fixes everything else.
pub fn dual_weight(w: &DominantWeight) -> DominantWeight {
    let mut coeffs = w.coeffs.clone();
    let n = w.system.rank;
    match w.system.family {
        Family::A => coeffs.reverse(),
        Family::D if n % 2 == 1 => coeffs.swap(n - 2, n - 1),
        _ => {}
    }
    DominantWeight { system: w.system, coeffs }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `∏_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(w: &DominantWeight) -> BigCount {
    let rho = w.system.rho_doubled();
    let shifted: Vec<i64> = w.doubled_eps().iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for alpha in w.system.positive_roots_doubled() {
        num *= dot(&shifted, &alpha) as u64;
        den *= dot(&rho, &alpha) as u64;
    }
    debug_assert!((&num % &den) == BigUint::from(0u32));
    num / den
}

/// Dimension of the `GL_n` module indexed by `p` (hook-content formula).
pub fn gl_dim(n: usize, p: &Partition) -> Result<BigCount> {
    if p.len() > n {
        return Err(Error::PartitionTooLong { parts: p.len(), rank: n });
    }
    let conj = p.transpose();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = n as i64 + j as i64 - i as i64;
            let hook = (row as usize - j) + (conj.part(j) as usize - i) - 1;
            num *= content as u64;
            den *= hook as u64;
        }
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    fn w(f: Family, coeffs: &[u32]) -> DominantWeight {
        DominantWeight::new(rs(f, coeffs.len()), coeffs.to_vec()).unwrap()
    }

    #[test]
    fn rank_validity() {
        assert!(RootSystem::new(Family::A, 1).is_ok());
        assert!(RootSystem::new(Family::C, 1).is_ok());
        assert_eq!(
            RootSystem::new(Family::D, 2).unwrap_err().to_string(),
            "D requires rank ≥ 3 (got 2)"
        );
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
    }

    #[test]
    fn level_examples() {
        assert_eq!(w(Family::C, &[0, 0]).level(), 0);
        assert_eq!(w(Family::C, &[1, 1]).level(), 2);
        assert_eq!(w(Family::D, &[0, 1, 0, 0]).level(), 2);
    }

    #[test]
    fn comarks_match_highest_root_pairing() {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            for n in family.min_rank()..=7 {
                let sys = rs(family, n);
                let theta = sys.highest_root_doubled();
                let tt = dot(&theta, &theta);
                for i in 1..=n {
                    let om = DominantWeight::fundamental(sys, i, 1).doubled_eps();
                    let lt = 2 * dot(&om, &theta);
                    assert_eq!(lt % tt, 0);
                    assert_eq!((lt / tt) as u32, sys.comarks()[i - 1], "{sys} ω{i}");
                }
            }
        }
    }

    #[test]
    fn comarks_match_explicit_c_and_d_conditions() {
        // C: Σ a_i ; D: a_1 + 2Σ_{2..m-2} a_i + a_{m-1} + a_m
        for wt in level_k_weights(rs(Family::C, 3), 4) {
            assert_eq!(wt.level(), wt.coeffs().iter().sum::<u32>());
        }
        for m in 3..=6 {
            for wt in level_k_weights(rs(Family::D, m), 3) {
                let a = wt.coeffs();
                let mid: u32 = a[1..m - 2].iter().map(|x| 2 * x).sum();
                assert_eq!(wt.level(), a[0] + mid + a[m - 2] + a[m - 1]);
            }
        }
    }

    #[test]
    fn level_k_examples() {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            let sys = rs(family, family.min_rank().max(2));
            assert_eq!(level_k_weights(sys, 0), vec![DominantWeight::zero(sys)]);
        }
        let c2 = level_k_weights(rs(Family::C, 2), 1);
        assert_eq!(c2.iter().map(|x| x.coeffs().to_vec()).collect::<Vec<_>>(), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        let d3 = level_k_weights(rs(Family::D, 3), 1);
        assert_eq!(d3.len(), 4);
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&w(Family::C, &[0, 0])), BigUint::from(1u32));
        assert_eq!(weyl_dim(&w(Family::C, &[0, 1])), BigUint::from(5u32));
        assert_eq!(weyl_dim(&w(Family::C, &[0, 2])), BigUint::from(14u32));
        assert_eq!(weyl_dim(&w(Family::C, &[1, 0])), BigUint::from(4u32));
        assert_eq!(weyl_dim(&w(Family::C, &[0, 0, 0, 1])), BigUint::from(42u32));
        // half-spin of D6, spin of B2, vector of D4
        assert_eq!(weyl_dim(&w(Family::D, &[0, 0, 0, 0, 0, 1])), BigUint::from(32u32));
        assert_eq!(weyl_dim(&w(Family::B, &[0, 1])), BigUint::from(4u32));
        assert_eq!(weyl_dim(&w(Family::D, &[1, 0, 0, 0])), BigUint::from(8u32));
        // adjoint of A3
        assert_eq!(weyl_dim(&w(Family::A, &[1, 0, 1])), BigUint::from(15u32));
    }

    #[test]
    fn gl_dim_examples() {
        assert_eq!(gl_dim(3, &Partition::empty()).unwrap(), BigUint::from(1u32));
        assert_eq!(gl_dim(2, &Partition::new(vec![2]).unwrap()).unwrap(), BigUint::from(3u32));
        assert_eq!(gl_dim(4, &Partition::new(vec![2, 2, 2]).unwrap()).unwrap(), BigUint::from(10u32));
        assert!(gl_dim(1, &Partition::new(vec![1, 1]).unwrap()).is_err());
    }

    #[test]
    fn duality_examples() {
        let c = w(Family::C, &[1, 2, 0]);
        assert_eq!(dual_weight(&c), c);
        assert_eq!(dual_weight(&w(Family::D, &[0, 1, 0])), w(Family::D, &[0, 0, 1]));
        assert_eq!(dual_weight(&w(Family::D, &[0, 0, 1, 0])), w(Family::D, &[0, 0, 1, 0]));
        assert_eq!(dual_weight(&w(Family::A, &[1, 0, 2])), w(Family::A, &[2, 0, 1]));
    }

    #[test]
    fn doubled_coordinates_round_trip() {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            for n in family.min_rank()..=5 {
                let sys = rs(family, n);
                for wt in level_k_weights(sys, 3) {
                    let v = wt.doubled_eps();
                    assert!(sys.is_dominant(&v));
                    assert_eq!(sys.weight_from_doubled(&v), Some(wt));
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let wt = w(Family::C, &[0, 1]);
        // serde_json is a dev-dependency
        let s = serde_json::to_string(&wt).unwrap();
        assert_eq!(s, r#"{"family":"C","rank":2,"coeffs":[0,1]}"#);
    }
}
