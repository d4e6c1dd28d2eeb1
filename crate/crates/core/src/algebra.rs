//! Zhu algebra and C₂-algebra decompositions.
//!
//! Type C graded character: the C₂-algebra of `sp_{2m}` at level `k` is, as a
//! `GL_{2m}`-module, a sum over tuples `(a_1, …, a_{2m})` with `Σ a_i ≤ k` of
//! the module `2(a_1ω_1 + … + a_{2m−1}ω_{2m−1})` twisted by `det^{2(a_{2m}−k)}`,
//! sitting in degree `j = 2mk − Σ i·a_i`. Each summand is then restricted to
//! `Sp_{2m}` with [`restrict_gl_to_sp_kt`].

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::folding::restrict_gl_to_sp_kt;
use crate::isotypic::{Isotypic, WeightPair};
use crate::partition::{weight_to_partition, Partition};
use crate::root_system::{level_k_weights, weights_within_budget, weyl_dim, BigCount, DominantWeight, Family, RootSystem};

/// `A(g; k) ≃ ⊕_{λ ∈ P⁺_k} V(λ) ⊗ V(λ)*`.
pub fn zhu_decomposition(rs: RootSystem, k: u32) -> Isotypic<WeightPair> {
    level_k_weights(rs, k)
        .into_iter()
        .map(|w| {
            let dual = w.dual();
            (WeightPair::new(w, dual), 1)
        })
        .collect()
}

/// Total dimension of [`zhu_decomposition`], `Σ dim(λ)²`.
pub fn zhu_dim(rs: RootSystem, k: u32, strategy: Strategy) -> BigCount {
    let dims = exec::map(strategy, level_k_weights(rs, k), |w| {
        let d = weyl_dim(&w);
        &d * &d
    });
    dims.into_iter().sum()
}

/// One `GL_{2m}` summand of the type C C₂-algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlSummand {
    pub partition: Partition,
    pub det_twist: i64,
    pub degree: usize,
    pub tuple: Vec<u32>,
}

/// One summand per tuple, in lexicographic tuple order. Equal partitions
/// recur with different twists and degrees.
pub fn c2_gl_decomposition(m: usize, k: u32) -> Vec<GlSummand> {
    let n = 2 * m;
    let mut tuples = Vec::new();
    fn rec(n: usize, budget: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for a in 0..=budget {
            current.push(a);
            rec(n, budget - a, current, out);
            current.pop();
        }
    }
    rec(n, k, &mut Vec::new(), &mut tuples);
    tuples
        .into_iter()
        .map(|tuple| {
            let mut doubled: Vec<u32> = tuple.iter().map(|a| 2 * a).collect();
            doubled[n - 1] = 0;
            let weighted: u64 = tuple.iter().enumerate().map(|(i, &a)| (i as u64 + 1) * a as u64).sum();
            GlSummand {
                partition: weight_to_partition(&doubled),
                det_twist: 2 * (tuple[n - 1] as i64 - k as i64),
                degree: (n as u64 * k as u64 - weighted) as usize,
                tuple,
            }
        })
        .collect()
}

/// Highest degree `2mk` of the type C C₂-algebra.
pub fn c2_max_degree(m: usize, k: u32) -> usize {
    2 * m * k as usize
}

/// Degree-graded `Sp_{2m}` decomposition of the C₂-algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub m: usize,
    pub k: u32,
    pub degrees: BTreeMap<usize, Isotypic<DominantWeight>>,
}

impl GradedDecomposition {
    /// Per-degree dimensions for `j = 0..=2mk`.
    pub fn dims(&self) -> Vec<BigCount> {
        (0..=c2_max_degree(self.m, self.k))
            .map(|j| self.degrees.get(&j).map(|iso| iso.total_dim()).unwrap_or_default())
            .collect()
    }

    pub fn total_dim(&self) -> BigCount {
        self.dims().into_iter().sum()
    }

    /// Poincaré polynomial, e.g. `1 + 3q + q^2`.
    pub fn poincare_polynomial(&self) -> String {
        poincare(&self.dims())
    }

    /// Exploratory: whether the dimension vector reads the same backwards.
    pub fn is_palindromic(&self) -> bool {
        let d = self.dims();
        d.iter().eq(d.iter().rev())
    }
}

pub(crate) fn poincare(dims: &[BigCount]) -> String {
    let mut parts = Vec::new();
    for (j, d) in dims.iter().enumerate() {
        if *d == BigUint::default() {
            continue;
        }
        let coeff = if *d == BigUint::from(1u32) && j > 0 { String::new() } else { d.to_string() };
        parts.push(match j {
            0 => coeff,
            1 => format!("{coeff}q"),
            _ => format!("{coeff}q^{j}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn restrict_summands(
    m: usize,
    summands: &[GlSummand],
    strategy: Strategy,
) -> Result<BTreeMap<Partition, Isotypic<DominantWeight>>> {
    let mut distinct: Vec<Partition> = summands.iter().map(|s| s.partition.clone()).collect();
    distinct.sort();
    distinct.dedup();
    let restricted = exec::try_map(strategy, distinct.clone(), |p| restrict_gl_to_sp_kt(m, &p))?;
    Ok(distinct.into_iter().zip(restricted).collect())
}

/// The degree-`j` component as an `Sp_{2m}`-module.
pub fn c2_graded_character(m: usize, k: u32, j: usize) -> Result<Isotypic<DominantWeight>> {
    c2_graded_character_with(m, k, j, Strategy::default())
}

pub fn c2_graded_character_with(m: usize, k: u32, j: usize, strategy: Strategy) -> Result<Isotypic<DominantWeight>> {
    let max = c2_max_degree(m, k);
    if j > max {
        return Err(Error::DegreeOutOfRange { degree: j, max });
    }
    RootSystem::new(Family::C, m)?;
    let summands: Vec<GlSummand> = c2_gl_decomposition(m, k).into_iter().filter(|s| s.degree == j).collect();
    let restricted = restrict_summands(m, &summands, strategy)?;
    let mut out = Isotypic::new();
    for s in &summands {
        out.merge(restricted[&s.partition].clone());
    }
    Ok(out)
}

pub fn c2_graded_decomposition(m: usize, k: u32, strategy: Strategy) -> Result<GradedDecomposition> {
    RootSystem::new(Family::C, m)?;
    let summands = c2_gl_decomposition(m, k);
    let restricted = restrict_summands(m, &summands, strategy)?;
    let mut degrees: BTreeMap<usize, Isotypic<DominantWeight>> = BTreeMap::new();
    for s in &summands {
        degrees.entry(s.degree).or_default().merge(restricted[&s.partition].clone());
    }
    Ok(GradedDecomposition { m, k, degrees })
}

/// Per-degree dimensions with the Poincaré polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: Vec<BigCount>,
    pub total: BigCount,
}

impl GradedDims {
    pub fn poincare_polynomial(&self) -> String {
        poincare(&self.dims)
    }
}

pub fn c2_graded_dims(m: usize, k: u32) -> Result<GradedDims> {
    c2_graded_dims_with(m, k, Strategy::default())
}

pub fn c2_graded_dims_with(m: usize, k: u32, strategy: Strategy) -> Result<GradedDims> {
    let g = c2_graded_decomposition(m, k, strategy)?;
    let dims = g.dims();
    let total = dims.iter().sum();
    Ok(GradedDims { dims, total })
}

/// `𝕍(kω_{2m})` of `Sp_{4m}` restricted to `Sp_{2m} × Sp_{2m}`:
/// `⊕_{Σ a_i ≤ k} V(λ) ⊗ V(λ)`.
pub fn sp_branching(m: usize, k: u32) -> Result<Isotypic<WeightPair>> {
    let cm = RootSystem::new(Family::C, m)?;
    Ok(level_k_weights(cm, k).into_iter().map(|w| (WeightPair::diagonal(w), 1)).collect())
}

/// Weights of `D_m` with `2(a_1 + … + a_{m−2}) + a_{m−1} + a_m ≤ k` and
/// `k − a_{m−1} − a_m` even.
fn so_even_index(dm: RootSystem, k: u32) -> Vec<DominantWeight> {
    let m = dm.rank();
    let costs: Vec<u32> = (1..=m).map(|i| if i <= m - 2 { 2 } else { 1 }).collect();
    weights_within_budget(dm, &costs, k)
        .into_iter()
        .filter(|w| (k - w.coeffs()[m - 2] - w.coeffs()[m - 1]).is_multiple_of(2))
        .collect()
}

/// `Spin_{4m}` modules `𝕍(kω_{2m})` (pairs `(λ, λ)`) or, with `dual_form`,
/// `𝕍(kω_{2m−1})` (pairs `(λ, λ*)`), restricted to `Spin_{2m} × Spin_{2m}`.
pub fn so_even_branching(m: usize, k: u32, dual_form: bool) -> Result<Isotypic<WeightPair>> {
    let dm = RootSystem::new(Family::D, m)?;
    Ok(so_even_index(dm, k)
        .into_iter()
        .map(|w| {
            let right = if dual_form { w.dual() } else { w.clone() };
            (WeightPair::new(w, right), 1)
        })
        .collect())
}

/// The quotient of the orthogonal C₂-algebra that the `Spin_{2n}` picture
/// controls, as pairs `(λ, λ*)`.
pub fn so_quotient_decomposition(rs: RootSystem, k: u32) -> Result<Isotypic<WeightPair>> {
    let m = rs.rank();
    let index = match rs.family() {
        // odd rank needs the ω_{2m−1} realization, which pairs λ with λ*
        Family::D => so_even_index(rs, k),
        Family::B => {
            let costs: Vec<u32> = (1..=m).map(|i| if i < m { 2 } else { 1 }).collect();
            weights_within_budget(rs, &costs, k)
                .into_iter()
                .filter(|w| (k - w.coeffs()[m - 1]).is_multiple_of(2))
                .collect()
        }
        other => return Err(Error::NotOrthogonal(other)),
    };
    Ok(index
        .into_iter()
        .map(|w| {
            let dual = w.dual();
            (WeightPair::new(w, dual), 1)
        })
        .collect())
}

/// `weyl_dim(C_{2m}, kω_{2m})`.
pub fn sp_big_dim(m: usize, k: u32) -> Result<BigCount> {
    let big = RootSystem::new(Family::C, 2 * m)?;
    Ok(weyl_dim(&DominantWeight::fundamental(big, 2 * m, k)))
}

/// `weyl_dim(D_{2m}, kω_{2m})`, or `kω_{2m−1}` with `dual_form`.
pub fn so_big_dim(m: usize, k: u32, dual_form: bool) -> Result<BigCount> {
    let big = RootSystem::new(Family::D, 2 * m)?;
    let node = if dual_form { 2 * m - 1 } else { 2 * m };
    Ok(weyl_dim(&DominantWeight::fundamental(big, node, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(coeffs: &[u32]) -> DominantWeight {
        DominantWeight::new(RootSystem::new(Family::C, coeffs.len()).unwrap(), coeffs.to_vec()).unwrap()
    }

    fn d(coeffs: &[u32]) -> DominantWeight {
        DominantWeight::new(RootSystem::new(Family::D, coeffs.len()).unwrap(), coeffs.to_vec()).unwrap()
    }

    fn big(n: u64) -> BigCount {
        BigUint::from(n)
    }

    #[test]
    fn zhu_examples() {
        let c1 = RootSystem::new(Family::C, 1).unwrap();
        let z = zhu_decomposition(c1, 0);
        assert_eq!(z, Isotypic::singleton(WeightPair::diagonal(c(&[0]))));
        assert_eq!(z.total_dim(), big(1));
        assert_eq!(zhu_decomposition(c1, 1).total_dim(), big(5));
        let c2 = RootSystem::new(Family::C, 2).unwrap();
        assert_eq!(zhu_decomposition(c2, 1).total_dim(), big(42));
        assert_eq!(zhu_dim(c2, 1, Strategy::Sequential), big(42));
        let d3 = RootSystem::new(Family::D, 3).unwrap();
        let z = zhu_decomposition(d3, 1);
        assert_eq!(z.get(&WeightPair::new(d(&[0, 1, 0]), d(&[0, 0, 1]))), 1);
        assert_eq!(z.total_dim(), big(69));
    }

    #[test]
    fn gl_summands() {
        let s = c2_gl_decomposition(1, 1);
        let brief: Vec<(Vec<u32>, i64, usize)> =
            s.iter().map(|x| (x.partition.parts().to_vec(), x.det_twist, x.degree)).collect();
        assert_eq!(brief, vec![(vec![], -2, 2), (vec![], 0, 0), (vec![2], -2, 1)]);
        let s = c2_gl_decomposition(3, 0);
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].partition.clone(), s[0].det_twist, s[0].degree), (Partition::empty(), 0, 0));
    }

    #[test]
    fn graded_components() {
        assert_eq!(c2_graded_character(2, 3, 0).unwrap(), Isotypic::singleton(c(&[0, 0])));
        let j2: Isotypic<DominantWeight> = [(c(&[4]), 1), (c(&[0]), 1)].into_iter().collect();
        assert_eq!(c2_graded_character(1, 2, 2).unwrap(), j2);
        let j2: Isotypic<DominantWeight> = [(c(&[0, 2]), 1), (c(&[0, 1]), 1), (c(&[0, 0]), 1)].into_iter().collect();
        let got = c2_graded_character(2, 1, 2).unwrap();
        assert_eq!(got, j2);
        assert_eq!(got.total_dim(), big(20));
        assert_eq!(c2_graded_character(1, 1, 3), Err(Error::DegreeOutOfRange { degree: 3, max: 2 }));
    }

    #[test]
    fn graded_dims() {
        let dims = |m, k| -> Vec<u64> {
            c2_graded_dims(m, k).unwrap().dims.iter().map(|d| d.to_u64_digits().first().copied().unwrap_or(0)).collect()
        };
        assert_eq!(dims(1, 1), vec![1, 3, 1]);
        assert_eq!(dims(1, 2), vec![1, 3, 6, 3, 1]);
        assert_eq!(dims(2, 1), vec![1, 10, 20, 10, 1]);
        let g = c2_graded_dims(2, 1).unwrap();
        assert_eq!(g.total, big(42));
        assert_eq!(g.poincare_polynomial(), "1 + 10q + 20q^2 + 10q^3 + q^4");
    }

    #[test]
    fn branching_examples() {
        let b = sp_branching(3, 1).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(sp_branching(1, 1).unwrap().total_dim(), big(5));
        assert_eq!(sp_branching(2, 2).unwrap().total_dim(), big(594));
        assert_eq!(sp_big_dim(2, 2).unwrap(), big(594));

        let so = so_even_branching(3, 1, false).unwrap();
        let labels: Vec<_> = so.iter().map(|(p, _)| p.left.coeffs().to_vec()).collect();
        assert_eq!(labels, vec![vec![0, 0, 1], vec![0, 1, 0]]);
        assert_eq!(so.total_dim(), big(32));
        assert_eq!(so_big_dim(3, 1, false).unwrap(), big(32));

        let k1: Vec<_> = so_even_index(RootSystem::new(Family::D, 4).unwrap(), 1).iter().map(|w| w.coeffs().to_vec()).collect();
        assert!(!k1.contains(&vec![1, 0, 0, 0]));
        let k2: Vec<_> = so_even_index(RootSystem::new(Family::D, 4).unwrap(), 2).iter().map(|w| w.coeffs().to_vec()).collect();
        assert!(k2.contains(&vec![1, 0, 0, 0]));

        assert!(matches!(so_even_branching(2, 1, false), Err(Error::InvalidRank { .. })));
    }

    #[test]
    fn quotient_examples() {
        let d3 = RootSystem::new(Family::D, 3).unwrap();
        let q = so_quotient_decomposition(d3, 1).unwrap();
        let expected: Isotypic<WeightPair> = [
            (WeightPair::new(d(&[0, 0, 1]), d(&[0, 1, 0])), 1),
            (WeightPair::new(d(&[0, 1, 0]), d(&[0, 0, 1])), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(q, expected);
        assert_eq!(q.total_dim(), big(32));

        let b2 = RootSystem::new(Family::B, 2).unwrap();
        let q = so_quotient_decomposition(b2, 1).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q.total_dim(), big(16));
        assert_eq!(so_quotient_decomposition(b2, 0).unwrap().total_dim(), big(1));

        let c2 = RootSystem::new(Family::C, 2).unwrap();
        assert_eq!(so_quotient_decomposition(c2, 1), Err(Error::NotOrthogonal(Family::C)));
    }
}
