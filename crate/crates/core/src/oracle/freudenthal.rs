//! Weight multiplicities by Freudenthal's recursion over dominant weights,
//! expanded to full characters by Weyl-orbit symmetrization.
//!
//! All vectors are doubled ε-coordinates (see `root_system`).

use std::collections::HashMap;

use super::character::LaurentCharacter;
use crate::root_system::{DominantWeight, Family, RootSystem};

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Multiplicities of the dominant weights of `V(λ)`, highest first.
pub(crate) fn dominant_multiplicities(w: &DominantWeight) -> Vec<(Vec<i64>, u64)> {
    let rs = w.system();
    let top = w.doubled_eps();
    let rho = rs.rho_doubled();
    let roots = rs.positive_roots_doubled();

    // Every dominant weight below λ is reachable through dominant weights by
    // subtracting one positive root at a time.
    let mut dominant = vec![top.clone()];
    let mut seen: std::collections::HashSet<Vec<i64>> = dominant.iter().cloned().collect();
    let mut i = 0;
    while i < dominant.len() {
        let v = dominant[i].clone();
        for alpha in &roots {
            let u: Vec<i64> = v.iter().zip(alpha).map(|(a, b)| a - b).collect();
            if rs.is_dominant(&u) && seen.insert(u.clone()) {
                dominant.push(u);
            }
        }
        i += 1;
    }
    dominant.sort_by_key(|v| {
        let diff: Vec<i64> = top.iter().zip(v).map(|(a, b)| a - b).collect();
        dot(&diff, &rho)
    });

    let shifted = |v: &[i64]| -> Vec<i64> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top_norm = {
        let s = shifted(&top);
        dot(&s, &s)
    };

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::with_capacity(dominant.len());
    mult.insert(top.clone(), 1);
    let mut out = vec![(top.clone(), 1u64)];
    for mu in dominant.iter().skip(1) {
        let mut numerator: i128 = 0;
        for alpha in &roots {
            let mut j = 1i64;
            loop {
                let nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + j * b).collect();
                let Some(&m) = mult.get(&rs.dominant_rep(&nu)) else { break };
                numerator += (m as i128) * (dot(&nu, alpha) as i128);
                j += 1;
            }
        }
        numerator *= 2;
        let s = shifted(mu);
        let denominator = (top_norm - dot(&s, &s)) as i128;
        assert!(denominator > 0, "Freudenthal denominator must be positive");
        assert_eq!(numerator % denominator, 0, "Freudenthal recursion produced a fraction");
        let m = (numerator / denominator) as u64;
        mult.insert(mu.clone(), m);
        out.push((mu.clone(), m));
    }
    out
}

/// All distinct images of a dominant vector under the Weyl group.
pub(crate) fn weyl_orbit(rs: RootSystem, v: &[i64]) -> Vec<Vec<i64>> {
    let family = rs.family();
    let base: Vec<i64> = match family {
        Family::A => v.to_vec(),
        _ => v.iter().map(|x| x.abs()).collect(),
    };
    let perms = distinct_permutations(&base);
    if family == Family::A {
        return perms;
    }
    let has_zero = base.contains(&0);
    let parity = v.iter().filter(|&&x| x < 0).count() % 2;
    let mut out = Vec::new();
    for p in perms {
        let nonzero: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
        for mask in 0u32..(1 << nonzero.len()) {
            if family == Family::D && !has_zero && (mask.count_ones() as usize) % 2 != parity {
                continue;
            }
            let mut q = p.clone();
            for (bit, &i) in nonzero.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    q[i] = -q[i];
                }
            }
            out.push(q);
        }
    }
    out
}

fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut values: Vec<i64> = v.to_vec();
    values.sort_unstable();
    values.dedup();
    let mut counts: Vec<usize> = values.iter().map(|x| v.iter().filter(|y| *y == x).count()).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(v.len());
    fn rec(values: &[i64], counts: &mut [usize], current: &mut Vec<i64>, n: usize, out: &mut Vec<Vec<i64>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..values.len() {
            if counts[i] == 0 {
                continue;
            }
            counts[i] -= 1;
            current.push(values[i]);
            rec(values, counts, current, n, out);
            current.pop();
            counts[i] += 1;
        }
    }
    rec(&values, &mut counts, &mut current, v.len(), &mut out);
    out
}

/// Full weight-multiplicity character of `V(λ)`.
pub(crate) fn character(w: &DominantWeight) -> LaurentCharacter {
    let rs = w.system();
    let integral = w.doubled_eps().iter().all(|x| x % 2 == 0);
    let scale = if integral { 1 } else { 2 };
    let mut chr = LaurentCharacter::zero_scaled(rs.nvars(), scale);
    for (mu, m) in dominant_multiplicities(w) {
        for v in weyl_orbit(rs, &mu) {
            let exps = v.iter().map(|&x| if integral { (x / 2) as i32 } else { x as i32 }).collect();
            chr.add_term(exps, m as i128);
        }
    }
    chr
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        let c2 = RootSystem::new(Family::C, 2).unwrap();
        assert_eq!(weyl_orbit(c2, &[2, 0]).len(), 4);
        assert_eq!(weyl_orbit(c2, &[2, 2]).len(), 4);
        assert_eq!(weyl_orbit(c2, &[4, 2]).len(), 8);
        let d3 = RootSystem::new(Family::D, 3).unwrap();
        // half-spin orbit: 4 of the 8 sign patterns
        assert_eq!(weyl_orbit(d3, &[1, 1, 1]).len(), 4);
        assert_eq!(weyl_orbit(d3, &[2, 0, 0]).len(), 6);
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(weyl_orbit(a2, &[2, 0, 0]).len(), 3);
    }

    #[test]
    fn five_dimensional_c2_module() {
        let c2 = RootSystem::new(Family::C, 2).unwrap();
        let w = DominantWeight::fundamental(c2, 2, 1);
        let dm = dominant_multiplicities(&w);
        assert_eq!(dm, vec![(vec![2, 2], 1), (vec![0, 0], 1)]);
        assert_eq!(character(&w).dimension(), 5);
    }
}
