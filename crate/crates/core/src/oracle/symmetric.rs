//! Schur and elementary symmetric polynomials as Laurent characters.

use super::character::LaurentCharacter;
use crate::partition::Partition;

/// `s_p(x_1, …, x_n)` by Gelfand-Tsetlin branching: one term per semistandard
/// tableau of shape `p` with entries `≤ n`.
pub(crate) fn schur(n: usize, p: &Partition) -> LaurentCharacter {
    let mut out = LaurentCharacter::zero(n);
    let top: Vec<u32> = (0..n).map(|i| p.part(i)).collect();
    let mut exps = vec![0i32; n];
    branch(&top, n, &mut exps, &mut out);
    out
}

fn branch(row: &[u32], vars: usize, exps: &mut Vec<i32>, out: &mut LaurentCharacter) {
    let row_size: u32 = row.iter().sum();
    if vars == 1 {
        exps[0] = row[0] as i32;
        out.add_term(exps.clone(), 1);
        return;
    }
    // next row μ interlaces: row[i+1] ≤ μ_i ≤ row[i]
    let len = vars - 1;
    let mut mu = vec![0u32; len];
    fn choose(i: usize, row: &[u32], mu: &mut Vec<u32>, row_size: u32, vars: usize, exps: &mut Vec<i32>, out: &mut LaurentCharacter) {
        if i == mu.len() {
            let mu_size: u32 = mu.iter().sum();
            exps[vars - 1] = (row_size - mu_size) as i32;
            let next = mu.clone();
            branch(&next, vars - 1, exps, out);
            return;
        }
        for v in row[i + 1]..=row[i] {
            mu[i] = v;
            choose(i + 1, row, mu, row_size, vars, exps, out);
        }
    }
    choose(0, row, &mut mu, row_size, vars, exps, out);
}

/// Elementary symmetric characters `e_0, …, e_max` of the multiset of
/// monomials `vars` (each an exponent vector).
pub(crate) fn elementary(nvars: usize, vars: &[Vec<i32>], max: usize) -> Vec<LaurentCharacter> {
    let mut e: Vec<LaurentCharacter> = (0..=max).map(|_| LaurentCharacter::zero(nvars)).collect();
    e[0] = LaurentCharacter::one(nvars);
    for x in vars {
        let mono = LaurentCharacter::monomial(x.clone());
        for k in (1..=max).rev() {
            let step = e[k - 1].mul(&mono);
            e[k] = e[k].add(&step);
        }
    }
    e
}

/// The `2m` symplectic torus monomials `y_1, …, y_m, y_m⁻¹, …, y_1⁻¹`.
pub(crate) fn symplectic_vars(m: usize) -> Vec<Vec<i32>> {
    let unit = |i: usize, s: i32| {
        let mut v = vec![0; m];
        v[i] = s;
        v
    };
    (0..m).map(|i| unit(i, 1)).chain((0..m).rev().map(|i| unit(i, -1))).collect()
}

/// Determinant of a square matrix of characters, by dynamic programming over
/// column subsets.
pub(crate) fn determinant(nvars: usize, matrix: &[Vec<LaurentCharacter>]) -> LaurentCharacter {
    let n = matrix.len();
    if n == 0 {
        return LaurentCharacter::one(nvars);
    }
    // dp[mask]: signed sum over bijections rows 0..popcount(mask) → columns in mask
    let mut dp: Vec<Option<LaurentCharacter>> = vec![None; 1 << n];
    dp[0] = Some(LaurentCharacter::one(nvars));
    for mask in 0usize..(1 << n) {
        let Some(acc) = dp[mask].clone() else { continue };
        if acc.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for (col, entry) in matrix[row].iter().enumerate() {
            if mask & (1 << col) != 0 || entry.is_zero() {
                continue;
            }
            // sign of placing `col` after the columns already used: count used columns greater than col
            let inversions = (mask >> (col + 1)).count_ones();
            let term = acc.mul(entry);
            let factor = if inversions.is_multiple_of(2) { 1 } else { -1 };
            let next = mask | (1 << col);
            dp[next] = Some(match dp[next].take() {
                Some(prev) => prev.axpy(factor, &term),
                None => LaurentCharacter::zero(nvars).axpy(factor, &term),
            });
        }
    }
    dp[(1 << n) - 1].take().unwrap_or_else(|| LaurentCharacter::zero(nvars))
}

/// Universal symplectic character of `λ` on the rank-`m` torus:
/// `det(e_{λ'_i − i + j} − e_{λ'_i − i − j})` in the `2m` variables `y_i^{±1}`.
pub(crate) fn universal_symplectic(m: usize, lambda: &Partition) -> LaurentCharacter {
    let conj = lambda.transpose();
    let n = conj.len();
    let e = elementary(m, &symplectic_vars(m), 2 * m);
    let e_at = |k: i64| -> LaurentCharacter {
        if k < 0 || k as usize > 2 * m {
            LaurentCharacter::zero(m)
        } else {
            e[k as usize].clone()
        }
    };
    let matrix: Vec<Vec<LaurentCharacter>> = (1..=n as i64)
        .map(|i| {
            let c = conj.part(i as usize - 1) as i64;
            (1..=n as i64).map(|j| e_at(c - i + j).sub(&e_at(c - i - j))).collect()
        })
        .collect();
    determinant(m, &matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(3, &p(&[])).sorted_terms(), vec![(vec![0, 0, 0], 1)]);
        assert_eq!(schur(2, &p(&[1, 1])).sorted_terms(), vec![(vec![1, 1], 1)]);
        assert_eq!(
            schur(2, &p(&[2])).sorted_terms(),
            vec![(vec![0, 2], 1), (vec![1, 1], 1), (vec![2, 0], 1)]
        );
        // s_{21}(x1,x2,x3) has 8 terms with the middle monomial doubled
        let s21 = schur(3, &p(&[2, 1]));
        assert_eq!(s21.dimension(), 8);
        assert_eq!(s21.coeff(&[1, 1, 1]), 2);
    }

    #[test]
    fn elementary_counts_are_binomials() {
        let e = elementary(2, &symplectic_vars(2), 4);
        let dims: Vec<i128> = e.iter().map(|c| c.dimension()).collect();
        assert_eq!(dims, vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn determinant_of_scalars() {
        let c = |x: i128| {
            let mut ch = LaurentCharacter::zero(1);
            ch.add_term(vec![0], x);
            ch
        };
        let m = vec![vec![c(2), c(1), c(0)], vec![c(1), c(3), c(1)], vec![c(0), c(1), c(4)]];
        // 2(12-1) - 1(4-0) + 0 = 18
        assert_eq!(determinant(1, &m).coeff(&[0]), 18);
    }

    #[test]
    fn universal_character_small_cases() {
        // (1,1) vanishes on Sp(2); (1,1,1) is minus the defining character
        assert!(universal_symplectic(1, &p(&[1, 1])).is_zero());
        let c = universal_symplectic(1, &p(&[1, 1, 1]));
        assert_eq!(c.sorted_terms(), vec![(vec![-1], -1), (vec![1], -1)]);
        let c = universal_symplectic(1, &p(&[2]));
        assert_eq!(c.sorted_terms(), vec![(vec![-2], 1), (vec![0], 1), (vec![2], 1)]);
    }
}
