//! Brute-force ground truth at small rank.
//!
//! Characters are explicit Laurent polynomials on the standard torus. Module
//! decompositions are recovered by peeling: repeatedly subtract the character
//! of the highest surviving dominant weight. A negative leading coefficient
//! is a hard error, so every decomposition the oracle returns is self-checked.
//!
//! Torus specializations used here:
//! - `GL_{2m} ⊃ Sp_{2m}`: `x_i ↦ y_i`, `x_{m+i} ↦ y_{m+1-i}⁻¹` (torus `diag(t, −t reversed)`).
//! - `Sp_{4m} ⊃ Sp_{2m}` through the Levi `GL_{2m}`: the same map on the first `2m`
//!   coordinates of the rank-`2m` torus.

mod character;
mod freudenthal;
mod symmetric;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use character::{LaurentCharacter, TermJson};

use crate::error::{Error, Result};
use crate::isotypic::Isotypic;
use crate::partition::Partition;
use crate::root_system::{level, DominantWeight, Family, RootSystem};

/// Explicit feasibility envelope. Requests outside it fail with
/// [`Error::OracleScale`] instead of running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_rank: usize,
    pub max_level: u32,
    pub max_partition_size: u32,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_rank: 6, max_level: 6, max_partition_size: 12 }
    }
}

impl OracleLimits {
    pub fn with_max_level(mut self, max_level: u32) -> Self {
        self.max_level = max_level;
        self
    }
}

/// Character oracle with a memo of irreducible characters. The memo only
/// saves time; results are identical with a fresh oracle.
#[derive(Debug, Default)]
pub struct Oracle {
    limits: OracleLimits,
    cache: Mutex<HashMap<DominantWeight, Arc<LaurentCharacter>>>,
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits, cache: Mutex::new(HashMap::new()) }
    }

    pub fn limits(&self) -> OracleLimits {
        self.limits
    }

    fn check_weight(&self, w: &DominantWeight) -> Result<()> {
        let rs = w.system();
        if rs.rank() > self.limits.max_rank {
            return Err(Error::OracleScale(format!("rank {} > {}", rs.rank(), self.limits.max_rank)));
        }
        let lvl = level(w);
        if lvl > self.limits.max_level {
            return Err(Error::OracleScale(format!("level {lvl} of {w} > {}", self.limits.max_level)));
        }
        Ok(())
    }

    pub fn irreducible_character(&self, w: &DominantWeight) -> Result<Arc<LaurentCharacter>> {
        self.check_weight(w)?;
        if let Some(c) = self.cache.lock().unwrap().get(w) {
            return Ok(Arc::clone(c));
        }
        let chr = Arc::new(freudenthal::character(w));
        self.cache.lock().unwrap().insert(w.clone(), Arc::clone(&chr));
        Ok(chr)
    }

    /// Schur polynomial `s_p(x_1, …, x_n)`.
    pub fn gl_schur_character(&self, n: usize, p: &Partition) -> Result<LaurentCharacter> {
        if p.len() > n {
            return Err(Error::PartitionTooLong { parts: p.len(), rank: n });
        }
        if p.size() > self.limits.max_partition_size || n > 2 * self.limits.max_rank {
            return Err(Error::OracleScale(format!("GL{n} character of {p}")));
        }
        Ok(symmetric::schur(n, p))
    }

    /// Peels a Weyl-invariant character of `rs` into irreducibles.
    pub fn decompose(&self, rs: RootSystem, chr: &LaurentCharacter) -> Result<Isotypic<DominantWeight>> {
        if chr.nvars() != rs.nvars() {
            return Err(Error::NotInvariant(format!("{} variables for {rs}", chr.nvars())));
        }
        let normalize = |c: &LaurentCharacter| -> LaurentCharacter {
            if rs.family() == Family::A {
                // GL form → SL torus: shift so the last coordinate is 0
                c.specialize(c.nvars(), |e| {
                    let last = e[e.len() - 1];
                    e.iter().map(|x| x - last).collect()
                })
            } else {
                c.clone()
            }
        };
        let mut residual = normalize(chr);
        let rho = rs.rho_doubled();
        let mut out = Isotypic::new();
        while !residual.is_zero() {
            let to_doubled = 2 / residual.scale() as i64;
            let top = residual
                .iter()
                .map(|(e, c)| (e.iter().map(|&x| x as i64 * to_doubled).collect::<Vec<i64>>(), c))
                .filter(|(v, _)| rs.is_dominant(v))
                .max_by_key(|(v, _)| (v.iter().zip(&rho).map(|(a, b)| a * b).sum::<i64>(), v.clone()));
            let Some((v, c)) = top else {
                return Err(Error::NotInvariant(format!("no dominant term left in {residual}")));
            };
            let Some(w) = rs.weight_from_doubled(&v) else {
                return Err(Error::NotInvariant(format!("leading term {v:?} is not an integral weight of {rs}")));
            };
            if c < 0 {
                return Err(Error::NegativeMultiplicity { weight: w.to_string(), mult: c });
            }
            let irr = self.irreducible_character(&w)?;
            residual = if rs.family() == Family::A {
                residual.axpy(-c, &normalize(&irr))
            } else {
                residual.axpy(-c, &irr)
            }
            .simplified();
            out.add(w, c as u64);
        }
        Ok(out)
    }

    /// `V(λ) ⊗ V(μ)` into irreducibles.
    pub fn tensor_decompose(&self, lambda: &DominantWeight, mu: &DominantWeight) -> Result<Isotypic<DominantWeight>> {
        assert_eq!(lambda.system(), mu.system(), "tensor factors from different root systems");
        let product = self.irreducible_character(lambda)?.mul(&*self.irreducible_character(mu)?).simplified();
        self.decompose(lambda.system(), &product)
    }

    /// Restriction of the `GL_{2m}` module `p` to `Sp_{2m}` via torus specialization.
    pub fn restrict_gl_to_sp(&self, m: usize, p: &Partition) -> Result<Isotypic<DominantWeight>> {
        let cm = RootSystem::new(Family::C, m)?;
        let schur = self.gl_schur_character(2 * m, p)?;
        let restricted = schur.specialize(m, |e| gl_to_sp_exponents(m, e));
        self.decompose(cm, &restricted)
    }

    /// Restriction of a `Sp_{4m}` module to the `Sp_{2m}` inside the Levi `GL_{2m}`.
    pub fn restrict_big_to_small_sp(&self, m: usize, lambda: &DominantWeight) -> Result<Isotypic<DominantWeight>> {
        let big = lambda.system();
        if big.family() != Family::C || big.rank() != 2 * m {
            return Err(Error::WeightLength { family: Family::C, rank: 2 * m, got: big.rank() });
        }
        let cm = RootSystem::new(Family::C, m)?;
        let chr = self.irreducible_character(lambda)?;
        let restricted = chr.specialize(m, |e| gl_to_sp_exponents(m, e));
        self.decompose(cm, &restricted)
    }

    /// `char Λ^p − char Λ^{p−2}` of the defining representation of `Sp_{2n}`.
    pub fn sp_fundamental_character(&self, n: usize, p: usize) -> Result<LaurentCharacter> {
        if p == 0 || p > n {
            return Err(Error::WeightLength { family: Family::C, rank: n, got: p });
        }
        let e = symmetric::elementary(n, &symplectic_vars(n), p);
        let lower = if p >= 2 { e[p - 2].clone() } else { LaurentCharacter::zero(n) };
        Ok(e[p].sub(&lower))
    }

    /// Whether `char Λ^{2m}(ℂ^{4m}) = char 𝕍(2ω_{2m}) + char 𝕍(2ω_{2m−1})` for `D_{2m}`.
    pub fn so_exterior_identity_check(&self, m: usize) -> Result<bool> {
        let d = RootSystem::new(Family::D, 2 * m)?;
        let wedge = symmetric::elementary(2 * m, &symplectic_vars(2 * m), 2 * m).pop().unwrap();
        let plus = self.irreducible_character(&DominantWeight::fundamental(d, 2 * m, 2))?;
        let minus = self.irreducible_character(&DominantWeight::fundamental(d, 2 * m - 1, 2))?;
        Ok(wedge == plus.add(&minus).simplified())
    }

    /// The Koike-Terada universal symplectic character of `λ` evaluated on the
    /// rank-`m` torus (any number of rows).
    pub fn universal_sp_character(&self, m: usize, lambda: &Partition) -> Result<LaurentCharacter> {
        if m > self.limits.max_rank || lambda.size() > self.limits.max_partition_size {
            return Err(Error::OracleScale(format!("universal character of {lambda} at rank {m}")));
        }
        Ok(symmetric::universal_symplectic(m, lambda))
    }
}

pub(crate) fn symplectic_vars(m: usize) -> Vec<Vec<i32>> {
    symmetric::symplectic_vars(m)
}

/// `(e_1..e_{2m}) ↦ (e_j − e_{2m+1−j})_j`.
pub(crate) fn gl_to_sp_exponents(m: usize, e: &[i32]) -> Vec<i32> {
    (0..m).map(|j| e[j] - e[2 * m - 1 - j]).collect()
}
