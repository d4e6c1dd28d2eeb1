use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

/// A finite Laurent polynomial in torus variables.
///
/// Exponents are `scale · ε`-coordinates: `scale` is 1 when every weight is
/// integral and 2 when half-integral spin weights occur (types B and D).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentCharacter {
    nvars: usize,
    scale: i32,
    terms: HashMap<Vec<i32>, i128>,
}

#[derive(Serialize)]
pub struct TermJson {
    pub exponents: Vec<i32>,
    pub coeff: i128,
}

impl LaurentCharacter {
    pub fn zero(nvars: usize) -> Self {
        Self::zero_scaled(nvars, 1)
    }

    pub(crate) fn zero_scaled(nvars: usize, scale: i32) -> Self {
        assert!(scale == 1 || scale == 2, "scale must be 1 or 2");
        LaurentCharacter { nvars, scale, terms: HashMap::new() }
    }

    /// The constant character `1`.
    pub fn one(nvars: usize) -> Self {
        let mut c = Self::zero(nvars);
        c.add_term(vec![0; nvars], 1);
        c
    }

    pub fn monomial(exponents: Vec<i32>) -> Self {
        let mut c = Self::zero(exponents.len());
        c.add_term(exponents, 1);
        c
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn scale(&self) -> i32 {
        self.scale
    }

    pub fn add_term(&mut self, exponents: Vec<i32>, coeff: i128) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn coeff(&self, exponents: &[i32]) -> i128 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient sum: the dimension for a genuine character.
    pub fn dimension(&self) -> i128 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i32>, i128)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn sorted_terms(&self) -> Vec<(Vec<i32>, i128)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, &c)| (k.clone(), c)).collect();
        v.sort();
        v
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.sorted_terms()
            .into_iter()
            .map(|(exponents, coeff)| TermJson { exponents, coeff })
            .collect()
    }

    /// Re-expresses the exponents at scale 2.
    pub fn at_scale(&self, scale: i32) -> LaurentCharacter {
        if scale == self.scale {
            return self.clone();
        }
        assert!(self.scale == 1 && scale == 2, "can only refine scale 1 to scale 2");
        LaurentCharacter {
            nvars: self.nvars,
            scale,
            terms: self.terms.iter().map(|(k, &c)| (k.iter().map(|x| 2 * x).collect(), c)).collect(),
        }
    }

    fn aligned(&self, other: &LaurentCharacter) -> (LaurentCharacter, LaurentCharacter) {
        assert_eq!(self.nvars, other.nvars, "characters over different tori");
        let s = self.scale.max(other.scale);
        (self.at_scale(s), other.at_scale(s))
    }

    pub fn add(&self, other: &LaurentCharacter) -> LaurentCharacter {
        self.axpy(1, other)
    }

    pub fn sub(&self, other: &LaurentCharacter) -> LaurentCharacter {
        self.axpy(-1, other)
    }

    /// `self + factor · other`.
    pub fn axpy(&self, factor: i128, other: &LaurentCharacter) -> LaurentCharacter {
        let (mut a, b) = self.aligned(other);
        for (k, c) in b.terms {
            a.add_term(k, factor * c);
        }
        a
    }

    pub fn mul(&self, other: &LaurentCharacter) -> LaurentCharacter {
        let (a, b) = self.aligned(other);
        let mut acc: HashMap<Vec<i32>, i128> = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
        for (ka, &ca) in &a.terms {
            for (kb, &cb) in &b.terms {
                let k: Vec<i32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                *acc.entry(k).or_insert(0) += ca * cb;
            }
        }
        acc.retain(|_, c| *c != 0);
        LaurentCharacter { nvars: a.nvars, scale: a.scale, terms: acc }
    }

    /// Applies a linear map to every exponent vector, summing collisions.
    pub fn specialize(&self, target_vars: usize, f: impl Fn(&[i32]) -> Vec<i32>) -> LaurentCharacter {
        let mut out = LaurentCharacter::zero_scaled(target_vars, self.scale);
        for (k, &c) in &self.terms {
            out.add_term(f(k), c);
        }
        out
    }

    /// Drops back to scale 1 when every exponent is even.
    pub fn simplified(self) -> LaurentCharacter {
        if self.scale == 2 && self.terms.keys().all(|k| k.iter().all(|x| x % 2 == 0)) {
            LaurentCharacter {
                nvars: self.nvars,
                scale: 1,
                terms: self.terms.into_iter().map(|(k, c)| (k.into_iter().map(|x| x / 2).collect(), c)).collect(),
            }
        } else {
            self
        }
    }
}

impl fmt::Display for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·{k:?}")?;
        }
        if self.scale == 2 {
            f.write_str(" (exponents ×2)")?;
        }
        Ok(())
    }
}
