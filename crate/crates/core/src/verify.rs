//! Runnable checks with machine-readable reports.
//!
//! Every check computes a handful of named exact quantities and passes iff
//! the stated equalities hold. Suites refuse `(m, k)` outside their declared
//! envelope instead of silently truncating.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::algebra::{
    c2_graded_decomposition, c2_max_degree, so_big_dim, so_even_branching, sp_big_dim, sp_branching, zhu_dim,
};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::folding::restrict_gl_to_sp_kt;
use crate::isotypic::Isotypic;
use crate::oracle::{Oracle, OracleLimits};
use crate::partition::Partition;
use crate::root_system::{weyl_dim, BigCount, DominantWeight, Family, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchCase {
    Sp,
    SoEven,
    SoEvenDual,
}

impl BranchCase {
    pub fn as_str(self) -> &'static str {
        match self {
            BranchCase::Sp => "sp",
            BranchCase::SoEven => "so-even",
            BranchCase::SoEvenDual => "so-even-dual",
        }
    }
}

impl fmt::Display for BranchCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BranchCase {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sp" => Ok(BranchCase::Sp),
            "so-even" => Ok(BranchCase::SoEven),
            "so-even-dual" => Ok(BranchCase::SoEvenDual),
            other => Err(format!("unknown branching case `{other}` (expected sp, so-even, so-even-dual)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    ConjectureC,
    BranchDims(BranchCase),
    KtOracle,
    Laws,
}

impl Check {
    pub fn id(self) -> &'static str {
        match self {
            Check::ConjectureC => "conjecture-c",
            Check::BranchDims(_) => "branch-dims",
            Check::KtOracle => "kt-oracle",
            Check::Laws => "laws",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "check", serialize_with = "serialize_check")]
    pub check: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<BranchCase>,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_size: Option<u32>,
    #[serde(serialize_with = "serialize_quantities")]
    pub quantities: Vec<(String, BigCount)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
    pub passed: bool,
    /// Wall time; kept out of JSON so reports are byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

fn serialize_check<S: Serializer>(check: &Check, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(check.id())
}

fn serialize_quantities<S: Serializer>(q: &[(String, BigCount)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(q.len()))?;
    for (name, value) in q {
        map.serialize_entry(name, &value.to_string())?;
    }
    map.end()
}

impl VerificationReport {
    fn new(check: Check, m: usize) -> Self {
        let case = match check {
            Check::BranchDims(c) => Some(c),
            _ => None,
        };
        VerificationReport {
            check,
            case,
            m,
            k: None,
            max_size: None,
            quantities: Vec::new(),
            mismatches: Vec::new(),
            passed: false,
            elapsed: Duration::ZERO,
        }
    }

    fn quantity(&mut self, name: &str, value: BigCount) {
        self.quantities.push((name.to_string(), value));
    }

    pub fn get(&self, name: &str) -> Option<&BigCount> {
        self.quantities.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// Passes iff every listed quantity equals the first one.
    fn all_equal(mut self, start: Instant) -> Self {
        let first = self.quantities[0].clone();
        for (name, value) in &self.quantities[1..] {
            if *value != first.1 {
                self.mismatches.push(format!("{} = {} but {name} = {value}", first.0, first.1));
            }
        }
        self.finish(start)
    }

    fn finish(mut self, start: Instant) -> Self {
        self.passed = self.mismatches.is_empty();
        self.elapsed = start.elapsed();
        self
    }

    fn sort_key(&self) -> (Check, usize, Option<u32>, Option<u32>) {
        (self.check, self.m, self.k, self.max_size)
    }
}

/// Largest inputs each check accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Envelope;

impl Envelope {
    /// Graded route: summand partitions have size up to `2(2m−1)k`.
    pub fn graded(m: usize, k: u32) -> Result<()> {
        if m == 0 || m > 4 || 2 * (2 * m as u64 - 1) * k as u64 > 24 {
            return Err(Error::OutsideEnvelope(format!("graded checks need 1 ≤ m ≤ 4 and 2(2m−1)k ≤ 24, got m={m}, k={k}")));
        }
        Ok(())
    }

    pub fn branching(m: usize, k: u32) -> Result<()> {
        if m > 8 || k > 8 {
            return Err(Error::OutsideEnvelope(format!("branching checks need m ≤ 8 and k ≤ 8, got m={m}, k={k}")));
        }
        Ok(())
    }

    pub fn kt_oracle(m: usize, max_size: u32) -> Result<()> {
        let cap = match m {
            1 | 2 => 12,
            3 => 10,
            _ => return Err(Error::OutsideEnvelope(format!("oracle comparison needs 1 ≤ m ≤ 3, got m={m}"))),
        };
        if max_size > cap {
            return Err(Error::OutsideEnvelope(format!("oracle comparison at m={m} needs |λ| ≤ {cap}, got {max_size}")));
        }
        Ok(())
    }
}

/// Zhu dimension, graded C₂ total and `weyl_dim(C_{2m}, kω_{2m})` must agree.
pub fn verify_conjecture_c(m: usize, k: u32) -> Result<VerificationReport> {
    verify_conjecture_c_with(m, k, Strategy::default())
}

pub fn verify_conjecture_c_with(m: usize, k: u32, strategy: Strategy) -> Result<VerificationReport> {
    let start = Instant::now();
    let cm = RootSystem::new(Family::C, m)?;
    Envelope::graded(m, k)?;
    let mut r = VerificationReport::new(Check::ConjectureC, m);
    r.k = Some(k);
    r.quantity("zhu_dim", zhu_dim(cm, k, strategy));
    r.quantity("c2_graded_total", c2_graded_decomposition(m, k, strategy)?.total_dim());
    r.quantity("c2_weyl", sp_big_dim(m, k)?);
    Ok(r.all_equal(start))
}

/// `Σ dim(λ)·dim(λ')` over the case's index set equals the Weyl dimension of
/// the doubled-rank module.
pub fn verify_branching_dims(case: BranchCase, m: usize, k: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let (pairs, target) = match case {
        BranchCase::Sp => (sp_branching(m, k)?, sp_big_dim(m, k)?),
        BranchCase::SoEven => (so_even_branching(m, k, false)?, so_big_dim(m, k, false)?),
        BranchCase::SoEvenDual => (so_even_branching(m, k, true)?, so_big_dim(m, k, true)?),
    };
    Envelope::branching(m, k)?;
    let mut r = VerificationReport::new(Check::BranchDims(case), m);
    r.k = Some(k);
    r.quantity("branching_total", pairs.total_dim());
    r.quantity("weyl_target", target);
    Ok(r.all_equal(start))
}

/// Compares the boundary-strip restriction with the torus-specialization
/// oracle for every `λ` with `ℓ(λ) ≤ 2m`, `|λ| ≤ max_size`.
pub fn verify_kt_against_oracle(m: usize, max_size: u32) -> Result<VerificationReport> {
    verify_kt_against_oracle_with(m, max_size, Strategy::default())
}

pub fn verify_kt_against_oracle_with(m: usize, max_size: u32, strategy: Strategy) -> Result<VerificationReport> {
    let start = Instant::now();
    RootSystem::new(Family::C, m)?;
    Envelope::kt_oracle(m, max_size)?;
    // restricted weights have level ≤ λ₁ ≤ |λ|
    let limits = OracleLimits::default();
    let oracle = Oracle::new(limits.with_max_level(limits.max_level.max(max_size)));
    let partitions = Partition::all_bounded(2 * m, max_size);
    let checked = partitions.len();
    let outcomes = exec::try_map(strategy, partitions, |p| -> Result<Option<String>> {
        let kt = restrict_gl_to_sp_kt(m, &p);
        let reference = oracle.restrict_gl_to_sp(m, &p);
        Ok(match (kt, reference) {
            (Ok(a), Ok(b)) if a == b => None,
            (Ok(a), Ok(b)) => Some(format!("{p}: rule gives {} but oracle gives {}", show(&a), show(&b))),
            (Err(e @ Error::NegativeMultiplicity { .. }), _) | (_, Err(e @ Error::NegativeMultiplicity { .. })) => {
                Some(format!("{p}: {e}"))
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        })
    })?;
    let mut r = VerificationReport::new(Check::KtOracle, m);
    r.max_size = Some(max_size);
    r.mismatches = outcomes.into_iter().flatten().collect();
    r.quantity("partitions_checked", BigUint::from(checked));
    r.quantity("agreements", BigUint::from(checked - r.mismatches.len()));
    Ok(r.finish(start))
}

fn show(iso: &Isotypic<DominantWeight>) -> String {
    let parts: Vec<String> = iso.iter().map(|(w, c)| format!("{c}·V({w})")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Nonnegativity of the graded decomposition, `A⁰ = ℂ`, `A¹ = V(2ω₁)` for
/// `k ≥ 1`, and degree support inside `[0, 2mk]`.
pub fn verify_positivity_and_laws(m: usize, k: u32) -> Result<VerificationReport> {
    verify_positivity_and_laws_with(m, k, Strategy::default())
}

pub fn verify_positivity_and_laws_with(m: usize, k: u32, strategy: Strategy) -> Result<VerificationReport> {
    let start = Instant::now();
    let cm = RootSystem::new(Family::C, m)?;
    Envelope::graded(m, k)?;
    let mut r = VerificationReport::new(Check::Laws, m);
    r.k = Some(k);
    let graded = match c2_graded_decomposition(m, k, strategy) {
        Ok(g) => g,
        Err(e @ Error::NegativeMultiplicity { .. }) => {
            r.mismatches.push(e.to_string());
            return Ok(r.finish(start));
        }
        Err(e) => return Err(e),
    };
    let max = c2_max_degree(m, k);
    let degree = |j: usize| graded.degrees.get(&j).cloned().unwrap_or_default();

    let a0 = degree(0);
    if a0 != Isotypic::singleton(DominantWeight::zero(cm)) {
        r.mismatches.push(format!("degree 0 is {} instead of V(0)", show(&a0)));
    }
    r.quantity("degree_0_dim", a0.total_dim());
    if k >= 1 {
        let adjoint = DominantWeight::fundamental(cm, 1, 2);
        let a1 = degree(1);
        if a1 != Isotypic::singleton(adjoint.clone()) {
            r.mismatches.push(format!("degree 1 is {} instead of V({adjoint})", show(&a1)));
        }
        r.quantity("degree_1_dim", a1.total_dim());
        r.quantity("adjoint_dim", weyl_dim(&adjoint));
    }
    if let Some((&top, _)) = graded.degrees.iter().rev().find(|(_, iso)| !iso.is_empty()) {
        if top > max {
            r.mismatches.push(format!("component in degree {top} beyond {max}"));
        }
        r.quantity("top_degree", BigUint::from(top));
    }
    r.quantity("max_degree", BigUint::from(max));
    r.quantity("total_dim", graded.total_dim());
    Ok(r.finish(start))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    ConjectureC,
    BranchDims(BranchCase),
    KtOracle,
    Laws,
}

/// Inclusive range, written `a..b` on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusiveRange {
    pub start: u32,
    pub end: u32,
}

impl InclusiveRange {
    pub fn new(start: u32, end: u32) -> Self {
        InclusiveRange { start, end }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<u32>().map_err(|_| format!("bad range `{s}` (expected a..b)"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(InclusiveRange { start, end })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub reports: Vec<VerificationReport>,
    /// Shared quantities that disagree between different checks.
    pub inconsistencies: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.inconsistencies.is_empty() && self.reports.iter().all(|r| r.passed)
    }
}

/// Runs one suite over `m_range × k_range` (`k_range` is ignored by the oracle
/// suite, which uses `max_size`). Every point is checked against the envelope
/// before any work starts.
pub fn run_suite(
    suite: Suite,
    m_range: InclusiveRange,
    k_range: InclusiveRange,
    max_size: u32,
    strategy: Strategy,
) -> Result<SuiteOutcome> {
    let ms: Vec<usize> = m_range.iter().map(|m| m as usize).collect();
    let grid: Vec<(usize, u32)> = ms.iter().flat_map(|&m| k_range.iter().map(move |k| (m, k))).collect();
    for &(m, k) in &grid {
        match suite {
            Suite::ConjectureC | Suite::Laws => {
                RootSystem::new(Family::C, m)?;
                Envelope::graded(m, k)?;
            }
            Suite::BranchDims(case) => {
                let family = if case == BranchCase::Sp { Family::C } else { Family::D };
                RootSystem::new(family, m)?;
                Envelope::branching(m, k)?;
            }
            Suite::KtOracle => {
                RootSystem::new(Family::C, m)?;
                Envelope::kt_oracle(m, max_size)?;
            }
        }
    }

    let mut reports = match suite {
        Suite::ConjectureC => exec::try_map(strategy, grid.clone(), |(m, k)| verify_conjecture_c_with(m, k, strategy))?,
        Suite::BranchDims(case) => exec::try_map(strategy, grid.clone(), |(m, k)| verify_branching_dims(case, m, k))?,
        Suite::Laws => exec::try_map(strategy, grid.clone(), |(m, k)| verify_positivity_and_laws_with(m, k, strategy))?,
        Suite::KtOracle => exec::try_map(strategy, ms, |m| verify_kt_against_oracle_with(m, max_size, strategy))?,
    };
    reports.sort_by_key(|r| r.sort_key());

    let inconsistencies = if suite == Suite::ConjectureC {
        let companions = exec::try_map(strategy, grid, |(m, k)| verify_branching_dims(BranchCase::Sp, m, k))?;
        cross_check(reports.iter().chain(&companions))
    } else {
        Vec::new()
    };
    Ok(SuiteOutcome { reports, inconsistencies })
}

/// Quantities that two checks compute independently for the same `(m, k)`:
/// the Zhu dimension is the sp branching total, and both use the same Weyl target.
const SHARED: [(&str, &str); 2] = [("zhu_dim", "branching_total"), ("c2_weyl", "weyl_target")];

pub fn cross_check<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> Vec<String> {
    let reports: Vec<&VerificationReport> = reports.into_iter().collect();
    let mut out = Vec::new();
    for c in reports.iter().filter(|r| r.check == Check::ConjectureC) {
        let partner = reports
            .iter()
            .find(|r| r.check == Check::BranchDims(BranchCase::Sp) && r.m == c.m && r.k == c.k);
        let Some(b) = partner else { continue };
        for (left, right) in SHARED {
            if let (Some(x), Some(y)) = (c.get(left), b.get(right)) {
                if x != y {
                    out.push(format!("m={} k={:?}: {left} = {x} but {right} = {y}", c.m, c.k));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigCount {
        BigUint::from(v)
    }

    #[test]
    fn conjecture_examples() {
        for (m, k, d) in [(1, 1, 5), (2, 1, 42), (1, 0, 1)] {
            let r = verify_conjecture_c(m, k).unwrap();
            assert!(r.passed, "{r:?}");
            assert!(r.quantities.iter().all(|(_, v)| *v == n(d)));
        }
    }

    #[test]
    fn branching_examples() {
        let r = verify_branching_dims(BranchCase::Sp, 2, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.get("weyl_target"), Some(&n(42)));
        let r = verify_branching_dims(BranchCase::SoEven, 3, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.get("branching_total"), Some(&n(32)));
        assert_eq!(verify_branching_dims(BranchCase::Sp, 1, 2).unwrap().get("branching_total"), Some(&n(14)));
        assert!(verify_branching_dims(BranchCase::SoEvenDual, 3, 2).unwrap().passed);
    }

    #[test]
    fn kt_examples() {
        let r = verify_kt_against_oracle(1, 6).unwrap();
        assert!(r.passed, "{:?}", r.mismatches);
        let r = verify_kt_against_oracle(1, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.get("partitions_checked"), Some(&n(1)));
    }

    #[test]
    fn laws_examples() {
        let r = verify_positivity_and_laws(1, 2).unwrap();
        assert!(r.passed, "{:?}", r.mismatches);
        assert_eq!(r.get("degree_1_dim"), Some(&n(3)));
        let r = verify_positivity_and_laws(2, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.get("degree_1_dim"), Some(&n(10)));
        let r = verify_positivity_and_laws(3, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.get("degree_1_dim"), None);
        assert_eq!(r.get("max_degree"), Some(&n(0)));
    }

    #[test]
    fn envelopes_refuse() {
        assert!(matches!(verify_conjecture_c(5, 1), Err(Error::OutsideEnvelope(_))));
        assert!(matches!(verify_kt_against_oracle(4, 2), Err(Error::OutsideEnvelope(_))));
        assert!(matches!(verify_conjecture_c(0, 1), Err(Error::InvalidRank { .. })));
        let err = run_suite(
            Suite::ConjectureC,
            InclusiveRange::new(1, 1),
            InclusiveRange::new(0, 40),
            0,
            Strategy::Sequential,
        );
        assert!(matches!(err, Err(Error::OutsideEnvelope(_))));
    }

    #[test]
    fn report_json_shape() {
        let r = verify_conjecture_c(2, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"conjecture-c","m":2,"k":1,"quantities":{"zhu_dim":"42","c2_graded_total":"42","c2_weyl":"42"},"passed":true}"#
        );
    }

    #[test]
    fn suite_is_deterministic_and_consistent() {
        let run = |s| {
            run_suite(Suite::ConjectureC, InclusiveRange::new(1, 2), InclusiveRange::new(0, 2), 0, s).unwrap()
        };
        let seq = run(Strategy::Sequential);
        let par = run(Strategy::Parallel);
        assert!(seq.passed());
        assert_eq!(seq.reports.len(), 6);
        let strip = |o: &SuiteOutcome| o.reports.iter().map(|r| (r.m, r.k, r.quantities.clone())).collect::<Vec<_>>();
        assert_eq!(strip(&seq), strip(&par));
    }

    #[test]
    fn cross_check_flags_disagreement() {
        let c = verify_conjecture_c(1, 1).unwrap();
        let mut b = verify_branching_dims(BranchCase::Sp, 1, 1).unwrap();
        assert!(cross_check([&c, &b]).is_empty());
        b.quantities[0].1 = n(6);
        assert_eq!(cross_check([&c, &b]).len(), 1);
    }

    #[test]
    fn ranges_parse() {
        assert_eq!("1..3".parse::<InclusiveRange>().unwrap(), InclusiveRange::new(1, 3));
        assert_eq!("2".parse::<InclusiveRange>().unwrap(), InclusiveRange::new(2, 2));
        assert!("3..1".parse::<InclusiveRange>().is_err());
        assert!("x..1".parse::<InclusiveRange>().is_err());
    }
}
