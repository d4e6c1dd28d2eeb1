mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use zhu_c2::algebra::{
    c2_graded_character, c2_graded_decomposition, so_even_branching, so_quotient_decomposition, sp_branching,
    zhu_decomposition,
};
use zhu_c2::exec::{self, Strategy};
use zhu_c2::folding::{fold_sp, restrict_gl_to_sp_kt, FoldResult};
use zhu_c2::oracle::{Oracle, OracleLimits, TermJson};
use zhu_c2::partition::lr_coefficient;
use zhu_c2::root_system::{weyl_dim, BigCount};
use zhu_c2::verify::{run_suite, BranchCase, InclusiveRange, Suite, SuiteOutcome, VerificationReport};
use zhu_c2::{DominantWeight, Error, Family, Isotypic, Partition, RootSystem, WeightPair};

use render::{coeffs, pair_lines, pair_sum, pairs_json, weight_lines, weight_sum, weights_json, Format, Rendered};

#[derive(Parser)]
#[command(name = "zhuc2", version, about = "Zhu algebra and C₂-algebra decompositions for classical Lie algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zhu algebra A(g; k) as ⊕ V(λ)⊗V(λ*)
    Zhu {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: u32,
    },
    /// Graded Sp(2m) decomposition of the type C C₂-algebra
    C2 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: u32,
        /// Only this degree
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Branching of the doubled-rank module, or the orthogonal quotients
    Branch {
        #[arg(long, value_enum)]
        case: BranchArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: u32,
    },
    /// Fold a partition to at most m rows
    Fold {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Littlewood-Richardson coefficient N^λ_{μν}
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// Restrict the GL(2m) module of a partition to Sp(2m)
    Restrict {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        /// Use the brute-force torus oracle instead of the boundary-strip rule
        #[arg(long)]
        oracle: bool,
    },
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Dump the character of an irreducible module (debugging aid)
    Character {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
        /// Fundamental-weight coefficients, comma separated
        #[arg(long, value_parser = parse_coeffs)]
        weight: Coeffs,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long)]
    m_range: InclusiveRange,
    /// Required except for kt-oracle
    #[arg(long)]
    k_range: Option<InclusiveRange>,
    /// Largest |λ| for kt-oracle
    #[arg(long, default_value_t = 8)]
    max_size: u32,
    /// Branching case for branch-dims
    #[arg(long, value_enum, default_value_t = CaseArg::Sp)]
    case: CaseArg,
    /// Worker threads (1 runs sequentially)
    #[arg(long)]
    parallel: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Sp,
    SoEven,
    SoEvenDual,
    SoQuotient,
    BQuotient,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    ConjectureC,
    BranchDims,
    KtOracle,
    Laws,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    Sp,
    SoEven,
    SoEvenDual,
}

impl From<CaseArg> for BranchCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Sp => BranchCase::Sp,
            CaseArg::SoEven => BranchCase::SoEven,
            CaseArg::SoEvenDual => BranchCase::SoEvenDual,
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| format!("`{x}` is not a nonnegative integer")))
        .collect()
}

#[derive(Clone)]
struct Coeffs(Vec<u32>);

fn parse_coeffs(s: &str) -> Result<Coeffs, String> {
    parse_list(s).map(Coeffs)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_list(s)?).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let f = cli.format;
    match cli.command {
        Command::Zhu { family, rank, level } => zhu(f, family, rank, level),
        Command::C2 { m, k, degree } => c2(f, m, k, degree),
        Command::Branch { case, m, k } => branch(f, case, m, k),
        Command::Fold { m, partition } => fold(f, m, partition),
        Command::Lr { lambda, mu, nu } => lr(f, lambda, mu, nu),
        Command::Restrict { m, partition, oracle } => restrict(f, m, partition, oracle),
        Command::Verify(args) => verify(f, args),
        Command::Character { family, rank, weight } => character(f, family, rank, weight.0),
    }
}

fn pair_rows(iso: &Isotypic<WeightPair>) -> Vec<Vec<String>> {
    use zhu_c2::Dimensioned;
    iso.iter()
        .map(|(p, m)| vec![coeffs(p.left.coeffs()), coeffs(p.right.coeffs()), m.to_string(), p.dim().to_string()])
        .collect()
}

fn weight_rows(prefix: &[String], iso: &Isotypic<DominantWeight>) -> Vec<Vec<String>> {
    iso.iter()
        .map(|(w, m)| {
            let mut row = prefix.to_vec();
            row.extend([coeffs(w.coeffs()), m.to_string(), weyl_dim(w).to_string()]);
            row
        })
        .collect()
}

#[derive(Serialize)]
struct ZhuJson {
    object: &'static str,
    family: Family,
    rank: usize,
    k: u32,
    summands: Vec<render::PairJson>,
    total_dim: String,
}

fn zhu(f: Format, family: Family, rank: usize, k: u32) -> Outcome {
    let rs = RootSystem::new(family, rank)?;
    let iso = zhu_decomposition(rs, k);
    let total = iso.total_dim();
    let table = format!(
        "A({rs}; {k}) ≅ {}\n{}total dim {total}\n",
        pair_sum(&iso),
        pair_lines(&iso)
    );
    Rendered {
        json: ZhuJson { object: "zhu", family, rank, k, summands: pairs_json(&iso), total_dim: total.to_string() },
        table,
        header: vec!["left", "right", "mult", "dim"],
        rows: pair_rows(&iso),
    }
    .emit(f)?;
    Ok(())
}

#[derive(Serialize)]
struct DegreeJson {
    j: usize,
    summands: Vec<render::WeightJson>,
    dim: String,
}

#[derive(Serialize)]
struct C2Json {
    object: &'static str,
    family: Family,
    m: usize,
    k: u32,
    degrees: Vec<DegreeJson>,
    total_dim: String,
    poincare: String,
    palindromic: bool,
}

#[derive(Serialize)]
struct C2ComponentJson {
    object: &'static str,
    family: Family,
    m: usize,
    k: u32,
    j: usize,
    summands: Vec<render::WeightJson>,
    dim: String,
}

fn c2(f: Format, m: usize, k: u32, degree: Option<usize>) -> Outcome {
    let header = vec!["j", "weight", "mult", "dim"];
    if let Some(j) = degree {
        let iso = c2_graded_character(m, k, j)?;
        let dim = iso.total_dim();
        let table = format!("degree {j}: {}\n{}dim {dim}\n", weight_sum(&iso), weight_lines(&iso));
        return Ok(Rendered {
            json: C2ComponentJson {
                object: "c2-component",
                family: Family::C,
                m,
                k,
                j,
                summands: weights_json(&iso),
                dim: dim.to_string(),
            },
            table,
            header,
            rows: weight_rows(&[j.to_string()], &iso),
        }
        .emit(f)?);
    }
    let g = c2_graded_decomposition(m, k, Strategy::default())?;
    let dims = g.dims();
    let mut table = String::new();
    let mut rows = Vec::new();
    let mut degrees = Vec::new();
    for (j, dim) in dims.iter().enumerate() {
        let iso = g.degrees.get(&j).cloned().unwrap_or_default();
        table.push_str(&format!("degree {j} (dim {dim}): {}\n", weight_sum(&iso)));
        rows.extend(weight_rows(&[j.to_string()], &iso));
        degrees.push(DegreeJson { j, summands: weights_json(&iso), dim: dim.to_string() });
    }
    let total = g.total_dim();
    let dims_list: Vec<String> = dims.iter().map(ToString::to_string).collect();
    table.push_str(&format!("dims [{}]\n", dims_list.join(", ")));
    table.push_str(&format!("Poincaré polynomial {}\n", g.poincare_polynomial()));
    table.push_str(&format!("total dim {total}\n"));
    table.push_str(&format!("palindromic (observed, not asserted): {}\n", g.is_palindromic()));
    Rendered {
        json: C2Json {
            object: "c2-graded",
            family: Family::C,
            m,
            k,
            degrees,
            total_dim: total.to_string(),
            poincare: g.poincare_polynomial(),
            palindromic: g.is_palindromic(),
        },
        table,
        header,
        rows,
    }
    .emit(f)?;
    Ok(())
}

#[derive(Serialize)]
struct BranchJson {
    object: &'static str,
    case: &'static str,
    family: Family,
    m: usize,
    k: u32,
    summands: Vec<render::PairJson>,
    total_dim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    target_dim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    zhu_dim: Option<String>,
}

fn branch(f: Format, case: BranchArg, m: usize, k: u32) -> Outcome {
    use zhu_c2::algebra::{so_big_dim, sp_big_dim};
    let (name, family, iso, target, zhu) = match case {
        BranchArg::Sp => ("sp", Family::C, sp_branching(m, k)?, Some(sp_big_dim(m, k)?), None),
        BranchArg::SoEven => ("so-even", Family::D, so_even_branching(m, k, false)?, Some(so_big_dim(m, k, false)?), None),
        BranchArg::SoEvenDual => {
            ("so-even-dual", Family::D, so_even_branching(m, k, true)?, Some(so_big_dim(m, k, true)?), None)
        }
        BranchArg::SoQuotient | BranchArg::BQuotient => {
            let (name, family) =
                if matches!(case, BranchArg::SoQuotient) { ("so-quotient", Family::D) } else { ("b-quotient", Family::B) };
            let rs = RootSystem::new(family, m)?;
            (name, family, so_quotient_decomposition(rs, k)?, None, Some(zhu_decomposition(rs, k).total_dim()))
        }
    };
    let total = iso.total_dim();
    let mut table = format!("{}\n{}total dim {total}\n", pair_sum(&iso), pair_lines(&iso));
    if let Some(t) = &target {
        table.push_str(&format!("doubled-rank module dim {t}\n"));
    }
    if let Some(z) = &zhu {
        table.push_str(&format!("Zhu algebra dim {z}\n"));
    }
    Rendered {
        json: BranchJson {
            object: "branching",
            case: name,
            family,
            m,
            k,
            summands: pairs_json(&iso),
            total_dim: total.to_string(),
            target_dim: target.map(|t| t.to_string()),
            zhu_dim: zhu.map(|z| z.to_string()),
        },
        table,
        header: vec!["left", "right", "mult", "dim"],
        rows: pair_rows(&iso),
    }
    .emit(f)?;
    Ok(())
}

#[derive(Serialize)]
struct FoldJson {
    object: &'static str,
    m: usize,
    partition: Partition,
    #[serde(flatten)]
    result: FoldResult,
}

fn fold(f: Format, m: usize, partition: Partition) -> Outcome {
    if m == 0 {
        return Err(Error::InvalidRank { family: Family::C, min: 1, rank: 0 }.into());
    }
    let result = fold_sp(m, &partition);
    let (table, row) = match &result {
        FoldResult::Zero => ("0\n".to_string(), vec![coeffs(partition.parts()), "0".into(), String::new()]),
        FoldResult::Signed { folded, sign } => (
            format!("sign {sign:+}, folded {folded}\n"),
            vec![coeffs(partition.parts()), sign.to_string(), coeffs(folded.parts())],
        ),
    };
    Rendered {
        json: FoldJson { object: "fold", m, partition, result },
        table,
        header: vec!["partition", "sign", "folded"],
        rows: vec![row],
    }
    .emit(f)?;
    Ok(())
}

#[derive(Serialize)]
struct LrJson {
    object: &'static str,
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    coefficient: u64,
}

fn lr(f: Format, lambda: Partition, mu: Partition, nu: Partition) -> Outcome {
    let c = lr_coefficient(&lambda, &mu, &nu);
    let row = vec![coeffs(lambda.parts()), coeffs(mu.parts()), coeffs(nu.parts()), c.to_string()];
    Rendered {
        json: LrJson { object: "lr", lambda, mu, nu, coefficient: c },
        table: format!("{c}\n"),
        header: vec!["lambda", "mu", "nu", "coefficient"],
        rows: vec![row],
    }
    .emit(f)?;
    Ok(())
}

#[derive(Serialize)]
struct RestrictJson {
    object: &'static str,
    method: &'static str,
    m: usize,
    partition: Partition,
    summands: Vec<render::WeightJson>,
    total_dim: String,
}

fn restrict(f: Format, m: usize, partition: Partition, use_oracle: bool) -> Outcome {
    let (method, iso) = if use_oracle {
        let limits = OracleLimits::default();
        let oracle = Oracle::new(limits.with_max_level(limits.max_level.max(partition.size())));
        ("oracle", oracle.restrict_gl_to_sp(m, &partition)?)
    } else {
        ("boundary-strip", restrict_gl_to_sp_kt(m, &partition)?)
    };
    let total = iso.total_dim();
    Rendered {
        json: RestrictJson {
            object: "restrict",
            method,
            m,
            partition,
            summands: weights_json(&iso),
            total_dim: total.to_string(),
        },
        table: format!("{}\n{}total dim {total}\n", weight_sum(&iso), weight_lines(&iso)),
        header: vec!["weight", "mult", "dim"],
        rows: weight_rows(&[], &iso),
    }
    .emit(f)?;
    Ok(())
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    suite: &'static str,
    reports: &'a [VerificationReport],
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    inconsistencies: &'a [String],
    passed: bool,
}

fn verify(f: Format, args: VerifyArgs) -> Outcome {
    let (suite, name) = match args.suite {
        SuiteArg::ConjectureC => (Suite::ConjectureC, "conjecture-c"),
        SuiteArg::BranchDims => (Suite::BranchDims(args.case.into()), "branch-dims"),
        SuiteArg::KtOracle => (Suite::KtOracle, "kt-oracle"),
        SuiteArg::Laws => (Suite::Laws, "laws"),
    };
    let k_range = match (args.k_range, suite) {
        (Some(r), _) => r,
        (None, Suite::KtOracle) => InclusiveRange::new(0, 0),
        (None, _) => return Err(Failure::Usage(format!("--k-range is required for the {name} suite"))),
    };
    let go = |strategy| run_suite(suite, args.m_range, k_range, args.max_size, strategy);
    let outcome: SuiteOutcome = match args.parallel {
        Some(0) => return Err(Failure::Usage("--parallel needs at least one worker".into())),
        Some(1) => go(Strategy::Sequential)?,
        Some(n) => exec::with_threads(n, || go(Strategy::Parallel))?,
        None => go(Strategy::default())?,
    };

    let mut table = String::new();
    let mut rows = Vec::new();
    for r in &outcome.reports {
        let mut label = format!("{:<13}", r.check.id());
        if let Some(c) = r.case {
            label.push_str(&format!(" {c:<12}"));
        }
        label.push_str(&format!(" m={}", r.m));
        if let Some(k) = r.k {
            label.push_str(&format!(" k={k}"));
        }
        if let Some(s) = r.max_size {
            label.push_str(&format!(" |λ|≤{s}"));
        }
        let quantities: Vec<String> = r.quantities.iter().map(|(n, v)| format!("{n}={v}")).collect();
        table.push_str(&format!(
            "{} {label}  {}  ({:.1?})\n",
            if r.passed { "PASS" } else { "FAIL" },
            quantities.join(" "),
            r.elapsed
        ));
        for m in &r.mismatches {
            table.push_str(&format!("     {m}\n"));
        }
        for (n, v) in &r.quantities {
            rows.push(report_row(r, n, v));
        }
    }
    for i in &outcome.inconsistencies {
        table.push_str(&format!("INCONSISTENT {i}\n"));
    }
    let passed = outcome.passed();
    let failed = outcome.reports.iter().filter(|r| !r.passed).count();
    table.push_str(&format!("{} reports, {failed} failed\n", outcome.reports.len()));
    Rendered {
        json: SuiteJson { suite: name, reports: &outcome.reports, inconsistencies: &outcome.inconsistencies, passed },
        table,
        header: vec!["check", "case", "m", "k", "max_size", "quantity", "value", "passed"],
        rows,
    }
    .emit(f)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn report_row(r: &VerificationReport, name: &str, value: &BigCount) -> Vec<String> {
    let opt = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_default();
    vec![
        r.check.id().to_string(),
        r.case.map(|c| c.to_string()).unwrap_or_default(),
        r.m.to_string(),
        opt(r.k),
        opt(r.max_size),
        name.to_string(),
        value.to_string(),
        r.passed.to_string(),
    ]
}

#[derive(Serialize)]
struct CharacterJson {
    object: &'static str,
    weight: DominantWeight,
    dim: String,
    scale: i32,
    terms: Vec<TermJson>,
}

fn character(f: Format, family: Family, rank: usize, weight: Vec<u32>) -> Outcome {
    let rs = RootSystem::new(family, rank)?;
    let w = DominantWeight::new(rs, weight)?;
    let chr = Oracle::default().irreducible_character(&w)?;
    let terms = chr.to_json_terms();
    let rows = terms
        .iter()
        .map(|t| {
            vec![t.exponents.iter().map(i32::to_string).collect::<Vec<_>>().join(","), t.coeff.to_string()]
        })
        .collect();
    let table = format!("char V({w}) on the {rs} torus:\n{chr}\n");
    Rendered {
        json: CharacterJson { object: "character", dim: weyl_dim(&w).to_string(), weight: w, scale: chr.scale(), terms },
        table,
        header: vec!["exponents", "coeff"],
        rows,
    }
    .emit(f)?;
    Ok(())
}
