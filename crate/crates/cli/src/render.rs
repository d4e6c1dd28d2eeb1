//! Table / JSON / CSV rendering. JSON key order is fixed by struct field order.

use std::io::{self, Write};

use clap::ValueEnum;
use num_bigint::BigUint;
use serde::Serialize;
use zhu_c2::isotypic::Isotypic;
use zhu_c2::{Dimensioned, DominantWeight, WeightPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// One computed result in all three shapes.
pub struct Rendered<J: Serialize> {
    pub json: J,
    pub table: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl<J: Serialize> Rendered<J> {
    pub fn emit(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Table => out.write_all(self.table.as_bytes()),
            Format::Json => {
                serde_json::to_writer(&mut out, &self.json)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
        }
    }
}

#[derive(Serialize)]
pub struct PairJson {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub mult: u64,
    pub dim: String,
}

#[derive(Serialize)]
pub struct WeightJson {
    pub weight: Vec<u32>,
    pub mult: u64,
    pub dim: String,
}

pub fn pairs_json(iso: &Isotypic<WeightPair>) -> Vec<PairJson> {
    iso.iter()
        .map(|(p, mult)| PairJson {
            left: p.left.coeffs().to_vec(),
            right: p.right.coeffs().to_vec(),
            mult,
            dim: p.dim().to_string(),
        })
        .collect()
}

pub fn weights_json(iso: &Isotypic<DominantWeight>) -> Vec<WeightJson> {
    iso.iter()
        .map(|(w, mult)| WeightJson { weight: w.coeffs().to_vec(), mult, dim: w.dim().to_string() })
        .collect()
}

pub fn coeffs(w: &[u32]) -> String {
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn with_mult(mult: u64, body: String) -> String {
    if mult == 1 {
        body
    } else {
        format!("{mult}·{body}")
    }
}

pub fn module(w: &DominantWeight) -> String {
    if w.is_zero() {
        "ℂ".into()
    } else {
        format!("V({w})")
    }
}

pub fn pair_module(p: &WeightPair) -> String {
    if p.left.is_zero() && p.right.is_zero() {
        "ℂ".into()
    } else {
        format!("V({})⊗V({})", p.left, p.right)
    }
}

/// `ℂ ⊕ V(ω₁)⊗V(ω₁)`
pub fn pair_sum(iso: &Isotypic<WeightPair>) -> String {
    join_sum(iso.iter().map(|(p, m)| with_mult(m, pair_module(p))))
}

pub fn weight_sum(iso: &Isotypic<DominantWeight>) -> String {
    join_sum(iso.iter().map(|(w, m)| with_mult(m, module(w))))
}

fn join_sum(parts: impl Iterator<Item = String>) -> String {
    let parts: Vec<String> = parts.collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

/// Two-column listing of summands and their dimensions.
pub fn summand_lines<'a>(lines: impl Iterator<Item = (String, BigUint)> + 'a) -> String {
    let lines: Vec<(String, BigUint)> = lines.collect();
    let width = lines.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (label, dim) in lines {
        let pad = width - label.chars().count();
        s.push_str(&format!("  {label}{}  dim {dim}\n", " ".repeat(pad)));
    }
    s
}

pub fn pair_lines(iso: &Isotypic<WeightPair>) -> String {
    summand_lines(iso.iter().map(|(p, m)| (with_mult(m, pair_module(p)), p.dim() * m)))
}

pub fn weight_lines(iso: &Isotypic<DominantWeight>) -> String {
    summand_lines(iso.iter().map(|(w, m)| (with_mult(m, module(w)), w.dim() * m)))
}
